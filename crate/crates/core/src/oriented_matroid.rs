//! Rank-3 oriented matroids of vector arrangements.
//!
//! An [`OrientedMatroid`] is stored as its cocircuit set. Covectors are the
//! composition closure of the cocircuits and are only materialised on
//! request. The chirotope (signs of 3×3 determinants) is cached alongside
//! and drives the weak-map test.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::arrangement::{vector_rank, ArrangementError, LabeledArrangement};
use crate::geometry::{int_cross, int_dot, Sign};
use crate::label::Label;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmError {
    #[error("ground sets differ")]
    GroundSetMismatch,
    #[error("sign vectors have different domains ({0} vs {1})")]
    DomainMismatch(usize, usize),
    #[error("arrangement has rank {0}; rank 3 is required unless flagged non-spanning")]
    NotSpanning(usize),
    #[error("invalid sign vector {0:?}")]
    InvalidSignVector(String),
    #[error("ground set is not in the global label order")]
    UnsortedGroundSet,
    #[error("cocircuit set is not closed under negation")]
    NotNegationClosed,
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

/// A function from the ground set to {+, −, 0}, stored in ground-set order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignVector(signs)
    }

    pub fn zero(len: usize) -> Self {
        SignVector(vec![Sign::Zero; len])
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|s| s.is_zero())
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, _)| i)
    }

    pub fn zero_set(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_zero())
            .map(|(i, _)| i)
    }

    /// `self ≤ other`: every non-zero entry of `self` agrees with `other`.
    pub fn conforms_to(&self, other: &SignVector) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(a, b)| a.is_zero() || a == b)
    }

    pub fn compose(&self, other: &SignVector) -> Result<SignVector, OmError> {
        if self.len() != other.len() {
            return Err(OmError::DomainMismatch(self.len(), other.len()));
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &SignVector) -> SignVector {
        SignVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| if a.is_zero() { *b } else { *a })
                .collect(),
        )
    }
}

pub fn compose(x: &SignVector, y: &SignVector) -> Result<SignVector, OmError> {
    x.compose(y)
}

impl Neg for &SignVector {
    type Output = SignVector;

    fn neg(self) -> SignVector {
        SignVector(self.0.iter().map(|s| -*s).collect())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = OmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(Sign::from_char)
            .collect::<Option<Vec<_>>>()
            .map(SignVector)
            .ok_or_else(|| OmError::InvalidSignVector(s.to_string()))
    }
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Signs of all 3-subsets `i < j < k`, stored in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chirotope {
    n: usize,
    signs: Vec<Sign>,
}

impl Chirotope {
    pub fn zero(n: usize) -> Self {
        Chirotope {
            n,
            signs: vec![Sign::Zero; binom(n, 3)],
        }
    }

    pub fn ground_len(&self) -> usize {
        self.n
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.n;
        (binom(n, 3) - binom(n - i, 3)) + (binom(n - i - 1, 2) - binom(n - j, 2)) + (k - j - 1)
    }

    /// Alternating evaluation; any argument order is accepted.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Sign {
        let (sorted, odd) = sort3(i, j, k);
        if sorted[0] == sorted[1] || sorted[1] == sorted[2] {
            return Sign::Zero;
        }
        let s = self.signs[self.index(sorted[0], sorted[1], sorted[2])];
        if odd {
            -s
        } else {
            s
        }
    }

    fn set(&mut self, i: usize, j: usize, k: usize, s: Sign) {
        let idx = self.index(i, j, k);
        self.signs[idx] = s;
    }

    /// Signs in lexicographic triple order.
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
    }

    pub fn negated(&self) -> Chirotope {
        Chirotope {
            n: self.n,
            signs: self.signs.iter().map(|s| -*s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.signs.iter().all(|s| s.is_zero())
    }
}

impl fmt::Display for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

fn sort3(i: usize, j: usize, k: usize) -> ([usize; 3], bool) {
    let mut v = [i, j, k];
    let mut odd = false;
    for (a, b) in [(0, 1), (1, 2), (0, 1)] {
        if v[a] > v[b] {
            v.swap(a, b);
            odd = !odd;
        }
    }
    (v, odd)
}

#[derive(Debug, Clone)]
pub struct OrientedMatroid {
    ground: Vec<Label>,
    cocircuits: BTreeSet<SignVector>,
    chirotope: Chirotope,
    rank: usize,
    loops: Vec<Label>,
}

/// Structural equality: same ground set and same cocircuit set.
impl PartialEq for OrientedMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.cocircuits == other.cocircuits
    }
}

impl Eq for OrientedMatroid {}

#[derive(Serialize)]
struct CanonicalOm {
    ground_set: Vec<String>,
    cocircuits: Vec<String>,
}

impl OrientedMatroid {
    /// The rank-0 oriented matroid: every element a loop, only the zero covector.
    pub fn all_loops(ground: Vec<Label>) -> Self {
        let n = ground.len();
        OrientedMatroid {
            loops: ground.clone(),
            ground,
            cocircuits: BTreeSet::new(),
            chirotope: Chirotope::zero(n),
            rank: 0,
        }
    }

    /// Rebuilds an oriented matroid of rank at most 3 from its cocircuits.
    ///
    /// The chirotope is recovered up to a global sign by basis exchange; the
    /// lexicographically first basis is assigned `+`.
    pub fn from_cocircuits(
        ground: Vec<Label>,
        cocircuits: impl IntoIterator<Item = SignVector>,
    ) -> Result<Self, OmError> {
        let n = ground.len();
        if let Some(w) = ground.windows(2).find(|w| w[0] >= w[1]) {
            return Err(if w[0] == w[1] {
                ArrangementError::DuplicateLabel(w[0]).into()
            } else {
                OmError::UnsortedGroundSet
            });
        }
        let mut set = BTreeSet::new();
        for c in cocircuits {
            if c.len() != n {
                return Err(OmError::DomainMismatch(c.len(), n));
            }
            if c.is_zero() {
                return Err(OmError::InvalidSignVector(c.to_string()));
            }
            set.insert(c);
        }
        if set.iter().any(|c| !set.contains(&-c)) {
            return Err(OmError::NotNegationClosed);
        }
        let mut om = OrientedMatroid {
            ground,
            cocircuits: set,
            chirotope: Chirotope::zero(n),
            rank: 0,
            loops: Vec::new(),
        };
        om.loops = (0..n)
            .filter(|&e| om.cocircuits.iter().all(|c| c.get(e).is_zero()))
            .map(|e| om.ground[e])
            .collect();
        om.rank = om.rank_from_cocircuits();
        if om.rank == 3 {
            om.chirotope = om.chirotope_from_cocircuits();
        }
        Ok(om)
    }

    pub fn ground_set(&self) -> &[Label] {
        &self.ground
    }

    pub fn cocircuits(&self) -> &BTreeSet<SignVector> {
        &self.cocircuits
    }

    pub fn chirotope(&self) -> &Chirotope {
        &self.chirotope
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn loops(&self) -> &[Label] {
        &self.loops
    }

    pub fn index_of(&self, label: Label) -> Option<usize> {
        self.ground.binary_search(&label).ok()
    }

    /// Independence of a small index set, decided from cocircuits alone:
    /// each element must be separated from the others by some cocircuit.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().all(|&e| {
            self.cocircuits
                .iter()
                .any(|c| !c.get(e).is_zero() && set.iter().all(|&f| f == e || c.get(f).is_zero()))
        })
    }

    fn rank_from_cocircuits(&self) -> usize {
        let n = self.ground.len();
        let nonloops: Vec<usize> = (0..n)
            .filter(|&e| !self.loops.contains(&self.ground[e]))
            .collect();
        if nonloops.is_empty() {
            return 0;
        }
        let mut rank = 1;
        for (x, &i) in nonloops.iter().enumerate() {
            for (y, &j) in nonloops.iter().enumerate().skip(x + 1) {
                if !self.is_independent(&[i, j]) {
                    continue;
                }
                rank = 2;
                if nonloops[y + 1..]
                    .iter()
                    .any(|&k| self.is_independent(&[i, j, k]))
                {
                    return 3;
                }
            }
        }
        rank
    }

    /// Cocircuit vanishing on the independent pair `(x, y)`.
    fn hyperplane_cocircuit(&self, x: usize, y: usize) -> Option<&SignVector> {
        self.cocircuits
            .iter()
            .find(|c| c.get(x).is_zero() && c.get(y).is_zero())
    }

    fn chirotope_from_cocircuits(&self) -> Chirotope {
        let n = self.ground.len();
        let mut chi = Chirotope::zero(n);
        let mut seen = vec![false; chi.signs.len()];
        let start = chi
            .triples()
            .find(|&(i, j, k)| self.is_independent(&[i, j, k]));
        let Some((i, j, k)) = start else {
            return chi;
        };
        chi.set(i, j, k, Sign::Pos);
        seen[chi.index(i, j, k)] = true;
        let mut queue = VecDeque::from([(i, j, k)]);
        while let Some(t) = queue.pop_front() {
            for (u, v, w) in [(t.0, t.1, t.2), (t.1, t.2, t.0), (t.0, t.2, t.1)] {
                // χ(u, v, ·) is a signed copy of the cocircuit of span{u, v}.
                let chi_uvw = chi.get(u, v, w);
                let Some(c) = self.hyperplane_cocircuit(u, v) else {
                    continue;
                };
                let cw = c.get(w);
                for f in 0..n {
                    let cf = c.get(f);
                    if cf.is_zero() {
                        continue;
                    }
                    let (sorted, odd) = sort3(u, v, f);
                    let idx = chi.index(sorted[0], sorted[1], sorted[2]);
                    if seen[idx] {
                        continue;
                    }
                    let value = chi_uvw * cw * cf;
                    chi.signs[idx] = if odd { -value } else { value };
                    seen[idx] = true;
                    queue.push_back((sorted[0], sorted[1], sorted[2]));
                }
            }
        }
        chi
    }

    /// Whether `x` is a covector: the conformal cocircuits must cover its support.
    pub fn is_covector(&self, x: &SignVector) -> bool {
        if x.len() != self.ground.len() {
            return false;
        }
        let mut covered = vec![false; x.len()];
        for c in self.cocircuits.iter().filter(|c| c.conforms_to(x)) {
            for e in c.support() {
                covered[e] = true;
            }
        }
        x.support().all(|e| covered[e])
    }

    /// Drops every loop; the remaining elements keep their cocircuit signs.
    pub fn delete_loops(&self) -> OrientedMatroid {
        let keep: Vec<usize> = (0..self.ground.len())
            .filter(|&e| !self.loops.contains(&self.ground[e]))
            .collect();
        let project = |x: &SignVector| SignVector(keep.iter().map(|&e| x.get(e)).collect());
        let mut chirotope = Chirotope::zero(keep.len());
        for (a, b, c) in chirotope.clone().triples() {
            chirotope.set(a, b, c, self.chirotope.get(keep[a], keep[b], keep[c]));
        }
        OrientedMatroid {
            ground: keep.iter().map(|&e| self.ground[e]).collect(),
            cocircuits: self.cocircuits.iter().map(project).collect(),
            chirotope,
            rank: self.rank,
            loops: Vec::new(),
        }
    }

    /// Canonical JSON: `{"ground_set":[...],"cocircuits":[...]}`, cocircuits sorted.
    pub fn canonical_json(&self) -> String {
        let doc = CanonicalOm {
            ground_set: self.ground.iter().map(Label::ascii).collect(),
            cocircuits: self.cocircuits.iter().map(ToString::to_string).collect(),
        };
        serde_json::to_string(&doc).expect("plain strings serialize")
    }

    /// SHA-256 of [`OrientedMatroid::canonical_json`], lowercase hex.
    pub fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_json().as_bytes()))
    }
}

pub fn chirotope_of(arrangement: &LabeledArrangement) -> Chirotope {
    let vectors: Vec<[BigInt; 3]> = arrangement
        .elements()
        .iter()
        .map(|(_, v)| v.cleared())
        .collect();
    chirotope_from_ints(&vectors)
}

fn chirotope_from_ints(vectors: &[[BigInt; 3]]) -> Chirotope {
    let n = vectors.len();
    let mut chi = Chirotope::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let normal = int_cross(&vectors[i], &vectors[j]);
            if normal.iter().all(Zero::is_zero) {
                continue;
            }
            for (k, v) in vectors.iter().enumerate().skip(j + 1) {
                chi.set(i, j, k, Sign::of(&int_dot(v, &normal)));
            }
        }
    }
    chi
}

fn signs_against(vectors: &[[BigInt; 3]], normal: &[BigInt; 3]) -> SignVector {
    SignVector(
        vectors
            .iter()
            .map(|v| Sign::of(&int_dot(v, normal)))
            .collect(),
    )
}

fn cocircuits_from_ints(vectors: &[[BigInt; 3]], rank: usize) -> BTreeSet<SignVector> {
    let n = vectors.len();
    let is_zero = |v: &[BigInt; 3]| v.iter().all(Zero::is_zero);
    let mut out = BTreeSet::new();
    let push = |x: SignVector, out: &mut BTreeSet<SignVector>| {
        out.insert(-&x);
        out.insert(x);
    };
    match rank {
        3 => {
            // Each hyperplane is found once, from its first spanning pair.
            let mut covered = vec![false; n * n];
            for i in 0..n {
                for j in i + 1..n {
                    if covered[i * n + j] {
                        continue;
                    }
                    let normal = int_cross(&vectors[i], &vectors[j]);
                    if is_zero(&normal) {
                        continue;
                    }
                    let x = signs_against(vectors, &normal);
                    let zeros: Vec<usize> = x.zero_set().collect();
                    for &p in &zeros {
                        for &q in &zeros {
                            covered[p * n + q] = true;
                        }
                    }
                    push(x, &mut out);
                }
            }
        }
        2 => {
            let first = vectors.iter().position(|v| !is_zero(v)).expect("rank 2");
            let plane_normal = vectors
                .iter()
                .map(|v| int_cross(&vectors[first], v))
                .find(|c| !is_zero(c))
                .expect("rank 2");
            for v in vectors.iter().filter(|v| !is_zero(v)) {
                let normal = int_cross(v, &plane_normal);
                push(signs_against(vectors, &normal), &mut out);
            }
        }
        1 => {
            let normal = vectors
                .iter()
                .find(|v| !is_zero(v))
                .expect("rank 1")
                .clone();
            push(signs_against(vectors, &normal), &mut out);
        }
        _ => {}
    }
    out
}

fn checked_ints(arrangement: &LabeledArrangement) -> Result<(Vec<[BigInt; 3]>, usize), OmError> {
    let vectors: Vec<[BigInt; 3]> = arrangement
        .elements()
        .iter()
        .map(|(_, v)| v.cleared())
        .collect();
    let rank = vector_rank(&vectors);
    if rank < 3 && !arrangement.allows_non_spanning() {
        return Err(OmError::NotSpanning(rank));
    }
    Ok((vectors, rank))
}

/// Cocircuits of the arrangement: for each hyperplane spanned by the vectors,
/// the sign of every element against its normal, with both orientations.
pub fn cocircuits_of(arrangement: &LabeledArrangement) -> Result<BTreeSet<SignVector>, OmError> {
    let (vectors, rank) = checked_ints(arrangement)?;
    Ok(cocircuits_from_ints(&vectors, rank))
}

/// The oriented matroid of an arrangement.
pub fn m_of(arrangement: &LabeledArrangement) -> Result<OrientedMatroid, OmError> {
    let (vectors, rank) = checked_ints(arrangement)?;
    let loops = arrangement
        .elements()
        .iter()
        .filter(|(_, v)| v.is_zero())
        .map(|(l, _)| *l)
        .collect();
    Ok(OrientedMatroid {
        ground: arrangement.labels(),
        cocircuits: cocircuits_from_ints(&vectors, rank),
        chirotope: chirotope_from_ints(&vectors),
        rank,
        loops,
    })
}

/// All covectors: the zero vector plus every composition of cocircuits.
pub fn covectors_of(om: &OrientedMatroid) -> BTreeSet<SignVector> {
    let zero = SignVector::zero(om.ground.len());
    let mut seen = BTreeSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for c in &om.cocircuits {
            let y = x.compose_unchecked(c);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn om_equal(m1: &OrientedMatroid, m2: &OrientedMatroid) -> Result<bool, OmError> {
    if m1.ground != m2.ground {
        return Err(OmError::GroundSetMismatch);
    }
    Ok(m1.cocircuits == m2.cocircuits)
}

/// Strong map `source → target`: every covector of `target` is a covector of
/// `source`. Covectors are closed under composition, so checking the
/// cocircuits of `target` suffices.
pub fn strong_map(source: &OrientedMatroid, target: &OrientedMatroid) -> Result<bool, OmError> {
    if source.ground != target.ground {
        return Err(OmError::GroundSetMismatch);
    }
    Ok(target.cocircuits.iter().all(|c| source.is_covector(c)))
}

/// Rank-preserving weak map on chirotopes: for some global sign ε, every
/// 3-subset has `χ_target = 0` or `χ_target = ε·χ_source`.
pub fn weak_map(source: &OrientedMatroid, target: &OrientedMatroid) -> Result<bool, OmError> {
    if source.ground != target.ground {
        return Err(OmError::GroundSetMismatch);
    }
    let (s, t) = (source.chirotope.signs(), target.chirotope.signs());
    Ok([Sign::Pos, Sign::Neg].into_iter().any(|eps| {
        s.iter()
            .zip(t)
            .all(|(cs, ct)| ct.is_zero() || *ct == eps * *cs)
    }))
}

/// Rank-3 truncation of a matroid: all independent sets of size at most 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    ground: Vec<Label>,
    independent: BTreeSet<Vec<usize>>,
}

impl Matroid {
    pub fn ground_set(&self) -> &[Label] {
        &self.ground
    }

    pub fn independent_sets(&self) -> &BTreeSet<Vec<usize>> {
        &self.independent
    }

    /// `set` must be sorted.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.independent.contains(set)
    }

    pub fn rank(&self) -> usize {
        self.independent.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn rank_of(&self, set: &[usize]) -> usize {
        self.independent
            .iter()
            .filter(|i| i.iter().all(|e| set.contains(e)))
            .map(Vec::len)
            .max()
            .unwrap_or(0)
    }
}

/// Forgets orientation. Triples come from the chirotope; smaller sets from
/// cocircuit separation (which also covers rank-deficient matroids).
pub fn underlying_matroid(om: &OrientedMatroid) -> Matroid {
    let n = om.ground.len();
    let mut independent = BTreeSet::from([Vec::new()]);
    let nonloop: Vec<bool> = (0..n).map(|e| om.is_independent(&[e])).collect();
    for i in (0..n).filter(|&i| nonloop[i]) {
        independent.insert(vec![i]);
        for j in (i + 1..n).filter(|&j| nonloop[j]) {
            if om.is_independent(&[i, j]) {
                independent.insert(vec![i, j]);
            }
        }
    }
    for (i, j, k) in om.chirotope.triples() {
        if !om.chirotope.get(i, j, k).is_zero() {
            independent.insert(vec![i, j, k]);
        }
    }
    Matroid {
        ground: om.ground.clone(),
        independent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{PlanePoint, Vector3};

    fn basis() -> LabeledArrangement {
        LabeledArrangement::indexed([
            Vector3::from_ints(1, 0, 0),
            Vector3::from_ints(0, 1, 0),
            Vector3::from_ints(0, 0, 1),
        ])
    }

    fn planar() -> LabeledArrangement {
        LabeledArrangement::indexed([
            Vector3::from_ints(1, 0, 0),
            Vector3::from_ints(0, 1, 0),
            Vector3::from_ints(1, 1, 0),
        ])
        .non_spanning()
    }

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    #[test]
    fn chirotope_examples() {
        assert_eq!(chirotope_of(&basis()).to_string(), "+");
        assert_eq!(chirotope_of(&planar()).to_string(), "0");
        let tri = LabeledArrangement::from_affine([
            (Label::Index(1), PlanePoint::from_ints(0, 0)),
            (Label::Index(2), PlanePoint::from_ints(1, 0)),
            (Label::Index(3), PlanePoint::from_ints(0, 1)),
        ])
        .unwrap();
        assert_eq!(chirotope_of(&tri).to_string(), "+");
    }

    #[test]
    fn chirotope_indexing_is_lexicographic() {
        let chi = Chirotope::zero(6);
        let order: Vec<usize> = chi.triples().map(|(i, j, k)| chi.index(i, j, k)).collect();
        assert_eq!(order, (0..20).collect::<Vec<_>>());
    }

    #[test]
    fn cocircuit_examples() {
        let four = LabeledArrangement::indexed([
            Vector3::from_ints(1, 0, 0),
            Vector3::from_ints(0, 1, 0),
            Vector3::from_ints(0, 0, 1),
            Vector3::from_ints(1, 1, 1),
        ]);
        let cc = cocircuits_of(&four).unwrap();
        assert!(cc.contains(&sv("00++")));
        assert!(cc.contains(&sv("00--")));

        let cc = cocircuits_of(&basis()).unwrap();
        let expected: BTreeSet<_> = ["00+", "00-", "0+0", "0-0", "+00", "-00"]
            .into_iter()
            .map(sv)
            .collect();
        assert_eq!(cc, expected);
    }

    #[test]
    fn rank_deficient_needs_flag() {
        let unflagged =
            LabeledArrangement::indexed([Vector3::from_ints(1, 0, 0), Vector3::from_ints(0, 1, 0)]);
        assert_eq!(m_of(&unflagged).unwrap_err(), OmError::NotSpanning(2));
        assert_eq!(m_of(&planar()).unwrap().rank(), 2);
    }

    #[test]
    fn basis_covectors_are_everything() {
        let om = m_of(&basis()).unwrap();
        assert_eq!(om.cocircuits().len(), 6);
        assert_eq!(covectors_of(&om).len(), 27);
    }

    #[test]
    fn planar_covectors() {
        // functionals on (e1, e2, e1+e2): the third sign is forced when the
        // first two agree
        let om = m_of(&planar()).unwrap();
        let cov = covectors_of(&om);
        assert!(cov.contains(&sv("+++")));
        assert!(cov.contains(&sv("+-+")));
        assert!(cov.contains(&sv("+-0")));
        assert!(!cov.contains(&sv("++-")));
        assert!(!cov.contains(&sv("++0")));
        assert_eq!(cov.len(), 13);
    }

    #[test]
    fn loops_are_zero_everywhere() {
        let arr = LabeledArrangement::indexed([
            Vector3::from_ints(1, 0, 0),
            Vector3::zero(),
            Vector3::from_ints(0, 1, 0),
            Vector3::from_ints(0, 0, 1),
        ]);
        let om = m_of(&arr).unwrap();
        assert_eq!(om.loops(), &[Label::Index(2)]);
        assert!(covectors_of(&om).iter().all(|x| x.get(1).is_zero()));
        let mat = underlying_matroid(&om);
        assert!(mat.independent_sets().iter().all(|s| !s.contains(&1)));
    }

    #[test]
    fn equality_and_mismatch() {
        let b = m_of(&basis()).unwrap();
        assert!(om_equal(&b, &b).unwrap());
        let p = m_of(&planar()).unwrap();
        assert!(!om_equal(&b, &p).unwrap());
        let other = m_of(
            &LabeledArrangement::new([
                (Label::Alpha, Vector3::from_ints(1, 0, 0)),
                (Label::Beta, Vector3::from_ints(0, 1, 0)),
                (Label::Gamma, Vector3::from_ints(0, 0, 1)),
            ])
            .unwrap(),
        )
        .unwrap();
        assert_eq!(
            om_equal(&b, &other).unwrap_err(),
            OmError::GroundSetMismatch
        );
    }

    #[test]
    fn underlying_matroid_examples() {
        let u33 = underlying_matroid(&m_of(&basis()).unwrap());
        assert_eq!(u33.independent_sets().len(), 8);
        assert_eq!(u33.rank(), 3);
        let p = underlying_matroid(&m_of(&planar()).unwrap());
        assert!(!p.is_independent(&[0, 1, 2]));
        assert!(p.is_independent(&[0, 2]));
        assert_eq!(p.rank(), 2);
    }

    #[test]
    fn strong_map_examples() {
        let b = m_of(&basis()).unwrap();
        assert!(strong_map(&b, &b).unwrap());
        let rank0 = OrientedMatroid::all_loops(b.ground_set().to_vec());
        assert!(strong_map(&b, &rank0).unwrap());
        let p = m_of(&planar()).unwrap();
        assert!(!strong_map(&p, &b).unwrap());
        // (+,+,−) is a basis covector that no functional realises on the plane
        assert!(covectors_of(&b).contains(&sv("++-")));
        assert!(!covectors_of(&p).contains(&sv("++-")));
    }

    #[test]
    fn weak_map_examples() {
        let b = m_of(&basis()).unwrap();
        assert!(weak_map(&b, &b).unwrap());
        let p = m_of(&planar()).unwrap();
        assert!(weak_map(&b, &p).unwrap());
        let flipped = m_of(&LabeledArrangement::indexed([
            Vector3::from_ints(0, 1, 0),
            Vector3::from_ints(1, 0, 0),
            Vector3::from_ints(0, 0, 1),
        ]))
        .unwrap();
        // a global sign flip is allowed
        assert!(weak_map(&b, &flipped).unwrap());
    }

    #[test]
    fn compose_examples() {
        assert_eq!(sv("+00").compose(&sv("0-0")).unwrap(), sv("+-0"));
        let x = sv("+-0+");
        assert_eq!(x.compose(&x).unwrap(), x);
        assert_eq!(SignVector::zero(4).compose(&x).unwrap(), x);
        assert_eq!(
            x.compose(&sv("+")).unwrap_err(),
            OmError::DomainMismatch(4, 1)
        );
    }

    #[test]
    fn rebuild_from_cocircuits() {
        let arr = LabeledArrangement::indexed([
            Vector3::from_ints(1, 0, 0),
            Vector3::from_ints(0, 1, 0),
            Vector3::from_ints(0, 0, 1),
            Vector3::from_ints(1, 1, 1),
            Vector3::from_ints(2, -1, 3),
            Vector3::zero(),
        ]);
        let om = m_of(&arr).unwrap();
        let rebuilt =
            OrientedMatroid::from_cocircuits(om.ground_set().to_vec(), om.cocircuits().clone())
                .unwrap();
        assert_eq!(rebuilt, om);
        assert_eq!(rebuilt.rank(), 3);
        assert_eq!(rebuilt.loops(), om.loops());
        assert_eq!(rebuilt.chirotope(), om.chirotope());
    }

    #[test]
    fn rebuild_rejects_unclosed_sets() {
        let err =
            OrientedMatroid::from_cocircuits(vec![Label::Index(1), Label::Index(2)], [sv("+0")])
                .unwrap_err();
        assert_eq!(err, OmError::NotNegationClosed);
    }

    #[test]
    fn fingerprint_is_of_canonical_json() {
        let om = m_of(&basis()).unwrap();
        assert_eq!(
            om.canonical_json(),
            r#"{"ground_set":["1","2","3"],"cocircuits":["+00","-00","0+0","0-0","00+","00-"]}"#
        );
        assert_eq!(om.fingerprint().len(), 64);
    }

    #[test]
    fn loop_deletion() {
        let arr = LabeledArrangement::indexed([
            Vector3::from_ints(1, 0, 0),
            Vector3::zero(),
            Vector3::from_ints(0, 1, 0),
            Vector3::from_ints(0, 0, 1),
        ]);
        let deleted = m_of(&arr).unwrap().delete_loops();
        let direct =
            m_of(&arr.restrict(&[Label::Index(1), Label::Index(3), Label::Index(4)])).unwrap();
        assert_eq!(deleted, direct);
        assert_eq!(deleted.chirotope(), direct.chirotope());
    }
}
