//! The nested configurations `A₀ ⊂ A₁ ⊂ ⋯` and their degenerations.
//!
//! Level `n` adds three points to level `n − 1`:
//!
//! 1. `dₙ = ωγ ∩ αbₙ`
//! 2. `bₙ₊₁ = ωβ ∩ a dₙ`
//! 3. `cₙ = αβ ∩ a bₙ₊₁`
//!
//! Relabeling `cᵢ` as `δ` in `Aᵢ` gives the arrangement whose oriented
//! matroid is `Mᵢ`.

use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::arrangement::LabeledArrangement;
use crate::geometry::{
    collinear, cross_ratio, line_intersect, line_through, rat, strictly_between, GeometryError,
    PlanePoint, Rational, Vector3,
};
use crate::label::Label;

/// Labels that stay at height 1 along a degeneration and survive in the limit.
pub const SPECIAL_LABELS: [Label; 8] = [
    Label::Alpha,
    Label::Beta,
    Label::Gamma,
    Label::Omega,
    Label::Nu,
    Label::A,
    Label::Delta,
    Label::B(1),
];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seed {
    pub alpha: PlanePoint,
    pub beta: PlanePoint,
    pub gamma: PlanePoint,
    pub omega: PlanePoint,
    pub nu: PlanePoint,
    pub a: PlanePoint,
    pub b1: PlanePoint,
}

impl Seed {
    pub fn points(&self) -> [(Label, &PlanePoint); 7] {
        [
            (Label::Alpha, &self.alpha),
            (Label::Beta, &self.beta),
            (Label::Gamma, &self.gamma),
            (Label::Omega, &self.omega),
            (Label::Nu, &self.nu),
            (Label::A, &self.a),
            (Label::B(1), &self.b1),
        ]
    }
}

pub fn default_seed() -> Seed {
    Seed {
        alpha: PlanePoint::from_ints(0, 0),
        beta: PlanePoint::from_ints(6, 0),
        gamma: PlanePoint::from_ints(4, 0),
        omega: PlanePoint::from_ints(3, 5),
        nu: PlanePoint::from_ints(-2, 1),
        a: PlanePoint::from_ints(1, -2),
        b1: PlanePoint::new(rat(9, 2), rat(5, 2)),
    }
}

/// First seed constraint that fails. Rationality of the coordinates holds by
/// construction of [`PlanePoint`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedViolation {
    #[error("S1: γ must lie strictly between α and β on one line")]
    GammaNotBetween,
    #[error("S2: ω lies on line αβ")]
    OmegaOnBase,
    #[error("S3: a lies on line αβ")]
    AOnBase,
    #[error("S3: a coincides with ω")]
    AEqualsOmega,
    #[error("S3: a lies on line ωβ")]
    AOnOmegaBeta,
    #[error("S3: a lies on line ωγ")]
    AOnOmegaGamma,
    #[error("S4: b1 is not on the open segment ωβ")]
    B1NotBetween,
    #[error("S5: ν lies on the line through {0} and {1}")]
    NuNotGeneric(Label, Label),
}

pub fn validate_seed(seed: &Seed) -> Result<(), SeedViolation> {
    let Seed {
        alpha,
        beta,
        gamma,
        omega,
        nu,
        a,
        b1,
    } = seed;
    if !strictly_between(alpha, gamma, beta) {
        return Err(SeedViolation::GammaNotBetween);
    }
    if collinear(alpha, beta, omega) {
        return Err(SeedViolation::OmegaOnBase);
    }
    if collinear(alpha, beta, a) {
        return Err(SeedViolation::AOnBase);
    }
    if a == omega {
        return Err(SeedViolation::AEqualsOmega);
    }
    if collinear(omega, beta, a) {
        return Err(SeedViolation::AOnOmegaBeta);
    }
    if collinear(omega, gamma, a) {
        return Err(SeedViolation::AOnOmegaGamma);
    }
    if !strictly_between(omega, b1, beta) {
        return Err(SeedViolation::B1NotBetween);
    }
    let others = [
        (Label::Alpha, alpha),
        (Label::Beta, beta),
        (Label::Gamma, gamma),
        (Label::Omega, omega),
        (Label::A, a),
        (Label::B(1), b1),
    ];
    for (i, (lp, p)) in others.iter().enumerate() {
        for (lq, q) in &others[i + 1..] {
            if collinear(p, q, nu) {
                return Err(SeedViolation::NuNotGeneric(*lp, *lq));
            }
        }
    }
    Ok(())
}

/// Which of the three points of a level failed to be constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepPoint {
    D,
    B,
    C,
}

impl fmt::Display for StepPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StepPoint::D => "d_n = ωγ ∩ αb_n",
            StepPoint::B => "b_{n+1} = ωβ ∩ a d_n",
            StepPoint::C => "c_n = αβ ∩ a b_{n+1}",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegeneracyReason {
    Geometry(GeometryError),
    /// The new point coincides with an existing one.
    Coincides(Label),
}

impl fmt::Display for DegeneracyReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegeneracyReason::Geometry(e) => write!(f, "{e}"),
            DegeneracyReason::Coincides(l) => write!(f, "coincides with {l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("seed rejected: {0}")]
    InvalidSeed(#[from] SeedViolation),
    #[error("degenerate step at n = {step}: {point} ({reason})")]
    DegenerateStep {
        step: u32,
        point: StepPoint,
        reason: DegeneracyReason,
    },
    #[error("level {index} is outside 1..={depth}")]
    IndexOutOfRange { index: u32, depth: u32 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// `A_N`: the seed plus `d₁..d_N`, `b₂..b_{N+1}`, `c₁..c_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationFamily {
    seed: Seed,
    b: Vec<PlanePoint>,
    c: Vec<PlanePoint>,
    d: Vec<PlanePoint>,
}

impl ConfigurationFamily {
    pub fn from_seed(seed: Seed) -> Self {
        let b = vec![seed.b1.clone()];
        ConfigurationFamily {
            seed,
            b,
            c: Vec::new(),
            d: Vec::new(),
        }
    }

    pub fn seed(&self) -> &Seed {
        &self.seed
    }

    pub fn depth(&self) -> u32 {
        self.c.len() as u32
    }

    /// `bᵢ`, `i ≥ 1`.
    pub fn b(&self, i: u32) -> Option<&PlanePoint> {
        self.b.get((i as usize).checked_sub(1)?)
    }

    pub fn c(&self, i: u32) -> Option<&PlanePoint> {
        self.c.get((i as usize).checked_sub(1)?)
    }

    pub fn d(&self, i: u32) -> Option<&PlanePoint> {
        self.d.get((i as usize).checked_sub(1)?)
    }

    pub fn point(&self, label: Label) -> Option<&PlanePoint> {
        match label {
            Label::B(i) => self.b(i),
            Label::C(i) => self.c(i),
            Label::D(i) => self.d(i),
            other => self
                .seed
                .points()
                .into_iter()
                .find(|(l, _)| *l == other)
                .map(|(_, p)| p),
        }
    }

    /// All points of `A_level`, sorted by label.
    pub fn points_at(&self, level: u32) -> Vec<(Label, PlanePoint)> {
        let level = level.min(self.depth());
        let mut out: Vec<(Label, PlanePoint)> = self
            .seed
            .points()
            .into_iter()
            .map(|(l, p)| (l, p.clone()))
            .collect();
        for i in 1..=level {
            out.push((Label::B(i + 1), self.b(i + 1).unwrap().clone()));
            out.push((Label::C(i), self.c(i).unwrap().clone()));
            out.push((Label::D(i), self.d(i).unwrap().clone()));
        }
        out.sort_by_key(|x| x.0);
        out
    }

    pub fn points(&self) -> Vec<(Label, PlanePoint)> {
        self.points_at(self.depth())
    }

    /// `A_level` as a family of its own.
    pub fn truncate(&self, level: u32) -> ConfigurationFamily {
        let level = level.min(self.depth()) as usize;
        ConfigurationFamily {
            seed: self.seed.clone(),
            b: self.b[..=level].to_vec(),
            c: self.c[..level].to_vec(),
            d: self.d[..level].to_vec(),
        }
    }

    pub fn arrangement(&self) -> LabeledArrangement {
        LabeledArrangement::from_affine(self.points()).expect("family labels are distinct")
    }

    /// Incidences that define each level, as `(level, label triple)`.
    pub fn incidence_triples(&self) -> Vec<(u32, [Label; 3])> {
        (1..=self.depth())
            .flat_map(|n| {
                [
                    [Label::Omega, Label::Gamma, Label::D(n)],
                    [Label::Alpha, Label::B(n), Label::D(n)],
                    [Label::Omega, Label::Beta, Label::B(n + 1)],
                    [Label::A, Label::D(n), Label::B(n + 1)],
                    [Label::Alpha, Label::Beta, Label::C(n)],
                    [Label::A, Label::B(n + 1), Label::C(n)],
                ]
                .map(|t| (n, t))
            })
            .collect()
    }

    /// First defining incidence that fails, if any.
    pub fn check_incidences(&self) -> Option<(u32, [Label; 3])> {
        self.incidence_triples().into_iter().find(|(_, [p, q, r])| {
            let get = |l: Label| self.point(l).expect("label in family");
            !collinear(get(*p), get(*q), get(*r))
        })
    }

    fn existing_label_of(&self, p: &PlanePoint) -> Option<Label> {
        self.points()
            .into_iter()
            .find(|(_, q)| q == p)
            .map(|(l, _)| l)
    }

    fn meet(
        &self,
        step: u32,
        point: StepPoint,
        first: (&PlanePoint, &PlanePoint),
        second: (&PlanePoint, &PlanePoint),
    ) -> Result<PlanePoint, ConstructionError> {
        let degenerate = |reason| ConstructionError::DegenerateStep {
            step,
            point,
            reason,
        };
        let l1 = line_through(first.0, first.1)
            .map_err(|e| degenerate(DegeneracyReason::Geometry(e)))?;
        let l2 = line_through(second.0, second.1)
            .map_err(|e| degenerate(DegeneracyReason::Geometry(e)))?;
        let p = line_intersect(&l1, &l2).map_err(|e| degenerate(DegeneracyReason::Geometry(e)))?;
        if let Some(existing) = self.existing_label_of(&p) {
            return Err(degenerate(DegeneracyReason::Coincides(existing)));
        }
        Ok(p)
    }
}

/// Adds `d_{N+1}`, `b_{N+2}`, `c_{N+1}`.
pub fn extend(family: &ConfigurationFamily) -> Result<ConfigurationFamily, ConstructionError> {
    let n = family.depth() + 1;
    let s = &family.seed;
    let bn = family.b(n).expect("b_n exists at depth n - 1");
    let mut next = family.clone();

    let dn = family.meet(n, StepPoint::D, (&s.omega, &s.gamma), (&s.alpha, bn))?;
    next.d.push(dn.clone());
    let bn1 = next.meet(n, StepPoint::B, (&s.omega, &s.beta), (&s.a, &dn))?;
    next.b.push(bn1.clone());
    let cn = next.meet(n, StepPoint::C, (&s.alpha, &s.beta), (&s.a, &bn1))?;
    next.c.push(cn);
    Ok(next)
}

pub fn build(seed: &Seed, depth: u32) -> Result<ConfigurationFamily, ConstructionError> {
    validate_seed(seed)?;
    let mut family = ConfigurationFamily::from_seed(seed.clone());
    for _ in 0..depth {
        family = extend(&family)?;
    }
    Ok(family)
}

/// `Aᵢ` with `cᵢ` renamed `δ`, lifted to height 1.
pub fn make_mi(
    family: &ConfigurationFamily,
    i: u32,
) -> Result<LabeledArrangement, ConstructionError> {
    if i == 0 || i > family.depth() {
        return Err(ConstructionError::IndexOutOfRange {
            index: i,
            depth: family.depth(),
        });
    }
    let points = family
        .points_at(i)
        .into_iter()
        .map(|(l, p)| (if l == Label::C(i) { Label::Delta } else { l }, p));
    Ok(LabeledArrangement::from_affine(points).expect("relabeling keeps labels distinct"))
}

/// Keeps the special labels at their vectors and scales every other vector
/// by `1/n`.
pub fn scale_degeneration(arrangement: &LabeledArrangement, n: u64) -> LabeledArrangement {
    assert!(n >= 1, "degeneration index starts at 1");
    let factor = Rational::new(One::one(), n.into());
    arrangement.map_vectors(|label, v| {
        if SPECIAL_LABELS.contains(&label) {
            v.clone()
        } else {
            v.scale(&factor)
        }
    })
}

/// The `n → ∞` limit of [`scale_degeneration`]: non-special labels become loops.
pub fn limit_arrangement(arrangement: &LabeledArrangement) -> LabeledArrangement {
    arrangement.map_vectors(|label, v| {
        if SPECIAL_LABELS.contains(&label) {
            v.clone()
        } else {
            Vector3::zero()
        }
    })
}

/// `cr(i) = cross_ratio(α, cᵢ, γ, β)` for every level.
pub fn cr_ledger(family: &ConfigurationFamily) -> Result<Vec<(u32, Rational)>, GeometryError> {
    let s = &family.seed;
    (1..=family.depth())
        .map(|i| {
            let ci = family.c(i).expect("level exists");
            cross_ratio(&s.alpha, ci, &s.gamma, &s.beta).map(|cr| (i, cr))
        })
        .collect()
}

/// Every label that occurs in some `make_mi(family, i)`, `1 ≤ i ≤ depth`.
pub fn universal_ground_set(family: &ConfigurationFamily) -> Vec<Label> {
    let mut labels: Vec<Label> = family.points().into_iter().map(|(l, _)| l).collect();
    labels.push(Label::Delta);
    labels.sort();
    labels.dedup();
    labels
}
