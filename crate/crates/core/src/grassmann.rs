//! Three-dimensional subspaces of `ℚⁿ` and their oriented matroids.
//!
//! A subspace `V` is given by a basis `B` (three rows). Two routes lead to
//! its oriented matroid:
//!
//! * [`projection_arrangement`] projects each coordinate vector `eᵢ`
//!   orthogonally onto `V` and records coordinates in the basis, solving the
//!   Gram system `G·cᵢ = B·eᵢ`.
//! * [`mu_of`] reads covectors `i ↦ sign⟨v, eᵢ⟩` directly: with `v = cᵀB`
//!   the sign is that of `c·B[:, i]`, so the columns of `B` realise it.
//!
//! The two routes differ by the invertible map `G⁻¹`, so they must agree.

use num_traits::Zero;
use thiserror::Error;

use crate::arrangement::LabeledArrangement;
use crate::geometry::{Rational, Vector3};
use crate::label::Label;
use crate::linalg;
use crate::oriented_matroid::{m_of, om_equal, underlying_matroid, OmError, OrientedMatroid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrassmannError {
    #[error("basis has rank {0}, expected 3")]
    RankDeficient(usize),
    #[error("vector family has rank {rank} in dimension {ambient}")]
    NotSpanning { rank: usize, ambient: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("label {0} appears more than once")]
    DuplicateLabel(Label),
    #[error(transparent)]
    Om(#[from] OmError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: [Vec<Rational>; 3],
}

impl Subspace {
    pub fn new(basis: [Vec<Rational>; 3]) -> Result<Self, GrassmannError> {
        let ambient = basis[0].len();
        if let Some(row) = basis.iter().find(|r| r.len() != ambient) {
            return Err(GrassmannError::DimensionMismatch {
                expected: ambient,
                found: row.len(),
            });
        }
        let r = linalg::rank(&basis);
        if r != 3 {
            return Err(GrassmannError::RankDeficient(r));
        }
        Ok(Subspace { ambient, basis })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>; 3] {
        &self.basis
    }

    /// Same subspace, basis replaced by `change · basis`.
    pub fn rebased(&self, change: &[[Rational; 3]; 3]) -> Result<Self, GrassmannError> {
        let rows = change.clone().map(|coeffs| {
            (0..self.ambient)
                .map(|c| {
                    coeffs
                        .iter()
                        .zip(&self.basis)
                        .map(|(k, row)| k * &row[c])
                        .sum()
                })
                .collect()
        });
        Subspace::new(rows)
    }

    fn column(&self, i: usize) -> [Rational; 3] {
        [
            self.basis[0][i].clone(),
            self.basis[1][i].clone(),
            self.basis[2][i].clone(),
        ]
    }

    fn gram(&self) -> [[Rational; 3]; 3] {
        std::array::from_fn(|r| {
            std::array::from_fn(|c| linalg::dot(&self.basis[r], &self.basis[c]))
        })
    }

    /// `B·w` for `w ∈ ℚⁿ`.
    fn apply(&self, w: &[Rational]) -> Vector3 {
        let [x, y, z] = [0, 1, 2].map(|r| linalg::dot(&self.basis[r], w));
        Vector3::new(x, y, z)
    }
}

/// Labeled vectors in `ℚⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorFamily {
    elements: Vec<(Label, Vec<Rational>)>,
}

impl VectorFamily {
    pub fn new(
        elements: impl IntoIterator<Item = (Label, Vec<Rational>)>,
    ) -> Result<Self, GrassmannError> {
        let mut elements: Vec<_> = elements.into_iter().collect();
        elements.sort_by_key(|a| a.0);
        if let Some(w) = elements.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(GrassmannError::DuplicateLabel(w[0].0));
        }
        if let Some(first) = elements.first() {
            let dim = first.1.len();
            if let Some(e) = elements.iter().find(|e| e.1.len() != dim) {
                return Err(GrassmannError::DimensionMismatch {
                    expected: dim,
                    found: e.1.len(),
                });
            }
        }
        Ok(VectorFamily { elements })
    }

    /// The coordinate vectors `e₁, …, eₙ` labeled `1..=n`.
    pub fn standard(n: usize) -> Self {
        VectorFamily {
            elements: (0..n)
                .map(|i| {
                    let v = (0..n)
                        .map(|j| Rational::from_integer((i == j).into()))
                        .collect();
                    (Label::Index(i as u32 + 1), v)
                })
                .collect(),
        }
    }

    pub fn elements(&self) -> &[(Label, Vec<Rational>)] {
        &self.elements
    }

    pub fn dimension(&self) -> Option<usize> {
        self.elements.first().map(|e| e.1.len())
    }
}

fn coordinate_labels(n: usize) -> impl Iterator<Item = Label> {
    (1..=n as u32).map(Label::Index)
}

/// Coordinates of the orthogonal projections `π_V(eᵢ)` in the stored basis.
pub fn projection_arrangement(v: &Subspace) -> Result<LabeledArrangement, GrassmannError> {
    let gram = v.gram();
    let mut elements = Vec::with_capacity(v.ambient);
    for (i, label) in coordinate_labels(v.ambient).enumerate() {
        let [x, y, z] = linalg::solve3(&gram, &v.column(i))
            .ok_or(GrassmannError::RankDeficient(linalg::rank(&v.basis)))?;
        elements.push((label, Vector3::new(x, y, z)));
    }
    Ok(LabeledArrangement::new(elements).expect("coordinate labels are distinct"))
}

/// Oriented matroid on `1..=n` with covectors `i ↦ sign⟨v, eᵢ⟩`, `v ∈ V`.
pub fn mu_of(v: &Subspace) -> Result<OrientedMatroid, GrassmannError> {
    let elements = coordinate_labels(v.ambient).enumerate().map(|(i, label)| {
        let [x, y, z] = v.column(i);
        (label, Vector3::new(x, y, z))
    });
    let arrangement = LabeledArrangement::new(elements).expect("coordinate labels are distinct");
    Ok(m_of(&arrangement)?)
}

/// Generalized stratum map: covectors `i ↦ sign⟨v, vᵢ⟩` for `v ∈ V`.
pub fn mu_m_of(family: &VectorFamily, v: &Subspace) -> Result<OrientedMatroid, GrassmannError> {
    if let Some(dim) = family.dimension() {
        if dim != v.ambient {
            return Err(GrassmannError::DimensionMismatch {
                expected: v.ambient,
                found: dim,
            });
        }
    }
    let rows: Vec<Vec<Rational>> = family.elements.iter().map(|e| e.1.clone()).collect();
    let rank = linalg::rank(&rows);
    if rank != v.ambient {
        return Err(GrassmannError::NotSpanning {
            rank,
            ambient: v.ambient,
        });
    }
    let elements = family.elements.iter().map(|(l, w)| (*l, v.apply(w)));
    let arrangement = LabeledArrangement::new(elements).expect("family labels are distinct");
    Ok(m_of(&arrangement)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StratumLevel {
    Matroid,
    OrientedMatroid,
}

pub fn same_stratum(
    v: &Subspace,
    w: &Subspace,
    level: StratumLevel,
) -> Result<bool, GrassmannError> {
    if v.ambient != w.ambient {
        return Err(GrassmannError::DimensionMismatch {
            expected: v.ambient,
            found: w.ambient,
        });
    }
    let (mv, mw) = (mu_of(v)?, mu_of(w)?);
    Ok(match level {
        StratumLevel::OrientedMatroid => om_equal(&mv, &mw)?,
        StratumLevel::Matroid => underlying_matroid(&mv) == underlying_matroid(&mw),
    })
}

/// Whether `eᵢ` is orthogonal to every basis row, i.e. `i` is a loop of `μ(V)`.
pub fn coordinate_orthogonal(v: &Subspace, i: usize) -> bool {
    v.basis.iter().all(|row| row[i].is_zero())
}
