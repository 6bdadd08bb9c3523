use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::geometry::{embed_affine, int_cross, int_dot, PlanePoint, Rational, Vector3};
use crate::label::Label;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("label {0} appears more than once")]
    DuplicateLabel(Label),
    #[error("arrangement has rank {0}, expected 3")]
    NotSpanning(usize),
    #[error("label {0} is not in the arrangement")]
    UnknownLabel(Label),
}

/// Labeled tuple of vectors in 3-space, kept sorted in the global label order.
///
/// Zero vectors are allowed and become loops of the associated oriented
/// matroid. Rank-deficient arrangements are accepted by the oriented-matroid
/// operations only when flagged with [`LabeledArrangement::non_spanning`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledArrangement {
    elements: Vec<(Label, Vector3)>,
    allow_non_spanning: bool,
}

impl LabeledArrangement {
    pub fn new(
        elements: impl IntoIterator<Item = (Label, Vector3)>,
    ) -> Result<Self, ArrangementError> {
        let mut elements: Vec<_> = elements.into_iter().collect();
        elements.sort_by_key(|a| a.0);
        if let Some(w) = elements.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(ArrangementError::DuplicateLabel(w[0].0));
        }
        Ok(LabeledArrangement {
            elements,
            allow_non_spanning: false,
        })
    }

    /// Arrangement with labels `1..=n` in the given order.
    pub fn indexed(vectors: impl IntoIterator<Item = Vector3>) -> Self {
        let elements = vectors
            .into_iter()
            .enumerate()
            .map(|(i, v)| (Label::Index(i as u32 + 1), v));
        LabeledArrangement::new(elements).expect("indices are distinct")
    }

    /// Affine points lifted to height 1.
    pub fn from_affine(
        points: impl IntoIterator<Item = (Label, PlanePoint)>,
    ) -> Result<Self, ArrangementError> {
        LabeledArrangement::new(points.into_iter().map(|(l, p)| (l, embed_affine(&p))))
    }

    pub fn non_spanning(mut self) -> Self {
        self.allow_non_spanning = true;
        self
    }

    pub fn allows_non_spanning(&self) -> bool {
        self.allow_non_spanning
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[(Label, Vector3)] {
        &self.elements
    }

    pub fn labels(&self) -> Vec<Label> {
        self.elements.iter().map(|(l, _)| *l).collect()
    }

    pub fn get(&self, label: Label) -> Option<&Vector3> {
        self.elements
            .binary_search_by(|(l, _)| l.cmp(&label))
            .ok()
            .map(|i| &self.elements[i].1)
    }

    pub fn rank(&self) -> usize {
        let cleared: Vec<_> = self.elements.iter().map(|(_, v)| v.cleared()).collect();
        vector_rank(&cleared)
    }

    /// Applies `f` to every vector, keeping labels and flags.
    pub fn map_vectors(&self, mut f: impl FnMut(Label, &Vector3) -> Vector3) -> Self {
        LabeledArrangement {
            elements: self.elements.iter().map(|(l, v)| (*l, f(*l, v))).collect(),
            allow_non_spanning: self.allow_non_spanning,
        }
    }

    pub fn relabel(&self, from: Label, to: Label) -> Result<Self, ArrangementError> {
        if self.get(from).is_none() {
            return Err(ArrangementError::UnknownLabel(from));
        }
        let mut out = LabeledArrangement::new(
            self.elements
                .iter()
                .map(|(l, v)| (if *l == from { to } else { *l }, v.clone())),
        )?;
        out.allow_non_spanning = self.allow_non_spanning;
        Ok(out)
    }

    /// Adds zero vectors for every label of `ground` not already present.
    pub fn pad_with_loops(&self, ground: &[Label]) -> Self {
        let mut elements = self.elements.clone();
        for l in ground {
            if self.get(*l).is_none() {
                elements.push((*l, Vector3::zero()));
            }
        }
        let mut out = LabeledArrangement::new(elements).expect("padding adds new labels only");
        out.allow_non_spanning = self.allow_non_spanning;
        out
    }

    pub fn restrict(&self, keep: &[Label]) -> Self {
        LabeledArrangement {
            elements: self
                .elements
                .iter()
                .filter(|(l, _)| keep.contains(l))
                .cloned()
                .collect(),
            allow_non_spanning: self.allow_non_spanning,
        }
    }

    /// Projects every vector along `label`'s vector onto its orthogonal
    /// complement, turning `label` (and anything parallel to it) into a loop.
    /// Realizes the contraction at `label`; the result has rank one less.
    pub fn contract(&self, label: Label) -> Result<Self, ArrangementError> {
        let u = self
            .get(label)
            .ok_or(ArrangementError::UnknownLabel(label))?
            .clone();
        if u.is_zero() {
            return Ok(self.clone());
        }
        let uu = u.dot(&u);
        let projected = self.map_vectors(|_, v| {
            let coeff: Rational = v.dot(&u) / &uu;
            v.add(&u.scale(&-coeff))
        });
        Ok(projected.non_spanning())
    }
}

pub(crate) fn vector_rank(vectors: &[[BigInt; 3]]) -> usize {
    let Some(first) = vectors.iter().find(|v| v.iter().any(|c| !c.is_zero())) else {
        return 0;
    };
    let Some(normal) = vectors
        .iter()
        .map(|v| int_cross(first, v))
        .find(|n| n.iter().any(|c| !c.is_zero()))
    else {
        return 1;
    };
    if vectors.iter().any(|w| !int_dot(&normal, w).is_zero()) {
        3
    } else {
        2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_unique() {
        let arr = LabeledArrangement::new([
            (Label::B(1), Vector3::from_ints(1, 0, 0)),
            (Label::Alpha, Vector3::from_ints(0, 1, 0)),
        ])
        .unwrap();
        assert_eq!(arr.labels(), vec![Label::Alpha, Label::B(1)]);
        let dup = LabeledArrangement::new([
            (Label::A, Vector3::from_ints(1, 0, 0)),
            (Label::A, Vector3::from_ints(0, 1, 0)),
        ]);
        assert_eq!(dup.unwrap_err(), ArrangementError::DuplicateLabel(Label::A));
    }

    #[test]
    fn ranks() {
        let basis = LabeledArrangement::indexed([
            Vector3::from_ints(1, 0, 0),
            Vector3::from_ints(0, 1, 0),
            Vector3::from_ints(0, 0, 1),
        ]);
        assert_eq!(basis.rank(), 3);
        let planar = LabeledArrangement::indexed([
            Vector3::from_ints(1, 0, 0),
            Vector3::from_ints(0, 1, 0),
            Vector3::from_ints(1, 1, 0),
        ]);
        assert_eq!(planar.rank(), 2);
        assert_eq!(LabeledArrangement::indexed([Vector3::zero()]).rank(), 0);
        assert_eq!(basis.contract(Label::Index(3)).unwrap().rank(), 2);
    }

    #[test]
    fn padding_adds_loops() {
        let arr = LabeledArrangement::indexed([Vector3::from_ints(1, 0, 0)]);
        let padded = arr.pad_with_loops(&[Label::Index(1), Label::Index(4)]);
        assert_eq!(padded.len(), 2);
        assert!(padded.get(Label::Index(4)).unwrap().is_zero());
    }
}
