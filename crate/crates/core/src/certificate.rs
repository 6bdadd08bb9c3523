//! Certificate that every level `Mᵢ` degenerates into one common limit
//! oriented matroid `M`, while the cross-ratio `cr(i)` of `(α, δ, γ, β)`
//! tells the levels apart.
//!
//! Checks, all exact:
//!
//! * (a) the points `cᵢ` are pairwise distinct;
//! * (b) the cross-ratios `cr(i)` are pairwise distinct;
//! * (c) each scaled member of a degeneration family realises `Mᵢ`;
//! * (d) the loop-free limit oriented matroids coincide for every `i`;
//! * (e) the limit arrangements carry `cr(i)` on `(α, δ, γ, β)`, so equal
//!   limit strata are separated by the projective invariant;
//! * (f) `Mᵢ → limit` is a weak map.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::arrangement::LabeledArrangement;
use crate::construction::{
    build, cr_ledger, limit_arrangement, make_mi, scale_degeneration, validate_seed,
    ConfigurationFamily, ConstructionError, Seed, SeedViolation, SPECIAL_LABELS,
};
use crate::geometry::{
    affine_from_correspondence, cross_ratio, perspective_normalize, GeometryError, PlanePoint,
    Rational,
};
use crate::label::Label;
use crate::oriented_matroid::{m_of, weak_map, OmError, OrientedMatroid};

pub const DEFAULT_DEPTH: u32 = 10;
pub const EXTENDED_DEPTH: u32 = 20;
pub const DEFAULT_SAMPLES: [u64; 4] = [1, 2, 4, 1024];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedRejection {
    #[error(transparent)]
    Invalid(#[from] SeedViolation),
    #[error(transparent)]
    Construction(ConstructionError),
    #[error("cross-ratio ledger: {0}")]
    CrossRatio(GeometryError),
    #[error("oriented matroid: {0}")]
    OrientedMatroid(OmError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("seed rejected: {0}")]
    SeedRejected(SeedRejection),
    #[error("depth must be at least 1")]
    EmptyDepth,
    #[error("degeneration samples must be positive")]
    InvalidSample,
}

impl From<ConstructionError> for CertificateError {
    fn from(e: ConstructionError) -> Self {
        CertificateError::SeedRejected(match e {
            ConstructionError::InvalidSeed(v) => SeedRejection::Invalid(v),
            other => SeedRejection::Construction(other),
        })
    }
}

impl From<OmError> for CertificateError {
    fn from(e: OmError) -> Self {
        CertificateError::SeedRejected(SeedRejection::OrientedMatroid(e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerationSample {
    pub n: u64,
    pub fingerprint: String,
    pub matches_level: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelRecord {
    pub index: u32,
    pub c: PlanePoint,
    pub cross_ratio: Rational,
    pub mi_fingerprint: String,
    /// Fingerprint of the limit with its loops deleted (ground set: the eight
    /// special labels).
    pub limit_fingerprint: String,
    /// `(α, δ, γ, β)` cross-ratio read off the limit arrangement.
    pub limit_cross_ratio: Rational,
    pub degeneration: Vec<DegenerationSample>,
    pub weak_map_to_limit: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    pub c_distinct: bool,
    pub cr_distinct: bool,
    pub degeneration_constant: bool,
    pub limits_equal: bool,
    pub separation: bool,
    pub weak_maps: bool,
}

impl Checks {
    /// Check names in report order, paired with their verdicts.
    pub fn named(&self) -> [(&'static str, bool); 6] {
        [
            ("c_distinct", self.c_distinct),
            ("cr_distinct", self.cr_distinct),
            ("degeneration_constant", self.degeneration_constant),
            ("limits_equal", self.limits_equal),
            ("separation", self.separation),
            ("weak_maps", self.weak_maps),
        ]
    }

    pub fn all(&self) -> bool {
        self.named().iter().all(|(_, ok)| *ok)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.named()
            .iter()
            .find(|(_, ok)| !ok)
            .map(|(name, _)| *name)
    }
}

/// Supplementary verdicts; reported but not part of the overall pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coherence {
    /// Every defining incidence of every level holds exactly.
    pub incidences: bool,
    /// The affine map reconstructed from `(ω, a, β)` between two members of a
    /// scaled family is the identity and fixes `(α, β, a, b₁)`.
    pub scaled_members_equivalent: bool,
    /// Rebuilding from an affine image of the seed yields the image of every
    /// constructed point and the same cross-ratios.
    pub affine_equivariance: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub seed: Seed,
    pub depth: u32,
    pub samples: Vec<u64>,
    pub levels: Vec<LevelRecord>,
    /// The common limit `M` on the eight special labels, when (d) holds.
    pub limit_om: Option<OrientedMatroid>,
    pub checks: Checks,
    pub coherence: Coherence,
    pub pass: bool,
}

impl CertificateReport {
    pub fn first_failure(&self) -> Option<&'static str> {
        self.checks.first_failure()
    }
}

fn pairwise_distinct<T: Ord>(items: impl IntoIterator<Item = T>) -> bool {
    let mut seen = BTreeSet::new();
    items.into_iter().all(|x| seen.insert(x))
}

fn special_point(arr: &LabeledArrangement, label: Label) -> Result<PlanePoint, CertificateError> {
    let v = arr
        .get(label)
        .expect("special labels are present in every level");
    perspective_normalize(v)
        .map_err(|e| CertificateError::SeedRejected(SeedRejection::CrossRatio(e)))
}

struct LevelOutcome {
    record: LevelRecord,
    limit: OrientedMatroid,
}

fn examine_level(
    family: &ConfigurationFamily,
    i: u32,
    cr: &Rational,
    samples: &[u64],
) -> Result<LevelOutcome, CertificateError> {
    let arr = make_mi(family, i)?;
    let mi = m_of(&arr)?;

    let degeneration = samples
        .iter()
        .map(|&n| {
            let om = m_of(&scale_degeneration(&arr, n))?;
            Ok(DegenerationSample {
                n,
                fingerprint: om.fingerprint(),
                matches_level: om == mi,
            })
        })
        .collect::<Result<Vec<_>, CertificateError>>()?;

    let limit_arr = limit_arrangement(&arr);
    let limit = m_of(&limit_arr)?;
    let weak = weak_map(&mi, &limit)?;
    let core = limit.delete_loops();

    let point = |l| special_point(&limit_arr, l);
    let limit_cr = cross_ratio(
        &point(Label::Alpha)?,
        &point(Label::Delta)?,
        &point(Label::Gamma)?,
        &point(Label::Beta)?,
    )
    .map_err(|e| CertificateError::SeedRejected(SeedRejection::CrossRatio(e)))?;

    Ok(LevelOutcome {
        record: LevelRecord {
            index: i,
            c: family.c(i).expect("level exists").clone(),
            cross_ratio: cr.clone(),
            mi_fingerprint: mi.fingerprint(),
            limit_fingerprint: core.fingerprint(),
            limit_cross_ratio: limit_cr,
            degeneration,
            weak_map_to_limit: weak,
        },
        limit: core,
    })
}

/// Identity check between scaled members: the affine map matching `(ω, a, β)`
/// of member `n₁` to member `n₂` must fix `(α, β, a, b₁)`.
fn scaled_members_equivalent(
    family: &ConfigurationFamily,
    samples: &[u64],
) -> Result<bool, CertificateError> {
    let (Some(&n1), Some(&n2)) = (samples.first(), samples.last()) else {
        return Ok(true);
    };
    let sub = [Label::Alpha, Label::Beta, Label::A, Label::B(1)];
    for i in 1..=family.depth() {
        let arr = make_mi(family, i)?;
        let (x, y) = (scale_degeneration(&arr, n1), scale_degeneration(&arr, n2));
        let frame = |a: &LabeledArrangement| -> Result<[PlanePoint; 3], CertificateError> {
            Ok([
                special_point(a, Label::Omega)?,
                special_point(a, Label::A)?,
                special_point(a, Label::Beta)?,
            ])
        };
        let Ok(f) = affine_from_correspondence(&frame(&x)?, &frame(&y)?) else {
            return Ok(false);
        };
        for l in sub {
            if f.apply(&special_point(&x, l)?) != special_point(&y, l)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rebuilds from the image of the seed under the affine map fixing `ω` and `a`
/// and moving `β` off its line, and compares against the image of the family.
fn affine_equivariance(family: &ConfigurationFamily) -> bool {
    let s = family.seed();
    let shifts = [(0, 1), (1, 0), (1, 1), (-1, 2)];
    let target = shifts.iter().find_map(|&(dx, dy)| {
        let moved = PlanePoint::new(
            &s.beta.x + Rational::from_integer(dx.into()),
            &s.beta.y + Rational::from_integer(dy.into()),
        );
        affine_from_correspondence(
            &[s.omega.clone(), s.a.clone(), s.beta.clone()],
            &[s.omega.clone(), s.a.clone(), moved],
        )
        .ok()
    });
    let Some(f) = target else {
        return false;
    };
    let image = Seed {
        alpha: f.apply(&s.alpha),
        beta: f.apply(&s.beta),
        gamma: f.apply(&s.gamma),
        omega: f.apply(&s.omega),
        nu: f.apply(&s.nu),
        a: f.apply(&s.a),
        b1: f.apply(&s.b1),
    };
    let Ok(rebuilt) = build(&image, family.depth()) else {
        return false;
    };
    let points_match = family
        .points()
        .iter()
        .zip(rebuilt.points())
        .all(|((l, p), (m, q))| *l == m && f.apply(p) == q);
    points_match && cr_ledger(family).ok() == cr_ledger(&rebuilt).ok()
}

pub fn certificate(
    seed: &Seed,
    depth: u32,
    samples: &[u64],
) -> Result<CertificateReport, CertificateError> {
    if depth == 0 {
        return Err(CertificateError::EmptyDepth);
    }
    if samples.contains(&0) {
        return Err(CertificateError::InvalidSample);
    }
    validate_seed(seed).map_err(|v| CertificateError::SeedRejected(v.into()))?;
    let family = build(seed, depth)?;
    let ledger = cr_ledger(&family)
        .map_err(|e| CertificateError::SeedRejected(SeedRejection::CrossRatio(e)))?;

    let outcomes = ledger
        .par_iter()
        .map(|(i, cr)| examine_level(&family, *i, cr, samples))
        .collect::<Result<Vec<_>, _>>()?;

    let first_limit = &outcomes[0].limit;
    let special_ground: Vec<Label> = {
        let mut v = SPECIAL_LABELS.to_vec();
        v.sort();
        v
    };
    let limits_equal = first_limit.ground_set() == special_ground.as_slice()
        && outcomes.iter().all(|o| o.limit == *first_limit);

    let limit_om = limits_equal.then(|| first_limit.clone());
    let levels: Vec<LevelRecord> = outcomes.into_iter().map(|o| o.record).collect();
    let checks = Checks {
        c_distinct: pairwise_distinct(levels.iter().map(|r| &r.c)),
        cr_distinct: pairwise_distinct(levels.iter().map(|r| &r.cross_ratio)),
        degeneration_constant: levels
            .iter()
            .all(|r| r.degeneration.iter().all(|d| d.matches_level)),
        limits_equal,
        separation: limits_equal
            && levels.iter().all(|r| r.limit_cross_ratio == r.cross_ratio)
            && pairwise_distinct(levels.iter().map(|r| &r.limit_cross_ratio)),
        weak_maps: levels.iter().all(|r| r.weak_map_to_limit),
    };
    let coherence = Coherence {
        incidences: family.check_incidences().is_none(),
        scaled_members_equivalent: scaled_members_equivalent(&family, samples)?,
        affine_equivariance: affine_equivariance(&family),
    };
    Ok(CertificateReport {
        seed: seed.clone(),
        depth,
        samples: samples.to_vec(),
        levels,
        limit_om,
        pass: checks.all(),
        checks,
        coherence,
    })
}
