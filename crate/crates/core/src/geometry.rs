//! Exact plane and homogeneous-space geometry over the rationals.
//!
//! Everything here is computed with arbitrary-precision rationals; there is
//! no floating-point path. Affine points embed into 3-space at height 1 and
//! come back by perspective division.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("coincident points do not define a line")]
    CoincidentPoints,
    #[error("lines are parallel")]
    Parallel,
    #[error("lines are identical")]
    Identical,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("cross-ratio needs four pairwise distinct points")]
    DegeneratePoints,
    #[error("source triple is collinear")]
    DegenerateSource,
    #[error("target triple is collinear")]
    DegenerateTarget,
    #[error("vector has non-positive height")]
    NonPositiveHeight,
}

/// Orientation sign. Variant order matches the byte order of `+`, `-`, `0`
/// so that sign strings and sign vectors sort identically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
    Zero,
}

impl Sign {
    pub fn of<T: Signed>(value: &T) -> Sign {
        if value.is_zero() {
            Sign::Zero
        } else if value.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
            Sign::Zero => '0',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Pos),
            '-' => Some(Sign::Neg),
            '0' => Some(Sign::Zero),
            _ => None,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Pos,
            _ => Sign::Neg,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePoint {
    pub x: Rational,
    pub y: Rational,
}

impl PlanePoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        PlanePoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        PlanePoint::new(int(x), int(y))
    }

    pub fn sub(&self, other: &PlanePoint) -> (Rational, Rational) {
        (&self.x - &other.x, &self.y - &other.y)
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Vector3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Vector3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Vector3::new(int(x), int(y), int(z))
    }

    pub fn zero() -> Self {
        Vector3::from_ints(0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, factor: &Rational) -> Vector3 {
        Vector3::new(&self.x * factor, &self.y * factor, &self.z * factor)
    }

    pub fn add(&self, other: &Vector3) -> Vector3 {
        Vector3::new(&self.x + &other.x, &self.y + &other.y, &self.z + &other.z)
    }

    pub fn dot(&self, other: &Vector3) -> Rational {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn cross(&self, other: &Vector3) -> Vector3 {
        Vector3::new(
            &self.y * &other.z - &self.z * &other.y,
            &self.z * &other.x - &self.x * &other.z,
            &self.x * &other.y - &self.y * &other.x,
        )
    }

    pub fn components(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// A positive integer multiple of this vector. Signs of determinants and
    /// inner products are unchanged by the scaling.
    pub fn cleared(&self) -> [BigInt; 3] {
        let l = self
            .components()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scale = |c: &Rational| c.numer() * (&l / c.denom());
        [scale(&self.x), scale(&self.y), scale(&self.z)]
    }
}

impl fmt::Display for Vector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

pub fn det3(u: &Vector3, v: &Vector3, w: &Vector3) -> Rational {
    u.dot(&v.cross(w))
}

pub fn sign_det3(u: &Vector3, v: &Vector3, w: &Vector3) -> Sign {
    Sign::of(&det3(u, v, w))
}

pub(crate) fn int_cross(u: &[BigInt; 3], v: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

pub(crate) fn int_dot(u: &[BigInt; 3], v: &[BigInt; 3]) -> BigInt {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

pub fn embed_affine(p: &PlanePoint) -> Vector3 {
    Vector3::new(p.x.clone(), p.y.clone(), Rational::one())
}

pub fn perspective_normalize(v: &Vector3) -> Result<PlanePoint, GeometryError> {
    if !v.z.is_positive() {
        return Err(GeometryError::NonPositiveHeight);
    }
    Ok(PlanePoint::new(&v.x / &v.z, &v.y / &v.z))
}

/// Signed doubled area of the triangle `pqr`.
pub fn orient2d(p: &PlanePoint, q: &PlanePoint, r: &PlanePoint) -> Rational {
    let (ax, ay) = q.sub(p);
    let (bx, by) = r.sub(p);
    ax * by - ay * bx
}

pub fn collinear(p: &PlanePoint, q: &PlanePoint, r: &PlanePoint) -> bool {
    sign_det3(&embed_affine(p), &embed_affine(q), &embed_affine(r)).is_zero()
}

/// True iff `p` lies strictly between `from` and `to` on their common line.
pub fn strictly_between(from: &PlanePoint, p: &PlanePoint, to: &PlanePoint) -> bool {
    if from == to || !collinear(from, p, to) {
        return false;
    }
    let (dx, dy) = to.sub(from);
    let (px, py) = p.sub(from);
    let t = &px * &dx + &py * &dy;
    let len2 = &dx * &dx + &dy * &dy;
    t.is_positive() && t < len2
}

/// Line `a·x + b·y + c = 0` with coprime integer coefficients and the first
/// non-zero of `(a, b)` positive. Equality compares only the coefficients.
#[derive(Debug, Clone)]
pub struct Line2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    through: (PlanePoint, PlanePoint),
}

impl Line2 {
    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub fn defining_points(&self) -> (&PlanePoint, &PlanePoint) {
        (&self.through.0, &self.through.1)
    }

    pub fn contains(&self, p: &PlanePoint) -> bool {
        self.eval(p).is_zero()
    }

    fn eval(&self, p: &PlanePoint) -> Rational {
        Rational::from_integer(self.a.clone()) * &p.x
            + Rational::from_integer(self.b.clone()) * &p.y
            + Rational::from_integer(self.c.clone())
    }
}

impl PartialEq for Line2 {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c
    }
}

impl Eq for Line2 {}

impl fmt::Display for Line2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y + {} = 0", self.a, self.b, self.c)
    }
}

pub fn line_through(p: &PlanePoint, q: &PlanePoint) -> Result<Line2, GeometryError> {
    if p == q {
        return Err(GeometryError::CoincidentPoints);
    }
    let a = &p.y - &q.y;
    let b = &q.x - &p.x;
    let c = &p.x * &q.y - &q.x * &p.y;
    let l = [&a, &b, &c]
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let to_int = |r: &Rational| r.numer() * (&l / r.denom());
    let (mut a, mut b, mut c) = (to_int(&a), to_int(&b), to_int(&c));
    let g = a.gcd(&b).gcd(&c);
    a /= &g;
    b /= &g;
    c /= &g;
    if a.is_negative() || (a.is_zero() && b.is_negative()) {
        a = -a;
        b = -b;
        c = -c;
    }
    Ok(Line2 {
        a,
        b,
        c,
        through: (p.clone(), q.clone()),
    })
}

pub fn line_intersect(l1: &Line2, l2: &Line2) -> Result<PlanePoint, GeometryError> {
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return Err(if l1 == l2 {
            GeometryError::Identical
        } else {
            GeometryError::Parallel
        });
    }
    let x = &l1.b * &l2.c - &l2.b * &l1.c;
    let y = &l2.a * &l1.c - &l1.a * &l2.c;
    Ok(PlanePoint::new(
        Rational::new(x, det.clone()),
        Rational::new(y, det),
    ))
}

/// Affine parameter of `p` along the line `base + t·dir`; `p` must be on it.
fn line_parameter(base: &PlanePoint, dir: &(Rational, Rational), p: &PlanePoint) -> Rational {
    if !dir.0.is_zero() {
        (&p.x - &base.x) / &dir.0
    } else {
        (&p.y - &base.y) / &dir.1
    }
}

/// Cross-ratio `|a−c|/|b−c| · |b−d|/|a−d|` of four distinct collinear points,
/// evaluated on affine parameters along the common line.
pub fn cross_ratio(
    a: &PlanePoint,
    b: &PlanePoint,
    c: &PlanePoint,
    d: &PlanePoint,
) -> Result<Rational, GeometryError> {
    let pts = [a, b, c, d];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return Err(GeometryError::DegeneratePoints);
            }
        }
    }
    if !collinear(a, b, c) || !collinear(a, b, d) {
        return Err(GeometryError::NotCollinear);
    }
    let dir = b.sub(a);
    let ta = Rational::zero();
    let tb = line_parameter(a, &dir, b);
    let tc = line_parameter(a, &dir, c);
    let td = line_parameter(a, &dir, d);
    let num = (&tc - &ta).abs() * (&td - &tb).abs();
    let den = (&tc - &tb).abs() * (&td - &ta).abs();
    Ok(num / den)
}

/// `p ↦ L·p + t` with `det L ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap2 {
    linear: [[Rational; 2]; 2],
    translation: [Rational; 2],
}

impl AffineMap2 {
    pub fn new(linear: [[Rational; 2]; 2], translation: [Rational; 2]) -> Option<Self> {
        let m = AffineMap2 {
            linear,
            translation,
        };
        (!m.det().is_zero()).then_some(m)
    }

    pub fn identity() -> Self {
        AffineMap2 {
            linear: [[int(1), int(0)], [int(0), int(1)]],
            translation: [int(0), int(0)],
        }
    }

    pub fn translation(dx: Rational, dy: Rational) -> Self {
        AffineMap2 {
            translation: [dx, dy],
            ..AffineMap2::identity()
        }
    }

    pub fn linear(&self) -> &[[Rational; 2]; 2] {
        &self.linear
    }

    pub fn translation_part(&self) -> &[Rational; 2] {
        &self.translation
    }

    pub fn det(&self) -> Rational {
        let m = &self.linear;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn apply(&self, p: &PlanePoint) -> PlanePoint {
        let m = &self.linear;
        PlanePoint::new(
            &m[0][0] * &p.x + &m[0][1] * &p.y + &self.translation[0],
            &m[1][0] * &p.x + &m[1][1] * &p.y + &self.translation[1],
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap2) -> AffineMap2 {
        let (a, b) = (&self.linear, &other.linear);
        let linear = [
            [
                &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0],
                &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1],
            ],
            [
                &a[1][0] * &b[0][0] + &a[1][1] * &b[1][0],
                &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1],
            ],
        ];
        let t = self.apply(&PlanePoint::new(
            other.translation[0].clone(),
            other.translation[1].clone(),
        ));
        AffineMap2 {
            linear,
            translation: [t.x, t.y],
        }
    }

    pub fn inverse(&self) -> AffineMap2 {
        let m = &self.linear;
        let det = self.det();
        let linear = [
            [&m[1][1] / &det, -(&m[0][1] / &det)],
            [-(&m[1][0] / &det), &m[0][0] / &det],
        ];
        let t = &self.translation;
        let translation = [
            -(&linear[0][0] * &t[0] + &linear[0][1] * &t[1]),
            -(&linear[1][0] * &t[0] + &linear[1][1] * &t[1]),
        ];
        AffineMap2 {
            linear,
            translation,
        }
    }
}

pub fn apply_affine(f: &AffineMap2, p: &PlanePoint) -> PlanePoint {
    f.apply(p)
}

/// The unique affine automorphism sending `src[i]` to `dst[i]`.
pub fn affine_from_correspondence(
    src: &[PlanePoint; 3],
    dst: &[PlanePoint; 3],
) -> Result<AffineMap2, GeometryError> {
    if collinear(&src[0], &src[1], &src[2]) {
        return Err(GeometryError::DegenerateSource);
    }
    if collinear(&dst[0], &dst[1], &dst[2]) {
        return Err(GeometryError::DegenerateTarget);
    }
    // Columns of S and D are the edge vectors out of the first point.
    let (s1x, s1y) = src[1].sub(&src[0]);
    let (s2x, s2y) = src[2].sub(&src[0]);
    let (d1x, d1y) = dst[1].sub(&dst[0]);
    let (d2x, d2y) = dst[2].sub(&dst[0]);
    let det_s = &s1x * &s2y - &s2x * &s1y;
    let inv = [
        [&s2y / &det_s, -(&s2x / &det_s)],
        [-(&s1y / &det_s), &s1x / &det_s],
    ];
    let linear = [
        [
            &d1x * &inv[0][0] + &d2x * &inv[1][0],
            &d1x * &inv[0][1] + &d2x * &inv[1][1],
        ],
        [
            &d1y * &inv[0][0] + &d2y * &inv[1][0],
            &d1y * &inv[0][1] + &d2y * &inv[1][1],
        ],
    ];
    let partial = AffineMap2 {
        linear,
        translation: [int(0), int(0)],
    };
    let moved = partial.apply(&src[0]);
    Ok(AffineMap2 {
        translation: [&dst[0].x - moved.x, &dst[0].y - moved.y],
        ..partial
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> PlanePoint {
        PlanePoint::from_ints(x, y)
    }

    #[test]
    fn det3_signs_of_basis_orderings() {
        let e1 = Vector3::from_ints(1, 0, 0);
        let e2 = Vector3::from_ints(0, 1, 0);
        let e3 = Vector3::from_ints(0, 0, 1);
        assert_eq!(sign_det3(&e1, &e2, &e3), Sign::Pos);
        assert_eq!(sign_det3(&e2, &e1, &e3), Sign::Neg);
        assert_eq!(sign_det3(&e1, &e2, &e1.add(&e2)), Sign::Zero);
    }

    #[test]
    fn canonical_lines() {
        let diag = line_through(&p(0, 0), &p(1, 1)).unwrap();
        assert_eq!(diag.coefficients(), (&1.into(), &(-1).into(), &0.into()));
        let horiz = line_through(&p(0, 1), &p(1, 1)).unwrap();
        assert_eq!(horiz.coefficients(), (&0.into(), &1.into(), &(-1).into()));
        assert_eq!(
            line_through(&p(0, 0), &p(0, 0)).unwrap_err(),
            GeometryError::CoincidentPoints
        );
        // same line from different defining pairs
        let other = line_through(&p(7, 7), &PlanePoint::new(rat(-1, 3), rat(-1, 3))).unwrap();
        assert_eq!(diag, other);
    }

    #[test]
    fn intersections() {
        let l1 = line_through(&p(0, 0), &p(1, 1)).unwrap();
        let l2 = line_through(&p(0, 1), &p(1, 0)).unwrap();
        assert_eq!(
            line_intersect(&l1, &l2).unwrap(),
            PlanePoint::new(rat(1, 2), rat(1, 2))
        );
        let h0 = line_through(&p(0, 0), &p(1, 0)).unwrap();
        let h1 = line_through(&p(0, 1), &p(1, 1)).unwrap();
        assert_eq!(
            line_intersect(&h0, &h1).unwrap_err(),
            GeometryError::Parallel
        );
        let h0b = line_through(&p(5, 0), &p(-3, 0)).unwrap();
        assert_eq!(
            line_intersect(&h0, &h0b).unwrap_err(),
            GeometryError::Identical
        );
    }

    #[test]
    fn seed_first_meet() {
        // line(ω, γ) ∩ line(α, b₁) for the shipped seed
        let omega = p(3, 5);
        let gamma = p(4, 0);
        let alpha = p(0, 0);
        let b1 = PlanePoint::new(rat(9, 2), rat(5, 2));
        let d1 = line_intersect(
            &line_through(&omega, &gamma).unwrap(),
            &line_through(&alpha, &b1).unwrap(),
        )
        .unwrap();
        assert_eq!(d1, PlanePoint::new(rat(18, 5), int(2)));
    }

    #[test]
    fn collinearity() {
        assert!(collinear(&p(0, 0), &p(1, 1), &p(2, 2)));
        assert!(!collinear(&p(0, 0), &p(1, 0), &p(0, 1)));
        assert!(collinear(&p(0, 0), &p(0, 0), &p(5, 7)));
    }

    #[test]
    fn cross_ratio_examples() {
        let cr = cross_ratio(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)).unwrap();
        assert_eq!(cr, rat(4, 3));
        let cr = cross_ratio(&p(0, 0), &p(1, 0), &p(2, 0), &p(4, 0)).unwrap();
        assert_eq!(cr, rat(3, 2));
        // image under x ↦ 2x + 1
        let cr = cross_ratio(&p(1, 0), &p(3, 0), &p(5, 0), &p(7, 0)).unwrap();
        assert_eq!(cr, rat(4, 3));
        // vertical line exercises the y-parameter branch
        let cr = cross_ratio(&p(2, 0), &p(2, 1), &p(2, 2), &p(2, 3)).unwrap();
        assert_eq!(cr, rat(4, 3));
    }

    #[test]
    fn cross_ratio_errors() {
        assert_eq!(
            cross_ratio(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 1)).unwrap_err(),
            GeometryError::NotCollinear
        );
        assert_eq!(
            cross_ratio(&p(0, 0), &p(1, 0), &p(1, 0), &p(3, 0)).unwrap_err(),
            GeometryError::DegeneratePoints
        );
    }

    #[test]
    fn affine_reconstruction() {
        let tri = [p(0, 0), p(1, 0), p(0, 1)];
        assert_eq!(
            affine_from_correspondence(&tri, &tri).unwrap(),
            AffineMap2::identity()
        );
        let shifted = [p(1, 1), p(2, 1), p(1, 2)];
        assert_eq!(
            affine_from_correspondence(&tri, &shifted).unwrap(),
            AffineMap2::translation(int(1), int(1))
        );
        assert_eq!(
            affine_from_correspondence(&[p(0, 0), p(1, 1), p(2, 2)], &tri).unwrap_err(),
            GeometryError::DegenerateSource
        );
        assert_eq!(
            affine_from_correspondence(&tri, &[p(0, 0), p(1, 1), p(2, 2)]).unwrap_err(),
            GeometryError::DegenerateTarget
        );
    }

    #[test]
    fn apply_and_invert() {
        assert_eq!(AffineMap2::identity().apply(&p(3, 4)), p(3, 4));
        let t = AffineMap2::translation(int(1), int(1));
        assert_eq!(apply_affine(&t, &p(0, 0)), p(1, 1));
        let f = AffineMap2::new(
            [[int(2), int(1)], [rat(1, 3), int(-1)]],
            [int(4), rat(-2, 7)],
        )
        .unwrap();
        assert_eq!(f.compose(&f.inverse()).apply(&p(5, -2)), p(5, -2));
        assert_eq!(f.inverse().compose(&f), AffineMap2::identity());
        assert!(AffineMap2::new([[int(1), int(2)], [int(2), int(4)]], [int(0), int(0)]).is_none());
    }

    #[test]
    fn embedding_round_trip() {
        assert_eq!(embed_affine(&p(0, 0)), Vector3::from_ints(0, 0, 1));
        assert_eq!(embed_affine(&p(2, -3)), Vector3::from_ints(2, -3, 1));
        assert_eq!(
            perspective_normalize(&Vector3::from_ints(2, 4, 2)).unwrap(),
            p(1, 2)
        );
        assert_eq!(
            perspective_normalize(&Vector3::from_ints(0, 0, 1)).unwrap(),
            p(0, 0)
        );
        assert_eq!(
            perspective_normalize(&Vector3::from_ints(1, 1, 0)).unwrap_err(),
            GeometryError::NonPositiveHeight
        );
        let q = PlanePoint::new(rat(-7, 3), rat(11, 5));
        assert_eq!(perspective_normalize(&embed_affine(&q)).unwrap(), q);
    }

    #[test]
    fn betweenness() {
        assert!(strictly_between(&p(0, 0), &p(4, 0), &p(6, 0)));
        assert!(!strictly_between(&p(0, 0), &p(6, 0), &p(6, 0)));
        assert!(!strictly_between(&p(0, 0), &p(7, 0), &p(6, 0)));
        assert!(!strictly_between(&p(0, 0), &p(3, 1), &p(6, 0)));
    }

    #[test]
    fn cleared_keeps_direction() {
        let v = Vector3::new(rat(1, 2), rat(-2, 3), rat(5, 6));
        let c = v.cleared();
        assert_eq!(c, [3.into(), (-4).into(), 5.into()]);
    }
}
