use num_traits::{One, Zero};
use proptest::prelude::*;

use omstrata::geometry::{
    affine_from_correspondence, collinear, cross_ratio, embed_affine, line_intersect, line_through,
    perspective_normalize, rat, sign_det3, AffineMap2, PlanePoint,
};
use omstrata::linalg::row_echelon;
use omstrata::{Rational, Vector3};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=40).prop_map(|(n, d)| rat(n, d))
}

fn point() -> impl Strategy<Value = PlanePoint> {
    (rational(), rational()).prop_map(|(x, y)| PlanePoint::new(x, y))
}

fn vector() -> impl Strategy<Value = Vector3> {
    (rational(), rational(), rational()).prop_map(|(x, y, z)| Vector3::new(x, y, z))
}

fn affine_map() -> impl Strategy<Value = AffineMap2> {
    (
        rational(),
        rational(),
        rational(),
        rational(),
        rational(),
        rational(),
    )
        .prop_filter_map("singular", |(a, b, c, d, e, f)| {
            AffineMap2::new([[a, b], [c, d]], [e, f])
        })
}

fn collinear_quadruple() -> impl Strategy<Value = [PlanePoint; 4]> {
    (
        point(),
        point(),
        proptest::collection::btree_set(rational(), 4),
    )
        .prop_filter("direction is zero", |(p, q, _)| p != q)
        .prop_map(|(p, q, ts)| {
            let (dx, dy) = q.sub(&p);
            let pts: Vec<PlanePoint> = ts
                .into_iter()
                .map(|t| PlanePoint::new(&p.x + &t * &dx, &p.y + &t * &dy))
                .collect();
            pts.try_into().unwrap()
        })
}

fn triple() -> impl Strategy<Value = [PlanePoint; 3]> {
    (point(), point(), point())
        .prop_filter("collinear", |(a, b, c)| !collinear(a, b, c))
        .prop_map(|(a, b, c)| [a, b, c])
}

proptest! {
    #[test]
    fn cross_ratio_is_affine_invariant(quad in collinear_quadruple(), f in affine_map()) {
        let [a, b, c, d] = &quad;
        let before = cross_ratio(a, b, c, d).unwrap();
        let after = cross_ratio(&f.apply(a), &f.apply(b), &f.apply(c), &f.apply(d)).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn correspondence_reproduces_targets(src in triple(), f in affine_map()) {
        let dst = src.clone().map(|p| f.apply(&p));
        let g = affine_from_correspondence(&src, &dst).unwrap();
        for (s, d) in src.iter().zip(&dst) {
            prop_assert_eq!(&g.apply(s), d);
        }
        prop_assert_eq!(g.compose(&g.inverse()), AffineMap2::identity());
    }

    #[test]
    fn correspondence_system_has_one_solution(src in triple(), dst in triple()) {
        // unknowns (l00, l01, l10, l11, t0, t1); two equations per point pair
        let mut rows = Vec::new();
        for (s, d) in src.iter().zip(&dst) {
            let z = Rational::zero;
            let o = Rational::one;
            rows.push(vec![s.x.clone(), s.y.clone(), z(), z(), o(), z(), d.x.clone()]);
            rows.push(vec![z(), z(), s.x.clone(), s.y.clone(), z(), o(), d.y.clone()]);
        }
        let (rank, reduced) = row_echelon(rows);
        prop_assert_eq!(rank, 6);
        let solution: Vec<Rational> = reduced.iter().map(|r| r[6].clone()).collect();
        let g = affine_from_correspondence(&src, &dst).unwrap();
        let [[l00, l01], [l10, l11]] = g.linear().clone();
        let [t0, t1] = g.translation_part().clone();
        prop_assert_eq!(solution, vec![l00, l01, l10, l11, t0, t1]);
    }

    #[test]
    fn intersections_lie_on_both_lines(p in point(), q in point(), r in point(), s in point()) {
        prop_assume!(p != q && r != s);
        let (l1, l2) = (line_through(&p, &q).unwrap(), line_through(&r, &s).unwrap());
        if let Ok(x) = line_intersect(&l1, &l2) {
            prop_assert!(l1.contains(&x) && l2.contains(&x));
            prop_assert!(collinear(&p, &q, &x) && collinear(&r, &s, &x));
        }
    }

    #[test]
    fn sign_det3_is_alternating(u in vector(), v in vector(), w in vector()) {
        let s = sign_det3(&u, &v, &w);
        prop_assert_eq!(sign_det3(&v, &u, &w), -s);
        prop_assert_eq!(sign_det3(&u, &w, &v), -s);
        prop_assert_eq!(sign_det3(&w, &v, &u), -s);
        prop_assert_eq!(sign_det3(&v, &w, &u), s);
    }

    #[test]
    fn positive_scaling_keeps_orientation(u in vector(), v in vector(), w in vector(), l in positive()) {
        prop_assert_eq!(sign_det3(&u.scale(&l), &v, &w), sign_det3(&u, &v, &w));
    }

    #[test]
    fn perspective_round_trips(p in point(), v in vector()) {
        prop_assert_eq!(perspective_normalize(&embed_affine(&p)).unwrap(), p);
        if v.z > Rational::zero() {
            let z = v.z.clone();
            prop_assert_eq!(embed_affine(&perspective_normalize(&v).unwrap()), v.scale(&(Rational::one() / z)));
        } else {
            prop_assert!(perspective_normalize(&v).is_err());
        }
    }
}
