#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use omstrata::geometry::{collinear, rat, AffineMap2, PlanePoint};
use omstrata::grassmann::Subspace;
use omstrata::linalg;
use omstrata::{LabeledArrangement, Rational, Vector3};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Small-height rational; the narrow range makes coincidences common.
pub fn rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

pub fn positive_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(1..=50), rng.gen_range(1..=50))
}

pub fn vector(rng: &mut ChaCha8Rng, bound: i64) -> Vector3 {
    Vector3::new(
        rational(rng, bound),
        rational(rng, bound),
        rational(rng, bound),
    )
}

pub fn point(rng: &mut ChaCha8Rng, bound: i64) -> PlanePoint {
    PlanePoint::new(rational(rng, bound), rational(rng, bound))
}

/// Spanning arrangement of `3..=max_len` vectors; zero vectors and parallel
/// pairs occur with noticeable frequency.
pub fn spanning_arrangement(rng: &mut ChaCha8Rng, max_len: usize) -> LabeledArrangement {
    loop {
        let n = rng.gen_range(3..=max_len);
        let vectors: Vec<Vector3> = (0..n).map(|_| vector(rng, 2)).collect();
        let arr = LabeledArrangement::indexed(vectors);
        if arr.rank() == 3 {
            return arr;
        }
    }
}

pub fn subspace(rng: &mut ChaCha8Rng, ambient: usize) -> Subspace {
    loop {
        let rows: Vec<Vec<Rational>> = (0..3)
            .map(|_| (0..ambient).map(|_| rational(rng, 3)).collect())
            .collect();
        if linalg::rank(&rows) == 3 {
            return Subspace::new(rows.try_into().unwrap()).unwrap();
        }
    }
}

pub fn invertible3(rng: &mut ChaCha8Rng) -> [[Rational; 3]; 3] {
    loop {
        let m: [[Rational; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| rational(rng, 4)));
        if linalg::det3(&m) != rat(0, 1) {
            return m;
        }
    }
}

pub fn affine_map(rng: &mut ChaCha8Rng) -> AffineMap2 {
    loop {
        let linear = [
            [rational(rng, 5), rational(rng, 5)],
            [rational(rng, 5), rational(rng, 5)],
        ];
        if let Some(f) = AffineMap2::new(linear, [rational(rng, 9), rational(rng, 9)]) {
            return f;
        }
    }
}

/// Four distinct points on a random line, in random order along it.
pub fn collinear_quadruple(rng: &mut ChaCha8Rng) -> [PlanePoint; 4] {
    let base = point(rng, 9);
    let dir = loop {
        let d = (rational(rng, 5), rational(rng, 5));
        if d != (rat(0, 1), rat(0, 1)) {
            break d;
        }
    };
    let mut params: Vec<Rational> = Vec::new();
    while params.len() < 4 {
        let t = rational(rng, 12);
        if !params.contains(&t) {
            params.push(t);
        }
    }
    std::array::from_fn(|i| {
        PlanePoint::new(&base.x + &params[i] * &dir.0, &base.y + &params[i] * &dir.1)
    })
}

pub fn noncollinear_triple(rng: &mut ChaCha8Rng) -> [PlanePoint; 3] {
    loop {
        let t = [point(rng, 9), point(rng, 9), point(rng, 9)];
        if !collinear(&t[0], &t[1], &t[2]) {
            return t;
        }
    }
}
