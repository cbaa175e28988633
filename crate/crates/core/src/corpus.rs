//! Seeded random inputs with known structure, for property suites and the
//! CLI's randomized verification.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::Polynomial;
use crate::rational::{rat, Rational};

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_int<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

fn nonzero_int<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let v = small_int(rng, bound);
        if v != 0 {
            return v;
        }
    }
}

/// Dense polynomial of exactly `deg` with integer coefficients in
/// `[-bound, bound]` and a nonzero leading coefficient.
pub fn random_poly<R: Rng>(rng: &mut R, deg: usize, bound: i64) -> Polynomial {
    let mut c: Vec<i64> = (0..deg).map(|_| small_int(rng, bound)).collect();
    c.push(nonzero_int(rng, bound));
    Polynomial::from_ints(&c)
}

/// Random pair `(F, G)` with `deg F = m`, `deg G = m - 1` and a planted
/// common factor of degree `gcd_deg` (which may be absorbed into a larger
/// accidental gcd, with vanishing probability).
pub fn random_pair<R: Rng>(rng: &mut R, m: usize, gcd_deg: usize) -> (Polynomial, Polynomial) {
    assert!(m >= gcd_deg + 2, "need room for the cofactors");
    let h = random_poly(rng, gcd_deg, 3);
    let a = random_poly(rng, m - gcd_deg, 5);
    let b = random_poly(rng, m - 1 - gcd_deg, 5);
    (&h * &a, &h * &b)
}

/// Degree of the gcd of `f` and `g`.
pub fn gcd_degree(f: &Polynomial, g: &Polynomial) -> usize {
    crate::poly::gcd(f, g).degree().unwrap_or(0)
}

fn is_squarefree(p: &Polynomial) -> bool {
    gcd_degree(p, &p.derivative()) == 0
}

/// `P = A^a * B^b` with `A`, `B` squarefree and coprime, `a, b` in
/// `{2, 3}` and `deg P <= max_deg`. Returns `(P, A, a, B, b)`.
pub fn multiplicity_poly<R: Rng>(rng: &mut R, max_deg: usize) -> (Polynomial, Polynomial, u32, Polynomial, u32) {
    assert!(max_deg >= 4, "A^2 B^2 needs degree 4");
    loop {
        let a = *[2u32, 3].choose(rng).unwrap();
        let b = *[2u32, 3].choose(rng).unwrap();
        let da = rng.gen_range(1..=(max_deg.saturating_sub(b as usize) / a as usize).clamp(1, 3));
        let rest = max_deg.saturating_sub(da * a as usize) / b as usize;
        if rest == 0 {
            continue;
        }
        let db = rng.gen_range(1..=rest.min(3));
        let pa = random_poly(rng, da, 4);
        let pb = random_poly(rng, db, 4);
        if !is_squarefree(&pa) || !is_squarefree(&pb) || gcd_degree(&pa, &pb) > 0 {
            continue;
        }
        let p = pa.pow(a) * pb.pow(b);
        if p.degree().unwrap() <= max_deg {
            return (p, pa, a, pb, b);
        }
    }
}

/// A polynomial with a known real-root count: `prod (x - r_i)^{m_i}`
/// times `prod (x^2 + c_j)` with distinct rational `r_i` and positive
/// rational `c_j`.
#[derive(Clone, Debug)]
pub struct RootCountCase {
    pub poly: Polynomial,
    pub roots: Vec<(Rational, u32)>,
    pub positive_quadratics: Vec<Rational>,
}

impl RootCountCase {
    pub fn expected(&self) -> i64 {
        self.roots.iter().map(|(_, m)| *m as i64).sum()
    }
}

pub fn root_count_case<R: Rng>(rng: &mut R, max_deg: usize) -> RootCountCase {
    let mut roots: Vec<(Rational, u32)> = Vec::new();
    let mut quads = Vec::new();
    let mut deg = 0;
    let n_roots = rng.gen_range(1..=4);
    while roots.len() < n_roots && deg < max_deg {
        let r = rat(small_int(rng, 6), rng.gen_range(1..=3));
        if roots.iter().any(|(s, _)| *s == r) {
            continue;
        }
        let m = rng.gen_range(1..=3).min((max_deg - deg) as u32);
        deg += m as usize;
        roots.push((r, m));
    }
    while deg + 2 <= max_deg && rng.gen_bool(0.5) {
        quads.push(rat(rng.gen_range(1..=9), rng.gen_range(1..=4)));
        deg += 2;
    }
    let mut poly = Polynomial::constant(rat(nonzero_int(rng, 5), rng.gen_range(1..=3)));
    for (r, m) in &roots {
        let lin = Polynomial::new(vec![-r.clone(), Rational::from_integer(1.into())]);
        poly = poly * lin.pow(*m);
    }
    for c in &quads {
        poly = poly * Polynomial::new(vec![c.clone(), Rational::from_integer(0.into()), Rational::from_integer(1.into())]);
    }
    RootCountCase {
        poly,
        roots,
        positive_quadratics: quads,
    }
}

/// `count` random rationals with small numerators and denominators, for
/// filling test matrices.
pub fn random_rationals<R: Rng>(rng: &mut R, count: usize) -> Vec<Rational> {
    (0..count)
        .map(|_| rat(small_int(rng, 9), rng.gen_range(1..=5)))
        .collect()
}
