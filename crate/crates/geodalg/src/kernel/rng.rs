//! Seeded randomness for specialization points: small-height rationals keep
//! exact arithmetic bounded while still separating unequal polynomials.

use super::poly::{LaurentPoly, Mono};
use super::Rat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero rational with numerator and denominator of height <= 97.
pub fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = loop {
        let n = rng.gen_range(-97i64..=97);
        if n != 0 {
            break n;
        }
    };
    let den = rng.gen_range(1i64..=97);
    Rat::new(num.into(), den.into())
}

/// Strictly positive small rational (evaluation points for u = exp(Z/2)).
pub fn small_positive_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.gen_range(1i64..=97);
    let den = rng.gen_range(1i64..=97);
    Rat::new(num.into(), den.into())
}

/// Random sparse Laurent polynomial for property tests.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: u32, max_terms: usize, max_exp: i32) -> LaurentPoly {
    let t = rng.gen_range(1..=max_terms);
    let mut p = LaurentPoly::zero();
    for _ in 0..t {
        let mut pairs = Vec::new();
        for v in 0..nvars {
            if rng.gen_bool(0.6) {
                let e = rng.gen_range(-max_exp..=max_exp);
                if e != 0 {
                    pairs.push((v, e));
                }
            }
        }
        p.add_term(Mono::from_pairs(&pairs), small_rat(rng));
    }
    p
}
