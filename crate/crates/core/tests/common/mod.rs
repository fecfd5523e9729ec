//! Shared fixtures and seeded random corpora for the integration suites.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cbb_core::context::{Block, Ctx, VarContext};
use cbb_core::domain::{Rat, QQ};
use cbb_core::monomial::Monomial;
use cbb_core::parse::parse_system;
use cbb_core::poly::Poly;
use cbb_core::SystemFile;

pub const EXAMPLE_SYSTEM: &str = "\
main_vars x y
params z
order deglex
poly x^2 - z^2 - 6x + 4z + 5
poly 3y^2 + z^2 - 12y - 4z + 12
poly z^3 - 8z^2 + 19z - 12
poly x^2 z^3 - 8x^2 z^2 + 19x^2 z + x z^2 - 12x^2 - 4x z - z^2 + 3x + 4z - 3
poly x^2 z^3 - 8x^2 z^2 + 19x^2 z + y z^2 - 12x^2 - 4y z - 2z^2 + 3y + 8z - 6
";

pub fn example_system() -> SystemFile {
    parse_system(EXAMPLE_SYSTEM).expect("fixture parses")
}

pub fn rat(n: i64) -> Rat {
    Rat::new(n.into(), 1.into())
}

pub fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    let num = rng.gen_range(-5i64..=5);
    let den = *[1i64, 1, 1, 2, 3].get(rng.gen_range(0..5)).unwrap();
    Rat::new(num.into(), den.into())
}

fn nonzero_small_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let r = small_rat(rng);
        if r != rat(0) {
            return r;
        }
    }
}

/// A random monomial over `nvars` variables with total degree at most
/// `max_deg`.
pub fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32) -> Monomial {
    let mut exps = vec![0u32; nvars];
    let mut budget = rng.gen_range(0..=max_deg);
    while budget > 0 {
        exps[rng.gen_range(0..nvars)] += 1;
        budget -= 1;
    }
    Monomial::from_exponents(exps)
}

/// A random polynomial over the rationals in the given block.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    ctx: &Ctx,
    block: Block,
    max_deg: u32,
    max_terms: usize,
) -> Poly<Rat> {
    let nvars = ctx.block_len(block);
    let k = rng.gen_range(1..=max_terms);
    let terms: Vec<(Monomial, Rat)> = (0..k)
        .map(|_| (random_monomial(rng, nvars, max_deg), small_rat(rng)))
        .collect();
    Poly::from_terms(&QQ, ctx, block, terms)
}

/// A zero-dimensional generating set over main variables only: one
/// generator per variable with leading pure power `x_i^{d_i}` and a tail
/// of strictly smaller degree, plus up to one extra random polynomial.
/// The pure powers land in the leading-term ideal, so the quotient is
/// finite by construction.
pub fn random_zero_dim_system(rng: &mut ChaCha8Rng, seed_tag: u64) -> (Ctx, Vec<Poly<Rat>>) {
    let nvars = rng.gen_range(1..=3usize);
    let names: Vec<String> = ["x", "y", "w"]
        .iter()
        .take(nvars)
        .map(|s| s.to_string())
        .collect();
    let ctx = VarContext::new(names, Vec::<String>::new()).expect("ctx");
    let mut gens = Vec::new();
    for i in 0..nvars {
        let d = rng.gen_range(1..=3u32);
        let mut terms = vec![(Monomial::var_pow(i, d), rat(1))];
        for _ in 0..rng.gen_range(0..=2) {
            let m = random_monomial(rng, nvars, d.saturating_sub(1));
            terms.push((m, small_rat(rng)));
        }
        gens.push(Poly::from_terms(&QQ, &ctx, Block::Main, terms));
    }
    if seed_tag.is_multiple_of(3) {
        let extra = random_poly(rng, &ctx, Block::Main, 2, 3);
        if !extra.is_zero() {
            gens.push(extra);
        }
    }
    (ctx, gens)
}

/// A zero-dimensional parametric system with a rational parameter
/// variety by construction: an eliminant with chosen rational roots, one
/// generator per main variable with a parameter-free pure power lead and
/// parameter-polynomial tails, and optional extras that vanish on part
/// or all of the variety to exercise the coloring.
pub fn random_parametric_system(rng: &mut ChaCha8Rng) -> (Ctx, Vec<Poly<Rat>>) {
    let n_main = rng.gen_range(1..=2usize);
    let m_params = rng.gen_range(1..=2usize);
    let main_names: Vec<String> = ["x", "y"]
        .iter()
        .take(n_main)
        .map(|s| s.to_string())
        .collect();
    let param_names: Vec<String> = ["u", "v"]
        .iter()
        .take(m_params)
        .map(|s| s.to_string())
        .collect();
    let ctx = VarContext::new(main_names, param_names).expect("ctx");
    let n = ctx.n_main();

    // distinct rational variety coordinates for the first parameter
    let mut roots: Vec<Rat> = Vec::new();
    while roots.len() < rng.gen_range(1..=3usize) {
        let r = small_rat(rng);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }

    let u = |i: usize| Monomial::var(n + i);
    let lin = |i: usize, c: &Rat| {
        Poly::from_terms(
            &QQ,
            &ctx,
            Block::Full,
            [(u(i), rat(1)), (Monomial::one(), -c.clone())],
        )
    };
    // eliminant in the first parameter, occasionally with a square factor
    let mut elim = Poly::constant(&QQ, &ctx, Block::Full, rat(1));
    for (i, r) in roots.iter().enumerate() {
        elim = elim.mul(&QQ, &lin(0, r));
        if i == 0 && rng.gen_bool(0.25) {
            elim = elim.mul(&QQ, &lin(0, r));
        }
    }
    let mut gens = vec![elim.clone()];
    if m_params == 2 {
        // v - g(u) keeps the variety triangular and rational
        let a = small_rat(rng);
        let b = small_rat(rng);
        let g = Poly::from_terms(&QQ, &ctx, Block::Full, [(u(0), a), (Monomial::one(), b)]);
        let rel = Poly::from_terms(&QQ, &ctx, Block::Full, [(u(1), rat(1))]).sub(&QQ, &g);
        gens.push(rel);
    }

    // one generator per main variable: x_i^d + parameter-coefficient tail
    for i in 0..n_main {
        let d = rng.gen_range(1..=3u32);
        let mut p = Poly::from_terms(&QQ, &ctx, Block::Full, [(Monomial::var_pow(i, d), rat(1))]);
        for e in 0..d {
            if rng.gen_bool(0.6) {
                let coeff = if rng.gen_bool(0.4) {
                    // vanishes at the first variety coordinate
                    lin(0, &roots[0]).scalar_mul(&QQ, &nonzero_small_rat(rng))
                } else {
                    let mut c = Poly::constant(&QQ, &ctx, Block::Full, nonzero_small_rat(rng));
                    if rng.gen_bool(0.5) {
                        c = c.mul(
                            &QQ,
                            &Poly::from_terms(&QQ, &ctx, Block::Full, [(u(0), rat(1))]),
                        );
                    }
                    c
                };
                let term =
                    Poly::from_terms(&QQ, &ctx, Block::Full, [(Monomial::var_pow(i, e), rat(1))]);
                p = p.add(&QQ, &coeff.mul(&QQ, &term));
            }
        }
        gens.push(p);
    }

    // extras exercising all-green drops and mixed coloring
    if rng.gen_bool(0.5) {
        let extra = random_poly(rng, &ctx, Block::Full, 2, 2);
        gens.push(elim.mul(&QQ, &extra));
    }
    if rng.gen_bool(0.35) && roots.len() > 1 {
        let extra = random_poly(rng, &ctx, Block::Full, 1, 2);
        gens.push(lin(0, &roots[0]).mul(&QQ, &extra));
    }
    let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
    (ctx, gens)
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
