//! Acceptance suite: the worked example end to end plus seeded random
//! corpora for the structural theorems. Run with `-- --nocapture` to see
//! one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;

use cbb_core::border::{check_border_basis, gb_to_border_basis, in_monomial_ideal};
use cbb_core::compsys::{
    compress_system, compute_border_system, compute_cbb, pointwise_groebner_system,
    reduced_gs_to_bs, specialize_cbb, verify_cbb, GenericBranchPayload, VanishingMode,
};
use cbb_core::context::Block;
use cbb_core::domain::{Rat, QQ};
use cbb_core::groebner::{
    elimination_ideal, is_zero_dimensional, quotient_basis, reduced_groebner_basis,
};
use cbb_core::monomial::Monomial;
use cbb_core::order::TermOrder;
use cbb_core::param::{flatten_param_coeffs, project_to_param, split_param_coeffs, PPoly};
use cbb_core::parametric::{rational_variety, Condition, Specialization};
use cbb_core::parse::{parse_poly, parse_system};
use cbb_core::poly::Poly;
use cbb_core::render::{render_border_system, render_cbb, render_poly};

use common::{example_system, rat, seeded, EXAMPLE_SYSTEM};

fn criterion(n: usize, desc: &str, f: impl FnOnce() + std::panic::UnwindSafe) {
    let result = std::panic::catch_unwind(f);
    match &result {
        Ok(()) => println!("ACCEPTANCE {n}: PASS - {desc}"),
        Err(_) => println!("ACCEPTANCE {n}: FAIL - {desc}"),
    }
    if let Err(e) = result {
        std::panic::resume_unwind(e);
    }
}

/// True when `a == q * b` for some nonzero rational `q`.
fn rational_multiple(a: &Poly<PPoly>, b: &Poly<PPoly>) -> bool {
    let fa = flatten_param_coeffs(a);
    let fb = flatten_param_coeffs(b);
    if fa.is_zero() || fb.is_zero() {
        return fa.is_zero() == fb.is_zero();
    }
    let Some((m0, c0)) = fa.terms().next() else {
        return false;
    };
    let Some(d0) = fb.coeff(m0) else { return false };
    let q = c0 / d0;
    fb.scalar_mul(&QQ, &q) == fa
}

fn sigma(values: &[i64]) -> Specialization {
    Specialization::new(values.iter().map(|&v| rat(v)).collect())
}

#[test]
fn criterion_1_eliminant_and_variety() {
    criterion(1, "elimination ideal and its rational variety", || {
        let sf = example_system();
        let elim = elimination_ideal(&sf.polys).unwrap();
        let expected =
            project_to_param(&parse_poly("z^3 - 8z^2 + 19z - 12", &sf.ctx, 1, 1).unwrap()).unwrap();
        assert_eq!(elim, vec![expected]);
        let variety = rational_variety(&elim).unwrap();
        assert_eq!(variety, vec![sigma(&[1]), sigma(&[3]), sigma(&[4])]);
    });
}

#[test]
fn criterion_2_border_system_branches() {
    criterion(
        2,
        "compressed border system, golden text and branch data",
        || {
            let sf = example_system();
            let bs = compute_border_system(&sf.polys, sf.order).unwrap();

            // golden file, byte for byte
            let golden = include_str!("golden/border_system.txt");
            assert_eq!(render_border_system(&bs), golden);

            assert_eq!(bs.branches.len(), 3);
            let b13 = &bs.branches[0];
            let b4 = &bs.branches[1];
            let generic = &bs.branches[2];

            assert_eq!(
                b13.condition,
                Condition::points(vec![sigma(&[1]), sigma(&[3])])
            );
            assert_eq!(b4.condition, Condition::points(vec![sigma(&[4])]));
            assert_eq!(
                generic.condition,
                Condition::complement(vec![sigma(&[1]), sigma(&[3]), sigma(&[4])])
            );

            let mono = |s: &str| -> Monomial {
                parse_poly(s, &sf.ctx, 1, 1)
                    .unwrap()
                    .support()
                    .next()
                    .unwrap()
                    .clone()
            };
            let oi_of =
                |names: &[&str]| -> BTreeSet<Monomial> { names.iter().map(|s| mono(s)).collect() };
            assert_eq!(
                b13.order_ideal.iter().cloned().collect::<BTreeSet<_>>(),
                oi_of(&["1", "x", "y", "x y"])
            );
            assert_eq!(
                b4.order_ideal.iter().cloned().collect::<BTreeSet<_>>(),
                oi_of(&["1"])
            );
            assert!(generic.order_ideal.is_empty());

            // branch bases match the published data up to nonzero rational
            // scaling per element
            let expect_13 = [
                "y^2 - 4y + 1/3(z^2 - 4z + 12)",
                "x^2 - 6x - (z^2 - 4z - 5)",
                "x y^2 - 4x y + 1/3x(z^2 - 4z + 12)",
                "x^2 y - 6x y - y(z^2 - 4z - 5)",
            ];
            for (el, text) in b13.basis.iter().zip(expect_13) {
                let expected = split_param_coeffs(&parse_poly(text, &sf.ctx, 1, 1).unwrap());
                assert!(
                    rational_multiple(el, &expected),
                    "branch {{1,3}} element {text}"
                );
            }
            let expect_4 = ["(z - 4)x^2 + y - 2", "(z - 4)x^2 + x - 1"];
            for (el, text) in b4.basis.iter().zip(expect_4) {
                let expected = split_param_coeffs(&parse_poly(text, &sf.ctx, 1, 1).unwrap());
                assert!(
                    rational_multiple(el, &expected),
                    "branch {{4}} element {text}"
                );
            }
            // the generic branch carries the generators themselves
            let f_split: Vec<Poly<PPoly>> = sf.polys.iter().map(split_param_coeffs).collect();
            assert_eq!(generic.basis, f_split);
        },
    );
}

#[test]
fn criterion_3_comprehensive_basis() {
    criterion(
        3,
        "comprehensive basis: exact linear-univariate list, verified squares mode",
        || {
            let sf = example_system();
            let bs = compute_border_system(&sf.polys, sf.order).unwrap();

            let cbb_lin = compute_cbb(&bs, VanishingMode::LinearUnivariate).unwrap();
            let golden = include_str!("golden/cbb_linear_univariate.txt");
            assert_eq!(render_cbb(&cbb_lin), golden);

            let expected: Vec<Poly<PPoly>> = [
                "(z-1)(z-3)((z-4)x^2 + y - 2)",
                "(z-1)(z-3)((z-4)x^2 + x - 1)",
                "(z-4)(y^2 - 4y + 1/3(z^2 - 4z + 12))",
                "(z-4)(x^2 - 6x - (z^2 - 4z - 5))",
                "(z-4)(x y^2 - 4x y + 1/3x(z^2 - 4z + 12))",
                "(z-4)(x^2 y - 6x y - y(z^2 - 4z - 5))",
                "z^3 - 8z^2 + 19z - 12",
            ]
            .iter()
            .map(|s| split_param_coeffs(&parse_poly(s, &sf.ctx, 1, 1).unwrap()))
            .collect();
            assert_eq!(cbb_lin.elements.len(), 7);
            for e in &expected {
                assert!(
                    cbb_lin.elements.contains(e),
                    "missing element {}",
                    render_poly(&flatten_param_coeffs(e), sf.order)
                );
            }

            // squares mode verifies on the variety, at z=7, and at 25 seeded
            // random complement points
            let cbb_sq = compute_cbb(&bs, VanishingMode::Squares).unwrap();
            let report = verify_cbb(&cbb_sq, &sf.polys, 25, 0);
            assert!(report.all_ok(), "squares-mode report: {report:?}");
            assert_eq!(
                report
                    .entries
                    .iter()
                    .filter(|e| e.region == "complement")
                    .count(),
                25
            );
            let at7 = specialize_cbb(&cbb_sq, &sigma(&[7])).unwrap();
            assert!(at7.unit);
            // cross-check: the generators themselves specialize to <1> at 7
            let gens7: Vec<_> = cbb_core::compsys::specialize_generators(&sf.polys, &sigma(&[7]))
                .unwrap()
                .into_iter()
                .filter(|f| !f.is_zero())
                .collect();
            let gb7 = reduced_groebner_basis(&QQ, &gens7, sf.order).unwrap();
            assert!(gb7.is_unit_ideal(&QQ));
        },
    );
}

#[test]
fn criterion_4_specialization_checks() {
    criterion(
        4,
        "specializations of the comprehensive basis at 4, 7, 3",
        || {
            let sf = example_system();
            let bs = compute_border_system(&sf.polys, sf.order).unwrap();
            let cbb = compute_cbb(&bs, VanishingMode::LinearUnivariate).unwrap();
            let main_poly = |s: &str| -> Poly<Rat> {
                let flat = parse_poly(s, &sf.ctx, 1, 1).unwrap();
                cbb_core::param::specialize_poly(&split_param_coeffs(&flat), &[rat(0)]).unwrap()
            };

            // z = 4: order ideal {1}, basis generating <x - 1, y - 2>
            let at4 = specialize_cbb(&cbb, &sigma(&[4])).unwrap();
            assert!(!at4.unit);
            assert_eq!(
                at4.order_ideal.iter().cloned().collect::<Vec<_>>(),
                vec![Monomial::one()]
            );
            let gb_got = reduced_groebner_basis(&QQ, &at4.elements, sf.order).unwrap();
            let gb_expect =
                reduced_groebner_basis(&QQ, &[main_poly("x - 1"), main_poly("y - 2")], sf.order)
                    .unwrap();
            assert_eq!(gb_got, gb_expect);

            // z = 7: the unit ideal
            let at7 = specialize_cbb(&cbb, &sigma(&[7])).unwrap();
            assert!(at7.unit);
            assert!(at7.order_ideal.is_empty());
            assert_eq!(at7.elements, vec![main_poly("1")]);

            // z = 3: the four-element branch basis specialized; the branch
            // multiplier evaluates to -1 there
            let at3 = specialize_cbb(&cbb, &sigma(&[3])).unwrap();
            assert_eq!(at3.elements.len(), 4);
            let expect: Vec<Poly<Rat>> = [
                "y^2 - 4y + 3",
                "x^2 - 6x + 8",
                "x y^2 - 4x y + 3x",
                "x^2 y - 6x y + 8y",
            ]
            .iter()
            .map(|s| main_poly(s).neg(&QQ))
            .collect();
            assert_eq!(at3.elements, expect);
            assert_eq!(
                at3.order_ideal.len(),
                4,
                "order ideal recovered from surviving marks"
            );
        },
    );
}

#[test]
fn criterion_5_border_form_ideal_equals_leading_term_ideal() {
    criterion(
        5,
        "marked border monomials generate the leading-term ideal (50 seeded ideals)",
        || {
            let mut passes = 0;
            for seed in 0..50u64 {
                let mut rng = seeded(500 + seed);
                let (_ctx, gens) = common::random_zero_dim_system(&mut rng, seed);
                let n = gens[0].ctx().n_main();
                let gb = reduced_groebner_basis(&QQ, &gens, TermOrder::DEGLEX).unwrap();
                let bb = gb_to_border_basis(&QQ, &gb, n).unwrap();
                let lms = gb.leading_monomials(&QQ);
                let marks_cover = lms.iter().all(|lm| in_monomial_ideal(lm, &bb.marks));
                let lms_cover = bb.marks.iter().all(|mk| in_monomial_ideal(mk, &lms));
                assert!(marks_cover && lms_cover, "seed {seed}");
                passes += 1;
            }
            assert_eq!(passes, 50);
        },
    );
}

#[test]
fn criterion_6_uniqueness_and_oracle() {
    criterion(
        6,
        "border-basis oracle accepts, rejects perturbations, permutation-invariant",
        || {
            for seed in 0..50u64 {
                let mut rng = seeded(600 + seed);
                let (ctx, gens) = common::random_zero_dim_system(&mut rng, seed);
                let n = ctx.n_main();
                let gb = reduced_groebner_basis(&QQ, &gens, TermOrder::DEGLEX).unwrap();
                let bb = gb_to_border_basis(&QQ, &gb, n).unwrap();

                assert!(
                    check_border_basis(&bb, &gens, n, TermOrder::DEGLEX, false).is_ok(),
                    "seed {seed} accept"
                );

                // generator order must not matter
                let mut permuted = gens.clone();
                permuted.reverse();
                let mid = permuted.len() / 2;
                permuted.rotate_left(mid);
                let gb2 = reduced_groebner_basis(&QQ, &permuted, TermOrder::DEGLEX).unwrap();
                assert_eq!(gb, gb2, "seed {seed} permutation");
                assert_eq!(bb, gb_to_border_basis(&QQ, &gb2, n).unwrap());

                // perturbing any single coefficient by +1 must be rejected
                for i in 0..bb.elements.len() {
                    for m in bb.elements[i].support().cloned().collect::<Vec<_>>() {
                        let mut broken = bb.clone();
                        let bump = Poly::term(&QQ, &ctx, Block::Main, m, rat(1));
                        broken.elements[i] = broken.elements[i].add(&QQ, &bump);
                        assert!(
                            check_border_basis(&broken, &gens, n, TermOrder::DEGLEX, false)
                                .is_err(),
                            "seed {seed} perturbation accepted"
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_7_route_equivalence() {
    criterion(
        7,
        "Gröbner-system route equals the direct border-system route",
        || {
            let sf = example_system();
            let direct = compute_border_system(&sf.polys, sf.order).unwrap();
            let gs =
                pointwise_groebner_system(&sf.polys, sf.order, GenericBranchPayload::Generators)
                    .unwrap();
            let via_gs = compress_system(&reduced_gs_to_bs(&gs).unwrap());
            assert_eq!(direct, via_gs, "worked example");

            for seed in 0..20u64 {
                let mut rng = seeded(700 + seed);
                let (_ctx, gens) = common::random_parametric_system(&mut rng);
                let direct = compute_border_system(&gens, TermOrder::DEGLEX).unwrap();
                let gs = pointwise_groebner_system(
                    &gens,
                    TermOrder::DEGLEX,
                    GenericBranchPayload::Generators,
                )
                .unwrap();
                let via_gs = compress_system(&reduced_gs_to_bs(&gs).unwrap());
                assert_eq!(direct, via_gs, "seed {seed}");
            }
        },
    );
}

#[test]
fn criterion_8_elimination_stays_zero_dimensional() {
    criterion(
        8,
        "parameter elimination of zero-dimensional ideals is zero-dimensional (20 seeds)",
        || {
            let mut passes = 0;
            for seed in 0..20u64 {
                let mut rng = seeded(800 + seed);
                let (ctx, gens) = common::random_parametric_system(&mut rng);
                let m = ctx.n_params();
                let elim = elimination_ideal(&gens).unwrap();
                assert!(!elim.is_empty(), "seed {seed}");
                let gb = reduced_groebner_basis(&QQ, &elim, TermOrder::LEX).unwrap();
                assert!(is_zero_dimensional(&QQ, &gb, m), "seed {seed}");
                passes += 1;
            }
            assert_eq!(passes, 20);
        },
    );
}

/// Independent staircase oracle: enumerate the full exponent box bounded
/// by the pure-power leading monomials and filter by divisibility.
fn staircase_count_oracle(lms: &[Monomial], nvars: usize) -> usize {
    if lms.iter().any(Monomial::is_one) {
        return 0;
    }
    let bounds: Vec<u32> = (0..nvars)
        .map(|v| {
            lms.iter()
                .filter(|m| m.exp(v) >= 1 && (0..m.len()).all(|i| i == v || m.exp(i) == 0))
                .map(|m| m.exp(v))
                .min()
                .expect("zero-dimensional")
        })
        .collect();
    let mut count = 0usize;
    let mut stack = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == nvars {
            let mono = Monomial::from_exponents(prefix.iter().copied());
            if !lms.iter().any(|l| l.divides(&mono)) {
                count += 1;
            }
            continue;
        }
        let v = prefix.len();
        for e in 0..bounds[v] {
            let mut next = prefix.clone();
            next.push(e);
            stack.push(next);
        }
    }
    count
}

#[test]
fn criterion_9_quotient_dimension() {
    criterion(
        9,
        "quotient basis size equals the staircase enumeration; fixture branch has 4",
        || {
            for seed in 0..50u64 {
                let mut rng = seeded(900 + seed);
                let (ctx, gens) = common::random_zero_dim_system(&mut rng, seed);
                let n = ctx.n_main();
                let gb = reduced_groebner_basis(&QQ, &gens, TermOrder::DEGLEX).unwrap();
                let qb = quotient_basis(&QQ, &gb, n).unwrap();
                let oracle = staircase_count_oracle(&gb.leading_monomials(&QQ), n);
                assert_eq!(qb.len(), oracle, "seed {seed}");
            }
            let sf = example_system();
            let bs = compute_border_system(&sf.polys, sf.order).unwrap();
            let branch = bs
                .branches
                .iter()
                .find(|b| b.condition.point_list().contains(&sigma(&[3])))
                .expect("branch containing z=3");
            assert_eq!(branch.order_ideal.len(), 4);
        },
    );
}

#[test]
fn criterion_10_parser_round_trip() {
    criterion(
        10,
        "parse/render identity over 1000 seeded polynomials; fixture file parses",
        || {
            use cbb_core::context::VarContext;
            let contexts = [
                VarContext::new(vec!["x"], Vec::<&str>::new()).unwrap(),
                VarContext::new(vec!["x", "y"], vec!["z"]).unwrap(),
                VarContext::new(vec!["x", "y", "w"], vec!["u", "v"]).unwrap(),
            ];
            let mut rng = seeded(1000);
            for i in 0..1000 {
                let ctx = &contexts[i % contexts.len()];
                let p = common::random_poly(&mut rng, ctx, Block::Full, 4, 6);
                let text = render_poly(&p, TermOrder::DEGLEX);
                let back = parse_poly(&text, ctx, 1, 1).unwrap();
                assert_eq!(back, p, "round trip failed for `{text}`");
            }

            let sf = parse_system(EXAMPLE_SYSTEM).unwrap();
            assert_eq!(sf.order, TermOrder::DEGLEX);
            assert_eq!(sf.polys.len(), 5);
            assert_eq!(sf.ctx.main_names(), &["x".to_string(), "y".to_string()]);
            assert_eq!(sf.ctx.param_names(), &["z".to_string()]);
            // the fixture file on disk is the same system
            let disk = parse_system(include_str!("fixtures/example.system")).unwrap();
            assert_eq!(disk.polys, sf.polys);
        },
    );
}
