//! Specializations, coloring and conditional bases.
//!
//! A specialization pins every parameter to a rational value. Conditional
//! computations run over k(U) with the zero test decided by evaluation at
//! the chosen point: vanishing (green) coefficients act as zero but stay
//! in the polynomials, so the output remains inside the original ideal.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::border::{gb_to_border_basis, BorderBasis, OrderIdeal};
use crate::context::Block;
use crate::domain::{Int, Rat, QQ};
use crate::error::{Error, Result};
use crate::groebner::{is_eff_zero, is_zero_dimensional, reduced_groebner_basis};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::param::{primitive_param_form, FracField, PFrac, ParamRing, SigmaFracField};
use crate::poly::Poly;

/// A rational parameter point; identifies the specialization homomorphism
/// sending each parameter to the corresponding coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Specialization {
    point: Vec<Rat>,
}

impl Specialization {
    pub fn new(point: Vec<Rat>) -> Self {
        Specialization { point }
    }

    pub fn values(&self) -> &[Rat] {
        &self.point
    }

    pub fn arity(&self) -> usize {
        self.point.len()
    }
}

/// A region of parameter space: a finite point set or the complement of
/// one, with the point list kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    Points(Vec<Specialization>),
    Complement(Vec<Specialization>),
}

impl Condition {
    pub fn points(mut pts: Vec<Specialization>) -> Self {
        pts.sort();
        pts.dedup();
        Condition::Points(pts)
    }

    pub fn complement(mut pts: Vec<Specialization>) -> Self {
        pts.sort();
        pts.dedup();
        Condition::Complement(pts)
    }

    pub fn point_list(&self) -> &[Specialization] {
        match self {
            Condition::Points(p) | Condition::Complement(p) => p,
        }
    }

    pub fn is_complement(&self) -> bool {
        matches!(self, Condition::Complement(_))
    }
}

/// Weispfenning-style term color at a specialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Red,
    Green,
}

/// A polynomial over k(U) with every term colored at a point. Point
/// conditions decide every coefficient, so no third color occurs.
#[derive(Debug, Clone)]
pub struct ColoredPolynomial {
    pub body: Poly<PFrac>,
    pub colors: BTreeMap<Monomial, Color>,
    pub sigma: Specialization,
}

/// Colors every term of `p` at `sigma`; `Ok(None)` means the polynomial
/// is all green and drops out of the conditional computation.
pub fn color_polynomial(
    p: &Poly<PFrac>,
    sigma: &Specialization,
) -> Result<Option<ColoredPolynomial>> {
    let field = FracField::new(p.ctx());
    let mut colors = BTreeMap::new();
    let mut any_red = false;
    for (m, c) in p.terms() {
        let v = field.eval(c, sigma.values())?;
        let color = if v.is_zero() {
            Color::Green
        } else {
            Color::Red
        };
        any_red |= color == Color::Red;
        colors.insert(m.clone(), color);
    }
    if !any_red {
        return Ok(None);
    }
    Ok(Some(ColoredPolynomial {
        body: p.clone(),
        colors,
        sigma: sigma.clone(),
    }))
}

// ---------------------------------------------------------------------
// Rational points of a zero-dimensional parameter ideal
// ---------------------------------------------------------------------

/// All rational points of the variety of a zero-dimensional ideal in
/// k[U], by lex triangularization with exact back-substitution.
///
/// If any branch leaves a univariate eliminant factor without rational
/// roots, that factor names a variety point with an irrational
/// coordinate, so the instance is rejected as unsupported rather than
/// silently truncated.
pub fn rational_variety(gens: &[Poly<Rat>]) -> Result<Vec<Specialization>> {
    let first = gens.first().ok_or(Error::NotZeroDimensional)?;
    assert_eq!(first.block(), Block::Param);
    let ctx = first.ctx().clone();
    let ring = ParamRing::new(&ctx);
    let m = ctx.n_params();
    let nonzero: Vec<Poly<Rat>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err(Error::NotZeroDimensional);
    }
    let mut points = solve_triangular(&ring, nonzero.clone(), m)?;
    points.retain(|p| {
        nonzero
            .iter()
            .all(|g| ring.eval(g, p).expect("full assignment").is_zero())
    });
    points.sort();
    points.dedup();
    Ok(points.into_iter().map(Specialization::new).collect())
}

fn solve_triangular(ring: &ParamRing, gens: Vec<Poly<Rat>>, nvars: usize) -> Result<Vec<Vec<Rat>>> {
    if nvars == 0 {
        // only constants can remain; a nonzero one kills the branch
        return Ok(if gens.iter().any(|g| !g.is_zero()) {
            vec![]
        } else {
            vec![vec![]]
        });
    }
    let gb = reduced_groebner_basis(&QQ, &gens, TermOrder::LEX)?;
    if gb.is_unit_ideal(&QQ) {
        return Ok(vec![]);
    }
    let var = nvars - 1;
    let uni = gb
        .gens
        .iter()
        .find(|g| g.support().all(|mm| mm.supported_in(var..var + 1)))
        .ok_or(Error::NotZeroDimensional)?;
    let roots = rational_roots_univariate(uni, var)?;
    let mut out = Vec::new();
    for r in roots {
        let subbed: Vec<Poly<Rat>> = gb
            .gens
            .iter()
            .map(|g| ring.eval_var(g, var, &r))
            .filter(|g| !g.is_zero())
            .collect();
        let tails = if subbed.is_empty() {
            if var == 0 {
                vec![vec![]]
            } else {
                return Err(Error::NotZeroDimensional);
            }
        } else {
            solve_triangular(ring, subbed, var)?
        };
        for mut t in tails {
            t.push(r.clone());
            out.push(t);
        }
    }
    Ok(out)
}

/// Distinct rational roots of a univariate polynomial, or an error when a
/// nonconstant factor without rational roots remains.
pub fn rational_roots_univariate(p: &Poly<Rat>, var: usize) -> Result<Vec<Rat>> {
    let deg = p.support().map(|m| m.exp(var)).max().unwrap_or(0) as usize;
    let mut coeffs: Vec<Rat> = (0..=deg)
        .map(|e| {
            p.coeff(&Monomial::var_pow(var, e as u32))
                .cloned()
                .unwrap_or_else(Rat::zero)
        })
        .collect();
    let mut roots: Vec<Rat> = Vec::new();

    // root at zero
    while coeffs.len() > 1 && coeffs[0].is_zero() {
        coeffs.remove(0);
        if !roots.contains(&Rat::zero()) {
            roots.push(Rat::zero());
        }
    }

    'deflate: while coeffs.len() > 1 {
        // integer form for the candidate enumeration
        let mut den_lcm = Int::one();
        for c in &coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<Int> = coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        for p_div in divisors(&a0) {
            for q_div in divisors(&an) {
                for sign in [1i64, -1] {
                    let cand = Rat::new(&p_div * Int::from(sign), q_div.clone());
                    if horner(&coeffs, &cand).is_zero() {
                        coeffs = deflate(&coeffs, &cand);
                        if !roots.contains(&cand) {
                            roots.push(cand);
                        }
                        continue 'deflate;
                    }
                }
            }
        }
        return Err(Error::NonRationalPoint);
    }
    roots.sort();
    Ok(roots)
}

fn horner(coeffs: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Synthetic division by (u - r); the input must vanish at `r`.
fn deflate(coeffs: &[Rat], r: &Rat) -> Vec<Rat> {
    let n = coeffs.len();
    let mut out = vec![Rat::zero(); n - 1];
    let mut carry = Rat::zero();
    for i in (0..n - 1).rev() {
        carry = &coeffs[i + 1] + r * &carry;
        out[i] = carry.clone();
    }
    out
}

fn divisors(n: &Int) -> Vec<Int> {
    if n.is_zero() {
        // only used for nonzero trailing coefficients
        return vec![Int::one()];
    }
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = Int::one();
    let root = n.sqrt();
    while d <= root {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------
// Conditional border bases
// ---------------------------------------------------------------------

/// A conditional border basis over k(U): elements aligned with their
/// marked border monomials, ascending in the active order.
pub type ConditionalBasis = (OrderIdeal, Vec<Poly<PFrac>>, Vec<Monomial>);

/// The border-basis engine used per specialization. The default runs the
/// colored Buchberger/border route below; any implementation of the same
/// contract can replace it.
pub trait ConditionalBorderBasisAlgorithm {
    fn compute(
        &self,
        generators: &[Poly<PFrac>],
        sigma: &Specialization,
        ord: TermOrder,
    ) -> Result<ConditionalBasis>;
}

/// Term-order route: colored reduced Gröbner basis, then the unique
/// border basis from the quotient staircase.
#[derive(Debug, Clone, Copy, Default)]
pub struct TermOrderBorderBasis;

impl ConditionalBorderBasisAlgorithm for TermOrderBorderBasis {
    fn compute(
        &self,
        generators: &[Poly<PFrac>],
        sigma: &Specialization,
        ord: TermOrder,
    ) -> Result<ConditionalBasis> {
        conditional_border_basis(generators, sigma, ord)
    }
}

/// Computes the conditional border basis of `<generators>` at `sigma`.
///
/// All-green polynomials are dropped first; every later zero test and
/// leading-term selection is decided at `sigma`, so specializing the
/// output gives the unique border basis of the specialized ideal up to
/// nonzero scalars. When the specialized ideal is the unit ideal the
/// order ideal is empty and the single element specializes to a nonzero
/// constant.
pub fn conditional_border_basis(
    generators: &[Poly<PFrac>],
    sigma: &Specialization,
    ord: TermOrder,
) -> Result<ConditionalBasis> {
    let first = generators.first().ok_or(Error::NotZeroDimensional)?;
    let ctx = first.ctx().clone();
    let n = ctx.n_main();
    if sigma.arity() != ctx.n_params() {
        return Err(Error::ArityMismatch {
            expected: ctx.n_params(),
            got: sigma.arity(),
        });
    }
    let mut kept = Vec::new();
    for f in generators {
        // also surfaces pole errors before the colored engine runs
        if color_polynomial(f, sigma)?.is_some() {
            kept.push(f.clone());
        }
    }
    if kept.is_empty() {
        return Err(Error::NotZeroDimensional);
    }
    let dom = SigmaFracField::new(&ctx, sigma.values().to_vec());
    let gb = reduced_groebner_basis(&dom, &kept, ord)?;
    if !gb.is_unit_ideal(&dom) && !is_zero_dimensional(&dom, &gb, n) {
        return Err(Error::NotZeroDimensional);
    }
    let bb = gb_to_border_basis(&dom, &gb, n)?;
    Ok((bb.order_ideal, bb.elements, bb.marks))
}

/// Converts a conditional border basis over k(U) to scalar form in
/// k[U][X]: each element is cleared of denominators, divided by its
/// k[U]-content and sign-normalized at its marked border monomial.
pub fn to_scalar_basis(
    elements: &[Poly<PFrac>],
    marks: &[Monomial],
    order_ideal: &OrderIdeal,
) -> Result<BorderBasis<Poly<Rat>>> {
    if elements.len() != marks.len() {
        return Err(Error::ShapeViolation(
            "one mark per element required".into(),
        ));
    }
    let Some(first) = elements.first() else {
        return Err(Error::ShapeViolation("empty basis".into()));
    };
    let n = first.ctx().n_main();
    let border = order_ideal.border(n);
    let mark_set: std::collections::BTreeSet<Monomial> = marks.iter().cloned().collect();
    if mark_set.len() != marks.len() || mark_set != border {
        return Err(Error::ShapeViolation(
            "marked monomials must cover the border exactly".into(),
        ));
    }
    // element order mirrors the processing order of the border monomials
    let pairs: Vec<(Monomial, Poly<PFrac>)> = marks
        .iter()
        .cloned()
        .zip(elements.iter().cloned())
        .collect();
    let mut out_elements = Vec::with_capacity(pairs.len());
    let mut out_marks = Vec::with_capacity(pairs.len());
    for (mark, el) in pairs {
        match el.coeff(&mark) {
            Some(c) if !c.is_zero() => {}
            _ => {
                return Err(Error::ShapeViolation(format!(
                    "element marked {mark} has zero coefficient at its border monomial"
                )))
            }
        }
        out_elements.push(primitive_param_form(&el, Some(&mark)));
        out_marks.push(mark);
    }
    Ok(BorderBasis {
        order_ideal: order_ideal.clone(),
        elements: out_elements,
        marks: out_marks,
    })
}

/// Effectively-zero test re-exported for the border-system layer.
pub fn all_green(dom: &SigmaFracField, f: &Poly<PFrac>) -> bool {
    is_eff_zero(dom, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VarContext;
    use crate::domain::rat;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exponents(exps.iter().copied())
    }

    #[test]
    fn roots_of_the_fixture_eliminant() {
        let ctx = VarContext::new(["x"], ["z"]).unwrap();
        // z^3 - 8z^2 + 19z - 12 = (z-1)(z-3)(z-4)
        let p = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Param,
            [
                (m(&[3]), rat(1)),
                (m(&[2]), rat(-8)),
                (m(&[1]), rat(19)),
                (m(&[]), rat(-12)),
            ],
        );
        let v = rational_variety(&[p]).unwrap();
        let got: Vec<Rat> = v.iter().map(|s| s.values()[0].clone()).collect();
        assert_eq!(got, vec![rat(1), rat(3), rat(4)]);
    }

    #[test]
    fn repeated_root_collapses() {
        let ctx = VarContext::new(["x"], ["z"]).unwrap();
        // (z-4)^2
        let p = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Param,
            [(m(&[2]), rat(1)), (m(&[1]), rat(-8)), (m(&[]), rat(16))],
        );
        let v = rational_variety(&[p]).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].values()[0], rat(4));
    }

    #[test]
    fn triangular_back_substitution() {
        let ctx = VarContext::new(["x"], ["u1", "u2"]).unwrap();
        // {u2^2 - 1, u1 - u2} -> {(1,1), (-1,-1)}
        let p1 = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Param,
            [(m(&[0, 2]), rat(1)), (m(&[]), rat(-1))],
        );
        let p2 = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Param,
            [(m(&[1]), rat(1)), (m(&[0, 1]), rat(-1))],
        );
        let v = rational_variety(&[p1, p2]).unwrap();
        let got: Vec<Vec<Rat>> = v.iter().map(|s| s.values().to_vec()).collect();
        assert_eq!(got, vec![vec![rat(-1), rat(-1)], vec![rat(1), rat(1)]]);
    }

    #[test]
    fn irrational_point_is_detected() {
        let ctx = VarContext::new(["x"], ["z"]).unwrap();
        // z^2 - 2 has no rational roots
        let p = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Param,
            [(m(&[2]), rat(1)), (m(&[]), rat(-2))],
        );
        assert_eq!(rational_variety(&[p]).unwrap_err(), Error::NonRationalPoint);
        // a mixed case: (z-1)(z^2-2) still carries the irrational factor
        let q = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Param,
            [
                (m(&[3]), rat(1)),
                (m(&[2]), rat(-1)),
                (m(&[1]), rat(-2)),
                (m(&[]), rat(2)),
            ],
        );
        assert_eq!(rational_variety(&[q]).unwrap_err(), Error::NonRationalPoint);
    }

    #[test]
    fn coloring_examples() {
        let ctx = VarContext::new(["x", "y"], ["z"]).unwrap();
        let field = FracField::new(&ctx);
        let zp = |coeffs: &[(u32, i64)]| {
            Poly::from_terms(
                &QQ,
                &ctx,
                Block::Param,
                coeffs
                    .iter()
                    .map(|&(e, a)| (Monomial::var_pow(0, e), rat(a)))
                    .collect::<Vec<_>>(),
            )
        };
        // (z^3-8z^2+19z-12) x^2 + (z^2-4z+3) x - (z^2-4z+3) at z=4
        let p = Poly::from_terms(
            &field,
            &ctx,
            Block::Main,
            [
                (
                    m(&[2]),
                    field.from_poly(zp(&[(3, 1), (2, -8), (1, 19), (0, -12)])),
                ),
                (m(&[1]), field.from_poly(zp(&[(2, 1), (1, -4), (0, 3)]))),
                (m(&[]), field.from_poly(zp(&[(2, -1), (1, 4), (0, -3)]))),
            ],
        );
        let sigma = Specialization::new(vec![rat(4)]);
        let colored = color_polynomial(&p, &sigma).unwrap().unwrap();
        assert_eq!(colored.colors[&m(&[2])], Color::Green);
        assert_eq!(colored.colors[&m(&[1])], Color::Red);
        assert_eq!(colored.colors[&m(&[])], Color::Red);

        // the eliminant itself drops at z=4
        let e = Poly::constant(
            &field,
            &ctx,
            Block::Main,
            field.from_poly(zp(&[(3, 1), (2, -8), (1, 19), (0, -12)])),
        );
        assert!(color_polynomial(&e, &sigma).unwrap().is_none());

        // a parameter-free polynomial is all red
        let q = Poly::from_terms(
            &field,
            &ctx,
            Block::Main,
            [
                (m(&[1]), field.from_rat(rat(5))),
                (m(&[]), field.from_rat(rat(3))),
            ],
        );
        let colored = color_polynomial(&q, &sigma).unwrap().unwrap();
        assert!(colored.colors.values().all(|c| *c == Color::Red));
    }

    #[test]
    fn parameter_free_conditional_basis() {
        let ctx = VarContext::new(["x"], ["z"]).unwrap();
        let field = FracField::new(&ctx);
        // {x^2 - 1}: order ideal {1, x}, border {x^2}
        let p = Poly::from_terms(
            &field,
            &ctx,
            Block::Main,
            [
                (m(&[2]), field.from_rat(rat(1))),
                (m(&[]), field.from_rat(rat(-1))),
            ],
        );
        let sigma = Specialization::new(vec![rat(10)]);
        let (oi, els, marks) =
            conditional_border_basis(std::slice::from_ref(&p), &sigma, TermOrder::DEGLEX).unwrap();
        assert_eq!(
            oi.iter().cloned().collect::<Vec<_>>(),
            vec![m(&[]), m(&[1])]
        );
        assert_eq!(marks, vec![m(&[2])]);
        assert_eq!(els, vec![p]);
    }
}
