//! Parameter-coefficient domains.
//!
//! Three coefficient domains appear in the pipeline: the rationals, the
//! parameter polynomial ring k[U], and its field of fractions k(U). This
//! module provides the latter two, the conversions between the flat ring
//! k[X,U] and the nested view k[U][X] / k(U)[X], the specialization
//! homomorphism, and the primitive-form normalization that turns k(U)[X]
//! elements into scalar k[U][X] form.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::context::{Block, Ctx};
use crate::domain::{rat_sign, Domain, FieldDomain, GbDomain, Int, Rat, QQ};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Poly;

/// A polynomial in the parameters with rational coefficients.
pub type PPoly = Poly<Rat>;

/// The ring k[U] as a domain object.
#[derive(Debug, Clone)]
pub struct ParamRing {
    ctx: Ctx,
}

impl ParamRing {
    pub fn new(ctx: &Ctx) -> Self {
        ParamRing { ctx: ctx.clone() }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn constant(&self, c: Rat) -> PPoly {
        Poly::constant(&QQ, &self.ctx, Block::Param, c)
    }

    /// The parameter with index `idx` as a polynomial.
    pub fn var(&self, idx: usize) -> PPoly {
        Poly::term(&QQ, &self.ctx, Block::Param, Monomial::var(idx), Rat::one())
    }

    /// True when `p` is a rational constant (possibly zero).
    pub fn is_constant(&self, p: &PPoly) -> bool {
        p.is_zero() || (p.num_terms() == 1 && p.coeff(&Monomial::one()).is_some())
    }

    /// Lexicographically-leading term of a nonzero parameter polynomial.
    fn lex_leading<'a>(&self, p: &'a PPoly) -> (&'a Rat, &'a Monomial) {
        crate::order::leading_data(&QQ, p, TermOrder::LEX).expect("nonzero")
    }

    /// Sign of the lexicographically-leading coefficient.
    pub fn leading_sign(&self, p: &PPoly) -> i32 {
        if p.is_zero() {
            0
        } else {
            rat_sign(self.lex_leading(p).0)
        }
    }

    /// Scales `p` so the lexicographically-leading coefficient is 1.
    fn monic(&self, p: &PPoly) -> PPoly {
        if p.is_zero() {
            return p.clone();
        }
        let lc = self.lex_leading(p).0.clone();
        p.scalar_mul(&QQ, &lc.recip())
    }

    /// Total evaluation at a parameter point.
    pub fn eval(&self, p: &PPoly, point: &[Rat]) -> Result<Rat> {
        let m = self.ctx.n_params();
        if point.len() != m {
            return Err(Error::ArityMismatch {
                expected: m,
                got: point.len(),
            });
        }
        let mut acc = Rat::zero();
        for (mon, c) in p.terms() {
            let mut v = c.clone();
            for (i, e) in mon.exponents(m).enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Substitutes `value` for parameter `idx`, leaving the others alone.
    pub fn eval_var(&self, p: &PPoly, idx: usize, value: &Rat) -> PPoly {
        let terms = p.terms().map(|(mon, c)| {
            let e = mon.exp(idx);
            let mut v = c.clone();
            for _ in 0..e {
                v *= value;
            }
            let stripped =
                Monomial::from_exponents(
                    (0..mon.len()).map(|i| if i == idx { 0 } else { mon.exp(i) }),
                );
            (stripped, v)
        });
        Poly::from_terms(&QQ, &self.ctx, Block::Param, terms.collect::<Vec<_>>())
    }

    /// Exact division `a / b`; panics when `b` does not divide `a`.
    pub fn exact_div(&self, a: &PPoly, b: &PPoly) -> PPoly {
        assert!(!b.is_zero(), "division by the zero polynomial");
        let mut rem = a.clone();
        let mut quot = Poly::zero(&self.ctx, Block::Param);
        let (blc, blm) = {
            let (c, m) = self.lex_leading(b);
            (c.clone(), m.clone())
        };
        while !rem.is_zero() {
            let (rlc, rlm) = {
                let (c, m) = self.lex_leading(&rem);
                (c.clone(), m.clone())
            };
            let shift = blm
                .div_into(&rlm)
                .unwrap_or_else(|| panic!("inexact polynomial division"));
            let c = rlc / &blc;
            rem.sub_scaled_shifted(&QQ, &c, &shift, b);
            quot.insert_term(&QQ, shift, c);
        }
        quot
    }

    /// Least common multiple, normalized monic. Uses the single-variable
    /// Euclidean route when possible and an elimination computation of
    /// the principal intersection ideal otherwise.
    pub fn lcm(&self, a: &PPoly, b: &PPoly) -> PPoly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero(&self.ctx, Block::Param);
        }
        if self.is_constant(a) {
            return self.monic(b);
        }
        if self.is_constant(b) {
            return self.monic(a);
        }
        let g = self.gcd(a, b);
        self.monic(&self.exact_div(&a.mul(&QQ, b), &g))
    }

    /// Greatest common divisor, normalized monic.
    pub fn gcd(&self, a: &PPoly, b: &PPoly) -> PPoly {
        if a.is_zero() {
            return self.monic(b);
        }
        if b.is_zero() {
            return self.monic(a);
        }
        if self.is_constant(a) || self.is_constant(b) {
            return self.constant(Rat::one());
        }
        if let Some(idx) = self.common_single_var(a, b) {
            return self.gcd_univariate(a, b, idx);
        }
        // gcd = a*b / lcm, with lcm the monic generator of <a> ∩ <b>
        // obtained by eliminating a tag variable from <t*a, (1-t)*b>.
        let l = self.lcm_by_intersection(a, b);
        self.monic(&self.exact_div(&a.mul(&QQ, b), &l))
    }

    /// Monic gcd of a list of parameter polynomials, skipping zeros.
    /// Returns zero when every input is zero.
    pub fn content(&self, polys: &[&PPoly]) -> PPoly {
        let mut acc = Poly::zero(&self.ctx, Block::Param);
        for p in polys {
            acc = self.gcd(&acc, p);
            if !acc.is_zero() && self.is_constant(&acc) {
                return self.constant(Rat::one());
            }
        }
        acc
    }

    fn common_single_var(&self, a: &PPoly, b: &PPoly) -> Option<usize> {
        let mut var = None;
        for mon in a.support().chain(b.support()) {
            for i in 0..mon.len() {
                if mon.exp(i) > 0 {
                    match var {
                        None => var = Some(i),
                        Some(v) if v == i => {}
                        _ => return None,
                    }
                }
            }
        }
        var
    }

    fn gcd_univariate(&self, a: &PPoly, b: &PPoly, idx: usize) -> PPoly {
        let deg = |p: &PPoly| p.support().map(|m| m.exp(idx)).max().unwrap_or(0);
        let (mut f, mut g) = (a.clone(), b.clone());
        if deg(&f) < deg(&g) {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = self.rem_univariate(&f, &g, idx);
            f = g;
            g = r;
        }
        self.monic(&f)
    }

    fn rem_univariate(&self, a: &PPoly, b: &PPoly, idx: usize) -> PPoly {
        let deg = |p: &PPoly| p.support().map(|m| m.exp(idx)).max().unwrap_or(0);
        let db = deg(b);
        let blc = b
            .coeff(&Monomial::var_pow(idx, db))
            .expect("leading")
            .clone();
        let mut rem = a.clone();
        while !rem.is_zero() {
            let dr = deg(&rem);
            if dr < db {
                break;
            }
            let rc = rem
                .coeff(&Monomial::var_pow(idx, dr))
                .expect("leading")
                .clone();
            let shift = Monomial::var_pow(idx, dr - db);
            rem.sub_scaled_shifted(&QQ, &(rc / &blc), &shift, b);
        }
        rem
    }

    fn lcm_by_intersection(&self, a: &PPoly, b: &PPoly) -> PPoly {
        use crate::context::VarContext;
        let tag_ctx = VarContext::new(vec!["@t".to_string()], self.ctx.param_names().to_vec())
            .expect("tag context");
        let lift = |p: &PPoly| -> Poly<Rat> {
            Poly::from_terms(
                &QQ,
                &tag_ctx,
                Block::Full,
                p.terms()
                    .map(|(m, c)| (m.shift_up(1), c.clone()))
                    .collect::<Vec<_>>(),
            )
        };
        let t = Poly::term(&QQ, &tag_ctx, Block::Full, Monomial::var(0), Rat::one());
        let one = Poly::constant(&QQ, &tag_ctx, Block::Full, Rat::one());
        let ta = t.mul(&QQ, &lift(a));
        let tb = one.sub(&QQ, &t).mul(&QQ, &lift(b));
        let gb = crate::groebner::reduced_groebner_basis(&QQ, &[ta, tb], TermOrder::elimination(1))
            .expect("nonzero generators");
        let mut inter: Vec<PPoly> = gb
            .gens
            .iter()
            .filter(|g| g.support().all(|m| m.exp(0) == 0))
            .map(|g| {
                Poly::from_terms(
                    &QQ,
                    &self.ctx,
                    Block::Param,
                    g.terms()
                        .map(|(m, c)| (m.strip_prefix_vars(1), c.clone()))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        assert_eq!(
            inter.len(),
            1,
            "intersection of principal ideals is principal"
        );
        self.monic(&inter.remove(0))
    }
}

impl Domain for ParamRing {
    type Elem = PPoly;

    fn zero(&self) -> PPoly {
        Poly::zero(&self.ctx, Block::Param)
    }
    fn one(&self) -> PPoly {
        self.constant(Rat::one())
    }
    fn is_zero(&self, a: &PPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &PPoly, b: &PPoly) -> PPoly {
        a.add(&QQ, b)
    }
    fn neg(&self, a: &PPoly) -> PPoly {
        a.neg(&QQ)
    }
    fn mul(&self, a: &PPoly, b: &PPoly) -> PPoly {
        a.mul(&QQ, b)
    }
}

/// A normalized quotient of two parameter polynomials.
///
/// Numerator and denominator are coprime; the denominator has integer
/// coefficients with content one and positive lexicographically-leading
/// coefficient, which makes equality structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PFrac {
    num: PPoly,
    den: PPoly,
}

impl PFrac {
    pub fn num(&self) -> &PPoly {
        &self.num
    }

    pub fn den(&self) -> &PPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.num_terms() == 1 && self.den.coeff(&Monomial::one()) == Some(&Rat::one())
    }
}

/// The field k(U) as a domain object.
#[derive(Debug, Clone)]
pub struct FracField {
    ring: ParamRing,
}

impl FracField {
    pub fn new(ctx: &Ctx) -> Self {
        FracField {
            ring: ParamRing::new(ctx),
        }
    }

    pub fn ring(&self) -> &ParamRing {
        &self.ring
    }

    pub fn from_poly(&self, p: PPoly) -> PFrac {
        self.make(p, self.ring.one())
    }

    pub fn from_rat(&self, c: Rat) -> PFrac {
        self.from_poly(self.ring.constant(c))
    }

    /// The normalized fraction `num / den`; panics on a zero denominator.
    pub fn fraction(&self, num: PPoly, den: PPoly) -> PFrac {
        self.make(num, den)
    }

    fn make(&self, num: PPoly, den: PPoly) -> PFrac {
        assert!(!den.is_zero(), "fraction with zero denominator");
        if num.is_zero() {
            return PFrac {
                num,
                den: self.ring.one(),
            };
        }
        let (mut num, mut den) = (num, den);
        let g = self.ring.gcd(&num, &den);
        if !self.ring.is_constant(&g) {
            num = self.ring.exact_div(&num, &g);
            den = self.ring.exact_div(&den, &g);
        }
        // scale so the denominator is integer-primitive with positive
        // leading sign
        let scale = primitive_scale(&self.ring, &den);
        num = num.scalar_mul(&QQ, &scale);
        den = den.scalar_mul(&QQ, &scale);
        PFrac { num, den }
    }

    /// Evaluates the fraction at a parameter point.
    pub fn eval(&self, a: &PFrac, point: &[Rat]) -> Result<Rat> {
        let d = self.ring.eval(&a.den, point)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.ring.eval(&a.num, point)? / d)
    }
}

/// Rational `c` with `p * c` integer-primitive and positive leading sign.
fn primitive_scale(ring: &ParamRing, p: &PPoly) -> Rat {
    let mut den_lcm = Int::one();
    let mut num_gcd = Int::zero();
    for (_, c) in p.terms() {
        den_lcm = den_lcm.lcm(c.denom());
        num_gcd = num_gcd.gcd(c.numer());
    }
    let mut scale = Rat::new(den_lcm, num_gcd);
    if ring.leading_sign(&p.scalar_mul(&QQ, &scale)) < 0 {
        scale = -scale;
    }
    scale
}

impl Domain for FracField {
    type Elem = PFrac;

    fn zero(&self) -> PFrac {
        PFrac {
            num: self.ring.zero(),
            den: self.ring.one(),
        }
    }
    fn one(&self) -> PFrac {
        PFrac {
            num: self.ring.one(),
            den: self.ring.one(),
        }
    }
    fn is_zero(&self, a: &PFrac) -> bool {
        a.num.is_zero()
    }
    fn add(&self, a: &PFrac, b: &PFrac) -> PFrac {
        let num = a.num.mul(&QQ, &b.den).add(&QQ, &b.num.mul(&QQ, &a.den));
        let den = a.den.mul(&QQ, &b.den);
        self.make(num, den)
    }
    fn neg(&self, a: &PFrac) -> PFrac {
        PFrac {
            num: a.num.neg(&QQ),
            den: a.den.clone(),
        }
    }
    fn mul(&self, a: &PFrac, b: &PFrac) -> PFrac {
        self.make(a.num.mul(&QQ, &b.num), a.den.mul(&QQ, &b.den))
    }
}

impl FieldDomain for FracField {
    fn inv(&self, a: &PFrac) -> PFrac {
        assert!(!a.num.is_zero(), "inverse of zero");
        self.make(a.den.clone(), a.num.clone())
    }
}

impl GbDomain for FracField {}

/// k(U) with the zero test decided by evaluation at a fixed parameter
/// point: coefficients vanishing there are green and act as zero in the
/// basis algorithms while remaining part of the stored polynomials.
#[derive(Debug, Clone)]
pub struct SigmaFracField {
    field: FracField,
    point: Vec<Rat>,
}

impl SigmaFracField {
    pub fn new(ctx: &Ctx, point: Vec<Rat>) -> Self {
        assert_eq!(ctx.n_params(), point.len(), "specialization arity");
        SigmaFracField {
            field: FracField::new(ctx),
            point,
        }
    }

    pub fn field(&self) -> &FracField {
        &self.field
    }

    pub fn point(&self) -> &[Rat] {
        &self.point
    }
}

impl Domain for SigmaFracField {
    type Elem = PFrac;

    fn zero(&self) -> PFrac {
        self.field.zero()
    }
    fn one(&self) -> PFrac {
        self.field.one()
    }
    fn is_zero(&self, a: &PFrac) -> bool {
        self.field.is_zero(a)
    }
    fn add(&self, a: &PFrac, b: &PFrac) -> PFrac {
        self.field.add(a, b)
    }
    fn neg(&self, a: &PFrac) -> PFrac {
        self.field.neg(a)
    }
    fn mul(&self, a: &PFrac, b: &PFrac) -> PFrac {
        self.field.mul(a, b)
    }
}

impl FieldDomain for SigmaFracField {
    fn inv(&self, a: &PFrac) -> PFrac {
        self.field.inv(a)
    }
}

impl GbDomain for SigmaFracField {
    fn eff_is_zero(&self, a: &PFrac) -> bool {
        debug_assert!(
            !self.field.ring.eval(&a.den, &self.point).unwrap().is_zero(),
            "pole reached a colored computation"
        );
        self.field.ring.eval(&a.num, &self.point).unwrap().is_zero()
    }
}

// ---------------------------------------------------------------------
// Conversions between the flat and nested views
// ---------------------------------------------------------------------

/// True when `p` in k[X,U] has no main variables.
pub fn in_param_subring(p: &Poly<Rat>) -> bool {
    assert_eq!(p.block(), Block::Full);
    let n = p.ctx().n_main();
    p.support().all(|m| m.degree_in(0..n) == 0)
}

/// Regroups a flat polynomial in k[X,U] as an element of k[U][X].
pub fn split_param_coeffs(p: &Poly<Rat>) -> Poly<PPoly> {
    assert_eq!(p.block(), Block::Full);
    let ctx = p.ctx().clone();
    let n = ctx.n_main();
    let ring = ParamRing::new(&ctx);
    let mut groups: std::collections::BTreeMap<Monomial, Vec<(Monomial, Rat)>> = Default::default();
    for (m, c) in p.terms() {
        let main = m.truncate_vars(n);
        let param = m.strip_prefix_vars(n);
        groups.entry(main).or_default().push((param, c.clone()));
    }
    let terms: Vec<(Monomial, PPoly)> = groups
        .into_iter()
        .map(|(main, ts)| (main, Poly::from_terms(&QQ, &ctx, Block::Param, ts)))
        .collect();
    Poly::from_terms(&ring, &ctx, Block::Main, terms)
}

/// Expands an element of k[U][X] back to the flat ring k[X,U].
pub fn flatten_param_coeffs(p: &Poly<PPoly>) -> Poly<Rat> {
    assert_eq!(p.block(), Block::Main);
    let ctx = p.ctx().clone();
    let n = ctx.n_main();
    let mut terms = Vec::new();
    for (main, coeff) in p.terms() {
        for (param, c) in coeff.terms() {
            terms.push((main.mul(&param.shift_up(n)), c.clone()));
        }
    }
    Poly::from_terms(&QQ, &ctx, Block::Full, terms)
}

/// Reinterprets a parameter-only element of k[X,U] in k[U].
pub fn project_to_param(p: &Poly<Rat>) -> Result<Poly<Rat>> {
    if !in_param_subring(p) {
        return Err(Error::ShapeViolation(
            "polynomial involves main variables".into(),
        ));
    }
    let n = p.ctx().n_main();
    Ok(Poly::from_terms(
        &QQ,
        p.ctx(),
        Block::Param,
        p.terms()
            .map(|(m, c)| (m.strip_prefix_vars(n), c.clone()))
            .collect::<Vec<_>>(),
    ))
}

/// Embeds k[U][X] into k(U)[X].
pub fn inject_fractions(p: &Poly<PPoly>) -> Poly<PFrac> {
    assert_eq!(p.block(), Block::Main);
    let field = FracField::new(p.ctx());
    p.map_coeffs(&field, p.ctx(), Block::Main, |c| field.from_poly(c.clone()))
}

/// Specialization homomorphism on k[U][X]: evaluates every coefficient at
/// the parameter point, preserving the main-variable structure.
pub fn specialize_poly(p: &Poly<PPoly>, point: &[Rat]) -> Result<Poly<Rat>> {
    assert_eq!(p.block(), Block::Main);
    let ring = ParamRing::new(p.ctx());
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        terms.push((m.clone(), ring.eval(c, point)?));
    }
    Ok(Poly::from_terms(&QQ, p.ctx(), Block::Main, terms))
}

/// Specialization homomorphism on k(U)[X]; fails with a pole error when
/// any coefficient denominator vanishes at the point.
pub fn specialize_frac_poly(p: &Poly<PFrac>, point: &[Rat]) -> Result<Poly<Rat>> {
    assert_eq!(p.block(), Block::Main);
    let field = FracField::new(p.ctx());
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        terms.push((m.clone(), field.eval(c, point)?));
    }
    Ok(Poly::from_terms(&QQ, p.ctx(), Block::Main, terms))
}

/// Clears denominators and divides out the k[U]-content, yielding a
/// k[U][X] polynomial that generates the same k(U)[X]-submodule.
///
/// The content is the monic gcd of the coefficients, so rational constant
/// factors survive. The sign is normalized so the coefficient of `marked`
/// (the storage-largest monomial when absent) has positive leading sign.
pub fn primitive_param_form(p: &Poly<PFrac>, marked: Option<&Monomial>) -> Poly<PPoly> {
    assert_eq!(p.block(), Block::Main);
    let ctx = p.ctx().clone();
    let ring = ParamRing::new(&ctx);
    if p.is_zero() {
        return Poly::zero(&ctx, Block::Main);
    }
    // common denominator
    let mut d = ring.one();
    for (_, c) in p.terms() {
        d = ring.lcm(&d, c.den());
    }
    let cleared: Vec<(Monomial, PPoly)> = p
        .terms()
        .map(|(m, c)| {
            let scaled = c.num().mul(&QQ, &ring.exact_div(&d, c.den()));
            (m.clone(), scaled)
        })
        .collect();
    // content over k[U]
    let coeffs: Vec<&PPoly> = cleared.iter().map(|(_, c)| c).collect();
    let content = ring.content(&coeffs);
    let mut terms: Vec<(Monomial, PPoly)> = cleared
        .into_iter()
        .map(|(m, c)| {
            if ring.is_constant(&content) {
                (m, c)
            } else {
                (m, ring.exact_div(&c, &content))
            }
        })
        .collect();
    // sign from the marked coefficient
    let mark = marked
        .cloned()
        .unwrap_or_else(|| terms.iter().map(|(m, _)| m.clone()).max().expect("nonzero"));
    let sign = terms
        .iter()
        .find(|(m, _)| *m == mark)
        .map(|(_, c)| ring.leading_sign(c))
        .unwrap_or(1);
    if sign < 0 {
        for (_, c) in &mut terms {
            *c = c.neg(&QQ);
        }
    }
    Poly::from_terms(&ring, &ctx, Block::Main, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VarContext;
    use crate::domain::{rat, ratio};

    fn ctx() -> Ctx {
        VarContext::new(["x", "y"], ["z"]).unwrap()
    }

    fn z_poly(coeffs: &[(u32, i64)]) -> PPoly {
        let c = ctx();
        Poly::from_terms(
            &QQ,
            &c,
            Block::Param,
            coeffs
                .iter()
                .map(|&(e, a)| (Monomial::var_pow(0, e), rat(a)))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn univariate_gcd() {
        let ring = ParamRing::new(&ctx());
        // gcd((z-1)(z-3), (z-1)(z-3)(z-4)) = (z-1)(z-3) = z^2 - 4z + 3
        let a = z_poly(&[(2, 1), (1, -4), (0, 3)]);
        let b = z_poly(&[(3, 1), (2, -8), (1, 19), (0, -12)]);
        assert_eq!(ring.gcd(&a, &b), a);
        assert_eq!(ring.exact_div(&b, &a), z_poly(&[(1, 1), (0, -4)]));
    }

    #[test]
    fn multivariate_gcd_through_intersection() {
        let c = VarContext::new(["x"], ["u", "v"]).unwrap();
        let ring = ParamRing::new(&c);
        let u = ring.var(0);
        let v = ring.var(1);
        let upv = u.add(&QQ, &v);
        let umv = u.sub(&QQ, &v);
        let a = upv.mul(&QQ, &umv); // u^2 - v^2
        let b = upv.mul(&QQ, &upv); // (u+v)^2
        assert_eq!(ring.gcd(&a, &b), upv);
    }

    #[test]
    fn fraction_normalization() {
        let field = FracField::new(&ctx());
        let ring = field.ring().clone();
        // (z-4)/(z-1) stays reduced; ((z-1)(z-4))/((z-1)^2) reduces to it
        let zm4 = z_poly(&[(1, 1), (0, -4)]);
        let zm1 = z_poly(&[(1, 1), (0, -1)]);
        let f = field.make(zm4.mul(&QQ, &zm1), zm1.mul(&QQ, &zm1));
        assert_eq!(f.num(), &zm4);
        assert_eq!(f.den(), &zm1);
        // denominator scale: x/( -2z + 2 ) normalizes the sign and content
        let g = field.make(ring.one(), zm1.scalar_mul(&QQ, &rat(-2)));
        assert_eq!(g.den(), &zm1);
        assert_eq!(g.num(), &ring.constant(ratio(-1, 2)));
    }

    #[test]
    fn specialize_homomorphism_examples() {
        let c = ctx();
        // (z-4)x^2 + x - 1 at z=4 -> x - 1
        let ring = ParamRing::new(&c);
        let p = Poly::from_terms(
            &ring,
            &c,
            Block::Main,
            [
                (Monomial::var_pow(0, 2), z_poly(&[(1, 1), (0, -4)])),
                (Monomial::var(0), ring.one()),
                (Monomial::one(), ring.constant(rat(-1))),
            ],
        );
        let s = specialize_poly(&p, &[rat(4)]).unwrap();
        let expect = Poly::from_terms(
            &QQ,
            &c,
            Block::Main,
            [(Monomial::var(0), rat(1)), (Monomial::one(), rat(-1))],
        );
        assert_eq!(s, expect);

        // z^3 - 8z^2 + 19z - 12 at z=7 -> 72
        let e = z_poly(&[(3, 1), (2, -8), (1, 19), (0, -12)]);
        assert_eq!(ring.eval(&e, &[rat(7)]).unwrap(), rat(72));

        // parameter-free polynomial is fixed by any specialization
        let q = Poly::from_terms(
            &ring,
            &c,
            Block::Main,
            [
                (Monomial::var(0), ring.constant(rat(5))),
                (Monomial::one(), ring.constant(rat(3))),
            ],
        );
        let sq = specialize_poly(&q, &[rat(123)]).unwrap();
        assert_eq!(sq.coeff(&Monomial::var(0)), Some(&rat(5)));
        assert_eq!(sq.coeff(&Monomial::one()), Some(&rat(3)));
    }

    #[test]
    fn specialize_pole_and_arity_errors() {
        let c = ctx();
        let field = FracField::new(&c);
        let zm1 = z_poly(&[(1, 1), (0, -1)]);
        let f = Poly::term(
            &field,
            &c,
            Block::Main,
            Monomial::var(0),
            field.make(field.ring().one(), zm1),
        );
        assert_eq!(specialize_frac_poly(&f, &[rat(1)]), Err(Error::Pole));
        assert!(specialize_frac_poly(&f, &[rat(1), rat(2)]).is_err());
    }

    #[test]
    fn primitive_form_paper_cases() {
        let c = ctx();
        let ring = ParamRing::new(&c);
        let field = FracField::new(&c);
        let zm1zm3 = z_poly(&[(2, 1), (1, -4), (0, 3)]);
        let elim = z_poly(&[(3, 1), (2, -8), (1, 19), (0, -12)]);
        // (z-1)(z-3)(z-4) x^2 + (z-1)(z-3) x - (z-1)(z-3) -> (z-4)x^2 + x - 1
        let p = Poly::from_terms(
            &field,
            &c,
            Block::Main,
            [
                (Monomial::var_pow(0, 2), field.from_poly(elim)),
                (Monomial::var(0), field.from_poly(zm1zm3.clone())),
                (Monomial::one(), field.from_poly(zm1zm3.neg(&QQ))),
            ],
        );
        let out = primitive_param_form(&p, Some(&Monomial::var(0)));
        assert_eq!(
            out.coeff(&Monomial::var_pow(0, 2)),
            Some(&z_poly(&[(1, 1), (0, -4)]))
        );
        assert_eq!(out.coeff(&Monomial::var(0)), Some(&ring.one()));
        assert_eq!(out.coeff(&Monomial::one()), Some(&ring.constant(rat(-1))));

        // ((z-4)/(z-1)) x^2 + x -> (z-4) x^2 + (z-1) x
        let zm4 = z_poly(&[(1, 1), (0, -4)]);
        let zm1 = z_poly(&[(1, 1), (0, -1)]);
        let q = Poly::from_terms(
            &field,
            &c,
            Block::Main,
            [
                (
                    Monomial::var_pow(0, 2),
                    field.make(zm4.clone(), zm1.clone()),
                ),
                (Monomial::var(0), field.one()),
            ],
        );
        let out = primitive_param_form(&q, Some(&Monomial::var_pow(0, 2)));
        assert_eq!(out.coeff(&Monomial::var_pow(0, 2)), Some(&zm4));
        assert_eq!(out.coeff(&Monomial::var(0)), Some(&zm1));

        // rational constants are left alone:
        // y^2 - 4y + 1/3 (z^2 - 4z + 12) is already primitive
        let third = field.from_rat(ratio(1, 3));
        let z2 = z_poly(&[(2, 1), (1, -4), (0, 12)]);
        let r = Poly::from_terms(
            &field,
            &c,
            Block::Main,
            [
                (Monomial::var_pow(1, 2), field.one()),
                (Monomial::var(1), field.from_rat(rat(-4))),
                (
                    Monomial::one(),
                    field.mul(&third, &field.from_poly(z2.clone())),
                ),
            ],
        );
        let out = primitive_param_form(&r, Some(&Monomial::var_pow(1, 2)));
        assert_eq!(out.coeff(&Monomial::var_pow(1, 2)), Some(&ring.one()));
        assert_eq!(
            out.coeff(&Monomial::one()),
            Some(&z2.scalar_mul(&QQ, &ratio(1, 3)))
        );
        // zero maps to zero
        let zp: Poly<PFrac> = Poly::zero(&c, Block::Main);
        assert!(primitive_param_form(&zp, None).is_zero());
    }
}
