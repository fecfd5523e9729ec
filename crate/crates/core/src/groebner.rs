//! Division and Buchberger's algorithm.
//!
//! Everything here is generic over a [`GbDomain`], so the same engine
//! computes ordinary reduced Gröbner bases over the rationals and
//! specialization-colored conditional bases over k(U): leading terms,
//! reducibility and zero tests go through `eff_is_zero`, while the stored
//! coefficients keep their full (green-carrying) values.

use crate::border::OrderIdeal;
use crate::context::Block;
use crate::domain::{GbDomain, Rat, QQ};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::param::project_to_param;
use crate::poly::Poly;

/// A reduced Gröbner basis: monic, inter-reduced, sorted ascending by
/// leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<T> {
    pub gens: Vec<Poly<T>>,
    pub ord: TermOrder,
}

impl<T: Clone + PartialEq + std::fmt::Debug> GroebnerBasis<T> {
    /// Effective leading monomials of the generators.
    pub fn leading_monomials<D: GbDomain<Elem = T>>(&self, dom: &D) -> Vec<Monomial> {
        self.gens
            .iter()
            .map(|g| {
                eff_leading(dom, g, self.ord)
                    .expect("basis elements are nonzero")
                    .0
                    .clone()
            })
            .collect()
    }

    /// True when some generator is (effectively) a nonzero constant.
    pub fn is_unit_ideal<D: GbDomain<Elem = T>>(&self, dom: &D) -> bool {
        self.leading_monomials(dom).iter().any(Monomial::is_one)
    }
}

/// Largest monomial of `f` carrying an effectively nonzero coefficient,
/// with that coefficient. `None` when `f` is effectively zero.
pub fn eff_leading<'a, D: GbDomain>(
    dom: &D,
    f: &'a Poly<D::Elem>,
    ord: TermOrder,
) -> Option<(&'a Monomial, &'a D::Elem)> {
    f.terms()
        .filter(|(_, c)| !dom.eff_is_zero(c))
        .max_by(|(a, _), (b, _)| ord.cmp(a, b))
}

/// True when every coefficient of `f` is effectively zero.
pub fn is_eff_zero<D: GbDomain>(dom: &D, f: &Poly<D::Elem>) -> bool {
    f.terms().all(|(_, c)| dom.eff_is_zero(c))
}

/// Scales `f` so its effective leading coefficient is one.
pub fn make_monic<D: GbDomain>(dom: &D, f: &Poly<D::Elem>, ord: TermOrder) -> Poly<D::Elem> {
    match eff_leading(dom, f, ord) {
        Some((_, c)) => f.scalar_mul(dom, &dom.inv(c)),
        None => f.clone(),
    }
}

/// Multivariate division of `f` by `gens`.
///
/// Returns quotients aligned with `gens` and the remainder, satisfying
/// `f = sum(q_i * g_i) + rem` exactly. No effectively nonzero monomial of
/// the remainder is divisible by an effective leading monomial of any
/// generator. Reduction always targets the largest such monomial and
/// picks the divisor with the largest effective leading monomial (ties by
/// generator index), which makes the run deterministic.
pub fn divide<D: GbDomain>(
    dom: &D,
    f: &Poly<D::Elem>,
    gens: &[Poly<D::Elem>],
    ord: TermOrder,
) -> (Vec<Poly<D::Elem>>, Poly<D::Elem>) {
    let leads: Vec<Option<(Monomial, D::Elem)>> = gens
        .iter()
        .map(|g| eff_leading(dom, g, ord).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let mut p = f.clone();
    let mut rem = Poly::zero(f.ctx(), f.block());
    let mut quots: Vec<Poly<D::Elem>> = gens
        .iter()
        .map(|_| Poly::zero(f.ctx(), f.block()))
        .collect();

    loop {
        let target = p
            .terms()
            .filter(|(_, c)| !dom.eff_is_zero(c))
            .max_by(|(a, _), (b, _)| ord.cmp(a, b))
            .map(|(m, c)| (m.clone(), c.clone()));
        let Some((m, c)) = target else { break };

        let reducer = leads
            .iter()
            .enumerate()
            .filter_map(|(i, l)| l.as_ref().map(|(lm, lc)| (i, lm, lc)))
            .filter(|(_, lm, _)| lm.divides(&m))
            .max_by(|(i, la, _), (j, lb, _)| ord.cmp(la, lb).then(j.cmp(i)));

        match reducer {
            Some((i, lm, lc)) => {
                let shift = lm.div_into(&m).expect("divisibility checked");
                let q = dom.div(&c, lc);
                p.sub_scaled_shifted(dom, &q, &shift, &gens[i]);
                quots[i].insert_term(dom, shift, q);
            }
            None => {
                let c = p.remove_term(&m).expect("term present");
                rem.insert_term(dom, m, c);
            }
        }
    }
    // effectively-zero residue stays part of the remainder so the
    // division identity holds exactly
    for (m, c) in p.terms() {
        rem.insert_term(dom, m.clone(), c.clone());
    }
    (quots, rem)
}

/// Remainder of `f` on division by `gens`.
pub fn normal_form<D: GbDomain>(
    dom: &D,
    f: &Poly<D::Elem>,
    gens: &[Poly<D::Elem>],
    ord: TermOrder,
) -> Poly<D::Elem> {
    divide(dom, f, gens, ord).1
}

fn pair_key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Buchberger's algorithm with the normal selection strategy (minimal
/// lcm, ties by insertion index), the coprime-lead criterion and the
/// chain criterion, followed by auto-reduction.
pub fn reduced_groebner_basis<D: GbDomain>(
    dom: &D,
    input: &[Poly<D::Elem>],
    ord: TermOrder,
) -> Result<GroebnerBasis<D::Elem>> {
    reduced_groebner_basis_impl(dom, input, ord, true)
}

pub(crate) fn reduced_groebner_basis_impl<D: GbDomain>(
    dom: &D,
    input: &[Poly<D::Elem>],
    ord: TermOrder,
    use_criteria: bool,
) -> Result<GroebnerBasis<D::Elem>> {
    let mut basis: Vec<Poly<D::Elem>> = input
        .iter()
        .filter(|f| !is_eff_zero(dom, f))
        .map(|f| make_monic(dom, f, ord))
        .collect();
    if basis.is_empty() {
        return Err(Error::ZeroIdeal);
    }

    let lm_of =
        |g: &Poly<D::Elem>| -> Monomial { eff_leading(dom, g, ord).expect("nonzero").0.clone() };
    let mut lms: Vec<Monomial> = basis.iter().map(&lm_of).collect();

    let mut pending: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.push((i, j));
        }
    }

    while !pending.is_empty() {
        // normal strategy: minimal lcm in the active order, ties by index
        let best = pending
            .iter()
            .enumerate()
            .min_by(|(_, &(i1, j1)), (_, &(i2, j2))| {
                let l1 = lms[i1].lcm(&lms[j1]);
                let l2 = lms[i2].lcm(&lms[j2]);
                ord.cmp(&l1, &l2).then((i1, j1).cmp(&(i2, j2)))
            })
            .map(|(pos, _)| pos)
            .expect("nonempty");
        let (i, j) = pending.swap_remove(best);

        let lcm = lms[i].lcm(&lms[j]);
        if use_criteria {
            // coprime leading monomials: S-polynomial reduces to zero
            if lcm == lms[i].mul(&lms[j]) {
                continue;
            }
            // chain criterion
            let chained = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && lms[k].divides(&lcm)
                    && !pending.contains(&pair_key(i, k))
                    && !pending.contains(&pair_key(j, k))
            });
            if chained {
                continue;
            }
        }

        let si = basis[i].mul_monomial(&lms[i].div_into(&lcm).expect("lcm"));
        let sj = basis[j].mul_monomial(&lms[j].div_into(&lcm).expect("lcm"));
        let spoly = si.sub(dom, &sj);
        let h = normal_form(dom, &spoly, &basis, ord);
        if !is_eff_zero(dom, &h) {
            let h = make_monic(dom, &h, ord);
            let new = basis.len();
            lms.push(lm_of(&h));
            basis.push(h);
            for k in 0..new {
                pending.push((k, new));
            }
        }
    }

    // minimize: drop generators whose lead is divisible by another's
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Poly<D::Elem>> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();

    // tail-reduce each generator against the others
    let mut reduced: Vec<Poly<D::Elem>> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly<D::Elem>> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = normal_form(dom, &minimal[i], &others, ord);
        reduced.push(make_monic(dom, &g, ord));
    }
    reduced.sort_by(|a, b| {
        let la = eff_leading(dom, a, ord).expect("nonzero").0;
        let lb = eff_leading(dom, b, ord).expect("nonzero").0;
        ord.cmp(la, lb)
    });
    Ok(GroebnerBasis { gens: reduced, ord })
}

/// Zero-dimensionality test over the first `nvars` variables: the unit
/// ideal counts, otherwise every variable needs a generator whose leading
/// monomial is a pure power of it.
pub fn is_zero_dimensional<D: GbDomain>(
    dom: &D,
    gb: &GroebnerBasis<D::Elem>,
    nvars: usize,
) -> bool {
    let lms = gb.leading_monomials(dom);
    if lms.iter().any(Monomial::is_one) {
        return true;
    }
    (0..nvars).all(|v| {
        lms.iter()
            .any(|m| m.exp(v) >= 1 && (0..m.len()).all(|i| i == v || m.exp(i) == 0))
    })
}

/// The monomials outside the leading term ideal: a vector-space basis of
/// the quotient ring. Fails when the quotient is infinite-dimensional.
pub fn quotient_basis<D: GbDomain>(
    dom: &D,
    gb: &GroebnerBasis<D::Elem>,
    nvars: usize,
) -> Result<OrderIdeal> {
    let lms = gb.leading_monomials(dom);
    staircase_complement(&lms, nvars)
}

/// Monomials not divisible by any element of `lms`, as an order ideal.
pub fn staircase_complement(lms: &[Monomial], nvars: usize) -> Result<OrderIdeal> {
    if lms.iter().any(Monomial::is_one) {
        return Ok(OrderIdeal::empty());
    }
    let zero_dim = (0..nvars).all(|v| {
        lms.iter()
            .any(|m| m.exp(v) >= 1 && (0..m.len()).all(|i| i == v || m.exp(i) == 0))
    });
    if !zero_dim {
        return Err(Error::NotZeroDimensional);
    }
    let mut seen: std::collections::BTreeSet<Monomial> = Default::default();
    let mut queue = vec![Monomial::one()];
    while let Some(m) = queue.pop() {
        if seen.contains(&m) || lms.iter().any(|l| l.divides(&m)) {
            continue;
        }
        for v in 0..nvars {
            queue.push(m.mul(&Monomial::var(v)));
        }
        seen.insert(m);
    }
    Ok(OrderIdeal::from_standard_monomials(seen))
}

/// Membership test: the normal form against the basis vanishes.
pub fn ideal_membership<D: GbDomain>(
    dom: &D,
    f: &Poly<D::Elem>,
    gb: &GroebnerBasis<D::Elem>,
) -> bool {
    is_eff_zero(dom, &normal_form(dom, f, &gb.gens, gb.ord))
}

/// Generators of the elimination ideal `<F> ∩ k[U]`, computed with the
/// block order that puts the main variables above the parameters. The
/// result is the reduced lex Gröbner basis of the elimination ideal,
/// re-expressed over the parameter block.
pub fn elimination_ideal(input: &[Poly<Rat>]) -> Result<Vec<Poly<Rat>>> {
    let ctx = input.first().ok_or(Error::ZeroIdeal)?.ctx().clone();
    assert!(input.iter().all(|f| f.block() == Block::Full));
    let n = ctx.n_main();
    let gb = reduced_groebner_basis(&QQ, input, TermOrder::elimination(n))?;
    let mut out = Vec::new();
    for g in &gb.gens {
        if crate::param::in_param_subring(g) {
            out.push(project_to_param(g)?);
        }
    }
    Ok(out)
}
