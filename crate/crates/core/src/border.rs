//! Order ideals, borders, border forms and border bases.

use std::collections::BTreeSet;

use crate::domain::{GbDomain, Rat, QQ};
use crate::error::{Error, Result};
use crate::groebner::{self, eff_leading, normal_form, quotient_basis, GroebnerBasis};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Poly;

/// A finite, divisor-closed set of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderIdeal {
    monomials: BTreeSet<Monomial>,
}

impl OrderIdeal {
    pub fn empty() -> Self {
        OrderIdeal::default()
    }

    /// Builds an order ideal, rejecting sets that are not divisor-closed.
    pub fn new(monomials: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let set: BTreeSet<Monomial> = monomials.into_iter().collect();
        for m in &set {
            for v in 0..m.len() {
                if m.exp(v) > 0 {
                    let parent = Monomial::var(v).div_into(m).expect("exponent positive");
                    if !set.contains(&parent) {
                        return Err(Error::NotDivisorClosed);
                    }
                }
            }
        }
        Ok(OrderIdeal { monomials: set })
    }

    /// Wraps a set already known to be divisor-closed (staircase
    /// complements are, by construction).
    pub(crate) fn from_standard_monomials(monomials: BTreeSet<Monomial>) -> Self {
        OrderIdeal { monomials }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    /// The border: monomials one variable-multiplication outside the
    /// ideal. The border of the empty order ideal is `{1}`.
    pub fn border(&self, nvars: usize) -> BTreeSet<Monomial> {
        if self.monomials.is_empty() {
            return BTreeSet::from([Monomial::one()]);
        }
        let mut out = BTreeSet::new();
        for m in &self.monomials {
            for v in 0..nvars {
                let up = m.mul(&Monomial::var(v));
                if !self.monomials.contains(&up) {
                    out.insert(up);
                }
            }
        }
        out
    }

    /// The first border closure, itself an order ideal.
    pub fn border_closure(&self, nvars: usize) -> OrderIdeal {
        let mut set = self.monomials.clone();
        set.extend(self.border(nvars));
        OrderIdeal { monomials: set }
    }

    /// Number of border-closure steps needed to reach `m`; zero exactly
    /// on members.
    pub fn index_of(&self, m: &Monomial, nvars: usize) -> u32 {
        let mut current = self.clone();
        let mut r = 0;
        while !current.contains(m) {
            current = current.border_closure(nvars);
            r += 1;
        }
        r
    }
}

/// Index of a nonzero polynomial: the largest index over its support.
pub fn index_of_poly<T: Clone + PartialEq + std::fmt::Debug>(
    f: &Poly<T>,
    order_ideal: &OrderIdeal,
    nvars: usize,
) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.support()
        .map(|m| order_ideal.index_of(m, nvars))
        .max()
        .unwrap())
}

/// The border form: the sum of the terms of maximal index. The border
/// form of zero is zero.
pub fn border_form<D: GbDomain>(
    dom: &D,
    f: &Poly<D::Elem>,
    order_ideal: &OrderIdeal,
    nvars: usize,
) -> Poly<D::Elem> {
    if f.is_zero() {
        return f.clone();
    }
    let idx = index_of_poly(f, order_ideal, nvars).expect("nonzero");
    let terms: Vec<_> = f
        .terms()
        .filter(|(m, _)| order_ideal.index_of(m, nvars) == idx)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    Poly::from_terms(dom, f.ctx(), f.block(), terms)
}

/// A border basis: one element per border monomial, stored in ascending
/// order of its marked border monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderBasis<T> {
    pub order_ideal: OrderIdeal,
    pub elements: Vec<Poly<T>>,
    /// Marked border monomial of each element, aligned with `elements`.
    pub marks: Vec<Monomial>,
}

/// Border monomials of `order_ideal` in ascending `ord` order.
pub fn sorted_border(order_ideal: &OrderIdeal, nvars: usize, ord: TermOrder) -> Vec<Monomial> {
    let mut border: Vec<Monomial> = order_ideal.border(nvars).into_iter().collect();
    border.sort_by(|a, b| ord.cmp(a, b));
    border
}

/// Converts a zero-dimensional (possibly specialization-colored) reduced
/// Gröbner basis into the border basis of its ideal: the order ideal is
/// the quotient basis and each border element is `m - NF(m, G)`.
pub fn gb_to_border_basis<D: GbDomain>(
    dom: &D,
    gb: &GroebnerBasis<D::Elem>,
    nvars: usize,
) -> Result<BorderBasis<D::Elem>> {
    let order_ideal = quotient_basis(dom, gb, nvars)?;
    let ctx = gb.gens.first().ok_or(Error::ZeroIdeal)?.ctx().clone();
    let block = gb.gens[0].block();
    let border = sorted_border(&order_ideal, nvars, gb.ord);
    let mut elements = Vec::with_capacity(border.len());
    for m in &border {
        let mono = Poly::term(dom, &ctx, block, m.clone(), dom.one());
        let nf = normal_form(dom, &mono, &gb.gens, gb.ord);
        elements.push(mono.sub(dom, &nf));
    }
    Ok(BorderBasis {
        order_ideal,
        elements,
        marks: border,
    })
}

/// Why a candidate set failed the border-basis check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BorderBasisDefect {
    /// The marked monomials do not cover the border exactly.
    BorderMismatch {
        missing: Vec<Monomial>,
        extra: Vec<Monomial>,
    },
    /// Element `index` is not `c * mark + (tail in the order ideal)`.
    NotPrebasisShape { index: usize, offending: Monomial },
    /// Element `index` has no (plain mode: no unit) coefficient at its mark.
    BadMarkCoefficient { index: usize },
    /// Element `index` is not a member of the reference ideal.
    NotInIdeal { index: usize },
    /// |order ideal| differs from the quotient dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// The reference ideal is not zero-dimensional.
    NotZeroDimensional,
}

impl std::fmt::Display for BorderBasisDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BorderBasisDefect::BorderMismatch { missing, extra } => {
                write!(
                    f,
                    "border monomials uncovered ({missing:?}) or spurious ({extra:?})"
                )
            }
            BorderBasisDefect::NotPrebasisShape { index, offending } => {
                write!(
                    f,
                    "element {index} has support {offending:?} outside the order ideal"
                )
            }
            BorderBasisDefect::BadMarkCoefficient { index } => {
                write!(
                    f,
                    "element {index} lacks a usable coefficient at its border monomial"
                )
            }
            BorderBasisDefect::NotInIdeal { index } => {
                write!(f, "element {index} is not in the ideal")
            }
            BorderBasisDefect::DimensionMismatch { expected, got } => {
                write!(
                    f,
                    "order ideal size {got} differs from quotient dimension {expected}"
                )
            }
            BorderBasisDefect::NotZeroDimensional => {
                write!(f, "reference ideal is not zero-dimensional")
            }
        }
    }
}

/// Checks that `candidate` is the (scalar) border basis of `<gens>`:
/// prebasis shape against the order ideal's border, membership of every
/// element in the ideal, and agreement of the order-ideal size with the
/// quotient dimension. With those three facts the classification theorem
/// for prebases inside the ideal applies, so acceptance is exact.
pub fn check_border_basis(
    candidate: &BorderBasis<Rat>,
    gens: &[Poly<Rat>],
    nvars: usize,
    ord: TermOrder,
    scalar: bool,
) -> std::result::Result<(), BorderBasisDefect> {
    let border = candidate.order_ideal.border(nvars);

    // exactly one element per border monomial
    let marks: BTreeSet<Monomial> = candidate.marks.iter().cloned().collect();
    if marks.len() != candidate.marks.len() || marks != border {
        let missing: Vec<Monomial> = border.difference(&marks).cloned().collect();
        let extra: Vec<Monomial> = marks.difference(&border).cloned().collect();
        return Err(BorderBasisDefect::BorderMismatch { missing, extra });
    }

    // shape: c * mark - tail with tail supported in the order ideal
    for (i, (el, mark)) in candidate.elements.iter().zip(&candidate.marks).enumerate() {
        let Some(c) = el.coeff(mark) else {
            return Err(BorderBasisDefect::BadMarkCoefficient { index: i });
        };
        if !scalar && c != &Rat::from_integer(1.into()) {
            return Err(BorderBasisDefect::BadMarkCoefficient { index: i });
        }
        for (m, _) in el.terms() {
            if m != mark && !candidate.order_ideal.contains(m) {
                return Err(BorderBasisDefect::NotPrebasisShape {
                    index: i,
                    offending: m.clone(),
                });
            }
        }
    }

    // reference Gröbner data
    let Ok(gb) = groebner::reduced_groebner_basis(&QQ, gens, ord) else {
        return Err(BorderBasisDefect::NotZeroDimensional);
    };
    let Ok(qb) = quotient_basis(&QQ, &gb, nvars) else {
        return Err(BorderBasisDefect::NotZeroDimensional);
    };
    if qb.len() != candidate.order_ideal.len() {
        return Err(BorderBasisDefect::DimensionMismatch {
            expected: qb.len(),
            got: candidate.order_ideal.len(),
        });
    }
    for (i, el) in candidate.elements.iter().enumerate() {
        if !groebner::ideal_membership(&QQ, el, &gb) {
            return Err(BorderBasisDefect::NotInIdeal { index: i });
        }
    }
    Ok(())
}

/// Monomial ideal membership: is `m` divisible by some generator?
pub fn in_monomial_ideal(m: &Monomial, gens: &[Monomial]) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// The leading-term monomials of a basis, for the border-form/leading-term
/// ideal comparison.
pub fn leading_monomial_ideal<D: GbDomain>(dom: &D, gb: &GroebnerBasis<D::Elem>) -> Vec<Monomial> {
    gb.gens
        .iter()
        .map(|g| eff_leading(dom, g, gb.ord).expect("nonzero").0.clone())
        .collect()
}
