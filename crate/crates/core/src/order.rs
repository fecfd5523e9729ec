//! Term orders on monomials.
//!
//! Variable precedence follows declaration order: the variable with index
//! 0 is largest. Block orders put the outer block of variables above every
//! power product of the inner block, comparing each block with the base
//! kind; with main variables outer and parameters inner this is the
//! elimination order the parameter-elimination step needs.

use std::cmp::Ordering;
use std::fmt;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Poly;

/// One of the three base comparison kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Lex,
    DegLex,
    DegRevLex,
}

impl BaseOrder {
    pub fn name(&self) -> &'static str {
        match self {
            BaseOrder::Lex => "lex",
            BaseOrder::DegLex => "deglex",
            BaseOrder::DegRevLex => "degrevlex",
        }
    }

    pub fn from_name(s: &str) -> Option<BaseOrder> {
        match s {
            "lex" => Some(BaseOrder::Lex),
            "deglex" => Some(BaseOrder::DegLex),
            "degrevlex" => Some(BaseOrder::DegRevLex),
            _ => None,
        }
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            BaseOrder::Lex => lex(a, b),
            BaseOrder::DegLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| lex(a, b))
            }
            BaseOrder::DegRevLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da.cmp(&db).then_with(|| {
                    for i in (0..a.len().max(b.len())).rev() {
                        let (ea, eb) = (get(a, i), get(b, i));
                        if ea != eb {
                            // smaller exponent in the last differing
                            // variable wins
                            return eb.cmp(&ea);
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

fn get(v: &[u32], i: usize) -> u32 {
    v.get(i).copied().unwrap_or(0)
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len().max(b.len()) {
        let (ea, eb) = (get(a, i), get(b, i));
        if ea != eb {
            return ea.cmp(&eb);
        }
    }
    Ordering::Equal
}

/// A total, multiplicative, well-founded order on monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Base(BaseOrder),
    /// The first `outer` variables dominate; both blocks are compared
    /// with `inner`.
    Block {
        outer: usize,
        inner: BaseOrder,
    },
}

impl TermOrder {
    pub const LEX: TermOrder = TermOrder::Base(BaseOrder::Lex);
    pub const DEGLEX: TermOrder = TermOrder::Base(BaseOrder::DegLex);
    pub const DEGREVLEX: TermOrder = TermOrder::Base(BaseOrder::DegRevLex);

    /// Elimination order with the first `outer` variables above the rest.
    pub fn elimination(outer: usize) -> TermOrder {
        TermOrder::Block {
            outer,
            inner: BaseOrder::Lex,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Base(kind) => {
                let n = a.len().max(b.len());
                let va: Vec<u32> = a.exponents(n).collect();
                let vb: Vec<u32> = b.exponents(n).collect();
                kind.cmp_slices(&va, &vb)
            }
            TermOrder::Block { outer, inner } => {
                let n = a.len().max(b.len()).max(*outer);
                let va: Vec<u32> = a.exponents(n).collect();
                let vb: Vec<u32> = b.exponents(n).collect();
                let k = (*outer).min(n);
                inner
                    .cmp_slices(&va[..k], &vb[..k])
                    .then_with(|| inner.cmp_slices(&va[k..], &vb[k..]))
            }
        }
    }

    /// The maximum of two monomials under this order.
    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Base(k) => write!(f, "{}", k.name()),
            TermOrder::Block { outer, inner } => write!(f, "block({outer}; {})", inner.name()),
        }
    }
}

/// Leading coefficient and monomial of `f` under `ord`.
///
/// This is the structural notion; the effective (specialization-colored)
/// variant lives with the division machinery.
pub fn leading_data<'a, D: Domain>(
    _dom: &D,
    f: &'a Poly<D::Elem>,
    ord: TermOrder,
) -> Result<(&'a D::Elem, &'a Monomial)> {
    f.terms()
        .max_by(|(ma, _), (mb, _)| ord.cmp(ma, mb))
        .map(|(m, c)| (c, m))
        .ok_or(Error::ZeroPolynomial)
}
