//! Sparse multivariate polynomials over a generic coefficient domain.
//!
//! A polynomial is a finite map from monomials to nonzero coefficients
//! together with its variable context and block. The zero polynomial is
//! the empty map. All operations are pure; values are immutable once
//! built and freely shareable across threads.

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::context::{same_ctx, Block, Ctx};
use crate::domain::Domain;
use crate::monomial::Monomial;

/// A sparse polynomial with coefficients of type `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    ctx: Ctx,
    block: Block,
    terms: BTreeMap<Monomial, T>,
}

impl<T: Clone + PartialEq + Debug> Poly<T> {
    pub fn zero(ctx: &Ctx, block: Block) -> Self {
        Poly {
            ctx: ctx.clone(),
            block,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from terms, merging duplicates and dropping
    /// zero coefficients so the result is canonical.
    pub fn from_terms<D: Domain<Elem = T>>(
        dom: &D,
        ctx: &Ctx,
        block: Block,
        terms: impl IntoIterator<Item = (Monomial, T)>,
    ) -> Self {
        let mut map: BTreeMap<Monomial, T> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert!(m.len() <= ctx.block_len(block), "monomial outside block");
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = dom.add(e.get(), &c);
                    e.insert(s);
                }
            }
        }
        map.retain(|_, c| !dom.is_zero(c));
        Poly {
            ctx: ctx.clone(),
            block,
            terms: map,
        }
    }

    pub fn constant<D: Domain<Elem = T>>(dom: &D, ctx: &Ctx, block: Block, c: T) -> Self {
        Self::from_terms(dom, ctx, block, [(Monomial::one(), c)])
    }

    pub fn term<D: Domain<Elem = T>>(dom: &D, ctx: &Ctx, block: Block, m: Monomial, c: T) -> Self {
        Self::from_terms(dom, ctx, block, [(m, c)])
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn block(&self) -> Block {
        self.block
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Term iteration in ascending storage order (not the active term order).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&T> {
        self.terms.get(m)
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Total degree; zero for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            same_ctx(&self.ctx, &other.ctx) && self.block == other.block,
            "variable context mismatch"
        );
    }

    pub fn add<D: Domain<Elem = T>>(&self, dom: &D, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.entry(m.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = dom.add(e.get(), c);
                    if dom.is_zero(&s) {
                        e.remove();
                    } else {
                        e.insert(s);
                    }
                }
            }
        }
        Poly {
            ctx: self.ctx.clone(),
            block: self.block,
            terms,
        }
    }

    pub fn neg<D: Domain<Elem = T>>(&self, dom: &D) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), dom.neg(c)))
            .collect();
        Poly {
            ctx: self.ctx.clone(),
            block: self.block,
            terms,
        }
    }

    pub fn sub<D: Domain<Elem = T>>(&self, dom: &D, other: &Self) -> Self {
        self.add(dom, &other.neg(dom))
    }

    pub fn mul<D: Domain<Elem = T>>(&self, dom: &D, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut acc: BTreeMap<Monomial, T> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = dom.mul(ca, cb);
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = dom.add(e.get(), &c);
                        e.insert(s);
                    }
                }
            }
        }
        acc.retain(|_, c| !dom.is_zero(c));
        Poly {
            ctx: self.ctx.clone(),
            block: self.block,
            terms: acc,
        }
    }

    /// Multiplication by a coefficient.
    pub fn scalar_mul<D: Domain<Elem = T>>(&self, dom: &D, c: &T) -> Self {
        if dom.is_zero(c) {
            return Poly::zero(&self.ctx, self.block);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), dom.mul(a, c)))
            .filter(|(_, a)| !dom.is_zero(a))
            .collect();
        Poly {
            ctx: self.ctx.clone(),
            block: self.block,
            terms,
        }
    }

    /// Multiplication by a monomial of the same block.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.mul(m), c.clone()))
            .collect();
        Poly {
            ctx: self.ctx.clone(),
            block: self.block,
            terms,
        }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs<U, E, F>(&self, target: &E, ctx: &Ctx, block: Block, mut f: F) -> Poly<U>
    where
        U: Clone + PartialEq + Debug,
        E: Domain<Elem = U>,
        F: FnMut(&T) -> U,
    {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), f(c)))
            .filter(|(_, c)| !target.is_zero(c))
            .collect();
        Poly {
            ctx: ctx.clone(),
            block,
            terms,
        }
    }

    /// Removes and returns the coefficient at `m`, if present.
    pub(crate) fn remove_term(&mut self, m: &Monomial) -> Option<T> {
        self.terms.remove(m)
    }

    pub(crate) fn insert_term<D: Domain<Elem = T>>(&mut self, dom: &D, m: Monomial, c: T) {
        if dom.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = dom.add(e.get(), &c);
                if dom.is_zero(&s) {
                    e.remove();
                } else {
                    e.insert(s);
                }
            }
        }
    }

    /// In-place `self -= c * x^shift * g`, the workhorse of division.
    pub(crate) fn sub_scaled_shifted<D: Domain<Elem = T>>(
        &mut self,
        dom: &D,
        c: &T,
        shift: &Monomial,
        g: &Poly<T>,
    ) {
        for (m, a) in &g.terms {
            let delta = dom.neg(&dom.mul(c, a));
            self.insert_term(dom, m.mul(shift), delta);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VarContext;
    use crate::domain::{rat, ratio, QQ};

    fn ctx2() -> Ctx {
        VarContext::new(["x", "y"], []).unwrap()
    }

    /// x^2 - 1 built two ways is one value.
    #[test]
    fn canonical_merge() {
        let ctx = ctx2();
        let p = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Main,
            [
                (Monomial::var_pow(0, 2), rat(2)),
                (Monomial::one(), rat(-1)),
                (Monomial::var_pow(0, 2), rat(-1)),
            ],
        );
        let q = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Main,
            [
                (Monomial::one(), rat(-1)),
                (Monomial::var_pow(0, 2), rat(1)),
            ],
        );
        assert_eq!(p, q);
    }

    /// add(x^2 - 1, 1 - x^2) = 0
    #[test]
    fn additive_inverse_cancels() {
        let ctx = ctx2();
        let p = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Main,
            [
                (Monomial::var_pow(0, 2), rat(1)),
                (Monomial::one(), rat(-1)),
            ],
        );
        assert!(p.add(&QQ, &p.neg(&QQ)).is_zero());
    }

    /// mul(x - 1, x - 5) = x^2 - 6x + 5
    #[test]
    fn hand_expansion() {
        let ctx = ctx2();
        let a = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Main,
            [(Monomial::var(0), rat(1)), (Monomial::one(), rat(-1))],
        );
        let b = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Main,
            [(Monomial::var(0), rat(1)), (Monomial::one(), rat(-5))],
        );
        let expect = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Main,
            [
                (Monomial::var_pow(0, 2), rat(1)),
                (Monomial::var(0), rat(-6)),
                (Monomial::one(), rat(5)),
            ],
        );
        assert_eq!(a.mul(&QQ, &b), expect);
    }

    /// scalar_mul(1/3, 3y^2 - 12y + 9) = y^2 - 4y + 3
    #[test]
    fn scalar_scaling() {
        let ctx = ctx2();
        let p = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Main,
            [
                (Monomial::var_pow(1, 2), rat(3)),
                (Monomial::var(1), rat(-12)),
                (Monomial::one(), rat(9)),
            ],
        );
        let expect = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Main,
            [
                (Monomial::var_pow(1, 2), rat(1)),
                (Monomial::var(1), rat(-4)),
                (Monomial::one(), rat(3)),
            ],
        );
        assert_eq!(p.scalar_mul(&QQ, &ratio(1, 3)), expect);
    }

    #[test]
    #[should_panic(expected = "context mismatch")]
    fn mixing_contexts_is_an_error() {
        let a = Poly::constant(&QQ, &ctx2(), Block::Main, rat(1));
        let other = VarContext::new(["u"], []).unwrap();
        let b = Poly::constant(&QQ, &other, Block::Main, rat(1));
        let _ = a.add(&QQ, &b);
    }
}
