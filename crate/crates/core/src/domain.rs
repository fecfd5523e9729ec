//! Coefficient domains.
//!
//! Arithmetic is phrased against domain objects rather than inherent
//! methods so the same polynomial code runs over the rationals, over
//! parameter polynomials, and over parameter fractions with a
//! specialization-driven zero test.

use std::fmt::Debug;

use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number. Construction through
/// `num_rational` keeps the gcd-reduced, positive-denominator invariant.
pub type Rat = num_rational::BigRational;
pub type Int = num_bigint::BigInt;

/// `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// `n/d` as a rational.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// A commutative ring with exact arithmetic, presented as a domain object.
pub trait Domain {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// A domain in which every nonzero element is invertible.
pub trait FieldDomain: Domain {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
}

/// A field usable by the division and Buchberger machinery.
///
/// `eff_is_zero` is the zero test the basis algorithms consult for leading
/// term selection and reduction decisions. For ordinary fields it is the
/// structural test; for specialization-colored computations it evaluates
/// the coefficient at the chosen parameter point, so green coefficients
/// count as zero while remaining part of the stored polynomial.
pub trait GbDomain: FieldDomain {
    fn eff_is_zero(&self, a: &Self::Elem) -> bool {
        self.is_zero(a)
    }
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QQ;

impl Domain for QQ {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
}

impl FieldDomain for QQ {
    fn inv(&self, a: &Rat) -> Rat {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
}

impl GbDomain for QQ {}

/// Canonical text form of a rational, `a` or `a/b`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
