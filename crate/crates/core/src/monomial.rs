//! Monomials as exponent vectors.
//!
//! Trailing zero exponents are trimmed so that the same power product has
//! one representation regardless of how many variables the ambient block
//! declares. The identity monomial is the empty vector.

use std::fmt;

/// A power product of the block variables, `x^alpha`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    /// The identity monomial, `1`.
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The single variable with index `idx`.
    pub fn var(idx: usize) -> Self {
        Self::var_pow(idx, 1)
    }

    /// `x_idx^e`.
    pub fn var_pow(idx: usize, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut v = vec![0; idx + 1];
        v[idx] = e;
        Monomial(v)
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = exps.into_iter().collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent of variable `idx` (zero beyond the stored length).
    pub fn exp(&self, idx: usize) -> u32 {
        self.0.get(idx).copied().unwrap_or(0)
    }

    /// Number of leading entries that may be nonzero.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree, the sum of all exponents.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree restricted to variable indices `range`.
    pub fn degree_in(&self, range: std::ops::Range<usize>) -> u32 {
        range.map(|i| self.exp(i)).sum()
    }

    /// True when every exponent outside `range` is zero.
    pub fn supported_in(&self, range: std::ops::Range<usize>) -> bool {
        (0..self.0.len()).all(|i| range.contains(&i) || self.0[i] == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::from_exponents((0..n).map(|i| self.exp(i) + other.exp(i)))
    }

    /// True when `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e <= other.exp(i))
    }

    /// `other / self` when the division is exact.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let n = self.0.len().max(other.0.len());
        Some(Monomial::from_exponents(
            (0..n).map(|i| other.exp(i) - self.exp(i)),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::from_exponents((0..n).map(|i| self.exp(i).max(other.exp(i))))
    }

    /// Exponents zero-extended to length `n`.
    pub fn exponents(&self, n: usize) -> impl Iterator<Item = u32> + '_ {
        (0..n).map(move |i| self.exp(i))
    }

    /// Drops the first `n` variables, shifting the rest down. Used to move
    /// a parameter-only monomial from the full block to the parameter block.
    pub fn strip_prefix_vars(&self, n: usize) -> Monomial {
        Monomial::from_exponents(self.0.iter().skip(n).copied())
    }

    /// Prepends `n` zero exponents, the inverse of [`strip_prefix_vars`].
    ///
    /// [`strip_prefix_vars`]: Monomial::strip_prefix_vars
    pub fn shift_up(&self, n: usize) -> Monomial {
        if self.is_one() {
            return Monomial::one();
        }
        let mut v = vec![0; n];
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    /// Keeps only the first `n` variables.
    pub fn truncate_vars(&self, n: usize) -> Monomial {
        Monomial::from_exponents(self.0.iter().take(n).copied())
    }
}

impl fmt::Display for Monomial {
    /// Debug-oriented rendering with positional variable names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "v{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
