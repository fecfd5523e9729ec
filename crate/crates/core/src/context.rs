//! Variable contexts.
//!
//! A context fixes the split of the indeterminates into main variables
//! (computed over) and parameters (specialized to constants). Every
//! polynomial carries a handle to its context together with the block of
//! variables its exponents index into; combining values from different
//! contexts is a hard error, not a coercion.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Which variable block a polynomial's exponent vectors index into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Block {
    /// Main variables followed by parameters.
    Full,
    /// Main variables only.
    Main,
    /// Parameters only.
    Param,
}

/// Named main variables and parameters of a problem instance.
#[derive(Debug, PartialEq, Eq)]
pub struct VarContext {
    main: Vec<String>,
    params: Vec<String>,
}

/// Shared handle to a [`VarContext`].
pub type Ctx = Arc<VarContext>;

impl VarContext {
    /// Builds a context, checking that names are unique across both
    /// blocks and that at least one main variable is present.
    pub fn new<S: Into<String>>(
        main: impl IntoIterator<Item = S>,
        params: impl IntoIterator<Item = S>,
    ) -> Result<Ctx> {
        let main: Vec<String> = main.into_iter().map(Into::into).collect();
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        if main.is_empty() {
            return Err(Error::Unsupported(
                "at least one main variable required".into(),
            ));
        }
        let mut seen = std::collections::HashSet::new();
        for name in main.iter().chain(params.iter()) {
            if !seen.insert(name.as_str()) {
                return Err(Error::Unsupported(format!(
                    "duplicate variable name `{name}`"
                )));
            }
        }
        Ok(Arc::new(VarContext { main, params }))
    }

    pub fn n_main(&self) -> usize {
        self.main.len()
    }

    pub fn n_params(&self) -> usize {
        self.params.len()
    }

    /// Number of variables in the given block.
    pub fn block_len(&self, block: Block) -> usize {
        match block {
            Block::Full => self.main.len() + self.params.len(),
            Block::Main => self.main.len(),
            Block::Param => self.params.len(),
        }
    }

    /// Variable name at `idx` within `block`.
    pub fn name(&self, block: Block, idx: usize) -> &str {
        match block {
            Block::Full => {
                if idx < self.main.len() {
                    &self.main[idx]
                } else {
                    &self.params[idx - self.main.len()]
                }
            }
            Block::Main => &self.main[idx],
            Block::Param => &self.params[idx],
        }
    }

    pub fn main_names(&self) -> &[String] {
        &self.main
    }

    pub fn param_names(&self) -> &[String] {
        &self.params
    }

    /// Index of `name` within `block`, if declared there.
    pub fn lookup(&self, block: Block, name: &str) -> Option<usize> {
        let (a, b): (&[String], &[String]) = match block {
            Block::Full => (&self.main, &self.params),
            Block::Main => (&self.main, &[]),
            Block::Param => (&self.params, &[]),
        };
        a.iter()
            .position(|n| n == name)
            .or_else(|| b.iter().position(|n| n == name).map(|i| i + a.len()))
    }
}

impl fmt::Display for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}]", self.main.join(" "), self.params.join(" "))
    }
}

/// True when the two handles denote the same context (pointer fast path,
/// then structural comparison).
pub fn same_ctx(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
