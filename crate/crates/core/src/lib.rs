//! Border bases, Gröbner bases, border systems and comprehensive border
//! bases for zero-dimensional parametric polynomial ideals over the
//! rationals, with exact arithmetic throughout and a built-in
//! verification oracle.
//!
//! The variables of an instance split into main variables (computed
//! over) and parameters (specialized to rational constants). For a
//! zero-dimensional generating set the crate computes:
//!
//! - reduced Gröbner bases and border bases over the rationals,
//! - a border system: finitely many (condition, order ideal, basis)
//!   branches partitioning parameter space,
//! - a comprehensive border basis: one polynomial set that specializes
//!   to a scalar border basis under every rational specialization,
//! - the same border system again through point-wise Gröbner systems,
//!   which doubles as a consistency check on the direct route.
//!
//! ```
//! use cbb_core::{compute_border_system, compute_cbb, parse_system};
//! use cbb_core::{specialize_cbb, verify_cbb, Specialization, VanishingMode};
//!
//! let system = parse_system(
//!     "main_vars x\nparams u\norder deglex\npoly x^2 - u\npoly u^2 - 3u + 2\n",
//! )?;
//! let bs = compute_border_system(&system.polys, system.order)?;
//! // u=1 and u=2 share the conditional basis {x^2 - u}, so compression
//! // merges them; the generic branch covers the rest of the line
//! assert_eq!(bs.branches.len(), 2);
//!
//! let cbb = compute_cbb(&bs, VanishingMode::Squares)?;
//! assert!(verify_cbb(&cbb, &system.polys, 10, 0).all_ok());
//!
//! // at u=2 the surviving elements cut out x^2 - 2
//! let two = cbb_core::domain::rat(2);
//! let at2 = specialize_cbb(&cbb, &Specialization::new(vec![two]))?;
//! assert_eq!(at2.order_ideal.len(), 2);
//! # Ok::<(), cbb_core::Error>(())
//! ```

pub mod border;
pub mod compsys;
pub mod context;
pub mod domain;
pub mod error;
pub mod groebner;
pub mod monomial;
pub mod order;
pub mod param;
pub mod parametric;
pub mod parse;
pub mod poly;
pub mod render;

pub use border::{check_border_basis, gb_to_border_basis, BorderBasis, OrderIdeal};
pub use compsys::{
    compress_system, compute_border_system, compute_cbb, pointwise_groebner_system,
    reduced_gs_to_bs, specialize_cbb, verify_border_system, verify_cbb, BorderSystem,
    ComprehensiveBorderBasis, GenericBranchPayload, VanishingMode,
};
pub use context::{Block, Ctx, VarContext};
pub use domain::{Rat, QQ};
pub use error::{Error, Result};
pub use groebner::{
    elimination_ideal, ideal_membership, normal_form, quotient_basis, reduced_groebner_basis,
    GroebnerBasis,
};
pub use monomial::Monomial;
pub use order::{BaseOrder, TermOrder};
pub use parametric::{
    color_polynomial, conditional_border_basis, rational_variety, to_scalar_basis, Condition,
    Specialization,
};
pub use parse::{parse_poly, parse_specialization, parse_system, SystemFile};
pub use poly::Poly;
