//! Proof-net categories and their graphs.
//!
//! Arrow terms of six related theories are type-checked, interpreted as
//! Brauerian split equivalences, and compared: two terms of the same type
//! are equal in a theory exactly when their graphs coincide.

pub mod arrows;
pub mod brauer;
pub mod checks;
pub mod decide;
pub mod formula;
pub mod random;
pub mod rewrite;
pub mod semantics;
pub mod session;
pub mod syntax;
pub mod translate;

pub use arrows::{parse_arrow, print_arrow, ArrowType, Generator, Term, Theory};
pub use brauer::{compose, shift_union, Endpoint, SplitEquivalence};
pub use formula::{Connective, Formula, Letter};
pub use semantics::{g_arrow, g_object};
pub use decide::{equal_in, Verdict};
pub use rewrite::{axiom_catalog, develop, is_developed, theorem_catalog, EquationSchema};
