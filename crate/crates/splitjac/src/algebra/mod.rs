//! Exact rational, polynomial and cubic-splitting-algebra arithmetic.

pub mod field;
pub mod matching;
pub mod poly;
pub mod rat;
pub mod roots;
pub mod splitalg;

pub use field::{Field, GaussRat};
pub use matching::{match_roots, MatchError, MatchKind, Matching, TwoTorsionPattern};
pub use poly::{Poly, PolyError};
pub use rat::{
    format_rat, height, is_square, parse_rat, rat, rat_i, squarefree_part,
    squarefree_part_bounded, Rat, RatError, SquarefreeClass, DEFAULT_FACTOR_BOUND,
};
pub use splitalg::{SplitAlgError, SplitAlgebra, SplitElem};
