//! Brick detection for string and band modules over string algebras.
//!
//! The crate builds the multi-entry inverse automaton (MIA) of a string
//! algebra, represents strings and bands as pointed words over it, and
//! decides brickness three ways: by the factor/image substring criterion,
//! by the brick-word criterion on the binary parity automaton, and by
//! computing endomorphism dimensions over a prime field.
//!
//! ```
//! use brickword::{algebra::Algebra, bricks, fixtures};
//!
//! let alg = Algebra::parse(fixtures::LAMBDA3).unwrap();
//! let x = alg.parse_str("b1 a1'").unwrap();
//! assert!(bricks::string_brick_direct(&alg, &x.into()).unwrap().verdict);
//! ```

pub mod algebra;
pub mod bricks;
pub mod construct;
pub mod corpus;
pub mod endo;
pub mod error;
pub mod fixtures;
pub mod mia;
pub mod recover;
pub mod strings;
pub mod sturmian;
pub mod words;

pub use algebra::{Algebra, Presentation, Sign};
pub use error::{Error, Result};
pub use mia::{BrickReport, Mia, PointedWord};
pub use strings::{Band, Str, Syllable};
pub use words::{Letter, WordRep};
