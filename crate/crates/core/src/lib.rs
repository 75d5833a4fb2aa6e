//! Extended diassociative semigroups (EDS) and the dendriform structures
//! they induce on typed plane binary trees and typed words.
//!
//! The crate covers:
//! - finite EDS as operation tables, with axiom checking in two equivalent
//!   formulations, standard constructions, nondegeneracy analysis, corank,
//!   and isomorphism classification ([`eds`], [`builders`], [`nondegen`],
//!   [`iso`], [`catalog`]);
//! - exhaustive enumeration on small carriers ([`enumerate`]);
//! - the free dendriform products on typed trees and typed words, in both
//!   recursive and shuffle-combinatorial form ([`tree`], [`tree_product`],
//!   [`word`], [`shuffle`]);
//! - the induced operad: composition, associative and dendriform elements,
//!   brute-force searches over prime fields, and the arity-3 dimension of
//!   the Koszul dual ([`operad`]);
//! - dendriform bialgebra coproducts on trees and words with compatibility
//!   checkers ([`bialgebra`]);
//! - a bundled conformance suite ([`conformance`]).

pub mod bialgebra;
pub mod builders;
pub mod catalog;
pub mod conformance;
pub mod eds;
pub mod enumerate;
pub mod error;
pub mod iso;
pub mod linalg;
pub mod lincomb;
pub mod nondegen;
pub mod operad;
pub mod scalar;
pub mod shuffle;
pub mod tree;
pub mod tree_product;
pub mod word;

pub use eds::{
    check_eds, format_eds, is_eds, parse_eds, AxiomId, AxiomReport, CheckMode, FiniteEds, OpTable,
    Side, Sym, Violation,
};
pub use error::{EdsError, Result};
pub use lincomb::{LinComb, Tensor2};
pub use scalar::{Fp, Rat, Scalar};
pub use tree::TypedTree;
pub use tree_product::TreePoly;
pub use word::{TypedWord, WordPoly};
