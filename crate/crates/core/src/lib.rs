pub mod bitset;
pub mod classical;
pub mod cli;
pub mod completion;
mod choice;
pub mod downset;
pub mod error;
pub mod expr;
pub mod lattice;
pub mod product;
pub mod report;
pub mod suite;
pub mod tensor;
pub mod universal;

pub use choice::{choice_count, for_each_choice};
pub use downset::{Antichain, DistributivityVerdict, DownSet, DEFAULT_MAX_EXPANSION};
pub use error::{Error, Result};
pub use lattice::{LatticeSpec, OrthoLattice};
pub use product::{build_product, build_product_with_limit, PTuple, ProductPoset};
pub use report::{Law, LawEntry, Mode, Report, VerifyOptions};
pub use universal::{check_u1_iso, enumerate_universal, universal_of, DistributivityCheck, UniversalLogic, DEFAULT_MAX_CARRIER};
pub use classical::{build_classical, ClassicalAlgebra, Epimorphism, GroundModel, SetLattice};
pub use tensor::{build_tensor, check_mj_distributive, Morphism, MjVerdict, TargetPair, TargetPairFile, TensorLogic};
pub use completion::{completion_distributivity, completion_functorial, event_space_completion, CompletionResult, Lifted};
pub use expr::{eval_str, parse, Expr};
