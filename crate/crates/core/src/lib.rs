pub mod cayley_dickson;
pub mod error;
pub mod jordan;
pub mod json;
pub mod kmatrix;
pub mod linalg;
pub mod poisson;
pub mod reduction;
pub mod report;
pub mod roots;
pub mod sampling;
pub mod scalar;
pub mod strata;
pub mod tkk;
pub mod verify;

pub use cayley_dickson::CDNumber;
pub use error::{Error, Result};
pub use jordan::{DivisionAlgebra, JordanElement, Sigma};
pub use linalg::Matrix;
pub use poisson::{ClassicalAlgebra, LieAlgebra, LiePoisson, PolyFn};
pub use reduction::{DualPairCase, OscillatorConfig, WMap};
pub use report::{CheckRecord, Report, Verdict};
pub use scalar::{BaseRing, Gaussian, Rational, Scalar};
pub use strata::{ProjPoint, StratumLabel};
pub use tkk::{TKKElement, TkkAlgebra, TkkCase};
