//! Exact scalar arithmetic and the labeled-leg tensor engine.
//!
//! Everything downstream (Hopf data, modules, crossed products) is built
//! out of `Scalar`, `Tensor` and `LinMap`. All values are immutable after
//! construction and every operation is a pure function, so checks may run
//! concurrently without locking.

pub mod linmap;
pub mod plan;
pub mod scalar;
pub mod solve;
pub mod sparse;
pub mod tensor;

pub use linmap::LinMap;
pub use plan::{ContractionPlan, Step};
pub use scalar::{Field, Scalar};
pub use solve::{solve_sparse, SparseRow};
pub use sparse::SparseTensor;
pub use tensor::{multi_indices, tensor_equal, Leg, Space, Tensor};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum KernelError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("{0}")]
    Shape(String),
    #[error("singular linear system")]
    Singular,
    #[error("step {step}: {source}")]
    Step {
        step: usize,
        #[source]
        source: Box<KernelError>,
    },
}
