//! Dense containers, sparse kernels, the even-iterate solver, and the
//! dense eigen-oracle used to verify it.

mod dense;
mod eigen;
mod iterate;
mod kernels;

pub use dense::DenseMatrix;
pub use eigen::{
    dense_projection_oracle, jacobi_eigen, kronecker_operator, spectral_radius,
    ORACLE_DIMENSION_LIMIT,
};
pub use iterate::{even_iterate_limit, ConvergenceReport, StopReason};
pub use kernels::{right_mul, similarity_step, spmm, symmetrized_step};
