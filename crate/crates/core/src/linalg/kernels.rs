//! Sparse-times-dense kernels with a fixed reduction order.
//!
//! Every product accumulates in ascending stored-entry order, so repeated
//! runs on identical inputs are bit-identical.

use crate::graph::DirectedGraph;
use crate::linalg::DenseMatrix;

/// Left-multiplies a dense matrix by a sparse adjacency: `B·X`, or `Bᵀ·X`
/// when `transpose` is set. `X` must have one row per vertex of `g`.
pub fn spmm(g: &DirectedGraph, x: &DenseMatrix, transpose: bool) -> DenseMatrix {
    assert_eq!(
        x.rows(),
        g.vertex_count(),
        "operand has {} rows but the graph has {} vertices",
        x.rows(),
        g.vertex_count()
    );
    let cols = x.cols();
    let mut out = DenseMatrix::zeros(x.rows(), cols);
    for (src, dst, w) in g.entries() {
        let (from, to) = if transpose { (src, dst) } else { (dst, src) };
        for j in 0..cols {
            let v = out.get(to, j) + w * x.get(from, j);
            out.set(to, j, v);
        }
    }
    out
}

/// Right-multiplies by the adjacency of `g`: `X·A`, or `X·Aᵀ` when
/// `transpose` is set. `X` must have one column per vertex of `g`.
pub fn right_mul(x: &DenseMatrix, g: &DirectedGraph, transpose: bool) -> DenseMatrix {
    assert_eq!(
        x.cols(),
        g.vertex_count(),
        "operand has {} columns but the graph has {} vertices",
        x.cols(),
        g.vertex_count()
    );
    let mut out = DenseMatrix::zeros(x.rows(), x.cols());
    for i in 0..x.rows() {
        for (src, dst, w) in g.entries() {
            // (X·A)_{ij} sums over k: X_{ik} A_{kj}; transposing swaps roles.
            let (from, to) = if transpose { (dst, src) } else { (src, dst) };
            let v = out.get(i, to) + w * x.get(i, from);
            out.set(i, to, v);
        }
    }
    out
}

/// One application of the coupled similarity update `X ↦ B X Aᵀ + Bᵀ X A`.
pub fn similarity_step(g_a: &DirectedGraph, g_b: &DirectedGraph, x: &DenseMatrix) -> DenseMatrix {
    let forward = right_mul(&spmm(g_b, x, false), g_a, true);
    let backward = right_mul(&spmm(g_b, x, true), g_a, false);
    forward.add(&backward)
}

/// One application of `x ↦ (B + Bᵀ) x`.
pub fn symmetrized_step(g: &DirectedGraph, x: &DenseMatrix) -> DenseMatrix {
    spmm(g, x, false).add(&spmm(g, x, true))
}
