//! Dense symmetric eigensolver and the projection oracle built on it.
//!
//! The solver is a cyclic Jacobi iteration: plane rotations annihilate
//! off-diagonal entries sweep by sweep until the largest one drops under
//! `1e-14 · ‖M‖_F`. Slow next to LAPACK but foolproof for symmetric
//! matrices, and more than adequate at the few-hundred-row scale this
//! crate needs it for (verification oracles and per-component spectral
//! radii).

use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::linalg::DenseMatrix;

/// Largest product size accepted by the dense oracle paths.
pub const ORACLE_DIMENSION_LIMIT: usize = 400;

const SWEEP_LIMIT: usize = 100;

fn require_symmetric(m: &DenseMatrix) -> Result<()> {
    if m.rows() != m.cols() {
        return Err(Error::Asymmetric);
    }
    let mut err_sq = 0.0;
    for i in 0..m.rows() {
        for j in (i + 1)..m.cols() {
            let d = m.get(i, j) - m.get(j, i);
            err_sq += 2.0 * d * d;
        }
    }
    if err_sq.sqrt() > 1e-12 * m.frobenius_norm() {
        return Err(Error::Asymmetric);
    }
    Ok(())
}

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi.
///
/// Returns `(eigenvalues, eigenvectors)` with eigenvector `k` in column `k`.
/// Eigenvalues are unsorted.
pub fn jacobi_eigen(m: &DenseMatrix) -> Result<(Vec<f64>, DenseMatrix)> {
    require_symmetric(m)?;
    let n = m.rows();
    let mut a = m.clone();
    // symmetrize exactly so rotations see a consistent matrix
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (a.get(i, j) + a.get(j, i));
            a.set(i, j, avg);
            a.set(j, i, avg);
        }
    }
    let mut v = DenseMatrix::zeros(n, n);
    for i in 0..n {
        v.set(i, i, 1.0);
    }
    let threshold = 1e-14 * m.frobenius_norm();

    for _sweep in 0..SWEEP_LIMIT {
        let mut max_off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                max_off = max_off.max(a.get(p, q).abs());
            }
        }
        if max_off <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq.abs() <= threshold {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                let app = a.get(p, p);
                let aqq = a.get(q, q);
                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                for k in 0..n {
                    if k != p && k != q {
                        let akp = a.get(k, p);
                        let akq = a.get(k, q);
                        a.set(k, p, c * akp - s * akq);
                        a.set(p, k, c * akp - s * akq);
                        a.set(k, q, s * akp + c * akq);
                        a.set(q, k, s * akp + c * akq);
                    }
                }
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }
    let values = (0..n).map(|i| a.get(i, i)).collect();
    Ok((values, v))
}

/// Spectral radius (largest eigenvalue magnitude) of a symmetric matrix.
pub fn spectral_radius(m: &DenseMatrix) -> Result<f64> {
    require_symmetric(m)?;
    if m.frobenius_norm() == 0.0 {
        return Ok(0.0);
    }
    let (values, _) = jacobi_eigen(m)?;
    Ok(values.iter().fold(0.0f64, |r, &v| r.max(v.abs())))
}

/// Reference computation of the normalized even-iterate limit.
///
/// Eigendecomposes the symmetric matrix `m`, keeps every eigenvector whose
/// eigenvalue magnitude is within relative `1e-9` of the spectral radius
/// (covering the radius and its negative jointly), projects `z0` onto
/// their span, and normalizes to unit Frobenius norm. Independent of the
/// iterative path, so it serves as its oracle.
pub fn dense_projection_oracle(m: &DenseMatrix, z0: &DenseMatrix) -> Result<DenseMatrix> {
    require_symmetric(m)?;
    if m.frobenius_norm() == 0.0 {
        return Err(Error::ZeroMatrix);
    }
    assert_eq!(z0.rows(), m.rows(), "start vector must match the matrix dimension");
    let (values, vectors) = jacobi_eigen(m)?;
    let rho = values.iter().fold(0.0f64, |r, &v| r.max(v.abs()));
    let kept: Vec<usize> = (0..values.len())
        .filter(|&i| values[i].abs() >= (1.0 - 1e-9) * rho)
        .collect();

    // project via the thin basis: out = V (Vᵀ z0)
    let n = m.rows();
    let cols = z0.cols();
    let mut out = DenseMatrix::zeros(n, cols);
    for &k in &kept {
        for j in 0..cols {
            let mut coeff = 0.0;
            for i in 0..n {
                coeff += vectors.get(i, k) * z0.get(i, j);
            }
            for i in 0..n {
                let v = out.get(i, j) + coeff * vectors.get(i, k);
                out.set(i, j, v);
            }
        }
    }
    let norm = out.frobenius_norm();
    if norm > 0.0 {
        Ok(out.scaled(1.0 / norm))
    } else {
        Ok(out)
    }
}

/// Dense matrix of the coupled update in vectorized form:
/// `A⊗B + Aᵀ⊗Bᵀ` under column-major stacking of the `n_B × n_A` scores.
/// Symmetric by construction. Restricted to oracle scale.
pub fn kronecker_operator(g_a: &DirectedGraph, g_b: &DirectedGraph) -> Result<DenseMatrix> {
    let (n_a, n_b) = (g_a.vertex_count(), g_b.vertex_count());
    let n = n_a.checked_mul(n_b).ok_or(Error::SizeOverflow { n_a, n_b })?;
    if n > ORACLE_DIMENSION_LIMIT {
        return Err(Error::SizeOverflow { n_a, n_b });
    }
    let mut m = DenseMatrix::zeros(n, n);
    for (a_src, a_dst, wa) in g_a.entries() {
        for (b_src, b_dst, wb) in g_b.entries() {
            let row = a_src * n_b + b_src;
            let col = a_dst * n_b + b_dst;
            m.set(row, col, m.get(row, col) + wa * wb);
            m.set(col, row, m.get(col, row) + wa * wb);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path_graph, DirectedGraph};

    fn jacobi_path_matrix(len: usize) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(len, len);
        for i in 0..len - 1 {
            m.set(i, i + 1, 1.0);
            m.set(i + 1, i, 1.0);
        }
        m
    }

    #[test]
    fn spectral_radius_examples() {
        let diag = DenseMatrix::from_rows(&[&[3.0, 0.0], &[0.0, 1.0]]);
        assert!((spectral_radius(&diag).unwrap() - 3.0).abs() < 1e-12);

        for len in 2..=8 {
            let expected = 2.0 * (std::f64::consts::PI / (len as f64 + 1.0)).cos();
            let got = spectral_radius(&jacobi_path_matrix(len)).unwrap();
            assert!((got - expected).abs() < 1e-10, "len {len}: {got} vs {expected}");
        }

        assert_eq!(spectral_radius(&DenseMatrix::zeros(3, 3)).unwrap(), 0.0);
    }

    #[test]
    fn rejects_asymmetric() {
        let m = DenseMatrix::from_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!(matches!(spectral_radius(&m), Err(Error::Asymmetric)));
        assert!(matches!(
            dense_projection_oracle(&m, &DenseMatrix::ones(2, 1)),
            Err(Error::Asymmetric)
        ));
    }

    #[test]
    fn oracle_dominant_axis() {
        let m = DenseMatrix::from_rows(&[&[3.0, 0.0], &[0.0, 1.0]]);
        let out = dense_projection_oracle(&m, &DenseMatrix::ones(2, 1)).unwrap();
        assert!((out.get(0, 0) - 1.0).abs() < 1e-12);
        assert!(out.get(1, 0).abs() < 1e-12);
    }

    #[test]
    fn oracle_keeps_negative_radius_eigenspace() {
        // eigenvalues ±1: the kept subspace spans everything, so the
        // projection returns the normalized start vector
        let m = DenseMatrix::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let z0 = DenseMatrix::column(&[1.0, 2.0]);
        let out = dense_projection_oracle(&m, &z0).unwrap();
        let expected = z0.scaled(1.0 / 5.0f64.sqrt());
        assert!(out.distance(&expected) < 1e-12);
    }

    #[test]
    fn oracle_path_jacobi_matrix() {
        // ones lies in the span of the ±ρ eigenvectors of the 3-point
        // tridiagonal matrix, so the projection is the normalized ones
        let m = jacobi_path_matrix(3);
        let out = dense_projection_oracle(&m, &DenseMatrix::ones(3, 1)).unwrap();
        let expected = DenseMatrix::ones(3, 1).scaled(1.0 / 3.0f64.sqrt());
        assert!(out.distance(&expected) < 1e-12);
        assert!(matches!(
            dense_projection_oracle(&DenseMatrix::zeros(2, 2), &DenseMatrix::ones(2, 1)),
            Err(Error::ZeroMatrix)
        ));
    }

    #[test]
    fn kronecker_single_edges() {
        let e = path_graph(2);
        let m = kronecker_operator(&e, &e).unwrap();
        // couples product vertex (0,0) with (1,1) in both directions
        let mut expected = DenseMatrix::zeros(4, 4);
        expected.set(0, 3, 1.0);
        expected.set(3, 0, 1.0);
        assert_eq!(m, expected);
    }

    #[test]
    fn kronecker_matches_symmetrized_product_graph() {
        let a = DirectedGraph::from_weighted_edges(3, [(0, 1, 2.0), (1, 2, 1.0), (2, 0, 3.0)]);
        let b = DirectedGraph::from_weighted_edges(2, [(0, 1, 1.5), (1, 1, 0.5)]);
        let m = kronecker_operator(&a, &b).unwrap();
        let prod = crate::graph::product_graph(&a, &b).unwrap();
        let sym = prod.graph().symmetrize();
        let mut dense = DenseMatrix::zeros(6, 6);
        for (s, d, w) in sym.entries() {
            dense.set(s, d, dense.get(s, d) + w);
        }
        assert!(m.distance(&dense) < 1e-14);
    }

    #[test]
    fn oracle_scale_guard() {
        let big = path_graph(30);
        assert!(matches!(
            kronecker_operator(&big, &big),
            Err(Error::SizeOverflow { .. })
        ));
    }
}
