//! Shared generators for the property suites. Everything is seeded so
//! failures reproduce exactly.
#![allow(dead_code)] // each test target compiles its own subset

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vertexsim::{DenseMatrix, DirectedGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random directed graph with at least one edge.
pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize, edge_prob: f64) -> DirectedGraph {
    let n = rng.gen_range(2..=max_n);
    loop {
        let mut edges = Vec::new();
        for s in 0..n {
            for d in 0..n {
                if rng.gen_bool(edge_prob) {
                    let w = if rng.gen_bool(0.5) {
                        rng.gen_range(1..=3) as f64
                    } else {
                        rng.gen_range(0.2..2.0)
                    };
                    edges.push((s, d, w));
                }
            }
        }
        if !edges.is_empty() {
            return DirectedGraph::from_weighted_edges(n, edges);
        }
    }
}

/// Random weighted circulant graph (regular by construction).
pub fn random_circulant(rng: &mut ChaCha8Rng, max_n: usize) -> DirectedGraph {
    let n = rng.gen_range(2..=max_n);
    let shift_count = rng.gen_range(1..=n);
    let mut shifts: Vec<usize> = (0..n).collect();
    for i in (1..shifts.len()).rev() {
        let j = rng.gen_range(0..=i);
        shifts.swap(i, j);
    }
    shifts.truncate(shift_count);
    let mut edges = Vec::new();
    for &s in &shifts {
        let w = rng.gen_range(1..=3) as f64;
        for i in 0..n {
            edges.push((i, (i + s) % n, w));
        }
    }
    DirectedGraph::from_weighted_edges(n, edges)
}

/// Random undirected (symmetric-adjacency) graph with at least one edge.
pub fn random_symmetric(rng: &mut ChaCha8Rng, max_n: usize, edge_prob: f64) -> DirectedGraph {
    let n = rng.gen_range(2..=max_n);
    loop {
        let mut edges = Vec::new();
        for s in 0..n {
            for d in s..n {
                if rng.gen_bool(edge_prob) {
                    let w = rng.gen_range(1..=3) as f64;
                    edges.push((s, d, w));
                    if d != s {
                        edges.push((d, s, w));
                    }
                }
            }
        }
        if !edges.is_empty() {
            return DirectedGraph::from_weighted_edges(n, edges);
        }
    }
}

/// Random symmetric non-negative dense matrix.
pub fn random_symmetric_matrix(rng: &mut ChaCha8Rng, max_n: usize) -> DenseMatrix {
    let n = rng.gen_range(2..=max_n);
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if rng.gen_bool(0.6) {
                let w = rng.gen_range(0.1..3.0);
                m.set(i, j, w);
                m.set(j, i, w);
            }
        }
    }
    m
}

/// Random entrywise-positive matrix.
pub fn random_positive_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> DenseMatrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(0.01..2.0)).collect();
    DenseMatrix::from_data(rows, cols, data)
}

/// Second-largest singular value of `m`, via the eigenvalues of `mᵀm`.
pub fn second_singular_value(m: &DenseMatrix) -> f64 {
    let gram = m.transpose().matmul(m);
    let (mut values, _) = vertexsim::linalg::jacobi_eigen(&gram).unwrap();
    values.sort_by(|a, b| b.partial_cmp(a).unwrap());
    if values.len() < 2 {
        return 0.0;
    }
    values[1].max(0.0).sqrt()
}
