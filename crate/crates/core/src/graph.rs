//! Sparse directed multigraphs with non-negative edge weights.
//!
//! Graphs are immutable once built. Storage is compressed sparse row:
//! entries are kept sorted by `(src, dst)` with strictly positive weights,
//! so iteration order (and therefore every floating-point reduction built
//! on top of it) is deterministic.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Directed graph on `n` vertices with weighted edges.
///
/// Parallel input edges accumulate into a single weighted entry. Self-loops
/// are allowed. Vertices may carry string labels (unique when present).
#[derive(Debug, Clone, PartialEq)]
pub struct DirectedGraph {
    n: usize,
    row_ptr: Vec<usize>,
    col: Vec<usize>,
    weight: Vec<f64>,
    labels: Option<Vec<String>>,
}

impl DirectedGraph {
    /// Builds a graph from `(src, dst, weight)` triples.
    ///
    /// Duplicate `(src, dst)` pairs accumulate. Zero-weight entries are
    /// dropped. Panics on out-of-range indices or invalid weights; use
    /// [`DirectedGraph::from_edge_list`] for untrusted input.
    pub fn from_weighted_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut acc: HashMap<(usize, usize), f64> = HashMap::new();
        for (src, dst, w) in edges {
            assert!(src < n && dst < n, "edge ({src}, {dst}) out of range for {n} vertices");
            assert!(w.is_finite() && w >= 0.0, "edge weight must be finite and non-negative");
            *acc.entry((src, dst)).or_insert(0.0) += w;
        }
        let mut entries: Vec<((usize, usize), f64)> =
            acc.into_iter().filter(|&(_, w)| w > 0.0).collect();
        entries.sort_unstable_by_key(|&((s, d), _)| (s, d));
        Self::from_sorted(n, entries, None)
    }

    /// Convenience constructor for unit-weight edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_weighted_edges(n, edges.into_iter().map(|(s, d)| (s, d, 1.0)))
    }

    fn from_sorted(
        n: usize,
        entries: Vec<((usize, usize), f64)>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let mut row_ptr = vec![0usize; n + 1];
        for &((s, _), _) in &entries {
            row_ptr[s + 1] += 1;
        }
        for i in 0..n {
            row_ptr[i + 1] += row_ptr[i];
        }
        let col = entries.iter().map(|&((_, d), _)| d).collect();
        let weight = entries.iter().map(|&(_, w)| w).collect();
        DirectedGraph { n, row_ptr, col, weight, labels }
    }

    /// Parses the plain-text edge-list format.
    ///
    /// One edge per line: `src dst [weight]`, whitespace-separated. Weight
    /// defaults to 1 and must be finite and non-negative. Lines starting
    /// with `#` and blank lines are ignored. Vertices are either all
    /// non-negative integers (the graph then spans the dense index range
    /// `0..=max`) or arbitrary names (numbered in order of first
    /// appearance). Duplicate `(src, dst)` lines accumulate weight.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        struct RawEdge {
            src: String,
            dst: String,
            weight: f64,
        }
        let mut raw = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() < 2 || fields.len() > 3 {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected `src dst [weight]`, found {} fields", fields.len()),
                });
            }
            let weight = if fields.len() == 3 {
                let w: f64 = fields[2].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("invalid weight {:?}", fields[2]),
                })?;
                if !w.is_finite() {
                    return Err(Error::NonFiniteWeight { line: line_no });
                }
                if w < 0.0 {
                    return Err(Error::NegativeWeight { line: line_no, weight: w });
                }
                w
            } else {
                1.0
            };
            raw.push(RawEdge { src: fields[0].to_string(), dst: fields[1].to_string(), weight });
        }

        let all_integer = raw
            .iter()
            .all(|e| e.src.parse::<usize>().is_ok() && e.dst.parse::<usize>().is_ok());

        let mut labels = None;
        let mut acc: HashMap<(usize, usize), f64> = HashMap::new();
        let n;
        if all_integer {
            let mut max_idx = None::<usize>;
            for e in &raw {
                let s: usize = e.src.parse().unwrap();
                let d: usize = e.dst.parse().unwrap();
                max_idx = Some(max_idx.map_or(s.max(d), |m| m.max(s).max(d)));
                if e.weight > 0.0 {
                    *acc.entry((s, d)).or_insert(0.0) += e.weight;
                }
            }
            n = max_idx.map_or(0, |m| m + 1);
        } else {
            let mut index: HashMap<String, usize> = HashMap::new();
            let mut names: Vec<String> = Vec::new();
            let intern = |name: &str, index: &mut HashMap<String, usize>, names: &mut Vec<String>| {
                *index.entry(name.to_string()).or_insert_with(|| {
                    names.push(name.to_string());
                    names.len() - 1
                })
            };
            for e in &raw {
                let s = intern(&e.src, &mut index, &mut names);
                let d = intern(&e.dst, &mut index, &mut names);
                if e.weight > 0.0 {
                    *acc.entry((s, d)).or_insert(0.0) += e.weight;
                }
            }
            n = names.len();
            labels = Some(names);
        }

        let mut entries: Vec<((usize, usize), f64)> = acc.into_iter().collect();
        entries.sort_unstable_by_key(|&((s, d), _)| (s, d));
        Ok(Self::from_sorted(n, entries, labels))
    }

    /// Serializes as edge-list text, one `src dst weight` line per stored
    /// entry, sorted by `(src, dst)`. Labels are used when present.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (s, d, w) in self.entries() {
            match &self.labels {
                Some(names) => writeln!(out, "{} {} {}", names[s], names[d], w).unwrap(),
                None => writeln!(out, "{} {} {}", s, d, w).unwrap(),
            }
        }
        out
    }

    /// Attaches vertex labels; `names` must have one unique entry per vertex.
    pub fn with_labels(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n, "one label per vertex");
        self.labels = Some(names);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of stored (positive-weight) entries.
    pub fn entry_count(&self) -> usize {
        self.col.len()
    }

    pub fn has_edges(&self) -> bool {
        !self.col.is_empty()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of vertex `i`, falling back to its index.
    pub fn vertex_name(&self, i: usize) -> String {
        match &self.labels {
            Some(names) => names[i].clone(),
            None => i.to_string(),
        }
    }

    /// Stored entries in ascending `(src, dst)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |s| {
            (self.row_ptr[s]..self.row_ptr[s + 1]).map(move |k| (s, self.col[k], self.weight[k]))
        })
    }

    /// Out-neighbors of `src` as `(dst, weight)` pairs in ascending `dst` order.
    pub fn out_edges(&self, src: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        (self.row_ptr[src]..self.row_ptr[src + 1]).map(move |k| (self.col[k], self.weight[k]))
    }

    /// Weight of edge `src -> dst` (0 when absent).
    pub fn weight(&self, src: usize, dst: usize) -> f64 {
        let lo = self.row_ptr[src];
        let hi = self.row_ptr[src + 1];
        match self.col[lo..hi].binary_search(&dst) {
            Ok(k) => self.weight[lo + k],
            Err(_) => 0.0,
        }
    }

    pub fn total_weight(&self) -> f64 {
        self.weight.iter().sum()
    }

    /// Weighted in- and out-degrees: `in[j] = Σ_i w(i→j)`, `out[i] = Σ_j w(i→j)`.
    pub fn degrees(&self) -> (Vec<f64>, Vec<f64>) {
        let mut in_deg = vec![0.0; self.n];
        let mut out_deg = vec![0.0; self.n];
        for (s, d, w) in self.entries() {
            out_deg[s] += w;
            in_deg[d] += w;
        }
        (in_deg, out_deg)
    }

    /// True when all in-degrees agree and all out-degrees agree.
    ///
    /// Integer-weighted graphs are compared exactly; otherwise degrees are
    /// compared within `1e-12 * max_degree`.
    pub fn is_regular(&self) -> bool {
        assert!(self.n >= 1, "regularity is undefined for the empty graph");
        let (in_deg, out_deg) = self.degrees();
        let integral = self.weight.iter().all(|w| w.fract() == 0.0);
        let max_deg = in_deg
            .iter()
            .chain(out_deg.iter())
            .fold(0.0f64, |m, &d| m.max(d));
        let tol = if integral { 0.0 } else { 1e-12 * max_deg };
        let uniform = |deg: &[f64]| deg.iter().all(|&d| (d - deg[0]).abs() <= tol);
        uniform(&in_deg) && uniform(&out_deg)
    }

    /// True when the adjacency matrix `A` satisfies `A Aᵀ = Aᵀ A` within
    /// `1e-12 · max(1, ‖A‖_F²)` in Frobenius norm.
    pub fn is_normal(&self) -> bool {
        // AᵀA pairs entries sharing a source, AAᵀ pairs entries sharing a target.
        let mut diff: HashMap<(usize, usize), f64> = HashMap::new();
        for s in 0..self.n {
            for ka in self.row_ptr[s]..self.row_ptr[s + 1] {
                for kb in self.row_ptr[s]..self.row_ptr[s + 1] {
                    *diff.entry((self.col[ka], self.col[kb])).or_insert(0.0) -=
                        self.weight[ka] * self.weight[kb];
                }
            }
        }
        let mut by_target: Vec<Vec<(usize, f64)>> = vec![Vec::new(); self.n];
        for (s, d, w) in self.entries() {
            by_target[d].push((s, w));
        }
        for incoming in &by_target {
            for &(i, wi) in incoming {
                for &(j, wj) in incoming {
                    *diff.entry((i, j)).or_insert(0.0) += wi * wj;
                }
            }
        }
        let frob_sq: f64 = self.weight.iter().map(|w| w * w).sum();
        let err_sq: f64 = diff.values().map(|v| v * v).sum();
        err_sq.sqrt() <= 1e-12 * frob_sq.max(1.0)
    }

    /// True when the adjacency matrix is exactly symmetric.
    pub fn is_symmetric(&self) -> bool {
        self.entries().all(|(s, d, w)| self.weight(d, s) == w)
    }

    /// Returns the graph with adjacency `A + Aᵀ`.
    pub fn symmetrize(&self) -> DirectedGraph {
        let doubled = self
            .entries()
            .flat_map(|(s, d, w)| [(s, d, w), (d, s, w)])
            .collect::<Vec<_>>();
        let mut g = Self::from_weighted_edges(self.n, doubled);
        g.labels = self.labels.clone();
        g
    }

    /// Weakly connected components of the underlying undirected graph.
    ///
    /// Components are sorted by smallest member; members are ascending.
    /// Isolated vertices form singleton components.
    pub fn weakly_connected_components(&self) -> Vec<Vec<usize>> {
        let mut undirected: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (s, d, _) in self.entries() {
            undirected[s].push(d);
            undirected[d].push(s);
        }
        let mut component = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if component[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            component[start] = id;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &undirected[u] {
                    if component[v] == usize::MAX {
                        component[v] = id;
                        members.push(v);
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }
}

/// Tensor (categorical) product of two graphs.
///
/// Vertex `(i, j)` pairs vertex `i` of the second factor `g_b` with vertex
/// `j` of the first factor `g_a`; the flat index is `j * n_b + i`, i.e.
/// column-major over an `n_b × n_a` score matrix. An edge
/// `(i1, j1) → (i2, j2)` exists iff `j1 → j2` in `g_a` and `i1 → i2` in
/// `g_b`, with the product of the two weights.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    graph: DirectedGraph,
    n_a: usize,
    n_b: usize,
}

impl ProductGraph {
    pub fn graph(&self) -> &DirectedGraph {
        &self.graph
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_b(&self) -> usize {
        self.n_b
    }

    /// Flat index of the pair `(i in g_b, j in g_a)`.
    pub fn index_of(&self, i: usize, j: usize) -> usize {
        j * self.n_b + i
    }

    /// Inverse of [`ProductGraph::index_of`]: `(i in g_b, j in g_a)`.
    pub fn pair_of(&self, k: usize) -> (usize, usize) {
        (k % self.n_b, k / self.n_b)
    }
}

/// Builds the tensor product of `g_a` and `g_b`.
pub fn product_graph(g_a: &DirectedGraph, g_b: &DirectedGraph) -> Result<ProductGraph> {
    let (n_a, n_b) = (g_a.vertex_count(), g_b.vertex_count());
    if n_a == 0 || n_b == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = n_a.checked_mul(n_b).ok_or(Error::SizeOverflow { n_a, n_b })?;
    let mut edges = Vec::with_capacity(g_a.entry_count() * g_b.entry_count());
    for (a_src, a_dst, wa) in g_a.entries() {
        for (b_src, b_dst, wb) in g_b.entries() {
            edges.push((a_src * n_b + b_src, a_dst * n_b + b_dst, wa * wb));
        }
    }
    Ok(ProductGraph { graph: DirectedGraph::from_weighted_edges(n, edges), n_a, n_b })
}

/// Emits the edge list of a bow-tie: `left` source vertices each point at a
/// center, which points at each of `right` sink vertices. The center is
/// vertex 0, sources are `1..=left`, sinks follow.
pub fn bowtie_graph(left: usize, right: usize) -> DirectedGraph {
    let n = 1 + left + right;
    let mut edges = Vec::with_capacity(left + right);
    for l in 1..=left {
        edges.push((l, 0));
    }
    for r in left + 1..n {
        edges.push((0, r));
    }
    DirectedGraph::from_edges(n, edges)
}

/// Directed cycle on `n` vertices.
pub fn cycle_graph(n: usize) -> DirectedGraph {
    DirectedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Directed path `0 → 1 → … → n-1`.
pub fn path_graph(n: usize) -> DirectedGraph {
    DirectedGraph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
}
