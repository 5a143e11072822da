//! Synonym candidates from a monolingual dictionary.
//!
//! A dictionary induces a graph: every headword is a vertex and an edge
//! `u → v` records that headword `v` occurs in the definition of `u`. For
//! a query word the pipeline takes the subgraph induced by the word, its
//! definers, and its definition words, scores every vertex of that
//! neighborhood by centrality (similarity to the middle vertex of the
//! three-vertex path), and ranks the neighbors by descending score. Words
//! whose definitions overlap the query's, and that co-occur with it in
//! other definitions, rise to the top.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::DirectedGraph;
use crate::similarity::{central_scores, IterationConfig};

/// Dictionary graph plus the word ↔ vertex bijection.
#[derive(Debug, Clone)]
pub struct DictionaryGraph {
    graph: DirectedGraph,
    words: Vec<String>,
    index: HashMap<String, usize>,
}

impl DictionaryGraph {
    pub fn graph(&self) -> &DirectedGraph {
        &self.graph
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn vertex_of(&self, word: &str) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn word_of(&self, vertex: usize) -> &str {
        &self.words[vertex]
    }
}

/// Parses the tab-separated dictionary format.
///
/// One entry per line: `headword<TAB>token token ...`, tokens
/// pre-lemmatized and whitespace-separated. Lines starting with `#` and
/// blank lines are ignored. Duplicate headwords merge their token sets.
/// Vertices are the headwords in first-appearance order; each distinct
/// definition token that is itself a headword contributes one edge of
/// weight 1 (multiplicity within a definition does not count, and tokens
/// that are not headwords are dropped). A word whose definition contains
/// itself gets a self-edge.
pub fn build_dictionary_graph(text: &str) -> Result<DictionaryGraph> {
    let mut words: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut definitions: Vec<Vec<String>> = Vec::new();

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let (head, body) = line.split_once('\t').ok_or(Error::Parse {
            line: line_no,
            msg: "expected `headword<TAB>tokens...`".to_string(),
        })?;
        let head = head.trim();
        if head.is_empty() {
            return Err(Error::Parse { line: line_no, msg: "empty headword".to_string() });
        }
        let slot = *index.entry(head.to_string()).or_insert_with(|| {
            words.push(head.to_string());
            definitions.push(Vec::new());
            words.len() - 1
        });
        definitions[slot].extend(body.split_whitespace().map(str::to_string));
    }
    if words.is_empty() {
        return Err(Error::EmptyDictionary);
    }

    let mut edges = Vec::new();
    for (u, tokens) in definitions.iter().enumerate() {
        let mut seen = std::collections::HashSet::new();
        for token in tokens {
            if let Some(&v) = index.get(token.as_str()) {
                if seen.insert(v) {
                    edges.push((u, v));
                }
            }
        }
    }
    let n = words.len();
    let graph = DirectedGraph::from_edges(n, edges).with_labels(words.clone());
    Ok(DictionaryGraph { graph, words, index })
}

/// Induced subgraph around one query word.
#[derive(Debug, Clone)]
pub struct NeighborhoodGraph {
    graph: DirectedGraph,
    words: Vec<String>,
    query_vertex: usize,
}

impl NeighborhoodGraph {
    pub fn graph(&self) -> &DirectedGraph {
        &self.graph
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn query_vertex(&self) -> usize {
        self.query_vertex
    }
}

/// Subgraph induced by `word`, its in-neighbors, and its out-neighbors.
///
/// All dictionary edges among the selected vertices are kept, including
/// edges between two neighbors. Lookup is exact.
pub fn neighborhood_graph(dict: &DictionaryGraph, word: &str) -> Result<NeighborhoodGraph> {
    let center = dict
        .vertex_of(word)
        .ok_or_else(|| Error::UnknownWord(word.to_string()))?;

    let mut selected: Vec<usize> = vec![center];
    for (src, dst, _) in dict.graph.entries() {
        if src == center {
            selected.push(dst);
        }
        if dst == center {
            selected.push(src);
        }
    }
    selected.sort_unstable();
    selected.dedup();

    let local: HashMap<usize, usize> =
        selected.iter().enumerate().map(|(l, &g)| (g, l)).collect();
    let mut edges = Vec::new();
    for (src, dst, w) in dict.graph.entries() {
        if let (Some(&ls), Some(&ld)) = (local.get(&src), local.get(&dst)) {
            edges.push((ls, ld, w));
        }
    }
    let words: Vec<String> =
        selected.iter().map(|&g| dict.words[g].clone()).collect();
    let graph =
        DirectedGraph::from_weighted_edges(selected.len(), edges).with_labels(words.clone());
    Ok(NeighborhoodGraph { graph, words, query_vertex: local[&center] })
}

/// Ranked synonym candidates for one query.
#[derive(Debug, Clone)]
pub struct SynonymRanking {
    /// `(word, central score)` pairs, descending score, ties by word.
    /// The query word itself is excluded.
    pub entries: Vec<(String, f64)>,
    /// Central score the query word attained in its own neighborhood.
    pub query_score: f64,
}

/// Tie slack when deciding whether the query word topped its own ranking.
const SCORE_TIE_TOLERANCE: f64 = 1e-9;

impl SynonymRanking {
    /// Whether the query word scored at least as high as every candidate
    /// (within a small tie tolerance).
    pub fn query_ranked_first(&self) -> bool {
        self.entries
            .first()
            .is_none_or(|(_, best)| self.query_score >= best - SCORE_TIE_TOLERANCE)
    }

    /// TSV rendering: `rank<TAB>word<TAB>score`, scores with six decimals.
    pub fn to_tsv(&self, top: Option<usize>) -> String {
        let mut out = String::new();
        let limit = top.unwrap_or(self.entries.len());
        for (rank, (word, score)) in self.entries.iter().take(limit).enumerate() {
            writeln!(out, "{}\t{}\t{:.6}", rank + 1, word, score).unwrap();
        }
        out
    }
}

/// Scores the neighborhood of `word` by centrality and ranks the neighbors.
///
/// The query word participates in the solve (it anchors the neighborhood)
/// but is removed from the returned list; its own score is reported
/// separately. Candidates sort by descending score with ties broken by
/// word order, so identical inputs produce identical rankings.
pub fn rank_synonyms(
    dict: &DictionaryGraph,
    word: &str,
    cfg: &IterationConfig,
) -> Result<SynonymRanking> {
    let neighborhood = neighborhood_graph(dict, word)?;
    let (central, _report) = central_scores(neighborhood.graph(), cfg)?;

    let query_vertex = neighborhood.query_vertex();
    let query_score = central.values[query_vertex];
    let mut entries: Vec<(String, f64)> = neighborhood
        .words()
        .iter()
        .enumerate()
        .filter(|&(v, _)| v != query_vertex)
        .map(|(v, w)| (w.clone(), central.values[v]))
        .collect();
    entries.sort_by(|(wa, sa), (wb, sb)| {
        sb.partial_cmp(sa).unwrap().then_with(|| wa.cmp(wb))
    });
    Ok(SynonymRanking { entries, query_score })
}
