//! Similarity scores between vertices of directed graphs.
//!
//! Two directed graphs — a small "structure" graph whose vertices act as
//! archetypes and a target graph whose vertices get scored — are compared
//! by a coupled fixed point: scores flow along edges of both graphs at
//! once until the normalized even iterates settle. The result is a
//! non-negative score matrix of unit Frobenius norm; see
//! [`similarity::similarity_matrix`].
//!
//! The classic special cases have dedicated entry points: hub/authority
//! scores ([`similarity::hub_authority_scores`]), central scores against
//! the three-vertex path ([`similarity::central_scores`]), self-similarity
//! of a graph with itself, and rank-one closed forms for regular or
//! undirected graphs. A dictionary-based synonym extractor built on the
//! central score lives in [`synonyms`].
//!
//! Everything is deterministic: sparse reductions run in stored-entry
//! order, so identical inputs produce bit-identical outputs.

pub mod error;
pub mod graph;
pub mod linalg;
pub mod similarity;
pub mod synonyms;

pub use error::{Error, Result};
pub use graph::{
    bowtie_graph, cycle_graph, path_graph, product_graph, DirectedGraph, ProductGraph,
};
pub use linalg::{
    dense_projection_oracle, even_iterate_limit, kronecker_operator, spectral_radius, spmm,
    ConvergenceReport, DenseMatrix, StopReason,
};
pub use similarity::{
    central_scores, hub_authority_scores, rank_one_similarity, self_similarity,
    similarity_matrix, similarity_matrix_oracle, support_pattern, IterationConfig, ScoreKind,
    ScoreVector, SimilarityMatrix, SupportPattern,
};
pub use synonyms::{
    build_dictionary_graph, neighborhood_graph, rank_synonyms, DictionaryGraph,
    NeighborhoodGraph, SynonymRanking,
};
