//! Command-line front end: similarity matrices, hub/authority/central
//! scores, support patterns, synonym ranking, and a bow-tie fixture
//! generator.
//!
//! Matrix output goes to stdout (CSV by default, JSON on request);
//! convergence reports and warnings go to stderr so stdout stays
//! machine-parseable. Exit codes: 0 success, 2 input error, 3 when an
//! iteration hit its budget (the partial result is still emitted).

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use vertexsim::{
    build_dictionary_graph, bowtie_graph, central_scores, hub_authority_scores, rank_synonyms,
    self_similarity, similarity_matrix, similarity_matrix_oracle, support_pattern,
    ConvergenceReport, DenseMatrix, DirectedGraph, IterationConfig, SimilarityMatrix, StopReason,
};

const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_NOT_CONVERGED: u8 = 3;

#[derive(Parser)]
#[command(name = "vertexsim", version, about = "Vertex similarity scores for directed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Similarity matrix between a structure graph and a target graph
    Similarity {
        /// Structure graph edge list ("-" reads stdin)
        #[arg(long = "graph-a")]
        graph_a: String,
        /// Target graph edge list ("-" reads stdin)
        #[arg(long = "graph-b")]
        graph_b: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long = "max-iters", default_value_t = 200_000)]
        max_iters: usize,
        /// Always run the coupled iteration, even when a closed form applies
        #[arg(long = "no-fast-path")]
        no_fast_path: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: MatrixFormat,
        /// Cross-check the result against the generic iteration and, at
        /// small sizes, the dense projection oracle
        #[arg(long)]
        verify: bool,
    },
    /// Similarity of a graph with itself
    SelfSimilarity {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long = "max-iters", default_value_t = 200_000)]
        max_iters: usize,
        #[arg(long = "no-fast-path")]
        no_fast_path: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: MatrixFormat,
        #[arg(long)]
        verify: bool,
    },
    /// Hub and authority scores (TSV: vertex, hub, authority)
    HubAuthority {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long = "max-iters", default_value_t = 200_000)]
        max_iters: usize,
    },
    /// Central scores (TSV: vertex, score)
    Central {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long = "max-iters", default_value_t = 200_000)]
        max_iters: usize,
    },
    /// Predicted nonzero pattern of the similarity matrix (0/1 matrix)
    Support {
        #[arg(long = "graph-a")]
        graph_a: String,
        #[arg(long = "graph-b")]
        graph_b: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: MatrixFormat,
    },
    /// Synonym candidates for a word (TSV: rank, word, score)
    Synonyms {
        /// Dictionary file: headword<TAB>tokens per line ("-" reads stdin)
        #[arg(long)]
        dict: String,
        #[arg(long)]
        word: String,
        /// Emit only the first K candidates
        #[arg(long)]
        top: Option<usize>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long = "max-iters", default_value_t = 200_000)]
        max_iters: usize,
    },
    /// Emit the edge list of a bow-tie graph (sources -> center -> sinks)
    Bowtie {
        /// Number of source vertices pointing at the center
        #[arg(long)]
        left: usize,
        /// Number of sink vertices the center points at
        #[arg(long)]
        right: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn load_graph(label: &str, path: &str) -> Result<DirectedGraph, String> {
    let text = read_input(path)?;
    DirectedGraph::from_edge_list(&text).map_err(|e| format!("{label} ({path}): {e}"))
}

fn config(tol: f64, max_iters: usize, fast: bool) -> IterationConfig {
    IterationConfig {
        tolerance: tol,
        max_operator_applications: max_iters,
        use_fast_paths: fast,
    }
}

fn print_matrix(m: &DenseMatrix, format: MatrixFormat) {
    match format {
        MatrixFormat::Csv => print!("{}", m.to_csv()),
        MatrixFormat::Json => println!("{}", m.to_json()),
    }
}

fn report_exit(report: &ConvergenceReport) -> ExitCode {
    match report.stop_reason {
        StopReason::Converged => {
            eprintln!(
                "converged: {} operator applications, residual {:.3e}",
                report.iterations, report.residual
            );
            ExitCode::SUCCESS
        }
        StopReason::MaxIterations => {
            eprintln!(
                "warning: iteration budget exhausted after {} applications (residual {:.3e}); emitting last iterate",
                report.iterations, report.residual
            );
            ExitCode::from(EXIT_NOT_CONVERGED)
        }
        StopReason::ZeroOperator => {
            eprintln!("warning: operator annihilated the iterate; emitting last iterate");
            ExitCode::from(EXIT_NOT_CONVERGED)
        }
    }
}

fn verify_similarity(
    g_a: &DirectedGraph,
    g_b: &DirectedGraph,
    cfg: &IterationConfig,
    result: &SimilarityMatrix,
) -> Result<(), String> {
    let generic = similarity_matrix(g_a, g_b, &IterationConfig { use_fast_paths: false, ..*cfg })
        .map_err(|e| format!("verification rerun failed: {e}"))?;
    let vs_generic = result.scores.distance(&generic.scores);
    eprintln!("verify: |result - generic iteration| = {vs_generic:.3e}");
    if vs_generic > 1e-6 {
        return Err(format!(
            "verification failed: fast path and generic iteration disagree by {vs_generic:.3e}"
        ));
    }
    if g_a.vertex_count() * g_b.vertex_count() <= vertexsim::linalg::ORACLE_DIMENSION_LIMIT {
        let oracle = similarity_matrix_oracle(g_a, g_b)
            .map_err(|e| format!("oracle verification failed: {e}"))?;
        let vs_oracle = result.scores.distance(&oracle);
        eprintln!("verify: |result - dense projection oracle| = {vs_oracle:.3e}");
        if vs_oracle > 1e-6 {
            return Err(format!(
                "verification failed: result and dense oracle disagree by {vs_oracle:.3e}"
            ));
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Similarity {
            graph_a,
            graph_b,
            tol,
            max_iters,
            no_fast_path,
            format,
            verify,
        } => {
            let g_a = load_graph("graph-a", &graph_a)?;
            let g_b = load_graph("graph-b", &graph_b)?;
            let cfg = config(tol, max_iters, !no_fast_path);
            let s = similarity_matrix(&g_a, &g_b, &cfg)
                .map_err(|e| format!("similarity: {e}"))?;
            if verify {
                verify_similarity(&g_a, &g_b, &cfg, &s)?;
            }
            print_matrix(&s.scores, format);
            Ok(report_exit(&s.report))
        }
        Command::SelfSimilarity { graph, tol, max_iters, no_fast_path, format, verify } => {
            let g = load_graph("graph", &graph)?;
            let cfg = config(tol, max_iters, !no_fast_path);
            let s = self_similarity(&g, &cfg).map_err(|e| format!("self-similarity: {e}"))?;
            if verify {
                verify_similarity(&g, &g, &cfg, &s)?;
            }
            print_matrix(&s.scores, format);
            Ok(report_exit(&s.report))
        }
        Command::HubAuthority { graph, tol, max_iters } => {
            let g = load_graph("graph", &graph)?;
            let cfg = config(tol, max_iters, true);
            let (hub, authority, report) =
                hub_authority_scores(&g, &cfg).map_err(|e| format!("hub-authority: {e}"))?;
            for i in 0..g.vertex_count() {
                println!("{}\t{:.6}\t{:.6}", g.vertex_name(i), hub.values[i], authority.values[i]);
            }
            Ok(report_exit(&report))
        }
        Command::Central { graph, tol, max_iters } => {
            let g = load_graph("graph", &graph)?;
            let cfg = config(tol, max_iters, true);
            let (central, report) =
                central_scores(&g, &cfg).map_err(|e| format!("central: {e}"))?;
            for i in 0..g.vertex_count() {
                println!("{}\t{:.6}", g.vertex_name(i), central.values[i]);
            }
            Ok(report_exit(&report))
        }
        Command::Support { graph_a, graph_b, format } => {
            let g_a = load_graph("graph-a", &graph_a)?;
            let g_b = load_graph("graph-b", &graph_b)?;
            let pattern = support_pattern(&g_a, &g_b).map_err(|e| format!("support: {e}"))?;
            let mut m = DenseMatrix::zeros(pattern.rows(), pattern.cols());
            for i in 0..pattern.rows() {
                for j in 0..pattern.cols() {
                    if pattern.get(i, j) {
                        m.set(i, j, 1.0);
                    }
                }
            }
            print_matrix(&m, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Synonyms { dict, word, top, tol, max_iters } => {
            let text = read_input(&dict)?;
            let dictionary =
                build_dictionary_graph(&text).map_err(|e| format!("dict ({dict}): {e}"))?;
            let cfg = config(tol, max_iters, true);
            let ranking = rank_synonyms(&dictionary, &word, &cfg)
                .map_err(|e| format!("synonyms: {e}"))?;
            print!("{}", ranking.to_tsv(top));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bowtie { left, right } => {
            if left == 0 || right == 0 {
                return Err("bowtie: --left and --right must be at least 1".to_string());
            }
            print!("{}", bowtie_graph(left, right).to_edge_list());
            Ok(ExitCode::SUCCESS)
        }
    }
}
