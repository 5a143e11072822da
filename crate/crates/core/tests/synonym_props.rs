//! Pipeline-level properties of the synonym ranking.

use vertexsim::{build_dictionary_graph, rank_synonyms, IterationConfig};

fn cfg() -> IterationConfig {
    IterationConfig::default()
}

/// Entries whose words are neither the query nor its neighbors cannot
/// change the query's ranking: the neighborhood solve never sees them.
#[test]
fn ranking_ignores_unrelated_entries() {
    let base = "\
q\ta b
a\tq b
b\ta q
c\td
d\tc
";
    // extra entries connect only to the c/d cluster and to fresh words
    let extended = format!("{base}e\tc f\nf\te d\ng\te f\n");

    let dict_base = build_dictionary_graph(base).unwrap();
    let dict_ext = build_dictionary_graph(&extended).unwrap();
    let before = rank_synonyms(&dict_base, "q", &cfg()).unwrap();
    let after = rank_synonyms(&dict_ext, "q", &cfg()).unwrap();
    assert_eq!(before.to_tsv(None), after.to_tsv(None));
    assert_eq!(before.query_score, after.query_score);
}

/// The shipped dictionaries parse, are well-formed, and rank their own
/// headwords first (ties included).
#[test]
fn shipped_dictionaries_satisfy_query_first() {
    let path = format!("{}/../../fixtures/motion.tsv", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(path).unwrap();
    let dict = build_dictionary_graph(&text).unwrap();
    assert!(dict.word_count() >= 50);
    for word in dict.words().to_vec() {
        match rank_synonyms(&dict, &word, &cfg()) {
            Ok(ranking) => assert!(
                ranking.query_ranked_first(),
                "{word:?} did not rank first: query {:.6}, top {:?}",
                ranking.query_score,
                ranking.entries.first()
            ),
            Err(vertexsim::Error::EdgelessGraph) => continue,
            Err(e) => panic!("{word:?}: {e}"),
        }
    }
}

/// Rankings never contain the query itself and scores never increase.
#[test]
fn ranking_shape_invariants() {
    let text = "x\ty z w\ny\tx z\nz\tx y\nw\tx\n";
    let dict = build_dictionary_graph(text).unwrap();
    for word in ["x", "y", "z", "w"] {
        let ranking = rank_synonyms(&dict, word, &cfg()).unwrap();
        assert!(ranking.entries.iter().all(|(w, _)| w != word));
        for pair in ranking.entries.windows(2) {
            assert!(pair[0].1 >= pair[1].1 - 1e-12);
        }
        assert!(ranking.entries.iter().all(|&(_, s)| s >= 0.0));
    }
}
