//! The built-in corpus of named groups used by the `corpus` command and the
//! acceptance suite.

use crate::engine::GroupEngine;
use crate::error::Result;
use crate::families::{
    affine_1, alternating, counterexample_group, cyclic_regular, dihedral, mathieu, pgl2,
    pgl2_claim_is_classical, square_symmetry, symmetric,
};

pub struct CorpusEntry {
    pub name: String,
    pub engine: GroupEngine,
    /// Every `k` for which the group is known to be sharply k-transitive.
    pub sharply_k: Vec<usize>,
    pub note: Option<&'static str>,
}

impl CorpusEntry {
    fn new(name: impl Into<String>, engine: GroupEngine, sharply_k: Vec<usize>) -> CorpusEntry {
        CorpusEntry {
            name: name.into(),
            engine,
            sharply_k,
            note: None,
        }
    }

    fn with_note(mut self, note: &'static str) -> CorpusEntry {
        self.note = Some(note);
        self
    }
}

/// S_4..S_7, A_6..A_8, cyclic and dihedral series, affine and projective
/// families, both Mathieu groups, the square and the counterexample.
pub fn default_corpus() -> Result<Vec<CorpusEntry>> {
    let mut corpus = Vec::new();
    for n in 4..=7 {
        corpus.push(CorpusEntry::new(
            format!("symmetric({n})"),
            symmetric(n)?,
            vec![n - 1, n],
        ));
    }
    for n in 6..=8 {
        corpus.push(CorpusEntry::new(
            format!("alternating({n})"),
            alternating(n)?,
            vec![n - 2],
        ));
    }
    for n in 2..=12 {
        // C_2 is also S_2
        let ks = if n == 2 { vec![1, 2] } else { vec![1] };
        corpus.push(CorpusEntry::new(
            format!("cyclic({n})"),
            cyclic_regular(n)?,
            ks,
        ));
    }
    for n in [3, 5, 6, 7, 8] {
        // D_6 on three points is S_3
        let ks = if n == 3 { vec![2, 3] } else { vec![] };
        corpus.push(CorpusEntry::new(format!("dihedral({n})"), dihedral(n)?, ks));
    }
    corpus.push(CorpusEntry::new("square", square_symmetry(), vec![]));
    for (p, m) in [(5, 1), (7, 1), (2, 3), (3, 2)] {
        corpus.push(CorpusEntry::new(
            format!("affine({p},{m})"),
            affine_1(p, m)?,
            vec![2],
        ));
    }
    for q in [2u64, 3, 4, 5, 8] {
        let ks = match q {
            2 => vec![2, 3],
            3 => vec![3, 4],
            _ => vec![3],
        };
        let entry = CorpusEntry::new(format!("pgl2({q})"), pgl2(q)?, ks);
        corpus.push(if pgl2_claim_is_classical(q) {
            entry.with_note("sharp 3-transitivity is the classical even-characteristic case")
        } else {
            entry.with_note("sharp 3-transitivity verified computationally")
        });
    }
    corpus.push(CorpusEntry::new("mathieu11", mathieu(11)?, vec![4]));
    corpus.push(CorpusEntry::new("mathieu12", mathieu(12)?, vec![5]));
    corpus.push(CorpusEntry::new(
        "counterexample",
        counterexample_group(),
        vec![],
    ));
    Ok(corpus)
}
