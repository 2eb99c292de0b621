use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use ufna_core::corpus::{self, CorpusParams};
use ufna_core::language::{is_normal, normal_words, Cap};
use ufna_core::{GrowthClass, Presentation, Quiver, Word};

fn presentation() -> impl Strategy<Value = Presentation> {
    (1usize..=3).prop_flat_map(|g| {
        prop::collection::vec(prop::collection::vec(0..g, 2..=4), 0..=5).prop_filter_map(
            "collapsed",
            move |rels| {
                let names = ["x", "y", "z"][..g].iter().map(|s| s.to_string()).collect();
                Presentation::new(names, rels.into_iter().map(Word::new).collect())
                    .unwrap()
                    .normalize()
                    .ok()
            },
        )
    })
}

/// Transfer-matrix count via explicit dense matrix powers.
fn matrix_power_count(q: &Quiver, n: usize) -> BigUint {
    let k = q.num_vertices();
    let mut power = ufna_core::IntMatrix::identity(k);
    for _ in 0..n {
        power = power.mul(q.adjacency()).unwrap();
    }
    power.entry_sum().to_biguint().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn paths_biject_with_normal_words(p in presentation(), n in 0usize..=5) {
        let q = Quiver::build(&p, Cap::DEFAULT).unwrap();
        let words = normal_words(n + q.d(), &p, Cap::DEFAULT).unwrap();
        prop_assert_eq!(q.count_paths(n), BigUint::from(words.dim()));
        prop_assert_eq!(q.count_paths(n), matrix_power_count(&q, n));

        let paths = q.enumerate_paths(n, Cap::DEFAULT).unwrap();
        let spelled: Vec<Word> = paths.iter().map(|path| q.path_word(path)).collect();
        // Canonical order, and every normal word exactly once.
        prop_assert_eq!(spelled.as_slice(), words.words());
        for path in &paths {
            let labels = q.path_labels(path);
            prop_assert!(is_normal(&labels, &p));
            prop_assert_eq!(labels, q.path_word(path).prefix(n));
            let back = q.path_from_word(&q.path_word(path));
            prop_assert_eq!(back.as_ref(), Some(path));
        }
    }

    #[test]
    fn label_lemma_holds(p in presentation()) {
        let q = Quiver::build(&p, Cap::DEFAULT).unwrap();
        prop_assert!(q.check_label_property().ok);
        prop_assert!(q.check_label_targets().ok);
        for a in q.arrows() {
            // w = u y = x v
            let w = &a.word;
            prop_assert_eq!(&w.prefix(q.d()), &q.vertices()[a.source]);
            prop_assert_eq!(&w.suffix(q.d()), &q.vertices()[a.target]);
            prop_assert_eq!(Some(a.label), w.first());
        }
    }

    /// Distinct arrows sharing a target are told apart by their labels, so
    /// the number of arrows into a vertex never exceeds the generator count.
    #[test]
    fn in_degree_is_bounded(p in presentation()) {
        let q = Quiver::build(&p, Cap::DEFAULT).unwrap();
        let mut seen = BTreeSet::new();
        for a in q.arrows() {
            prop_assert!(seen.insert((a.target, a.label)));
        }
    }
}

fn finite_differences(mut c: Vec<i128>, k: usize) -> Vec<i128> {
    for _ in 0..k {
        c = c.windows(2).map(|w| w[1] - w[0]).collect();
    }
    c
}

/// The growth class agrees with the dimension sequence it predicts.
#[test]
fn growth_class_matches_dimensions() {
    for p in corpus::corpus(11, 60, &CorpusParams::default()) {
        let q = Quiver::build(&p, Cap::DEFAULT).unwrap();
        let counts: Vec<i128> = (0..=40)
            .map(|n| q.count_paths(n).try_into().unwrap())
            .collect();
        match q.growth_class() {
            GrowthClass::FiniteDimensional => {
                assert!(counts[q.num_vertices()..].iter().all(|&c| c == 0), "{p}");
            }
            GrowthClass::Polynomial(k) => {
                // Bounded by C n^(k-1) and eventually nonzero: check that the
                // k-th differences of a window are bounded in size.
                let tail = finite_differences(counts[20..].to_vec(), k);
                let head = counts[20];
                assert!(
                    tail.iter().all(|d| d.abs() <= head.max(1) * 2),
                    "{p}: {counts:?}"
                );
                assert!(counts[40] > 0, "{p}");
            }
            GrowthClass::Exponential => {
                // Two cycles through a vertex give at least 2^(n / L) paths.
                assert!(
                    counts[40] > counts[20] && counts[40] >= 2 * counts[10],
                    "{p}: {counts:?}"
                );
            }
        }
    }
}
