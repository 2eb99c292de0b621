//! f̄ checked against a word-level model of `kQ` that never composes paths:
//! a path of length `n` is identified with its normal word of length `n + d`,
//! `f̄(w)` with the set of normal words of length `|w| + d` starting with `w`,
//! and products with overlaps of `d` letters. Span questions go through dense
//! Bareiss elimination instead of the sparse echelon used by the library.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ufna_core::corpus::{self, random_word, CorpusParams};
use ufna_core::exactla::{in_span, IntMatrix};
use ufna_core::language::{is_normal, normal_words, Cap};
use ufna_core::{CertificateStatus, Fbar, Path, PathCombination, Presentation, Quiver, Word};

struct WordModel<'a> {
    p: &'a Presentation,
    d: usize,
}

impl WordModel<'_> {
    fn basis(&self, n: usize) -> Vec<Word> {
        normal_words(n + self.d, self.p, Cap::DEFAULT)
            .unwrap()
            .into_words()
    }

    /// `f̄(w)` as the words of its paths.
    fn image(&self, w: &Word) -> Vec<Word> {
        self.basis(w.len())
            .into_iter()
            .filter(|big| big.prefix(w.len()) == *w)
            .collect()
    }

    /// Product of a path word with a set of path words.
    fn times(&self, path: &Word, rhs: &[Word]) -> Vec<Word> {
        rhs.iter()
            .filter(|r| path.suffix(self.d) == r.prefix(self.d))
            .map(|r| path.concat(&Word::from(&r.letters()[self.d..])))
            .collect()
    }

    fn indicator(&self, n: usize, words: &[Word]) -> Vec<BigInt> {
        let basis = self.basis(n);
        let mut v = vec![BigInt::zero(); basis.len()];
        for w in words {
            v[basis.binary_search(w).unwrap()] += BigInt::one();
        }
        v
    }

    fn slice(&self, n: usize) -> IntMatrix {
        let rows = self.basis(n).len();
        let cols: Vec<Vec<BigInt>> = normal_words(n, self.p, Cap::DEFAULT)
            .unwrap()
            .words()
            .iter()
            .map(|w| self.indicator(n, &self.image(w)))
            .collect();
        IntMatrix::from_columns(rows, &cols).unwrap()
    }

    /// Minimal `m` with `B_n f̄(A_m') ⊆ f̄(A_{n+m'})` for all `m'` in `m..=m_max`.
    fn cokernel_bound(&self, n: usize, m_max: usize) -> Option<usize> {
        let closed: Vec<bool> = (0..=m_max)
            .map(|m| {
                let image = self.slice(n + m);
                let words = normal_words(m, self.p, Cap::DEFAULT).unwrap();
                self.basis(n).iter().all(|path| {
                    words.words().iter().all(|w| {
                        let prod = self.times(path, &self.image(w));
                        in_span(&self.indicator(n + m, &prod), &image).unwrap()
                    })
                })
            })
            .collect();
        (0..=m_max).find(|&m| closed[m..].iter().all(|&c| c))
    }
}

fn word_set(q: &Quiver, c: &PathCombination) -> Vec<Word> {
    let mut out: Vec<Word> = c
        .terms()
        .map(|(p, k)| {
            assert!(k.is_one(), "coefficients of f̄ images are 0/1");
            q.path_word(p)
        })
        .collect();
    out.sort();
    out
}

#[test]
fn slices_match_word_model() {
    let mut corpus_ps: Vec<Presentation> = corpus::fixtures().into_iter().map(|(_, p)| p).collect();
    corpus_ps.extend(corpus::corpus(3, 25, &CorpusParams::default()));
    for p in &corpus_ps {
        let q = Quiver::build(p, Cap::DEFAULT).unwrap();
        let fbar = Fbar::new(p, &q, Cap::DEFAULT);
        let model = WordModel { p, d: q.d() };
        for n in 0..=5 {
            let slice = fbar.fbar_slice(n).unwrap();
            assert!(slice.characterizations_agree, "{p} n={n}");
            assert_eq!(slice.to_dense(), model.slice(n), "{p} n={n}");
            let dense_rank = slice.to_dense().rank_exact();
            assert_eq!(fbar.ker_coker(n).unwrap().rank, dense_rank, "{p} n={n}");
        }
    }
}

#[test]
fn word_images_match_slice_columns() {
    for (_, p) in corpus::fixtures() {
        let q = Quiver::build(&p, Cap::DEFAULT).unwrap();
        let fbar = Fbar::new(&p, &q, Cap::DEFAULT);
        let model = WordModel { p: &p, d: q.d() };
        for n in 0..=6 {
            let paths = fbar.paths(n).unwrap();
            let slice = fbar.fbar_slice(n).unwrap();
            for (j, w) in fbar.words(n).unwrap().words().iter().enumerate() {
                let img = fbar.fbar_word(w);
                assert_eq!(img.to_sparse(&paths), slice.column(j));
                assert_eq!(word_set(&q, &img), model.image(w));
            }
        }
    }
}

/// Hand-derived cokernel bounds are confirmed by the word model before being
/// frozen: P2 and P1 in degree 1 need m = 1, P3 and the free algebra m = 0.
#[test]
fn cokernel_bounds_match_word_model() {
    let frozen = [("P0", 0), ("P1", 1), ("P2", 1), ("P3", 0)];
    for ((name, p), (fname, expected)) in corpus::fixtures().into_iter().zip(frozen) {
        assert_eq!(name, fname);
        let q = Quiver::build(&p, Cap::DEFAULT).unwrap();
        let model = WordModel { p: &p, d: q.d() };
        assert_eq!(model.cokernel_bound(1, 6), Some(expected), "{name}");
        let fbar = Fbar::new(&p, &q, Cap::DEFAULT);
        let cert = fbar.cokernel_fdim_certificate(1, 6).unwrap();
        assert_eq!(cert.bound, Some(expected), "{name}");
    }
}

#[test]
fn cokernel_certificates_match_word_model_on_corpus() {
    for p in corpus::corpus(5, 12, &CorpusParams::default()) {
        let q = Quiver::build(&p, Cap::DEFAULT).unwrap();
        let model = WordModel { p: &p, d: q.d() };
        let fbar = Fbar::new(&p, &q, Cap::DEFAULT);
        for n in 0..=2 {
            let cert = fbar.cokernel_fdim_certificate(n, 4).unwrap();
            assert_eq!(cert.bound, model.cokernel_bound(n, 4), "{p} n={n}");
        }
    }
}

#[test]
fn kernel_bound_never_exceeds_d() {
    let mut max_seen = 0;
    for p in corpus::corpus(9, 60, &CorpusParams::default()) {
        let q = Quiver::build(&p, Cap::DEFAULT).unwrap();
        let fbar = Fbar::new(&p, &q, Cap::DEFAULT);
        for n in 0..=5 {
            let kc = fbar.ker_coker(n).unwrap();
            // Kernel words are exactly those with no normal extension of length d.
            for w in fbar.words(n).unwrap().words() {
                let extendable = q.vertices().iter().any(|v| is_normal(&w.concat(v), &p));
                assert_eq!(kc.kernel.contains(w), !extendable, "{p} {w:?}");
            }
            let cert = fbar.kernel_fdim_certificate(n, 10).unwrap();
            assert_eq!(cert.status, CertificateStatus::Certified);
            let bound = cert.bound.unwrap();
            assert!(bound <= q.d(), "{p} n={n} bound={bound}");
            max_seen = max_seen.max(bound);
        }
    }
    assert!(max_seen >= 1, "corpus should contain a nonzero kernel");
}

fn fixture(i: usize) -> Presentation {
    corpus::fixtures().swap_remove(i).1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// f̄(uv) = f̄(u) f̄(v), with only nonnegative coefficients.
    #[test]
    fn fbar_is_multiplicative(which in 0usize..4, seed in any::<u64>(), lu in 0usize..=4, lv in 0usize..=4) {
        let p = fixture(which);
        let q = Quiver::build(&p, Cap::DEFAULT).unwrap();
        let fbar = Fbar::new(&p, &q, Cap::DEFAULT);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_word(&mut rng, p.num_generators(), lu);
        let v = random_word(&mut rng, p.num_generators(), lv);
        let whole = fbar.fbar_word(&u.concat(&v));
        let product = fbar.fbar_word(&u).compose(&fbar.fbar_word(&v), &q);
        prop_assert_eq!(&whole, &product);
        prop_assert!(whole.all_nonnegative());
        prop_assert_eq!(whole.is_zero(), !is_normal(&u.concat(&v), &p) || {
            let uv = u.concat(&v);
            !q.vertices().iter().any(|x| is_normal(&uv.concat(x), &p))
        });
    }

    /// p f̄(w) = 0 exactly when no path continuing p spells w.
    #[test]
    fn no_cancellation(which in 0usize..4, seed in any::<u64>()) {
        let p = fixture(which);
        let q = Quiver::build(&p, Cap::DEFAULT).unwrap();
        let fbar = Fbar::new(&p, &q, Cap::DEFAULT);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let Some(path) = corpus::random_path(&q, &mut rng, 3) else { return Ok(()) };
        let m = rng.random_range(0..=3);
        let w = random_word(&mut rng, p.num_generators(), m);
        let prod = PathCombination::from_path(path.clone()).compose(&fbar.fbar_word(&w), &q);
        prop_assert!(prod.all_nonnegative());
        let continuations = q.enumerate_paths(m, Cap::DEFAULT).unwrap().into_iter()
            .filter(|r: &Path| r.source() == q.target(&path) && q.path_labels(r) == w)
            .count();
        prop_assert_eq!(prod.num_terms(), continuations);
    }
}
