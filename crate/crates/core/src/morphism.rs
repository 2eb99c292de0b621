//! The graded homomorphism `f̄ : A -> kQ`.
//!
//! A letter `x` goes to the sum of all arrows labelled `x` (zero if there are
//! none); a word goes to the product of its letters' images, computed by path
//! composition. Degree by degree this gives 0/1 matrices from the normal-word
//! basis of `A_n` to the path basis of `(kQ)_n`, and the checks below work
//! with those matrices exactly.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exactla::{IntMatrix, SpanBasis, SparseVec};
use crate::language::{is_normal, normal_words, right_extensions, Cap, DegreeBasis};
use crate::presentation::{Presentation, Word};
use crate::quiver::{Path, Quiver};

/// A homogeneous element of `kQ`: an integer combination of paths.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathCombination {
    terms: BTreeMap<Path, BigInt>,
}

impl PathCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, BigInt::one());
        PathCombination { terms }
    }

    pub fn add_term(&mut self, p: Path, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Path) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The product `self * other` in `kQ`.
    pub fn compose(&self, other: &PathCombination, q: &Quiver) -> PathCombination {
        let mut by_source: HashMap<usize, Vec<(&Path, &BigInt)>> = HashMap::new();
        for (p, c) in &other.terms {
            by_source.entry(p.source()).or_default().push((p, c));
        }
        let mut out = PathCombination::zero();
        for (p, a) in &self.terms {
            if let Some(right) = by_source.get(&q.target(p)) {
                for (r, b) in right {
                    let pr = q.compose(p, r).expect("matching endpoints compose");
                    out.add_term(pr, a * *b);
                }
            }
        }
        out
    }

    /// Keeps the terms ending at `v`: right multiplication by `e_v`.
    pub fn ending_at(&self, v: usize, q: &Quiver) -> PathCombination {
        PathCombination {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| q.target(p) == v)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coordinates in a path basis. Panics if a term is not in the basis.
    pub fn to_sparse(&self, basis: &PathBasis) -> SparseVec {
        SparseVec::from_entries(self.terms.iter().map(|(p, c)| {
            let i = basis.index_of(p).expect("path belongs to the basis degree");
            (i, c.clone())
        }))
    }
}

/// The paths of one length in canonical order.
#[derive(Clone, Debug)]
pub struct PathBasis {
    degree: usize,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl PathBasis {
    pub fn new(q: &Quiver, degree: usize, cap: Cap) -> Result<Self> {
        let paths = q.enumerate_paths(degree, cap)?;
        let index = paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(PathBasis {
            degree,
            paths,
            index,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }
}

/// The matrix of `f̄_n : A_n -> (kQ)_n`. Entries are 0/1; each column is
/// stored as the list of rows holding a one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMapSlice {
    pub degree: usize,
    pub rows: usize,
    pub columns: Vec<Vec<usize>>,
    /// Whether the label-matching and the extension descriptions of the
    /// columns produced the same matrix.
    pub characterizations_agree: bool,
}

impl GradedMapSlice {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        u8::from(self.columns[col].binary_search(&row).is_ok())
    }

    pub fn column(&self, col: usize) -> SparseVec {
        SparseVec::indicator(&self.columns[col])
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &i in col {
                m.set(i, j, BigInt::one());
            }
        }
        m
    }

    pub fn zero_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.columns
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_empty())
            .map(|(j, _)| j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KerCoker {
    pub degree: usize,
    pub dim_a: usize,
    pub dim_b: usize,
    pub rank: usize,
    /// Normal words whose image is zero; they span the kernel.
    pub kernel: Vec<Word>,
    pub coker_dim: usize,
    /// Whether the nonzero columns turned out linearly independent, which is
    /// what makes the zero columns a kernel basis.
    pub nonzero_columns_independent: bool,
}

impl KerCoker {
    pub fn ker_dim(&self) -> usize {
        self.dim_a - self.rank
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanCheck {
    pub degree: usize,
    pub rank: usize,
    pub dim_b: usize,
}

impl SpanCheck {
    pub fn ok(&self) -> bool {
        self.rank == self.dim_b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    Kernel,
    Cokernel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateStatus {
    Certified,
    NotFoundWithinCap,
}

/// Witness that the degree-`n` part of `ker f̄` or `coker f̄` is killed by
/// `A_{>= bound}`, checked for every `m'` from the bound up to `m_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdimCertificate {
    pub kind: CertificateKind,
    pub degree: usize,
    pub bound: Option<usize>,
    pub m_max: usize,
    pub status: CertificateStatus,
    /// `(m', condition holds at m')` for `m' = 0..=m_max`.
    pub table: Vec<(usize, bool)>,
}

impl FdimCertificate {
    fn from_table(kind: CertificateKind, degree: usize, table: Vec<(usize, bool)>) -> Self {
        let m_max = table.len() - 1;
        let bound = table
            .iter()
            .rev()
            .take_while(|(_, ok)| *ok)
            .last()
            .map(|(m, _)| *m);
        FdimCertificate {
            kind,
            degree,
            bound,
            m_max,
            status: if bound.is_some() {
                CertificateStatus::Certified
            } else {
                CertificateStatus::NotFoundWithinCap
            },
            table,
        }
    }

    pub fn is_certified(&self) -> bool {
        self.status == CertificateStatus::Certified
    }
}

/// Finite-dimensionality of the cyclic module `p kQ`, decided both over `kQ`
/// (via cycles reachable from the end of `p`) and over `A` (via `p f̄(A_m)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicProbe {
    pub path: Path,
    pub n_max: usize,
    pub finite_over_kq: bool,
    pub finite_over_a: bool,
    /// Smallest `m <= n_max` with `p f̄(A_m) = 0`.
    pub annihilated_from: Option<usize>,
    /// Once zero, `p f̄(A_m)` stayed zero up to `n_max`.
    pub monotone: bool,
}

impl CyclicProbe {
    pub fn agree(&self) -> bool {
        self.finite_over_kq == self.finite_over_a && self.monotone
    }
}

#[derive(Default)]
struct Cache {
    words: HashMap<usize, Arc<DegreeBasis>>,
    paths: HashMap<usize, Arc<PathBasis>>,
    images: HashMap<usize, Arc<Vec<PathCombination>>>,
    spans: HashMap<usize, Arc<SpanBasis>>,
}

/// `f̄` for one presentation and its quiver, with per-degree bases cached.
pub struct Fbar<'a> {
    presentation: &'a Presentation,
    quiver: &'a Quiver,
    cap: Cap,
    cache: Mutex<Cache>,
}

impl<'a> Fbar<'a> {
    pub fn new(presentation: &'a Presentation, quiver: &'a Quiver, cap: Cap) -> Self {
        Fbar {
            presentation,
            quiver,
            cap,
            cache: Mutex::new(Cache::default()),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        self.quiver
    }

    fn cached<T>(
        &self,
        pick: impl Fn(&mut Cache) -> &mut HashMap<usize, Arc<T>>,
        n: usize,
        make: impl FnOnce() -> Result<T>,
    ) -> Result<Arc<T>> {
        if let Some(v) = pick(&mut self.cache.lock().unwrap()).get(&n) {
            return Ok(v.clone());
        }
        let v = Arc::new(make()?);
        pick(&mut self.cache.lock().unwrap()).insert(n, v.clone());
        Ok(v)
    }

    pub fn words(&self, n: usize) -> Result<Arc<DegreeBasis>> {
        self.cached(
            |c| &mut c.words,
            n,
            || normal_words(n, self.presentation, self.cap),
        )
    }

    pub fn paths(&self, n: usize) -> Result<Arc<PathBasis>> {
        self.cached(
            |c| &mut c.paths,
            n,
            || PathBasis::new(self.quiver, n, self.cap),
        )
    }

    /// `f̄(w)` for every normal word `w` of length `n`, in basis order.
    pub fn images(&self, n: usize) -> Result<Arc<Vec<PathCombination>>> {
        let words = self.words(n)?;
        self.cached(
            |c| &mut c.images,
            n,
            || Ok(words.words().iter().map(|w| self.fbar_word(w)).collect()),
        )
    }

    /// Row-echelon basis of `f̄(A_n)` inside `(kQ)_n`.
    fn image_span(&self, n: usize) -> Result<Arc<SpanBasis>> {
        let slice = self.fbar_slice(n)?;
        self.cached(
            |c| &mut c.spans,
            n,
            || {
                let mut span = SpanBasis::new();
                for j in 0..slice.cols() {
                    span.insert(&slice.column(j));
                }
                Ok(span)
            },
        )
    }

    /// `f̄(1) = sum_v e_v`.
    pub fn unit(&self) -> PathCombination {
        let mut u = PathCombination::zero();
        for v in 0..self.quiver.num_vertices() {
            u.add_term(Path::trivial(v), BigInt::one());
        }
        u
    }

    /// `f̄(x)`: the sum of the arrows labelled `x`.
    pub fn fbar_letter(&self, x: usize) -> PathCombination {
        let mut out = PathCombination::zero();
        for a in self.quiver.arrows_labelled(x) {
            let src = self.quiver.arrows()[a].source;
            let p = self
                .quiver
                .path(src, vec![a])
                .expect("single arrows are paths");
            out.add_term(p, BigInt::one());
        }
        out
    }

    /// `f̄(x_1) ... f̄(x_n)` by path composition. Words that are not normal
    /// are allowed and map to zero.
    pub fn fbar_word(&self, w: &Word) -> PathCombination {
        let mut acc = self.unit();
        for &x in w.letters() {
            acc = acc.compose(&self.fbar_letter(x), self.quiver);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// The matrix of `f̄_n`. Row `i` is the `i`-th path of length `n` in
    /// canonical order and column `j` the `j`-th normal word; the entry is 1
    /// iff the path spells the word.
    pub fn fbar_slice(&self, n: usize) -> Result<GradedMapSlice> {
        let words = self.words(n)?;
        let paths = self.paths(n)?;

        let mut by_labels = vec![Vec::new(); words.dim()];
        let mut all_spelled = true;
        for (i, p) in paths.paths().iter().enumerate() {
            match words.index_of(&self.quiver.path_labels(p)) {
                Some(j) => by_labels[j].push(i),
                None => all_spelled = false,
            }
        }

        // Column of w: the paths whose word is w v for a vertex v.
        let mut by_extension = vec![Vec::new(); words.dim()];
        for (j, w) in words.words().iter().enumerate() {
            for v in self.quiver.vertices() {
                let wv = w.concat(v);
                if is_normal(&wv, self.presentation) {
                    if let Some(i) = self
                        .quiver
                        .path_from_word(&wv)
                        .and_then(|p| paths.index_of(&p))
                    {
                        by_extension[j].push(i);
                    } else {
                        all_spelled = false;
                    }
                }
            }
            by_extension[j].sort_unstable();
        }

        Ok(GradedMapSlice {
            degree: n,
            rows: paths.dim(),
            characterizations_agree: all_spelled && by_labels == by_extension,
            columns: by_labels,
        })
    }

    pub fn ker_coker(&self, n: usize) -> Result<KerCoker> {
        let slice = self.fbar_slice(n)?;
        let words = self.words(n)?;
        let mut span = SpanBasis::new();
        let mut nonzero = 0;
        for j in 0..slice.cols() {
            if !slice.columns[j].is_empty() {
                nonzero += 1;
                span.insert(&slice.column(j));
            }
        }
        let rank = span.rank();
        Ok(KerCoker {
            degree: n,
            dim_a: slice.cols(),
            dim_b: slice.rows,
            rank,
            kernel: slice
                .zero_columns()
                .map(|j| words.words()[j].clone())
                .collect(),
            coker_dim: slice.rows - rank,
            nonzero_columns_independent: rank == nonzero,
        })
    }

    /// Rank of `span{ f̄(w) e_v }` over normal `w` of length `n` and vertices
    /// `v`, against `dim (kQ)_n`.
    pub fn degree_span(&self, n: usize) -> Result<SpanCheck> {
        let paths = self.paths(n)?;
        let images = self.images(n)?;
        let mut span = SpanBasis::new();
        for img in images.iter() {
            for v in 0..self.quiver.num_vertices() {
                let piece = img.ending_at(v, self.quiver);
                if !piece.is_zero() {
                    span.insert(&piece.to_sparse(&paths));
                }
            }
        }
        Ok(SpanCheck {
            degree: n,
            rank: span.rank(),
            dim_b: paths.dim(),
        })
    }

    pub fn check_degree_span(&self, n: usize) -> Result<bool> {
        Ok(self.degree_span(n)?.ok())
    }

    /// Smallest `m` such that every kernel word of degree `n` has no normal
    /// right extension of any length `m'` in `m..=m_max`.
    pub fn kernel_fdim_certificate(&self, n: usize, m_max: usize) -> Result<FdimCertificate> {
        let kernel = self.ker_coker(n)?.kernel;
        let mut table = Vec::with_capacity(m_max + 1);
        for m in 0..=m_max {
            let mut ok = true;
            for w in &kernel {
                if !right_extensions(w, m, self.presentation, self.cap)?.is_empty() {
                    ok = false;
                    break;
                }
            }
            table.push((m, ok));
        }
        Ok(FdimCertificate::from_table(
            CertificateKind::Kernel,
            n,
            table,
        ))
    }

    /// Smallest `m` such that `(kQ)_n f̄(A_m') ⊆ f̄(A_{n+m'})` for every `m'`
    /// in `m..=m_max`, so that `A_{>= m}` kills the degree-`n` cokernel.
    pub fn cokernel_fdim_certificate(&self, n: usize, m_max: usize) -> Result<FdimCertificate> {
        let table = (0..=m_max)
            .map(|m| Ok((m, self.cokernel_closed(n, m)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FdimCertificate::from_table(
            CertificateKind::Cokernel,
            n,
            table,
        ))
    }

    /// Whether every product `p f̄(w)`, `p` a path of length `n` and `w` a
    /// normal word of length `m`, lies in `f̄(A_{n+m})`.
    pub fn cokernel_closed(&self, n: usize, m: usize) -> Result<bool> {
        let paths = self.paths(n)?;
        let images = self.images(m)?;
        let target = self.paths(n + m)?;
        let span = self.image_span(n + m)?;
        for img in images.iter() {
            for p in paths.paths() {
                let prod = PathCombination::from_path(p.clone()).compose(img, self.quiver);
                if !prod.is_zero() && !span.contains(&prod.to_sparse(&target)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn classify_cyclic(&self, p: &Path, n_max: usize) -> Result<CyclicProbe> {
        let start = PathCombination::from_path(p.clone());
        let mut annihilated_from = None;
        let mut monotone = true;
        for m in 0..=n_max {
            let images = self.images(m)?;
            let zero = images
                .iter()
                .all(|img| start.compose(img, self.quiver).is_zero());
            match (zero, annihilated_from) {
                (true, None) => annihilated_from = Some(m),
                (false, Some(_)) => monotone = false,
                _ => {}
            }
        }
        Ok(CyclicProbe {
            path: p.clone(),
            n_max,
            finite_over_kq: !self.quiver.reaches_cycle(self.quiver.target(p)),
            finite_over_a: annihilated_from.is_some(),
            annihilated_from,
            monotone,
        })
    }
}
