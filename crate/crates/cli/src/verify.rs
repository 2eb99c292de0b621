//! The end-to-end verification pipeline behind `ufna verify`.

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ufna_core::corpus::{random_path, random_word};
use ufna_core::language::{dims, is_normal, Cap};
use ufna_core::{hilbert_algebra, hilbert_quiver, Fbar, Path, Presentation, Quiver, Result};

use crate::report::{
    growth_string, CertificateReport, Check, Config, DegreeRow, HilbertReport, PresentationEcho,
    ProbeSummary, QuiverSummary, SeriesReport, Verdict, VerifyReport, SCHEMA,
};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_degree: usize,
    pub m_max: usize,
    pub seed: u64,
    pub cap: Cap,
    pub multiplicativity_samples: usize,
    pub random_probes: usize,
}

impl VerifyOptions {
    /// Defaults for a given degree bound: `m_max = N`, 200 multiplicativity
    /// samples and 100 random cyclic probes.
    pub fn new(max_degree: usize) -> Self {
        VerifyOptions {
            max_degree,
            m_max: max_degree,
            seed: 0,
            cap: Cap(1_000_000),
            multiplicativity_samples: 200,
            random_probes: 100,
        }
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: &'static str, failures: Vec<String>, ok_detail: String) {
        let passed = failures.is_empty();
        let detail = if passed {
            ok_detail
        } else {
            let shown: Vec<_> = failures.iter().take(5).cloned().collect();
            format!("{} failure(s): {}", failures.len(), shown.join("; "))
        };
        self.0.push(Check {
            name,
            passed,
            detail,
        });
    }
}

/// Runs every check on `input` (normalized first) for degrees up to
/// `opts.max_degree`. Deterministic for fixed options.
pub fn verify(input: &Presentation, opts: &VerifyOptions) -> Result<VerifyReport> {
    let p = input.normalize()?;
    let q = Quiver::build(&p, opts.cap)?;
    let fbar = Fbar::new(&p, &q, opts.cap);
    let n_max = opts.max_degree;
    let d = q.d();
    let mut checks = Checks(Vec::new());

    let label = q.check_label_property();
    let dual = q.check_label_targets();
    let mut failures: Vec<String> = label
        .violations
        .iter()
        .chain(&dual.violations)
        .map(|v| {
            format!(
                "vertex {} label {} arrows {:?}",
                v.vertex, v.label, v.arrows
            )
        })
        .collect();
    failures.dedup();
    checks.push(
        "label_lemma",
        failures,
        format!("{} arrows", q.num_arrows()),
    );

    let word_dims = dims(n_max + d, &p, opts.cap)?;
    let mut failures = Vec::new();
    for n in 0..=n_max {
        let count = q.count_paths(n);
        if count != BigUint::from(word_dims[n + d]) {
            failures.push(format!(
                "n={n}: {count} paths vs {} words",
                word_dims[n + d]
            ));
        }
        let words = fbar.words(n + d)?;
        let spelled: Vec<_> = fbar
            .paths(n)?
            .paths()
            .iter()
            .map(|path| q.path_word(path))
            .collect();
        if spelled != words.words() {
            failures.push(format!(
                "n={n}: path words are not the normal words in order"
            ));
        }
    }
    checks.push("bijection", failures, format!("n <= {n_max}"));

    let mut rows = Vec::with_capacity(n_max + 1);
    let mut slice_fail = Vec::new();
    let mut column_fail = Vec::new();
    let mut kernel_fail = Vec::new();
    let mut span_fail = Vec::new();
    let mut kcert_fail = Vec::new();
    let mut ccert_fail = Vec::new();
    for n in 0..=n_max {
        let slice = fbar.fbar_slice(n)?;
        if !slice.characterizations_agree {
            slice_fail.push(format!("n={n}"));
        }
        let paths = fbar.paths(n)?;
        for (j, img) in fbar.images(n)?.iter().enumerate() {
            if img.to_sparse(&paths) != slice.column(j) {
                column_fail.push(format!("n={n} column {j}"));
            }
        }
        let kc = fbar.ker_coker(n)?;
        if !kc.nonzero_columns_independent {
            kernel_fail.push(format!("n={n}"));
        }
        let span = fbar.degree_span(n)?;
        if !span.ok() {
            span_fail.push(format!("n={n}: rank {} < {}", span.rank, span.dim_b));
        }
        let kcert = fbar.kernel_fdim_certificate(n, opts.m_max)?;
        if !kcert.is_certified() {
            kcert_fail.push(format!("n={n}"));
        }
        let ccert = fbar.cokernel_fdim_certificate(n, opts.m_max)?;
        if !ccert.is_certified() {
            ccert_fail.push(format!("n={n}"));
        }
        rows.push(DegreeRow {
            n,
            dim_a: kc.dim_a.to_string(),
            paths: kc.dim_b.to_string(),
            rank: kc.rank.to_string(),
            ker: kc.ker_dim().to_string(),
            coker: kc.coker_dim.to_string(),
            span_ok: span.ok(),
            kernel_words: kc.kernel.iter().map(|w| p.spell(w)).collect(),
            kernel_certificate: CertificateReport::from(&kcert),
            cokernel_certificate: CertificateReport::from(&ccert),
        });
    }
    checks.push(
        "slice_characterizations",
        slice_fail,
        "label matching = extension description".into(),
    );
    checks.push(
        "word_images",
        column_fail,
        "f̄(w) by composition = slice column".into(),
    );
    checks.push(
        "kernel_basis",
        kernel_fail,
        "nonzero columns independent".into(),
    );
    checks.push(
        "degree_span",
        span_fail,
        format!("A_n B_0 = B_n for n <= {n_max}"),
    );
    checks.push(
        "kernel_certificates",
        kcert_fail,
        format!("m_max = {}", opts.m_max),
    );
    checks.push(
        "cokernel_certificates",
        ccert_fail,
        format!("m_max = {}", opts.m_max),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let g = p.num_generators();
    let mut failures = Vec::new();
    for _ in 0..opts.multiplicativity_samples {
        let total = rng.random_range(0..=n_max);
        let split = rng.random_range(0..=total);
        let u = random_word(&mut rng, g, split);
        let v = random_word(&mut rng, g, total - split);
        let uv = u.concat(&v);
        let whole = fbar.fbar_word(&uv);
        let product = fbar.fbar_word(&u).compose(&fbar.fbar_word(&v), &q);
        if whole != product {
            failures.push(format!("u={} v={}", p.spell(&u), p.spell(&v)));
        } else if !whole.all_nonnegative() {
            failures.push(format!("negative coefficient in f̄({})", p.spell(&uv)));
        } else if !is_normal(&uv, &p) && !whole.is_zero() {
            failures.push(format!("forbidden word {} has nonzero image", p.spell(&uv)));
        }
    }
    checks.push(
        "multiplicativity",
        failures,
        format!("{} sampled pairs", opts.multiplicativity_samples),
    );

    let mut probes: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
    for _ in 0..opts.random_probes {
        if let Some(path) = random_path(&q, &mut rng, n_max) {
            probes.push(path);
        }
    }
    let mut failures = Vec::new();
    let mut finite = 0;
    for path in &probes {
        let probe = fbar.classify_cyclic(path, n_max)?;
        finite += usize::from(probe.finite_over_kq);
        if !probe.agree() {
            failures.push(format!(
                "path from {} of length {}: over kQ {}, over A {}",
                p.spell(&q.vertices()[path.source()]),
                path.len(),
                probe.finite_over_kq,
                probe.finite_over_a
            ));
        }
    }
    let cyclic_probes = ProbeSummary {
        n_max,
        probes: probes.len(),
        finite,
        disagreements: failures.len(),
    };
    checks.push(
        "cyclic_probes",
        failures,
        format!("{} probes", probes.len()),
    );

    let ha = hilbert_algebra(&p, &q, opts.cap)?;
    let hq = hilbert_quiver(&q);
    let expansion = ha.expand(n_max);
    let mut failures = Vec::new();
    for (n, c) in expansion.iter().enumerate() {
        if *c != BigInt::from(word_dims[n]) {
            failures.push(format!("algebra n={n}: {c} vs {}", word_dims[n]));
        }
    }
    for (n, c) in hq.expand(n_max).iter().enumerate() {
        if *c != BigInt::from(q.count_paths(n)) {
            failures.push(format!("quiver n={n}: {c}"));
        }
    }
    checks.push("hilbert_series", failures, format!("n <= {n_max}"));

    let verdict = if checks.0.iter().all(|c| c.passed) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(VerifyReport {
        schema: SCHEMA,
        presentation: PresentationEcho::new(input, &p),
        config: Config {
            max_degree: n_max,
            m_max: opts.m_max,
            seed: opts.seed,
            cap: opts.cap.0,
            multiplicativity_samples: opts.multiplicativity_samples,
            random_probes: opts.random_probes,
        },
        quiver: QuiverSummary::from(&q),
        degrees: rows,
        checks: checks.0,
        cyclic_probes,
        growth: growth_string(q.growth_class()),
        hilbert: HilbertReport {
            algebra: SeriesReport::from(&ha),
            quiver: SeriesReport::from(&hq),
            expansion: expansion.iter().map(BigInt::to_string).collect(),
        },
        verdict,
    })
}
