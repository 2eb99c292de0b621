//! Library side of the `ufna` binary: input loading, the verification
//! pipeline and its JSON report, and the text renderers used by the
//! subcommands. Integration tests drive these directly as well as through
//! the binary.

pub mod report;
pub mod verify;

use std::io::{Read, Write};
use std::path::Path as FsPath;

use ufna_core::{corpus, Presentation};

pub use report::VerifyReport;
pub use verify::{verify, VerifyOptions};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const CAP: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] ufna_core::Error),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(ufna_core::Error::CapExceeded { .. }) => exit::CAP,
            CliError::Write { .. } | CliError::Json(_) => exit::CHECK_FAILED,
            _ => exit::INPUT,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Resolves an input argument: `-` reads stdin, an existing path is read from
/// disk, and the names `P0`..`P3` select the built-in fixtures.
pub fn load(arg: &str) -> CliResult<Presentation> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Read {
                path: "<stdin>".into(),
                source,
            })?;
        s
    } else if FsPath::new(arg).exists() {
        std::fs::read_to_string(arg).map_err(|source| CliError::Read {
            path: arg.into(),
            source,
        })?
    } else if let Some((_, p)) = corpus::fixtures().into_iter().find(|(n, _)| *n == arg) {
        return Ok(p);
    } else {
        return Err(CliError::Read {
            path: arg.into(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "no such file or fixture"),
        });
    };
    Ok(Presentation::parse(&text)?)
}

/// Writes `contents` to a file, or to stdout when `target` is `-`.
pub fn emit(target: &str, contents: &str) -> CliResult<()> {
    let wrap = |source| CliError::Write {
        path: target.into(),
        source,
    };
    if target == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(contents.as_bytes()).map_err(wrap)?;
        out.flush().map_err(wrap)
    } else {
        std::fs::write(target, contents).map_err(wrap)
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: serde::Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Human-readable digest of a verification report.
pub fn render_summary(r: &VerifyReport) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    let rels = r.presentation.normalized_relations.join(" ");
    let _ = writeln!(
        s,
        "gens: {}  rels: {}  d = {}  |V| = {}  |E| = {}",
        r.presentation.normalized_generators.join(" "),
        if rels.is_empty() { "(none)" } else { &rels },
        r.quiver.d,
        r.quiver.vertices,
        r.quiver.arrows
    );
    let _ = writeln!(
        s,
        "{:>3} {:>10} {:>10} {:>10} {:>6} {:>6}  span",
        "n", "dim A_n", "paths", "rank", "ker", "coker"
    );
    for row in &r.degrees {
        let _ = writeln!(
            s,
            "{:>3} {:>10} {:>10} {:>10} {:>6} {:>6}  {}",
            row.n,
            row.dim_a,
            row.paths,
            row.rank,
            row.ker,
            row.coker,
            if row.span_ok { "ok" } else { "FAIL" }
        );
    }
    for c in &r.checks {
        let _ = writeln!(
            s,
            "[{}] {}: {}",
            if c.passed { "pass" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    let _ = writeln!(s, "growth: {}", r.growth);
    let _ = writeln!(s, "hilbert: {}", r.hilbert.algebra.display);
    let _ = writeln!(
        s,
        "verdict: {}",
        match r.verdict {
            report::Verdict::Pass => "pass",
            report::Verdict::Fail => "fail",
        }
    );
    s
}
