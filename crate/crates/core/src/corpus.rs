//! Named fixtures and seeded random presentations, words and paths.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::language::{dims, Cap};
use crate::presentation::{Presentation, Word};
use crate::quiver::{Path, Quiver};

const NAMES: [&str; 4] = ["x", "y", "z", "w"];

/// The free algebra on `x, y`.
pub fn p0() -> Presentation {
    Presentation::from_letters("xy", &[]).unwrap()
}

/// `k<x, y>/(yx)`: polynomial growth, `dim A_n = n + 1`.
pub fn p1() -> Presentation {
    Presentation::from_letters("xy", &["yx"]).unwrap()
}

/// `k<x, y>/(xx)`: Fibonacci dimensions.
pub fn p2() -> Presentation {
    Presentation::from_letters("xy", &["xx"]).unwrap()
}

/// `k<x, y>/(xx, xy, yx)`: `x` is killed by every letter.
pub fn p3() -> Presentation {
    Presentation::from_letters("xy", &["xx", "xy", "yx"]).unwrap()
}

pub fn fixtures() -> Vec<(&'static str, Presentation)> {
    vec![("P0", p0()), ("P1", p1()), ("P2", p2()), ("P3", p3())]
}

/// Shape of random presentations and the size filter applied to them.
#[derive(Clone, Copy, Debug)]
pub struct CorpusParams {
    pub max_generators: usize,
    pub max_relations: usize,
    pub max_relation_len: usize,
    /// Accepted presentations have `dim A_n <= dim_budget` for every
    /// `n <= budget_degree`.
    pub budget_degree: usize,
    pub dim_budget: usize,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            max_generators: 4,
            max_relations: 6,
            max_relation_len: 4,
            budget_degree: 20,
            dim_budget: 20_000,
        }
    }
}

/// A raw (unnormalized) random presentation. Length-one relations are rare
/// but possible, so normalization gets exercised.
pub fn random_presentation<R: Rng>(rng: &mut R, params: &CorpusParams) -> Presentation {
    let g = rng.random_range(1..=params.max_generators);
    let r = rng.random_range(1..=params.max_relations);
    let rels = (0..r)
        .map(|_| {
            let len = if rng.random_bool(0.05) {
                1
            } else {
                rng.random_range(2..=params.max_relation_len.max(2))
            };
            random_word(rng, g, len)
        })
        .collect();
    let gens = NAMES[..g].iter().map(|s| s.to_string()).collect();
    Presentation::new(gens, rels).expect("random relations use known generators")
}

/// Draws normalized presentations until one passes the size filter.
pub fn sample_presentation<R: Rng>(rng: &mut R, params: &CorpusParams) -> Presentation {
    loop {
        let Ok(p) = random_presentation(rng, params).normalize() else {
            continue;
        };
        if dims(params.budget_degree, &p, Cap(params.dim_budget)).is_ok() {
            return p;
        }
    }
}

/// `count` normalized presentations drawn from a seeded generator.
pub fn corpus(seed: u64, count: usize, params: &CorpusParams) -> Vec<Presentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| sample_presentation(&mut rng, params))
        .collect()
}

pub fn random_word<R: Rng>(rng: &mut R, generators: usize, len: usize) -> Word {
    Word::new((0..len).map(|_| rng.random_range(0..generators)).collect())
}

/// A random walk of at most `max_len` arrows from a uniformly chosen vertex;
/// it stops early at a vertex with no outgoing arrows. `None` if the quiver
/// has no vertices.
pub fn random_path<R: Rng>(q: &Quiver, rng: &mut R, max_len: usize) -> Option<Path> {
    if q.num_vertices() == 0 {
        return None;
    }
    let source = rng.random_range(0..q.num_vertices());
    let len = rng.random_range(0..=max_len);
    let mut at = source;
    let mut arrows = Vec::with_capacity(len);
    for _ in 0..len {
        let out = q.out_arrows(at);
        if out.is_empty() {
            break;
        }
        let a = out[rng.random_range(0..out.len())];
        arrows.push(a);
        at = q.arrows()[a].target;
    }
    Some(q.path(source, arrows).expect("random walks are composable"))
}
