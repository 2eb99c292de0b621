//! The Ufnarovskii quiver of a monomial algebra.
//!
//! With `d` the longest relation length minus one, the vertices are the
//! normal words of length `d` and the arrows are the normal words `w` of
//! length `d + 1`. The arrow `a_w` runs from the length-`d` prefix of `w` to
//! its length-`d` suffix and is labelled by the first letter of `w`, so
//! `w = u y = x v` for the source `u`, target `v`, label `x` and some letter
//! `y`. Paths of length `n` correspond to normal words of length `n + d` by
//! overlapping consecutive arrow words.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::{Error, Result};
use crate::exactla::IntMatrix;
use crate::language::{normal_words, Cap};
use crate::presentation::{Presentation, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub word: Word,
    pub source: usize,
    pub target: usize,
    pub label: usize,
}

/// A path given by its start vertex and a composable arrow sequence, read
/// left to right. A path with no arrows is the trivial path `e_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Same as [`Path::is_trivial`]: a path with no arrows.
    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GrowthClass {
    FiniteDimensional,
    /// `dim A_n` grows like `n^(k-1)`, `k` being the payload.
    Polynomial(usize),
    Exponential,
}

impl fmt::Display for GrowthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthClass::FiniteDimensional => write!(f, "finite-dimensional"),
            GrowthClass::Polynomial(k) => write!(f, "polynomial({k})"),
            GrowthClass::Exponential => write!(f, "exponential"),
        }
    }
}

/// Several arrows that share a target and a label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelViolation {
    pub vertex: usize,
    pub label: usize,
    pub arrows: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelReport {
    pub ok: bool,
    pub violations: Vec<LabelViolation>,
}

#[derive(Clone, Debug)]
pub struct Quiver {
    d: usize,
    generators: Vec<String>,
    vertices: Vec<Word>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<Word, usize>,
    arrow_index: HashMap<Word, usize>,
    /// Arrows leaving each vertex, ordered by the last letter of their word.
    out: Vec<Vec<usize>>,
    adjacency: IntMatrix,
    cycles: CycleData,
}

#[derive(Clone, Debug)]
struct CycleData {
    growth: GrowthClass,
    /// Largest number of cycles met along a path from each vertex.
    cycles_ahead: Vec<usize>,
    /// Longest path length from each vertex, if finite.
    depth: Vec<Option<usize>>,
}

impl Quiver {
    /// Builds the quiver of `p`.
    ///
    /// `p` should be normalized; otherwise `d` is still taken from the
    /// longest listed relation.
    pub fn build(p: &Presentation, cap: Cap) -> Result<Quiver> {
        let d = p.d();
        let vertices = normal_words(d, p, cap)?.into_words();
        let arrow_words = normal_words(d + 1, p, cap)?.into_words();
        let vertex_index: HashMap<Word, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let arrows = arrow_words
            .into_iter()
            .map(|w| {
                let source = vertex_index[&w.prefix(d)];
                let target = vertex_index[&w.suffix(d)];
                let label = w.first().expect("arrow words are nonempty");
                Arrow {
                    word: w,
                    source,
                    target,
                    label,
                }
            })
            .collect();
        Ok(Self::assemble(d, p.generators().to_vec(), vertices, arrows))
    }

    /// Assembles a quiver from explicit parts without checking that it comes
    /// from a presentation. Used for hand-built fixtures.
    pub fn from_parts(
        d: usize,
        generators: Vec<String>,
        vertices: Vec<Word>,
        arrows: Vec<Arrow>,
    ) -> Result<Quiver> {
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::InvalidPath(format!(
                    "arrow {i} has an endpoint out of range"
                )));
            }
            if a.label >= generators.len() {
                return Err(Error::InvalidPath(format!(
                    "arrow {i} has an unknown label"
                )));
            }
        }
        Ok(Self::assemble(d, generators, vertices, arrows))
    }

    fn assemble(
        d: usize,
        generators: Vec<String>,
        vertices: Vec<Word>,
        arrows: Vec<Arrow>,
    ) -> Quiver {
        let n = vertices.len();
        let vertex_index = vertices
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let arrow_index = arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.word.clone(), i))
            .collect();
        let mut out = vec![Vec::new(); n];
        let mut adjacency = IntMatrix::zeros(n, n);
        for (i, a) in arrows.iter().enumerate() {
            out[a.source].push(i);
            let c = adjacency.get(a.source, a.target) + BigInt::one();
            adjacency.set(a.source, a.target, c);
        }
        for list in &mut out {
            list.sort_by_key(|&i| (arrows[i].word.last(), i));
        }
        let cycles = CycleData::compute(n, &arrows, &out);
        Quiver {
            d,
            generators,
            vertices,
            arrows,
            vertex_index,
            arrow_index,
            out,
            adjacency,
            cycles,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn adjacency(&self) -> &IntMatrix {
        &self.adjacency
    }

    pub fn vertex_of(&self, w: &Word) -> Option<usize> {
        self.vertex_index.get(w).copied()
    }

    pub fn arrow_of(&self, w: &Word) -> Option<usize> {
        self.arrow_index.get(w).copied()
    }

    pub fn out_arrows(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Arrows carrying label `x`, in arrow order.
    pub fn arrows_labelled(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.label == x)
            .map(|(i, _)| i)
    }

    /// Validates and builds a path.
    pub fn path(&self, source: usize, arrows: Vec<usize>) -> Result<Path> {
        if source >= self.num_vertices() {
            return Err(Error::InvalidPath(format!("vertex {source} out of range")));
        }
        let mut at = source;
        for (k, &a) in arrows.iter().enumerate() {
            let arrow = self
                .arrows
                .get(a)
                .ok_or_else(|| Error::InvalidPath(format!("arrow {a} out of range")))?;
            if arrow.source != at {
                return Err(Error::InvalidPath(format!(
                    "arrow {a} at position {k} does not start where the previous one ends"
                )));
            }
            at = arrow.target;
        }
        Ok(Path { source, arrows })
    }

    pub fn target(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.source, |&a| self.arrows[a].target)
    }

    /// Concatenation `p` then `q`, or `None` if they do not compose.
    pub fn compose(&self, p: &Path, q: &Path) -> Option<Path> {
        if self.target(p) != q.source {
            return None;
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        Some(Path {
            source: p.source,
            arrows,
        })
    }

    /// The word read off by overlapping the arrow words of `p`: the source
    /// vertex word followed by the last letter of every arrow.
    pub fn path_word(&self, p: &Path) -> Word {
        let mut w = self.vertices[p.source].clone();
        for &a in &p.arrows {
            w.push(
                self.arrows[a]
                    .word
                    .last()
                    .expect("arrow words are nonempty"),
            );
        }
        w
    }

    /// The label sequence of `p`.
    pub fn path_labels(&self, p: &Path) -> Word {
        Word::new(p.arrows.iter().map(|&a| self.arrows[a].label).collect())
    }

    /// The path whose [`path_word`](Self::path_word) is `w`, if any.
    pub fn path_from_word(&self, w: &Word) -> Option<Path> {
        if w.len() < self.d {
            return None;
        }
        let source = self.vertex_of(&w.prefix(self.d))?;
        let arrows = w
            .letters()
            .windows(self.d + 1)
            .map(|win| self.arrow_of(&Word::from(win)))
            .collect::<Option<Vec<_>>>()?;
        self.path(source, arrows).ok()
    }

    /// Machine check that arrows sharing a target carry distinct labels.
    pub fn check_label_property(&self) -> LabelReport {
        self.group_violations(|a| (a.target, a.label))
    }

    /// The dual statement: arrows sharing a label end at distinct vertices.
    /// Violations are grouped by label first.
    pub fn check_label_targets(&self) -> LabelReport {
        let mut report = self.group_violations(|a| (a.label, a.target));
        for v in &mut report.violations {
            std::mem::swap(&mut v.vertex, &mut v.label);
        }
        report
    }

    /// Groups arrows by `key` and reports groups of size > 1, with the key
    /// read as `(vertex, label)`.
    fn group_violations(&self, key: impl Fn(&Arrow) -> (usize, usize)) -> LabelReport {
        let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, a) in self.arrows.iter().enumerate() {
            groups.entry(key(a)).or_default().push(i);
        }
        let violations: Vec<_> = groups
            .into_iter()
            .filter(|(_, v)| v.len() > 1)
            .map(|((vertex, label), arrows)| LabelViolation {
                vertex,
                label,
                arrows,
            })
            .collect();
        LabelReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    /// Number of paths of length `n`: the entry sum of `M^n`.
    pub fn count_paths(&self, n: usize) -> BigUint {
        let mut ahead = vec![BigUint::one(); self.num_vertices()];
        for _ in 0..n {
            let mut next = vec![BigUint::zero(); ahead.len()];
            for a in &self.arrows {
                next[a.source] += &ahead[a.target];
            }
            ahead = next;
        }
        ahead.into_iter().sum()
    }

    /// All paths of length `n`, ordered by their words.
    pub fn enumerate_paths(&self, n: usize, cap: Cap) -> Result<Vec<Path>> {
        let mut level: Vec<Path> = (0..self.num_vertices()).map(Path::trivial).collect();
        cap.check(level.len(), "path enumeration")?;
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &level {
                for &a in &self.out[self.target(p)] {
                    let mut arrows = Vec::with_capacity(p.arrows.len() + 1);
                    arrows.extend_from_slice(&p.arrows);
                    arrows.push(a);
                    next.push(Path {
                        source: p.source,
                        arrows,
                    });
                    cap.check(next.len(), "path enumeration")?;
                }
            }
            level = next;
        }
        Ok(level)
    }

    pub fn growth_class(&self) -> GrowthClass {
        self.cycles.growth
    }

    /// True if some directed cycle can be reached from `v`.
    pub fn reaches_cycle(&self, v: usize) -> bool {
        self.cycles.cycles_ahead[v] > 0
    }

    /// Length of the longest path starting at `v`, or `None` if unbounded.
    pub fn depth(&self, v: usize) -> Option<usize> {
        self.cycles.depth[v]
    }

    /// Spells a word with the generator names (see [`Presentation::spell`]).
    pub fn spell(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        let sep = if self.generators.iter().all(|g| g.chars().count() == 1) {
            ""
        } else {
            " "
        };
        w.letters()
            .iter()
            .map(|&x| self.generators[x].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Graphviz DOT rendering. Nodes are named by their vertex words; each
    /// edge carries its label letter and, as a tooltip, its arrow word.
    pub fn export_dot(&self) -> String {
        let mut s = String::from("digraph {\n");
        for v in &self.vertices {
            s.push_str(&format!("    {};\n", dot_id(&self.spell(v))));
        }
        for a in &self.arrows {
            s.push_str(&format!(
                "    {} -> {} [label={}, tooltip={}];\n",
                dot_id(&self.spell(&self.vertices[a.source])),
                dot_id(&self.spell(&self.vertices[a.target])),
                dot_id(&self.generators[a.label]),
                dot_id(&self.spell(&a.word)),
            ));
        }
        s.push_str("}\n");
        s
    }
}

fn dot_id(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

impl CycleData {
    fn compute(n: usize, arrows: &[Arrow], out: &[Vec<usize>]) -> CycleData {
        let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, arrows.len());
        for _ in 0..n {
            g.add_node(());
        }
        for a in arrows {
            g.add_edge(NodeIndex::new(a.source), NodeIndex::new(a.target), ());
        }
        // Components come out sinks first.
        let sccs = tarjan_scc(&g);
        let mut comp = vec![0; n];
        for (c, members) in sccs.iter().enumerate() {
            for v in members {
                comp[v.index()] = c;
            }
        }
        let mut internal = vec![0usize; sccs.len()];
        for a in arrows {
            if comp[a.source] == comp[a.target] {
                internal[comp[a.source]] += 1;
            }
        }
        let exponential = sccs
            .iter()
            .enumerate()
            .any(|(c, members)| internal[c] > members.len());

        let mut ahead = vec![0usize; sccs.len()];
        let mut comp_depth: Vec<Option<usize>> = vec![None; sccs.len()];
        let mut depth = vec![None; n];
        for (c, members) in sccs.iter().enumerate() {
            let cyclic = internal[c] > 0;
            let mut best = 0;
            let mut longest = Some(0usize);
            for v in members {
                for &a in &out[v.index()] {
                    let t = comp[arrows[a].target];
                    if t != c {
                        best = best.max(ahead[t]);
                        longest = match (longest, comp_depth[t]) {
                            (Some(l), Some(dt)) => Some(l.max(dt + 1)),
                            _ => None,
                        };
                    }
                }
            }
            ahead[c] = best + usize::from(cyclic);
            comp_depth[c] = if cyclic { None } else { longest };
            for v in members {
                depth[v.index()] = comp_depth[c];
            }
        }

        let growth = if exponential {
            GrowthClass::Exponential
        } else {
            match ahead.iter().copied().max().unwrap_or(0) {
                0 => GrowthClass::FiniteDimensional,
                k => GrowthClass::Polynomial(k),
            }
        };
        CycleData {
            growth,
            cycles_ahead: (0..n).map(|v| ahead[comp[v]]).collect(),
            depth,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(gens: &str, rels: &[&str]) -> (Presentation, Quiver) {
        let p = Presentation::from_letters(gens, rels).unwrap();
        let q = Quiver::build(&p, Cap::DEFAULT).unwrap();
        (p, q)
    }

    fn describe(p: &Presentation, q: &Quiver) -> Vec<String> {
        q.arrows()
            .iter()
            .map(|a| {
                format!(
                    "{}:{}->{}:{}",
                    p.spell(&a.word),
                    p.spell(&q.vertices()[a.source]),
                    p.spell(&q.vertices()[a.target]),
                    p.generators()[a.label]
                )
            })
            .collect()
    }

    #[test]
    fn p1_quiver() {
        let (p, q) = build("xy", &["yx"]);
        assert_eq!(q.d(), 1);
        assert_eq!(q.num_vertices(), 2);
        assert_eq!(describe(&p, &q), ["xx:x->x:x", "xy:x->y:x", "yy:y->y:y"]);
    }

    #[test]
    fn p2_quiver() {
        let (p, q) = build("xy", &["xx"]);
        assert_eq!(describe(&p, &q), ["xy:x->y:x", "yx:y->x:y", "yy:y->y:y"]);
        assert_eq!(
            q.adjacency(),
            &IntMatrix::from_rows(&[vec![0, 1], vec![1, 1]])
        );
    }

    #[test]
    fn free_quiver_has_one_vertex_and_loops() {
        let (p, q) = build("xy", &[]);
        assert_eq!(q.d(), 0);
        assert_eq!(q.vertices(), [Word::empty()]);
        assert_eq!(describe(&p, &q), ["x:ε->ε:x", "y:ε->ε:y"]);
    }

    #[test]
    fn label_property_on_built_quivers() {
        for rels in [&["yx"][..], &["xx"], &["xx", "xy", "yx"]] {
            let (_, q) = build("xy", rels);
            assert!(q.check_label_property().ok);
            assert!(q.check_label_targets().ok);
        }
    }

    #[test]
    fn label_property_violation() {
        let gens = vec!["x".to_string(), "y".to_string()];
        let vertices = vec![Word::letter(0), Word::letter(1)];
        let arrows = vec![
            Arrow {
                word: Word::new(vec![0, 1]),
                source: 0,
                target: 1,
                label: 0,
            },
            Arrow {
                word: Word::new(vec![0, 0, 1]),
                source: 1,
                target: 1,
                label: 0,
            },
        ];
        let q = Quiver::from_parts(1, gens, vertices, arrows).unwrap();
        let report = q.check_label_property();
        assert!(!report.ok);
        assert_eq!(
            report.violations,
            [LabelViolation {
                vertex: 1,
                label: 0,
                arrows: vec![0, 1]
            }]
        );
        assert!(!q.check_label_targets().ok);
    }

    #[test]
    fn counting_examples() {
        let (_, p1) = build("xy", &["yx"]);
        assert_eq!(p1.count_paths(3), BigUint::from(5u32));
        assert_eq!(p1.count_paths(0), BigUint::from(2u32));
        let (_, p2) = build("xy", &["xx"]);
        assert_eq!(p2.count_paths(3), BigUint::from(8u32));
        assert_eq!(p2.count_paths(4), BigUint::from(13u32));
    }

    #[test]
    fn enumeration_examples() {
        let (_, p1) = build("xy", &["yx"]);
        assert_eq!(p1.enumerate_paths(1, Cap::DEFAULT).unwrap().len(), 3);

        let (p, p2) = build("xy", &["xx"]);
        let words: Vec<String> = p2
            .enumerate_paths(2, Cap::DEFAULT)
            .unwrap()
            .iter()
            .map(|path| p.spell(&p2.path_word(path)))
            .collect();
        assert_eq!(words, ["xyx", "xyy", "yxy", "yyx", "yyy"]);

        let (p, p3) = build("xy", &["xx", "xy", "yx"]);
        let paths = p3.enumerate_paths(2, Cap::DEFAULT).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(p.spell(&p3.path_word(&paths[0])), "yyy");
    }

    #[test]
    fn path_words() {
        let (p, q) = build("xy", &["xx"]);
        let yx = q.arrow_of(&p.word("yx").unwrap()).unwrap();
        let xy = q.arrow_of(&p.word("xy").unwrap()).unwrap();
        let path = q.path(1, vec![yx, xy]).unwrap();
        assert_eq!(p.spell(&q.path_word(&path)), "yxy");
        assert_eq!(p.spell(&q.path_labels(&path)), "yx");
        assert_eq!(q.path_from_word(&p.word("yxy").unwrap()), Some(path));
        assert!(q.path(0, vec![yx]).is_err());

        let (p, q) = build("xy", &["yx"]);
        assert_eq!(p.spell(&q.path_word(&Path::trivial(0))), "x");
        let xx = q.arrow_of(&p.word("xx").unwrap()).unwrap();
        let xy = q.arrow_of(&p.word("xy").unwrap()).unwrap();
        assert_eq!(
            p.spell(&q.path_word(&q.path(0, vec![xx, xy]).unwrap())),
            "xxy"
        );
    }

    #[test]
    fn growth_examples() {
        assert_eq!(
            build("xy", &["yx"]).1.growth_class(),
            GrowthClass::Polynomial(2)
        );
        assert_eq!(
            build("xy", &["xx"]).1.growth_class(),
            GrowthClass::Exponential
        );
        assert_eq!(
            build("xy", &["xx", "xy", "yx", "yy"]).1.growth_class(),
            GrowthClass::FiniteDimensional
        );
        assert_eq!(build("x", &[]).1.growth_class(), GrowthClass::Polynomial(1));
        // A single 2-cycle: xy and yx alternate.
        assert_eq!(
            build("xy", &["xx", "yy"]).1.growth_class(),
            GrowthClass::Polynomial(1)
        );
    }

    #[test]
    fn depth_and_cycle_reachability() {
        let (_, q) = build("xy", &["xx", "xy", "yx"]);
        assert!(!q.reaches_cycle(0));
        assert_eq!(q.depth(0), Some(0));
        assert!(q.reaches_cycle(1));
        assert_eq!(q.depth(1), None);

        let (_, q) = build("xyz", &["xx", "xz", "yx", "yy", "zx", "zy", "zz"]);
        // x -> y -> z, no cycles
        assert_eq!(q.depth(0), Some(2));
        assert_eq!(q.growth_class(), GrowthClass::FiniteDimensional);
    }

    #[test]
    fn dot_export() {
        let (_, q) = build("xy", &["xx"]);
        let dot = q.export_dot();
        assert_eq!(
            dot,
            "digraph {\n    \"x\";\n    \"y\";\n    \"x\" -> \"y\" [label=\"x\", tooltip=\"xy\"];\n    \"y\" -> \"x\" [label=\"y\", tooltip=\"yx\"];\n    \"y\" -> \"y\" [label=\"y\", tooltip=\"yy\"];\n}\n"
        );
        let empty = Quiver::from_parts(1, vec!["x".into()], vec![], vec![]).unwrap();
        assert_eq!(empty.export_dot(), "digraph {\n}\n");
    }
}
