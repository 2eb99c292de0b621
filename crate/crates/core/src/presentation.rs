//! Finitely presented connected monomial algebras `k<letters>/(forbidden words)`.
//!
//! Every generator has degree one. Words are stored as sequences of generator
//! indices; names only matter at the parsing and printing boundary.

use std::collections::HashMap;
use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};

/// A word over the generators, as a sequence of generator indices.
///
/// The derived order is lexicographic by generator index, which is the
/// canonical basis order for words of equal length.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(x: usize) -> Self {
        Word(vec![x])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    pub fn suffix(&self, n: usize) -> Word {
        Word(self.0[self.0.len() - n..].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(&mut self, x: usize) {
        self.0.push(x);
    }

    /// True if `factor` occurs as a contiguous factor of `self`.
    pub fn contains_factor(&self, factor: &Word) -> bool {
        if factor.is_empty() {
            return true;
        }
        self.0.windows(factor.len()).any(|w| w == factor.letters())
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl From<&[usize]> for Word {
    fn from(letters: &[usize]) -> Self {
        Word(letters.to_vec())
    }
}

/// `k<generators>` modulo the ideal generated by `relations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relations: Vec<Word>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPresentation {
    generators: Vec<String>,
    relations: Vec<Vec<String>>,
}

impl Presentation {
    /// Builds a presentation from generator names and index-encoded relations.
    pub fn new(generators: Vec<String>, relations: Vec<Word>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut seen = HashMap::new();
        for name in &generators {
            if seen.insert(name.as_str(), ()).is_some() {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        for (i, r) in relations.iter().enumerate() {
            if r.is_empty() {
                return Err(Error::EmptyRelation(i));
            }
            if let Some(&bad) = r.letters().iter().find(|&&x| x >= generators.len()) {
                return Err(Error::UnknownGenerator {
                    relation: i,
                    name: format!("#{bad}"),
                });
            }
        }
        Ok(Presentation {
            generators,
            relations,
        })
    }

    /// Convenience constructor for single-character generator names.
    ///
    /// ```
    /// use ufna_core::Presentation;
    /// let p = Presentation::from_letters("xy", &["yx"]).unwrap();
    /// assert_eq!(p.d(), 1);
    /// ```
    pub fn from_letters(generators: &str, relations: &[&str]) -> Result<Self> {
        let names: Vec<String> = generators.chars().map(String::from).collect();
        let rels = relations
            .iter()
            .map(|r| r.chars().map(String::from).collect())
            .collect();
        Self::from_names(names, rels)
    }

    fn from_names(generators: Vec<String>, relations: Vec<Vec<String>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut index = HashMap::with_capacity(generators.len());
        for (i, name) in generators.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        let mut words = Vec::with_capacity(relations.len());
        for (i, rel) in relations.into_iter().enumerate() {
            if rel.is_empty() {
                return Err(Error::EmptyRelation(i));
            }
            let letters = rel
                .into_iter()
                .map(|name| {
                    index
                        .get(&name)
                        .copied()
                        .ok_or(Error::UnknownGenerator { relation: i, name })
                })
                .collect::<Result<Vec<_>>>()?;
            words.push(Word(letters));
        }
        Self::new(generators, words)
    }

    /// Parses the canonical JSON form
    /// `{"generators":[name,...],"relations":[[name,...],...]}`.
    ///
    /// The result is not normalized; generator order is document order.
    pub fn parse_json(text: &str) -> Result<Self> {
        let raw: RawPresentation = serde_json::from_str(text).map_err(|e| Error::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Self::from_names(raw.generators, raw.relations)
    }

    /// Parses the compact form `gens: x y; rels: yx xx;`.
    ///
    /// Generators are single characters. Relation words are separated by
    /// whitespace and spelled character by character.
    pub fn parse_compact(text: &str) -> Result<Self> {
        let mut gens: Option<Vec<String>> = None;
        let mut rels: Option<Vec<Vec<String>>> = None;
        let mut offset = 0;
        for segment in text.split(';') {
            let seg_start = offset;
            offset += segment.len() + 1;
            if segment.trim().is_empty() {
                continue;
            }
            let err = |at: usize, message: String| {
                let (line, column) = line_column(text, at);
                Error::Syntax {
                    line,
                    column,
                    message,
                }
            };
            let lead = segment.len() - segment.trim_start().len();
            let Some((key, body)) = segment.split_once(':') else {
                return Err(err(seg_start + lead, "expected `gens:` or `rels:`".into()));
            };
            let body_start = seg_start + key.len() + 1;
            let tokens = tokens_with_offsets(body);
            match key.trim() {
                "gens" if gens.is_none() => {
                    let mut names = Vec::new();
                    for (at, tok) in tokens {
                        if tok.chars().count() != 1 {
                            return Err(err(
                                body_start + at,
                                format!("compact generators are single characters, got {tok:?}"),
                            ));
                        }
                        names.push(tok.to_string());
                    }
                    gens = Some(names);
                }
                "rels" if rels.is_none() => {
                    rels = Some(
                        tokens
                            .into_iter()
                            .map(|(_, tok)| tok.chars().map(String::from).collect())
                            .collect(),
                    );
                }
                "gens" | "rels" => {
                    return Err(err(
                        seg_start + lead,
                        format!("duplicate `{}` section", key.trim()),
                    ))
                }
                other => {
                    return Err(err(seg_start + lead, format!("unknown section `{other}`")));
                }
            }
        }
        let Some(gens) = gens else {
            let (line, column) = line_column(text, text.len());
            return Err(Error::Syntax {
                line,
                column,
                message: "missing `gens:` section".into(),
            });
        };
        Self::from_names(gens, rels.unwrap_or_default())
    }

    /// Parses either input form: JSON if the document starts with `{`,
    /// otherwise the compact form.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_compact(text)
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn relations(&self) -> &[Word] {
        &self.relations
    }

    /// Vertex word length of the quiver: longest relation length minus one,
    /// or zero when there are no relations.
    pub fn d(&self) -> usize {
        self.relations
            .iter()
            .map(Word::len)
            .max()
            .map_or(0, |m| m.saturating_sub(1))
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_empty()
    }

    /// Reduces the relations to the minimal antichain of obstructions.
    pub fn normalize(&self) -> Result<Presentation> {
        self.normalize_with_map().map(|(p, _)| p)
    }

    /// Like [`normalize`](Self::normalize), also returning where each original
    /// generator went (`None` if it was eliminated by a length-one relation).
    pub fn normalize_with_map(&self) -> Result<(Presentation, Vec<Option<usize>>)> {
        let mut killed = vec![false; self.generators.len()];
        for r in &self.relations {
            if r.len() == 1 {
                killed[r.letters()[0]] = true;
            }
        }
        let mut map = Vec::with_capacity(killed.len());
        let mut generators = Vec::new();
        for (i, name) in self.generators.iter().enumerate() {
            if killed[i] {
                map.push(None);
            } else {
                map.push(Some(generators.len()));
                generators.push(name.clone());
            }
        }
        if generators.is_empty() {
            return Err(Error::Collapsed);
        }

        let mut rels: Vec<Word> = self
            .relations
            .iter()
            .filter(|r| r.letters().iter().all(|&x| !killed[x]))
            .map(|r| Word(r.letters().iter().map(|&x| map[x].unwrap()).collect()))
            .collect();
        rels.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        rels.dedup();

        // Sorted by length, so any factor of a relation has already been kept.
        let mut kept: Vec<Word> = Vec::with_capacity(rels.len());
        for r in rels {
            if !kept.iter().any(|k| r.contains_factor(k)) {
                kept.push(r);
            }
        }
        Ok((
            Presentation {
                generators,
                relations: kept,
            },
            map,
        ))
    }

    /// True if `normalize` would return `self` unchanged.
    pub fn is_normalized(&self) -> bool {
        matches!(self.normalize(), Ok(n) if n == *self)
    }

    /// Spells a word with generator names. Names are concatenated when they
    /// are all single characters and space-separated otherwise; the empty
    /// word prints as `ε`.
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

    /// Reads a word spelled with single-character generator names.
    pub fn word(&self, spelled: &str) -> Option<Word> {
        spelled
            .chars()
            .map(|c| {
                self.generators
                    .iter()
                    .position(|g| g.chars().eq(std::iter::once(c)))
            })
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }

    /// The canonical JSON form of this presentation.
    pub fn to_json(&self) -> String {
        let rels: Vec<Vec<&str>> = self
            .relations
            .iter()
            .map(|r| {
                r.letters()
                    .iter()
                    .map(|&x| self.generators[x].as_str())
                    .collect()
            })
            .collect();
        serde_json::json!({ "generators": self.generators, "relations": rels }).to_string()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k<{}>", self.generators.join(", "))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|r| self.spell(r)).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

fn tokens_with_offsets(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(st)) => {
                out.push((st, &s[st..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}
