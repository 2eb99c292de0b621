//! The normal-word language of a monomial algebra.
//!
//! A word is normal when no relation occurs in it as a contiguous factor; the
//! normal words of length `n` form the basis of `A_n`. Everything here uses
//! plain factor scanning so it can serve as ground truth for the quiver,
//! morphism and Hilbert series code.

use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};

/// Upper bound on the number of elements any single enumeration may produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cap(pub usize);

impl Cap {
    pub const DEFAULT: Cap = Cap(10_000_000);

    pub fn check(self, len: usize, what: &'static str) -> Result<()> {
        if len > self.0 {
            Err(Error::CapExceeded { what, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Cap {
    fn default() -> Self {
        Cap::DEFAULT
    }
}

/// The normal words of one degree, in canonical (lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBasis {
    degree: usize,
    words: Vec<Word>,
}

impl DegreeBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        if w.len() != self.degree {
            return None;
        }
        self.words.binary_search(w).ok()
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }
}

pub fn is_normal(w: &Word, p: &Presentation) -> bool {
    p.relations().iter().all(|r| !w.contains_factor(r))
}

/// True if no relation occurs as a suffix of `w`. Extending a normal word by
/// one letter keeps it normal exactly when this holds for the extension.
fn suffix_ok(w: &[usize], p: &Presentation) -> bool {
    p.relations().iter().all(|r| !w.ends_with(r.letters()))
}

/// Extends every word of `level` by each generator in index order, keeping
/// the normal extensions. Sorted input gives sorted output.
fn extend_level(level: &[Word], p: &Presentation, cap: Cap) -> Result<Vec<Word>> {
    let mut next = Vec::new();
    let mut buf = Vec::new();
    for w in level {
        for x in 0..p.num_generators() {
            buf.clear();
            buf.extend_from_slice(w.letters());
            buf.push(x);
            if suffix_ok(&buf, p) {
                next.push(Word::from(buf.as_slice()));
                cap.check(next.len(), "normal word enumeration")?;
            }
        }
    }
    Ok(next)
}

/// All normal words of length `n`, sorted.
pub fn normal_words(n: usize, p: &Presentation, cap: Cap) -> Result<DegreeBasis> {
    let mut level = vec![Word::empty()];
    for _ in 0..n {
        level = extend_level(&level, p, cap)?;
    }
    Ok(DegreeBasis {
        degree: n,
        words: level,
    })
}

/// Bases of `A_0, ..., A_max`, sharing the enumeration work.
pub fn normal_words_upto(max: usize, p: &Presentation, cap: Cap) -> Result<Vec<DegreeBasis>> {
    let mut out = Vec::with_capacity(max + 1);
    let mut level = vec![Word::empty()];
    for n in 0..=max {
        if n > 0 {
            level = extend_level(&level, p, cap)?;
        }
        out.push(DegreeBasis {
            degree: n,
            words: level.clone(),
        });
    }
    Ok(out)
}

/// `dim A_0, ..., dim A_max`.
pub fn dims(max: usize, p: &Presentation, cap: Cap) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(max + 1);
    let mut level = vec![Word::empty()];
    for n in 0..=max {
        if n > 0 {
            level = extend_level(&level, p, cap)?;
        }
        out.push(level.len());
    }
    Ok(out)
}

/// All words `u` of length `m` such that `w u` is normal, sorted.
pub fn right_extensions(w: &Word, m: usize, p: &Presentation, cap: Cap) -> Result<Vec<Word>> {
    if !is_normal(w, p) {
        return Ok(Vec::new());
    }
    // Extend the full word so every window crossing the seam is checked.
    let mut level = vec![w.clone()];
    for _ in 0..m {
        level = extend_level(&level, p, cap)?;
        if level.is_empty() {
            break;
        }
    }
    Ok(level
        .into_iter()
        .map(|full| Word::from(&full.letters()[w.len()..]))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1() -> Presentation {
        Presentation::from_letters("xy", &["yx"]).unwrap()
    }

    fn spell_all(p: &Presentation, ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| p.spell(w)).collect()
    }

    #[test]
    fn normality_by_factor_scan() {
        let p = p1();
        assert!(is_normal(&p.word("xxy").unwrap(), &p));
        assert!(!is_normal(&p.word("xyx").unwrap(), &p));
        assert!(is_normal(&Word::empty(), &p));
    }

    #[test]
    fn degree_two_basis_of_p1() {
        let p = p1();
        let b = normal_words(2, &p, Cap::DEFAULT).unwrap();
        assert_eq!(spell_all(&p, b.words()), ["xx", "xy", "yy"]);
        assert_eq!(b.dim(), 3);
        assert_eq!(b.index_of(&p.word("xy").unwrap()), Some(1));
        assert_eq!(b.index_of(&p.word("yx").unwrap()), None);
    }

    #[test]
    fn degree_three_basis_of_p2() {
        let p = Presentation::from_letters("xy", &["xx"]).unwrap();
        let b = normal_words(3, &p, Cap::DEFAULT).unwrap();
        assert_eq!(
            spell_all(&p, b.words()),
            ["xyx", "xyy", "yxy", "yyx", "yyy"]
        );
        assert_eq!(dims(5, &p, Cap::DEFAULT).unwrap(), [1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn degree_zero_is_the_unit() {
        let b = normal_words(0, &p1(), Cap::DEFAULT).unwrap();
        assert_eq!(b.words(), [Word::empty()]);
    }

    #[test]
    fn right_extension_examples() {
        let p3 = Presentation::from_letters("xy", &["xx", "xy", "yx"]).unwrap();
        let x = p3.word("x").unwrap();
        assert!(right_extensions(&x, 1, &p3, Cap::DEFAULT)
            .unwrap()
            .is_empty());

        let p = p1();
        let y = p.word("y").unwrap();
        assert_eq!(
            right_extensions(&y, 1, &p, Cap::DEFAULT).unwrap(),
            [p.word("y").unwrap()]
        );
        assert_eq!(
            right_extensions(&y, 0, &p, Cap::DEFAULT).unwrap(),
            [Word::empty()]
        );
    }

    #[test]
    fn right_extensions_of_non_normal_word_are_empty() {
        let p = p1();
        let yx = p.word("yx").unwrap();
        assert!(right_extensions(&yx, 0, &p, Cap::DEFAULT)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let free = Presentation::from_letters("xyz", &[]).unwrap();
        let err = normal_words(5, &free, Cap(100)).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 100, .. }));
        assert_eq!(normal_words(4, &free, Cap(81)).unwrap().dim(), 81);
    }
}
