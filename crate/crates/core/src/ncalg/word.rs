use std::cmp::Ordering;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Letter = u8;

/// Generator names with their precedence and weights.
///
/// Letter indices increase with precedence: letter 0 is the smallest symbol.
/// Grouplike symbols weigh 0, all others weigh 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl Alphabet {
    /// `largest_first` lists every symbol from highest to lowest precedence.
    pub fn new(largest_first: &[&str], grouplike: &[&str]) -> Result<Arc<Alphabet>> {
        let names: Vec<String> = largest_first.iter().rev().map(|s| s.to_string()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != largest_first.len() || names.len() > 255 {
            return Err(Error::IncompatibleData("alphabet names must be unique".into()));
        }
        for g in grouplike {
            if !names.iter().any(|n| n == g) {
                return Err(Error::UnknownName(g.to_string()));
            }
        }
        let weights = names.iter().map(|n| if grouplike.contains(&n.as_str()) { 0 } else { 1 }).collect();
        Ok(Arc::new(Alphabet { names, weights }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name).map(|i| i as Letter)
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.index_of(name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn weight(&self, l: Letter) -> u32 {
        self.weights[l as usize]
    }

    pub fn is_grouplike(&self, l: Letter) -> bool {
        self.weights[l as usize] == 0
    }

    /// Names from highest to lowest precedence.
    pub fn precedence(&self) -> Vec<&str> {
        self.names.iter().rev().map(|s| s.as_str()).collect()
    }

    pub fn grouplike_names(&self) -> Vec<&str> {
        self.precedence().into_iter().filter(|n| self.is_grouplike(self.index_of(n).unwrap())).collect()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.names.len() as Letter
    }

    pub fn word(&self, letters: &[Letter]) -> Word {
        Word {
            weight: letters.iter().map(|&l| self.weights[l as usize]).sum(),
            letters: SmallVec::from_slice(letters),
        }
    }

    pub fn single(&self, l: Letter) -> Word {
        self.word(&[l])
    }

    /// `l^n` as a word.
    pub fn power(&self, l: Letter, n: usize) -> Word {
        self.word(&vec![l; n])
    }

    /// Parses `x.g.g`, `g^2.x` or `1`.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for part in s.split('.') {
            let (name, exp) = match part.split_once('^') {
                Some((n, e)) => (n.trim(), e.trim().parse::<usize>().map_err(|_| Error::Parse(part.into()))?),
                None => (part.trim(), 1),
            };
            let l = self.letter(name)?;
            letters.extend(std::iter::repeat_n(l, exp));
        }
        Ok(self.word(&letters))
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters.iter().map(|&l| self.names[l as usize].as_str()).collect::<Vec<_>>().join(".")
    }
}

/// A monomial of the free algebra.
///
/// Ordered by weight, then length, then lexicographically by precedence.
/// This order is multiplicative and well-founded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    weight: u32,
    letters: SmallVec<[Letter; 16]>,
}

impl Word {
    pub fn empty() -> Word {
        Word { weight: 0, letters: SmallVec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&o.letters);
        Word { weight: self.weight + o.weight, letters }
    }

    pub fn occurs_at(&self, pos: usize, pat: &Word) -> bool {
        self.letters.len() >= pos + pat.letters.len()
            && self.letters[pos..pos + pat.letters.len()] == pat.letters[..]
    }

    pub fn contains(&self, pat: &Word) -> bool {
        pat.len() <= self.len() && (0..=self.len() - pat.len()).any(|i| self.occurs_at(i, pat))
    }

    /// Replaces the occurrence of `pat` at `pos` by `rep`.
    pub fn splice(&self, pos: usize, pat: &Word, rep: &Word) -> Word {
        let mut letters: SmallVec<[Letter; 16]> = SmallVec::with_capacity(self.len() - pat.len() + rep.len());
        letters.extend_from_slice(&self.letters[..pos]);
        letters.extend_from_slice(&rep.letters);
        letters.extend_from_slice(&self.letters[pos + pat.len()..]);
        Word { weight: self.weight - pat.weight + rep.weight, letters }
    }

    /// Prefix and suffix split at `k`, given the alphabet weights.
    pub fn split_at(&self, k: usize, alph: &Alphabet) -> (Word, Word) {
        (alph.word(&self.letters[..k]), alph.word(&self.letters[k..]))
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { weight: self.weight, letters }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.weight
            .cmp(&o.weight)
            .then(self.letters.len().cmp(&o.letters.len()))
            .then_with(|| self.letters.cmp(&o.letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_examples() {
        let a = Alphabet::new(&["g", "x", "y"], &["g"]).unwrap();
        let w = |s: &str| a.parse_word(s).unwrap();
        // Grouplike tails never outrank a word with more skew letters.
        assert!(w("g.x") > w("g.g"));
        assert!(w("g.x") > w("x.g"));
        assert!(w("g.g.g") > w("1"));
        assert!(w("x.y") > w("y.x"));
        assert!(w("y.y") > w("g.g.g.x"));
        assert_eq!(a.render_word(&w("g^2.x")), "g.g.x");
        assert_eq!(w("g^2.x").weight(), 1);
    }

    #[test]
    fn splice_keeps_weight() {
        let a = Alphabet::new(&["g", "x"], &["g"]).unwrap();
        let w = a.parse_word("x.g.x.g").unwrap();
        let pat = a.parse_word("g.x").unwrap();
        let rep = a.parse_word("x.g").unwrap();
        let out = w.splice(1, &pat, &rep);
        assert_eq!(out, a.parse_word("x.x.g.g").unwrap());
        assert_eq!(out.weight(), 2);
    }
}
