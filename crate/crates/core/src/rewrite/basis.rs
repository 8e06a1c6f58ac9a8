use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::ncalg::{Alphabet, Letter, Word};

/// Aho–Corasick automaton recognizing words that contain a forbidden pattern.
///
/// States are trie nodes; a state is dead when it or a suffix link ends a pattern.
/// The language avoiding all patterns is finite iff the live part of the
/// transition graph has no cycle reachable from the root.
pub struct BasisAutomaton {
    delta: Vec<Vec<usize>>,
    dead: Vec<bool>,
}

impl BasisAutomaton {
    pub fn new<'a>(alph: &Alphabet, patterns: impl Iterator<Item = &'a Word>) -> Self {
        let n = alph.len();
        let mut goto: Vec<Vec<Option<usize>>> = vec![vec![None; n]];
        let mut dead = vec![false];
        for pat in patterns {
            let mut s = 0;
            for &l in pat.letters() {
                s = match goto[s][l as usize] {
                    Some(t) => t,
                    None => {
                        goto.push(vec![None; n]);
                        dead.push(false);
                        let t = goto.len() - 1;
                        goto[s][l as usize] = Some(t);
                        t
                    }
                };
            }
            dead[s] = true;
        }
        let mut delta = vec![vec![0usize; n]; goto.len()];
        let mut fail = vec![0usize; goto.len()];
        let mut queue = VecDeque::new();
        for l in 0..n {
            if let Some(t) = goto[0][l] {
                delta[0][l] = t;
                queue.push_back(t);
            }
        }
        while let Some(s) = queue.pop_front() {
            dead[s] = dead[s] || dead[fail[s]];
            for l in 0..n {
                match goto[s][l] {
                    Some(t) => {
                        fail[t] = delta[fail[s]][l];
                        delta[s][l] = t;
                        queue.push_back(t);
                    }
                    None => delta[s][l] = delta[fail[s]][l],
                }
            }
        }
        BasisAutomaton { delta, dead }
    }

    /// Pattern-avoiding words, smallest first in the monomial order.
    pub fn enumerate(&self, alph: &Alphabet) -> Result<Vec<Word>> {
        if self.has_live_cycle() {
            return Err(Error::InfiniteBasis);
        }
        let mut out = Vec::new();
        let mut stack: Vec<(usize, Vec<Letter>)> = vec![(0, Vec::new())];
        while let Some((s, w)) = stack.pop() {
            out.push(alph.word(&w));
            for l in alph.letters() {
                let t = self.delta[s][l as usize];
                if !self.dead[t] {
                    let mut w2 = w.clone();
                    w2.push(l);
                    stack.push((t, w2));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    fn has_live_cycle(&self) -> bool {
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut color = vec![0u8; self.delta.len()];
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        color[0] = 1;
        while let Some(&mut (s, ref mut next)) = stack.last_mut() {
            if *next == self.delta[s].len() {
                color[s] = 2;
                stack.pop();
                continue;
            }
            let t = self.delta[s][*next];
            *next += 1;
            if self.dead[t] {
                continue;
            }
            match color[t] {
                0 => {
                    color[t] = 1;
                    stack.push((t, 0));
                }
                1 => return true,
                _ => {}
            }
        }
        false
    }
}
