use std::fmt;

use super::{Generator, LieMonomial};

/// A Lyndon word over the generator order. Each one names the Lie basis
/// element given by its standard bracketing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LyndonWord(Vec<Generator>);

/// A nonempty word is Lyndon iff it is strictly smaller than each of its
/// proper suffixes.
pub fn is_lyndon(w: &[Generator]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

impl LyndonWord {
    pub fn new(letters: Vec<Generator>) -> Option<Self> {
        is_lyndon(&letters).then_some(LyndonWord(letters))
    }

    pub fn letter(g: Generator) -> Self {
        LyndonWord(vec![g])
    }

    pub(crate) fn concat_unchecked(u: &LyndonWord, v: &LyndonWord) -> Self {
        debug_assert!(u < v);
        let mut w = u.0.clone();
        w.extend_from_slice(&v.0);
        LyndonWord(w)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn as_generator(&self) -> Option<Generator> {
        match self.0.as_slice() {
            [g] => Some(*g),
            _ => None,
        }
    }

    /// `w = uv` with `v` the longest proper Lyndon suffix. `None` for letters.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        if self.0.len() < 2 {
            return None;
        }
        let split = (1..self.0.len())
            .find(|&i| is_lyndon(&self.0[i..]))
            .expect("the last letter is always a Lyndon suffix");
        Some((
            LyndonWord(self.0[..split].to_vec()),
            LyndonWord(self.0[split..].to_vec()),
        ))
    }

    pub fn to_tree(&self) -> LieMonomial {
        match self.standard_factorization() {
            None => LieMonomial::Leaf(self.0[0]),
            Some((u, v)) => LieMonomial::bracket(u.to_tree(), v.to_tree()),
        }
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_tree())
    }
}

/// All Lyndon words of length `degree` over `alphabet` (given in increasing
/// order), in lexicographic order. Duval's generation algorithm.
pub fn lyndon_words(alphabet: &[Generator], degree: usize) -> Vec<LyndonWord> {
    let k = alphabet.len();
    let mut out = Vec::new();
    if k == 0 || degree == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![0];
    loop {
        if w.len() == degree {
            out.push(LyndonWord(w.iter().map(|&i| alphabet[i]).collect()));
        }
        let n = w.len();
        while w.len() < degree {
            let c = w[w.len() - n];
            w.push(c);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
    }
    out
}
