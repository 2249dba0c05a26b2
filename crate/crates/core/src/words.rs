//! Words, weak descents, involutions, and reverse Yamanouchi words.
//!
//! The descent notion is *weak* everywhere: position i (1-based, i < n) is a
//! descent of w when `w_i >= w_{i+1}`. On permutations, whose letters are
//! distinct, this coincides with the usual strict descent; on general words
//! it does not, and the strict variant is deliberately not offered.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, OracleBounds, Result};

/// A finite word over the positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if let Some(pos) = letters.iter().position(|&c| c == 0) {
            return Err(Error::InvalidWord(format!(
                "letter at position {} is zero; letters must be >= 1",
                pos + 1
            )));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A reverse Yamanouchi (lattice) word: every prefix contains at least as
/// many i's as (i+1)'s, for every i >= 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YamanouchiWord(Word);

impl YamanouchiWord {
    pub fn new(word: Word) -> Result<Self> {
        if !is_reverse_yamanouchi(&word) {
            return Err(Error::InvalidWord(format!(
                "\"{word}\" violates the lattice prefix condition"
            )));
        }
        Ok(YamanouchiWord(word))
    }

    pub fn from_letters(letters: Vec<u32>) -> Result<Self> {
        Self::new(Word::new(letters)?)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn letters(&self) -> &[u32] {
        self.0.letters()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for YamanouchiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<YamanouchiWord> for Word {
    fn from(y: YamanouchiWord) -> Word {
        y.0
    }
}

/// A self-inverse permutation of [n] in one-line form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Involution(Vec<u32>);

impl Involution {
    pub fn new(one_line: Vec<u32>) -> Result<Self> {
        let n = one_line.len();
        for (i, &v) in one_line.iter().enumerate() {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidInvolution(format!(
                    "value {} at position {} is outside [1, {}]",
                    v,
                    i + 1,
                    n
                )));
            }
            if one_line[v as usize - 1] as usize != i + 1 {
                return Err(Error::InvalidInvolution(format!(
                    "sigma(sigma({})) != {}; not self-inverse",
                    i + 1,
                    i + 1
                )));
            }
        }
        Ok(Involution(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Involution((1..=n as u32).collect())
    }

    pub fn one_line(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn descent_positions(letters: &[u32]) -> Vec<usize> {
    (1..letters.len())
        .filter(|&i| letters[i - 1] >= letters[i])
        .collect()
}

/// The weak descent set { i : 1 <= i < n, w_i >= w_{i+1} }, 1-based,
/// in increasing order.
pub fn weak_descent_set(w: &Word) -> Vec<usize> {
    descent_positions(w.letters())
}

/// d(w): the number of weak descents.
pub fn descent_count(w: &Word) -> usize {
    weak_descent_set(w).len()
}

/// Descent set of an involution = weak descent set of its one-line word.
/// Letters are distinct, so this is also the strict descent set.
pub fn descent_set_involution(sigma: &Involution) -> Vec<usize> {
    descent_positions(sigma.one_line())
}

/// Whether every prefix of w satisfies the lattice condition.
pub fn is_reverse_yamanouchi(w: &Word) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &c in w.letters() {
        let c = c as usize;
        if counts.len() < c {
            counts.resize(c, 0);
        }
        counts[c - 1] += 1;
        if c >= 2 && counts[c - 1] > counts[c - 2] {
            return false;
        }
    }
    true
}

/// The conjugate word: position i holds the number of occurrences of y_i
/// within the prefix y_1..y_i. Conjugation is an involution on reverse
/// Yamanouchi words and complements the descent count to n - 1.
pub fn conjugate_word(y: &YamanouchiWord) -> YamanouchiWord {
    let letters = y.letters();
    let mut counts: Vec<u32> = Vec::new();
    let mut out = Vec::with_capacity(letters.len());
    for &c in letters {
        let c = c as usize;
        if counts.len() < c {
            counts.resize(c, 0);
        }
        counts[c - 1] += 1;
        out.push(counts[c - 1]);
    }
    YamanouchiWord::new(Word(out)).expect("conjugate of a lattice word is a lattice word")
}

/// Involution numbers t(n): t(0) = t(1) = 1, t(n) = t(n-1) + (n-1) t(n-2).
pub fn involution_count(n: usize) -> BigUint {
    let mut prev = BigUint::one();
    let mut cur = BigUint::one();
    for m in 2..=n {
        let next = &cur + BigUint::from(m as u64 - 1) * &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Streams every reverse Yamanouchi word of length n exactly once, in
/// lexicographic order. Rejects n above `bounds.yamanouchi_len`; the total
/// number of words equals the involution number t(n).
pub fn enumerate_yamanouchi(n: usize, bounds: &OracleBounds) -> Result<YamanouchiWords> {
    OracleBounds::check("yamanouchi word length", n, bounds.yamanouchi_len)?;
    Ok(YamanouchiWords {
        n,
        word: Vec::new(),
        counts: vec![0; n],
        started: false,
        done: false,
    })
}

/// Lazy lexicographic stream of reverse Yamanouchi words of a fixed length.
pub struct YamanouchiWords {
    n: usize,
    word: Vec<u32>,
    counts: Vec<usize>,
    started: bool,
    done: bool,
}

impl YamanouchiWords {
    fn emit(&self) -> YamanouchiWord {
        YamanouchiWord(Word(self.word.clone()))
    }

    /// Smallest feasible letter is always 1, so the lex-minimal suffix is
    /// all ones.
    fn fill_ones(&mut self, from: usize) {
        if from < self.n {
            for _ in from..self.n {
                self.word.push(1);
            }
            self.counts[0] += self.n - from;
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(v) = self.word.pop() {
            let pos = self.word.len();
            self.counts[v as usize - 1] -= 1;
            // next letter at `pos` greater than v that keeps the prefix lattice
            for cand in (v + 1)..=(self.n as u32) {
                let c = cand as usize;
                if self.counts[c - 1] < self.counts[c - 2] {
                    self.word.push(cand);
                    self.counts[c - 1] += 1;
                    self.fill_ones(pos + 1);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for YamanouchiWords {
    type Item = YamanouchiWord;

    fn next(&mut self) -> Option<YamanouchiWord> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_ones(0);
            return Some(self.emit());
        }
        if self.advance() {
            Some(self.emit())
        } else {
            self.done = true;
            None
        }
    }
}

/// Streams every involution of [n] exactly once, in lexicographic order of
/// the one-line form. Rejects n above `bounds.involution_len`.
pub fn enumerate_involutions(n: usize, bounds: &OracleBounds) -> Result<Involutions> {
    OracleBounds::check("involution length", n, bounds.involution_len)?;
    Ok(Involutions {
        n,
        perm: vec![0; n],
        choices: Vec::new(),
        started: false,
        done: false,
    })
}

/// Lazy lexicographic stream of involutions, built by choosing, at the
/// smallest unassigned position, either a fixed point or a 2-cycle partner.
pub struct Involutions {
    n: usize,
    /// one-line values, 0 = unassigned
    perm: Vec<u32>,
    /// (position, chosen value), in choice order
    choices: Vec<(usize, u32)>,
    started: bool,
    done: bool,
}

impl Involutions {
    fn emit(&self) -> Involution {
        debug_assert!(self.perm.iter().all(|&v| v != 0));
        Involution(self.perm.clone())
    }

    /// Lex-minimal completion: every remaining position becomes a fixed point.
    fn fill_fixed(&mut self) {
        for pos in 0..self.n {
            if self.perm[pos] == 0 {
                self.perm[pos] = pos as u32 + 1;
                self.choices.push((pos, pos as u32 + 1));
            }
        }
    }

    fn advance(&mut self) -> bool {
        while let Some((pos, val)) = self.choices.pop() {
            self.perm[pos] = 0;
            if val as usize != pos + 1 {
                self.perm[val as usize - 1] = 0;
            }
            // next partner for `pos` after `val`: the smallest free j > val
            // (val >= pos+1, so every candidate exceeds pos+1)
            let next = (val as usize + 1..=self.n).find(|&j| self.perm[j - 1] == 0);
            if let Some(j) = next {
                self.perm[pos] = j as u32;
                self.perm[j - 1] = pos as u32 + 1;
                self.choices.push((pos, j as u32));
                self.fill_fixed();
                return true;
            }
        }
        false
    }
}

impl Iterator for Involutions {
    type Item = Involution;

    fn next(&mut self) -> Option<Involution> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_fixed();
            return Some(self.emit());
        }
        if self.advance() {
            Some(self.emit())
        } else {
            self.done = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[u32]) -> Word {
        Word::new(letters.to_vec()).unwrap()
    }

    fn yam(letters: &[u32]) -> YamanouchiWord {
        YamanouchiWord::from_letters(letters.to_vec()).unwrap()
    }

    #[test]
    fn weak_descents_count_equalities() {
        let w = word(&[1, 2, 1, 3, 1, 2, 2, 3]);
        assert_eq!(weak_descent_set(&w), vec![2, 4, 6]);
        assert_eq!(descent_count(&w), 3);

        let v = word(&[1, 1, 2, 1, 3, 2, 3, 2]);
        assert_eq!(weak_descent_set(&v), vec![1, 3, 5, 7]);
        assert_eq!(descent_count(&v), 4);

        assert_eq!(weak_descent_set(&word(&[])), Vec::<usize>::new());
    }

    #[test]
    fn involution_descents() {
        let s = Involution::new(vec![3, 4, 1, 2]).unwrap();
        assert_eq!(descent_set_involution(&s), vec![2]);
        assert_eq!(
            descent_set_involution(&Involution::identity(3)),
            Vec::<usize>::new()
        );
        let r = Involution::new(vec![3, 2, 1]).unwrap();
        assert_eq!(descent_set_involution(&r), vec![1, 2]);
    }

    #[test]
    fn involution_validation() {
        assert!(Involution::new(vec![2, 3, 1]).is_err()); // a 3-cycle
        assert!(Involution::new(vec![1, 1]).is_err());
        assert!(Involution::new(vec![]).is_ok());
    }

    #[test]
    fn lattice_condition() {
        assert!(is_reverse_yamanouchi(&word(&[1, 2, 1, 3, 1, 2, 2, 3])));
        assert!(!is_reverse_yamanouchi(&word(&[1, 2, 2])));
        assert!(!is_reverse_yamanouchi(&word(&[2])));
        assert!(is_reverse_yamanouchi(&word(&[])));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(
            conjugate_word(&yam(&[1, 2, 1, 3, 1, 2, 2, 3])),
            yam(&[1, 1, 2, 1, 3, 2, 3, 2])
        );
        assert_eq!(conjugate_word(&yam(&[1, 1, 1])), yam(&[1, 2, 3]));
        assert_eq!(conjugate_word(&yam(&[1, 2, 3])), yam(&[1, 1, 1]));
    }

    #[test]
    fn yamanouchi_enumeration_small() {
        let bounds = OracleBounds::default();
        let words: Vec<String> = enumerate_yamanouchi(3, &bounds)
            .unwrap()
            .map(|y| y.letters().iter().map(|c| c.to_string()).collect())
            .collect();
        assert_eq!(words, vec!["111", "112", "121", "123"]);

        assert_eq!(enumerate_yamanouchi(0, &bounds).unwrap().count(), 1);
        assert_eq!(enumerate_yamanouchi(4, &bounds).unwrap().count(), 10);
    }

    #[test]
    fn involution_enumeration_small() {
        let bounds = OracleBounds::default();
        let got: Vec<Vec<u32>> = enumerate_involutions(3, &bounds)
            .unwrap()
            .map(|s| s.one_line().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![3, 2, 1]
            ]
        );

        assert_eq!(enumerate_involutions(0, &bounds).unwrap().count(), 1);
        assert_eq!(enumerate_involutions(6, &bounds).unwrap().count(), 76);
    }

    #[test]
    fn enumeration_bounds_rejected() {
        let bounds = OracleBounds::default();
        assert!(matches!(
            enumerate_yamanouchi(bounds.yamanouchi_len + 1, &bounds),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(matches!(
            enumerate_involutions(bounds.involution_len + 1, &bounds),
            Err(Error::BoundExceeded { .. })
        ));
        // raised bounds are honored
        let loose = OracleBounds {
            involution_len: 13,
            ..bounds
        };
        assert!(enumerate_involutions(13, &loose).is_ok());
    }

    #[test]
    fn involution_numbers() {
        let expect = [1u64, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496];
        for (n, &t) in expect.iter().enumerate() {
            assert_eq!(involution_count(n), BigUint::from(t));
        }
    }

    #[test]
    fn counts_match_involution_numbers() {
        let bounds = OracleBounds::default();
        for n in 0..=12 {
            let words = enumerate_yamanouchi(n, &bounds).unwrap().count();
            let invs = enumerate_involutions(n, &bounds).unwrap().count();
            assert_eq!(BigUint::from(words), involution_count(n));
            assert_eq!(words, invs, "n = {n}");
        }
    }
}
