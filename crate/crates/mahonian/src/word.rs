//! Words, compositions, permutations, and the structural maps between them.
//!
//! A *word* is a finite sequence of positive integer letters; a
//! *permutation* is the special case where the letters are a rearrangement
//! of `1..=n`. Words of content alpha (the multiset with `alpha_i` copies of
//! the letter `i`) are the ground set of every identity in this crate.
//!
//! Provided here:
//!
//! - [`Word`], [`Composition`], [`Permutation`], [`LetterMultiset`],
//!   [`Biword`], [`SetPartition`]: the shared domain types;
//! - [`Word::content`]: the composition recording letter multiplicities;
//! - [`Word::std`]: standardization, sending a word to the permutation that
//!   relabels equal letters left to right;
//! - [`istd`] / [`istd_set`]: inverse standardization of a permutation /
//!   of a position set, relative to a composition;
//! - [`Permutation::inverse`]: the group inverse;
//! - [`theta`] / [`theta_inv`]: the run-splitting bijection between
//!   permutations with descent set contained in S and words of the
//!   composition induced by S.
//!
//! All types are immutable after construction and all maps are pure, so
//! sharing across threads is safe.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;

/// A word: a nonempty sequence of positive integer letters.
///
/// Positions are 1-based on every public surface, matching the convention
/// used by all statistics here (internal storage is a 0-based vector).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    /// Builds a word, rejecting empty sequences and non-positive letters.
    pub fn new(letters: Vec<u32>) -> Result<Self, Error> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(&bad) = letters.iter().find(|&&a| a == 0) {
            return Err(Error::ZeroLetter(bad));
        }
        Ok(Word { letters })
    }

    /// Parses a word literal: either a run of decimal digits (`2111` is the
    /// word 2,1,1,1) or a comma-separated list of letters (`10,2,10,1`),
    /// which is the only way to write letters above 9.
    pub fn parse_literal(text: &str) -> Result<Self, Error> {
        let letters: Vec<u32> = if text.contains(',') {
            text.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidLiteral(format!("bad letter `{t}`")))
                })
                .collect::<Result<_, _>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::InvalidLiteral(format!("bad digit `{c}` in `{text}`")))
                })
                .collect::<Result<_, _>>()?
        };
        Word::new(letters)
    }

    /// The letters as a 0-indexed slice.
    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// The letter at 1-based position `i`.
    ///
    /// # Panics
    /// Panics when `i` is 0 or exceeds the length.
    pub fn at(&self, i: usize) -> u32 {
        self.letters[i - 1]
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Words are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Largest letter value.
    pub fn max_letter(&self) -> u32 {
        *self.letters.iter().max().expect("words are nonempty")
    }

    /// The content composition: part `i` is the multiplicity of the letter
    /// `i`. Fails with [`Error::GapInAlphabet`] unless the letter values
    /// present are exactly `1..=m`.
    pub fn content(&self) -> Result<Composition, Error> {
        let m = self.max_letter();
        let mut counts = vec![0u32; m as usize];
        for &a in &self.letters {
            counts[(a - 1) as usize] += 1;
        }
        if let Some(gap) = counts.iter().position(|&c| c == 0) {
            return Err(Error::GapInAlphabet {
                missing: gap as u32 + 1,
                max: m,
            });
        }
        Composition::new(counts)
    }

    /// Standardization: the permutation `std(w)` obtained by replacing the
    /// copies of the smallest letter by `1..=alpha_1` left to right, the
    /// copies of the next letter by the following `alpha_2` values, and so
    /// on. Equal letters keep their relative order, so
    /// `std(w)_i < std(w)_j` exactly when `w_i < w_j`, or `w_i = w_j` and
    /// `i < j`.
    pub fn std(&self) -> Permutation {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (self.letters[i], i));
        let mut target = vec![0u32; n];
        for (rank, &i) in order.iter().enumerate() {
            target[i] = rank as u32 + 1;
        }
        Permutation::new(target).expect("ranks form a permutation")
    }

    /// The nondecreasing rearrangement of the letters.
    pub fn sorted_letters(&self) -> Vec<u32> {
        let mut a = self.letters.clone();
        a.sort_unstable();
        a
    }

    /// The multiset of all letters.
    pub fn letter_multiset(&self) -> LetterMultiset {
        LetterMultiset::from_values(self.letters.iter().copied())
    }
}

impl fmt::Display for Word {
    /// Digit string when every letter fits one digit, otherwise a
    /// comma-separated list (the same convention the CLI accepts).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&a| a <= 9) {
            for &a in &self.letters {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// A composition of `n`: an ordered sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Builds a composition, rejecting empty part lists and zero parts.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if let Some(&bad) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::ZeroLetter(bad));
        }
        Ok(Composition { parts })
    }

    /// The parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts (the alphabet size of words with this content).
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Strictly increasing proper partial sums `s_1 < s_2 < ... < s_{m-1}`,
    /// excluding the final sum `n`. This is the descent-bound set induced
    /// by the composition.
    pub fn proper_partial_sums(&self) -> Vec<usize> {
        let mut sums = Vec::with_capacity(self.parts.len().saturating_sub(1));
        let mut acc = 0usize;
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p as usize;
            sums.push(acc);
        }
        sums
    }

    /// All partial sums `s_1, ..., s_m = n`.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut sums = Vec::with_capacity(self.parts.len());
        let mut acc = 0usize;
        for &p in &self.parts {
            acc += p as usize;
            sums.push(acc);
        }
        sums
    }

    /// The composition induced by a set `S = {s_1 < ... < s_k}` of proper
    /// partial sums inside `[n-1]`: parts `s_1, s_2 - s_1, ..., n - s_k`.
    pub fn from_partial_sums(n: usize, s: &[usize]) -> Result<Self, Error> {
        let mut parts = Vec::with_capacity(s.len() + 1);
        let mut prev = 0usize;
        for &b in s {
            if b <= prev || b >= n {
                return Err(Error::OutOfRange { position: b, n });
            }
            parts.push((b - prev) as u32);
            prev = b;
        }
        parts.push((n - prev) as u32);
        Composition::new(parts)
    }

    /// The nondecreasing word `1^{alpha_1} 2^{alpha_2} ... m^{alpha_m}`.
    pub fn sorted_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.n());
        for (i, &p) in self.parts.iter().enumerate() {
            letters.extend(std::iter::repeat(i as u32 + 1).take(p as usize));
        }
        Word::new(letters).expect("compositions are nonempty")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{self}")
    }
}

/// A permutation of `1..=n`, stored as the word of its one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Word,
}

impl Permutation {
    /// Builds a permutation from one-line notation, rejecting sequences
    /// that are not a rearrangement of `1..=n`.
    pub fn new(letters: Vec<u32>) -> Result<Self, Error> {
        let word = Word::new(letters)?;
        Permutation::from_word(word)
    }

    /// Validates an existing word as a permutation.
    pub fn from_word(word: Word) -> Result<Self, Error> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &a in word.letters() {
            let idx = a as usize;
            if idx == 0 || idx > n || seen[idx - 1] {
                return Err(Error::NotAPermutation);
            }
            seen[idx - 1] = true;
        }
        Ok(Permutation { word })
    }

    /// The identity permutation on `1..=n`.
    pub fn identity(n: usize) -> Result<Self, Error> {
        Permutation::new((1..=n as u32).collect())
    }

    /// One-line notation as a word.
    pub fn as_word(&self) -> &Word {
        &self.word
    }

    /// Consumes the permutation, returning the underlying word.
    pub fn into_word(self) -> Word {
        self.word
    }

    /// The group inverse: `inverse(pi)_j = i` exactly when `pi_i = j`.
    pub fn inverse(&self) -> Permutation {
        let n = self.word.len();
        let mut inv = vec![0u32; n];
        for (i, &v) in self.word.letters().iter().enumerate() {
            inv[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation::new(inv).expect("inverse of a permutation is a permutation")
    }
}

impl std::ops::Deref for Permutation {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.word
    }
}

impl From<Permutation> for Word {
    fn from(p: Permutation) -> Word {
        p.word
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.word)
    }
}

/// A finite multiset of positive integers in canonical form: a sorted
/// sequence of `(value, count)` pairs with positive counts.
///
/// Equality and hashing follow multiset equality. The weak right-to-left
/// minima `Rlwmin(w)` of a word live here.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LetterMultiset {
    items: Vec<(u32, u32)>,
}

impl LetterMultiset {
    /// The empty multiset.
    pub fn empty() -> Self {
        LetterMultiset::default()
    }

    /// Collects values (with repetition) into canonical form.
    pub fn from_values<I: IntoIterator<Item = u32>>(values: I) -> Self {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for v in values {
            *counts.entry(v).or_insert(0) += 1;
        }
        LetterMultiset {
            items: counts.into_iter().collect(),
        }
    }

    /// Builds directly from sorted `(value, count)` pairs.
    pub fn from_counts<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for (v, c) in pairs {
            if c > 0 {
                *counts.entry(v).or_insert(0) += c;
            }
        }
        LetterMultiset {
            items: counts.into_iter().collect(),
        }
    }

    /// Canonical `(value, count)` pairs, sorted by value.
    pub fn items(&self) -> &[(u32, u32)] {
        &self.items
    }

    /// Total number of elements, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.items.iter().map(|&(_, c)| c as usize).sum()
    }

    /// Whether the multiset has no elements.
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Multiplicity of `v`.
    pub fn count(&self, v: u32) -> u32 {
        self.items
            .binary_search_by_key(&v, |&(val, _)| val)
            .map(|i| self.items[i].1)
            .unwrap_or(0)
    }

    /// The underlying set `supp(M)`: each value once, ascending.
    pub fn supp(&self) -> Vec<u32> {
        self.items.iter().map(|&(v, _)| v).collect()
    }

    /// The restriction of the multiset to values at most `x` (the
    /// intersection with the lower set of `x`).
    pub fn restrict_max(&self, x: u32) -> LetterMultiset {
        LetterMultiset {
            items: self
                .items
                .iter()
                .copied()
                .take_while(|&(v, _)| v <= x)
                .collect(),
        }
    }

    /// Multiset containment: every value of `self` occurs in `other` with
    /// at least the same multiplicity.
    pub fn is_submultiset_of(&self, other: &LetterMultiset) -> bool {
        self.items.iter().all(|&(v, c)| other.count(v) >= c)
    }

    /// Multiset union (multiplicities add).
    pub fn union(&self, other: &LetterMultiset) -> LetterMultiset {
        LetterMultiset::from_counts(
            self.items.iter().copied().chain(other.items.iter().copied()),
        )
    }

    /// All elements with repetition, ascending.
    pub fn values(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len());
        for &(v, c) in &self.items {
            out.extend(std::iter::repeat(v).take(c as usize));
        }
        out
    }
}

impl fmt::Display for LetterMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values().iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for LetterMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LetterMultiset{self}")
    }
}

/// A biword: two parallel rows of letters of equal length. Column windows
/// of a larger biword are biwords too, so construction checks only the
/// lengths; the dominated-cycle decomposition asserts
/// [`rows_share_content`](Biword::rows_share_content) where the two-line
/// notation requires it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Biword {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl Biword {
    /// Builds a biword from two rows of equal, positive length.
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self, Error> {
        if top.is_empty() || top.len() != bottom.len() {
            return Err(Error::BiwordRowMismatch);
        }
        Ok(Biword { top, bottom })
    }

    /// Are the two rows rearrangements of the same multiset? True for the
    /// two-line notation of a word and for every dominated cycle.
    pub fn rows_share_content(&self) -> bool {
        let mut a = self.top.clone();
        let mut b = self.bottom.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// The top row.
    pub fn top(&self) -> &[u32] {
        &self.top
    }

    /// The bottom row.
    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Number of columns.
    pub fn len(&self) -> usize {
        self.top.len()
    }

    /// Biwords are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Debug for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.top.iter().map(|v| v.to_string()).collect();
        let b: Vec<String> = self.bottom.iter().map(|v| v.to_string()).collect();
        write!(f, "({} / {})", t.join(" "), b.join(" "))
    }
}

/// A set partition of `1..=n` into blocks ordered by increasing maxima.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition from blocks (each listed in any order). Validates
    /// that the blocks are nonempty, pairwise disjoint, cover `1..=n`, and
    /// come with strictly increasing maxima.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self, Error> {
        if blocks.is_empty() {
            return Err(Error::InvalidPartition("no blocks"));
        }
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block"));
            }
            b.sort_unstable();
        }
        let n: usize = blocks.iter().map(|b| b.len()).sum();
        let mut seen = vec![false; n];
        for b in &blocks {
            for &e in b {
                if e == 0 || e > n || seen[e - 1] {
                    return Err(Error::InvalidPartition(
                        "blocks must partition 1..=n exactly",
                    ));
                }
                seen[e - 1] = true;
            }
        }
        for pair in blocks.windows(2) {
            let prev_max = *pair[0].last().expect("nonempty");
            let next_max = *pair[1].last().expect("nonempty");
            if prev_max >= next_max {
                return Err(Error::InvalidPartition(
                    "block maxima must strictly increase",
                ));
            }
        }
        Ok(SetPartition { blocks })
    }

    /// The blocks, each sorted ascending, in order of increasing maxima.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Ground-set size.
    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// The shape: block sizes in block order.
    pub fn shape(&self) -> Composition {
        Composition::new(self.blocks.iter().map(|b| b.len() as u32).collect())
            .expect("partitions are nonempty")
    }

    /// The word representation: the word `w` with `w_i = j` exactly when
    /// `i` lies in block `j`.
    pub fn word_rep(&self) -> Word {
        let n = self.n();
        let mut letters = vec![0u32; n];
        for (j, b) in self.blocks.iter().enumerate() {
            for &e in b {
                letters[e - 1] = j as u32 + 1;
            }
        }
        Word::new(letters).expect("partitions cover 1..=n")
    }

    /// The permutation representation: each block written in increasing
    /// order, blocks concatenated in order of increasing maxima.
    pub fn perm_rep(&self) -> Permutation {
        let mut letters = Vec::with_capacity(self.n());
        for b in &self.blocks {
            letters.extend(b.iter().map(|&e| e as u32));
        }
        Permutation::new(letters).expect("partition blocks concatenate to a permutation")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|e| e.to_string()).collect::<String>())
            .collect();
        write!(f, "{}", parts.join("/"))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

/// Inverse standardization: replaces permutation values `1..=alpha_1` by
/// the letter 1, the next `alpha_2` values by 2, and so on.
///
/// For every word `w` of content `alpha`, `istd(alpha, std(w)) = w`.
pub fn istd(alpha: &Composition, pi: &Permutation) -> Result<Word, Error> {
    let n = alpha.n();
    if pi.len() != n {
        return Err(Error::LengthMismatch {
            word_len: pi.len(),
            expected: n,
        });
    }
    let block = value_blocks(alpha);
    let letters = pi
        .as_word()
        .letters()
        .iter()
        .map(|&v| block[(v - 1) as usize])
        .collect();
    Word::new(letters)
}

/// Inverse standardization of a set of values in `1..=n`: the multiset of
/// letters the values map to under the block relabeling of `alpha`.
pub fn istd_set(alpha: &Composition, values: &[usize]) -> Result<LetterMultiset, Error> {
    let n = alpha.n();
    let block = value_blocks(alpha);
    let mut out = Vec::with_capacity(values.len());
    for &v in values {
        if v == 0 || v > n {
            return Err(Error::OutOfRange { position: v, n });
        }
        out.push(block[v - 1]);
    }
    Ok(LetterMultiset::from_values(out))
}

/// For each value `v` in `1..=n`, the 1-based index of the part of `alpha`
/// whose value range contains `v`.
fn value_blocks(alpha: &Composition) -> Vec<u32> {
    let mut block = Vec::with_capacity(alpha.n());
    for (j, &p) in alpha.parts().iter().enumerate() {
        block.extend(std::iter::repeat(j as u32 + 1).take(p as usize));
    }
    block
}

/// The run-splitting map: given a permutation whose descent set is
/// contained in `S = {s_1 < ... < s_k}` (positions, 1-based), split its
/// one-line notation after positions `s_1, ..., s_k` into increasing runs
/// `beta_1, ..., beta_{k+1}` and return the word `w` with `w_i = j` when
/// the value `i` lies in run `beta_j`.
///
/// The result has content `alpha = (s_1, s_2 - s_1, ..., n - s_k)` and
/// satisfies `std(theta(pi, S)) = inverse(pi)`.
pub fn theta(pi: &Permutation, s: &[usize]) -> Result<Word, Error> {
    let n = pi.len();
    for (idx, &b) in s.iter().enumerate() {
        if b == 0 || b >= n {
            return Err(Error::OutOfRange { position: b, n });
        }
        if idx > 0 && s[idx - 1] >= b {
            return Err(Error::OutOfRange { position: b, n });
        }
    }
    let letters_of_pi = pi.as_word().letters();
    for i in 1..n {
        if letters_of_pi[i - 1] > letters_of_pi[i] && !s.contains(&i) {
            return Err(Error::DescentViolation);
        }
    }
    let mut letters = vec![0u32; n];
    let mut run = 1u32;
    let mut bound_idx = 0usize;
    for (pos, &v) in letters_of_pi.iter().enumerate() {
        letters[(v - 1) as usize] = run;
        // position pos+1 (1-based) closes a run when it equals the next bound
        if bound_idx < s.len() && pos + 1 == s[bound_idx] {
            run += 1;
            bound_idx += 1;
        }
    }
    Word::new(letters)
}

/// The inverse of [`theta`]: for each letter `j` of `w`, list the positions
/// of `j` in increasing order as the run `beta_j`, then concatenate
/// `beta_1 beta_2 ...` into a permutation.
pub fn theta_inv(w: &Word) -> Permutation {
    let n = w.len();
    let m = w.max_letter();
    let mut runs: Vec<Vec<u32>> = vec![Vec::new(); m as usize];
    for (i, &a) in w.letters().iter().enumerate() {
        runs[(a - 1) as usize].push(i as u32 + 1);
    }
    let mut letters = Vec::with_capacity(n);
    for run in runs {
        letters.extend(run);
    }
    Permutation::new(letters).expect("positions 1..=n each occur once")
}
