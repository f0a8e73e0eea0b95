//! Exhaustive generators for every restricted family the identity suite
//! quantifies over.
//!
//! The base generators are [`gen_words`] (all rearrangements of a content,
//! lexicographic) and its image under [`theta_inv`] (permutations with a
//! prescribed descent-set bound). Everything else is a filter or a union:
//!
//! - [`gen_words_fixed_rlwmin`] / [`gen_words_fixed_rlmin`]: words whose
//!   weak (multiset) or strict (set) right-to-left minima are prescribed;
//! - [`gen_des_subseteq`] / [`gen_des_eq`]: permutations with descent set
//!   contained in, or equal to, a given S;
//! - [`gen_des_p`]: the same with the left-to-right-maximum positions
//!   pinned, and [`s_suffix_closed`] enumerating the position sets for
//!   which that family is nonempty;
//! - [`gen_set_partitions`]: set partitions of [n] with max-ordered blocks
//!   of a given shape, with word and permutation representations;
//! - [`gen_avoiders`]: 221- or 212-avoiding words of a content;
//! - [`gen_alternating`]: up-down or down-up permutations;
//! - [`gen_alt_runs`]: permutations with a given number of alternating
//!   runs, both by direct filter and by the descent-set-family union
//!   ([`alt_runs_descent_sets`]) that must agree with it;
//! - [`FamilySpec`]: a parseable descriptor for all of the above, the
//!   family currency of the CLI and the identity engine.
//!
//! Every generator yields distinct elements in lexicographic order.

use std::fmt;

use itertools::Itertools;

use crate::error::Error;
use crate::stats::{alternating_runs, descents, minima_maxima};
use crate::word::{theta_inv, Composition, LetterMultiset, Permutation, SetPartition, Word};

/// Lazy lexicographic stream over all rearrangements of a content.
pub struct Words {
    next: Option<Vec<u32>>,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let word = Word::new(current.clone()).expect("rearrangements are nonempty");
        self.next = next_rearrangement(current);
        Some(word)
    }
}

/// Advances a letter sequence to its lexicographic successor among its
/// rearrangements, if any.
fn next_rearrangement(mut a: Vec<u32>) -> Option<Vec<u32>> {
    let n = a.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    Some(a)
}

/// All words of content `alpha`, in lexicographic order. The count is the
/// multinomial coefficient of `alpha`.
pub fn gen_words(alpha: &Composition) -> Words {
    Words {
        next: Some(alpha.sorted_word().letters().to_vec()),
    }
}

/// All permutations of `1..=n`, in lexicographic order.
pub fn gen_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let alpha = Composition::new(vec![1; n]).expect("n >= 1");
    gen_words(&alpha).map(|w| Permutation::from_word(w).expect("unit content"))
}

/// Words of content `alpha` whose weak right-to-left minima form exactly
/// the multiset `r`. May be empty.
pub fn gen_words_fixed_rlwmin(
    alpha: &Composition,
    r: &LetterMultiset,
) -> impl Iterator<Item = Word> {
    let r = r.clone();
    gen_words(alpha).filter(move |w| minima_maxima(w).rlwmin == r)
}

/// Words of content `alpha` whose strict right-to-left minima form exactly
/// the set `d` (ascending). May be empty.
pub fn gen_words_fixed_rlmin(alpha: &Composition, d: &[u32]) -> impl Iterator<Item = Word> {
    let d = d.to_vec();
    gen_words(alpha).filter(move |w| minima_maxima(w).rlmin == d)
}

fn assert_descent_bound(n: usize, s: &[usize]) {
    assert!(
        s.windows(2).all(|w| w[0] < w[1]) && s.iter().all(|&i| 1 <= i && i < n),
        "descent bound must be a strictly increasing subset of 1..n"
    );
}

/// Permutations of `1..=n` whose descent set is contained in `s`,
/// generated constructively as the `theta_inv` image of the words with
/// content cut out by `s`, then sorted. The count is the multinomial
/// coefficient of that content.
pub fn gen_des_subseteq(n: usize, s: &[usize]) -> Vec<Permutation> {
    assert_descent_bound(n, s);
    let alpha = Composition::from_partial_sums(n, s).expect("validated bound");
    let mut out: Vec<Permutation> = gen_words(&alpha).map(|w| theta_inv(&w)).collect();
    out.sort();
    out
}

/// Permutations of `1..=n` whose descent set equals `s` exactly.
pub fn gen_des_eq(n: usize, s: &[usize]) -> Vec<Permutation> {
    gen_des_subseteq(n, s)
        .into_iter()
        .filter(|pi| descents(pi.as_word()).positions == s)
        .collect()
}

/// The descent-bounded families with the left-to-right-maximum positions
/// pinned to `p`: `exact` selects descent set `= s` rather than `⊆ s`.
/// Empty whenever `p` is not an s-suffix-closed position set.
pub fn gen_des_p(n: usize, s: &[usize], p: &[usize], exact: bool) -> Vec<Permutation> {
    let base = if exact {
        gen_des_eq(n, s)
    } else {
        gen_des_subseteq(n, s)
    };
    base.into_iter()
        .filter(|pi| minima_maxima(pi.as_word()).plrmax == p)
        .collect()
}

/// All S-suffix-closed subsets of `[n]`, ascending-sorted element lists in
/// lexicographic order. With block boundaries `0 = s_0 < s_1 < … < n`, a
/// set is S-suffix-closed when membership of a position forces membership
/// of the rest of its block `[i, s_j]`; equivalently the set is a union of
/// block suffixes, giving the product count `(α_1+1)⋯(α_{k+1}+1)`.
pub fn s_suffix_closed(n: usize, s: &[usize]) -> Vec<Vec<usize>> {
    assert_descent_bound(n, s);
    let mut bounds = vec![0usize];
    bounds.extend_from_slice(s);
    bounds.push(n);
    let mut result: Vec<Vec<usize>> = vec![Vec::new()];
    for window in bounds.windows(2) {
        let (lo, hi) = (window[0] + 1, window[1]);
        let mut next = Vec::new();
        for chosen in &result {
            // suffix starts: hi+1 encodes the empty suffix
            for start in lo..=hi + 1 {
                let mut p = chosen.clone();
                p.extend(start..=hi);
                next.push(p);
            }
        }
        result = next;
    }
    result.sort();
    result
}

/// All set partitions of `[n]` with block sizes `alpha` and strictly
/// increasing block maxima, sorted by their block lists.
pub fn gen_set_partitions(alpha: &Composition) -> Vec<SetPartition> {
    fn rec(
        elements: &[usize],
        parts: &[u32],
        acc_rev: &mut Vec<Vec<usize>>,
        out: &mut Vec<SetPartition>,
    ) {
        if parts.is_empty() {
            debug_assert!(elements.is_empty());
            let blocks: Vec<Vec<usize>> = acc_rev.iter().rev().cloned().collect();
            out.push(SetPartition::new(blocks).expect("constructed under the invariant"));
            return;
        }
        // the last block owns the largest remaining element, which keeps
        // the maxima strictly increasing by construction
        let (last, rest) = elements.split_last().expect("shape sums to |elements|");
        let size = *parts.last().expect("nonempty") as usize;
        for combo in rest.iter().copied().combinations(size - 1) {
            let mut block = combo.clone();
            block.push(*last);
            let remaining: Vec<usize> = rest
                .iter()
                .copied()
                .filter(|e| !combo.contains(e))
                .collect();
            acc_rev.push(block);
            rec(&remaining, &parts[..parts.len() - 1], acc_rev, out);
            acc_rev.pop();
        }
    }
    let elements: Vec<usize> = (1..=alpha.n()).collect();
    let mut out = Vec::new();
    rec(&elements, alpha.parts(), &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.blocks().cmp(b.blocks()));
    out
}

/// Does `w` avoid the pattern 221 (no indices `i < j < k` with
/// `w_i = w_j > w_k`)?
pub fn avoids_221(w: &Word) -> bool {
    let a = w.letters();
    for v in 2..=w.max_letter() {
        let mut seen = 0usize;
        for (idx, &c) in a.iter().enumerate() {
            if c == v {
                seen += 1;
                if seen == 2 {
                    if a[idx + 1..].iter().any(|&c| c < v) {
                        return false;
                    }
                    break;
                }
            }
        }
    }
    true
}

/// Does `w` avoid the pattern 212 (no indices `i < j < k` with
/// `w_i = w_k > w_j`)?
pub fn avoids_212(w: &Word) -> bool {
    let a = w.letters();
    for v in 2..=w.max_letter() {
        let first = a.iter().position(|&c| c == v);
        let last = a.iter().rposition(|&c| c == v);
        if let (Some(first), Some(last)) = (first, last) {
            if first + 1 < last && a[first + 1..last].iter().any(|&c| c < v) {
                return false;
            }
        }
    }
    true
}

/// The two avoidance patterns of the Stirling/quasi-increasing families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// Forbid `w_i = w_j > w_k` (quasi-increasing words).
    Pat221,
    /// Forbid `w_i = w_k > w_j` (Stirling words).
    Pat212,
}

/// Words of content `alpha` avoiding the given pattern, in lexicographic
/// order. Both families have the same product-formula cardinality.
pub fn gen_avoiders(alpha: &Composition, pattern: Pattern) -> impl Iterator<Item = Word> {
    gen_words(alpha).filter(move |w| match pattern {
        Pattern::Pat221 => avoids_221(w),
        Pattern::Pat212 => avoids_212(w),
    })
}

/// Permutations with descent set exactly `{1,3,5,…} ∩ [n−1]`
/// (alternating) or `{2,4,6,…} ∩ [n−1]` (reverse alternating).
pub fn gen_alternating(n: usize, reverse: bool) -> Vec<Permutation> {
    let start = if reverse { 2 } else { 1 };
    let s: Vec<usize> = (start..n).step_by(2).collect();
    gen_des_eq(n, &s)
}

/// Number of maximal consecutive segments of a sorted position set.
pub fn mcs(s: &[usize]) -> usize {
    debug_assert!(s.windows(2).all(|w| w[0] < w[1]));
    s.iter()
        .enumerate()
        .filter(|&(i, &v)| i == 0 || s[i - 1] + 1 != v)
        .count()
}

/// Permutations of `1..=n` with exactly `k` alternating runs, by direct
/// filter over the symmetric group.
pub fn gen_alt_runs(n: usize, k: u64) -> Vec<Permutation> {
    gen_permutations(n)
        .filter(|pi| alternating_runs(pi) == k)
        .collect()
}

/// The descent sets whose exact-descent classes partition the k-run
/// family: for even k those with `mcs = k/2` containing exactly one of
/// `{1, n−1}`; for odd k those with `mcs = (k−1)/2` containing neither,
/// together with those with `mcs = (k+1)/2` containing both.
pub fn alt_runs_descent_sets(n: usize, k: u64) -> Vec<Vec<usize>> {
    let positions: Vec<usize> = (1..n).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << positions.len()) {
        let s: Vec<usize> = positions
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let segments = mcs(&s) as u64;
        let has_first = s.contains(&1);
        let has_last = n >= 2 && s.contains(&(n - 1));
        let selected = if k % 2 == 0 {
            2 * segments == k && (has_first != has_last)
        } else {
            (2 * segments == k - 1 && !has_first && !has_last)
                || (2 * segments == k + 1 && has_first && has_last)
        };
        if selected {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// The k-run family assembled as the union of exact-descent classes over
/// [`alt_runs_descent_sets`]; must coincide with [`gen_alt_runs`].
pub fn gen_alt_runs_by_descent_union(n: usize, k: u64) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = alt_runs_descent_sets(n, k)
        .iter()
        .flat_map(|s| gen_des_eq(n, s))
        .collect();
    out.sort();
    out
}

/// All compositions of `n`, lexicographic by part lists.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn rec(n: usize, acc: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition::new(acc.clone()).expect("nonempty"));
            return;
        }
        for first in 1..=n {
            acc.push(first as u32);
            rec(n - first, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All subsets of a sorted value list, each ascending, ordered by
/// inclusion mask.
pub fn subsets(values: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(1 << values.len());
    for mask in 0u64..(1u64 << values.len()) {
        out.push(
            values
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect(),
        );
    }
    out
}

/// A parseable descriptor naming one finite family, the unit the
/// distribution and identity engines quantify over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// All words of a content.
    Words { alpha: Composition },
    /// Words with prescribed weak right-to-left minima.
    WordsFixedRlwmin {
        alpha: Composition,
        r: LetterMultiset,
    },
    /// Words with prescribed strict right-to-left minima.
    WordsFixedRlmin { alpha: Composition, d: Vec<u32> },
    /// Permutations with descent set contained in S.
    DesSubseteq { n: usize, s: Vec<usize> },
    /// Permutations with descent set equal to S.
    DesEq { n: usize, s: Vec<usize> },
    /// Descent set contained in S, left-to-right maxima positions = P.
    DesSubseteqP {
        n: usize,
        s: Vec<usize>,
        p: Vec<usize>,
    },
    /// Descent set equal to S, left-to-right maxima positions = P.
    DesEqP {
        n: usize,
        s: Vec<usize>,
        p: Vec<usize>,
    },
    /// Word representations of set partitions of a shape.
    SetPartitionWord { alpha: Composition },
    /// Permutation representations of set partitions of a shape.
    SetPartitionPerm { alpha: Composition },
    /// 221-avoiding words of a content.
    Avoid221 { alpha: Composition },
    /// 212-avoiding words of a content.
    Avoid212 { alpha: Composition },
    /// Alternating permutations (descents at odd positions).
    Alternating { n: usize },
    /// Reverse alternating permutations (descents at even positions).
    ReverseAlternating { n: usize },
    /// Permutations with exactly k alternating runs.
    AltRuns { n: usize, k: u64 },
}

fn parse_list(value: &str) -> Result<Vec<u32>, Error> {
    if value.is_empty() {
        return Ok(Vec::new());
    }
    value
        .split(',')
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::InvalidFamilySpec(format!("bad integer `{t}`")))
        })
        .collect()
}

fn require<T>(opt: Option<T>, what: &str, kind: &str) -> Result<T, Error> {
    opt.ok_or_else(|| Error::InvalidFamilySpec(format!("`{kind}` needs `{what}`")))
}

fn sorted_distinct_in_range(list: &[u32], max: usize, what: &str) -> Result<Vec<usize>, Error> {
    let out: Vec<usize> = list.iter().map(|&v| v as usize).collect();
    let ok = out.windows(2).all(|w| w[0] < w[1]) && out.iter().all(|&v| 1 <= v && v <= max);
    if ok {
        Ok(out)
    } else {
        Err(Error::InvalidFamilySpec(format!(
            "`{what}` must be strictly increasing within 1..={max}"
        )))
    }
}

impl FamilySpec {
    /// Parses the mini-grammar `kind:key=value:…`, e.g. `words:alpha=3,1`,
    /// `desle:n=9:S=3,5`, `deseq:n=6:S=2,4:plrmax=1,2,6`, `runs:n=6:k=3`.
    pub fn parse(text: &str) -> Result<FamilySpec, Error> {
        let mut pieces = text.split(':');
        let kind = pieces.next().unwrap_or_default();
        let mut alpha: Option<Composition> = None;
        let mut n: Option<usize> = None;
        let mut k: Option<u64> = None;
        let mut s: Option<Vec<u32>> = None;
        let mut rlwmin: Option<Vec<u32>> = None;
        let mut rlmin: Option<Vec<u32>> = None;
        let mut plrmax: Option<Vec<u32>> = None;
        for piece in pieces {
            let (key, value) = piece
                .split_once('=')
                .ok_or_else(|| Error::InvalidFamilySpec(format!("expected key=value in `{piece}`")))?;
            match key {
                "alpha" => alpha = Some(Composition::new(parse_list(value)?)?),
                "n" => {
                    n = Some(value.parse().map_err(|_| {
                        Error::InvalidFamilySpec(format!("bad integer `{value}`"))
                    })?)
                }
                "k" => {
                    k = Some(value.parse().map_err(|_| {
                        Error::InvalidFamilySpec(format!("bad integer `{value}`"))
                    })?)
                }
                "S" => s = Some(parse_list(value)?),
                "rlwmin" => rlwmin = Some(parse_list(value)?),
                "rlmin" => rlmin = Some(parse_list(value)?),
                "plrmax" => plrmax = Some(parse_list(value)?),
                _ => {
                    return Err(Error::InvalidFamilySpec(format!("unknown key `{key}`")));
                }
            }
        }

        let spec = match kind {
            "words" => {
                let alpha = require(alpha, "alpha", kind)?;
                match (rlwmin, rlmin) {
                    (Some(r), None) => FamilySpec::WordsFixedRlwmin {
                        alpha,
                        r: LetterMultiset::from_values(r),
                    },
                    (None, Some(d)) => {
                        let mut d = d;
                        d.sort_unstable();
                        d.dedup();
                        FamilySpec::WordsFixedRlmin { alpha, d }
                    }
                    (None, None) => FamilySpec::Words { alpha },
                    (Some(_), Some(_)) => {
                        return Err(Error::InvalidFamilySpec(
                            "give at most one of `rlwmin` and `rlmin`".into(),
                        ));
                    }
                }
            }
            "desle" | "deseq" => {
                let n = require(n, "n", kind)?;
                if n == 0 {
                    return Err(Error::InvalidFamilySpec("`n` must be at least 1".into()));
                }
                let s = sorted_distinct_in_range(&s.unwrap_or_default(), n.saturating_sub(1), "S")?;
                let exact = kind == "deseq";
                match plrmax {
                    Some(p) => {
                        let p = sorted_distinct_in_range(&p, n, "plrmax")?;
                        if exact {
                            FamilySpec::DesEqP { n, s, p }
                        } else {
                            FamilySpec::DesSubseteqP { n, s, p }
                        }
                    }
                    None => {
                        if exact {
                            FamilySpec::DesEq { n, s }
                        } else {
                            FamilySpec::DesSubseteq { n, s }
                        }
                    }
                }
            }
            "sp-word" => FamilySpec::SetPartitionWord {
                alpha: require(alpha, "alpha", kind)?,
            },
            "sp-perm" => FamilySpec::SetPartitionPerm {
                alpha: require(alpha, "alpha", kind)?,
            },
            "avoid221" => FamilySpec::Avoid221 {
                alpha: require(alpha, "alpha", kind)?,
            },
            "avoid212" => FamilySpec::Avoid212 {
                alpha: require(alpha, "alpha", kind)?,
            },
            "alt" => FamilySpec::Alternating {
                n: require(n, "n", kind)?,
            },
            "ralt" => FamilySpec::ReverseAlternating {
                n: require(n, "n", kind)?,
            },
            "runs" => FamilySpec::AltRuns {
                n: require(n, "n", kind)?,
                k: require(k, "k", kind)?,
            },
            other => {
                return Err(Error::InvalidFamilySpec(format!(
                    "unknown family kind `{other}`"
                )));
            }
        };
        Ok(spec)
    }

    /// Materializes the family as words (permutations are words too),
    /// sorted and duplicate-free.
    pub fn members(&self) -> Vec<Word> {
        let mut out: Vec<Word> = match self {
            FamilySpec::Words { alpha } => gen_words(alpha).collect(),
            FamilySpec::WordsFixedRlwmin { alpha, r } => {
                gen_words_fixed_rlwmin(alpha, r).collect()
            }
            FamilySpec::WordsFixedRlmin { alpha, d } => gen_words_fixed_rlmin(alpha, d).collect(),
            FamilySpec::DesSubseteq { n, s } => {
                gen_des_subseteq(*n, s).into_iter().map(Word::from).collect()
            }
            FamilySpec::DesEq { n, s } => gen_des_eq(*n, s).into_iter().map(Word::from).collect(),
            FamilySpec::DesSubseteqP { n, s, p } => gen_des_p(*n, s, p, false)
                .into_iter()
                .map(Word::from)
                .collect(),
            FamilySpec::DesEqP { n, s, p } => gen_des_p(*n, s, p, true)
                .into_iter()
                .map(Word::from)
                .collect(),
            FamilySpec::SetPartitionWord { alpha } => gen_set_partitions(alpha)
                .iter()
                .map(|sp| sp.word_rep())
                .collect(),
            FamilySpec::SetPartitionPerm { alpha } => gen_set_partitions(alpha)
                .iter()
                .map(|sp| sp.perm_rep().into_word())
                .collect(),
            FamilySpec::Avoid221 { alpha } => gen_avoiders(alpha, Pattern::Pat221).collect(),
            FamilySpec::Avoid212 { alpha } => gen_avoiders(alpha, Pattern::Pat212).collect(),
            FamilySpec::Alternating { n } => gen_alternating(*n, false)
                .into_iter()
                .map(Word::from)
                .collect(),
            FamilySpec::ReverseAlternating { n } => gen_alternating(*n, true)
                .into_iter()
                .map(Word::from)
                .collect(),
            FamilySpec::AltRuns { n, k } => gen_alt_runs(*n, *k)
                .into_iter()
                .map(Word::from)
                .collect(),
        };
        out.sort();
        out
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|v| v.to_string()).join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Words { alpha } => write!(f, "words:alpha={}", join(alpha.parts())),
            FamilySpec::WordsFixedRlwmin { alpha, r } => write!(
                f,
                "words:alpha={}:rlwmin={}",
                join(alpha.parts()),
                join(&r.values())
            ),
            FamilySpec::WordsFixedRlmin { alpha, d } => {
                write!(f, "words:alpha={}:rlmin={}", join(alpha.parts()), join(d))
            }
            FamilySpec::DesSubseteq { n, s } => write!(f, "desle:n={n}:S={}", join(s)),
            FamilySpec::DesEq { n, s } => write!(f, "deseq:n={n}:S={}", join(s)),
            FamilySpec::DesSubseteqP { n, s, p } => {
                write!(f, "desle:n={n}:S={}:plrmax={}", join(s), join(p))
            }
            FamilySpec::DesEqP { n, s, p } => {
                write!(f, "deseq:n={n}:S={}:plrmax={}", join(s), join(p))
            }
            FamilySpec::SetPartitionWord { alpha } => {
                write!(f, "sp-word:alpha={}", join(alpha.parts()))
            }
            FamilySpec::SetPartitionPerm { alpha } => {
                write!(f, "sp-perm:alpha={}", join(alpha.parts()))
            }
            FamilySpec::Avoid221 { alpha } => write!(f, "avoid221:alpha={}", join(alpha.parts())),
            FamilySpec::Avoid212 { alpha } => write!(f, "avoid212:alpha={}", join(alpha.parts())),
            FamilySpec::Alternating { n } => write!(f, "alt:n={n}"),
            FamilySpec::ReverseAlternating { n } => write!(f, "ralt:n={n}"),
            FamilySpec::AltRuns { n, k } => write!(f, "runs:n={n}:k={k}"),
        }
    }
}
