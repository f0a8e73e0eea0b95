//! Every word and permutation statistic used by the identity suite.
//!
//! All functions are pure and operate on [`Word`] (permutations pass
//! through [`Permutation`]'s deref). Provided here:
//!
//! - [`descents`]: descent set, descent count, major index
//!   (`maj = sum of descent positions`);
//! - [`inv`]: inversion count;
//! - [`excedances`]: r-excedances against the nondecreasing rearrangement
//!   (`w_i >= a_i + r`);
//! - [`inv_r`]: the r-parameterized inversion/major interpolation
//!   `|{(i,j): i < j < i+r, w_i > w_j}| + sum of i with w_i > w_{i+r}`;
//! - [`rmaj`]: the r-major index `|rInv| + sum of r-descents`, where an
//!   r-descent needs `w_i >= w_{i+1} + r` and
//!   `rInv = {(i,j): i < j, w_i > w_j > w_i - r}`;
//! - [`den_stats`]: the r-gap Denert statistic
//!   `sum_{i in rExc} (i + B_i^r) + imv(rEXCL) + inv(rNEXCL)` with
//!   `B_i^r = |{j : w_i - r < a_j < w_i}|`;
//! - [`mak_mad`]: descent-block statistics `mak = Dbot + Res` and
//!   `mad = Ddif + Res` built from letter heights, letter values, and
//!   embracing numbers;
//! - [`stat`]: the vincular-pattern statistic, evaluated on the
//!   standardization (see the module test that pins down both of its
//!   defining properties);
//! - [`minima_maxima`]: right-to-left minima (strict set and weak
//!   multiset), left-to-right maxima (letters and positions), and the
//!   left-to-right minimum count;
//! - [`inverse_stat`]: `ist(pi) = st(pi^{-1})`;
//! - [`alternating_runs`]: the number of maximal monotone segments;
//! - [`StatName`]: a parseable statistic name with an evaluator, the
//!   currency of the distribution and identity engines.

use std::fmt;

use crate::error::Error;
use crate::word::{LetterMultiset, Permutation, Word};

/// Descent data of a word: the descent set (1-based positions), its
/// cardinality, and the major index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStats {
    /// Positions `i` with `w_i > w_{i+1}`, ascending.
    pub positions: Vec<usize>,
    /// `des(w)`, the number of descents.
    pub count: u64,
    /// `maj(w)`, the sum of the descent positions.
    pub maj: u64,
}

/// The descent set, descent count, and major index of `w`.
pub fn descents(w: &Word) -> DescentStats {
    let a = w.letters();
    let positions: Vec<usize> = (1..a.len()).filter(|&i| a[i - 1] > a[i]).collect();
    let maj = positions.iter().map(|&i| i as u64).sum();
    DescentStats {
        count: positions.len() as u64,
        maj,
        positions,
    }
}

fn inv_slice(a: &[u32]) -> u64 {
    let mut count = 0u64;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] > a[j] {
                count += 1;
            }
        }
    }
    count
}

fn imv_slice(a: &[u32]) -> u64 {
    let mut count = 0u64;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] >= a[j] {
                count += 1;
            }
        }
    }
    count
}

/// The inversion number: pairs `i < j` with `w_i > w_j`.
pub fn inv(w: &Word) -> u64 {
    inv_slice(w.letters())
}

/// Excedance data of a word for gap `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcedanceStats {
    /// Positions `i` with `w_i >= a_i + r`, where `a` is the nondecreasing
    /// rearrangement of `w`.
    pub positions: Vec<usize>,
    /// `rexc(w)`, the number of r-excedances.
    pub count: u64,
}

/// The r-excedance set of `w`: positions where the letter beats the
/// sorted rearrangement by at least `r`. `r = 1` gives classical
/// excedances.
pub fn excedances(w: &Word, r: u32) -> ExcedanceStats {
    let sorted = w.sorted_letters();
    let positions: Vec<usize> = w
        .letters()
        .iter()
        .enumerate()
        .filter(|&(i, &wi)| wi >= sorted[i] + r)
        .map(|(i, _)| i + 1)
        .collect();
    ExcedanceStats {
        count: positions.len() as u64,
        positions,
    }
}

/// The statistic `inv_r`: inversion pairs closer than `r` apart plus the
/// sum of positions `i` whose letter beats the letter `r` places later.
/// `inv_1 = maj`, and `inv_r = inv` once `r >= n - 1`.
pub fn inv_r(w: &Word, r: u32) -> u64 {
    let a = w.letters();
    let n = a.len();
    let r = r as usize;
    let mut total = 0u64;
    for i in 0..n {
        for j in (i + 1)..n.min(i + r) {
            if a[i] > a[j] {
                total += 1;
            }
        }
        if i + r < n && a[i] > a[i + r] {
            total += (i + 1) as u64;
        }
    }
    total
}

/// r-descent data and the r-major index of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RmajStats {
    /// Positions `i` with `w_i >= w_{i+1} + r`, ascending.
    pub positions: Vec<usize>,
    /// `rdes(w)`, the number of r-descents.
    pub count: u64,
    /// `rmaj(w) = |rInv| + sum of the r-descent positions`.
    pub rmaj: u64,
}

/// The r-major index. `r = 1` recovers `maj`; `r >= m` (the largest
/// letter) recovers `inv`.
pub fn rmaj(w: &Word, r: u32) -> RmajStats {
    let a = w.letters();
    let n = a.len();
    let positions: Vec<usize> = (1..n).filter(|&i| a[i - 1] >= a[i] + r).collect();
    let mut rinv = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if a[i] > a[j] && a[j] + r > a[i] {
                rinv += 1;
            }
        }
    }
    let des_sum: u64 = positions.iter().map(|&i| i as u64).sum();
    RmajStats {
        count: positions.len() as u64,
        rmaj: rinv + des_sum,
        positions,
    }
}

/// The r-gap Denert statistic broken into its three summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenStats {
    /// `rden(w)`, the full statistic.
    pub rden: u64,
    /// The excedance part: the sum of `i + B_i^r` over r-excedances `i`.
    pub excedance_part: u64,
    /// The weak inversion count of the excedance-letter subsequence.
    pub imv_part: u64,
    /// The inversion count of the non-excedance-letter subsequence.
    pub inv_part: u64,
}

/// The r-gap Denert statistic. For `r = 1` the `B` term vanishes (no
/// letter lies strictly between `w_i - 1` and `w_i`), recovering the
/// classical word statistic `den`.
pub fn den_stats(w: &Word, r: u32) -> DenStats {
    let a = w.letters();
    let sorted = w.sorted_letters();
    let mut excl = Vec::new();
    let mut nexcl = Vec::new();
    let mut excedance_part = 0u64;
    for (i, &wi) in a.iter().enumerate() {
        if wi >= sorted[i] + r {
            let b = sorted
                .iter()
                .filter(|&&aj| aj + r > wi && aj < wi)
                .count() as u64;
            excedance_part += (i + 1) as u64 + b;
            excl.push(wi);
        } else {
            nexcl.push(wi);
        }
    }
    let imv_part = imv_slice(&excl);
    let inv_part = inv_slice(&nexcl);
    DenStats {
        rden: excedance_part + imv_part + inv_part,
        excedance_part,
        imv_part,
        inv_part,
    }
}

/// Denert's statistic `den(w) = rden(w)` at `r = 1`.
pub fn den(w: &Word) -> u64 {
    den_stats(w, 1).rden
}

/// The descent-block statistics `mak` and `mad` with their parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MakMad {
    /// `mak(w) = Dbot + Res`.
    pub mak: u64,
    /// `mad(w) = Ddif + Res`.
    pub mad: u64,
    /// Sum of the values of the descent bottoms.
    pub dbot: u64,
    /// Sum of the heights of the descent tops.
    pub dtop: u64,
    /// `Dtop - Dbot`.
    pub ddif: u64,
    /// The embracing sum `e_1 + ... + e_n`.
    pub res: u64,
}

/// Computes `mak` and `mad`.
///
/// The height of a letter is one more than the number of strictly smaller
/// letters of `w`; the value of the i-th letter is its height plus the
/// number of equal letters to its left (so the value sequence is exactly
/// `std(w)`). Descent blocks are the maximal strictly decreasing runs; a
/// proper block (length at least 2) embraces a letter `a` when
/// `closer >= a > opener`, and `e_i` counts the proper blocks strictly to
/// the right of position `i` embracing `w_i`.
pub fn mak_mad(w: &Word) -> MakMad {
    let a = w.letters();
    let n = a.len();

    // heights: h(letter) = 1 + #smaller letters of w
    let max_letter = w.max_letter() as usize;
    let mut letter_count = vec![0u64; max_letter + 1];
    for &x in a {
        letter_count[x as usize] += 1;
    }
    let mut height = vec![0u64; max_letter + 1];
    let mut smaller = 0u64;
    for v in 1..=max_letter {
        height[v] = smaller + 1;
        smaller += letter_count[v];
    }

    // values: v_i = h(w_i) + (equal letters strictly left of i)
    let mut seen = vec![0u64; max_letter + 1];
    let mut value = vec![0u64; n];
    for (i, &x) in a.iter().enumerate() {
        value[i] = height[x as usize] + seen[x as usize];
        seen[x as usize] += 1;
    }
    debug_assert_eq!(
        value,
        w.std()
            .as_word()
            .letters()
            .iter()
            .map(|&v| v as u64)
            .collect::<Vec<_>>(),
        "letter values must spell out std(w)"
    );

    // descent blocks: maximal strictly decreasing runs, as (start, end)
    // position ranges (0-based, inclusive)
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0usize;
    for i in 1..=n {
        if i == n || a[i - 1] <= a[i] {
            blocks.push((start, i - 1));
            start = i;
        }
    }
    let proper: Vec<(usize, u32, u32)> = blocks
        .iter()
        .filter(|&&(s, e)| e > s)
        .map(|&(s, e)| (s, a[s], a[e])) // (start, closer, opener)
        .collect();

    let mut res = 0u64;
    for (i, &x) in a.iter().enumerate() {
        res += proper
            .iter()
            .filter(|&&(s, closer, opener)| s > i && closer >= x && opener < x)
            .count() as u64;
    }

    let mut dbot = 0u64;
    let mut dtop = 0u64;
    for i in 1..n {
        if a[i - 1] > a[i] {
            dtop += height[a[i - 1] as usize];
            dbot += value[i];
        }
    }
    let ddif = dtop - dbot;
    MakMad {
        mak: dbot + res,
        mad: ddif + res,
        dbot,
        dtop,
        ddif,
        res,
    }
}

/// The vincular-pattern Mahonian statistic, computed on `std(w)` (it is a
/// standard statistic, so this also defines it on words): the number of
/// occurrences of the dashed patterns (13-2), (21-3), (32-1), where the
/// first two pattern letters must sit in adjacent positions, plus the
/// number of descents.
pub fn stat(w: &Word) -> u64 {
    let tau = w.std();
    let t = tau.as_word().letters();
    let n = t.len();
    let mut total = 0u64;
    for i in 0..n.saturating_sub(1) {
        if t[i] > t[i + 1] {
            total += 1; // the (21) descent pattern
        }
        for j in i + 2..n {
            let (a, b, c) = (t[i], t[i + 1], t[j]);
            let hit = if a < b {
                a < c && c < b // (13-2)
            } else {
                c > a || c < b // (21-3) or (32-1)
            };
            if hit {
                total += 1;
            }
        }
    }
    total
}

/// Minima/maxima extractors of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimaMaxima {
    /// Letters that are strict right-to-left minima, ascending.
    pub rlmin: Vec<u32>,
    /// The multiset of weak right-to-left minima.
    pub rlwmin: LetterMultiset,
    /// Letters that are left-to-right maxima, ascending.
    pub lrmax: Vec<u32>,
    /// Positions of the left-to-right maxima, ascending.
    pub plrmax: Vec<usize>,
    /// Number of left-to-right minima.
    pub lrmin_count: u64,
}

/// All five minima/maxima extractors in one pass.
///
/// A letter is a weak (strict) right-to-left minimum when nothing to its
/// right is smaller (or equal); a letter is a left-to-right maximum when
/// everything to its left is smaller, and a left-to-right minimum when
/// everything to its left is larger. `supp(Rlwmin(w)) = Rlmin(w)` always.
pub fn minima_maxima(w: &Word) -> MinimaMaxima {
    let a = w.letters();
    let n = a.len();

    let mut weak = Vec::new();
    let mut strict = Vec::new();
    let mut suffix_min = u32::MAX;
    for i in (0..n).rev() {
        if a[i] < suffix_min {
            strict.push(a[i]);
        }
        if a[i] <= suffix_min {
            weak.push(a[i]);
            suffix_min = a[i];
        }
    }
    strict.reverse();

    let mut lrmax = Vec::new();
    let mut plrmax = Vec::new();
    let mut lrmin_count = 0u64;
    let mut prefix_max = 0u32;
    let mut prefix_min = u32::MAX;
    for (i, &x) in a.iter().enumerate() {
        if x > prefix_max {
            lrmax.push(x);
            plrmax.push(i + 1);
            prefix_max = x;
        }
        if x < prefix_min {
            lrmin_count += 1;
            prefix_min = x;
        }
    }

    MinimaMaxima {
        rlmin: strict,
        rlwmin: LetterMultiset::from_values(weak),
        lrmax,
        plrmax,
        lrmin_count,
    }
}

/// The multiset of weak right-to-left minima (shortcut used by the
/// bijection preservation contracts).
pub fn rlwmin(w: &Word) -> LetterMultiset {
    minima_maxima(w).rlwmin
}

/// Positions of the left-to-right maxima (shortcut).
pub fn plrmax(w: &Word) -> Vec<usize> {
    minima_maxima(w).plrmax
}

/// The number of alternating runs: one more than the number of interior
/// positions where the permutation changes direction. A single letter
/// counts as one run, so the run classes partition every symmetric group.
pub fn alternating_runs(pi: &Permutation) -> u64 {
    let a = pi.as_word().letters();
    let n = a.len();
    let mut changes = 0u64;
    for i in 1..n.saturating_sub(1) {
        let up_before = a[i - 1] < a[i];
        let up_after = a[i] < a[i + 1];
        if up_before != up_after {
            changes += 1;
        }
    }
    changes + 1
}

/// A parseable statistic name, the currency of the distribution engine.
///
/// Single-value statistics only; extractor sets are returned by the
/// dedicated functions above. The `Inverse` wrapper evaluates the inner
/// statistic on the group inverse and therefore only accepts permutations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StatName {
    Des,
    Exc(u32),
    Inv,
    Maj,
    InvR(u32),
    RDes(u32),
    RMaj(u32),
    RDen(u32),
    Den,
    Mak,
    Mad,
    Stat,
    Rlmin,
    Rlwmin,
    Lrmax,
    Lrmin,
    AltRuns,
    Inverse(Box<StatName>),
}

impl StatName {
    /// Wraps a statistic in the inverse operator.
    pub fn inverse_of(st: StatName) -> StatName {
        StatName::Inverse(Box::new(st))
    }

    /// Parses a CLI statistic token. r-parameterized names (`inv_r`,
    /// `rdes`, `rmaj`, `rexc`, `rden` and their `i`-prefixed forms) take
    /// their parameter from `r`; everything else ignores it.
    pub fn parse(token: &str, r: u32) -> Result<StatName, Error> {
        if r == 0 {
            return Err(Error::UnknownStat(format!("{token} with r=0")));
        }
        if let Some(rest) = token.strip_prefix('i') {
            // avoid swallowing "inv"/"inv_r" which start with 'i'
            if !matches!(rest, "nv" | "nv_r") {
                if let Ok(inner) = StatName::parse(rest, r) {
                    return Ok(StatName::inverse_of(inner));
                }
            }
        }
        Ok(match token {
            "des" => StatName::Des,
            "exc" => StatName::Exc(1),
            "inv" => StatName::Inv,
            "maj" => StatName::Maj,
            "inv_r" => StatName::InvR(r),
            "rdes" => StatName::RDes(r),
            "rmaj" => StatName::RMaj(r),
            "rexc" => StatName::Exc(r),
            "rden" => StatName::RDen(r),
            "den" => StatName::Den,
            "mak" => StatName::Mak,
            "mad" => StatName::Mad,
            "stat" => StatName::Stat,
            "rlmin" => StatName::Rlmin,
            "rlwmin" => StatName::Rlwmin,
            "lrmax" => StatName::Lrmax,
            "lrmin" => StatName::Lrmin,
            "runs" => StatName::AltRuns,
            _ => return Err(Error::UnknownStat(token.to_string())),
        })
    }

    /// Evaluates the statistic on a word. Inverse statistics and
    /// alternating runs require the word to be a permutation.
    pub fn eval(&self, w: &Word) -> Result<u64, Error> {
        Ok(match self {
            StatName::Des => descents(w).count,
            StatName::Exc(r) => excedances(w, *r).count,
            StatName::Inv => inv(w),
            StatName::Maj => descents(w).maj,
            StatName::InvR(r) => inv_r(w, *r),
            StatName::RDes(r) => rmaj(w, *r).count,
            StatName::RMaj(r) => rmaj(w, *r).rmaj,
            StatName::RDen(r) => den_stats(w, *r).rden,
            StatName::Den => den(w),
            StatName::Mak => mak_mad(w).mak,
            StatName::Mad => mak_mad(w).mad,
            StatName::Stat => stat(w),
            StatName::Rlmin => minima_maxima(w).rlmin.len() as u64,
            StatName::Rlwmin => minima_maxima(w).rlwmin.len() as u64,
            StatName::Lrmax => minima_maxima(w).plrmax.len() as u64,
            StatName::Lrmin => minima_maxima(w).lrmin_count,
            StatName::AltRuns => {
                let pi = Permutation::from_word(w.clone())?;
                alternating_runs(&pi)
            }
            StatName::Inverse(inner) => {
                let pi = Permutation::from_word(w.clone())?;
                inner.eval(pi.inverse().as_word())?
            }
        })
    }
}

impl fmt::Display for StatName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatName::Des => write!(f, "des"),
            StatName::Exc(1) => write!(f, "exc"),
            StatName::Exc(r) => write!(f, "{r}exc"),
            StatName::Inv => write!(f, "inv"),
            StatName::Maj => write!(f, "maj"),
            StatName::InvR(r) => write!(f, "inv_{r}"),
            StatName::RDes(r) => write!(f, "{r}des"),
            StatName::RMaj(r) => write!(f, "{r}maj"),
            StatName::RDen(r) => write!(f, "{r}den"),
            StatName::Den => write!(f, "den"),
            StatName::Mak => write!(f, "mak"),
            StatName::Mad => write!(f, "mad"),
            StatName::Stat => write!(f, "stat"),
            StatName::Rlmin => write!(f, "rlmin"),
            StatName::Rlwmin => write!(f, "rlwmin"),
            StatName::Lrmax => write!(f, "lrmax"),
            StatName::Lrmin => write!(f, "lrmin"),
            StatName::AltRuns => write!(f, "runs"),
            StatName::Inverse(inner) => write!(f, "i{inner}"),
        }
    }
}

/// `ist(pi) = st(pi^{-1})`: evaluates a word statistic on the inverse.
pub fn inverse_stat(st: &StatName, pi: &Permutation) -> Result<u64, Error> {
    st.eval(pi.inverse().as_word())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q_multinomial, MultiPoly};
    use crate::word::Composition;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::new(s.bytes().map(|b| (b - b'0') as u32).collect()).expect("test literal")
    }

    fn p(s: &str) -> Permutation {
        Permutation::from_word(w(s)).expect("test literal is a permutation")
    }

    /// All words with the given content, by direct recursive placement.
    fn all_words_of(parts: &[u32]) -> Vec<Word> {
        fn rec(remaining: &mut Vec<u32>, acc: &mut Vec<u32>, n: usize, out: &mut Vec<Word>) {
            if acc.len() == n {
                out.push(Word::new(acc.clone()).expect("nonempty"));
                return;
            }
            for v in 0..remaining.len() {
                if remaining[v] > 0 {
                    remaining[v] -= 1;
                    acc.push(v as u32 + 1);
                    rec(remaining, acc, n, out);
                    acc.pop();
                    remaining[v] += 1;
                }
            }
        }
        let n: usize = parts.iter().map(|&x| x as usize).sum();
        let mut out = Vec::new();
        rec(&mut parts.to_vec(), &mut Vec::new(), n, &mut out);
        out
    }

    /// All compositions of n, in lexicographic order.
    fn compositions(n: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in compositions(n - first) {
                let mut c = vec![first];
                c.append(&mut rest);
                out.push(c);
            }
        }
        out
    }

    fn q_dist<F: Fn(&Word) -> u64>(words: &[Word], f: F) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for word in words {
            acc.add_term((0, f(word) as u32, 0), &BigInt::from(1));
        }
        acc
    }

    #[test]
    fn descent_examples() {
        let d = descents(&w("1121"));
        assert_eq!((d.positions.as_slice(), d.count, d.maj), (&[3][..], 1, 3));
        let sorted = descents(&w("112233"));
        assert_eq!((sorted.positions.len(), sorted.maj), (0, 0));
        let d2 = descents(&w("212113333"));
        assert_eq!((d2.positions.as_slice(), d2.maj), (&[1, 3][..], 4));
    }

    #[test]
    fn inv_examples() {
        assert_eq!(inv(&w("2111")), 3);
        assert_eq!(inv(&w("123345")), 0);
        let dist = q_dist(&all_words_of(&[3, 1]), inv);
        let alpha = Composition::new(vec![3, 1]).unwrap();
        assert_eq!(dist, q_multinomial(4, &alpha).unwrap());
    }

    #[test]
    fn excedance_examples() {
        assert_eq!(excedances(&w("2111"), 1).positions, vec![1]);
        assert_eq!(excedances(&w("1123"), 1).positions, Vec::<usize>::new());
        assert_eq!(excedances(&w("1121"), 1).positions, vec![3]);
        assert_eq!(excedances(&w("331"), 2).positions, vec![1]);
    }

    #[test]
    fn inv_r_boundary_identities() {
        for word in all_words_of(&[2, 2]) {
            assert_eq!(inv_r(&word, 1), descents(&word).maj, "word {word}");
        }
        for s in ["2111", "32123", "51234", "212113333"] {
            let word = w(s);
            let n = word.len() as u32;
            for r in (n - 1)..=(n + 2) {
                assert_eq!(inv_r(&word, r), inv(&word), "word {s} r {r}");
            }
        }
        assert_eq!(inv_r(&w("2111"), 2), 2);
    }

    #[test]
    fn rmaj_examples() {
        for word in all_words_of(&[2, 1, 1]) {
            assert_eq!(rmaj(&word, 1).rmaj, descents(&word).maj, "word {word}");
        }
        for s in ["2111", "1332", "32123"] {
            let word = w(s);
            let m = word.max_letter();
            for r in m..=(m + 2) {
                assert_eq!(rmaj(&word, r).rmaj, inv(&word), "word {s} r {r}");
            }
        }
        let s = rmaj(&w("313"), 2);
        assert_eq!((s.positions.as_slice(), s.rmaj), (&[1][..], 1));
    }

    #[test]
    fn den_examples() {
        assert_eq!(den(&w("2111")), 1);
        assert_eq!(den(&w("112233")), 0);
        let values: Vec<u64> = ["1112", "1121", "1211", "2111"]
            .iter()
            .map(|s| den(&w(s)))
            .collect();
        assert_eq!(values, vec![0, 3, 2, 1]);
    }

    #[test]
    fn rden_reduces_to_den_at_r_one_and_to_inv_for_large_r() {
        for parts in [vec![2, 2], vec![1, 2, 1], vec![3, 1]] {
            for word in all_words_of(&parts) {
                assert_eq!(den_stats(&word, 1).rden, den(&word));
                let m = word.max_letter();
                // with no r-excedances left, only the inversion part remains
                assert_eq!(den_stats(&word, m).rden, inv(&word), "word {word}");
            }
        }
    }

    #[test]
    fn rden_b_term_counts_between_letters() {
        // w = 331: sorted is 133; position 1 is a 2-excedance (3 >= 1+2)
        let s = den_stats(&w("331"), 2);
        assert_eq!(s.excedance_part, 1); // B contributes nothing: no a_j in (1,3)
        assert_eq!(s.rden, 2);
        // w = 241: sorted is 124; position 2 holds a 2-excedance (4 >= 2+2)
        // and B_2^2 = |{a_j : 2 < a_j < 4}| = 0
        let t = den_stats(&w("241"), 2);
        assert_eq!(t.excedance_part, 2);
    }

    #[test]
    fn mak_mad_height_value_example() {
        // heights of 1,2,3,4 in 21144231 are 1,4,6,7; the value sequence
        // spells std(w)
        let word = w("21144231");
        let parts = mak_mad(&word);
        let expected_values: Vec<u32> = vec![4, 1, 2, 7, 8, 5, 6, 3];
        assert_eq!(
            word.std().as_word().letters(),
            expected_values.as_slice(),
            "value sequence is std(w)"
        );
        // spot-check the block statistics on this word too
        assert_eq!(parts.mak, parts.dbot + parts.res);
        assert_eq!(parts.mad, parts.ddif + parts.res);
    }

    #[test]
    fn mak_examples() {
        let v: Vec<u64> = ["1112", "1121", "1211", "2111"]
            .iter()
            .map(|s| mak_mad(&w(s)).mak)
            .collect();
        assert_eq!(v, vec![0, 3, 2, 1]);
        assert_eq!(mak_mad(&w("112233")).mak, 0);
        let parts = mak_mad(&w("1121"));
        assert_eq!((parts.dbot, parts.res), (3, 0));
    }

    #[test]
    fn mad_embracing_example() {
        // 221 has one proper block [2,1]; it embraces the leading 2
        let parts = mak_mad(&w("221"));
        assert_eq!((parts.dbot, parts.dtop, parts.res), (1, 2, 1));
        assert_eq!((parts.mak, parts.mad), (2, 2));
    }

    #[test]
    fn stat_examples() {
        assert_eq!(stat(&w("1")), 0);
        let values: Vec<u64> = ["1112", "1121", "1211", "2111"]
            .iter()
            .map(|s| stat(&w(s)))
            .collect();
        assert_eq!(values, vec![0, 2, 3, 1]);
        let s3: Vec<u64> = ["123", "132", "213", "231", "312", "321"]
            .iter()
            .map(|s| stat(&w(s)))
            .collect();
        assert_eq!(s3, vec![0, 2, 2, 1, 1, 3]);
    }

    #[test]
    fn stat_is_standard_and_mahonian_exhaustively() {
        // the two properties that pin down the statistic; checked for
        // every content with n <= 6 so a formula regression fails loudly
        for n in 1..=6u32 {
            for parts in compositions(n) {
                let words = all_words_of(&parts);
                let alpha = Composition::new(parts.clone()).unwrap();
                let expected = q_multinomial(n as usize, &alpha).unwrap();
                let mut dist = MultiPoly::zero();
                for word in &words {
                    let s = stat(word);
                    assert_eq!(
                        stat(word.std().as_word()),
                        s,
                        "stat must be standard; failed at {word}"
                    );
                    dist.add_term((0, s as u32, 0), &BigInt::from(1));
                }
                assert_eq!(dist, expected, "stat must be Mahonian on content {alpha}");
            }
        }
    }

    #[test]
    fn minima_maxima_worked_example() {
        let sigma = Word::new(vec![3, 2, 1, 2, 3, 1, 5, 3, 5, 4, 6, 4, 6, 5, 4, 7, 5, 7, 7])
            .unwrap();
        let mm = minima_maxima(&sigma);
        assert_eq!(mm.rlmin, vec![1, 3, 4, 5, 7]);
        assert_eq!(
            mm.rlwmin,
            LetterMultiset::from_values([1, 1, 3, 4, 4, 4, 5, 7, 7])
        );
        assert_eq!(mm.rlwmin.supp(), mm.rlmin);
    }

    #[test]
    fn minima_maxima_small_cases() {
        let mm = minima_maxima(&w("1221"));
        assert_eq!(mm.plrmax, vec![1, 2]);
        assert_eq!(mm.lrmax, vec![1, 2]);
        assert_eq!(mm.lrmin_count, 1);
        let inc = minima_maxima(&w("1234"));
        assert_eq!(inc.plrmax, vec![1, 2, 3, 4]);
        assert_eq!(inc.rlwmin, LetterMultiset::from_values([1, 2, 3, 4]));
        assert_eq!(minima_maxima(&w("12133")).rlwmin.len(), 4);
    }

    #[test]
    fn plrmax_equals_rlmin_of_inverse() {
        // positions of left-to-right maxima match the strict right-to-left
        // minima of the inverse, exhaustively for n <= 6
        for n in 1..=6usize {
            for pi in all_words_of(&vec![1; n]) {
                let pi = Permutation::from_word(pi).unwrap();
                let lhs: Vec<u32> = minima_maxima(pi.as_word())
                    .plrmax
                    .iter()
                    .map(|&i| i as u32)
                    .collect();
                let rhs = minima_maxima(pi.inverse().as_word()).rlmin;
                assert_eq!(lhs, rhs, "pi {pi}");
            }
        }
    }

    #[test]
    fn inverse_stat_examples() {
        for pi in all_words_of(&[1, 1, 1, 1]) {
            let pi = Permutation::from_word(pi).unwrap();
            assert_eq!(
                inverse_stat(&StatName::Inv, &pi).unwrap(),
                inv(pi.as_word()),
                "inv is invariant under inversion; pi {pi}"
            );
        }
        assert_eq!(
            inverse_stat(&StatName::Maj, &Permutation::identity(5).unwrap()).unwrap(),
            0
        );
        assert_eq!(inverse_stat(&StatName::Maj, &p("231")).unwrap(), 1);
    }

    #[test]
    fn alternating_runs_examples() {
        assert_eq!(alternating_runs(&p("123")), 1);
        assert_eq!(alternating_runs(&p("132")), 2);
        assert_eq!(alternating_runs(&p("54321")), 1);
        assert_eq!(alternating_runs(&p("1")), 1);
        assert_eq!(alternating_runs(&p("3142")), 3);
    }

    #[test]
    fn standardness_of_the_five_standard_statistics() {
        for n in 1..=5u32 {
            for parts in compositions(n) {
                for word in all_words_of(&parts) {
                    let tau = word.std();
                    let tau = tau.as_word();
                    assert_eq!(inv(tau), inv(&word), "inv at {word}");
                    assert_eq!(descents(tau).maj, descents(&word).maj, "maj at {word}");
                    assert_eq!(mak_mad(tau).mak, mak_mad(&word).mak, "mak at {word}");
                    assert_eq!(stat(tau), stat(&word), "stat at {word}");
                    for r in 1..=3 {
                        assert_eq!(inv_r(tau, r), inv_r(&word, r), "inv_{r} at {word}");
                    }
                }
            }
        }
    }

    #[test]
    fn non_standardness_witnesses_exist() {
        // den, mad, rmaj (r >= 2), rden (r >= 2) all change under std
        // somewhere with n <= 5
        let differs = |f: &dyn Fn(&Word) -> u64| -> Option<Word> {
            for n in 1..=5u32 {
                for parts in compositions(n) {
                    for word in all_words_of(&parts) {
                        if f(&word) != f(word.std().as_word()) {
                            return Some(word);
                        }
                    }
                }
            }
            None
        };
        let witness_den = differs(&|word| den(word));
        assert!(witness_den.is_some(), "den must not be standard");
        assert!(differs(&|word| mak_mad(word).mad).is_some(), "mad");
        assert!(differs(&|word| rmaj(word, 2).rmaj).is_some(), "2maj");
        assert!(differs(&|word| den_stats(word, 2).rden).is_some(), "2den");
        // the smallest den witness found by the scan above is frozen here
        assert_eq!(den(&w("221")), 2);
        assert_eq!(den(&w("231")), 3);
    }

    #[test]
    fn all_nine_mahonian_statistics_on_one_content() {
        // each statistic's distribution over content (2,2) is the
        // q-binomial [4,2]_q
        let words = all_words_of(&[2, 2]);
        let alpha = Composition::new(vec![2, 2]).unwrap();
        let expected = q_multinomial(4, &alpha).unwrap();
        let stats: Vec<(&str, Box<dyn Fn(&Word) -> u64>)> = vec![
            ("inv", Box::new(|x: &Word| inv(x))),
            ("maj", Box::new(|x: &Word| descents(x).maj)),
            ("den", Box::new(|x: &Word| den(x))),
            ("mak", Box::new(|x: &Word| mak_mad(x).mak)),
            ("mad", Box::new(|x: &Word| mak_mad(x).mad)),
            ("stat", Box::new(|x: &Word| stat(x))),
            ("inv_2", Box::new(|x: &Word| inv_r(x, 2))),
            ("2maj", Box::new(|x: &Word| rmaj(x, 2).rmaj)),
            ("2den", Box::new(|x: &Word| den_stats(x, 2).rden)),
        ];
        for (name, f) in stats {
            assert_eq!(q_dist(&words, f), expected, "{name} on (2,2)");
        }
    }

    #[test]
    fn stat_name_parsing_and_display() {
        assert_eq!(StatName::parse("inv", 1).unwrap(), StatName::Inv);
        assert_eq!(StatName::parse("inv_r", 2).unwrap(), StatName::InvR(2));
        assert_eq!(StatName::parse("rmaj", 3).unwrap(), StatName::RMaj(3));
        assert_eq!(StatName::parse("rexc", 2).unwrap(), StatName::Exc(2));
        assert_eq!(
            StatName::parse("imaj", 1).unwrap(),
            StatName::inverse_of(StatName::Maj)
        );
        assert_eq!(
            StatName::parse("iinv_r", 2).unwrap(),
            StatName::inverse_of(StatName::InvR(2))
        );
        assert_eq!(
            StatName::parse("istat", 1).unwrap(),
            StatName::inverse_of(StatName::Stat)
        );
        assert!(StatName::parse("bogus", 1).is_err());
        assert!(StatName::parse("inv", 0).is_err());
        assert_eq!(StatName::parse("iinv", 1).unwrap().to_string(), "iinv");
        assert_eq!(StatName::RMaj(2).to_string(), "2maj");
        assert_eq!(StatName::InvR(3).to_string(), "inv_3");
    }

    #[test]
    fn stat_name_eval_dispatch() {
        let word = w("2111");
        assert_eq!(StatName::Inv.eval(&word).unwrap(), 3);
        assert_eq!(StatName::Maj.eval(&word).unwrap(), 1);
        assert_eq!(StatName::Den.eval(&word).unwrap(), 1);
        assert_eq!(StatName::Mak.eval(&word).unwrap(), 1);
        assert_eq!(StatName::Rlwmin.eval(&word).unwrap(), 3);
        assert_eq!(
            StatName::inverse_of(StatName::Maj).eval(&word),
            Err(Error::NotAPermutation)
        );
        assert_eq!(
            StatName::inverse_of(StatName::Maj)
                .eval(p("231").as_word())
                .unwrap(),
            1
        );
    }

    proptest! {
        #[test]
        fn standardness_property(letters in proptest::collection::vec(1u32..=4, 1..=7)) {
            let word = Word::new(letters).unwrap();
            let tau = word.std();
            let tau = tau.as_word();
            prop_assert_eq!(inv(tau), inv(&word));
            prop_assert_eq!(descents(tau).maj, descents(&word).maj);
            prop_assert_eq!(mak_mad(tau).mak, mak_mad(&word).mak);
            prop_assert_eq!(stat(tau), stat(&word));
            for r in 1..=3 {
                prop_assert_eq!(inv_r(tau, r), inv_r(&word, r));
            }
        }

        #[test]
        fn supp_of_weak_minima_is_strict_minima(letters in proptest::collection::vec(1u32..=5, 1..=8)) {
            let word = Word::new(letters).unwrap();
            let mm = minima_maxima(&word);
            prop_assert_eq!(mm.rlwmin.supp(), mm.rlmin);
        }

        #[test]
        fn extractor_counts_are_consistent(letters in proptest::collection::vec(1u32..=5, 1..=8)) {
            let word = Word::new(letters).unwrap();
            let d = descents(&word);
            prop_assert_eq!(d.count as usize, d.positions.len());
            let e = excedances(&word, 1);
            prop_assert_eq!(e.count as usize, e.positions.len());
            let mm = minima_maxima(&word);
            prop_assert_eq!(mm.lrmax.len(), mm.plrmax.len());
        }
    }
}
