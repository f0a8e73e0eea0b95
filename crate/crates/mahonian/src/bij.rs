//! The five bijection families that transport one Mahonian statistic to
//! another while preserving the right-to-left minima data.
//!
//! - [`j_x`]: the block-rotation operator. With the word split into
//!   maximal factors by comparison against the pivot `x` (the class of the
//!   last letter decides which side acts as single-letter separators),
//!   each factor `u b` becomes `b u`. It fixes the weak right-to-left
//!   minima at or below the pivot.
//! - [`foata_r`]: the r-windowed insertion recursion built from `j_x`;
//!   it carries `inv_r` to `inv` and preserves the weak minima multiset.
//!   `r = 1` is the classical maj-to-inv transformation.
//! - [`rawlings_r`]: the star-and-label insertion recursion; it carries
//!   `inv` to the r-major index and preserves the weak minima multiset.
//! - [`h_rden`]: the dominated-cycle decomposition map built from
//!   [`gamma_rden`] and the column transpositions [`t_r`]; it carries
//!   `(rexc, rden)` to `(rdes, rmaj)` and preserves the weak minima
//!   multiset. For `r >= m` both bistatistics degenerate and the map is
//!   the identity.
//! - [`phi_perm`] / [`phi_alpha`]: the descent-block rearrangement
//!   carrying `(des, mak, mad)` to `(exc, den, inv)`, extended to words by
//!   conjugation with standardization; preserves the weak minima multiset.
//! - [`phi_qi`]: the block-insertion recursion from 212-avoiding to
//!   221-avoiding words of the same content; preserves the positions of
//!   the left-to-right maxima.
//!
//! All maps are bijections on their stated domains; the tests certify
//! this by image counts on small contents.

use crate::error::Error;
use crate::families::avoids_212;
use crate::word::{Biword, Permutation, Word};

/// Applies the block-rotation operator with pivot `x`.
///
/// If the last letter exceeds `x`, the word factors as `u_1 b_1 … u_s b_s`
/// with each `b_j` a single letter above the pivot and each `u_j` a
/// possibly empty run of letters at most the pivot; otherwise the roles of
/// the two classes swap. The image is `b_1 u_1 … b_s u_s`.
pub fn j_x(w: &Word, x: u32) -> Word {
    Word::new(j_x_slice(w.letters(), x)).expect("rotation preserves length")
}

fn j_x_slice(a: &[u32], x: u32) -> Vec<u32> {
    let last_high = *a.last().expect("nonempty") > x;
    let mut out = Vec::with_capacity(a.len());
    let mut run: Vec<u32> = Vec::new();
    for &c in a {
        let separator = if last_high { c > x } else { c <= x };
        if separator {
            out.push(c);
            out.append(&mut run);
        } else {
            run.push(c);
        }
    }
    debug_assert!(run.is_empty(), "the last letter is always a separator");
    out
}

/// The r-windowed insertion bijection: `inv(foata_r(w, r)) = inv_r(w)`,
/// and the weak right-to-left minima multiset is preserved. For `r >= n`
/// the word is returned unchanged; `r = 1` transports maj to inv.
pub fn foata_r(w: &Word, r: u32) -> Word {
    let a = w.letters();
    let n = a.len();
    let r = r.max(1) as usize;
    if r >= n {
        return w.clone();
    }
    let mut gamma: Vec<u32> = a[..r].to_vec();
    for &c in &a[r..] {
        let head_len = gamma.len() - (r - 1);
        let mut next = j_x_slice(&gamma[..head_len], c);
        next.extend_from_slice(&gamma[head_len..]);
        next.push(c);
        gamma = next;
    }
    Word::new(gamma).expect("rearrangement of the input")
}

/// Letters of the original word strictly smaller than `letter` and
/// strictly to the right of its j-th occurrence (1-based j, occurrences
/// counted from the left). Summing over all letters and occurrences gives
/// the inversion number.
fn smaller_right_of_occurrence(a: &[u32], letter: u32, j: usize) -> usize {
    let mut seen = 0usize;
    for (idx, &c) in a.iter().enumerate() {
        if c == letter {
            seen += 1;
            if seen == j {
                return a[idx + 1..].iter().filter(|&&c| c < letter).count();
            }
        }
    }
    panic!("occurrence {j} of letter {letter} not present");
}

/// The star-and-label insertion bijection: `rmaj(rawlings_r(w, r), r) =
/// inv(w)`, and the weak right-to-left minima multiset is preserved.
///
/// Letters are reinserted in increasing value; before placing the j-th
/// copy of the current letter, the gap directly left of each already
/// placed copy is starred. Among the unstarred gaps, those where the
/// insertion leaves the r-descent count unchanged are labeled `0..=d`
/// right to left, the rest `d+1..` left to right, and the copy lands at
/// the label given by its smaller-letters-to-the-right count in the
/// original word.
pub fn rawlings_r(w: &Word, r: u32) -> Word {
    let a = w.letters();
    let m = w.max_letter();
    let mut counts = vec![0usize; m as usize + 1];
    for &c in a {
        counts[c as usize] += 1;
    }
    let mut v: Vec<u32> = vec![1; counts[1]];
    for letter in 2..=m {
        for j in 1..=counts[letter as usize] {
            let unstarred: Vec<usize> = (0..=v.len())
                .filter(|&g| !(g < v.len() && v[g] == letter))
                .collect();
            let increases = |g: usize| -> bool {
                if g == v.len() {
                    return false;
                }
                let creates = letter >= v[g] + r;
                let destroyed = g > 0 && v[g - 1] >= v[g] + r;
                creates && !destroyed
            };
            let (inc, mut non_inc): (Vec<usize>, Vec<usize>) =
                unstarred.into_iter().partition(|&g| increases(g));
            non_inc.reverse();
            let label = smaller_right_of_occurrence(a, letter, j);
            let gap = if label < non_inc.len() {
                non_inc[label]
            } else {
                inc[label - non_inc.len()]
            };
            v.insert(gap, letter);
        }
    }
    Word::new(v).expect("rearrangement of the input")
}

/// Membership in the cyclic interval `]]x, y]]` of positive integers:
/// `x < z <= y` when `x <= y`, wrapping to `z > x or z <= y` when
/// `x > y`; in particular `]]x, x]]` is empty.
fn cyclic_contains(x: u32, y: u32, z: u32) -> bool {
    if x <= y {
        x < z && z <= y
    } else {
        z > x || z <= y
    }
}

/// Swaps the tops of 0-based columns `k`, `k+1`, and the bottoms exactly
/// when one of the two bottom letters lies in the shifted cyclic interval.
fn apply_t(top: &mut [u32], bottom: &mut [u32], k: usize, r: u32) {
    let (x, y) = (top[k], top[k + 1]);
    let (a, b) = (bottom[k], bottom[k + 1]);
    top.swap(k, k + 1);
    let in_interval = |z: u32| cyclic_contains(x + r - 1, y + r - 1, z);
    if in_interval(a) != in_interval(b) {
        bottom.swap(k, k + 1);
    }
}

/// The column transposition on biwords (1-based position; requires
/// `1 <= i <= n-1`): tops always swap, bottoms swap exactly when one of
/// the two bottom letters lies in the cyclic interval
/// `]]x+r-1, y+r-1]]` built from the tops.
pub fn t_r(i: usize, v: &Biword, r: u32) -> Result<Biword, Error> {
    let n = v.len();
    if i < 1 || i >= n {
        return Err(Error::PositionOutOfRange {
            position: i,
            max: n.saturating_sub(1),
        });
    }
    let mut top = v.top().to_vec();
    let mut bottom = v.bottom().to_vec();
    apply_t(&mut top, &mut bottom, i - 1, r);
    Biword::new(top, bottom)
}

/// A biword that is a single column or whose bottom row is the top row
/// rotated one step right with the first bottom letter strictly largest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominatedCycle {
    biword: Biword,
}

impl DominatedCycle {
    /// Validates the dominated-cycle shape.
    pub fn new(biword: Biword) -> Result<Self, Error> {
        let n = biword.len();
        let top = biword.top();
        let bottom = biword.bottom();
        let ok = n == 1
            || (bottom[0] == top[n - 1]
                && (1..n).all(|i| bottom[i] == top[i - 1])
                && (1..n).all(|i| bottom[0] > bottom[i]));
        if ok {
            Ok(DominatedCycle { biword })
        } else {
            Err(Error::NotDominatedCycle)
        }
    }

    /// The underlying biword.
    pub fn biword(&self) -> &Biword {
        &self.biword
    }

    /// Number of columns.
    pub fn len(&self) -> usize {
        self.biword.len()
    }

    /// A cycle always has at least one column.
    pub fn is_empty(&self) -> bool {
        false
    }
}

/// An ordered decomposition into dominated cycles; concatenating the
/// bottom rows recovers a word of the original content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<DominatedCycle>,
}

impl CycleDecomposition {
    /// The cycles, in decomposition order.
    pub fn cycles(&self) -> &[DominatedCycle] {
        &self.cycles
    }

    /// Concatenation of the bottom rows in cycle order.
    pub fn bottom_word(&self) -> Word {
        let letters: Vec<u32> = self
            .cycles
            .iter()
            .flat_map(|c| c.biword().bottom().iter().copied())
            .collect();
        Word::new(letters).expect("cycles are nonempty")
    }
}

/// Decomposes a word into dominated cycles by repeatedly peeling the
/// rightmost cycle off the two-line notation.
///
/// The rightmost column's top (the largest remaining letter) anchors the
/// peel: while the bottom at the chain's left edge differs from the
/// anchor, the rightmost earlier column whose top equals that bottom is
/// walked over to the chain edge with [`t_r`] transpositions, extending
/// the chain. The peeled columns form a dominated cycle; the decomposition
/// recurses on the remaining prefix, whose top row is nondecreasing again,
/// and lists that prefix's cycles first.
pub fn gamma_rden(w: &Word, r: u32) -> CycleDecomposition {
    let mut top = w.sorted_letters();
    let mut bottom = w.letters().to_vec();
    let mut peeled: Vec<DominatedCycle> = Vec::new();
    let mut len = top.len();
    while len > 0 {
        let anchor = top[len - 1];
        let mut t = 0usize;
        while bottom[len - 1 - t] != anchor {
            let target = bottom[len - 1 - t];
            let chain_edge = len - 1 - t;
            let i = (0..chain_edge)
                .rev()
                .find(|&idx| top[idx] == target)
                .expect("the content guarantees a matching top left of the chain");
            for k in i..chain_edge - 1 {
                apply_t(&mut top, &mut bottom, k, r);
            }
            t += 1;
        }
        let cycle = Biword::new(top[len - 1 - t..len].to_vec(), bottom[len - 1 - t..len].to_vec())
            .expect("cycles are nonempty column ranges");
        debug_assert!(cycle.rows_share_content());
        peeled.push(DominatedCycle::new(cycle).expect("peeling yields dominated cycles"));
        len = len - 1 - t;
    }
    peeled.reverse();
    CycleDecomposition { cycles: peeled }
}

/// The dominated-cycle bijection: `(rexc, rden)` of the input equals
/// `(rdes, rmaj)` of the output, and the weak right-to-left minima
/// multiset is preserved. For `r >= m` both bistatistics reduce to
/// `(0, inv)` and the word is returned unchanged.
pub fn h_rden(w: &Word, r: u32) -> Word {
    if r >= w.max_letter() {
        return w.clone();
    }
    gamma_rden(w, r).bottom_word()
}

/// Start position, closer (leftmost letter), and opener (rightmost
/// letter) of each proper descent block, where blocks are the maximal
/// strictly decreasing runs and proper means length at least two.
fn proper_blocks(a: &[u32]) -> Vec<(usize, u32, u32)> {
    let n = a.len();
    let mut blocks = Vec::new();
    let mut start = 0usize;
    for i in 1..=n {
        if i == n || a[i - 1] <= a[i] {
            if i - 1 > start {
                blocks.push((start, a[start], a[i - 1]));
            }
            start = i;
        }
    }
    blocks
}

/// The descent-block rearrangement on permutations.
///
/// Descent bottoms sorted increasingly form the top-row prefix `f` and the
/// remaining letters the suffix `g`; the bottom row places the descent
/// tops so each has embracing-number-many greater letters to its left, and
/// the remaining letters so each has embracing-number-many smaller letters
/// to its right. Reading the bottom row with the columns sorted by top
/// gives the image, whose excedance tops and bottoms are exactly `f` and
/// the rearranged descent tops.
pub fn phi_perm(pi: &Permutation) -> Permutation {
    let a = pi.as_word().letters();
    let n = a.len();

    let mut is_descent_top = vec![false; n + 1];
    let mut is_descent_bottom = vec![false; n + 1];
    for i in 1..n {
        if a[i - 1] > a[i] {
            is_descent_top[a[i - 1] as usize] = true;
            is_descent_bottom[a[i] as usize] = true;
        }
    }

    let blocks = proper_blocks(a);
    let mut embrace = vec![0usize; n + 1];
    for (i, &x) in a.iter().enumerate() {
        embrace[x as usize] = blocks
            .iter()
            .filter(|&&(s, closer, opener)| s > i && closer >= x && opener < x)
            .count();
    }

    let f: Vec<u32> = (1..=n as u32)
        .filter(|&v| is_descent_bottom[v as usize])
        .collect();
    let g: Vec<u32> = (1..=n as u32)
        .filter(|&v| !is_descent_bottom[v as usize])
        .collect();

    // descent tops, placed in decreasing value order so that inserting at
    // index e leaves exactly e greater letters on the left
    let mut f_image: Vec<u32> = Vec::new();
    for v in (1..=n as u32).rev() {
        if is_descent_top[v as usize] {
            f_image.insert(embrace[v as usize], v);
        }
    }
    // remaining letters, placed in increasing value order so that
    // inserting at len - e leaves exactly e smaller letters on the right
    let mut g_image: Vec<u32> = Vec::new();
    for v in 1..=n as u32 {
        if !is_descent_top[v as usize] {
            let at = g_image.len() - embrace[v as usize];
            g_image.insert(at, v);
        }
    }

    let mut columns: Vec<(u32, u32)> = f
        .iter()
        .zip(&f_image)
        .chain(g.iter().zip(&g_image))
        .map(|(&t, &b)| (t, b))
        .collect();
    columns.sort_by_key(|&(t, _)| t);
    Permutation::new(columns.into_iter().map(|(_, b)| b).collect())
        .expect("both rows are permutations of 1..=n")
}

/// The descent-block rearrangement on words, by conjugating [`phi_perm`]
/// with standardization: the output is the unique rearrangement of `w`
/// whose standardization is the image of `std(w)`. It carries
/// `(des, mak, mad)` to `(exc, den, inv)` and preserves the weak
/// right-to-left minima multiset.
pub fn phi_alpha(w: &Word) -> Word {
    let sorted = w.sorted_letters();
    let image = phi_perm(&w.std());
    let letters: Vec<u32> = image
        .as_word()
        .letters()
        .iter()
        .map(|&rank| sorted[rank as usize - 1])
        .collect();
    Word::new(letters).expect("rearrangement of the input")
}

/// The block-insertion bijection from 212-avoiding to 221-avoiding words
/// of the same content, preserving the positions of the left-to-right
/// maxima.
///
/// In a 212-avoider all copies of the largest letter are adjacent; the
/// image keeps one copy at the block's insertion point and moves the rest
/// to the end, recursing on the smaller letters.
pub fn phi_qi(w: &Word) -> Result<Word, Error> {
    if !avoids_212(w) {
        return Err(Error::NotStirling);
    }
    Ok(Word::new(phi_qi_rec(w.letters())).expect("rearrangement of the input"))
}

fn phi_qi_rec(a: &[u32]) -> Vec<u32> {
    let m = *a.iter().max().expect("nonempty");
    let copies = a.iter().filter(|&&c| c == m).count();
    if copies == a.len() {
        return a.to_vec();
    }
    let insertion_point = a.iter().position(|&c| c == m).expect("m occurs");
    let rest: Vec<u32> = a.iter().copied().filter(|&c| c != m).collect();
    let image = phi_qi_rec(&rest);
    let mut out = Vec::with_capacity(a.len());
    out.extend_from_slice(&image[..insertion_point]);
    out.push(m);
    out.extend_from_slice(&image[insertion_point..]);
    out.extend(std::iter::repeat(m).take(copies - 1));
    out
}
