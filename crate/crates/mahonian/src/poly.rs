//! Exact sparse polynomials in the variables `t`, `q`, `x`, plus the
//! q-analog constructors and polynomial determinants behind every closed
//! form this crate verifies.
//!
//! Coefficients are arbitrary-precision integers, so identity checks are
//! exact at any desk scale. Provided here:
//!
//! - [`MultiPoly`]: sparse exponent-triple to coefficient map with exact
//!   ring operations (`add`, `sub`, `mul`, `scale`, `neg`);
//! - [`q_int`]: the q-integer `[i]_q = 1 + q + ... + q^{i-1}`;
//! - [`q_binomial`]: the Gaussian coefficient via the Pascal recurrence
//!   `[n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q`, with `[n,k]_q = 0` whenever
//!   `k < 0` or `k > n`;
//! - [`q_multinomial`]: a product of q-binomials over prefix sums (no
//!   polynomial division anywhere);
//! - [`PolyMatrix`] and [`det_poly`]: exact determinants by cofactor
//!   expansion (dimensions stay below 10 here);
//! - [`mahonian_stirling_product`]: `x (x+q) (x+q+q^2) ... (x+q+...+q^{n-1})`.
//!
//! Canonical term order is lexicographic on the exponent triple
//! `(e_t, e_q, e_x)`, both in memory and in the text and JSON renderings.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::Error;
use crate::word::Composition;

/// Exponents of one monomial, in variable order `(t, q, x)`.
pub type Exponents = (u32, u32, u32);

/// A sparse exact-integer polynomial in `t`, `q`, `x`.
///
/// Invariants: no zero coefficients are stored, and iteration order over
/// terms is lexicographic on `(e_t, e_q, e_x)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl MultiPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    /// A constant polynomial.
    pub fn constant(c: i64) -> Self {
        MultiPoly::term(BigInt::from(c), (0, 0, 0))
    }

    /// The single monomial `c * t^a q^b x^c`.
    pub fn term(coeff: BigInt, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        MultiPoly { terms }
    }

    /// The monomial `q^k`.
    pub fn q_pow(k: u32) -> Self {
        MultiPoly::term(BigInt::one(), (0, k, 0))
    }

    /// The monomial `t^a q^b x^c` with coefficient 1.
    pub fn monomial(exps: Exponents) -> Self {
        MultiPoly::term(BigInt::one(), exps)
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `t^a q^b x^c` (zero when absent).
    pub fn coeff(&self, exps: Exponents) -> BigInt {
        self.terms.get(&exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds `c * t^a q^b x^c` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exps: Exponents, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    /// Exact sum.
    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    /// Exact difference.
    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, &-c.clone());
        }
        out
    }

    /// Negation.
    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    /// Exact product.
    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (&(t1, q1, x1), c1) in &self.terms {
            for (&(t2, q2, x2), c2) in &other.terms {
                out.add_term((t1 + t2, q1 + q2, x1 + x2), &(c1 * c2));
            }
        }
        out
    }

    /// Multiplication by an integer scalar.
    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(&e, k)| (e, k * c)).collect(),
        }
    }

    /// The value at `t = q = x = 1`: the sum of the coefficients. For a
    /// distribution polynomial this is the family cardinality.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Largest exponent of `q` appearing (None for the zero polynomial).
    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, q, _)| q).max()
    }

    /// JSON rendering: an array of `{"t", "q", "x", "c"}` objects in
    /// canonical term order, with the coefficient as a decimal string.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(&(t, q, x), c)| {
                    json!({"t": t, "q": q, "x": x, "c": c.to_string()})
                })
                .collect(),
        )
    }

    /// Parses the JSON rendering produced by [`MultiPoly::to_json`].
    pub fn from_json(v: &Value) -> Result<MultiPoly, Error> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::InvalidLiteral("polynomial JSON must be an array".into()))?;
        let mut out = MultiPoly::zero();
        for item in arr {
            let field = |name: &str| -> Result<u32, Error> {
                item.get(name)
                    .and_then(Value::as_u64)
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(|| {
                        Error::InvalidLiteral(format!("bad '{name}' field in polynomial JSON"))
                    })
            };
            let coeff_text = item
                .get("c")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::InvalidLiteral("bad 'c' field in polynomial JSON".into()))?;
            let coeff: BigInt = coeff_text
                .parse()
                .map_err(|_| Error::InvalidLiteral(format!("bad coefficient: {coeff_text}")))?;
            out.add_term((field("t")?, field("q")?, field("x")?), &coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical text: terms ascending by `(e_t, e_q, e_x)`, each rendered
    /// `c*t^a*q^b*x^c` with unit factors elided (coefficient 1, exponent 0
    /// factors, and `^1` on exponents), joined with explicit signs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(t, q, x), c) in &self.terms {
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (t == 0 && q == 0 && x == 0) {
                factors.push(abs.to_string());
            }
            for (sym, e) in [("t", t), ("q", q), ("x", x)] {
                match e {
                    0 => {}
                    1 => factors.push(sym.to_string()),
                    _ => factors.push(format!("{sym}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

/// The q-integer `[i]_q`: zero for `i = 0`, else `1 + q + ... + q^{i-1}`.
pub fn q_int(i: u32) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for k in 0..i {
        out.add_term((0, k, 0), &BigInt::one());
    }
    out
}

/// The Gaussian binomial coefficient `[n, k]_q`.
///
/// Out-of-range arguments (`k < 0`, `k > n`, or `n < 0`) give the zero
/// polynomial. Computed by the Pascal recurrence
/// `[n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q` starting from `[n,0]_q = 1`,
/// so no division is involved.
pub fn q_binomial(n: i64, k: i64) -> MultiPoly {
    if n < 0 || k < 0 || k > n {
        return MultiPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    // row[j] holds [i, j]_q while i sweeps 0..=n
    let mut row: Vec<MultiPoly> = vec![MultiPoly::zero(); k + 1];
    row[0] = MultiPoly::one();
    for _i in 1..=n {
        for j in (1..=k).rev() {
            let shifted = row[j].mul(&MultiPoly::q_pow(j as u32));
            row[j] = row[j - 1].add(&shifted);
        }
    }
    row.pop().expect("row has k+1 entries")
}

/// The q-multinomial coefficient of `n` over the parts of `alpha`,
/// computed as the product of q-binomials `[s_j, alpha_j]_q` over the
/// partial sums `s_j = alpha_1 + ... + alpha_j`.
pub fn q_multinomial(n: usize, alpha: &Composition) -> Result<MultiPoly, Error> {
    if alpha.n() != n {
        return Err(Error::PartsSumMismatch {
            expected: n,
            actual: alpha.n(),
        });
    }
    let mut out = MultiPoly::one();
    let mut prefix = 0i64;
    for &p in alpha.parts() {
        prefix += p as i64;
        out = out.mul(&q_binomial(prefix, p as i64));
    }
    Ok(out)
}

/// A square matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: Vec<Vec<MultiPoly>>,
}

impl PolyMatrix {
    /// Builds a matrix, requiring a nonempty square shape.
    pub fn new(rows: Vec<Vec<MultiPoly>>) -> Result<Self, Error> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidLiteral(
                "polynomial matrix must be square and nonempty".into(),
            ));
        }
        Ok(PolyMatrix { rows })
    }

    /// The identity matrix of the given dimension.
    pub fn identity(dim: usize) -> Result<Self, Error> {
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { MultiPoly::one() } else { MultiPoly::zero() })
                    .collect()
            })
            .collect();
        PolyMatrix::new(rows)
    }

    /// Matrix dimension.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The entries.
    pub fn rows(&self) -> &[Vec<MultiPoly>] {
        &self.rows
    }
}

/// Exact determinant by cofactor expansion along the first row.
///
/// Exponential in the dimension, which never exceeds 10 in this crate.
pub fn det_poly(m: &PolyMatrix) -> MultiPoly {
    det_rows(&m.rows, &(0..m.dim()).collect::<Vec<_>>())
}

fn det_rows(rows: &[Vec<MultiPoly>], cols: &[usize]) -> MultiPoly {
    let top = rows.len() - cols.len();
    if cols.len() == 1 {
        return rows[top][cols[0]].clone();
    }
    let mut out = MultiPoly::zero();
    for (k, &col) in cols.iter().enumerate() {
        let entry = &rows[top][col];
        if entry.is_zero() {
            continue;
        }
        let remaining: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&c| c != col)
            .collect();
        let minor = det_rows(rows, &remaining);
        let signed = if k % 2 == 0 { minor } else { minor.neg() };
        out = out.add(&entry.mul(&signed));
    }
    out
}

/// The Mahonian-Stirling product
/// `x (x+q) (x+q+q^2) ... (x+q+q^2+...+q^{n-1})` for `n >= 1`.
pub fn mahonian_stirling_product(n: usize) -> MultiPoly {
    let x = MultiPoly::monomial((0, 0, 1));
    let mut out = MultiPoly::one();
    let mut tail = MultiPoly::zero(); // q + q^2 + ... + q^i
    for i in 0..n {
        if i > 0 {
            tail.add_term((0, i as u32, 0), &BigInt::one());
        }
        out = out.mul(&x.add(&tail));
    }
    out
}
