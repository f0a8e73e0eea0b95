//! Distribution polynomials and the machine-checkable identity suite.
//!
//! A distribution is the exact generating polynomial of a statistic
//! assignment over a finite family: `sum over members of t^a q^b x^c`,
//! where the exponents come from evaluating the assigned statistics.
//! Every equidistribution claim and closed-form evaluation handled by
//! this crate is registered here as one data row: a parameter grid
//! (contents, descent sets, sizes), the statistic assignments whose
//! distributions must agree on each grid cell, and an optional closed
//! form. `check_identity` walks the grid in a deterministic order
//! (size ascending, then lexicographic content or set), compares
//! polynomials with tolerance zero, and reports one pass/fail flag per
//! cell plus a witness for the first failing cell.
//!
//! Positive rows fail as soon as one cell disagrees. Negative rows
//! assert that two assignments are NOT equidistributed somewhere; the
//! engine searches the grid for a differing instance and reports `pass`
//! with that instance as witness, or `warn` when no difference shows up
//! within the requested bounds (the claim asserts existence without a
//! bound, so absence of a small witness is not a refutation).
//!
//! Grid cells are independent and are evaluated in parallel; each cell
//! accumulates its polynomials privately and only the finished reports
//! are merged, so no locking is involved. Cell labels reuse the family
//! descriptor grammar, so any reported cell can be replayed with the
//! command-line `dist` command.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::families::{
    alt_runs_descent_sets, compositions, gen_alt_runs, gen_alternating, gen_avoiders, gen_des_eq,
    gen_des_subseteq, gen_words, subsets, FamilySpec, Pattern,
};
use crate::poly::{
    det_poly, mahonian_stirling_product, q_binomial, q_int, q_multinomial, MultiPoly, PolyMatrix,
};
use crate::stats::{minima_maxima, plrmax, StatName};
use crate::word::{Composition, LetterMultiset, Word};

/// One of the three polynomial variables a statistic can be assigned to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    T,
    Q,
    X,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::T => write!(f, "t"),
            Variable::Q => write!(f, "q"),
            Variable::X => write!(f, "x"),
        }
    }
}

/// A nonempty list of (statistic, variable) pairs with each variable
/// bound at most once; the exponent recipe of one generating sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatAssignment {
    pairs: Vec<(StatName, Variable)>,
}

impl StatAssignment {
    /// Validates and builds an assignment.
    pub fn new(pairs: Vec<(StatName, Variable)>) -> Result<StatAssignment, Error> {
        if pairs.is_empty() {
            return Err(Error::InvalidAssignment("no statistics assigned".into()));
        }
        for v in [Variable::T, Variable::Q, Variable::X] {
            if pairs.iter().filter(|(_, pv)| *pv == v).count() > 1 {
                return Err(Error::InvalidAssignment(format!(
                    "variable `{v}` is bound more than once"
                )));
            }
        }
        Ok(StatAssignment { pairs })
    }

    /// Single statistic in the variable `q`.
    pub fn q(st: StatName) -> StatAssignment {
        StatAssignment {
            pairs: vec![(st, Variable::Q)],
        }
    }

    /// Bivariate assignment `t^{st_t} q^{st_q}`.
    pub fn tq(st_t: StatName, st_q: StatName) -> StatAssignment {
        StatAssignment {
            pairs: vec![(st_t, Variable::T), (st_q, Variable::Q)],
        }
    }

    /// Bivariate assignment `q^{st_q} x^{st_x}`.
    pub fn qx(st_q: StatName, st_x: StatName) -> StatAssignment {
        StatAssignment {
            pairs: vec![(st_q, Variable::Q), (st_x, Variable::X)],
        }
    }

    /// Trivariate assignment `t^{st_t} q^{st_q} x^{st_x}`.
    pub fn tqx(st_t: StatName, st_q: StatName, st_x: StatName) -> StatAssignment {
        StatAssignment {
            pairs: vec![
                (st_t, Variable::T),
                (st_q, Variable::Q),
                (st_x, Variable::X),
            ],
        }
    }

    /// The (statistic, variable) pairs in declaration order.
    pub fn pairs(&self) -> &[(StatName, Variable)] {
        &self.pairs
    }

    /// Parses `stat:var` items separated by commas, e.g. `des:t,maj:q`.
    /// r-parameterized statistic tokens take their parameter from `r`.
    pub fn parse(text: &str, r: u32) -> Result<StatAssignment, Error> {
        let mut pairs = Vec::new();
        for item in text.split(',') {
            let (st_text, var_text) = item.split_once(':').ok_or_else(|| {
                Error::InvalidAssignment(format!("`{item}` is not of the form stat:var"))
            })?;
            let st = StatName::parse(st_text.trim(), r)?;
            let var = match var_text.trim() {
                "t" => Variable::T,
                "q" => Variable::Q,
                "x" => Variable::X,
                other => {
                    return Err(Error::InvalidAssignment(format!(
                        "unknown variable `{other}`"
                    )))
                }
            };
            pairs.push((st, var));
        }
        StatAssignment::new(pairs)
    }

    /// Evaluates all assigned statistics on one word, as the exponent
    /// triple `(e_t, e_q, e_x)` of the member's monomial.
    pub fn exponents(&self, w: &Word) -> Result<(u32, u32, u32), Error> {
        let mut exps = (0u32, 0u32, 0u32);
        for (st, var) in &self.pairs {
            let value = st.eval(w)?;
            let value = u32::try_from(value).expect("statistic value fits an exponent");
            match var {
                Variable::T => exps.0 = value,
                Variable::Q => exps.1 = value,
                Variable::X => exps.2 = value,
            }
        }
        Ok(exps)
    }
}

impl fmt::Display for StatAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (st, var)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{st}:{var}")?;
        }
        Ok(())
    }
}

/// The distribution of an assignment over a named family; the generic
/// carrier of every displayed generating sum.
pub fn distribution(fam: &FamilySpec, sa: &StatAssignment) -> Result<MultiPoly, Error> {
    let members = fam.members();
    distribution_over(members.iter(), sa)
}

/// The distribution of an assignment over an explicit member list.
pub fn distribution_over<'a, I>(members: I, sa: &StatAssignment) -> Result<MultiPoly, Error>
where
    I: IntoIterator<Item = &'a Word>,
{
    let mut acc = MultiPoly::zero();
    let one = BigInt::one();
    for w in members {
        acc.add_term(sa.exponents(w)?, &one);
    }
    Ok(acc)
}

/// Outcome category of one identity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Warn,
}

/// Pass/fail flag for one grid cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub cell: String,
    pub pass: bool,
}

/// The first disagreeing grid instance: the cell plus both conflicting
/// values (polynomials, counts, or member lists), each labeled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub cell: String,
    pub lhs_label: String,
    pub lhs: String,
    pub rhs_label: String,
    pub rhs: String,
}

/// Result of checking one identity over its full parameter grid.
///
/// Invariant: `status == Fail` implies `witness.is_some()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: String,
    pub grid: Vec<CellReport>,
    pub status: CheckStatus,
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
}

/// A labeled member list shared between the sides of a cell.
type Members = Arc<Vec<Word>>;

/// One generating sum inside a cell: a family and an assignment.
struct Side {
    label: String,
    members: Members,
    assignment: StatAssignment,
}

/// An independently checkable unit of an identity.
struct Cell {
    label: String,
    check: CellCheck,
}

enum CellCheck {
    /// All side distributions must coincide, and match the closed form
    /// when one is given.
    Equidistribution {
        sides: Vec<Side>,
        closed_form: Option<(String, MultiPoly)>,
    },
    /// Two sorted member lists must be identical.
    SetEquality {
        lhs_label: String,
        lhs: Vec<Word>,
        rhs_label: String,
        rhs: Vec<Word>,
    },
    /// Two exact integers must be identical.
    CountEquality {
        lhs_label: String,
        lhs: BigInt,
        rhs_label: String,
        rhs: BigInt,
    },
}

struct CellOutcome {
    pass: bool,
    witness: Option<Witness>,
}

fn evaluate_cell(cell: &Cell) -> CellOutcome {
    match &cell.check {
        CellCheck::Equidistribution { sides, closed_form } => {
            let mut dists: Vec<MultiPoly> = Vec::with_capacity(sides.len());
            for side in sides {
                match distribution_over(side.members.iter(), &side.assignment) {
                    Ok(d) => dists.push(d),
                    Err(e) => {
                        return CellOutcome {
                            pass: false,
                            witness: Some(Witness {
                                cell: cell.label.clone(),
                                lhs_label: side.label.clone(),
                                lhs: format!("evaluation error: {e}"),
                                rhs_label: String::new(),
                                rhs: String::new(),
                            }),
                        }
                    }
                }
            }
            for i in 1..dists.len() {
                if dists[i] != dists[0] {
                    return CellOutcome {
                        pass: false,
                        witness: Some(Witness {
                            cell: cell.label.clone(),
                            lhs_label: sides[0].label.clone(),
                            lhs: dists[0].to_string(),
                            rhs_label: sides[i].label.clone(),
                            rhs: dists[i].to_string(),
                        }),
                    };
                }
            }
            if let Some((form_label, form)) = closed_form {
                if dists[0] != *form {
                    return CellOutcome {
                        pass: false,
                        witness: Some(Witness {
                            cell: cell.label.clone(),
                            lhs_label: sides[0].label.clone(),
                            lhs: dists[0].to_string(),
                            rhs_label: form_label.clone(),
                            rhs: form.to_string(),
                        }),
                    };
                }
            }
            CellOutcome {
                pass: true,
                witness: None,
            }
        }
        CellCheck::SetEquality {
            lhs_label,
            lhs,
            rhs_label,
            rhs,
        } => {
            if lhs == rhs {
                return CellOutcome {
                    pass: true,
                    witness: None,
                };
            }
            let first_diff = lhs
                .iter()
                .zip(rhs.iter())
                .find(|(a, b)| a != b)
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .unwrap_or_else(|| {
                    let extra = if lhs.len() > rhs.len() { lhs } else { rhs };
                    let w = extra[lhs.len().min(rhs.len())].to_string();
                    (w.clone(), w)
                });
            CellOutcome {
                pass: false,
                witness: Some(Witness {
                    cell: cell.label.clone(),
                    lhs_label: lhs_label.clone(),
                    lhs: format!("{} members, first difference {}", lhs.len(), first_diff.0),
                    rhs_label: rhs_label.clone(),
                    rhs: format!("{} members, first difference {}", rhs.len(), first_diff.1),
                }),
            }
        }
        CellCheck::CountEquality {
            lhs_label,
            lhs,
            rhs_label,
            rhs,
        } => {
            if lhs == rhs {
                CellOutcome {
                    pass: true,
                    witness: None,
                }
            } else {
                CellOutcome {
                    pass: false,
                    witness: Some(Witness {
                        cell: cell.label.clone(),
                        lhs_label: lhs_label.clone(),
                        lhs: lhs.to_string(),
                        rhs_label: rhs_label.clone(),
                        rhs: rhs.to_string(),
                    }),
                }
            }
        }
    }
}

/// Enumerable family grids used by negative rows and by the
/// counterexample search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchDomain {
    /// Classes of words with a fixed weak right-to-left minimum multiset.
    RlwminClasses,
    /// Permutations with descent set contained in, then equal to, each set.
    DesFamilies,
    /// Permutation representations of set partitions of each shape.
    PartitionPerms,
    /// 212-avoiding words of each content.
    StirlingWords,
    /// 221-avoiding words of each content.
    QuasiIncreasingWords,
    /// All words of each content.
    WordsByContent,
    /// All permutations of each size.
    Permutations,
}

impl SearchDomain {
    /// Parses the command-line domain token.
    pub fn parse(text: &str) -> Result<SearchDomain, Error> {
        Ok(match text {
            "rlwmin-classes" => SearchDomain::RlwminClasses,
            "des-families" => SearchDomain::DesFamilies,
            "sp-perm" => SearchDomain::PartitionPerms,
            "stirling" => SearchDomain::StirlingWords,
            "quasi-increasing" => SearchDomain::QuasiIncreasingWords,
            "words" => SearchDomain::WordsByContent,
            "perms" => SearchDomain::Permutations,
            other => {
                return Err(Error::InvalidFamilySpec(format!(
                    "unknown search domain `{other}`"
                )))
            }
        })
    }
}

impl fmt::Display for SearchDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let token = match self {
            SearchDomain::RlwminClasses => "rlwmin-classes",
            SearchDomain::DesFamilies => "des-families",
            SearchDomain::PartitionPerms => "sp-perm",
            SearchDomain::StirlingWords => "stirling",
            SearchDomain::QuasiIncreasingWords => "quasi-increasing",
            SearchDomain::WordsByContent => "words",
            SearchDomain::Permutations => "perms",
        };
        write!(f, "{token}")
    }
}

/// All instances of a search domain up to size `n_max`, smallest
/// parameters first, each labeled with a replayable family descriptor.
pub fn domain_instances(domain: SearchDomain, n_max: usize) -> Vec<(String, Vec<Word>)> {
    let mut out = Vec::new();
    match domain {
        SearchDomain::RlwminClasses => {
            for alpha in alpha_grid(n_max) {
                for (r, class) in group_by_rlwmin(word_family(&alpha)) {
                    let spec = FamilySpec::WordsFixedRlwmin {
                        alpha: alpha.clone(),
                        r,
                    };
                    out.push((spec.to_string(), class));
                }
            }
        }
        SearchDomain::DesFamilies => {
            for n in 1..=n_max {
                for s in descent_set_grid(n) {
                    let le = FamilySpec::DesSubseteq { n, s: s.clone() };
                    out.push((le.to_string(), perm_words(gen_des_subseteq(n, &s))));
                    let eq = FamilySpec::DesEq { n, s: s.clone() };
                    out.push((eq.to_string(), perm_words(gen_des_eq(n, &s))));
                }
            }
        }
        SearchDomain::PartitionPerms => {
            for alpha in alpha_grid(n_max) {
                let spec = FamilySpec::SetPartitionPerm {
                    alpha: alpha.clone(),
                };
                out.push((spec.to_string(), spec.members()));
            }
        }
        SearchDomain::StirlingWords => {
            for alpha in alpha_grid(n_max) {
                let spec = FamilySpec::Avoid212 {
                    alpha: alpha.clone(),
                };
                out.push((spec.to_string(), spec.members()));
            }
        }
        SearchDomain::QuasiIncreasingWords => {
            for alpha in alpha_grid(n_max) {
                let spec = FamilySpec::Avoid221 {
                    alpha: alpha.clone(),
                };
                out.push((spec.to_string(), spec.members()));
            }
        }
        SearchDomain::WordsByContent => {
            for alpha in alpha_grid(n_max) {
                let spec = FamilySpec::Words {
                    alpha: alpha.clone(),
                };
                out.push((spec.to_string(), spec.members()));
            }
        }
        SearchDomain::Permutations => {
            for n in 1..=n_max {
                let alpha = ones(n);
                let spec = FamilySpec::Words {
                    alpha: alpha.clone(),
                };
                out.push((spec.to_string(), spec.members()));
            }
        }
    }
    out
}

/// Searches a domain for the smallest instance on which two statistics
/// have different distributions; `None` when they agree everywhere
/// within the bound.
pub fn find_counterexample(
    stat_a: &StatName,
    stat_b: &StatName,
    domain: SearchDomain,
    n_max: usize,
) -> Result<Option<Witness>, Error> {
    find_assignment_counterexample(
        &StatAssignment::q(stat_a.clone()),
        &StatAssignment::q(stat_b.clone()),
        domain,
        n_max,
    )
}

/// Assignment-level counterexample search (used for joint
/// distributions; `find_counterexample` is the single-statistic form).
pub fn find_assignment_counterexample(
    lhs: &StatAssignment,
    rhs: &StatAssignment,
    domain: SearchDomain,
    n_max: usize,
) -> Result<Option<Witness>, Error> {
    for (label, members) in domain_instances(domain, n_max) {
        let da = distribution_over(members.iter(), lhs)?;
        let db = distribution_over(members.iter(), rhs)?;
        if da != db {
            return Ok(Some(Witness {
                cell: label,
                lhs_label: lhs.to_string(),
                lhs: da.to_string(),
                rhs_label: rhs.to_string(),
                rhs: db.to_string(),
            }));
        }
    }
    Ok(None)
}

/// Euler numbers by the boustrophedon recurrence: row n is filled from
/// the reversed previous row by partial sums, and its last entry is the
/// count of (reverse) alternating permutations of n letters.
pub fn euler_numbers(n_max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut prev = vec![BigInt::one()];
    for n in 1..=n_max {
        let mut row: Vec<BigInt> = Vec::with_capacity(n + 1);
        row.push(BigInt::zero());
        for k in 1..=n {
            let next = &row[k - 1] + &prev[n - k];
            row.push(next);
        }
        out.push(row[n].clone());
        prev = row;
    }
    out
}

// ---------------------------------------------------------------------
// Identity registry
// ---------------------------------------------------------------------

/// Statistic token lists, expanded against the requested r values at
/// check time. A token group is one equality class of generating sums.
#[derive(Clone, Copy, Debug)]
enum AssignsKind {
    /// Each token in the variable `q`.
    EachQ(&'static [&'static str]),
    /// `(t, q)` token pairs.
    PairsTQ(&'static [(&'static str, &'static str)]),
    /// `(q, x)` token pairs.
    PairsQX(&'static [(&'static str, &'static str)]),
    /// `(x, t, q)` token triples.
    TriplesXTQ(&'static [(&'static str, &'static str, &'static str)]),
}

/// Closed form attached to every cell of a grid, computed from the
/// cell's parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ClosedKind {
    None,
    /// Gaussian multinomial of the cell's content or descent set.
    QMultinomial,
    /// Determinant of the Gaussian binomial matrix of the descent set.
    Determinant,
    /// The rising product `x (x+q) (x+q+q^2) ...` of the cell's size.
    MahonianStirling,
    /// Product of Gaussian integers of the content's prefix sums plus one.
    QuasiProduct,
    /// Descent counts from the insertion recurrence on the content.
    DescentRecurrence,
    /// Left-to-right minimum counts from the insertion recurrence.
    LrminRecurrence,
}

/// Parameter grids an identity can quantify over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum GridKind {
    /// One cell per content.
    WordsByContent,
    /// One cell per (content, weak right-to-left minimum multiset).
    WordsByRlwminClass,
    /// One cell per (content, strict right-to-left minimum set).
    WordsByRlminClass,
    /// One cell per size n, over all permutations.
    Permutations,
    /// One cell per (n, S), descent set contained in S.
    DesSubset,
    /// One cell per (n, S), descent set equal to S.
    DesEqual,
    /// One cell per (n, S, P), descents within S, maxima positions P.
    DesSubsetByPlrmax,
    /// One cell per (n, S, P), descents equal to S, maxima positions P.
    DesEqualByPlrmax,
    /// One cell per content, over set partition word representations.
    PartitionWords,
    /// One cell per content, over set partition permutation representations.
    PartitionPerms,
    /// One cell per content, over 221-avoiding words.
    QuasiIncreasingWords,
    /// One cell per content, with both avoidance classes as sides.
    StirlingVsQuasiIncreasing,
    /// One cell per size, over alternating permutations.
    Alternating,
    /// One cell per size, over reverse alternating permutations.
    ReverseAlternating,
    /// One cell per (size, maxima position set) inside the alternating class.
    AlternatingByPlrmax,
    /// Reverse alternating refinement of the same kind.
    ReverseAlternatingByPlrmax,
    /// One cell per (size, number of alternating runs).
    Runs,
    /// One cell per (size, run count, maxima position set).
    RunsByPlrmax,
}

/// Structural (non-distribution) checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum StructuralKind {
    /// Partition word representations equal the union of full-support
    /// weak-minima classes.
    PartitionWordsUnion,
    /// Partition permutation representations equal the union of
    /// bounded-descent families with maxima positions containing the
    /// part boundaries and the last position.
    PartitionPermsUnion,
    /// 221-avoiding words equal the union of weak-minima classes
    /// containing the forced repeated letters.
    QuasiIncreasingUnion,
    /// The run-count family equals the union of the matching
    /// exact-descent-set families.
    RunsUnion,
    /// Bounded-descent family sizes match the multinomial.
    DesSubsetCount,
    /// Exact-descent family sizes match the binomial determinant.
    DesEqualCount,
    /// Both avoidance classes have the prefix-sum product size.
    AvoiderProductCount,
    /// Alternating and reverse alternating classes are counted by the
    /// boustrophedon numbers.
    AlternatingEulerCount,
}

/// What one registry row checks.
#[derive(Clone, Copy, Debug)]
enum IdentitySpec {
    Grid {
        grid: GridKind,
        assigns: AssignsKind,
        closed: ClosedKind,
    },
    Structural(StructuralKind),
    /// Two assignments expected to differ somewhere in the domain.
    Negative {
        domain: SearchDomain,
        lhs: &'static str,
        rhs: &'static str,
        r: u32,
    },
}

/// One registered, machine-checkable claim.
pub struct Identity {
    /// Stable registry id, the `check` command token.
    pub id: &'static str,
    /// One-line statement of the claim.
    pub summary: &'static str,
    spec: IdentitySpec,
}

impl Identity {
    /// Whether the row asserts an inequality (searched, warn when no
    /// witness is found) rather than an equality (checked cell by cell).
    pub fn negative(&self) -> bool {
        matches!(self.spec, IdentitySpec::Negative { .. })
    }
}

const MAHONIAN_TOKENS: &[&str] = &[
    "inv", "maj", "den", "mak", "mad", "inv_r", "rmaj", "rden",
];
const MAHONIAN_TOKENS_WITH_STAT: &[&str] = &[
    "inv", "maj", "den", "mak", "mad", "stat", "inv_r", "rmaj", "rden",
];
const INVERSE_FOUR_TOKENS: &[&str] = &["inv", "imaj", "imak", "iinv_r"];
const INVERSE_FIVE_TOKENS: &[&str] = &["inv", "imaj", "imak", "iinv_r", "istat"];
const EULER_MAHONIAN_PAIRS: &[(&str, &str)] = &[("des", "maj"), ("exc", "den"), ("des", "mak")];
const R_EULER_MAHONIAN_PAIRS: &[(&str, &str)] = &[("rdes", "rmaj"), ("rexc", "rden")];
const MAHONIAN_RLWMIN_PAIRS: &[(&str, &str)] = &[
    ("inv", "rlwmin"),
    ("maj", "rlwmin"),
    ("den", "rlwmin"),
    ("mak", "rlwmin"),
    ("mad", "rlwmin"),
    ("inv_r", "rlwmin"),
    ("rmaj", "rlwmin"),
    ("rden", "rlwmin"),
];
const MAHONIAN_RLMIN_PAIRS: &[(&str, &str)] = &[
    ("inv", "rlmin"),
    ("maj", "rlmin"),
    ("den", "rlmin"),
    ("mak", "rlmin"),
    ("mad", "rlmin"),
    ("inv_r", "rlmin"),
    ("rmaj", "rlmin"),
    ("rden", "rlmin"),
];
const INVERSE_LRMAX_PAIRS: &[(&str, &str)] = &[
    ("inv", "lrmax"),
    ("imaj", "lrmax"),
    ("imak", "lrmax"),
    ("iinv_r", "lrmax"),
];
const RLWMIN_TRIPLES: &[(&str, &str, &str)] = &[
    ("rlwmin", "des", "maj"),
    ("rlwmin", "exc", "den"),
    ("rlwmin", "des", "mak"),
];
const RLWMIN_R_TRIPLES: &[(&str, &str, &str)] = &[
    ("rlwmin", "rdes", "rmaj"),
    ("rlwmin", "rexc", "rden"),
];
const RLMIN_TRIPLES: &[(&str, &str, &str)] = &[
    ("rlmin", "des", "maj"),
    ("rlmin", "exc", "den"),
    ("rlmin", "des", "mak"),
];
const RLMIN_R_TRIPLES: &[(&str, &str, &str)] = &[
    ("rlmin", "rdes", "rmaj"),
    ("rlmin", "rexc", "rden"),
];
const LRMAX_DES_TRIPLES: &[(&str, &str, &str)] = &[
    ("lrmax", "des", "inv"),
    ("lrmax", "des", "imaj"),
    ("lrmax", "des", "imak"),
    ("lrmax", "des", "iinv_r"),
];

const REGISTRY: &[Identity] = &[
    Identity {
        id: "mahonian-words",
        summary: "each listed statistic generates the Gaussian multinomial over the words of every content",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByContent,
            assigns: AssignsKind::EachQ(MAHONIAN_TOKENS_WITH_STAT),
            closed: ClosedKind::QMultinomial,
        },
    },
    Identity {
        id: "fixed-rlwmin-mahonian",
        summary: "the eight Mahonian statistics share one distribution on every class with a fixed weak right-to-left minimum multiset",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByRlwminClass,
            assigns: AssignsKind::EachQ(MAHONIAN_TOKENS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "fixed-rlwmin-euler-mahonian",
        summary: "the three descent/excedance pairs share one joint distribution on every fixed weak-minima class",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByRlwminClass,
            assigns: AssignsKind::PairsTQ(EULER_MAHONIAN_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "fixed-rlwmin-r-euler-mahonian",
        summary: "the two r-descent/r-excedance pairs share one joint distribution on every fixed weak-minima class",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByRlwminClass,
            assigns: AssignsKind::PairsTQ(R_EULER_MAHONIAN_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "words-rlwmin-mahonian-pairs",
        summary: "pairing each Mahonian statistic with the weak-minima count gives one joint distribution on the words of every content",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByContent,
            assigns: AssignsKind::PairsQX(MAHONIAN_RLWMIN_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "words-rlwmin-euler-mahonian-triples",
        summary: "the weak-minima count joins the three descent/excedance pairs into equidistributed triples on every content",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByContent,
            assigns: AssignsKind::TriplesXTQ(RLWMIN_TRIPLES),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "words-rlwmin-r-euler-mahonian-triples",
        summary: "the weak-minima count joins the two r-pairs into equidistributed triples on every content",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByContent,
            assigns: AssignsKind::TriplesXTQ(RLWMIN_R_TRIPLES),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "fixed-rlmin-mahonian",
        summary: "the eight Mahonian statistics share one distribution on every class with a fixed strict right-to-left minimum set",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByRlminClass,
            assigns: AssignsKind::EachQ(MAHONIAN_TOKENS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "fixed-rlmin-euler-mahonian",
        summary: "the three descent/excedance pairs share one joint distribution on every fixed strict-minima class",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByRlminClass,
            assigns: AssignsKind::PairsTQ(EULER_MAHONIAN_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "fixed-rlmin-r-euler-mahonian",
        summary: "the two r-pairs share one joint distribution on every fixed strict-minima class",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByRlminClass,
            assigns: AssignsKind::PairsTQ(R_EULER_MAHONIAN_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "words-rlmin-mahonian-pairs",
        summary: "pairing each Mahonian statistic with the strict-minima count gives one joint distribution on the words of every content",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByContent,
            assigns: AssignsKind::PairsQX(MAHONIAN_RLMIN_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "words-rlmin-euler-mahonian-triples",
        summary: "the strict-minima count joins the three descent/excedance pairs into equidistributed triples on every content",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByContent,
            assigns: AssignsKind::TriplesXTQ(RLMIN_TRIPLES),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "words-rlmin-r-euler-mahonian-triples",
        summary: "the strict-minima count joins the two r-pairs into equidistributed triples on every content",
        spec: IdentitySpec::Grid {
            grid: GridKind::WordsByContent,
            assigns: AssignsKind::TriplesXTQ(RLMIN_R_TRIPLES),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "mahonian-stirling-product",
        summary: "each Mahonian statistic paired with the strict-minima count generates the rising product over all permutations",
        spec: IdentitySpec::Grid {
            grid: GridKind::Permutations,
            assigns: AssignsKind::PairsQX(MAHONIAN_RLMIN_PAIRS),
            closed: ClosedKind::MahonianStirling,
        },
    },
    Identity {
        id: "des-subset-count",
        summary: "the bounded-descent family is counted by the multinomial of the descent set gaps",
        spec: IdentitySpec::Structural(StructuralKind::DesSubsetCount),
    },
    Identity {
        id: "des-equal-count",
        summary: "the exact-descent family is counted by the binomial determinant of the descent set",
        spec: IdentitySpec::Structural(StructuralKind::DesEqualCount),
    },
    Identity {
        id: "des-subset-inv",
        summary: "inversions generate the Gaussian multinomial over the bounded-descent family",
        spec: IdentitySpec::Grid {
            grid: GridKind::DesSubset,
            assigns: AssignsKind::EachQ(&["inv"]),
            closed: ClosedKind::QMultinomial,
        },
    },
    Identity {
        id: "des-equal-inv",
        summary: "inversions generate the Gaussian binomial determinant over the exact-descent family",
        spec: IdentitySpec::Grid {
            grid: GridKind::DesEqual,
            assigns: AssignsKind::EachQ(&["inv"]),
            closed: ClosedKind::Determinant,
        },
    },
    Identity {
        id: "des-equal-inv-imaj",
        summary: "inversions and the inverse major index agree on every exact-descent family",
        spec: IdentitySpec::Grid {
            grid: GridKind::DesEqual,
            assigns: AssignsKind::EachQ(&["inv", "imaj"]),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "des-subset-five-mahonian",
        summary: "five inverse-side Mahonian statistics share the Gaussian multinomial on every bounded-descent family",
        spec: IdentitySpec::Grid {
            grid: GridKind::DesSubset,
            assigns: AssignsKind::EachQ(INVERSE_FIVE_TOKENS),
            closed: ClosedKind::QMultinomial,
        },
    },
    Identity {
        id: "des-equal-five-mahonian",
        summary: "five inverse-side Mahonian statistics share the binomial determinant on every exact-descent family",
        spec: IdentitySpec::Grid {
            grid: GridKind::DesEqual,
            assigns: AssignsKind::EachQ(INVERSE_FIVE_TOKENS),
            closed: ClosedKind::Determinant,
        },
    },
    Identity {
        id: "des-subset-fixed-plrmax",
        summary: "four inverse-side Mahonian statistics stay equidistributed when the maxima positions are fixed within a bounded-descent family",
        spec: IdentitySpec::Grid {
            grid: GridKind::DesSubsetByPlrmax,
            assigns: AssignsKind::EachQ(INVERSE_FOUR_TOKENS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "des-equal-fixed-plrmax",
        summary: "four inverse-side Mahonian statistics stay equidistributed when the maxima positions are fixed within an exact-descent family",
        spec: IdentitySpec::Grid {
            grid: GridKind::DesEqualByPlrmax,
            assigns: AssignsKind::EachQ(INVERSE_FOUR_TOKENS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "des-subset-lrmax-pairs",
        summary: "pairing the four statistics with the maxima count gives one joint distribution on every bounded-descent family",
        spec: IdentitySpec::Grid {
            grid: GridKind::DesSubset,
            assigns: AssignsKind::PairsQX(INVERSE_LRMAX_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "des-equal-lrmax-pairs",
        summary: "pairing the four statistics with the maxima count gives one joint distribution on every exact-descent family",
        spec: IdentitySpec::Grid {
            grid: GridKind::DesEqual,
            assigns: AssignsKind::PairsQX(INVERSE_LRMAX_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "perms-lrmax-des-triples",
        summary: "the maxima count, descent count, and each of the four statistics form equidistributed triples over all permutations",
        spec: IdentitySpec::Grid {
            grid: GridKind::Permutations,
            assigns: AssignsKind::TriplesXTQ(LRMAX_DES_TRIPLES),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "partition-words-decomposition",
        summary: "partition word representations are exactly the words whose weak-minima multiset has full support",
        spec: IdentitySpec::Structural(StructuralKind::PartitionWordsUnion),
    },
    Identity {
        id: "partition-words-mahonian",
        summary: "the eight Mahonian statistics share one distribution on the partition words of every shape",
        spec: IdentitySpec::Grid {
            grid: GridKind::PartitionWords,
            assigns: AssignsKind::EachQ(MAHONIAN_TOKENS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "partition-words-euler-mahonian",
        summary: "the three descent/excedance pairs share one joint distribution on the partition words of every shape",
        spec: IdentitySpec::Grid {
            grid: GridKind::PartitionWords,
            assigns: AssignsKind::PairsTQ(EULER_MAHONIAN_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "partition-words-r-euler-mahonian",
        summary: "the two r-pairs share one joint distribution on the partition words of every shape",
        spec: IdentitySpec::Grid {
            grid: GridKind::PartitionWords,
            assigns: AssignsKind::PairsTQ(R_EULER_MAHONIAN_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "partition-words-rlwmin-pairs",
        summary: "pairing each Mahonian statistic with the weak-minima count gives one joint distribution on the partition words of every shape",
        spec: IdentitySpec::Grid {
            grid: GridKind::PartitionWords,
            assigns: AssignsKind::PairsQX(MAHONIAN_RLWMIN_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "partition-words-rlwmin-triples",
        summary: "the weak-minima count joins the three descent/excedance pairs into equidistributed triples on the partition words of every shape",
        spec: IdentitySpec::Grid {
            grid: GridKind::PartitionWords,
            assigns: AssignsKind::TriplesXTQ(RLWMIN_TRIPLES),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "partition-words-rlwmin-r-triples",
        summary: "the weak-minima count joins the two r-pairs into equidistributed triples on the partition words of every shape",
        spec: IdentitySpec::Grid {
            grid: GridKind::PartitionWords,
            assigns: AssignsKind::TriplesXTQ(RLWMIN_R_TRIPLES),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "partition-perms-decomposition",
        summary: "partition permutation representations are exactly the bounded-descent permutations whose maxima positions contain the part boundaries",
        spec: IdentitySpec::Structural(StructuralKind::PartitionPermsUnion),
    },
    Identity {
        id: "partition-perms-mahonian",
        summary: "four inverse-side Mahonian statistics share one distribution on the partition permutations of every shape",
        spec: IdentitySpec::Grid {
            grid: GridKind::PartitionPerms,
            assigns: AssignsKind::EachQ(INVERSE_FOUR_TOKENS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "partition-perms-lrmax-pairs",
        summary: "pairing the four statistics with the maxima count gives one joint distribution on the partition permutations of every shape",
        spec: IdentitySpec::Grid {
            grid: GridKind::PartitionPerms,
            assigns: AssignsKind::PairsQX(INVERSE_LRMAX_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "avoider-count-product",
        summary: "both avoidance classes of every content are counted by the product of the prefix sums plus one",
        spec: IdentitySpec::Structural(StructuralKind::AvoiderProductCount),
    },
    Identity {
        id: "quasi-increasing-decomposition",
        summary: "221-avoiding words are exactly the weak-minima classes containing every repeated occurrence of each letter above the smallest",
        spec: IdentitySpec::Structural(StructuralKind::QuasiIncreasingUnion),
    },
    Identity {
        id: "quasi-increasing-mahonian-product",
        summary: "the eight Mahonian statistics generate the Gaussian prefix-sum product on the 221-avoiding words of every content",
        spec: IdentitySpec::Grid {
            grid: GridKind::QuasiIncreasingWords,
            assigns: AssignsKind::EachQ(MAHONIAN_TOKENS),
            closed: ClosedKind::QuasiProduct,
        },
    },
    Identity {
        id: "quasi-increasing-euler-mahonian",
        summary: "the three descent/excedance pairs share one joint distribution on the 221-avoiding words of every content",
        spec: IdentitySpec::Grid {
            grid: GridKind::QuasiIncreasingWords,
            assigns: AssignsKind::PairsTQ(EULER_MAHONIAN_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "quasi-increasing-r-euler-mahonian",
        summary: "the two r-pairs share one joint distribution on the 221-avoiding words of every content",
        spec: IdentitySpec::Grid {
            grid: GridKind::QuasiIncreasingWords,
            assigns: AssignsKind::PairsTQ(R_EULER_MAHONIAN_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "stirling-quasi-des",
        summary: "descent counts are equidistributed between the 212-avoiding and 221-avoiding words of a content, and satisfy the insertion recurrence",
        spec: IdentitySpec::Grid {
            grid: GridKind::StirlingVsQuasiIncreasing,
            assigns: AssignsKind::EachQ(&["des"]),
            closed: ClosedKind::DescentRecurrence,
        },
    },
    Identity {
        id: "stirling-quasi-lrmin",
        summary: "left-to-right minimum counts are equidistributed between the two avoidance classes, and satisfy the insertion recurrence",
        spec: IdentitySpec::Grid {
            grid: GridKind::StirlingVsQuasiIncreasing,
            assigns: AssignsKind::EachQ(&["lrmin"]),
            closed: ClosedKind::LrminRecurrence,
        },
    },
    Identity {
        id: "stirling-quasi-lrmax",
        summary: "left-to-right maximum counts are equidistributed between the two avoidance classes of every content",
        spec: IdentitySpec::Grid {
            grid: GridKind::StirlingVsQuasiIncreasing,
            assigns: AssignsKind::EachQ(&["lrmax"]),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "alternating-five-mahonian",
        summary: "five inverse-side Mahonian statistics share one distribution on the alternating permutations of every size",
        spec: IdentitySpec::Grid {
            grid: GridKind::Alternating,
            assigns: AssignsKind::EachQ(INVERSE_FIVE_TOKENS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "reverse-alternating-five-mahonian",
        summary: "five inverse-side Mahonian statistics share one distribution on the reverse alternating permutations of every size",
        spec: IdentitySpec::Grid {
            grid: GridKind::ReverseAlternating,
            assigns: AssignsKind::EachQ(INVERSE_FIVE_TOKENS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "alternating-fixed-plrmax",
        summary: "four statistics stay equidistributed on alternating permutations with fixed maxima positions",
        spec: IdentitySpec::Grid {
            grid: GridKind::AlternatingByPlrmax,
            assigns: AssignsKind::EachQ(INVERSE_FOUR_TOKENS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "reverse-alternating-fixed-plrmax",
        summary: "four statistics stay equidistributed on reverse alternating permutations with fixed maxima positions",
        spec: IdentitySpec::Grid {
            grid: GridKind::ReverseAlternatingByPlrmax,
            assigns: AssignsKind::EachQ(INVERSE_FOUR_TOKENS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "alternating-lrmax-pairs",
        summary: "pairing the four statistics with the maxima count gives one joint distribution on alternating permutations",
        spec: IdentitySpec::Grid {
            grid: GridKind::Alternating,
            assigns: AssignsKind::PairsQX(INVERSE_LRMAX_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "reverse-alternating-lrmax-pairs",
        summary: "pairing the four statistics with the maxima count gives one joint distribution on reverse alternating permutations",
        spec: IdentitySpec::Grid {
            grid: GridKind::ReverseAlternating,
            assigns: AssignsKind::PairsQX(INVERSE_LRMAX_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "alternating-euler-count",
        summary: "alternating and reverse alternating permutations are counted by the boustrophedon numbers",
        spec: IdentitySpec::Structural(StructuralKind::AlternatingEulerCount),
    },
    Identity {
        id: "runs-decomposition",
        summary: "the permutations with a given run count are the union of the exact-descent families selected by segment counts and endpoints",
        spec: IdentitySpec::Structural(StructuralKind::RunsUnion),
    },
    Identity {
        id: "runs-five-mahonian",
        summary: "five inverse-side Mahonian statistics share one distribution on the permutations with any fixed run count",
        spec: IdentitySpec::Grid {
            grid: GridKind::Runs,
            assigns: AssignsKind::EachQ(INVERSE_FIVE_TOKENS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "runs-fixed-plrmax",
        summary: "four statistics stay equidistributed when maxima positions are fixed within a run-count class",
        spec: IdentitySpec::Grid {
            grid: GridKind::RunsByPlrmax,
            assigns: AssignsKind::EachQ(INVERSE_FOUR_TOKENS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "runs-lrmax-pairs",
        summary: "pairing the four statistics with the maxima count gives one joint distribution on every run-count class",
        spec: IdentitySpec::Grid {
            grid: GridKind::Runs,
            assigns: AssignsKind::PairsQX(INVERSE_LRMAX_PAIRS),
            closed: ClosedKind::None,
        },
    },
    Identity {
        id: "stat-not-on-fixed-rlwmin",
        summary: "the pattern statistic is not equidistributed with inversions on some fixed weak-minima class",
        spec: IdentitySpec::Negative {
            domain: SearchDomain::RlwminClasses,
            lhs: "stat:q",
            rhs: "inv:q",
            r: 1,
        },
    },
    Identity {
        id: "iden-not-on-fixed-des",
        summary: "the inverse Denert statistic is not equidistributed with inversions on some descent-constrained family",
        spec: IdentitySpec::Negative {
            domain: SearchDomain::DesFamilies,
            lhs: "iden:q",
            rhs: "inv:q",
            r: 1,
        },
    },
    Identity {
        id: "imad-not-on-fixed-des",
        summary: "the inverse mad statistic is not equidistributed with inversions on some descent-constrained family",
        spec: IdentitySpec::Negative {
            domain: SearchDomain::DesFamilies,
            lhs: "imad:q",
            rhs: "inv:q",
            r: 1,
        },
    },
    Identity {
        id: "irmaj-not-on-fixed-des",
        summary: "the inverse r-major index (r = 2) is not equidistributed with inversions on some descent-constrained family",
        spec: IdentitySpec::Negative {
            domain: SearchDomain::DesFamilies,
            lhs: "irmaj:q",
            rhs: "inv:q",
            r: 2,
        },
    },
    Identity {
        id: "irden-not-on-fixed-des",
        summary: "the inverse r-Denert statistic (r = 2) is not equidistributed with inversions on some descent-constrained family",
        spec: IdentitySpec::Negative {
            domain: SearchDomain::DesFamilies,
            lhs: "irden:q",
            rhs: "inv:q",
            r: 2,
        },
    },
    Identity {
        id: "istat-not-on-partition-perms",
        summary: "the inverse pattern statistic is not equidistributed with inversions on some partition permutation family",
        spec: IdentitySpec::Negative {
            domain: SearchDomain::PartitionPerms,
            lhs: "istat:q",
            rhs: "inv:q",
            r: 1,
        },
    },
    Identity {
        id: "iden-not-on-partition-perms",
        summary: "the inverse Denert statistic is not equidistributed with inversions on some partition permutation family",
        spec: IdentitySpec::Negative {
            domain: SearchDomain::PartitionPerms,
            lhs: "iden:q",
            rhs: "inv:q",
            r: 1,
        },
    },
    Identity {
        id: "irmaj-not-on-partition-perms",
        summary: "the inverse r-major index (r = 2) is not equidistributed with inversions on some partition permutation family",
        spec: IdentitySpec::Negative {
            domain: SearchDomain::PartitionPerms,
            lhs: "irmaj:q",
            rhs: "inv:q",
            r: 2,
        },
    },
    Identity {
        id: "imad-not-on-partition-perms",
        summary: "the inverse mad statistic is not equidistributed with inversions on some partition permutation family",
        spec: IdentitySpec::Negative {
            domain: SearchDomain::PartitionPerms,
            lhs: "imad:q",
            rhs: "inv:q",
            r: 1,
        },
    },
    Identity {
        id: "stirling-des-exc-differ",
        summary: "descents and excedances are not equidistributed on some 212-avoiding class",
        spec: IdentitySpec::Negative {
            domain: SearchDomain::StirlingWords,
            lhs: "des:q",
            rhs: "exc:q",
            r: 1,
        },
    },
    Identity {
        id: "stirling-lrmin-lrmax-differ",
        summary: "left-to-right minimum and maximum counts are not equidistributed on some 212-avoiding class",
        spec: IdentitySpec::Negative {
            domain: SearchDomain::StirlingWords,
            lhs: "lrmin:q",
            rhs: "lrmax:q",
            r: 1,
        },
    },
    Identity {
        id: "lrmax-rlmin-triples-differ",
        summary: "the maxima-count triple with the inverse major index differs from the minima-count triple with the major index on some permutation size",
        spec: IdentitySpec::Negative {
            domain: SearchDomain::Permutations,
            lhs: "lrmax:x,des:t,imaj:q",
            rhs: "rlmin:x,des:t,maj:q",
            r: 1,
        },
    },
];

/// The full identity registry, in report order.
pub fn registry() -> &'static [Identity] {
    REGISTRY
}

/// All registered identity ids, in report order.
pub fn identity_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|i| i.id).collect()
}

/// Checks one registered identity over its grid up to `n_max`, using
/// the r values in `r_set` for r-parameterized statistics.
pub fn check_identity(id: &str, n_max: usize, r_set: &[u32]) -> Result<CheckReport, Error> {
    let identity = REGISTRY
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    let started = Instant::now();
    let cells = build_cells(&identity.spec, n_max, r_set)?;
    let outcomes: Vec<CellOutcome> = cells.par_iter().map(evaluate_cell).collect();
    Ok(aggregate(identity, &cells, outcomes, started))
}

/// Checks every registered identity at the same bounds.
pub fn check_all(n_max: usize, r_set: &[u32]) -> Result<Vec<CheckReport>, Error> {
    REGISTRY
        .iter()
        .map(|i| check_identity(i.id, n_max, r_set))
        .collect()
}

fn aggregate(
    identity: &Identity,
    cells: &[Cell],
    outcomes: Vec<CellOutcome>,
    started: Instant,
) -> CheckReport {
    let negative = identity.negative();
    let mut witness = None;
    let mut grid = Vec::with_capacity(cells.len());
    for (cell, outcome) in cells.iter().zip(outcomes) {
        if negative {
            // A negative row cannot fail cell by cell; a differing cell
            // is the sought witness.
            grid.push(CellReport {
                cell: cell.label.clone(),
                pass: true,
            });
            if witness.is_none() && !outcome.pass {
                witness = outcome.witness;
            }
        } else {
            grid.push(CellReport {
                cell: cell.label.clone(),
                pass: outcome.pass,
            });
            if witness.is_none() && !outcome.pass {
                witness = outcome.witness;
            }
        }
    }
    let status = if negative {
        if witness.is_some() {
            CheckStatus::Pass
        } else {
            CheckStatus::Warn
        }
    } else if witness.is_some() {
        CheckStatus::Fail
    } else {
        CheckStatus::Pass
    };
    CheckReport {
        identity: identity.id.to_string(),
        grid,
        status,
        witness,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

// ---------------------------------------------------------------------
// Grid construction
// ---------------------------------------------------------------------

fn ones(n: usize) -> Composition {
    Composition::new(vec![1; n]).expect("n >= 1")
}

fn alpha_grid(n_max: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(compositions(n));
    }
    out
}

/// Subsets of [n-1], lexicographically ordered as ascending lists.
fn descent_set_grid(n: usize) -> Vec<Vec<usize>> {
    let values: Vec<usize> = (1..n).collect();
    let mut sets = subsets(&values);
    sets.sort();
    sets
}

fn word_family(alpha: &Composition) -> Vec<Word> {
    gen_words(alpha).collect()
}

fn perm_words(perms: Vec<crate::word::Permutation>) -> Vec<Word> {
    perms.into_iter().map(Word::from).collect()
}

fn group_by_rlwmin(words: Vec<Word>) -> BTreeMap<LetterMultiset, Vec<Word>> {
    let mut map: BTreeMap<LetterMultiset, Vec<Word>> = BTreeMap::new();
    for w in words {
        map.entry(minima_maxima(&w).rlwmin).or_default().push(w);
    }
    map
}

fn group_by_rlmin(words: Vec<Word>) -> BTreeMap<Vec<u32>, Vec<Word>> {
    let mut map: BTreeMap<Vec<u32>, Vec<Word>> = BTreeMap::new();
    for w in words {
        map.entry(minima_maxima(&w).rlmin).or_default().push(w);
    }
    map
}

fn group_by_plrmax(words: Vec<Word>) -> BTreeMap<Vec<usize>, Vec<Word>> {
    let mut map: BTreeMap<Vec<usize>, Vec<Word>> = BTreeMap::new();
    for w in words {
        map.entry(plrmax(&w)).or_default().push(w);
    }
    map
}

fn fmt_positions(p: &[usize]) -> String {
    let items: Vec<String> = p.iter().map(|v| v.to_string()).collect();
    items.join(",")
}

/// A grid cell frame: a label, one or more member families (tagged when
/// there is more than one), and the parameters closed forms need.
struct Frame {
    label: String,
    families: Vec<(Option<String>, Members)>,
    ctx: FrameCtx,
}

enum FrameCtx {
    Alpha(Composition),
    DesSet { n: usize, s: Vec<usize> },
    Size(usize),
    None,
}

impl Frame {
    fn single(label: String, members: Vec<Word>, ctx: FrameCtx) -> Frame {
        Frame {
            label,
            families: vec![(None, Arc::new(members))],
            ctx,
        }
    }
}

fn grid_frames(grid: GridKind, n_max: usize) -> Vec<Frame> {
    let mut frames = Vec::new();
    match grid {
        GridKind::WordsByContent => {
            for alpha in alpha_grid(n_max) {
                let spec = FamilySpec::Words {
                    alpha: alpha.clone(),
                };
                frames.push(Frame::single(
                    spec.to_string(),
                    word_family(&alpha),
                    FrameCtx::Alpha(alpha),
                ));
            }
        }
        GridKind::WordsByRlwminClass => {
            for alpha in alpha_grid(n_max) {
                for (r, class) in group_by_rlwmin(word_family(&alpha)) {
                    let spec = FamilySpec::WordsFixedRlwmin {
                        alpha: alpha.clone(),
                        r,
                    };
                    frames.push(Frame::single(spec.to_string(), class, FrameCtx::None));
                }
            }
        }
        GridKind::WordsByRlminClass => {
            for alpha in alpha_grid(n_max) {
                for (d, class) in group_by_rlmin(word_family(&alpha)) {
                    let spec = FamilySpec::WordsFixedRlmin {
                        alpha: alpha.clone(),
                        d,
                    };
                    frames.push(Frame::single(spec.to_string(), class, FrameCtx::None));
                }
            }
        }
        GridKind::Permutations => {
            for n in 1..=n_max {
                let alpha = ones(n);
                frames.push(Frame::single(
                    FamilySpec::Words {
                        alpha: alpha.clone(),
                    }
                    .to_string(),
                    word_family(&alpha),
                    FrameCtx::Size(n),
                ));
            }
        }
        GridKind::DesSubset | GridKind::DesEqual => {
            let subset = grid == GridKind::DesSubset;
            for n in 1..=n_max {
                for s in descent_set_grid(n) {
                    let members = if subset {
                        perm_words(gen_des_subseteq(n, &s))
                    } else {
                        perm_words(gen_des_eq(n, &s))
                    };
                    let spec = if subset {
                        FamilySpec::DesSubseteq { n, s: s.clone() }
                    } else {
                        FamilySpec::DesEq { n, s: s.clone() }
                    };
                    frames.push(Frame::single(
                        spec.to_string(),
                        members,
                        FrameCtx::DesSet { n, s },
                    ));
                }
            }
        }
        GridKind::DesSubsetByPlrmax | GridKind::DesEqualByPlrmax => {
            let subset = grid == GridKind::DesSubsetByPlrmax;
            for n in 1..=n_max {
                for s in descent_set_grid(n) {
                    let members = if subset {
                        perm_words(gen_des_subseteq(n, &s))
                    } else {
                        perm_words(gen_des_eq(n, &s))
                    };
                    for (p, class) in group_by_plrmax(members) {
                        let spec = if subset {
                            FamilySpec::DesSubseteqP {
                                n,
                                s: s.clone(),
                                p,
                            }
                        } else {
                            FamilySpec::DesEqP {
                                n,
                                s: s.clone(),
                                p,
                            }
                        };
                        frames.push(Frame::single(spec.to_string(), class, FrameCtx::None));
                    }
                }
            }
        }
        GridKind::PartitionWords | GridKind::PartitionPerms => {
            let words = grid == GridKind::PartitionWords;
            for alpha in alpha_grid(n_max) {
                let spec = if words {
                    FamilySpec::SetPartitionWord {
                        alpha: alpha.clone(),
                    }
                } else {
                    FamilySpec::SetPartitionPerm {
                        alpha: alpha.clone(),
                    }
                };
                frames.push(Frame::single(
                    spec.to_string(),
                    spec.members(),
                    FrameCtx::Alpha(alpha),
                ));
            }
        }
        GridKind::QuasiIncreasingWords => {
            for alpha in alpha_grid(n_max) {
                let spec = FamilySpec::Avoid221 {
                    alpha: alpha.clone(),
                };
                frames.push(Frame::single(
                    spec.to_string(),
                    spec.members(),
                    FrameCtx::Alpha(alpha),
                ));
            }
        }
        GridKind::StirlingVsQuasiIncreasing => {
            for alpha in alpha_grid(n_max) {
                let stirling = FamilySpec::Avoid212 {
                    alpha: alpha.clone(),
                };
                let quasi = FamilySpec::Avoid221 {
                    alpha: alpha.clone(),
                };
                frames.push(Frame {
                    label: format!("alpha={}", fmt_positions_u32(alpha.parts())),
                    families: vec![
                        (Some(stirling.to_string()), Arc::new(stirling.members())),
                        (Some(quasi.to_string()), Arc::new(quasi.members())),
                    ],
                    ctx: FrameCtx::Alpha(alpha),
                });
            }
        }
        GridKind::Alternating | GridKind::ReverseAlternating => {
            let reverse = grid == GridKind::ReverseAlternating;
            for n in 1..=n_max {
                let spec = if reverse {
                    FamilySpec::ReverseAlternating { n }
                } else {
                    FamilySpec::Alternating { n }
                };
                frames.push(Frame::single(
                    spec.to_string(),
                    perm_words(gen_alternating(n, reverse)),
                    FrameCtx::Size(n),
                ));
            }
        }
        GridKind::AlternatingByPlrmax | GridKind::ReverseAlternatingByPlrmax => {
            let reverse = grid == GridKind::ReverseAlternatingByPlrmax;
            for n in 1..=n_max {
                let spec = if reverse {
                    FamilySpec::ReverseAlternating { n }
                } else {
                    FamilySpec::Alternating { n }
                };
                for (p, class) in group_by_plrmax(perm_words(gen_alternating(n, reverse))) {
                    frames.push(Frame::single(
                        format!("{spec} plrmax={}", fmt_positions(&p)),
                        class,
                        FrameCtx::None,
                    ));
                }
            }
        }
        GridKind::Runs => {
            for n in 1..=n_max {
                for k in 1..=n.max(2) as u64 {
                    let members = perm_words(gen_alt_runs(n, k));
                    if members.is_empty() {
                        continue;
                    }
                    frames.push(Frame::single(
                        FamilySpec::AltRuns { n, k }.to_string(),
                        members,
                        FrameCtx::None,
                    ));
                }
            }
        }
        GridKind::RunsByPlrmax => {
            for n in 1..=n_max {
                for k in 1..=n.max(2) as u64 {
                    let members = perm_words(gen_alt_runs(n, k));
                    if members.is_empty() {
                        continue;
                    }
                    let spec = FamilySpec::AltRuns { n, k };
                    for (p, class) in group_by_plrmax(members) {
                        frames.push(Frame::single(
                            format!("{spec} plrmax={}", fmt_positions(&p)),
                            class,
                            FrameCtx::None,
                        ));
                    }
                }
            }
        }
    }
    frames
}

fn fmt_positions_u32(p: &[u32]) -> String {
    let items: Vec<String> = p.iter().map(|v| v.to_string()).collect();
    items.join(",")
}

/// Expands a token list into equality classes of assignments.
///
/// Every token is parsed once per requested r value; classes that end
/// up identical collapse, and classes that share a common r-free
/// assignment merge (a shared side makes the classes transitively
/// equal). A class that stays r-specific is labeled with its r.
fn expand_assignments(
    kind: AssignsKind,
    r_set: &[u32],
) -> Result<Vec<(Option<u32>, Vec<StatAssignment>)>, Error> {
    let mut groups: Vec<(u32, Vec<StatAssignment>)> = Vec::new();
    for &r in r_set {
        let mut group: Vec<StatAssignment> = Vec::new();
        let push = |sa: StatAssignment, group: &mut Vec<StatAssignment>| {
            if !group.contains(&sa) {
                group.push(sa);
            }
        };
        match kind {
            AssignsKind::EachQ(tokens) => {
                for token in tokens {
                    push(StatAssignment::q(StatName::parse(token, r)?), &mut group);
                }
            }
            AssignsKind::PairsTQ(pairs) => {
                for (t, q) in pairs {
                    push(
                        StatAssignment::tq(StatName::parse(t, r)?, StatName::parse(q, r)?),
                        &mut group,
                    );
                }
            }
            AssignsKind::PairsQX(pairs) => {
                for (q, x) in pairs {
                    push(
                        StatAssignment::qx(StatName::parse(q, r)?, StatName::parse(x, r)?),
                        &mut group,
                    );
                }
            }
            AssignsKind::TriplesXTQ(triples) => {
                for (x, t, q) in triples {
                    push(
                        StatAssignment::tqx(
                            StatName::parse(t, r)?,
                            StatName::parse(q, r)?,
                            StatName::parse(x, r)?,
                        ),
                        &mut group,
                    );
                }
            }
        }
        if !groups.iter().any(|(_, g)| *g == group) {
            groups.push((r, group));
        }
    }
    if groups.len() <= 1 {
        return Ok(groups.into_iter().map(|(_, g)| (None, g)).collect());
    }
    // Merge classes linked by a shared assignment.
    let shared = groups[0]
        .1
        .iter()
        .any(|sa| groups[1..].iter().all(|(_, g)| g.contains(sa)));
    if shared {
        let mut merged: Vec<StatAssignment> = Vec::new();
        for (_, g) in groups {
            for sa in g {
                if !merged.contains(&sa) {
                    merged.push(sa);
                }
            }
        }
        Ok(vec![(None, merged)])
    } else {
        Ok(groups.into_iter().map(|(r, g)| (Some(r), g)).collect())
    }
}

fn q_multinomial_of_s(n: usize, s: &[usize]) -> Result<MultiPoly, Error> {
    let alpha = Composition::from_partial_sums(n, s)?;
    q_multinomial(n, &alpha)
}

fn determinant_of_s(n: usize, s: &[usize]) -> Result<MultiPoly, Error> {
    let mut ext = Vec::with_capacity(s.len() + 2);
    ext.push(0usize);
    ext.extend_from_slice(s);
    ext.push(n);
    let dim = s.len() + 1;
    let mut rows = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = Vec::with_capacity(dim);
        for j in 0..dim {
            row.push(q_binomial(
                n as i64 - ext[i] as i64,
                ext[j + 1] as i64 - ext[i] as i64,
            ));
        }
        rows.push(row);
    }
    Ok(det_poly(&PolyMatrix::new(rows)?))
}

fn quasi_product(alpha: &Composition) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for s in alpha.proper_partial_sums() {
        acc = acc.mul(&q_int(s as u32 + 1));
    }
    acc
}

/// Descent counts on either avoidance class by the insertion
/// recurrence: the new largest letter keeps the descent count when it
/// lands on a descent or at the end, and adds one elsewhere.
fn descent_recurrence(alpha: &Composition) -> Vec<BigInt> {
    let parts = alpha.parts();
    let mut counts = vec![BigInt::one()];
    let mut prefix: u64 = 0;
    for (idx, &part) in parts.iter().enumerate() {
        if idx == 0 {
            prefix = part as u64;
            continue;
        }
        let mut next = Vec::with_capacity(counts.len() + 1);
        for i in 0..=counts.len() {
            let mut v = BigInt::zero();
            if i >= 1 {
                v += BigInt::from(prefix + 1 - i as u64) * &counts[i - 1];
            }
            if i < counts.len() {
                v += BigInt::from(i as u64 + 1) * &counts[i];
            }
            next.push(v);
        }
        counts = next;
        prefix += part as u64;
    }
    counts
}

/// Left-to-right minimum counts by the insertion recurrence: the new
/// block adds a minimum only when it lands at the front. Index i holds
/// the count of members with i+1 minima.
fn lrmin_recurrence(alpha: &Composition) -> Vec<BigInt> {
    let parts = alpha.parts();
    let mut counts = vec![BigInt::one()];
    let mut prefix: u64 = 0;
    for (idx, &part) in parts.iter().enumerate() {
        if idx == 0 {
            prefix = part as u64;
            continue;
        }
        let mut next = Vec::with_capacity(counts.len() + 1);
        for i in 0..=counts.len() {
            let mut v = BigInt::zero();
            if i >= 1 {
                v += &counts[i - 1];
            }
            if i < counts.len() {
                v += BigInt::from(prefix) * &counts[i];
            }
            next.push(v);
        }
        counts = next;
        prefix += part as u64;
    }
    counts
}

fn counts_to_poly(counts: &[BigInt], offset: u32) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for (i, c) in counts.iter().enumerate() {
        acc.add_term((0, i as u32 + offset, 0), c);
    }
    acc
}

fn closed_form(kind: ClosedKind, ctx: &FrameCtx) -> Result<Option<(String, MultiPoly)>, Error> {
    Ok(match (kind, ctx) {
        (ClosedKind::None, _) => None,
        (ClosedKind::QMultinomial, FrameCtx::Alpha(alpha)) => Some((
            "q-multinomial".to_string(),
            q_multinomial(alpha.n(), alpha)?,
        )),
        (ClosedKind::QMultinomial, FrameCtx::DesSet { n, s }) => {
            Some(("q-multinomial".to_string(), q_multinomial_of_s(*n, s)?))
        }
        (ClosedKind::Determinant, FrameCtx::DesSet { n, s }) => Some((
            "q-binomial determinant".to_string(),
            determinant_of_s(*n, s)?,
        )),
        (ClosedKind::MahonianStirling, FrameCtx::Size(n)) => Some((
            "rising product".to_string(),
            mahonian_stirling_product(*n),
        )),
        (ClosedKind::QuasiProduct, FrameCtx::Alpha(alpha)) => Some((
            "prefix-sum q-product".to_string(),
            quasi_product(alpha),
        )),
        (ClosedKind::DescentRecurrence, FrameCtx::Alpha(alpha)) => Some((
            "insertion recurrence".to_string(),
            counts_to_poly(&descent_recurrence(alpha), 0),
        )),
        (ClosedKind::LrminRecurrence, FrameCtx::Alpha(alpha)) => Some((
            "insertion recurrence".to_string(),
            counts_to_poly(&lrmin_recurrence(alpha), 1),
        )),
        _ => {
            return Err(Error::UnknownIdentity(
                "closed form incompatible with grid context".to_string(),
            ))
        }
    })
}

fn build_cells(spec: &IdentitySpec, n_max: usize, r_set: &[u32]) -> Result<Vec<Cell>, Error> {
    if r_set.is_empty() || r_set.contains(&0) {
        return Err(Error::InvalidAssignment(
            "r values must be positive and nonempty".to_string(),
        ));
    }
    match spec {
        IdentitySpec::Grid {
            grid,
            assigns,
            closed,
        } => {
            let classes = expand_assignments(*assigns, r_set)?;
            let mut cells = Vec::new();
            for frame in grid_frames(*grid, n_max) {
                let form = closed_form(*closed, &frame.ctx)?;
                for (r, class) in &classes {
                    let label = match r {
                        Some(r) => format!("{} r={r}", frame.label),
                        None => frame.label.clone(),
                    };
                    let mut sides = Vec::new();
                    for (tag, members) in &frame.families {
                        for sa in class {
                            let side_label = match tag {
                                Some(tag) => format!("{sa} on {tag}"),
                                None => sa.to_string(),
                            };
                            sides.push(Side {
                                label: side_label,
                                members: members.clone(),
                                assignment: sa.clone(),
                            });
                        }
                    }
                    cells.push(Cell {
                        label,
                        check: CellCheck::Equidistribution {
                            sides,
                            closed_form: form.clone(),
                        },
                    });
                }
            }
            Ok(cells)
        }
        IdentitySpec::Structural(kind) => structural_cells(*kind, n_max),
        IdentitySpec::Negative { domain, lhs, rhs, r } => {
            let lhs = StatAssignment::parse(lhs, *r)?;
            let rhs = StatAssignment::parse(rhs, *r)?;
            let mut cells = Vec::new();
            for (label, members) in domain_instances(*domain, n_max) {
                let members = Arc::new(members);
                cells.push(Cell {
                    label: label.clone(),
                    check: CellCheck::Equidistribution {
                        sides: vec![
                            Side {
                                label: lhs.to_string(),
                                members: members.clone(),
                                assignment: lhs.clone(),
                            },
                            Side {
                                label: rhs.to_string(),
                                members,
                                assignment: rhs.clone(),
                            },
                        ],
                        closed_form: None,
                    },
                });
            }
            Ok(cells)
        }
    }
}

fn structural_cells(kind: StructuralKind, n_max: usize) -> Result<Vec<Cell>, Error> {
    let mut cells = Vec::new();
    match kind {
        StructuralKind::PartitionWordsUnion => {
            for alpha in alpha_grid(n_max) {
                let m = alpha.num_parts() as u32;
                let full_support: Vec<u32> = (1..=m).collect();
                let mut union: Vec<Word> = Vec::new();
                for (r, class) in group_by_rlwmin(word_family(&alpha)) {
                    if r.supp() == full_support {
                        union.extend(class);
                    }
                }
                union.sort();
                let spec = FamilySpec::SetPartitionWord {
                    alpha: alpha.clone(),
                };
                cells.push(Cell {
                    label: spec.to_string(),
                    check: CellCheck::SetEquality {
                        lhs_label: spec.to_string(),
                        lhs: spec.members(),
                        rhs_label: "union of full-support weak-minima classes".to_string(),
                        rhs: union,
                    },
                });
            }
        }
        StructuralKind::PartitionPermsUnion => {
            for alpha in alpha_grid(n_max) {
                let n = alpha.n();
                let s = alpha.proper_partial_sums();
                let mut boundary = s.clone();
                boundary.push(n);
                let mut union: Vec<Word> = Vec::new();
                for (p, class) in group_by_plrmax(perm_words(gen_des_subseteq(n, &s))) {
                    if boundary.iter().all(|b| p.contains(b)) {
                        union.extend(class);
                    }
                }
                union.sort();
                let spec = FamilySpec::SetPartitionPerm {
                    alpha: alpha.clone(),
                };
                cells.push(Cell {
                    label: spec.to_string(),
                    check: CellCheck::SetEquality {
                        lhs_label: spec.to_string(),
                        lhs: spec.members(),
                        rhs_label: "union of boundary-maxima descent families".to_string(),
                        rhs: union,
                    },
                });
            }
        }
        StructuralKind::QuasiIncreasingUnion => {
            for alpha in alpha_grid(n_max) {
                let forced = LetterMultiset::from_counts(
                    alpha
                        .parts()
                        .iter()
                        .enumerate()
                        .skip(1)
                        .map(|(i, &c)| (i as u32 + 1, c - 1)),
                );
                let mut union: Vec<Word> = Vec::new();
                for (r, class) in group_by_rlwmin(word_family(&alpha)) {
                    if forced.is_submultiset_of(&r) {
                        union.extend(class);
                    }
                }
                union.sort();
                let spec = FamilySpec::Avoid221 {
                    alpha: alpha.clone(),
                };
                cells.push(Cell {
                    label: spec.to_string(),
                    check: CellCheck::SetEquality {
                        lhs_label: spec.to_string(),
                        lhs: spec.members(),
                        rhs_label: "union of weak-minima classes with the forced repeats"
                            .to_string(),
                        rhs: union,
                    },
                });
            }
        }
        StructuralKind::RunsUnion => {
            for n in 1..=n_max {
                for k in 1..=n.max(2) as u64 {
                    let direct = perm_words(gen_alt_runs(n, k));
                    let mut union: Vec<Word> = Vec::new();
                    for s in alt_runs_descent_sets(n, k) {
                        union.extend(perm_words(gen_des_eq(n, &s)));
                    }
                    union.sort();
                    if direct.is_empty() && union.is_empty() {
                        continue;
                    }
                    let spec = FamilySpec::AltRuns { n, k };
                    cells.push(Cell {
                        label: spec.to_string(),
                        check: CellCheck::SetEquality {
                            lhs_label: "run-count filter".to_string(),
                            lhs: direct,
                            rhs_label: "union of selected exact-descent families".to_string(),
                            rhs: union,
                        },
                    });
                }
            }
        }
        StructuralKind::DesSubsetCount => {
            for n in 1..=n_max {
                for s in descent_set_grid(n) {
                    let spec = FamilySpec::DesSubseteq { n, s: s.clone() };
                    cells.push(Cell {
                        label: spec.to_string(),
                        check: CellCheck::CountEquality {
                            lhs_label: "family size".to_string(),
                            lhs: BigInt::from(gen_des_subseteq(n, &s).len()),
                            rhs_label: "multinomial".to_string(),
                            rhs: q_multinomial_of_s(n, &s)?.eval_at_one(),
                        },
                    });
                }
            }
        }
        StructuralKind::DesEqualCount => {
            for n in 1..=n_max {
                for s in descent_set_grid(n) {
                    let spec = FamilySpec::DesEq { n, s: s.clone() };
                    cells.push(Cell {
                        label: spec.to_string(),
                        check: CellCheck::CountEquality {
                            lhs_label: "family size".to_string(),
                            lhs: BigInt::from(gen_des_eq(n, &s).len()),
                            rhs_label: "binomial determinant".to_string(),
                            rhs: determinant_of_s(n, &s)?.eval_at_one(),
                        },
                    });
                }
            }
        }
        StructuralKind::AvoiderProductCount => {
            for alpha in alpha_grid(n_max) {
                let mut product = BigInt::one();
                for s in alpha.proper_partial_sums() {
                    product *= BigInt::from(s + 1);
                }
                for pattern in [Pattern::Pat212, Pattern::Pat221] {
                    let spec = match pattern {
                        Pattern::Pat212 => FamilySpec::Avoid212 {
                            alpha: alpha.clone(),
                        },
                        Pattern::Pat221 => FamilySpec::Avoid221 {
                            alpha: alpha.clone(),
                        },
                    };
                    cells.push(Cell {
                        label: spec.to_string(),
                        check: CellCheck::CountEquality {
                            lhs_label: "family size".to_string(),
                            lhs: BigInt::from(gen_avoiders(&alpha, pattern).count()),
                            rhs_label: "prefix-sum product".to_string(),
                            rhs: product.clone(),
                        },
                    });
                }
            }
        }
        StructuralKind::AlternatingEulerCount => {
            let euler = euler_numbers(n_max);
            for n in 1..=n_max {
                for reverse in [false, true] {
                    let spec = if reverse {
                        FamilySpec::ReverseAlternating { n }
                    } else {
                        FamilySpec::Alternating { n }
                    };
                    cells.push(Cell {
                        label: spec.to_string(),
                        check: CellCheck::CountEquality {
                            lhs_label: "family size".to_string(),
                            lhs: BigInt::from(gen_alternating(n, reverse).len()),
                            rhs_label: "boustrophedon number".to_string(),
                            rhs: euler[n].clone(),
                        },
                    });
                }
            }
        }
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::StatName;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn spec(text: &str) -> FamilySpec {
        FamilySpec::parse(text).unwrap()
    }

    fn assignment(text: &str, r: u32) -> StatAssignment {
        StatAssignment::parse(text, r).unwrap()
    }

    #[test]
    fn distribution_matches_small_enumerations() {
        let d = distribution(&spec("words:alpha=3,1"), &assignment("inv:q", 1)).unwrap();
        assert_eq!(d.to_string(), "1 + q + q^2 + q^3");

        let empty = distribution(
            &spec("words:alpha=3,1:rlwmin=2,2"),
            &assignment("inv:q", 1),
        )
        .unwrap();
        assert!(empty.is_zero());

        let ralt = distribution(&spec("ralt:n=4"), &assignment("inv:q", 1)).unwrap();
        assert_eq!(ralt.eval_at_one(), BigInt::from(5));

        let deseq = distribution(&spec("deseq:n=3:S=1"), &assignment("inv:q", 1)).unwrap();
        assert_eq!(deseq.to_string(), "q + q^2");
    }

    #[test]
    fn distribution_is_additive_over_weak_minima_classes() {
        let alpha = comp(&[2, 2]);
        let sa = assignment("des:t,maj:q", 1);
        let whole = distribution_over(word_family(&alpha).iter(), &sa).unwrap();
        let mut sum = MultiPoly::zero();
        for (_, class) in group_by_rlwmin(word_family(&alpha)) {
            sum = sum.add(&distribution_over(class.iter(), &sa).unwrap());
        }
        assert_eq!(whole, sum);
    }

    #[test]
    fn specializing_every_variable_to_one_counts_members() {
        for text in ["words:alpha=2,1,2", "avoid221:alpha=2,2,1", "alt:n=5"] {
            let fam = spec(text);
            let sa = assignment("lrmax:x,des:t,inv:q", 1);
            let d = distribution(&fam, &sa).unwrap();
            assert_eq!(d.eval_at_one(), BigInt::from(fam.members().len()));
        }
    }

    #[test]
    fn assignment_validation_rejects_bad_shapes() {
        assert!(matches!(
            StatAssignment::new(vec![]),
            Err(Error::InvalidAssignment(_))
        ));
        assert!(matches!(
            StatAssignment::new(vec![
                (StatName::Inv, Variable::Q),
                (StatName::Maj, Variable::Q)
            ]),
            Err(Error::InvalidAssignment(_))
        ));
        assert!(matches!(
            StatAssignment::parse("inv", 1),
            Err(Error::InvalidAssignment(_))
        ));
        assert!(matches!(
            StatAssignment::parse("inv:z", 1),
            Err(Error::InvalidAssignment(_))
        ));
        assert!(matches!(
            StatAssignment::parse("bogus:q", 1),
            Err(Error::UnknownStat(_))
        ));
    }

    #[test]
    fn assignment_text_round_trips_for_r_free_statistics() {
        for text in ["inv:q", "des:t,maj:q", "lrmax:x,des:t,imaj:q"] {
            let sa = assignment(text, 1);
            assert_eq!(sa.to_string(), text);
            assert_eq!(assignment(&sa.to_string(), 1), sa);
        }
        // r-parameterized names render with their concrete r.
        assert_eq!(assignment("rmaj:q", 2).to_string(), "2maj:q");
        assert_eq!(assignment("irden:q", 3).to_string(), "i3den:q");
    }

    #[test]
    fn euler_numbers_match_known_values_and_counts() {
        let e = euler_numbers(9);
        let expected: Vec<BigInt> = [1u32, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(e, expected);
        for n in 1..=6 {
            assert_eq!(BigInt::from(gen_alternating(n, false).len()), e[n]);
            assert_eq!(BigInt::from(gen_alternating(n, true).len()), e[n]);
        }
    }

    #[test]
    fn unknown_identity_id_errors() {
        assert!(matches!(
            check_identity("no-such-claim", 3, &[1]),
            Err(Error::UnknownIdentity(_))
        ));
        assert!(matches!(
            check_identity("mahonian-words", 3, &[]),
            Err(Error::InvalidAssignment(_))
        ));
    }

    #[test]
    fn registry_ids_are_unique_and_kebab_case() {
        let ids = identity_ids();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        for id in ids {
            assert!(id
                .chars()
                .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-'));
        }
    }

    #[test]
    fn every_identity_passes_at_small_bounds() {
        for report in check_all(3, &[1, 2]).unwrap() {
            assert_ne!(
                report.status,
                CheckStatus::Fail,
                "identity {} failed: {:?}",
                report.identity,
                report.witness
            );
            if report.status == CheckStatus::Fail {
                assert!(report.witness.is_some());
            }
        }
    }

    #[test]
    fn positive_identities_pass_at_moderate_bounds() {
        for id in [
            "mahonian-words",
            "fixed-rlwmin-mahonian",
            "fixed-rlwmin-euler-mahonian",
            "des-equal-five-mahonian",
            "des-subset-fixed-plrmax",
            "partition-perms-decomposition",
            "quasi-increasing-mahonian-product",
            "stirling-quasi-des",
            "stirling-quasi-lrmin",
            "mahonian-stirling-product",
            "runs-decomposition",
            "runs-five-mahonian",
        ] {
            let report = check_identity(id, 5, &[1, 2]).unwrap();
            assert_eq!(
                report.status,
                CheckStatus::Pass,
                "identity {id} failed: {:?}",
                report.witness
            );
            assert!(report.grid.iter().all(|c| c.pass));
        }
    }

    #[test]
    fn negative_identities_find_witnesses() {
        for id in [
            "stat-not-on-fixed-rlwmin",
            "iden-not-on-fixed-des",
            "imad-not-on-fixed-des",
            "irmaj-not-on-fixed-des",
            "irden-not-on-fixed-des",
            "stirling-des-exc-differ",
            "stirling-lrmin-lrmax-differ",
        ] {
            let report = check_identity(id, 5, &[1, 2]).unwrap();
            assert_eq!(report.status, CheckStatus::Pass, "no witness for {id}");
            assert!(report.witness.is_some());
        }
    }

    #[test]
    fn corrupted_statistic_fails_with_witness() {
        // Self-test of the engine: a non-Mahonian side must be caught.
        let members = Arc::new(word_family(&comp(&[1, 1, 1])));
        let cell = Cell {
            label: "words:alpha=1,1,1".to_string(),
            check: CellCheck::Equidistribution {
                sides: vec![
                    Side {
                        label: "inv:q".to_string(),
                        members: members.clone(),
                        assignment: StatAssignment::q(StatName::Inv),
                    },
                    Side {
                        label: "des:q".to_string(),
                        members,
                        assignment: StatAssignment::q(StatName::Des),
                    },
                ],
                closed_form: None,
            },
        };
        let outcome = evaluate_cell(&cell);
        assert!(!outcome.pass);
        let witness = outcome.witness.unwrap();
        assert_eq!(witness.cell, "words:alpha=1,1,1");
        assert_eq!(witness.lhs, "1 + 2*q + 2*q^2 + q^3");
        assert_eq!(witness.rhs, "1 + 4*q + q^2");
    }

    #[test]
    fn counterexample_search_obeys_the_examples() {
        let found = find_counterexample(
            &StatName::Stat,
            &StatName::Inv,
            SearchDomain::RlwminClasses,
            5,
        )
        .unwrap();
        assert!(found.is_some());

        let found = find_counterexample(
            &StatName::inverse_of(StatName::Den),
            &StatName::Inv,
            SearchDomain::DesFamilies,
            5,
        )
        .unwrap();
        assert!(found.is_some());

        let none = find_counterexample(
            &StatName::Inv,
            &StatName::Inv,
            SearchDomain::WordsByContent,
            4,
        )
        .unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn counterexample_search_returns_smallest_instance() {
        // des and maj agree on every content of size two or less and
        // first differ on the six permutations of three letters, where
        // the descent count gives 1 + 4q + q^2 but the major index
        // gives 1 + 2q + 2q^2 + q^3. The scan must stop exactly there.
        let witness = find_counterexample(
            &StatName::Des,
            &StatName::Maj,
            SearchDomain::WordsByContent,
            5,
        )
        .unwrap()
        .unwrap();
        assert_eq!(witness.cell, "words:alpha=1,1,1");
        assert_eq!(witness.lhs, "1 + 4*q + q^2");
        assert_eq!(witness.rhs, "1 + 2*q + 2*q^2 + q^3");
    }

    #[test]
    fn reports_serialize_and_round_trip_as_json() {
        let report = check_identity("alternating-euler-count", 4, &[1]).unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        let text = serde_json::to_string(&report).unwrap();
        assert!(text.contains("\"identity\":\"alternating-euler-count\""));
        assert!(text.contains("\"status\":\"pass\""));
        assert!(text.contains("\"witness\":null"));
        let back: CheckReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn grid_order_is_deterministic() {
        let a = check_identity("fixed-rlwmin-mahonian", 4, &[1, 2]).unwrap();
        let b = check_identity("fixed-rlwmin-mahonian", 4, &[1, 2]).unwrap();
        let labels = |r: &CheckReport| r.grid.iter().map(|c| c.cell.clone()).collect::<Vec<_>>();
        assert_eq!(labels(&a), labels(&b));
        assert!(a.grid[0].cell.starts_with("words:alpha=1"));
    }

    #[test]
    fn recurrence_tables_match_hand_expansion() {
        assert_eq!(
            descent_recurrence(&comp(&[2, 3])),
            vec![BigInt::from(1), BigInt::from(2)]
        );
        assert_eq!(
            lrmin_recurrence(&comp(&[2, 3])),
            vec![BigInt::from(2), BigInt::from(1)]
        );
        // Single part: one word with no descents and one minimum.
        assert_eq!(descent_recurrence(&comp(&[4])), vec![BigInt::one()]);
        assert_eq!(lrmin_recurrence(&comp(&[4])), vec![BigInt::one()]);
    }

    #[test]
    fn determinant_closed_form_matches_direct_enumeration() {
        for n in 1..=5usize {
            for s in descent_set_grid(n) {
                let dist = distribution_over(
                    perm_words(gen_des_eq(n, &s)).iter(),
                    &StatAssignment::q(StatName::Inv),
                )
                .unwrap();
                assert_eq!(dist, determinant_of_s(n, &s).unwrap(), "n={n} S={s:?}");
            }
        }
    }

    #[test]
    fn expanded_assignment_classes_merge_only_when_linked() {
        // Univariate Mahonian tokens share r-free members, so all r
        // variants join one class.
        let classes = expand_assignments(AssignsKind::EachQ(MAHONIAN_TOKENS), &[1, 2, 3]).unwrap();
        assert_eq!(classes.len(), 1);
        // Five r-free names plus three r-parameterized names per r value.
        assert_eq!(classes[0].1.len(), 5 + 3 * 3);
        // Pure r-pairs stay separate per r.
        let classes =
            expand_assignments(AssignsKind::PairsTQ(R_EULER_MAHONIAN_PAIRS), &[1, 2]).unwrap();
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].0, Some(1));
        assert_eq!(classes[1].0, Some(2));
    }
}
