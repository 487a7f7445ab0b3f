//! Weights `σ = (a1, ..., ak, 0, ..., 0)`, the σ-weight of a polynomial,
//! and the weighted ideals `I(σ, d)` spanned by the monomials of σ-weight
//! at least `d`.
//!
//! Besides generating `I(σ, d)` this module decides the power equality
//! `I(σ, L)^d = I(σ, dL)`, searches for the smallest `L` satisfying it up
//! to a bound, and checks the splitting of `I(σ, d)` along a variable
//! `x_j` into `x_j * I(σ, d - a_j)` plus the part of `I(σ, d)` not
//! involving `x_j`.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, Polynomial};

/// A weight vector: `k >= 1` strictly positive leading entries with gcd 1,
/// followed by zeros up to the ambient dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    entries: Vec<u32>,
    k: usize,
}

impl Weight {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyAmbient);
        }
        let k = entries.iter().take_while(|&&a| a > 0).count();
        if k == 0 {
            return Err(Error::WeightShape(
                "the first entry must be positive".to_string(),
            ));
        }
        if let Some(pos) = entries[k..].iter().position(|&a| a > 0) {
            return Err(Error::WeightShape(format!(
                "entry {} is positive after a zero entry",
                k + pos + 1
            )));
        }
        let gcd = entries[..k].iter().fold(0u64, |g, &a| g.gcd(&u64::from(a)));
        if gcd != 1 {
            return Err(Error::WeightGcd { gcd });
        }
        Ok(Weight { entries, k })
    }

    /// The weight whose nonzero part is `nonzero`, padded with zeros to `n`
    /// entries.
    pub fn from_nonzero(nonzero: &[u32], n: usize) -> Result<Self> {
        if nonzero.contains(&0) {
            return Err(Error::WeightShape(
                "nonzero part contains a zero entry".to_string(),
            ));
        }
        if nonzero.len() > n {
            return Err(Error::WeightShape(format!(
                "{} nonzero entries exceed ambient dimension {n}",
                nonzero.len()
            )));
        }
        let mut entries = nonzero.to_vec();
        entries.resize(n, 0);
        Weight::new(entries)
    }

    /// `(1, 1, b, ..., b, 0, ..., 0)` with `k - 2` entries equal to `b`,
    /// `k >= 2`.
    pub fn one_one_b(n: usize, k: usize, b: u32) -> Result<Self> {
        if k < 2 || b == 0 {
            return Err(Error::InvalidArgument(format!(
                "need k >= 2 and b >= 1, got k = {k}, b = {b}"
            )));
        }
        let mut nonzero = vec![1, 1];
        nonzero.extend(std::iter::repeat_n(b, k - 2));
        Weight::from_nonzero(&nonzero, n)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn nonzero(&self) -> &[u32] {
        &self.entries[..self.k]
    }

    /// Entry at 1-based index `i`.
    pub fn entry(&self, i: usize) -> u32 {
        self.entries[i - 1]
    }

    /// σ-weight of a monomial.
    pub fn weight_of(&self, m: &Monomial) -> Result<u64> {
        if m.ambient_dim() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: m.ambient_dim(),
            });
        }
        Ok(raw_weight(&self.entries, m.exponents()))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

pub(crate) fn raw_weight(entries: &[u32], exponents: &[u32]) -> u64 {
    entries
        .iter()
        .zip(exponents)
        .map(|(&a, &s)| u64::from(a) * u64::from(s))
        .sum()
}

/// σ-weight of a polynomial: the minimum σ-weight over its monomials.
pub fn sigma_wt(w: &Weight, f: &Polynomial) -> Result<u64> {
    if f.ambient_dim() != w.n() {
        return Err(Error::DimensionMismatch {
            expected: w.n(),
            found: f.ambient_dim(),
        });
    }
    f.monomials()
        .map(|m| raw_weight(&w.entries, m.exponents()))
        .min()
        .ok_or(Error::ZeroPolynomial)
}

/// The pair `(σ, d)` naming `I(σ, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedIdealQuery {
    pub weight: Weight,
    pub degree: u64,
}

impl WeightedIdealQuery {
    pub fn new(weight: Weight, degree: u64) -> Self {
        WeightedIdealQuery { weight, degree }
    }
}

/// Minimal generators of `I(σ, d)`.
pub fn weighted_ideal_gens(q: &WeightedIdealQuery) -> MonomialIdeal {
    threshold_ideal(&q.weight.entries, q.degree)
}

/// Shorthand for [`weighted_ideal_gens`].
pub fn weighted_ideal(w: &Weight, d: u64) -> MonomialIdeal {
    threshold_ideal(&w.entries, d)
}

/// Minimal generators of the monomial ideal `{ s : Σ entries_i s_i >= d }`
/// for arbitrary non-negative entries (no gcd or ordering requirement).
/// Zero entries never occur in a minimal generator when `d >= 1`.
///
/// Every minimal generator is fixed by its exponents on all but the last
/// positive-weight variable: the last exponent is forced to be the least
/// one reaching `d`. Each earlier exponent `s_i` is at most
/// `ceil(rem / a_i)`, `rem` being what is left of `d`.
pub(crate) fn threshold_ideal(entries: &[u32], d: u64) -> MonomialIdeal {
    let n = entries.len();
    if d == 0 {
        return MonomialIdeal::unit(n).expect("n >= 1");
    }
    let positive: Vec<usize> = (0..n).filter(|&i| entries[i] > 0).collect();
    if positive.is_empty() {
        return MonomialIdeal::zero(n).expect("n >= 1");
    }
    let search = MinimalSearch {
        entries,
        positive: &positive,
        threshold: d,
    };
    let mut gens = Vec::new();
    let mut exps = vec![0u32; n];
    search.run(0, d, &mut exps, &mut gens);
    MonomialIdeal::from_minimal_unchecked(n, gens)
}

struct MinimalSearch<'a> {
    entries: &'a [u32],
    positive: &'a [usize],
    threshold: u64,
}

impl MinimalSearch<'_> {
    fn run(&self, depth: usize, rem: u64, exps: &mut [u32], out: &mut Vec<Monomial>) {
        let var = self.positive[depth];
        let a = u64::from(self.entries[var]);
        let cap = rem.div_ceil(a);
        if depth + 1 == self.positive.len() {
            exps[var] = to_exp(cap);
            if self.is_minimal(exps) {
                out.push(Monomial::new(exps.to_vec()).expect("n >= 1"));
            }
        } else {
            for s in 0..=cap {
                exps[var] = to_exp(s);
                self.run(depth + 1, rem.saturating_sub(a * s), exps, out);
            }
        }
        exps[var] = 0;
    }

    /// Lowering any positive exponent must drop the weight below the
    /// threshold.
    fn is_minimal(&self, exps: &[u32]) -> bool {
        let total = raw_weight(self.entries, exps);
        total >= self.threshold
            && exps
                .iter()
                .zip(self.entries)
                .all(|(&s, &a)| s == 0 || total - u64::from(a) < self.threshold)
    }
}

fn to_exp(s: u64) -> u32 {
    u32::try_from(s).expect("exponent fits in u32")
}

/// Outcome of comparing two ideals `A ⊆ B` for equality. `NotEqual` lists
/// every minimal generator of `B` missing from `A`, in graded order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    NotEqual { witnesses: Vec<Monomial> },
}

impl Verdict {
    pub(crate) fn compare(smaller: &MonomialIdeal, larger: &MonomialIdeal) -> Result<Verdict> {
        if !smaller.is_subset(larger)? {
            return Err(Error::InvariantViolation(format!(
                "expected {smaller} to be contained in {larger}"
            )));
        }
        let witnesses = larger.generators_outside(smaller)?;
        Ok(if witnesses.is_empty() {
            Verdict::Equal
        } else {
            Verdict::NotEqual { witnesses }
        })
    }

    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }

    /// The first missing generator, if any.
    pub fn witness(&self) -> Option<&Monomial> {
        match self {
            Verdict::Equal => None,
            Verdict::NotEqual { witnesses } => witnesses.first(),
        }
    }

    pub fn witnesses(&self) -> &[Monomial] {
        match self {
            Verdict::Equal => &[],
            Verdict::NotEqual { witnesses } => witnesses,
        }
    }
}

/// Decides `I(σ, L)^d = I(σ, dL)`. The inclusion `⊆` always holds and is
/// checked; a `NotEqual` verdict carries the generators of `I(σ, dL)` that
/// the power misses.
pub fn power_equality(w: &Weight, l: u64, d: u32) -> Result<Verdict> {
    if l == 0 {
        return Err(Error::InvalidArgument("L must be positive".to_string()));
    }
    let power = weighted_ideal(w, l).power(d);
    let target = weighted_ideal(w, l * u64::from(d));
    Verdict::compare(&power, &target)
}

/// Smallest `L <= l_max` with `I(σ, L)^d = I(σ, dL)` for every
/// `2 <= d <= d_max`. Only certifies the equality up to `d_max`.
pub fn find_normality_index(w: &Weight, d_max: u32, l_max: u64) -> Result<Option<u64>> {
    if d_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "d_max must be at least 2, got {d_max}"
        )));
    }
    for l in 1..=l_max {
        let mut all_equal = true;
        for d in 2..=d_max {
            if !power_equality(w, l, d)?.is_equal() {
                all_equal = false;
                break;
            }
        }
        if all_equal {
            return Ok(Some(l));
        }
    }
    Ok(None)
}

/// Checks that `I(σ, d)` splits along `x_j`:
///
/// * the monomials of `I(σ, d)` divisible by `x_j` are exactly
///   `x_j * I(σ, max(d - a_j, 0))`;
/// * those not involving `x_j` are exactly the monomials of weight `>= d`
///   for the weight with entry `j` removed, in `n - 1` variables.
///
/// The reduced weight may have gcd above 1; it is used as raw thresholds.
pub fn slicing_decomposition_check(w: &Weight, d: u64, j: usize) -> Result<bool> {
    let n = w.n();
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, max: n });
    }
    let a_j = w.entry(j);
    if a_j == 0 {
        return Err(Error::ZeroWeightEntry { index: j });
    }
    let ideal = weighted_ideal(w, d);
    let x_j = Monomial::var(n, j)?;

    let divisible = MonomialIdeal::minimalize(
        n,
        ideal
            .generators()
            .iter()
            .map(|g| g.lcm(&x_j))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let shifted = MonomialIdeal::principal(x_j)
        .product(&weighted_ideal(w, d.saturating_sub(u64::from(a_j))))?;
    if divisible != shifted {
        return Ok(false);
    }

    let free: Vec<&Monomial> = ideal
        .generators()
        .iter()
        .filter(|g| g.exponent(j) == 0)
        .collect();
    if n == 1 {
        // no variables remain: the slice is the unit ideal iff d = 0
        return Ok(!free.is_empty() == (d == 0));
    }
    let restricted = MonomialIdeal::minimalize(
        n - 1,
        free.iter()
            .map(|g| g.drop_variable(j))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let mut reduced = w.entries().to_vec();
    reduced.remove(j - 1);
    Ok(restricted == threshold_ideal(&reduced, d))
}
