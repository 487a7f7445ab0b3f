//! The affine orbifold charts of the weighted blow-up of `A^n` along
//! `{x1 = ... = xk = 0}`, and the Reid–Tai test for terminal cyclic
//! quotient singularities.
//!
//! Chart `U_i` (one for each positive weight `a_i`) is `A^n` modulo
//! `Z/a_i` acting with twists `(-a_1, ..., 1, ..., -a_k, 0, ..., 0)`, the
//! `1` sitting in slot `i`. In chart coordinates `y` the blow-up map is
//!
//! ```text
//! x_i = y_i^{a_i},   x_j = y_j * y_i^{a_j}  (j <= k, j != i),   x_j = y_j  (j > k)
//! ```
//!
//! and the exceptional divisor is `{y_i = 0}`. Pulling a monomial back
//! along this map puts the σ-weight on the exponent of `y_i`, which is
//! what [`pushforward_membership`] tests.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Polynomial};
use crate::weighted::Weight;

/// The cyclic quotient singularity `1/r(b_1, ..., b_n)`. Twists are stored
/// reduced into `0..r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicQuotientType {
    order: u64,
    twists: Vec<u64>,
}

impl CyclicQuotientType {
    pub fn new(order: u64, twists: &[i64]) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument(
                "group order must be positive".to_string(),
            ));
        }
        let r = i64::try_from(order)
            .map_err(|_| Error::InvalidArgument(format!("group order {order} too large")))?;
        Ok(CyclicQuotientType {
            order,
            twists: twists.iter().map(|&b| b.rem_euclid(r) as u64).collect(),
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn twists(&self) -> &[u64] {
        &self.twists
    }

    pub fn is_smooth(&self) -> bool {
        self.order == 1
    }

    /// `gcd(r, b_1, ..., b_n)`.
    pub fn action_gcd(&self) -> u64 {
        self.twists.iter().fold(self.order, |g, b| g.gcd(b))
    }
}

impl fmt::Display for CyclicQuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(", self.order)?;
        for (i, b) in self.twists.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for CyclicQuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Ages `Σ_i frac(j b_i / r)` of the group elements `j = 1, ..., r - 1`.
pub fn reid_tai_ages(q: &CyclicQuotientType) -> Result<Vec<Rational64>> {
    if q.order < 2 {
        return Err(Error::TrivialGroup);
    }
    let r = q.order;
    let ages = (1..r)
        .map(|j| {
            let numer: u64 = q.twists.iter().map(|b| (j * b) % r).sum();
            Rational64::new(numer as i64, r as i64)
        })
        .collect();
    Ok(ages)
}

/// Terminal iff every nontrivial element has age strictly above 1. An age
/// of exactly 1 is canonical, not terminal. The action must be well formed
/// (`gcd(r, b_1, ..., b_n) = 1`).
pub fn is_terminal(q: &CyclicQuotientType) -> Result<bool> {
    let gcd = q.action_gcd();
    if gcd != 1 {
        return Err(Error::IllFormedAction {
            order: q.order,
            gcd,
        });
    }
    if q.is_smooth() {
        return Ok(true);
    }
    let one = Rational64::from_integer(1);
    Ok(reid_tai_ages(q)?.into_iter().all(|age| age > one))
}

/// One chart `U_i` of the blow-up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartDescription {
    index: usize,
    quotient: CyclicQuotientType,
    chart_map: Vec<Monomial>,
}

impl ChartDescription {
    /// 1-based chart index `i`; also the chart coordinate cutting out the
    /// exceptional divisor.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn quotient(&self) -> &CyclicQuotientType {
        &self.quotient
    }

    /// The blow-up map: entry `j` is `x_j` written as a monomial in the
    /// chart coordinates.
    pub fn chart_map(&self) -> &[Monomial] {
        &self.chart_map
    }

    pub fn exceptional_local_eq(&self) -> usize {
        self.index
    }

    /// Pulls a monomial in `x` back to chart coordinates.
    pub fn pull_back_monomial(&self, m: &Monomial) -> Result<Monomial> {
        let n = self.chart_map.len();
        if m.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.ambient_dim(),
            });
        }
        let mut out = Monomial::one(n)?;
        for (image, &s) in self.chart_map.iter().zip(m.exponents()) {
            out = out.mul(&image.pow(s))?;
        }
        Ok(out)
    }

    /// Substitutes the chart map into `f`.
    pub fn pull_back(&self, f: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.chart_map.len())?;
        for (m, c) in f.terms() {
            out.add_term(self.pull_back_monomial(m)?, c.clone())?;
        }
        Ok(out)
    }
}

/// All charts of the weighted blow-up with weight `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupAtlas {
    weight: Weight,
    charts: Vec<ChartDescription>,
    cartier_index: u64,
}

impl BlowupAtlas {
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn ambient_dim(&self) -> usize {
        self.weight.n()
    }

    pub fn charts(&self) -> &[ChartDescription] {
        &self.charts
    }

    /// Least `M` such that `M E` is Cartier: the lcm of the weights.
    pub fn cartier_index(&self) -> u64 {
        self.cartier_index
    }
}

pub fn charts(w: &Weight) -> BlowupAtlas {
    let n = w.n();
    let k = w.k();
    let a = w.entries();
    let charts = (1..=k)
        .map(|i| {
            let a_i = a[i - 1];
            let twists: Vec<i64> = (1..=n)
                .map(|j| match j {
                    _ if j == i => 1,
                    _ if j <= k => -i64::from(a[j - 1]),
                    _ => 0,
                })
                .collect();
            let chart_map = (1..=n)
                .map(|j| {
                    let mut e = vec![0u32; n];
                    if j == i {
                        e[i - 1] = a_i;
                    } else if j <= k {
                        e[j - 1] = 1;
                        e[i - 1] = a[j - 1];
                    } else {
                        e[j - 1] = 1;
                    }
                    Monomial::new(e).expect("n >= 1")
                })
                .collect();
            ChartDescription {
                index: i,
                quotient: CyclicQuotientType::new(u64::from(a_i), &twists)
                    .expect("positive weight entry"),
                chart_map,
            }
        })
        .collect();
    BlowupAtlas {
        weight: w.clone(),
        charts,
        cartier_index: cartier_index(w),
    }
}

/// `lcm(a_1, ..., a_k)`.
pub fn cartier_index(w: &Weight) -> u64 {
    w.nonzero().iter().fold(1u64, |l, &a| l.lcm(&u64::from(a)))
}

/// Every singular chart passes [`is_terminal`].
pub fn is_terminal_blowup(w: &Weight) -> Result<bool> {
    for chart in charts(w).charts() {
        if !chart.quotient().is_smooth() && !is_terminal(chart.quotient())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership of `f` in the push-forward of `O(-dE)`, decided chart by
/// chart: after substituting the chart map of `U_i`, every term must be
/// divisible by `y_i^d`.
pub fn pushforward_membership(w: &Weight, d: u64, f: &Polynomial) -> Result<bool> {
    if f.ambient_dim() != w.n() {
        return Err(Error::DimensionMismatch {
            expected: w.n(),
            found: f.ambient_dim(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for chart in charts(w).charts() {
        let pulled = chart.pull_back(f)?;
        let i = chart.exceptional_local_eq();
        if pulled.monomials().any(|m| u64::from(m.exponent(i)) < d) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficient of `E` in `K_X - π^* K`: `a_1 + ... + a_k - 1`. For
/// `(1, 1, b, ..., b, 0, ..., 0)` with `r` entries `b` this is `rb + 1`.
/// A single weight (`k = 1`, necessarily `σ = (1, 0, ...)`) gives 0.
pub fn discrepancy(w: &Weight) -> u64 {
    w.nonzero().iter().map(|&a| u64::from(a)).sum::<u64>() - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weighted::{sigma_wt, Weight};

    fn cq(r: u64, b: &[i64]) -> CyclicQuotientType {
        CyclicQuotientType::new(r, b).unwrap()
    }

    fn ratio(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn chart_types() {
        let w = Weight::one_one_b(4, 4, 3).unwrap();
        let atlas = charts(&w);
        assert_eq!(atlas.charts().len(), 4);
        assert_eq!(atlas.charts()[2].quotient(), &cq(3, &[2, 2, 1, 0]));
        assert!(atlas.charts()[0].quotient().is_smooth());

        let w = Weight::from_nonzero(&[10, 14, 35], 3).unwrap();
        let atlas = charts(&w);
        assert_eq!(atlas.charts()[2].quotient(), &cq(35, &[25, 21, 1]));
        assert_eq!(atlas.cartier_index(), 70);
    }

    #[test]
    fn chart_map_shape() {
        let w = Weight::from_nonzero(&[2, 3], 3).unwrap();
        let atlas = charts(&w);
        let u1 = &atlas.charts()[0];
        let shown: Vec<String> = u1.chart_map().iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["x1^2", "x1^3*x2", "x3"]);
    }

    #[test]
    fn cartier_index_examples() {
        let idx = |nz: &[u32]| cartier_index(&Weight::from_nonzero(nz, nz.len()).unwrap());
        assert_eq!(idx(&[10, 14, 35]), 70);
        assert_eq!(idx(&[1, 1]), 1);
        assert_eq!(idx(&[1, 1, 4, 4]), 4);
    }

    #[test]
    fn ages() {
        assert_eq!(
            reid_tai_ages(&cq(3, &[2, 2, 1])).unwrap(),
            vec![ratio(5, 3), ratio(4, 3)]
        );
        assert_eq!(reid_tai_ages(&cq(2, &[1, 1])).unwrap(), vec![ratio(1, 1)]);
        assert_eq!(
            reid_tai_ages(&cq(2, &[1, 1, 1])).unwrap(),
            vec![ratio(3, 2)]
        );
        assert_eq!(reid_tai_ages(&cq(1, &[0])), Err(Error::TrivialGroup));
    }

    #[test]
    fn terminality() {
        for b in 2..=50i64 {
            assert!(is_terminal(&cq(b as u64, &[b - 1, b - 1, 1, 0, 0])).unwrap());
        }
        assert!(!is_terminal(&cq(2, &[1, 1])).unwrap());
        assert!(is_terminal(&cq(1, &[0, 5])).unwrap());
        assert!(matches!(
            is_terminal(&cq(4, &[2, 2])),
            Err(Error::IllFormedAction { gcd: 2, .. })
        ));
    }

    #[test]
    fn negative_twists_reduce() {
        assert_eq!(cq(5, &[-1, -7, 12]).twists(), &[4, 3, 2]);
    }

    #[test]
    fn blowup_terminality() {
        let w = Weight::one_one_b(6, 5, 4).unwrap();
        assert!(is_terminal_blowup(&w).unwrap());
        assert!(is_terminal_blowup(&Weight::from_nonzero(&[1, 1], 2).unwrap()).unwrap());
        assert!(!is_terminal_blowup(&Weight::from_nonzero(&[2, 3], 2).unwrap()).unwrap());
    }

    #[test]
    fn pushforward_examples() {
        let w = Weight::from_nonzero(&[10, 14, 35], 3).unwrap();
        let g = Polynomial::from_monomial(Monomial::new(vec![5, 4, 1]).unwrap());
        assert!(pushforward_membership(&w, 140, &g).unwrap());
        assert!(pushforward_membership(&w, 141, &g).unwrap());
        assert!(!pushforward_membership(&w, 142, &g).unwrap());
        assert!(pushforward_membership(&w, 0, &g).unwrap());
        assert_eq!(
            pushforward_membership(&w, 0, &Polynomial::zero(3).unwrap()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn pulled_back_exponent_is_the_weight() {
        let w = Weight::from_nonzero(&[3, 5, 7], 4).unwrap();
        let atlas = charts(&w);
        let m = Monomial::new(vec![2, 1, 3, 4]).unwrap();
        let wt = sigma_wt(&w, &Polynomial::from_monomial(m.clone())).unwrap();
        for chart in atlas.charts() {
            let pulled = chart.pull_back_monomial(&m).unwrap();
            assert_eq!(u64::from(pulled.exponent(chart.index())), wt);
            assert_eq!(atlas.cartier_index() % chart.quotient().order(), 0);
        }
    }

    #[test]
    fn discrepancy_values() {
        assert_eq!(discrepancy(&Weight::one_one_b(4, 4, 2).unwrap()), 5);
        assert_eq!(discrepancy(&Weight::from_nonzero(&[1, 1], 2).unwrap()), 1);
        assert_eq!(
            discrepancy(&Weight::from_nonzero(&[10, 14, 35], 3).unwrap()),
            58
        );
    }

    #[test]
    fn ages_ignore_twist_order() {
        let a = reid_tai_ages(&cq(7, &[1, 2, 4])).unwrap();
        let b = reid_tai_ages(&cq(7, &[4, 1, 2])).unwrap();
        assert_eq!(a, b);
    }
}
