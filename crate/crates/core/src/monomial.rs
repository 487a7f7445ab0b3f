//! Monomials, polynomials with exact rational coefficients, and monomial
//! ideals stored by their minimal generating sets.
//!
//! Variables are indexed from 1 (`x1, ..., xn`) in every user-facing
//! position. Internally exponent vectors are plain zero-based slices.
//!
//! Monomials are totally ordered by a graded order: lower total degree
//! first, and within one degree the larger exponent of `x1` first (then
//! `x2`, and so on). So `x1^2 < x1*x2 < x2^2 < x1^3`. Generator lists and
//! polynomial terms are always printed in this order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// A monomial `x1^s1 * ... * xn^sn`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::EmptyAmbient);
        }
        Ok(Monomial { exponents })
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Result<Self> {
        Monomial::new(vec![0; n])
    }

    /// The variable `x_index` (1-based) in `n` variables.
    pub fn var(n: usize, index: usize) -> Result<Self> {
        if index == 0 || index > n {
            return Err(Error::VariableOutOfRange { index, n });
        }
        let mut e = vec![0; n];
        e[index - 1] = 1;
        Monomial::new(e)
    }

    pub fn ambient_dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of `x_index` (1-based).
    pub fn exponent(&self, index: usize) -> u32 {
        self.exponents[index - 1]
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// 1-based indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Product of the variables that occur.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|&e| u32::from(e > 0)).collect(),
        }
    }

    /// `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        check_dim(self.ambient_dim(), other.ambient_dim())?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_dim(self.ambient_dim(), other.ambient_dim())?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|&x| x * e).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        check_dim(self.ambient_dim(), other.ambient_dim())?;
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        check_dim(self.ambient_dim(), other.ambient_dim())?;
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        })
    }

    /// `self / gcd(self, other)`: the exponentwise truncated difference.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Result<Monomial> {
        check_dim(self.ambient_dim(), other.ambient_dim())?;
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        })
    }

    /// Exact quotient `self / other`, or `None` if `other` does not divide.
    pub fn checked_div(&self, other: &Monomial) -> Result<Option<Monomial>> {
        if !other.divides(self)? {
            return Ok(None);
        }
        Ok(Some(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        }))
    }

    /// Removes the coordinate of `x_index` (1-based), giving a monomial in
    /// one fewer variable.
    pub fn drop_variable(&self, index: usize) -> Result<Monomial> {
        let n = self.ambient_dim();
        if index == 0 || index > n {
            return Err(Error::VariableOutOfRange { index, n });
        }
        let mut e = self.exponents.clone();
        e.remove(index - 1);
        Monomial::new(e)
    }

    /// Inserts a zero exponent so the monomial lives in `n + extra`
    /// variables.
    pub fn embed(&self, extra: usize) -> Monomial {
        let mut e = self.exponents.clone();
        e.extend(std::iter::repeat_n(0, extra));
        Monomial { exponents: e }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Free-standing form of [`Monomial::divides`].
pub fn divides(m1: &Monomial, m2: &Monomial) -> Result<bool> {
    m1.divides(m2)
}

/// A polynomial with exact rational coefficients. No stored coefficient is
/// zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ambient_dim: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAmbient);
        }
        Ok(Polynomial {
            ambient_dim: n,
            terms: BTreeMap::new(),
        })
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        let n = m.ambient_dim();
        terms.insert(m, BigRational::one());
        Polynomial {
            ambient_dim: n,
            terms,
        }
    }

    /// Builds a polynomial from terms, combining like terms and dropping
    /// zero coefficients.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Polynomial::zero(n)?;
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) -> Result<()> {
        check_dim(self.ambient_dim, m.ambient_dim())?;
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The single monomial of a one-term polynomial with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let mut out = Polynomial::zero(self.ambient_dim)?;
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul_unchecked(m2), c1 * c2)?;
            }
        }
        Ok(out)
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Renders in the grammar accepted by [`crate::parse::parse_polynomial`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A monomial ideal, stored as its minimal generating set sorted in
/// graded order. The zero ideal has no generators; the unit ideal is
/// generated by `1`.
#[derive(Clone, Eq)]
pub struct MonomialIdeal {
    ambient_dim: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAmbient);
        }
        Ok(MonomialIdeal {
            ambient_dim: n,
            generators: Vec::new(),
        })
    }

    pub fn unit(n: usize) -> Result<Self> {
        Ok(MonomialIdeal {
            ambient_dim: n,
            generators: vec![Monomial::one(n)?],
        })
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            ambient_dim: m.ambient_dim(),
            generators: vec![m],
        }
    }

    /// The ideal generated by the given monomials, reduced to its
    /// divisibility antichain.
    pub fn minimalize<I>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        if n == 0 {
            return Err(Error::EmptyAmbient);
        }
        let mut all = Vec::new();
        for g in gens {
            check_dim(n, g.ambient_dim())?;
            all.push(g);
        }
        Ok(MonomialIdeal {
            ambient_dim: n,
            generators: antichain(all),
        })
    }

    /// Wraps generators already known to be a sorted antichain.
    pub(crate) fn from_minimal_unchecked(n: usize, mut generators: Vec<Monomial>) -> Self {
        generators.sort();
        MonomialIdeal {
            ambient_dim: n,
            generators,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        check_dim(self.ambient_dim, m.ambient_dim())?;
        Ok(self.contains_monomial_unchecked(m))
    }

    pub(crate) fn contains_monomial_unchecked(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides_unchecked(m))
    }

    /// Membership of a polynomial: every term must lie in the ideal.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        check_dim(self.ambient_dim, f.ambient_dim())?;
        Ok(f.monomials().all(|m| self.contains_monomial_unchecked(m)))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        Ok(self
            .generators
            .iter()
            .all(|g| other.contains_monomial_unchecked(g)))
    }

    /// Generators of `self` that do not lie in `other`.
    pub fn generators_outside(&self, other: &MonomialIdeal) -> Result<Vec<Monomial>> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        Ok(self
            .generators
            .iter()
            .filter(|g| !other.contains_monomial_unchecked(g))
            .cloned()
            .collect())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul_unchecked(b));
            }
        }
        Ok(MonomialIdeal {
            ambient_dim: self.ambient_dim,
            generators: antichain(gens),
        })
    }

    pub fn power(&self, d: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.ambient_dim).expect("ambient_dim >= 1");
        // exponentiation by squaring keeps intermediate generator sets small
        let mut base = self.clone();
        let mut e = d;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base).expect("same ambient");
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base).expect("same ambient");
            }
        }
        acc
    }

    /// `(self : m)`, the ideal of all `h` with `h * m` in `self`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        check_dim(self.ambient_dim, m.ambient_dim())?;
        let gens = self
            .generators
            .iter()
            .map(|g| g.quotient_by_gcd(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal {
            ambient_dim: self.ambient_dim,
            generators: antichain(gens),
        })
    }

    /// `(self : m^∞)`, by iterating the colon until it stabilizes.
    pub fn saturate(&self, m: &Monomial) -> Result<MonomialIdeal> {
        check_dim(self.ambient_dim, m.ambient_dim())?;
        if m.is_one() {
            return Ok(self.clone());
        }
        let mut current = self.clone();
        loop {
            let next = current.colon(m)?;
            if next.generators == current.generators {
                return Ok(current);
            }
            current = next;
        }
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            ambient_dim: self.ambient_dim,
            generators: antichain(
                self.generators
                    .iter()
                    .map(Monomial::squarefree_part)
                    .collect(),
            ),
        }
    }

    /// A monomial ideal is primary iff every variable occurring in a
    /// minimal generator also has a pure power among the generators.
    pub fn is_primary(&self) -> bool {
        if self.is_zero() || self.is_unit() {
            return false;
        }
        let mut has_pure_power = vec![false; self.ambient_dim];
        let mut occurs = vec![false; self.ambient_dim];
        for g in &self.generators {
            let support = g.support();
            if support.len() == 1 {
                has_pure_power[support[0] - 1] = true;
            }
            for i in support {
                occurs[i - 1] = true;
            }
        }
        occurs.iter().zip(&has_pure_power).all(|(&o, &p)| !o || p)
    }

    /// The ideal in `n + extra` variables generated by the same monomials.
    pub fn embed(&self, extra: usize) -> MonomialIdeal {
        MonomialIdeal {
            ambient_dim: self.ambient_dim + extra,
            generators: self.generators.iter().map(|g| g.embed(extra)).collect(),
        }
    }
}

/// Ideal equality by mutual generator membership.
impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.is_subset(other).unwrap_or(false)
            && other.is_subset(self).unwrap_or(false)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sorts by graded order and keeps each monomial not divisible by an
/// earlier kept one. A divisor always has degree at most that of its
/// multiple, so one forward pass suffices.
fn antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept
}

pub fn minimalize<I>(n: usize, gens: I) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = Monomial>,
{
    MonomialIdeal::minimalize(n, gens)
}

pub fn ideal_product(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    i.product(j)
}

pub fn ideal_power(i: &MonomialIdeal, d: u32) -> MonomialIdeal {
    i.power(d)
}

pub fn contains(i: &MonomialIdeal, f: &Polynomial) -> Result<bool> {
    i.contains(f)
}

pub fn colon(i: &MonomialIdeal, m: &Monomial) -> Result<MonomialIdeal> {
    i.colon(m)
}

pub fn saturate(i: &MonomialIdeal, m: &Monomial) -> Result<MonomialIdeal> {
    i.saturate(m)
}

pub fn radical(i: &MonomialIdeal) -> MonomialIdeal {
    i.radical()
}
