//! Symbolic powers of monomial ideals whose radical is a monomial prime.
//!
//! When `rad(I) = (x_i : i ∈ V)` is the only minimal prime, inverting
//! everything outside it amounts to inverting the variables not in `V`,
//! so `I^(t) = I^t : u^∞` with `u` the product of those variables.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::weighted::Verdict;

/// A monomial ideal together with the variables generating its radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryMonomialIdeal {
    ideal: MonomialIdeal,
    radical_vars: BTreeSet<usize>,
}

impl PrimaryMonomialIdeal {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// 1-based indices of the variables generating the radical.
    pub fn radical_vars(&self) -> &BTreeSet<usize> {
        &self.radical_vars
    }

    /// Product of the variables outside the radical, `1` if there are none.
    pub fn outside_product(&self) -> Monomial {
        let n = self.ideal.ambient_dim();
        let exps = (1..=n)
            .map(|i| u32::from(!self.radical_vars.contains(&i)))
            .collect();
        Monomial::new(exps).expect("n >= 1")
    }
}

/// Accepts `I` when its radical is generated by variables. Full
/// primariness is not required: for an ideal with prime radical that is
/// not primary, [`symbolic_power`] is the symbolic power with respect to
/// that single minimal prime.
pub fn as_primary(ideal: &MonomialIdeal) -> Result<PrimaryMonomialIdeal> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::TrivialIdeal);
    }
    let radical = ideal.radical();
    let mut vars = BTreeSet::new();
    for g in radical.generators() {
        match g.support().as_slice() {
            [i] => {
                vars.insert(*i);
            }
            _ => return Err(Error::RadicalNotPrime(radical.to_string())),
        }
    }
    Ok(PrimaryMonomialIdeal {
        ideal: ideal.clone(),
        radical_vars: vars,
    })
}

/// `I^(t)`: the ordinary power saturated by the variables outside the
/// radical.
pub fn symbolic_power(p: &PrimaryMonomialIdeal, t: u32) -> Result<MonomialIdeal> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be positive".to_string()));
    }
    let power = p.ideal.power(t);
    let u = p.outside_product();
    if u.is_one() {
        return Ok(power);
    }
    power.saturate(&u)
}

/// Compares `I^t ⊆ I^(t)`; witnesses are generators of the symbolic power
/// missing from the ordinary one.
pub fn symbolic_equals_ordinary(p: &PrimaryMonomialIdeal, t: u32) -> Result<Verdict> {
    let symbolic = symbolic_power(p, t)?;
    Verdict::compare(&p.ideal.power(t), &symbolic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weighted::{weighted_ideal, Weight};

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| m(g))).unwrap()
    }

    #[test]
    fn weighted_ideal_is_primary_to_all_weighted_variables() {
        let w = Weight::from_nonzero(&[1, 1, 2], 3).unwrap();
        let p = as_primary(&weighted_ideal(&w, 2)).unwrap();
        assert_eq!(p.radical_vars(), &BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn principal_prime() {
        let p = as_primary(&ideal(2, &[&[1, 0]])).unwrap();
        assert_eq!(p.radical_vars(), &BTreeSet::from([1]));
    }

    #[test]
    fn squarefree_non_prime_is_rejected() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert!(matches!(as_primary(&i), Err(Error::RadicalNotPrime(_))));
        assert_eq!(
            as_primary(&MonomialIdeal::unit(2).unwrap()),
            Err(Error::TrivialIdeal)
        );
    }

    #[test]
    fn variable_prime_symbolic_is_ordinary() {
        let p = as_primary(&ideal(3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        assert_eq!(
            symbolic_power(&p, 2).unwrap(),
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]])
        );
        for t in 1..=4 {
            assert!(symbolic_equals_ordinary(&p, t).unwrap().is_equal());
        }
    }

    #[test]
    fn weighted_ideal_with_zero_weight_variable() {
        let w = Weight::from_nonzero(&[1, 1, 2], 4).unwrap();
        let i = weighted_ideal(&w, 2);
        let p = as_primary(&i).unwrap();
        assert_eq!(symbolic_power(&p, 3).unwrap(), i.power(3));
    }

    // (x1^2, x1*x2) has radical (x1) but an embedded component at (x1, x2);
    // its square saturates down to (x1^2).
    #[test]
    fn strict_inclusion_regression() {
        let p = as_primary(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap();
        assert_eq!(symbolic_power(&p, 2).unwrap(), ideal(2, &[&[2, 0]]));
        let v = symbolic_equals_ordinary(&p, 2).unwrap();
        assert_eq!(v.witnesses(), &[m(&[2, 0])]);
    }

    #[test]
    fn zero_exponent_is_rejected() {
        let p = as_primary(&ideal(2, &[&[1, 0]])).unwrap();
        assert!(symbolic_power(&p, 0).is_err());
    }
}
