//! Brute-force reference computations for arbitrary monomial ideals.
//!
//! Nothing here looks at posets or Q-Borel structure; only the generic
//! monomial-ideal arithmetic is used, so the results can be compared
//! against the structural fast paths in `spectra` and `spread`.
//!
//! Associated primes are found by searching colon witnesses `f` among the
//! divisors of `lcm(G(I))`. For a monomial ideal, raising an exponent of `f`
//! beyond the largest exponent occurring in `G(I)` never changes `I : f`, so
//! this box contains a witness for every associated prime.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poset::VariableSet;

/// If `I : f` is generated by variables, returns them.
///
/// The colon is generated by the quotients `u / gcd(u, f)`; it is a monomial
/// prime exactly when the degree-one quotients divide all the others.
fn colon_prime(ideal: &MonomialIdeal, f: &Monomial) -> Option<VariableSet> {
    let fe = f.exponents();
    let mut vars = VariableSet::new();
    for u in ideal.generators() {
        let mut degree = 0u64;
        let mut last = 0;
        for (k, (&a, &b)) in u.exponents().iter().zip(fe).enumerate() {
            if a > b {
                degree += (a - b) as u64;
                last = k + 1;
            }
        }
        match degree {
            0 => return None,
            1 => {
                vars.insert(last);
            }
            _ => {}
        }
    }
    if vars.is_empty() {
        return None;
    }
    let covered = ideal.generators().iter().all(|u| {
        vars.iter()
            .any(|v| u.exponents()[v - 1] > fe[v - 1])
    });
    covered.then_some(vars)
}

/// Every associated prime of `I` with the first witness found for it.
pub fn associated_primes_with_witnesses(
    ideal: &MonomialIdeal,
) -> Result<BTreeMap<VariableSet, Monomial>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let bound = ideal.generator_lcm();
    let mut found = BTreeMap::new();
    let mut f = vec![0u32; ideal.n()];
    walk(ideal, bound.exponents(), 0, &mut f, &mut found);
    Ok(found)
}

// Depth-first over the box below `bound`, pruning at members of `I` (all of
// their multiples are members too).
fn walk(
    ideal: &MonomialIdeal,
    bound: &[u32],
    k: usize,
    f: &mut Vec<u32>,
    found: &mut BTreeMap<VariableSet, Monomial>,
) {
    if k == f.len() {
        let m = Monomial::from_exponents(f.clone());
        if let Some(p) = colon_prime(ideal, &m) {
            found.entry(p).or_insert(m);
        }
        return;
    }
    for e in 0..=bound[k] {
        f[k] = e;
        if ideal.contains_raw(&Monomial::from_exponents(f.clone())) {
            break;
        }
        walk(ideal, bound, k + 1, f, found);
    }
    f[k] = 0;
}

/// `ass(I)` by exhaustive colon search.
pub fn associated_primes_bruteforce(ideal: &MonomialIdeal) -> Result<BTreeSet<VariableSet>> {
    Ok(associated_primes_with_witnesses(ideal)?.into_keys().collect())
}

fn maximal_members(sets: &BTreeSet<VariableSet>) -> Vec<&VariableSet> {
    sets.iter()
        .filter(|p| !sets.iter().any(|q| q != *p && p.is_subset(q)))
        .collect()
}

/// `I^(d) = ⋂_{P ∈ ass(I)} (I^d S_P ∩ S)`, intersecting over the maximal
/// associated primes only; contraction at a larger prime gives a smaller
/// ideal, so the remaining terms do not change the result.
pub fn symbolic_power_bruteforce(ideal: &MonomialIdeal, d: u32) -> Result<MonomialIdeal> {
    if d == 0 {
        return Err(Error::NonPositive("d"));
    }
    let ass = associated_primes_bruteforce(ideal)?;
    let power = ideal.power(d)?;
    let mut acc = MonomialIdeal::unit(ideal.n());
    for p in maximal_members(&ass) {
        acc = acc.intersection(&power.localize_contract(p)?)?;
    }
    #[cfg(debug_assertions)]
    {
        let mut full = MonomialIdeal::unit(ideal.n());
        for p in &ass {
            full = full.intersection(&power.localize_contract(p)?)?;
        }
        debug_assert_eq!(acc, full, "maximal-prime shortcut changed the symbolic power");
    }
    Ok(acc)
}

pub fn ideals_equal(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::AmbientMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(a.generators() == b.generators())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&str], n: usize) -> MonomialIdeal {
        MonomialIdeal::from_generators(n, gens.iter().map(|g| Monomial::parse(g, n).unwrap())).unwrap()
    }

    fn primes<const K: usize>(sets: [&[usize]; K]) -> BTreeSet<VariableSet> {
        sets.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn ass_of_principal_squarefree() {
        let w = associated_primes_with_witnesses(&ideal(&["x1*x2"], 2)).unwrap();
        assert_eq!(w.keys().cloned().collect::<BTreeSet<_>>(), primes([&[1], &[2]]));
        assert_eq!(w[&[1].into()], Monomial::parse("x2", 2).unwrap());
        assert_eq!(w[&[2].into()], Monomial::parse("x1", 2).unwrap());
    }

    #[test]
    fn ass_of_eleven_variable_example() {
        let gens = [
            "x1*x6^2", "x1*x6*x7", "x1*x7^2", "x1*x6*x9", "x1*x7*x9", "x1*x9^2", "x4*x6^2",
            "x4*x6*x7", "x4*x7^2", "x4*x6*x9", "x4*x7*x9", "x4*x9^2",
        ];
        assert_eq!(
            associated_primes_bruteforce(&ideal(&gens, 11)).unwrap(),
            primes([&[1, 4], &[6, 7, 9]])
        );
    }

    #[test]
    fn ass_with_embedded_prime() {
        let i = ideal(&["x1^2", "x1*x2"], 2);
        assert_eq!(associated_primes_bruteforce(&i).unwrap(), primes([&[1], &[1, 2]]));
    }

    #[test]
    fn ass_rejects_trivial_ideals() {
        assert_eq!(associated_primes_bruteforce(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal));
        assert_eq!(associated_primes_bruteforce(&MonomialIdeal::unit(2)), Err(Error::UnitIdeal));
    }

    #[test]
    fn symbolic_power_examples() {
        let m = Monomial::parse("x1*x2^3", 2).unwrap();
        let principal = MonomialIdeal::principal(m.clone());
        assert_eq!(
            symbolic_power_bruteforce(&principal, 3).unwrap(),
            MonomialIdeal::principal(m.pow(3).unwrap())
        );
        let i = ideal(&["x1*x2", "x2*x3"], 3);
        assert_eq!(
            symbolic_power_bruteforce(&i, 2).unwrap(),
            ideal(&["x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"], 3)
        );
    }

    #[test]
    fn symbolic_power_exceeds_power_for_triangle() {
        // edge ideal of a triangle: x1x2x3 lies in I^(2) but not in I^2
        let i = ideal(&["x1*x2", "x1*x3", "x2*x3"], 3);
        let sym = symbolic_power_bruteforce(&i, 2).unwrap();
        let pow = i.power(2).unwrap();
        assert!(pow.is_subset(&sym).unwrap());
        assert!(sym.contains(&Monomial::parse("x1*x2*x3", 3).unwrap()).unwrap());
        assert!(!ideals_equal(&sym, &pow).unwrap());
    }

    #[test]
    fn equality_examples() {
        let i = ideal(&["x1*x2", "x2*x3"], 3);
        assert!(ideals_equal(&i, &i).unwrap());
        assert!(ideals_equal(&ideal(&["x1", "x1*x2"], 2), &ideal(&["x1"], 2)).unwrap());
        assert!(ideals_equal(&i, &MonomialIdeal::zero(4)).is_err());
    }
}
