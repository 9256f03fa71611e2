//! Order-ideal data of principal Q-Borel ideals: `A(m)`, maximal connected
//! components, associated primes, symbolic powers and containment invariants.
//!
//! Everything here is driven by the poset: `A(m)` depends only on the support
//! of `m`, so associated primes are enumerated over subsets of `supp(m)`
//! rather than over all divisors of `m`.

use std::collections::BTreeSet;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poset::{Poset, VariableSet};
use crate::qborel::generate_principal;

fn non_unit(m: &Monomial) -> Result<()> {
    if m.is_one() {
        Err(Error::UnitMonomial)
    } else {
        Ok(())
    }
}

fn check_ambient(poset: &Poset, m: &Monomial) -> Result<()> {
    if poset.n() == m.n() {
        Ok(())
    } else {
        Err(Error::AmbientMismatch {
            left: poset.n(),
            right: m.n(),
        })
    }
}

/// `A(m)`, the down-closure of the support. `A(1)` is empty.
pub fn order_ideal(poset: &Poset, m: &Monomial) -> Result<VariableSet> {
    check_ambient(poset, m)?;
    poset.down_closure(&m.support())
}

fn is_connected(poset: &Poset, order_ideal: &VariableSet) -> Result<bool> {
    Ok(!order_ideal.is_empty() && poset.component_count(order_ideal)? == 1)
}

/// The largest divisor `m_O` of `m` with `A(m_O) = O`.
pub fn m_of_order_ideal(poset: &Poset, m: &Monomial, o: &VariableSet) -> Result<Monomial> {
    check_ambient(poset, m)?;
    let restricted = m.restrict(o);
    if !poset.is_order_ideal(o)? || order_ideal(poset, &restricted)? != *o {
        return Err(Error::NoRealizingDivisor {
            monomial: m.to_string(),
            order_ideal: o.to_string(),
        });
    }
    Ok(restricted)
}

/// `m = m_1 ⋯ m_r`, one factor per connected component of `A(m)`, in the
/// order of the components' smallest elements.
pub fn maximal_connected_components(poset: &Poset, m: &Monomial) -> Result<Vec<Monomial>> {
    non_unit(m)?;
    let a = order_ideal(poset, m)?;
    Ok(poset
        .connected_components(&a)?
        .iter()
        .map(|part| m.restrict(part))
        .collect())
}

/// `ass(Q(m))`: the connected order ideals `A(m')` for `m' | m`.
pub fn associated_primes_principal(poset: &Poset, m: &Monomial) -> Result<BTreeSet<VariableSet>> {
    non_unit(m)?;
    check_ambient(poset, m)?;
    let support: Vec<usize> = m.support().iter().collect();
    let mut primes = BTreeSet::new();
    for mask in 1u64..(1u64 << support.len()) {
        let subset: VariableSet = support
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &i)| i)
            .collect();
        let closure = poset.down_closure(&subset)?;
        if is_connected(poset, &closure)? {
            primes.insert(closure);
        }
    }
    #[cfg(debug_assertions)]
    debug_assert_eq!(primes, primes_over_all_divisors(poset, m)?);
    Ok(primes)
}

/// Same set as [`associated_primes_principal`], enumerating every divisor.
#[cfg(debug_assertions)]
fn primes_over_all_divisors(poset: &Poset, m: &Monomial) -> Result<BTreeSet<VariableSet>> {
    let mut primes = BTreeSet::new();
    let mut divisor = vec![0u32; m.n()];
    loop {
        let d = Monomial::from_exponents(divisor.clone());
        let a = order_ideal(poset, &d)?;
        if is_connected(poset, &a)? {
            primes.insert(a);
        }
        // odometer over 0..=a_k
        let mut k = 0;
        loop {
            if k == divisor.len() {
                return Ok(primes);
            }
            if divisor[k] < m.exponents()[k] {
                divisor[k] += 1;
                break;
            }
            divisor[k] = 0;
            k += 1;
        }
    }
}

/// `maxass(Q(m))`: `A(m_k)` for the maximal connected components `m_k`.
pub fn max_associated_primes(poset: &Poset, m: &Monomial) -> Result<BTreeSet<VariableSet>> {
    maximal_connected_components(poset, m)?
        .iter()
        .map(|mk| order_ideal(poset, mk))
        .collect()
}

/// `[Q(m_1), ..., Q(m_r)]` with `Q(m) = Q(m_1) ∩ ... ∩ Q(m_r)`.
pub fn component_decomposition(poset: &Poset, m: &Monomial) -> Result<Vec<MonomialIdeal>> {
    maximal_connected_components(poset, m)?
        .iter()
        .map(|mk| generate_principal(poset, mk))
        .collect()
}

/// `Q(m)^(d)`, which coincides with the ordinary power `Q(m)^d`.
pub fn symbolic_power_principal(poset: &Poset, m: &Monomial, d: u32) -> Result<MonomialIdeal> {
    if d == 0 {
        return Err(Error::NonPositive("d"));
    }
    generate_principal(poset, m)?.power(d)
}

/// `⋂_{P ∈ maxass} (Q(m)^d S_P ∩ S)`, the symbolic power by its definition
/// restricted to the maximal associated primes.
pub fn symbolic_power_via_maxass(poset: &Poset, m: &Monomial, d: u32) -> Result<MonomialIdeal> {
    if d == 0 {
        return Err(Error::NonPositive("d"));
    }
    let power = generate_principal(poset, m)?.power(d)?;
    let mut acc = MonomialIdeal::unit(m.n());
    for prime in max_associated_primes(poset, m)? {
        acc = acc.intersection(&power.localize_contract(&prime)?)?;
    }
    Ok(acc)
}

/// `ass(Q(m)^s) = ass(Q(m^s))` for `s = 1..=s_max`.
pub fn persistence_spectrum(
    poset: &Poset,
    m: &Monomial,
    s_max: u32,
) -> Result<Vec<(u32, BTreeSet<VariableSet>)>> {
    if s_max == 0 {
        return Err(Error::NonPositive("s_max"));
    }
    (1..=s_max)
        .map(|s| Ok((s, associated_primes_principal(poset, &m.pow(s)?)?)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentInvariants {
    /// Exact Waldschmidt constant `deg(m)`.
    pub waldschmidt: Ratio<u64>,
    /// `α(I^(s)) / s` for `s = 1..=d_max`.
    pub waldschmidt_sequence: Vec<Ratio<u64>>,
    /// `sdefect(I, d)` for `d = 1..=d_max`.
    pub sdefect: Vec<u64>,
    pub resurgence_bound: Ratio<u64>,
}

/// Waldschmidt constant, symbolic defects and resurgence of `Q(m)`, each
/// checked against symbolic powers computed through the maximal associated
/// primes up to `d_max`.
pub fn containment_invariants(poset: &Poset, m: &Monomial, d_max: u32) -> Result<ContainmentInvariants> {
    if d_max == 0 {
        return Err(Error::NonPositive("d_max"));
    }
    let base = generate_principal(poset, m)?;
    let deg = m.degree();
    let mut ordinary = Vec::new();
    let mut symbolic = Vec::new();
    let mut sequence = Vec::new();
    let mut sdefect = Vec::new();
    for d in 1..=d_max {
        let power = base.power(d)?;
        let sym = symbolic_power_via_maxass(poset, m, d)?;
        if sym != power {
            return Err(Error::TheoremViolation(format!(
                "symbolic and ordinary power differ at d = {d}"
            )));
        }
        sdefect.push(0);
        let alpha = sym.alpha()?;
        if alpha != d as u64 * deg {
            return Err(Error::TheoremViolation(format!(
                "alpha(I^({d})) = {alpha}, expected {}",
                d as u64 * deg
            )));
        }
        sequence.push(Ratio::new(alpha, d as u64));
        ordinary.push(power);
        symbolic.push(sym);
    }
    for s in 1..=d_max as usize {
        for r in 1..=s {
            if !symbolic[s - 1].is_subset(&ordinary[r - 1])? {
                return Err(Error::TheoremViolation(format!(
                    "I^({s}) is not contained in I^{r}"
                )));
            }
        }
    }
    Ok(ContainmentInvariants {
        waldschmidt: Ratio::from_integer(deg),
        waldschmidt_sequence: sequence,
        sdefect,
        resurgence_bound: Ratio::from_integer(1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{q11, q3};

    fn mono(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn primes<const K: usize>(sets: [&[usize]; K]) -> BTreeSet<VariableSet> {
        sets.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn order_ideal_examples() {
        let q = q11();
        assert_eq!(order_ideal(&q, &mono("x4*x9^2", 11)).unwrap(), [1, 4, 6, 7, 9].into());
        assert_eq!(order_ideal(&q, &mono("x9", 11)).unwrap(), [6, 7, 9].into());
        assert_eq!(order_ideal(&q, &mono("x9^2", 11)).unwrap(), [6, 7, 9].into());
        assert!(order_ideal(&q, &Monomial::one(11)).unwrap().is_empty());
    }

    #[test]
    fn m_of_order_ideal_examples() {
        let q = q11();
        let m = mono("x4*x9^2", 11);
        assert_eq!(m_of_order_ideal(&q, &m, &[6, 7, 9].into()).unwrap(), mono("x9^2", 11));
        assert_eq!(m_of_order_ideal(&q, &m, &[1, 4].into()).unwrap(), mono("x4", 11));
        let a = order_ideal(&q, &m).unwrap();
        assert_eq!(m_of_order_ideal(&q, &m, &a).unwrap(), m);
        // {1} is an order ideal but no divisor of m has A = {1}
        assert!(matches!(
            m_of_order_ideal(&q, &m, &[1].into()),
            Err(Error::NoRealizingDivisor { .. })
        ));
        assert!(m_of_order_ideal(&q, &m, &[4].into()).is_err());
    }

    #[test]
    fn components_examples() {
        let q = q11();
        assert_eq!(
            maximal_connected_components(&q, &mono("x4*x9^2", 11)).unwrap(),
            vec![mono("x4", 11), mono("x9^2", 11)]
        );
        assert_eq!(
            maximal_connected_components(&q, &mono("x2*x4^3", 11)).unwrap(),
            vec![mono("x2*x4^3", 11)]
        );
        assert_eq!(
            maximal_connected_components(&q3(), &mono("x2*x3", 3)).unwrap(),
            vec![mono("x3", 3), mono("x2", 3)]
        );
        assert_eq!(
            maximal_connected_components(&q, &Monomial::one(11)),
            Err(Error::UnitMonomial)
        );
    }

    #[test]
    fn associated_primes_examples() {
        assert_eq!(
            associated_primes_principal(&q11(), &mono("x4*x9^2", 11)).unwrap(),
            primes([&[1, 4], &[6, 7, 9]])
        );
        assert_eq!(
            associated_primes_principal(&Poset::antichain(2), &mono("x1*x2", 2)).unwrap(),
            primes([&[1], &[2]])
        );
        assert_eq!(
            associated_primes_principal(&q3(), &mono("x2*x3", 3)).unwrap(),
            primes([&[2], &[1, 3]])
        );
        // x5 alone gives the connected {1,...,5}; with x2 also {1,2}
        assert_eq!(
            associated_primes_principal(&q11(), &mono("x2*x5", 11)).unwrap(),
            primes([&[1, 2], &[1, 2, 3, 4, 5]])
        );
    }

    #[test]
    fn max_associated_primes_examples() {
        assert_eq!(
            max_associated_primes(&q11(), &mono("x4*x9^2", 11)).unwrap(),
            primes([&[1, 4], &[6, 7, 9]])
        );
        assert_eq!(
            max_associated_primes(&q11(), &mono("x2*x5", 11)).unwrap(),
            primes([&[1, 2, 3, 4, 5]])
        );
        let chain = Poset::chain(3);
        let m = mono("x1*x3", 3);
        assert_eq!(associated_primes_principal(&chain, &m).unwrap(), primes([&[1], &[1, 2, 3]]));
        assert_eq!(max_associated_primes(&chain, &m).unwrap(), primes([&[1, 2, 3]]));
    }

    #[test]
    fn decomposition_examples() {
        let q = q11();
        let m = mono("x4*x9^2", 11);
        let parts = component_decomposition(&q, &m).unwrap();
        assert_eq!(parts.len(), 2);
        let meet = parts[0].intersection(&parts[1]).unwrap();
        assert_eq!(meet, generate_principal(&q, &m).unwrap());

        let parts = component_decomposition(&q3(), &mono("x2*x3", 3)).unwrap();
        let shown: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["x1\nx3\n", "x2\n"]);

        let connected = mono("x2*x4", 11);
        assert_eq!(
            component_decomposition(&q, &connected).unwrap(),
            vec![generate_principal(&q, &connected).unwrap()]
        );
    }

    #[test]
    fn symbolic_power_examples() {
        let q = q3();
        let m = mono("x2*x3", 3);
        assert_eq!(symbolic_power_principal(&q, &m, 1).unwrap(), generate_principal(&q, &m).unwrap());
        let sq = symbolic_power_principal(&q, &m, 2).unwrap();
        let shown: Vec<String> = sq.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"]);
        assert_eq!(symbolic_power_via_maxass(&q, &m, 2).unwrap(), sq);

        let q = q11();
        let m = mono("x4*x9^2", 11);
        assert_eq!(
            symbolic_power_principal(&q, &m, 2).unwrap(),
            generate_principal(&q, &m.pow(2).unwrap()).unwrap()
        );
        assert_eq!(symbolic_power_principal(&q, &m, 0), Err(Error::NonPositive("d")));
    }

    #[test]
    fn persistence_examples() {
        let q = q11();
        let m = mono("x4*x9^2", 11);
        let spectrum = persistence_spectrum(&q, &m, 3).unwrap();
        assert_eq!(spectrum.len(), 3);
        for (s, (k, set)) in spectrum.iter().enumerate() {
            assert_eq!(*k as usize, s + 1);
            assert_eq!(set, &primes([&[1, 4], &[6, 7, 9]]));
        }
    }

    #[test]
    fn containment_examples() {
        let inv = containment_invariants(&q11(), &mono("x4*x9^2", 11), 2).unwrap();
        assert_eq!(inv.waldschmidt, Ratio::from_integer(3));
        assert_eq!(inv.sdefect, vec![0, 0]);
        assert_eq!(inv.resurgence_bound, Ratio::from_integer(1));

        let inv = containment_invariants(&Poset::antichain(3), &mono("x1*x3^2", 3), 3).unwrap();
        assert_eq!(inv.sdefect, vec![0, 0, 0]);

        let inv = containment_invariants(&q3(), &mono("x2*x3", 3), 3).unwrap();
        assert_eq!(inv.waldschmidt_sequence, vec![Ratio::from_integer(2); 3]);
    }
}
