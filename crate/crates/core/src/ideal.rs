//! Monomial ideals represented by their minimal generating set `G(I)`.
//!
//! Every constructor funnels through [`minimalize`], so a `MonomialIdeal`
//! always holds a deduplicated antichain under divisibility, sorted in the
//! canonical order of [`Monomial`].
//!
//! Localization at a monomial prime `P = <x_i : i in P>` followed by
//! contraction back to the polynomial ring inverts every variable outside
//! `P`. For a monomial ideal this sends each generator `u` to `u` with the
//! exponents of the inverted variables set to zero, since those variables
//! are units in `S_P` and `S_P ∩ S` keeps exactly the monomials divisible by
//! such a stripped generator. [`MonomialIdeal::localize_contract`] implements
//! that map.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poset::VariableSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

fn support_mask(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .take(64)
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (k, _)| acc | (1 << k))
}

/// Keeps exactly the divisibility-minimal monomials of `ms`.
///
/// All monomials must live in `n` variables; callers inside the crate
/// guarantee this, [`MonomialIdeal::from_generators`] checks it.
pub fn minimalize(n: usize, ms: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    let mut all: Vec<Monomial> = ms.into_iter().collect();
    all.sort();
    all.dedup();

    // Sorted by degree, so a divisor of `c` other than `c` itself is among
    // the kept monomials of strictly smaller degree.
    let mut kept: Vec<(Monomial, u64, u64)> = Vec::new();
    for c in all {
        let deg = c.degree();
        let mask = support_mask(&c);
        let covered = kept
            .iter()
            .take_while(|(_, d, _)| *d < deg)
            .any(|(g, _, gmask)| gmask & !mask == 0 && g.divides_raw(&c));
        if !covered {
            kept.push((c, deg, mask));
        }
    }
    MonomialIdeal {
        n,
        gens: kept.into_iter().map(|(g, _, _)| g).collect(),
    }
}

impl MonomialIdeal {
    /// The zero ideal (no generators).
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// The unit ideal `<1>`.
    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            n: m.n(),
            gens: vec![m],
        }
    }

    pub fn from_generators(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::AmbientMismatch {
                left: n,
                right: bad.n(),
            });
        }
        Ok(minimalize(n, gens))
    }

    /// Ideal generated by the variables in `set`.
    pub fn prime(n: usize, set: &VariableSet) -> Result<Self> {
        let vars = set
            .iter()
            .map(|i| Monomial::var(n, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(minimalize(n, vars))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    fn same_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    fn check_monomial(&self, f: &Monomial) -> Result<()> {
        if f.n() == self.n {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.n,
                right: f.n(),
            })
        }
    }

    /// Membership: some generator divides `f`.
    pub fn contains(&self, f: &Monomial) -> Result<bool> {
        self.check_monomial(f)?;
        Ok(self.contains_raw(f))
    }

    pub(crate) fn contains_raw(&self, f: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_raw(f))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.gens.iter().all(|g| other.contains_raw(g)))
    }

    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    /// Least common multiple of all generators (`1` for the zero ideal).
    pub fn generator_lcm(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.n), |acc, g| acc.lcm_raw(g))
    }

    /// Greatest common divisor of all generators.
    pub fn generator_gcd(&self) -> Result<Monomial> {
        let (first, rest) = self.gens.split_first().ok_or(Error::ZeroIdeal)?;
        Ok(rest.iter().fold(first.clone(), |acc, g| acc.gcd_raw(g)))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        let mut products = HashSet::with_capacity(self.len() * other.len());
        for u in &self.gens {
            for v in &other.gens {
                products.insert(u.mul_raw(v)?);
            }
        }
        Ok(minimalize(self.n, products))
    }

    pub fn power(&self, d: u32) -> Result<MonomialIdeal> {
        if d == 0 {
            return Err(Error::NonPositive("power exponent"));
        }
        let mut acc = self.clone();
        for _ in 1..d {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        let mut lcms = HashSet::with_capacity(self.len() * other.len());
        for u in &self.gens {
            for v in &other.gens {
                lcms.insert(u.lcm_raw(v));
            }
        }
        Ok(minimalize(self.n, lcms))
    }

    /// `I : <f>`.
    pub fn colon(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(f)?;
        Ok(minimalize(self.n, self.gens.iter().map(|u| u.strip_raw(f))))
    }

    /// `I S_P ∩ S` for the monomial prime on `prime`.
    pub fn localize_contract(&self, prime: &VariableSet) -> Result<MonomialIdeal> {
        prime.check_range(self.n)?;
        Ok(minimalize(self.n, self.gens.iter().map(|u| u.restrict(prime))))
    }

    /// Smallest generator degree.
    pub fn alpha(&self) -> Result<u64> {
        self.gens
            .iter()
            .map(Monomial::degree)
            .min()
            .ok_or(Error::ZeroIdeal)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.gens {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}
