//! Seeded random posets and monomials for the randomized checks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::monomial::Monomial;
use crate::poset::{Poset, VariableSet};
use crate::spectra::order_ideal;

pub const EDGE_PROBABILITY: f64 = 0.3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Family {
    pub max_n: usize,
    pub max_deg: u32,
    pub edge_probability: f64,
}

impl Family {
    pub fn new(max_n: usize, max_deg: u32) -> Self {
        Family {
            max_n: max_n.max(1),
            max_deg: max_deg.max(1),
            edge_probability: EDGE_PROBABILITY,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub poset: Poset,
    pub monomial: Monomial,
}

/// Generator for trial `trial` of a run seeded with `seed`. Each trial has
/// its own ChaCha stream, so trials can run in any order.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Random DAG on shuffled labels, each forward pair related with
/// probability `p`, then Hasse-reduced by the constructor.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, p: f64) -> Poset {
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(rng);
    let mut relations = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                relations.push((labels[a], labels[b]));
            }
        }
    }
    Poset::new(n, relations).expect("edges follow a linear extension")
}

/// Total degree uniform in `1..=max_deg`, each unit placed on a uniformly
/// random variable.
pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, max_deg: u32) -> Monomial {
    let degree = rng.gen_range(1..=max_deg.max(1));
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exponents(exps)
}

/// Product of a non-empty random subset of at most `max_size` variables.
pub fn random_squarefree<R: Rng>(rng: &mut R, n: usize, max_size: usize) -> Monomial {
    let size = rng.gen_range(1..=max_size.clamp(1, n));
    let mut vars: Vec<usize> = (1..=n).collect();
    vars.shuffle(rng);
    let set: VariableSet = vars[..size].iter().copied().collect();
    Monomial::squarefree(n, &set).expect("indices in range")
}

pub fn random_instance<R: Rng>(rng: &mut R, family: &Family) -> Instance {
    let n = rng.gen_range(1..=family.max_n);
    let poset = random_poset(rng, n, family.edge_probability);
    let monomial = random_monomial(rng, n, family.max_deg);
    Instance { poset, monomial }
}

pub fn random_squarefree_instance<R: Rng>(rng: &mut R, family: &Family) -> Instance {
    let n = rng.gen_range(1..=family.max_n);
    let poset = random_poset(rng, n, family.edge_probability);
    let monomial = random_squarefree(rng, n, n);
    Instance { poset, monomial }
}

/// Two monomials on one poset, of degree at most `max_deg` each.
pub fn random_pair<R: Rng>(rng: &mut R, family: &Family) -> (Poset, Monomial, Monomial) {
    let n = rng.gen_range(1..=family.max_n);
    let poset = random_poset(rng, n, family.edge_probability);
    let a = random_monomial(rng, n, family.max_deg);
    let b = random_monomial(rng, n, family.max_deg);
    (poset, a, b)
}

/// Two monomials with disjoint order ideals. The second is built only from
/// variables whose down-set avoids `A(m1)`; posets leaving no such variable
/// are redrawn.
pub fn random_disjoint_pair<R: Rng>(rng: &mut R, family: &Family) -> (Poset, Monomial, Monomial) {
    let max_n = family.max_n.max(2);
    loop {
        let n = rng.gen_range(2..=max_n);
        let poset = random_poset(rng, n, family.edge_probability);
        let m1 = random_monomial(rng, n, family.max_deg);
        let a1 = order_ideal(&poset, &m1).expect("same ambient");
        let free: Vec<usize> = (1..=n)
            .filter(|&i| {
                poset
                    .down_closure(&[i].into())
                    .expect("index in range")
                    .is_disjoint(&a1)
            })
            .collect();
        if free.is_empty() {
            continue;
        }
        let degree = rng.gen_range(1..=family.max_deg);
        let mut exps = vec![0u32; n];
        for _ in 0..degree {
            exps[free[rng.gen_range(0..free.len())] - 1] += 1;
        }
        return (poset, m1, Monomial::from_exponents(exps));
    }
}
