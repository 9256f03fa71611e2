//! Randomized cross-checks between the structural computations and the
//! brute-force oracle.
//!
//! Each `check_*` function takes one instance and returns `Err` with a
//! human-readable reason on the first disagreement. [`run_suite`] draws
//! seeded instances, runs every check on a worker pool and tallies the
//! outcomes per property in trial order.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::ideal::MonomialIdeal;
use crate::instances::{self, Family, Instance};
use crate::monomial::Monomial;
use crate::oracle;
use crate::poset::{Poset, VariableSet};
use crate::qborel::{self, apply_move, generate_principal, generate_sf_principal};
use crate::spectra;
use crate::spread;

pub type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn describe(inst: &Instance) -> String {
    let covers: Vec<String> = inst.poset.covers().map(|(a, b)| format!("{a}<{b}")).collect();
    format!("n={} covers=[{}] m={}", inst.poset.n(), covers.join(","), inst.monomial)
}

/// Equigeneration, closure under one further move, and a valid move
/// certificate for every generator.
pub fn check_generation(inst: &Instance) -> Check {
    let (q, m) = (&inst.poset, &inst.monomial);
    let ideal = lib(generate_principal(q, m))?;
    ensure!(ideal.contains_raw(m), "m is not in Q(m)");
    for g in ideal.generators() {
        ensure!(g.degree() == m.degree(), "generator {g} has degree {}", g.degree());
        for i in g.support().iter() {
            for j in 1..=q.n() {
                if let Ok(mv) = qborel::BorelMove::new(q, i, j) {
                    let next = lib(apply_move(g, mv))?;
                    ensure!(ideal.contains_raw(&next), "move {mv} leaves Q(m) from {g}");
                }
            }
        }
        let cert = lib(qborel::move_certificate(q, m, g))?;
        let mut shift = vec![0i64; q.n()];
        for mv in &cert {
            ensure!(m.exponent(mv.from()) > 0, "certificate divides x{} outside supp(m)", mv.from());
            ensure!(lib(q.lt(mv.to(), mv.from()))?, "certificate move {mv} is not a Borel move");
            shift[mv.from() - 1] -= 1;
            shift[mv.to() - 1] += 1;
        }
        for k in 0..q.n() {
            ensure!(
                m.exponents()[k] as i64 + shift[k] == g.exponents()[k] as i64,
                "certificate for {g} does not sum to its exponent vector"
            );
        }
    }
    Ok(())
}

/// `Q(m)` equals the expanded transversal factorization.
pub fn check_transversal(inst: &Instance) -> Check {
    let (q, m) = (&inst.poset, &inst.monomial);
    let factors = lib(qborel::transversal_factorization(q, m))?;
    let expanded = lib(qborel::expand_factorization(q.n(), &factors))?;
    ensure!(
        expanded == lib(generate_principal(q, m))?,
        "transversal product differs from Q(m)"
    );
    Ok(())
}

/// `Q(m1) Q(m2) = Q(m1 m2)`.
pub fn check_multiplicativity(q: &Poset, m1: &Monomial, m2: &Monomial) -> Check {
    let left = lib(lib(generate_principal(q, m1))?.product(&lib(generate_principal(q, m2))?))?;
    let right = lib(generate_principal(q, &lib(m1.mul(m2))?))?;
    ensure!(left == right, "Q({m1})Q({m2}) != Q({m1}*{m2})");
    Ok(())
}

/// `Q(m1) ∩ Q(m2) = Q(m1) Q(m2)` when `A(m1) ∩ A(m2) = ∅`.
pub fn check_disjoint_intersection(q: &Poset, m1: &Monomial, m2: &Monomial) -> Check {
    let a1 = lib(spectra::order_ideal(q, m1))?;
    let a2 = lib(spectra::order_ideal(q, m2))?;
    ensure!(a1.is_disjoint(&a2), "order ideals {a1} and {a2} overlap");
    let i1 = lib(generate_principal(q, m1))?;
    let i2 = lib(generate_principal(q, m2))?;
    ensure!(
        lib(i1.intersection(&i2))? == lib(i1.product(&i2))?,
        "intersection differs from product for {m1}, {m2}"
    );
    Ok(())
}

/// Components multiply back to `m` and partition `A(m)`; maxass is the set
/// of maximal members of ass, each ass member lying in exactly one of them;
/// the intersection of the component ideals is `Q(m)`.
pub fn check_components(inst: &Instance) -> Check {
    let (q, m) = (&inst.poset, &inst.monomial);
    let parts = lib(spectra::maximal_connected_components(q, m))?;
    let product = parts
        .iter()
        .try_fold(Monomial::one(q.n()), |acc, p| acc.mul(p));
    ensure!(lib(product)? == *m, "components do not multiply to m");
    let a = lib(spectra::order_ideal(q, m))?;
    let mut union = VariableSet::new();
    for p in &parts {
        let ap = lib(spectra::order_ideal(q, p))?;
        ensure!(union.is_disjoint(&ap), "component order ideals overlap");
        ensure!(lib(q.component_count(&ap))? == 1, "component {p} is not connected");
        union = union.union(&ap);
    }
    ensure!(union == a, "component order ideals do not cover A(m)");

    let ass = lib(spectra::associated_primes_principal(q, m))?;
    let maxass = lib(spectra::max_associated_primes(q, m))?;
    let maximal: BTreeSet<VariableSet> = ass
        .iter()
        .filter(|p| !ass.iter().any(|o| o != *p && p.is_subset(o)))
        .cloned()
        .collect();
    ensure!(maximal == maxass, "maxass is not the set of maximal associated primes");
    for p in &ass {
        let holders = maxass.iter().filter(|big| p.is_subset(big)).count();
        ensure!(holders == 1, "{p} lies in {holders} maximal associated primes");
    }

    let pieces = lib(spectra::component_decomposition(q, m))?;
    let mut meet = MonomialIdeal::unit(q.n());
    for piece in &pieces {
        meet = lib(meet.intersection(piece))?;
    }
    ensure!(meet == lib(generate_principal(q, m))?, "component ideals do not intersect to Q(m)");
    Ok(())
}

/// The connected-order-ideal description of `ass(Q(m))` matches the colon
/// search on `Q(m)^s` for every `s <= s_max`, and each witness is genuine.
pub fn check_associated_primes(inst: &Instance, s_max: u32) -> Check {
    let (q, m) = (&inst.poset, &inst.monomial);
    let fast = lib(spectra::associated_primes_principal(q, m))?;
    let base = lib(generate_principal(q, m))?;
    let mut power = base.clone();
    for s in 1..=s_max {
        if s > 1 {
            power = lib(power.product(&base))?;
        }
        let witnesses = lib(oracle::associated_primes_with_witnesses(&power))?;
        for (p, f) in &witnesses {
            let colon = lib(power.colon(f))?;
            ensure!(
                colon == lib(MonomialIdeal::prime(q.n(), p))?,
                "witness {f} does not give {p} on I^{s}"
            );
        }
        let brute: BTreeSet<VariableSet> = witnesses.into_keys().collect();
        ensure!(
            brute == fast,
            "ass(I^{s}) by colon search {:?} differs from {:?}",
            brute.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            fast.iter().map(|p| p.to_string()).collect::<Vec<_>>()
        );
    }
    for (s, primes) in lib(spectra::persistence_spectrum(q, m, s_max))? {
        ensure!(primes == fast, "persistence spectrum changes at s = {s}");
    }
    Ok(())
}

/// `I^(d)` by brute force, `I^d`, `Q(m^d)` and the maxass formula agree.
pub fn check_symbolic_powers(inst: &Instance, d_max: u32) -> Check {
    let (q, m) = (&inst.poset, &inst.monomial);
    let base = lib(generate_principal(q, m))?;
    for d in 1..=d_max {
        let brute = lib(oracle::symbolic_power_bruteforce(&base, d))?;
        let power = lib(base.power(d))?;
        let closure = lib(generate_principal(q, &lib(m.pow(d))?))?;
        ensure!(lib(oracle::ideals_equal(&brute, &power))?, "I^({d}) != I^{d}");
        ensure!(power == closure, "I^{d} != Q(m^{d})");
        ensure!(
            lib(spectra::symbolic_power_via_maxass(q, m, d))? == brute,
            "maxass formula disagrees at d = {d}"
        );
        ensure!(
            lib(spectra::symbolic_power_principal(q, m, d))? == brute,
            "symbolic_power_principal disagrees at d = {d}"
        );
    }
    Ok(())
}

/// `α(I^(s)) = s deg(m)`, zero symbolic defect and `I^(s) ⊆ I^r` for
/// `r <= s <= d_max`, with `I^(s)` from the oracle.
pub fn check_containment(inst: &Instance, d_max: u32) -> Check {
    let (q, m) = (&inst.poset, &inst.monomial);
    let inv = lib(spectra::containment_invariants(q, m, d_max))?;
    let deg = m.degree();
    ensure!(inv.waldschmidt == deg.into(), "Waldschmidt constant {} != {deg}", inv.waldschmidt);
    ensure!(inv.sdefect.iter().all(|&x| x == 0), "nonzero symbolic defect");
    ensure!(inv.resurgence_bound == 1.into(), "resurgence {} != 1", inv.resurgence_bound);
    let base = lib(generate_principal(q, m))?;
    let mut symbolic = Vec::new();
    let mut ordinary = Vec::new();
    for s in 1..=d_max {
        let sym = lib(oracle::symbolic_power_bruteforce(&base, s))?;
        ensure!(lib(sym.alpha())? == s as u64 * deg, "alpha(I^({s})) != {s}*{deg}");
        ensure!(
            inv.waldschmidt_sequence[s as usize - 1] == deg.into(),
            "alpha(I^({s}))/{s} reported as {}",
            inv.waldschmidt_sequence[s as usize - 1]
        );
        symbolic.push(sym);
        ordinary.push(lib(base.power(s))?);
    }
    for s in 0..symbolic.len() {
        for r in 0..=s {
            ensure!(
                lib(symbolic[s].is_subset(&ordinary[r]))?,
                "I^({}) not contained in I^{}",
                s + 1,
                r + 1
            );
        }
    }
    Ok(())
}

/// Poset formula, exponent-matrix rank and `r - s + 1` from `Γ` agree.
pub fn check_spread(inst: &Instance) -> Check {
    let (q, m) = (&inst.poset, &inst.monomial);
    let ideal = lib(generate_principal(q, m))?;
    let formula = lib(spread::analytic_spread_principal(q, m))?;
    let rank = lib(spread::analytic_spread_rank(&ideal))?;
    let gamma = spread::linear_relation_graph(&ideal);
    let graph = spread::spread_via_relation_graph(&gamma);
    ensure!(
        formula == rank && rank == graph,
        "spread formula={formula} rank={rank} graph={graph}"
    );
    let a = lib(spectra::order_ideal(q, m))?;
    ensure!(
        lib(spread::hasse_incidence_rank(q, &a))? + 1 == formula,
        "incidence rank is not |A| - K(A)"
    );
    Ok(())
}

/// `Γ` is the transitive closure of the Hasse diagram of `A(m)` minus
/// isolated vertices, and with `c` isolated vertices `|A| = r + c`,
/// `K(A) = s + c`.
pub fn check_closure_theorem(inst: &Instance) -> Check {
    let (q, m) = (&inst.poset, &inst.monomial);
    let report = lib(spread::check_transitive_closure_theorem(q, m))?;
    ensure!(
        report.holds,
        "relation graph differs from Hasse closure at {:?}",
        report.counterexample
    );
    let a = lib(spectra::order_ideal(q, m))?;
    let hasse = lib(q.hasse_graph(&a))?;
    let c = hasse.isolated_vertices().len();
    let gamma = spread::linear_relation_graph(&lib(generate_principal(q, m))?);
    let (r, s) = (gamma.vertex_count(), gamma.component_count());
    ensure!(a.len() == r + c, "|A| = {} but r + c = {}", a.len(), r + c);
    ensure!(
        lib(q.component_count(&a))? == s + c,
        "K(A) differs from s + c"
    );
    Ok(())
}

/// Square-free spread formula against the rank of `sfQ(m)`; the gcd's
/// support is an order ideal; no minimal elements in `supp(m)` forces
/// gcd 1.
pub fn check_sf_spread(inst: &Instance) -> Check {
    let (q, m) = (&inst.poset, &inst.monomial);
    let sf = lib(generate_sf_principal(q, m))?;
    ensure!(sf == lib(qborel::sf_by_filtering(q, m))?, "square-free search disagrees with filter");
    let result = lib(spread::analytic_spread_sf(q, m))?;
    let rank = lib(spread::analytic_spread_rank(&sf))?;
    ensure!(result.spread == rank, "sf spread formula {} != rank {rank}", result.spread);
    ensure!(result.gcd == lib(sf.generator_gcd())?, "reported gcd is not gcd(G(sfQ(m)))");
    let gsupp = result.gcd.support();
    ensure!(lib(q.is_order_ideal(&gsupp))?, "supp(gcd) = {gsupp} is not an order ideal");
    if m.support().is_disjoint(&q.minimal_elements()) {
        ensure!(result.gcd.is_one(), "gcd {} != 1 without minimal elements", result.gcd);
        ensure!(
            result.spread == lib(spread::analytic_spread_principal(q, m))?,
            "sf spread differs from |A| - K + 1 without minimal elements"
        );
    }
    Ok(())
}

/// `ass` from the connected-order-ideal description against the colon search
/// on `Q(m)` only.
pub fn check_ass_oracle(inst: &Instance) -> Check {
    check_associated_primes(inst, 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub trials: usize,
    pub max_n: usize,
    pub max_deg: u32,
    pub properties: Vec<PropertyTally>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed == p.total)
    }
}

pub const PROPERTY_NAMES: [&str; 12] = [
    "generation",
    "transversal",
    "multiplicativity",
    "disjoint-intersection",
    "components",
    "ass-oracle",
    "persistence",
    "symbolic-power",
    "containment",
    "spread",
    "closure-theorem",
    "sf-spread",
];

/// Powers checked by the persistence, symbolic-power and containment
/// properties.
pub const SUITE_POWER_BOUND: u32 = 3;

fn run_trial(seed: u64, trial: u64, family: &Family) -> Vec<(Check, String)> {
    let mut rng = instances::trial_rng(seed, trial);
    let inst = instances::random_instance(&mut rng, family);
    let (pq, p1, p2) = instances::random_pair(&mut rng, family);
    let (dq, d1, d2) = instances::random_disjoint_pair(&mut rng, family);
    let sf = instances::random_squarefree_instance(&mut rng, family);
    let ctx = describe(&inst);
    let k = SUITE_POWER_BOUND;
    vec![
        (check_generation(&inst), ctx.clone()),
        (check_transversal(&inst), ctx.clone()),
        (check_multiplicativity(&pq, &p1, &p2), format!("n={} m1={p1} m2={p2}", pq.n())),
        (check_disjoint_intersection(&dq, &d1, &d2), format!("n={} m1={d1} m2={d2}", dq.n())),
        (check_components(&inst), ctx.clone()),
        (check_ass_oracle(&inst), ctx.clone()),
        (check_associated_primes(&inst, k), ctx.clone()),
        (check_symbolic_powers(&inst, k), ctx.clone()),
        (check_containment(&inst, k), ctx.clone()),
        (check_spread(&inst), ctx.clone()),
        (check_closure_theorem(&inst), ctx),
        (check_sf_spread(&sf), describe(&sf)),
    ]
}

/// Runs every property on `trials` seeded instances.
pub fn run_suite(seed: u64, trials: usize, family: Family) -> SuiteReport {
    let outcomes: Vec<Vec<(Check, String)>> = (0..trials as u64)
        .into_par_iter()
        .map(|t| run_trial(seed, t, &family))
        .collect();
    let mut properties: Vec<PropertyTally> = PROPERTY_NAMES
        .iter()
        .map(|&name| PropertyTally {
            name,
            passed: 0,
            total: 0,
            first_failure: None,
        })
        .collect();
    for (trial, results) in outcomes.into_iter().enumerate() {
        for (tally, (outcome, ctx)) in properties.iter_mut().zip(results) {
            tally.total += 1;
            match outcome {
                Ok(()) => tally.passed += 1,
                Err(reason) if tally.first_failure.is_none() => {
                    tally.first_failure = Some(format!("trial {trial}: {reason} ({ctx})"));
                }
                Err(_) => {}
            }
        }
    }
    SuiteReport {
        seed,
        trials,
        max_n: family.max_n,
        max_deg: family.max_deg,
        properties,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let report = run_suite(1, 10, Family::new(4, 2));
        assert_eq!(report.properties.len(), PROPERTY_NAMES.len());
        for p in &report.properties {
            assert_eq!(p.passed, 10, "{}: {:?}", p.name, p.first_failure);
        }
        assert!(report.all_passed());
    }

    #[test]
    fn suite_is_deterministic() {
        let a = run_suite(7, 6, Family::new(5, 3));
        let b = run_suite(7, 6, Family::new(5, 3));
        assert_eq!(a, b);
    }
}
