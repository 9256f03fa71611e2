//! Analytic spread of equigenerated monomial ideals.
//!
//! For an ideal generated in a single degree, the analytic spread equals the
//! rank of the exponent matrix of its minimal generators. This module
//! computes that rank exactly over the rationals and compares it with the
//! closed formulas for principal and square-free principal Q-Borel ideals and
//! with the linear relation graph.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poset::{Poset, VariableSet};
use crate::qborel::{generate_principal, generate_sf_principal};
use crate::spectra::order_ideal;

/// `n × r` integer matrix whose columns are exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    rows: Vec<Vec<i64>>,
}

impl ExponentMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        ExponentMatrix { rows }
    }

    /// Columns are the generators of `ideal` in canonical order.
    pub fn of_ideal(ideal: &MonomialIdeal) -> Self {
        let rows = (0..ideal.n())
            .map(|k| {
                ideal
                    .generators()
                    .iter()
                    .map(|g| g.exponents()[k] as i64)
                    .collect()
            })
            .collect();
        ExponentMatrix { rows }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        integer_rank(&self.rows)
    }
}

/// Rank over the rationals of an integer matrix given by rows.
///
/// Bareiss elimination: after each pivot step every entry is a minor of the
/// original matrix, and the division by the previous pivot is exact.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let height = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(pivot_row) = (rank..height).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let pivot = a[rank][col].clone();
        for r in rank + 1..height {
            let factor = a[r][col].clone();
            for c in col..width {
                let v = (&pivot * &a[r][c] - &factor * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
        }
        debug_assert!(!pivot.abs().is_zero());
        prev = pivot;
        rank += 1;
    }
    rank
}

/// `ℓ(I)` as the rank of the exponent matrix; `I` must be equigenerated.
pub fn analytic_spread_rank(ideal: &MonomialIdeal) -> Result<usize> {
    if !ideal.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    Ok(ExponentMatrix::of_ideal(ideal).rank())
}

/// `ℓ(Q(m)) = |A(m)| - K(A(m)) + 1`.
pub fn analytic_spread_principal(poset: &Poset, m: &Monomial) -> Result<usize> {
    if m.is_one() {
        return Err(Error::UnitMonomial);
    }
    let a = order_ideal(poset, m)?;
    Ok(a.len() - poset.component_count(&a)? + 1)
}

/// Graph on variable indices with an edge `{i, j}` whenever
/// `x_i m_k = x_j m_l` for two minimal generators `m_k`, `m_l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearRelationGraph(SimpleGraph);

impl LinearRelationGraph {
    pub fn graph(&self) -> &SimpleGraph {
        &self.0
    }

    /// `r`: number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.0.vertices().len()
    }

    /// `s`: number of connected components.
    pub fn component_count(&self) -> usize {
        self.0.components().len()
    }
}

impl fmt::Display for LinearRelationGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Pairwise scan of the generators.
pub fn linear_relation_graph(ideal: &MonomialIdeal) -> LinearRelationGraph {
    let gens = ideal.generators();
    let mut graph = SimpleGraph::default();
    for (k, u) in gens.iter().enumerate() {
        for v in &gens[k + 1..] {
            // x_i u = x_j v  iff  v - u = e_i - e_j
            let mut plus = None;
            let mut minus = None;
            let mut ok = true;
            for (idx, (&a, &b)) in u.exponents().iter().zip(v.exponents()).enumerate() {
                match b as i64 - a as i64 {
                    0 => {}
                    1 if plus.is_none() => plus = Some(idx + 1),
                    -1 if minus.is_none() => minus = Some(idx + 1),
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if let (true, Some(i), Some(j)) = (ok, plus, minus) {
                graph.add_edge(i, j);
            }
        }
    }
    LinearRelationGraph(graph)
}

/// `ℓ(I) = r - s + 1` for a polymatroidal ideal with relation graph `Γ`.
pub fn spread_via_relation_graph(gamma: &LinearRelationGraph) -> usize {
    gamma.vertex_count() + 1 - gamma.component_count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub holds: bool,
    /// `Γ` of `Q(m)`.
    pub relation_graph: SimpleGraph,
    /// Transitive closure of the Hasse diagram of `A(m)`, isolated vertices removed.
    pub hasse_closure: SimpleGraph,
    /// An edge present in exactly one of the two graphs.
    pub counterexample: Option<(usize, usize)>,
}

/// Compares `Γ(Q(m))` with the transitive closure of the Hasse diagram of
/// `A(m)` after dropping isolated vertices.
pub fn check_transitive_closure_theorem(poset: &Poset, m: &Monomial) -> Result<ClosureReport> {
    let ideal = generate_principal(poset, m)?;
    let gamma = linear_relation_graph(&ideal).0;
    let hasse = poset.hasse_graph(&order_ideal(poset, m)?)?;
    let closure = hasse.transitive_closure().without_isolated();
    let counterexample = gamma
        .edges()
        .find(|&(a, b)| !closure.has_edge(a, b))
        .or_else(|| closure.edges().find(|&(a, b)| !gamma.has_edge(a, b)));
    Ok(ClosureReport {
        holds: gamma == closure,
        relation_graph: gamma,
        hasse_closure: closure,
        counterexample,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareFreeSpread {
    pub spread: usize,
    /// `m'`, the gcd of the generators of `sfQ(m)`.
    pub gcd: Monomial,
    /// Ground set of the induced poset `Q'`, i.e. the variables not dividing `m'`.
    pub induced_ground_set: VariableSet,
}

/// `ℓ(sfQ(m)) = |A_{Q'}(m/m')| - K(A_{Q'}(m/m')) + 1`, where `m'` is the gcd
/// of the generators and `Q'` is induced on the variables not dividing `m'`.
pub fn analytic_spread_sf(poset: &Poset, m: &Monomial) -> Result<SquareFreeSpread> {
    let sf = generate_sf_principal(poset, m)?;
    let gcd = sf.generator_gcd()?;
    let ground = VariableSet::full(poset.n()).difference(&gcd.support());
    let induced = poset.induced(&ground)?;
    let rest = m.div(&gcd)?;
    let spread = if rest.is_one() {
        // sfQ(m) = <m>
        1
    } else {
        let local_support: VariableSet = rest
            .support()
            .iter()
            .map(|i| induced.to_local(i).expect("m/m' avoids supp(m')"))
            .collect();
        let a = induced.poset.down_closure(&local_support)?;
        a.len() - induced.poset.component_count(&a)? + 1
    };
    Ok(SquareFreeSpread {
        spread,
        gcd,
        induced_ground_set: ground,
    })
}

/// Rank of the oriented vertex-edge incidence matrix of the Hasse diagram on
/// `A` (each cover column is `e_lower - e_upper`). Equals `|A| - K(A)`.
pub fn hasse_incidence_rank(poset: &Poset, order_ideal: &VariableSet) -> Result<usize> {
    let hasse = poset.hasse_graph(order_ideal)?;
    let vertices: Vec<usize> = order_ideal.iter().collect();
    let rows = vertices
        .iter()
        .map(|&v| {
            hasse
                .edges()
                .map(|(a, b)| match v {
                    _ if v == a => 1,
                    _ if v == b => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect::<Vec<Vec<i64>>>();
    Ok(integer_rank(&rows))
}
