//! Finite posets on the ground set `{x1, ..., xn}`.
//!
//! A [`Poset`] is stored as its Hasse diagram (cover relations) together with
//! a precomputed reflexive-transitive closure, one bit row per element, so
//! that `leq` is a single lookup. Variables are 1-indexed throughout.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use bitvec::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// A set of variable indices, kept sorted.
///
/// Serves as an order ideal `A(m)`, as a support `supp(m)` and as the
/// monomial prime `<x_i : i in A>`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VariableSet(BTreeSet<usize>);

impl VariableSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn insert(&mut self, i: usize) -> bool {
        self.0.insert(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &VariableSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VariableSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &VariableSet) -> VariableSet {
        VariableSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &VariableSet) -> VariableSet {
        VariableSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VariableSet) -> VariableSet {
        VariableSet(self.0.difference(&other.0).copied().collect())
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        (1..=n).collect()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub(crate) fn check_range(&self, n: usize) -> Result<()> {
        match self.iter().find(|&i| i == 0 || i > n) {
            Some(index) => Err(Error::IndexOutOfRange { index, n }),
            None => Ok(()),
        }
    }
}

impl FromIterator<usize> for VariableSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VariableSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for VariableSet {
    fn from(value: [usize; N]) -> Self {
        value.into_iter().collect()
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{i}")?;
        }
        f.write_str("}")
    }
}

/// A finite poset on `{x1, ..., xn}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// Cover relations `(lower, upper)`, transitively reduced.
    covers: BTreeSet<(usize, usize)>,
    /// `below[i][j]` iff `x_j <=_Q x_i`; row and column 0 are unused.
    below: Vec<BitVec>,
}

impl Poset {
    /// Builds a poset from any acyclic list of relations `(lower, upper)`.
    /// Transitive edges are dropped, so `covers()` is always the Hasse diagram.
    pub fn new(n: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for (lo, hi) in relations {
            for index in [lo, hi] {
                if index == 0 || index > n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if lo == hi {
                return Err(Error::SelfRelation(lo));
            }
            up[lo].push(hi);
        }

        // Kahn's algorithm; processing in topological order lets each element
        // inherit the down-sets of everything it covers.
        let mut indegree = vec![0usize; n + 1];
        for targets in &up {
            for &hi in targets {
                indegree[hi] += 1;
            }
        }
        let mut queue: VecDeque<usize> = (1..=n).filter(|&i| indegree[i] == 0).collect();
        let mut below: Vec<BitVec> = (0..=n)
            .map(|i| {
                let mut row = bitvec![0; n + 1];
                if i > 0 {
                    row.set(i, true);
                }
                row
            })
            .collect();
        let mut visited = 0;
        while let Some(lo) = queue.pop_front() {
            visited += 1;
            let lo_row = below[lo].clone();
            for &hi in &up[lo] {
                below[hi] |= lo_row.as_bitslice();
                indegree[hi] -= 1;
                if indegree[hi] == 0 {
                    queue.push_back(hi);
                }
            }
        }
        if visited < n {
            let culprit = (1..=n).find(|&i| indegree[i] > 0).unwrap_or(1);
            return Err(Error::Cyclic(culprit));
        }

        let mut poset = Poset {
            n,
            covers: BTreeSet::new(),
            below,
        };
        poset.covers = poset.reduce_to_covers();
        Ok(poset)
    }

    pub fn antichain(n: usize) -> Self {
        Self::new(n, std::iter::empty()).expect("antichain is acyclic")
    }

    /// The chain `x1 < x2 < ... < xn`.
    pub fn chain(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i, i + 1))).expect("chain is acyclic")
    }

    fn reduce_to_covers(&self) -> BTreeSet<(usize, usize)> {
        let mut covers = BTreeSet::new();
        for hi in 1..=self.n {
            for lo in self.below[hi].iter_ones().filter(|&j| j != hi) {
                let implied = self.below[hi]
                    .iter_ones()
                    .any(|k| k != hi && k != lo && self.below[k][lo]);
                if !implied {
                    covers.insert((lo, hi));
                }
            }
        }
        covers
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cover relations as `(lower, upper)` pairs in sorted order.
    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.covers.iter().copied()
    }

    pub fn cover_count(&self) -> usize {
        self.covers.len()
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.n {
            Err(Error::IndexOutOfRange { index, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `x_j <=_Q x_i`.
    pub fn leq(&self, j: usize, i: usize) -> Result<bool> {
        self.check_index(j)?;
        self.check_index(i)?;
        Ok(self.below[i][j])
    }

    /// `x_j <_Q x_i`.
    pub fn lt(&self, j: usize, i: usize) -> Result<bool> {
        Ok(j != i && self.leq(j, i)?)
    }

    /// Elements strictly below `x_i`, ascending. `i` must be in range.
    pub(crate) fn strictly_below(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.below[i].iter_ones().filter(move |&j| j != i)
    }

    /// `{ j : x_j <= x_i for some i in S }`.
    pub fn down_closure(&self, set: &VariableSet) -> Result<VariableSet> {
        set.check_range(self.n)?;
        let mut acc = bitvec![0; self.n + 1];
        for i in set.iter() {
            acc |= self.below[i].as_bitslice();
        }
        Ok(acc.iter_ones().collect())
    }

    pub fn is_order_ideal(&self, set: &VariableSet) -> Result<bool> {
        Ok(self.down_closure(set)? == *set)
    }

    /// Undirected Hasse diagram restricted to `set`, including isolated vertices.
    pub fn hasse_graph(&self, set: &VariableSet) -> Result<SimpleGraph> {
        set.check_range(self.n)?;
        let edges = self
            .covers()
            .filter(|&(lo, hi)| set.contains(lo) && set.contains(hi));
        Ok(SimpleGraph::new(set.clone(), edges))
    }

    /// Connected components of the Hasse diagram induced on an order ideal.
    /// Components are ordered by their smallest element.
    pub fn connected_components(&self, order_ideal: &VariableSet) -> Result<Vec<VariableSet>> {
        if !self.is_order_ideal(order_ideal)? {
            return Err(Error::NotOrderIdeal(order_ideal.to_string()));
        }
        Ok(self.hasse_graph(order_ideal)?.components())
    }

    /// `K(A)`: number of connected components of an order ideal.
    pub fn component_count(&self, order_ideal: &VariableSet) -> Result<usize> {
        Ok(self.connected_components(order_ideal)?.len())
    }

    pub fn minimal_elements(&self) -> VariableSet {
        (1..=self.n)
            .filter(|&i| self.strictly_below(i).next().is_none())
            .collect()
    }

    /// The poset induced on `ground`, relabelled as `x1..xk` in increasing
    /// order of the original indices.
    pub fn induced(&self, ground: &VariableSet) -> Result<InducedPoset> {
        ground.check_range(self.n)?;
        let labels: Vec<usize> = ground.iter().collect();
        let mut relations = Vec::new();
        for (a, &lo) in labels.iter().enumerate() {
            for (b, &hi) in labels.iter().enumerate() {
                if lo != hi && self.below[hi][lo] {
                    relations.push((a + 1, b + 1));
                }
            }
        }
        let poset = Poset::new(labels.len(), relations)?;
        Ok(InducedPoset { poset, labels })
    }
}

/// A poset induced on a subset `Y` of another poset's ground set, with the
/// table mapping local indices back to the original ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedPoset {
    pub poset: Poset,
    labels: Vec<usize>,
}

impl InducedPoset {
    /// Original index of local element `local` (1-based).
    pub fn to_global(&self, local: usize) -> usize {
        self.labels[local - 1]
    }

    pub fn to_local(&self, global: usize) -> Option<usize> {
        self.labels.binary_search(&global).ok().map(|k| k + 1)
    }

    pub fn ground(&self) -> VariableSet {
        self.labels.iter().copied().collect()
    }

    pub fn set_to_global(&self, set: &VariableSet) -> VariableSet {
        set.iter().map(|i| self.to_global(i)).collect()
    }

    /// Cover relations in original indices.
    pub fn global_covers(&self) -> Vec<(usize, usize)> {
        self.poset
            .covers()
            .map(|(lo, hi)| (self.to_global(lo), self.to_global(hi)))
            .collect()
    }
}
