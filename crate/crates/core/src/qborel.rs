//! Q-Borel moves and the ideals they generate.
//!
//! A move `x_i -> x_j` with `x_j <_Q x_i` replaces one factor `x_i` of a
//! monomial by `x_j`. Principal ideals `Q(m)` are computed as the orbit of
//! `m` under moves; since moves preserve degree, the orbit is already the
//! minimal generating set.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;
use crate::poset::{Poset, VariableSet};

/// A move dividing out `x_from` and multiplying in `x_to`, with
/// `x_to <_Q x_from`. As an exponent shift it is `e_to - e_from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BorelMove {
    from: usize,
    to: usize,
}

impl BorelMove {
    pub fn new(poset: &Poset, from: usize, to: usize) -> Result<Self> {
        if !poset.lt(to, from)? {
            return Err(Error::InvalidMove { from, to });
        }
        Ok(BorelMove { from, to })
    }

    /// Index divided out.
    pub fn from(&self) -> usize {
        self.from
    }

    /// Index multiplied in.
    pub fn to(&self) -> usize {
        self.to
    }
}

impl fmt::Display for BorelMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{} -> x{}", self.from, self.to)
    }
}

pub fn apply_move(m: &Monomial, mv: BorelMove) -> Result<Monomial> {
    if mv.from > m.n() || mv.to > m.n() {
        return Err(Error::IndexOutOfRange {
            index: mv.from.max(mv.to),
            n: m.n(),
        });
    }
    if m.exponent(mv.from) == 0 {
        return Err(Error::NotDivisible {
            divisor: format!("x{}", mv.from),
            monomial: m.to_string(),
        });
    }
    Ok(m.shifted(mv.from, -1)
        .and_then(|q| q.shifted(mv.to, 1))
        .expect("exponent of x_from is positive"))
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

/// All moves applicable to `m`, in ascending `(from, to)` order.
fn moves_from<'a>(poset: &'a Poset, m: &'a Monomial) -> impl Iterator<Item = BorelMove> + 'a {
    m.support().iter().collect::<Vec<_>>().into_iter().flat_map(move |from| {
        poset
            .strictly_below(from)
            .map(move |to| BorelMove { from, to })
    })
}

/// Breadth-first orbit of `seeds` under moves. With `squarefree_only`, only
/// square-free monomials are visited.
fn orbit(poset: &Poset, seeds: &[Monomial], squarefree_only: bool) -> HashSet<Monomial> {
    let mut seen: HashSet<Monomial> = seeds.iter().cloned().collect();
    let mut queue: VecDeque<Monomial> = seeds.iter().cloned().collect();
    while let Some(cur) = queue.pop_front() {
        for mv in moves_from(poset, &cur) {
            let next = apply_move(&cur, mv).expect("move taken from support");
            if squarefree_only && !next.is_squarefree() {
                continue;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// `G(Q(m))`.
pub fn generate_principal(poset: &Poset, m: &Monomial) -> Result<MonomialIdeal> {
    check_ambient(poset, m)?;
    if m.is_one() {
        return Err(Error::UnitMonomial);
    }
    Ok(minimalize(m.n(), orbit(poset, std::slice::from_ref(m), false)))
}

/// `G(Q(X))`: the smallest Q-Borel ideal containing every monomial of `X`.
pub fn generate_from_set(poset: &Poset, set: &[Monomial]) -> Result<MonomialIdeal> {
    if set.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    for m in set {
        check_ambient(poset, m)?;
    }
    Ok(minimalize(poset.n(), orbit(poset, set, false)))
}

/// `G(sfQ(m))`: the square-free minimal generators of `Q(m)`.
pub fn generate_sf_principal(poset: &Poset, m: &Monomial) -> Result<MonomialIdeal> {
    check_ambient(poset, m)?;
    if m.is_one() {
        return Err(Error::UnitMonomial);
    }
    if !m.is_squarefree() {
        return Err(Error::NotSquareFree(m.to_string()));
    }
    let restricted = minimalize(m.n(), orbit(poset, std::slice::from_ref(m), true));
    #[cfg(debug_assertions)]
    {
        let filtered = sf_by_filtering(poset, m)?;
        debug_assert_eq!(restricted, filtered, "square-free search disagrees with filter");
    }
    Ok(restricted)
}

/// `sfQ(m)` computed by filtering the full closure.
pub fn sf_by_filtering(poset: &Poset, m: &Monomial) -> Result<MonomialIdeal> {
    let full = generate_principal(poset, m)?;
    Ok(minimalize(
        m.n(),
        full.generators().iter().filter(|g| g.is_squarefree()).cloned(),
    ))
}

/// `Q(m)` as a product of primes: one factor `(A(x_i), a_i)` per variable
/// in the support of `m`.
pub fn transversal_factorization(poset: &Poset, m: &Monomial) -> Result<Vec<(VariableSet, u32)>> {
    check_ambient(poset, m)?;
    if m.is_one() {
        return Err(Error::UnitMonomial);
    }
    m.support()
        .iter()
        .map(|i| Ok((poset.down_closure(&[i].into())?, m.exponent(i))))
        .collect()
}

/// Multiplies out `∏ <P>^a`.
pub fn expand_factorization(n: usize, factors: &[(VariableSet, u32)]) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(n);
    for (prime, mult) in factors {
        let p = MonomialIdeal::prime(n, prime)?.power(*mult)?;
        acc = acc.product(&p)?;
    }
    Ok(acc)
}

/// Moves whose exponent shifts sum to `target - m`, each dividing out a
/// variable of `supp(m)`.
pub fn move_certificate(poset: &Poset, m: &Monomial, target: &Monomial) -> Result<Vec<BorelMove>> {
    check_ambient(poset, m)?;
    check_ambient(poset, target)?;
    let not_found = || Error::TargetNotInIdeal {
        target: target.to_string(),
        source_monomial: m.to_string(),
    };
    if m.is_one() {
        return Err(Error::UnitMonomial);
    }
    if target.degree() != m.degree() {
        return Err(not_found());
    }

    let mut parent: HashMap<Monomial, (Monomial, BorelMove)> = HashMap::new();
    let mut seen: HashSet<Monomial> = HashSet::from([m.clone()]);
    let mut queue = VecDeque::from([m.clone()]);
    let mut reached = m == target;
    while let Some(cur) = queue.pop_front() {
        if reached {
            break;
        }
        for mv in moves_from(poset, &cur) {
            let next = apply_move(&cur, mv)?;
            if seen.insert(next.clone()) {
                parent.insert(next.clone(), (cur.clone(), mv));
                if &next == target {
                    reached = true;
                    break;
                }
                queue.push_back(next);
            }
        }
    }
    if !reached {
        return Err(not_found());
    }

    let mut path = Vec::new();
    let mut cur = target.clone();
    while let Some((prev, mv)) = parent.get(&cur) {
        path.push(*mv);
        cur = prev.clone();
    }
    path.reverse();
    Ok(normalize_certificate(poset, m, path))
}

/// Rewrites a move sequence so every divided index lies in `supp(m)`.
///
/// The first move `t` dividing a variable outside the support is merged with
/// the latest earlier move `s` that introduced that variable:
/// `e(a_s -> b_s) + e(b_s -> b_t) = e(a_s -> b_t)`. The merged move takes
/// position `s`. Each rewrite shortens the sequence, so this terminates.
pub fn normalize_certificate(poset: &Poset, m: &Monomial, mut moves: Vec<BorelMove>) -> Vec<BorelMove> {
    let support = m.support();
    while let Some(t) = moves.iter().position(|mv| !support.contains(mv.from)) {
        let pivot = moves[t].from;
        let s = moves[..t]
            .iter()
            .rposition(|mv| mv.to == pivot)
            .expect("a variable outside supp(m) must have been introduced by an earlier move");
        let merged = BorelMove {
            from: moves[s].from,
            to: moves[t].to,
        };
        debug_assert!(poset.lt(merged.to, merged.from).unwrap_or(false));
        moves[s] = merged;
        moves.remove(t);
    }
    moves
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{q11, q3, q6};

    fn mono(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn shown(i: &MonomialIdeal) -> Vec<String> {
        i.generators().iter().map(|g| g.to_string()).collect()
    }

    /// Independent closure: repeatedly add every move image until nothing
    /// new appears, with moves enumerated over all index pairs.
    fn naive_closure(q: &Poset, seeds: &[Monomial]) -> MonomialIdeal {
        let mut set: HashSet<Monomial> = seeds.iter().cloned().collect();
        loop {
            let mut added = Vec::new();
            for u in &set {
                for i in 1..=q.n() {
                    for j in 1..=q.n() {
                        if let Ok(mv) = BorelMove::new(q, i, j) {
                            if let Ok(v) = apply_move(u, mv) {
                                if !set.contains(&v) {
                                    added.push(v);
                                }
                            }
                        }
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            set.extend(added);
        }
        minimalize(q.n(), set)
    }

    #[test]
    fn apply_move_examples() {
        let q = q11();
        let m = mono("x4*x9^2", 11);
        let mv = BorelMove::new(&q, 4, 1).unwrap();
        assert_eq!(apply_move(&m, mv).unwrap(), mono("x1*x9^2", 11));
        assert_eq!(BorelMove::new(&q, 4, 4), Err(Error::InvalidMove { from: 4, to: 4 }));
        assert_eq!(BorelMove::new(&q, 1, 4), Err(Error::InvalidMove { from: 1, to: 4 }));
        let bad = BorelMove::new(&q, 5, 1).unwrap();
        assert!(matches!(apply_move(&m, bad), Err(Error::NotDivisible { .. })));

        let q = q3();
        let mv = BorelMove::new(&q, 3, 1).unwrap();
        assert_eq!(apply_move(&mono("x2*x3", 3), mv).unwrap(), mono("x1*x2", 3));
        assert_eq!(mv.to_string(), "x3 -> x1");
    }

    #[test]
    fn principal_on_eleven_element_poset() {
        let i = generate_principal(&q11(), &mono("x4*x9^2", 11)).unwrap();
        let listed = [
            "x1*x6^2", "x1*x6*x7", "x1*x7^2", "x1*x6*x9", "x1*x7*x9", "x1*x9^2",
            "x4*x6^2", "x4*x6*x7", "x4*x7^2", "x4*x6*x9", "x4*x7*x9", "x4*x9^2",
        ];
        let expected: HashSet<String> = listed.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown(&i).into_iter().collect::<HashSet<_>>(), expected);
        assert_eq!(i.len(), 12);
        assert_eq!(shown(&i)[0], "x1*x6^2");
        assert!(i.generators().iter().all(|g| g.degree() == 3));
    }

    #[test]
    fn principal_small_cases() {
        let anti = Poset::antichain(4);
        let m = mono("x1^2*x3", 4);
        assert_eq!(
            generate_principal(&anti, &m).unwrap(),
            MonomialIdeal::principal(m.clone())
        );
        assert_eq!(shown(&generate_principal(&q3(), &mono("x2*x3", 3)).unwrap()), ["x1*x2", "x2*x3"]);
        assert_eq!(generate_principal(&q3(), &Monomial::one(3)), Err(Error::UnitMonomial));
        assert!(generate_principal(&q3(), &Monomial::one(4)).is_err());
    }

    #[test]
    fn from_set_examples() {
        let q = q11();
        let single = [mono("x4*x9^2", 11)];
        assert_eq!(
            generate_from_set(&q, &single).unwrap(),
            generate_principal(&q, &single[0]).unwrap()
        );

        let mixed = [mono("x5", 11), mono("x1*x2", 11)];
        let got = generate_from_set(&q, &mixed).unwrap();
        assert_eq!(got, naive_closure(&q, &mixed));
        // x1 is a move image of x5, so x1*x2 is not minimal
        assert_eq!(shown(&got), ["x1", "x2", "x3", "x4", "x5"]);

        let chain = Poset::chain(3);
        let got = generate_from_set(&chain, &[mono("x2*x3", 3)]).unwrap();
        assert_eq!(shown(&got), ["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3"]);
        assert_eq!(generate_from_set(&chain, &[]), Err(Error::ZeroIdeal));
    }

    #[test]
    fn squarefree_examples() {
        let i = generate_sf_principal(&q6(), &mono("x1*x2*x3*x6", 6)).unwrap();
        assert_eq!(shown(&i), ["x1*x2*x3*x4", "x1*x2*x3*x5", "x1*x2*x3*x6"]);
        let anti = Poset::antichain(3);
        assert_eq!(
            generate_sf_principal(&anti, &mono("x1*x3", 3)).unwrap(),
            MonomialIdeal::principal(mono("x1*x3", 3))
        );
        let chain = Poset::chain(3);
        let i = generate_sf_principal(&chain, &mono("x2*x3", 3)).unwrap();
        assert_eq!(shown(&i), ["x1*x2", "x1*x3", "x2*x3"]);
        assert_eq!(sf_by_filtering(&chain, &mono("x2*x3", 3)).unwrap(), i);
        assert!(matches!(
            generate_sf_principal(&chain, &mono("x3^2", 3)),
            Err(Error::NotSquareFree(_))
        ));
    }

    #[test]
    fn transversal_examples() {
        let q = q11();
        let m = mono("x4*x9^2", 11);
        let f = transversal_factorization(&q, &m).unwrap();
        assert_eq!(f, vec![([1, 4].into(), 1), ([6, 7, 9].into(), 2)]);
        assert_eq!(expand_factorization(11, &f).unwrap(), generate_principal(&q, &m).unwrap());

        let anti = Poset::antichain(2);
        let f = transversal_factorization(&anti, &mono("x1^2*x2", 2)).unwrap();
        assert_eq!(f, vec![([1].into(), 2), ([2].into(), 1)]);
        assert_eq!(
            expand_factorization(2, &f).unwrap(),
            MonomialIdeal::principal(mono("x1^2*x2", 2))
        );

        let f = transversal_factorization(&q3(), &mono("x2*x3", 3)).unwrap();
        assert_eq!(f, vec![([2].into(), 1), ([1, 3].into(), 1)]);
        assert_eq!(shown(&expand_factorization(3, &f).unwrap()), ["x1*x2", "x2*x3"]);
    }

    #[test]
    fn certificate_examples() {
        let q = q11();
        let m = mono("x4*x9^2", 11);
        assert!(move_certificate(&q, &m, &m).unwrap().is_empty());
        let cert = move_certificate(&q, &m, &mono("x1*x6*x7", 11)).unwrap();
        let pairs: Vec<_> = cert.iter().map(|mv| (mv.from(), mv.to())).collect();
        assert_eq!(pairs, vec![(4, 1), (9, 6), (9, 7)]);

        let cert = move_certificate(&q3(), &mono("x2*x3", 3), &mono("x1*x2", 3)).unwrap();
        assert_eq!(cert, vec![BorelMove::new(&q3(), 3, 1).unwrap()]);

        assert!(matches!(
            move_certificate(&q, &m, &mono("x5*x9^2", 11)),
            Err(Error::TargetNotInIdeal { .. })
        ));
        assert!(matches!(
            move_certificate(&q, &m, &mono("x1*x6", 11)),
            Err(Error::TargetNotInIdeal { .. })
        ));
    }

    #[test]
    fn normalization_merges_chained_moves() {
        // x5 -> x2 -> x1 becomes x5 -> x1
        let q = q11();
        let m = mono("x5*x9", 11);
        let raw = vec![
            BorelMove::new(&q, 5, 2).unwrap(),
            BorelMove::new(&q, 9, 6).unwrap(),
            BorelMove::new(&q, 2, 1).unwrap(),
        ];
        let fixed = normalize_certificate(&q, &m, raw);
        assert_eq!(
            fixed,
            vec![BorelMove::new(&q, 5, 1).unwrap(), BorelMove::new(&q, 9, 6).unwrap()]
        );
    }
}
