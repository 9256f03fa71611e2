//! Monomials `x^a` as exponent vectors over a fixed number of variables.
//!
//! Text form is `x4*x9^2`: factors joined by `*`, each `x<i>` with an
//! optional `^<e>`; `1` is the empty monomial. Repeated factors accumulate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::VariableSet;

/// A monomial in `n` variables. Exponent `k` belongs to `x_{k+1}`.
///
/// Ordering is the canonical generator order: total degree ascending, then
/// lexicographically larger exponent vectors first (so `x1*x6^2` precedes
/// `x1*x6*x7`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_i`.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut m = Self::one(n);
        m.exps[i - 1] = 1;
        Ok(m)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// Product of the variables in `set`.
    pub fn squarefree(n: usize, set: &VariableSet) -> Result<Self> {
        set.check_range(n)?;
        let mut m = Self::one(n);
        for i in set.iter() {
            m.exps[i - 1] = 1;
        }
        Ok(m)
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        let mut m = Self::one(n);
        if text == "1" {
            return Ok(m);
        }
        if text.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("factor `{factor}` must start with `x`")))?;
            let (index, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e),
                None => (body, "1"),
            };
            let index: usize = index
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in `{factor}`")))?;
            let exp: u32 = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
            if index == 0 || index > n {
                return Err(Error::Parse(format!(
                    "variable x{index} outside x1..x{n}"
                )));
            }
            let slot = &mut m.exps[index - 1];
            *slot = slot.checked_add(exp).ok_or(Error::ExponentOverflow)?;
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VariableSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// Exponents outside `set` zeroed.
    pub fn restrict(&self, set: &VariableSet) -> Monomial {
        let exps = self
            .exps
            .iter()
            .enumerate()
            .map(|(k, &e)| if set.contains(k + 1) { e } else { 0 })
            .collect();
        Monomial { exps }
    }

    fn same_ambient(&self, other: &Monomial) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.n(),
                right: other.n(),
            })
        }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.divides_raw(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ambient(other)?;
        Ok(self.lcm_raw(other))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ambient(other)?;
        Ok(self.gcd_raw(other))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ambient(other)?;
        self.mul_raw(other)
    }

    /// Exact quotient `self / other`; fails unless `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Result<Monomial> {
        self.same_ambient(other)?;
        if !other.divides_raw(self) {
            return Err(Error::NotDivisible {
                divisor: other.to_string(),
                monomial: self.to_string(),
            });
        }
        Ok(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn pow(&self, d: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(d).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub(crate) fn divides_raw(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub(crate) fn lcm_raw(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub(crate) fn gcd_raw(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect(),
        }
    }

    /// `self / gcd(self, other)`.
    pub(crate) fn strip_raw(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    pub(crate) fn mul_raw(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// Adds `delta` to the exponent of `x_i`; `None` if it would go negative.
    pub(crate) fn shifted(&self, i: usize, delta: i64) -> Option<Monomial> {
        let e = self.exps[i - 1] as i64 + delta;
        if e < 0 || e > u32::MAX as i64 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i - 1] = e as u32;
        Some(Monomial { exps })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
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
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", k + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses with the ambient size set to the largest index mentioned.
impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s
            .split('*')
            .filter_map(|f| f.trim().strip_prefix('x'))
            .filter_map(|f| f.split('^').next()?.trim().parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Monomial::parse(s, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let x = m("x4*x9^2", 11);
        assert_eq!(x.exponent(4), 1);
        assert_eq!(x.exponent(9), 2);
        assert_eq!(x.degree(), 3);
        assert_eq!(x.to_string(), "x4*x9^2");
        assert_eq!(m("x9 * x4 * x9", 11), x);
        assert_eq!(m("1", 3).to_string(), "1");
        assert!(Monomial::parse("x12", 11).is_err());
        assert!(Monomial::parse("y1", 11).is_err());
        assert!(Monomial::parse("x1^a", 11).is_err());
        assert!(Monomial::parse("", 11).is_err());
        assert_eq!("x2*x3".parse::<Monomial>().unwrap().n(), 3);
    }

    #[test]
    fn support_examples() {
        assert_eq!(m("x4*x9^2", 11).support(), [4, 9].into());
        assert!(Monomial::one(5).support().is_empty());
        assert_eq!(m("x1*x2*x3*x6", 6).support(), [1, 2, 3, 6].into());
    }

    #[test]
    fn lcm_gcd_divides() {
        let a = m("x1*x6^2", 7);
        let b = m("x1*x7^2", 7);
        assert_eq!(a.lcm(&b).unwrap(), m("x1*x6^2*x7^2", 7));
        assert_eq!(a.gcd(&b).unwrap(), m("x1", 7));
        assert!(m("x4*x9", 11).divides(&m("x4*x9^2", 11)).unwrap());
        assert!(!m("x4*x9^2", 11).divides(&m("x4*x9", 11)).unwrap());
        assert_eq!(
            a.lcm(&Monomial::one(3)),
            Err(Error::AmbientMismatch { left: 7, right: 3 })
        );
    }

    #[test]
    fn canonical_order_matches_generator_listing() {
        let mut v = [m("x1*x6*x7", 9), m("x4*x9^2", 9), m("x1*x6^2", 9), m("x2", 9)];
        v.sort();
        let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["x2", "x1*x6^2", "x1*x6*x7", "x4*x9^2"]);
    }

    #[test]
    fn overflow_is_checked() {
        let big = Monomial::from_exponents(vec![u32::MAX]);
        assert_eq!(big.mul(&big), Err(Error::ExponentOverflow));
        assert_eq!(big.pow(2), Err(Error::ExponentOverflow));
    }
}
