//! Laurent polynomials in the grading variable `v`.
//!
//! The grading shift `⟨i⟩` acts on graded multiplicities as multiplication by `vⁱ`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A Laurent polynomial with integer coefficients.
///
/// Stored as a dense coefficient run starting at exponent `low`, with no
/// zero coefficient at either end (zero is the empty run).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<i64>,
}

impl Laurent {
    /// `c · vᵉ`.
    pub fn monomial(c: i64, e: i32) -> Self {
        Laurent { low: e, coeffs: vec![c] }.normalized()
    }

    /// The constant `c`.
    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `v + v⁻¹`, the quantum two.
    pub fn quantum_two() -> Self {
        Self::from_terms([(-1, 1), (1, 1)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents add up.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let map = terms.into_iter().fold(BTreeMap::new(), |mut m, (e, c)| {
            *m.entry(e).or_insert(0i64) += c;
            m
        });
        let Some((&low, _)) = map.iter().next() else {
            return Self::zero();
        };
        let high = *map.keys().next_back().expect("nonempty");
        let mut coeffs = vec![0; (high - low) as usize + 1];
        for (e, c) in map {
            coeffs[(e - low) as usize] = c;
        }
        Laurent { low, coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        self.coeffs.drain(..lead);
        self.low = if self.coeffs.is_empty() { 0 } else { self.low + lead as i32 };
        self
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i32, c))
    }

    /// Coefficient of `vᵉ`.
    pub fn coeff(&self, e: i32) -> i64 {
        let i = e - self.low;
        if i < 0 {
            0
        } else {
            self.coeffs.get(i as usize).copied().unwrap_or(0)
        }
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `vᵏ`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Laurent { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// True if no coefficient is negative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl Zero for Laurent {
    fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Laurent {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add for Laurent {
    type Output = Laurent;

    fn add(self, rhs: Laurent) -> Laurent {
        Laurent::from_terms(self.terms().chain(rhs.terms()))
    }
}

impl AddAssign for Laurent {
    fn add_assign(&mut self, rhs: Laurent) {
        *self = core::mem::take(self) + rhs;
    }
}

impl Neg for Laurent {
    type Output = Laurent;

    fn neg(mut self) -> Laurent {
        self.coeffs.iter_mut().for_each(|c| *c = -*c);
        self
    }
}

impl Sub for Laurent {
    type Output = Laurent;

    fn sub(self, rhs: Laurent) -> Laurent {
        self + (-rhs)
    }
}

impl Mul for Laurent {
    type Output = Laurent;

    fn mul(self, rhs: Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent { low: self.low + rhs.low, coeffs }.normalized()
    }
}

/// Renders e.g. `1+v^2`, `v^-1+v`, `-2v^3`, or `0`.
impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_char('0');
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms().enumerate() {
            if c < 0 {
                out.push('-');
            } else if k > 0 {
                out.push('+');
            }
            let a = c.unsigned_abs();
            match e {
                0 => write!(out, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(out, "{a}")?;
                    }
                    out.push('v');
                    if e != 1 {
                        write!(out, "^{e}")?;
                    }
                }
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn arithmetic() {
        let q = Laurent::quantum_two();
        assert_eq!(q.clone() * q.clone(), Laurent::from_terms([(-2, 1), (0, 2), (2, 1)]));
        assert_eq!(q.clone() - q.clone(), Laurent::zero());
        assert_eq!(Laurent::v().shift(-1), Laurent::one());
        assert_eq!(q.eval_one(), 2);
        assert_eq!(Laurent::from_terms([(3, 0)]), Laurent::zero());
    }

    #[test]
    fn display() {
        assert_eq!(Laurent::from_terms([(0, 1), (2, 1)]).to_string(), "1+v^2");
        assert_eq!(Laurent::quantum_two().to_string(), "v^-1+v");
        assert_eq!(Laurent::from_terms([(3, -2), (0, 1)]).to_string(), "1-2v^3");
        assert_eq!(Laurent::zero().to_string(), "0");
        assert_eq!(Laurent::v().to_string(), "v");
    }
}
