//! Exact integer polynomials in one and two variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial with integer coefficients, low degree first.
/// The coefficient vector never ends in a zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> UniPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly::from_ints(&[1])
    }

    pub fn x() -> UniPoly {
        UniPoly::from_ints(&[0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> UniPoly {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        UniPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        (0..k).fold(UniPoly::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// The unique polynomial of degree below `points.len()` through the given
    /// points, provided its coefficients are integers.
    pub fn interpolate(points: &[(BigInt, BigInt)]) -> Result<UniPoly> {
        // Newton divided differences over the rationals.
        let n = points.len();
        let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from(x.clone())).collect();
        let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| BigRational::from(y.clone())).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let denom = &xs[i] - &xs[i - level];
                if denom.is_zero() {
                    return Err(Error::DimensionMismatch("repeated interpolation node".into()));
                }
                dd[i] = (&dd[i] - &dd[i - 1]) / denom;
            }
        }
        // Expand sum dd[i] * prod_{j<i} (x - x_j) with rational coefficients.
        let mut acc: Vec<BigRational> = Vec::new();
        for i in (0..n).rev() {
            // acc = acc * (x - x_i) + dd[i]
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (k, a) in acc.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * &xs[i];
            }
            next[0] += &dd[i];
            acc = next;
        }
        let mut coeffs = Vec::with_capacity(acc.len());
        for c in acc {
            if !c.is_integer() {
                return Err(Error::NonIntegralInterpolation);
            }
            coeffs.push(c.to_integer());
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Renders with an arbitrary variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            push_term(&mut out, c, &monomial_name(&[(var, k as i32)]));
        }
        out
    }
}

fn monomial_name(vars: &[(&str, i32)]) -> String {
    vars.iter()
        .filter(|(_, e)| *e != 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn push_term(out: &mut String, c: &BigInt, mono: &str) {
    let neg = c.is_negative();
    let mag = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&mag.to_string());
    } else {
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(mono);
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Bivariate Laurent polynomial with integer coefficients, stored sparsely by
/// `(u exponent, v exponent)`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(i32, i32), BigInt>,
}

fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k as usize] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

fn rational_pow(x: &BigRational, e: i32) -> Result<BigRational> {
    if e < 0 {
        if x.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(num_traits::pow(x.recip(), e.unsigned_abs() as usize))
    } else {
        Ok(num_traits::pow(x.clone(), e as usize))
    }
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn monomial(c: BigInt, i: i32, j: i32) -> BiPoly {
        let mut p = BiPoly::zero();
        p.add_term(c, i, j);
        p
    }

    pub fn add_term(&mut self, c: BigInt, i: i32, j: i32) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: i32, j: i32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Fails with [`Error::ZeroArgument`] if a zero value meets a negative exponent.
    pub fn eval(&self, u: &BigRational, v: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            acc += BigRational::from(c.clone()) * rational_pow(u, i)? * rational_pow(v, j)?;
        }
        Ok(acc)
    }

    /// Substitutes `u -> u + du`, `v -> v + dv`. Exponents must be non-negative.
    pub fn shift(&self, du: i64, dv: i64) -> BiPoly {
        let mut out = BiPoly::zero();
        let (du, dv) = (BigInt::from(du), BigInt::from(dv));
        for (&(i, j), c) in &self.terms {
            assert!(i >= 0 && j >= 0, "shift of a Laurent term");
            let (bi, bj) = (binomial_row(i as u32), binomial_row(j as u32));
            for (a, ca) in bi.iter().enumerate() {
                let fa = ca * num_traits::pow(du.clone(), i as usize - a);
                for (b, cb) in bj.iter().enumerate() {
                    let fb = cb * num_traits::pow(dv.clone(), j as usize - b);
                    out.add_term(c * &fa * fb, a as i32, b as i32);
                }
            }
        }
        out
    }

    /// Exchanges the two variables.
    pub fn swap(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Sets `u = 0`, keeping the result as a polynomial in `v`.
    pub fn at_u_zero(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|((i, _), _)| *i == 0)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    /// Sets `v = 0`, keeping the result as a polynomial in `u`.
    pub fn at_v_zero(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|((_, j), _)| *j == 0)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    /// Highest-`u` terms first, then increasing `v`.
    pub fn display_with(&self, u: &str, v: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<&(i32, i32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut out = String::new();
        for k in keys {
            push_term(&mut out, &self.terms[k], &monomial_name(&[(u, k.0), (v, k.1)]));
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x", "y"))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(-c, i, j);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(a * b, i + k, j + l);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn uni_display() {
        assert_eq!(UniPoly::from_ints(&[3, -4, 1]).to_string(), "x^2 - 4x + 3");
        assert_eq!(UniPoly::from_ints(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(UniPoly::from_ints(&[0, 2, -3, 1]).to_string(), "x^3 - 3x^2 + 2x");
        assert_eq!(UniPoly::from_ints(&[0, 0, 0]).to_string(), "0");
        assert_eq!(UniPoly::from_ints(&[0, -1]).to_string(), "-x");
        assert_eq!(UniPoly::zero().degree(), None);
    }

    #[test]
    fn uni_arith() {
        let a = UniPoly::from_ints(&[-1, 1]);
        let b = UniPoly::from_ints(&[-3, 1]);
        assert_eq!(&a * &b, UniPoly::from_ints(&[3, -4, 1]));
        assert_eq!(&(&a * &b) - &(&a * &b), UniPoly::zero());
        assert_eq!(a.pow(3).eval(&q(3)), q(8));
        assert_eq!(a.eval_int(&BigInt::from(7)), BigInt::from(6));
    }

    #[test]
    fn interpolation_recovers_integer_polys() {
        let p = UniPoly::from_ints(&[0, 2, -3, 1]);
        let pts: Vec<_> = (0..4)
            .map(|x| (BigInt::from(x), p.eval_int(&BigInt::from(x))))
            .collect();
        assert_eq!(UniPoly::interpolate(&pts).unwrap(), p);
        let half = [(BigInt::from(0), BigInt::from(0)), (BigInt::from(2), BigInt::from(1))];
        assert_eq!(UniPoly::interpolate(&half), Err(Error::NonIntegralInterpolation));
    }

    #[test]
    fn bi_shift_and_display() {
        // (u+1)(v+1) shifted by (-1,-1) is uv
        let mut p = BiPoly::zero();
        for (i, j) in [(1, 1), (1, 0), (0, 1), (0, 0)] {
            p.add_term(BigInt::one(), i, j);
        }
        assert_eq!(p.shift(-1, -1), BiPoly::monomial(BigInt::one(), 1, 1));
        let mut t = BiPoly::zero();
        t.add_term(BigInt::one(), 2, 0);
        t.add_term(BigInt::from(2), 1, 0);
        t.add_term(BigInt::from(2), 0, 1);
        t.add_term(BigInt::one(), 0, 2);
        assert_eq!(t.to_string(), "x^2 + 2x + 2y + y^2");
        assert_eq!(t.swap(), t);
        assert_eq!(t.at_u_zero().to_string(), "2y + y^2");
    }

    #[test]
    fn bi_laurent_eval() {
        let p = BiPoly::monomial(BigInt::from(3), 1, -2);
        assert_eq!(p.eval(&q(2), &q(2)).unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(p.eval(&q(2), &q(0)), Err(Error::ZeroArgument));
    }
}
