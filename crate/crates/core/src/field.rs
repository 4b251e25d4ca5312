//! Arithmetic in GF(p^d) for odd primes p.
//!
//! Elements are stored in the polynomial basis over GF(p) and packed into a
//! single integer code `c_0 + c_1 p + ... + c_{d-1} p^{d-1}`, so the code is a
//! canonical representative and equality is code equality. Multiplication goes
//! through discrete log tables built from a primitive element at construction.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::enumerate::{state_count, Budget, Odometer};
use crate::error::{Error, Result};

/// Largest field order accepted by [`Field`] constructors.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

struct Inner {
    p: u32,
    d: u32,
    q: u32,
    /// `d + 1` coefficients, low degree first, leading coefficient 1.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// Quadratic character of every code, tabulated by the Euler criterion.
    eta: Vec<i8>,
}

/// A finite field of odd characteristic. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            out.push(k);
            while n.is_multiple_of(k) {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q = p^d` with `p` prime. Returns `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut d = 0;
    let mut rest = q;
    while rest > 1 {
        rest /= p;
        d += 1;
    }
    Some((p, d))
}

// Polynomials over GF(p), low degree first, used only during construction.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(a.to_vec());
    let m = poly_trim(m.to_vec());
    let lead_inv = pow_mod(m[m.len() - 1] as u64, p as u64 - 2, p as u64) as u32;
    while r.len() >= m.len() {
        let shift = r.len() - m.len();
        let f = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &c) in m.iter().enumerate() {
            let sub = (f as u64 * c as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn eval_mod(poly: &[u32], x: u32, p: u32) -> u32 {
    poly.iter()
        .rev()
        .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64) as u32
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let d = modulus.len() - 1;
    if d <= 1 {
        return true;
    }
    if d <= 3 {
        return (0..p).all(|x| eval_mod(modulus, x, p) != 0);
    }
    // Trial division by every monic polynomial of degree 1..=d/2.
    for k in 1..=d / 2 {
        let mut odo = Odometer::at(0, k, p);
        loop {
            let mut f: Vec<u32> = odo.digits().iter().rev().copied().collect();
            f.push(1);
            if poly_rem(modulus, &f, p).is_empty() {
                return false;
            }
            if odo.advance().is_none() {
                break;
            }
        }
    }
    true
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, &[])
    }

    /// GF(p^d) defined by a monic `modulus` given low degree first
    /// (`d + 1` coefficients). For `d = 1` the modulus may be empty.
    pub fn new(p: u64, d: u32, modulus: &[u64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        if d == 0 {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: modulus.len().saturating_sub(1),
            });
        }
        let q = state_count(p, d as usize);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge(q.min(u64::MAX as u128) as u64));
        }
        let p32 = p as u32;
        let modulus: Vec<u32> = if d == 1 && modulus.is_empty() {
            vec![0, 1]
        } else {
            modulus.iter().map(|&c| (c % p) as u32).collect()
        };
        if modulus.len() != d as usize + 1 || modulus[d as usize] != 1 {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: poly_trim(modulus).len().saturating_sub(1),
            });
        }
        if !is_irreducible(&modulus, p32) {
            return Err(Error::ReducibleModulus { p });
        }
        Ok(Field::build(p32, d, q as u32, modulus))
    }

    /// A field of order `q`, using the lexicographically first monic
    /// irreducible modulus (coefficients compared from the constant term up).
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, d) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        if d == 1 {
            return Field::prime(p);
        }
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let mut odo = Odometer::at(0, d as usize, p as u32);
        loop {
            let mut m: Vec<u64> = odo.digits().iter().rev().map(|&c| c as u64).collect();
            m.push(1);
            match Field::new(p, d, &m) {
                Err(Error::ReducibleModulus { .. }) => {}
                other => return other,
            }
            if odo.advance().is_none() {
                unreachable!("irreducible polynomials exist in every degree");
            }
        }
    }

    fn build(p: u32, d: u32, q: u32, modulus: Vec<u32>) -> Field {
        let mut inner = Inner {
            p,
            d,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            eta: Vec::new(),
        };
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let generator = (1..q)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| inner.pow_slow(g, order / r) != 1)
            })
            .expect("the multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for k in 0..q - 1 {
            exp.push(x);
            log[x as usize] = k;
            x = inner.mul_slow(x, generator);
        }
        inner.exp = exp;
        inner.log = log;
        let half = order / 2;
        inner.eta = (0..q)
            .map(|c| match c {
                0 => 0,
                _ if inner.pow_slow(c, half) == 1 => 1,
                _ => -1,
            })
            .collect();
        Field(Arc::new(inner))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.0.d
    }

    pub fn order(&self) -> u64 {
        self.0.q as u64
    }

    /// Modulus coefficients, low degree first.
    pub fn modulus(&self) -> Vec<u64> {
        self.0.modulus.iter().map(|&c| c as u64).collect()
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Embeds an integer through the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElement {
        self.element(self.int_code(v))
    }

    /// Builds an element from polynomial-basis coordinates (low degree first).
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.d as usize {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a degree-{} field",
                coeffs.len(),
                self.0.d
            )));
        }
        let p = self.0.p as i64;
        let mut code = 0u32;
        for &c in coeffs.iter().rev() {
            code = code * self.0.p + c.rem_euclid(p) as u32;
        }
        Ok(self.element(code))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |c| self.element(c))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.0.q).map(move |c| self.element(c))
    }

    pub(crate) fn element(&self, code: u32) -> FieldElement {
        debug_assert!(code < self.0.q);
        FieldElement {
            field: self.clone(),
            code,
        }
    }

    pub(crate) fn same(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self == other
    }

    pub(crate) fn int_code(&self, v: i64) -> u32 {
        v.rem_euclid(self.0.p as i64) as u32
    }

    // Code-level arithmetic shared by the matrix and enumeration kernels.

    #[inline]
    pub(crate) fn add_codes(&self, a: u32, b: u32) -> u32 {
        self.0.add(a, b)
    }

    #[inline]
    pub(crate) fn neg_code(&self, a: u32) -> u32 {
        self.0.neg(a)
    }

    #[inline]
    pub(crate) fn sub_codes(&self, a: u32, b: u32) -> u32 {
        self.0.add(a, self.0.neg(b))
    }

    #[inline]
    pub(crate) fn mul_codes(&self, a: u32, b: u32) -> u32 {
        self.0.mul(a, b)
    }

    /// Panics on zero; callers check.
    #[inline]
    pub(crate) fn inv_code(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let n = self.0.q - 1;
        self.0.exp[((n - self.0.log[a as usize]) % n) as usize]
    }

    pub(crate) fn pow_code(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.0.q - 1) as u64;
        let k = (self.0.log[a as usize] as u64 * (e % n)) % n;
        self.0.exp[k as usize]
    }

    /// Tabulated quadratic character.
    #[inline]
    pub(crate) fn eta_code(&self, a: u32) -> i8 {
        self.0.eta[a as usize]
    }

    /// Quadratic character by the Euler criterion `x^((q-1)/2)`.
    pub(crate) fn euler_code(&self, a: u32) -> i8 {
        if a == 0 {
            return 0;
        }
        match self.pow_code(a, (self.0.q as u64 - 1) / 2) {
            1 => 1,
            _ => -1,
        }
    }

    /// Trace to the prime field, `x + x^p + ... + x^{p^{d-1}}`, as a residue mod p.
    pub(crate) fn trace_code(&self, a: u32) -> u32 {
        let mut frob = a;
        let mut acc = a;
        for _ in 1..self.0.d {
            frob = self.pow_code(frob, self.0.p as u64);
            acc = self.add_codes(acc, frob);
        }
        debug_assert!(acc < self.0.p, "trace lies in the prime field");
        acc
    }

    /// Field specification string: `"p"` for prime fields, otherwise
    /// `"p^d:c0,c1,...,cd"` with modulus coefficients low degree first.
    pub fn spec(&self) -> String {
        if self.0.d == 1 {
            return self.0.p.to_string();
        }
        let coeffs: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
        format!("{}^{}:{}", self.0.p, self.0.d, coeffs.join(","))
    }
}

impl Inner {
    fn digits(&self, mut c: u32) -> Vec<u32> {
        let mut out = vec![0; self.d as usize];
        for slot in out.iter_mut() {
            *slot = c % self.p;
            c /= self.p;
        }
        out
    }

    fn pack(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        if self.d == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.d {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    fn neg(&self, a: u32) -> u32 {
        if self.d == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.d {
            out += ((self.p - a % self.p) % self.p) * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let k = self.log[a as usize] + self.log[b as usize];
        self.exp[(if k >= n { k - n } else { k }) as usize]
    }

    /// Schoolbook product reduced by the modulus; used before the log tables exist.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.digits(a), self.digits(b));
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * self.d as usize];
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi as u64 * yj as u64) % p;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.d as usize, 0);
        self.pack(&r)
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.modulus == other.0.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.spec())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Parses `"5"`, `"9"` (lexicographically first modulus), or `"3^2:1,0,1"`.
    fn from_str(s: &str) -> Result<Field> {
        let bad = |m: &str| Error::parse(0, format!("field spec `{s}`: {m}"));
        let s = s.trim();
        let (head, modulus) = match s.split_once(':') {
            Some((h, m)) => (h, Some(m)),
            None => (s, None),
        };
        let (p, d): (u64, u32) = match head.split_once('^') {
            Some((p, d)) => (
                p.trim().parse().map_err(|_| bad("bad characteristic"))?,
                d.trim().parse().map_err(|_| bad("bad degree"))?,
            ),
            None => {
                let q: u64 = head.parse().map_err(|_| bad("bad order"))?;
                if modulus.is_none() {
                    return Field::with_order(q);
                }
                (q, 1)
            }
        };
        match modulus {
            Some(m) => {
                let coeffs = m
                    .split(',')
                    .map(|c| c.trim().parse::<u64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad("bad modulus coefficient"))?;
                Field::new(p, d, &coeffs)
            }
            None if d == 1 => Field::prime(p),
            None => Field::with_order(state_count(p, d as usize).min(u64::MAX as u128) as u64),
        }
    }
}

/// An element of a [`Field`].
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    code: u32,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub(crate) fn code(&self) -> u32 {
        self.code
    }

    /// Polynomial-basis coordinates, low degree first.
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.0.digits(self.code)
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.element(self.field.add_codes(self.code, other.code)))
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.element(self.field.sub_codes(self.code, other.code)))
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.element(self.field.mul_codes(self.code, other.code)))
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let inv = other.inv()?;
        Ok(self.field.element(self.field.mul_codes(self.code, inv.code)))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.code == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.field.element(self.field.inv_code(self.code)))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.field.element(self.field.pow_code(self.code, e))
    }

    /// Exponentiation by an arbitrary non-negative integer.
    pub fn pow_big(&self, e: &BigUint) -> FieldElement {
        if e.bits() == 0 {
            return self.field.one();
        }
        let n = BigUint::from(self.field.order() - 1);
        let reduced = (e % &n).to_u64().expect("reduced exponent fits");
        // x^e = x^(e mod (q-1)) for x != 0, but e > 0 must keep 0^e = 0.
        if self.code == 0 {
            return self.field.zero();
        }
        self.pow(reduced)
    }

    /// Multiplicative quadratic character: 0 at zero, 1 on nonzero squares,
    /// -1 otherwise. Evaluated by the Euler criterion.
    pub fn quadratic_character(&self) -> i8 {
        self.field.euler_code(self.code)
    }

    /// Absolute trace to GF(p), returned as a residue in `0..p`.
    pub fn trace(&self) -> u64 {
        self.field.trace_code(self.code) as u64
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl std::ops::$tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$try(rhs).expect("field arithmetic")
            }
        }
        impl std::ops::$tr for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.element(self.field.neg_code(self.code))
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.field.same(&other.field)
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.0.p.hash(state);
        self.field.0.modulus.hash(state);
        self.code.hash(state);
    }
}

impl fmt::Display for FieldElement {
    /// Prime-field elements print as residues; extension elements as
    /// comma-separated coordinates, low degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            write!(f, "{}", self.code)
        } else {
            let parts: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.field)
    }
}

/// Counts `alpha` in `(F_q^*)^l` with `sum c_i alpha_i = b` by exhaustive
/// enumeration. Every coefficient must be nonzero.
pub fn count_linear_solutions(
    coeffs: &[FieldElement],
    b: &FieldElement,
    budget: Budget,
) -> Result<u64> {
    let field = b.field();
    for (i, c) in coeffs.iter().enumerate() {
        c.check(b)?;
        if c.is_zero() {
            return Err(Error::ZeroCoefficient(i));
        }
    }
    let q = field.order();
    budget.check(state_count(q - 1, coeffs.len()))?;
    let codes: Vec<u32> = coeffs.iter().map(|c| c.code).collect();
    let mut odo = Odometer::at(0, codes.len(), (q - 1) as u32);
    let mut count = 0;
    loop {
        let sum = odo
            .digits()
            .iter()
            .zip(&codes)
            .fold(0, |acc, (&a, &c)| field.add_codes(acc, field.mul_codes(a + 1, c)));
        if sum == b.code {
            count += 1;
        }
        if odo.advance().is_none() {
            break;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> Field {
        Field::new(3, 2, &[1, 0, 1]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Field::prime(2), Err(Error::EvenCharacteristic(2))));
        assert!(matches!(Field::prime(9), Err(Error::NotPrime(9))));
        // t^2 + 2 = (t + 1)(t + 2) over GF(3)
        assert!(matches!(
            Field::new(3, 2, &[2, 0, 1]),
            Err(Error::ReducibleModulus { p: 3 })
        ));
        assert!(matches!(
            Field::new(3, 2, &[1, 1]),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            Field::new(3, 2, &[1, 0, 2]),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(Field::prime(65537), Err(Error::FieldTooLarge(_))));
    }

    #[test]
    fn degree_four_uses_trial_division() {
        // (t^2 + 1)^2 = t^4 + 2t^2 + 1 has no roots over GF(3) but is reducible.
        assert!(matches!(
            Field::new(3, 4, &[1, 0, 2, 0, 1]),
            Err(Error::ReducibleModulus { .. })
        ));
        assert_eq!(Field::with_order(81).unwrap().order(), 81);
    }

    #[test]
    fn small_examples() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.from_int(2) + f.from_int(4), f.from_int(1));
        assert_eq!(f.from_int(2).inv().unwrap(), f.from_int(3));
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
        let g = gf9();
        let t = g.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(&t * &t, g.from_int(2));
        assert_eq!(f.one().try_add(&g.one()), Err(Error::FieldMismatch));
    }

    #[test]
    fn quadratic_character_examples() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.zero().quadratic_character(), 0);
        assert_eq!(f.from_int(4).quadratic_character(), 1);
        assert_eq!(f.from_int(2).quadratic_character(), -1);
        for x in f.elements() {
            assert_eq!(x.quadratic_character(), f.eta_code(x.code()));
        }
    }

    #[test]
    fn trace_examples() {
        let f = Field::prime(7).unwrap();
        for x in f.elements() {
            assert_eq!(x.trace(), x.code() as u64);
        }
        let g = gf9();
        assert_eq!(g.one().trace(), 2);
        assert_eq!(g.from_coeffs(&[0, 1]).unwrap().trace(), 0);
    }

    #[test]
    fn pow_big_handles_large_exponents() {
        let g = gf9();
        let t = g.from_coeffs(&[0, 1]).unwrap();
        let e = BigUint::from(10u32).pow(30);
        // t^2 = -1, so t has order 4 and 4 | 10^30.
        assert_eq!(t.pow_big(&e), g.one());
        assert_eq!(t.pow_big(&(&e + 1u8)), t);
        assert_eq!(g.zero().pow_big(&BigUint::from(0u8)), g.one());
        assert_eq!(g.zero().pow_big(&e), g.zero());
    }

    #[test]
    fn field_spec_round_trip() {
        let g: Field = "3^2:1,0,1".parse().unwrap();
        assert_eq!(g.spec(), "3^2:1,0,1");
        let f: Field = "5".parse().unwrap();
        assert_eq!(f.spec(), "5");
        let h: Field = "9".parse().unwrap();
        assert_eq!(h.order(), 9);
        assert!("2".parse::<Field>().is_err());
        assert!("x".parse::<Field>().is_err());
    }

    #[test]
    fn linear_solution_examples() {
        let f = Field::prime(3).unwrap();
        let one = f.one();
        let b = Budget::default();
        assert_eq!(count_linear_solutions(std::slice::from_ref(&one), &one, b), Ok(1));
        assert_eq!(count_linear_solutions(std::slice::from_ref(&one), &f.zero(), b), Ok(0));
        let c = [one.clone(), one.clone()];
        assert_eq!(count_linear_solutions(&c, &f.zero(), b), Ok(2));
        assert_eq!(count_linear_solutions(&c, &one, b), Ok(1));
        assert_eq!(
            count_linear_solutions(&[f.zero()], &one, b),
            Err(Error::ZeroCoefficient(0))
        );
    }
}
