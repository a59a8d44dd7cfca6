//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`, together with the
//! q-integer combinatorics used by the algebra families.
//!
//! A [`Cyclotomic`] stores a conductor `N` and coordinates in the power basis
//! `{1, zeta_N, ..., zeta_N^{phi(N)-1}}`, always reduced modulo the `N`-th
//! cyclotomic polynomial. Values with different conductors are compared and
//! combined by embedding into `Q(zeta_L)` for `L = lcm` of the conductors, so
//! scalars produced by different constructions can be mixed freely. Rational
//! values always collapse to conductor 1, and conductors congruent to 2 mod 4
//! are rewritten to their odd half (`Q(zeta_{2m}) = Q(zeta_m)` for odd `m`),
//! which keeps representations canonical per conductor.
//!
//! No floating point is used anywhere; coefficients are arbitrary-precision
//! rationals.

use alloc::string::String;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, the coefficient domain of every scalar.
pub type Rational = num_rational::BigRational;

/// Errors raised by scalar operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// Division by zero / inverse of zero / order of zero.
    ZeroInput,
    /// `qbinom(n, s, q)` with `s > n`.
    BinomialOutOfRange { n: u64, s: u64 },
    /// Input text that does not match the scalar grammar.
    Parse(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::ZeroInput => write!(f, "zero input where a nonzero scalar is required"),
            ScalarError::BinomialOutOfRange { n, s } => {
                write!(f, "q-binomial index out of range: s = {s} > n = {n}")
            }
            ScalarError::Parse(msg) => write!(f, "scalar parse error: {msg}"),
        }
    }
}

impl core::error::Error for ScalarError {}

/// Result of a multiplicative-order search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    /// The element is a root of unity of this exact order.
    Finite(u64),
    /// No power up to the search cap equals 1; the element is not a root of
    /// unity (the cap `2 * conductor` is exhaustive for cyclotomic fields).
    NotRootOfUnity,
}

/// Euler's totient.
pub(crate) fn phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Coefficients of the `n`-th cyclotomic polynomial, low degree first,
/// computed by exact integer division of `x^n - 1` by all proper `Phi_d`.
///
/// Coefficients fit comfortably in `i64` for every conductor this crate
/// encounters (they are bounded well below overflow for n < 10^4).
pub(crate) fn cyclotomic_poly(n: u64) -> Vec<i64> {
    assert!(n >= 1);
    if n == 1 {
        return vec![-1, 1]; // x - 1
    }
    // x^n - 1
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let q = cyclotomic_poly(d);
        num = divide_int_poly(&num, &q);
    }
    num
}

/// Exact division of integer polynomials with monic divisor.
fn divide_int_poly(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd] == 1, "divisor must be monic");
    assert!(dn >= dd);
    let mut rem: Vec<i64> = num.to_vec();
    let mut quot = vec![0i64; dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &dc) in den.iter().enumerate() {
                rem[k + i] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "non-exact polynomial division");
    quot
}

/// Reduce a rational coefficient buffer modulo `Phi_n`, in place, and
/// truncate it to length `phi(n)`.
fn reduce_mod_cyclotomic(buf: &mut Vec<Rational>, n: u64) {
    let deg = phi(n) as usize;
    let poly = cyclotomic_poly(n);
    debug_assert_eq!(poly.len(), deg + 1);
    let mut d = buf.len();
    while d > deg {
        d -= 1;
        if buf[d].is_zero() {
            continue;
        }
        let c = core::mem::replace(&mut buf[d], Rational::zero());
        for (i, &pc) in poly.iter().enumerate().take(deg) {
            if pc != 0 {
                let term = &c * Rational::from_integer(BigInt::from(pc));
                buf[d - deg + i] -= term;
            }
        }
    }
    buf.truncate(deg);
    while buf.len() < deg {
        buf.push(Rational::zero());
    }
}

/// An exact element of a cyclotomic field.
///
/// Equality is semantic: values with different conductors are embedded into a
/// common field before comparison. `Hash` is deliberately not implemented.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    fn normalized(conductor: u64, mut coeffs: Vec<Rational>) -> Self {
        debug_assert!(conductor % 4 != 2);
        reduce_mod_cyclotomic(&mut coeffs, conductor);
        if conductor > 1 && coeffs.iter().skip(1).all(|c| c.is_zero()) {
            // Rational value: collapse to the trivial conductor.
            let c0 = coeffs.swap_remove(0);
            return Cyclotomic {
                conductor: 1,
                coeffs: vec![c0],
            };
        }
        Cyclotomic { conductor, coeffs }
    }

    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(k)))
    }

    /// `zeta_n^k`, canonicalized (the fraction `k/n` is reduced and conductors
    /// `2m` with odd `m` are rewritten into `Q(zeta_m)` via
    /// `zeta_{2m} = -zeta_m^{(m+1)/2}`).
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let k = k.rem_euclid(n as i64) as u64;
        let g = k.gcd(&n);
        let (mut n, mut k) = (n / g, k / g);
        let mut sign = false;
        if n % 4 == 2 {
            let m = n / 2;
            // zeta_{2m}^k = (-1)^k zeta_m^{k (m+1)/2 mod m}
            sign = k % 2 == 1;
            k = (k * ((m + 1) / 2)) % m;
            n = m;
        }
        let deg = phi(n) as usize;
        let mut coeffs = vec![Rational::zero(); (k as usize + 1).max(deg)];
        coeffs[k as usize] = if sign {
            -Rational::one()
        } else {
            Rational::one()
        };
        Cyclotomic::normalized(n, coeffs)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.conductor == 1 {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Coordinates of this value inside `Q(zeta_target)`; the stored
    /// conductor must divide `target`.
    fn embed_coeffs(&self, target: u64) -> Vec<Rational> {
        debug_assert!(target % self.conductor == 0 && target % 4 != 2);
        if target == self.conductor {
            return self.coeffs.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut buf = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                buf[i * step] = c.clone();
            }
        }
        reduce_mod_cyclotomic(&mut buf, target);
        buf
    }

    fn common_conductor(&self, other: &Self) -> u64 {
        self.conductor.lcm(&other.conductor)
    }

    pub fn add(&self, other: &Self) -> Self {
        let l = self.common_conductor(other);
        let mut a = self.embed_coeffs(l);
        let b = other.embed_coeffs(l);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x += y;
        }
        Cyclotomic::normalized(l, a)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let l = self.common_conductor(other);
        let mut a = self.embed_coeffs(l);
        let b = other.embed_coeffs(l);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x -= y;
        }
        Cyclotomic::normalized(l, a)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // Fast paths: rational factors need no polynomial work.
        if self.conductor == 1 {
            let r = &self.coeffs[0];
            if r.is_zero() {
                return Cyclotomic::zero();
            }
            return Cyclotomic::normalized(
                other.conductor,
                other.coeffs.iter().map(|c| c * r).collect(),
            );
        }
        if other.conductor == 1 {
            return other.mul(self);
        }
        let l = self.common_conductor(other);
        let a = self.embed_coeffs(l);
        let b = other.embed_coeffs(l);
        let mut buf = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    buf[i + j] += x * y;
                }
            }
        }
        Cyclotomic::normalized(l, buf)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.conductor == 1 {
            return Some(Cyclotomic::from_rational(self.coeffs[0].recip()));
        }
        // Extended Euclid in Q[x] against Phi_N: u * self + v * Phi = gcd.
        let modulus: Vec<Rational> = cyclotomic_poly(self.conductor)
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        let (g, u) = poly_half_xgcd(&self.coeffs, &modulus);
        // g is a nonzero constant since Phi_N is irreducible over Q.
        debug_assert_eq!(poly_degree(&g), Some(0));
        let ginv = g[0].recip();
        let mut buf: Vec<Rational> = u.iter().map(|c| c * &ginv).collect();
        reduce_mod_cyclotomic(&mut buf, self.conductor);
        Some(Cyclotomic::normalized(self.conductor, buf))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self
                .inv()
                .expect("negative power of zero")
                .pow(-e);
        }
        let mut base = self.clone();
        let mut e = e as u64;
        let mut acc = Cyclotomic::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Least `m >= 1` with `self^m = 1`, searched up to `2 * conductor`
    /// (roots of unity in `Q(zeta_N)` have order dividing `lcm(2, N)`).
    pub fn multiplicative_order(&self) -> Result<Order, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroInput);
        }
        let cap = 2 * self.conductor;
        let mut p = self.clone();
        for m in 1..=cap {
            if p.is_one() {
                return Ok(Order::Finite(m));
            }
            p = p.mul(self);
        }
        Ok(Order::NotRootOfUnity)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let l = self.common_conductor(other);
        self.embed_coeffs(l) == other.embed_coeffs(l)
    }
}

impl Eq for Cyclotomic {}

fn poly_degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Half extended gcd: returns `(g, u)` with `u * a = g (mod m)`.
fn poly_half_xgcd(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0: Vec<Rational> = m.to_vec();
    let mut r1: Vec<Rational> = a.to_vec();
    let mut u0: Vec<Rational> = vec![Rational::zero()];
    let mut u1: Vec<Rational> = vec![Rational::one()];
    while poly_degree(&r1).is_some() {
        let (q, rem) = poly_divrem(&r0, &r1);
        let u2 = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = u2;
    }
    (r0, u0)
}

fn poly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let dd = poly_degree(den).expect("division by zero polynomial");
    let lead = den[dd].clone();
    let mut rem: Vec<Rational> = num.to_vec();
    let dn = match poly_degree(&rem) {
        Some(d) if d >= dd => d,
        _ => return (vec![Rational::zero()], rem),
    };
    let mut quot = vec![Rational::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = &rem[k + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for i in 0..=dd {
            let t = &c * &den[i];
            rem[k + i] -= t;
        }
    }
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rational::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

/// A primitive `n`-th root of unity, with its order verified exactly.
pub fn primitive_root(n: u64) -> Cyclotomic {
    assert!(n >= 1);
    let z = Cyclotomic::root_of_unity(n, 1);
    debug_assert_eq!(z.multiplicative_order(), Ok(Order::Finite(n)));
    z
}

/// Gaussian binomial coefficient `(n choose s)_q`, computed by the q-Pascal
/// recurrence `(n s)_q = (n-1 s-1)_q + q^s (n-1 s)_q`. Division-free, so it
/// is exact at roots of unity where the quotient formula degenerates.
pub fn qbinom(n: u64, s: u64, q: &Cyclotomic) -> Result<Cyclotomic, ScalarError> {
    if s > n {
        return Err(ScalarError::BinomialOutOfRange { n, s });
    }
    // row[k] = (m choose k)_q for the current m
    let mut row: Vec<Cyclotomic> = vec![Cyclotomic::one()];
    let mut qpow: Vec<Cyclotomic> = Vec::with_capacity(n as usize + 1);
    qpow.push(Cyclotomic::one());
    for _ in 0..n {
        qpow.push(qpow.last().unwrap().mul(q));
    }
    for m in 1..=n {
        let mut next: Vec<Cyclotomic> = Vec::with_capacity(m as usize + 1);
        next.push(Cyclotomic::one());
        for k in 1..m {
            let a = &row[k as usize - 1];
            let b = row[k as usize].mul(&qpow[k as usize]);
            next.push(a.add(&b));
        }
        next.push(Cyclotomic::one());
        row = next;
    }
    Ok(row[s as usize].clone())
}

// ---------------------------------------------------------------------------
// Textual syntax: "a/b * z(N)^k + ...". Round-trips exactly.
// ---------------------------------------------------------------------------

fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{} * ", fmt_rational(&mag))?;
                }
                if k == 1 {
                    write!(f, "z({})", self.conductor)?;
                } else {
                    write!(f, "z({})^{}", self.conductor, k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn expect(&mut self, b: u8) -> Result<(), ScalarError> {
        match self.bump() {
            Some(c) if c == b => Ok(()),
            other => Err(ScalarError::Parse(alloc::format!(
                "expected '{}', found {:?}",
                b as char,
                other.map(|c| c as char)
            ))),
        }
    }

    fn parse_uint(&mut self) -> Result<u64, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ScalarError::Parse("expected digits".into()));
        }
        let s = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        s.parse::<u64>()
            .map_err(|_| ScalarError::Parse("integer overflow".into()))
    }

    fn parse_sint(&mut self) -> Result<i64, ScalarError> {
        let neg = if self.peek() == Some(b'-') {
            self.bump();
            true
        } else {
            false
        };
        let u = self.parse_uint()? as i64;
        Ok(if neg { -u } else { u })
    }

    /// `z(N)` or `z(N)^k`
    fn parse_root(&mut self) -> Result<Cyclotomic, ScalarError> {
        self.expect(b'z')?;
        self.expect(b'(')?;
        let n = self.parse_uint()?;
        if n == 0 {
            return Err(ScalarError::Parse("z(0) is not a root of unity".into()));
        }
        self.expect(b')')?;
        let k = if self.peek() == Some(b'^') {
            self.bump();
            self.parse_sint()?
        } else {
            1
        };
        Ok(Cyclotomic::root_of_unity(n, k))
    }

    fn parse_term(&mut self) -> Result<Cyclotomic, ScalarError> {
        if self.peek() == Some(b'z') {
            return self.parse_root();
        }
        if self.peek() == Some(b'-') {
            let save = self.pos;
            self.bump();
            if self.peek() == Some(b'z') {
                return Ok(self.parse_root()?.neg());
            }
            self.pos = save;
        }
        let num = self.parse_sint()?;
        let den = if self.peek() == Some(b'/') {
            self.bump();
            let d = self.parse_uint()?;
            if d == 0 {
                return Err(ScalarError::Parse("zero denominator".into()));
            }
            d
        } else {
            1
        };
        let rat = Rational::new(BigInt::from(num), BigInt::from(den));
        let mut value = Cyclotomic::from_rational(rat);
        if self.peek() == Some(b'*') {
            self.bump();
            value = value.mul(&self.parse_root()?);
        } else if self.peek() == Some(b'z') {
            value = value.mul(&self.parse_root()?);
        }
        Ok(value)
    }

    fn parse_expr(&mut self) -> Result<Cyclotomic, ScalarError> {
        let mut acc = self.parse_term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = acc.add(&self.parse_term()?);
                }
                Some(b'-') => {
                    self.bump();
                    acc = acc.sub(&self.parse_term()?);
                }
                None => return Ok(acc),
                Some(other) => {
                    return Err(ScalarError::Parse(alloc::format!(
                        "unexpected character '{}'",
                        other as char
                    )))
                }
            }
        }
    }
}

impl core::str::FromStr for Cyclotomic {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser::new(s).parse_expr()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn zeta(n: u64) -> Cyclotomic {
        primitive_root(n)
    }

    #[test]
    fn primitive_roots_small() {
        assert!(zeta(1).is_one());
        assert_eq!(zeta(2), Cyclotomic::from_integer(-1));
        let i = zeta(4);
        assert_eq!(i.mul(&i), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn orders() {
        assert_eq!(
            Cyclotomic::from_integer(-1).multiplicative_order(),
            Ok(Order::Finite(2))
        );
        let z6sq = zeta(6).pow(2);
        assert_eq!(z6sq.multiplicative_order(), Ok(Order::Finite(3)));
        assert_eq!(
            Cyclotomic::from_integer(2).multiplicative_order(),
            Ok(Order::NotRootOfUnity)
        );
        assert_eq!(
            Cyclotomic::zero().multiplicative_order(),
            Err(ScalarError::ZeroInput)
        );
        for n in 1..=16 {
            assert_eq!(zeta(n).multiplicative_order(), Ok(Order::Finite(n)), "n={n}");
        }
    }

    #[test]
    fn cross_conductor_equality() {
        // zeta_6^3 = -1 and zeta_8^2 = zeta_4.
        assert_eq!(zeta(6).pow(3), Cyclotomic::from_integer(-1));
        assert_eq!(zeta(8).pow(2), zeta(4));
        assert_eq!(zeta(12).pow(3), zeta(4));
    }

    #[test]
    fn field_arithmetic() {
        let z = zeta(5);
        let a = z.add(&Cyclotomic::from_integer(2));
        let b = a.inv().unwrap();
        assert!(a.mul(&b).is_one());
        // 1 + z + z^2 + z^3 + z^4 = 0
        let mut s = Cyclotomic::one();
        for k in 1..5 {
            s = s.add(&z.pow(k));
        }
        assert!(s.is_zero());
    }

    #[test]
    fn qbinom_basics() {
        let q = zeta(5);
        // (2 choose 1)_q = 1 + q
        assert_eq!(
            qbinom(2, 1, &q).unwrap(),
            Cyclotomic::one().add(&q)
        );
        // (n choose 0)_q = 1
        assert!(qbinom(9, 0, &q).unwrap().is_one());
        assert_eq!(
            qbinom(3, 4, &q),
            Err(ScalarError::BinomialOutOfRange { n: 3, s: 4 })
        );
    }

    // Independent oracle for the derived value (4 choose 2)_{zeta_4}: expand
    // the Gaussian polynomial 1 + q + 2q^2 + q^3 + q^4 by hand and evaluate.
    #[test]
    fn qbinom_derived_value_at_i() {
        let i = zeta(4);
        let oracle = Cyclotomic::one()
            .add(&i)
            .add(&i.pow(2).mul(&Cyclotomic::from_integer(2)))
            .add(&i.pow(3))
            .add(&i.pow(4));
        assert!(oracle.is_zero());
        assert_eq!(qbinom(4, 2, &i).unwrap(), oracle);
    }

    #[test]
    fn qbinom_at_one_is_binomial() {
        let one = Cyclotomic::one();
        for n in 0..=10u64 {
            let mut binom = 1u64;
            for s in 0..=n {
                assert_eq!(
                    qbinom(n, s, &one).unwrap(),
                    Cyclotomic::from_integer(binom as i64),
                    "n={n} s={s}"
                );
                if s < n {
                    binom = binom * (n - s) / (s + 1);
                }
            }
        }
    }

    #[test]
    fn qbinom_vanishes_at_primitive_roots() {
        for n in 1..=12u64 {
            let q = zeta(n);
            for s in 1..n {
                assert!(
                    qbinom(n, s, &q).unwrap().is_zero(),
                    "({n} choose {s}) at zeta_{n}"
                );
            }
        }
    }

    #[test]
    fn display_round_trip() {
        let samples = [
            Cyclotomic::zero(),
            Cyclotomic::from_integer(-3),
            Cyclotomic::from_rational(Rational::new(BigInt::from(7), BigInt::from(2))),
            zeta(8),
            zeta(8).pow(3).mul(&Cyclotomic::from_integer(-2)).add(&Cyclotomic::one()),
            zeta(12).add(&zeta(3)).sub(&Cyclotomic::from_rational(Rational::new(
                BigInt::from(1),
                BigInt::from(6),
            ))),
        ];
        for s in &samples {
            let text = format!("{s}");
            let back: Cyclotomic = text.parse().unwrap();
            assert_eq!(&back, s, "round-trip of {text}");
        }
    }

    #[test]
    fn parse_examples() {
        let v: Cyclotomic = "1/2 * z(4) + 3".parse().unwrap();
        assert_eq!(
            v,
            zeta(4)
                .mul(&Cyclotomic::from_rational(Rational::new(
                    BigInt::from(1),
                    BigInt::from(2)
                )))
                .add(&Cyclotomic::from_integer(3))
        );
        let w: Cyclotomic = "z(6)".parse().unwrap();
        assert_eq!(w, zeta(6));
        assert_eq!(w.conductor(), 3, "conductor 6 normalizes to 3");
        let neg: Cyclotomic = "-z(4)^-1".parse().unwrap();
        assert_eq!(neg, zeta(4));
        assert!("z(".parse::<Cyclotomic>().is_err());
    }
}
