//! Arithmetic in small finite fields GF(p^m).
//!
//! Elements are plain integers `0..p^m`. The base-p digits of an element are
//! the coefficients of its polynomial representative, constant term first, so
//! `3` in GF(4) is `x + 1`. Every field uses one fixed modulus from a built-in
//! table; this keeps element encodings stable between runs and exported files.
//!
//! Fields up to 2^16 elements get log/antilog tables; larger ones multiply by
//! schoolbook reduction.

pub mod matrix;

use std::fmt;

use crate::error::{Error, Result};

/// Element of a [`FiniteField`], as its integer encoding.
pub type Elem = u32;

const MAX_FIELD_SIZE: u64 = 1 << 20;
const MAX_CHARACTERISTIC: u32 = 1 << 16;
const TABLE_LIMIT: u32 = 1 << 16;

/// Monic moduli for extension fields, coefficients listed constant term first
/// (the leading 1 included). Entries are primitive polynomials.
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 12, &[1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1]),
    (2, 13, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 14, &[1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]),
    (2, 15, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 16, &[1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1]),
    (2, 17, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 18, &[1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 19, &[1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 20, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 2, &[2, 1, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 1, 0, 0, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 1, 0, 0, 0, 0, 1]),
    (3, 7, &[1, 2, 1, 0, 0, 0, 0, 1]),
    (3, 8, &[2, 0, 0, 1, 0, 0, 0, 0, 1]),
    (3, 9, &[1, 0, 1, 2, 0, 0, 0, 0, 0, 1]),
    (3, 10, &[2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (3, 11, &[1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 12, &[2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 2, &[2, 1, 1]),
    (5, 3, &[2, 3, 0, 1]),
    (5, 4, &[2, 2, 1, 0, 1]),
    (5, 5, &[2, 4, 0, 0, 0, 1]),
    (5, 6, &[2, 1, 0, 0, 0, 0, 1]),
    (5, 7, &[2, 3, 0, 0, 0, 0, 0, 1]),
    (5, 8, &[3, 2, 1, 0, 0, 0, 0, 0, 1]),
    (7, 2, &[3, 1, 1]),
    (7, 3, &[2, 3, 0, 1]),
    (7, 4, &[5, 3, 1, 0, 1]),
    (7, 5, &[4, 1, 0, 0, 0, 1]),
    (7, 6, &[5, 1, 3, 0, 0, 0, 1]),
    (7, 7, &[2, 6, 0, 0, 0, 0, 0, 1]),
    (11, 2, &[7, 1, 1]),
    (11, 3, &[4, 1, 0, 1]),
    (11, 4, &[2, 1, 0, 0, 1]),
    (11, 5, &[4, 1, 1, 0, 0, 1]),
    (13, 2, &[2, 1, 1]),
    (13, 3, &[6, 1, 0, 1]),
    (13, 4, &[2, 1, 1, 0, 1]),
    (13, 5, &[2, 4, 0, 0, 0, 1]),
];

/// Field operations accepted by [`FiniteField::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Pow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct LogTables {
    /// `exp[i] = g^i` for `i < 2(q-1)`, doubled to skip a modular reduction.
    exp: Vec<Elem>,
    log: Vec<u32>,
}

/// The finite field GF(p^m) with a fixed modulus.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<LogTables>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.m)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, m)` with `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1 && p <= u32::MAX as u64).then_some((p as u32, m))
}

impl FiniteField {
    /// Builds GF(p^m) with the table modulus for `(p, m)`.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if !is_prime(p as u64) || p > MAX_CHARACTERISTIC {
            return Err(Error::Field(format!("characteristic {p} is not a prime ≤ 2^16")));
        }
        if m == 0 {
            return Err(Error::Field("extension degree must be positive".into()));
        }
        let q = (p as u64)
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or_else(|| Error::Field(format!("GF({p}^{m}) exceeds the supported size 2^20")))?
            as u32;
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|(pp, mm, _)| *pp == p && *mm == m)
                .map(|(_, _, c)| c.to_vec())
                .ok_or_else(|| Error::Field(format!("no modulus tabulated for GF({p}^{m})")))?
        };
        if !poly_is_irreducible(&modulus, p) {
            return Err(Error::Field(format!("table modulus for GF({p}^{m}) is reducible")));
        }
        let mut field = FiniteField { p, m, q, modulus, tables: None };
        if q <= TABLE_LIMIT && q > 2 {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    /// Builds the field of order `q`, which must be a prime power.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or_else(|| Error::Field(format!("{q} is not a prime power")))?;
        Self::new(p, m)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    fn build_tables(&self) -> LogTables {
        let order = self.q - 1;
        let factors = prime_factors(order);
        let gen = (1..self.q)
            .find(|&g| {
                self.slow_pow(g, order as u64) == 1
                    && factors.iter().all(|&r| self.slow_pow(g, (order / r) as u64) != 1)
            })
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0; 2 * order as usize];
        let mut log = vec![0; self.q as usize];
        let mut x = 1;
        for i in 0..order {
            exp[i as usize] = x;
            exp[(i + order) as usize] = x;
            log[x as usize] = i;
            x = self.slow_mul(x, gen);
        }
        LogTables { exp, log }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        if self.m == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
            None if self.m == 1 => ((a as u64 * b as u64) % self.p as u64) as Elem,
            None => self.slow_mul(a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        Some(match &self.tables {
            Some(t) => {
                let order = self.q - 1;
                t.exp[((order - t.log[a as usize]) % order) as usize]
            }
            None => self.pow(a, self.q as u64 - 2),
        })
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// Dispatches one field operation. For `Pow`, `b` is the exponent.
    pub fn arith(&self, op: FieldOp, a: Elem, b: u64) -> Result<Elem> {
        self.check(a)?;
        if matches!(op, FieldOp::Add | FieldOp::Sub | FieldOp::Mul) {
            self.check(b as Elem)?;
        }
        Ok(match op {
            FieldOp::Add => self.add(a, b as Elem),
            FieldOp::Sub => self.sub(a, b as Elem),
            FieldOp::Mul => self.mul(a, b as Elem),
            FieldOp::Inv => self.inv(a).ok_or_else(|| Error::Field("inverse of zero".into()))?,
            FieldOp::Pow => self.pow(a, b),
        })
    }

    pub fn check(&self, a: Elem) -> Result<()> {
        if a < self.q {
            Ok(())
        } else {
            Err(Error::Field(format!("{a} is not an element of {self:?}")))
        }
    }

    /// Coefficient vector over GF(p) of length m, constant term first.
    pub fn to_prime_vector(&self, a: Elem) -> Vec<u32> {
        let mut a = a;
        (0..self.m)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    pub fn from_prime_vector(&self, v: &[u32]) -> Result<Elem> {
        if v.len() != self.m as usize || v.iter().any(|&d| d >= self.p) {
            return Err(Error::Field(format!("{v:?} is not a prime vector of {self:?}")));
        }
        Ok(v.iter().rev().fold(0, |acc, &d| acc * self.p + d))
    }

    fn slow_pow(&self, a: Elem, mut e: u64) -> Elem {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        let pa = self.to_prime_vector(a);
        let pb = self.to_prime_vector(b);
        let prod = poly_mul(&pa, &pb, self.p);
        let rem = poly_rem(&prod, &self.modulus, self.p);
        let mut digits = rem;
        digits.resize(self.m as usize, 0);
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    out.into_iter().map(|c| c as u32).collect()
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let deg = m.len() - 1;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let p = p as u64;
    for top in (deg..r.len()).rev() {
        let c = r[top] % p;
        if c == 0 {
            continue;
        }
        for (t, &mc) in m.iter().enumerate() {
            let idx = top - deg + t;
            r[idx] = (r[idx] + (p - c) * mc as u64) % p;
        }
    }
    r.truncate(deg);
    r.into_iter().map(|c| c as u32).collect()
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub(crate) fn poly_is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut divisor: Vec<u32> = Vec::with_capacity(d + 1);
            let mut rest = low;
            for _ in 0..d {
                divisor.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}
