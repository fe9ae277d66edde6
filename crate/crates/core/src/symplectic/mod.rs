//! Pauli operators as vectors `(x | z)` in F_p^{2n}, and the codes built
//! from them.
//!
//! Phases are not represented: codes are determined up to the signs of
//! their stabilizers, which do not change `[[n, k, d]]`.

mod chain;
mod code;

pub use chain::NestedStabilizerChain;
pub use code::{AdditiveSymplecticCode, InnerDistanceStatus, StabilizerCode};

use std::fmt;

use crate::error::{Error, Result};
use crate::fp::FpVec;

/// A Pauli operator without phase, as `(x | z)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymplecticVector {
    x: FpVec,
    z: FpVec,
}

impl fmt::Debug for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p() == 2 {
            write!(f, "{}", self.to_pauli_string().unwrap())
        } else {
            write!(f, "({:?} | {:?})", self.x.digits(), self.z.digits())
        }
    }
}

impl SymplecticVector {
    pub fn zeros(p: u32, n: usize) -> Self {
        SymplecticVector { x: FpVec::zeros(p, n), z: FpVec::zeros(p, n) }
    }

    pub fn from_parts(x: FpVec, z: FpVec) -> Result<Self> {
        if x.len() != z.len() || x.p() != z.p() {
            return Err(Error::Dimension { expected: x.len(), got: z.len() });
        }
        Ok(SymplecticVector { x, z })
    }

    pub fn from_digits(p: u32, x: &[u32], z: &[u32]) -> Result<Self> {
        Self::from_parts(FpVec::from_digits(p, x), FpVec::from_digits(p, z))
    }

    /// A single-qubit Pauli `(a | b)` at position `i`.
    pub fn single(p: u32, n: usize, i: usize, a: u32, b: u32) -> Self {
        let mut v = Self::zeros(p, n);
        v.x.set(i, a % p);
        v.z.set(i, b % p);
        v
    }

    /// Parses `I`, `X`, `Z`, `Y` per qubit (binary case only).
    pub fn from_pauli_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut v = Self::zeros(2, chars.len());
        for (i, c) in chars.into_iter().enumerate() {
            let (a, b) = match c {
                'I' => (0, 0),
                'X' => (1, 0),
                'Z' => (0, 1),
                'Y' => (1, 1),
                other => return Err(Error::BadPauli(other)),
            };
            v.x.set(i, a);
            v.z.set(i, b);
        }
        Ok(v)
    }

    pub fn to_pauli_string(&self) -> Result<String> {
        if self.p() != 2 {
            return Err(Error::Incompatible("Pauli strings are only defined for p = 2".into()));
        }
        Ok((0..self.n())
            .map(|i| match (self.x.get(i), self.z.get(i)) {
                (0, 0) => 'I',
                (1, 0) => 'X',
                (0, 1) => 'Z',
                _ => 'Y',
            })
            .collect())
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn p(&self) -> u32 {
        self.x.p()
    }

    pub fn x(&self) -> &FpVec {
        &self.x
    }

    pub fn z(&self) -> &FpVec {
        &self.z
    }

    /// `(x_i, z_i)` at qubit `i`.
    pub fn at(&self, i: usize) -> (u32, u32) {
        (self.x.get(i), self.z.get(i))
    }

    pub fn set(&mut self, i: usize, a: u32, b: u32) {
        self.x.set(i, a);
        self.z.set(i, b);
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Number of qubits on which the operator acts nontrivially.
    pub fn weight(&self) -> usize {
        if self.p() == 2 {
            self.x.words().iter().zip(self.z.words()).map(|(a, b)| (a | b).count_ones() as usize).sum()
        } else {
            (0..self.n()).filter(|&i| self.x.get(i) != 0 || self.z.get(i) != 0).count()
        }
    }

    pub fn add_assign(&mut self, other: &SymplecticVector) {
        self.x.add_assign(&other.x);
        self.z.add_assign(&other.z);
    }

    pub fn add_scaled(&mut self, other: &SymplecticVector, c: u32) {
        self.x.add_scaled(&other.x, c);
        self.z.add_scaled(&other.z, c);
    }

    pub fn sub(&self, other: &SymplecticVector) -> SymplecticVector {
        let mut out = self.clone();
        out.x.sub_assign(&other.x);
        out.z.sub_assign(&other.z);
        out
    }

    /// `Σ x_i z'_i − z_i x'_i` over F_p.
    pub fn product(&self, other: &SymplecticVector) -> Result<u32> {
        if self.n() != other.n() || self.p() != other.p() {
            return Err(Error::Dimension { expected: self.n(), got: other.n() });
        }
        Ok(self.product_unchecked(other))
    }

    #[inline]
    pub(crate) fn product_unchecked(&self, other: &SymplecticVector) -> u32 {
        let p = self.p();
        if p == 2 {
            let (xa, za, xb, zb) = (self.x.words(), self.z.words(), other.x.words(), other.z.words());
            let mut acc = 0u64;
            for i in 0..xa.len() {
                acc ^= (xa[i] & zb[i]) ^ (za[i] & xb[i]);
            }
            return acc.count_ones() & 1;
        }
        let xz = self.x.dot(&other.z);
        let zx = self.z.dot(&other.x);
        (xz + p - zx) % p
    }

    /// `[x | z]` as one vector of length 2n.
    pub fn to_flat(&self) -> FpVec {
        self.x.concat(&self.z)
    }

    pub fn from_flat(v: &FpVec) -> Self {
        let n = v.len() / 2;
        SymplecticVector { x: v.slice(0, n), z: v.slice(n, n) }
    }

    /// The functional `u ↦ ⟨u, self⟩` as a flat row: `[z | −x]`.
    pub(crate) fn product_row(&self) -> FpVec {
        self.z.concat(&self.x.negated())
    }

    /// Copies this operator into qubits `offset..offset+n` of an `n_total`-qubit operator.
    pub fn embed(&self, n_total: usize, offset: usize) -> SymplecticVector {
        let mut out = SymplecticVector::zeros(self.p(), n_total);
        out.x.write_at(offset, &self.x);
        out.z.write_at(offset, &self.z);
        out
    }

    /// Qubits `offset..offset+len`.
    pub fn block(&self, offset: usize, len: usize) -> SymplecticVector {
        SymplecticVector { x: self.x.slice(offset, len), z: self.z.slice(offset, len) }
    }

    /// Entries as integers, x part then z part.
    pub fn to_digits(&self) -> Vec<u32> {
        let mut d = self.x.digits();
        d.extend(self.z.digits());
        d
    }
}
