//! Vectors and row reduction over a prime field F_p.
//!
//! For p = 2 entries are packed 64 to a word and addition is XOR. Other
//! primes store one digit per word.

use std::fmt;

/// A vector in F_p^len.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpVec {
    p: u32,
    len: usize,
    data: Vec<u64>,
}

impl fmt::Debug for FpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpVec<{}>[", self.p)?;
        for i in 0..self.len {
            write!(f, "{}", self.get(i))?;
        }
        write!(f, "]")
    }
}

fn words_for(p: u32, len: usize) -> usize {
    if p == 2 {
        len.div_ceil(64)
    } else {
        len
    }
}

impl FpVec {
    pub fn zeros(p: u32, len: usize) -> Self {
        FpVec { p, len, data: vec![0; words_for(p, len)] }
    }

    pub fn from_digits(p: u32, digits: &[u32]) -> Self {
        let mut v = Self::zeros(p, digits.len());
        for (i, &d) in digits.iter().enumerate() {
            v.set(i, d % p);
        }
        v
    }

    pub fn unit(p: u32, len: usize, i: usize) -> Self {
        let mut v = Self::zeros(p, len);
        v.set(i, 1);
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        debug_assert!(i < self.len);
        if self.p == 2 {
            ((self.data[i / 64] >> (i % 64)) & 1) as u32
        } else {
            self.data[i] as u32
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: u32) {
        debug_assert!(i < self.len && v < self.p);
        if self.p == 2 {
            let mask = 1u64 << (i % 64);
            if v == 1 {
                self.data[i / 64] |= mask;
            } else {
                self.data[i / 64] &= !mask;
            }
        } else {
            self.data[i] = v as u64;
        }
    }

    pub fn digits(&self) -> Vec<u32> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.data.iter_mut().for_each(|w| *w = 0);
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        if self.p == 2 {
            self.data.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
        } else {
            self.data.iter().position(|&d| d != 0)
        }
    }

    /// Number of nonzero entries.
    pub fn hamming_weight(&self) -> usize {
        if self.p == 2 {
            self.data.iter().map(|w| w.count_ones() as usize).sum()
        } else {
            self.data.iter().filter(|&&d| d != 0).count()
        }
    }

    #[inline]
    pub fn add_assign(&mut self, other: &FpVec) {
        debug_assert_eq!(self.len, other.len);
        if self.p == 2 {
            for (a, b) in self.data.iter_mut().zip(&other.data) {
                *a ^= b;
            }
        } else {
            let p = self.p as u64;
            for (a, b) in self.data.iter_mut().zip(&other.data) {
                *a = (*a + b) % p;
            }
        }
    }

    /// `self += c · other`.
    #[inline]
    pub fn add_scaled(&mut self, other: &FpVec, c: u32) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        if self.p == 2 {
            self.add_assign(other);
            return;
        }
        let p = self.p as u64;
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a = (*a + c as u64 * b) % p;
        }
    }

    pub fn sub_assign(&mut self, other: &FpVec) {
        self.add_scaled(other, self.p - 1);
    }

    pub fn scale(&mut self, c: u32) {
        let c = (c % self.p) as u64;
        if self.p == 2 {
            if c == 0 {
                self.clear();
            }
            return;
        }
        let p = self.p as u64;
        self.data.iter_mut().for_each(|a| *a = *a * c % p);
    }

    pub fn negated(&self) -> FpVec {
        let mut v = self.clone();
        v.scale(self.p - 1);
        v
    }

    /// Standard dot product.
    pub fn dot(&self, other: &FpVec) -> u32 {
        if self.p == 2 {
            let ones: u32 = self.data.iter().zip(&other.data).map(|(a, b)| (a & b).count_ones()).sum();
            ones & 1
        } else {
            let p = self.p as u64;
            (self.data.iter().zip(&other.data).fold(0u64, |acc, (a, b)| (acc + a * b) % p)) as u32
        }
    }

    /// Entries `start..start+len`.
    pub fn slice(&self, start: usize, len: usize) -> FpVec {
        let mut out = FpVec::zeros(self.p, len);
        if self.p == 2 && start.is_multiple_of(64) {
            let w0 = start / 64;
            let nw = out.data.len();
            out.data.copy_from_slice(&self.data[w0..w0 + nw]);
            if !len.is_multiple_of(64) {
                out.data[nw - 1] &= (1u64 << (len % 64)) - 1;
            }
            return out;
        }
        for i in 0..len {
            out.set(i, self.get(start + i));
        }
        out
    }

    /// Writes `src` into entries `start..start+src.len()`.
    pub fn write_at(&mut self, start: usize, src: &FpVec) {
        for i in 0..src.len {
            self.set(start + i, src.get(i));
        }
    }

    pub fn concat(&self, other: &FpVec) -> FpVec {
        let mut out = FpVec::zeros(self.p, self.len + other.len);
        out.write_at(0, self);
        out.write_at(self.len, other);
        out
    }

    /// Packed words (p = 2 only).
    pub(crate) fn words(&self) -> &[u64] {
        &self.data
    }
}

/// A set of rows kept in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    p: u32,
    ncols: usize,
    rows: Vec<FpVec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(p: u32, ncols: usize, rows: impl IntoIterator<Item = FpVec>) -> Self {
        let mut rows: Vec<FpVec> = rows.into_iter().collect();
        let pivots = rref(&mut rows, ncols);
        Echelon { p, ncols, rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[FpVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `v` against the rows; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &mut FpVec) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v.get(pc);
            if c != 0 {
                v.add_scaled(row, self.p - c);
            }
        }
    }

    pub fn contains(&self, v: &FpVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Adds `v` if independent; returns whether the rank grew.
    pub fn insert(&mut self, v: FpVec) -> bool {
        let mut w = v;
        self.reduce(&mut w);
        let Some(col) = w.first_nonzero() else {
            return false;
        };
        let lead = w.get(col);
        if lead != 1 {
            w.scale(mod_inverse(lead, self.p));
        }
        for row in &mut self.rows {
            let c = row.get(col);
            if c != 0 {
                row.add_scaled(&w, self.p - c);
            }
        }
        let at = self.pivots.partition_point(|&pc| pc < col);
        self.rows.insert(at, w);
        self.pivots.insert(at, col);
        true
    }

    /// Basis of `{x : row · x = 0 for every row}`.
    pub fn nullspace(&self) -> Vec<FpVec> {
        let mut is_pivot = vec![false; self.ncols];
        for &pc in &self.pivots {
            is_pivot[pc] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|fc| {
                let mut v = FpVec::unit(self.p, self.ncols, fc);
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    let c = row.get(fc);
                    if c != 0 {
                        v.set(pc, (self.p - c) % self.p);
                    }
                }
                v
            })
            .collect()
    }
}

/// In-place reduced row echelon form; zero rows are dropped.
pub fn rref(rows: &mut Vec<FpVec>, ncols: usize) -> Vec<usize> {
    let Some(p) = rows.first().map(FpVec::p) else {
        return Vec::new();
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| rows[i].get(col) != 0) else {
            continue;
        };
        rows.swap(r, found);
        let lead = rows[r].get(col);
        if lead != 1 {
            let inv = mod_inverse(lead, p);
            rows[r].scale(inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r {
                let c = row.get(col);
                if c != 0 {
                    row.add_scaled(&pivot_row, p - c);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn mod_inverse(a: u32, p: u32) -> u32 {
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}
