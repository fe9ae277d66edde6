use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use super::SymplecticVector;
use crate::error::{Error, Result};
use crate::fp::{Echelon, FpVec};

/// An F_p-linear code in F_p^{2n}, kept as a canonical row-reduced basis so
/// that equal codes have equal bases.
#[derive(Clone)]
pub struct AdditiveSymplecticCode {
    n: usize,
    p: u32,
    basis: Echelon,
    dual: OnceLock<Echelon>,
}

impl fmt::Debug for AdditiveSymplecticCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AdditiveSymplecticCode")
            .field("n", &self.n)
            .field("p", &self.p)
            .field("dim", &self.dim())
            .finish()
    }
}

impl PartialEq for AdditiveSymplecticCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.p == other.p && self.basis.rows() == other.basis.rows()
    }
}

impl Eq for AdditiveSymplecticCode {}

impl AdditiveSymplecticCode {
    pub fn new(p: u32, n: usize, generators: &[SymplecticVector]) -> Result<Self> {
        for g in generators {
            if g.n() != n || g.p() != p {
                return Err(Error::Dimension { expected: n, got: g.n() });
            }
        }
        Ok(Self::from_echelon(p, n, Echelon::new(p, 2 * n, generators.iter().map(SymplecticVector::to_flat))))
    }

    fn from_echelon(p: u32, n: usize, basis: Echelon) -> Self {
        AdditiveSymplecticCode { n, p, basis, dual: OnceLock::new() }
    }

    pub fn zero(p: u32, n: usize) -> Self {
        Self::from_echelon(p, n, Echelon::new(p, 2 * n, []))
    }

    pub fn full(p: u32, n: usize) -> Self {
        Self::from_echelon(p, n, Echelon::new(p, 2 * n, (0..2 * n).map(|i| FpVec::unit(p, 2 * n, i))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Dimension over F_p.
    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> Vec<SymplecticVector> {
        self.basis.rows().iter().map(SymplecticVector::from_flat).collect()
    }

    pub fn contains(&self, v: &SymplecticVector) -> bool {
        v.n() == self.n && self.basis.contains(&v.to_flat())
    }

    /// Whether `v` is orthogonal to every basis vector, i.e. lies in the dual.
    pub fn dual_contains(&self, v: &SymplecticVector) -> bool {
        self.basis().iter().all(|b| v.product_unchecked(b) == 0)
    }

    pub fn contains_code(&self, other: &AdditiveSymplecticCode) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    fn dual_basis(&self) -> &Echelon {
        self.dual.get_or_init(|| {
            let rows: Vec<FpVec> = self.basis().iter().map(SymplecticVector::product_row).collect();
            let constraints = Echelon::new(self.p, 2 * self.n, rows);
            Echelon::new(self.p, 2 * self.n, constraints.nullspace())
        })
    }

    /// `{v : ⟨v, c⟩ = 0 for all c}`.
    pub fn dual(&self) -> AdditiveSymplecticCode {
        let d = Self::from_echelon(self.p, self.n, self.dual_basis().clone());
        let _ = d.dual.set(self.basis.clone());
        d
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.first_anticommuting_pair().is_none()
    }

    fn first_anticommuting_pair(&self) -> Option<(usize, usize)> {
        let b = self.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if b[i].product_unchecked(&b[j]) != 0 {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Matrix rows of 2n integers, x part then z part.
    pub fn matrix(&self) -> Vec<Vec<u32>> {
        self.basis().iter().map(SymplecticVector::to_digits).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InnerDistanceStatus {
    Unverified,
    Verified,
}

/// A stabilizer code: self-orthogonal stabilizer `S` and normalizer `N(S) = S^⊥`.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilizerCode {
    stabilizer: AdditiveSymplecticCode,
    normalizer: AdditiveSymplecticCode,
    /// Pure distance `d_min(N(S))` once verified, or a claimed value.
    distance: Option<(u32, InnerDistanceStatus)>,
}

impl StabilizerCode {
    /// Builds the code from pairwise commuting generators on `n` qubits.
    pub fn new(p: u32, n: usize, generators: &[SymplecticVector]) -> Result<Self> {
        for (i, a) in generators.iter().enumerate() {
            if a.n() != n || a.p() != p {
                return Err(Error::Dimension { expected: n, got: a.n() });
            }
            for (j, b) in generators.iter().enumerate().skip(i) {
                if a.product_unchecked(b) != 0 {
                    return Err(Error::NotSelfOrthogonal(i, j));
                }
            }
        }
        let stabilizer = AdditiveSymplecticCode::new(p, n, generators)?;
        let normalizer = stabilizer.dual();
        Ok(StabilizerCode { stabilizer, normalizer, distance: None })
    }

    pub fn from_paulis(generators: &[&str]) -> Result<Self> {
        let gens: Vec<SymplecticVector> =
            generators.iter().map(|s| SymplecticVector::from_pauli_str(s)).collect::<Result<_>>()?;
        let n = gens
            .first()
            .map(SymplecticVector::n)
            .ok_or_else(|| Error::InvalidCode("cannot infer the length from an empty generator list".into()))?;
        Self::new(2, n, &gens)
    }

    /// The whole space `[[n, n, 1]]`.
    pub fn full(p: u32, n: usize) -> Self {
        let mut c = Self::new(p, n, &[]).expect("empty set is self-orthogonal");
        c.distance = Some((1, InnerDistanceStatus::Verified));
        c
    }

    pub fn from_stabilizer(stabilizer: AdditiveSymplecticCode) -> Result<Self> {
        if !stabilizer.is_self_orthogonal() {
            let (i, j) = stabilizer.first_anticommuting_pair().unwrap();
            return Err(Error::NotSelfOrthogonal(i, j));
        }
        let normalizer = stabilizer.dual();
        Ok(StabilizerCode { stabilizer, normalizer, distance: None })
    }

    pub fn n(&self) -> usize {
        self.stabilizer.n()
    }

    pub fn p(&self) -> u32 {
        self.stabilizer.p()
    }

    /// Number of logical qudits.
    pub fn k(&self) -> usize {
        self.n() - self.stabilizer.dim()
    }

    pub fn stabilizer(&self) -> &AdditiveSymplecticCode {
        &self.stabilizer
    }

    pub fn normalizer(&self) -> &AdditiveSymplecticCode {
        &self.normalizer
    }

    pub fn distance(&self) -> Option<(u32, InnerDistanceStatus)> {
        self.distance
    }

    pub fn set_distance(&mut self, d: u32, status: InnerDistanceStatus) {
        self.distance = Some((d, status));
    }

    pub fn generators(&self) -> Vec<SymplecticVector> {
        self.stabilizer.basis()
    }

    /// `[[n,k,d]]` with `?` for an unknown distance.
    pub fn params(&self) -> String {
        let d = self.distance.map_or("?".into(), |(d, _)| d.to_string());
        format!("[[{},{},{}]]", self.n(), self.k(), d)
    }
}
