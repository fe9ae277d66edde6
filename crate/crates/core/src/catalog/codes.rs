//! Generator sets of the cataloged stabilizer codes.

use crate::error::{Error, Result};
use crate::galois::{Elem, FiniteField};
use crate::symplectic::{StabilizerCode, SymplecticVector};

/// GF(4) with `ω = 2`, `ω̄ = ω² = 3`.
fn gf4() -> FiniteField {
    FiniteField::new(2, 2).expect("GF(4) exists")
}

/// Additive GF(4) → Pauli map: `ω ↦ X`, `ω̄ ↦ Z`, `1 ↦ Y`.
fn gf4_to_symplectic(row: &[Elem]) -> SymplecticVector {
    let mut v = SymplecticVector::zeros(2, row.len());
    for (i, &e) in row.iter().enumerate() {
        let (a, b) = match e {
            0 => (0, 0),
            1 => (1, 1),
            2 => (1, 0),
            _ => (0, 1),
        };
        v.set(i, a, b);
    }
    v
}

/// Stabilizer spanned over F_2 by `ω·h` and `ω̄·h` for every row `h` of a
/// Hermitian self-orthogonal GF(4)-linear code.
fn from_gf4_rows(rows: &[Vec<Elem>]) -> Result<StabilizerCode> {
    let f = gf4();
    let n = rows.first().map_or(0, Vec::len);
    let mut gens = Vec::with_capacity(2 * rows.len());
    for row in rows {
        for scalar in [2, 3] {
            let scaled: Vec<Elem> = row.iter().map(|&e| f.mul(scalar, e)).collect();
            gens.push(gf4_to_symplectic(&scaled));
        }
    }
    StabilizerCode::new(2, n, &gens)
}

pub(crate) fn five_qubit() -> Result<StabilizerCode> {
    StabilizerCode::from_paulis(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])
}

/// CSS code of the binary Hamming code.
pub(crate) fn steane() -> Result<StabilizerCode> {
    let h = [[1, 0, 1, 0, 1, 0, 1], [0, 1, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]];
    let zero = [0u32; 7];
    let mut gens = Vec::new();
    for row in &h {
        gens.push(SymplecticVector::from_digits(2, row, &zero)?);
        gens.push(SymplecticVector::from_digits(2, &zero, row)?);
    }
    StabilizerCode::new(2, 7, &gens)
}

/// The hexacode as a `[[6,0,4]]` stabilizer state.
pub(crate) fn hexacode() -> Result<StabilizerCode> {
    from_gf4_rows(&[vec![1, 0, 0, 1, 2, 2], vec![0, 1, 0, 2, 1, 2], vec![0, 0, 1, 2, 2, 1]])
}

/// `[[n, n-2, 2]]` stabilized by `X^{⊗n}` and `Z^{⊗n}`, `n` even.
pub(crate) fn iceberg(n: usize) -> Result<StabilizerCode> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidCode(format!("iceberg code needs an even length, got {n}")));
    }
    let ones = vec![1u32; n];
    let zero = vec![0u32; n];
    let gens = [SymplecticVector::from_digits(2, &ones, &zero)?, SymplecticVector::from_digits(2, &zero, &ones)?];
    StabilizerCode::new(2, n, &gens)
}

pub(crate) fn eight_3_3() -> Result<StabilizerCode> {
    StabilizerCode::from_paulis(&["XXXXXXXX", "ZZZZZZZZ", "IXIXYZYZ", "IXZYIXZY", "IYXZXZIY"])
}

/// Largest supported `m` for [`qhamming`].
pub const QHAMMING_MAX: u32 = 6;

/// Quantum Hamming code `[[(4^m-1)/3, n-2m, 3]]`: the stabilizer is the
/// GF(4) simplex code whose check matrix has one column per projective point.
pub(crate) fn qhamming(m: u32) -> Result<StabilizerCode> {
    if !(2..=QHAMMING_MAX).contains(&m) {
        return Err(Error::InvalidCode(format!("qhamming needs 2 ≤ m ≤ {QHAMMING_MAX}, got {m}")));
    }
    let m = m as usize;
    let mut columns: Vec<Vec<Elem>> = Vec::new();
    let mut digits = vec![0u32; m];
    // Points with first nonzero entry 1, in lexicographic order.
    loop {
        if digits.iter().find(|&&d| d != 0) == Some(&1) {
            columns.push(digits.clone());
        }
        if !increment_msb_first(&mut digits, 4) {
            break;
        }
    }
    let rows: Vec<Vec<Elem>> = (0..m).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
    from_gf4_rows(&rows)
}

/// Base-`q` counter with the last digit fastest.
fn increment_msb_first(digits: &mut [u32], q: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < q {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts() {
        assert_eq!(hexacode().unwrap().k(), 0);
        assert_eq!(steane().unwrap().k(), 1);
        assert_eq!(five_qubit().unwrap().k(), 1);
        assert_eq!(iceberg(6).unwrap().k(), 4);
        assert_eq!(eight_3_3().unwrap().k(), 3);
        for (m, n) in [(2, 5), (3, 21), (4, 85)] {
            let c = qhamming(m).unwrap();
            assert_eq!((c.n(), c.k()), (n, n - 2 * m as usize));
        }
        assert!(qhamming(1).is_err() && qhamming(7).is_err());
        assert!(iceberg(5).is_err());
    }

    #[test]
    fn hexacode_contains_the_iceberg_stabilizer() {
        let hex = hexacode().unwrap();
        assert!(hex.stabilizer().contains_code(iceberg(6).unwrap().stabilizer()));
    }
}
