//! Dense row reduction over GF(q).

use super::{Elem, FiniteField};

/// Reduces `rows` in place to reduced row echelon form, drops zero rows, and
/// returns the pivot column of each remaining row.
pub fn rref(f: &FiniteField, rows: &mut Vec<Vec<Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, found);
        let inv = f.inv(rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let c = f.neg(row[col]);
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(c, y));
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: &FiniteField, rows: &[Vec<Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// Basis of `{x : rows · xᵀ = 0}` for a matrix with `ncols` columns.
pub fn nullspace(f: &FiniteField, rows: &[Vec<Elem>], ncols: usize) -> Vec<Vec<Elem>> {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; ncols];
            v[fc] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// Some `x` with `rows · xᵀ = rhs`, or `None` if the system is inconsistent.
pub fn solve(f: &FiniteField, rows: &[Vec<Elem>], rhs: &[Elem], ncols: usize) -> Option<Vec<Elem>> {
    let mut aug: Vec<Vec<Elem>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut r = r.clone();
            r.push(b);
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![0; ncols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[ncols];
    }
    Some(x)
}

/// `rows · vᵀ`.
pub fn mat_vec(f: &FiniteField, rows: &[Vec<Elem>], v: &[Elem]) -> Vec<Elem> {
    rows.iter().map(|r| r.iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))).collect()
}

/// `u · M` for a row vector `u` and matrix `M`.
pub fn vec_mat(f: &FiniteField, u: &[Elem], rows: &[Vec<Elem>]) -> Vec<Elem> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut out = vec![0; ncols];
    for (&c, row) in u.iter().zip(rows) {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(row) {
            *o = f.add(*o, f.mul(c, x));
        }
    }
    out
}
