use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{common_denominator, Rational, RationalSubspace};
use crate::error::{check_dim, Result};

/// Row-style Hermite normal form of the lattice spanned by `generators`.
///
/// Returns a basis in echelon form: pivots strictly move right, each pivot is
/// positive and the entries above a pivot are reduced into `[0, pivot)`.
pub fn hermite_basis(generators: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(width) = generators.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut rows: Vec<Vec<BigInt>> = generators
        .iter()
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        // Euclid on column c among rows r.. until a single nonzero entry remains.
        loop {
            let nonzero: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let best = *nonzero
                .iter()
                .min_by(|&&a, &&b| rows[a][c].abs().cmp(&rows[b][c].abs()))
                .expect("nonempty");
            rows.swap(r, best);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < rows.len() && !rows[r][c].is_zero() {
            if rows[r][c].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    rows.truncate(r);
    // Reduce entries above each pivot.
    for (k, &c) in pivots.iter().enumerate() {
        let pivot_row = rows[k].clone();
        for row in rows.iter_mut().take(k) {
            let q = row[c].div_floor(&pivot_row[c]);
            if !q.is_zero() {
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
            }
        }
    }
    rows
}

/// Whether `target` is an integer combination of the rows of `hnf`, which must
/// be the output of [`hermite_basis`].
pub fn lattice_contains(hnf: &[Vec<BigInt>], target: &[BigInt]) -> bool {
    let mut t = target.to_vec();
    for row in hnf {
        let c = row.iter().position(|x| !x.is_zero()).expect("hnf rows are nonzero");
        if t[..c].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (q, rem) = t[c].div_rem(&row[c]);
        if !rem.is_zero() {
            return false;
        }
        for (x, p) in t.iter_mut().zip(row) {
            *x -= &q * p;
        }
    }
    t.iter().all(Zero::is_zero)
}

/// Decides whether `q ∈ U + ℤⁿ`, i.e. whether some integer vector `m` has
/// `q − m ∈ U`.
///
/// With `E` an integral equation matrix for `U`, the condition reads
/// `E q ∈ E ℤⁿ`, which is a lattice membership question settled by one
/// Hermite normal form of the columns of `E`.
pub fn coset_in_subspace_mod_lattice(q: &[Rational], u: &RationalSubspace) -> Result<bool> {
    let n = u.ambient_dim();
    check_dim(n, q.len())?;
    if u.is_full() {
        return Ok(true);
    }
    let equations: Vec<Vec<BigInt>> = u
        .equations()
        .into_iter()
        .map(|e| {
            let d = common_denominator(&e);
            e.iter()
                .map(|x| (x * Rational::from_integer(d.clone())).to_integer())
                .collect()
        })
        .collect();
    let mut target = Vec::with_capacity(equations.len());
    for e in &equations {
        let v: Rational = e
            .iter()
            .zip(q)
            .map(|(a, b)| Rational::from_integer(a.clone()) * b)
            .sum();
        if !v.is_integer() {
            return Ok(false);
        }
        target.push(v.to_integer());
    }
    let generators: Vec<Vec<BigInt>> = (0..n)
        .map(|k| equations.iter().map(|e| e[k].clone()).collect())
        .collect();
    Ok(lattice_contains(&hermite_basis(&generators), &target))
}
