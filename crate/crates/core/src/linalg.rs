//! Dense exact linear algebra over a coefficient field.

use crate::scalar::Coefficient;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Coefficient>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in 0..ncols {
                    let sub = factor.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{v : A v = 0}`, one vector per free column.
pub fn kernel<F: Coefficient>(a: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut rows = a.to_vec();
    let pivots = rref(&mut rows, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![F::zero(); ncols];
            v[free] = F::one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = -row[free].clone();
            }
            v
        })
        .collect()
}
