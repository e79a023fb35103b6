//! Exact sparse linear solving.
//!
//! Used for convolution inverses (antipodes of constructed Hopf algebras)
//! and R-matrix inverses, where the systems are large but very sparse.
//! Connected components of the unknown/equation incidence graph are solved
//! independently, which keeps group-algebra doubles cheap.

use super::scalar::{Field, Scalar};
use super::KernelError;

/// One equation: sum of coeff * unknown = rhs.
#[derive(Clone, Debug)]
pub struct SparseRow {
    pub coeffs: Vec<(usize, Scalar)>,
    pub rhs: Scalar,
}

/// Solves a square-ish sparse system for `n` unknowns. Requires the
/// solution to exist and be unique; errors with `Singular` otherwise.
pub fn solve_sparse(field: Field, n: usize, rows: &[SparseRow]) -> Result<Vec<Scalar>, KernelError> {
    // union-find over unknowns to split into independent blocks
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for row in rows {
        let mut it = row.coeffs.iter().filter(|(_, c)| !c.is_zero());
        if let Some((first, _)) = it.next() {
            let r0 = find(&mut parent, *first);
            for (u, _) in it {
                let r = find(&mut parent, *u);
                parent[r] = r0;
            }
        } else if !row.rhs.is_zero() {
            return Err(KernelError::Singular);
        }
    }

    // group unknowns and equations per block
    let mut block_of = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        let r = find(&mut parent, u);
        if block_of[r] == usize::MAX {
            block_of[r] = blocks.len();
            blocks.push(Vec::new());
        }
        block_of[u] = block_of[r];
        blocks[block_of[r]].push(u);
    }
    let mut rows_of: Vec<Vec<&SparseRow>> = vec![Vec::new(); blocks.len()];
    for row in rows {
        if let Some((u, _)) = row.coeffs.iter().find(|(_, c)| !c.is_zero()) {
            rows_of[block_of[*u]].push(row);
        }
    }

    let mut solution = vec![field.zero(); n];
    for (b, unknowns) in blocks.iter().enumerate() {
        let local: Vec<Scalar> = solve_dense_block(field, unknowns, &rows_of[b])?;
        for (k, &u) in unknowns.iter().enumerate() {
            solution[u] = local[k].clone();
        }
    }
    Ok(solution)
}

#[allow(clippy::needless_range_loop)]
fn solve_dense_block(
    field: Field,
    unknowns: &[usize],
    rows: &[&SparseRow],
) -> Result<Vec<Scalar>, KernelError> {
    let m = unknowns.len();
    let mut col_of = std::collections::HashMap::new();
    for (k, &u) in unknowns.iter().enumerate() {
        col_of.insert(u, k);
    }
    // dense augmented matrix, rows x (m + 1)
    let mut a: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|row| {
            let mut r = vec![field.zero(); m + 1];
            for (u, c) in &row.coeffs {
                if let Some(&k) = col_of.get(u) {
                    r[k] += c;
                }
            }
            r[m] = row.rhs.clone();
            r
        })
        .collect();

    let nrows = a.len();
    let mut pivot_row_of_col = vec![usize::MAX; m];
    let mut next_row = 0usize;
    for col in 0..m {
        let Some(p) = (next_row..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(next_row, p);
        let pinv = a[next_row][col].inv()?;
        for k in col..=m {
            a[next_row][k] = &a[next_row][k] * &pinv;
        }
        for r in 0..nrows {
            if r != next_row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in col..=m {
                    let d = &a[next_row][k] * &f;
                    a[r][k] = &a[r][k] - &d;
                }
            }
        }
        pivot_row_of_col[col] = next_row;
        next_row += 1;
    }
    // inconsistent or underdetermined -> singular
    for r in next_row..nrows {
        if !a[r][m].is_zero() {
            return Err(KernelError::Singular);
        }
    }
    if pivot_row_of_col.contains(&usize::MAX) {
        return Err(KernelError::Singular);
    }
    Ok((0..m).map(|col| a[pivot_row_of_col[col]][m].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_block_diagonal_system() {
        let f = Field::Q;
        // x0 + x1 = 3, x0 - x1 = 1  (block {0,1});  2*x2 = 5 (block {2})
        let rows = vec![
            SparseRow {
                coeffs: vec![(0, f.one()), (1, f.one())],
                rhs: f.from_i64(3),
            },
            SparseRow {
                coeffs: vec![(0, f.one()), (1, f.from_i64(-1))],
                rhs: f.one(),
            },
            SparseRow {
                coeffs: vec![(2, f.from_i64(2))],
                rhs: f.from_i64(5),
            },
        ];
        let sol = solve_sparse(f, 3, &rows).unwrap();
        assert_eq!(sol[0], f.from_i64(2));
        assert_eq!(sol[1], f.one());
        assert_eq!(sol[2], f.parse("5/2").unwrap());
    }

    #[test]
    fn detects_inconsistency() {
        let f = Field::Q;
        let rows = vec![
            SparseRow {
                coeffs: vec![(0, f.one())],
                rhs: f.one(),
            },
            SparseRow {
                coeffs: vec![(0, f.one())],
                rhs: f.from_i64(2),
            },
        ];
        assert!(solve_sparse(f, 1, &rows).is_err());
    }

    #[test]
    fn detects_underdetermined() {
        let f = Field::Q;
        let rows = vec![SparseRow {
            coeffs: vec![(0, f.one()), (1, f.one())],
            rhs: f.one(),
        }];
        assert!(solve_sparse(f, 2, &rows).is_err());
    }
}
