//! Gaussian elimination over `F_p`.

use super::poly::inv_mod_p;

/// Basis of the right kernel `{v : M v = 0}` of a `rows x cols` matrix over
/// `F_p`, given row-major. The basis is returned in reduced form: vector `i`
/// has a 1 in the `i`-th free column and zeros in the other free columns.
pub fn kernel_basis(matrix: &[Vec<u32>], cols: usize, p: u32) -> Vec<Vec<u32>> {
    let mut m: Vec<Vec<u32>> = matrix.to_vec();
    let p64 = p as u64;
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, pr);
        let inv = inv_mod_p(m[row][col], p) as u64;
        for c in m[row].iter_mut() {
            *c = (*c as u64 * inv % p64) as u32;
        }
        for r in 0..m.len() {
            if r != row && m[r][col] != 0 {
                let factor = m[r][col] as u64;
                for c in 0..cols {
                    let t = factor * m[row][c] as u64 % p64;
                    m[r][c] = ((m[r][c] as u64 + p64 - t) % p64) as u32;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u32; cols];
            v[fc] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = ((p64 - m[r][fc] as u64) % p64) as u32;
            }
            v
        })
        .collect()
}

/// Rank of a matrix over `F_p`.
pub fn rank(matrix: &[Vec<u32>], cols: usize, p: u32) -> usize {
    cols - kernel_basis(matrix, cols, p).len()
}
