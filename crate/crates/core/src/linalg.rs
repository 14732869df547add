//! Dense linear algebra over `F_p`: row reduction, rank, kernels, inverses.

use crate::field::Fp;

pub type Mat = Vec<Vec<u32>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(a: &mut Mat, f: Fp) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(k) = (r..rows).find(|&k| a[k][c] != 0) else {
            continue;
        };
        a.swap(r, k);
        let inv = f.inv(a[r][c]);
        for x in a[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = a[r].clone();
        for (k, row) in a.iter_mut().enumerate() {
            if k == r || row[c] == 0 {
                continue;
            }
            let m = f.neg(row[c]);
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if y != 0 {
                    *x = f.add(*x, f.mul(m, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &Mat, f: Fp) -> usize {
    let mut b = a.clone();
    rref(&mut b, f).len()
}

/// Basis of `{x : a x = 0}` for an `rows × cols` matrix.
pub fn kernel(a: &Mat, cols: usize, f: Fp) -> Mat {
    let mut b = a.clone();
    let piv = rref(&mut b, f);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u32; cols];
            v[fc] = 1;
            for (r, &pc) in piv.iter().enumerate() {
                v[pc] = f.neg(b[r][fc]);
            }
            v
        })
        .collect()
}

pub fn invert(a: &Mat, f: Fp) -> Option<Mat> {
    let n = a.len();
    let mut aug: Mat = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| u32::from(i == j)));
            row
        })
        .collect();
    let piv = rref(&mut aug, f);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(a: &Mat, b: &Mat, f: Fp) -> Mat {
    let inner = b.len();
    let cols = b.first().map(|r| r.len()).unwrap_or(0);
    a.iter()
        .map(|r| {
            (0..cols)
                .map(|j| (0..inner).fold(0, |s, k| f.add(s, f.mul(r[k], b[k][j]))))
                .collect()
        })
        .collect()
}

/// Solves `a x = b` for one right-hand side, if solvable.
pub fn solve(a: &Mat, b: &[u32], f: Fp) -> Option<Vec<u32>> {
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Mat = a
        .iter()
        .zip(b)
        .map(|(r, &v)| {
            let mut row = r.clone();
            row.push(v);
            row
        })
        .collect();
    let piv = rref(&mut aug, f);
    if piv.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![0u32; cols];
    for (r, &c) in piv.iter().enumerate() {
        x[c] = aug[r][cols];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn kernel_and_inverse() {
        let f = Fp::new(101).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a: Mat = (0..4).map(|_| (0..6).map(|_| rng.gen_range(0..101)).collect()).collect();
            let k = kernel(&a, 6, f);
            assert_eq!(k.len() + rank(&a, f), 6);
            for v in &k {
                let col: Mat = v.iter().map(|&x| vec![x]).collect();
                assert!(mat_mul(&a, &col, f).iter().all(|r| r[0] == 0));
            }
            let sq: Mat = (0..4).map(|_| (0..4).map(|_| rng.gen_range(0..101)).collect()).collect();
            if let Some(inv) = invert(&sq, f) {
                let id = mat_mul(&sq, &inv, f);
                for (i, r) in id.iter().enumerate() {
                    for (j, &x) in r.iter().enumerate() {
                        assert_eq!(x, u32::from(i == j));
                    }
                }
            }
        }
    }
}
