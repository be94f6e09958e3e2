//! Independent numerical oracles shared by the integration tests.
//!
//! Nothing here reuses the library's closed-form arithmetic: eigenvalues
//! come from cyclic Jacobi rotations, determinants from brute cofactor
//! expansion. Agreement between these and the library is the point.

#![allow(dead_code)]

use dimer::SymmetricMatrix3;

/// Eigenvalues (ascending) and row eigenvectors of a symmetric 3×3 matrix
/// by cyclic Jacobi rotations. Purely iterative; no cubic formulas.
pub fn jacobi_eigen(m: &SymmetricMatrix3) -> ([f64; 3], [[f64; 3]; 3]) {
    let mut a = m.to_rows();
    let mut v = [[0.0; 3]; 3];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let scale = m.max_abs().max(1.0);
    for _sweep in 0..100 {
        let off = (a[0][1].powi(2) + a[0][2].powi(2) + a[1][2].powi(2)).sqrt();
        if off < 1e-15 * scale {
            break;
        }
        for (p, q) in [(0, 1), (0, 2), (1, 2)] {
            if a[p][q].abs() < 1e-300 {
                continue;
            }
            // classic Jacobi rotation annihilating a[p][q]
            let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;
            let mut rot = [[0.0; 3]; 3];
            for (i, row) in rot.iter_mut().enumerate() {
                row[i] = 1.0;
            }
            rot[p][p] = c;
            rot[q][q] = c;
            rot[p][q] = s;
            rot[q][p] = -s;
            a = mat3_mul(&mat3_mul(&transpose(&rot), &a), &rot);
            v = mat3_mul(&v, &rot);
        }
    }
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| a[i][i].partial_cmp(&a[j][j]).unwrap());
    let mut energies = [0.0; 3];
    let mut vecs = [[0.0; 3]; 3];
    for (k, &i) in order.iter().enumerate() {
        energies[k] = a[i][i];
        for n in 0..3 {
            vecs[k][n] = v[n][i];
        }
    }
    (energies, vecs)
}

/// Brute cofactor expansion of a 3×3 determinant from the raw rows.
pub fn brute_det(rows: &[[f64; 3]; 3]) -> f64 {
    rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
}

pub fn mat3_mul(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut c = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for (k, bk) in b.iter().enumerate() {
                c[i][j] += a[i][k] * bk[j];
            }
        }
    }
    c
}

pub fn transpose(a: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut t = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            t[i][j] = a[j][i];
        }
    }
    t
}

/// Log-spaced grid, endpoints inclusive.
pub fn log_grid(start: f64, stop: f64, n: usize) -> Vec<f64> {
    let (l0, l1) = (start.ln(), stop.ln());
    (0..n)
        .map(|i| (l0 + (l1 - l0) * i as f64 / (n as f64 - 1.0)).exp())
        .collect()
}
