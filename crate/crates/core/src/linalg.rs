//! Small dense linear-algebra kernels shared by the feature transforms and
//! the network layers. Everything works on row-major `&[f64]` slices.

/// `out += a * b` for row-major `a` (m×k), `b` (k×n), `out` (m×n).
///
/// i-k-j loop order keeps the inner loop contiguous over `b` and `out`, which
/// vectorizes without changing the accumulation order of any single output
/// element (k ascending), so results are reproducible run to run.
pub fn matmul_acc(a: &[f64], b: &[f64], out: &mut [f64], m: usize, k: usize, n: usize) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(out.len(), m * n);
    for i in 0..m {
        let a_row = &a[i * k..(i + 1) * k];
        let out_row = &mut out[i * n..(i + 1) * n];
        for (kk, &aik) in a_row.iter().enumerate() {
            if aik == 0.0 {
                continue;
            }
            let b_row = &b[kk * n..(kk + 1) * n];
            for (o, &bv) in out_row.iter_mut().zip(b_row.iter()) {
                *o += aik * bv;
            }
        }
    }
}

/// `out = a * b`, allocating the result.
pub fn matmul(a: &[f64], b: &[f64], m: usize, k: usize, n: usize) -> Vec<f64> {
    let mut out = vec![0.0; m * n];
    matmul_acc(a, b, &mut out, m, k, n);
    out
}

/// `out += a^T * b` for `a` (k×m), `b` (k×n), `out` (m×n).
pub fn matmul_at_b_acc(a: &[f64], b: &[f64], out: &mut [f64], m: usize, k: usize, n: usize) {
    debug_assert_eq!(a.len(), k * m);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(out.len(), m * n);
    for kk in 0..k {
        let a_row = &a[kk * m..(kk + 1) * m];
        let b_row = &b[kk * n..(kk + 1) * n];
        for (i, &aki) in a_row.iter().enumerate() {
            if aki == 0.0 {
                continue;
            }
            let out_row = &mut out[i * n..(i + 1) * n];
            for (o, &bv) in out_row.iter_mut().zip(b_row.iter()) {
                *o += aki * bv;
            }
        }
    }
}

/// `out += a * b^T` for `a` (m×k), `b` (n×k), `out` (m×n).
pub fn matmul_a_bt_acc(a: &[f64], b: &[f64], out: &mut [f64], m: usize, k: usize, n: usize) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), n * k);
    debug_assert_eq!(out.len(), m * n);
    for i in 0..m {
        let a_row = &a[i * k..(i + 1) * k];
        for j in 0..n {
            let b_row = &b[j * k..(j + 1) * k];
            out[i * n + j] += dot(a_row, b_row);
        }
    }
}

/// Dot product with four independent accumulators; the split pattern is fixed
/// so results do not depend on vector width.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = [0.0f64; 4];
    let chunks = a.len() / 4;
    for c in 0..chunks {
        let i = c * 4;
        acc[0] += a[i] * b[i];
        acc[1] += a[i + 1] * b[i + 1];
        acc[2] += a[i + 2] * b[i + 2];
        acc[3] += a[i + 3] * b[i + 3];
    }
    let mut tail = 0.0;
    for i in chunks * 4..a.len() {
        tail += a[i] * b[i];
    }
    (acc[0] + acc[1]) + (acc[2] + acc[3]) + tail
}

/// Transpose a row-major m×n matrix.
pub fn transpose(a: &[f64], m: usize, n: usize) -> Vec<f64> {
    let mut out = vec![0.0; m * n];
    for i in 0..m {
        for j in 0..n {
            out[j * m + i] = a[i * n + j];
        }
    }
    out
}

/// Eigendecomposition of a symmetric matrix by the cyclic Jacobi method.
///
/// Returns eigenvalues in non-increasing order and the matching eigenvectors
/// as rows of a (n×n) row-major matrix. Deterministic: sweep order is fixed
/// and rotations are applied until all off-diagonal mass is below `1e-14`
/// relative to the largest diagonal entry (or 60 sweeps, whichever first).
pub fn jacobi_eigh(sym: &[f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    debug_assert_eq!(sym.len(), n * n);
    let mut a = sym.to_vec();
    // v starts as the identity; rows accumulate the rotations.
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    if n > 1 {
        let scale = a
            .iter()
            .fold(0.0f64, |m, &x| m.max(x.abs()))
            .max(f64::MIN_POSITIVE);
        let tol = 1e-14 * scale;
        for _sweep in 0..60 {
            let mut off = 0.0f64;
            for p in 0..n {
                for q in (p + 1)..n {
                    off = off.max(a[p * n + q].abs());
                }
            }
            if off <= tol {
                break;
            }
            for p in 0..n - 1 {
                for q in (p + 1)..n {
                    let apq = a[p * n + q];
                    if apq.abs() <= tol * 1e-3 {
                        continue;
                    }
                    let app = a[p * n + p];
                    let aqq = a[q * n + q];
                    let theta = (aqq - app) / (2.0 * apq);
                    let t = if theta >= 0.0 {
                        1.0 / (theta + (1.0 + theta * theta).sqrt())
                    } else {
                        1.0 / (theta - (1.0 + theta * theta).sqrt())
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    // A <- J^T A J restricted to rows/cols p and q.
                    for i in 0..n {
                        let aip = a[i * n + p];
                        let aiq = a[i * n + q];
                        a[i * n + p] = c * aip - s * aiq;
                        a[i * n + q] = s * aip + c * aiq;
                    }
                    for j in 0..n {
                        let apj = a[p * n + j];
                        let aqj = a[q * n + j];
                        a[p * n + j] = c * apj - s * aqj;
                        a[q * n + j] = s * apj + c * aqj;
                    }
                    for j in 0..n {
                        let vpj = v[p * n + j];
                        let vqj = v[q * n + j];
                        v[p * n + j] = c * vpj - s * vqj;
                        v[q * n + j] = s * vpj + c * vqj;
                    }
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[j * n + j]
            .partial_cmp(&a[i * n + i])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(i.cmp(&j))
    });
    let mut values = Vec::with_capacity(n);
    let mut vectors = vec![0.0; n * n];
    for (row, &idx) in order.iter().enumerate() {
        values.push(a[idx * n + idx]);
        vectors[row * n..(row + 1) * n].copy_from_slice(&v[idx * n..(idx + 1) * n]);
    }
    (values, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_small() {
        // [1 2; 3 4] * [5 6; 7 8] = [19 22; 43 50]
        let a = [1.0, 2.0, 3.0, 4.0];
        let b = [5.0, 6.0, 7.0, 8.0];
        assert_eq!(matmul(&a, &b, 2, 2, 2), vec![19.0, 22.0, 43.0, 50.0]);
    }

    #[test]
    fn transpose_products_match_plain_matmul() {
        let a = [1.0, -2.0, 0.5, 3.0, 4.0, -1.0]; // 2x3
        let b = [2.0, 1.0, 0.0, -1.0, 1.0, 5.0]; // 3x2
        let at = transpose(&a, 2, 3);
        let bt = transpose(&b, 3, 2);
        let direct = matmul(&a, &b, 2, 3, 2);
        let mut via_at = vec![0.0; 4];
        matmul_at_b_acc(&at, &b, &mut via_at, 2, 3, 2);
        let mut via_bt = vec![0.0; 4];
        matmul_a_bt_acc(&a, &bt, &mut via_bt, 2, 3, 2);
        assert_eq!(direct, via_at);
        assert_eq!(direct, via_bt);
    }

    #[test]
    fn jacobi_recovers_known_spectrum() {
        // [[2,1],[1,2]] has eigenvalues 3 and 1 with vectors (1,1)/√2, (1,-1)/√2.
        let (vals, vecs) = jacobi_eigh(&[2.0, 1.0, 1.0, 2.0], 2);
        assert!((vals[0] - 3.0).abs() < 1e-12);
        assert!((vals[1] - 1.0).abs() < 1e-12);
        let inv = 1.0 / 2.0f64.sqrt();
        assert!((vecs[0].abs() - inv).abs() < 1e-12);
        assert!((vecs[1].abs() - inv).abs() < 1e-12);
    }

    #[test]
    fn jacobi_reconstructs_matrix() {
        // Random-ish symmetric 5x5; check A = V^T diag(w) V.
        let n = 5;
        let mut sym = vec![0.0; n * n];
        let mut state = 0x12345678u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        for i in 0..n {
            for j in i..n {
                let x = next();
                sym[i * n + j] = x;
                sym[j * n + i] = x;
            }
        }
        let (vals, vecs) = jacobi_eigh(&sym, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0.0;
                for r in 0..n {
                    acc += vecs[r * n + i] * vals[r] * vecs[r * n + j];
                }
                assert!((acc - sym[i * n + j]).abs() < 1e-10, "entry ({i},{j})");
            }
        }
    }
}
