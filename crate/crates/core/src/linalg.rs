//! Dense eigen-decomposition of small symmetric matrices over
//! multi-precision floats, used for the spectral reconstruction checks.

use rug::ops::Pow;
use rug::Float;

/// Cyclic Jacobi diagonalization of a symmetric matrix. Returns the
/// eigenvalues and the matching orthonormal eigenvectors (one per row),
/// sorted by descending eigenvalue.
pub fn eigen_symmetric(matrix: &[Vec<Float>], prec: u32) -> (Vec<Float>, Vec<Vec<Float>>) {
    let n = matrix.len();
    let mut a: Vec<Vec<Float>> = matrix
        .iter()
        .map(|row| row.iter().map(|x| Float::with_val(prec, x)).collect())
        .collect();
    let mut v: Vec<Vec<Float>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Float::with_val(prec, i64::from(i == j)))
                .collect()
        })
        .collect();
    let scale: Float = a
        .iter()
        .flatten()
        .fold(Float::with_val(prec, 0), |acc, x| acc + x.clone().abs());
    let stop = Float::with_val(prec, &scale + Float::with_val(prec, 1))
        * Float::with_val(prec, 2f64).pow(-(prec as i32) + 4);

    for _sweep in 0..200 {
        let mut off = Float::with_val(prec, 0);
        for p in 0..n {
            for q in p + 1..n {
                off += Float::with_val(prec, a[p][q].clone().abs());
            }
        }
        if off < stop {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].clone().abs() < Float::with_val(prec, &stop / 16u32) {
                    continue;
                }
                let diff = Float::with_val(prec, &a[q][q] - &a[p][p]);
                let theta = diff / Float::with_val(prec, 2 * a[p][q].clone());
                let t = {
                    let mag = Float::with_val(prec, theta.clone().abs())
                        + Float::with_val(prec, theta.clone().square() + 1u32).sqrt();
                    let t = Float::with_val(prec, 1) / mag;
                    if theta < 0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = Float::with_val(prec, 1)
                    / Float::with_val(prec, t.clone().square() + 1u32).sqrt();
                let s = Float::with_val(prec, &t * &c);
                for k in 0..n {
                    let akp = a[k][p].clone();
                    let akq = a[k][q].clone();
                    a[k][p] = Float::with_val(prec, &c * &akp) - Float::with_val(prec, &s * &akq);
                    a[k][q] = Float::with_val(prec, &s * &akp) + Float::with_val(prec, &c * &akq);
                }
                for k in 0..n {
                    let apk = a[p][k].clone();
                    let aqk = a[q][k].clone();
                    a[p][k] = Float::with_val(prec, &c * &apk) - Float::with_val(prec, &s * &aqk);
                    a[q][k] = Float::with_val(prec, &s * &apk) + Float::with_val(prec, &c * &aqk);
                }
                for k in 0..n {
                    let vkp = v[k][p].clone();
                    let vkq = v[k][q].clone();
                    v[k][p] = Float::with_val(prec, &c * &vkp) - Float::with_val(prec, &s * &vkq);
                    v[k][q] = Float::with_val(prec, &s * &vkp) + Float::with_val(prec, &c * &vkq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[j][j]
            .partial_cmp(&a[i][i])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let eigenvalues: Vec<Float> = order.iter().map(|&j| a[j][j].clone()).collect();
    let eigenvectors: Vec<Vec<Float>> = order
        .iter()
        .map(|&j| (0..n).map(|i| v[i][j].clone()).collect())
        .collect();
    (eigenvalues, eigenvectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_float(m: &[Vec<i64>], prec: u32) -> Vec<Vec<Float>> {
        m.iter()
            .map(|row| row.iter().map(|&x| Float::with_val(prec, x)).collect())
            .collect()
    }

    #[test]
    fn diagonalizes_a3_adjacency() {
        let prec = 128;
        let g = vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]];
        let (vals, vecs) = eigen_symmetric(&to_float(&g, prec), prec);
        let two = Float::with_val(prec, 2);
        let root2 = Float::with_val(prec, Float::with_val(prec, rug::float::Constant::Pi) / 4u32)
            .cos()
            * &two;
        let expect = [root2.clone(), Float::with_val(prec, 0), -root2];
        for (got, want) in vals.iter().zip(&expect) {
            let d = Float::with_val(prec, got - want).abs();
            assert!(d < 1e-30, "{got} vs {want}");
        }
        // residual of A = sum_j lambda_j v_j v_j^T
        for i in 0..3 {
            for k in 0..3 {
                let mut acc = Float::with_val(prec, 0);
                for j in 0..3 {
                    acc += Float::with_val(prec, &vecs[j][i] * &vecs[j][k]) * &vals[j];
                }
                let d = Float::with_val(prec, acc - g[i][k]).abs();
                assert!(d < 1e-30);
            }
        }
    }

    #[test]
    fn handles_degenerate_spectra() {
        let prec = 128;
        // D4 star graph: eigenvalue 0 has multiplicity two.
        let g = vec![
            vec![0, 1, 0, 0],
            vec![1, 0, 1, 1],
            vec![0, 1, 0, 0],
            vec![0, 1, 0, 0],
        ];
        let (vals, vecs) = eigen_symmetric(&to_float(&g, prec), prec);
        for i in 0..4 {
            for k in 0..4 {
                let mut acc = Float::with_val(prec, 0);
                for j in 0..4 {
                    acc += Float::with_val(prec, &vecs[j][i] * &vecs[j][k]) * &vals[j];
                }
                let d = Float::with_val(prec, acc - g[i][k]).abs();
                assert!(d < 1e-30);
            }
        }
        let mid = Float::with_val(prec, &vals[1] - &vals[2]).abs();
        assert!(mid < 1e-30, "double zero eigenvalue");
    }
}
