//! Global dimensions of the level-k fusion categories, computed two ways:
//! a closed formula built from the quantum superfactorial, and a brute-force
//! sum of squared quantum dimensions over the alcove. Also: zeta-style
//! higher sums, level-rank duality, classical limits, the modular S11
//! element, and spectral (Verlinde-type) reconstruction of the fusion
//! matrices.

use crate::error::Error;
use crate::lie::{self, Family, LieData};
use crate::linalg;
use crate::qnum::{self, QContext};
use crate::quiver::{self, FusionSequence};
use crate::scalar::{self, Scalar};
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Rational};

pub const DEFAULT_MAX_OBJECTS: u64 = 10_000_000;

/// A fusion category fixed by a simple Lie group and a positive level.
pub struct FusionCategory {
    pub lie: LieData,
    pub level: u32,
    pub ctx: QContext,
}

impl FusionCategory {
    pub fn new(family: Family, rank: usize, level: u32, prec: u32) -> Result<Self, Error> {
        if level == 0 {
            return Err(Error::BadInput("level must be positive".into()));
        }
        let lie = LieData::new(family, rank)?;
        let ctx = QContext::for_level(family, rank, level, prec);
        Ok(FusionCategory { lie, level, ctx })
    }

    /// All dominant integral weights of level at most k, lexicographically
    /// ordered (the zero weight first).
    pub fn alcove(&self, max_objects: u64) -> Result<Vec<Vec<u32>>, Error> {
        let mut out = Vec::new();
        let mut current = vec![0u32; self.lie.rank];
        let budget = Rational::from(self.level);
        enumerate_alcove(
            &self.lie.level_form,
            budget,
            0,
            &mut current,
            &mut out,
            max_objects,
        )?;
        Ok(out)
    }

    /// Product over positive roots of the q-number of <lambda+rho, alpha>.
    fn weyl_numerator(&self, labels: &[u32]) -> Scalar {
        let shifted: Vec<Rational> = labels.iter().map(|&x| Rational::from(x + 1)).collect();
        let mut acc = Scalar::one();
        for alpha in &self.lie.positive_roots {
            acc = acc.mul(&self.ctx.qnumber(&self.lie.weight_root(&shifted, alpha)));
        }
        acc
    }

    /// Quantum Weyl dimension of the simple object with the given Dynkin
    /// labels; exact (classical dimension) when the context is classical.
    pub fn quantum_dim(&self, labels: &[u32]) -> Result<Scalar, Error> {
        if labels.len() != self.lie.rank {
            return Err(Error::WeightLength {
                got: labels.len(),
                want: self.lie.rank,
            });
        }
        let lam: Vec<Rational> = labels.iter().map(|&x| Rational::from(x)).collect();
        let lvl = self.lie.weight_level(&lam);
        if lvl > self.level {
            return Err(Error::OutsideAlcove {
                level: lvl.numer().to_u32().unwrap_or(u32::MAX),
            });
        }
        let den = quiver::weyl_denominator_roots(&self.lie, &self.ctx);
        Ok(self.weyl_numerator(labels).div(&den))
    }

    /// Sum over the alcove of quantum_dim^(-s); s = -2 is the brute-force
    /// global dimension. Deterministic pairwise summation.
    pub fn zeta(&self, s: i32, max_objects: u64) -> Result<Float, Error> {
        let prec = self.ctx.prec;
        let alcove = self.alcove(max_objects)?;
        let den = quiver::weyl_denominator_roots(&self.lie, &self.ctx).to_float(prec);
        let terms: Vec<Float> = alcove
            .iter()
            .map(|labels| {
                let mu = self.weyl_numerator(labels).to_float(prec) / &den;
                mu.pow(-s)
            })
            .collect();
        Ok(scalar::pairwise_sum(terms, prec))
    }

    /// The oracle side of the main identity: sum of squared quantum
    /// dimensions over the alcove.
    pub fn brute_force_global_dim(&self, max_objects: u64) -> Result<Float, Error> {
        self.zeta(-2, max_objects)
    }

    /// Closed-form global dimension.
    pub fn global_dim(&self) -> Float {
        closed_global_dim(self.lie.family, self.lie.rank, self.level, self.ctx.prec)
            .expect("validated at construction")
    }

    /// Modular matrix element S11; the global dimension is 1/S11^2.
    pub fn s11(&self) -> Float {
        let prec = self.ctx.prec;
        let r = self.lie.rank as u32;
        let rn = r * self.lie.coxeter;
        let ell = self.ctx.ell.expect("quantum context");
        let pi = Float::with_val(prec, Constant::Pi);
        let sn = Float::with_val(prec, &pi / ell).sin();
        let dq = qnum::superfactorial(self.lie.family, self.lie.rank, &self.ctx).to_float(prec);
        let sqrt_delta = Float::with_val(prec, &self.lie.quad_det).sqrt();
        let num = Float::with_val(prec, 1u32 << 1).pow(rn / 2) * sqrt_delta * sn.pow(rn / 2) * dq;
        let den = Float::with_val(prec, ell).pow(r).sqrt();
        num / den
    }
}

fn enumerate_alcove(
    level_form: &[Rational],
    budget: Rational,
    pos: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
    max_objects: u64,
) -> Result<(), Error> {
    if pos == level_form.len() {
        if out.len() as u64 >= max_objects {
            return Err(Error::AlcoveOverflow { max: max_objects });
        }
        out.push(current.clone());
        return Ok(());
    }
    let mut lam = 0u32;
    loop {
        let used = Rational::from(&level_form[pos] * lam);
        if used > budget {
            break;
        }
        current[pos] = lam;
        enumerate_alcove(
            level_form,
            Rational::from(&budget - &used),
            pos + 1,
            current,
            out,
            max_objects,
        )?;
        lam += 1;
    }
    current[pos] = 0;
    Ok(())
}

/// (dual Coxeter + k)^r / (2^(rN) Delta sin^(rN)(pi/(k+dual Coxeter))
/// sfac_q^2), valid for any rank without building root systems.
pub fn closed_global_dim(
    family: Family,
    rank: usize,
    level: u32,
    prec: u32,
) -> Result<Float, Error> {
    if !family.valid_rank(rank) {
        return Err(Error::InvalidRank {
            family: family.label(),
            rank,
        });
    }
    let r = rank as u32;
    let n = lie::coxeter_number(family, rank);
    let nv = lie::dual_coxeter_number(family, rank);
    let ell = level + nv;
    let ctx = QContext::quantum(ell, prec);
    let sfac = qnum::superfactorial(family, rank, &ctx).to_float(prec);
    let pi = Float::with_val(prec, Constant::Pi);
    let sn = Float::with_val(prec, &pi / ell).sin();
    let delta = Float::with_val(prec, &lie::quad_det(family, rank));
    let num = Float::with_val(prec, ell).pow(r);
    let den = Float::with_val(prec, 2u32).pow(r * n) * delta * sn.pow(r * n) * sfac.square();
    Ok(num / den)
}

/// Level-rank duality for the A series: returns
/// (k |A_k(SU(n))|, n |A_n(SU(k))|, relative difference).
pub fn level_rank_check(n: u32, k: u32, prec: u32) -> Result<(Float, Float, Float), Error> {
    if n < 2 || k < 2 {
        return Err(Error::BadInput("level-rank check needs n, k >= 2".into()));
    }
    let lhs = closed_global_dim(Family::A, n as usize - 1, k, prec)? * k;
    let rhs = closed_global_dim(Family::A, k as usize - 1, n, prec)? * n;
    let resid = scalar::relative_residual(&lhs, &rhs);
    Ok((lhs, rhs, resid))
}

/// Large-level asymptote of the global dimension,
/// level^dim / ((2 pi)^(rN) Delta sfac^2), with the power evaluated at the
/// shifted level k + dual Coxeter number. The shift changes nothing
/// asymptotically but reduces the finite-level relative error from O(1/k)
/// to O(1/k^2). Returns (asymptote, ratio of exact value to it).
pub fn classical_limit(
    family: Family,
    rank: usize,
    level: u32,
    prec: u32,
) -> Result<(Float, Float), Error> {
    if !family.valid_rank(rank) {
        return Err(Error::InvalidRank {
            family: family.label(),
            rank,
        });
    }
    let r = rank as u32;
    let n = lie::coxeter_number(family, rank);
    let nv = lie::dual_coxeter_number(family, rank);
    let dim = lie::dimension(family, rank);
    let sfac = qnum::superfactorial(family, rank, &QContext::classical(prec))
        .as_exact()
        .expect("classical superfactorial is exact")
        .clone();
    let pi = Float::with_val(prec, Constant::Pi);
    let two_pi = Float::with_val(prec, 2 * pi);
    let delta = Float::with_val(prec, &lie::quad_det(family, rank));
    let asym = Float::with_val(prec, level + nv).pow(dim as u32)
        / (two_pi.pow(r * n) * delta * Float::with_val(prec, &sfac).square());
    let ratio = closed_global_dim(family, rank, level, prec)? / &asym;
    Ok((asym, ratio))
}

/// Large-rank asymptote of the A series at fixed level:
/// r^(k^2) / ((2 pi)^(k(k-1)) (1! 2! ... (k-1)!)^2), with the ratio to the
/// exact value.
pub fn a_series_rank_asymptote(rank: usize, level: u32, prec: u32) -> Result<(Float, Float), Error> {
    let k = level;
    let mut sfac = rug::Integer::from(1);
    for s in 1..k {
        sfac *= scalar::factorial(s);
    }
    let pi = Float::with_val(prec, Constant::Pi);
    let two_pi = Float::with_val(prec, 2 * pi);
    let asym = Float::with_val(prec, rank as u32).pow(k * k)
        / (two_pi.pow(k * (k - 1)) * Float::with_val(prec, &sfac).square());
    let ratio = closed_global_dim(Family::A, rank, level, prec)? / &asym;
    Ok((asym, ratio))
}

fn sine_ratio(prec: u32, num_mult: u32, den_mult: u32, exponent: u32, two_n: u32) -> Float {
    let pi = Float::with_val(prec, Constant::Pi);
    let num = Float::with_val(prec, &pi * (num_mult * exponent)) / two_n;
    let den = Float::with_val(prec, &pi * (den_mult * exponent)) / two_n;
    num.sin() / den.sin()
}

/// Reconstruct every fusion matrix F_n (n = 1..N-1) from the numerically
/// diagonalized adjacency matrix, with the eigenvalue function
/// sin(n e pi/N)/sin(e pi/N) over the exponents e; returns the maximum
/// entrywise residual, including the eigenvalue-vs-exponent match itself.
pub fn verlinde_residual(data: &LieData, prec: u32) -> Result<Float, Error> {
    if !data.family.simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    let r = data.rank;
    let n = data.coxeter;
    let g: Vec<Vec<Float>> = data
        .adjacency
        .iter()
        .map(|row| row.iter().map(|&x| Float::with_val(prec, x)).collect())
        .collect();
    let (vals, vecs) = linalg::eigen_symmetric(&g, prec);
    let pi = Float::with_val(prec, Constant::Pi);
    let mut worst = Float::with_val(prec, 0);
    for (j, &e) in data.exponents.iter().enumerate() {
        let want = Float::with_val(prec, Float::with_val(prec, &pi * e) / n).cos() * 2u32;
        let d = Float::with_val(prec, &vals[j] - &want).abs();
        if d > worst {
            worst = d;
        }
    }
    let fs = FusionSequence::new(data);
    for m in 1..n {
        let dn: Vec<Float> = data
            .exponents
            .iter()
            .map(|&e| sine_ratio(prec, 2 * m, 2, e, 2 * n))
            .collect();
        let target = fs.mat(m as i64);
        for i in 0..r {
            for k in 0..r {
                let mut acc = Float::with_val(prec, 0);
                for j in 0..r {
                    acc += Float::with_val(prec, &vecs[j][i] * &vecs[j][k]) * &dn[j];
                }
                let d = Float::with_val(prec, acc - target[i][k]).abs();
                if d > worst {
                    worst = d;
                }
            }
        }
    }
    Ok(worst)
}

/// The closed-form eigenvector matrix of the E6 adjacency matrix; rows are
/// ordered by ascending exponent, matching descending eigenvalue.
pub fn e6_psi(prec: u32) -> Vec<Vec<Float>> {
    let third = Float::with_val(prec, 1u32) / 3u32;
    let s3 = Float::with_val(prec, 3u32).sqrt();
    let phi_p = Float::with_val(prec, Float::with_val(prec, 3 + s3.clone()) * &third).sqrt();
    let phi_m = Float::with_val(prec, Float::with_val(prec, 3 - s3) * &third).sqrt();
    let s2 = Float::with_val(prec, 2u32).sqrt();
    let r2p = Float::with_val(prec, &s2 * &phi_p);
    let r2m = Float::with_val(prec, &s2 * &phi_m);
    let z = || Float::with_val(prec, 0);
    let rows: Vec<Vec<Float>> = vec![
        vec![
            phi_m.clone(),
            phi_p.clone(),
            r2p.clone(),
            phi_p.clone(),
            phi_m.clone(),
            r2m.clone(),
        ],
        vec![s2.clone(), s2.clone(), z(), -s2.clone(), -s2.clone(), z()],
        vec![
            phi_p.clone(),
            phi_m.clone(),
            -r2m.clone(),
            phi_m.clone(),
            phi_p.clone(),
            -r2p.clone(),
        ],
        vec![
            phi_p.clone(),
            -phi_m.clone(),
            -r2m.clone(),
            -phi_m.clone(),
            phi_p.clone(),
            r2p.clone(),
        ],
        vec![s2.clone(), -s2.clone(), z(), s2.clone(), -s2.clone(), z()],
        vec![
            phi_m.clone(),
            -phi_p.clone(),
            r2p.clone(),
            -phi_p.clone(),
            phi_m.clone(),
            -r2m.clone(),
        ],
    ];
    let norm = Float::with_val(prec, 2 * Float::with_val(prec, 2u32).sqrt());
    rows.into_iter()
        .map(|row| row.into_iter().map(|x| x / &norm).collect())
        .collect()
}

/// Residual of the explicit-eigenvector route for E6: orthogonality of psi
/// and the reconstruction of every F_n.
pub fn e6_psi_residual(prec: u32) -> Float {
    let data = LieData::new(Family::E6, 6).unwrap();
    let psi = e6_psi(prec);
    let n = data.coxeter;
    let fs = FusionSequence::new(&data);
    let mut worst = Float::with_val(prec, 0);
    for i in 0..6 {
        for k in 0..6 {
            let mut acc = Float::with_val(prec, 0);
            for row in &psi {
                acc += Float::with_val(prec, &row[i] * &row[k]);
            }
            let d = Float::with_val(prec, acc - i64::from(i == k)).abs();
            if d > worst {
                worst = d;
            }
        }
    }
    for m in 1..n {
        let dn: Vec<Float> = data
            .exponents
            .iter()
            .map(|&e| sine_ratio(prec, 2 * m, 2, e, 2 * n))
            .collect();
        let target = fs.mat(m as i64);
        for i in 0..6 {
            for k in 0..6 {
                let mut acc = Float::with_val(prec, 0);
                for (j, row) in psi.iter().enumerate() {
                    acc += Float::with_val(prec, &row[i] * &row[k]) * &dn[j];
                }
                let d = Float::with_val(prec, acc - target[i][k]).abs();
                if d > worst {
                    worst = d;
                }
            }
        }
    }
    worst
}

/// The trigonometric window product over the explicit E6 eigenvector
/// matrix: product over s = 1..N and rows a of the row sums of
/// psi^T diag(sin((2s+1) e pi/(2N))/sin(e pi/(2N))) psi.
/// Returns (product, squared superfactorial reference).
pub fn e6_trig_product(prec: u32) -> (Float, Float) {
    let data = LieData::new(Family::E6, 6).unwrap();
    let psi = e6_psi(prec);
    let n = data.coxeter;
    let mut product = Float::with_val(prec, 1);
    for s in 1..=n {
        let dn: Vec<Float> = data
            .exponents
            .iter()
            .map(|&e| sine_ratio(prec, 2 * s + 1, 1, e, 2 * n))
            .collect();
        for a in 0..6 {
            let mut row_sum = Float::with_val(prec, 0);
            for b in 0..6 {
                let mut acc = Float::with_val(prec, 0);
                for (j, row) in psi.iter().enumerate() {
                    acc += Float::with_val(prec, &row[a] * &row[b]) * &dn[j];
                }
                row_sum += acc;
            }
            product *= row_sum;
        }
    }
    let mut reference = rug::Integer::from(1);
    for &e in &data.exponents {
        reference *= scalar::factorial(e);
    }
    let reference = Float::with_val(prec, &reference).square();
    (product, reference)
}

/// Sine-kernel symmetric matrix of the A series at level k: entries
/// sqrt(2/l) sin(m n pi / l) with l = k + 2 and 1-based indices.
pub fn su2_smatrix(level: u32, prec: u32) -> Vec<Vec<Float>> {
    let ell = level + 2;
    let size = (level + 1) as usize;
    let pi = Float::with_val(prec, Constant::Pi);
    let scale = Float::with_val(prec, Float::with_val(prec, 2u32) / ell).sqrt();
    (1..=size)
        .map(|m| {
            (1..=size)
                .map(|nn| {
                    let angle = Float::with_val(prec, &pi * (m as u32 * nn as u32)) / ell;
                    Float::with_val(prec, angle.sin() * &scale)
                })
                .collect()
        })
        .collect()
}

/// Consistency of the SU(2) modular data: S is a symmetric involution,
/// S11 matches the closed form, and quantum dimensions are column ratios.
pub fn su2_smatrix_residual(level: u32, prec: u32) -> Result<Float, Error> {
    let cat = FusionCategory::new(Family::A, 1, level, prec)?;
    let s = su2_smatrix(level, prec);
    let size = s.len();
    let mut worst = Float::with_val(prec, 0);
    for i in 0..size {
        for j in 0..size {
            let mut acc = Float::with_val(prec, 0);
            for (m, row) in s.iter().enumerate() {
                acc += Float::with_val(prec, &s[i][m] * &row[j]);
            }
            let d = Float::with_val(prec, acc - i64::from(i == j)).abs();
            if d > worst {
                worst = d;
            }
            let asym = Float::with_val(prec, &s[i][j] - &s[j][i]).abs();
            if asym > worst {
                worst = asym;
            }
        }
    }
    let d = Float::with_val(prec, cat.s11() - &s[0][0]).abs();
    if d > worst {
        worst = d;
    }
    for n in 0..size {
        let mu = cat.quantum_dim(&[n as u32])?.to_float(prec);
        let ratio = Float::with_val(prec, &s[n][0] / &s[0][0]);
        let d = Float::with_val(prec, mu - ratio).abs();
        if d > worst {
            worst = d;
        }
    }
    Ok(worst)
}

/// SU(2) zeta conjecture value (k+2) 4^(-p/2) C(p, p/2) sin^(-p)(pi/(k+2))
/// for even positive p and level k > p/2 - 1.
pub fn su2_zeta_closed(p: u32, level: u32, prec: u32) -> Result<Float, Error> {
    if p == 0 || p % 2 != 0 {
        return Err(Error::BadInput("p must be even and positive".into()));
    }
    if level <= p / 2 && level + 1 <= p / 2 {
        return Err(Error::BadInput("level out of the conjectured range".into()));
    }
    let ell = level + 2;
    let pi = Float::with_val(prec, Constant::Pi);
    let sn = Float::with_val(prec, &pi / ell).sin();
    let binom = Float::with_val(prec, &scalar::binomial(p, p / 2));
    Ok(Float::with_val(prec, ell) * binom / (Float::with_val(prec, 4u32).pow(p / 2) * sn.pow(p)))
}
