//! Fusion matrices of SU(2) module-categories and the periodic quiver
//! tables they generate: essential tables of weights, the Weyl-vector
//! tables whose entries multiply to the Weyl denominator, and the
//! placement of roots on the periodic quiver.

use crate::error::Error;
use crate::lie::{self, Family, LieData, Root};
use crate::qnum::QContext;
use crate::scalar::Scalar;
use rug::{Integer, Rational};

/// The Chebyshev-like sequence F_1 = 1, F_2 = G, F_{n+1} = F_n G - F_{n-1},
/// periodic with period 2N. Matrices F_0 .. F_{2N-1} are stored; indexing is
/// modular.
pub struct FusionSequence {
    pub period: usize,
    mats: Vec<Vec<Vec<i64>>>,
}

impl FusionSequence {
    pub fn new(data: &LieData) -> FusionSequence {
        let r = data.rank;
        let period = 2 * data.coxeter as usize;
        let mut mats: Vec<Vec<Vec<i64>>> = Vec::with_capacity(period);
        mats.push(vec![vec![0; r]; r]);
        let mut id = vec![vec![0; r]; r];
        for i in 0..r {
            id[i][i] = 1;
        }
        mats.push(id);
        for n in 2..period {
            let prod = lie::mat_mul(&mats[n - 1], &data.adjacency);
            let mut next = prod;
            for i in 0..r {
                for j in 0..r {
                    next[i][j] -= mats[n - 2][i][j];
                }
            }
            mats.push(next);
        }
        FusionSequence { period, mats }
    }

    pub fn mat(&self, n: i64) -> &Vec<Vec<i64>> {
        &self.mats[n.rem_euclid(self.period as i64) as usize]
    }
}

/// A function on the checkerboard set of the periodic quiver: `rows` is N for
/// half tables (positive roots) and 2N for full ones. Row n, column b are
/// 1-based; unused positions hold `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverTable {
    pub rows: usize,
    pub rank: usize,
    pub entries: Vec<Vec<Option<Rational>>>,
}

impl QuiverTable {
    pub fn occupied(&self, n: usize, b: usize) -> bool {
        self.entries[n - 1][b - 1].is_some()
    }

    pub fn get(&self, n: usize, b: usize) -> Option<&Rational> {
        self.entries[n - 1][b - 1].as_ref()
    }

    pub fn product(&self) -> Rational {
        let mut acc = Rational::from(1);
        for row in &self.entries {
            for e in row.iter().flatten() {
                acc *= e;
            }
        }
        acc
    }

    pub fn values_sorted(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self
            .entries
            .iter()
            .flat_map(|row| row.iter().flatten().cloned())
            .collect();
        v.sort();
        v
    }

    pub fn value_count(&self) -> usize {
        self.entries
            .iter()
            .map(|row| row.iter().flatten().count())
            .sum()
    }
}

/// A position (n, b) carries a value when n and the bipartition class of b
/// have opposite parities; for path-shaped numberings this is the familiar
/// "n + b even" checkerboard.
fn position_occupied(data: &LieData, n: usize, b: usize) -> bool {
    (n % 2) as u8 != data.parity[b - 1] % 2
}

fn essential_with(
    data: &LieData,
    fs: &FusionSequence,
    weight: &[Rational],
    rows: usize,
) -> QuiverTable {
    let r = data.rank;
    let mut entries = vec![vec![None; r]; rows];
    for n in 1..=rows {
        for b in 1..=r {
            if !position_occupied(data, n, b) {
                continue;
            }
            let mut acc = Rational::from(0);
            for a in 0..r {
                let m = if data.parity[a] == 0 {
                    fs.mat(n as i64)
                } else {
                    fs.mat(n as i64 - 1)
                };
                acc += Rational::from(&weight[a] * m[a][b - 1]);
            }
            entries[n - 1][b - 1] = Some(acc);
        }
    }
    QuiverTable {
        rows,
        rank: r,
        entries,
    }
}

/// Table of scalar products between the weight and all (co)roots: entry
/// (n, b) is sum_a omega_a-coefficient times (F_n)_{ab} or (F_{n-1})_{ab}
/// according to the parity of a. Half tables stop at row N (positive roots).
pub fn essential_table(data: &LieData, weight: &[Rational], half: bool) -> Result<QuiverTable, Error> {
    if weight.len() != data.rank {
        return Err(Error::WeightLength {
            got: weight.len(),
            want: data.rank,
        });
    }
    let fs = FusionSequence::new(data);
    let rows = if half {
        data.coxeter as usize
    } else {
        2 * data.coxeter as usize
    };
    Ok(essential_with(data, &fs, weight, rows))
}

/// The root-side table: column b of the essential table scaled by delta_b,
/// so that entries are pairings with roots rather than coroots.
pub fn scaled_table(data: &LieData, weight: &[Rational], half: bool) -> Result<QuiverTable, Error> {
    let mut t = essential_table(data, weight, half)?;
    for row in t.entries.iter_mut() {
        for (b, e) in row.iter_mut().enumerate() {
            if let Some(v) = e {
                *v *= &data.scalings[b];
            }
        }
    }
    Ok(t)
}

/// Essential table of the Weyl vector (all coordinates one).
pub fn weyl_vector_table(data: &LieData, half: bool) -> QuiverTable {
    essential_table(data, &data.rho(), half).unwrap()
}

/// Scaled table of the Weyl vector; its entries multiply to the classical
/// Weyl denominator.
pub fn weyl_vector_scaled_table(data: &LieData, half: bool) -> QuiverTable {
    scaled_table(data, &data.rho(), half).unwrap()
}

/// Classical or quantum Weyl denominator as the product of the scaled
/// Weyl-vector half table.
pub fn weyl_denominator_quiver(data: &LieData, ctx: &QContext) -> Scalar {
    let t = weyl_vector_scaled_table(data, true);
    let mut acc = Scalar::one();
    for row in &t.entries {
        for e in row.iter().flatten() {
            acc = acc.mul(&ctx.qnumber(e));
        }
    }
    acc
}

/// The same denominator computed directly from the root system:
/// product over positive roots of the q-number of <rho, alpha>.
pub fn weyl_denominator_roots(data: &LieData, ctx: &QContext) -> Scalar {
    let rho = data.rho();
    let mut acc = Scalar::one();
    for alpha in &data.positive_roots {
        acc = acc.mul(&ctx.qnumber(&data.weight_root(&rho, alpha)));
    }
    acc
}

/// Squared Weyl denominator straight from the fusion matrices, with no
/// parity bookkeeping: the (n, b) factor is the q-number of
/// delta_b * sum_a (F_n + F_{n-1})_{ab}, multiplied over n = 1..N and all b.
/// Classically this is scale_factor^2 times the plain integer product.
pub fn fusion_product_denominator_squared(data: &LieData, ctx: &QContext) -> Scalar {
    let fs = FusionSequence::new(data);
    let r = data.rank;
    let mut acc = Scalar::one();
    for n in 1..=data.coxeter as i64 {
        for b in 0..r {
            let mut col = 0i64;
            for a in 0..r {
                col += fs.mat(n)[a][b] + fs.mat(n - 1)[a][b];
            }
            let factor = Rational::from(col) * &data.scalings[b];
            acc = acc.mul(&ctx.qnumber(&factor));
        }
    }
    acc
}

/// Locate a root on the full periodic quiver (simply-laced only): its
/// essential table has a single entry equal to +2, and that position is
/// where the root sits.
pub fn locate_root(data: &LieData, root: &Root) -> Result<(usize, usize), Error> {
    if !data.family.simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    let coords = data.root_weight_coords(root);
    let table = essential_table(data, &coords, false)?;
    let mut hit = None;
    let two = Rational::from(2);
    for n in 1..=table.rows {
        for b in 1..=table.rank {
            if table.get(n, b) == Some(&two) {
                if hit.is_some() {
                    return Err(Error::BadInput(format!(
                        "root {:?} has multiple +2 entries",
                        root.coeffs
                    )));
                }
                hit = Some((n, b));
            }
        }
    }
    hit.ok_or_else(|| Error::BadInput(format!("root {:?} has no +2 entry", root.coeffs)))
}

/// The root quiver: every root (positive and negative) placed at its
/// position. Returns the full 2N-row arrangement; the placement is checked
/// to be a bijection onto the checkerboard set.
pub fn root_quiver(data: &LieData) -> Result<Vec<Vec<Option<Root>>>, Error> {
    if !data.family.simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    let rows = 2 * data.coxeter as usize;
    let r = data.rank;
    let fs = FusionSequence::new(data);
    let two = Rational::from(2);
    let mut grid: Vec<Vec<Option<Root>>> = vec![vec![None; r]; rows];
    let mut all_roots: Vec<Root> = Vec::new();
    for alpha in &data.positive_roots {
        all_roots.push(alpha.clone());
        all_roots.push(alpha.negated());
    }
    for root in all_roots {
        let coords = data.root_weight_coords(&root);
        let table = essential_with(data, &fs, &coords, rows);
        let mut hit = None;
        for n in 1..=rows {
            for b in 1..=r {
                if table.get(n, b) == Some(&two) {
                    if hit.is_some() {
                        return Err(Error::BadInput(format!(
                            "root {:?} has multiple +2 entries",
                            root.coeffs
                        )));
                    }
                    hit = Some((n, b));
                }
            }
        }
        let (n, b) = hit.ok_or_else(|| {
            Error::BadInput(format!("root {:?} has no +2 entry", root.coeffs))
        })?;
        if grid[n - 1][b - 1].is_some() {
            return Err(Error::BadInput(format!(
                "two roots at position ({n}, {b})"
            )));
        }
        grid[n - 1][b - 1] = Some(root);
    }
    for n in 1..=rows {
        for b in 1..=r {
            if position_occupied(data, n, b) != grid[n - 1][b - 1].is_some() {
                return Err(Error::BadInput(format!(
                    "root placement misses position ({n}, {b})"
                )));
            }
        }
    }
    Ok(grid)
}

/// The local three-term relation on a full essential table: at every hole
/// (n, b) of the checkerboard the two vertical neighbours sum to the
/// adjacency-weighted sum of the horizontal ones, cyclically in n.
pub fn chebyshev_neighbor_holds(data: &LieData, weight: &[Rational]) -> Result<bool, Error> {
    let table = essential_table(data, weight, false)?;
    let rows = table.rows;
    let wrap = |n: i64| -> usize { (n - 1).rem_euclid(rows as i64) as usize + 1 };
    for n in 1..=rows {
        for b in 1..=data.rank {
            if table.occupied(n, b) {
                continue;
            }
            let up = table.get(wrap(n as i64 - 1), b).cloned().unwrap_or_default();
            let down = table.get(wrap(n as i64 + 1), b).cloned().unwrap_or_default();
            let lhs = up + down;
            let mut rhs = Rational::from(0);
            for c in 1..=data.rank {
                if data.adjacency[c - 1][b - 1] != 0 {
                    let v = table.get(n, c).cloned().unwrap_or_default();
                    rhs += v * Rational::from(data.adjacency[c - 1][b - 1]);
                }
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Path matrix X = F_1 + ... + F_r of a simply-laced diagram.
pub fn path_matrix(data: &LieData) -> Result<Vec<Vec<i64>>, Error> {
    if !data.family.simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    let fs = FusionSequence::new(data);
    let r = data.rank;
    let mut x = vec![vec![0i64; r]; r];
    for n in 1..=r as i64 {
        for i in 0..r {
            for j in 0..r {
                x[i][j] += fs.mat(n)[i][j];
            }
        }
    }
    Ok(x)
}

/// Rows rotated down by one (row 1 becomes old row r).
pub fn cyclic_row_shift(x: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = x.len();
    (0..r).map(|i| x[(i + r - 1) % r].clone()).collect()
}

/// prod over all entries of (X + X-rotated); equals 2^r sfac(r)^2 in the
/// A series.
pub fn path_matrix_product(data: &LieData) -> Result<Integer, Error> {
    let x = path_matrix(data)?;
    let shifted = cyclic_row_shift(&x);
    let mut acc = Integer::from(1);
    for i in 0..x.len() {
        for j in 0..x.len() {
            acc *= Integer::from(x[i][j] + shifted[i][j]);
        }
    }
    Ok(acc)
}

pub fn column_sums(x: &[Vec<i64>]) -> Vec<i64> {
    let r = x.len();
    (0..r)
        .map(|j| (0..r).map(|i| x[i][j]).sum())
        .collect()
}

/// Independent oracle for the multiset {<rho, alpha> : alpha positive} of
/// the classical series, from the orthonormal-basis description of the
/// roots; no Cartan matrices or root closures involved.
pub fn epsilon_rho_products(family: Family, rank: usize) -> Option<Vec<Rational>> {
    let r = rank as i64;
    let mut vals: Vec<Rational> = Vec::new();
    match family {
        Family::A => {
            // roots e_i - e_j, 1 <= i < j <= r+1: <rho, .> = j - i.
            for i in 1..=r {
                for j in i + 1..=r + 1 {
                    vals.push(Rational::from(j - i));
                }
            }
        }
        Family::B => {
            // e_i +- e_j with <rho,.> = 2r-i-j+1 and j-i; short e_i with r-i+1/2.
            for i in 1..=r {
                for j in i + 1..=r {
                    vals.push(Rational::from(2 * r - i - j + 1));
                    vals.push(Rational::from(j - i));
                }
                vals.push(Rational::from((2 * (r - i) + 1, 2)));
            }
        }
        Family::C => {
            // short (e_i +- e_j)/sqrt2 with (2r-i-j+2)/2 and (j-i)/2; long sqrt2 e_i with r-i+1.
            for i in 1..=r {
                for j in i + 1..=r {
                    vals.push(Rational::from((2 * r - i - j + 2, 2)));
                    vals.push(Rational::from((j - i, 2)));
                }
                vals.push(Rational::from(r - i + 1));
            }
        }
        Family::D => {
            for i in 1..=r {
                for j in i + 1..=r {
                    vals.push(Rational::from(2 * r - i - j));
                    vals.push(Rational::from(j - i));
                }
            }
        }
        _ => return None,
    }
    vals.sort();
    Some(vals)
}
