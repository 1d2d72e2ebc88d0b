//! Root-system data for the nine families of simple Lie groups.
//!
//! Everything here is exact rational arithmetic: Cartan matrices, root
//! closures, inner products on the fundamental-weight basis. Node numbering
//! follows the quiver drawing conventions used throughout the crate: chains
//! are numbered left to right, the E6 branch vertex hangs off node 3, the E7
//! branch off node 4, the E8 branch off node 5, and the short roots of B/C/F4/G2
//! sit where the scaling vector says they do.

use crate::error::Error;
use rug::ops::Pow;
use rug::Rational;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Some(Family::A),
            "B" => Some(Family::B),
            "C" => Some(Family::C),
            "D" => Some(Family::D),
            "E6" => Some(Family::E6),
            "E7" => Some(Family::E7),
            "E8" => Some(Family::E8),
            "F4" => Some(Family::F4),
            "G2" => Some(Family::G2),
            _ => None,
        }
    }

    /// Rank of the exceptional types; `None` for the classical series.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => (1..=256).contains(&rank),
            Family::B | Family::C => (2..=256).contains(&rank),
            Family::D => (3..=256).contains(&rank),
            _ => Some(rank) == self.fixed_rank(),
        }
    }

    pub fn simply_laced(self) -> bool {
        matches!(
            self,
            Family::A | Family::D | Family::E6 | Family::E7 | Family::E8
        )
    }
}

/// Coxeter number N.
pub fn coxeter_number(family: Family, rank: usize) -> u32 {
    let r = rank as u32;
    match family {
        Family::A => r + 1,
        Family::B | Family::C => 2 * r,
        Family::D => 2 * r - 2,
        Family::E6 => 12,
        Family::E7 => 18,
        Family::E8 => 30,
        Family::F4 => 12,
        Family::G2 => 6,
    }
}

/// Dual Coxeter number.
pub fn dual_coxeter_number(family: Family, rank: usize) -> u32 {
    let r = rank as u32;
    match family {
        Family::A => r + 1,
        Family::B => 2 * r - 1,
        Family::C => r + 1,
        Family::D => 2 * r - 2,
        Family::E6 => 12,
        Family::E7 => 18,
        Family::E8 => 30,
        Family::F4 => 9,
        Family::G2 => 4,
    }
}

/// dim G = r(N + 1).
pub fn dimension(family: Family, rank: usize) -> u64 {
    rank as u64 * (coxeter_number(family, rank) as u64 + 1)
}

/// Determinant of the quadratic form on the fundamental-weight basis.
pub fn quad_det(family: Family, rank: usize) -> Rational {
    match family {
        Family::A => Rational::from((1, rank as i64 + 1)),
        Family::B | Family::D | Family::F4 => Rational::from((1, 4)),
        Family::C => {
            Rational::from(1) / Rational::from(rug::Integer::from(1) << rank as u32)
        }
        Family::E6 | Family::G2 => Rational::from((1, 3)),
        Family::E7 => Rational::from((1, 2)),
        Family::E8 => Rational::from(1),
    }
}

/// Exponents of the Weyl group, ascending, with multiplicity.
pub fn exponents(family: Family, rank: usize) -> Vec<u32> {
    let r = rank as u32;
    match family {
        Family::A => (1..=r).collect(),
        Family::B | Family::C => (0..r).map(|i| 2 * i + 1).collect(),
        Family::D => {
            let mut ex: Vec<u32> = (0..r - 1).map(|i| 2 * i + 1).collect();
            ex.push(r - 1);
            ex.sort_unstable();
            ex
        }
        Family::E6 => vec![1, 4, 5, 7, 8, 11],
        Family::E7 => vec![1, 5, 7, 9, 11, 13, 17],
        Family::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
        Family::F4 => vec![1, 5, 7, 11],
        Family::G2 => vec![1, 5],
    }
}

/// A root written on the simple-root basis, integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Weights live on the fundamental-weight basis with rational coordinates.
pub type Weight = Vec<Rational>;

pub fn weight_from_ints(coords: &[i64]) -> Weight {
    coords.iter().map(|&c| Rational::from(c)).collect()
}

pub struct LieData {
    pub family: Family,
    pub rank: usize,
    /// Coxeter number N.
    pub coxeter: u32,
    /// Dual Coxeter number.
    pub dual_coxeter: u32,
    /// Cartan matrix L, rows indexed by roots, columns by coroots.
    pub cartan: Vec<Vec<i64>>,
    /// G = 2I - L; for the non-simply-laced types this is the non-symmetric
    /// multiplicity matrix of the diagram.
    pub adjacency: Vec<Vec<i64>>,
    /// Half squared root lengths delta_b; 1 on long roots.
    pub scalings: Vec<Rational>,
    /// Bipartition of the diagram; node 1 is even (0).
    pub parity: Vec<u8>,
    pub exponents: Vec<u32>,
    /// Quadratic form K = L^{-1} D on the fundamental-weight basis.
    pub quad_form: Vec<Vec<Rational>>,
    /// det K.
    pub quad_det: Rational,
    /// prod_b delta_b^{N/2}.
    pub scale_factor: Rational,
    /// All positive roots ordered by (height, lexicographic coefficients).
    pub positive_roots: Vec<Root>,
    pub highest_root: Root,
    /// <omega_a, theta> per node: the level of a weight is its dot with this.
    pub level_form: Vec<Rational>,
}

impl LieData {
    pub fn new(family: Family, rank: usize) -> Result<LieData, Error> {
        if !family.valid_rank(rank) {
            return Err(Error::InvalidRank {
                family: family.label(),
                rank,
            });
        }
        let cartan = cartan_matrix(family, rank);
        let r = rank;
        let mut adjacency = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                adjacency[i][j] = if i == j { 0 } else { -cartan[i][j] };
            }
        }
        let scalings = scalings(family, rank);
        let parity = two_coloring(&adjacency);

        let coxeter = coxeter_number(family, rank);
        let dual_coxeter = dual_coxeter_number(family, rank);
        let exps = exponents(family, rank);
        debug_assert_eq!(
            exps.iter().map(|&s| s as u64).sum::<u64>(),
            r as u64 * coxeter as u64 / 2
        );

        let quad_form = quad_form(&cartan, &scalings);
        for i in 0..r {
            for j in 0..i {
                assert_eq!(quad_form[i][j], quad_form[j][i], "quadratic form must be symmetric");
            }
        }
        let det = det_rational(&quad_form);
        let table_det = quad_det(family, rank);
        assert_eq!(det, table_det, "det of quadratic form disagrees with the family table");

        let mut scale_factor = Rational::from(1);
        for d in &scalings {
            scale_factor *= Rational::from(d.pow(coxeter / 2));
        }

        let positive_roots = close_positive_roots(&cartan);
        assert_eq!(
            positive_roots.len() as u64,
            r as u64 * coxeter as u64 / 2,
            "positive root count must be rN/2"
        );
        let highest_root = positive_roots.last().unwrap().clone();

        let data = LieData {
            family,
            rank,
            coxeter,
            dual_coxeter,
            cartan,
            adjacency,
            scalings,
            parity,
            exponents: exps,
            quad_form,
            quad_det: table_det,
            scale_factor,
            positive_roots,
            highest_root: highest_root.clone(),
            level_form: Vec::new(),
        };

        let mut data = data;
        data.level_form = (0..r)
            .map(|a| Rational::from(highest_root.coeffs[a]) * &data.scalings[a])
            .collect();

        let theta_norm = data.root_root(&data.highest_root, &data.highest_root);
        assert_eq!(theta_norm, Rational::from(2), "highest root must be long");
        let rho_theta = data.weight_root(&data.rho(), &data.highest_root);
        assert_eq!(
            rho_theta,
            Rational::from(data.dual_coxeter - 1),
            "<rho, theta> must equal the dual Coxeter number minus one"
        );

        if r <= 12 {
            data.check_spectrum();
        }
        Ok(data)
    }

    /// The Weyl vector: all fundamental-weight coordinates equal to one.
    pub fn rho(&self) -> Weight {
        vec![Rational::from(1); self.rank]
    }

    /// Fundamental-weight coordinates of a root: alpha = sum_b c_b alpha_b
    /// with alpha_b = sum_a L_{ba} omega_a.
    pub fn root_weight_coords(&self, root: &Root) -> Weight {
        (0..self.rank)
            .map(|a| {
                let mut acc = Rational::from(0);
                for b in 0..self.rank {
                    acc += Rational::from(root.coeffs[b] * self.cartan[b][a]);
                }
                acc
            })
            .collect()
    }

    /// <lambda, mu> through the quadratic form.
    pub fn weight_weight(&self, lambda: &[Rational], mu: &[Rational]) -> Rational {
        let mut acc = Rational::from(0);
        for a in 0..self.rank {
            for b in 0..self.rank {
                acc += Rational::from(&lambda[a] * &mu[b]) * &self.quad_form[a][b];
            }
        }
        acc
    }

    /// <lambda, alpha> = sum_b c_b delta_b lambda_b.
    pub fn weight_root(&self, lambda: &[Rational], root: &Root) -> Rational {
        let mut acc = Rational::from(0);
        for b in 0..self.rank {
            acc += Rational::from(root.coeffs[b]) * &self.scalings[b] * &lambda[b];
        }
        acc
    }

    pub fn root_root(&self, alpha: &Root, beta: &Root) -> Rational {
        self.weight_root(&self.root_weight_coords(alpha), beta)
    }

    /// Level of a weight: its pairing with the highest root.
    pub fn weight_level(&self, lambda: &[Rational]) -> Rational {
        let mut acc = Rational::from(0);
        for a in 0..self.rank {
            acc += Rational::from(&lambda[a] * &self.level_form[a]);
        }
        acc
    }

    /// Bipartite Coxeter element as a matrix on the simple-root basis:
    /// all even-parity reflections, then all odd-parity ones.
    pub fn coxeter_element(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut m = identity(r);
        for a in (0..r).filter(|&a| self.parity[a] == 0) {
            m = mat_mul(&self.reflection_matrix(a), &m);
        }
        for a in (0..r).filter(|&a| self.parity[a] == 1) {
            m = mat_mul(&self.reflection_matrix(a), &m);
        }
        m
    }

    /// s_a on the simple-root basis: alpha_j -> alpha_j - L_{ja} alpha_a.
    fn reflection_matrix(&self, a: usize) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut m = identity(r);
        for j in 0..r {
            m[a][j] -= self.cartan[j][a];
        }
        m
    }

    pub fn apply_root_matrix(&self, m: &[Vec<i64>], root: &Root) -> Root {
        let r = self.rank;
        let mut out = vec![0i64; r];
        for i in 0..r {
            for j in 0..r {
                out[i] += m[i][j] * root.coeffs[j];
            }
        }
        Root { coeffs: out }
    }

    /// The diagram spectrum must be {2 cos(pi s / N) : s exponent}.
    fn check_spectrum(&self) {
        use rug::Float;
        let prec = 128;
        let r = self.rank;
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let mut prod: Vec<Vec<Float>> = (0..r)
            .map(|i| (0..r).map(|j| Float::with_val(prec, (i == j) as u32)).collect())
            .collect();
        for &s in &self.exponents {
            let angle = Float::with_val(prec, &pi * s) / self.coxeter;
            let c = Float::with_val(prec, 2) * angle.cos();
            // prod *= (G - c I)
            let mut next = vec![vec![Float::with_val(prec, 0); r]; r];
            for i in 0..r {
                for j in 0..r {
                    let mut acc = Float::with_val(prec, 0);
                    for k in 0..r {
                        let g = Float::with_val(prec, self.adjacency[k][j])
                            - if k == j { Float::with_val(prec, &c) } else { Float::with_val(prec, 0) };
                        acc += Float::with_val(prec, &prod[i][k] * &g);
                    }
                    next[i][j] = acc;
                }
            }
            prod = next;
        }
        for row in &prod {
            for x in row {
                assert!(
                    x.clone().abs() < 1e-10,
                    "adjacency spectrum disagrees with the exponent list"
                );
            }
        }
    }
}

fn identity(r: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; r]; r];
    for i in 0..r {
        m[i][i] = 1;
    }
    m
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0i64;
            for k in 0..n {
                acc += a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

fn cartan_matrix(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let r = rank;
    let mut m = vec![vec![0i64; r]; r];
    for i in 0..r {
        m[i][i] = 2;
    }
    let mut chain = |edges: &[(usize, usize)]| {
        for &(i, j) in edges {
            m[i][j] = -1;
            m[j][i] = -1;
        }
    };
    match family {
        Family::A => {
            chain(&(0..r - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
        }
        Family::B => {
            chain(&(0..r - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
            m[r - 2][r - 1] = -2;
        }
        Family::C => {
            chain(&(0..r - 1).map(|i| (i, i + 1)).collect::<Vec<_>>());
            m[r - 1][r - 2] = -2;
        }
        Family::D => {
            chain(&(0..r - 2).map(|i| (i, i + 1)).collect::<Vec<_>>());
            chain(&[(r - 3, r - 1)]);
        }
        Family::E6 => chain(&[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]),
        Family::E7 => chain(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]),
        Family::E8 => chain(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]),
        Family::F4 => {
            chain(&[(0, 1), (1, 2), (2, 3)]);
            m[1][2] = -2;
        }
        Family::G2 => {
            m[0][1] = -3;
            m[1][0] = -1;
        }
    }
    m
}

fn scalings(family: Family, rank: usize) -> Vec<Rational> {
    let one = Rational::from(1);
    let half = Rational::from((1, 2));
    match family {
        Family::A | Family::D | Family::E6 | Family::E7 | Family::E8 => {
            vec![one; rank]
        }
        Family::B => {
            let mut v = vec![one; rank];
            v[rank - 1] = half;
            v
        }
        Family::C => {
            let mut v = vec![half; rank];
            v[rank - 1] = one;
            v
        }
        Family::F4 => vec![one.clone(), one, half.clone(), half],
        Family::G2 => vec![one, Rational::from((1, 3))],
    }
}

/// Proper 2-coloring of the diagram with node 1 even.
fn two_coloring(adjacency: &[Vec<i64>]) -> Vec<u8> {
    let r = adjacency.len();
    let mut color = vec![u8::MAX; r];
    color[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..r {
            if adjacency[i][j] != 0 || adjacency[j][i] != 0 {
                if color[j] == u8::MAX {
                    color[j] = 1 - color[i];
                    queue.push_back(j);
                } else {
                    assert_ne!(color[j], color[i], "diagram must be bipartite");
                }
            }
        }
    }
    assert!(color.iter().all(|&c| c != u8::MAX), "diagram must be connected");
    color
}

/// K = L^{-1} D by Gauss-Jordan elimination over the rationals.
fn quad_form(cartan: &[Vec<i64>], scalings: &[Rational]) -> Vec<Vec<Rational>> {
    let r = cartan.len();
    let mut aug: Vec<Vec<Rational>> = (0..r)
        .map(|i| {
            let mut row: Vec<Rational> =
                (0..r).map(|j| Rational::from(cartan[i][j])).collect();
            for j in 0..r {
                row.push(if i == j {
                    scalings[j].clone()
                } else {
                    Rational::from(0)
                });
            }
            row
        })
        .collect();
    for col in 0..r {
        let pivot = (col..r)
            .find(|&i| aug[i][col] != 0)
            .expect("Cartan matrix must be invertible");
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x /= &p;
        }
        for i in 0..r {
            if i != col && aug[i][col] != 0 {
                let f = aug[i][col].clone();
                for j in 0..2 * r {
                    let sub = Rational::from(&f * &aug[col][j]);
                    aug[i][j] -= sub;
                }
            }
        }
    }
    aug.into_iter().map(|row| row[r..].to_vec()).collect()
}

fn det_rational(m: &[Vec<Rational>]) -> Rational {
    let r = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::from(1);
    for col in 0..r {
        let pivot = match (col..r).find(|&i| a[i][col] != 0) {
            Some(p) => p,
            None => return Rational::from(0),
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= &a[col][col];
        let p = a[col][col].clone();
        for i in col + 1..r {
            if a[i][col] != 0 {
                let f = Rational::from(&a[i][col] / &p);
                for j in col..r {
                    let sub = Rational::from(&f * &a[col][j]);
                    a[i][j] -= sub;
                }
            }
        }
    }
    det
}

/// Closure of the simple roots under root strings, processed by height.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    use std::collections::HashSet;
    let r = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut by_height: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for a in 0..r {
        let mut c = vec![0i64; r];
        c[a] = 1;
        seen.insert(c.clone());
        by_height[0].push(c);
    }
    let mut h = 0;
    while h < by_height.len() {
        let current = by_height[h].clone();
        for alpha in current {
            for a in 0..r {
                // <alpha, beta_a> = sum_b c_b L_{ba}
                let pairing: i64 = (0..r).map(|b| alpha[b] * cartan[b][a]).sum();
                // Walk down the a-string through alpha.
                let mut p = 0i64;
                let mut down = alpha.clone();
                loop {
                    down[a] -= 1;
                    if down.iter().all(|&c| c >= 0) && seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing >= 1 {
                    let mut up = alpha.clone();
                    up[a] += 1;
                    if seen.insert(up.clone()) {
                        while by_height.len() <= h + 1 {
                            by_height.push(Vec::new());
                        }
                        by_height[h + 1].push(up);
                    }
                }
            }
        }
        h += 1;
    }
    let mut out = Vec::new();
    for level in by_height.iter_mut() {
        level.sort();
        for c in level.drain(..) {
            out.push(Root { coeffs: c });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<(Family, usize)> {
        let mut v = vec![
            (Family::E6, 6),
            (Family::E7, 7),
            (Family::E8, 8),
            (Family::F4, 4),
            (Family::G2, 2),
        ];
        for r in 1..=8 {
            v.push((Family::A, r));
        }
        for r in 2..=8 {
            v.push((Family::B, r));
            v.push((Family::C, r));
        }
        for r in 3..=8 {
            v.push((Family::D, r));
        }
        v
    }

    #[test]
    fn builds_with_consistent_invariants() {
        for (f, r) in all_types() {
            let data = LieData::new(f, r).unwrap();
            assert_eq!(data.positive_roots.len(), r * data.coxeter as usize / 2);
        }
    }

    #[test]
    fn constant_tables() {
        assert_eq!(coxeter_number(Family::B, 6), 12);
        assert_eq!(dual_coxeter_number(Family::B, 6), 11);
        assert_eq!(coxeter_number(Family::C, 6), 12);
        assert_eq!(dual_coxeter_number(Family::C, 6), 7);
        assert_eq!(coxeter_number(Family::D, 6), 10);
        assert_eq!(dual_coxeter_number(Family::F4, 4), 9);
        assert_eq!(dual_coxeter_number(Family::G2, 2), 4);
        assert_eq!(dimension(Family::A, 1), 3);
        assert_eq!(dimension(Family::A, 2), 8);
        assert_eq!(dimension(Family::E8, 8), 248);
        assert_eq!(dimension(Family::G2, 2), 14);
        assert_eq!(quad_det(Family::C, 5), Rational::from((1, 32)));
    }

    #[test]
    fn e6_highest_root() {
        let e6 = LieData::new(Family::E6, 6).unwrap();
        assert_eq!(e6.highest_root.coeffs, vec![1, 2, 3, 2, 1, 2]);
        let rho = e6.rho();
        assert_eq!(e6.weight_root(&rho, &e6.highest_root), Rational::from(11));
    }

    #[test]
    fn g2_quadratic_form() {
        let g2 = LieData::new(Family::G2, 2).unwrap();
        assert_eq!(g2.quad_form[0][0], Rational::from(2));
        assert_eq!(g2.quad_form[0][1], Rational::from(1));
        assert_eq!(g2.quad_form[1][1], Rational::from((2, 3)));
        assert_eq!(g2.scale_factor, Rational::from((1, 27)));
        assert_eq!(g2.highest_root.coeffs, vec![2, 3]);
    }

    #[test]
    fn scale_factors() {
        let b3 = LieData::new(Family::B, 3).unwrap();
        assert_eq!(b3.scale_factor, Rational::from((1, 8)));
        let c3 = LieData::new(Family::C, 3).unwrap();
        assert_eq!(c3.scale_factor, Rational::from((1, 64)));
        let f4 = LieData::new(Family::F4, 4).unwrap();
        assert_eq!(f4.scale_factor, Rational::from((1, 4096)));
        let a5 = LieData::new(Family::A, 5).unwrap();
        assert_eq!(a5.scale_factor, Rational::from(1));
    }

    #[test]
    fn b2_rho_pairings() {
        let b2 = LieData::new(Family::B, 2).unwrap();
        let rho = b2.rho();
        let mut vals: Vec<Rational> = b2
            .positive_roots
            .iter()
            .map(|a| b2.weight_root(&rho, a))
            .collect();
        vals.sort();
        let expect: Vec<Rational> = [(1, 2), (1, 1), (3, 2), (2, 1)]
            .iter()
            .map(|&(p, q)| Rational::from((p, q)))
            .collect();
        assert_eq!(vals, expect);
    }

    #[test]
    fn coxeter_element_order() {
        for (f, r) in [(Family::A, 4), (Family::D, 5), (Family::E6, 6), (Family::G2, 2)] {
            let data = LieData::new(f, r).unwrap();
            let c = data.coxeter_element();
            let mut m = c.clone();
            let mut order = 1;
            while m != identity(r) {
                m = mat_mul(&c, &m);
                order += 1;
                assert!(order <= 2 * data.coxeter, "Coxeter element order overflow");
            }
            assert_eq!(order, data.coxeter);
        }
    }

    #[test]
    fn coxeter_orbits_partition_roots() {
        let e6 = LieData::new(Family::E6, 6).unwrap();
        let c = e6.coxeter_element();
        let mut all: std::collections::HashSet<Vec<i64>> = e6
            .positive_roots
            .iter()
            .flat_map(|a| [a.coeffs.clone(), a.negated().coeffs])
            .collect();
        assert_eq!(all.len(), 72);
        let mut orbits = 0;
        while let Some(start) = all.iter().next().cloned() {
            let mut cur = Root { coeffs: start };
            for _ in 0..e6.coxeter {
                assert!(all.remove(&cur.coeffs));
                cur = e6.apply_root_matrix(&c, &cur);
            }
            orbits += 1;
        }
        assert_eq!(orbits, 6);
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(LieData::new(Family::B, 1).is_err());
        assert!(LieData::new(Family::D, 2).is_err());
        assert!(LieData::new(Family::E6, 7).is_err());
    }
}
