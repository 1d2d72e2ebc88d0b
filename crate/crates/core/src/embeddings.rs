//! Conformal embedding catalog and module-category dimensions.
//!
//! A record states that the product of inner factors G_1 x ... x G_m at
//! levels k_1, ..., k_m embeds conformally in the outer group J at level
//! one. The defining constraint is exact equality of central charges,
//!
//!   sum_i dim(G_i) k_i / (k_i + h_i)  =  dim(J) / (1 + h_J),
//!
//! with h the dual Coxeter number, and it is checked in exact rational
//! arithmetic. The associated module category has global dimension
//! sqrt(|A_k(G)| |A_1(J)|).

use rug::{Float, Rational};
use serde::Deserialize;

use crate::error::Error;
use crate::lie::{self, Family, LieData};
use crate::linalg;
use crate::moddim;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesTag {
    Antisymmetric,
    Adjoint,
    Symmetric,
    Sporadic,
}

impl SeriesTag {
    pub fn label(self) -> &'static str {
        match self {
            SeriesTag::Antisymmetric => "antisymmetric",
            SeriesTag::Adjoint => "adjoint",
            SeriesTag::Symmetric => "symmetric",
            SeriesTag::Sporadic => "sporadic",
        }
    }

    pub fn parse(s: &str) -> Option<SeriesTag> {
        match s.trim().to_ascii_lowercase().as_str() {
            "antisymmetric" => Some(SeriesTag::Antisymmetric),
            "adjoint" => Some(SeriesTag::Adjoint),
            "symmetric" => Some(SeriesTag::Symmetric),
            "sporadic" => Some(SeriesTag::Sporadic),
            _ => None,
        }
    }
}

/// One leveled factor of the inner group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InnerFactor {
    pub family: Family,
    pub rank: usize,
    pub level: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingRecord {
    pub inner: Vec<InnerFactor>,
    pub outer: (Family, usize),
    pub tag: SeriesTag,
}

impl EmbeddingRecord {
    fn simple(
        family: Family,
        rank: usize,
        level: u32,
        outer: (Family, usize),
        tag: SeriesTag,
    ) -> EmbeddingRecord {
        EmbeddingRecord {
            inner: vec![InnerFactor {
                family,
                rank,
                level,
            }],
            outer,
            tag,
        }
    }

    /// "A3 level 2 x A1 level 4 -> D10" style description.
    pub fn describe(&self) -> String {
        let inner = self
            .inner
            .iter()
            .map(|f| format!("{}{} level {}", f.family.label(), f.rank, f.level))
            .collect::<Vec<_>>()
            .join(" x ");
        format!(
            "{} -> {}{} [{}]",
            inner,
            self.outer.0.label(),
            self.outer.1,
            self.tag.label()
        )
    }
}

/// Cartan type of the spin group of an m-dimensional vector space.
pub fn spin_type(m: u64) -> Result<(Family, usize), Error> {
    let (family, rank) = if m % 2 == 1 {
        (Family::B, ((m - 1) / 2) as usize)
    } else {
        (Family::D, (m / 2) as usize)
    };
    if !family.valid_rank(rank) {
        return Err(Error::BadInput(format!(
            "no orthogonal Cartan type of dimension {m}"
        )));
    }
    Ok((family, rank))
}

/// Exact central charge dim(G) k / (k + h) of G at level k.
pub fn central_charge(family: Family, rank: usize, level: u32) -> Result<Rational, Error> {
    if !family.valid_rank(rank) {
        return Err(Error::InvalidRank {
            family: family.label(),
            rank,
        });
    }
    let dim = lie::dimension(family, rank);
    let h = lie::dual_coxeter_number(family, rank);
    Ok(Rational::from((dim, 1u32)) * Rational::from((level, level + h)))
}

/// Central charges of the two sides of a record; equality is the
/// conformal condition. The caller decides what to do with a mismatch,
/// so records loaded from external data can be audited rather than
/// rejected outright.
pub fn central_charge_check(rec: &EmbeddingRecord) -> Result<(Rational, Rational, bool), Error> {
    let mut inner = Rational::new();
    for f in &rec.inner {
        inner += central_charge(f.family, f.rank, f.level)?;
    }
    let outer = central_charge(rec.outer.0, rec.outer.1, 1)?;
    let ok = inner == outer;
    Ok((inner, outer, ok))
}

/// sqrt(prod_i |A_{k_i}(G_i)| * |A_1(J)|), the global dimension of the
/// module category attached to the record.
pub fn module_global_dim(rec: &EmbeddingRecord, prec: u32) -> Result<Float, Error> {
    let mut product = Float::with_val(prec, 1);
    for f in &rec.inner {
        product *= moddim::closed_global_dim(f.family, f.rank, f.level, prec)?;
    }
    product *= moddim::closed_global_dim(rec.outer.0, rec.outer.1, 1, prec)?;
    Ok(product.sqrt())
}

/// Independent route to the same number for rank-one inner groups: the
/// module objects are the vertices of a finite graph, their dimensions
/// the Perron eigenvector normalized at its smallest entry, and the
/// global dimension the sum of squares. Evaluates that sum for the
/// graph of the given simply laced type.
pub fn graph_module_sum(data: &LieData, prec: u32) -> Result<Float, Error> {
    if !data.family.simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    let adj: Vec<Vec<Float>> = data
        .adjacency
        .iter()
        .map(|row| row.iter().map(|&v| Float::with_val(prec, v)).collect())
        .collect();
    let (_, vectors) = linalg::eigen_symmetric(&adj, prec);
    // Perron eigenvector: top eigenvalue, entries of one sign.
    let perron: Vec<Float> = vectors[0]
        .iter()
        .map(|v| Float::with_val(prec, v.abs_ref()))
        .collect();
    let unit = perron
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    let mut sum = Float::with_val(prec, 0);
    for v in &perron {
        sum += Float::with_val(prec, v / &perron[unit]).square();
    }
    Ok(sum)
}

/// The built-in catalog: the three regular series of the special
/// unitary groups (inner rank up to `max_n - 1`), the nine sporadic
/// unitary embeddings, and the adjoint embeddings G at level h into
/// the spin group of the adjoint representation for the remaining
/// families (classical inner ranks 2..=4).
pub fn builtin_catalog() -> Vec<EmbeddingRecord> {
    let max_n: u64 = 9;
    let mut out = Vec::new();

    // Regular series for SU(N): antisymmetric and symmetric squares,
    // and the adjoint representation.
    for n in 2..=max_n {
        let r = (n - 1) as usize;
        if n >= 4 {
            let target = (n * (n - 1) / 2 - 1) as usize;
            out.push(EmbeddingRecord::simple(
                Family::A,
                r,
                (n - 2) as u32,
                (Family::A, target),
                SeriesTag::Antisymmetric,
            ));
        }
        if n >= 3 {
            let dim = lie::dimension(Family::A, r);
            out.push(EmbeddingRecord::simple(
                Family::A,
                r,
                n as u32,
                spin_type(dim).expect("adjoint target"),
                SeriesTag::Adjoint,
            ));
        }
        let target = (n * (n + 1) / 2 - 1) as usize;
        out.push(EmbeddingRecord::simple(
            Family::A,
            r,
            (n + 2) as u32,
            (Family::A, target),
            SeriesTag::Symmetric,
        ));
    }

    // Adjoint embeddings for the other families. Rank-one inner groups
    // have no odd orthogonal target of valid rank and are omitted.
    let mut adjoint_inner: Vec<(Family, usize)> = Vec::new();
    for r in 2..=4 {
        adjoint_inner.push((Family::B, r));
        adjoint_inner.push((Family::C, r));
        if r >= 3 {
            adjoint_inner.push((Family::D, r));
        }
    }
    for f in [Family::E6, Family::E7, Family::E8, Family::F4, Family::G2] {
        adjoint_inner.push((f, f.fixed_rank().unwrap()));
    }
    for (family, rank) in adjoint_inner {
        let level = lie::dual_coxeter_number(family, rank);
        let dim = lie::dimension(family, rank);
        out.push(EmbeddingRecord::simple(
            family,
            rank,
            level,
            spin_type(dim).expect("adjoint target"),
            SeriesTag::Adjoint,
        ));
    }

    // Sporadic unitary embeddings.
    let sporadic: [(usize, u32, (Family, usize)); 9] = [
        (1, 10, (Family::B, 2)),
        (1, 28, (Family::G2, 2)),
        (2, 9, (Family::E6, 6)),
        (2, 21, (Family::E7, 7)),
        (3, 8, (Family::D, 10)),
        (5, 6, (Family::C, 10)),
        (7, 1, (Family::E7, 7)),
        (7, 10, (Family::D, 35)),
        (8, 1, (Family::E8, 8)),
    ];
    for (rank, level, outer) in sporadic {
        out.push(EmbeddingRecord::simple(
            Family::A,
            rank,
            level,
            outer,
            SeriesTag::Sporadic,
        ));
    }

    out
}

#[derive(Deserialize)]
struct RawFactor {
    family: String,
    rank: usize,
    level: u32,
}

#[derive(Deserialize)]
struct RawOuter {
    family: String,
    rank: usize,
}

#[derive(Deserialize)]
struct RawRecord {
    inner: Vec<RawFactor>,
    outer: RawOuter,
    tag: String,
}

fn parse_type(label: &str, rank: usize) -> Result<(Family, usize), Error> {
    let family = Family::parse(label)
        .ok_or_else(|| Error::BadInput(format!("unknown family {label:?}")))?;
    if !family.valid_rank(rank) {
        return Err(Error::InvalidRank {
            family: family.label(),
            rank,
        });
    }
    Ok((family, rank))
}

/// Parse a catalog from JSON. Shape and Cartan types are validated;
/// the conformal condition is not, so audits can load candidate
/// records and test them with `central_charge_check`.
pub fn parse_catalog(json: &str) -> Result<Vec<EmbeddingRecord>, Error> {
    let raw: Vec<RawRecord> = serde_json::from_str(json)?;
    let mut out = Vec::with_capacity(raw.len());
    for rec in raw {
        if rec.inner.is_empty() {
            return Err(Error::BadInput("record with no inner factors".into()));
        }
        let mut inner = Vec::with_capacity(rec.inner.len());
        for f in &rec.inner {
            let (family, rank) = parse_type(&f.family, f.rank)?;
            if f.level == 0 {
                return Err(Error::BadInput("inner level must be positive".into()));
            }
            inner.push(InnerFactor {
                family,
                rank,
                level: f.level,
            });
        }
        let outer = parse_type(&rec.outer.family, rec.outer.rank)?;
        let tag = SeriesTag::parse(&rec.tag)
            .ok_or_else(|| Error::BadInput(format!("unknown tag {:?}", rec.tag)))?;
        out.push(EmbeddingRecord { inner, outer, tag });
    }
    Ok(out)
}

pub fn load_catalog(path: &std::path::Path) -> Result<Vec<EmbeddingRecord>, Error> {
    let text = std::fs::read_to_string(path)?;
    parse_catalog(&text)
}
