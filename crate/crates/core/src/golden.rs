//! Reference tables shipped as plain-text fixtures and their parsers.
//! Lines starting with '#' are comments; "." marks an empty cell; numeric
//! cells are integers or fractions "p/q"; root cells are comma-separated
//! coefficient lists.

use rug::Rational;
use std::str::FromStr;

use crate::lie::Family;

pub const E6_WEYL_HALF: &str = include_str!("golden/e6_weyl_half.txt");
pub const F4_WEYL_HALF_COROOT: &str = include_str!("golden/f4_weyl_half_coroot.txt");
pub const F4_WEYL_HALF_ROOT: &str = include_str!("golden/f4_weyl_half_root.txt");
pub const G2_WEYL_HALF_ROOT: &str = include_str!("golden/g2_weyl_half_root.txt");
pub const E7_WEYL_HALF: &str = include_str!("golden/e7_weyl_half.txt");
pub const E8_WEYL_HALF: &str = include_str!("golden/e8_weyl_half.txt");
pub const A6_WEYL_HALF: &str = include_str!("golden/a6_weyl_half.txt");
pub const D6_WEYL_HALF: &str = include_str!("golden/d6_weyl_half.txt");
pub const B6_WEYL_HALF_ROOT: &str = include_str!("golden/b6_weyl_half_root.txt");
pub const C6_WEYL_HALF_ROOT: &str = include_str!("golden/c6_weyl_half_root.txt");
pub const E6_ALPHA3_FULL: &str = include_str!("golden/e6_alpha3_full.txt");
pub const E6_ROOT_QUIVER: &str = include_str!("golden/e6_root_quiver.txt");
pub const A11_FUSION_FOURTH: &str = include_str!("golden/a11_fusion_fourth.txt");
pub const A11_PATH_MATRIX: &str = include_str!("golden/a11_path_matrix.txt");

/// Weyl-vector half tables: type, rank, fixture, and whether the table
/// carries the per-column scaling.
pub fn weyl_fixture_cases() -> [(Family, usize, &'static str, bool); 10] {
    [
        (Family::E6, 6, E6_WEYL_HALF, false),
        (Family::F4, 4, F4_WEYL_HALF_COROOT, false),
        (Family::F4, 4, F4_WEYL_HALF_ROOT, true),
        (Family::G2, 2, G2_WEYL_HALF_ROOT, true),
        (Family::E7, 7, E7_WEYL_HALF, false),
        (Family::E8, 8, E8_WEYL_HALF, false),
        (Family::A, 6, A6_WEYL_HALF, false),
        (Family::D, 6, D6_WEYL_HALF, false),
        (Family::B, 6, B6_WEYL_HALF_ROOT, true),
        (Family::C, 6, C6_WEYL_HALF_ROOT, true),
    ]
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Checkerboard table of rationals, "." for holes.
pub fn parse_cells(text: &str) -> Vec<Vec<Option<Rational>>> {
    data_lines(text)
        .map(|line| {
            line.split_whitespace()
                .map(|tok| {
                    if tok == "." {
                        None
                    } else {
                        Some(Rational::from_str(tok).expect("bad fixture cell"))
                    }
                })
                .collect()
        })
        .collect()
}

/// Dense integer matrix.
pub fn parse_int_matrix(text: &str) -> Vec<Vec<i64>> {
    data_lines(text)
        .map(|line| {
            line.split_whitespace()
                .map(|tok| tok.parse().expect("bad fixture integer"))
                .collect()
        })
        .collect()
}

/// Checkerboard table of root-coefficient vectors.
pub fn parse_root_cells(text: &str) -> Vec<Vec<Option<Vec<i64>>>> {
    data_lines(text)
        .map(|line| {
            line.split_whitespace()
                .map(|tok| {
                    if tok == "." {
                        None
                    } else {
                        Some(
                            tok.split(',')
                                .map(|c| c.parse().expect("bad fixture coefficient"))
                                .collect(),
                        )
                    }
                })
                .collect()
        })
        .collect()
}

/// Compare a computed checkerboard table against a fixture, returning the
/// first mismatch as (row, column) in 1-based indexing.
pub fn table_mismatch(
    computed: &crate::quiver::QuiverTable,
    fixture: &[Vec<Option<Rational>>],
) -> Option<(usize, usize)> {
    if computed.rows != fixture.len() {
        return Some((0, 0));
    }
    for n in 1..=computed.rows {
        if fixture[n - 1].len() != computed.rank {
            return Some((n, 0));
        }
        for b in 1..=computed.rank {
            if computed.get(n, b) != fixture[n - 1][b - 1].as_ref() {
                return Some((n, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{Family, LieData, Root};
    use crate::quiver;

    #[test]
    fn weyl_tables_match_fixtures() {
        for (f, r, text, scaled) in weyl_fixture_cases() {
            let data = LieData::new(f, r).unwrap();
            let table = if scaled {
                quiver::weyl_vector_scaled_table(&data, true)
            } else {
                quiver::weyl_vector_table(&data, true)
            };
            let fixture = parse_cells(text);
            assert_eq!(
                table_mismatch(&table, &fixture),
                None,
                "{f:?}{r} scaled={scaled}"
            );
        }
    }

    #[test]
    fn alpha3_table_matches_fixture() {
        let data = LieData::new(Family::E6, 6).unwrap();
        let alpha3 = Root {
            coeffs: vec![0, 0, 1, 0, 0, 0],
        };
        let coords = data.root_weight_coords(&alpha3);
        let table = quiver::essential_table(&data, &coords, false).unwrap();
        let fixture = parse_cells(E6_ALPHA3_FULL);
        assert_eq!(table_mismatch(&table, &fixture), None);
    }

    #[test]
    fn root_quiver_matches_fixture() {
        let data = LieData::new(Family::E6, 6).unwrap();
        let grid = quiver::root_quiver(&data).unwrap();
        let fixture = parse_root_cells(E6_ROOT_QUIVER);
        for n in 0..24 {
            for b in 0..6 {
                let got = grid[n][b].as_ref().map(|root| root.coeffs.clone());
                assert_eq!(got, fixture[n][b], "position ({}, {})", n + 1, b + 1);
            }
        }
    }

    #[test]
    fn path_matrices_match_fixtures() {
        let data = LieData::new(Family::A, 11).unwrap();
        let fs = quiver::FusionSequence::new(&data);
        assert_eq!(fs.mat(4), &parse_int_matrix(A11_FUSION_FOURTH));
        let x = quiver::path_matrix(&data).unwrap();
        assert_eq!(x, parse_int_matrix(A11_PATH_MATRIX));
    }

    #[test]
    fn fixtures_parse_with_expected_shapes() {
        for (text, rows, cols) in [
            (E6_WEYL_HALF, 12, 6),
            (F4_WEYL_HALF_COROOT, 12, 4),
            (F4_WEYL_HALF_ROOT, 12, 4),
            (G2_WEYL_HALF_ROOT, 6, 2),
            (E7_WEYL_HALF, 18, 7),
            (E8_WEYL_HALF, 30, 8),
            (A6_WEYL_HALF, 7, 6),
            (D6_WEYL_HALF, 10, 6),
            (B6_WEYL_HALF_ROOT, 12, 6),
            (C6_WEYL_HALF_ROOT, 12, 6),
            (E6_ALPHA3_FULL, 24, 6),
        ] {
            let t = parse_cells(text);
            assert_eq!(t.len(), rows);
            assert!(t.iter().all(|r| r.len() == cols));
        }
        let roots = parse_root_cells(E6_ROOT_QUIVER);
        assert_eq!(roots.len(), 24);
        let placed: usize = roots.iter().map(|r| r.iter().flatten().count()).sum();
        assert_eq!(placed, 72);
        assert_eq!(parse_int_matrix(A11_FUSION_FOURTH).len(), 11);
        assert_eq!(parse_int_matrix(A11_PATH_MATRIX).len(), 11);
    }
}
