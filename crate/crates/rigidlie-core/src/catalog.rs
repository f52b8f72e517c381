//! Built-in encodings of the printed bracket tables, derivations and base
//! changes, together with the expected dimensions and verdicts the test
//! suite checks against computed values.
//!
//! Indices in this module's private builders are 1-based to match the
//! printed tables; everything stored is 0-based.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::liealg::LieAlgebra;
use crate::linalg::ExactMatrix;
use crate::scalars::{Field, Scalar};

/// Expected facts about a catalog algebra. Values the library can compute
/// are frozen here and cross-checked by the test suite.
#[derive(Clone, Debug)]
pub struct Expectations {
    pub nilpotent: bool,
    pub solvable: bool,
    pub nilradical_dim: usize,
    pub center_dim: usize,
    pub lower_central_dims: Vec<usize>,
    pub h2: Option<usize>,
    pub torus_rank: Option<usize>,
    pub completely_solvable: Option<bool>,
    /// Catalog key of the nilpotent algebra the nilradical is isomorphic
    /// to, with the name of the stored base change certifying it (`None`
    /// when the tables agree on the nose).
    pub nilradical_partner: Option<(&'static str, Option<&'static str>)>,
}

/// A validated algebra with its printed derivations, base changes and
/// expected invariants.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub algebra: LieAlgebra,
    pub named_derivations: BTreeMap<String, ExactMatrix>,
    pub base_changes: BTreeMap<String, ExactMatrix>,
    pub expectations: Expectations,
}

/// Lookup failure, listing what is available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownKey {
    pub requested: String,
}

impl fmt::Display for UnknownKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown catalog key `{}`; available: {}",
            self.requested,
            KEYS.join(", ")
        )
    }
}

impl core::error::Error for UnknownKey {}

/// Keys of the built-in algebras.
pub const KEYS: [&str; 7] = [
    "N6_6",
    "N6_7",
    "N6_12",
    "N6_14",
    "g1hat_r8_22_2",
    "g2hat_r8_22_normal",
    "r8_29_2",
];

pub fn catalog_keys() -> &'static [&'static str] {
    &KEYS
}

/// Returns the entry for a key, or an error naming the available keys.
pub fn catalog_get(key: &str) -> Result<CatalogEntry, UnknownKey> {
    match key {
        "N6_6" => Ok(n6_6()),
        "N6_7" => Ok(n6_7()),
        "N6_12" => Ok(n6_12()),
        "N6_14" => Ok(n6_14()),
        "g1hat_r8_22_2" => Ok(g1hat()),
        "g2hat_r8_22_normal" => Ok(g2hat()),
        "r8_29_2" => Ok(r8_29_2()),
        _ => Err(UnknownKey {
            requested: String::from(key),
        }),
    }
}

pub fn all_entries() -> Vec<CatalogEntry> {
    KEYS.iter().map(|k| catalog_get(k).unwrap()).collect()
}

// ---- private builders -------------------------------------------------

fn s(lit: &str) -> Scalar {
    Scalar::parse(lit).expect("catalog scalar literal")
}

/// Builds an algebra from 1-based bracket data `(i, j, [(coeff, k), ...])`.
fn algebra(name: &str, dim: usize, brackets: &[(usize, usize, &[(&str, usize)])]) -> LieAlgebra {
    let mut g = LieAlgebra::new(dim, Field::Q).with_name(name);
    for (i, j, terms) in brackets {
        let terms: Vec<(Scalar, usize)> = terms.iter().map(|(c, k)| (s(c), k - 1)).collect();
        g.add_bracket(i - 1, j - 1, &terms)
            .expect("catalog bracket data is in range");
    }
    g
}

/// Builds an n x n matrix from 1-based `(row, col, value)` entries.
fn matrix(n: usize, entries: &[(usize, usize, &str)]) -> ExactMatrix {
    let field = if entries.iter().any(|(_, _, v)| v.contains('i')) {
        Field::QI
    } else {
        Field::Q
    };
    let mut m = ExactMatrix::zeros(n, n, field);
    for (r, c, v) in entries {
        m.set(r - 1, c - 1, s(v));
    }
    m
}

/// Diagonal matrix from 1-based position order.
fn diag(values: &[&str]) -> ExactMatrix {
    ExactMatrix::from_diag(values.iter().map(|v| s(v)).collect())
}

fn n6_6() -> CatalogEntry {
    let algebra = algebra(
        "N6_6",
        6,
        &[
            (1, 2, &[("1", 3)]),
            (1, 3, &[("1", 4)]),
            (1, 4, &[("1", 5)]),
            (3, 2, &[("1", 6)]),
            (6, 2, &[("1", 5)]),
        ],
    );
    let mut named_derivations = BTreeMap::new();
    named_derivations.insert(
        String::from("f1_1"),
        diag(&["1", "1", "2", "3", "4", "3"]),
    );
    named_derivations.insert(
        String::from("f1_2"),
        matrix(6, &[(2, 1, "1"), (1, 2, "-1"), (6, 4, "-1"), (4, 6, "1")]),
    );
    CatalogEntry {
        key: "N6_6",
        algebra,
        named_derivations,
        base_changes: BTreeMap::new(),
        expectations: Expectations {
            nilpotent: true,
            solvable: true,
            nilradical_dim: 6,
            center_dim: 1,
            lower_central_dims: vec![6, 4, 3, 1, 0],
            h2: None,
            torus_rank: Some(1),
            completely_solvable: Some(true),
            nilradical_partner: None,
        },
    }
}

fn n6_7() -> CatalogEntry {
    let algebra = algebra(
        "N6_7",
        6,
        &[
            (1, 2, &[("1", 3)]),
            (1, 3, &[("1", 4)]),
            (1, 4, &[("1", 5)]),
            (3, 2, &[("-1", 6)]),
            (6, 2, &[("1", 5)]),
        ],
    );
    let mut named_derivations = BTreeMap::new();
    let g1_1 = diag(&["1", "1", "2", "3", "4", "3"]);
    let g1_2 = matrix(6, &[(2, 1, "1"), (1, 2, "1"), (6, 4, "1"), (4, 6, "1")]);
    let half = s("1/2");
    let f2_1 = g1_1.scale(&s("3")).add(&g1_2).scale(&half);
    let f2_2 = g1_1.add(&g1_2).scale(&half);
    named_derivations.insert(String::from("g1_1"), g1_1);
    named_derivations.insert(String::from("g1_2"), g1_2);
    named_derivations.insert(String::from("f2_1"), f2_1);
    named_derivations.insert(String::from("f2_2"), f2_2);

    let mut base_changes = BTreeMap::new();
    // Eigenbasis of the rank-2 torus: columns are the primed basis vectors
    // in original coordinates.
    base_changes.insert(
        String::from("xprime"),
        matrix(
            6,
            &[
                (1, 1, "1/2"),
                (2, 1, "-1/2"),
                (1, 2, "1/2"),
                (2, 2, "1/2"),
                (3, 3, "1/2"),
                (4, 4, "1/4"),
                (6, 4, "-1/4"),
                (4, 5, "1/4"),
                (6, 5, "1/4"),
                (5, 6, "1/4"),
            ],
        ),
    );
    // Transporting the complexified table along diag(1,i,i,i,i,1) lands on
    // the complexified N6_6 table.
    base_changes.insert(
        String::from("to_complex_n6_6"),
        diag(&["1", "i", "i", "i", "i", "1"]),
    );
    CatalogEntry {
        key: "N6_7",
        algebra,
        named_derivations,
        base_changes,
        expectations: Expectations {
            nilpotent: true,
            solvable: true,
            nilradical_dim: 6,
            center_dim: 1,
            lower_central_dims: vec![6, 4, 3, 1, 0],
            h2: None,
            torus_rank: Some(2),
            completely_solvable: Some(true),
            nilradical_partner: None,
        },
    }
}

fn n6_12() -> CatalogEntry {
    let algebra = algebra(
        "N6_12",
        6,
        &[
            (1, 2, &[("1", 4)]),
            (1, 3, &[("1", 5)]),
            (1, 4, &[("1", 5)]),
            (2, 4, &[("1", 6)]),
        ],
    );
    CatalogEntry {
        key: "N6_12",
        algebra,
        named_derivations: BTreeMap::new(),
        base_changes: BTreeMap::new(),
        expectations: Expectations {
            nilpotent: true,
            solvable: true,
            nilradical_dim: 6,
            center_dim: 2,
            lower_central_dims: vec![6, 3, 2, 0],
            h2: None,
            torus_rank: Some(2),
            completely_solvable: Some(true),
            nilradical_partner: None,
        },
    }
}

fn n6_14() -> CatalogEntry {
    let algebra = algebra(
        "N6_14",
        6,
        &[
            (1, 2, &[("1", 4)]),
            (1, 3, &[("1", 5)]),
            (1, 4, &[("1", 6)]),
            (2, 3, &[("1", 6)]),
            (2, 4, &[("-1", 5)]),
        ],
    );
    CatalogEntry {
        key: "N6_14",
        algebra,
        named_derivations: BTreeMap::new(),
        base_changes: BTreeMap::new(),
        expectations: Expectations {
            nilpotent: true,
            solvable: true,
            nilradical_dim: 6,
            center_dim: 2,
            lower_central_dims: vec![6, 3, 2, 0],
            h2: None,
            torus_rank: Some(1),
            completely_solvable: Some(true),
            nilradical_partner: None,
        },
    }
}

fn g1hat() -> CatalogEntry {
    let algebra = algebra(
        "r8_22^2",
        8,
        &[
            (1, 2, &[("1", 3)]),
            (1, 3, &[("1", 4)]),
            (1, 4, &[("1", 5)]),
            (3, 2, &[("1", 6)]),
            (6, 2, &[("1", 5)]),
            (7, 1, &[("1", 1)]),
            (7, 2, &[("1", 2)]),
            (7, 3, &[("2", 3)]),
            (7, 4, &[("3", 4)]),
            (7, 5, &[("4", 5)]),
            (7, 6, &[("3", 6)]),
            (8, 1, &[("1", 2)]),
            (8, 2, &[("-1", 1)]),
            (8, 4, &[("-1", 6)]),
            (8, 6, &[("1", 4)]),
        ],
    );
    CatalogEntry {
        key: "g1hat_r8_22_2",
        algebra,
        named_derivations: BTreeMap::new(),
        base_changes: BTreeMap::new(),
        expectations: Expectations {
            nilpotent: false,
            solvable: true,
            nilradical_dim: 6,
            center_dim: 0,
            lower_central_dims: vec![8, 6],
            h2: Some(0),
            torus_rank: Some(1),
            completely_solvable: Some(false),
            nilradical_partner: Some(("N6_6", None)),
        },
    }
}

fn g2hat() -> CatalogEntry {
    let algebra = algebra(
        "r8_22 (normal form)",
        8,
        &[
            (1, 2, &[("1", 3)]),
            (1, 3, &[("1", 4)]),
            (1, 5, &[("1", 6)]),
            (3, 2, &[("-1", 5)]),
            (2, 4, &[("1", 6)]),
            (7, 1, &[("1", 1)]),
            (7, 2, &[("1", 2)]),
            (7, 3, &[("1", 3)]),
            (7, 4, &[("1", 4)]),
            (7, 5, &[("1", 5)]),
            (7, 6, &[("1", 6)]),
            (8, 2, &[("1", 2)]),
            (8, 3, &[("1", 3)]),
            (8, 4, &[("1", 4)]),
            (8, 5, &[("2", 5)]),
            (8, 6, &[("2", 6)]),
        ],
    );
    CatalogEntry {
        key: "g2hat_r8_22_normal",
        algebra,
        named_derivations: BTreeMap::new(),
        base_changes: BTreeMap::new(),
        expectations: Expectations {
            nilpotent: false,
            solvable: true,
            nilradical_dim: 6,
            center_dim: 0,
            lower_central_dims: vec![8, 6],
            h2: Some(0),
            torus_rank: Some(2),
            completely_solvable: Some(true),
            nilradical_partner: Some(("N6_7", Some("xprime"))),
        },
    }
}

fn r8_29_2() -> CatalogEntry {
    let algebra = algebra(
        "r8_29^2",
        8,
        &[
            (1, 2, &[("1", 4)]),
            (1, 3, &[("1", 5)]),
            (1, 4, &[("1", 6)]),
            (2, 3, &[("1", 6)]),
            (2, 4, &[("-1", 5)]),
            (7, 1, &[("1", 1)]),
            (7, 2, &[("1", 2)]),
            (7, 3, &[("2", 3)]),
            (7, 4, &[("2", 4)]),
            (7, 5, &[("3", 5)]),
            (7, 6, &[("3", 6)]),
            (8, 1, &[("1", 2)]),
            (8, 2, &[("-1", 1)]),
            (8, 5, &[("1", 6)]),
            (8, 6, &[("-1", 5)]),
        ],
    );
    CatalogEntry {
        key: "r8_29_2",
        algebra,
        named_derivations: BTreeMap::new(),
        base_changes: BTreeMap::new(),
        expectations: Expectations {
            nilpotent: false,
            solvable: true,
            nilradical_dim: 6,
            center_dim: 0,
            lower_central_dims: vec![8, 6],
            h2: Some(0),
            torus_rank: Some(1),
            completely_solvable: Some(false),
            nilradical_partner: Some(("N6_14", None)),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{SeriesKind, SeriesVerdict};

    #[test]
    fn unknown_key_lists_options() {
        let err = catalog_get("nope").unwrap_err();
        let msg = alloc::format!("{err}");
        assert!(msg.contains("N6_6") && msg.contains("r8_29_2"));
    }

    #[test]
    fn every_entry_satisfies_jacobi() {
        for entry in all_entries() {
            assert!(
                entry.algebra.validate().is_empty(),
                "{} violates the Jacobi identity",
                entry.key
            );
        }
    }

    #[test]
    fn series_match_frozen_dims() {
        for entry in all_entries() {
            let report = entry.algebra.series(SeriesKind::LowerCentral);
            assert_eq!(
                report.dims, entry.expectations.lower_central_dims,
                "{}",
                entry.key
            );
            assert_eq!(
                matches!(report.verdict, SeriesVerdict::Nilpotent { .. }),
                entry.expectations.nilpotent,
                "{}",
                entry.key
            );
            assert_eq!(
                entry.algebra.is_solvable(),
                entry.expectations.solvable,
                "{}",
                entry.key
            );
        }
    }

    #[test]
    fn centers_match() {
        for entry in all_entries() {
            assert_eq!(
                entry.algebra.center().dim(),
                entry.expectations.center_dim,
                "{}",
                entry.key
            );
        }
    }

    #[test]
    fn printed_bracket_samples() {
        let g = catalog_get("N6_12").unwrap().algebra;
        // [X1,X2]=X4, [X1,X3]=X5, [X1,X4]=X5, [X2,X4]=X6.
        assert_eq!(g.bracket_basis(0, 1)[3], Scalar::from_int(1));
        assert_eq!(g.bracket_basis(0, 2)[4], Scalar::from_int(1));
        assert_eq!(g.bracket_basis(0, 3)[4], Scalar::from_int(1));
        assert_eq!(g.bracket_basis(1, 3)[5], Scalar::from_int(1));

        let r = catalog_get("r8_29_2").unwrap().algebra;
        // [X8,X5]=X6 and [X8,X6]=-X5.
        assert_eq!(r.bracket_basis(7, 4)[5], Scalar::from_int(1));
        assert_eq!(r.bracket_basis(7, 5)[4], Scalar::from_int(-1));
    }
}
