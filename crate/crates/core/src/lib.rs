//! Catalog engine for quotient surfaces built from pairs of cyclic covers
//! of the projective line.
//!
//! A *quadruple* `(m, N, a, b)` specifies two degree-`m` cyclic covers:
//! one branched over `N` points with exponent tuple `a`, one over three
//! (or more) points with exponent tuple `b`. When the quotient of the
//! product of the two curves by the diagonal cyclic action carries
//! exactly one independent holomorphic 2-form, the resolved quotient is a
//! surface with trivial-or-ample canonical class — a K3 surface or a
//! surface of general type — and this crate computes which, together with
//! every intermediate invariant:
//!
//! - [`cover`] — branch data, genus, and eigenspace dimensions of a
//!   single cyclic cover;
//! - [`pairing`] — validation and canonicalization of quadruples via the
//!   eigenvalue-distribution and matching tests, or directly by the Hodge
//!   number `h^{2,0} = 1`;
//! - [`surface`] — cyclic quotient singularities of the quotient surface,
//!   their continued-fraction resolutions, `K^2`, and the Euler number;
//! - [`minmodel`] — the exceptional/fiber component graph, iterated
//!   blow-down to a minimal model, and the K3 / general-type verdict;
//! - [`search`] — exhaustive, optionally parallel enumeration of all
//!   valid quadruples within bounds;
//! - [`reference`] — the frozen catalog of 150 normalized and 4
//!   generalized quadruples that the pipeline reproduces.
//!
//! The top-level entry points are [`analyze`] (one validated quadruple to
//! a full [`SurfaceRecord`]) and [`search::enumerate_quadruples`] (bounds
//! to a sorted catalog of records).
//!
//! # Example
//!
//! ```
//! use pqsurf::{analyze_data, Classification};
//!
//! let record = analyze_data(4, &[1, 1, 3, 3], &[1, 1, 2]).unwrap();
//! assert_eq!(record.g_c, 3);
//! assert_eq!(record.k2_resolution, -4);
//! assert_eq!(record.k2_minimal, 0);
//! assert_eq!(record.classification, Classification::K3);
//! ```
//!
//! All arithmetic is exact (64-bit integers and rationals); any internal
//! identity that fails to hold is reported as
//! [`Error::Inconsistency`](error::Error::Inconsistency) rather than
//! silently absorbed.

pub mod arith;
pub mod cover;
pub mod error;
pub mod minmodel;
pub mod pairing;
pub mod reference;
pub mod search;
pub mod surface;

pub use cover::CoverData;
pub use error::{Error, RejectReason, Result};
pub use minmodel::{BlowdownOutcome, Classification, ComponentGraph};
pub use pairing::{PairKind, Quadruple};
pub use search::{Catalog, SearchBounds};
pub use surface::SurfaceModel;

use minmodel::minimal_k2;

/// Every invariant the pipeline computes for one accepted quadruple.
///
/// Produced by [`analyze`]; the search catalog is a sorted vector of
/// these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceRecord {
    /// Degree of the two cyclic covers.
    pub m: i64,
    /// Sorted exponent tuple of the `N`-point cover.
    pub a: Vec<i64>,
    /// Sorted exponent tuple of the partner cover.
    pub b: Vec<i64>,
    /// Which validation route accepted the quadruple.
    pub kind: PairKind,
    /// Genus of the curve with branch data `a`.
    pub g_c: i64,
    /// Genus of the curve with branch data `b`.
    pub g_d: i64,
    /// Dimension of the new part of the weight-1 Hodge structure on the
    /// `a` curve: `(N - 2) phi(m) / 2`.
    pub g_new: i64,
    /// Linear growth constant `2 g_C - 2` of the `a` curve.
    pub delta_c: i64,
    /// Linear growth constant `2 g_D - 2` of the partner curve.
    pub delta_d: i64,
    /// Rank of the generic transcendental lattice of the family.
    pub transcendental_rank: i64,
    /// Self-intersection of the canonical class on the resolved quotient.
    pub k2_resolution: i64,
    /// Topological Euler number of the resolved quotient.
    pub euler: i64,
    /// Number of blow-downs from the resolution to the minimal model.
    pub blowdowns: i64,
    /// `K^2` of the minimal model.
    pub k2_minimal: i64,
    /// K3 or general type, decided by `k2_minimal`.
    pub classification: Classification,
    /// Whether the sufficient numeric K3 criterion already fired.
    pub quick_k3: bool,
    /// `true` when the quadruple is absent from the reference catalog.
    pub extra: bool,
}

impl SurfaceRecord {
    /// Number of branch points of the `a`-side cover.
    pub fn point_count(&self) -> usize {
        self.a.len()
    }
}

/// Run the full pipeline on a validated quadruple: build the quotient
/// surface model, resolve, compute `K^2` and the Euler number, blow down
/// to the minimal model, and classify.
///
/// Internal cross-checks (Noether's formula `K^2 + e = 24`, agreement of
/// the numeric K3 shortcut with the final verdict) are enforced; a
/// violation is an [`Error::Inconsistency`], never a silent record.
pub fn analyze(quad: &Quadruple) -> Result<SurfaceRecord> {
    let model = SurfaceModel::build(quad)?;
    let k2_resolution = model.k2_resolution()?;
    let euler = model.euler_characteristic()?;
    if k2_resolution + euler != 24 {
        return Err(Error::inconsistency(format!(
            "Noether's formula fails on {quad}: K^2 = {k2_resolution}, e = {euler}"
        )));
    }
    let (k2_minimal, outcome) = minimal_k2(&model)?;
    let classification = minmodel::classify(k2_minimal)?;
    let quick_k3 = quad.quick_k3();
    if quick_k3 && classification != Classification::K3 {
        return Err(Error::inconsistency(format!(
            "numeric K3 criterion contradicts the blow-down verdict on {quad}"
        )));
    }
    let extra = reference::lookup(quad.m(), quad.a().exps(), quad.b().exps()).is_none();
    Ok(SurfaceRecord {
        m: quad.m(),
        a: quad.a().exps().to_vec(),
        b: quad.b().exps().to_vec(),
        kind: quad.kind(),
        g_c: quad.a().genus(),
        g_d: quad.b().genus(),
        g_new: quad.a().genus_new(),
        delta_c: quad.a().delta_growth(),
        delta_d: quad.b().delta_growth(),
        transcendental_rank: quad.transcendental_rank(),
        k2_resolution,
        euler,
        blowdowns: outcome.contractions,
        k2_minimal,
        classification,
        quick_k3,
        extra,
    })
}

/// Canonicalize raw `(m, a, b)` data and [`analyze`] the result.
pub fn analyze_data(m: i64, a: &[i64], b: &[i64]) -> Result<SurfaceRecord> {
    let quad = Quadruple::canonicalize(m, a, b)?;
    analyze(&quad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_first_reference_row() {
        let record = analyze_data(3, &[1, 1, 2, 2], &[1, 1, 1]).unwrap();
        assert_eq!(record.m, 3);
        assert_eq!(record.kind, PairKind::Normalized);
        assert_eq!(record.g_c, 2);
        assert_eq!(record.g_d, 1);
        assert_eq!(record.g_new, 2);
        assert_eq!((record.delta_c, record.delta_d), (2, 0));
        assert_eq!(record.transcendental_rank, 4);
        assert_eq!(record.k2_resolution, -2);
        assert_eq!(record.euler, 26);
        assert_eq!(record.blowdowns, 2);
        assert_eq!(record.k2_minimal, 0);
        assert_eq!(record.classification, Classification::K3);
        assert!(record.quick_k3);
        assert!(!record.extra);
    }

    #[test]
    fn analyze_general_type_anchor() {
        let record = analyze_data(14, &[1, 9, 9, 9], &[3, 4, 7]).unwrap();
        assert_eq!(record.k2_resolution, -9);
        assert_eq!(record.euler, 33);
        assert_eq!(record.blowdowns, 12);
        assert_eq!(record.k2_minimal, 3);
        assert_eq!(record.classification, Classification::GeneralType);
        assert!(!record.quick_k3);
        assert!(!record.extra);
    }

    #[test]
    fn analyze_generalized_rows() {
        let record = analyze_data(4, &[1, 1, 1, 1], &[1, 1, 1, 1]).unwrap();
        assert_eq!(record.kind, PairKind::Generalized);
        assert_eq!(record.k2_resolution, -8);
        assert_eq!(record.euler, 32);
        assert_eq!(record.blowdowns, 8);
        assert_eq!(record.k2_minimal, 0);
        assert_eq!(record.classification, Classification::K3);
        assert!(!record.extra);

        let record = analyze_data(6, &[1, 1, 1, 3], &[1, 1, 2, 2]).unwrap();
        assert_eq!(record.kind, PairKind::Generalized);
        assert_eq!(record.k2_resolution, -6);
        assert_eq!(record.euler, 30);
        assert_eq!(record.blowdowns, 7);
        assert_eq!(record.k2_minimal, 1);
        assert_eq!(record.classification, Classification::GeneralType);
        assert!(!record.extra);
    }

    #[test]
    fn analyze_rejects_bad_data() {
        assert!(matches!(
            analyze_data(14, &[1, 9, 9, 9], &[1, 6, 7]),
            Err(Error::Rejected(RejectReason::Hodge(_)))
        ));
        assert!(matches!(
            analyze_data(14, &[1, 9, 9, 8], &[3, 4, 7]),
            Err(Error::Rejected(RejectReason::Sum(_)))
        ));
    }
}
