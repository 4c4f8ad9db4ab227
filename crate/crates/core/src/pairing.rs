//! Pairing two cyclic covers into a surface candidate.
//!
//! A quadruple `(m, a, b)` pairs a cover family `C` (branch data `a`, at
//! least four points) with a fixed cover `D` (branch data `b`) of the same
//! degree. The diagonal action of the degree-`m` cyclic group on `C x D`
//! yields a quotient surface; the quadruples kept by this crate are exactly
//! those whose quotient has a one-dimensional space of holomorphic 2-forms
//! ([`h20`] equal to 1).
//!
//! [`Quadruple::canonicalize`] sorts and validates raw input, scaling both
//! tuples by a common unit to reach the normalized sums `(2m, m)` when the
//! `b` tuple is a triple, and falling back to the direct Hodge-number test
//! otherwise. [`check_matching`] is the fast arithmetic form of the `h20`
//! condition for normalized triples.

use crate::arith::{self, frac_part_of, Rational};
use crate::cover::CoverData;
use crate::error::{Error, RejectReason, Result};

/// Which validation route accepted a quadruple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    /// Normalized data: `sum(a) = 2m`, `b` a triple with `sum(b) = m`,
    /// accepted by the eigenvalue-distribution and matching tests.
    Normalized,
    /// Accepted directly by the Hodge-number test `h20 = 1`.
    Generalized,
}

impl std::fmt::Display for PairKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PairKind::Normalized => write!(f, "normalized"),
            PairKind::Generalized => write!(f, "generalized"),
        }
    }
}

/// A validated surface candidate `(m, a, b)`.
///
/// Invariants: both covers share the degree `m`, both exponent tuples are
/// sorted ascending, the `a` tuple has at least four entries, and the
/// quotient surface has exactly one independent holomorphic 2-form, carried
/// by the character stored in [`Quadruple::j0`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadruple {
    a: CoverData,
    b: CoverData,
    kind: PairKind,
    j0: i64,
}

/// Matching test for a normalized pair: with `a` sorted and summing to
/// `2m`, a sorted triple `b` (entries in `[1, m)`, connected) matches
/// exactly when `sum(b) = m` and for every residue `j` outside
/// `{0, 1, -1}` with a positive 1-form multiplicity on the `a` side,
/// `sum_k frac(j * b_k / m) = 1`.
///
/// Unnormalized `a` data or a `b` tuple that is not a sorted triple is a
/// domain error; a failing condition returns `false`.
pub fn check_matching(a: &CoverData, b: &CoverData) -> Result<bool> {
    let m = a.m();
    if b.m() != m {
        return Err(Error::domain(format!(
            "degree mismatch: a has m = {m}, b has m = {}",
            b.m()
        )));
    }
    if a.exps().windows(2).any(|w| w[0] > w[1]) || a.exps().iter().sum::<i64>() != 2 * m {
        return Err(Error::domain(format!(
            "matching test needs sorted a with sum 2m, got {a}"
        )));
    }
    if b.n_points() != 3 || b.exps().windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::domain(format!(
            "matching test needs a sorted triple for b, got {b}"
        )));
    }
    if b.exps().iter().sum::<i64>() != m {
        return Ok(false);
    }
    for j in 2..m - 1 {
        if a.eigen_mult(j) == 0 {
            continue;
        }
        let total: Rational = b.exps().iter().map(|&bk| frac_part_of(j * bk, m)).sum();
        if total != Rational::from_integer(1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the space of holomorphic 2-forms on the quotient of
/// `C x D` by the diagonal cyclic action:
/// `sum_j m_C(j) * m_D(-j)` over residues `j` mod `m`.
pub fn h20(a: &CoverData, b: &CoverData) -> Result<i64> {
    let m = a.m();
    if b.m() != m {
        return Err(Error::domain(format!(
            "degree mismatch: a has m = {m}, b has m = {}",
            b.m()
        )));
    }
    Ok((0..m).map(|j| a.eigen_mult(j) * b.eigen_mult(-j)).sum())
}

impl Quadruple {
    /// Validate raw data into canonical form.
    ///
    /// Both tuples are sorted. When `b` is a triple, the normalized route is
    /// tried first: some unit `u` mod `m` must scale the pair simultaneously
    /// to `sum(a) = 2m` and `sum(b) = m` (the identity is preferred, then
    /// the lexicographically least scaled pair), after which the
    /// eigenvalue-distribution test on `a` and the matching test on the pair
    /// must hold. When no unit normalizes the sums — in particular whenever
    /// `b` has four or more entries — the pair is accepted as
    /// [`PairKind::Generalized`] if its Hodge number [`h20`] is exactly 1.
    pub fn canonicalize(m: i64, a_raw: &[i64], b_raw: &[i64]) -> Result<Self> {
        let mut a_exps = a_raw.to_vec();
        a_exps.sort_unstable();
        let mut b_exps = b_raw.to_vec();
        b_exps.sort_unstable();
        if a_exps.len() < 4 {
            return Err(Error::Rejected(RejectReason::Range(format!(
                "the a tuple needs at least 4 entries, got {}",
                a_exps.len()
            ))));
        }
        let a = CoverData::primitive(m, a_exps)?;
        let b = CoverData::primitive(m, b_exps)?;

        let mut normalized_failure: Option<Error> = None;
        if b.n_points() == 3 && m >= 3 {
            // Candidate unit scalings that reach the normalized sums,
            // identity first, then lexicographic on the scaled pair.
            let mut candidates: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
            for u in 1..m {
                if arith::gcd(u, m) != 1 {
                    continue;
                }
                let mut ua: Vec<i64> = a.exps().iter().map(|&x| x * u % m).collect();
                ua.sort_unstable();
                let mut ub: Vec<i64> = b.exps().iter().map(|&x| x * u % m).collect();
                ub.sort_unstable();
                if ua.iter().sum::<i64>() == 2 * m && ub.iter().sum::<i64>() == m {
                    let cand = (ua, ub);
                    if u == 1 {
                        candidates.insert(0, cand);
                    } else if !candidates.contains(&cand) {
                        candidates.push(cand);
                    }
                }
            }
            if candidates.len() > 1 {
                let ident = candidates[0].clone();
                candidates[1..].sort();
                candidates.dedup();
                if let Some(pos) = candidates.iter().position(|c| *c == ident) {
                    if pos > 0 {
                        candidates.remove(pos);
                        candidates.insert(0, ident);
                    }
                }
            }
            for (ua, ub) in candidates {
                let ca = CoverData::primitive(m, ua)?;
                let cb = CoverData::primitive(m, ub)?;
                if !ca.is_ball()? {
                    normalized_failure.get_or_insert(Error::Rejected(RejectReason::Hodge(
                        format!("eigenvalue distribution test fails for a = {ca}"),
                    )));
                    continue;
                }
                if !check_matching(&ca, &cb)? {
                    normalized_failure.get_or_insert(Error::Rejected(RejectReason::Hodge(
                        format!("matching test fails for {ca} with {cb}"),
                    )));
                    continue;
                }
                let h = h20(&ca, &cb)?;
                if h != 1 {
                    return Err(Error::inconsistency(format!(
                        "normalized pair {ca}, {cb} passed matching but h20 = {h}"
                    )));
                }
                return Ok(Quadruple {
                    a: ca,
                    b: cb,
                    kind: PairKind::Normalized,
                    j0: m - 1,
                });
            }
        }

        // Generalized route on the data as given.
        let h = h20(&a, &b)?;
        if h == 1 {
            let j0 = (0..m)
                .find(|&j| a.eigen_mult(j) * b.eigen_mult(-j) == 1)
                .expect("h20 = 1 forces a unique contributing character");
            return Ok(Quadruple {
                a,
                b,
                kind: PairKind::Generalized,
                j0,
            });
        }
        Err(normalized_failure.unwrap_or(Error::Rejected(RejectReason::Hodge(format!(
            "h^(2,0) = {h}, need exactly 1"
        )))))
    }

    /// Build a quadruple that is already in canonical form, verifying that
    /// canonicalization is the identity on it.
    pub fn from_canonical(m: i64, a: &[i64], b: &[i64]) -> Result<Self> {
        let q = Self::canonicalize(m, a, b)?;
        if q.a.exps() != a || q.b.exps() != b {
            return Err(Error::domain(format!(
                "data is not in canonical form: canonicalizes to {q}"
            )));
        }
        Ok(q)
    }

    /// Common degree of the two covers.
    pub fn m(&self) -> i64 {
        self.a.m()
    }

    /// Branch data of the moving cover family.
    pub fn a(&self) -> &CoverData {
        &self.a
    }

    /// Branch data of the fixed cover.
    pub fn b(&self) -> &CoverData {
        &self.b
    }

    /// Which validation route accepted the quadruple.
    pub fn kind(&self) -> PairKind {
        self.kind
    }

    /// The unique character `j0` with `m_C(j0) * m_D(-j0) = 1`, carrying
    /// the surface's 2-form. Equals `m - 1` on the normalized route.
    pub fn j0(&self) -> i64 {
        self.j0
    }

    /// Hodge number `h^{2,0}` of the quotient surface; 1 by construction.
    pub fn h20(&self) -> i64 {
        h20(&self.a, &self.b).expect("same degree by construction")
    }

    /// Rank of the generic transcendental lattice of the family:
    /// `phi(m) * (N - 2) * (N' - 2)`.
    pub fn transcendental_rank(&self) -> i64 {
        let n = self.a.n_points() as i64;
        let np = self.b.n_points() as i64;
        arith::euler_phi(self.m()) * (n - 2) * (np - 2)
    }

    /// Sufficient numeric criterion for the minimal model to be K3: the
    /// product of the two linear growth constants stays below `m/2`.
    /// `false` is inconclusive, never a verdict of general type.
    pub fn quick_k3(&self) -> bool {
        2 * self.a.delta_growth() * self.b.delta_growth() < self.m()
    }

    /// Upper-bound pairing for `k`-fold pluricanonical forms:
    /// `sum_j m^k_C(j) * m^k_D(-j)`. Equals [`Quadruple::h20`] at `k = 1`.
    /// Propagates the formula-domain error when either cover's power
    /// multiplicities leave the closed formula's domain.
    pub fn pluri_bound(&self, k: i64) -> Result<i64> {
        let m = self.m();
        let mut total = 0;
        for j in 0..m {
            total += self.a.eigen_mult_k(j, k)? * self.b.eigen_mult_k(-j, k)?;
        }
        Ok(total)
    }
}

impl std::fmt::Display for Quadruple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(m = {}, a = {}, b = {})", self.m(), self.a, self.b)
    }
}
