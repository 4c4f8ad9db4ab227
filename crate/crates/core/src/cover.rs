//! Branch data for cyclic covers of the projective line.
//!
//! A cover is recorded by its degree `m` and the tuple of branch exponents
//! `(a_1, ..., a_N)`: the smooth projective curve with affine model
//! `y^m = (x - t_1)^{a_1} ... (x - t_N)^{a_N}`. Every invariant computed
//! here depends only on `(m, a)`, never on the branch point positions.
//!
//! Provides the genus ([`CoverData::genus`]), the eigenvalue multiplicities
//! of the cyclic action on holomorphic 1-forms ([`CoverData::eigen_mult`])
//! and on `k`-fold pluricanonical forms ([`CoverData::eigen_mult_k`]),
//! intermediate quotient covers ([`CoverData::quotient_cover`]), the
//! linear growth constant ([`CoverData::delta_growth`]), and the
//! eigenvalue-distribution test ([`CoverData::is_ball`]) that singles out
//! tuples whose family of covers has a ball-quotient period domain.

use crate::arith::{self, frac_part_of, Rational};
use crate::error::{Error, RejectReason, Result};

/// Degree and branch exponents of a cyclic cover of the line.
///
/// Invariants (enforced on construction): `m >= 1`, every exponent lies in
/// `[0, m)`, the exponent sum is divisible by `m` (no hidden branching at
/// infinity), and `gcd(m, a_1, ..., a_N) = 1` (the cover is connected).
/// A zero exponent marks a point where the cover is unbranched; such
/// entries appear in quotient data and keep the point count stable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverData {
    m: i64,
    exps: Vec<i64>,
}

impl CoverData {
    /// Build cover data, allowing zero exponents (unbranched markers).
    pub fn new(m: i64, exps: Vec<i64>) -> Result<Self> {
        if m < 1 {
            return Err(Error::Rejected(RejectReason::Range(format!(
                "degree m = {m} must be at least 1"
            ))));
        }
        if exps.is_empty() {
            return Err(Error::Rejected(RejectReason::Range(
                "exponent tuple must be nonempty".into(),
            )));
        }
        if let Some(bad) = exps.iter().find(|&&a| a < 0 || a >= m) {
            return Err(Error::Rejected(RejectReason::Range(format!(
                "exponent {bad} outside [0, {m})"
            ))));
        }
        let sum: i64 = exps.iter().sum();
        if sum % m != 0 {
            return Err(Error::Rejected(RejectReason::Sum(format!(
                "exponent sum {sum} is not divisible by m = {m}"
            ))));
        }
        let g = exps.iter().fold(m, |acc, &a| arith::gcd(acc, a));
        if g != 1 {
            return Err(Error::Rejected(RejectReason::Gcd(format!(
                "gcd(m, exponents) = {g} must be 1 (cover must be connected)"
            ))));
        }
        Ok(CoverData { m, exps })
    }

    /// Build primitive cover data: degree at least 2, at least three branch
    /// points, every exponent nonzero.
    pub fn primitive(m: i64, exps: Vec<i64>) -> Result<Self> {
        if m < 2 {
            return Err(Error::Rejected(RejectReason::Range(format!(
                "degree m = {m} must be at least 2"
            ))));
        }
        if exps.len() < 3 {
            return Err(Error::Rejected(RejectReason::Range(format!(
                "need at least 3 branch points, got {}",
                exps.len()
            ))));
        }
        if let Some(bad) = exps.iter().find(|&&a| a < 1 || a >= m) {
            return Err(Error::Rejected(RejectReason::Range(format!(
                "exponent {bad} outside [1, {m})"
            ))));
        }
        Self::new(m, exps)
    }

    /// Degree of the cover.
    pub fn m(&self) -> i64 {
        self.m
    }

    /// Branch exponents.
    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    /// Number of marked points `N` (zero exponents included).
    pub fn n_points(&self) -> usize {
        self.exps.len()
    }

    /// True when the data is primitive: degree `>= 2`, `N >= 3`, all
    /// exponents nonzero.
    pub fn is_primitive(&self) -> bool {
        self.m >= 2 && self.exps.len() >= 3 && self.exps.iter().all(|&a| a > 0)
    }

    /// `gcd(m, a_i)` with the convention `gcd(m, 0) = m`.
    fn point_gcd(&self, i: usize) -> i64 {
        let a = self.exps[i];
        if a == 0 {
            self.m
        } else {
            arith::gcd(self.m, a)
        }
    }

    /// Genus of the (connected, smooth, projective) cover.
    pub fn genus(&self) -> i64 {
        let n = self.exps.len() as i64;
        let branch: i64 = (0..self.exps.len()).map(|i| self.point_gcd(i)).sum();
        let num = (n - 2) * self.m - branch;
        assert!(num % 2 == 0, "genus parity violated for {self}");
        let g = 1 + num / 2;
        assert!(g >= 0, "negative genus for {self}");
        g
    }

    /// Genus of the subspace of 1-forms on which the cyclic action is by a
    /// primitive character: `(N - 2) * phi(m) / 2`.
    pub fn genus_new(&self) -> i64 {
        let n = self.exps.len() as i64;
        let num = (n - 2) * arith::euler_phi(self.m);
        assert!(num % 2 == 0, "new-part parity violated for {self}");
        num / 2
    }

    /// Multiplicity of the character `j` in the cyclic action on
    /// holomorphic 1-forms:
    /// `m(j) = -1 + sum_i <  -j * a_i / m  >` plus `1` when `j = 0 mod m`.
    ///
    /// Accepts any integer `j` (reduced mod `m`). The multiplicities sum to
    /// the genus over `j = 0, ..., m-1`.
    pub fn eigen_mult(&self, j: i64) -> i64 {
        let mut v = Rational::from_integer(-1);
        for &a in &self.exps {
            v += frac_part_of(-j * a, self.m);
        }
        if j.rem_euclid(self.m) == 0 {
            v += Rational::from_integer(1);
        }
        assert!(v.is_integer() && v >= Rational::from_integer(0), "eigenvalue multiplicity {v} invalid for {self}, j = {j}");
        v.to_integer()
    }

    /// Multiplicity of the character `j` on `k`-fold pluricanonical forms.
    ///
    /// For `k = 1` this agrees with [`CoverData::eigen_mult`]. The closed
    /// formula is valid only where it evaluates non-negatively; on covers of
    /// genus `<= 1` it can go negative for some `j`, and that case is
    /// reported as a domain error rather than clamped.
    pub fn eigen_mult_k(&self, j: i64, k: i64) -> Result<i64> {
        if k < 1 {
            return Err(Error::domain(format!("power k = {k} must be at least 1")));
        }
        let n = self.exps.len() as i64;
        let mut delta = (1 - n) + (n - 2) * k;
        if k == 1 && j.rem_euclid(self.m) == 0 {
            delta += 1;
        }
        let mut v = Rational::from_integer(delta);
        for i in 0..self.exps.len() {
            let a = self.exps[i];
            let g = self.point_gcd(i);
            v += frac_part_of((k - 1) * g - j * a, self.m) - Rational::new((k - 1) * g, self.m);
        }
        if !v.is_integer() {
            return Err(Error::inconsistency(format!(
                "non-integral power multiplicity {v} for {self}, j = {j}, k = {k}"
            )));
        }
        let v = v.to_integer();
        if v < 0 {
            return Err(Error::domain(format!(
                "power-multiplicity formula leaves its domain on {self} (j = {j}, k = {k}: value {v}); \
                 the cover has too small a genus for the closed formula"
            )));
        }
        Ok(v)
    }

    /// Branch data of the intermediate cover of degree `d | m`
    /// (the quotient by the subgroup of index `d`): exponents reduce mod
    /// `d`, and points whose exponent vanishes stay as unbranched markers.
    pub fn quotient_cover(&self, d: i64) -> Result<CoverData> {
        if d < 1 || self.m % d != 0 {
            return Err(Error::domain(format!(
                "quotient degree {d} does not divide m = {}",
                self.m
            )));
        }
        let exps = self.exps.iter().map(|&a| a % d).collect();
        // Connectedness of the quotient data follows from the parent's:
        // any prime dividing d and every a_i mod d divides m and every a_i.
        CoverData::new(d, exps)
    }

    /// Linear growth constant `(N - 2) m - sum_i gcd(m, a_i)`; equals
    /// `2 genus - 2`.
    pub fn delta_growth(&self) -> i64 {
        let n = self.exps.len() as i64;
        let branch: i64 = (0..self.exps.len()).map(|i| self.point_gcd(i)).sum();
        (n - 2) * self.m - branch
    }

    /// Eigenvalue-distribution test: the family of covers with this branch
    /// data has a complex-ball period domain exactly when
    /// `m(-1) = 1`, `m(1) = N - 3`, and `m(j)` is `0` or `N - 2` for every
    /// unit `j` other than `1` and `-1` mod `m`.
    ///
    /// Requires normalized primitive data: exponents sorted ascending with
    /// sum exactly `2m`, `m >= 3`, `N >= 4`. Unnormalized input is a domain
    /// error, not `false`.
    pub fn is_ball(&self) -> Result<bool> {
        let n = self.exps.len() as i64;
        if self.m < 3 || n < 4 || !self.is_primitive() {
            return Err(Error::domain(format!(
                "ball test needs primitive data with m >= 3 and N >= 4, got {self}"
            )));
        }
        if self.exps.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::domain(format!(
                "ball test needs sorted exponents, got {self}"
            )));
        }
        let sum: i64 = self.exps.iter().sum();
        if sum != 2 * self.m {
            return Err(Error::domain(format!(
                "ball test needs exponent sum 2m = {}, got {sum}",
                2 * self.m
            )));
        }
        if self.eigen_mult(-1) != 1 || self.eigen_mult(1) != n - 3 {
            return Ok(false);
        }
        for j in 2..self.m - 1 {
            if arith::gcd(j, self.m) != 1 {
                continue;
            }
            let mu = self.eigen_mult(j);
            if mu != 0 && mu != n - 2 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl std::fmt::Display for CoverData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({};", self.m)?;
        for (i, a) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {a}")?;
        }
        write!(f, ")")
    }
}
