//! The quotient surface: configuration of curves, singularities, and the
//! numerical invariants of its minimal resolution.
//!
//! For a validated [`Quadruple`] the quotient of `C x D` by the diagonal
//! cyclic action is a normal surface `T` carrying two transverse systems of
//! curves: the images `Y_i` of the fibers over the `a`-side branch points
//! and the images `Z_j` of the `b`-side branch fibers. All singularities of
//! `T` are cyclic quotient points lying on intersections `Y_i ∩ Z_j`;
//! resolving them by chains of rational curves yields the smooth surface
//! `S` whose invariants ([`SurfaceModel::k2_resolution`],
//! [`SurfaceModel::euler_characteristic`]) this module computes, checked
//! against each other by the Noether relation `K^2 + e = 24`.

use crate::arith::{self, hj_expand, mod_inverse, Rational};
use crate::error::{Error, Result};
use crate::pairing::Quadruple;

/// A batch of identical cyclic quotient singularities on `Y_i ∩ Z_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SingularPoint {
    /// Index into the `a` tuple (which `Y` component the points lie on).
    pub i: usize,
    /// Index into the `b` tuple (which `Z` component the points lie on).
    pub j: usize,
    /// Order of the cyclic quotient singularity, `n >= 2`.
    pub n: i64,
    /// Rotation parameter in `1..n`, a unit mod `n`: the point is the
    /// quotient of a disc by `(x, y) -> (zeta x, zeta^q y)`.
    pub q: i64,
    /// How many identical points the pair `(i, j)` contributes:
    /// `gcd(a_i, b_j, m)`.
    pub count: i64,
}

/// A batch of transverse intersection points of `Y_i` and `Z_j` at which
/// the quotient surface is smooth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmoothCrossing {
    /// Index into the `a` tuple.
    pub i: usize,
    /// Index into the `b` tuple.
    pub j: usize,
    /// Number of intersection points.
    pub count: i64,
}

/// One curve of the configuration (`Y_i` or `Z_j`) on the resolved surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Genus of the (smooth projective) component.
    pub genus: i64,
    /// Coefficient of the component in the canonical divisor of the
    /// resolution (order of vanishing of the 2-form along it); `>= 0`.
    pub coeff: i64,
    /// Self-intersection number on the resolution; always `<= -1` here.
    pub self_int: i64,
}

/// The resolved quotient surface's curve configuration.
#[derive(Debug, Clone)]
pub struct SurfaceModel {
    quadruple: Quadruple,
    /// One entry per `a`-side branch point (curve `Y_i`).
    pub y: Vec<Component>,
    /// One entry per `b`-side branch point (curve `Z_j`).
    pub z: Vec<Component>,
    /// Cyclic quotient singularities, grouped by `(i, j)`.
    pub singular: Vec<SingularPoint>,
    /// Smooth transverse crossings of `Y_i` and `Z_j`, grouped by `(i, j)`.
    pub smooth: Vec<SmoothCrossing>,
}

/// Locate all singular points and smooth crossings of the quotient surface.
///
/// Every pair `(i, j)` of branch indices meets in `gcd(a_i, b_j, m)`
/// points; writing `n = m / lcm(gcd(a_i, m), gcd(b_j, m))`, the points are
/// smooth crossings when `n = 1` and cyclic quotient singularities of type
/// `(n, q)` with `q = (a_i / g_i) * (b_j / g'_j)^{-1} mod n` otherwise.
pub fn singular_points(q: &Quadruple) -> Result<(Vec<SingularPoint>, Vec<SmoothCrossing>)> {
    let m = q.m();
    let mut singular = Vec::new();
    let mut smooth = Vec::new();
    for (i, &ai) in q.a().exps().iter().enumerate() {
        let gi = arith::gcd(ai, m);
        for (j, &bj) in q.b().exps().iter().enumerate() {
            let gj = arith::gcd(bj, m);
            let n = m / arith::lcm(gi, gj);
            let count = arith::gcd(arith::gcd(ai, bj), m);
            debug_assert_eq!(count, arith::gcd(gi, gj));
            if n == 1 {
                smooth.push(SmoothCrossing { i, j, count });
            } else {
                let rot = (ai / gi) * mod_inverse(bj / gj, n)? % n;
                debug_assert!(rot >= 1 && arith::gcd(rot, n) == 1);
                singular.push(SingularPoint {
                    i,
                    j,
                    n,
                    q: rot,
                    count,
                });
            }
        }
    }
    Ok((singular, smooth))
}

/// Correction to `K^2` contributed by resolving one cyclic quotient point
/// of type `(n, q)`:
/// `h(n, q) = 2 - (2 + q + q') / n - sum_k (b_k - 2)`,
/// where `q' = q^{-1} mod n` and `[b_1, ..., b_t]` is the continued
/// fraction expansion of `n/q`. Always `<= 0`, and `0` exactly for the
/// ordinary double point `(2, 1)` and the chains `(n, n-1)`.
pub fn h_invariant(n: i64, q: i64) -> Result<Rational> {
    let qp = mod_inverse(q, n)?;
    let exp = hj_expand(n, q)?;
    let chain_excess: i64 = exp.entries.iter().map(|&b| b - 2).sum();
    Ok(Rational::from_integer(2)
        - Rational::new(2 + q + qp, n)
        - Rational::from_integer(chain_excess))
}

impl SurfaceModel {
    /// Assemble the full configuration for a validated quadruple: component
    /// genera and canonical coefficients, singular points, and
    /// self-intersection numbers, with all internal consistency checks.
    pub fn build(quadruple: &Quadruple) -> Result<SurfaceModel> {
        let m = quadruple.m();
        let (singular, smooth) = singular_points(quadruple)?;

        // The 2-form lives in the character pair (j0, -j0); its vanishing
        // orders along the two curve systems come from the two characters.
        let s_c = (-quadruple.j0()).rem_euclid(m);
        let s_d = quadruple.j0().rem_euclid(m);

        let y = Self::components(
            quadruple.a(),
            quadruple.b(),
            s_c,
            &singular,
            |sp| sp.i,
            |sp| mod_inverse(sp.q, sp.n),
        )?;
        let z = Self::components(
            quadruple.b(),
            quadruple.a(),
            s_d,
            &singular,
            |sp| sp.j,
            |sp| Ok(sp.q),
        )?;

        Ok(SurfaceModel {
            quadruple: quadruple.clone(),
            y,
            z,
            singular,
            smooth,
        })
    }

    /// Build the component list along one curve system. `own` is the branch
    /// data whose fibers the components are; `other` the transverse one,
    /// whose quotient covers realize the components as curves. `index`
    /// projects a singular point to the component it lies on and `rot`
    /// extracts the rotation parameter seen from this side.
    fn components(
        own: &crate::cover::CoverData,
        other: &crate::cover::CoverData,
        s: i64,
        singular: &[SingularPoint],
        index: impl Fn(&SingularPoint) -> usize,
        rot: impl Fn(&SingularPoint) -> Result<i64>,
    ) -> Result<Vec<Component>> {
        let m = own.m();
        let mut out = Vec::with_capacity(own.n_points());
        let mut degree_check = 0i64;
        for (idx, &e) in own.exps().iter().enumerate() {
            let g = arith::gcd(e, m);
            let quotient = other.quotient_cover(g)?;
            let genus = quotient.genus();
            let coeff = (-s * (e / g) - 1).rem_euclid(m / g);
            degree_check += g * coeff;

            let mut acc = Rational::from_integer(0);
            let mut met = false;
            for sp in singular.iter().filter(|sp| index(sp) == idx) {
                met = true;
                acc += Rational::new(rot(sp)? * sp.count, sp.n);
            }
            if !met {
                return Err(Error::inconsistency(format!(
                    "component {idx} of {own} carries no singular point; \
                     its self-intersection would not be negative"
                )));
            }
            if !acc.is_integer() {
                return Err(Error::inconsistency(format!(
                    "non-integral self-intersection -{acc} on component {idx} of {own}"
                )));
            }
            let self_int = -acc.to_integer();
            debug_assert!(self_int <= -1);
            out.push(Component {
                genus,
                coeff,
                self_int,
            });
        }
        if degree_check != 2 * own.genus() - 2 {
            return Err(Error::inconsistency(format!(
                "canonical coefficients along {own} have weighted degree {degree_check}, \
                 expected {}",
                2 * own.genus() - 2
            )));
        }
        Ok(out)
    }

    /// The validated quadruple the model was built from.
    pub fn quadruple(&self) -> &Quadruple {
        &self.quadruple
    }

    /// Total number of singular points (batch counts included).
    pub fn singular_point_count(&self) -> i64 {
        self.singular.iter().map(|sp| sp.count).sum()
    }

    /// `K^2` of the minimal resolution `S` of the quotient surface:
    /// `8 (g_C - 1)(g_D - 1) / m` plus the resolution corrections
    /// [`h_invariant`] of all singular points. Exact; a non-integral total
    /// is an internal error.
    pub fn k2_resolution(&self) -> Result<i64> {
        let q = &self.quadruple;
        let mut total = Rational::new(
            8 * (q.a().genus() - 1) * (q.b().genus() - 1),
            q.m(),
        );
        for sp in &self.singular {
            total += h_invariant(sp.n, sp.q)? * Rational::from_integer(sp.count);
        }
        if !total.is_integer() {
            return Err(Error::inconsistency(format!(
                "K^2 of the resolution is not an integer: {total} for {q}"
            )));
        }
        Ok(total.to_integer())
    }

    /// Topological Euler number of the resolution `S`: the quotient Euler
    /// number of `T` (orbifold count) plus one for every exceptional curve
    /// in the resolution chains.
    pub fn euler_characteristic(&self) -> Result<i64> {
        let q = &self.quadruple;
        let product = (2 - 2 * q.a().genus()) * (2 - 2 * q.b().genus());
        let m = q.m();
        // Points of C x D with nontrivial stabilizer: each singular point
        // of type (n, q) downstairs is the image of m/n points upstairs.
        let stabilized: i64 = self.singular.iter().map(|sp| sp.count * (m / sp.n)).sum();
        let downstairs: i64 = self.singular_point_count();
        if (product - stabilized) % m != 0 {
            return Err(Error::inconsistency(format!(
                "free part of the Euler count is not divisible by m for {q}"
            )));
        }
        let quotient_euler = (product - stabilized) / m + downstairs;
        let mut chain_total = 0i64;
        for sp in &self.singular {
            chain_total += sp.count * hj_expand(sp.n, sp.q)?.len() as i64;
        }
        Ok(quotient_euler + chain_total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(m: i64, a: &[i64], b: &[i64]) -> Quadruple {
        Quadruple::canonicalize(m, a, b).unwrap()
    }

    fn multiset(model: &SurfaceModel) -> Vec<(i64, i64)> {
        let mut v: Vec<(i64, i64)> = model
            .singular
            .iter()
            .flat_map(|sp| std::iter::repeat((sp.n, sp.q)).take(sp.count as usize))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn singularities_of_the_degree14_row() {
        let q = quad(14, &[1, 9, 9, 9], &[3, 4, 7]);
        let model = SurfaceModel::build(&q).unwrap();
        assert_eq!(
            multiset(&model),
            vec![
                (2, 1),
                (2, 1),
                (2, 1),
                (2, 1),
                (7, 1),
                (7, 1),
                (7, 1),
                (7, 4),
                (14, 3),
                (14, 3),
                (14, 3),
                (14, 5),
            ]
        );
        assert!(model.smooth.is_empty());
        assert_eq!(model.singular_point_count(), 12);
    }

    #[test]
    fn singularities_of_the_degree4_row() {
        // Eight points of type (4,1) where the Y's meet Z_1 and Z_2, eight
        // of type (2,1) where they meet Z_3.
        let q = quad(4, &[1; 8], &[1, 1, 2]);
        let model = SurfaceModel::build(&q).unwrap();
        let ms = multiset(&model);
        assert_eq!(ms.iter().filter(|&&(n, _)| n == 4).count(), 16);
        assert_eq!(ms.iter().filter(|&&(n, q)| (n, q) == (2, 1)).count(), 8);
        assert_eq!(model.singular_point_count(), 24);
    }

    #[test]
    fn smooth_crossings_are_detected() {
        // (6; 2,3,3,4) x (1,2,3): a_1 = 2 against b_3 = 3 has
        // lcm(gcd) = 6 = m, a smooth crossing.
        let q = quad(6, &[2, 3, 3, 4], &[1, 2, 3]);
        let model = SurfaceModel::build(&q).unwrap();
        assert!(model
            .smooth
            .iter()
            .any(|sc| sc.i == 0 && sc.j == 2 && sc.count == 1));
    }

    #[test]
    fn h_invariant_values() {
        let r = |n, d| Rational::new(n, d);
        assert_eq!(h_invariant(2, 1).unwrap(), r(0, 1));
        assert_eq!(h_invariant(3, 2).unwrap(), r(0, 1));
        assert_eq!(h_invariant(4, 1).unwrap(), r(-1, 1));
        assert_eq!(h_invariant(3, 1).unwrap(), r(-1, 3));
        assert_eq!(h_invariant(7, 1).unwrap(), r(-25, 7));
        assert_eq!(h_invariant(14, 5).unwrap(), r(-19, 7));
        assert_eq!(h_invariant(14, 3).unwrap(), r(-19, 7));
        assert_eq!(h_invariant(7, 4).unwrap(), r(-8, 7));
        assert_eq!(h_invariant(6, 1).unwrap(), r(-8, 3));
    }

    #[test]
    fn h_invariant_symmetry_and_chain_cases() {
        for n in 2..=100 {
            for q in 1..n {
                if arith::gcd(n, q) != 1 {
                    continue;
                }
                let qp = mod_inverse(q, n).unwrap();
                assert_eq!(
                    h_invariant(n, q).unwrap(),
                    h_invariant(n, qp).unwrap(),
                    "symmetry at ({n}, {q})"
                );
                assert!(h_invariant(n, q).unwrap() <= Rational::from_integer(0));
            }
            assert_eq!(h_invariant(n, n - 1).unwrap(), Rational::from_integer(0));
        }
    }

    #[test]
    fn self_intersections_and_coefficients_degree14() {
        let q = quad(14, &[1, 9, 9, 9], &[3, 4, 7]);
        let model = SurfaceModel::build(&q).unwrap();
        // Y_1 (exponent 1): coefficient (14 - 1)/1 - 1 = 12, rational.
        assert_eq!(model.y[0].coeff, 12);
        assert_eq!(model.y[0].genus, 0);
        // Y_2..Y_4 (exponent 9): coefficient (14 - 9)/1 - 1 = 4.
        for i in 1..4 {
            assert_eq!(model.y[i].coeff, 4);
            assert_eq!(model.y[i].genus, 0);
        }
        // Z_1 (exponent 3): coefficient 3 - 1 = 2; Z_2: 4/2 - 1 = 1 with
        // genus 1; Z_3: 7/7 - 1 = 0.
        assert_eq!(model.z[0].coeff, 2);
        assert_eq!(model.z[0].genus, 0);
        assert_eq!(model.z[1].coeff, 1);
        assert_eq!(model.z[1].genus, 1);
        assert_eq!(model.z[2].coeff, 0);
        assert_eq!(model.z[2].genus, 6);
        for c in model.y.iter().chain(model.z.iter()) {
            assert!(c.self_int <= -1);
        }
    }

    #[test]
    fn invariants_of_anchor_rows() {
        let q = quad(14, &[1, 9, 9, 9], &[3, 4, 7]);
        let model = SurfaceModel::build(&q).unwrap();
        assert_eq!(model.k2_resolution().unwrap(), -9);
        assert_eq!(model.euler_characteristic().unwrap(), 33);

        let q = quad(4, &[1; 8], &[1, 1, 2]);
        let model = SurfaceModel::build(&q).unwrap();
        assert_eq!(model.k2_resolution().unwrap(), -16);
        assert_eq!(model.euler_characteristic().unwrap(), 40);
    }

    #[test]
    fn invariants_of_generalized_rows() {
        for (m, a, b, k2, e) in [
            (4i64, vec![1, 1, 1, 1], vec![1, 1, 1, 1], -8i64, 32i64),
            (6, vec![1, 1, 1, 3], vec![1, 1, 1, 3], -12, 36),
            (6, vec![1, 1, 1, 3], vec![1, 1, 2, 2], -6, 30),
            (6, vec![1, 1, 2, 2], vec![1, 1, 4], -8, 32),
        ] {
            let q = quad(m, &a, &b);
            let model = SurfaceModel::build(&q).unwrap();
            assert_eq!(model.k2_resolution().unwrap(), k2, "K2 of {q}");
            assert_eq!(model.euler_characteristic().unwrap(), e, "e of {q}");
        }
    }

    #[test]
    fn noether_relation_on_anchors() {
        for (m, a, b) in [
            (14i64, vec![1, 9, 9, 9], vec![3, 4, 7]),
            (4, vec![1, 1, 1, 1, 1, 1, 1, 1], vec![1, 1, 2]),
            (3, vec![1, 1, 2, 2], vec![1, 1, 1]),
            (6, vec![1; 12], vec![1, 2, 3]),
            (4, vec![1, 1, 1, 1], vec![1, 1, 1, 1]),
        ] {
            let model = SurfaceModel::build(&quad(m, &a, &b)).unwrap();
            assert_eq!(
                model.k2_resolution().unwrap() + model.euler_characteristic().unwrap(),
                24
            );
        }
    }
}
