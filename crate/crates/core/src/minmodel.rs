//! Blowing the resolved surface down to its minimal model.
//!
//! The resolution `S` of the quotient surface is never minimal: the curve
//! configuration (rational components of the two fiber systems with
//! positive canonical coefficient, plus the exceptional chains of the
//! resolution) contains (-1)-curves. [`ComponentGraph`] abstracts exactly
//! the data the contraction process needs — self-intersections and
//! pairwise intersection multiplicities — and [`ComponentGraph::blow_down_all`]
//! contracts (-1)-vertices until none remain. Each contraction raises
//! `K^2` by one, so the minimal `K^2` is the resolution value plus the
//! contraction count ([`minimal_k2`]); [`classify`] then reads the type of
//! the minimal surface off that number.
//!
//! Only curves that can ever participate matter: a chain between two
//! spectator endpoints never changes state, so by default chains are kept
//! only when at least one endpoint is a tracked curve
//! ([`ChainScope::Attached`]); [`ChainScope::All`] keeps every chain and
//! must produce the same contraction count.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::surface::SurfaceModel;

/// Identity of a vertex in the contraction graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurveLabel {
    /// Fiber component over the `i`-th `a`-side branch point.
    Y(usize),
    /// Fiber component over the `j`-th `b`-side branch point.
    Z(usize),
    /// Exceptional curve: `point`-th singular point of the pair `(i, j)`,
    /// position `pos` along the chain (0 on the `Z` side).
    Chain {
        i: usize,
        j: usize,
        point: usize,
        pos: usize,
    },
}

impl std::fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CurveLabel::Y(i) => write!(f, "Y{}", i + 1),
            CurveLabel::Z(j) => write!(f, "Z{}", j + 1),
            CurveLabel::Chain { i, j, point, pos } => {
                write!(f, "E({},{})#{}.{}", i + 1, j + 1, point + 1, pos + 1)
            }
        }
    }
}

/// Which exceptional chains enter the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainScope {
    /// Only chains with at least one tracked endpoint (default).
    Attached,
    /// Every chain, spectators included; same contraction count.
    All,
}

/// One vertex: a curve with its current self-intersection.
#[derive(Debug, Clone)]
pub struct Vertex {
    /// Which curve this is.
    pub label: CurveLabel,
    /// Current self-intersection number.
    pub self_int: i64,
}

/// Intersection graph of the contractible part of the curve configuration.
///
/// Vertices are the rational components with positive canonical coefficient
/// from both fiber systems plus the exceptional chains in scope; edges
/// carry intersection multiplicities. Vertex ids are assignment order:
/// `Y` components first (ascending), then `Z`, then chain curves ordered by
/// `(i, j, point, pos)` with position 0 on the `Z` side.
#[derive(Debug, Clone)]
pub struct ComponentGraph {
    vertices: Vec<Vertex>,
    edges: BTreeMap<(usize, usize), i64>,
}

/// Log entry for one contraction step.
#[derive(Debug, Clone)]
pub struct BlowdownStep {
    /// The (-1)-curve that was contracted.
    pub contracted: CurveLabel,
    /// Curves dropped because the contraction makes them singular (they
    /// met the contracted curve with multiplicity at least 2).
    pub dropped: Vec<CurveLabel>,
}

/// Result of running the contraction process to exhaustion.
#[derive(Debug, Clone)]
pub struct BlowdownOutcome {
    /// Number of contractions performed; each raises `K^2` by one.
    pub contractions: i64,
    /// Curves dropped as singular along the way (not contractions).
    pub dropped: i64,
    /// Vertices still alive when no (-1)-vertex remains.
    pub residual: usize,
    /// Per-step log in execution order.
    pub steps: Vec<BlowdownStep>,
}

impl ComponentGraph {
    /// Assemble the contraction graph from a surface model.
    pub fn build(model: &SurfaceModel, scope: ChainScope) -> Result<Self> {
        let y_tracked: Vec<bool> = model
            .y
            .iter()
            .map(|c| c.genus == 0 && c.coeff > 0)
            .collect();
        let z_tracked: Vec<bool> = model
            .z
            .iter()
            .map(|c| c.genus == 0 && c.coeff > 0)
            .collect();

        let mut vertices = Vec::new();
        let mut y_id: BTreeMap<usize, usize> = BTreeMap::new();
        let mut z_id: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, c) in model.y.iter().enumerate() {
            if y_tracked[i] {
                y_id.insert(i, vertices.len());
                vertices.push(Vertex {
                    label: CurveLabel::Y(i),
                    self_int: c.self_int,
                });
            }
        }
        for (j, c) in model.z.iter().enumerate() {
            if z_tracked[j] {
                z_id.insert(j, vertices.len());
                vertices.push(Vertex {
                    label: CurveLabel::Z(j),
                    self_int: c.self_int,
                });
            }
        }

        let mut edges: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        let bump = |edges: &mut BTreeMap<(usize, usize), i64>, u: usize, v: usize, w: i64| {
            debug_assert_ne!(u, v);
            *edges.entry((u.min(v), u.max(v))).or_insert(0) += w;
        };

        for sp in &model.singular {
            let attached = y_tracked[sp.i] || z_tracked[sp.j];
            if scope == ChainScope::Attached && !attached {
                continue;
            }
            let expansion = crate::arith::hj_expand(sp.n, sp.q)?;
            for point in 0..sp.count as usize {
                let first = vertices.len();
                for (pos, &entry) in expansion.entries.iter().enumerate() {
                    vertices.push(Vertex {
                        label: CurveLabel::Chain {
                            i: sp.i,
                            j: sp.j,
                            point,
                            pos,
                        },
                        self_int: -entry,
                    });
                    if pos > 0 {
                        let id = vertices.len() - 1;
                        bump(&mut edges, id - 1, id, 1);
                    }
                }
                let last = vertices.len() - 1;
                if let Some(&z) = z_id.get(&sp.j) {
                    bump(&mut edges, z, first, 1);
                }
                if let Some(&y) = y_id.get(&sp.i) {
                    bump(&mut edges, y, last, 1);
                }
            }
        }
        for sc in &model.smooth {
            if let (Some(&y), Some(&z)) = (y_id.get(&sc.i), z_id.get(&sc.j)) {
                bump(&mut edges, y, z, sc.count);
            }
        }
        Ok(ComponentGraph { vertices, edges })
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// True when the graph has no vertices.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The vertices in id order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Intersection multiplicity between two vertices.
    pub fn edge(&self, u: usize, v: usize) -> i64 {
        *self.edges.get(&(u.min(v), u.max(v))).unwrap_or(&0)
    }

    /// The same graph with vertex ids permuted (`perm[old] = new`);
    /// contraction counts must not depend on the labeling.
    pub fn relabeled(&self, perm: &[usize]) -> Result<ComponentGraph> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        if perm.len() != n || !perm.iter().all(|&p| p < n && !std::mem::replace(&mut seen[p], true)) {
            return Err(Error::domain(format!(
                "relabeling must be a permutation of 0..{n}"
            )));
        }
        let mut vertices = vec![None; n];
        for (old, v) in self.vertices.iter().enumerate() {
            vertices[perm[old]] = Some(v.clone());
        }
        let mut edges = BTreeMap::new();
        for (&(u, v), &w) in &self.edges {
            let (nu, nv) = (perm[u], perm[v]);
            edges.insert((nu.min(nv), nu.max(nv)), w);
        }
        Ok(ComponentGraph {
            vertices: vertices.into_iter().map(Option::unwrap).collect(),
            edges,
        })
    }

    /// Contract (-1)-vertices until none remain.
    ///
    /// Each round picks the live (-1)-vertex with the smallest id, drops
    /// every neighbor it meets with multiplicity at least 2 (the image of
    /// such a curve is singular and stops being a smooth rational curve of
    /// the configuration), then updates the remaining neighbors: pairwise
    /// intersections grow by the product of their multiplicities with the
    /// center, self-intersections by the square. The input graph is not
    /// modified.
    pub fn blow_down_all(&self) -> BlowdownOutcome {
        let mut alive: Vec<bool> = vec![true; self.vertices.len()];
        let mut self_int: Vec<i64> = self.vertices.iter().map(|v| v.self_int).collect();
        let mut edges = self.edges.clone();
        let mut steps = Vec::new();
        let mut dropped_total = 0i64;

        loop {
            let Some(center) = (0..self.vertices.len())
                .find(|&v| alive[v] && self_int[v] == -1)
            else {
                break;
            };
            let mut neighbors: Vec<(usize, i64)> = Vec::new();
            for (&(u, v), &w) in &edges {
                if w == 0 {
                    continue;
                }
                if u == center && alive[v] {
                    neighbors.push((v, w));
                } else if v == center && alive[u] {
                    neighbors.push((u, w));
                }
            }
            let mut dropped = Vec::new();
            for &(u, w) in &neighbors {
                if w >= 2 {
                    alive[u] = false;
                    dropped.push(self.vertices[u].label);
                    dropped_total += 1;
                }
            }
            edges.retain(|&(u, v), _| alive[u] && alive[v] && u != center && v != center);
            let kept: Vec<(usize, i64)> = neighbors
                .into_iter()
                .filter(|&(u, _)| alive[u])
                .collect();
            for x in 0..kept.len() {
                let (u, wu) = kept[x];
                self_int[u] += wu * wu;
                for &(v, wv) in &kept[x + 1..] {
                    *edges.entry((u.min(v), u.max(v))).or_insert(0) += wu * wv;
                }
            }
            alive[center] = false;
            steps.push(BlowdownStep {
                contracted: self.vertices[center].label,
                dropped,
            });
        }

        BlowdownOutcome {
            contractions: steps.len() as i64,
            dropped: dropped_total,
            residual: alive.iter().filter(|&&a| a).count(),
            steps,
        }
    }
}

/// Surface types the minimal model can have within this catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// `K^2 = 0`: the minimal model is a K3 surface.
    K3,
    /// `K^2 > 0`: the minimal model is of general type.
    GeneralType,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::K3 => write!(f, "K3"),
            Classification::GeneralType => write!(f, "general-type"),
        }
    }
}

/// `K^2` of the minimal model: the resolution value plus one per
/// contraction. A negative result is an internal error (the configuration
/// would still contain a (-1)-curve the process missed).
pub fn minimal_k2(model: &SurfaceModel) -> Result<(i64, BlowdownOutcome)> {
    let graph = ComponentGraph::build(model, ChainScope::Attached)?;
    let outcome = graph.blow_down_all();
    let k2 = model.k2_resolution()? + outcome.contractions;
    if k2 < 0 {
        return Err(Error::inconsistency(format!(
            "minimal K^2 = {k2} is negative for {}",
            model.quadruple()
        )));
    }
    Ok((k2, outcome))
}

/// Read the surface type off the minimal `K^2` (non-negative; the surfaces
/// here have geometric genus 1 and irregularity 0, so `K^2 = 0` forces K3
/// and `K^2 > 0` general type).
pub fn classify(k2_minimal: i64) -> Result<Classification> {
    match k2_minimal {
        0 => Ok(Classification::K3),
        k if k > 0 => Ok(Classification::GeneralType),
        k => Err(Error::inconsistency(format!(
            "minimal K^2 = {k} is negative"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::Quadruple;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn model(m: i64, a: &[i64], b: &[i64]) -> SurfaceModel {
        SurfaceModel::build(&Quadruple::canonicalize(m, a, b).unwrap()).unwrap()
    }

    #[test]
    fn smallest_row_contracts_twice() {
        let model = model(3, &[1, 1, 2, 2], &[1, 1, 1]);
        let (k2, outcome) = minimal_k2(&model).unwrap();
        assert_eq!(model.k2_resolution().unwrap(), -2);
        assert_eq!(outcome.contractions, 2);
        assert_eq!(k2, 0);
        assert_eq!(classify(k2).unwrap(), Classification::K3);
    }

    #[test]
    fn degree14_row_contracts_twelve_times_with_three_nodal_drops() {
        let model = model(14, &[1, 9, 9, 9], &[3, 4, 7]);
        let graph = ComponentGraph::build(&model, ChainScope::Attached).unwrap();
        // 4 tracked Y's, Z_1 (Z_2 has genus 1, Z_3 coefficient 0), and 17
        // chain curves from the 12 singular points.
        assert_eq!(graph.len(), 22);
        let (k2, outcome) = minimal_k2(&model).unwrap();
        assert_eq!(outcome.contractions, 12);
        assert_eq!(outcome.dropped, 3);
        assert_eq!(k2, 3);
        assert_eq!(classify(k2).unwrap(), Classification::GeneralType);
    }

    #[test]
    fn degree4_row_contracts_sixteen_times() {
        let model = model(4, &[1; 8], &[1, 1, 2]);
        let (k2, outcome) = minimal_k2(&model).unwrap();
        assert_eq!(outcome.contractions, 16);
        assert_eq!(outcome.dropped, 0);
        assert_eq!(k2, 0);
    }

    #[test]
    fn generalized_rows_reach_their_minimal_k2() {
        for (m, a, b, contractions, k2_min) in [
            (4i64, vec![1, 1, 1, 1], vec![1, 1, 1, 1], 8i64, 0i64),
            (6, vec![1, 1, 1, 3], vec![1, 1, 1, 3], 12, 0),
            (6, vec![1, 1, 1, 3], vec![1, 1, 2, 2], 7, 1),
            (6, vec![1, 1, 2, 2], vec![1, 1, 4], 8, 0),
        ] {
            let model = model(m, &a, &b);
            let (k2, outcome) = minimal_k2(&model).unwrap();
            assert_eq!(outcome.contractions, contractions, "{}", model.quadruple());
            assert_eq!(k2, k2_min, "{}", model.quadruple());
        }
    }

    #[test]
    fn contraction_count_is_labeling_invariant() {
        let mut rng = StdRng::seed_from_u64(0x0b10_da11);
        for (m, a, b) in [
            (14i64, vec![1, 9, 9, 9], vec![3, 4, 7]),
            (4, vec![1; 8], vec![1, 1, 2]),
            (6, vec![1, 1, 1, 3], vec![1, 1, 2, 2]),
        ] {
            let model = model(m, &a, &b);
            let graph = ComponentGraph::build(&model, ChainScope::Attached).unwrap();
            let base = graph.blow_down_all();
            for _ in 0..25 {
                let mut perm: Vec<usize> = (0..graph.len()).collect();
                perm.shuffle(&mut rng);
                let shuffled = graph.relabeled(&perm).unwrap();
                let outcome = shuffled.blow_down_all();
                assert_eq!(outcome.contractions, base.contractions);
                assert_eq!(outcome.dropped, base.dropped);
            }
        }
    }

    #[test]
    fn spectator_chains_do_not_change_the_outcome() {
        for (m, a, b) in [
            (14i64, vec![1, 9, 9, 9], vec![3, 4, 7]),
            (14, vec![3, 3, 9, 13], vec![3, 4, 7]),
            (4, vec![1; 8], vec![1, 1, 2]),
            (6, vec![1, 1, 2, 2], vec![1, 1, 4]),
        ] {
            let model = model(m, &a, &b);
            let pruned = ComponentGraph::build(&model, ChainScope::Attached)
                .unwrap()
                .blow_down_all();
            let full = ComponentGraph::build(&model, ChainScope::All)
                .unwrap()
                .blow_down_all();
            assert_eq!(pruned.contractions, full.contractions);
            assert_eq!(pruned.dropped, full.dropped);
        }
    }

    #[test]
    fn classify_rejects_negative_values() {
        assert!(classify(-1).is_err());
        assert_eq!(classify(0).unwrap(), Classification::K3);
        assert_eq!(classify(5).unwrap(), Classification::GeneralType);
    }
}
