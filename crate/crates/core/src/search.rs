//! Exhaustive search for valid quadruples within degree and point bounds.
//!
//! The search space factors cleanly: for each cell `(m, N)`,
//! [`enumerate_a`] lists the sorted exponent tuples passing the
//! eigenvalue-distribution test, [`enumerate_b`] lists the matching sorted
//! triples for each of them, and every surviving pair is fully analyzed
//! into a [`SurfaceRecord`]. Cells are independent, so
//! [`enumerate_quadruples`] fans them out with rayon when the `parallel`
//! feature is on; [`enumerate_quadruples_sequential`] always runs in
//! order, and both produce the identical, deterministically sorted
//! catalog.
//!
//! The catalog also carries a duplicate-detection diagnostic: scaling both
//! tuples of an accepted quadruple by the same unit mod `m` can in
//! principle land on another accepted quadruple of the same cell, which
//! would mean the two rows describe the same surface. [`Collision`]
//! records any such pair; the reference catalog produces none.

use crate::arith;
use crate::cover::CoverData;
use crate::error::{Error, Result};
use crate::pairing::{check_matching, Quadruple};
use crate::SurfaceRecord;

/// Inclusive bounds for the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Smallest degree, at least 3.
    pub m_min: i64,
    /// Largest degree.
    pub m_max: i64,
    /// Smallest number of `a`-side branch points, at least 4.
    pub n_min: usize,
    /// Largest number of `a`-side branch points.
    pub n_max: usize,
}

impl Default for SearchBounds {
    /// The bounds that exhaust the reference catalog: degrees 3 to 22,
    /// point counts 4 to 12.
    fn default() -> Self {
        SearchBounds {
            m_min: 3,
            m_max: 22,
            n_min: 4,
            n_max: 12,
        }
    }
}

impl SearchBounds {
    fn validate(&self) -> Result<()> {
        if self.m_min < 3 {
            return Err(Error::domain(format!(
                "degree lower bound {} must be at least 3",
                self.m_min
            )));
        }
        if self.n_min < 4 {
            return Err(Error::domain(format!(
                "point-count lower bound {} must be at least 4",
                self.n_min
            )));
        }
        Ok(())
    }

    /// The `(m, N)` cells covered by the bounds, in order. Empty ranges
    /// yield no cells (and an empty catalog), not an error.
    fn cells(&self) -> Vec<(i64, usize)> {
        let mut cells = Vec::new();
        for m in self.m_min..=self.m_max {
            for n in self.n_min..=self.n_max {
                cells.push((m, n));
            }
        }
        cells
    }
}

/// Two accepted quadruples of one cell related by a simultaneous unit
/// scaling of both tuples — they would present the same surface twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    /// Common degree.
    pub m: i64,
    /// The unit that maps `first` onto `second`.
    pub unit: i64,
    /// Exponent tuples of the first quadruple.
    pub first: (Vec<i64>, Vec<i64>),
    /// Exponent tuples of the second quadruple.
    pub second: (Vec<i64>, Vec<i64>),
}

/// A full search result: analyzed records plus the duplicate diagnostic.
#[derive(Debug, Clone)]
pub struct Catalog {
    /// All accepted quadruples, fully analyzed, sorted by `(m, N, a, b)`.
    pub records: Vec<SurfaceRecord>,
    /// Unit-scaling collisions between accepted quadruples (expected
    /// empty; reported rather than silently deduplicated).
    pub collisions: Vec<Collision>,
}

/// All sorted exponent tuples of length `n` for degree `m` that define a
/// connected cover, sum to `2m`, and pass the eigenvalue-distribution
/// test.
pub fn enumerate_a(m: i64, n: usize) -> Result<Vec<CoverData>> {
    if m < 3 || n < 4 {
        return Err(Error::domain(format!(
            "tuple enumeration needs m >= 3 and N >= 4, got ({m}, {n})"
        )));
    }
    let mut out = Vec::new();
    let mut prefix: Vec<i64> = Vec::with_capacity(n);
    enumerate_sorted_tuples(m, n, 2 * m, 1, &mut prefix, &mut |exps| {
        if exps.iter().fold(m, |acc, &x| arith::gcd(acc, x)) != 1 {
            return Ok(());
        }
        let cover = CoverData::primitive(m, exps.to_vec())?;
        if cover.is_ball()? {
            out.push(cover);
        }
        Ok(())
    })?;
    Ok(out)
}

/// All sorted triples summing to `m` that define a connected cover and
/// pass the matching test against `a` (which must be normalized as in
/// [`CoverData::is_ball`]).
pub fn enumerate_b(m: i64, a: &CoverData) -> Result<Vec<CoverData>> {
    if a.m() != m {
        return Err(Error::domain(format!(
            "degree mismatch: enumerating triples for m = {m} against {a}"
        )));
    }
    let mut out = Vec::new();
    let mut prefix: Vec<i64> = Vec::with_capacity(3);
    enumerate_sorted_tuples(m, 3, m, 1, &mut prefix, &mut |exps| {
        if exps.iter().fold(m, |acc, &x| arith::gcd(acc, x)) != 1 {
            return Ok(());
        }
        let b = CoverData::primitive(m, exps.to_vec())?;
        if check_matching(a, &b)? {
            out.push(b);
        }
        Ok(())
    })?;
    Ok(out)
}

/// Recursively emit every ascending tuple of the remaining length whose
/// entries lie in `[lo, m)` and sum to `remaining`.
fn enumerate_sorted_tuples(
    m: i64,
    len: usize,
    remaining: i64,
    lo: i64,
    prefix: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    if prefix.len() + 1 == len {
        // Last slot: forced to the exact remainder.
        if remaining >= lo && remaining < m {
            prefix.push(remaining);
            emit(prefix)?;
            prefix.pop();
        }
        return Ok(());
    }
    let slots = (len - prefix.len()) as i64;
    let mut v = lo;
    while v < m {
        // Feasibility: the smallest continuation uses v everywhere, the
        // largest uses m - 1 everywhere.
        if v * slots > remaining {
            break;
        }
        if remaining - v <= (m - 1) * (slots - 1) {
            prefix.push(v);
            enumerate_sorted_tuples(m, len, remaining - v, v, prefix, emit)?;
            prefix.pop();
        }
        v += 1;
    }
    Ok(())
}

struct CellOutput {
    records: Vec<SurfaceRecord>,
    collisions: Vec<Collision>,
}

/// Search one `(m, N)` cell: enumerate, validate, analyze, and run the
/// collision diagnostic among the cell's accepted quadruples.
fn search_cell(m: i64, n: usize) -> Result<CellOutput> {
    let mut accepted: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut records = Vec::new();
    for a in enumerate_a(m, n)? {
        for b in enumerate_b(m, &a)? {
            let quad = Quadruple::from_canonical(m, a.exps(), b.exps())?;
            records.push(crate::analyze(&quad)?);
            accepted.push((a.exps().to_vec(), b.exps().to_vec()));
        }
    }

    let mut collisions = Vec::new();
    for (a, b) in &accepted {
        for u in 2..m {
            if arith::gcd(u, m) != 1 {
                continue;
            }
            let mut ua: Vec<i64> = a.iter().map(|&x| x * u % m).collect();
            ua.sort_unstable();
            let mut ub: Vec<i64> = b.iter().map(|&x| x * u % m).collect();
            ub.sort_unstable();
            let image = (ua, ub);
            let original = (a.clone(), b.clone());
            if image != original
                && original < image
                && accepted.contains(&image)
            {
                collisions.push(Collision {
                    m,
                    unit: u,
                    first: original,
                    second: image,
                });
            }
        }
    }
    Ok(CellOutput {
        records,
        collisions,
    })
}

fn assemble(cells: Vec<CellOutput>) -> Catalog {
    let mut records = Vec::new();
    let mut collisions = Vec::new();
    for cell in cells {
        records.extend(cell.records);
        collisions.extend(cell.collisions);
    }
    records.sort_by(|r, s| {
        (r.m, r.a.len(), &r.a, &r.b).cmp(&(s.m, s.a.len(), &s.a, &s.b))
    });
    collisions.sort_by(|c, d| {
        (c.m, &c.first, c.unit).cmp(&(d.m, &d.first, d.unit))
    });
    Catalog {
        records,
        collisions,
    }
}

/// Run the search over all cells in the bounds. With the `parallel`
/// feature the cells are processed by rayon (honoring the ambient thread
/// pool); the catalog is identical either way.
pub fn enumerate_quadruples(bounds: &SearchBounds) -> Result<Catalog> {
    bounds.validate()?;
    let cells = bounds.cells();
    #[cfg(feature = "parallel")]
    let outputs: Result<Vec<CellOutput>> = {
        use rayon::prelude::*;
        cells.par_iter().map(|&(m, n)| search_cell(m, n)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let outputs: Result<Vec<CellOutput>> =
        cells.iter().map(|&(m, n)| search_cell(m, n)).collect();
    Ok(assemble(outputs?))
}

/// The same search, forced sequential regardless of features. Exists so
/// the parallel path can be checked against it and benchmarked.
pub fn enumerate_quadruples_sequential(bounds: &SearchBounds) -> Result<Catalog> {
    bounds.validate()?;
    let outputs: Result<Vec<CellOutput>> = bounds
        .cells()
        .iter()
        .map(|&(m, n)| search_cell(m, n))
        .collect();
    Ok(assemble(outputs?))
}

/// How many records of the catalog match reference rows, and how many are
/// new.
pub fn split_known_extra(catalog: &Catalog) -> (usize, usize) {
    let known = catalog.records.iter().filter(|r| !r.extra).count();
    (known, catalog.records.len() - known)
}

/// Convenience: does the catalog contain canonical data `(m, a, b)`?
pub fn contains(catalog: &Catalog, m: i64, a: &[i64], b: &[i64]) -> bool {
    catalog
        .records
        .iter()
        .any(|r| r.m == m && r.a == a && r.b == b)
}
