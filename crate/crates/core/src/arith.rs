//! Exact integer and rational primitives.
//!
//! Provides the handful of number-theoretic operations the rest of the
//! crate is built on: fractional parts of exact rationals ([`frac_part`]),
//! modular inverses ([`mod_inverse`]), Euler's totient ([`euler_phi`]), and
//! the negative-regular continued fraction expansion used to resolve cyclic
//! quotient singularities ([`hj_expand`]).
//!
//! All arithmetic is exact: rationals are [`num_rational::Ratio`] over `i64`
//! (always reduced, positive denominator) and integer overflow aborts rather
//! than wrapping (overflow checks are enabled in every build profile).

use num_integer::Integer;

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = num_rational::Ratio<i64>;

/// Fractional part `x - floor(x)` of an exact rational, always in `[0, 1)`.
///
/// `frac_part(-3/5) = 2/5`, `frac_part(7/5) = 2/5`, `frac_part(-2) = 0`.
pub fn frac_part(x: Rational) -> Rational {
    x - x.floor()
}

/// Fractional part of `num/den` without intermediate construction fuss.
///
/// `den` must be positive.
pub fn frac_part_of(num: i64, den: i64) -> Rational {
    debug_assert!(den > 0);
    frac_part(Rational::new(num, den))
}

/// Greatest common divisor of two non-negative integers, `gcd(0, n) = n`.
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Least common multiple of two positive integers.
pub fn lcm(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

/// Inverse of `a` modulo `n`, normalized into `1..n`.
///
/// `a` may be any integer (it is reduced mod `n` first); `n` must be at
/// least 2 and `a` must be a unit mod `n`, otherwise a domain error is
/// returned.
pub fn mod_inverse(a: i64, n: i64) -> Result<i64> {
    if n < 2 {
        return Err(Error::domain(format!("modulus {n} must be at least 2")));
    }
    let a = a.rem_euclid(n);
    // Extended Euclid on (a, n): maintain x with x * a == r (mod n).
    let (mut r0, mut r1) = (a, n);
    let (mut x0, mut x1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
    }
    if r0 != 1 {
        return Err(Error::domain(format!(
            "{a} is not invertible mod {n} (gcd = {r0})"
        )));
    }
    Ok(x0.rem_euclid(n))
}

/// Euler's totient: the number of units modulo `m` (`m >= 1`).
pub fn euler_phi(m: i64) -> i64 {
    debug_assert!(m >= 1);
    let (mut phi, mut rem, mut p) = (1i64, m, 2i64);
    while p * p <= rem {
        if rem % p == 0 {
            rem /= p;
            phi *= p - 1;
            while rem % p == 0 {
                rem /= p;
                phi *= p;
            }
        }
        p += 1;
    }
    if rem > 1 {
        phi *= rem - 1;
    }
    phi
}

/// Negative-regular continued fraction expansion of `n/q`.
///
/// For coprime `1 <= q < n` this is the unique sequence `[b_1, ..., b_t]`
/// with every `b_k >= 2` such that
/// `n/q = b_1 - 1/(b_2 - 1/(... - 1/b_t))`.
/// It lists the self-intersection magnitudes of the exceptional chain that
/// resolves a cyclic quotient singularity of type `(n, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HjExpansion {
    /// Order of the singularity (denominator of the quotient), `n >= 2`.
    pub n: i64,
    /// Rotation parameter, coprime to `n`, in `1..n`.
    pub q: i64,
    /// The expansion entries, each `>= 2`; length is at most `n - 1`.
    pub entries: Vec<i64>,
}

/// Expand `n/q` as a negative-regular continued fraction.
///
/// Errors unless `n >= 2`, `1 <= q < n`, and `gcd(n, q) = 1`.
pub fn hj_expand(n: i64, q: i64) -> Result<HjExpansion> {
    if n < 2 || q < 1 || q >= n || gcd(n, q) != 1 {
        return Err(Error::domain(format!(
            "continued fraction expansion needs coprime 1 <= q < n, got ({n}, {q})"
        )));
    }
    let mut entries = Vec::new();
    let (mut num, mut den) = (n, q);
    while den > 0 {
        let b = Integer::div_ceil(&num, &den);
        entries.push(b);
        (num, den) = (den, b * den - num);
    }
    debug_assert!(entries.iter().all(|&b| b >= 2));
    debug_assert!(entries.len() as i64 <= n - 1);
    Ok(HjExpansion { n, q, entries })
}

impl HjExpansion {
    /// Evaluate the continued fraction back to an exact rational (`n/q`).
    pub fn eval(&self) -> Rational {
        let mut x = Rational::from_integer(*self.entries.last().expect("nonempty"));
        for &b in self.entries.iter().rev().skip(1) {
            x = Rational::from_integer(b) - x.recip();
        }
        x
    }

    /// Number of entries (length of the exceptional chain).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// True when the expansion has no entries (never the case for valid input).
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl std::fmt::Display for HjExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{} = [", self.n, self.q)?;
        for (k, b) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}
