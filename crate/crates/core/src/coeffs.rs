//! Exact integer coefficient tables for the closed-form transforms.
//!
//! For degree `m` the Chebyshev table holds `α_1..α_{m+1}` and the Legendre
//! table `β_1..β_{m+1}`, so that
//!
//! ```text
//! p̂_m(λ) = Σ_n c_n [e^{iλ} + (-1)^{n+m} e^{-iλ}] / (iλ)^n
//! ```
//!
//! Entries are built in arbitrary precision: `β_{m+1}^m = (2m-1)!!` leaves the
//! 64-bit range before `m = 20`.

use std::collections::HashMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Polynomial family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Chebyshev,
    Legendre,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Chebyshev => "chebyshev",
            Family::Legendre => "legendre",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "chebyshev" | "t" => Ok(Family::Chebyshev),
            "legendre" | "p" => Ok(Family::Legendre),
            other => Err(format!("unknown polynomial family {other:?}")),
        }
    }
}

/// Coefficients `c_1..c_{m+1}` of one closed-form transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    family: Family,
    degree: usize,
    coeffs: Vec<BigInt>,
}

impl CoefficientTable {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Entries in index order; `coeffs()[n - 1]` is `c_n`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `c_n` for `1 <= n <= m + 1`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.coeffs.get(i))
    }

    /// Nearest doubles; entries beyond `f64::MAX` become infinite.
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| {
                c.to_f64().unwrap_or(if c.is_negative() {
                    f64::NEG_INFINITY
                } else {
                    f64::INFINITY
                })
            })
            .collect()
    }

    /// Writes rows `family,m,n,coefficient` (no header).
    pub fn write_csv_rows<W: Write + ?Sized>(&self, out: &mut W) -> std::io::Result<()> {
        for (i, c) in self.coeffs.iter().enumerate() {
            writeln!(out, "{},{},{},{}", self.family, self.degree, i + 1, c)?;
        }
        Ok(())
    }
}

pub const CSV_HEADER: &str = "family,m,n,coefficient";

/// `R_{s,t}(r) = Π_{k=s}^{t} (2(r-k)+1)`, with the empty product `1` for `s > t`.
pub fn product_range(s: i64, t: i64, r: i64) -> BigInt {
    (s..=t).fold(BigInt::one(), |acc, k| acc * BigInt::from(2 * (r - k) + 1))
}

/// `s! / ((s-t)! t!)` for `0 <= t <= s`, zero for `t > s` or `t < 0`.
pub fn binom_clamped(s: u64, t: i64) -> BigInt {
    if t < 0 || t as u64 > s {
        return BigInt::zero();
    }
    let t = (t as u64).min(s - t as u64);
    let mut acc = BigInt::one();
    for j in 0..t {
        acc = acc * BigInt::from(s - j) / BigInt::from(j + 1);
    }
    acc
}

fn binom_i64(s: i64, t: i64) -> BigInt {
    assert!(s >= 0, "binomial upper argument must be non-negative, got {s}");
    binom_clamped(s as u64, t)
}

/// `Π_{j=lo}^{hi} (m - j)`, empty product `1`.
fn falling(m: i64, lo: i64, hi: i64) -> BigInt {
    (lo..=hi).fold(BigInt::one(), |acc, j| acc * BigInt::from(m - j))
}

fn sign(even: bool) -> BigInt {
    if even {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Chebyshev table `α_1^m..α_{m+1}^m`.
pub fn chebyshev_coeffs(m: usize) -> CoefficientTable {
    let mi = m as i64;
    let mut coeffs = Vec::with_capacity(m + 1);
    coeffs.push(sign(m.is_multiple_of(2)));
    if m >= 1 {
        coeffs.push(sign(m % 2 == 1) * BigInt::from(mi * mi));
    }
    for n in 3..=mi + 1 {
        let sum = (1..=mi - n + 2).fold(BigInt::zero(), |acc, k| {
            // For n = 3 the product j = k..k has the single factor (m - k).
            acc + binom_i64(n + k - 3, k - 1) * falling(mi, k, n + k - 3)
        });
        let value = sign((mi + n - 1) % 2 == 0) * (BigInt::one() << (n - 2) as usize) * BigInt::from(mi) * sum;
        coeffs.push(value);
    }
    CoefficientTable {
        family: Family::Chebyshev,
        degree: m,
        coeffs,
    }
}

/// Legendre table `β_1^m..β_{m+1}^m`.
///
/// Index coverage by parity: `n = 1` for even `m` is `1`; indices with `m + n`
/// odd use the two-binomial formula, indices with `m + n` even (other than
/// that first one) the single-binomial formula.
pub fn legendre_coeffs(m: usize) -> CoefficientTable {
    let mi = m as i64;
    let coeffs = (1..=mi + 1)
        .map(|n| {
            if m.is_multiple_of(2) && n == 1 {
                BigInt::one()
            } else if (mi + n) % 2 == 1 {
                let upper = mi + n - 3;
                assert!(upper % 2 == 0, "non-integral binomial argument (m={m}, n={n})");
                let u = upper / 2;
                let bracket = BigInt::from(mi + n) * binom_i64(u, n - 1) + binom_i64(u, n - 2);
                bracket * product_range((mi - n + 3) / 2, u, mi)
            } else {
                let upper = mi + n;
                assert!(upper % 2 == 0, "non-integral binomial argument (m={m}, n={n})");
                let u = upper / 2 - 1;
                -(binom_i64(u, n - 1) * product_range((mi - n) / 2 + 1, u, mi))
            }
        })
        .collect();
    CoefficientTable {
        family: Family::Legendre,
        degree: m,
        coeffs,
    }
}

pub fn build_coeffs(family: Family, m: usize) -> CoefficientTable {
    match family {
        Family::Chebyshev => chebyshev_coeffs(m),
        Family::Legendre => legendre_coeffs(m),
    }
}

/// A table together with its floating-point image, shared through the cache.
#[derive(Debug)]
pub struct CachedTable {
    pub table: CoefficientTable,
    pub values: Vec<f64>,
}

type TableCache = RwLock<HashMap<(Family, usize), Arc<CachedTable>>>;

fn cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Cached table for `(family, m)`; built on first request.
pub fn coefficients(family: Family, m: usize) -> Arc<CachedTable> {
    if let Some(hit) = cache().read().expect("coefficient cache poisoned").get(&(family, m)) {
        return Arc::clone(hit);
    }
    let table = build_coeffs(family, m);
    let values = table.to_f64();
    let entry = Arc::new(CachedTable { table, values });
    let mut guard = cache().write().expect("coefficient cache poisoned");
    Arc::clone(guard.entry((family, m)).or_insert(entry))
}
