//! Exact monomial moments `μ_{k,m} = ∫_{-1}^{1} x^k p_m(x) dx`.
//!
//! The power-basis coefficients of `p_m` come from the three-term recurrences
//! in exact rational arithmetic; each moment is then the exact sum
//! `Σ_j a_j · 2/(k+j+1)` over even `k + j`, rounded to `f64` once.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::coeffs::Family;

/// Hard ceiling on the number of moments the series path may request.
pub const MAX_MOMENTS: usize = 8192;

/// Power-basis coefficients `a_0..a_m` of `p_m(x) = Σ a_j x^j`.
pub fn power_coefficients(family: Family, m: usize) -> Vec<BigRational> {
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut prev = vec![int(1)];
    if m == 0 {
        return prev;
    }
    let mut cur = vec![int(0), int(1)];
    for j in 1..m {
        // next = (A x cur - B prev) / C
        let (a, b, c) = match family {
            Family::Chebyshev => (int(2), int(1), int(1)),
            Family::Legendre => (int(2 * j as i64 + 1), int(j as i64), int(j as i64 + 1)),
        };
        let mut next = vec![BigRational::zero(); j + 2];
        for (i, coef) in cur.iter().enumerate() {
            next[i + 1] += &a * coef;
        }
        for (i, coef) in prev.iter().enumerate() {
            next[i] -= &b * coef;
        }
        for coef in next.iter_mut() {
            *coef /= &c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `μ_{k,m}` as an exact rational.
pub fn exact_moment(power: &[BigRational], k: usize) -> BigRational {
    power
        .iter()
        .enumerate()
        .filter(|(j, a)| (k + j).is_multiple_of(2) && !a.is_zero())
        .fold(BigRational::zero(), |acc, (j, a)| {
            acc + a * BigRational::new(BigInt::from(2), BigInt::from((k + j + 1) as u64))
        })
}

struct MomentTable {
    power: Vec<BigRational>,
    values: RwLock<Arc<Vec<f64>>>,
}

impl MomentTable {
    fn extend_to(&self, len: usize) -> Arc<Vec<f64>> {
        let mut guard = self.values.write().expect("moment cache poisoned");
        if guard.len() < len {
            let mut grown = guard.as_ref().clone();
            grown.extend((grown.len()..len).map(|k| exact_moment(&self.power, k).to_f64().unwrap_or(0.0)));
            *guard = Arc::new(grown);
        }
        Arc::clone(&guard)
    }
}

type MomentCache = RwLock<HashMap<(Family, usize), Arc<MomentTable>>>;

fn cache() -> &'static MomentCache {
    static CACHE: OnceLock<MomentCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// At least `len` leading moments `μ_{0,m}, μ_{1,m}, ...` of `p_m`, cached per `(family, m)`.
pub fn moments(family: Family, m: usize, len: usize) -> Arc<Vec<f64>> {
    let len = len.min(MAX_MOMENTS);
    let table = {
        let hit = cache()
            .read()
            .expect("moment cache poisoned")
            .get(&(family, m))
            .cloned();
        match hit {
            Some(t) => t,
            None => {
                let fresh = Arc::new(MomentTable {
                    power: power_coefficients(family, m),
                    values: RwLock::new(Arc::new(Vec::new())),
                });
                let mut guard = cache().write().expect("moment cache poisoned");
                Arc::clone(guard.entry((family, m)).or_insert(fresh))
            }
        }
    };
    let current = Arc::clone(&table.values.read().expect("moment cache poisoned"));
    if current.len() >= len {
        current
    } else {
        // Grow geometrically so repeated requests stay cheap.
        table.extend_to(len.max(2 * current.len()).max(m + 32).min(MAX_MOMENTS))
    }
}
