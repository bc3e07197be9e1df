//! Brute-force references: polynomial values by recurrence and Gauss–Legendre
//! quadrature of the defining integrals. Nothing here touches the coefficient
//! tables, so it can check them.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;

use crate::coeffs::Family;
use crate::complex::I;
use crate::error::{Error, Result};

/// Largest rule the adaptive transform quadrature will build.
pub const MAX_ORDER: usize = 4096;

/// Required agreement between an `n`-point and a `2n`-point estimate.
pub const CONVERGENCE_TOLERANCE: f64 = 1e-13;

/// `n`-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Nodes by Newton iteration on the three-term recurrence from
    /// Tricomi-style initial guesses; weights `2 / ((1 - x^2) P_n'(x)^2)`.
    pub fn gauss_legendre(order: usize) -> Self {
        assert!(order >= 1, "quadrature order must be positive");
        let n = order;
        let nf = n as f64;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let theta = PI * (i as f64 + 0.75) / (nf + 0.5);
            let mut x = (1.0 - (nf - 1.0) / (8.0 * nf * nf * nf)) * theta.cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_and_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-15 * x.abs().max(1.0) {
                    dp = legendre_and_derivative(n, x).1;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // theta increases with i, so x decreases: fill from both ends.
            nodes[n - 1 - i] = x;
            nodes[i] = -x;
            weights[n - 1 - i] = w;
            weights[i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    pub fn integrate_complex<F: Fn(f64) -> Complex64>(&self, f: F) -> Complex64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| f(x) * w).sum()
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence; interior `x` only.
fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let (p, prev) = if n == 0 { (1.0, 0.0) } else { (p1, p0) };
    let d = n as f64 * (x * p - prev) / (x * x - 1.0);
    (p, d)
}

type RuleCache = RwLock<HashMap<usize, Arc<QuadratureRule>>>;

fn rule_cache() -> &'static RuleCache {
    static CACHE: OnceLock<RuleCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Cached Gauss–Legendre rule of the given order.
pub fn gauss_rule(order: usize) -> Arc<QuadratureRule> {
    if let Some(rule) = rule_cache().read().expect("rule cache poisoned").get(&order) {
        return Arc::clone(rule);
    }
    let rule = Arc::new(QuadratureRule::gauss_legendre(order));
    let mut guard = rule_cache().write().expect("rule cache poisoned");
    Arc::clone(guard.entry(order).or_insert(rule))
}

fn check_unit_interval(x: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain(format!("x = {x} lies outside [-1, 1]")))
    }
}

/// `T_m(x)` by `T_{k+1} = 2x T_k - T_{k-1}`.
pub fn eval_chebyshev(m: usize, x: f64) -> Result<f64> {
    check_unit_interval(x)?;
    Ok(chebyshev_unchecked(m, x))
}

/// `P_m(x)` by `(k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}`.
pub fn eval_legendre(m: usize, x: f64) -> Result<f64> {
    check_unit_interval(x)?;
    Ok(legendre_unchecked(m, x))
}

pub fn eval_polynomial(family: Family, m: usize, x: f64) -> Result<f64> {
    match family {
        Family::Chebyshev => eval_chebyshev(m, x),
        Family::Legendre => eval_legendre(m, x),
    }
}

fn chebyshev_unchecked(m: usize, x: f64) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let (mut t0, mut t1) = (1.0, x);
    for _ in 1..m {
        let t2 = 2.0 * x * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    t1
}

fn legendre_unchecked(m: usize, x: f64) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let (mut p0, mut p1) = (1.0, x);
    for k in 1..m {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// `∫_{-1}^{1} e^{-iλx} p_m(x) dx` by Gauss–Legendre quadrature.
///
/// Starts at order `max(40, m + ⌈|λ|⌉ + 20)` and doubles until two successive
/// estimates agree to [`CONVERGENCE_TOLERANCE`] relative to `∫ |integrand|`.
pub fn quad_transform(family: Family, m: usize, lambda: Complex64) -> Result<Complex64> {
    let integrand = |x: f64| {
        let p = match family {
            Family::Chebyshev => chebyshev_unchecked(m, x),
            Family::Legendre => legendre_unchecked(m, x),
        };
        (-I * lambda * x).exp() * p
    };
    let start = 40.max(m + lambda.norm().ceil() as usize + 20);
    adaptive(start, integrand)
}

/// Doubling Gauss–Legendre integration of a smooth complex integrand.
pub fn adaptive<F: Fn(f64) -> Complex64>(start: usize, f: F) -> Result<Complex64> {
    let mut order = start.max(1);
    if order > MAX_ORDER {
        return Err(Error::Accuracy(format!("initial order {order} exceeds {MAX_ORDER}")));
    }
    let mut coarse = gauss_rule(order).integrate_complex(&f);
    while 2 * order <= MAX_ORDER {
        order *= 2;
        let rule = gauss_rule(order);
        let fine = rule.integrate_complex(&f);
        let scale = rule.integrate(|x| f(x).norm());
        if !(fine.re.is_finite() && fine.im.is_finite()) {
            return Err(Error::Range("quadrature produced a non-finite value".into()));
        }
        if (fine - coarse).norm() <= CONVERGENCE_TOLERANCE * scale.max(fine.norm()) {
            return Ok(fine);
        }
        coarse = fine;
    }
    Err(Error::Accuracy(format!(
        "quadrature did not converge by order {MAX_ORDER}"
    )))
}
