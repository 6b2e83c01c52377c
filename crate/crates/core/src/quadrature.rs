//! Globally adaptive Gauss-Legendre quadrature.
//!
//! Each segment is integrated with an n-point rule on the whole segment and on
//! its two halves; the difference is the segment's error estimate. The segment
//! with the largest estimate is split until the summed estimate meets the
//! tolerance.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes and weights on [-1, 1] by Newton iteration on `P_n`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let step = p / d;
                x -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Returns `(integral, integral of |f|)` over `[a, b]`.
    pub fn apply<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> (f64, f64) {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        let mut abs_sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let v = f(mid + half * x);
            sum += w * v;
            abs_sum += w * v.abs();
        }
        (sum * half, abs_sum * half.abs())
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn default_rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(15))
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Integrator {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_segments: usize,
    /// Number of equal panels the interval is cut into before adapting.
    pub initial_panels: usize,
}

impl Default for Integrator {
    fn default() -> Self {
        Integrator {
            abs_tol: 1e-15,
            rel_tol: 1e-13,
            max_segments: 4000,
            initial_panels: 4,
        }
    }
}

impl Integrator {
    fn segment<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> Segment {
        let rule = default_rule();
        let (whole, _) = rule.apply(f, a, b);
        let m = 0.5 * (a + b);
        let (left, left_abs) = rule.apply(f, a, m);
        let (right, right_abs) = rule.apply(f, m, b);
        let value = left + right;
        let mut error = (whole - value).abs();
        // below this the estimate is rounding noise
        if error <= 50.0 * f64::EPSILON * (left_abs + right_abs) {
            error = 0.0;
        }
        Segment { a, b, value, error }
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Result<f64> {
        if a == b {
            return Ok(0.0);
        }
        let panels = self.initial_panels.max(1);
        let width = (b - a) / panels as f64;
        let mut heap: BinaryHeap<Segment> = (0..panels)
            .map(|i| {
                let lo = a + width * i as f64;
                let hi = if i + 1 == panels { b } else { lo + width };
                self.segment(&f, lo, hi)
            })
            .collect();
        loop {
            let total: f64 = heap.iter().map(|s| s.value).sum();
            let error: f64 = heap.iter().map(|s| s.error).sum();
            if !total.is_finite() {
                return Err(Error::NonFinite {
                    what: "integrand",
                    value: total,
                });
            }
            if error <= self.abs_tol.max(self.rel_tol * total.abs()) {
                return Ok(total);
            }
            if heap.len() >= self.max_segments {
                return Err(Error::QuadratureBudget {
                    a,
                    b,
                    segments: heap.len(),
                    estimate: error,
                });
            }
            let worst = heap.pop().expect("heap is never empty");
            let m = 0.5 * (worst.a + worst.b);
            heap.push(self.segment(&f, worst.a, m));
            heap.push(self.segment(&f, m, worst.b));
        }
    }
}

/// Upper limit `Y` for half-line integrals of `poly(y) * exp(2 z y - alpha^2 y^2)`.
///
/// Past `Y` the exponent sits at least 70 below its maximum on `[0, inf)`.
pub fn half_line_cutoff(alpha: f64, z: f64) -> f64 {
    const DROP: f64 = 70.0;
    if z >= 0.0 {
        z / (alpha * alpha) + DROP.sqrt() / alpha
    } else {
        DROP / (-z + (z * z + DROP * alpha * alpha).sqrt())
    }
}

/// Integrate with the default tolerances.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> Result<f64> {
    Integrator::default().integrate(f, a, b)
}
