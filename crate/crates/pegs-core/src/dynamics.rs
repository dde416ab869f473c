//! Synthetic multivariate signals from two classic dynamical systems.
//!
//! The Hénon map
//!
//! ```text
//! x[t+1] = 1 - a x[t]^2 + y[t]
//! y[t+1] = b x[t]
//! ```
//!
//! iterated from `(x0, y0)`, and the Lorenz system
//!
//! ```text
//! x' = sigma (y - x)
//! y' = x (rho - z) - y
//! z' = x y - beta z
//! ```
//!
//! integrated with the classical fixed-step fourth-order Runge–Kutta
//! scheme. Both generators are pure: identical parameters produce
//! bit-identical outputs.

use crate::error::{Error, Result};
use crate::signal::MultivariateSignal;

/// Orbit values beyond this magnitude count as divergence.
pub const DIVERGENCE_LIMIT: f64 = 1e10;

/// Hénon map parameters. `n` is the number of samples to emit, with
/// `(x0, y0)` as the first sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HenonParams {
    pub a: f64,
    pub b: f64,
    pub x0: f64,
    pub y0: f64,
    pub n: usize,
}

impl HenonParams {
    /// The parameters of the strange attractor: `a = 1.4`, `b = 0.3`,
    /// started from `(0.5, 0.1)`.
    pub fn chaotic(n: usize) -> Self {
        HenonParams {
            a: 1.4,
            b: 0.3,
            x0: 0.5,
            y0: 0.1,
            n,
        }
    }
}

/// Iterate the Hénon map, returning channels `x` and `y` of length `n`.
///
/// Fails with a divergence error naming the first offending 0-based sample
/// index if the orbit leaves `[-1e10, 1e10]`.
pub fn henon(p: &HenonParams) -> Result<MultivariateSignal> {
    if p.n == 0 {
        return Err(Error::invalid("henon: sample count must be >= 1"));
    }
    for (name, v) in [("a", p.a), ("b", p.b), ("x0", p.x0), ("y0", p.y0)] {
        if !v.is_finite() {
            return Err(Error::invalid(format!("henon: parameter {name} is {v}")));
        }
    }
    let mut xs = Vec::with_capacity(p.n);
    let mut ys = Vec::with_capacity(p.n);
    let (mut x, mut y) = (p.x0, p.y0);
    for t in 0..p.n {
        if !x.is_finite()
            || !y.is_finite()
            || x.abs() > DIVERGENCE_LIMIT
            || y.abs() > DIVERGENCE_LIMIT
        {
            return Err(Error::Divergence {
                index: t,
                limit: DIVERGENCE_LIMIT,
            });
        }
        xs.push(x);
        ys.push(y);
        let next_x = 1.0 - p.a * x * x + y;
        let next_y = p.b * x;
        x = next_x;
        y = next_y;
    }
    MultivariateSignal::from_channels(vec![xs, ys]).map(|u| {
        u.with_names(vec!["x".into(), "y".into()])
            .expect("two names")
    })
}

/// Lorenz system parameters.
///
/// `steps` samples are produced at spacing `dt` starting from `init` (the
/// initial state is sample 0), then the first `transient` samples are
/// discarded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorenzParams {
    pub sigma: f64,
    pub rho: f64,
    pub beta: f64,
    pub init: [f64; 3],
    pub dt: f64,
    pub steps: usize,
    pub transient: usize,
}

impl Default for LorenzParams {
    /// Classic coefficients `sigma = 10`, `beta = 8/3` at the chaotic
    /// `rho = 28`, integrated from `(1, 1, 1)` with `dt = 0.01` for 15000
    /// samples of which the first 5000 are discarded.
    fn default() -> Self {
        LorenzParams {
            sigma: 10.0,
            rho: 28.0,
            beta: 8.0 / 3.0,
            init: [1.0, 1.0, 1.0],
            dt: 0.01,
            steps: 15_000,
            transient: 5_000,
        }
    }
}

fn lorenz_rhs(p: &LorenzParams, s: [f64; 3]) -> [f64; 3] {
    let [x, y, z] = s;
    [p.sigma * (y - x), x * (p.rho - z) - y, x * y - p.beta * z]
}

/// One classical RK4 step of size `dt`.
fn rk4_step(p: &LorenzParams, s: [f64; 3], dt: f64) -> [f64; 3] {
    let k1 = lorenz_rhs(p, s);
    let k2 = lorenz_rhs(p, add_scaled(s, k1, dt / 2.0));
    let k3 = lorenz_rhs(p, add_scaled(s, k2, dt / 2.0));
    let k4 = lorenz_rhs(p, add_scaled(s, k3, dt));
    let mut out = s;
    for i in 0..3 {
        out[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

fn add_scaled(s: [f64; 3], k: [f64; 3], h: f64) -> [f64; 3] {
    [s[0] + h * k[0], s[1] + h * k[1], s[2] + h * k[2]]
}

/// Integrate the Lorenz system, returning channels `x`, `y`, `z` of length
/// `steps - transient`.
pub fn lorenz(p: &LorenzParams) -> Result<MultivariateSignal> {
    if !(p.dt.is_finite() && p.dt > 0.0) {
        return Err(Error::invalid(format!(
            "lorenz: step size must be positive, got {}",
            p.dt
        )));
    }
    if p.steps <= p.transient {
        return Err(Error::invalid(format!(
            "lorenz: steps ({}) must exceed transient ({})",
            p.steps, p.transient
        )));
    }
    for (name, v) in [("sigma", p.sigma), ("rho", p.rho), ("beta", p.beta)] {
        if !v.is_finite() {
            return Err(Error::invalid(format!("lorenz: parameter {name} is {v}")));
        }
    }
    if p.init.iter().any(|v| !v.is_finite()) {
        return Err(Error::invalid("lorenz: initial state must be finite"));
    }

    let kept = p.steps - p.transient;
    let mut xs = Vec::with_capacity(kept);
    let mut ys = Vec::with_capacity(kept);
    let mut zs = Vec::with_capacity(kept);
    let mut state = p.init;
    for t in 0..p.steps {
        if state.iter().any(|v| !v.is_finite()) {
            return Err(Error::Divergence {
                index: t,
                limit: f64::MAX,
            });
        }
        if t >= p.transient {
            xs.push(state[0]);
            ys.push(state[1]);
            zs.push(state[2]);
        }
        if t + 1 < p.steps {
            state = rk4_step(p, state, p.dt);
        }
    }
    MultivariateSignal::from_channels(vec![xs, ys, zs]).map(|u| {
        u.with_names(vec!["x".into(), "y".into(), "z".into()])
            .expect("three names")
    })
}
