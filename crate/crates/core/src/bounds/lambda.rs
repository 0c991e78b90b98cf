//! The sharp constant of the improved Marcum Q upper bound.
//!
//! lambda(x) = e^x (I0(x)/I1(x) - 1) has a single minimum on x > 0, at the
//! root rho0 of (x + 1) I1(x) = x I0(x); lambda0 is that minimum.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::specfun::{bessel_i0, bessel_i1};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaConstants {
    pub rho0: f64,
    pub lambda0: f64,
}

impl LambdaConstants {
    /// |(rho0 + 1) I1(rho0) - rho0 I0(rho0)|
    pub fn residual(&self) -> f64 {
        root_function(self.rho0).map(f64::abs).unwrap_or(f64::NAN)
    }
}

const BRACKET: (f64, f64) = (1.0, 2.0);
const RESIDUAL_TOL: f64 = 1e-14;
const MAX_ITER: usize = 200;

/// f(x) = (x + 1) I1(x) - x I0(x)
pub fn root_function(x: f64) -> Result<f64> {
    Ok((x + 1.0) * bessel_i1(x)? - x * bessel_i0(x)?)
}

/// f'(x) = x I0(x) - (x + 1/x) I1(x), from I0' = I1 and I1' = I0 - I1/x.
fn root_derivative(x: f64) -> Result<f64> {
    Ok(x * bessel_i0(x)? - (x + 1.0 / x) * bessel_i1(x)?)
}

/// Safeguarded Newton iteration on the sign-changing bracket [1, 2]: a Newton
/// step is taken when it stays inside the current bracket, bisection
/// otherwise.
fn find_root() -> Result<LambdaConstants> {
    let (mut lo, mut hi) = BRACKET;
    let f_lo = root_function(lo)?;
    let f_hi = root_function(hi)?;
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Convergence {
            what: "rho0 bracket",
            iterations: 0,
        });
    }
    let rising = f_lo < 0.0;
    let mut x = 0.5 * (lo + hi);
    let mut best = (f64::INFINITY, x);
    for _ in 0..MAX_ITER {
        let fx = root_function(x)?;
        if fx.abs() < best.0 {
            best = (fx.abs(), x);
        }
        if fx == 0.0 || (fx.abs() <= RESIDUAL_TOL && hi - lo < 1e-12) {
            break;
        }
        if (fx < 0.0) == rising {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - fx / root_derivative(x)?;
        x = if newton > lo && newton < hi && newton != x {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if hi - lo <= f64::EPSILON * x {
            break;
        }
    }
    let (residual, rho0) = best;
    if residual > RESIDUAL_TOL {
        return Err(Error::Convergence {
            what: "rho0 root finder",
            iterations: MAX_ITER,
        });
    }
    let lambda0 = rho0.exp() * (bessel_i0(rho0)? / bessel_i1(rho0)? - 1.0);
    Ok(LambdaConstants { rho0, lambda0 })
}

/// rho0 and lambda0, computed on first use and cached for the process.
pub fn solve_rho0() -> Result<LambdaConstants> {
    static CACHE: OnceLock<Result<LambdaConstants>> = OnceLock::new();
    CACHE.get_or_init(find_root).clone()
}
