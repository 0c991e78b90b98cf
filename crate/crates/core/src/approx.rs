//! Closed-form BER approximations built as weighted means of the bounds.
//!
//! BER1..BER3 use the fixed weight 1/2 and also have direct closed forms,
//! BER4 is a separate closed form, and BER5..BER7 use the SNR-dependent
//! weights [`omega5`], [`omega6`], [`omega7`].
//!
//! The weight functions take the same linear bit SNR as the channel. The
//! reference tables are indexed by linear gamma = 1..12, and with that
//! reading the relative errors of BER6 and BER7 are reproduced; feeding the
//! weights decibel values does not reproduce them.
//!
//! The weights are piecewise and discontinuous at their breakpoints; no
//! smoothing is applied. omega7's middle branch covers 1 <= gamma < 8, so
//! gamma = 8 takes the third branch, which is what the tabulated relative
//! error at gamma = 8 corresponds to.

use std::f64::consts::PI;

use crate::bounds::{exact_ber, BoundSet, SnrPoint, Terms};
use crate::error::{domain, Result};

/// A mixing weight in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Weight(f64);

impl Weight {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Weight(value))
        } else {
            Err(domain(format!("weight must lie in [0, 1], got {value}")))
        }
    }

    pub const HALF: Weight = Weight(0.5);

    pub fn value(self) -> f64 {
        self.0
    }
}

/// A(x, y; w) = w x + (1 - w) y
pub fn weighted_mean(x: f64, y: f64, w: Weight) -> f64 {
    w.0 * x + (1.0 - w.0) * y
}

fn check_gamma(gamma: f64, allow_zero: bool) -> Result<()> {
    let ok = if allow_zero { gamma >= 0.0 } else { gamma > 0.0 };
    if ok && gamma.is_finite() {
        Ok(())
    } else {
        Err(domain(format!(
            "gamma must be {} and finite, got {gamma}",
            if allow_zero { "non-negative" } else { "positive" }
        )))
    }
}

pub fn omega5(gamma: f64) -> Result<Weight> {
    check_gamma(gamma, false)?;
    let w = if gamma < 1.0 {
        0.65 * gamma.powf(0.25)
    } else {
        0.5 + 1.1 * (-PI / (2.0 * gamma.sqrt())).exp() / gamma.powf(1.5) * 0.5f64.sqrt()
    };
    Weight::new(w)
}

pub fn omega6(gamma: f64) -> Result<Weight> {
    check_gamma(gamma, true)?;
    let w = if gamma < 1.0 {
        (-gamma * gamma / 2.9).exp() * 0.25 + 0.5
    } else if gamma < 5.0 {
        (-1.0 / (2.0 * gamma + 1.0)).exp() / (gamma + 0.5).powf(1.5)
            * (1.0 / (2.0 * PI)).sqrt()
            * 1.15
            + 0.5
    } else {
        1.0 / PI / (1.0 + gamma) * 0.65 + 0.5
    };
    Weight::new(w)
}

pub fn omega7(gamma: f64) -> Result<Weight> {
    check_gamma(gamma, true)?;
    let w = if gamma < 1.0 {
        (1.0 - gamma).powi(2) * 0.95
    } else if gamma < 8.0 {
        0.5 - 1.4 * (-gamma.powf(1.2)).exp() + 0.02
    } else {
        1.0 / (5.2 * gamma) + 0.5
    };
    Weight::new(w)
}

const SQRT_PI_OVER_8: f64 = 0.626_657_068_657_750_1;

/// sqrt(pi/8) (a + b) e^{-ab} I0(ab) e(a, b)
pub fn ber1(snr: SnrPoint) -> Result<f64> {
    Ok(ber1_closed(&Terms::at(snr)?))
}

/// sqrt(pi/8) I0(ab) E(a, b) [(a + b) e^{ab} - (a - b) e^{-ab}] / (e^{2ab} - e^{-2ab})
pub fn ber2(snr: SnrPoint) -> Result<f64> {
    Ok(ber2_closed(&Terms::at(snr)?))
}

/// sqrt(pi/8) I0(ab) [b E(a,b)/(e^{ab} - e^{-ab}) + a e(a,b)/(e^{ab} + lambda0)]
pub fn ber3(snr: SnrPoint) -> Result<f64> {
    Ok(ber3_closed(&Terms::at(snr)?))
}

/// Diverges like 1/sqrt(ab) as gamma -> 0; gamma below this is rejected.
pub const BER4_MIN_GAMMA: f64 = 1e-12;

/// e^{-(b+a)^2/2} / sqrt(8 pi ab) + 1/4 (sqrt(a/b) + sqrt(b/a)) E(a, b)
pub fn ber4(snr: SnrPoint) -> Result<f64> {
    if snr.linear() < BER4_MIN_GAMMA {
        return Err(domain(format!(
            "BER4 needs gamma >= {BER4_MIN_GAMMA} (linear), got {}",
            snr.linear()
        )));
    }
    Ok(ber4_closed(&Terms::at(snr)?))
}

pub fn ber5(snr: SnrPoint) -> Result<f64> {
    let t = Terms::at(snr)?;
    Ok(weighted_mean(t.l1(), t.u1(), omega5(snr.linear())?))
}

pub fn ber6(snr: SnrPoint) -> Result<f64> {
    let t = Terms::at(snr)?;
    Ok(weighted_mean(t.l2(), t.u2(), omega6(snr.linear())?))
}

pub fn ber7(snr: SnrPoint) -> Result<f64> {
    let t = Terms::at(snr)?;
    Ok(weighted_mean(t.l2(), t.u3(), omega7(snr.linear())?))
}

fn ber1_closed(t: &Terms) -> f64 {
    SQRT_PI_OVER_8 * (t.a + t.b) * t.i0_scaled * t.e
}

fn ber2_closed(t: &Terms) -> f64 {
    // numerator and denominator multiplied by e^{-2ab}
    let shape = ((t.a + t.b) - (t.a - t.b) * t.decay2) / (t.one_minus_decay2 * t.one_plus_decay2);
    SQRT_PI_OVER_8 * t.i0_scaled * t.big_e * shape
}

fn ber3_closed(t: &Terms) -> f64 {
    SQRT_PI_OVER_8
        * t.i0_scaled
        * (t.b * t.big_e / t.one_minus_decay2 + t.a * t.e / (1.0 + t.lambda0 * t.decay))
}

fn ber4_closed(t: &Terms) -> f64 {
    let sum = t.a + t.b;
    let ab = t.a * t.b;
    (-0.5 * sum * sum).exp() / (8.0 * PI * ab).sqrt()
        + 0.25 * ((t.a / t.b).sqrt() + (t.b / t.a).sqrt()) * t.big_e
}

/// (approx - exact) / exact
pub fn relative_error(approx: f64, exact: f64) -> Result<f64> {
    if !(exact > 0.0) {
        return Err(domain(format!(
            "relative error needs a positive reference, got {exact}"
        )));
    }
    Ok((approx - exact) / exact)
}

/// One row of the approximation tables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxSet {
    pub exact: f64,
    pub bounds: BoundSet,
    pub ber: [f64; 7],
    pub eps5: f64,
    pub eps6: f64,
    pub eps7: f64,
    pub weights: [Weight; 3],
}

impl ApproxSet {
    /// BER_i for i in 1..=7.
    pub fn ber(&self, i: usize) -> f64 {
        self.ber[i - 1]
    }

    /// Signed relative error of BER_i for i in 1..=7.
    pub fn eps(&self, i: usize) -> f64 {
        (self.ber(i) - self.exact) / self.exact
    }
}

pub fn approx_set(snr: SnrPoint) -> Result<ApproxSet> {
    let t = Terms::at(snr)?;
    let exact = exact_ber(snr)?;
    let bounds = BoundSet::from_terms(&t);
    let g = snr.linear();
    let weights = [omega5(g)?, omega6(g)?, omega7(g)?];
    if g < BER4_MIN_GAMMA {
        return Err(domain(format!("BER4 needs gamma >= {BER4_MIN_GAMMA}, got {g}")));
    }
    let ber = [
        ber1_closed(&t),
        ber2_closed(&t),
        ber3_closed(&t),
        ber4_closed(&t),
        weighted_mean(bounds.l1, bounds.u1, weights[0]),
        weighted_mean(bounds.l2, bounds.u2, weights[1]),
        weighted_mean(bounds.l2, bounds.u3, weights[2]),
    ];
    Ok(ApproxSet {
        exact,
        bounds,
        ber,
        eps5: relative_error(ber[4], exact)?,
        eps6: relative_error(ber[5], exact)?,
        eps7: relative_error(ber[6], exact)?,
        weights,
    })
}
