//! Channel parameterization, the exact DQPSK bit error rate and its
//! analytic bounds.
//!
//! With bit SNR gamma, the Gray-coded DQPSK error probability over AWGN is
//!
//! ```text
//! BER = Q(a, b) - 1/2 I0(ab) e^{-(a^2+b^2)/2},  a = sqrt(gamma (2 - sqrt 2)),
//!                                               b = sqrt(gamma (2 + sqrt 2)).
//! ```
//!
//! The bounds replace Q(a, b) by closed-form Marcum Q inequalities:
//!
//! | bound | Marcum Q inequality used                                   |
//! |-------|------------------------------------------------------------|
//! | L1    | sqrt(pi/2) b e^{-ab} I0(ab) e(a,b)                         |
//! | U1    | e^{-ab} I0(ab) [e^{-(b-a)^2/2} + a sqrt(pi/2) e(a,b)]      |
//! | L2    | sqrt(pi/2) b I0(ab) E(a,b) / (e^{ab} - e^{-ab})            |
//! | U2    | same shape as U1 with E(a,b) and 1/(e^{ab} + e^{-ab})      |
//! | U3    | U1 with e^{ab} replaced by e^{ab} + lambda0                |
//!
//! Every expression is evaluated with s = e^{-ab} I0(ab) as one factor and
//! reciprocals such as 1/(e^{ab} - e^{-ab}) rewritten as
//! e^{-ab}/(1 - e^{-2ab}), so nothing overflows at high SNR.
//!
//! b/a = 1 + sqrt 2 for every gamma, so the b >= a > 0 hypothesis of all the
//! inequalities holds identically and is not re-checked per call.

mod lambda;

pub use lambda::{root_function, solve_rho0, LambdaConstants};

use std::f64::consts::{FRAC_PI_2, SQRT_2};

use crate::error::{domain, Result};
use crate::specfun::{big_e_fn, e_fn, i0_scaled_unchecked, marcum_q};

/// Bit signal-to-noise ratio Eb/N0, kept in both decibel and linear form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnrPoint {
    gamma_db: f64,
    gamma_lin: f64,
}

impl SnrPoint {
    pub fn from_linear(gamma_lin: f64) -> Result<Self> {
        if !(gamma_lin > 0.0 && gamma_lin.is_finite()) {
            return Err(domain(format!(
                "gamma must be positive and finite, got {gamma_lin} (linear)"
            )));
        }
        Ok(SnrPoint {
            gamma_db: 10.0 * gamma_lin.log10(),
            gamma_lin,
        })
    }

    pub fn from_db(gamma_db: f64) -> Result<Self> {
        if !gamma_db.is_finite() {
            return Err(domain(format!("gamma must be finite, got {gamma_db} dB")));
        }
        let gamma_lin = 10f64.powf(gamma_db / 10.0);
        if !(gamma_lin > 0.0 && gamma_lin.is_finite()) {
            return Err(domain(format!(
                "gamma must be positive and finite, got {gamma_db} dB ({gamma_lin} linear)"
            )));
        }
        Ok(SnrPoint { gamma_db, gamma_lin })
    }

    pub fn db(&self) -> f64 {
        self.gamma_db
    }

    pub fn linear(&self) -> f64 {
        self.gamma_lin
    }
}

/// The Marcum arguments (a, b) for one SNR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    a: f64,
    b: f64,
}

impl ChannelParams {
    pub fn from_snr(snr: SnrPoint) -> Self {
        let g = snr.linear();
        ChannelParams {
            a: (g * (2.0 - SQRT_2)).sqrt(),
            b: (g * (2.0 + SQRT_2)).sqrt(),
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// a b = gamma sqrt 2
    pub fn ab(&self) -> f64 {
        self.a * self.b
    }

    pub fn e(&self) -> Result<f64> {
        e_fn(self.a, self.b)
    }

    pub fn big_e(&self) -> Result<f64> {
        big_e_fn(self.a, self.b)
    }

    pub fn marcum_q(&self) -> Result<f64> {
        marcum_q(self.a, self.b)
    }
}

pub fn channel_params(snr: SnrPoint) -> ChannelParams {
    ChannelParams::from_snr(snr)
}

/// Shared ingredients of the bound and approximation formulas at one SNR.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Terms {
    pub a: f64,
    pub b: f64,
    /// e^{-ab} I0(ab)
    pub i0_scaled: f64,
    /// 1/2 I0(ab) e^{-(a^2+b^2)/2}
    pub half_pdf: f64,
    pub e: f64,
    pub big_e: f64,
    /// e^{-ab}
    pub decay: f64,
    /// e^{-2ab}
    pub decay2: f64,
    /// 1 - e^{-2ab}
    pub one_minus_decay2: f64,
    /// 1 + e^{-2ab}
    pub one_plus_decay2: f64,
    pub lambda0: f64,
    /// e(-a, b) = erfc((a+b)/sqrt 2)
    pub tail: f64,
}

impl Terms {
    pub fn new(params: &ChannelParams) -> Result<Self> {
        let (a, b) = (params.a(), params.b());
        let ab = params.ab();
        let i0_scaled = i0_scaled_unchecked(ab);
        let gap = b - a;
        Ok(Terms {
            a,
            b,
            i0_scaled,
            half_pdf: 0.5 * i0_scaled * (-0.5 * gap * gap).exp(),
            e: params.e()?,
            big_e: params.big_e()?,
            decay: (-ab).exp(),
            decay2: (-2.0 * ab).exp(),
            one_minus_decay2: -(-2.0 * ab).exp_m1(),
            one_plus_decay2: 1.0 + (-2.0 * ab).exp(),
            lambda0: solve_rho0()?.lambda0,
            tail: libm::erfc((a + b) * std::f64::consts::FRAC_1_SQRT_2),
        })
    }

    pub fn at(snr: SnrPoint) -> Result<Self> {
        Terms::new(&ChannelParams::from_snr(snr))
    }

    fn root_half_pi_s(&self) -> f64 {
        FRAC_PI_2.sqrt() * self.i0_scaled
    }

    pub fn l1(&self) -> f64 {
        self.root_half_pi_s() * self.b * self.e - self.half_pdf
    }

    pub fn u1(&self) -> f64 {
        self.root_half_pi_s() * self.a * self.e + self.half_pdf
    }

    pub fn l2(&self) -> f64 {
        self.root_half_pi_s() * self.b * self.big_e / self.one_minus_decay2 - self.half_pdf
    }

    pub fn u2(&self) -> f64 {
        self.root_half_pi_s() * self.a * self.big_e / self.one_plus_decay2 + self.half_pdf
    }

    /// L2 - L1 from E/(1-d^2) - e = (e d^2 - e(-a,b))/(1-d^2), d = e^{-ab}.
    /// Both terms decay like e^{-(a+b)^2/2} with ratio near 1 + sqrt 2, so the
    /// difference keeps its accuracy after L1 and L2 round to the same double.
    pub fn l2_minus_l1(&self) -> f64 {
        self.root_half_pi_s() * self.b * (self.e * self.decay2 - self.tail) / self.one_minus_decay2
    }

    pub fn u3(&self) -> f64 {
        self.root_half_pi_s() * self.a * self.e / (1.0 + self.lambda0 * self.decay)
            + self.half_pdf
    }
}

/// Q(a, b) - 1/2 I0(ab) e^{-(a^2+b^2)/2}, with Q from the quadrature evaluator.
pub fn exact_ber(snr: SnrPoint) -> Result<f64> {
    let params = ChannelParams::from_snr(snr);
    let gap = params.b() - params.a();
    let half_pdf = 0.5 * i0_scaled_unchecked(params.ab()) * (-0.5 * gap * gap).exp();
    Ok(params.marcum_q()? - half_pdf)
}

pub fn bound_l1(snr: SnrPoint) -> Result<f64> {
    Ok(Terms::at(snr)?.l1())
}

pub fn bound_u1(snr: SnrPoint) -> Result<f64> {
    Ok(Terms::at(snr)?.u1())
}

pub fn bound_l2(snr: SnrPoint) -> Result<f64> {
    Ok(Terms::at(snr)?.l2())
}

pub fn bound_u2(snr: SnrPoint) -> Result<f64> {
    Ok(Terms::at(snr)?.u2())
}

pub fn bound_u3(snr: SnrPoint) -> Result<f64> {
    Ok(Terms::at(snr)?.u3())
}

/// The five bounds at one SNR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundSet {
    pub l1: f64,
    pub l2: f64,
    pub u1: f64,
    pub u2: f64,
    pub u3: f64,
    /// L2 - L1 evaluated directly; stays positive where l1 == l2 in doubles.
    pub l2_minus_l1: f64,
}

impl BoundSet {
    pub(crate) fn from_terms(t: &Terms) -> Self {
        BoundSet {
            l1: t.l1(),
            l2: t.l2(),
            u1: t.u1(),
            u2: t.u2(),
            u3: t.u3(),
            l2_minus_l1: t.l2_minus_l1(),
        }
    }

    /// The tightest upper bound, min(U2, U3).
    pub fn best_upper(&self) -> f64 {
        self.u2.min(self.u3)
    }

    /// L1 < L2 <= ber <= min(U2, U3) <= U1. Above gamma ~ 13 linear, L1 and
    /// L2 round to the same double; the strict step is then decided by
    /// [`BoundSet::l2_minus_l1`].
    pub fn brackets(&self, ber: f64) -> bool {
        let lower_strict = self.l1 < self.l2 || (self.l1 == self.l2 && self.l2_minus_l1 > 0.0);
        lower_strict && self.l2 <= ber && ber <= self.best_upper() && self.best_upper() <= self.u1
    }
}

pub fn bound_set(snr: SnrPoint) -> Result<BoundSet> {
    Ok(BoundSet::from_terms(&Terms::at(snr)?))
}
