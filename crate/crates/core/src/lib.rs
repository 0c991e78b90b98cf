//! Bit error rate of Gray-coded DQPSK over the AWGN channel.
//!
//! The crate evaluates the exact BER through the Marcum Q-function, five
//! analytic lower/upper bounds built from Marcum Q inequalities, seven
//! closed-form approximations obtained as weighted means of those bounds, and
//! a Monte-Carlo simulator that serves as an independent check of the exact
//! expression.
//!
//! ```
//! use dqpsk_ber::{approx, bounds, SnrPoint};
//!
//! let snr = SnrPoint::from_linear(1.0).unwrap();
//! let exact = bounds::exact_ber(snr).unwrap();
//! let set = bounds::bound_set(snr).unwrap();
//! assert!(set.l2 <= exact && exact <= set.u3);
//! let ber6 = approx::ber6(snr).unwrap();
//! assert!(((ber6 - exact) / exact).abs() < 1e-3);
//! ```

pub mod approx;
pub mod bounds;
pub mod cli;
mod error;
pub mod montecarlo;
pub mod specfun;

pub use bounds::{ChannelParams, SnrPoint};
pub use error::{Error, Result};
