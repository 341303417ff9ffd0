//! Special functions, SNR units and adaptive quadrature.

mod quadrature;
mod snr;
mod special;

pub use quadrature::{
    integrate_adaptive, integrate_adaptive_breakpoints, integrate_adaptive_with_budget,
    QuadratureResult, DEFAULT_MAX_EVALUATIONS,
};
pub use snr::{db_to_linear, linear_to_db, SnrDomain, SnrValue};
pub use special::{erf, erfc, erfcx, q_craig, q_function};
