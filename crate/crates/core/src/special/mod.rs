//! Real-order Bessel functions and the gamma family.

pub mod bessel;
pub mod gamma;

pub use bessel::{
    bessel_i, bessel_ik, bessel_j, bessel_jy, bessel_k, bessel_y, reduced_i, reduced_j, scaled_i,
    scaled_j, zk_reg, zy_reg, IkPair, JyPair,
};
pub use gamma::{cos_pi, digamma, gamma, gamma_ratio, log_gamma, rgamma, sin_pi};

/// Bessel order with the library support envelope `|nu| <= 200`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub const MAX: f64 = 200.0;

    pub fn new(nu: f64) -> crate::Result<Self> {
        if !nu.is_finite() || nu.abs() > Self::MAX {
            return Err(crate::Error::Domain(format!("Bessel order {nu} outside |nu| <= 200")));
        }
        Ok(BesselOrder(nu))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}
