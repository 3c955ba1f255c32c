//! Exact central charges of line bundles and their sums.
//!
//! On an `n`-dimensional flag variety the charge of a line bundle `E`
//! reduces to a finite product: since all invariant forms are
//! simultaneously diagonal with constant eigenvalues,
//!
//! `Z_ω(E) = -(-i)^n · ∏_{β ∈ Φ_I⁺} (a_β + i·b_β) / ⟨ϱ⁺, β∨⟩`
//!
//! with `a_β = ⟨λ([ω]), β∨⟩` and `b_β = ⟨λ(E), β∨⟩`. The product is a
//! Gaussian rational, so charge comparisons are exact. Charges add over
//! Whitney sums.
//!
//! Two distinct comparisons matter and they are *not* the same:
//!
//! * [`im_charge_ratio_zero`]: the vanishing of `Im(Z_E · conj(Z_F))`.
//!   This says the two charges span the same real line, i.e. the phases
//!   agree modulo π.
//! * [`charges_aligned`]: additionally `Re(Z_E · conj(Z_F)) > 0`, i.e.
//!   the charges lie on the same ray. This is the test equivalent to the
//!   Lagrangian phases agreeing modulo 2π, and it is the one used by the
//!   instanton classification.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bundle::SumBundle;
use crate::error::Error;
use crate::flag::{Bundle, KahlerClass, LineBundle};
use crate::phase::{GaussRational, Ray};
use crate::root_system::Weight;

/// Exact central charge on an `n`-dimensional flag variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralCharge {
    dim: usize,
    value: GaussRational,
}

impl CentralCharge {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn value(&self) -> &GaussRational {
        &self.value
    }

    /// Direction of the charge; `None` only for a vanishing charge, which
    /// cannot happen for a single line bundle against a Kähler class.
    pub fn ray(&self) -> Option<Ray> {
        Ray::from_gauss(&self.value)
    }

    /// Advisory float of `Arg Z`.
    pub fn arg_f64(&self) -> f64 {
        match self.ray() {
            Some(ray) => ray.arg_f64(),
            None => f64::NAN,
        }
    }

    /// Sum of charges (the charge of a Whitney sum).
    pub fn add(&self, other: &CentralCharge) -> CentralCharge {
        assert_eq!(self.dim, other.dim, "charges live on different spaces");
        CentralCharge {
            dim: self.dim,
            value: self.value.clone() + other.value.clone(),
        }
    }
}

/// The Gaussian unit `-(-i)^n`.
pub(crate) fn charge_unit(n: usize) -> GaussRational {
    let (re, im) = match n % 4 {
        0 => (-1, 0),
        1 => (0, 1),
        2 => (1, 0),
        _ => (0, -1),
    };
    GaussRational::new(
        BigRational::from_integer(re.into()),
        BigRational::from_integer(im.into()),
    )
}

/// `∏_{β ∈ Φ_I⁺} (a_β + i·b_β) / ⟨ϱ⁺, β∨⟩`, the charge without its unit
/// prefactor. Its argument is the Lagrangian phase mod 2π.
pub(crate) fn charge_integral(kc: &KahlerClass, xi: &Weight) -> Result<GaussRational, Error> {
    kc.flag().check_supported(xi)?;
    let rs = kc.flag().root_system();
    let rho = rs.weyl_vector();
    let mut product = GaussRational::new(BigRational::one(), BigRational::zero());
    for beta in kc.flag().phi_i_plus() {
        let factor = GaussRational::new(
            rs.pairing(kc.weight(), beta) / rs.pairing(&rho, beta),
            rs.pairing(xi, beta) / rs.pairing(&rho, beta),
        );
        product *= factor;
    }
    Ok(product)
}

impl KahlerClass {
    /// Central charge of a line bundle.
    pub fn central_charge(&self, line: &LineBundle) -> Result<CentralCharge, Error> {
        if line.flag() != self.flag() {
            return Err(Error::FlagMismatch);
        }
        let value = charge_unit(self.flag().dim()) * charge_integral(self, line.weight())?;
        debug_assert!(!value.re.is_zero() || !value.im.is_zero());
        Ok(CentralCharge {
            dim: self.flag().dim(),
            value,
        })
    }

    /// Charge of a Whitney sum: the sum of the summand charges.
    pub fn total_charge(&self, sum: &SumBundle) -> Result<CentralCharge, Error> {
        let mut charges = sum.summands().iter().map(|line| self.central_charge(line));
        let first = charges.next().expect("sum bundles are nonempty")?;
        charges.try_fold(first, |acc, z| Ok(acc.add(&z?)))
    }
}

/// Exact test `Im(Z_E · conj(Z_F)) = 0`.
///
/// Equivalent to the Lagrangian phases of `E` and `F` agreeing modulo π:
/// opposite rays also pass. See [`charges_aligned`] for the mod-2π test.
pub fn im_charge_ratio_zero(
    kc: &KahlerClass,
    e: &LineBundle,
    f: &LineBundle,
) -> Result<bool, Error> {
    Ok(cross(kc, e, f)?.im.is_zero())
}

/// Exact test that `Z_E` and `Z_F` lie on the same ray:
/// `Im(Z_E · conj(Z_F)) = 0` and `Re(Z_E · conj(Z_F)) > 0`.
///
/// Equivalent to the Lagrangian phases of `E` and `F` agreeing modulo 2π.
pub fn charges_aligned(kc: &KahlerClass, e: &LineBundle, f: &LineBundle) -> Result<bool, Error> {
    let z = cross(kc, e, f)?;
    Ok(z.im.is_zero() && z.re.is_positive())
}

fn cross(kc: &KahlerClass, e: &LineBundle, f: &LineBundle) -> Result<GaussRational, Error> {
    let ze = kc.central_charge(e)?;
    let zf = kc.central_charge(f)?;
    Ok(ze.value() * zf.value().conj())
}
