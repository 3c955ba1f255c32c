//! Exact Lagrangian phases.
//!
//! The phase of a class `ξ` against a Kähler class `ω` is the sum
//! `Θ = Σ_{β ∈ Φ_I⁺} arctan(b_β / a_β)` with `a_β = ⟨λ([ω]), β∨⟩ > 0` and
//! `b_β = ⟨ξ, β∨⟩`. Such a sum is exactly the argument of the product of
//! the Gaussian rationals `a_β + i·b_β`, so a phase is represented with no
//! rounding at all as a pair
//!
//! * `ray`: the product, normalized to a primitive Gaussian-integer
//!   direction (positive real multiples are identified), and
//! * `winding`: the integer `w` with `Θ = arg(ray) + 2πw`, where `arg`
//!   is the principal branch in `(-π, π]`.
//!
//! Equality of phases, both on the nose and mod 2π, is then decidable by
//! exact integer sign tests. Floats appear only in advisory renderings.
//!
//! The winding is tracked during the product: every factor has argument
//! in `(-π/2, π/2)` because `a_β > 0`, so the running argument can cross
//! the branch cut at `±π` by at most one turn per factor, and the
//! crossing is visible in the quadrant signs of the accumulator. The ray
//! `Re < 0, Im = 0` belongs to the upper region (principal argument `π`),
//! which is what makes a phase of exactly `π` representable with
//! winding 0.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::flag::{Bundle, KahlerClass, LineBundle};
use crate::root_system::Weight;

/// Exact complex scalar with rational real and imaginary parts.
pub type GaussRational = Complex<BigRational>;

/// A nonzero direction in the plane: a Gaussian integer with coprime
/// components, unique among positive real multiples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ray {
    re: BigInt,
    im: BigInt,
}

impl Ray {
    /// Direction of a nonzero Gaussian rational: clear denominators,
    /// divide out the gcd. Both steps scale by positive reals, so the
    /// argument is untouched.
    pub fn from_gauss(z: &GaussRational) -> Option<Self> {
        if z.re.is_zero() && z.im.is_zero() {
            return None;
        }
        let scale = z.re.denom().lcm(z.im.denom());
        let re = (&z.re * &scale).to_integer();
        let im = (&z.im * &scale).to_integer();
        let g = re.gcd(&im);
        Some(Self {
            re: re / &g,
            im: im / &g,
        })
    }

    /// The positive real axis (argument 0).
    pub fn one() -> Self {
        Self {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    /// The negative real axis (argument π).
    pub fn minus_one() -> Self {
        Self {
            re: -BigInt::one(),
            im: BigInt::zero(),
        }
    }

    pub fn re(&self) -> &BigInt {
        &self.re
    }

    pub fn im(&self) -> &BigInt {
        &self.im
    }

    /// Complex conjugate; negates the argument.
    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Product of directions; arguments add (mod 2π).
    pub fn mul(&self, other: &Ray) -> Ray {
        let re = &self.re * &other.re - &self.im * &other.im;
        let im = &self.re * &other.im + &self.im * &other.re;
        let g = re.gcd(&im);
        Ray {
            re: re / &g,
            im: im / &g,
        }
    }

    /// Rotation by a quarter turn: multiplies by `i^quarters`.
    pub fn rotated_quarter_turns(&self, quarters: u32) -> Ray {
        let mut out = self.clone();
        for _ in 0..(quarters % 4) {
            out = Ray {
                re: -&out.im,
                im: out.re.clone(),
            };
        }
        out
    }

    /// True when the ray lies on the real axis.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Principal argument in `(-π, π]`, as an advisory float.
    pub fn arg_f64(&self) -> f64 {
        let re = self.re.to_f64().unwrap_or(f64::INFINITY * sign_f(&self.re));
        let im = self.im.to_f64().unwrap_or(f64::INFINITY * sign_f(&self.im));
        im.atan2(re)
    }
}

fn sign_f(x: &BigInt) -> f64 {
    if x.is_negative() {
        -1.0
    } else {
        1.0
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.re, self.im)
    }
}

/// A real angle represented exactly: `Θ = arg(ray) + 2π·winding` with
/// `arg` the principal branch in `(-π, π]`.
///
/// Two values are equal as real numbers iff the windings match and the
/// rays coincide; they are equal mod 2π iff the rays coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactPhase {
    winding: i64,
    ray: Ray,
}

impl ExactPhase {
    pub fn new(winding: i64, ray: Ray) -> Self {
        Self { winding, ray }
    }

    /// The zero angle.
    pub fn zero() -> Self {
        Self::new(0, Ray::one())
    }

    /// The angle π (winding 0, negative real axis).
    pub fn pi() -> Self {
        Self::new(0, Ray::minus_one())
    }

    pub fn winding(&self) -> i64 {
        self.winding
    }

    pub fn ray(&self) -> &Ray {
        &self.ray
    }

    /// Negation of the angle: the ray conjugates and the winding
    /// negates, with a correction on the branch ray `arg = π`, where
    /// negation lands on the far side of the cut.
    pub fn neg(&self) -> Self {
        if self.ray.is_real() && self.ray.re().is_negative() {
            Self::new(-self.winding - 1, self.ray.clone())
        } else {
            Self::new(-self.winding, self.ray.conj())
        }
    }

    /// The represented angle in double precision: `2πw + atan2(im, re)`.
    pub fn to_f64(&self) -> f64 {
        std::f64::consts::TAU * self.winding as f64 + self.ray.arg_f64()
    }
}

impl fmt::Display for ExactPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + 2pi*{}", self.ray, self.winding)
    }
}

/// True iff the two angles agree modulo 2π (windings ignored).
pub fn phases_equal_mod_2pi(p: &ExactPhase, q: &ExactPhase) -> bool {
    p.ray() == q.ray()
}

/// Argument of a product of half-plane factors, with exact winding
/// tracking.
///
/// Every factor must have strictly positive real part. Returns the phase
/// `Σ_k arctan(im_k / re_k)` of the running product.
pub fn product_phase(factors: &[GaussRational]) -> ExactPhase {
    let mut acc = GaussRational::new(BigRational::one(), BigRational::zero());
    let mut winding = 0i64;
    for factor in factors {
        assert!(
            factor.re.is_positive(),
            "phase factors must lie in the open right half-plane"
        );
        // Upper region: principal argument in [π/2, π].
        let old_upper = (acc.re.is_negative() && !acc.im.is_negative())
            || (!acc.re.is_positive() && acc.im.is_positive());
        // Lower region: principal argument in (-π, -π/2].
        let old_lower = !acc.re.is_positive() && acc.im.is_negative();

        acc *= factor;

        if factor.im.is_positive() {
            // Crossing +π downward into the open third quadrant.
            if old_upper && acc.re.is_negative() && acc.im.is_negative() {
                winding += 1;
            }
        } else if factor.im.is_negative() {
            // Crossing -π upward into [π/2, π].
            if old_lower && acc.re.is_negative() && !acc.im.is_negative() {
                winding -= 1;
            }
        }

        acc = reduce(acc);
    }
    let ray = Ray::from_gauss(&acc).expect("product of nonzero factors is nonzero");
    let phase = ExactPhase::new(winding, ray);
    // |Θ| < n·π/2 since every summand is a principal arctangent.
    let bound = (factors.len() as i64 + 3) / 4 + 1;
    assert!(phase.winding().abs() <= bound, "winding bound violated");
    phase
}

/// Divides out the integer content; a positive rescaling, so argument and
/// quadrant signs are preserved while coefficients stay small.
fn reduce(z: GaussRational) -> GaussRational {
    match Ray::from_gauss(&z) {
        Some(ray) => GaussRational::new(
            BigRational::from_integer(ray.re.clone()),
            BigRational::from_integer(ray.im.clone()),
        ),
        None => z,
    }
}

/// The phase factors `a_β + i·b_β` of a class `ξ` against a Kähler class.
pub(crate) fn phase_factors(kc: &KahlerClass, xi: &Weight) -> Result<Vec<GaussRational>, Error> {
    kc.flag().check_supported(xi)?;
    let rs = kc.flag().root_system();
    Ok(kc
        .flag()
        .phi_i_plus()
        .iter()
        .map(|beta| GaussRational::new(rs.pairing(kc.weight(), beta), rs.pairing(xi, beta)))
        .collect())
}

impl KahlerClass {
    /// Exact Lagrangian phase `Θ_ω(ξ) = Σ_{β ∈ Φ_I⁺} arctan(q_β)` of the
    /// invariant representative of `ξ`.
    pub fn lagrangian_phase(&self, xi: &Weight) -> Result<ExactPhase, Error> {
        Ok(product_phase(&phase_factors(self, xi)?))
    }

    /// Lagrangian phase of a line bundle's invariant curvature class.
    pub fn line_phase(&self, line: &LineBundle) -> Result<ExactPhase, Error> {
        if line.flag() != self.flag() {
            return Err(Error::FlagMismatch);
        }
        self.lagrangian_phase(line.weight())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag::FlagVariety;
    use crate::rational::{rat, ratio, Rational};
    use crate::root_system::{LieFamily, RootSystem};
    use proptest::prelude::*;
    use std::sync::Arc;

    fn setup() -> (Arc<FlagVariety>, KahlerClass) {
        let rs = Arc::new(RootSystem::build(LieFamily::A, 2).unwrap());
        let fv = Arc::new(FlagVariety::full_flag(rs));
        let kc = KahlerClass::from_integers(&fv, &[2, 2]).unwrap();
        (fv, kc)
    }

    fn phase_of(kc: &KahlerClass, a: i64, b: i64) -> ExactPhase {
        let xi = kc.flag().weight_from_coeffs(&[rat(a), rat(b)]).unwrap();
        kc.lagrangian_phase(&xi).unwrap()
    }

    // (2+2i)(2+6i)(4+8i) = -160: the phase is exactly π with winding 0.
    #[test]
    fn phase_of_2_6_is_pi() {
        let (_, kc) = setup();
        assert_eq!(phase_of(&kc, 2, 6), ExactPhase::pi());
    }

    // (2+3i)(2+4i)(4+7i) = -130, multiplied by hand.
    #[test]
    fn phase_of_3_4_is_pi() {
        let (_, kc) = setup();
        assert_eq!(phase_of(&kc, 3, 4), ExactPhase::pi());
    }

    #[test]
    fn phase_of_zero_class_is_zero() {
        let (_, kc) = setup();
        assert_eq!(phase_of(&kc, 0, 0), ExactPhase::zero());
    }

    #[test]
    fn phases_differing_by_2pi_are_equal_mod_2pi_only() {
        let (_, kc) = setup();
        let up = phase_of(&kc, 2, 6);
        let down = phase_of(&kc, -2, -6);
        assert_eq!(down, up.neg());
        assert_ne!(up, down);
        assert!(phases_equal_mod_2pi(&up, &down));
        assert_eq!(up.winding(), 0);
        assert_eq!(down.winding(), -1);
        assert!((up.to_f64() - std::f64::consts::PI).abs() < 1e-12);
        assert!((down.to_f64() + std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn paired_bundles_share_the_pi_ray() {
        let (_, kc) = setup();
        let p = phase_of(&kc, 2, 6);
        let q = phase_of(&kc, 3, 4);
        assert!(phases_equal_mod_2pi(&p, &q));
        // Same contraction level, different rays.
        let f = phase_of(&kc, 2, -1);
        let g = phase_of(&kc, 3, -2);
        assert!(!phases_equal_mod_2pi(&f, &g));
        assert!(phases_equal_mod_2pi(&f, &f));
    }

    #[test]
    fn float_values_match_arctan_sums() {
        let (fv, kc) = setup();
        assert!((ExactPhase::pi().to_f64() - std::f64::consts::PI).abs() < 1e-15);
        assert!((ExactPhase::new(1, Ray::one()).to_f64() - std::f64::consts::TAU).abs() < 1e-15);
        let xi = fv.weight_from_coeffs(&[rat(1), rat(1)]).unwrap();
        let exact = kc.lagrangian_phase(&xi).unwrap().to_f64();
        let oracle = 3.0 * (0.5f64).atan();
        assert!((exact - oracle).abs() < 1e-12);
    }

    #[test]
    fn ray_normalization_is_canonical() {
        let z = GaussRational::new(ratio(-6, 4), ratio(9, 2));
        let ray = Ray::from_gauss(&z).unwrap();
        assert_eq!((ray.re(), ray.im()), (&BigInt::from(-1), &BigInt::from(3)));
        assert!(Ray::from_gauss(&GaussRational::new(rat(0), rat(0))).is_none());
    }

    #[test]
    fn quarter_turns() {
        let r = Ray::minus_one();
        assert_eq!(r.rotated_quarter_turns(0), Ray::minus_one());
        assert_eq!(
            r.rotated_quarter_turns(1),
            Ray::from_gauss(&GaussRational::new(rat(0), rat(-1))).unwrap()
        );
        assert_eq!(r.rotated_quarter_turns(2), Ray::one());
    }

    // B2 full flag, omega = (1, 1): the factor arguments are
    // atan(s1), atan(s2), atan((2s1+s2)/3), atan((s1+s2)/2).
    // For s = (3, 3) all four equal atan(3), the sum 4.99618... exceeds
    // π, and the winding must come out as 1.
    #[test]
    fn four_factor_phase_crosses_the_cut() {
        let rs = Arc::new(RootSystem::build(LieFamily::B, 2).unwrap());
        let fv = Arc::new(FlagVariety::full_flag(rs));
        let kc = KahlerClass::from_integers(&fv, &[1, 1]).unwrap();
        let xi = fv.weight_from_coeffs(&[rat(3), rat(3)]).unwrap();
        let phase = kc.lagrangian_phase(&xi).unwrap();
        assert_eq!(phase.winding(), 1);
        let oracle = 4.0 * 3.0_f64.atan();
        assert!((phase.to_f64() - oracle).abs() < 1e-12);
        // The class equal to the metric has phase 4·atan(1) = π exactly:
        // (1+i)^4 = -4.
        let diag = kc.lagrangian_phase(kc.weight()).unwrap();
        assert_eq!(diag, ExactPhase::pi());
    }

    #[test]
    fn projective_plane_phase_is_two_arctangents() {
        let rs = Arc::new(RootSystem::build(LieFamily::A, 2).unwrap());
        let fv = Arc::new(FlagVariety::new(rs, &[1]).unwrap());
        let kc = KahlerClass::from_integers(&fv, &[1]).unwrap();
        let xi = fv.weight_from_coeffs(&[rat(5)]).unwrap();
        let phase = kc.lagrangian_phase(&xi).unwrap();
        assert_eq!(phase.winding(), 0);
        assert!((phase.to_f64() - 2.0 * 5.0_f64.atan()).abs() < 1e-12);
    }

    #[test]
    fn rejects_unsupported_class() {
        let rs = Arc::new(RootSystem::build(LieFamily::A, 2).unwrap());
        let fv = Arc::new(FlagVariety::new(rs, &[1]).unwrap());
        let kc = KahlerClass::from_integers(&fv, &[1]).unwrap();
        let bad = Weight::from_integers(&[1, 1]);
        assert!(matches!(
            kc.lagrangian_phase(&bad),
            Err(Error::UnsupportedWeight { index: 2 })
        ));
    }

    proptest! {
        // Negating the class negates the phase.
        #[test]
        fn phase_is_antisymmetric(a in -60i64..60, b in -60i64..60) {
            let (_, kc) = setup();
            prop_assert_eq!(phase_of(&kc, -a, -b), phase_of(&kc, a, b).neg());
        }

        // Scaling class and metric together changes nothing.
        #[test]
        fn phase_is_scale_invariant(
            a in -40i64..40, b in -40i64..40,
            t_num in 1i64..10, t_den in 1i64..10,
        ) {
            let (fv, kc) = setup();
            let t = ratio(t_num, t_den);
            let scaled_kc = KahlerClass::new(
                &fv,
                kc.coeffs().iter().map(|c| c * &t).collect(),
            ).unwrap();
            let xi = fv.weight_from_coeffs(&[rat(a), rat(b)]).unwrap();
            let scaled_xi = xi.scaled(&t);
            prop_assert_eq!(
                scaled_kc.lagrangian_phase(&scaled_xi).unwrap(),
                kc.lagrangian_phase(&xi).unwrap()
            );
        }

        // Winding stays within the half-turn-per-factor bound (n = 3).
        #[test]
        fn winding_bound_holds(a in -500i64..500, b in -500i64..500) {
            let (_, kc) = setup();
            prop_assert!(phase_of(&kc, a, b).winding().abs() <= 1);
        }

        // Same bound on a four-factor system: |w| <= 2.
        #[test]
        fn winding_bound_holds_on_b2(a in -500i64..500, b in -500i64..500) {
            let rs = Arc::new(RootSystem::build(LieFamily::B, 2).unwrap());
            let fv = Arc::new(FlagVariety::full_flag(rs));
            let kc = KahlerClass::from_integers(&fv, &[1, 2]).unwrap();
            let xi = fv.weight_from_coeffs(&[rat(a), rat(b)]).unwrap();
            let w = kc.lagrangian_phase(&xi).unwrap().winding();
            prop_assert!(w.abs() <= 2);
        }

        // Float agreement with the arctangent sum.
        #[test]
        fn float_matches_arctan_sum(
            a_num in -400i64..400, a_den in 1i64..8,
            b_num in -400i64..400, b_den in 1i64..8,
        ) {
            let (fv, kc) = setup();
            let s1 = ratio(a_num, a_den);
            let s2 = ratio(b_num, b_den);
            let xi = fv.weight_from_coeffs(&[s1.clone(), s2.clone()]).unwrap();
            let exact = kc.lagrangian_phase(&xi).unwrap().to_f64();
            let q = |r: &Rational| crate::rational::to_f64(r);
            let oracle = (q(&s1) / 2.0).atan()
                + (q(&s2) / 2.0).atan()
                + ((q(&s1) + q(&s2)) / 4.0).atan();
            prop_assert!((exact - oracle).abs() < 1e-9);
        }

        // Ray equality agrees with the sign test Im(z1 * conj z2) = 0,
        // Re(z1 * conj z2) > 0.
        #[test]
        fn ray_equality_matches_sign_test(
            a in -30i64..30, b in -30i64..30,
            c in -30i64..30, d in -30i64..30,
        ) {
            let (_, kc) = setup();
            let p = phase_of(&kc, a, b);
            let q = phase_of(&kc, c, d);
            let cross = p.ray().mul(&q.ray().conj());
            let aligned = cross.im().is_zero() && cross.re().is_positive();
            prop_assert_eq!(aligned, phases_equal_mod_2pi(&p, &q));
        }
    }
}
