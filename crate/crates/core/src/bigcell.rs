//! Floating-point cross-check of the exact eigenvalue formula.
//!
//! On the dense coordinate chart of the rank-2 full flag threefold the
//! invariant potentials have the closed form
//!
//! `φ(s1, s2)(z) = s1·log(1 + |z1|² + |z2|²)
//!               + s2·log(1 + |z3|² + |z1·z3 - z2|²)`,
//!
//! smooth on all of `C³`. A central-difference complex Hessian of such a
//! potential at the origin reproduces the invariant form of the class
//! `(s1, s2)`, so the generalized eigenvalues of the pair
//! `(Hessian(2,2), Hessian(s1,s2))` must match the exact values
//! `{s1/2, s2/2, (s1+s2)/4}`. This is the one place in the crate where
//! floating point is used for anything but display.

use nalgebra::{Cholesky, Matrix3, SymmetricEigen};
use num_complex::Complex64;

use crate::error::Error;

/// Finite-difference step. The potentials are analytic with O(1)
/// derivatives near the origin, so plain central differences at this step
/// meet [`EIGEN_TOLERANCE`] with orders of magnitude to spare.
pub const FD_STEP: f64 = 1e-4;

/// Acceptance tolerance on the generalized eigenvalues.
pub const EIGEN_TOLERANCE: f64 = 1e-4;

/// Bound on the anti-Hermitian defect of the raw finite-difference
/// Hessian, checked before symmetrization.
pub const HERMITIAN_DEFECT_TOLERANCE: f64 = 1e-6;

/// Evaluates the big-cell potential with exponents `(s1, s2)` at a point
/// of `C³`. Vanishes at the origin; both logarithm arguments are `>= 1`.
pub fn potential(s1: i64, s2: i64, z: [Complex64; 3]) -> f64 {
    let first = z[0].norm_sqr() + z[1].norm_sqr();
    let det = z[0] * z[2] - z[1];
    let second = z[2].norm_sqr() + det.norm_sqr();
    s1 as f64 * first.ln_1p() + s2 as f64 * second.ln_1p()
}

/// A complex Hessian estimated by central differences.
#[derive(Debug, Clone)]
pub struct HessianEstimate {
    /// The symmetrized (exactly Hermitian) matrix.
    pub matrix: Matrix3<Complex64>,
    /// Largest entry of the anti-Hermitian part before symmetrization.
    pub hermitian_defect: f64,
}

/// Central-difference complex Hessian `H_jk = ∂²f / ∂z_j ∂z̄_k` at `z0`.
///
/// With `z_j = x_j + i·y_j`,
/// `H_jk = ¼[(Dx_j Dx_k + Dy_j Dy_k) f + i (Dx_j Dy_k - Dy_j Dx_k) f]`,
/// each `D` a symmetric second difference with step `h`. The raw result
/// is symmetrized to an exactly Hermitian matrix.
pub fn fd_complex_hessian<F>(f: F, z0: [Complex64; 3], h: f64) -> Result<HessianEstimate, Error>
where
    F: Fn([Complex64; 3]) -> f64,
{
    if h <= 0.0 || !h.is_finite() {
        return Err(Error::Numerical(format!("step must be positive, got {h}")));
    }
    // Real coordinates: index 2j is x_j, index 2j+1 is y_j.
    let eval = |shifts: &[(usize, f64)]| -> f64 {
        let mut z = z0;
        for &(coord, delta) in shifts {
            let j = coord / 2;
            if coord % 2 == 0 {
                z[j].re += delta;
            } else {
                z[j].im += delta;
            }
        }
        f(z)
    };
    let f0 = eval(&[]);
    let second = |a: usize, b: usize| -> f64 {
        if a == b {
            (eval(&[(a, h)]) - 2.0 * f0 + eval(&[(a, -h)])) / (h * h)
        } else {
            (eval(&[(a, h), (b, h)]) - eval(&[(a, h), (b, -h)]) - eval(&[(a, -h), (b, h)])
                + eval(&[(a, -h), (b, -h)]))
                / (4.0 * h * h)
        }
    };

    let mut raw = Matrix3::<Complex64>::zeros();
    for j in 0..3 {
        for k in 0..3 {
            let (xj, yj, xk, yk) = (2 * j, 2 * j + 1, 2 * k, 2 * k + 1);
            let re = second(xj, xk) + second(yj, yk);
            let im = second(xj, yk) - second(yj, xk);
            raw[(j, k)] = 0.25 * Complex64::new(re, im);
        }
    }
    if raw.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(Error::Numerical(
            "finite-difference Hessian produced non-finite entries".into(),
        ));
    }

    let adjoint = raw.adjoint();
    let hermitian_defect = (raw - adjoint)
        .iter()
        .map(|c| c.norm())
        .fold(0.0_f64, f64::max);
    let matrix = (raw + adjoint) * Complex64::new(0.5, 0.0);
    Ok(HessianEstimate {
        matrix,
        hermitian_defect,
    })
}

/// Result of comparing finite-difference eigenvalues with the exact
/// formula.
#[derive(Debug, Clone)]
pub struct EigenRatioReport {
    /// Exponent pair under test.
    pub s: (i64, i64),
    /// Sorted generalized eigenvalues of `(Hessian(2,2), Hessian(s1,s2))`.
    pub computed: [f64; 3],
    /// Sorted exact values `{s1/2, s2/2, (s1+s2)/4}`.
    pub expected: [f64; 3],
    /// Largest eigenvalue deviation.
    pub max_error: f64,
    /// Deviation of the trace from the exact contraction `3(s1+s2)/4`.
    pub trace_error: f64,
    /// Anti-Hermitian defects of the two raw Hessians.
    pub hermitian_defects: (f64, f64),
    /// True when `max_error` and `trace_error` are within
    /// [`EIGEN_TOLERANCE`].
    pub pass: bool,
}

/// Compares the generalized eigenvalues of the finite-difference Hessians
/// at the origin against the exact eigenvalue formula for the reference
/// metric `(2, 2)`.
pub fn eigen_ratio_check(s1: i64, s2: i64) -> Result<EigenRatioReport, Error> {
    eigen_ratio_check_with_step(s1, s2, FD_STEP)
}

/// Same as [`eigen_ratio_check`] with an explicit step.
pub fn eigen_ratio_check_with_step(s1: i64, s2: i64, h: f64) -> Result<EigenRatioReport, Error> {
    let origin = [Complex64::new(0.0, 0.0); 3];
    let h_omega = fd_complex_hessian(|z| potential(2, 2, z), origin, h)?;
    let h_chi = fd_complex_hessian(|z| potential(s1, s2, z), origin, h)?;

    // Generalized eigenvalues of (A, B) with A Hermitian positive
    // definite: Cholesky A = L L*, then the Hermitian eigenvalues of
    // L^{-1} B L^{-*}.
    let chol = Cholesky::new(h_omega.matrix)
        .ok_or_else(|| Error::Numerical("reference Hessian is not positive definite".into()))?;
    let l = chol.l();
    let half = l
        .solve_lower_triangular(&h_chi.matrix)
        .ok_or_else(|| Error::Numerical("singular Cholesky factor".into()))?;
    let reduced_adj = l
        .solve_lower_triangular(&half.adjoint())
        .ok_or_else(|| Error::Numerical("singular Cholesky factor".into()))?;
    let reduced = reduced_adj.adjoint();
    let eigen = SymmetricEigen::new(reduced);

    let mut computed = [
        eigen.eigenvalues[0],
        eigen.eigenvalues[1],
        eigen.eigenvalues[2],
    ];
    computed.sort_by(f64::total_cmp);
    let mut expected = [s1 as f64 / 2.0, s2 as f64 / 2.0, (s1 + s2) as f64 / 4.0];
    expected.sort_by(f64::total_cmp);

    let max_error = computed
        .iter()
        .zip(&expected)
        .map(|(c, e)| (c - e).abs())
        .fold(0.0_f64, f64::max);
    let trace: f64 = computed.iter().sum();
    let trace_error = (trace - 0.75 * (s1 + s2) as f64).abs();
    let pass = max_error <= EIGEN_TOLERANCE && trace_error <= EIGEN_TOLERANCE;
    Ok(EigenRatioReport {
        s: (s1, s2),
        computed,
        expected,
        max_error,
        trace_error,
        hermitian_defects: (h_omega.hermitian_defect, h_chi.hermitian_defect),
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn potential_values() {
        let zero = [c(0.0, 0.0); 3];
        assert_eq!(potential(5, -3, zero), 0.0);
        let e1 = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert!((potential(1, 0, e1) - 2.0_f64.ln()).abs() < 1e-15);
        // |z1 z3 - z2|^2 = 1 at (0, 1, 0).
        let e2 = [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)];
        assert!((potential(0, 1, e2) - 2.0_f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn hessian_of_quadratic_is_exact() {
        let est = fd_complex_hessian(|z| z[0].norm_sqr(), [c(0.3, -0.2); 3], 1e-4).unwrap();
        for j in 0..3 {
            for k in 0..3 {
                let want = if j == 0 && k == 0 { 1.0 } else { 0.0 };
                assert!((est.matrix[(j, k)] - c(want, 0.0)).norm() < 1e-8);
            }
        }
        assert!(est.hermitian_defect < 1e-8);
    }

    #[test]
    fn hessian_of_first_factor_is_identity_block() {
        let est = fd_complex_hessian(|z| potential(1, 0, z), [c(0.0, 0.0); 3], FD_STEP).unwrap();
        for j in 0..3 {
            for k in 0..3 {
                let want = if j == k && j < 2 { 1.0 } else { 0.0 };
                assert!(
                    (est.matrix[(j, k)] - c(want, 0.0)).norm() < 1e-6,
                    "entry ({j},{k}) = {}",
                    est.matrix[(j, k)]
                );
            }
        }
    }

    // To second order at the origin, |z1 z3 - z2|^2 contributes |z2|^2;
    // the eigenvalue multiset is {0, 1, 1}.
    #[test]
    fn hessian_of_second_factor_has_rank_two() {
        let est = fd_complex_hessian(|z| potential(0, 1, z), [c(0.0, 0.0); 3], FD_STEP).unwrap();
        let eigen = SymmetricEigen::new(est.matrix);
        let mut values = [
            eigen.eigenvalues[0],
            eigen.eigenvalues[1],
            eigen.eigenvalues[2],
        ];
        values.sort_by(f64::total_cmp);
        assert!((values[0] - 0.0).abs() < 1e-6);
        assert!((values[1] - 1.0).abs() < 1e-6);
        assert!((values[2] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn rejects_bad_step() {
        assert!(fd_complex_hessian(|z| z[0].norm_sqr(), [c(0.0, 0.0); 3], 0.0).is_err());
        assert!(fd_complex_hessian(|z| z[0].norm_sqr(), [c(0.0, 0.0); 3], -1.0).is_err());
    }

    #[test]
    fn rejects_non_finite_values() {
        let err = fd_complex_hessian(|_| f64::NAN, [c(0.0, 0.0); 3], 1e-4).unwrap_err();
        assert!(matches!(err, crate::error::Error::Numerical(_)));
        assert!(fd_complex_hessian(|z| 1.0 / z[0].re, [c(0.0, 0.0); 3], 1e-4).is_err());
    }

    #[test]
    fn symmetrized_output_is_exactly_hermitian() {
        let est = fd_complex_hessian(|z| potential(3, -5, z), [c(0.1, -0.3); 3], FD_STEP).unwrap();
        assert_eq!(est.matrix, est.matrix.adjoint());
        assert!(est.hermitian_defect < HERMITIAN_DEFECT_TOLERANCE);
    }

    #[test]
    fn eigen_ratio_reference_values() {
        let report = eigen_ratio_check(2, 6).unwrap();
        assert!(report.pass, "max_error = {}", report.max_error);
        for (got, want) in report.computed.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < EIGEN_TOLERANCE);
        }
        let report = eigen_ratio_check(2, 2).unwrap();
        assert!(report.pass);
        for v in report.computed {
            assert!((v - 1.0).abs() < EIGEN_TOLERANCE);
        }
        let report = eigen_ratio_check(0, 0).unwrap();
        assert!(report.pass);
        for v in report.computed {
            assert!(v.abs() < EIGEN_TOLERANCE);
        }
    }

    #[test]
    fn eigen_ratio_handles_negative_exponents() {
        let report = eigen_ratio_check(-7, 3).unwrap();
        assert!(report.pass, "max_error = {}", report.max_error);
        assert!(report.hermitian_defects.0 < HERMITIAN_DEFECT_TOLERANCE);
        assert!(report.hermitian_defects.1 < HERMITIAN_DEFECT_TOLERANCE);
    }
}
