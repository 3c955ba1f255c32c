//! Built-in reference checks.
//!
//! Every closed-form value the crate is expected to reproduce on the
//! rank-2 full flag threefold (volumes, anticanonical pairings,
//! contraction laws, slopes, level sets, the instanton classification of
//! the reference bundles, the charge/phase equivalence, endomorphism
//! counts, the numerical eigenvalue cross-check and the float
//! consistency sweeps) is pinned here as an executable check. The CLI exposes the
//! whole battery as `reproduce-paper`; the acceptance test suite runs the
//! same functions one by one.
//!
//! All randomized sweeps use fixed seeds so reports are reproducible.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::bigcell::{eigen_ratio_check, EIGEN_TOLERANCE, HERMITIAN_DEFECT_TOLERANCE};
use crate::bundle::{
    classify, contraction_level_set, h0_end, phase_level_set, total_phase_ray, InstantonType,
    Stability, SumBundle,
};
use crate::charge::charges_aligned;
use crate::flag::{Bundle, FlagVariety, KahlerClass, LineBundle};
use crate::phase::{phases_equal_mod_2pi, ExactPhase, GaussRational, Ray};
use crate::rational::{rat, ratio, Rational};
use crate::root_system::{LieFamily, RootSystem, Weight};

/// Outcome of one reference check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: usize,
    pub label: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CheckResult {
    fn new(id: usize, label: &'static str) -> Self {
        Self {
            id,
            label,
            passed: true,
            details: Vec::new(),
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    fn require(&mut self, ok: bool, line: impl Into<String>) {
        let line = line.into();
        if ok {
            self.details.push(line);
        } else {
            self.passed = false;
            self.details.push(format!("FAILED: {line}"));
        }
    }

    /// One-line summary, `check N label: PASS/FAIL`.
    pub fn summary(&self) -> String {
        format!(
            "check {:2} {}: {}",
            self.id,
            self.label,
            if self.passed { "PASS" } else { "FAIL" }
        )
    }
}

struct Reference {
    fv: Arc<FlagVariety>,
    kc: KahlerClass,
}

/// The rank-2 full flag threefold with its anticanonical Kähler class
/// `(2, 2)`.
fn reference() -> Reference {
    let rs = Arc::new(RootSystem::build(LieFamily::A, 2).expect("A2 is admissible"));
    let fv = Arc::new(FlagVariety::full_flag(rs));
    let kc = KahlerClass::from_integers(&fv, &[2, 2]).expect("positive coefficients");
    Reference { fv, kc }
}

fn line(fv: &Arc<FlagVariety>, a: i64, b: i64) -> LineBundle {
    LineBundle::new(fv, vec![a, b]).expect("rank-2 coefficients")
}

fn xi(fv: &Arc<FlagVariety>, a: &Rational, b: &Rational) -> Weight {
    fv.weight_from_coeffs(&[a.clone(), b.clone()])
        .expect("rank-2 coefficients")
}

/// Runs all reference checks in order.
pub fn run_all() -> Vec<CheckResult> {
    vec![
        check_01_volume(),
        check_02_anticanonical(),
        check_03_contraction_law(),
        check_04_slopes(),
        check_05_phase_pi_level_set(),
        check_06_degree_zero_level_sets(),
        check_07_instanton_triple(),
        check_08_charge_phase_equivalence(),
        check_09_unstable_family(),
        check_10_bigcell_eigenvalues(),
        check_11_float_phase_consistency(),
        check_12_weyl_dimensions(),
    ]
}

/// Check 1: The reference volume is exactly 8.
pub fn check_01_volume() -> CheckResult {
    let mut r = CheckResult::new(1, "reference volume");
    let re = reference();
    let vol = re.kc.volume();
    r.require(vol == rat(8), format!("Vol = {vol}"));
    r
}

/// Check 2: Anticanonical weight (2,2) and its coroot pairings 2, 2, 4.
pub fn check_02_anticanonical() -> CheckResult {
    let mut r = CheckResult::new(2, "anticanonical data");
    let re = reference();
    let delta = re.fv.anticanonical_weight().clone();
    r.require(
        delta == Weight::from_integers(&[2, 2]),
        format!("delta = {delta}"),
    );
    let rs = re.fv.root_system();
    let expected = [2i64, 2, 4];
    for (beta, want) in re.fv.phi_i_plus().iter().zip(expected) {
        let got = rs.pairing(&delta, beta);
        r.require(got == rat(want), format!("<delta, ({beta})v> = {got}"));
    }
    r
}

/// Check 3: Contraction law `(3/4)(s1+s2)` on random pairs and pinned values.
pub fn check_03_contraction_law() -> CheckResult {
    let mut r = CheckResult::new(3, "contraction law");
    let re = reference();
    let mut rng = StdRng::seed_from_u64(0x0301);
    let mut random_ok = true;
    for _ in 0..100 {
        let s1 = rng.gen_range(-50i64..=50);
        let s2 = rng.gen_range(-50i64..=50);
        let got = re
            .kc
            .contraction(&xi(&re.fv, &rat(s1), &rat(s2)))
            .expect("supported");
        random_ok &= got == ratio(3, 4) * rat(s1 + s2);
    }
    r.require(random_ok, "contraction = (3/4)(s1+s2) on 100 random pairs");
    for ((s1, s2), want) in [
        ((2, 6), rat(6)),
        ((3, 4), ratio(21, 4)),
        ((2, -1), ratio(3, 4)),
    ] {
        let got = re
            .kc
            .contraction(&xi(&re.fv, &rat(s1), &rat(s2)))
            .expect("supported");
        r.require(got == want, format!("contraction({s1},{s2}) = {got}"));
    }
    r
}

/// Check 4: Slopes of the paired degree-12 bundles.
pub fn check_04_slopes() -> CheckResult {
    let mut r = CheckResult::new(4, "slopes");
    let re = reference();
    let f = line(&re.fv, 2, -1);
    let g = line(&re.fv, 3, -2);
    let both = SumBundle::new(vec![f.clone(), g.clone()]).expect("same flag");
    for (name, value) in [
        ("mu(2,-1)", re.kc.slope(&f).expect("same flag")),
        ("mu(3,-2)", re.kc.slope(&g).expect("same flag")),
        ("mu((2,-1)+(3,-2))", re.kc.slope(&both).expect("same flag")),
    ] {
        r.require(value == rat(12), format!("{name} = {value}"));
    }
    r
}

/// Check 5: The lifted phase-π level set at bound 100 is the six divisor
/// pairs of 12.
pub fn check_05_phase_pi_level_set() -> CheckResult {
    let mut r = CheckResult::new(5, "phase pi level set");
    let re = reference();
    let hits = phase_level_set(&re.kc, &ExactPhase::pi(), 100).expect("valid target");
    let got: Vec<(i64, i64)> = hits
        .iter()
        .map(|l| (l.coeffs()[0], l.coeffs()[1]))
        .collect();
    let expected = vec![(1, 12), (2, 6), (3, 4), (4, 3), (6, 2), (12, 1)];
    r.require(got == expected, format!("level set = {got:?}"));
    r.require(
        got.iter().all(|(a, b)| a * b == 12 && *a > 0),
        "every member satisfies s1*s2 = 12, s1 > 0",
    );
    r
}

/// Check 6: The degree-zero contraction and phase level sets agree and
/// equal the antidiagonal, for every bound up to 20.
pub fn check_06_degree_zero_level_sets() -> CheckResult {
    let mut r = CheckResult::new(6, "degree-zero level sets");
    let re = reference();
    let mut ok = true;
    for bound in 1..=20u32 {
        let d0 = contraction_level_set(&re.kc, &rat(0), bound).expect("valid");
        let l0 = phase_level_set(&re.kc, &ExactPhase::zero(), bound).expect("valid");
        let expected: Vec<(i64, i64)> = (-(bound as i64)..=bound as i64).map(|s| (s, -s)).collect();
        let d0: Vec<(i64, i64)> = d0.iter().map(|l| (l.coeffs()[0], l.coeffs()[1])).collect();
        let l0: Vec<(i64, i64)> = l0.iter().map(|l| (l.coeffs()[0], l.coeffs()[1])).collect();
        ok &= d0 == expected && l0 == expected;
    }
    r.require(ok, "D_0 = L_0 = {(s, -s)} for all bounds <= 20");
    r
}

/// Check 7: Classification of the three reference sum bundles.
pub fn check_07_instanton_triple() -> CheckResult {
    let mut r = CheckResult::new(7, "instanton triple");
    let re = reference();
    let cases = [
        (
            "E1",
            vec![(1, -1), (2, -2)],
            InstantonType::TypeI,
            Stability::Polystable,
        ),
        (
            "E2",
            vec![(2, -1), (3, -2)],
            InstantonType::TypeII,
            Stability::Polystable,
        ),
        (
            "E3",
            vec![(2, 6), (3, 4)],
            InstantonType::TypeIII,
            Stability::Unstable,
        ),
    ];
    for (name, coeffs, want_type, want_stability) in cases {
        let e = SumBundle::new(coeffs.iter().map(|&(a, b)| line(&re.fv, a, b)).collect())
            .expect("same flag");
        let cls = classify(&re.kc, &e).expect("same flag");
        r.require(
            cls.instanton_type == want_type && cls.stability == want_stability,
            format!("{name}: {} {}", cls.instanton_type, cls.stability),
        );
    }
    let e1 = SumBundle::new(vec![line(&re.fv, 1, -1), line(&re.fv, 2, -2)]).expect("same flag");
    let e2 = SumBundle::new(vec![line(&re.fv, 2, -1), line(&re.fv, 3, -2)]).expect("same flag");
    let e3 = SumBundle::new(vec![line(&re.fv, 2, 6), line(&re.fv, 3, 4)]).expect("same flag");
    let ray1 = total_phase_ray(&re.kc, &e1).expect("same flag");
    let ray3 = total_phase_ray(&re.kc, &e3).expect("same flag");
    r.require(ray1 == Some(Ray::one()), "E1: Theta_hat = 0");
    r.require(ray3 == Some(Ray::minus_one()), "E3: Theta_hat = pi");
    let mu1 = re.kc.slope(&e1).expect("same flag");
    r.require(mu1 == rat(0), format!("E1: slope = {mu1}"));
    // The constant in the Yang-Mills equation for E2 is recorded 2π-free
    // as the contraction of c_1(E2): (3/4)(s1+s2) summed over summands.
    let c2 = re
        .kc
        .contraction(&e2.first_chern_weight())
        .expect("supported");
    r.require(c2 == ratio(3, 2), format!("E2: contraction = {c2}"));
    let mu2 = re.kc.slope(&e2).expect("same flag");
    r.require(mu2 == rat(12), format!("E2: slope = {mu2}"));
    let contractions3: Vec<String> = e3
        .summands()
        .iter()
        .map(|l| {
            re.kc
                .contraction(l.weight())
                .expect("supported")
                .to_string()
        })
        .collect();
    r.require(
        contractions3 == ["6", "21/4"],
        format!(
            "E3: summand contractions = {{{}}}",
            contractions3.join(", ")
        ),
    );
    r
}

/// Check 8: Charge-ray alignment coincides with phase equality mod 2π
/// exhaustively over the coefficient box `|s| <= 6`.
pub fn check_08_charge_phase_equivalence() -> CheckResult {
    let mut r = CheckResult::new(8, "charge/phase equivalence");
    let re = reference();
    let bundles: Vec<LineBundle> = (-6..=6)
        .flat_map(|a| (-6..=6).map(move |b| (a, b)))
        .map(|(a, b)| line(&re.fv, a, b))
        .collect();
    let phases: Vec<ExactPhase> = bundles
        .iter()
        .map(|l| re.kc.line_phase(l).expect("supported"))
        .collect();
    let charges: Vec<GaussRational> = bundles
        .iter()
        .map(|l| re.kc.central_charge(l).expect("same flag").value().clone())
        .collect();
    let mut pairs = 0usize;
    let mut aligned_count = 0usize;
    let mut ok = true;
    for (i, zi) in charges.iter().enumerate() {
        for (j, zj) in charges.iter().enumerate() {
            let cross = zi * zj.conj();
            let aligned = cross.im.is_zero() && cross.re.is_positive();
            let same_phase = phases_equal_mod_2pi(&phases[i], &phases[j]);
            ok &= aligned == same_phase;
            pairs += 1;
            aligned_count += usize::from(aligned);
        }
    }
    r.require(
        ok,
        format!("alignment (ray equality) matched on all {pairs} pairs"),
    );
    r.note(format!("{aligned_count} aligned pairs"));
    // Spot-check that the library test agrees with the cached cross
    // products on a diagonal stripe of pairs.
    let mut spot_ok = true;
    for k in 0..bundles.len() {
        let e = &bundles[k];
        let f = &bundles[(k * 37 + 11) % bundles.len()];
        let via_op = charges_aligned(&re.kc, e, f).expect("same flag");
        let via_phase = phases_equal_mod_2pi(
            &re.kc.line_phase(e).expect("supported"),
            &re.kc.line_phase(f).expect("supported"),
        );
        spot_ok &= via_op == via_phase;
    }
    r.require(spot_ok, "charges_aligned agrees on the spot-check stripe");
    r
}

/// Check 9: The rank-r family: one (2,6) summand plus r-1 copies of (3,4).
pub fn check_09_unstable_family() -> CheckResult {
    let mut r = CheckResult::new(9, "unstable dHYM family");
    let re = reference();
    for rank in 2..=4usize {
        let mut summands = vec![line(&re.fv, 2, 6)];
        summands.extend(std::iter::repeat_n(line(&re.fv, 3, 4), rank - 1));
        let e = SumBundle::new(summands).expect("same flag");
        let cls = classify(&re.kc, &e).expect("same flag");
        r.require(
            cls.stability == Stability::Unstable && cls.dhym,
            format!("r={rank}: {} {}", cls.instanton_type, cls.stability),
        );
        let h0 = h0_end(&e).expect("full flag");
        let want = BigUint::from(1 + (rank - 1) * (rank - 1));
        r.require(
            h0 == want && h0 > BigUint::from(1u32),
            format!("r={rank}: h0(End) = {h0}"),
        );
        // Ray-level phase/charge relation: Arg Z = Theta_hat + 3π/2, i.e.
        // the charge ray is the phase ray rotated three quarter turns.
        let theta = total_phase_ray(&re.kc, &e)
            .expect("same flag")
            .expect("nonzero");
        let charge_ray = re
            .kc
            .total_charge(&e)
            .expect("same flag")
            .ray()
            .expect("nonzero");
        r.require(
            charge_ray == theta.rotated_quarter_turns(3),
            format!("r={rank}: Arg Z = Theta_hat + 3pi/2 at ray level"),
        );
    }
    r
}

/// Check 10: Finite-difference eigenvalues match the exact formula.
pub fn check_10_bigcell_eigenvalues() -> CheckResult {
    let mut r = CheckResult::new(10, "big-cell eigenvalue check");
    match eigen_ratio_check(2, 6) {
        Ok(report) => {
            r.require(
                report.pass,
                format!(
                    "eigenvalues(2,6) = [{:.6}, {:.6}, {:.6}], max error {:.2e}",
                    report.computed[0], report.computed[1], report.computed[2], report.max_error
                ),
            );
            let ok = report
                .computed
                .iter()
                .zip([1.0, 2.0, 3.0])
                .all(|(c, w)| (c - w).abs() <= EIGEN_TOLERANCE);
            r.require(ok, "eigenvalues(2,6) = {1, 2, 3}");
        }
        Err(err) => r.require(false, format!("eigen_ratio_check(2,6): {err}")),
    }
    let mut rng = StdRng::seed_from_u64(0x1001);
    let mut worst = 0.0_f64;
    let mut worst_defect = 0.0_f64;
    let mut all_pass = true;
    for _ in 0..50 {
        let s1 = rng.gen_range(-10i64..=10);
        let s2 = rng.gen_range(-10i64..=10);
        match eigen_ratio_check(s1, s2) {
            Ok(report) => {
                worst = worst.max(report.max_error);
                worst_defect = worst_defect
                    .max(report.hermitian_defects.0)
                    .max(report.hermitian_defects.1);
                all_pass &= report.pass;
            }
            Err(_) => all_pass = false,
        }
    }
    r.require(
        all_pass,
        format!("50 random exponent pairs pass at 1e-4 (worst error {worst:.2e})"),
    );
    r.require(
        worst_defect < HERMITIAN_DEFECT_TOLERANCE,
        format!("raw Hessians Hermitian to {worst_defect:.2e} before symmetrization"),
    );
    r
}

/// Check 11: Exact-versus-float phase agreement on 10⁴ random rational classes.
pub fn check_11_float_phase_consistency() -> CheckResult {
    let mut r = CheckResult::new(11, "float phase consistency");
    let re = reference();
    let mut rng = StdRng::seed_from_u64(0x1101);
    let mut worst = 0.0_f64;
    for _ in 0..10_000 {
        let den1 = rng.gen_range(1i64..=20);
        let den2 = rng.gen_range(1i64..=20);
        let s1 = ratio(rng.gen_range(-100 * den1..=100 * den1), den1);
        let s2 = ratio(rng.gen_range(-100 * den2..=100 * den2), den2);
        let exact = re
            .kc
            .lagrangian_phase(&xi(&re.fv, &s1, &s2))
            .expect("supported")
            .to_f64();
        let f1 = crate::rational::to_f64(&s1);
        let f2 = crate::rational::to_f64(&s2);
        let oracle = (f1 / 2.0).atan() + (f2 / 2.0).atan() + ((f1 + f2) / 4.0).atan();
        worst = worst.max((exact - oracle).abs());
    }
    r.require(
        worst < 1e-9,
        format!("10000 random classes, worst deviation {worst:.2e}"),
    );
    r
}

/// Check 12: Weyl dimensions of the fundamental and adjoint representations.
pub fn check_12_weyl_dimensions() -> CheckResult {
    let mut r = CheckResult::new(12, "Weyl dimensions");
    let rs = RootSystem::build(LieFamily::A, 2).expect("A2 is admissible");
    for (coords, want) in [([1, 0], 3u32), ([0, 1], 3), ([1, 1], 8)] {
        let dim = rs
            .weyl_dimension(&Weight::from_integers(&coords))
            .expect("dominant");
        r.require(
            dim == BigUint::from(want),
            format!("dim V({},{}) = {dim}", coords[0], coords[1]),
        );
    }
    r
}
