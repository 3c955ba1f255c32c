//! Whitney sums of line bundles: diagonal-connection classification,
//! level-set enumeration and global endomorphism counting.
//!
//! A sum `E = L_1 ⊕ ... ⊕ L_r` carries the diagonal Chern connection of
//! the invariant metrics on its summands; its curvature is diagonal with
//! the invariant representatives of `c_1(L_ℓ)` on the diagonal. The
//! Hermitian Yang-Mills condition for that connection is equality of the
//! summand contractions, and the deformed condition is equality of the
//! summand Lagrangian phases mod 2π: the relevant matrix of `(n,n)`-forms
//! is diagonal with entries `(ω + i·χ_ℓ)^n`, so a common phase makes
//! `Im(e^{-iΘ̂} · entries)` vanish entry by entry.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::charge::charge_integral;
use crate::error::Error;
use crate::flag::{Bundle, FlagVariety, KahlerClass, LineBundle};
use crate::phase::{phases_equal_mod_2pi, ExactPhase, GaussRational, Ray};
use crate::rational::Rational;
use crate::root_system::Weight;

/// An ordered Whitney sum of line bundles on a common flag variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumBundle {
    summands: Vec<LineBundle>,
}

impl SumBundle {
    pub fn new(summands: Vec<LineBundle>) -> Result<Self, Error> {
        let first = summands.first().ok_or(Error::EmptySum)?;
        let fv = first.flag().clone();
        if summands.iter().any(|l| l.flag() != &fv) {
            return Err(Error::FlagMismatch);
        }
        Ok(Self { summands })
    }

    /// `r` copies of the same line bundle.
    pub fn isotypic(line: LineBundle, r: usize) -> Result<Self, Error> {
        if r == 0 {
            return Err(Error::EmptySum);
        }
        Self::new(vec![line; r])
    }

    pub fn summands(&self) -> &[LineBundle] {
        &self.summands
    }
}

impl Bundle for SumBundle {
    fn flag(&self) -> &Arc<FlagVariety> {
        self.summands[0].flag()
    }

    fn rank(&self) -> usize {
        self.summands.len()
    }

    /// `c_1` of the sum: coordinate-wise sum of the summand weights.
    fn first_chern_weight(&self) -> Weight {
        let mut total = Weight::zero(self.flag().root_system().rank());
        for line in &self.summands {
            total = &total + line.weight();
        }
        total
    }
}

impl fmt::Display for SumBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, line) in self.summands.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", line)?;
        }
        Ok(())
    }
}

/// Which instanton equations the diagonal connection satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstantonType {
    /// Both Hermitian Yang-Mills and deformed Hermitian Yang-Mills.
    TypeI,
    /// Hermitian Yang-Mills only.
    TypeII,
    /// Deformed Hermitian Yang-Mills only.
    TypeIII,
    /// Neither equation.
    Neither,
}

impl fmt::Display for InstantonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::TypeI => "TypeI",
            Self::TypeII => "TypeII",
            Self::TypeIII => "TypeIII",
            Self::Neither => "Neither",
        };
        write!(f, "{s}")
    }
}

/// Slope stability of a sum of line bundles, decided by slope equality of
/// the summands. A sum of line bundles is polystable exactly when all
/// summand slopes agree, and unstable otherwise; rank 1 is stable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stability {
    Stable,
    Polystable,
    Unstable,
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Stable => "Stable",
            Self::Polystable => "Polystable",
            Self::Unstable => "Unstable",
        };
        write!(f, "{s}")
    }
}

/// Outcome of classifying the diagonal connection on a sum bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstantonClassification {
    pub hym: bool,
    pub dhym: bool,
    pub instanton_type: InstantonType,
    pub stability: Stability,
}

/// Classifies the diagonal connection on `E`.
///
/// `hym` holds when all summand contractions agree; `dhym` when all
/// summand phases agree mod 2π.
pub fn classify(kc: &KahlerClass, e: &SumBundle) -> Result<InstantonClassification, Error> {
    if e.flag() != kc.flag() {
        return Err(Error::FlagMismatch);
    }
    let contractions: Vec<Rational> = e
        .summands()
        .iter()
        .map(|l| kc.contraction(l.weight()))
        .collect::<Result<_, _>>()?;
    let phases: Vec<ExactPhase> = e
        .summands()
        .iter()
        .map(|l| kc.line_phase(l))
        .collect::<Result<_, _>>()?;
    let slopes: Vec<Rational> = e
        .summands()
        .iter()
        .map(|l| kc.slope(l))
        .collect::<Result<_, _>>()?;

    let hym = contractions.iter().all(|c| *c == contractions[0]);
    let dhym = phases.iter().all(|p| phases_equal_mod_2pi(p, &phases[0]));
    let instanton_type = match (hym, dhym) {
        (true, true) => InstantonType::TypeI,
        (true, false) => InstantonType::TypeII,
        (false, true) => InstantonType::TypeIII,
        (false, false) => InstantonType::Neither,
    };
    let stability = if e.rank() == 1 {
        Stability::Stable
    } else if slopes.iter().all(|s| *s == slopes[0]) {
        Stability::Polystable
    } else {
        Stability::Unstable
    };
    Ok(InstantonClassification {
        hym,
        dhym,
        instanton_type,
        stability,
    })
}

/// Direction of the total charge integral
/// `Σ_ℓ ∏_β (a_β + i·b_β^{(ℓ)}) / ⟨ϱ⁺, β∨⟩`: the phase `Θ̂(E)` mod 2π.
///
/// `None` when the integral vanishes outright (opposite summand rays can
/// cancel), in which case no phase is defined.
pub fn total_phase_ray(kc: &KahlerClass, e: &SumBundle) -> Result<Option<Ray>, Error> {
    if e.flag() != kc.flag() {
        return Err(Error::FlagMismatch);
    }
    let mut total = GaussRational::new(Rational::zero(), Rational::zero());
    for line in e.summands() {
        total += charge_integral(kc, line.weight())?;
    }
    Ok(Ray::from_gauss(&total))
}

/// All line bundles with `|s_α| <= bound` whose contraction equals `m`,
/// in lexicographic coefficient order.
pub fn contraction_level_set(
    kc: &KahlerClass,
    m: &Rational,
    bound: u32,
) -> Result<Vec<LineBundle>, Error> {
    lattice_filter(kc.flag(), bound, |line| {
        Ok(kc.contraction(line.weight())? == *m)
    })
}

/// All line bundles with `|s_α| <= bound` whose lifted Lagrangian phase
/// equals `target` (winding and ray both), in lexicographic
/// coefficient order.
///
/// Only exactly representable targets can be asked for, which is what
/// makes membership decidable.
pub fn phase_level_set(
    kc: &KahlerClass,
    target: &ExactPhase,
    bound: u32,
) -> Result<Vec<LineBundle>, Error> {
    lattice_filter(kc.flag(), bound, |line| Ok(kc.line_phase(line)? == *target))
}

fn lattice_filter(
    fv: &Arc<FlagVariety>,
    bound: u32,
    mut keep: impl FnMut(&LineBundle) -> Result<bool, Error>,
) -> Result<Vec<LineBundle>, Error> {
    let picard_rank = fv.picard_indices().len();
    let b = bound as i64;
    let mut out = Vec::new();
    let mut coeffs = vec![-b; picard_rank];
    if picard_rank == 0 {
        // Point variety: the Picard lattice is trivial.
        let line = LineBundle::new(fv, vec![])?;
        if keep(&line)? {
            out.push(line);
        }
        return Ok(out);
    }
    loop {
        let line = LineBundle::new(fv, coeffs.clone())?;
        if keep(&line)? {
            out.push(line);
        }
        // Odometer in lexicographic order, last coordinate fastest.
        let mut k = picard_rank;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if coeffs[k] < b {
                coeffs[k] += 1;
                for c in &mut coeffs[k + 1..] {
                    *c = -b;
                }
                break;
            }
        }
    }
}

/// `h⁰(End E) = Σ_{i,j} h⁰(L_i ⊗ L_j^{-1})` for a sum of line bundles on
/// a full flag variety, where `h⁰` of a line bundle is the Weyl dimension
/// of its weight when dominant and 0 otherwise (Borel-Weil).
pub fn h0_end(e: &SumBundle) -> Result<BigUint, Error> {
    let fv = e.flag();
    if !fv.parabolic_set().is_empty() {
        return Err(Error::NotFullFlag);
    }
    let rs = fv.root_system();
    let mut total = BigUint::zero();
    for li in e.summands() {
        for lj in e.summands() {
            let weight = li.weight() - lj.weight();
            if weight.dominant_integral_violation().is_none() {
                total += rs.weyl_dimension(&weight)?;
            }
        }
    }
    Ok(total)
}
