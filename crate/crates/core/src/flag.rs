//! Flag varieties `X_P = G/P` and their basic invariants.
//!
//! A flag variety is fixed by a root system and a parabolic subset
//! `I ⊂ Δ` of simple-root indices. The geometry in scope is entirely
//! combinatorial:
//!
//! * `Φ_I⁺`, the positive roots with some coefficient outside `I`;
//!   these index the eigenvalues of every invariant endomorphism, and
//!   the complex dimension is `n = |Φ_I⁺|`;
//! * the anticanonical weight `δ_P = Σ_{β ∈ Φ_I⁺} β`;
//! * Kähler classes and line bundles, both recorded by their weights in
//!   fundamental-weight coordinates over `Δ \ I`;
//! * eigenvalues, contractions, volumes, degrees and slopes, all exact
//!   rationals obtained from coroot pairings.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::rational::{rat, Rational};
use crate::root_system::{Root, RootSystem, Weight};

/// A generalized flag variety `X_P`, determined by a parabolic subset of
/// the simple roots.
///
/// `I = Δ` is permitted and yields the degenerate point variety
/// (`dim = 0`, empty products count as 1); it is reported via
/// [`FlagVariety::is_point`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagVariety {
    rs: Arc<RootSystem>,
    parabolic: Vec<usize>,
    complement: Vec<usize>,
    phi_i_plus: Vec<Root>,
    delta_p: Weight,
    anticanonical: Vec<i64>,
}

impl FlagVariety {
    /// Builds `X_P` from 0-based simple-root indices `I`.
    pub fn new(rs: Arc<RootSystem>, parabolic_set: &[usize]) -> Result<Self, Error> {
        let rank = rs.rank();
        for &i in parabolic_set {
            if i >= rank {
                return Err(Error::IndexOutOfRange { index: i + 1, rank });
            }
        }
        let mut parabolic: Vec<usize> = parabolic_set.to_vec();
        parabolic.sort_unstable();
        parabolic.dedup();
        let complement: Vec<usize> = (0..rank).filter(|i| !parabolic.contains(i)).collect();

        // Roots supported outside I survive in the quotient.
        let phi_i_plus: Vec<Root> = rs
            .positive_roots()
            .iter()
            .filter(|beta| complement.iter().any(|&i| beta.coeffs()[i] != 0))
            .cloned()
            .collect();

        let mut delta_p = Weight::zero(rank);
        for beta in &phi_i_plus {
            delta_p = &delta_p + &rs.root_weight(beta);
        }
        // delta_P is invariant under the reflections of I, so it vanishes
        // there and is strictly positive on the complement.
        let anticanonical: Vec<i64> = complement
            .iter()
            .map(|&i| {
                let k = &delta_p.coords()[i];
                debug_assert!(k.denom() == &num_bigint::BigInt::from(1));
                i64::try_from(k.numer()).expect("anticanonical coefficient fits i64")
            })
            .collect();
        debug_assert!(parabolic.iter().all(|&i| delta_p.coords()[i].is_zero()));
        debug_assert!(anticanonical.iter().all(|&l| l > 0) || complement.is_empty());

        Ok(Self {
            rs,
            parabolic,
            complement,
            phi_i_plus,
            delta_p,
            anticanonical,
        })
    }

    /// Full flag variety `G/B` (empty parabolic set).
    pub fn full_flag(rs: Arc<RootSystem>) -> Self {
        Self::new(rs, &[]).expect("empty set is always valid")
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// Sorted 0-based parabolic indices `I`.
    pub fn parabolic_set(&self) -> &[usize] {
        &self.parabolic
    }

    /// Sorted 0-based indices of `Δ \ I`; these label the Picard lattice.
    pub fn picard_indices(&self) -> &[usize] {
        &self.complement
    }

    /// `Φ_I⁺` in the ambient positive-root order.
    pub fn phi_i_plus(&self) -> &[Root] {
        &self.phi_i_plus
    }

    /// Complex dimension `n = |Φ_I⁺|`.
    pub fn dim(&self) -> usize {
        self.phi_i_plus.len()
    }

    /// True for the degenerate choice `I = Δ`.
    pub fn is_point(&self) -> bool {
        self.complement.is_empty()
    }

    /// Anticanonical weight `δ_P = Σ_{β ∈ Φ_I⁺} β`.
    pub fn anticanonical_weight(&self) -> &Weight {
        &self.delta_p
    }

    /// `ℓ_α = ⟨δ_P, α∨⟩ > 0` for `α ∈ Δ \ I`, aligned with
    /// [`FlagVariety::picard_indices`].
    pub fn anticanonical_coeffs(&self) -> &[i64] {
        &self.anticanonical
    }

    /// Builds the weight `Σ c_α ϖ_α` from coefficients over `Δ \ I`.
    pub fn weight_from_coeffs(&self, coeffs: &[Rational]) -> Result<Weight, Error> {
        if coeffs.len() != self.complement.len() {
            return Err(Error::DimensionMismatch {
                expected: self.complement.len(),
                got: coeffs.len(),
            });
        }
        let mut full = vec![Rational::zero(); self.rs.rank()];
        for (&i, c) in self.complement.iter().zip(coeffs) {
            full[i] = c.clone();
        }
        Ok(Weight::new(full))
    }

    /// Checks that a weight vanishes on the parabolic set.
    pub fn check_supported(&self, w: &Weight) -> Result<(), Error> {
        if w.rank() != self.rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rs.rank(),
                got: w.rank(),
            });
        }
        for &i in &self.parabolic {
            if !w.coords()[i].is_zero() {
                return Err(Error::UnsupportedWeight { index: i + 1 });
            }
        }
        Ok(())
    }
}

impl fmt::Display for FlagVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rs.lie_type())?;
        write!(f, "/P{{")?;
        for (k, &i) in self.parabolic.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// An invariant Kähler class, `λ([ω]) = Σ_{α ∈ Δ\I} c_α ϖ_α` with every
/// `c_α > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KahlerClass {
    fv: Arc<FlagVariety>,
    coeffs: Vec<Rational>,
    weight: Weight,
}

impl KahlerClass {
    pub fn new(fv: &Arc<FlagVariety>, coeffs: Vec<Rational>) -> Result<Self, Error> {
        let weight = fv.weight_from_coeffs(&coeffs)?;
        for (k, c) in coeffs.iter().enumerate() {
            if *c <= Rational::zero() {
                return Err(Error::NonPositiveKahler {
                    index: fv.picard_indices()[k] + 1,
                    value: c.to_string(),
                });
            }
        }
        // Positivity on the generators already forces positivity on all
        // of Phi_I^+.
        debug_assert!(fv
            .phi_i_plus()
            .iter()
            .all(|beta| fv.root_system().pairing(&weight, beta) > Rational::zero()));
        Ok(Self {
            fv: Arc::clone(fv),
            coeffs,
            weight,
        })
    }

    pub fn from_integers(fv: &Arc<FlagVariety>, coeffs: &[i64]) -> Result<Self, Error> {
        Self::new(fv, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn flag(&self) -> &Arc<FlagVariety> {
        &self.fv
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `λ([ω])` as a full-rank weight (zero on the parabolic set).
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    /// Eigenvalues `q_β = ⟨ξ, β∨⟩ / ⟨λ([ω]), β∨⟩` of the invariant
    /// endomorphism attached to the class `ξ`, listed in the order of
    /// [`FlagVariety::phi_i_plus`].
    pub fn eigenvalues(&self, xi: &Weight) -> Result<Vec<Rational>, Error> {
        self.fv.check_supported(xi)?;
        let rs = self.fv.root_system();
        Ok(self
            .fv
            .phi_i_plus()
            .iter()
            .map(|beta| rs.pairing(xi, beta) / rs.pairing(&self.weight, beta))
            .collect())
    }

    /// Contraction `Λ_ω(ξ) = Σ_β q_β`, the trace of the endomorphism.
    pub fn contraction(&self, xi: &Weight) -> Result<Rational, Error> {
        Ok(self.eigenvalues(xi)?.into_iter().sum())
    }

    /// Exact volume `Vol(X_P, ω) = ∏_{β ∈ Φ_I⁺} ⟨λ([ω]), β∨⟩ / ⟨ϱ⁺, β∨⟩`.
    pub fn volume(&self) -> Rational {
        let rs = self.fv.root_system();
        let rho = rs.weyl_vector();
        self.fv
            .phi_i_plus()
            .iter()
            .map(|beta| rs.pairing(&self.weight, beta) / rs.pairing(&rho, beta))
            .product()
    }

    /// Degree `deg_ω(E) = (n-1)! · Λ_ω(c₁(E)) · Vol(X_P, ω)`.
    pub fn degree(&self, bundle: &impl Bundle) -> Result<Rational, Error> {
        if bundle.flag() != &self.fv {
            return Err(Error::FlagMismatch);
        }
        let n = self.fv.dim();
        Ok(Rational::from_integer(factorial(n.saturating_sub(1)))
            * self.contraction(&bundle.first_chern_weight())?
            * self.volume())
    }

    /// Slope `μ_ω(E) = deg_ω(E) / rank(E)`.
    pub fn slope(&self, bundle: &impl Bundle) -> Result<Rational, Error> {
        Ok(self.degree(bundle)? / rat(bundle.rank() as i64))
    }
}

/// Anything with a flag variety, a rank and a first Chern weight.
pub trait Bundle {
    fn flag(&self) -> &Arc<FlagVariety>;
    fn rank(&self) -> usize;
    fn first_chern_weight(&self) -> Weight;
}

/// An invariant line bundle, recorded by integer coefficients
/// `s_α` over `Δ \ I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineBundle {
    fv: Arc<FlagVariety>,
    coeffs: Vec<i64>,
    weight: Weight,
}

impl LineBundle {
    pub fn new(fv: &Arc<FlagVariety>, coeffs: Vec<i64>) -> Result<Self, Error> {
        let rationals: Vec<Rational> = coeffs.iter().map(|&c| rat(c)).collect();
        let weight = fv.weight_from_coeffs(&rationals)?;
        Ok(Self {
            fv: Arc::clone(fv),
            coeffs,
            weight,
        })
    }

    /// The structure sheaf.
    pub fn trivial(fv: &Arc<FlagVariety>) -> Self {
        Self::new(fv, vec![0; fv.picard_indices().len()]).expect("lengths match")
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// `λ(E)` as a full-rank weight.
    pub fn weight(&self) -> &Weight {
        &self.weight
    }
}

impl Bundle for LineBundle {
    fn flag(&self) -> &Arc<FlagVariety> {
        &self.fv
    }

    fn rank(&self) -> usize {
        1
    }

    fn first_chern_weight(&self) -> Weight {
        self.weight.clone()
    }
}

impl fmt::Display for LineBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O(")?;
        for (k, s) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", s)?;
        }
        write!(f, ")")
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}
