//! Root systems of simple Lie algebras, built from Cartan matrices.
//!
//! Only the Cartan matrices are taken as given, one per admissible
//! `(family, rank)` pair in the standard Bourbaki numbering. Everything
//! else is computed:
//!
//! * the positive roots, by saturating root strings upward from the
//!   simple roots (a root `β` extends to `β + α_i` exactly when
//!   `⟨β, α_i∨⟩ - p < 0`, where `p` is the depth of the `α_i`-string
//!   below `β`);
//! * the symmetrizer `d`, the unique positive integer vector with
//!   `min d_i = 1` making `C·diag(d)` symmetric;
//! * coroot pairings `⟨λ, β∨⟩`, exact rationals in the fundamental-weight
//!   coordinates of `λ`.
//!
//! The pairing is the atomic quantity of the whole crate: eigenvalues,
//! contractions, volumes, degrees, phases and charges all factor through
//! it. It only depends on ratios of root lengths, so the symmetrizer
//! normalization `min d_i = 1` is as good as any metric normalization.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::rational::{is_nonneg_integer, rat, Rational};

/// The nine infinite-or-exceptional families of simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl LieFamily {
    /// Parses a single family letter.
    pub fn from_char(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(Self::A),
            'B' => Some(Self::B),
            'C' => Some(Self::C),
            'D' => Some(Self::D),
            'E' => Some(Self::E),
            'F' => Some(Self::F),
            'G' => Some(Self::G),
            _ => None,
        }
    }

    fn letter(self) -> char {
        match self {
            Self::A => 'A',
            Self::B => 'B',
            Self::C => 'C',
            Self::D => 'D',
            Self::E => 'E',
            Self::F => 'F',
            Self::G => 'G',
        }
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// An admissible simple Lie type, e.g. `A2`, `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieType {
    family: LieFamily,
    rank: usize,
}

impl LieType {
    /// Validates the `(family, rank)` pair.
    ///
    /// Admissible ranks: A `n >= 1`, B `n >= 2`, C `n >= 3`, D `n >= 4`,
    /// E `n in {6,7,8}`, F `n = 4`, G `n = 2`. The lower bounds exclude
    /// the coincidences B1 = A1, C2 = B2, D3 = A3.
    pub fn new(family: LieFamily, rank: usize) -> Result<Self, Error> {
        let constraint = match family {
            LieFamily::A if rank >= 1 => None,
            LieFamily::A => Some("A requires rank >= 1"),
            LieFamily::B if rank >= 2 => None,
            LieFamily::B => Some("B requires rank >= 2 (B1 = A1)"),
            LieFamily::C if rank >= 3 => None,
            LieFamily::C => Some("C requires rank >= 3 (C2 = B2)"),
            LieFamily::D if rank >= 4 => None,
            LieFamily::D => Some("D requires rank >= 4 (D3 = A3)"),
            LieFamily::E if (6..=8).contains(&rank) => None,
            LieFamily::E => Some("E requires rank in {6, 7, 8}"),
            LieFamily::F if rank == 4 => None,
            LieFamily::F => Some("F requires rank = 4"),
            LieFamily::G if rank == 2 => None,
            LieFamily::G => Some("G requires rank = 2"),
        };
        match constraint {
            None => Ok(Self { family, rank }),
            Some(constraint) => Err(Error::InadmissibleType {
                family: family.letter(),
                rank,
                constraint,
            }),
        }
    }

    pub fn family(&self) -> LieFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, from the classical closed forms.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            LieFamily::A => n * (n + 1) / 2,
            LieFamily::B | LieFamily::C => n * n,
            LieFamily::D => n * (n - 1),
            LieFamily::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            LieFamily::F => 24,
            LieFamily::G => 6,
        }
    }

    /// Cartan matrix in the Bourbaki numbering, `C_ij = ⟨α_i, α_j∨⟩`.
    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let bond = |i: usize, j: usize, cij: i64, cji: i64, c: &mut Vec<Vec<i64>>| {
            c[i][j] = cij;
            c[j][i] = cji;
        };
        match self.family {
            LieFamily::A => {
                for i in 0..n - 1 {
                    bond(i, i + 1, -1, -1, &mut c);
                }
            }
            // B_n: alpha_n is the short root, the double bond points at it.
            LieFamily::B => {
                for i in 0..n - 2 {
                    bond(i, i + 1, -1, -1, &mut c);
                }
                bond(n - 2, n - 1, -2, -1, &mut c);
            }
            // C_n: alpha_n is the long root.
            LieFamily::C => {
                for i in 0..n - 2 {
                    bond(i, i + 1, -1, -1, &mut c);
                }
                bond(n - 2, n - 1, -1, -2, &mut c);
            }
            // D_n: fork at alpha_{n-2}.
            LieFamily::D => {
                for i in 0..n - 3 {
                    bond(i, i + 1, -1, -1, &mut c);
                }
                bond(n - 3, n - 2, -1, -1, &mut c);
                bond(n - 3, n - 1, -1, -1, &mut c);
            }
            // E_n: chain 1-3-4-5-...-n with alpha_2 attached to alpha_4.
            LieFamily::E => {
                bond(0, 2, -1, -1, &mut c);
                for i in 2..n - 1 {
                    bond(i, i + 1, -1, -1, &mut c);
                }
                bond(1, 3, -1, -1, &mut c);
            }
            // F_4: alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            LieFamily::F => {
                bond(0, 1, -1, -1, &mut c);
                bond(1, 2, -2, -1, &mut c);
                bond(2, 3, -1, -1, &mut c);
            }
            // G_2: alpha_1 short, so the highest root is 3a1 + 2a2.
            LieFamily::G => {
                bond(0, 1, -1, -3, &mut c);
            }
        }
        c
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A positive root in simple-root coordinates `β = Σ m_i α_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    fn new(coeffs: Vec<i64>) -> Self {
        debug_assert!(coeffs.iter().all(|&m| m >= 0));
        debug_assert!(coeffs.iter().any(|&m| m > 0));
        Self { coeffs }
    }

    /// Simple-root coordinates `m_i`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Height `Σ m_i`.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// True for a simple root (height 1).
    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &m) in self.coeffs.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            if m == 1 {
                write!(f, "a{}", i + 1)?;
            } else {
                write!(f, "{}a{}", m, i + 1)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// A weight in fundamental-weight coordinates `λ = Σ k_i ϖ_i`.
///
/// Coordinates are exact rationals; integral weights are the ones with
/// integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coords: vec![Rational::zero(); rank],
        }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self {
            coords: coords.iter().map(|&k| rat(k)).collect(),
        }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Scales every coordinate by `t`.
    pub fn scaled(&self, t: &Rational) -> Self {
        Self {
            coords: self.coords.iter().map(|k| k * t).collect(),
        }
    }

    /// `None` if dominant integral, otherwise the first offending
    /// coordinate.
    pub fn dominant_integral_violation(&self) -> Option<(usize, &Rational)> {
        self.coords
            .iter()
            .enumerate()
            .find(|(_, k)| !is_nonneg_integer(k))
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|k| -k).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", k)?;
        }
        write!(f, ")")
    }
}

/// Root-system data of a simple Lie algebra: Cartan matrix, symmetrizer
/// and the full list of positive roots.
///
/// Immutable after construction; shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    /// Builds the root system of an admissible Lie type.
    pub fn new(lie_type: LieType) -> Self {
        let cartan = lie_type.cartan_matrix();
        let symmetrizer = compute_symmetrizer(&cartan);
        let positive_roots = generate_positive_roots(&cartan);
        debug_assert_eq!(positive_roots.len(), lie_type.positive_root_count());
        Self {
            lie_type,
            cartan,
            symmetrizer,
            positive_roots,
        }
    }

    /// Convenience constructor from a family letter and rank.
    pub fn build(family: LieFamily, rank: usize) -> Result<Self, Error> {
        Ok(Self::new(LieType::new(family, rank)?))
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    /// Cartan matrix, `C_ij = ⟨α_i, α_j∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Symmetrizer `d` with `C·diag(d)` symmetric, entries positive
    /// integers, smallest entry 1. `d_i` is proportional to `⟨α_i, α_i⟩`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Positive roots, ordered by height, simple roots first in index
    /// order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// The `i`-th simple root (0-based).
    pub fn simple_root(&self, i: usize) -> Root {
        let mut coeffs = vec![0; self.rank()];
        coeffs[i] = 1;
        Root::new(coeffs)
    }

    /// Exact coroot pairing `⟨λ, β∨⟩ = 2⟨λ, β⟩ / ⟨β, β⟩`.
    ///
    /// With `d_i ∝ ⟨α_i, α_i⟩` this is `(Σ_i k_i m_i d_i) / d_β`, where
    /// `d_β = (Σ_{i,j} m_i m_j C_ij d_j) / 2` is the half-length-square of
    /// `β` in the symmetrizer scale. For simply-laced types every `d` is 1
    /// and the pairing reduces to `Σ_i k_i m_i`.
    pub fn pairing(&self, lambda: &Weight, beta: &Root) -> Rational {
        let n = self.rank();
        assert_eq!(lambda.rank(), n, "weight rank mismatch");
        assert_eq!(beta.coeffs.len(), n, "root rank mismatch");
        let mut numerator = Rational::zero();
        for i in 0..n {
            let scale = beta.coeffs[i] * self.symmetrizer[i];
            if scale != 0 {
                numerator += &lambda.coords[i] * rat(scale);
            }
        }
        numerator / rat(self.half_length_square(beta))
    }

    /// `d_β`: half the squared length of `β` in the symmetrizer scale.
    /// Equals `d_i` when `β` is in the length class of `α_i`.
    fn half_length_square(&self, beta: &Root) -> i64 {
        let n = self.rank();
        let mut twice = 0i64;
        for i in 0..n {
            if beta.coeffs[i] == 0 {
                continue;
            }
            for j in 0..n {
                twice += beta.coeffs[i] * beta.coeffs[j] * self.cartan[i][j] * self.symmetrizer[j];
            }
        }
        debug_assert!(twice > 0 && twice % 2 == 0);
        twice / 2
    }

    /// The Weyl vector `ϱ⁺`, half the sum of the positive roots: all
    /// fundamental coordinates equal 1.
    pub fn weyl_vector(&self) -> Weight {
        Weight::from_integers(&vec![1; self.rank()])
    }

    /// Fundamental-weight coordinates of a root, via the transpose of the
    /// Cartan matrix: coordinate `i` is `⟨β, α_i∨⟩ = Σ_j m_j C_ji`.
    pub fn root_weight(&self, beta: &Root) -> Weight {
        let n = self.rank();
        let coords = (0..n)
            .map(|i| rat((0..n).map(|j| beta.coeffs[j] * self.cartan[j][i]).sum()))
            .collect();
        Weight::new(coords)
    }

    /// Dimension of the irreducible representation with highest weight
    /// `λ`, by the Weyl dimension formula
    /// `∏_{β>0} ⟨λ+ϱ⁺, β∨⟩ / ⟨ϱ⁺, β∨⟩`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<BigUint, Error> {
        if lambda.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: lambda.rank(),
            });
        }
        if let Some((index, value)) = lambda.dominant_integral_violation() {
            return Err(Error::NotDominantIntegral {
                index: index + 1,
                value: value.to_string(),
            });
        }
        let rho = self.weyl_vector();
        let shifted = lambda + &rho;
        let mut dim = Rational::one();
        for beta in &self.positive_roots {
            dim *= self.pairing(&shifted, beta) / self.pairing(&rho, beta);
        }
        assert!(dim.denom().is_one() && dim.numer().is_positive());
        Ok(dim.numer().to_biguint().expect("positive integer"))
    }
}

/// Positive integer symmetrizer of a Cartan matrix, smallest entry 1.
///
/// Determined by propagating `d_j = d_i · C_ji / C_ij` along the bonds of
/// the (connected) Dynkin diagram, then clearing denominators.
fn compute_symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(Rational::one());
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let di = d[i].clone().expect("visited");
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                d[j] = Some(&di * rat(cartan[j][i]) / rat(cartan[i][j]));
                stack.push(j);
            }
        }
    }
    let values: Vec<Rational> = d.into_iter().map(|v| v.expect("connected")).collect();
    let min = values.iter().min().expect("nonempty").clone();
    values
        .iter()
        .map(|v| {
            let scaled = v / &min;
            assert!(scaled.denom().is_one(), "symmetrizer must be integral");
            i64::try_from(scaled.numer()).expect("small integer")
        })
        .collect()
}

/// All positive roots by upward root-string saturation.
///
/// Layer by layer in the height: `β + α_i` is a root exactly when
/// `⟨β, α_i∨⟩ - p < 0`, with `p` the number of consecutive roots
/// `β - α_i, β - 2α_i, …` below `β`. Every root of height `h+1` arises
/// from one of height `h`, so the walk-down only ever consults roots
/// already generated.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..n {
        let mut coeffs = vec![0i64; n];
        coeffs[i] = 1;
        known.insert(coeffs.clone());
        layer.insert(coeffs);
    }
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let mut depth = 0i64;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if probe[i] < 0 || !known.contains(&probe) {
                        break;
                    }
                    depth += 1;
                }
                if pairing - depth < 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        known.extend(next.iter().cloned());
        layer = next;
    }
    let mut roots: Vec<Root> = known.into_iter().map(Root::new).collect();
    // Height first; within a height, descending coefficient order, which
    // puts lower-index simple roots first (a1, a2, ..., a1+a2, ...).
    roots.sort_by(|a, b| {
        a.height()
            .cmp(&b.height())
            .then_with(|| b.coeffs.cmp(&a.coeffs))
    });
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    fn a2() -> RootSystem {
        RootSystem::build(LieFamily::A, 2).unwrap()
    }

    fn b2() -> RootSystem {
        RootSystem::build(LieFamily::B, 2).unwrap()
    }

    fn g2() -> RootSystem {
        RootSystem::build(LieFamily::G, 2).unwrap()
    }

    fn all_admissible() -> Vec<RootSystem> {
        let mut systems = Vec::new();
        for rank in 1..=8 {
            systems.push(RootSystem::build(LieFamily::A, rank).unwrap());
        }
        for rank in 2..=8 {
            systems.push(RootSystem::build(LieFamily::B, rank).unwrap());
        }
        for rank in 3..=8 {
            systems.push(RootSystem::build(LieFamily::C, rank).unwrap());
        }
        for rank in 4..=8 {
            systems.push(RootSystem::build(LieFamily::D, rank).unwrap());
        }
        for rank in 6..=8 {
            systems.push(RootSystem::build(LieFamily::E, rank).unwrap());
        }
        systems.push(RootSystem::build(LieFamily::F, 4).unwrap());
        systems.push(RootSystem::build(LieFamily::G, 2).unwrap());
        systems
    }

    #[test]
    fn rejects_inadmissible_types() {
        for (family, rank) in [
            (LieFamily::A, 0),
            (LieFamily::B, 1),
            (LieFamily::C, 2),
            (LieFamily::D, 3),
            (LieFamily::E, 5),
            (LieFamily::E, 9),
            (LieFamily::F, 3),
            (LieFamily::G, 1),
        ] {
            let err = LieType::new(family, rank).unwrap_err();
            match err {
                Error::InadmissibleType { constraint, .. } => {
                    assert!(!constraint.is_empty())
                }
                other => panic!("unexpected error {other:?}"),
            }
        }
    }

    #[test]
    fn a2_cartan_and_roots() {
        let rs = a2();
        assert_eq!(rs.cartan(), &[vec![2, -1], vec![-1, 2]]);
        let coeffs: Vec<&[i64]> = rs.positive_roots().iter().map(|r| r.coeffs()).collect();
        assert_eq!(coeffs, vec![&[1, 0][..], &[0, 1], &[1, 1]]);
    }

    #[test]
    fn a1_is_rank_one() {
        let rs = RootSystem::build(LieFamily::A, 1).unwrap();
        assert_eq!(rs.cartan(), &[vec![2]]);
        assert_eq!(rs.positive_roots().len(), 1);
        assert_eq!(rs.positive_roots()[0].coeffs(), &[1]);
    }

    // Oracle: the printed G2 root table, with alpha_1 short.
    #[test]
    fn g2_matches_reference_table() {
        let rs = g2();
        let expected: BTreeSet<Vec<i64>> = [
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        assert_eq!(got, expected);
        let highest = rs.positive_roots().last().unwrap();
        assert_eq!(highest.coeffs(), &[3, 2]);
    }

    #[test]
    fn positive_root_counts_match_closed_forms() {
        for rs in all_admissible() {
            assert_eq!(
                rs.positive_roots().len(),
                rs.lie_type().positive_root_count(),
                "count mismatch for {}",
                rs.lie_type()
            );
        }
    }

    #[test]
    fn symmetrizer_symmetrizes_exactly() {
        for rs in all_admissible() {
            let n = rs.rank();
            let c = rs.cartan();
            let d = rs.symmetrizer();
            assert_eq!(*d.iter().min().unwrap(), 1);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(
                        c[i][j] * d[j],
                        c[j][i] * d[i],
                        "C.diag(d) not symmetric for {}",
                        rs.lie_type()
                    );
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let rs = a2();
        let alpha3 = Root::new(vec![1, 1]);
        // delta_B = 2w1 + 2w2 paired with the highest root.
        assert_eq!(rs.pairing(&Weight::from_integers(&[2, 2]), &alpha3), rat(4));
        // Fundamental weights are dual to the simple coroots.
        for i in 0..2 {
            for j in 0..2 {
                let mut coords = vec![0; 2];
                coords[i] = 1;
                let expected = if i == j { 1 } else { 0 };
                assert_eq!(
                    rs.pairing(&Weight::from_integers(&coords), &rs.simple_root(j)),
                    rat(expected)
                );
            }
        }
        // Generic class against the highest root: s1 + s2.
        assert_eq!(
            rs.pairing(&Weight::from_integers(&[5, -3]), &alpha3),
            rat(2)
        );
        assert_eq!(
            rs.pairing(&Weight::new(vec![ratio(1, 2), ratio(1, 3)]), &alpha3),
            ratio(5, 6)
        );
    }

    // Oracle: B2 coroot table computed by hand in the e-basis
    // (alpha_1 = e1 - e2 long, alpha_2 = e2 short):
    //   (a1+a2)"  = 2a1" + a2",   (a1+2a2)" = a1" + a2".
    #[test]
    fn b2_pairings_match_hand_table() {
        let rs = b2();
        let w1 = Weight::from_integers(&[1, 0]);
        let w2 = Weight::from_integers(&[0, 1]);
        let short = Root::new(vec![1, 1]);
        let long = Root::new(vec![1, 2]);
        assert_eq!(rs.pairing(&w1, &short), rat(2));
        assert_eq!(rs.pairing(&w2, &short), rat(1));
        assert_eq!(rs.pairing(&w1, &long), rat(1));
        assert_eq!(rs.pairing(&w2, &long), rat(1));
        for j in 0..2 {
            assert_eq!(rs.pairing(&w1, &rs.simple_root(j)), rat(1 - j as i64));
            assert_eq!(rs.pairing(&w2, &rs.simple_root(j)), rat(j as i64));
        }
    }

    #[test]
    fn weyl_vector_is_all_ones_and_half_root_sum() {
        for rs in [
            a2(),
            RootSystem::build(LieFamily::A, 1).unwrap(),
            b2(),
            g2(),
        ] {
            let rho = rs.weyl_vector();
            assert!(rho.coords().iter().all(|k| *k == rat(1)));
            let mut sum = Weight::zero(rs.rank());
            for beta in rs.positive_roots() {
                sum = &sum + &rs.root_weight(beta);
            }
            assert_eq!(sum.scaled(&ratio(1, 2)), rho);
        }
    }

    #[test]
    fn root_weight_matches_cartan_transpose() {
        let rs = a2();
        assert_eq!(
            rs.root_weight(&rs.simple_root(0)),
            Weight::from_integers(&[2, -1])
        );
        assert_eq!(
            rs.root_weight(&Root::new(vec![1, 1])),
            Weight::from_integers(&[1, 1])
        );
        // Converting then pairing with every simple coroot reproduces the
        // Cartan column.
        for rs in all_admissible() {
            for (i, alpha) in (0..rs.rank()).map(|i| (i, rs.simple_root(i))) {
                let w = rs.root_weight(&alpha);
                for j in 0..rs.rank() {
                    assert_eq!(rs.pairing(&w, &rs.simple_root(j)), rat(rs.cartan()[i][j]));
                    assert_eq!(w.coords()[j], rat(rs.cartan()[i][j]));
                }
            }
        }
    }

    #[test]
    fn root_weight_round_trips_with_pairing() {
        for rs in all_admissible() {
            for beta in rs.positive_roots() {
                let w = rs.root_weight(beta);
                for i in 0..rs.rank() {
                    assert_eq!(w.coords()[i], rs.pairing(&w, &rs.simple_root(i)));
                }
            }
        }
    }

    #[test]
    fn weyl_vector_pairings_are_at_least_one() {
        for rs in all_admissible() {
            let rho = rs.weyl_vector();
            let simply_laced = matches!(
                rs.lie_type().family(),
                LieFamily::A | LieFamily::D | LieFamily::E
            );
            for beta in rs.positive_roots() {
                let p = rs.pairing(&rho, beta);
                assert!(p >= rat(1), "{}: <rho, {}v> = {}", rs.lie_type(), beta, p);
                if beta.is_simple() {
                    assert_eq!(p, rat(1));
                } else if simply_laced {
                    assert!(p > rat(1));
                }
            }
        }
    }

    #[test]
    fn weyl_dimensions_a2() {
        let rs = a2();
        assert_eq!(
            rs.weyl_dimension(&Weight::from_integers(&[1, 0])).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            rs.weyl_dimension(&Weight::from_integers(&[0, 1])).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            rs.weyl_dimension(&Weight::from_integers(&[0, 0])).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            rs.weyl_dimension(&Weight::from_integers(&[1, 1])).unwrap(),
            BigUint::from(8u32)
        );
    }

    // Oracles: dim V(w1) = 5 and dim V(w2) = 4 for B2 (vector and spin
    // representations of so(5)); dim V(w2) = 14 for G2 (the adjoint,
    // attached to the long simple root).
    #[test]
    fn weyl_dimensions_non_simply_laced() {
        let rs = b2();
        assert_eq!(
            rs.weyl_dimension(&Weight::from_integers(&[1, 0])).unwrap(),
            BigUint::from(5u32)
        );
        assert_eq!(
            rs.weyl_dimension(&Weight::from_integers(&[0, 1])).unwrap(),
            BigUint::from(4u32)
        );
        let rs = g2();
        assert_eq!(
            rs.weyl_dimension(&Weight::from_integers(&[0, 1])).unwrap(),
            BigUint::from(14u32)
        );
        assert_eq!(
            rs.weyl_dimension(&Weight::from_integers(&[1, 0])).unwrap(),
            BigUint::from(7u32)
        );
    }

    #[test]
    fn weyl_dimension_rejects_non_dominant() {
        let rs = a2();
        assert!(matches!(
            rs.weyl_dimension(&Weight::from_integers(&[-1, 2])),
            Err(Error::NotDominantIntegral { index: 1, .. })
        ));
        assert!(matches!(
            rs.weyl_dimension(&Weight::new(vec![ratio(1, 2), rat(0)])),
            Err(Error::NotDominantIntegral { .. })
        ));
    }

    proptest! {
        // Linearity of the pairing in the weight argument.
        #[test]
        fn pairing_is_linear(
            ks in proptest::collection::vec(-40i64..40, 2),
            ls in proptest::collection::vec(-40i64..40, 2),
            a_num in -12i64..12,
            a_den in 1i64..8,
        ) {
            let rs = a2();
            let a = ratio(a_num, a_den);
            let lambda = Weight::from_integers(&ks);
            let mu = Weight::from_integers(&ls);
            let combined = &lambda.scaled(&a) + &mu;
            for beta in rs.positive_roots() {
                let lhs = rs.pairing(&combined, beta);
                let rhs = &a * rs.pairing(&lambda, beta) + rs.pairing(&mu, beta);
                prop_assert_eq!(lhs, rhs);
            }
        }

        // Same property on a non-simply-laced system.
        #[test]
        fn pairing_is_linear_g2(
            ks in proptest::collection::vec(-20i64..20, 2),
            ls in proptest::collection::vec(-20i64..20, 2),
            a_num in -9i64..9,
            a_den in 1i64..5,
        ) {
            let rs = g2();
            let a = ratio(a_num, a_den);
            let lambda = Weight::from_integers(&ks);
            let mu = Weight::from_integers(&ls);
            let combined = &lambda.scaled(&a) + &mu;
            for beta in rs.positive_roots() {
                let lhs = rs.pairing(&combined, beta);
                let rhs = &a * rs.pairing(&lambda, beta) + rs.pairing(&mu, beta);
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
