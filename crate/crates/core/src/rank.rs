//! Lower bounds and certificates for the cactus, smoothable and Waring rank.
//!
//! If every minimal generator of `F⊥` has degree at most `d`, any finite
//! apolar scheme `Γ` has `deg Γ >= length(S/F⊥) / d`; this is the bound
//! computed by [`generator_degree_bound`]. For a monomial
//! `x0^d0 ·· xn^dn` with `d0 <= .. <= dn`, `F⊥ = (y_i^(d_i+1))`, the bound
//! equals `Π_(i<n) (d_i + 1)` and is attained by the complete intersection of
//! the first `n` generators, so cactus and smoothable rank coincide. When all
//! exponents are equal to `d`, the rank is `(d+1)^n` as well; here that upper
//! bound is certified by an explicit decomposition on a grid of roots of
//! unity rather than assumed.
//!
//! Upper bounds come from [`waring_fit`]. A set of distinct points `p_i` is
//! apolar to `F` iff `F` is a combination of the forms `Σ_a p_i^a x^a` (the
//! contraction-dual powers, see [`divided_power`]).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::apolar::{hilbert_function, max_generator_degree, minimal_generators, GradedIdeal, HilbertData};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Matrix, Solution};
use crate::poly::{coefficient_vector, divided_power, monomial_basis, Form, Homogeneity, Monomial, ProjectivePoint, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub hilbert: HilbertData,
    pub generators: GradedIdeal,
    /// `length(S/F⊥)`.
    pub length: usize,
    /// Largest minimal generator degree of `F⊥`.
    pub max_generator_degree: u32,
    /// `length / max_generator_degree`, a lower bound for the cactus rank.
    pub bound_exact: Ratio<u64>,
    pub bound_ceiling: u64,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialRankData {
    /// Positive exponents in ascending order.
    pub exponents: Vec<u32>,
    pub cactus_rank: u64,
    pub smoothable_rank: u64,
    /// Known only when all exponents agree.
    pub waring_rank: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CiKind {
    /// `n` generators in `P^n`: a finite scheme of the given degree.
    FiniteScheme,
    /// `n + 1` generators: the quotient is Artinian and the degree is its length.
    Artinian,
    /// Fewer than `n` generators: positive-dimensional, the product is only
    /// the multiplicity of the complete intersection.
    PositiveDimensional,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CiDegree {
    pub degree: u64,
    pub kind: CiKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaringDecomposition {
    pub points: Vec<ProjectivePoint>,
    pub coefficients: Vec<Scalar>,
    pub degree: u32,
}

impl WaringDecomposition {
    /// `Σ λ_i · divided_power(p_i, e)`.
    pub fn expand(&self) -> Form {
        let nvars = self.points.first().map_or(0, ProjectivePoint::nvars);
        let field = self.points.first().map_or(FieldSpec::Rationals, ProjectivePoint::field);
        let mut acc = Form::zero(nvars, field, Ring::Primal);
        for (p, c) in self.points.iter().zip(&self.coefficients) {
            if c.is_zero() {
                continue;
            }
            let term = divided_power(p, self.degree).scale(c).expect("same field");
            acc = acc.add(&term).expect("same ring");
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WaringFit {
    Decomposition(WaringDecomposition),
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub n: usize,
    pub d: u32,
    pub field: FieldSpec,
    /// `(x0 ·· xn)^d`.
    pub form: Form,
    pub lower_bound: RankReport,
    pub decomposition: WaringDecomposition,
    pub rank: u64,
}

/// Lower bound `length(S/F⊥) / d` on the cactus rank, with `d` the largest
/// minimal generator degree of `F⊥`.
pub fn generator_degree_bound(f: &Form) -> Result<RankReport> {
    let hilbert = hilbert_function(f)?;
    let generators = minimal_generators(f)?;
    let d = max_generator_degree(&generators)?;
    let length = hilbert.length;
    let bound_exact = Ratio::new(length as u64, d as u64);
    let bound_ceiling = bound_exact.ceil().to_integer();
    let mut notes = vec![
        format!("F⊥ is generated in degree <= {d}"),
        format!("cactus rank >= {bound_exact}; smoothable rank and rank are at least the cactus rank"),
    ];
    if generators.degrees().iter().any(|&g| g < d) {
        notes.push(String::from("generators of lower degree exist; the bound uses the largest degree"));
    }
    Ok(RankReport {
        hilbert,
        generators,
        length,
        max_generator_degree: d,
        bound_exact,
        bound_ceiling,
        notes,
    })
}

fn normalized_exponents(exponents: &[u32]) -> Result<Vec<u32>> {
    let mut e: Vec<u32> = exponents.iter().copied().filter(|&d| d > 0).collect();
    if e.is_empty() {
        return Err(Error::AllZeroExponents);
    }
    e.sort_unstable();
    Ok(e)
}

fn checked_product(factors: impl IntoIterator<Item = u64>) -> Result<u64> {
    factors.into_iter().try_fold(1u64, |acc, x| acc.checked_mul(x).ok_or(Error::Overflow("rank")))
}

/// Cactus, smoothable and (when defined) Waring rank of a monomial from its
/// exponents. Zero exponents are dropped and the rest sorted.
pub fn monomial_rank(exponents: &[u32]) -> Result<MonomialRankData> {
    let exponents = normalized_exponents(exponents)?;
    let (_, rest) = exponents.split_last().expect("nonempty");
    let cactus_rank = checked_product(rest.iter().map(|&d| d as u64 + 1))?;
    let waring_rank = if exponents.iter().all(|&d| d == exponents[0]) {
        Some(checked_product(rest.iter().map(|&d| d as u64 + 1))?)
    } else {
        None
    };
    Ok(MonomialRankData { exponents, cactus_rank, smoothable_rank: cactus_rank, waring_rank })
}

/// `x0^d0 ·· xn^dn` for the sorted positive exponents.
pub fn monomial_form(exponents: &[u32], field: FieldSpec) -> Result<Form> {
    let exponents = normalized_exponents(exponents)?;
    Ok(Form::monomial(field, Ring::Primal, Monomial::new(exponents)))
}

/// The apolar complete intersection `(y0^(d0+1), .., y_(n-1)^(d_(n-1)+1))`
/// of the sorted monomial, omitting the variable with the largest exponent.
pub fn monomial_apolar_ci(exponents: &[u32], field: FieldSpec) -> Result<GradedIdeal> {
    let exponents = normalized_exponents(exponents)?;
    let nvars = exponents.len();
    if nvars < 2 {
        return Err(Error::TooFewVariables);
    }
    let gens = exponents[..nvars - 1]
        .iter()
        .enumerate()
        .map(|(i, &d)| Form::monomial(field, Ring::Dual, Monomial::power(nvars, i, d + 1)))
        .collect();
    GradedIdeal::new(nvars, field, gens)
}

/// Bezout degree of an ideal generated by powers of distinct variables.
pub fn ci_degree(ideal: &GradedIdeal) -> Result<CiDegree> {
    let nvars = ideal.nvars();
    let mut used = vec![false; nvars];
    let mut degrees = Vec::with_capacity(ideal.generators().len());
    for g in ideal.generators() {
        let mut terms = g.terms();
        let (m, _) = terms.next().ok_or(Error::NotMonomialPowers)?;
        if terms.next().is_some() {
            return Err(Error::NotMonomialPowers);
        }
        let mut support = m.exponents().iter().enumerate().filter(|(_, &e)| e > 0);
        let (var, &e) = support.next().ok_or(Error::NotMonomialPowers)?;
        if support.next().is_some() || used[var] {
            return Err(Error::NotMonomialPowers);
        }
        used[var] = true;
        degrees.push(e as u64);
    }
    let degree = checked_product(degrees.iter().copied())?;
    let count = degrees.len();
    let kind = if count == nvars {
        CiKind::Artinian
    } else if count + 1 == nvars {
        CiKind::FiniteScheme
    } else {
        CiKind::PositiveDimensional
    };
    Ok(CiDegree { degree, kind })
}

/// The `(d+1)^n` points `(1 : ζ^a1 : .. : ζ^an)`, `a ∈ {0..d}^n`, for a
/// primitive `(d+1)`-th root of unity `ζ`, in lexicographic order of `a`.
///
/// They form the reduced complete intersection
/// `y_i^(d+1) - y0^(d+1) = 0`, `i = 1..n`, which lies in the annihilator of
/// `(x0 ·· xn)^d`.
pub fn smooth_apolar_points(n: usize, d: u32, field: FieldSpec) -> Result<Vec<ProjectivePoint>> {
    let m = d as u64 + 1;
    let zeta = field.primitive_root_of_unity(m)?;
    let count = checked_product(core::iter::repeat_n(m, n))?;
    let powers: Vec<Scalar> = (0..m).map(|k| zeta.pow(k)).collect();
    let mut points = Vec::with_capacity(count as usize);
    let mut digits = vec![0usize; n];
    for _ in 0..count {
        let mut coords = Vec::with_capacity(n + 1);
        coords.push(field.one());
        coords.extend(digits.iter().map(|&a| powers[a].clone()));
        points.push(ProjectivePoint::new(coords)?);
        for slot in digits.iter_mut().rev() {
            *slot += 1;
            if (*slot as u64) < m {
                break;
            }
            *slot = 0;
        }
    }
    Ok(points)
}

/// Solves `F = Σ λ_i · divided_power(p_i, e)` exactly.
///
/// A solution certifies that the points form an apolar scheme of `F`, hence
/// rank `<= #points`; `Infeasible` means they do not.
pub fn waring_fit(f: &Form, points: &[ProjectivePoint]) -> Result<WaringFit> {
    if f.ring() != Ring::Primal {
        return Err(Error::RingMismatch);
    }
    let e = match f.homogeneity() {
        Homogeneity::Zero => return Err(Error::ZeroForm),
        Homogeneity::Homogeneous(e) => e,
        Homogeneity::Inhomogeneous => return Err(Error::NonHomogeneous),
    };
    for p in points {
        if p.nvars() != f.nvars() {
            return Err(Error::ArityMismatch(f.nvars(), p.nvars()));
        }
        if p.field() != f.field() {
            return Err(Error::FieldMismatch(f.field(), p.field()));
        }
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(Error::DuplicatePoints);
        }
    }
    let basis = monomial_basis(f.nvars(), e);
    let columns = points
        .iter()
        .map(|p| coefficient_vector(&divided_power(p, e), &basis))
        .collect::<Result<Vec<_>>>()?;
    let system = Matrix::from_columns(f.field(), basis.len(), &columns)?;
    let target = coefficient_vector(f, &basis)?;
    match system.solve(&target)? {
        Solution::Inconsistent => Ok(WaringFit::Infeasible),
        Solution::Solution(coefficients) => {
            let decomposition = WaringDecomposition { points: points.to_vec(), coefficients, degree: e };
            if decomposition.expand() != *f {
                return Err(Error::CertificateFailed(String::from("re-expansion differs from the form")));
            }
            Ok(WaringFit::Decomposition(decomposition))
        }
    }
}

/// Certifies `rank((x0 ·· xn)^d) = (d+1)^n`: the generator-degree lower bound
/// must reach `(d+1)^n` and an exact decomposition on `(d+1)^n` points must
/// exist. Fails rather than asserting either half.
pub fn monomial_rank_certificate(n: usize, d: u32, field: FieldSpec) -> Result<RankCertificate> {
    let points = smooth_apolar_points(n, d, field)?;
    let expected = points.len() as u64;
    let form = Form::monomial(field, Ring::Primal, Monomial::new(vec![d; n + 1]));
    if form.degree() == Some(0) || form.is_zero() {
        return Err(Error::CertificateFailed(String::from("need d >= 1")));
    }
    let lower_bound = generator_degree_bound(&form)?;
    if lower_bound.bound_exact != Ratio::from_integer(expected) {
        return Err(Error::CertificateFailed(format!(
            "lower bound {} differs from {expected}",
            lower_bound.bound_exact
        )));
    }
    let decomposition = match waring_fit(&form, &points)? {
        WaringFit::Decomposition(dec) => dec,
        WaringFit::Infeasible => {
            return Err(Error::CertificateFailed(format!("no decomposition on the {expected} grid points")))
        }
    };
    Ok(RankCertificate { n, d, field, form, lower_bound, decomposition, rank: expected })
}
