//! Sparse forms in `T = K[x0, .., xn]` and the dual ring `S = K[y0, .., yn]`.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vector under graded
//! lexicographic order with `x0 > x1 > .. > xn`; printing walks the map from
//! the largest monomial down.

mod parse;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

pub use parse::{max_variable_index, parse_form};

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// `x_i^e` in `nvars` variables.
    pub fn power(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `k` in `nvars` variables, largest first.
pub fn monomial_basis(nvars: usize, k: u32) -> Vec<Monomial> {
    fn fill(prefix: &mut Vec<u32>, left: usize, k: u32, out: &mut Vec<Monomial>) {
        if left == 1 {
            prefix.push(k);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=k).rev() {
            prefix.push(a);
            fill(prefix, left - 1, k - a, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if k == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    fill(&mut Vec::with_capacity(nvars), nvars, k, &mut out);
    out
}

/// Position lookup for a basis produced by [`monomial_basis`].
pub(crate) fn basis_index(basis: &[Monomial]) -> BTreeMap<&Monomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (m, i)).collect()
}

/// Which polynomial ring a form belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    /// `T`, variables `x0..xn`.
    Primal,
    /// `S`, variables `y0..yn`, acting on `T` by contraction.
    Dual,
}

impl Ring {
    pub fn variable_letter(self) -> char {
        match self {
            Ring::Primal => 'x',
            Ring::Dual => 'y',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero form has no degree.
    Zero,
    Homogeneous(u32),
    Inhomogeneous,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    nvars: usize,
    field: FieldSpec,
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
    homogeneity: Homogeneity,
}

impl Form {
    pub fn zero(nvars: usize, field: FieldSpec, ring: Ring) -> Self {
        Form { nvars, field, ring, terms: BTreeMap::new(), homogeneity: Homogeneity::Zero }
    }

    /// Builds a form from terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(nvars: usize, field: FieldSpec, ring: Ring, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::ArityMismatch(nvars, m.nvars()));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            accumulate(&mut map, m, c);
        }
        Ok(Self::from_map(nvars, field, ring, map))
    }

    fn from_map(nvars: usize, field: FieldSpec, ring: Ring, mut terms: BTreeMap<Monomial, Scalar>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let mut degrees = terms.keys().map(Monomial::degree);
        let homogeneity = match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) if degrees.all(|e| e == d) => Homogeneity::Homogeneous(d),
            Some(_) => Homogeneity::Inhomogeneous,
        };
        Form { nvars, field, ring, terms, homogeneity }
    }

    pub fn monomial(field: FieldSpec, ring: Ring, m: Monomial) -> Self {
        let nvars = m.nvars();
        Self::from_map(nvars, field, ring, BTreeMap::from([(m, field.one())]))
    }

    /// The form with coordinates `coeffs` in the ordered `basis`.
    pub fn from_coefficients(
        nvars: usize,
        field: FieldSpec,
        ring: Ring,
        basis: &[Monomial],
        coeffs: &[Scalar],
    ) -> Result<Self> {
        if basis.len() != coeffs.len() {
            return Err(Error::DimensionMismatch { expected: basis.len(), found: coeffs.len() });
        }
        Self::from_terms(nvars, field, ring, basis.iter().cloned().zip(coeffs.iter().cloned()))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn homogeneity(&self) -> Homogeneity {
        self.homogeneity
    }

    /// Degree of a nonzero homogeneous form.
    pub fn degree(&self) -> Option<u32> {
        match self.homogeneity {
            Homogeneity::Homogeneous(d) => Some(d),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn check_compatible(&self, other: &Form) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    fn check_same_ring(&self, other: &Form) -> Result<()> {
        self.check_compatible(other)?;
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        self.check_same_ring(other)?;
        let mut map = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut map, m.clone(), c.clone());
        }
        Ok(Self::from_map(self.nvars, self.field, self.ring, map))
    }

    pub fn sub(&self, other: &Form) -> Result<Form> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Form {
        self.map_coefficients(|c| -c)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Form> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch(self.field, c.field()));
        }
        Ok(self.map_coefficients(|x| x * c))
    }

    fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> Form {
        let map = self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect();
        Self::from_map(self.nvars, self.field, self.ring, map)
    }

    /// Ring product; both factors must live in the same ring.
    pub fn mul(&self, other: &Form) -> Result<Form> {
        self.check_same_ring(other)?;
        let mut map = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                accumulate(&mut map, a.mul(b), ca * cb);
            }
        }
        Ok(Self::from_map(self.nvars, self.field, self.ring, map))
    }

    /// Contraction `self ∘ f` of a dual form on a primal form.
    pub fn contract(&self, f: &Form) -> Result<Form> {
        contract(self, f)
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
    match map.get_mut(&m) {
        Some(existing) => *existing = &*existing + &c,
        None => {
            map.insert(m, c);
        }
    }
}

/// Apolarity by contraction: `y^a ∘ x^b = x^(b - a)` if `a <= b`, else 0,
/// extended bilinearly.
pub fn contract(g: &Form, f: &Form) -> Result<Form> {
    g.check_compatible(f)?;
    if g.ring != Ring::Dual || f.ring != Ring::Primal {
        return Err(Error::RingMismatch);
    }
    let mut map = BTreeMap::new();
    for (a, ca) in &g.terms {
        for (b, cb) in &f.terms {
            if let Some(q) = b.checked_div(a) {
                accumulate(&mut map, q, ca * cb);
            }
        }
    }
    Ok(Form::from_map(f.nvars, f.field, Ring::Primal, map))
}

/// Coordinates of a homogeneous form in an ordered basis of one degree.
pub fn coefficient_vector(f: &Form, basis: &[Monomial]) -> Result<Vec<Scalar>> {
    let mut out = vec![f.field.zero(); basis.len()];
    if f.is_zero() {
        return Ok(out);
    }
    let found = f.degree().ok_or(Error::NonHomogeneous)?;
    let expected = basis.first().map(Monomial::degree).unwrap_or(found);
    if found != expected || basis.is_empty() {
        return Err(Error::DegreeMismatch { expected, found });
    }
    let index = basis_index(basis);
    for (m, c) in &f.terms {
        let i = *index.get(m).ok_or(Error::DegreeMismatch { expected, found })?;
        out[i] = c.clone();
    }
    Ok(out)
}

/// A point of projective space, scaled so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        let field = coords.first().ok_or(Error::ZeroPoint)?.field();
        if let Some(bad) = coords.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?.inv()?;
        let coords = coords.iter().map(|c| c * &lead).collect();
        Ok(ProjectivePoint { coords })
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn nvars(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.coords[0].field()
    }

    /// `p^a = Π p_i^{a_i}`.
    pub fn eval_monomial(&self, m: &Monomial) -> Scalar {
        self.coords
            .iter()
            .zip(m.exponents())
            .fold(self.field().one(), |acc, (c, &e)| if e == 0 { acc } else { &acc * &c.pow(e as u64) })
    }

    /// The linear form `p0·x0 + .. + pn·xn`.
    pub fn linear_form(&self) -> Form {
        let n = self.nvars();
        let terms = self.coords.iter().enumerate().map(|(i, c)| (Monomial::power(n, i, 1), c.clone()));
        Form::from_terms(n, self.field(), Ring::Primal, terms).expect("coordinates share one field")
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn multinomial(exponents: &[u32]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0u64;
    for &a in exponents {
        for j in 1..=a as u64 {
            total += 1;
            acc = acc * total / j;
        }
    }
    acc
}

/// `(p0·x0 + .. + pn·xn)^e`, expanded with multinomial coefficients reduced
/// into the point's field as they are (no error when they vanish mod p).
pub fn linear_power(p: &ProjectivePoint, e: u32) -> Form {
    let field = p.field();
    let terms = monomial_basis(p.nvars(), e)
        .into_iter()
        .map(|m| {
            let c = &field.from_biguint(&multinomial(m.exponents())) * &p.eval_monomial(&m);
            (m, c)
        })
        .collect();
    Form::from_map(p.nvars(), field, Ring::Primal, terms)
}

/// `Σ_{|a| = e} p^a x^a`: the degree-`e` form whose annihilator under
/// contraction, in degrees up to `e`, is the ideal of the point `p`.
///
/// This is the power of a linear form that pairs with the contraction
/// action; it agrees with `linear_power` up to the multinomial weights and,
/// unlike it, never degenerates in small characteristic.
pub fn divided_power(p: &ProjectivePoint, e: u32) -> Form {
    let terms = monomial_basis(p.nvars(), e).into_iter().map(|m| {
        let c = p.eval_monomial(&m);
        (m, c)
    });
    let map = terms.collect();
    Form::from_map(p.nvars(), p.field(), Ring::Primal, map)
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let letter = self.ring.variable_letter();
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = m.degree() == 0;
            if constant || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
                if !constant {
                    f.write_str("*")?;
                }
            }
            let mut first = true;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "{letter}{i}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}
