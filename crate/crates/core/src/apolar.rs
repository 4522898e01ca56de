//! Catalecticant matrices and the annihilator ideal `F⊥ ⊂ S`.
//!
//! For a form `F` of degree `e`, the degree-`k` piece `(F⊥)_k` is the kernel
//! of the catalecticant `Cat_k(F)`, the matrix of `S_k → T_(e-k)`,
//! `g ↦ g ∘ F`. The Hilbert function of `S/F⊥` is `h_k = rank Cat_k(F)` and
//! its length is `Σ h_k`. Since `S_(e+1) ⊆ F⊥`, every minimal generator has
//! degree at most `e + 1`, so all of `F⊥` is determined by per-degree linear
//! algebra in degrees `0..=e+1`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{sparsify, EchelonSpan, Matrix, SparseVector};
use crate::poly::{basis_index, monomial_basis, Form, Homogeneity, Monomial, Ring};

/// Matrix of the pairing `S_k × T_(e-k) → K` induced by `F`.
///
/// Rows are indexed by `row_basis` (degree `e - k`, ring `T`), columns by
/// `col_basis` (degree `k`, ring `S`); the entry at `(b, a)` is the
/// coefficient of `x^(a+b)` in `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalecticant {
    pub k: u32,
    pub form_degree: u32,
    pub row_basis: Vec<Monomial>,
    pub col_basis: Vec<Monomial>,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnnihilatorPiece {
    /// Basis of `(F⊥)_k` for `k <= deg F`.
    Kernel(Vec<Form>),
    /// `k > deg F`: all of `S_k` annihilates `F`.
    Everything,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub form_degree: u32,
    /// `values[k] = dim (S/F⊥)_k` for `k = 0..=e`.
    pub values: Vec<usize>,
    pub length: usize,
}

/// Homogeneous ideal of `S` given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    nvars: usize,
    field: FieldSpec,
    generators: Vec<Form>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeDegree {
    Degree(usize),
    NotStabilized,
}

impl GradedIdeal {
    /// Zero generators are dropped; every other generator must be a
    /// homogeneous dual form over `field` in `nvars` variables.
    pub fn new(nvars: usize, field: FieldSpec, generators: Vec<Form>) -> Result<Self> {
        let mut kept = Vec::with_capacity(generators.len());
        for g in generators {
            if g.ring() != Ring::Dual {
                return Err(Error::RingMismatch);
            }
            if g.field() != field {
                return Err(Error::FieldMismatch(field, g.field()));
            }
            if g.nvars() != nvars {
                return Err(Error::ArityMismatch(nvars, g.nvars()));
            }
            match g.homogeneity() {
                Homogeneity::Zero => {}
                Homogeneity::Homogeneous(_) => kept.push(g),
                Homogeneity::Inhomogeneous => return Err(Error::NonHomogeneous),
            }
        }
        Ok(GradedIdeal { nvars, field, generators: kept })
    }

    pub fn zero(nvars: usize, field: FieldSpec) -> Self {
        GradedIdeal { nvars, field, generators: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generators(&self) -> &[Form] {
        &self.generators
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree().expect("homogeneous generator")).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Span of `I_k` inside the coordinates of `S_k` (basis from
    /// [`monomial_basis`]).
    pub fn graded_span(&self, k: u32) -> EchelonSpan {
        let basis = monomial_basis(self.nvars, k);
        let index = basis_index(&basis);
        let mut span = EchelonSpan::new(self.field, basis.len());
        for g in &self.generators {
            let dg = g.degree().expect("homogeneous generator");
            if dg > k {
                continue;
            }
            for m in monomial_basis(self.nvars, k - dg) {
                if span.is_full() {
                    return span;
                }
                let mut v: SparseVector = g.terms().map(|(a, c)| (index[&a.mul(&m)], c.clone())).collect();
                v.sort_by_key(|e| e.0);
                span.insert(v);
            }
        }
        span
    }

    /// Ideal membership for a homogeneous dual form.
    pub fn contains(&self, g: &Form) -> Result<bool> {
        let k = match g.homogeneity() {
            Homogeneity::Zero => return Ok(true),
            Homogeneity::Homogeneous(k) => k,
            Homogeneity::Inhomogeneous => return Err(Error::NonHomogeneous),
        };
        if g.field() != self.field {
            return Err(Error::FieldMismatch(self.field, g.field()));
        }
        if g.nvars() != self.nvars {
            return Err(Error::ArityMismatch(self.nvars, g.nvars()));
        }
        let basis = monomial_basis(self.nvars, k);
        let index = basis_index(&basis);
        let mut v: SparseVector = g.terms().map(|(a, c)| (index[a], c.clone())).collect();
        v.sort_by_key(|e| e.0);
        Ok(self.graded_span(k).contains(v))
    }
}

fn check_form(f: &Form) -> Result<u32> {
    if f.ring() != Ring::Primal {
        return Err(Error::RingMismatch);
    }
    match f.homogeneity() {
        Homogeneity::Zero => Err(Error::ZeroForm),
        Homogeneity::Homogeneous(e) => Ok(e),
        Homogeneity::Inhomogeneous => Err(Error::NonHomogeneous),
    }
}

pub fn catalecticant(f: &Form, k: u32) -> Result<Catalecticant> {
    let e = check_form(f)?;
    if k > e {
        return Err(Error::DegreeOutOfRange { k, max: e });
    }
    let n = f.nvars();
    let row_basis = monomial_basis(n, e - k);
    let col_basis = monomial_basis(n, k);
    let mut matrix = Matrix::zeros(row_basis.len(), col_basis.len(), f.field());
    {
        let rows = basis_index(&row_basis);
        for (c, coef) in f.terms() {
            for (j, a) in col_basis.iter().enumerate() {
                if let Some(b) = c.checked_div(a) {
                    matrix.set(rows[&b], j, coef.clone());
                }
            }
        }
    }
    Ok(Catalecticant { k, form_degree: e, row_basis, col_basis, matrix })
}

fn kernel_vectors(f: &Form, k: u32) -> Result<Vec<SparseVector>> {
    let cat = catalecticant(f, k)?;
    Ok(cat.matrix.kernel_basis().iter().map(|v| sparsify(v)).collect())
}

/// Basis of `(F⊥)_k`.
pub fn annihilator_graded(f: &Form, k: u32) -> Result<AnnihilatorPiece> {
    let e = check_form(f)?;
    if k > e {
        return Ok(AnnihilatorPiece::Everything);
    }
    let cat = catalecticant(f, k)?;
    let forms = cat
        .matrix
        .kernel_basis()
        .iter()
        .map(|v| Form::from_coefficients(f.nvars(), f.field(), Ring::Dual, &cat.col_basis, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(AnnihilatorPiece::Kernel(forms))
}

pub fn hilbert_function(f: &Form) -> Result<HilbertData> {
    let e = check_form(f)?;
    let values = (0..=e).map(|k| catalecticant(f, k).map(|c| c.matrix.rank())).collect::<Result<Vec<_>>>()?;
    let length = values.iter().sum();
    Ok(HilbertData { form_degree: e, values, length })
}

/// A minimal homogeneous generating set of `F⊥`.
///
/// In each degree `k = 1..=e+1`, the products `y_i · (F⊥)_(k-1)` span the
/// part of `(F⊥)_k` generated from below; basis vectors of `(F⊥)_k` that
/// extend that span are the new generators.
pub fn minimal_generators(f: &Form) -> Result<GradedIdeal> {
    let e = check_form(f)?;
    let n = f.nvars();
    let field = f.field();
    let mut generators = Vec::new();
    // (F⊥)_0 = 0 because F ≠ 0.
    let mut previous: Vec<SparseVector> = Vec::new();
    let mut previous_basis = monomial_basis(n, 0);
    for k in 1..=e + 1 {
        let basis = monomial_basis(n, k);
        let index = basis_index(&basis);
        let mut span = EchelonSpan::new(field, basis.len());
        'products: for v in &previous {
            for i in 0..n {
                if span.is_full() {
                    break 'products;
                }
                let y = Monomial::power(n, i, 1);
                let mut w: SparseVector =
                    v.iter().map(|(j, c)| (index[&previous_basis[*j].mul(&y)], c.clone())).collect();
                w.sort_by_key(|t| t.0);
                span.insert(w);
            }
        }
        let current: Vec<SparseVector> = if k <= e {
            kernel_vectors(f, k)?
        } else {
            (0..basis.len()).map(|j| alloc::vec![(j, field.one())]).collect()
        };
        for v in &current {
            if span.insert(v.clone()) {
                let terms = v.iter().map(|(j, c)| (basis[*j].clone(), c.clone()));
                generators.push(Form::from_terms(n, field, Ring::Dual, terms)?);
            }
        }
        previous = current;
        previous_basis = basis;
    }
    GradedIdeal::new(n, field, generators)
}

/// Largest degree among the generators.
pub fn max_generator_degree(ideal: &GradedIdeal) -> Result<u32> {
    ideal.degrees().into_iter().max().ok_or(Error::EmptyIdeal)
}

/// Whether `g ∘ F = 0`.
pub fn is_in_annihilator(g: &Form, f: &Form) -> Result<bool> {
    Ok(g.contract(f)?.is_zero())
}

/// Whether every generator of `ideal` annihilates `F`, i.e. `I ⊆ F⊥`.
pub fn verify_apolar_ideal(ideal: &GradedIdeal, f: &Form) -> Result<bool> {
    for g in ideal.generators() {
        if !is_in_annihilator(g, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim (S/I)_k`.
pub fn ideal_graded_dimension(ideal: &GradedIdeal, k: u32) -> usize {
    let span = ideal.graded_span(k);
    span.dim() - span.rank()
}

/// Degree of the scheme cut out by `ideal`, read off as the Hilbert function
/// value when it is constant on `k_max - 2, k_max - 1, k_max`.
pub fn scheme_degree(ideal: &GradedIdeal, k_max: u32) -> SchemeDegree {
    if k_max < 2 {
        return SchemeDegree::NotStabilized;
    }
    let h = ideal_graded_dimension(ideal, k_max);
    let stable = (k_max - 2..k_max).all(|k| ideal_graded_dimension(ideal, k) == h);
    if stable {
        SchemeDegree::Degree(h)
    } else {
        SchemeDegree::NotStabilized
    }
}
