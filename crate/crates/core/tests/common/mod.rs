#![allow(dead_code)]

use apolar_core::{monomial_basis, FieldSpec, Form, Monomial, ProjectivePoint, Ring, Scalar};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub fn random_scalar<R: Rng>(rng: &mut R, field: FieldSpec) -> Scalar {
    match field {
        FieldSpec::Rationals => {
            let n: i64 = rng.gen_range(-9..=9);
            let d: i64 = rng.gen_range(1..=4);
            Scalar::Rational(BigRational::new(n.into(), d.into()))
        }
        FieldSpec::PrimeField(p) => field.from_u64(rng.gen_range(0..p)),
    }
}

/// Dense random form of degree `e` with every coefficient drawn independently;
/// retried until nonzero.
pub fn random_form<R: Rng>(rng: &mut R, nvars: usize, e: u32, field: FieldSpec, ring: Ring) -> Form {
    loop {
        let terms = monomial_basis(nvars, e).into_iter().map(|m| (m, random_scalar(rng, field)));
        let f = Form::from_terms(nvars, field, ring, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn random_point<R: Rng>(rng: &mut R, nvars: usize, field: FieldSpec) -> ProjectivePoint {
    loop {
        let coords = (0..nvars).map(|_| random_scalar(rng, field)).collect();
        if let Ok(p) = ProjectivePoint::new(coords) {
            return p;
        }
    }
}

pub fn distinct_points<R: Rng>(rng: &mut R, count: usize, nvars: usize, field: FieldSpec) -> Vec<ProjectivePoint> {
    let mut pts: Vec<ProjectivePoint> = Vec::new();
    while pts.len() < count {
        let p = random_point(rng, nvars, field);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

/// Rank by naive Gaussian elimination on `BigRational` / `u64` rows; kept
/// separate from the library's elimination code.
pub fn oracle_rank(field: FieldSpec, mut rows: Vec<Vec<Scalar>>) -> usize {
    match field {
        FieldSpec::Rationals => {
            let mut m: Vec<Vec<BigRational>> = rows
                .drain(..)
                .map(|r| r.into_iter().map(|s| s.as_rational().unwrap().clone()).collect())
                .collect();
            let cols = m.first().map_or(0, |r| r.len());
            let mut rank = 0;
            for c in 0..cols {
                let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
                m.swap(rank, p);
                for i in rank + 1..m.len() {
                    if m[i][c].is_zero() {
                        continue;
                    }
                    let factor = &m[i][c] / &m[rank][c];
                    for j in c..cols {
                        let sub = &factor * &m[rank][j];
                        m[i][j] -= sub;
                    }
                }
                rank += 1;
            }
            rank
        }
        FieldSpec::PrimeField(p) => {
            let val = |s: &Scalar| match s {
                Scalar::Modular { value, .. } => *value as u128,
                _ => unreachable!(),
            };
            let p128 = p as u128;
            let mut m: Vec<Vec<u128>> = rows.iter().map(|r| r.iter().map(val).collect()).collect();
            let cols = m.first().map_or(0, |r| r.len());
            let mut rank = 0;
            for c in 0..cols {
                let Some(piv) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
                m.swap(rank, piv);
                let inv = modpow(m[rank][c], p128 - 2, p128);
                for i in rank + 1..m.len() {
                    let factor = m[i][c] * inv % p128;
                    for j in c..cols {
                        m[i][j] = (m[i][j] + p128 - factor * m[rank][j] % p128) % p128;
                    }
                }
                rank += 1;
            }
            rank
        }
    }
}

fn modpow(mut b: u128, mut e: u128, p: u128) -> u128 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `h_k` as the dimension of `{y^a ∘ F : |a| = k}`, computed with `contract`
/// rather than the catalecticant.
pub fn oracle_hilbert_value(f: &Form, k: u32) -> usize {
    let e = f.degree().unwrap();
    let n = f.nvars();
    let target = monomial_basis(n, e - k);
    let rows = monomial_basis(n, k)
        .into_iter()
        .map(|a| {
            let g = Form::monomial(f.field(), Ring::Dual, a);
            let h = g.contract(f).unwrap();
            target.iter().map(|b| h.coefficient(b)).collect()
        })
        .collect();
    oracle_rank(f.field(), rows)
}

/// `(I_Γ)_k` for a point set: kernel of the evaluation map `S_k → K^#points`.
pub fn point_ideal_piece(points: &[ProjectivePoint], k: u32) -> Vec<Form> {
    let n = points[0].nvars();
    let field = points[0].field();
    let basis = monomial_basis(n, k);
    let rows = points
        .iter()
        .map(|p| basis.iter().map(|m| p.eval_monomial(m)).collect())
        .collect();
    let m = apolar_core::Matrix::from_rows(field, basis.len(), rows).unwrap();
    m.kernel_basis()
        .into_iter()
        .map(|v| Form::from_coefficients(n, field, Ring::Dual, &basis, &v).unwrap())
        .collect()
}

pub fn permute(f: &Form, perm: &[usize]) -> Form {
    let terms = f.terms().map(|(m, c)| {
        let mut e = vec![0; perm.len()];
        for (i, &x) in m.exponents().iter().enumerate() {
            e[perm[i]] = x;
        }
        (Monomial::new(e), c.clone())
    });
    Form::from_terms(f.nvars(), f.field(), f.ring(), terms.collect::<Vec<_>>()).unwrap()
}

pub fn is_one(s: &Scalar) -> bool {
    match s {
        Scalar::Rational(r) => r.is_one(),
        Scalar::Modular { value, .. } => *value == 1,
    }
}
