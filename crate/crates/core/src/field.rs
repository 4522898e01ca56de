//! Exact scalars over `QQ` and prime fields `GF(p)`.
//!
//! Rationals are backed by arbitrary-precision integers and always kept in
//! lowest terms with a positive denominator. Residues mod `p` are stored in
//! `[0, p)` with `p < 2^64`; products go through `u128`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// `GF(p)`, rejecting composite `p`.
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => {
                let r = (v as i128).rem_euclid(p as i128) as u64;
                Scalar::Modular { value: r, modulus: p }
            }
        }
    }

    pub fn from_u64(&self, v: u64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => Scalar::Modular { value: v % p, modulus: p },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Modular { value: r.to_u64().expect("residue below modulus"), modulus: p }
            }
        }
    }

    pub fn from_biguint(&self, v: &BigUint) -> Scalar {
        self.from_bigint(&BigInt::from(v.clone()))
    }

    /// Maps a rational number into the field; fails in `GF(p)` when `p`
    /// divides the denominator.
    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(v.clone())),
            FieldSpec::PrimeField(_) => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                num.try_div(&den)
            }
        }
    }

    /// Smallest-residue primitive `m`-th root of unity.
    ///
    /// Over `QQ` only `m = 1, 2` exist. In `GF(p)` a root exists iff
    /// `m | p - 1`: a generator-derived root `z = g^((p-1)/m)` of exact order
    /// `m` is located by trying `g = 2, 3, ..`, then the smallest residue
    /// among the primitive roots `z^k`, `gcd(k, m) = 1`, is returned so the
    /// answer does not depend on which `g` was hit first.
    pub fn primitive_root_of_unity(&self, m: u64) -> Result<Scalar> {
        let none = Error::NoRootOfUnity { field: *self, order: m };
        if m == 0 {
            return Err(none);
        }
        if m == 1 {
            return Ok(self.one());
        }
        match *self {
            FieldSpec::Rationals => {
                if m == 2 {
                    Ok(self.from_i64(-1))
                } else {
                    Err(none)
                }
            }
            FieldSpec::PrimeField(p) => {
                if (p - 1) % m != 0 {
                    return Err(none);
                }
                let primes = prime_factors(m);
                let has_order_m = |z: u64| primes.iter().all(|q| pow_mod(z, m / q, p) != 1);
                let seed = (2..p)
                    .map(|g| pow_mod(g, (p - 1) / m, p))
                    .find(|&z| has_order_m(z))
                    .ok_or(none)?;
                let mut best = seed;
                let mut z = seed;
                for k in 2..m {
                    z = mul_mod(z, seed, p);
                    if k.gcd(&m) == 1 && z < best {
                        best = z;
                    }
                }
                Ok(Scalar::Modular { value: best, modulus: p })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("QQ"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s.strip_prefix("Fp:").ok_or_else(|| Error::Parse {
            position: 0,
            message: "expected `QQ` or `Fp:<prime>`".to_string(),
        })?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse { position: 3, message: "expected a decimal prime".to_string() });
        }
        let p: u64 = digits.parse().map_err(|_| Error::Parse {
            position: 3,
            message: "prime does not fit in 64 bits".to_string(),
        })?;
        FieldSpec::prime_field(p)
    }
}

/// An exact element of one [`FieldSpec`].
///
/// The arithmetic operators panic when the operands come from different
/// fields; use the `try_*` methods where that can happen.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// True for rationals below zero. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: add_mod(*a, *b, *modulus), modulus: *modulus }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: mul_mod(*a, *b, *modulus), modulus: *modulus }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus }
            }
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        match self {
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: pow_mod(*value, e, *modulus), modulus: *modulus }
            }
            Scalar::Rational(_) => {
                let mut base = self.clone();
                let mut acc = self.field().one();
                while e > 0 {
                    if e & 1 == 1 {
                        acc = &acc * &base;
                    }
                    base = &base * &base;
                    e >>= 1;
                }
                acc
            }
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Modular { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalars from different fields")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases cover all of `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &q in &BASES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q.saturating_mul(q) <= m {
        if m.is_multiple_of(q) {
            out.push(q);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Smallest prime `p` with `p ≡ 1 (mod m)`, i.e. the smallest prime field
/// holding a primitive `m`-th root of unity.
pub fn smallest_prime_with_root_of_unity(m: u64) -> Option<u64> {
    let m = m.max(1);
    (1u64..).map_while(|t| t.checked_mul(m)?.checked_add(1)).find(|&p| is_prime(p))
}
