//! Exact scalar arithmetic over the rationals or a prime field.
//!
//! The ground field is chosen once per session and threaded through every
//! computation as a [`Field`] value. Elements are [`Scalar`]s; there is no
//! floating point anywhere in the crate.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The ground field of a session: exact rationals or `F_p` for a prime `p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

/// An element of the session field.
///
/// `Fp` values are always reduced modulo the session prime; mixing scalars of
/// different fields is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp(u64),
}

impl Field {
    /// Parse `"Q"`, `"F"` (default prime 10007) or `"F<p>"` / `"F:<p>"`.
    pub fn parse(text: &str) -> Result<Field> {
        let t = text.trim();
        if t == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = t.strip_prefix('F') {
            let rest = rest.trim_start_matches(':').trim();
            let p: u64 = if rest.is_empty() {
                10007
            } else {
                rest.parse()
                    .map_err(|_| Error::BadField(text.to_string()))?
            };
            return Field::prime(p);
        }
        Err(Error::BadField(text.to_string()))
    }

    /// `F_p` for a prime `p`. Rejects composites and primes too large for
    /// overflow-free `u128` products.
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::BadField(format!("F{p}")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::one()),
            Field::Prime(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from(BigInt::from(n))),
            Field::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp(r)
            }
        }
    }

    /// `num / den` as a field element. `den` must be nonzero (and invertible
    /// mod p in the prime case, which holds whenever `p ∤ den`).
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::BadScalar(format!("{num}/{den}")));
        }
        match self {
            Field::Rational => Ok(Scalar::Q(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            Field::Prime(_) => {
                let d = self.from_i64(den);
                let inv = self
                    .inv(&d)
                    .ok_or_else(|| Error::BadScalar(format!("{num}/{den} mod p")))?;
                Ok(self.mul(&self.from_i64(num), &inv))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Q(x) => x.is_zero(),
            Scalar::Fp(x) => *x == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x - y),
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + p - y) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rational, Scalar::Q(x)) => Scalar::Q(-x),
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar/field mismatch"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (Field::Rational, Scalar::Q(x)) => Some(Scalar::Q(x.recip())),
            (Field::Prime(p), Scalar::Fp(x)) => Some(Scalar::Fp(pow_mod(*x, p - 2, *p))),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let i = self.inv(b).expect("division by zero");
        self.mul(a, &i)
    }

    /// Canonical text form, used in reports and labels.
    pub fn scalar_string(&self, a: &Scalar) -> String {
        match a {
            Scalar::Q(x) => {
                if x.denom().is_one() {
                    format!("{}", x.numer())
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Fp(x) => format!("{x}"),
        }
    }

    /// True when the scalar equals the integer `n` in this field.
    pub fn is_i64(&self, a: &Scalar, n: i64) -> bool {
        *a == self.from_i64(n)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Scalar {
    /// Sign-aware display helper: `(is_negative, magnitude string)`.
    pub fn signed_string(&self, field: &Field) -> (bool, String) {
        match self {
            Scalar::Q(x) => {
                if x.is_negative() {
                    (true, field.scalar_string(&Scalar::Q(-x)))
                } else {
                    (false, field.scalar_string(self))
                }
            }
            Scalar::Fp(_) => (false, field.scalar_string(self)),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
