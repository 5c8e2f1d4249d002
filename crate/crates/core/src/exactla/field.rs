use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::LinAlgError;

/// Largest prime characteristic accepted by [`Field::prime`].
pub const MAX_PRIME: u32 = 97;

/// The base field: the rationals or a prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self, LinAlgError> {
        if p < 2 || p > MAX_PRIME || !(2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            return Err(LinAlgError::UnsupportedField(p));
        }
        Ok(Field::Prime(p))
    }

    /// Builds a field from its characteristic (0 for the rationals).
    pub fn from_characteristic(c: u32) -> Result<Self, LinAlgError> {
        if c == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(c)
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Builds `num/den` in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar, LinAlgError> {
        if den == 0 {
            return Err(LinAlgError::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num.into(), den.into()))),
            Field::Prime(_) => self.from_i64(num).div(&self.from_i64(den)),
        }
    }

    /// Parses an integer literal or an `"n/d"` string.
    pub fn parse(self, text: &str) -> Result<Scalar, LinAlgError> {
        let text = text.trim();
        let bad = || LinAlgError::Parse(text.to_string());
        match text.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                self.ratio(n, d)
            }
            None => Ok(self.from_i64(text.parse().map_err(|_| bad())?)),
        }
    }

    /// Every element of a prime field, in increasing residue order.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..p as i64).map(|v| self.from_i64(v)).collect()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), LinAlgError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(LinAlgError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, LinAlgError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a + b) % modulus,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, LinAlgError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, LinAlgError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: (a * b) % modulus,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Scalar, LinAlgError> {
        if self.is_zero() {
            return Err(LinAlgError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: mod_inv(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, LinAlgError> {
        self.mul(&other.inv()?)
    }

    /// Canonical text form: an integer, or `n/d` for non-integral rationals.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Mod { value, .. } => serde_json::Value::from(*value),
            Scalar::Rational(q) if q.is_integer() => match i64::try_from(q.numer().clone()) {
                Ok(n) => serde_json::Value::from(n),
                Err(_) => serde_json::Value::from(q.to_string()),
            },
            Scalar::Rational(q) => serde_json::Value::from(q.to_string()),
        }
    }

    pub fn from_json(field: Field, value: &serde_json::Value) -> Result<Scalar, LinAlgError> {
        match value {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(|v| field.from_i64(v))
                .ok_or_else(|| LinAlgError::Parse(n.to_string())),
            serde_json::Value::String(s) => field.parse(s),
            other => Err(LinAlgError::Parse(other.to_string())),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => {
                let (n, d) = (q.numer(), q.denom());
                if n.is_negative() {
                    write!(f, "-{}/{}", -n, d)
                } else {
                    write!(f, "{n}/{d}")
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

/// Field-free wire form of a scalar; resolved against a [`Field`] after parsing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawScalar {
    Int(i64),
    Text(String),
}

impl RawScalar {
    pub fn resolve(&self, field: Field) -> Result<Scalar, LinAlgError> {
        match self {
            RawScalar::Int(n) => Ok(field.from_i64(*n)),
            RawScalar::Text(s) => field.parse(s),
        }
    }
}

impl From<&Scalar> for RawScalar {
    fn from(s: &Scalar) -> Self {
        match s.to_json() {
            serde_json::Value::Number(n) => RawScalar::Int(n.as_i64().unwrap_or_default()),
            other => RawScalar::Text(other.as_str().unwrap_or_default().to_string()),
        }
    }
}

pub(crate) fn mod_inv(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) is the inverse
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields_are_checked() {
        assert!(Field::prime(3).is_ok());
        assert!(Field::prime(97).is_ok());
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(101).is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn division_by_zero_is_rejected() {
        let f = Field::Prime(5);
        assert!(matches!(f.zero().inv(), Err(LinAlgError::DivisionByZero)));
        assert!(Field::Rational.ratio(1, 0).is_err());
    }

    #[test]
    fn inverses_mod_p() {
        for p in [2u32, 3, 5, 7, 97] {
            let f = Field::Prime(p);
            for a in 1..p as i64 {
                let x = f.from_i64(a);
                assert!(x.mul(&x.inv().unwrap()).unwrap().is_one());
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let q = Field::Rational;
        for s in ["3", "-2/7", "0", "5/3"] {
            assert_eq!(q.parse(s).unwrap().to_text(), s);
        }
        assert_eq!(Field::Prime(7).parse("3/2").unwrap().to_text(), "5");
    }

    #[test]
    fn mixing_fields_fails() {
        let a = Field::Prime(3).one();
        let b = Field::Prime(5).one();
        assert!(a.add(&b).is_err());
    }
}
