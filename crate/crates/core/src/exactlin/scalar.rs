//! Exact field elements: arbitrary-precision rationals or residues modulo a prime `p > 3`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::LinAlgError;

/// The ground field a computation runs over.
///
/// Callers never see a type parameter for the field; the choice is carried at
/// runtime by every [`Scalar`] and by the containers built from them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u32),
}

impl Field {
    /// The prime field of characteristic `p`. Characteristics 2 and 3 are rejected.
    pub fn prime(p: u64) -> Result<Field, LinAlgError> {
        if p == 2 || p == 3 {
            return Err(LinAlgError::UnsupportedCharacteristic(p));
        }
        if p > u32::MAX as u64 / 2 || !is_prime(p) {
            return Err(LinAlgError::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    /// `0` selects the rationals, anything else must be a prime larger than 3.
    pub fn from_characteristic(c: u64) -> Result<Field, LinAlgError> {
        if c == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(c)
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p as u64,
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
            Field::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// `num / den` as an element of this field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar, LinAlgError> {
        if den.is_zero() {
            return Err(LinAlgError::ZeroDenominator);
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let n = reduce_bigint(num, p);
                let d = reduce_bigint(den, p);
                if d == 0 {
                    return Err(LinAlgError::NonInvertibleDenominator(p as u64));
                }
                let n = Scalar::Modular { value: n, modulus: p };
                let d = Scalar::Modular { value: d, modulus: p };
                Ok(&n / &d)
            }
        }
    }

    /// Parses an integer `n` or a fraction `n/d` into this field.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, LinAlgError> {
        let bad = || LinAlgError::BadNumber(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        self.from_ratio(&num, &den)
    }

    /// Maps a scalar into this field. Rationals reduce modulo `p`; residues
    /// only convert into their own field.
    pub fn convert(self, s: &Scalar) -> Result<Scalar, LinAlgError> {
        match (s, self) {
            (Scalar::Rational(q), _) => self.from_ratio(q.numer(), q.denom()),
            (Scalar::Modular { modulus, .. }, Field::Prime(p)) if *modulus == p => Ok(s.clone()),
            _ => Err(LinAlgError::FieldMismatch),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_bigint(n: &BigInt, p: u32) -> u32 {
    let m = BigInt::from(p);
    let r = ((n % &m) + &m) % &m;
    r.to_u32().expect("residue fits in u32")
}

/// An exact scalar in canonical form: reduced fraction with positive
/// denominator, or a residue in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    /// `self -= c * x`, the inner step of every elimination loop.
    pub fn sub_mul(&mut self, c: &Scalar, x: &Scalar) {
        match (&mut *self, c, x) {
            (
                Scalar::Modular { value, modulus },
                Scalar::Modular { value: a, .. },
                Scalar::Modular { value: b, .. },
            ) => {
                let p = *modulus as u64;
                let prod = (*a as u64 * *b as u64) % p;
                *value = ((*value as u64 + p - prod) % p) as u32;
            }
            _ => {
                let prod = c * x;
                *self -= &prod;
            }
        }
    }

    /// Numerator and denominator as integers; residues report themselves over 1.
    pub fn to_ratio(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rational(q) => (q.numer().clone(), q.denom().clone()),
            Scalar::Modular { value, .. } => (BigInt::from(*value), BigInt::one()),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

fn same_modulus(a: u32, b: u32) -> u64 {
    assert_eq!(a, b, "scalars from different prime fields");
    a as u64
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => {
                let m = same_modulus(*p, *q);
                Scalar::Modular {
                    value: ((*a as u64 + *b as u64) % m) as u32,
                    modulus: *p,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => {
                let m = same_modulus(*p, *q);
                Scalar::Modular {
                    value: ((*a as u64 + m - *b as u64) % m) as u32,
                    modulus: *p,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) => {
                let m = same_modulus(*p, *q);
                Scalar::Modular {
                    value: ((*a as u64 * *b as u64) % m) as u32,
                    modulus: *p,
                }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a Scalar) -> Scalar {
        let inv = rhs.inverse().expect("division by zero");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl<'a> AddAssign<&'a Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &'a Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl<'a> SubAssign<&'a Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &'a Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

/// Sign `(-1)^k` for small integers, as a scalar.
pub fn sign(field: Field, negative: bool) -> Scalar {
    if negative {
        field.from_i64(-1)
    } else {
        field.one()
    }
}
