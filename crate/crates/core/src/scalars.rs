//! Exact scalars: rationals and elements of quadratic fields `Q(sqrt d)`.
//!
//! Every value carries its field, and binary operations between values of
//! different fields are rejected. The `checked_*` methods report that as an
//! error; the operator impls panic, and are meant for code that has already
//! validated its inputs (all of the linear algebra in this crate).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("invalid quadratic field parameter d = {0}: must be square-free and not 0 or 1")]
    InvalidField(i64),
    #[error("cannot parse scalar {input:?} at byte {position}: {reason}")]
    Parse {
        input: String,
        position: usize,
        reason: String,
    },
}

/// Field descriptor: either `Q` or `Q(sqrt d)` with `d` square-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Quadratic(i64),
}

impl Field {
    pub fn quadratic(d: i64) -> Result<Self, ScalarError> {
        if d == 0 || d == 1 || !is_square_free(d) {
            return Err(ScalarError::InvalidField(d));
        }
        Ok(Field::Quadratic(d))
    }

    /// `None` selects `Q`.
    pub fn from_param(d: Option<i64>) -> Result<Self, ScalarError> {
        match d {
            None => Ok(Field::Rational),
            Some(d) => Field::quadratic(d),
        }
    }

    pub fn d(&self) -> Option<i64> {
        match self {
            Field::Rational => None,
            Field::Quadratic(d) => Some(*d),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, q: Rational) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(q),
            Field::Quadratic(d) => Scalar::Quad(QuadExt {
                a: q,
                b: Rational::zero(),
                d: *d,
            }),
        }
    }

    /// `a + b*sqrt(d)`. Fails over `Q` unless `b == 0`.
    pub fn from_parts(&self, a: Rational, b: Rational) -> Result<Scalar, ScalarError> {
        match self {
            Field::Rational if b.is_zero() => Ok(Scalar::Rational(a)),
            Field::Rational => Err(ScalarError::FieldMismatch(Field::Rational, *self)),
            Field::Quadratic(d) => Ok(Scalar::Quad(QuadExt { a, b, d: *d })),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

pub fn is_square_free(n: i64) -> bool {
    let mut m = n.unsigned_abs();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Writes `n = s^2 * d` with `d` square-free and returns `(s, d)`.
pub fn square_free_decomposition(n: i64) -> (i64, i64) {
    assert!(n != 0, "square-free part of zero");
    let sign = n.signum();
    let mut m = n.unsigned_abs();
    let (mut s, mut d) = (1u64, 1u64);
    let mut p = 2u64;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= p;
        }
        p += 1;
    }
    d *= m;
    (s as i64, sign * d as i64)
}

/// `a + b*sqrt(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub d: i64,
}

impl QuadExt {
    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// `a^2 - d*b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(self.d.into()) * &self.b * &self.b
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Quad(QuadExt),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Quad(q) => Field::Quadratic(q.d),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Quad(q) => q.a.is_zero() && q.b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Quad(q) => q.a.is_one() && q.b.is_zero(),
        }
    }

    /// Rational and irrational parts `(a, b)` of `a + b*sqrt(d)`.
    pub fn parts(&self) -> (Rational, Rational) {
        match self {
            Scalar::Rational(q) => (q.clone(), Rational::zero()),
            Scalar::Quad(q) => (q.a.clone(), q.b.clone()),
        }
    }

    /// The value as a rational, if it has no irrational part.
    pub fn to_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Quad(q) if q.b.is_zero() => Some(q.a.clone()),
            Scalar::Quad(_) => None,
        }
    }

    /// Field norm down to `Q`; the square for rationals.
    pub fn norm(&self) -> Rational {
        match self {
            Scalar::Rational(q) => q * q,
            Scalar::Quad(q) => q.norm(),
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Quad(x), Scalar::Quad(y)) => Scalar::Quad(QuadExt {
                a: &x.a + &y.a,
                b: &x.b + &y.b,
                d: x.d,
            }),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Quad(x), Scalar::Quad(y)) => {
                let d = Rational::from_integer(x.d.into());
                Scalar::Quad(QuadExt {
                    a: &x.a * &y.a + d * &x.b * &y.b,
                    b: &x.a * &y.b + &x.b * &y.a,
                    d: x.d,
                })
            }
            _ => unreachable!(),
        })
    }

    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Quad(q) => {
                // d is square-free and != 1, so the norm of a nonzero element is nonzero.
                let n = q.norm();
                Scalar::Quad(QuadExt {
                    a: &q.a / &n,
                    b: -(&q.b / &n),
                    d: q.d,
                })
            }
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        self.checked_mul(&other.inverse()?)
    }

    pub fn scale(&self, q: &Rational) -> Scalar {
        match self {
            Scalar::Rational(x) => Scalar::Rational(x * q),
            Scalar::Quad(x) => Scalar::Quad(QuadExt {
                a: &x.a * q,
                b: &x.b * q,
                d: x.d,
            }),
        }
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Parses the canonical text form into the given field.
    ///
    /// Grammar: `[-]p[/q]` or `[-]p[/q]+[-]r[/s]*w`, where `w` stands for
    /// `sqrt(d)`. No whitespace is accepted.
    pub fn parse(text: &str, field: Field) -> Result<Scalar, ScalarError> {
        let err = |position: usize, reason: &str| ScalarError::Parse {
            input: text.to_string(),
            position,
            reason: reason.to_string(),
        };
        if let Some(body) = text.strip_suffix("*w") {
            let plus = body
                .find('+')
                .ok_or_else(|| err(0, "expected `+` before the `*w` term"))?;
            let a = parse_rational(&body[..plus], 0).map_err(|(p, r)| err(p, r))?;
            let b = parse_rational(&body[plus + 1..], plus + 1).map_err(|(p, r)| err(p, r))?;
            match field {
                Field::Rational => Err(err(plus + 1, "`w` term requires a quadratic field (d)")),
                Field::Quadratic(d) => Ok(Scalar::Quad(QuadExt { a, b, d })),
            }
        } else {
            let a = parse_rational(text, 0).map_err(|(p, r)| err(p, r))?;
            Ok(field.from_rational(a))
        }
    }
}

fn parse_rational(s: &str, offset: usize) -> Result<Rational, (usize, &'static str)> {
    let bytes = s.as_bytes();
    let mut i = 0;
    let negative = bytes.first() == Some(&b'-');
    if negative {
        i += 1;
    }
    let digits = |from: usize| {
        let n = bytes[from..]
            .iter()
            .take_while(|b| b.is_ascii_digit())
            .count();
        (from, from + n)
    };
    let (ns, ne) = digits(i);
    if ns == ne {
        return Err((offset + ns, "expected digits"));
    }
    let num: BigInt = s[ns..ne].parse().expect("ascii digits");
    let den: BigInt = if ne == bytes.len() {
        BigInt::one()
    } else if bytes[ne] == b'/' {
        let (ds, de) = digits(ne + 1);
        if ds == de {
            return Err((offset + ds, "expected denominator digits"));
        }
        if de != bytes.len() {
            return Err((offset + de, "unexpected character"));
        }
        let den: BigInt = s[ds..de].parse().expect("ascii digits");
        if den.is_zero() {
            return Err((offset + ds, "zero denominator"));
        }
        den
    } else {
        return Err((offset + ne, "unexpected character"));
    };
    let q = Rational::new(num, den);
    Ok(if negative { -q } else { q })
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Quad(q) if q.b.is_zero() => write!(f, "{}", q.a),
            Scalar::Quad(q) => write!(f, "{}+{}*w", q.a, q.b),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Quad(q) => Scalar::Quad(QuadExt {
                a: -q.a.clone(),
                b: -q.b.clone(),
                d: q.d,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! panicking_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $tr<Scalar> for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }

        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;

            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

panicking_op!(Add, add, checked_add);
panicking_op!(Sub, sub, checked_sub);
panicking_op!(Mul, mul, checked_mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}
