//! Binary forms on the Cartan plane, in the coordinates `h = u h_1 + v h_2`.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use num_traits::{One, Zero};

use crate::scalars::{Rational, Scalar};

/// Homogeneous polynomial `sum c[i] u^(n-i) v^i` of degree `n = c.len() - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a binary form needs at least one coefficient"
        );
        BinaryForm { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    /// `a u + b v`.
    pub fn linear(a: i64, b: i64) -> Self {
        BinaryForm::new(vec![
            Rational::from_integer(a.into()),
            Rational::from_integer(b.into()),
        ])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BinaryForm::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = BinaryForm::constant(Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, u: &Scalar, v: &Scalar) -> Scalar {
        let field = u.field();
        let n = self.degree() as u32;
        let mut acc = field.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = u.pow(n - i as u32) * v.pow(i as u32);
            acc += &term.scale(c);
        }
        acc
    }
}

impl Add for &BinaryForm {
    type Output = BinaryForm;

    fn add(self, o: &BinaryForm) -> BinaryForm {
        assert_eq!(
            self.degree(),
            o.degree(),
            "adding forms of different degree"
        );
        BinaryForm::new(
            self.coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Mul for &BinaryForm {
    type Output = BinaryForm;

    fn mul(self, o: &BinaryForm) -> BinaryForm {
        let mut c = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        BinaryForm::new(c)
    }
}

impl Neg for &BinaryForm {
    type Output = BinaryForm;

    fn neg(self) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mono = match (n - i, i) {
                    (0, 0) => String::new(),
                    (a, 0) => format!("u^{a}"),
                    (0, b) => format!("v^{b}"),
                    (a, b) => format!("u^{a}v^{b}"),
                };
                format!("{c}{mono}")
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;

    #[test]
    fn product_and_eval() {
        // (u + v)(u - v) = u^2 - v^2
        let p = &BinaryForm::linear(1, 1) * &BinaryForm::linear(1, -1);
        let r = |n: i64| Rational::from_integer(n.into());
        assert_eq!(p, BinaryForm::new(vec![r(1), r(0), r(-1)]));
        let f = Field::Rational;
        assert_eq!(p.eval(&f.from_int(3), &f.from_int(2)), f.from_int(5));
    }
}
