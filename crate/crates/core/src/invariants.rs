//! Killing form, trace invariants and the two invariant sextics.
//!
//! On the Cartan plane the sextics are the root products
//! `psi_long = prod_{a long} a` and `psi_short = prod_{a short} a`. Both are
//! W-invariant, so each has a unique G-invariant extension to g2, and the
//! degree-6 invariants are spanned by `kappa(x,x)^3` and `T6(x) = tr((ad x)^6)`.
//! The extensions `Phi = a kappa^3 + b T6` are found by solving a 2x2 system
//! at two Cartan points and then checked at further points.

use num_traits::Zero;
use serde::Serialize;

use crate::chevalley::{Element, LieAlgebra, DIM};
use crate::error::{Error, Result};
use crate::forms::BinaryForm;
use crate::linalg::Matrix;
use crate::rootsystem::{LengthClass, RootSystem};
use crate::scalars::{Field, Rational, Scalar};

/// Cartan points `(u, v)` used to solve for the extension coefficients.
pub const SOLVE_POINTS: [(i64, i64); 2] = [(1, 0), (0, 1)];

/// Independent Cartan points on which the solved extension is re-checked.
pub const CHECK_POINTS: [(i64, i64); 8] = [
    (1, 1),
    (1, -1),
    (3, 1),
    (1, 2),
    (2, -3),
    (1, 3),
    (5, 7),
    (-4, 9),
];

/// `kappa(x, y) = tr(ad x ad y)`, stored as its Gram matrix over `Q`.
#[derive(Debug, Clone)]
pub struct KillingForm {
    gram: Matrix,
}

impl KillingForm {
    pub fn compute(algebra: &LieAlgebra) -> Self {
        let f = Field::Rational;
        let ads: Vec<Matrix> = (0..DIM)
            .map(|i| algebra.ad_matrix(&Element::basis(f, i)))
            .collect();
        let mut gram = Matrix::zeros(DIM, DIM, f);
        for i in 0..DIM {
            for j in i..DIM {
                let v = ads[i].mul(&ads[j]).trace();
                gram.set(i, j, v.clone());
                gram.set(j, i, v);
            }
        }
        KillingForm { gram }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.gram
            .get(i, j)
            .to_rational()
            .expect("rational Gram matrix")
    }

    pub fn eval(&self, x: &Element, y: &Element) -> Result<Scalar> {
        if x.field() != y.field() {
            return Err(crate::scalars::ScalarError::FieldMismatch(x.field(), y.field()).into());
        }
        let mut acc = x.field().zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                let g = self.entry(i, j);
                if g.is_zero() || yj.is_zero() {
                    continue;
                }
                acc += &(xi * yj).scale(&g);
            }
        }
        Ok(acc)
    }

    /// The form restricted to the Cartan plane, in the `(h_1, h_2)` basis.
    pub fn cartan_gram(&self) -> [[Rational; 2]; 2] {
        [
            [self.entry(0, 0), self.entry(0, 1)],
            [self.entry(1, 0), self.entry(1, 1)],
        ]
    }

    /// `kappa(h, h)` on the Cartan plane as a binary quadratic form.
    pub fn cartan_quadric(&self) -> BinaryForm {
        let g = self.cartan_gram();
        BinaryForm::new(vec![g[0][0].clone(), &g[0][1] + &g[1][0], g[1][1].clone()])
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.gram.determinant().is_zero()
    }
}

/// Coefficients with `Phi_long = a_long kappa^3 + b_long T6` and likewise
/// for the short sextic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionCoeffs {
    #[serde(serialize_with = "ser_rational")]
    pub a_long: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub b_long: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub a_short: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub b_short: Rational,
}

pub(crate) fn ser_rational<S: serde::Serializer>(
    q: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantValues {
    pub kappa: Scalar,
    pub t4: Scalar,
    pub t6: Scalar,
    pub phi_long: Scalar,
    pub phi_short: Scalar,
}

/// Killing form plus the solved sextic extensions; everything the
/// classifier evaluates.
#[derive(Debug, Clone)]
pub struct Invariants {
    killing: KillingForm,
    coeffs: ExtensionCoeffs,
    psi_long: BinaryForm,
    psi_short: BinaryForm,
}

impl Invariants {
    pub fn derive(algebra: &LieAlgebra) -> Result<Self> {
        let killing = KillingForm::compute(algebra);
        let rs = algebra.root_system();
        let psi_long = psi_form(rs, LengthClass::Long);
        let psi_short = psi_form(rs, LengthClass::Short);
        let coeffs = derive_extension_coeffs(algebra, &killing, &psi_long, &psi_short)?;
        let inv = Invariants {
            killing,
            coeffs,
            psi_long,
            psi_short,
        };
        for &(u, v) in &CHECK_POINTS {
            let h = cartan_point(u, v);
            let values = inv.eval(algebra, &h)?;
            let (pl, ps) = inv.psi_at(&h);
            if values.phi_long != pl || values.phi_short != ps {
                return Err(Error::Consistency(format!(
                    "sextic extension disagrees with the root product at ({u}:{v})"
                )));
            }
        }
        Ok(inv)
    }

    pub fn killing(&self) -> &KillingForm {
        &self.killing
    }

    pub fn coeffs(&self) -> &ExtensionCoeffs {
        &self.coeffs
    }

    pub fn psi_long_form(&self) -> &BinaryForm {
        &self.psi_long
    }

    pub fn psi_short_form(&self) -> &BinaryForm {
        &self.psi_short
    }

    /// `(psi_long(h), psi_short(h))` for a Cartan element, by the product formula.
    pub fn psi_at(&self, h: &Element) -> (Scalar, Scalar) {
        let [u, v] = h.cartan_part();
        (self.psi_long.eval(&u, &v), self.psi_short.eval(&u, &v))
    }

    pub fn kappa_at_point(&self, u: &Scalar, v: &Scalar) -> Scalar {
        self.killing.cartan_quadric().eval(u, v)
    }

    /// `kappa(x,x)`, `T4`, `T6` and both sextics.
    pub fn eval(&self, algebra: &LieAlgebra, x: &Element) -> Result<InvariantValues> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let ad = algebra.ad_matrix(x);
        let ad2 = ad.mul(&ad);
        let ad4 = ad2.mul(&ad2);
        let kappa = ad2.trace();
        let t4 = ad4.trace();
        let t6 = ad4.mul(&ad2).trace();
        let kappa3 = kappa.pow(3);
        let phi = |a: &Rational, b: &Rational| kappa3.scale(a) + t6.scale(b);
        let phi_long = phi(&self.coeffs.a_long, &self.coeffs.b_long);
        let phi_short = phi(&self.coeffs.a_short, &self.coeffs.b_short);
        if x.is_cartan() {
            // Fast path and extension must agree on the Cartan plane.
            let (pl, ps) = self.psi_at(x);
            if pl != phi_long || ps != phi_short {
                return Err(Error::Consistency(format!(
                    "sextic extension disagrees with the root product at {x:?}"
                )));
            }
        }
        Ok(InvariantValues {
            kappa,
            t4,
            t6,
            phi_long,
            phi_short,
        })
    }

    /// The Cartan element `t_gamma` with `kappa(t_gamma, h) = gamma(h)`.
    pub fn killing_dual(&self, rs: &RootSystem, root_index: usize) -> Element {
        let g = self.killing.cartan_gram();
        let [g1, g2] = rs.cartan_values(rs.root(root_index));
        let rhs = [
            Rational::from_integer(g1.into()),
            Rational::from_integer(g2.into()),
        ];
        let det = &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0];
        let u = (&g[1][1] * &rhs[0] - &g[0][1] * &rhs[1]) / &det;
        let v = (&g[0][0] * &rhs[1] - &g[1][0] * &rhs[0]) / &det;
        let f = Field::Rational;
        Element::cartan(f.from_rational(u), f.from_rational(v)).expect("two rational coordinates")
    }
}

/// `tr((ad x)^k)`.
pub fn trace_power(algebra: &LieAlgebra, x: &Element, k: u32) -> Scalar {
    assert!(k >= 1, "trace_power needs k >= 1");
    algebra.ad_matrix(x).pow(k).trace()
}

/// Product of the roots of one length class, as a form on the Cartan plane.
pub fn psi_form(rs: &RootSystem, class: LengthClass) -> BinaryForm {
    let mut acc = BinaryForm::constant(Rational::from_integer(1.into()));
    for i in (0..rs.len()).filter(|&i| rs.length_class(i) == class) {
        let [a, b] = rs.cartan_values(rs.root(i));
        acc = &acc * &BinaryForm::linear(a, b);
    }
    acc
}

/// Product of the positive roots of one length class.
pub fn positive_product_form(rs: &RootSystem, class: LengthClass) -> BinaryForm {
    let mut acc = BinaryForm::constant(Rational::from_integer(1.into()));
    for i in (0..rs.len() / 2).filter(|&i| rs.length_class(i) == class) {
        let [a, b] = rs.cartan_values(rs.root(i));
        acc = &acc * &BinaryForm::linear(a, b);
    }
    acc
}

pub fn cartan_point(u: i64, v: i64) -> Element {
    let f = Field::Rational;
    Element::cartan(f.from_int(u), f.from_int(v)).expect("rational Cartan point")
}

fn derive_extension_coeffs(
    algebra: &LieAlgebra,
    killing: &KillingForm,
    psi_long: &BinaryForm,
    psi_short: &BinaryForm,
) -> Result<ExtensionCoeffs> {
    let rational = |s: Scalar| s.to_rational().expect("rational invariant");
    let mut rows = Vec::new();
    for &(u, v) in &SOLVE_POINTS {
        let h = cartan_point(u, v);
        let k = rational(killing.eval(&h, &h)?);
        let t6 = rational(trace_power(algebra, &h, 6));
        let [hu, hv] = h.cartan_part();
        rows.push((
            k.pow(3),
            t6,
            rational(psi_long.eval(&hu, &hv)),
            rational(psi_short.eval(&hu, &hv)),
        ));
    }
    let (m00, m01, l0, s0) = &rows[0];
    let (m10, m11, l1, s1) = &rows[1];
    let det = m00 * m11 - m01 * m10;
    if det.is_zero() {
        return Err(Error::Consistency(
            "kappa^3 and T6 are dependent on the Cartan sample points".into(),
        ));
    }
    let solve =
        |r0: &Rational, r1: &Rational| ((m11 * r0 - m01 * r1) / &det, (m00 * r1 - m10 * r0) / &det);
    let (a_long, b_long) = solve(l0, l1);
    let (a_short, b_short) = solve(s0, s1);
    Ok(ExtensionCoeffs {
        a_long,
        b_long,
        a_short,
        b_short,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::RANK;

    fn setup() -> (LieAlgebra, Invariants) {
        let g = LieAlgebra::build().unwrap();
        let inv = Invariants::derive(&g).unwrap();
        (g, inv)
    }

    #[test]
    fn killing_is_trace_form() {
        let (g, inv) = setup();
        let f = Field::Rational;
        let ea2 = Element::root_vector(f, 1);
        assert!(inv.killing().eval(&ea2, &ea2).unwrap().is_zero());
        let rs = g.root_system();
        // Cartan block: sum over roots of gamma(h_i) gamma(h_j).
        for i in 0..RANK {
            for j in 0..RANK {
                let expected: i64 = rs
                    .roots()
                    .iter()
                    .map(|r| rs.cartan_values(*r)[i] * rs.cartan_values(*r)[j])
                    .sum();
                assert_eq!(
                    inv.killing().entry(i, j),
                    Rational::from_integer(expected.into())
                );
            }
        }
        assert!(inv.killing().is_nondegenerate());
    }

    #[test]
    fn trace_powers_on_cartan() {
        let (g, inv) = setup();
        let rs = g.root_system();
        let h1 = cartan_point(1, 0);
        assert!(trace_power(&g, &h1, 3).is_zero());
        let h = cartan_point(2, -5);
        assert_eq!(trace_power(&g, &h, 2), inv.killing().eval(&h, &h).unwrap());
        let t6: i64 = rs
            .roots()
            .iter()
            .map(|r| {
                let [a, b] = rs.cartan_values(*r);
                (2 * a - 5 * b).pow(6)
            })
            .sum();
        assert_eq!(trace_power(&g, &h, 6), Field::Rational.from_int(t6));
    }

    #[test]
    fn extension_restricts_to_root_products_as_forms() {
        let (_, inv) = setup();
        let c = inv.coeffs();
        let q = inv.killing().cartan_quadric();
        let g = LieAlgebra::build().unwrap();
        let rs = g.root_system();
        let mut t6 = BinaryForm::new(vec![Rational::zero(); 7]);
        for r in rs.roots() {
            let [a, b] = rs.cartan_values(*r);
            t6 = &t6 + &BinaryForm::linear(a, b).pow(6);
        }
        let q3 = q.pow(3);
        assert_eq!(
            &q3.scale(&c.a_long) + &t6.scale(&c.b_long),
            *inv.psi_long_form()
        );
        assert_eq!(
            &q3.scale(&c.a_short) + &t6.scale(&c.b_short),
            *inv.psi_short_form()
        );
    }

    #[test]
    fn sextics_vanish_on_root_vectors() {
        let (g, inv) = setup();
        for r in 0..12 {
            let e = Element::root_vector(Field::Rational, r);
            let v = inv.eval(&g, &e).unwrap();
            assert!(v.phi_long.is_zero() && v.phi_short.is_zero() && v.kappa.is_zero());
        }
    }

    #[test]
    fn duals_of_roots() {
        let (g, inv) = setup();
        let rs = g.root_system();
        for i in 0..12 {
            let t = inv.killing_dual(rs, i);
            // kappa(t_gamma, h_j) = gamma(h_j)
            for j in 0..RANK {
                let hj = Element::basis(Field::Rational, j);
                assert_eq!(
                    inv.killing().eval(&t, &hj).unwrap(),
                    Field::Rational.from_int(rs.cartan_values(rs.root(i))[j])
                );
            }
            let (pl, ps) = inv.psi_at(&t);
            match rs.length_class(i) {
                LengthClass::Short => assert!(pl.is_zero() && !ps.is_zero()),
                LengthClass::Long => assert!(ps.is_zero() && !pl.is_zero()),
            }
        }
        // t_{a2} is proportional to the coroot h_2 (a2 is long, coroot (0, 1)).
        let t = inv.killing_dual(rs, 1);
        assert!(t.coord(0).is_zero() && !t.coord(1).is_zero());
    }

    #[test]
    fn zero_element_rejected() {
        let (g, inv) = setup();
        assert_eq!(
            inv.eval(&g, &Element::zero(Field::Rational)),
            Err(Error::ZeroElement)
        );
    }
}
