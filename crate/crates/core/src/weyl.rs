//! The Weyl group of G2 (dihedral of order 12) acting on the Cartan plane
//! and on its projective line.
//!
//! Matrices act on Cartan coordinates `(u, v)` of `u h_1 + v h_2`; the
//! matching action on roots is `(w g)(w h) = g(h)`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::chevalley::Element;
use crate::error::{Error, Result};
use crate::invariants::{Invariants, KillingForm};
use crate::rootsystem::{reflect, RootSystem, CARTAN_MATRIX};
use crate::scalars::{square_free_decomposition, Field, Rational, Scalar, ScalarError};

pub const WEYL_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeylElement {
    /// Columns are the images of `h_1`, `h_2`.
    pub matrix: [[i64; 2]; 2],
    /// `root_permutation[r]` is the index of `w(root r)`.
    pub root_permutation: Vec<usize>,
}

impl WeylElement {
    pub fn identity(n_roots: usize) -> Self {
        WeylElement {
            matrix: [[1, 0], [0, 1]],
            root_permutation: (0..n_roots).collect(),
        }
    }

    /// Simple reflection `s_i`.
    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        let mut matrix = [[0i64; 2]; 2];
        for j in 0..2 {
            // s_i(h_j) = h_j - a_i(h_j) h_i
            matrix[j][j] += 1;
            matrix[i][j] -= CARTAN_MATRIX[i][j];
        }
        let root_permutation = rs
            .roots()
            .iter()
            .map(|&g| {
                rs.index_of(reflect(g, i))
                    .expect("reflection permutes roots")
            })
            .collect();
        WeylElement {
            matrix,
            root_permutation,
        }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut matrix = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                matrix[i][j] = (0..2).map(|k| self.matrix[i][k] * other.matrix[k][j]).sum();
            }
        }
        let root_permutation = other
            .root_permutation
            .iter()
            .map(|&r| self.root_permutation[r])
            .collect();
        WeylElement {
            matrix,
            root_permutation,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == [[1, 0], [0, 1]]
    }

    pub fn is_minus_identity(&self) -> bool {
        self.matrix == [[-1, 0], [0, -1]]
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
            assert!(k <= WEYL_ORDER, "element order exceeds the group order");
        }
        k
    }

    pub fn apply(&self, u: &Scalar, v: &Scalar) -> (Scalar, Scalar) {
        let f = u.field();
        let m = |i: usize, j: usize| f.from_int(self.matrix[i][j]);
        (&m(0, 0) * u + &m(0, 1) * v, &m(1, 0) * u + &m(1, 1) * v)
    }

    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        let (u, v) = self.apply(&p.u, &p.v);
        ProjPoint { u, v }
    }

    /// Action on a Cartan element; `None` for non-Cartan input.
    pub fn apply_element(&self, x: &Element) -> Option<Element> {
        if !x.is_cartan() {
            return None;
        }
        let [u, v] = x.cartan_part();
        let (u, v) = self.apply(&u, &v);
        Element::cartan(u, v).ok()
    }
}

/// A point `(u : v)` of the projective Cartan line.
#[derive(Debug, Clone)]
pub struct ProjPoint {
    u: Scalar,
    v: Scalar,
}

impl ProjPoint {
    pub fn new(u: Scalar, v: Scalar) -> Result<Self> {
        if u.field() != v.field() {
            return Err(ScalarError::FieldMismatch(u.field(), v.field()).into());
        }
        if u.is_zero() && v.is_zero() {
            return Err(Error::ZeroPoint);
        }
        Ok(ProjPoint { u, v })
    }

    pub fn from_ints(u: i64, v: i64) -> Result<Self> {
        let f = Field::Rational;
        ProjPoint::new(f.from_int(u), f.from_int(v))
    }

    /// Parses `"u:v"`, each coordinate in the scalar grammar.
    pub fn parse(text: &str, field: Field) -> Result<Self> {
        let (u, v) = text
            .split_once(':')
            .ok_or_else(|| Error::MalformedPoint(text.to_string()))?;
        ProjPoint::new(Scalar::parse(u, field)?, Scalar::parse(v, field)?)
    }

    /// The line through a nonzero Cartan element.
    pub fn from_element(x: &Element) -> Result<Self> {
        if !x.is_cartan() {
            return Err(Error::NotCartan);
        }
        let [u, v] = x.cartan_part();
        ProjPoint::new(u, v)
    }

    pub fn coords(&self) -> (&Scalar, &Scalar) {
        (&self.u, &self.v)
    }

    pub fn field(&self) -> Field {
        self.u.field()
    }

    pub fn to_element(&self) -> Element {
        Element::cartan(self.u.clone(), self.v.clone()).expect("same-field coordinates")
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        self.field() == other.field() && &self.u * &other.v == &self.v * &other.u
    }
}

impl Eq for ProjPoint {}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.u, self.v)
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Special W-orbits on the projective Cartan line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PointClass {
    /// Zeros of `psi_long`: lines through duals of short roots.
    #[serde(rename = "O_l")]
    OLong,
    /// Zeros of `psi_short`: lines through duals of long roots.
    #[serde(rename = "O_s")]
    OShort,
    /// Isotropic lines of the Killing form.
    #[serde(rename = "O_r")]
    ORegular,
    #[serde(rename = "generic")]
    Generic,
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PointClass::OLong => "O_l",
            PointClass::OShort => "O_s",
            PointClass::ORegular => "O_r",
            PointClass::Generic => "generic",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub points: Vec<ProjPoint>,
    pub length: usize,
    pub stabilizer: Vec<WeylElement>,
    pub stabilizer_order: usize,
    pub stabilizer_cyclic: bool,
    pub point_class: PointClass,
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    table: Vec<Vec<usize>>,
}

impl WeylGroup {
    /// Closure of the two simple reflections, in breadth-first word order.
    pub fn generate(rs: &RootSystem) -> Result<Self> {
        let gens = [
            WeylElement::simple_reflection(rs, 0),
            WeylElement::simple_reflection(rs, 1),
        ];
        let mut elements = vec![WeylElement::identity(rs.len())];
        let mut next = 0;
        while next < elements.len() {
            for g in &gens {
                let w = g.compose(&elements[next]);
                if !elements.contains(&w) {
                    elements.push(w);
                    if elements.len() > WEYL_ORDER {
                        return Err(Error::Consistency(
                            "Weyl group closure exceeds 12 elements".into(),
                        ));
                    }
                }
            }
            next += 1;
        }
        let index = |w: &WeylElement| elements.iter().position(|x| x == w);
        let mut table = vec![vec![0; elements.len()]; elements.len()];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                table[i][j] = index(&a.compose(b)).ok_or_else(|| {
                    Error::Consistency("Weyl group not closed under composition".into())
                })?;
            }
        }
        Ok(WeylGroup { elements, table })
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    /// Index of `elements[i] * elements[j]`.
    pub fn multiply(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| (0..self.order()).all(|j| self.table[i][j] == self.table[j][i]))
            .collect()
    }

    /// Sorted multiset of element orders.
    pub fn order_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements.iter().map(WeylElement::order).collect();
        v.sort_unstable();
        v
    }

    /// Elements acting trivially on the projective line (scalar matrices).
    pub fn projective_kernel(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| {
                let m = self.elements[i].matrix;
                m[0][1] == 0 && m[1][0] == 0 && m[0][0] == m[1][1]
            })
            .collect()
    }

    /// A fixed element of order 6, the rotation `s_1 s_2`.
    pub fn rotation(&self, rs: &RootSystem) -> WeylElement {
        WeylElement::simple_reflection(rs, 0).compose(&WeylElement::simple_reflection(rs, 1))
    }

    pub fn stabilizer_of_point(&self, p: &ProjPoint) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| self.elements[i].apply_point(p) == *p)
            .collect()
    }

    pub fn orbit_points(&self, p: &ProjPoint) -> Vec<ProjPoint> {
        let mut out: Vec<ProjPoint> = Vec::new();
        for w in &self.elements {
            let q = w.apply_point(p);
            if !out.contains(&q) {
                out.push(q);
            }
        }
        out
    }

    pub fn is_cyclic_subgroup(&self, subgroup: &[usize]) -> bool {
        subgroup
            .iter()
            .any(|&i| self.elements[i].order() == subgroup.len())
    }

    pub fn orbit_of_point(&self, inv: &Invariants, p: &ProjPoint) -> OrbitReport {
        let points = self.orbit_points(p);
        let stab = self.stabilizer_of_point(p);
        OrbitReport {
            length: points.len(),
            points,
            stabilizer_order: stab.len(),
            stabilizer_cyclic: self.is_cyclic_subgroup(&stab),
            stabilizer: stab.iter().map(|&i| self.elements[i].clone()).collect(),
            point_class: classify_point(inv, p),
        }
    }
}

/// Which special orbit (if any) contains `p`.
pub fn classify_point(inv: &Invariants, p: &ProjPoint) -> PointClass {
    let (u, v) = p.coords();
    if inv.psi_long_form().eval(u, v).is_zero() {
        PointClass::OLong
    } else if inv.psi_short_form().eval(u, v).is_zero() {
        PointClass::OShort
    } else if inv.kappa_at_point(u, v).is_zero() {
        PointClass::ORegular
    } else {
        PointClass::Generic
    }
}

/// The two isotropic lines of the Killing form on the Cartan plane, over the
/// quadratic field they require.
pub fn isotropic_points(killing: &KillingForm) -> Result<(Field, [ProjPoint; 2])> {
    let g = killing.cartan_gram();
    let (a, b, c) = (&g[0][0], &g[0][1], &g[1][1]);
    // a u^2 + 2 b uv + c v^2 = 0
    let disc = b * b - a * c;
    if a == &Rational::from_integer(0.into()) {
        let f = Field::Rational;
        let p = ProjPoint::new(f.one(), f.zero())?;
        let q = ProjPoint::new(
            f.from_rational(c.clone()),
            f.from_rational(-(b * Rational::from_integer(2.into()))),
        )?;
        return Ok((f, [p, q]));
    }
    // sqrt(n/m) = sqrt(n m) / m
    let (n, m) = (disc.numer().clone(), disc.denom().clone());
    let nm: i64 = (n * &m)
        .try_into()
        .map_err(|_| Error::Consistency("Killing discriminant out of range".into()))?;
    let m: i64 = m
        .try_into()
        .map_err(|_| Error::Consistency("Killing discriminant out of range".into()))?;
    if nm == 0 {
        return Err(Error::Consistency(
            "Killing form degenerate on the Cartan plane".into(),
        ));
    }
    let (s, d) = square_free_decomposition(nm);
    let root_coeff = Rational::new(s.into(), m.into());
    let (field, plus, minus) = if d == 1 {
        let f = Field::Rational;
        (
            f,
            f.from_rational(-b + &root_coeff),
            f.from_rational(-b - &root_coeff),
        )
    } else {
        let f = Field::quadratic(d)?;
        (
            f,
            f.from_parts(-b.clone(), root_coeff.clone())?,
            f.from_parts(-b.clone(), -root_coeff)?,
        )
    };
    let v = field.from_rational(a.clone());
    Ok((
        field,
        [ProjPoint::new(plus, v.clone())?, ProjPoint::new(minus, v)?],
    ))
}
