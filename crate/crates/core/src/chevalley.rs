//! The 14-dimensional Lie algebra g2 in a Chevalley basis.
//!
//! Basis order (used by every coordinate vector in the crate and by the CLI):
//! index 0 = `h_1`, 1 = `h_2` (simple coroots), `2 + r` = `e_r` for root
//! index `r` of [`RootSystem`] (so 2..=7 are the positive root vectors in
//! height order and 8..=13 their negatives in the same order).
//!
//! Relations: `[h_i, e_g] = <g, a_i^vee> e_g`, `[e_g, e_-g] = g^vee`, and
//! `[e_a, e_b] = N_{a,b} e_{a+b}` with `N_{a,b} = +-(p+1)`. Signs are fixed by
//! taking `N = +(p+1)` on extraspecial pairs and propagating with the
//! standard identities between structure constants, plus the normalization
//! `N_{-a,-b} = -N_{a,b}`.

use std::collections::HashMap;
use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rootsystem::{Root, RootSystem};
use crate::scalars::{Field, Rational, Scalar, ScalarError};

pub const DIM: usize = 14;
pub const RANK: usize = 2;

/// Basis index of the root vector for root index `r`.
pub const fn root_basis_index(r: usize) -> usize {
    RANK + r
}

/// The matrix `ad(x): y -> [x, y]` in the standard basis.
pub type AdMatrix = Matrix;

/// A coordinate vector in the standard basis, all entries in one field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    field: Field,
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.len() != DIM {
            return Err(Error::WrongLength {
                expected: DIM,
                found: coords.len(),
            });
        }
        let field = coords[0].field();
        if let Some(bad) = coords.iter().find(|c| c.field() != field) {
            return Err(crate::scalars::ScalarError::FieldMismatch(field, bad.field()).into());
        }
        Ok(Element { field, coords })
    }

    pub fn zero(field: Field) -> Self {
        Element {
            field,
            coords: vec![field.zero(); DIM],
        }
    }

    pub fn basis(field: Field, i: usize) -> Self {
        let mut x = Self::zero(field);
        x.coords[i] = field.one();
        x
    }

    pub fn from_ints(field: Field, c: &[i64; DIM]) -> Self {
        Element {
            field,
            coords: c.iter().map(|&n| field.from_int(n)).collect(),
        }
    }

    /// `u h_1 + v h_2`.
    pub fn cartan(u: Scalar, v: Scalar) -> Result<Self> {
        let field = u.field();
        let mut coords = vec![u, v];
        coords.extend((RANK..DIM).map(|_| field.zero()));
        Element::new(coords)
    }

    /// The root vector `e_r` for root index `r`.
    pub fn root_vector(field: Field, r: usize) -> Self {
        Self::basis(field, root_basis_index(r))
    }

    /// Parses `c0,c1,...,c13` (scalar grammar of [`Scalar::parse`]).
    /// Comma-separated coordinates in basis order; spaces around commas are
    /// ignored. Parse errors report byte positions in `text`.
    pub fn parse(text: &str, field: Field) -> Result<Self> {
        let mut coords = Vec::new();
        let mut offset = 0;
        for piece in text.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            let c = Scalar::parse(piece.trim(), field).map_err(|e| match e {
                ScalarError::Parse {
                    position, reason, ..
                } => ScalarError::Parse {
                    input: text.to_string(),
                    position: offset + lead + position,
                    reason,
                },
                other => other,
            })?;
            coords.push(c);
            offset += piece.len() + 1;
        }
        Element::new(coords)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn cartan_part(&self) -> [Scalar; 2] {
        [self.coords[0].clone(), self.coords[1].clone()]
    }

    pub fn root_part(&self) -> &[Scalar] {
        &self.coords[RANK..]
    }

    pub fn is_cartan(&self) -> bool {
        self.root_part().iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element {
            field: self.field,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.same_field(other)?;
        Ok(Element {
            field: self.field,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        self.checked_add(&other.scale(&-self.field.one()))
    }

    fn same_field(&self, other: &Element) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(crate::scalars::ScalarError::FieldMismatch(self.field, other.field).into())
        }
    }

    pub fn to_csv(&self) -> String {
        self.coords
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]", self.to_csv())
    }
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

/// One nonzero structure constant: `[b_i, b_j]` has coefficient `c` on `b_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureConstant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: i64,
}

#[derive(Debug, Clone)]
pub struct LieAlgebra {
    roots: RootSystem,
    /// `table[i][j]` lists `(k, c)` with `[b_i, b_j] = sum c b_k`.
    table: Vec<Vec<Vec<(usize, i64)>>>,
}

impl LieAlgebra {
    /// Builds g2 and checks the Jacobi identity on every basis triple.
    pub fn build() -> Result<Self> {
        let roots = RootSystem::generate();
        let n = chevalley_constants(&roots)?;
        let mut table = vec![vec![Vec::new(); DIM]; DIM];
        for (r, &gamma) in roots.roots().iter().enumerate() {
            let e = root_basis_index(r);
            for i in 0..RANK {
                let c = gamma.on_coroot(i);
                if c != 0 {
                    table[i][e].push((e, c));
                    table[e][i].push((e, -c));
                }
            }
            let neg = root_basis_index(roots.negative_index(r));
            for (i, &c) in roots.coroot(gamma).iter().enumerate() {
                if c != 0 {
                    table[e][neg].push((i, c));
                }
            }
            for (s, &delta) in roots.roots().iter().enumerate() {
                if let Some(t) = roots.index_of(gamma + delta) {
                    let c = n[&(gamma, delta)];
                    table[e][root_basis_index(s)].push((root_basis_index(t), c));
                }
            }
        }
        let algebra = LieAlgebra { roots, table };
        if let Some((i, j, k)) = algebra.jacobi_violation() {
            return Err(Error::Consistency(format!(
                "Jacobi identity fails on basis triple ({i}, {j}, {k})"
            )));
        }
        Ok(algebra)
    }

    pub fn dim(&self) -> usize {
        DIM
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    /// Nonzero structure constants `[b_i, b_j]` for `i < j`, sorted.
    pub fn structure_constants(&self) -> Vec<StructureConstant> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in i + 1..DIM {
                let mut entries = self.table[i][j].clone();
                entries.sort();
                out.extend(
                    entries
                        .into_iter()
                        .map(|(k, c)| StructureConstant { i, j, k, c }),
                );
            }
        }
        out
    }

    /// `N_{a,b}` for root indices, 0 when `a + b` is not a root.
    pub fn root_constant(&self, a: usize, b: usize) -> i64 {
        let (ea, eb) = (root_basis_index(a), root_basis_index(b));
        match self.roots.index_of(self.roots.root(a) + self.roots.root(b)) {
            Some(t) => self.table[ea][eb]
                .iter()
                .find(|(k, _)| *k == root_basis_index(t))
                .map_or(0, |&(_, c)| c),
            None => 0,
        }
    }

    /// A copy with the sign of `[b_i, b_j]`'s coefficient on `b_k` flipped
    /// (and of `[b_j, b_i]`, so antisymmetry still holds).
    pub fn with_flipped_constant(&self, i: usize, j: usize, k: usize) -> Option<LieAlgebra> {
        let mut out = self.clone();
        let mut hit = false;
        for (a, b) in [(i, j), (j, i)] {
            for entry in out.table[a][b].iter_mut() {
                if entry.0 == k {
                    entry.1 = -entry.1;
                    hit = true;
                }
            }
        }
        hit.then_some(out)
    }

    fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i][j]
    }

    /// First basis triple violating Jacobi, in lexicographic order.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let mut acc = [0i64; DIM];
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    acc.fill(0);
                    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for &(m, c) in self.bracket_basis(x, y) {
                            for &(t, d) in self.bracket_basis(m, z) {
                                acc[t] += c * d;
                            }
                        }
                    }
                    if acc.iter().any(|&v| v != 0) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..DIM).all(|i| {
            (0..DIM).all(|j| {
                let mut a = self.table[i][j].clone();
                let mut b: Vec<(usize, i64)> =
                    self.table[j][i].iter().map(|&(k, c)| (k, -c)).collect();
                a.sort();
                b.sort();
                a == b
            })
        })
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        x.same_field(y)?;
        let field = x.field;
        let mut out = vec![field.zero(); DIM];
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let prod = xi * yj;
                for &(k, c) in &self.table[i][j] {
                    out[k] += &prod.scale(&Rational::from_integer(c.into()));
                }
            }
        }
        Ok(Element { field, coords: out })
    }

    pub fn ad_matrix(&self, x: &Element) -> AdMatrix {
        let field = x.field;
        let mut m = Matrix::zeros(DIM, DIM, field);
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..DIM {
                for &(k, c) in &self.table[i][j] {
                    let v = m.get(k, j) + &xi.scale(&Rational::from_integer(c.into()));
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    /// Semisimple iff the minimal polynomial of `ad x` is square-free,
    /// i.e. iff the square-free part of the characteristic polynomial
    /// already kills `ad x`.
    pub fn is_semisimple(&self, x: &Element) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let ad = self.ad_matrix(x);
        let p = ad.characteristic_polynomial();
        if p.is_square_free() {
            return Ok(true);
        }
        Ok(p.square_free_part().eval_matrix(&ad).is_zero())
    }

    /// Nilpotent iff `(ad x)^14 = 0`.
    pub fn is_nilpotent(&self, x: &Element) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let ad = self.ad_matrix(x);
        let mut p = ad.clone();
        // Squaring: (ad x)^16 = 0 iff (ad x)^14 = 0 for a 14x14 matrix.
        for _ in 0..4 {
            if p.is_zero() {
                return Ok(true);
            }
            p = p.mul(&p);
        }
        Ok(p.is_zero())
    }
}

/// `N_{a,b}` for every ordered pair of roots with `a + b` a root.
fn chevalley_constants(rs: &RootSystem) -> Result<HashMap<(Root, Root), i64>> {
    let order = |r: Root| rs.index_of(r).expect("positive root");
    let mut special: HashMap<(Root, Root), Rational> = HashMap::new();
    let r = |n: i64| Rational::from_integer(n.into());

    for &xi in rs.positive() {
        let mut pairs: Vec<(Root, Root)> = rs
            .positive()
            .iter()
            .filter_map(|&a| {
                let b = xi - a;
                (b.is_positive() && rs.contains(b) && order(a) < order(b)).then_some((a, b))
            })
            .collect();
        pairs.sort_by_key(|&(a, _)| order(a));
        let Some(&(gamma, delta)) = pairs.first() else {
            continue;
        };
        let (p, _) = rs.root_string(gamma, delta)?;
        special.insert((gamma, delta), r(p as i64 + 1));
        let n_gd = r(p as i64 + 1);
        for &(alpha, beta) in &pairs[1..] {
            // Four-root identity for alpha + beta - gamma - delta = 0.
            let mut bracket = Rational::zero();
            let bg = beta - gamma;
            if rs.contains(bg) {
                bracket += constant(rs, &special, beta, -gamma)
                    * constant(rs, &special, alpha, -delta)
                    / rs.inner(bg, bg);
            }
            let ag = alpha - gamma;
            if rs.contains(ag) {
                bracket += constant(rs, &special, -gamma, alpha)
                    * constant(rs, &special, beta, -delta)
                    / rs.inner(ag, ag);
            }
            special.insert((alpha, beta), rs.inner(xi, xi) / &n_gd * bracket);
        }
    }

    let mut out = HashMap::new();
    for &a in rs.roots() {
        for &b in rs.roots() {
            if !rs.contains(a + b) {
                continue;
            }
            let n = constant(rs, &special, a, b);
            let value = n
                .is_integer()
                .then(|| n.to_integer().to_i64())
                .flatten()
                .filter(|&v| v != 0)
                .ok_or_else(|| {
                    Error::Consistency(format!("non-integral structure constant N({a},{b}) = {n}"))
                })?;
            out.insert((a, b), value);
        }
    }
    Ok(out)
}

/// Reduces an arbitrary pair to a special pair via antisymmetry, the
/// three-root identity and `N_{-a,-b} = -N_{a,b}`.
fn constant(
    rs: &RootSystem,
    special: &HashMap<(Root, Root), Rational>,
    x: Root,
    y: Root,
) -> Rational {
    let s = x + y;
    if s.is_zero() || !rs.contains(s) {
        return Rational::zero();
    }
    match (x.is_positive(), y.is_positive()) {
        (true, true) => {
            if rs.index_of(x) < rs.index_of(y) {
                special
                    .get(&(x, y))
                    .cloned()
                    .unwrap_or_else(|| panic!("special pair ({x}, {y}) not yet computed"))
            } else {
                -constant(rs, special, y, x)
            }
        }
        (false, false) => -constant(rs, special, -x, -y),
        _ => {
            // x + y + z = 0: N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y)
            let z = -s;
            if z.is_positive() == x.is_positive() {
                rs.inner(z, z) / rs.inner(y, y) * constant(rs, special, z, x)
            } else {
                rs.inner(z, z) / rs.inner(x, x) * constant(rs, special, y, z)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_positions_are_absolute() {
        let f = Field::Rational;
        let x = Element::parse("1, 0,0,0,0,0,0,0,0,0,0,0,0,-1/2", f).unwrap();
        assert_eq!(x.coord(13), &Scalar::parse("-1/2", f).unwrap());
        match Element::parse("0,1//2,0", f) {
            Err(Error::Scalar(ScalarError::Parse { position, .. })) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            Element::parse("1,2", f),
            Err(Error::WrongLength {
                expected: 14,
                found: 2
            })
        ));
    }

    fn g2() -> LieAlgebra {
        LieAlgebra::build().expect("g2 builds")
    }

    #[test]
    fn magnitudes_match_root_strings() {
        let g = g2();
        let rs = g.root_system();
        for a in 0..12 {
            for b in 0..12 {
                let (ra, rb) = (rs.root(a), rs.root(b));
                if ra == rb || ra == -rb {
                    continue;
                }
                let n = g.root_constant(a, b);
                if rs.contains(ra + rb) {
                    let (p, _) = rs.root_string(ra, rb).unwrap();
                    assert_eq!(n.unsigned_abs() as usize, p + 1, "N({ra},{rb})");
                    assert_eq!(
                        g.root_constant(rs.negative_index(a), rs.negative_index(b)),
                        -n
                    );
                } else {
                    assert_eq!(n, 0);
                }
            }
        }
    }

    #[test]
    fn extraspecial_pairs_are_positive() {
        let g = g2();
        // (a1, a2), (a1, a1+a2), (a1, 2a1+a2), (a2, 3a1+a2)
        assert_eq!(g.root_constant(0, 1), 1);
        assert_eq!(g.root_constant(0, 2), 2);
        assert_eq!(g.root_constant(0, 3), 3);
        assert_eq!(g.root_constant(1, 4), 1);
    }

    #[test]
    fn jacobi_and_antisymmetry() {
        let g = g2();
        assert_eq!(g.jacobi_violation(), None);
        assert!(g.is_antisymmetric());
    }

    #[test]
    fn cartan_action_and_coroots() {
        let g = g2();
        let f = Field::Rational;
        let h1 = Element::basis(f, 0);
        let ea2 = Element::root_vector(f, 1);
        // a2(h_1) = -3 from the Cartan matrix.
        assert_eq!(g.bracket(&h1, &ea2).unwrap(), ea2.scale(&f.from_int(-3)));
        let e_neg_a2 = Element::root_vector(f, 7);
        assert_eq!(g.bracket(&ea2, &e_neg_a2).unwrap(), Element::basis(f, 1));
    }

    #[test]
    fn nilpotent_and_semisimple_flags() {
        let g = g2();
        let f = Field::Rational;
        let h1 = Element::basis(f, 0);
        assert!(g.is_semisimple(&h1).unwrap());
        assert!(!g.is_nilpotent(&h1).unwrap());
        for r in 0..12 {
            let e = Element::root_vector(f, r);
            assert!(g.is_nilpotent(&e).unwrap());
            assert!(!g.is_semisimple(&e).unwrap());
        }
        assert_eq!(g.is_semisimple(&Element::zero(f)), Err(Error::ZeroElement));
        assert_eq!(g.is_nilpotent(&Element::zero(f)), Err(Error::ZeroElement));
    }

    #[test]
    fn highest_root_square_has_rank_one() {
        let g = g2();
        let e_theta = Element::root_vector(Field::Rational, 5);
        let ad = g.ad_matrix(&e_theta);
        assert_eq!(ad.mul(&ad).rank(), 1);
    }

    #[test]
    fn mixed_field_bracket_is_rejected() {
        let g = g2();
        let q = Element::basis(Field::Rational, 0);
        let k = Element::basis(Field::quadratic(-3).unwrap(), 0);
        assert!(g.bracket(&q, &k).is_err());
    }

    #[test]
    fn parse_element() {
        let x = Element::parse("1,2,0,0,0,0,0,0,0,0,0,0,0,1/2", Field::Rational).unwrap();
        assert_eq!(
            x.coord(13),
            &Field::Rational.from_rational(Rational::new(1.into(), 2.into()))
        );
        assert!(matches!(
            Element::parse("1,2", Field::Rational),
            Err(Error::WrongLength { found: 2, .. })
        ));
    }
}
