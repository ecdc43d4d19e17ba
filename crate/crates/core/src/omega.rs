//! Membership in the minimal nilpotent orbit (the cone over the adjoint
//! variety) and in the short-root orbit, and the torus-fixed lines.
//!
//! Membership is read off the rank signature `(rank ad x, rank (ad x)^2)` of
//! a nilpotent `x`: the minimal orbit is exactly `rank (ad x)^2 = 1`, and the
//! short-root signature is calibrated on the six short root vectors.

use serde::Serialize;

use crate::chevalley::{Element, LieAlgebra, DIM, RANK};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{Field, Scalar};
use crate::G2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitTag {
    MinOrbit,
    ShortOrbit,
    OtherNilpotent,
    NotNilpotent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrbitMembership {
    pub tag: OrbitTag,
    pub rank1: usize,
    pub rank2: usize,
}

/// `(rank ad x, rank (ad x)^2)`.
pub fn rank_signature(algebra: &LieAlgebra, x: &Element) -> (usize, usize) {
    let ad = algebra.ad_matrix(x);
    (ad.rank(), ad.mul(&ad).rank())
}

/// The common rank signature of the short root vectors.
pub fn short_orbit_signature(algebra: &LieAlgebra) -> Result<(usize, usize)> {
    let rs = algebra.root_system();
    let mut sigs = rs
        .short_indices()
        .into_iter()
        .map(|r| rank_signature(algebra, &Element::root_vector(Field::Rational, r)));
    let first = sigs.next().expect("six short roots");
    if sigs.any(|s| s != first) {
        return Err(Error::Consistency(
            "short root vectors have different rank signatures".into(),
        ));
    }
    if first.1 == 1 {
        return Err(Error::Consistency(
            "short root vectors share the minimal-orbit signature".into(),
        ));
    }
    Ok(first)
}

pub fn orbit_membership(algebra: &LieAlgebra, x: &Element) -> Result<OrbitMembership> {
    let (rank1, rank2) = rank_signature(algebra, x);
    let tag = if !algebra.is_nilpotent(x)? {
        OrbitTag::NotNilpotent
    } else if rank2 == 1 {
        OrbitTag::MinOrbit
    } else if (rank1, rank2) == short_orbit_signature(algebra)? {
        OrbitTag::ShortOrbit
    } else {
        OrbitTag::OtherNilpotent
    };
    Ok(OrbitMembership { tag, rank1, rank2 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FixedLocus {
    /// The projective line of the Cartan subalgebra (eigenvalue 0).
    CartanLine,
    /// An isolated fixed point: the line of a root vector.
    RootLine {
        root_index: usize,
        root: String,
        membership: OrbitMembership,
        in_min_orbit: bool,
    },
}

/// `h_1 + 5 h_2`: all twelve root values are distinct and nonzero.
pub fn default_regular_witness() -> Element {
    let f = Field::Rational;
    Element::cartan(f.from_int(1), f.from_int(5)).expect("rational Cartan element")
}

/// Root values `gamma(h)` after checking `h` is a regular Cartan element.
pub fn validate_regular(g2: &G2, h: &Element) -> Result<Vec<Scalar>> {
    if h.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !h.is_cartan() {
        return Err(Error::NotCartan);
    }
    let rs = g2.root_system();
    let [u, v] = h.cartan_part();
    let f = h.field();
    let values: Vec<Scalar> = rs
        .roots()
        .iter()
        .map(|&r| {
            let [a, b] = rs.cartan_values(r);
            &f.from_int(a) * &u + &f.from_int(b) * &v
        })
        .collect();
    for (i, x) in values.iter().enumerate() {
        if x.is_zero() {
            return Err(Error::NotRegular(format!("root {} vanishes", rs.root(i))));
        }
        if let Some(j) = values[..i].iter().position(|y| y == x) {
            return Err(Error::NotRegular(format!(
                "roots {} and {} take the same value",
                rs.root(j),
                rs.root(i)
            )));
        }
    }
    Ok(values)
}

/// Fixed loci of the torus through a regular `h` acting on `P(g)`: the
/// eigenlines of `ad h`, with each isolated point tagged by orbit membership.
pub fn torus_fixed_points(g2: &G2, h: &Element) -> Result<Vec<FixedLocus>> {
    validate_regular(g2, h)?;
    let algebra = g2.algebra();
    let rs = g2.root_system();
    let ad = algebra.ad_matrix(h);
    if !ad.is_diagonal() {
        return Err(Error::Consistency(
            "ad of a Cartan element is not diagonal".into(),
        ));
    }
    let f = h.field();
    let mut eigenvalues: Vec<Scalar> = Vec::new();
    for i in 0..DIM {
        let lambda = ad.get(i, i);
        if !eigenvalues.contains(lambda) {
            eigenvalues.push(lambda.clone());
        }
    }
    let mut out = Vec::new();
    for lambda in eigenvalues {
        let shifted = ad.sub(&Matrix::identity(DIM, f).scaled(&lambda));
        let kernel = shifted.kernel();
        if lambda.is_zero() {
            if kernel.len() != RANK {
                return Err(Error::Consistency(
                    "zero eigenspace is not the Cartan plane".into(),
                ));
            }
            for v in &kernel {
                let x = Element::new(v.clone())?;
                if !x.is_cartan() || algebra.is_nilpotent(&x)? {
                    return Err(Error::Consistency("Cartan direction is nilpotent".into()));
                }
            }
            out.push(FixedLocus::CartanLine);
            continue;
        }
        if kernel.len() != 1 {
            return Err(Error::Consistency(format!(
                "eigenvalue {lambda} is not simple"
            )));
        }
        let x = Element::new(kernel[0].clone())?;
        let support: Vec<usize> = (0..DIM).filter(|&i| !x.coord(i).is_zero()).collect();
        let [b] = support[..] else {
            return Err(Error::Consistency("eigenline is not a root line".into()));
        };
        let r = b - RANK;
        let membership = orbit_membership(algebra, &x)?;
        out.push(FixedLocus::RootLine {
            root_index: r,
            root: rs.root(r).to_string(),
            membership,
            in_min_orbit: membership.tag == OrbitTag::MinOrbit,
        });
    }
    Ok(out)
}

/// Roots whose lines are fixed points lying in the minimal orbit.
pub fn fixed_points_in_min_orbit(loci: &[FixedLocus]) -> Vec<usize> {
    loci.iter()
        .filter_map(|l| match l {
            FixedLocus::RootLine {
                root_index,
                in_min_orbit: true,
                ..
            } => Some(*root_index),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::LengthClass;

    #[test]
    fn root_vector_signatures() {
        let g2 = G2::shared();
        let a = g2.algebra();
        let rs = g2.root_system();
        for r in 0..12 {
            let m = orbit_membership(a, &Element::root_vector(Field::Rational, r)).unwrap();
            match rs.length_class(r) {
                LengthClass::Long => assert_eq!((m.tag, m.rank2), (OrbitTag::MinOrbit, 1)),
                LengthClass::Short => {
                    assert_eq!(m.tag, OrbitTag::ShortOrbit);
                    assert!(m.rank2 > 1);
                }
            }
        }
        let h1 = Element::basis(Field::Rational, 0);
        assert_eq!(
            orbit_membership(a, &h1).unwrap().tag,
            OrbitTag::NotNilpotent
        );
    }

    #[test]
    fn six_fixed_points_in_min_orbit() {
        let g2 = G2::shared();
        let loci = torus_fixed_points(g2, &default_regular_witness()).unwrap();
        assert_eq!(loci.len(), 13);
        let mut inside = fixed_points_in_min_orbit(&loci);
        inside.sort();
        assert_eq!(inside, g2.root_system().long_indices());
    }

    #[test]
    fn non_regular_rejected() {
        let g2 = G2::shared();
        let h1 = Element::basis(Field::Rational, 0);
        // a2 and -(a1 + a2) both take the value -1 on h_1
        assert!(matches!(
            torus_fixed_points(g2, &h1),
            Err(Error::NotRegular(_))
        ));
        let e = Element::root_vector(Field::Rational, 0);
        assert!(matches!(torus_fixed_points(g2, &e), Err(Error::NotCartan)));
    }
}
