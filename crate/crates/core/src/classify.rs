//! Automorphism group of `V(h)` from invariants of `h`.
//!
//! Everything is a zero test of a homogeneous invariant or the
//! semisimplicity test, so nothing here conjugates `h` into the Cartan
//! subalgebra (which over `Q` is not always possible).
//!
//! | `phi_long` | `phi_short` | other               | group                 | label |
//! |------------|-------------|---------------------|-----------------------|-------|
//! | 0          |             |                     | singular              |       |
//! | != 0       | 0           | semisimple          | `GL2 x| Z/2`          | A.1   |
//! | != 0       | 0           | not semisimple      | `(Ga x Gm) x| Z/2`    | A.4   |
//! | != 0       | != 0        | `kappa(h,h) = 0`    | `Gm^2 x| Z/6`         | A.2   |
//! | != 0       | != 0        | `kappa(h,h) != 0`   | `Gm^2 x| Z/2`         | A.3   |

use serde::Serialize;

use crate::chevalley::Element;
use crate::cones::{cone_arrangement_for, ConeArrangement};
use crate::error::{Error, Result};
use crate::invariants::InvariantValues;
use crate::weyl::ProjPoint;
use crate::G2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "type")]
pub enum AutType {
    Singular {
        nilpotent: bool,
    },
    #[serde(rename = "GL2_Z2")]
    Gl2Z2,
    #[serde(rename = "GaGm_Z2")]
    GaGmZ2,
    #[serde(rename = "Torus_Z6")]
    TorusZ6,
    #[serde(rename = "Torus_Z2")]
    TorusZ2,
}

impl AutType {
    pub fn case_label(&self) -> &'static str {
        match self {
            AutType::Singular { .. } => "singular",
            AutType::Gl2Z2 => "A.1",
            AutType::TorusZ6 => "A.2",
            AutType::TorusZ2 => "A.3",
            AutType::GaGmZ2 => "A.4",
        }
    }

    pub fn group(&self) -> &'static str {
        match self {
            AutType::Singular { .. } => "n/a",
            AutType::Gl2Z2 => "GL2 x| Z/2",
            AutType::GaGmZ2 => "(Ga x Gm) x| Z/2",
            AutType::TorusZ6 => "Gm^2 x| Z/6",
            AutType::TorusZ2 => "Gm^2 x| Z/2",
        }
    }

    pub fn is_singular(&self) -> bool {
        matches!(self, AutType::Singular { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutReport {
    pub aut_type: AutType,
    pub group: &'static str,
    pub invariants: InvariantValues,
    pub semisimple: bool,
    /// The identity component is reductive exactly when `h` is semisimple.
    pub reductive: bool,
    pub centralizer_dim: usize,
    /// Dimension of the orbit of `P h` in `P(g)`.
    pub orbit_dim: usize,
    pub cone_arrangement: ConeArrangement,
    pub case_label: &'static str,
}

pub fn centralizer_dim(g2: &G2, x: &Element) -> Result<usize> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(g2.algebra().ad_matrix(x).nullity())
}

pub fn classify_element(g2: &G2, x: &Element) -> Result<AutReport> {
    let algebra = g2.algebra();
    let invariants = g2.invariants().eval(algebra, x)?;
    let semisimple = algebra.is_semisimple(x)?;
    let aut_type = if invariants.phi_long.is_zero() {
        AutType::Singular {
            nilpotent: algebra.is_nilpotent(x)?,
        }
    } else if invariants.phi_short.is_zero() {
        if semisimple {
            AutType::Gl2Z2
        } else {
            AutType::GaGmZ2
        }
    } else {
        // Off both sextics h is regular semisimple, hence conjugate to a
        // Cartan element over the algebraic closure. kappa is invariant, and
        // on the Cartan line its zeros are exactly the Z/6 orbit, so the test
        // needs no conjugation.
        if !semisimple {
            return Err(Error::Consistency(format!(
                "element off both sextics is not semisimple: {}",
                x.to_csv()
            )));
        }
        if invariants.kappa.is_zero() {
            AutType::TorusZ6
        } else {
            AutType::TorusZ2
        }
    };
    let centralizer_dim = centralizer_dim(g2, x)?;
    // A nilpotent orbit is a cone, so it loses a dimension in P(g); other
    // orbits meet each line in finitely many points.
    let nilpotent = algebra.is_nilpotent(x)?;
    let orbit_dim = crate::chevalley::DIM - centralizer_dim - usize::from(nilpotent);
    Ok(AutReport {
        aut_type,
        group: aut_type.group(),
        invariants,
        semisimple,
        reductive: semisimple,
        centralizer_dim,
        orbit_dim,
        cone_arrangement: cone_arrangement_for(&aut_type),
        case_label: aut_type.case_label(),
    })
}

/// Whether two smooth fourfolds given by Cartan points are isomorphic, i.e.
/// whether the points share a Weyl orbit.
pub fn isomorphic_cartan_points(g2: &G2, p: &ProjPoint, q: &ProjPoint) -> Result<bool> {
    if p.field() != q.field() {
        return Err(crate::scalars::ScalarError::FieldMismatch(p.field(), q.field()).into());
    }
    let long = g2.invariants().psi_long_form();
    for r in [p, q] {
        let (u, v) = r.coords();
        if long.eval(u, v).is_zero() {
            return Err(Error::Singular(r.to_string()));
        }
    }
    Ok(g2.weyl().elements().iter().any(|w| w.apply_point(p) == *q))
}
