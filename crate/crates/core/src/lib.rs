//! Exact computations in the exceptional Lie algebra g2.
//!
//! The crate builds g2 in a Chevalley basis over `Q` (or a quadratic field),
//! its Killing form, Weyl group and the two invariant sextics cut out by the
//! long and short roots, and uses them to decide the automorphism group of
//! the fourfold `V(h)`, the hyperplane section of the adjoint variety of G2
//! by `h^perp`, for any nonzero `h`.
//!
//! ```
//! use g2_core::{classify, G2};
//! use g2_core::chevalley::Element;
//! use g2_core::scalars::Field;
//!
//! let g2 = G2::shared();
//! let e_theta = Element::root_vector(Field::Rational, 5);
//! let report = classify::classify_element(g2, &e_theta).unwrap();
//! assert_eq!(report.case_label, "singular");
//! ```

#![allow(clippy::needless_range_loop)]

use std::sync::OnceLock;

pub mod checks;
pub mod chevalley;
pub mod classify;
pub mod cones;
pub mod error;
pub mod forms;
pub mod invariants;
pub mod linalg;
pub mod omega;
pub mod rootsystem;
pub mod scalars;
pub mod weyl;

pub use chevalley::{Element, LieAlgebra};
pub use classify::{AutReport, AutType};
pub use error::{Error, Result};
pub use invariants::{InvariantValues, Invariants};
pub use rootsystem::{Root, RootSystem};
pub use scalars::{Field, Rational, Scalar};
pub use weyl::{ProjPoint, WeylElement, WeylGroup};

/// Everything derived once from the structure constants.
#[derive(Debug, Clone)]
pub struct G2 {
    algebra: LieAlgebra,
    invariants: Invariants,
    weyl: WeylGroup,
}

impl G2 {
    pub fn build() -> Result<Self> {
        let algebra = LieAlgebra::build()?;
        let invariants = Invariants::derive(&algebra)?;
        let weyl = WeylGroup::generate(algebra.root_system())?;
        Ok(G2 {
            algebra,
            invariants,
            weyl,
        })
    }

    /// Process-wide instance.
    ///
    /// # Panics
    ///
    /// If the construction fails its internal consistency checks.
    pub fn shared() -> &'static G2 {
        static SHARED: OnceLock<G2> = OnceLock::new();
        SHARED.get_or_init(|| G2::build().unwrap_or_else(|e| panic!("g2 construction failed: {e}")))
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn invariants(&self) -> &Invariants {
        &self.invariants
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn root_system(&self) -> &RootSystem {
        self.algebra.root_system()
    }

    /// `t_gamma` for root index `r`.
    pub fn killing_dual(&self, r: usize) -> Element {
        self.invariants.killing_dual(self.root_system(), r)
    }
}
