//! The hexagon of cubic cones and how Weyl elements permute it.
//!
//! On a fourfold with two-dimensional torus symmetry the six cones have
//! vertices at the long-root lines. The cyclic order is the orbit order of
//! the rotation `s_1 s_2` on the long roots, starting at `a2`; opposite
//! vertices are `a` and `-a`.

use serde::Serialize;

use crate::classify::AutType;
use crate::error::{Error, Result};
use crate::rootsystem::{LengthClass, RootSystem};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeCycle {
    /// Root indices in hexagon order.
    pub vertices: [usize; 6],
    pub labels: Vec<String>,
    /// Positions `(i, i + 3)`, as root indices.
    pub opposite_pairs: [(usize, usize); 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionKind {
    Identity,
    Antipodal,
    SixCycle,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeAction {
    /// `permutation[i] = j`: the vertex at position `i` goes to position `j`.
    pub permutation: [usize; 6],
    pub order: usize,
    pub kind: ActionKind,
}

pub fn build_cone_cycle(rs: &RootSystem, weyl: &WeylGroup) -> Result<ConeCycle> {
    let rotation = weyl.rotation(rs);
    let start = rs
        .index_of(crate::rootsystem::Root([0, 1]))
        .expect("a2 is a root");
    let mut vertices = [start; 6];
    for i in 1..6 {
        vertices[i] = rotation.root_permutation[vertices[i - 1]];
    }
    if rotation.root_permutation[vertices[5]] != start {
        return Err(Error::Consistency(
            "rotation does not close up after six steps".into(),
        ));
    }
    let mut seen = vertices.to_vec();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != 6
        || vertices
            .iter()
            .any(|&r| rs.length_class(r) != LengthClass::Long)
    {
        return Err(Error::Consistency(
            "rotation orbit of a2 is not the set of long roots".into(),
        ));
    }
    let mut opposite_pairs = [(0, 0); 3];
    for (i, pair) in opposite_pairs.iter_mut().enumerate() {
        let (a, b) = (vertices[i], vertices[i + 3]);
        if rs.negative_index(a) != b {
            return Err(Error::Consistency(
                "opposite hexagon vertices are not negatives".into(),
            ));
        }
        *pair = (a, b);
    }
    Ok(ConeCycle {
        labels: vertices.iter().map(|&r| rs.root(r).to_string()).collect(),
        vertices,
        opposite_pairs,
    })
}

impl ConeCycle {
    pub fn position(&self, root_index: usize) -> Option<usize> {
        self.vertices.iter().position(|&r| r == root_index)
    }

    /// Restriction of `w` to the long roots, in hexagon positions.
    pub fn induced_action(&self, w: &WeylElement) -> ConeAction {
        let mut permutation = [0; 6];
        for (i, p) in permutation.iter_mut().enumerate() {
            *p = self
                .position(w.root_permutation[self.vertices[i]])
                .expect("Weyl elements preserve the long roots");
        }
        let order = permutation_order(&permutation);
        let kind = if order == 1 {
            ActionKind::Identity
        } else if (0..6).all(|i| permutation[i] == (i + 3) % 6) {
            ActionKind::Antipodal
        } else if cycle_lengths(&permutation) == [6] {
            ActionKind::SixCycle
        } else {
            ActionKind::Other
        };
        ConeAction {
            permutation,
            order,
            kind,
        }
    }
}

fn cycle_lengths(p: &[usize; 6]) -> Vec<usize> {
    let mut seen = [false; 6];
    let mut out = Vec::new();
    for s in 0..6 {
        if seen[s] {
            continue;
        }
        let (mut i, mut len) = (s, 0);
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        out.push(len);
    }
    out
}

fn permutation_order(p: &[usize; 6]) -> usize {
    cycle_lengths(p).into_iter().fold(1, num_integer::lcm)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeArrangement {
    pub shape: &'static str,
    /// Isolated cones, when finitely many.
    pub cones: Option<usize>,
    /// Pairs of disjoint cones singled out by the arrangement.
    pub disjoint_pairs: Option<usize>,
    pub families: usize,
}

pub fn cone_arrangement_for(t: &AutType) -> ConeArrangement {
    match t {
        AutType::TorusZ6 | AutType::TorusZ2 => ConeArrangement {
            shape: "6-cycle",
            cones: Some(6),
            disjoint_pairs: Some(3),
            families: 0,
        },
        // the two end vertices are the disjoint pair
        AutType::GaGmZ2 => ConeArrangement {
            shape: "4-chain",
            cones: Some(4),
            disjoint_pairs: Some(1),
            families: 0,
        },
        AutType::Gl2Z2 => ConeArrangement {
            shape: "two invariant cones + two one-parameter families",
            cones: Some(2),
            disjoint_pairs: Some(1),
            families: 2,
        },
        AutType::Singular { .. } => ConeArrangement {
            shape: "n/a",
            cones: None,
            disjoint_pairs: None,
            families: 0,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::G2;

    fn cycle() -> ConeCycle {
        let g2 = G2::shared();
        build_cone_cycle(g2.root_system(), g2.weyl()).unwrap()
    }

    #[test]
    fn hexagon_shape() {
        let c = cycle();
        let rs = G2::shared().root_system();
        let mut v = c.vertices.to_vec();
        v.sort();
        assert_eq!(v, rs.long_indices());
        assert_eq!(c.labels[0], "a2");
        for (a, b) in c.opposite_pairs {
            assert_eq!(rs.root(a), -rs.root(b));
        }
        // neighbours sit at 60 degrees: inner product half the squared length
        for i in 0..6 {
            let (a, b) = (rs.root(c.vertices[i]), rs.root(c.vertices[(i + 1) % 6]));
            assert_eq!(
                rs.inner(a, b) * crate::scalars::Rational::from_integer(2.into()),
                rs.inner(a, a)
            );
        }
    }

    #[test]
    fn kinds_over_the_whole_group() {
        let g2 = G2::shared();
        let c = cycle();
        let mut counts = std::collections::HashMap::new();
        for w in g2.weyl().elements() {
            let a = c.induced_action(w);
            assert_eq!(a.order, w.order());
            if w.order() == 6 {
                assert_eq!(a.kind, ActionKind::SixCycle);
            }
            assert_eq!(a.kind == ActionKind::Antipodal, w.is_minus_identity());
            *counts.entry(a.kind).or_insert(0) += 1;
        }
        assert_eq!(counts[&ActionKind::Identity], 1);
        assert_eq!(counts[&ActionKind::Antipodal], 1);
        assert_eq!(counts[&ActionKind::SixCycle], 2);
    }

    #[test]
    fn action_is_a_homomorphism() {
        let g2 = G2::shared();
        let c = cycle();
        let els = g2.weyl().elements();
        for a in els {
            for b in els {
                let pa = c.induced_action(a).permutation;
                let pb = c.induced_action(b).permutation;
                let pab = c.induced_action(&a.compose(b)).permutation;
                for i in 0..6 {
                    assert_eq!(pab[i], pa[pb[i]]);
                }
            }
        }
    }

    #[test]
    fn arrangements() {
        assert_eq!(cone_arrangement_for(&AutType::TorusZ2).shape, "6-cycle");
        assert_eq!(
            cone_arrangement_for(&AutType::TorusZ6).disjoint_pairs,
            Some(3)
        );
        assert_eq!(cone_arrangement_for(&AutType::GaGmZ2).shape, "4-chain");
        assert_eq!(cone_arrangement_for(&AutType::Gl2Z2).families, 2);
        assert_eq!(
            cone_arrangement_for(&AutType::Singular { nilpotent: true }).shape,
            "n/a"
        );
    }
}
