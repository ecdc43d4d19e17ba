//! The G2 root system in simple-root coordinates.
//!
//! Conventions: `alpha1` is short and `alpha2` is long, and the Cartan matrix
//! is `A = [[2, -1], [-3, 2]]` with `A[i][j] = <alpha_i, alpha_j^vee>`, i.e.
//! row `i` lists the values of `alpha_i` on the simple coroots `h_1, h_2`.
//!
//! Root index table (shared with the Lie algebra basis, the CLI and every
//! JSON document):
//!
//! | index | root            | length |
//! |-------|-----------------|--------|
//! | 0     | a1              | short  |
//! | 1     | a2              | long   |
//! | 2     | a1 + a2         | short  |
//! | 3     | 2a1 + a2        | short  |
//! | 4     | 3a1 + a2        | long   |
//! | 5     | 3a1 + 2a2       | long   |
//! | 6..11 | negatives of 0..5, same order |
//!
//! Positive roots are ordered by height, ties broken by simple-root index
//! (so `a1` precedes `a2`).

use std::fmt;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::scalars::Rational;

pub const CARTAN_MATRIX: [[i64; 2]; 2] = [[2, -1], [-3, 2]];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("{0} is not a root")]
    NotARoot(Root),
    #[error("root string undefined for proportional roots {0} and {1}")]
    Proportional(Root, Root),
}

/// Integer coefficients over the simple roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Root(pub [i64; 2]);

impl Root {
    pub const fn new(c1: i64, c2: i64) -> Self {
        Root([c1, c2])
    }

    pub fn height(&self) -> i64 {
        self.0[0] + self.0[1]
    }

    pub fn is_positive(&self) -> bool {
        self.0[0] >= 0 && self.0[1] >= 0 && *self != Root::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0]
    }

    /// `<self, alpha_i^vee>`: the value of the root on the simple coroot `h_i`.
    pub fn on_coroot(&self, i: usize) -> i64 {
        self.0[0] * CARTAN_MATRIX[0][i] + self.0[1] * CARTAN_MATRIX[1][i]
    }
}

impl std::ops::Add for Root {
    type Output = Root;

    fn add(self, o: Root) -> Root {
        Root([self.0[0] + o.0[0], self.0[1] + o.0[1]])
    }
}

impl std::ops::Sub for Root {
    type Output = Root;

    fn sub(self, o: Root) -> Root {
        Root([self.0[0] - o.0[0], self.0[1] - o.0[1]])
    }
}

impl std::ops::Neg for Root {
    type Output = Root;

    fn neg(self) -> Root {
        Root([-self.0[0], -self.0[1]])
    }
}

impl std::ops::Mul<Root> for i64 {
    type Output = Root;

    fn mul(self, r: Root) -> Root {
        Root([self * r.0[0], self * r.0[1]])
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |c: i64, name: &str| match c {
            0 => String::new(),
            1 => name.to_string(),
            -1 => format!("-{name}"),
            c => format!("{c}{name}"),
        };
        let (a, b) = (term(self.0[0], "a1"), term(self.0[1], "a2"));
        match (a.is_empty(), b.is_empty()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{a}"),
            (true, false) => write!(f, "{b}"),
            (false, false) if b.starts_with('-') => write!(f, "{a}{b}"),
            (false, false) => write!(f, "{a}+{b}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Long,
    Short,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    roots: Vec<Root>,
    lengths: Vec<LengthClass>,
    /// W-invariant form on the root plane; short roots have squared length 2.
    inner_form: [[Rational; 2]; 2],
}

impl RootSystem {
    /// Closes `{alpha1, alpha2}` under the simple reflections.
    pub fn generate() -> Self {
        let simple = [Root::new(1, 0), Root::new(0, 1)];
        let mut found: Vec<Root> = simple.to_vec();
        let mut frontier = found.clone();
        while let Some(r) = frontier.pop() {
            for i in 0..2 {
                let s = reflect(r, i);
                if !found.contains(&s) {
                    found.push(s);
                    frontier.push(s);
                }
            }
        }
        let mut positive: Vec<Root> = found.iter().copied().filter(Root::is_positive).collect();
        // Height first; within a height, descending coefficients put a1 before a2.
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then(b.0.cmp(&a.0)));
        let roots: Vec<Root> = positive
            .iter()
            .copied()
            .chain(positive.iter().map(|r| -*r))
            .collect();
        assert_eq!(roots.len(), found.len());

        let inner_form = simple_inner_form();
        let sq = |r: &Root| bilinear(&inner_form, r, r);
        let short = sq(&simple[0]);
        let lengths = roots
            .iter()
            .map(|r| {
                if sq(r) == short {
                    LengthClass::Short
                } else {
                    LengthClass::Long
                }
            })
            .collect();
        RootSystem {
            roots,
            lengths,
            inner_form,
        }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, i: usize) -> Root {
        self.roots[i]
    }

    pub fn positive(&self) -> &[Root] {
        &self.roots[..self.roots.len() / 2]
    }

    pub fn index_of(&self, r: Root) -> Option<usize> {
        self.roots.iter().position(|&x| x == r)
    }

    pub fn contains(&self, r: Root) -> bool {
        self.index_of(r).is_some()
    }

    /// Index of `-roots[i]`.
    pub fn negative_index(&self, i: usize) -> usize {
        let half = self.roots.len() / 2;
        (i + half) % self.roots.len()
    }

    pub fn length_class(&self, i: usize) -> LengthClass {
        self.lengths[i]
    }

    pub fn long_indices(&self) -> Vec<usize> {
        self.indices_of_class(LengthClass::Long)
    }

    pub fn short_indices(&self) -> Vec<usize> {
        self.indices_of_class(LengthClass::Short)
    }

    fn indices_of_class(&self, c: LengthClass) -> Vec<usize> {
        (0..self.roots.len())
            .filter(|&i| self.lengths[i] == c)
            .collect()
    }

    pub fn inner_form(&self) -> &[[Rational; 2]; 2] {
        &self.inner_form
    }

    pub fn inner(&self, a: Root, b: Root) -> Rational {
        bilinear(&self.inner_form, &a, &b)
    }

    /// `<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)`.
    pub fn pairing(&self, beta: Root, alpha: Root) -> i64 {
        let q =
            self.inner(beta, alpha) * Rational::from_integer(2.into()) / self.inner(alpha, alpha);
        assert!(q.is_integer(), "non-integral Cartan pairing");
        i64::try_from(q.to_integer()).expect("small integer")
    }

    pub fn highest_root(&self) -> Root {
        *self
            .positive()
            .iter()
            .max_by_key(|r| r.height())
            .expect("nonempty")
    }

    /// Coordinates of the coroot `alpha^vee` in the simple coroot basis `(h_1, h_2)`.
    pub fn coroot(&self, alpha: Root) -> [i64; 2] {
        let norm = self.inner(alpha, alpha);
        let mut out = [0; 2];
        for (i, c) in out.iter_mut().enumerate() {
            let simple = Root(if i == 0 { [1, 0] } else { [0, 1] });
            let q = Rational::from_integer(alpha.0[i].into()) * self.inner(simple, simple) / &norm;
            assert!(q.is_integer(), "non-integral coroot coordinate");
            *c = i64::try_from(q.to_integer()).expect("small integer");
        }
        out
    }

    /// `(p, q)` with `beta - k alpha` a root for `0 <= k <= p` and
    /// `beta + k alpha` a root for `0 <= k <= q`.
    pub fn root_string(&self, alpha: Root, beta: Root) -> Result<(usize, usize), RootError> {
        for r in [alpha, beta] {
            if !self.contains(r) {
                return Err(RootError::NotARoot(r));
            }
        }
        if alpha == beta || alpha == -beta {
            return Err(RootError::Proportional(alpha, beta));
        }
        let count = |sign: i64| {
            (1..)
                .take_while(|&k: &i64| self.contains(beta + (sign * k) * alpha))
                .count()
        };
        Ok((count(-1), count(1)))
    }

    /// Linear form of a root on the Cartan plane: `(gamma(h_1), gamma(h_2))`.
    pub fn cartan_values(&self, gamma: Root) -> [i64; 2] {
        [gamma.on_coroot(0), gamma.on_coroot(1)]
    }
}

/// Simple reflection `s_i(gamma) = gamma - <gamma, alpha_i^vee> alpha_i`.
pub fn reflect(gamma: Root, i: usize) -> Root {
    let simple = Root(if i == 0 { [1, 0] } else { [0, 1] });
    gamma - gamma.on_coroot(i) * simple
}

/// Symmetrization of the Cartan matrix with `(alpha1, alpha1) = 2`.
fn simple_inner_form() -> [[Rational; 2]; 2] {
    let a = CARTAN_MATRIX;
    let r = |n: i64| Rational::from_integer(n.into());
    let s11 = r(2);
    // (a_i, a_j) = A[i][j] (a_j, a_j) / 2
    let s21 = r(a[1][0]) * &s11 / r(2);
    let s22 = r(2) * &s21 / r(a[0][1]);
    debug_assert!(!s22.is_zero());
    [[s11, s21.clone()], [s21, s22]]
}

fn bilinear(form: &[[Rational; 2]; 2], a: &Root, b: &Root) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..2 {
        for j in 0..2 {
            acc += &form[i][j] * Rational::from_integer((a.0[i] * b.0[j]).into());
        }
    }
    acc
}
