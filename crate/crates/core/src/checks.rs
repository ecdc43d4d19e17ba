//! Named self-checks over the whole construction, run by `g2fano selfcheck`.
//!
//! Each check returns a one-line summary on success or the first
//! counterexample on failure. Randomized checks draw from a ChaCha8 stream
//! seeded by [`Options::seed`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chevalley::{Element, LieAlgebra, DIM};
use crate::classify::{centralizer_dim, classify_element, isomorphic_cartan_points, AutType};
use crate::cones::{build_cone_cycle, ActionKind};
use crate::invariants::{cartan_point, positive_product_form};
use crate::omega::{default_regular_witness, fixed_points_in_min_orbit, torus_fixed_points};
use crate::rootsystem::{LengthClass, Root};
use crate::scalars::{Field, Rational};
use crate::weyl::{classify_point, isotropic_points, PointClass, ProjPoint, WEYL_ORDER};
use crate::G2;

pub const DEFAULT_SEED: u64 = 0x6702_2024;

/// Number of random inputs per covariance check.
pub const COVARIANCE_SAMPLES: usize = 100;

/// Seeded structure-constant flips tried by the mutation check.
pub const MUTATION_SAMPLES: usize = 5;

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub seed: u64,
    /// Run the Jacobi check against a copy with one seeded sign flipped.
    pub mutate: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: DEFAULT_SEED,
            mutate: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub seed: u64,
    /// `(i, j, k)` of the flipped constant `[b_i, b_j]` on `b_k`.
    pub mutation: Option<(usize, usize, usize)>,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }
}

type CheckResult = std::result::Result<String, String>;

struct Ctx<'a> {
    g2: &'a G2,
    /// The algebra under test; differs from `g2.algebra()` only when mutated.
    algebra: LieAlgebra,
    seed: u64,
}

type CheckFn = fn(&Ctx) -> CheckResult;

const CHECKS: &[(&str, CheckFn)] = &[
    ("algebra.jacobi", check_jacobi),
    ("algebra.killing", check_killing),
    ("classify.centralizers", check_centralizers),
    ("classify.outcomes", check_outcomes),
    ("classify.scale_covariance", check_scale_covariance),
    ("classify.weyl_covariance", check_weyl_covariance),
    ("cones.actions", check_cone_actions),
    ("invariants.extension", check_extension),
    ("isomorphic.regular_orbit", check_isomorphic),
    ("mutation.detected", check_mutations),
    ("omega.fixed_points", check_fixed_points),
    ("roots.data", check_roots),
    ("weyl.group", check_weyl_group),
    ("weyl.special_orbits", check_special_orbits),
    ("weyl.stabilizers", check_stabilizers),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

pub fn run(g2: &G2, opts: &Options) -> Report {
    let mut algebra = g2.algebra().clone();
    let mut mutation = None;
    if opts.mutate {
        let (alg, m) = seeded_mutations(g2.algebra(), opts.seed, 1)
            .into_iter()
            .next()
            .expect("g2 has nonzero structure constants");
        algebra = alg;
        mutation = Some(m);
    }
    let ctx = Ctx {
        g2,
        algebra,
        seed: opts.seed,
    };
    let checks = CHECKS
        .iter()
        .map(|(name, f)| {
            let (passed, detail) = match f(&ctx) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckOutcome {
                name,
                passed,
                detail,
            }
        })
        .collect();
    Report {
        seed: opts.seed,
        mutation,
        checks,
    }
}

/// `n` distinct seeded single-sign flips of the structure constants.
pub fn seeded_mutations(
    algebra: &LieAlgebra,
    seed: u64,
    n: usize,
) -> Vec<(LieAlgebra, (usize, usize, usize))> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let constants = algebra.structure_constants();
    constants
        .choose_multiple(&mut rng, n)
        .map(|c| {
            let alg = algebra
                .with_flipped_constant(c.i, c.j, c.k)
                .expect("constant taken from the table");
            (alg, (c.i, c.j, c.k))
        })
        .collect()
}

/// A random nonzero element with small integer coordinates, biased toward
/// the interesting strata: root vectors, Killing duals, mixed elements,
/// Cartan points and dense elements.
pub fn random_element<R: Rng>(g2: &G2, rng: &mut R) -> Element {
    let f = Field::Rational;
    loop {
        let x = match rng.gen_range(0..5) {
            0 => Element::root_vector(f, rng.gen_range(0..12)),
            1 => g2.killing_dual(rng.gen_range(0..12)),
            2 => {
                // t_a + e_b with a long and b short and orthogonal
                let rs = g2.root_system();
                let a = *rs.long_indices().choose(rng).unwrap();
                let orth: Vec<usize> = rs
                    .short_indices()
                    .into_iter()
                    .filter(|&b| {
                        rs.inner(rs.root(a), rs.root(b)) == Rational::from_integer(0.into())
                    })
                    .collect();
                let b = *orth.choose(rng).unwrap();
                g2.killing_dual(a)
                    .checked_add(&Element::root_vector(f, b))
                    .unwrap()
            }
            3 => random_cartan(rng),
            _ => {
                let c: Vec<_> = (0..DIM)
                    .map(|_| f.from_int(rng.gen_range(-3..=3)))
                    .collect();
                Element::new(c).unwrap()
            }
        };
        if !x.is_zero() {
            return x;
        }
    }
}

/// A random Cartan element; one in four is a multiple of a coroot.
pub fn random_cartan<R: Rng>(rng: &mut R) -> Element {
    loop {
        let (u, v) = if rng.gen_ratio(1, 4) {
            let coroots = [(1, 0), (1, 3), (2, 3), (0, 1), (1, 1), (1, 2)];
            let (a, b) = *coroots.choose(rng).unwrap();
            let k = *[-3, -2, -1, 1, 2, 3].choose(rng).unwrap();
            (a * k, b * k)
        } else {
            (rng.gen_range(-9..=9), rng.gen_range(-9..=9))
        };
        if (u, v) != (0, 0) {
            return cartan_point(u, v);
        }
    }
}

pub fn random_nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    let p = *[-7i64, -5, -3, -2, -1, 1, 2, 3, 5, 7].choose(rng).unwrap();
    let q: i64 = rng.gen_range(1..=6);
    Rational::new(p.into(), q.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn check_jacobi(ctx: &Ctx) -> CheckResult {
    match ctx.algebra.jacobi_violation() {
        None => Ok(format!(
            "Jacobi holds on all {} basis triples",
            DIM * DIM * DIM
        )),
        Some((i, j, k)) => Err(format!("Jacobi fails on basis triple ({i}, {j}, {k})")),
    }
}

fn check_killing(ctx: &Ctx) -> CheckResult {
    let k = ctx.g2.invariants().killing();
    ensure(k.is_nondegenerate(), || "Killing form is degenerate".into())?;
    let rs = ctx.g2.root_system();
    for a in 0..12 {
        for b in 0..12 {
            let v = k.entry(a + 2, b + 2);
            let opposite = rs.root(a) + rs.root(b) == Root([0, 0]);
            ensure(opposite || v == Rational::from_integer(0.into()), || {
                format!("kappa(e_{}, e_{}) = {v}", rs.root(a), rs.root(b))
            })?;
        }
    }
    Ok("nondegenerate; root spaces pair only with their negatives".into())
}

fn check_roots(ctx: &Ctx) -> CheckResult {
    let rs = ctx.g2.root_system();
    ensure(rs.len() == 12, || format!("{} roots", rs.len()))?;
    ensure(
        rs.long_indices().len() == 6 && rs.short_indices().len() == 6,
        || "expected six long and six short roots".into(),
    )?;
    let l = rs.inner(rs.root(1), rs.root(1));
    let s = rs.inner(rs.root(0), rs.root(0));
    ensure(l == s.clone() * Rational::from_integer(3.into()), || {
        format!("length ratio {l}/{s}")
    })?;
    let k = ctx.g2.invariants().killing();
    for b in rs.short_indices() {
        let orth: Vec<usize> = rs
            .long_indices()
            .into_iter()
            .filter(|&a| {
                k.eval(&ctx.g2.killing_dual(a), &ctx.g2.killing_dual(b))
                    .map(|x| x.is_zero())
                    .unwrap_or(false)
            })
            .collect();
        ensure(
            orth.len() == 2 && orth[1] == rs.negative_index(orth[0]),
            || {
                format!(
                    "short root {} has Killing-orthogonal long roots {orth:?}",
                    rs.root(b)
                )
            },
        )?;
    }
    Ok("12 roots, 6 long, 6 short, ratio 3, one orthogonal long pair per short root".into())
}

fn check_weyl_group(ctx: &Ctx) -> CheckResult {
    let w = ctx.g2.weyl();
    ensure(w.order() == WEYL_ORDER, || format!("|W| = {}", w.order()))?;
    let center = w.center();
    ensure(
        center.len() == 2 && center.iter().any(|&i| w.element(i).is_minus_identity()),
        || format!("center {center:?}"),
    )?;
    ensure(w.projective_kernel() == center, || {
        "projective kernel differs from the center".into()
    })?;
    let m = w.order_multiset();
    ensure(m == vec![1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 6, 6], || {
        format!("element orders {m:?}")
    })?;
    Ok("|W| = 12, center {1, -1}, order multiset of S3 x Z/2".into())
}

fn check_special_orbits(ctx: &Ctx) -> CheckResult {
    let g2 = ctx.g2;
    let inv = g2.invariants();
    let w = g2.weyl();
    let rs = g2.root_system();
    // candidates: coroot lines and the isotropic pair
    let mut reps: Vec<ProjPoint> = Vec::new();
    let mut points: Vec<ProjPoint> = rs
        .positive()
        .iter()
        .map(|&r| {
            let [a, b] = rs.coroot(r);
            ProjPoint::from_ints(a, b).unwrap()
        })
        .collect();
    let (_, iso) = isotropic_points(inv.killing()).map_err(err)?;
    points.extend(iso);
    let mut lengths = Vec::new();
    for p in &points {
        if reps
            .iter()
            .any(|r| r.field() == p.field() && w.orbit_points(r).contains(p))
        {
            continue;
        }
        let report = w.orbit_of_point(inv, p);
        ensure(report.stabilizer_order > 2, || {
            format!("{p} has stabilizer of order 2")
        })?;
        lengths.push((report.point_class, report.length));
        reps.push(p.clone());
    }
    lengths.sort_by_key(|(c, _)| c.to_string());
    let expected = vec![
        (PointClass::OLong, 3),
        (PointClass::ORegular, 2),
        (PointClass::OShort, 3),
    ];
    ensure(lengths == expected, || {
        format!("special orbits {lengths:?}")
    })?;
    // psi_long = -(prod of positive long roots)^2
    let prod = positive_product_form(rs, LengthClass::Long);
    let target = -&(&prod * &prod);
    ensure(inv.psi_long_form() == &target, || {
        format!(
            "psi_long = {} but -(prod)^2 = {target}",
            inv.psi_long_form()
        )
    })?;
    Ok("special orbit lengths O_l 3, O_s 3, O_r 2; psi_long = -(prod long)^2".into())
}

fn check_stabilizers(ctx: &Ctx) -> CheckResult {
    let g2 = ctx.g2;
    let w = g2.weyl();
    let generic = ProjPoint::from_ints(1, 5).map_err(err)?;
    let s = w.stabilizer_of_point(&generic);
    ensure(s.len() == 2, || {
        format!("generic stabilizer of order {}", s.len())
    })?;
    let (_, [p, _]) = isotropic_points(g2.invariants().killing()).map_err(err)?;
    let s = w.stabilizer_of_point(&p);
    ensure(s.len() == 6 && w.is_cyclic_subgroup(&s), || {
        format!(
            "stabilizer of {p} has order {} (cyclic: {})",
            s.len(),
            w.is_cyclic_subgroup(&s)
        )
    })?;
    Ok("generic stabilizer order 2; O_r stabilizer cyclic of order 6".into())
}

fn check_outcomes(ctx: &Ctx) -> CheckResult {
    let g2 = ctx.g2;
    let rs = g2.root_system();
    let f = Field::Rational;
    let theta = rs.index_of(rs.highest_root()).unwrap();
    let a2 = rs.index_of(Root([0, 1])).unwrap();
    let beta = rs.index_of(Root([2, 1])).unwrap();
    let (_, [iso, _]) = isotropic_points(g2.invariants().killing()).map_err(err)?;
    let mixed = g2
        .killing_dual(a2)
        .checked_add(&Element::root_vector(f, beta))
        .map_err(err)?;
    let cases = [
        (
            "e_theta",
            Element::root_vector(f, theta),
            AutType::Singular { nilpotent: true },
        ),
        (
            "t_a1",
            g2.killing_dual(0),
            AutType::Singular { nilpotent: false },
        ),
        ("t_a2", g2.killing_dual(a2), AutType::Gl2Z2),
        ("t_a2 + e_(2a1+a2)", mixed, AutType::GaGmZ2),
        ("h_1 + 5h_2", cartan_point(1, 5), AutType::TorusZ2),
        ("isotropic", iso.to_element(), AutType::TorusZ6),
    ];
    for (name, x, want) in cases {
        let got = classify_element(g2, &x).map_err(err)?.aut_type;
        ensure(got == want, || {
            format!("{name}: got {got:?}, expected {want:?}")
        })?;
    }
    Ok("all five outcomes witnessed".into())
}

fn check_centralizers(ctx: &Ctx) -> CheckResult {
    let g2 = ctx.g2;
    let rs = g2.root_system();
    let f = Field::Rational;
    let theta = rs.index_of(rs.highest_root()).unwrap();
    let mixed = g2
        .killing_dual(1)
        .checked_add(&Element::root_vector(f, 3))
        .map_err(err)?;
    let got = [
        centralizer_dim(g2, &Element::root_vector(f, theta)).map_err(err)?,
        centralizer_dim(g2, &g2.killing_dual(1)).map_err(err)?,
        centralizer_dim(g2, &mixed).map_err(err)?,
    ];
    ensure(got == [8, 4, 2], || {
        format!("centralizer dimensions {got:?}")
    })?;
    Ok("centralizer dimensions 8, 4, 2 (orbit dimensions 5, 10, 12)".into())
}

fn check_scale_covariance(ctx: &Ctx) -> CheckResult {
    let g2 = ctx.g2;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x5ca1e);
    for _ in 0..COVARIANCE_SAMPLES {
        let x = random_element(g2, &mut rng);
        let lambda = random_nonzero_rational(&mut rng);
        let y = x.scale(&Field::Rational.from_rational(lambda.clone()));
        let (a, b) = (
            classify_element(g2, &x).map_err(err)?.aut_type,
            classify_element(g2, &y).map_err(err)?.aut_type,
        );
        ensure(a == b, || {
            format!("{} vs scaled by {lambda}: {a:?} != {b:?}", x.to_csv())
        })?;
    }
    Ok(format!("{COVARIANCE_SAMPLES} random inputs"))
}

fn check_weyl_covariance(ctx: &Ctx) -> CheckResult {
    let g2 = ctx.g2;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x3e71);
    for _ in 0..COVARIANCE_SAMPLES {
        let x = random_cartan(&mut rng);
        let w = g2.weyl().elements().choose(&mut rng).unwrap();
        let y = w.apply_element(&x).expect("Cartan input");
        let (a, b) = (
            classify_element(g2, &x).map_err(err)?.aut_type,
            classify_element(g2, &y).map_err(err)?.aut_type,
        );
        ensure(a == b, || {
            format!("{} vs its Weyl image: {a:?} != {b:?}", x.to_csv())
        })?;
    }
    Ok(format!("{COVARIANCE_SAMPLES} random Cartan inputs"))
}

fn check_fixed_points(ctx: &Ctx) -> CheckResult {
    let g2 = ctx.g2;
    let loci = torus_fixed_points(g2, &default_regular_witness()).map_err(err)?;
    let mut inside = fixed_points_in_min_orbit(&loci);
    inside.sort_unstable();
    ensure(inside == g2.root_system().long_indices(), || {
        format!("fixed points in the minimal orbit: {inside:?}")
    })?;
    Ok("exactly the 6 long-root lines; no Cartan direction nilpotent".into())
}

fn check_cone_actions(ctx: &Ctx) -> CheckResult {
    let g2 = ctx.g2;
    let cycle = build_cone_cycle(g2.root_system(), g2.weyl()).map_err(err)?;
    for w in g2.weyl().elements() {
        let a = cycle.induced_action(w);
        if w.is_minus_identity() {
            ensure(a.kind == ActionKind::Antipodal, || {
                format!("-1 acts as {:?}", a.permutation)
            })?;
        }
        if w.order() == 6 {
            ensure(a.kind == ActionKind::SixCycle, || {
                format!("order-6 element acts as {:?}", a.permutation)
            })?;
        }
    }
    Ok("-1 is antipodal; order-6 elements are 6-cycles".into())
}

fn check_isomorphic(ctx: &Ctx) -> CheckResult {
    let g2 = ctx.g2;
    let (_, [p, q]) = isotropic_points(g2.invariants().killing()).map_err(err)?;
    ensure(isomorphic_cartan_points(g2, &p, &q).map_err(err)?, || {
        "O_r points not isomorphic".into()
    })?;
    ensure(isomorphic_cartan_points(g2, &q, &p).map_err(err)?, || {
        "not symmetric on O_r".into()
    })?;
    let a = ProjPoint::from_ints(1, 5).map_err(err)?;
    let b = ProjPoint::from_ints(2, 7).map_err(err)?;
    ensure(isomorphic_cartan_points(g2, &a, &a).map_err(err)?, || {
        "not reflexive".into()
    })?;
    ensure(!isomorphic_cartan_points(g2, &a, &b).map_err(err)?, || {
        "(1:5) ~ (2:7)".into()
    })?;
    Ok("O_r points isomorphic; (1:5) and (2:7) separated".into())
}

fn check_extension(ctx: &Ctx) -> CheckResult {
    let g2 = ctx.g2;
    let inv = g2.invariants();
    let algebra = g2.algebra();
    for &(u, v) in &crate::invariants::CHECK_POINTS {
        let h = cartan_point(u, v);
        let vals = inv.eval(algebra, &h).map_err(err)?;
        let (pl, ps) = inv.psi_at(&h);
        ensure(vals.phi_long == pl && vals.phi_short == ps, || {
            format!("mismatch at ({u}:{v})")
        })?;
    }
    for r in 0..12 {
        let vals = inv
            .eval(algebra, &Element::root_vector(Field::Rational, r))
            .map_err(err)?;
        ensure(vals.phi_long.is_zero() && vals.phi_short.is_zero(), || {
            format!("sextics do not vanish on e_{}", g2.root_system().root(r))
        })?;
    }
    Ok(format!(
        "extension agrees at {} check points; both sextics vanish on root vectors",
        crate::invariants::CHECK_POINTS.len()
    ))
}

fn check_mutations(ctx: &Ctx) -> CheckResult {
    for (alg, (i, j, k)) in seeded_mutations(ctx.g2.algebra(), ctx.seed, MUTATION_SAMPLES) {
        ensure(alg.jacobi_violation().is_some(), || {
            format!("flipping [b_{i}, b_{j}] on b_{k} leaves Jacobi intact")
        })?;
    }
    Ok(format!(
        "{MUTATION_SAMPLES} seeded sign flips all break Jacobi"
    ))
}

/// Point class of a Cartan element, for comparing against the classifier.
pub fn cartan_class(g2: &G2, h: &Element) -> crate::error::Result<PointClass> {
    Ok(classify_point(
        g2.invariants(),
        &ProjPoint::from_element(h)?,
    ))
}
