//! Property tests for the classifier on Cartan points and small integer
//! elements.

use proptest::prelude::*;

use g2_core::chevalley::{Element, DIM};
use g2_core::classify::{classify_element, AutType};
use g2_core::invariants::cartan_point;
use g2_core::weyl::{classify_point, PointClass, ProjPoint};
use g2_core::{Field, Rational, G2};

fn cartan() -> impl Strategy<Value = (i64, i64)> {
    (-12i64..=12, -12i64..=12).prop_filter("nonzero", |p| *p != (0, 0))
}

fn small_element() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, DIM).prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cartan_points_match_special_orbits((u, v) in cartan()) {
        let g2 = G2::shared();
        let r = classify_element(g2, &cartan_point(u, v)).unwrap();
        let class = classify_point(g2.invariants(), &ProjPoint::from_ints(u, v).unwrap());
        let want = match class {
            PointClass::OLong => r.aut_type.is_singular(),
            PointClass::OShort => r.aut_type == AutType::Gl2Z2,
            PointClass::ORegular => r.aut_type == AutType::TorusZ6,
            PointClass::Generic => r.aut_type == AutType::TorusZ2,
        };
        prop_assert!(want, "({}:{}) is {:?} but classified {:?}", u, v, class, r.aut_type);
        prop_assert!(r.semisimple);
    }

    #[test]
    fn weyl_images_classify_alike((u, v) in cartan(), w in 0usize..12) {
        let g2 = G2::shared();
        let x = cartan_point(u, v);
        let y = g2.weyl().element(w).apply_element(&x).unwrap();
        prop_assert_eq!(
            classify_element(g2, &x).unwrap().aut_type,
            classify_element(g2, &y).unwrap().aut_type
        );
    }

}

proptest! {
    // the minimal-polynomial oracle is slow; fewer cases
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn reductive_iff_semisimple(c in small_element()) {
        let g2 = G2::shared();
        let x = Element::from_ints(Field::Rational, &c.try_into().unwrap());
        let r = classify_element(g2, &x).unwrap();
        prop_assert_eq!(r.reductive, r.semisimple);
        let oracle = g2.algebra().ad_matrix(&x).minimal_polynomial().is_square_free();
        prop_assert_eq!(r.semisimple, oracle);
    }

    #[test]
    fn scale_invariance(c in small_element(), p in 1i64..9, q in 1i64..9, neg: bool) {
        let g2 = G2::shared();
        let x = Element::from_ints(Field::Rational, &c.try_into().unwrap());
        let lambda = Rational::new((if neg { -p } else { p }).into(), q.into());
        let y = x.scale(&Field::Rational.from_rational(lambda));
        prop_assert_eq!(
            classify_element(g2, &x).unwrap().aut_type,
            classify_element(g2, &y).unwrap().aut_type
        );
    }
}
