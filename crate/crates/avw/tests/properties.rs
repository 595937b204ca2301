//! Property tests for the structural invariants of the exact arithmetic.

use num_traits::{One, Zero};
use proptest::prelude::*;

use avw::scalar::ExactScalar;
use avw::{CDElement, Mat};

fn rational() -> impl Strategy<Value = ExactScalar> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| avw::scalar::frac(n, d))
}

fn element(dim: usize) -> impl Strategy<Value = CDElement> {
    prop::collection::vec(rational(), dim).prop_map(|coords| CDElement::new(coords).unwrap())
}

fn any_element() -> impl Strategy<Value = CDElement> {
    prop_oneof![element(1), element(2), element(4), element(8)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_multiplicative(ab in any_element().prop_flat_map(|a| {
        let dim = a.dim();
        (Just(a), element(dim))
    })) {
        let (a, b) = ab;
        prop_assert_eq!(a.cd_mul(&b).norm_sq(), a.norm_sq() * b.norm_sq());
    }

    #[test]
    fn conjugation_is_an_involutive_antiautomorphism(
        xy in element(8).prop_flat_map(|x| (Just(x), element(8)))
    ) {
        let (x, y) = xy;
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
        prop_assert_eq!(
            x.cd_mul(&y).conjugate(),
            y.conjugate().cd_mul(&x.conjugate())
        );
        prop_assert_eq!(x.conjugate().inner(&y.conjugate()), x.inner(&y));
    }

    #[test]
    fn trace_form_is_associative(
        xyz in element(8).prop_flat_map(|x| (Just(x), element(8), element(8)))
    ) {
        let (x, y, z) = xyz;
        prop_assert_eq!(x.cd_mul(&y).cd_mul(&z).re(), x.cd_mul(&y.cd_mul(&z)).re());
    }

    #[test]
    fn triple_product_identity(
        xy in element(4).prop_flat_map(|x| (Just(x), element(4)))
    ) {
        let (x, y) = xy;
        let xbar = x.conjugate();
        let rhs = &y.scale(&(avw::scalar::int(2) * xbar.inner(&y))) - &xbar.scale(&y.norm_sq());
        prop_assert_eq!(y.cd_mul(&x).cd_mul(&y), rhs.clone());
        prop_assert_eq!(y.cd_mul(&x.cd_mul(&y)), rhs);
    }

    #[test]
    fn rational_unit_lands_on_the_sphere(coords in prop::collection::vec(rational(), 3)) {
        let mut q = CDElement::zero(4).unwrap();
        for (k, c) in coords.into_iter().enumerate() {
            q.set_coord(k + 1, c);
        }
        let u = CDElement::rational_unit(&q).unwrap();
        prop_assert!(u.norm_sq().is_one());
    }

    #[test]
    fn kernel_vectors_are_annihilated_and_complete(
        entries in prop::collection::vec(rational(), 12)
    ) {
        let m = Mat::from_rows(entries.chunks(4).map(|r| r.to_vec()).collect());
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), 4);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|c| c.is_zero()));
        }
        let mut all = m.row_space_basis();
        all.extend(kernel);
        prop_assert_eq!(Mat::from_rows(all).rank(), 4);
    }

    #[test]
    fn spec_json_round_trips(
        q in prop::collection::vec(rational(), 3),
        n in 1usize..=4,
    ) {
        let mut im = CDElement::zero(4).unwrap();
        for (k, c) in q.into_iter().enumerate() {
            im.set_coord(k + 1, c);
        }
        let a = CDElement::rational_unit(&im).unwrap();
        let spec = avw::AlgebraSpec::isotope(n, a, CDElement::one(4).unwrap()).unwrap();
        let back = avw::AlgebraSpec::from_json(&spec.to_json()).unwrap();
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn malformed_spec_text_never_panics(text in ".{0,80}") {
        // arbitrary text either parses to a valid spec or errors cleanly
        let _ = avw::AlgebraSpec::from_json(&text);
    }

    #[test]
    fn argument_soup_never_panics(args in prop::collection::vec("[ -~]{0,12}", 0..6)) {
        // the CLI parser returns Ok or a usage error, never panics
        let _ = avw::cli::parse_args(&args);
    }
}
