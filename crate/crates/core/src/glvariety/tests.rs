use proptest::prelude::*;

use super::*;
use crate::equimap::quadric_discriminant;

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn free() -> Budget {
    Budget::unlimited()
}

/// `(α, β, v) ↦ (αv, βv)`.
fn scaled_pair() -> WeightedMap {
    WeightedMap::parse(
        vec![FormSymbol::new("alpha", 0), FormSymbol::new("beta", 0), FormSymbol::new("v", 1)],
        vec![1, 1],
        vec![],
        &["alpha*v", "beta*v"],
    )
    .unwrap()
}

fn square() -> WeightedMap {
    WeightedMap::parse_auto(&[1], &[2], &["x^2"]).unwrap()
}

fn gens(i: &Ideal) -> Vec<String> {
    i.generators().iter().map(ToString::to_string).collect()
}

#[test]
fn ambient_coordinates() {
    let fam = LevelFamily::affine(&[1, 2]).unwrap();
    assert_eq!(fam.ambient_ring(2).names(), ["x_1", "x_2", "f_1_1", "f_1_2", "f_2_2"]);
}

#[test]
fn delta_examples() {
    assert_eq!(delta(&LevelFamily::affine(&[2]).unwrap(), 3, free()).unwrap(), 6);
    assert_eq!(delta(&LevelFamily::rank_one_pairs(), 3, free()).unwrap(), 4);
    for d in 1..=3 {
        assert_eq!(delta(&LevelFamily::point(&[1, 2]).unwrap(), d, free()).unwrap(), 0);
    }
    let range = delta_range(&LevelFamily::rank_one_pairs(), 1..=4, free());
    let values: Vec<(u32, i64)> = range.into_iter().map(|(d, r)| (d, r.unwrap())).collect();
    assert_eq!(values, [(1, 2), (2, 3), (3, 4), (4, 5)]);
}

#[test]
fn rank_one_family_is_the_scaled_pair_image() {
    let fam = LevelFamily::rank_one_pairs();
    for n in 2..=3 {
        let orbit = fam.at_level(n, free()).unwrap();
        let image = image_closure_level(&scaled_pair(), n, free()).unwrap();
        assert_eq!(image.ring().names(), orbit.ring().names());
        assert!(image.ideal.same_ideal(&orbit.ideal, free()).unwrap(), "n={n}");
    }
    let level2 = fam.at_level(2, free()).unwrap();
    let minor = parse_poly("x_1*y_2 - x_2*y_1", level2.ring()).unwrap();
    assert_eq!(level2.ideal.generators(), [minor]);
}

#[test]
fn fit_examples() {
    let fit = fit_delta(&LevelFamily::rank_one_pairs(), &[2, 3], &[4], free()).unwrap();
    assert_eq!(fit.polynomial.to_string(), "d + 1");
    assert!(fit.agrees() && fit.within_degree_bound());

    let fit = fit_delta(&LevelFamily::affine(&[1]).unwrap(), &[1, 2], &[3], free()).unwrap();
    assert_eq!(fit.polynomial.to_string(), "d");

    let fit = fit_delta(&LevelFamily::affine(&[2]).unwrap(), &[2, 3, 4], &[5], free()).unwrap();
    assert_eq!(fit.polynomial.to_string(), "1/2*d^2 + 1/2*d");
    assert!(fit.agrees());
    assert_eq!(fit.degree, 2);

    assert!(fit_delta(&LevelFamily::affine(&[1]).unwrap(), &[2], &[1], free()).is_err());
    assert!(fit_delta(&LevelFamily::affine(&[1]).unwrap(), &[], &[1], free()).is_err());
}

#[test]
fn image_closure_examples() {
    let id = WeightedMap::identity(vec![FormSymbol::new("f", 2)]).unwrap();
    assert!(image_closure_level(&id, 2, free()).unwrap().ideal.is_zero_ideal());

    let diag = WeightedMap::parse_auto(&[1], &[1, 1], &["x", "x"]).unwrap();
    let img = image_closure_level(&diag, 2, free()).unwrap();
    let expected = Ideal::parse(img.ring(), &["x_1 - y_1", "x_2 - y_2"]).unwrap();
    assert!(img.ideal.same_ideal(&expected, free()).unwrap());

    let img = image_closure_level(&scaled_pair(), 2, free()).unwrap();
    let expected = Ideal::parse(img.ring(), &["x_1*y_2 - x_2*y_1"]).unwrap();
    assert!(img.ideal.same_ideal(&expected, free()).unwrap());
}

#[test]
fn membership_examples() {
    let phi = quadric_discriminant();
    let z = Ring::new(["z1", "z2"]);
    let x4 = form_point(&parse_poly("z1^4", &z).unwrap(), 4, 2).unwrap();
    assert_eq!(x4, [q(1), q(0), q(0), q(0), q(0)]);
    match image_membership(&phi, 2, &x4, free()).unwrap() {
        Membership::Member(Some(w)) => {
            let e = instantiate(&phi, 2).unwrap();
            let out: Vec<Rational> = e.outputs.iter().map(|p| p.eval(&w)).collect();
            assert_eq!(out, x4);
        }
        other => panic!("{other}"),
    }
    let zero = vec![q(0); 5];
    assert!(matches!(image_membership(&phi, 2, &zero, free()).unwrap(), Membership::Member(_)));
    assert!(matches!(
        image_membership(&phi, 2, &zero[..3], free()),
        Err(Error::Arity { expected: 5, got: 3 })
    ));
}

#[test]
fn membership_distinguishes_closure_points() {
    // (α, v) ↦ (v, αv) misses (0, b) with b ≠ 0 but its closure is everything
    let f = WeightedMap::parse(
        vec![FormSymbol::new("alpha", 0), FormSymbol::new("v", 1)],
        vec![1, 1],
        vec![],
        &["v", "alpha*v"],
    )
    .unwrap();
    assert_eq!(image_membership(&f, 1, &[q(0), q(1)], free()).unwrap(), Membership::ClosureOnly);
    assert!(matches!(
        image_membership(&f, 1, &[q(2), q(1)], free()).unwrap(),
        Membership::Member(_)
    ));
    let g = WeightedMap::parse_auto(&[1], &[1, 1], &["x", "x"]).unwrap();
    assert_eq!(image_membership(&g, 1, &[q(1), q(2)], free()).unwrap(), Membership::NonMember);
}

#[test]
fn random_quartics_versus_closure() {
    let phi = quadric_discriminant();
    let closure = image_closure_level(&phi, 2, free()).unwrap();
    // source dimension 9 exceeds target dimension 5: the closure is everything
    assert!(closure.ideal.is_zero_ideal());
    for seed in 0..4i64 {
        let point: Vec<Rational> = (0..5).map(|k| q((seed * 5 + k * 3) % 7 - 3)).collect();
        let m = image_membership(&phi, 2, &point, free()).unwrap();
        assert!(matches!(m, Membership::Member(_) | Membership::ClosureOnly), "{m}");
    }
}

#[test]
fn mapping_space_examples() {
    let lam: PartitionTuple = "[[1]]".parse().unwrap();
    let m = mapping_space(&lam, &LevelFamily::rank_one_pairs(), 3, free()).unwrap();
    assert_eq!(m.symbols.len(), 2);
    assert!(m.ideal.is_zero_ideal());
    assert!(m.stabilized);

    let m = mapping_space(&lam, &LevelFamily::affine(&[2]).unwrap(), 3, free()).unwrap();
    assert_eq!(m.symbols.len(), 1);
    assert!(m.ideal.is_zero_ideal());

    let m = mapping_space(&"[[2]]".parse().unwrap(), &LevelFamily::affine(&[1]).unwrap(), 3, free()).unwrap();
    assert!(m.symbols.is_empty());

    // maps into the origin must vanish
    let m = mapping_space(&lam, &LevelFamily::point(&[1]).unwrap(), 2, free()).unwrap();
    assert_eq!(gens(&m.ideal), ["c1_1"]);
    assert!(m.stabilized);
}

#[test]
fn shift_examples() {
    let sh = shift_level(&LevelFamily::affine(&[1]).unwrap(), 1);
    for d in 1..=3 {
        let x = sh.at_level(d, free()).unwrap();
        assert_eq!(x.ring().nvars(), d as usize + 1);
        assert_eq!(x.ring().names()[0], "x_s1");
    }

    let sh = shift_level(&LevelFamily::rank_one_pairs(), 1);
    let x = sh.at_level(2, free()).unwrap();
    let gb = x.ideal.groebner(&MonomialOrder::Grevlex, free()).unwrap();
    for p in ["x_s1*y_1 - y_s1*x_1", "x_s1*y_2 - y_s1*x_2", "x_1*y_2 - x_2*y_1"] {
        assert!(gb.contains(&parse_poly(p, x.ring()).unwrap(), free()).unwrap(), "{p}");
    }
    let json = serde_json::to_string(&sh).unwrap();
    assert_eq!(serde_json::from_str::<LevelFamily>(&json).unwrap(), sh);
}

#[test]
fn minors_examples() {
    for n in 1..=3 {
        let origin = minors_stratum(0, n).unwrap();
        let point = LevelFamily::point(&[2]).unwrap().at_level(n, free()).unwrap();
        assert!(origin.ideal.same_ideal(&point.ideal, free()).unwrap());
        assert!(minors_stratum(n, n).unwrap().ideal.is_zero_ideal());
        assert!(minors_stratum(n + 1, n).unwrap().ideal.is_zero_ideal());
    }
    let r1 = minors_stratum(1, 3).unwrap();
    assert_eq!(r1.dimension(free()).unwrap(), 3);
    for n in 2..=3 {
        let image = image_closure_level(&square(), n, free()).unwrap();
        assert!(minors_stratum(1, n).unwrap().ideal.same_ideal(&image.ideal, free()).unwrap());
    }
}

#[test]
fn minors_form_a_chain() {
    for n in 1..=3 {
        let dims: Vec<i64> = (0..=n).map(|r| minors_stratum(r, n).unwrap().dimension(free()).unwrap()).collect();
        assert!(dims.windows(2).all(|w| w[0] < w[1]), "{dims:?}");
        for r in 0..n {
            let small = minors_stratum(r, n).unwrap();
            let big = minors_stratum(r + 1, n).unwrap();
            assert!(big.ideal.is_contained_in(&small.ideal, free()).unwrap());
        }
    }
}

#[test]
fn family_json() {
    let json = r#"{"tuple": [[1],[1]], "recipe": {"kind": "orbit", "templates": ["x_i*y_j - x_j*y_i"]}}"#;
    let fam: LevelFamily = serde_json::from_str(json).unwrap();
    assert_eq!(fam, LevelFamily::rank_one_pairs());
    let json = r#"{"tuple": [[2]], "recipe": {"kind": "minors", "rank": 1}}"#;
    let fam: LevelFamily = serde_json::from_str(json).unwrap();
    assert_eq!(delta(&fam, 3, free()).unwrap(), 3);
    let json = r#"{"tuple": [[1],[1]], "recipe": {"kind": "minors", "rank": 1}}"#;
    assert!(serde_json::from_str::<LevelFamily>(json).is_err());
    let json = r#"{"tuple": [[1,1]], "recipe": {"kind": "affine"}}"#;
    assert!(serde_json::from_str::<LevelFamily>(json).is_err());
    let fam = LevelFamily::image_of(&square()).unwrap();
    let back: LevelFamily = serde_json::from_str(&serde_json::to_string(&fam).unwrap()).unwrap();
    assert_eq!(back, fam);
    assert_eq!(delta(&fam, 3, free()).unwrap(), 3);
}

#[test]
fn orbit_templates_sort_indices() {
    let fam = LevelFamily::with_default_names(
        &[1, 2],
        Recipe::Orbit {
            templates: vec!["x_i*f_j_k - x_j*f_i_k".into()],
        },
    )
    .unwrap();
    let x = fam.at_level(2, free()).unwrap();
    let p = parse_poly("x_1*f_1_2 - x_2*f_1_1", x.ring()).unwrap();
    assert!(x.ideal.generators().contains(&p));
    assert_eq!(x.ideal.generators().len(), 2);
}

fn families() -> Vec<LevelFamily> {
    vec![
        LevelFamily::rank_one_pairs(),
        LevelFamily::symmetric_rank(1),
        LevelFamily::image_of(&scaled_pair()).unwrap(),
        LevelFamily::point(&[1, 2]).unwrap(),
    ]
}

#[test]
fn levels_embed_upwards() {
    for fam in families() {
        for n in 1..=2 {
            let lower = fam.at_level(n, free()).unwrap();
            let upper = fam.at_level(n + 1, free()).unwrap();
            let lifted = lower.ideal.rename_into(upper.ring()).unwrap();
            assert!(lifted.is_contained_in(&upper.ideal, free()).unwrap(), "{fam} at {n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn affine_delta_is_ambient_dimension(w in prop::collection::vec(1u32..=3, 1..=3), d in 1u32..=5) {
        let fam = LevelFamily::affine(&w).unwrap();
        prop_assert_eq!(delta(&fam, d, free()).unwrap() as u64, ambient_dimension(&w, d));
    }

    #[test]
    fn image_closure_contains_sampled_images(vals in prop::collection::vec(-4i64..=4, 6)) {
        for (f, n) in [(scaled_pair(), 2u32), (square(), 2), (quadric_discriminant(), 1)] {
            let closure = image_closure_level(&f, n, free()).unwrap();
            let e = instantiate(&f, n).unwrap();
            let p: Vec<Rational> = (0..e.ring.nvars()).map(|i| q(vals[i % vals.len()] + i as i64 % 3)).collect();
            let image: Vec<Rational> = e.outputs.iter().map(|o| o.eval(&p)).collect();
            prop_assert!(closure.ideal.generators().iter().all(|g| g.eval(&image).is_zero()));
        }
    }

    #[test]
    fn fitted_degree_respects_tuple_degree(w in prop::collection::vec(1u32..=2, 1..=2)) {
        let fam = LevelFamily::affine(&w).unwrap();
        let fit = fit_delta(&fam, &[1, 2, 3], &[4], free()).unwrap();
        prop_assert!(fit.within_degree_bound());
        prop_assert!(fit.agrees());
    }
}
