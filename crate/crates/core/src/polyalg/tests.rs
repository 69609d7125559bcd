use std::sync::Arc;

use proptest::prelude::*;

use super::*;

fn ring(names: &[&str]) -> Arc<Ring> {
    Ring::new(names.iter().copied())
}

fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

fn show(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(ToString::to_string).collect()
}

fn unlimited() -> Budget {
    Budget::unlimited()
}

#[test]
fn groebner_examples() {
    let r = ring(&["x", "y"]);
    let gb = groebner(&ideal(&r, &["x^2 - y", "y"]), &MonomialOrder::Lex).unwrap();
    assert_eq!(show(&gb), ["y", "x^2"]);
    assert!(groebner(&Ideal::zero(&r), &MonomialOrder::Grevlex).unwrap().is_empty());
    let gb = groebner(&ideal(&r, &["x", "x - 1"]), &MonomialOrder::Grevlex).unwrap();
    assert_eq!(show(&gb), ["1"]);
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x", "y"]);
    let i = ideal(&r, &["x^2 - y"]);
    let gb = groebner(&i, &MonomialOrder::Lex).unwrap();
    let p = parse_poly("x^2*y", &r).unwrap();
    assert_eq!(normal_form(&p, &gb, &MonomialOrder::Lex).unwrap().to_string(), "y^2");
    let member = parse_poly("x^4 - y^2", &r).unwrap();
    assert!(normal_form(&member, &gb, &MonomialOrder::Lex).unwrap().is_zero());
    let gy = groebner(&ideal(&r, &["y"]), &MonomialOrder::Grevlex).unwrap();
    let x = parse_poly("x", &r).unwrap();
    assert_eq!(normal_form(&x, &gy, &MonomialOrder::Grevlex).unwrap(), x);
}

#[test]
fn normal_form_rejects_foreign_ring() {
    let r = ring(&["x", "y"]);
    let s = ring(&["a"]);
    let gb = groebner(&ideal(&r, &["x"]), &MonomialOrder::Grevlex).unwrap();
    let p = parse_poly("a", &s).unwrap();
    assert!(matches!(
        normal_form(&p, &gb, &MonomialOrder::Grevlex),
        Err(crate::Error::RingMismatch)
    ));
}

#[test]
fn twisted_cubic_elimination() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["y - x^2", "z - x^3"]);
    let e = eliminate(&i, &[0]).unwrap();
    assert!(e.generators().iter().all(|g| !g.variables().contains(&0)));
    let target = parse_poly("z^2 - y^3", &r).unwrap();
    let gb = e.groebner(&MonomialOrder::Grevlex, unlimited()).unwrap();
    assert!(gb.contains(&target, unlimited()).unwrap());
    assert!(eliminate(&Ideal::zero(&r), &[0, 1]).unwrap().is_zero_ideal());
}

#[test]
fn dominant_product_map_has_zero_elimination_ideal() {
    let r = ring(&["a", "b", "c"]);
    let e = eliminate(&ideal(&r, &["c - a*b"]), &[0, 1]).unwrap();
    assert!(e.is_zero_ideal());
}

#[test]
fn saturation_examples() {
    let r = ring(&["x", "y"]);
    let x = parse_poly("x", &r).unwrap();
    let y = parse_poly("y", &r).unwrap();
    let s = saturate(&ideal(&r, &["x*y"]), &x).unwrap();
    assert!(s.same_ideal(&ideal(&r, &["y"]), unlimited()).unwrap());
    let s = saturate(&ideal(&r, &["x"]), &y).unwrap();
    assert!(s.same_ideal(&ideal(&r, &["x"]), unlimited()).unwrap());
    assert!(matches!(
        saturate(&ideal(&r, &["x"]), &Polynomial::zero(&r)),
        Err(crate::Error::ZeroSaturator)
    ));
}

#[test]
fn saturation_of_shifted_rank_one_locus() {
    let r = ring(&["xi", "eta", "x_1", "x_2", "y_1", "y_2"]);
    let i = ideal(&r, &["x_1*y_2 - x_2*y_1", "xi*y_1 - eta*x_1", "xi*y_2 - eta*x_2"]);
    let eta = parse_poly("eta", &r).unwrap();
    let s = saturate(&i, &eta).unwrap();
    let j = ideal(&r, &["eta*x_1 - xi*y_1", "eta*x_2 - xi*y_2"]);
    // after inverting η both ideals say x = (ξ/η)·y
    let sj = saturate(&j, &eta).unwrap();
    assert!(s.same_ideal(&sj, unlimited()).unwrap());
    // the 2×2 minors of [[ξ,x_1,x_2],[η,y_1,y_2]] are prime, so nothing changes
    assert!(s.same_ideal(&i, unlimited()).unwrap());
    // (ηx_i − ξy_i) alone has the extra component η = ξ = 0
    assert!(!j.same_ideal(&sj, unlimited()).unwrap());
    let minor = parse_poly("x_1*y_2 - x_2*y_1", &r).unwrap();
    let gbj = j.groebner(&MonomialOrder::Grevlex, unlimited()).unwrap();
    assert!(!gbj.contains(&minor, unlimited()).unwrap());
}

#[test]
fn dimension_examples() {
    let r = ring(&["x", "y", "z"]);
    assert_eq!(ideal_dimension(&Ideal::zero(&r)).unwrap(), 3);
    let r2 = ring(&["x", "y"]);
    assert_eq!(ideal_dimension(&ideal(&r2, &["x*y"])).unwrap(), 1);
    assert_eq!(ideal_dimension(&ideal(&r2, &["1"])).unwrap(), -1);
    assert_eq!(ideal_dimension(&ideal(&r2, &["x", "y - 1"])).unwrap(), 0);
}

#[test]
fn inconsistency_examples() {
    let r = ring(&["x"]);
    assert!(is_inconsistent(&ideal(&r, &["x", "x - 1"])).unwrap());
    assert!(!is_inconsistent(&ideal(&r, &["x^2 + 1"])).unwrap());
    assert!(!is_inconsistent(&Ideal::zero(&r)).unwrap());
}

#[test]
fn budget_exhaustion_is_reported() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x*y - z^2 + 1", "y*z - x^2", "x*z - y^2 + x"]);
    let err = i.groebner(&MonomialOrder::Grevlex, Budget::new(3)).unwrap_err();
    assert!(matches!(err, crate::Error::BudgetExhausted(3)), "{err:?}");
}

#[test]
fn ideal_file_round_trip() {
    let json = r#"{"vars": ["x", "y"], "weights": [1, 2], "gens": ["x^2 - 1/2*y", "0"]}"#;
    let file: IdealFile = serde_json::from_str(json).unwrap();
    let i = Ideal::from_file(&file).unwrap();
    assert_eq!(i.ring().weights(), &[1, 2]);
    assert_eq!(i.generators()[0].to_string(), "x^2 - 1/2*y");
    assert!(i.generators()[0].is_weighted_homogeneous_of(2));
    let back = Ideal::from_file(&i.to_file()).unwrap();
    assert_eq!(back.generators(), i.generators());
}

/// Symmetric n×n matrix of fresh variables `a_i_j` (i ≤ j).
fn symmetric_ring(n: usize) -> (Arc<Ring>, Vec<Vec<usize>>) {
    let mut names = Vec::new();
    let mut idx = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            idx[i][j] = names.len();
            idx[j][i] = names.len();
            names.push(format!("a_{}_{}", i + 1, j + 1));
        }
    }
    (Ring::new(names), idx)
}

fn det(m: &[Vec<Polynomial>]) -> Polynomial {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let ring = m[0][0].ring().clone();
    let mut acc = Polynomial::zero(&ring);
    for c in 0..m.len() {
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][c] * &det(&minor);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn minors(ring: &Arc<Ring>, idx: &[Vec<usize>], t: usize) -> Vec<Polynomial> {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    let n = idx.len();
    let mut out = Vec::new();
    for rows in subsets(n, t) {
        for cols in subsets(n, t) {
            let m: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| Polynomial::var(ring, idx[r][c])).collect())
                .collect();
            let d = det(&m);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

#[test]
fn symmetric_rank_loci_dimensions() {
    for d in 1..=3usize {
        let (r, idx) = symmetric_ring(d);
        for t in 1..=d {
            let rank = t - 1;
            let i = Ideal::new(&r, minors(&r, &idx, t)).unwrap();
            let dim = i.dimension(unlimited()).unwrap();
            let expected = (rank * d) as i64 - (rank * rank.saturating_sub(1) / 2) as i64;
            assert_eq!(dim, expected, "d={d} t={t}");
        }
    }
}

#[test]
fn symmetric_rank_one_locus_is_image_of_squaring() {
    // oracle: v ↦ v vᵀ, eliminate v
    let d = 3;
    let (r, idx) = symmetric_ring(d);
    let mut names: Vec<String> = (1..=d).map(|i| format!("v_{i}")).collect();
    names.extend(r.names().iter().cloned());
    let big = Ring::new(names);
    let mut graph = Vec::new();
    for i in 0..d {
        for j in i..d {
            let a = Polynomial::var(&big, d + idx[i][j]);
            let vv = &Polynomial::var(&big, i) * &Polynomial::var(&big, j);
            graph.push(&a - &vv);
        }
    }
    let image = Ideal::new(&big, graph)
        .unwrap()
        .eliminate(&(0..d).collect::<Vec<_>>(), unlimited())
        .unwrap()
        .rename_into(&r)
        .unwrap();
    let minors2 = Ideal::new(&r, minors(&r, &idx, 2)).unwrap();
    assert!(image.same_ideal(&minors2, unlimited()).unwrap());
    assert_eq!(image.dimension(unlimited()).unwrap(), 3);
}

fn arb_poly(r: Arc<Ring>) -> impl Strategy<Value = Polynomial> {
    let n = r.nvars();
    prop::collection::vec((prop::collection::vec(0u16..3, n), -3i64..=3), 1..4).prop_map(move |terms| {
        let terms = terms
            .into_iter()
            .filter(|(e, _)| e.iter().map(|&x| x as u32).sum::<u32>() <= 2)
            .map(|(e, c)| (Monomial::from_exponents(&e), Rational::from_integer(c.into())))
            .collect();
        Polynomial::from_terms(&r, terms)
    })
}

fn arb_ideal() -> impl Strategy<Value = Ideal> {
    let r = ring(&["x", "y", "z"]);
    prop::collection::vec(arb_poly(r.clone()), 1..4).prop_map(move |gens| Ideal::new(&r, gens).unwrap())
}

fn spoly(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let lf = leading_monomial(f, order).unwrap();
    let lg = leading_monomial(g, order).unwrap();
    let cf = f.terms().iter().find(|(m, _)| *m == lf).unwrap().1.clone();
    let cg = g.terms().iter().find(|(m, _)| *m == lg).unwrap().1.clone();
    let l = lf.lcm(&lg);
    &f.mul_monomial(&l.div(&lf), &cf.recip()) - &g.mul_monomial(&l.div(&lg), &cg.recip())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn returned_bases_satisfy_buchberger_criterion(i in arb_ideal()) {
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let gb = groebner(&i, &order).unwrap();
            for a in 0..gb.len() {
                for b in a + 1..gb.len() {
                    let s = spoly(&gb[a], &gb[b], &order);
                    prop_assert!(normal_form(&s, &gb, &order).unwrap().is_zero());
                }
            }
            // reduced: monic, no term divisible by another leading monomial
            let lms: Vec<Monomial> = gb.iter().map(|p| leading_monomial(p, &order).unwrap()).collect();
            for (k, p) in gb.iter().enumerate() {
                let lc = &p.terms().iter().find(|(m, _)| *m == lms[k]).unwrap().1;
                prop_assert_eq!(lc, &Rational::from_integer(1.into()));
                for (m, _) in p.terms() {
                    for (l, lm) in lms.iter().enumerate() {
                        prop_assert!(l == k && m == lm || !lm.divides(m));
                    }
                }
            }
            // same ideal: generators reduce to zero
            for g in i.generators() {
                prop_assert!(normal_form(g, &gb, &order).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn two_orders_define_the_same_ideal(i in arb_ideal()) {
        let a = groebner(&i, &MonomialOrder::Grevlex).unwrap();
        let b = groebner(&i, &MonomialOrder::Lex).unwrap();
        for p in &a {
            prop_assert!(normal_form(p, &b, &MonomialOrder::Lex).unwrap().is_zero());
        }
        for p in &b {
            prop_assert!(normal_form(p, &a, &MonomialOrder::Grevlex).unwrap().is_zero());
        }
    }

    #[test]
    fn saturation_contains_and_is_idempotent(i in arb_ideal(), h in arb_poly(ring(&["x", "y", "z"]))) {
        prop_assume!(!h.is_zero());
        let h = h.rename_into(i.ring()).unwrap();
        let s = i.saturate(&h, unlimited()).unwrap();
        prop_assert!(i.is_contained_in(&s, unlimited()).unwrap());
        let s2 = s.saturate(&h, unlimited()).unwrap();
        prop_assert!(s.same_ideal(&s2, unlimited()).unwrap());
    }
}
