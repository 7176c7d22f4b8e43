mod oracle;

use std::cmp::Ordering;

use lisse_core::arith::{int, parse_polynomial, ratio, rising, Monomial, MonomialOrder, OrderKind, Polynomial, Scalar, VarId, VarNames};
use lisse_core::diffalg::{jet_ideal, DifferentialRing, Presentation};
use lisse_core::groebner::{buchberger, buchberger_in, ideal_contains, krull_dimension, quotient_basis};
use lisse_core::models::{
    c2_image_of, gram_matrix, graded_dims_jet_vs_pbw, kirillov_kostant, lisse_verdict, partitions, singular_levels,
    LieAlgebraData, VirasoroModule, VirasoroParams,
};
use lisse_core::vpa::{exact_division, poisson_closure, radical_principal, validate_poisson};
use lisse_core::{Matrix, VpaContext};
use proptest::prelude::*;

fn var() -> impl Strategy<Value = VarId> {
    (1u32..=3, 1u32..=3).prop_map(|(g, l)| VarId::new(g, l))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((var(), 0u32..=2), 0..=3).prop_map(Monomial::from_exponents)
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(), scalar()), 0..=4).prop_map(Polynomial::from_terms)
}

fn base_poly(nvars: u32) -> impl Strategy<Value = Polynomial> {
    let mono = prop::collection::vec((1..=nvars, 0u32..=2), 0..=3)
        .prop_map(|e| Monomial::from_exponents(e.into_iter().map(|(g, k)| (VarId::base(g), k)).collect::<Vec<_>>()));
    prop::collection::vec((mono, -3i64..=3), 1..=3)
        .prop_map(|t| Polynomial::from_terms(t.into_iter().map(|(m, c)| (m, int(c)))))
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::new(OrderKind::Lex)),
        Just(MonomialOrder::new(OrderKind::DegRevLex)),
        Just(MonomialOrder::new(OrderKind::WeightedDegRevLex)),
        Just(MonomialOrder::with_ranking(OrderKind::Lex, vec![VarId::new(2, 2), VarId::new(3, 1)])),
    ]
}

fn weight_homogeneous(generators: u32, weight: u32) -> impl Strategy<Value = Polynomial> {
    let term = prop::collection::vec((1..=generators, 1..=weight), 0..=weight as usize).prop_map(move |parts| {
        // greedily fill to exactly `weight` with level-1 variables
        let mut exps = Vec::new();
        let mut left = weight;
        for (g, l) in parts {
            if l <= left {
                exps.push((VarId::new(g, l), 1));
                left -= l;
            }
        }
        if left > 0 {
            exps.push((VarId::base(1), left));
        }
        Monomial::from_exponents(exps)
    });
    prop::collection::vec((term, 1i64..=3), 1..=3).prop_map(|t| Polynomial::from_terms(t.into_iter().map(|(m, c)| (m, int(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, .. ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_roundtrip(p in poly()) {
        let names = VarNames::new(Vec::new()).unwrap();
        let text = p.to_string();
        let back = parse_polynomial(&text, &names).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn order_axioms(o in order(), a in monomial(), b in monomial(), c in monomial()) {
        prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
        prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
        if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
            prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
        }
        prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), o.cmp(&a, &b));
        prop_assert_ne!(o.cmp(&Monomial::one(), &a), Ordering::Greater);
    }

    #[test]
    fn derivation_is_leibniz(p in poly(), q in poly()) {
        let ring = DifferentialRing::free(3);
        prop_assert_eq!(ring.derive(&(&p * &q)), &(&ring.derive(&p) * &q) + &(&p * &ring.derive(&q)));
    }

    #[test]
    fn derivation_raises_weight(p in weight_homogeneous(3, 4)) {
        let d = DifferentialRing::free(3).derive(&p);
        prop_assert!(d.is_zero() || (d.is_weight_homogeneous() && d.weight() == Some(5)));
    }

    #[test]
    fn derive_n_closed_form(g in 1u32..=3, level in 1u32..=4, n in 0u32..=5) {
        let got = DifferentialRing::free(3).derive_n(&Polynomial::x(g, level), n);
        prop_assert_eq!(got, Polynomial::x(g, level + n).scale(&rising(level, n)));
    }

    #[test]
    fn jet_generators_stay_homogeneous(p in weight_homogeneous(2, 2), m in 0u32..=3) {
        let base: Polynomial = Polynomial::from_terms(p.terms().map(|(mono, c)| {
            let exps: Vec<(VarId, u32)> = mono.exponents().iter().map(|(v, e)| (VarId::base(v.generator), *e)).collect();
            (Monomial::from_exponents(exps), c.clone())
        }));
        prop_assume!(base.is_homogeneous());
        let pres = Presentation::new(2, vec![base]).unwrap();
        for g in jet_ideal(&pres, m).generators() {
            prop_assert!(g.is_weight_homogeneous());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, .. ProptestConfig::default() })]

    #[test]
    fn groebner_is_deterministic(gens in prop::collection::vec(base_poly(3), 1..=3), o in order()) {
        prop_assert_eq!(buchberger(&gens, &o), buchberger(&gens, &o));
    }

    #[test]
    fn dimension_is_monotone(gens in prop::collection::vec(base_poly(3), 1..=3), extra in base_poly(3)) {
        let o = MonomialOrder::default();
        let vars: Vec<VarId> = (1..=3).map(VarId::base).collect();
        let before = krull_dimension(&buchberger_in(vars.iter().copied(), &gens, &o)).krull_dimension;
        let mut more = gens.clone();
        more.push(extra);
        let after = krull_dimension(&buchberger_in(vars.iter().copied(), &more, &o)).krull_dimension;
        prop_assert!(after <= before);
    }

    #[test]
    fn zero_dimensional_iff_finite_quotient(gens in prop::collection::vec(base_poly(2), 1..=3)) {
        let gb = buchberger(&gens, &MonomialOrder::default());
        let dim = krull_dimension(&gb);
        let finite = quotient_basis(&gb);
        prop_assert_eq!(dim.zero_dimensional, finite.is_ok());
        if let Ok(b) = finite {
            prop_assert_eq!(dim.quotient_dimension, Some(b.len() as u64));
        }
    }

    #[test]
    fn radical_is_euler_stable(factors in prop::collection::vec((base_poly(2), 1u32..=3), 1..=2)) {
        // products of homogeneous factors are homogeneous, hence Euler-stable
        let mut p = Polynomial::one();
        for (f, e) in &factors {
            let top = f.degree().unwrap_or(0);
            let h = Polynomial::from_terms(f.terms().filter(|(m, _)| m.degree() == top).map(|(m, c)| (m.clone(), c.clone())));
            p = &p * &h.pow(*e);
        }
        prop_assume!(!p.is_zero() && !p.is_constant());
        let euler = |q: &Polynomial| q.apply_derivation(Polynomial::var);
        prop_assert!(exact_division(&euler(&p), &p).is_some());
        let r = radical_principal(&p).unwrap();
        prop_assert!(exact_division(&euler(&r), &r).is_some());
        prop_assert!(exact_division(&r.pow(3).pow(2), &r).is_some());
        prop_assert!(exact_division(&p, &r).is_some());
    }

    #[test]
    fn casimir_radicals_are_poisson_stable(k in 1u32..=3, e in 1u32..=2) {
        let ctx = VpaContext::free(kirillov_kostant(&LieAlgebraData::sl2()).unwrap()).unwrap();
        let (ee, h, f) = (Polynomial::x(1, 1), Polynomial::x(2, 1), Polynomial::x(3, 1));
        let casimir = &(&ee * &f).scale(&int(2)) + &(&h * &h).scale(&ratio(1, 2));
        let p = &casimir.pow(k) * &h.pow(e);
        let r = radical_principal(&p).unwrap();
        let gb = poisson_closure(&ctx, std::slice::from_ref(&r)).unwrap();
        for g in gb.basis() {
            for a in [&ee, &h, &f] {
                prop_assert!(ideal_contains(&gb, &[ctx.bracket(a, g).unwrap()]));
            }
        }
        prop_assert_eq!(poisson_closure(&ctx, gb.basis()).unwrap(), gb);
    }

    #[test]
    fn sl2_closures_are_stable_and_idempotent(g in base_poly(3)) {
        prop_assume!(!g.is_constant());
        let ctx = VpaContext::free(kirillov_kostant(&LieAlgebraData::sl2()).unwrap()).unwrap();
        let gb = poisson_closure(&ctx, &[g]).unwrap();
        for b in gb.basis() {
            for a in 1..=3 {
                prop_assert!(gb.contains(&ctx.bracket(&Polynomial::x(a, 1), b).unwrap()));
            }
        }
        prop_assert_eq!(poisson_closure(&ctx, gb.basis()).unwrap(), gb);
    }

    #[test]
    fn gram_is_symmetric_and_permutation_invariant(
        n in -9i64..=9, d in 1i64..=5, level in 0u32..=6, perm_seed in any::<u64>()
    ) {
        let c = ratio(n, d);
        let module = VirasoroModule::vacuum(VirasoroParams::new(c.clone()), 6);
        let g = gram_matrix(&module, level).unwrap();
        prop_assert!(g.is_symmetric());
        let mut basis = partitions(level, 2);
        let len = basis.len();
        for i in (1..len).rev() {
            basis.swap(i, (perm_seed as usize).wrapping_add(i * 7) % (i + 1));
        }
        let permuted = oracle::VacuumWords::new(c).gram(&basis);
        prop_assert_eq!(g.determinant(), permuted.determinant());
    }

    #[test]
    fn valid_lie_algebras_give_valid_structures(
        kind in 0u32..3, a in 1i64..=4, b in -4i64..=-1, c in 1i64..=3, extra in 0u32..=2
    ) {
        let data = random_lie_algebra(kind, int(a), int(b), int(c), extra);
        let ps = kirillov_kostant(&data).unwrap();
        prop_assert!(validate_poisson(ps).is_ok());
        prop_assert!(graded_dims_jet_vs_pbw(&data, 4).all_equal());
    }
}

// Rescaled sl2, a Heisenberg algebra, or an abelian one, plus `extra` central
// directions.
fn random_lie_algebra(kind: u32, a: Scalar, b: Scalar, c: Scalar, extra: u32) -> LieAlgebraData {
    let dim = 3 + extra;
    let names = (1..=dim).map(|i| format!("y{i}")).collect();
    let constants = match kind {
        0 => vec![
            (2, 1, 1, int(2) * &c),
            (2, 3, 3, int(-2) * &c),
            (1, 3, 2, &a * &b / &c),
        ],
        1 => vec![(1, 2, 3, a)],
        _ => vec![],
    };
    LieAlgebraData::new(dim, names, constants).unwrap()
}

#[test]
fn minimal_charges_degenerate_early() {
    for (p, q) in [(2, 3), (2, 5), (3, 4)] {
        let bound = ((p - 1) * (q - 1)) as u32;
        let module = VirasoroModule::vacuum(VirasoroParams::minimal(p, q).unwrap(), bound);
        let levels = singular_levels(&module);
        assert!(levels.first().is_some_and(|l| l.level <= bound), "({p}, {q})");
        let img = c2_image_of(&levels);
        if krull_dimension(&img).zero_dimensional {
            assert!(lisse_verdict(&img, &[1]).unwrap().lisse);
        }
    }
}

#[test]
fn gram_rank_matches_oracle_kernel() {
    let module = VirasoroModule::vacuum(VirasoroParams::minimal(3, 4).unwrap(), 6);
    let g = gram_matrix(&module, 6).unwrap();
    let o: Matrix = oracle::VacuumWords::new(ratio(1, 2)).gram(&partitions(6, 2));
    assert_eq!(g.rank(), o.rank());
    assert_eq!(g.rank(), 3);
}
