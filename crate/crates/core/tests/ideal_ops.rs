use std::sync::Arc;

use proptest::prelude::*;
use sqfree_core::criteria::initial_forms;
use sqfree_core::frobenius::fedder_colon;
use sqfree_core::ideal_ops::{
    bracket_power, colon_ideal, dehomogenize, homogenize_w, intersect, monomial_dimension, power, saturate,
    symbolic_power_prime,
};
use sqfree_core::monomial_ideal::minimalize;
use sqfree_core::parse::parse_polynomial;
use sqfree_core::{Fp, IdealPresentation, Monomial, MonomialIdeal, MonomialOrder, Polynomial, Ring, Tiebreak};

fn ring(p: u64, n: usize) -> Arc<Ring> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    Ring::new(p, &names).unwrap()
}

fn build(r: &Arc<Ring>, raw: &[(Vec<u32>, u64)]) -> Polynomial {
    let n = r.nvars();
    Polynomial::from_terms(r, raw.iter().map(|(e, c)| (Monomial::from_exponents(&e[..n]), r.field().element(*c)))).unwrap()
}

fn poly_strategy(max_exp: u32) -> impl Strategy<Value = Vec<(Vec<u32>, u64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, 3), 1u64..3), 1..4)
}

fn ideal_from(r: &Arc<Ring>, raw: &[Vec<(Vec<u32>, u64)>]) -> IdealPresentation {
    IdealPresentation::new(r, raw.iter().map(|g| build(r, g)).collect()).unwrap()
}

fn monomials(r: &Arc<Ring>, gens: &[Vec<u32>]) -> IdealPresentation {
    let n = r.nvars();
    IdealPresentation::new(
        r,
        gens.iter().map(|e| Polynomial::monomial(r, Monomial::from_exponents(&e[..n]), Fp::ONE)).collect(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn intersection_of_monomial_ideals_is_pairwise_lcm(
        n in 1usize..=3,
        a in prop::collection::vec(prop::collection::vec(0u32..=3, 3), 1..=4),
        b in prop::collection::vec(prop::collection::vec(0u32..=3, 3), 1..=4),
    ) {
        let r = ring(2, n);
        let o = MonomialOrder::Grevlex;
        let meet = intersect(&monomials(&r, &a), &monomials(&r, &b), &o).unwrap();
        let mut lcms = Vec::new();
        for x in &a {
            for y in &b {
                lcms.push(Monomial::from_exponents(&x[..n]).lcm(&Monomial::from_exponents(&y[..n])));
            }
        }
        let want = MonomialIdeal::new(&r, minimalize(lcms)).unwrap();
        prop_assert_eq!(meet.initial_ideal(&o).unwrap(), want);
        prop_assert!(meet.generators().iter().all(Polynomial::is_monomial));
    }

    #[test]
    fn saturation_contains_and_is_idempotent(
        pi in 0usize..2, n in 1usize..=3,
        gens in prop::collection::vec(poly_strategy(2), 1..=2),
        f in poly_strategy(1),
    ) {
        let r = ring([2, 3][pi], n);
        let o = MonomialOrder::Grevlex;
        let i = ideal_from(&r, &gens);
        let f = build(&r, &f);
        prop_assume!(!f.is_zero());
        let s = saturate(&i, &f, &o).unwrap();
        prop_assert!(s.ideal.contains_ideal(&i, &o).unwrap());
        let again = saturate(&s.ideal, &f, &o).unwrap();
        prop_assert!(again.ideal.same_ideal(&s.ideal, &o).unwrap());
        prop_assert_eq!(again.exponent, 0);
    }

    #[test]
    fn frobenius_power_lies_in_ordinary_power(
        pi in 0usize..2, n in 1usize..=3,
        gens in prop::collection::vec(poly_strategy(2), 1..=3),
    ) {
        let r = ring([2, 3][pi], n);
        let o = MonomialOrder::Grevlex;
        let i = ideal_from(&r, &gens);
        let p = r.characteristic();
        prop_assert!(power(&i, p).unwrap().contains_ideal(&bracket_power(&i, 1).unwrap(), &o).unwrap());
    }

    #[test]
    fn homogenization_round_trips(
        pi in 0usize..2, n in 1usize..=3,
        gens in prop::collection::vec(poly_strategy(3), 1..=2),
        w in prop::collection::vec(1u32..=4, 3),
        lex in any::<bool>(),
    ) {
        let r = ring([3, 5][pi], n);
        let o = if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
        let i = ideal_from(&r, &gens);
        let w = &w[..n];
        let h = homogenize_w(&i, w, &o).unwrap();
        let mut wt = w.to_vec();
        wt.push(1);
        let back: Vec<Polynomial> = h.generators().iter().map(|f| dehomogenize(f, &r).unwrap()).collect();
        for (f, g) in h.generators().iter().zip(&back) {
            prop_assert!(f.is_weighted_homogeneous(&wt));
            prop_assert!(i.member(g, &o).unwrap());
        }
        let back = IdealPresentation::new(&r, back).unwrap();
        prop_assert!(back.same_ideal(&i, &o).unwrap());
    }

    #[test]
    fn weight_order_initial_ideal_refines_initial_forms(
        n in 1usize..=3,
        gens in prop::collection::vec(poly_strategy(3), 1..=2),
        w in prop::collection::vec(1u32..=5, 3),
        lex in any::<bool>(),
    ) {
        let r = ring(7, n);
        let tie = if lex { Tiebreak::Lex } else { Tiebreak::Grevlex };
        let tie_order = if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
        let i = ideal_from(&r, &gens);
        let w = &w[..n];
        let direct = i.initial_ideal(&MonomialOrder::weight(w.to_vec(), tie)).unwrap();
        let forms = IdealPresentation::new(&r, initial_forms(&i, w, &tie_order).unwrap()).unwrap();
        prop_assert_eq!(forms.initial_ideal(&tie_order).unwrap(), direct);
    }
}

#[test]
fn fedder_colon_ignores_the_presentation() {
    let r = ring(2, 4);
    let o = MonomialOrder::Grevlex;
    let p = |s: &str| parse_polynomial(&r, s).unwrap();
    let a = IdealPresentation::new(&r, vec![p("x1*x4 - x2*x3"), p("x1^2 + x3*x4")]).unwrap();
    let b = IdealPresentation::new(
        &r,
        vec![p("x1*x4 - x2*x3 + x1^2 + x3*x4"), p("x1^2 + x3*x4"), p("x2*(x1*x4 - x2*x3)")],
    )
    .unwrap();
    assert!(a.same_ideal(&b, &o).unwrap());
    let ca = fedder_colon(&a, &o).unwrap();
    let cb = fedder_colon(&b, &o).unwrap();
    assert!(ca.same_ideal(&cb, &o).unwrap());
    let gb_presentation = IdealPresentation::new(&r, a.reduced_gb(&o).unwrap().elements().to_vec()).unwrap();
    assert!(fedder_colon(&gb_presentation, &o).unwrap().same_ideal(&ca, &o).unwrap());
}

#[test]
fn symbolic_power_contains_ordinary_power() {
    let r = Ring::new(3, &["a", "b", "c", "d"]).unwrap();
    let o = MonomialOrder::Grevlex;
    let p = |s: &str| parse_polynomial(&r, s).unwrap();
    let cubic = IdealPresentation::new(&r, vec![p("a*c - b^2"), p("b*d - c^2"), p("a*d - b*c")]).unwrap();
    let sym = symbolic_power_prime(&cubic, 2, &p("a"), &o).unwrap();
    assert!(sym.same_ideal(&power(&cubic, 2).unwrap(), &o).unwrap());

    // The curve (t^3, t^4, t^5): the symbolic square is strictly larger.
    let s = Ring::new(3, &["x", "y", "z"]).unwrap();
    let q = |t: &str| parse_polynomial(&s, t).unwrap();
    let curve = IdealPresentation::new(&s, vec![q("y^2 - x*z"), q("x^3 - y*z"), q("z^2 - x^2*y")]).unwrap();
    let sym = symbolic_power_prime(&curve, 2, &q("x"), &o).unwrap();
    let sq = power(&curve, 2).unwrap();
    assert!(sym.contains_ideal(&sq, &o).unwrap());
    assert!(!sq.contains_ideal(&sym, &o).unwrap());
    let cone = IdealPresentation::new(&r, vec![p("a*d - b*c")]).unwrap();
    let sym = symbolic_power_prime(&cone, 3, &p("a"), &o).unwrap();
    assert!(sym.same_ideal(&power(&cone, 3).unwrap(), &o).unwrap());
}

#[test]
fn colon_by_an_ideal() {
    let r = ring(3, 2);
    let o = MonomialOrder::Lex;
    let p = |s: &str| parse_polynomial(&r, s).unwrap();
    let i = IdealPresentation::new(&r, vec![p("x1^2*x2"), p("x1*x2^2")]).unwrap();
    let j = IdealPresentation::new(&r, vec![p("x1"), p("x2")]).unwrap();
    let c = colon_ideal(&i, &j, &o).unwrap();
    assert_eq!(c.reduced_gb(&o).unwrap().display_elements(), ["x1*x2"]);
    let c = colon_ideal(&i, &IdealPresentation::new(&r, vec![p("x1*x2")]).unwrap(), &o).unwrap();
    assert_eq!(c.reduced_gb(&o).unwrap().display_elements(), ["x2", "x1"]);
}

#[test]
fn dimension_of_the_five_variable_initial_ideal() {
    let r = ring(5, 5);
    let m = |s: &str| sqfree_core::parse::parse_monomial(&r, s).unwrap();
    let init = MonomialIdeal::new(&r, vec![m("x1*x3"), m("x1*x2"), m("x2*x3")]).unwrap();
    assert_eq!(monomial_dimension(&init).unwrap(), 3);
}
