use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sqfree_core::groebner::{normal_form, s_polynomial};
use sqfree_core::parse::parse_polynomial;
use sqfree_core::{macaulay, IdealPresentation, Monomial, MonomialOrder, Polynomial, Ring, Selection};

fn random_poly(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, max_deg: u32, max_terms: usize) -> Polynomial {
    let n = ring.nvars();
    let p = ring.characteristic() as u64;
    let k = rng.gen_range(1..=max_terms);
    let terms = (0..k).map(|_| {
        let d = rng.gen_range(0..=max_deg);
        let mut e = vec![0u32; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        (Monomial::from_exponents(&e), ring.field().element(rng.gen_range(1..p)))
    });
    Polynomial::from_terms(ring, terms).unwrap()
}

fn random_ideal(rng: &mut ChaCha8Rng, p: u64) -> IdealPresentation {
    let n = rng.gen_range(1..=3);
    let names: Vec<String> = ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect();
    let ring = Ring::new(p, &names).unwrap();
    let k = rng.gen_range(1..=3);
    let gens = (0..k).map(|_| random_poly(rng, &ring, 3, 4)).collect();
    IdealPresentation::new(&ring, gens).unwrap()
}

#[test]
fn agrees_with_linear_algebra_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut compared = 0;
    let mut attempts = 0;
    while compared < 240 {
        attempts += 1;
        assert!(attempts < 2000, "oracle failed to stabilize too often");
        let p = if rng.gen_bool(0.5) { 2 } else { 3 };
        let ideal = random_ideal(&mut rng, p);
        let order = if rng.gen_bool(0.5) { MonomialOrder::Grevlex } else { MonomialOrder::Lex };
        let Some(oracle) = macaulay::reduced_basis(ideal.ring(), ideal.generators(), &order, 14).unwrap() else {
            continue;
        };
        let gb = ideal.reduced_gb(&order).unwrap();
        assert_eq!(gb.elements(), oracle.as_slice(), "{:?} under {order}", ideal.generators());
        compared += 1;
    }
}

#[test]
fn random_selection_gives_identical_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..60 {
        let p = [2, 3, 5, 7][case % 4];
        let ideal = random_ideal(&mut rng, p);
        for order in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
            let normal = ideal.reduced_gb(&order).unwrap();
            for seed in 0..3 {
                let shuffled = ideal.reduced_gb_with(&order, Selection::Random(seed)).unwrap();
                assert_eq!(normal.display_elements(), shuffled.display_elements());
            }
        }
    }
}

#[test]
fn bases_are_reduced_and_closed() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for case in 0..80 {
        let ideal = random_ideal(&mut rng, [2, 3, 5][case % 3]);
        let order = [MonomialOrder::Lex, MonomialOrder::Grevlex][case % 2].clone();
        let gb = ideal.reduced_gb(&order).unwrap();
        let g = gb.elements();
        let leads = gb.leading_monomials();
        for (a, f) in g.iter().enumerate() {
            assert!(f.leading_coefficient(&order).unwrap().is_one());
            for (b, lb) in leads.iter().enumerate() {
                if a != b {
                    assert!(f.support().all(|m| !lb.divides(m)));
                }
            }
            for h in &g[a + 1..] {
                assert!(normal_form(&s_polynomial(f, h, &order).unwrap(), g, &order).unwrap().is_zero());
            }
        }
        for w in leads.windows(2) {
            assert_eq!(order.cmp(&w[0], &w[1]), std::cmp::Ordering::Less);
        }
        for f in ideal.generators() {
            assert!(gb.contains(f).unwrap());
        }
    }
}

#[test]
fn normal_form_is_idempotent_and_in_ideal() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for case in 0..80 {
        let ideal = random_ideal(&mut rng, [2, 3, 7][case % 3]);
        let order = MonomialOrder::Grevlex;
        let gens = ideal.generators();
        let f = random_poly(&mut rng, ideal.ring(), 5, 6);
        let r = normal_form(&f, gens, &order).unwrap();
        assert_eq!(normal_form(&r, gens, &order).unwrap(), r);
        for g in gens {
            let lead = g.leading_monomial(&order).unwrap();
            assert!(r.support().all(|m| !lead.divides(m)));
        }
        assert!(ideal.member(&(&f - &r), &order).unwrap());
    }
}

#[test]
fn minors_of_the_five_variable_matrix() {
    let r = Ring::new(5, &["x1", "x2", "x3", "x4", "x5"]).unwrap();
    let gens = [
        "(x4^2 + x5^3)*x4^2 - x3*x1",
        "(x4^2 + x5^3)*(x3^4 - x2) - x2*x1",
        "x3*(x3^4 - x2) - x2*x4^2",
    ]
    .iter()
    .map(|s| parse_polynomial(&r, s).unwrap())
    .collect();
    let ideal = IdealPresentation::new(&r, gens).unwrap();
    let init = ideal.initial_ideal(&MonomialOrder::Lex).unwrap();
    assert_eq!(init.display_generators(&MonomialOrder::Lex), ["x1*x2", "x1*x3", "x2*x3"]);
}

#[test]
fn concurrent_readers_share_one_basis() {
    let r = Ring::new(3, &["x", "y", "z"]).unwrap();
    let gens = ["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"]
        .iter()
        .map(|s| parse_polynomial(&r, s).unwrap())
        .collect();
    let ideal = Arc::new(IdealPresentation::new(&r, gens).unwrap());
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let ideal = ideal.clone();
            std::thread::spawn(move || ideal.reduced_gb(&MonomialOrder::Grevlex).unwrap().display_elements())
        })
        .collect();
    let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert!(results.windows(2).all(|w| w[0] == w[1]));
}
