use proptest::prelude::*;

use ipf_core::grid::{faithful_bound, grid_compose, grid_recognize, realize};
use ipf_core::{perm_apply, solve_left, solve_right, IpfElement, Permutation, Point};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n as i64).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_line(&v).unwrap())
}

fn point(n: usize, max: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(1..=max, n)
}

fn element(n: usize, max: i64) -> impl Strategy<Value = IpfElement> {
    (perm(n), point(n, max), point(n, max)).prop_map(move |(s, x, y)| IpfElement::new(n, s, x, y).unwrap())
}

fn idem(n: usize, max: i64) -> impl Strategy<Value = IpfElement> {
    point(n, max).prop_map(|x| IpfElement::idempotent_on(Point::new(x).unwrap()))
}

fn triple(max: i64) -> impl Strategy<Value = (IpfElement, IpfElement, IpfElement)> {
    (1usize..=4).prop_flat_map(move |n| (element(n, max), element(n, max), element(n, max)))
}

proptest! {
    #[test]
    fn associativity((a, b, c) in triple(9)) {
        prop_assert_eq!(a.compose(&b)?.compose(&c)?, a.compose(&b.compose(&c)?)?);
    }

    #[test]
    fn inverse_axioms((a, _, _) in triple(9)) {
        let inv = a.inverse();
        prop_assert_eq!(a.compose(&inv)?.compose(&a)?, a.clone());
        prop_assert_eq!(inv.compose(&a)?.compose(&inv)?, inv.clone());
        prop_assert_eq!(inv.inverse(), a);
    }

    #[test]
    fn application_is_functorial(
        (a, b, z) in (1usize..=3).prop_flat_map(|n| (element(n, 6), element(n, 6), point(n, 12)))
    ) {
        let z = Point::new(z).unwrap();
        let ab = a.compose(&b)?.apply(&z).ok();
        let stepwise = a.apply(&z).ok().and_then(|w| b.apply(&w).ok());
        prop_assert_eq!(ab, stepwise);
    }

    #[test]
    fn action_is_linear(
        (s, u, v) in (1usize..=5).prop_flat_map(|n| (perm(n), point(n, 50), point(n, 50)))
    ) {
        let add: Vec<i64> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        let sub: Vec<i64> = u.iter().zip(&v).map(|(a, b)| a - b).collect();
        let max: Vec<i64> = u.iter().zip(&v).map(|(a, b)| *a.max(b)).collect();
        let (su, sv) = (perm_apply(&s, &u)?, perm_apply(&s, &v)?);
        let zip = |f: fn(i64, i64) -> i64| su.iter().zip(&sv).map(|(a, b)| f(*a, *b)).collect::<Vec<_>>();
        prop_assert_eq!(perm_apply(&s, &add)?, zip(|a, b| a + b));
        prop_assert_eq!(perm_apply(&s, &sub)?, zip(|a, b| a - b));
        prop_assert_eq!(perm_apply(&s, &max)?, zip(i64::max));
    }

    #[test]
    fn idempotents_commute((e, f) in (1usize..=4).prop_flat_map(|n| (idem(n, 9), idem(n, 9)))) {
        let ef = e.compose(&f)?;
        prop_assert_eq!(&ef, &f.compose(&e)?);
        prop_assert_eq!(ef, IpfElement::idempotent_on(e.x().join(f.x())));
    }

    #[test]
    fn order_is_compatible(
        (b, e, c) in (1usize..=3).prop_flat_map(|n| (element(n, 6), idem(n, 8), element(n, 6)))
    ) {
        let a = b.compose(&e)?;
        prop_assert!(a.natural_leq(&b)?);
        prop_assert!(c.compose(&a)?.natural_leq(&c.compose(&b)?)?);
        prop_assert!(a.compose(&c)?.natural_leq(&b.compose(&c)?)?);
    }

    #[test]
    fn grid_oracle_agrees((a, b) in (element(2, 5), element(2, 5))) {
        let bound = faithful_bound(5);
        let g = grid_compose(&realize(&a, bound)?, &realize(&b, bound)?)?;
        prop_assert_eq!(grid_recognize(&g)?, a.compose(&b)?);
    }

    #[test]
    fn solutions_satisfy_their_equations((a, b) in (element(2, 5), element(2, 5))) {
        for chi in solve_left(&a, &b)? {
            prop_assert_eq!(chi.compose(&a)?, b.clone());
        }
        for chi in solve_right(&a, &b)? {
            prop_assert_eq!(a.compose(&chi)?, b.clone());
        }
        // a·(a⁻¹·a·χ) = a·χ, so b = a·a⁻¹·b is solvable exactly when dom b ⊆ dom a
        let ab = a.compose(&a.inverse())?.compose(&b)?;
        prop_assert!(!solve_right(&a, &ab)?.is_empty());
    }

    #[test]
    fn parser_never_panics(text in "\\PC{0,40}") {
        let _ = ipf_core::words::eval_str(&text, 2);
    }

    #[test]
    fn structured_garbage_never_panics(
        parts in prop::collection::vec(
            prop::sample::select(vec!["P", "Q", "I", "s[", "e[", "ipf{n=", "; s=[", "; x=[", "; y=[", "]", "}", "(", ")", "*", "^-1", ",", "-", "1", "2", "0", " "]),
            0..30,
        )
    ) {
        let _ = ipf_core::words::eval_str(&parts.concat(), 2);
    }
}
