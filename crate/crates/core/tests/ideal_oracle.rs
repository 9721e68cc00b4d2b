//! Validates the adjoint recursion for the graded ideal against a
//! brute-force oracle: the span of the normal forms of *all* bracket trees
//! that contain a defining relation as a subtree. The oracle only uses the
//! public expression API, not the recursion under test.

use arr_core::arrangement::{boolean_arrangement, braid_arrangement, Arrangement};
use arr_core::freelie::{normal_form, Expr, HallBasis};
use arr_core::holonomy::graded_ideal;
use arr_core::lattice::rank2_flats;
use arr_core::linalg::{spaces_equal, RowSpace};

fn relation_exprs(arr: &Arrangement) -> Vec<Expr> {
    let mut out = Vec::new();
    for flat in rank2_flats(arr) {
        let sum = Expr::sum(flat.closure().iter().map(|&k| Expr::gen(k)).collect());
        for &h in flat.closure() {
            out.push(Expr::bracket(Expr::gen(h), sum.clone()));
        }
    }
    out
}

/// Every bracket expression of the given degree whose leaves are generators
/// or (when `must_contain`) at least one whole defining relation.
fn context_exprs(n: usize, relations: &[Expr], degree: usize, must_contain: bool) -> Vec<Expr> {
    let mut out = Vec::new();
    if degree == 1 && !must_contain {
        out.extend((0..n).map(Expr::gen));
    }
    if degree == 2 {
        out.extend(relations.iter().cloned());
    }
    for left_degree in 1..degree {
        let right_degree = degree - left_degree;
        let combos: &[(bool, bool)] =
            if must_contain { &[(true, false), (false, true)] } else { &[(false, false)] };
        for &(lm, rm) in combos {
            for l in context_exprs(n, relations, left_degree, lm) {
                for r in context_exprs(n, relations, right_degree, rm) {
                    out.push(Expr::bracket(l.clone(), r));
                }
            }
        }
    }
    out
}

fn oracle_matches_recursion(arr: &Arrangement, max_degree: usize) {
    let ideal = graded_ideal(arr, max_degree);
    let basis = HallBasis::new(arr.len(), max_degree);
    let relations = relation_exprs(arr);
    for d in 2..=max_degree {
        let mut oracle = RowSpace::new(basis.count_in_degree(d));
        // the unconstrained side of each split still offers relation leaves,
        // so trees with several relation subtrees are covered as well
        for e in context_exprs(arr.len(), &relations, d, true) {
            let nf = normal_form(&basis, &e).expect("context fits the degree bound");
            if !nf.is_zero() {
                oracle.insert(&nf.to_row(&basis));
            }
        }
        assert!(
            spaces_equal(ideal.space(d), &oracle),
            "degree {d}: recursion gives dim {}, oracle gives dim {}",
            ideal.dim(d),
            oracle.dim()
        );
    }
}

fn pencil3() -> Arrangement {
    Arrangement::from_integers(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap()
}

#[test]
fn oracle_agrees_on_every_small_arrangement() {
    let corpus: Vec<Arrangement> = vec![
        Arrangement::new(1, Vec::new()).unwrap(),
        Arrangement::from_integers(1, &[&[1]]).unwrap(),
        Arrangement::from_integers(3, &[&[1, 0, 0]]).unwrap(),
        boolean_arrangement(2),
        Arrangement::from_integers(3, &[&[1, 0, 0], &[0, 1, 0]]).unwrap(),
        pencil3(),
        braid_arrangement(3),
        boolean_arrangement(3),
    ];
    for arr in &corpus {
        assert!(arr.len() <= 3);
        oracle_matches_recursion(arr, 4);
    }
}

#[test]
fn oracle_agrees_on_pencil_to_degree_five() {
    // one deeper degree on the least trivial n = 3 case
    oracle_matches_recursion(&pencil3(), 5);
}
