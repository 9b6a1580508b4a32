//! Codimensions against a brute-force rank over all substitutions.

use codimlab_core::codim::{codimension, Flavor, DEFAULT_BUDGET};
use codimlab_core::fixtures::{self, fixture};
use codimlab_core::lie::LieAlgebra;
use codimlab_core::linalg::{Matrix, Vector};
use codimlab_core::perm::all_perms;
use codimlab_core::symmetry::{SymmetryDatum, SymmetryKind};

fn operators(l: &LieAlgebra, datum: &SymmetryDatum, flavor: Flavor) -> Vec<Matrix> {
    let f = l.field();
    match (flavor, &datum.kind) {
        (Flavor::Ordinary, _) => vec![Matrix::identity(f, l.dim())],
        (Flavor::GAction, _) => datum.action_matrices(l).unwrap(),
        (Flavor::Graded, SymmetryKind::Grading(gr)) => (0..datum.group.order()).map(|g| gr.projection(f, g)).collect(),
        _ => unreachable!(),
    }
}

fn digits(mut k: usize, base: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut() {
        *slot = k % base;
        k /= base;
    }
    out
}

/// Rank of all left-normed monomials `[y_σ1, ..., y_σn]`, each `y_i` an
/// operator applied to `x_i`, evaluated on every basis tuple.
fn brute_force(l: &LieAlgebra, datum: &SymmetryDatum, flavor: Flavor, n: usize) -> usize {
    let d = l.dim();
    let ops = operators(l, datum, flavor);
    let images: Vec<Vec<Vector>> = ops.iter().map(|m| (0..d).map(|j| m.column(j)).collect()).collect();
    let tuples = d.pow(n as u32);
    let mut rows = Vec::new();
    for sigma in all_perms(n) {
        for choice in 0..ops.len().pow(n as u32) {
            let deco = digits(choice, ops.len(), n);
            let mut row = Vec::with_capacity(tuples * d);
            for t in 0..tuples {
                let b = digits(t, d, n);
                let arg = |k: usize| &images[deco[k]][b[k]];
                let s = sigma.images();
                let mut acc = arg(s[0]).clone();
                for &k in &s[1..] {
                    acc = l.bracket(&acc, arg(k));
                }
                row.extend(acc);
            }
            rows.push(row);
        }
    }
    Matrix::from_rows(l.field(), tuples * d, &rows).rank()
}

#[test]
fn agrees_with_brute_force() {
    for fx in fixtures::all() {
        let flavor = match fx.symmetry.kind {
            SymmetryKind::None => Flavor::Ordinary,
            SymmetryKind::Action(_) => Flavor::GAction,
            SymmetryKind::Grading(_) => Flavor::Graded,
        };
        let top = if fx.algebra.dim() > 4 { 3 } else { 4 };
        for fl in [Flavor::Ordinary, flavor] {
            for n in 1..=top {
                let fast = codimension(&fx.algebra, &fx.symmetry, fl, n, DEFAULT_BUDGET).unwrap();
                let slow = brute_force(&fx.algebra, &fx.symmetry, fl, n);
                assert_eq!(fast, slow, "{} {} n={}", fx.name, fl.name(), n);
            }
        }
    }
}

#[test]
fn frozen_values() {
    // n <= 4 matches the brute force above; n = 5 matches the cocharacter sum
    let cases: [(&str, Flavor, &[usize]); 6] = [
        ("sl2_trivial", Flavor::Ordinary, &[1, 1, 2, 6, 14]),
        ("gl2_z2_action", Flavor::GAction, &[2, 3, 8, 25, 69]),
        ("gl2_z2_graded", Flavor::Graded, &[2, 3, 8, 25, 69]),
        ("sl2xsl2_swap", Flavor::GAction, &[2, 4, 16, 96, 448]),
        ("metabelian_graded_m2", Flavor::Graded, &[2, 4, 16, 48, 128]),
        ("heisenberg", Flavor::Ordinary, &[1, 1, 0, 0, 0]),
    ];
    for (name, fl, want) in cases {
        let fx = fixture(name).unwrap();
        let got: Vec<usize> = (1..=5)
            .map(|n| codimension(&fx.algebra, &fx.symmetry, fl, n, DEFAULT_BUDGET).unwrap())
            .collect();
        assert_eq!(got, want, "{}", name);
    }
}

#[test]
fn cyclic_metabelian_degree_five() {
    let fx = fixture("metabelian_m3_cyclic").unwrap();
    assert_eq!(codimension(&fx.algebra, &fx.symmetry, Flavor::GAction, 5, 10 * DEFAULT_BUDGET).unwrap(), 972);
}

/// `A ⊕ V` with `A` abelian acting diagonally on the abelian ideal `V`.
fn diagonal_metabelian(weights: &[Vec<i64>]) -> LieAlgebra {
    let f = codimlab_core::scalar::Field::rationals();
    let a = weights.len();
    let v = weights[0].len();
    let names: Vec<String> = (0..a).map(|i| format!("a{}", i)).chain((0..v).map(|j| format!("v{}", j))).collect();
    let mut br = Vec::new();
    for (i, w) in weights.iter().enumerate() {
        for (j, &c) in w.iter().enumerate() {
            let mut out = vec![f.zero(); a + v];
            out[a + j] = f.from_int(c);
            br.push((i, a + j, out));
        }
    }
    LieAlgebra::from_brackets(&f, names, &br).unwrap()
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(12))]
    #[test]
    fn random_metabelian_matches_brute_force(
        weights in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 2), 1..=2),
    ) {
        let l = diagonal_metabelian(&weights);
        let none = SymmetryDatum::none();
        for n in 1..=3 {
            let fast = codimension(&l, &none, Flavor::Ordinary, n, DEFAULT_BUDGET).unwrap();
            proptest::prop_assert_eq!(fast, brute_force(&l, &none, Flavor::Ordinary, n));
            // a metabelian algebra never needs more than n - 1 in degree n >= 2
            if n >= 2 {
                proptest::prop_assert!(fast < n);
            }
        }
    }
}
