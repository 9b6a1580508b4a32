//! The bundled example algebras.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::lie::LieAlgebra;
use crate::linalg::{self, Matrix, Vector};
use crate::scalar::Field;
use crate::structure::Annotations;
use crate::symmetry::{FiniteGroup, GroupAction, Grading, SymmetryDatum};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub algebra: LieAlgebra,
    pub symmetry: SymmetryDatum,
    pub annotations: Annotations,
}

pub const NAMES: [&str; 10] = [
    "sl2_trivial",
    "gl2_z2_graded",
    "gl2_z2_action",
    "sl2xsl2_swap",
    "heisenberg",
    "metabelian_m1_cyclic",
    "metabelian_m2_cyclic",
    "metabelian_m3_cyclic",
    "metabelian_m2_trivial",
    "metabelian_graded_m2",
];

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

fn ints(f: &Field, v: &[i64]) -> Vector {
    v.iter().map(|&x| f.from_int(x)).collect()
}

fn diag(f: &Field, v: &[i64]) -> Matrix {
    let mut m = Matrix::zeros(f, v.len(), v.len());
    for (i, &x) in v.iter().enumerate() {
        m[(i, i)] = f.from_int(x);
    }
    m
}

/// `sl2` with basis `e, h, f`.
pub fn sl2(f: &Field) -> LieAlgebra {
    LieAlgebra::from_brackets(
        f,
        names(&["e", "h", "f"]),
        &[
            (0, 2, ints(f, &[0, 1, 0])),
            (1, 0, ints(f, &[2, 0, 0])),
            (1, 2, ints(f, &[0, 0, -2])),
        ],
    )
    .expect("sl2")
}

/// `gl2` with basis `e11, e22, e12, e21`.
pub fn gl2(f: &Field) -> LieAlgebra {
    LieAlgebra::from_brackets(
        f,
        names(&["e11", "e22", "e12", "e21"]),
        &[
            (0, 2, ints(f, &[0, 0, 1, 0])),
            (0, 3, ints(f, &[0, 0, 0, -1])),
            (1, 2, ints(f, &[0, 0, -1, 0])),
            (1, 3, ints(f, &[0, 0, 0, 1])),
            (2, 3, ints(f, &[1, -1, 0, 0])),
        ],
    )
    .expect("gl2")
}

/// Two copies of `sl2`, basis `e1, h1, f1, e2, h2, f2`.
pub fn sl2xsl2(f: &Field) -> LieAlgebra {
    let mut br = Vec::new();
    for s in [0usize, 3] {
        let v = |a: [i64; 3]| {
            let mut w = vec![0i64; 6];
            w[s..s + 3].copy_from_slice(&a);
            ints(f, &w)
        };
        br.push((s, s + 2, v([0, 1, 0])));
        br.push((s + 1, s, v([2, 0, 0])));
        br.push((s + 1, s + 2, v([0, 0, -2])));
    }
    LieAlgebra::from_brackets(f, names(&["e1", "h1", "f1", "e2", "h2", "f2"]), &br).expect("sl2 x sl2")
}

pub fn heisenberg(f: &Field) -> LieAlgebra {
    LieAlgebra::from_brackets(f, names(&["x", "y", "z"]), &[(0, 1, ints(f, &[0, 0, 1]))]).expect("heisenberg")
}

/// `a_1..a_m, b_1..b_m` with `[a_i, b_j] = δ_ij b_j`.
pub fn metabelian(f: &Field, m: usize) -> LieAlgebra {
    let mut ns = Vec::new();
    for i in 1..=m {
        ns.push(alloc::format!("a{}", i));
    }
    for i in 1..=m {
        ns.push(alloc::format!("b{}", i));
    }
    let br: Vec<_> = (0..m).map(|i| (i, m + i, linalg::unit_vector(f, 2 * m, m + i))).collect();
    LieAlgebra::from_brackets(f, ns, &br).expect("metabelian")
}

/// The cycle `a_i -> a_{i+1}`, `b_i -> b_{i+1}` and its powers.
pub fn cycle_action(f: &Field, m: usize) -> GroupAction {
    let d = 2 * m;
    let mut tau = Matrix::zeros(f, d, d);
    for i in 0..m {
        tau[((i + 1) % m, i)] = f.one();
        tau[(m + (i + 1) % m, m + i)] = f.one();
    }
    GroupAction {
        matrices: (0..m as u32).map(|k| tau.pow(k)).collect(),
    }
}

/// `c_0, c_1, d_0, d_1` with `[c_i, d_j] = d_{i+j}`, graded by the index.
pub fn metabelian_graded_m2(f: &Field) -> LieAlgebra {
    LieAlgebra::from_brackets(
        f,
        names(&["c0", "c1", "d0", "d1"]),
        &[
            (0, 2, ints(f, &[0, 0, 1, 0])),
            (0, 3, ints(f, &[0, 0, 0, 1])),
            (1, 2, ints(f, &[0, 0, 0, 1])),
            (1, 3, ints(f, &[0, 0, 1, 0])),
        ],
    )
    .expect("graded metabelian")
}

fn z2(a: &str, b: &str) -> FiniteGroup {
    FiniteGroup::abelian(&[2], Some(names(&[a, b]))).expect("Z2")
}

pub fn fixture(name: &str) -> Option<Fixture> {
    let q = Field::rationals();
    let plain = |name: &'static str, algebra: LieAlgebra| Fixture {
        name,
        algebra,
        symmetry: SymmetryDatum::none(),
        annotations: Annotations::default(),
    };
    let gl2_levi = Annotations {
        levi_basis: Some(vec![ints(&q, &[1, -1, 0, 0]), ints(&q, &[0, 0, 1, 0]), ints(&q, &[0, 0, 0, 1])]),
        ..Default::default()
    };
    let fx = match name {
        "sl2_trivial" => plain("sl2_trivial", sl2(&q)),
        "heisenberg" => plain("heisenberg", heisenberg(&q)),
        "gl2_z2_graded" => Fixture {
            name: "gl2_z2_graded",
            algebra: gl2(&q),
            symmetry: SymmetryDatum::grading(z2("0", "1"), Grading { labels: vec![0, 0, 1, 1] }),
            annotations: gl2_levi,
        },
        "gl2_z2_action" => Fixture {
            name: "gl2_z2_action",
            algebra: gl2(&q),
            symmetry: SymmetryDatum::action(
                z2("e", "psi"),
                GroupAction {
                    matrices: vec![Matrix::identity(&q, 4), diag(&q, &[1, 1, -1, -1])],
                },
            ),
            annotations: gl2_levi,
        },
        "sl2xsl2_swap" => {
            let mut swap = Matrix::zeros(&q, 6, 6);
            for i in 0..3 {
                swap[(i + 3, i)] = q.one();
                swap[(i, i + 3)] = q.one();
            }
            Fixture {
                name: "sl2xsl2_swap",
                algebra: sl2xsl2(&q),
                symmetry: SymmetryDatum::action(
                    z2("e", "s"),
                    GroupAction {
                        matrices: vec![Matrix::identity(&q, 6), swap],
                    },
                ),
                annotations: Annotations::default(),
            }
        }
        "metabelian_m1_cyclic" | "metabelian_m2_cyclic" | "metabelian_m3_cyclic" => {
            let m = name.as_bytes()[12] as usize - b'0' as usize;
            // the 3-cycle splits only once cube roots of unity are present
            let f = if m == 3 { Field::cyclotomic(3) } else { q.clone() };
            let group = FiniteGroup::abelian(&[m as u32], None).expect("cyclic group");
            Fixture {
                name: NAMES.iter().find(|n| **n == name).unwrap(),
                algebra: metabelian(&f, m),
                symmetry: SymmetryDatum::action(group, cycle_action(&f, m)),
                annotations: Annotations {
                    orbit_basis: Some((0..m).collect()),
                    ..Default::default()
                },
            }
        }
        "metabelian_m2_trivial" => Fixture {
            annotations: Annotations {
                orbit_basis: Some(vec![0, 1]),
                ..Default::default()
            },
            ..plain("metabelian_m2_trivial", metabelian(&q, 2))
        },
        "metabelian_graded_m2" => {
            let f = Field::cyclotomic(2);
            Fixture {
                name: "metabelian_graded_m2",
                algebra: metabelian_graded_m2(&f),
                symmetry: SymmetryDatum::grading(z2("0", "1"), Grading { labels: vec![0, 1, 0, 1] }),
                annotations: Annotations::default(),
            }
        }
        _ => return None,
    };
    Some(fx)
}

pub fn all() -> Vec<Fixture> {
    NAMES.iter().map(|n| fixture(n).expect("bundled fixture")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure;
    use crate::symmetry::grading_to_action;

    #[test]
    fn every_fixture_validates() {
        for fx in all() {
            assert!(fx.algebra.validate().passed(), "{}", fx.name);
            assert!(fx.symmetry.validate(&fx.algebra).unwrap().passed(), "{}", fx.name);
            let (g, rho) = crate::exponent::acting_group(&fx.algebra, &fx.symmetry).unwrap();
            structure::analyze(&fx.algebra, &g, &rho, &fx.annotations).unwrap();
        }
        assert!(fixture("nope").is_none());
    }

    #[test]
    fn shapes() {
        let fx = fixture("metabelian_m2_cyclic").unwrap();
        assert_eq!(fx.algebra.dim(), 4);
        let swap = &fx.symmetry.action_matrices(&fx.algebra).unwrap()[1];
        assert_eq!(swap.column(0), ints(&Field::rationals(), &[0, 1, 0, 0]));
        let fx = fixture("sl2_trivial").unwrap();
        assert!(!fx.algebra.killing_form().det().unwrap().is_zero());
        let fx = fixture("metabelian_graded_m2").unwrap();
        assert_eq!(fx.algebra.field().order(), 2);
    }

    #[test]
    fn graded_metabelian_is_the_dual_of_the_swap() {
        // the dual action of the grading acts by -1 on c1, d1
        let fx = fixture("metabelian_graded_m2").unwrap();
        let crate::symmetry::SymmetryKind::Grading(gr) = &fx.symmetry.kind else {
            unreachable!()
        };
        let (_, rho) = grading_to_action(&fx.algebra, &fx.symmetry.group, gr).unwrap();
        assert_eq!(rho.matrices[1], diag(fx.algebra.field(), &[1, -1, 1, -1]));
    }
}
