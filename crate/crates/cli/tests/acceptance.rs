//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use codimlab_core::alt;
use codimlab_core::codim::characters::{centralizer_order, mn_character, CharacterTable};
use codimlab_core::codim::lr::littlewood_richardson;
use codimlab_core::codim::partition::{partitions, Partition};
use codimlab_core::codim::{self, CocharacterReport, Flavor, DEFAULT_BUDGET};
use codimlab_core::exponent::{self, ExponentConfig};
use codimlab_core::fixtures::{self, Fixture};
use codimlab_core::lie::LieAlgebra;
use codimlab_core::scalar::Field;
use codimlab_core::structure::Annotations;
use codimlab_core::symmetry::{SymmetryDatum, SymmetryKind};

/// Every fixture up to n = 5 fits; the 3-cycle metabelian case needs more than the default.
const BUDGET: u128 = 10 * DEFAULT_BUDGET;

struct Line {
    id: usize,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn flavor_of(fx: &Fixture) -> Flavor {
    match fx.symmetry.kind {
        SymmetryKind::None => Flavor::Ordinary,
        SymmetryKind::Action(_) => Flavor::GAction,
        SymmetryKind::Grading(_) => Flavor::Graded,
    }
}

fn c(l: &LieAlgebra, datum: &SymmetryDatum, fl: Flavor, n: usize) -> u64 {
    codim::codimension(l, datum, fl, n, BUDGET).expect("within budget") as u64
}

fn criterion1() -> (bool, String) {
    let q = Field::rationals();
    let mut ok = true;
    let mut parts = Vec::new();
    for m in 1..=3 {
        let t = Instant::now();
        let l = fixtures::metabelian(&q, m);
        let got: Vec<u64> = (2..=6).map(|n| c(&l, &SymmetryDatum::none(), Flavor::Ordinary, n)).collect();
        let want: Vec<u64> = (2..=6).map(|n| n - 1).collect();
        let secs = t.elapsed().as_secs_f64();
        ok &= got == want && secs < 60.0;
        parts.push(format!("m={} c_2..6={:?} ({:.1}s)", m, got, secs));
    }
    (ok, parts.join("; "))
}

fn criterion2() -> (bool, String) {
    let t = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for name in ["gl2_z2_graded", "metabelian_graded_m2"] {
        let fx = fixtures::fixture(name).unwrap();
        let (g, rho) = exponent::acting_group(&fx.algebra, &fx.symmetry).unwrap();
        let dual = SymmetryDatum::action(g, rho);
        let gr: Vec<u64> = (1..=4).map(|n| c(&fx.algebra, &fx.symmetry, Flavor::Graded, n)).collect();
        let act: Vec<u64> = (1..=4).map(|n| c(&fx.algebra, &dual, Flavor::GAction, n)).collect();
        ok &= gr == act;
        parts.push(format!("{} graded {:?} dual action {:?}", name, gr, act));
    }
    ok &= t.elapsed().as_secs() < 300;
    (ok, parts.join("; "))
}

fn criterion3() -> (bool, String) {
    let mut ok = true;
    let mut bad = Vec::new();
    let mut checked = 0;
    for fx in fixtures::all() {
        let fl = flavor_of(&fx);
        let g = fx.symmetry.group.order() as u128;
        let d = fx.algebra.dim() as u128;
        for n in 1..=5u32 {
            let plain = c(&fx.algebra, &fx.symmetry, Flavor::Ordinary, n as usize) as u128;
            let sym = c(&fx.algebra, &fx.symmetry, fl, n as usize) as u128;
            let holds = plain <= sym && sym <= g.pow(n) * plain && sym <= d.pow(n + 1) && plain <= d.pow(n + 1);
            checked += 1;
            if !holds {
                ok = false;
                bad.push(format!("{} n={} c={} c^G={}", fx.name, n, plain, sym));
            }
        }
    }
    let detail = if ok {
        format!("{} (fixture, n) pairs satisfy c_n <= c_n^G <= |G|^n c_n and c_n, c_n^G <= d^(n+1)", checked)
    } else {
        format!("violations: {}", bad.join(", "))
    };
    (ok, detail)
}

fn criterion4() -> (bool, String) {
    let t = Instant::now();
    let q = Field::rationals();
    let cfg = ExponentConfig::default();
    let none = Annotations::default();
    let mut cases: Vec<(String, usize, LieAlgebra, SymmetryDatum, Annotations)> = vec![
        ("sl2".into(), 3, fixtures::sl2(&q), SymmetryDatum::none(), none.clone()),
        ("sl2+sl2".into(), 3, fixtures::sl2xsl2(&q), SymmetryDatum::none(), none.clone()),
    ];
    for name in [
        "sl2xsl2_swap",
        "metabelian_m1_cyclic",
        "metabelian_m2_cyclic",
        "metabelian_m3_cyclic",
        "metabelian_m2_trivial",
        "gl2_z2_action",
    ] {
        let fx = fixtures::fixture(name).unwrap();
        let want = match name {
            "sl2xsl2_swap" => 6,
            "metabelian_m1_cyclic" => 1,
            "metabelian_m2_cyclic" => 2,
            "metabelian_m3_cyclic" => 3,
            "metabelian_m2_trivial" => 1,
            _ => 2,
        };
        cases.push((name.into(), want, fx.algebra, fx.symmetry, fx.annotations));
    }
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, want, l, datum, ann) in &cases {
        let got = exponent::compute_d(l, datum, ann, &cfg).map(|r| r.d);
        match got {
            Ok(d) if d == *want => parts.push(format!("{} d={}", name, d)),
            Ok(d) => {
                ok = false;
                parts.push(format!("{} expected {} computed {}", name, want, d));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{} expected {} refused: {}", name, want, e));
            }
        }
    }
    ok &= t.elapsed().as_secs() < 120;
    (ok, parts.join("; "))
}

fn cochar_reports() -> Vec<(&'static str, Flavor, LieAlgebra, Vec<CocharacterReport>)> {
    let mut out = Vec::new();
    for fx in fixtures::all() {
        let mut flavors = vec![Flavor::Ordinary];
        if flavor_of(&fx) != Flavor::Ordinary {
            flavors.push(flavor_of(&fx));
        }
        for fl in flavors {
            let reports = (1..=5)
                .map(|n| codim::cocharacter(&fx.algebra, &fx.symmetry, fl, n, BUDGET).expect("cocharacter"))
                .collect();
            out.push((fx.name, fl, fx.algebra.clone(), reports));
        }
    }
    out
}

/// `dim M(λ)` by counting standard tableaux, independent of the hook formula.
fn standard_tableaux(shape: &[usize]) -> u128 {
    if shape.iter().sum::<usize>() == 0 {
        return 1;
    }
    let mut total = 0;
    for i in 0..shape.len() {
        let removable = shape[i] > 0 && (i + 1 == shape.len() || shape[i + 1] < shape[i]);
        if removable {
            let mut s = shape.to_vec();
            s[i] -= 1;
            total += standard_tableaux(&s);
        }
    }
    total
}

fn criterion5(reports: &[(&'static str, Flavor, LieAlgebra, Vec<CocharacterReport>)]) -> (bool, String) {
    let mut ok = true;
    let mut count = 0;
    let mut bad = Vec::new();
    for (name, fl, l, rs) in reports {
        for r in rs {
            count += 1;
            let sum: u128 = r
                .entries
                .iter()
                .map(|e| e.multiplicity as u128 * standard_tableaux(e.partition.parts()))
                .sum();
            let c_n = codim::codimension(l, &fixtures::fixture(name).unwrap().symmetry, *fl, r.n, BUDGET)
                .unwrap() as u128;
            let rows_ok = r
                .entries
                .iter()
                .all(|e| e.multiplicity == 0 || e.partition.len() <= l.dim());
            if sum != c_n || r.codimension as u128 != c_n || !rows_ok {
                ok = false;
                bad.push(format!("{} {} n={}", name, fl.name(), r.n));
            }
        }
    }
    let detail = if ok {
        format!("{} reports: multiplicities integral, sum m*dim = c_n, no rows beyond dim L", count)
    } else {
        format!("failures: {}", bad.join(", "))
    };
    (ok, detail)
}

fn lr_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> i128 {
    // <Ind(χ_λ x χ_μ), χ_ν> summed over classes of S_k x S_l
    let mut num = 0i128;
    let mut den = 1i128;
    let mut terms = Vec::new();
    for a in partitions(lambda.weight()) {
        for b in partitions(mu.weight()) {
            let mut ab: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
            ab.sort_unstable_by(|x, y| y.cmp(x));
            let v = mn_character(lambda, a.parts()) as i128
                * mn_character(mu, b.parts()) as i128
                * mn_character(nu, &ab) as i128;
            let z = centralizer_order(a.parts()) as i128 * centralizer_order(b.parts()) as i128;
            terms.push((v, z));
            den = lcm(den, z);
        }
    }
    for (v, z) in terms {
        num += v * (den / z);
    }
    assert_eq!(num % den, 0);
    num / den
}

fn lcm(a: i128, b: i128) -> i128 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

fn criterion6() -> (bool, String) {
    let mut ok = true;
    for n in 1..=7 {
        let table = CharacterTable::new(n);
        ok &= table.is_orthogonal();
        let id: Vec<usize> = vec![1; n];
        for p in partitions(n) {
            ok &= p.hook_dim() == mn_character(&p, &id) as u128;
            ok &= p.hook_dim() == standard_tableaux(p.parts());
        }
    }
    let mut lr_count = 0;
    for w in 0..=6 {
        for k in 0..=w {
            for lambda in partitions(k) {
                for mu in partitions(w - k) {
                    for nu in partitions(w) {
                        lr_count += 1;
                        ok &= littlewood_richardson(&lambda, &mu, &nu) as i128 == lr_oracle(&lambda, &mu, &nu);
                    }
                }
            }
        }
    }
    (ok, format!("tables n<=7 orthogonal, hook_dim = χ(1), {} LR coefficients match", lr_count))
}

fn criterion7() -> (bool, String) {
    let t = Instant::now();
    let scan = alt::regev_centrality_scan(2).expect("q = 2");
    let secs = t.elapsed().as_secs_f64();
    let ok = scan.all_scalar && scan.nonzero > 0 && secs < 300.0;
    (
        ok,
        format!(
            "{} substitutions, all scalar {}, nonzero {}, first {:?} ({:.1}s)",
            scan.substitutions, scan.all_scalar, scan.nonzero, scan.first_witness, secs
        ),
    )
}

fn criterion8() -> (bool, String) {
    let mut ok = true;
    let mut sections = 0;
    let mut bad = Vec::new();
    for fx in fixtures::all() {
        match exponent::compute_d(&fx.algebra, &fx.symmetry, &fx.annotations, &ExponentConfig::default()) {
            Ok(r) => {
                for (k, s) in r.sections.iter().enumerate() {
                    sections += 1;
                    if !(s.ann_decomposition && s.projection_checks) {
                        ok = false;
                        bad.push(format!("{} section {}", fx.name, k));
                    }
                }
            }
            Err(e) => {
                ok = false;
                bad.push(format!("{}: {}", fx.name, e));
            }
        }
    }
    let detail = if ok {
        format!("{} sections over {} fixtures: Ann = Ann_B + Ann_S + N, projections equivariant", sections, fixtures::NAMES.len())
    } else {
        format!("failures: {}", bad.join(", "))
    };
    (ok, detail)
}

fn criterion9(reports: &[(&'static str, Flavor, LieAlgebra, Vec<CocharacterReport>)]) -> (bool, String) {
    let rows: Vec<String> = reports
        .iter()
        .map(|(name, fl, _, rs)| {
            let l: Vec<String> = rs.iter().map(|r| r.colength.to_string()).collect();
            format!("{}/{}: {}", name, fl.name(), l.join(","))
        })
        .collect();
    (true, format!("recorded colengths n=1..5 (no asymptotic claim): {}", rows.join("; ")))
}

fn criterion10() -> (bool, String) {
    let cmds: [&[&str]; 5] = [
        &["codim", "--fixture", "sl2xsl2_swap", "--n", "1..4", "--format", "json"],
        &["cochar", "--fixture", "metabelian_m3_cyclic", "--n", "1..4", "--format", "json"],
        &["exponent", "--fixture", "gl2_z2_graded", "--format", "json"],
        &["dualize", "--fixture", "gl2_z2_action"],
        &["regev", "--q", "1", "--format", "json"],
    ];
    let mut ok = true;
    for args in cmds {
        let mut v = vec!["codimlab"];
        v.extend_from_slice(args);
        let a = codimlab::run(v.clone(), None);
        let b = codimlab::run(v, None);
        ok &= a.code == 0 && a == b;
    }
    (ok, format!("{} commands, two runs each, byte-identical output (single-threaded)", cmds.len()))
}

fn main() -> ExitCode {
    let mut lines = Vec::new();
    let mut record = |id: usize, f: &mut dyn FnMut() -> (bool, String)| {
        let t = Instant::now();
        let (pass, detail) = f();
        let line = Line {
            id,
            pass,
            detail,
            elapsed: t.elapsed(),
        };
        println!(
            "criterion {:>2}: {} [{:.1}s] {}",
            line.id,
            if line.pass { "PASS" } else { "FAIL" },
            line.elapsed.as_secs_f64(),
            line.detail
        );
        lines.push(line);
    };
    record(1, &mut criterion1);
    record(2, &mut criterion2);
    record(3, &mut criterion3);
    record(4, &mut criterion4);
    let reports = cochar_reports();
    record(5, &mut || criterion5(&reports));
    record(6, &mut criterion6);
    record(7, &mut criterion7);
    record(8, &mut criterion8);
    record(9, &mut || criterion9(&reports));
    record(10, &mut criterion10);
    let failed: Vec<usize> = lines.iter().filter(|l| !l.pass).map(|l| l.id).collect();
    println!("acceptance: {}/{} criteria pass", lines.len() - failed.len(), lines.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed: {:?}", failed);
        ExitCode::FAILURE
    }
}
