use codimlab_core::exponent::{acting_group, compute_d, ExponentConfig};
use codimlab_core::fixtures::{self, fixture};
use codimlab_core::structure::{self, Annotations};

#[test]
fn closed_forms_hold_on_fixtures() {
    for fx in fixtures::all() {
        let r = compute_d(&fx.algebra, &fx.symmetry, &fx.annotations, &ExponentConfig::default()).unwrap();
        assert!(r.closed_form_checks.iter().all(|c| c.holds), "{}: {:?}", fx.name, r.closed_form_checks);
        assert!(r.d <= fx.algebra.dim(), "{}", fx.name);
        assert!(r.sections.iter().all(|s| s.ann_decomposition && s.projection_checks), "{}", fx.name);
    }
}

#[test]
fn seeds_do_not_change_d() {
    for name in ["gl2_z2_graded", "metabelian_m3_cyclic", "sl2xsl2_swap"] {
        let fx = fixture(name).unwrap();
        let ds: Vec<usize> = (0..3)
            .map(|seed| {
                let cfg = ExponentConfig {
                    seed,
                    ..Default::default()
                };
                compute_d(&fx.algebra, &fx.symmetry, &fx.annotations, &cfg).unwrap().d
            })
            .collect();
        assert!(ds.windows(2).all(|w| w[0] == w[1]), "{}: {:?}", name, ds);
    }
}

#[test]
fn nilpotent_algebras_have_zero_exponent_part() {
    let fx = fixture("heisenberg").unwrap();
    let r = compute_d(&fx.algebra, &fx.symmetry, &fx.annotations, &ExponentConfig::default()).unwrap();
    assert_eq!(r.d, 0);
    let (g, rho) = acting_group(&fx.algebra, &fx.symmetry).unwrap();
    let st = structure::analyze(&fx.algebra, &g, &rho, &Annotations::default()).unwrap();
    assert_eq!(st.nilradical.dim(), 3);
    assert_eq!(st.levi.dim(), 0);
}

#[test]
fn reports_are_reproducible() {
    let fx = fixture("metabelian_m2_cyclic").unwrap();
    let a = compute_d(&fx.algebra, &fx.symmetry, &fx.annotations, &ExponentConfig::default());
    let b = compute_d(&fx.algebra, &fx.symmetry, &fx.annotations, &ExponentConfig::default());
    assert_eq!(a, b);
}
