use super::*;

const REQUIRED: &[&str] = &[
    "ramanujan-1.7",
    "ramanujan-1.8",
    "ramanujan-1.9",
    "ramanujan-1.10",
    "ramanujan-1.11",
    "ramanujan-1.12",
    "ramanujan-1.13",
    "ramanujan-1.14",
    "ramanujan-1.15",
    "ramanujan-1.16",
    "muntz-1.19",
    "poisson-1.27",
    "voronoi-muntz-1.38",
    "voronoi-sum-1.40",
    "reduced-muntz-2.5",
    "theta-expansion-2.6",
    "liouville-2.13",
    "poisson-type-2.14",
    "poisson-type-2.15",
    "poisson-type-2.16",
    "totient-muntz-2.22",
    "odd-divisor-muntz-2.23",
    "weighted-2.24",
    "weighted-2.25",
    "mobius-totient-2.26",
    "mobius-totient-2.27",
    "gen-voronoi-2.34",
    "omega-sum",
    "d-square-sum",
    "d2-sum",
    "exp-3.1",
    "exp-3.2",
    "exp-3.3",
    "exp-3.4",
    "theta-3.6",
    "theta-3.7",
    "psi-series-3.8",
    "theta-muntz-3.10",
    "theta-muntz-3.11",
    "lambert",
    "theta-reciprocal-3.12",
    "reduced-theta-3.14",
    "reduced-theta-mellin-3.15",
    "representation-3.17",
    "constant-12-pi2",
];

#[test]
fn catalog_lists_every_required_id_once() {
    let cat = catalog();
    for id in REQUIRED {
        assert_eq!(cat.iter().filter(|e| e.id == *id).count(), 1, "{id}");
    }
    let mut ids: Vec<_> = cat.iter().map(|e| e.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), cat.len());
}

#[test]
fn entries_are_described() {
    for e in catalog() {
        assert!(!e.anchor.is_empty() && !e.description.is_empty(), "{}", e.id);
        assert!(!e.domain.is_empty(), "{}", e.id);
        assert!(e.tolerance.abs > 0.0, "{}", e.id);
    }
}

#[test]
fn divisor_entries_carry_the_polynomial_note() {
    let cat = catalog();
    for id in ["d-square-sum", "d2-sum"] {
        let e = cat.iter().find(|e| e.id == id).unwrap();
        assert!(e.notes.iter().any(|n| n.contains("Laurent")), "{id}");
    }
}

#[test]
fn glob_patterns() {
    assert!(glob_match("theta-*", "theta-3.6"));
    assert!(glob_match("*", ""));
    assert!(glob_match("ramanujan-1.?", "ramanujan-1.7"));
    assert!(!glob_match("ramanujan-1.?", "ramanujan-1.10"));
    assert!(glob_match("*-sum", "omega-sum"));
    assert!(!glob_match("theta-*", "reduced-theta-3.14"));
}

#[test]
fn filtered_runs() {
    assert!(run_entries(&[], None, false).is_empty());
    assert!(run_suite(Some("no-such-*")).is_empty());
    let cat = catalog();
    assert_eq!(cat.iter().filter(|e| glob_match("theta-*", e.id)).count(), 6);
    assert_eq!(cat.iter().filter(|e| glob_match("ramanujan-*", e.id)).count(), 10);
}

#[test]
fn functional_equation_entry_passes() {
    let r = verify("theta-3.6", &Overrides::default()).unwrap();
    assert!(r.passed);
    assert!(r.max_residual() <= 1e-12);
    assert!(r.timestamps.is_none());
}

#[test]
fn lambert_entry_passes_and_serializes_stably() {
    let a = suite_json(&run_suite(Some("lambert")));
    let b = suite_json(&run_suite(Some("lambert")));
    assert_eq!(a, b);
    assert!(a.contains("\"passed\": 1") && a.contains("\"timestamps\": null"));
}

#[test]
fn unknown_ids_and_bad_overrides_are_rejected() {
    assert!(matches!(verify("no-such", &Overrides::default()), Err(Error::UnknownIdentity(_))));
    let x = Overrides { x: Some(vec![1.0]), ..Overrides::default() };
    assert!(matches!(verify("ramanujan-1.8", &x), Err(Error::Config(_))));
    let f = Overrides { function: Some("exp".into()), ..Overrides::default() };
    assert!(matches!(verify("theta-3.6", &f), Err(Error::Config(_))));
}

#[test]
fn slow_decay_is_an_error_not_a_failure() {
    let o = Overrides { function: Some("rational1.5".into()), x: Some(vec![1.0]), ..Overrides::default() };
    assert!(matches!(verify("weighted-2.24", &o), Err(Error::TailUnreachable { .. } | Error::Hypothesis(_))));
}

#[test]
fn overrides_form_a_product() {
    let e = catalog().into_iter().find(|e| e.id == "gen-voronoi-2.34").unwrap();
    let o = Overrides { s: Some(vec![Complex64::new(0.5, 0.0), Complex64::new(0.6, 1.0)]), ..Overrides::default() };
    let pts = e.points(&o).unwrap();
    assert_eq!(pts.len(), 4);
    assert!(pts.iter().all(|p| p.k.is_some()));
}

#[test]
fn sample_needs_bounds_below_tolerance() {
    let s = Sample {
        point: Point::x(1.0),
        lhs: Complex64::new(1.0, 0.0),
        rhs: Complex64::new(1.0, 0.0),
        residual: 0.0,
        lhs_bound: 6e-7,
        rhs_bound: 6e-7,
        tolerance: 1e-6,
    };
    assert!(!s.passed());
    assert!(Sample { rhs_bound: 0.0, ..s.clone() }.passed());
    assert_eq!(format_float(f64::NAN), "null");
}
