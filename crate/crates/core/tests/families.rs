use secdom::families::{
    self, closed_form, grid_upper_bound, grid_witness, path_witness, three_sevenths, Source,
};
use secdom::{catalog, generate, solve, verify, FamilySpec, Graph, SearchBudget, Variant};

fn gamma_is(g: &Graph) -> Option<usize> {
    let s = solve::solve(g, Variant::InSDom, &SearchBudget::default()).unwrap();
    assert!(s.exhausted);
    s.value
}

#[test]
fn path_witnesses_are_optimal() {
    for n in 4..=20 {
        let w = path_witness(n).unwrap();
        assert_eq!(w.len(), three_sevenths(n));
        assert!(verify::check(&generate::path(n), &w, Variant::InSDom));
        if n <= 16 {
            assert_eq!(
                gamma_is(&generate::path(n)),
                Some(three_sevenths(n)),
                "P_{n}"
            );
        }
    }
}

#[test]
fn cycle_values() {
    for n in (4..=14).filter(|&n| n != 5) {
        assert_eq!(
            gamma_is(&generate::cycle(n)),
            Some(three_sevenths(n)),
            "C_{n}"
        );
    }
    assert_eq!(gamma_is(&generate::cycle(5)), None);
}

#[test]
fn apex_join_keeps_gamma_is() {
    for n in 2..=8 {
        for g in catalog::all_connected_graphs(n) {
            if g.is_complete() {
                continue;
            }
            let Some(value) = gamma_is(&g) else { continue };
            assert_eq!(gamma_is(&generate::apex_join(&g)), Some(value));
        }
    }
}

#[test]
fn grid_witnesses_against_solver() {
    for m in 2..=8 {
        for k in 2..=8 {
            let w = grid_witness(m, k).unwrap();
            let g = generate::grid(m, k);
            assert!(verify::check(&g, &w, Variant::InSDom));
            assert!(w.len() <= grid_upper_bound(m, k));
            if m * k <= 16 {
                assert!(gamma_is(&g).unwrap() <= w.len());
            }
        }
    }
}

#[test]
fn closed_form_agrees_with_solver() {
    let mut specs = Vec::new();
    for n in 1..=14 {
        specs.push(FamilySpec::Path(n));
        specs.push(FamilySpec::Complete(n.min(10)));
    }
    for n in 3..=14 {
        specs.push(FamilySpec::Cycle(n));
    }
    for n in 3..=12 {
        specs.push(FamilySpec::Wheel(n));
    }
    for p in 1..=5 {
        for q in p..=6 {
            specs.push(FamilySpec::complete_bipartite(p, q));
        }
        specs.push(FamilySpec::Star(p));
    }
    specs.push(FamilySpec::ApexJoin(Box::new(generate::path(7))));
    specs.push(FamilySpec::ApexJoin(Box::new(generate::cycle(5))));
    for spec in specs {
        let r = closed_form(&spec).unwrap();
        let g = generate::generate(&spec).unwrap();
        assert_eq!(r.value, gamma_is(&g), "{spec}");
        if let Some(w) = &r.witness {
            assert_eq!(Some(w.len()), r.value);
            assert!(verify::check(&g, w, Variant::InSDom));
        }
    }
}

#[test]
fn formula_ranges() {
    assert_eq!(
        closed_form(&FamilySpec::Path(4)).unwrap().source,
        Source::PathFormula
    );
    assert_eq!(
        closed_form(&FamilySpec::Cycle(5)).unwrap().source,
        Source::ExactSolver
    );
    assert_eq!(
        closed_form(&FamilySpec::Wheel(4)).unwrap().source,
        Source::WheelFormula
    );
    assert_eq!(families::grid_diagonal_class(9, 10), 1);
    assert!(closed_form(&FamilySpec::Cycle(2)).is_err());
}
