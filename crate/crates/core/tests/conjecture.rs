use std::collections::BTreeSet;

use staircase::conjecture::{
    borel_ideals_with_powers, check_necessary, classify_type, classify_type_with, colength_bracket,
    max_boundary_count, max_boundary_count_borel, region_lattice_points, sort_variables,
    ClaimedType, ClassifyOptions, Region, Scope, Status, DEFAULT_BUDGET,
};
use staircase::fixtures::{self, compact_ideal, named};
use staircase::hull::{ideal_hull, Side};
use staircase::{colength, parse_ideal, power_ideal, Error};

fn label(name: &str) -> String {
    classify_type(&named(name).unwrap().ideal.ideal())
        .unwrap()
        .label
}

#[test]
fn brackets() {
    assert_eq!(colength_bracket(3, 8), 2);
    assert_eq!(colength_bracket(3, 10), 3);
    assert_eq!(colength_bracket(3, 34), 4);
    assert_eq!(colength_bracket(3, 1), 1);
    assert_eq!(colength_bracket(2, 3), 2);
}

#[test]
fn necessary_condition() {
    let r = check_necessary(&power_ideal(3, 3).unwrap()).unwrap();
    assert_eq!((r.n, r.k, r.m1, r.passes), (10, 3, 3, true));
    let n = check_necessary(&named("N").unwrap().ideal.ideal()).unwrap();
    assert_eq!(n.n, 16);
    assert!(n.passes);
    let r = check_necessary(&parse_ideal("x,y,z^9", 3).unwrap()).unwrap();
    assert_eq!((r.n, r.k, r.m1, r.passes), (9, 2, 1, false));
}

#[test]
fn labels_of_worked_examples() {
    assert_eq!(label("S"), "I(a)(ii)");
    assert_eq!(label("J"), "I(a)(ii)");
    assert_eq!(label("L"), "I(a)(iii)");
    assert_eq!(label("W"), "III(a″)(i)");
    assert_eq!(label("V"), "II");
    assert_eq!(label("O"), "III(a″)(ii)");
    assert_eq!(label("M"), "none");
    assert_eq!(label("N"), "none");
}

#[test]
fn claimed_type_implies_its_conditions() {
    for ex in fixtures::NAMED {
        let r = classify_type(&ex.ideal.ideal()).unwrap();
        let keys: &[&str] = match r.claimed_type {
            ClaimedType::I => &["a", "b", "c", "d", "e"],
            ClaimedType::II => &["a′", "b′", "c′", "d′", "e′"],
            ClaimedType::III => &["a″", "b″", "c″", "d″", "e″"],
            ClaimedType::None => &[],
        };
        for k in keys {
            assert_eq!(r.conditions[*k].status, Status::Pass, "{} {k}", ex.name);
        }
        if r.claimed_type != ClaimedType::None {
            assert!(r.hypotheses.values().all(|c| c.passed()), "{}", ex.name);
        }
    }
}

#[test]
fn labels_are_invariant_under_relabelling() {
    let l = compact_ideal(fixtures::L).unwrap();
    for perm in [[1, 0, 2], [2, 1, 0], [1, 2, 0]] {
        let p = l.permute_variables(&perm).unwrap();
        assert_eq!(classify_type(&p).unwrap().label, "I(a)(iii)");
    }
    let (sorted, perm) = sort_variables(&l.permute_variables(&[2, 0, 1]).unwrap()).unwrap();
    let powers = sorted.pure_powers().unwrap();
    assert!(powers.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(perm.len(), 3);
}

#[test]
fn boundary_maxima() {
    let m2 = max_boundary_count([2, 2, 2], Region::Lower, DEFAULT_BUDGET).unwrap();
    assert_eq!(m2.count, 6);
    assert_eq!(m2.witnesses, vec![power_ideal(3, 2).unwrap()]);

    let s = max_boundary_count([2, 2, 4], Region::Lower, DEFAULT_BUDGET).unwrap();
    assert_eq!(s.count, 6);
    assert!(s.witnesses.contains(&compact_ideal(fixtures::S).unwrap()));

    let w = max_boundary_count([5, 5, 6], Region::Lower, DEFAULT_BUDGET).unwrap();
    assert_eq!(w.count, 21);
    let witness_points: BTreeSet<_> = w
        .witnesses
        .iter()
        .flat_map(|i| {
            ideal_hull(i)
                .unwrap()
                .boundary_lattice_points(Side::Lower)
                .unwrap()
        })
        .collect();
    let own = ideal_hull(&compact_ideal(fixtures::W).unwrap()).unwrap();
    assert!(own
        .boundary_lattice_points(Side::Lower)
        .unwrap()
        .iter()
        .all(|p| witness_points.contains(p)));
}

#[test]
fn boundary_search_errors() {
    assert!(matches!(
        max_boundary_count([3, 2, 4], Region::Lower, DEFAULT_BUDGET),
        Err(Error::InvalidParam { .. })
    ));
    assert!(matches!(
        max_boundary_count([4, 5, 5], Region::Both, 100),
        Err(Error::BudgetExceeded { budget: 100 })
    ));
}

#[test]
fn borel_candidates() {
    let all = borel_ideals_with_powers([4, 5, 5]).unwrap();
    assert_eq!(all.len(), 15);
    assert!(all
        .iter()
        .all(|i| i.is_borel_fixed() && i.pure_powers().unwrap() == vec![4, 5, 5]));
    assert_eq!(borel_ideals_with_powers([5, 5, 6]).unwrap().len(), 31);
    let v = max_boundary_count_borel([4, 5, 5], Region::Upper, Some(34)).unwrap();
    assert!(v.witnesses.iter().all(|i| colength(i).unwrap() == 34));
    let h = ideal_hull(&compact_ideal(fixtures::V).unwrap()).unwrap();
    assert_eq!(
        region_lattice_points(&h, Region::Upper).unwrap().len(),
        v.count
    );
}

#[test]
fn scopes() {
    assert_eq!(
        "borel-colength".parse::<Scope>().unwrap(),
        Scope::BorelColength
    );
    assert_eq!("all".parse::<Scope>().unwrap(), Scope::All);
    assert!("sometimes".parse::<Scope>().is_err());
    let v = named("V").unwrap().ideal.ideal();
    let borel = classify_type_with(
        &v,
        ClassifyOptions {
            scope: Scope::Borel,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(borel.label, "II");
    // the unrestricted search finds a larger upper boundary than V's own
    let all = classify_type_with(
        &v,
        ClassifyOptions {
            scope: Scope::All,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(all.label, "none");
    let upper = all
        .maxima
        .iter()
        .find(|m| m.region == Region::Upper)
        .unwrap();
    assert!(upper.all.unwrap() > upper.count);
}

#[test]
fn condition_c_is_skipped_after_cheap_failures() {
    let m = named("M").unwrap().ideal.ideal();
    let r = classify_type(&m).unwrap();
    assert!(r.conditions.values().any(|c| c.status == Status::Skipped));
    let full = classify_type_with(
        &m,
        ClassifyOptions {
            evaluate_all: true,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(full.label, "none");
    assert!(full.conditions["c"].status != Status::Skipped);
}

#[test]
fn only_three_variables() {
    let two = parse_ideal("x^2,y", 2).unwrap();
    assert!(matches!(
        classify_type(&two),
        Err(Error::UnsupportedDimension(2))
    ));
}
