//! Acceptance criteria, one line each. Runs without the libtest harness so
//! that every line appears in a plain `cargo test`.
//!
//! A criterion listed in `KNOWN_FAILURES` is expected to fail with exactly
//! the recorded mismatch; anything else failing makes the target fail.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use staircase::conjecture::{binomial, classify_type, classify_type_with, ClassifyOptions, Scope};
use staircase::families::{
    self, fat_point_colength, fat_point_ideal, fat_point_tangent, FamilyKind, FamilyTag,
};
use staircase::fixtures::{self, compact_ideal, named, TABLE};
use staircase::search::{count_ideals, enumerate_ideals, max_tangent};
use staircase::tangent::{tangent_dimension, tangent_dimension_dense};
use staircase::{colength, power_ideal, render, MonomialIdeal};

/// Criterion number and the detail string its failure must produce.
const KNOWN_FAILURES: &[(u32, &str)] = &[(2, "N: computed 66, stated 78")];

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok: impl Into<String>) -> Outcome {
    if failures.is_empty() {
        Outcome {
            pass: true,
            detail: ok.into(),
        }
    } else {
        Outcome {
            pass: false,
            detail: failures.join("; "),
        }
    }
}

fn t(i: &MonomialIdeal) -> usize {
    tangent_dimension(i).unwrap().dimension
}

fn power_formula() -> Outcome {
    let expected = [3, 18, 60, 150, 315, 588];
    let mut bad = Vec::new();
    for (k, &want) in (1u32..=6).zip(&expected) {
        let formula = (binomial(k as u64 + 1, 2) * binomial(k as u64 + 2, 2)) as usize;
        let got = t(&power_ideal(3, k).unwrap());
        if got != want || formula != want {
            bad.push(format!(
                "k={k}: computed {got}, formula {formula}, expected {want}"
            ));
        }
    }
    outcome(bad, "T(m^k) = 3, 18, 60, 150, 315, 588 for k = 1..6")
}

fn reference_values() -> Outcome {
    let mut bad = Vec::new();
    let names = ["L", "F", "U", "V", "W", "O", "G", "H", "M", "N"];
    for name in names {
        let ex = named(name).unwrap();
        let got = t(&ex.ideal.ideal());
        let want = ex.tangent.unwrap();
        if got != want {
            bad.push(format!("{name}: computed {got}, stated {want}"));
        }
    }
    outcome(bad, "all ten reference tangent dimensions reproduced")
}

fn fat_points() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for g1 in 1..=3 {
        for g2 in 1..=3 {
            for g3 in 1..=3 {
                for k in 1..=3 {
                    let g = [g1, g2, g3];
                    if fat_point_colength(g, k) > 60 {
                        continue;
                    }
                    checked += 1;
                    let i = fat_point_ideal(g, k).unwrap();
                    let (n, tt) = (colength(&i).unwrap() as u64, t(&i) as u64);
                    if n != fat_point_colength(g, k) || tt != fat_point_tangent(g, k) {
                        bad.push(format!("g={g:?} k={k}: n {n} T {tt}"));
                    }
                }
            }
        }
    }
    outcome(bad, format!("{checked} fat points match both formulas"))
}

fn certified_maxima() -> Outcome {
    let mut bad = Vec::new();
    let mut max16 = 0;
    for row in TABLE.iter().filter(|r| r.n <= 16) {
        let r = max_tangent(row.n, false).unwrap();
        for p in row.ideals {
            if r.argmax.binary_search(&p.ideal()).is_err() {
                bad.push(format!("n={}: {} not a maximizer", row.n, p.corrected));
            }
        }
        if row.n == 16 {
            max16 = r.max_tangent;
        }
    }
    if max16 != 88 {
        bad.push(format!("max at 16 is {max16}"));
    }
    let n_ideal = named("N").unwrap().ideal.ideal();
    let (nn, nt) = (colength(&n_ideal).unwrap(), t(&n_ideal));
    if nn != 16 || nt >= max16 {
        bad.push(format!("N: colength {nn}, T {nt}"));
    }
    outcome(
        bad,
        format!("listed ideals maximal for n <= 16; max(16) = 88; T(N) = {nt} < 88"),
    )
}

fn classifier() -> Outcome {
    let expect = [
        ("S", "I(a)(ii)"),
        ("F", "I(a)(ii)"),
        ("U", "I(a)(ii)"),
        ("L", "I(a)(iii)"),
        ("V", "II"),
        ("W", "III(a″)(i)"),
        ("O", "III(a″)(ii)"),
        ("M", "none"),
        ("G", "none"),
        ("H", "none"),
    ];
    let mut bad = Vec::new();
    for (name, want) in expect {
        let got = classify_type(&named(name).unwrap().ideal.ideal())
            .unwrap()
            .label;
        if got != want {
            bad.push(format!("{name}: {got}, expected {want}"));
        }
    }
    outcome(
        bad,
        "ten labels reproduced under the Borel same-colength scope",
    )
}

/// Labels under the other candidate scopes; reported, not asserted.
fn other_scopes() {
    for (name, scopes) in [
        ("V", &[Scope::Borel, Scope::All][..]),
        ("O", &[Scope::Borel, Scope::All][..]),
        ("W", &[Scope::Borel][..]),
    ] {
        for &scope in scopes {
            let opts = ClassifyOptions {
                scope,
                ..Default::default()
            };
            let r = classify_type_with(&named(name).unwrap().ideal.ideal(), opts).unwrap();
            println!("    info: {name} under scope {scope:?}: {}", r.label);
        }
    }
    println!("    info: W under scope All not run (search exceeds the default node budget)");
}

fn family_formulas() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for tag in FamilyTag::ALL {
        for p in 1..=8 {
            let Ok(kind) = FamilyKind::new(tag, p) else {
                continue;
            };
            let n = families::predicted_colength(kind).unwrap();
            if n > 40 {
                continue;
            }
            checked += 1;
            let i = families::family_ideal(kind).unwrap();
            let (cn, ct) = (colength(&i).unwrap() as u64, t(&i) as u64);
            let pt = families::predicted_tangent(kind).unwrap();
            if cn != n || ct != pt {
                bad.push(format!("{kind}: n {cn}/{n}, T {ct}/{pt}"));
            }
        }
    }
    for boundary in [
        FamilyKind::new(FamilyTag::T3, 3),
        FamilyKind::new(FamilyTag::DoubleStar, 3),
    ] {
        if boundary.is_err() {
            bad.push("boundary member rejected".into());
        }
    }
    outcome(
        bad,
        format!("{checked} family members match both closed forms"),
    )
}

fn enumeration() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=16 {
        let ideals = enumerate_ideals(n).unwrap();
        if ideals.len() as u128 != count_ideals(n) {
            bad.push(format!(
                "n={n}: {} enumerated, {} counted",
                ideals.len(),
                count_ideals(n)
            ));
        }
        let set: BTreeSet<&MonomialIdeal> = ideals.iter().collect();
        if set.len() != ideals.len() {
            bad.push(format!("n={n}: duplicates"));
        }
        for i in &ideals {
            for p in PERMUTATIONS {
                if !set.contains(&i.permute_variables(&p).unwrap()) {
                    bad.push(format!("n={n}: {} not closed under {p:?}", render(i)));
                }
            }
        }
    }
    outcome(
        bad,
        format!(
            "counts agree for n <= 16 ({} at n = 16), no duplicates, closed under permutations",
            count_ideals(16)
        ),
    )
}

fn oracle() -> Outcome {
    let mut bad = Vec::new();
    let mut exhaustive = 0;
    for n in 1..=10 {
        for i in enumerate_ideals(n).unwrap() {
            exhaustive += 1;
            if t(&i) != tangent_dimension_dense(&i).unwrap() {
                bad.push(render(&i));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let pools: Vec<Vec<MonomialIdeal>> = (11..=20).map(|n| enumerate_ideals(n).unwrap()).collect();
    for _ in 0..200 {
        let pool = &pools[rng.gen_range(0..pools.len())];
        let i = &pool[rng.gen_range(0..pool.len())];
        if t(i) != tangent_dimension_dense(i).unwrap() {
            bad.push(render(i));
        }
    }
    outcome(bad, format!("graded = dense on {exhaustive} ideals with n <= 10 and 200 random ideals with 11 <= n <= 20"))
}

fn boundary_colength() -> Outcome {
    let hits: Vec<MonomialIdeal> = enumerate_ideals(10)
        .unwrap()
        .into_iter()
        .filter(|i| i.is_borel_fixed() && i.pure_powers().unwrap().into_iter().min() == Some(3))
        .collect();
    let m3 = power_ideal(3, 3).unwrap();
    if hits == [m3] {
        outcome(
            vec![],
            "m^3 is the only Borel-fixed ideal of colength 10 with m1 = 3",
        )
    } else {
        outcome(
            vec![format!(
                "found {:?}",
                hits.iter().map(render).collect::<Vec<_>>()
            )],
            "",
        )
    }
}

fn main() -> ExitCode {
    // the fixtures must parse before anything else runs
    assert!(compact_ideal(fixtures::S).is_ok());
    let criteria: [Criterion; 9] = [
        (1, "power of the maximal ideal", power_formula),
        (2, "reference tangent dimensions", reference_values),
        (3, "fat points", fat_points),
        (4, "certified maxima up to colength 16", certified_maxima),
        (5, "type classifier", classifier),
        (6, "family closed forms", family_formulas),
        (7, "enumeration soundness", enumeration),
        (8, "graded and dense oracles agree", oracle),
        (9, "boundary colength", boundary_colength),
    ];
    let mut unexpected = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id);
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        let note = match (o.pass, known) {
            (true, None) => "",
            (false, Some((_, d))) if o.detail == *d => " (known, recorded)",
            (true, Some(_)) => {
                unexpected += 1;
                " (expected to fail; update KNOWN_FAILURES)"
            }
            _ => {
                unexpected += 1;
                ""
            }
        };
        println!(
            "criterion {id} {verdict}{note}: {name}: {} [{secs:.1}s]",
            o.detail
        );
        if id == 5 {
            other_scopes();
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected outcome(s)");
        ExitCode::FAILURE
    }
}
