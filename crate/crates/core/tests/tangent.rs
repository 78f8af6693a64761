use staircase::fixtures::{self, compact_ideal, named};
use staircase::tangent::{
    pairwise_syzygies, tangent_dimension, tangent_dimension_dense, tangent_dimension_with,
    TangentOptions,
};
use staircase::{parse_ideal, power_ideal, Error};

fn t(text: &str) -> usize {
    tangent_dimension(&compact_ideal(text).unwrap())
        .unwrap()
        .dimension
}

#[test]
fn syzygy_pairs() {
    let p = pairwise_syzygies(&parse_ideal("x,y", 2).unwrap());
    assert_eq!(p.len(), 1);
    assert_eq!(p[0].lcm.as_slice(), &[1, 1]);
    let p = pairwise_syzygies(&parse_ideal("x^2,x*y,y^2", 2).unwrap());
    let mut lcms: Vec<Vec<u32>> = p.iter().map(|s| s.lcm.as_slice().to_vec()).collect();
    lcms.sort();
    assert_eq!(lcms, vec![vec![1, 2], vec![2, 1], vec![2, 2]]);
    assert!(p.iter().all(|s| s.i < s.j));
    assert_eq!(pairwise_syzygies(&power_ideal(3, 2).unwrap()).len(), 15);
}

#[test]
fn small_values() {
    assert_eq!(t("x,y,z"), 3);
    assert_eq!(
        tangent_dimension_dense(&power_ideal(3, 1).unwrap()).unwrap(),
        3
    );
    assert_eq!(
        tangent_dimension_dense(&power_ideal(3, 2).unwrap()).unwrap(),
        18
    );
    let s = compact_ideal(fixtures::S).unwrap();
    assert_eq!(
        tangent_dimension_dense(&s).unwrap(),
        tangent_dimension(&s).unwrap().dimension
    );
    assert_eq!(tangent_dimension(&s).unwrap().dimension, 36);
}

#[test]
fn reference_examples() {
    assert_eq!(t(fixtures::L), 29);
    assert_eq!(t(fixtures::F), 66);
    assert_eq!(t(fixtures::U), 153);
    assert_eq!(t(fixtures::V), 276);
    assert_eq!(t(fixtures::W), 324);
    assert_eq!(t(fixtures::O), 207);
    assert_eq!(t(fixtures::G.corrected), 336);
    assert_eq!(t(fixtures::H.corrected), 187);
    assert_eq!(t(fixtures::M), 66);
}

/// The listed generators of N give 66, not the stated 78.
#[test]
fn n_example_disagrees_with_stated_value() {
    let n = named("N").unwrap();
    let i = n.ideal.ideal();
    assert_eq!(tangent_dimension(&i).unwrap().dimension, 66);
    assert_eq!(tangent_dimension_dense(&i).unwrap(), 66);
    assert_eq!(n.tangent, Some(78));
}

#[test]
fn per_weight_sums_to_dimension() {
    let i = compact_ideal(fixtures::O).unwrap();
    let opts = TangentOptions {
        per_weight: true,
        ..Default::default()
    };
    let r = tangent_dimension_with(&i, opts).unwrap();
    let parts = r.per_weight.unwrap();
    assert_eq!(
        parts.iter().map(|w| w.dimension).sum::<usize>(),
        r.dimension
    );
    assert!(parts.windows(2).all(|w| w[0].weight < w[1].weight));
    assert!(tangent_dimension(&i).unwrap().per_weight.is_none());
}

#[test]
fn other_variable_counts() {
    // smooth points: a curvilinear scheme in the plane and points on a line
    assert_eq!(
        tangent_dimension(&parse_ideal("x,y^3", 2).unwrap())
            .unwrap()
            .dimension,
        6
    );
    assert_eq!(
        tangent_dimension(&parse_ideal("x^4", 1).unwrap())
            .unwrap()
            .dimension,
        4
    );
    let four = parse_ideal("x1^2,x2,x3,x4", 4).unwrap();
    assert_eq!(tangent_dimension(&four).unwrap().dimension, 8);
    assert_eq!(tangent_dimension_dense(&four).unwrap(), 8);
}

#[test]
fn colength_cap_is_enforced() {
    let i = power_ideal(3, 6).unwrap();
    let opts = TangentOptions {
        colength_cap: 20,
        ..Default::default()
    };
    assert!(matches!(
        tangent_dimension_with(&i, opts),
        Err(Error::ColengthCap { cap: 20 })
    ));
    assert!(matches!(
        tangent_dimension(&parse_ideal("x^2,y", 3).unwrap()),
        Err(Error::NotZeroDimensional)
    ));
}
