use aifs_spatial::round::round4;
use aifs_spatial::{
    fuzzy_reduced_distance, real_reduced_distance, spatial_distance, spatial_norm,
    spatial_similarity, AifsPattern, Error, RealSequence,
};
use proptest::prelude::*;

fn pattern(label: &str, pairs: &[(f64, f64)]) -> AifsPattern {
    AifsPattern::from_pairs(label, pairs).unwrap()
}

#[test]
fn bundled_first_case_reproduces_the_reference_branches() {
    let b1 = pattern("B1", &[(0.5, 0.3), (0.7, 0.0), (0.4, 0.5), (0.7, 0.3)]);
    let a = pattern("A", &[(0.4, 0.3), (0.7, 0.1), (0.3, 0.6), (0.7, 0.3)]);
    let s = spatial_similarity(&b1, &a).unwrap();
    assert_eq!(round4(s.md), 0.95);
    assert_eq!(round4(s.nmd), 0.9625);
    assert_eq!(round4(s.ed), 0.9625);
    let d = spatial_distance(&b1, &a).unwrap();
    assert_eq!(round4(d.md), 0.05);
    assert_eq!(round4(d.nmd), 0.0375);
    assert_eq!(round4(d.ed), 0.0375);
}

#[test]
fn norm_of_a_single_membership_element_splits_across_branches() {
    let n = spatial_norm(&pattern("y", &[(0.5, 0.0)]));
    assert_eq!(n.md, 0.25);
    assert_eq!(n.nmd, 0.125);
    assert_eq!(n.ed, 0.125);
}

#[test]
fn membership_branch_can_leave_the_unit_range_on_alternating_patterns() {
    let y = pattern("y", &[(1.0, 0.0), (0.0, 1.0)]);
    let x = pattern("x", &[(0.0, 1.0), (1.0, 0.0)]);
    let d = spatial_distance(&y, &x).unwrap();
    assert_eq!(d.md, 1.125);
    assert_eq!(d.nmd, 1.125);
    assert_eq!(d.ed, 0.75);
    let s = spatial_similarity(&y, &x).unwrap();
    assert_eq!(s.md, -0.125);
}

#[test]
fn fuzzy_reduction_on_complementary_elements() {
    let y = pattern("y", &[(1.0, 0.0)]);
    let x = pattern("x", &[(0.0, 1.0)]);
    let (d1, d2) = fuzzy_reduced_distance(&y, &x).unwrap();
    assert_eq!(d1, 0.25);
    assert_eq!(d2, 0.5);
}

#[test]
fn fuzzy_reduction_rejects_hesitant_elements() {
    let y = pattern("y", &[(0.5, 0.3)]);
    let x = pattern("x", &[(0.4, 0.6)]);
    assert!(matches!(
        fuzzy_reduced_distance(&y, &x),
        Err(Error::NotFuzzy { index: 0, .. })
    ));
}

#[test]
fn real_reduction_of_opposite_constants() {
    let y = RealSequence::new(vec![1.0]).unwrap();
    let x = RealSequence::new(vec![0.0]).unwrap();
    assert_eq!(real_reduced_distance(&y, &x).unwrap(), 0.5);
}

#[test]
fn distance_requires_matching_lengths() {
    let y = pattern("y", &[(0.5, 0.25), (0.25, 0.5)]);
    let x = pattern("x", &[(0.5, 0.25)]);
    assert_eq!(
        spatial_distance(&y, &x),
        Err(Error::LengthMismatch { left: 2, right: 1 })
    );
}

fn dyadic_element() -> impl Strategy<Value = (f64, f64)> {
    (0u32..=64)
        .prop_flat_map(|mt| (Just(mt), 0..=64 - mt))
        .prop_map(|(mt, nt)| (f64::from(mt) / 64.0, f64::from(nt) / 64.0))
}

fn pattern_triple() -> impl Strategy<Value = (AifsPattern, AifsPattern, AifsPattern)> {
    (1usize..=16).prop_flat_map(|k| {
        (
            prop::collection::vec(dyadic_element(), k),
            prop::collection::vec(dyadic_element(), k),
            prop::collection::vec(dyadic_element(), k),
        )
            .prop_map(|(y, x, z)| {
                (
                    AifsPattern::from_pairs("y", &y).unwrap(),
                    AifsPattern::from_pairs("x", &x).unwrap(),
                    AifsPattern::from_pairs("z", &z).unwrap(),
                )
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn branches_vanish_exactly_on_equal_patterns((y, _, _) in pattern_triple()) {
        let d = spatial_distance(&y, &y).unwrap();
        prop_assert_eq!(d.md, 0.0);
        prop_assert_eq!(d.nmd, 0.0);
        prop_assert_eq!(d.ed, 0.0);
    }

    #[test]
    fn branches_are_symmetric((y, x, _) in pattern_triple()) {
        let forward = spatial_distance(&y, &x).unwrap();
        let backward = spatial_distance(&x, &y).unwrap();
        prop_assert_eq!(forward.md, backward.md);
        prop_assert_eq!(forward.nmd, backward.nmd);
        prop_assert_eq!(forward.ed, backward.ed);
    }

    #[test]
    fn branches_satisfy_the_triangle_inequality((y, x, z) in pattern_triple()) {
        let yx = spatial_distance(&y, &x).unwrap();
        let yz = spatial_distance(&y, &z).unwrap();
        let zx = spatial_distance(&z, &x).unwrap();
        prop_assert!(yx.md <= yz.md + zx.md + 1e-12);
        prop_assert!(yx.nmd <= yz.nmd + zx.nmd + 1e-12);
        prop_assert!(yx.ed <= yz.ed + zx.ed + 1e-12);
    }

    #[test]
    fn similarity_complements_distance_on_every_branch((y, x, _) in pattern_triple()) {
        let d = spatial_distance(&y, &x).unwrap();
        let s = spatial_similarity(&y, &x).unwrap();
        prop_assert_eq!(s.md, 1.0 - d.md);
        prop_assert_eq!(s.nmd, 1.0 - d.nmd);
        prop_assert_eq!(s.ed, 1.0 - d.ed);
    }

    #[test]
    fn fuzzy_patterns_collapse_to_the_reduced_distances(
        (my, mx) in (1usize..=16).prop_flat_map(|k| (
            prop::collection::vec(0u32..=64, k),
            prop::collection::vec(0u32..=64, k),
        )),
    ) {
        let fuzzy = |ticks: &[u32], label: &str| {
            let pairs: Vec<(f64, f64)> = ticks
                .iter()
                .map(|&t| (f64::from(t) / 64.0, f64::from(64 - t) / 64.0))
                .collect();
            AifsPattern::from_pairs(label, &pairs).unwrap()
        };
        let y = fuzzy(&my, "y");
        let x = fuzzy(&mx, "x");
        let (d1, d2) = fuzzy_reduced_distance(&y, &x).unwrap();
        prop_assert!((d2 - 2.0 * d1).abs() <= 1e-12);
        let d = spatial_distance(&y, &x).unwrap();
        prop_assert_eq!(d.md, d.nmd);
        prop_assert!((d.ed - d2).abs() <= 1e-12);
    }

    #[test]
    fn real_sequences_embed_onto_the_matching_branch(
        (vy, vx) in (1usize..=16).prop_flat_map(|k| (
            prop::collection::vec(0u32..=64, k),
            prop::collection::vec(0u32..=64, k),
        )),
    ) {
        let reals = |ticks: &[u32]| {
            RealSequence::new(ticks.iter().map(|&t| f64::from(t) / 64.0).collect()).unwrap()
        };
        let v = reals(&vy);
        let u = reals(&vx);
        let direct = real_reduced_distance(&v, &u).unwrap();
        let membership =
            spatial_distance(&v.embed_membership("y"), &u.embed_membership("x")).unwrap();
        prop_assert!((membership.md - direct).abs() <= 1e-12);
        let nonmembership =
            spatial_distance(&v.embed_nonmembership("y"), &u.embed_nonmembership("x")).unwrap();
        prop_assert!((nonmembership.nmd - direct).abs() <= 1e-12);
    }
}
