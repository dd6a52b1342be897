//! Seeded property checks for the distance and similarity families.
//!
//! Every suite restarts its own generator from the same seed, so a report
//! is reproducible draw for draw and two runs with equal arguments are
//! byte-identical. All coordinates are drawn from the 1/64 grid; on that
//! grid the algebraic identities hold exactly in floating point, which
//! keeps the tight tolerances below honest.

use serde::Serialize;

use crate::aifs::{AifsPattern, RealSequence};
use crate::baseline::{catalog_entry, similarity, MeasureId, MeasureParams, Partition};
use crate::ops::{delta, novel_dd_sequence, novel_dd_sequence_raw, Projection};
use crate::spatial::{
    fuzzy_reduced_distance, real_reduced_distance, spatial_distance, spatial_distance_raw,
    spatial_similarity, SpatialValue,
};

/// Slack allowed on identities that are exact up to float associativity.
const TOL: f64 = 1e-12;

/// Deterministic 64-bit generator behind every suite.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in 0..n via modulo; n must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

fn draw_len(rng: &mut SplitMix64) -> usize {
    1 + rng.below(16) as usize
}

fn draw_pattern(rng: &mut SplitMix64, label: &str, k: usize) -> AifsPattern {
    let mut pairs = Vec::with_capacity(k);
    for _ in 0..k {
        let mt = rng.below(65);
        let nt = rng.below(65 - mt);
        pairs.push((mt as f64 / 64.0, nt as f64 / 64.0));
    }
    AifsPattern::from_pairs(label, &pairs).expect("grid draws satisfy the element constraint")
}

fn draw_fuzzy_pattern(rng: &mut SplitMix64, label: &str, k: usize) -> AifsPattern {
    let mut pairs = Vec::with_capacity(k);
    for _ in 0..k {
        let mt = rng.below(65);
        pairs.push((mt as f64 / 64.0, (64 - mt) as f64 / 64.0));
    }
    AifsPattern::from_pairs(label, &pairs).expect("complementary grid draws are valid")
}

fn draw_raw_pairs(rng: &mut SplitMix64, k: usize) -> Vec<(f64, f64)> {
    (0..k)
        .map(|_| (rng.below(65) as f64 / 64.0, rng.below(65) as f64 / 64.0))
        .collect()
}

fn draw_reals(rng: &mut SplitMix64, k: usize) -> Vec<f64> {
    (0..k).map(|_| rng.below(65) as f64 / 64.0).collect()
}

/// Grid value in [-1, 1].
fn draw_tick(rng: &mut SplitMix64) -> f64 {
    (rng.below(129) as f64 - 64.0) / 64.0
}

/// Grid value in [-2, 2].
fn draw_eta(rng: &mut SplitMix64) -> f64 {
    (rng.below(257) as f64 - 128.0) / 64.0
}

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub description: &'static str,
    pub trials: usize,
    pub failures: usize,
    /// Advisory suites document expected limitations and never fail a run.
    pub advisory: bool,
    pub first_counterexample: Option<String>,
}

/// Outcome of a full run.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<PropertyReport>,
}

impl AxiomReport {
    pub fn suite(&self, name: &str) -> Option<&PropertyReport> {
        self.suites.iter().find(|s| s.name == name)
    }

    /// Failure count over the non-advisory suites.
    pub fn fatal_failures(&self) -> usize {
        self.suites
            .iter()
            .filter(|s| !s.advisory)
            .map(|s| s.failures)
            .sum()
    }

    pub fn passed(&self) -> bool {
        self.fatal_failures() == 0
    }
}

#[derive(Default)]
struct SuiteRun {
    failures: usize,
    first: Option<String>,
}

impl SuiteRun {
    fn fail(&mut self, detail: String) {
        if self.first.is_none() {
            self.first = Some(detail);
        }
        self.failures += 1;
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.fail(detail());
        }
    }

    fn report(
        self,
        name: &'static str,
        description: &'static str,
        trials: usize,
        advisory: bool,
    ) -> PropertyReport {
        PropertyReport {
            name,
            description,
            trials,
            failures: self.failures,
            advisory,
            first_counterexample: self.first,
        }
    }
}

fn branches(value: &SpatialValue) -> [(&'static str, f64); 3] {
    [("md", value.md), ("nmd", value.nmd), ("ed", value.ed)]
}

/// The non-spatial measure ids, in catalog order.
fn scalar_ids() -> impl Iterator<Item = MeasureId> {
    MeasureId::ALL.into_iter().filter(|id| !id.is_spatial())
}

/// Exponents the suites sweep: both published settings for the measures
/// that take one, a single pass for the rest.
fn exponents(id: MeasureId) -> &'static [u32] {
    if catalog_entry(id).params.contains(&"p") {
        &[1, 2]
    } else {
        &[1]
    }
}

fn scalar_params(id: MeasureId, p: u32, k: usize) -> MeasureParams {
    let mut params = MeasureParams::with_p(p);
    if id == MeasureId::SAzPH {
        params.partition = Some(Partition::upper_half(k));
    }
    params
}

fn suite_spatial_range(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let y = draw_pattern(&mut rng, "y", k);
        let x = draw_pattern(&mut rng, "x", k);
        let d = spatial_distance(&y, &x).expect("lengths match");
        for (branch, value) in branches(&d) {
            run.check((0.0..=1.0).contains(&value), || {
                format!(
                    "trial {trial}: {branch} distance {value} leaves [0, 1] for y = {:?}, x = {:?}",
                    y.pairs(),
                    x.pairs()
                )
            });
        }
    }
    run.report(
        "spatial_range",
        "each spatial distance branch stays within [0, 1] on valid patterns",
        trials,
        false,
    )
}

fn suite_spatial_identity(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let y = draw_pattern(&mut rng, "y", k);
        let x = draw_pattern(&mut rng, "x", k);
        let d_self = spatial_distance(&y, &y).expect("lengths match");
        for (branch, value) in branches(&d_self) {
            run.check(value == 0.0, || {
                format!(
                    "trial {trial}: {branch} self-distance is {value} for y = {:?}",
                    y.pairs()
                )
            });
        }
        if y.pairs() != x.pairs() {
            let d = spatial_distance(&y, &x).expect("lengths match");
            for (branch, value) in branches(&d) {
                run.check(value > 0.0, || {
                    format!(
                        "trial {trial}: {branch} distance is {value} for distinct y = {:?}, x = {:?}",
                        y.pairs(),
                        x.pairs()
                    )
                });
            }
        }
    }
    run.report(
        "spatial_identity",
        "self-distance is exactly zero and distinct patterns sit at positive distance",
        trials,
        false,
    )
}

fn suite_spatial_symmetry(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let y = draw_pattern(&mut rng, "y", k);
        let x = draw_pattern(&mut rng, "x", k);
        let forward = spatial_distance(&y, &x).expect("lengths match");
        let backward = spatial_distance(&x, &y).expect("lengths match");
        for ((branch, a), (_, b)) in branches(&forward).into_iter().zip(branches(&backward)) {
            run.check(a == b, || {
                format!(
                    "trial {trial}: {branch} distance differs by order, {a} vs {b}, for y = {:?}, x = {:?}",
                    y.pairs(),
                    x.pairs()
                )
            });
        }
    }
    run.report(
        "spatial_symmetry",
        "spatial distance does not depend on argument order",
        trials,
        false,
    )
}

fn suite_spatial_triangle(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let y = draw_pattern(&mut rng, "y", k);
        let x = draw_pattern(&mut rng, "x", k);
        let z = draw_pattern(&mut rng, "z", k);
        let yx = spatial_distance(&y, &x).expect("lengths match");
        let yz = spatial_distance(&y, &z).expect("lengths match");
        let zx = spatial_distance(&z, &x).expect("lengths match");
        for (((branch, direct), (_, leg_a)), (_, leg_b)) in branches(&yx)
            .into_iter()
            .zip(branches(&yz))
            .zip(branches(&zx))
        {
            run.check(direct <= leg_a + leg_b + TOL, || {
                format!(
                    "trial {trial}: {branch} triangle gap {} for y = {:?}, x = {:?}, z = {:?}",
                    direct - leg_a - leg_b,
                    y.pairs(),
                    x.pairs(),
                    z.pairs()
                )
            });
        }
    }
    run.report(
        "spatial_triangle",
        "each spatial distance branch satisfies the triangle inequality",
        trials,
        false,
    )
}

fn suite_translation_invariance(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let y = draw_raw_pairs(&mut rng, k);
        let x = draw_raw_pairs(&mut rng, k);
        let shift = (draw_tick(&mut rng), draw_tick(&mut rng));
        let moved = |seq: &[(f64, f64)]| -> Vec<(f64, f64)> {
            seq.iter()
                .map(|&(m, n)| (m + shift.0, n + shift.1))
                .collect()
        };
        let base = spatial_distance_raw(&y, &x).expect("lengths match");
        let shifted = spatial_distance_raw(&moved(&y), &moved(&x)).expect("lengths match");
        for ((branch, a), (_, b)) in branches(&base).into_iter().zip(branches(&shifted)) {
            run.check((a - b).abs() <= TOL, || {
                format!(
                    "trial {trial}: {branch} distance moves from {a} to {b} under shift {shift:?} for y = {y:?}, x = {x:?}"
                )
            });
        }
    }
    run.report(
        "translation_invariance",
        "shifting both sequences by a common pair leaves every branch unchanged",
        trials,
        false,
    )
}

fn suite_absolute_homogeneity(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let y = draw_raw_pairs(&mut rng, k);
        let x = draw_raw_pairs(&mut rng, k);
        let eta = draw_eta(&mut rng);
        let scaled = |seq: &[(f64, f64)]| -> Vec<(f64, f64)> {
            seq.iter().map(|&(m, n)| (eta * m, eta * n)).collect()
        };
        let base = spatial_distance_raw(&y, &x).expect("lengths match");
        let grown = spatial_distance_raw(&scaled(&y), &scaled(&x)).expect("lengths match");
        for ((branch, a), (_, b)) in branches(&base).into_iter().zip(branches(&grown)) {
            run.check((b - eta.abs() * a).abs() <= TOL, || {
                format!(
                    "trial {trial}: {branch} distance scales to {b} instead of {} under factor {eta} for y = {y:?}, x = {x:?}",
                    eta.abs() * a
                )
            });
        }
    }
    run.report(
        "absolute_homogeneity",
        "scaling both sequences by a factor scales every branch by its magnitude",
        trials,
        false,
    )
}

fn suite_complementarity(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let y = draw_pattern(&mut rng, "y", k);
        let x = draw_pattern(&mut rng, "x", k);
        let d = spatial_distance(&y, &x).expect("lengths match");
        let s = spatial_similarity(&y, &x).expect("lengths match");
        for ((branch, dist), (_, sim)) in branches(&d).into_iter().zip(branches(&s)) {
            run.check(sim == 1.0 - dist, || {
                format!(
                    "trial {trial}: {branch} similarity {sim} is not 1 - {dist} for y = {:?}, x = {:?}",
                    y.pairs(),
                    x.pairs()
                )
            });
        }
    }
    run.report(
        "complementarity",
        "similarity is exactly one minus distance on every branch",
        trials,
        false,
    )
}

fn suite_fuzzy_reduction(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let y = draw_fuzzy_pattern(&mut rng, "y", k);
        let x = draw_fuzzy_pattern(&mut rng, "x", k);
        let (_, d2) = fuzzy_reduced_distance(&y, &x).expect("fuzzy draws reduce");
        let d = spatial_distance(&y, &x).expect("lengths match");
        run.check(d.md == d.nmd, || {
            format!(
                "trial {trial}: fuzzy branches split, md = {} vs nmd = {}, for y = {:?}, x = {:?}",
                d.md,
                d.nmd,
                y.pairs(),
                x.pairs()
            )
        });
        run.check((d.ed - d2).abs() <= TOL, || {
            format!(
                "trial {trial}: joint branch {} differs from second reduced distance {d2} for y = {:?}, x = {:?}",
                d.ed,
                y.pairs(),
                x.pairs()
            )
        });
        let full_y = novel_dd_sequence(&y, Projection::Full);
        let full_x = novel_dd_sequence(&x, Projection::Full);
        let mu_y = novel_dd_sequence(&y, Projection::MembershipOnly);
        let mu_x = novel_dd_sequence(&x, Projection::MembershipOnly);
        for j in 0..k {
            let joint = (full_y[j] - full_x[j]).abs();
            let membership = (mu_y[j] - mu_x[j]).abs();
            run.check((joint - 2.0 * membership).abs() <= TOL, || {
                format!(
                    "trial {trial}: step {j} has joint difference {joint}, expected twice {membership}, for y = {:?}, x = {:?}",
                    y.pairs(),
                    x.pairs()
                )
            });
        }
    }
    run.report(
        "fuzzy_reduction",
        "on fuzzy patterns the two directional branches coincide and the joint branch equals the doubled reduced distance",
        trials,
        false,
    )
}

fn suite_real_embedding(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let v = RealSequence::new(draw_reals(&mut rng, k)).expect("grid reals are valid");
        let u = RealSequence::new(draw_reals(&mut rng, k)).expect("grid reals are valid");
        let direct = real_reduced_distance(&v, &u).expect("lengths match");
        let membership = spatial_distance(&v.embed_membership("y"), &u.embed_membership("x"))
            .expect("lengths match");
        run.check((membership.md - direct).abs() <= TOL, || {
            format!(
                "trial {trial}: membership embedding gives {} instead of {direct} for v = {:?}, u = {:?}",
                membership.md,
                v.values(),
                u.values()
            )
        });
        let nonmembership =
            spatial_distance(&v.embed_nonmembership("y"), &u.embed_nonmembership("x"))
                .expect("lengths match");
        run.check((nonmembership.nmd - direct).abs() <= TOL, || {
            format!(
                "trial {trial}: non-membership embedding gives {} instead of {direct} for v = {:?}, u = {:?}",
                nonmembership.nmd,
                v.values(),
                u.values()
            )
        });
    }
    run.report(
        "real_embedding",
        "embedding real sequences on either coordinate reproduces the reduced real distance on the matching branch",
        trials,
        false,
    )
}

fn suite_operator_distributivity(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let a = (0..k).map(|_| draw_tick(&mut rng)).collect::<Vec<_>>();
        let b = (0..k).map(|_| draw_tick(&mut rng)).collect::<Vec<_>>();
        let eta = draw_eta(&mut rng);
        let sum: Vec<f64> = a.iter().zip(&b).map(|(&p, &q)| p + q).collect();
        let scaled: Vec<f64> = a.iter().map(|&p| eta * p).collect();
        let da = delta(&a).expect("non-empty");
        let db = delta(&b).expect("non-empty");
        let dsum = delta(&sum).expect("non-empty");
        let dscaled = delta(&scaled).expect("non-empty");
        for j in 0..k {
            run.check((dsum[j] - (da[j] + db[j])).abs() <= TOL, || {
                format!(
                    "trial {trial}: step operator is not additive at {j} for a = {a:?}, b = {b:?}"
                )
            });
            run.check((dscaled[j] - eta * da[j]).abs() <= TOL, || {
                format!(
                    "trial {trial}: step operator is not homogeneous at {j} under {eta} for a = {a:?}"
                )
            });
        }
        let pa = draw_raw_pairs(&mut rng, k);
        let pb = draw_raw_pairs(&mut rng, k);
        let pair_sum: Vec<(f64, f64)> = pa
            .iter()
            .zip(&pb)
            .map(|(&(m1, n1), &(m2, n2))| (m1 + m2, n1 + n2))
            .collect();
        let pair_scaled: Vec<(f64, f64)> = pa.iter().map(|&(m, n)| (eta * m, eta * n)).collect();
        let fa = novel_dd_sequence_raw(&pa, Projection::Full);
        let fb = novel_dd_sequence_raw(&pb, Projection::Full);
        let fsum = novel_dd_sequence_raw(&pair_sum, Projection::Full);
        let fscaled = novel_dd_sequence_raw(&pair_scaled, Projection::Full);
        for j in 0..k {
            run.check((fsum[j] - (fa[j] + fb[j])).abs() <= TOL, || {
                format!(
                    "trial {trial}: pair step operator is not additive at {j} for a = {pa:?}, b = {pb:?}"
                )
            });
            run.check((fscaled[j] - eta * fa[j]).abs() <= TOL, || {
                format!(
                    "trial {trial}: pair step operator is not homogeneous at {j} under {eta} for a = {pa:?}"
                )
            });
        }
    }
    run.report(
        "operator_distributivity",
        "both step-size operators are additive and homogeneous",
        trials,
        false,
    )
}

fn suite_scalar_range(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let y = draw_pattern(&mut rng, "y", k);
        let x = draw_pattern(&mut rng, "x", k);
        for id in scalar_ids() {
            for &p in exponents(id) {
                let params = scalar_params(id, p, k);
                let s = similarity(id, &params, &y, &x).expect("suite inputs are valid");
                run.check((-TOL..=1.0 + TOL).contains(&s), || {
                    format!(
                        "trial {trial}: {id} (p = {p}) = {s} leaves [0, 1] for y = {:?}, x = {:?}",
                        y.pairs(),
                        x.pairs()
                    )
                });
            }
        }
    }
    run.report(
        "scalar_range",
        "every scalar similarity stays within [0, 1] on valid patterns",
        trials,
        false,
    )
}

fn suite_scalar_identity(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let y = draw_pattern(&mut rng, "y", k);
        for id in scalar_ids() {
            for &p in exponents(id) {
                let params = scalar_params(id, p, k);
                let s = similarity(id, &params, &y, &y).expect("suite inputs are valid");
                run.check((s - 1.0).abs() <= TOL, || {
                    format!(
                        "trial {trial}: {id} (p = {p}) = {s} on identical patterns y = {:?}",
                        y.pairs()
                    )
                });
            }
        }
    }
    run.report(
        "scalar_identity",
        "every scalar similarity returns one for identical patterns",
        trials,
        false,
    )
}

fn suite_scalar_symmetry(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let y = draw_pattern(&mut rng, "y", k);
        let x = draw_pattern(&mut rng, "x", k);
        for id in scalar_ids() {
            for &p in exponents(id) {
                let params = scalar_params(id, p, k);
                let forward = similarity(id, &params, &y, &x).expect("suite inputs are valid");
                let backward = similarity(id, &params, &x, &y).expect("suite inputs are valid");
                run.check((forward - backward).abs() <= TOL, || {
                    format!(
                        "trial {trial}: {id} (p = {p}) differs by order, {forward} vs {backward}, for y = {:?}, x = {:?}",
                        y.pairs(),
                        x.pairs()
                    )
                });
            }
        }
    }
    run.report(
        "scalar_symmetry",
        "every scalar similarity is symmetric in its arguments",
        trials,
        false,
    )
}

fn suite_hesitancy_split_consistency(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let y = draw_pattern(&mut rng, "y", k);
        let x = draw_pattern(&mut rng, "x", k);
        for p in [1, 2] {
            let mut full = MeasureParams::with_p(p);
            full.partition = Some(Partition::full(k));
            let anchored =
                similarity(MeasureId::SAzPH, &full, &y, &x).expect("suite inputs are valid");
            let plain = similarity(MeasureId::SAzP, &MeasureParams::with_p(p), &y, &x)
                .expect("suite inputs are valid");
            run.check((anchored - plain).abs() <= TOL, || {
                format!(
                    "trial {trial}: full split gives {anchored} vs {plain} at p = {p} for y = {:?}, x = {:?}",
                    y.pairs(),
                    x.pairs()
                )
            });
        }
    }
    run.report(
        "hesitancy_split_consistency",
        "splitting on the full index set reproduces the unsplit family at p = 1 and p = 2",
        trials,
        false,
    )
}

fn suite_containment(trials: usize, seed: u64) -> PropertyReport {
    let mut rng = SplitMix64::new(seed);
    let mut run = SuiteRun::default();
    for trial in 0..trials {
        let k = draw_len(&mut rng);
        let mut inner = Vec::with_capacity(k);
        let mut middle = Vec::with_capacity(k);
        let mut outer = Vec::with_capacity(k);
        for _ in 0..k {
            let mut mus = [0.0; 3];
            let mut nus = [0.0; 3];
            for i in 0..3 {
                let mt = rng.below(65);
                let nt = rng.below(65 - mt);
                mus[i] = mt as f64 / 64.0;
                nus[i] = nt as f64 / 64.0;
            }
            mus.sort_by(f64::total_cmp);
            nus.sort_by(f64::total_cmp);
            inner.push((mus[0], nus[2]));
            middle.push((mus[1], nus[1]));
            outer.push((mus[2], nus[0]));
        }
        let b1 = AifsPattern::from_pairs("b1", &inner).expect("sorted draws stay valid");
        let b2 = AifsPattern::from_pairs("b2", &middle).expect("sorted draws stay valid");
        let b3 = AifsPattern::from_pairs("b3", &outer).expect("sorted draws stay valid");
        let d13 = spatial_distance(&b1, &b3).expect("lengths match");
        let d12 = spatial_distance(&b1, &b2).expect("lengths match");
        let d23 = spatial_distance(&b2, &b3).expect("lengths match");
        for (((branch, wide), (_, left)), (_, right)) in branches(&d13)
            .into_iter()
            .zip(branches(&d12))
            .zip(branches(&d23))
        {
            run.check(wide + TOL >= left.max(right), || {
                format!(
                    "trial {trial}: {branch} distance over the nested span is {wide}, below inner legs {left} and {right}, for b1 = {:?}, b2 = {:?}, b3 = {:?}",
                    b1.pairs(),
                    b2.pairs(),
                    b3.pairs()
                )
            });
        }
        for id in scalar_ids() {
            let params = scalar_params(id, 1, k);
            let wide = similarity(id, &params, &b1, &b3).expect("suite inputs are valid");
            let left = similarity(id, &params, &b1, &b2).expect("suite inputs are valid");
            let right = similarity(id, &params, &b2, &b3).expect("suite inputs are valid");
            run.check(wide <= left.min(right) + TOL, || {
                format!(
                    "trial {trial}: {id} over the nested span is {wide}, above inner legs {left} and {right}, for b1 = {:?}, b2 = {:?}, b3 = {:?}",
                    b1.pairs(),
                    b2.pairs(),
                    b3.pairs()
                )
            });
        }
    }
    run.report(
        "containment",
        "nested patterns score no closer across the outer pair than across either inner pair; known not to hold for every family",
        trials,
        true,
    )
}

/// Runs every suite, each from a fresh generator at `seed`.
pub fn run_axioms(trials: usize, seed: u64) -> AxiomReport {
    let suites = vec![
        suite_spatial_range(trials, seed),
        suite_spatial_identity(trials, seed),
        suite_spatial_symmetry(trials, seed),
        suite_spatial_triangle(trials, seed),
        suite_translation_invariance(trials, seed),
        suite_absolute_homogeneity(trials, seed),
        suite_complementarity(trials, seed),
        suite_fuzzy_reduction(trials, seed),
        suite_real_embedding(trials, seed),
        suite_operator_distributivity(trials, seed),
        suite_scalar_range(trials, seed),
        suite_scalar_identity(trials, seed),
        suite_scalar_symmetry(trials, seed),
        suite_hesitancy_split_consistency(trials, seed),
        suite_containment(trials, seed),
    ];
    AxiomReport {
        seed,
        trials,
        suites,
    }
}
