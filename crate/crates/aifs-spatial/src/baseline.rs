//! Catalog of similarity measures dispatchable by identifier: nineteen
//! scalar measures from the literature plus the three spatial branches.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::aifs::AifsPattern;
use crate::error::Error;
use crate::spatial::spatial_similarity;

/// Identifier for every measure the crate can evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MeasureId {
    SLp,
    SBd,
    SC,
    SDc,
    SFz,
    SHk,
    SHy11,
    SHy21,
    SHy31,
    SHy12,
    SHy22,
    SHy32,
    SHy3,
    SLzd,
    SLs,
    SM,
    SHm,
    SAzP,
    SAzPH,
    SsmMd,
    SsmNmd,
    SsmEd,
}

impl MeasureId {
    pub const ALL: [MeasureId; 22] = [
        MeasureId::SLp,
        MeasureId::SBd,
        MeasureId::SC,
        MeasureId::SDc,
        MeasureId::SFz,
        MeasureId::SHk,
        MeasureId::SHy11,
        MeasureId::SHy21,
        MeasureId::SHy31,
        MeasureId::SHy12,
        MeasureId::SHy22,
        MeasureId::SHy32,
        MeasureId::SHy3,
        MeasureId::SLzd,
        MeasureId::SLs,
        MeasureId::SM,
        MeasureId::SHm,
        MeasureId::SAzP,
        MeasureId::SAzPH,
        MeasureId::SsmMd,
        MeasureId::SsmNmd,
        MeasureId::SsmEd,
    ];

    /// The three spatial branches.
    pub const SSM: [MeasureId; 3] = [MeasureId::SsmMd, MeasureId::SsmNmd, MeasureId::SsmEd];

    pub fn token(self) -> &'static str {
        match self {
            MeasureId::SLp => "s_lp",
            MeasureId::SBd => "s_bd",
            MeasureId::SC => "s_c",
            MeasureId::SDc => "s_dc",
            MeasureId::SFz => "s_fz",
            MeasureId::SHk => "s_hk",
            MeasureId::SHy11 => "s_hy1_1",
            MeasureId::SHy21 => "s_hy2_1",
            MeasureId::SHy31 => "s_hy3_1",
            MeasureId::SHy12 => "s_hy1_2",
            MeasureId::SHy22 => "s_hy2_2",
            MeasureId::SHy32 => "s_hy3_2",
            MeasureId::SHy3 => "s_hy_3",
            MeasureId::SLzd => "s_lzd",
            MeasureId::SLs => "s_ls",
            MeasureId::SM => "s_m",
            MeasureId::SHm => "s_hm",
            MeasureId::SAzP => "s_az_p",
            MeasureId::SAzPH => "s_az_p_h",
            MeasureId::SsmMd => "ssm_md",
            MeasureId::SsmNmd => "ssm_nmd",
            MeasureId::SsmEd => "ssm_ed",
        }
    }

    pub fn from_token(token: &str) -> Option<MeasureId> {
        MeasureId::ALL.into_iter().find(|id| id.token() == token)
    }

    /// True for the three spatial branches.
    pub fn is_spatial(self) -> bool {
        matches!(
            self,
            MeasureId::SsmMd | MeasureId::SsmNmd | MeasureId::SsmEd
        )
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for MeasureId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MeasureId::from_token(s).ok_or_else(|| format!("unknown measure {s:?}"))
    }
}

impl Serialize for MeasureId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.token())
    }
}

/// A delta/gamma split of the 1-based feature indices 1..=k: delta
/// positions are compared through consecutive differences, gamma
/// positions through the raw values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    delta: BTreeSet<usize>,
    gamma: BTreeSet<usize>,
}

impl Partition {
    /// Builds the split from the differenced index set; gamma becomes the
    /// complement in 1..=k.
    pub fn from_delta(delta: impl IntoIterator<Item = usize>, k: usize) -> Result<Self, Error> {
        let delta: BTreeSet<usize> = delta.into_iter().collect();
        if delta.is_empty() {
            return Err(Error::InvalidPartition("delta set is empty".into()));
        }
        if let Some(&bad) = delta.iter().find(|&&j| j < 1 || j > k) {
            return Err(Error::InvalidPartition(format!(
                "index {bad} is outside 1..={k}"
            )));
        }
        let gamma = (1..=k).filter(|j| !delta.contains(j)).collect();
        Ok(Partition { delta, gamma })
    }

    /// Both sets explicitly; they must be disjoint, cover 1..=k, and
    /// delta must be non-empty.
    pub fn new(
        delta: impl IntoIterator<Item = usize>,
        gamma: impl IntoIterator<Item = usize>,
        k: usize,
    ) -> Result<Self, Error> {
        let delta: BTreeSet<usize> = delta.into_iter().collect();
        let gamma: BTreeSet<usize> = gamma.into_iter().collect();
        if let Some(&j) = delta.intersection(&gamma).next() {
            return Err(Error::InvalidPartition(format!(
                "index {j} is in both delta and gamma"
            )));
        }
        let built = Partition::from_delta(delta.clone(), k)?;
        if built.gamma != gamma {
            return Err(Error::InvalidPartition(format!(
                "delta and gamma do not cover 1..={k} exactly"
            )));
        }
        Ok(built)
    }

    /// delta covering every index, gamma empty.
    pub fn full(k: usize) -> Partition {
        Partition::from_delta(1..=k, k).expect("1..=k is a valid delta for k >= 1")
    }

    /// delta = upper half of the indices (always non-empty), gamma = rest.
    pub fn upper_half(k: usize) -> Partition {
        Partition::from_delta((k / 2 + 1)..=k, k).expect("upper half is non-empty for k >= 1")
    }

    pub fn delta(&self) -> &BTreeSet<usize> {
        &self.delta
    }

    pub fn gamma(&self) -> &BTreeSet<usize> {
        &self.gamma
    }

    /// Confirms the split still covers 1..=k for a pattern of length k.
    pub fn validate(&self, k: usize) -> Result<(), Error> {
        if self.delta.len() + self.gamma.len() != k
            || self
                .delta
                .iter()
                .chain(&self.gamma)
                .any(|&j| j < 1 || j > k)
        {
            return Err(Error::InvalidPartition(format!(
                "partition does not cover 1..={k} exactly"
            )));
        }
        Ok(())
    }
}

/// Parameters shared by the parametric measures.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeasureParams {
    /// Minkowski-style exponent.
    pub p: u32,
    /// Cross weight used by s_bd.
    pub z: u32,
    /// Index split used by s_az_p_h.
    pub partition: Option<Partition>,
}

impl Default for MeasureParams {
    fn default() -> Self {
        MeasureParams {
            p: 1,
            z: 2,
            partition: None,
        }
    }
}

impl MeasureParams {
    pub fn with_p(p: u32) -> Self {
        MeasureParams {
            p,
            ..Self::default()
        }
    }
}

/// Evaluates measure `id` between two patterns of equal length.
pub fn similarity(
    id: MeasureId,
    params: &MeasureParams,
    y: &AifsPattern,
    x: &AifsPattern,
) -> Result<f64, Error> {
    if y.k() != x.k() {
        return Err(Error::LengthMismatch {
            left: y.k(),
            right: x.k(),
        });
    }
    if params.p == 0 {
        return Err(Error::InvalidParameter("p must be at least 1".into()));
    }
    if id.is_spatial() {
        let s = spatial_similarity(y, x)?;
        return Ok(match id {
            MeasureId::SsmMd => s.md,
            MeasureId::SsmNmd => s.nmd,
            _ => s.ed,
        });
    }
    let yp = y.pairs();
    let xp = x.pairs();
    let p = params.p;
    Ok(match id {
        MeasureId::SLp => s_lp(&yp, &xp, p),
        MeasureId::SHk => s_lp(&yp, &xp, 1),
        MeasureId::SLzd => s_lp(&yp, &xp, 2),
        MeasureId::SBd => s_bd(&yp, &xp, p, params.z),
        MeasureId::SC => s_c(&yp, &xp),
        MeasureId::SDc => s_dc(&yp, &xp, p),
        MeasureId::SFz => s_fz(&yp, &xp),
        MeasureId::SHy11 => s_hy1_1(&yp, &xp),
        MeasureId::SHy21 => s_hy2_1(&yp, &xp),
        MeasureId::SHy31 => s_hy3_1(&yp, &xp),
        MeasureId::SHy12 => s_hy1_2(&yp, &xp, p),
        MeasureId::SHy22 => s_hy2_2(&yp, &xp, p),
        MeasureId::SHy32 => s_hy3_2(&yp, &xp, p),
        MeasureId::SHy3 => s_hy_3(&yp, &xp),
        MeasureId::SLs => s_ls(&yp, &xp, p),
        MeasureId::SM => s_m(&yp, &xp, p),
        MeasureId::SHm => s_hm(&yp, &xp),
        MeasureId::SAzP => s_az(&yp, &xp, p),
        MeasureId::SAzPH => {
            let partition = params
                .partition
                .as_ref()
                .ok_or_else(|| Error::InvalidPartition("s_az_p_h requires a partition".into()))?;
            partition.validate(y.k())?;
            s_az_h(&yp, &xp, partition, p)
        }
        _ => unreachable!("spatial ids handled above"),
    })
}

fn powp(x: f64, p: u32) -> f64 {
    if p == 1 {
        x
    } else {
        x.powi(p as i32)
    }
}

fn rootp(x: f64, p: u32) -> f64 {
    if p == 1 {
        x
    } else {
        x.powf(1.0 / f64::from(p))
    }
}

fn s_lp(y: &[(f64, f64)], x: &[(f64, f64)], p: u32) -> f64 {
    let k = y.len() as f64;
    let s: f64 = y
        .iter()
        .zip(x)
        .map(|(&(a, b), &(c, d))| powp((a - c).abs(), p) + powp((b - d).abs(), p))
        .sum();
    1.0 - rootp(s / (2.0 * k), p)
}

fn s_bd(y: &[(f64, f64)], x: &[(f64, f64)], p: u32, z: u32) -> f64 {
    let k = y.len() as f64;
    let z = f64::from(z);
    let s: f64 = y
        .iter()
        .zip(x)
        .map(|(&(a, b), &(c, d))| {
            powp((z * (a - c) - (b - d)).abs(), p) + powp((z * (b - d) - (a - c)).abs(), p)
        })
        .sum();
    1.0 - rootp(s / (2.0 * k * powp(z + 1.0, p)), p)
}

fn s_c(y: &[(f64, f64)], x: &[(f64, f64)]) -> f64 {
    let k = y.len() as f64;
    let s: f64 = y
        .iter()
        .zip(x)
        .map(|(&(a, b), &(c, d))| ((a - b) - (c - d)).abs())
        .sum();
    1.0 - s / (2.0 * k)
}

fn s_dc(y: &[(f64, f64)], x: &[(f64, f64)], p: u32) -> f64 {
    let k = y.len() as f64;
    let s: f64 = y
        .iter()
        .zip(x)
        .map(|(&(a, b), &(c, d))| powp(((a + 1.0 - b) / 2.0 - (c + 1.0 - d) / 2.0).abs(), p))
        .sum();
    1.0 - rootp(s / k, p)
}

fn s_fz(y: &[(f64, f64)], x: &[(f64, f64)]) -> f64 {
    let k = y.len() as f64;
    let s: f64 = y
        .iter()
        .zip(x)
        .map(|(&(a, b), &(c, d))| ((a - c) - (b - d)).abs() + (a - c).abs() + (b - d).abs())
        .sum();
    1.0 - s / (4.0 * k)
}

fn s_hy1_1(y: &[(f64, f64)], x: &[(f64, f64)]) -> f64 {
    let k = y.len() as f64;
    let s: f64 = y
        .iter()
        .zip(x)
        .map(|(&(a, b), &(c, d))| (a - c).abs().max((b - d).abs()))
        .sum();
    1.0 - s / k
}

fn s_hy2_1(y: &[(f64, f64)], x: &[(f64, f64)]) -> f64 {
    let s1 = s_hy1_1(y, x);
    ((s1 - 1.0).exp() - (-1.0f64).exp()) / (1.0 - (-1.0f64).exp())
}

fn s_hy3_1(y: &[(f64, f64)], x: &[(f64, f64)]) -> f64 {
    let s1 = s_hy1_1(y, x);
    s1 / (2.0 - s1)
}

fn dp_hy2(y: &[(f64, f64)], x: &[(f64, f64)], p: u32) -> f64 {
    let k = y.len() as f64;
    let s: f64 = y
        .iter()
        .zip(x)
        .map(|(&(a, b), &(c, d))| powp((a - c).abs(), p) + powp((b - d).abs(), p))
        .sum();
    rootp(s, p) / k
}

fn s_hy1_2(y: &[(f64, f64)], x: &[(f64, f64)], p: u32) -> f64 {
    let r = rootp(2.0, p);
    (r - dp_hy2(y, x, p)) / r
}

fn s_hy2_2(y: &[(f64, f64)], x: &[(f64, f64)], p: u32) -> f64 {
    let r = rootp(2.0, p);
    let d = dp_hy2(y, x, p);
    ((-d).exp() - (-r).exp()) / (1.0 - (-r).exp())
}

fn s_hy3_2(y: &[(f64, f64)], x: &[(f64, f64)], p: u32) -> f64 {
    let r = rootp(2.0, p);
    let d = dp_hy2(y, x, p);
    (r - d) / (r * (1.0 + d))
}

fn s_hy_3(y: &[(f64, f64)], x: &[(f64, f64)]) -> f64 {
    let k = y.len() as f64;
    let s: f64 = y
        .iter()
        .zip(x)
        .map(|(&(a, b), &(c, d))| 1.0 - ((a - c).abs() + (b - d).abs()) / 2.0)
        .sum();
    s / k
}

fn s_ls(y: &[(f64, f64)], x: &[(f64, f64)], p: u32) -> f64 {
    let k = y.len() as f64;
    let s: f64 = y
        .iter()
        .zip(x)
        .map(|(&(a, b), &(c, d))| powp(((a - c).abs() + (b - d).abs()) / 2.0, p))
        .sum();
    1.0 - rootp(s / k, p)
}

fn s_m(y: &[(f64, f64)], x: &[(f64, f64)], p: u32) -> f64 {
    let k = y.len() as f64;
    let sm: f64 = y
        .iter()
        .zip(x)
        .map(|(&(a, _), &(c, _))| powp((a - c).abs(), p))
        .sum();
    let sn: f64 = y
        .iter()
        .zip(x)
        .map(|(&(_, b), &(_, d))| powp((b - d).abs(), p))
        .sum();
    let r1 = 1.0 - rootp(sm / k, p);
    let r2 = 1.0 - rootp(sn / k, p);
    (r1 + r2) / 2.0
}

fn s_hm(y: &[(f64, f64)], x: &[(f64, f64)]) -> f64 {
    let k = y.len() as f64;
    let s: f64 = y
        .iter()
        .zip(x)
        .map(|(&(a, b), &(c, d))| (a - c).abs() + (b - d).abs() + (a.max(d) - c.max(b)).abs())
        .sum();
    1.0 - s / (3.0 * k)
}

fn az_sum(y: &[(f64, f64)], x: &[(f64, f64)], p: u32) -> f64 {
    let mut s = powp((y[0].0 - x[0].0).abs(), p) + powp((y[0].1 - x[0].1).abs(), p);
    for j in 1..y.len() {
        let da = y[j].0 - y[j - 1].0;
        let dc = x[j].0 - x[j - 1].0;
        let db = y[j].1 - y[j - 1].1;
        let dd = x[j].1 - x[j - 1].1;
        s += powp((da - dc).abs(), p) + powp((db - dd).abs(), p);
    }
    s
}

fn s_az(y: &[(f64, f64)], x: &[(f64, f64)], p: u32) -> f64 {
    let k = y.len() as f64;
    1.0 - rootp(az_sum(y, x, p) / (2.0 * k), p)
}

fn s_az_h(y: &[(f64, f64)], x: &[(f64, f64)], partition: &Partition, p: u32) -> f64 {
    let k = y.len() as f64;
    let z = *partition.delta().iter().next().expect("delta is non-empty");
    let mut s = powp((y[z - 1].0 - x[z - 1].0).abs(), p) + powp((y[z - 1].1 - x[z - 1].1).abs(), p);
    for &j in partition.delta() {
        if j == z {
            continue;
        }
        let da = y[j - 1].0 - y[j - 2].0;
        let dc = x[j - 1].0 - x[j - 2].0;
        let db = y[j - 1].1 - y[j - 2].1;
        let dd = x[j - 1].1 - x[j - 2].1;
        s += powp((da - dc).abs(), p) + powp((db - dd).abs(), p);
    }
    for &j in partition.gamma() {
        s += powp((y[j - 1].0 - x[j - 1].0).abs(), p) + powp((y[j - 1].1 - x[j - 1].1).abs(), p);
    }
    1.0 - rootp(s / (2.0 * k), p)
}

/// One catalog row per measure.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CatalogEntry {
    pub id: MeasureId,
    pub token: &'static str,
    pub display: &'static str,
    pub source: &'static str,
    pub params: &'static [&'static str],
    pub summary: &'static str,
}

/// All twenty-two measures in catalog order.
pub fn catalog() -> &'static [CatalogEntry; 22] {
    &CATALOG
}

pub fn catalog_entry(id: MeasureId) -> &'static CatalogEntry {
    CATALOG
        .iter()
        .find(|e| e.id == id)
        .expect("catalog covers every id")
}

static CATALOG: [CatalogEntry; 22] = [
    CatalogEntry {
        id: MeasureId::SLp,
        token: "s_lp",
        display: "S_Lp",
        source: "Atanassov",
        params: &["p"],
        summary: "Minkowski mean of |mu| and |nu| gaps per feature (absolute values applied before the exponent)",
    },
    CatalogEntry {
        id: MeasureId::SBd,
        token: "s_bd",
        display: "S_Bd",
        source: "Boran and Akay",
        params: &["p", "z"],
        summary: "cross-weighted gaps z*dmu - dnu and z*dnu - dmu, normalized by (z+1)",
    },
    CatalogEntry {
        id: MeasureId::SC,
        token: "s_c",
        display: "S_C",
        source: "Chen",
        params: &[],
        summary: "gap of the signed scores mu - nu, halved per feature",
    },
    CatalogEntry {
        id: MeasureId::SDc,
        token: "s_dc",
        display: "S_Dc",
        source: "Dengfeng and Chuntian",
        params: &["p"],
        summary: "Minkowski gap of the median membership (mu + 1 - nu) / 2",
    },
    CatalogEntry {
        id: MeasureId::SFz,
        token: "s_fz",
        display: "S_Fz",
        source: "Fan and Zhangyan",
        params: &[],
        summary: "mixes the score gap with both component gaps over 4k; the original ratio form can divide by zero on ties",
    },
    CatalogEntry {
        id: MeasureId::SHk,
        token: "s_hk",
        display: "S_Hk",
        source: "Hong and Kim",
        params: &[],
        summary: "mean absolute gap of mu and nu (the p = 1 Minkowski case)",
    },
    CatalogEntry {
        id: MeasureId::SHy11,
        token: "s_hy1_1",
        display: "S_Hy1^1",
        source: "Hung and Yang",
        params: &[],
        summary: "one minus the mean Hausdorff gap max(|dmu|, |dnu|)",
    },
    CatalogEntry {
        id: MeasureId::SHy21,
        token: "s_hy2_1",
        display: "S_Hy2^1",
        source: "Hung and Yang",
        params: &[],
        summary: "exponential rescaling of s_hy1_1",
    },
    CatalogEntry {
        id: MeasureId::SHy31,
        token: "s_hy3_1",
        display: "S_Hy3^1",
        source: "Hung and Yang",
        params: &[],
        summary: "rational rescaling s / (2 - s) of s_hy1_1",
    },
    CatalogEntry {
        id: MeasureId::SHy12,
        token: "s_hy1_2",
        display: "S_Hy1^2",
        source: "Hung and Yang",
        params: &["p"],
        summary: "linear rescaling of the L_p norm distance (root taken before dividing by k)",
    },
    CatalogEntry {
        id: MeasureId::SHy22,
        token: "s_hy2_2",
        display: "S_Hy2^2",
        source: "Hung and Yang",
        params: &["p"],
        summary: "exponential rescaling of the L_p norm distance",
    },
    CatalogEntry {
        id: MeasureId::SHy32,
        token: "s_hy3_2",
        display: "S_Hy3^2",
        source: "Hung and Yang",
        params: &["p"],
        summary: "rational rescaling of the L_p norm distance",
    },
    CatalogEntry {
        id: MeasureId::SHy3,
        token: "s_hy_3",
        display: "S_Hy^3",
        source: "Hung and Yang",
        params: &[],
        summary: "mean per-feature similarity 1 - (|dmu| + |dnu|) / 2; coincides with s_hk",
    },
    CatalogEntry {
        id: MeasureId::SLzd,
        token: "s_lzd",
        display: "S_Lzd",
        source: "Li, Zhongxian, and Degin",
        params: &[],
        summary: "Euclidean (p = 2) Minkowski mean of the component gaps",
    },
    CatalogEntry {
        id: MeasureId::SLs,
        token: "s_ls",
        display: "S_Ls",
        source: "Liang and Shi",
        params: &["p"],
        summary: "Minkowski mean of the half-sum (|dmu| + |dnu|) / 2; equals s_hk at p = 1",
    },
    CatalogEntry {
        id: MeasureId::SM,
        token: "s_m",
        display: "S_M",
        source: "Mitchell",
        params: &["p"],
        summary: "averages separate membership-only and non-membership-only Minkowski similarities",
    },
    CatalogEntry {
        id: MeasureId::SHm,
        token: "s_hm",
        display: "S_Hm",
        source: "Nagan et al.",
        params: &[],
        summary: "adds a cross-maximum gap |max(mu_y, nu_x) - max(mu_x, nu_y)| to both component gaps over 3k",
    },
    CatalogEntry {
        id: MeasureId::SAzP,
        token: "s_az_p",
        display: "S_Az_p",
        source: "Ashraf et al.",
        params: &["p"],
        summary: "first feature compared raw, later features through consecutive differences; can leave [0, 1] on strongly alternating patterns",
    },
    CatalogEntry {
        id: MeasureId::SAzPH,
        token: "s_az_p_h",
        display: "S_Az_p^h",
        source: "Ashraf et al.",
        params: &["p", "partition"],
        summary: "hesitancy-split variant: delta indices differenced (anchored at min delta), gamma indices compared raw",
    },
    CatalogEntry {
        id: MeasureId::SsmMd,
        token: "ssm_md",
        display: "SSM_MD",
        source: "this crate",
        params: &[],
        summary: "membership-dominant spatial branch",
    },
    CatalogEntry {
        id: MeasureId::SsmNmd,
        token: "ssm_nmd",
        display: "SSM_NMD",
        source: "this crate",
        params: &[],
        summary: "non-membership-dominant spatial branch",
    },
    CatalogEntry {
        id: MeasureId::SsmEd,
        token: "ssm_ed",
        display: "SSM_ED",
        source: "this crate",
        params: &[],
        summary: "joint spatial branch; the headline branch for strong classification",
    },
];
