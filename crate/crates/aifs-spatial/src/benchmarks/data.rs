use super::{CaseDef, NoteDef, NoteKind, RowDef};
use crate::baseline::MeasureId;

pub static EXAMPLE1: CaseDef = CaseDef {
    name: "example1",
    title: "three known patterns and a nearby query",
    note: None,
    universe: &["y1", "y2", "y3", "y4"],
    known: &[
        ("B1", &[(0.5, 0.3), (0.7, 0.0), (0.4, 0.5), (0.7, 0.3)]),
        ("B2", &[(0.5, 0.2), (0.6, 0.1), (0.2, 0.7), (0.7, 0.3)]),
        ("B3", &[(0.5, 0.4), (0.7, 0.1), (0.4, 0.6), (0.7, 0.2)]),
    ],
    unknown: &[
        ("A", &[(0.4, 0.3), (0.7, 0.1), (0.3, 0.6), (0.7, 0.3)]),
    ],
    rows: &[
        RowDef {
            label: "S_L1",
            id: MeasureId::SLp,
            p: 1,
            excluded: None,
            values: &[&[0.95, 0.9375, 0.95]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hk",
            id: MeasureId::SHk,
            p: 1,
            excluded: None,
            values: &[&[0.95, 0.9375, 0.95]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_L2",
            id: MeasureId::SLp,
            p: 2,
            excluded: None,
            values: &[&[0.9293, 0.9209, 0.9293]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Lzd",
            id: MeasureId::SLzd,
            p: 2,
            excluded: None,
            values: &[&[0.9293, 0.9209, 0.9293]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_M",
            id: MeasureId::SM,
            p: 1,
            excluded: None,
            values: &[&[0.95, 0.9375, 0.95]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Fz",
            id: MeasureId::SFz,
            p: 1,
            excluded: None,
            values: &[&[0.95, 0.9375, 0.9625]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_C",
            id: MeasureId::SC,
            p: 1,
            excluded: None,
            values: &[&[0.95, 0.9375, 0.975]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy1_1",
            id: MeasureId::SHy11,
            p: 1,
            excluded: None,
            values: &[&[0.925, 0.925, 0.925]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy2_1",
            id: MeasureId::SHy21,
            p: 1,
            excluded: None,
            values: &[&[0.8857, 0.8857, 0.8857]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy3_1",
            id: MeasureId::SHy31,
            p: 1,
            excluded: None,
            values: &[&[0.8605, 0.8605, 0.8605]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Bd",
            id: MeasureId::SBd,
            p: 1,
            excluded: None,
            values: &[&[0.95, 0.9375, 0.9667]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Dc",
            id: MeasureId::SDc,
            p: 1,
            excluded: None,
            values: &[&[0.95, 0.9375, 0.975]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy1_2",
            id: MeasureId::SHy12,
            p: 1,
            excluded: None,
            values: &[&[0.95, 0.9375, 0.95]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy2_2",
            id: MeasureId::SHy22,
            p: 1,
            excluded: None,
            values: &[&[0.8899, 0.8641, 0.8899]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy3_2",
            id: MeasureId::SHy32,
            p: 1,
            excluded: None,
            values: &[&[0.8636, 0.8333, 0.8636]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy_3",
            id: MeasureId::SHy3,
            p: 1,
            excluded: None,
            values: &[&[0.95, 0.9375, 0.95]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Ls",
            id: MeasureId::SLs,
            p: 1,
            excluded: None,
            values: &[&[0.95, 0.9375, 0.95]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hm",
            id: MeasureId::SHm,
            p: 1,
            excluded: None,
            values: &[&[0.95, 0.9333, 0.9583]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Az1",
            id: MeasureId::SAzP,
            p: 1,
            excluded: None,
            values: &[&[0.925, 0.9, 0.9125]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Az2",
            id: MeasureId::SAzP,
            p: 2,
            excluded: None,
            values: &[&[0.9134, 0.8882, 0.9065]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Az1^h",
            id: MeasureId::SAzPH,
            p: 1,
            excluded: Some("the delta/gamma split for this family is not stated alongside the reference values; shown for display only"),
            values: &[&[0.925, 0.9125, 0.9375]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Az2^h",
            id: MeasureId::SAzPH,
            p: 2,
            excluded: Some("the delta/gamma split for this family is not stated alongside the reference values; shown for display only"),
            values: &[&[0.9134, 0.9065, 0.9209]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "MD",
            id: MeasureId::SsmMd,
            p: 1,
            excluded: None,
            values: &[&[0.95, 0.925, 0.9688]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "NMD",
            id: MeasureId::SsmNmd,
            p: 1,
            excluded: None,
            values: &[&[0.9625, 0.925, 0.975]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "ED",
            id: MeasureId::SsmEd,
            p: 1,
            excluded: None,
            values: &[&[0.9625, 0.95, 0.9563]],
            results: &["B1"],
            notes: &[],
        },
    ],
};

pub static EXAMPLE2: CaseDef = CaseDef {
    name: "example2",
    title: "narrow-margin pattern recognition",
    note: None,
    universe: &["y1", "y2", "y3"],
    known: &[
        ("B1", &[(0.34, 0.34), (0.19, 0.48), (0.02, 0.12)]),
        ("B2", &[(0.35, 0.33), (0.2, 0.47), (0.0, 0.14)]),
        ("B3", &[(0.33, 0.35), (0.21, 0.46), (0.01, 0.13)]),
    ],
    unknown: &[
        ("A", &[(0.37, 0.31), (0.23, 0.44), (0.04, 0.1)]),
    ],
    rows: &[
        RowDef {
            label: "S_L1",
            id: MeasureId::SLp,
            p: 1,
            excluded: None,
            values: &[&[0.97, 0.97, 0.97]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hk",
            id: MeasureId::SHk,
            p: 1,
            excluded: None,
            values: &[&[0.97, 0.97, 0.97]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_L2",
            id: MeasureId::SLp,
            p: 2,
            excluded: None,
            values: &[&[0.9689, 0.9689, 0.9689]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Lzd",
            id: MeasureId::SLzd,
            p: 2,
            excluded: None,
            values: &[&[0.9689, 0.9689, 0.9689]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_M",
            id: MeasureId::SM,
            p: 1,
            excluded: None,
            values: &[&[0.97, 0.97, 0.97]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Fz",
            id: MeasureId::SFz,
            p: 1,
            excluded: None,
            values: &[&[0.97, 0.97, 0.97]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_C",
            id: MeasureId::SC,
            p: 1,
            excluded: None,
            values: &[&[0.97, 0.97, 0.97]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy1_1",
            id: MeasureId::SHy11,
            p: 1,
            excluded: None,
            values: &[&[0.97, 0.97, 0.97]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy2_1",
            id: MeasureId::SHy21,
            p: 1,
            excluded: None,
            values: &[&[0.9532, 0.9532, 0.9532]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy3_1",
            id: MeasureId::SHy31,
            p: 1,
            excluded: None,
            values: &[&[0.9417, 0.9417, 0.9417]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Bd",
            id: MeasureId::SBd,
            p: 1,
            excluded: None,
            values: &[&[0.97, 0.97, 0.97]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Dc",
            id: MeasureId::SDc,
            p: 1,
            excluded: None,
            values: &[&[0.97, 0.97, 0.97]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy1_2",
            id: MeasureId::SHy12,
            p: 1,
            excluded: None,
            values: &[&[0.97, 0.97, 0.97]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy2_2",
            id: MeasureId::SHy22,
            p: 1,
            excluded: None,
            values: &[&[0.9326, 0.9326, 0.9326]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy3_2",
            id: MeasureId::SHy32,
            p: 1,
            excluded: None,
            values: &[&[0.9151, 0.9151, 0.9151]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy_3",
            id: MeasureId::SHy3,
            p: 1,
            excluded: None,
            values: &[&[0.97, 0.97, 0.97]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Ls",
            id: MeasureId::SLs,
            p: 1,
            excluded: None,
            values: &[&[0.97, 0.97, 0.97]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hm",
            id: MeasureId::SHm,
            p: 1,
            excluded: None,
            values: &[&[0.97, 0.97, 0.97]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Az1",
            id: MeasureId::SAzP,
            p: 1,
            excluded: None,
            values: &[&[0.98, 0.9867, 0.9767]],
            results: &["B2"],
            notes: &[],
        },
        RowDef {
            label: "S_Az2",
            id: MeasureId::SAzP,
            p: 2,
            excluded: None,
            values: &[&[0.9784, 0.9859, 0.9742]],
            results: &["B2"],
            notes: &[NoteDef { kind: NoteKind::Inconsistent, query: 0, known: Some(2), text: "reference value 0.9742 is inconsistent with the formula; recomputation gives 0.9735" }],
        },
        RowDef {
            label: "S_Az1^h",
            id: MeasureId::SAzPH,
            p: 1,
            excluded: Some("the delta/gamma split for this family is not stated alongside the reference values; shown for display only"),
            values: &[&[0.98, 0.9767, 0.97]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Az2^h",
            id: MeasureId::SAzPH,
            p: 2,
            excluded: Some("the delta/gamma split for this family is not stated alongside the reference values; shown for display only"),
            values: &[&[0.9784, 0.9735, 0.9689]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "MD",
            id: MeasureId::SsmMd,
            p: 1,
            excluded: None,
            values: &[&[0.985, 0.99, 0.9825]],
            results: &["B2"],
            notes: &[],
        },
        RowDef {
            label: "NMD",
            id: MeasureId::SsmNmd,
            p: 1,
            excluded: None,
            values: &[&[0.985, 0.99, 0.9825]],
            results: &["B2"],
            notes: &[],
        },
        RowDef {
            label: "ED",
            id: MeasureId::SsmEd,
            p: 1,
            excluded: None,
            values: &[&[0.99, 0.9933, 0.9883]],
            results: &["B2"],
            notes: &[],
        },
    ],
};

pub static EXAMPLE3: CaseDef = CaseDef {
    name: "example3",
    title: "membership-dominant pattern recognition",
    note: None,
    universe: &["y1", "y2", "y3"],
    known: &[
        ("B1", &[(1.0, 0.0), (0.8, 0.0), (0.7, 0.1)]),
        ("B2", &[(0.8, 0.1), (1.0, 0.0), (0.9, 0.0)]),
        ("B3", &[(0.6, 0.2), (0.8, 0.0), (1.0, 0.0)]),
    ],
    unknown: &[
        ("A", &[(0.5, 0.3), (0.6, 0.2), (0.8, 0.1)]),
    ],
    rows: &[
        RowDef {
            label: "S_L1",
            id: MeasureId::SLp,
            p: 1,
            excluded: None,
            values: &[&[0.7833, 0.7833, 0.85]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hk",
            id: MeasureId::SHk,
            p: 1,
            excluded: None,
            values: &[&[0.7833, 0.7833, 0.85]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_L2",
            id: MeasureId::SLp,
            p: 2,
            excluded: None,
            values: &[&[0.7323, 0.7585, 0.8419]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Lzd",
            id: MeasureId::SLzd,
            p: 2,
            excluded: None,
            values: &[&[0.7323, 0.7585, 0.8419]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_M",
            id: MeasureId::SM,
            p: 1,
            excluded: None,
            values: &[&[0.7833, 0.7833, 0.85]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Fz",
            id: MeasureId::SFz,
            p: 1,
            excluded: None,
            values: &[&[0.7833, 0.7833, 0.85]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_C",
            id: MeasureId::SC,
            p: 1,
            excluded: None,
            values: &[&[0.7833, 0.7833, 0.85]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy1_1",
            id: MeasureId::SHy11,
            p: 1,
            excluded: None,
            values: &[&[0.7333, 0.7333, 0.8333]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy2_1",
            id: MeasureId::SHy21,
            p: 1,
            excluded: None,
            values: &[&[0.6297, 0.6297, 0.7571]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy3_1",
            id: MeasureId::SHy31,
            p: 1,
            excluded: None,
            values: &[&[0.5789, 0.5789, 0.7143]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Bd",
            id: MeasureId::SBd,
            p: 1,
            excluded: None,
            values: &[&[0.7833, 0.7833, 0.85]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Dc",
            id: MeasureId::SDc,
            p: 1,
            excluded: None,
            values: &[&[0.7833, 0.7833, 0.85]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy1_2",
            id: MeasureId::SHy12,
            p: 1,
            excluded: None,
            values: &[&[0.7833, 0.7833, 0.85]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy2_2",
            id: MeasureId::SHy22,
            p: 1,
            excluded: None,
            values: &[&[0.5933, 0.5933, 0.7003]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy3_2",
            id: MeasureId::SHy32,
            p: 1,
            excluded: None,
            values: &[&[0.5465, 0.5465, 0.6538]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy_3",
            id: MeasureId::SHy3,
            p: 1,
            excluded: None,
            values: &[&[0.7833, 0.7833, 0.85]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Ls",
            id: MeasureId::SLs,
            p: 1,
            excluded: None,
            values: &[&[0.7833, 0.7833, 0.85]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hm",
            id: MeasureId::SHm,
            p: 1,
            excluded: None,
            values: &[&[0.7667, 0.7667, 0.8444]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Az1",
            id: MeasureId::SAzP,
            p: 1,
            excluded: None,
            values: &[&[0.7167, 0.8333, 0.9167]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Az2",
            id: MeasureId::SAzP,
            p: 2,
            excluded: None,
            values: &[&[0.6918, 0.8, 0.9087]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Az1^h",
            id: MeasureId::SAzPH,
            p: 1,
            excluded: Some("the delta/gamma split for this family is not stated alongside the reference values; shown for display only"),
            values: &[&[0.8, 0.8167, 0.9]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Az2^h",
            id: MeasureId::SAzPH,
            p: 2,
            excluded: Some("the delta/gamma split for this family is not stated alongside the reference values; shown for display only"),
            values: &[&[0.7354, 0.7655, 0.8709]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "MD",
            id: MeasureId::SsmMd,
            p: 1,
            excluded: None,
            values: &[&[0.7667, 0.8583, 0.9417]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "NMD",
            id: MeasureId::SsmNmd,
            p: 1,
            excluded: None,
            values: &[&[0.8083, 0.8917, 0.9333]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "ED",
            id: MeasureId::SsmEd,
            p: 1,
            excluded: None,
            values: &[&[0.8583, 0.9167, 0.9583]],
            results: &["B3"],
            notes: &[],
        },
    ],
};

pub static EXAMPLE4: CaseDef = CaseDef {
    name: "example4",
    title: "six-feature pattern recognition",
    note: None,
    universe: &["y1", "y2", "y3", "y4", "y5", "y6"],
    known: &[
        ("B1", &[(0.94, 0.0), (0.88, 0.0), (0.82, 0.0), (0.78, 0.02), (0.75, 0.05), (0.72, 0.08)]),
        ("B2", &[(0.86, 0.07), (0.92, 0.04), (0.98, 0.01), (0.98, 0.0), (0.95, 0.0), (0.92, 0.0)]),
        ("B3", &[(0.66, 0.14), (0.72, 0.08), (0.78, 0.02), (0.84, 0.0), (0.9, 0.0), (0.96, 0.0)]),
    ],
    unknown: &[
        ("A", &[(0.53, 0.27), (0.56, 0.24), (0.59, 0.21), (0.64, 0.18), (0.7, 0.15), (0.76, 0.12)]),
    ],
    rows: &[
        RowDef {
            label: "S_L1",
            id: MeasureId::SLp,
            p: 1,
            excluded: None,
            values: &[&[0.8158, 0.76, 0.8325]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hk",
            id: MeasureId::SHk,
            p: 1,
            excluded: None,
            values: &[&[0.8158, 0.76, 0.8325]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_L2",
            id: MeasureId::SLp,
            p: 2,
            excluded: None,
            values: &[&[0.7842, 0.7445, 0.8301]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Lzd",
            id: MeasureId::SLzd,
            p: 2,
            excluded: None,
            values: &[&[0.7842, 0.7445, 0.8301]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_M",
            id: MeasureId::SM,
            p: 1,
            excluded: None,
            values: &[&[0.8158, 0.76, 0.8325]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Fz",
            id: MeasureId::SFz,
            p: 1,
            excluded: None,
            values: &[&[0.8192, 0.76, 0.8325]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_C",
            id: MeasureId::SC,
            p: 1,
            excluded: None,
            values: &[&[0.8225, 0.76, 0.8325]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy1_1",
            id: MeasureId::SHy11,
            p: 1,
            excluded: None,
            values: &[&[0.79, 0.695, 0.82]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy2_1",
            id: MeasureId::SHy21,
            p: 1,
            excluded: None,
            values: &[&[0.7003, 0.5841, 0.7394]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy3_1",
            id: MeasureId::SHy31,
            p: 1,
            excluded: None,
            values: &[&[0.6529, 0.5326, 0.6949]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Bd",
            id: MeasureId::SBd,
            p: 1,
            excluded: None,
            values: &[&[0.8203, 0.76, 0.8325]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Dc",
            id: MeasureId::SDc,
            p: 1,
            excluded: None,
            values: &[&[0.8225, 0.76, 0.8325]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy1_2",
            id: MeasureId::SHy12,
            p: 1,
            excluded: None,
            values: &[&[0.8158, 0.76, 0.8325]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy2_2",
            id: MeasureId::SHy22,
            p: 1,
            excluded: None,
            values: &[&[0.6437, 0.5591, 0.6708]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy3_2",
            id: MeasureId::SHy32,
            p: 1,
            excluded: None,
            values: &[&[0.5962, 0.5135, 0.6236]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy_3",
            id: MeasureId::SHy3,
            p: 1,
            excluded: None,
            values: &[&[0.8158, 0.76, 0.8325]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Ls",
            id: MeasureId::SLs,
            p: 1,
            excluded: None,
            values: &[&[0.8158, 0.76, 0.8325]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Hm",
            id: MeasureId::SHm,
            p: 1,
            excluded: None,
            values: &[&[0.8111, 0.7383, 0.8283]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Az1",
            id: MeasureId::SAzP,
            p: 1,
            excluded: None,
            values: &[&[0.8867, 0.925, 0.9617]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Az2",
            id: MeasureId::SAzP,
            p: 2,
            excluded: None,
            values: &[&[0.8437, 0.8804, 0.9427]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Az1^h",
            id: MeasureId::SAzPH,
            p: 1,
            excluded: Some("the delta/gamma split for this family is not stated alongside the reference values; shown for display only"),
            values: &[&[0.8233, 0.8342, 0.9133]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "S_Az2^h",
            id: MeasureId::SAzPH,
            p: 2,
            excluded: Some("the delta/gamma split for this family is not stated alongside the reference values; shown for display only"),
            values: &[&[0.7894, 0.7895, 0.8848]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "MD",
            id: MeasureId::SsmMd,
            p: 1,
            excluded: None,
            values: &[&[0.9075, 0.9367, 0.9733]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "NMD",
            id: MeasureId::SsmNmd,
            p: 1,
            excluded: None,
            values: &[&[0.9225, 0.9508, 0.9708]],
            results: &["B3"],
            notes: &[],
        },
        RowDef {
            label: "ED",
            id: MeasureId::SsmEd,
            p: 1,
            excluded: None,
            values: &[&[0.9433, 0.9625, 0.9808]],
            results: &["B3"],
            notes: &[],
        },
    ],
};

pub static EXAMPLE5: CaseDef = CaseDef {
    name: "example5",
    title: "medical diagnosis with four patients",
    note: None,
    universe: &["temperature", "headache", "stomach pain", "cough", "chest pain"],
    known: &[
        ("B1", &[(0.4, 0.0), (0.3, 0.5), (0.1, 0.7), (0.4, 0.3), (0.1, 0.7)]),
        ("B2", &[(0.7, 0.0), (0.2, 0.6), (0.0, 0.9), (0.7, 0.0), (0.1, 0.8)]),
        ("B3", &[(0.3, 0.3), (0.6, 0.1), (0.2, 0.7), (0.2, 0.6), (0.1, 0.9)]),
        ("B4", &[(0.1, 0.7), (0.2, 0.4), (0.8, 0.0), (0.2, 0.7), (0.2, 0.7)]),
        ("B5", &[(0.1, 0.8), (0.0, 0.8), (0.2, 0.8), (0.2, 0.8), (0.8, 0.1)]),
    ],
    unknown: &[
        ("A1", &[(0.8, 0.1), (0.6, 0.1), (0.2, 0.8), (0.6, 0.1), (0.1, 0.6)]),
        ("A2", &[(0.0, 0.8), (0.4, 0.4), (0.6, 0.1), (0.1, 0.7), (0.1, 0.8)]),
        ("A3", &[(0.8, 0.1), (0.8, 0.1), (0.0, 0.6), (0.2, 0.7), (0.0, 0.5)]),
        ("A4", &[(0.6, 0.1), (0.5, 0.4), (0.3, 0.4), (0.7, 0.2), (0.3, 0.4)]),
    ],
    rows: &[
        RowDef {
            label: "S_L1",
            id: MeasureId::SLp,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B2", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hk",
            id: MeasureId::SHk,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B2", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_L2",
            id: MeasureId::SLp,
            p: 2,
            excluded: None,
            values: &[],
            results: &["B1", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Lzd",
            id: MeasureId::SLzd,
            p: 2,
            excluded: None,
            values: &[],
            results: &["B1", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_M",
            id: MeasureId::SM,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B2", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Fz",
            id: MeasureId::SFz,
            p: 1,
            excluded: None,
            values: &[],
            results: &["Unclassified", "B4", "B3", "B1"],
            notes: &[NoteDef { kind: NoteKind::Excluded, query: 0, known: None, text: "the original form of this measure divides by zero on this query; the implemented variant yields an exact tie, consistent with the reference entry, but the cell is not asserted" }],
        },
        RowDef {
            label: "S_C",
            id: MeasureId::SC,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B1", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy1_1",
            id: MeasureId::SHy11,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B2", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy2_1",
            id: MeasureId::SHy21,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B2", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy3_1",
            id: MeasureId::SHy31,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B2", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Bd",
            id: MeasureId::SBd,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B1", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Dc",
            id: MeasureId::SDc,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B1", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy1_2",
            id: MeasureId::SHy12,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B2", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy2_2",
            id: MeasureId::SHy22,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B2", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy3_2",
            id: MeasureId::SHy32,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B2", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy_3",
            id: MeasureId::SHy3,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B2", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Ls",
            id: MeasureId::SLs,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B2", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hm",
            id: MeasureId::SHm,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B2", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Az1",
            id: MeasureId::SAzP,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B1", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Az2",
            id: MeasureId::SAzP,
            p: 2,
            excluded: None,
            values: &[],
            results: &["B1", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Az1^h",
            id: MeasureId::SAzPH,
            p: 1,
            excluded: Some("the delta/gamma split for this family is not stated alongside the reference values; shown for display only"),
            values: &[],
            results: &["B1", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Az2^h",
            id: MeasureId::SAzPH,
            p: 2,
            excluded: Some("the delta/gamma split for this family is not stated alongside the reference values; shown for display only"),
            values: &[],
            results: &["B1", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "MD",
            id: MeasureId::SsmMd,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B1", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "NMD",
            id: MeasureId::SsmNmd,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B1", "B4", "B3", "B1"],
            notes: &[],
        },
        RowDef {
            label: "ED",
            id: MeasureId::SsmEd,
            p: 1,
            excluded: None,
            values: &[],
            results: &["B1", "B4", "B3", "B1"],
            notes: &[],
        },
    ],
};

pub static EXAMPLE6: CaseDef = CaseDef {
    name: "example6",
    title: "cancer-stage assignment",
    note: Some("the distributed listing of query A carries an inconsistent fourth element (0.5, 0.5); the unique value consistent with every similarity row is (0.5, 0.1) and is used here"),
    universe: &["stool character", "bellyache", "ictus ileus", "chronic ileus", "anemia"],
    known: &[
        ("B1", &[(0.4, 0.4), (0.3, 0.3), (0.5, 0.1), (0.5, 0.2), (0.6, 0.2)]),
        ("B2", &[(0.2, 0.6), (0.3, 0.5), (0.2, 0.3), (0.7, 0.1), (0.8, 0.0)]),
        ("B3", &[(0.1, 0.9), (0.0, 0.1), (0.2, 0.7), (0.1, 0.8), (0.2, 0.8)]),
        ("B4", &[(0.8, 0.2), (0.9, 0.0), (1.0, 0.0), (0.7, 0.2), (0.6, 0.4)]),
    ],
    unknown: &[
        ("A", &[(0.3, 0.5), (0.4, 0.4), (0.6, 0.2), (0.5, 0.1), (0.9, 0.0)]),
    ],
    rows: &[
        RowDef {
            label: "S_L1",
            id: MeasureId::SLp,
            p: 1,
            excluded: None,
            values: &[&[0.88, 0.88, 0.52, 0.67]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hk",
            id: MeasureId::SHk,
            p: 1,
            excluded: None,
            values: &[&[0.88, 0.88, 0.52, 0.67]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_L2",
            id: MeasureId::SLp,
            p: 2,
            excluded: None,
            values: &[&[0.8586, 0.8388, 0.4862, 0.6464]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Lzd",
            id: MeasureId::SLzd,
            p: 2,
            excluded: None,
            values: &[&[0.8586, 0.8388, 0.4862, 0.6464]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_M",
            id: MeasureId::SM,
            p: 1,
            excluded: None,
            values: &[&[0.88, 0.88, 0.52, 0.67]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Fz",
            id: MeasureId::SFz,
            p: 1,
            excluded: None,
            values: &[&[0.9, 0.88, 0.55, 0.68]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_C",
            id: MeasureId::SC,
            p: 1,
            excluded: None,
            values: &[&[0.92, 0.88, 0.58, 0.69]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy1_1",
            id: MeasureId::SHy11,
            p: 1,
            excluded: None,
            values: &[&[0.86, 0.82, 0.44, 0.6]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy2_1",
            id: MeasureId::SHy21,
            p: 1,
            excluded: None,
            values: &[&[0.7933, 0.7394, 0.3217, 0.4785]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy3_1",
            id: MeasureId::SHy31,
            p: 1,
            excluded: None,
            values: &[&[0.7544, 0.6949, 0.2821, 0.4286]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Bd",
            id: MeasureId::SBd,
            p: 1,
            excluded: None,
            values: &[&[0.9067, 0.88, 0.5667, 0.69]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Dc",
            id: MeasureId::SDc,
            p: 1,
            excluded: None,
            values: &[&[0.92, 0.88, 0.58, 0.69]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy1_2",
            id: MeasureId::SHy12,
            p: 1,
            excluded: None,
            values: &[&[0.88, 0.88, 0.52, 0.67]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy2_2",
            id: MeasureId::SHy22,
            p: 1,
            excluded: None,
            values: &[&[0.7532, 0.7532, 0.2863, 0.4412]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy3_2",
            id: MeasureId::SHy32,
            p: 1,
            excluded: None,
            values: &[&[0.7097, 0.7097, 0.2653, 0.4036]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hy_3",
            id: MeasureId::SHy3,
            p: 1,
            excluded: None,
            values: &[&[0.88, 0.88, 0.52, 0.67]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Ls",
            id: MeasureId::SLs,
            p: 1,
            excluded: None,
            values: &[&[0.88, 0.88, 0.52, 0.67]],
            results: &["Unclassified"],
            notes: &[],
        },
        RowDef {
            label: "S_Hm",
            id: MeasureId::SHm,
            p: 1,
            excluded: None,
            values: &[&[0.8867, 0.86, 0.5267, 0.6533]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Az1",
            id: MeasureId::SAzP,
            p: 1,
            excluded: None,
            values: &[&[0.8625, 0.8125, 0.6375, 0.6875]],
            results: &["B1"],
            notes: &[NoteDef { kind: NoteKind::Inconsistent, query: 0, known: Some(0), text: "reference value 0.8625 is inconsistent with the formula; recomputation gives 0.8900" }, NoteDef { kind: NoteKind::Inconsistent, query: 0, known: Some(1), text: "reference value 0.8125 is inconsistent with the formula; recomputation gives 0.8500" }, NoteDef { kind: NoteKind::Inconsistent, query: 0, known: Some(2), text: "reference value 0.6375 is inconsistent with the formula; recomputation gives 0.7100" }, NoteDef { kind: NoteKind::Inconsistent, query: 0, known: Some(3), text: "reference value 0.6875 is inconsistent with the formula; recomputation gives 0.7500" }],
        },
        RowDef {
            label: "S_Az2",
            id: MeasureId::SAzP,
            p: 2,
            excluded: None,
            values: &[&[0.838, 0.7331, 0.5655, 0.6779]],
            results: &["B1"],
            notes: &[NoteDef { kind: NoteKind::Inconsistent, query: 0, known: Some(0), text: "reference value 0.8380 is inconsistent with the formula; recomputation gives 0.8551" }, NoteDef { kind: NoteKind::Inconsistent, query: 0, known: Some(1), text: "reference value 0.7331 is inconsistent with the formula; recomputation gives 0.7613" }, NoteDef { kind: NoteKind::Inconsistent, query: 0, known: Some(2), text: "reference value 0.5655 is inconsistent with the formula; recomputation gives 0.6114" }, NoteDef { kind: NoteKind::Inconsistent, query: 0, known: Some(3), text: "reference value 0.6779 is inconsistent with the formula; recomputation gives 0.7050" }],
        },
        RowDef {
            label: "S_Az1^h",
            id: MeasureId::SAzPH,
            p: 1,
            excluded: Some("the delta/gamma split for this family is not stated alongside the reference values; shown for display only"),
            values: &[&[0.875, 0.8, 0.55, 0.5125]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "S_Az2^h",
            id: MeasureId::SAzPH,
            p: 2,
            excluded: Some("the delta/gamma split for this family is not stated alongside the reference values; shown for display only"),
            values: &[&[0.8459, 0.7764, 0.5417, 0.5191]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "MD",
            id: MeasureId::SsmMd,
            p: 1,
            excluded: None,
            values: &[&[0.92, 0.86, 0.84, 0.81]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "NMD",
            id: MeasureId::SsmNmd,
            p: 1,
            excluded: None,
            values: &[&[0.935, 0.915, 0.765, 0.815]],
            results: &["B1"],
            notes: &[],
        },
        RowDef {
            label: "ED",
            id: MeasureId::SsmEd,
            p: 1,
            excluded: None,
            values: &[&[0.945, 0.925, 0.855, 0.875]],
            results: &["B1"],
            notes: &[],
        },
    ],
};

pub static CASES: [&CaseDef; 6] = [
    &EXAMPLE1, &EXAMPLE2, &EXAMPLE3, &EXAMPLE4, &EXAMPLE5, &EXAMPLE6,
];
