use anyhow::anyhow;
use noether_core::bundle_algebra::{
    chi_invariants, n_invariant, noether_check, semipositivity_warnings, split_cohomology,
    ChiInvariants, FibrationData, NInvariant, NoetherCheck, SplitCohomology,
};
use noether_core::invariants::{
    flip_analysis, kobayashi_translate, moduli_components, FlipRecord, InvariantSet,
};
use noether_core::linear_system::{coefficient_profile, enumerate_monomials};
use noether_core::record::{OutputRecord, SweepRow};
use noether_core::singularities::SingularityClassification;
use noether_core::toric_model::{
    curve_intersection, h0_class, is_ample, is_nef, torus_curve_intersection,
};
use noether_core::{BundleParams, Coordinate, DivisorClass, Rational, SpecialCurve};
use rayon::prelude::*;
use serde::Serialize;

use crate::render::{aligned, csv, flag, json_lines, optional};
use crate::{Failure, Format, Report, EXIT_EMPTY, EXIT_USAGE};

pub const SWEEP_CSV_HEADER: [&str; 13] = [
    "d", "d0", "e", "pg", "K3_num", "K3_den", "class", "count", "image", "K_ample", "K_nef",
    "noether", "mds",
];

const SWEEP_TEXT_HEADER: [&str; 12] = [
    "d", "d0", "e", "pg", "K3", "class", "count", "image", "K_ample", "K_nef", "noether", "mds",
];

pub const MAX_SWEEP_D: i64 = 10_000;

fn usage(message: String) -> Failure {
    Failure {
        status: EXIT_USAGE,
        error: anyhow!(message),
    }
}

fn ok(body: String) -> Report {
    Report { body, status: 0 }
}

fn invariant_cells(inv: Option<&InvariantSet>) -> [String; 6] {
    match inv {
        Some(inv) => [
            inv.p_g.to_string(),
            inv.canonical_image.to_string(),
            flag(inv.k_ample),
            flag(inv.k_nef),
            flag(inv.on_noether_line),
            flag(inv.mori_dream_general),
        ],
        None => Default::default(),
    }
}

fn sweep_csv_row(row: &SweepRow) -> Vec<String> {
    let [pg, image, ample, nef, noether, mds] = invariant_cells(row.invariants.as_ref());
    let k3 = row.k3();
    vec![
        row.d.to_string(),
        row.d0.to_string(),
        row.e.to_string(),
        pg,
        optional(k3.map(|k| k.numer())),
        optional(k3.map(|k| k.denom())),
        row.classification.label().to_string(),
        optional(row.classification.count()),
        image,
        ample,
        nef,
        noether,
        mds,
    ]
}

fn sweep_text_row(row: &SweepRow) -> Vec<String> {
    let [pg, image, ample, nef, noether, mds] = invariant_cells(row.invariants.as_ref());
    vec![
        row.d.to_string(),
        row.d0.to_string(),
        row.e.to_string(),
        pg,
        optional(row.k3()),
        row.classification.label().to_string(),
        optional(row.classification.count()),
        image,
        ample,
        nef,
        noether,
        mds,
    ]
}

fn render_sweep(rows: &[SweepRow], format: Format) -> anyhow::Result<String> {
    match format {
        Format::Text => Ok(aligned(
            &SWEEP_TEXT_HEADER,
            &rows.iter().map(sweep_text_row).collect::<Vec<_>>(),
        )),
        Format::Csv => csv(
            &SWEEP_CSV_HEADER,
            &rows.iter().map(sweep_csv_row).collect::<Vec<_>>(),
        ),
        Format::Json => json_lines(rows),
    }
}

pub fn classify(
    d_min: i64,
    d_max: i64,
    d0: Option<i64>,
    format: Format,
) -> Result<Report, Failure> {
    if !(0 <= d_min && d_min <= d_max && d_max <= MAX_SWEEP_D) {
        return Err(usage(format!(
            "need 0 <= d_min <= d_max <= {MAX_SWEEP_D}, got d_min = {d_min}, d_max = {d_max}"
        )));
    }
    let params: Vec<BundleParams> = BundleParams::sweep(d_min..=d_max)
        .filter(|p| d0.is_none_or(|d0| p.d0() == d0))
        .collect();
    let rows: Vec<SweepRow> = params.par_iter().map(|&p| SweepRow::build(p)).collect();
    Ok(ok(render_sweep(&rows, format)?))
}

fn inspect_text(record: &OutputRecord) -> String {
    let p = record.params;
    let mut out = format!("{p}  e = {}\n", p.e());
    out += &format!("classification: {}\n", record.classification);
    match (record.kodaira_dimension, &record.invariants) {
        (_, Some(inv)) => {
            out += &format!(
                "p_g = {}, q1 = {}, q2 = {}, chi(O_X) = {}, K^3 = {}\n",
                inv.p_g, inv.q1, inv.q2, inv.chi_o, inv.k3
            );
            out += &format!("canonical image: {}\n", inv.canonical_image);
            out += &format!(
                "K ample: {}, K nef: {}, Noether line: {}, Mori dream (general): {}\n",
                inv.k_ample, inv.k_nef, inv.on_noether_line, inv.mori_dream_general
            );
        }
        (Some(kodaira), None) => {
            out += &format!("Kodaira dimension {kodaira}: invariants omitted\n");
        }
        (None, None) => {}
    }
    if let Some((a, e)) = record.kobayashi {
        out += &format!("Kobayashi-Chen-Hu (a, e) = ({a}, {e})\n");
    }
    if let Some(flip) = &record.flip {
        out += &format!(
            "flip: K.s0 = {}, K^3 after flip = {}\n",
            flip.k_dot_s0, flip.k3_plus
        );
    }
    out += &format!("weight matrix:\n{}\n", record.weight_matrix);
    out += &format!(
        "base locus of |X|: {}\n",
        record
            .base_locus
            .family_base
            .map_or("none".to_string(), |c| c.to_string())
    );
    if let Some(curve) = record.base_locus.canonical_base {
        out += &format!("base curve of |K_X|: {curve}\n");
    }
    out += &format!("dim |X| = {}\n", record.family_dimension);
    let support: Vec<String> = record
        .normal_form_support
        .iter()
        .map(|m| m.to_string())
        .collect();
    out += &format!(
        "normal form support ({}): {}\n",
        support.len(),
        support.join(" + ")
    );
    out += "coefficient degrees:\n";
    let rows: Vec<Vec<String>> = record
        .coefficient_profile
        .iter()
        .map(|entry| vec![entry.monomial.to_string(), entry.degree.to_string()])
        .collect();
    for line in aligned(&["monomial", "degree"], &rows).lines() {
        out += &format!("  {line}\n");
    }
    out
}

pub fn inspect(params: BundleParams, format: Format) -> Result<Report, Failure> {
    let record = OutputRecord::build(params)?;
    let body = match format {
        Format::Text => inspect_text(&record),
        Format::Json => json_lines(std::slice::from_ref(&record))?,
        Format::Csv => render_sweep(&[SweepRow::build(params)], Format::Csv)?,
    };
    let status = if record.classification == SingularityClassification::NotExistent {
        EXIT_EMPTY
    } else {
        0
    };
    Ok(Report { body, status })
}

fn basket_text(flip: &FlipRecord) -> String {
    flip.basket
        .iter()
        .map(|q| q.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn flip(d: i64, format: Format) -> Result<Report, Failure> {
    let rec = flip_analysis(d)?;
    let body = match format {
        Format::Text => {
            let [first, second] = rec.nef_cone_fplus;
            format!(
                "{}  K.s0 = {}\np_g = {}, P2 = {}\nbasket: {}\nK3+ = {}\nnef cone of F+: <{first}, {second}>\n",
                rec.params,
                rec.k_dot_s0,
                rec.p_g,
                rec.p2,
                basket_text(&rec),
                rec.k3_plus
            )
        }
        Format::Json => json_lines(std::slice::from_ref(&rec))?,
        Format::Csv => csv(
            &[
                "d",
                "K_dot_s0",
                "pg",
                "P2",
                "K3plus_num",
                "K3plus_den",
                "basket",
            ],
            &[vec![
                rec.params.d().to_string(),
                rec.k_dot_s0.to_string(),
                rec.p_g.to_string(),
                rec.p2.to_string(),
                rec.k3_plus.numer().to_string(),
                rec.k3_plus.denom().to_string(),
                basket_text(&rec),
            ]],
        )?,
    };
    Ok(ok(body))
}

pub fn moduli(pg: i64, format: Format) -> Result<Report, Failure> {
    let m = moduli_components(pg)?;
    let body = match format {
        Format::Text => format!("{m}\n"),
        Format::Json => json_lines(std::slice::from_ref(&m))?,
        Format::Csv => csv(
            &["pg", "d", "components", "second_d", "second_d0"],
            &[vec![
                pg.to_string(),
                m.d.to_string(),
                m.components.to_string(),
                optional(m.second_component.map(|p| p.d())),
                optional(m.second_component.map(|p| p.d0())),
            ]],
        )?,
    };
    Ok(ok(body))
}

#[derive(Serialize)]
struct KobayashiReport {
    a: i64,
    e: i64,
    params: BundleParams,
}

pub fn kobayashi(a: i64, e: i64, format: Format) -> Result<Report, Failure> {
    let params = kobayashi_translate(a, e)?;
    let body = match format {
        Format::Text => format!("{params}\n"),
        Format::Json => json_lines(&[KobayashiReport { a, e, params }])?,
        Format::Csv => csv(
            &["a", "e", "d", "d0"],
            &[vec![
                a.to_string(),
                e.to_string(),
                params.d().to_string(),
                params.d0().to_string(),
            ]],
        )?,
    };
    Ok(ok(body))
}

#[derive(Serialize)]
struct BundleReport {
    data: FibrationData,
    #[serde(rename = "N")]
    n: NInvariant,
    chi: Option<ChiInvariants>,
    cohomology: Option<SplitCohomology>,
    noether: Option<NoetherCheck>,
    warnings: Vec<String>,
}

pub fn bundle(
    b: i64,
    e1: i64,
    e2: i64,
    split: Option<(i64, i64)>,
    format: Format,
) -> Result<Report, Failure> {
    let mut data = FibrationData::new(b, e1, e2)?;
    if let Some((first, second)) = split {
        data = data.with_split(first, second)?;
    }
    let n = n_invariant(&data);
    let chi = chi_invariants(&data).ok();
    let cohomology = split_cohomology(&data).ok();
    let noether = match (chi, cohomology) {
        (Some(_), Some(coh)) => Some(noether_check(&data, coh.p_g, b, coh.q2)?),
        _ => None,
    };
    let report = BundleReport {
        data,
        n,
        chi,
        cohomology,
        noether,
        warnings: semipositivity_warnings(&data),
    };
    let body = match format {
        Format::Text => bundle_text(&report),
        Format::Json => json_lines(&[&report])?,
        Format::Csv => csv(
            &[
                "b",
                "deg_E1",
                "deg_E2",
                "deg_E5",
                "N",
                "chi_OB",
                "chi_E1",
                "chi_omega",
                "K3_num",
                "K3_den",
                "pg",
                "q2",
                "noether_equality",
            ],
            &[vec![
                b.to_string(),
                e1.to_string(),
                e2.to_string(),
                data.deg_e5().to_string(),
                n.value.to_string(),
                optional(chi.map(|c| c.chi_ob)),
                optional(chi.map(|c| c.chi_e1)),
                optional(chi.map(|c| c.chi_omega)),
                optional(chi.map(|c| c.k3.numer())),
                optional(chi.map(|c| c.k3.denom())),
                optional(cohomology.map(|c| c.p_g)),
                optional(cohomology.map(|c| c.q2)),
                optional(noether.map(|c| c.equality)),
            ]],
        )?,
    };
    let status = if n.simple { 0 } else { EXIT_EMPTY };
    Ok(Report { body, status })
}

fn bundle_text(report: &BundleReport) -> String {
    let data = &report.data;
    let mut out = format!(
        "b = {}, deg E1 = {}, deg E2 = {}, deg E5 = {}\n",
        data.genus_b(),
        data.deg_e1(),
        data.deg_e2(),
        data.deg_e5()
    );
    out += &format!("N = {}", report.n.value);
    out += if report.n.simple {
        "\n"
    } else {
        " < 0: not a simple fibration\n"
    };
    if let Some(chi) = report.chi {
        out += &format!(
            "chi(O_B) = {}, chi(E1) = {}, chi(omega_X) = {}, K^3 = {}\n",
            chi.chi_ob, chi.chi_e1, chi.chi_omega, chi.k3
        );
    }
    if let Some(coh) = report.cohomology {
        out += &format!("p_g = {}, q2 = {}\n", coh.p_g, coh.q2);
    }
    if let Some(check) = report.noether {
        out += &format!(
            "Noether: K^3 = {} >= {} (gap {}){}\n",
            check.lhs,
            check.rhs,
            check.gap,
            if check.equality { ", equality" } else { "" }
        );
    }
    for warning in &report.warnings {
        out += &format!("warning: {warning}\n");
    }
    out
}

#[derive(Serialize)]
struct MonomialRow {
    index: usize,
    monomial: String,
    exponents: [u32; 4],
    coefficient_degree: Option<i64>,
}

pub fn monomials(m: u32, params: Option<BundleParams>, format: Format) -> Result<Report, Failure> {
    let degrees: Option<Vec<i64>> =
        params.map(|p| coefficient_profile(p, m).iter().map(|e| e.degree).collect());
    let rows: Vec<MonomialRow> = enumerate_monomials(m)
        .into_iter()
        .enumerate()
        .map(|(index, mono)| MonomialRow {
            index,
            monomial: mono.to_string(),
            exponents: [mono.a0, mono.a1, mono.a2, mono.a5],
            coefficient_degree: degrees.as_ref().map(|d| d[index]),
        })
        .collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.index.to_string(),
                r.monomial.clone(),
                optional(r.coefficient_degree),
            ]
        })
        .collect();
    let header = ["index", "monomial", "coefficient_degree"];
    let body = match format {
        Format::Text => aligned(&header, &cells),
        Format::Csv => csv(&header, &cells)?,
        Format::Json => json_lines(&rows)?,
    };
    Ok(ok(body))
}

#[derive(Serialize)]
struct NefReport {
    class: DivisorClass,
    params: BundleParams,
    nef: bool,
    ample: bool,
    h0: i64,
    fibre_curve: Rational,
    s0: Rational,
    s2: Rational,
    s5: Rational,
    gamma: Rational,
}

pub fn nef(class: DivisorClass, params: BundleParams, format: Format) -> Result<Report, Failure> {
    let at = |curve| curve_intersection(class, curve, params);
    let report = NefReport {
        class,
        params,
        nef: is_nef(class, params),
        ample: is_ample(class, params),
        h0: h0_class(class, params),
        fibre_curve: torus_curve_intersection(
            class,
            [Coordinate::T0, Coordinate::Y, Coordinate::Z],
            params,
        ),
        s0: at(SpecialCurve::S0),
        s2: at(SpecialCurve::S2),
        s5: at(SpecialCurve::S5),
        gamma: at(SpecialCurve::Gamma),
    };
    let header = [
        "class", "params", "nef", "ample", "h0", "fibre", "s0", "s2", "s5", "Gamma",
    ];
    let cells = vec![vec![
        class.to_string(),
        params.to_string(),
        flag(report.nef),
        flag(report.ample),
        report.h0.to_string(),
        report.fibre_curve.to_string(),
        report.s0.to_string(),
        report.s2.to_string(),
        report.s5.to_string(),
        report.gamma.to_string(),
    ]];
    let body = match format {
        Format::Text => aligned(&header, &cells),
        Format::Csv => csv(&header, &cells)?,
        Format::Json => json_lines(&[report])?,
    };
    Ok(ok(body))
}
