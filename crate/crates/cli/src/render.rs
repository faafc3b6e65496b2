//! Output for each command in table, JSON and CSV form.

use std::fmt::Write as _;

use boxvol::combinatorics::dyck_path_of;
use boxvol::oracle::{SimReport, TheoremReport};
use boxvol::volume::{self, catalan as catalan_number};
use boxvol::{Classification, Partition, Permutation, Polynomial, Weights};
use serde::Serialize;

use crate::{Failure, Format};

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Failure::Usage(e.to_string());
    w.write_record(header).map_err(err)?;
    for row in rows {
        w.write_record(row).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn cells_text(cells: impl Iterator<Item = (usize, usize)>) -> String {
    let inner: Vec<String> = cells.map(|(r, c)| format!("({r},{c})")).collect();
    format!("{{{}}}", inner.join(","))
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

#[derive(Serialize)]
struct PsiJson<'a> {
    permutation: &'a Permutation,
    psi: Partition,
    lambda_max: Partition,
    diagram: Vec<(usize, usize)>,
    is_132_avoiding: bool,
    dyck_word: String,
}

/// The permutation matrix with 1-entries as `o`; `#` marks cells of ψ in the
/// first grid and cells of the diagram in the second.
fn grids(p: &Permutation) -> String {
    let n = p.size();
    let psi = p.psi();
    let diagram = p.diagram();
    let mut out = String::new();
    for (title, marked) in [("psi", 0), ("diagram", 1)] {
        let _ = writeln!(out, "{title}:");
        for i in 1..=n {
            let row: String = (1..=n)
                .map(|j| {
                    let hit = if marked == 0 {
                        j <= psi.part(i)
                    } else {
                        diagram.contains(i, j)
                    };
                    if p.image(i) == j {
                        'o'
                    } else if hit {
                        '#'
                    } else {
                        '.'
                    }
                })
                .collect();
            let _ = writeln!(out, "  {row}");
        }
    }
    out
}

pub fn psi(p: &Permutation, format: Format, ascii: bool) -> Result<String, Failure> {
    let psi = p.psi();
    let dyck = dyck_path_of(&psi, p.size())?.to_string();
    let diagram = p.diagram();
    match format {
        Format::Json => json(&PsiJson {
            permutation: p,
            lambda_max: p.lambda_max(),
            diagram: diagram.iter().collect(),
            is_132_avoiding: p.is_132_avoiding(),
            dyck_word: dyck,
            psi,
        }),
        Format::Csv => csv(
            &[
                "permutation",
                "psi",
                "lambda_max",
                "diagram",
                "is_132_avoiding",
                "dyck_word",
            ],
            vec![vec![
                p.to_string(),
                psi.to_string(),
                p.lambda_max().to_string(),
                cells_text(diagram.iter()),
                p.is_132_avoiding().to_string(),
                dyck,
            ]],
        ),
        Format::Table => {
            let mut out = table(&[
                ("permutation", p.to_string()),
                ("psi", psi.to_string()),
                ("lambda_max", p.lambda_max().to_string()),
                ("diagram", cells_text(diagram.iter())),
                ("132-avoiding", yes_no(p.is_132_avoiding())),
                ("dyck word", dyck),
            ]);
            if ascii {
                out.push_str(&grids(p));
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct VolumeJson<'a> {
    permutation: &'a Permutation,
    psi: Partition,
    volume_a_text: String,
    volume_w_text: String,
    volume_a: &'a Polynomial,
    volume_w: &'a Polynomial,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<&'a Weights>,
    #[serde(skip_serializing_if = "Option::is_none")]
    volume: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    probability: Option<String>,
}

pub fn volume(p: &Permutation, w: Option<&Weights>, format: Format) -> Result<String, Failure> {
    let va = volume::volume_poly(p);
    let vw = va.substitute_a_to_w()?;
    let (value, prob) = match w {
        Some(w) => (
            Some(volume::volume_at(p, w)?.to_string()),
            Some(volume::probability_at(p, w)?.to_string()),
        ),
        None => (None, None),
    };
    match format {
        Format::Json => json(&VolumeJson {
            permutation: p,
            psi: p.psi(),
            volume_a_text: va.to_string(),
            volume_w_text: vw.to_string(),
            volume_a: &va,
            volume_w: &vw,
            weights: w,
            volume: value,
            probability: prob,
        }),
        Format::Csv => csv(
            &[
                "permutation",
                "volume_a",
                "volume_w",
                "volume",
                "probability",
            ],
            vec![vec![
                p.to_string(),
                va.to_string(),
                vw.to_string(),
                value.unwrap_or_default(),
                prob.unwrap_or_default(),
            ]],
        ),
        Format::Table => {
            let mut rows = vec![
                ("permutation", p.to_string()),
                ("volume (a)", va.to_string()),
                ("volume (W)", vw.to_string()),
            ];
            if let (Some(v), Some(q)) = (value, prob) {
                rows.push(("volume", v));
                rows.push(("probability", q));
            }
            Ok(table(&rows))
        }
    }
}

fn member_list(members: Option<&[Permutation]>) -> String {
    members
        .map(|m| {
            m.iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default()
}

pub fn classification(
    c: &Classification,
    format: Format,
    threshold: Option<u64>,
) -> Result<String, Failure> {
    let view = c.to_json(threshold);
    match format {
        Format::Json => json(&view),
        Format::Csv => csv(
            &[
                "psi",
                "size",
                "representative",
                "volume_a",
                "volume_w",
                "members",
            ],
            view.classes
                .iter()
                .map(|k| {
                    vec![
                        k.psi.to_string(),
                        k.size.to_string(),
                        k.representative.to_string(),
                        k.volume_a_text.clone(),
                        k.volume_w_text.clone(),
                        member_list(k.members),
                    ]
                })
                .collect(),
        ),
        Format::Table => {
            let mut out = String::new();
            for k in &view.classes {
                let _ = writeln!(
                    out,
                    "{:<14} {:>8}  {:<12} {}",
                    k.psi.to_string(),
                    k.size,
                    k.representative.to_string(),
                    k.volume_w_text
                );
                let members = member_list(k.members);
                if !members.is_empty() && k.size > 1 {
                    let _ = writeln!(out, "{:<14} {:>8}  members: {members}", "", "");
                }
            }
            let _ = writeln!(
                out,
                "n = {}: {} classes, C_{} = {}",
                c.n, view.class_count, c.n, view.catalan
            );
            Ok(out)
        }
    }
}

pub fn theorem(r: &TheoremReport, format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => json(r),
        Format::Csv => csv(
            &[
                "n",
                "agree",
                "class_count",
                "catalan",
                "total_volume_ok",
                "one_avoider_per_class",
                "oracle_checked",
                "oracle_agree",
            ],
            vec![vec![
                r.n.to_string(),
                r.agree.to_string(),
                r.class_count.to_string(),
                r.catalan.to_string(),
                r.total_volume_ok.to_string(),
                r.one_avoider_per_class.to_string(),
                r.oracle_checked.to_string(),
                r.oracle_agree.to_string(),
            ]],
        ),
        Format::Table => Ok(table(&[
            ("n", r.n.to_string()),
            ("volume partition = psi partition", yes_no(r.agree)),
            ("classes", r.class_count.to_string()),
            ("catalan", r.catalan.to_string()),
            ("total volume identity", yes_no(r.total_volume_ok)),
            ("one 132-avoider per class", yes_no(r.one_avoider_per_class)),
            (
                "box enumeration agrees",
                if r.oracle_checked {
                    yes_no(r.oracle_agree)
                } else {
                    "skipped".into()
                },
            ),
            ("result", if r.passed() { "PASS" } else { "FAIL" }.into()),
        ])),
    }
}

#[derive(Serialize)]
struct SimJson<'a> {
    #[serde(flatten)]
    report: &'a SimReport,
    z_score: Option<f64>,
}

pub fn simulation(r: &SimReport, format: Format) -> Result<String, Failure> {
    let z = r.z_score();
    let z_text = z.map(|z| format!("{z:.4}")).unwrap_or_else(|| "inf".into());
    match format {
        Format::Json => json(&SimJson {
            report: r,
            z_score: z,
        }),
        Format::Csv => csv(
            &[
                "permutation",
                "samples",
                "hits",
                "estimate",
                "std_error",
                "exact",
                "z_score",
                "seed",
                "workers",
            ],
            vec![vec![
                r.permutation.to_string(),
                r.samples.to_string(),
                r.hits.to_string(),
                r.estimate.to_string(),
                r.std_error.to_string(),
                r.exact.to_string(),
                z.map(|z| z.to_string()).unwrap_or_default(),
                r.seed.to_string(),
                r.workers.to_string(),
            ]],
        ),
        Format::Table => Ok(table(&[
            ("permutation", r.permutation.to_string()),
            (
                "weights",
                r.weights
                    .as_slice()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            ),
            ("samples", r.samples.to_string()),
            ("hits", r.hits.to_string()),
            ("estimate", format!("{:.6}", r.estimate)),
            ("std error", format!("{:.6}", r.std_error)),
            ("exact", format!("{} ≈ {:.6}", r.exact, r.exact_f64())),
            ("z", z_text),
            ("seed", r.seed.to_string()),
            ("workers", r.workers.to_string()),
        ])),
    }
}

#[derive(Serialize)]
struct CatalanJson {
    n: usize,
    catalan: String,
}

pub fn catalan(n: usize, format: Format) -> Result<String, Failure> {
    let c = catalan_number(n).to_string();
    match format {
        Format::Json => json(&CatalanJson { n, catalan: c }),
        Format::Csv => csv(&["n", "catalan"], vec![vec![n.to_string(), c]]),
        Format::Table => Ok(format!("{c}\n")),
    }
}
