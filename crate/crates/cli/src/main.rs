//! Command-line front end: parse Seifert invariants, classify d-sections,
//! and emit exact text or JSON reports.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use seifert_sos::{
    classify_one_section, classify_positive_d_section, degree_genus, rh_hopf_lift_genus,
    sphere_from_weights, surgery_presentation, zd_quotient, Family, FiberRole, NormalForm,
    Obstruction, OneSectionResult, PositiveSectionOutcome, SeifertData, Sign, SignChoice,
    SphereFibration, TableRow, Topology, WeightedPlane,
};

#[derive(Parser)]
#[command(
    name = "sos",
    about = "Exact classification of global surfaces of section for Seifert fibered 3-manifolds",
    version
)]
struct Cli {
    /// Emit machine-readable JSON (schema 1) instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to FILE instead of standard out.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form, Euler number, and 1-section existence.
    Info {
        /// Seifert invariants, e.g. "M(0;(2,1),(3,-1))".
        invariants: String,
    },
    /// Classify positive d-sections for one degree or scan a range.
    Sections {
        /// Seifert invariants, e.g. "M(0;(2,1),(3,-1))".
        invariants: String,
        /// Classify this single degree.
        #[arg(long, conflicts_with = "scan", required_unless_present = "scan")]
        d: Option<BigInt>,
        /// Report every admissible degree up to this bound.
        #[arg(long, value_name = "D_MAX", required_unless_present = "d")]
        scan: Option<BigInt>,
    },
    /// Quotient by the cyclic subgroup Z_d of the fiber circle.
    Quotient {
        /// Seifert invariants, e.g. "M(0;(2,1),(3,-1))".
        invariants: String,
        /// Order of the cyclic subgroup.
        #[arg(long)]
        d: BigInt,
    },
    /// Closed-form d-section families for the Seifert fibrations of S^3.
    S3 {
        /// The two coprime multiplicities alpha1 alpha2.
        #[arg(long, num_args = 2, value_names = ["A1", "A2"])]
        alphas: Vec<BigInt>,
        /// Largest k-parameter emitted per family.
        #[arg(long, default_value = "2")]
        k_max: BigInt,
        /// Re-derive every row via the general formula, the Hopf-lift
        /// Riemann-Hurwitz oracle, and the degree-genus formula.
        #[arg(long)]
        verify: bool,
    },
    /// Genus-0 surgery presentation: 0-framed unknot plus meridians.
    Surgery {
        /// Seifert invariants with base genus 0.
        invariants: String,
    },
    /// Degree-genus formula on a weighted projective plane.
    Wps {
        /// Pairwise coprime weights of P(A0, A1, A2).
        #[arg(long, num_args = 3, value_names = ["A0", "A1", "A2"])]
        weights: Vec<BigInt>,
        /// Curve degree.
        #[arg(long)]
        d: BigInt,
    },
}

struct Report {
    text: String,
    json: Value,
    /// Set when --verify found a disagreement; maps to exit code 2.
    verify_failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli.command) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(1);
        }
    };
    let payload = if cli.json {
        let mut s = serde_json::to_string_pretty(&report.json).expect("serializable report");
        s.push('\n');
        s
    } else {
        report.text
    };
    if let Some(path) = &cli.out {
        if let Err(err) = fs::write(path, &payload).with_context(|| format!("writing {}", path.display())) {
            eprintln!("error: {err:#}");
            return ExitCode::from(1);
        }
    } else {
        print!("{payload}");
    }
    if report.verify_failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Info { invariants } => cmd_info(invariants),
        Command::Sections { invariants, d, scan } => cmd_sections(invariants, d.as_ref(), scan.as_ref()),
        Command::Quotient { invariants, d } => cmd_quotient(invariants, d),
        Command::S3 {
            alphas,
            k_max,
            verify,
        } => cmd_s3(alphas, k_max, *verify),
        Command::Surgery { invariants } => cmd_surgery(invariants),
        Command::Wps { weights, d } => cmd_wps(weights, d),
    }
}

fn parse_invariants(invariants: &str) -> Result<SeifertData> {
    invariants.parse::<SeifertData>()
        .with_context(|| format!("invalid Seifert invariants {invariants:?}"))
}

fn normal_form_json(nf: &NormalForm) -> Value {
    json!({
        "g": nf.base_genus(),
        "b": nf.b().to_string(),
        "pairs": nf
            .singular_pairs()
            .iter()
            .map(|p| json!([p.alpha().to_string(), p.beta().to_string()]))
            .collect::<Vec<_>>(),
    })
}

fn sign_str(sign: &Sign) -> &'static str {
    match sign {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

fn role_json(role: &FiberRole) -> Value {
    match role {
        FiberRole::Boundary { sign } => json!({"kind": "boundary", "sign": sign_str(sign)}),
        FiberRole::Interior { intersections } => {
            json!({"kind": "interior", "intersections": intersections.to_string()})
        }
    }
}

fn obstruction_json(o: &Obstruction) -> Value {
    match o {
        Obstruction::NoDSection { pair_index } => {
            json!({"kind": "no_d_section", "pair": pair_index})
        }
        Obstruction::NegativeBoundarySign { pair_index } => {
            json!({"kind": "negative_boundary_sign", "pair": pair_index})
        }
        Obstruction::EulerBound { b_bar } => {
            json!({"kind": "euler_bound", "b_bar": b_bar.to_string()})
        }
    }
}

fn obstruction_text(o: &Obstruction) -> String {
    match o {
        Obstruction::NoDSection { pair_index } => format!(
            "pair {} admits no d-section: alpha divides neither d nor d*beta -+ 1",
            pair_index + 1
        ),
        Obstruction::NegativeBoundarySign { pair_index } => {
            format!("pair {} forces boundary sign -1", pair_index + 1)
        }
        Obstruction::EulerBound { b_bar } => {
            format!("Euler bound fails: b_bar = {b_bar} < 0")
        }
    }
}

fn section_entry_json(d: &BigInt, outcome: &PositiveSectionOutcome) -> Value {
    match outcome {
        PositiveSectionOutcome::Section(r) => {
            let (genus, chi) = match &r.topology {
                Topology::Connected { genus } => (Value::String(genus.to_string()), Value::Null),
                Topology::ClosedUndeterminedComponents {
                    euler_characteristic,
                } => (Value::Null, Value::String(euler_characteristic.to_string())),
            };
            json!({
                "d": d.to_string(),
                "exists": true,
                "genus": genus,
                "boundary": r.boundary_count.to_string(),
                "b_bar": r.b_bar.to_string(),
                "chi": chi,
                "obstruction": Value::Null,
                "roles": r.fiber_roles.iter().map(role_json).collect::<Vec<_>>(),
            })
        }
        PositiveSectionOutcome::Obstructed(o) => json!({
            "d": d.to_string(),
            "exists": false,
            "genus": Value::Null,
            "boundary": Value::Null,
            "b_bar": Value::Null,
            "chi": Value::Null,
            "obstruction": obstruction_json(o),
            "roles": Value::Null,
        }),
    }
}

fn cmd_info(invariants: &str) -> Result<Report> {
    let data = parse_invariants(invariants)?;
    let nf = data.normalize();
    let euler = data.euler_number();

    let mut text = String::new();
    writeln!(text, "input: {data}")?;
    writeln!(text, "normal form: {nf}")?;
    writeln!(text, "euler number: {euler}")?;

    let one_section = classify_one_section(&data);
    let one_section_json = match &one_section {
        OneSectionResult::Exists(s) => {
            let signs: Vec<String> = s
                .singular_signs
                .iter()
                .map(|(i, choice)| {
                    let c = match choice {
                        SignChoice::Plus => "+",
                        SignChoice::Minus => "-",
                        SignChoice::Both => "+-",
                    };
                    format!("m{} {c}", i + 1)
                })
                .collect();
            if signs.is_empty() {
                writeln!(
                    text,
                    "1-section: exists; genus {}; no singular fibers; net regular boundary {}",
                    s.genus, s.net_regular_boundary
                )?;
            } else {
                writeln!(
                    text,
                    "1-section: exists; genus {}; signs: {}; net regular boundary {}",
                    s.genus,
                    signs.join(", "),
                    s.net_regular_boundary
                )?;
            }
            json!({
                "exists": true,
                "genus": s.genus,
                "signs": s
                    .singular_signs
                    .iter()
                    .map(|(i, choice)| json!({
                        "pair": i,
                        "sign": match choice {
                            SignChoice::Plus => "+",
                            SignChoice::Minus => "-",
                            SignChoice::Both => "+-",
                        },
                    }))
                    .collect::<Vec<_>>(),
                "net_regular_boundary": s.net_regular_boundary.to_string(),
            })
        }
        OneSectionResult::Obstructed { pair_index } => {
            writeln!(
                text,
                "1-section: none (pair {} has beta != +-1 mod alpha)",
                pair_index + 1
            )?;
            json!({"exists": false, "obstructed_pair": pair_index})
        }
    };

    Ok(Report {
        text,
        json: json!({
            "schema": 1,
            "input": invariants,
            "normal_form": normal_form_json(&nf),
            "euler": euler.to_string(),
            "one_section": one_section_json,
        }),
        verify_failed: false,
    })
}

fn cmd_sections(invariants: &str, d: Option<&BigInt>, scan: Option<&BigInt>) -> Result<Report> {
    let data = parse_invariants(invariants)?;
    let nf = data.normalize();
    let euler = data.euler_number();
    let mut text = String::new();
    let mut entries = Vec::new();

    let scan_max_json = match (d, scan) {
        (Some(d), None) => {
            let outcome = classify_positive_d_section(&data, d)?;
            entries.push(section_entry_json(d, &outcome));
            match &outcome {
                PositiveSectionOutcome::Section(r) => {
                    match &r.topology {
                        Topology::Connected { genus } => writeln!(
                            text,
                            "{data}, d = {d}: genus {genus}, boundary {}",
                            r.boundary_count
                        )?,
                        Topology::ClosedUndeterminedComponents {
                            euler_characteristic,
                        } => writeln!(
                            text,
                            "{data}, d = {d}: closed, chi {euler_characteristic} (components undetermined)"
                        )?,
                    }
                    let roles: Vec<String> = r
                        .fiber_roles
                        .iter()
                        .enumerate()
                        .map(|(i, role)| match role {
                            FiberRole::Boundary { sign } => {
                                format!("m{} boundary({})", i + 1, sign_str(sign))
                            }
                            FiberRole::Interior { intersections } => {
                                format!("m{} interior({intersections})", i + 1)
                            }
                        })
                        .collect();
                    if !roles.is_empty() {
                        writeln!(text, "  roles: {}", roles.join(", "))?;
                    }
                    writeln!(text, "  b_bar = {}", r.b_bar)?;
                }
                PositiveSectionOutcome::Obstructed(o) => {
                    writeln!(text, "{data}, d = {d}: no positive d-section")?;
                    writeln!(text, "  {}", obstruction_text(o))?;
                }
            }
            Value::Null
        }
        (None, Some(d_max)) => {
            writeln!(text, "{data}: positive d-sections for d <= {d_max}")?;
            let mut found = false;
            let mut d = BigInt::one();
            while &d <= d_max {
                let outcome = classify_positive_d_section(&data, &d)?;
                if let PositiveSectionOutcome::Section(r) = &outcome {
                    entries.push(section_entry_json(&d, &outcome));
                    found = true;
                    match &r.topology {
                        Topology::Connected { genus } => writeln!(
                            text,
                            "d={d}: genus {genus}, boundary {}",
                            r.boundary_count
                        )?,
                        Topology::ClosedUndeterminedComponents {
                            euler_characteristic,
                        } => writeln!(text, "d={d}: closed, chi {euler_characteristic}")?,
                    }
                }
                d += 1;
            }
            if !found {
                writeln!(text, "none")?;
            }
            Value::String(d_max.to_string())
        }
        _ => unreachable!("clap enforces exactly one of --d/--scan"),
    };

    Ok(Report {
        text,
        json: json!({
            "schema": 1,
            "input": invariants,
            "normal_form": normal_form_json(&nf),
            "euler": euler.to_string(),
            "scan_max": scan_max_json,
            "sections": entries,
        }),
        verify_failed: false,
    })
}

fn cmd_quotient(invariants: &str, d: &BigInt) -> Result<Report> {
    let data = parse_invariants(invariants)?;
    let quotient = zd_quotient(&data, d)?;
    let e_in = data.euler_number();
    let e_out = quotient.euler_number();

    let mut text = String::new();
    writeln!(text, "{data} / Z_{d} = {quotient}")?;
    writeln!(text, "euler: {e_in} -> {e_out}")?;

    Ok(Report {
        text,
        json: json!({
            "schema": 1,
            "input": invariants,
            "d": d.to_string(),
            "euler": e_in.to_string(),
            "quotient": {
                "presentation": quotient.to_string(),
                "euler": e_out.to_string(),
                "normal_form": normal_form_json(&quotient.normalize()),
            },
        }),
        verify_failed: false,
    })
}

fn family_str(family: Family) -> &'static str {
    match family {
        Family::Regular => "regular",
        Family::C1Boundary => "c1-boundary",
        Family::C2Boundary => "c2-boundary",
        Family::BothBoundary => "both-boundary",
    }
}

/// All family rows with k-parameter up to `k_max` (the regular family starts
/// at k = 1 and gets the same number of rows), sorted by degree.
fn family_rows(fibration: &SphereFibration, k_max: &BigInt) -> Vec<TableRow> {
    let one = BigInt::one();
    let mut rows = Vec::new();
    let mut k = BigInt::one();
    while k <= k_max + &one {
        rows.push(fibration.table_row(Family::Regular, &k));
        k += 1;
    }
    let mut boundary_families = Vec::new();
    if fibration.alpha1() > &one {
        boundary_families.push(Family::C1Boundary);
    }
    if fibration.alpha2() > &one {
        boundary_families.push(Family::C2Boundary);
    }
    if fibration.alpha1() > &one && fibration.alpha2() > &one {
        boundary_families.push(Family::BothBoundary);
    }
    for family in boundary_families {
        let mut k = BigInt::zero();
        while &k <= k_max {
            rows.push(fibration.table_row(family, &k));
            k += 1;
        }
    }
    rows.sort_by(|x, y| x.d.cmp(&y.d));
    rows
}

fn verify_table_row(
    fibration: &SphereFibration,
    data: &SeifertData,
    plane: &WeightedPlane,
    row: &TableRow,
) -> bool {
    let outcome = match classify_positive_d_section(data, &row.d) {
        Ok(outcome) => outcome,
        Err(_) => return false,
    };
    let Some(report) = outcome.section() else {
        return false;
    };
    let Topology::Connected { genus } = &report.topology else {
        return false;
    };
    if genus != &row.genus || report.boundary_count != row.boundary_count {
        return false;
    }
    if rh_hopf_lift_genus(fibration, row) != row.genus {
        return false;
    }
    let dg = degree_genus(plane, &row.d);
    dg.is_integer() && dg.to_integer() == row.genus
}

fn cmd_s3(alphas: &[BigInt], k_max: &BigInt, verify: bool) -> Result<Report> {
    let [a1, a2] = alphas else {
        bail!("--alphas takes exactly two values");
    };
    if k_max.is_negative() {
        bail!("--k-max must be non-negative, got {k_max}");
    }
    let fibration = sphere_from_weights(a1.clone(), a2.clone())?;
    let data = fibration.to_seifert_data();
    let plane = WeightedPlane::new(BigInt::one(), a1.clone(), a2.clone())?;
    let rows = family_rows(&fibration, k_max);

    let mut text = String::new();
    writeln!(
        text,
        "positive d-sections of S^3, weights ({a1}, {a2}), k <= {k_max}"
    )?;
    let header = format!(
        "{:>6}  {:<13} {:>3} {:>9} {:>7}",
        "d", "family", "k", "boundary", "genus"
    );
    if verify {
        writeln!(text, "{header}  verify")?;
    } else {
        writeln!(text, "{header}")?;
    }

    let mut rows_json = Vec::new();
    let mut all_agree = true;
    for row in &rows {
        let line = format!(
            "{:>6}  {:<13} {:>3} {:>9} {:>7}",
            row.d,
            family_str(row.family),
            row.k_param,
            row.boundary_count,
            row.genus
        );
        let verdict = if verify {
            let agree = verify_table_row(&fibration, &data, &plane, row);
            all_agree &= agree;
            Some(if agree { "agree" } else { "DISAGREE" })
        } else {
            None
        };
        match verdict {
            Some(v) => writeln!(text, "{line}  {v}")?,
            None => writeln!(text, "{line}")?,
        }
        rows_json.push(json!({
            "family": family_str(row.family),
            "k": row.k_param.to_string(),
            "d": row.d.to_string(),
            "boundary": row.boundary_count.to_string(),
            "c1": row.c1_in_boundary,
            "c2": row.c2_in_boundary,
            "genus": row.genus.to_string(),
            "verify": verdict.map_or(Value::Null, |v| Value::String(v.to_string())),
        }));
    }
    let verify_failed = verify && !all_agree;
    if verify {
        writeln!(
            text,
            "verify: {}",
            if all_agree { "all rows agree" } else { "DISAGREEMENT" }
        )?;
    }

    Ok(Report {
        text,
        json: json!({
            "schema": 1,
            "alpha1": a1.to_string(),
            "alpha2": a2.to_string(),
            "k_max": k_max.to_string(),
            "rows": rows_json,
            "verify": if verify { Value::Bool(all_agree) } else { Value::Null },
        }),
        verify_failed,
    })
}

fn cmd_surgery(invariants: &str) -> Result<Report> {
    let data = parse_invariants(invariants)?;
    let diagram = surgery_presentation(&data)?;
    let meridians: Vec<String> = diagram.meridians.iter().map(|m| m.to_string()).collect();

    Ok(Report {
        text: format!("{diagram}\n"),
        json: json!({
            "schema": 1,
            "input": invariants,
            "diagram": diagram.to_string(),
            "framing": diagram.k0_framing.to_string(),
            "meridians": meridians,
            "exportable": diagram.is_exportable(),
        }),
        verify_failed: false,
    })
}

fn cmd_wps(weights: &[BigInt], d: &BigInt) -> Result<Report> {
    let [a0, a1, a2] = weights else {
        bail!("--weights takes exactly three values");
    };
    if !d.is_positive() {
        bail!("--d must be positive, got {d}");
    }
    let plane = WeightedPlane::new(a0.clone(), a1.clone(), a2.clone())?;
    let genus = degree_genus(&plane, d);
    let integral = genus.is_integer();

    let text = if integral {
        format!("P({a0}, {a1}, {a2}), d = {d}: genus {genus}\n")
    } else {
        format!(
            "P({a0}, {a1}, {a2}), d = {d}: genus {genus} (non-integral: no nonsingular curve of this degree)\n"
        )
    };

    Ok(Report {
        text,
        json: json!({
            "schema": 1,
            "weights": [a0.to_string(), a1.to_string(), a2.to_string()],
            "d": d.to_string(),
            "genus": genus.to_string(),
            "integral": integral,
        }),
        verify_failed: false,
    })
}
