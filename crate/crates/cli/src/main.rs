//! Batch command-line interface for the exact genus-expansion engine.
//!
//! Exit codes: 0 success, 2 consistency failure, 3 invalid usage, 4 budget
//! refusal. Every emitted number is an exact integer or rational string; a
//! given configuration always produces byte-identical output.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde_json::json;

use todamap_core::eg::{reconstruct_eg, resonant_orders};
use todamap_core::equilibrium::{self, c_nu};
use todamap_core::oracle::{self, OracleTask};
use todamap_core::rational::{factorial, format_rational, Rational};
use todamap_core::toda::{
    forcing_series, reconstruct_zg, two_time_z0, z0_series, ForcingRoute, HierarchyState,
};
use todamap_core::{
    EgState, Error, MapCensus, RationalFunction, ResonancePolicy, ResonanceSource, Series,
};

const EXIT_CONSISTENCY: u8 = 2;
const EXIT_USAGE: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(
    name = "todamap",
    version,
    about = "Exact genus-expansion and map-enumeration engine for even-valence maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Z,
    E,
}

#[derive(Subcommand)]
enum Command {
    /// Map-enumeration numbers κ_g(n) for n = 1..max-order.
    Kappa {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        /// Resolve resonant constants by brute-force census when the built-in
        /// table has no entry.
        #[arg(long)]
        census: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Genus-g two-leg series z_g and its closed form in z_0.
    Zg {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Genus-g free-energy series ê_g with resonance provenance.
    Eg {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[arg(long)]
        census: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed form of z_g or ê_g as a rational function of z_0 (plus log and
    /// resonant parts for ê_g).
    ClosedForm {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force census of glued maps over all perfect matchings.
    Oracle {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 0)]
        legs: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the exact invariant battery at the requested scale.
    Crosscheck {
        #[arg(long)]
        nu: usize,
        #[arg(long, default_value_t = 2)]
        genus: usize,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-time planar interface series z_0(s_1, s_2) with symmetry checks.
    TwoTime {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        nu2: usize,
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli.command) {
        Ok((text, out)) => match emit(&text, out.as_deref()) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_USAGE)
            }
        },
        Err(RunError::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Budget(_) => EXIT_BUDGET,
                Error::Precondition(_) => EXIT_USAGE,
                _ => EXIT_CONSISTENCY,
            })
        }
        Err(RunError::Crosscheck { report, out }) => {
            match emit(&report, out.as_deref()) {
                Ok(()) => {}
                Err(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(EXIT_CONSISTENCY)
        }
    }
}

enum RunError {
    Engine(Error),
    /// Crosscheck found a mismatch; the report (including the failure line)
    /// still goes to the normal output sink.
    Crosscheck { report: String, out: Option<PathBuf> },
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Engine(e)
    }
}

fn emit(text: &str, out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn usage(msg: &str) -> Error {
    Error::Precondition(msg.to_string())
}

fn validate_common(nu: usize, max_order: usize, threads: usize) -> Result<(), Error> {
    if nu < 2 {
        return Err(usage("--nu must be at least 2"));
    }
    if max_order < 1 {
        return Err(usage("--max-order must be at least 1"));
    }
    if threads < 1 {
        return Err(usage("--threads must be at least 1"));
    }
    Ok(())
}

fn policy_for(census: bool, threads: usize, force: bool) -> ResonancePolicy {
    if census {
        ResonancePolicy::with_census(threads, force)
    } else {
        ResonancePolicy::table_only()
    }
}

fn source_label(s: &ResonanceSource) -> &'static str {
    match s {
        ResonanceSource::Table => "table",
        ResonanceSource::Census => "oracle",
        ResonanceSource::Provided => "provided",
    }
}

fn rational_strings(coeffs: &[Rational]) -> Vec<String> {
    coeffs.iter().map(format_rational).collect()
}

fn rf_json(rf: &RationalFunction) -> serde_json::Value {
    json!({
        "numerator": rational_strings(rf.num.coeffs()),
        "denominator": rational_strings(rf.den.coeffs()),
    })
}

fn series_coeff_strings(s: &Series, max_order: usize) -> Vec<String> {
    (0..=max_order).map(|n| format_rational(s.coeff(n))).collect()
}

fn run(cmd: Command) -> Result<(String, Option<PathBuf>), RunError> {
    match cmd {
        Command::Kappa { nu, genus, max_order, census, threads, force, format, out } => {
            validate_common(nu, max_order, threads)?;
            let text = cmd_kappa(nu, genus, max_order, census, threads, force, format)?;
            Ok((text, out))
        }
        Command::Zg { nu, genus, max_order, format, out } => {
            validate_common(nu, max_order, 1)?;
            Ok((cmd_zg(nu, genus, max_order, format)?, out))
        }
        Command::Eg { nu, genus, max_order, census, threads, force, format, out } => {
            validate_common(nu, max_order, threads)?;
            let text = cmd_eg(nu, genus, max_order, census, threads, force, format)?;
            Ok((text, out))
        }
        Command::ClosedForm { target, nu, genus, format, out } => {
            validate_common(nu, 1, 1)?;
            Ok((cmd_closed_form(target, nu, genus, format)?, out))
        }
        Command::Oracle { nu, vertices, legs, threads, force, format, out } => {
            validate_common(nu, 1, threads)?;
            if vertices < 1 {
                return Err(usage("--vertices must be at least 1").into());
            }
            if legs != 0 && legs != 2 {
                return Err(usage("--legs must be 0 or 2").into());
            }
            Ok((cmd_oracle(nu, vertices, legs, threads, force, format)?, out))
        }
        Command::Crosscheck { nu, genus, max_order, threads, force, out } => {
            validate_common(nu, max_order, threads)?;
            match cmd_crosscheck(nu, genus, max_order, threads, force)? {
                (report, true) => Ok((report, out)),
                (report, false) => Err(RunError::Crosscheck { report, out }),
            }
        }
        Command::TwoTime { nu, nu2, max_order, format, out } => {
            validate_common(nu, max_order, 1)?;
            if nu2 < 2 {
                return Err(usage("--nu2 must be at least 2").into());
            }
            Ok((cmd_two_time(nu, nu2, max_order, format)?, out))
        }
    }
}

fn cmd_kappa(
    nu: usize,
    genus: usize,
    max_order: usize,
    census: bool,
    threads: usize,
    force: bool,
    format: Format,
) -> Result<String, Error> {
    let hierarchy = HierarchyState::solve(nu, max_order, genus)?;
    let eg = EgState::solve(&hierarchy, &policy_for(census, threads, force))?;
    let mut rows: Vec<(usize, BigInt, &'static str)> = Vec::new();
    for n in 1..=max_order {
        let kappa = eg.kappa(genus, n)?;
        let source = eg.resonances[genus]
            .iter()
            .find(|r| r.order == n)
            .map(|r| source_label(&r.source))
            .unwrap_or("recursion");
        rows.push((n, kappa, source));
    }
    Ok(match format {
        Format::Table => {
            let mut s = format!("kappa_g(n) for nu={nu} genus={genus}\n");
            s.push_str(&format!("{:>4}  {:<24}  source\n", "n", "kappa"));
            for (n, kappa, source) in &rows {
                s.push_str(&format!("{n:>4}  {:<24}  {source}\n", kappa.to_string()));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("n,kappa,source\n");
            for (n, kappa, source) in &rows {
                s.push_str(&format!("{n},{kappa},{source}\n"));
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(n, kappa, source)| {
                    json!({"n": n, "kappa": kappa.to_string(), "source": source})
                })
                .collect();
            let v = json!({
                "schema": 1,
                "command": "kappa",
                "nu": nu,
                "genus": genus,
                "rows": rows,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
    })
}

fn cmd_zg(nu: usize, genus: usize, max_order: usize, format: Format) -> Result<String, Error> {
    // Solve deep enough that the closed-form fit is overdetermined even when
    // the caller only asked for a few series orders.
    let solve_order = max_order.max(5 * genus + nu + 3);
    let hierarchy = HierarchyState::solve(nu, solve_order, genus)?;
    let series = &hierarchy.z[genus];
    let rf = if genus == 0 {
        RationalFunction::new(
            todamap_core::Poly::from_ints(&[0, 1]),
            todamap_core::Poly::from_ints(&[1]),
        )
    } else {
        reconstruct_zg(&hierarchy, genus)?
    };
    Ok(match format {
        Format::Table => {
            let mut s = format!("[s^n] z_g for nu={nu} genus={genus}\n");
            for n in 0..=max_order {
                s.push_str(&format!("{n:>4}  {}\n", format_rational(series.coeff(n))));
            }
            s.push_str(&format!(
                "closed form in z_0 (ascending powers):\n  numerator   {}\n  denominator {}\n",
                rational_strings(rf.num.coeffs()).join(" "),
                rational_strings(rf.den.coeffs()).join(" ")
            ));
            s
        }
        Format::Csv => {
            let mut s = String::from("n,coefficient\n");
            for n in 0..=max_order {
                s.push_str(&format!("{n},{}\n", format_rational(series.coeff(n))));
            }
            s
        }
        Format::Json => {
            let v = json!({
                "schema": 1,
                "command": "zg",
                "nu": nu,
                "genus": genus,
                "series": series_coeff_strings(series, max_order),
                "closed_form": rf_json(&rf),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
    })
}

fn cmd_eg(
    nu: usize,
    genus: usize,
    max_order: usize,
    census: bool,
    threads: usize,
    force: bool,
    format: Format,
) -> Result<String, Error> {
    let hierarchy = HierarchyState::solve(nu, max_order, genus)?;
    let eg = EgState::solve(&hierarchy, &policy_for(census, threads, force))?;
    let series = &eg.e_hat[genus];
    let resonances = &eg.resonances[genus];
    Ok(match format {
        Format::Table => {
            let mut s = format!("[s^n] e_g for nu={nu} genus={genus}\n");
            for n in 0..=max_order {
                s.push_str(&format!("{n:>4}  {}\n", format_rational(series.coeff(n))));
            }
            if resonances.is_empty() {
                s.push_str("resonances: none\n");
            } else {
                for r in resonances {
                    s.push_str(&format!(
                        "resonance at n={}: coefficient {} ({})\n",
                        r.order,
                        format_rational(&r.value),
                        source_label(&r.source)
                    ));
                }
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("n,coefficient\n");
            for n in 0..=max_order {
                s.push_str(&format!("{n},{}\n", format_rational(series.coeff(n))));
            }
            s
        }
        Format::Json => {
            let res: Vec<_> = resonances
                .iter()
                .map(|r| {
                    json!({
                        "n": r.order,
                        "value": format_rational(&r.value),
                        "source": source_label(&r.source),
                    })
                })
                .collect();
            let v = json!({
                "schema": 1,
                "command": "eg",
                "nu": nu,
                "genus": genus,
                "series": series_coeff_strings(series, max_order),
                "resonances": res,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
    })
}

fn cmd_closed_form(
    target: Target,
    nu: usize,
    genus: usize,
    format: Format,
) -> Result<String, Error> {
    match target {
        Target::Z => {
            let rf = if genus == 0 {
                RationalFunction::new(
                    todamap_core::Poly::from_ints(&[0, 1]),
                    todamap_core::Poly::from_ints(&[1]),
                )
            } else {
                let order = 5 * genus + nu + 3;
                let hierarchy = HierarchyState::solve(nu, order, genus)?;
                reconstruct_zg(&hierarchy, genus)?
            };
            Ok(match format {
                Format::Json => {
                    let v = json!({
                        "schema": 1,
                        "command": "closed-form",
                        "target": "z",
                        "nu": nu,
                        "genus": genus,
                        "numerator": rational_strings(rf.num.coeffs()),
                        "denominator": rational_strings(rf.den.coeffs()),
                    });
                    format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
                }
                Format::Table | Format::Csv => {
                    let mut s = String::new();
                    s.push_str(&format!(
                        "numerator,{}\n",
                        rational_strings(rf.num.coeffs()).join(" ")
                    ));
                    s.push_str(&format!(
                        "denominator,{}\n",
                        rational_strings(rf.den.coeffs()).join(" ")
                    ));
                    s
                }
            })
        }
        Target::E => {
            let order = (5 * genus + nu + 12)
                .max(resonant_orders(nu, genus, 5 * genus + nu + 12).last().copied().unwrap_or(0) + 3);
            let hierarchy = HierarchyState::solve(nu, order, genus)?;
            let eg = EgState::solve(&hierarchy, &ResonancePolicy::table_only())?;
            let cf = reconstruct_eg(&hierarchy, &eg, genus)?;
            Ok(match format {
                Format::Json => {
                    let resonant: Vec<_> = cf
                        .resonant
                        .iter()
                        .map(|(n, c)| json!({"order": n, "coefficient": format_rational(c)}))
                        .collect();
                    let v = json!({
                        "schema": 1,
                        "command": "closed-form",
                        "target": "e",
                        "nu": nu,
                        "genus": genus,
                        "numerator": rational_strings(cf.rational.num.coeffs()),
                        "denominator": rational_strings(cf.rational.den.coeffs()),
                        "c_log_nu_term": format_rational(&cf.log_interface),
                        "c_log_z0_term": format_rational(&cf.log_z0),
                        "resonant": resonant,
                    });
                    format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
                }
                Format::Table | Format::Csv => {
                    let mut s = String::new();
                    s.push_str(&format!(
                        "numerator,{}\n",
                        rational_strings(cf.rational.num.coeffs()).join(" ")
                    ));
                    s.push_str(&format!(
                        "denominator,{}\n",
                        rational_strings(cf.rational.den.coeffs()).join(" ")
                    ));
                    s.push_str(&format!(
                        "c_log_nu_term,{}\n",
                        format_rational(&cf.log_interface)
                    ));
                    s.push_str(&format!("c_log_z0_term,{}\n", format_rational(&cf.log_z0)));
                    for (n, c) in &cf.resonant {
                        s.push_str(&format!("resonant_s^{n},{}\n", format_rational(c)));
                    }
                    s
                }
            })
        }
    }
}

fn census_json(c: &MapCensus) -> serde_json::Value {
    let mut by_genus = serde_json::Map::new();
    for (g, count) in c.by_genus.iter().enumerate() {
        by_genus.insert(g.to_string(), json!(count.to_string()));
    }
    json!({
        "schema": 1,
        "nu": c.task.nu,
        "vertices": c.task.vertices,
        "legs": c.task.legs,
        "total": c.total.to_string(),
        "disconnected": c.disconnected.to_string(),
        "by_genus": by_genus,
    })
}

fn cmd_oracle(
    nu: usize,
    vertices: usize,
    legs: usize,
    threads: usize,
    force: bool,
    format: Format,
) -> Result<String, Error> {
    let task = OracleTask::new(nu, vertices, legs);
    let c = oracle::census(&task, threads, force)?;
    Ok(match format {
        Format::Table => {
            let mut s = format!(
                "census for nu={nu} vertices={vertices} legs={legs} ({} matchings)\n",
                c.total
            );
            for (g, count) in c.by_genus.iter().enumerate() {
                s.push_str(&format!("genus {g:>2}  {count}\n"));
            }
            s.push_str(&format!("disconnected  {}\n", c.disconnected));
            s
        }
        Format::Csv => {
            let mut s = String::from("genus,count\n");
            for (g, count) in c.by_genus.iter().enumerate() {
                s.push_str(&format!("{g},{count}\n"));
            }
            s.push_str(&format!("disconnected,{}\n", c.disconnected));
            s.push_str(&format!("total,{}\n", c.total));
            s
        }
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&census_json(&c)).unwrap()),
    })
}

/// One exact comparison in the battery; returns the failure description on
/// mismatch: (check name, left value with provenance, right value with
/// provenance).
type CheckFailure = (String, String, String);

fn cmd_crosscheck(
    nu: usize,
    genus: usize,
    max_order: usize,
    threads: usize,
    force: bool,
) -> Result<(String, bool), Error> {
    let mut report = String::new();
    let solve_order = max_order.max(5 * genus + nu + 3);
    let hierarchy = HierarchyState::solve(nu, solve_order, genus)?;
    let eg = EgState::solve(&hierarchy, &ResonancePolicy::table_only())?;

    let mut failure: Option<CheckFailure> = None;
    let mut check = |name: &str, lhs: String, rhs: String, report: &mut String| -> bool {
        if lhs == rhs {
            report.push_str(&format!("ok: {name}\n"));
            true
        } else {
            failure = Some((name.to_string(), lhs, rhs));
            false
        }
    };

    'battery: {
        // 1. Planar interface coefficients against the closed binomial form.
        let z0 = z0_series(nu, max_order);
        let c = Rational::from_integer(c_nu(nu));
        for j in 1..=max_order {
            let closed = equilibrium::zeta_j(nu, j)
                * todamap_core::rational::rational_pow(&c, j as i64);
            if !check(
                &format!("z_0 coefficient j={j} (recursion vs closed form)"),
                format_rational(z0.coeff(j)),
                format_rational(&closed),
                &mut report,
            ) {
                break 'battery;
            }
        }

        // 2. Planar map counts: closed form vs series route.
        for n in 1..=max_order {
            if !check(
                &format!("kappa_0({n}) (closed form vs series)"),
                equilibrium::kappa0(nu, n).to_string(),
                eg.kappa(0, n)?.to_string(),
                &mut report,
            ) {
                break 'battery;
            }
        }

        // 3. Both forcing routes for every solved genus.
        for g in 1..=genus {
            let dv = forcing_series(nu, &hierarchy.z[..g], g, solve_order, ForcingRoute::DV);
            let walk = forcing_series(nu, &hierarchy.z[..g], g, solve_order, ForcingRoute::WalkSum);
            if !check(
                &format!("forcing route equivalence g={g}"),
                format!("{:?}", dv),
                format!("{:?}", walk),
                &mut report,
            ) {
                break 'battery;
            }
        }

        // 4. Closed-form reconstruction round-trips.
        for g in 1..=genus {
            let rf = reconstruct_zg(&hierarchy, g)?;
            let back = rf.eval_series(&hierarchy.z[0])?;
            if !check(
                &format!("z_{g} reconstruction round-trip"),
                format!("{:?}", hierarchy.z[g]),
                format!("{:?}", back),
                &mut report,
            ) {
                break 'battery;
            }
        }

        // 5. Brute-force census against the solved series, both with and
        // without legs, at every vertex count that fits the budget cap.
        let cap: u64 = if force { oracle::DEFAULT_BUDGET } else { 2_000_000 };
        for legs in [0usize, 2] {
            for n in 1..=max_order {
                let task = OracleTask::new(nu, n, legs);
                if task.matching_count() > num::BigInt::from(cap) {
                    break;
                }
                let census = oracle::census(&task, threads, true)?;
                for g in 0..=genus {
                    let coeff = if legs == 0 {
                        eg.e_hat[g].coeff(n).clone()
                    } else {
                        hierarchy.z[g].coeff(n).clone()
                    };
                    let expect = coeff * Rational::from_integer(factorial(n));
                    let name = if legs == 0 {
                        format!("census vs n!·[s^{n}] e_{g}")
                    } else {
                        format!("two-leg census vs n!·[s^{n}] z_{g}")
                    };
                    if !check(
                        &name,
                        census.genus_count(g).to_string(),
                        format_rational(&expect),
                        &mut report,
                    ) {
                        break 'battery;
                    }
                }
            }
        }
    }

    match failure {
        None => {
            report.push_str("all checks passed\n");
            Ok((report, true))
        }
        Some((name, lhs, rhs)) => {
            report.push_str(&format!("FAIL: {name}\n  left:  {lhs}\n  right: {rhs}\n"));
            Ok((report, false))
        }
    }
}

fn cmd_two_time(nu: usize, nu2: usize, max_order: usize, format: Format) -> Result<String, Error> {
    let b = two_time_z0(nu, nu2, max_order);
    // Symmetry and restriction checks are part of the command contract.
    if b.swap_vars() != two_time_z0(nu2, nu, max_order) {
        return Err(Error::Consistency(
            "two-time series is not symmetric under swapping the couplings".into(),
        ));
    }
    for (var, single) in [(0usize, nu), (1, nu2)] {
        if b.slice(var) != z0_series(single, max_order) {
            return Err(Error::Consistency(format!(
                "two-time restriction to one coupling disagrees with z_0 for nu={single}"
            )));
        }
    }
    Ok(match format {
        Format::Table => {
            let mut s = format!("[s_1^i s_2^j] z_0 for nu={nu}, nu2={nu2}\n");
            for i in 0..=max_order {
                let row: Vec<String> =
                    (0..=max_order).map(|j| format_rational(b.coeff(i, j))).collect();
                s.push_str(&format!("{}\n", row.join(" ")));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("i,j,coefficient\n");
            for i in 0..=max_order {
                for j in 0..=max_order {
                    s.push_str(&format!("{i},{j},{}\n", format_rational(b.coeff(i, j))));
                }
            }
            s
        }
        Format::Json => {
            let rows: Vec<Vec<String>> = (0..=max_order)
                .map(|i| (0..=max_order).map(|j| format_rational(b.coeff(i, j))).collect())
                .collect();
            let v = json!({
                "schema": 1,
                "command": "two-time",
                "nu": nu,
                "nu2": nu2,
                "coefficients": rows,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
    })
}
