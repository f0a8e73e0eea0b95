//! Command line surface of the mahonian crate.
//!
//! Six subcommands bind the library modules: `stats` evaluates every
//! statistic of one word, `dist` prints the distribution polynomial of
//! a statistic assignment over a family, `map` applies one of the
//! statistic-transporting bijections, `check` runs registered identity
//! checks, `counterexample` searches a family grid for two statistics
//! with different distributions, and `euler` prints the boustrophedon
//! numbers.
//!
//! Word literals are bare digit strings for alphabets up to nine
//! (`212113333`) and comma-separated integers otherwise (`10,2,10,1`).
//! The `--r` flag takes a comma list and commands loop over it.
//!
//! Exit codes are stable: 0 on success (including `warn` check results),
//! 1 when an identity check fails, and 2 on usage or parse errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mahonian::bij::{foata_r, h_rden, phi_alpha, phi_qi, rawlings_r};
use mahonian::error::Error;
use mahonian::families::FamilySpec;
use mahonian::poly::MultiPoly;
use mahonian::stats::{
    alternating_runs, den_stats, descents, excedances, inv, inv_r, mak_mad, minima_maxima, rmaj,
    stat, StatName,
};
use mahonian::verify::{
    check_all, check_identity, distribution, euler_numbers, find_counterexample, CheckReport,
    CheckStatus, SearchDomain, StatAssignment,
};
use mahonian::word::{theta, theta_inv, Permutation, Word};

#[derive(Parser)]
#[command(
    name = "mahonian",
    version,
    about = "Statistics, bijections, and exhaustively checked identities on words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every statistic of one word.
    Stats {
        /// Word literal: digit string, or comma-separated letters.
        word: String,
        /// Comma list of r values for the r-parameterized statistics.
        #[arg(long, default_value = "1,2")]
        r: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Distribution polynomial of a statistic assignment over a family.
    Dist {
        /// Family descriptor, e.g. `words:alpha=3,1` or `deseq:n=3:S=1`.
        #[arg(long)]
        family: String,
        /// Statistic assignment, e.g. `inv:q` or `des:t,maj:q`.
        #[arg(long)]
        stats: String,
        /// Comma list of r values; one polynomial per r.
        #[arg(long, default_value = "1")]
        r: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply a statistic-transporting bijection to one word.
    Map {
        /// One of: foata_r, rawlings, hrden, phi, phi_qi, theta, theta_inv.
        #[arg(long)]
        bijection: String,
        /// Comma list of r values for the r-parameterized bijections.
        #[arg(long, default_value = "1")]
        r: String,
        /// Strictly increasing position bounds for `theta`.
        #[arg(long = "S")]
        s: Option<String>,
        /// Word literal to map.
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one registered identity check, or all of them.
    Check {
        /// Identity id from the registry, or `all`.
        target: String,
        /// Largest word/permutation length the grids reach.
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        /// Check r-parameterized statistics for every r in 1..=rmax.
        #[arg(long, default_value_t = 3)]
        rmax: u32,
        /// Worker threads for the cell grid (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search a family grid for two statistics with different distributions.
    Counterexample {
        /// Exactly two statistic names, comma separated, e.g. `stat,inv`.
        #[arg(long)]
        stats: String,
        /// One of: rlwmin-classes, des-families, sp-perm, stirling,
        /// quasi-increasing, words, perms.
        #[arg(long)]
        domain: String,
        /// Largest instance size searched.
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        /// Comma list of r values; the search runs once per r.
        #[arg(long, default_value = "1")]
        r: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the boustrophedon numbers E_0..E_nmax.
    Euler {
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Stats { word, r, format } => {
            let w = Word::parse_literal(&word)?;
            let r_set = parse_r_list(&r)?;
            cmd_stats(&w, &r_set, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Dist {
            family,
            stats,
            r,
            format,
        } => {
            let fam = FamilySpec::parse(&family)?;
            let r_set = parse_r_list(&r)?;
            cmd_dist(&fam, &stats, &r_set, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Map {
            bijection,
            r,
            s,
            word,
            format,
        } => {
            let w = Word::parse_literal(&word)?;
            let r_set = parse_r_list(&r)?;
            let s = match s {
                Some(text) => Some(parse_position_list(&text)?),
                None => None,
            };
            cmd_map(&bijection, &w, &r_set, s.as_deref(), format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            target,
            nmax,
            rmax,
            jobs,
            format,
        } => {
            if let Some(jobs) = jobs {
                rayon_jobs(jobs)?;
            }
            if rmax == 0 {
                return Err(Error::InvalidAssignment("rmax must be at least 1".into()));
            }
            let r_set: Vec<u32> = (1..=rmax).collect();
            cmd_check(&target, nmax, &r_set, format)
        }
        Command::Counterexample {
            stats,
            domain,
            nmax,
            r,
            format,
        } => {
            let domain = SearchDomain::parse(&domain)?;
            let r_set = parse_r_list(&r)?;
            cmd_counterexample(&stats, domain, nmax, &r_set, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Euler { nmax, format } => {
            let numbers = euler_numbers(nmax);
            match format {
                Format::Text => {
                    for (n, e) in numbers.iter().enumerate() {
                        println!("E_{n} = {e}");
                    }
                }
                Format::Json => {
                    let items: Vec<String> = numbers.iter().map(|e| e.to_string()).collect();
                    println!("{}", Value::from(items));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn rayon_jobs(jobs: usize) -> Result<(), Error> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .map_err(|e| Error::InvalidAssignment(format!("cannot configure {jobs} jobs: {e}")))
}

/// Parses the `--r` flag: a comma-separated list of positive parameters.
fn parse_r_list(text: &str) -> Result<Vec<u32>, Error> {
    let out: Vec<u32> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidLiteral(format!("bad r value `{t}`")))
        })
        .collect::<Result<_, _>>()?;
    if out.is_empty() || out.contains(&0) {
        return Err(Error::InvalidLiteral(
            "r values must be positive and nonempty".into(),
        ));
    }
    Ok(out)
}

fn parse_position_list(text: &str) -> Result<Vec<usize>, Error> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidLiteral(format!("bad position `{t}`")))
        })
        .collect()
}

fn fmt_set<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn cmd_stats(w: &Word, r_set: &[u32], format: Format) {
    let des = descents(w);
    let exc = excedances(w, 1);
    let den = den_stats(w, 1);
    let mm = mak_mad(w);
    let extract = minima_maxima(w);
    let perm = Permutation::from_word(w.clone()).ok();

    match format {
        Format::Text => {
            println!("word = {w}");
            println!("length = {}", w.len());
            if let Ok(alpha) = w.content() {
                println!("content = {alpha}");
            }
            println!("inv = {}", inv(w));
            println!("maj = {}", des.maj);
            println!("den = {}", den.rden);
            println!("mak = {}", mm.mak);
            println!("mad = {}", mm.mad);
            println!("stat = {}", stat(w));
            println!("des = {}", des.count);
            println!("Des = {}", fmt_set(&des.positions));
            println!("exc = {}", exc.count);
            println!("Exc = {}", fmt_set(&exc.positions));
            println!("rlmin = {}", extract.rlmin.len());
            println!("Rlmin = {}", fmt_set(&extract.rlmin));
            println!("rlwmin = {}", extract.rlwmin.len());
            println!("Rlwmin = {}", extract.rlwmin);
            println!("lrmin = {}", extract.lrmin_count);
            println!("lrmax = {}", extract.lrmax.len());
            println!("Lrmax = {}", fmt_set(&extract.lrmax));
            println!("PLrmax = {}", fmt_set(&extract.plrmax));
            for &r in r_set {
                let rd = rmaj(w, r);
                let re = excedances(w, r);
                let rde = den_stats(w, r);
                println!("inv_{r} = {}", inv_r(w, r));
                println!("{r}des = {}", rd.count);
                println!("{r}Des = {}", fmt_set(&rd.positions));
                println!("{r}maj = {}", rd.rmaj);
                println!("{r}exc = {}", re.count);
                println!("{r}Exc = {}", fmt_set(&re.positions));
                println!("{r}den = {}", rde.rden);
            }
            if let Some(pi) = &perm {
                println!("runs = {}", alternating_runs(pi));
                let inverse = pi.inverse().into_word();
                println!("inverse = {inverse}");
                for token in ["imaj", "imak", "imad", "iden", "istat"] {
                    let st = StatName::parse(token, 1).expect("known token");
                    println!("{token} = {}", st.eval(w).expect("word is a permutation"));
                }
                for &r in r_set {
                    for token in ["iinv_r", "irmaj", "irden"] {
                        let st = StatName::parse(token, r).expect("known token");
                        println!("{st} = {}", st.eval(w).expect("word is a permutation"));
                    }
                }
            }
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("word".into(), json!(w.to_string()));
            obj.insert("length".into(), json!(w.len()));
            obj.insert("inv".into(), json!(inv(w)));
            obj.insert("maj".into(), json!(des.maj));
            obj.insert("den".into(), json!(den.rden));
            obj.insert("mak".into(), json!(mm.mak));
            obj.insert("mad".into(), json!(mm.mad));
            obj.insert("stat".into(), json!(stat(w)));
            obj.insert("des".into(), json!(des.count));
            obj.insert("Des".into(), json!(des.positions));
            obj.insert("exc".into(), json!(exc.count));
            obj.insert("Exc".into(), json!(exc.positions));
            obj.insert("rlmin".into(), json!(extract.rlmin.len()));
            obj.insert("Rlmin".into(), json!(extract.rlmin));
            obj.insert("rlwmin".into(), json!(extract.rlwmin.len()));
            obj.insert("Rlwmin".into(), json!(extract.rlwmin.values()));
            obj.insert("lrmin".into(), json!(extract.lrmin_count));
            obj.insert("lrmax".into(), json!(extract.lrmax.len()));
            obj.insert("Lrmax".into(), json!(extract.lrmax));
            obj.insert("PLrmax".into(), json!(extract.plrmax));
            for &r in r_set {
                let rd = rmaj(w, r);
                let re = excedances(w, r);
                let rde = den_stats(w, r);
                obj.insert(format!("inv_{r}"), json!(inv_r(w, r)));
                obj.insert(format!("{r}des"), json!(rd.count));
                obj.insert(format!("{r}maj"), json!(rd.rmaj));
                obj.insert(format!("{r}exc"), json!(re.count));
                obj.insert(format!("{r}den"), json!(rde.rden));
            }
            if let Some(pi) = &perm {
                obj.insert("runs".into(), json!(alternating_runs(pi)));
                obj.insert("inverse".into(), json!(pi.inverse().into_word().to_string()));
                for token in ["imaj", "imak", "imad", "iden", "istat"] {
                    let st = StatName::parse(token, 1).expect("known token");
                    obj.insert(
                        token.into(),
                        json!(st.eval(w).expect("word is a permutation")),
                    );
                }
            }
            println!("{}", Value::Object(obj));
        }
    }
}

fn cmd_dist(
    fam: &FamilySpec,
    assignment_text: &str,
    r_set: &[u32],
    format: Format,
) -> Result<(), Error> {
    let mut rendered: Vec<(u32, MultiPoly)> = Vec::new();
    for &r in r_set {
        let sa = StatAssignment::parse(assignment_text, r)?;
        rendered.push((r, distribution(fam, &sa)?));
    }
    match format {
        Format::Text => {
            if rendered.len() == 1 {
                println!("{}", rendered[0].1);
            } else {
                for (r, poly) in &rendered {
                    println!("r={r}: {poly}");
                }
            }
        }
        Format::Json => {
            if rendered.len() == 1 {
                println!("{}", rendered[0].1.to_json());
            } else {
                let items: Vec<Value> = rendered
                    .iter()
                    .map(|(r, poly)| json!({"r": r, "poly": poly.to_json()}))
                    .collect();
                println!("{}", Value::from(items));
            }
        }
    }
    Ok(())
}

/// One before/after row of the transported-statistic table.
struct MapRow {
    before_label: String,
    before: String,
    after_label: String,
    after: String,
}

fn map_once(name: &str, w: &Word, r: u32, s: Option<&[usize]>) -> Result<(Word, Vec<MapRow>), Error> {
    let row = |bl: &str, b: String, al: &str, a: String| MapRow {
        before_label: bl.to_string(),
        before: b,
        after_label: al.to_string(),
        after: a,
    };
    let rlwmin_rows = |w: &Word, image: &Word| {
        row(
            "Rlwmin(input)",
            minima_maxima(w).rlwmin.to_string(),
            "Rlwmin(image)",
            minima_maxima(image).rlwmin.to_string(),
        )
    };
    Ok(match name {
        "foata_r" => {
            let image = foata_r(w, r);
            let rows = vec![
                row(
                    &format!("inv_{r}(input)"),
                    inv_r(w, r).to_string(),
                    "inv(image)",
                    inv(&image).to_string(),
                ),
                rlwmin_rows(w, &image),
            ];
            (image, rows)
        }
        "rawlings" => {
            let image = rawlings_r(w, r);
            let rows = vec![
                row(
                    "inv(input)",
                    inv(w).to_string(),
                    &format!("{r}maj(image)"),
                    rmaj(&image, r).rmaj.to_string(),
                ),
                rlwmin_rows(w, &image),
            ];
            (image, rows)
        }
        "hrden" => {
            let image = h_rden(w, r);
            let rows = vec![
                row(
                    &format!("{r}exc(input)"),
                    excedances(w, r).count.to_string(),
                    &format!("{r}des(image)"),
                    rmaj(&image, r).count.to_string(),
                ),
                row(
                    &format!("{r}den(input)"),
                    den_stats(w, r).rden.to_string(),
                    &format!("{r}maj(image)"),
                    rmaj(&image, r).rmaj.to_string(),
                ),
                rlwmin_rows(w, &image),
            ];
            (image, rows)
        }
        "phi" => {
            let image = phi_alpha(w);
            let mm_in = mak_mad(w);
            let mm_out = mak_mad(&image);
            let rows = vec![
                row(
                    "des(input)",
                    descents(w).count.to_string(),
                    "exc(image)",
                    excedances(&image, 1).count.to_string(),
                ),
                row(
                    "mak(input)",
                    mm_in.mak.to_string(),
                    "den(image)",
                    den_stats(&image, 1).rden.to_string(),
                ),
                row(
                    "mad(input)",
                    mm_in.mad.to_string(),
                    "inv(image)",
                    inv(&image).to_string(),
                ),
                row(
                    "mak(image)",
                    mm_out.mak.to_string(),
                    "mad(image)",
                    mm_out.mad.to_string(),
                ),
                rlwmin_rows(w, &image),
            ];
            (image, rows)
        }
        "phi_qi" => {
            let image = phi_qi(w)?;
            let rows = vec![
                row(
                    "PLrmax(input)",
                    fmt_set(&minima_maxima(w).plrmax),
                    "PLrmax(image)",
                    fmt_set(&minima_maxima(&image).plrmax),
                ),
                row(
                    "des(input)",
                    descents(w).count.to_string(),
                    "des(image)",
                    descents(&image).count.to_string(),
                ),
            ];
            (image, rows)
        }
        "theta" => {
            let pi = Permutation::from_word(w.clone())?;
            let bounds = s.ok_or_else(|| {
                Error::InvalidLiteral("`theta` needs position bounds via --S".into())
            })?;
            let image = theta(&pi, bounds)?;
            let rows = vec![row(
                "std(image)",
                image.std().into_word().to_string(),
                "inverse(input)",
                pi.inverse().into_word().to_string(),
            )];
            (image, rows)
        }
        "theta_inv" => {
            let image = theta_inv(w).into_word();
            let rows = vec![row(
                "image",
                image.to_string(),
                "inverse(std(input))",
                w.std().inverse().into_word().to_string(),
            )];
            (image, rows)
        }
        other => {
            return Err(Error::InvalidLiteral(format!(
                "unknown bijection `{other}` (expected foata_r, rawlings, hrden, phi, phi_qi, theta, theta_inv)"
            )))
        }
    })
}

fn cmd_map(
    name: &str,
    w: &Word,
    r_set: &[u32],
    s: Option<&[usize]>,
    format: Format,
) -> Result<(), Error> {
    // r-independent bijections print one block; the rest loop over r.
    let r_used: &[u32] = if matches!(name, "phi" | "phi_qi" | "theta" | "theta_inv") {
        &r_set[..1]
    } else {
        r_set
    };
    let mut blocks = Vec::new();
    for &r in r_used {
        blocks.push((r, map_once(name, w, r, s)?));
    }
    match format {
        Format::Text => {
            for (r, (image, rows)) in &blocks {
                if r_used.len() > 1 {
                    println!("r={r}:");
                }
                println!("{image}");
                for row in rows {
                    println!(
                        "  {} = {} | {} = {}",
                        row.before_label, row.before, row.after_label, row.after
                    );
                }
            }
        }
        Format::Json => {
            let items: Vec<Value> = blocks
                .iter()
                .map(|(r, (image, rows))| {
                    let table: Vec<Value> = rows
                        .iter()
                        .map(|row| {
                            let mut pair = serde_json::Map::new();
                            pair.insert(row.before_label.clone(), json!(row.before));
                            pair.insert(row.after_label.clone(), json!(row.after));
                            Value::Object(pair)
                        })
                        .collect();
                    json!({"r": r, "input": w.to_string(), "image": image.to_string(), "table": table})
                })
                .collect();
            if items.len() == 1 {
                println!("{}", items[0]);
            } else {
                println!("{}", Value::from(items));
            }
        }
    }
    Ok(())
}

fn print_report_text(report: &CheckReport) {
    let status = match report.status {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Warn => "WARN",
    };
    println!(
        "{}: {} (cells={}, {} ms)",
        report.identity,
        status,
        report.grid.len(),
        report.elapsed_ms
    );
    if let Some(witness) = &report.witness {
        let role = if report.status == CheckStatus::Pass {
            // A witness on a passing report is the difference a negative
            // claim asserts must exist.
            "difference"
        } else {
            "counterexample"
        };
        println!("  {role} on {}", witness.cell);
        println!("    {} = {}", witness.lhs_label, witness.lhs);
        println!("    {} = {}", witness.rhs_label, witness.rhs);
    }
}

fn cmd_check(target: &str, nmax: usize, r_set: &[u32], format: Format) -> Result<ExitCode, Error> {
    let reports: Vec<CheckReport> = if target == "all" {
        check_all(nmax, r_set)?
    } else {
        vec![check_identity(target, nmax, r_set)?]
    };
    let mut failed = false;
    for report in &reports {
        if report.status == CheckStatus::Fail {
            failed = true;
        }
        match format {
            Format::Text => print_report_text(report),
            Format::Json => println!(
                "{}",
                serde_json::to_string(report).expect("report serializes")
            ),
        }
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_counterexample(
    stats_text: &str,
    domain: SearchDomain,
    nmax: usize,
    r_set: &[u32],
    format: Format,
) -> Result<(), Error> {
    let tokens: Vec<&str> = stats_text.split(',').map(str::trim).collect();
    if tokens.len() != 2 {
        return Err(Error::InvalidAssignment(format!(
            "expected exactly two statistic names, got `{stats_text}`"
        )));
    }
    for &r in r_set {
        let a = StatName::parse(tokens[0], r)?;
        let b = StatName::parse(tokens[1], r)?;
        let witness = find_counterexample(&a, &b, domain, nmax)?;
        match format {
            Format::Text => {
                let prefix = if r_set.len() > 1 {
                    format!("r={r}: ")
                } else {
                    String::new()
                };
                match &witness {
                    Some(wit) => {
                        println!("{prefix}{a} and {b} differ on {}", wit.cell);
                        println!("  {} -> {}", wit.lhs_label, wit.lhs);
                        println!("  {} -> {}", wit.rhs_label, wit.rhs);
                    }
                    None => {
                        println!(
                            "{prefix}no difference between {a} and {b} on {domain} up to n={nmax}"
                        );
                    }
                }
            }
            Format::Json => {
                let value = json!({
                    "r": r,
                    "lhs": a.to_string(),
                    "rhs": b.to_string(),
                    "domain": domain.to_string(),
                    "nmax": nmax,
                    "witness": witness.as_ref().map(|wit| json!({
                        "cell": wit.cell,
                        "lhs_label": wit.lhs_label,
                        "lhs": wit.lhs,
                        "rhs_label": wit.rhs_label,
                        "rhs": wit.rhs,
                    })),
                });
                println!("{value}");
            }
        }
    }
    Ok(())
}
