//! The `qrdist` command line.
//!
//! Exit codes: 0 success or all identities passing, 1 a verified failure,
//! 2 a usage or domain error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::{classify, is_prime, CharKind, QuadCharacter};
use crate::charsum::{interval_sum, partial_sum, PartialSumProfile};
use crate::classnum::{
    class_number_forms, class_number_weighted, l_value_exact, l_value_series, unit_count,
    FormsOracle, CACHE_ENV,
};
use crate::counts::{count_brute, write_count_csv, CountRecord, SubsetSelector};
use crate::error::{Error, Result};
use crate::harness::{
    check_expectations, run_range_with_counts, Expectations, RunConfig, VerificationReport,
    DEFAULT_WITNESS_CAP,
};
use crate::ids::{parse_list, ClaimId, IdentityId};
use crate::ResidueTable;

#[derive(Debug, Parser)]
#[command(
    name = "qrdist",
    version,
    about = "Quadratic residues in arithmetic subsets mod p",
    after_help = "All primes must satisfy 3 <= p < 2^32."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Args)]
struct Output {
    /// Output format; defaults to table on a terminal and csv otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

impl Output {
    fn format(&self) -> Format {
        self.format
            .unwrap_or(if self.output.is_none() && io::stdout().is_terminal() {
                Format::Table
            } else {
                Format::Csv
            })
    }

    fn writer(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.output {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(io::stdout().lock()),
        })
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count residues and non-residues in S_k, the odd numbers, or S_2\S_4.
    Count {
        #[arg(long)]
        p: u64,
        /// Count the multiples of k.
        #[arg(long, conflicts_with_all = ["odds", "s2_minus_s4"])]
        k: Option<u64>,
        #[arg(long, conflicts_with = "s2_minus_s4")]
        odds: bool,
        #[arg(long)]
        s2_minus_s4: bool,
        /// Exponent in the normalization gap / p^(1/2 - eps).
        #[arg(long, default_value_t = 0.25)]
        eps: f64,
        #[command(flatten)]
        out: Output,
    },
    /// The character sum S(1, p/den), an interval sum, or the full prefix walk.
    Sum {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        den: u64,
        /// Inclusive interval [from, to] instead of the initial segment.
        #[arg(long, requires = "to")]
        from: Option<u64>,
        #[arg(long, requires = "from")]
        to: Option<u64>,
        /// Dump `m,chi,prefix` for m = 0..p-1 as CSV.
        #[arg(long)]
        dump: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Class number of a discriminant, with both oracles where available.
    Classnum {
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["p", "family"])]
        d: Option<i64>,
        #[arg(long, requires = "family")]
        p: Option<u64>,
        /// Character family: p, 3p, or 4p.
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// L(1, chi) exactly and by the truncated series.
    Lvalue {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value = "p")]
        family: String,
        /// Series length; defaults to max(10^5, modulus).
        #[arg(long)]
        terms: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Verify identities and adjudicate claims over the primes of [min, max).
    Verify {
        #[arg(long)]
        min: u64,
        #[arg(long)]
        max: u64,
        /// `all`, `none`, or a list such as B1,W2,PV.
        #[arg(long, default_value = "all")]
        identities: String,
        /// `all`, `none`, or a list such as T1.1-pos,C1.6.
        #[arg(long, default_value = "none")]
        claims: String,
        #[arg(long, value_delimiter = ',', default_values_t = [0.1, 0.25, 0.4])]
        eps: Vec<f64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Class-number cache file (`d,h` CSV).
        #[arg(long, env = CACHE_ENV)]
        cache: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
        witness_cap: usize,
        /// Claim expectations; a mismatch exits with status 1.
        #[arg(long)]
        expect: Option<PathBuf>,
        /// Also write every count record to this CSV file.
        #[arg(long)]
        counts_csv: Option<PathBuf>,
        /// Record wall time in the report.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        out: Output,
    },
}

/// Parses `args` (including the program name), runs the command, and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qrdist: {e}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Count {
            p,
            k,
            odds,
            s2_minus_s4,
            eps,
            out,
        } => {
            let sel = match (k, odds, s2_minus_s4) {
                (_, true, _) => SubsetSelector::Odds,
                (_, _, true) => SubsetSelector::S2MinusS4,
                (Some(k), _, _) => SubsetSelector::Multiples(k),
                (None, false, false) => {
                    return Err(Error::usage(
                        "choose a subset: --k K, --odds or --s2-minus-s4",
                    ))
                }
            };
            cmd_count(p, sel, eps, &out)
        }
        Command::Sum {
            p,
            den,
            from,
            to,
            dump,
            out,
        } => cmd_sum(p, den, from.zip(to), dump, &out),
        Command::Classnum { d, p, family, out } => cmd_classnum(d, p, family.as_deref(), &out),
        Command::Lvalue {
            p,
            family,
            terms,
            out,
        } => cmd_lvalue(p, &family, terms, &out),
        Command::Verify {
            min,
            max,
            identities,
            claims,
            eps,
            jobs,
            cache,
            witness_cap,
            expect,
            counts_csv,
            timing,
            out,
        } => {
            let config = RunConfig {
                identities: parse_list(&identities, &IdentityId::ALL)?,
                claims: parse_list(&claims, &ClaimId::ALL)?,
                eps,
                jobs,
                cache_path: cache,
                witness_cap,
                timing,
            };
            cmd_verify(min, max, &config, expect, counts_csv, &out)
        }
    }
}

fn write_json<T: Serialize>(out: &Output, value: &T) -> Result<()> {
    let mut w = out.writer()?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

fn write_table(out: &Output, rows: &[(&str, String)]) -> Result<()> {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut w = out.writer()?;
    for (k, v) in rows {
        writeln!(w, "{k:<width$}  {v}")?;
    }
    Ok(())
}

fn write_csv_rows(out: &Output, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out.writer()?);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_count(p: u64, sel: SubsetSelector, eps: f64, out: &Output) -> Result<i32> {
    let cp = classify(p)?;
    let rec: CountRecord = count_brute(&cp, sel)?.with_eps(eps)?;
    match out.format() {
        Format::Csv => write_count_csv(out.writer()?, [&rec])?,
        Format::Json => write_json(out, &rec)?,
        Format::Table => write_table(
            out,
            &[
                (
                    "p",
                    format!(
                        "{} (r4={}, r8={}, r12={})",
                        rec.p, rec.class4, rec.class8, rec.class12
                    ),
                ),
                ("subset", rec.selector.to_string()),
                ("size", rec.size.to_string()),
                ("Q", rec.q.to_string()),
                ("N", rec.n.to_string()),
                ("main term", rec.main_term.display_with_decimal()),
                ("gap", rec.gap.display_with_decimal()),
                (
                    "normalized gap",
                    format!("{} (eps = {eps})", rec.normalized_gap.unwrap_or_default()),
                ),
            ],
        )?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct SumOutput {
    p: u64,
    from: u64,
    to: u64,
    sum: i64,
}

fn cmd_sum(
    p: u64,
    den: u64,
    interval: Option<(u64, u64)>,
    dump: bool,
    out: &Output,
) -> Result<i32> {
    let cp = classify(p)?;
    if dump {
        let profile = PartialSumProfile::new(&ResidueTable::new(cp.p())?)?;
        profile.write_csv(out.writer()?)?;
        return Ok(0);
    }
    let (label, from, to, sum) = match interval {
        Some((m, n)) => (
            format!("sum_{{m={m}..{n}}} (m/{p})"),
            m,
            n,
            interval_sum(p, m, n)?,
        ),
        None => {
            let s = partial_sum(p, 1, den)?;
            (format!("S(1, {p}/{den})"), 1, p / den, s)
        }
    };
    match out.format() {
        Format::Csv => write_csv_rows(
            out,
            &["p", "from", "to", "sum"],
            &[vec![
                p.to_string(),
                from.to_string(),
                to.to_string(),
                sum.to_string(),
            ]],
        )?,
        Format::Json => write_json(out, &SumOutput { p, from, to, sum })?,
        Format::Table => write_table(out, &[(label.as_str(), sum.to_string())])?,
    }
    Ok(0)
}

/// The family character with discriminant `d`, if `d` is one of
/// `-p` (p = 3 mod 4), `-3p` or `-4p` (p = 1 mod 4).
fn family_character(d: i64) -> Option<QuadCharacter> {
    let n = d.checked_neg()?;
    if n <= 0 {
        return None;
    }
    let n = n as u64;
    let candidates = [
        (CharKind::ChiP, n, 1u64),
        (CharKind::Chi3P, n / 3, 3),
        (CharKind::Chi4P, n / 4, 4),
    ];
    candidates.into_iter().find_map(|(kind, p, factor)| {
        if p * factor != n || p < 3 || !is_prime(p) {
            return None;
        }
        let chi = QuadCharacter::new(kind, &classify(p).ok()?).ok()?;
        (chi.is_odd() && chi.discriminant() == d).then_some(chi)
    })
}

#[derive(Serialize)]
struct ClassnumOutput {
    d: i64,
    h: u64,
    w: u64,
    forms: u64,
    weighted: Option<u64>,
    agree: Option<bool>,
}

fn cmd_classnum(d: Option<i64>, p: Option<u64>, family: Option<&str>, out: &Output) -> Result<i32> {
    let (d, chi) = match (d, p, family) {
        (Some(d), _, _) => (d, family_character(d)),
        (None, Some(p), Some(f)) => {
            let chi = QuadCharacter::new(f.parse()?, &classify(p)?)?;
            if !chi.is_odd() {
                return Err(Error::domain(format!(
                    "{chi} is even (discriminant {}); class numbers here are imaginary only",
                    chi.discriminant()
                )));
            }
            (chi.discriminant(), Some(chi))
        }
        _ => return Err(Error::usage("give --d D, or --p P with --family")),
    };
    let forms = class_number_forms(d)?;
    let weighted = chi.map(|c| class_number_weighted(&c)).transpose()?;
    let res = ClassnumOutput {
        d,
        h: forms,
        w: unit_count(d),
        forms,
        weighted,
        agree: weighted.map(|w| w == forms),
    };
    match out.format() {
        Format::Csv => write_csv_rows(
            out,
            &["d", "h", "w", "forms", "weighted", "agree"],
            &[vec![
                d.to_string(),
                res.h.to_string(),
                res.w.to_string(),
                forms.to_string(),
                weighted.map(|w| w.to_string()).unwrap_or_default(),
                res.agree.map(|a| a.to_string()).unwrap_or_default(),
            ]],
        )?,
        Format::Json => write_json(out, &res)?,
        Format::Table => write_table(
            out,
            &[
                ("d", d.to_string()),
                ("h(d)", forms.to_string()),
                ("w", res.w.to_string()),
                ("reduced forms", forms.to_string()),
                (
                    "weighted sum",
                    weighted.map_or("n/a (not a family discriminant)".into(), |w| w.to_string()),
                ),
                ("agree", res.agree.map_or("n/a".into(), |a| a.to_string())),
            ],
        )?,
    }
    Ok(match res.agree {
        Some(false) => 1,
        _ => 0,
    })
}

#[derive(Serialize)]
struct LvalueOutput {
    character: String,
    d: i64,
    h: u64,
    w: u64,
    exact: f64,
    series: f64,
    terms: u64,
    tail_bound: f64,
    consistent: bool,
}

fn cmd_lvalue(p: u64, family: &str, terms: Option<u64>, out: &Output) -> Result<i32> {
    let chi = QuadCharacter::new(family.parse()?, &classify(p)?)?;
    let mut rec = l_value_exact(&chi, &FormsOracle)?;
    let terms = terms.unwrap_or(chi.modulus().max(100_000));
    let series = l_value_series(&chi, terms)?;
    rec.series = Some(series);
    let consistent = rec.series_consistent() == Some(true);
    let res = LvalueOutput {
        character: chi.to_string(),
        d: chi.discriminant(),
        h: rec.h,
        w: rec.w,
        exact: rec.exact_value,
        series: series.value,
        terms,
        tail_bound: series.tail_bound,
        consistent,
    };
    match out.format() {
        Format::Csv => write_csv_rows(
            out,
            &[
                "character",
                "d",
                "h",
                "w",
                "exact",
                "series",
                "terms",
                "tail_bound",
                "consistent",
            ],
            &[vec![
                res.character.clone(),
                res.d.to_string(),
                res.h.to_string(),
                res.w.to_string(),
                res.exact.to_string(),
                res.series.to_string(),
                terms.to_string(),
                res.tail_bound.to_string(),
                consistent.to_string(),
            ]],
        )?,
        Format::Json => write_json(out, &res)?,
        Format::Table => write_table(
            out,
            &[
                ("character", format!("{} (d = {})", res.character, res.d)),
                (
                    "L(1) exact",
                    format!(
                        "{} = pi*{}*(2/{})/sqrt({})",
                        res.exact,
                        res.h,
                        res.w,
                        res.d.unsigned_abs()
                    ),
                ),
                ("L(1) series", format!("{} ({} terms)", res.series, terms)),
                ("tail bound", res.tail_bound.to_string()),
                ("consistent", consistent.to_string()),
            ],
        )?,
    }
    Ok(if consistent { 0 } else { 1 })
}

fn summary_rows(report: &VerificationReport) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for s in &report.identities {
        rows.push(vec![
            "identity".into(),
            s.id.to_string(),
            s.applicable.to_string(),
            s.pass.to_string(),
            s.fail.to_string(),
        ]);
    }
    for s in &report.claims {
        rows.push(vec![
            "claim".into(),
            s.id.to_string(),
            s.applicable.to_string(),
            s.pass.to_string(),
            s.fail.to_string(),
        ]);
    }
    rows
}

fn write_verify_table(out: &Output, report: &VerificationReport) -> Result<()> {
    let mut w = out.writer()?;
    writeln!(
        w,
        "range [{}, {}): {} odd primes",
        report.range.lo, report.range.hi, report.timing.primes
    )?;
    writeln!(
        w,
        "{:<8} {:<16} {:>10} {:>10} {:>10}",
        "kind", "id", "applicable", "pass", "fail"
    )?;
    for row in summary_rows(report) {
        writeln!(
            w,
            "{:<8} {:<16} {:>10} {:>10} {:>10}",
            row[0], row[1], row[2], row[3], row[4]
        )?;
    }
    for s in &report.identities {
        for wit in &s.witnesses {
            writeln!(
                w,
                "  {} fails at p = {}: {} vs {}",
                s.id, wit.p, wit.lhs, wit.rhs
            )?;
        }
    }
    for s in &report.claims {
        for wit in &s.witnesses {
            writeln!(
                w,
                "  {} fails at p = {}: gap {}",
                s.id,
                wit.p,
                wit.gap.display_with_decimal()
            )?;
        }
    }
    Ok(())
}

fn cmd_verify(
    min: u64,
    max: u64,
    config: &RunConfig,
    expect: Option<PathBuf>,
    counts_csv: Option<PathBuf>,
    out: &Output,
) -> Result<i32> {
    if min >= max {
        return Err(Error::usage(format!(
            "--min {min} must be below --max {max}"
        )));
    }
    let expectations = expect.as_deref().map(Expectations::load).transpose()?;
    let (report, counts) = run_range_with_counts(min, max, config)?;
    if let Some(path) = counts_csv {
        write_count_csv(BufWriter::new(File::create(path)?), &counts)?;
    }
    match out.format() {
        Format::Json => {
            let mut w = out.writer()?;
            w.write_all(report.to_json()?.as_bytes())?;
        }
        Format::Csv => write_csv_rows(
            out,
            &["kind", "id", "applicable", "pass", "fail"],
            &summary_rows(&report),
        )?,
        Format::Table => write_verify_table(out, &report)?,
    }

    let mut code = 0;
    if report.identity_failures() > 0 {
        eprintln!("qrdist: {} identity failure(s)", report.identity_failures());
        code = 1;
    }
    if let Some(exp) = expectations {
        let mismatches = check_expectations(&report, &exp);
        for m in &mismatches {
            eprintln!("qrdist: expectation mismatch: {m}");
        }
        if !mismatches.is_empty() {
            code = 1;
        }
    }
    Ok(code)
}
