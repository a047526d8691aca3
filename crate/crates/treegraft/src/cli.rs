//! Command-line front end: generate counting sequences, verify their
//! recursions, compute the additive constant, prune labeled prefixes, and
//! run frequency analysis, over either explicit seed trees or named presets.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::frequency::{block_decomposition, frequency_seq, verify_block_transform, FreqError};
use crate::labeling::{
    boundary_label, leaf_count_seq, LabelScheme, LeafCountTable, Schedule,
};
use crate::presets::{all_presets, find_preset};
use crate::recurrence::{
    effective_shift, minimal_agreeing_prefix, nu_report, perturb_prefix_check,
    solve_nu_empirical, verify_chain_spine, verify_recursion_with_nu, verify_scheduled_with_nu,
    ChainSpineParams, VerificationReport,
};
use crate::skeleton::GraftConfig;
use crate::tree::OrderedTree;

#[derive(Parser)]
#[command(
    name = "treegraft",
    version,
    about = "Grafted infinite k-ary trees and their leaf-label counting sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the counting sequence R(1..=n)
    Gen(GenArgs),
    /// Check a recursion against the materialized sequence
    Verify(VerifyArgs),
    /// Compute the additive constant of the recursion several ways
    Nu(NuArgs),
    /// Prune the prefix holding labels 1..=n and test self-similarity
    Prune(PruneArgs),
    /// Frequency of each value, or its per-level block decomposition
    Freq(FreqArgs),
    /// List the built-in presets, or show one
    Preset(PresetArgs),
}

/// Where the tree and labeling come from.
#[derive(Args, Clone)]
struct SourceArgs {
    /// Seed tree as a parenthesis expression, e.g. "(((()))())"
    #[arg(long, value_name = "EXPR")]
    tree_expr: Option<String>,
    /// Read the seed tree expression from a file
    #[arg(long, value_name = "PATH", conflicts_with = "tree_expr")]
    tree_file: Option<PathBuf>,
    /// Use a named preset (see `treegraft preset`)
    #[arg(long, value_name = "NAME", conflicts_with_all = ["tree_expr", "tree_file"])]
    preset: Option<String>,
    /// Branching arity of the grafted tree [default: 2, or the preset's]
    #[arg(short = 'k', long = "arity", value_name = "K")]
    k: Option<u64>,
    /// Labels per regular node [default: 1, or the preset's]
    #[arg(short = 'j', long = "labels", value_name = "J")]
    j: Option<u64>,
    /// Constant supernode label count [default: 0, or the preset's]
    #[arg(short = 's', long = "super", value_name = "S")]
    s: Option<u64>,
    /// Extra-node label count [default: j, or the preset's]
    #[arg(long, value_name = "S0")]
    s0: Option<u64>,
    /// Supernode schedule, comma-separated with the last value repeating
    /// forever, e.g. "3,1,0"
    #[arg(long, value_name = "LIST", conflicts_with = "s")]
    schedule: Option<String>,
    /// Chain-spine labeling (2-node chain seed): the supernode takes --s1
    /// then -s forever, the spine child takes --j1 then --j2 forever, and
    /// the extra node takes one label
    #[arg(long)]
    spine: bool,
    /// First supernode count for --spine
    #[arg(long, value_name = "S1")]
    s1: Option<u64>,
    /// First spine-child count for --spine
    #[arg(long, value_name = "J1")]
    j1: Option<u64>,
    /// Later spine-child count for --spine
    #[arg(long, value_name = "J2")]
    j2: Option<u64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    /// One "n R(n)" pair per line
    Bfile,
    /// All values on one comma-separated line
    Csv,
    /// A JSON document with the configuration and values
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// How many labels to stream
    #[arg(short = 'n', long = "count", value_name = "N", default_value_t = 100)]
    n: u64,
    #[arg(long, value_enum, default_value_t = GenFormat::Bfile)]
    format: GenFormat,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    /// Constant-shift recursion (constant supernode counts)
    Theorem,
    /// Schedule-aware recursion (level-dependent shift)
    Schedule,
    /// Chain-spine recursion with derived effective parameters
    Fig7,
    /// Random early-prefix perturbations leave the tail recursion intact
    Perturb,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Check up to this index
    #[arg(short = 'n', long = "count", value_name = "N", default_value_t = 1000)]
    n: u64,
    #[arg(long, value_enum, default_value_t = VerifyMode::Theorem)]
    mode: VerifyMode,
    /// Override the additive constant instead of computing it
    #[arg(long, value_name = "NU", allow_hyphen_values = true)]
    force_nu: Option<i64>,
    /// Random seed for --mode perturb
    #[arg(long, value_name = "SEED", default_value_t = 0xC0FFEE)]
    seed: u64,
    /// Number of random perturbations for --mode perturb
    #[arg(long, value_name = "T", default_value_t = 5)]
    trials: u64,
    /// Also report the shortest true prefix that regenerates the table
    #[arg(long)]
    min_prefix: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct NuArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Table size for the empirical solve
    #[arg(short = 'n', long = "count", value_name = "N", default_value_t = 2000)]
    n: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct PruneArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Prune the prefix holding labels 1..=n
    #[arg(short = 'n', long = "at", value_name = "N")]
    n: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FreqMode {
    /// How often each value 1..=m is hit
    Freq,
    /// Per-level frequency blocks (requires j = 1)
    Blocks,
}

#[derive(Args)]
struct FreqArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = FreqMode::Freq)]
    mode: FreqMode,
    /// Largest value to count (freq mode)
    #[arg(short = 'm', long = "values", value_name = "M", default_value_t = 64)]
    m: u64,
    /// How many levels to decompose (blocks mode)
    #[arg(long, value_name = "L", default_value_t = 8)]
    levels: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct PresetArgs {
    /// Preset name; omit to list all
    name: Option<String>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

/// A resolved tree + labeling, with the chain parameters when applicable.
struct Resolved {
    config: GraftConfig,
    scheme: LabelScheme,
    chain: Option<ChainSpineParams>,
    label: String,
}

fn parse_schedule(list: &str) -> Result<Schedule, String> {
    let values: Vec<u64> = list
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| format!("bad schedule entry {p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match values.split_last() {
        Some((&tail, prefix)) => Ok(Schedule::new(prefix.to_vec(), tail)),
        None => Err("schedule must have at least one value".into()),
    }
}

fn resolve(src: &SourceArgs) -> Result<Resolved, String> {
    let preset = match &src.preset {
        Some(name) => Some(
            find_preset(name).ok_or_else(|| format!("unknown preset {name:?}; run `treegraft preset`"))?,
        ),
        None => None,
    };
    let (seed, label) = if let Some(p) = &preset {
        (p.config.seed().clone(), p.name.to_string())
    } else if let Some(expr) = &src.tree_expr {
        (OrderedTree::parse(expr).map_err(|e| format!("bad --tree-expr: {e}"))?, expr.clone())
    } else if let Some(path) = &src.tree_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        (OrderedTree::parse(&text).map_err(|e| format!("bad tree in {}: {e}", path.display()))?,
         path.display().to_string())
    } else {
        return Err("need one of --tree-expr, --tree-file, or --preset".into());
    };
    let k = src.k.or(preset.as_ref().map(|p| p.config.arity())).unwrap_or(2);
    let config = GraftConfig::new(seed, k).map_err(|e| e.to_string())?;

    let preset_chain = preset.as_ref().and_then(|p| p.chain);
    if src.spine || preset_chain.is_some() {
        let base = preset_chain.unwrap_or(ChainSpineParams { j: 1, s1: 0, s2: 0, j1: 1, j2: 1 });
        let j = src.j.unwrap_or(base.j);
        let params = ChainSpineParams {
            j,
            s1: src.s1.unwrap_or(base.s1),
            s2: src.s.unwrap_or(base.s2),
            j1: src.j1.unwrap_or(if preset_chain.is_some() { base.j1 } else { j }),
            j2: src.j2.unwrap_or(if preset_chain.is_some() { base.j2 } else { j }),
        };
        let scheme = params.scheme();
        scheme.validate_for(&config).map_err(|e| e.to_string())?;
        return Ok(Resolved { config, scheme, chain: Some(params), label });
    }

    let base = preset.as_ref().map(|p| p.scheme.clone());
    let untouched = src.j.is_none()
        && src.s.is_none()
        && src.s0.is_none()
        && src.schedule.is_none();
    let scheme = if untouched && base.is_some() {
        base.unwrap()
    } else {
        let bj = base.as_ref().map(|b| b.j());
        let j = src.j.or(bj).unwrap_or(1);
        let sched = if let Some(list) = &src.schedule {
            parse_schedule(list)?
        } else if let Some(s) = src.s {
            Schedule::constant(s)
        } else {
            base.as_ref().map(|b| b.supernode_schedule().clone()).unwrap_or(Schedule::constant(0))
        };
        let s0 = src
            .s0
            .or(base.as_ref().map(|b| b.extra_count()))
            .unwrap_or(j);
        LabelScheme::with_schedule(j, s0, sched)
    };
    scheme.validate_for(&config).map_err(|e| e.to_string())?;
    Ok(Resolved { config, scheme, chain: None, label })
}

fn config_json(r: &Resolved) -> serde_json::Value {
    json!({
        "source": r.label,
        "seed": r.config.seed().to_string(),
        "arity": r.config.arity(),
        "scheme": r.scheme,
    })
}

fn format_violations(report: &VerificationReport) -> String {
    let mut out = String::new();
    for v in report.violations.iter().take(5) {
        match v.rhs {
            Some(rhs) => {
                let _ = writeln!(out, "  n = {}: sequence {} but recursion {}", v.n, v.lhs, rhs);
            }
            None => {
                let _ = writeln!(out, "  n = {}: recursion argument out of range", v.n);
            }
        }
    }
    if report.violations.len() > 5 {
        let _ = writeln!(out, "  … {} more", report.violations.len() - 5);
    }
    out
}

fn cmd_gen(args: &GenArgs) -> Result<i32, String> {
    let r = resolve(&args.source)?;
    let table = leaf_count_seq(&r.config, &r.scheme, args.n).map_err(|e| e.to_string())?;
    match args.format {
        GenFormat::Bfile => {
            let mut out = String::new();
            for (idx, v) in table.values().iter().enumerate() {
                let _ = writeln!(out, "{} {}", idx + 1, v);
            }
            print!("{out}");
        }
        GenFormat::Csv => {
            let line: Vec<String> = table.values().iter().map(|v| v.to_string()).collect();
            println!("{}", line.join(","));
        }
        GenFormat::Json => {
            let doc = json!({
                "config": config_json(&r),
                "n_max": table.n_max(),
                "values": table.values(),
            });
            println!("{doc}");
            eprintln!("streamed {} labels of {}", table.n_max(), r.label);
        }
    }
    Ok(0)
}

fn table_for(r: &Resolved, n: u64) -> Result<LeafCountTable, String> {
    leaf_count_seq(&r.config, &r.scheme, n).map_err(|e| e.to_string())
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, String> {
    let r = resolve(&args.source)?;
    match args.mode {
        VerifyMode::Theorem | VerifyMode::Schedule => {
            let constant_form = args.mode == VerifyMode::Theorem;
            let report = if constant_form {
                verify_recursion_with_nu(&r.config, &r.scheme, args.n, args.force_nu)
            } else {
                verify_scheduled_with_nu(&r.config, &r.scheme, args.n, args.force_nu)
            }
            .map_err(|e| e.to_string())?;
            let nu = match args.force_nu {
                Some(v) => v,
                None => nu_report(&r.config, &r.scheme, 0).map_err(|e| e.to_string())?.nu_from_counts,
            };
            let min_prefix = if args.min_prefix && constant_form {
                Some(
                    minimal_agreeing_prefix(&r.config, &r.scheme, args.n)
                        .map_err(|e| e.to_string())?,
                )
            } else {
                None
            };
            let passed = report.passed;
            match args.format {
                ReportFormat::Json => {
                    let doc = json!({
                        "config": config_json(&r),
                        "mode": if constant_form { "theorem" } else { "schedule" },
                        "nu": nu,
                        "shift": if constant_form { Some(effective_shift(&r.scheme)) } else { None },
                        "report": report,
                        "min_prefix": min_prefix,
                    });
                    println!("{doc}");
                    eprintln!(
                        "{} over [{}, {}]",
                        if passed { "PASS" } else { "FAIL" },
                        report.checked_from,
                        report.checked_to
                    );
                }
                ReportFormat::Text => {
                    println!(
                        "recursion with nu = {nu} checked for n in [{}, {}]: {}",
                        report.checked_from,
                        report.checked_to,
                        if passed { "PASS" } else { "FAIL" }
                    );
                    if !passed {
                        print!("{}", format_violations(&report));
                    }
                    if let Some(len) = min_prefix {
                        println!("shortest regenerating prefix: {len} values");
                    }
                }
            }
            Ok(if passed { 0 } else { 1 })
        }
        VerifyMode::Fig7 => {
            let params = r
                .chain
                .ok_or("--mode fig7 needs --spine or a chain-spine preset")?;
            let report = verify_chain_spine(&params, args.n).map_err(|e| e.to_string())?;
            let passed = report.recursion.passed && report.ones_prefix_ok;
            match args.format {
                ReportFormat::Json => {
                    let doc = json!({
                        "config": config_json(&r),
                        "mode": "fig7",
                        "params": params,
                        "report": report,
                    });
                    println!("{doc}");
                    eprintln!("{}", if passed { "PASS" } else { "FAIL" });
                }
                ReportFormat::Text => {
                    println!(
                        "chain-spine recursion: nu_eff = {}, s_eff = {}",
                        report.nu_eff, report.s_eff
                    );
                    println!(
                        "starts with {} ones: {}",
                        params.s1 + 1,
                        if report.ones_prefix_ok { "yes" } else { "NO" }
                    );
                    println!(
                        "checked for n in [{}, {}]: {}",
                        report.recursion.checked_from,
                        report.recursion.checked_to,
                        if report.recursion.passed { "PASS" } else { "FAIL" }
                    );
                    if !report.recursion.passed {
                        print!("{}", format_violations(&report.recursion));
                    }
                }
            }
            Ok(if passed { 0 } else { 1 })
        }
        VerifyMode::Perturb => {
            let p = r.config.seed_height();
            let np = boundary_label(&r.config, &r.scheme, p);
            let len = np.saturating_sub(1) as usize;
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let mut trials = Vec::new();
            let mut all_passed = true;
            for t in 0..args.trials {
                let prefix: Vec<i64> =
                    (0..len).map(|_| rng.random_range(0..=np as i64)).collect();
                let report = perturb_prefix_check(&r.config, &r.scheme, &prefix, args.n)
                    .map_err(|e| e.to_string())?;
                all_passed &= report.passed;
                trials.push((t, prefix, report));
            }
            match args.format {
                ReportFormat::Json => {
                    let doc = json!({
                        "config": config_json(&r),
                        "mode": "perturb",
                        "replaced_prefix_len": len,
                        "trials": trials.iter().map(|(t, prefix, report)| json!({
                            "trial": t,
                            "prefix": prefix,
                            "report": report,
                        })).collect::<Vec<_>>(),
                        "passed": all_passed,
                    });
                    println!("{doc}");
                    eprintln!("{}", if all_passed { "PASS" } else { "FAIL" });
                }
                ReportFormat::Text => {
                    println!(
                        "replacing the {len} values below label {np}, keeping [{np}, N(p+1)]:"
                    );
                    for (t, _, report) in &trials {
                        println!(
                            "  trial {t}: tail over [{}, {}] {}",
                            report.checked_from,
                            report.checked_to,
                            if report.passed { "matches" } else { "DIVERGES" }
                        );
                    }
                    println!("{}", if all_passed { "PASS" } else { "FAIL" });
                }
            }
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn cmd_nu(args: &NuArgs) -> Result<i32, String> {
    let r = resolve(&args.source)?;
    if let Some(params) = r.chain {
        let table = table_for(&r, args.n)?;
        let threshold = (boundary_label(&r.config, &r.scheme, 2) as i64)
            .max(5 * params.j as i64 + params.s_eff() + params.s1 as i64)
            .max(0) as u64;
        let empirical = solve_nu_empirical(
            table.values(),
            2,
            params.j,
            params.s_eff(),
            threshold + 1,
            args.n,
        )
        .map_err(|e| e.to_string())?;
        let consistent = empirical == Some(params.nu_eff());
        match args.format {
            ReportFormat::Json => {
                let doc = json!({
                    "config": config_json(&r),
                    "nu_eff": params.nu_eff(),
                    "s_eff": params.s_eff(),
                    "nu_empirical": empirical,
                    "consistent": consistent,
                });
                println!("{doc}");
            }
            ReportFormat::Text => {
                println!("nu_eff      = {}", params.nu_eff());
                println!("s_eff       = {}", params.s_eff());
                match empirical {
                    Some(v) => println!("empirical   = {v}"),
                    None => println!("empirical   = (no single constant fits)"),
                }
                println!("consistent  = {consistent}");
            }
        }
        return Ok(if consistent { 0 } else { 1 });
    }
    let report = nu_report(&r.config, &r.scheme, args.n).map_err(|e| e.to_string())?;
    match args.format {
        ReportFormat::Json => {
            let doc = json!({
                "config": config_json(&r),
                "report": report,
            });
            println!("{doc}");
        }
        ReportFormat::Text => {
            println!("alpha       = {}", report.alpha);
            println!("beta        = {}", report.beta);
            println!("from counts = {}", report.nu_from_counts);
            println!("simplified  = {}", report.nu_simplified);
            match report.nu_empirical {
                Some(v) => println!("empirical   = {v}"),
                None => println!("empirical   = (table too short; raise -n)"),
            }
            println!("consistent  = {}", report.consistent);
        }
    }
    Ok(if report.consistent { 0 } else { 1 })
}

fn cmd_prune(args: &PruneArgs) -> Result<i32, String> {
    let r = resolve(&args.source)?;
    let table = table_for(&r, args.n)?;
    let outcome = table.prune(args.n).map_err(|e| e.to_string())?;
    let rn = table.r(args.n).map_err(|e| e.to_string())?;
    let complete = table.is_complete(args.n).map_err(|e| e.to_string())?;
    let delta = table.delta(args.n).map_err(|e| e.to_string())?;
    match args.format {
        ReportFormat::Json => {
            let doc = json!({
                "config": config_json(&r),
                "n": args.n,
                "r": rn,
                "complete": complete,
                "delta": delta,
                "outcome": outcome,
            });
            println!("{doc}");
            eprintln!(
                "{}",
                if outcome.isomorphic_to_prefix { "self-similar" } else { "NOT self-similar" }
            );
        }
        ReportFormat::Text => {
            println!("R({}) = {rn}; prefix {}complete (delta = {delta})", args.n,
                     if complete { "" } else { "in" });
            println!(
                "pruned: {} labels remain, {} of them on new leaves",
                outcome.pruned_label_count, outcome.pruned_leaf_labels
            );
            println!(
                "pruned tree equals the prefix with {} labels: {}",
                outcome.pruned_label_count,
                if outcome.isomorphic_to_prefix { "yes" } else { "NO" }
            );
        }
    }
    Ok(if outcome.isomorphic_to_prefix { 0 } else { 1 })
}

fn cmd_freq(args: &FreqArgs) -> Result<i32, String> {
    let r = resolve(&args.source)?;
    match args.mode {
        FreqMode::Freq => {
            // Grow the table until every requested count is final.
            let mut n = (args.m + 2) * 4 + 64;
            let freq = loop {
                let table = table_for(&r, n)?;
                match frequency_seq(&table, args.m) {
                    Ok(freq) => break freq,
                    Err(FreqError::RangeTooShort { .. }) if n < (1 << 26) => n *= 2,
                    Err(e) => return Err(e.to_string()),
                }
            };
            match args.format {
                ReportFormat::Json => {
                    let doc = json!({
                        "config": config_json(&r),
                        "m_max": args.m,
                        "frequencies": freq,
                    });
                    println!("{doc}");
                }
                ReportFormat::Text => {
                    for (idx, f) in freq.iter().enumerate() {
                        println!("{} {}", idx + 1, f);
                    }
                }
            }
            Ok(0)
        }
        FreqMode::Blocks => {
            let blocks = block_decomposition(&r.config, &r.scheme, args.levels)
                .map_err(|e| e.to_string())?;
            let transform = verify_block_transform(&r.config, &r.scheme, args.levels).ok();
            let passed = transform.as_ref().map_or(true, |t| t.passed);
            match args.format {
                ReportFormat::Json => {
                    let doc = json!({
                        "config": config_json(&r),
                        "levels": args.levels,
                        "blocks": blocks,
                        "transform": transform,
                    });
                    println!("{doc}");
                }
                ReportFormat::Text => {
                    for (idx, block) in blocks.raw.iter().enumerate() {
                        let line: Vec<String> = block.iter().map(|v| v.to_string()).collect();
                        println!("level {:>2}: {}", idx + 1, line.join(" "));
                    }
                    let concat: Vec<String> =
                        blocks.starred_concat().iter().map(|v| v.to_string()).collect();
                    println!("starred concatenation: {}", concat.join(" "));
                    if let Some(t) = &transform {
                        println!(
                            "level-step rule from level {}: {}",
                            t.checked_from,
                            if t.passed { "holds" } else { "FAILS" }
                        );
                    }
                }
            }
            Ok(if passed { 0 } else { 1 })
        }
    }
}

fn cmd_preset(args: &PresetArgs) -> Result<i32, String> {
    match &args.name {
        None => {
            match args.format {
                ReportFormat::Json => {
                    let doc: Vec<serde_json::Value> = all_presets()
                        .iter()
                        .map(|p| {
                            json!({
                                "name": p.name,
                                "description": p.description,
                                "seed": p.config.seed().to_string(),
                                "arity": p.config.arity(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(doc));
                }
                ReportFormat::Text => {
                    for p in all_presets() {
                        println!("{:<16} {}", p.name, p.description);
                    }
                }
            }
            Ok(0)
        }
        Some(name) => {
            let p = find_preset(name)
                .ok_or_else(|| format!("unknown preset {name:?}; run `treegraft preset`"))?;
            let doc = json!({
                "name": p.name,
                "description": p.description,
                "seed": p.config.seed().to_string(),
                "arity": p.config.arity(),
                "scheme": p.scheme,
                "chain": p.chain,
            });
            match args.format {
                ReportFormat::Json => println!("{doc}"),
                ReportFormat::Text => {
                    println!("{}: {}", p.name, p.description);
                    println!("  seed  {}", p.config.seed());
                    println!("  arity {}", p.config.arity());
                    println!("  scheme {}", serde_json::to_string(&p.scheme).unwrap());
                }
            }
            Ok(0)
        }
    }
}

/// Parses the process arguments, runs the requested command, and returns
/// the exit code: 0 on success, 1 when a check fails, 2 on usage errors.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Nu(args) => cmd_nu(args),
        Command::Prune(args) => cmd_prune(args),
        Command::Freq(args) => cmd_freq(args),
        Command::Preset(args) => cmd_preset(args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}
