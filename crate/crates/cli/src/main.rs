//! `siv`: command-line front end for `siv-core`.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 property violation
//! (the combinatorial decision disagrees with the polynomial oracle).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use siv_core::enumerate::{canonical_signings, complete_from_mask, graph_from_masks, pairs, signings};
use siv_core::{
    brute_force_completable, check_type2, classify, integer_spectrum, is_sigma_completable,
    laplacian_char_poly, parse_sg, parse_sk, plan_completion, quotient_decomposition, siv_oracle,
    x_set, y_set, CompletionError, IntPoly, Parity, SignedComplete, SignedGraph, SivVerdict,
};

const N_LIMIT_MAX: usize = 8;

#[derive(Parser)]
#[command(name = "siv", version, about = "Spectral integral variation of signed graphs")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial and integer spectrum of a `.sg` graph.
    Spectrum { graph: PathBuf },
    /// Decide whether adding `vw` gives integral variation, and confirm with the oracle.
    CheckSiv {
        graph: PathBuf,
        v: usize,
        w: usize,
        #[arg(long, value_enum, default_value = "even")]
        parity: ParityArg,
    },
    /// The edge sets X and Y of a `.sk` target.
    Xy { target: PathBuf },
    /// Quotient decomposition of a `.sk` target.
    Decompose { target: PathBuf },
    /// Certified addition sequence from a `.sg` start to a `.sk` target.
    Plan { start: PathBuf, target: PathBuf },
    /// Decide completability of a `.sg` start toward a `.sk` target.
    Completable {
        start: PathBuf,
        target: PathBuf,
        /// Cross-check against exhaustive search.
        #[arg(long)]
        brute_force: bool,
    },
    /// Compare the combinatorial decision with the oracle over many instances.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest vertex count, at most 8.
    #[arg(long, default_value_t = 4)]
    n_limit: usize,
    /// Random instances per vertex count; 0 enumerates everything.
    #[arg(long, default_value_t = 0)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// One signing per switching class.
    #[arg(long)]
    canonical: bool,
}

enum Failure {
    Usage(anyhow::Error),
    Violation(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure::Usage(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Spectrum { graph } => cmd_spectrum(&graph, cli.json),
        Command::CheckSiv { graph, v, w, parity } => cmd_check_siv(&graph, v, w, parity.into(), cli.json),
        Command::Xy { target } => cmd_xy(&target, cli.json),
        Command::Decompose { target } => cmd_decompose(&target, cli.json),
        Command::Plan { start, target } => cmd_plan(&start, &target, cli.json),
        Command::Completable { start, target, brute_force } => {
            cmd_completable(&start, &target, brute_force, cli.json)
        }
        Command::Enumerate(args) => cmd_enumerate(&args, cli.json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("property violated: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_sg(path: &Path) -> anyhow::Result<SignedGraph> {
    parse_sg(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_sk(path: &Path) -> anyhow::Result<SignedComplete> {
    parse_sk(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn print_json(v: &impl Serialize) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Integer spectrum as JSON, or `"non-integral"`.
fn spectrum_value(p: &IntPoly) -> Value {
    serde_json::to_value(integer_spectrum(p)).expect("serializable")
}

fn spectrum_text(p: &IntPoly) -> String {
    let s = integer_spectrum(p);
    if s.is_integral() {
        format!("spectrum {}", join(s.roots()))
    } else {
        format!(
            "non-integral (integer roots [{}], residual {})",
            join(s.roots()),
            s.residual()
        )
    }
}

fn cmd_spectrum(path: &Path, as_json: bool) -> CmdResult {
    let g = load_sg(path)?;
    let p = laplacian_char_poly(&g);
    if as_json {
        let s = integer_spectrum(&p);
        print_json(&json!({
            "char_poly": p.to_string(),
            "coefficients": p,
            "spectrum": spectrum_value(&p),
            "integer_roots": s.roots().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        }));
    } else {
        println!("{p}; {}", spectrum_text(&p));
    }
    Ok(())
}

fn verdict_text(v: &SivVerdict) -> String {
    match *v {
        SivVerdict::None => "none".into(),
        SivVerdict::Type1 { lambda } => format!("type1 lambda={lambda}"),
        SivVerdict::Type2 { sum, product } => format!("type2 s={sum} p={product}"),
    }
}

fn cmd_check_siv(path: &Path, v: usize, w: usize, parity: Parity, as_json: bool) -> CmdResult {
    let g = load_sg(path)?;
    let verdict = classify(&g, v, w, parity).map_err(|e| anyhow!("{e}"))?;
    let check = check_type2(&g, v, w, parity).map_err(|e| anyhow!("{e}"))?;
    let cert = siv_oracle(&g, v, w, parity).map_err(|e| anyhow!("{e}"))?;
    let agree = cert.verdict == verdict;
    if as_json {
        let mut out = serde_json::to_value(verdict).expect("serializable");
        let obj = out.as_object_mut().expect("tagged enum is an object");
        obj.insert("conditions".into(), serde_json::to_value(check.conditions).expect("serializable"));
        obj.insert("gap".into(), json!(check.gap));
        obj.insert("before".into(), spectrum_value(&cert.before));
        obj.insert("after".into(), spectrum_value(&cert.after));
        obj.insert("oracle".into(), json!(if agree { "agree" } else { "disagree" }));
        if !agree {
            obj.insert("oracle_verdict".into(), serde_json::to_value(cert.verdict).expect("serializable"));
        }
        print_json(&out);
    } else {
        println!("{}", verdict_text(&verdict));
        println!("before: {}; {}", cert.before, spectrum_text(&cert.before));
        println!("after:  {}; {}", cert.after, spectrum_text(&cert.after));
        println!("oracle: {}", if agree { "agree" } else { "disagree" });
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Violation(format!(
            "classify says {}, oracle says {}",
            verdict_text(&verdict),
            verdict_text(&cert.verdict)
        )))
    }
}

fn edge_list(edges: &[siv_core::Edge]) -> String {
    if edges.is_empty() {
        "-".into()
    } else {
        edges.iter().map(|e| format!("{}{}", e.ends().0, e.ends().1)).collect::<Vec<_>>().join(" ")
    }
}

fn completion(e: CompletionError) -> Failure {
    Failure::Usage(anyhow!("{e}"))
}

fn cmd_xy(path: &Path, as_json: bool) -> CmdResult {
    let t = load_sk(path)?;
    let x = x_set(&t).map_err(completion)?;
    let y = y_set(&t).map_err(completion)?;
    if as_json {
        print_json(&json!({ "x": x, "y": y }));
    } else {
        println!("X: {}", edge_list(&x));
        println!("Y: {}", edge_list(&y));
    }
    Ok(())
}

fn cmd_decompose(path: &Path, as_json: bool) -> CmdResult {
    let t = load_sk(path)?;
    let d = quotient_decomposition(&t).map_err(completion)?;
    if as_json {
        print_json(&json!({
            "k": d.k(),
            "parts": d.parts,
            "quotient_odd": d.quotient.odd_edges(),
            "switching_set": d.switching_set,
        }));
    } else {
        let parts: Vec<String> = d.parts.iter().map(|p| format!("{{{}}}", join(p))).collect();
        println!("k: {}", d.k());
        println!("parts: {}", parts.join(" "));
        println!("quotient odd: {}", edge_list(&d.quotient.odd_edges()));
        println!("switching set: {{{}}}", join(&d.switching_set));
    }
    Ok(())
}

fn cmd_plan(start: &Path, target: &Path, as_json: bool) -> CmdResult {
    let g = load_sg(start)?;
    let t = load_sk(target)?;
    let plan = match plan_completion(&g, &t) {
        Ok(p) => p,
        Err(CompletionError::NotCompletable) => {
            println!("not completable");
            return Ok(());
        }
        Err(CompletionError::Stuck(k)) => {
            return Err(Failure::Violation(format!(
                "start is completable but no certified step exists with {k} edges missing"
            )))
        }
        Err(e) => return Err(completion(e)),
    };
    if !plan.verify() {
        return Err(Failure::Violation("plan failed re-certification".into()));
    }
    for step in &plan.steps {
        if as_json {
            print_json(step);
        } else {
            let (u, v) = step.edge.ends();
            println!("add {u}{v} {}: {}", step.parity, verdict_text(&step.certificate.verdict));
        }
    }
    if !as_json && plan.steps.is_empty() {
        println!("already complete");
    }
    Ok(())
}

fn cmd_completable(start: &Path, target: &Path, brute: bool, as_json: bool) -> CmdResult {
    let g = load_sg(start)?;
    let t = load_sk(target)?;
    let decided = is_sigma_completable(&g, &t).map_err(completion)?;
    let searched = if brute {
        Some(brute_force_completable(&g, &t).map_err(completion)?)
    } else {
        None
    };
    if as_json {
        print_json(&json!({ "completable": decided, "brute_force": searched }));
    } else {
        println!("{}", if decided { "completable" } else { "not completable" });
        if let Some(b) = searched {
            println!("brute force: {}", if b { "completable" } else { "not completable" });
        }
    }
    match searched {
        Some(b) if b != decided => Err(Failure::Violation(format!(
            "decision {decided} but exhaustive search {b}"
        ))),
        _ => Ok(()),
    }
}

#[derive(Clone, Copy, Default, Serialize)]
struct Tally {
    instances: u64,
    type1: u64,
    type2: u64,
    none: u64,
    mismatches: u64,
    completability_checked: u64,
    completability_mismatches: u64,
}

impl Tally {
    fn merge(mut self, o: Tally) -> Tally {
        self.instances += o.instances;
        self.type1 += o.type1;
        self.type2 += o.type2;
        self.none += o.none;
        self.mismatches += o.mismatches;
        self.completability_checked += o.completability_checked;
        self.completability_mismatches += o.completability_mismatches;
        self
    }
}

/// Every non-adjacent pair of `g`, both parities.
fn siv_tally(g: &SignedGraph) -> Tally {
    let mut t = Tally::default();
    for e in g.non_edges() {
        let (v, w) = e.ends();
        for parity in [Parity::Even, Parity::Odd] {
            let decided = classify(g, v, w, parity).expect("non-adjacent pair");
            let oracle = siv_oracle(g, v, w, parity).expect("non-adjacent pair").verdict;
            t.instances += 1;
            match decided {
                SivVerdict::None => t.none += 1,
                SivVerdict::Type1 { .. } => t.type1 += 1,
                SivVerdict::Type2 { .. } => t.type2 += 1,
            }
            if decided != oracle {
                t.mismatches += 1;
            }
        }
    }
    t
}

fn completability_tally(g: &SignedGraph, target: &SignedComplete) -> Tally {
    let decided = is_sigma_completable(g, target).expect("same order");
    let searched = brute_force_completable(g, target).expect("small order");
    Tally {
        completability_checked: 1,
        completability_mismatches: u64::from(decided != searched),
        ..Tally::default()
    }
}

fn exhaustive_graphs(n: usize, canonical: bool) -> Vec<SignedGraph> {
    let m = pairs(n).len();
    (0u64..1 << m)
        .flat_map(|mask| -> Box<dyn Iterator<Item = SignedGraph>> {
            if canonical {
                Box::new(canonical_signings(n, mask))
            } else {
                Box::new(signings(n, mask))
            }
        })
        .collect()
}

fn cmd_enumerate(args: &EnumerateArgs, as_json: bool) -> CmdResult {
    if args.n_limit > N_LIMIT_MAX {
        return Err(Failure::Usage(anyhow!("--n-limit must be at most {N_LIMIT_MAX}")));
    }
    if args.samples == 0 && args.n_limit > 5 {
        return Err(Failure::Usage(anyhow!(
            "exhaustive enumeration is limited to n ≤ 5; pass --samples for larger n"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut rows = Vec::new();
    for n in 2..=args.n_limit {
        let m = pairs(n).len();
        let graphs: Vec<SignedGraph> = if args.samples == 0 {
            exhaustive_graphs(n, args.canonical)
        } else {
            (0..args.samples)
                .map(|_| graph_from_masks(n, rng.gen_range(0..1u64 << m), rng.gen_range(0..1u64 << m)))
                .collect()
        };
        let mut tally = graphs.par_iter().map(siv_tally).reduce(Tally::default, Tally::merge);

        if n >= 4 {
            let instances: Vec<(SignedGraph, SignedComplete)> = if args.samples == 0 && n == 4 {
                (0u64..1 << m)
                    .flat_map(|sigma| {
                        let t = complete_from_mask(n, sigma);
                        (0u64..1 << m).map(move |state| {
                            let missing: Vec<_> = pairs(n)
                                .into_iter()
                                .enumerate()
                                .filter(|(i, _)| state >> i & 1 == 0)
                                .map(|(_, e)| e)
                                .collect();
                            (t.without(&missing), t.clone())
                        })
                    })
                    .collect()
            } else if args.samples > 0 && n <= 6 {
                (0..args.samples)
                    .map(|_| {
                        let t = complete_from_mask(n, rng.gen_range(0..1u64 << m));
                        let state: u64 = rng.gen_range(0..1u64 << m);
                        let missing: Vec<_> = pairs(n)
                            .into_iter()
                            .enumerate()
                            .filter(|(i, _)| state >> i & 1 == 0)
                            .map(|(_, e)| e)
                            .collect();
                        (t.without(&missing), t)
                    })
                    .collect()
            } else {
                Vec::new()
            };
            let c = instances
                .par_iter()
                .map(|(g, t)| completability_tally(g, t))
                .reduce(Tally::default, Tally::merge);
            tally = tally.merge(c);
        }
        rows.push((n, tally));
    }

    let total = rows.iter().fold(Tally::default(), |acc, (_, t)| acc.merge(*t));
    if as_json {
        let table: Vec<Value> = rows
            .iter()
            .map(|(n, t)| {
                let mut v = serde_json::to_value(t).expect("serializable");
                v["n"] = json!(n);
                v
            })
            .collect();
        print_json(&json!({ "rows": table, "total": total }));
    } else {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>2} {:>10} {:>9} {:>9} {:>9} {:>10} {:>12} {:>10}",
            "n", "instances", "type1", "type2", "none", "mismatch", "completable?", "mismatch"
        );
        for (n, t) in &rows {
            let _ = writeln!(
                out,
                "{:>2} {:>10} {:>9} {:>9} {:>9} {:>10} {:>12} {:>10}",
                n,
                t.instances,
                t.type1,
                t.type2,
                t.none,
                t.mismatches,
                t.completability_checked,
                t.completability_mismatches
            );
        }
        let checked = total.instances + total.completability_checked;
        let bad = total.mismatches + total.completability_mismatches;
        let pct = if checked == 0 { 100.0 } else { 100.0 * (checked - bad) as f64 / checked as f64 };
        let _ = writeln!(out, "agreement {pct:.2}% ({bad} mismatches)");
        print!("{out}");
    }
    if total.mismatches + total.completability_mismatches > 0 {
        return Err(Failure::Violation(format!(
            "{} classification and {} completability mismatches",
            total.mismatches, total.completability_mismatches
        )));
    }
    Ok(())
}
