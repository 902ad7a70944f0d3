use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use bqfare::biquandle::{verify, FiniteBiquandle};
use bqfare::catalog;
use bqfare::diagram::{pd_to_diagram, LinkDiagram};
use bqfare::fare::{self, FareKind, FareMultiset, FareTable, PolyForm};
use bqfare::homset::enumerate_colorings;
use bqfare::zmodlinalg::CoeffGroup;
use bqfare::Error;

#[derive(Parser)]
#[command(name = "bqfare", version, about = "Biquandle colorings, fares and fare polynomials of oriented links")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: all cores); output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the biquandle axioms.
    Verify {
        #[arg(long)]
        biquandle: String,
    },
    /// Enumerate or count the fares of a biquandle.
    Fares {
        #[arg(long)]
        biquandle: String,
        #[arg(long, default_value_t = 2)]
        order: usize,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        group: String,
        #[arg(long)]
        count_only: bool,
    },
    /// Homset size, fare multiset and fare polynomials per link.
    Invariant {
        #[command(flatten)]
        eval: EvalArgs,
    },
    /// One row per link: colorings and fare polynomial.
    Table {
        #[command(flatten)]
        eval: EvalArgs,
    },
    /// Split a complete 2-fare into a through fare plus a crooked fare.
    Decompose {
        #[arg(long)]
        biquandle: String,
        #[arg(long)]
        fare: String,
    },
    /// List the colorings of each link.
    Homset {
        #[arg(long)]
        biquandle: String,
        #[arg(long = "link")]
        links: Vec<String>,
        #[arg(long)]
        count_only: bool,
    },
    /// Convert a PD code (file or `-` for stdin) to the crossing format.
    ConvertPd { input: String },
    /// Names of the built-in diagrams.
    Catalog,
}

#[derive(clap::Args)]
struct EvalArgs {
    #[arg(long)]
    biquandle: String,
    #[arg(long)]
    fare: String,
    /// Catalog name or diagram file; repeatable.
    #[arg(long = "link")]
    links: Vec<String>,
    /// Evaluate even if the table fails the fare axioms.
    #[arg(long)]
    unchecked: bool,
}

fn read(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {}", path, e)))
    }
}

fn load_biquandle(path: &str) -> Result<FiniteBiquandle, Error> {
    FiniteBiquandle::parse(&read(path)?)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn multiset_json(m: &FareMultiset) -> Value {
    Value::Array(m.entries.iter().map(|(g, k)| json!({ "value": g.0, "multiplicity": k })).collect())
}

struct Evaluated {
    name: String,
    colorings: usize,
    multiset: FareMultiset,
    multiplicative: Option<String>,
    additive: String,
}

fn evaluate(b: &FiniteBiquandle, phi: &FareTable, name: &str, d: &LinkDiagram, par: bool) -> Result<Evaluated, Error> {
    let multiset = if par { fare::fare_multiset_par(d, b, phi)? } else { fare::fare_multiset(d, b, phi)? };
    Ok(Evaluated {
        name: name.to_string(),
        colorings: multiset.cardinality(),
        multiplicative: render_poly(&multiset, PolyForm::Multiplicative)?,
        additive: fare::render_polynomial(&multiset, PolyForm::Additive)?,
        multiset,
    })
}

fn render_poly(m: &FareMultiset, form: PolyForm) -> Result<Option<String>, Error> {
    match fare::render_polynomial(m, form) {
        Ok(s) => Ok(Some(s)),
        Err(Error::Unsupported(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn eval_inputs(a: &EvalArgs) -> Result<(FiniteBiquandle, FareTable, Vec<(String, LinkDiagram)>), Error> {
    let b = load_biquandle(&a.biquandle)?;
    let report = verify(&b);
    if !report.valid() {
        return Err(Error::Semantic(format!("not a biquandle: {}", report.violations[0])));
    }
    let phi = FareTable::parse(&read(&a.fare)?)?;
    let bad = fare::axiom_violations(&b, &phi)?;
    if !bad.is_empty() && !a.unchecked {
        return Err(Error::Semantic(format!(
            "table is not a {} fare for this biquandle ({} failed equations; --unchecked evaluates anyway)",
            phi.kind.name(),
            bad.len()
        )));
    }
    let links = a.links.iter()
        .map(|l| Ok((l.clone(), catalog::resolve(l)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok((b, phi, links))
}

fn cmd_invariant(a: &EvalArgs, fmt: Format) -> Result<String, Error> {
    let (b, phi, links) = eval_inputs(a)?;
    // parallel across colorings, one link at a time
    let rows = links.iter()
        .map(|(n, d)| evaluate(&b, &phi, n, d, true))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(render_rows(&rows, fmt, true))
}

fn cmd_table(a: &EvalArgs, fmt: Format) -> Result<String, Error> {
    let (b, phi, links) = eval_inputs(a)?;
    // parallel across links
    let rows = links.par_iter()
        .map(|(n, d)| evaluate(&b, &phi, n, d, false))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(render_rows(&rows, fmt, false))
}

fn render_rows(rows: &[Evaluated], fmt: Format, detailed: bool) -> String {
    let mut out = String::new();
    match fmt {
        Format::Json => {
            let v: Vec<Value> = rows.iter()
                .map(|r| json!({
                    "link": r.name,
                    "colorings": r.colorings,
                    "multiset": multiset_json(&r.multiset),
                    "multiplicative": r.multiplicative,
                    "additive": r.additive,
                }))
                .collect();
            out = serde_json::to_string_pretty(&Value::Array(v)).unwrap() + "\n";
        }
        Format::Csv => {
            out += "link,colorings,multiset,multiplicative,additive\n";
            for r in rows {
                out += &format!(
                    "{},{},{},{},{}\n",
                    csv_field(&r.name),
                    r.colorings,
                    csv_field(&r.multiset.render()),
                    csv_field(r.multiplicative.as_deref().unwrap_or("")),
                    csv_field(&r.additive)
                );
            }
        }
        Format::Text if detailed => {
            for r in rows {
                out += &format!("{}\n", r.name);
                out += &format!("  colorings:      {}\n", r.colorings);
                out += &format!("  multiset:       {}\n", r.multiset);
                if let Some(m) = &r.multiplicative {
                    out += &format!("  multiplicative: {}\n", m);
                }
                out += &format!("  additive:       {}\n", r.additive);
            }
        }
        Format::Text => {
            let w = rows.iter().map(|r| r.name.len()).max().unwrap_or(0).max(4);
            for r in rows {
                let poly = r.multiplicative.as_deref().unwrap_or(&r.additive);
                out += &format!("{:<w$}  {:>6}  {}\n", r.name, r.colorings, poly, w = w);
            }
        }
    }
    out
}

fn cmd_verify(path: &str, fmt: Format) -> Result<(String, bool), Error> {
    let b = load_biquandle(path)?;
    let r = verify(&b);
    let out = match fmt {
        Format::Json => {
            let v: Vec<Value> = r.violations.iter()
                .map(|v| json!({ "axiom": v.axiom.label(), "witness": v.witness }))
                .collect();
            serde_json::to_string_pretty(&json!({ "size": b.size(), "valid": r.valid(), "violations": v })).unwrap() + "\n"
        }
        Format::Csv => {
            let mut s = String::from("axiom,witness\n");
            for v in &r.violations {
                let w: Vec<String> = v.witness.iter().map(|x| x.to_string()).collect();
                s += &format!("{},{}\n", v.axiom.label(), w.join(" "));
            }
            s
        }
        Format::Text => {
            if r.valid() {
                format!("valid biquandle of order {}\n", b.size())
            } else {
                let mut s = format!("invalid: {} violations\n", r.violations.len());
                for v in &r.violations {
                    s += &format!("  {}\n", v);
                }
                s
            }
        }
    };
    Ok((out, r.valid()))
}

fn cmd_fares(path: &str, order: usize, kind: &str, group: &str, count_only: bool, fmt: Format) -> Result<String, Error> {
    let b = load_biquandle(path)?;
    let kind: FareKind = kind.parse()?;
    let g: CoeffGroup = group.parse()?;
    let report = verify(&b);
    if !report.valid() {
        return Err(Error::Semantic(format!("not a biquandle: {}", report.violations[0])));
    }
    let fares = fare::enumerate_fares(&b, order, kind, &g)?;
    let count = fares.size();
    if count_only {
        return Ok(match fmt {
            Format::Json => json!({ "order": order, "kind": kind.name(), "group": g.to_string(), "count": count.to_string() }).to_string() + "\n",
            Format::Csv => format!("order,kind,group,count\n{},{},{},{}\n", order, kind.name(), g, count),
            Format::Text => format!("{}\n", count),
        });
    }
    let mut out = String::new();
    match fmt {
        Format::Json => {
            let v: Vec<Value> = fares.map(|f| Value::Array(f.values.iter().map(|x| json!(x.0)).collect())).collect();
            out = serde_json::to_string(&json!({ "order": order, "kind": kind.name(), "group": g.to_string(), "n": b.size(), "fares": v })).unwrap() + "\n";
        }
        Format::Csv => {
            for f in fares {
                let vals: Vec<String> = f.values.iter().map(|x| x.to_string()).collect();
                out += &csv_field(&vals.join(","));
                out += "\n";
            }
        }
        Format::Text => {
            for (i, f) in fares.enumerate() {
                if i > 0 {
                    out += "\n";
                }
                out += &f.to_text();
            }
        }
    }
    Ok(out)
}

fn cmd_decompose(bpath: &str, fpath: &str, fmt: Format) -> Result<String, Error> {
    let b = load_biquandle(bpath)?;
    let phi = FareTable::parse(&read(fpath)?)?;
    if !fare::is_fare(&b, &phi)? {
        return Err(Error::Semantic("table is not a complete fare for this biquandle".into()));
    }
    let split = fare::decompose(&b, &phi)?;
    Ok(match (fmt, split) {
        (Format::Json, s) => {
            let w = s.map(|(t, k)| json!({
                "through": t.values.iter().map(|x| x.0.clone()).collect::<Vec<_>>(),
                "crooked": k.values.iter().map(|x| x.0.clone()).collect::<Vec<_>>(),
            }));
            json!({ "decomposable": w.is_some(), "witness": w }).to_string() + "\n"
        }
        (Format::Csv, s) => format!("decomposable\n{}\n", s.is_some()),
        (Format::Text, Some((t, k))) => format!("decomposable\n\n{}\n{}", t.to_text(), k.to_text()),
        (Format::Text, None) => {
            "not decomposable: not in the sum of the through and crooked fare groups\n".to_string()
        }
    })
}

fn cmd_homset(bpath: &str, links: &[String], count_only: bool, fmt: Format) -> Result<String, Error> {
    let b = load_biquandle(bpath)?;
    let mut out = String::new();
    let mut js = Vec::new();
    if fmt == Format::Csv {
        out += if count_only { "link,colorings\n" } else { "link,coloring\n" };
    }
    for l in links {
        let d = catalog::resolve(l)?;
        let h = enumerate_colorings(&d, &b)?;
        let labels: Vec<usize> = (0..d.semiarc_count()).map(|i| d.label(i)).collect();
        let show = |c: &Vec<usize>| -> String {
            labels.iter().zip(c).map(|(l, x)| format!("{}:{}", l, x + 1)).collect::<Vec<_>>().join(" ")
        };
        match fmt {
            Format::Json => {
                let mut v = json!({ "link": l, "count": h.len() });
                if !count_only {
                    v["labels"] = json!(labels);
                    v["colorings"] = json!(h.colorings.iter().map(|c| c.iter().map(|x| x + 1).collect::<Vec<_>>()).collect::<Vec<_>>());
                }
                js.push(v);
            }
            Format::Csv if count_only => out += &format!("{},{}\n", csv_field(l), h.len()),
            Format::Csv => {
                for c in &h.colorings {
                    out += &format!("{},{}\n", csv_field(l), show(c));
                }
            }
            Format::Text => {
                out += &format!("{}: {} colorings\n", l, h.len());
                if !count_only {
                    for c in &h.colorings {
                        out += &format!("  {}\n", show(c));
                    }
                }
            }
        }
    }
    if fmt == Format::Json {
        out = serde_json::to_string_pretty(&Value::Array(js)).unwrap() + "\n";
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<(String, bool), Error> {
    let ok = |s: String| Ok((s, true));
    match &cli.cmd {
        Cmd::Verify { biquandle } => cmd_verify(biquandle, cli.format),
        Cmd::Fares { biquandle, order, kind, group, count_only } => {
            ok(cmd_fares(biquandle, *order, kind, group, *count_only, cli.format)?)
        }
        Cmd::Invariant { eval } => ok(cmd_invariant(eval, cli.format)?),
        Cmd::Table { eval } => ok(cmd_table(eval, cli.format)?),
        Cmd::Decompose { biquandle, fare } => ok(cmd_decompose(biquandle, fare, cli.format)?),
        Cmd::Homset { biquandle, links, count_only } => ok(cmd_homset(biquandle, links, *count_only, cli.format)?),
        Cmd::ConvertPd { input } => ok(pd_to_diagram(&read(input)?)?.to_text()),
        Cmd::Catalog => ok(catalog::list_catalog().join("\n") + "\n"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let result = match pool.build() {
        Ok(p) => p.install(|| run(&cli)),
        Err(e) => Err(Error::Input(e.to_string())),
    };
    match result {
        Ok((out, valid)) => {
            print!("{}", out);
            ExitCode::from(if valid { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("bqfare: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
