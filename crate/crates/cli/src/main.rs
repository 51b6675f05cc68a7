//! `bimlab`: load finite bimonoids, run the constructions, print tables and diagrams.
//!
//! Exit codes: 0 success or property true, 1 property false, 2 input or usage error.

use std::fmt::Write as _;
use std::process::ExitCode;

use bimlab_core::clauses::{
    eval_clause, eval_clause_involutive, is_linear, linearize, parse_atom, parse_clause, subreduct_oracle, translate_subreduct, Clause,
};
use bimlab_core::completion::{dm_completion_with, CompletionOptions, DEFAULT_SIZE_CAP};
use bimlab_core::constructions::{catalog, catalog_names};
use bimlab_core::format::{parse_algebra, to_json};
use bimlab_core::fractions::{
    find_transformation, fractions_normal, fractions_quotient, pi_table, roundtrip_checks, sigma_image, NormalFractions,
};
use bimlab_core::iso::find_isomorphism;
use bimlab_core::{InvolutiveAlgebra, OrderedAlgebra};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bimlab", version, about = "Finite bimonoid workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker count; output does not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args, Clone)]
struct Input {
    /// Algebra document (JSON).
    #[arg(conflicts_with = "catalog", required_unless_present = "catalog")]
    file: Option<String>,
    /// Catalog name instead of a file, e.g. L3, H5c, chain:4:3.
    #[arg(long)]
    catalog: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Out {
    Text,
    Dot,
    JsonTables,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms and report structural properties.
    Validate {
        #[command(flatten)]
        input: Input,
        /// `json-tables` re-emits the loaded algebra, `dot` its order.
        #[arg(long, value_enum, default_value_t = Out::Text)]
        out: Out,
    },
    /// Build the completion.
    Complete {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Out::Text)]
        out: Out,
        /// Maximum number of closed sets.
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        cap: usize,
    },
    /// Build the algebra of fractions.
    Fractions {
        #[command(flatten)]
        input: Input,
        /// Use normal pairs instead of the quotient.
        #[arg(long)]
        normal: bool,
        #[arg(long, value_enum, default_value_t = Out::Text)]
        out: Out,
    },
    /// Print the interior operator on the normal fractions and its image.
    Sigma(Input),
    /// Evaluate a universal clause.
    Clause {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        clause: String,
        /// Evaluate the translated clause semantics on the completion instead.
        #[arg(long)]
        oracle: bool,
    },
    /// Translate a linear positive clause into a bimonoidal clause.
    Translate {
        #[arg(long)]
        clause: String,
    },
    /// Split an inequality over join, product and 1 into linear inequalities.
    Linearize {
        #[arg(long)]
        ineq: String,
    },
    /// Check that the completion and the fractions are isomorphic.
    Compare(Input),
    /// List catalog names, or print one entry.
    Catalog {
        name: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
    /// Check the unit and counit round trips.
    Roundtrip(Input),
}

enum Failure {
    /// Property false; the message carries the witness.
    False(String),
    Input(String),
}

type Outcome = Result<String, Failure>;

fn input_err(e: impl ToString) -> Failure {
    Failure::Input(e.to_string())
}

fn load(input: &Input) -> Result<OrderedAlgebra, Failure> {
    match (&input.file, &input.catalog) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
            parse_algebra(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))
        }
        (None, Some(name)) => catalog(name).map_err(input_err),
        _ => Err(Failure::Input("give exactly one of FILE or --catalog".into())),
    }
}

/// Involutive structure when every element has a complement.
fn involutive(a: &OrderedAlgebra) -> Option<InvolutiveAlgebra> {
    a.make_involutive().ok()
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn validate(a: &OrderedAlgebra, out: Out) -> Outcome {
    a.validate().map_err(|e| Failure::False(format!("{}: {e}", a.name)))?;
    match out {
        Out::Dot => return Ok(a.poset.export_dot(None)),
        Out::JsonTables => return Ok(to_json(a) + "\n"),
        Out::Text => {}
    }
    let mut s = String::new();
    let _ = writeln!(s, "{}: {} elements, valid", a.name, a.size());
    let _ = writeln!(s, "lattice-ordered: {}", yes(a.is_lattice_ordered()));
    let _ = writeln!(s, "commutative: {}", yes(a.is_commutative()));
    let _ = writeln!(s, "residuated: {}", yes(a.has_mul() && a.is_residuated()));
    let _ = writeln!(s, "involutive: {}", yes(involutive(a).is_some_and(|i| i.validate().is_ok())));
    Ok(s)
}

fn table_text(a: &OrderedAlgebra, labels: &[String]) -> String {
    let n = a.size();
    let mut s = String::new();
    let _ = writeln!(s, "elements ({n}):");
    for (x, l) in labels.iter().enumerate() {
        match a.elem_name(x) {
            name if name == l => {
                let _ = writeln!(s, "  {l}");
            }
            name => {
                let _ = writeln!(s, "  {name} = {l}");
            }
        }
    }
    let _ = writeln!(s, "covers:");
    for (x, y) in a.poset.hasse_edges() {
        let _ = writeln!(s, "  {} < {}", labels[x], labels[y]);
    }
    s
}

fn render(inv: &InvolutiveAlgebra, labels: &[String], out: Out) -> String {
    let a = &inv.base;
    match out {
        Out::Dot => a.poset.export_dot(Some(labels)),
        Out::JsonTables => to_json(a) + "\n",
        Out::Text => {
            let mut s = table_text(a, labels);
            let _ = writeln!(s, "complement:");
            for x in 0..a.size() {
                let _ = writeln!(s, "  ~{} = {}", labels[x], labels[inv.comp(x)]);
            }
            s
        }
    }
}

fn complete(a: &OrderedAlgebra, out: Out, cap: usize) -> Outcome {
    let c = dm_completion_with(a, CompletionOptions { cap, ..Default::default() }).map_err(input_err)?;
    Ok(render(&c.algebra, &c.labels, out))
}

fn normal_fractions(a: &OrderedAlgebra) -> Result<NormalFractions, Failure> {
    let t = find_transformation(a).ok_or_else(|| Failure::False(format!("{}: no transformation functions", a.name)))?;
    fractions_normal(a, &t).map_err(|e| Failure::False(e.to_string()))
}

fn fractions(a: &OrderedAlgebra, normal: bool, out: Out) -> Outcome {
    let t = find_transformation(a).ok_or_else(|| Failure::False(format!("{}: no transformation functions", a.name)))?;
    let nm = |x: usize| a.elem_name(x).to_string();
    if !normal {
        let q = fractions_quotient(a, &t).map_err(|e| Failure::False(e.to_string()))?;
        let labels: Vec<String> = q.reps.iter().map(|&(x, y)| format!("[{}|{}]", nm(x), nm(y))).collect();
        return Ok(render(&q.algebra, &labels, out));
    }
    let nf = fractions_normal(a, &t).map_err(|e| Failure::False(e.to_string()))?;
    let labels: Vec<String> = nf.pairs.iter().map(|&(x, y)| format!("{}|{}", nm(x), nm(y))).collect();
    let mut s = render(&nf.algebra, &labels, out);
    if out == Out::Text {
        let table = pi_table(a, &t).map_err(input_err)?;
        let _ = writeln!(s, "projection onto normal pairs (row x, column y):");
        for (x, row) in table.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|&(p, q)| format!("{}|{}", nm(p), nm(q))).collect();
            let _ = writeln!(s, "  {}: {}", nm(x), cells.join(" "));
        }
    }
    Ok(s)
}

fn sigma(a: &OrderedAlgebra) -> Outcome {
    let nf = normal_fractions(a)?;
    let nm = |x: usize| a.elem_name(x);
    let label = |e: usize| format!("{}|{}", nm(nf.pairs[e].0), nm(nf.pairs[e].1));
    let mut s = String::new();
    for e in 0..nf.size() {
        let _ = writeln!(s, "sigma({}) = {}", label(e), label(nf.sigma[e]));
    }
    let (img, _) = sigma_image(&nf.algebra, &nf.sigma).map_err(input_err)?;
    let iso = find_isomorphism(&img, a).is_some();
    let _ = writeln!(s, "image: {} elements, isomorphic to input: {}", img.size(), yes(iso));
    if iso {
        Ok(s)
    } else {
        Err(Failure::False(s))
    }
}

fn witness_text(w: &[(String, String)]) -> String {
    w.iter().map(|(v, x)| format!("{v} = {x}")).collect::<Vec<_>>().join(", ")
}

fn clause(a: &OrderedAlgebra, text: &str, oracle: bool) -> Outcome {
    let c = parse_clause(text).map_err(input_err)?;
    if oracle {
        return if subreduct_oracle(a, &c).map_err(input_err)? {
            Ok(format!("{c}: holds in the completion\n"))
        } else {
            Err(Failure::False(format!("{c}: fails in the completion")))
        };
    }
    let outcome = match eval_clause(a, &c) {
        Ok(o) => o,
        Err(_) if text.contains('~') => {
            let inv = involutive(a).ok_or_else(|| Failure::Input(format!("{}: not involutive", a.name)))?;
            eval_clause_involutive(&inv, &c).map_err(input_err)?
        }
        Err(e) => return Err(input_err(e)),
    };
    match outcome.witness {
        None if outcome.holds => Ok(format!("{c}: holds\n")),
        w => {
            let w = w.unwrap_or_default();
            Err(Failure::False(format!("{c}: fails at {}", witness_text(&w))))
        }
    }
}

/// Non-linear single inequalities are linearized first; each linear piece is translated.
fn translate(text: &str) -> Outcome {
    let c = parse_clause(text).map_err(input_err)?;
    let pieces: Vec<Clause> = match (c.premises.as_slice(), c.conclusions.as_slice()) {
        ([], [atom]) if !is_linear(atom) => linearize(atom)
            .map_err(input_err)?
            .into_iter()
            .map(|a| Clause { premises: vec![], conclusions: vec![a] })
            .collect(),
        _ => vec![c],
    };
    let mut s = String::new();
    for p in &pieces {
        let _ = writeln!(s, "{}", translate_subreduct(p).map_err(input_err)?);
    }
    Ok(s)
}

fn linearize_cmd(text: &str) -> Outcome {
    let atom = parse_atom(text).map_err(input_err)?;
    let mut s = String::new();
    for a in linearize(&atom).map_err(input_err)? {
        let _ = writeln!(s, "{a}");
    }
    Ok(s)
}

fn compare(a: &OrderedAlgebra) -> Outcome {
    let c = dm_completion_with(a, CompletionOptions::default()).map_err(input_err)?;
    let t = find_transformation(a).ok_or_else(|| Failure::False(format!("{}: no transformation functions", a.name)))?;
    let q = fractions_quotient(a, &t).map_err(|e| Failure::False(e.to_string()))?;
    let line = format!("completion: {} elements, fractions: {} elements", c.size(), q.algebra.size());
    if find_isomorphism(c.base(), &q.algebra.base).is_some() {
        Ok(format!("{line}, isomorphic\n"))
    } else {
        Err(Failure::False(format!("{line}, not isomorphic")))
    }
}

fn catalog_cmd(name: Option<&str>, max_size: usize) -> Outcome {
    if let Some(name) = name {
        return Ok(to_json(&catalog(name).map_err(input_err)?) + "\n");
    }
    let mut s = String::new();
    for n in catalog_names(max_size) {
        let a = catalog(&n).map_err(input_err)?;
        let _ = writeln!(s, "{n}\t{}", a.size());
    }
    Ok(s)
}

fn roundtrip(a: &OrderedAlgebra) -> Outcome {
    let r = roundtrip_checks(a).map_err(|e| Failure::False(e.to_string()))?;
    let show = |r: &Result<(), String>| r.as_ref().map_or_else(|e| format!("FAIL ({e})"), |_| "ok".to_string());
    let s = format!("unit: {}\ncounit: {}\nidentity functor: {}\n", show(&r.unit), show(&r.counit), show(&r.identity_functor));
    if r.passed() {
        Ok(s)
    } else {
        Err(Failure::False(s))
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { input, out } => validate(&load(input)?, *out),
        Command::Complete { input, out, cap } => complete(&load(input)?, *out, *cap),
        Command::Fractions { input, normal, out } => fractions(&load(input)?, *normal, *out),
        Command::Sigma(i) => sigma(&load(i)?),
        Command::Clause { input, clause: text, oracle } => clause(&load(input)?, text, *oracle),
        Command::Translate { clause } => translate(clause),
        Command::Linearize { ineq } => linearize_cmd(ineq),
        Command::Compare(i) => compare(&load(i)?),
        Command::Catalog { name, max_size } => catalog_cmd(name.as_deref(), *max_size),
        Command::Roundtrip(i) => roundtrip(&load(i)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::False(msg)) => {
            println!("{}", msg.trim_end());
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
