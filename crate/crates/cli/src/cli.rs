//! Argument definitions and command dispatch.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use pendant_core::bounds::{audit_tau_k, bounds_report, BoundStatus, NordhausGaddumReport};
use pendant_core::gadgets::{
    gadget_amplifier, gadget_cllm, gadget_eulerian, gadget_hypergraph, GadgetInstance,
};
use pendant_core::oracles::{
    cllm_solve, directed_two_linkage, hypergraph_two_coloring, vertex_connectivity, Color,
};
use pendant_core::{
    solve_tau_sr, validate_packing, Digraph, GadgetError, GraphError, SpecError, TerminalSpec,
};
use serde::Serialize;

use crate::formats::{
    parse_certificate, parse_digraph, parse_hypergraph, parse_tripartite, write_digraph,
    write_provenance, ParseError, ProvenanceFile,
};
use crate::generate::{generate, Family, GenError, GenParams};
use crate::parallel;
use crate::report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONTRACT: i32 = 3;

/// Largest order `solve`, `tau-k` and `ng-check` accept without `--allow-large`.
pub const GUARDRAIL_N: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "pendant", version, about = "Pendant Steiner tree packing in digraphs")]
pub struct Cli {
    /// Print a JSON report instead of labelled lines.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximum packing for one terminal set and root.
    Solve(SolveArgs),
    /// Minimum packing value over all terminal sets of size k.
    TauK(TauKArgs),
    /// Closed-form upper bounds, optionally audited against tau_k.
    Bounds(BoundsArgs),
    /// Sum and product inequalities for a digraph and its complement.
    NgCheck(TauKArgs),
    /// Build a reduction instance.
    #[command(subcommand)]
    Gadget(GadgetCommand),
    /// Check a packing certificate against a digraph.
    Verify(VerifyArgs),
    /// Run one of the exact reference oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Generate a seeded instance.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Root first, e.g. `0,3,4`.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub terminals: Vec<usize>,
    /// Stop as soon as this many trees are packed.
    #[arg(long)]
    pub target: Option<usize>,
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct TauKArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    /// Worker threads for the per-spec fan-out.
    #[arg(long, env = "PENDANT_THREADS", default_value_t = 1)]
    pub threads: usize,
    /// Report the value of every terminal set and root.
    #[arg(long)]
    pub per_spec: bool,
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub per_spec: bool,
    /// Also solve tau_k and classify each bound as tight, slack or violated.
    #[arg(long)]
    pub audit: bool,
    #[arg(long, env = "PENDANT_THREADS", default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Subcommand)]
pub enum GadgetCommand {
    /// From a directed 2-linkage instance on an Eulerian digraph.
    Eulerian {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        s1: usize,
        #[arg(long)]
        s2: usize,
        #[arg(long)]
        t1: usize,
        #[arg(long)]
        t2: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        ell: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// From a balanced tripartite graph.
    Cllm {
        #[arg(long)]
        source: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// From a hypergraph.
    Hypergraph {
        #[arg(long)]
        source: PathBuf,
        #[arg(long, default_value_t = 2)]
        ell: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Gap amplifier from a directed 2-linkage instance.
    Amplifier {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        x1: usize,
        #[arg(long)]
        y1: usize,
        #[arg(long)]
        x2: usize,
        #[arg(long)]
        y2: usize,
        /// Number of rows.
        #[arg(long = "rows", short = 'N')]
        rows: usize,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Args)]
pub struct OutArgs {
    /// Write `<prefix>.dig` and `<prefix>.prov` instead of printing them.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub certificate: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Two vertex-disjoint paths s1 -> t1 and s2 -> t2.
    #[command(name = "2linkage")]
    TwoLinkage {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        s1: usize,
        #[arg(long)]
        t1: usize,
        #[arg(long)]
        s2: usize,
        #[arg(long)]
        t2: usize,
    },
    /// Red/blue coloring with no monochromatic edge.
    #[command(name = "2color")]
    TwoColor {
        #[arg(long)]
        hypergraph: PathBuf,
    },
    /// Partition into connected triples, one vertex per part.
    Cllm {
        #[arg(long)]
        tripartite: PathBuf,
    },
    /// Vertex-strong connectivity.
    Kappa {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Gen(#[from] GenError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Io { .. } | CliError::Usage(_) | CliError::Gen(_) => EXIT_USAGE,
            CliError::Spec(_) | CliError::Gadget(_) | CliError::Graph(_) => EXIT_CONTRACT,
        }
    }
}

/// What a command printed and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parsed<T>(path: &Path, f: impl Fn(&str) -> Result<T, ParseError>) -> Result<T, CliError> {
    f(&read(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn load_digraph(path: &Path) -> Result<Digraph, CliError> {
    parsed(path, parse_digraph)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn guard(n: usize, allow: bool) -> Result<(), CliError> {
    if n > GUARDRAIL_N && !allow {
        return Err(CliError::Usage(format!(
            "digraph has {n} vertices; exact search above {GUARDRAIL_N} can take very long, pass --allow-large to proceed"
        )));
    }
    Ok(())
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Solve(a) => solve(a, cli.json),
        Command::TauK(a) => tau_k(a, cli.json),
        Command::Bounds(a) => bounds(a, cli.json),
        Command::NgCheck(a) => ng_check(a, cli.json),
        Command::Gadget(g) => gadget(g, cli.json),
        Command::Verify(a) => verify(a, cli.json),
        Command::Oracle(o) => oracle(o, cli.json),
        Command::Gen(a) => gen(a, cli.json),
    }
}

fn solve(a: &SolveArgs, as_json: bool) -> Result<Outcome, CliError> {
    let d = load_digraph(&a.graph)?;
    guard(d.order(), a.allow_large)?;
    let Some(&root) = a.terminals.first() else {
        return Err(CliError::Usage("--terminals needs the root and at least one more vertex".into()));
    };
    let spec = TerminalSpec::new(d.order(), root, &a.terminals)?;
    let res = solve_tau_sr(&d, &spec, a.target);
    let report = SolveReport::new(d.order(), a.target, &res);
    if as_json {
        return Ok(Outcome::ok(json(&report)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "terminals: {}", join(&report.terminals));
    let relation = if report.exact { "=" } else { ">=" };
    let _ = writeln!(s, "tau_S_r {relation} {}", report.value);
    let _ = writeln!(s, "upper bound: {}", report.upper_bound);
    let _ = writeln!(
        s,
        "trees enumerated: {}, candidate sets: {}, search nodes: {}",
        report.trees_enumerated, report.candidate_sets, report.bnb_nodes
    );
    s.push_str("certificate:\n");
    s.push_str(&report.certificate);
    Ok(Outcome::ok(s))
}

fn tau_k(a: &TauKArgs, as_json: bool) -> Result<Outcome, CliError> {
    let d = load_digraph(&a.graph)?;
    guard(d.order(), a.allow_large)?;
    let res = if a.per_spec {
        parallel::tau_k_detailed(&d, a.k, a.threads)?
    } else {
        parallel::tau_k(&d, a.k, a.threads)?
    };
    let report = TauKReport::new(d.order(), a.k, &res);
    if as_json {
        return Ok(Outcome::ok(json(&report)));
    }
    let mut s = String::new();
    let _ = writeln!(s, "tau_{} = {}", a.k, report.value);
    let _ = writeln!(s, "witness (root first): {}", join(&report.witness));
    if let Some(per) = &report.per_spec {
        for sv in per {
            let _ = writeln!(s, "  {} -> {}", join(&sv.terminals), sv.value);
        }
    }
    s.push_str("certificate:\n");
    s.push_str(&report.certificate);
    Ok(Outcome::ok(s))
}

fn bounds(a: &BoundsArgs, as_json: bool) -> Result<Outcome, CliError> {
    let d = load_digraph(&a.graph)?;
    let rep = bounds_report(&d, a.k, a.per_spec)?;
    let (tau, audit) = if a.audit {
        guard(d.order(), false)?;
        let t = parallel::tau_k(&d, a.k, a.threads)?.value;
        (Some(t), audit_tau_k(&rep, t))
    } else {
        (None, Vec::new())
    };
    let violated = audit.iter().any(|c| c.status == BoundStatus::Violated);
    let out = BoundsJson::new(&rep, tau, &audit);
    let stdout = if as_json {
        json(&out)
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "n: {}", out.n);
        let _ = writeln!(s, "k: {}", out.k);
        let _ = writeln!(s, "order bound (n-k): {}", out.order_bound);
        let _ = writeln!(s, "semidegree bound: {}", out.semidegree_bound);
        let _ = writeln!(s, "zero rule fires: {}", out.zero_rule_fires);
        let _ = writeln!(s, "cut bound: {}", out.cut_bound);
        if let Some(per) = &out.per_spec_cut {
            for sv in per {
                let _ = writeln!(s, "  cut {} -> {}", join(&sv.terminals), sv.value);
            }
        }
        if let Some(t) = tau {
            let _ = writeln!(s, "tau_k: {t}");
        }
        for c in &out.audit {
            let _ = writeln!(s, "  {} bound {}: {}", c.bound, c.value, c.status);
        }
        s
    };
    let code = if violated { EXIT_CONTRACT } else { EXIT_OK };
    Ok(Outcome { code, stdout })
}

fn ng_check(a: &TauKArgs, as_json: bool) -> Result<Outcome, CliError> {
    let d = load_digraph(&a.graph)?;
    guard(d.order(), a.allow_large)?;
    if a.k < 3 || a.k > d.order() {
        return Err(SpecError::BadK { k: a.k, n: d.order() }.into());
    }
    let tau = parallel::tau_k(&d, a.k, a.threads)?.value;
    let tau_c = parallel::tau_k(&d.complement(), a.k, a.threads)?.value;
    let r = NordhausGaddumReport::from_values(d.order(), a.k, tau, tau_c);
    let out = NgJson::from(&r);
    let stdout = if as_json {
        json(&out)
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "tau_k(D) = {}, tau_k(D^c) = {}", r.tau, r.tau_complement);
        let _ = writeln!(s, "sum = {} (bound {}): {}", r.sum, r.sum_upper, if r.sum_ok { "ok" } else { "VIOLATED" });
        let _ = writeln!(
            s,
            "product = {} (bound {}): {}",
            r.product,
            r.product_upper,
            if r.product_ok { "ok" } else { "VIOLATED" }
        );
        let _ = writeln!(s, "sum attains upper: {}, sum attains 0: {}", r.sum_attains_upper, r.sum_attains_zero);
        let _ = writeln!(
            s,
            "product attains upper: {}, product attains 0: {}",
            r.product_attains_upper, r.product_attains_zero
        );
        s
    };
    let code = if r.holds() { EXIT_OK } else { EXIT_CONTRACT };
    Ok(Outcome { code, stdout })
}

fn gadget(g: &GadgetCommand, as_json: bool) -> Result<Outcome, CliError> {
    let (kind, inst, out): (&'static str, GadgetInstance, &OutArgs) = match g {
        GadgetCommand::Eulerian { source, s1, s2, t1, t2, k, ell, out } => {
            let d = load_digraph(source)?;
            ("eulerian", gadget_eulerian(&d, *s1, *s2, *t1, *t2, *k, *ell)?, out)
        }
        GadgetCommand::Cllm { source, k, out } => {
            let t = parsed(source, parse_tripartite)?;
            ("cllm", gadget_cllm(&t, *k)?, out)
        }
        GadgetCommand::Hypergraph { source, ell, out } => {
            let h = parsed(source, parse_hypergraph)?;
            ("hypergraph", gadget_hypergraph(&h, *ell)?, out)
        }
        GadgetCommand::Amplifier { source, x1, y1, x2, y2, rows, out } => {
            let d = load_digraph(source)?;
            ("amplifier", gadget_amplifier(&d, *x1, *y1, *x2, *y2, *rows)?, out)
        }
    };
    let dig = write_digraph(&inst.digraph, &[format!("{kind} gadget: {}", inst.provenance.source)]);
    let prov = write_provenance(&ProvenanceFile::new(&inst.provenance, &inst.spec));
    if let Some(prefix) = &out.out {
        write(&prefix.with_extension("dig"), &dig)?;
        write(&prefix.with_extension("prov"), &prov)?;
    }
    let report = GadgetJson {
        command: "gadget",
        kind,
        source: inst.provenance.source.clone(),
        notes: inst.provenance.notes.clone(),
        n: inst.digraph.order(),
        m: inst.digraph.size(),
        k: inst.spec.k(),
        terminals: inst.spec.root_first(),
        digraph: dig.clone(),
        provenance: prov.clone(),
    };
    if as_json {
        return Ok(Outcome::ok(json(&report)));
    }
    let mut s = String::new();
    for note in &report.notes {
        let _ = writeln!(s, "# note: {note}");
    }
    if out.out.is_some() {
        let _ = writeln!(s, "{kind} gadget: {} vertices, {} arcs, k = {}", report.n, report.m, report.k);
        let _ = writeln!(s, "terminals (root first): {}", join(&report.terminals));
    } else {
        s.push_str(&dig);
        s.push_str(&prov);
    }
    Ok(Outcome::ok(s))
}

fn verify(a: &VerifyArgs, as_json: bool) -> Result<Outcome, CliError> {
    let d = load_digraph(&a.graph)?;
    let raw = parsed(&a.certificate, parse_certificate)?;
    let n = d.order();
    let trees = raw.trees.len();
    let failure: Option<(String, String)> = if raw.trees.iter().flatten().any(|&(u, v)| u >= n || v >= n) {
        Some(("arc-not-in-host".into(), format!("an arc leaves the vertex range 0..{n}")))
    } else {
        match raw.into_packing(n) {
            Err(e) => Some(("bad-spec".into(), e.to_string())),
            Ok(p) => validate_packing(&d, &p).err().map(|e| (e.code().to_string(), e.to_string())),
        }
    };
    let report = VerifyJson {
        command: "verify",
        valid: failure.is_none(),
        trees,
        reason: failure.as_ref().map(|f| f.0.clone()),
        detail: failure.as_ref().map(|f| f.1.clone()),
    };
    let stdout = if as_json {
        json(&report)
    } else {
        match &failure {
            None => format!("valid packing of {trees} trees\n"),
            Some((code, detail)) => format!("invalid: {code}\n{detail}\n"),
        }
    };
    let code = if failure.is_none() { EXIT_OK } else { EXIT_CONTRACT };
    Ok(Outcome { code, stdout })
}

fn oracle(o: &OracleCommand, as_json: bool) -> Result<Outcome, CliError> {
    let (name, feasible, value, witness): (&'static str, bool, Option<usize>, Vec<Vec<usize>>) = match o {
        OracleCommand::TwoLinkage { graph, s1, t1, s2, t2 } => {
            let d = load_digraph(graph)?;
            let res = directed_two_linkage(&d, *s1, *t1, *s2, *t2)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            match res {
                Some((p1, p2)) => ("2linkage", true, None, vec![p1, p2]),
                None => ("2linkage", false, None, Vec::new()),
            }
        }
        OracleCommand::TwoColor { hypergraph } => {
            let h = parsed(hypergraph, parse_hypergraph)?;
            match hypergraph_two_coloring(&h) {
                Some(c) => {
                    let red = (0..c.len()).filter(|&v| c[v] == Color::Red).collect();
                    let blue = (0..c.len()).filter(|&v| c[v] == Color::Blue).collect();
                    ("2color", true, None, vec![red, blue])
                }
                None => ("2color", false, None, Vec::new()),
            }
        }
        OracleCommand::Cllm { tripartite } => {
            let g = parsed(tripartite, parse_tripartite)?;
            match cllm_solve(&g) {
                Some(triples) => ("cllm", true, None, triples.iter().map(|t| t.to_vec()).collect()),
                None => ("cllm", false, None, Vec::new()),
            }
        }
        OracleCommand::Kappa { graph } => {
            let d = load_digraph(graph)?;
            if d.order() < 2 {
                return Err(CliError::Usage("kappa needs at least 2 vertices".into()));
            }
            ("kappa", true, Some(vertex_connectivity(&d)), Vec::new())
        }
    };
    let report = OracleJson {
        command: "oracle",
        oracle: name,
        feasible,
        value,
        witness,
    };
    if as_json {
        return Ok(Outcome::ok(json(&report)));
    }
    let mut s = String::new();
    if let Some(v) = value {
        let _ = writeln!(s, "kappa = {v}");
    } else if feasible {
        s.push_str("feasible\n");
        for w in &report.witness {
            let _ = writeln!(s, "  {}", join(w));
        }
    } else {
        s.push_str("infeasible\n");
    }
    Ok(Outcome::ok(s))
}

fn gen(a: &GenArgs, as_json: bool) -> Result<Outcome, CliError> {
    let family: Family = a.family.parse()?;
    let params = GenParams {
        family,
        n: a.n,
        p: a.p,
        seed: a.seed,
    };
    let d = generate(&params)?;
    let text = write_digraph(&d, &params.header());
    if let Some(path) = &a.out {
        write(path, &text)?;
    }
    if as_json {
        return Ok(Outcome::ok(json(&GenJson {
            command: "gen",
            family: family.name().to_string(),
            n: a.n,
            p: a.p,
            seed: a.seed,
            m: d.size(),
            digraph: text,
        })));
    }
    if a.out.is_some() {
        return Ok(Outcome::ok(format!("wrote {} vertices, {} arcs\n", d.order(), d.size())));
    }
    Ok(Outcome::ok(text))
}
