//! The `localdim` command line. [`run`] takes argv and output streams and
//! returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or the certificate verified |
//! | 1 | verification found a violation |
//! | 2 | an input file failed to parse |
//! | 3 | a solver budget or time limit was exceeded |
//! | 4 | usage error or invalid arguments |

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{
    block_trace_cover, bogart_extension, boolean_lattice_realizer, boolean_lb_report,
    default_block_size, height2_local_realizer_with, ldim_bound_via_split, product_realizer,
    removable_pair_height2, removable_quadruple, staircase_cover, young_cover, ConstructionError,
    Removal,
};
use crate::diffgraph::{verify_cover, BipartiteGraph, CoverKind, DifferenceGraph};
use crate::formats::{
    parse_cover, parse_graph, parse_poset, parse_realizer, write_cover, write_poset_labeled,
    write_ples, write_realizer, ParseError,
};
use crate::generators::{generate, product, split, ElementMap, Family, DEFAULT_ELEMENT_CAP};
use crate::poset::{posets_up_to_iso, Poset};
use crate::realizer::{verify_local_realizer, verify_realizer, LocalRealizer};
use crate::solvers::{exact_cover_number, exact_dim, exact_ldim, CoverObjective, SolveBudget, SolveError};

#[derive(Parser, Debug)]
#[command(name = "localdim", version, about = "Local dimension of finite posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input file, used when the command's positional file is omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write the witness or generated object here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for randomized experiments.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Node limit for exact solvers.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Wall-clock limit for exact solvers, in milliseconds.
    #[arg(long, global = true)]
    budget_ms: Option<u64>,
    /// Largest instance the exact solvers accept (elements or edges).
    #[arg(long, global = true)]
    max_size: Option<usize>,
    /// Print the solver witness after the value.
    #[arg(long, global = true)]
    emit_certificate: bool,
    /// Emit tables as tab-separated values.
    #[arg(long, global = true)]
    tsv: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a poset: chain N, antichain N, standard N, boolean N,
    /// layers S T N, split FILE, product FILE FILE.
    Gen {
        family: String,
        params: Vec<String>,
    },
    /// Exact dimension.
    Dim { poset: Option<PathBuf> },
    /// Exact local dimension.
    Ldim { poset: Option<PathBuf> },
    /// Check a certificate.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Run a construction and write its witness.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Evaluate a numeric bound.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Randomized experiments.
    #[command(subcommand)]
    Experiment(ExperimentCmd),
    /// Exhaustive surveys over small posets.
    #[command(subcommand)]
    Survey(SurveyCmd),
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// A realizer made of linear extensions.
    Realizer { poset: PathBuf, witness: PathBuf },
    /// A local realizer.
    Local { poset: PathBuf, witness: PathBuf },
    /// A cover of a bipartite graph.
    Cover {
        graph: PathBuf,
        cover: PathBuf,
        #[arg(long, value_enum, default_value = "biclique")]
        kind: KindArg,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Biclique,
    Difference,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RemovalArg {
    /// A removable pair of a poset of height at most two.
    Pair,
    /// A removable quadruple of a poset with at least five elements.
    Quadruple,
}

#[derive(Subcommand, Debug)]
enum ConstructCmd {
    /// Local realizer of a poset of height at most two.
    Height2 {
        poset: Option<PathBuf>,
        #[arg(long)]
        block_size: Option<usize>,
    },
    /// Realizer of the split and the implied upper bound.
    SplitBound { poset: Option<PathBuf> },
    /// Realizer of a product from realizers of the factors.
    Product {
        p: PathBuf,
        rp: PathBuf,
        q: PathBuf,
        rq: PathBuf,
    },
    /// Linear extension with chain CA low and chain CB high.
    Bogart {
        poset: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        ca: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        cb: Vec<usize>,
    },
    /// Biclique cover of the difference graph with the given row degrees.
    Young {
        #[arg(required = true)]
        parts: Vec<usize>,
    },
    /// Biclique cover of the staircase H_n, n = 2^k - 1.
    Staircase { k: usize },
    /// Removable pair or quadruple with the constructed realizer.
    Removal {
        #[arg(value_enum)]
        kind: RemovalArg,
        poset: Option<PathBuf>,
    },
    /// Product realizer of the Boolean lattice on n atoms.
    Boolean { n: usize },
}

#[derive(Subcommand, Debug)]
enum BoundCmd {
    /// Boolean-lattice lower-bound arithmetic.
    Boolean { n: usize },
}

#[derive(Subcommand, Debug)]
enum ExperimentCmd {
    /// Sample random bipartite graphs and compare cover numbers.
    RandomBipartite {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long, default_value_t = std::f64::consts::E.recip())]
        p: f64,
        #[arg(long, default_value_t = 1)]
        trials: usize,
    },
}

#[derive(Subcommand, Debug)]
enum SurveyCmd {
    /// Tabulate dim against ldim over all posets up to isomorphism.
    Posets {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Violation(String),
    Parse(String),
    Budget(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Violation(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Budget(_) => 3,
            Failure::Usage(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Violation(m) | Failure::Parse(m) | Failure::Budget(m) | Failure::Usage(m) => m,
        }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        Failure::Budget(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    4
                }
            };
        }
    };
    let result = dispatch(&cli).and_then(|text| deliver(&cli, text, out));
    match result {
        Ok(()) => 0,
        Err(Failure::Violation(report)) => {
            let _ = writeln!(out, "{report}");
            1
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

/// Writes command output to `--output` when given, otherwise to `out`.
/// Commands whose stdout is a report put their file payload after a
/// `\0` separator.
fn deliver(cli: &Cli, text: String, out: &mut dyn Write) -> Result<(), Failure> {
    let (report, payload) = match text.split_once('\0') {
        Some((r, p)) => (r.to_string(), Some(p.to_string())),
        None => (String::new(), Some(text)),
    };
    let _ = out.write_all(report.as_bytes());
    if let Some(payload) = payload.filter(|p| !p.is_empty()) {
        match &cli.output {
            Some(path) => std::fs::write(path, payload)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
            None => {
                let _ = out.write_all(payload.as_bytes());
            }
        }
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn parse_failure(path: &Path, e: ParseError) -> Failure {
    Failure::Parse(format!("{}: {e}", path.display()))
}

fn load_poset(path: &Path) -> Result<Poset, Failure> {
    parse_poset(&read(path)?).map_err(|e| parse_failure(path, e))
}

fn load_realizer(path: &Path, n: usize) -> Result<LocalRealizer, Failure> {
    parse_realizer(&read(path)?, n).map_err(|e| parse_failure(path, e))
}

fn load_graph(path: &Path) -> Result<BipartiteGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| parse_failure(path, e))
}

fn poset_arg(cli: &Cli, given: &Option<PathBuf>) -> Result<Poset, Failure> {
    let path = given
        .as_ref()
        .or(cli.input.as_ref())
        .ok_or_else(|| Failure::Usage("no poset file given (positional or --input)".into()))?;
    load_poset(path)
}

fn budget(cli: &Cli, base: SolveBudget) -> SolveBudget {
    SolveBudget {
        max_size: cli.max_size.unwrap_or(base.max_size),
        node_limit: cli.budget_nodes.unwrap_or(base.node_limit),
        time_limit: cli.budget_ms.map(Duration::from_millis).or(base.time_limit),
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Gen { family, params } => gen(family, params),
        Command::Dim { poset } => {
            let p = poset_arg(cli, poset)?;
            let res = exact_dim(&p, &budget(cli, SolveBudget::dim()))?;
            Ok(solved(cli, res.value, write_ples(&res.witness)))
        }
        Command::Ldim { poset } => {
            let p = poset_arg(cli, poset)?;
            let res = exact_ldim(&p, &budget(cli, SolveBudget::ldim()))?;
            Ok(solved(cli, res.value, write_realizer(&res.witness)))
        }
        Command::Verify(cmd) => verify(cmd),
        Command::Construct(cmd) => construct(cli, cmd),
        Command::Bound(BoundCmd::Boolean { n }) => Ok(format!("{}\0", boolean_lb_report(*n)?)),
        Command::Experiment(ExperimentCmd::RandomBipartite { n1, n2, p, trials }) => {
            random_bipartite(cli, *n1, *n2, *p, *trials)
        }
        Command::Survey(SurveyCmd::Posets { max_n }) => survey(cli, *max_n),
    }
}

/// The value on stdout; the witness goes to `--output`, or follows the
/// value with `--emit-certificate`.
fn solved(cli: &Cli, value: usize, witness: String) -> String {
    if cli.output.is_some() || cli.emit_certificate {
        format!("{value}\n\0{witness}")
    } else {
        format!("{value}\n\0")
    }
}

fn numbers(params: &[String]) -> Result<Vec<usize>, Failure> {
    params
        .iter()
        .map(|s| s.parse().map_err(|_| Failure::Usage(format!("expected a number, found {s:?}"))))
        .collect()
}

fn gen(family: &str, params: &[String]) -> Outcome {
    let want = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(Failure::Usage(format!("{family} takes {k} argument(s), got {}", params.len())))
        }
    };
    let fam = |f: Family| generate(f).map_err(|e| Failure::Usage(e.to_string()));
    let (p, map) = match family {
        "chain" | "antichain" | "standard" | "boolean" => {
            want(1)?;
            let n = numbers(params)?[0];
            fam(match family {
                "chain" => Family::Chain(n),
                "antichain" => Family::Antichain(n),
                "standard" => Family::StandardExample(n),
                _ => Family::BooleanLattice(n),
            })?
        }
        "layers" => {
            want(3)?;
            let v = numbers(params)?;
            fam(Family::Layers {
                s: v[0],
                t: v[1],
                n: v[2],
            })?
        }
        "split" => {
            want(1)?;
            let p = load_poset(Path::new(&params[0]))?;
            split(&p, &ElementMap::identity(p.len())).map_err(|e| Failure::Usage(e.to_string()))?
        }
        "product" => {
            want(2)?;
            let p = load_poset(Path::new(&params[0]))?;
            let q = load_poset(Path::new(&params[1]))?;
            product(
                &p,
                &ElementMap::identity(p.len()),
                &q,
                &ElementMap::identity(q.len()),
                DEFAULT_ELEMENT_CAP,
            )
            .map_err(|e| Failure::Usage(e.to_string()))?
        }
        other => return Err(Failure::Usage(format!("unknown family {other:?}"))),
    };
    Ok(write_poset_labeled(&p, &map))
}

fn verify(cmd: &VerifyCmd) -> Outcome {
    match cmd {
        VerifyCmd::Realizer { poset, witness } => {
            let p = load_poset(poset)?;
            let r = load_realizer(witness, p.len())?;
            match verify_realizer(&p, r.ples()).map_err(|e| Failure::Parse(e.to_string()))? {
                Ok(()) => Ok(format!("ok: realizer of size {}\n\0", r.len())),
                Err(v) => Err(Failure::Violation(format!("violation: {v}"))),
            }
        }
        VerifyCmd::Local { poset, witness } => {
            let p = load_poset(poset)?;
            let r = load_realizer(witness, p.len())?;
            match verify_local_realizer(&p, &r).map_err(|e| Failure::Parse(e.to_string()))? {
                Ok(cert) => Ok(format!("ok: local realizer, mu {}\n\0", cert.mu)),
                Err(v) => Err(Failure::Violation(format!("violation: {v}"))),
            }
        }
        VerifyCmd::Cover { graph, cover, kind } => {
            let g = load_graph(graph)?;
            let f = parse_cover(&read(cover)?).map_err(|e| parse_failure(cover, e))?;
            let kind = match kind {
                KindArg::Biclique => CoverKind::Biclique,
                KindArg::Difference => CoverKind::Difference,
            };
            match verify_cover(&g, &f, kind) {
                Ok(rep) => Ok(format!(
                    "ok: cover, max multiplicity {} (rows {}, columns {}), total vertices {}\n\0",
                    rep.max_mult, rep.max_row_mult, rep.max_col_mult, rep.total_vertices
                )),
                Err(v) => Err(Failure::Violation(format!("violation: {v}"))),
            }
        }
    }
}

fn construct(cli: &Cli, cmd: &ConstructCmd) -> Outcome {
    match cmd {
        ConstructCmd::Height2 { poset, block_size } => {
            let p = poset_arg(cli, poset)?;
            let c = height2_local_realizer_with(&p, *block_size)?;
            Ok(format!(
                "# mu {}\n# block size {}\n# cover multiplicity {}\n{}",
                c.realizer.mu(),
                c.block_size,
                c.cover_report.max_mult,
                write_realizer(&c.realizer)
            ))
        }
        ConstructCmd::SplitBound { poset } => {
            let p = poset_arg(cli, poset)?;
            let sb = ldim_bound_via_split(&p)?;
            Ok(format!(
                "# split has {} elements; realizer below is over the split\n# mu {}\n# ldim <= {}\n{}",
                sb.split.len(),
                sb.mu,
                sb.ldim_upper,
                write_realizer(&sb.realizer)
            ))
        }
        ConstructCmd::Product { p, rp, q, rq } => {
            let pp = load_poset(p)?;
            let qq = load_poset(q)?;
            let rpp = load_realizer(rp, pp.len())?;
            let rqq = load_realizer(rq, qq.len())?;
            let r = product_realizer(&pp, &qq, &rpp, &rqq, &pp.topological_order(), &qq.topological_order())?;
            Ok(format!("# mu {}\n{}", r.mu(), write_realizer(&r)))
        }
        ConstructCmd::Bogart { poset, ca, cb } => {
            let p = poset_arg(cli, poset)?;
            let zero = |v: &[usize]| -> Result<Vec<usize>, Failure> {
                v.iter()
                    .map(|&x| {
                        x.checked_sub(1)
                            .ok_or_else(|| Failure::Usage("element ids are 1-based".into()))
                    })
                    .collect()
            };
            let l = bogart_extension(&p, &zero(ca)?, &zero(cb)?)?;
            Ok(write_ples(&[l]))
        }
        ConstructCmd::Young { parts } => {
            let h = DifferenceGraph::from_partition(parts).map_err(|e| Failure::Usage(e.to_string()))?;
            let f = young_cover(&h);
            let rep = verify_cover(&h.to_graph(), &f, CoverKind::Biclique)
                .map_err(|v| Failure::Violation(format!("violation: {v}")))?;
            let bound = (parts.len() as f64 + 1.0).log2().ceil() as usize;
            Ok(format!(
                "# max multiplicity {} (bound {bound})\n{}",
                rep.max_mult,
                write_cover(&f)
            ))
        }
        ConstructCmd::Staircase { k } => {
            let s = staircase_cover(*k)?;
            Ok(format!(
                "# H_{}: max multiplicity {} (rows {}, columns {}), meets log2(n+1)-1: {}\n{}",
                s.n,
                s.report.max_mult,
                s.report.max_row_mult,
                s.report.max_col_mult,
                s.meets_target,
                write_cover(&s.family)
            ))
        }
        ConstructCmd::Removal { kind, poset } => {
            let p = poset_arg(cli, poset)?;
            let b = budget(cli, SolveBudget::ldim());
            let mut head = String::new();
            let (realizer, reduced_mu, allowed, cert) = match kind {
                RemovalArg::Pair => {
                    let pr = removable_pair_height2(&p, &b)?;
                    let _ = writeln!(
                        head,
                        "# removed {} {} via {}",
                        pr.x + 1,
                        pr.y + 1,
                        pr.outcome.removal.name()
                    );
                    (pr.outcome.realizer, pr.outcome.reduced_mu, 1, pr.certificate)
                }
                RemovalArg::Quadruple => {
                    let qr = removable_quadruple(&p, &b)?;
                    let ids: Vec<String> = qr.removed.iter().map(|x| (x + 1).to_string()).collect();
                    let steps: Vec<&str> = qr.steps.iter().map(Removal::name).collect();
                    let _ = writeln!(head, "# removed {} via {}", ids.join(" "), steps.join(", "));
                    (qr.realizer, qr.reduced_mu, 2, qr.certificate)
                }
            };
            let _ = writeln!(head, "# mu {} from reduced mu {reduced_mu} (allowed +{allowed})", realizer.mu());
            match cert {
                Ok(c) => {
                    let _ = writeln!(
                        head,
                        "# exact: ldim {} <= {} + {allowed}: {}",
                        c.ldim,
                        c.reduced_ldim,
                        c.holds()
                    );
                }
                Err(e) => {
                    let _ = writeln!(head, "# exact certificate unavailable: {e}");
                }
            }
            Ok(format!("{head}{}", write_realizer(&realizer)))
        }
        ConstructCmd::Boolean { n } => {
            let r = boolean_lattice_realizer(*n)?;
            Ok(format!("# mu {}\n{}", r.mu(), write_realizer(&r)))
        }
    }
}

/// Fixed-width or tab-separated table.
fn table(header: &[&str], rows: &[Vec<String>], tsv: bool) -> String {
    let mut out = String::new();
    if tsv {
        out.push_str(&header.join("\t"));
        out.push('\n');
        for row in rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        return out;
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap())
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:>w$}"))
            .collect();
        padded.join("  ") + "\n"
    };
    out.push_str(&line(header.to_vec()));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

/// Edges of `G(n1, n2, p)`: one uniform draw per pair in row-major order.
pub fn sample_bipartite(n1: usize, n2: usize, p: f64, rng: &mut ChaCha8Rng) -> BipartiteGraph {
    let mut edges = Vec::new();
    for r in 0..n1 {
        for c in 0..n2 {
            if rng.gen::<f64>() < p {
                edges.push((r, c));
            }
        }
    }
    BipartiteGraph::new(n1, n2, &edges).expect("ids in range")
}

fn random_bipartite(cli: &Cli, n1: usize, n2: usize, p: f64, trials: usize) -> Outcome {
    if !(0.0..=1.0).contains(&p) {
        return Err(Failure::Usage(format!("p must lie in [0, 1], got {p}")));
    }
    if n1 == 0 || n2 == 0 {
        return Err(Failure::Usage("n1 and n2 must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let b = budget(cli, SolveBudget::cover());
    let exact = |g: &BipartiteGraph, obj| match exact_cover_number(g, obj, &b) {
        Ok(res) => res.value.to_string(),
        Err(_) => "-".to_string(),
    };
    let mut rows = Vec::new();
    for t in 0..trials {
        let g = sample_bipartite(n1, n2, p, &mut rng);
        let bs = default_block_size(n1);
        let f = block_trace_cover(&g, bs)?;
        let rep = verify_cover(&g, &f, CoverKind::Biclique).expect("block-trace cover verifies");
        rows.push(vec![
            (t + 1).to_string(),
            g.edge_count().to_string(),
            bs.to_string(),
            f.len().to_string(),
            rep.max_mult.to_string(),
            exact(&g, CoverObjective::Lbc),
            exact(&g, CoverObjective::Ldc),
            exact(&g, CoverObjective::Tdc),
        ]);
    }
    let header = ["trial", "edges", "block", "members", "trace_mult", "lbc", "ldc", "tdc"];
    Ok(format!(
        "# G({n1},{n2},{p:.6}) seed {}\n{}\0",
        cli.seed,
        table(&header, &rows, cli.tsv)
    ))
}

fn survey(cli: &Cli, max_n: usize) -> Outcome {
    if !(1..=7).contains(&max_n) {
        return Err(Failure::Usage(format!("--max-n must lie in 1..=7, got {max_n}")));
    }
    let mut counts: std::collections::BTreeMap<(usize, usize, usize), usize> = Default::default();
    let mut classes = 0;
    let mut bad = 0;
    for n in 1..=max_n {
        for p in posets_up_to_iso(n) {
            let dim = exact_dim(&p, &budget(cli, SolveBudget::with_size(n)))?.value;
            let ldim = exact_ldim(&p, &budget(cli, SolveBudget::with_size(n)))?.value;
            classes += 1;
            bad += usize::from(ldim > dim);
            *counts.entry((n, dim, ldim)).or_default() += 1;
        }
    }
    let rows: Vec<Vec<String>> = counts
        .iter()
        .map(|(&(n, d, l), &c)| vec![n.to_string(), d.to_string(), l.to_string(), c.to_string()])
        .collect();
    let mut text = table(&["n", "dim", "ldim", "posets"], &rows, cli.tsv);
    let _ = writeln!(text, "# {classes} posets, ldim <= dim fails on {bad}");
    if bad > 0 {
        return Err(Failure::Violation(text));
    }
    Ok(format!("{text}\0"))
}
