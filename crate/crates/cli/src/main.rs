use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use eog::constructions::{
    d_graph, disjoint_k4, explower_order, k9_labeling, recursive_g, recursive_g_prime, rightright,
    star_plus_matching, turan_witness,
};
use eog::dsword::{contains_word, ds_bruteforce, u_of, w_of, w_prime_of, Word};
use eog::matrix::{
    contains_pattern, graph_from_matrix_col, graph_from_matrix_rowcol, parse_mat, patterns_for, serialize_mat,
};
use eog::orderchrom::{labeling_scan, order_chromatic};
use eog::verify::{claim, Report, CLAIMS};
use eog::{
    can_avoid, canonical_key, contains, enumerate_canonical, lex_exact, parse_pattern, serialize_eog, Budget,
    EdgeOrderedGraph, EogError,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "eog", version, about = "Edge-ordered graph toolkit")]
struct Cli {
    /// Emit JSON instead of plain lines.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Wall-clock budget in seconds for exhaustive searches.
    #[arg(long, global = true, env = "EOG_BUDGET_SECS")]
    budget_secs: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Turán number of a family on n vertices, with a witness.
    Lex {
        #[arg(long)]
        n: usize,
        /// Forbidden pattern; repeat for a family.
        #[arg(long = "pattern", required = true)]
        patterns: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Whether HOST contains PATTERN, with the least embedding.
    Contains {
        #[arg(long)]
        host: String,
        #[arg(long)]
        pattern: String,
    },
    /// Search for an edge-order of GRAPH avoiding the family.
    CanAvoid {
        #[arg(long)]
        graph: String,
        #[arg(long = "pattern", required = true)]
        patterns: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Order chromatic number of a family, or a scan over all labelings.
    Chi {
        #[arg(long = "pattern", required = true)]
        patterns: Vec<String>,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        /// Classify every edge-order of the (single) pattern's graph.
        #[arg(long)]
        scan: bool,
    },
    /// Build a named construction.
    Construct {
        /// star-plus-matching N | disjoint-k4 C | recursive I | recursive-prime I |
        /// rightright I | d N | k9 | explower N | turan N R (needs --pattern)
        name: String,
        params: Vec<usize>,
        #[arg(long = "pattern")]
        patterns: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Canonical edge-orders of K_{k x n}.
    Canonical {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Print only the number of orders and of isomorphism classes.
        #[arg(long)]
        count: bool,
    },
    /// Words and Davenport-Schinzel searches.
    Ds {
        #[command(subcommand)]
        command: DsCommand,
    },
    /// 0-1 matrices.
    Matrix {
        #[command(subcommand)]
        command: MatrixCommand,
    },
    /// Replay the acceptance claims (`all` or a list of ids).
    Verify {
        #[arg(default_value = "all")]
        ids: Vec<String>,
    },
}

#[derive(Subcommand)]
enum DsCommand {
    /// Whether word U contains word F.
    Contains { u: Word, f: Word },
    /// Longest regular word on N letters avoiding F.
    Extremal {
        #[arg(long)]
        n: usize,
        f: Word,
        #[arg(long, default_value_t = 64)]
        max_len: usize,
    },
    /// The words w, w' of a star forest and u of a graph.
    Words { pattern: String },
}

#[derive(Subcommand)]
enum MatrixCommand {
    /// Whether matrix M contains pattern P (both `.mat` files).
    Contains { m: PathBuf, p: PathBuf },
    /// The edge-ordered bipartite graph of a matrix.
    ToGraph {
        m: PathBuf,
        /// Order by column only instead of by row then column.
        #[arg(long)]
        col: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Matrices whose graphs are the given bipartite pattern.
    Patterns { pattern: String },
}

#[derive(Args)]
struct Output {
    /// Write the resulting graph to this `.eog` file instead of stdout.
    #[arg(short = 'o', long = "output")]
    path: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification,
}

impl From<EogError> for Failure {
    fn from(e: EogError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    json: bool,
    budget: Budget,
}

impl Ctx {
    fn emit(&self, value: Value, plain: impl FnOnce() -> String) {
        if self.json {
            println!("{value}");
        } else {
            print!("{}", plain());
        }
    }

    /// Prints or saves a graph; in JSON mode it is embedded by the caller.
    fn graph_text(&self, g: &EdgeOrderedGraph, out: &Output) -> Result<String, Failure> {
        match &out.path {
            Some(path) => {
                write_file(path, &serialize_eog(g))?;
                Ok(String::new())
            }
            None => Ok(serialize_eog(g)),
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn patterns(specs: &[String]) -> Result<Vec<EdgeOrderedGraph>, Failure> {
    Ok(specs.iter().map(|s| parse_pattern(s)).collect::<eog::Result<_>>()?)
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn param(params: &[usize], i: usize, name: &str) -> Result<usize, Failure> {
    params.get(i).copied().ok_or_else(|| Failure::Usage(format!("construction `{name}` needs {} parameter(s)", i + 1)))
}

fn run(cli: Cli) -> Outcome {
    let mut budget = Budget::default();
    if let Some(secs) = cli.budget_secs {
        budget = budget.with_time(Duration::from_secs(secs));
    }
    let ctx = Ctx { json: cli.json, budget };
    match cli.command {
        Command::Lex { n, patterns: specs, out } => {
            let family = patterns(&specs)?;
            let r = lex_exact(n, &family, ctx.budget)?;
            let text = ctx.graph_text(&r.witness, &out)?;
            let status = if r.is_exact() { "exact" } else { "lower-bound" };
            ctx.emit(
                json!({"n": n, "value": r.value, "status": status, "nodes": r.nodes, "witness": r.witness.edges()}),
                || format!("{}\n# {status}, {} nodes\n{text}", r.value, r.nodes),
            );
        }
        Command::Contains { host, pattern } => {
            let (g, h) = (parse_pattern(&host)?, parse_pattern(&pattern)?);
            let emb = contains(&g, &h)?;
            ctx.emit(json!({"contains": emb.is_some(), "embedding": emb}), || match &emb {
                Some(e) => format!("yes\nvertices {:?}\nedges {:?}\n", e.vertex_map, e.edge_map),
                None => "no\n".into(),
            });
        }
        Command::CanAvoid { graph, patterns: specs, out } => {
            let g = parse_pattern(&graph)?;
            let family = patterns(&specs)?;
            let found = can_avoid(&g, &family, ctx.budget)?;
            let text = match &found {
                Some(h) => ctx.graph_text(h, &out)?,
                None => "none\n".into(),
            };
            ctx.emit(json!({"avoidable": found.is_some(), "witness": found.as_ref().map(|h| h.edges())}), || text);
        }
        Command::Chi { patterns: specs, kmax, scan } => {
            let family = patterns(&specs)?;
            if scan {
                let [g] = family.as_slice() else {
                    return Err(Failure::Usage("--scan takes exactly one pattern".into()));
                };
                let report = labeling_scan(g, kmax)?;
                let classes: Vec<Value> = report
                    .classes
                    .iter()
                    .map(|c| json!({"edges": c.graph.edges(), "multiplicity": c.multiplicity, "chi": c.chi.to_string()}))
                    .collect();
                let minus = report.chi_minus().map(|c| c.to_string());
                let plus = report.chi_plus().map(|c| c.to_string());
                ctx.emit(json!({"classes": classes, "chi_minus": minus, "chi_plus": plus}), || {
                    let mut out = lines(report.classes.iter().map(|c| {
                        let edges: Vec<String> = c.graph.edges().iter().map(|(u, v)| format!("{u}{v}")).collect();
                        format!("{} x{} chi={}", edges.join(","), c.multiplicity, c.chi)
                    }));
                    out.push_str(&format!(
                        "chi_minus={} chi_plus={}\n",
                        minus.as_deref().unwrap_or("?"),
                        plus.as_deref().unwrap_or("?")
                    ));
                    out
                });
            } else {
                let chi = order_chromatic(&family, kmax)?;
                ctx.emit(json!({"chi": chi.to_string()}), || format!("{chi}\n"));
            }
        }
        Command::Construct { name, params, patterns: specs, out } => {
            let p = |i| param(&params, i, &name);
            let g = match name.as_str() {
                "star-plus-matching" => star_plus_matching(p(0)?)?,
                "disjoint-k4" => disjoint_k4(p(0)?)?,
                "recursive" => recursive_g(p(0)?),
                "recursive-prime" => recursive_g_prime(p(0)?),
                "rightright" => rightright(p(0)?)?.graph().clone(),
                "d" => d_graph(p(0)?)?,
                "k9" => k9_labeling(),
                "explower" => explower_order(p(0)?)?,
                "turan" => turan_witness(p(0)?, p(1)?, &patterns(&specs)?)?,
                other => return Err(Failure::Usage(format!("unknown construction `{other}`"))),
            };
            let text = ctx.graph_text(&g, &out)?;
            ctx.emit(json!({"vertices": g.vertex_count(), "edges": g.edges()}), || text);
        }
        Command::Canonical { k, n, count } => {
            let found = enumerate_canonical(k, n)?;
            let iso: BTreeSet<_> = found.orders.iter().map(|(_, g)| canonical_key(g)).collect();
            let specs: Vec<String> = found.orders.iter().map(|(s, _)| s.to_string()).collect();
            let total = found.orders.len();
            let value = if count {
                json!({"total": total, "iso": iso.len()})
            } else {
                json!({"total": total, "iso": iso.len(), "orders": specs})
            };
            ctx.emit(value, || {
                let mut out = if count { String::new() } else { lines(specs.iter().cloned()) };
                out.push_str(&format!("total={total} iso={}\n", iso.len()));
                out
            });
        }
        Command::Ds { command } => match command {
            DsCommand::Contains { u, f } => {
                let yes = contains_word(&u, &f)?;
                ctx.emit(json!({"contains": yes}), || format!("{}\n", if yes { "yes" } else { "no" }));
            }
            DsCommand::Extremal { n, f, max_len } => {
                let r = ds_bruteforce(n, &f, max_len)?;
                ctx.emit(json!({"result": r}), || format!("{r:?}\n"));
            }
            DsCommand::Words { pattern } => {
                let g = parse_pattern(&pattern)?;
                let u = u_of(&g).to_string();
                let (w, wp) = match w_of(&g) {
                    Ok(w) => (Some(w.to_string()), Some(w_prime_of(&g)?.to_string())),
                    Err(EogError::NotStarForest) => (None, None),
                    Err(e) => return Err(e.into()),
                };
                ctx.emit(json!({"u": u, "w": w, "w_prime": wp}), || {
                    let mut out = format!("u={u}\n");
                    if let (Some(w), Some(wp)) = (&w, &wp) {
                        out.push_str(&format!("w={w}\nw'={wp}\n"));
                    }
                    out
                });
            }
        },
        Command::Matrix { command } => match command {
            MatrixCommand::Contains { m, p } => {
                let (m, p) = (parse_mat(&read_file(&m)?)?, parse_mat(&read_file(&p)?)?);
                let yes = contains_pattern(&m, &p);
                ctx.emit(json!({"contains": yes}), || format!("{}\n", if yes { "yes" } else { "no" }));
            }
            MatrixCommand::ToGraph { m, col, out } => {
                let m = parse_mat(&read_file(&m)?)?;
                let sided = if col { graph_from_matrix_col(&m) } else { graph_from_matrix_rowcol(&m) };
                let g = sided.graph();
                let text = ctx.graph_text(g, &out)?;
                ctx.emit(json!({"vertices": g.vertex_count(), "edges": g.edges()}), || text);
            }
            MatrixCommand::Patterns { pattern } => {
                let ps = patterns_for(&parse_pattern(&pattern)?)?;
                let texts: Vec<String> = ps.iter().map(serialize_mat).collect();
                ctx.emit(json!({"matrices": ps.iter().map(|p| p.to_rows()).collect::<Vec<_>>()}), || {
                    texts.join("\n")
                });
            }
        },
        Command::Verify { ids } => {
            let selected: Vec<u32> = if ids.iter().any(|s| s == "all") {
                CLAIMS.iter().map(|c| c.id).collect()
            } else {
                ids.iter()
                    .map(|s| s.parse().map_err(|_| Failure::Usage(format!("bad claim id `{s}`"))))
                    .collect::<Result<_, _>>()?
            };
            let mut reports: Vec<Report> = Vec::new();
            for id in selected {
                let c = claim(id).ok_or_else(|| Failure::Usage(format!("no claim with id {id}")))?;
                let r = c.run();
                if !ctx.json {
                    println!("{r}");
                }
                reports.push(r);
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            if ctx.json {
                let list: Vec<Value> = reports
                    .iter()
                    .map(|r| {
                        json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail,
                               "seconds": r.elapsed.as_secs_f64()})
                    })
                    .collect();
                println!("{}", json!({"claims": list, "failed": failed}));
            } else {
                println!("{} passed, {failed} failed", reports.len() - failed);
            }
            if failed > 0 {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
