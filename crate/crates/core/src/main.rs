use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use trt_core::acceptance::run_all;
use trt_core::constructions::{extremal_witness, near_regular, ramsey_witness};
use trt_core::containment::contains_subgraph;
use trt_core::graph::{decode_graph6, encode_graph6, Graph, WitnessDescriptor};
use trt_core::oracle::{
    ex_oracle, ramsey_oracle, verify_connected_extremal, verify_structural_lemmas, OracleBudget,
};
use trt_core::ramsey::{ramsey_value, Bound};
use trt_core::turan::{ex_bounds, ex_case_explain, ex_value};
use trt_core::{Error, Family, TreeSpec};

/// Turán and Ramsey numbers for small-diameter trees.
#[derive(Parser)]
#[command(name = "trt", version)]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form Turán number ex(p; T).
    Ex {
        /// Tree family: path, star, tprime, tstar, t1 or t2.
        #[arg(long)]
        family: Family,
        /// Tree order.
        #[arg(long)]
        n: usize,
        /// Host order.
        #[arg(long)]
        p: u64,
        /// Realize and verify the extremal graph, printing its graph6.
        #[arg(long)]
        witness: bool,
        /// Also print the rational bounds and the branch explanation.
        #[arg(long)]
        explain: bool,
    },
    /// Ramsey number r(left, right) from the rule table.
    Ramsey {
        /// First tree as FAMILY:N, sought in the first colour.
        #[arg(long)]
        left: TreeSpec,
        /// Second tree as FAMILY:N, sought in the complement.
        #[arg(long)]
        right: TreeSpec,
        /// Realize and verify the lower-bound graph, printing its graph6.
        #[arg(long)]
        witness: bool,
    },
    /// Build a witness graph and write it as graph6.
    #[command(subcommand)]
    Construct(Construct),
    /// Test graph6 graphs (one per line) for a copy of a tree.
    Check {
        /// graph6 file, or `-` for standard input.
        #[arg(long, default_value = "-")]
        graph: PathBuf,
        /// Tree to look for, as FAMILY:N.
        #[arg(long)]
        avoid: TreeSpec,
        /// Test the complement of each graph instead.
        #[arg(long)]
        complement: bool,
    },
    /// Exhaustive small-order searches.
    Oracle {
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Subcommand)]
enum Construct {
    /// Tree-free graph on p vertices with ex(p; T) edges.
    Extremal {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
    },
    /// Graph on r - 1 vertices with no left tree and no right tree in its complement.
    RamseyWitness {
        #[arg(long)]
        left: TreeSpec,
        #[arg(long)]
        right: TreeSpec,
    },
    /// Graph on p vertices with every degree d, except one d - 1 when dp is odd.
    NearRegular {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Args)]
struct BudgetArgs {
    /// Enumeration cap; defaults to TRT_MAX_ORDER or 9.
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Cap for the Ramsey search.
    #[arg(long, global = true)]
    max_coloring_order: Option<usize>,
    /// Wall-clock limit in seconds.
    #[arg(long, global = true)]
    time_limit: Option<f64>,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Maximum edges of a tree-free graph on p vertices, by enumeration.
    Ex {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        /// Restrict to connected graphs.
        #[arg(long)]
        connected: bool,
    },
    /// Whether every graph on `order` vertices arrows (left, right).
    Ramsey {
        #[arg(long)]
        left: TreeSpec,
        #[arg(long)]
        right: TreeSpec,
        #[arg(long)]
        order: usize,
    },
    /// Order-6 spider edge bounds for every p up to max-p.
    Lemmas {
        #[arg(long)]
        max_p: usize,
    },
    /// Connected spider-free maximum against floor((n-4)p/2).
    Connected {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
}

/// Outcome classes mapped to exit codes.
enum Failure {
    Negative(Option<String>),
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            Error::WitnessVerification(_) | Error::Inconsistent(_) => {
                Failure::Negative(Some(e.to_string()))
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn with_fields<T: Serialize>(value: &T, extra: Value) -> Value {
    let mut v = serde_json::to_value(value).expect("serializable");
    if let (Value::Object(map), Value::Object(more)) = (&mut v, extra) {
        map.extend(more);
    }
    v
}

fn budget(args: &BudgetArgs) -> Result<OracleBudget, Failure> {
    let mut b = OracleBudget::from_env()?;
    if let Some(m) = args.max_order {
        b.max_order = m;
    }
    if let Some(m) = args.max_coloring_order {
        b.max_coloring_order = m;
    }
    if let Some(t) = args.time_limit {
        let t = Duration::try_from_secs_f64(t)
            .map_err(|_| Failure::Input(format!("bad time limit {t}")))?;
        b.time_limit = Some(t);
    }
    Ok(b)
}

fn ex(json: bool, family: Family, n: usize, p: u64, witness: bool, explain: bool) -> Outcome {
    let res = ex_value(family, n, p)?;
    let graph6 =
        if witness { Some(encode_graph6(&extremal_witness(family, n, p)?.graph)) } else { None };
    let bounds = if explain { ex_bounds(family, n, p).ok() } else { None };
    let case = if explain { ex_case_explain(family, n, p).ok() } else { None };
    if json {
        print_json(&with_fields(&res, json!({ "graph6": graph6, "bounds": bounds, "case": case })));
        return Ok(());
    }
    println!("ex({p}; {family}:{n}) = {}", res.value);
    println!("p = {}({}) + {}", res.k, n.saturating_sub(1), res.r);
    let label = serde_json::to_value(res.branch).expect("serializable");
    let label = label.as_str().unwrap_or_default();
    println!("branch: {label}{}", if res.tie { " (tie)" } else { "" });
    if let Some(v) = &res.branch_values {
        println!("deficit branch: {}, clique-union branch: {}", v.deficit, v.clique_union);
    }
    println!("witness: {}", res.witness);
    if let Some(g) = graph6 {
        println!("graph6: {g}");
    }
    if let Some(b) = bounds {
        println!("bounds: {}/{} <= ex <= {}", b.lo_numerator, b.lo_denominator, b.hi);
    }
    if let Some(c) = case {
        println!("discriminant {} ({:?}), {}", c.discriminant, c.sign, c.regime);
    }
    Ok(())
}

fn ramsey(json: bool, left: TreeSpec, right: TreeSpec, witness: bool) -> Outcome {
    let mut answer = ramsey_value(left, right)?;
    let mut graph6 = None;
    if witness {
        let w = ramsey_witness(left, right)?;
        graph6 = Some(encode_graph6(&w.graph));
        answer.witness = Some(w.descriptor);
    }
    if json {
        print_json(&with_fields(&answer, json!({ "graph6": graph6 })));
        return Ok(());
    }
    let kind = match answer.bound {
        Bound::Exact { .. } => "Exact",
        Bound::Range { .. } => "Range",
        Bound::Unknown { .. } => "Unknown",
    };
    println!("r({left}, {right}): {kind} {}", answer.bound);
    println!("rule: {}", answer.rule);
    for c in &answer.trace {
        println!("  [{}] {}: {}", if c.holds { "pass" } else { "fail" }, c.rule, c.condition);
    }
    if let Some(note) = &answer.note {
        println!("note: {note}");
    }
    if let Some(w) = &answer.witness {
        println!("witness: {w}");
    }
    if let Some(g) = graph6 {
        println!("graph6: {g}");
    }
    Ok(())
}

fn construct(json: bool, which: Construct) -> Outcome {
    let (graph, descriptor): (Graph, Value) = match which {
        Construct::Extremal { family, n, p } => {
            let w = extremal_witness(family, n, p)?;
            (w.graph.clone(), serde_json::to_value(&w).expect("serializable"))
        }
        Construct::RamseyWitness { left, right } => {
            let w = ramsey_witness(left, right)?;
            (w.graph.clone(), serde_json::to_value(&w).expect("serializable"))
        }
        Construct::NearRegular { p, d } => {
            let g = near_regular(p, d)?;
            let desc = WitnessDescriptor::union(vec![trt_core::graph::Component::DegreeSeq(
                trt_core::constructions::near_regular_sequence(p, d),
            )]);
            (g, json!({ "descriptor": desc, "edges": (d * p / 2) }))
        }
    };
    println!("{}", encode_graph6(&graph));
    if json {
        eprintln!("{}", serde_json::to_string(&descriptor).expect("serializable"));
    }
    Ok(())
}

fn check(json: bool, path: PathBuf, avoid: TreeSpec, complement: bool) -> Outcome {
    let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(io::stdin().lock())
    } else {
        Box::new(io::BufReader::new(std::fs::File::open(&path)?))
    };
    let tree = avoid.build()?;
    let mut found_any = false;
    let mut reports = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = decode_graph6(&line).map_err(|e| Failure::Input(format!("line {}: {e}", i + 1)))?;
        let host = if complement { g.complement() } else { g };
        let embedding = contains_subgraph(&host, &tree)?;
        found_any |= embedding.is_some();
        reports.push(json!({
            "line": i + 1,
            "order": host.order(),
            "contains": embedding.is_some(),
            "embedding": embedding.as_ref().map(|e| e.map.clone()),
        }));
        if !json {
            match &embedding {
                Some(e) => {
                    let map: Vec<String> =
                        e.map.iter().enumerate().map(|(t, h)| format!("{t}->{h}")).collect();
                    println!("line {}: contains {avoid}: {}", i + 1, map.join(" "));
                }
                None => println!("line {}: free of {avoid}", i + 1),
            }
        }
    }
    if reports.is_empty() {
        return Err(Failure::Input("no graph on input".into()));
    }
    if json {
        print_json(&json!({ "avoid": avoid, "complement": complement, "graphs": reports }));
    }
    if found_any {
        Err(Failure::Negative(None))
    } else {
        Ok(())
    }
}

fn oracle(json: bool, args: BudgetArgs, command: OracleCommand) -> Outcome {
    let b = budget(&args)?;
    match command {
        OracleCommand::Ex { family, n, p, connected } => {
            let r = ex_oracle(p, &trt_core::trees::make_tree(family, n)?, connected, &b)?;
            if json {
                print_json(&with_fields(
                    &r,
                    json!({ "family": family, "n": n, "connected": connected }),
                ));
            } else {
                let scope = if connected { "connected " } else { "" };
                println!("{scope}maximum for {family}:{n} on {p} vertices: {}", r.value);
                println!("maximizer: {}", encode_graph6(&r.witness));
            }
        }
        OracleCommand::Ramsey { left, right, order } => {
            let r = ramsey_oracle(order, &left.build()?, &right.build()?, &b)?;
            if json {
                print_json(&with_fields(&r, json!({ "left": left, "right": right })));
            } else if r.arrows {
                println!("every graph on {order} vertices has {left} or a complement with {right}");
            } else {
                let g = r.counterexample.as_ref().map(encode_graph6).unwrap_or_default();
                println!("counterexample on {order} vertices: {g}");
            }
        }
        OracleCommand::Lemmas { max_p } => {
            let r = verify_structural_lemmas(max_p, &b)?;
            if json {
                print_json(&with_fields(&r, json!({ "violators": r.violators() })));
            } else {
                for c in &r.connected_t1_6 {
                    println!(
                        "connected, no t1:6, p={}: max {} <= {}",
                        c.p, c.observed_max, c.bound
                    );
                }
                for c in &r.t2_6 {
                    println!("no t2:6, p={}: max {} <= {}", c.p, c.observed_max, c.bound);
                }
                println!("violators: {}", r.violators());
            }
            if r.violators() > 0 {
                return Err(Failure::Negative(None));
            }
        }
        OracleCommand::Connected { family, n, p } => {
            let r = verify_connected_extremal(n, family, p, &b)?;
            if json {
                print_json(&r);
            } else {
                println!(
                    "{family}:{n} p={p}: connected max {}, floor((n-4)p/2) = {}, overall max {}",
                    r.connected_max, r.expected, r.overall_max
                );
                println!("extremal statement holds: {}", r.extremal_statement_holds);
            }
            if !r.connected_max_matches {
                return Err(Failure::Negative(None));
            }
        }
    }
    Ok(())
}

fn selftest(json: bool) -> Outcome {
    let criteria = run_all(&OracleBudget::from_env()?);
    if json {
        print_json(&criteria);
    } else {
        for c in &criteria {
            println!("{c}");
        }
    }
    if criteria.iter().all(|c| c.passed) {
        Ok(())
    } else {
        Err(Failure::Negative(None))
    }
}

fn main() -> ExitCode {
    // die quietly when piped into `head`
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let json = cli.json;
    let outcome = match cli.command {
        Command::Ex { family, n, p, witness, explain } => ex(json, family, n, p, witness, explain),
        Command::Ramsey { left, right, witness } => ramsey(json, left, right, witness),
        Command::Construct(which) => construct(json, which),
        Command::Check { graph, avoid, complement } => check(json, graph, avoid, complement),
        Command::Oracle { budget, command } => oracle(json, budget, command),
        Command::Selftest => selftest(json),
    };
    let _ = io::stdout().flush();
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            if let Some(msg) = msg {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
