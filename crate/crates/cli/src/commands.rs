//! The subcommands as functions over file contents, so tests can drive
//! them without spawning the binary.

use std::fmt::Write as _;
use std::time::Instant;

use khds_core::{
    brute_force_khds, brute_force_piercing, classify, gen_arcs_raw, gen_cactus, gen_tree,
    gen_unicyclic, hits_every_arc, normalize_arcs, parse_arcs, parse_graph, pierce_arcs,
    quadratic_piercing, solve_cactus, solve_tree, solve_unicyclic, solve_unicyclic_quadratic,
    verify_khds, Arc, CircularDomain, DominatingSet, GenSpec, Graph, GraphClass, OracleBudget,
};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::report::{OracleCheck, PierceReport, SolveReport, VerifyReport};

/// Instance families shared by `gen` and `bench`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Tree,
    Unicyclic,
    Cactus,
    Arcs,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::Tree => "tree",
            Kind::Unicyclic => "unicyclic",
            Kind::Cactus => "cactus",
            Kind::Arcs => "arcs",
        })
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub oracle: bool,
    pub time: bool,
}

/// Runs the solver matching the class of `g`. Trees and unicyclic graphs
/// are told apart by edge count; anything denser goes to the cactus solver,
/// which rejects non-cacti during its own DFS.
pub fn solve_graph(g: &Graph, k: usize) -> CliResult<(GraphClass, DominatingSet)> {
    let (n, m) = (g.n(), g.m());
    Ok(if m + 1 == n {
        (GraphClass::Tree, solve_tree(g, 0, k)?.dom)
    } else if m == n {
        (GraphClass::Unicyclic, solve_unicyclic(g, k)?)
    } else {
        (GraphClass::Cactus, solve_cactus(g, k)?)
    })
}

fn graph_oracle(g: &Graph, class: GraphClass, k: usize, size: usize) -> CliResult<OracleCheck> {
    let (method, opt) = if g.n() <= OracleBudget::KHDS.max_n {
        ("brute_force", brute_force_khds(g, k)?.len())
    } else if class == GraphClass::Unicyclic && g.n() <= OracleBudget::QUADRATIC.max_n {
        ("quadratic", solve_unicyclic_quadratic(g, k)?.len())
    } else {
        return Err(CliError::Usage(format!(
            "--oracle needs n <= {} (or a unicyclic graph with n <= {}), got n = {}",
            OracleBudget::KHDS.max_n,
            OracleBudget::QUADRATIC.max_n,
            g.n()
        )));
    };
    Ok(OracleCheck {
        method: method.into(),
        size: opt,
        agrees: opt == size,
    })
}

pub fn cmd_solve(graph_text: &str, k: usize, opts: Options) -> CliResult<SolveReport> {
    let g = parse_graph(graph_text)?;
    let start = Instant::now();
    let (class, dom) = solve_graph(&g, k)?;
    let elapsed = start.elapsed().as_nanos() as u64;
    let coverage = verify_khds(&g, &dom)?;
    if !coverage.covered {
        return Err(CliError::Invariant(format!(
            "solver output leaves vertex {} at distance {}",
            coverage.witness.unwrap_or_default(),
            coverage.max_dist
        )));
    }
    let oracle = if opts.oracle {
        Some(graph_oracle(&g, class, k, dom.len())?)
    } else {
        None
    };
    Ok(SolveReport {
        n: g.n(),
        m: g.m(),
        class,
        k,
        size: dom.len(),
        members: dom.members,
        coverage,
        wall_time_ns: opts.time.then_some(elapsed),
        oracle,
    })
}

pub fn cmd_pierce(arc_text: &str, opts: Options) -> CliResult<PierceReport> {
    let (dom, raw) = parse_arcs(arc_text)?;
    let start = Instant::now();
    let inst = normalize_arcs(dom, &raw)?;
    let set = pierce_arcs(&inst);
    let elapsed = start.elapsed().as_nanos() as u64;

    let pierces_all = hits_every_arc(dom, &raw, &set.points);
    if !pierces_all {
        return Err(CliError::Invariant("piercing set misses an arc".into()));
    }
    let full_only = inst.arcs.is_empty();
    if let Some(&p) = set.points.iter().find(|&&p| !full_only && !inst.in_f(p)) {
        return Err(CliError::Invariant(format!(
            "point {p} is not an ending point"
        )));
    }
    let oracle = if opts.oracle {
        let (method, opt) = if raw.len() <= OracleBudget::PIERCING.max_n {
            ("brute_force", brute_force_piercing(dom, &raw)?.len())
        } else if raw.len() <= OracleBudget::QUADRATIC.max_n {
            ("quadratic", quadratic_piercing(&inst)?.len())
        } else {
            return Err(CliError::Usage(format!(
                "--oracle needs at most {} arcs",
                OracleBudget::QUADRATIC.max_n
            )));
        };
        Some(OracleCheck {
            method: method.into(),
            size: opt,
            agrees: opt == set.len(),
        })
    } else {
        None
    };
    Ok(PierceReport {
        positions: dom.positions,
        arcs: raw.len(),
        pruned: inst.pruned.len(),
        size: set.len(),
        points: set.points,
        pierces_all,
        wall_time_ns: opts.time.then_some(elapsed),
        oracle,
    })
}

/// Vertex ids separated by whitespace. Lines starting with `#` and
/// `key=value` lines are skipped, so `solve` text output reads back as a
/// set file.
pub fn parse_set(text: &str) -> CliResult<Vec<usize>> {
    let mut members = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('#') || line.contains('=') {
            continue;
        }
        for tok in line.split_whitespace() {
            let v = tok.parse().map_err(|_| {
                CliError::Input(khds_core::Error::Malformed {
                    line: i + 1,
                    msg: format!("expected a vertex id, found {tok:?}"),
                })
            })?;
            members.push(v);
        }
    }
    Ok(members)
}

pub fn cmd_verify(
    graph_text: &str,
    set_text: &str,
    k: usize,
    oracle: bool,
) -> CliResult<VerifyReport> {
    let g = parse_graph(graph_text)?;
    if k == 0 {
        return Err(khds_core::Error::InvalidK(k).into());
    }
    let members = parse_set(set_text)?;
    if let Some(&v) = members.iter().find(|&&v| v >= g.n()) {
        return Err(khds_core::Error::InvalidVertex(v).into());
    }
    let dom = DominatingSet::new(members, k);
    let coverage = verify_khds(&g, &dom)?;
    let oracle = if oracle {
        Some(graph_oracle(&g, classify(&g), k, dom.len())?)
    } else {
        None
    };
    Ok(VerifyReport {
        n: g.n(),
        k,
        size: dom.len(),
        coverage,
        oracle,
    })
}

/// Raw arc family in the arc file format.
pub fn arcs_to_text(dom: CircularDomain, arcs: &[Arc]) -> String {
    let mut s = format!("{} {}\n", dom.positions, arcs.len());
    for a in arcs {
        let _ = writeln!(s, "{} {}", a.s, a.e);
    }
    s
}

pub fn cmd_gen(kind: Kind, spec: &GenSpec) -> CliResult<String> {
    Ok(match kind {
        Kind::Tree => gen_tree(spec)?.to_text(),
        Kind::Unicyclic => gen_unicyclic(spec)?.to_text(),
        Kind::Cactus => gen_cactus(spec)?.to_text(),
        Kind::Arcs => {
            let (dom, arcs) = gen_arcs_raw(spec)?;
            arcs_to_text(dom, &arcs)
        }
    })
}
