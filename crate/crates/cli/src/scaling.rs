//! Doubling ladders: median wall time per size and the ratio between
//! consecutive sizes.

use std::fmt::{self, Write as _};
use std::time::Instant;

use khds_core::{
    gen_arcs_raw, gen_cactus, gen_tree, gen_unicyclic, hits_every_arc, normalize_arcs, pierce_arcs,
    verify_khds, Arc, CircularDomain, GenSpec, Graph, Order,
};
use serde::{Deserialize, Serialize};

use crate::commands::{solve_graph, Kind};
use crate::error::{CliError, CliResult};

/// Largest tolerated time ratio between consecutive doublings.
pub const RATIO_LIMIT: f64 = 2.5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub kind: Kind,
    /// Sizes are `2^e` for each exponent.
    pub exponents: Vec<u32>,
    /// One instance per seed, `seed..seed + runs`.
    pub runs: usize,
    pub seed: u64,
    pub k: usize,
    pub order: Order,
}

impl Ladder {
    pub fn new(kind: Kind, from: u32, to: u32) -> Self {
        Ladder {
            kind,
            exponents: (from..=to).collect(),
            runs: 5,
            seed: 0,
            k: 2,
            order: Order::Canonical,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub median_ns: u64,
    /// Against the previous row; absent on the first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchTable {
    pub kind: Kind,
    pub order: Order,
    pub k: usize,
    pub runs: usize,
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    pub fn max_ratio(&self) -> Option<f64> {
        self.rows.iter().filter_map(|r| r.ratio).reduce(f64::max)
    }

    pub fn any_flagged(&self) -> bool {
        self.rows.iter().any(|r| r.flagged)
    }
}

impl fmt::Display for BenchTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = match self.order {
            Order::Shuffled => "shuffled",
            Order::Canonical => "canonical",
        };
        let mut out = format!(
            "# kind={} order={order} k={} runs={}\n",
            self.kind, self.k, self.runs
        );
        let with_ratio = self.rows.len() > 1;
        out.push_str(if with_ratio {
            "n\tmedian_ms\tratio\n"
        } else {
            "n\tmedian_ms\n"
        });
        for r in &self.rows {
            let _ = write!(out, "{}\t{:.3}", r.n, r.median_ns as f64 / 1e6);
            if with_ratio {
                match r.ratio {
                    Some(x) => {
                        let _ = write!(out, "\t{x:.2}{}", if r.flagged { " !" } else { "" });
                    }
                    None => out.push_str("\t-"),
                }
            }
            out.push('\n');
        }
        f.write_str(&out)
    }
}

pub enum Instance {
    Graph(Graph),
    Arcs(CircularDomain, Vec<Arc>),
}

pub fn instance(kind: Kind, n: usize, seed: u64, order: Order) -> CliResult<Instance> {
    let mut spec = GenSpec::new(n, seed);
    spec.order = order;
    Ok(match kind {
        Kind::Tree => Instance::Graph(gen_tree(&spec)?),
        Kind::Unicyclic => Instance::Graph(gen_unicyclic(&spec)?),
        Kind::Cactus => {
            spec.cycle_count = n / 8;
            Instance::Graph(gen_cactus(&spec)?)
        }
        Kind::Arcs => {
            let (dom, arcs) = gen_arcs_raw(&spec)?;
            Instance::Arcs(dom, arcs)
        }
    })
}

/// Times one solve, then checks the answer outside the timed region.
pub fn time_solve(inst: &Instance, k: usize) -> CliResult<u64> {
    match inst {
        Instance::Graph(g) => {
            let start = Instant::now();
            let (_, dom) = solve_graph(g, k)?;
            let ns = start.elapsed().as_nanos() as u64;
            if !verify_khds(g, &dom)?.covered {
                return Err(CliError::Invariant(
                    "benchmark solve is not covering".into(),
                ));
            }
            Ok(ns)
        }
        Instance::Arcs(dom, arcs) => {
            let start = Instant::now();
            let set = pierce_arcs(&normalize_arcs(*dom, arcs)?);
            let ns = start.elapsed().as_nanos() as u64;
            if !hits_every_arc(*dom, arcs, &set.points) {
                return Err(CliError::Invariant(
                    "benchmark piercing misses an arc".into(),
                ));
            }
            Ok(ns)
        }
    }
}

fn median(mut xs: Vec<u64>) -> u64 {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

pub fn run_ladder(ladder: &Ladder) -> CliResult<BenchTable> {
    if ladder.runs == 0 || ladder.exponents.is_empty() {
        return Err(CliError::Usage(
            "a ladder needs at least one size and one run".into(),
        ));
    }
    // Untimed warm-up, then the runs go round-robin over the sizes so a
    // burst of machine noise lands on every size rather than on one.
    let first = 1usize << ladder.exponents[0];
    time_solve(&instance(ladder.kind, first, ladder.seed, ladder.order)?, ladder.k)?;
    let mut times = vec![Vec::with_capacity(ladder.runs); ladder.exponents.len()];
    for r in 0..ladder.runs as u64 {
        for (slot, &e) in times.iter_mut().zip(&ladder.exponents) {
            let inst = instance(ladder.kind, 1usize << e, ladder.seed + r, ladder.order)?;
            slot.push(time_solve(&inst, ladder.k)?);
        }
    }
    let mut rows: Vec<BenchRow> = Vec::with_capacity(ladder.exponents.len());
    for (t, &e) in times.into_iter().zip(&ladder.exponents) {
        let median_ns = median(t).max(1);
        let ratio = rows.last().map(|p| median_ns as f64 / p.median_ns as f64);
        rows.push(BenchRow {
            n: 1usize << e,
            median_ns,
            ratio,
            flagged: ratio.is_some_and(|x| x > RATIO_LIMIT),
        });
    }
    Ok(BenchTable {
        kind: ladder.kind,
        order: ladder.order,
        k: ladder.k,
        runs: ladder.runs,
        rows,
    })
}
