use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use khds_cli::{
    cmd_gen, cmd_pierce, cmd_solve, cmd_verify, exit, run_ladder, CliError, CliResult, Kind,
    Ladder, Options,
};
use khds_core::{GenSpec, Order};
use serde::Serialize;

/// Minimum k-hop dominating sets of trees, unicyclic graphs and cacti.
#[derive(Parser)]
#[command(name = "khds", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve a graph file ("-" reads standard input).
    Solve {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
        /// Cross-check the size against a reference solver (small n only).
        #[arg(long)]
        oracle: bool,
        /// Include the solver wall time in the report.
        #[arg(long)]
        time: bool,
    },
    /// Minimum piercing set of an arc file.
    Pierce {
        arcs: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        time: bool,
    },
    /// Check that a set file k-hop dominates a graph file.
    Verify {
        graph: PathBuf,
        set: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
        /// Also report the optimum size (small n only).
        #[arg(long)]
        oracle: bool,
    },
    /// Write a seeded random instance to standard output.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Unicyclic cycle length; 0 picks one at random.
        #[arg(long, default_value_t = 0)]
        cycle_len: usize,
        /// Number of cactus cycles.
        #[arg(long, default_value_t = 0)]
        cycles: usize,
        #[arg(long, default_value_t = 7)]
        max_cycle_len: usize,
        /// Longest arc; 0 means n.
        #[arg(long, default_value_t = 0)]
        max_radius: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::Shuffled)]
        order: OrderArg,
    },
    /// Median solve time over a doubling ladder of sizes 2^from..=2^to.
    Bench {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 16)]
        from: u32,
        #[arg(long, default_value_t = 22)]
        to: u32,
        /// Instances per size; the median is reported.
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::Canonical)]
        order: OrderArg,
        #[arg(long)]
        json: bool,
    },
}

/// Instance labelling: `shuffled` draws random vertex labels, `canonical`
/// numbers vertices in DFS preorder and sorts arcs clockwise.
#[derive(Clone, Copy, clap::ValueEnum)]
enum OrderArg {
    Shuffled,
    Canonical,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Shuffled => Order::Shuffled,
            OrderArg::Canonical => Order::Canonical,
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    let io = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(io)
}

fn emit<T: Serialize + std::fmt::Display>(report: &T, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string(report).expect("reports serialize")
        );
    } else {
        print!("{report}");
    }
}

fn run(cmd: Cmd) -> CliResult<u8> {
    match cmd {
        Cmd::Solve {
            graph,
            k,
            json,
            oracle,
            time,
        } => {
            let r = cmd_solve(&read(&graph)?, k, Options { oracle, time })?;
            emit(&r, json);
            Ok(match r.oracle {
                Some(o) if !o.agrees => exit::INVARIANT,
                _ => exit::OK,
            })
        }
        Cmd::Pierce {
            arcs,
            json,
            oracle,
            time,
        } => {
            let r = cmd_pierce(&read(&arcs)?, Options { oracle, time })?;
            emit(&r, json);
            Ok(match r.oracle {
                Some(o) if !o.agrees => exit::INVARIANT,
                _ => exit::OK,
            })
        }
        Cmd::Verify {
            graph,
            set,
            k,
            json,
            oracle,
        } => {
            let r = cmd_verify(&read(&graph)?, &read(&set)?, k, oracle)?;
            emit(&r, json);
            Ok(if r.coverage.covered {
                exit::OK
            } else {
                exit::INPUT
            })
        }
        Cmd::Gen {
            kind,
            n,
            seed,
            cycle_len,
            cycles,
            max_cycle_len,
            max_radius,
            order,
        } => {
            let spec = GenSpec {
                n,
                seed,
                cycle_len,
                cycle_count: cycles,
                max_cycle_len,
                max_radius,
                order: order.into(),
            };
            print!("{}", cmd_gen(kind, &spec)?);
            Ok(exit::OK)
        }
        Cmd::Bench {
            kind,
            from,
            to,
            runs,
            seed,
            k,
            order,
            json,
        } => {
            if from > to || to > 30 {
                return Err(CliError::Usage(format!("bad ladder 2^{from}..2^{to}")));
            }
            let ladder = Ladder {
                kind,
                exponents: (from..=to).collect(),
                runs,
                seed,
                k,
                order: order.into(),
            };
            let table = run_ladder(&ladder)?;
            emit(&table, json);
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::INPUT
            } else {
                exit::OK
            });
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("khds: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
