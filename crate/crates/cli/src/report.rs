//! Report types printed by the subcommands. The JSON field names are the
//! stable schema documented in the README.

use std::fmt::{self, Write as _};

use khds_core::{Coverage, GraphClass};
use serde::{Deserialize, Serialize};

/// Result of an optional cross-check against a reference solver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    /// `brute_force` or `quadratic`.
    pub method: String,
    pub size: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub n: usize,
    pub m: usize,
    pub class: GraphClass,
    pub k: usize,
    pub size: usize,
    pub members: Vec<usize>,
    pub coverage: Coverage,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ns: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PierceReport {
    pub positions: usize,
    pub arcs: usize,
    /// Arcs dropped during normalization: full circles and arcs that
    /// contain another arc.
    pub pruned: usize,
    pub size: usize,
    pub points: Vec<usize>,
    pub pierces_all: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ns: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub k: usize,
    pub size: usize,
    pub coverage: Coverage,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

fn oracle_line(out: &mut String, o: &Option<OracleCheck>) {
    if let Some(o) = o {
        let verdict = if o.agrees { "agrees" } else { "DISAGREES" };
        let _ = writeln!(out, "# oracle={} size={} {verdict}", o.method, o.size);
    }
}

fn time_suffix(ns: Option<u64>) -> String {
    ns.map(|t| format!(" time_ns={t}")).unwrap_or_default()
}

/// Text form: a commented header, `size=<c>`, then one member per line.
/// The output doubles as a set file for `verify`.
impl fmt::Display for SolveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = format!(
            "# class={} n={} m={} k={} covered={} max_dist={}{}\n",
            self.class,
            self.n,
            self.m,
            self.k,
            self.coverage.covered,
            self.coverage.max_dist,
            time_suffix(self.wall_time_ns)
        );
        oracle_line(&mut out, &self.oracle);
        let _ = writeln!(out, "size={}", self.size);
        for v in &self.members {
            let _ = writeln!(out, "{v}");
        }
        f.write_str(&out)
    }
}

impl fmt::Display for PierceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = format!(
            "# positions={} arcs={} pruned={} pierces_all={}{}\n",
            self.positions,
            self.arcs,
            self.pruned,
            self.pierces_all,
            time_suffix(self.wall_time_ns)
        );
        oracle_line(&mut out, &self.oracle);
        let _ = writeln!(out, "size={}", self.size);
        for p in &self.points {
            let _ = writeln!(out, "{p}");
        }
        f.write_str(&out)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = format!(
            "covered={} max_dist={} size={} k={}\n",
            self.coverage.covered, self.coverage.max_dist, self.size, self.k
        );
        if let Some(w) = self.coverage.witness {
            let _ = writeln!(out, "witness={w}");
        }
        oracle_line(&mut out, &self.oracle);
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SolveReport {
        SolveReport {
            n: 5,
            m: 4,
            class: GraphClass::Tree,
            k: 2,
            size: 1,
            members: vec![2],
            coverage: Coverage {
                covered: true,
                witness: None,
                max_dist: 2,
            },
            wall_time_ns: Some(1234),
            oracle: None,
        }
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<SolveReport>(&text).unwrap(), r);
        assert!(!text.contains("oracle"));
    }

    #[test]
    fn text_layout() {
        let mut r = sample();
        r.wall_time_ns = None;
        assert_eq!(
            r.to_string(),
            "# class=tree n=5 m=4 k=2 covered=true max_dist=2\nsize=1\n2\n"
        );
    }
}
