//! Independent ground truth: exhaustive k-hop domination and arc piercing,
//! and the quadratic rotate-then-greedy piercing used at mid scale.
//!
//! Nothing here shares code with the linear solvers beyond the graph type,
//! BFS and arc normalization.

use crate::error::{Error, Result};
use crate::graph::{DominatingSet, Graph};
use crate::piercing::{Arc, ArcInstance, CircularDomain, PiercingSet};

/// Size caps for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    pub max_subset_size: usize,
}

impl OracleBudget {
    pub const KHDS: OracleBudget = OracleBudget {
        max_n: 20,
        max_subset_size: 20,
    };
    pub const PIERCING: OracleBudget = OracleBudget {
        max_n: 12,
        max_subset_size: 12,
    };
    pub const QUADRATIC: OracleBudget = OracleBudget {
        max_n: 10_000,
        max_subset_size: 10_000,
    };

    fn check(&self, size: usize) -> Result<()> {
        if size > self.max_n {
            return Err(Error::TooLarge {
                size,
                limit: self.max_n,
            });
        }
        Ok(())
    }
}

/// Visits all `size`-subsets of `0..n` in colexicographic order until `f`
/// returns `true`.
pub fn for_each_combination(n: usize, size: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if size > n {
        return;
    }
    let mut combo: Vec<usize> = (0..size).collect();
    loop {
        if f(&combo) {
            return;
        }
        // colex successor: bump the lowest index that has room
        let mut i = 0;
        while i < size
            && (i + 1 < size && combo[i] + 1 == combo[i + 1] || i + 1 == size && combo[i] + 1 == n)
        {
            i += 1;
        }
        if i == size {
            return;
        }
        combo[i] += 1;
        for (j, c) in combo.iter_mut().enumerate().take(i) {
            *c = j;
        }
    }
}

/// Bitmask of the k-neighborhood of every vertex.
fn reach_masks(g: &Graph, k: usize) -> Vec<u32> {
    (0..g.n())
        .map(|u| {
            g.bfs_distances(&[u])
                .iter()
                .enumerate()
                .filter(|&(_, &d)| d <= k)
                .fold(0u32, |m, (v, _)| m | 1 << v)
        })
        .collect()
}

fn greedy_cover(masks: &[u32], full: u32) -> Vec<usize> {
    let mut covered = 0u32;
    let mut chosen = Vec::new();
    while covered != full {
        let best = (0..masks.len())
            .max_by_key(|&v| ((masks[v] & !covered).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        covered |= masks[best];
        chosen.push(best);
    }
    chosen
}

/// A minimum k-hop dominating set by exhaustive search; `n <= 20`.
pub fn brute_force_khds(g: &Graph, k: usize) -> Result<DominatingSet> {
    OracleBudget::KHDS.check(g.n())?;
    if k == 0 {
        return Err(Error::InvalidK(k));
    }
    let n = g.n();
    let masks = reach_masks(g, k);
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let upper = greedy_cover(&masks, full);
    for size in 1..upper.len() {
        let mut found = None;
        for_each_combination(n, size, |c| {
            if c.iter().fold(0, |m, &v| m | masks[v]) == full {
                found = Some(c.to_vec());
            }
            found.is_some()
        });
        if let Some(set) = found {
            return Ok(DominatingSet::new(set, k));
        }
    }
    Ok(DominatingSet::new(upper, k))
}

/// Every minimum k-hop dominating set; `n <= 20`.
pub fn all_minimum_khds(g: &Graph, k: usize) -> Result<Vec<Vec<usize>>> {
    let opt = brute_force_khds(g, k)?.len();
    let n = g.n();
    let masks = reach_masks(g, k);
    let full = (1u32 << n) - 1;
    let mut all = Vec::new();
    for_each_combination(n, opt, |c| {
        if c.iter().fold(0, |m, &v| m | masks[v]) == full {
            all.push(c.to_vec());
        }
        false
    });
    Ok(all)
}

/// Smallest size of a set whose k-neighborhoods cover `demand` (a vertex
/// mask); `usize::MAX` if impossible. Exhaustive, `n <= 20`.
pub fn brute_force_partial(g: &Graph, k: usize, demand: u32) -> Result<(usize, Vec<Vec<usize>>)> {
    OracleBudget::KHDS.check(g.n())?;
    if demand == 0 {
        return Ok((0, vec![Vec::new()]));
    }
    let n = g.n();
    let masks = reach_masks(g, k);
    for size in 1..=n {
        let mut all = Vec::new();
        for_each_combination(n, size, |c| {
            if c.iter().fold(0, |m, &v| m | masks[v]) & demand == demand {
                all.push(c.to_vec());
            }
            false
        });
        if !all.is_empty() {
            return Ok((size, all));
        }
    }
    Ok((usize::MAX, Vec::new()))
}

fn pierces(dom: CircularDomain, arcs: &[Arc], points: &[usize]) -> bool {
    arcs.iter()
        .all(|a| points.iter().any(|&p| a.contains(dom, p)))
}

/// Distinct ending points of a raw arc family, ascending.
fn ending_points(arcs: &[Arc]) -> Vec<usize> {
    let mut ends: Vec<usize> = arcs.iter().map(|a| a.e).collect();
    ends.sort_unstable();
    ends.dedup();
    ends
}

/// Smallest set of ending points piercing every arc, by subset
/// enumeration in increasing size; at most 12 arcs. Works on raw families.
pub fn brute_force_piercing(dom: CircularDomain, arcs: &[Arc]) -> Result<PiercingSet> {
    OracleBudget::PIERCING.check(arcs.len())?;
    Ok(PiercingSet {
        points: all_minimum_piercings(dom, arcs)?
            .into_iter()
            .next()
            .unwrap_or_default(),
        anchored_distance: None,
    })
}

/// Every minimum piercing set drawn from the ending points.
pub fn all_minimum_piercings(dom: CircularDomain, arcs: &[Arc]) -> Result<Vec<Vec<usize>>> {
    OracleBudget::PIERCING.check(arcs.len())?;
    if arcs.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    let ends = ending_points(arcs);
    for size in 1..=ends.len() {
        let mut all = Vec::new();
        for_each_combination(ends.len(), size, |c| {
            let pts: Vec<usize> = c.iter().map(|&i| ends[i]).collect();
            if pierces(dom, arcs, &pts) {
                all.push(pts);
            }
            false
        });
        if !all.is_empty() {
            return Ok(all);
        }
    }
    unreachable!("all ending points together pierce every arc")
}

/// Rotate-then-greedy: for each candidate first point inside the first arc,
/// cut the circle there and pierce the arcs it misses as line segments.
pub fn quadratic_piercing(inst: &ArcInstance) -> Result<PiercingSet> {
    OracleBudget::QUADRATIC.check(inst.arcs.len())?;
    let dom = inst.domain;
    let n_pos = dom.positions;
    let Some(first) = inst.arcs.first() else {
        let any = inst.pruned.iter().any(|p| p.contains.is_none());
        return Ok(PiercingSet {
            points: if any { vec![0] } else { Vec::new() },
            anchored_distance: None,
        });
    };
    let mut candidates: Vec<usize> = inst
        .arcs
        .iter()
        .flat_map(|a| [a.s, a.e])
        .filter(|&p| first.contains(dom, p))
        .collect();
    candidates.sort_unstable();
    candidates.dedup();

    let mut best: Option<Vec<usize>> = None;
    for &q in &candidates {
        let mut segs: Vec<(i64, i64)> = inst
            .arcs
            .iter()
            .filter(|a| !a.contains(dom, q))
            .map(|a| {
                let s = dom.cw(q, a.s) as i64;
                (s, s + a.len(dom) as i64)
            })
            .collect();
        segs.sort_by_key(|&(_, e)| e);
        let mut pts = vec![q];
        let mut last = i64::MIN;
        for (s, e) in segs {
            if s > last {
                pts.push((q + e as usize) % n_pos);
                last = e;
            }
        }
        if best.as_ref().is_none_or(|b| pts.len() < b.len()) {
            best = Some(pts);
        }
    }
    let mut points = best.unwrap();
    points.sort_unstable();
    points.dedup();
    Ok(PiercingSet {
        points,
        anchored_distance: None,
    })
}
