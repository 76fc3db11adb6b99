//! Minimum piercing of segments on a line and of circular arcs.
//!
//! Positions on the circle are the integers `0..N` in clockwise order. An
//! arc `[s, e]` covers `s, s+1, .., e`, wrapping past `N-1` when `e < s`.
//! After normalization no arc contains another, so sorting by ending point
//! also sorts by starting point, and every start is distinct, as is every end.
//!
//! The linear algorithm follows the successor map `next(p)`: the end of the
//! first arc that starts strictly after `p`. Any minimum piercing set has a
//! point inside the first arc `a_1`; the greedy chain `p, next(p), ..` for a
//! candidate `p` in `a_1` is computed for all candidates at once by a
//! memoized pass over the successor map, then each chain gets at most one
//! extra point for the arcs lying between the reference point and `p`.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The circular domain: `positions` points labelled `0..positions`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircularDomain {
    pub positions: usize,
}

impl CircularDomain {
    /// Clockwise distance from `a` to `b`.
    #[inline]
    pub fn cw(&self, a: usize, b: usize) -> usize {
        (b + self.positions - a) % self.positions
    }

    /// Hop distance on the circle, the shorter way round.
    #[inline]
    pub fn dist(&self, a: usize, b: usize) -> usize {
        let d = self.cw(a, b);
        d.min(self.positions - d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub s: usize,
    pub e: usize,
    pub id: usize,
}

impl Arc {
    pub fn new(s: usize, e: usize, id: usize) -> Self {
        Arc { s, e, id }
    }

    /// Number of steps from start to end; the arc covers `len + 1` positions.
    #[inline]
    pub fn len(&self, dom: CircularDomain) -> usize {
        dom.cw(self.s, self.e)
    }

    #[inline]
    pub fn contains(&self, dom: CircularDomain, p: usize) -> bool {
        dom.cw(self.s, p) <= self.len(dom)
    }

    #[inline]
    pub fn is_full_circle(&self, dom: CircularDomain) -> bool {
        self.len(dom) + 1 >= dom.positions
    }
}

/// An arc dropped during normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pruned {
    pub arc: Arc,
    /// A surviving arc inside the dropped one; `None` for a full-circle arc.
    pub contains: Option<usize>,
}

/// A containment-free family of arcs sorted by ending point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcInstance {
    pub domain: CircularDomain,
    pub arcs: Vec<Arc>,
    pub pruned: Vec<Pruned>,
}

impl ArcInstance {
    /// Reference point: the start of the first arc.
    pub fn mu(&self) -> Option<usize> {
        self.arcs.first().map(|a| a.s)
    }

    /// Whether `p` is the ending point of some arc.
    pub fn in_f(&self, p: usize) -> bool {
        self.arcs.binary_search_by_key(&p, |a| a.e).is_ok()
    }

    /// Whether `points` hit every arc, including the pruned ones.
    pub fn pierced_by(&self, points: &[usize]) -> bool {
        let dom = self.domain;
        let full_circle = self.pruned.iter().any(|p| p.contains.is_none());
        self.arcs
            .iter()
            .all(|a| points.iter().any(|&p| a.contains(dom, p)))
            && (!full_circle || !points.is_empty())
    }

    /// Sub-instance keeping the arcs for which `keep` holds. Any subfamily
    /// of a normalized instance is itself normalized.
    pub fn retain(&self, keep: impl Fn(&Arc) -> bool) -> ArcInstance {
        ArcInstance {
            domain: self.domain,
            arcs: self.arcs.iter().copied().filter(|a| keep(a)).collect(),
            pruned: Vec::new(),
        }
    }

    /// Text form: `N n` then one `s e` line per arc.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.domain.positions, self.arcs.len());
        for a in &self.arcs {
            s.push_str(&format!("{} {}\n", a.s, a.e));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiercingSet {
    /// Chosen positions, ascending.
    pub points: Vec<usize>,
    /// Circular distance from the anchor to the nearest point, when an
    /// anchored variant produced the set.
    pub anchored_distance: Option<usize>,
}

impl PiercingSet {
    fn plain(mut points: Vec<usize>) -> Self {
        points.sort_unstable();
        points.dedup();
        PiercingSet {
            points,
            anchored_distance: None,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Whether every arc of a raw family holds one of `points`. Each arc
/// looks up the first point at or after its start, so the check costs
/// `O((n + |points|) log |points|)`.
pub fn hits_every_arc(dom: CircularDomain, arcs: &[Arc], points: &[usize]) -> bool {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    let Some(&first) = pts.first() else {
        return arcs.is_empty();
    };
    arcs.iter().all(|a| {
        let i = pts.partition_point(|&p| p < a.s);
        let p = pts.get(i).copied().unwrap_or(first);
        a.contains(dom, p)
    })
}

/// Parses the arc file format: header `N n`, then `n` lines `s e`.
pub fn parse_arcs(text: &str) -> Result<(CircularDomain, Vec<Arc>)> {
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let pair = |line: usize, body: &str| -> Result<(usize, usize)> {
        let nums: Vec<_> = body.split_whitespace().map(str::parse::<usize>).collect();
        match nums.as_slice() {
            [Ok(a), Ok(b)] => Ok((*a, *b)),
            _ => Err(Error::Malformed {
                line,
                msg: "expected two non-negative integers".into(),
            }),
        }
    };
    let (hline, header) = rows.next().ok_or(Error::Malformed {
        line: 1,
        msg: "missing header line `N n`".into(),
    })?;
    let (positions, n) = pair(hline, header)?;
    if positions == 0 {
        return Err(Error::Malformed {
            line: hline,
            msg: "domain needs at least one position".into(),
        });
    }
    let mut arcs = Vec::with_capacity(n);
    for (line, body) in rows {
        let (s, e) = pair(line, body)?;
        for p in [s, e] {
            if p >= positions {
                return Err(Error::Malformed {
                    line,
                    msg: format!("position {p} outside 0..{positions}"),
                });
            }
        }
        arcs.push(Arc::new(s, e, arcs.len()));
    }
    if arcs.len() != n {
        return Err(Error::Malformed {
            line: hline,
            msg: format!("declared {n} arcs, found {}", arcs.len()),
        });
    }
    Ok((CircularDomain { positions }, arcs))
}

/// Greedy minimum piercing of line segments sorted by ending point.
pub fn pierce_segments(segments: &[(i64, i64)]) -> Vec<i64> {
    let mut points = Vec::new();
    let mut last: Option<i64> = None;
    for &(s, e) in segments {
        debug_assert!(s <= e);
        if last.is_none_or(|p| s > p) {
            points.push(e);
            last = Some(e);
        }
    }
    points
}

/// Stable counting sort on a key below `range`; falls back to a comparison
/// sort when the key range dwarfs the input.
fn sort_by_small_key<T: Copy>(items: &mut Vec<T>, range: usize, key: impl Fn(&T) -> usize) {
    if range > 8 * items.len() + 64 {
        items.sort_by_key(|t| key(t));
        return;
    }
    let mut count = vec![0usize; range + 1];
    for t in items.iter() {
        count[key(t) + 1] += 1;
    }
    for i in 0..range {
        count[i + 1] += count[i];
    }
    let mut out = items.clone();
    for t in items.iter() {
        let slot = &mut count[key(t)];
        out[*slot] = *t;
        *slot += 1;
    }
    *items = out;
}

/// Drops full-circle arcs and every arc that contains another, then sorts
/// the survivors by ending point. Dropped arcs are listed in input order.
pub fn normalize_arcs(domain: CircularDomain, raw: &[Arc]) -> Result<ArcInstance> {
    if raw.is_empty() {
        return Err(Error::NoArcs);
    }
    let n_pos = domain.positions;
    for a in raw {
        for pos in [a.s, a.e] {
            if pos >= n_pos {
                return Err(Error::PositionOutOfRange {
                    id: a.id,
                    pos,
                    n: n_pos,
                });
            }
        }
    }

    // fate of each raw arc: kept, a full circle, or the raw index of an
    // arc it contains
    const KEPT: usize = usize::MAX;
    const FULL: usize = usize::MAX - 1;
    let mut fate = vec![KEPT; raw.len()];
    let mut by_start: Vec<usize> = Vec::with_capacity(raw.len());
    for (i, a) in raw.iter().enumerate() {
        if a.is_full_circle(domain) {
            fate[i] = FULL;
        } else {
            by_start.push(i);
        }
    }
    sort_by_small_key(&mut by_start, n_pos, |&i| raw[i].s);

    // Sweep the list unrolled over two laps from the right, one group of
    // equal starts at a time, carrying the smallest end seen so far and
    // its arc. Ties go to the arc further right, and inside a group to the
    // lowest index.
    let l = by_start.len();
    let at = |q: usize| {
        let i = by_start[q % l];
        let lap = if q >= l { n_pos } else { 0 };
        (raw[i].s + lap, raw[i].s + raw[i].len(domain) + lap, i)
    };
    let (mut min_end, mut min_arc) = (usize::MAX, KEPT);
    let mut hi = 2 * l;
    while hi > 0 {
        let start = at(hi - 1).0;
        let mut lo = hi - 1;
        while lo > 0 && at(lo - 1).0 == start {
            lo -= 1;
        }
        let (g_end, g_arc) = (lo..hi)
            .map(|q| {
                let (_, e, i) = at(q);
                (e, i)
            })
            .min()
            .expect("groups are nonempty");
        if start < n_pos {
            for q in lo..hi {
                let i = at(q).2;
                if min_end <= g_end {
                    fate[i] = min_arc;
                } else if i != g_arc {
                    fate[i] = g_arc;
                }
            }
        }
        if g_end < min_end {
            (min_end, min_arc) = (g_end, g_arc);
        }
        hi = lo;
    }
    let mut keep: Vec<Arc> = by_start
        .iter()
        .filter(|&&i| fate[i] == KEPT)
        .map(|&i| raw[i])
        .collect();
    sort_by_small_key(&mut keep, n_pos, |a| a.e);
    let pruned = raw
        .iter()
        .zip(&fate)
        .filter(|&(_, &f)| f != KEPT)
        .map(|(a, &f)| Pruned {
            arc: *a,
            contains: (f != FULL).then(|| raw[f].id),
        })
        .collect();
    Ok(ArcInstance {
        domain,
        arcs: keep,
        pruned,
    })
}

/// Successor structure over the distinct endpoint positions, expressed in
/// offsets clockwise from the reference point `mu`.
#[derive(Clone, Debug)]
pub struct NextMap {
    n_pos: usize,
    mu: usize,
    /// Distinct endpoint offsets, ascending.
    offs: Vec<usize>,
    is_end: Vec<bool>,
    /// Index into `offs` of `next(p)`.
    next: Vec<usize>,
    /// Clockwise distance travelled from `p` to `next(p)`; may exceed a lap.
    disp: Vec<usize>,
    /// Arc start offsets in arc order (ascending) and arc lengths.
    start_offs: Vec<usize>,
    lens: Vec<usize>,
    /// Index into `offs` of each arc's ending point.
    end_idx: Vec<usize>,
}

impl NextMap {
    pub fn position(&self, idx: usize) -> usize {
        (self.offs[idx] + self.mu) % self.n_pos
    }

    pub fn len(&self) -> usize {
        self.offs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offs.is_empty()
    }

    /// `(p, next(p))` as positions, for every endpoint `p`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .map(|i| (self.position(i), self.position(self.next[i])))
            .collect()
    }

    /// `next(p)` for an endpoint position `p`.
    pub fn get(&self, p: usize) -> Option<usize> {
        let off = (p + self.n_pos - self.mu) % self.n_pos;
        self.offs
            .binary_search(&off)
            .ok()
            .map(|i| self.position(self.next[i]))
    }

    /// First arc starting strictly after offset `o`: its end as an
    /// index into `offs` and the unrolled offset of that end.
    fn first_after(&self, o: usize) -> (usize, usize) {
        let j = self.start_offs.partition_point(|&s| s <= o);
        let (j, start) = if j == self.start_offs.len() {
            (0, self.n_pos)
        } else {
            (j, self.start_offs[j])
        };
        (self.end_idx[j], start + self.lens[j])
    }
}

/// Two-pointer sweep computing `next(p)` for every endpoint `p`.
pub fn compute_next(inst: &ArcInstance) -> NextMap {
    let dom = inst.domain;
    let n_pos = dom.positions;
    let mu = inst.mu().unwrap_or(0);
    let arcs = &inst.arcs;
    let off = |p: usize| dom.cw(mu, p);

    let start_offs: Vec<usize> = arcs.iter().map(|a| off(a.s)).collect();
    let lens: Vec<usize> = arcs.iter().map(|a| a.len(dom)).collect();
    debug_assert!(start_offs.windows(2).all(|w| w[0] < w[1]));

    // merge starts and ends (both ascending in offset order) into the
    // distinct endpoint list
    let end_offs: Vec<usize> = start_offs
        .iter()
        .zip(&lens)
        .map(|(s, l)| (s + l) % n_pos)
        .collect();
    let rot = end_offs
        .iter()
        .enumerate()
        .min_by_key(|&(_, &e)| e)
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut offs = Vec::with_capacity(2 * arcs.len());
    let mut is_end = Vec::with_capacity(2 * arcs.len());
    let mut end_idx = vec![0usize; arcs.len()];
    let (mut si, mut ei) = (0, 0);
    while si < arcs.len() || ei < arcs.len() {
        let s = start_offs.get(si).copied().unwrap_or(usize::MAX);
        let ej = (rot + ei) % arcs.len().max(1);
        let e = if ei < arcs.len() {
            end_offs[ej]
        } else {
            usize::MAX
        };
        let o = s.min(e);
        if offs.last() != Some(&o) {
            offs.push(o);
            is_end.push(false);
        }
        if s == o {
            si += 1;
        }
        if e == o {
            *is_end.last_mut().unwrap() = true;
            end_idx[ej] = offs.len() - 1;
            ei += 1;
        }
    }

    // sweep: the first arc starting strictly after each endpoint
    let mut next = vec![0usize; offs.len()];
    let mut disp = vec![0usize; offs.len()];
    let mut j = 0;
    for (i, &o) in offs.iter().enumerate() {
        while j < arcs.len() && start_offs[j] <= o {
            j += 1;
        }
        let (arc, start) = if j == arcs.len() {
            (0, n_pos)
        } else {
            (j, start_offs[j])
        };
        next[i] = end_idx[arc];
        disp[i] = start + lens[arc] - o;
    }

    NextMap {
        n_pos,
        mu,
        offs,
        is_end,
        next,
        disp,
        start_offs,
        lens,
        end_idx,
    }
}

/// Memoized greedy chains toward the reference point: for each endpoint,
/// the number of chain points before the chain passes `mu` again, and the
/// last such point.
struct Chains {
    len: Vec<usize>,
    last: Vec<usize>,
}

fn chains(map: &NextMap) -> Chains {
    let m = map.len();
    let mut len = vec![1usize; m];
    let mut last: Vec<usize> = (0..m).collect();
    for i in (0..m).rev() {
        if map.offs[i] + map.disp[i] < map.n_pos {
            let j = map.next[i];
            len[i] = 1 + len[j];
            last[i] = last[j];
        }
    }
    Chains { len, last }
}

/// Linear-time minimum piercing set of a normalized arc family.
pub fn pierce_arcs(inst: &ArcInstance) -> PiercingSet {
    if inst.arcs.is_empty() {
        // only full-circle arcs, if any, remain to be hit
        let any = inst.pruned.iter().any(|p| p.contains.is_none());
        return PiercingSet::plain(if any { vec![0] } else { Vec::new() });
    }
    let map = compute_next(inst);
    let ch = chains(&map);
    let n_pos = map.n_pos;
    let first_len = map.lens[0];

    let mut best: Option<(usize, usize, bool)> = None;
    for p in 0..map.len() {
        if map.offs[p] > first_len {
            break;
        }
        let w = ch.last[p];
        let extra = map.offs[w] + map.disp[w] < map.offs[p] + n_pos;
        let size = ch.len[p] + extra as usize;
        if best.is_none_or(|b| size < b.1) {
            best = Some((p, size, extra));
        }
    }
    let (p, _, extra) = best.expect("the first arc holds its own endpoints");

    let mut points = Vec::with_capacity(ch.len[p] + 1);
    // a chain may start at a starting point; slide it to the next ending point
    let first = (p..map.len())
        .find(|&i| map.is_end[i])
        .expect("the first arc's end lies after any start inside it");
    points.push(map.position(first));
    let mut cur = p;
    while map.offs[cur] + map.disp[cur] < n_pos {
        cur = map.next[cur];
        points.push(map.position(cur));
    }
    if extra {
        points.push(map.position(map.next[cur]));
    }
    PiercingSet::plain(points)
}

/// Smallest piercing sets that must contain a given point, for many points
/// at once. Chains are counted with an offline walk over the successor
/// forest.
struct ForcedSizes<'a> {
    map: &'a NextMap,
    ch: Chains,
}

enum Pending {
    Done(usize),
    /// `base` plus the chain points from `node` with offset below `limit`.
    Count {
        base: usize,
        node: usize,
        limit: usize,
    },
}

impl<'a> ForcedSizes<'a> {
    fn new(map: &'a NextMap) -> Self {
        ForcedSizes {
            ch: chains(map),
            map,
        }
    }

    fn plan(&self, o: usize) -> Pending {
        let map = self.map;
        let n_pos = map.n_pos;
        let (z1, end1) = map.first_after(o);
        if end1 >= o + n_pos {
            return Pending::Done(1);
        }
        if end1 < n_pos {
            let w = self.ch.last[z1];
            let tw = map.offs[w] + map.disp[w];
            if tw < o + n_pos {
                Pending::Count {
                    base: 1 + self.ch.len[z1],
                    node: map.next[w],
                    limit: o,
                }
            } else {
                Pending::Done(1 + self.ch.len[z1])
            }
        } else {
            Pending::Count {
                base: 1,
                node: z1,
                limit: o,
            }
        }
    }

    /// Size of the smallest piercing set containing each offset in `offs`.
    fn sizes(&self, offs: &[usize]) -> Vec<usize> {
        let map = self.map;
        let m = map.len();
        let plans: Vec<Pending> = offs.iter().map(|&o| self.plan(o)).collect();
        let mut out = vec![0usize; offs.len()];
        let mut queries: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (qi, p) in plans.iter().enumerate() {
            match *p {
                Pending::Done(s) => out[qi] = s,
                Pending::Count { node, .. } => queries[node].push(qi),
            }
        }
        // forest: parent = next while the chain stays inside the first lap
        let mut head = vec![usize::MAX; m];
        let mut sibling = vec![usize::MAX; m];
        let mut roots = Vec::new();
        #[allow(clippy::needless_range_loop)]
        for i in 0..m {
            if map.offs[i] + map.disp[i] < map.n_pos {
                let p = map.next[i];
                sibling[i] = head[p];
                head[p] = i;
            } else {
                roots.push(i);
            }
        }
        let mut path: Vec<usize> = Vec::new();
        let mut stack: Vec<(usize, bool)> = Vec::new();
        for r in roots {
            stack.push((r, false));
            while let Some((u, done)) = stack.pop() {
                if done {
                    path.pop();
                    continue;
                }
                path.push(map.offs[u]);
                for &qi in &queries[u] {
                    if let Pending::Count { base, limit, .. } = plans[qi] {
                        // path offsets decrease toward the top of the stack
                        let idx = path.partition_point(|&x| x >= limit);
                        out[qi] = base + (path.len() - idx);
                    }
                }
                stack.push((u, true));
                let mut c = head[u];
                while c != usize::MAX {
                    stack.push((c, false));
                    c = sibling[c];
                }
            }
        }
        out
    }

    /// Materializes the greedy set forced to contain offset `o`.
    fn materialize(&self, o: usize) -> Vec<usize> {
        let map = self.map;
        let n_pos = map.n_pos;
        let mut points = vec![(o + map.mu) % n_pos];
        let (mut cur, mut at) = map.first_after(o);
        while at < o + n_pos {
            points.push(map.position(cur));
            at += map.disp[cur];
            cur = map.next[cur];
        }
        points
    }
}

/// Minimum piercing set, restricted to the given candidate positions for
/// the point nearest `rho`, that minimizes the distance from `rho` to the
/// set. Ties prefer the clockwise side, then the lower position.
pub(crate) fn anchored_with_candidates(
    inst: &ArcInstance,
    rho: usize,
    candidates: &[usize],
) -> PiercingSet {
    let dom = inst.domain;
    if inst.arcs.is_empty() {
        return PiercingSet {
            points: Vec::new(),
            anchored_distance: None,
        };
    }
    let map = compute_next(inst);
    let forced = ForcedSizes::new(&map);
    let offs: Vec<usize> = candidates.iter().map(|&q| dom.cw(map.mu, q)).collect();
    let sizes = forced.sizes(&offs);
    let opt = *sizes.iter().min().expect("at least one candidate");
    let pick = (0..candidates.len())
        .filter(|&i| sizes[i] == opt)
        .min_by_key(|&i| {
            let q = candidates[i];
            let d = dom.dist(rho, q);
            (d, dom.cw(rho, q) != d, q)
        })
        .unwrap();
    let mut set = PiercingSet::plain(forced.materialize(offs[pick]));
    set.anchored_distance = set.points.iter().map(|&p| dom.dist(rho, p)).min();
    set
}

/// Minimum piercing set of ending points whose distance to `rho` is as
/// small as possible among all minimum piercing sets of ending points.
pub fn pierce_arcs_anchored(inst: &ArcInstance, rho: usize) -> Result<PiercingSet> {
    if rho >= inst.domain.positions {
        return Err(Error::RhoNotInDomain(rho));
    }
    let ends: Vec<usize> = inst.arcs.iter().map(|a| a.e).collect();
    Ok(anchored_with_candidates(inst, rho, &ends))
}

/// Arcs that an extra point at distance `i` from `rho`, reaching the circle
/// through `rho`, would pierce: arcs containing `rho` with both endpoints at
/// least `i` away from it.
pub fn far_reaching(inst: &ArcInstance, rho: usize, i: usize) -> impl Fn(&Arc) -> bool + '_ {
    let dom = inst.domain;
    move |a: &Arc| a.contains(dom, rho) && dom.cw(a.s, rho) >= i && dom.cw(rho, a.e) >= i
}

/// Largest `i` in `range` for which the arcs outside `B_i` can be pierced
/// with `target` points, with such a set. `extra(i)` reports arcs kept
/// outside the instance (full circles) that still need some point. The
/// remaining family only grows as `i` grows, so the search is a bisection.
pub(crate) fn reduced_in_range(
    inst: &ArcInstance,
    rho: usize,
    range: RangeInclusive<usize>,
    target: usize,
    extra: &dyn Fn(usize) -> bool,
) -> Option<(usize, PiercingSet)> {
    let attempt = |i: usize| {
        let rest = inst.retain(|a| !far_reaching(inst, rho, i)(a));
        let mut p = pierce_arcs(&rest);
        if p.is_empty() && extra(i) {
            p.points.push(rho);
        }
        (p.len() <= target).then_some(p)
    };
    let (mut lo, mut hi) = (*range.start(), *range.end());
    if lo > hi {
        return None;
    }
    let mut best = (lo, attempt(lo)?);
    lo += 1;
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        match attempt(mid) {
            Some(p) => {
                best = (mid, p);
                lo = mid + 1;
            }
            None => hi = mid - 1,
        }
    }
    Some(best)
}

/// For `1 <= i < k`, finds the largest `i` such that the arcs not in `B_i`
/// admit a piercing set of size `m - 1`, where `m` is the optimum.
pub fn pierce_arcs_reduced(
    inst: &ArcInstance,
    rho: usize,
    k: usize,
    m: usize,
) -> Result<Option<(usize, PiercingSet)>> {
    if rho >= inst.domain.positions {
        return Err(Error::RhoNotInDomain(rho));
    }
    let expected = pierce_arcs(inst).len();
    if m != expected {
        return Err(Error::InvalidM { given: m, expected });
    }
    if m == 0 || k < 2 {
        return Ok(None);
    }
    // full circles sit outside the instance; test them against B_i directly
    let full: Vec<Arc> = inst
        .pruned
        .iter()
        .filter(|p| p.contains.is_none())
        .map(|p| p.arc)
        .collect();
    let extra = |i: usize| full.iter().any(|a| !far_reaching(inst, rho, i)(a));
    Ok(reduced_in_range(inst, rho, 1..=k - 1, m - 1, &extra))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n_pos: usize, arcs: &[(usize, usize)]) -> ArcInstance {
        let raw: Vec<_> = arcs
            .iter()
            .enumerate()
            .map(|(i, &(s, e))| Arc::new(s, e, i))
            .collect();
        normalize_arcs(CircularDomain { positions: n_pos }, &raw).unwrap()
    }

    #[test]
    fn segments() {
        assert_eq!(pierce_segments(&[(1, 3)]), vec![3]);
        assert_eq!(
            pierce_segments(&[(1, 3), (2, 5), (4, 6), (7, 8)]),
            vec![3, 6, 8]
        );
        assert_eq!(pierce_segments(&[]), Vec::<i64>::new());
        let disjoint: Vec<_> = (0..10).map(|i| (3 * i, 3 * i + 1)).collect();
        assert_eq!(pierce_segments(&disjoint).len(), 10);
    }

    #[test]
    fn normalization_drops_containing_arcs() {
        let i = inst(10, &[(2, 3), (1, 5), (8, 1), (9, 0)]);
        let ids: Vec<_> = i.arcs.iter().map(|a| a.id).collect();
        assert_eq!(ids, vec![3, 0]);
        let pruned: Vec<_> = i.pruned.iter().map(|p| (p.arc.id, p.contains)).collect();
        assert_eq!(pruned, vec![(1, Some(0)), (2, Some(3))]);
    }

    #[test]
    fn normalization_full_circle_and_duplicates() {
        let i = inst(6, &[(3, 2), (1, 1), (1, 1)]);
        assert_eq!(i.arcs, vec![Arc::new(1, 1, 1)]);
        let pruned: Vec<_> = i.pruned.iter().map(|p| (p.arc.id, p.contains)).collect();
        assert_eq!(pruned, vec![(0, None), (2, Some(1))]);
        assert!(matches!(
            normalize_arcs(CircularDomain { positions: 3 }, &[]),
            Err(Error::NoArcs)
        ));
    }

    #[test]
    fn next_on_two_disjoint_arcs() {
        let i = inst(6, &[(0, 1), (3, 4)]);
        let map = compute_next(&i);
        assert_eq!(map.get(1), Some(4));
        assert_eq!(map.get(4), Some(1));
        assert_eq!(map.get(0), Some(4));
        assert_eq!(map.get(3), Some(1));
    }

    #[test]
    fn next_on_single_arc() {
        let i = inst(7, &[(5, 1)]);
        let map = compute_next(&i);
        assert_eq!(map.get(1), Some(1));
        assert_eq!(map.get(5), Some(1));
    }

    #[test]
    fn pierce_small_cases() {
        let disjoint = inst(9, &[(0, 1), (3, 4), (6, 7)]);
        let p = pierce_arcs(&disjoint);
        assert_eq!(p.points, vec![1, 4, 7]);
        let common = inst(12, &[(10, 3), (0, 5), (2, 8), (11, 2)]);
        assert_eq!(pierce_arcs(&common).len(), 1);
        let empty = inst(5, &[(2, 1)]);
        assert!(empty.arcs.is_empty());
        // the full circle still needs one point
        assert_eq!(pierce_arcs(&empty).points, vec![0]);
    }

    #[test]
    fn anchored_prefers_the_nearest_set() {
        // two arcs, each pierced by its own point
        let i = inst(12, &[(0, 2), (6, 8)]);
        let p = pierce_arcs_anchored(&i, 8).unwrap();
        assert_eq!(p.anchored_distance, Some(0));
        assert!(p.points.contains(&8));
        assert!(pierce_arcs_anchored(&i, 12).is_err());
    }

    #[test]
    fn reduced_rejects_wrong_m() {
        let i = inst(12, &[(0, 2), (6, 8)]);
        assert_eq!(
            pierce_arcs_reduced(&i, 1, 3, 1),
            Err(Error::InvalidM {
                given: 1,
                expected: 2
            })
        );
        // the arc around 1 has both ends one step away: removable for i = 1
        let r = pierce_arcs_reduced(&i, 1, 3, 2).unwrap().unwrap();
        assert_eq!(r.0, 1);
        assert_eq!(r.1.len(), 1);
    }
}
