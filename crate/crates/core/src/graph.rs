//! Undirected graphs, the edge-list text format, class detection and the
//! BFS coverage certificate shared by every solver.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple undirected graph in compressed adjacency form. Vertex ids are
/// dense `0..n`; neighbor order follows edge insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list without validation beyond bounds.
    /// Callers that accept untrusted input go through [`parse_graph`] or
    /// [`Graph::try_from_edges`].
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut degree = vec![0usize; n + 1];
        for &(u, v) in edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for u in 0..n {
            offsets[u + 1] = offsets[u] + degree[u];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0usize; offsets[n]];
        for &(u, v) in edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        Graph { offsets, targets }
    }

    /// Validating constructor: rejects self-loops, parallel edges, out of
    /// range ids and disconnected graphs.
    pub fn try_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            let line = i + 2;
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { line, v: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line, v: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { line, u, v });
            }
        }
        if n == 0 {
            return Err(Error::Malformed {
                line: 1,
                msg: "graph must have at least one vertex".into(),
            });
        }
        let g = Graph::from_edges(n, edges);
        g.check_connected()?;
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    /// Each undirected edge once, as `(min, max)`, in adjacency order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Sorted adjacency lists, used to compare graphs independent of edge order.
    pub fn canonical_adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.n())
            .map(|u| {
                let mut row = self.neighbors(u).to_vec();
                row.sort_unstable();
                row
            })
            .collect()
    }

    /// Hop distances from a set of sources; `usize::MAX` marks unreachable.
    pub fn bfs_distances(&self, sources: &[usize]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::with_capacity(self.n());
        for &s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u] + 1;
            for &v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = du;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    fn check_connected(&self) -> Result<()> {
        let dist = self.bfs_distances(&[0]);
        match dist.iter().position(|&d| d == usize::MAX) {
            Some(unreached) => Err(Error::Disconnected { unreached }),
            None => Ok(()),
        }
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Induced subgraph on `vertices`, relabelled to `0..vertices.len()` in
    /// the given order. Returns the graph and the local→global map.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = std::collections::HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            local.insert(v, i);
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                if let Some(&j) = local.get(w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        (Graph::from_edges(vertices.len(), &edges), vertices.to_vec())
    }
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`.
/// Blank lines and anything after `#` are ignored.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(Error::Malformed {
        line: 1,
        msg: "missing header line `n m`".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;
    if n == 0 {
        return Err(Error::Malformed {
            line: hline,
            msg: "graph must have at least one vertex".into(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(Error::Malformed {
                line,
                msg: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, body)?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { line, v: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { line, v: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge { line, u, v });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Malformed {
            line: text.lines().count().max(1),
            msg: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    let g = Graph::from_edges(n, &edges);
    g.check_connected()?;
    Ok(g)
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Malformed {
            line,
            msg: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Malformed {
            line,
            msg: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Malformed {
            line,
            msg: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Tree,
    Unicyclic,
    Cactus,
    Other,
}

impl std::fmt::Display for GraphClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GraphClass::Tree => "tree",
            GraphClass::Unicyclic => "unicyclic",
            GraphClass::Cactus => "cactus",
            GraphClass::Other => "other",
        })
    }
}

/// Classifies a connected graph. Cactus detection walks each back edge's
/// tree path and fails as soon as an edge is claimed by a second cycle, so
/// the total work is bounded by `n + m`.
pub fn classify(g: &Graph) -> GraphClass {
    let (n, m) = (g.n(), g.m());
    if m + 1 == n {
        return GraphClass::Tree;
    }
    if m == n {
        return GraphClass::Unicyclic;
    }
    // a cactus has at most floor(3(n-1)/2) edges
    if 2 * m > 3 * (n - 1) {
        return GraphClass::Other;
    }

    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    // on_cycle[v]: the tree edge (v, parent[v]) already lies on a cycle
    let mut on_cycle = vec![false; n];
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    depth[0] = 0;
    while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
        let nbrs = g.neighbors(u);
        if *idx == nbrs.len() {
            stack.pop();
            continue;
        }
        let v = nbrs[*idx];
        *idx += 1;
        if depth[v] == usize::MAX {
            depth[v] = depth[u] + 1;
            parent[v] = u;
            stack.push((v, 0));
        } else if v != parent[u] && depth[v] < depth[u] {
            let mut w = u;
            while w != v {
                if on_cycle[w] {
                    return GraphClass::Other;
                }
                on_cycle[w] = true;
                w = parent[w];
            }
        }
    }
    GraphClass::Cactus
}

/// The unique cycle of a unicyclic graph and the trees hanging off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    /// Cycle vertices in traversal order, starting at the lowest id and
    /// heading toward its lower-id cycle neighbor.
    pub cycle: Vec<usize>,
    /// `pendants[i]`: non-root vertices of the tree rooted at `cycle[i]`.
    pub pendants: Vec<Vec<usize>>,
    /// For every vertex, the index into `cycle` of the tree containing it.
    pub owner: Vec<usize>,
}

/// Cycle vertex set of a graph with exactly one cycle, by peeling leaves.
pub(crate) fn cycle_mask(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut alive = vec![true; n];
    let mut queue: Vec<usize> = (0..n).filter(|&u| deg[u] <= 1).collect();
    while let Some(u) = queue.pop() {
        if !alive[u] {
            continue;
        }
        alive[u] = false;
        for &v in g.neighbors(u) {
            if alive[v] {
                deg[v] -= 1;
                if deg[v] == 1 {
                    queue.push(v);
                }
            }
        }
    }
    alive
}

/// Orders the cycle vertices given by `on_cycle` per the fixed orientation.
pub(crate) fn order_cycle(g: &Graph, on_cycle: &[bool]) -> Vec<usize> {
    let start = match on_cycle.iter().position(|&c| c) {
        Some(s) => s,
        None => return Vec::new(),
    };
    let first = g
        .neighbors(start)
        .iter()
        .copied()
        .filter(|&v| on_cycle[v])
        .min()
        .expect("cycle vertex has cycle neighbors");
    let mut cycle = vec![start, first];
    let (mut prev, mut cur) = (start, first);
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&v| on_cycle[v] && v != prev)
            .expect("cycle vertex has two cycle neighbors");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    cycle
}

pub fn extract_cycle(g: &Graph) -> Result<CycleDecomposition> {
    if g.m() != g.n() {
        return Err(Error::NotUnicyclic);
    }
    let on_cycle = cycle_mask(g);
    let cycle = order_cycle(g, &on_cycle);
    if cycle.len() < 3 {
        return Err(Error::NotUnicyclic);
    }

    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    let mut pendants = vec![Vec::new(); cycle.len()];
    let mut stack = Vec::new();
    for (i, &r) in cycle.iter().enumerate() {
        owner[r] = i;
        stack.push(r);
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if owner[v] == usize::MAX && !on_cycle[v] {
                    owner[v] = i;
                    pendants[i].push(v);
                    stack.push(v);
                }
            }
        }
    }
    Ok(CycleDecomposition {
        cycle,
        pendants,
        owner,
    })
}

/// A vertex subset together with the hop radius it is meant to cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominatingSet {
    pub members: Vec<usize>,
    pub k: usize,
}

impl DominatingSet {
    /// Sorts and dedups the members, in time linear in the largest id.
    pub fn new(members: Vec<usize>, k: usize) -> Self {
        let Some(&top) = members.iter().max() else {
            return DominatingSet { members, k };
        };
        let mut seen = vec![false; top + 1];
        for &v in &members {
            seen[v] = true;
        }
        let members = (0..=top).filter(|&v| seen[v]).collect();
        DominatingSet { members, k }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coverage {
    pub covered: bool,
    /// A farthest vertex from the set, reported only when it is uncovered.
    pub witness: Option<usize>,
    /// Largest distance from any vertex to the set.
    pub max_dist: usize,
}

/// Multi-source BFS certificate for k-hop domination.
pub fn verify_khds(g: &Graph, d: &DominatingSet) -> Result<Coverage> {
    if d.members.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&bad) = d.members.iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidVertex(bad));
    }
    let dist = g.bfs_distances(&d.members);
    let (far, max_dist) =
        dist.iter().copied().enumerate().fold(
            (0, 0),
            |best, (v, dv)| if dv > best.1 { (v, dv) } else { best },
        );
    let covered = max_dist <= d.k;
    Ok(Coverage {
        covered,
        witness: (!covered).then_some(far),
        max_dist,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn parses_path_and_triangle() {
        let p = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(classify(&p), GraphClass::Tree);
        let t = parse_graph("3 3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!(classify(&t), GraphClass::Unicyclic);
    }

    #[test]
    fn edge_order_does_not_matter() {
        let a = parse_graph("4 3\n0 1\n2 3\n1 2").unwrap();
        let b = parse_graph("4 3\n1 2\n0 1\n3 2\n").unwrap();
        assert_eq!(a.canonical_adjacency(), b.canonical_adjacency());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# header\n3 2 # n m\n\n0 1\n# skip\n1 2\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_graph("3 2\n0 1\n0 x"),
            Err(Error::Malformed { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1\n1 0"),
            Err(Error::DuplicateEdge { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1\n2 2"),
            Err(Error::SelfLoop { line: 3, v: 2 })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1\n1 3"),
            Err(Error::VertexOutOfRange {
                line: 3,
                v: 3,
                n: 3
            })
        ));
        assert!(matches!(
            parse_graph("4 2\n0 1\n2 3"),
            Err(Error::Disconnected { .. })
        ));
        assert!(matches!(parse_graph(""), Err(Error::Malformed { .. })));
        assert!(matches!(
            parse_graph("3 3\n0 1\n1 2"),
            Err(Error::Malformed { .. })
        ));
    }

    #[test]
    fn classifies_small_shapes() {
        assert_eq!(classify(&path(5)), GraphClass::Tree);
        let tri_pendant = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        assert_eq!(classify(&tri_pendant), GraphClass::Unicyclic);
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(classify(&bowtie), GraphClass::Cactus);
        // K4 minus an edge: two triangles sharing the edge 1-2
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(classify(&diamond), GraphClass::Other);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(classify(&k4), GraphClass::Other);
    }

    #[test]
    fn extracts_triangle_cycle() {
        let t = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        let d = extract_cycle(&t).unwrap();
        assert_eq!(d.cycle, vec![0, 1, 2]);
        assert!(d.pendants.iter().all(|p| p.is_empty()));

        let t = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (1, 3)]);
        let d = extract_cycle(&t).unwrap();
        assert_eq!(d.cycle, vec![0, 1, 2]);
        assert_eq!(d.pendants[1], vec![3]);
        assert_eq!(d.owner[3], 1);

        assert_eq!(extract_cycle(&path(4)), Err(Error::NotUnicyclic));
    }

    #[test]
    fn verifies_path_cover() {
        let p = path(5);
        let c = verify_khds(&p, &DominatingSet::new(vec![2], 2)).unwrap();
        assert_eq!((c.covered, c.max_dist), (true, 2));
        let c = verify_khds(&p, &DominatingSet::new(vec![0], 2)).unwrap();
        assert_eq!((c.covered, c.witness), (false, Some(4)));
        assert_eq!(
            verify_khds(&p, &DominatingSet::new(vec![], 2)),
            Err(Error::EmptySet)
        );
    }
}
