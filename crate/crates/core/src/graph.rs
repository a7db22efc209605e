//! Simple undirected connected graphs with stable integer edge identifiers,
//! BFS distance primitives, and deterministic test-family generators.

use std::collections::BinaryHeap;
use std::collections::HashSet;
use std::cmp::Reverse;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Undirected simple graph. Edge ids are positions in the edge list and are
/// stable under every operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// Edge endpoints, normalized so `u < v`.
    edges: Vec<(usize, usize)>,
    /// Per-vertex list of `(neighbor, edge id)`.
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, validating the simple-graph invariants: no self-loops,
    /// no duplicate edges, all endpoints in range. Connectivity is not
    /// required here; loaders and index computations check it separately.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        count: vertex_count,
                    });
                }
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge { u: e.0, v: e.1 });
            }
            normalized.push(e);
            adjacency[e.0].push((e.1, id));
            adjacency[e.1].push((e.0, id));
        }
        Ok(Graph {
            vertex_count,
            edges: normalized,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of an edge, with `u < v`.
    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// True if every vertex is reachable from vertex 0 (vacuously true for
    /// the empty graph).
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(w, _) in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::NotConnected)
        }
    }

    /// True if the graph is a tree: connected with `m = n - 1`.
    pub fn is_tree(&self) -> bool {
        self.vertex_count >= 1
            && self.edges.len() == self.vertex_count - 1
            && self.is_connected()
    }
}

/// BFS hop distances from a single source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<u32>,
}

/// BFS from `source`; errors if any vertex is unreachable.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<DistanceRow> {
    if source >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: source,
            count: g.vertex_count(),
        });
    }
    let mut dist = vec![u32::MAX; g.vertex_count()];
    let mut queue = std::collections::VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    let mut reached = 1usize;
    while let Some(u) = queue.pop_front() {
        for &(w, _) in g.neighbors(u) {
            if dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    if reached != g.vertex_count() {
        return Err(Error::NotConnected);
    }
    Ok(DistanceRow { source, dist })
}

/// All-pairs BFS distances, one row per source. Rows are computed in
/// parallel; the result is independent of scheduling.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    rows: Vec<u32>,
}

impl DistanceMatrix {
    pub fn compute(g: &Graph) -> Result<DistanceMatrix> {
        let n = g.vertex_count();
        let rows: Vec<Vec<u32>> = (0..n)
            .into_par_iter()
            .map(|s| bfs_distances(g, s).map(|r| r.dist))
            .collect::<Result<_>>()?;
        Ok(DistanceMatrix {
            n,
            rows: rows.into_iter().flatten().collect(),
        })
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.rows[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.rows[u * self.n..(u + 1) * self.n]
    }
}

/// Endpoint-minimum edge distance `d̂(e, f) = min over the four endpoint
/// pairs`. Zero when the edges coincide or share a vertex.
pub fn edge_distance_hat(g: &Graph, e: usize, f: usize, dm: &DistanceMatrix) -> Result<u64> {
    for id in [e, f] {
        if id >= g.edge_count() {
            return Err(Error::EdgeOutOfRange {
                edge: id,
                count: g.edge_count(),
            });
        }
    }
    let (a, b) = g.endpoints(e);
    let (x, y) = g.endpoints(f);
    let d = dm.get(a, x).min(dm.get(a, y)).min(dm.get(b, x)).min(dm.get(b, y));
    Ok(u64::from(d))
}

/// Outcome of the two-coloring test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// A valid two-coloring, one bool per vertex.
    Bipartite(Vec<bool>),
    /// Vertices of an odd closed walk, in cycle order.
    OddCycle(Vec<usize>),
}

/// BFS two-coloring; on failure returns an explicit odd-cycle witness.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Bipartiteness::OddCycle(odd_cycle_witness(&parent, u, w));
                }
            }
        }
    }
    Bipartiteness::Bipartite(color.into_iter().map(|c| c == 1).collect())
}

/// Joins the BFS-tree paths of `u` and `v` at their lowest common ancestor,
/// yielding the vertices of the odd cycle closed by edge `uv`.
fn odd_cycle_witness(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let chain = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let cu = chain(u);
    let cv = chain(v);
    let in_cu: std::collections::HashMap<usize, usize> =
        cu.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let (mut lca_cu, mut lca_cv) = (cu.len() - 1, cv.len() - 1);
    for (j, &x) in cv.iter().enumerate() {
        if let Some(&i) = in_cu.get(&x) {
            lca_cu = i;
            lca_cv = j;
            break;
        }
    }
    let mut cycle: Vec<usize> = cu[..=lca_cu].to_vec();
    cycle.extend(cv[..lca_cv].iter().rev());
    cycle
}

/// Deterministic labeled test families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Path on `size` vertices.
    Path,
    /// Cycle on `size` vertices; `size` must be even and at least 4.
    EvenCycle,
    /// Hypercube of dimension `size`; vertex labels are the binary tuples.
    Hypercube,
    /// Star with `size` leaves.
    Star,
}

pub fn generate_family(kind: Family, size: usize) -> Result<Graph> {
    if size < 1 {
        return Err(Error::InvalidParameter(format!(
            "family size must be at least 1, got {size}"
        )));
    }
    match kind {
        Family::Path => {
            let edges: Vec<_> = (1..size).map(|i| (i - 1, i)).collect();
            Graph::from_edges(size, &edges)
        }
        Family::EvenCycle => {
            if !size.is_multiple_of(2) || size < 4 {
                return Err(Error::InvalidParameter(format!(
                    "even cycle length must be even and at least 4, got {size}"
                )));
            }
            let edges: Vec<_> = (0..size).map(|i| (i, (i + 1) % size)).collect();
            Graph::from_edges(size, &edges)
        }
        Family::Hypercube => {
            if size > 26 {
                return Err(Error::InvalidParameter(format!(
                    "hypercube dimension {size} too large"
                )));
            }
            let n = 1usize << size;
            let mut edges = Vec::with_capacity(size * n / 2);
            for v in 0..n {
                for b in 0..size {
                    let w = v ^ (1 << b);
                    if v < w {
                        edges.push((v, w));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::Star => {
            let edges: Vec<_> = (1..=size).map(|i| (0, i)).collect();
            Graph::from_edges(size + 1, &edges)
        }
    }
}

/// Uniform random labeled tree on `n` vertices via Prüfer decoding,
/// deterministic in `seed`.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("tree needs at least one vertex".into()));
    }
    if n == 1 {
        return Graph::from_edges(1, &[]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let Reverse(leaf) = leaves.pop().expect("prufer decode always has a leaf");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_edges(n, &edges)
}

/// Random connected bipartite non-tree graph; used by recognition tests that
/// need inputs which may or may not be partial cubes.
pub fn random_even_subdivision(n: usize, extra: usize, seed: u64) -> Result<Graph> {
    let tree = random_tree(n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let dm = DistanceMatrix::compute(&tree)?;
    let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
    let mut present: HashSet<(usize, usize)> = edges.iter().copied().collect();
    // Candidate chords at odd tree distance keep the graph bipartite.
    let candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| dm.get(u, v) % 2 == 1 && dm.get(u, v) > 1)
        .collect();
    for _ in 0..extra {
        if let Some(&(u, v)) = candidates.choose(&mut rng) {
            if present.insert((u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Parses the edge-list format: first non-comment line `n m`, then `m`
/// lines `u v`. Lines starting with `#` are ignored. The loaded graph must
/// be connected.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two integers, got {:?}", line),
            });
        }
        let parse = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid integer {s:?}"),
            })
        };
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        match header {
            None => header = Some((a, b)),
            Some((_, m)) => {
                if edges.len() == m {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("more than the declared {m} edges"),
                    });
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 1,
        message: "missing 'n m' header line".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    let g = Graph::from_edges(n, &edges)?;
    g.require_connected()?;
    Ok(g)
}

/// Serializes a graph in the edge-list format accepted by [`parse_edgelist`].
pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
