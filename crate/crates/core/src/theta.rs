//! Djoković–Winkler Θ-relation, Θ*-classes, per-class cut sides, and
//! partial-cube certification.
//!
//! Edges `e = xy` and `f = uv` are Θ-related iff
//! `d(x,u) + d(y,v) != d(x,v) + d(y,u)`; Θ* is the transitive closure. In a
//! partial cube the Θ*-classes are exactly the cuts whose removal splits the
//! graph into two components, and the per-class sides of the vertices give
//! an isometric hypercube labeling.

use rayon::prelude::*;

use crate::bits::BitVec;
use crate::error::{Error, Rejection, Result};
use crate::graph::{is_bipartite, Bipartiteness, DistanceMatrix, Graph};

/// Partition of the edge set into Θ*-classes, ordered by smallest edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaClasses {
    /// Edge ids per class, each sorted ascending.
    classes: Vec<Vec<usize>>,
    /// Class index of every edge.
    class_of: Vec<usize>,
}

impl ThetaClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, edge: usize) -> usize {
        self.class_of[edge]
    }

    /// Smallest edge id in the class; used as its deterministic
    /// representative.
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}

/// Θ* from the direct pairwise test over precomputed BFS rows.
fn theta_star_partition(g: &Graph, dm: &DistanceMatrix) -> ThetaClasses {
    let m = g.edge_count();
    let mut uf = UnionFind::new(m);
    for e in 0..m {
        let (x, y) = g.endpoints(e);
        let dx = dm.row(x);
        let dy = dm.row(y);
        for f in (e + 1)..m {
            let (u, v) = g.endpoints(f);
            if u64::from(dx[u]) + u64::from(dy[v]) != u64::from(dx[v]) + u64::from(dy[u]) {
                uf.union(e, f);
            }
        }
    }
    // Scanning edges in id order makes class k's first edge its minimum,
    // so classes come out ordered by smallest edge id.
    let mut class_of = vec![usize::MAX; m];
    let mut root_to_class = vec![usize::MAX; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (e, slot) in class_of.iter_mut().enumerate() {
        let root = uf.find(e);
        let k = if root_to_class[root] == usize::MAX {
            root_to_class[root] = classes.len();
            classes.push(Vec::new());
            classes.len() - 1
        } else {
            root_to_class[root]
        };
        *slot = k;
        classes[k].push(e);
    }
    ThetaClasses { classes, class_of }
}

/// Θ*-classes of a connected bipartite graph.
pub fn theta_classes(g: &Graph) -> Result<ThetaClasses> {
    g.require_connected()?;
    if let Bipartiteness::OddCycle(odd_cycle) = is_bipartite(g) {
        return Err(Error::NotPartialCube(Rejection::NotBipartite { odd_cycle }));
    }
    let dm = DistanceMatrix::compute(g)?;
    Ok(theta_star_partition(g, &dm))
}

/// Per-class bipartition of the graph: side membership of every vertex and
/// every non-class edge, as word-packed bit vectors over ids.
///
/// Side A of class `k` is the component of `G − E_k` containing vertex 0.
#[derive(Debug, Clone)]
pub struct CutSideTable {
    edge_count: usize,
    class_sizes: Vec<u64>,
    edges_a: Vec<BitVec>,
    edges_b: Vec<BitVec>,
    vertex_b: Vec<BitVec>,
}

impl CutSideTable {
    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn class_size(&self, k: usize) -> u64 {
        self.class_sizes[k]
    }

    /// Edges of the component on side A (bit per edge id).
    pub fn edges_a(&self, k: usize) -> &BitVec {
        &self.edges_a[k]
    }

    /// Edges of the component on side B.
    pub fn edges_b(&self, k: usize) -> &BitVec {
        &self.edges_b[k]
    }

    /// True if vertex `v` lies on side B of class `k`.
    pub fn vertex_on_b(&self, k: usize, v: usize) -> bool {
        self.vertex_b[k].get(v)
    }

    /// Number of classes whose removal separates edges `e` and `f`. In a
    /// partial cube this equals `d̂(e, f)`: every separating cut contributes
    /// exactly one step to a shortest route between the edges.
    pub fn separating_classes(&self, e: usize, f: usize) -> u64 {
        let mut count = 0;
        for k in 0..self.class_count() {
            let (a, b) = (&self.edges_a[k], &self.edges_b[k]);
            if (a.get(e) && b.get(f)) || (b.get(e) && a.get(f)) {
                count += 1;
            }
        }
        count
    }

    /// Fast side-table constructor for a partition already known to be the
    /// Θ*-classes of a partial cube (benzenoid elementary cuts). One BFS
    /// from vertex 0 assigns every vertex the set of classes crossed on its
    /// tree path; coherence is then verified on every edge: the labels of
    /// its endpoints must differ in exactly its own class bit (non-class
    /// edges in no bit). Incoherence means the caller's partition was not a
    /// cut structure after all.
    pub(crate) fn from_coherent_partition(
        g: &Graph,
        classes: &[Vec<usize>],
    ) -> std::result::Result<CutSideTable, String> {
        let n = g.vertex_count();
        let m = g.edge_count();
        let d = classes.len();
        let words = d.div_ceil(64).max(1);

        let mut class_of = vec![usize::MAX; m];
        for (k, class) in classes.iter().enumerate() {
            for &e in class {
                if e >= m || class_of[e] != usize::MAX {
                    return Err(format!("edge {e} not freshly covered by class {k}"));
                }
                class_of[e] = k;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err("partition does not cover the edge set".into());
        }

        // labels[v] = classes crossed on the BFS tree path from vertex 0.
        let mut labels = vec![0u64; n * words];
        if n > 0 {
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut queue = std::collections::VecDeque::from([0usize]);
            let mut reached = 1usize;
            while let Some(u) = queue.pop_front() {
                for &(w, e) in g.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        reached += 1;
                        let k = class_of[e];
                        for i in 0..words {
                            labels[w * words + i] = labels[u * words + i];
                        }
                        labels[w * words + k / 64] ^= 1u64 << (k % 64);
                        queue.push_back(w);
                    }
                }
            }
            if reached != n {
                return Err("graph not connected".into());
            }
        }
        for (e, &k) in class_of.iter().enumerate() {
            let (u, v) = g.endpoints(e);
            for i in 0..words {
                let mut expect = 0u64;
                if i == k / 64 {
                    expect = 1u64 << (k % 64);
                }
                if labels[u * words + i] ^ labels[v * words + i] != expect {
                    return Err(format!(
                        "edge {e}: endpoint labels do not differ in exactly class {k}"
                    ));
                }
            }
        }

        let side_of = |v: usize, k: usize| labels[v * words + k / 64] >> (k % 64) & 1 == 1;
        let per_class: Vec<(BitVec, BitVec, BitVec)> = (0..d)
            .into_par_iter()
            .map(|k| {
                let mut edges_a = BitVec::new(m);
                let mut edges_b = BitVec::new(m);
                let mut vertex_b = BitVec::new(n);
                for v in 0..n {
                    if side_of(v, k) {
                        vertex_b.set(v);
                    }
                }
                for (e, &class) in class_of.iter().enumerate() {
                    if class == k {
                        continue;
                    }
                    let (u, _) = g.endpoints(e);
                    if side_of(u, k) {
                        edges_b.set(e);
                    } else {
                        edges_a.set(e);
                    }
                }
                (edges_a, edges_b, vertex_b)
            })
            .collect();

        let mut table = CutSideTable {
            edge_count: m,
            class_sizes: classes.iter().map(|c| c.len() as u64).collect(),
            edges_a: Vec::with_capacity(d),
            edges_b: Vec::with_capacity(d),
            vertex_b: Vec::with_capacity(d),
        };
        for (a, b, v) in per_class {
            table.edges_a.push(a);
            table.edges_b.push(b);
            table.vertex_b.push(v);
        }
        Ok(table)
    }

    /// Side table for an arbitrary edge partition. Each part must be a cut
    /// whose removal leaves exactly two components, with every part edge
    /// joining them; benzenoid elementary cuts and Θ*-classes of partial
    /// cubes both qualify.
    pub fn from_edge_partition(
        g: &Graph,
        classes: &[Vec<usize>],
    ) -> std::result::Result<CutSideTable, Rejection> {
        let n = g.vertex_count();
        let m = g.edge_count();
        let sides: Vec<std::result::Result<(BitVec, BitVec, BitVec), Rejection>> = classes
            .par_iter()
            .enumerate()
            .map(|(k, class)| {
                let mut in_class = vec![false; m];
                for &e in class {
                    in_class[e] = true;
                }
                // Two-phase traversal of G − E_k: side A grows from vertex 0,
                // side B from the first vertex A missed.
                let mut side = vec![u8::MAX; n];
                let mut reached = 0usize;
                let flood = |start: usize, label: u8, side: &mut Vec<u8>| {
                    let mut stack = vec![start];
                    side[start] = label;
                    let mut count = 1usize;
                    while let Some(u) = stack.pop() {
                        for &(w, eid) in g.neighbors(u) {
                            if !in_class[eid] && side[w] == u8::MAX {
                                side[w] = label;
                                count += 1;
                                stack.push(w);
                            }
                        }
                    }
                    count
                };
                reached += flood(0, 0, &mut side);
                let Some(seed_b) = side.iter().position(|&s| s == u8::MAX) else {
                    // Removing the class did not disconnect the graph.
                    return Err(Rejection::ClassNotCut { class: k });
                };
                reached += flood(seed_b, 1, &mut side);
                if reached != n {
                    return Err(Rejection::ClassNotCut { class: k });
                }
                let mut edges_a = BitVec::new(m);
                let mut edges_b = BitVec::new(m);
                let mut vertex_b = BitVec::new(n);
                for (v, &s) in side.iter().enumerate() {
                    if s == 1 {
                        vertex_b.set(v);
                    }
                }
                for (e, &in_this_class) in in_class.iter().enumerate() {
                    let (u, v) = g.endpoints(e);
                    if in_this_class {
                        if side[u] == side[v] {
                            // A class edge must join the two components.
                            return Err(Rejection::ClassNotCut { class: k });
                        }
                        continue;
                    }
                    debug_assert_eq!(side[u], side[v], "non-class edge spans the cut");
                    if side[u] == 0 {
                        edges_a.set(e);
                    } else {
                        edges_b.set(e);
                    }
                }
                Ok((edges_a, edges_b, vertex_b))
            })
            .collect();

        let mut table = CutSideTable {
            edge_count: m,
            class_sizes: classes.iter().map(|c| c.len() as u64).collect(),
            edges_a: Vec::with_capacity(classes.len()),
            edges_b: Vec::with_capacity(classes.len()),
            vertex_b: Vec::with_capacity(classes.len()),
        };
        for (k, entry) in sides.into_iter().enumerate() {
            let (a, b, v) = entry?;
            debug_assert_eq!(a.count() + b.count() + table.class_sizes[k], m as u64);
            table.edges_a.push(a);
            table.edges_b.push(b);
            table.vertex_b.push(v);
        }
        Ok(table)
    }
}

/// Side table for the given Θ*-partition; errors if some class is not a
/// two-component cut.
pub fn cut_side_table(g: &Graph, theta: &ThetaClasses) -> Result<CutSideTable> {
    CutSideTable::from_edge_partition(g, theta.classes()).map_err(Error::NotPartialCube)
}

#[cfg(test)]
impl CutSideTable {
    /// Test-only view with classes reordered by `perm` and the A/B sides of
    /// class `k` exchanged where `swap[k]` is set.
    pub(crate) fn permuted(&self, perm: &[usize], swap: &[bool]) -> CutSideTable {
        let pick = |k: usize, flip: bool| {
            if flip {
                (self.edges_b[k].clone(), self.edges_a[k].clone())
            } else {
                (self.edges_a[k].clone(), self.edges_b[k].clone())
            }
        };
        let mut edges_a = Vec::with_capacity(perm.len());
        let mut edges_b = Vec::with_capacity(perm.len());
        for &k in perm {
            let (a, b) = pick(k, swap[k]);
            edges_a.push(a);
            edges_b.push(b);
        }
        CutSideTable {
            edge_count: self.edge_count,
            class_sizes: perm.iter().map(|&k| self.class_sizes[k]).collect(),
            edges_a,
            edges_b,
            vertex_b: perm.iter().map(|&k| self.vertex_b[k].clone()).collect(),
        }
    }
}

/// Per-vertex hypercube coordinates: bit `k` is the side of the vertex with
/// respect to class `k`.
#[derive(Debug, Clone)]
pub struct HammingLabeling {
    labels: Vec<BitVec>,
}

impl HammingLabeling {
    fn from_sides(sides: &CutSideTable, n: usize) -> HammingLabeling {
        let d = sides.class_count();
        let mut labels = vec![BitVec::new(d); n];
        for k in 0..d {
            for (v, label) in labels.iter_mut().enumerate() {
                if sides.vertex_on_b(k, v) {
                    label.set(k);
                }
            }
        }
        HammingLabeling { labels }
    }

    pub fn dimension(&self) -> usize {
        self.labels.first().map_or(0, BitVec::len)
    }

    pub fn label(&self, v: usize) -> &BitVec {
        &self.labels[v]
    }

    pub fn hamming(&self, u: usize, v: usize) -> u64 {
        self.labels[u].xor_count(&self.labels[v])
    }
}

/// A fully verified partial-cube structure: Θ*-classes, cut sides, and an
/// isometric Hamming labeling.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub theta: ThetaClasses,
    pub sides: CutSideTable,
    pub labeling: HammingLabeling,
}

/// Result of partial-cube recognition. Rejection is an answer, not an
/// error, so it lives on the `Ok` side.
#[derive(Debug, Clone)]
pub enum Certification {
    Certified(Certificate),
    Rejected(Rejection),
}

impl Certification {
    pub fn certificate(self) -> std::result::Result<Certificate, Rejection> {
        match self {
            Certification::Certified(c) => Ok(c),
            Certification::Rejected(r) => Err(r),
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified(_))
    }
}

/// Recognizes partial cubes, verifying the Hamming labeling against BFS
/// distances for every vertex pair before certifying.
pub fn certify_partial_cube(g: &Graph) -> Result<Certification> {
    g.require_connected()?;
    let odd_cycle = match is_bipartite(g) {
        Bipartiteness::Bipartite(_) => None,
        Bipartiteness::OddCycle(w) => Some(w),
    };
    if let Some(odd_cycle) = odd_cycle {
        return Ok(Certification::Rejected(Rejection::NotBipartite { odd_cycle }));
    }
    let dm = DistanceMatrix::compute(g)?;
    let theta = theta_star_partition(g, &dm);
    let sides = match CutSideTable::from_edge_partition(g, theta.classes()) {
        Ok(sides) => sides,
        Err(rejection) => return Ok(Certification::Rejected(rejection)),
    };
    let labeling = HammingLabeling::from_sides(&sides, g.vertex_count());

    let n = g.vertex_count();
    let mismatch = (0..n).into_par_iter().find_map_first(|u| {
        for v in (u + 1)..n {
            let hamming = labeling.hamming(u, v);
            let distance = u64::from(dm.get(u, v));
            if hamming != distance {
                return Some(Rejection::DistanceMismatch {
                    u,
                    v,
                    hamming,
                    distance,
                });
            }
        }
        None
    });
    if let Some(rejection) = mismatch {
        return Ok(Certification::Rejected(rejection));
    }
    Ok(Certification::Certified(Certificate {
        theta,
        sides,
        labeling,
    }))
}
