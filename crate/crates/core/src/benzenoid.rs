//! Benzenoid systems on the hexagonal lattice.
//!
//! A benzenoid is built from axial hexagon coordinates `(q, r)`. Hexagon
//! centers map to a doubled integer lattice so that vertex deduplication and
//! edge-direction classification are exact integer operations. The module
//! extracts the elementary cuts (which coincide with the Θ*-classes of the
//! derived graph), builds the three weighted quotient trees, and runs the
//! cut-based pipeline for `W_e` and `WW_e`.

use std::collections::HashMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitVec;
use crate::cut::edge_wiener_cut;
use crate::error::{add, binom2, mul, Error, Result};
use crate::graph::Graph;
use crate::report::{IndexReport, Method};
use crate::theta::CutSideTable;

/// Axial neighbor offsets of a hexagon.
const HEX_NEIGHBORS: [(i64, i64); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

/// Corner offsets around a hexagon center, in cyclic order. Offset `i + 3`
/// is the negation of offset `i`, so edge `i` and edge `i + 3` of a hexagon
/// are parallel.
const CORNERS: [(i64, i64); 6] = [(0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1)];

/// Edge direction class, from the endpoint coordinate difference up to sign:
/// `(0, ±2)` is vertical, `(±1, ∓1)` falling, `(±1, ±1)` rising.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Vertical,
    Falling,
    Rising,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::Vertical, Direction::Falling, Direction::Rising];

    /// Conventional labels 1, 2, 3.
    pub fn label(self) -> u8 {
        match self {
            Direction::Vertical => 1,
            Direction::Falling => 2,
            Direction::Rising => 3,
        }
    }

    fn of_segment(a: (i64, i64), b: (i64, i64)) -> Direction {
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        match (dx, dy) {
            (0, 2) | (0, -2) => Direction::Vertical,
            (1, -1) | (-1, 1) => Direction::Falling,
            (1, 1) | (-1, -1) => Direction::Rising,
            _ => unreachable!("not a hexagon edge segment: ({dx}, {dy})"),
        }
    }
}

/// A validated benzenoid system: hexagon set, derived graph, edge direction
/// labels, and elementary cuts.
#[derive(Debug, Clone)]
pub struct Benzenoid {
    hexes: Vec<(i64, i64)>,
    graph: Graph,
    vertex_coord: Vec<(i64, i64)>,
    edge_direction: Vec<Direction>,
    /// Elementary cuts as sorted edge-id lists, ordered by smallest edge id.
    cuts: Vec<Vec<usize>>,
    cut_of: Vec<usize>,
    /// Hexagons each cut passes through (indices into `hexes`), as bit sets.
    cut_hexes: Vec<BitVec>,
}

impl Benzenoid {
    pub fn hexes(&self) -> &[(i64, i64)] {
        &self.hexes
    }

    pub fn hex_count(&self) -> usize {
        self.hexes.len()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_coord(&self, v: usize) -> (i64, i64) {
        self.vertex_coord[v]
    }

    pub fn edge_direction(&self, e: usize) -> Direction {
        self.edge_direction[e]
    }

    pub fn cuts(&self) -> &[Vec<usize>] {
        &self.cuts
    }

    pub fn cut_of(&self, e: usize) -> usize {
        self.cut_of[e]
    }

    /// Hexagons the cut passes through, ascending.
    pub fn cut_hexes(&self, cut: usize) -> Vec<usize> {
        self.cut_hexes[cut].iter_ones().collect()
    }

    /// True if the two cuts cross inside some hexagon.
    pub fn cuts_share_hexagon(&self, k: usize, l: usize) -> bool {
        self.cut_hexes[k].intersection_count(&self.cut_hexes[l]) > 0
    }

    /// All edges of one direction class.
    pub fn direction_edges(&self, dir: Direction) -> Vec<usize> {
        (0..self.graph.edge_count())
            .filter(|&e| self.edge_direction[e] == dir)
            .collect()
    }
}

/// Builds and validates a benzenoid from axial hexagon coordinates.
///
/// Hexagon `(q, r)` has center `(2q + r, 3r)`; its corners are the center
/// plus the fixed offset ring. The hex set must be nonempty,
/// duplicate-free, connected under hexagon adjacency, and simply connected
/// (no holes), which the Euler relation `n + h - m = 1` certifies for the
/// derived planar graph.
pub fn build_benzenoid(hexes_in: &[(i64, i64)]) -> Result<Benzenoid> {
    if hexes_in.is_empty() {
        return Err(Error::InvalidParameter(
            "benzenoid needs at least one hexagon".into(),
        ));
    }
    let mut hexes = hexes_in.to_vec();
    hexes.sort_unstable();
    for w in hexes.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateHexagon { q: w[0].0, r: w[0].1 });
        }
    }

    let hex_index: HashMap<(i64, i64), usize> =
        hexes.iter().enumerate().map(|(i, &h)| (h, i)).collect();
    let mut reached = vec![false; hexes.len()];
    let mut stack = vec![0usize];
    reached[0] = true;
    while let Some(i) = stack.pop() {
        let (q, r) = hexes[i];
        for (dq, dr) in HEX_NEIGHBORS {
            if let Some(&j) = hex_index.get(&(q + dq, r + dr)) {
                if !reached[j] {
                    reached[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    if let Some(i) = reached.iter().position(|&r| !r) {
        return Err(Error::DisconnectedHexes {
            q: hexes[i].0,
            r: hexes[i].1,
        });
    }

    // Vertices and edges, deduplicated by lattice coordinate. Iterating
    // hexes in sorted order with a fixed corner order makes ids stable.
    let mut vertex_id: HashMap<(i64, i64), usize> = HashMap::new();
    let mut vertex_coord: Vec<(i64, i64)> = Vec::new();
    let mut edge_id: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edge_list: Vec<(usize, usize)> = Vec::new();
    let mut edge_direction: Vec<Direction> = Vec::new();
    let mut edge_hexes: Vec<Vec<usize>> = Vec::new();
    let mut hex_edges: Vec<[usize; 6]> = Vec::with_capacity(hexes.len());

    for (hi, &(q, r)) in hexes.iter().enumerate() {
        let center = (2 * q + r, 3 * r);
        let corner_ids: Vec<usize> = CORNERS
            .iter()
            .map(|&(dx, dy)| {
                let p = (center.0 + dx, center.1 + dy);
                *vertex_id.entry(p).or_insert_with(|| {
                    vertex_coord.push(p);
                    vertex_coord.len() - 1
                })
            })
            .collect();
        let mut ring = [0usize; 6];
        for i in 0..6 {
            let (a, b) = (corner_ids[i], corner_ids[(i + 1) % 6]);
            let key = (a.min(b), a.max(b));
            let eid = *edge_id.entry(key).or_insert_with(|| {
                edge_list.push(key);
                edge_direction.push(Direction::of_segment(
                    vertex_coord[key.0],
                    vertex_coord[key.1],
                ));
                edge_hexes.push(Vec::with_capacity(2));
                edge_list.len() - 1
            });
            edge_hexes[eid].push(hi);
            ring[i] = eid;
        }
        hex_edges.push(ring);
    }

    let graph = Graph::from_edges(vertex_coord.len(), &edge_list)?;
    for v in 0..graph.vertex_count() {
        let deg = graph.degree(v);
        if !(2..=3).contains(&deg) {
            return Err(Error::Internal(format!(
                "lattice vertex {v} has degree {deg}"
            )));
        }
    }
    // Simply connected iff the inner faces are exactly the hexagons:
    // n - m + (h + 1) = 2.
    let euler = graph.vertex_count() as i64 + hexes.len() as i64 - graph.edge_count() as i64;
    if euler < 1 {
        return Err(Error::HoleDetected);
    }
    if euler > 1 {
        return Err(Error::Internal(format!("impossible Euler count {euler}")));
    }

    let (cuts, cut_of, cut_hexes) =
        elementary_cuts(&graph, &edge_direction, &edge_hexes, &hex_edges, hexes.len())?;

    Ok(Benzenoid {
        hexes,
        graph,
        vertex_coord,
        edge_direction,
        cuts,
        cut_of,
        cut_hexes,
    })
}

/// Walks every elementary cut: from an unvisited edge, repeatedly step to
/// the opposite (parallel) edge of each hexagon containing the current edge
/// until the walk leaves the system at a peripheral edge.
#[allow(clippy::type_complexity)]
fn elementary_cuts(
    graph: &Graph,
    edge_direction: &[Direction],
    edge_hexes: &[Vec<usize>],
    hex_edges: &[[usize; 6]],
    hex_count: usize,
) -> Result<(Vec<Vec<usize>>, Vec<usize>, Vec<BitVec>)> {
    let m = graph.edge_count();
    let opposite = |hex: usize, e: usize| -> usize {
        let ring = &hex_edges[hex];
        let pos = ring.iter().position(|&x| x == e).expect("edge not in its hexagon");
        ring[(pos + 3) % 6]
    };

    let mut visited = vec![false; m];
    let mut cuts: Vec<Vec<usize>> = Vec::new();
    let mut cut_of = vec![usize::MAX; m];
    let mut cut_hexes: Vec<BitVec> = Vec::new();
    for e0 in 0..m {
        if visited[e0] {
            continue;
        }
        visited[e0] = true;
        let mut cut = vec![e0];
        let mut through = BitVec::new(hex_count);
        for &h0 in &edge_hexes[e0] {
            let (mut cur, mut hex) = (e0, h0);
            loop {
                let next = opposite(hex, cur);
                through.set(hex);
                if visited[next] {
                    return Err(Error::Internal(format!(
                        "cut walk revisited edge {next}"
                    )));
                }
                if edge_direction[next] != edge_direction[cur] {
                    return Err(Error::Internal(format!(
                        "cut mixes directions at edge {next}"
                    )));
                }
                visited[next] = true;
                cut.push(next);
                match edge_hexes[next].iter().find(|&&x| x != hex) {
                    Some(&h2) => {
                        cur = next;
                        hex = h2;
                    }
                    None => break,
                }
            }
        }
        cut.sort_unstable();
        let k = cuts.len();
        for &e in &cut {
            cut_of[e] = k;
        }
        cuts.push(cut);
        cut_hexes.push(through);
    }
    Ok((cuts, cut_of, cut_hexes))
}

/// Quotient tree `T_i` of one direction class: nodes are the path components
/// of `G − E_i` weighted by their edge counts; tree edges join components
/// linked by at least one `E_i` edge, weighted by how many.
#[derive(Debug, Clone)]
pub struct WeightedQuotientTree {
    node_weights: Vec<u64>,
    /// `(component a, component b, joining edge count)` with `a < b`.
    edges: Vec<(usize, usize, u64)>,
    component_of: Vec<usize>,
}

impl WeightedQuotientTree {
    pub fn node_count(&self) -> usize {
        self.node_weights.len()
    }

    pub fn node_weights(&self) -> &[u64] {
        &self.node_weights
    }

    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }
}

impl Benzenoid {
    /// The three weighted quotient trees, one per direction class.
    pub fn quotient_trees(&self) -> Result<[WeightedQuotientTree; 3]> {
        let trees = Direction::ALL.map(|dir| self.quotient_tree(dir));
        let [a, b, c] = trees;
        Ok([a?, b?, c?])
    }

    fn quotient_tree(&self, dir: Direction) -> Result<WeightedQuotientTree> {
        let g = &self.graph;
        let n = g.vertex_count();
        // Components of G - E_dir, numbered in order of smallest vertex.
        let mut component_of = vec![usize::MAX; n];
        let mut components = 0usize;
        for start in 0..n {
            if component_of[start] != usize::MAX {
                continue;
            }
            let comp = components;
            components += 1;
            let mut stack = vec![start];
            component_of[start] = comp;
            while let Some(u) = stack.pop() {
                for &(w, eid) in g.neighbors(u) {
                    if self.edge_direction[eid] != dir && component_of[w] == usize::MAX {
                        component_of[w] = comp;
                        stack.push(w);
                    }
                }
            }
        }

        let mut node_weights = vec![0u64; components];
        let mut degree_in_comp = vec![0usize; n];
        let mut removed = 0u64;
        let mut joins: HashMap<(usize, usize), u64> = HashMap::new();
        for e in 0..g.edge_count() {
            let (u, v) = g.endpoints(e);
            if self.edge_direction[e] == dir {
                removed += 1;
                let (a, b) = (component_of[u], component_of[v]);
                *joins.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            } else {
                debug_assert_eq!(component_of[u], component_of[v]);
                node_weights[component_of[u]] += 1;
                degree_in_comp[u] += 1;
                degree_in_comp[v] += 1;
            }
        }
        // Components of a benzenoid quotient must be paths.
        let mut comp_vertices = vec![0u64; components];
        for v in 0..n {
            comp_vertices[component_of[v]] += 1;
            if degree_in_comp[v] > 2 {
                return Err(Error::Internal(format!(
                    "component of G - E_{} is not a path (vertex {v} has degree {})",
                    dir.label(),
                    degree_in_comp[v]
                )));
            }
        }
        for c in 0..components {
            if node_weights[c] + 1 != comp_vertices[c] {
                return Err(Error::Internal(format!(
                    "component {c} of G - E_{} is not a path",
                    dir.label()
                )));
            }
        }

        let mut edges: Vec<(usize, usize, u64)> =
            joins.into_iter().map(|((a, b), w)| (a, b, w)).collect();
        edges.sort_unstable();
        let tree = WeightedQuotientTree {
            node_weights,
            edges,
            component_of,
        };
        // Tree shape: connected with exactly components - 1 edges.
        if tree.edges.len() + 1 != components || !quotient_connected(&tree) {
            return Err(Error::Internal(format!(
                "quotient of direction {} is not a tree",
                dir.label()
            )));
        }
        debug_assert_eq!(
            tree.edges.iter().map(|&(_, _, w)| w).sum::<u64>(),
            removed
        );
        Ok(tree)
    }
}

fn quotient_connected(t: &WeightedQuotientTree) -> bool {
    let n = t.node_count();
    if n == 0 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b, _) in &t.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// The three Wiener-style sums of a vertex- and edge-weighted tree: for each
/// tree edge split the tree into `C_1, C_2` with node-weight sums `n_1, n_2`
/// and edge-weight sums `m_1, m_2` (the split edge belongs to neither side);
/// returns `(Σ n_1 n_2, Σ m_1 m_2, Σ (n_1 m_2 + n_2 m_1))`.
pub fn weighted_tree_wiener(t: &WeightedQuotientTree) -> Result<(u64, u64, u64)> {
    let n = t.node_count();
    let total_nodes: u64 = t.node_weights().iter().sum();
    let total_edges: u64 = t.edges().iter().map(|&(_, _, w)| w).sum();

    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (idx, &(a, b, _)) in t.edges().iter().enumerate() {
        adj[a].push((b, idx));
        adj[b].push((a, idx));
    }
    // Subtree sums below each tree edge, rooted at node 0.
    let mut parent_edge = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &(w, eidx) in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                parent_edge[w] = eidx;
                stack.push(w);
            }
        }
    }
    let mut sub_nodes: Vec<u64> = t.node_weights().to_vec();
    let mut sub_edges: Vec<u64> = vec![0; n];
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            sub_nodes[parent[u]] += sub_nodes[u];
            sub_edges[parent[u]] += sub_edges[u] + t.edges()[parent_edge[u]].2;
        }
    }

    let (mut w_v, mut w_e_hat, mut w_ve) = (0u64, 0u64, 0u64);
    for u in 0..n {
        if parent[u] == usize::MAX {
            continue;
        }
        let split_weight = t.edges()[parent_edge[u]].2;
        let n1 = sub_nodes[u];
        let n2 = total_nodes - n1;
        let m1 = sub_edges[u];
        let m2 = total_edges - split_weight - m1;
        w_v = add(w_v, mul(n1, n2)?)?;
        w_e_hat = add(w_e_hat, mul(m1, m2)?)?;
        w_ve = add(w_ve, add(mul(n1, m2)?, mul(n2, m1)?)?)?;
    }
    Ok((w_v, w_e_hat, w_ve))
}

/// Edge-Wiener index of a benzenoid via the three weighted quotient trees:
/// `W_e = Σ_i (Ŵ_e + W_v + W_ve)(T_i) + C(m, 2)`.
pub fn edge_wiener_benzenoid(b: &Benzenoid) -> Result<u64> {
    let mut total: u64 = 0;
    for tree in b.quotient_trees()? {
        let (w_v, w_e_hat, w_ve) = weighted_tree_wiener(&tree)?;
        total = add(total, add(w_v, add(w_e_hat, w_ve)?)?)?;
    }
    add(total, binom2(b.graph().edge_count() as u64)?)
}

/// Side bit-vectors of every elementary cut, via the single-BFS labeling
/// constructor. Cuts of a valid benzenoid are Θ*-classes, so an incoherent
/// labeling means the construction itself is broken.
pub fn cut_sides(b: &Benzenoid) -> Result<CutSideTable> {
    CutSideTable::from_coherent_partition(b.graph(), b.cuts())
        .map_err(|why| Error::Internal(format!("elementary cuts are not a cut structure: {why}")))
}

/// Pair-contribution sum over elementary cuts with the geometric
/// cross-check: cuts that do not share a hexagon must leave one of the four
/// side intersections empty, so their contribution degenerates to the
/// product of the two extremal components.
fn ww_star_checked(b: &Benzenoid, sides: &CutSideTable) -> Result<u64> {
    crate::cut::ww_star_pairs(sides, |k, l, counts| {
        if !b.cuts_share_hexagon(k, l) && counts.iter().all(|&c| c > 0) {
            return Err(Error::Internal(format!(
                "cuts {k} and {l} do not intersect but all four parts are nonempty"
            )));
        }
        Ok(())
    })
}

/// Cut-based edge-hyper-Wiener pipeline for benzenoids: elementary cuts,
/// quotient trees for `W_e`, then the cut-pair contributions for `WW_e*` and
/// `WW_e = 2·W_e + WW_e* − C(m, 2)`.
///
/// `W_e` is computed twice on independent routes (quotient trees and side
/// cardinalities); a mismatch is an internal error.
pub fn edge_hyper_wiener_benzenoid(b: &Benzenoid) -> Result<IndexReport> {
    let start = Instant::now();
    let m = b.graph().edge_count() as u64;
    let w_e = edge_wiener_benzenoid(b)?;
    let sides = cut_sides(b)?;
    let (hat, w_e_from_sides) = edge_wiener_cut(&sides)?;
    if w_e_from_sides != w_e {
        return Err(Error::Internal(format!(
            "quotient-tree W_e = {w_e} disagrees with side-count W_e = {w_e_from_sides}"
        )));
    }
    let star = ww_star_checked(b, &sides)?;
    let ww_e = mul(w_e, 2)?
        .checked_add(star)
        .and_then(|x| x.checked_sub(binom2(m).ok()?))
        .ok_or(Error::Overflow)?;
    IndexReport::new(m, w_e, hat, star, ww_e, Method::Benzenoid, start.elapsed())
}

/// Deterministic pseudo-random catacondensed (hole-free, no internal
/// vertices) benzenoid with `hex_count` hexagons. Growth only accepts cells
/// adjacent to exactly one existing hexagon, which rules out holes and
/// three-hex junctions in one stroke.
pub fn random_catacondensed(hex_count: usize, seed: u64) -> Result<Benzenoid> {
    if hex_count < 1 {
        return Err(Error::InvalidParameter(
            "benzenoid needs at least one hexagon".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells: Vec<(i64, i64)> = vec![(0, 0)];
    let mut present: HashMap<(i64, i64), ()> = HashMap::from([((0, 0), ())]);
    let neighbors_in = |present: &HashMap<(i64, i64), ()>, c: (i64, i64)| {
        HEX_NEIGHBORS
            .iter()
            .filter(|&&(dq, dr)| present.contains_key(&(c.0 + dq, c.1 + dr)))
            .count()
    };
    while cells.len() < hex_count {
        let mut placed = false;
        for _ in 0..1000 {
            let base = cells[rng.random_range(0..cells.len())];
            let (dq, dr) = HEX_NEIGHBORS[rng.random_range(0..6)];
            let cand = (base.0 + dq, base.1 + dr);
            if !present.contains_key(&cand) && neighbors_in(&present, cand) == 1 {
                present.insert(cand, ());
                cells.push(cand);
                placed = true;
                break;
            }
        }
        if !placed {
            // Deterministic sweep; a catacondensed system always has a free
            // growth site, so this is a safety net for unlucky sampling.
            let mut sorted = cells.clone();
            sorted.sort_unstable();
            let site = sorted
                .iter()
                .flat_map(|&(q, r)| HEX_NEIGHBORS.iter().map(move |&(dq, dr)| (q + dq, r + dr)))
                .find(|&c| !present.contains_key(&c) && neighbors_in(&present, c) == 1)
                .ok_or_else(|| Error::Internal("no growth site found".into()))?;
            present.insert(site, ());
            cells.push(site);
        }
    }
    build_benzenoid(&cells)
}

/// Parses the benzenoid file format: one `q r` axial pair per line, `#`
/// comments ignored.
pub fn parse_benzenoid(text: &str) -> Result<Benzenoid> {
    let mut hexes = Vec::new();
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
                message: format!("expected 'q r', got {line:?}"),
            });
        }
        let parse = |s: &str| -> Result<i64> {
            s.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid integer {s:?}"),
            })
        };
        hexes.push((parse(fields[0])?, parse(fields[1])?));
    }
    if hexes.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "no hexagon coordinates found".into(),
        });
    }
    build_benzenoid(&hexes)
}

/// Serializes hexagon coordinates in the format accepted by
/// [`parse_benzenoid`].
pub fn write_benzenoid(hexes: &[(i64, i64)]) -> String {
    let mut out = String::new();
    for &(q, r) in hexes {
        out.push_str(&format!("{q} {r}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::edge_indices_naive;
    use crate::theta::theta_classes;

    fn polyacene(h: usize) -> Benzenoid {
        let hexes: Vec<(i64, i64)> = (0..h as i64).map(|i| (i, 0)).collect();
        build_benzenoid(&hexes).unwrap()
    }

    #[test]
    fn benzene_shape() {
        let b = polyacene(1);
        assert_eq!(b.graph().vertex_count(), 6);
        assert_eq!(b.graph().edge_count(), 6);
        for dir in Direction::ALL {
            assert_eq!(b.direction_edges(dir).len(), 2);
        }
        assert_eq!(b.cuts().len(), 3);
        assert!(b.cuts().iter().all(|c| c.len() == 2));
    }

    #[test]
    fn naphthalene_shape() {
        let b = polyacene(2);
        assert_eq!(b.graph().vertex_count(), 10);
        assert_eq!(b.graph().edge_count(), 11);
    }

    #[test]
    fn polyacene_edge_counts() {
        for h in 1..=8 {
            assert_eq!(polyacene(h).graph().edge_count(), 5 * h + 1);
        }
    }

    #[test]
    fn polyacene_cut_sizes() {
        // One vertical cut of h+1 edges, 2h oblique cuts of 2 edges.
        for h in 1..=5usize {
            let b = polyacene(h);
            let mut sizes: Vec<usize> = b.cuts().iter().map(Vec::len).collect();
            sizes.sort_unstable();
            let mut expected = vec![2; 2 * h];
            expected.push(h + 1);
            expected.sort_unstable();
            assert_eq!(sizes, expected);
            let vertical: Vec<_> = b
                .cuts()
                .iter()
                .enumerate()
                .filter(|(_, c)| b.edge_direction(c[0]) == Direction::Vertical)
                .collect();
            assert_eq!(vertical.len(), 1);
            assert_eq!(vertical[0].1.len(), h + 1);
        }
    }

    #[test]
    fn cuts_partition_edges_with_constant_direction() {
        for b in [polyacene(4), random_catacondensed(9, 3).unwrap()] {
            let mut seen = vec![0usize; b.graph().edge_count()];
            for (k, cut) in b.cuts().iter().enumerate() {
                let dir = b.edge_direction(cut[0]);
                for &e in cut {
                    seen[e] += 1;
                    assert_eq!(b.edge_direction(e), dir);
                    assert_eq!(b.cut_of(e), k);
                }
            }
            assert!(seen.iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn cuts_coincide_with_theta_classes() {
        // Includes a pericondensed case: three mutually adjacent hexagons.
        let peri = build_benzenoid(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        assert_eq!(peri.graph().vertex_count(), 13);
        assert_eq!(peri.graph().edge_count(), 15);
        for b in [polyacene(1), polyacene(3), peri, random_catacondensed(8, 11).unwrap()] {
            let tc = theta_classes(b.graph()).unwrap();
            assert_eq!(tc.classes(), b.cuts());
        }
    }

    #[test]
    fn benzene_quotient_trees() {
        let b = polyacene(1);
        for t in b.quotient_trees().unwrap() {
            assert_eq!(t.node_weights(), &[2, 2]);
            assert_eq!(t.edges().len(), 1);
            assert_eq!(t.edges()[0].2, 2);
        }
    }

    #[test]
    fn polyacene_quotient_trees() {
        let b = polyacene(5);
        let [t1, t2, t3] = b.quotient_trees().unwrap();
        // Vertical direction: the two zigzag chains joined by h+1 edges.
        assert_eq!(t1.node_weights(), &[10, 10]);
        assert_eq!(t1.edges(), &[(0, 1, 6)]);
        // Oblique directions: a path of h+1 components, end weights 2,
        // inner weights 3, each join of weight 2.
        for t in [&t2, &t3] {
            let mut w = t.node_weights().to_vec();
            w.sort_unstable();
            assert_eq!(w, vec![2, 2, 3, 3, 3, 3]);
            assert_eq!(t.edges().len(), 5);
            assert!(t.edges().iter().all(|&(_, _, w)| w == 2));
        }

        // Naphthalene oblique: path of three components.
        let b2 = polyacene(2);
        let [_, t2, t3] = b2.quotient_trees().unwrap();
        assert_eq!(t2.node_count(), 3);
        assert_eq!(t3.node_count(), 3);
    }

    #[test]
    fn quotient_conservation() {
        for b in [polyacene(4), random_catacondensed(10, 5).unwrap(), build_benzenoid(&[(0, 0), (1, 0), (0, 1)]).unwrap()] {
            let m = b.graph().edge_count() as u64;
            for (dir, t) in Direction::ALL.into_iter().zip(b.quotient_trees().unwrap()) {
                let class_size = b.direction_edges(dir).len() as u64;
                assert_eq!(t.node_weights().iter().sum::<u64>(), m - class_size);
                assert_eq!(t.edges().iter().map(|&(_, _, w)| w).sum::<u64>(), class_size);
            }
        }
    }

    #[test]
    fn weighted_tree_wiener_polyacene_forms() {
        for h in 1..=8u64 {
            let b = polyacene(h as usize);
            let [t1, t2, t3] = b.quotient_trees().unwrap();
            assert_eq!(weighted_tree_wiener(&t1).unwrap(), (4 * h * h, 0, 0));
            for t in [t2, t3] {
                let (w_v, w_e_hat, w_ve) = weighted_tree_wiener(&t).unwrap();
                assert_eq!(w_v, h * (3 * h * h + 3 * h + 2) / 2);
                assert_eq!(w_e_hat, 2 * h * (h - 1) * h.saturating_sub(2) / 3);
                assert_eq!(w_ve, 2 * (h - 1) * h * h);
            }
        }
    }

    #[test]
    fn single_node_tree_sums_are_zero() {
        let t = WeightedQuotientTree {
            node_weights: vec![7],
            edges: vec![],
            component_of: vec![0],
        };
        assert_eq!(weighted_tree_wiener(&t).unwrap(), (0, 0, 0));
    }

    #[test]
    fn edge_wiener_matches_known_values() {
        assert_eq!(edge_wiener_benzenoid(&polyacene(1)).unwrap(), 27);
        assert_eq!(edge_wiener_benzenoid(&polyacene(3)).unwrap(), 350);
    }

    #[test]
    fn benzenoid_pipeline_known_values() {
        let r = edge_hyper_wiener_benzenoid(&polyacene(1)).unwrap();
        assert_eq!(r.values(), (6, 27, 12, 3, 42));
        assert_eq!(r.method, Method::Benzenoid);

        let r = edge_hyper_wiener_benzenoid(&polyacene(2)).unwrap();
        assert_eq!(r.edge_hyper_wiener, 239);

        let r = edge_hyper_wiener_benzenoid(&polyacene(3)).unwrap();
        assert_eq!(r.edge_wiener, 350);
        assert_eq!(r.edge_hyper_wiener, 812);

        let r = edge_hyper_wiener_benzenoid(&polyacene(4)).unwrap();
        assert_eq!(r.edge_hyper_wiener, 2082);
    }

    #[test]
    fn benzenoid_pipeline_agrees_with_oracle_and_cut() {
        for (hexes, seed) in [(2usize, 1u64), (5, 2), (7, 3), (9, 4)] {
            let b = random_catacondensed(hexes, seed).unwrap();
            let alg = edge_hyper_wiener_benzenoid(&b).unwrap();
            let naive = edge_indices_naive(b.graph()).unwrap();
            let cut = crate::cut::edge_hyper_wiener_cut(b.graph()).unwrap();
            assert_eq!(alg.values(), naive.values());
            assert_eq!(alg.values(), cut.values());
        }
    }

    #[test]
    fn side_count_f_matches_extremal_products_for_disjoint_cuts() {
        // For cuts that do not share a hexagon, the pair contribution must
        // equal the product of the edge counts of the two extremal
        // components of G - C_k - C_l (the components touching one cut).
        for seed in [2u64, 9, 17] {
            let b = random_catacondensed(7, seed).unwrap();
            let g = b.graph();
            let sides = cut_sides(&b).unwrap();
            for k in 0..b.cuts().len() {
                for l in (k + 1)..b.cuts().len() {
                    if b.cuts_share_hexagon(k, l) {
                        continue;
                    }
                    let f_side = {
                        let m11 = sides.edges_a(k).intersection_count(sides.edges_a(l));
                        let m00 = sides.edges_b(k).intersection_count(sides.edges_b(l));
                        let m10 = sides.edges_a(k).intersection_count(sides.edges_b(l));
                        let m01 = sides.edges_b(k).intersection_count(sides.edges_a(l));
                        m11 * m00 + m10 * m01
                    };

                    // Components of G - C_k - C_l and which cuts each touches.
                    let mut removed = vec![false; g.edge_count()];
                    for &e in b.cuts()[k].iter().chain(&b.cuts()[l]) {
                        removed[e] = true;
                    }
                    let mut comp = vec![usize::MAX; g.vertex_count()];
                    let mut count = 0usize;
                    for start in 0..g.vertex_count() {
                        if comp[start] != usize::MAX {
                            continue;
                        }
                        comp[start] = count;
                        let mut stack = vec![start];
                        while let Some(u) = stack.pop() {
                            for &(w, eid) in g.neighbors(u) {
                                if !removed[eid] && comp[w] == usize::MAX {
                                    comp[w] = count;
                                    stack.push(w);
                                }
                            }
                        }
                        count += 1;
                    }
                    assert_eq!(count, 3, "disjoint cuts must leave three components");
                    let mut edge_count = vec![0u64; count];
                    for (e, &gone) in removed.iter().enumerate() {
                        if !gone {
                            edge_count[comp[g.endpoints(e).0]] += 1;
                        }
                    }
                    let touches = |c: usize, cut: usize| {
                        b.cuts()[cut]
                            .iter()
                            .any(|&e| comp[g.endpoints(e).0] == c || comp[g.endpoints(e).1] == c)
                    };
                    let extremal: Vec<u64> = (0..count)
                        .filter(|&c| touches(c, k) ^ touches(c, l))
                        .map(|c| edge_count[c])
                        .collect();
                    assert_eq!(extremal.len(), 2);
                    assert_eq!(f_side, extremal[0] * extremal[1], "cuts {k}, {l}");
                }
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            build_benzenoid(&[(0, 0), (0, 0)]),
            Err(Error::DuplicateHexagon { q: 0, r: 0 })
        ));
        assert!(matches!(
            build_benzenoid(&[(0, 0), (5, 5)]),
            Err(Error::DisconnectedHexes { .. })
        ));
        assert!(matches!(build_benzenoid(&[]), Err(Error::InvalidParameter(_))));
        // Ring of six hexagons around an empty center.
        let ring: Vec<(i64, i64)> = HEX_NEIGHBORS.to_vec();
        assert!(matches!(build_benzenoid(&ring), Err(Error::HoleDetected)));
    }

    #[test]
    fn random_catacondensed_properties() {
        let b = random_catacondensed(1, 42).unwrap();
        assert_eq!(b.graph().edge_count(), 6);

        for seed in 0..12u64 {
            let b = random_catacondensed(3, seed).unwrap();
            assert_eq!(b.graph().edge_count(), 16);
        }

        for seed in [7u64, 13, 99] {
            let b = random_catacondensed(12, seed).unwrap();
            let (h, n, m) = (
                b.hex_count() as i64,
                b.graph().vertex_count() as i64,
                b.graph().edge_count() as i64,
            );
            // No internal vertices in a catacondensed system.
            assert_eq!(m, 5 * h + 1);
            assert_eq!(n + h - m, 1);
            // Determinism.
            assert_eq!(random_catacondensed(12, seed).unwrap().hexes(), b.hexes());
        }
    }

    #[test]
    fn benzenoid_file_round_trip() {
        let b = random_catacondensed(6, 20).unwrap();
        let text = write_benzenoid(b.hexes());
        let parsed = parse_benzenoid(&text).unwrap();
        assert_eq!(parsed.hexes(), b.hexes());
        assert_eq!(parsed.graph(), b.graph());

        assert!(matches!(
            parse_benzenoid("0 0\n1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_benzenoid("# empty\n").is_err());
    }
}
