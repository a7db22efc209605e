//! Cut-method computation of the edge indices for certified partial cubes,
//! plus the specialized tree path.
//!
//! The pair-contribution sum is
//! `WW_e* = Σ_{k<l} (m11·m00 + m10·m01)` where the four counts classify the
//! remaining edges by their component sides for classes `k` and `l`. With
//! word-packed side sets each pair costs three AND+popcount sweeps; the
//! fourth count follows from the side totals.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{add, binom2, mul, Error, Result};
use crate::graph::Graph;
use crate::report::{IndexReport, Method};
use crate::theta::{certify_partial_cube, Certification, CutSideTable};

/// `(Ŵ_e, W_e)` from the per-class side cardinalities:
/// `Ŵ_e = Σ_k |A_k|·|B_k|`, then `W_e = Ŵ_e + C(m, 2)`.
pub fn edge_wiener_cut(sides: &CutSideTable) -> Result<(u64, u64)> {
    let mut hat: u64 = 0;
    for k in 0..sides.class_count() {
        hat = add(hat, mul(sides.edges_a(k).count(), sides.edges_b(k).count())?)?;
    }
    let w_e = add(hat, binom2(sides.edge_count() as u64)?)?;
    Ok((hat, w_e))
}

/// Pair-contribution sum `WW_e*` over all unordered class pairs.
///
/// `m00` is taken as `|B_k ∩ B_l|` directly; deriving it by subtraction
/// would have to account for the class edges, which belong to neither side.
/// Only `m01` is derived from totals, and the identity used for it is
/// exercised against the direct popcount in tests.
pub fn ww_star(sides: &CutSideTable) -> Result<u64> {
    ww_star_pairs(sides, |_, _, _| Ok(()))
}

/// [`ww_star`] with a per-pair hook receiving `(k, l, [m11, m00, m10, m01])`;
/// the benzenoid pipeline uses it for its geometric cross-check. The loop is
/// parallel over `k` with exact integer partial sums, so the result does not
/// depend on scheduling.
pub(crate) fn ww_star_pairs<F>(sides: &CutSideTable, check: F) -> Result<u64>
where
    F: Fn(usize, usize, [u64; 4]) -> Result<()> + Sync,
{
    let d = sides.class_count();
    if d < 2 {
        return Ok(0);
    }
    let totals: Vec<(u64, u64)> = (0..d)
        .map(|k| (sides.edges_a(k).count(), sides.edges_b(k).count()))
        .collect();
    // Side sets of geometrically close cuts occupy nearby edge-id ranges, so
    // clipping each AND+popcount sweep to the overlap of the nonzero word
    // spans skips most of the table.
    let spans: Vec<((usize, usize), (usize, usize))> = (0..d)
        .map(|k| (sides.edges_a(k).word_support(), sides.edges_b(k).word_support()))
        .collect();
    #[inline]
    fn clipped_and_count(x: &[u64], xs: (usize, usize), y: &[u64], ys: (usize, usize)) -> u64 {
        let lo = xs.0.max(ys.0);
        let hi = xs.1.min(ys.1);
        if lo >= hi {
            return 0;
        }
        x[lo..hi]
            .iter()
            .zip(&y[lo..hi])
            .map(|(a, b)| u64::from((a & b).count_ones()))
            .sum()
    }
    let partials: Vec<Result<u64>> = (0..d - 1)
        .into_par_iter()
        .map(|k| {
            let (a_k, b_k) = (sides.edges_a(k).words(), sides.edges_b(k).words());
            let (sa_k, sb_k) = spans[k];
            let (ca, cb) = totals[k];
            let mut acc: u64 = 0;
            for (l, &(sa_l, sb_l)) in spans.iter().enumerate().skip(k + 1) {
                let (a_l, b_l) = (sides.edges_a(l).words(), sides.edges_b(l).words());
                let m11 = clipped_and_count(a_k, sa_k, a_l, sa_l);
                let m00 = clipped_and_count(b_k, sb_k, b_l, sb_l);
                let m10 = clipped_and_count(a_k, sa_k, b_l, sb_l);
                // |A_k ∩ E_l| and |B_k ∩ E_l| from the row/column totals,
                // then m01 = |B_k| - m00 - |B_k ∩ E_l|.
                let in_class_a = ca
                    .checked_sub(m11)
                    .and_then(|x| x.checked_sub(m10))
                    .ok_or_else(|| Error::Internal("side counts exceed |A_k|".into()))?;
                let in_class_b = sides
                    .class_size(l)
                    .checked_sub(in_class_a)
                    .ok_or_else(|| Error::Internal("class split exceeds |E_l|".into()))?;
                let m01 = cb
                    .checked_sub(m00)
                    .and_then(|x| x.checked_sub(in_class_b))
                    .ok_or_else(|| Error::Internal("side counts exceed |B_k|".into()))?;
                check(k, l, [m11, m00, m10, m01])?;
                acc = add(acc, add(mul(m11, m00)?, mul(m10, m01)?)?)?;
            }
            Ok(acc)
        })
        .collect();
    let mut total: u64 = 0;
    for p in partials {
        total = add(total, p?)?;
    }
    Ok(total)
}

/// Assembles the full report from a side table; shared by the generic-cut,
/// tree, and benzenoid paths.
pub(crate) fn report_from_sides(
    sides: &CutSideTable,
    method: Method,
    start: Instant,
) -> Result<IndexReport> {
    let (hat, w_e) = edge_wiener_cut(sides)?;
    let star = ww_star(sides)?;
    let ww_e = mul(w_e, 2)?
        .checked_add(star)
        .and_then(|x| x.checked_sub(binom2(sides.edge_count() as u64).ok()?))
        .ok_or(Error::Overflow)?;
    IndexReport::new(
        sides.edge_count() as u64,
        w_e,
        hat,
        star,
        ww_e,
        method,
        start.elapsed(),
    )
}

/// Full cut-method pipeline: certify the graph as a partial cube, then
/// compute every index from the per-class side sets.
pub fn edge_hyper_wiener_cut(g: &Graph) -> Result<IndexReport> {
    let start = Instant::now();
    match certify_partial_cube(g)? {
        Certification::Certified(cert) => report_from_sides(&cert.sides, Method::GenericCut, start),
        Certification::Rejected(r) => Err(Error::NotPartialCube(r)),
    }
}

/// Rooted-tree view used by the specialized path: for every edge, the number
/// of edges strictly below it, plus Euler-tour intervals for O(1)
/// ancestor queries.
struct RootedTree {
    /// Edge id -> number of edges in the component of `T - e` on the child
    /// side.
    below: Vec<u64>,
    /// Edge id -> Euler interval of the child endpoint's subtree.
    span: Vec<(u32, u32)>,
}

fn root_tree(t: &Graph) -> RootedTree {
    let n = t.vertex_count();
    let m = t.edge_count();
    let mut below = vec![0u64; m];
    let mut span = vec![(0u32, 0u32); m];
    if n == 0 {
        return RootedTree { below, span };
    }
    let mut parent_edge = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut tin = vec![0u32; n];
    let mut subtree_vertices = vec![1u32; n];

    // Iterative DFS: push (vertex, entered) so each vertex is finalized after
    // all of its children.
    let mut clock: u32 = 0;
    let mut stack = vec![(0usize, false)];
    visited[0] = true;
    let mut tout = vec![0u32; n];
    while let Some((v, entered)) = stack.pop() {
        if entered {
            tout[v] = clock;
            continue;
        }
        tin[v] = clock;
        clock += 1;
        stack.push((v, true));
        for &(w, eid) in t.neighbors(v) {
            if !visited[w] {
                visited[w] = true;
                parent_edge[w] = eid;
                stack.push((w, false));
            }
        }
    }
    // Accumulate subtree vertex counts bottom-up along the DFS finish order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| std::cmp::Reverse(tin[v]));
    let mut parent_vertex = vec![usize::MAX; n];
    for v in 0..n {
        if parent_edge[v] != usize::MAX {
            let (a, b) = t.endpoints(parent_edge[v]);
            parent_vertex[v] = if a == v { b } else { a };
        }
    }
    for &v in &order {
        if parent_vertex[v] != usize::MAX {
            subtree_vertices[parent_vertex[v]] += subtree_vertices[v];
        }
    }
    for v in 0..n {
        if parent_edge[v] != usize::MAX {
            let e = parent_edge[v];
            below[e] = u64::from(subtree_vertices[v]) - 1;
            span[e] = (tin[v], tout[v]);
        }
    }
    RootedTree { below, span }
}

/// Tree specialization: `WW_e* = Σ_{k<l} m1·m2` over the edge counts of the
/// two extremal components of `T − {e_k, e_l}`, avoiding Θ machinery
/// entirely. Must agree exactly with [`edge_hyper_wiener_cut`].
pub fn tree_edge_hyper_wiener(t: &Graph) -> Result<IndexReport> {
    let start = Instant::now();
    if t.vertex_count() == 0 || t.edge_count() + 1 != t.vertex_count() || !t.is_connected() {
        return Err(Error::NotATree);
    }
    let m = t.edge_count();
    let rooted = root_tree(t);

    let mut hat: u64 = 0;
    for e in 0..m {
        let above = (m as u64 - 1) - rooted.below[e];
        hat = add(hat, mul(rooted.below[e], above)?)?;
    }
    let w_e = add(hat, binom2(m as u64)?)?;

    let contains = |outer: (u32, u32), inner: (u32, u32)| outer.0 <= inner.0 && inner.1 <= outer.1;
    let partials: Vec<Result<u64>> = (0..m.saturating_sub(1))
        .into_par_iter()
        .map(|k| {
            let mut acc: u64 = 0;
            for l in (k + 1)..m {
                let (m1, m2) = if contains(rooted.span[k], rooted.span[l]) {
                    // e_l below e_k: far side of e_k is everything above it.
                    (rooted.below[l], (m as u64 - 1) - rooted.below[k])
                } else if contains(rooted.span[l], rooted.span[k]) {
                    (rooted.below[k], (m as u64 - 1) - rooted.below[l])
                } else {
                    (rooted.below[k], rooted.below[l])
                };
                acc = add(acc, mul(m1, m2)?)?;
            }
            Ok(acc)
        })
        .collect();
    let mut star: u64 = 0;
    for p in partials {
        star = add(star, p?)?;
    }

    let ww_e = mul(w_e, 2)?
        .checked_add(star)
        .and_then(|x| x.checked_sub(binom2(m as u64).ok()?))
        .ok_or(Error::Overflow)?;
    IndexReport::new(m as u64, w_e, hat, star, ww_e, Method::Tree, start.elapsed())
}
