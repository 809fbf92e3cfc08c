//! Exact Hamilton path and cycle decisions.
//!
//! The subset dynamic programme keeps, for every vertex subset `S`, the set
//! of vertices at which some path covering exactly `S` can end. One `u32`
//! per subset, so order 24 needs 64 MiB.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the subset DP decision procedures.
pub const MAX_EXACT_ORDER: usize = 24;
/// Largest order for which DP witnesses are reconstructed.
pub const MAX_WITNESS_ORDER: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessKind {
    Path,
    Cycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonWitness {
    pub kind: WitnessKind,
    pub order: Vec<usize>,
}

impl HamiltonWitness {
    /// Visits every vertex once along edges of `g` (closing up for a cycle).
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.order.len() != n {
            return false;
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.order {
            if v >= n || seen.contains(v) {
                return false;
            }
            seen = seen.insert(v);
        }
        let along = self.order.windows(2).all(|w| g.has_edge(w[0], w[1]));
        match self.kind {
            WitnessKind::Path => along,
            WitnessKind::Cycle => {
                along && n >= 3 && g.has_edge(self.order[n - 1], self.order[0])
            }
        }
    }
}

fn check(g: &Graph, max: usize) -> Result<()> {
    if g.n() > max {
        Err(Error::OrderTooLargeForExact { n: g.n(), max })
    } else {
        Ok(())
    }
}

/// `reach[S]` = vertices `v` in `S` such that a path covers `S` and ends at `v`.
fn path_table(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let rows: Vec<u32> = g.rows().iter().map(|&r| r as u32).collect();
    let mut reach = vec![0u32; 1usize << n];
    for v in 0..n {
        reach[1 << v] = 1 << v;
    }
    for s in 1usize..(1 << n) {
        if s & (s - 1) == 0 {
            continue;
        }
        let mut ends = 0u32;
        let mut rest = s as u32;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            if reach[s ^ (1 << v)] & rows[v as usize] != 0 {
                ends |= 1 << v;
            }
        }
        reach[s] = ends;
    }
    reach
}

/// Same table restricted to paths starting at vertex 0 (subsets holding 0).
fn cycle_table(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let rows: Vec<u32> = g.rows().iter().map(|&r| r as u32).collect();
    let mut reach = vec![0u32; 1usize << n];
    reach[1] = 1;
    for s in (3usize..(1 << n)).step_by(2) {
        let mut ends = 0u32;
        let mut rest = (s as u32) & !1;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            if reach[s ^ (1 << v)] & rows[v as usize] != 0 {
                ends |= 1 << v;
            }
        }
        reach[s] = ends;
    }
    reach
}

/// Traceability by subset DP. Disconnected graphs are never traceable.
pub fn has_hamilton_path(g: &Graph) -> Result<bool> {
    check(g, MAX_EXACT_ORDER)?;
    if g.n() == 1 {
        return Ok(true);
    }
    if !g.is_connected() {
        return Ok(false);
    }
    let full = (1usize << g.n()) - 1;
    Ok(path_table(g)[full] != 0)
}

/// Hamiltonicity by subset DP anchored at vertex 0. Needs `n >= 3`.
pub fn has_hamilton_cycle(g: &Graph) -> Result<bool> {
    check(g, MAX_EXACT_ORDER)?;
    if g.n() < 3 || !g.is_connected() || (0..g.n()).any(|v| g.degree(v) < 2) {
        return Ok(false);
    }
    let full = (1usize << g.n()) - 1;
    Ok(cycle_table(g)[full] & g.rows()[0] as u32 != 0)
}

pub fn find_hamilton_path(g: &Graph) -> Result<Option<HamiltonWitness>> {
    check(g, MAX_WITNESS_ORDER)?;
    let n = g.n();
    if n == 1 {
        return Ok(Some(HamiltonWitness {
            kind: WitnessKind::Path,
            order: vec![0],
        }));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let reach = path_table(g);
    let full = (1usize << n) - 1;
    let Some(end) = VertexSet(reach[full] as u64).first() else {
        return Ok(None);
    };
    Ok(Some(HamiltonWitness {
        kind: WitnessKind::Path,
        order: walk_back(g, &reach, full, end),
    }))
}

pub fn find_hamilton_cycle(g: &Graph) -> Result<Option<HamiltonWitness>> {
    check(g, MAX_WITNESS_ORDER)?;
    let n = g.n();
    if n < 3 || !g.is_connected() {
        return Ok(None);
    }
    let reach = cycle_table(g);
    let full = (1usize << n) - 1;
    let Some(end) = VertexSet((reach[full] as u64) & g.rows()[0]).first() else {
        return Ok(None);
    };
    Ok(Some(HamiltonWitness {
        kind: WitnessKind::Cycle,
        order: walk_back(g, &reach, full, end),
    }))
}

fn walk_back(g: &Graph, reach: &[u32], mut set: usize, mut end: usize) -> Vec<usize> {
    let mut order = vec![end];
    while set.count_ones() > 1 {
        let prev_set = set ^ (1 << end);
        let prev = VertexSet(reach[prev_set] as u64 & g.rows()[end])
            .first()
            .expect("DP table is consistent");
        order.push(prev);
        set = prev_set;
        end = prev;
    }
    order.reverse();
    order
}

/// Exact Hamilton path search by pruned depth-first search, usable at any
/// order up to 64. Exponential in the worst case; intended for dense graphs
/// beyond the DP range.
pub fn search_hamilton_path(g: &Graph) -> Option<HamiltonWitness> {
    let n = g.n();
    if n == 1 {
        return Some(HamiltonWitness {
            kind: WitnessKind::Path,
            order: vec![0],
        });
    }
    if !g.is_connected() {
        return None;
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if leaves.len() > 2 {
        return None;
    }
    let starts: Vec<usize> = if leaves.is_empty() {
        let mut all: Vec<usize> = (0..n).collect();
        all.sort_by_key(|&v| (g.degree(v), v));
        all
    } else {
        vec![leaves[0]]
    };
    let mut path = Vec::with_capacity(n);
    for s in starts {
        path.clear();
        path.push(s);
        if extend(g, &mut path, g.vertices().remove(s)) {
            return Some(HamiltonWitness {
                kind: WitnessKind::Path,
                order: path,
            });
        }
    }
    None
}

fn extend(g: &Graph, path: &mut Vec<usize>, rest: VertexSet) -> bool {
    if rest.is_empty() {
        return true;
    }
    let end = *path.last().expect("path is nonempty");
    let live = rest.insert(end);
    if g.reachable_within(end, live) != live {
        return false;
    }
    // Only the final vertex may have fewer than two usable neighbours.
    let mut dead_ends = 0;
    for u in rest {
        if g.neighbors(u).intersection(live).len() <= 1 {
            dead_ends += 1;
            if dead_ends > 1 {
                return false;
            }
        }
    }
    let mut next: Vec<usize> = g.neighbors(end).intersection(rest).to_vec();
    next.sort_by_key(|&u| (g.neighbors(u).intersection(rest).len(), u));
    for u in next {
        path.push(u);
        if extend(g, path, rest.remove(u)) {
            return true;
        }
        path.pop();
    }
    false
}

/// Traceability for any order: subset DP up to [`MAX_WITNESS_ORDER`],
/// pruned search above it (the DP table alone is 64 MiB at order 24).
pub fn is_traceable(g: &Graph) -> bool {
    if g.n() <= MAX_WITNESS_ORDER {
        has_hamilton_path(g).expect("order within DP range")
    } else {
        search_hamilton_path(g).is_some()
    }
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0)
}

/// Minimum of `d(u) + d(v)` over distinct non-adjacent pairs; `None` for
/// complete graphs.
pub fn degree_sum_nonadjacent_min(g: &Graph) -> Option<usize> {
    nonadjacent_sums(g).min()
}

/// Maximum of `d(u) + d(v)` over distinct non-adjacent pairs.
pub fn degree_sum_nonadjacent_max(g: &Graph) -> Option<usize> {
    nonadjacent_sums(g).max()
}

fn nonadjacent_sums(g: &Graph) -> impl Iterator<Item = usize> + '_ {
    let c = g.complement();
    let pairs: Vec<(usize, usize)> = c.edges().collect();
    pairs.into_iter().map(move |(u, v)| g.degree(u) + g.degree(v))
}
