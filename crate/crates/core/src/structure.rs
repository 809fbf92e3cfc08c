//! Forbidden induced subgraphs, neighbourhood types and the closure.
//!
//! A vertex is *eligible* when its neighbourhood induces a connected,
//! non-complete graph. Completing that neighbourhood to a clique is a
//! *local completion*; repeating it until no eligible vertex remains gives
//! the closure of a claw-free graph.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest pattern accepted by [`find_induced`].
pub const MAX_PATTERN_ORDER: usize = 10;

/// Returns a vertex set of `host` inducing a copy of `pattern`.
///
/// Backtracking assigns pattern vertices in order of decreasing degree and
/// enforces adjacency and non-adjacency against every earlier assignment.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Result<Option<VertexSet>> {
    if pattern.n() > MAX_PATTERN_ORDER {
        return Err(Error::PatternTooLarge(pattern.n()));
    }
    if pattern.n() > host.n() || pattern.m() > host.m() {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..pattern.n()).collect();
    // Highest degree first, then prefer vertices adjacent to earlier picks.
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    let mut sorted = Vec::with_capacity(order.len());
    let mut placed = VertexSet::EMPTY;
    while sorted.len() < order.len() {
        let next = *order
            .iter()
            .filter(|&&v| !placed.contains(v))
            .max_by_key(|&&v| {
                (
                    pattern.neighbors(v).intersection(placed).len(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex remains");
        placed = placed.insert(next);
        sorted.push(next);
    }
    let mut image = vec![usize::MAX; pattern.n()];
    let found = assign(host, pattern, &sorted, 0, &mut image, VertexSet::EMPTY);
    Ok(found.then(|| image.iter().copied().collect()))
}

fn assign(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut candidates = host.vertices().difference(used);
    for &q in &order[..depth] {
        let hq = host.neighbors(image[q]);
        candidates = if pattern.has_edge(p, q) {
            candidates.intersection(hq)
        } else {
            candidates.difference(hq)
        };
    }
    let need = pattern.degree(p);
    for h in candidates {
        if host.degree(h) < need {
            continue;
        }
        image[p] = h;
        if assign(host, pattern, order, depth + 1, image, used.insert(h)) {
            return true;
        }
    }
    image[p] = usize::MAX;
    false
}

/// An induced claw as `(centre, [leaf; 3])`.
pub fn find_claw(g: &Graph) -> Option<(usize, [usize; 3])> {
    (0..g.n()).find_map(|v| claw_at(g, v).map(|leaves| (v, leaves)))
}

/// Three pairwise non-adjacent neighbours of `v`, if any.
pub fn claw_at(g: &Graph, v: usize) -> Option<[usize; 3]> {
    let nv = g.neighbors(v);
    for a in nv {
        let after_a = VertexSet(nv.0 & !((2u64 << a).wrapping_sub(1)));
        let free_a = after_a.difference(g.neighbors(a));
        for b in free_a {
            let after_b = VertexSet(free_a.0 & !((2u64 << b).wrapping_sub(1)));
            if let Some(c) = after_b.difference(g.neighbors(b)).first() {
                return Some([a, b, c]);
            }
        }
    }
    None
}

/// No vertex has three pairwise non-adjacent neighbours.
pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.n()).all(|v| claw_at(g, v).is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NeighborhoodType {
    Clique,
    TwoCliques,
    Other,
}

fn is_clique(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| s.remove(v).is_subset(g.neighbors(v)))
}

pub fn classify_neighborhood(g: &Graph, x: usize) -> NeighborhoodType {
    let nx = g.neighbors(x);
    if is_clique(g, nx) {
        return NeighborhoodType::Clique;
    }
    let Some(start) = nx.first() else {
        return NeighborhoodType::Clique;
    };
    let first = g.reachable_within(start, nx);
    let rest = nx.difference(first);
    if rest.is_empty() {
        return NeighborhoodType::Other;
    }
    let second = g.reachable_within(rest.first().expect("nonempty"), rest);
    if second == rest && is_clique(g, first) && is_clique(g, second) {
        NeighborhoodType::TwoCliques
    } else {
        NeighborhoodType::Other
    }
}

/// Neighbourhood induces a connected, non-complete graph.
pub fn is_eligible(g: &Graph, x: usize) -> bool {
    let nx = g.neighbors(x);
    match nx.first() {
        None => false,
        Some(start) => g.reachable_within(start, nx) == nx && !is_clique(g, nx),
    }
}

/// Neighbourhood is neither a clique nor two disjoint cliques.
pub fn is_bad(g: &Graph, x: usize) -> bool {
    classify_neighborhood(g, x) == NeighborhoodType::Other
}

pub fn eligible_vertices(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&x| is_eligible(g, x)).collect()
}

/// One local completion: the eligible vertex and the pairs added.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureStep {
    pub vertex: usize,
    pub added: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult {
    pub closed: Graph,
    pub steps: Vec<ClosureStep>,
}

impl ClosureResult {
    /// Re-applies the recorded steps to `start`.
    pub fn replay(&self, start: &Graph) -> Result<Graph> {
        let mut g = start.clone();
        for step in &self.steps {
            g = g.with_edges_added(&step.added)?;
        }
        Ok(g)
    }
}

/// Adds every missing edge between neighbours of the eligible vertex `x`.
pub fn local_completion(g: &Graph, x: usize) -> Result<(Graph, ClosureStep)> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    if !is_eligible(g, x) {
        return Err(Error::NotEligible(x));
    }
    let nx = g.neighbors(x);
    let mut added = Vec::new();
    for u in nx {
        for v in VertexSet(nx.0 & !((2u64 << u).wrapping_sub(1))) {
            if !g.has_edge(u, v) {
                added.push((u, v));
            }
        }
    }
    let next = g.with_edges_added(&added)?;
    Ok((next, ClosureStep { vertex: x, added }))
}

/// Closure, completing the lowest-indexed eligible vertex at each step.
pub fn closure(g: &Graph) -> Result<ClosureResult> {
    closure_by(g, |eligible| eligible.first().expect("nonempty"))
}

/// Closure with a caller-chosen eligible vertex at each step. `pick`
/// receives the current eligible set and must return one of its members.
pub fn closure_by<F>(g: &Graph, mut pick: F) -> Result<ClosureResult>
where
    F: FnMut(VertexSet) -> usize,
{
    if !is_claw_free(g) {
        return Err(Error::NotClawFree);
    }
    let mut current = g.clone();
    let mut steps = Vec::new();
    loop {
        let eligible = eligible_vertices(&current);
        if eligible.is_empty() {
            break;
        }
        let x = pick(eligible);
        if !eligible.contains(x) {
            return Err(Error::NotEligible(x));
        }
        let (next, step) = local_completion(&current, x)?;
        current = next;
        steps.push(step);
    }
    Ok(ClosureResult {
        closed: current,
        steps,
    })
}

pub fn is_closed(g: &Graph) -> Result<bool> {
    if !is_claw_free(g) {
        return Err(Error::NotClawFree);
    }
    Ok(eligible_vertices(g).is_empty())
}
