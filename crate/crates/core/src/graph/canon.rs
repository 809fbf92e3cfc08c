//! Canonical labelling by partition refinement and individualisation.
//!
//! The search follows the classic individualisation-refinement scheme:
//! refine the ordered partition to an equitable one, individualise each
//! vertex of the first non-singleton cell in turn, and keep the leaf whose
//! relabelled adjacency rows are lexicographically largest. Automorphisms
//! found between leaves prune equivalent branches, both by orbit pruning
//! at each node and by jumping back to the first leaf's path.

use std::cmp::Ordering;
use std::fmt;

use super::{graph6, Graph, VertexSet};
use crate::error::{Error, Result};

pub const MAX_CANONICAL_ORDER: usize = 16;

/// Isomorphism-class identifier. Equal forms iff isomorphic graphs.
///
/// The bytes are the graph6 string of the canonically relabelled graph,
/// optionally followed by `;` (outside the graph6 alphabet) and the sizes
/// of the initial colour classes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical graph's graph6 string (colour suffix stripped).
    pub fn graph6(&self) -> &str {
        let s = std::str::from_utf8(&self.0).expect("ascii");
        s.split(';').next().unwrap_or(s)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

/// Canonical labelling: `order[i]` is the vertex placed at position `i`.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub order: Vec<usize>,
    pub form: CanonicalForm,
}

impl Labeling {
    /// Inverse of `order`: canonical position of each vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

fn check(g: &Graph) -> Result<()> {
    if g.n() > MAX_CANONICAL_ORDER {
        Err(Error::OrderTooLargeForCanonical {
            n: g.n(),
            max: MAX_CANONICAL_ORDER,
        })
    } else {
        Ok(())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check(g)?;
    Ok(labeling_with(g, &[g.vertices()]).form)
}

pub fn canonical_labeling(g: &Graph) -> Result<Labeling> {
    check(g)?;
    Ok(labeling_with(g, &[g.vertices()]))
}

/// Canonical form of a vertex-coloured graph. `classes` is an ordered
/// partition of the vertex set; isomorphisms must map each class onto the
/// class at the same index.
pub fn canonical_form_colored(g: &Graph, classes: &[VertexSet]) -> Result<CanonicalForm> {
    check(g)?;
    let union = classes.iter().fold(VertexSet::EMPTY, |a, &c| {
        debug_assert!(a.is_disjoint(c));
        a.union(c)
    });
    if union != g.vertices() || classes.iter().any(|c| c.is_empty()) {
        return Err(Error::InvalidParams(
            "colour classes must partition the vertex set".into(),
        ));
    }
    Ok(labeling_with(g, classes).form)
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let lab = canonical_labeling(g)?;
    Ok(g.permuted(&lab.positions()))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    check(a)?;
    check(b)?;
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Unchecked entry point for callers that already bound the order.
pub(crate) fn labeling_with(g: &Graph, classes: &[VertexSet]) -> Labeling {
    let rows = g.rows();
    let mut cells: Vec<u64> = classes.iter().map(|c| c.0).collect();
    refine(rows, &mut cells);
    let mut search = Search {
        rows,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut path = Vec::new();
    search.node(cells, &mut path);
    let best = search.best.expect("search reaches at least one leaf");
    let pos = {
        let mut pos = vec![0; best.order.len()];
        for (i, &v) in best.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    };
    let mut bytes = graph6::encode(&g.permuted(&pos)).into_bytes();
    if classes.len() > 1 {
        bytes.push(b';');
        let sizes: Vec<String> = classes.iter().map(|c| c.len().to_string()).collect();
        bytes.extend_from_slice(sizes.join(",").as_bytes());
    }
    Labeling {
        order: best.order,
        form: CanonicalForm(bytes),
    }
}

/// Splits cells until the ordered partition is equitable. Subcells are
/// ordered by their neighbour count into the splitting cell, so the result
/// depends only on the isomorphism type of (graph, partition).
fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut groups: Vec<(u32, u64)> = Vec::with_capacity(16);
    'restart: loop {
        for si in 0..cells.len() {
            let splitter = cells[si];
            for ci in 0..cells.len() {
                let cell = cells[ci];
                if cell.count_ones() < 2 {
                    continue;
                }
                groups.clear();
                for v in VertexSet(cell) {
                    let k = (rows[v] & splitter).count_ones();
                    match groups.iter_mut().find(|(key, _)| *key == k) {
                        Some((_, bits)) => *bits |= 1 << v,
                        None => groups.push((k, 1 << v)),
                    }
                }
                if groups.len() > 1 {
                    groups.sort_unstable_by_key(|&(k, _)| k);
                    cells.splice(ci..=ci, groups.iter().map(|&(_, b)| b));
                    continue 'restart;
                }
            }
        }
        break;
    }
}

struct Leaf {
    order: Vec<usize>,
    cert: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(d)` to abandon every frame deeper than depth `d`.
    fn node(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let n = self.rows.len();
        if cells.len() == n {
            return self.leaf(&cells, path);
        }
        let target = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let tc = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in VertexSet(tc) {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, path) {
                continue;
            }
            let mut child = cells.clone();
            child[target] = tc & !(1 << v);
            child.insert(target, 1 << v);
            refine(self.rows, &mut child);
            path.push(v);
            let jump = self.node(child, path);
            path.pop();
            explored.push(v);
            if let Some(d) = jump {
                if d < path.len() {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let cert: Vec<u64> = order
            .iter()
            .map(|&v| {
                VertexSet(self.rows[v])
                    .iter()
                    .fold(0u64, |acc, u| acc | (1 << pos[u]))
            })
            .collect();
        let leaf = Leaf {
            order,
            cert,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                order: leaf.order.clone(),
                cert: leaf.cert.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if leaf.cert == first.cert {
            let auto = map_between(&first.order, &leaf.order);
            let depth = first
                .path
                .iter()
                .zip(&leaf.path)
                .take_while(|(a, b)| a == b)
                .count();
            self.autos.push(auto);
            return Some(depth);
        }
        let best = self.best.as_ref().expect("best set with first");
        match leaf.cert.cmp(&best.cert) {
            Ordering::Greater => self.best = Some(leaf),
            Ordering::Equal => {
                let auto = map_between(&best.order, &leaf.order);
                self.autos.push(auto);
            }
            Ordering::Less => {}
        }
        None
    }

    /// Orbit test under the automorphisms found so far that fix `path`
    /// pointwise.
    fn equivalent_to_explored(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for auto in &self.autos {
            if path.iter().any(|&p| auto[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in auto.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// Permutation sending `from[i]` to `to[i]`.
fn map_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut auto = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        auto[a] = b;
    }
    auto
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        g.permuted(&perm)
    }

    #[test]
    fn complete_graph_relabelled() {
        let k4 = Graph::complete(4);
        assert_eq!(
            canonical_form(&k4).unwrap(),
            canonical_form(&shuffled(&k4, 3)).unwrap()
        );
    }

    #[test]
    fn net_vs_claw_plus_two() {
        let net =
            Graph::from_edges(6, &[(0, 3), (0, 1), (0, 2), (1, 2), (1, 4), (2, 5)]).unwrap();
        let other = Graph::star(4).disjoint_union(&Graph::empty(2)).unwrap();
        assert!(!are_isomorphic(&net, &other).unwrap());
        assert_ne!(canonical_form(&net).unwrap(), canonical_form(&other).unwrap());
    }

    #[test]
    fn symmetric_graphs_finish() {
        for g in [
            Graph::empty(16),
            Graph::complete(16),
            Graph::cycle(16),
            Graph::complete(8).disjoint_union(&Graph::complete(8)).unwrap(),
        ] {
            let a = canonical_form(&g).unwrap();
            for seed in 0..5 {
                assert_eq!(a, canonical_form(&shuffled(&g, seed)).unwrap());
            }
        }
    }

    #[test]
    fn petersen_and_regular_pairs() {
        let petersen = Graph::from_graph6("IheA@GUAo").unwrap();
        let prism = Graph::cycle(5)
            .disjoint_union(&Graph::cycle(5))
            .unwrap()
            .with_edges_added(&[(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)])
            .unwrap();
        assert!(!are_isomorphic(&petersen, &prism).unwrap());
        for seed in 0..10 {
            assert!(are_isomorphic(&petersen, &shuffled(&petersen, seed)).unwrap());
            assert!(are_isomorphic(&prism, &shuffled(&prism, seed)).unwrap());
        }
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        let g = Graph::wheel(6);
        let c = canonical_graph(&g).unwrap();
        assert_eq!(canonical_graph(&c).unwrap(), c);
        assert_eq!(canonical_form(&c).unwrap().graph6(), c.to_graph6());
    }

    #[test]
    fn colours_distinguish_orbits() {
        let p4 = Graph::path(4);
        let end = |v| {
            canonical_form_colored(&p4, &[VertexSet::singleton(v), p4.vertices().remove(v)])
                .unwrap()
        };
        assert_eq!(end(0), end(3));
        assert_eq!(end(1), end(2));
        assert_ne!(end(0), end(1));
    }

    #[test]
    fn order_limit() {
        assert!(matches!(
            canonical_form(&Graph::empty(17)),
            Err(Error::OrderTooLargeForCanonical { .. })
        ));
    }
}
