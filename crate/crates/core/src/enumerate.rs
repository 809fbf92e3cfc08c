//! Isomorph-free exhaustive generation and seeded random samplers.
//!
//! Exhaustive mode grows graphs one vertex at a time by canonical
//! augmentation: a child `G + v` is kept only when `v` lies in the
//! automorphism orbit of the child's canonical deletion vertex, and
//! children of one parent are deduplicated by canonical form. Each
//! isomorphism class is then produced exactly once without a global table.
//! In connected mode the deletion vertex is chosen among non-cut vertices,
//! so every parent is itself connected.
//!
//! Hereditary predicates (claw-free, N-free, M-free) prune the search at
//! every level; the others are checked only on emitted graphs.

use std::collections::{BTreeMap, HashSet};
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::canon::{labeling_with, CanonicalForm};
use crate::graph::{Graph, VertexSet};
use crate::structure;

pub const MAX_EXHAUSTIVE_ORDER: usize = 9;
pub const MAX_SAMPLE_ORDER: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Predicate {
    ClawFree,
    NFree,
    MFree,
    Closed,
    TwoConnected,
    BlockChain,
}

impl Predicate {
    /// Closed under taking induced subgraphs.
    pub fn is_hereditary(self) -> bool {
        matches!(self, Predicate::ClawFree | Predicate::NFree | Predicate::MFree)
    }

    pub fn holds(self, g: &Graph) -> bool {
        match self {
            Predicate::ClawFree => structure::is_claw_free(g),
            Predicate::NFree => !contains(g, &FamilySpec::NetN),
            Predicate::MFree => !contains(g, &FamilySpec::GraphM),
            Predicate::Closed => structure::is_closed(g).unwrap_or(false),
            Predicate::TwoConnected => g.is_two_connected(),
            Predicate::BlockChain => g.is_block_chain().unwrap_or(false),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Predicate::ClawFree => "claw-free",
            Predicate::NFree => "n-free",
            Predicate::MFree => "m-free",
            Predicate::Closed => "closed",
            Predicate::TwoConnected => "2-connected",
            Predicate::BlockChain => "block-chain",
        }
    }

    pub fn parse(s: &str) -> Result<Predicate> {
        Ok(match s {
            "claw-free" => Predicate::ClawFree,
            "n-free" => Predicate::NFree,
            "m-free" => Predicate::MFree,
            "closed" => Predicate::Closed,
            "2-connected" | "two-connected" => Predicate::TwoConnected,
            "block-chain" => Predicate::BlockChain,
            other => return Err(Error::InvalidParams(format!("unknown predicate '{other}'"))),
        })
    }
}

fn contains(g: &Graph, spec: &FamilySpec) -> bool {
    let pattern = spec.make().expect("fixed pattern");
    structure::find_induced(g, &pattern)
        .expect("pattern within size limit")
        .is_some()
}

/// Edge density range for sampled graphs, as fractions of `C(n, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Density {
    pub min: f64,
    pub max: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Mode {
    Exhaustive,
    Sample { count: usize, seed: u64, density: Density },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub n: usize,
    pub predicates: Vec<Predicate>,
    /// Emit only connected graphs.
    pub connected: bool,
    pub mode: Mode,
}

impl EnumSpec {
    /// Connected claw-free graphs of order `n`, exhaustively.
    pub fn claw_free(n: usize) -> EnumSpec {
        EnumSpec {
            n,
            predicates: vec![Predicate::ClawFree],
            connected: true,
            mode: Mode::Exhaustive,
        }
    }

    pub fn with(mut self, p: Predicate) -> EnumSpec {
        if !self.predicates.contains(&p) {
            self.predicates.push(p);
        }
        self
    }

    pub fn validate(&self) -> Result<()> {
        let cap = match self.mode {
            Mode::Exhaustive => MAX_EXHAUSTIVE_ORDER,
            Mode::Sample { density, .. } => {
                if !(0.0..=1.0).contains(&density.min)
                    || !(0.0..=1.0).contains(&density.max)
                    || density.min > density.max
                {
                    return Err(Error::InfeasibleSpec(format!(
                        "density range [{}, {}] is not within [0, 1]",
                        density.min, density.max
                    )));
                }
                MAX_SAMPLE_ORDER
            }
        };
        if self.n == 0 || self.n > cap {
            return Err(Error::InfeasibleSpec(format!(
                "order {} outside 1..={cap} for {:?} mode",
                self.n, self.mode
            )));
        }
        Ok(())
    }

    fn hereditary(&self) -> Vec<Predicate> {
        self.predicates.iter().copied().filter(|p| p.is_hereditary()).collect()
    }

    fn accepts(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected()) && self.predicates.iter().all(|p| p.holds(g))
    }
}

struct Augmenter {
    hereditary: Vec<Predicate>,
    connected: bool,
}

impl Augmenter {
    fn new(spec: &EnumSpec) -> Augmenter {
        Augmenter {
            hereditary: spec.hereditary(),
            connected: spec.connected,
        }
    }

    /// Accepted one-vertex extensions of `parent`, in mask order.
    fn children(&self, parent: &Graph) -> Vec<Graph> {
        let k = parent.n();
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut out = Vec::new();
        let first_mask = if self.connected { 1u64 } else { 0 };
        for mask in first_mask..(1u64 << k) {
            let mut rows = parent.rows().to_vec();
            for u in VertexSet(mask) {
                rows[u] |= 1 << k;
            }
            rows.push(mask);
            let child = Graph::from_rows_unchecked(rows);
            if !self.hereditary.iter().all(|p| p.holds(&child)) {
                continue;
            }
            let Some(form) = self.canonical_extension(&child) else {
                continue;
            };
            if seen.insert(form) {
                out.push(child);
            }
        }
        out
    }

    /// Canonical form of `child` when its last vertex is a valid canonical
    /// deletion; `None` otherwise.
    fn canonical_extension(&self, child: &Graph) -> Option<CanonicalForm> {
        let n = child.n();
        let v = n - 1;
        let lab = labeling_with(child, &[child.vertices()]);
        let deletable: VertexSet = if self.connected {
            (0..n)
                .filter(|&u| {
                    let rest = child.vertices().remove(u);
                    rest.is_empty()
                        || child.reachable_within(rest.first().expect("nonempty"), rest) == rest
                })
                .collect()
        } else {
            child.vertices()
        };
        if !deletable.contains(v) {
            return None;
        }
        // Highest canonical position among deletable vertices.
        let w = *lab
            .order
            .iter()
            .rev()
            .find(|&&u| deletable.contains(u))
            .expect("some vertex is deletable");
        if w == v {
            return Some(lab.form);
        }
        if child.degree(w) != child.degree(v) {
            return None;
        }
        let all = child.vertices();
        let fv = labeling_with(child, &[VertexSet::singleton(v), all.remove(v)]).form;
        let fw = labeling_with(child, &[VertexSet::singleton(w), all.remove(w)]).form;
        (fv == fw).then_some(lab.form)
    }

    fn descend<F: FnMut(&Graph)>(&self, g: &Graph, target: usize, emit: &mut F) {
        if g.n() == target {
            emit(g);
            return;
        }
        for child in self.children(g) {
            self.descend(&child, target, emit);
        }
    }

    /// All accepted graphs at order `level`, in search order.
    fn frontier(&self, level: usize) -> Vec<Graph> {
        let mut out = Vec::new();
        self.descend(&Graph::empty(1), level, &mut |g| out.push(g.clone()));
        out
    }
}

fn split_level(n: usize) -> usize {
    n.saturating_sub(3).clamp(1, 5)
}

/// Streams every graph of the spec to `consumer`; returns how many.
pub fn enumerate<F: FnMut(&Graph)>(spec: &EnumSpec, mut consumer: F) -> Result<u64> {
    spec.validate()?;
    let mut count = 0u64;
    match spec.mode {
        Mode::Exhaustive => {
            let aug = Augmenter::new(spec);
            aug.descend(&Graph::empty(1), spec.n, &mut |g| {
                if spec.accepts(g) {
                    count += 1;
                    consumer(g);
                }
            });
        }
        Mode::Sample { count: wanted, seed, density } => {
            for i in 0..wanted {
                let g = sample_one(spec, derive_seed(seed, i as u64), density)?;
                count += 1;
                consumer(&g);
            }
        }
    }
    Ok(count)
}

/// Collects the spec's graphs using `workers` threads (all cores when
/// `None`). The output order does not depend on the worker count.
pub fn enumerate_parallel(spec: &EnumSpec, workers: Option<usize>) -> Result<Vec<Graph>> {
    spec.validate()?;
    let pool = build_pool(workers)?;
    pool.install(|| match spec.mode {
        Mode::Exhaustive => {
            let aug = Augmenter::new(spec);
            let frontier = aug.frontier(split_level(spec.n).min(spec.n));
            let parts: Vec<Vec<Graph>> = frontier
                .par_iter()
                .map(|root| {
                    let mut out = Vec::new();
                    aug.descend(root, spec.n, &mut |g| {
                        if spec.accepts(g) {
                            out.push(g.clone());
                        }
                    });
                    out
                })
                .collect();
            Ok(parts.into_iter().flatten().collect())
        }
        Mode::Sample { count, seed, density } => (0..count)
            .into_par_iter()
            .map(|i| sample_one(spec, derive_seed(seed, i as u64), density))
            .collect(),
    })
}

pub(crate) fn build_pool(workers: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        b = b.num_threads(w.max(1));
    }
    b.build()
        .map_err(|e| Error::InfeasibleSpec(format!("thread pool: {e}")))
}

/// Exhaustive enumeration that records finished frontier branches in
/// `checkpoint` and skips them when resumed.
///
/// The file is plain text, one line per finished branch:
/// `<graph6 of the frontier graph> <number of graphs emitted below it>`.
/// Graphs from branches finished in an earlier run are not re-emitted, but
/// their counts are included in the returned total.
pub fn enumerate_with_checkpoint<F>(spec: &EnumSpec, checkpoint: &Path, mut consumer: F) -> Result<u64>
where
    F: FnMut(&Graph),
{
    spec.validate()?;
    if spec.mode != Mode::Exhaustive {
        return Err(Error::InfeasibleSpec("checkpointing needs exhaustive mode".into()));
    }
    let io = |e: std::io::Error| Error::Checkpoint(e.to_string());
    let mut done: BTreeMap<String, u64> = BTreeMap::new();
    if checkpoint.exists() {
        let file = std::fs::File::open(checkpoint).map_err(io)?;
        for line in BufReader::new(file).lines() {
            let line = line.map_err(io)?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (g6, count) = line
                .split_once(' ')
                .ok_or_else(|| Error::Checkpoint(format!("malformed line '{line}'")))?;
            let count: u64 = count
                .trim()
                .parse()
                .map_err(|_| Error::Checkpoint(format!("bad count in '{line}'")))?;
            done.insert(g6.to_string(), count);
        }
    }
    let mut out = OpenOptions::new()
        .create(true)
        .append(true)
        .open(checkpoint)
        .map_err(io)?;
    let aug = Augmenter::new(spec);
    let frontier = aug.frontier(split_level(spec.n).min(spec.n));
    let mut total = 0u64;
    for root in frontier {
        let key = root.to_graph6();
        if let Some(&c) = done.get(&key) {
            total += c;
            continue;
        }
        let mut branch = 0u64;
        aug.descend(&root, spec.n, &mut |g| {
            if spec.accepts(g) {
                branch += 1;
                consumer(g);
            }
        });
        writeln!(out, "{key} {branch}").map_err(io)?;
        out.flush().map_err(io)?;
        total += branch;
    }
    Ok(total)
}

/// SplitMix64 step; derives independent per-sample seeds.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(index.wrapping_mul(0xBF58_476D_1CE4_E5B9));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn sample_one(spec: &EnumSpec, seed: u64, density: Density) -> Result<Graph> {
    const ATTEMPTS: u64 = 1000;
    let n = spec.n;
    let pairs = n * (n - 1) / 2;
    let claw_free = spec.predicates.contains(&Predicate::ClawFree);
    for attempt in 0..ATTEMPTS {
        let s = derive_seed(seed, attempt);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let d = if density.max > density.min {
            rng.random_range(density.min..=density.max)
        } else {
            density.min
        };
        let target = ((d * pairs as f64).round() as usize).min(pairs);
        let g = if claw_free {
            delete_until(n, target, &mut rng).0
        } else {
            random_graph(n, target, &mut rng)
        };
        if spec.accepts(&g) {
            return Ok(g);
        }
    }
    Err(Error::InfeasibleSpec(format!(
        "no sample satisfying {:?} after {ATTEMPTS} attempts",
        spec.predicates
    )))
}

pub(crate) fn random_graph(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::from_edges(n, &pairs).expect("valid pairs")
}

/// Dense connected claw-free graph obtained from `K_n` by deleting random
/// edges, skipping any deletion that would create an induced claw or
/// disconnect the graph. Deterministic in `seed`.
pub fn sample_dense_claw_free(n: usize, target_m: usize, seed: u64) -> Result<Graph> {
    if n == 0 || n > MAX_SAMPLE_ORDER {
        return Err(Error::InfeasibleSpec(format!(
            "sampler order {n} outside 1..={MAX_SAMPLE_ORDER}"
        )));
    }
    let pairs = n * (n - 1) / 2;
    if target_m > pairs {
        return Err(Error::InvalidParams(format!(
            "target {target_m} exceeds C({n}, 2) = {pairs}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (g, reached) = delete_until(n, target_m, &mut rng);
    if reached {
        Ok(g)
    } else {
        Err(Error::TargetUnreachable {
            target: target_m,
            achieved: g.m(),
        })
    }
}

pub(crate) fn delete_until(n: usize, target: usize, rng: &mut ChaCha8Rng) -> (Graph, bool) {
    let mut adj: Vec<u64> = Graph::complete(n).rows().to_vec();
    let mut m = n * (n - 1) / 2;
    let mut pool: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    while m > target {
        pool.shuffle(rng);
        let mut removed = false;
        let mut i = 0;
        while i < pool.len() && m > target {
            let (u, v) = pool[i];
            if removable(&adj, u, v) {
                adj[u] &= !(1 << v);
                adj[v] &= !(1 << u);
                m -= 1;
                pool.swap_remove(i);
                removed = true;
            } else {
                i += 1;
            }
        }
        if !removed {
            break;
        }
    }
    (Graph::from_rows_unchecked(adj), m <= target)
}

/// Deleting `uv` keeps the graph claw-free and connected.
fn removable(adj: &[u64], u: usize, v: usize) -> bool {
    // A new claw must be centred at a common neighbour w, with leaves u, v
    // and some x adjacent to w but to neither u nor v.
    let common = adj[u] & adj[v];
    let blocked = adj[u] | adj[v] | (1 << u) | (1 << v);
    if VertexSet(common).iter().any(|w| adj[w] & !blocked != 0) {
        return false;
    }
    if common != 0 {
        return true;
    }
    // No common neighbour: check v is still reachable from u without uv.
    let mut seen = 1u64 << u;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for w in VertexSet(frontier) {
            next |= if w == u { adj[w] & !(1 << v) } else { adj[w] };
        }
        next &= !seen;
        if next & (1 << v) != 0 {
            return true;
        }
        seen |= next;
        frontier = next;
    }
    false
}

/// Random seeded claw-free graphs of order `n_min..=n_max` with varied
/// density, used as a test and verification corpus.
pub fn random_claw_free_corpus(
    count: usize,
    n_min: usize,
    n_max: usize,
    seed: u64,
) -> Result<Vec<Graph>> {
    (0..count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, i as u64));
            let n = rng.random_range(n_min..=n_max);
            let pairs = n * (n - 1) / 2;
            let target = rng.random_range(n.saturating_sub(1)..=pairs);
            let (g, _) = delete_until(n, target, &mut rng);
            Ok(g)
        })
        .collect()
}
