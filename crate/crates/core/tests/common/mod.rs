//! Independent reference implementations used as test oracles. They share
//! no code with the library beyond the `Graph` container.
#![allow(dead_code)]

use clawtrace::Graph;

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

pub fn brute_traceable(g: &Graph, perms: &[Vec<usize>]) -> bool {
    perms
        .iter()
        .any(|p| p.windows(2).all(|w| g.has_edge(w[0], w[1])))
}

pub fn brute_hamiltonian(g: &Graph, perms: &[Vec<usize>]) -> bool {
    let n = g.n();
    n >= 3
        && perms.iter().filter(|p| p[0] == 0).any(|p| {
            p.windows(2).all(|w| g.has_edge(w[0], w[1])) && g.has_edge(p[n - 1], p[0])
        })
}

/// Number of automorphisms by checking every permutation.
pub fn brute_automorphisms(g: &Graph, perms: &[Vec<usize>]) -> usize {
    perms
        .iter()
        .filter(|p| g.edges().all(|(u, v)| g.has_edge(p[u], p[v])))
        .count()
}

/// Largest adjacency eigenvalue from a dense symmetric eigensolver.
pub fn largest_eigenvalue(g: &Graph) -> f64 {
    let n = g.n();
    let a = nalgebra::DMatrix::from_fn(n, n, |i, j| g.has_edge(i, j) as u8 as f64);
    a.symmetric_eigenvalues().max()
}

/// Whether `pattern` is an induced subgraph of `host`: every vertex subset
/// of the right size, every bijection.
pub fn brute_contains_induced(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    let perms = permutations(k);
    (0u64..(1 << host.n()))
        .filter(|s| s.count_ones() as usize == k)
        .any(|s| {
            let vs: Vec<usize> = (0..host.n()).filter(|&v| s >> v & 1 == 1).collect();
            perms.iter().any(|p| {
                (0..k).all(|i| (i + 1..k).all(|j| host.has_edge(vs[p[i]], vs[p[j]]) == pattern.has_edge(i, j)))
            })
        })
}

/// Tiny deterministic generator for test inputs (xorshift64*).
pub struct TestRng(pub u64);

impl TestRng {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 >> 12;
        self.0 ^= self.0 << 25;
        self.0 ^= self.0 >> 27;
        self.0.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    pub fn graph(&mut self, n: usize, p_percent: u64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.below(100) < p_percent {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn shuffle(&mut self, v: &mut [usize]) {
        for i in (1..v.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            v.swap(i, j);
        }
    }
}
