use std::fmt::Write as _;

use clawtrace::families::FamilySpec;
use clawtrace::hamilton;
use clawtrace::spectral;
use clawtrace::structure;
use clawtrace::verify::Tolerances;
use clawtrace::Graph;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub connected: bool,
    pub blocks: Option<Vec<Vec<usize>>>,
    pub cut_vertices: Option<Vec<usize>>,
    pub block_chain: Option<bool>,
    pub two_connected: bool,
    pub claw_free: bool,
    /// Centre first.
    pub claw: Option<[usize; 4]>,
    pub mu: f64,
    pub mu_iterations: usize,
    pub mu_converged: bool,
    pub hong_bound: Option<f64>,
    pub hofmeister_bound: f64,
    pub traceable: Option<bool>,
    pub hamiltonian: Option<bool>,
    pub closed: Option<bool>,
    pub induced_n: Option<Vec<usize>>,
    pub induced_m: Option<Vec<usize>>,
    pub induced_l: Option<Vec<usize>>,
}

fn induced(g: &Graph, spec: FamilySpec) -> Option<Vec<usize>> {
    let pattern = spec.make().expect("fixed family");
    structure::find_induced(g, &pattern)
        .ok()
        .flatten()
        .map(|s| s.to_vec())
}

pub fn analyze(g: &Graph, tol: &Tolerances) -> Analysis {
    let connected = g.is_connected();
    let blocks = if connected { g.block_decomposition().ok() } else { None };
    let claw = structure::find_claw(g).map(|(c, [a, b, d])| [c, a, b, d]);
    let est = spectral::spectral_radius(g, tol.spectral_tol, tol.max_iter);
    let exact = g.n() <= hamilton::MAX_EXACT_ORDER;
    Analysis {
        graph6: g.to_graph6(),
        n: g.n(),
        m: g.m(),
        degrees: g.degrees(),
        connected,
        blocks: blocks.as_ref().map(|b| b.blocks.iter().map(|s| s.to_vec()).collect()),
        cut_vertices: blocks.as_ref().map(|b| b.cut_vertices.to_vec()),
        block_chain: if connected { g.is_block_chain().ok() } else { None },
        two_connected: g.is_two_connected(),
        claw_free: claw.is_none(),
        claw,
        mu: est.value,
        mu_iterations: est.iterations,
        mu_converged: est.converged,
        hong_bound: spectral::hong_bound(g).ok(),
        hofmeister_bound: spectral::hofmeister_bound(g),
        traceable: exact.then(|| hamilton::has_hamilton_path(g).ok()).flatten(),
        hamiltonian: exact.then(|| hamilton::has_hamilton_cycle(g).ok()).flatten(),
        closed: structure::is_closed(g).ok(),
        induced_n: induced(g, FamilySpec::NetN),
        induced_m: induced(g, FamilySpec::GraphM),
        induced_l: induced(g, FamilySpec::GraphL),
    }
}

fn opt<T: std::fmt::Debug>(v: &Option<T>) -> String {
    match v {
        Some(x) => format!("{x:?}"),
        None => "n/a".into(),
    }
}

impl Analysis {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph6       {}", self.graph6);
        let _ = writeln!(s, "order/size   n={} m={}", self.n, self.m);
        let _ = writeln!(s, "degrees      {:?}", self.degrees);
        let _ = writeln!(s, "connected    {}", self.connected);
        let _ = writeln!(s, "2-connected  {}", self.two_connected);
        let _ = writeln!(s, "cut vertices {}", opt(&self.cut_vertices));
        let _ = writeln!(s, "blocks       {}", opt(&self.blocks));
        let _ = writeln!(s, "block chain  {}", opt(&self.block_chain));
        let _ = writeln!(s, "claw-free    {}", self.claw_free);
        if let Some(c) = self.claw {
            let _ = writeln!(s, "claw         centre {} leaves {:?}", c[0], &c[1..]);
        }
        let _ = writeln!(
            s,
            "mu           {:.12} ({} iterations{})",
            self.mu,
            self.mu_iterations,
            if self.mu_converged { "" } else { ", not converged" }
        );
        let _ = writeln!(s, "hong bound   {}", opt(&self.hong_bound));
        let _ = writeln!(s, "hofmeister   {:.12}", self.hofmeister_bound);
        let _ = writeln!(s, "traceable    {}", opt(&self.traceable));
        let _ = writeln!(s, "hamiltonian  {}", opt(&self.hamiltonian));
        let _ = writeln!(s, "closed       {}", opt(&self.closed));
        let _ = writeln!(s, "induced N    {}", opt(&self.induced_n));
        let _ = writeln!(s, "induced M    {}", opt(&self.induced_m));
        let _ = writeln!(s, "induced L    {}", opt(&self.induced_l));
        s
    }
}
