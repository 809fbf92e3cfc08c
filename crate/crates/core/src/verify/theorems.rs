//! Hypothesis, conclusion and exception data for every registered theorem.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumerate::Predicate;
use crate::error::{Error, Result};
use crate::families::{FamilyKind, FamilySpec};
use crate::graph::Graph;
use crate::hamilton;
use crate::spectral::{self, classify_margin, Relation};
use crate::structure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    FiedlerNikiforov1,
    FiedlerNikiforov2,
    LuLiuTian,
    NingGe,
    MainMuG,
    MainComplement,
    DGJ,
    LBZ,
    DegreeSumLemma,
    EdgeLemma,
    EdgeLemmaPrime,
    Hong,
    Hofmeister,
    BrousekOrder9,
    HamiltonianFamily,
    Dirac,
    MatthewsSumner,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::FiedlerNikiforov1,
        TheoremId::FiedlerNikiforov2,
        TheoremId::LuLiuTian,
        TheoremId::NingGe,
        TheoremId::MainMuG,
        TheoremId::MainComplement,
        TheoremId::DGJ,
        TheoremId::LBZ,
        TheoremId::DegreeSumLemma,
        TheoremId::EdgeLemma,
        TheoremId::EdgeLemmaPrime,
        TheoremId::Hong,
        TheoremId::Hofmeister,
        TheoremId::BrousekOrder9,
        TheoremId::HamiltonianFamily,
        TheoremId::Dirac,
        TheoremId::MatthewsSumner,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::FiedlerNikiforov1 => "fiedler-nikiforov-1",
            TheoremId::FiedlerNikiforov2 => "fiedler-nikiforov-2",
            TheoremId::LuLiuTian => "lu-liu-tian",
            TheoremId::NingGe => "mu-n-minus-3",
            TheoremId::MainMuG => "main-mu",
            TheoremId::MainComplement => "main-complement",
            TheoremId::DGJ => "dgj",
            TheoremId::LBZ => "lbz",
            TheoremId::DegreeSumLemma => "degree-sum",
            TheoremId::EdgeLemma => "edge-lemma",
            TheoremId::EdgeLemmaPrime => "edge-lemma-prime",
            TheoremId::Hong => "hong",
            TheoremId::Hofmeister => "hofmeister",
            TheoremId::BrousekOrder9 => "brousek-order9",
            TheoremId::HamiltonianFamily => "hamiltonian-family",
            TheoremId::Dirac => "dirac",
            TheoremId::MatthewsSumner => "matthews-sumner",
        }
    }

    /// One-line statement of what is checked.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::FiedlerNikiforov1 => "mu(G) >= n-2 => traceable unless K_{n-1}+K_1",
            TheoremId::FiedlerNikiforov2 => "mu(co-G) <= sqrt(n-1) => traceable unless K_{n-1}+K_1",
            TheoremId::LuLiuTian => "connected, n >= 7, mu(G) >= sqrt((n-3)^2+3) => traceable",
            TheoremId::NingGe => "connected, n >= 7, mu(G) >= n-3 => traceable unless K_1 v (K_{n-3}+2K_1)",
            TheoremId::MainMuG => "connected claw-free, mu(G) >= n-4 => traceable unless N_{n-3,3}",
            TheoremId::MainComplement => {
                "connected claw-free, n >= 24, mu(co-G) <= mu(co-N_{n-3,3}) => traceable unless N_{n-3,3}"
            }
            TheoremId::DGJ => "connected claw-free N-free => traceable",
            TheoremId::LBZ => "claw-free M-free block-chain => traceable",
            TheoremId::DegreeSumLemma => {
                "closed claw-free, nonadjacent pair with degree sum >= n-1 => traceable"
            }
            TheoremId::EdgeLemma => "connected claw-free, m >= C(n-3,2)+2 => traceable unless N_{n-3,3} or L",
            TheoremId::EdgeLemmaPrime => {
                "connected claw-free, n >= 24, m > C(n,2)-(1+sqrt(3n-8))^2 => traceable unless spanning subgraph of N_{n-3,3}"
            }
            TheoremId::Hong => "connected => mu(G) <= sqrt(2m-n+1), equality iff K_n or K_{1,n-1}",
            TheoremId::Hofmeister => "mu(G) >= sqrt(sum d^2 / n)",
            TheoremId::BrousekOrder9 => "2-connected claw-free non-Hamiltonian => member of the Brousek family",
            TheoremId::HamiltonianFamily => {
                "blown-up Brousek graphs are 2-connected, claw-free, non-Hamiltonian, mu > n-7"
            }
            TheoremId::Dirac => "min degree >= (n-1)/2 => traceable",
            TheoremId::MatthewsSumner => "connected claw-free, min degree >= (n-2)/3 => traceable",
        }
    }

    pub(crate) fn corpus(self) -> Corpus {
        use TheoremId::*;
        let claw_free = |extra: Vec<Predicate>, min_n: usize| Corpus {
            claw_free: true,
            connected: true,
            extra,
            min_n,
        };
        let general = |connected: bool, min_n: usize| Corpus {
            claw_free: false,
            connected,
            extra: vec![],
            min_n,
        };
        match self {
            FiedlerNikiforov1 | FiedlerNikiforov2 | Hofmeister | Dirac => general(false, 1),
            LuLiuTian | NingGe => general(true, 7),
            Hong => general(true, 1),
            MainMuG | MatthewsSumner | HamiltonianFamily => claw_free(vec![], 1),
            MainComplement | EdgeLemmaPrime => claw_free(vec![], 24),
            DGJ => claw_free(vec![Predicate::NFree], 1),
            LBZ => claw_free(vec![Predicate::MFree, Predicate::BlockChain], 1),
            DegreeSumLemma => claw_free(vec![Predicate::Closed], 1),
            EdgeLemma => claw_free(vec![], 6),
            BrousekOrder9 => claw_free(vec![Predicate::TwoConnected], 1),
        }
    }

    pub fn exception_rule(self) -> ExceptionRule {
        use TheoremId::*;
        match self {
            FiedlerNikiforov1 | FiedlerNikiforov2 => {
                ExceptionRule::Isomorphic(vec![FamilyKind::CliqueWithIsolated])
            }
            NingGe => ExceptionRule::Isomorphic(vec![FamilyKind::NingGe]),
            MainMuG | MainComplement => ExceptionRule::Isomorphic(vec![FamilyKind::Nn33]),
            EdgeLemma => ExceptionRule::Isomorphic(vec![FamilyKind::Nn33, FamilyKind::GraphL]),
            EdgeLemmaPrime => ExceptionRule::SpanningSubgraphOfNn33,
            Hong => ExceptionRule::Isomorphic(vec![FamilyKind::Complete, FamilyKind::Star]),
            BrousekOrder9 => ExceptionRule::Isomorphic(vec![FamilyKind::Brousek]),
            _ => ExceptionRule::None,
        }
    }

    /// Verified by constructing a family rather than scanning a corpus.
    pub fn is_family_check(self) -> bool {
        self == TheoremId::HamiltonianFamily
    }

    /// Dense samples only (both lemmas live near `K_n`).
    pub(crate) fn dense_sampling(self) -> bool {
        matches!(self, TheoremId::MainComplement | TheoremId::EdgeLemmaPrime)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s || format!("{t:?}") == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown theorem '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExceptionRule {
    None,
    /// Isomorphic to a member of one of these families at the graph's order.
    Isomorphic(Vec<FamilyKind>),
    /// Same order as, and isomorphic to a spanning subgraph of, `N_{n-3,3}`.
    SpanningSubgraphOfNn33,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Corpus {
    pub claw_free: bool,
    pub connected: bool,
    pub extra: Vec<Predicate>,
    pub min_n: usize,
}

impl Corpus {
    pub fn predicates(&self) -> Vec<Predicate> {
        let mut p = Vec::new();
        if self.claw_free {
            p.push(Predicate::ClawFree);
        }
        p.extend(self.extra.iter().copied());
        p
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected()) && self.predicates().iter().all(|p| p.holds(g))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HypothesisStatus {
    Met,
    /// Spectral margin within the comparison tolerance; treated as met.
    Borderline,
    NotMet,
}

impl HypothesisStatus {
    pub fn is_met(self) -> bool {
        self != HypothesisStatus::NotMet
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Holds,
    /// Conclusion fails; the graph must match a declared exception.
    Fails,
    /// Conclusion fails in a way no exception can excuse.
    Violation,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub hypothesis: HypothesisStatus,
    /// Signed distance to the hypothesis threshold; positive means met.
    pub margin: f64,
    /// `None` when the hypothesis is not met.
    pub outcome: Option<Outcome>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub spectral_tol: f64,
    pub max_iter: usize,
    pub cmp_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Tolerances {
        Tolerances {
            spectral_tol: spectral::DEFAULT_TOL,
            max_iter: spectral::DEFAULT_MAX_ITER,
            cmp_tol: spectral::DEFAULT_CMP_TOL,
        }
    }
}

/// Per-order data shared by all graphs of that order.
#[derive(Debug, Clone)]
pub(crate) struct Context {
    pub n: usize,
    pub tol: Tolerances,
    /// `μ(complement of N_{n-3,3})`, when the theorem needs it.
    pub comp_nn33_mu: Option<f64>,
}

impl Context {
    pub fn new(theorem: TheoremId, n: usize, tol: Tolerances) -> Context {
        let comp_nn33_mu = (theorem == TheoremId::MainComplement && n >= 6).then(|| {
            let g = FamilySpec::Nn33 { n }.make().expect("n >= 6").complement();
            spectral::spectral_radius(&g, tol.spectral_tol, tol.max_iter).value
        });
        Context {
            n,
            tol,
            comp_nn33_mu,
        }
    }

    fn mu(&self, g: &Graph) -> spectral::SpectralEstimate {
        spectral::spectral_radius(g, self.tol.spectral_tol, self.tol.max_iter)
    }
}

fn integer_hypothesis(margin: f64) -> (HypothesisStatus, f64) {
    let status = if margin >= 0.0 {
        HypothesisStatus::Met
    } else {
        HypothesisStatus::NotMet
    };
    (status, margin)
}

/// `margin` is oriented so that positive means the hypothesis holds.
fn spectral_hypothesis(margin: f64, converged: bool, cmp_tol: f64) -> (HypothesisStatus, f64) {
    if !converged {
        return (HypothesisStatus::Borderline, margin);
    }
    let status = match classify_margin(margin, cmp_tol).relation {
        Relation::Above => HypothesisStatus::Met,
        Relation::Borderline => HypothesisStatus::Borderline,
        Relation::Below => HypothesisStatus::NotMet,
    };
    (status, margin)
}

fn traceable(g: &Graph) -> Outcome {
    if hamilton::is_traceable(g) {
        Outcome::Holds
    } else {
        Outcome::Fails
    }
}

/// Evaluates one graph of the theorem's corpus.
pub(crate) fn evaluate(theorem: TheoremId, g: &Graph, ctx: &Context) -> Evaluation {
    use TheoremId::*;
    let n = ctx.n as f64;
    let tol = ctx.tol.cmp_tol;
    let (hypothesis, margin) = match theorem {
        FiedlerNikiforov1 => {
            let e = ctx.mu(g);
            spectral_hypothesis(e.value - (n - 2.0), e.converged, tol)
        }
        FiedlerNikiforov2 => {
            let e = ctx.mu(&g.complement());
            spectral_hypothesis((n - 1.0).sqrt() - e.value, e.converged, tol)
        }
        LuLiuTian => {
            let e = ctx.mu(g);
            spectral_hypothesis(e.value - ((n - 3.0).powi(2) + 3.0).sqrt(), e.converged, tol)
        }
        NingGe => {
            let e = ctx.mu(g);
            spectral_hypothesis(e.value - (n - 3.0), e.converged, tol)
        }
        MainMuG => {
            let e = ctx.mu(g);
            spectral_hypothesis(e.value - (n - 4.0), e.converged, tol)
        }
        MainComplement => {
            let e = ctx.mu(&g.complement());
            let threshold = ctx.comp_nn33_mu.expect("threshold computed for n >= 6");
            spectral_hypothesis(threshold - e.value, e.converged, tol)
        }
        DGJ | LBZ | Hong | Hofmeister | BrousekOrder9 | HamiltonianFamily => {
            (HypothesisStatus::Met, 0.0)
        }
        DegreeSumLemma => match hamilton::degree_sum_nonadjacent_max(g) {
            Some(s) => integer_hypothesis(s as f64 - (n - 1.0)),
            None => (HypothesisStatus::NotMet, f64::NEG_INFINITY),
        },
        EdgeLemma => {
            let k = ctx.n.saturating_sub(3);
            integer_hypothesis(g.m() as f64 - (k * k.saturating_sub(1) / 2 + 2) as f64)
        }
        EdgeLemmaPrime => {
            let bound = (ctx.n * (ctx.n - 1) / 2) as f64 - (1.0 + (3.0 * n - 8.0).sqrt()).powi(2);
            let margin = g.m() as f64 - bound;
            // Strict inequality on integers against a possibly integral bound.
            let status = if margin > 0.0 {
                HypothesisStatus::Met
            } else {
                HypothesisStatus::NotMet
            };
            (status, margin)
        }
        Dirac => integer_hypothesis(hamilton::min_degree(g) as f64 - (n - 1.0) / 2.0),
        MatthewsSumner => integer_hypothesis(hamilton::min_degree(g) as f64 - (n - 2.0) / 3.0),
    };
    if !hypothesis.is_met() {
        return Evaluation {
            hypothesis,
            margin,
            outcome: None,
        };
    }
    let outcome = match theorem {
        Hong => {
            let mu = ctx.mu(g);
            let bound = spectral::hong_bound(g).expect("corpus is connected");
            match classify_margin(mu.value - bound, tol).relation {
                Relation::Below => Outcome::Holds,
                Relation::Borderline => Outcome::Fails,
                Relation::Above => Outcome::Violation,
            }
        }
        Hofmeister => {
            let mu = ctx.mu(g);
            match classify_margin(mu.value - spectral::hofmeister_bound(g), tol).relation {
                Relation::Below => Outcome::Violation,
                _ => Outcome::Holds,
            }
        }
        BrousekOrder9 => {
            if hamilton::has_hamilton_cycle(g).unwrap_or(false) {
                Outcome::Holds
            } else {
                Outcome::Fails
            }
        }
        HamiltonianFamily => {
            let ok = g.is_two_connected()
                && structure::is_claw_free(g)
                && !hamilton::has_hamilton_cycle(g).unwrap_or(true)
                && classify_margin(ctx.mu(g).value - (n - 7.0), tol).relation == Relation::Above;
            if ok {
                Outcome::Holds
            } else {
                Outcome::Violation
            }
        }
        _ => traceable(g),
    };
    Evaluation {
        hypothesis,
        margin,
        outcome: Some(outcome),
    }
}

/// The first family in `families` with a member isomorphic to `g`.
///
/// `N_{n-3,3}`, complete graphs, stars and `K_{n-1} + K_1` are recognised
/// structurally at any order; every other family needs canonical forms and
/// therefore `g.n() <= 16`.
pub fn match_exception(g: &Graph, families: &[FamilySpec]) -> Result<Option<FamilySpec>> {
    for spec in families {
        if spec.order() != g.n() {
            continue;
        }
        let hit = match spec {
            FamilySpec::Nn33 { .. } => is_nn33(g),
            FamilySpec::Complete { .. } => g.is_complete(),
            FamilySpec::Star { n } => is_star(g, *n),
            FamilySpec::CliqueWithIsolated { n } => {
                (0..*n).any(|v| g.degree(v) == 0) && g.m() == (n - 1) * (n - 2) / 2
            }
            other => crate::graph::canon::are_isomorphic(g, &other.make()?)?,
        };
        if hit {
            return Ok(Some(spec.clone()));
        }
    }
    Ok(None)
}

/// All members of `kinds` whose order is `n`.
pub fn families_of_order(kinds: &[FamilyKind], n: usize) -> Vec<FamilySpec> {
    kinds
        .iter()
        .flat_map(|&k| FamilySpec::members_of_order(k, n))
        .collect()
}

fn is_star(g: &Graph, n: usize) -> bool {
    if n == 1 {
        return true;
    }
    g.m() == n - 1 && (0..n).any(|v| g.degree(v) == n - 1)
}

/// `g` is `N_{n-3,3}`: three degree-1 vertices with distinct neighbours
/// outside them, all other vertices forming a clique.
pub fn is_nn33(g: &Graph) -> bool {
    let n = g.n();
    if n < 6 || g.m() != (n - 3) * (n - 4) / 2 + 3 {
        return false;
    }
    let pendants = g.vertices().iter().filter(|&v| g.degree(v) == 1).collect::<Vec<_>>();
    if pendants.len() != 3 {
        return false;
    }
    let pset: crate::VertexSet = pendants.iter().copied().collect();
    let anchors: crate::VertexSet = pendants
        .iter()
        .map(|&p| g.neighbors(p).first().expect("degree 1"))
        .collect();
    if anchors.len() != 3 || !anchors.is_disjoint(pset) {
        return false;
    }
    let core = g.vertices().difference(pset);
    core.iter().all(|v| g.neighbors(v).intersection(core) == core.remove(v))
}

/// `g` is isomorphic to a spanning subgraph of `N_{n-3,3}`: there are three
/// vertices of degree at most one, none adjacent to another, whose
/// neighbours are pairwise distinct.
pub fn is_spanning_subgraph_of_nn33(g: &Graph) -> bool {
    let n = g.n();
    if n < 6 {
        return false;
    }
    let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= 1).collect();
    let nb = |v: usize| g.neighbors(v).first();
    for (i, &a) in low.iter().enumerate() {
        for (j, &b) in low.iter().enumerate().skip(i + 1) {
            for &c in &low[j + 1..] {
                let p = [a, b, c];
                let ok = p.iter().all(|&x| nb(x).is_none_or(|y| !p.contains(&y)))
                    && p.iter()
                        .enumerate()
                        .all(|(s, &x)| {
                            p[s + 1..]
                                .iter()
                                .all(|&y| nb(x).is_none() || nb(x) != nb(y))
                        });
                if ok {
                    return true;
                }
            }
        }
    }
    false
}
