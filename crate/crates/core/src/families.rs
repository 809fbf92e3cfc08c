//! Constructors for the named graphs and parametric families.
//!
//! Vertex orders are fixed so that graph6 output is reproducible: clique
//! vertices come first and pendant or path vertices last.
//!
//! Labels used below for the small obstruction graphs:
//!
//! | vertex | N (net) | L  | M  |
//! |--------|---------|----|----|
//! | 0..=2  | a1 a2 a3 | a1 a2 a3 | a1 a2 a3 |
//! | 3..=5  | b1 b2 b3 | b1 b2 b3 | b1 b2 b3 |
//! | 6      |         | b'1 | c1 |
//! | 7      |         |    | d1 |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// How a pair `{a_i, b_i}` of a Brousek graph is joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Link {
    /// `a_i b_i` plus a new common neighbour.
    Triangle,
    /// A path of the given order (at least 3) from `a_i` to `b_i`.
    Path(usize),
}

impl Link {
    /// Parameter encoding with the triangle as 0.
    pub fn code(self) -> usize {
        match self {
            Link::Triangle => 0,
            Link::Path(k) => k,
        }
    }

    pub fn from_code(code: usize) -> Result<Link> {
        match code {
            0 => Ok(Link::Triangle),
            k if k >= 3 => Ok(Link::Path(k)),
            k => Err(Error::InvalidParams(format!(
                "path order {k} is below 3 (use 0 or T for a triangle)"
            ))),
        }
    }

    fn extra_vertices(self) -> usize {
        match self {
            Link::Triangle => 1,
            Link::Path(k) => k - 2,
        }
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Link::Triangle => f.write_str("T"),
            Link::Path(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for Link {
    type Err = Error;

    fn from_str(s: &str) -> Result<Link> {
        if s.eq_ignore_ascii_case("t") {
            return Ok(Link::Triangle);
        }
        let k: usize = s
            .parse()
            .map_err(|_| Error::InvalidParams(format!("bad link '{s}'")))?;
        Link::from_code(k)
    }
}

/// The four order-9 members of the Brousek family, as drawn in the
/// classification of minimal 2-connected claw-free non-Hamiltonian graphs.
pub const BROUSEK_ORDER_NINE: [[Link; 3]; 4] = [
    [Link::Triangle, Link::Triangle, Link::Triangle],
    [Link::Path(3), Link::Triangle, Link::Triangle],
    [Link::Path(3), Link::Path(3), Link::Triangle],
    [Link::Path(3), Link::Path(3), Link::Path(3)],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    Complete,
    Star,
    CompleteSplit,
    Nn33,
    NetN,
    GraphM,
    GraphL,
    Claw,
    NingGe,
    Brousek,
    BrousekBlown,
    /// `K_{n-1} + K_1`.
    CliqueWithIsolated,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 12] = [
        FamilyKind::Complete,
        FamilyKind::Star,
        FamilyKind::CompleteSplit,
        FamilyKind::Nn33,
        FamilyKind::NetN,
        FamilyKind::GraphM,
        FamilyKind::GraphL,
        FamilyKind::Claw,
        FamilyKind::NingGe,
        FamilyKind::Brousek,
        FamilyKind::BrousekBlown,
        FamilyKind::CliqueWithIsolated,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::Star => "star",
            FamilyKind::CompleteSplit => "complete-split",
            FamilyKind::Nn33 => "n-graph",
            FamilyKind::NetN => "net",
            FamilyKind::GraphM => "m-graph",
            FamilyKind::GraphL => "l-graph",
            FamilyKind::Claw => "claw",
            FamilyKind::NingGe => "apex-clique",
            FamilyKind::Brousek => "brousek",
            FamilyKind::BrousekBlown => "brousek-blown",
            FamilyKind::CliqueWithIsolated => "clique-plus-isolated",
        }
    }

    /// Parameter names, in order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyKind::Complete
            | FamilyKind::Star
            | FamilyKind::Nn33
            | FamilyKind::NingGe
            | FamilyKind::CliqueWithIsolated => &["n"],
            FamilyKind::CompleteSplit => &["k", "n"],
            FamilyKind::NetN | FamilyKind::GraphM | FamilyKind::GraphL | FamilyKind::Claw => &[],
            FamilyKind::Brousek => &["x1", "x2", "x3"],
            FamilyKind::BrousekBlown => &["x1", "x2", "x3", "n"],
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyKind> {
        FamilyKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s || format!("{k:?}") == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown family '{s}'")))
    }
}

impl FamilySpec {
    /// Parses textual parameters; link parameters accept `T` or a path order.
    pub fn parse(kind: FamilyKind, params: &[&str]) -> Result<FamilySpec> {
        let nums = params
            .iter()
            .map(|p| {
                if p.eq_ignore_ascii_case("t") {
                    Ok(Link::Triangle.code())
                } else {
                    p.parse::<usize>()
                        .map_err(|_| Error::InvalidParams(format!("bad parameter '{p}'")))
                }
            })
            .collect::<Result<Vec<usize>>>()?;
        FamilySpec::from_params(kind, &nums)
    }
}

/// Symbolic description of one named graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    Complete { n: usize },
    Star { n: usize },
    /// `K_k ∨ (n-k)K_1`.
    CompleteSplit { k: usize, n: usize },
    /// `K_{n-3}` with three disjoint pendant edges.
    Nn33 { n: usize },
    NetN,
    GraphM,
    GraphL,
    Claw,
    /// `K_1 ∨ (K_{n-3} + 2K_1)`.
    NingGe { n: usize },
    Brousek { links: [Link; 3] },
    /// Brousek graph with the `a`-triangle blown up to a clique so the
    /// total order is `n`.
    BrousekBlown { links: [Link; 3], n: usize },
    CliqueWithIsolated { n: usize },
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Complete { .. } => FamilyKind::Complete,
            FamilySpec::Star { .. } => FamilyKind::Star,
            FamilySpec::CompleteSplit { .. } => FamilyKind::CompleteSplit,
            FamilySpec::Nn33 { .. } => FamilyKind::Nn33,
            FamilySpec::NetN => FamilyKind::NetN,
            FamilySpec::GraphM => FamilyKind::GraphM,
            FamilySpec::GraphL => FamilyKind::GraphL,
            FamilySpec::Claw => FamilyKind::Claw,
            FamilySpec::NingGe { .. } => FamilyKind::NingGe,
            FamilySpec::Brousek { .. } => FamilyKind::Brousek,
            FamilySpec::BrousekBlown { .. } => FamilyKind::BrousekBlown,
            FamilySpec::CliqueWithIsolated { .. } => FamilyKind::CliqueWithIsolated,
        }
    }

    /// Integer parameter list, triangles encoded as 0.
    pub fn params(&self) -> Vec<usize> {
        match *self {
            FamilySpec::Complete { n }
            | FamilySpec::Star { n }
            | FamilySpec::Nn33 { n }
            | FamilySpec::NingGe { n }
            | FamilySpec::CliqueWithIsolated { n } => vec![n],
            FamilySpec::CompleteSplit { k, n } => vec![k, n],
            FamilySpec::NetN | FamilySpec::GraphM | FamilySpec::GraphL | FamilySpec::Claw => {
                vec![]
            }
            FamilySpec::Brousek { links } => links.iter().map(|l| l.code()).collect(),
            FamilySpec::BrousekBlown { links, n } => {
                let mut p: Vec<usize> = links.iter().map(|l| l.code()).collect();
                p.push(n);
                p
            }
        }
    }

    pub fn from_params(kind: FamilyKind, params: &[usize]) -> Result<FamilySpec> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!(
                    "{kind:?} takes {k} parameters, got {}",
                    params.len()
                )))
            }
        };
        let links = |p: &[usize]| -> Result<[Link; 3]> {
            Ok([
                Link::from_code(p[0])?,
                Link::from_code(p[1])?,
                Link::from_code(p[2])?,
            ])
        };
        let spec = match kind {
            FamilyKind::Complete => {
                want(1)?;
                FamilySpec::Complete { n: params[0] }
            }
            FamilyKind::Star => {
                want(1)?;
                FamilySpec::Star { n: params[0] }
            }
            FamilyKind::CompleteSplit => {
                want(2)?;
                FamilySpec::CompleteSplit {
                    k: params[0],
                    n: params[1],
                }
            }
            FamilyKind::Nn33 => {
                want(1)?;
                FamilySpec::Nn33 { n: params[0] }
            }
            FamilyKind::NetN => {
                want(0)?;
                FamilySpec::NetN
            }
            FamilyKind::GraphM => {
                want(0)?;
                FamilySpec::GraphM
            }
            FamilyKind::GraphL => {
                want(0)?;
                FamilySpec::GraphL
            }
            FamilyKind::Claw => {
                want(0)?;
                FamilySpec::Claw
            }
            FamilyKind::NingGe => {
                want(1)?;
                FamilySpec::NingGe { n: params[0] }
            }
            FamilyKind::Brousek => {
                want(3)?;
                FamilySpec::Brousek {
                    links: links(params)?,
                }
            }
            FamilyKind::BrousekBlown => {
                want(4)?;
                FamilySpec::BrousekBlown {
                    links: links(params)?,
                    n: params[3],
                }
            }
            FamilyKind::CliqueWithIsolated => {
                want(1)?;
                FamilySpec::CliqueWithIsolated { n: params[0] }
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Order of the constructed graph.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Complete { n }
            | FamilySpec::Star { n }
            | FamilySpec::CompleteSplit { n, .. }
            | FamilySpec::Nn33 { n }
            | FamilySpec::NingGe { n }
            | FamilySpec::BrousekBlown { n, .. }
            | FamilySpec::CliqueWithIsolated { n } => n,
            FamilySpec::NetN => 6,
            FamilySpec::GraphL => 7,
            FamilySpec::GraphM => 8,
            FamilySpec::Claw => 4,
            FamilySpec::Brousek { links } => brousek_base_order(&links),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        match *self {
            FamilySpec::Complete { n } if n < 1 => bad("Complete needs n >= 1".into())?,
            FamilySpec::Star { n } if n < 2 => bad("Star needs n >= 2".into())?,
            FamilySpec::CompleteSplit { k, n } if k < 1 || k >= n => {
                bad(format!("CompleteSplit needs 1 <= k < n, got k={k}, n={n}"))?
            }
            FamilySpec::Nn33 { n } if n < 6 => {
                bad(format!("Nn33 needs n >= 6 for three disjoint pendant edges, got {n}"))?
            }
            FamilySpec::NingGe { n } if n < 4 => bad(format!("NingGe needs n >= 4, got {n}"))?,
            FamilySpec::CliqueWithIsolated { n } if n < 2 => {
                bad("CliqueWithIsolated needs n >= 2".into())?
            }
            FamilySpec::BrousekBlown { links, n } => {
                let base = brousek_base_order(&links);
                if n < base {
                    bad(format!("BrousekBlown order {n} is below the base order {base}"))?
                }
            }
            _ => {}
        }
        if self.order() > MAX_ORDER {
            return Err(Error::OrderOutOfRange(self.order()));
        }
        Ok(())
    }

    pub fn make(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            FamilySpec::Complete { n } => Ok(Graph::complete(n)),
            FamilySpec::Star { n } => Ok(Graph::star(n)),
            FamilySpec::CompleteSplit { k, n } => Graph::complete(k).join(&Graph::empty(n - k)),
            FamilySpec::Nn33 { n } => nn33(n),
            FamilySpec::NetN => nn33(6),
            FamilySpec::GraphL => {
                let mut e = net_edges();
                e.extend([(6, 0), (6, 3)]);
                Graph::from_edges(7, &e)
            }
            FamilySpec::GraphM => {
                let mut e = net_edges();
                e.extend([(3, 6), (6, 7)]);
                Graph::from_edges(8, &e)
            }
            FamilySpec::Claw => Ok(Graph::star(4)),
            FamilySpec::NingGe { n } => {
                let right = Graph::complete(n - 3).disjoint_union(&Graph::empty(2))?;
                Graph::empty(1).join(&right)
            }
            FamilySpec::Brousek { links } => brousek(&links, 3),
            FamilySpec::BrousekBlown { links, n } => {
                brousek(&links, n - brousek_base_order(&links) + 3)
            }
            FamilySpec::CliqueWithIsolated { n } => {
                Graph::complete(n - 1).disjoint_union(&Graph::empty(1))
            }
        }
    }

    /// Every member of `kind` with order `n`; empty when the kind has none.
    pub fn members_of_order(kind: FamilyKind, n: usize) -> Vec<FamilySpec> {
        let single = |s: FamilySpec| {
            if s.validate().is_ok() && s.order() == n {
                vec![s]
            } else {
                vec![]
            }
        };
        match kind {
            FamilyKind::Complete => single(FamilySpec::Complete { n }),
            FamilyKind::Star => single(FamilySpec::Star { n }),
            FamilyKind::CompleteSplit => (1..n)
                .map(|k| FamilySpec::CompleteSplit { k, n })
                .collect(),
            FamilyKind::Nn33 => single(FamilySpec::Nn33 { n }),
            FamilyKind::NetN => single(FamilySpec::NetN),
            FamilyKind::GraphM => single(FamilySpec::GraphM),
            FamilyKind::GraphL => single(FamilySpec::GraphL),
            FamilyKind::Claw => single(FamilySpec::Claw),
            FamilyKind::NingGe => single(FamilySpec::NingGe { n }),
            FamilyKind::CliqueWithIsolated => single(FamilySpec::CliqueWithIsolated { n }),
            FamilyKind::Brousek => brousek_link_triples(n)
                .into_iter()
                .map(|links| FamilySpec::Brousek { links })
                .collect(),
            FamilyKind::BrousekBlown => BROUSEK_ORDER_NINE
                .iter()
                .filter(|_| n >= 9)
                .map(|&links| FamilySpec::BrousekBlown { links, n })
                .collect(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete { n } => write!(f, "K_{n}"),
            FamilySpec::Star { n } => write!(f, "K_1,{}", n - 1),
            FamilySpec::CompleteSplit { k, n } => write!(f, "K_{k} v {}K_1", n - k),
            FamilySpec::Nn33 { n } => write!(f, "N_{},3", n - 3),
            FamilySpec::NetN => f.write_str("N"),
            FamilySpec::GraphM => f.write_str("M"),
            FamilySpec::GraphL => f.write_str("L"),
            FamilySpec::Claw => f.write_str("K_1,3"),
            FamilySpec::NingGe { n } => write!(f, "K_1 v (K_{} + 2K_1)", n - 3),
            FamilySpec::Brousek { links } => {
                write!(f, "P_{},{},{}", links[0], links[1], links[2])
            }
            FamilySpec::BrousekBlown { links, n } => {
                write!(f, "P_{},{},{}[K_{}]", links[0], links[1], links[2], n - brousek_base_order(links) + 3)
            }
            FamilySpec::CliqueWithIsolated { n } => write!(f, "K_{} + K_1", n - 1),
        }
    }
}

fn net_edges() -> Vec<(usize, usize)> {
    // a1a2, a1a3, a2a3, a1b1, a2b2, a3b3
    vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]
}

fn nn33(n: usize) -> Result<Graph> {
    let k = n - 3;
    let mut edges = Vec::with_capacity(k * (k - 1) / 2 + 3);
    for u in 0..k {
        for v in u + 1..k {
            edges.push((u, v));
        }
    }
    edges.extend([(0, k), (1, k + 1), (2, k + 2)]);
    Graph::from_edges(n, &edges)
}

fn brousek_base_order(links: &[Link; 3]) -> usize {
    6 + links.iter().map(|l| l.extra_vertices()).sum::<usize>()
}

/// Brousek graph whose `a`-side is a clique on `clique` vertices
/// (`clique = 3` gives the plain member of the family).
fn brousek(links: &[Link; 3], clique: usize) -> Result<Graph> {
    let n = clique + 3 + links.iter().map(|l| l.extra_vertices()).sum::<usize>();
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let b = |i: usize| clique + i;
    let mut edges = Vec::new();
    for u in 0..clique {
        for v in u + 1..clique {
            edges.push((u, v));
        }
    }
    edges.extend([(b(0), b(1)), (b(0), b(2)), (b(1), b(2))]);
    let mut next = clique + 3;
    for (i, link) in links.iter().enumerate() {
        match *link {
            Link::Triangle => {
                edges.extend([(i, b(i)), (i, next), (b(i), next)]);
                next += 1;
            }
            Link::Path(k) => {
                let mut prev = i;
                for _ in 0..k - 2 {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
                edges.push((prev, b(i)));
            }
        }
    }
    debug_assert_eq!(next, n);
    Graph::from_edges(n, &edges)
}

/// Link triples up to reordering (sorted) whose Brousek graph has order `n`.
fn brousek_link_triples(n: usize) -> Vec<[Link; 3]> {
    if n < 9 {
        return vec![];
    }
    let budget = n - 6;
    let options: Vec<Link> = std::iter::once(Link::Triangle)
        .chain((3..=budget + 1).map(Link::Path))
        .collect();
    let mut out = Vec::new();
    for (i, &x) in options.iter().enumerate() {
        for (j, &y) in options.iter().enumerate().skip(i) {
            for &z in options.iter().skip(j) {
                let links = [x, y, z];
                if brousek_base_order(&links) == n {
                    out.push(links);
                }
            }
        }
    }
    out
}
