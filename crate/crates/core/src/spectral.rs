//! Adjacency spectral radius and the classical bounds around it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 100_000;
/// Half-width of the band in which a value counts as equal to a threshold.
pub const DEFAULT_CMP_TOL: f64 = 1e-9;

/// Result of a power iteration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralEstimate {
    pub value: f64,
    pub iterations: usize,
    pub residual: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Above,
    Below,
    Borderline,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdVerdict {
    pub relation: Relation,
    /// `value - threshold`.
    pub margin: f64,
}

/// Largest adjacency eigenvalue by power iteration.
///
/// Each connected component is iterated separately from the all-ones
/// vector and the maximum is returned. Bipartite components, whose
/// spectrum is symmetric about zero, iterate `A^2` and report the square
/// root of its Rayleigh quotient. `residual` is `||Bx - λx||` for the
/// iterated operator `B` at the returned unit vector.
pub fn spectral_radius(g: &Graph, tol: f64, max_iter: usize) -> SpectralEstimate {
    let mut out = SpectralEstimate {
        value: 0.0,
        iterations: 0,
        residual: 0.0,
        converged: true,
    };
    let mut x = vec![0.0f64; g.n()];
    let mut y = vec![0.0f64; g.n()];
    let mut z = vec![0.0f64; g.n()];
    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        let est = component_radius(g, comp, tol, max_iter, &mut x, &mut y, &mut z);
        out.iterations = out.iterations.max(est.iterations);
        out.residual = out.residual.max(est.residual);
        out.converged &= est.converged;
        if est.value > out.value {
            out.value = est.value;
        }
    }
    out
}

/// [`spectral_radius`] with the default tolerance and iteration cap.
pub fn mu(g: &Graph) -> SpectralEstimate {
    spectral_radius(g, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

#[inline]
fn apply(g: &Graph, comp: VertexSet, x: &[f64], y: &mut [f64]) {
    for v in comp {
        y[v] = g.neighbors(v).iter().map(|u| x[u]).sum();
    }
}

fn component_radius(
    g: &Graph,
    comp: VertexSet,
    tol: f64,
    max_iter: usize,
    x: &mut [f64],
    y: &mut [f64],
    z: &mut [f64],
) -> SpectralEstimate {
    let bipartite = g.is_bipartite_within(comp);
    let start = 1.0 / (comp.len() as f64).sqrt();
    x.fill(0.0);
    y.fill(0.0);
    z.fill(0.0);
    for v in comp {
        x[v] = start;
    }
    let mut lambda = 0.0;
    let mut residual = f64::INFINITY;
    let mut iterations = 0;
    while iterations < max_iter {
        iterations += 1;
        if bipartite {
            apply(g, comp, x, z);
            apply(g, comp, z, y);
        } else {
            apply(g, comp, x, y);
        }
        lambda = comp.iter().map(|v| x[v] * y[v]).sum();
        residual = comp
            .iter()
            .map(|v| (y[v] - lambda * x[v]).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol {
            break;
        }
        let norm = comp.iter().map(|v| y[v] * y[v]).sum::<f64>().sqrt();
        for v in comp {
            x[v] = y[v] / norm;
        }
    }
    let value = if bipartite { lambda.max(0.0).sqrt() } else { lambda };
    SpectralEstimate {
        value,
        iterations,
        residual,
        converged: residual <= tol,
    }
}

/// `sqrt(2m - n + 1)`, an upper bound on the spectral radius of a
/// connected graph, attained exactly by complete graphs and stars.
pub fn hong_bound(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    Ok(((2 * g.m() + 1) as f64 - g.n() as f64).sqrt())
}

/// `sqrt(Σ d(v)^2 / n)`, a lower bound on the spectral radius.
pub fn hofmeister_bound(g: &Graph) -> f64 {
    let sum: usize = g.degrees().iter().map(|d| d * d).sum();
    (sum as f64 / g.n() as f64).sqrt()
}

/// Closed form for the spectral radius of the complete split graph
/// `K_k ∨ (n-k)K_1`: `(k - 1 + sqrt(4kn - (3k - 1)(k + 1))) / 2`.
pub fn complete_split_mu(k: usize, n: usize) -> Result<f64> {
    if k < 1 || k >= n {
        return Err(Error::InvalidParams(format!(
            "complete split graph needs 1 <= k < n, got k={k}, n={n}"
        )));
    }
    let (k, n) = (k as f64, n as f64);
    Ok((k - 1.0 + (4.0 * k * n - (3.0 * k - 1.0) * (k + 1.0)).sqrt()) / 2.0)
}

pub fn compare_threshold(
    est: &SpectralEstimate,
    threshold: f64,
    cmp_tol: f64,
) -> Result<ThresholdVerdict> {
    if !est.converged {
        return Err(Error::NotConverged);
    }
    Ok(classify_margin(est.value - threshold, cmp_tol))
}

pub(crate) fn classify_margin(margin: f64, cmp_tol: f64) -> ThresholdVerdict {
    let relation = if margin > cmp_tol {
        Relation::Above
    } else if margin < -cmp_tol {
        Relation::Below
    } else {
        Relation::Borderline
    };
    ThresholdVerdict { relation, margin }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    #[test]
    fn remark_values() {
        let g = FamilySpec::CliqueWithIsolated { n: 8 }.make().unwrap();
        let est = mu(&g);
        assert!(est.converged);
        assert!((est.value - 6.0).abs() < 1e-9);
        let star = Graph::star(9);
        assert!((mu(&star).value - 8f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn small_obstruction_values() {
        // largest roots of the characteristic polynomials, computed separately
        let l = FamilySpec::GraphL.make().unwrap();
        assert!((mu(&l).value - 2.693_525_202_227_872).abs() < 1e-9);
        let m = FamilySpec::GraphM.make().unwrap();
        assert!((mu(&m).value - 2.444_234_390_187_247).abs() < 1e-9);
        let net = FamilySpec::NetN.make().unwrap();
        assert!((mu(&net).value - 2f64.sqrt() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn hong_examples() {
        for n in 2..10 {
            let k = Graph::complete(n);
            assert!((hong_bound(&k).unwrap() - (n - 1) as f64).abs() < 1e-12);
            assert!((mu(&k).value - hong_bound(&k).unwrap()).abs() < 1e-9);
            let s = Graph::star(n);
            assert!((hong_bound(&s).unwrap() - ((n - 1) as f64).sqrt()).abs() < 1e-12);
            assert!((mu(&s).value - hong_bound(&s).unwrap()).abs() < 1e-9);
        }
        let p3 = Graph::path(3);
        assert!((hong_bound(&p3).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        let p4 = Graph::path(4);
        assert!(mu(&p4).value < hong_bound(&p4).unwrap() - 1e-3);
        assert_eq!(hong_bound(&Graph::empty(2)), Err(Error::DisconnectedInput));
    }

    #[test]
    fn hofmeister_examples() {
        let c7 = Graph::cycle(7);
        assert!((hofmeister_bound(&c7) - 2.0).abs() < 1e-12);
        assert!((mu(&c7).value - 2.0).abs() < 1e-9);
        let claw = Graph::star(4);
        assert!((hofmeister_bound(&claw) - 3f64.sqrt()).abs() < 1e-12);
        assert!(hofmeister_bound(&claw) <= mu(&claw).value + 1e-9);
        let net = FamilySpec::NetN.make().unwrap();
        assert!((hofmeister_bound(&net) - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn complete_split_closed_form() {
        for n in 6..=50 {
            let closed = complete_split_mu(3, n).unwrap();
            assert!((closed - (1.0 + ((3 * n - 8) as f64).sqrt())).abs() < 1e-12);
        }
        for n in 2..20 {
            assert!((complete_split_mu(n - 1, n).unwrap() - (n - 1) as f64).abs() < 1e-12);
        }
        assert!((complete_split_mu(1, 4).unwrap() - 3f64.sqrt()).abs() < 1e-12);
        assert!(complete_split_mu(0, 4).is_err());
        assert!(complete_split_mu(4, 4).is_err());
    }

    #[test]
    fn threshold_relations() {
        let k6 = mu(&Graph::complete(6));
        assert_eq!(compare_threshold(&k6, 4.0, 1e-9).unwrap().relation, Relation::Above);
        let m = mu(&FamilySpec::GraphM.make().unwrap());
        assert_eq!(compare_threshold(&m, 3.0, 1e-9).unwrap().relation, Relation::Below);
        let k5 = mu(&Graph::complete(5));
        assert_eq!(compare_threshold(&k5, 4.0, 1e-9).unwrap().relation, Relation::Borderline);
        let stuck = SpectralEstimate {
            value: 1.0,
            iterations: 1,
            residual: 1.0,
            converged: false,
        };
        assert_eq!(compare_threshold(&stuck, 0.0, 1e-9), Err(Error::NotConverged));
    }

    #[test]
    fn disconnected_takes_component_max() {
        let g = Graph::cycle(5).disjoint_union(&Graph::complete(4)).unwrap();
        assert!((mu(&g).value - 3.0).abs() < 1e-9);
        assert_eq!(mu(&Graph::empty(5)).value, 0.0);
    }

    #[test]
    fn bipartite_components_converge() {
        for g in [Graph::path(10), Graph::cycle(12), Graph::star(20), Graph::path(2)] {
            let est = mu(&g);
            assert!(est.converged, "{g:?}");
        }
        // P_n: 2 cos(pi / (n + 1))
        let p10 = mu(&Graph::path(10)).value;
        assert!((p10 - 2.0 * (std::f64::consts::PI / 11.0).cos()).abs() < 1e-9);
    }

    #[test]
    fn deterministic() {
        let g = FamilySpec::Nn33 { n: 20 }.make().unwrap().complement();
        let a = mu(&g);
        let b = mu(&g);
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a, b);
    }
}
