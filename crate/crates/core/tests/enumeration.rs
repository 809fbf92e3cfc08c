use std::collections::HashSet;

use clawtrace::enumerate::{self, EnumSpec, Mode, Predicate};
use clawtrace::graph::canon::{canonical_form, CanonicalForm};
use clawtrace::structure::is_claw_free;
use clawtrace::Graph;

/// Isomorphism classes among all labelled graphs on `n` vertices that pass
/// `keep`, found by brute force over every edge subset.
fn labelled_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> HashSet<CanonicalForm> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut classes = HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if keep(&g) {
            classes.insert(canonical_form(&g).unwrap());
        }
    }
    classes
}

fn forms(spec: &EnumSpec) -> Vec<CanonicalForm> {
    let mut out = Vec::new();
    enumerate::enumerate(spec, |g| out.push(canonical_form(g).unwrap())).unwrap();
    out
}

#[test]
fn connected_claw_free_matches_labelled_filter() {
    for n in 1..=7 {
        let oracle = labelled_classes(n, |g| g.is_connected() && is_claw_free(g));
        let got = forms(&EnumSpec::claw_free(n));
        let distinct: HashSet<_> = got.iter().cloned().collect();
        assert_eq!(distinct.len(), got.len(), "duplicate class at n = {n}");
        assert_eq!(distinct, oracle, "n = {n}");
    }
}

#[test]
fn all_graphs_match_labelled_filter() {
    for n in 1..=6 {
        let spec = EnumSpec {
            n,
            predicates: vec![],
            connected: false,
            mode: Mode::Exhaustive,
        };
        let got: HashSet<_> = forms(&spec).into_iter().collect();
        assert_eq!(got, labelled_classes(n, |_| true), "n = {n}");
    }
    let connected7 = EnumSpec {
        n: 7,
        predicates: vec![],
        connected: true,
        mode: Mode::Exhaustive,
    };
    let got: HashSet<_> = forms(&connected7).into_iter().collect();
    assert_eq!(got, labelled_classes(7, |g| g.is_connected()));
}

#[test]
fn known_counts() {
    // connected claw-free graphs; all graphs; connected graphs
    let claw_free = [1u64, 1, 2, 5, 14, 50, 191, 881, 4494];
    for (i, &want) in claw_free.iter().enumerate() {
        assert_eq!(enumerate::enumerate(&EnumSpec::claw_free(i + 1), |_| {}).unwrap(), want);
    }
    let all = EnumSpec {
        n: 8,
        predicates: vec![],
        connected: false,
        mode: Mode::Exhaustive,
    };
    assert_eq!(enumerate::enumerate(&all, |_| {}).unwrap(), 12346);
    let connected = EnumSpec { connected: true, ..all };
    assert_eq!(enumerate::enumerate(&connected, |_| {}).unwrap(), 11117);
}

#[test]
fn parallel_matches_serial() {
    for n in [6, 8] {
        for spec in [
            EnumSpec::claw_free(n),
            EnumSpec::claw_free(n).with(Predicate::TwoConnected),
            EnumSpec {
                n,
                predicates: vec![],
                connected: true,
                mode: Mode::Exhaustive,
            },
        ] {
            let mut serial = forms(&spec);
            let one = enumerate::enumerate_parallel(&spec, Some(1)).unwrap();
            let four = enumerate::enumerate_parallel(&spec, Some(4)).unwrap();
            assert_eq!(one, four);
            let mut par: Vec<_> = four.iter().map(|g| canonical_form(g).unwrap()).collect();
            serial.sort();
            par.sort();
            assert_eq!(serial, par);
        }
    }
}

#[test]
fn emitted_graphs_satisfy_chain() {
    let spec = EnumSpec::claw_free(8)
        .with(Predicate::NFree)
        .with(Predicate::TwoConnected);
    let graphs = enumerate::enumerate_parallel(&spec, None).unwrap();
    assert!(!graphs.is_empty());
    for g in graphs.iter().step_by(7) {
        assert!(g.is_connected() && is_claw_free(g) && g.is_two_connected());
        for p in &spec.predicates {
            assert!(p.holds(g));
        }
    }
}

#[test]
fn hereditary_pruning_is_sound() {
    // Filtering the full claw-free list must give the same classes as
    // pruning with the extra hereditary predicate during generation.
    for p in [Predicate::NFree, Predicate::MFree] {
        let pruned: HashSet<_> = forms(&EnumSpec::claw_free(8).with(p)).into_iter().collect();
        let mut filtered = HashSet::new();
        enumerate::enumerate(&EnumSpec::claw_free(8), |g| {
            if p.holds(g) {
                filtered.insert(canonical_form(g).unwrap());
            }
        })
        .unwrap();
        assert_eq!(pruned, filtered, "{p:?}");
    }
}

#[test]
fn checkpoint_resume_counts() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ckpt.txt");
    let spec = EnumSpec::claw_free(8);
    let mut first = Vec::new();
    let total = enumerate::enumerate_with_checkpoint(&spec, &path, |g| first.push(g.clone())).unwrap();
    assert_eq!(total, 881);
    assert_eq!(first.len(), 881);
    let lines = std::fs::read_to_string(&path).unwrap();
    assert!(lines.lines().count() > 1);

    // Drop the last finished branch; a resumed run recomputes only it.
    let kept: Vec<&str> = lines.lines().collect();
    let (last, rest) = kept.split_last().unwrap();
    std::fs::write(&path, rest.join("\n") + "\n").unwrap();
    let mut second = 0;
    let total = enumerate::enumerate_with_checkpoint(&spec, &path, |_| second += 1).unwrap();
    assert_eq!(total, 881);
    let expected: u64 = last.split(' ').nth(1).unwrap().parse().unwrap();
    assert_eq!(second, expected);

    std::fs::write(&path, "garbage\n").unwrap();
    assert!(enumerate::enumerate_with_checkpoint(&spec, &path, |_| {}).is_err());
}

#[test]
fn sampled_mode_is_deterministic() {
    let spec = EnumSpec {
        n: 20,
        predicates: vec![Predicate::ClawFree],
        connected: true,
        mode: Mode::Sample {
            count: 25,
            seed: 11,
            density: enumerate::Density { min: 0.6, max: 0.95 },
        },
    };
    let a = enumerate::enumerate_parallel(&spec, Some(3)).unwrap();
    let b = enumerate::enumerate_parallel(&spec, Some(1)).unwrap();
    assert_eq!(a, b);
    let mut c = Vec::new();
    enumerate::enumerate(&spec, |g| c.push(g.clone())).unwrap();
    assert_eq!(a, c);
    for g in &a {
        assert!(g.is_connected() && is_claw_free(g));
    }
}
