#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use rand::Rng;
use reltutte::format::{read_face_graph, read_pd};
use reltutte_core::canon::canonical_key;
use reltutte_core::knot::{FaceGraph, VirtualDiagram};
use reltutte_core::{Color, ColoredMultigraph, EdgeColor, EdgeId};

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub struct FixturePair {
    pub name: String,
    pub face_graph: FaceGraph,
    pub diagram: VirtualDiagram,
}

/// Every `name.fg.json` with a matching `name.pd`, sorted by name.
pub fn fixture_pairs() -> Vec<FixturePair> {
    let dir = fixture_dir();
    let mut names: Vec<String> = std::fs::read_dir(&dir)
        .expect("fixture directory")
        .filter_map(|e| e.ok()?.file_name().into_string().ok())
        .filter_map(|f| f.strip_suffix(".fg.json").map(str::to_string))
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|name| FixturePair {
            face_graph: read_face_graph(&dir.join(format!("{name}.fg.json")), None).expect("face graph fixture"),
            diagram: read_pd(&dir.join(format!("{name}.pd"))).expect("pd fixture"),
            name,
        })
        .collect()
}

pub fn shuffled(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// Random multigraph; regular edges draw from the first `colors` of
/// `+`, `-`, `r`.
pub fn random_graph(rng: &mut impl Rng, n: u32, regular: usize, zero: usize, colors: usize) -> ColoredMultigraph {
    let palette = [Color::plus(), Color::minus(), Color::new("r").unwrap()];
    let mut kinds: Vec<bool> = std::iter::repeat(true).take(regular).chain(std::iter::repeat(false).take(zero)).collect();
    for i in (1..kinds.len()).rev() {
        kinds.swap(i, rng.gen_range(0..=i));
    }
    let mut g = ColoredMultigraph::with_vertices(n);
    for is_regular in kinds {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let c = if is_regular { EdgeColor::Regular(palette[rng.gen_range(0..colors)].clone()) } else { EdgeColor::zero() };
        g.push_edge(a, b, c);
    }
    g
}

/// Regular edges of `g` in a random order.
pub fn random_order(rng: &mut impl Rng, g: &ColoredMultigraph) -> Vec<EdgeId> {
    let regular: Vec<EdgeId> = g.regular_edges().map(|e| e.id).collect();
    shuffled(rng, regular.len()).into_iter().map(|i| regular[i]).collect()
}

/// All uncolored multigraphs (loops and parallel edges allowed) with
/// exactly `m` edges and no isolated vertices, one per isomorphism class.
pub fn multigraphs_with_edges(m: usize) -> Vec<ColoredMultigraph> {
    let mut level = vec![ColoredMultigraph::with_vertices(0)];
    for _ in 0..m {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            let n = g.vertex_count() as u32;
            let mut ends = Vec::new();
            for a in 0..n {
                for b in a..n {
                    ends.push((a, b, 0));
                }
                ends.push((a, n, 1));
            }
            ends.push((n, n, 1));
            ends.push((n, n + 1, 2));
            for (a, b, fresh) in ends {
                let mut h = g.clone();
                for _ in 0..fresh {
                    h.add_vertex();
                }
                h.push_edge(a, b, EdgeColor::plus());
                if seen.insert(canonical_key(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// All connected simple graphs on `n` vertices, one per isomorphism class.
pub fn connected_simple_graphs(n: u32) -> Vec<ColoredMultigraph> {
    let pairs: Vec<(u32, u32)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut g = ColoredMultigraph::with_vertices(n);
        for (i, (a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.push_edge(*a, *b, EdgeColor::plus());
            }
        }
        if g.component_count() == 1 && seen.insert(canonical_key(&g)) {
            out.push(g);
        }
    }
    out
}
