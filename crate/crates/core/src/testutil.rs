//! Generators shared by the unit tests.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::Rng;

use crate::graph::{ColoredMultigraph, EdgeColor, VertexId};
use crate::poly::Color;

pub fn color(name: &str) -> Color {
    Color::new(name).unwrap()
}

/// Random multigraph with loops and parallels. Regular edges draw from the
/// first `colors` of `+`, `-`, `r`.
pub fn random_graph(rng: &mut impl Rng, n: u32, regular: usize, zero: usize, colors: usize) -> ColoredMultigraph {
    let palette = [Color::plus(), Color::minus(), color("r")];
    let mut kinds: Vec<bool> = core::iter::repeat(true).take(regular).chain(core::iter::repeat(false).take(zero)).collect();
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

/// Random graph with only zero edges.
pub fn random_zero_graph(rng: &mut impl Rng, n: u32, m: usize) -> ColoredMultigraph {
    random_graph(rng, n, 0, m, 1)
}

/// Random permutation of `0..n`.
pub fn shuffled(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// A random legal vertex pivot, if the graph has a cut vertex.
pub fn random_pivot(rng: &mut impl Rng, g: &ColoredMultigraph) -> Option<ColoredMultigraph> {
    let blocks = g.block_list();
    let cuts: Vec<VertexId> = g.vertices().iter().copied().filter(|v| g.is_cut_vertex(*v)).collect();
    if cuts.is_empty() {
        return None;
    }
    let c = cuts[rng.gen_range(0..cuts.len())];
    let at: Vec<_> = blocks.iter().filter(|b| b.vertices.contains(&c)).collect();
    let order = shuffled(rng, at.len());
    let k = rng.gen_range(1..at.len());
    let mut side = BTreeSet::new();
    for &i in &order[..k] {
        side.extend(at[i].edges.iter().copied());
    }
    let targets: Vec<_> = g.vertices().iter().filter_map(|&a| g.vertex_pivot(c, &side, a).ok()).collect();
    if targets.is_empty() {
        return None;
    }
    Some(targets[rng.gen_range(0..targets.len())].clone())
}
