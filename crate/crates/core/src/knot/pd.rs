use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;

use super::{loop_value, BracketPoly, KnotError};
use crate::dsu::UnionFind;
use crate::poly::{MultiPoly, Var};

/// One crossing of a PD code. Arcs are listed counterclockwise; for a
/// classical crossing the first arc is the incoming under-strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Crossing {
    Classical { arcs: [u32; 4], sign: i8 },
    Virtual { arcs: [u32; 4] },
}

impl Crossing {
    pub fn arcs(&self) -> [u32; 4] {
        match self {
            Crossing::Classical { arcs, .. } | Crossing::Virtual { arcs } => *arcs,
        }
    }
}

/// A virtual link diagram as a PD code plus a number of crossingless circles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualDiagram {
    crossings: Vec<Crossing>,
    free_circles: u32,
    /// Arc id to dense index.
    arc_index: BTreeMap<u32, usize>,
}

/// Most classical crossings the state sum accepts.
pub const MAX_CLASSICAL: usize = 40;

impl VirtualDiagram {
    /// Checks that every arc occurs in exactly two crossing slots and that
    /// crossing signs are ±1.
    pub fn new(crossings: Vec<Crossing>, free_circles: u32) -> Result<Self, KnotError> {
        let mut count: BTreeMap<u32, u32> = BTreeMap::new();
        for (i, c) in crossings.iter().enumerate() {
            if let Crossing::Classical { sign, .. } = c {
                if *sign != 1 && *sign != -1 {
                    return Err(KnotError::MalformedDiagram(format!("crossing {} has sign {sign}", i + 1)));
                }
            }
            for a in c.arcs() {
                *count.entry(a).or_insert(0) += 1;
            }
        }
        if let Some((a, n)) = count.iter().find(|(_, n)| **n != 2) {
            return Err(KnotError::MalformedDiagram(format!("arc {a} occurs {n} times, expected 2")));
        }
        if crossings.is_empty() && free_circles == 0 {
            return Err(KnotError::MalformedDiagram("empty diagram".into()));
        }
        let classical = crossings.iter().filter(|c| matches!(c, Crossing::Classical { .. })).count();
        if classical > MAX_CLASSICAL {
            return Err(KnotError::MalformedDiagram(format!("{classical} classical crossings exceed the limit")));
        }
        let arc_index = count.keys().enumerate().map(|(i, a)| (*a, i)).collect();
        Ok(VirtualDiagram { crossings, free_circles, arc_index })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_circles(&self) -> u32 {
        self.free_circles
    }

    pub fn classical_count(&self) -> usize {
        self.crossings.iter().filter(|c| matches!(c, Crossing::Classical { .. })).count()
    }

    pub fn virtual_count(&self) -> usize {
        self.crossings.len() - self.classical_count()
    }

    /// Sum of the classical crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings
            .iter()
            .map(|c| match c {
                Crossing::Classical { sign, .. } => *sign as i64,
                Crossing::Virtual { .. } => 0,
            })
            .sum()
    }

    fn idx(&self, a: u32) -> usize {
        self.arc_index[&a]
    }

    /// Number of states, `2^classical`.
    pub fn state_count(&self) -> u64 {
        1u64 << self.classical_count()
    }
}

/// Number of link components; every crossing passes strands straight through.
pub fn component_count(diag: &VirtualDiagram) -> u32 {
    let mut uf = UnionFind::new(diag.arc_index.len());
    for c in &diag.crossings {
        let [a, b, cc, d] = c.arcs();
        uf.union(diag.idx(a), diag.idx(cc));
        uf.union(diag.idx(b), diag.idx(d));
    }
    uf.sets() as u32 + diag.free_circles
}

/// Counts of states by `(#A - #B, #loops)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StateTally(BTreeMap<(i32, u32), u64>);

impl StateTally {
    pub fn merge(mut self, other: StateTally) -> StateTally {
        for (k, n) in other.0 {
            *self.0.entry(k).or_insert(0) += n;
        }
        self
    }

    pub fn states(&self) -> u64 {
        self.0.values().sum()
    }

    /// `Σ A^(a-b) d^(loops-1)` with `d = -A² - A⁻²`.
    pub fn bracket(&self) -> BracketPoly {
        let d = loop_value();
        let mut d_pows: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        let mut out = MultiPoly::zero();
        for (&(ab, loops), &n) in &self.0 {
            let dp = d_pows.entry(loops).or_insert_with(|| d.pow(loops - 1));
            let term = &MultiPoly::term(BigInt::from(n), crate::Monomial::var(Var::A, ab).expect("A is invertible"))
                * &*dp;
            out += term;
        }
        BracketPoly(out)
    }
}

/// Tallies the states whose index lies in `range`. Bit `i` of the index
/// chooses the B-smoothing at the `i`-th classical crossing.
pub fn state_tally(diag: &VirtualDiagram, range: Range<u64>) -> StateTally {
    let classical: Vec<[usize; 4]> = diag
        .crossings
        .iter()
        .filter(|c| matches!(c, Crossing::Classical { .. }))
        .map(|c| c.arcs().map(|a| diag.idx(a)))
        .collect();
    let mut base = UnionFind::new(diag.arc_index.len());
    for c in &diag.crossings {
        if let Crossing::Virtual { arcs } = c {
            base.union(diag.idx(arcs[0]), diag.idx(arcs[2]));
            base.union(diag.idx(arcs[1]), diag.idx(arcs[3]));
        }
    }
    let n = classical.len() as i32;
    let mut tally = StateTally::default();
    for state in range {
        let mut uf = base.clone();
        for (i, [a, b, c, d]) in classical.iter().enumerate() {
            if state >> i & 1 == 0 {
                uf.union(*a, *b);
                uf.union(*c, *d);
            } else {
                uf.union(*a, *d);
                uf.union(*b, *c);
            }
        }
        let bs = state.count_ones() as i32;
        let loops = uf.sets() as u32 + diag.free_circles;
        *tally.0.entry((n - 2 * bs, loops)).or_insert(0) += 1;
    }
    tally
}

/// The bracket by direct summation over all smoothing states.
pub fn state_sum_bracket(diag: &VirtualDiagram) -> BracketPoly {
    state_tally(diag, 0..diag.state_count()).bracket()
}
