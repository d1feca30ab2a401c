//! Brute-force counting oracles.
//!
//! Everything here enumerates edge subsets or orientations outright, with no
//! shared machinery with the algebra or the Tutte engine, so the fast paths
//! can be checked against definitions. Hard edge-count guards keep the
//! enumeration within interactive time.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::graph::{Multigraph, TwoTerminal};
use crate::params::ParamVec;

/// Orientation enumerations refuse graphs with more edges than this.
pub const MAX_ORIENTATION_EDGES: usize = 16;
/// Subset enumerations refuse graphs with more edges than this.
pub const MAX_SUBSET_EDGES: usize = 20;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TooManyEdges {
    pub edges: usize,
    pub limit: usize,
}

impl fmt::Display for TooManyEdges {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph has {} edges, oracle enumerates at most {}",
            self.edges, self.limit
        )
    }
}

impl core::error::Error for TooManyEdges {}

pub type OracleResult<T> = Result<T, TooManyEdges>;

fn guard(edges: usize, limit: usize) -> OracleResult<()> {
    if edges > limit {
        Err(TooManyEdges { edges, limit })
    } else {
        Ok(())
    }
}

/// Counts edge subsets of the given size that are forests, reporting the
/// union-find root of every vertex to the callback.
fn count_forests(
    g: &Multigraph,
    size: usize,
    mut accept: impl FnMut(&[usize]) -> bool,
) -> u64 {
    let m = g.edge_count();
    let n = g.vertex_count();
    let mut count = 0u64;
    'subset: for mask in 0u32..(1u32 << m) {
        if mask.count_ones() as usize != size {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in 0..m {
            if mask & (1 << e) == 0 {
                continue;
            }
            let (u, v) = g.edges()[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                continue 'subset; // cycle, loops included
            }
            parent[ru] = rv;
        }
        let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        if accept(&roots) {
            count += 1;
        }
    }
    count
}

/// Spanning trees, by enumerating acyclic edge subsets of size V-1.
pub fn spanning_trees(g: &Multigraph) -> OracleResult<u64> {
    guard(g.edge_count(), MAX_SUBSET_EDGES)?;
    if g.vertex_count() == 0 {
        return Ok(0);
    }
    Ok(count_forests(g, g.vertex_count() - 1, |_| true))
}

/// Spanning forests with exactly two components, one holding each terminal.
pub fn separating_forests(tt: &TwoTerminal) -> OracleResult<u64> {
    let g = &tt.graph;
    guard(g.edge_count(), MAX_SUBSET_EDGES)?;
    if g.vertex_count() < 2 {
        return Ok(0);
    }
    Ok(count_forests(g, g.vertex_count() - 2, |roots| {
        roots[tt.source] != roots[tt.sink]
    }))
}

/// Arc list of one orientation: bit e of mask reverses stored edge e.
fn arcs(g: &Multigraph, mask: u32) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| if mask & (1 << e) == 0 { (u, v) } else { (v, u) })
        .collect()
}

/// Vertices reachable from each vertex by directed paths, reflexively.
fn reach_matrix(n: usize, arcs: &[(usize, usize)]) -> Vec<u32> {
    debug_assert!(n <= 32);
    let mut out: Vec<u32> = Vec::with_capacity(n);
    for start in 0..n {
        let mut seen = 1u32 << start;
        let mut stack = alloc::vec![start];
        while let Some(v) = stack.pop() {
            for &(a, b) in arcs {
                if a == v && seen & (1 << b) == 0 {
                    seen |= 1 << b;
                    stack.push(b);
                }
            }
        }
        out.push(seen);
    }
    out
}

fn reaches(reach: &[u32], from: usize, to: usize) -> bool {
    reach[from] & (1 << to) != 0
}

fn orientation_count(
    g: &Multigraph,
    mut accept: impl FnMut(&[(usize, usize)], &[u32]) -> bool,
) -> OracleResult<u64> {
    let m = g.edge_count();
    guard(m, MAX_ORIENTATION_EDGES)?;
    let n = g.vertex_count();
    assert!(n <= 32, "orientation oracle holds reachability in 32-bit sets");
    let mut count = 0u64;
    for mask in 0u32..(1u32 << m) {
        let arcs = arcs(g, mask);
        let reach = reach_matrix(n, &arcs);
        if accept(&arcs, &reach) {
            count += 1;
        }
    }
    Ok(count)
}

fn is_acyclic(arcs: &[(usize, usize)], reach: &[u32]) -> bool {
    // a directed cycle exists exactly when some arc can be closed back
    arcs.iter().all(|&(u, v)| u != v && !reaches(reach, v, u))
}

/// Orientations with no directed cycle. Zero if the graph has a loop.
pub fn acyclic_orientations(g: &Multigraph) -> OracleResult<u64> {
    orientation_count(g, |arcs, reach| is_acyclic(arcs, reach))
}

/// Acyclic orientations in which neither terminal reaches the other.
pub fn separated_acyclic_orientations(tt: &TwoTerminal) -> OracleResult<u64> {
    let (s, t) = (tt.source, tt.sink);
    orientation_count(&tt.graph, |arcs, reach| {
        is_acyclic(arcs, reach) && !reaches(reach, s, t) && !reaches(reach, t, s)
    })
}

/// Orientations in which every edge lies on a directed cycle.
pub fn totally_cyclic_orientations(g: &Multigraph) -> OracleResult<u64> {
    orientation_count(g, |arcs, reach| {
        arcs.iter().all(|&(u, v)| reaches(reach, v, u))
    })
}

/// Orientations in which every edge lies on a directed cycle or on a
/// directed path from one terminal to the other (either direction).
pub fn almost_totally_cyclic_orientations(tt: &TwoTerminal) -> OracleResult<u64> {
    let (s, t) = (tt.source, tt.sink);
    orientation_count(&tt.graph, |arcs, reach| {
        arcs.iter().all(|&(u, v)| {
            reaches(reach, v, u)
                || (reaches(reach, s, u) && reaches(reach, v, t))
                || (reaches(reach, t, u) && reaches(reach, v, s))
        })
    })
}

/// All six parameters by direct enumeration.
pub fn param_vec(tt: &TwoTerminal) -> OracleResult<ParamVec> {
    Ok(ParamVec {
        tau: BigUint::from(spanning_trees(&tt.graph)?),
        tau2: BigUint::from(separating_forests(tt)?),
        alpha: BigUint::from(acyclic_orientations(&tt.graph)?),
        alpha2: BigUint::from(separated_acyclic_orientations(tt)?),
        alpha2_star: BigUint::from(almost_totally_cyclic_orientations(tt)?),
        alpha_star: BigUint::from(totally_cyclic_orientations(&tt.graph)?),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ExtensionCounts {
    pub spanning_trees: u64,
    pub acyclic: u64,
    pub totally_cyclic: u64,
}

fn extension_counts(g: &Multigraph) -> OracleResult<ExtensionCounts> {
    Ok(ExtensionCounts {
        spanning_trees: spanning_trees(g)?,
        acyclic: acyclic_orientations(g)?,
        totally_cyclic: totally_cyclic_orientations(g)?,
    })
}

/// Outcome of enlarging one edge's series or parallel class by two.
///
/// The four flags certify the surgery step: the grown count at least
/// quadruples, the dual count is untouched, spanning trees at most double,
/// and the product bound survives the extension. Together they justify
/// discarding graphs whose every edge already sits in a nontrivial class.
#[derive(Clone, Copy, Debug)]
pub struct ExtensionReport {
    pub base: ExtensionCounts,
    pub extended: ExtensionCounts,
    pub growth_ok: bool,
    pub preserved_ok: bool,
    pub tree_bound_ok: bool,
    pub implication_ok: bool,
}

impl ExtensionReport {
    pub fn all_ok(&self) -> bool {
        self.growth_ok && self.preserved_ok && self.tree_bound_ok && self.implication_ok
    }
}

fn product_bound(c: &ExtensionCounts) -> bool {
    (c.acyclic as u128) * (c.totally_cyclic as u128)
        >= (c.spanning_trees as u128) * (c.spanning_trees as u128)
}

fn assemble(base: ExtensionCounts, extended: ExtensionCounts, widening: bool) -> ExtensionReport {
    let (grew_base, grew_ext, kept_base, kept_ext) = if widening {
        (base.totally_cyclic, extended.totally_cyclic, base.acyclic, extended.acyclic)
    } else {
        (base.acyclic, extended.acyclic, base.totally_cyclic, extended.totally_cyclic)
    };
    ExtensionReport {
        base,
        extended,
        growth_ok: grew_ext >= 4 * grew_base,
        preserved_ok: kept_ext == kept_base,
        tree_bound_ok: extended.spanning_trees <= 2 * base.spanning_trees,
        implication_ok: !product_bound(&base) || product_bound(&extended),
    }
}

/// Adds two parallel copies of an edge that already has a parallel partner.
pub fn parallel_extension_report(g: &Multigraph, e: usize) -> OracleResult<ExtensionReport> {
    assert!(
        g.parallel_class(e).len() >= 2,
        "edge needs a parallel partner before widening"
    );
    let (u, v) = g.edges()[e];
    let mut gp = g.clone();
    gp.add_edge(u, v);
    gp.add_edge(u, v);
    let base = extension_counts(g)?;
    let extended = extension_counts(&gp)?;
    Ok(assemble(base, extended, true))
}

/// Subdivides twice an edge that already has a series partner.
pub fn series_extension_report(g: &Multigraph, e: usize) -> OracleResult<ExtensionReport> {
    assert!(
        g.series_class(e).len() >= 2,
        "edge needs a series partner before lengthening"
    );
    let (u, v) = g.edges()[e];
    let mut gp = g.delete_edge(e);
    let w1 = gp.add_vertex();
    let w2 = gp.add_vertex();
    gp.add_edge(u, w1);
    gp.add_edge(w1, w2);
    gp.add_edge(w2, v);
    let base = extension_counts(g)?;
    let extended = extension_counts(&gp)?;
    Ok(assemble(base, extended, false))
}
