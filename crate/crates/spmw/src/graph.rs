//! Undirected multigraphs with parallel edges and loops.
//!
//! Vertices are dense indices, edges are an indexed list of unordered
//! endpoint pairs. Everything here is sized for the small graphs the search
//! works with, so algorithms favor clarity over asymptotics.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multigraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertices: usize) -> Multigraph {
        Multigraph {
            vertices,
            edges: Vec::new(),
        }
    }

    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> Multigraph {
        let mut g = Multigraph::new(vertices);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn add_vertex(&mut self) -> usize {
        self.vertices += 1;
        self.vertices - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.vertices && v < self.vertices, "endpoint out of range");
        self.edges.push((u, v));
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// Loops contribute two.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn delete_edge(&self, e: usize) -> Multigraph {
        let mut g = self.clone();
        g.edges.remove(e);
        g
    }

    /// Contracts a non-loop edge, merging its endpoints. Other edges between
    /// the same endpoints become loops. The larger endpoint index disappears
    /// and the last vertex is renumbered into the gap.
    pub fn contract_edge(&self, e: usize) -> Multigraph {
        let (u, v) = self.edges[e];
        assert!(u != v, "cannot contract a loop");
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let last = self.vertices - 1;
        let map = |w: usize| {
            if w == gone {
                keep
            } else if w == last {
                gone
            } else {
                w
            }
        };
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i != e {
                edges.push((map(a), map(b)));
            }
        }
        Multigraph {
            vertices: self.vertices - 1,
            edges,
        }
    }

    fn union_find_roots(&self, skip_edge: Option<usize>) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if Some(i) == skip_edge {
                continue;
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
        (0..self.vertices)
            .map(|v| find(&mut parent, v))
            .collect()
    }

    /// Isolated vertices count as components.
    pub fn component_count(&self) -> usize {
        let roots = self.union_find_roots(None);
        let mut distinct: Vec<usize> = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        distinct.len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_bridge(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        if u == v {
            return false;
        }
        let roots = self.union_find_roots(Some(e));
        roots[u] != roots[v]
    }

    /// Series class of an edge: the edge itself plus every other edge that
    /// forms a minimal two-edge cut with it. Bridges and loops are alone in
    /// their class. Sorted by edge index.
    pub fn series_class(&self, e: usize) -> Vec<usize> {
        if self.is_loop(e) || self.is_bridge(e) {
            return vec![e];
        }
        let minus = self.delete_edge(e);
        let mut class = vec![e];
        for f in 0..self.edges.len() {
            if f == e || self.is_loop(f) || self.is_bridge(f) {
                continue;
            }
            let shifted = if f < e { f } else { f - 1 };
            if minus.is_bridge(shifted) {
                class.push(f);
            }
        }
        class.sort_unstable();
        class
    }

    /// Parallel class of an edge: all non-loop edges with the same endpoint
    /// pair. Loops are alone in their class. Sorted by edge index.
    pub fn parallel_class(&self, e: usize) -> Vec<usize> {
        if self.is_loop(e) {
            return vec![e];
        }
        let (u, v) = self.edges[e];
        let key = if u < v { (u, v) } else { (v, u) };
        (0..self.edges.len())
            .filter(|&f| {
                let (a, b) = self.edges[f];
                let k = if a < b { (a, b) } else { (b, a) };
                k == key && a != b
            })
            .collect()
    }

    /// Multiplicity matrix, loops on the diagonal (once per loop).
    fn adjacency_matrix(&self) -> Vec<Vec<u32>> {
        let mut m = vec![vec![0u32; self.vertices]; self.vertices];
        for &(u, v) in &self.edges {
            if u == v {
                m[u][u] += 1;
            } else {
                m[u][v] += 1;
                m[v][u] += 1;
            }
        }
        m
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        self.canonical_form_colored(&vec![0; self.vertices])
    }

    /// Canonical form under color-preserving relabelings. Two graphs have
    /// equal forms exactly when some isomorphism between them maps each
    /// vertex to one of the same color.
    pub fn canonical_form_colored(&self, colors: &[u32]) -> CanonicalForm {
        assert_eq!(colors.len(), self.vertices);
        let adj = self.adjacency_matrix();
        let mut pos_colors = colors.to_vec();
        pos_colors.sort_unstable();
        // high-degree candidates first so a large matrix is found early
        let mut by_degree: Vec<usize> = (0..self.vertices).collect();
        let degs: Vec<usize> = (0..self.vertices).map(|v| self.degree(v)).collect();
        by_degree.sort_unstable_by(|&a, &b| degs[b].cmp(&degs[a]));
        let mut search = CanonSearch {
            adj: &adj,
            colors,
            pos_colors: &pos_colors,
            order: &by_degree,
            best: None,
            perm: Vec::with_capacity(self.vertices),
            used: vec![false; self.vertices],
            rows: Vec::new(),
        };
        search.run(self.vertices);
        let matrix = search.best.unwrap_or_default();
        CanonicalForm {
            vertices: self.vertices,
            colors: pos_colors,
            matrix,
        }
    }

    pub fn isomorphic(&self, other: &Multigraph) -> bool {
        self.vertices == other.vertices
            && self.edges.len() == other.edges.len()
            && self.canonical_form() == other.canonical_form()
    }
}

/// Label-independent fingerprint of a (colored) multigraph.
///
/// `matrix` is the lexicographically greatest flattening of the adjacency
/// matrix over all vertex orders that list colors in nondecreasing order;
/// row k holds the multiplicities towards rows 0..k and then the loop count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    vertices: usize,
    colors: Vec<u32>,
    matrix: Vec<u32>,
}

struct CanonSearch<'a> {
    adj: &'a [Vec<u32>],
    colors: &'a [u32],
    pos_colors: &'a [u32],
    order: &'a [usize],
    best: Option<Vec<u32>>,
    perm: Vec<usize>,
    used: Vec<bool>,
    rows: Vec<u32>,
}

impl CanonSearch<'_> {
    /// Invariant on entry: if `best` is set, `rows` equals its prefix.
    /// A candidate whose row segment beats `best` invalidates it, so the
    /// first leaf below resets it and the invariant is restored.
    fn run(&mut self, n: usize) {
        let k = self.perm.len();
        if k == n {
            if self.best.is_none() {
                self.best = Some(self.rows.clone());
            }
            return;
        }
        let want = self.pos_colors[k];
        for i in 0..n {
            let v = self.order[i];
            if self.used[v] || self.colors[v] != want {
                continue;
            }
            let mut row: Vec<u32> = Vec::with_capacity(k + 1);
            for j in 0..k {
                row.push(self.adj[v][self.perm[j]]);
            }
            row.push(self.adj[v][v]);
            if let Some(best) = &self.best {
                let seg = &best[self.rows.len()..self.rows.len() + row.len()];
                match row.as_slice().cmp(seg) {
                    core::cmp::Ordering::Less => continue,
                    core::cmp::Ordering::Equal => {}
                    core::cmp::Ordering::Greater => self.best = None,
                }
            }
            self.used[v] = true;
            self.perm.push(v);
            let base = self.rows.len();
            self.rows.extend_from_slice(&row);
            self.run(n);
            self.rows.truncate(base);
            self.perm.pop();
            self.used[v] = false;
        }
    }
}

/// A graph with designated source and sink.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoTerminal {
    pub graph: Multigraph,
    pub source: usize,
    pub sink: usize,
}

impl TwoTerminal {
    /// The graph with one extra source-sink edge appended.
    pub fn with_st_edge(&self) -> Multigraph {
        let mut g = self.graph.clone();
        g.add_edge(self.source, self.sink);
        g
    }

    pub fn reversed(&self) -> TwoTerminal {
        TwoTerminal {
            graph: self.graph.clone(),
            source: self.sink,
            sink: self.source,
        }
    }

    fn terminal_colors(&self) -> Vec<u32> {
        let mut colors = vec![0u32; self.graph.vertex_count()];
        colors[self.source] = 1;
        colors[self.sink] = 2;
        colors
    }

    /// Canonical form with the terminals distinguished from each other.
    pub fn canonical_form(&self) -> CanonicalForm {
        self.graph.canonical_form_colored(&self.terminal_colors())
    }

    /// Isomorphism carrying source to source and sink to sink.
    pub fn isomorphic_fixed(&self, other: &TwoTerminal) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// Isomorphism allowed to exchange the two terminals.
    pub fn isomorphic_up_to_reversal(&self, other: &TwoTerminal) -> bool {
        self.isomorphic_fixed(other) || self.isomorphic_fixed(&other.reversed())
    }

    /// Whether every edge participates in a nontrivial series or parallel
    /// class once the terminals are tied together with an extra edge. The
    /// extra edge itself may enlarge classes but is not itself required to
    /// be in one.
    pub fn is_extendable(&self) -> bool {
        let gp = self.with_st_edge();
        let st = gp.edge_count() - 1;
        (0..st).all(|e| gp.series_class(e).len() >= 2 || gp.parallel_class(e).len() >= 2)
    }
}

/// Cycle on n vertices with every edge doubled except two adjacent ones.
/// The smallest known family where acyclic orientations alone fall below
/// spanning trees as n grows.
pub fn thomassen(n: usize) -> Multigraph {
    assert!(n >= 3);
    let mut g = Multigraph::new(n);
    for i in 0..n {
        let j = (i + 1) % n;
        g.add_edge(i, j);
        if i < n - 2 {
            g.add_edge(i, j);
        }
    }
    g
}

fn pow(base: u64, exp: usize) -> BigUint {
    num_traits::pow::pow(BigUint::from(base), exp)
}

pub fn thomassen_spanning_trees(n: usize) -> BigUint {
    assert!(n >= 3);
    pow(2, n - 1) + BigUint::from(n as u64 - 2) * pow(2, n - 3)
}

pub fn thomassen_acyclic(n: usize) -> BigUint {
    assert!(n >= 3);
    pow(2, n) - BigUint::from(2u64)
}

pub fn thomassen_totally_cyclic(n: usize) -> BigUint {
    assert!(n >= 3);
    BigUint::from(2u64) * pow(3, n - 2)
}
