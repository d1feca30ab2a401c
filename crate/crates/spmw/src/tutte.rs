//! Tutte polynomial evaluation by deletion and contraction.
//!
//! Results are memoized across isomorphic minors: the cache key is the
//! canonical form of the graph, so two different labelings of the same minor
//! hit the same entry. Counting specializations are provided for spanning
//! trees, acyclic orientations, and totally cyclic orientations. All three
//! are multiplicative over components, which the recursion yields on its own.

use alloc::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::graph::{CanonicalForm, Multigraph};

pub struct TutteCache {
    map: BTreeMap<(i64, i64, CanonicalForm), BigInt>,
}

impl TutteCache {
    pub fn new() -> TutteCache {
        TutteCache {
            map: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Tutte polynomial of g at the point (x, y).
    pub fn eval(&mut self, g: &Multigraph, x: i64, y: i64) -> BigInt {
        let m = g.edge_count();
        if m == 0 {
            return BigInt::one();
        }
        // pick a non-loop non-bridge edge, preferring high multiplicity so
        // contraction sheds parallel copies as loops quickly
        let mut pick: Option<(usize, usize)> = None;
        let mut bridges = 0usize;
        let mut loops = 0usize;
        for e in 0..m {
            if g.is_loop(e) {
                loops += 1;
            } else if g.is_bridge(e) {
                bridges += 1;
            } else {
                let mult = g.parallel_class(e).len();
                if pick.map_or(true, |(_, best)| mult > best) {
                    pick = Some((e, mult));
                }
            }
        }
        let Some((e, _)) = pick else {
            // every edge is a bridge or a loop
            let xb = num_traits::pow(BigInt::from(x), bridges);
            let yl = num_traits::pow(BigInt::from(y), loops);
            return xb * yl;
        };
        let key = (x, y, g.canonical_form());
        if let Some(v) = self.map.get(&key) {
            return v.clone();
        }
        let val = self.eval(&g.delete_edge(e), x, y) + self.eval(&g.contract_edge(e), x, y);
        self.map.insert(key, val.clone());
        val
    }

    /// T(1,1): spanning trees of a connected graph, maximal spanning
    /// forests otherwise.
    pub fn spanning_trees(&mut self, g: &Multigraph) -> BigUint {
        self.nonnegative(g, 1, 1)
    }

    /// T(2,0): orientations with no directed cycle.
    pub fn acyclic_orientations(&mut self, g: &Multigraph) -> BigUint {
        self.nonnegative(g, 2, 0)
    }

    /// T(0,2): orientations in which every edge lies on a directed cycle.
    pub fn totally_cyclic_orientations(&mut self, g: &Multigraph) -> BigUint {
        self.nonnegative(g, 0, 2)
    }

    fn nonnegative(&mut self, g: &Multigraph, x: i64, y: i64) -> BigUint {
        self.eval(g, x, y)
            .to_biguint()
            .expect("counting specialization is nonnegative")
    }
}

impl Default for TutteCache {
    fn default() -> Self {
        TutteCache::new()
    }
}

/// One-shot evaluation with a private cache.
pub fn tutte(g: &Multigraph, x: i64, y: i64) -> BigInt {
    TutteCache::new().eval(g, x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{thomassen, thomassen_acyclic, thomassen_spanning_trees,
        thomassen_totally_cyclic};
    use crate::tree::DecompTree;

    fn big(n: u64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn base_cases() {
        let edgeless = Multigraph::new(3);
        assert_eq!(tutte(&edgeless, 7, 9), big(1));
        let bridge = Multigraph::from_edges(2, &[(0, 1)]);
        assert_eq!(tutte(&bridge, 5, 3), big(5));
        let mut lone_loop = Multigraph::new(1);
        lone_loop.add_edge(0, 0);
        assert_eq!(tutte(&lone_loop, 5, 3), big(3));
    }

    #[test]
    fn triangle_polynomial_points() {
        // T = x^2 + x + y
        let tri = Multigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(tutte(&tri, 1, 1), big(3));
        assert_eq!(tutte(&tri, 2, 0), big(6));
        assert_eq!(tutte(&tri, 0, 2), big(2));
        assert_eq!(tutte(&tri, 3, 5), big(17));
    }

    #[test]
    fn four_cycle_and_k4() {
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let mut cache = TutteCache::new();
        assert_eq!(cache.spanning_trees(&c4), 4u32.into());
        assert_eq!(cache.acyclic_orientations(&c4), 14u32.into());
        assert_eq!(cache.totally_cyclic_orientations(&c4), 2u32.into());
        let k4 = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(cache.spanning_trees(&k4), 16u32.into());
        assert_eq!(cache.acyclic_orientations(&k4), 24u32.into());
        assert_eq!(cache.totally_cyclic_orientations(&k4), 24u32.into());
    }

    #[test]
    fn disconnected_graphs_multiply() {
        let two_triangles = Multigraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
        );
        assert_eq!(tutte(&two_triangles, 1, 1), big(9));
        assert_eq!(tutte(&two_triangles, 2, 0), big(36));
    }

    #[test]
    fn agrees_with_composition_algebra() {
        // graph-level counts of a realization match the tree evaluation
        for expr in ["P(K,K,K)", "S(P(K,K),P(K,K))", "P(S(K,K),S(K,K),K)"] {
            let t = DecompTree::parse(expr).unwrap();
            let p = t.eval();
            let g = t.realize().graph;
            let mut cache = TutteCache::new();
            assert_eq!(cache.spanning_trees(&g), p.tau, "{expr}");
            assert_eq!(cache.acyclic_orientations(&g), p.alpha, "{expr}");
            assert_eq!(cache.totally_cyclic_orientations(&g), p.alpha_star, "{expr}");
        }
    }

    #[test]
    fn thomassen_counts_match_closed_forms() {
        let mut cache = TutteCache::new();
        for n in 3..=6 {
            let g = thomassen(n);
            assert_eq!(cache.spanning_trees(&g), thomassen_spanning_trees(n), "n={n}");
            assert_eq!(cache.acyclic_orientations(&g), thomassen_acyclic(n), "n={n}");
            assert_eq!(
                cache.totally_cyclic_orientations(&g),
                thomassen_totally_cyclic(n),
                "n={n}"
            );
        }
    }

    #[test]
    fn cache_is_transparent() {
        let g = DecompTree::parse("P(S(K,P(K,K)),K,S(K,K))").unwrap().realize().graph;
        let mut shared = TutteCache::new();
        let a = shared.eval(&g, 2, 0);
        let b = shared.eval(&g, 2, 0);
        assert_eq!(a, b);
        assert_eq!(a, tutte(&g, 2, 0));
        assert!(shared.len() > 0);
    }
}
