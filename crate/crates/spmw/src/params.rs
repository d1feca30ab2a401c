//! Six-parameter vectors for two-terminal graphs and their composition rules.
//!
//! For a graph G with terminals s and t the vector holds, in order:
//! spanning trees, spanning two-forests separating s from t, acyclic
//! orientations, acyclic orientations with no directed path between the
//! terminals in either direction, orientations in which every edge lies on a
//! directed cycle or on a directed path between the terminals, and totally
//! cyclic orientations. Series and parallel connection act on these vectors
//! directly, so whole decomposition trees can be evaluated without ever
//! building the graph.

use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

/// Parameter vector (tau, tau2, alpha, alpha2, alpha2_star, alpha_star).
///
/// Invariants: alpha >= alpha2, alpha2_star >= alpha_star, and both
/// differences are even for every realizable vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamVec {
    /// Spanning trees.
    pub tau: BigUint,
    /// Spanning forests with exactly two components, terminals separated.
    pub tau2: BigUint,
    /// Acyclic orientations.
    pub alpha: BigUint,
    /// Acyclic orientations with neither terminal reachable from the other.
    pub alpha2: BigUint,
    /// Orientations where every edge is on a directed cycle or a directed
    /// path between the terminals.
    pub alpha2_star: BigUint,
    /// Totally cyclic orientations.
    pub alpha_star: BigUint,
}

/// Halves a product that the composition rules guarantee to be even.
fn half(n: BigUint) -> BigUint {
    debug_assert!(n.is_even(), "composition parity invariant violated");
    n >> 1
}

impl ParamVec {
    /// The single-edge graph with the edge endpoints as terminals.
    pub fn k2() -> Self {
        ParamVec::from_u64s([1, 1, 2, 0, 2, 0])
    }

    pub fn from_u64s(v: [u64; 6]) -> Self {
        ParamVec {
            tau: BigUint::from(v[0]),
            tau2: BigUint::from(v[1]),
            alpha: BigUint::from(v[2]),
            alpha2: BigUint::from(v[3]),
            alpha2_star: BigUint::from(v[4]),
            alpha_star: BigUint::from(v[5]),
        }
    }

    /// Vector of the series connection (identify t_a with s_b).
    pub fn series(&self, b: &ParamVec) -> ParamVec {
        let a = self;
        ParamVec {
            tau: &a.tau * &b.tau,
            tau2: &a.tau * &b.tau2 + &a.tau2 * &b.tau,
            alpha: &a.alpha * &b.alpha,
            alpha2: &a.alpha * &b.alpha
                - half((&a.alpha - &a.alpha2) * (&b.alpha - &b.alpha2)),
            alpha2_star: &a.alpha2_star * &b.alpha2_star
                - half((&a.alpha2_star - &a.alpha_star) * (&b.alpha2_star - &b.alpha_star)),
            alpha_star: &a.alpha_star * &b.alpha_star,
        }
    }

    /// Vector of the parallel connection (identify sources, identify sinks).
    pub fn parallel(&self, b: &ParamVec) -> ParamVec {
        let a = self;
        ParamVec {
            tau: &a.tau * &b.tau2 + &a.tau2 * &b.tau,
            tau2: &a.tau2 * &b.tau2,
            alpha: &a.alpha * &b.alpha
                - half((&a.alpha - &a.alpha2) * (&b.alpha - &b.alpha2)),
            alpha2: &a.alpha2 * &b.alpha2,
            alpha2_star: &a.alpha2_star * &b.alpha2_star,
            alpha_star: &a.alpha2_star * &b.alpha2_star
                - half((&a.alpha2_star - &a.alpha_star) * (&b.alpha2_star - &b.alpha_star)),
        }
    }

    /// Vector of the series-parallel dual graph.
    ///
    /// Swaps the tree pair and exchanges the acyclic block with the cyclic
    /// block, so dual(series) = parallel(dual, dual) and vice versa.
    pub fn sp_dual(&self) -> ParamVec {
        ParamVec {
            tau: self.tau2.clone(),
            tau2: self.tau.clone(),
            alpha: self.alpha2_star.clone(),
            alpha2: self.alpha_star.clone(),
            alpha2_star: self.alpha.clone(),
            alpha_star: self.alpha2.clone(),
        }
    }

    pub fn as_array(&self) -> [&BigUint; 6] {
        [
            &self.tau,
            &self.tau2,
            &self.alpha,
            &self.alpha2,
            &self.alpha2_star,
            &self.alpha_star,
        ]
    }
}

impl fmt::Display for ParamVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {}, {})",
            self.tau, self.tau2, self.alpha, self.alpha2, self.alpha2_star, self.alpha_star
        )
    }
}
