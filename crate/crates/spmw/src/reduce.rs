//! Merino-Welsh bounds and the replaceability test between parameter vectors.

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::Zero;

use crate::graph::Multigraph;
use crate::params::ParamVec;
use crate::tutte::TutteCache;

/// The three bound variants for one graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MwStatus {
    pub spanning_trees: BigUint,
    pub acyclic: BigUint,
    pub totally_cyclic: BigUint,
    /// acyclic * totally_cyclic >= spanning_trees^2
    pub multiplicative: bool,
    /// acyclic + totally_cyclic >= 2 * spanning_trees
    pub additive: bool,
    /// max(acyclic, totally_cyclic) >= spanning_trees
    pub maximum: bool,
}

impl MwStatus {
    pub fn from_counts(tau: BigUint, alpha: BigUint, alpha_star: BigUint) -> MwStatus {
        let multiplicative = &alpha * &alpha_star >= &tau * &tau;
        let additive = &alpha + &alpha_star >= BigUint::from(2u32) * &tau;
        let maximum = alpha >= tau || alpha_star >= tau;
        MwStatus {
            spanning_trees: tau,
            acyclic: alpha,
            totally_cyclic: alpha_star,
            multiplicative,
            additive,
            maximum,
        }
    }

    pub fn all_hold(&self) -> bool {
        self.multiplicative && self.additive && self.maximum
    }
}

/// Status of a graph from its Tutte evaluations.
pub fn mw_status(cache: &mut TutteCache, g: &Multigraph) -> MwStatus {
    MwStatus::from_counts(
        cache.spanning_trees(g),
        cache.acyclic_orientations(g),
        cache.totally_cyclic_orientations(g),
    )
}

/// The three worst-case ratios governing substitution of `to` for `from`
/// inside an arbitrary series-parallel context.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionRatios {
    /// Tree growth: the larger of the two tree-count ratios.
    pub trees: Ratio<BigInt>,
    /// Acyclic slack: the smaller applicable acyclic ratio.
    pub acyclic: Ratio<BigInt>,
    /// Cyclic slack: the smaller applicable cyclic ratio.
    pub cyclic: Ratio<BigInt>,
}

impl ReductionRatios {
    /// Substitution keeps the product bound exactly when the squared tree
    /// ratio does not exceed the product of the two slacks.
    pub fn admissible(&self) -> bool {
        &self.trees * &self.trees <= &self.acyclic * &self.cyclic
    }
}

fn ratio(num: &BigUint, den: &BigUint) -> Ratio<BigInt> {
    assert!(!den.is_zero(), "reduction target count must be positive");
    Ratio::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// Ratios for replacing `from` by `to`. The target needs nonzero tree
/// counts and nonzero counts in both orientation families.
pub fn reduction_ratios(from: &ParamVec, to: &ParamVec) -> ReductionRatios {
    let trees = ratio(&from.tau, &to.tau).max(ratio(&from.tau2, &to.tau2));
    // a zero in the target's secondary count would make that ratio infinite,
    // so only the primary constrains
    let acyclic = if to.alpha2.is_zero() {
        ratio(&from.alpha, &to.alpha)
    } else {
        ratio(&from.alpha, &to.alpha).min(ratio(&from.alpha2, &to.alpha2))
    };
    let cyclic = if to.alpha_star.is_zero() {
        ratio(&from.alpha2_star, &to.alpha2_star)
    } else {
        ratio(&from.alpha2_star, &to.alpha2_star).min(ratio(&from.alpha_star, &to.alpha_star))
    };
    ReductionRatios {
        trees,
        acyclic,
        cyclic,
    }
}

/// Whether `from` may be replaced by `to` in any surrounding composition
/// without breaking the product bound.
pub fn can_reduce(from: &ParamVec, to: &ParamVec) -> bool {
    reduction_ratios(from, to).admissible()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::DecompTree;

    fn pv(a: [u64; 6]) -> ParamVec {
        ParamVec::from_u64s(a)
    }

    #[test]
    fn status_on_small_graphs() {
        let mut cache = TutteCache::new();
        let digon = Multigraph::from_edges(2, &[(0, 1), (0, 1)]);
        let s = mw_status(&mut cache, &digon);
        assert!(s.all_hold());
        assert_eq!(s.spanning_trees, 2u32.into());
        // equality in every variant
        assert_eq!(&s.acyclic * &s.totally_cyclic, &s.spanning_trees * &s.spanning_trees);
        let bridge = Multigraph::from_edges(2, &[(0, 1)]);
        let s = mw_status(&mut cache, &bridge);
        assert!(!s.multiplicative, "a bridge has no totally cyclic orientation");
        assert!(s.maximum);
    }

    #[test]
    fn near_miss_is_exact() {
        // combined graph with trees (2,7): against a path the squared tree
        // ratio 49/4 just exceeds the slack product 12, against a three-edge
        // path 49/9 stays below 6
        let digon_path = DecompTree::parse("S(P(K,K),K,K,K)").unwrap();
        let from = digon_path.eval();
        assert_eq!(from, pv([2, 7, 16, 14, 6, 0]));
        let path2 = pv([1, 2, 4, 2, 2, 0]);
        let r = reduction_ratios(&from, &path2);
        assert_eq!(r.trees, Ratio::new(BigInt::from(7), BigInt::from(2)));
        assert!(!r.admissible());
        let path3 = pv([1, 3, 8, 6, 2, 0]);
        let r = reduction_ratios(&from, &path3);
        assert_eq!(r.trees, Ratio::new(BigInt::from(7), BigInt::from(3)));
        assert_eq!(r.acyclic, Ratio::from(BigInt::from(2)));
        assert_eq!(r.cyclic, Ratio::from(BigInt::from(3)));
        assert!(r.admissible());
        assert!(can_reduce(&from, &path3));
        // earlier targets all fail
        for smaller in [
            pv([1, 1, 2, 0, 2, 0]),
            pv([2, 1, 2, 0, 4, 2]),
            pv([1, 2, 4, 2, 2, 0]),
            pv([3, 2, 6, 0, 4, 2]),
            pv([2, 3, 4, 2, 6, 0]),
            pv([3, 1, 2, 0, 8, 6]),
        ] {
            assert!(!can_reduce(&from, &smaller));
        }
    }

    #[test]
    fn zero_secondary_counts_use_primary_ratio() {
        // target with alpha2 = 0 and alpha_star > 0
        let to = pv([2, 1, 2, 0, 4, 2]);
        let from = pv([4, 4, 4, 2, 14, 4]);
        let r = reduction_ratios(&from, &to);
        assert_eq!(r.acyclic, Ratio::from(BigInt::from(2)));
        assert_eq!(
            r.cyclic,
            Ratio::new(BigInt::from(2), BigInt::from(1))
        );
    }
}
