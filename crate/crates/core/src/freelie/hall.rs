//! Construction of the graded Hall basis.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// One basis word: a generator or a bracket of two earlier words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum WordNode {
    Generator(usize),
    /// Global indices of the two subtrees.
    Bracket(usize, usize),
}

/// A graded basis of the free Lie algebra on `n` generators, complete up to
/// a fixed degree. Words are indexed globally in canonical order: ascending
/// degree, then recursive subtree order; the global index order therefore
/// *is* the Hall total order. Immutable once built.
#[derive(Clone, Debug)]
pub struct HallBasis {
    n_generators: usize,
    max_degree: usize,
    nodes: Vec<WordNode>,
    degrees: Vec<usize>,
    /// Which generators occur as leaves of each word.
    leaf_masks: Vec<u128>,
    /// Start of each degree block; `deg_start[d]` for d in 1..=max_degree+1.
    deg_start: Vec<usize>,
    pair_index: BTreeMap<(usize, usize), usize>,
}

impl HallBasis {
    /// Builds the basis on `n` generators up to `max_degree` (>= 1).
    pub fn new(n_generators: usize, max_degree: usize) -> Self {
        assert!(max_degree >= 1, "max_degree must be at least 1");
        assert!(n_generators <= 128, "leaf masks support at most 128 generators");
        let mut basis = HallBasis {
            n_generators,
            max_degree,
            nodes: Vec::new(),
            degrees: Vec::new(),
            leaf_masks: Vec::new(),
            deg_start: alloc::vec![0; max_degree + 2],
            pair_index: BTreeMap::new(),
        };
        for g in 0..n_generators {
            basis.nodes.push(WordNode::Generator(g));
            basis.degrees.push(1);
            basis.leaf_masks.push(1u128 << g);
        }
        basis.deg_start[1] = 0;
        basis.deg_start[2] = n_generators;
        for d in 2..=max_degree {
            let mut batch: Vec<(usize, usize)> = Vec::new();
            for dv in 1..d {
                let du = d - dv;
                for u in basis.range_of_degree(du) {
                    for v in basis.range_of_degree(dv) {
                        if u > v && basis.is_standard_pair(u, v) {
                            batch.push((u, v));
                        }
                    }
                }
            }
            batch.sort_unstable();
            for (u, v) in batch {
                let idx = basis.nodes.len();
                basis.nodes.push(WordNode::Bracket(u, v));
                basis.degrees.push(d);
                basis.leaf_masks.push(basis.leaf_masks[u] | basis.leaf_masks[v]);
                basis.pair_index.insert((u, v), idx);
            }
            basis.deg_start[d + 1] = basis.nodes.len();
        }
        basis
    }

    fn is_standard_pair(&self, u: usize, v: usize) -> bool {
        debug_assert!(u > v);
        match self.nodes[u] {
            WordNode::Generator(_) => true,
            WordNode::Bracket(_, b) => b <= v,
        }
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Number of Hall words of the given degree.
    pub fn count_in_degree(&self, degree: usize) -> usize {
        self.range_of_degree(degree).len()
    }

    /// Global index range of a degree block.
    pub fn range_of_degree(&self, degree: usize) -> core::ops::Range<usize> {
        assert!(degree >= 1 && degree <= self.max_degree, "degree out of range");
        self.deg_start[degree]..self.deg_start[degree + 1]
    }

    pub fn degree_of(&self, word: usize) -> usize {
        self.degrees[word]
    }

    /// Position of a word inside its degree block.
    pub fn position_in_degree(&self, word: usize) -> usize {
        word - self.deg_start[self.degrees[word]]
    }

    pub fn word_at(&self, degree: usize, position: usize) -> usize {
        let r = self.range_of_degree(degree);
        debug_assert!(position < r.len());
        r.start + position
    }

    /// The generators occurring in the word, as a bitmask.
    pub fn leaf_mask(&self, word: usize) -> u128 {
        self.leaf_masks[word]
    }

    pub(crate) fn node(&self, word: usize) -> WordNode {
        self.nodes[word]
    }

    /// Children of a bracket word.
    pub fn children(&self, word: usize) -> Option<(usize, usize)> {
        match self.nodes[word] {
            WordNode::Generator(_) => None,
            WordNode::Bracket(a, b) => Some((a, b)),
        }
    }

    /// Looks up the basis word `[u, v]` when that bracket is itself basic.
    pub fn standard_bracket(&self, u: usize, v: usize) -> Option<usize> {
        self.pair_index.get(&(u, v)).copied()
    }

    /// Maps every word whose leaves all lie in the domain of `gen_map` to the
    /// structurally identical word of `sub`; other words map to `None`.
    ///
    /// The Hall condition only compares relative order of subwords, so the
    /// restriction of this basis to a sub-alphabet coincides with the basis
    /// built directly on it; the lookup is therefore total on such words.
    pub fn map_to_subbasis(&self, sub: &HallBasis, gen_map: &BTreeMap<usize, usize>) -> Vec<Option<usize>> {
        let mut out: Vec<Option<usize>> = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            let mapped = match *node {
                WordNode::Generator(g) => gen_map.get(&g).copied(),
                WordNode::Bracket(a, b) => match (out[a], out[b]) {
                    (Some(a2), Some(b2)) => Some(
                        sub.standard_bracket(a2, b2)
                            .expect("sub-alphabet Hall word must exist in sub-basis"),
                    ),
                    _ => None,
                },
            };
            out.push(mapped);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelie::witt_dimension;

    #[test]
    fn sizes_match_witt_dimensions() {
        for n in 0..=4 {
            let basis = HallBasis::new(n, 6);
            for d in 1..=6 {
                assert_eq!(basis.count_in_degree(d), witt_dimension(n, d), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn rank_two_examples() {
        let b = HallBasis::new(2, 3);
        assert_eq!(
            (1..=3).map(|d| b.count_in_degree(d)).collect::<Vec<_>>(),
            alloc::vec![2, 1, 2]
        );
        let b1 = HallBasis::new(1, 3);
        assert_eq!(
            (1..=3).map(|d| b1.count_in_degree(d)).collect::<Vec<_>>(),
            alloc::vec![1, 0, 0]
        );
        let b3 = HallBasis::new(3, 2);
        assert_eq!(
            (1..=2).map(|d| b3.count_in_degree(d)).collect::<Vec<_>>(),
            alloc::vec![3, 3]
        );
    }

    #[test]
    fn degree_one_words_are_generators_in_order() {
        let b = HallBasis::new(3, 2);
        for g in 0..3 {
            assert_eq!(b.node(g), WordNode::Generator(g));
        }
    }

    #[test]
    fn sub_basis_mapping_is_order_preserving() {
        let big = HallBasis::new(3, 4);
        let sub = HallBasis::new(2, 4);
        let gen_map: BTreeMap<usize, usize> = [(0usize, 0usize), (2, 1)].into_iter().collect();
        let map = big.map_to_subbasis(&sub, &gen_map);
        let mask = (1u128 << 0) | (1u128 << 2);
        for d in 1..=4 {
            let imgs: Vec<usize> = big
                .range_of_degree(d)
                .filter(|&w| big.leaf_mask(w) & !mask == 0)
                .map(|w| map[w].expect("sub-word must map"))
                .collect();
            // bijective onto the degree block of the sub basis, in order
            assert_eq!(imgs, sub.range_of_degree(d).collect::<Vec<_>>());
        }
    }
}
