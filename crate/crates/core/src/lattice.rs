//! The intersection lattice of a central arrangement: flats, meet/join,
//! modular pairs and elements, supersolvability, exponents, and the
//! vertical/horizontal split by a modular corank-1 flat.
//!
//! Flats are stored as closed hyperplane index sets; those sets are the
//! canonical keys for everything, and subspace bases are recomputed from the
//! defining forms on demand. Levels are kept sorted lexicographically so that
//! every traversal (and therefore every report) is deterministic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::arrangement::{Arrangement, IndexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    /// The query needs the full lattice but only a truncation was built.
    TruncatedLattice { max_rank_computed: usize },
    /// The flat passed to a split is not modular.
    NotModular,
    /// The flat passed to a split does not have corank 1.
    WrongRank { rank: usize, expected: usize },
    /// Lattice construction exceeded the configured flat budget.
    TooManyFlats { limit: usize },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::TruncatedLattice { max_rank_computed } => {
                write!(f, "operation requires the full lattice (built up to rank {max_rank_computed})")
            }
            LatticeError::NotModular => write!(f, "flat is not modular"),
            LatticeError::WrongRank { rank, expected } => {
                write!(f, "flat has rank {rank}, expected {expected}")
            }
            LatticeError::TooManyFlats { limit } => {
                write!(f, "lattice exceeds the configured limit of {limit} flats")
            }
        }
    }
}

impl core::error::Error for LatticeError {}

/// A flat, identified by its closed set of hyperplane indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    closure: IndexSet,
    rank: usize,
}

impl Flat {
    /// All hyperplanes containing the flat's subspace.
    pub fn closure(&self) -> &IndexSet {
        &self.closure
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Stable handle to a flat inside one lattice.
pub type FlatId = usize;

/// Result of a join in a rank-truncated lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Join {
    Flat(FlatId),
    /// The join exists in the full lattice but its rank exceeds the
    /// truncation bound.
    AboveTruncation,
}

impl Join {
    pub fn flat(self) -> Option<FlatId> {
        match self {
            Join::Flat(id) => Some(id),
            Join::AboveTruncation => None,
        }
    }
}

/// The intersection lattice of a central arrangement, built in full or
/// truncated at a rank bound. Immutable after construction; every query is
/// a pure function.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    arrangement: Arrangement,
    max_rank_computed: usize,
    essential_rank: usize,
    flats: Vec<Flat>,
    /// Flat ids per rank, each level sorted lexicographically by closure.
    levels: Vec<Vec<FlatId>>,
    by_closure: BTreeMap<IndexSet, FlatId>,
    /// For each flat of rank < max_rank_computed: hyperplane outside the
    /// closure -> the flat covering through it. This is the closure step the
    /// builder already performs; joins fold over it.
    up: Vec<BTreeMap<usize, FlatId>>,
}

impl IntersectionLattice {
    /// Builds the lattice of all closed sets of rank at most `up_to_rank`
    /// (clamped to the essential rank; `None` means full). `max_flats`
    /// aborts pathological inputs early.
    pub fn build(
        arrangement: &Arrangement,
        up_to_rank: Option<usize>,
        max_flats: Option<usize>,
    ) -> Result<Self, LatticeError> {
        let essential_rank = arrangement.essential_rank();
        let bound = up_to_rank.unwrap_or(essential_rank).min(essential_rank);
        let mut lat = IntersectionLattice {
            arrangement: arrangement.clone(),
            max_rank_computed: bound,
            essential_rank,
            flats: Vec::new(),
            levels: alloc::vec![Vec::new(); bound + 1],
            by_closure: BTreeMap::new(),
            up: Vec::new(),
        };
        let budget = max_flats.unwrap_or(usize::MAX);
        let bottom = Flat { closure: IndexSet::new(), rank: 0 };
        lat.push_flat(bottom, budget)?;
        lat.levels[0].push(0);
        for rank in 0..bound {
            // expand every flat of this rank by every hyperplane not yet in
            // its closure; the closure of the union is a flat of rank + 1
            let level: Vec<FlatId> = lat.levels[rank].clone();
            for id in level {
                for h in 0..arrangement.len() {
                    if lat.flats[id].closure.contains(&h) {
                        continue;
                    }
                    let mut set = lat.flats[id].closure.clone();
                    set.insert(h);
                    let closure = arrangement.closure(&set);
                    let target = match lat.by_closure.get(&closure) {
                        Some(&t) => t,
                        None => {
                            let t = lat.push_flat(Flat { closure: closure.clone(), rank: rank + 1 }, budget)?;
                            lat.levels[rank + 1].push(t);
                            t
                        }
                    };
                    lat.up[id].insert(h, target);
                }
            }
        }
        for level in &mut lat.levels {
            level.sort_by(|&a, &b| lat.flats[a].closure.cmp(&lat.flats[b].closure));
        }
        Ok(lat)
    }

    fn push_flat(&mut self, flat: Flat, budget: usize) -> Result<FlatId, LatticeError> {
        if self.flats.len() >= budget {
            return Err(LatticeError::TooManyFlats { limit: budget });
        }
        let id = self.flats.len();
        debug_assert_eq!(flat.rank, self.arrangement.rank_of(flat.closure.iter().copied()));
        self.by_closure.insert(flat.closure.clone(), id);
        self.flats.push(flat);
        self.up.push(BTreeMap::new());
        Ok(id)
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn max_rank_computed(&self) -> usize {
        self.max_rank_computed
    }

    pub fn essential_rank(&self) -> usize {
        self.essential_rank
    }

    pub fn is_full(&self) -> bool {
        self.max_rank_computed == self.essential_rank
    }

    pub fn flat(&self, id: FlatId) -> &Flat {
        &self.flats[id]
    }

    pub fn flat_count(&self) -> usize {
        self.flats.len()
    }

    /// Flat ids of one rank, sorted lexicographically by closure.
    pub fn level(&self, rank: usize) -> &[FlatId] {
        &self.levels[rank]
    }

    pub fn all_flats(&self) -> impl Iterator<Item = FlatId> + '_ {
        self.levels.iter().flat_map(|l| l.iter().copied())
    }

    pub fn bottom(&self) -> FlatId {
        self.levels[0][0]
    }

    /// The top flat (the center of the arrangement); only available when the
    /// lattice is full.
    pub fn top(&self) -> Result<FlatId, LatticeError> {
        self.require_full()?;
        Ok(*self
            .by_closure
            .get(&self.arrangement.closure(&self.arrangement.full_set()))
            .expect("full lattice holds its top"))
    }

    pub fn find(&self, closure: &IndexSet) -> Option<FlatId> {
        self.by_closure.get(closure).copied()
    }

    fn require_full(&self) -> Result<(), LatticeError> {
        if self.is_full() {
            Ok(())
        } else {
            Err(LatticeError::TruncatedLattice { max_rank_computed: self.max_rank_computed })
        }
    }

    /// Order relation: is `a` below-or-equal `b` (i.e. the subspace of `a`
    /// contains that of `b`)? In closure terms, containment of index sets.
    pub fn le(&self, a: FlatId, b: FlatId) -> bool {
        self.flats[a].closure.is_subset(&self.flats[b].closure)
    }

    /// Meet: the largest flat below both, whose closure is the intersection
    /// of the two closures (always present, even in a truncation).
    pub fn meet(&self, a: FlatId, b: FlatId) -> FlatId {
        let inter: IndexSet =
            self.flats[a].closure.intersection(&self.flats[b].closure).copied().collect();
        *self.by_closure.get(&inter).expect("intersection of closed sets is closed")
    }

    /// Join: the flat closing the union of the two closures, or
    /// `AboveTruncation` when its rank exceeds the bound.
    pub fn join(&self, a: FlatId, b: FlatId) -> Join {
        let mut cur = a;
        for &h in &self.flats[b].closure {
            if self.flats[cur].closure.contains(&h) {
                continue;
            }
            match self.up[cur].get(&h) {
                Some(&next) => cur = next,
                None => return Join::AboveTruncation,
            }
        }
        Join::Flat(cur)
    }

    /// Is `(x, y)` a modular pair: for every `z <= y`,
    /// `z v (x ^ y) = (z v x) ^ y`? Checked by direct enumeration of `z`;
    /// requires the full lattice.
    pub fn is_modular_pair(&self, x: FlatId, y: FlatId) -> Result<bool, LatticeError> {
        self.require_full()?;
        let meet_xy = self.meet(x, y);
        for z in self.all_flats() {
            if !self.le(z, y) {
                continue;
            }
            let lhs = self.join(z, meet_xy).flat().expect("join exists in full lattice");
            let join_zx = self.join(z, x).flat().expect("join exists in full lattice");
            let rhs = self.meet(join_zx, y);
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Is the flat modular, i.e. a modular pair with every flat?
    pub fn is_modular(&self, x: FlatId) -> Result<bool, LatticeError> {
        self.require_full()?;
        for y in self.all_flats() {
            if !self.is_modular_pair(x, y)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Searches depth-first for a maximal chain of modular flats
    /// `V = X_0 < X_1 < ... < X_r`, one per rank, consecutive closures
    /// nested. Candidates are explored in lexicographic closure order, so
    /// the first chain found is deterministic.
    pub fn find_modular_chain(&self) -> Result<Option<ModularChain>, LatticeError> {
        self.require_full()?;
        let mut modular_memo: BTreeMap<FlatId, bool> = BTreeMap::new();
        let mut chain = alloc::vec![self.bottom()];
        if self.dfs_chain(&mut chain, &mut modular_memo)? {
            Ok(Some(ModularChain { flats: chain }))
        } else {
            Ok(None)
        }
    }

    fn dfs_chain(
        &self,
        chain: &mut Vec<FlatId>,
        memo: &mut BTreeMap<FlatId, bool>,
    ) -> Result<bool, LatticeError> {
        let cur = *chain.last().unwrap();
        let rank = self.flats[cur].rank;
        if rank == self.essential_rank {
            return Ok(true);
        }
        for &next in &self.levels[rank + 1] {
            if !self.le(cur, next) {
                continue;
            }
            let ok = match memo.get(&next) {
                Some(&m) => m,
                None => {
                    let m = self.is_modular(next)?;
                    memo.insert(next, m);
                    m
                }
            };
            if !ok {
                continue;
            }
            chain.push(next);
            if self.dfs_chain(chain, memo)? {
                return Ok(true);
            }
            chain.pop();
        }
        Ok(false)
    }

    /// Does the lattice have a maximal chain of modular elements?
    pub fn is_supersolvable(&self) -> Result<bool, LatticeError> {
        Ok(self.find_modular_chain()?.is_some())
    }

    /// Exponents of a modular chain: closure-size increments along it.
    pub fn exponents_from_chain(&self, chain: &ModularChain) -> Vec<usize> {
        chain
            .flats
            .windows(2)
            .map(|w| self.flats[w[1]].closure.len() - self.flats[w[0]].closure.len())
            .collect()
    }

    /// Splits the arrangement by a modular flat of corank 1: the vertical
    /// part is the flat's closure (hyperplanes containing it), the
    /// horizontal part the rest.
    pub fn split_by_modular_flat(&self, x: FlatId) -> Result<(IndexSet, IndexSet), LatticeError> {
        self.require_full()?;
        let expected = self.essential_rank.saturating_sub(1);
        if self.flats[x].rank != expected {
            return Err(LatticeError::WrongRank { rank: self.flats[x].rank, expected });
        }
        if !self.is_modular(x)? {
            return Err(LatticeError::NotModular);
        }
        let vertical = self.flats[x].closure.clone();
        let horizontal: IndexSet =
            (0..self.arrangement.len()).filter(|h| !vertical.contains(h)).collect();
        Ok((vertical, horizontal))
    }

    /// All modular corank-1 flats, in deterministic order.
    pub fn modular_coatoms(&self) -> Result<Vec<FlatId>, LatticeError> {
        self.require_full()?;
        if self.essential_rank == 0 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for &id in &self.levels[self.essential_rank - 1] {
            if self.is_modular(id)? {
                out.push(id);
            }
        }
        Ok(out)
    }
}

/// A maximal chain of modular flats, one per rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularChain {
    flats: Vec<FlatId>,
}

impl ModularChain {
    pub fn flats(&self) -> &[FlatId] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }
}

/// The rank-2 flats of an arrangement, each carrying the hyperplanes under it.
pub fn rank2_flats(arrangement: &Arrangement) -> Vec<Flat> {
    let lat = IntersectionLattice::build(arrangement, Some(2), None)
        .expect("no flat budget configured");
    if lat.max_rank_computed() < 2 {
        return Vec::new();
    }
    lat.level(2).iter().map(|&id| lat.flat(id).clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{boolean_arrangement, braid_arrangement, Arrangement};

    fn generic4() -> Arrangement {
        Arrangement::from_integers(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap()
    }

    fn set(v: &[usize]) -> IndexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn braid3_level_sizes() {
        let lat = IntersectionLattice::build(&braid_arrangement(3), None, None).unwrap();
        let sizes: Vec<usize> = (0..=2).map(|r| lat.level(r).len()).collect();
        assert_eq!(sizes, alloc::vec![1, 3, 1]);
        assert_eq!(lat.flat(lat.level(2)[0]).closure(), &set(&[0, 1, 2]));
    }

    #[test]
    fn braid4_level_sizes_and_rank2_profile() {
        let lat = IntersectionLattice::build(&braid_arrangement(4), None, None).unwrap();
        let sizes: Vec<usize> = (0..=3).map(|r| lat.level(r).len()).collect();
        assert_eq!(sizes, alloc::vec![1, 6, 7, 1]);
        let mut profile: Vec<usize> =
            lat.level(2).iter().map(|&id| lat.flat(id).closure().len()).collect();
        profile.sort_unstable();
        assert_eq!(profile, alloc::vec![2, 2, 2, 3, 3, 3, 3]);
    }

    #[test]
    fn boolean3_rank2_level() {
        let lat = IntersectionLattice::build(&boolean_arrangement(3), None, None).unwrap();
        assert_eq!(lat.level(2).len(), 3);
        for &id in lat.level(2) {
            assert_eq!(lat.flat(id).closure().len(), 2);
        }
    }

    #[test]
    fn generic4_rank2_level_is_six_doubletons() {
        let lat = IntersectionLattice::build(&generic4(), None, None).unwrap();
        assert_eq!(lat.level(2).len(), 6);
        assert!(lat.level(2).iter().all(|&id| lat.flat(id).closure().len() == 2));
    }

    #[test]
    fn rank2_flats_of_single_hyperplane_is_empty() {
        let arr = Arrangement::from_integers(1, &[&[1]]).unwrap();
        assert!(rank2_flats(&arr).is_empty());
    }

    #[test]
    fn meet_and_join_examples() {
        let b3 = braid_arrangement(3);
        let lat = IntersectionLattice::build(&b3, None, None).unwrap();
        let h12 = lat.find(&set(&[0])).unwrap();
        let h13 = lat.find(&set(&[1])).unwrap();
        let top = lat.find(&set(&[0, 1, 2])).unwrap();
        let bottom = lat.bottom();
        assert_eq!(lat.meet(h12, top), h12);
        assert_eq!(lat.meet(h12, h13), bottom);
        assert_eq!(lat.join(h12, h13), Join::Flat(top));
        assert_eq!(lat.join(h12, bottom), Join::Flat(h12));

        let b4 = braid_arrangement(4);
        let lat4 = IntersectionLattice::build(&b4, None, None).unwrap();
        let triple = lat4.find(&set(&[0, 1, 3])).unwrap();
        let double = lat4.find(&set(&[0, 5])).unwrap();
        let h12 = lat4.find(&set(&[0])).unwrap();
        assert_eq!(lat4.meet(triple, double), h12);

        let bool3 = boolean_arrangement(3);
        let latb = IntersectionLattice::build(&bool3, None, None).unwrap();
        let h1 = latb.find(&set(&[0])).unwrap();
        let h2 = latb.find(&set(&[1])).unwrap();
        assert_eq!(latb.join(h1, h2), Join::Flat(latb.find(&set(&[0, 1])).unwrap()));
    }

    #[test]
    fn join_above_truncation() {
        let lat = IntersectionLattice::build(&boolean_arrangement(3), Some(1), None).unwrap();
        let h1 = lat.find(&set(&[0])).unwrap();
        let h2 = lat.find(&set(&[1])).unwrap();
        assert_eq!(lat.join(h1, h2), Join::AboveTruncation);
        assert!(matches!(lat.is_modular(h1), Err(LatticeError::TruncatedLattice { .. })));
    }

    #[test]
    fn modularity_in_braid3_and_generic4() {
        let lat = IntersectionLattice::build(&braid_arrangement(3), None, None).unwrap();
        for x in lat.all_flats() {
            for y in lat.all_flats() {
                assert!(lat.is_modular_pair(x, y).unwrap());
            }
        }

        let lat = IntersectionLattice::build(&generic4(), None, None).unwrap();
        let x = lat.find(&set(&[0, 1])).unwrap();
        let y = lat.find(&set(&[2, 3])).unwrap();
        assert!(!lat.is_modular_pair(x, y).unwrap());
        for &id in lat.level(2) {
            assert!(!lat.is_modular(id).unwrap());
        }
        // bottom is a modular pair with everything
        for y in lat.all_flats() {
            assert!(lat.is_modular_pair(lat.bottom(), y).unwrap());
        }
    }

    #[test]
    fn modular_pairs_satisfy_rank_identity() {
        for arr in [braid_arrangement(3), braid_arrangement(4), generic4()] {
            let lat = IntersectionLattice::build(&arr, None, None).unwrap();
            for x in lat.all_flats() {
                for y in lat.all_flats() {
                    if lat.is_modular_pair(x, y).unwrap() {
                        let m = lat.flat(lat.meet(x, y)).rank();
                        let j = lat.flat(lat.join(x, y).flat().unwrap()).rank();
                        assert_eq!(
                            lat.flat(x).rank() + lat.flat(y).rank(),
                            m + j,
                            "modular pair must satisfy the rank identity"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn chains_and_exponents() {
        let lat = IntersectionLattice::build(&braid_arrangement(3), None, None).unwrap();
        let chain = lat.find_modular_chain().unwrap().unwrap();
        let closures: Vec<IndexSet> =
            chain.flats().iter().map(|&id| lat.flat(id).closure().clone()).collect();
        assert_eq!(closures, alloc::vec![set(&[]), set(&[0]), set(&[0, 1, 2])]);
        assert_eq!(lat.exponents_from_chain(&chain), alloc::vec![1, 2]);

        let lat = IntersectionLattice::build(&boolean_arrangement(3), None, None).unwrap();
        let chain = lat.find_modular_chain().unwrap().unwrap();
        let closures: Vec<IndexSet> =
            chain.flats().iter().map(|&id| lat.flat(id).closure().clone()).collect();
        assert_eq!(closures, alloc::vec![set(&[]), set(&[0]), set(&[0, 1]), set(&[0, 1, 2])]);
        assert_eq!(lat.exponents_from_chain(&chain), alloc::vec![1, 1, 1]);

        let lat = IntersectionLattice::build(&generic4(), None, None).unwrap();
        assert!(lat.find_modular_chain().unwrap().is_none());
        assert!(!lat.is_supersolvable().unwrap());

        let lat = IntersectionLattice::build(&braid_arrangement(4), None, None).unwrap();
        let chain = lat.find_modular_chain().unwrap().unwrap();
        assert_eq!(lat.exponents_from_chain(&chain), alloc::vec![1, 2, 3]);
    }

    #[test]
    fn split_by_modular_flat_examples() {
        let lat = IntersectionLattice::build(&braid_arrangement(3), None, None).unwrap();
        let x = lat.find(&set(&[0])).unwrap();
        let (v, h) = lat.split_by_modular_flat(x).unwrap();
        assert_eq!((v, h), (set(&[0]), set(&[1, 2])));

        let lat = IntersectionLattice::build(&boolean_arrangement(3), None, None).unwrap();
        let x = lat.find(&set(&[0, 1])).unwrap();
        let (v, h) = lat.split_by_modular_flat(x).unwrap();
        assert_eq!((v, h), (set(&[0, 1]), set(&[2])));

        let lat = IntersectionLattice::build(&braid_arrangement(4), None, None).unwrap();
        let x = lat.find(&set(&[0, 1, 3])).unwrap();
        let (v, h) = lat.split_by_modular_flat(x).unwrap();
        assert_eq!((v.len(), h), (3, set(&[2, 4, 5])));

        // wrong rank and non-modular flats are rejected
        let bad = lat.find(&set(&[0])).unwrap();
        assert!(matches!(lat.split_by_modular_flat(bad), Err(LatticeError::WrongRank { .. })));
        let lat = IntersectionLattice::build(&generic4(), None, None).unwrap();
        let nonmod = lat.find(&set(&[0, 1])).unwrap();
        assert_eq!(lat.split_by_modular_flat(nonmod), Err(LatticeError::NotModular));
    }

    #[test]
    fn lattice_axioms_exhaustively_on_small_corpus() {
        for arr in [braid_arrangement(3), boolean_arrangement(3), generic4()] {
            let lat = IntersectionLattice::build(&arr, None, None).unwrap();
            let ids: Vec<FlatId> = lat.all_flats().collect();
            for &a in &ids {
                for &b in &ids {
                    assert_eq!(lat.meet(a, b), lat.meet(b, a));
                    assert_eq!(lat.join(a, b), lat.join(b, a));
                    // absorption
                    let j = lat.join(a, b).flat().unwrap();
                    assert_eq!(lat.meet(a, j), a);
                    let m = lat.meet(a, b);
                    assert_eq!(lat.join(a, m), Join::Flat(a));
                    for &c in &ids {
                        let ab_c = lat.join(lat.join(a, b).flat().unwrap(), c);
                        let a_bc = lat.join(a, lat.join(b, c).flat().unwrap());
                        assert_eq!(ab_c, a_bc);
                        let meet_assoc_l = lat.meet(lat.meet(a, b), c);
                        let meet_assoc_r = lat.meet(a, lat.meet(b, c));
                        assert_eq!(meet_assoc_l, meet_assoc_r);
                    }
                }
            }
        }
    }

    #[test]
    fn flat_budget_enforced() {
        let e = IntersectionLattice::build(&braid_arrangement(4), None, Some(3));
        assert_eq!(e.unwrap_err(), LatticeError::TooManyFlats { limit: 3 });
    }

    #[test]
    fn empty_arrangement_has_trivial_lattice() {
        let arr = Arrangement::new(2, alloc::vec![]).unwrap();
        let lat = IntersectionLattice::build(&arr, None, None).unwrap();
        assert_eq!(lat.flat_count(), 1);
        assert_eq!(lat.essential_rank(), 0);
        let chain = lat.find_modular_chain().unwrap().unwrap();
        assert_eq!(chain.len(), 1);
        assert!(lat.exponents_from_chain(&chain).is_empty());
    }

    #[test]
    fn chain_exponents_sum_to_n_and_start_at_one() {
        for arr in [braid_arrangement(3), braid_arrangement(4), boolean_arrangement(3)] {
            let lat = IntersectionLattice::build(&arr, None, None).unwrap();
            let chain = lat.find_modular_chain().unwrap().unwrap();
            let exps = lat.exponents_from_chain(&chain);
            assert_eq!(exps.iter().sum::<usize>(), arr.len());
            assert_eq!(exps[0], 1);
        }
    }

    #[test]
    fn atoms_bottom_and_top_are_modular_everywhere() {
        for arr in [braid_arrangement(3), braid_arrangement(4), generic4()] {
            let lat = IntersectionLattice::build(&arr, None, None).unwrap();
            assert!(lat.is_modular(lat.bottom()).unwrap());
            assert!(lat.is_modular(lat.top().unwrap()).unwrap());
            for &a in lat.level(1) {
                assert!(lat.is_modular(a).unwrap(), "rank-1 flats are modular");
            }
        }
    }
}
