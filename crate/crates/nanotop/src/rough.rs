//! Nano topologies from rough-set approximations.
//!
//! Given a partition 𝒰/ℛ (the equivalence classes of an indiscernibility
//! relation) and a target set ℳ, the nano topology τ_ℛ(ℳ) is the
//! deduplicated family {φ, 𝒰, lower, upper, boundary}. [`NanoSpace`]
//! caches the topology, its closed duals and the approximations, and
//! provides the primitive Nint/Ncl operators every weak-open class is
//! defined from.

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::classes::CLASS_COUNT;
use crate::sets::{mask_subset, SetError, SetFamily, Subset, Universe};

/// Errors raised while validating a partition.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("OverlappingBlocks: blocks {0} and {1} share elements")]
    OverlappingBlocks(usize, usize),
    #[error("EmptyBlock: block {0} is empty")]
    EmptyBlock(usize),
    #[error("IncompleteCover: blocks miss {0}")]
    IncompleteCover(Subset),
    #[error(transparent)]
    Set(#[from] SetError),
}

/// The equivalence classes 𝒰/ℛ: disjoint, non-empty blocks covering the
/// universe. Block order is preserved as given.
#[derive(Clone)]
pub struct Partition {
    universe: Universe,
    blocks: Vec<Subset>,
}

impl Partition {
    pub fn new(universe: &Universe, blocks: Vec<Subset>) -> Result<Self, PartitionError> {
        let mut covered = 0u64;
        for (i, block) in blocks.iter().enumerate() {
            if !block.universe().same_as(universe) {
                return Err(SetError::UniverseMismatch.into());
            }
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock(i));
            }
            if covered & block.mask() != 0 {
                let j = blocks[..i]
                    .iter()
                    .position(|b| b.mask() & block.mask() != 0)
                    .expect("an earlier block overlaps");
                return Err(PartitionError::OverlappingBlocks(j, i));
            }
            covered |= block.mask();
        }
        if covered != universe.full_mask() {
            let missing = universe.subset(universe.full_mask() & !covered);
            return Err(PartitionError::IncompleteCover(missing));
        }
        Ok(Partition {
            universe: universe.clone(),
            blocks,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    fn check_target(&self, m: &Subset) -> Result<(), SetError> {
        if m.universe().same_as(&self.universe) {
            Ok(())
        } else {
            Err(SetError::UniverseMismatch)
        }
    }

    /// Lower approximation: union of blocks contained in `m`.
    pub fn lower_approximation(&self, m: &Subset) -> Result<Subset, SetError> {
        self.check_target(m)?;
        let mask = self
            .blocks
            .iter()
            .filter(|b| mask_subset(b.mask(), m.mask()))
            .fold(0, |acc, b| acc | b.mask());
        Ok(self.universe.subset(mask))
    }

    /// Upper approximation: union of blocks meeting `m`.
    pub fn upper_approximation(&self, m: &Subset) -> Result<Subset, SetError> {
        self.check_target(m)?;
        let mask = self
            .blocks
            .iter()
            .filter(|b| b.mask() & m.mask() != 0)
            .fold(0, |acc, b| acc | b.mask());
        Ok(self.universe.subset(mask))
    }
}

impl fmt::Display for Partition {
    /// Renders `{{p},{r},{q,s}}` in block order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A nano topological space (𝒰, τ_ℛ(ℳ)): the evaluation context for
/// every operator in this crate.
///
/// Immutable after construction; all operators are pure, so one space
/// can be shared by any number of concurrent workers.
pub struct NanoSpace {
    universe: Universe,
    partition: Partition,
    target: Subset,
    lower: Subset,
    upper: Subset,
    boundary: Subset,
    tau: SetFamily,
    closed: SetFamily,
    tau_masks: Vec<u64>,
    closed_masks: Vec<u64>,
    // Lazily computed open-family masks, one slot per ClassKind.
    class_families: [OnceLock<Vec<u64>>; CLASS_COUNT],
}

impl NanoSpace {
    /// Builds the space: τ = dedup{φ, 𝒰, lower, upper, boundary}.
    ///
    /// Degenerate targets (ℳ = φ, ℳ = 𝒰, ℳ a union of blocks) collapse τ
    /// to two or three sets; every operator works unchanged on such
    /// spaces.
    pub fn build(partition: Partition, target: Subset) -> Result<Self, SetError> {
        if !target.universe().same_as(partition.universe()) {
            return Err(SetError::UniverseMismatch);
        }
        let universe = partition.universe().clone();
        let lower = partition.lower_approximation(&target)?;
        let upper = partition.upper_approximation(&target)?;
        let boundary = upper.difference(&lower)?;
        let tau = SetFamily::from_masks(
            &universe,
            [
                0,
                universe.full_mask(),
                lower.mask(),
                upper.mask(),
                boundary.mask(),
            ],
        );
        let closed = tau.complements();
        let tau_masks: Vec<u64> = tau.masks().collect();
        let closed_masks: Vec<u64> = closed.masks().collect();

        // τ is a topology: closed under binary union and intersection.
        #[cfg(debug_assertions)]
        for &a in &tau_masks {
            for &b in &tau_masks {
                debug_assert!(tau_masks.contains(&(a | b)), "tau not union-closed");
                debug_assert!(tau_masks.contains(&(a & b)), "tau not intersection-closed");
            }
        }

        Ok(NanoSpace {
            universe,
            partition,
            target,
            lower,
            upper,
            boundary,
            tau,
            closed,
            tau_masks,
            closed_masks,
            class_families: Default::default(),
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn target(&self) -> &Subset {
        &self.target
    }

    pub fn lower(&self) -> &Subset {
        &self.lower
    }

    pub fn upper(&self) -> &Subset {
        &self.upper
    }

    pub fn boundary(&self) -> &Subset {
        &self.boundary
    }

    /// The nano topology τ_ℛ(ℳ), canonical order, at most five members.
    pub fn tau(&self) -> &SetFamily {
        &self.tau
    }

    /// Complements of the τ members.
    pub fn closed_family(&self) -> &SetFamily {
        &self.closed
    }

    pub(crate) fn tau_masks(&self) -> &[u64] {
        &self.tau_masks
    }

    pub(crate) fn closed_masks(&self) -> &[u64] {
        &self.closed_masks
    }

    pub(crate) fn full_mask(&self) -> u64 {
        self.universe.full_mask()
    }

    pub(crate) fn class_family_slot(&self, slot: usize) -> &OnceLock<Vec<u64>> {
        &self.class_families[slot]
    }

    fn check_operand(&self, c: &Subset) -> Result<(), SetError> {
        if c.universe().same_as(&self.universe) {
            Ok(())
        } else {
            Err(SetError::UniverseMismatch)
        }
    }

    /// Nint(𝒞): the largest N-open set contained in `c`.
    pub fn interior(&self, c: &Subset) -> Result<Subset, SetError> {
        self.check_operand(c)?;
        Ok(self.universe.subset(self.interior_mask(c.mask())))
    }

    /// Ncl(𝒞): the smallest N-closed set containing `c`.
    pub fn closure(&self, c: &Subset) -> Result<Subset, SetError> {
        self.check_operand(c)?;
        Ok(self.universe.subset(self.closure_mask(c.mask())))
    }

    #[inline]
    pub(crate) fn interior_mask(&self, c: u64) -> u64 {
        self.tau_masks
            .iter()
            .filter(|&&t| mask_subset(t, c))
            .fold(0, |acc, &t| acc | t)
    }

    #[inline]
    pub(crate) fn closure_mask(&self, c: u64) -> u64 {
        self.closed_masks
            .iter()
            .filter(|&&f| mask_subset(c, f))
            .fold(self.full_mask(), |acc, &f| acc & f)
    }

    /// Canonical one-line descriptor: `U={..} U/R={..} M={..}`.
    pub fn describe(&self) -> String {
        format!(
            "U={} U/R={} M={}",
            self.universe.full_set(),
            self.partition,
            self.target
        )
    }
}

impl fmt::Display for NanoSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl fmt::Debug for NanoSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NanoSpace({} tau={})", self.describe(), self.tau)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::FoldMode;

    fn pqrs() -> Universe {
        Universe::new(["p", "q", "r", "s"]).unwrap()
    }

    fn blocks(u: &Universe, spec: &[&[&str]]) -> Vec<Subset> {
        spec.iter()
            .map(|names| u.subset_of_names(names.iter().copied()).unwrap())
            .collect()
    }

    /// 𝒰 = {p,q,r,s}, 𝒰/ℛ = {{p},{r},{q,s}}, ℳ = {p,q}.
    fn space_one() -> NanoSpace {
        let u = pqrs();
        let p = Partition::new(&u, blocks(&u, &[&["p"], &["r"], &["q", "s"]])).unwrap();
        let m = u.subset_of_names(["p", "q"]).unwrap();
        NanoSpace::build(p, m).unwrap()
    }

    /// 𝒰 = {p,q,r,s}, 𝒰/ℛ = {{q},{r},{p,s}}, ℳ = {p,r}.
    fn space_two() -> NanoSpace {
        let u = pqrs();
        let p = Partition::new(&u, blocks(&u, &[&["q"], &["r"], &["p", "s"]])).unwrap();
        let m = u.subset_of_names(["p", "r"]).unwrap();
        NanoSpace::build(p, m).unwrap()
    }

    #[test]
    fn partition_validation() {
        let u = pqrs();
        assert!(Partition::new(&u, blocks(&u, &[&["p"], &["r"], &["q", "s"]])).is_ok());
        // single block covering everything is a valid (indiscernible) partition
        assert!(Partition::new(&u, blocks(&u, &[&["p", "q", "r", "s"]])).is_ok());

        let err = Partition::new(&u, blocks(&u, &[&["p", "q"], &["q", "r", "s"]])).unwrap_err();
        assert_eq!(err, PartitionError::OverlappingBlocks(0, 1));

        let err = Partition::new(&u, blocks(&u, &[&["p", "q"]])).unwrap_err();
        assert_eq!(
            err,
            PartitionError::IncompleteCover(u.subset_of_names(["r", "s"]).unwrap())
        );

        let mut bs = blocks(&u, &[&["p", "q", "r", "s"]]);
        bs.push(u.empty_set());
        assert_eq!(Partition::new(&u, bs).unwrap_err(), PartitionError::EmptyBlock(1));
    }

    #[test]
    fn approximations_on_first_sample() {
        let u = pqrs();
        let p = Partition::new(&u, blocks(&u, &[&["p"], &["r"], &["q", "s"]])).unwrap();
        let m = u.subset_of_names(["p", "q"]).unwrap();
        assert_eq!(
            p.lower_approximation(&m).unwrap(),
            u.subset_of_names(["p"]).unwrap()
        );
        assert_eq!(
            p.upper_approximation(&m).unwrap(),
            u.subset_of_names(["p", "q", "s"]).unwrap()
        );
        assert_eq!(p.lower_approximation(&u.full_set()).unwrap(), u.full_set());
        assert_eq!(p.upper_approximation(&u.empty_set()).unwrap(), u.empty_set());
    }

    #[test]
    fn approximations_on_second_sample() {
        let u = pqrs();
        let p = Partition::new(&u, blocks(&u, &[&["q"], &["r"], &["p", "s"]])).unwrap();
        let m = u.subset_of_names(["p", "r"]).unwrap();
        assert_eq!(
            p.lower_approximation(&m).unwrap(),
            u.subset_of_names(["r"]).unwrap()
        );
        assert_eq!(
            p.upper_approximation(&m).unwrap(),
            u.subset_of_names(["p", "r", "s"]).unwrap()
        );
    }

    #[test]
    fn tau_of_first_sample() {
        let s = space_one();
        let u = s.universe().clone();
        let expected_tau = SetFamily::from_subsets(
            &u,
            [
                u.empty_set(),
                u.subset_of_names(["p"]).unwrap(),
                u.subset_of_names(["q", "s"]).unwrap(),
                u.subset_of_names(["p", "q", "s"]).unwrap(),
                u.full_set(),
            ],
        )
        .unwrap();
        assert_eq!(s.tau(), &expected_tau);

        let expected_closed = SetFamily::from_subsets(
            &u,
            [
                u.full_set(),
                u.subset_of_names(["q", "r", "s"]).unwrap(),
                u.subset_of_names(["p", "r"]).unwrap(),
                u.subset_of_names(["r"]).unwrap(),
                u.empty_set(),
            ],
        )
        .unwrap();
        assert_eq!(s.closed_family(), &expected_closed);
        assert_eq!(s.boundary(), &u.subset_of_names(["q", "s"]).unwrap());
    }

    #[test]
    fn tau_of_second_sample() {
        let s = space_two();
        let u = s.universe().clone();
        let expected_tau = SetFamily::from_subsets(
            &u,
            [
                u.empty_set(),
                u.subset_of_names(["r"]).unwrap(),
                u.subset_of_names(["p", "s"]).unwrap(),
                u.subset_of_names(["p", "r", "s"]).unwrap(),
                u.full_set(),
            ],
        )
        .unwrap();
        assert_eq!(s.tau(), &expected_tau);
    }

    #[test]
    fn empty_target_collapses_tau() {
        let u = pqrs();
        let p = Partition::new(&u, blocks(&u, &[&["p"], &["r"], &["q", "s"]])).unwrap();
        let s = NanoSpace::build(p, u.empty_set()).unwrap();
        assert_eq!(s.tau().len(), 2);
        assert!(s.tau().contains(&u.empty_set()));
        assert!(s.tau().contains(&u.full_set()));
    }

    #[test]
    fn block_union_target_gives_three_set_tau() {
        let u = pqrs();
        let p = Partition::new(&u, blocks(&u, &[&["p"], &["r"], &["q", "s"]])).unwrap();
        let m = u.subset_of_names(["p", "r"]).unwrap();
        let s = NanoSpace::build(p, m.clone()).unwrap();
        assert_eq!(s.lower(), &m);
        assert_eq!(s.upper(), &m);
        assert!(s.boundary().is_empty());
        assert_eq!(s.tau().len(), 3);
    }

    #[test]
    fn interior_folds_tau_members() {
        let s = space_one();
        let u = s.universe();
        // tau members inside {p,r}: φ and {p}
        assert_eq!(
            s.interior(&u.subset_of_names(["p", "r"]).unwrap()).unwrap(),
            u.subset_of_names(["p"]).unwrap()
        );
        assert_eq!(s.interior(&u.full_set()).unwrap(), u.full_set());
        // no non-empty open set inside {r}
        assert_eq!(
            s.interior(&u.subset_of_names(["r"]).unwrap()).unwrap(),
            u.empty_set()
        );
    }

    #[test]
    fn closure_folds_closed_members() {
        let s1 = space_one();
        let u = s1.universe();
        // closed members containing {p}: U and {p,r}
        assert_eq!(
            s1.closure(&u.subset_of_names(["p"]).unwrap()).unwrap(),
            u.subset_of_names(["p", "r"]).unwrap()
        );
        assert_eq!(s1.closure(&u.empty_set()).unwrap(), u.empty_set());

        let s2 = space_two();
        let u2 = s2.universe();
        let qr = u2.subset_of_names(["q", "r"]).unwrap();
        assert_eq!(s2.closure(&qr).unwrap(), qr);
    }

    #[test]
    fn interior_result_is_open_and_idempotent() {
        let s = space_one();
        for c in crate::sets::enumerate_subsets(s.universe()).unwrap() {
            let int = s.interior(&c).unwrap();
            assert!(s.tau().contains(&int));
            assert!(int.is_subset_of(&c).unwrap());
            assert_eq!(s.interior(&int).unwrap(), int);
            let cl = s.closure(&c).unwrap();
            assert!(c.is_subset_of(&cl).unwrap());
            assert_eq!(s.closure(&cl).unwrap(), cl);
            // duality: Ncl(C) = (Nint(Cᶜ))ᶜ
            assert_eq!(cl, s.interior(&c.complement()).unwrap().complement());
        }
    }

    #[test]
    fn tau_fold_identities() {
        let s = space_one();
        let u = s.universe();
        assert_eq!(
            s.tau().fold(FoldMode::Union, &u.empty_set()).unwrap(),
            u.full_set()
        );
        assert_eq!(
            s.tau().fold(FoldMode::Intersection, &u.full_set()).unwrap(),
            u.empty_set()
        );
    }

    #[test]
    fn mismatched_target_is_rejected() {
        let u = pqrs();
        let other = pqrs();
        let p = Partition::new(&u, blocks(&u, &[&["p", "q", "r", "s"]])).unwrap();
        assert_eq!(
            NanoSpace::build(p, other.empty_set()).unwrap_err(),
            SetError::UniverseMismatch
        );
    }

    #[test]
    fn describe_is_stable() {
        let s = space_one();
        assert_eq!(s.describe(), "U={p,q,r,s} U/R={{p},{r},{q,s}} M={p,q}");
    }

    #[test]
    fn spaces_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Partition>();
        assert_send_sync::<NanoSpace>();
    }
}
