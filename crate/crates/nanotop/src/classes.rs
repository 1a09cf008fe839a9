//! The five weak-open classes and their membership tests.
//!
//! Each class is decided by a closed-form operator inequality, so a
//! membership test costs O(|τ|) and never enumerates subsets:
//!
//! * N: 𝒞 ∈ τ
//! * Np: 𝒞 ⊆ Nint(Ncl(𝒞))
//! * Ns: 𝒞 ⊆ Ncl(Nint(𝒞))
//! * Nα: 𝒞 ⊆ Nint(Ncl(Nint(𝒞)))
//! * NSα: 𝒞 ⊆ Ncl(Nint(Ncl(Nint(𝒞))))
//!
//! The existential characterization of NSα (some Nα-open 𝒫 with
//! 𝒫 ⊆ 𝒞 ⊆ Ncl(𝒫)) lives in [`semi_alpha_witness`] for cross-validation
//! against the closed form.

use std::fmt;

use crate::rough::NanoSpace;
use crate::sets::{mask_subset, SetError, SetFamily, Subset, ENUMERATION_CAP};

pub(crate) const CLASS_COUNT: usize = 5;

/// The five weak-open kinds. Each has a closed dual by complementation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    NOpen = 0,
    NPre = 1,
    NSemi = 2,
    NAlpha = 3,
    NSemiAlpha = 4,
}

impl ClassKind {
    pub const ALL: [ClassKind; CLASS_COUNT] = [
        ClassKind::NOpen,
        ClassKind::NPre,
        ClassKind::NSemi,
        ClassKind::NAlpha,
        ClassKind::NSemiAlpha,
    ];

    /// Short ASCII token, used for machine-facing output.
    pub fn token(self) -> &'static str {
        match self {
            ClassKind::NOpen => "n",
            ClassKind::NPre => "np",
            ClassKind::NSemi => "ns",
            ClassKind::NAlpha => "na",
            ClassKind::NSemiAlpha => "nsa",
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            ClassKind::NOpen => "N",
            ClassKind::NPre => "Np",
            ClassKind::NSemi => "Ns",
            ClassKind::NAlpha => "Nα",
            ClassKind::NSemiAlpha => "NSα",
        };
        f.write_str(label)
    }
}

/// Which side of a class family: the open sets or their complements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Open,
    Closed,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Open => "open",
            Side::Closed => "closed",
        })
    }
}

#[inline]
pub(crate) fn is_open_mask(space: &NanoSpace, kind: ClassKind, c: u64) -> bool {
    match kind {
        ClassKind::NOpen => space.tau_masks().contains(&c),
        ClassKind::NPre => mask_subset(c, space.interior_mask(space.closure_mask(c))),
        ClassKind::NSemi => mask_subset(c, space.closure_mask(space.interior_mask(c))),
        ClassKind::NAlpha => mask_subset(
            c,
            space.interior_mask(space.closure_mask(space.interior_mask(c))),
        ),
        ClassKind::NSemiAlpha => mask_subset(
            c,
            space.closure_mask(
                space.interior_mask(space.closure_mask(space.interior_mask(c))),
            ),
        ),
    }
}

fn check_operand(space: &NanoSpace, c: &Subset) -> Result<(), SetError> {
    if c.universe().same_as(space.universe()) {
        Ok(())
    } else {
        Err(SetError::UniverseMismatch)
    }
}

/// Whether `c` is kind-open in `space`.
pub fn is_open(space: &NanoSpace, kind: ClassKind, c: &Subset) -> Result<bool, SetError> {
    check_operand(space, c)?;
    Ok(is_open_mask(space, kind, c.mask()))
}

/// Whether `c` is kind-closed in `space`, i.e. its complement is kind-open.
pub fn is_closed(space: &NanoSpace, kind: ClassKind, c: &Subset) -> Result<bool, SetError> {
    check_operand(space, c)?;
    let result = is_open_mask(space, kind, space.full_mask() & !c.mask());
    if kind == ClassKind::NSemiAlpha {
        // Cross-check against the direct closed-set inequality
        // Nint(Ncl(Nint(Ncl(𝒞)))) ⊆ 𝒞.
        let chain = space.interior_mask(
            space.closure_mask(space.interior_mask(space.closure_mask(c.mask()))),
        );
        debug_assert_eq!(result, mask_subset(chain, c.mask()));
    }
    Ok(result)
}

/// Cached masks of all kind-open subsets, ascending mask order.
///
/// Computed once per (space, kind) by scanning all `2^n` subsets, hence
/// the enumeration cap.
pub(crate) fn open_family_masks(
    space: &NanoSpace,
    kind: ClassKind,
) -> Result<&[u64], SetError> {
    let n = space.universe().size();
    if n > ENUMERATION_CAP {
        return Err(SetError::EnumerationTooLarge(n));
    }
    let masks = space.class_family_slot(kind as usize).get_or_init(|| {
        (0..=space.full_mask())
            .filter(|&m| is_open_mask(space, kind, m))
            .collect()
    });
    Ok(masks)
}

/// The whole family of kind-open (or kind-closed) subsets, canonical order.
///
/// The closed side equals the element-wise complements of the open side.
pub fn enumerate_family(
    space: &NanoSpace,
    kind: ClassKind,
    side: Side,
) -> Result<SetFamily, SetError> {
    let masks = open_family_masks(space, kind)?;
    let universe = space.universe();
    let family = match side {
        Side::Open => SetFamily::from_masks(universe, masks.iter().copied()),
        Side::Closed => {
            let full = space.full_mask();
            SetFamily::from_masks(universe, masks.iter().map(|&m| full & !m))
        }
    };
    Ok(family)
}

pub(crate) fn semi_alpha_witness_mask(space: &NanoSpace, c: u64) -> Result<Option<u64>, SetError> {
    let alpha = open_family_masks(space, ClassKind::NAlpha)?;
    // smallest in canonical order: cardinality, then mask
    let mut best: Option<u64> = None;
    for &p in alpha {
        if mask_subset(p, c) && mask_subset(c, space.closure_mask(p)) {
            let better = match best {
                None => true,
                Some(b) => (p.count_ones(), p) < (b.count_ones(), b),
            };
            if better {
                best = Some(p);
            }
        }
    }
    Ok(best)
}

/// An Nα-open 𝒫 with 𝒫 ⊆ 𝒞 ⊆ Ncl(𝒫), if one exists (the smallest in
/// canonical order). Existence agrees exactly with
/// `is_open(space, NSemiAlpha, c)`.
pub fn semi_alpha_witness(space: &NanoSpace, c: &Subset) -> Result<Option<Subset>, SetError> {
    check_operand(space, c)?;
    Ok(semi_alpha_witness_mask(space, c.mask())?.map(|m| space.universe().subset(m)))
}

/// Whether Nint(Ncl(𝒞)) = φ.
pub fn is_nowhere_dense(space: &NanoSpace, c: &Subset) -> Result<bool, SetError> {
    check_operand(space, c)?;
    Ok(space.interior_mask(space.closure_mask(c.mask())) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rough::Partition;
    use crate::sets::{enumerate_subsets, Universe};

    fn build(blocks: &[&[&str]], target: &[&str]) -> NanoSpace {
        let u = Universe::new(["p", "q", "r", "s"]).unwrap();
        let bs = blocks
            .iter()
            .map(|b| u.subset_of_names(b.iter().copied()).unwrap())
            .collect();
        let p = Partition::new(&u, bs).unwrap();
        let m = u.subset_of_names(target.iter().copied()).unwrap();
        NanoSpace::build(p, m).unwrap()
    }

    fn space_one() -> NanoSpace {
        build(&[&["p"], &["r"], &["q", "s"]], &["p", "q"])
    }

    fn space_two() -> NanoSpace {
        build(&[&["q"], &["r"], &["p", "s"]], &["p", "r"])
    }

    fn named(s: &NanoSpace, names: &[&str]) -> Subset {
        s.universe().subset_of_names(names.iter().copied()).unwrap()
    }

    #[test]
    fn pr_is_semi_alpha_open_but_not_alpha_or_nano_open() {
        let s = space_one();
        let pr = named(&s, &["p", "r"]);
        assert!(is_open(&s, ClassKind::NSemiAlpha, &pr).unwrap());
        assert!(!is_open(&s, ClassKind::NAlpha, &pr).unwrap());
        assert!(!is_open(&s, ClassKind::NOpen, &pr).unwrap());
        assert!(!is_open(&s, ClassKind::NPre, &pr).unwrap());
    }

    #[test]
    fn prs_is_pre_open_but_not_semi_alpha_open() {
        let s = space_one();
        let prs = named(&s, &["p", "r", "s"]);
        assert!(is_open(&s, ClassKind::NPre, &prs).unwrap());
        assert!(!is_open(&s, ClassKind::NSemiAlpha, &prs).unwrap());
    }

    #[test]
    fn qs_is_semi_alpha_closed_but_not_alpha_or_nano_closed() {
        let s = space_one();
        let qs = named(&s, &["q", "s"]);
        assert!(is_closed(&s, ClassKind::NSemiAlpha, &qs).unwrap());
        assert!(!is_closed(&s, ClassKind::NAlpha, &qs).unwrap());
        assert!(!is_closed(&s, ClassKind::NOpen, &qs).unwrap());
    }

    #[test]
    fn ps_is_semi_alpha_closed_in_second_sample() {
        let s = space_two();
        let ps = named(&s, &["p", "s"]);
        assert!(is_closed(&s, ClassKind::NSemiAlpha, &ps).unwrap());
    }

    #[test]
    fn empty_and_full_belong_to_every_class() {
        for s in [space_one(), space_two()] {
            let phi = s.universe().empty_set();
            let full = s.universe().full_set();
            for kind in ClassKind::ALL {
                assert!(is_open(&s, kind, &phi).unwrap());
                assert!(is_open(&s, kind, &full).unwrap());
                assert!(is_closed(&s, kind, &phi).unwrap());
                assert!(is_closed(&s, kind, &full).unwrap());
            }
        }
    }

    #[test]
    fn alpha_family_of_first_sample_equals_tau() {
        let s = space_one();
        let fam = enumerate_family(&s, ClassKind::NAlpha, Side::Open).unwrap();
        assert_eq!(&fam, s.tau());
        let famc = enumerate_family(&s, ClassKind::NAlpha, Side::Closed).unwrap();
        assert_eq!(&famc, s.closed_family());
    }

    #[test]
    fn semi_alpha_family_of_first_sample() {
        let s = space_one();
        let u = s.universe();
        let fam = enumerate_family(&s, ClassKind::NSemiAlpha, Side::Open).unwrap();
        let expected = SetFamily::from_subsets(
            u,
            s.tau()
                .iter()
                .cloned()
                .chain([named(&s, &["p", "r"]), named(&s, &["q", "r", "s"])]),
        )
        .unwrap();
        assert_eq!(fam, expected);
        assert_eq!(fam.len(), 7);

        // closed side: NαC ∪ {{q,s},{p}}
        let famc = enumerate_family(&s, ClassKind::NSemiAlpha, Side::Closed).unwrap();
        let expected_closed = SetFamily::from_subsets(
            u,
            s.closed_family()
                .iter()
                .cloned()
                .chain([named(&s, &["q", "s"]), named(&s, &["p"])]),
        )
        .unwrap();
        assert_eq!(famc, expected_closed);
    }

    #[test]
    fn semi_alpha_families_of_second_sample() {
        let s = space_two();
        let u = s.universe();
        let fam = enumerate_family(&s, ClassKind::NSemiAlpha, Side::Open).unwrap();
        let expected = SetFamily::from_subsets(
            u,
            s.tau()
                .iter()
                .cloned()
                .chain([named(&s, &["q", "r"]), named(&s, &["p", "q", "s"])]),
        )
        .unwrap();
        assert_eq!(fam, expected);

        let famc = enumerate_family(&s, ClassKind::NSemiAlpha, Side::Closed).unwrap();
        let expected_closed = SetFamily::from_subsets(
            u,
            s.closed_family()
                .iter()
                .cloned()
                .chain([named(&s, &["p", "s"]), named(&s, &["r"])]),
        )
        .unwrap();
        assert_eq!(famc, expected_closed);
    }

    #[test]
    fn closed_family_is_elementwise_complement_of_open_family() {
        for s in [space_one(), space_two()] {
            for kind in ClassKind::ALL {
                let open = enumerate_family(&s, kind, Side::Open).unwrap();
                let closed = enumerate_family(&s, kind, Side::Closed).unwrap();
                assert_eq!(open.complements(), closed);
            }
        }
    }

    #[test]
    fn witness_for_pr_is_p() {
        let s = space_one();
        let pr = named(&s, &["p", "r"]);
        // 𝒫 = {p} works: {p} ⊆ {p,r} ⊆ Ncl({p}) = {p,r}
        assert_eq!(
            semi_alpha_witness(&s, &pr).unwrap(),
            Some(named(&s, &["p"]))
        );
    }

    #[test]
    fn no_witness_for_prs() {
        let s = space_one();
        let prs = named(&s, &["p", "r", "s"]);
        assert_eq!(semi_alpha_witness(&s, &prs).unwrap(), None);
    }

    #[test]
    fn empty_set_witnesses_itself() {
        let s = space_one();
        let phi = s.universe().empty_set();
        assert_eq!(semi_alpha_witness(&s, &phi).unwrap(), Some(phi));
    }

    #[test]
    fn witness_existence_matches_the_closed_form() {
        for s in [space_one(), space_two()] {
            for c in enumerate_subsets(s.universe()).unwrap() {
                let by_witness = semi_alpha_witness(&s, &c).unwrap().is_some();
                let by_formula = is_open(&s, ClassKind::NSemiAlpha, &c).unwrap();
                assert_eq!(by_witness, by_formula, "disagree on {c}");
            }
        }
    }

    #[test]
    fn nowhere_dense_examples() {
        let s = space_one();
        // Ncl({r}) = {r}, Nint({r}) = φ
        assert!(is_nowhere_dense(&s, &named(&s, &["r"])).unwrap());
        // Nint(Ncl({p})) = Nint({p,r}) = {p}
        assert!(!is_nowhere_dense(&s, &named(&s, &["p"])).unwrap());
        assert!(is_nowhere_dense(&s, &s.universe().empty_set()).unwrap());
    }

    #[test]
    fn mismatched_operand_is_rejected() {
        let s = space_one();
        let other = Universe::new(["p", "q", "r", "s"]).unwrap();
        let c = other.empty_set();
        assert_eq!(
            is_open(&s, ClassKind::NOpen, &c).unwrap_err(),
            SetError::UniverseMismatch
        );
    }
}
