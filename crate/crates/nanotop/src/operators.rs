//! Derived interior and closure operators, one pair per weak-open kind.
//!
//! [`class_interior`] and [`class_closure`] follow the family
//! definitions directly: union of kind-open subsets of 𝒞, intersection
//! of kind-closed supersets of 𝒞. For the NSα kind the same values are
//! also computable by a four-operator chain with no enumeration cap
//! ([`semi_alpha_interior_formula`], [`semi_alpha_closure_formula`]);
//! the verifier asserts the two routes agree pointwise.

use crate::classes::{open_family_masks, ClassKind};
use crate::rough::NanoSpace;
use crate::sets::{mask_subset, SetError, Subset};

fn check_operand(space: &NanoSpace, c: &Subset) -> Result<(), SetError> {
    if c.universe().same_as(space.universe()) {
        Ok(())
    } else {
        Err(SetError::UniverseMismatch)
    }
}

pub(crate) fn class_interior_mask(
    space: &NanoSpace,
    kind: ClassKind,
    c: u64,
) -> Result<u64, SetError> {
    let family = open_family_masks(space, kind)?;
    Ok(family
        .iter()
        .filter(|&&m| mask_subset(m, c))
        .fold(0, |acc, &m| acc | m))
}

pub(crate) fn class_closure_mask(
    space: &NanoSpace,
    kind: ClassKind,
    c: u64,
) -> Result<u64, SetError> {
    let family = open_family_masks(space, kind)?;
    let full = space.full_mask();
    let mut acc = full;
    for &m in family {
        let closed = full & !m;
        if mask_subset(c, closed) {
            acc &= closed;
        }
    }
    Ok(acc)
}

/// Union of all kind-open subsets contained in `c`.
///
/// Every kind is union-closed, so the result is itself kind-open; for
/// `NOpen` this coincides with [`NanoSpace::interior`].
pub fn class_interior(space: &NanoSpace, kind: ClassKind, c: &Subset) -> Result<Subset, SetError> {
    check_operand(space, c)?;
    Ok(space.universe().subset(class_interior_mask(space, kind, c.mask())?))
}

/// Intersection of all kind-closed supersets of `c`.
pub fn class_closure(space: &NanoSpace, kind: ClassKind, c: &Subset) -> Result<Subset, SetError> {
    check_operand(space, c)?;
    Ok(space.universe().subset(class_closure_mask(space, kind, c.mask())?))
}

#[inline]
pub(crate) fn semi_alpha_interior_formula_mask(space: &NanoSpace, c: u64) -> u64 {
    c & space.closure_mask(space.interior_mask(space.closure_mask(space.interior_mask(c))))
}

#[inline]
pub(crate) fn semi_alpha_closure_formula_mask(space: &NanoSpace, c: u64) -> u64 {
    c | space.interior_mask(space.closure_mask(space.interior_mask(space.closure_mask(c))))
}

/// NSα-interior by the chain 𝒞 ∩ Ncl(Nint(Ncl(Nint(𝒞)))).
///
/// Equal to `class_interior(space, NSemiAlpha, c)` on every input, but
/// needs no family enumeration.
pub fn semi_alpha_interior_formula(space: &NanoSpace, c: &Subset) -> Result<Subset, SetError> {
    check_operand(space, c)?;
    Ok(space.universe().subset(semi_alpha_interior_formula_mask(space, c.mask())))
}

/// NSα-closure by the chain 𝒞 ∪ Nint(Ncl(Nint(Ncl(𝒞)))).
pub fn semi_alpha_closure_formula(space: &NanoSpace, c: &Subset) -> Result<Subset, SetError> {
    check_operand(space, c)?;
    Ok(space.universe().subset(semi_alpha_closure_formula_mask(space, c.mask())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{is_closed, is_open};
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
    fn semi_alpha_interior_values_on_second_sample() {
        let s = space_two();
        let nsa = ClassKind::NSemiAlpha;
        assert_eq!(
            class_interior(&s, nsa, &named(&s, &["q"])).unwrap(),
            s.universe().empty_set()
        );
        assert_eq!(
            class_interior(&s, nsa, &named(&s, &["p", "s"])).unwrap(),
            named(&s, &["p", "s"])
        );
        assert_eq!(
            class_interior(&s, nsa, &named(&s, &["q", "r"])).unwrap(),
            named(&s, &["q", "r"])
        );
        assert_eq!(
            class_interior(&s, nsa, &named(&s, &["p", "q", "s"])).unwrap(),
            named(&s, &["p", "q", "s"])
        );
        assert_eq!(
            class_interior(&s, nsa, &named(&s, &["q", "s"])).unwrap(),
            s.universe().empty_set()
        );
        assert_eq!(
            class_interior(&s, nsa, &s.universe().full_set()).unwrap(),
            s.universe().full_set()
        );
    }

    #[test]
    fn semi_alpha_closure_values_on_second_sample() {
        let s = space_two();
        let nsa = ClassKind::NSemiAlpha;
        assert_eq!(
            class_closure(&s, nsa, &named(&s, &["p", "r"])).unwrap(),
            s.universe().full_set()
        );
        assert_eq!(
            class_closure(&s, nsa, &named(&s, &["q", "r"])).unwrap(),
            named(&s, &["q", "r"])
        );
        assert_eq!(
            class_closure(&s, nsa, &named(&s, &["r"])).unwrap(),
            named(&s, &["r"])
        );
        assert_eq!(
            class_closure(&s, nsa, &named(&s, &["p", "s"])).unwrap(),
            named(&s, &["p", "s"])
        );
        assert_eq!(
            class_closure(&s, nsa, &named(&s, &["p", "r", "s"])).unwrap(),
            s.universe().full_set()
        );
        assert_eq!(
            class_closure(&s, nsa, &s.universe().empty_set()).unwrap(),
            s.universe().empty_set()
        );
    }

    #[test]
    fn formula_route_matches_family_route_on_samples() {
        for s in [space_one(), space_two()] {
            for c in enumerate_subsets(s.universe()).unwrap() {
                assert_eq!(
                    semi_alpha_interior_formula(&s, &c).unwrap(),
                    class_interior(&s, ClassKind::NSemiAlpha, &c).unwrap(),
                    "interior routes disagree on {c}"
                );
                assert_eq!(
                    semi_alpha_closure_formula(&s, &c).unwrap(),
                    class_closure(&s, ClassKind::NSemiAlpha, &c).unwrap(),
                    "closure routes disagree on {c}"
                );
            }
        }
    }

    #[test]
    fn formula_examples() {
        let s2 = space_two();
        assert_eq!(
            semi_alpha_interior_formula(&s2, &named(&s2, &["q"])).unwrap(),
            s2.universe().empty_set()
        );
        assert_eq!(
            semi_alpha_closure_formula(&s2, &named(&s2, &["p", "r"])).unwrap(),
            s2.universe().full_set()
        );
        assert_eq!(
            semi_alpha_closure_formula(&s2, &named(&s2, &["q", "r"])).unwrap(),
            named(&s2, &["q", "r"])
        );

        let s1 = space_one();
        // {p,r} is NSα-open, so it is its own NSα-interior
        let pr = named(&s1, &["p", "r"]);
        assert_eq!(semi_alpha_interior_formula(&s1, &pr).unwrap(), pr);
        assert_eq!(
            semi_alpha_interior_formula(&s1, &s1.universe().empty_set()).unwrap(),
            s1.universe().empty_set()
        );
        assert_eq!(
            semi_alpha_closure_formula(&s1, &s1.universe().full_set()).unwrap(),
            s1.universe().full_set()
        );
    }

    #[test]
    fn nano_kind_interior_matches_primitive() {
        for s in [space_one(), space_two()] {
            for c in enumerate_subsets(s.universe()).unwrap() {
                assert_eq!(
                    class_interior(&s, ClassKind::NOpen, &c).unwrap(),
                    s.interior(&c).unwrap()
                );
                assert_eq!(
                    class_closure(&s, ClassKind::NOpen, &c).unwrap(),
                    s.closure(&c).unwrap()
                );
            }
        }
    }

    #[test]
    fn interior_fixes_exactly_the_open_sets() {
        for s in [space_one(), space_two()] {
            for kind in ClassKind::ALL {
                for c in enumerate_subsets(s.universe()).unwrap() {
                    let int = class_interior(&s, kind, &c).unwrap();
                    assert_eq!(int == c, is_open(&s, kind, &c).unwrap());
                    let cl = class_closure(&s, kind, &c).unwrap();
                    assert_eq!(cl == c, is_closed(&s, kind, &c).unwrap());
                }
            }
        }
    }

    #[test]
    fn strictness_witnesses_from_second_sample() {
        let s = space_two();
        let nsa = ClassKind::NSemiAlpha;
        // NSαint(𝒞)∩NSαint(𝒟) ⊄ NSαint(𝒞∩𝒟) for 𝒞={q,r}, 𝒟={p,q,s}
        let c = named(&s, &["q", "r"]);
        let d = named(&s, &["p", "q", "s"]);
        let lhs = class_interior(&s, nsa, &c)
            .unwrap()
            .intersection(&class_interior(&s, nsa, &d).unwrap())
            .unwrap();
        let rhs = class_interior(&s, nsa, &c.intersection(&d).unwrap()).unwrap();
        assert_eq!(lhs, named(&s, &["q"]));
        assert_eq!(rhs, s.universe().empty_set());
        assert!(!lhs.is_subset_of(&rhs).unwrap());

        // NSαcl(𝒞∪𝒟) ⊄ NSαcl(𝒞)∪NSαcl(𝒟) for 𝒞={p,s}, 𝒟={r}
        let c = named(&s, &["p", "s"]);
        let d = named(&s, &["r"]);
        let join = class_closure(&s, nsa, &c.union(&d).unwrap()).unwrap();
        let parts = class_closure(&s, nsa, &c)
            .unwrap()
            .union(&class_closure(&s, nsa, &d).unwrap())
            .unwrap();
        assert_eq!(join, s.universe().full_set());
        assert_eq!(parts, named(&s, &["p", "r", "s"]));
        assert!(!join.is_subset_of(&parts).unwrap());
    }
}
