//! Exact finite-set algebra over a shared universe.
//!
//! A [`Universe`] is an ordered list of at most 64 named elements; a
//! [`Subset`] is a membership mask over one universe. All operators are
//! pure and all values immutable after construction, so everything here
//! can be shared freely across threads.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use thiserror::Error;

/// Hard cap on universe size: one machine word per subset.
pub const UNIVERSE_CAP: usize = 64;

/// Cap on routines that walk all `2^n` subsets.
pub const ENUMERATION_CAP: usize = 24;

/// Errors raised by universe construction and subset algebra.
///
/// Display strings lead with the variant name so callers surfacing them
/// verbatim (e.g. a CLI) produce grep-able diagnostics.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SetError {
    #[error("EmptyUniverse: a universe needs at least one element")]
    EmptyUniverse,
    #[error("DuplicateName: element '{0}' appears more than once")]
    DuplicateName(String),
    #[error("TooLarge: {0} elements exceed the {UNIVERSE_CAP}-element cap")]
    TooLarge(usize),
    #[error("InvalidName: element name '{0}' is empty or contains '{{', '}}', ',' or whitespace")]
    InvalidName(String),
    #[error("UniverseMismatch: operands belong to different universes")]
    UniverseMismatch,
    #[error("EnumerationTooLarge: {0} elements exceed this routine's exhaustive-enumeration cap")]
    EnumerationTooLarge(usize),
    #[error("UnknownElement: '{0}' is not an element of the universe")]
    UnknownElement(String),
}

static NEXT_UNIVERSE_ID: AtomicU64 = AtomicU64::new(0);

struct UniverseInner {
    id: u64,
    names: Vec<String>,
}

/// An ordered finite ground set of named elements (1..=64).
///
/// The i-th name is permanently bound to bit i. Universes have identity:
/// two universes built from the same names are still distinct, and
/// subsets of one cannot be combined with subsets of the other.
#[derive(Clone)]
pub struct Universe {
    inner: Arc<UniverseInner>,
}

impl Universe {
    /// Builds a universe from element names, preserving input order.
    pub fn new<I, S>(names: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(SetError::EmptyUniverse);
        }
        if names.len() > UNIVERSE_CAP {
            return Err(SetError::TooLarge(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.contains(['{', '}', ',']) || name.chars().any(char::is_whitespace) {
                return Err(SetError::InvalidName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(SetError::DuplicateName(name.clone()));
            }
        }
        let id = NEXT_UNIVERSE_ID.fetch_add(1, Ordering::Relaxed);
        Ok(Universe {
            inner: Arc::new(UniverseInner { id, names }),
        })
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.inner.names.len()
    }

    /// Element names in index order.
    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    /// Index of a named element, if present.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }

    /// Name bound to bit `index`. Panics if out of range.
    pub fn name(&self, index: usize) -> &str {
        &self.inner.names[index]
    }

    /// Whether `other` is the same universe (identity, not name equality).
    pub fn same_as(&self, other: &Universe) -> bool {
        self.inner.id == other.inner.id
    }

    /// Mask with every element bit set.
    pub fn full_mask(&self) -> u64 {
        full_mask_for(self.size())
    }

    /// The empty subset φ.
    pub fn empty_set(&self) -> Subset {
        Subset {
            universe: self.clone(),
            mask: 0,
        }
    }

    /// The full subset 𝒰.
    pub fn full_set(&self) -> Subset {
        Subset {
            universe: self.clone(),
            mask: self.full_mask(),
        }
    }

    /// Subset from a raw membership mask.
    ///
    /// Panics if `mask` has a bit set at an index >= the universe size;
    /// masks are an internal addressing scheme, so a stray bit is a
    /// programming error rather than an input error.
    pub fn subset(&self, mask: u64) -> Subset {
        assert!(
            mask & !self.full_mask() == 0,
            "mask {mask:#x} has bits outside a universe of {} elements",
            self.size()
        );
        Subset {
            universe: self.clone(),
            mask,
        }
    }

    /// Subset containing exactly the given named elements.
    pub fn subset_of_names<I, S>(&self, names: I) -> Result<Subset, SetError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut mask = 0u64;
        for name in names {
            let name = name.as_ref();
            let idx = self
                .index_of(name)
                .ok_or_else(|| SetError::UnknownElement(name.to_owned()))?;
            mask |= 1 << idx;
        }
        Ok(self.subset(mask))
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Universe#{}{{", self.inner.id)?;
        for (i, n) in self.inner.names.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn full_mask_for(size: usize) -> u64 {
    if size >= 64 {
        u64::MAX
    } else {
        (1u64 << size) - 1
    }
}

/// Bit-level inclusion test: every bit of `a` is set in `b`.
#[inline]
pub(crate) fn mask_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// A membership mask over one universe.
///
/// Equality requires both the masks and the owning universes to match.
#[derive(Clone)]
pub struct Subset {
    universe: Universe,
    mask: u64,
}

impl Subset {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn cardinality(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == self.universe.full_mask()
    }

    pub fn contains_index(&self, index: usize) -> bool {
        index < self.universe.size() && self.mask & (1 << index) != 0
    }

    fn check_same_universe(&self, other: &Subset) -> Result<(), SetError> {
        if self.universe.same_as(&other.universe) {
            Ok(())
        } else {
            Err(SetError::UniverseMismatch)
        }
    }

    pub fn union(&self, other: &Subset) -> Result<Subset, SetError> {
        self.check_same_universe(other)?;
        Ok(self.universe.subset(self.mask | other.mask))
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset, SetError> {
        self.check_same_universe(other)?;
        Ok(self.universe.subset(self.mask & other.mask))
    }

    pub fn difference(&self, other: &Subset) -> Result<Subset, SetError> {
        self.check_same_universe(other)?;
        Ok(self.universe.subset(self.mask & !other.mask))
    }

    /// The nano complement 𝒰 − self.
    pub fn complement(&self) -> Subset {
        self.universe.subset(self.universe.full_mask() & !self.mask)
    }

    /// Inclusion test; reflexive, and antisymmetric with equality.
    pub fn is_subset_of(&self, other: &Subset) -> Result<bool, SetError> {
        self.check_same_universe(other)?;
        Ok(mask_subset(self.mask, other.mask))
    }

    /// Indices of member elements, ascending.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let universe_size = self.universe.size();
        (0..universe_size).filter(move |i| self.mask & (1 << i) != 0)
    }

    /// Names of member elements, in universe order.
    pub fn element_names(&self) -> impl Iterator<Item = &str> {
        self.indices().map(|i| self.universe.name(i))
    }

    /// Sort key for the canonical order: cardinality, then mask value.
    pub(crate) fn canonical_key(&self) -> (u32, u64) {
        (self.mask.count_ones(), self.mask)
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.universe.same_as(&other.universe) && self.mask == other.mask
    }
}

impl Eq for Subset {}

impl fmt::Display for Subset {
    /// Renders `{a,b}` with elements in universe order, `φ` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "φ");
        }
        write!(f, "{{")?;
        for (i, name) in self.element_names().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{name}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Fold direction for [`SetFamily::fold`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoldMode {
    Union,
    Intersection,
}

/// A deduplicated collection of subsets of one universe, kept in
/// canonical order: ascending cardinality, ties broken by ascending mask.
#[derive(Clone)]
pub struct SetFamily {
    universe: Universe,
    members: Vec<Subset>,
}

impl SetFamily {
    /// Empty family over `universe`.
    pub fn empty(universe: &Universe) -> Self {
        SetFamily {
            universe: universe.clone(),
            members: Vec::new(),
        }
    }

    /// Builds a family, deduplicating and canonicalizing the members.
    pub fn from_subsets<I>(universe: &Universe, subsets: I) -> Result<Self, SetError>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut members: Vec<Subset> = Vec::new();
        for s in subsets {
            if !s.universe().same_as(universe) {
                return Err(SetError::UniverseMismatch);
            }
            members.push(s);
        }
        members.sort_by_key(Subset::canonical_key);
        members.dedup_by_key(|s| s.mask());
        Ok(SetFamily {
            universe: universe.clone(),
            members,
        })
    }

    /// Builds a family from raw masks over `universe`.
    pub fn from_masks<I>(universe: &Universe, masks: I) -> Self
    where
        I: IntoIterator<Item = u64>,
    {
        let members = masks.into_iter().map(|m| universe.subset(m)).collect();
        let mut family = SetFamily {
            universe: universe.clone(),
            members,
        };
        family.members.sort_by_key(Subset::canonical_key);
        family.members.dedup_by_key(|s| s.mask());
        family
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Members in canonical order.
    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.members.iter()
    }

    /// Membership test.
    pub fn contains(&self, subset: &Subset) -> bool {
        subset.universe().same_as(&self.universe)
            && self.members.iter().any(|m| m.mask() == subset.mask())
    }

    /// Member masks in canonical order.
    pub fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter().map(Subset::mask)
    }

    /// Element-wise complements, recanonicalized.
    pub fn complements(&self) -> SetFamily {
        let full = self.universe.full_mask();
        SetFamily::from_masks(&self.universe, self.members.iter().map(|m| full & !m.mask()))
    }

    /// Union or intersection of all members.
    ///
    /// An empty family yields `empty_default`; callers pass φ for unions
    /// and 𝒰 for intersections to get the usual conventions.
    pub fn fold(&self, mode: FoldMode, empty_default: &Subset) -> Result<Subset, SetError> {
        if !empty_default.universe().same_as(&self.universe) {
            return Err(SetError::UniverseMismatch);
        }
        if self.members.is_empty() {
            return Ok(empty_default.clone());
        }
        let mask = match mode {
            FoldMode::Union => self.masks().fold(0, |acc, m| acc | m),
            FoldMode::Intersection => self.masks().fold(self.universe.full_mask(), |acc, m| acc & m),
        };
        Ok(self.universe.subset(mask))
    }
}

impl PartialEq for SetFamily {
    fn eq(&self, other: &Self) -> bool {
        self.universe.same_as(&other.universe)
            && self.members.len() == other.members.len()
            && self
                .members
                .iter()
                .zip(&other.members)
                .all(|(a, b)| a.mask() == b.mask())
    }
}

impl Eq for SetFamily {}

impl fmt::Display for SetFamily {
    /// Renders `{φ,{p},{q,s},...}` in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a Subset;
    type IntoIter = std::slice::Iter<'a, Subset>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// All `2^n` subsets of `u` in ascending mask order.
///
/// Capped at [`ENUMERATION_CAP`] elements to bound the walk.
pub fn enumerate_subsets(u: &Universe) -> Result<SubsetRange, SetError> {
    if u.size() > ENUMERATION_CAP {
        return Err(SetError::EnumerationTooLarge(u.size()));
    }
    Ok(SubsetRange {
        universe: u.clone(),
        next: 0,
        end: 1u64 << u.size(),
    })
}

/// Iterator over every subset of a universe, ascending mask order.
pub struct SubsetRange {
    universe: Universe,
    next: u64,
    end: u64,
}

impl Iterator for SubsetRange {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        if self.next >= self.end {
            return None;
        }
        let s = self.universe.subset(self.next);
        self.next += 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let remaining = (self.end - self.next) as usize;
        (remaining, Some(remaining))
    }
}

impl ExactSizeIterator for SubsetRange {}
