//! Exhaustive checking of the catalogued laws against a space,
//! enumeration of all small spaces, and counterexample mining.
//!
//! Every checker quantifies over all `2^n` subsets (or subset pairs
//! where a law relates two sets). Closure of a family under arbitrary
//! unions or intersections reduces to closure under binary ones, since
//! every family here is finite; the pair checkers rely on that
//! reduction and additionally fold the whole family once as a smoke
//! test.
//!
//! Universally quantified laws report pass/fail. Laws that assert the
//! *existence* of a separating example on particular spaces (R3.4's
//! converse, R3.6's independence, R3.16's intersection escape) are
//! modeled as searches reporting witness-found / witness-not-found
//! instead; a missing witness on some space is not a failure. R3.8 is
//! conditional: its conclusions are checked only on spaces satisfying
//! its hypotheses, otherwise the verdict is vacuous and the hypothesis
//! truth values are reported in the detail field.

use std::fmt;

use crate::classes::{is_open_mask, open_family_masks, ClassKind, Side};
use crate::operators::{
    class_closure_mask, class_interior_mask, semi_alpha_closure_formula_mask,
    semi_alpha_interior_formula_mask,
};
use crate::partitions::partitions_of;
use crate::rough::NanoSpace;
use crate::sets::{mask_subset, SetError, Subset, Universe};

/// Cap for the per-space quantified checks.
pub const THEOREM_CAP: usize = 16;

/// Cap for whole-space enumeration (Bell(10) = 115,975 partitions).
pub const SPACE_CAP: usize = 10;

/// One identifier per catalogued law, in catalogue order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    P2_4,
    P2_5,
    L2_6,
    R3_4,
    R3_6Indep,
    R3_8,
    R3_9,
    T3_10,
    T3_11,
    C3_12,
    P3_13,
    T3_14,
    C3_15,
    R3_16Strict,
    P4_3,
    P4_4,
    T4_5,
    T4_7,
    P4_9,
    T4_10,
    C4_11,
    XNsEqNsa,
}

impl TheoremId {
    pub const ALL: [TheoremId; 22] = [
        TheoremId::P2_4,
        TheoremId::P2_5,
        TheoremId::L2_6,
        TheoremId::R3_4,
        TheoremId::R3_6Indep,
        TheoremId::R3_8,
        TheoremId::R3_9,
        TheoremId::T3_10,
        TheoremId::T3_11,
        TheoremId::C3_12,
        TheoremId::P3_13,
        TheoremId::T3_14,
        TheoremId::C3_15,
        TheoremId::R3_16Strict,
        TheoremId::P4_3,
        TheoremId::P4_4,
        TheoremId::T4_5,
        TheoremId::T4_7,
        TheoremId::P4_9,
        TheoremId::T4_10,
        TheoremId::C4_11,
        TheoremId::XNsEqNsa,
    ];

    /// Stable token used in reports.
    pub fn token(self) -> &'static str {
        match self {
            TheoremId::P2_4 => "P2.4",
            TheoremId::P2_5 => "P2.5",
            TheoremId::L2_6 => "L2.6",
            TheoremId::R3_4 => "R3.4",
            TheoremId::R3_6Indep => "R3.6-indep",
            TheoremId::R3_8 => "R3.8",
            TheoremId::R3_9 => "R3.9",
            TheoremId::T3_10 => "T3.10",
            TheoremId::T3_11 => "T3.11",
            TheoremId::C3_12 => "C3.12",
            TheoremId::P3_13 => "P3.13",
            TheoremId::T3_14 => "T3.14",
            TheoremId::C3_15 => "C3.15",
            TheoremId::R3_16Strict => "R3.16-strict",
            TheoremId::P4_3 => "P4.3",
            TheoremId::P4_4 => "P4.4",
            TheoremId::T4_5 => "T4.5",
            TheoremId::T4_7 => "T4.7",
            TheoremId::P4_9 => "P4.9",
            TheoremId::T4_10 => "T4.10",
            TheoremId::C4_11 => "C4.11",
            TheoremId::XNsEqNsa => "x-ns-eq-nsa",
        }
    }

    /// Whether this id is a witness search rather than a universal law.
    pub fn is_witness_style(self) -> bool {
        matches!(
            self,
            TheoremId::R3_4 | TheoremId::R3_6Indep | TheoremId::R3_16Strict
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Outcome of one check on one space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictStatus {
    Pass,
    Fail,
    Vacuous,
    WitnessFound,
    WitnessNotFound,
}

impl VerdictStatus {
    pub fn is_failure(self) -> bool {
        self == VerdictStatus::Fail
    }

    pub fn token(self) -> &'static str {
        match self {
            VerdictStatus::Pass => "pass",
            VerdictStatus::Fail => "fail",
            VerdictStatus::Vacuous => "vacuous",
            VerdictStatus::WitnessFound => "witness-found",
            VerdictStatus::WitnessNotFound => "witness-not-found",
        }
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Outcome of one law check on one space, with witnesses on failure
/// (or on a successful search).
#[derive(Debug, Clone)]
pub struct VerdictReport {
    pub theorem: TheoremId,
    /// Canonical space descriptor (partition blocks and target).
    pub space: String,
    pub status: VerdictStatus,
    /// On `Fail`: the subset tuple violating the law. On
    /// `WitnessFound`: the subsets demonstrating the searched
    /// phenomenon. Empty otherwise.
    pub witnesses: Vec<Subset>,
    /// Number of subset tuples examined.
    pub checked_count: u64,
    /// Hypothesis truth values, strict-inequality notes, and similar.
    pub detail: Option<String>,
}

struct Ctx<'a> {
    space: &'a NanoSpace,
    full: u64,
}

impl<'a> Ctx<'a> {
    fn new(space: &'a NanoSpace) -> Self {
        Ctx {
            space,
            full: space.full_mask(),
        }
    }

    fn masks(&self) -> std::ops::RangeInclusive<u64> {
        0..=self.full
    }

    #[inline]
    fn int(&self, c: u64) -> u64 {
        self.space.interior_mask(c)
    }

    #[inline]
    fn cl(&self, c: u64) -> u64 {
        self.space.closure_mask(c)
    }

    #[inline]
    fn open(&self, kind: ClassKind, c: u64) -> bool {
        is_open_mask(self.space, kind, c)
    }

    #[inline]
    fn closed(&self, kind: ClassKind, c: u64) -> bool {
        is_open_mask(self.space, kind, self.full & !c)
    }

    fn fam(&self, kind: ClassKind) -> &'a [u64] {
        open_family_masks(self.space, kind).expect("size checked against THEOREM_CAP")
    }

    fn cint(&self, kind: ClassKind, c: u64) -> u64 {
        class_interior_mask(self.space, kind, c).expect("size checked against THEOREM_CAP")
    }

    fn ccl(&self, kind: ClassKind, c: u64) -> u64 {
        class_closure_mask(self.space, kind, c).expect("size checked against THEOREM_CAP")
    }

    fn sub(&self, mask: u64) -> Subset {
        self.space.universe().subset(mask)
    }

    fn subs(&self, masks: &[u64]) -> Vec<Subset> {
        masks.iter().map(|&m| self.sub(m)).collect()
    }

    fn report(
        &self,
        theorem: TheoremId,
        status: VerdictStatus,
        witnesses: Vec<Subset>,
        checked_count: u64,
        detail: Option<String>,
    ) -> VerdictReport {
        VerdictReport {
            theorem,
            space: self.space.describe(),
            status,
            witnesses,
            checked_count,
            detail,
        }
    }

    fn fail(&self, theorem: TheoremId, witnesses: &[u64], checked: u64, note: &str) -> VerdictReport {
        self.report(
            theorem,
            VerdictStatus::Fail,
            self.subs(witnesses),
            checked,
            Some(note.to_owned()),
        )
    }

    fn pass(&self, theorem: TheoremId, checked: u64) -> VerdictReport {
        self.report(theorem, VerdictStatus::Pass, Vec::new(), checked, None)
    }
}

/// Runs one checker against a space.
pub fn check_theorem(space: &NanoSpace, id: TheoremId) -> Result<VerdictReport, SetError> {
    let n = space.universe().size();
    if n > THEOREM_CAP {
        return Err(SetError::EnumerationTooLarge(n));
    }
    let ctx = Ctx::new(space);
    let report = match id {
        TheoremId::P2_4 => check_p2_4(&ctx),
        TheoremId::P2_5 => check_p2_5(&ctx),
        TheoremId::L2_6 => check_l2_6(&ctx),
        TheoremId::R3_4 => check_r3_4(&ctx),
        TheoremId::R3_6Indep => check_r3_6(&ctx),
        TheoremId::R3_8 => check_r3_8(&ctx),
        TheoremId::R3_9 => check_r3_9(&ctx),
        TheoremId::T3_10 => check_t3_10(&ctx),
        TheoremId::T3_11 => check_t3_11(&ctx),
        TheoremId::C3_12 => check_c3_12(&ctx),
        TheoremId::P3_13 => check_union_closure(&ctx, TheoremId::P3_13, ClassKind::NAlpha),
        TheoremId::T3_14 => check_union_closure(&ctx, TheoremId::T3_14, ClassKind::NSemiAlpha),
        TheoremId::C3_15 => check_c3_15(&ctx),
        TheoremId::R3_16Strict => check_r3_16(&ctx),
        TheoremId::P4_3 => check_p4_3(&ctx),
        TheoremId::P4_4 => check_p4_4(&ctx),
        TheoremId::T4_5 => check_t4_5(&ctx),
        TheoremId::T4_7 => check_t4_7(&ctx),
        TheoremId::P4_9 => check_p4_9(&ctx),
        TheoremId::T4_10 => check_t4_10(&ctx),
        TheoremId::C4_11 => check_c4_11(&ctx),
        TheoremId::XNsEqNsa => check_x_ns_eq_nsa(&ctx),
    };
    Ok(report)
}

/// Runs every checker against a space, in catalogue order.
pub fn check_all(space: &NanoSpace) -> Result<Vec<VerdictReport>, SetError> {
    TheoremId::ALL
        .iter()
        .map(|&id| check_theorem(space, id))
        .collect()
}

/// Implications N ⇒ Nα, Nα ⇒ Ns, Nα ⇒ Np, and their closed duals.
fn check_p2_4(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::P2_4;
    let mut checked = 0;
    for c in ctx.masks() {
        checked += 1;
        let ok = (!ctx.open(ClassKind::NOpen, c) || ctx.open(ClassKind::NAlpha, c))
            && (!ctx.open(ClassKind::NAlpha, c) || ctx.open(ClassKind::NSemi, c))
            && (!ctx.open(ClassKind::NAlpha, c) || ctx.open(ClassKind::NPre, c))
            && (!ctx.closed(ClassKind::NOpen, c) || ctx.closed(ClassKind::NAlpha, c))
            && (!ctx.closed(ClassKind::NAlpha, c) || ctx.closed(ClassKind::NSemi, c))
            && (!ctx.closed(ClassKind::NAlpha, c) || ctx.closed(ClassKind::NPre, c));
        if !ok {
            return ctx.fail(id, &[c], checked, "hierarchy implication violated");
        }
    }
    ctx.pass(id, checked)
}

/// Nα ⟺ Ns ∧ Np.
fn check_p2_5(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::P2_5;
    let mut checked = 0;
    for c in ctx.masks() {
        checked += 1;
        let alpha = ctx.open(ClassKind::NAlpha, c);
        let both = ctx.open(ClassKind::NSemi, c) && ctx.open(ClassKind::NPre, c);
        if alpha != both {
            return ctx.fail(id, &[c], checked, "Nα and Ns∧Np disagree");
        }
    }
    ctx.pass(id, checked)
}

/// (i) Nscl(𝒦) = Nint(Ncl(𝒦)) for N-open 𝒦; (ii) Nsint(Ncl(𝒞)) = Ncl(Nint(Ncl(𝒞))).
fn check_l2_6(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::L2_6;
    let mut checked = 0;
    for &k in ctx.space.tau_masks() {
        checked += 1;
        if ctx.ccl(ClassKind::NSemi, k) != ctx.int(ctx.cl(k)) {
            return ctx.fail(id, &[k], checked, "Nscl(K) ≠ Nint(Ncl(K)) for open K");
        }
    }
    for c in ctx.masks() {
        checked += 1;
        let lhs = ctx.cint(ClassKind::NSemi, ctx.cl(c));
        let rhs = ctx.cl(ctx.int(ctx.cl(c)));
        if lhs != rhs {
            return ctx.fail(id, &[c], checked, "Nsint(Ncl(C)) ≠ Ncl(Nint(Ncl(C)))");
        }
    }
    ctx.pass(id, checked)
}

/// Forward: N ⇒ NSα and Nα ⇒ NSα (open and closed). Search: subsets
/// showing the converses fail.
fn check_r3_4(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::R3_4;
    let mut checked = 0;
    let mut not_nano: Option<u64> = None;
    let mut not_alpha: Option<u64> = None;
    for c in ctx.masks() {
        checked += 1;
        let nsa_open = ctx.open(ClassKind::NSemiAlpha, c);
        let ok = (!ctx.open(ClassKind::NOpen, c) || nsa_open)
            && (!ctx.open(ClassKind::NAlpha, c) || nsa_open)
            && (!ctx.closed(ClassKind::NOpen, c) || ctx.closed(ClassKind::NSemiAlpha, c))
            && (!ctx.closed(ClassKind::NAlpha, c) || ctx.closed(ClassKind::NSemiAlpha, c));
        if !ok {
            return ctx.fail(id, &[c], checked, "N/Nα ⇒ NSα violated");
        }
        if nsa_open {
            if not_nano.is_none() && !ctx.open(ClassKind::NOpen, c) {
                not_nano = Some(c);
            }
            if not_alpha.is_none() && !ctx.open(ClassKind::NAlpha, c) {
                not_alpha = Some(c);
            }
        }
    }
    match (not_nano, not_alpha) {
        (Some(a), Some(b)) => {
            let mut witnesses = vec![a];
            if b != a {
                witnesses.push(b);
            }
            let detail = format!(
                "converse witnesses: {} is NSα-open but not N-open; {} is NSα-open but not Nα-open",
                ctx.sub(a),
                ctx.sub(b)
            );
            ctx.report(
                id,
                VerdictStatus::WitnessFound,
                ctx.subs(&witnesses),
                checked,
                Some(detail),
            )
        }
        _ => ctx.report(
            id,
            VerdictStatus::WitnessNotFound,
            Vec::new(),
            checked,
            Some("no NSα-open set escapes N or Nα on this space".to_owned()),
        ),
    }
}

/// Independence of NSα and Np: a set in each class outside the other.
fn check_r3_6(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::R3_6Indep;
    let mut checked = 0;
    let mut nsa_not_pre: Option<u64> = None;
    let mut pre_not_nsa: Option<u64> = None;
    for c in ctx.masks() {
        checked += 1;
        let nsa = ctx.open(ClassKind::NSemiAlpha, c);
        let pre = ctx.open(ClassKind::NPre, c);
        if nsa_not_pre.is_none() && nsa && !pre {
            nsa_not_pre = Some(c);
        }
        if pre_not_nsa.is_none() && pre && !nsa {
            pre_not_nsa = Some(c);
        }
    }
    match (nsa_not_pre, pre_not_nsa) {
        (Some(a), Some(b)) => {
            let detail = format!(
                "{} is NSα-open but not Np-open; {} is Np-open but not NSα-open",
                ctx.sub(a),
                ctx.sub(b)
            );
            ctx.report(
                id,
                VerdictStatus::WitnessFound,
                ctx.subs(&[a, b]),
                checked,
                Some(detail),
            )
        }
        _ => ctx.report(
            id,
            VerdictStatus::WitnessNotFound,
            Vec::new(),
            checked,
            Some("classes are nested on this space".to_owned()),
        ),
    }
}

/// Conditional: under the stated hypotheses every NSα-open set is
/// N-open (i) / Nα-open (ii). Vacuous when the shared hypothesis fails.
fn check_r3_8(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::R3_8;
    let mut checked = 0;
    let closed_masks = ctx.space.closed_masks();
    let all_open_closed = ctx
        .space
        .tau_masks()
        .iter()
        .all(|k| closed_masks.contains(k));
    checked += ctx.space.tau_masks().len() as u64;

    let mut nowhere_dense_closed = true;
    for c in ctx.masks() {
        checked += 1;
        if ctx.int(ctx.cl(c)) == 0 && !closed_masks.contains(&c) {
            nowhere_dense_closed = false;
        }
    }
    let detail = format!(
        "hypotheses: every N-open is N-closed = {all_open_closed}, \
         every nowhere-dense is N-closed = {nowhere_dense_closed}"
    );

    if !all_open_closed {
        return ctx.report(id, VerdictStatus::Vacuous, Vec::new(), checked, Some(detail));
    }
    // (ii) needs only the first hypothesis
    for c in ctx.masks() {
        checked += 1;
        if ctx.open(ClassKind::NSemiAlpha, c) && !ctx.open(ClassKind::NAlpha, c) {
            return ctx.fail(id, &[c], checked, "NSα-open set that is not Nα-open under the hypothesis");
        }
    }
    // (i) needs both
    if nowhere_dense_closed {
        for c in ctx.masks() {
            checked += 1;
            if ctx.open(ClassKind::NSemiAlpha, c) && !ctx.open(ClassKind::NOpen, c) {
                return ctx.fail(id, &[c], checked, "NSα-open set that is not N-open under the hypotheses");
            }
        }
    }
    ctx.report(id, VerdictStatus::Pass, Vec::new(), checked, Some(detail))
}

/// (i) every set that is both Ns-open and Np-open is NSα-open;
/// (ii) when every N-open set is N-closed, NSα-open ⇒ Np-open.
fn check_r3_9(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::R3_9;
    let closed_masks = ctx.space.closed_masks();
    let all_open_closed = ctx
        .space
        .tau_masks()
        .iter()
        .all(|k| closed_masks.contains(k));
    let mut checked = 0;
    for c in ctx.masks() {
        checked += 1;
        if ctx.open(ClassKind::NSemi, c)
            && ctx.open(ClassKind::NPre, c)
            && !ctx.open(ClassKind::NSemiAlpha, c)
        {
            return ctx.fail(id, &[c], checked, "Ns∧Np-open set that is not NSα-open");
        }
        if all_open_closed
            && ctx.open(ClassKind::NSemiAlpha, c)
            && !ctx.open(ClassKind::NPre, c)
        {
            return ctx.fail(id, &[c], checked, "NSα-open set that is not Np-open under the hypothesis");
        }
    }
    ctx.report(
        id,
        VerdictStatus::Pass,
        Vec::new(),
        checked,
        Some(format!(
            "conjunction reading checked; every N-open is N-closed = {all_open_closed}"
        )),
    )
}

/// Nα-openness ⟺ some 𝒦 ∈ τ with 𝒦 ⊆ 𝒞 ⊆ Nint(Ncl(𝒦)); when Nα-open,
/// 𝒦 = Nint(𝒞) must itself work.
fn check_t3_10(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::T3_10;
    let mut checked = 0;
    for c in ctx.masks() {
        checked += 1;
        let alpha = ctx.open(ClassKind::NAlpha, c);
        let exists = ctx
            .space
            .tau_masks()
            .iter()
            .any(|&k| mask_subset(k, c) && mask_subset(c, ctx.int(ctx.cl(k))));
        if alpha != exists {
            return ctx.fail(id, &[c], checked, "existential and inequality forms disagree");
        }
        if alpha {
            let k = ctx.int(c);
            if !mask_subset(c, ctx.int(ctx.cl(k))) {
                return ctx.fail(id, &[c], checked, "K = Nint(C) fails the sandwich");
            }
        }
    }
    ctx.pass(id, checked)
}

/// Three characterizations of NSα-openness agree pointwise.
fn check_t3_11(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::T3_11;
    let alpha_family = ctx.fam(ClassKind::NAlpha);
    let mut checked = 0;
    for c in ctx.masks() {
        checked += 1;
        let by_witness = alpha_family
            .iter()
            .any(|&p| mask_subset(p, c) && mask_subset(c, ctx.cl(p)));
        let by_tau = ctx
            .space
            .tau_masks()
            .iter()
            .any(|&k| mask_subset(k, c) && mask_subset(c, ctx.cl(ctx.int(ctx.cl(k)))));
        let by_formula = mask_subset(c, ctx.cl(ctx.int(ctx.cl(ctx.int(c)))));
        if by_witness != by_tau || by_tau != by_formula {
            return ctx.fail(
                id,
                &[c],
                checked,
                "characterizations (i)/(ii)/(iii) disagree",
            );
        }
    }
    ctx.pass(id, checked)
}

/// Three characterizations of NSα-closedness agree pointwise.
fn check_c3_12(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::C3_12;
    let mut checked = 0;
    for c in ctx.masks() {
        checked += 1;
        let by_complement = ctx.closed(ClassKind::NSemiAlpha, c);
        let by_closed_set = ctx
            .space
            .closed_masks()
            .iter()
            .any(|&f| mask_subset(ctx.int(ctx.cl(ctx.int(f))), c) && mask_subset(c, f));
        let by_formula = mask_subset(ctx.int(ctx.cl(ctx.int(ctx.cl(c)))), c);
        if by_complement != by_closed_set || by_closed_set != by_formula {
            return ctx.fail(
                id,
                &[c],
                checked,
                "closed characterizations (i)/(ii)/(iii) disagree",
            );
        }
    }
    ctx.pass(id, checked)
}

/// The open family of `kind` is closed under binary unions; the whole
/// family is folded once as a smoke test for the arbitrary-union form.
fn check_union_closure(ctx: &Ctx, id: TheoremId, kind: ClassKind) -> VerdictReport {
    let family = ctx.fam(kind);
    let mut checked = 0;
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            checked += 1;
            let union = a | b;
            if family.binary_search(&union).is_err() {
                return ctx.fail(id, &[a, b, union], checked, "binary union leaves the family");
            }
        }
    }
    let total: u64 = family.iter().fold(0, |acc, &m| acc | m);
    if family.binary_search(&total).is_err() {
        return ctx.fail(id, &[total], checked, "whole-family union leaves the family");
    }
    ctx.pass(id, checked)
}

/// NSα-closed sets are closed under binary intersections.
fn check_c3_15(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::C3_15;
    let family = ctx.fam(ClassKind::NSemiAlpha);
    let closed: Vec<u64> = family.iter().map(|&m| ctx.full & !m).collect();
    let is_member = |c: u64| family.binary_search(&(ctx.full & !c)).is_ok();
    let mut checked = 0;
    for (i, &a) in closed.iter().enumerate() {
        for &b in &closed[i + 1..] {
            checked += 1;
            let meet = a & b;
            if !is_member(meet) {
                return ctx.fail(id, &[a, b, meet], checked, "binary intersection leaves the family");
            }
        }
    }
    let total: u64 = closed.iter().fold(ctx.full, |acc, &m| acc & m);
    if !is_member(total) {
        return ctx.fail(id, &[total], checked, "whole-family intersection leaves the family");
    }
    ctx.pass(id, checked)
}

/// Search for two NSα-open sets whose intersection leaves the class.
fn check_r3_16(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::R3_16Strict;
    let family = ctx.fam(ClassKind::NSemiAlpha);
    let mut checked = 0;
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            checked += 1;
            let meet = a & b;
            if family.binary_search(&meet).is_err() {
                let detail = format!(
                    "{} ∩ {} = {} is not NSα-open",
                    ctx.sub(a),
                    ctx.sub(b),
                    ctx.sub(meet)
                );
                return ctx.report(
                    id,
                    VerdictStatus::WitnessFound,
                    ctx.subs(&[a, b, meet]),
                    checked,
                    Some(detail),
                );
            }
        }
    }
    ctx.report(
        id,
        VerdictStatus::WitnessNotFound,
        Vec::new(),
        checked,
        Some("NSα-open family is intersection-closed on this space".to_owned()),
    )
}

/// NSαint fixes exactly the NSα-open sets and is the largest such set
/// inside its argument; dually for NSαcl.
fn check_p4_3(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::P4_3;
    let kind = ClassKind::NSemiAlpha;
    let family = ctx.fam(kind);
    let mut checked = 0;
    for c in ctx.masks() {
        checked += 1;
        let interior = ctx.cint(kind, c);
        let closure = ctx.ccl(kind, c);
        if (interior == c) != ctx.open(kind, c) {
            return ctx.fail(id, &[c], checked, "NSαint(C)=C does not match NSα-openness");
        }
        if (closure == c) != ctx.closed(kind, c) {
            return ctx.fail(id, &[c], checked, "NSαcl(C)=C does not match NSα-closedness");
        }
        if !ctx.open(kind, interior) || !mask_subset(interior, c) {
            return ctx.fail(id, &[c], checked, "NSαint(C) is not an NSα-open subset of C");
        }
        if !ctx.closed(kind, closure) || !mask_subset(c, closure) {
            return ctx.fail(id, &[c], checked, "NSαcl(C) is not an NSα-closed superset of C");
        }
        for &m in family {
            if mask_subset(m, c) && !mask_subset(m, interior) {
                return ctx.fail(id, &[c, m], checked, "an NSα-open subset of C escapes NSαint(C)");
            }
            let f = ctx.full & !m;
            if mask_subset(c, f) && !mask_subset(closure, f) {
                return ctx.fail(id, &[c, f], checked, "an NSα-closed superset of C undercuts NSαcl(C)");
            }
        }
    }
    ctx.pass(id, checked)
}

/// Interior/closure duality under complement, for every kind.
fn check_p4_4(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::P4_4;
    let mut checked = 0;
    for c in ctx.masks() {
        checked += 1;
        for kind in ClassKind::ALL {
            let comp = ctx.full & !c;
            if ctx.cint(kind, comp) != ctx.full & !ctx.ccl(kind, c) {
                return ctx.fail(id, &[c], checked, "int(U−C) ≠ U−cl(C)");
            }
            if ctx.ccl(kind, comp) != ctx.full & !ctx.cint(kind, c) {
                return ctx.fail(id, &[c], checked, "cl(U−C) ≠ U−int(C)");
            }
        }
    }
    ctx.pass(id, checked)
}

/// NSαint laws: fixed points, contraction, monotonicity,
/// ∩-subadditivity, ∪-superadditivity, idempotence. Strict-inequality
/// witnesses for the two additivity laws are noted in the detail.
fn check_t4_5(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::T4_5;
    let kind = ClassKind::NSemiAlpha;
    let table: Vec<u64> = ctx.masks().map(|c| ctx.cint(kind, c)).collect();
    let mut checked = 0;
    if table[0] != 0 || table[ctx.full as usize] != ctx.full {
        return ctx.fail(id, &[0, ctx.full], checked, "φ/𝒰 are not fixed points");
    }
    for c in ctx.masks() {
        checked += 1;
        let ic = table[c as usize];
        if !mask_subset(ic, c) {
            return ctx.fail(id, &[c], checked, "NSαint(C) ⊄ C");
        }
        if table[ic as usize] != ic {
            return ctx.fail(id, &[c], checked, "NSαint is not idempotent");
        }
    }
    let mut strict_meet: Option<(u64, u64)> = None;
    let mut strict_join: Option<(u64, u64)> = None;
    for c in ctx.masks() {
        for d in ctx.masks() {
            checked += 1;
            let (ic, idd) = (table[c as usize], table[d as usize]);
            if mask_subset(c, d) && !mask_subset(ic, idd) {
                return ctx.fail(id, &[c, d], checked, "monotonicity fails");
            }
            let meet = table[(c & d) as usize];
            if !mask_subset(meet, ic & idd) {
                return ctx.fail(id, &[c, d], checked, "NSαint(C∩D) ⊄ NSαint(C)∩NSαint(D)");
            }
            let join = table[(c | d) as usize];
            if !mask_subset(ic | idd, join) {
                return ctx.fail(id, &[c, d], checked, "NSαint(C)∪NSαint(D) ⊄ NSαint(C∪D)");
            }
            if strict_meet.is_none() && meet != ic & idd {
                strict_meet = Some((c, d));
            }
            if strict_join.is_none() && join != ic | idd {
                strict_join = Some((c, d));
            }
        }
    }
    let detail = strictness_note(ctx, "NSαint", strict_meet, strict_join);
    ctx.report(id, VerdictStatus::Pass, Vec::new(), checked, detail)
}

/// NSαcl laws, mirroring the NSαint ones.
fn check_t4_7(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::T4_7;
    let kind = ClassKind::NSemiAlpha;
    let table: Vec<u64> = ctx.masks().map(|c| ctx.ccl(kind, c)).collect();
    let mut checked = 0;
    if table[0] != 0 || table[ctx.full as usize] != ctx.full {
        return ctx.fail(id, &[0, ctx.full], checked, "φ/𝒰 are not fixed points");
    }
    for c in ctx.masks() {
        checked += 1;
        let cc = table[c as usize];
        if !mask_subset(c, cc) {
            return ctx.fail(id, &[c], checked, "C ⊄ NSαcl(C)");
        }
        if table[cc as usize] != cc {
            return ctx.fail(id, &[c], checked, "NSαcl is not idempotent");
        }
    }
    let mut strict_meet: Option<(u64, u64)> = None;
    let mut strict_join: Option<(u64, u64)> = None;
    for c in ctx.masks() {
        for d in ctx.masks() {
            checked += 1;
            let (cc, cd) = (table[c as usize], table[d as usize]);
            if mask_subset(c, d) && !mask_subset(cc, cd) {
                return ctx.fail(id, &[c, d], checked, "monotonicity fails");
            }
            let meet = table[(c & d) as usize];
            if !mask_subset(meet, cc & cd) {
                return ctx.fail(id, &[c, d], checked, "NSαcl(C∩D) ⊄ NSαcl(C)∩NSαcl(D)");
            }
            let join = table[(c | d) as usize];
            if !mask_subset(cc | cd, join) {
                return ctx.fail(id, &[c, d], checked, "NSαcl(C)∪NSαcl(D) ⊄ NSαcl(C∪D)");
            }
            if strict_meet.is_none() && meet != cc & cd {
                strict_meet = Some((c, d));
            }
            if strict_join.is_none() && join != cc | cd {
                strict_join = Some((c, d));
            }
        }
    }
    let detail = strictness_note(ctx, "NSαcl", strict_meet, strict_join);
    ctx.report(id, VerdictStatus::Pass, Vec::new(), checked, detail)
}

fn strictness_note(
    ctx: &Ctx,
    op: &str,
    meet: Option<(u64, u64)>,
    join: Option<(u64, u64)>,
) -> Option<String> {
    let mut notes = Vec::new();
    if let Some((c, d)) = meet {
        notes.push(format!(
            "strict ∩ witness: C={}, D={} ({op} of the intersection differs)",
            ctx.sub(c),
            ctx.sub(d)
        ));
    }
    if let Some((c, d)) = join {
        notes.push(format!(
            "strict ∪ witness: C={}, D={} ({op} of the union differs)",
            ctx.sub(c),
            ctx.sub(d)
        ));
    }
    if notes.is_empty() {
        None
    } else {
        Some(notes.join("; "))
    }
}

/// Operator chain, absorption identities, the two closed-form
/// evaluations, and the interior-of-closure inclusion.
fn check_p4_9(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::P4_9;
    let nsa = ClassKind::NSemiAlpha;
    let na = ClassKind::NAlpha;
    let mut checked = 0;
    for c in ctx.masks() {
        checked += 1;
        let nint = ctx.int(c);
        let naint = ctx.cint(na, c);
        let nsaint = ctx.cint(nsa, c);
        let nsacl = ctx.ccl(nsa, c);
        let nacl = ctx.ccl(na, c);
        let ncl = ctx.cl(c);
        let chain = mask_subset(nint, naint)
            && mask_subset(naint, nsaint)
            && mask_subset(nsaint, nsacl)
            && mask_subset(nsacl, nacl)
            && mask_subset(nacl, ncl);
        if !chain {
            return ctx.fail(id, &[c], checked, "interior/closure chain broken");
        }
        if ctx.int(nsaint) != nint || ctx.cint(nsa, nint) != nint {
            return ctx.fail(id, &[c], checked, "Nint/NSαint absorption fails");
        }
        if ctx.cint(na, nsaint) != naint || ctx.cint(nsa, naint) != naint {
            return ctx.fail(id, &[c], checked, "Nαint/NSαint absorption fails");
        }
        if ctx.cl(nsacl) != ncl || ctx.ccl(nsa, ncl) != ncl {
            return ctx.fail(id, &[c], checked, "Ncl/NSαcl absorption fails");
        }
        if ctx.ccl(na, nsacl) != nacl || ctx.ccl(nsa, nacl) != nacl {
            return ctx.fail(id, &[c], checked, "Nαcl/NSαcl absorption fails");
        }
        if nsacl != semi_alpha_closure_formula_mask(ctx.space, c) {
            return ctx.fail(id, &[c], checked, "NSαcl formula route disagrees");
        }
        if nsaint != semi_alpha_interior_formula_mask(ctx.space, c) {
            return ctx.fail(id, &[c], checked, "NSαint formula route disagrees");
        }
        if !mask_subset(ctx.int(ctx.cl(c)), ctx.cint(nsa, nsacl)) {
            return ctx.fail(id, &[c], checked, "Nint(Ncl(C)) ⊄ NSαint(NSαcl(C))");
        }
    }
    ctx.pass(id, checked)
}

/// Four characterizations of NSα-openness agree pointwise.
fn check_t4_10(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::T4_10;
    let ns = ClassKind::NSemi;
    let mut checked = 0;
    for c in ctx.masks() {
        checked += 1;
        let direct = ctx.open(ClassKind::NSemiAlpha, c);
        let by_tau = ctx
            .space
            .tau_masks()
            .iter()
            .any(|&k| mask_subset(k, c) && mask_subset(c, ctx.cl(ctx.int(ctx.cl(k)))));
        let by_nsint_tau = ctx
            .space
            .tau_masks()
            .iter()
            .any(|&k| mask_subset(k, c) && mask_subset(c, ctx.cint(ns, ctx.cl(k))));
        let by_nsint = mask_subset(c, ctx.cint(ns, ctx.cl(ctx.int(c))));
        if direct != by_tau || by_tau != by_nsint_tau || by_nsint_tau != by_nsint {
            return ctx.fail(id, &[c], checked, "characterizations (i)–(iv) disagree");
        }
    }
    ctx.pass(id, checked)
}

/// Four characterizations of NSα-closedness agree pointwise.
fn check_c4_11(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::C4_11;
    let ns = ClassKind::NSemi;
    let mut checked = 0;
    for d in ctx.masks() {
        checked += 1;
        let direct = ctx.closed(ClassKind::NSemiAlpha, d);
        let by_closed = ctx
            .space
            .closed_masks()
            .iter()
            .any(|&f| mask_subset(ctx.int(ctx.cl(ctx.int(f))), d) && mask_subset(d, f));
        let by_nscl_closed = ctx
            .space
            .closed_masks()
            .iter()
            .any(|&f| mask_subset(ctx.ccl(ns, ctx.int(f)), d) && mask_subset(d, f));
        let by_nscl = mask_subset(ctx.ccl(ns, ctx.int(ctx.cl(d))), d);
        if direct != by_closed || by_closed != by_nscl_closed || by_nscl_closed != by_nscl {
            return ctx.fail(id, &[d], checked, "characterizations (i)–(iv) disagree");
        }
    }
    ctx.pass(id, checked)
}

/// Tested collapse: the Ns-open and NSα-open families coincide.
///
/// Decided by two independently coded scans: the Ns inequality
/// 𝒞 ⊆ Ncl(Nint(𝒞)) against the existential NSα form (an Nα-open
/// witness under the closure). Reported by the verifier, never assumed
/// by the classifiers.
fn check_x_ns_eq_nsa(ctx: &Ctx) -> VerdictReport {
    let id = TheoremId::XNsEqNsa;
    let alpha_family = ctx.fam(ClassKind::NAlpha);
    let mut checked = 0;
    for c in ctx.masks() {
        checked += 1;
        let by_semi = mask_subset(c, ctx.cl(ctx.int(c)));
        let by_witness = alpha_family
            .iter()
            .any(|&p| mask_subset(p, c) && mask_subset(c, ctx.cl(p)));
        if by_semi != by_witness {
            return ctx.fail(id, &[c], checked, "Ns and NSα memberships differ");
        }
    }
    ctx.pass(id, checked)
}

/// Every (partition, target) pair over `u`, exactly once: partitions in
/// restricted-growth-string order, targets in ascending mask order
/// within each partition.
pub fn enumerate_spaces(u: &Universe) -> Result<SpaceIter, SetError> {
    if u.size() > SPACE_CAP {
        return Err(SetError::EnumerationTooLarge(u.size()));
    }
    Ok(SpaceIter {
        universe: u.clone(),
        partitions: partitions_of(u),
        current: None,
        next_target: 0,
    })
}

/// Iterator over all nano spaces of a universe.
pub struct SpaceIter {
    universe: Universe,
    partitions: crate::partitions::PartitionIter,
    current: Option<crate::rough::Partition>,
    next_target: u64,
}

impl Iterator for SpaceIter {
    type Item = NanoSpace;

    fn next(&mut self) -> Option<NanoSpace> {
        loop {
            if let Some(partition) = &self.current {
                if self.next_target <= self.universe.full_mask() {
                    let target = self.universe.subset(self.next_target);
                    self.next_target += 1;
                    let space = NanoSpace::build(partition.clone(), target)
                        .expect("enumerated inputs are valid");
                    return Some(space);
                }
            }
            self.current = Some(self.partitions.next()?);
            self.next_target = 0;
        }
    }
}

/// Class membership with a side, for mining goals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassSpec {
    pub kind: ClassKind,
    pub side: Side,
}

impl ClassSpec {
    fn member(self, space: &NanoSpace, c: u64) -> bool {
        match self.side {
            Side::Open => is_open_mask(space, self.kind, c),
            Side::Closed => is_open_mask(space, self.kind, space.full_mask() & !c),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = match self.side {
            Side::Open => "O",
            Side::Closed => "C",
        };
        write!(f, "{}{}", self.kind, suffix)
    }
}

/// The additivity laws whose equality can fail strictly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrictLaw {
    /// NSαint(𝒞∩𝒟) vs NSαint(𝒞)∩NSαint(𝒟)
    InteriorOfMeet,
    /// NSαint(𝒞∪𝒟) vs NSαint(𝒞)∪NSαint(𝒟)
    InteriorOfJoin,
    /// NSαcl(𝒞∩𝒟) vs NSαcl(𝒞)∩NSαcl(𝒟)
    ClosureOfMeet,
    /// NSαcl(𝒞∪𝒟) vs NSαcl(𝒞)∪NSαcl(𝒟)
    ClosureOfJoin,
}

/// A searchable phenomenon over (space, subset) or (space, subset pair).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MineGoal {
    /// A subset in one class but not another.
    ClassDifference { have: ClassSpec, lack: ClassSpec },
    /// Two kind-open sets whose intersection leaves the kind.
    MeetEscape { kind: ClassKind },
    /// A pair where an additivity inclusion is strict.
    EqualityFailure { law: StrictLaw },
}

/// A mined witness: the space plus the subset(s) exhibiting the goal.
#[derive(Debug)]
pub struct MineFind {
    pub space: NanoSpace,
    pub sets: Vec<Subset>,
}

/// First witness for `goal` in space-enumeration order, or `None` once
/// the whole search space is exhausted.
pub fn mine(u: &Universe, goal: &MineGoal) -> Result<Option<MineFind>, SetError> {
    for space in enumerate_spaces(u)? {
        if let Some(sets) = mine_in_space(&space, goal)? {
            let sets = sets.iter().map(|&m| space.universe().subset(m)).collect();
            return Ok(Some(MineFind { space, sets }));
        }
    }
    Ok(None)
}

fn mine_in_space(space: &NanoSpace, goal: &MineGoal) -> Result<Option<Vec<u64>>, SetError> {
    let full = space.full_mask();
    match goal {
        MineGoal::ClassDifference { have, lack } => {
            for c in 0..=full {
                if have.member(space, c) && !lack.member(space, c) {
                    return Ok(Some(vec![c]));
                }
            }
            Ok(None)
        }
        MineGoal::MeetEscape { kind } => {
            let family = open_family_masks(space, *kind)?;
            for (i, &a) in family.iter().enumerate() {
                for &b in &family[i + 1..] {
                    let meet = a & b;
                    if family.binary_search(&meet).is_err() {
                        return Ok(Some(vec![a, b, meet]));
                    }
                }
            }
            Ok(None)
        }
        MineGoal::EqualityFailure { law } => {
            let kind = ClassKind::NSemiAlpha;
            let table: Result<Vec<u64>, SetError> = (0..=full)
                .map(|c| match law {
                    StrictLaw::InteriorOfMeet | StrictLaw::InteriorOfJoin => {
                        class_interior_mask(space, kind, c)
                    }
                    StrictLaw::ClosureOfMeet | StrictLaw::ClosureOfJoin => {
                        class_closure_mask(space, kind, c)
                    }
                })
                .collect();
            let table = table?;
            for c in 0..=full {
                for d in 0..=full {
                    let combined = match law {
                        StrictLaw::InteriorOfMeet | StrictLaw::ClosureOfMeet => {
                            (table[(c & d) as usize], table[c as usize] & table[d as usize])
                        }
                        StrictLaw::InteriorOfJoin | StrictLaw::ClosureOfJoin => {
                            (table[(c | d) as usize], table[c as usize] | table[d as usize])
                        }
                    };
                    if combined.0 != combined.1 {
                        return Ok(Some(vec![c, d]));
                    }
                }
            }
            Ok(None)
        }
    }
}
