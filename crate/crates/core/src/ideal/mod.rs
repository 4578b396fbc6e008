//! Classification, generation and enumeration of ideals over finite rings.

mod commutative;
mod lattice;
mod module;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use commutative::{
    check_oka_family, cohen_check, ideal_arithmetic, CohenReport, IdealFamily, OkaReport, OkaViolation,
    PrimeGenerators,
};
pub use lattice::{longest_ideal_chain, maximal_and_prime, IdealFlags};
pub use module::{
    quotient_right_module, verify_module_axioms, ModuleError, ModuleSide, ModuleSpec, QuotientModule,
};

use crate::ring::{Element, RingSpec};
use crate::set::ElementSet;

/// Default cap on ring size for exhaustive ideal enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 64;

/// Largest ring for which [`enumerate_by_bitmask`] will walk the power set.
pub const BITMASK_ENUMERATION_LIMIT: usize = 16;

#[derive(Debug, Error)]
pub enum IdealError {
    #[error(
        "ring of {size} elements exceeds the enumeration budget of {budget}; \
         sample principal ideals instead"
    )]
    BudgetExceeded { size: usize, budget: usize },
    #[error("ring is not commutative: {0}·{1} != {1}·{0}")]
    NotCommutative(Element, Element),
    #[error("subset is not a two-sided ideal")]
    NotAnIdeal,
    #[error("ideal family must contain the whole ring")]
    FamilyExcludesRing,
}

/// Which multiplications an ideal must absorb.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    fn absorbs_left(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }

    fn absorbs_right(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "two-sided" | "both" => Ok(Side::TwoSided),
            other => Err(format!("unknown side {other:?}")),
        }
    }
}

/// Strongest structure a subset carries, weakest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    NotSubgroup,
    SubgroupOnly,
    Left,
    Right,
    TwoSided,
}

impl IdealKind {
    /// Whether an ideal of this kind satisfies the absorption on `side`.
    pub fn satisfies(self, side: Side) -> bool {
        match side {
            Side::Left => matches!(self, IdealKind::Left | IdealKind::TwoSided),
            Side::Right => matches!(self, IdealKind::Right | IdealKind::TwoSided),
            Side::TwoSided => self == IdealKind::TwoSided,
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealKind::NotSubgroup => "not-subgroup",
            IdealKind::SubgroupOnly => "subgroup-only",
            IdealKind::Left => "left",
            IdealKind::Right => "right",
            IdealKind::TwoSided => "two-sided",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum SubgroupFailure {
    MissingZero,
    NotClosedUnderAddition { a: Element, b: Element, sum: Element },
    MissingNegation { a: Element, negation: Element },
}

/// `product` is `ring_element·member` for left failures and
/// `member·ring_element` for right failures; it lies outside the subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AbsorptionFailure {
    pub ring_element: Element,
    pub member: Element,
    pub product: Element,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealClassification {
    pub subset: ElementSet,
    pub kind: IdealKind,
    pub subgroup_failure: Option<SubgroupFailure>,
    pub left_failure: Option<AbsorptionFailure>,
    pub right_failure: Option<AbsorptionFailure>,
}

fn subgroup_failure(ring: &RingSpec, subset: &ElementSet) -> Option<SubgroupFailure> {
    if !subset.contains(ring.zero()) {
        return Some(SubgroupFailure::MissingZero);
    }
    for a in subset.iter() {
        if !subset.contains(ring.neg(a)) {
            return Some(SubgroupFailure::MissingNegation {
                a,
                negation: ring.neg(a),
            });
        }
    }
    for a in subset.iter() {
        for b in subset.iter() {
            let sum = ring.add(a, b);
            if !subset.contains(sum) {
                return Some(SubgroupFailure::NotClosedUnderAddition { a, b, sum });
            }
        }
    }
    None
}

fn absorption_failure(ring: &RingSpec, subset: &ElementSet, side: Side) -> Option<AbsorptionFailure> {
    for r in ring.elements() {
        for a in subset.iter() {
            let product = match side {
                Side::Left => ring.mul(r, a),
                _ => ring.mul(a, r),
            };
            if !subset.contains(product) {
                return Some(AbsorptionFailure {
                    ring_element: r,
                    member: a,
                    product,
                });
            }
        }
    }
    None
}

/// Classifies any subset of the carrier, attaching a witness for every
/// property that fails.
pub fn classify_subset(ring: &RingSpec, subset: &ElementSet) -> IdealClassification {
    assert_eq!(
        subset.universe(),
        ring.size(),
        "subset universe must match the ring"
    );
    let subgroup_failure = subgroup_failure(ring, subset);
    let left_failure = absorption_failure(ring, subset, Side::Left);
    let right_failure = absorption_failure(ring, subset, Side::Right);
    let kind = match (&subgroup_failure, left_failure, right_failure) {
        (Some(_), _, _) => IdealKind::NotSubgroup,
        (None, None, None) => IdealKind::TwoSided,
        (None, None, Some(_)) => IdealKind::Left,
        (None, Some(_), None) => IdealKind::Right,
        (None, Some(_), Some(_)) => IdealKind::SubgroupOnly,
    };
    IdealClassification {
        subset: subset.clone(),
        kind,
        subgroup_failure,
        left_failure,
        right_failure,
    }
}

/// Whether `subset` is an ideal absorbing multiplication on `side`.
pub fn is_ideal(ring: &RingSpec, subset: &ElementSet, side: Side) -> bool {
    subgroup_failure(ring, subset).is_none()
        && (!side.absorbs_left() || absorption_failure(ring, subset, Side::Left).is_none())
        && (!side.absorbs_right() || absorption_failure(ring, subset, Side::Right).is_none())
}

/// Smallest subset containing `generators` and zero that is closed under
/// addition, negation and, depending on `absorb`, multiplication by ring
/// elements on the given side(s). `None` yields the additive subgroup.
pub fn generate_ideal<I>(ring: &RingSpec, generators: I, absorb: Option<Side>) -> ElementSet
where
    I: IntoIterator<Item = Element>,
{
    let mut set = ElementSet::empty(ring.size());
    let mut members = Vec::new();
    let mut queue = Vec::new();
    let push = |x: Element, set: &mut ElementSet, queue: &mut Vec<Element>| {
        if set.insert(x) {
            queue.push(x);
        }
    };
    push(ring.zero(), &mut set, &mut queue);
    for g in generators {
        push(g, &mut set, &mut queue);
    }
    while let Some(x) = queue.pop() {
        members.push(x);
        for &m in &members {
            push(ring.add(x, m), &mut set, &mut queue);
        }
        push(ring.neg(x), &mut set, &mut queue);
        if let Some(side) = absorb {
            for r in ring.elements() {
                if side.absorbs_right() {
                    push(ring.mul(x, r), &mut set, &mut queue);
                }
                if side.absorbs_left() {
                    push(ring.mul(r, x), &mut set, &mut queue);
                }
            }
        }
    }
    set
}

/// The ideal generated by a single element on `side`.
///
/// In a unital ring the right ideal is `aR` and the left ideal is `Ra`;
/// otherwise (and for two-sided ideals) the closure construction of
/// [`generate_ideal`] is used.
pub fn principal_ideal(ring: &RingSpec, a: Element, side: Side) -> ElementSet {
    match (ring.one(), side) {
        (Some(_), Side::Right) => {
            ElementSet::from_indices(ring.size(), ring.elements().map(|r| ring.mul(a, r)))
        }
        (Some(_), Side::Left) => {
            ElementSet::from_indices(ring.size(), ring.elements().map(|r| ring.mul(r, a)))
        }
        _ => generate_ideal(ring, [a], Some(side)),
    }
}

/// All additive subgroups of the ring, in canonical order.
///
/// Grows subgroups from `{0}` by joining one cyclic subgroup at a time and
/// deduplicating; every subgroup is reached because it is generated by its
/// own elements.
pub fn enumerate_additive_subgroups(ring: &RingSpec, budget: usize) -> Result<Vec<ElementSet>, IdealError> {
    if ring.size() > budget {
        return Err(IdealError::BudgetExceeded {
            size: ring.size(),
            budget,
        });
    }
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut frontier = vec![ring.zero_set()];
    seen.insert(ring.zero_set());
    while let Some(group) = frontier.pop() {
        for x in ring.elements() {
            if group.contains(x) {
                continue;
            }
            let joined = join_cyclic(ring, &group, x);
            if seen.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    let mut out: Vec<ElementSet> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

// H + <x> for an additive subgroup H.
fn join_cyclic(ring: &RingSpec, group: &ElementSet, x: Element) -> ElementSet {
    let mut out = group.clone();
    let mut multiple = x;
    while !group.contains(multiple) {
        for h in group.iter() {
            out.insert(ring.add(h, multiple));
        }
        multiple = ring.add(multiple, x);
    }
    out
}

/// Every ideal of the given side, sorted by (size, bitmask).
///
/// Always contains `{0}` and the whole ring.
pub fn enumerate_ideals(ring: &RingSpec, side: Side, budget: usize) -> Result<Vec<ElementSet>, IdealError> {
    Ok(enumerate_additive_subgroups(ring, budget)?
        .into_iter()
        .filter(|s| is_ideal(ring, s, side))
        .collect())
}

/// Brute-force enumeration over all `2^n` subsets, for rings of at most
/// [`BITMASK_ENUMERATION_LIMIT`] elements.
pub fn enumerate_by_bitmask(ring: &RingSpec, side: Side) -> Result<Vec<ElementSet>, IdealError> {
    let n = ring.size();
    if n > BITMASK_ENUMERATION_LIMIT {
        return Err(IdealError::BudgetExceeded {
            size: n,
            budget: BITMASK_ENUMERATION_LIMIT,
        });
    }
    let mut out: Vec<ElementSet> = (0..1u64 << n)
        .map(|mask| ElementSet::from_u64(n, mask))
        .filter(|s| is_ideal(ring, s, side))
        .collect();
    out.sort();
    Ok(out)
}

/// One entry of the JSON ideal listing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealRecord {
    pub bitmask: ElementSet,
    pub kind: IdealKind,
    pub maximal: bool,
    pub prime: Option<bool>,
}

/// Classifies and flags a list of ideals for serialization.
pub fn ideal_records(ring: &RingSpec, ideals: &[ElementSet], side: Side) -> Vec<IdealRecord> {
    let flags = maximal_and_prime(ring, ideals, side);
    ideals
        .iter()
        .zip(flags)
        .map(|(ideal, flags)| IdealRecord {
            bitmask: ideal.clone(),
            kind: classify_subset(ring, ideal).kind,
            maximal: flags.maximal,
            prime: flags.prime,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_boolean_ring, make_cyclic_ring, opposite_ring, RingSpec};
    use crate::samples;
    use proptest::prelude::*;

    #[test]
    fn upper_row_is_right_not_left() {
        let m = samples::matrix_z2();
        let class = classify_subset(&m, &samples::upper_row_ideal(&m));
        assert_eq!(class.kind, IdealKind::Right);
        let w = class.left_failure.unwrap();
        assert_eq!(m.label(w.ring_element), "[[0,0],[1,0]]");
        assert_eq!(m.label(w.member), "[[1,0],[0,0]]");
        assert_eq!(m.label(w.product), "[[0,0],[1,0]]");
        assert!(class.right_failure.is_none());
    }

    #[test]
    fn left_column_is_left_not_right() {
        let m = samples::matrix_z2();
        let class = classify_subset(&m, &samples::left_column_ideal(&m));
        assert_eq!(class.kind, IdealKind::Left);
        assert!(class.right_failure.is_some());
    }

    #[test]
    fn trivial_ideals_are_two_sided() {
        for ring in [
            samples::matrix_z2(),
            samples::triangular_z4_z2(),
            make_cyclic_ring(1).unwrap(),
        ] {
            assert_eq!(classify_subset(&ring, &ring.zero_set()).kind, IdealKind::TwoSided);
            assert_eq!(classify_subset(&ring, &ring.full_set()).kind, IdealKind::TwoSided);
        }
    }

    #[test]
    fn non_subgroups_carry_witnesses() {
        let z4 = make_cyclic_ring(4).unwrap();
        let c = classify_subset(&z4, &ElementSet::empty(4));
        assert_eq!(
            (c.kind, c.subgroup_failure),
            (IdealKind::NotSubgroup, Some(SubgroupFailure::MissingZero))
        );
        let c = classify_subset(&z4, &ElementSet::from_indices(4, [0, 1, 3]));
        assert_eq!(c.kind, IdealKind::NotSubgroup);
        assert!(matches!(
            c.subgroup_failure,
            Some(SubgroupFailure::NotClosedUnderAddition { .. })
        ));
        let c = classify_subset(&z4, &ElementSet::from_indices(4, [0, 1]));
        assert_eq!(
            c.subgroup_failure,
            Some(SubgroupFailure::MissingNegation { a: 1, negation: 3 })
        );
    }

    #[test]
    fn principal_ideals() {
        let m = samples::matrix_z2();
        let e11 = m.element_by_label("[[1,0],[0,0]]").unwrap();
        let p = principal_ideal(&m, e11, Side::Right);
        assert_eq!(p, samples::upper_row_ideal(&m));
        assert_eq!(p.len(), 4);
        assert_eq!(principal_ideal(&m, m.zero(), Side::Right), m.zero_set());
        let z4 = make_cyclic_ring(4).unwrap();
        assert_eq!(
            principal_ideal(&z4, 2, Side::Right),
            ElementSet::from_indices(4, [0, 2])
        );
    }

    #[test]
    fn principal_ideal_without_identity_uses_closure() {
        // 2Z/8Z as a ring of its own: elements 0,2,4,6 relabelled 0..3, no identity.
        let n = 4;
        let add = (0..16).map(|i| (i / n + i % n) % n).collect();
        let mul = (0..16).map(|i| (2 * (i / n) * (i % n)) % n).collect();
        let ring = RingSpec::from_tables(n, add, mul, 0, None, None).unwrap();
        // a·R = {0, 2a} misses a itself; the generated ideal must contain a.
        let p = principal_ideal(&ring, 1, Side::Right);
        assert!(p.contains(1));
        assert_eq!(p, ring.full_set());
        assert_eq!(classify_subset(&ring, &p).kind, IdealKind::TwoSided);
    }

    #[test]
    fn matrix_ring_counts_match_bitmask_oracle() {
        let m = samples::matrix_z2();
        for side in [Side::Left, Side::Right, Side::TwoSided] {
            let fast = enumerate_ideals(&m, side, DEFAULT_ENUMERATION_BUDGET).unwrap();
            assert_eq!(fast, enumerate_by_bitmask(&m, side).unwrap());
        }
        let counts: Vec<usize> = [Side::Left, Side::Right, Side::TwoSided]
            .iter()
            .map(|&s| enumerate_ideals(&m, s, 64).unwrap().len())
            .collect();
        assert_eq!(counts, [5, 5, 2]);
    }

    #[test]
    fn matrix_ring_one_sided_ideals_match_subspaces() {
        // Right ideals of M2(F2) correspond to subspaces W of F2^2 via
        // {A : column space of A ⊆ W}; there are 5 subspaces (0, three lines, F2^2).
        let m = samples::matrix_z2();
        let right = enumerate_ideals(&m, Side::Right, 64).unwrap();
        let vectors = [[0, 0], [1, 0], [0, 1], [1, 1]];
        let mut expected: Vec<ElementSet> = Vec::new();
        for subspace_mask in 1u32..16 {
            let w: Vec<[usize; 2]> = (0..4)
                .filter(|i| subspace_mask >> i & 1 == 1)
                .map(|i| vectors[i])
                .collect();
            let closed = w.contains(&[0, 0])
                && w.iter().all(|u| {
                    w.iter()
                        .all(|v| w.contains(&[(u[0] + v[0]) % 2, (u[1] + v[1]) % 2]))
                });
            if !closed {
                continue;
            }
            let members = m.elements().filter(|&x| {
                let [a, b, c, d] = crate::ring::matrix_entries(2, x);
                w.contains(&[a, c]) && w.contains(&[b, d])
            });
            expected.push(ElementSet::from_indices(16, members));
        }
        expected.sort();
        assert_eq!(right, expected);
    }

    #[test]
    fn triangular_ring_counts() {
        let t = samples::triangular_z4_z2();
        assert_eq!(enumerate_ideals(&t, Side::Left, 64).unwrap().len(), 11);
        assert_eq!(enumerate_ideals(&t, Side::Right, 64).unwrap().len(), 12);
        assert_eq!(
            enumerate_ideals(&t, Side::Left, 64).unwrap(),
            enumerate_by_bitmask(&t, Side::Left).unwrap()
        );
    }

    #[test]
    fn budget_is_enforced() {
        let big = make_cyclic_ring(65).unwrap();
        assert!(matches!(
            enumerate_ideals(&big, Side::Right, 64),
            Err(IdealError::BudgetExceeded { .. })
        ));
        assert!(matches!(
            enumerate_by_bitmask(&make_cyclic_ring(17).unwrap(), Side::Left),
            Err(IdealError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn duality_with_opposite_ring() {
        for ring in [
            samples::matrix_z2(),
            samples::triangular_z4_z2(),
            samples::local_f2xy(),
        ] {
            let op = opposite_ring(&ring);
            assert_eq!(
                enumerate_ideals(&ring, Side::Right, 64).unwrap(),
                enumerate_ideals(&op, Side::Left, 64).unwrap()
            );
            assert_eq!(
                enumerate_ideals(&ring, Side::Left, 64).unwrap(),
                enumerate_ideals(&op, Side::Right, 64).unwrap()
            );
        }
    }

    #[test]
    fn enumeration_closed_under_intersection() {
        for ring in [
            samples::matrix_z2(),
            samples::triangular_z4_z2(),
            make_cyclic_ring(12).unwrap(),
        ] {
            for side in [Side::Left, Side::Right, Side::TwoSided] {
                let ideals = enumerate_ideals(&ring, side, 64).unwrap();
                assert!(ideals.contains(&ring.zero_set()) && ideals.contains(&ring.full_set()));
                for a in &ideals {
                    for b in &ideals {
                        assert!(ideals.contains(&a.intersection(b)));
                    }
                }
            }
        }
    }

    #[test]
    fn boolean_ring_ideals_are_down_sets_closed_under_union() {
        for k in 0..=3 {
            let b = make_boolean_ring(k).unwrap();
            let n = b.size();
            let union = |x: usize, y: usize| b.add(b.add(x, y), b.mul(x, y));
            for mask in 0..1u64 << n {
                let family = ElementSet::from_u64(n, mask);
                let down_closed = family
                    .iter()
                    .all(|x| b.elements().all(|y| y & x != y || family.contains(y)));
                let union_closed = family
                    .iter()
                    .all(|x| family.iter().all(|y| family.contains(union(x, y))));
                let expected = !family.is_empty() && down_closed && union_closed;
                assert_eq!(
                    is_ideal(&b, &family, Side::TwoSided),
                    expected,
                    "k={k} family={family:?}"
                );
            }
        }
    }

    #[test]
    fn commutative_rings_have_no_one_sided_subsets() {
        let ring = make_cyclic_ring(8).unwrap();
        for mask in 0..256u64 {
            let kind = classify_subset(&ring, &ElementSet::from_u64(8, mask)).kind;
            assert!(!matches!(kind, IdealKind::Left | IdealKind::Right));
        }
    }

    proptest! {
        #[test]
        fn principal_right_ideals_classify_right(x in 0usize..16, ring_pick in 0usize..3) {
            let ring = [samples::matrix_z2(), samples::triangular_z4_z2(), make_cyclic_ring(16).unwrap()][ring_pick].clone();
            let p = principal_ideal(&ring, x, Side::Right);
            prop_assert!(classify_subset(&ring, &p).kind.satisfies(Side::Right));
            prop_assert!(p.contains(x));
            prop_assert_eq!(&p, &generate_ideal(&ring, [x], Some(Side::Right)));
        }

        #[test]
        fn mask_classification_agrees_with_is_ideal(mask in any::<u16>()) {
            let ring = samples::triangular_z4_z2();
            let set = ElementSet::from_u64(16, mask as u64);
            let kind = classify_subset(&ring, &set).kind;
            for side in [Side::Left, Side::Right, Side::TwoSided] {
                prop_assert_eq!(kind.satisfies(side), is_ideal(&ring, &set, side));
            }
        }
    }
}
