//! Ideal arithmetic for commutative rings: sums, colons, Oka families and
//! generator counts of prime ideals.

use serde::Serialize;

use crate::ring::{Element, RingSpec};
use crate::set::ElementSet;

use super::lattice::is_prime_commutative;
use super::{enumerate_ideals, generate_ideal, is_ideal, principal_ideal, IdealError, Side};

fn require_commutative(ring: &RingSpec) -> Result<(), IdealError> {
    match ring.commutativity_witness() {
        Some((a, b)) => Err(IdealError::NotCommutative(a, b)),
        None => Ok(()),
    }
}

/// Returns `((I, a), (I : a))`: the ideal generated by `I` and `a`, and the
/// colon ideal `{x : xa ∈ I}`.
pub fn ideal_arithmetic(
    ring: &RingSpec,
    ideal: &ElementSet,
    a: Element,
) -> Result<(ElementSet, ElementSet), IdealError> {
    require_commutative(ring)?;
    if !is_ideal(ring, ideal, Side::TwoSided) {
        return Err(IdealError::NotAnIdeal);
    }
    let sum = generate_ideal(ring, ideal.iter().chain([a]), Some(Side::TwoSided));
    let colon = ElementSet::from_indices(
        ring.size(),
        ring.elements().filter(|&x| ideal.contains(ring.mul(x, a))),
    );
    Ok((sum, colon))
}

/// Ready-made ideal families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealFamily {
    /// Ideals generated by a single element.
    Principal,
    /// Every ideal.
    All,
    /// Only the ring itself.
    WholeRing,
}

impl IdealFamily {
    pub fn contains(self, ring: &RingSpec, ideal: &ElementSet) -> bool {
        match self {
            IdealFamily::Principal => ring
                .elements()
                .any(|a| principal_ideal(ring, a, Side::TwoSided) == *ideal),
            IdealFamily::All => true,
            IdealFamily::WholeRing => ideal.is_full(),
        }
    }
}

impl std::str::FromStr for IdealFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "principal" => Ok(IdealFamily::Principal),
            "all" => Ok(IdealFamily::All),
            "whole" | "whole-ring" => Ok(IdealFamily::WholeRing),
            other => Err(format!("unknown ideal family {other:?}")),
        }
    }
}

/// An ideal outside the family whose sum and colon with `element` both lie in it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OkaViolation {
    pub ideal: ElementSet,
    pub element: Element,
    pub sum: ElementSet,
    pub colon: ElementSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OkaReport {
    pub ideals_checked: usize,
    pub family_size: usize,
    pub pairs_checked: usize,
    pub oka_holds: bool,
    pub violations: Vec<OkaViolation>,
    /// Maximal members of the complement of the family, with their primality.
    pub complement_maximal: Vec<(ElementSet, bool)>,
    /// Whether every maximal complement member is prime; only evaluated
    /// when the Oka condition holds.
    pub prime_ideal_principle: Option<bool>,
}

/// Exhaustively checks the Oka condition `(I, a), (I : a) ∈ F ⇒ I ∈ F` and,
/// when it holds, that the maximal ideals outside `F` are prime.
pub fn check_oka_family<F>(ring: &RingSpec, family: F, budget: usize) -> Result<OkaReport, IdealError>
where
    F: Fn(&RingSpec, &ElementSet) -> bool,
{
    require_commutative(ring)?;
    let ideals = enumerate_ideals(ring, Side::TwoSided, budget)?;
    if !family(ring, &ring.full_set()) {
        return Err(IdealError::FamilyExcludesRing);
    }
    let member: Vec<bool> = ideals.iter().map(|i| family(ring, i)).collect();
    let in_family = |set: &ElementSet| {
        let pos = ideals.binary_search(set).expect("sums and colons are ideals");
        member[pos]
    };

    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for (ideal, &inside) in ideals.iter().zip(&member) {
        for a in ring.elements() {
            pairs_checked += 1;
            let (sum, colon) = ideal_arithmetic(ring, ideal, a)?;
            if !inside && in_family(&sum) && in_family(&colon) {
                violations.push(OkaViolation {
                    ideal: ideal.clone(),
                    element: a,
                    sum,
                    colon,
                });
            }
        }
    }

    let complement: Vec<&ElementSet> = ideals
        .iter()
        .zip(&member)
        .filter(|(_, &inside)| !inside)
        .map(|(i, _)| i)
        .collect();
    let complement_maximal: Vec<(ElementSet, bool)> = complement
        .iter()
        .filter(|i| !complement.iter().any(|j| i.is_proper_subset(j)))
        .map(|&i| (i.clone(), !i.is_full() && is_prime_commutative(ring, i)))
        .collect();
    let oka_holds = violations.is_empty();
    let prime_ideal_principle = oka_holds.then(|| complement_maximal.iter().all(|(_, p)| *p));
    Ok(OkaReport {
        ideals_checked: ideals.len(),
        family_size: member.iter().filter(|&&m| m).count(),
        pairs_checked,
        oka_holds,
        violations,
        complement_maximal,
        prime_ideal_principle,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeGenerators {
    pub ideal: ElementSet,
    /// A smallest generating set, lexicographically first among those.
    pub generators: Vec<Element>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohenReport {
    pub primes: Vec<PrimeGenerators>,
    pub all_finitely_generated: bool,
}

/// Finds a minimal generating set for every prime ideal of a finite
/// commutative ring. Finite rings always pass; the report carries the
/// generator counts.
pub fn cohen_check(ring: &RingSpec, budget: usize) -> Result<CohenReport, IdealError> {
    require_commutative(ring)?;
    let ideals = enumerate_ideals(ring, Side::TwoSided, budget)?;
    let mut primes = Vec::new();
    for ideal in ideals
        .iter()
        .filter(|i| !i.is_full() && is_prime_commutative(ring, i))
    {
        let candidates: Vec<Element> = ideal.iter().filter(|&x| x != ring.zero()).collect();
        let generators = (0..=candidates.len())
            .find_map(|k| {
                first_combination(&candidates, k, |combo| {
                    generate_ideal(ring, combo.iter().copied(), Some(Side::TwoSided)) == *ideal
                })
            })
            .expect("an ideal is generated by all of its elements");
        primes.push(PrimeGenerators {
            ideal: ideal.clone(),
            generators,
        });
    }
    Ok(CohenReport {
        all_finitely_generated: true,
        primes,
    })
}

fn first_combination(
    items: &[Element],
    k: usize,
    mut accept: impl FnMut(&[Element]) -> bool,
) -> Option<Vec<Element>> {
    fn walk(
        items: &[Element],
        k: usize,
        start: usize,
        current: &mut Vec<Element>,
        accept: &mut dyn FnMut(&[Element]) -> bool,
    ) -> bool {
        if current.len() == k {
            return accept(current);
        }
        for i in start..items.len() {
            if items.len() - i < k - current.len() {
                break;
            }
            current.push(items[i]);
            if walk(items, k, i + 1, current, accept) {
                return true;
            }
            current.pop();
        }
        false
    }
    let mut current = Vec::with_capacity(k);
    walk(items, k, 0, &mut current, &mut accept).then_some(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::DEFAULT_ENUMERATION_BUDGET as BUDGET;
    use crate::ring::make_cyclic_ring;
    use crate::samples;

    fn set(n: usize, xs: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, xs.iter().copied())
    }

    #[test]
    fn arithmetic_in_z8() {
        let z8 = make_cyclic_ring(8).unwrap();
        let i = set(8, &[0, 4]);
        let (sum, colon) = ideal_arithmetic(&z8, &i, 2).unwrap();
        assert_eq!(sum, set(8, &[0, 2, 4, 6]));
        assert_eq!(colon, set(8, &[0, 2, 4, 6]));
        // a ∈ I absorbs; a = 1 is a unit.
        assert_eq!(ideal_arithmetic(&z8, &i, 4).unwrap(), (i.clone(), z8.full_set()));
        assert_eq!(ideal_arithmetic(&z8, &i, 1).unwrap(), (z8.full_set(), i.clone()));
    }

    #[test]
    fn arithmetic_errors() {
        let m = samples::matrix_z2();
        assert!(matches!(
            ideal_arithmetic(&m, &m.zero_set(), 1),
            Err(IdealError::NotCommutative(..))
        ));
        let z8 = make_cyclic_ring(8).unwrap();
        assert!(matches!(
            ideal_arithmetic(&z8, &set(8, &[0, 1]), 1),
            Err(IdealError::NotAnIdeal)
        ));
    }

    #[test]
    fn principal_family_in_local_ring() {
        let ring = samples::local_f2xy();
        let report = check_oka_family(&ring, |r, i| IdealFamily::Principal.contains(r, i), BUDGET).unwrap();
        assert!(report.oka_holds);
        assert_eq!(report.ideals_checked, 6);
        assert_eq!(report.family_size, 5);
        assert_eq!(report.complement_maximal.len(), 1);
        let (maximal, prime) = &report.complement_maximal[0];
        let labels: Vec<&str> = maximal.iter().map(|x| ring.label(x)).collect();
        assert_eq!(labels, ["0", "x", "y", "x+y"]);
        assert!(prime);
        assert_eq!(report.prime_ideal_principle, Some(true));
    }

    #[test]
    fn all_ideals_family_is_vacuous() {
        let ring = samples::local_f2xy();
        let report = check_oka_family(&ring, |r, i| IdealFamily::All.contains(r, i), BUDGET).unwrap();
        assert!(report.oka_holds);
        assert!(report.complement_maximal.is_empty());
        assert_eq!(report.prime_ideal_principle, Some(true));
    }

    #[test]
    fn whole_ring_family_in_z4() {
        let z4 = make_cyclic_ring(4).unwrap();
        let report = check_oka_family(&z4, |r, i| IdealFamily::WholeRing.contains(r, i), BUDGET).unwrap();
        assert_eq!(report.ideals_checked, 3);
        assert!(report.oka_holds);
        assert_eq!(report.complement_maximal, vec![(set(4, &[0, 2]), true)]);
    }

    #[test]
    fn family_must_contain_ring() {
        let z4 = make_cyclic_ring(4).unwrap();
        assert!(matches!(
            check_oka_family(&z4, |_, i| i.len() == 1, BUDGET),
            Err(IdealError::FamilyExcludesRing)
        ));
    }

    #[test]
    fn non_oka_family_reports_violation() {
        // F = {R, (2)} in Z/8: I = (4), a = 2 gives (I,a) = (2) ∈ F and (I:a) = (2) ∈ F.
        let z8 = make_cyclic_ring(8).unwrap();
        let two = set(8, &[0, 2, 4, 6]);
        let report = check_oka_family(&z8, |_, i| i.is_full() || *i == two, BUDGET).unwrap();
        assert!(!report.oka_holds);
        assert!(report
            .violations
            .iter()
            .any(|v| v.ideal == set(8, &[0, 4]) && v.element == 2));
        assert_eq!(report.prime_ideal_principle, None);
    }

    #[test]
    fn cohen_generators() {
        let z6 = make_cyclic_ring(6).unwrap();
        let report = cohen_check(&z6, BUDGET).unwrap();
        let gens: Vec<Vec<usize>> = report.primes.iter().map(|p| p.generators.clone()).collect();
        assert_eq!(gens, vec![vec![3], vec![2]]);
        assert!(report.all_finitely_generated);

        let local = samples::local_f2xy();
        let report = cohen_check(&local, BUDGET).unwrap();
        assert_eq!(report.primes.len(), 1);
        assert_eq!(report.primes[0].generators.len(), 2);

        let zero = make_cyclic_ring(1).unwrap();
        assert!(cohen_check(&zero, BUDGET).unwrap().primes.is_empty());
    }
}
