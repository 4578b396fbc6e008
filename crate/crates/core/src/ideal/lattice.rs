use serde::Serialize;

use crate::ring::RingSpec;
use crate::set::ElementSet;

use super::{enumerate_ideals, IdealError, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealFlags {
    /// Proper, with no ideal of the list strictly between it and the ring.
    pub maximal: bool,
    /// `None` when primality is not defined for the side (one-sided ideals
    /// of a noncommutative ring).
    pub prime: Option<bool>,
}

/// Flags each ideal as maximal and, where defined, prime.
///
/// Commutative rings use the element test `ab ∈ I ⇒ a ∈ I or b ∈ I`; two-sided
/// ideals of noncommutative rings use `aRb ⊆ I ⇒ a ∈ I or b ∈ I`. Both require
/// the ideal to be proper.
pub fn maximal_and_prime(ring: &RingSpec, ideals: &[ElementSet], side: Side) -> Vec<IdealFlags> {
    let whole = ring.full_set();
    let commutative = ring.is_commutative();
    ideals
        .iter()
        .map(|ideal| {
            let proper = *ideal != whole;
            let maximal = proper
                && !ideals
                    .iter()
                    .any(|other| ideal.is_proper_subset(other) && *other != whole);
            let prime = if commutative {
                Some(proper && is_prime_commutative(ring, ideal))
            } else if side == Side::TwoSided {
                Some(proper && is_prime_two_sided(ring, ideal))
            } else {
                None
            };
            IdealFlags { maximal, prime }
        })
        .collect()
}

pub(crate) fn is_prime_commutative(ring: &RingSpec, ideal: &ElementSet) -> bool {
    ring.elements().all(|a| {
        ideal.contains(a)
            || ring
                .elements()
                .all(|b| ideal.contains(b) || !ideal.contains(ring.mul(a, b)))
    })
}

fn is_prime_two_sided(ring: &RingSpec, ideal: &ElementSet) -> bool {
    ring.elements().filter(|&a| !ideal.contains(a)).all(|a| {
        ring.elements().filter(|&b| !ideal.contains(b)).all(|b| {
            !ring
                .elements()
                .all(|r| ideal.contains(ring.mul(ring.mul(a, r), b)))
        })
    })
}

/// Number of strict inclusions in a longest chain of `side` ideals from
/// `{0}` to the whole ring.
pub fn longest_ideal_chain(ring: &RingSpec, side: Side, budget: usize) -> Result<usize, IdealError> {
    let ideals = enumerate_ideals(ring, side, budget)?;
    // Canonical order lists subsets before their supersets.
    let mut length = vec![0usize; ideals.len()];
    for i in 0..ideals.len() {
        length[i] = (0..i)
            .filter(|&j| ideals[j].is_proper_subset(&ideals[i]))
            .map(|j| length[j] + 1)
            .max()
            .unwrap_or(0);
    }
    let top = ideals
        .iter()
        .position(|s| s.is_full())
        .expect("the whole ring is always an ideal");
    Ok(length[top])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_cyclic_ring;
    use crate::samples;

    fn flags_by_set(ring: &RingSpec, side: Side) -> Vec<(Vec<usize>, IdealFlags)> {
        let ideals = enumerate_ideals(ring, side, 64).unwrap();
        let flags = maximal_and_prime(ring, &ideals, side);
        ideals.iter().map(|s| s.iter().collect()).zip(flags).collect()
    }

    #[test]
    fn z6_primes_are_maximal() {
        let flags = flags_by_set(&make_cyclic_ring(6).unwrap(), Side::TwoSided);
        assert_eq!(flags.len(), 4);
        let pick = |members: &[usize]| flags.iter().find(|(s, _)| s == members).unwrap().1;
        let yes = IdealFlags {
            maximal: true,
            prime: Some(true),
        };
        assert_eq!(pick(&[0, 3]), yes);
        assert_eq!(pick(&[0, 2, 4]), yes);
        assert_eq!(
            pick(&[0]),
            IdealFlags {
                maximal: false,
                prime: Some(false)
            }
        );
        assert_eq!(
            pick(&[0, 1, 2, 3, 4, 5]),
            IdealFlags {
                maximal: false,
                prime: Some(false)
            }
        );
    }

    #[test]
    fn zero_ring_has_no_maximal_ideal() {
        let flags = flags_by_set(&make_cyclic_ring(1).unwrap(), Side::Right);
        assert_eq!(flags.len(), 1);
        assert!(!flags[0].1.maximal);
    }

    #[test]
    fn local_ring_maximal_ideal() {
        let ring = samples::local_f2xy();
        let flags = flags_by_set(&ring, Side::TwoSided);
        assert_eq!(flags.len(), 6);
        let maximal: Vec<_> = flags.iter().filter(|(_, f)| f.maximal).collect();
        assert_eq!(maximal.len(), 1);
        let labels: Vec<&str> = maximal[0].0.iter().map(|&x| ring.label(x)).collect();
        assert_eq!(labels, ["0", "x", "y", "x+y"]);
        assert_eq!(maximal[0].1.prime, Some(true));
    }

    #[test]
    fn unital_rings_have_maximal_right_ideals() {
        for ring in [
            samples::matrix_z2(),
            samples::triangular_z4_z2(),
            make_cyclic_ring(9).unwrap(),
        ] {
            let flags = flags_by_set(&ring, Side::Right);
            assert!(flags.iter().any(|(_, f)| f.maximal));
        }
    }

    #[test]
    fn matrix_ring_two_sided_flags() {
        let flags = flags_by_set(&samples::matrix_z2(), Side::TwoSided);
        assert_eq!(flags.len(), 2);
        // {0} is maximal and prime: M2(F2) is simple.
        assert_eq!(
            flags[0].1,
            IdealFlags {
                maximal: true,
                prime: Some(true)
            }
        );
        let right = flags_by_set(&samples::matrix_z2(), Side::Right);
        assert!(right.iter().all(|(_, f)| f.prime.is_none()));
    }

    #[test]
    fn chain_lengths() {
        assert_eq!(
            longest_ideal_chain(&make_cyclic_ring(4).unwrap(), Side::Right, 64).unwrap(),
            2
        );
        assert_eq!(
            longest_ideal_chain(&make_cyclic_ring(1).unwrap(), Side::Right, 64).unwrap(),
            0
        );
        assert_eq!(
            longest_ideal_chain(&make_cyclic_ring(12).unwrap(), Side::TwoSided, 64).unwrap(),
            3
        );
        assert_eq!(
            longest_ideal_chain(&samples::matrix_z2(), Side::Right, 64).unwrap(),
            2
        );
        let t = samples::triangular_z4_z2();
        for side in [Side::Left, Side::Right, Side::TwoSided] {
            assert_eq!(longest_ideal_chain(&t, side, 64).unwrap(), 4, "{side}");
        }
    }
}
