use std::fmt;

use serde::Serialize;

use crate::ideal::{classify_subset, IdealKind};
use crate::set::ElementSet;

use super::{Element, RingError, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductSide {
    /// `x·y` versus `x'·y`.
    Right,
    /// `y·x` versus `y·x'`.
    Left,
}

/// Congruent elements whose products with `y` fall in different cosets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IllDefinedProduct {
    pub x: Element,
    pub x_prime: Element,
    pub y: Element,
    pub side: ProductSide,
    pub product: Element,
    pub product_prime: Element,
}

impl fmt::Display for IllDefinedProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lhs, rhs) = match self.side {
            ProductSide::Right => (
                format!("{}·{}", self.x, self.y),
                format!("{}·{}", self.x_prime, self.y),
            ),
            ProductSide::Left => (
                format!("{}·{}", self.y, self.x),
                format!("{}·{}", self.y, self.x_prime),
            ),
        };
        write!(
            f,
            "{} ≡ {} but {lhs} = {} and {rhs} = {} are incongruent",
            self.x, self.x_prime, self.product, self.product_prime
        )
    }
}

/// Searches for `x ≡ x' (mod I)` and `y` whose products disagree modulo `I`.
///
/// `I` must be an additive subgroup. Returns `None` exactly when coset
/// multiplication on the requested sides is well defined.
pub(crate) fn find_ill_defined_product(
    ring: &RingSpec,
    ideal: &ElementSet,
    sides: &[ProductSide],
) -> Option<IllDefinedProduct> {
    let congruent = |a: Element, b: Element| ideal.contains(ring.sub(a, b));
    for x in ring.elements() {
        for d in ideal.iter() {
            let x_prime = ring.add(x, d);
            if x_prime <= x {
                continue;
            }
            for y in ring.elements() {
                for &side in sides {
                    let (p, q) = match side {
                        ProductSide::Right => (ring.mul(x, y), ring.mul(x_prime, y)),
                        ProductSide::Left => (ring.mul(y, x), ring.mul(y, x_prime)),
                    };
                    if !congruent(p, q) {
                        return Some(IllDefinedProduct {
                            x,
                            x_prime,
                            y,
                            side,
                            product: p,
                            product_prime: q,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Coset representative (smallest index) of every element modulo `ideal`.
pub(crate) fn coset_representatives(ring: &RingSpec, ideal: &ElementSet) -> Vec<Element> {
    ring.elements()
        .map(|x| ideal.iter().map(|d| ring.add(x, d)).min().unwrap_or(x))
        .collect()
}

/// The quotient ring `R/I`, defined only when `I` is a two-sided ideal.
///
/// Cosets are numbered in order of their smallest member; the label of a
/// coset is the label of that member followed by `+I`.
pub fn quotient_ring(ring: &RingSpec, ideal: &ElementSet) -> Result<RingSpec, RingError> {
    let class = classify_subset(ring, ideal);
    match class.kind {
        IdealKind::NotSubgroup => return Err(RingError::NotSubgroup),
        IdealKind::TwoSided => {}
        _ => {
            let witness = find_ill_defined_product(ring, ideal, &[ProductSide::Right, ProductSide::Left])
                .expect("a one-sided ideal always yields an ill-defined product");
            return Err(RingError::NotTwoSided(witness));
        }
    }
    let reps = coset_representatives(ring, ideal);
    let mut distinct: Vec<Element> = reps.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let coset_of = |x: Element| distinct.binary_search(&reps[x]).expect("representative listed");
    let n = distinct.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &a in &distinct {
        for &b in &distinct {
            add.push(coset_of(ring.add(a, b)));
            mul.push(coset_of(ring.mul(a, b)));
        }
    }
    let labels = distinct.iter().map(|&r| format!("{}+I", ring.label(r))).collect();
    let one = ring.one().map(coset_of);
    // A unital quotient of size 1 has 0 = 1; keep the identity recorded.
    RingSpec::from_tables(n, add, mul, coset_of(ring.zero()), one, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_cyclic_ring, verify_ring_axioms};
    use crate::samples;

    #[test]
    fn z4_mod_two() {
        let z4 = make_cyclic_ring(4).unwrap();
        let q = quotient_ring(&z4, &ElementSet::from_indices(4, [0, 2])).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(q.labels(), ["0+I", "1+I"]);
        assert_eq!(q.mul(1, 1), 1);
        assert_eq!(q.add(1, 1), 0);
    }

    #[test]
    fn refuses_upper_row_right_ideal() {
        let m = samples::matrix_z2();
        let upper = samples::upper_row_ideal(&m);
        match quotient_ring(&m, &upper) {
            Err(RingError::NotTwoSided(w)) => {
                assert!(upper.contains(m.sub(w.x, w.x_prime)));
                assert!(!upper.contains(m.sub(w.product, w.product_prime)));
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn refuses_non_subgroup() {
        let z4 = make_cyclic_ring(4).unwrap();
        assert!(matches!(
            quotient_ring(&z4, &ElementSet::from_indices(4, [0, 1])),
            Err(RingError::NotSubgroup)
        ));
    }

    #[test]
    fn triangular_mod_off_diagonal() {
        let t = samples::triangular_z4_z2();
        // {(0, m, 0)} sits at indices (0*2 + m)*2 + 0.
        let off = ElementSet::from_indices(16, [0, 2]);
        let q = quotient_ring(&t, &off).unwrap();
        assert_eq!(q.size(), 8);
        assert!(verify_ring_axioms(&q).passed());
        assert!(q.one().is_some());
    }
}
