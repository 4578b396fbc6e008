//! One-sided modules over finite rings.

use serde::Serialize;
use thiserror::Error;

use crate::ring::quotient::{coset_representatives, find_ill_defined_product};
use crate::ring::{
    verify_group_axioms, AbelianGroup, Axiom, AxiomReport, Element, IllDefinedProduct, ProductSide, RingSpec,
};
use crate::set::ElementSet;

use super::{is_ideal, Side};

#[derive(Debug, Error)]
pub enum ModuleError {
    #[error("action table has {found} entries, expected {expected}")]
    ActionShape { found: usize, expected: usize },
    #[error("action table entry {0} is outside the group")]
    ActionRange(Element),
    #[error("subset is not a {0} ideal")]
    NotAnIdeal(Side),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleSide {
    Left,
    Right,
}

/// An abelian group with an external action of a ring.
///
/// `action[x * ring.size() + α]` holds `x·α` for right modules and `α·x` for
/// left modules.
#[derive(Debug, Clone)]
pub struct ModuleSpec<'r> {
    group: AbelianGroup,
    ring: &'r RingSpec,
    action: Vec<u32>,
    side: ModuleSide,
}

impl<'r> ModuleSpec<'r> {
    pub fn new(
        group: AbelianGroup,
        ring: &'r RingSpec,
        action: Vec<Element>,
        side: ModuleSide,
    ) -> Result<Self, ModuleError> {
        let expected = group.size() * ring.size();
        if action.len() != expected {
            return Err(ModuleError::ActionShape {
                found: action.len(),
                expected,
            });
        }
        if let Some(&bad) = action.iter().find(|&&x| x >= group.size()) {
            return Err(ModuleError::ActionRange(bad));
        }
        Ok(ModuleSpec {
            group,
            ring,
            action: action.into_iter().map(|x| x as u32).collect(),
            side,
        })
    }

    /// The ring acting on itself by multiplication.
    pub fn regular(ring: &'r RingSpec, side: ModuleSide) -> Self {
        let n = ring.size();
        let action = (0..n * n)
            .map(|i| {
                let (x, a) = (i / n, i % n);
                match side {
                    ModuleSide::Right => ring.mul(x, a),
                    ModuleSide::Left => ring.mul(a, x),
                }
            })
            .collect();
        Self::new(ring.additive_group().clone(), ring, action, side).expect("regular action fits")
    }

    /// A one-sided ideal viewed as a module on the same side. Module element
    /// `i` is the `i`-th smallest member of the ideal.
    pub fn from_ideal(ring: &'r RingSpec, ideal: &ElementSet, side: ModuleSide) -> Result<Self, ModuleError> {
        let ideal_side = match side {
            ModuleSide::Left => Side::Left,
            ModuleSide::Right => Side::Right,
        };
        if !is_ideal(ring, ideal, ideal_side) {
            return Err(ModuleError::NotAnIdeal(ideal_side));
        }
        let members: Vec<Element> = ideal.iter().collect();
        let local = |x: Element| members.binary_search(&x).expect("ideal is closed");
        let k = members.len();
        let add = (0..k * k)
            .map(|i| local(ring.add(members[i / k], members[i % k])))
            .collect();
        let group = AbelianGroup::from_table(k, add, local(ring.zero())).expect("subgroup table");
        let n = ring.size();
        let action = (0..k * n)
            .map(|i| {
                let (x, a) = (members[i / n], i % n);
                local(match side {
                    ModuleSide::Right => ring.mul(x, a),
                    ModuleSide::Left => ring.mul(a, x),
                })
            })
            .collect();
        Self::new(group, ring, action, side)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn ring(&self) -> &RingSpec {
        self.ring
    }

    pub fn side(&self) -> ModuleSide {
        self.side
    }

    /// `x·α` (right) or `α·x` (left).
    pub fn act(&self, x: Element, alpha: Element) -> Element {
        self.action[x * self.ring.size() + alpha] as Element
    }

    /// Overwrites one action entry; used to build deliberately broken modules.
    pub fn set_action(&mut self, x: Element, alpha: Element, value: Element) {
        assert!(value < self.group.size());
        let n = self.ring.size();
        self.action[x * n + alpha] = value as u32;
    }
}

/// Checks the group laws and the module axioms for the module's side, with
/// the unitary law only when the ring has an identity.
///
/// Witnesses list elements in the order they occur in the axiom: right
/// `(x, α, β)` / `(x, y, α)`, left `(s, t, x)` / `(s, x, y)`.
pub fn verify_module_axioms(module: &ModuleSpec) -> AxiomReport {
    let g = &module.group;
    let r = module.ring;
    let (m, n) = (g.size(), r.size());
    let act = |x, a| module.act(x, a);
    let mut report = verify_group_axioms(g);

    let pairs_of_scalars = |pred: &dyn Fn(Element, Element, Element) -> bool| {
        (0..m)
            .flat_map(|x| (0..n).flat_map(move |a| (0..n).map(move |b| (x, a, b))))
            .find(|&(x, a, b)| pred(x, a, b))
    };
    let pairs_of_vectors = |pred: &dyn Fn(Element, Element, Element) -> bool| {
        (0..m)
            .flat_map(|x| (0..m).flat_map(move |y| (0..n).map(move |a| (x, y, a))))
            .find(|&(x, y, a)| pred(x, y, a))
    };

    let ring_sum = pairs_of_scalars(&|x, a, b| act(x, r.add(a, b)) != g.add(act(x, a), act(x, b)));
    let group_sum = pairs_of_vectors(&|x, y, a| act(g.add(x, y), a) != g.add(act(x, a), act(y, a)));
    let assoc = pairs_of_scalars(&|x, a, b| match module.side {
        ModuleSide::Right => act(x, r.mul(a, b)) != act(act(x, a), b),
        ModuleSide::Left => act(act(x, b), a) != act(x, r.mul(a, b)),
    });
    match module.side {
        ModuleSide::Right => {
            report.check(Axiom::ActionRingSum, ring_sum.map(|(x, a, b)| vec![x, a, b]));
            report.check(Axiom::ActionGroupSum, group_sum.map(|(x, y, a)| vec![x, y, a]));
            report.check(Axiom::ActionAssociative, assoc.map(|(x, a, b)| vec![x, a, b]));
        }
        ModuleSide::Left => {
            report.check(Axiom::ActionRingSum, ring_sum.map(|(x, a, b)| vec![a, b, x]));
            report.check(Axiom::ActionGroupSum, group_sum.map(|(x, y, a)| vec![a, x, y]));
            report.check(Axiom::ActionAssociative, assoc.map(|(x, a, b)| vec![a, b, x]));
        }
    }
    if let Some(one) = r.one() {
        report.check(
            Axiom::ActionUnitary,
            (0..m).find(|&x| act(x, one) != x).map(|x| vec![x]),
        );
    }
    report
}

/// `R/T` as a right module, plus whether coset multiplication is defined.
#[derive(Debug, Clone)]
pub struct QuotientModule<'r> {
    pub module: ModuleSpec<'r>,
    /// Smallest ring element of each coset, in coset order.
    pub representatives: Vec<Element>,
    /// Congruent elements with incongruent products, when `T` is not
    /// two-sided; `None` means `R/T` inherits a ring structure.
    pub multiplication_witness: Option<IllDefinedProduct>,
    coset: Vec<u32>,
}

impl QuotientModule<'_> {
    pub fn multiplication_well_defined(&self) -> bool {
        self.multiplication_witness.is_none()
    }

    /// Coset index of a ring element.
    pub fn coset_of(&self, x: Element) -> Element {
        self.coset[x] as Element
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

/// Builds `R/T` for a right ideal `T` with `(x+T)·α = xα+T`.
pub fn quotient_right_module<'r>(
    ring: &'r RingSpec,
    ideal: &ElementSet,
) -> Result<QuotientModule<'r>, ModuleError> {
    if !is_ideal(ring, ideal, Side::Right) {
        return Err(ModuleError::NotAnIdeal(Side::Right));
    }
    let reps = coset_representatives(ring, ideal);
    let mut representatives = reps.clone();
    representatives.sort_unstable();
    representatives.dedup();
    let coset: Vec<u32> = reps
        .iter()
        .map(|r| representatives.binary_search(r).expect("representative listed") as u32)
        .collect();
    let c = |x: Element| coset[x] as Element;
    let k = representatives.len();
    let add = (0..k * k)
        .map(|i| c(ring.add(representatives[i / k], representatives[i % k])))
        .collect();
    let group = AbelianGroup::from_table(k, add, c(ring.zero())).expect("quotient group table");
    let n = ring.size();
    let action = (0..k * n)
        .map(|i| c(ring.mul(representatives[i / n], i % n)))
        .collect();
    let module = ModuleSpec::new(group, ring, action, ModuleSide::Right)?;
    let multiplication_witness =
        find_ill_defined_product(ring, ideal, &[ProductSide::Right, ProductSide::Left]);
    Ok(QuotientModule {
        module,
        representatives,
        multiplication_witness,
        coset,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_cyclic_ring;
    use crate::samples;

    #[test]
    fn regular_modules_pass() {
        let m = samples::matrix_z2();
        for side in [ModuleSide::Left, ModuleSide::Right] {
            let report = verify_module_axioms(&ModuleSpec::regular(&m, side));
            assert!(report.passed(), "{report}");
            assert!(report.checked.contains(&Axiom::ActionUnitary));
        }
    }

    #[test]
    fn right_ideal_is_right_module() {
        let m = samples::matrix_z2();
        let t = samples::upper_row_ideal(&m);
        let module = ModuleSpec::from_ideal(&m, &t, ModuleSide::Right).unwrap();
        assert_eq!(module.group().size(), 4);
        assert!(verify_module_axioms(&module).passed());
        assert!(matches!(
            ModuleSpec::from_ideal(&m, &t, ModuleSide::Left),
            Err(ModuleError::NotAnIdeal(Side::Left))
        ));
    }

    #[test]
    fn corrupted_action_reports_witness() {
        let z4 = make_cyclic_ring(4).unwrap();
        let mut module = ModuleSpec::regular(&z4, ModuleSide::Right);
        module.set_action(1, 3, 1);
        let report = verify_module_axioms(&module);
        let failure = report
            .failure(Axiom::ActionAssociative)
            .expect("associativity breaks");
        let (x, a, b) = (failure.witness[0], failure.witness[1], failure.witness[2]);
        assert_ne!(module.act(x, z4.mul(a, b)), module.act(module.act(x, a), b));
    }

    #[test]
    fn non_unital_ring_skips_unitary_law() {
        let ring =
            crate::ring::RingSpec::from_tables(2, vec![0, 1, 1, 0], vec![0, 0, 0, 0], 0, None, None).unwrap();
        let report = verify_module_axioms(&ModuleSpec::regular(&ring, ModuleSide::Right));
        assert!(report.passed());
        assert!(!report.checked.contains(&Axiom::ActionUnitary));
    }

    #[test]
    fn shape_errors() {
        let z2 = make_cyclic_ring(2).unwrap();
        let g = AbelianGroup::cyclic(2).unwrap();
        assert!(matches!(
            ModuleSpec::new(g.clone(), &z2, vec![0, 1, 0], ModuleSide::Left),
            Err(ModuleError::ActionShape {
                found: 3,
                expected: 4
            })
        ));
        assert!(matches!(
            ModuleSpec::new(g, &z2, vec![0, 0, 0, 2], ModuleSide::Left),
            Err(ModuleError::ActionRange(2))
        ));
    }

    #[test]
    fn trivial_quotients() {
        let m = samples::matrix_z2();
        let q = quotient_right_module(&m, &m.zero_set()).unwrap();
        assert_eq!(q.len(), 16);
        assert!(q.multiplication_well_defined());
        for x in m.elements() {
            for a in m.elements() {
                assert_eq!(q.module.act(q.coset_of(x), a), q.coset_of(m.mul(x, a)));
            }
        }
        let q = quotient_right_module(&m, &m.full_set()).unwrap();
        assert_eq!(q.len(), 1);
        assert!(q.multiplication_well_defined());
    }

    #[test]
    fn matrix_mod_upper_row() {
        let m = samples::matrix_z2();
        let t = samples::upper_row_ideal(&m);
        let q = quotient_right_module(&m, &t).unwrap();
        assert_eq!(q.len(), 4);
        assert!(verify_module_axioms(&q.module).passed());
        let w = q
            .multiplication_witness
            .clone()
            .expect("upper row is not two-sided");
        assert_eq!(q.coset_of(w.x), q.coset_of(w.x_prime));
        assert_ne!(q.coset_of(w.product), q.coset_of(w.product_prime));
        assert_eq!(w.side, ProductSide::Left);
    }

    #[test]
    fn rejects_left_only_ideal() {
        let m = samples::matrix_z2();
        let t = samples::left_column_ideal(&m);
        assert!(matches!(
            quotient_right_module(&m, &t),
            Err(ModuleError::NotAnIdeal(Side::Right))
        ));
    }
}
