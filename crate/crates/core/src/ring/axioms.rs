use std::fmt;

use serde::Serialize;

use super::{AbelianGroup, Element, RingSpec};

/// Axioms checked by the ring, group and module verifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
    MulIdentity,
    /// Right: `x(α+β) = xα + xβ`; left: `(s+t)x = sx + tx`.
    ActionRingSum,
    /// Right: `(x+y)α = xα + yα`; left: `s(x+y) = sx + sy`.
    ActionGroupSum,
    /// Right: `x(αβ) = (xα)β`; left: `s(tx) = (st)x`.
    ActionAssociative,
    /// `x·1 = x` (or `1·x = x` on the left).
    ActionUnitary,
    /// `(r·m)·s = r·(m·s)` for a bimodule.
    BimoduleCompatible,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::AddAssociative => "additive associativity",
            Axiom::AddCommutative => "additive commutativity",
            Axiom::AddIdentity => "additive identity",
            Axiom::AddInverse => "additive inverses",
            Axiom::MulAssociative => "multiplicative associativity",
            Axiom::LeftDistributive => "left distributivity r(a+b) = ra + rb",
            Axiom::RightDistributive => "right distributivity (a+b)r = ar + br",
            Axiom::MulIdentity => "multiplicative identity",
            Axiom::ActionRingSum => "action distributes over ring addition",
            Axiom::ActionGroupSum => "action distributes over module addition",
            Axiom::ActionAssociative => "action associativity",
            Axiom::ActionUnitary => "unitary action",
            Axiom::BimoduleCompatible => "bimodule compatibility",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    /// The elements that violate the axiom, in the order they appear in it.
    pub witness: Vec<Element>,
}

/// Outcome of an exhaustive axiom check: at most one witness per axiom.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checked: Vec<Axiom>,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failure(&self, axiom: Axiom) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }

    pub(crate) fn check(&mut self, axiom: Axiom, witness: Option<Vec<Element>>) {
        self.checked.push(axiom);
        if let Some(witness) = witness {
            self.failures.push(AxiomFailure { axiom, witness });
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "all {} axioms hold", self.checked.len());
        }
        for (i, fail) in self.failures.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} fails at {:?}", fail.axiom, fail.witness)?;
        }
        Ok(())
    }
}

fn find_pair(n: usize, pred: impl Fn(Element, Element) -> bool) -> Option<Vec<Element>> {
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| pred(a, b))
        .map(|(a, b)| vec![a, b])
}

fn find_triple(
    n: usize,
    m: usize,
    k: usize,
    pred: impl Fn(Element, Element, Element) -> bool,
) -> Option<Vec<Element>> {
    for a in 0..n {
        for b in 0..m {
            for c in 0..k {
                if pred(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// Checks that `(carrier, add)` is an abelian group with the declared zero.
pub fn verify_group_axioms(g: &AbelianGroup) -> AxiomReport {
    let n = g.size();
    let mut report = AxiomReport::default();
    report.check(
        Axiom::AddAssociative,
        find_triple(n, n, n, |a, b, c| g.add(g.add(a, b), c) != g.add(a, g.add(b, c))),
    );
    report.check(
        Axiom::AddCommutative,
        find_pair(n, |a, b| g.add(a, b) != g.add(b, a)),
    );
    report.check(
        Axiom::AddIdentity,
        (0..n)
            .find(|&a| g.add(g.zero(), a) != a || g.add(a, g.zero()) != a)
            .map(|a| vec![a]),
    );
    report.check(
        Axiom::AddInverse,
        (0..n).find(|&a| g.add(a, g.neg(a)) != g.zero()).map(|a| vec![a]),
    );
    report
}

/// Exhaustively checks the ring axioms, reporting one witness per failure.
pub fn verify_ring_axioms(r: &RingSpec) -> AxiomReport {
    let n = r.size();
    let mut report = verify_group_axioms(r.additive_group());
    report.check(
        Axiom::MulAssociative,
        find_triple(n, n, n, |a, b, c| r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))),
    );
    report.check(
        Axiom::LeftDistributive,
        find_triple(n, n, n, |x, a, b| {
            r.mul(x, r.add(a, b)) != r.add(r.mul(x, a), r.mul(x, b))
        }),
    );
    report.check(
        Axiom::RightDistributive,
        find_triple(n, n, n, |a, b, x| {
            r.mul(r.add(a, b), x) != r.add(r.mul(a, x), r.mul(b, x))
        }),
    );
    if let Some(one) = r.one() {
        report.check(
            Axiom::MulIdentity,
            (0..n)
                .find(|&a| r.mul(one, a) != a || r.mul(a, one) != a)
                .map(|a| vec![a]),
        );
    }
    report
}
