//! Finite rings as explicit Cayley tables.
//!
//! A [`RingSpec`] stores full addition and multiplication tables over the
//! carrier `{0, .., n-1}`. Every axiom is therefore decidable by exhaustive
//! loops, which is what [`verify_ring_axioms`] does.

mod axioms;
mod build;
pub(crate) mod quotient;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use axioms::{verify_group_axioms, verify_ring_axioms, Axiom, AxiomFailure, AxiomReport};
pub use build::{
    make_boolean_ring, make_cyclic_ring, make_matrix_ring, make_triangular_ring, matrix_entries,
    matrix_index, opposite_ring, Bimodule, MAX_BOOLEAN_UNIVERSE,
};
pub use quotient::{quotient_ring, IllDefinedProduct, ProductSide};

use crate::set::ElementSet;

/// Index of a ring (or group) element within its carrier.
pub type Element = usize;

/// Default cap on constructed carrier sizes.
pub const DEFAULT_BUDGET: usize = 4096;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("ring size must be positive")]
    EmptyCarrier,
    #[error("boolean ring universe of {0} exceeds the limit of {MAX_BOOLEAN_UNIVERSE}")]
    UniverseTooLarge(usize),
    #[error("carrier of {size} elements exceeds the budget of {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("malformed ring tables: {0}")]
    Shape(String),
    #[error("ring spec parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("ring axioms violated: {0}")]
    Axioms(AxiomReport),
    #[error("bimodule actions violate module axioms: {0}")]
    Bimodule(AxiomReport),
    #[error("subset is not an additive subgroup")]
    NotSubgroup,
    #[error("subset is not a two-sided ideal: {0}")]
    NotTwoSided(IllDefinedProduct),
}

/// A finite abelian group given by its addition table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    size: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    zero: Element,
}

impl AbelianGroup {
    /// Builds a group from a row-major addition table. Negation is derived
    /// from the table; call [`verify_group_axioms`] to check the group laws.
    pub fn from_table(size: usize, add: Vec<Element>, zero: Element) -> Result<Self, RingError> {
        if size == 0 {
            return Err(RingError::EmptyCarrier);
        }
        check_table("add", size, &add)?;
        if zero >= size {
            return Err(RingError::Shape(format!("zero index {zero} out of range")));
        }
        let add: Vec<u32> = add.into_iter().map(|x| x as u32).collect();
        let neg = derive_negation(size, &add, zero);
        Ok(AbelianGroup { size, add, neg, zero })
    }

    pub fn cyclic(n: usize) -> Result<Self, RingError> {
        let add = (0..n * n).map(|i| (i / n + i % n) % n.max(1)).collect();
        Self::from_table(n, add, 0)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Element {
        self.zero
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        self.add[a * self.size + b] as Element
    }

    pub fn neg(&self, a: Element) -> Element {
        self.neg[a] as Element
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }
}

/// A finite ring with optional identity.
///
/// Immutable after construction. Constructors in this module produce tables
/// that satisfy the ring axioms; [`RingSpec::from_tables`] and [`load_ring`]
/// verify them before returning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    group: AbelianGroup,
    mul: Vec<u32>,
    one: Option<Element>,
    labels: Vec<String>,
}

impl RingSpec {
    /// Builds and verifies a ring from row-major tables.
    pub fn from_tables(
        size: usize,
        add: Vec<Element>,
        mul: Vec<Element>,
        zero: Element,
        one: Option<Element>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, RingError> {
        let ring = Self::from_tables_unchecked(size, add, mul, zero, one, labels)?;
        let report = verify_ring_axioms(&ring);
        if report.passed() {
            Ok(ring)
        } else {
            Err(RingError::Axioms(report))
        }
    }

    /// Shape-checks the tables without verifying the ring axioms.
    pub fn from_tables_unchecked(
        size: usize,
        add: Vec<Element>,
        mul: Vec<Element>,
        zero: Element,
        one: Option<Element>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, RingError> {
        let group = AbelianGroup::from_table(size, add, zero)?;
        check_table("mul", size, &mul)?;
        if let Some(one) = one {
            if one >= size {
                return Err(RingError::Shape(format!("one index {one} out of range")));
            }
        }
        let labels = match labels {
            Some(labels) if labels.len() != size => {
                return Err(RingError::Shape(format!(
                    "{} labels for {size} elements",
                    labels.len()
                )))
            }
            Some(labels) => labels,
            None => (0..size).map(|i| i.to_string()).collect(),
        };
        Ok(RingSpec {
            group,
            mul: mul.into_iter().map(|x| x as u32).collect(),
            one,
            labels,
        })
    }

    pub fn size(&self) -> usize {
        self.group.size
    }

    pub fn zero(&self) -> Element {
        self.group.zero
    }

    pub fn one(&self) -> Option<Element> {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size()
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        self.group.add(a, b)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mul[a * self.size() + b] as Element
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        self.group.neg(a)
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.group.sub(a, b)
    }

    pub fn additive_group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn label(&self, x: Element) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by its display label.
    pub fn element_by_label(&self, label: &str) -> Option<Element> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    /// A pair `(a, b)` with `ab != ba`, if one exists.
    pub fn commutativity_witness(&self) -> Option<(Element, Element)> {
        let n = self.size();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    pub fn zero_set(&self) -> ElementSet {
        ElementSet::singleton(self.size(), self.zero())
    }

    /// Row-major nested tables, as used by the JSON interchange format.
    pub fn to_file(&self) -> RingFile {
        let n = self.size();
        let rows = |t: &dyn Fn(Element, Element) -> Element| {
            (0..n).map(|a| (0..n).map(|b| t(a, b)).collect()).collect()
        };
        RingFile {
            size: n,
            add: rows(&|a, b| self.add(a, b)),
            mul: rows(&|a, b| self.mul(a, b)),
            zero: self.zero(),
            one: self.one,
            labels: Some(self.labels.clone()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("ring tables serialize")
    }

    pub(crate) fn with_mul(&self, mul: Vec<u32>) -> RingSpec {
        RingSpec {
            group: self.group.clone(),
            mul,
            one: self.one,
            labels: self.labels.clone(),
        }
    }

    pub(crate) fn mul_table(&self) -> &[u32] {
        &self.mul
    }
}

/// On-disk layout of a ring: `{"size", "add", "mul", "zero", "one", "labels"}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RingFile {
    pub size: usize,
    pub add: Vec<Vec<Element>>,
    pub mul: Vec<Vec<Element>>,
    pub zero: Element,
    pub one: Option<Element>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl RingFile {
    pub fn into_ring(self) -> Result<RingSpec, RingError> {
        let ring = self.into_ring_unchecked()?;
        let report = verify_ring_axioms(&ring);
        if report.passed() {
            Ok(ring)
        } else {
            Err(RingError::Axioms(report))
        }
    }

    /// Shape-checks the tables only, so that axiom failures can be reported
    /// rather than refused.
    pub fn into_ring_unchecked(self) -> Result<RingSpec, RingError> {
        let flatten = |name: &str, t: Vec<Vec<Element>>| -> Result<Vec<Element>, RingError> {
            if t.len() != self.size || t.iter().any(|row| row.len() != self.size) {
                return Err(RingError::Shape(format!(
                    "{name} table is not {0}x{0}",
                    self.size
                )));
            }
            Ok(t.into_iter().flatten().collect())
        };
        let add = flatten("add", self.add)?;
        let mul = flatten("mul", self.mul)?;
        RingSpec::from_tables_unchecked(self.size, add, mul, self.zero, self.one, self.labels)
    }
}

/// Parses a JSON ring spec and returns it only if every ring axiom holds.
pub fn load_ring(text: &str) -> Result<RingSpec, RingError> {
    let file: RingFile = serde_json::from_str(text)?;
    file.into_ring()
}

fn check_table(name: &str, size: usize, table: &[Element]) -> Result<(), RingError> {
    if table.len() != size * size {
        return Err(RingError::Shape(format!(
            "{name} table has {} entries, expected {}",
            table.len(),
            size * size
        )));
    }
    if let Some(bad) = table.iter().find(|&&x| x >= size) {
        return Err(RingError::Shape(format!("{name} table entry {bad} out of range")));
    }
    if size > u32::MAX as usize {
        return Err(RingError::Shape("carrier too large".into()));
    }
    Ok(())
}

// Elements without an inverse map to themselves; verification reports them.
fn derive_negation(size: usize, add: &[u32], zero: Element) -> Vec<u32> {
    (0..size)
        .map(|a| {
            (0..size)
                .find(|&b| add[a * size + b] as usize == zero)
                .unwrap_or(a) as u32
        })
        .collect()
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring of {} elements", self.size())?;
        if self.one.is_none() {
            write!(f, " (no identity)")?;
        }
        Ok(())
    }
}
