use crate::ideal::{verify_module_axioms, ModuleSide, ModuleSpec};

use super::{AbelianGroup, Axiom, AxiomReport, Element, RingError, RingSpec};

/// Largest universe accepted by [`make_boolean_ring`].
pub const MAX_BOOLEAN_UNIVERSE: usize = 5;

/// The ring of integers modulo `n`. The identity is recorded for `n > 1`.
pub fn make_cyclic_ring(n: usize) -> Result<RingSpec, RingError> {
    if n == 0 {
        return Err(RingError::EmptyCarrier);
    }
    let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
    let one = (n > 1).then_some(1);
    RingSpec::from_tables_unchecked(n, add, mul, 0, one, None)
}

/// The power set of `{1, .., k}` under symmetric difference and intersection.
///
/// Element `i` is the subset whose bitmask is `i` (bit `j` stands for `j+1`).
pub fn make_boolean_ring(universe_size: usize) -> Result<RingSpec, RingError> {
    if universe_size > MAX_BOOLEAN_UNIVERSE {
        return Err(RingError::UniverseTooLarge(universe_size));
    }
    let n = 1usize << universe_size;
    let add = (0..n * n).map(|i| (i / n) ^ (i % n)).collect();
    let mul = (0..n * n).map(|i| (i / n) & (i % n)).collect();
    let labels = (0..n)
        .map(|mask| {
            let members: Vec<String> = (0..universe_size)
                .filter(|j| mask >> j & 1 == 1)
                .map(|j| (j + 1).to_string())
                .collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    RingSpec::from_tables_unchecked(n, add, mul, 0, Some(n - 1), Some(labels))
}

/// Index of the matrix `[[a, b], [c, d]]` in [`make_matrix_ring`] output.
///
/// The index is little-endian mixed radix: `a + b·q + c·q² + d·q³`.
pub fn matrix_index(q: usize, [a, b, c, d]: [Element; 4]) -> Element {
    ((d * q + c) * q + b) * q + a
}

/// Entries `[a, b, c, d]` of the matrix at index `x`.
pub fn matrix_entries(q: usize, x: Element) -> [Element; 4] {
    [x % q, x / q % q, x / (q * q) % q, x / (q * q * q)]
}

/// The ring of 2x2 matrices over `base`.
///
/// Elements use the mixed-radix index of [`matrix_index`]; labels read
/// `[[a,b],[c,d]]` in terms of the base labels.
pub fn make_matrix_ring(base: &RingSpec, budget: usize) -> Result<RingSpec, RingError> {
    let q = base.size();
    let size = q
        .checked_pow(4)
        .filter(|&s| s <= budget)
        .ok_or(RingError::BudgetExceeded {
            size: q.saturating_pow(4),
            budget,
        })?;
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    let entries: Vec<[Element; 4]> = (0..size).map(|x| matrix_entries(q, x)).collect();
    for x in &entries {
        for y in &entries {
            add.push(matrix_index(q, std::array::from_fn(|i| base.add(x[i], y[i]))));
            let [a, b, c, d] = *x;
            let [e, f, g, h] = *y;
            let dot =
                |p: Element, r: Element, s: Element, t: Element| base.add(base.mul(p, r), base.mul(s, t));
            mul.push(matrix_index(
                q,
                [dot(a, e, b, g), dot(a, f, b, h), dot(c, e, d, g), dot(c, f, d, h)],
            ));
        }
    }
    let zero = base.zero();
    let one = base.one().map(|one| matrix_index(q, [one, zero, zero, one]));
    let labels = entries
        .iter()
        .map(|[a, b, c, d]| {
            format!(
                "[[{},{}],[{},{}]]",
                base.label(*a),
                base.label(*b),
                base.label(*c),
                base.label(*d)
            )
        })
        .collect();
    RingSpec::from_tables_unchecked(size, add, mul, matrix_index(q, [zero; 4]), one, Some(labels))
}

/// An abelian group with compatible left and right actions.
///
/// `left[m * top_size + r]` holds `r·m`; `right[m * bottom_size + s]` holds `m·s`.
#[derive(Debug, Clone)]
pub struct Bimodule {
    pub group: AbelianGroup,
    pub left: Vec<Element>,
    pub right: Vec<Element>,
}

impl Bimodule {
    pub fn from_fns(
        group: AbelianGroup,
        top: &RingSpec,
        bottom: &RingSpec,
        left: impl Fn(Element, Element) -> Element,
        right: impl Fn(Element, Element) -> Element,
    ) -> Bimodule {
        let m = group.size();
        Bimodule {
            left: (0..m * top.size())
                .map(|i| left(i % top.size(), i / top.size()))
                .collect(),
            right: (0..m * bottom.size())
                .map(|i| right(i / bottom.size(), i % bottom.size()))
                .collect(),
            group,
        }
    }
}

/// The triangular ring `[[R, M], [0, S]]` with elements `(r, m, s)`.
///
/// Multiplication is `(r,m,s)(r',m',s') = (rr', r·m' + m·s', ss')`. Elements are
/// indexed `(r * |M| + m) * |S| + s`.
pub fn make_triangular_ring(
    top: &RingSpec,
    bottom: &RingSpec,
    bimodule: &Bimodule,
    budget: usize,
) -> Result<RingSpec, RingError> {
    let (rs, ms, ss) = (top.size(), bimodule.group.size(), bottom.size());
    let size = rs * ms * ss;
    if size > budget {
        return Err(RingError::BudgetExceeded { size, budget });
    }

    let left = ModuleSpec::new(
        bimodule.group.clone(),
        top,
        bimodule.left.clone(),
        ModuleSide::Left,
    )
    .map_err(|e| RingError::Shape(e.to_string()))?;
    let right = ModuleSpec::new(
        bimodule.group.clone(),
        bottom,
        bimodule.right.clone(),
        ModuleSide::Right,
    )
    .map_err(|e| RingError::Shape(e.to_string()))?;
    let mut report = AxiomReport::default();
    let (left_report, right_report) = (verify_module_axioms(&left), verify_module_axioms(&right));
    let unitary = left_report.failure(Axiom::ActionUnitary).is_none()
        && right_report.failure(Axiom::ActionUnitary).is_none();
    for sub in [left_report, right_report] {
        report.checked.extend(sub.checked);
        report.failures.extend(
            sub.failures
                .into_iter()
                .filter(|f| f.axiom != Axiom::ActionUnitary),
        );
    }
    let compat = (0..rs)
        .flat_map(|r| (0..ms).flat_map(move |m| (0..ss).map(move |s| (r, m, s))))
        .find(|&(r, m, s)| right.act(left.act(m, r), s) != left.act(right.act(m, s), r));
    report.check(Axiom::BimoduleCompatible, compat.map(|(r, m, s)| vec![r, m, s]));
    if !report.passed() {
        return Err(RingError::Bimodule(report));
    }

    let g = &bimodule.group;
    let index = |r: Element, m: Element, s: Element| (r * ms + m) * ss + s;
    let parts = |x: Element| (x / (ms * ss), x / ss % ms, x % ss);
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for x in 0..size {
        let (r, m, s) = parts(x);
        for y in 0..size {
            let (r2, m2, s2) = parts(y);
            add.push(index(top.add(r, r2), g.add(m, m2), bottom.add(s, s2)));
            let off_diagonal = g.add(left.act(m2, r), right.act(m, s2));
            mul.push(index(top.mul(r, r2), off_diagonal, bottom.mul(s, s2)));
        }
    }
    let one = match (top.one(), bottom.one()) {
        (Some(t), Some(b)) if unitary => Some(index(t, g.zero(), b)),
        _ => None,
    };
    let labels = (0..size)
        .map(|x| {
            let (r, m, s) = parts(x);
            format!(
                "[[{},{m}],[{},{}]]",
                top.label(r),
                bottom.label(bottom.zero()),
                bottom.label(s)
            )
        })
        .collect();
    RingSpec::from_tables_unchecked(
        size,
        add,
        mul,
        index(top.zero(), g.zero(), bottom.zero()),
        one,
        Some(labels),
    )
}

/// Same carrier and addition; `mul(x, y)` becomes `R.mul(y, x)`.
pub fn opposite_ring(ring: &RingSpec) -> RingSpec {
    let n = ring.size();
    let table = ring.mul_table();
    let mul = (0..n * n).map(|i| table[(i % n) * n + i / n]).collect();
    ring.with_mul(mul)
}
