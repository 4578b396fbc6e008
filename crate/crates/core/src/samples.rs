//! Small rings used throughout the examples and tests.

use crate::ring::{
    load_ring, make_cyclic_ring, make_matrix_ring, make_triangular_ring, matrix_entries, AbelianGroup,
    Bimodule, RingSpec, DEFAULT_BUDGET,
};
use crate::set::ElementSet;
use crate::sublang::{load_bundle, CorpusRecord, Sublanguage};

const LOCAL_F2XY: &str = include_str!("../../../fixtures/f2xy.json");

/// The 16-element ring of 2×2 matrices over Z/2.
pub fn matrix_z2() -> RingSpec {
    make_matrix_ring(&make_cyclic_ring(2).expect("Z/2"), DEFAULT_BUDGET).expect("M2(Z/2)")
}

/// Matrices of a matrix ring whose second row vanishes.
pub fn upper_row_ideal(matrices: &RingSpec) -> ElementSet {
    matrices_where(matrices, |[_, _, c, d]| c == 0 && d == 0)
}

/// Matrices of a matrix ring whose second column vanishes.
pub fn left_column_ideal(matrices: &RingSpec) -> ElementSet {
    matrices_where(matrices, |[_, b, _, d]| b == 0 && d == 0)
}

fn matrices_where(matrices: &RingSpec, keep: impl Fn([usize; 4]) -> bool) -> ElementSet {
    let q = (1..=matrices.size())
        .find(|q| q.pow(4) == matrices.size())
        .expect("matrix ring size");
    ElementSet::from_indices(
        matrices.size(),
        matrices.elements().filter(|&x| keep(matrix_entries(q, x))),
    )
}

/// The 16-element ring `[[Z/4, Z/2], [0, Z/2]]` with `r·m = (r mod 2)m`.
pub fn triangular_z4_z2() -> RingSpec {
    let top = make_cyclic_ring(4).expect("Z/4");
    let bottom = make_cyclic_ring(2).expect("Z/2");
    let bimodule = Bimodule::from_fns(
        AbelianGroup::cyclic(2).expect("Z/2"),
        &top,
        &bottom,
        |r, m| (r % 2) * m % 2,
        |m, s| m * s % 2,
    );
    make_triangular_ring(&top, &bottom, &bimodule, DEFAULT_BUDGET).expect("triangular ring")
}

/// The local ring `F2[x,y]/(x,y)^2`.
pub fn local_f2xy() -> RingSpec {
    load_ring(LOCAL_F2XY).expect("bundled fixture")
}

const IMMUNOLOGY: &str = include_str!("../../../fixtures/immunology.json");
const BIOCHEM: &str = include_str!("../../../fixtures/biochem.json");
const CORE_POOL: &str = include_str!("../../../fixtures/core_pool.txt");
const GENERAL_POOL: &str = include_str!("../../../fixtures/general_pool.txt");
const DRIFT: &str = include_str!("../../../fixtures/drift.jsonl");

/// Classes A, G, C, T, B and operators J, U, V, Y of the immunology domain.
pub fn immunology() -> Sublanguage {
    load_bundle(IMMUNOLOGY).expect("bundled fixture")
}

/// Molecules, solvents, processes and persons with `activate` and `wash in`.
pub fn biochem() -> Sublanguage {
    load_bundle(BIOCHEM).expect("bundled fixture")
}

fn lines(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect()
}

/// Immunology sentences that are in the core.
pub fn core_pool() -> Vec<String> {
    lines(CORE_POOL)
}

/// Sentences outside the immunology core.
pub fn general_pool() -> Vec<String> {
    lines(GENERAL_POOL)
}

/// A synthetic dated corpus spanning four decades.
pub fn drift_corpus() -> Vec<CorpusRecord> {
    lines(DRIFT)
        .iter()
        .map(|l| serde_json::from_str(l).expect("bundled fixture"))
        .collect()
}
