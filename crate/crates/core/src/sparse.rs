//! Compressed sparse row ("Yale") matrices over exact rationals.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Value = BigRational;
pub type Dense = Vec<Vec<Value>>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SparseError {
    #[error("matrix has no entries")]
    Empty,
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("IA has {found} entries, expected m+1 = {expected}")]
    RowPointerLength { found: usize, expected: usize },
    #[error("IA[0] is {0}, expected 0")]
    RowPointerStart(usize),
    #[error("IA[m] is {found}, expected NNZ = {nnz}")]
    RowPointerEnd { found: usize, nnz: usize },
    #[error("IA decreases between rows {row} and {next}", next = row + 1)]
    RowPointerDecreasing { row: usize },
    #[error("JA has {found} entries, expected NNZ = {nnz}")]
    ColumnIndexLength { found: usize, nnz: usize },
    #[error("JA[{k}] = {column} is outside 0..{cols}")]
    ColumnOutOfRange { k: usize, column: usize, cols: usize },
    #[error("column indices of row {row} are not strictly increasing")]
    ColumnOrder { row: usize },
    #[error("A[{0}] stores an explicit zero")]
    StoredZero(usize),
    #[error("cannot multiply: left has {left_cols} columns, right has {right_rows} rows")]
    DimensionMismatch { left_cols: usize, right_rows: usize },
    #[error("invalid value {0:?}")]
    BadValue(String),
}

/// A matrix stored as its nonzero values `A`, row pointers `IA` and
/// column indices `JA`. Row `i` occupies `A[IA[i]..IA[i+1]]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsrMatrix {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "A", serialize_with = "ser_values", deserialize_with = "de_values")]
    pub values: Vec<Value>,
    #[serde(rename = "IA")]
    pub row_ptr: Vec<usize>,
    #[serde(rename = "JA")]
    pub col_idx: Vec<usize>,
}

impl CsrMatrix {
    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// Checks every structural invariant, reporting the first violation.
    pub fn validate(&self) -> Result<(), SparseError> {
        if self.m == 0 || self.n == 0 {
            return Err(SparseError::Empty);
        }
        let nnz = self.values.len();
        if self.row_ptr.len() != self.m + 1 {
            return Err(SparseError::RowPointerLength {
                found: self.row_ptr.len(),
                expected: self.m + 1,
            });
        }
        if self.row_ptr[0] != 0 {
            return Err(SparseError::RowPointerStart(self.row_ptr[0]));
        }
        if let Some(row) = (0..self.m).find(|&i| self.row_ptr[i] > self.row_ptr[i + 1]) {
            return Err(SparseError::RowPointerDecreasing { row });
        }
        if self.row_ptr[self.m] != nnz {
            return Err(SparseError::RowPointerEnd {
                found: self.row_ptr[self.m],
                nnz,
            });
        }
        if self.col_idx.len() != nnz {
            return Err(SparseError::ColumnIndexLength {
                found: self.col_idx.len(),
                nnz,
            });
        }
        if let Some(k) = (0..nnz).find(|&k| self.col_idx[k] >= self.n) {
            return Err(SparseError::ColumnOutOfRange {
                k,
                column: self.col_idx[k],
                cols: self.n,
            });
        }
        for row in 0..self.m {
            let cols = &self.col_idx[self.row_ptr[row]..self.row_ptr[row + 1]];
            if cols.windows(2).any(|w| w[0] >= w[1]) {
                return Err(SparseError::ColumnOrder { row });
            }
        }
        if let Some(k) = self.values.iter().position(Zero::is_zero) {
            return Err(SparseError::StoredZero(k));
        }
        Ok(())
    }

    /// `(column, value)` pairs of row `i`.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &Value)> {
        let range = self.row_ptr[i]..self.row_ptr[i + 1];
        self.col_idx[range.clone()]
            .iter()
            .copied()
            .zip(&self.values[range])
    }
}

fn dims(dense: &[Vec<Value>]) -> Result<(usize, usize), SparseError> {
    let m = dense.len();
    let n = dense.first().map_or(0, Vec::len);
    if let Some(row) = dense.iter().position(|r| r.len() != n) {
        return Err(SparseError::Ragged {
            row,
            found: dense[row].len(),
            expected: n,
        });
    }
    if m == 0 || n == 0 {
        return Err(SparseError::Empty);
    }
    Ok((m, n))
}

/// Encodes a dense grid, scanning rows top to bottom and each row left to
/// right.
pub fn to_yale(dense: &[Vec<Value>]) -> Result<CsrMatrix, SparseError> {
    let (m, n) = dims(dense)?;
    let mut csr = CsrMatrix {
        m,
        n,
        values: vec![],
        row_ptr: vec![0],
        col_idx: vec![],
    };
    for row in dense {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                csr.values.push(v.clone());
                csr.col_idx.push(j);
            }
        }
        csr.row_ptr.push(csr.values.len());
    }
    Ok(csr)
}

pub fn from_yale(csr: &CsrMatrix) -> Result<Dense, SparseError> {
    csr.validate()?;
    let mut dense = vec![vec![Value::zero(); csr.n]; csr.m];
    for (i, row) in dense.iter_mut().enumerate() {
        for (j, v) in csr.row(i) {
            row[j] = v.clone();
        }
    }
    Ok(dense)
}

/// Fraction of entries that are nonzero.
pub fn sparsity(dense: &[Vec<Value>]) -> Result<Value, SparseError> {
    let (m, n) = dims(dense)?;
    let nonzero = dense.iter().flatten().filter(|v| !v.is_zero()).count();
    Ok(Value::new(BigInt::from(nonzero), BigInt::from(m * n)))
}

/// Fraction of entries that are zero; `1 - sparsity`.
pub fn zero_fraction(dense: &[Vec<Value>]) -> Result<Value, SparseError> {
    Ok(Value::one() - sparsity(dense)?)
}

/// Exact product of two CSR matrices, returned in canonical form.
pub fn csr_multiply(a: &CsrMatrix, b: &CsrMatrix) -> Result<CsrMatrix, SparseError> {
    a.validate()?;
    b.validate()?;
    if a.n != b.m {
        return Err(SparseError::DimensionMismatch {
            left_cols: a.n,
            right_rows: b.m,
        });
    }
    let mut out = CsrMatrix {
        m: a.m,
        n: b.n,
        values: vec![],
        row_ptr: vec![0],
        col_idx: vec![],
    };
    for i in 0..a.m {
        let mut acc: BTreeMap<usize, Value> = BTreeMap::new();
        for (k, x) in a.row(i) {
            for (j, y) in b.row(k) {
                *acc.entry(j).or_insert_with(Value::zero) += x * y;
            }
        }
        for (j, v) in acc {
            if !v.is_zero() {
                out.col_idx.push(j);
                out.values.push(v);
            }
        }
        out.row_ptr.push(out.values.len());
    }
    Ok(out)
}

/// Renders a value as a JSON integer when it is one, else as `"p/q"`.
pub fn value_to_json(v: &Value) -> serde_json::Value {
    if v.is_integer() {
        if let Some(i) = v.numer().to_i64() {
            return serde_json::Value::from(i);
        }
    }
    serde_json::Value::String(v.to_string())
}

pub fn value_from_json(v: &serde_json::Value) -> Result<Value, SparseError> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(|i| Value::from_integer(BigInt::from(i)))
            .ok_or_else(|| SparseError::BadValue(n.to_string())),
        serde_json::Value::String(s) => parse_value(s),
        other => Err(SparseError::BadValue(other.to_string())),
    }
}

/// Parses `"p"` or `"p/q"` with a nonzero denominator.
pub fn parse_value(s: &str) -> Result<Value, SparseError> {
    let bad = || SparseError::BadValue(s.to_string());
    match s.trim().split_once('/') {
        Some((p, q)) => {
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Value::new(BigInt::from_str(p.trim()).map_err(|_| bad())?, q))
        }
        None => Ok(Value::from_integer(
            BigInt::from_str(s.trim()).map_err(|_| bad())?,
        )),
    }
}

pub fn dense_to_json(dense: &[Vec<Value>]) -> serde_json::Value {
    dense
        .iter()
        .map(|row| row.iter().map(value_to_json).collect::<Vec<_>>())
        .collect()
}

pub fn dense_from_json(v: &serde_json::Value) -> Result<Dense, SparseError> {
    let rows = v.as_array().ok_or_else(|| SparseError::BadValue(v.to_string()))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| SparseError::BadValue(row.to_string()))?
                .iter()
                .map(value_from_json)
                .collect()
        })
        .collect()
}

fn ser_values<S: Serializer>(values: &[Value], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(value_to_json))
}

fn de_values<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Value>, D::Error> {
    let raw = Vec::<serde_json::Value>::deserialize(d)?;
    raw.iter()
        .map(|v| value_from_json(v).map_err(de::Error::custom))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn int(x: i64) -> Value {
        Value::from_integer(BigInt::from(x))
    }

    fn grid(rows: &[&[i64]]) -> Dense {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    fn dense_product(a: &Dense, b: &Dense) -> Dense {
        let (m, k, n) = (a.len(), b.len(), b[0].len());
        (0..m)
            .map(|i| {
                (0..n)
                    .map(|j| (0..k).fold(Value::zero(), |acc, t| acc + &a[i][t] * &b[t][j]))
                    .collect()
            })
            .collect()
    }

    fn random_grid(rng: &mut StdRng, m: usize, n: usize, fill: f64) -> Dense {
        (0..m)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(fill) {
                            Value::new(
                                BigInt::from(rng.gen_range(-9i64..=9)),
                                BigInt::from(rng.gen_range(1i64..=4)),
                            )
                        } else {
                            Value::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn encodes_examples() {
        let c = to_yale(&grid(&[&[1, 0], &[0, 2]])).unwrap();
        assert_eq!(
            (c.values.clone(), c.row_ptr.clone(), c.col_idx.clone()),
            (vec![int(1), int(2)], vec![0, 1, 2], vec![0, 1])
        );
        assert_eq!(from_yale(&c).unwrap(), grid(&[&[1, 0], &[0, 2]]));

        let z = to_yale(&grid(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]])).unwrap();
        assert!(z.values.is_empty() && z.col_idx.is_empty());
        assert_eq!(z.row_ptr, [0, 0, 0, 0]);

        let c = to_yale(&grid(&[&[0, 5, 0], &[7, 0, 0]])).unwrap();
        assert_eq!(
            (c.values, c.row_ptr, c.col_idx),
            (vec![int(5), int(7)], vec![0, 1, 2], vec![1, 0])
        );
    }

    #[test]
    fn json_shape() {
        let mut c = to_yale(&grid(&[&[1, 0], &[0, 2]])).unwrap();
        c.values[1] = Value::new(BigInt::from(3), BigInt::from(4));
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"m":2,"n":2,"A":[1,"3/4"],"IA":[0,1,2],"JA":[0,1]}"#);
        assert_eq!(serde_json::from_str::<CsrMatrix>(&text).unwrap(), c);
    }

    #[test]
    fn decode_rejects_broken_invariants() {
        let good = to_yale(&grid(&[&[1, 0], &[0, 2]])).unwrap();
        let empty = CsrMatrix {
            m: 2,
            n: 2,
            values: vec![],
            row_ptr: vec![0, 0, 0],
            col_idx: vec![],
        };
        assert_eq!(from_yale(&empty).unwrap(), grid(&[&[0, 0], &[0, 0]]));

        type Corruption = fn(&mut CsrMatrix);
        let cases: Vec<(Corruption, SparseError)> = vec![
            (
                |c| c.row_ptr[2] = 1,
                SparseError::RowPointerEnd { found: 1, nnz: 2 },
            ),
            (
                |c| c.row_ptr.pop().map(|_| ()).unwrap(),
                SparseError::RowPointerLength {
                    found: 2,
                    expected: 3,
                },
            ),
            (|c| c.row_ptr[0] = 1, SparseError::RowPointerStart(1)),
            (|c| c.row_ptr[1] = 3, SparseError::RowPointerDecreasing { row: 1 }),
            (
                |c| {
                    c.col_idx.pop();
                },
                SparseError::ColumnIndexLength { found: 1, nnz: 2 },
            ),
            (
                |c| c.col_idx[1] = 2,
                SparseError::ColumnOutOfRange {
                    k: 1,
                    column: 2,
                    cols: 2,
                },
            ),
            (|c| c.values[0] = Value::zero(), SparseError::StoredZero(0)),
        ];
        for (corrupt, expected) in cases {
            let mut c = good.clone();
            corrupt(&mut c);
            assert_eq!(from_yale(&c), Err(expected));
        }
        let unordered = CsrMatrix {
            m: 1,
            n: 3,
            values: vec![int(1), int(2)],
            row_ptr: vec![0, 2],
            col_idx: vec![2, 1],
        };
        assert_eq!(from_yale(&unordered), Err(SparseError::ColumnOrder { row: 0 }));
    }

    #[test]
    fn ragged_and_empty_grids() {
        assert_eq!(
            to_yale(&grid(&[&[1, 2], &[3]])),
            Err(SparseError::Ragged {
                row: 1,
                found: 1,
                expected: 2
            })
        );
        assert_eq!(to_yale(&[]), Err(SparseError::Empty));
        assert_eq!(sparsity(&[]), Err(SparseError::Empty));
    }

    #[test]
    fn sparsity_counts_nonzeros() {
        let m = grid(&[&[1, 0, 2, 3], &[0, 4, 5, 0], &[6, 7, 0, 8], &[9, 1, 2, 0]]);
        assert_eq!(
            sparsity(&m).unwrap(),
            Value::new(BigInt::from(11), BigInt::from(16))
        );
        assert_eq!(
            zero_fraction(&m).unwrap(),
            Value::new(BigInt::from(5), BigInt::from(16))
        );
        assert_eq!(sparsity(&grid(&[&[0, 0], &[0, 0]])).unwrap(), int(0));
        assert_eq!(sparsity(&grid(&[&[1, 2, 3], &[4, 5, 6]])).unwrap(), int(1));
    }

    #[test]
    fn nilpotent_square_vanishes() {
        let n = to_yale(&grid(&[&[0, 1], &[0, 0]])).unwrap();
        assert_eq!(n.nnz(), 1);
        let sq = csr_multiply(&n, &n).unwrap();
        assert_eq!(sq.nnz(), 0);
        assert_eq!(from_yale(&sq).unwrap(), grid(&[&[0, 0], &[0, 0]]));
    }

    #[test]
    fn identity_is_neutral() {
        let mut rng = StdRng::seed_from_u64(3);
        for size in 1..=6 {
            let x = random_grid(&mut rng, size, size + 1, 0.4);
            let id: Dense = (0..size)
                .map(|i| (0..size).map(|j| if i == j { int(1) } else { int(0) }).collect())
                .collect();
            let product = csr_multiply(&to_yale(&id).unwrap(), &to_yale(&x).unwrap()).unwrap();
            assert_eq!(product, to_yale(&x).unwrap());
        }
    }

    #[test]
    fn dimension_mismatch() {
        let a = to_yale(&grid(&[&[1, 2]])).unwrap();
        assert_eq!(
            csr_multiply(&a, &a),
            Err(SparseError::DimensionMismatch {
                left_cols: 2,
                right_rows: 1
            })
        );
    }

    #[test]
    fn product_matches_dense_oracle() {
        let mut rng = StdRng::seed_from_u64(25);
        for _ in 0..50 {
            let a = random_grid(&mut rng, 8, 8, 0.25);
            let b = random_grid(&mut rng, 8, 8, 0.25);
            let sparse = csr_multiply(&to_yale(&a).unwrap(), &to_yale(&b).unwrap()).unwrap();
            assert!(sparse.validate().is_ok());
            assert_eq!(from_yale(&sparse).unwrap(), dense_product(&a, &b));
        }
        for _ in 0..50 {
            let (m, k, n) = (rng.gen_range(1..6), rng.gen_range(1..6), rng.gen_range(1..6));
            let a = random_grid(&mut rng, m, k, 0.5);
            let b = random_grid(&mut rng, k, n, 0.5);
            let sparse = csr_multiply(&to_yale(&a).unwrap(), &to_yale(&b).unwrap()).unwrap();
            assert_eq!(from_yale(&sparse).unwrap(), dense_product(&a, &b));
        }
    }

    #[test]
    fn random_round_trips() {
        let mut rng = StdRng::seed_from_u64(500);
        for _ in 0..500 {
            let (m, n) = (rng.gen_range(1..=16), rng.gen_range(1..=16));
            let fill = rng.gen_range(0.0..=1.0);
            let d = random_grid(&mut rng, m, n, fill);
            let c = to_yale(&d).unwrap();
            assert!(c.validate().is_ok());
            assert_eq!(from_yale(&c).unwrap(), d);
            let text = serde_json::to_string(&c).unwrap();
            assert_eq!(serde_json::from_str::<CsrMatrix>(&text).unwrap(), c);
        }
    }

    #[test]
    fn value_parsing() {
        assert_eq!(
            parse_value("6/4").unwrap(),
            Value::new(BigInt::from(3), BigInt::from(2))
        );
        assert_eq!(parse_value("-7").unwrap(), int(-7));
        assert!(parse_value("1/0").is_err());
        assert!(parse_value("x").is_err());
        let d = dense_from_json(&serde_json::json!([[1, "1/2"], [0, -3]])).unwrap();
        assert_eq!(dense_to_json(&d), serde_json::json!([[1, "1/2"], [0, -3]]));
        assert!(dense_from_json(&serde_json::json!([[1.5]])).is_err());
    }
}
