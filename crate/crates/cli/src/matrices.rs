use ringua::sparse::{
    csr_multiply, dense_from_json, dense_to_json, from_yale, sparsity, to_yale, zero_fraction, CsrMatrix,
    Dense,
};
use ringua::viz::{emit_svg, transform_report, PlaneTransform};
use serde_json::{json, Value};

use crate::render::{read_json, Output};
use crate::{CliError, SparseCommand, TransformFormat};

pub(crate) fn transform(entries: &[f64], format: TransformFormat) -> Result<Output, CliError> {
    let [a, b, c, d] = entries else {
        return Err(CliError::Usage(format!(
            "--matrix takes 4 entries a,b,c,d, got {}",
            entries.len()
        )));
    };
    let t = PlaneTransform::new(*a, *b, *c, *d);
    match format {
        TransformFormat::Svg => Ok(Output::Document(emit_svg(&t).map_err(CliError::domain)?)),
        TransformFormat::Json => {
            let r = transform_report(&t).map_err(CliError::domain)?;
            let summary = format!(
                "{}; signed area {}{}",
                r.class.name(),
                r.signed_area,
                if r.flipped { ", flipped" } else { "" }
            );
            Ok(Output::report(
                serde_json::to_value(&r).expect("report serializes"),
                summary,
            ))
        }
    }
}

fn csr_json(c: &CsrMatrix) -> Value {
    serde_json::to_value(c).expect("CSR serializes")
}

/// Accepts either a dense grid or a CSR object.
fn read_matrix(path: &std::path::Path) -> Result<Dense, CliError> {
    let value: Value = read_json(path)?;
    let bad = |e: ringua::sparse::SparseError| CliError::Domain(format!("{}: {e}", path.display()));
    if value.is_object() {
        let csr: CsrMatrix = serde_json::from_value(value).map_err(|source| CliError::Json {
            path: path.to_path_buf(),
            source,
        })?;
        from_yale(&csr).map_err(bad)
    } else {
        dense_from_json(&value).map_err(bad)
    }
}

fn read_csr(path: &std::path::Path) -> Result<CsrMatrix, CliError> {
    let csr: CsrMatrix = read_json(path)?;
    csr.validate()
        .map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    Ok(csr)
}

pub(crate) fn sparse(cmd: &SparseCommand) -> Result<Output, CliError> {
    match cmd {
        SparseCommand::Encode { input } => {
            let dense: Value = read_json(input)?;
            let dense = dense_from_json(&dense).map_err(CliError::domain)?;
            let c = to_yale(&dense).map_err(CliError::domain)?;
            let summary = format!("{}x{} matrix, {} nonzero entries", c.m, c.n, c.nnz());
            Ok(Output::report(csr_json(&c), summary))
        }
        SparseCommand::Decode { input } => {
            let c: CsrMatrix = read_json(input)?;
            let dense = from_yale(&c).map_err(|e| CliError::Domain(format!("{}: {e}", input.display())))?;
            let summary = dense
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::report(dense_to_json(&dense), summary))
        }
        SparseCommand::Mul { left, right } => {
            let (a, b) = (read_csr(left)?, read_csr(right)?);
            let p = csr_multiply(&a, &b).map_err(CliError::domain)?;
            let summary = format!(
                "{}x{} product, {} nonzero entries (factors had {} and {})",
                p.m,
                p.n,
                p.nnz(),
                a.nnz(),
                b.nnz()
            );
            Ok(Output::report(csr_json(&p), summary))
        }
        SparseCommand::Sparsity { input } => {
            let dense = read_matrix(input)?;
            let s = sparsity(&dense).map_err(CliError::domain)?;
            let z = zero_fraction(&dense).map_err(CliError::domain)?;
            let entries = dense.len() * dense[0].len();
            let nonzero = to_yale(&dense).map_err(CliError::domain)?.nnz();
            let json = json!({
                "sparsity": s.to_string(),
                "zero_fraction": z.to_string(),
                "nonzero": nonzero,
                "entries": entries,
            });
            Ok(Output::report(
                json,
                format!("sparsity {s} ({nonzero} of {entries} entries nonzero)"),
            ))
        }
    }
}
