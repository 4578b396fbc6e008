use ringua::ideal::{
    check_oka_family, classify_subset, cohen_check, enumerate_ideals, ideal_records, longest_ideal_chain,
    quotient_right_module, verify_module_axioms, AbsorptionFailure, IdealFamily, ModuleSide, ModuleSpec,
    SubgroupFailure,
};
use ringua::ring::{
    make_boolean_ring, make_cyclic_ring, make_matrix_ring, quotient_ring, verify_ring_axioms, AxiomReport,
    IllDefinedProduct, ProductSide, RingError, DEFAULT_BUDGET,
};
use ringua::viz::{emit_dot, ideal_poset};
use ringua::{samples, Element, IdealKind, RingSpec, Side};
use serde_json::{json, Value};

use crate::render::{load_raw_ring, load_ring_file, set_json, set_text, Output};
use crate::{
    CliError, DiagramFormat, MakeCommand, ModuleKind, ModuleSideArg, RingArg, RingCommand, SampleName,
    SideArg, SubsetArg,
};

fn label(ring: &RingSpec, x: Element) -> String {
    ring.label(x).to_string()
}

fn axiom_json(ring_labels: &dyn Fn(usize, Element) -> String, report: &AxiomReport) -> Value {
    json!({
        "passed": report.passed(),
        "checked": report.checked,
        "failures": report.failures.iter().map(|f| json!({
            "axiom": f.axiom,
            "witness": f.witness,
            "witness_labels": f.witness.iter().enumerate().map(|(i, &x)| ring_labels(i, x)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn product_json(ring: &RingSpec, w: &IllDefinedProduct) -> Value {
    let side = match w.side {
        ProductSide::Right => "x·y versus x'·y",
        ProductSide::Left => "y·x versus y·x'",
    };
    json!({
        "x": label(ring, w.x),
        "x_prime": label(ring, w.x_prime),
        "y": label(ring, w.y),
        "side": w.side,
        "compares": side,
        "product": label(ring, w.product),
        "product_prime": label(ring, w.product_prime),
    })
}

fn product_text(ring: &RingSpec, w: &IllDefinedProduct) -> String {
    let (x, xp, y) = (ring.label(w.x), ring.label(w.x_prime), ring.label(w.y));
    let (lhs, rhs) = match w.side {
        ProductSide::Right => (format!("{x}·{y}"), format!("{xp}·{y}")),
        ProductSide::Left => (format!("{y}·{x}"), format!("{y}·{xp}")),
    };
    format!(
        "{x} and {xp} are congruent but {lhs} = {} and {rhs} = {} are not",
        ring.label(w.product),
        ring.label(w.product_prime)
    )
}

fn ring_summary(ring: &RingSpec) -> Value {
    json!({
        "size": ring.size(),
        "unital": ring.one().is_some(),
        "commutative": ring.is_commutative(),
    })
}

pub(crate) fn ring(cmd: &RingCommand) -> Result<Output, CliError> {
    match cmd {
        RingCommand::Verify { ring } => {
            let r = load_raw_ring(&ring.ring)?;
            let report = verify_ring_axioms(&r);
            let mut json = ring_summary(&r);
            json.as_object_mut().expect("object").extend(
                axiom_json(&|_, x| label(&r, x), &report)
                    .as_object()
                    .expect("object")
                    .clone(),
            );
            let summary = format!("ring of {} elements: {report}", r.size());
            Ok(Output::report(json, summary))
        }
        RingCommand::Quotient { ring, subset } => {
            let r = load_ring_file(&ring.ring)?;
            let ideal = subset.resolve(&r)?;
            match quotient_ring(&r, &ideal) {
                Ok(q) => {
                    let summary = format!("quotient has {} elements: {}", q.size(), q.labels().join(", "));
                    Ok(Output::report(
                        serde_json::to_value(q.to_file()).expect("ring file"),
                        summary,
                    ))
                }
                Err(RingError::NotTwoSided(w)) => Err(CliError::Domain(format!(
                    "{} is not a two-sided ideal, so R/I has no well-defined product: {}",
                    set_text(&r, &ideal),
                    product_text(&r, &w)
                ))),
                Err(e) => Err(CliError::domain(e)),
            }
        }
        RingCommand::Make(make) => {
            let r = match make {
                MakeCommand::Cyclic { n } => make_cyclic_ring(*n),
                MakeCommand::Boolean { n } => make_boolean_ring(*n),
                MakeCommand::Matrix { base } => make_matrix_ring(&load_ring_file(base)?, DEFAULT_BUDGET),
                MakeCommand::Sample { name } => Ok(match name {
                    SampleName::MatrixZ2 => samples::matrix_z2(),
                    SampleName::Triangular => samples::triangular_z4_z2(),
                    SampleName::Local => samples::local_f2xy(),
                }),
            }
            .map_err(CliError::domain)?;
            let summary = format!("ring of {} elements", r.size());
            Ok(Output::report(
                serde_json::to_value(r.to_file()).expect("ring file"),
                summary,
            ))
        }
    }
}

fn side_name(side: SideArg) -> String {
    Side::from(side).to_string()
}

pub(crate) fn ideals(ring: &RingArg, side: SideArg, budget: usize) -> Result<Output, CliError> {
    let r = load_ring_file(&ring.ring)?;
    let ideals = enumerate_ideals(&r, side.into(), budget).map_err(CliError::domain)?;
    let records = ideal_records(&r, &ideals, side.into());
    let mut summary = format!("{} {} ideals\n", ideals.len(), side_name(side));
    let list: Vec<Value> = records
        .iter()
        .map(|rec| {
            let mut tags = Vec::new();
            if rec.maximal {
                tags.push("maximal");
            }
            if rec.prime == Some(true) {
                tags.push("prime");
            }
            summary.push_str(format!("  {} {}", set_text(&r, &rec.bitmask), tags.join(" ")).trim_end());
            summary.push('\n');
            json!({
                "bitmask": rec.bitmask.to_hex(),
                "elements": crate::render::labels(&r, &rec.bitmask),
                "size": rec.bitmask.len(),
                "kind": rec.kind,
                "maximal": rec.maximal,
                "prime": rec.prime,
            })
        })
        .collect();
    let json = json!({ "side": Side::from(side), "count": list.len(), "ideals": list });
    Ok(Output::report(json, summary))
}

fn absorption_json(ring: &RingSpec, f: &Option<AbsorptionFailure>) -> Value {
    match f {
        None => Value::Null,
        Some(f) => json!({
            "ring_element": label(ring, f.ring_element),
            "member": label(ring, f.member),
            "product": label(ring, f.product),
        }),
    }
}

pub(crate) fn classify(ring: &RingArg, subset: &SubsetArg) -> Result<Output, CliError> {
    let r = load_ring_file(&ring.ring)?;
    let set = subset.resolve(&r)?;
    let c = classify_subset(&r, &set);
    let subgroup = match c.subgroup_failure {
        None => Value::Null,
        Some(SubgroupFailure::MissingZero) => json!({ "missing_zero": label(&r, r.zero()) }),
        Some(SubgroupFailure::MissingNegation { a, negation }) => {
            json!({ "element": label(&r, a), "missing_negation": label(&r, negation) })
        }
        Some(SubgroupFailure::NotClosedUnderAddition { a, b, sum }) => {
            json!({ "a": label(&r, a), "b": label(&r, b), "missing_sum": label(&r, sum) })
        }
    };
    let kind = match c.kind {
        IdealKind::NotSubgroup => "not an additive subgroup".to_string(),
        IdealKind::SubgroupOnly => "an additive subgroup but not an ideal".to_string(),
        k => format!("a {k} ideal"),
    };
    let mut summary = format!("{} is {kind}", set_text(&r, &set));
    for (side, f) in [("left", &c.left_failure), ("right", &c.right_failure)] {
        if let Some(f) = f {
            let (x, a, p) = (r.label(f.ring_element), r.label(f.member), r.label(f.product));
            let product = if side == "left" {
                format!("{x}·{a}")
            } else {
                format!("{a}·{x}")
            };
            summary.push_str(&format!("\nnot {side}: {product} = {p} lies outside"));
        }
    }
    let json = json!({
        "subset": set_json(&r, &set),
        "kind": c.kind,
        "subgroup_failure": subgroup,
        "left_failure": absorption_json(&r, &c.left_failure),
        "right_failure": absorption_json(&r, &c.right_failure),
    });
    Ok(Output::report(json, summary))
}

pub(crate) fn chain(ring: &RingArg, side: SideArg, budget: usize) -> Result<Output, CliError> {
    let r = load_ring_file(&ring.ring)?;
    let length = longest_ideal_chain(&r, side.into(), budget).map_err(CliError::domain)?;
    let summary = format!("longest chain of {} ideals has length {length}", side_name(side));
    Ok(Output::report(
        json!({ "side": Side::from(side), "length": length }),
        summary,
    ))
}

pub(crate) fn module(
    ring: &RingArg,
    kind: ModuleKind,
    side: ModuleSideArg,
    subset: &SubsetArg,
) -> Result<Output, CliError> {
    let r = load_ring_file(&ring.ring)?;
    let side = match side {
        ModuleSideArg::Left => ModuleSide::Left,
        ModuleSideArg::Right => ModuleSide::Right,
    };
    if kind == ModuleKind::Regular && subset.is_given() {
        return Err(CliError::Usage(
            "a regular module takes no subset; use --kind ideal or quotient".into(),
        ));
    }
    let (module, extra) = match kind {
        ModuleKind::Regular => (ModuleSpec::regular(&r, side), None),
        ModuleKind::Ideal => {
            let ideal = subset.resolve(&r)?;
            (
                ModuleSpec::from_ideal(&r, &ideal, side).map_err(CliError::domain)?,
                None,
            )
        }
        ModuleKind::Quotient => {
            let ideal = subset.resolve(&r)?;
            let q = quotient_right_module(&r, &ideal).map_err(CliError::domain)?;
            let cosets: Vec<String> = q
                .representatives
                .iter()
                .map(|&x| format!("{}+T", r.label(x)))
                .collect();
            let extra = json!({
                "cosets": cosets,
                "multiplication_well_defined": q.multiplication_well_defined(),
                "multiplication_witness": q.multiplication_witness.as_ref().map(|w| product_json(&r, w)),
            });
            let note = q.multiplication_witness.as_ref().map(|w| product_text(&r, w));
            (q.module, Some((extra, note)))
        }
    };
    let report = verify_module_axioms(&module);
    // Witness positions hold ring elements or module elements depending on
    // the axiom; module elements are shown by index.
    let mut json = json!({
        "kind": format!("{kind:?}").to_lowercase(),
        "side": module.side(),
        "size": module.group().size(),
    });
    let axioms = axiom_json(&|_, x| x.to_string(), &report);
    json.as_object_mut()
        .expect("object")
        .extend(axioms.as_object().expect("object").clone());
    let mut summary = format!("{}-element module: {report}", module.group().size());
    if let Some((extra, note)) = extra {
        json.as_object_mut()
            .expect("object")
            .extend(extra.as_object().expect("object").clone());
        summary.push_str(&match note {
            Some(note) => format!("\nproduct on cosets is not well defined: {note}"),
            None => "\nproduct on cosets is well defined".to_string(),
        });
    }
    Ok(Output::report(json, summary))
}

pub(crate) fn oka(ring: &RingArg, family: &str, cohen: bool, budget: usize) -> Result<Output, CliError> {
    let r = load_ring_file(&ring.ring)?;
    let family: IdealFamily = family.parse().map_err(CliError::Usage)?;
    let report =
        check_oka_family(&r, |ring, i| family.contains(ring, i), budget).map_err(CliError::domain)?;
    let mut json = json!({
        "family": family,
        "ideals_checked": report.ideals_checked,
        "family_size": report.family_size,
        "pairs_checked": report.pairs_checked,
        "oka_holds": report.oka_holds,
        "violations": report.violations.iter().map(|v| json!({
            "ideal": set_json(&r, &v.ideal),
            "element": label(&r, v.element),
            "sum": set_json(&r, &v.sum),
            "colon": set_json(&r, &v.colon),
        })).collect::<Vec<_>>(),
        "complement_maximal": report.complement_maximal.iter().map(|(i, prime)| json!({
            "ideal": set_json(&r, i),
            "prime": prime,
        })).collect::<Vec<_>>(),
        "prime_ideal_principle": report.prime_ideal_principle,
    });
    let mut summary = format!(
        "{} of {} ideals in the family; Oka condition {}",
        report.family_size,
        report.ideals_checked,
        if report.oka_holds { "holds" } else { "fails" }
    );
    if let Some(p) = report.prime_ideal_principle {
        summary.push_str(&format!(
            "; maximal ideals outside the family are {}prime",
            if p { "" } else { "not all " }
        ));
    }
    if cohen {
        let c = cohen_check(&r, budget).map_err(CliError::domain)?;
        json["cohen"] = json!({
            "all_finitely_generated": c.all_finitely_generated,
            "primes": c.primes.iter().map(|p| json!({
                "ideal": set_json(&r, &p.ideal),
                "generators": p.generators.iter().map(|&g| label(&r, g)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        for p in &c.primes {
            let gens: Vec<&str> = p.generators.iter().map(|&g| r.label(g)).collect();
            summary.push_str(&format!(
                "\nprime {} generated by {}",
                set_text(&r, &p.ideal),
                gens.join(", ")
            ));
        }
    }
    Ok(Output::report(json, summary))
}

pub(crate) fn hasse(
    ring: &RingArg,
    side: SideArg,
    format: DiagramFormat,
    budget: usize,
) -> Result<Output, CliError> {
    let r = load_ring_file(&ring.ring)?;
    let ideals = enumerate_ideals(&r, side.into(), budget).map_err(CliError::domain)?;
    let mut poset = ideal_poset(&r, &ideals).map_err(CliError::domain)?;
    for rec in ideal_records(&r, &ideals, side.into()) {
        if rec.maximal {
            poset.add_tag(&rec.bitmask, "maximal");
        }
        if rec.prime == Some(true) {
            poset.add_tag(&rec.bitmask, "prime");
        }
    }
    Ok(match format {
        DiagramFormat::Dot => Output::Document(emit_dot(&poset)),
        DiagramFormat::Json => {
            let summary = format!(
                "{} nodes, {} cover edges",
                poset.nodes.len(),
                poset.cover_edges.len()
            );
            let json = json!({
                "nodes": poset.nodes.iter().map(|n| json!({
                    "id": n.id,
                    "label": n.label,
                    "tags": n.tags,
                    "bitmask": n.members.to_hex(),
                })).collect::<Vec<_>>(),
                "cover_edges": poset.cover_edges,
            });
            Output::report(json, summary)
        }
    })
}
