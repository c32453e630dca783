//! DOT and JSON exports: Hasse diagrams (transitive reductions) for the
//! specialization order of an algebra, and dual spaces with the designated
//! points drawn distinctly.

use crate::document::Document;
use crate::suite::SuiteError;
use dualis_core::filters::Deductive;
use dualis_core::logic::LogicPresentation;
use dualis_core::space::{dual_space, SpaceError};
use serde_json::json;

/// Resolves an object name of the form `NAME` (an algebra) or `dual:NAME`.
/// An explicit logic is honored; otherwise the first declared logic whose
/// signature the algebra carries is used.
fn resolve<'a>(
    doc: &'a Document,
    object: &str,
    logic_name: Option<&str>,
) -> Result<(&'a LogicPresentation, dualis_core::logic::FiniteAlgebra, bool), SuiteError> {
    let (dualize, name) = match object.strip_prefix("dual:") {
        Some(rest) => (true, rest),
        None => (false, object),
    };
    let decl = doc
        .algebra(name)
        .ok_or_else(|| SuiteError::Usage(format!("unknown object `{object}`")))?;
    let logic = match logic_name {
        Some(l) => doc
            .logic(l)
            .filter(|logic| decl.matches(logic))
            .ok_or_else(|| SuiteError::Usage(format!("logic `{l}` does not fit `{name}`")))?,
        None => doc
            .logics
            .iter()
            .find(|logic| decl.matches(logic))
            .ok_or_else(|| SuiteError::Usage(format!("no declared logic fits `{name}`")))?,
    };
    let algebra = decl
        .realize(logic)
        .ok_or_else(|| SuiteError::Usage(format!("cannot realize `{name}` for `{}`", logic.name)))?;
    Ok((logic, algebra, dualize))
}

/// DOT rendering of the Hasse diagram of an object. Algebras render their
/// specialization order with declared element names; dual spaces render
/// their point order with designated points double-circled.
pub fn export_dot(doc: &Document, object: &str, logic_name: Option<&str>) -> Result<String, SuiteError> {
    let (logic, algebra, dualize) = resolve(doc, object, logic_name)?;
    if dualize {
        let space = dual_space(logic, &algebra).map_err(|e| match e {
            SpaceError::Gate(msg) => SuiteError::Gate(msg),
            other => SuiteError::Internal(other.to_string()),
        })?;
        let mut out = String::new();
        out.push_str(&format!("digraph \"dual_{}\" {{\n", algebra.name));
        out.push_str("  rankdir=BT;\n");
        for x in 0..space.points() {
            let shape = if space.xb.contains(x) { "doublecircle" } else { "circle" };
            out.push_str(&format!("  p{x} [shape={shape}];\n"));
        }
        for (lo, hi) in space.poset.covers() {
            out.push_str(&format!("  p{lo} -> p{hi};\n"));
        }
        out.push_str("}\n");
        return Ok(out);
    }
    let decl = doc.algebra(&algebra.name).expect("resolved above");
    let ded = Deductive::new(logic, &algebra).map_err(|e| SuiteError::Internal(e.to_string()))?;
    let poset = ded
        .specialization_poset()
        .ok_or_else(|| SuiteError::Internal(format!("{} is not reduced", algebra.name)))?;
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", algebra.name));
    out.push_str("  rankdir=BT;\n");
    for e in &decl.elements {
        out.push_str(&format!("  \"{e}\" [shape=circle];\n"));
    }
    for (lo, hi) in poset.covers() {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", decl.elements[lo], decl.elements[hi]));
    }
    out.push_str("}\n");
    Ok(out)
}

/// JSON rendering of an object: algebras with their elements and tables,
/// dual spaces with carrier, order, family and transported tables.
pub fn export_json(
    doc: &Document,
    object: &str,
    logic_name: Option<&str>,
) -> Result<serde_json::Value, SuiteError> {
    let (logic, algebra, dualize) = resolve(doc, object, logic_name)?;
    if dualize {
        let space = dual_space(logic, &algebra).map_err(|e| match e {
            SpaceError::Gate(msg) => SuiteError::Gate(msg),
            other => SuiteError::Internal(other.to_string()),
        })?;
        let family: Vec<Vec<usize>> =
            space.family.iter().map(|u| u.iter().collect()).collect();
        let order: Vec<Vec<usize>> = (0..space.points())
            .map(|x| (0..space.points()).filter(|&y| space.poset.leq(x, y)).collect())
            .collect();
        let ops: Vec<serde_json::Value> = logic
            .signature
            .iter()
            .enumerate()
            .map(|(i, (name, arity))| {
                json!({
                    "name": name,
                    "arity": arity,
                    "table": space.algebra.table(i),
                })
            })
            .collect();
        return Ok(json!({
            "object": format!("dual:{}", algebra.name),
            "logic": logic.name,
            "carrier": space.points(),
            "order": order,
            "designated": space.xb.iter().collect::<Vec<usize>>(),
            "family": family,
            "ops": ops,
        }));
    }
    let decl = doc.algebra(&algebra.name).expect("resolved above");
    let ops: Vec<serde_json::Value> = decl
        .ops
        .iter()
        .map(|op| json!({"name": op.name, "arity": op.arity, "table": op.table}))
        .collect();
    Ok(json!({
        "object": algebra.name,
        "elements": decl.elements,
        "ops": ops,
    }))
}
