use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::ring::RingSpec;
use crate::set::ElementSet;

use super::VizError;

/// Longest node label kept verbatim; longer labels are cut and suffixed
/// with a short digest of the full text.
pub const MAX_LABEL_CHARS: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PosetNode {
    pub id: usize,
    pub label: String,
    pub tags: Vec<String>,
    pub members: ElementSet,
}

/// Ideals ordered by inclusion, stored as the covering relation only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PosetDiagram {
    pub nodes: Vec<PosetNode>,
    /// `(lower, upper)` node ids.
    pub cover_edges: Vec<(usize, usize)>,
}

impl PosetDiagram {
    pub fn node_for(&self, members: &ElementSet) -> Option<&PosetNode> {
        self.nodes.iter().find(|n| &n.members == members)
    }

    pub fn add_tag(&mut self, members: &ElementSet, tag: &str) {
        if let Some(node) = self.nodes.iter_mut().find(|n| &n.members == members) {
            if !node.tags.iter().any(|t| t == tag) {
                node.tags.push(tag.to_string());
            }
        }
    }

    /// Whether `upper` is reachable from `lower` along cover edges.
    pub fn reaches(&self, lower: usize, upper: usize) -> bool {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![lower];
        while let Some(v) = stack.pop() {
            if v == upper {
                return true;
            }
            for &(a, b) in &self.cover_edges {
                if a == v && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        false
    }
}

/// Builds the Hasse diagram of `ideals` under inclusion.
///
/// Nodes follow the canonical subset order (size, then bitmask), so `{0}`
/// comes first and the whole ring last. Those two get the tags `zero` and
/// `whole`.
pub fn ideal_poset(ring: &RingSpec, ideals: &[ElementSet]) -> Result<PosetDiagram, VizError> {
    for ideal in ideals {
        if ideal.universe() != ring.size() {
            return Err(VizError::UniverseMismatch {
                subset: ideal.to_hex(),
                size: ring.size(),
            });
        }
    }
    let mut sorted = ideals.to_vec();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(VizError::DuplicateIdeal(w[0].to_hex()));
    }
    let (zero, whole) = (ring.zero_set(), ring.full_set());
    let nodes: Vec<PosetNode> = sorted
        .into_iter()
        .enumerate()
        .map(|(id, members)| {
            let mut tags = Vec::new();
            if members == zero {
                tags.push("zero".to_string());
            }
            if members == whole {
                tags.push("whole".to_string());
            }
            PosetNode {
                id,
                label: node_label(ring, &members),
                tags,
                members,
            }
        })
        .collect();

    let below = |a: &PosetNode, b: &PosetNode| a.members.is_proper_subset(&b.members);
    let mut cover_edges = Vec::new();
    for lower in &nodes {
        for upper in &nodes {
            if below(lower, upper) && !nodes.iter().any(|mid| below(lower, mid) && below(mid, upper)) {
                cover_edges.push((lower.id, upper.id));
            }
        }
    }
    Ok(PosetDiagram { nodes, cover_edges })
}

fn node_label(ring: &RingSpec, members: &ElementSet) -> String {
    let full: Vec<&str> = members.iter().map(|x| ring.label(x)).collect();
    let full = full.join(",");
    if full.chars().count() <= MAX_LABEL_CHARS {
        return full;
    }
    let digest = Sha256::digest(full.as_bytes());
    let head: String = full.chars().take(MAX_LABEL_CHARS).collect();
    let mut label = format!("{head}~");
    for byte in &digest[..4] {
        write!(label, "{byte:02x}").expect("writing to a String");
    }
    label
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders a diagram as a DOT digraph drawn bottom to top.
pub fn emit_dot(poset: &PosetDiagram) -> String {
    if poset.nodes.is_empty() {
        return "digraph { }\n".to_string();
    }
    let mut out = String::from("digraph ideals {\n  rankdir=BT;\n  node [shape=box];\n");
    for node in &poset.nodes {
        write!(out, "  n{} [label=\"{}\"", node.id, escape(&node.label)).unwrap();
        if !node.tags.is_empty() {
            write!(out, ", xlabel=\"{}\"", escape(&node.tags.join(" "))).unwrap();
        }
        out.push_str("];\n");
    }
    for (lower, upper) in &poset.cover_edges {
        writeln!(out, "  n{lower} -> n{upper};").unwrap();
    }
    out.push_str("}\n");
    out
}
