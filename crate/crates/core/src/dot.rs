//! Graphviz export of Hasse diagrams.
//!
//! Nodes are emitted in canonical order as `n0`, `n1`, ..; edges point from
//! the upper element of a covering pair to the lower one.

use std::fmt::Write;

use crate::error::{PlottError, Result};
use crate::geometry::ConvexFamily;
use crate::order::PartialOrder;
use crate::word::WordSet;

pub const MAX_NODES: usize = 2000;

fn render(name: &str, labels: &[String], edges: &[(usize, usize)]) -> Result<String> {
    if labels.len() > MAX_NODES {
        return Err(PlottError::Capacity {
            size: labels.len(),
            cap: MAX_NODES,
        });
    }
    let mut out = String::new();
    let _ = writeln!(out, "digraph {name} {{");
    for (i, label) in labels.iter().enumerate() {
        let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
        let _ = writeln!(out, "  n{i} [label=\"{escaped}\"];");
    }
    for (hi, lo) in edges {
        let _ = writeln!(out, "  n{hi} -> n{lo};");
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn poset_dot(order: &PartialOrder) -> Result<String> {
    let labels: Vec<String> = order.ground().symbols().to_vec();
    render("poset", &labels, &order.covers())
}

/// Inclusion Hasse diagram of a family, members in ascending bitmask order.
pub fn family_dot(family: &ConvexFamily) -> Result<String> {
    let members = family.members();
    let ground = family.ground();
    let labels: Vec<String> = members
        .iter()
        .map(|&m| {
            if m.is_empty() {
                "∅".to_string()
            } else {
                ground.names(m).join(",")
            }
        })
        .collect();
    let mut edges = Vec::new();
    for (i, &big) in members.iter().enumerate() {
        for (j, &small) in members.iter().enumerate() {
            if i == j || !small.is_subset_of(big) {
                continue;
            }
            let between = members
                .iter()
                .any(|&k| k != big && k != small && small.is_subset_of(k) && k.is_subset_of(big));
            if !between {
                edges.push((i, j));
            }
        }
    }
    render("family", &labels, &edges)
}

/// Prefix order on a word set; a word covers its longest proper prefix in
/// the set.
pub fn word_order_dot(words: &WordSet) -> Result<String> {
    let list = words.words();
    let labels: Vec<String> = list.iter().map(ToString::to_string).collect();
    let mut edges = Vec::new();
    for (i, w) in list.iter().enumerate() {
        let parent = (0..w.len())
            .rev()
            .map(|k| w.prefix(k))
            .find_map(|p| list.iter().position(|v| *v == p));
        if let Some(j) = parent {
            edges.push((i, j));
        }
    }
    edges.sort();
    render("words", &labels, &edges)
}
