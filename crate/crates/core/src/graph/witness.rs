//! Symbolic recipes for witness graphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{realize_degree_sequence, Graph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    Clique(usize),
    /// Realized by Havel–Hakimi; vertex `i` of the part gets degree `seq[i]`.
    DegreeSeq(Vec<usize>),
}

impl Component {
    pub fn order(&self) -> usize {
        match self {
            Component::Clique(k) => *k,
            Component::DegreeSeq(seq) => seq.len(),
        }
    }

    pub fn realize(&self) -> Result<Graph> {
        match self {
            Component::Clique(k) => Graph::complete(*k),
            Component::DegreeSeq(seq) => realize_degree_sequence(seq)?.ok_or_else(|| {
                Error::InvalidArgument(format!("degree sequence {seq:?} is not graphic"))
            }),
        }
    }
}

/// Disjoint union of the listed components, in order, optionally complemented
/// as a whole. Vertex labels are assigned component by component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDescriptor {
    pub components: Vec<Component>,
    #[serde(default)]
    pub complemented: bool,
}

impl WitnessDescriptor {
    pub fn union(components: Vec<Component>) -> Self {
        WitnessDescriptor { components, complemented: false }
    }

    pub fn complement_of(components: Vec<Component>) -> Self {
        WitnessDescriptor { components, complemented: true }
    }

    /// `copies` cliques of order `k`, skipped entirely when `copies == 0` or
    /// `k == 0`.
    pub fn push_cliques(&mut self, copies: usize, k: usize) {
        if k > 0 {
            self.components.extend(std::iter::repeat_n(Component::Clique(k), copies));
        }
    }

    pub fn order(&self) -> usize {
        self.components.iter().map(Component::order).sum()
    }

    pub fn realize(&self) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for c in &self.components {
            g = g.disjoint_union(&c.realize()?)?;
        }
        Ok(if self.complemented { g.complement() } else { g })
    }
}

impl fmt::Display for WitnessDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.components.len() {
            let c = &self.components[i];
            let mut run = 1;
            while i + run < self.components.len() && self.components[i + run] == *c {
                run += 1;
            }
            let mult = if run > 1 { run.to_string() } else { String::new() };
            parts.push(match c {
                Component::Clique(k) => format!("{mult}K{k}"),
                Component::DegreeSeq(seq) => {
                    let hi = seq.iter().max().copied().unwrap_or(0);
                    let lo = seq.iter().min().copied().unwrap_or(0);
                    if hi == lo {
                        format!("{mult}R({},{hi})", seq.len())
                    } else {
                        format!("{mult}R({},{lo}..{hi})", seq.len())
                    }
                }
            });
            i += run;
        }
        let body = if parts.is_empty() { "K0".to_string() } else { parts.join(" u ") };
        if self.complemented {
            write!(f, "complement({body})")
        } else {
            f.write_str(&body)
        }
    }
}
