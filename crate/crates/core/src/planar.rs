//! Combinatorial planar maps underlying both link and graph diagrams.
//!
//! A node is a crossing or a graph vertex, given by the arc labels at its
//! ends in counterclockwise order. An arc joins the two slots carrying the
//! same label.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::uf::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Slot {
    pub node: usize,
    pub pos: usize,
}

impl Slot {
    pub fn new(node: usize, pos: usize) -> Self {
        Slot { node, pos }
    }
}

/// One side of an arc, traversed from `tail` to `head` with the face on its left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Side {
    pub label: u32,
    pub tail: Slot,
    pub head: Slot,
}

#[derive(Debug, Clone)]
pub(crate) struct Map<'a> {
    nodes: Vec<&'a [u32]>,
    ends: HashMap<u32, [Slot; 2]>,
}

impl<'a> Map<'a> {
    /// Indexes arc endpoints; every label must occur exactly twice.
    pub fn new(nodes: Vec<&'a [u32]>) -> Result<Self> {
        let mut seen: BTreeMap<u32, Vec<Slot>> = BTreeMap::new();
        for (n, labels) in nodes.iter().enumerate() {
            for (p, &l) in labels.iter().enumerate() {
                seen.entry(l).or_default().push(Slot::new(n, p));
            }
        }
        let mut ends = HashMap::with_capacity(seen.len());
        for (label, slots) in seen {
            if slots.len() != 2 {
                return Err(Error::malformed(format!(
                    "label {label} appears {} time{}, expected exactly 2",
                    slots.len(),
                    if slots.len() == 1 { "" } else { "s" }
                )));
            }
            ends.insert(label, [slots[0], slots[1]]);
        }
        Ok(Map { nodes, ends })
    }

    pub fn degree(&self, node: usize) -> usize {
        self.nodes[node].len()
    }

    pub fn label(&self, s: Slot) -> u32 {
        self.nodes[s.node][s.pos]
    }

    pub fn contains(&self, label: u32) -> bool {
        self.ends.contains_key(&label)
    }

    pub fn ends(&self, label: u32) -> Option<[Slot; 2]> {
        self.ends.get(&label).copied()
    }

    /// The slot at the other end of the arc leaving through `s`.
    pub fn across(&self, s: Slot) -> Slot {
        let [a, b] = self.ends[&self.label(s)];
        if a == s {
            b
        } else {
            a
        }
    }

    /// All faces, each as the cycle of arc sides bounding it.
    pub fn faces(&self) -> Vec<Vec<Side>> {
        let mut visited: HashMap<(Slot, Slot), bool> = HashMap::new();
        let mut starts: Vec<(Slot, Slot)> = Vec::new();
        for (n, labels) in self.nodes.iter().enumerate() {
            for p in 0..labels.len() {
                let tail = Slot::new(n, p);
                starts.push((tail, self.across(tail)));
            }
        }
        let mut faces = Vec::new();
        for start in starts {
            if visited.contains_key(&start) {
                continue;
            }
            let mut face = Vec::new();
            let (mut tail, mut head) = start;
            loop {
                visited.insert((tail, head), true);
                face.push(Side {
                    label: self.label(tail),
                    tail,
                    head,
                });
                let deg = self.degree(head.node);
                tail = Slot::new(head.node, (head.pos + deg - 1) % deg);
                head = self.across(tail);
                if (tail, head) == start {
                    break;
                }
            }
            faces.push(face);
        }
        faces
    }

    /// Connected component index of every node.
    pub fn node_components(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.nodes.len());
        for [a, b] in self.ends.values() {
            uf.union(a.node, b.node);
        }
        uf.classes()
    }

    /// Whether the counterclockwise orders describe a map on a union of spheres.
    pub fn is_planar(&self) -> bool {
        let (_, components) = self.node_components();
        let vertices = self.nodes.len() as i64;
        let edges = self.ends.len() as i64;
        let faces = self.faces().len() as i64;
        vertices - edges + faces == 2 * components as i64
    }

    /// Two sides of `x` and `y` bounding one common face, if any.
    pub fn common_face(&self, x: u32, y: u32) -> Option<(Side, Side)> {
        for face in self.faces() {
            let sx = face.iter().find(|s| s.label == x);
            let sy = face.iter().find(|s| s.label == y);
            if let (Some(&sx), Some(&sy)) = (sx, sy) {
                return Some((sx, sy));
            }
        }
        None
    }
}
