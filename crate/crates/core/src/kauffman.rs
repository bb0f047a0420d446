//! Embedded-graph diagrams and Kauffman's vertex replacements.
//!
//! A graph diagram is a PD code extended with vertex stars `V(h1,...,hk)`,
//! listing the incident half-edges counterclockwise. A replacement choice
//! picks, at every vertex simultaneously, one pair of half-edges to join into
//! a strand; the remaining half-edges become free ends. Tracing the result
//! and discarding every strand that ends in a free end leaves a link.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::cube::build_complex_with_cap;
use crate::diagram::{orient_linking_minimal, LinkDiagram};
use crate::error::{Error, Result};
use crate::homology::{homology_dims, GradedDims};
use crate::parse::{self, Record};
use crate::planar::{Map, Side, Slot};
use crate::uf::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexStar {
    id: usize,
    halfedges: Vec<u32>,
}

impl VertexStar {
    /// 1-based position of the vertex record in the input.
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn halfedges(&self) -> &[u32] {
        &self.halfedges
    }

    pub fn degree(&self) -> usize {
        self.halfedges.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphDiagram {
    crossings: Vec<[u32; 4]>,
    vertices: Vec<VertexStar>,
    unknots: Vec<u32>,
}

impl GraphDiagram {
    /// Validates crossings (under-strand at slots 0 and 2), vertex stars and
    /// crossingless loop labels.
    pub fn new(crossings: Vec<[u32; 4]>, stars: Vec<Vec<u32>>, unknots: Vec<u32>) -> Result<Self> {
        if let Some(k) = stars.iter().position(Vec::is_empty) {
            return Err(Error::malformed(format!("vertex {} has degree 0", k + 1)));
        }
        let vertices: Vec<VertexStar> = stars
            .into_iter()
            .enumerate()
            .map(|(k, halfedges)| VertexStar { id: k + 1, halfedges })
            .collect();
        let g = GraphDiagram {
            crossings,
            vertices,
            unknots,
        };
        let map = g.map()?;
        let mut seen = BTreeSet::new();
        for &u in &g.unknots {
            if map.contains(u) || !seen.insert(u) {
                return Err(Error::malformed(format!("unknot label {u} is already used")));
            }
        }
        if !map.is_planar() {
            return Err(Error::malformed("graph data does not describe a planar diagram"));
        }
        Ok(g)
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn vertices(&self) -> &[VertexStar] {
        &self.vertices
    }

    pub fn unknot_labels(&self) -> &[u32] {
        &self.unknots
    }

    /// Crossings first, then vertex stars.
    fn map(&self) -> Result<Map<'_>> {
        Map::new(
            self.crossings
                .iter()
                .map(|c| c.as_slice())
                .chain(self.vertices.iter().map(|v| v.halfedges.as_slice()))
                .collect(),
        )
    }

    fn max_label(&self) -> u32 {
        self.crossings
            .iter()
            .flatten()
            .chain(self.vertices.iter().flat_map(|v| v.halfedges.iter()))
            .chain(self.unknots.iter())
            .copied()
            .max()
            .unwrap_or(0)
    }

    fn stars(&self) -> Vec<Vec<u32>> {
        self.vertices.iter().map(|v| v.halfedges.clone()).collect()
    }

    /// Inserts a Reidemeister I kink into the edge segment `arc`. `variant`
    /// picks which of the two kinks is drawn.
    pub fn add_r1_kink(&self, arc: u32, variant: crate::Sign) -> Result<GraphDiagram> {
        let y = self.max_label() + 1;
        let mut crossings = self.crossings.clone();
        let mut stars = self.stars();
        let mut unknots = self.unknots.clone();
        let out = if let Some(idx) = unknots.iter().position(|&u| u == arc) {
            unknots.remove(idx);
            arc
        } else {
            let map = self.map()?;
            let [_, head] = map.ends(arc).ok_or(Error::UnknownArc(arc))?;
            let out = y + 1;
            set_label(&mut crossings, &mut stars, head, out);
            out
        };
        crossings.push(match variant {
            crate::Sign::Positive => [arc, out, y, y],
            crate::Sign::Negative => [arc, y, y, out],
        });
        GraphDiagram::new(crossings, stars, unknots)
    }

    /// Pushes a finger of `arc1` over `arc2` through a common face.
    pub fn add_r2_fingers(&self, arc1: u32, arc2: u32) -> Result<GraphDiagram> {
        if arc1 == arc2 {
            return Err(Error::IdenticalArcs(arc1));
        }
        let map = self.map()?;
        let is_loop = |x: u32| self.unknots.contains(&x);
        for x in [arc1, arc2] {
            if !is_loop(x) && !map.contains(x) {
                return Err(Error::UnknownArc(x));
            }
        }
        let any_side = |x: u32| -> Option<Side> {
            map.ends(x).map(|[tail, head]| Side { label: x, tail, head })
        };
        let (s1, s2) = if is_loop(arc1) || is_loop(arc2) {
            (any_side(arc1), any_side(arc2))
        } else {
            let (comp, _) = map.node_components();
            if comp[map.ends(arc1).unwrap()[0].node] != comp[map.ends(arc2).unwrap()[0].node] {
                (any_side(arc1), any_side(arc2))
            } else {
                let (a, b) = map.common_face(arc1, arc2).ok_or(Error::NoCommonFace(arc1, arc2))?;
                (Some(a), Some(b))
            }
        };
        let base = self.max_label();
        let (m, n) = (base + 1, base + 2);
        let mut crossings = self.crossings.clone();
        let mut stars = self.stars();
        let mut unknots = self.unknots.clone();
        unknots.retain(|&u| u != arc1 && u != arc2);
        let mut far = |side: Option<Side>, own: u32, fresh: u32| match side {
            Some(s) => {
                set_label(&mut crossings, &mut stars, s.head, fresh);
                fresh
            }
            None => own,
        };
        let x1b = far(s1, arc1, base + 3);
        let x2b = far(s2, arc2, base + 4);
        crossings.push([arc2, m, n, x1b]);
        crossings.push([n, m, x2b, arc1]);
        GraphDiagram::new(crossings, stars, unknots)
    }
}

fn set_label(crossings: &mut [[u32; 4]], stars: &mut [Vec<u32>], s: Slot, label: u32) {
    if s.node < crossings.len() {
        crossings[s.node][s.pos] = label;
    } else {
        stars[s.node - crossings.len()][s.pos] = label;
    }
}

impl fmt::Display for GraphDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|[a, b, c, d]| format!("X({a},{b},{c},{d})"))
            .collect();
        for v in &self.vertices {
            let labels: Vec<String> = v.halfedges.iter().map(u32::to_string).collect();
            parts.push(format!("V({})", labels.join(",")));
        }
        parts.extend(self.unknots.iter().map(|_| "U".to_string()));
        f.write_str(&parts.join(" "))
    }
}

/// Parses graph PD text: `X(...)` crossings, `V(...)` vertex stars, `U` loops.
pub fn parse_graph(text: &str) -> Result<GraphDiagram> {
    let mut crossings = Vec::new();
    let mut stars = Vec::new();
    let mut loops = 0u32;
    for r in parse::records(text)? {
        match r {
            Record::Crossing(c) => crossings.push(c),
            Record::Vertex(v) => stars.push(v),
            Record::Unknot => loops += 1,
        }
    }
    let max = crossings.iter().flatten().chain(stars.iter().flatten()).copied().max().unwrap_or(0);
    GraphDiagram::new(crossings, stars, (1..=loops).map(|k| max + k).collect())
}

/// At every vertex (keyed by id), the positions of the two joined half-edges.
/// Degree-1 vertices have nothing to join and carry no entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReplacementChoice {
    pairs: BTreeMap<usize, [usize; 2]>,
}

impl ReplacementChoice {
    pub fn new(pairs: BTreeMap<usize, [usize; 2]>) -> Self {
        ReplacementChoice { pairs }
    }

    /// Builds a choice from half-edge labels. For a loop edge whose label
    /// occurs twice at one vertex, the pair `(l, l)` joins its two ends.
    pub fn from_labels(g: &GraphDiagram, pairs: &[(usize, u32, u32)]) -> Result<Self> {
        let mut out = BTreeMap::new();
        for &(id, a, b) in pairs {
            let v = g
                .vertices
                .iter()
                .find(|v| v.id == id)
                .ok_or_else(|| Error::InvalidChoice(format!("no vertex {id}")))?;
            let pa = v.halfedges.iter().position(|&h| h == a);
            let pb = v.halfedges.iter().rposition(|&h| h == b);
            match (pa, pb) {
                (Some(pa), Some(pb)) if pa != pb => {
                    out.insert(id, [pa.min(pb), pa.max(pb)]);
                }
                _ => {
                    return Err(Error::InvalidChoice(format!(
                        "half-edges {a} and {b} are not two distinct ends at vertex {id}"
                    )))
                }
            }
        }
        Ok(ReplacementChoice { pairs: out })
    }

    pub fn pairs(&self) -> &BTreeMap<usize, [usize; 2]> {
        &self.pairs
    }

    /// Human-readable form with half-edge labels, e.g. `v1:{1,5} v2:{3,6}`.
    pub fn describe(&self, g: &GraphDiagram) -> String {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(id, [a, b])| match g.vertices.iter().find(|v| v.id == *id) {
                Some(v) if *b < v.degree() => {
                    format!("v{id}:{{{},{}}}", v.halfedges[*a], v.halfedges[*b])
                }
                _ => format!("v{id}:{{?}}"),
            })
            .collect();
        parts.join(" ")
    }
}

/// All simultaneous replacement choices, last vertex varying fastest. With
/// `adjacent_only`, only cyclically adjacent half-edges are paired. A
/// degree-1 vertex contributes a factor of one: its half-edge is always free.
pub fn enumerate_choices(g: &GraphDiagram, adjacent_only: bool) -> Vec<ReplacementChoice> {
    let per_vertex: Vec<Vec<[usize; 2]>> = g
        .vertices
        .iter()
        .map(|v| vertex_pairs(v.degree(), adjacent_only))
        .collect();
    let mut out = vec![BTreeMap::new()];
    for (v, options) in g.vertices.iter().zip(&per_vertex) {
        if v.degree() == 1 {
            continue;
        }
        out = out
            .into_iter()
            .flat_map(|partial: BTreeMap<usize, [usize; 2]>| {
                options.iter().map(move |&p| {
                    let mut next = partial.clone();
                    next.insert(v.id, p);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(ReplacementChoice::new).collect()
}

fn vertex_pairs(degree: usize, adjacent_only: bool) -> Vec<[usize; 2]> {
    let mut pairs = Vec::new();
    for a in 0..degree {
        for b in a + 1..degree {
            let adjacent = b == a + 1 || (a == 0 && b == degree - 1);
            if !adjacent_only || adjacent {
                pairs.push([a, b]);
            }
        }
    }
    pairs
}

/// Result of replacing every vertex: crossings, two-ended joins made at the
/// vertices, and free ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tangle {
    crossings: Vec<[u32; 4]>,
    joins: Vec<[u32; 2]>,
    free_ends: Vec<u32>,
    unknots: Vec<u32>,
}

impl Tangle {
    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn joins(&self) -> &[[u32; 2]] {
        &self.joins
    }

    pub fn free_ends(&self) -> &[u32] {
        &self.free_ends
    }
}

pub fn apply_replacement(g: &GraphDiagram, c: &ReplacementChoice) -> Result<Tangle> {
    let ids: BTreeSet<usize> = g
        .vertices
        .iter()
        .filter(|v| v.degree() > 1)
        .map(|v| v.id)
        .collect();
    let chosen: BTreeSet<usize> = c.pairs.keys().copied().collect();
    if ids != chosen {
        return Err(Error::InvalidChoice(
            "the choice must cover exactly the vertices of degree 2 or more".into(),
        ));
    }
    let mut joins = Vec::with_capacity(g.vertices.len());
    let mut free_ends = Vec::new();
    for v in &g.vertices {
        if v.degree() == 1 {
            free_ends.push(v.halfedges[0]);
            continue;
        }
        let [a, b] = c.pairs[&v.id];
        if a == b || a >= v.degree() || b >= v.degree() {
            return Err(Error::InvalidChoice(format!(
                "positions {a} and {b} are not two distinct half-edges of vertex {}",
                v.id
            )));
        }
        joins.push([v.halfedges[a], v.halfedges[b]]);
        free_ends.extend(
            v.halfedges
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != a && p != b)
                .map(|(_, &h)| h),
        );
    }
    Ok(Tangle {
        crossings: g.crossings.clone(),
        joins,
        free_ends,
        unknots: g.unknots.clone(),
    })
}

/// Keeps the closed components of a tangle as a link diagram.
///
/// Strands ending in free ends are discarded. A crossing between two
/// discarded passages disappears; a crossing with one discarded passage is
/// removed and the retained strand runs straight through it. Graph edges
/// carry no orientation, so components are oriented by
/// [`orient_linking_minimal`].
pub fn close_and_prune(t: &Tangle) -> Result<LinkDiagram> {
    let nc = t.crossings.len();
    let nj = t.joins.len();
    let nodes: Vec<&[u32]> = t
        .crossings
        .iter()
        .map(|c| c.as_slice())
        .chain(t.joins.iter().map(|j| j.as_slice()))
        .chain(t.free_ends.iter().map(std::slice::from_ref))
        .collect();
    let map = Map::new(nodes)?;
    let pass_through = |s: Slot| -> Option<Slot> {
        if s.node < nc {
            Some(Slot::new(s.node, (s.pos + 2) % 4))
        } else if s.node < nc + nj {
            Some(Slot::new(s.node, 1 - s.pos))
        } else {
            None
        }
    };

    // open[k][strand]: passage of crossing k lies on a discarded strand
    let mut open = vec![[false; 2]; nc];
    let mut open_labels = BTreeSet::new();
    for e in 0..t.free_ends.len() {
        let mut s = Slot::new(nc + nj + e, 0);
        loop {
            open_labels.insert(map.label(s));
            let entered = map.across(s);
            if entered.node < nc {
                open[entered.node][entered.pos % 2] = true;
            }
            match pass_through(entered) {
                Some(next) => s = next,
                None => break,
            }
        }
    }

    let keep: Vec<bool> = open.iter().map(|o| !o[0] && !o[1]).collect();
    let mut labels: Vec<u32> = t
        .crossings
        .iter()
        .flatten()
        .chain(t.joins.iter().flatten())
        .chain(&t.free_ends)
        .copied()
        .collect();
    labels.sort_unstable();
    labels.dedup();
    let idx = |l: u32| labels.binary_search(&l).expect("label");
    let mut uf = UnionFind::new(labels.len());
    for j in &t.joins {
        uf.union(idx(j[0]), idx(j[1]));
    }
    for (k, c) in t.crossings.iter().enumerate() {
        if keep[k] {
            continue;
        }
        for strand in 0..2 {
            if !open[k][strand] {
                uf.union(idx(c[strand]), idx(c[strand + 2]));
            }
        }
    }
    let mut rep: BTreeMap<usize, u32> = BTreeMap::new();
    for &l in &labels {
        let r = uf.find(idx(l));
        rep.entry(r).or_insert(l);
    }
    let mut find = |l: u32| rep[&uf.find(idx(l))];

    let raw: Vec<[u32; 4]> = t
        .crossings
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(c, _)| c.map(&mut find))
        .collect();

    // closed strands that kept no crossing become crossingless loops
    let used: BTreeSet<u32> = raw.iter().flatten().copied().collect();
    let closed: BTreeSet<u32> = labels
        .iter()
        .filter(|l| !open_labels.contains(l))
        .map(|&l| find(l))
        .collect();
    let mut unknots: Vec<u32> = closed.into_iter().filter(|l| !used.contains(l)).collect();
    unknots.extend(&t.unknots);
    unknots.sort_unstable();

    let link = LinkDiagram::orient_raw(&raw, &vec![None; raw.len()], unknots)?;
    Ok(orient_linking_minimal(&link))
}

#[derive(Debug, Clone, Copy)]
pub struct FamilyOptions {
    /// Collapse members with equal homology and drop empty links.
    pub dedupe: bool,
    /// Only join cyclically adjacent half-edges (rigid vertices).
    pub adjacent_only: bool,
    pub cap: usize,
    /// Compute homology of every member even without deduplication.
    pub compute_dims: bool,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            dedupe: true,
            adjacent_only: false,
            cap: crate::DEFAULT_CROSSING_CAP,
            compute_dims: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub choice: ReplacementChoice,
    pub link: LinkDiagram,
    pub dims: Option<GradedDims>,
}

/// Every member of the family in choice order, deduplicated on request.
pub fn family_members(g: &GraphDiagram, opts: &FamilyOptions) -> Result<Vec<FamilyMember>> {
    let choices = enumerate_choices(g, opts.adjacent_only);
    let want_dims = opts.dedupe || opts.compute_dims;
    let members: Vec<FamilyMember> = choices
        .into_par_iter()
        .map(|choice| {
            let link = close_and_prune(&apply_replacement(g, &choice)?)?;
            let dims = if want_dims {
                if link.crossing_count() > opts.cap {
                    return Err(Error::MemberCapExceeded {
                        choice: choice.describe(g),
                        crossings: link.crossing_count(),
                        cap: opts.cap,
                    });
                }
                Some(homology_dims(&build_complex_with_cap(&link, opts.cap)?)?)
            } else {
                None
            };
            Ok(FamilyMember { choice, link, dims })
        })
        .collect::<Result<_>>()?;
    if !opts.dedupe {
        return Ok(members);
    }
    let mut seen = BTreeSet::new();
    Ok(members
        .into_iter()
        .filter(|m| m.link.component_count() > 0)
        .filter(|m| {
            let key: Vec<_> = m.dims.as_ref().expect("computed").iter().collect();
            seen.insert(key)
        })
        .collect())
}

/// The family of links `T(G)`; with `dedupe`, one link per homology type.
pub fn family(g: &GraphDiagram, dedupe: bool) -> Result<Vec<LinkDiagram>> {
    let opts = FamilyOptions {
        dedupe,
        ..FamilyOptions::default()
    };
    Ok(family_members(g, &opts)?.into_iter().map(|m| m.link).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const THETA: &str = "V(1,2,3) V(3,2,1)";
    const HANDCUFF: &str = "V(1,1,2) V(2,3,3)";

    #[test]
    fn parses_graphs() {
        let g = parse_graph("V(1,2) V(2,1)").unwrap();
        assert_eq!((g.vertices().len(), g.crossings().len()), (2, 0));
        assert!(parse_graph(THETA).is_ok());
        assert!(parse_graph(HANDCUFF).is_ok());
        let err = parse_graph("V(1,1) V()").unwrap_err();
        assert!(err.to_string().contains("degree 0"), "{err}");
        assert!(matches!(parse_graph("V(1,2,3) V(3,2)"), Err(Error::Malformed(_))));
    }

    #[test]
    fn choice_counts() {
        // one trivalent vertex with a loop and a pendant edge
        let pendant = parse_graph("V(1,1,2) V(2)").unwrap();
        assert_eq!(enumerate_choices(&pendant, false).len(), 3);
        assert_eq!(enumerate_choices(&parse_graph(THETA).unwrap(), false).len(), 9);
        let g4 = parse_graph("V(1,2,2,1)").unwrap();
        assert_eq!(enumerate_choices(&g4, false).len(), 6);
        assert_eq!(enumerate_choices(&g4, true).len(), 4);
    }

    #[test]
    fn degree_two_vertex_is_a_join() {
        let g = parse_graph("V(1,2) V(2,1)").unwrap();
        let choices = enumerate_choices(&g, false);
        assert_eq!(choices.len(), 1);
        let t = apply_replacement(&g, &choices[0]).unwrap();
        assert!(t.free_ends().is_empty());
        let link = close_and_prune(&t).unwrap();
        assert_eq!((link.crossing_count(), link.component_count()), (0, 1));
    }

    #[test]
    fn free_end_counts() {
        let g = parse_graph(THETA).unwrap();
        for c in enumerate_choices(&g, false) {
            let t = apply_replacement(&g, &c).unwrap();
            assert_eq!(t.free_ends().len(), 2);
            assert_eq!(t.joins().len(), 2);
        }
    }

    #[test]
    fn bad_choices() {
        let g = parse_graph(THETA).unwrap();
        let mut pairs = BTreeMap::new();
        pairs.insert(1, [0, 1]);
        assert!(matches!(
            apply_replacement(&g, &ReplacementChoice::new(pairs.clone())),
            Err(Error::InvalidChoice(_))
        ));
        pairs.insert(2, [0, 5]);
        assert!(matches!(
            apply_replacement(&g, &ReplacementChoice::new(pairs)),
            Err(Error::InvalidChoice(_))
        ));
        assert!(ReplacementChoice::from_labels(&g, &[(1, 1, 9), (2, 1, 2)]).is_err());
        let ok = ReplacementChoice::from_labels(&g, &[(1, 1, 2), (2, 2, 1)]).unwrap();
        assert_eq!(ok.describe(&g), "v1:{1,2} v2:{2,1}");
    }

    #[test]
    fn all_open_gives_empty_link() {
        // a path whose ends are both free
        let g = parse_graph("V(1) V(1,2) V(2)").unwrap();
        let choices = enumerate_choices(&g, false);
        assert_eq!(choices.len(), 1);
        let t = apply_replacement(&g, &choices[0]).unwrap();
        assert_eq!(t.free_ends().len(), 2);
        assert_eq!(close_and_prune(&t).unwrap().component_count(), 0);
    }

    #[test]
    fn theta_family() {
        let g = parse_graph(THETA).unwrap();
        let all = family(&g, false).unwrap();
        assert_eq!(all.len(), 9);
        let unknots = all.iter().filter(|l| l.component_count() == 1).count();
        let empty = all.iter().filter(|l| l.component_count() == 0).count();
        assert_eq!((unknots, empty), (3, 6));
        let set = family(&g, true).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(set[0].component_count(), 1);
    }

    #[test]
    fn discarded_kink_leaves_no_loop() {
        let g = parse_graph("X(4,1,3,2) X(2,6,5,4) X(7,9,8,8) V(1,5,7) V(6,3,9)").unwrap();
        let c = ReplacementChoice::from_labels(&g, &[(1, 1, 5), (2, 6, 9)]).unwrap();
        let link = close_and_prune(&apply_replacement(&g, &c).unwrap()).unwrap();
        assert_eq!((link.crossing_count(), link.component_count()), (0, 1));
    }

    #[test]
    fn members_are_linking_minimal() {
        // the clasp survives as the Hopf link with both crossings negative
        let g = parse_graph("X(4,1,3,2) X(2,6,5,4) V(1,5,7) V(6,3,7)").unwrap();
        let c = ReplacementChoice::from_labels(&g, &[(1, 1, 5), (2, 6, 3)]).unwrap();
        let link = close_and_prune(&apply_replacement(&g, &c).unwrap()).unwrap();
        assert_eq!((link.n_plus(), link.n_minus()), (0, 2));
        let kinked = g.add_r2_fingers(7, 1).unwrap();
        for m in family(&kinked, false).unwrap() {
            if m.component_count() == 2 && m.crossing_count() >= 2 {
                assert!(m.n_minus() >= 2, "{m}");
            }
        }
    }
}
