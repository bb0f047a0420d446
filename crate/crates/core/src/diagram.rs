//! Oriented link diagrams given by planar-diagram (PD) codes.
//!
//! A crossing `X(a,b,c,d)` lists its four arc labels counterclockwise,
//! starting from the incoming under-strand, so the under-strand runs
//! `a -> c` and the over-strand joins `b` and `d`. Crossingless unknot
//! components are written `U`; they get arc labels above every label used by
//! crossings so that moves can address them.
//!
//! Orientation: a component that passes under some crossing is oriented the
//! way its PD tuples say, provided they agree. Otherwise (over-only
//! components, or tuples disagreeing along one component) the component is
//! traced from its least arc label toward the smaller neighbouring label.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::parse::{self, Record};
use crate::planar::{Map, Side, Slot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcLabel(pub u32);

impl fmt::Display for ArcLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// An oriented crossing. `arcs[0]` is the incoming under-strand; the sign
/// fixes which over-slot is incoming (slot 3 for positive, slot 1 for
/// negative).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    arcs: [u32; 4],
    sign: Sign,
}

impl Crossing {
    /// Normalizes a raw tuple (under-strand at slots 0 and 2) given the slots
    /// where the under- and over-strands enter.
    pub(crate) fn from_raw(raw: [u32; 4], under_in: usize, over_in: usize) -> Self {
        debug_assert!(under_in.is_multiple_of(2) && over_in % 2 == 1);
        let shift = under_in;
        let arcs = [0, 1, 2, 3].map(|i| raw[(i + shift) % 4]);
        let sign = if (over_in + 4 - shift) % 4 == 3 {
            Sign::Positive
        } else {
            Sign::Negative
        };
        Crossing { arcs, sign }
    }

    pub fn arcs(&self) -> [ArcLabel; 4] {
        self.arcs.map(ArcLabel)
    }

    pub(crate) fn raw(&self) -> [u32; 4] {
        self.arcs
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub(crate) fn over_in(&self) -> usize {
        match self.sign {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    fn is_incoming(&self, pos: usize) -> bool {
        pos == 0 || pos == self.over_in()
    }

    /// Exchanges over and under, keeping the strand orientations.
    pub fn mirrored(&self) -> Crossing {
        Crossing::from_raw(
            [0, 1, 2, 3].map(|i| self.arcs[(i + 1) % 4]),
            self.over_in() - 1,
            3,
        )
    }

    fn relabeled(&self, f: impl Fn(u32) -> u32) -> Crossing {
        Crossing {
            arcs: self.arcs.map(f),
            sign: self.sign,
        }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.arcs;
        write!(f, "X({a},{b},{c},{d})")
    }
}

/// A validated, oriented link diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    unknots: Vec<u32>,
    components: Vec<Vec<u32>>,
    n_plus: usize,
    n_minus: usize,
}

impl LinkDiagram {
    pub fn empty() -> Self {
        LinkDiagram::from_oriented(Vec::new(), Vec::new()).expect("empty diagram is valid")
    }

    pub fn unknot() -> Self {
        LinkDiagram::from_oriented(Vec::new(), vec![1]).expect("unknot is valid")
    }

    /// Crossingless unlink with `k` components.
    pub fn unlink(k: usize) -> Self {
        LinkDiagram::from_oriented(Vec::new(), (1..=k as u32).collect()).expect("unlink is valid")
    }

    /// Builds a diagram from already oriented crossings and the labels of its
    /// crossingless components, checking every structural invariant.
    pub fn from_oriented(crossings: Vec<Crossing>, unknots: Vec<u32>) -> Result<Self> {
        let map = Map::new(crossings.iter().map(|c| c.arcs.as_slice()).collect())?;
        let mut seen = BTreeSet::new();
        for &u in &unknots {
            if u == 0 {
                return Err(Error::malformed("arc labels must be positive"));
            }
            if map.contains(u) || !seen.insert(u) {
                return Err(Error::malformed(format!(
                    "unknot label {u} is already used by another arc"
                )));
            }
        }
        for (k, c) in crossings.iter().enumerate() {
            for pos in 0..4 {
                let other = map.across(Slot::new(k, pos));
                if c.is_incoming(pos) == crossings[other.node].is_incoming(other.pos) {
                    return Err(Error::malformed(format!(
                        "arc {} is not consistently oriented",
                        c.arcs[pos]
                    )));
                }
            }
        }
        if !map.is_planar() {
            return Err(Error::malformed("crossing data does not describe a planar diagram"));
        }

        let mut components = trace_oriented(&crossings, &map);
        components.extend(unknots.iter().map(|&u| vec![u]));
        components.sort_by_key(|c| c.iter().copied().min());
        let n_plus = crossings.iter().filter(|c| c.sign == Sign::Positive).count();
        let n_minus = crossings.len() - n_plus;
        Ok(LinkDiagram {
            crossings,
            unknots,
            components,
            n_plus,
            n_minus,
        })
    }

    /// Orients raw tuples (under-strand at slots 0 and 2). `known[k]`, when
    /// present, gives the incoming (under, over) slots of crossing `k`; each
    /// component containing such a crossing follows it, the others use the
    /// default orientation rule.
    pub(crate) fn orient_raw(
        raw: &[[u32; 4]],
        known: &[Option<(usize, usize)>],
        unknots: Vec<u32>,
    ) -> Result<Self> {
        let map = Map::new(raw.iter().map(|c| c.as_slice()).collect())?;
        // incoming slot per (crossing, strand); strand 0 = under, 1 = over
        let mut incoming = vec![[usize::MAX; 2]; raw.len()];
        let mut visited = vec![[false; 2]; raw.len()];

        for start in 0..raw.len() {
            for strand in 0..2 {
                if visited[start][strand] {
                    continue;
                }
                // forward traversal: list of (crossing, entering slot)
                let mut passages = Vec::new();
                let mut exits = Vec::new();
                let mut slot = Slot::new(start, strand);
                loop {
                    visited[slot.node][slot.pos % 2] = true;
                    passages.push(slot);
                    let exit = Slot::new(slot.node, (slot.pos + 2) % 4);
                    exits.push(map.label(exit));
                    slot = map.across(exit);
                    if slot == Slot::new(start, strand) {
                        break;
                    }
                }
                let forward = component_direction(&map, &passages, &exits, known)?;
                for p in passages {
                    let pos = if forward { p.pos } else { (p.pos + 2) % 4 };
                    incoming[p.node][p.pos % 2] = pos;
                }
            }
        }

        let crossings = raw
            .iter()
            .zip(&incoming)
            .map(|(&r, &[u, o])| Crossing::from_raw(r, u, o))
            .collect();
        LinkDiagram::from_oriented(crossings, unknots)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Labels of the crossingless unknot components.
    pub fn unknot_labels(&self) -> &[u32] {
        &self.unknots
    }

    /// Arc labels of every component in orientation order, each starting at
    /// its least label.
    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn n_plus(&self) -> usize {
        self.n_plus
    }

    pub fn n_minus(&self) -> usize {
        self.n_minus
    }

    /// Every arc label in use, crossingless components included.
    pub fn arc_labels(&self) -> Vec<ArcLabel> {
        let mut labels: Vec<u32> = self.components.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.into_iter().map(ArcLabel).collect()
    }

    fn max_label(&self) -> u32 {
        self.components.iter().flatten().copied().max().unwrap_or(0)
    }

    fn map(&self) -> Map<'_> {
        Map::new(self.crossings.iter().map(|c| c.arcs.as_slice()).collect())
            .expect("validated diagram")
    }

    /// Same projection with crossing `k` switched.
    pub fn with_crossing_changed(&self, k: usize) -> LinkDiagram {
        let mut crossings = self.crossings.clone();
        crossings[k] = crossings[k].mirrored();
        LinkDiagram::from_oriented(crossings, self.unknots.clone()).expect("crossing change")
    }

    /// Reverses every component `k` with `reverse[k]` set.
    pub fn with_components_reversed(&self, reverse: &[bool]) -> LinkDiagram {
        assert_eq!(reverse.len(), self.components.len(), "one flag per component");
        let comp = self.component_of_label();
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let under = if reverse[comp[&c.arcs[0]]] { 2 } else { 0 };
                let over = if reverse[comp[&c.arcs[1]]] { 4 - c.over_in() } else { c.over_in() };
                Crossing::from_raw(c.arcs, under, over)
            })
            .collect();
        LinkDiagram::from_oriented(crossings, self.unknots.clone()).expect("reversal")
    }

    fn component_of_label(&self) -> std::collections::HashMap<u32, usize> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(k, c)| c.iter().map(move |&l| (l, k)))
            .collect()
    }

    /// Relabels arcs `1..` along the components in order. Two diagrams that
    /// differ only by arc names and crossing order get the same PD text.
    pub fn canonical(&self) -> LinkDiagram {
        let mut relabel = std::collections::HashMap::new();
        let mut next = 1u32;
        let (loops, rest): (Vec<&Vec<u32>>, Vec<&Vec<u32>>) = self
            .components
            .iter()
            .partition(|c| c.len() == 1 && self.unknots.contains(&c[0]));
        for comp in rest.into_iter().chain(loops) {
            for &l in comp {
                relabel.insert(l, next);
                next += 1;
            }
        }
        let mut crossings: Vec<Crossing> =
            self.crossings.iter().map(|c| c.relabeled(|l| relabel[&l])).collect();
        crossings.sort_by_key(|c| c.arcs);
        let unknots = self.unknots.iter().map(|l| relabel[l]).collect();
        LinkDiagram::from_oriented(crossings, unknots).expect("relabeling keeps validity")
    }

    pub fn to_pd_string(&self) -> String {
        let mut parts: Vec<String> = self.crossings.iter().map(|c| c.to_string()).collect();
        parts.extend(self.unknots.iter().map(|_| "U".to_string()));
        parts.join(" ")
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

fn trace_oriented(crossings: &[Crossing], map: &Map<'_>) -> Vec<Vec<u32>> {
    let mut used = vec![[false; 2]; crossings.len()];
    let mut comps = Vec::new();
    for k in 0..crossings.len() {
        for start_in in [0, crossings[k].over_in()] {
            if used[k][start_in % 2] {
                continue;
            }
            let mut labels = Vec::new();
            let mut slot = Slot::new(k, start_in);
            loop {
                used[slot.node][slot.pos % 2] = true;
                let exit = Slot::new(slot.node, (slot.pos + 2) % 4);
                labels.push(map.label(exit));
                slot = map.across(exit);
                if slot == Slot::new(k, start_in) {
                    break;
                }
            }
            let least = labels.iter().enumerate().min_by_key(|(_, &l)| l).unwrap().0;
            labels.rotate_left(least);
            comps.push(labels);
        }
    }
    comps
}

/// Decides whether a traced component keeps its traversal direction.
fn component_direction(
    map: &Map<'_>,
    passages: &[Slot],
    exits: &[u32],
    known: &[Option<(usize, usize)>],
) -> Result<bool> {
    let mut vote: Option<bool> = None;
    for p in passages {
        if let Some(Some((under_in, over_in))) = known.get(p.node) {
            let want = if p.pos % 2 == 0 { *under_in } else { *over_in };
            let agrees = want == p.pos;
            match vote {
                Some(v) if v != agrees => {
                    return Err(Error::malformed("inconsistent orientation hints"))
                }
                _ => vote = Some(agrees),
            }
        }
    }
    if let Some(v) = vote {
        return Ok(v);
    }

    let unders: Vec<usize> = passages.iter().filter(|p| p.pos % 2 == 0).map(|p| p.pos).collect();
    if !unders.is_empty() {
        if unders.iter().all(|&p| p == 0) {
            return Ok(true);
        }
        if unders.iter().all(|&p| p == 2) {
            return Ok(false);
        }
    }

    // exits[i] is the arc leaving passage i; it enters passage i + 1
    let m = exits.len();
    let i = (0..m).min_by_key(|&i| exits[i]).unwrap();
    let ahead = exits[(i + 1) % m];
    let behind = exits[(i + m - 1) % m];
    if ahead != behind {
        return Ok(ahead < behind);
    }
    let head_forward = passages[(i + 1) % m];
    let [a, b] = map.ends(exits[i]).expect("traced label");
    let head_backward = if a == head_forward { b } else { a };
    Ok(head_forward < head_backward)
}

/// Parses PD text into a validated, oriented diagram.
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    from_records(parse::records(text)?)
}

/// Parses one diagram per non-comment line.
pub fn parse_pd_lines(text: &str) -> Result<Vec<LinkDiagram>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let records = parse::line_records(line, idx + 1)?;
        if !records.is_empty() {
            out.push(from_records(records)?);
        }
    }
    Ok(out)
}

fn from_records(records: Vec<Record>) -> Result<LinkDiagram> {
    let mut raw = Vec::new();
    let mut unknots = 0usize;
    for r in records {
        match r {
            Record::Crossing(c) => raw.push(c),
            Record::Unknot => unknots += 1,
            Record::Vertex(_) => {
                return Err(Error::malformed("vertex records are only allowed in graph diagrams"))
            }
        }
    }
    let max = raw.iter().flatten().copied().max().unwrap_or(0);
    let unknot_labels = (1..=unknots as u32).map(|k| max + k).collect();
    LinkDiagram::orient_raw(&raw, &vec![None; raw.len()], unknot_labels)
}

/// Counts of positive and negative crossings.
pub fn crossing_signs(d: &LinkDiagram) -> (usize, usize) {
    (d.n_plus, d.n_minus)
}

/// The mirror diagram: every crossing switched, orientations kept.
pub fn mirror(d: &LinkDiagram) -> LinkDiagram {
    let crossings = d.crossings.iter().map(Crossing::mirrored).collect();
    LinkDiagram::from_oriented(crossings, d.unknots.clone()).expect("mirror keeps validity")
}

/// Places `d2` beside `d1`, shifting its labels past those of `d1`.
pub fn disjoint_union(d1: &LinkDiagram, d2: &LinkDiagram) -> LinkDiagram {
    let shift = d1.max_label();
    let mut crossings = d1.crossings.clone();
    crossings.extend(d2.crossings.iter().map(|c| c.relabeled(|l| l + shift)));
    let mut unknots = d1.unknots.clone();
    unknots.extend(d2.unknots.iter().map(|l| l + shift));
    LinkDiagram::from_oriented(crossings, unknots).expect("disjoint union keeps validity")
}

/// Reorients components so that the total linking number is as small as
/// possible, which is the same as making `n_-` as large as possible.
///
/// Relative orientations only change which mixed crossings are negative, and
/// the homology of the diagram depends on them only through `n_-`, so every
/// minimizer has the same homology. Moves change `n_-` equally for all
/// orientations, so the result does not depend on the diagram chosen.
pub fn orient_linking_minimal(d: &LinkDiagram) -> LinkDiagram {
    let c = d.component_count();
    if c < 2 {
        return d.clone();
    }
    let comp = d.component_of_label();
    let mut w = vec![vec![0i64; c]; c];
    for x in &d.crossings {
        let (a, b) = (comp[&x.arcs[0]], comp[&x.arcs[1]]);
        if a != b {
            let s = if x.sign == Sign::Positive { 1 } else { -1 };
            w[a][b] += s;
            w[b][a] += s;
        }
    }
    let cost = |flip: &[bool]| -> i64 {
        let mut t = 0;
        for a in 0..c {
            for b in a + 1..c {
                t += if flip[a] == flip[b] { w[a][b] } else { -w[a][b] };
            }
        }
        t
    };
    let mut best = vec![false; c];
    let mut best_cost = cost(&best);
    if c <= 20 {
        // the first component keeps its orientation; global reversal changes nothing
        for mask in 1u32..1 << (c - 1) {
            let flip: Vec<bool> = (0..c).map(|k| k > 0 && mask >> (k - 1) & 1 == 1).collect();
            let v = cost(&flip);
            if v < best_cost {
                best_cost = v;
                best = flip;
            }
        }
    } else {
        let mut improved = true;
        while improved {
            improved = false;
            for k in 1..c {
                best[k] = !best[k];
                let v = cost(&best);
                if v < best_cost {
                    best_cost = v;
                    improved = true;
                } else {
                    best[k] = !best[k];
                }
            }
        }
    }
    if best.iter().any(|&f| f) {
        d.with_components_reversed(&best)
    } else {
        d.clone()
    }
}

/// Inserts a Reidemeister I kink of the given crossing sign into `arc`.
pub fn add_r1_kink(d: &LinkDiagram, arc: ArcLabel, handedness: Sign) -> Result<LinkDiagram> {
    let x = arc.0;
    let loop_label = d.max_label() + 1;
    let mut crossings = d.crossings.clone();
    let mut unknots = d.unknots.clone();

    // the kink is entered along `x` and left along `out`
    let out = if let Some(idx) = unknots.iter().position(|&u| u == x) {
        unknots.remove(idx);
        x
    } else {
        let map = d.map();
        let [s0, s1] = map.ends(x).ok_or(Error::UnknownArc(x))?;
        let head = if crossings[s0.node].is_incoming(s0.pos) { s0 } else { s1 };
        let out = loop_label + 1;
        crossings[head.node].arcs[head.pos] = out;
        out
    };
    let y = loop_label;
    let kink = match handedness {
        Sign::Positive => Crossing::from_raw([x, out, y, y], 0, 3),
        Sign::Negative => Crossing::from_raw([x, y, y, out], 0, 1),
    };
    crossings.push(kink);
    LinkDiagram::from_oriented(crossings, unknots)
}

/// Pushes a finger of `arc1` over `arc2`, adding a Reidemeister II pair.
///
/// Arcs on one connected piece of the diagram must share a face; arcs on
/// different pieces (or crossingless components) can always be brought
/// together.
pub fn add_r2_fingers(d: &LinkDiagram, arc1: ArcLabel, arc2: ArcLabel) -> Result<LinkDiagram> {
    let (x1, x2) = (arc1.0, arc2.0);
    if x1 == x2 {
        return Err(Error::IdenticalArcs(x1));
    }
    let map = d.map();
    let is_unknot = |x: u32| d.unknots.contains(&x);
    for x in [x1, x2] {
        if !is_unknot(x) && !map.contains(x) {
            return Err(Error::UnknownArc(x));
        }
    }

    // oriented tail/head of an arc on a crossing
    let forward = |x: u32| -> Side {
        let [s0, s1] = map.ends(x).unwrap();
        let (tail, head) = if d.crossings[s1.node].is_incoming(s1.pos) { (s0, s1) } else { (s1, s0) };
        Side { label: x, tail, head }
    };
    let sides: (Option<Side>, Option<Side>) = if is_unknot(x1) || is_unknot(x2) {
        (
            (!is_unknot(x1)).then(|| forward(x1)),
            (!is_unknot(x2)).then(|| forward(x2)),
        )
    } else {
        let (comp, _) = map.node_components();
        let n1 = map.ends(x1).unwrap()[0].node;
        let n2 = map.ends(x2).unwrap()[0].node;
        if comp[n1] != comp[n2] {
            (Some(forward(x1)), Some(forward(x2)))
        } else {
            let (s1, s2) = map.common_face(x1, x2).ok_or(Error::NoCommonFace(x1, x2))?;
            (Some(s1), Some(s2))
        }
    };

    let base = d.max_label();
    let (m, n) = (base + 1, base + 2);
    let mut crossings = d.crossings.clone();
    let mut unknots = d.unknots.clone();
    unknots.retain(|&u| u != x1 && u != x2);

    // Each strand runs side.tail -> side.head; the far half gets a new label.
    // `true` when the strand's orientation agrees with that direction.
    let mut split = |side: Option<Side>, fresh: u32| -> (u32, bool) {
        match side {
            None => (0, true),
            Some(s) => {
                let agrees = crossings[s.head.node].is_incoming(s.head.pos);
                crossings[s.head.node].arcs[s.head.pos] = fresh;
                (fresh, agrees)
            }
        }
    };
    let (x1b, x1_fwd) = split(sides.0, base + 3);
    let (x2b, x2_fwd) = split(sides.1, base + 4);
    let x1b = if sides.0.is_none() { x1 } else { x1b };
    let x2b = if sides.1.is_none() { x2 } else { x2b };

    // local picture: x2 runs west to east below the face, x1 dips down
    // through the face, crossing under-strand x2 at c2 then c1
    let c1 = [x2, m, n, x1b];
    let c2 = [n, m, x2b, x1];
    let under_in = if x2_fwd { 0 } else { 2 };
    let (c1_over, c2_over) = if x1_fwd { (1, 3) } else { (3, 1) };
    crossings.push(Crossing::from_raw(c1, under_in, c1_over));
    crossings.push(Crossing::from_raw(c2, under_in, c2_over));
    LinkDiagram::from_oriented(crossings, unknots)
}

/// Closure of a braid on `strands` strands. Letter `k > 0` is the positive
/// generator twisting strands `k` and `k + 1`; `-k` is its inverse.
pub fn from_braid(strands: usize, word: &[i32]) -> Result<LinkDiagram> {
    if strands == 0 {
        return Err(Error::malformed("a braid needs at least one strand"));
    }
    let mut current: Vec<u32> = (1..=strands as u32).collect();
    let mut next = strands as u32 + 1;
    let mut crossings = Vec::with_capacity(word.len());
    for &g in word {
        let k = g.unsigned_abs() as usize;
        if g == 0 || k >= strands {
            return Err(Error::malformed(format!("braid letter {g} out of range")));
        }
        let (left, right) = (current[k - 1], current[k]);
        let (new_left, new_right) = (next, next + 1);
        next += 2;
        // strands run upward; a positive letter carries the left strand over
        let c = if g > 0 {
            Crossing::from_raw([right, new_right, new_left, left], 0, 3)
        } else {
            Crossing::from_raw([left, right, new_right, new_left], 0, 1)
        };
        crossings.push(c);
        current[k - 1] = new_left;
        current[k] = new_right;
    }
    let closing: std::collections::HashMap<u32, u32> =
        current.iter().zip(1u32..).filter(|(a, b)| *a != b).map(|(&a, b)| (a, b)).collect();
    let crossings = crossings
        .into_iter()
        .map(|c| c.relabeled(|l| closing.get(&l).copied().unwrap_or(l)))
        .collect::<Vec<_>>();
    let used: BTreeSet<u32> = crossings.iter().flat_map(|c| c.arcs).collect();
    let unknots = (1..=strands as u32).filter(|l| !used.contains(l)).collect();
    LinkDiagram::from_oriented(crossings, unknots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hopf_negative() -> LinkDiagram {
        parse_pd("X(4,1,3,2) X(2,3,1,4)").unwrap()
    }

    #[test]
    fn unknot_token() {
        let d = parse_pd("U").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
        assert_eq!(crossing_signs(&d), (0, 0));
    }

    #[test]
    fn hopf_components_and_signs() {
        let d = parse_pd("X(1,3,2,4) X(3,1,4,2)").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        assert_eq!(crossing_signs(&d), (2, 0));
        assert_eq!(crossing_signs(&hopf_negative()), (0, 2));
        assert_eq!(crossing_signs(&mirror(&hopf_negative())), (2, 0));
    }

    #[test]
    fn label_multiplicity() {
        let err = parse_pd("X(1,2,2,1) X(5,3,3,4)").unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
        assert!(err.to_string().contains("label 4"), "{err}");
        let err = parse_pd("X(1,2,2,1) X(5,6,6,7) X(7,8,8,9)").unwrap_err();
        assert!(err.to_string().contains("label 5"), "{err}");
    }

    #[test]
    fn vertex_rejected_in_link() {
        assert!(matches!(parse_pd("V(1,1)"), Err(Error::Malformed(_))));
    }

    #[test]
    fn kinks_have_signs() {
        assert_eq!(crossing_signs(&parse_pd("X(1,1,2,2)").unwrap()), (1, 0));
        assert_eq!(crossing_signs(&parse_pd("X(1,2,2,1)").unwrap()), (0, 1));
    }

    #[test]
    fn mirror_involution() {
        for text in ["U", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "X(4,1,3,2) X(2,3,1,4) U"] {
            let d = parse_pd(text).unwrap();
            assert_eq!(mirror(&mirror(&d)), d);
        }
        assert_eq!(mirror(&LinkDiagram::unknot()), LinkDiagram::unknot());
    }

    #[test]
    fn union_counts() {
        let u = LinkDiagram::unknot();
        let uu = disjoint_union(&u, &u);
        assert_eq!((uu.crossing_count(), uu.component_count()), (0, 2));
        let hu = disjoint_union(&hopf_negative(), &u);
        assert_eq!((hu.crossing_count(), hu.component_count()), (2, 3));
        assert_eq!(crossing_signs(&hu), (0, 2));
    }

    #[test]
    fn r1_on_crossingless_unknot() {
        let k = add_r1_kink(&LinkDiagram::unknot(), ArcLabel(1), Sign::Positive).unwrap();
        assert_eq!(k.crossing_count(), 1);
        assert_eq!(k.component_count(), 1);
        assert_eq!(crossing_signs(&k), (1, 0));
        let k = add_r1_kink(&LinkDiagram::unknot(), ArcLabel(1), Sign::Negative).unwrap();
        assert_eq!(crossing_signs(&k), (0, 1));
    }

    #[test]
    fn r1_counts() {
        let d = hopf_negative();
        for arc in d.arc_labels() {
            for s in [Sign::Positive, Sign::Negative] {
                let k = add_r1_kink(&d, arc, s).unwrap();
                assert_eq!(k.crossing_count(), 3);
                assert_eq!(k.component_count(), 2);
            }
        }
        assert_eq!(add_r1_kink(&d, ArcLabel(99), Sign::Positive), Err(Error::UnknownArc(99)));
    }

    #[test]
    fn r2_on_unlink() {
        let d = add_r2_fingers(&LinkDiagram::unlink(2), ArcLabel(1), ArcLabel(2)).unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        assert_eq!(crossing_signs(&d), (1, 1));
        assert_eq!(
            add_r2_fingers(&LinkDiagram::unlink(2), ArcLabel(1), ArcLabel(1)),
            Err(Error::IdenticalArcs(1))
        );
        assert_eq!(
            add_r2_fingers(&LinkDiagram::unlink(2), ArcLabel(1), ArcLabel(7)),
            Err(Error::UnknownArc(7))
        );
    }

    #[test]
    fn r2_every_face_pair() {
        let trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let labels = trefoil.arc_labels();
        let mut made = 0;
        for &a in &labels {
            for &b in &labels {
                match add_r2_fingers(&trefoil, a, b) {
                    Ok(d) => {
                        assert_eq!(d.crossing_count(), 5);
                        assert_eq!(d.component_count(), 1);
                        made += 1;
                    }
                    Err(Error::IdenticalArcs(_)) | Err(Error::NoCommonFace(..)) => {}
                    Err(e) => panic!("{a} {b}: {e}"),
                }
            }
        }
        assert!(made > 0);
    }

    #[test]
    fn braid_closures() {
        let hopf = from_braid(2, &[1, 1]).unwrap();
        assert_eq!((hopf.component_count(), crossing_signs(&hopf)), (2, (2, 0)));
        let trefoil = from_braid(2, &[-1, -1, -1]).unwrap();
        assert_eq!((trefoil.component_count(), crossing_signs(&trefoil)), (1, (0, 3)));
        let split = from_braid(3, &[1]).unwrap();
        assert_eq!(split.component_count(), 2);
        assert_eq!(split.unknot_labels().len(), 1);
        assert!(from_braid(2, &[2]).is_err());
    }

    #[test]
    fn canonical_is_stable() {
        let a = parse_pd("X(4,1,3,2) X(2,3,1,4)").unwrap();
        let b = parse_pd("X(12,13,11,14) X(14,11,13,12)").unwrap();
        assert_eq!(a.canonical().to_pd_string(), b.canonical().to_pd_string());
        assert_eq!(parse_pd(&a.canonical().to_pd_string()).unwrap(), a.canonical());
    }

    #[test]
    fn reversing_components() {
        let hopf = parse_pd("X(1,3,2,4) X(3,1,4,2)").unwrap();
        assert_eq!((hopf.n_plus(), hopf.n_minus()), (2, 0));
        let r = hopf.with_components_reversed(&[true, false]);
        assert_eq!((r.n_plus(), r.n_minus()), (0, 2));
        assert_eq!(hopf.with_components_reversed(&[true, true]).n_plus(), 2);
        let m = orient_linking_minimal(&hopf);
        assert_eq!(m.n_minus(), 2);
        assert_eq!(orient_linking_minimal(&m), m);
        // self-crossings keep their signs
        let trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(trefoil.with_components_reversed(&[true]).n_minus(), trefoil.n_minus());
    }
}
