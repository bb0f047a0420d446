//! The cube of resolutions and the bigraded Khovanov chain complex.
//!
//! Conventions:
//! - For a crossing `(a,b,c,d)` listed from its incoming under-strand, the
//!   0-resolution joins `a-b` and `c-d`, the 1-resolution joins `a-d` and
//!   `b-c`.
//! - Each circle carries the rank-2 algebra with basis `1` (degree +1) and
//!   `x` (degree -1); merges multiply, splits comultiply.
//! - The edge changing bit `k` of state `s` has sign `(-1)^(#1s of s before k)`.
//! - A generator in state `s` with circle degree `deg` sits at
//!   `i = |s| - n_-` and `j = deg + i + n_+ - n_-`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::homology::{GradedDims, SparseRationalMatrix};
use crate::uf::UnionFind;

/// Largest number of circles whose labelings we are willing to enumerate.
const MAX_CIRCLES: usize = 40;

/// A vertex of the cube: one resolution bit per crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State {
    bits: u32,
    len: u8,
}

impl State {
    pub fn new(bits: u32, len: usize) -> Self {
        assert!(len <= 31, "states are limited to 31 crossings");
        assert!(len == 31 || bits >> len == 0, "bits beyond the state length");
        State { bits, len: len as u8 }
    }

    /// From a sequence of 0/1 values, crossing 0 first.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = 0u32;
        for (k, &b) in bits.iter().enumerate() {
            if b != 0 {
                v |= 1 << k;
            }
        }
        State::new(v, bits.len())
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bit(&self, k: usize) -> bool {
        self.bits >> k & 1 == 1
    }

    /// Number of 1-resolutions.
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    fn with_bit(&self, k: usize) -> State {
        State {
            bits: self.bits | 1 << k,
            len: self.len,
        }
    }
}

/// The circles of one resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smoothing {
    state: State,
    circle_of_arc: Vec<u16>,
    circles: usize,
}

impl Smoothing {
    pub fn state(&self) -> State {
        self.state
    }

    pub fn circle_count(&self) -> usize {
        self.circles
    }
}

/// Compact view of a diagram used to resolve states quickly.
#[derive(Debug, Clone)]
pub struct Resolver {
    crossings: Vec<[usize; 4]>,
    arcs: usize,
    unknots: usize,
}

impl Resolver {
    pub fn new(d: &LinkDiagram) -> Self {
        let mut labels: Vec<u32> = d.crossings().iter().flat_map(|c| c.raw()).collect();
        labels.sort_unstable();
        labels.dedup();
        let index = |l: u32| labels.binary_search(&l).expect("label present");
        let crossings = d.crossings().iter().map(|c| c.raw().map(index)).collect();
        Resolver {
            crossings,
            arcs: labels.len(),
            unknots: d.unknot_labels().len(),
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn smoothing(&self, state: State) -> Result<Smoothing> {
        if state.len() != self.crossings.len() {
            return Err(Error::StateLength {
                expected: self.crossings.len(),
                got: state.len(),
            });
        }
        let mut uf = UnionFind::new(self.arcs);
        for (k, &[a, b, c, d]) in self.crossings.iter().enumerate() {
            if state.bit(k) {
                uf.union(a, d);
                uf.union(b, c);
            } else {
                uf.union(a, b);
                uf.union(c, d);
            }
        }
        let (classes, count) = uf.classes();
        Ok(Smoothing {
            state,
            circle_of_arc: classes.into_iter().map(|c| c as u16).collect(),
            circles: count + self.unknots,
        })
    }
}

/// Resolves every crossing of `d` according to `s`.
pub fn resolve(d: &LinkDiagram, s: State) -> Result<Smoothing> {
    Resolver::new(d).smoothing(s)
}

/// `(-1)^(number of 1-bits of s before position k)`.
pub fn edge_sign(s: State, k: usize) -> Result<i8> {
    if k >= s.len() {
        return Err(Error::StateLength {
            expected: k + 1,
            got: s.len(),
        });
    }
    if s.bit(k) {
        return Err(Error::BitAlreadySet(k));
    }
    let before = (s.bits & ((1u32 << k) - 1)).count_ones();
    Ok(if before.is_multiple_of(2) { 1 } else { -1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    One,
    X,
}

/// A basis element of the chain group at one cube vertex. Bit `c` of the
/// labeling is set when circle `c` carries `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub state: State,
    pub labeling: u64,
    pub degree: i32,
    pub i: i32,
    pub j: i32,
}

impl Generator {
    pub fn label(&self, circle: usize) -> Basis {
        if self.labeling >> circle & 1 == 1 {
            Basis::X
        } else {
            Basis::One
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Merge,
    Split,
}

/// An edge of the cube together with how its saddle acts on circles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeEdge {
    pub source: State,
    pub target: State,
    pub position: usize,
    pub kind: EdgeKind,
    pub sign: i8,
    /// target circle of every source circle
    circle_map: Vec<u8>,
    /// merge: the two source circles; split: the source circle twice
    source_circles: (u8, u8),
    /// merge: the merged circle twice; split: the two new circles
    target_circles: (u8, u8),
    target_count: usize,
}

impl CubeEdge {
    fn new(res: &Resolver, from: &Smoothing, to: &Smoothing, k: usize) -> Result<Self> {
        let [a, b, c, _] = res.crossings[k];
        let sign = edge_sign(from.state, k)?;
        let arc_count = res.arcs;
        let src = |arc: usize| from.circle_of_arc[arc] as usize;
        let tgt = |arc: usize| to.circle_of_arc[arc] as usize;
        let mut circle_map = vec![u8::MAX; from.circles];
        for arc in 0..arc_count {
            circle_map[src(arc)] = tgt(arc) as u8;
        }
        let loops = res.unknots;
        for u in 0..loops {
            circle_map[from.circles - loops + u] = (to.circles - loops + u) as u8;
        }
        let (kind, source_circles, target_circles) = if src(a) != src(c) {
            if to.circles + 1 != from.circles {
                return Err(Error::CorruptComplex(format!("edge at crossing {k} is not a merge")));
            }
            (EdgeKind::Merge, (src(a) as u8, src(c) as u8), (tgt(a) as u8, tgt(a) as u8))
        } else {
            if to.circles != from.circles + 1 {
                return Err(Error::CorruptComplex(format!("edge at crossing {k} is not a split")));
            }
            (EdgeKind::Split, (src(a) as u8, src(a) as u8), (tgt(a) as u8, tgt(b) as u8))
        };
        Ok(CubeEdge {
            source: from.state,
            target: to.state,
            position: k,
            kind,
            sign,
            circle_map,
            source_circles,
            target_circles,
            target_count: to.circles,
        })
    }

    /// Images of a source labeling, before the sign is applied.
    fn images(&self, mask: u64) -> ([u64; 2], usize) {
        let mut base = 0u64;
        let (s1, s2) = (self.source_circles.0 as usize, self.source_circles.1 as usize);
        for (c, &t) in self.circle_map.iter().enumerate() {
            if c != s1 && c != s2 && mask >> c & 1 == 1 {
                base |= 1 << t;
            }
        }
        let (t1, t2) = (self.target_circles.0 as usize, self.target_circles.1 as usize);
        match self.kind {
            EdgeKind::Merge => {
                let x1 = mask >> s1 & 1 == 1;
                let x2 = mask >> s2 & 1 == 1;
                match (x1, x2) {
                    (true, true) => ([0, 0], 0),
                    (false, false) => ([base, 0], 1),
                    _ => ([base | 1 << t1, 0], 1),
                }
            }
            EdgeKind::Split => {
                if mask >> s1 & 1 == 1 {
                    ([base | 1 << t1 | 1 << t2, 0], 1)
                } else {
                    ([base | 1 << t2, base | 1 << t1], 2)
                }
            }
        }
    }
}

fn degree_of(mask: u64, circles: usize) -> i32 {
    circles as i32 - 2 * mask.count_ones() as i32
}

/// The edge of the cube leaving `source` through crossing `k`.
pub fn cube_edge(d: &LinkDiagram, source: State, k: usize) -> Result<CubeEdge> {
    let res = Resolver::new(d);
    edge_sign(source, k)?;
    let from = res.smoothing(source)?;
    let to = res.smoothing(source.with_bit(k))?;
    CubeEdge::new(&res, &from, &to, k)
}

/// Applies the saddle map of `e` to `v`, returning signed images.
pub fn edge_map(e: &CubeEdge, v: &Generator) -> Result<Vec<(Generator, i64)>> {
    if v.state != e.source {
        return Err(Error::StateMismatch);
    }
    let (masks, count) = e.images(v.labeling);
    Ok(masks[..count]
        .iter()
        .map(|&m| {
            let g = Generator {
                state: e.target,
                labeling: m,
                degree: degree_of(m, e.target_count),
                i: v.i + 1,
                j: v.j,
            };
            (g, e.sign as i64)
        })
        .collect())
}

/// Bigraded chain complex: generators per `(i, j)` and the differential
/// from `(i, j)` to `(i + 1, j)`.
#[derive(Debug, Clone)]
pub struct GradedChainComplex {
    n_plus: usize,
    n_minus: usize,
    generators: BTreeMap<(i32, i32), Vec<Generator>>,
    differentials: BTreeMap<(i32, i32), SparseRationalMatrix>,
}

impl GradedChainComplex {
    pub fn n_plus(&self) -> usize {
        self.n_plus
    }

    pub fn n_minus(&self) -> usize {
        self.n_minus
    }

    pub fn generators(&self, i: i32, j: i32) -> &[Generator] {
        self.generators.get(&(i, j)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn gradings(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        self.generators.keys().copied()
    }

    pub fn generator_count(&self) -> usize {
        self.generators.values().map(Vec::len).sum()
    }

    /// Dimensions of the chain groups.
    pub fn chain_dims(&self) -> GradedDims {
        self.generators.iter().map(|(&k, g)| (k, g.len())).collect()
    }

    /// `d: C^{i,j} -> C^{i+1,j}`, rows indexed by targets; `None` when
    /// either side is zero.
    pub fn differential(&self, i: i32, j: i32) -> Option<&SparseRationalMatrix> {
        self.differentials.get(&(i, j))
    }

    pub fn differentials(&self) -> impl Iterator<Item = ((i32, i32), &SparseRationalMatrix)> {
        self.differentials.iter().map(|(&k, m)| (k, m))
    }

    /// Checks that every composite `d^{i+1,j} d^{i,j}` vanishes.
    pub fn check_d_squared(&self) -> Result<()> {
        self.differentials.par_iter().try_for_each(|(&(i, j), d1)| {
            if let Some(d2) = self.differentials.get(&(i + 1, j)) {
                if !d2.mul(d1).is_zero() {
                    return Err(Error::CorruptComplex(format!(
                        "d^2 is nonzero from grading ({i}, {j})"
                    )));
                }
            }
            Ok(())
        })
    }

    #[cfg(test)]
    pub(crate) fn from_parts(
        generators: BTreeMap<(i32, i32), Vec<Generator>>,
        differentials: BTreeMap<(i32, i32), SparseRationalMatrix>,
    ) -> Self {
        GradedChainComplex {
            n_plus: 0,
            n_minus: 0,
            generators,
            differentials,
        }
    }
}

pub fn build_complex(d: &LinkDiagram) -> Result<GradedChainComplex> {
    build_complex_with_cap(d, crate::DEFAULT_CROSSING_CAP)
}

/// Builds `CKh(d)`, refusing diagrams with more than `cap` crossings.
pub fn build_complex_with_cap(d: &LinkDiagram, cap: usize) -> Result<GradedChainComplex> {
    let n = d.crossing_count();
    if n > cap || n > 30 {
        return Err(Error::CapExceeded { crossings: n, cap });
    }
    let res = Resolver::new(d);
    let shift = d.n_plus() as i32 - d.n_minus() as i32;
    let n_minus = d.n_minus() as i32;

    let smoothings: Vec<Smoothing> = (0..1u32 << n)
        .into_par_iter()
        .map(|bits| res.smoothing(State::new(bits, n)))
        .collect::<Result<_>>()?;
    if let Some(s) = smoothings.iter().find(|s| s.circles > MAX_CIRCLES) {
        return Err(Error::TooManyCircles(s.circles));
    }

    // position of every generator inside its (i, j) block
    let mut generators: BTreeMap<(i32, i32), Vec<Generator>> = BTreeMap::new();
    let mut index: Vec<Vec<u32>> = Vec::with_capacity(smoothings.len());
    for sm in &smoothings {
        let i = sm.state.weight() as i32 - n_minus;
        let mut idx = Vec::with_capacity(1 << sm.circles);
        for mask in 0..1u64 << sm.circles {
            let degree = degree_of(mask, sm.circles);
            let j = degree + i + shift;
            let block = generators.entry((i, j)).or_default();
            idx.push(block.len() as u32);
            block.push(Generator {
                state: sm.state,
                labeling: mask,
                degree,
                i,
                j,
            });
        }
        index.push(idx);
    }

    let triplets: Vec<((i32, i32), u32, u32, i8)> = smoothings
        .par_iter()
        .map(|sm| -> Result<Vec<_>> {
            let mut out = Vec::new();
            let s = sm.state;
            let i = s.weight() as i32 - n_minus;
            for k in (0..n).filter(|&k| !s.bit(k)) {
                let t = s.with_bit(k);
                let edge = CubeEdge::new(&res, sm, &smoothings[t.bits as usize], k)?;
                for mask in 0..1u64 << sm.circles {
                    let j = degree_of(mask, sm.circles) + i + shift;
                    let col = index[s.bits as usize][mask as usize];
                    let (images, count) = edge.images(mask);
                    for &m in &images[..count] {
                        let row = index[t.bits as usize][m as usize];
                        out.push(((i, j), row, col, edge.sign));
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    type Block = Vec<(usize, usize, BigRational)>;
    let mut grouped: BTreeMap<(i32, i32), Block> = BTreeMap::new();
    for ((i, j), row, col, sign) in triplets {
        grouped.entry((i, j)).or_default().push((
            row as usize,
            col as usize,
            BigRational::from_integer(BigInt::from(sign)),
        ));
    }
    let differentials = grouped
        .into_par_iter()
        .map(|((i, j), entries)| {
            let rows = generators.get(&(i + 1, j)).map_or(0, Vec::len);
            let cols = generators[&(i, j)].len();
            ((i, j), SparseRationalMatrix::from_triplets(rows, cols, entries))
        })
        .collect();

    Ok(GradedChainComplex {
        n_plus: d.n_plus(),
        n_minus: d.n_minus(),
        generators,
        differentials,
    })
}
