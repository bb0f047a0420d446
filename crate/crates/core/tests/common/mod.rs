#![allow(dead_code)]

pub mod checks;

use kkh_core::cube::build_complex;
use kkh_core::homology::homology_dims;
use kkh_core::{from_braid, parse_pd, GradedDims, LinkDiagram};

pub struct Entry {
    pub name: String,
    pub diagram: LinkDiagram,
}

fn braid(spec: &str) -> LinkDiagram {
    let (strands, word) = spec.split_once(':').expect("strands: letters");
    let word: Vec<i32> = word.split_whitespace().map(|w| w.parse().unwrap()).collect();
    from_braid(strands.trim().parse().unwrap(), &word).unwrap()
}

pub fn corpus() -> Vec<Entry> {
    include_str!("../data/corpus.txt")
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut parts = l.splitn(3, char::is_whitespace).filter(|s| !s.is_empty());
            let name = parts.next().unwrap().to_string();
            let rest = l[name.len()..].trim_start();
            let (kind, data) = rest.split_once(char::is_whitespace).unwrap();
            let diagram = match kind {
                "pd" => parse_pd(data.trim()).unwrap_or_else(|e| panic!("{name}: {e}")),
                "braid" => braid(data),
                other => panic!("unknown kind {other}"),
            };
            Entry { name, diagram }
        })
        .collect()
}

pub fn r3_pairs() -> Vec<(LinkDiagram, LinkDiagram)> {
    include_str!("../data/r3_pairs.txt")
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split('|').map(str::trim).collect();
            (braid(&format!("{}: {}", f[0], f[1])), braid(&format!("{}: {}", f[0], f[2])))
        })
        .collect()
}

pub fn kh(d: &LinkDiagram) -> GradedDims {
    homology_dims(&build_complex(d).unwrap()).unwrap()
}

pub fn dims(entries: &[((i32, i32), usize)]) -> GradedDims {
    entries.iter().copied().collect()
}

pub fn graphs() -> Vec<(String, kkh_core::GraphDiagram)> {
    include_str!("../data/graphs.txt")
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, text) = l.split_once('|').unwrap();
            let name = name.trim().to_string();
            let g = kkh_core::parse_graph(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            (name, g)
        })
        .collect()
}

pub fn graph(name: &str) -> kkh_core::GraphDiagram {
    graphs().into_iter().find(|(n, _)| n == name).unwrap().1
}
