//! Property checks shared by the integration tests and the acceptance run.
//! Each returns the number of cases checked, or a description of the first
//! failure.

use kkh_core::cube::build_complex;
use kkh_core::{
    add_r1_kink, add_r2_fingers, disjoint_union, from_braid, mirror, Error, LinkDiagram, Sign,
};
use rand::Rng;

use super::{corpus, kh, r3_pairs};

pub type Check = Result<usize, String>;

pub fn r1_everywhere() -> Check {
    let mut n = 0;
    for e in corpus() {
        let base = kh(&e.diagram);
        for a in e.diagram.arc_labels() {
            for s in [Sign::Positive, Sign::Negative] {
                let moved = add_r1_kink(&e.diagram, a, s).map_err(|x| x.to_string())?;
                if kh(&moved) != base {
                    return Err(format!("{}: {s:?} kink on arc {a}", e.name));
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Fingers at every arc: all face partners on small diagrams, the first
/// partner otherwise.
pub fn r2_everywhere() -> Check {
    let mut n = 0;
    for e in corpus() {
        let d = &e.diagram;
        let base = kh(d);
        let arcs = d.arc_labels();
        for &a in &arcs {
            let mut moved_here = 0;
            for &b in &arcs {
                if a == b || (d.crossing_count() > 5 && moved_here > 0) {
                    continue;
                }
                let moved = match add_r2_fingers(d, a, b) {
                    Ok(m) => m,
                    Err(Error::NoCommonFace(..)) => continue,
                    Err(x) => return Err(format!("{}: {x}", e.name)),
                };
                if kh(&moved) != base {
                    return Err(format!("{}: fingers of {a} over {b}", e.name));
                }
                moved_here += 1;
                n += 1;
            }
            if moved_here == 0 && arcs.len() > 1 {
                return Err(format!("{}: no finger move found at arc {a}", e.name));
            }
        }
    }
    Ok(n)
}

pub fn r3_pairs_agree() -> Check {
    let pairs = r3_pairs();
    for (k, (a, b)) in pairs.iter().enumerate() {
        if kh(a) != kh(b) {
            return Err(format!("pair {} differs", k + 1));
        }
    }
    Ok(pairs.len())
}

/// Twenty pairs of corpus diagrams with at most ten crossings between them.
pub fn union_pairs() -> Vec<(String, LinkDiagram, LinkDiagram)> {
    let c = corpus();
    let mut out = Vec::new();
    'outer: for (x, a) in c.iter().enumerate() {
        for b in c.iter().skip(x * 3 % c.len()).step_by(7) {
            if a.diagram.crossing_count() + b.diagram.crossing_count() <= 10 {
                out.push((format!("{} + {}", a.name, b.name), a.diagram.clone(), b.diagram.clone()));
                if out.len() == 20 {
                    break 'outer;
                }
                break;
            }
        }
    }
    out
}

pub fn union_is_tensor() -> Check {
    let pairs = union_pairs();
    if pairs.len() < 20 {
        return Err(format!("only {} union pairs", pairs.len()));
    }
    for (name, a, b) in &pairs {
        if kh(&disjoint_union(a, b)) != kh(a).tensor(&kh(b)) {
            return Err(name.clone());
        }
    }
    Ok(pairs.len())
}

pub fn mirror_is_dual() -> Check {
    let c = corpus();
    for e in &c {
        if kh(&mirror(&e.diagram)) != kh(&e.diagram).negated() {
            return Err(e.name.clone());
        }
    }
    Ok(c.len())
}

pub fn parity() -> Check {
    let c = corpus();
    for e in &c {
        let want = e.diagram.component_count() as i32 % 2;
        if let Some(((i, j), _)) = kh(&e.diagram).iter().find(|((_, j), _)| j.rem_euclid(2) != want) {
            return Err(format!("{}: support at ({i}, {j})", e.name));
        }
    }
    Ok(c.len())
}

/// A diagram with at most `max` crossings: a random braid closure with a few
/// crossing changes, or a corpus diagram after a random move.
pub fn random_diagram(rng: &mut impl Rng, max: usize) -> LinkDiagram {
    if rng.gen_bool(0.3) {
        let small: Vec<_> = corpus()
            .into_iter()
            .filter(|e| e.diagram.crossing_count() + 2 <= max && e.diagram.crossing_count() > 0)
            .collect();
        let d = &small[rng.gen_range(0..small.len())].diagram;
        let arcs = d.arc_labels();
        let a = arcs[rng.gen_range(0..arcs.len())];
        let b = arcs[rng.gen_range(0..arcs.len())];
        if let Ok(m) = add_r2_fingers(d, a, b) {
            return m;
        }
        let s = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
        return add_r1_kink(d, a, s).expect("kink");
    }
    let strands = rng.gen_range(2..=4usize);
    let len = rng.gen_range(1..=max);
    let word: Vec<i32> = (0..len)
        .map(|_| {
            let k = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect();
    let mut d = from_braid(strands, &word).expect("braid");
    for _ in 0..rng.gen_range(0..3) {
        let k = rng.gen_range(0..d.crossing_count());
        d = d.with_crossing_changed(k);
    }
    d
}

pub fn d_squared_random(count: usize, seed: u64) -> Check {
    use rand::SeedableRng;
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    for k in 0..count {
        let d = random_diagram(&mut rng, 10);
        let c = build_complex(&d).map_err(|e| e.to_string())?;
        if c.check_d_squared().is_err() {
            return Err(format!("diagram {k}: {d}"));
        }
    }
    Ok(count)
}
