use std::fmt::Write;
use std::time::Duration;

use crate::report::*;

/// Human-readable report: convention header, payload, timing.
pub(crate) fn table(r: &Report, elapsed: Duration) -> String {
    let mut out = String::new();
    let c = &r.conventions;
    let _ = writeln!(out, "{} {} (sha256 {})", r.command, r.input.file, &r.input.sha256[..16]);
    let _ = writeln!(out, "orientation: {}", c.orientation);
    let _ = writeln!(out, "grading: {}", c.grading);
    let _ = writeln!(out, "homology: {}", c.homology);
    let _ = write!(out, "crossing cap: {}", c.crossing_cap);
    if let (Some(f), Some(p)) = (&c.family, &c.vertex_pairs) {
        let _ = write!(out, ", family: {f}, vertex pairs: {p}");
    }
    if let Some(o) = &c.member_orientation {
        let _ = write!(out, "\nmembers: {o}");
    }
    out.push_str("\n\n");
    match &r.result {
        Payload::Kh(p) => {
            let _ = writeln!(
                out,
                "crossings: {} (n+ = {}, n- = {}), components: {}\n",
                p.crossings, p.n_plus, p.n_minus, p.components
            );
            out.push_str(&dims_table(&p.dims));
            let _ = writeln!(out, "\nPoincare: {}", p.poincare);
            let _ = writeln!(out, "Euler: {}", p.euler.text);
            let _ = writeln!(out, "Jones (state sum): {}", p.jones.text);
            let _ = writeln!(out, "Euler=Jones: {}", ok(p.euler_equals_jones));
            if p.d_squared_checked {
                out.push_str("d^2 = 0: OK\n");
            }
        }
        Payload::Jones(p) => {
            let _ = writeln!(
                out,
                "crossings: {} (n+ = {}, n- = {}), components: {}",
                p.crossings, p.n_plus, p.n_minus, p.components
            );
            let _ = writeln!(out, "Jones (state sum): {}", p.jones.text);
        }
        Payload::Family(p) => {
            let _ = writeln!(out, "choices: {}, members: {}\n", p.choices, p.members.len());
            for (k, m) in p.members.iter().enumerate() {
                let pd = if m.components == 0 { "(empty)" } else { m.pd.as_str() };
                let _ = writeln!(out, "[{}] {}  {}  components: {}", k + 1, m.id, m.choice, m.components);
                let _ = writeln!(out, "    {pd}");
                if let Some(d) = &m.dims {
                    let _ = writeln!(out, "    dims: {}", digest(d));
                }
            }
        }
        Payload::Kkh(p) => {
            for (k, m) in p.members.iter().enumerate() {
                let _ = writeln!(out, "member [{}] {}  {}", k + 1, m.id, m.choice);
                let _ = writeln!(out, "    {}", m.pd);
                let _ = writeln!(out, "    dims: {}", digest(&m.dims));
                let _ = writeln!(out, "    Euler: {}", m.euler.text);
            }
            out.push_str("\ntotal:\n");
            out.push_str(&dims_table(&p.total.dims));
            let _ = writeln!(out, "\nPoincare: {}", p.total.poincare);
            let _ = writeln!(out, "Euler: {}", p.total.euler.text);
            let _ = writeln!(out, "Jones sum (state sum): {}", p.jones_sum.text);
            let _ = writeln!(out, "Euler=Jones: {}", ok(p.euler_equals_jones));
            if p.d_squared_checked {
                out.push_str("d^2 = 0: OK\n");
            }
        }
    }
    let _ = writeln!(out, "elapsed: {:.3} s", elapsed.as_secs_f64());
    out
}

fn ok(b: bool) -> &'static str {
    if b {
        "OK"
    } else {
        "MISMATCH"
    }
}

fn digest(d: &[DimEntry]) -> String {
    if d.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = d.iter().map(|e| format!("({},{}):{}", e.i, e.j, e.dim)).collect();
    parts.join(" ")
}

/// Rows are quantum degrees j, descending; columns are homological degrees
/// i, ascending. Empty cells print as `.`.
fn dims_table(entries: &[DimEntry]) -> String {
    if entries.is_empty() {
        return "(zero)\n".into();
    }
    let dims = dims_from_entries(entries);
    let (i0, i1) = dims.i_range().expect("nonempty");
    let (j0, j1) = dims.j_range().expect("nonempty");
    let cell = |i: i32, j: i32| match dims.get(i, j) {
        0 => ".".to_string(),
        1 => "Q".to_string(),
        k => format!("Q^{k}"),
    };
    let width = (i0..=i1)
        .flat_map(|i| (j0..=j1).map(move |j| (i, j)))
        .map(|(i, j)| cell(i, j).len())
        .chain((i0..=i1).map(|i| i.to_string().len()))
        .max()
        .unwrap_or(1);
    let label = (j0..=j1).map(|j| j.to_string().len()).max().unwrap_or(1).max(3);
    let mut out = String::new();
    let _ = write!(out, "{:>label$} |", "j\\i");
    for i in i0..=i1 {
        let _ = write!(out, " {i:>width$}");
    }
    out.push('\n');
    let _ = writeln!(out, "{}-+{}", "-".repeat(label), "-".repeat((width + 1) * (i1 - i0 + 1) as usize));
    for j in (j0..=j1).rev() {
        let _ = write!(out, "{j:>label$} |");
        for i in i0..=i1 {
            let _ = write!(out, " {:>width$}", cell(i, j));
        }
        out.push('\n');
    }
    out
}
