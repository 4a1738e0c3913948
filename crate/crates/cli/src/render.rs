//! Plain-text output.

use std::fmt::Write;

use totreal::classify::{Table1, Table2};
use totreal::dioph::{DiophInstance, DiophSolution, Family};
use totreal::maslov::{Immersion, Mode};
use totreal::report::{ClassifyReport, ZSetReport};
use totreal::surface::{Constraint, Surface};
use totreal::target::{DegreeSet, Target};

fn constraint(c: &Constraint) -> &'static str {
    match c {
        Constraint::Even => "even",
        Constraint::Odd => "odd",
        Constraint::Ord2Even => "ord2 even",
        Constraint::Ord2Odd => "ord2 odd",
        Constraint::Zero => "0",
    }
}

fn degrees(d: &DegreeSet) -> String {
    match d {
        DegreeSet::Finite { members } => {
            let m: Vec<String> = members.iter().map(ToString::to_string).collect();
            format!("{{{}}}", m.join(", "))
        }
        DegreeSet::Coset { base, generators } => {
            let g: Vec<String> = generators.iter().map(ToString::to_string).collect();
            format!("{base} + span{{{}}}", g.join(", "))
        }
        DegreeSet::W2Level { rank, w2 } => format!("classes in Z2^{rank} with w2 = {w2}"),
    }
}

fn zset_body(out: &mut String, z: &ZSetReport) {
    if let Some(pairs) = &z.pairs {
        writeln!(out, "Z set      {} pairs", pairs.len()).unwrap();
        for p in pairs {
            writeln!(out, "  {}  {}", p.index, p.degree).unwrap();
        }
    } else if let Some(d) = &z.descriptor {
        let size = d.cardinality.clone().unwrap_or_else(|| "infinite".into());
        writeln!(out, "Z set      {size}").unwrap();
        let f: Vec<&str> = d.iq.factors.iter().map(constraint).collect();
        writeln!(
            out,
            "  index    Z_{} coordinates ({})",
            d.iq.q,
            f.join(", ")
        )
        .unwrap();
        writeln!(out, "  degree   {}", degrees(&d.degrees)).unwrap();
        if d.coupled {
            writeln!(
                out,
                "  coupled  torsion index 0 exactly for degrees in Ker c1 mod 2"
            )
            .unwrap();
        }
    }
}

pub fn classify(r: &ClassifyReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "surface    {} (chi {})",
        r.surface,
        r.surface.euler_char()
    )
    .unwrap();
    writeln!(out, "target     {}", r.target).unwrap();
    writeln!(
        out,
        "immersion  {}  {}",
        r.immersion.value, r.immersion.reason
    )
    .unwrap();
    writeln!(
        out,
        "embedding  {}  {}",
        r.embedding.value, r.embedding.reason
    )
    .unwrap();
    zset_body(&mut out, &r.z_set);
    out
}

pub fn zset(s: &Surface, t: &Target, z: &ZSetReport) -> String {
    let mut out = format!("Z({s}, {t})\n");
    zset_body(&mut out, z);
    out
}

pub fn dioph(inst: &DiophInstance, lines: &[(Option<Family>, DiophSolution)]) -> String {
    let mut out = format!(
        "m = {}, chi = {}: {} solutions\n",
        inst.m,
        inst.chi,
        lines.len()
    );
    for (family, s) in lines {
        write!(out, "  {s}  s={} r={} ell={}", s.s(), s.r(), s.ell()).unwrap();
        if let Some(f) = family {
            write!(out, "  {f:?}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn maslov(
    imm: &dyn Immersion,
    mode: Mode,
    index: &[i64],
    residuals: &[f64],
    min_j: f64,
) -> String {
    let kind = match mode {
        Mode::Torus => "torus",
        Mode::Klein => "Klein bottle",
    };
    let idx: Vec<String> = index.iter().map(ToString::to_string).collect();
    let res: Vec<String> = residuals.iter().map(|r| format!("{r:e}")).collect();
    format!(
        "{} as a {kind}\nindex      ({})\nresiduals  {}\nmin |J|    {min_j}\n",
        imm.name(),
        idx.join(", "),
        res.join(", ")
    )
}

pub fn table1(t: &Table1) -> String {
    let header = [
        "target",
        "immersion",
        "embedding (orientable)",
        "embedding (nonorientable)",
    ];
    let rows: Vec<[&str; 4]> = t
        .rows
        .iter()
        .map(|r| {
            [
                r.target.as_str(),
                &r.immersion,
                &r.embedding_orientable,
                &r.embedding_nonorientable,
            ]
        })
        .collect();
    let mut width = header.map(str::len);
    for r in &rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    for r in std::iter::once(&header).chain(&rows) {
        let cells: Vec<String> = r
            .iter()
            .zip(width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
    }
    out
}

pub fn table2(t: &Table2) -> String {
    let mut out = String::new();
    let head: Vec<String> = t.columns.iter().map(|c| format!("{c:<8}")).collect();
    writeln!(out, "{}", head.join("").trim_end()).unwrap();
    for r in &t.rows {
        let cells: Vec<String> = r
            .cells
            .iter()
            .map(|c| format!("{:<8}", c.map(|x| x.to_string()).unwrap_or_default()))
            .collect();
        writeln!(out, "{}", cells.join("").trim_end()).unwrap();
    }
    out
}
