use std::collections::BTreeSet;

use serde::Serialize;

use super::{
    blowup_step, degree_congruence, embedding_exists, immersion_exists, Decision, TotalMod2Degree,
};
use crate::surface::Surface;
use crate::target::Target;

/// Range of Euler characteristics the summary is generated over.
pub const CHI_RANGE: i64 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Cell {
    pub surface: Surface,
    pub target: Target,
    pub immersion: Decision,
    pub embedding: Decision,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub target: String,
    pub immersion: String,
    pub embedding_orientable: String,
    pub embedding_nonorientable: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1 {
    pub rows: Vec<Table1Row>,
    pub cells: Vec<Table1Cell>,
}

/// Closed surfaces with `|χ| ≤ CHI_RANGE`, orientable ones first.
pub fn surfaces_in_range() -> Vec<Surface> {
    let mut out: Vec<Surface> = (0..=((2 + CHI_RANGE) / 2) as u32)
        .map(Surface::orientable)
        .collect();
    out.extend((1..=(2 + CHI_RANGE) as u32).map(|g| Surface {
        orientable: false,
        genus: g,
    }));
    out
}

fn table1_targets() -> Vec<Target> {
    let mut t = vec![Target::C2, Target::CP2, Target::CP1xCP1];
    t.extend((1..=9).map(Target::Blowup));
    t
}

fn immersion_label(cells: &[&Table1Cell]) -> String {
    let yes: Vec<bool> = cells.iter().map(|c| c.immersion == Decision::Yes).collect();
    if yes.iter().all(|&y| y) {
        "all".into()
    } else if cells
        .iter()
        .zip(&yes)
        .all(|(c, &y)| y == (c.surface.euler_char() % 2 == 0))
    {
        "chi even".into()
    } else {
        "irregular".into()
    }
}

fn orientable_label(cells: &[&Table1Cell]) -> String {
    let names: Vec<String> = cells
        .iter()
        .filter(|c| c.surface.orientable && c.embedding == Decision::Yes)
        .map(|c| c.surface.to_string())
        .collect();
    if names.is_empty() {
        "none".into()
    } else {
        format!("{} only", names.join(", "))
    }
}

fn nonorientable_label(cells: &[&Table1Cell]) -> String {
    let non: Vec<&&Table1Cell> = cells.iter().filter(|c| !c.surface.orientable).collect();
    let residues: BTreeSet<i64> = non
        .iter()
        .filter(|c| c.embedding == Decision::Yes)
        .map(|c| c.surface.euler_char().rem_euclid(4))
        .collect();
    let by_residue = non.iter().all(|c| {
        (c.embedding == Decision::Yes) == residues.contains(&c.surface.euler_char().rem_euclid(4))
    });
    if !by_residue {
        return "irregular".into();
    }
    let r: Vec<i64> = residues.into_iter().collect();
    match r.as_slice() {
        [] => "none".into(),
        [0, 1, 2, 3] => "all".into(),
        [0] => "chi divisible by 4".into(),
        [0, 2] => "chi even".into(),
        [0, 1] => "chi = 0 or 1 mod 4".into(),
        [0, 1, 3] => "chi odd or divisible by 4".into(),
        other => {
            let list: Vec<String> = other.iter().map(ToString::to_string).collect();
            format!("chi mod 4 in {{{}}}", list.join(","))
        }
    }
}

fn summarize(name: &str, cells: &[&Table1Cell]) -> Table1Row {
    Table1Row {
        target: name.into(),
        immersion: immersion_label(cells),
        embedding_orientable: orientable_label(cells),
        embedding_nonorientable: nonorientable_label(cells),
    }
}

/// Existence of totally real immersions and embeddings, per surface and
/// summarized per target, for blow-ups of up to nine points.
pub fn table1() -> Table1 {
    let surfaces = surfaces_in_range();
    let cells: Vec<Table1Cell> = table1_targets()
        .into_iter()
        .flat_map(|t| {
            surfaces.iter().map(move |s| Table1Cell {
                surface: *s,
                target: t,
                immersion: immersion_exists(s, &t).value,
                embedding: embedding_exists(s, &t).value,
            })
        })
        .collect();
    let of = |t: Target| cells.iter().filter(|c| c.target == t).collect::<Vec<_>>();
    let mut rows = vec![
        summarize("C2", &of(Target::C2)),
        summarize("CP2", &of(Target::CP2)),
        summarize("CP2#1", &of(Target::Blowup(1))),
        summarize("CP1xCP1", &of(Target::CP1xCP1)),
    ];
    let blowups: Vec<Table1Row> = (2..=9)
        .map(|m| summarize("CP2#m, 2<=m<=9", &of(Target::Blowup(m))))
        .collect();
    let mut merged = blowups[0].clone();
    if blowups.iter().any(|r| r != &merged) {
        merged.embedding_orientable = "depends on m".into();
        merged.embedding_nonorientable = "depends on m".into();
    }
    rows.push(merged);
    Table1 { rows, cells }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table2Row {
    pub cells: Vec<Option<TotalMod2Degree>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table2 {
    pub columns: Vec<String>,
    pub rows: Vec<Table2Row>,
}

/// Column surfaces: `S²`, `RP²`, `K²`, `K²#RP²`, `K²#K²`, each one crosscap more.
pub fn table2_columns() -> Vec<Surface> {
    let mut cols = vec![Surface::SPHERE];
    for _ in 0..4 {
        let last = *cols.last().expect("nonempty");
        cols.push(last.add_crosscap());
    }
    cols
}

/// `(d, s − j)` for the six rows, `j` the column position. Along a row the
/// value moves by one blow-up at a time.
const TABLE2_ROWS: [(u8, i64); 6] = [(0, -2), (0, 2), (0, 6), (0, 10), (1, -1), (1, 3)];
const TABLE2_MAX_S: i64 = 11;

/// Values of the total mod 2 degree allowed for embedded surfaces.
pub fn table2() -> Table2 {
    let columns = table2_columns();
    let rows = TABLE2_ROWS
        .iter()
        .map(|&(d, offset)| {
            let mut cells = vec![None; columns.len()];
            let start = (0..columns.len())
                .find(|&j| j as i64 + offset >= 0)
                .expect("row has a first cell");
            let mut state = (
                0u32,
                columns[start],
                TotalMod2Degree {
                    d,
                    s: (start as i64 + offset) as u32,
                },
            );
            for (j, cell) in cells.iter_mut().enumerate().skip(start) {
                if i64::from(state.2.s) > TABLE2_MAX_S {
                    break;
                }
                debug_assert_eq!(state.1, columns[j]);
                debug_assert!(degree_congruence(&state.1, &state.2).unwrap_or(false));
                *cell = Some(state.2);
                state = blowup_step(state.0, &state.1, &state.2);
            }
            Table2Row { cells }
        })
        .collect();
    let names = ["S2", "RP2", "K2", "K2#RP2", "K2#K2"];
    Table2 {
        columns: names.iter().map(|s| s.to_string()).collect(),
        rows,
    }
}
