use std::fmt::Write as _;

use wpn_core::{MeasureClassification, MonoidValue, NormalFormResult, WeightMeasure, WeightProfile, Word};

use crate::Format;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn joined(values: &[MonoidValue]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn classification(m: &WeightMeasure, c: &MeasureClassification, format: Format) -> String {
    let stepped = c.stepped.as_ref().map_or("no".to_string(), |s| s.to_string());
    let witness = c
        .gap_witness
        .as_ref()
        .map(|(w, i)| (m.alphabet().render(w), *i));
    let agrees = if c.oracle_agrees { "agrees" } else { "DISAGREES" };
    let rows: Vec<(&str, String)> = vec![
        ("monoid", m.kind().to_string()),
        ("letters", m.alphabet().letters().join(" ")),
        ("weights", joined(m.base_weights())),
        ("injective", yes(c.injective).into()),
        ("alphabetically ordered", yes(c.alphabetically_ordered).into()),
        ("binary", yes(c.binary).into()),
        ("unary", yes(c.unary).into()),
        ("prime", yes(c.prime).into()),
        ("stepped", stepped),
        ("gapfree", yes(c.gapfree).into()),
        (
            "gap witness",
            witness.map_or("none".into(), |(w, i)| format!("{w} at index {i}")),
        ),
        ("brute-force check", format!("{agrees} up to length {}", c.oracle_bound)),
    ];
    let mut out = String::new();
    for (key, value) in rows {
        let _ = match format {
            Format::Text => writeln!(out, "{key}: {value}"),
            Format::Lines => writeln!(out, "{} {value}", key.to_uppercase().replace([' ', '-'], "_")),
        };
    }
    out
}

/// The two weight functions side by side, one column per length.
pub fn weights(m: &WeightMeasure, prof: &WeightProfile, format: Format) -> String {
    let letters: Vec<String> = prof
        .word()
        .letters()
        .iter()
        .map(|&l| m.alphabet().token(l).to_string())
        .collect();
    let p: Vec<String> = prof.prefix()[1..].iter().map(|v| v.to_string()).collect();
    let f: Vec<String> = prof.factor()[1..].iter().map(|v| v.to_string()).collect();
    let index: Vec<String> = (1..=prof.len()).map(|i| i.to_string()).collect();
    let normal = yes(prof.is_prefix_normal());
    match format {
        Format::Lines => format!(
            "WORD {}\nP {}\nF {}\nPREFIX_NORMAL {normal}\n",
            letters.join(" "),
            p.join(" "),
            f.join(" ")
        ),
        Format::Text => {
            let rows = [("i", &index), ("w", &letters), ("p", &p), ("f", &f)];
            let width = rows
                .iter()
                .flat_map(|(_, cells)| cells.iter().map(|c| c.chars().count()))
                .max()
                .unwrap_or(1);
            let mut out = String::new();
            for (label, cells) in rows {
                out.push_str(label);
                for c in cells.iter() {
                    let _ = write!(out, " {c:>width$}");
                }
                out.push('\n');
            }
            let _ = writeln!(out, "prefix normal: {normal}");
            out
        }
    }
}

pub fn normal_form(m: &WeightMeasure, r: &NormalFormResult, format: Format) -> String {
    match (r, format) {
        (NormalFormResult::Unique(w), Format::Text) => format!("{}\n", m.alphabet().render(w)),
        (NormalFormResult::Unique(w), Format::Lines) => format!("UNIQUE {}\n", m.alphabet().render(w)),
        (NormalFormResult::Multiple { projection, projected, count }, Format::Text) => format!(
            "projected: {}\ncount: {count}\n",
            projection.measure().alphabet().render(projected)
        ),
        (NormalFormResult::Multiple { projection, projected, count }, Format::Lines) => format!(
            "MULTIPLE {} {count}\n",
            projection.measure().alphabet().render(projected)
        ),
        (NormalFormResult::NoneFound { word, index }, Format::Text) => format!(
            "none: {} has a gap at index {index}\n",
            m.alphabet().render(word)
        ),
        (NormalFormResult::NoneFound { index, .. }, Format::Lines) => format!("NONE {index}\n"),
    }
}

pub fn words(m: &WeightMeasure, ws: &[Word], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Lines {
        let _ = writeln!(out, "COUNT {}", ws.len());
    }
    for w in ws {
        let _ = match format {
            Format::Text => writeln!(out, "{}", m.alphabet().render(w)),
            Format::Lines => writeln!(out, "WORD {}", m.alphabet().render(w)),
        };
    }
    out
}
