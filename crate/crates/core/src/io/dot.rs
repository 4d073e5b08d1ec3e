use crate::bruhat::Interval;
use crate::matchings::Matching;
use std::fmt::Write;

/// The Hasse diagram, bottom to top, one rank per row.
pub fn hasse_dot(iv: &Interval) -> String {
    render(iv, None, "bruhat")
}

/// The Hasse diagram with the pairs of `m` drawn as double edges.
pub fn matching_dot(iv: &Interval, m: &Matching, name: &str) -> String {
    render(iv, Some(m), name)
}

fn render(iv: &Interval, m: Option<&Matching>, name: &str) -> String {
    let hasse = iv.hasse();
    let mut out = String::new();
    writeln!(out, "graph \"{name}\" {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for i in 0..iv.len() {
        let label = if i == 0 { "e".to_string() } else { iv.format(i) };
        writeln!(out, "  n{i} [label=\"{label}\"];").unwrap();
    }
    for r in 0..=hasse.max_rank() {
        let row: Vec<String> = (0..iv.len()).filter(|&i| iv.rank(i) == r).map(|i| format!("n{i};")).collect();
        writeln!(out, "  {{ rank=same; {} }}", row.join(" ")).unwrap();
    }
    let mut covers: Vec<(usize, usize)> = hasse.cover_pairs().collect();
    covers.sort_unstable();
    for (a, b) in covers {
        let matched = m.is_some_and(|m| m.partner(a) == b);
        let style = if matched { " [color=\"black:invis:black\"]" } else { "" };
        writeln!(out, "  n{a} -- n{b}{style};").unwrap();
    }
    out.push_str("}\n");
    out
}
