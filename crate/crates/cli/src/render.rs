//! Text rendering of weight and cup diagrams.

use std::collections::HashMap;

use clap::ValueEnum;
use supercup_core::{Arc, CupDiagram, Label};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Style {
    Ascii,
    #[default]
    Unicode,
}

struct Glyphs {
    vee: &'static str,
    wedge: &'static str,
    cross: &'static str,
    circle: &'static str,
    bar: char,
    left: char,
    right: char,
    fill: char,
}

const ASCII: Glyphs = Glyphs {
    vee: "v",
    wedge: "^",
    cross: "x",
    circle: "o",
    bar: '|',
    left: '\\',
    right: '/',
    fill: '_',
};

const UNICODE: Glyphs = Glyphs {
    vee: "∨",
    wedge: "∧",
    cross: "×",
    circle: "∘",
    bar: '│',
    left: '╰',
    right: '╯',
    fill: '─',
};

pub fn pi_symbol(style: Style) -> &'static str {
    match style {
        Style::Ascii => "Pi",
        Style::Unicode => "Π",
    }
}

/// Vertices `lo..=hi` shown for a diagram: every symbol and cup plus one wedge on each side.
pub fn window(cd: &CupDiagram) -> (i64, i64) {
    let d = &cd.base;
    let mut pts: Vec<i64> = d.vees.iter().chain(&d.crosses).chain(&d.circles).copied().collect();
    pts.extend(cd.arcs.iter().map(|a| a.right));
    match (pts.iter().min(), pts.iter().max()) {
        (Some(&a), Some(&b)) => (a - 1, b + 1),
        _ => (0, 0),
    }
}

/// Ruler, symbol row and one row per nesting level of cups.
pub fn render_diagram(cd: &CupDiagram, style: Style) -> String {
    let g = match style {
        Style::Ascii => &ASCII,
        Style::Unicode => &UNICODE,
    };
    let (lo, hi) = window(cd);
    let width = (lo..=hi).map(|p| p.to_string().len()).max().unwrap_or(1) + 1;
    let col = |p: i64| (p - lo) as usize * width + width - 1;
    let len = col(hi) + 1;

    let mut ruler = String::new();
    let mut symbols = String::new();
    for p in lo..=hi {
        ruler.push_str(&format!("{p:>width$}"));
        let s = match cd.base.label(p) {
            Label::Vee => g.vee,
            Label::Wedge => g.wedge,
            Label::Cross => g.cross,
            Label::Circle => g.circle,
        };
        symbols.push_str(&" ".repeat(width - 1));
        symbols.push_str(s);
    }

    let levels = arc_levels(&cd.arcs);
    let depth = levels.values().copied().max().unwrap_or(0);
    let mut lines = vec![ruler, symbols];
    for t in 1..=depth {
        let mut row = vec![' '; len];
        for a in &cd.arcs {
            let lv = levels[a];
            if lv > t {
                row[col(a.left)] = g.bar;
                row[col(a.right)] = g.bar;
            } else if lv == t {
                for c in &mut row[col(a.left)..col(a.right)] {
                    *c = g.fill;
                }
                row[col(a.left)] = g.left;
                row[col(a.right)] = g.right;
            }
        }
        lines.push(row.into_iter().collect());
    }
    let mut out: Vec<String> = lines.into_iter().map(|l| l.trim_end().to_string()).collect();
    out.push(String::new());
    out.join("\n")
}

// Leaves sit on level 1; a cup sits one level below its deepest child.
fn arc_levels(arcs: &[Arc]) -> HashMap<Arc, usize> {
    let mut by_width = arcs.to_vec();
    by_width.sort_by_key(|a| a.right - a.left);
    let mut lv: HashMap<Arc, usize> = HashMap::new();
    for a in &by_width {
        let inner = arcs.iter().filter(|b| a.contains(b)).map(|b| lv[b]).max().unwrap_or(0);
        lv.insert(*a, inner + 1);
    }
    lv
}
