//! Graphviz export of Speiser trees.

use std::fmt::Write as _;

use speiser_core::{Parity, SpeiserTree, TreeItem};

fn shape(p: Parity) -> &'static str {
    match p {
        Parity::Cross => "box",
        Parity::Circle => "circle",
    }
}

/// Faces on the two sides of item `pos` at vertex `v`, left first, looking
/// outward along the item.
fn sides(tree: &SpeiserTree, v: usize, pos: usize) -> String {
    let d = tree.degree(v);
    let base = tree.base();
    let left = base.name(tree.corner_label(v, pos));
    let right = base.name(tree.corner_label(v, (pos + d - 1) % d));
    format!("{left}|{right}")
}

/// DOT text for `tree`. Crosses are boxes and circles are circles; edges on
/// the axis and axial ends are bold; each edge is labeled with the faces on
/// its two sides. Ends are drawn as point nodes `end<id>`.
pub fn export_dot(tree: &SpeiserTree) -> String {
    let mut out = String::new();
    out.push_str("graph speiser {\n");
    out.push_str("  node [fontname=\"Helvetica\"];\n");
    out.push_str("  edge [fontname=\"Helvetica\"];\n");
    for (i, v) in tree.vertices().iter().enumerate() {
        let style = if v.on_axis { ", style=bold" } else { "" };
        writeln!(
            out,
            "  v{i} [shape={}, label=\"v{i}\"{style}];",
            shape(v.parity)
        )
        .unwrap();
    }
    for i in 0..tree.ends().len() {
        writeln!(out, "  end{i} [shape=point, label=\"\"];").unwrap();
    }
    for (i, e) in tree.edges().iter().enumerate() {
        let pos = tree.position(e.a, TreeItem::Edge(i));
        let on_axis = tree.vertices()[e.a].on_axis && tree.vertices()[e.b].on_axis;
        let style = if on_axis { ", style=bold" } else { "" };
        writeln!(
            out,
            "  v{} -- v{} [label=\"{}\"{style}];",
            e.a,
            e.b,
            sides(tree, e.a, pos)
        )
        .unwrap();
    }
    for (i, end) in tree.ends().iter().enumerate() {
        let pos = tree.position(end.at, TreeItem::End(i));
        let style = if end.axial { "bold" } else { "dashed" };
        writeln!(
            out,
            "  v{} -- end{i} [label=\"{}\", style={style}];",
            end.at,
            sides(tree, end.at, pos)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
