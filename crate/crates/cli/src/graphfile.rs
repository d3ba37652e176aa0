//! Plain-text dump of a truncated line complex.

use std::fmt::Write as _;

use speiser_core::{FaceKind, GraphItem, SpeiserGraph};

/// Canonical text of `g`: vertices with rotations and corner labels, edges
/// as half-edge pairs, ends with their chains, and unbounded faces.
pub fn serialize_graph(g: &SpeiserGraph) -> String {
    let base = g.base();
    let mut out = String::new();
    writeln!(out, "speiser-graph v1").unwrap();
    let names: Vec<&str> = base.labels().iter().map(|l| l.name.as_str()).collect();
    writeln!(out, "basepoints: {}", names.join(",")).unwrap();
    writeln!(out, "depth: {}", g.depth()).unwrap();
    if let Some((a, b)) = g.axis_orientation() {
        writeln!(out, "axis-orientation: v{a} -> v{b}").unwrap();
    }
    for (v, vx) in g.vertices().iter().enumerate() {
        let items: Vec<String> = g
            .rotation(v)
            .iter()
            .map(|item| match item {
                GraphItem::Half(h) => format!("h{h}"),
                GraphItem::Open(k) => format!("open{k}"),
            })
            .collect();
        let corners: Vec<&str> = (0..items.len())
            .map(|k| base.name(g.corner_label(v, k)))
            .collect();
        writeln!(
            out,
            "vertex: {v} {} {} rotation({}) corners({})",
            vx.parity.symbol(),
            u8::from(vx.on_axis),
            items.join(","),
            corners.join(",")
        )
        .unwrap();
    }
    for h in 0..g.half_edge_count() {
        let m = g.mate(h);
        if h < m {
            writeln!(
                out,
                "edge: h{h} v{} h{m} v{}",
                g.half_vertex(h),
                g.half_vertex(m)
            )
            .unwrap();
        }
    }
    for end in g.ends() {
        let chain: Vec<String> = end.chain.iter().map(|v| format!("v{v}")).collect();
        writeln!(
            out,
            "end: {} attach v{} chain({}) flank({},{}) axial({}) period({},{})",
            end.id,
            end.attach,
            chain.join(","),
            base.name(end.left),
            base.name(end.right),
            u8::from(end.axial),
            end.period[0],
            end.period[1]
        )
        .unwrap();
    }
    let two_gons = g
        .faces()
        .iter()
        .filter(|f| f.kind == FaceKind::TwoGon)
        .count();
    writeln!(out, "two-gons: {two_gons}").unwrap();
    for (i, face) in g.unbounded_faces() {
        let label = face.label.map_or("?", |l| base.name(l));
        writeln!(
            out,
            "unbounded-face: {i} label({label}) corners({})",
            face.corners.len()
        )
        .unwrap();
    }
    out
}
