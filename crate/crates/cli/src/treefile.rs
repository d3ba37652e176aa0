//! The `speiser-tree v1` text format.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use speiser_core::{
    format_complex, BasePoint, BasePointSet, ExtendedComplex, LabelValue, Parity, SpeiserTree,
    TreeEdge, TreeEnd, TreeFileError, TreeInvolution, TreeItem, TreeParts, TreeVertex,
};

use crate::number::parse_extended;

pub const HEADER: &str = "speiser-tree v1";

fn syntax(line: usize, message: impl Into<String>) -> TreeFileError {
    TreeFileError::Syntax {
        line,
        message: message.into(),
    }
}

fn violation(line: usize, rule: impl Into<String>) -> TreeFileError {
    TreeFileError::InvariantViolation {
        line,
        rule: rule.into(),
    }
}

fn value_text(label: &BasePoint) -> String {
    match label.projection() {
        ExtendedComplex::Infinity => "inf".into(),
        ExtendedComplex::Finite(z) => format_complex(z),
    }
}

/// Canonical text of `tree`: sections in a fixed order, ids ascending.
pub fn serialize_tree(tree: &SpeiserTree) -> String {
    let base = tree.base();
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    let points: Vec<String> = base
        .labels()
        .iter()
        .map(|l| format!("{}={}", l.name, value_text(l)))
        .collect();
    writeln!(out, "basepoints: {}", points.join(",")).unwrap();
    if let Some((a, b)) = tree.axis_orientation() {
        writeln!(out, "axis-orientation: v{a} -> v{b}").unwrap();
    }
    for (i, v) in tree.vertices().iter().enumerate() {
        writeln!(
            out,
            "vertex: {i} {} {}",
            v.parity.symbol(),
            u8::from(v.on_axis)
        )
        .unwrap();
    }
    for (i, e) in tree.edges().iter().enumerate() {
        writeln!(out, "edge: {i} v{} v{}", e.a, e.b).unwrap();
    }
    for v in 0..tree.vertices().len() {
        let items: Vec<String> = tree
            .rotation(v)
            .iter()
            .map(|item| match item {
                TreeItem::Edge(e) => format!("e{e}"),
                TreeItem::End(k) => format!("end{k}"),
            })
            .collect();
        writeln!(out, "rotation: v{v}: {}", items.join(",")).unwrap();
    }
    for (i, end) in tree.ends().iter().enumerate() {
        writeln!(
            out,
            "end: {i} at v{} flank({},{}) axial({})",
            end.at,
            base.name(end.left),
            base.name(end.right),
            u8::from(end.axial)
        )
        .unwrap();
    }
    if let Some(inv) = tree.involution() {
        for (a, &b) in inv.vertices.iter().enumerate() {
            if a <= b {
                writeln!(out, "involution: v{a}<->v{b}").unwrap();
            }
        }
        for (a, &b) in inv.ends.iter().enumerate() {
            if a <= b {
                writeln!(out, "involution: end{a}<->end{b}").unwrap();
            }
        }
    }
    out
}

fn prefixed_id(token: &str, prefix: &str, line: usize) -> Result<usize, TreeFileError> {
    token
        .strip_prefix(prefix)
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| syntax(line, format!("expected `{prefix}<id>`, found `{token}`")))
}

fn plain_id(token: &str, line: usize) -> Result<usize, TreeFileError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected an id, found `{token}`")))
}

fn flag(token: &str, line: usize) -> Result<bool, TreeFileError> {
    match token {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(syntax(line, format!("expected 0 or 1, found `{token}`"))),
    }
}

/// `name(inner)` -> `inner`.
fn wrapped<'a>(token: &'a str, name: &str, line: usize) -> Result<&'a str, TreeFileError> {
    token
        .strip_prefix(name)
        .and_then(|t| t.strip_prefix('('))
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| syntax(line, format!("expected `{name}(...)`, found `{token}`")))
}

fn parse_base_point(entry: &str, line: usize) -> Result<BasePoint, TreeFileError> {
    let (name, value) = entry
        .split_once('=')
        .ok_or_else(|| syntax(line, format!("base point `{entry}` needs `name=value`")))?;
    let name = name.trim();
    if name.is_empty() {
        return Err(syntax(line, "empty base point name"));
    }
    let value =
        parse_extended(value).ok_or_else(|| syntax(line, format!("bad value in `{entry}`")))?;
    let split = [('+', true), ('-', false)]
        .into_iter()
        .find_map(|(c, upper)| {
            name.strip_suffix(c)
                .filter(|b| !b.is_empty())
                .map(|b| (b, upper))
        });
    match split {
        Some((base, upper)) => match value {
            ExtendedComplex::Finite(z) if z.im == 0.0 => Ok(BasePoint {
                name: name.to_string(),
                value: LabelValue::Split {
                    base: base.to_string(),
                    base_value: z.re,
                    upper,
                },
            }),
            _ => Err(violation(
                line,
                format!("split label `{name}` needs a finite real value"),
            )),
        },
        None => Ok(BasePoint::point(name, value)),
    }
}

/// Records keyed by id, remembering the line each came from.
struct Table<T> {
    kind: &'static str,
    rows: BTreeMap<usize, (usize, T)>,
}

impl<T> Table<T> {
    fn new(kind: &'static str) -> Self {
        Table {
            kind,
            rows: BTreeMap::new(),
        }
    }

    fn insert(&mut self, id: usize, line: usize, row: T) -> Result<(), TreeFileError> {
        if self.rows.insert(id, (line, row)).is_some() {
            return Err(violation(line, format!("duplicate {} id {id}", self.kind)));
        }
        Ok(())
    }

    /// Rows in id order; ids must be `0..n`.
    fn dense(self) -> Result<Vec<(usize, T)>, TreeFileError> {
        let mut out = Vec::with_capacity(self.rows.len());
        for (expected, (id, row)) in self.rows.into_iter().enumerate() {
            if id != expected {
                return Err(violation(
                    row.0,
                    format!(
                        "{} ids must be 0..n without gaps, missing {expected}",
                        self.kind
                    ),
                ));
            }
            out.push(row);
        }
        Ok(out)
    }
}

/// Parse a tree file. The base set is treated as symmetric when every label
/// has a conjugate.
pub fn parse_tree_file(text: &str) -> Result<SpeiserTree, TreeFileError> {
    let mut header_line = None;
    let mut base: Option<(usize, Vec<BasePoint>)> = None;
    let mut axis: Option<(usize, (usize, usize))> = None;
    let mut vertices = Table::new("vertex");
    let mut edges = Table::new("edge");
    let mut ends = Table::new("end");
    let mut rotations: BTreeMap<usize, (usize, Vec<TreeItem>)> = BTreeMap::new();
    let mut pairs: Vec<(usize, bool, usize, usize)> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if header_line.is_none() {
            if content != HEADER {
                return Err(syntax(line, format!("expected header `{HEADER}`")));
            }
            header_line = Some(line);
            continue;
        }
        let (key, rest) = content
            .split_once(':')
            .ok_or_else(|| syntax(line, format!("expected `key: value`, found `{content}`")))?;
        let rest = rest.trim();
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        match key.trim() {
            "basepoints" => {
                if base.is_some() {
                    return Err(syntax(line, "second `basepoints:` line"));
                }
                let points = rest
                    .split(',')
                    .map(|e| parse_base_point(e.trim(), line))
                    .collect::<Result<Vec<_>, _>>()?;
                base = Some((line, points));
            }
            "axis-orientation" => {
                let [a, arrow, b] = tokens[..] else {
                    return Err(syntax(line, "expected `v<id> -> v<id>`"));
                };
                if arrow != "->" {
                    return Err(syntax(line, "expected `->`"));
                }
                axis = Some((
                    line,
                    (prefixed_id(a, "v", line)?, prefixed_id(b, "v", line)?),
                ));
            }
            "vertex" => {
                let [id, parity, on_axis] = tokens[..] else {
                    return Err(syntax(line, "expected `id parity axis`"));
                };
                let parity = match parity {
                    "x" => Parity::Cross,
                    "o" => Parity::Circle,
                    _ => {
                        return Err(syntax(
                            line,
                            format!("parity must be x or o, found `{parity}`"),
                        ))
                    }
                };
                let v = TreeVertex {
                    parity,
                    on_axis: flag(on_axis, line)?,
                };
                vertices.insert(plain_id(id, line)?, line, v)?;
            }
            "edge" => {
                let [id, a, b] = tokens[..] else {
                    return Err(syntax(line, "expected `id v<id> v<id>`"));
                };
                let e = TreeEdge {
                    a: prefixed_id(a, "v", line)?,
                    b: prefixed_id(b, "v", line)?,
                };
                edges.insert(plain_id(id, line)?, line, e)?;
            }
            "rotation" => {
                let (v, items) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(line, "expected `v<id>: item,item,...`"))?;
                let v = prefixed_id(v.trim(), "v", line)?;
                let items = items
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        if t.starts_with("end") {
                            prefixed_id(t, "end", line).map(TreeItem::End)
                        } else {
                            prefixed_id(t, "e", line).map(TreeItem::Edge)
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if rotations.insert(v, (line, items)).is_some() {
                    return Err(violation(line, format!("second rotation for v{v}")));
                }
            }
            "end" => {
                let [id, at, v, flank, axial] = tokens[..] else {
                    return Err(syntax(line, "expected `id at v<id> flank(a,b) axial(0|1)`"));
                };
                if at != "at" {
                    return Err(syntax(line, "expected `at`"));
                }
                let (left, right) = wrapped(flank, "flank", line)?
                    .split_once(',')
                    .ok_or_else(|| syntax(line, "flank needs two names"))?;
                let row = (
                    prefixed_id(v, "v", line)?,
                    left.trim().to_string(),
                    right.trim().to_string(),
                    flag(wrapped(axial, "axial", line)?, line)?,
                );
                ends.insert(plain_id(id, line)?, line, row)?;
            }
            "involution" => {
                let (a, b) = rest
                    .split_once("<->")
                    .ok_or_else(|| syntax(line, "expected `a<->b`"))?;
                let (a, b) = (a.trim(), b.trim());
                let is_end = a.starts_with("end");
                let prefix = if is_end { "end" } else { "v" };
                pairs.push((
                    line,
                    is_end,
                    prefixed_id(a, prefix, line)?,
                    prefixed_id(b, prefix, line)?,
                ));
            }
            other => return Err(syntax(line, format!("unknown key `{other}`"))),
        }
    }

    let header_line = header_line.ok_or_else(|| syntax(1, format!("missing header `{HEADER}`")))?;
    let (base_line, points) =
        base.ok_or_else(|| syntax(header_line, "missing `basepoints:` line"))?;
    let base = BasePointSet::new(points.clone(), true)
        .or_else(|_| BasePointSet::new(points, false))
        .map_err(|e| violation(base_line, e.to_string()))?;

    let vertices = vertices.dense()?;
    if vertices.is_empty() {
        return Err(violation(header_line, "tree has no vertices"));
    }
    let nv = vertices.len();
    let edges = edges.dense()?;
    for (line, e) in &edges {
        if e.a >= nv || e.b >= nv {
            return Err(violation(*line, "edge refers to an unknown vertex"));
        }
    }
    let ends = ends.dense()?;
    let mut tree_ends = Vec::with_capacity(ends.len());
    for (line, (at, left, right, axial)) in &ends {
        if *at >= nv {
            return Err(violation(
                *line,
                format!("end attached to unknown vertex v{at}"),
            ));
        }
        let label = |name: &str| {
            base.index_of(name)
                .ok_or_else(|| violation(*line, format!("flank `{name}` is not a base point")))
        };
        tree_ends.push(TreeEnd {
            at: *at,
            left: label(left)?,
            right: label(right)?,
            axial: *axial,
        });
    }
    let mut rotation = Vec::with_capacity(nv);
    for (v, (vertex_line, _)) in vertices.iter().enumerate() {
        let (line, items) = rotations
            .remove(&v)
            .ok_or_else(|| violation(*vertex_line, format!("v{v} has no rotation")))?;
        for item in &items {
            let known = match *item {
                TreeItem::Edge(e) => e < edges.len(),
                TreeItem::End(k) => k < ends.len(),
            };
            if !known {
                let name = match item {
                    TreeItem::Edge(e) => format!("edge e{e}"),
                    TreeItem::End(k) => format!("end end{k}"),
                };
                return Err(violation(
                    line,
                    format!("rotation refers to unknown {name}"),
                ));
            }
        }
        rotation.push(items);
    }
    if let Some((&v, (line, _))) = rotations.iter().next() {
        return Err(violation(
            *line,
            format!("rotation for unknown vertex v{v}"),
        ));
    }
    let axis_orientation = match axis {
        Some((line, (a, b))) if a >= nv || b >= nv => {
            return Err(violation(
                line,
                "axis orientation refers to an unknown vertex",
            ));
        }
        Some((_, pair)) => Some(pair),
        None => None,
    };
    let involution = if pairs.is_empty() {
        None
    } else {
        let mut vmap = vec![None; nv];
        let mut emap = vec![None; tree_ends.len()];
        for &(line, is_end, a, b) in &pairs {
            let map = if is_end { &mut emap } else { &mut vmap };
            if a >= map.len() || b >= map.len() {
                return Err(violation(line, "involution refers to an unknown item"));
            }
            if map[a].is_some_and(|x| x != b) || map[b].is_some_and(|x| x != a) {
                return Err(violation(line, "involution pairs overlap"));
            }
            map[a] = Some(b);
            map[b] = Some(a);
        }
        let last = pairs.last().map(|p| p.0).unwrap_or(header_line);
        let complete = |m: Vec<Option<usize>>| m.into_iter().collect::<Option<Vec<usize>>>();
        let vertices = complete(vmap)
            .ok_or_else(|| violation(last, "involution does not cover every vertex"))?;
        let ends =
            complete(emap).ok_or_else(|| violation(last, "involution does not cover every end"))?;
        Some(TreeInvolution { vertices, ends })
    };

    let parts = TreeParts {
        base,
        vertices: vertices.into_iter().map(|(_, v)| v).collect(),
        edges: edges.into_iter().map(|(_, e)| e).collect(),
        rotation,
        ends: tree_ends,
        axis_orientation,
        involution,
    };
    SpeiserTree::new(parts).map_err(|e| violation(header_line, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_names_become_split_labels() {
        let p = parse_base_point("r+=-1+0i", 3).unwrap();
        assert_eq!(
            p.value,
            LabelValue::Split {
                base: "r".into(),
                base_value: -1.0,
                upper: true
            }
        );
        assert_eq!(value_text(&p), "-1+0i");
        let m = parse_base_point("r-=-1+0i", 3).unwrap();
        assert!(matches!(m.value, LabelValue::Split { upper: false, .. }));
        assert!(matches!(
            parse_base_point("r+=1i", 3),
            Err(TreeFileError::InvariantViolation { line: 3, .. })
        ));
        assert_eq!(
            parse_base_point("-i=0-1i", 1).unwrap().value,
            LabelValue::Point(ExtendedComplex::Finite(num_complex::Complex64::new(
                0.0, -1.0
            )))
        );
    }

    #[test]
    fn split_base_set_shares_a_slot() {
        let points: Vec<BasePoint> = ["0=0+0i", "r+=-1+0i", "r-=-1+0i", "inf=inf"]
            .iter()
            .map(|e| parse_base_point(e, 1).unwrap())
            .collect();
        let set = BasePointSet::new(points, false).unwrap();
        assert_eq!(set.q(), 3);
    }
}
