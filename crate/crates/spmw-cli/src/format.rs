//! Graph file parsing and table rendering.

use std::fmt;

use spmw::graph::Multigraph;
use spmw::search::{Build, Classification, ConnectOp, Tables};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// A parsed graph file. The header is "V E"; an optional second line "s t"
/// names two terminal vertices; then exactly E lines "u v", one per edge.
/// Repeated lines are parallel edges and "u u" is a loop.
#[derive(Debug)]
pub struct GraphFile {
    pub graph: Multigraph,
    pub terminals: Option<(usize, usize)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphFileError {
    Empty,
    BadHeader { line: String },
    BadLine { line_no: usize, line: String },
    VertexOutOfRange { line_no: usize, vertex: usize, vertices: usize },
    WrongLineCount { edges: usize, got: usize },
    EqualTerminals,
}

impl fmt::Display for GraphFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFileError::Empty => write!(f, "file has no non-empty lines"),
            GraphFileError::BadHeader { line } => {
                write!(f, "expected header \"V E\", found {line:?}")
            }
            GraphFileError::BadLine { line_no, line } => {
                write!(f, "line {line_no}: expected two integers, found {line:?}")
            }
            GraphFileError::VertexOutOfRange { line_no, vertex, vertices } => {
                write!(f, "line {line_no}: vertex {vertex} out of range for {vertices} vertices")
            }
            GraphFileError::WrongLineCount { edges, got } => {
                write!(f, "expected {edges} edge lines (or terminals plus {edges}), found {got}")
            }
            GraphFileError::EqualTerminals => write!(f, "the two terminals must differ"),
        }
    }
}

impl std::error::Error for GraphFileError {}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile, GraphFileError> {
    // Keep original line numbers for error messages.
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or(GraphFileError::Empty)?;
    let (vertices, edges) = parse_pair(header).ok_or_else(|| GraphFileError::BadHeader {
        line: header.to_string(),
    })?;
    let body: Vec<(usize, &str)> = lines.collect();

    let terminal_line = match body.len() {
        n if n == edges => None,
        n if n == edges + 1 => Some(body[0]),
        n => return Err(GraphFileError::WrongLineCount { edges, got: n }),
    };
    let check_pair = |(line_no, line): (usize, &str)| -> Result<(usize, usize), GraphFileError> {
        let (u, v) = parse_pair(line).ok_or_else(|| GraphFileError::BadLine {
            line_no,
            line: line.to_string(),
        })?;
        for w in [u, v] {
            if w >= vertices {
                return Err(GraphFileError::VertexOutOfRange { line_no, vertex: w, vertices });
            }
        }
        Ok((u, v))
    };

    let terminals = match terminal_line {
        Some(pair) => {
            let (s, t) = check_pair(pair)?;
            if s == t {
                return Err(GraphFileError::EqualTerminals);
            }
            Some((s, t))
        }
        None => None,
    };
    let mut graph = Multigraph::new(vertices);
    for &entry in &body[terminal_line.is_some() as usize..] {
        let (u, v) = check_pair(entry)?;
        graph.add_edge(u, v);
    }
    Ok(GraphFile { graph, terminals })
}

/// Serializes a graph in the same file format `parse_graph_file` reads.
pub fn graph_to_file(g: &Multigraph, terminals: Option<(usize, usize)>) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    if let Some((s, t)) = terminals {
        out.push_str(&format!("{s} {t}\n"));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Table cell notation: "-" on the diagonal, "N" for non-extendable, a bare
/// index for a reduction target, "=i" for an entry already in the table.
pub fn cell_text(cell: Option<Classification>) -> String {
    match cell {
        None => "-".to_string(),
        Some(Classification::InTable(i)) => format!("={i}"),
        Some(Classification::NonExtendable) => "N".to_string(),
        Some(Classification::Reducible(i)) => i.to_string(),
    }
}

pub fn build_text(build: Build) -> String {
    match build {
        Build::Leaf => "-".to_string(),
        Build::Connect(op, l, r) => format!("{op}({l},{r})"),
    }
}

pub fn tables_text(t: &Tables) -> String {
    let mut out = String::new();
    out.push_str("table 1: survivors of the connection search\n");
    let expr_width = t
        .rows
        .iter()
        .map(|r| r.tree.to_string().len())
        .max()
        .unwrap_or(0)
        .max("expression".len());
    out.push_str(&format!(
        "{:>5}  {:>5}  {:>4}  {:<14}  {:<expr_width$}  params (tau, tau2, alpha, alpha2, alpha2*, alpha*)\n",
        "index", "edges", "dual", "build", "expression"
    ));
    for row in &t.rows {
        out.push_str(&format!(
            "{:>5}  {:>5}  {:>4}  {:<14}  {:<expr_width$}  {}\n",
            row.index,
            row.edges,
            row.dual,
            build_text(row.build),
            row.tree.to_string(),
            row.params
        ));
    }
    let n = t.rows.len();
    out.push_str("\ntable 2: pairwise combinations (series above the diagonal, parallel below)\n");
    out.push_str(&format!("{:>5}", ""));
    for j in 0..n {
        out.push_str(&format!("{j:>5}"));
    }
    out.push('\n');
    for i in 0..n {
        out.push_str(&format!("{i:>5}"));
        for j in 0..n {
            out.push_str(&format!("{:>5}", cell_text(t.pairwise[i][j])));
        }
        out.push('\n');
    }
    out.push_str("\ntable 3: an entry combined with itself\n");
    out.push_str(&format!("{:>9}", ""));
    for j in 0..n {
        out.push_str(&format!("{j:>5}"));
    }
    out.push('\n');
    for (label, cells) in [("series", &t.self_series), ("parallel", &t.self_parallel)] {
        out.push_str(&format!("{label:>9}"));
        for &c in cells.iter() {
            out.push_str(&format!("{:>5}", cell_text(Some(c))));
        }
        out.push('\n');
    }
    out
}

pub fn table1_csv(t: &Tables) -> String {
    let mut out = String::from(
        "index,edges,dual,op,left,right,expression,tau,tau2,alpha,alpha2,alpha2_star,alpha_star\n",
    );
    for row in &t.rows {
        let (op, l, r) = match row.build {
            Build::Leaf => ("leaf".to_string(), String::new(), String::new()),
            Build::Connect(op, l, r) => (op.to_string(), l.to_string(), r.to_string()),
        };
        let p = row.params.as_array();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            row.index, row.edges, row.dual, op, l, r, row.tree,
            p[0], p[1], p[2], p[3], p[4], p[5]
        ));
    }
    out
}

pub fn table2_csv(t: &Tables) -> String {
    let n = t.rows.len();
    let mut out = String::from("index");
    for j in 0..n {
        out.push_str(&format!(",{j}"));
    }
    out.push('\n');
    for i in 0..n {
        out.push_str(&i.to_string());
        for j in 0..n {
            out.push_str(&format!(",{}", cell_text(t.pairwise[i][j])));
        }
        out.push('\n');
    }
    out
}

pub fn table3_csv(t: &Tables) -> String {
    let n = t.rows.len();
    let mut out = String::from("op");
    for j in 0..n {
        out.push_str(&format!(",{j}"));
    }
    out.push('\n');
    for (label, cells) in [("series", &t.self_series), ("parallel", &t.self_parallel)] {
        out.push_str(label);
        for &c in cells.iter() {
            out.push_str(&format!(",{}", cell_text(Some(c))));
        }
        out.push('\n');
    }
    out
}

fn build_json(build: Build) -> serde_json::Value {
    match build {
        Build::Leaf => serde_json::Value::Null,
        Build::Connect(op, l, r) => serde_json::json!({
            "op": match op { ConnectOp::Series => "series", ConnectOp::Parallel => "parallel" },
            "left": l,
            "right": r,
        }),
    }
}

pub fn params_json(p: &spmw::params::ParamVec) -> serde_json::Value {
    // Decimal strings: the counts outgrow u64 on deep expressions.
    serde_json::Value::Array(
        p.as_array().iter().map(|n| serde_json::Value::String(n.to_string())).collect(),
    )
}

pub fn tables_json(t: &Tables) -> serde_json::Value {
    let cell = |c: Option<Classification>| match c {
        None => serde_json::Value::Null,
        some => serde_json::Value::String(cell_text(some)),
    };
    serde_json::json!({
        "survivors": t.rows.iter().map(|row| serde_json::json!({
            "index": row.index,
            "edges": row.edges,
            "dual": row.dual,
            "build": build_json(row.build),
            "expression": row.tree.to_string(),
            "params": params_json(&row.params),
        })).collect::<Vec<_>>(),
        "pairwise": t.pairwise.iter()
            .map(|row| row.iter().map(|&c| cell(c)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "self_series": t.self_series.iter().map(|&c| cell(Some(c))).collect::<Vec<_>>(),
        "self_parallel": t.self_parallel.iter().map(|&c| cell(Some(c))).collect::<Vec<_>>(),
    })
}
