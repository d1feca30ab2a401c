//! Series-parallel decomposition trees.
//!
//! A tree describes how a two-terminal graph is assembled from single edges
//! by series and parallel connection. Series children are ordered (source to
//! sink), parallel children are not. Swapping source and sink of the whole
//! graph corresponds to reversing the tree globally, so trees are compared
//! up to that reversal.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::graph::{Multigraph, TwoTerminal};
use crate::params::ParamVec;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum DecompTree {
    /// A single edge from source to sink.
    Leaf,
    /// Children chained source to sink, in order.
    Series(Vec<DecompTree>),
    /// Children sharing both terminals.
    Parallel(Vec<DecompTree>),
}

use DecompTree::{Leaf, Parallel, Series};

fn kind_rank(t: &DecompTree) -> u8 {
    match t {
        Leaf => 0,
        Series(_) => 1,
        Parallel(_) => 2,
    }
}

impl Ord for DecompTree {
    fn cmp(&self, other: &Self) -> Ordering {
        kind_rank(self).cmp(&kind_rank(other)).then_with(|| {
            let (a, b) = match (self, other) {
                (Series(a), Series(b)) | (Parallel(a), Parallel(b)) => (a, b),
                _ => return Ordering::Equal, // both leaves
            };
            a.len().cmp(&b.len()).then_with(|| a.cmp(b))
        })
    }
}

impl PartialOrd for DecompTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl DecompTree {
    pub fn series(children: Vec<DecompTree>) -> DecompTree {
        debug_assert!(children.len() >= 2);
        Series(children)
    }

    pub fn parallel(children: Vec<DecompTree>) -> DecompTree {
        debug_assert!(children.len() >= 2);
        Parallel(children)
    }

    /// Number of edges in the realization.
    pub fn edge_count(&self) -> usize {
        match self {
            Leaf => 1,
            Series(cs) | Parallel(cs) => cs.iter().map(DecompTree::edge_count).sum(),
        }
    }

    /// Parameter vector of the realization, computed without building it.
    pub fn eval(&self) -> ParamVec {
        match self {
            Leaf => ParamVec::k2(),
            Series(cs) => {
                let mut it = cs.iter().map(DecompTree::eval);
                let first = it.next().expect("series node has children");
                it.fold(first, |acc, p| acc.series(&p))
            }
            Parallel(cs) => {
                let mut it = cs.iter().map(DecompTree::eval);
                let first = it.next().expect("parallel node has children");
                it.fold(first, |acc, p| acc.parallel(&p))
            }
        }
    }

    /// Tree of the realization with source and sink exchanged.
    pub fn reversed(&self) -> DecompTree {
        match self {
            Leaf => Leaf,
            Series(cs) => Series(cs.iter().rev().map(DecompTree::reversed).collect()),
            Parallel(cs) => Parallel(cs.iter().map(DecompTree::reversed).collect()),
        }
    }

    /// Tree of the series-parallel dual (series and parallel exchanged).
    pub fn dual(&self) -> DecompTree {
        match self {
            Leaf => Leaf,
            Series(cs) => Parallel(cs.iter().map(DecompTree::dual).collect()),
            Parallel(cs) => Series(cs.iter().map(DecompTree::dual).collect()),
        }
    }

    /// Normal form for a fixed source-sink orientation: associative nests
    /// flattened, parallel children sorted. Series order is preserved.
    fn strict(&self) -> DecompTree {
        match self {
            Leaf => Leaf,
            Series(cs) => {
                let mut out = Vec::new();
                for c in cs {
                    match c.strict() {
                        Series(inner) => out.extend(inner),
                        other => out.push(other),
                    }
                }
                if out.len() == 1 {
                    out.pop().unwrap()
                } else {
                    Series(out)
                }
            }
            Parallel(cs) => {
                let mut out = Vec::new();
                for c in cs {
                    match c.strict() {
                        Parallel(inner) => out.extend(inner),
                        other => out.push(other),
                    }
                }
                if out.len() == 1 {
                    out.pop().unwrap()
                } else {
                    out.sort();
                    Parallel(out)
                }
            }
        }
    }

    /// Canonical representative among all trees whose realizations are
    /// two-terminal isomorphic, allowing the terminals to swap.
    pub fn canonical(&self) -> DecompTree {
        let fwd = self.strict();
        let rev = self.reversed().strict();
        if rev < fwd {
            rev
        } else {
            fwd
        }
    }

    /// Builds the realization. Source is vertex 0, sink is vertex 1.
    pub fn realize(&self) -> TwoTerminal {
        let mut g = Multigraph::new(2);
        self.add_into(&mut g, 0, 1);
        TwoTerminal {
            graph: g,
            source: 0,
            sink: 1,
        }
    }

    fn add_into(&self, g: &mut Multigraph, s: usize, t: usize) {
        match self {
            Leaf => g.add_edge(s, t),
            Series(cs) => {
                let mut cur = s;
                for (i, c) in cs.iter().enumerate() {
                    let next = if i == cs.len() - 1 { t } else { g.add_vertex() };
                    c.add_into(g, cur, next);
                    cur = next;
                }
            }
            Parallel(cs) => {
                for c in cs {
                    c.add_into(g, s, t);
                }
            }
        }
    }

    pub fn parse(input: &str) -> Result<DecompTree, TreeParseError> {
        let bytes = input.as_bytes();
        let mut pos = 0;
        let tree = parse_tree(bytes, &mut pos)?;
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(TreeParseError {
                position: pos,
                kind: TreeParseErrorKind::TrailingInput,
            });
        }
        Ok(tree)
    }
}

/// Parse failure with the byte offset it occurred at.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TreeParseError {
    pub position: usize,
    pub kind: TreeParseErrorKind,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TreeParseErrorKind {
    /// Expected `K`, `S`, or `P`.
    ExpectedNode,
    /// Expected `(` after a connective.
    ExpectedOpen,
    /// Expected `,` or `)` after a child.
    ExpectedSeparator,
    /// A connective needs at least two children.
    TooFewChildren,
    UnexpectedEnd,
    TrailingInput,
}

impl fmt::Display for TreeParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            TreeParseErrorKind::ExpectedNode => "expected K, S, or P",
            TreeParseErrorKind::ExpectedOpen => "expected ( after connective",
            TreeParseErrorKind::ExpectedSeparator => "expected , or )",
            TreeParseErrorKind::TooFewChildren => "connective needs at least two children",
            TreeParseErrorKind::UnexpectedEnd => "unexpected end of input",
            TreeParseErrorKind::TrailingInput => "trailing input after tree",
        };
        write!(f, "{} at byte {}", what, self.position)
    }
}

impl core::error::Error for TreeParseError {}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_tree(bytes: &[u8], pos: &mut usize) -> Result<DecompTree, TreeParseError> {
    skip_ws(bytes, pos);
    let start = *pos;
    let head = *bytes.get(*pos).ok_or(TreeParseError {
        position: start,
        kind: TreeParseErrorKind::UnexpectedEnd,
    })?;
    *pos += 1;
    let is_series = match head {
        b'K' => return Ok(Leaf),
        b'S' => true,
        b'P' => false,
        _ => {
            return Err(TreeParseError {
                position: start,
                kind: TreeParseErrorKind::ExpectedNode,
            })
        }
    };
    skip_ws(bytes, pos);
    if bytes.get(*pos) != Some(&b'(') {
        return Err(TreeParseError {
            position: *pos,
            kind: if *pos < bytes.len() {
                TreeParseErrorKind::ExpectedOpen
            } else {
                TreeParseErrorKind::UnexpectedEnd
            },
        });
    }
    *pos += 1;
    let mut children = vec![parse_tree(bytes, pos)?];
    loop {
        skip_ws(bytes, pos);
        match bytes.get(*pos) {
            Some(b',') => {
                *pos += 1;
                children.push(parse_tree(bytes, pos)?);
            }
            Some(b')') => {
                *pos += 1;
                break;
            }
            Some(_) => {
                return Err(TreeParseError {
                    position: *pos,
                    kind: TreeParseErrorKind::ExpectedSeparator,
                })
            }
            None => {
                return Err(TreeParseError {
                    position: *pos,
                    kind: TreeParseErrorKind::UnexpectedEnd,
                })
            }
        }
    }
    if children.len() < 2 {
        return Err(TreeParseError {
            position: start,
            kind: TreeParseErrorKind::TooFewChildren,
        });
    }
    Ok(if is_series {
        Series(children)
    } else {
        Parallel(children)
    })
}

impl fmt::Display for DecompTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf => f.write_str("K"),
            Series(cs) | Parallel(cs) => {
                f.write_str(if matches!(self, Series(_)) { "S" } else { "P" })?;
                f.write_str("(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", c)?;
                }
                f.write_str(")")
            }
        }
    }
}

/// All canonical trees with 1..=max_edges edges, grouped by nothing, sorted
/// by edge count then by the tree order. One representative per equivalence
/// class under terminal reversal.
pub fn enumerate_canonical_trees(max_edges: usize) -> Vec<DecompTree> {
    let gen = StrictGen::new(max_edges);
    let mut out = Vec::new();
    for n in 1..=max_edges {
        let mut level: Vec<DecompTree> = gen
            .all(n)
            .iter()
            .filter(|t| {
                let rev = t.reversed().strict();
                **t <= rev
            })
            .cloned()
            .collect();
        level.sort();
        out.extend(level);
    }
    out
}

/// Memoized generator for strict trees by edge count.
struct StrictGen {
    /// all[n] holds every strict tree with n edges, sorted.
    all: Vec<Vec<DecompTree>>,
}

impl StrictGen {
    fn new(max_edges: usize) -> StrictGen {
        let mut gen = StrictGen {
            all: vec![Vec::new(); max_edges + 1],
        };
        for n in 1..=max_edges {
            gen.fill(n);
        }
        gen
    }

    fn all(&self, n: usize) -> &[DecompTree] {
        &self.all[n]
    }

    fn fill(&mut self, n: usize) {
        let mut level = Vec::new();
        if n == 1 {
            level.push(Leaf);
        } else {
            let mut series = Vec::new();
            self.series_seqs(n, &mut Vec::new(), &mut series);
            level.extend(series.into_iter().map(Series));
            let mut parallel = Vec::new();
            self.parallel_multisets(n, None, &mut Vec::new(), &mut parallel);
            level.extend(parallel.into_iter().map(Parallel));
        }
        level.sort();
        self.all[n] = level;
    }

    /// Ordered sequences of two or more non-series trees with n edges total.
    fn series_seqs(&self, n: usize, prefix: &mut Vec<DecompTree>, out: &mut Vec<Vec<DecompTree>>) {
        if n == 0 {
            if prefix.len() >= 2 {
                out.push(prefix.clone());
            }
            return;
        }
        for part in 1..=n {
            // a lone remaining part would make the sequence length 1
            if part == n && prefix.is_empty() {
                continue;
            }
            for t in &self.all[part] {
                if matches!(t, Series(_)) {
                    continue;
                }
                prefix.push(t.clone());
                self.series_seqs(n - part, prefix, out);
                prefix.pop();
            }
        }
    }

    /// Sorted multisets of two or more non-parallel trees with n edges total.
    fn parallel_multisets(
        &self,
        n: usize,
        min: Option<&DecompTree>,
        prefix: &mut Vec<DecompTree>,
        out: &mut Vec<Vec<DecompTree>>,
    ) {
        if n == 0 {
            if prefix.len() >= 2 {
                out.push(prefix.clone());
            }
            return;
        }
        for part in 1..=n {
            if part == n && prefix.is_empty() {
                continue;
            }
            for t in &self.all[part] {
                if matches!(t, Parallel(_)) {
                    continue;
                }
                if let Some(m) = min {
                    if t < m {
                        continue;
                    }
                }
                prefix.push(t.clone());
                self.parallel_multisets(n - part, Some(t), prefix, out);
                prefix.pop();
            }
        }
    }
}
