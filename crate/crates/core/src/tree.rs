//! Colored spanning trees rooted at vertex 0.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, Vertex};

/// A spanning tree that remembers which parallel copy each tree edge uses.
///
/// Stored as parent pointers: `parent[v] = pre_T(v)` and `color[v] = c_T`
/// of the edge `{v, pre_T(v)}`. Index 0 is the root and its slots are unused.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredSpanningTree {
    parent: Vec<Vertex>,
    color: Vec<usize>,
}

impl ColoredSpanningTree {
    /// Builds a tree from `(vertex, parent, color)` triples, one per non-root
    /// vertex, and checks it against `g`.
    pub fn from_triples(g: &Multigraph, triples: &[(Vertex, Vertex, usize)]) -> Result<Self> {
        let n = g.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut color = vec![0; n];
        parent[0] = 0;
        for &(v, p, c) in triples {
            if v == 0 || v >= n {
                return Err(Error::InvalidTree(format!("vertex {v} cannot have a parent")));
            }
            if parent[v] != usize::MAX {
                return Err(Error::InvalidTree(format!("vertex {v} listed twice")));
            }
            parent[v] = p;
            color[v] = c;
        }
        if let Some(v) = parent.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidTree(format!("vertex {v} has no parent")));
        }
        let tree = Self { parent, color };
        tree.validate(g)?;
        Ok(tree)
    }

    pub(crate) fn from_parts(parent: Vec<Vertex>, color: Vec<usize>) -> Self {
        Self { parent, color }
    }

    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let n = g.vertex_count();
        if self.parent.len() != n {
            return Err(Error::InvalidTree(format!(
                "tree has {} vertices, graph has {n}",
                self.parent.len()
            )));
        }
        for v in 1..n {
            let p = self.parent[v];
            if p >= n || p == v {
                return Err(Error::InvalidTree(format!("vertex {v} has parent {p}")));
            }
            if self.color[v] >= g.multiplicity(v, p) {
                return Err(Error::InvalidTree(format!(
                    "edge {{{v},{p}}}_{} is not in the graph",
                    self.color[v]
                )));
            }
        }
        if !reaches_root(&self.parent) {
            return Err(Error::InvalidTree("parent links contain a cycle".into()));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: Vertex) -> Vertex {
        self.parent[v]
    }

    pub fn color(&self, v: Vertex) -> usize {
        self.color[v]
    }

    pub fn children(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (1..self.parent.len()).filter(move |&w| self.parent[w] == v)
    }

    /// `(vertex, parent, color)` sorted by vertex.
    pub fn triples(&self) -> Vec<(Vertex, Vertex, usize)> {
        (1..self.parent.len())
            .map(|v| (v, self.parent[v], self.color[v]))
            .collect()
    }

    /// Parses `v,p,c;v,p,c;...` or a JSON array of `[v,p,c]` triples.
    pub fn parse(g: &Multigraph, text: &str) -> Result<Self> {
        let text = text.trim();
        let triples: Vec<(usize, usize, usize)> = if text.starts_with('[') {
            let raw: Vec<[usize; 3]> =
                serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
            raw.into_iter().map(|[v, p, c]| (v, p, c)).collect()
        } else if text.is_empty() {
            Vec::new()
        } else {
            text.split(';')
                .map(|chunk| {
                    let nums: Vec<usize> = chunk
                        .split(',')
                        .map(|s| s.trim().parse::<usize>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|e| Error::Parse(format!("tree triple `{chunk}`: {e}")))?;
                    match nums[..] {
                        [v, p, c] => Ok((v, p, c)),
                        _ => Err(Error::Parse(format!("tree triple `{chunk}` needs 3 values"))),
                    }
                })
                .collect::<Result<_>>()?
        };
        Self::from_triples(g, &triples)
    }

    pub fn to_json(&self) -> String {
        let raw: Vec<[usize; 3]> = self.triples().into_iter().map(|(v, p, c)| [v, p, c]).collect();
        serde_json::to_string(&raw).expect("triples serialize")
    }
}

fn reaches_root(parent: &[Vertex]) -> bool {
    let n = parent.len();
    // 0 = unknown, 1 = on current walk, 2 = reaches root
    let mut state = vec![0u8; n];
    state[0] = 2;
    for start in 1..n {
        let mut walk = Vec::new();
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            walk.push(v);
            v = parent[v];
        }
        if state[v] == 1 {
            return false;
        }
        for w in walk {
            state[w] = 2;
        }
    }
    true
}

impl fmt::Display for ColoredSpanningTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .triples()
            .into_iter()
            .map(|(v, p, c)| format!("{v},{p},{c}"))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

impl fmt::Debug for ColoredSpanningTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredSpanningTree({self})")
    }
}

/// Every colored spanning tree of `g`, by brute force over parent choices.
/// Sorted by `(parent, color)` vectors.
pub fn enumerate_colored_trees(g: &Multigraph) -> Vec<ColoredSpanningTree> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut parent = vec![0; n];
    let mut color = vec![0; n];
    fill(g, 1, &mut parent, &mut color, &mut out);
    out.sort();
    out
}

fn fill(
    g: &Multigraph,
    v: Vertex,
    parent: &mut Vec<Vertex>,
    color: &mut Vec<usize>,
    out: &mut Vec<ColoredSpanningTree>,
) {
    if v == g.vertex_count() {
        if reaches_root(parent) {
            out.push(ColoredSpanningTree::from_parts(parent.clone(), color.clone()));
        }
        return;
    }
    let choices: Vec<_> = g.neighbors(v).collect();
    for (p, m) in choices {
        for c in 0..m {
            parent[v] = p;
            color[v] = c;
            fill(g, v + 1, parent, color, out);
        }
    }
}
