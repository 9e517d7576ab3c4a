//! Rooted multigraphs on the vertex set `{0, .., n}` with vertex `0` as root.
//!
//! Parallel edges are identified by a color `0..μ(i,j)`. Only multiplicities
//! are stored, so colors are positional: after a deletion or contraction the
//! surviving copies of a parallel class are renumbered `0..μ'` in their old
//! relative order, with copies that were incident to the smaller endpoint
//! ordered first.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    // Row-major symmetric matrix; loops on the diagonal, counted once.
    mult: Vec<usize>,
    total_edges: usize,
}

/// The edge `{i,j}_k`: the copy with color `k` between `i` and `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColoredEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub color: usize,
}

impl ColoredEdge {
    pub fn new(u: Vertex, v: Vertex, color: usize) -> Self {
        let (u, v) = if u <= v { (u, v) } else { (v, u) };
        Self { u, v, color }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

impl fmt::Display for ColoredEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}_{}", self.u, self.v, self.color)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Loop,
    Bridge,
    Ordinary,
}

/// The on-disk graph format: `{"vertices": n+1, "edges": [[u,v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Multigraph {
    /// Graph on `vertex_count` vertices with no edges.
    pub fn new(vertex_count: usize) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Self {
            vertex_count,
            mult: vec![0; vertex_count * vertex_count],
            total_edges: 0,
        })
    }

    pub fn from_edges(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Self::new(vertex_count)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph directly from a symmetric multiplicity matrix.
    pub fn from_matrix(matrix: &[Vec<usize>]) -> Result<Self> {
        let n = matrix.len();
        let mut g = Self::new(n)?;
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!("row {i} has {} entries", row.len())));
            }
            for (j, &m) in row.iter().enumerate().skip(i) {
                if matrix[j][i] != m {
                    return Err(Error::Parse(format!("matrix not symmetric at ({i},{j})")));
                }
                g.set_multiplicity(i, j, m);
            }
        }
        Ok(g)
    }

    pub fn complete(vertex_count: usize) -> Result<Self> {
        let mut g = Self::new(vertex_count)?;
        for i in 0..vertex_count {
            for j in i + 1..vertex_count {
                g.set_multiplicity(i, j, 1);
            }
        }
        Ok(g)
    }

    pub fn path(vertex_count: usize) -> Result<Self> {
        let edges: Vec<_> = (1..vertex_count).map(|v| (v - 1, v)).collect();
        Self::from_edges(vertex_count, &edges)
    }

    pub fn cycle(vertex_count: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..vertex_count).map(|v| (v - 1, v)).collect();
        edges.push((vertex_count - 1, 0));
        Self::from_edges(vertex_count, &edges)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<ColoredEdge> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let color = self.multiplicity(u, v);
        self.set_multiplicity(u, v, color + 1);
        Ok(ColoredEdge::new(u, v, color))
    }

    fn set_multiplicity(&mut self, u: Vertex, v: Vertex, m: usize) {
        let old = self.mult[u * self.vertex_count + v];
        self.total_edges = self.total_edges - old + m;
        self.mult[u * self.vertex_count + v] = m;
        self.mult[v * self.vertex_count + u] = m;
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    /// `|V(G)| = n + 1`.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `n`, the number of non-root vertices.
    pub fn n(&self) -> usize {
        self.vertex_count - 1
    }

    /// `|E(G)|`, counting parallel copies and loops.
    pub fn total_edges(&self) -> usize {
        self.total_edges
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        self.mult[u * self.vertex_count + v]
    }

    pub fn loops(&self, v: Vertex) -> usize {
        self.multiplicity(v, v)
    }

    /// Degree with each loop contributing two.
    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().sum::<usize>() + self.loops(v)
    }

    fn row(&self, v: Vertex) -> &[usize] {
        &self.mult[v * self.vertex_count..(v + 1) * self.vertex_count]
    }

    /// Distinct neighbors `w != v` with their multiplicities.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .filter(move |&(w, &m)| w != v && m > 0)
            .map(|(w, &m)| (w, m))
    }

    pub fn has_edge(&self, e: ColoredEdge) -> bool {
        e.u < self.vertex_count && e.v < self.vertex_count && e.color < self.multiplicity(e.u, e.v)
    }

    /// All edges in canonical order: by `(u, v)` with `u <= v`, then color.
    pub fn edges(&self) -> impl Iterator<Item = ColoredEdge> + '_ {
        let n = self.vertex_count;
        (0..n).flat_map(move |u| {
            (u..n).flat_map(move |v| (0..self.multiplicity(u, v)).map(move |c| ColoredEdge::new(u, v, c)))
        })
    }

    /// Edge list with repetition, in canonical order.
    pub fn edge_pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.edges().map(|e| (e.u, e.v)).collect()
    }

    /// `outdeg_{I,G}(v)`: edges from `v` to vertices outside `subset`.
    pub fn outdeg(&self, subset: &[Vertex], v: Vertex) -> Result<usize> {
        let mut inside = vec![false; self.vertex_count];
        for &w in subset {
            self.check_vertex(w)?;
            inside[w] = true;
        }
        if !inside.get(v).copied().unwrap_or(false) {
            return Err(Error::Parse(format!("vertex {v} is not in the subset")));
        }
        Ok(self.outdeg_with(&inside, v))
    }

    pub(crate) fn outdeg_with(&self, inside: &[bool], v: Vertex) -> usize {
        self.row(v)
            .iter()
            .zip(inside)
            .filter(|&(_, &inside)| !inside)
            .map(|(&m, _)| m)
            .sum()
    }

    /// Bitmask variant of [`Multigraph::outdeg`]; bit `w` set means `w ∈ I`.
    pub(crate) fn outdeg_mask(&self, mask: u64, v: Vertex) -> usize {
        self.row(v)
            .iter()
            .enumerate()
            .filter(|&(w, _)| mask & (1 << w) == 0)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.vertex_count];
        let mut count = 0;
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for (w, _) in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    fn check_edge(&self, e: ColoredEdge) -> Result<()> {
        if self.has_edge(e) {
            Ok(())
        } else {
            Err(Error::NoSuchEdge {
                u: e.u,
                v: e.v,
                color: e.color,
            })
        }
    }

    pub fn classify_edge(&self, e: ColoredEdge) -> Result<EdgeKind> {
        self.check_edge(e)?;
        if e.is_loop() {
            return Ok(EdgeKind::Loop);
        }
        if self.multiplicity(e.u, e.v) > 1 {
            return Ok(EdgeKind::Ordinary);
        }
        let before = self.components();
        let after = self.delete_edge(e)?.components();
        Ok(if after > before {
            EdgeKind::Bridge
        } else {
            EdgeKind::Ordinary
        })
    }

    /// `G − e`. The vertex set is unchanged.
    pub fn delete_edge(&self, e: ColoredEdge) -> Result<Self> {
        self.check_edge(e)?;
        let mut g = self.clone();
        g.set_multiplicity(e.u, e.v, self.multiplicity(e.u, e.v) - 1);
        Ok(g)
    }

    /// `G \ e` for a non-loop edge `{i,j}` with `i < j`: `j` is merged into
    /// `i`, the other parallel copies of `e` become loops at `i`, and vertices
    /// above `j` shift down by one. Exactly one edge disappears.
    pub fn contract_edge(&self, e: ColoredEdge) -> Result<Self> {
        self.check_edge(e)?;
        if e.is_loop() {
            return Err(Error::LoopEdge { u: e.u, v: e.v });
        }
        let (keep, gone) = (e.u, e.v);
        let n = self.vertex_count;
        let mut g = Self::new(n - 1)?;
        for a in 0..n {
            for b in a..n {
                let m = self.multiplicity(a, b);
                if m == 0 {
                    continue;
                }
                let a2 = contracted_vertex(a, keep, gone);
                let b2 = contracted_vertex(b, keep, gone);
                let cur = g.multiplicity(a2, b2);
                g.set_multiplicity(a2, b2, cur + m);
            }
        }
        let merged = g.multiplicity(keep, keep);
        g.set_multiplicity(keep, keep, merged - 1);
        Ok(g)
    }

    /// Key for memo tables: sorted degree signature followed by the upper
    /// triangle of the multiplicity matrix. No isomorphism reduction.
    pub fn canonical_key(&self) -> Vec<usize> {
        let n = self.vertex_count;
        let mut degrees: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        let mut key = Vec::with_capacity(1 + n + n * (n + 1) / 2);
        key.push(n);
        key.extend(degrees);
        for a in 0..n {
            for b in a..n {
                key.push(self.multiplicity(a, b));
            }
        }
        key
    }

    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self.vertex_count,
            edges: self.edges().map(|e| [e.u, e.v]).collect(),
        }
    }

    pub fn from_spec(spec: &GraphSpec) -> Result<Self> {
        let edges: Vec<_> = spec.edges.iter().map(|&[u, v]| (u, v)).collect();
        Self::from_edges(spec.vertices, &edges)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: GraphSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_spec(&spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_spec()).expect("graph spec serializes")
    }
}

/// Where vertex `v` lands after contracting `{keep, gone}` with `keep < gone`.
pub fn contracted_vertex(v: Vertex, keep: Vertex, gone: Vertex) -> Vertex {
    use std::cmp::Ordering::*;
    match v.cmp(&gone) {
        Less => v,
        Equal => keep,
        Greater => v - 1,
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multigraph")
            .field("vertices", &self.vertex_count)
            .field("edges", &self.edge_pairs())
            .finish()
    }
}

/// Priority of the non-root vertices; a smaller rank is processed first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexRanking {
    // rank[0] = 0, rank[v] in 1..=n
    rank: Vec<usize>,
}

impl VertexRanking {
    pub fn identity(n: usize) -> Self {
        Self {
            rank: (0..=n).collect(),
        }
    }

    pub fn reversal(n: usize) -> Self {
        let mut rank = vec![0];
        rank.extend((1..=n).rev());
        Self { rank }
    }

    /// `ranks[k]` is `τ(k + 1)`.
    pub fn from_ranks(ranks: &[usize]) -> Result<Self> {
        let n = ranks.len();
        let mut seen = vec![false; n + 1];
        for &r in ranks {
            if r == 0 || r > n || seen[r] {
                return Err(Error::InvalidRanking(n));
            }
            seen[r] = true;
        }
        let mut rank = vec![0];
        rank.extend_from_slice(ranks);
        Ok(Self { rank })
    }

    pub fn n(&self) -> usize {
        self.rank.len() - 1
    }

    /// `τ(v)`, with the root ranked ahead of everything.
    pub fn rank(&self, v: Vertex) -> usize {
        self.rank[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank[1..]
    }

    pub fn check_for(&self, g: &Multigraph) -> Result<()> {
        if self.n() == g.n() {
            Ok(())
        } else {
            Err(Error::InvalidRanking(g.n()))
        }
    }

    /// Ranking on the graph with `gone` merged away, keeping relative order.
    pub fn without(&self, gone: Vertex) -> Self {
        let removed = self.rank[gone];
        let rank = self
            .rank
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != gone)
            .map(|(_, &r)| if r > removed { r - 1 } else { r })
            .collect();
        Self { rank }
    }

    /// Every permutation of `1..=n`, in lexicographic order of ranks.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut ranks: Vec<usize> = (1..=n).collect();
        permute(&mut ranks, 0, &mut out);
        out.sort_by(|a: &Self, b| a.rank.cmp(&b.rank));
        out
    }
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<VertexRanking>) {
    if k == items.len() {
        let mut rank = vec![0];
        rank.extend_from_slice(items);
        out.push(VertexRanking { rank });
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g_star() -> Multigraph {
        Multigraph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn builds_with_multiplicities() {
        assert_eq!(g_star().total_edges(), 5);
        assert_eq!(Multigraph::new(1).unwrap().total_edges(), 0);
        let g = Multigraph::from_edges(2, &[(0, 1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.multiplicity(1, 0), 2);
        assert_eq!(g.loops(1), 1);
        assert_eq!(g.total_edges(), 3);
        assert_eq!(g.degree(1), 4);
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        assert_eq!(
            Multigraph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                vertex_count: 2
            })
        );
        assert_eq!(Multigraph::new(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn outdeg_counts_edges_leaving_the_set() {
        let g = g_star();
        assert_eq!(g.outdeg(&[1, 2, 3], 3).unwrap(), 1);
        assert_eq!(g.outdeg(&[1], 1).unwrap(), 3);
        let looped = Multigraph::from_edges(2, &[(1, 1)]).unwrap();
        assert_eq!(looped.outdeg(&[1], 1).unwrap(), 0);
        assert!(g.outdeg(&[1, 2], 3).is_err());
    }

    #[test]
    fn classifies_edges() {
        let g = g_star();
        assert_eq!(g.classify_edge(ColoredEdge::new(0, 1, 0)), Ok(EdgeKind::Ordinary));
        let path = Multigraph::path(2).unwrap();
        assert_eq!(path.classify_edge(ColoredEdge::new(0, 1, 0)), Ok(EdgeKind::Bridge));
        let looped = Multigraph::from_edges(2, &[(0, 1), (1, 1)]).unwrap();
        assert_eq!(looped.classify_edge(ColoredEdge::new(1, 1, 0)), Ok(EdgeKind::Loop));
        assert!(matches!(
            g.classify_edge(ColoredEdge::new(0, 2, 0)),
            Err(Error::NoSuchEdge { .. })
        ));
    }

    #[test]
    fn contraction_keeps_parallels_as_loops() {
        let g = g_star().contract_edge(ColoredEdge::new(0, 1, 0)).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_pairs(), vec![(0, 1), (0, 2), (0, 2), (1, 2)]);
        assert_eq!(g.total_edges(), 4);

        let double = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let c = double.contract_edge(ColoredEdge::new(0, 1, 0)).unwrap();
        assert_eq!(c.vertex_count(), 1);
        assert_eq!(c.loops(0), 1);
        assert_eq!(c.total_edges(), 1);

        let c = Multigraph::path(2).unwrap().contract_edge(ColoredEdge::new(0, 1, 0)).unwrap();
        assert_eq!(c.vertex_count(), 1);
        assert_eq!(c.total_edges(), 0);

        assert!(matches!(
            double.contract_edge(ColoredEdge::new(1, 1, 0)),
            Err(Error::NoSuchEdge { .. })
        ));
        let looped = Multigraph::from_edges(2, &[(0, 1), (1, 1)]).unwrap();
        assert!(matches!(
            looped.contract_edge(ColoredEdge::new(1, 1, 0)),
            Err(Error::LoopEdge { .. })
        ));
    }

    #[test]
    fn deletion() {
        let g = g_star().delete_edge(ColoredEdge::new(0, 1, 0)).unwrap();
        assert_eq!(g.edge_pairs(), vec![(0, 3), (1, 2), (1, 3), (2, 3)]);
        let g = g_star().delete_edge(ColoredEdge::new(2, 3, 0)).unwrap();
        assert_eq!(g.total_edges(), 4);
        assert!(g.is_connected());
        let looped = Multigraph::from_edges(2, &[(0, 1), (1, 1)]).unwrap();
        let g = looped.delete_edge(ColoredEdge::new(1, 1, 0)).unwrap();
        assert_eq!(g.total_edges(), 1);
        assert_eq!(g.loops(1), 0);
    }

    #[test]
    fn json_round_trip() {
        let g = Multigraph::from_json(r#"{"vertices": 3, "edges": [[0,1],[1,2],[2,2],[0,1]]}"#).unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(Multigraph::from_json(&g.to_json()).unwrap(), g);
        assert!(matches!(Multigraph::from_json("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn rankings() {
        assert!(VertexRanking::from_ranks(&[3, 2, 1]).is_ok());
        assert!(VertexRanking::from_ranks(&[1, 1, 2]).is_err());
        assert!(VertexRanking::from_ranks(&[0, 1]).is_err());
        assert_eq!(VertexRanking::all(3).len(), 6);
        let r = VertexRanking::from_ranks(&[2, 3, 1]).unwrap().without(1);
        assert_eq!(r.ranks(), &[2, 1]);
    }
}
