//! Critical vertices, weak and strong `v`-identical sets, bridge vertices,
//! and the contraction/deletion maps on parking functions.

use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{algorithm_a, rearrange, VertexOrder};
use crate::error::{Error, Result};
use crate::graph::{contracted_vertex, ColoredEdge, EdgeKind, Multigraph, Vertex, VertexRanking};
use crate::parking::{enumerate_parking, is_parking, weight, ParkingFunction};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeStats {
    /// `B(f)`, sorted.
    pub bridge_vertices: Vec<Vertex>,
    /// `b(f) = |B(f)|`.
    pub b: usize,
}

/// `P_G` for one ranking, with every function's order and rearrangement
/// computed once so the identical-set filters are cheap.
pub struct ParkingAnalysis<'g> {
    graph: &'g Multigraph,
    tau: VertexRanking,
    functions: Vec<ParkingFunction>,
    orders: Vec<VertexOrder>,
    rearranged: Vec<Vec<i64>>,
}

impl<'g> ParkingAnalysis<'g> {
    pub fn new(graph: &'g Multigraph, tau: &VertexRanking) -> Result<Self> {
        tau.check_for(graph)?;
        let functions = enumerate_parking(graph)?;
        let orders = functions
            .iter()
            .map(|f| algorithm_a(graph, tau, f.values()).map(|(_, o)| o))
            .collect::<Result<Vec<_>>>()?;
        let rearranged = functions
            .iter()
            .zip(&orders)
            .map(|(f, o)| rearrange(f, o))
            .collect();
        Ok(Self {
            graph,
            tau: tau.clone(),
            functions,
            orders,
            rearranged,
        })
    }

    pub fn graph(&self) -> &Multigraph {
        self.graph
    }

    pub fn ranking(&self) -> &VertexRanking {
        &self.tau
    }

    pub fn functions(&self) -> &[ParkingFunction] {
        &self.functions
    }

    pub fn order(&self, index: usize) -> &VertexOrder {
        &self.orders[index]
    }

    /// `Rea(f)` with the leading `-1`.
    pub fn rearranged(&self, index: usize) -> &[i64] {
        &self.rearranged[index]
    }

    pub fn index_of(&self, f: &ParkingFunction) -> Result<usize> {
        self.functions.binary_search(f).map_err(|_| Error::NotParking)
    }

    /// `I_v`: the vertices processed no earlier than `v`.
    fn suffix_mask(&self, index: usize, v: Vertex) -> Vec<bool> {
        let order = &self.orders[index];
        let mut inside = vec![false; self.graph.vertex_count()];
        for &w in order.suffix(order.position(v)) {
            inside[w] = true;
        }
        inside
    }

    /// `C_f`, sorted; always contains the root.
    pub fn critical_vertices(&self, index: usize) -> Vec<Vertex> {
        let f = &self.functions[index];
        let mut out = vec![0];
        for v in 1..self.graph.vertex_count() {
            let inside = self.suffix_mask(index, v);
            if f.get(v) == self.graph.outdeg_with(&inside, v) as i64 - 1 {
                out.push(v);
            }
        }
        out
    }

    fn identical(&self, index: usize, v: Vertex, strong: bool) -> Result<Vec<usize>> {
        if v == 0 {
            return Err(Error::RootVertex);
        }
        if v >= self.graph.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.graph.vertex_count(),
            });
        }
        let f = &self.functions[index];
        let order = &self.orders[index];
        let i = order.position(v);
        let inside = self.suffix_mask(index, v);
        // (w, outdeg_{I_v}(w)) for w in I_v ranked ahead of v
        let dominated: Vec<(Vertex, i64)> = order
            .suffix(i)
            .iter()
            .filter(|&&w| self.tau.rank(w) < self.tau.rank(v))
            .map(|&w| (w, self.graph.outdeg_with(&inside, w) as i64))
            .collect();
        let prefix = &self.rearranged[index][..i];

        Ok((0..self.functions.len())
            .filter(|&k| {
                let g = &self.functions[k];
                let g_order = &self.orders[k];
                (1..i).all(|j| g_order.at(j) == order.at(j))
                    && self.rearranged[k][..i] == *prefix
                    && g.get(v) >= f.get(v)
                    && dominated.iter().all(|&(w, d)| g.get(w) >= d)
                    && (!strong || g_order.at(i) == v)
            })
            .collect())
    }

    /// Indices of `W_{v,f}`.
    pub fn weak_identical(&self, index: usize, v: Vertex) -> Result<Vec<usize>> {
        self.identical(index, v, false)
    }

    /// Indices of `S_{v,f}`.
    pub fn strong_identical(&self, index: usize, v: Vertex) -> Result<Vec<usize>> {
        self.identical(index, v, true)
    }

    pub fn bridge_stats(&self, index: usize) -> BridgeStats {
        let bridge_vertices: Vec<Vertex> = self
            .critical_vertices(index)
            .into_iter()
            .filter(|&v| v != 0)
            .filter(|&v| {
                let weak = self.weak_identical(index, v).expect("non-root vertex");
                let strong = self.strong_identical(index, v).expect("non-root vertex");
                weak.len() == strong.len()
            })
            .collect();
        BridgeStats {
            b: bridge_vertices.len(),
            bridge_vertices,
        }
    }

    /// `(b(f), w(f))` for every function, in enumeration order.
    pub fn bw_pairs(&self) -> Vec<(usize, i64)> {
        (0..self.functions.len())
            .into_par_iter()
            .map(|k| (self.bridge_stats(k).b, weight(self.graph, &self.functions[k])))
            .collect()
    }
}

pub fn critical_vertices(g: &Multigraph, tau: &VertexRanking, f: &ParkingFunction) -> Result<Vec<Vertex>> {
    let a = ParkingAnalysis::new(g, tau)?;
    let k = a.index_of(f)?;
    Ok(a.critical_vertices(k))
}

pub fn weak_identical(
    g: &Multigraph,
    tau: &VertexRanking,
    f: &ParkingFunction,
    v: Vertex,
) -> Result<Vec<ParkingFunction>> {
    let a = ParkingAnalysis::new(g, tau)?;
    let k = a.index_of(f)?;
    Ok(a.weak_identical(k, v)?.into_iter().map(|i| a.functions[i].clone()).collect())
}

pub fn strong_identical(
    g: &Multigraph,
    tau: &VertexRanking,
    f: &ParkingFunction,
    v: Vertex,
) -> Result<Vec<ParkingFunction>> {
    let a = ParkingAnalysis::new(g, tau)?;
    let k = a.index_of(f)?;
    Ok(a.strong_identical(k, v)?.into_iter().map(|i| a.functions[i].clone()).collect())
}

pub fn bridge_vertices(g: &Multigraph, tau: &VertexRanking, f: &ParkingFunction) -> Result<BridgeStats> {
    let a = ParkingAnalysis::new(g, tau)?;
    let k = a.index_of(f)?;
    Ok(a.bridge_stats(k))
}

/// The edge `{0,u}_0` where `u` is the root neighbor of smallest rank.
pub fn distinguished_root_edge(g: &Multigraph, tau: &VertexRanking) -> Option<ColoredEdge> {
    g.neighbors(0)
        .map(|(u, _)| u)
        .min_by_key(|&u| tau.rank(u))
        .map(|u| ColoredEdge::new(0, u, 0))
}

fn root_endpoint(g: &Multigraph, e: ColoredEdge) -> Result<Vertex> {
    if !g.has_edge(e) {
        return Err(Error::NoSuchEdge {
            u: e.u,
            v: e.v,
            color: e.color,
        });
    }
    if e.u != 0 {
        return Err(Error::NotRootEdge { u: e.u, v: e.v });
    }
    if e.is_loop() {
        return Err(Error::LoopEdge { u: e.u, v: e.v });
    }
    Ok(e.v)
}

/// `φ`: for `f` with `f(u) = 0`, drop `u` and carry the other values to
/// `G \ e` with `e = {0,u}`.
pub fn phi_contract(g: &Multigraph, e: ColoredEdge, f: &ParkingFunction) -> Result<(Multigraph, ParkingFunction)> {
    let u = root_endpoint(g, e)?;
    if !is_parking(g, f.values())? {
        return Err(Error::NotParking);
    }
    if f.get(u) != 0 {
        return Err(Error::ExpectedZero(u));
    }
    let contracted = g.contract_edge(e)?;
    let mut values = vec![0; contracted.vertex_count()];
    for (w, &x) in f.values().iter().enumerate() {
        if w != u {
            values[contracted_vertex(w, 0, u)] = x;
        }
    }
    Ok((contracted, ParkingFunction::from_values_unchecked(values)))
}

/// `ψ`: for `f` with `f(u) >= 1`, lower `f(u)` by one on `G − e`.
pub fn psi_delete(g: &Multigraph, e: ColoredEdge, f: &ParkingFunction) -> Result<(Multigraph, ParkingFunction)> {
    let u = root_endpoint(g, e)?;
    if !is_parking(g, f.values())? {
        return Err(Error::NotParking);
    }
    if f.get(u) < 1 {
        return Err(Error::ExpectedPositive(u));
    }
    let deleted = g.delete_edge(e)?;
    let mut values = f.values().to_vec();
    values[u] -= 1;
    Ok((deleted, ParkingFunction::from_values_unchecked(values)))
}

/// Non-loop edges whose removal disconnects the graph, each paired with the
/// endpoint farther from the root.
pub fn bridges_with_far_endpoint(g: &Multigraph) -> Vec<(ColoredEdge, Vertex)> {
    g.edges()
        .filter(|&e| g.classify_edge(e) == Ok(EdgeKind::Bridge))
        .map(|e| {
            let rest = g.delete_edge(e).expect("edge exists");
            let far = if same_component(&rest, 0, e.u) { e.v } else { e.u };
            (e, far)
        })
        .collect()
}

fn same_component(g: &Multigraph, a: Vertex, b: Vertex) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(v) = stack.pop() {
        for (w, _) in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen[b]
}
