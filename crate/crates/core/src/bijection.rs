//! The bijection between G-parking functions and colored spanning trees.
//!
//! [`algorithm_a`] grows a tree from the root: the queued vertex of smallest
//! rank is processed, and each unexplored neighbor `w` either joins the tree
//! through edge `{w,v}_{val(w)}` when `val(w) < μ(w,v)`, or has `val(w)`
//! lowered by `μ(w,v)`. [`theta`] reads the labeling back off a tree.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Multigraph, Vertex, VertexRanking};
use crate::parking::{check_labeling, ParkingFunction};
use crate::tree::ColoredSpanningTree;

/// The processing order `(v_1, .., v_n)` of the non-root vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexOrder {
    order: Vec<Vertex>,
    // position[0] = 0, position[v_i] = i
    position: Vec<usize>,
}

impl VertexOrder {
    fn from_sequence(order: Vec<Vertex>) -> Self {
        let mut position = vec![0; order.len() + 1];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i + 1;
        }
        Self { order, position }
    }

    /// `v_i` for `i` in `1..=n`; `at(0)` is the root.
    pub fn at(&self, i: usize) -> Vertex {
        if i == 0 {
            0
        } else {
            self.order[i - 1]
        }
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// `(0, v_1, .., v_n)`.
    pub fn with_root(&self) -> Vec<Vertex> {
        std::iter::once(0).chain(self.order.iter().copied()).collect()
    }

    /// Vertices at positions `>= i`.
    pub fn suffix(&self, i: usize) -> &[Vertex] {
        &self.order[i.max(1) - 1..]
    }
}

impl fmt::Display for VertexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.with_root().iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for VertexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexOrder{self}")
    }
}

/// `Φ(f)` together with the order in which vertices were processed.
///
/// Fails with [`Error::NotParking`] when the queue runs dry before every
/// vertex is processed, which happens exactly when `f ∉ P_G`.
pub fn algorithm_a(
    g: &Multigraph,
    tau: &VertexRanking,
    values: &[i64],
) -> Result<(ColoredSpanningTree, VertexOrder)> {
    check_labeling(g, values)?;
    tau.check_for(g)?;
    let size = g.vertex_count();
    let mut val = values.to_vec();
    let mut processed = vec![false; size];
    // Reached: processed or waiting in the queue.
    let mut reached = vec![false; size];
    let mut parent = vec![0; size];
    let mut color = vec![0; size];
    let mut order = Vec::with_capacity(size - 1);
    reached[0] = true;

    for _ in 0..size {
        let v = (0..size)
            .filter(|&w| reached[w] && !processed[w])
            .min_by_key(|&w| tau.rank(w))
            .ok_or(Error::NotParking)?;
        processed[v] = true;
        if v != 0 {
            order.push(v);
        }
        for (w, m) in g.neighbors(v) {
            if reached[w] || val[w] < 0 {
                continue;
            }
            let m = m as i64;
            if val[w] < m {
                reached[w] = true;
                parent[w] = v;
                color[w] = val[w] as usize;
            } else {
                val[w] -= m;
            }
        }
    }
    Ok((
        ColoredSpanningTree::from_parts(parent, color),
        VertexOrder::from_sequence(order),
    ))
}

/// `Φ(f)`.
pub fn phi(g: &Multigraph, tau: &VertexRanking, f: &ParkingFunction) -> Result<ColoredSpanningTree> {
    algorithm_a(g, tau, f.values()).map(|(t, _)| t)
}

/// The processing order of `t`: repeatedly take the smallest-ranked vertex
/// whose tree parent has already been taken.
pub fn tree_order(tau: &VertexRanking, t: &ColoredSpanningTree) -> VertexOrder {
    let size = t.vertex_count();
    let mut taken = vec![false; size];
    taken[0] = true;
    let mut order = Vec::with_capacity(size - 1);
    for _ in 1..size {
        let next = (1..size)
            .filter(|&w| !taken[w] && taken[t.parent(w)])
            .min_by_key(|&w| tau.rank(w))
            .expect("validated tree reaches every vertex");
        taken[next] = true;
        order.push(next);
    }
    VertexOrder::from_sequence(order)
}

/// `Θ(T)`: `f(v) = c_T(v) + Σ μ(v,w)` over vertices `w` processed strictly
/// before `pre_T(v)`.
pub fn theta(g: &Multigraph, tau: &VertexRanking, t: &ColoredSpanningTree) -> Result<ParkingFunction> {
    t.validate(g)?;
    tau.check_for(g)?;
    let ord = tree_order(tau, t);
    let size = g.vertex_count();
    let mut values = vec![-1i64; size];
    for (v, value) in values.iter_mut().enumerate().skip(1) {
        let before = ord.position(t.parent(v));
        let earlier: usize = g
            .neighbors(v)
            .filter(|&(w, _)| ord.position(w) < before)
            .map(|(_, m)| m)
            .sum();
        *value = (t.color(v) + earlier) as i64;
    }
    Ok(ParkingFunction::from_values_unchecked(values))
}

/// `Ord(f)`.
pub fn ord(g: &Multigraph, tau: &VertexRanking, f: &ParkingFunction) -> Result<VertexOrder> {
    algorithm_a(g, tau, f.values()).map(|(_, o)| o)
}

/// `Rea(f)` with the root's `-1` in front: `(-1, f(v_1), .., f(v_n))`.
pub fn rea(g: &Multigraph, tau: &VertexRanking, f: &ParkingFunction) -> Result<Vec<i64>> {
    let order = ord(g, tau, f)?;
    Ok(rearrange(f, &order))
}

pub(crate) fn rearrange(f: &ParkingFunction, order: &VertexOrder) -> Vec<i64> {
    order.with_root().into_iter().map(|v| f.get(v)).collect()
}
