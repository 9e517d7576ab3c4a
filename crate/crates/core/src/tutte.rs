//! Tutte polynomial strategies.
//!
//! `parking` sums `x^{b(f)} y^{w(f)}` over `P_G`; `delcon` runs the classical
//! deletion–contraction recursion and never touches parking functions.

use std::collections::HashMap;

use crate::criticality::ParkingAnalysis;
use crate::error::Result;
use crate::graph::{EdgeKind, Multigraph, VertexRanking};
use crate::poly::BivariatePolynomial;
use crate::registry::{Named, Registry};

pub trait TutteMethod: Named + Send + Sync {
    /// Methods that do not depend on a vertex ranking ignore `tau`.
    fn tutte(&self, g: &Multigraph, tau: &VertexRanking) -> Result<BivariatePolynomial>;
}

pub struct ParkingSum;

pub struct DeletionContraction;

impl Named for ParkingSum {
    fn name(&self) -> &'static str {
        "parking"
    }
}

impl Named for DeletionContraction {
    fn name(&self) -> &'static str {
        "delcon"
    }
}

impl TutteMethod for ParkingSum {
    fn tutte(&self, g: &Multigraph, tau: &VertexRanking) -> Result<BivariatePolynomial> {
        tutte_parking(g, tau)
    }
}

impl TutteMethod for DeletionContraction {
    fn tutte(&self, g: &Multigraph, _tau: &VertexRanking) -> Result<BivariatePolynomial> {
        tutte_delcon(g)
    }
}

pub fn methods() -> Registry<dyn TutteMethod> {
    let mut reg: Registry<dyn TutteMethod> = Registry::new("tutte method");
    reg.register(Box::new(ParkingSum)).expect("fresh registry");
    reg.register(Box::new(DeletionContraction)).expect("fresh registry");
    reg
}

/// `Σ_{f ∈ P_G} x^{b(f)} y^{w(f)}`.
pub fn tutte_parking(g: &Multigraph, tau: &VertexRanking) -> Result<BivariatePolynomial> {
    let analysis = ParkingAnalysis::new(g, tau)?;
    Ok(sum_pairs(&analysis.bw_pairs()))
}

fn sum_pairs(pairs: &[(usize, i64)]) -> BivariatePolynomial {
    let mut p = BivariatePolynomial::zero();
    for &(b, w) in pairs {
        let w = u32::try_from(w).expect("w(f) is nonnegative on a connected graph");
        p.add_term(1, b as u32, w);
    }
    p
}

/// `BW_{G,τ}` as sorted `(b, w)` pairs.
pub fn bw_multiset(g: &Multigraph, tau: &VertexRanking) -> Result<Vec<(usize, i64)>> {
    let mut pairs = ParkingAnalysis::new(g, tau)?.bw_pairs();
    pairs.sort_unstable();
    Ok(pairs)
}

/// Deletion–contraction on the first edge in canonical order.
pub fn tutte_delcon(g: &Multigraph) -> Result<BivariatePolynomial> {
    g.ensure_connected()?;
    let mut memo = HashMap::new();
    delcon(g, &mut memo)
}

fn delcon(
    g: &Multigraph,
    memo: &mut HashMap<Vec<usize>, BivariatePolynomial>,
) -> Result<BivariatePolynomial> {
    let Some(e) = g.edges().next() else {
        return Ok(BivariatePolynomial::one());
    };
    let key = g.canonical_key();
    if let Some(p) = memo.get(&key) {
        return Ok(p.clone());
    }
    let p = match g.classify_edge(e)? {
        EdgeKind::Loop => delcon(&g.delete_edge(e)?, memo)?.shift(0, 1),
        EdgeKind::Bridge => delcon(&g.contract_edge(e)?, memo)?.shift(1, 0),
        EdgeKind::Ordinary => {
            let contracted = delcon(&g.contract_edge(e)?, memo)?;
            let deleted = delcon(&g.delete_edge(e)?, memo)?;
            &contracted + &deleted
        }
    };
    memo.insert(key, p.clone());
    Ok(p)
}
