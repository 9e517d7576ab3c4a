//! G-parking functions: membership, enumeration and the weight `w(f)`.
//!
//! A labeling `f` with `f(0) = -1` is a G-parking function when every
//! nonempty `I ⊆ V \ {0}` contains a vertex `v` with
//! `0 <= f(v) < outdeg_I(v)`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijection::algorithm_a;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, Vertex, VertexRanking};
use crate::registry::{Named, Registry};

/// Vertex labeling indexed by vertex, `values[0] = -1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParkingFunction(Vec<i64>);

impl ParkingFunction {
    /// Wraps `values` after checking membership in `P_G`.
    pub fn new(g: &Multigraph, values: Vec<i64>) -> Result<Self> {
        if is_parking(g, &values)? {
            Ok(Self(values))
        } else {
            Err(Error::NotParking)
        }
    }

    /// Wraps `values` without checking anything.
    pub fn from_values_unchecked(values: Vec<i64>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn into_values(self) -> Vec<i64> {
        self.0
    }

    pub fn get(&self, v: Vertex) -> i64 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ_{i=0}^{n} f(i)`, including the root's `-1`.
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for ParkingFunction {
    type Err = Error;

    /// Comma separated integers, optionally wrapped in `()` or `[]`.
    fn from_str(s: &str) -> Result<Self> {
        parse_int_list(s).map(Self)
    }
}

/// Comma separated integers, optionally wrapped in `()` or `[]`.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let inner = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("`{}`: {e}", t.trim())))
        })
        .collect()
}

pub(crate) fn check_labeling(g: &Multigraph, values: &[i64]) -> Result<()> {
    if values.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            got: values.len(),
        });
    }
    if values[0] != -1 {
        return Err(Error::RootValue(values[0]));
    }
    Ok(())
}

/// A membership test for `P_G`.
pub trait MembershipTest: Named + Send + Sync {
    /// `Ok(false)` for a well-formed labeling that fails the subset condition;
    /// `Err` for a wrong length, a root value other than `-1`, or a
    /// disconnected graph.
    fn is_parking(&self, g: &Multigraph, values: &[i64]) -> Result<bool>;
}

/// Checks every nonempty subset of non-root vertices. Exponential in `n`.
pub struct SubsetCondition;

/// Runs the tree-growing algorithm and checks that it reaches every vertex.
pub struct Burning;

impl Named for SubsetCondition {
    fn name(&self) -> &'static str {
        "subset"
    }
}

impl Named for Burning {
    fn name(&self) -> &'static str {
        "burning"
    }
}

impl MembershipTest for SubsetCondition {
    fn is_parking(&self, g: &Multigraph, values: &[i64]) -> Result<bool> {
        check_labeling(g, values)?;
        g.ensure_connected()?;
        let n = g.n();
        assert!(n < 63, "subset test is limited to 62 non-root vertices");
        let full: u64 = ((1u64 << n) - 1) << 1;
        let mut mask = full;
        while mask != 0 {
            let ok = (1..=n).filter(|&v| mask & (1 << v) != 0).any(|v| {
                let fv = values[v];
                fv >= 0 && (fv as usize) < g.outdeg_mask(mask, v)
            });
            if !ok {
                return Ok(false);
            }
            mask = (mask - 1) & full;
        }
        Ok(true)
    }
}

impl MembershipTest for Burning {
    fn is_parking(&self, g: &Multigraph, values: &[i64]) -> Result<bool> {
        check_labeling(g, values)?;
        g.ensure_connected()?;
        match algorithm_a(g, &VertexRanking::identity(g.n()), values) {
            Ok(_) => Ok(true),
            Err(Error::NotParking) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

pub fn membership_tests() -> Registry<dyn MembershipTest> {
    let mut reg: Registry<dyn MembershipTest> = Registry::new("membership test");
    reg.register(Box::new(Burning)).expect("fresh registry");
    reg.register(Box::new(SubsetCondition)).expect("fresh registry");
    reg
}

pub fn is_parking(g: &Multigraph, values: &[i64]) -> Result<bool> {
    Burning.is_parking(g, values)
}

pub fn is_parking_subset(g: &Multigraph, values: &[i64]) -> Result<bool> {
    SubsetCondition.is_parking(g, values)
}

/// Largest value any parking function can take at `v`: `outdeg_{{v}}(v) - 1`.
fn value_bound(g: &Multigraph, v: Vertex) -> i64 {
    g.neighbors(v).map(|(_, m)| m as i64).sum::<i64>() - 1
}

/// `P_G` in lexicographic order of value vectors.
pub fn enumerate_parking(g: &Multigraph) -> Result<Vec<ParkingFunction>> {
    g.ensure_connected()?;
    let n = g.n();
    let bounds: Vec<i64> = (0..=n).map(|v| value_bound(g, v)).collect();
    let mut out = Vec::new();
    let mut values = vec![0i64; n + 1];
    values[0] = -1;
    scan_box(g, &bounds, 1, &mut values, &mut out)?;
    Ok(out)
}

/// Same result as [`enumerate_parking`], with the box split on `f(1)`.
pub fn enumerate_parking_par(g: &Multigraph) -> Result<Vec<ParkingFunction>> {
    g.ensure_connected()?;
    let n = g.n();
    if n == 0 {
        return enumerate_parking(g);
    }
    let bounds: Vec<i64> = (0..=n).map(|v| value_bound(g, v)).collect();
    let chunks: Vec<Vec<ParkingFunction>> = (0..=bounds[1])
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut values = vec![0i64; n + 1];
            values[0] = -1;
            values[1] = first;
            scan_box(g, &bounds, 2, &mut values, &mut out).map(|_| out)
        })
        .collect::<Result<_>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

fn scan_box(
    g: &Multigraph,
    bounds: &[i64],
    v: Vertex,
    values: &mut Vec<i64>,
    out: &mut Vec<ParkingFunction>,
) -> Result<()> {
    if v == values.len() {
        if is_parking(g, values)? {
            out.push(ParkingFunction(values.clone()));
        }
        return Ok(());
    }
    for x in 0..=bounds[v] {
        values[v] = x;
        scan_box(g, bounds, v + 1, values, out)?;
    }
    values[v] = 0;
    Ok(())
}

/// `w(f) = |E(G)| - |V(G)| - Σ f(i)`.
pub fn weight(g: &Multigraph, f: &ParkingFunction) -> i64 {
    g.total_edges() as i64 - g.vertex_count() as i64 - f.sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g_star() -> Multigraph {
        Multigraph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn membership_examples() {
        let g = g_star();
        for test in membership_tests().iter() {
            assert!(test.is_parking(&g, &[-1, 0, 0, 2]).unwrap());
            assert!(!test.is_parking(&g, &[-1, 0, 2, 0]).unwrap());
            assert!(test.is_parking(&g, &[-1, 0, 0, 0]).unwrap());
            assert!(!test.is_parking(&g, &[-1, -1, 0, 0]).unwrap());
            assert_eq!(test.is_parking(&g, &[0, 0, 0, 0]), Err(Error::RootValue(0)));
            assert!(matches!(
                test.is_parking(&g, &[-1, 0]),
                Err(Error::LengthMismatch { .. })
            ));
        }
    }

    #[test]
    fn enumeration_base_cases() {
        let single = Multigraph::new(1).unwrap();
        assert_eq!(enumerate_parking(&single).unwrap(), vec![ParkingFunction(vec![-1])]);
        let path = Multigraph::path(2).unwrap();
        assert_eq!(enumerate_parking(&path).unwrap(), vec![ParkingFunction(vec![-1, 0])]);
        let disconnected = Multigraph::new(2).unwrap();
        assert_eq!(enumerate_parking(&disconnected), Err(Error::Disconnected));
    }

    #[test]
    fn parallel_enumeration_matches() {
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (0, 3), (1, 3), (3, 3)]).unwrap();
        assert_eq!(enumerate_parking(&g).unwrap(), enumerate_parking_par(&g).unwrap());
        let single = Multigraph::new(1).unwrap();
        assert_eq!(enumerate_parking_par(&single).unwrap().len(), 1);
    }

    #[test]
    fn weights() {
        let g = g_star();
        let w = |v: Vec<i64>| weight(&g, &ParkingFunction(v));
        assert_eq!(w(vec![-1, 0, 0, 0]), 2);
        assert_eq!(w(vec![-1, 2, 0, 0]), 0);
        assert_eq!(weight(&Multigraph::path(2).unwrap(), &ParkingFunction(vec![-1, 0])), 0);
    }

    #[test]
    fn parses_lists() {
        let f: ParkingFunction = "-1,0,0,2".parse().unwrap();
        assert_eq!(f.values(), &[-1, 0, 0, 2]);
        let f: ParkingFunction = "(-1, 2, 0, 0)".parse().unwrap();
        assert_eq!(f.to_string(), "-1,2,0,0");
        assert!("1,x".parse::<ParkingFunction>().is_err());
        assert!(ParkingFunction::new(&g_star(), vec![-1, 0, 2, 0]).is_err());
    }
}
