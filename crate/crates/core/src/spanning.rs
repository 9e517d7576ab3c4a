//! Spanning tree counting. Parallel edges are distinct trees; loops never
//! appear in a tree.

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::registry::{Named, Registry};
use crate::tree::enumerate_colored_trees;

pub trait SpanningTreeCounter: Named + Send + Sync {
    fn count(&self, g: &Multigraph) -> Result<u128>;
}

/// Determinant of the reduced Laplacian, by fraction-free elimination.
pub struct MatrixTree;

/// Brute force over every parent assignment.
pub struct Exhaustive;

impl Named for MatrixTree {
    fn name(&self) -> &'static str {
        "matrix-tree"
    }
}

impl Named for Exhaustive {
    fn name(&self) -> &'static str {
        "exhaustive"
    }
}

impl SpanningTreeCounter for MatrixTree {
    fn count(&self, g: &Multigraph) -> Result<u128> {
        g.ensure_connected()?;
        let n = g.n();
        let mut m: Vec<Vec<i128>> = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        if i == j {
                            g.neighbors(i).map(|(_, k)| k as i128).sum()
                        } else {
                            -(g.multiplicity(i, j) as i128)
                        }
                    })
                    .collect()
            })
            .collect();
        let det = bareiss_determinant(&mut m)?;
        u128::try_from(det).map_err(|_| Error::Overflow)
    }
}

impl SpanningTreeCounter for Exhaustive {
    fn count(&self, g: &Multigraph) -> Result<u128> {
        g.ensure_connected()?;
        Ok(enumerate_colored_trees(g).len() as u128)
    }
}

/// Exact integer determinant; consumes the matrix contents.
fn bareiss_determinant(m: &mut [Vec<i128>]) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k]).ok_or(Error::Overflow)?;
                let b = m[i][k].checked_mul(m[k][j]).ok_or(Error::Overflow)?;
                m[i][j] = a.checked_sub(b).ok_or(Error::Overflow)? / prev;
            }
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

pub fn count_spanning_trees(g: &Multigraph) -> Result<u128> {
    MatrixTree.count(g)
}

pub fn counters() -> Registry<dyn SpanningTreeCounter> {
    let mut reg: Registry<dyn SpanningTreeCounter> = Registry::new("spanning tree counter");
    reg.register(Box::new(MatrixTree)).expect("fresh registry");
    reg.register(Box::new(Exhaustive)).expect("fresh registry");
    reg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for counter in counters().iter() {
            assert_eq!(counter.count(&g).unwrap(), 8, "{}", counter.name());
            assert_eq!(counter.count(&Multigraph::complete(4).unwrap()).unwrap(), 16);
            assert_eq!(counter.count(&Multigraph::new(1).unwrap()).unwrap(), 1);
            assert_eq!(counter.count(&Multigraph::cycle(5).unwrap()).unwrap(), 5);
        }
        assert_eq!(count_spanning_trees(&Multigraph::complete(7).unwrap()).unwrap(), 7u128.pow(5));
    }

    #[test]
    fn loops_and_parallels() {
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (2, 2), (0, 2), (0, 2), (0, 2)]).unwrap();
        // 2*1 + 2*3 + 1*3
        assert_eq!(MatrixTree.count(&g).unwrap(), 11);
        assert_eq!(Exhaustive.count(&g).unwrap(), 11);
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Multigraph::from_edges(3, &[(0, 1), (2, 2)]).unwrap();
        assert_eq!(MatrixTree.count(&g), Err(Error::Disconnected));
        assert_eq!(Exhaustive.count(&g), Err(Error::Disconnected));
    }

    #[test]
    fn deletion_contraction_recurrence() {
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (0, 3), (1, 3), (3, 3)]).unwrap();
        let total = count_spanning_trees(&g).unwrap();
        for e in g.edges().filter(|e| !e.is_loop()) {
            let contracted = count_spanning_trees(&g.contract_edge(e).unwrap()).unwrap();
            let deleted = g.delete_edge(e).unwrap();
            let rest = if deleted.is_connected() {
                count_spanning_trees(&deleted).unwrap()
            } else {
                0
            };
            assert_eq!(total, contracted + rest, "edge {e}");
        }
    }
}
