//! Classical parking functions as the parking functions of `K_{n+1}`.
//!
//! Values start at 0: `α` is parking iff its nondecreasing rearrangement
//! `b` satisfies `b_i <= i - 1`.

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::parking::{is_parking, ParkingFunction};
use crate::poly::BivariatePolynomial;

fn check_nonnegative(alpha: &[i64]) -> Result<()> {
    match alpha.iter().position(|&a| a < 0) {
        Some(i) => Err(Error::NegativeValue(i + 1)),
        None => Ok(()),
    }
}

/// Sorted-prefix test.
pub fn is_classical_parking(alpha: &[i64]) -> Result<bool> {
    check_nonnegative(alpha)?;
    let mut sorted = alpha.to_vec();
    sorted.sort_unstable();
    Ok(sorted.iter().enumerate().all(|(i, &b)| b <= i as i64))
}

/// Membership of `(-1, α)` in `P_{K_{n+1}}`.
pub fn is_classical_parking_via_complete(alpha: &[i64]) -> Result<bool> {
    check_nonnegative(alpha)?;
    let g = Multigraph::complete(alpha.len() + 1)?;
    is_parking(&g, &prepend_root(alpha))
}

fn prepend_root(alpha: &[i64]) -> Vec<i64> {
    std::iter::once(-1).chain(alpha.iter().copied()).collect()
}

/// `(-1, a_1, .., a_n)` as a parking function of `K_{n+1}`.
pub fn embed_classical(alpha: &[i64]) -> Result<ParkingFunction> {
    if !is_classical_parking(alpha)? {
        return Err(Error::NotClassicalParking);
    }
    Ok(ParkingFunction::from_values_unchecked(prepend_root(alpha)))
}

/// 1-based positions `i` where `a_i = j` has exactly `n - 1 - j` larger
/// terms, all of them strictly before position `i`.
pub fn critical_maxima(alpha: &[i64]) -> Result<Vec<usize>> {
    if !is_classical_parking(alpha)? {
        return Err(Error::NotClassicalParking);
    }
    let n = alpha.len() as i64;
    Ok(alpha
        .iter()
        .enumerate()
        .filter(|&(i, &j)| {
            let larger: Vec<usize> = (0..alpha.len()).filter(|&k| alpha[k] > j).collect();
            larger.len() as i64 == n - 1 - j && larger.iter().all(|&k| k < i)
        })
        .map(|(i, _)| i + 1)
        .collect())
}

/// `cm(α)`.
pub fn cm(alpha: &[i64]) -> Result<usize> {
    critical_maxima(alpha).map(|c| c.len())
}

/// All classical parking functions of length `n`, lexicographically.
pub fn enumerate_classical(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut alpha = vec![0i64; n];
    loop {
        if is_classical_parking(&alpha).expect("nonnegative") {
            out.push(alpha.clone());
        }
        // odometer over [0, n-1]^n, last position fastest
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if alpha[i] + 1 < n as i64 {
                alpha[i] += 1;
                break;
            }
            alpha[i] = 0;
        }
    }
}

/// `Σ_α x^{cm(α)} y^{C(n,2) - Σ a_i}`.
pub fn tutte_complete(n: usize) -> BivariatePolynomial {
    let top = (n * n.saturating_sub(1) / 2) as i64;
    let mut p = BivariatePolynomial::zero();
    for alpha in enumerate_classical(n) {
        let c = cm(&alpha).expect("enumerated functions are parking");
        let w = top - alpha.iter().sum::<i64>();
        p.add_term(1, c as u32, w as u32);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        assert!(is_classical_parking(&[2, 1, 0]).unwrap());
        assert!(is_classical_parking(&[0, 0, 0, 0]).unwrap());
        assert!(!is_classical_parking(&[2, 2, 2]).unwrap());
        assert!(!is_classical_parking_via_complete(&[2, 2, 2]).unwrap());
        assert_eq!(is_classical_parking(&[0, -1]), Err(Error::NegativeValue(2)));
    }

    #[test]
    fn both_membership_routes_agree() {
        for n in 1..=4usize {
            let mut alpha = vec![0i64; n];
            loop {
                assert_eq!(
                    is_classical_parking(&alpha).unwrap(),
                    is_classical_parking_via_complete(&alpha).unwrap(),
                    "{alpha:?}"
                );
                let mut i = n;
                let done = loop {
                    if i == 0 {
                        break true;
                    }
                    i -= 1;
                    if alpha[i] < n as i64 {
                        alpha[i] += 1;
                        break false;
                    }
                    alpha[i] = 0;
                };
                if done {
                    break;
                }
            }
        }
    }

    #[test]
    fn embedding() {
        assert_eq!(embed_classical(&[0, 2, 1]).unwrap().values(), &[-1, 0, 2, 1]);
        assert_eq!(embed_classical(&[0, 0, 0]).unwrap().values(), &[-1, 0, 0, 0]);
        assert_eq!(embed_classical(&[2, 1, 0]).unwrap().values(), &[-1, 2, 1, 0]);
        assert_eq!(embed_classical(&[1, 1]), Err(Error::NotClassicalParking));
    }

    #[test]
    fn critical_maxima_examples() {
        assert_eq!(critical_maxima(&[0, 2, 1]).unwrap(), vec![2, 3]);
        assert_eq!(critical_maxima(&[2, 1, 0]).unwrap(), vec![1, 2, 3]);
        assert_eq!(critical_maxima(&[0, 0, 0]).unwrap(), Vec::<usize>::new());
        assert_eq!(cm(&[2, 0, 1]).unwrap(), 2);
    }

    #[test]
    fn small_complete_graphs() {
        assert_eq!(tutte_complete(1), BivariatePolynomial::x());
        assert_eq!(tutte_complete(2).to_string(), "x^2+x+y");
        assert_eq!(enumerate_classical(2), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
    }
}
