//! Weight functions: each maps a size value to the weight of one copy.
//!
//! All weights are exact rationals except the Frohmader-type weight with odd
//! `t`, which is a rational multiple of a square root.

use alloc::format;

use crate::error::{invalid, Error, Result};
use crate::rational::{binom, binom_q, ExactRational};
use crate::real::SurdSum;

fn reciprocal_binom(n: usize, k: usize) -> ExactRational {
    ExactRational::from_big(binom(n as u64, k as u64)).recip()
}

/// `w = alpha^t / C(alpha, t)`.
pub fn weight_alpha(alpha: usize, t: usize) -> Result<ExactRational> {
    if t < 2 || alpha < t {
        return Err(invalid(format!("clique weight needs alpha >= t >= 2 (alpha = {alpha}, t = {t})")));
    }
    Ok(ExactRational::from(alpha).pow(t as u32) / binom_q(alpha as u64, t as u64))
}

/// `p = 1 / C(beta, t - 1)`.
pub fn weight_path_order(beta: usize, t: usize) -> Result<ExactRational> {
    if t < 2 || beta + 1 < t {
        return Err(invalid(format!("path weight needs beta >= t - 1 >= 1 (beta = {beta}, t = {t})")));
    }
    Ok(reciprocal_binom(beta, t - 1))
}

/// `p' = 1 / C(beta - 1, t - 2)`.
pub fn weight_path_size(beta: usize, t: usize) -> Result<ExactRational> {
    if t < 3 || beta + 1 < t {
        return Err(invalid(format!("edge path weight needs beta >= t - 1 and t >= 3 (beta = {beta}, t = {t})")));
    }
    Ok(reciprocal_binom(beta - 1, t - 2))
}

/// `s^u = 1 / C(theta - u + 1, t - u)`.
pub fn weight_star(theta: usize, t: usize, u: usize) -> Result<ExactRational> {
    if u < 1 || u > t || theta + 1 < t {
        return Err(invalid(format!(
            "star weight needs theta >= t - 1 and 1 <= u <= t (theta = {theta}, t = {t}, u = {u})"
        )));
    }
    Ok(reciprocal_binom(theta + 1 - u, t - u))
}

/// `w' = C(alpha, 2)^(t/2) / C(alpha, t)`, exact as a surd.
pub fn weight_frohmader(alpha: usize, t: usize) -> Result<SurdSum> {
    if t < 2 || alpha < t {
        return Err(invalid(format!("Frohmader weight needs alpha >= t >= 2 (alpha = {alpha}, t = {t})")));
    }
    let pairs = binom(alpha as u64, 2);
    let whole = ExactRational::from_big(pairs.pow(t as u32 / 2)) / binom_q(alpha as u64, t as u64);
    let mut w = SurdSum::zero();
    if t % 2 == 0 {
        w.add_term(whole, 1);
    } else {
        let radicand = u64::try_from(pairs).map_err(|_| invalid("clique too large"))?;
        w.add_term(whole, radicand);
    }
    Ok(w)
}

fn check_cycle(gamma: usize, t: usize) -> Result<()> {
    if t < 2 {
        return Err(invalid(format!("cycle weight needs t >= 2 (t = {t})")));
    }
    if gamma < t {
        return Err(Error::UndefinedWeight { size: gamma, t });
    }
    Ok(())
}

/// `c = (gamma - 1) / C(gamma, t)`.
pub fn weight_cycle_order(gamma: usize, t: usize) -> Result<ExactRational> {
    check_cycle(gamma, t)?;
    Ok(ExactRational::from(gamma - 1) / binom_q(gamma as u64, t as u64))
}

/// `c' = C(gamma, 2) / C(gamma, t)`.
pub fn weight_cycle_size(gamma: usize, t: usize) -> Result<ExactRational> {
    check_cycle(gamma, t)?;
    Ok(binom_q(gamma as u64, 2) / binom_q(gamma as u64, t as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::cmp::Ordering;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    #[test]
    fn examples() {
        assert_eq!(weight_alpha(2, 2).unwrap(), q(4, 1));
        assert_eq!(weight_alpha(4, 3).unwrap(), q(16, 1));
        assert_eq!(weight_alpha(3, 2).unwrap(), q(3, 1));
        assert!(weight_alpha(2, 3).is_err());
        assert_eq!(weight_path_order(4, 2).unwrap(), q(1, 4));
        assert_eq!(weight_path_order(2, 3).unwrap(), q(1, 1));
        assert_eq!(weight_path_order(4, 3).unwrap(), q(1, 6));
        assert_eq!(weight_path_size(2, 3).unwrap(), q(1, 1));
        assert_eq!(weight_path_size(4, 3).unwrap(), q(1, 3));
        assert_eq!(weight_path_size(5, 4).unwrap(), q(1, 6));
        assert!(weight_path_size(4, 2).is_err());
        assert_eq!(weight_star(3, 2, 1).unwrap(), q(1, 3));
        assert_eq!(weight_star(3, 3, 1).unwrap(), q(1, 3));
        assert_eq!(weight_star(4, 3, 2).unwrap(), q(1, 3));
        assert!(weight_star(1, 3, 1).is_err());
        assert_eq!(weight_cycle_order(3, 2).unwrap(), q(2, 3));
        assert_eq!(weight_cycle_order(4, 3).unwrap(), q(3, 4));
        assert_eq!(weight_cycle_order(5, 2).unwrap(), q(2, 5));
        assert_eq!(weight_cycle_size(3, 3).unwrap(), q(3, 1));
        assert_eq!(weight_cycle_size(4, 3).unwrap(), q(3, 2));
        assert_eq!(weight_cycle_size(4, 2).unwrap(), q(1, 1));
        assert_eq!(weight_cycle_order(0, 2), Err(Error::UndefinedWeight { size: 0, t: 2 }));
        assert_eq!(weight_cycle_size(3, 4), Err(Error::UndefinedWeight { size: 3, t: 4 }));
    }

    #[test]
    fn frohmader_examples() {
        assert_eq!(weight_frohmader(3, 2).unwrap(), SurdSum::rational(q(1, 1)));
        let w = weight_frohmader(3, 3).unwrap();
        assert!((w.to_f64() - 5.196152422706632).abs() < 1e-12);
        let mut want = SurdSum::zero();
        want.add_term(q(1, 1), 27);
        assert_eq!(w.cmp_exact(&want), Ordering::Equal);
        assert_eq!(weight_frohmader(4, 4).unwrap(), SurdSum::rational(q(36, 1)));
    }

    #[test]
    fn weights_decrease_in_size() {
        for t in 2..=8usize {
            for s in t..50 {
                assert!(weight_alpha(s + 1, t).unwrap() < weight_alpha(s, t).unwrap());
                assert!(weight_path_order(s, t).unwrap() < weight_path_order(s - 1, t).unwrap());
                for u in 1..t {
                    assert!(weight_star(s, t, u).unwrap() < weight_star(s - 1, t, u).unwrap());
                }
                if t >= 3 {
                    assert!(weight_path_size(s, t).unwrap() < weight_path_size(s - 1, t).unwrap());
                }
                assert!(weight_cycle_order(s + 1, t).unwrap() < weight_cycle_order(s, t).unwrap());
            }
        }
    }

    #[test]
    fn boundary_values() {
        for t in 2..=8usize {
            assert_eq!(weight_alpha(t, t).unwrap(), ExactRational::from(t).pow(t as u32));
            assert_eq!(weight_path_order(t - 1, t).unwrap(), ExactRational::one());
            for u in 1..=t {
                assert_eq!(weight_star(t - 1, t, u).unwrap(), ExactRational::one());
            }
        }
        for a in 2..50usize {
            let bradac = ExactRational::from(2 * a) / ExactRational::from(a - 1);
            assert_eq!(weight_alpha(a, 2).unwrap(), bradac);
        }
    }
}
