//! Counting subsets by size modulo 4.
//!
//! `δ_k(n) = Σ_{i ≡ k (mod 4)} C(n, i)`, evaluated both as a direct binomial sum
//! and through the closed forms that depend on `n mod 4`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

fn check_k(k: u32) -> Result<()> {
    if k > 3 {
        Err(Error::DeltaIndex(k))
    } else {
        Ok(())
    }
}

fn check_n(n: u32, min: u32, what: &'static str) -> Result<()> {
    if n < min {
        Err(Error::NTooSmall {
            what,
            min: min as usize,
            n: n as usize,
        })
    } else {
        Ok(())
    }
}

/// Row `n` of Pascal's triangle.
fn binomial_row(n: u32) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for i in 0..n as u64 {
        let next = row[i as usize].clone() * (n as u64 - i) / (i + 1);
        row.push(next);
    }
    row
}

/// Direct binomial sum.
pub fn delta_sum(k: u32, n: u32) -> Result<BigUint> {
    check_k(k)?;
    check_n(n, 1, "delta_sum")?;
    Ok(binomial_row(n)
        .into_iter()
        .skip(k as usize)
        .step_by(4)
        .sum())
}

/// `2^e`, where `e` may be `-1` (only `n = 1` needs it); returns twice the value
/// so that everything stays integral.
fn twice_pow2(e: i64) -> BigInt {
    debug_assert!(e >= -1);
    BigInt::one() << (e + 1) as u64
}

fn minus_one_pow(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Closed form selected by `n mod 4`.
pub fn delta_closed(k: u32, n: u32) -> Result<BigUint> {
    check_k(k)?;
    check_n(n, 1, "delta_closed")?;
    let ni = n as i64;
    let ki = k as i64;
    let base = twice_pow2(ni - 2);
    // (sign, exponent) of the correction term; sign 0 means none.
    let (sign, exp) = match n % 4 {
        0 => match k {
            1 | 3 => (0, 0),
            _ => (minus_one_pow(ni / 4 + ki / 2), ni / 2 - 1),
        },
        1 => {
            let s = minus_one_pow((ni - 1) / 4);
            if k <= 1 {
                (s, (ni - 3) / 2)
            } else {
                (-s, (ni - 3) / 2)
            }
        }
        2 => match k {
            0 | 2 => (0, 0),
            _ => (minus_one_pow((ni - 2) / 4 + (ki - 1) / 2), ni / 2 - 1),
        },
        _ => {
            let s = minus_one_pow((ni - 3) / 4);
            if k == 0 || k == 3 {
                (-s, (ni - 3) / 2)
            } else {
                (s, (ni - 3) / 2)
            }
        }
    };
    let twice = match sign {
        0 => base,
        1 => base + twice_pow2(exp),
        _ => base - twice_pow2(exp),
    };
    debug_assert!(!twice.is_negative() && (&twice % 2u32).is_zero());
    Ok((twice / 2u32)
        .to_biguint()
        .expect("subset counts are non-negative"))
}

/// Outcome of the subset-count identities at one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaIdentities {
    pub n: u32,
    pub values: [String; 4],
    /// `δ_0 + δ_1 + δ_2 + δ_3`
    pub sum: String,
    /// `δ_0 + δ_1 + δ_2 + δ_3 = 2^n`
    pub total: bool,
    /// `δ_0 + δ_2 = δ_1 + δ_3 = 2^(n-1)`
    pub half_sums: bool,
    /// The complement-pairing equalities for this residue of `n mod 4`.
    pub complements: bool,
    /// Direct sums agree with the closed forms for every `k`.
    pub closed_forms: bool,
}

impl DeltaIdentities {
    pub fn all_pass(&self) -> bool {
        self.total && self.half_sums && self.complements && self.closed_forms
    }
}

pub fn delta_values(n: u32) -> Result<[BigUint; 4]> {
    Ok([
        delta_sum(0, n)?,
        delta_sum(1, n)?,
        delta_sum(2, n)?,
        delta_sum(3, n)?,
    ])
}

pub fn delta_identities(n: u32) -> Result<DeltaIdentities> {
    check_n(n, 1, "delta_identities")?;
    let d = delta_values(n)?;
    let pow = |e: u32| BigUint::one() << e;
    let sum = &d[0] + &d[1] + &d[2] + &d[3];
    let total = sum == pow(n);
    let half_sums = &d[0] + &d[2] == pow(n - 1) && &d[1] + &d[3] == pow(n - 1);
    let complements = match n % 4 {
        0 => d[1] == d[3],
        1 => d[0] == d[1] && d[2] == d[3],
        2 => d[0] == d[2],
        _ => d[0] == d[3] && d[1] == d[2],
    };
    let mut closed_forms = true;
    for k in 0..4 {
        closed_forms &= delta_closed(k, n)? == d[k as usize];
    }
    Ok(DeltaIdentities {
        n,
        values: d.map(|x| x.to_string()),
        sum: sum.to_string(),
        total,
        half_sums,
        complements,
        closed_forms,
    })
}

/// Number of grade `2, 3 (mod 4)` blades that must lie in the generated
/// subalgebra: `δ_2 + δ_3`, less the top blade when `n ≡ 3 (mod 4)` and `n > 3`.
pub fn lower_bound_dim(n: u32) -> Result<BigUint> {
    check_n(n, 3, "lower_bound_dim")?;
    let s = delta_sum(2, n)? + delta_sum(3, n)?;
    Ok(if n % 4 == 3 && n > 3 { s - 1u32 } else { s })
}

/// Convenience for callers that know the value fits.
pub fn lower_bound_dim_usize(n: u32) -> Result<usize> {
    Ok(lower_bound_dim(n)?
        .to_usize()
        .expect("dimension fits in usize"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn direct_sums() {
        assert_eq!(delta_sum(2, 4).unwrap(), u(6));
        assert_eq!(delta_sum(3, 4).unwrap(), u(4));
        assert_eq!(delta_sum(2, 1).unwrap(), u(0));
        assert_eq!(delta_sum(4, 4).unwrap_err(), Error::DeltaIndex(4));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(delta_closed(2, 4).unwrap(), u(6));
        assert_eq!(delta_closed(0, 5).unwrap(), u(6));
        assert_eq!(delta_closed(1, 7).unwrap(), u(28));
        assert!(delta_closed(7, 5).is_err());
    }

    #[test]
    fn small_n_closed_forms() {
        // n = 1: only the empty set and one singleton.
        assert_eq!(delta_closed(0, 1).unwrap(), u(1));
        assert_eq!(delta_closed(1, 1).unwrap(), u(1));
        assert_eq!(delta_closed(2, 1).unwrap(), u(0));
        assert_eq!(delta_closed(3, 1).unwrap(), u(0));
        assert_eq!(delta_closed(1, 2).unwrap(), u(2));
    }

    #[test]
    fn identities_examples() {
        let r = delta_identities(5).unwrap();
        assert!(r.all_pass());
        assert_eq!(
            r.values
                .iter()
                .map(|v| v.parse::<u64>().unwrap())
                .sum::<u64>(),
            32
        );
        let r = delta_identities(4).unwrap();
        assert_eq!((r.values[1].as_str(), r.values[3].as_str()), ("4", "4"));
        let r = delta_identities(1).unwrap();
        assert!(r.all_pass());
    }

    #[test]
    fn closed_form_matches_sum_to_64() {
        for n in 1..=64 {
            for k in 0..4 {
                assert_eq!(
                    delta_sum(k, n).unwrap(),
                    delta_closed(k, n).unwrap(),
                    "k={k} n={n}"
                );
            }
            assert!(delta_identities(n).unwrap().all_pass(), "n={n}");
        }
    }

    #[test]
    fn recurrence_two_step() {
        for n in 1..=62 {
            let d = delta_values(n).unwrap();
            assert_eq!(
                delta_sum(0, n + 2).unwrap(),
                &d[0] + &d[2] + 2u32 * &d[3],
                "n={n}"
            );
        }
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound_dim(8).unwrap(), u(120));
        assert_eq!(lower_bound_dim(7).unwrap(), u(63));
        assert_eq!(lower_bound_dim(3).unwrap(), u(4));
        assert!(lower_bound_dim(2).is_err());
    }
}
