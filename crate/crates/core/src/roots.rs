//! Positive roots of the finite `E_n` diagrams (`3 <= n <= 8`).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::clifford::AmbientSignature;
use crate::closure::blade_closure;
use crate::error::{Error, Result};
use crate::spin::{en_adjacency, spin_generator_masks};

/// `|Φ(E_8)|`; no finite simply laced system of rank <= 8 has more roots.
const ROOT_GUARD: usize = 240;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSet {
    pub n: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Coordinates over the simple roots, sorted by height then lexicographically.
    pub roots: Vec<Vec<i64>>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Symmetric form `⟨x, y⟩ = x^T A y`.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, row) in self.cartan.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                s += x[i] * a * y[j];
            }
        }
        s
    }

    pub fn contains(&self, beta: &[i64]) -> bool {
        self.roots.iter().any(|r| r == beta)
    }

    /// Roots that cannot be raised by any simple root.
    pub fn highest_roots(&self) -> Vec<Vec<i64>> {
        let set: BTreeSet<&Vec<i64>> = self.roots.iter().collect();
        self.roots
            .iter()
            .filter(|beta| {
                (0..self.n).all(|i| {
                    let mut up = (*beta).clone();
                    up[i] += 1;
                    !set.contains(&up)
                })
            })
            .cloned()
            .collect()
    }
}

fn height(beta: &[i64]) -> i64 {
    beta.iter().sum()
}

/// Breadth-first by height: `β + α_i` is a root iff `p - ⟨β, α_i⟩ > 0`, with
/// `p` the length of the `α_i`-string below `β`.
pub fn positive_roots(n: usize) -> Result<RootSet> {
    if n < 3 {
        return Err(Error::NTooSmall {
            what: "positive_roots",
            min: 3,
            n,
        });
    }
    if n > 8 {
        return Err(Error::InfiniteType(n));
    }
    let cartan = en_adjacency(n).cartan_matrix();
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    all.extend(layer.iter().cloned());
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                let pair: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !all.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        all.extend(next.iter().cloned());
        if all.len() > ROOT_GUARD {
            return Err(Error::InfiniteType(n));
        }
        layer = next.into_iter().collect();
    }
    let mut roots: Vec<Vec<i64>> = all.into_iter().collect();
    roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
    Ok(RootSet { n, cartan, roots })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootCountCheck {
    pub n: usize,
    pub positive_roots: usize,
    pub closure_dim: usize,
    pub pass: bool,
}

/// `|Φ⁺(E_n)|` against the dimension of the blade closure of the spin images.
pub fn theorem_b_check(n: usize) -> Result<RootCountCheck> {
    let roots = positive_roots(n)?;
    let sig = AmbientSignature::new(n)?;
    let closure = blade_closure(sig, &spin_generator_masks(n)?)?;
    Ok(RootCountCheck {
        n,
        positive_roots: roots.len(),
        closure_dim: closure.dim(),
        pass: roots.len() == closure.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Orbit of the simple roots under simple reflections; positive half.
    fn reflection_oracle(n: usize) -> BTreeSet<Vec<i64>> {
        let a = en_adjacency(n).cartan_matrix();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut stack: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| (i == j) as i64).collect())
            .collect();
        while let Some(b) = stack.pop() {
            if !seen.insert(b.clone()) || seen.len() > 1000 {
                continue;
            }
            for i in 0..n {
                let c: i64 = (0..n).map(|j| b[j] * a[j][i]).sum();
                let mut r = b.clone();
                r[i] -= c;
                if !seen.contains(&r) {
                    stack.push(r);
                }
            }
        }
        seen.into_iter()
            .filter(|r| r.iter().all(|&x| x >= 0))
            .collect()
    }

    #[test]
    fn counts() {
        let got: Vec<usize> = (3..=8).map(|n| positive_roots(n).unwrap().len()).collect();
        assert_eq!(got, [4, 10, 20, 36, 63, 120]);
    }

    #[test]
    fn matches_reflection_orbit() {
        for n in 3..=8 {
            let roots: BTreeSet<Vec<i64>> = positive_roots(n).unwrap().roots.into_iter().collect();
            assert_eq!(roots, reflection_oracle(n), "n={n}");
        }
    }

    #[test]
    fn all_roots_have_norm_two() {
        for n in 3..=8 {
            let rs = positive_roots(n).unwrap();
            assert!(rs.roots.iter().all(|b| rs.pairing(b, b) == 2));
            assert!(rs
                .roots
                .iter()
                .all(|b| b.iter().all(|&x| x >= 0) && height(b) > 0));
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(positive_roots(3).unwrap().highest_roots().len(), 2);
        for n in 4..=8 {
            assert_eq!(positive_roots(n).unwrap().highest_roots().len(), 1, "n={n}");
        }
        // E_8 highest root in Bourbaki labeling.
        assert_eq!(
            positive_roots(8).unwrap().highest_roots()[0],
            [2, 3, 4, 6, 5, 4, 3, 2]
        );
    }

    #[test]
    fn out_of_range() {
        assert_eq!(positive_roots(9).unwrap_err(), Error::InfiniteType(9));
        assert!(positive_roots(9)
            .unwrap_err()
            .to_string()
            .contains("infinite type"));
        assert!(matches!(positive_roots(2), Err(Error::NTooSmall { .. })));
    }

    #[test]
    fn count_matches_closure() {
        for n in 3..=8 {
            assert!(theorem_b_check(n).unwrap().pass, "n={n}");
        }
        assert_eq!(theorem_b_check(7).unwrap().closure_dim, 63);
    }
}
