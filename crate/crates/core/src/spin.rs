//! The `E_n` Dynkin diagram in Bourbaki labeling and the blade images of the
//! Kac-Moody generators `X_i` under the standard spin representation.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::clifford::{AmbientSignature, Blade, Multivector};
use crate::error::{Error, Result};

/// Simply laced diagram on nodes `1..=n`: the chain `1-3-4-...-n` with node 2
/// attached to node 4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnDiagram {
    pub n: usize,
    /// Unordered edges stored as `(min, max)`, 1-based.
    pub edges: BTreeSet<(usize, usize)>,
}

impl EnDiagram {
    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == node || b == node)
            .count()
    }

    /// Cartan matrix: 2 on the diagonal, -1 on edges.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (1..=self.n)
            .map(|i| {
                (1..=self.n)
                    .map(|j| {
                        if i == j {
                            2
                        } else if self.is_edge(i, j) {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Small ASCII drawing: the main chain with node 2 hanging below node 4.
    pub fn ascii(&self) -> String {
        let chain: Vec<usize> = std::iter::once(1)
            .chain(3..=self.n)
            .filter(|&i| i <= self.n)
            .collect();
        let mut top = String::new();
        let mut offset_of_4 = None;
        for (k, &node) in chain.iter().enumerate() {
            if k > 0 {
                top.push_str(if self.is_edge(chain[k - 1], node) {
                    "---"
                } else {
                    "   "
                });
            }
            if node == 4 {
                offset_of_4 = Some(top.chars().count());
            }
            top.push_str(&node.to_string());
        }
        let mut out = top;
        if self.n >= 2 {
            match offset_of_4 {
                Some(col) if self.is_edge(2, 4) => {
                    out.push('\n');
                    out.push_str(&" ".repeat(col));
                    out.push_str("|\n");
                    out.push_str(&" ".repeat(col));
                    out.push('2');
                }
                _ => out.push_str("   2"),
            }
        }
        out
    }
}

impl fmt::Display for EnDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "E{}: {{{}}}", self.n, parts.join(", "))
    }
}

pub fn en_adjacency(n: usize) -> EnDiagram {
    let mut edges = BTreeSet::new();
    if n >= 3 {
        edges.insert((1, 3));
    }
    for i in 3..n {
        edges.insert((i, i + 1));
    }
    if n >= 4 {
        edges.insert((2, 4));
    }
    EnDiagram { n, edges }
}

/// Images `A_1, ..., A_n` of the generators `X_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinGenerators {
    sig: AmbientSignature,
    blades: Vec<Blade>,
}

impl SpinGenerators {
    pub fn signature(&self) -> AmbientSignature {
        self.sig
    }

    pub fn n(&self) -> usize {
        self.sig.n()
    }

    pub fn blades(&self) -> &[Blade] {
        &self.blades
    }

    /// `A_i` for 1-based `i`.
    pub fn get(&self, i: usize) -> Option<Blade> {
        i.checked_sub(1).and_then(|k| self.blades.get(k).copied())
    }

    pub fn masks(&self) -> Vec<u32> {
        self.blades.iter().map(|b| b.mask()).collect()
    }

    pub fn multivectors(&self) -> Vec<Multivector> {
        self.blades
            .iter()
            .map(|&b| Multivector::from_blade(self.sig, b).expect("generators fit"))
            .collect()
    }
}

/// `A_1 = v1v2`, `A_2 = v1v2v3`, `A_j = v_{j-1}v_j` for `3 <= j <= n`.
pub fn spin_generators(n: usize) -> Result<SpinGenerators> {
    if n < 3 {
        return Err(Error::NTooSmall {
            what: "spin_generators",
            min: 3,
            n,
        });
    }
    let sig = AmbientSignature::new(n)?;
    let mut blades = vec![Blade::new(0b011), Blade::new(0b111)];
    blades.extend((3..=n).map(|j| Blade::new(0b11 << (j - 2))));
    Ok(SpinGenerators { sig, blades })
}

pub fn spin_generator_masks(n: usize) -> Result<Vec<u32>> {
    Ok(spin_generators(n)?.masks())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    /// `A_i^2 = -1`
    Square,
    /// `[A_i, A_j] = 0` off the diagram
    Commute,
    /// `[A_i, [A_i, A_j]] = -4 A_j` on edges
    DoubleBracket,
    /// `Y_i = A_i / 2`: `Y_i^2 = -1/4`
    ScaledSquare,
    /// `[Y_i, [Y_i, Y_j]] = -Y_j` on edges
    ScaledDoubleBracket,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub kind: RelationKind,
    pub i: usize,
    pub j: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
    pub failures: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn count(&self, kind: RelationKind) -> usize {
        self.checks.iter().filter(|c| c.kind == kind).count()
    }
}

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Checks the defining relations on the generator images, as multivector
/// identities.
pub fn verify_relations(n: usize) -> Result<RelationReport> {
    let gens = spin_generators(n)?;
    check_relations(&en_adjacency(n), &gens.multivectors())
}

/// Relation check for arbitrary images indexed like the diagram's nodes.
pub fn check_relations(diagram: &EnDiagram, images: &[Multivector]) -> Result<RelationReport> {
    let n = diagram.n;
    let Some(first) = images.first() else {
        return Err(Error::NoGenerators);
    };
    if images.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: images.len(),
        });
    }
    let sig = first.signature();
    let minus_one = Multivector::scalar(sig, q(-1, 1));
    let minus_quarter = Multivector::scalar(sig, q(-1, 4));
    let half = q(1, 2);
    let minus_four = q(-4, 1);
    let scaled: Vec<Multivector> = images.iter().map(|a| a.scale(&half)).collect();

    let mut checks = Vec::new();
    for i in 0..n {
        let a = &images[i];
        checks.push(RelationCheck {
            kind: RelationKind::Square,
            i: i + 1,
            j: i + 1,
            pass: a.product(a)? == minus_one,
        });
        let y = &scaled[i];
        checks.push(RelationCheck {
            kind: RelationKind::ScaledSquare,
            i: i + 1,
            j: i + 1,
            pass: y.product(y)? == minus_quarter,
        });
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (a, b) = (&images[i], &images[j]);
            if diagram.is_edge(i + 1, j + 1) {
                let lhs = a.bracket(&a.bracket(b)?)?;
                checks.push(RelationCheck {
                    kind: RelationKind::DoubleBracket,
                    i: i + 1,
                    j: j + 1,
                    pass: lhs == b.scale(&minus_four),
                });
                let (yi, yj) = (&scaled[i], &scaled[j]);
                let lhs = yi.bracket(&yi.bracket(yj)?)?;
                checks.push(RelationCheck {
                    kind: RelationKind::ScaledDoubleBracket,
                    i: i + 1,
                    j: j + 1,
                    pass: lhs == -yj,
                });
            } else if i < j {
                checks.push(RelationCheck {
                    kind: RelationKind::Commute,
                    i: i + 1,
                    j: j + 1,
                    pass: a.bracket(b)?.is_zero(),
                });
            }
        }
    }
    let failures = checks.iter().filter(|c| !c.pass).cloned().collect();
    Ok(RelationReport {
        n,
        checks,
        failures,
    })
}
