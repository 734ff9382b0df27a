//! Period-8 classification of the real Clifford algebras `C(R^n, q)` and of
//! their maximal semisimple compact Lie subalgebras.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DivisionRing {
    R,
    C,
    H,
}

impl DivisionRing {
    pub fn real_dim(self) -> u64 {
        match self {
            DivisionRing::R => 1,
            DivisionRing::C => 2,
            DivisionRing::H => 4,
        }
    }
}

impl fmt::Display for DivisionRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DivisionRing::R => "R",
            DivisionRing::C => "C",
            DivisionRing::H => "H",
        })
    }
}

/// `(M(m_1, D) ⊕ ...) ⊗_R M(t, R)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixAlgebraDescriptor {
    /// `(ring, matrix size)` per summand; one or two summands.
    pub summands: Vec<(DivisionRing, u64)>,
    /// Size `t` of the real matrix tensor factor.
    pub tensor_factor: u64,
}

impl MatrixAlgebraDescriptor {
    pub fn real_dim(&self) -> BigUint {
        let t = BigUint::from(self.tensor_factor);
        let inner: BigUint = self
            .summands
            .iter()
            .map(|&(d, m)| BigUint::from(m) * m * d.real_dim())
            .sum();
        inner * &t * &t
    }
}

impl fmt::Display for MatrixAlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, m)) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            if *m == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "M({m},{d})")?;
            }
        }
        write!(f, " ⊗ M({},R)", self.tensor_factor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CompactFamily {
    So,
    Su,
    Sp,
    /// Only used for the reductive `E_3` image.
    U,
}

impl fmt::Display for CompactFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompactFamily::So => "so",
            CompactFamily::Su => "su",
            CompactFamily::Sp => "sp",
            CompactFamily::U => "u",
        })
    }
}

/// A compact Lie algebra `g(N)` or `g(N) ⊕ g(N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CompactTypeDescriptor {
    pub family: CompactFamily,
    pub size: u64,
    pub summands: u32,
}

impl CompactTypeDescriptor {
    pub fn new(family: CompactFamily, size: u64, summands: u32) -> Self {
        CompactTypeDescriptor {
            family,
            size,
            summands,
        }
    }

    fn summand_dim(&self) -> BigUint {
        let n = BigUint::from(self.size);
        match self.family {
            CompactFamily::So => &n * (&n - 1u32) / 2u32,
            CompactFamily::Su => &n * &n - 1u32,
            CompactFamily::Sp => &n * (2u32 * &n + 1u32),
            CompactFamily::U => &n * &n,
        }
    }

    pub fn dim(&self) -> BigUint {
        self.summand_dim() * self.summands
    }

    pub fn rank(&self) -> u64 {
        let r = match self.family {
            CompactFamily::So => self.size / 2,
            CompactFamily::Su => self.size - 1,
            CompactFamily::Sp | CompactFamily::U => self.size,
        };
        r * self.summands as u64
    }

    /// Whether the Killing form is nondegenerate; only `u(N)` has a center.
    pub fn is_semisimple(&self) -> bool {
        self.family != CompactFamily::U
    }
}

impl fmt::Display for CompactTypeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.summands {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            write!(f, "{}({})", self.family, self.size)?;
        }
        Ok(())
    }
}

impl Serialize for CompactTypeDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CompactTypeDescriptor", 6)?;
        st.serialize_field("name", &self.to_string())?;
        st.serialize_field("family", &self.family)?;
        st.serialize_field("size", &self.size)?;
        st.serialize_field("summands", &self.summands)?;
        st.serialize_field("dim", &self.dim().to_string())?;
        st.serialize_field("rank", &self.rank())?;
        st.end()
    }
}

fn require(n: u32, min: u32, what: &'static str) -> Result<()> {
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

fn pow2(e: u32) -> u64 {
    1u64 << e
}

/// The Clifford algebra `C(R^n, q)` as a matrix algebra.
pub fn bott_algebra(n: u32) -> Result<MatrixAlgebraDescriptor> {
    require(n, 2, "bott_algebra")?;
    use DivisionRing::*;
    let (summands, t) = match n % 8 {
        0 => (vec![(R, 1)], pow2(n / 2)),
        1 => (vec![(R, 1), (R, 1)], pow2((n - 1) / 2)),
        2 => (vec![(R, 2)], pow2((n - 2) / 2)),
        3 => (vec![(C, 2)], pow2((n - 3) / 2)),
        4 => (vec![(H, 2)], pow2((n - 4) / 2)),
        5 => (vec![(H, 2), (H, 2)], pow2((n - 5) / 2)),
        6 => (vec![(H, 4)], pow2((n - 6) / 2)),
        _ => (vec![(C, 8)], pow2((n - 7) / 2)),
    };
    Ok(MatrixAlgebraDescriptor {
        summands,
        tensor_factor: t,
    })
}

/// Maximal semisimple compact Lie subalgebra of `C(R^n, q)`.
pub fn max_compact(n: u32) -> Result<CompactTypeDescriptor> {
    require(n, 2, "max_compact")?;
    use CompactFamily::*;
    let d = |f, e, s| CompactTypeDescriptor::new(f, pow2(e), s);
    Ok(match n % 8 {
        0 | 2 => d(So, n / 2, 1),
        1 => d(So, (n - 1) / 2, 2),
        3 | 7 => d(Su, (n - 1) / 2, 1),
        4 | 6 => d(Sp, (n - 2) / 2, 1),
        _ => d(Sp, (n - 3) / 2, 2),
    })
}

/// The reductive image for `n = 3`.
pub fn e3_type() -> CompactTypeDescriptor {
    CompactTypeDescriptor::new(CompactFamily::U, 2, 1)
}

pub fn expected_dim(n: u32) -> Result<BigUint> {
    require(n, 4, "expected_dim")?;
    Ok(max_compact(n)?.dim())
}

pub fn expected_dim_usize(n: u32) -> Result<usize> {
    Ok(expected_dim(n)?
        .to_usize()
        .expect("dimension fits in usize"))
}

pub fn expected_rank(n: u32) -> Result<u64> {
    require(n, 4, "expected_rank")?;
    Ok(max_compact(n)?.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::lower_bound_dim;

    #[test]
    fn algebra_table() {
        assert_eq!(bott_algebra(8).unwrap().to_string(), "R ⊗ M(16,R)");
        assert_eq!(bott_algebra(10).unwrap().to_string(), "M(2,R) ⊗ M(16,R)");
        assert_eq!(bott_algebra(3).unwrap().to_string(), "M(2,C) ⊗ M(1,R)");
        assert_eq!(
            bott_algebra(13).unwrap().to_string(),
            "M(2,H) ⊕ M(2,H) ⊗ M(16,R)"
        );
        assert_eq!(bott_algebra(9).unwrap().to_string(), "R ⊕ R ⊗ M(16,R)");
        assert!(bott_algebra(1).is_err());
    }

    #[test]
    fn compact_table() {
        assert_eq!(max_compact(8).unwrap().to_string(), "so(16)");
        assert_eq!(max_compact(5).unwrap().to_string(), "sp(2) ⊕ sp(2)");
        assert_eq!(max_compact(7).unwrap().to_string(), "su(8)");
        assert_eq!(max_compact(2).unwrap().to_string(), "so(2)");
        assert_eq!(e3_type().to_string(), "u(2)");
        assert_eq!(e3_type().dim(), BigUint::from(4u32));
    }

    #[test]
    fn dims_and_ranks() {
        assert_eq!(expected_dim(8).unwrap(), BigUint::from(120u32));
        assert_eq!(expected_dim(7).unwrap(), BigUint::from(63u32));
        assert_eq!(expected_dim(12).unwrap(), BigUint::from(2080u32));
        assert_eq!(expected_rank(8).unwrap(), 8);
        assert_eq!(expected_rank(7).unwrap(), 7);
        assert_eq!(expected_rank(5).unwrap(), 4);
        assert!(expected_dim(3).is_err());
        assert!(expected_rank(3).is_err());
    }

    #[test]
    fn expected_dim_matches_lower_bound_to_64() {
        for n in 4..=64 {
            assert_eq!(
                expected_dim(n).unwrap(),
                lower_bound_dim(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn real_dimension_is_two_to_the_n() {
        for n in 2..=64 {
            assert_eq!(
                bott_algebra(n).unwrap().real_dim(),
                BigUint::from(1u8) << n,
                "n={n}"
            );
        }
    }

    #[test]
    fn period_eight() {
        for n in 2..=56 {
            let a = bott_algebra(n).unwrap();
            let b = bott_algebra(n + 8).unwrap();
            assert_eq!(a.summands, b.summands);
            assert_eq!(a.tensor_factor * 16, b.tensor_factor);
        }
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(max_compact(5).unwrap()).unwrap();
        assert_eq!(v["name"], "sp(2) ⊕ sp(2)");
        assert_eq!(v["dim"], "20");
        assert_eq!(v["rank"], 4);
    }
}
