//! Lie subalgebras of the Clifford algebra generated by given elements.
//!
//! The bracket of two blades is either zero or twice another blade, so the Lie
//! algebra generated by blades is spanned by the blades reachable under
//! "XOR the masks of an anticommuting pair". [`blade_closure`] computes that
//! set directly; [`general_closure`] does the same job with exact linear
//! algebra for arbitrary multivectors and serves as a cross-check.

use num_rational::BigRational;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::clifford::{blades_anticommute, mask_indices, AmbientSignature, Multivector};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, SparseVector};

/// Largest `n` accepted unless the caller opts in.
pub const DEFAULT_MAX_N: usize = 16;
/// Hard limit of the bitset used by [`blade_closure`].
pub const HARD_MAX_N: usize = 24;

/// Rejects `n` above the default cap unless `allow_large` is set.
pub fn check_cap(n: usize, allow_large: bool) -> Result<()> {
    let cap = if allow_large {
        HARD_MAX_N
    } else {
        DEFAULT_MAX_N
    };
    if n > cap {
        Err(Error::NTooLarge { n, cap })
    } else {
        Ok(())
    }
}

/// Blade masks spanning a Lie subalgebra generated by blades.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureBasis {
    sig: AmbientSignature,
    masks: Vec<u32>,
    generators: Vec<u32>,
}

impl ClosureBasis {
    #[inline]
    pub fn signature(&self) -> AmbientSignature {
        self.sig
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.sig.n()
    }

    /// Sorted masks.
    #[inline]
    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    #[inline]
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.masks.len()
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.masks.binary_search(&mask).is_ok()
    }

    /// Checks the closure property by brute force over all pairs.
    pub fn is_closed(&self) -> bool {
        self.masks.iter().enumerate().all(|(i, &a)| {
            self.masks[..i]
                .iter()
                .all(|&b| !blades_anticommute(a, b) || self.contains(a ^ b))
        })
    }
}

/// Renders a mask as `v1v2v3`.
pub fn mask_word(mask: u32) -> String {
    if mask == 0 {
        return "1".to_owned();
    }
    mask_indices(mask).iter().map(|i| format!("v{i}")).collect()
}

impl Serialize for ClosureBasis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ClosureBasis", 3)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("dim", &self.dim())?;
        let hex: Vec<String> = self.masks.iter().map(|m| format!("{m:#x}")).collect();
        st.serialize_field("masks", &hex)?;
        st.end()
    }
}

struct BitSet(Vec<u64>);

impl BitSet {
    fn new(bits: usize) -> Self {
        BitSet(vec![0; bits.div_ceil(64)])
    }

    /// Returns true if the bit was newly set.
    #[inline]
    fn insert(&mut self, i: u32) -> bool {
        let (w, b) = ((i / 64) as usize, i % 64);
        let fresh = self.0[w] & (1 << b) == 0;
        self.0[w] |= 1 << b;
        fresh
    }
}

/// Smallest set of masks containing `generators` and closed under XOR of
/// anticommuting pairs.
pub fn blade_closure(sig: AmbientSignature, generators: &[u32]) -> Result<ClosureBasis> {
    if generators.is_empty() {
        return Err(Error::NoGenerators);
    }
    if sig.n() > HARD_MAX_N {
        return Err(Error::NTooLarge {
            n: sig.n(),
            cap: HARD_MAX_N,
        });
    }
    for &g in generators {
        sig.check(g)?;
        if g == 0 {
            return Err(Error::ZeroGenerator);
        }
    }
    let mut seen = BitSet::new(1 << sig.n());
    let mut members: Vec<u32> = Vec::new();
    for &g in generators {
        if seen.insert(g) {
            members.push(g);
        }
    }
    // Every pair (members[j], members[i]) with j < i is tested exactly once,
    // when members[i] is dequeued.
    let mut next = 0;
    while next < members.len() {
        let a = members[next];
        for j in 0..next {
            let b = members[j];
            if blades_anticommute(a, b) && seen.insert(a ^ b) {
                members.push(a ^ b);
            }
        }
        next += 1;
    }
    members.sort_unstable();
    Ok(ClosureBasis {
        sig,
        masks: members,
        generators: generators.to_vec(),
    })
}

/// Exact echelon basis of the Lie algebra generated by arbitrary
/// multivectors, in blade coordinates.
#[derive(Debug, Clone)]
pub struct GeneralClosureBasis {
    sig: AmbientSignature,
    basis: EchelonBasis,
    generators: Vec<Multivector>,
}

impl GeneralClosureBasis {
    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.basis
    }

    pub fn generators(&self) -> &[Multivector] {
        &self.generators
    }

    pub fn basis_elements(&self) -> Vec<Multivector> {
        self.basis
            .vectors()
            .map(|v| from_coords(self.sig, v))
            .collect()
    }

    pub fn contains(&self, x: &Multivector) -> Result<bool> {
        self.basis.contains(&to_coords(x))
    }

    /// Whether the bracket of every pair of basis vectors lies in the span.
    pub fn is_closed(&self) -> Result<bool> {
        let elems = self.basis_elements();
        for (i, x) in elems.iter().enumerate() {
            for y in &elems[..i] {
                if !self.contains(&x.bracket(y)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Mutual containment with a blade closure.
    pub fn same_span_as(&self, blades: &ClosureBasis) -> Result<bool> {
        if self.sig != blades.signature() || self.rank() != blades.dim() {
            return Ok(false);
        }
        for &m in blades.masks() {
            let v: SparseVector = [(m as usize, BigRational::one())].into_iter().collect();
            if !self.basis.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn to_coords(x: &Multivector) -> SparseVector {
    x.terms().map(|(m, c)| (m as usize, c.clone())).collect()
}

fn from_coords(sig: AmbientSignature, v: &SparseVector) -> Multivector {
    Multivector::from_terms(sig, v.iter().map(|(&m, c)| (m as u32, c.clone())))
        .expect("coordinates lie inside the ambient space")
}

/// Breadth-first Lie span: each epoch brackets the vectors accepted in the
/// previous epoch with the whole current basis, until an epoch adds nothing.
pub fn general_closure(
    sig: AmbientSignature,
    generators: &[Multivector],
) -> Result<GeneralClosureBasis> {
    if generators.is_empty() {
        return Err(Error::NoGenerators);
    }
    let mut basis = EchelonBasis::new(1usize << sig.n());
    let mut frontier = Vec::new();
    for g in generators {
        if g.signature() != sig {
            return Err(Error::DimensionMismatch {
                left: sig.n(),
                right: g.dim(),
            });
        }
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        if basis.sift(&to_coords(g))? {
            frontier.push(g.clone());
        }
    }
    let bound = 1usize << sig.n();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            let current: Vec<Multivector> = basis.vectors().map(|v| from_coords(sig, v)).collect();
            for y in &current {
                let z = x.bracket(y)?;
                if !z.is_zero() && basis.sift(&to_coords(&z))? {
                    next.push(z);
                }
            }
        }
        debug_assert!(basis.rank() <= bound);
        frontier = next;
    }
    Ok(GeneralClosureBasis {
        sig,
        basis,
        generators: generators.to_vec(),
    })
}

/// Blades of grade `2, 3 (mod 4)`, without the top blade when `n ≡ 3 (mod 4)`
/// and `n > 3`.
pub fn predicted_masks(sig: AmbientSignature) -> Vec<u32> {
    let n = sig.n();
    let full = sig.full_mask();
    (1..=full)
        .filter(|m| matches!(m.count_ones() % 4, 2 | 3))
        .filter(|&m| !(m == full && n % 4 == 3 && n > 3))
        .collect()
}

/// Containment of the grade `2, 3 (mod 4)` blades in a spin closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub n: usize,
    /// Every grade `2, 3 (mod 4)` blade other than the top blade is present.
    pub required_present: bool,
    /// Required masks that are missing.
    pub missing: Vec<String>,
    pub top_blade_present: bool,
    /// The top blade is expected exactly when `n = 3` or its grade is `2, 3 (mod 4)`
    /// with `n ≢ 3 (mod 4)`.
    pub top_blade_expected: bool,
    pub has_grade_0_1_mod_4: bool,
    pub equals_predicted: bool,
    pub pass: bool,
}

pub fn lemma_containment_check(basis: &ClosureBasis) -> Result<LemmaReport> {
    let sig = basis.signature();
    let n = sig.n();
    if n < 3 {
        return Err(Error::NTooSmall {
            what: "lemma_containment_check",
            min: 3,
            n,
        });
    }
    let full = sig.full_mask();
    let missing: Vec<String> = (1..full)
        .filter(|m| matches!(m.count_ones() % 4, 2 | 3))
        .filter(|&m| !basis.contains(m))
        .map(mask_word)
        .collect();
    let predicted = predicted_masks(sig);
    let top_blade_present = basis.contains(full);
    let top_blade_expected = predicted.last() == Some(&full);
    let has_grade_0_1_mod_4 = basis.masks().iter().any(|m| m.count_ones() % 4 < 2);
    let equals_predicted = basis.masks() == predicted.as_slice();
    let required_present = missing.is_empty();
    let pass = required_present
        && !has_grade_0_1_mod_4
        && equals_predicted
        && top_blade_present == top_blade_expected;
    Ok(LemmaReport {
        n,
        required_present,
        missing,
        top_blade_present,
        top_blade_expected,
        has_grade_0_1_mod_4,
        equals_predicted,
        pass,
    })
}
