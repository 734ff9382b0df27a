//! Structure of a Lie algebra spanned by Clifford blades: structure
//! constants, Killing form, center, derived algebra, rank and the split into
//! two ideals by a central top blade; combined into a type classification.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bott::{e3_type, max_compact, CompactTypeDescriptor};
use crate::clifford::{blade_product, blades_anticommute, AmbientSignature, Blade, Multivector};
use crate::closure::{blade_closure, mask_word, ClosureBasis};
use crate::error::{Error, Result};
use crate::linalg::{
    is_negative_definite_int, kernel_basis, kernel_dimension_mod_p, EchelonBasis, IntMatrix,
    SparseVector, PROBE_PRIMES,
};
use crate::spin::spin_generator_masks;

const ABSENT: u32 = u32::MAX;

/// Structure constants of a blade basis: `[b_i, b_j] = c · b_t` with
/// `c ∈ {+2, -2}`, or zero.
///
/// Entries are evaluated on demand from the blade law; construction verifies
/// that every target lies in the basis.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    sig: AmbientSignature,
    masks: Vec<u32>,
    index: Vec<u32>,
}

impl StructureConstants {
    pub fn from_basis(basis: &ClosureBasis) -> Result<Self> {
        Self::from_masks(basis.signature(), basis.masks())
    }

    /// Masks must be distinct and nonzero; they are kept in the given order.
    pub fn from_masks(sig: AmbientSignature, masks: &[u32]) -> Result<Self> {
        let mut index = vec![ABSENT; 1usize << sig.n()];
        for (i, &m) in masks.iter().enumerate() {
            sig.check(m)?;
            index[m as usize] = i as u32;
        }
        let sc = StructureConstants {
            sig,
            masks: masks.to_vec(),
            index,
        };
        for (i, &a) in masks.iter().enumerate() {
            for &b in &masks[..i] {
                if blades_anticommute(a, b) && sc.index[(a ^ b) as usize] == ABSENT {
                    return Err(Error::NotClosed { left: a, right: b });
                }
            }
        }
        Ok(sc)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.masks.len()
    }

    #[inline]
    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    #[inline]
    pub fn signature(&self) -> AmbientSignature {
        self.sig
    }

    pub fn index_of(&self, mask: u32) -> Option<usize> {
        match self.index.get(mask as usize) {
            Some(&i) if i != ABSENT => Some(i as usize),
            _ => None,
        }
    }

    /// `[b_i, b_j]` as `(target index, coefficient)`.
    #[inline]
    pub fn bracket(&self, i: usize, j: usize) -> Option<(usize, i64)> {
        let (a, b) = (self.masks[i], self.masks[j]);
        if !blades_anticommute(a, b) {
            return None;
        }
        let p = blade_product(Blade::new(a), Blade::new(b));
        let t = self.index[p.mask() as usize];
        debug_assert_ne!(t, ABSENT);
        Some((t as usize, 2 * p.sign() as i64))
    }

    /// Bracket of coordinate vectors.
    pub fn bracket_vec(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.dim()];
        for (i, &xi) in x.iter().enumerate().filter(|(_, v)| **v != 0) {
            for (j, &yj) in y.iter().enumerate().filter(|(_, v)| **v != 0) {
                if let Some((t, c)) = self.bracket(i, j) {
                    out[t] += c * xi * yj;
                }
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| match (self.bracket(i, j), self.bracket(j, i)) {
                (None, None) => true,
                (Some((t, c)), Some((u, d))) => t == u && c == -d && c.abs() == 2,
                _ => false,
            })
        })
    }

    fn jacobi_triple(&self, i: usize, j: usize, k: usize) -> bool {
        let mut acc: Vec<(usize, i64)> = Vec::with_capacity(3);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            if let Some((t, c1)) = self.bracket(a, b) {
                if let Some((u, c2)) = self.bracket(t, c) {
                    match acc.iter_mut().find(|(idx, _)| *idx == u) {
                        Some(e) => e.1 += c1 * c2,
                        None => acc.push((u, c1 * c2)),
                    }
                }
            }
        }
        acc.iter().all(|&(_, v)| v == 0)
    }

    /// Jacobi identity on basis triples: exhaustive when `dim <= 50`,
    /// otherwise on `samples` seeded random triples.
    pub fn check_jacobi(&self, samples: usize, seed: u64) -> bool {
        let d = self.dim();
        if d <= 50 {
            return (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| self.jacobi_triple(i, j, k))));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples).all(|_| {
            let (i, j, k) = (
                rng.random_range(0..d),
                rng.random_range(0..d),
                rng.random_range(0..d),
            );
            self.jacobi_triple(i, j, k)
        })
    }
}

/// `K[i][j] = tr(ad b_i ∘ ad b_j)`.
///
/// `ad b_i ∘ ad b_j` sends the blade with mask `m` to a multiple of the blade
/// with mask `m ^ m_i ^ m_j`, so it has zero diagonal unless `i = j`: the
/// form is diagonal in a blade basis and only `K[i][i]` is accumulated.
pub fn killing_form(sc: &StructureConstants) -> IntMatrix {
    let d = sc.dim();
    let mut k = IntMatrix::zeros(d, d);
    for i in 0..d {
        let mut tr = 0i64;
        for j in 0..d {
            if let Some((t, c1)) = sc.bracket(i, j) {
                if let Some((u, c2)) = sc.bracket(i, t) {
                    if u == j {
                        tr += c1 * c2;
                    }
                }
            }
        }
        k.set(i, i, tr);
    }
    k
}

/// Basis of the radical `{x : K x = 0}` in basis coordinates.
pub fn radical_basis(k: &IntMatrix) -> Vec<SparseVector> {
    if k.is_diagonal() {
        return k
            .diagonal()
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 0)
            .map(|(i, _)| [(i, BigRational::one())].into_iter().collect())
            .collect();
    }
    kernel_basis(&k.to_rational())
        .into_iter()
        .map(|v| crate::linalg::dense_to_sparse(&v))
        .collect()
}

/// Dimension of the common kernel of all `ad b_j`, i.e. of `{x : [x, b_j] = 0 ∀j}`.
pub fn center_dim(sc: &StructureConstants) -> usize {
    center_basis(sc).rank_complement()
}

struct Constraints {
    dim: usize,
    rows: EchelonBasis,
}

impl Constraints {
    fn rank_complement(&self) -> usize {
        self.dim - self.rows.rank()
    }
}

fn center_basis(sc: &StructureConstants) -> Constraints {
    let d = sc.dim();
    let mut rows = EchelonBasis::new(d);
    let mut scratch: Vec<SparseVector> = vec![SparseVector::new(); d];
    for j in 0..d {
        if rows.rank() == d {
            break;
        }
        // Coefficient of b_t in [x, b_j] as a linear form in x.
        let mut touched = Vec::new();
        for i in 0..d {
            if let Some((t, c)) = sc.bracket(i, j) {
                if scratch[t].is_empty() {
                    touched.push(t);
                }
                scratch[t].insert(i, BigRational::from_integer(c.into()));
            }
        }
        for t in touched {
            let row = std::mem::take(&mut scratch[t]);
            rows.sift(&row).expect("row length matches");
        }
    }
    Constraints { dim: d, rows }
}

/// Echelon basis of `[m, m]`.
pub fn derived_basis(sc: &StructureConstants) -> EchelonBasis {
    let d = sc.dim();
    let mut span = EchelonBasis::new(d);
    'outer: for i in 0..d {
        for j in 0..i {
            if span.rank() == d {
                break 'outer;
            }
            if let Some((t, c)) = sc.bracket(i, j) {
                let v: SparseVector = [(t, BigRational::from_integer(c.into()))]
                    .into_iter()
                    .collect();
                span.sift(&v).expect("vector length matches");
            }
        }
    }
    span
}

pub fn derived_dim(sc: &StructureConstants) -> usize {
    derived_basis(sc).rank()
}

/// Single-prime kernel dimension of `ad x` recorded during rank probing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankTrial {
    pub trial: usize,
    pub prime: u64,
    pub kernel_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankEstimate {
    /// Smallest centralizer dimension observed.
    pub estimate: usize,
    /// The minimizing element gave the same kernel dimension for every probe prime.
    pub certified: bool,
    pub trials: Vec<RankTrial>,
}

/// Matrix of `ad x` in basis coordinates; column `j` holds `[x, b_j]`.
pub fn ad_matrix(sc: &StructureConstants, x: &[i64]) -> IntMatrix {
    let d = sc.dim();
    let mut m = IntMatrix::zeros(d, d);
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for j in 0..d {
            if let Some((t, c)) = sc.bracket(i, j) {
                m.add_at(t, j, xi * c);
            }
        }
    }
    m
}

/// Generic centralizer dimension of random integer elements (coefficients in
/// `[-9, 9]`) over `F_p`, minimized over `trials`; the minimizing element is
/// then re-checked modulo the other probe primes.
///
/// Reduction mod p can only shrink rank, so each value bounds the rational
/// centralizer dimension of that element from above.
pub fn rank_estimate(sc: &StructureConstants, trials: usize, seed: u64) -> Result<RankEstimate> {
    let trials = trials.max(1);
    let d = sc.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut log = Vec::new();
    let mut best: Option<(usize, IntMatrix)> = None;
    for trial in 0..trials {
        let x: Vec<i64> = (0..d).map(|_| rng.random_range(-9..=9)).collect();
        let ad = ad_matrix(sc, &x);
        let k = kernel_dimension_mod_p(&ad, PROBE_PRIMES[0])?;
        log.push(RankTrial {
            trial,
            prime: PROBE_PRIMES[0],
            kernel_dim: k,
        });
        if best.as_ref().is_none_or(|(b, _)| k < *b) {
            best = Some((k, ad));
        }
    }
    let (k0, ad) = best.expect("at least one trial");
    let best_trial = log
        .iter()
        .find(|t| t.kernel_dim == k0)
        .map_or(0, |t| t.trial);
    let mut certified = true;
    let mut estimate = k0;
    for &p in &PROBE_PRIMES[1..] {
        let k = kernel_dimension_mod_p(&ad, p)?;
        log.push(RankTrial {
            trial: best_trial,
            prime: p,
            kernel_dim: k,
        });
        certified &= k == k0;
        estimate = estimate.min(k);
    }
    Ok(RankEstimate {
        estimate,
        certified,
        trials: log,
    })
}

/// Two equal-dimensional ideals cut out by a central top blade with square 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub plus_dim: usize,
    pub minus_dim: usize,
    pub omega_squares_to_one: bool,
    pub omega_central: bool,
    /// Right multiplication by the top blade maps the basis into itself.
    pub basis_stable: bool,
    pub cross_brackets_vanish: bool,
    pub ideals_closed: bool,
}

impl SplitReport {
    pub fn pass(&self) -> bool {
        self.omega_squares_to_one
            && self.omega_central
            && self.basis_stable
            && self.cross_brackets_vanish
            && self.ideals_closed
            && self.plus_dim == self.minus_dim
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SplitOutcome {
    NotApplicable { reason: String },
    Split(SplitReport),
}

impl SplitOutcome {
    pub fn dims(&self) -> Option<(usize, usize)> {
        match self {
            SplitOutcome::Split(r) if r.pass() => Some((r.plus_dim, r.minus_dim)),
            _ => None,
        }
    }
}

fn unit(sig: AmbientSignature, mask: u32, sign: i8) -> Multivector {
    Multivector::from_blade(sig, Blade::with_sign(mask, sign < 0)).expect("mask fits")
}

/// Eigenspace decomposition of `span(m)` under right multiplication by the
/// top blade `ω`, applicable when `ω` is central with `ω² = 1`.
pub fn split_check(basis: &ClosureBasis) -> Result<SplitOutcome> {
    let sig = basis.signature();
    let n = sig.n();
    let omega = Blade::new(sig.full_mask());
    let square = blade_product(omega, omega);
    let central = (0..n).all(|i| !blades_anticommute(omega.mask(), 1 << i));
    if !central {
        return Ok(SplitOutcome::NotApplicable {
            reason: format!("top blade is not central for even n = {n}"),
        });
    }
    if square.sign() < 0 {
        return Ok(SplitOutcome::NotApplicable {
            reason: format!("top blade squares to -1 for n = {n}"),
        });
    }
    let d = basis.dim();
    let mut basis_stable = true;
    // (representative mask, partner mask, sign of m·ω)
    let mut pairs = Vec::new();
    for &m in basis.masks() {
        let r = blade_product(Blade::new(m), omega);
        if !basis.contains(r.mask()) {
            basis_stable = false;
            continue;
        }
        if m < r.mask() {
            pairs.push((m, r.mask(), r.sign()));
        }
    }
    let eigen = |sgn: i8| -> Vec<Multivector> {
        pairs
            .iter()
            .map(|&(m, p, s)| &unit(sig, m, 1) + &unit(sig, p, s * sgn))
            .collect()
    };
    let plus = eigen(1);
    let minus = eigen(-1);
    let coords = |x: &Multivector| -> SparseVector {
        x.terms().map(|(m, c)| (m as usize, c.clone())).collect()
    };
    let span_of = |vs: &[Multivector]| -> Result<EchelonBasis> {
        let mut e = EchelonBasis::new(1usize << n);
        for v in vs {
            e.sift(&coords(v))?;
        }
        Ok(e)
    };
    let plus_span = span_of(&plus)?;
    let minus_span = span_of(&minus)?;
    let mut cross_brackets_vanish = true;
    for x in &plus {
        for y in &minus {
            if !x.bracket(y)?.is_zero() {
                cross_brackets_vanish = false;
            }
        }
    }
    let mut ideals_closed = true;
    for &m in basis.masks() {
        let b = unit(sig, m, 1);
        for (vs, span) in [(&plus, &plus_span), (&minus, &minus_span)] {
            for v in vs.iter() {
                if !span.contains(&coords(&b.bracket(v)?))? {
                    ideals_closed = false;
                }
            }
        }
    }
    let report = SplitReport {
        plus_dim: plus_span.rank(),
        minus_dim: minus_span.rank(),
        omega_squares_to_one: square == Blade::ONE,
        omega_central: central,
        basis_stable: basis_stable && plus_span.rank() + minus_span.rank() == d,
        cross_brackets_vanish,
        ideals_closed,
    };
    Ok(SplitOutcome::Split(report))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub seed: u64,
    pub trials: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { seed: 0, trials: 5 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub n: usize,
    pub dim: usize,
    pub rank: usize,
    pub rank_certified: bool,
    pub center_dim: usize,
    pub derived_dim: usize,
    pub killing_negative_definite: bool,
    /// Killing radical, as blade words, when it is spanned by blades.
    pub killing_radical: Vec<String>,
    /// Killing form of `[m, m]` is negative definite.
    pub derived_killing_negative_definite: bool,
    pub split: SplitOutcome,
    pub summands: u32,
    pub expected_type: CompactTypeDescriptor,
    pub matched_type: Option<CompactTypeDescriptor>,
    pub mismatches: Vec<String>,
    pub pass: bool,
}

/// Wall-clock time of each classification stage.
pub type StageTimings = Vec<(&'static str, Duration)>;

pub fn classify(n: usize, opts: ClassifyOptions) -> Result<ClassificationResult> {
    Ok(classify_timed(n, opts)?.0)
}

pub fn classify_timed(
    n: usize,
    opts: ClassifyOptions,
) -> Result<(ClassificationResult, StageTimings)> {
    if n < 3 {
        return Err(Error::NTooSmall {
            what: "classify",
            min: 3,
            n,
        });
    }
    let mut timings = StageTimings::new();
    let mut clock = Instant::now();
    let mut lap = |name: &'static str, timings: &mut StageTimings| {
        timings.push((name, clock.elapsed()));
        clock = Instant::now();
    };

    let sig = AmbientSignature::new(n)?;
    let basis = blade_closure(sig, &spin_generator_masks(n)?)?;
    let sc = StructureConstants::from_basis(&basis)?;
    lap("closure", &mut timings);

    let center = center_dim(&sc);
    let derived = derived_basis(&sc);
    lap("center_derived", &mut timings);

    let killing = killing_form(&sc);
    let definite = is_negative_definite_int(&killing)?;
    let radical = radical_basis(&killing);
    let killing_radical: Vec<String> = radical
        .iter()
        .filter_map(|v| {
            if v.len() == 1 {
                v.keys().next().map(|&i| mask_word(sc.masks()[i]))
            } else {
                None
            }
        })
        .collect();
    let derived_masks: Option<Vec<u32>> = derived
        .vectors()
        .map(|v| (v.len() == 1).then(|| sc.masks()[*v.keys().next().expect("nonempty")]))
        .collect();
    let derived_definite = match derived_masks {
        Some(masks) if masks.len() == sc.dim() => definite,
        Some(masks) => {
            let sub = StructureConstants::from_masks(sig, &masks)?;
            is_negative_definite_int(&killing_form(&sub))?
        }
        None => false,
    };
    lap("killing", &mut timings);

    let rank = rank_estimate(&sc, opts.trials, opts.seed)?;
    lap("rank", &mut timings);

    let split = split_check(&basis)?;
    lap("split", &mut timings);

    let summands = if split.dims().is_some() { 2 } else { 1 };
    let expected = if n == 3 {
        e3_type()
    } else {
        max_compact(n as u32)?
    };
    let mut mismatches = Vec::new();
    let mut expect = |ok: bool, what: String| {
        if !ok {
            mismatches.push(what);
        }
    };
    let expected_dim = expected.dim().to_string();
    expect(
        basis.dim().to_string() == expected_dim,
        format!("dim {} != {expected_dim}", basis.dim()),
    );
    expect(
        rank.estimate as u64 == expected.rank(),
        format!("rank {} != {}", rank.estimate, expected.rank()),
    );
    expect(
        rank.certified,
        "rank not confirmed across probe primes".into(),
    );
    expect(
        summands == expected.summands,
        format!("summands {summands} != {}", expected.summands),
    );
    if expected.is_semisimple() {
        expect(definite, "Killing form not negative definite".into());
        expect(center == 0, format!("center dim {center} != 0"));
    } else {
        let top = mask_word(sig.full_mask());
        expect(center == 1, format!("center dim {center} != 1"));
        expect(
            derived.rank() == 3,
            format!("derived dim {} != 3", derived.rank()),
        );
        expect(
            killing_radical == [top.clone()] && radical.len() == 1,
            format!("Killing radical is not spanned by {top}"),
        );
        expect(
            derived_definite,
            "Killing form of the derived algebra not negative definite".into(),
        );
    }
    let pass = mismatches.is_empty();
    let result = ClassificationResult {
        n,
        dim: basis.dim(),
        rank: rank.estimate,
        rank_certified: rank.certified,
        center_dim: center,
        derived_dim: derived.rank(),
        killing_negative_definite: definite,
        killing_radical,
        derived_killing_negative_definite: derived_definite,
        split,
        summands,
        expected_type: expected,
        matched_type: pass.then_some(expected),
        mismatches,
        pass,
    };
    Ok((result, timings))
}

/// `x^T K y` over exact integers, used by tests of ad-invariance.
#[doc(hidden)]
pub fn bigint_form(k: &IntMatrix, x: &[i64], y: &[i64]) -> BigInt {
    let mut s = BigInt::zero();
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            s += BigInt::from(xi) * k.get(i, j) * yj;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bott::expected_rank;

    fn sc_for(n: usize) -> (ClosureBasis, StructureConstants) {
        let sig = AmbientSignature::new(n).unwrap();
        let basis = blade_closure(sig, &spin_generator_masks(n).unwrap()).unwrap();
        let sc = StructureConstants::from_basis(&basis).unwrap();
        (basis, sc)
    }

    /// `tr(ad b_i ∘ ad b_j)` summed over every basis element.
    fn killing_oracle(sc: &StructureConstants) -> IntMatrix {
        let d = sc.dim();
        let mut k = IntMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let mut tr = 0;
                for m in 0..d {
                    if let Some((t, c1)) = sc.bracket(j, m) {
                        if let Some((u, c2)) = sc.bracket(i, t) {
                            if u == m {
                                tr += c1 * c2;
                            }
                        }
                    }
                }
                k.set(i, j, tr);
            }
        }
        k
    }

    #[test]
    fn n3_structure_constants() {
        let (_, sc) = sc_for(3);
        let i12 = sc.index_of(0b011).unwrap();
        let i23 = sc.index_of(0b110).unwrap();
        let i13 = sc.index_of(0b101).unwrap();
        assert_eq!(sc.bracket(i12, i23), Some((i13, 2)));
        assert_eq!(sc.bracket(i23, i12), Some((i13, -2)));
        let top = sc.index_of(0b111).unwrap();
        assert!((0..4).all(|j| sc.bracket(top, j).is_none()));
        assert!(sc.is_antisymmetric());
    }

    #[test]
    fn open_basis_is_rejected() {
        let sig = AmbientSignature::new(3).unwrap();
        let err = StructureConstants::from_masks(sig, &[0b011, 0b110]).unwrap_err();
        assert!(matches!(err, Error::NotClosed { .. }));
    }

    #[test]
    fn jacobi_on_structure_constants() {
        for n in 3..=4 {
            assert!(sc_for(n).1.check_jacobi(0, 0));
        }
        for n in [5, 8, 10] {
            let (_, sc) = sc_for(n);
            assert!(sc.dim() > 50 || n == 5);
            assert!(sc.check_jacobi(1000, 0), "n={n}");
        }
    }

    #[test]
    fn killing_matches_dense_trace() {
        for n in 3..=6 {
            let (_, sc) = sc_for(n);
            assert_eq!(killing_form(&sc), killing_oracle(&sc), "n={n}");
        }
    }

    #[test]
    fn killing_examples() {
        let (_, sc) = sc_for(3);
        let k = killing_form(&sc);
        let top = sc.index_of(0b111).unwrap();
        assert!((0..4).all(|j| k.get(top, j) == 0 && k.get(j, top) == 0));
        assert!(k.is_symmetric());
        let (_, sc) = sc_for(4);
        let k = killing_form(&sc);
        assert!(crate::linalg::is_negative_definite(&k.to_rational()).unwrap());
    }

    #[test]
    fn killing_is_ad_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for n in [4, 5, 7] {
            let (_, sc) = sc_for(n);
            let k = killing_form(&sc);
            let d = sc.dim();
            let mut draw = || -> Vec<i64> { (0..d).map(|_| rng.random_range(-3..=3)).collect() };
            for _ in 0..(if n == 7 { 100 } else { 200 }) {
                let (x, y, z) = (draw(), draw(), draw());
                let lhs = bigint_form(&k, &sc.bracket_vec(&x, &y), &z)
                    + bigint_form(&k, &y, &sc.bracket_vec(&x, &z));
                assert!(lhs.is_zero());
            }
        }
    }

    #[test]
    fn center_and_derived() {
        let (_, sc) = sc_for(3);
        assert_eq!((center_dim(&sc), derived_dim(&sc)), (1, 3));
        let (_, sc) = sc_for(4);
        assert_eq!((center_dim(&sc), derived_dim(&sc)), (0, 10));
        // Abelian: mutually commuting blades v1v2, v3v4.
        let sig = AmbientSignature::new(4).unwrap();
        let sc = StructureConstants::from_masks(sig, &[0b0011, 0b1100]).unwrap();
        assert_eq!((center_dim(&sc), derived_dim(&sc)), (2, 0));
    }

    #[test]
    fn semisimple_and_compact_4_to_8() {
        for n in 4..=8 {
            let (_, sc) = sc_for(n);
            assert_eq!(center_dim(&sc), 0, "n={n}");
            assert!(
                is_negative_definite_int(&killing_form(&sc)).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn rank_probes() {
        for n in [4, 5, 7, 8] {
            let (_, sc) = sc_for(n);
            let r = rank_estimate(&sc, 5, 0).unwrap();
            assert_eq!(r.estimate as u64, expected_rank(n as u32).unwrap(), "n={n}");
            assert!(r.certified);
            assert_eq!(r.trials.len(), 7);
        }
    }

    #[test]
    fn split_examples() {
        let (b5, _) = sc_for(5);
        assert_eq!(split_check(&b5).unwrap().dims(), Some((10, 10)));
        let (b7, _) = sc_for(7);
        match split_check(&b7).unwrap() {
            SplitOutcome::NotApplicable { reason } => assert!(reason.contains("-1")),
            other => panic!("unexpected {other:?}"),
        }
        let (b6, _) = sc_for(6);
        assert!(matches!(
            split_check(&b6).unwrap(),
            SplitOutcome::NotApplicable { .. }
        ));
    }

    #[test]
    fn classify_small() {
        let r = classify(3, ClassifyOptions::default()).unwrap();
        assert!(r.pass, "{:?}", r.mismatches);
        assert_eq!(r.matched_type.unwrap().to_string(), "u(2)");
        assert_eq!(r.killing_radical, ["v1v2v3"]);
        assert!(r.derived_killing_negative_definite && !r.killing_negative_definite);
        let r = classify(5, ClassifyOptions::default()).unwrap();
        assert!(r.pass, "{:?}", r.mismatches);
        assert_eq!(r.matched_type.unwrap().to_string(), "sp(2) ⊕ sp(2)");
        assert_eq!(r.split.dims(), Some((10, 10)));
        assert!(classify(2, ClassifyOptions::default()).is_err());
    }
}
