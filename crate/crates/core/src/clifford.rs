//! Exact arithmetic in the real Clifford algebra `C(R^n, q)` for the standard
//! positive definite form, where `v_i^2 = 1` and distinct generators
//! anticommute.
//!
//! Generators are 1-based in all text (`v1`, `v2`, ...) and map to bit `i - 1`
//! of a blade mask. A blade is always stored as the ascending product of its
//! generators with the sign carried separately.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ambient dimension representable by a `u32` mask.
pub const MAX_GENERATORS: usize = 32;

/// The ambient space `R^n` with `q = x_1^2 + ... + x_n^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AmbientSignature(usize);

impl AmbientSignature {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if n > MAX_GENERATORS {
            return Err(Error::NTooLarge {
                n,
                cap: MAX_GENERATORS,
            });
        }
        Ok(Self(n))
    }

    #[inline]
    pub fn n(self) -> usize {
        self.0
    }

    /// Mask of the top blade `v_1 v_2 ... v_n`.
    #[inline]
    pub fn full_mask(self) -> u32 {
        if self.0 == 32 {
            u32::MAX
        } else {
            (1u32 << self.0) - 1
        }
    }

    #[inline]
    pub fn contains(self, mask: u32) -> bool {
        mask & !self.full_mask() == 0
    }

    pub fn check(self, mask: u32) -> Result<()> {
        if self.contains(mask) {
            Ok(())
        } else {
            Err(Error::MaskOutOfRange { mask, n: self.0 })
        }
    }
}

/// A signed Clifford monomial `±v_{j_1} ... v_{j_k}` with `j_1 < ... < j_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade {
    mask: u32,
    sign: i8,
}

impl Blade {
    pub const ONE: Blade = Blade { mask: 0, sign: 1 };

    /// A positive blade with the given mask.
    #[inline]
    pub const fn new(mask: u32) -> Self {
        Blade { mask, sign: 1 }
    }

    /// `negative == true` yields `-blade`.
    #[inline]
    pub const fn with_sign(mask: u32, negative: bool) -> Self {
        Blade {
            mask,
            sign: if negative { -1 } else { 1 },
        }
    }

    /// The product `v_{i_1} v_{i_2} ...` of 1-based generator indices taken in
    /// the given order; repeated indices cancel since `v_i^2 = 1`.
    pub fn from_word(sig: AmbientSignature, word: &[usize]) -> Result<Self> {
        let mut acc = Blade::ONE;
        for &i in word {
            if i == 0 || i > sig.n() {
                return Err(Error::GeneratorIndex {
                    index: i,
                    n: sig.n(),
                });
            }
            acc = blade_product(acc, Blade::new(1 << (i - 1)));
        }
        Ok(acc)
    }

    /// Sorted 1-based generator indices.
    pub fn indices(self) -> Vec<usize> {
        mask_indices(self.mask)
    }

    #[inline]
    pub fn mask(self) -> u32 {
        self.mask
    }

    #[inline]
    pub fn sign(self) -> i8 {
        self.sign
    }

    #[inline]
    pub fn grade(self) -> u32 {
        self.mask.count_ones()
    }

    #[inline]
    pub fn is_negative(self) -> bool {
        self.sign < 0
    }

    /// Multiplies inside a given ambient space, rejecting masks that do not fit.
    pub fn product_in(sig: AmbientSignature, a: Blade, b: Blade) -> Result<Blade> {
        sig.check(a.mask)?;
        sig.check(b.mask)?;
        Ok(blade_product(a, b))
    }

    /// Sign of `self^2`: `(-1)^(k(k-1)/2)` for grade `k`.
    #[inline]
    pub fn square_sign(self) -> i8 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl Neg for Blade {
    type Output = Blade;
    fn neg(self) -> Blade {
        Blade {
            mask: self.mask,
            sign: -self.sign,
        }
    }
}

/// 1-based indices of the set bits.
pub fn mask_indices(mut mask: u32) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let i = mask.trailing_zeros();
        out.push(i as usize + 1);
        mask &= mask - 1;
    }
    out
}

/// Sign picked up when the ascending word of `a` is followed by the ascending
/// word of `b` and sorted: `(-1)^t` with `t` the number of pairs
/// `(i in a, j in b)` with `i > j`.
#[inline]
pub fn reorder_sign(a: u32, mut b: u32) -> i8 {
    let mut t = 0u32;
    while b != 0 {
        let i = b.trailing_zeros();
        // bits of `a` strictly above bit i
        t += (a >> i >> 1).count_ones();
        b &= b - 1;
    }
    if t % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Geometric product of two blades.
#[inline]
pub fn blade_product(a: Blade, b: Blade) -> Blade {
    Blade {
        mask: a.mask ^ b.mask,
        sign: a.sign * b.sign * reorder_sign(a.mask, b.mask),
    }
}

/// True iff `ab = -ba`, i.e. `|a||b| - |a ∩ b|` is odd.
#[inline]
pub fn blades_anticommute(a: u32, b: u32) -> bool {
    let p = a.count_ones() * b.count_ones() + (a & b).count_ones();
    p % 2 == 1
}

/// A general element of the Clifford algebra with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    sig: AmbientSignature,
    terms: BTreeMap<u32, BigRational>,
}

impl Multivector {
    pub fn zero(sig: AmbientSignature) -> Self {
        Multivector {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: AmbientSignature, value: BigRational) -> Self {
        let mut mv = Self::zero(sig);
        mv.add_term(0, value);
        mv
    }

    pub fn one(sig: AmbientSignature) -> Self {
        Self::scalar(sig, BigRational::one())
    }

    pub fn from_blade(sig: AmbientSignature, blade: Blade) -> Result<Self> {
        sig.check(blade.mask)?;
        let mut mv = Self::zero(sig);
        mv.add_term(blade.mask, BigRational::from_integer(blade.sign.into()));
        Ok(mv)
    }

    /// Builds from `(mask, coefficient)` pairs; repeated masks accumulate.
    pub fn from_terms<I>(sig: AmbientSignature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, BigRational)>,
    {
        let mut mv = Self::zero(sig);
        for (mask, c) in terms {
            sig.check(mask)?;
            mv.add_term(mask, c);
        }
        Ok(mv)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms<I>(sig: AmbientSignature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, i64)>,
    {
        Self::from_terms(
            sig,
            terms
                .into_iter()
                .map(|(m, c)| (m, BigRational::from_integer(c.into()))),
        )
    }

    #[inline]
    pub fn signature(&self) -> AmbientSignature {
        self.sig
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.sig.n()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, mask: u32) -> BigRational {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the single blade if this is `±1 · blade`.
    pub fn as_unit_blade(&self) -> Option<Blade> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&mask, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some(Blade::new(mask))
        } else if (-c).is_one() {
            Some(Blade::with_sign(mask, true))
        } else {
            None
        }
    }

    fn add_term(&mut self, mask: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mask) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of [`blade_product`].
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut out = Self::zero(self.sig);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                let c = ca * cb;
                let c = if reorder_sign(a, b) < 0 { -c } else { c };
                out.add_term(a ^ b, c);
            }
        }
        Ok(out)
    }

    /// Commutator `xy - yx`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        // Blade pairs either commute (contributing 0) or anticommute
        // (contributing 2ab), so the commutator never needs both products.
        let two = BigRational::from_integer(BigInt::from(2));
        let mut out = Self::zero(self.sig);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                if !blades_anticommute(a, b) {
                    continue;
                }
                let c = ca * cb * &two;
                let c = if reorder_sign(a, b) < 0 { -c } else { c };
                out.add_term(a ^ b, c);
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero(self.sig);
        }
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// Splits by grade (popcount of the mask).
    pub fn grade_parts(&self) -> BTreeMap<u32, Multivector> {
        let mut parts: BTreeMap<u32, Multivector> = BTreeMap::new();
        for (&m, c) in &self.terms {
            parts
                .entry(m.count_ones())
                .or_insert_with(|| Multivector::zero(self.sig))
                .terms
                .insert(m, c.clone());
        }
        parts
    }

    /// Parses the textual form produced by `Display`, e.g. `"2*v1v3 - v1v2v3 + 1/2"`.
    pub fn parse(sig: AmbientSignature, input: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: input.to_owned(),
            reason: reason.to_owned(),
        };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        if compact == "0" {
            return Ok(Self::zero(sig));
        }
        let mut mv = Self::zero(sig);
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if first => (false, rest),
                _ => return Err(err("expected '+' or '-' between terms")),
            };
            first = false;
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let (term, tail) = body.split_at(end);
            rest = tail;
            let (coef, blade) = parse_term(sig, term).map_err(|r| err(&r))?;
            let coef = if negative { -coef } else { coef };
            let coef = if blade.is_negative() { -coef } else { coef };
            mv.add_term(blade.mask, coef);
        }
        Ok(mv)
    }
}

fn parse_term(
    sig: AmbientSignature,
    term: &str,
) -> std::result::Result<(BigRational, Blade), String> {
    if term.is_empty() {
        return Err("empty term".into());
    }
    let (coef_str, word_str) = match term.find('v') {
        Some(pos) => (&term[..pos], &term[pos..]),
        None => (term, ""),
    };
    let coef_str = coef_str.strip_suffix('*').unwrap_or(coef_str);
    let coef = if coef_str.is_empty() {
        if word_str.is_empty() {
            return Err("empty term".into());
        }
        BigRational::one()
    } else {
        parse_rational(coef_str)?
    };
    let blade = if word_str.is_empty() {
        Blade::ONE
    } else {
        let word = word_str
            .split('v')
            .skip(1)
            .map(|d| {
                d.parse::<usize>()
                    .map_err(|_| format!("bad generator index {d:?}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if word_str.split('v').next() != Some("") {
            return Err("malformed blade".into());
        }
        Blade::from_word(sig, &word).map_err(|e| e.to_string())?
    };
    Ok((coef, blade))
}

fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let bad = || format!("bad coefficient {s:?}");
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, mask: u32) -> fmt::Result {
    for i in mask_indices(mask) {
        write!(f, "v{i}")?;
    }
    Ok(())
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            f.write_str("-")?;
        }
        if self.mask == 0 {
            f.write_str("1")
        } else {
            write_word(f, self.mask)
        }
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (&mask, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mask == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_word(f, mask)?;
            }
        }
        Ok(())
    }
}

impl<'a> Mul<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    /// Panics if the ambient dimensions differ; use [`Multivector::product`]
    /// to get an error instead.
    fn mul(self, rhs: &'a Multivector) -> Multivector {
        self.product(rhs).expect("ambient dimensions must agree")
    }
}

impl<'a> Add<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn add(self, rhs: &'a Multivector) -> Multivector {
        self.try_add(rhs).expect("ambient dimensions must agree")
    }
}

impl<'a> Sub<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &'a Multivector) -> Multivector {
        self.try_sub(rhs).expect("ambient dimensions must agree")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}
