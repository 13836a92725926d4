//! Truth tables over the Boolean hypercube.
//!
//! A function of `n` variables is stored as `2^n` bits packed into `u64`
//! words. Bit `i` is the value at the point whose index is `i`, where
//! variable `x1` is the least significant index bit. Variables are numbered
//! from zero in the API and printed from one (`x1`, `x2`, ...).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

pub const MAX_ARITY: usize = 20;

/// Word masks of the points where variable `i < 6` is set.
const VAR_MASK: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

fn check_arity(arity: usize) -> Result<()> {
    if arity > MAX_ARITY {
        Err(Error::ArityTooLarge(arity))
    } else {
        Ok(())
    }
}

fn word_count(arity: usize) -> usize {
    if arity <= 6 {
        1
    } else {
        1 << (arity - 6)
    }
}

fn tail_mask(arity: usize) -> u64 {
    if arity >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << arity)) - 1
    }
}

/// A vertex of the hypercube `B^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    arity: u8,
    index: u32,
}

impl Point {
    pub fn new(arity: usize, index: u64) -> Result<Self> {
        check_arity(arity)?;
        if index >= 1u64 << arity {
            return Err(Error::PointOutOfRange { index, arity });
        }
        Ok(Self {
            arity: arity as u8,
            index: index as u32,
        })
    }

    pub(crate) fn new_unchecked(arity: usize, index: usize) -> Self {
        debug_assert!(arity <= MAX_ARITY && index < 1 << arity);
        Self {
            arity: arity as u8,
            index: index as u32,
        }
    }

    /// Builds a point from its coordinates `(x1, ..., xn)`; every entry must be 0 or 1.
    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        check_arity(coords.len())?;
        let mut index = 0u32;
        for (j, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => index |= 1 << j,
                _ => {
                    return Err(Error::OutOfRange(format!(
                        "coordinate {} of a point must be 0 or 1, got {c}",
                        j + 1
                    )))
                }
            }
        }
        Ok(Self {
            arity: coords.len() as u8,
            index,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub fn bit(&self, var: usize) -> bool {
        (self.index >> var) & 1 == 1
    }

    pub fn coords(&self) -> Vec<u8> {
        (0..self.arity()).map(|j| self.bit(j) as u8).collect()
    }

    pub fn weight(&self) -> u32 {
        self.index.count_ones()
    }

    /// The point with every coordinate flipped.
    pub fn complement(&self) -> Self {
        let mask = ((1u64 << self.arity) - 1) as u32;
        Self {
            arity: self.arity,
            index: !self.index & mask,
        }
    }

    /// Coordinatewise order: `self` is below `other` when every 1 of `self` is a 1 of `other`.
    pub fn is_below(&self, other: &Point) -> bool {
        self.arity == other.arity && self.index & !other.index == 0
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for j in 0..self.arity() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.bit(j) as u8)?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coords = Vec::<u8>::deserialize(deserializer)?;
        Point::from_coords(&coords).map_err(serde::de::Error::custom)
    }
}

/// Variables fixed to constants, kept sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialAssignment {
    arity: usize,
    bindings: Vec<(usize, bool)>,
}

impl PartialAssignment {
    pub fn new(arity: usize, bindings: impl IntoIterator<Item = (usize, bool)>) -> Result<Self> {
        check_arity(arity)?;
        let mut bindings: Vec<(usize, bool)> = bindings.into_iter().collect();
        bindings.sort_by_key(|&(var, _)| var);
        for (k, &(var, _)) in bindings.iter().enumerate() {
            if var >= arity {
                return Err(Error::VariableOutOfRange { var, arity });
            }
            if k > 0 && bindings[k - 1].0 == var {
                return Err(Error::DuplicateBinding(var));
            }
        }
        Ok(Self { arity, bindings })
    }

    pub fn empty(arity: usize) -> Self {
        Self {
            arity,
            bindings: Vec::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn bindings(&self) -> &[(usize, bool)] {
        &self.bindings
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    /// Variables left free, ascending; they become `x1, x2, ...` of the restriction.
    pub fn free_variables(&self) -> Vec<usize> {
        let bound = self.bound_mask();
        (0..self.arity).filter(|v| bound >> v & 1 == 0).collect()
    }

    pub(crate) fn bound_mask(&self) -> usize {
        self.bindings.iter().fold(0, |m, &(v, _)| m | 1 << v)
    }

    pub(crate) fn value_mask(&self) -> usize {
        self.bindings
            .iter()
            .filter(|&&(_, b)| b)
            .fold(0, |m, &(v, _)| m | 1 << v)
    }
}

impl fmt::Display for PartialAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bindings.is_empty() {
            return f.write_str("{}");
        }
        for (k, &(var, value)) in self.bindings.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{}={}", var + 1, value as u8)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct AssignmentRepr {
    arity: usize,
    /// One-based variable, value.
    bindings: Vec<(usize, u8)>,
}

impl Serialize for PartialAssignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        AssignmentRepr {
            arity: self.arity,
            bindings: self
                .bindings
                .iter()
                .map(|&(v, b)| (v + 1, b as u8))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PartialAssignment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = AssignmentRepr::deserialize(deserializer)?;
        let mut bindings = Vec::with_capacity(repr.bindings.len());
        for (v, b) in repr.bindings {
            if v == 0 || b > 1 {
                return Err(serde::de::Error::custom(
                    "bindings are (x index from 1, bit)",
                ));
            }
            bindings.push((v - 1, b == 1));
        }
        PartialAssignment::new(repr.arity, bindings).map_err(serde::de::Error::custom)
    }
}

/// A permutation of variable positions.
///
/// Applied to a function, `f.permute_variables(p)` is
/// `g(x1, ..., xn) = f(x_p(1), ..., x_p(n))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(n));
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Transposition of `a` and `b` on `n` positions.
    pub fn swap(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        if a >= n || b >= n {
            return Err(Error::NotAPermutation(n));
        }
        images.swap(a, b);
        Ok(Self(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, j: usize) -> usize {
        self.0[j]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(j, &i)| i == j)
    }

    /// Composition matching the action on functions:
    /// `f.permute(p).permute(q) == f.permute(&p.then(&q))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&j| other.0[j]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (j, &i) in self.0.iter().enumerate() {
            inv[i] = j;
        }
        Permutation(inv)
    }
}

/// Serialized as one-based images.
impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|i| i + 1))
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        if images.contains(&0) {
            return Err(serde::de::Error::custom("permutation images start at 1"));
        }
        Permutation::new(images.into_iter().map(|i| i - 1).collect())
            .map_err(serde::de::Error::custom)
    }
}

/// Complete truth table of a Boolean function of at most [`MAX_ARITY`] variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: u8,
    words: SmallVec<[u64; 1]>,
}

impl TruthTable {
    pub fn constant(arity: usize, value: bool) -> Result<Self> {
        check_arity(arity)?;
        Ok(Self::constant_unchecked(arity, value))
    }

    pub(crate) fn constant_unchecked(arity: usize, value: bool) -> Self {
        let fill = if value { u64::MAX } else { 0 };
        let mut t = Self {
            arity: arity as u8,
            words: smallvec![fill; word_count(arity)],
        };
        t.mask_tail();
        t
    }

    /// The projection `x_{var+1}`.
    pub fn variable(arity: usize, var: usize) -> Result<Self> {
        check_arity(arity)?;
        if var >= arity {
            return Err(Error::VariableOutOfRange { var, arity });
        }
        Ok(Self::from_fn_unchecked(arity, |i| i >> var & 1 == 1))
    }

    pub fn from_fn(arity: usize, f: impl FnMut(usize) -> bool) -> Result<Self> {
        check_arity(arity)?;
        Ok(Self::from_fn_unchecked(arity, f))
    }

    pub(crate) fn from_fn_unchecked(arity: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut words: SmallVec<[u64; 1]> = smallvec![0; word_count(arity)];
        for i in 0..1usize << arity {
            if f(i) {
                words[i >> 6] |= 1 << (i & 63);
            }
        }
        Self {
            arity: arity as u8,
            words,
        }
    }

    /// Builds a table of arity `<= 6` from the low `2^arity` bits of `bits`.
    pub fn from_u64(arity: usize, bits: u64) -> Result<Self> {
        if arity > 6 {
            return Err(Error::TooManyVariables {
                what: "u64 truth table",
                count: arity,
                limit: 6,
            });
        }
        if bits & !tail_mask(arity) != 0 {
            return Err(Error::InvalidTable {
                text: format!("{bits:#x}"),
                reason: format!("value has bits beyond 2^{arity}"),
            });
        }
        Ok(Self {
            arity: arity as u8,
            words: smallvec![bits],
        })
    }

    /// The table as an integer when it fits in one word (arity `<= 6`).
    pub fn as_u64(&self) -> Option<u64> {
        (self.arity <= 6).then(|| self.words[0])
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    /// Number of points, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.arity
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        (self.words[index >> 6] >> (index & 63)) & 1 == 1
    }

    pub fn evaluate(&self, p: &Point) -> Result<bool> {
        if p.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: p.arity(),
            });
        }
        Ok(self.get(p.index()))
    }

    /// Copy of the table with the value at `index` inverted.
    pub fn with_flipped(&self, index: usize) -> Self {
        let mut t = self.clone();
        t.words[index >> 6] ^= 1 << (index & 63);
        t
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_one(&self) -> bool {
        self.words.iter().all(|&w| w == tail_mask(self.arity()))
    }

    /// `Some(value)` when the function is constant.
    pub fn constant_value(&self) -> Option<bool> {
        if self.is_zero() {
            Some(false)
        } else if self.is_one() {
            Some(true)
        } else {
            None
        }
    }

    /// Indices of the true points, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    /// Indices of the false points, ascending.
    pub fn zeros(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| !self.get(i))
    }

    fn mask_tail(&mut self) {
        let m = tail_mask(self.arity());
        if let Some(w) = self.words.last_mut() {
            *w &= m;
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(
            self.arity, other.arity,
            "arity mismatch in bitwise operation"
        );
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(&a, &b)| op(a, b))
            .collect();
        Self {
            arity: self.arity,
            words,
        }
    }

    pub fn not(&self) -> Self {
        let mut t = Self {
            arity: self.arity,
            words: self.words.iter().map(|w| !w).collect(),
        };
        t.mask_tail();
        t
    }

    /// Pointwise conjunction. Panics if the arities differ.
    pub fn and(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    /// Pointwise disjunction. Panics if the arities differ.
    pub fn or(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    /// Pointwise exclusive or. Panics if the arities differ.
    pub fn xor(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a ^ b)
    }

    /// Pointwise `self <= other`.
    pub fn implies(&self, other: &Self) -> bool {
        self.arity == other.arity
            && self
                .words
                .iter()
                .zip(other.words.iter())
                .all(|(&a, &b)| a & !b == 0)
    }

    /// `g(x) = f(x xor e_var)`, same arity.
    pub fn flip_var(&self, var: usize) -> Self {
        debug_assert!(var < self.arity());
        let mut t = self.clone();
        if var < 6 {
            let s = 1u32 << var;
            let m = VAR_MASK[var];
            for w in t.words.iter_mut() {
                *w = ((*w & m) >> s) | ((*w << s) & m);
            }
        } else {
            let stride = 1usize << (var - 6);
            for k in 0..t.words.len() {
                if k & stride == 0 {
                    t.words.swap(k, k | stride);
                }
            }
        }
        t
    }

    /// `g(x) = f(x with x_var = value)`, same arity; `x_var` becomes irrelevant.
    pub fn cofactor(&self, var: usize, value: bool) -> Self {
        debug_assert!(var < self.arity());
        let mut t = self.clone();
        if var < 6 {
            let s = 1u32 << var;
            let m = VAR_MASK[var];
            for w in t.words.iter_mut() {
                *w = if value {
                    let hi = *w & m;
                    hi | (hi >> s)
                } else {
                    let lo = *w & !m;
                    lo | (lo << s)
                };
            }
            t.mask_tail();
        } else {
            let stride = 1usize << (var - 6);
            for k in 0..t.words.len() {
                let src = if value { k | stride } else { k & !stride };
                t.words[k] = self.words[src];
            }
        }
        t
    }

    /// Table of the projection `x_var` at this arity.
    pub(crate) fn var_table(&self, var: usize) -> Self {
        Self::variable(self.arity(), var).expect("variable within arity")
    }

    pub fn depends_on(&self, var: usize) -> bool {
        var < self.arity() && self.flip_var(var) != *self
    }

    /// Relevant variables, ascending (zero-based).
    pub fn relevant_variables(&self) -> Vec<usize> {
        (0..self.arity()).filter(|&v| self.depends_on(v)).collect()
    }

    /// Monotone non-decreasing in `var`.
    pub fn is_positive_in(&self, var: usize) -> bool {
        // a one with x_var = 0 must stay a one after raising x_var
        let lifted = self.flip_var(var);
        let low = self.var_table(var).not();
        self.and(&low).implies(&lifted)
    }

    pub fn is_negative_in(&self, var: usize) -> bool {
        let lifted = self.flip_var(var);
        let high = self.var_table(var);
        self.and(&high).implies(&lifted)
    }

    /// Restriction by a partial assignment; free variables keep their relative order.
    pub fn restrict(&self, a: &PartialAssignment) -> Result<Self> {
        if a.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: a.arity(),
            });
        }
        Ok(self.restrict_unchecked(a.bound_mask(), a.value_mask()))
    }

    /// Restriction given as a mask of bound variables and their values.
    pub(crate) fn restrict_unchecked(&self, bound: usize, values: usize) -> Self {
        let n = self.arity();
        let free: SmallVec<[usize; 20]> = (0..n).filter(|v| bound >> v & 1 == 0).collect();
        let base = values & bound;
        Self::from_fn_unchecked(free.len(), |y| {
            let mut x = base;
            for (j, &v) in free.iter().enumerate() {
                x |= (y >> j & 1) << v;
            }
            self.get(x)
        })
    }

    /// `g(x) = f(x with the coordinates in vars flipped)`.
    pub fn negate_variables(&self, vars: &[usize]) -> Result<Self> {
        let mut t = self.clone();
        let mut seen = 0usize;
        for &v in vars {
            if v >= self.arity() {
                return Err(Error::VariableOutOfRange {
                    var: v,
                    arity: self.arity(),
                });
            }
            // a repeated index cancels, matching the pointwise definition over a set
            if seen >> v & 1 == 0 {
                t = t.flip_var(v);
            }
            seen |= 1 << v;
        }
        Ok(t)
    }

    pub(crate) fn negate_mask(&self, mask: usize) -> Self {
        let mut t = self.clone();
        for v in 0..self.arity() {
            if mask >> v & 1 == 1 {
                t = t.flip_var(v);
            }
        }
        t
    }

    /// `g(x1, ..., xn) = f(x_p(1), ..., x_p(n))`.
    pub fn permute_variables(&self, p: &Permutation) -> Result<Self> {
        if p.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: p.len(),
            });
        }
        Ok(self.permute_unchecked(p.images()))
    }

    pub(crate) fn permute_unchecked(&self, images: &[usize]) -> Self {
        Self::from_fn_unchecked(self.arity(), |x| {
            let mut y = 0;
            for (j, &i) in images.iter().enumerate() {
                y |= (x >> i & 1) << j;
            }
            self.get(y)
        })
    }

    /// Drops irrelevant variables; returns the compacted table and the original
    /// index of each surviving variable.
    pub fn compact(&self) -> (Self, Vec<usize>) {
        let relevant = self.relevant_variables();
        if relevant.len() == self.arity() {
            return (self.clone(), relevant);
        }
        let bound = ((1usize << self.arity()) - 1) & !relevant.iter().fold(0, |m, v| m | 1 << v);
        (self.restrict_unchecked(bound, 0), relevant)
    }

    /// Embeds the table as a function of `arity >= self.arity()` variables,
    /// sending variable `j` to `positions[j]`; the remaining variables are irrelevant.
    pub fn embed(&self, arity: usize, positions: &[usize]) -> Result<Self> {
        check_arity(arity)?;
        if positions.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: positions.len(),
            });
        }
        for &p in positions {
            if p >= arity {
                return Err(Error::VariableOutOfRange { var: p, arity });
            }
        }
        if positions
            .iter()
            .fold(0usize, |m, &p| m | 1 << p)
            .count_ones() as usize
            != positions.len()
        {
            return Err(Error::NotAPermutation(positions.len()));
        }
        Ok(Self::from_fn_unchecked(arity, |x| {
            let mut y = 0;
            for (j, &p) in positions.iter().enumerate() {
                y |= (x >> p & 1) << j;
            }
            self.get(y)
        }))
    }

    fn hex_digits(&self) -> usize {
        (self.len() / 4).max(1)
    }

    /// Hexadecimal digits, most significant first.
    pub fn to_hex(&self) -> String {
        let digits = self.hex_digits();
        let mut s = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let bit = d * 4;
            let nibble = (self.words[bit >> 6] >> (bit & 63)) & 0xF;
            s.push(
                char::from_digit(nibble as u32, 16)
                    .unwrap()
                    .to_ascii_uppercase(),
            );
        }
        s
    }
}

impl Ord for TruthTable {
    /// Arity first, then the table read as a `2^n`-bit unsigned integer.
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity
            .cmp(&other.arity)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for TruthTable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.arity, self.to_hex())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TruthTable {
    type Err = Error;

    /// Parses `n:HEX`.
    fn from_str(text: &str) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidTable {
            text: text.to_string(),
            reason,
        };
        let (arity, hex) = text
            .trim()
            .split_once(':')
            .ok_or_else(|| invalid("expected `n:HEX`".into()))?;
        let arity: usize = arity
            .parse()
            .map_err(|_| invalid(format!("bad arity `{arity}`")))?;
        check_arity(arity)?;
        let mut t = Self::constant_unchecked(arity, false);
        let digits = t.hex_digits();
        if hex.len() != digits {
            return Err(invalid(format!(
                "arity {arity} needs exactly {digits} hex digit(s), got {}",
                hex.len()
            )));
        }
        for (k, c) in hex.chars().rev().enumerate() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| invalid(format!("`{c}` is not a hex digit")))?
                as u64;
            let bit = k * 4;
            t.words[bit >> 6] |= nibble << (bit & 63);
        }
        if t.words[t.words.len() - 1] & !tail_mask(arity) != 0 {
            return Err(invalid(format!("value exceeds 2^{} bits", t.len())));
        }
        Ok(t)
    }
}

impl Serialize for TruthTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TruthTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All `n!` permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}
