//! Dimensions of cohomology of Sp4(Z) with coefficients in `M_lambda`:
//! boundary, Eisenstein, cuspidal, and the per-degree totals.
//!
//! The number `zeta = #Z_{2 m2 + 4}` of weight-`2 m2 + 4` eigenforms with
//! nonvanishing central L-value is unknown in general. Every count that can
//! depend on it is a [`SymbolicCount`], an affine form `constant + coeff*zeta`,
//! and a [`ZkMode`] decides whether it is kept symbolic or substituted.
//! `zeta` only enters when `m1 = 0` and `m2 > 0` is even.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::euler::{chi_h, chi_h_closed};
use crate::exact::Rat;
use crate::weyl::{dot_action, HighestWeight, WeylElement};

/// `constant + zeta_coeff * zeta`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymbolicCount {
    pub constant: Rat,
    pub zeta_coeff: Rat,
}

impl SymbolicCount {
    pub fn new(constant: impl Into<Rat>, zeta_coeff: impl Into<Rat>) -> Self {
        SymbolicCount {
            constant: constant.into(),
            zeta_coeff: zeta_coeff.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(value: impl Into<Rat>) -> Self {
        Self::new(value, Rat::zero())
    }

    /// `coeff * zeta`.
    pub fn zeta(coeff: impl Into<Rat>) -> Self {
        Self::new(Rat::zero(), coeff)
    }

    pub fn is_resolved(&self) -> bool {
        self.zeta_coeff.is_zero()
    }

    /// The constant term when no `zeta` remains.
    pub fn resolved(&self) -> Option<&Rat> {
        self.is_resolved().then_some(&self.constant)
    }

    /// Replaces `zeta` by an affine form.
    pub fn substitute(&self, zeta: &SymbolicCount) -> SymbolicCount {
        SymbolicCount::constant(self.constant.clone()) + zeta.clone() * &self.zeta_coeff
    }

    pub fn eval(&self, zeta: u64) -> Rat {
        &self.constant + &self.zeta_coeff * Rat::from(zeta as i64)
    }
}

impl From<i64> for SymbolicCount {
    fn from(value: i64) -> Self {
        SymbolicCount::constant(value)
    }
}

impl From<Rat> for SymbolicCount {
    fn from(value: Rat) -> Self {
        SymbolicCount::constant(value)
    }
}

impl Add for SymbolicCount {
    type Output = SymbolicCount;
    fn add(self, rhs: SymbolicCount) -> SymbolicCount {
        SymbolicCount {
            constant: self.constant + rhs.constant,
            zeta_coeff: self.zeta_coeff + rhs.zeta_coeff,
        }
    }
}

impl Sub for SymbolicCount {
    type Output = SymbolicCount;
    fn sub(self, rhs: SymbolicCount) -> SymbolicCount {
        self + (-rhs)
    }
}

impl Neg for SymbolicCount {
    type Output = SymbolicCount;
    fn neg(self) -> SymbolicCount {
        SymbolicCount {
            constant: -self.constant,
            zeta_coeff: -self.zeta_coeff,
        }
    }
}

impl Mul<&Rat> for SymbolicCount {
    type Output = SymbolicCount;
    fn mul(self, rhs: &Rat) -> SymbolicCount {
        SymbolicCount {
            constant: self.constant * rhs,
            zeta_coeff: self.zeta_coeff * rhs,
        }
    }
}

impl std::iter::Sum for SymbolicCount {
    fn sum<I: Iterator<Item = SymbolicCount>>(iter: I) -> Self {
        iter.fold(SymbolicCount::zero(), |a, b| a + b)
    }
}

/// Renders as `2ζ-4`, `ζ`, `-1`, `0`.
impl fmt::Display for SymbolicCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zeta_coeff.is_zero() {
            return write!(f, "{}", self.constant);
        }
        let one = Rat::one();
        if self.zeta_coeff == one {
            write!(f, "ζ")?;
        } else if self.zeta_coeff == -one {
            write!(f, "-ζ")?;
        } else {
            write!(f, "{}ζ", self.zeta_coeff)?;
        }
        if self.constant.is_zero() {
            Ok(())
        } else if self.constant.is_negative() {
            write!(f, "{}", self.constant)
        } else {
            write!(f, "+{}", self.constant)
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CountRepr {
    Int(i64),
    Affine {
        #[serde(rename = "const")]
        constant: Rat,
        zeta: Rat,
    },
}

/// Integers serialize as JSON numbers, anything else as `{"const", "zeta"}`.
impl Serialize for SymbolicCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self.resolved().and_then(Rat::to_i64) {
            Some(v) => CountRepr::Int(v),
            None => CountRepr::Affine {
                constant: self.constant.clone(),
                zeta: self.zeta_coeff.clone(),
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymbolicCount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(match CountRepr::deserialize(deserializer)? {
            CountRepr::Int(v) => SymbolicCount::constant(v),
            CountRepr::Affine { constant, zeta } => SymbolicCount::new(constant, zeta),
        })
    }
}

/// Policy for `zeta = #Z_k`, `k = 2 m2 + 4`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum ZkMode {
    #[default]
    Symbolic,
    /// `zeta = dim S_k`: every central L-value is taken to be nonzero.
    AssumeNonvanishing,
    /// Values keyed by the weight `k`; weights absent from the map stay symbolic.
    Explicit(BTreeMap<u64, u64>),
}

/// Dimension of level-one cusp forms of weight `k`; 0 for odd `k` and `k < 4`.
pub fn dim_cusp_forms(k: i64) -> u64 {
    if k < 4 || k % 2 != 0 {
        return 0;
    }
    let base = (k / 12) as u64;
    if k % 12 == 2 {
        base - 1
    } else {
        base
    }
}

fn dim_s(k: i64) -> SymbolicCount {
    SymbolicCount::constant(dim_cusp_forms(k) as i64)
}

fn zeta_weight(m2: u64) -> u64 {
    2 * m2 + 4
}

/// `#Z_{2 m2 + 4}` under `mode`.
pub fn zk(m2: u64, mode: &ZkMode) -> Result<SymbolicCount> {
    let weight = zeta_weight(m2);
    let max = dim_cusp_forms(weight as i64);
    match mode {
        ZkMode::Symbolic => Ok(SymbolicCount::zeta(1)),
        ZkMode::AssumeNonvanishing => Ok(SymbolicCount::constant(max as i64)),
        ZkMode::Explicit(values) => match values.get(&weight) {
            None => Ok(SymbolicCount::zeta(1)),
            Some(&value) if value <= max => Ok(SymbolicCount::constant(value as i64)),
            Some(&value) => Err(Error::ZetaOutOfRange { weight, value, max }),
        },
    }
}

fn apply_mode(count: SymbolicCount, weight: HighestWeight, mode: &ZkMode) -> Result<SymbolicCount> {
    if count.is_resolved() {
        return Ok(count);
    }
    Ok(count.substitute(&zk(weight.m2, mode)?))
}

/// Entries `q = 0..=5`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeVector(pub [SymbolicCount; 6]);

impl DegreeVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn get(&self, q: usize) -> &SymbolicCount {
        &self.0[q]
    }

    pub fn total(&self) -> SymbolicCount {
        self.0.iter().cloned().sum()
    }

    pub fn alternating_sum(&self) -> SymbolicCount {
        self.0
            .iter()
            .enumerate()
            .map(|(q, c)| if q % 2 == 0 { c.clone() } else { -c.clone() })
            .sum()
    }

    fn try_map(self, mut f: impl FnMut(SymbolicCount) -> Result<SymbolicCount>) -> Result<Self> {
        let [a, b, c, d, e, g] = self.0;
        Ok(DegreeVector([f(a)?, f(b)?, f(c)?, f(d)?, f(e)?, f(g)?]))
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (q, c) in self.0.iter().enumerate() {
            if q > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

macro_rules! degrees {
    ($($q:literal => $v:expr),* $(,)?) => {{
        let mut v = DegreeVector::zero();
        $( v.0[$q] = $v; )*
        v
    }};
}

/// The six parity regimes for even `m1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    Trivial,
    ZeroEven,
    EvenZero,
    EvenEven,
    ZeroOdd,
    EvenOdd,
}

/// `None` for odd `m1`, where every count vanishes.
pub fn regime(weight: HighestWeight) -> Option<Regime> {
    let (m1, m2) = (weight.m1, weight.m2);
    if m1 % 2 == 1 {
        return None;
    }
    Some(match (m1 == 0, m2 == 0, m2 % 2 == 0) {
        (true, true, _) => Regime::Trivial,
        (true, false, true) => Regime::ZeroEven,
        (false, true, _) => Regime::EvenZero,
        (false, false, true) => Regime::EvenEven,
        (true, false, false) => Regime::ZeroOdd,
        (false, false, false) => Regime::EvenOdd,
    })
}

fn sym_h_eis_by_degree(weight: HighestWeight) -> DegreeVector {
    let (m1, m2) = (weight.m1 as i64, weight.m2 as i64);
    let one = || SymbolicCount::constant(1);
    match regime(weight) {
        None => DegreeVector::zero(),
        Some(Regime::Trivial) => degrees! { 0 => one(), 2 => one() },
        Some(Regime::ZeroEven) => degrees! {
            2 => SymbolicCount::zeta(1),
            3 => dim_s(2 * m2 + 4) - SymbolicCount::zeta(1),
            4 => dim_s(m2 + 2) * &Rat::from(2),
        },
        Some(Regime::EvenZero) => degrees! {
            3 => one() + dim_s(m1 + 4),
            4 => dim_s(m1 + 2),
        },
        Some(Regime::EvenEven) => degrees! {
            3 => dim_s(m1 + 2 * m2 + 4),
            4 => one() + dim_s(m2 + 2) * &Rat::from(2) + dim_s(m1 + 2),
        },
        Some(Regime::ZeroOdd) => degrees! {
            3 => one() + dim_s(m2 + 3) * &Rat::from(2) + dim_s(2 * m2 + 4),
        },
        Some(Regime::EvenOdd) => degrees! {
            3 => dim_s(m1 + m2 + 3) * &Rat::from(2) + dim_s(m1 + 2 * m2 + 4),
            4 => dim_s(m1 + 2),
        },
    }
}

/// Eisenstein cohomology dimensions per degree.
pub fn h_eis_by_degree(weight: HighestWeight, mode: &ZkMode) -> Result<DegreeVector> {
    sym_h_eis_by_degree(weight).try_map(|c| apply_mode(c, weight, mode))
}

/// Inner cohomology of the Levi of the first maximal parabolic, twice a
/// cusp-form dimension.
fn levi1_inner(w: usize, weight: HighestWeight) -> SymbolicCount {
    let p = dot_action(WeylElement::new(w), weight);
    dim_s(p.b + 2) * &Rat::from(2)
}

/// Inner cohomology of the Levi of the second maximal parabolic.
fn levi2_inner(w: usize, weight: HighestWeight) -> SymbolicCount {
    let p = dot_action(WeylElement::new(w), weight);
    dim_s(p.a - p.b + 2)
}

/// Dimensions of the cohomology of the Borel-Serre boundary.
pub fn boundary_dims(weight: HighestWeight) -> DegreeVector {
    let one = || SymbolicCount::constant(1);
    let l1 = |w| levi1_inner(w, weight);
    let l2 = |w| levi2_inner(w, weight);
    match regime(weight) {
        None => DegreeVector::zero(),
        Some(Regime::Trivial) => degrees! {
            0 => one(),
            2 => one() + l2(2),
            3 => one() + l2(4),
            5 => one(),
        },
        Some(Regime::ZeroEven) => degrees! { 1 => l1(0), 2 => l2(2), 3 => l2(4), 4 => l1(5) },
        Some(Regime::EvenZero) => degrees! {
            1 => l2(0),
            2 => l2(2) + one(),
            3 => l2(4) + one(),
            4 => l2(6),
        },
        Some(Regime::EvenEven) => degrees! {
            1 => one() + l1(0) + l2(0),
            2 => l2(2),
            3 => l2(4),
            4 => one() + l1(5) + l2(6),
        },
        Some(Regime::ZeroOdd) => degrees! {
            2 => one() + l1(1) + l2(2),
            3 => one() + l1(3) + l2(4),
        },
        Some(Regime::EvenOdd) => degrees! {
            1 => l2(0),
            2 => l1(1) + l2(2),
            3 => l1(3) + l2(4),
            4 => l2(6),
        },
    }
}

/// Affine form `k1*K1 + k2*K2 + c + z*Z` in `K1 = m1 div 12`, `K2 = m2 div 12`
/// and `Z = 2 zeta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockAffine {
    pub k1: i64,
    pub k2: i64,
    pub c: i64,
    pub z: i64,
}

impl BlockAffine {
    const fn c(c: i64) -> Self {
        BlockAffine { k1: 0, k2: 0, c, z: 0 }
    }

    /// `2 K1 + 4 K2 + c`.
    const fn s(c: i64) -> Self {
        BlockAffine { k1: 2, k2: 4, c, z: 0 }
    }

    /// `-(2 K1 + 4 K2 + c)`.
    const fn neg_s(c: i64) -> Self {
        BlockAffine { k1: -2, k2: -4, c: -c, z: 0 }
    }

    /// `2 K1 + c`.
    const fn t(c: i64) -> Self {
        BlockAffine { k1: 2, k2: 0, c, z: 0 }
    }


    /// `-4 K2 + c`.
    const fn neg_u(c: i64) -> Self {
        BlockAffine { k1: 0, k2: -4, c, z: 0 }
    }

    /// `Z + c`.
    const fn zc(c: i64) -> Self {
        BlockAffine { k1: 0, k2: 0, c, z: 1 }
    }

    /// `4 K2 + Z + c`.
    const fn uz(c: i64) -> Self {
        BlockAffine { k1: 0, k2: 4, c, z: 1 }
    }

    pub fn eval(&self, k1: u64, k2: u64) -> SymbolicCount {
        SymbolicCount::new(
            self.k1 * k1 as i64 + self.k2 * k2 as i64 + self.c,
            2 * self.z,
        )
    }
}

use BlockAffine as B;

#[rustfmt::skip]
const F1: [[BlockAffine; 6]; 12] = [
    [B::c(-2), B::c(-1), B::c(-1), B::c(-1), B::c(-2), B::c(0)],
    [B::neg_s(1), B::neg_s(0), B::neg_s(0), B::neg_s(1), B::neg_s(2), B::neg_s(0)],
    [B::c(0), B::c(1), B::c(0), B::c(1), B::c(0), B::c(1)],
    [B::neg_s(1), B::neg_s(1), B::neg_s(0), B::neg_s(3), B::neg_s(1), B::neg_s(2)],
    [B::c(-1), B::c(1), B::c(0), B::c(0), B::c(0), B::c(1)],
    [B::neg_s(1), B::neg_s(1), B::neg_s(3), B::neg_s(1), B::neg_s(3), B::neg_s(3)],
    [B::c(-1), B::c(0), B::c(0), B::c(0), B::c(-1), B::c(1)],
    [B::neg_s(2), B::neg_s(3), B::neg_s(1), B::neg_s(4), B::neg_s(3), B::neg_s(3)],
    [B::c(-1), B::c(0), B::c(-1), B::c(0), B::c(-1), B::c(0)],
    [B::neg_s(4), B::neg_s(2), B::neg_s(3), B::neg_s(4), B::neg_s(4), B::neg_s(3)],
    [B::c(0), B::c(2), B::c(1), B::c(1), B::c(1), B::c(2)],
    [B::neg_s(2), B::neg_s(4), B::neg_s(4), B::neg_s(4), B::neg_s(4), B::neg_s(6)],
];

const F2: [BlockAffine; 6] = [B::c(-2), B::c(-1), B::c(-1), B::c(-1), B::c(-2), B::c(0)];

#[rustfmt::skip]
const F3: [BlockAffine; 12] = [
    B::zc(-2), B::neg_u(-1), B::zc(0), B::neg_u(-1), B::zc(-1), B::neg_u(-1),
    B::zc(-1), B::neg_u(-2), B::zc(-1), B::neg_u(-4), B::zc(0), B::neg_u(-2),
];

const fn g1_s_row(lo: i64, mid: i64, hi: i64) -> [BlockAffine; 6] {
    [B::s(lo), B::s(mid), B::s(mid), B::s(mid), B::s(mid), B::s(hi)]
}

const G2: [BlockAffine; 6] = [B::t(-2), B::t(0), B::t(0), B::t(0), B::t(0), B::t(2)];

#[rustfmt::skip]
const G1: [[BlockAffine; 6]; 12] = [
    g1_s_row(-4, -2, 0), G2,
    g1_s_row(0, 2, 4), G2,
    g1_s_row(0, 2, 4), G2,
    g1_s_row(0, 2, 4), G2,
    g1_s_row(0, 2, 4), G2,
    g1_s_row(4, 6, 8), G2,
];

#[rustfmt::skip]
const G3: [BlockAffine; 12] = [
    B::uz(-4), B::c(0), B::uz(0), B::c(0), B::uz(0), B::c(0),
    B::uz(0), B::c(0), B::uz(0), B::c(0), B::uz(4), B::c(0),
];

/// The tables giving `chi_Eis` (first three) and `h_Eis + chi_Eis` (last
/// three) as functions of `m1, m2` mod 12.
#[derive(Clone, Copy, Debug)]
pub struct EisMatrices;

/// Which table and cell served a lookup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BlockCell {
    Both { row: usize, col: usize },
    FirstOnly { col: usize },
    SecondOnly { row: usize },
}

impl EisMatrices {
    pub const F1: &'static [[BlockAffine; 6]; 12] = &F1;
    pub const F2: &'static [BlockAffine; 6] = &F2;
    pub const F3: &'static [BlockAffine; 12] = &F3;
    pub const G1: &'static [[BlockAffine; 6]; 12] = &G1;
    pub const G2: &'static [BlockAffine; 6] = &G2;
    pub const G3: &'static [BlockAffine; 12] = &G3;

    /// Cell addressed by `(m1, m2)` for even `m1` with `(m1, m2) != (0, 0)`.
    pub fn cell(weight: HighestWeight) -> Option<BlockCell> {
        let (m1, m2) = (weight.m1, weight.m2);
        if m1 % 2 == 1 || (m1 == 0 && m2 == 0) {
            return None;
        }
        let row = (m2 % 12) as usize;
        let col = ((m1 % 12) / 2) as usize;
        Some(match (m1 > 0, m2 > 0) {
            (true, true) => BlockCell::Both { row, col },
            (true, false) => BlockCell::FirstOnly { col },
            _ => BlockCell::SecondOnly { row },
        })
    }

    fn lookup(
        weight: HighestWeight,
        both: &[[BlockAffine; 6]; 12],
        first: &[BlockAffine; 6],
        second: &[BlockAffine; 12],
    ) -> Option<SymbolicCount> {
        let entry = match Self::cell(weight)? {
            BlockCell::Both { row, col } => both[row][col],
            BlockCell::FirstOnly { col } => first[col],
            BlockCell::SecondOnly { row } => second[row],
        };
        Some(entry.eval(weight.m1 / 12, weight.m2 / 12))
    }

    pub fn chi_eis_entry(weight: HighestWeight) -> Option<SymbolicCount> {
        Self::lookup(weight, &F1, &F2, &F3)
    }

    pub fn g_entry(weight: HighestWeight) -> Option<SymbolicCount> {
        Self::lookup(weight, &G1, &G2, &G3)
    }
}

fn sym_chi_eis(weight: HighestWeight) -> SymbolicCount {
    if weight.m1 % 2 == 1 {
        return SymbolicCount::zero();
    }
    EisMatrices::chi_eis_entry(weight).unwrap_or_else(|| SymbolicCount::constant(2))
}

/// Euler characteristic of Eisenstein cohomology, read from the mod-12 tables.
pub fn chi_eis(weight: HighestWeight, mode: &ZkMode) -> Result<SymbolicCount> {
    apply_mode(sym_chi_eis(weight), weight, mode)
}

/// The same quantity as [`chi_eis`] from the case-by-case cusp-form formula.
pub fn chi_eis_direct(weight: HighestWeight, mode: &ZkMode) -> Result<SymbolicCount> {
    let (m1, m2) = (weight.m1 as i64, weight.m2 as i64);
    let two = Rat::from(2);
    let one = || SymbolicCount::constant(1);
    let value = match regime(weight) {
        None => SymbolicCount::zero(),
        Some(Regime::Trivial) => SymbolicCount::constant(2),
        Some(Regime::EvenZero) => dim_s(m1 + 2) - one() - dim_s(m1 + 4),
        Some(Regime::ZeroEven) => {
            dim_s(m2 + 2) * &two + SymbolicCount::zeta(2) - dim_s(2 * m2 + 4)
        }
        Some(Regime::EvenEven) => {
            one() + dim_s(m2 + 2) * &two + dim_s(m1 + 2) - dim_s(m1 + 2 * m2 + 4)
        }
        Some(Regime::ZeroOdd) => -one() - dim_s(m2 + 3) * &two - dim_s(2 * m2 + 4),
        Some(Regime::EvenOdd) => {
            dim_s(m1 + 2) - dim_s(m1 + m2 + 3) * &two - dim_s(m1 + 2 * m2 + 4)
        }
    };
    apply_mode(value, weight, mode)
}

/// The same quantity as [`chi_eis`] as the alternating sum of the degrees.
pub fn chi_eis_alternating(weight: HighestWeight, mode: &ZkMode) -> Result<SymbolicCount> {
    Ok(h_eis_by_degree(weight, mode)?.alternating_sum())
}

fn check_nonnegative(count: &SymbolicCount, weight: HighestWeight) -> Result<()> {
    match count.resolved() {
        Some(value) if value.is_negative() => Err(Error::NegativeDimension {
            m1: weight.m1,
            m2: weight.m2,
            value: value.clone(),
        }),
        _ => Ok(()),
    }
}

/// Cuspidal cohomology dimension, concentrated in degree 3. A resolved
/// negative value is an error.
pub fn h_cusp(weight: HighestWeight, mode: &ZkMode) -> Result<SymbolicCount> {
    let count = chi_eis(weight, mode)? - SymbolicCount::constant(chi_h(weight));
    check_nonnegative(&count, weight)?;
    Ok(count)
}

/// `dim H^q(Sp4(Z), M_lambda)` for `q = 0..=5`. Degree 3 adds the cuspidal
/// part to the Eisenstein part; for trivial coefficients that Eisenstein
/// part is 0 even though the boundary has a class in degree 3.
pub fn h_by_degree(weight: HighestWeight, mode: &ZkMode) -> Result<DegreeVector> {
    let mut degrees = h_eis_by_degree(weight, mode)?;
    let cusp = h_cusp(weight, mode)?;
    degrees.0[3] = degrees.0[3].clone() + cusp;
    for c in &degrees.0 {
        check_nonnegative(c, weight)?;
    }
    Ok(degrees)
}

/// Total dimension of `H^*(Sp4(Z), M_lambda)`.
pub fn h_total(weight: HighestWeight, mode: &ZkMode) -> Result<SymbolicCount> {
    Ok(h_by_degree(weight, mode)?.total())
}

/// `h_cusp` plus the per-regime Eisenstein total.
pub fn h_total_cases(weight: HighestWeight, mode: &ZkMode) -> Result<SymbolicCount> {
    let (m1, m2) = (weight.m1 as i64, weight.m2 as i64);
    let two = Rat::from(2);
    let one = || SymbolicCount::constant(1);
    let eis = match regime(weight) {
        None => SymbolicCount::zero(),
        Some(Regime::Trivial) => SymbolicCount::constant(2),
        Some(Regime::ZeroEven) => dim_s(m2 + 2) * &two + dim_s(2 * m2 + 4),
        Some(Regime::EvenZero) => dim_s(m1 + 2) + one() + dim_s(m1 + 4),
        Some(Regime::EvenEven) => {
            one() + dim_s(m2 + 2) * &two + dim_s(m1 + 2) + dim_s(m1 + 2 * m2 + 4)
        }
        Some(Regime::ZeroOdd) => one() + dim_s(m2 + 3) * &two + dim_s(2 * m2 + 4),
        Some(Regime::EvenOdd) => {
            dim_s(m1 + 2) + dim_s(m1 + m2 + 3) * &two + dim_s(m1 + 2 * m2 + 4)
        }
    };
    Ok(h_cusp(weight, mode)? + apply_mode(eis, weight, mode)?)
}

/// `h_Eis + chi_Eis`, equal to `2 (h^0 + h^2 + h^4)`, read from the mod-12
/// tables. Trivial coefficients give 4.
pub fn g_value(weight: HighestWeight, mode: &ZkMode) -> Result<SymbolicCount> {
    let value = if weight.m1 % 2 == 1 {
        SymbolicCount::zero()
    } else {
        EisMatrices::g_entry(weight).unwrap_or_else(|| SymbolicCount::constant(4))
    };
    apply_mode(value, weight, mode)
}

/// Total dimension as `g_value - chi_h`, with `chi_h` in closed form.
pub fn h_total_closed(weight: HighestWeight, mode: &ZkMode) -> Result<SymbolicCount> {
    Ok(g_value(weight, mode)? - SymbolicCount::constant(chi_h_closed(weight)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(m1: u64, m2: u64) -> HighestWeight {
        HighestWeight::new(m1, m2)
    }

    fn ints(v: &[i64]) -> DegreeVector {
        let mut out = DegreeVector::zero();
        for (q, &x) in v.iter().enumerate() {
            out.0[q] = SymbolicCount::constant(x);
        }
        out
    }

    const SYM: ZkMode = ZkMode::Symbolic;

    #[test]
    fn cusp_form_dimensions() {
        let dims: Vec<u64> = [12, 14, 3, 2, 4, 24, 26, 36, -6].iter().map(|&k| dim_cusp_forms(k)).collect();
        assert_eq!(dims, vec![1, 0, 0, 0, 0, 2, 1, 3, 0]);
    }

    /// Independent count: monomials `E4^a E6^b` of weight `k` span `M_k`, and
    /// `S_k` has codimension one in it for `k >= 4`.
    #[test]
    fn cusp_form_dimensions_match_monomial_count() {
        for k in 4..400i64 {
            let modular = if k % 2 == 1 {
                0
            } else {
                (0..=k / 4).filter(|a| (k - 4 * a) % 6 == 0).count() as i64
            };
            let expected = (modular - 1).max(0) as u64;
            assert_eq!(dim_cusp_forms(k), expected, "k = {k}");
        }
    }

    #[test]
    fn zk_modes() {
        assert_eq!(zk(2, &ZkMode::AssumeNonvanishing).unwrap(), SymbolicCount::constant(0));
        assert_eq!(zk(10, &SYM).unwrap(), SymbolicCount::zeta(1));
        assert_eq!(zk(10, &ZkMode::AssumeNonvanishing).unwrap(), SymbolicCount::constant(2));
        let explicit = ZkMode::Explicit(BTreeMap::from([(24, 1)]));
        assert_eq!(zk(10, &explicit).unwrap(), SymbolicCount::constant(1));
        assert_eq!(zk(12, &explicit).unwrap(), SymbolicCount::zeta(1));
        let too_big = ZkMode::Explicit(BTreeMap::from([(24, 3)]));
        assert!(matches!(
            zk(10, &too_big),
            Err(Error::ZetaOutOfRange { weight: 24, value: 3, max: 2 })
        ));
    }

    #[test]
    fn eisenstein_examples() {
        assert_eq!(h_eis_by_degree(w(0, 0), &SYM).unwrap(), ints(&[1, 0, 1, 0, 0, 0]));
        let e = h_eis_by_degree(w(10, 0), &SYM).unwrap();
        assert_eq!(e, ints(&[0, 0, 0, 1, 1, 0]));
        let e = h_eis_by_degree(w(0, 9), &SYM).unwrap();
        assert_eq!(e, ints(&[0, 0, 0, 1 + 2 + 1, 0, 0]));
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(boundary_dims(w(0, 0)), ints(&[1, 0, 1, 1, 0, 1]));
        assert_eq!(boundary_dims(w(10, 0)), ints(&[0, 1, 1, 1, 1, 0]));
        assert_eq!(boundary_dims(w(0, 3)), ints(&[0, 0, 1, 1, 0, 0]));
        assert_eq!(boundary_dims(w(3, 3)), DegreeVector::zero());
    }

    #[test]
    fn chi_eis_examples() {
        assert_eq!(chi_eis(w(0, 0), &SYM).unwrap(), SymbolicCount::constant(2));
        assert_eq!(chi_eis(w(18, 10), &SYM).unwrap(), SymbolicCount::constant(1));
        assert_eq!(chi_eis(w(0, 10), &SYM).unwrap(), SymbolicCount::zeta(2));
        assert_eq!(chi_eis(w(0, 4), &SYM).unwrap(), SymbolicCount::new(-1, 2));
    }

    #[test]
    fn cusp_examples() {
        assert_eq!(h_cusp(w(18, 10), &SYM).unwrap(), SymbolicCount::constant(50));
        assert_eq!(h_cusp(w(0, 0), &SYM).unwrap(), SymbolicCount::zero());
        assert_eq!(h_cusp(w(12, 4), &SYM).unwrap(), SymbolicCount::constant(4));
        assert_eq!(h_cusp(w(0, 4), &SYM).unwrap(), SymbolicCount::new(-2, 2));
    }

    #[test]
    fn negative_cusp_count_is_an_error() {
        let mode = ZkMode::Explicit(BTreeMap::from([(12, 0)]));
        assert!(matches!(
            h_cusp(w(0, 4), &mode),
            Err(Error::NegativeDimension { m1: 0, m2: 4, .. })
        ));
        let ok = ZkMode::Explicit(BTreeMap::from([(12, 1)]));
        assert_eq!(h_cusp(w(0, 4), &ok).unwrap(), SymbolicCount::zero());
    }

    #[test]
    fn total_examples() {
        assert_eq!(h_by_degree(w(0, 0), &SYM).unwrap(), ints(&[1, 0, 1, 0, 0, 0]));
        assert_eq!(h_total(w(0, 0), &SYM).unwrap(), SymbolicCount::constant(2));
        assert_eq!(h_total(w(18, 70), &SYM).unwrap(), SymbolicCount::constant(4389));
        assert_eq!(h_total(w(2, 1), &SYM).unwrap(), SymbolicCount::zero());
        assert_eq!(h_total(w(10, 1), &SYM).unwrap(), SymbolicCount::constant(4));
        assert_eq!(g_value(w(18, 70), &SYM).unwrap(), SymbolicCount::constant(28));
        assert_eq!(g_value(w(0, 0), &SYM).unwrap(), SymbolicCount::constant(4));
    }

    #[test]
    fn display_forms() {
        let shown: Vec<String> = [
            SymbolicCount::new(-4, 2),
            SymbolicCount::zeta(1),
            SymbolicCount::new(3, -1),
            SymbolicCount::constant(-1),
            SymbolicCount::new(Rat::new(1, 2), 0),
        ]
        .iter()
        .map(|c| c.to_string())
        .collect();
        assert_eq!(shown, ["2ζ-4", "ζ", "-ζ+3", "-1", "1/2"]);
    }

    #[test]
    fn json_round_trip() {
        for c in [SymbolicCount::constant(7), SymbolicCount::new(-4, 2), SymbolicCount::new(Rat::new(1, 3), 0)] {
            let text = serde_json::to_string(&c).unwrap();
            assert_eq!(serde_json::from_str::<SymbolicCount>(&text).unwrap(), c);
        }
        assert_eq!(serde_json::to_string(&SymbolicCount::constant(2)).unwrap(), "2");
        assert_eq!(
            serde_json::to_string(&SymbolicCount::new(-4, 2)).unwrap(),
            r#"{"const":"-4","zeta":"2"}"#
        );
    }

    fn sweep() -> impl Iterator<Item = HighestWeight> {
        HighestWeight::all_up_to(60)
    }

    #[test]
    fn three_chi_eis_routes_agree() {
        for weight in sweep() {
            let table = chi_eis(weight, &SYM).unwrap();
            assert_eq!(table, chi_eis_direct(weight, &SYM).unwrap(), "{weight}");
            assert_eq!(table, chi_eis_alternating(weight, &SYM).unwrap(), "{weight}");
        }
    }

    #[test]
    fn degree_identities() {
        let two = Rat::from(2);
        for weight in sweep().filter(|w| w.m1 % 2 == 0 && w.n1() <= 40) {
            let h = h_by_degree(weight, &SYM).unwrap();
            assert_eq!(h.alternating_sum(), SymbolicCount::constant(chi_h(weight)), "{weight}");
            assert!(h.get(1).is_resolved() && h.get(1).constant.is_zero());
            assert!(h.get(5).is_resolved() && h.get(5).constant.is_zero());
            let total = h.total();
            assert_eq!(total, h_total_cases(weight, &SYM).unwrap(), "{weight}");
            assert_eq!(total, h_total_closed(weight, &SYM).unwrap(), "{weight}");
            let eis = h_eis_by_degree(weight, &SYM).unwrap();
            let g = eis.total() + chi_eis(weight, &SYM).unwrap();
            let even = (eis.get(0).clone() + eis.get(2).clone() + eis.get(4).clone()) * &two;
            assert_eq!(g, even, "{weight}");
            assert_eq!(g, g_value(weight, &SYM).unwrap(), "{weight}");
        }
    }

    #[test]
    fn odd_parities_restrict_isomorphically_to_boundary() {
        for weight in sweep().filter(|w| w.m1 % 2 == 1 || w.m2 % 2 == 1) {
            let eis = h_eis_by_degree(weight, &SYM).unwrap();
            let boundary = boundary_dims(weight);
            assert_eq!(eis.get(3), boundary.get(3), "{weight}");
            assert_eq!(eis.get(4), boundary.get(4), "{weight}");
        }
    }

    proptest! {
        #[test]
        fn assumed_zeta_gives_nonnegative_integers(n1 in 0u64..=60, frac in 0.0f64..=1.0) {
            let n2 = (frac * n1 as f64).floor() as u64;
            let weight = HighestWeight::from_eps(n1, n2);
            let h = h_by_degree(weight, &ZkMode::AssumeNonvanishing).unwrap();
            for c in h.0.iter().chain(boundary_dims(weight).0.iter()) {
                let v = c.resolved().expect("resolved");
                prop_assert!(v.is_integer() && !v.is_negative());
            }
        }

        #[test]
        fn symbolic_then_substitute_matches_explicit(m2 in 1u64..60, pick in 0u64..8) {
            let weight = HighestWeight::new(0, 2 * m2);
            let k = 2 * weight.m2 + 4;
            let zeta = pick.min(dim_cusp_forms(k as i64));
            let explicit = ZkMode::Explicit(BTreeMap::from([(k, zeta)]));
            let sym = chi_eis(weight, &SYM).unwrap();
            prop_assert_eq!(SymbolicCount::constant(sym.eval(zeta)), chi_eis(weight, &explicit).unwrap());
        }
    }
}
