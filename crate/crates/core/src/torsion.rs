//! The 56 conjugacy classes of torsion elements of Sp4(Z).
//!
//! Each representative is assembled from 2x2 blocks by one of three
//! interleavings ([`BlockKind`]) or from the explicit matrices `R`, `S`, `T`.
//! Construction checks every recorded property (symplectic, order, characteristic
//! polynomial) so a transcription slip fails loudly instead of skewing sums.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{char_poly, is_symplectic, mat_mul, Mat4, Rat};

pub type Mat2 = [[i64; 2]; 2];

pub const ID2: Mat2 = [[1, 0], [0, 1]];
pub const U: Mat2 = [[1, 0], [1, -1]];
pub const W: Mat2 = [[0, -1], [1, -1]];
pub const J2: Mat2 = [[0, -1], [1, 0]];

pub const fn neg2(m: Mat2) -> Mat2 {
    [[-m[0][0], -m[0][1]], [-m[1][0], -m[1][1]]]
}

pub const fn transpose2(m: Mat2) -> Mat2 {
    [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    /// `A * B`: entries of `A` on the odd, of `B` on the even coordinates.
    Star,
    /// `A (+) B`: block diagonal.
    DotPlus,
    /// `A o B`: like `Star` with the two coordinate pairs swapped within rows.
    Circ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockOp {
    pub kind: BlockKind,
    pub left: Mat2,
    pub right: Mat2,
}

pub fn block_product(op: BlockOp) -> Mat4 {
    let [[a1, b1], [c1, d1]] = op.left;
    let [[a2, b2], [c2, d2]] = op.right;
    let rows = match op.kind {
        BlockKind::Star => [[a1, 0, b1, 0], [0, a2, 0, b2], [c1, 0, d1, 0], [0, c2, 0, d2]],
        BlockKind::DotPlus => [[a1, b1, 0, 0], [c1, d1, 0, 0], [0, 0, a2, b2], [0, 0, c2, d2]],
        BlockKind::Circ => [[0, a1, 0, b1], [a2, 0, b2, 0], [0, c1, 0, d1], [c2, 0, d2, 0]],
    };
    Mat4::from_i64(rows)
}

pub fn mat_r() -> Mat4 {
    Mat4::from_i64([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 1], [0, 1, 1, 0]])
}

/// Order 5.
pub fn mat_s() -> Mat4 {
    Mat4::from_i64([[0, 1, 0, 0], [0, 0, -1, 0], [0, 0, -1, 1], [1, 1, -1, 0]])
}

/// Order 8.
pub fn mat_t() -> Mat4 {
    Mat4::from_i64([[0, -1, 1, 0], [-1, 0, 1, 1], [-1, 1, 0, 0], [0, -1, 0, 0]])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NamedMatrix {
    Id4,
    R,
    S,
    T,
}

impl NamedMatrix {
    fn matrix(self) -> Mat4 {
        match self {
            NamedMatrix::Id4 => Mat4::identity(),
            NamedMatrix::R => mat_r(),
            NamedMatrix::S => mat_s(),
            NamedMatrix::T => mat_t(),
        }
    }
}

/// How a representative is assembled; `negate` multiplies the result by `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Recipe {
    Block { op: BlockOp, negate: bool },
    Named { base: NamedMatrix, power: u32, negate: bool },
}

impl Recipe {
    pub fn build(&self) -> Mat4 {
        let (m, negate) = match *self {
            Recipe::Block { op, negate } => (block_product(op), negate),
            Recipe::Named { base, power, negate } => (base.matrix().pow(power), negate),
        };
        if negate {
            -m
        } else {
            m
        }
    }
}

/// Cyclotomic polynomial coefficients, ascending powers.
fn cyclotomic(n: u32) -> &'static [i64] {
    match n {
        1 => &[-1, 1],
        2 => &[1, 1],
        3 => &[1, 1, 1],
        4 => &[1, 0, 1],
        5 => &[1, 1, 1, 1, 1],
        6 => &[1, -1, 1],
        8 => &[1, 0, 0, 0, 1],
        10 => &[1, -1, 1, -1, 1],
        12 => &[1, 0, -1, 0, 1],
        _ => panic!("no degree <= 4 factor Phi_{n} occurs in Sp4"),
    }
}

/// A product of cyclotomic factors `Phi_n^e`, one of the 19 possible
/// characteristic polynomials of a torsion element of Sp4(Z).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicProduct(pub &'static [(u32, u32)]);

impl Serialize for CyclotomicProduct {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl CyclotomicProduct {
    /// Position in the standard list of the 19 admissible products, 1-based.
    pub fn catalogue_index(&self) -> usize {
        CHARPOLY_CATALOGUE
            .iter()
            .position(|p| p.0 == self.0)
            .map(|i| i + 1)
            .expect("label drawn from the catalogue")
    }

    /// Expanded coefficients `c0..c4`, ascending powers.
    pub fn coefficients(&self) -> [i64; 5] {
        let mut acc = vec![1i64];
        for &(n, e) in self.0 {
            for _ in 0..e {
                let f = cyclotomic(n);
                let mut next = vec![0i64; acc.len() + f.len() - 1];
                for (i, x) in acc.iter().enumerate() {
                    for (j, y) in f.iter().enumerate() {
                        next[i + j] += x * y;
                    }
                }
                acc = next;
            }
        }
        assert_eq!(acc.len(), 5, "characteristic polynomial has degree 4");
        std::array::from_fn(|k| acc[k])
    }

    /// Order of any semisimple element with this characteristic polynomial.
    pub fn element_order(&self) -> u32 {
        self.0.iter().fold(1, |acc, &(n, _)| acc.lcm(&n))
    }
}

impl fmt::Display for CyclotomicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(n, e)| if e == 1 { format!("Phi{n}") } else { format!("Phi{n}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub const CHARPOLY_CATALOGUE: [CyclotomicProduct; 19] = [
    CyclotomicProduct(&[(1, 4)]),
    CyclotomicProduct(&[(1, 2), (2, 2)]),
    CyclotomicProduct(&[(1, 2), (3, 1)]),
    CyclotomicProduct(&[(1, 2), (4, 1)]),
    CyclotomicProduct(&[(1, 2), (6, 1)]),
    CyclotomicProduct(&[(2, 4)]),
    CyclotomicProduct(&[(2, 2), (3, 1)]),
    CyclotomicProduct(&[(2, 2), (4, 1)]),
    CyclotomicProduct(&[(2, 2), (6, 1)]),
    CyclotomicProduct(&[(3, 2)]),
    CyclotomicProduct(&[(3, 1), (4, 1)]),
    CyclotomicProduct(&[(3, 1), (6, 1)]),
    CyclotomicProduct(&[(4, 2)]),
    CyclotomicProduct(&[(4, 1), (6, 1)]),
    CyclotomicProduct(&[(5, 1)]),
    CyclotomicProduct(&[(6, 2)]),
    CyclotomicProduct(&[(8, 1)]),
    CyclotomicProduct(&[(10, 1)]),
    CyclotomicProduct(&[(12, 1)]),
];

/// Centralizer type, grouping classes whose centralizers share an orbifold
/// Euler characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CentralizerCase {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    K,
    L,
    M,
    N,
    O,
}

impl CentralizerCase {
    pub fn chi(self) -> Rat {
        use CentralizerCase::*;
        match self {
            A => Rat::new(-1, 1440),
            B => Rat::new(1, 144),
            C => Rat::new(6, 144),
            D => Rat::new(1, 72),
            E => Rat::new(-1, 18),
            F => Rat::new(-1, 72),
            G => Rat::new(1, 32),
            H => Rat::new(-1, 16),
            I => Rat::new(-1, 24),
            J => Rat::new(-1, 48),
            K => Rat::new(1, 10),
            L => Rat::new(1, 36),
            M => Rat::new(1, 12),
            N => Rat::new(1, 8),
            O => Rat::new(1, 24),
        }
    }

    /// Finite centralizers have `|C(T)| = 1/chi`.
    pub fn is_finite(self) -> bool {
        use CentralizerCase::*;
        matches!(self, K | L | M | N | O)
    }
}

/// Classes sharing one closed-form trace on every `M_lambda` up to the sign rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TraceFamily {
    A,
    BC,
    DE,
    F,
    F2,
    GHI,
    J,
    K,
    LM,
    M,
    N,
    O,
}

impl TraceFamily {
    pub const ALL: [TraceFamily; 12] = [
        TraceFamily::A,
        TraceFamily::BC,
        TraceFamily::DE,
        TraceFamily::F,
        TraceFamily::F2,
        TraceFamily::GHI,
        TraceFamily::J,
        TraceFamily::K,
        TraceFamily::LM,
        TraceFamily::M,
        TraceFamily::N,
        TraceFamily::O,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TraceFamily::A => "A",
            TraceFamily::BC => "BC",
            TraceFamily::DE => "DE",
            TraceFamily::F => "F",
            TraceFamily::F2 => "F2",
            TraceFamily::GHI => "GHI",
            TraceFamily::J => "J",
            TraceFamily::K => "K",
            TraceFamily::LM => "LM",
            TraceFamily::M => "M",
            TraceFamily::N => "N",
            TraceFamily::O => "O",
        }
    }
}

impl fmt::Display for TraceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Summed centralizer characteristic over a trace family.
pub fn family_chi(tag: TraceFamily) -> Rat {
    match tag {
        TraceFamily::A => Rat::new(-1, 720),
        TraceFamily::BC => Rat::new(7, 144),
        TraceFamily::DE => Rat::new(-1, 18),
        TraceFamily::F => Rat::new(-1, 18),
        TraceFamily::F2 => Rat::new(-1, 18),
        TraceFamily::GHI => Rat::new(-1, 24),
        TraceFamily::J => Rat::new(-1, 12),
        TraceFamily::K => Rat::new(4, 5),
        TraceFamily::LM => Rat::new(4, 9),
        TraceFamily::M => Rat::new(1, 6),
        TraceFamily::N => Rat::new(1, 2),
        TraceFamily::O => Rat::new(1, 3),
    }
}

/// Whether the family trace picks up `(-1)^m1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignRule {
    Plain,
    AlternatingM1,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionClass {
    pub id: usize,
    pub recipe: Recipe,
    pub matrix: Mat4Json,
    pub order: u32,
    pub charpoly: CyclotomicProduct,
    pub case: CentralizerCase,
    pub family: TraceFamily,
    pub sign_rule: SignRule,
    pub centralizer_chi: Rat,
}

impl TorsionClass {
    pub fn matrix(&self) -> &Mat4 {
        &self.matrix.0
    }
}

/// `Mat4` with a serde representation as nested integer arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat4Json(pub Mat4);

impl Serialize for Mat4Json {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = self.0.to_i64().ok_or_else(|| serde::ser::Error::custom("entry overflow"))?;
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat4Json {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = <[[i64; 4]; 4]>::deserialize(d)?;
        Ok(Mat4Json(Mat4::from_i64(rows)))
    }
}

/// Least `k <= cap` with `m^k = id`.
pub fn order_of(m: &Mat4, cap: u32) -> Result<u32> {
    let mut power = m.clone();
    for k in 1..=cap {
        if power.is_identity() {
            return Ok(k);
        }
        power = mat_mul(&power, m);
    }
    Err(Error::OrderExceedsCap { cap })
}

/// Maximal order of a torsion element of Sp4(Z).
pub const ORDER_CAP: u32 = 12;

struct Row {
    recipe: Recipe,
    order: u32,
    label: usize,
    case: CentralizerCase,
    family: TraceFamily,
    sign: SignRule,
}

fn blk(kind: BlockKind, left: Mat2, right: Mat2) -> Recipe {
    Recipe::Block { op: BlockOp { kind, left, right }, negate: false }
}

fn neg_blk(kind: BlockKind, left: Mat2, right: Mat2) -> Recipe {
    Recipe::Block { op: BlockOp { kind, left, right }, negate: true }
}

fn named(base: NamedMatrix, power: u32, negate: bool) -> Recipe {
    Recipe::Named { base, power, negate }
}

fn rows() -> Vec<Row> {
    use BlockKind::{Circ, DotPlus, Star};
    use CentralizerCase as C;
    use NamedMatrix as Nm;
    use SignRule::{AlternatingM1 as Alt, Plain};
    use TraceFamily as Tf;

    let wt = transpose2(W);
    let j2t = transpose2(J2);
    let r = |recipe, order, label, case, family, sign| Row { recipe, order, label, case, family, sign };
    vec![
        r(named(Nm::Id4, 1, false), 1, 1, C::A, Tf::A, Plain),
        r(named(Nm::Id4, 1, true), 2, 6, C::A, Tf::A, Alt),
        r(blk(Star, ID2, neg2(ID2)), 2, 2, C::B, Tf::BC, Plain),
        r(blk(DotPlus, U, transpose2(U)), 2, 2, C::C, Tf::BC, Plain),
        r(blk(Star, W, W), 3, 10, C::D, Tf::DE, Plain),
        r(blk(Star, wt, wt), 3, 10, C::D, Tf::DE, Plain),
        r(blk(Star, W, wt), 3, 10, C::E, Tf::DE, Plain),
        r(blk(Star, ID2, W), 3, 3, C::F, Tf::F, Plain),
        r(blk(Star, ID2, wt), 3, 3, C::F, Tf::F, Plain),
        r(blk(Star, J2, J2), 4, 13, C::G, Tf::GHI, Plain),
        r(neg_blk(Star, J2, J2), 4, 13, C::G, Tf::GHI, Plain),
        r(blk(Star, J2, neg2(J2)), 4, 13, C::H, Tf::GHI, Plain),
        r(blk(Circ, neg2(ID2), ID2), 4, 13, C::I, Tf::GHI, Plain),
        r(blk(Star, ID2, J2), 4, 4, C::J, Tf::J, Plain),
        r(blk(Star, ID2, neg2(J2)), 4, 4, C::J, Tf::J, Plain),
        r(blk(Star, neg2(ID2), J2), 4, 8, C::J, Tf::J, Alt),
        r(neg_blk(Star, ID2, J2), 4, 8, C::J, Tf::J, Alt),
        r(named(Nm::S, 1, false), 5, 15, C::K, Tf::K, Plain),
        r(named(Nm::S, 2, false), 5, 15, C::K, Tf::K, Plain),
        r(named(Nm::S, 3, false), 5, 15, C::K, Tf::K, Plain),
        r(named(Nm::S, 4, false), 5, 15, C::K, Tf::K, Plain),
        r(neg_blk(Star, W, W), 6, 16, C::D, Tf::DE, Alt),
        r(neg_blk(Star, wt, wt), 6, 16, C::D, Tf::DE, Alt),
        r(neg_blk(Star, W, wt), 6, 16, C::E, Tf::DE, Alt),
        r(blk(Star, ID2, neg2(W)), 6, 5, C::F, Tf::F2, Plain),
        r(blk(Star, ID2, neg2(wt)), 6, 5, C::F, Tf::F2, Plain),
        r(neg_blk(Star, ID2, W), 6, 9, C::F, Tf::F, Alt),
        r(neg_blk(Star, ID2, wt), 6, 9, C::F, Tf::F, Alt),
        r(blk(Star, neg2(ID2), W), 6, 7, C::F, Tf::F2, Alt),
        r(blk(Star, neg2(ID2), wt), 6, 7, C::F, Tf::F2, Alt),
        r(blk(Star, W, neg2(W)), 6, 12, C::L, Tf::LM, Plain),
        r(blk(Star, W, neg2(wt)), 6, 12, C::L, Tf::LM, Plain),
        r(blk(Star, wt, neg2(W)), 6, 12, C::L, Tf::LM, Plain),
        r(blk(Star, wt, neg2(wt)), 6, 12, C::L, Tf::LM, Plain),
        r(blk(Circ, ID2, W), 6, 12, C::M, Tf::LM, Plain),
        r(blk(Circ, ID2, wt), 6, 12, C::M, Tf::LM, Plain),
        r(named(Nm::R, 1, false), 6, 12, C::M, Tf::LM, Plain),
        r(named(Nm::R, 1, true), 6, 12, C::M, Tf::LM, Plain),
        r(blk(Circ, ID2, J2), 8, 17, C::N, Tf::N, Plain),
        r(blk(Circ, ID2, neg2(J2)), 8, 17, C::N, Tf::N, Plain),
        r(named(Nm::T, 1, false), 8, 17, C::N, Tf::N, Plain),
        r(named(Nm::T, 1, true), 8, 17, C::N, Tf::N, Plain),
        r(named(Nm::S, 1, true), 10, 18, C::K, Tf::K, Alt),
        r(named(Nm::S, 2, true), 10, 18, C::K, Tf::K, Alt),
        r(named(Nm::S, 3, true), 10, 18, C::K, Tf::K, Alt),
        r(named(Nm::S, 4, true), 10, 18, C::K, Tf::K, Alt),
        r(blk(Circ, ID2, neg2(W)), 12, 19, C::M, Tf::M, Plain),
        r(blk(Circ, ID2, neg2(wt)), 12, 19, C::M, Tf::M, Plain),
        r(blk(Star, J2, W), 12, 11, C::O, Tf::O, Plain),
        r(blk(Star, J2, wt), 12, 11, C::O, Tf::O, Plain),
        r(blk(Star, j2t, W), 12, 11, C::O, Tf::O, Plain),
        r(blk(Star, j2t, wt), 12, 11, C::O, Tf::O, Plain),
        r(blk(Star, J2, neg2(W)), 12, 14, C::O, Tf::O, Alt),
        r(blk(Star, J2, neg2(wt)), 12, 14, C::O, Tf::O, Alt),
        r(blk(Star, j2t, neg2(W)), 12, 14, C::O, Tf::O, Alt),
        r(blk(Star, j2t, neg2(wt)), 12, 14, C::O, Tf::O, Alt),
    ]
}

fn check(id: usize, ok: bool, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Transcription { id, detail: detail() })
    }
}

/// Builds all 56 representatives, verifying each recorded property.
pub fn build_all() -> Result<Vec<TorsionClass>> {
    let mut out = Vec::with_capacity(56);
    for (idx, row) in rows().into_iter().enumerate() {
        let id = idx + 1;
        let matrix = row.recipe.build();
        let charpoly = CHARPOLY_CATALOGUE[row.label - 1];
        check(id, is_symplectic(&matrix), || "not symplectic".into())?;
        let order = order_of(&matrix, ORDER_CAP)?;
        check(id, order == row.order, || format!("order {order}, recorded {}", row.order))?;
        check(id, order == charpoly.element_order(), || {
            format!("order {order} disagrees with {charpoly}")
        })?;
        let actual: Vec<BigInt> = char_poly(&matrix).to_vec();
        let expected: Vec<BigInt> = charpoly.coefficients().iter().map(|&c| c.into()).collect();
        check(id, actual == expected, || format!("characteristic polynomial is not {charpoly}"))?;
        out.push(TorsionClass {
            id,
            recipe: row.recipe,
            matrix: Mat4Json(matrix),
            order,
            charpoly,
            case: row.case,
            family: row.family,
            sign_rule: row.sign,
            centralizer_chi: row.case.chi(),
        });
    }
    Ok(out)
}

static CLASSES: Lazy<Vec<TorsionClass>> =
    Lazy::new(|| build_all().expect("torsion class table is internally consistent"));

/// The validated table, built once.
pub fn classes() -> &'static [TorsionClass] {
    &CLASSES
}

/// Panics unless `1 <= id <= 56`.
pub fn class(id: usize) -> &'static TorsionClass {
    &classes()[id - 1]
}

/// Solves `a x = b` over the rationals; `None` if `a` is singular.
fn solve4(a: [[Rat; 4]; 4], b: [Rat; 4]) -> Option<[Rat; 4]> {
    let mut m: Vec<Vec<Rat>> = (0..4)
        .map(|i| a[i].iter().cloned().chain(std::iter::once(b[i].clone())).collect())
        .collect();
    for col in 0..4 {
        let pivot = (col..4).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for entry in m[col].iter_mut() {
            *entry = &*entry / &p;
        }
        for r in 0..4 {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..5 {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= &delta;
                }
            }
        }
    }
    Some(std::array::from_fn(|i| m[i][4].clone()))
}

/// Symplectic integer matrices with entries in `[-bound, bound]` commuting
/// with `t`, for `t` with squarefree characteristic polynomial.
///
/// Such a `t` is cyclic, so its commutant is `Q[t]` and an element `g` is
/// pinned down by `g v` for a cyclic 0/1 vector `v`. With `|v|_1 = s`, every
/// admissible `g v` lies in the box `[-s*bound, s*bound]^4`, so enumerating that
/// box is exhaustive. Returns `None` when no 0/1 vector is cyclic.
pub fn bounded_centralizer(t: &Mat4, bound: i64) -> Option<Vec<Mat4>> {
    let powers: Vec<Mat4> = (0..4).map(|k| t.pow(k)).collect();
    let krylov_for = |v: [i64; 4]| -> [[Rat; 4]; 4] {
        std::array::from_fn(|i| {
            std::array::from_fn(|k| {
                let x: BigInt = (0..4).map(|j| powers[k].entry(i, j) * v[j]).sum();
                Rat::int(x)
            })
        })
    };
    let zero: [Rat; 4] = std::array::from_fn(|_| Rat::zero());
    let v: [i64; 4] = (1u32..16)
        .map(|bits| std::array::from_fn(|j| ((bits >> j) & 1) as i64))
        .find(|v| solve4(krylov_for(*v), zero.clone()).is_some())?;
    let krylov = krylov_for(v);
    let reach = bound * v.iter().sum::<i64>();
    let side = (2 * reach + 1) as usize;
    let mut found = Vec::new();
    for code in 0..side.pow(4) {
        let image: [Rat; 4] = std::array::from_fn(|i| {
            Rat::from((code / side.pow(i as u32) % side) as i64 - reach)
        });
        let coeffs = solve4(krylov.clone(), image).expect("krylov basis is invertible");
        let entries: Option<Vec<BigInt>> = (0..16)
            .map(|ij| {
                let v: Rat = (0..4)
                    .map(|k| &coeffs[k] * Rat::int(powers[k].entry(ij / 4, ij % 4).clone()))
                    .sum();
                v.to_integer().filter(|x| x.abs() <= BigInt::from(bound))
            })
            .collect();
        if let Some(entries) = entries {
            let g = Mat4::from_fn(|i, j| entries[4 * i + j].clone());
            if is_symplectic(&g) {
                found.push(g);
            }
        }
    }
    Some(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn block_product_examples() {
        let t3 = block_product(BlockOp { kind: BlockKind::Star, left: ID2, right: neg2(ID2) });
        assert_eq!(t3, Mat4::from_i64([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]));
        let t4 = block_product(BlockOp { kind: BlockKind::DotPlus, left: U, right: transpose2(U) });
        assert_eq!(t4, Mat4::from_i64([[1, 0, 0, 0], [1, -1, 0, 0], [0, 0, 1, 1], [0, 0, 0, -1]]));
        let t39 = block_product(BlockOp { kind: BlockKind::Circ, left: ID2, right: J2 });
        assert_eq!(char_poly(&t39).to_vec(), [1, 0, 0, 0, 1].map(BigInt::from).to_vec());
    }

    #[test]
    fn explicit_matrices_in_text() {
        let t5 = Mat4::from_i64([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, -1, 0], [0, 1, 0, -1]]);
        assert_eq!(class(5).matrix(), &t5);
        let t7 = Mat4::from_i64([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, -1, 0], [0, -1, 0, -1]]);
        assert_eq!(class(7).matrix(), &t7);
        let t13 = class(13).matrix().to_i64().unwrap();
        assert_eq!(t13[0], [0, -1, 0, 0]);
        assert_eq!(t13[1], [1, 0, 0, 0]);
    }

    #[test]
    fn build_all_examples() {
        let all = classes();
        assert_eq!(all.len(), 56);
        assert_eq!(class(18).matrix(), &mat_s());
        assert_eq!(class(18).order, 5);
        assert_eq!(class(1).centralizer_chi, Rat::new(-1, 1440));
        assert_eq!(class(5).centralizer_chi, Rat::new(1, 72));
        assert_eq!(class(21).matrix(), &mat_s().pow(4));
    }

    #[test]
    fn order_examples() {
        assert_eq!(order_of(&Mat4::identity(), ORDER_CAP).unwrap(), 1);
        assert_eq!(order_of(&-Mat4::identity(), ORDER_CAP).unwrap(), 2);
        assert_eq!(order_of(class(47).matrix(), ORDER_CAP).unwrap(), 12);
        let shear = Mat4::from_i64([[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert!(matches!(order_of(&shear, ORDER_CAP), Err(Error::OrderExceedsCap { cap: 12 })));
    }

    #[test]
    fn family_chi_is_sum_over_members() {
        let mut sums: BTreeMap<TraceFamily, Rat> = BTreeMap::new();
        for c in classes() {
            *sums.entry(c.family).or_default() += &c.centralizer_chi;
        }
        for tag in TraceFamily::ALL {
            assert_eq!(sums[&tag], family_chi(tag), "family {tag}");
        }
        assert_eq!(family_chi(TraceFamily::A), Rat::new(-1, 720));
        assert_eq!(family_chi(TraceFamily::K), Rat::new(4, 5));
        assert_eq!(family_chi(TraceFamily::O), Rat::new(1, 3));
    }

    #[test]
    fn transpose_and_negation_relations() {
        let t = |id| class(id).matrix().clone();
        assert_eq!(t(9), t(8).transpose());
        assert_eq!(t(6), t(5).transpose());
        for (neg, base) in [(2, 1), (22, 5), (23, 6), (24, 7), (27, 8), (28, 9), (11, 10), (17, 14)] {
            assert_eq!(t(neg), -t(base), "T{neg} = -T{base}");
        }
        for k in 0..4 {
            assert_eq!(t(43 + k), -t(18 + k));
        }
        assert_eq!(t(38), -t(37));
        assert_eq!(t(42), -t(41));
        assert_eq!(t(29), -t(25));
        assert_eq!(t(30), -t(26));
    }

    #[test]
    fn pairwise_distinct() {
        let all = classes();
        for a in all {
            for b in all.iter().filter(|b| b.id > a.id) {
                assert_ne!(a.matrix(), b.matrix(), "T{} vs T{}", a.id, b.id);
            }
        }
    }

    #[test]
    fn catalogue_labels_cover_all_nineteen() {
        let mut seen: Vec<usize> = classes().iter().map(|c| c.charpoly.catalogue_index()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen, (1..=19).collect::<Vec<_>>());
    }

    #[test]
    fn finite_centralizer_counts_match_chi() {
        for id in [18, 31, 35, 39, 47, 49] {
            let c = class(id);
            assert!(c.case.is_finite());
            let group = bounded_centralizer(c.matrix(), 3).expect("cyclic representative");
            let expected = (Rat::one() / &c.centralizer_chi).to_i64().unwrap();
            assert_eq!(group.len() as i64, expected, "T{id}");
        }
    }
}
