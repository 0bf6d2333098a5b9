//! Homological Euler characteristic of Sp4(Z) with coefficients in `M_lambda`.
//!
//! [`chi_h`] is the reference: a sum over the 56 torsion classes of the
//! centralizer characteristic times the trace of the inverse. [`chi_h_closed`]
//! keeps only the families whose traces do not cancel against a periodic
//! correction grid, and [`chi_h_sym`] is the cubic-plus-periodic form along
//! `lambda = (n, 0)`.

use crate::exact::Rat;
use crate::torsion::{classes, family_chi, TraceFamily};
use crate::traces::{family_trace, weight_trace};
use crate::weyl::HighestWeight;

/// Torsion-class summation; integral for every weight and zero for odd `m1`.
pub fn chi_h(weight: HighestWeight) -> Rat {
    classes()
        .iter()
        .map(|c| &c.centralizer_chi * Rat::int(weight_trace(c, weight)))
        .sum()
}

/// Correction grid indexed by `(m2 mod 12, (m1/2) mod 6)`. Each cell holds
/// `[a, b, c]` for the affine form `(a*n1 + b*n2 + c) / 432`.
#[rustfmt::skip]
const E_NUMERATORS: [[[i64; 3]; 6]; 12] = [
    [[-67, 8, 282], [-49, -8, -370], [-43, 0, -86], [-49, 8, 174], [-67, -8, -550], [-25, 0, -50]],
    [[-32, -27, -91], [-8, -13, -53], [-8, 13, 21], [-32, 27, -37], [-8, -67, 325], [-8, 67, -357]],
    [[9, -32, 274], [27, 0, 54], [9, 32, -238], [27, -32, 22], [9, 0, 18], [27, 32, 86]],
    [[8, -31, -135], [8, 31, 167], [32, 9, 361], [8, -49, -297], [8, 49, 329], [32, -9, -233]],
    [[-11, 0, -22], [31, 8, -50], [13, -8, -6], [7, 0, 14], [13, 8, 58], [31, -8, 174]],
    [[0, -11, -11], [0, 27, 27], [0, -43, -43], [0, 43, 43], [0, -27, -27], [0, 11, 11]],
    [[-31, 8, 66], [-13, -8, -10], [-7, 0, -14], [-13, 8, -42], [-31, -8, -190], [11, 0, 22]],
    [[-32, 9, -343], [-8, -49, 199], [-8, 49, -231], [-32, -9, 215], [-8, -31, 73], [-8, 31, -105]],
    [[-27, -32, -86], [-9, 0, -18], [-27, 32, -22], [-9, -32, -338], [-27, 0, -54], [-9, 32, 302]],
    [[8, -67, -459], [8, 67, 491], [32, -27, 37], [8, -13, 27], [8, 13, 5], [32, 27, 91]],
    [[25, 0, 50], [67, 8, -266], [49, -8, 354], [43, 0, 86], [49, 8, -158], [67, -8, 534]],
    [[0, 25, 25], [0, -9, -9], [0, -7, -7], [0, 7, 7], [0, 9, 9], [0, -25, -25]],
];

pub const E_DENOMINATOR: i64 = 432;

/// The correction grid as a typed table.
#[derive(Clone, Copy, Debug)]
pub struct EulerMatrixE;

impl EulerMatrixE {
    pub const ROWS: usize = 12;
    pub const COLS: usize = 6;

    /// `[a, b, c]` with the cell equal to `(a*n1 + b*n2 + c) / 432`.
    pub fn numerators(row: usize, col: usize) -> [i64; 3] {
        E_NUMERATORS[row][col]
    }

    pub fn eval_cell(row: usize, col: usize, n1: u64, n2: u64) -> Rat {
        let [a, b, c] = E_NUMERATORS[row][col];
        Rat::new(a * n1 as i64 + b * n2 as i64 + c, E_DENOMINATOR)
    }

    /// Requires even `m1`.
    pub fn eval(weight: HighestWeight) -> Rat {
        let row = (weight.m2 % 12) as usize;
        let col = ((weight.m1 / 2) % 6) as usize;
        Self::eval_cell(row, col, weight.n1(), weight.n2())
    }
}

/// The five summands of the closed form, kept apart so a disagreement can be
/// localized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedTerms {
    pub a: Rat,
    pub bc: Rat,
    pub k: Rat,
    pub n: Rat,
    pub e: Rat,
}

impl ClosedTerms {
    pub fn total(&self) -> Rat {
        &self.a + &self.bc + &self.k + &self.n + &self.e
    }
}

/// Requires even `m1`.
pub fn closed_terms(weight: HighestWeight) -> ClosedTerms {
    let term = |f: TraceFamily| family_chi(f) * family_trace(f, weight);
    ClosedTerms {
        a: term(TraceFamily::A),
        bc: term(TraceFamily::BC),
        k: term(TraceFamily::K),
        n: term(TraceFamily::N),
        e: EulerMatrixE::eval(weight),
    }
}

/// Closed form; zero for odd `m1`.
pub fn chi_h_closed(weight: HighestWeight) -> Rat {
    if weight.m1 % 2 == 1 {
        return Rat::zero();
    }
    closed_terms(weight).total()
}

#[rustfmt::skip]
const A_COEFFS: [(i64, i64); 30] = [
    (-2, 15), (-11, 120), (-7, 90), (-11, 120), (-2, 15), (-13, 360),
    (-2, 15), (-11, 120), (-7, 90), (-11, 120), (-2, 15), (-13, 360),
    (-2, 15), (-11, 120), (-7, 90), (-11, 120), (-2, 15), (-13, 360),
    (-2, 15), (-11, 120), (-7, 90), (-11, 120), (-2, 15), (-13, 360),
    (-2, 15), (-11, 120), (-7, 90), (-11, 120), (-2, 15), (-13, 360),
];

#[rustfmt::skip]
const B_COEFFS: [(i64, i64); 30] = [
    (3, 2), (-437, 540), (-41, 270), (-7, 20), (-331, 270), (79, 108),
    (7, 10), (-437, 540), (-257, 270), (9, 20), (-23, 54), (-37, 540),
    (7, 10), (-869, 540), (-41, 270), (5, 4), (-331, 270), (-37, 540),
    (-1, 10), (-437, 540), (35, 54), (9, 20), (-331, 270), (-469, 540),
    (7, 10), (-1, 108), (-41, 270), (9, 20), (-547, 270), (-37, 540),
];

/// Coefficients of the symmetric-power formula, periodic in `k = n/2` mod 30,
/// plus the mod-4 term `c_k`.
#[derive(Clone, Copy, Debug)]
pub struct SymCoeffTable;

impl SymCoeffTable {
    pub const PERIOD: u64 = 30;

    pub fn a(k: u64) -> Rat {
        let (p, q) = A_COEFFS[(k % Self::PERIOD) as usize];
        Rat::new(p, q)
    }

    pub fn b(k: u64) -> Rat {
        let (p, q) = B_COEFFS[(k % Self::PERIOD) as usize];
        Rat::new(p, q)
    }

    /// `(-1)^(k/2) / 2` for even `k`, else 0.
    pub fn c(k: u64) -> Rat {
        match k % 4 {
            0 => Rat::new(1, 2),
            2 => Rat::new(-1, 2),
            _ => Rat::zero(),
        }
    }
}

/// `-n^3/4320 - n^2/720 + a_k n + b_k + c_k` with `k = n/2`; requires even `n`.
pub fn chi_h_sym(n: u64) -> Rat {
    assert!(n.is_multiple_of(2), "symmetric-power formula covers even n");
    let k = n / 2;
    let x = Rat::from(n as i64);
    -(&x * &x * &x) / Rat::from(4320) - (&x * &x) / Rat::from(720)
        + SymCoeffTable::a(k) * &x
        + SymCoeffTable::b(k)
        + SymCoeffTable::c(k)
}
