//! Tabulated trace matrices, one per trace family.
//!
//! Cell `(i, j)` of a family of side `k` applies when `n1 = i mod k` and
//! `n2 = j mod k`. Entries are at most bilinear in `(n1, n2)`.

use crate::exact::Rat;

/// `(nn*n1*n2 + a*n1 + b*n2 + c) / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Poly2 {
    pub nn: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub den: i64,
}

impl Poly2 {
    pub const fn new(nn: i64, a: i64, b: i64, c: i64, den: i64) -> Self {
        Poly2 { nn, a, b, c, den }
    }

    pub fn eval(&self, n1: i64, n2: i64) -> Rat {
        Rat::new(self.nn * n1 * n2 + self.a * n1 + self.b * n2 + self.c, self.den)
    }
}

const fn lin(a: i64, b: i64, c: i64, den: i64) -> Poly2 {
    Poly2::new(0, a, b, c, den)
}

const fn k(c: i64) -> Poly2 {
    Poly2::new(0, 0, 0, c, 1)
}

#[rustfmt::skip]
const M_BC: [Poly2; 4] = [
    Poly2::new(1, 1, 2, 2, 2), k(0),
    k(0), Poly2::new(-1, -1, -2, -2, 2),
];

#[rustfmt::skip]
const M_DE: [Poly2; 9] = [
    lin(1, 1, 3, 3), lin(-1, 1, -1, 3), lin(0, -2, -2, 3),
    lin(-2, 0, -4, 3), lin(2, 0, 4, 3), k(0),
    lin(1, -1, 1, 3), lin(-1, -1, -3, 3), lin(0, 2, 2, 3),
];

#[rustfmt::skip]
const M_F: [Poly2; 9] = [
    lin(1, 1, 3, 3), lin(-1, 1, -1, 3), lin(0, 1, 1, 3),
    lin(1, 0, 2, 3), lin(-1, 0, -2, 3), k(0),
    lin(1, -1, 1, 3), lin(-1, -1, -3, 3), lin(0, -1, -1, 3),
];

#[rustfmt::skip]
const M_F2: [Poly2; 36] = [
    lin(1, -1, 1, 1), lin(1, -1, 1, 1), lin(0, -1, -1, 1), lin(-1, -1, -3, 1), lin(-1, -1, -3, 1), lin(0, -1, -1, 1),
    lin(1, 0, 2, 1), lin(1, 0, 2, 1), k(0), lin(-1, 0, -2, 1), lin(-1, 0, -2, 1), k(0),
    lin(1, 1, 3, 1), lin(1, 1, 3, 1), lin(0, 1, 1, 1), lin(-1, 1, -1, 1), lin(-1, 1, -1, 1), lin(0, 1, 1, 1),
    lin(1, 1, 3, 1), lin(1, 1, 3, 1), lin(0, 1, 1, 1), lin(-1, 1, -1, 1), lin(-1, 1, -1, 1), lin(0, 1, 1, 1),
    lin(1, 0, 2, 1), lin(1, 0, 2, 1), k(0), lin(-1, 0, -2, 1), lin(-1, 0, -2, 1), k(0),
    lin(1, -1, 1, 1), lin(1, -1, 1, 1), lin(0, -1, -1, 1), lin(-1, -1, -3, 1), lin(-1, -1, -3, 1), lin(0, -1, -1, 1),
];

#[rustfmt::skip]
const M_GHI: [Poly2; 16] = [
    lin(1, 0, 2, 2), k(0), lin(-1, 0, -2, 2), k(0),
    k(0), lin(0, 1, 1, 2), k(0), lin(0, -1, -1, 2),
    lin(-1, 0, -2, 2), k(0), lin(1, 0, 2, 2), k(0),
    k(0), lin(0, -1, -1, 2), k(0), lin(0, 1, 1, 2),
];

#[rustfmt::skip]
const M_J: [Poly2; 16] = [
    lin(1, 0, 2, 2), k(0), lin(-1, 0, -2, 2), k(0),
    lin(1, 1, 3, 2), lin(0, 1, 1, 2), lin(-1, 1, -1, 2), lin(0, 1, 1, 2),
    lin(1, 0, 2, 2), k(0), lin(-1, 0, -2, 2), k(0),
    lin(1, -1, 1, 2), lin(0, -1, -1, 2), lin(-1, -1, -3, 2), lin(0, -1, -1, 2),
];

#[rustfmt::skip]
const M_K: [Poly2; 25] = [
    k(1), k(0), k(0), k(-1), k(0),
    k(-1), k(0), k(0), k(1), k(0),
    k(0), k(1), k(-1), k(0), k(0),
    k(0), k(0), k(0), k(0), k(0),
    k(0), k(-1), k(1), k(0), k(0),
];

#[rustfmt::skip]
const M_LM: [Poly2; 36] = [
    k(1), k(0), k(0), k(0), k(-1), k(0),
    k(0), k(0), k(0), k(0), k(0), k(0),
    k(-1), k(0), k(0), k(0), k(1), k(0),
    k(0), k(1), k(0), k(-1), k(0), k(0),
    k(0), k(0), k(0), k(0), k(0), k(0),
    k(0), k(-1), k(0), k(1), k(0), k(0),
];

#[rustfmt::skip]
const M_N: [Poly2; 64] = [
    k(1), k(0), k(1), k(0), k(-1), k(0), k(-1), k(0),
    k(0), k(-1), k(0), k(0), k(0), k(1), k(0), k(0),
    k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0),
    k(0), k(1), k(0), k(0), k(0), k(-1), k(0), k(0),
    k(-1), k(0), k(-1), k(0), k(1), k(0), k(1), k(0),
    k(0), k(1), k(0), k(0), k(0), k(-1), k(0), k(0),
    k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0),
    k(0), k(-1), k(0), k(0), k(0), k(1), k(0), k(0),
];

#[rustfmt::skip]
const M_M: [Poly2; 144] = [
    k(1), k(0), k(2), k(0), k(1), k(0), k(-1), k(0), k(-2), k(0), k(-1), k(0),
    k(0), k(-2), k(0), k(-2), k(0), k(0), k(0), k(2), k(0), k(2), k(0), k(0),
    k(1), k(0), k(2), k(0), k(1), k(0), k(-1), k(0), k(-2), k(0), k(-1), k(0),
    k(0), k(-1), k(0), k(-1), k(0), k(0), k(0), k(1), k(0), k(1), k(0), k(0),
    k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0),
    k(0), k(1), k(0), k(1), k(0), k(0), k(0), k(-1), k(0), k(-1), k(0), k(0),
    k(-1), k(0), k(-2), k(0), k(-1), k(0), k(1), k(0), k(2), k(0), k(1), k(0),
    k(0), k(2), k(0), k(2), k(0), k(0), k(0), k(-2), k(0), k(-2), k(0), k(0),
    k(-1), k(0), k(-2), k(0), k(-1), k(0), k(1), k(0), k(2), k(0), k(1), k(0),
    k(0), k(1), k(0), k(1), k(0), k(0), k(0), k(-1), k(0), k(-1), k(0), k(0),
    k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0),
    k(0), k(-1), k(0), k(-1), k(0), k(0), k(0), k(1), k(0), k(1), k(0), k(0),
];

#[rustfmt::skip]
const M_O: [Poly2; 144] = [
    k(1), k(0), k(-1), k(0), k(1), k(0), k(-1), k(0), k(1), k(0), k(-1), k(0),
    k(-1), k(1), k(0), k(-1), k(1), k(0), k(-1), k(1), k(0), k(-1), k(1), k(0),
    k(-1), k(0), k(1), k(0), k(-1), k(0), k(1), k(0), k(-1), k(0), k(1), k(0),
    k(2), k(-1), k(-1), k(1), k(0), k(0), k(0), k(-1), k(1), k(1), k(-2), k(0),
    k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0),
    k(-2), k(1), k(1), k(-1), k(0), k(0), k(0), k(1), k(-1), k(-1), k(2), k(0),
    k(1), k(0), k(-1), k(0), k(1), k(0), k(-1), k(0), k(1), k(0), k(-1), k(0),
    k(1), k(-1), k(0), k(1), k(-1), k(0), k(1), k(-1), k(0), k(1), k(-1), k(0),
    k(-1), k(0), k(1), k(0), k(-1), k(0), k(1), k(0), k(-1), k(0), k(1), k(0),
    k(0), k(1), k(-1), k(-1), k(2), k(0), k(-2), k(1), k(1), k(-1), k(0), k(0),
    k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0), k(0),
    k(0), k(-1), k(1), k(1), k(-2), k(0), k(2), k(-1), k(-1), k(1), k(0), k(0),
];

/// A family's lookup matrix.
#[derive(Clone, Copy, Debug)]
pub struct TraceMatrixFamily {
    pub name: &'static str,
    pub modulus: usize,
    cells: &'static [Poly2],
}

impl TraceMatrixFamily {
    pub fn cell(&self, row: usize, col: usize) -> Poly2 {
        self.cells[row * self.modulus + col]
    }

    /// Entry selected by the residues of `(n1, n2)`, evaluated there.
    pub fn eval(&self, n1: u64, n2: u64) -> Rat {
        let k = self.modulus as u64;
        self.cell((n1 % k) as usize, (n2 % k) as usize).eval(n1 as i64, n2 as i64)
    }
}

macro_rules! family {
    ($name:literal, $side:literal, $cells:ident) => {
        TraceMatrixFamily { name: $name, modulus: $side, cells: &$cells }
    };
}

pub const BC: TraceMatrixFamily = family!("M_BC", 2, M_BC);
pub const DE: TraceMatrixFamily = family!("M_DE", 3, M_DE);
pub const F: TraceMatrixFamily = family!("M_F", 3, M_F);
pub const F2: TraceMatrixFamily = family!("M_F2", 6, M_F2);
pub const GHI: TraceMatrixFamily = family!("M_GHI", 4, M_GHI);
pub const J: TraceMatrixFamily = family!("M_J", 4, M_J);
pub const K: TraceMatrixFamily = family!("M_K", 5, M_K);
pub const LM: TraceMatrixFamily = family!("M_LM", 6, M_LM);
pub const N: TraceMatrixFamily = family!("M_N", 8, M_N);
pub const M: TraceMatrixFamily = family!("M_M", 12, M_M);
pub const O: TraceMatrixFamily = family!("M_O", 12, M_O);
