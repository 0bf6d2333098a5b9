//! Traces of torsion classes on `Sym^n V` and on `M_lambda`.
//!
//! The oracle route expands `1/det(id - t*T^-1)` as a power series: its
//! coefficients satisfy a four-term linear recurrence read off the
//! characteristic polynomial of `T^-1`. Traces on `M_lambda` follow from the
//! symmetric-power traces by a determinantal product rule. The closed routes
//! are piecewise quasi-polynomials in `n` and the per-family lookup matrices
//! of [`matrices`]; every closed value must agree with the oracle.

pub mod matrices;

use std::borrow::Cow;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::exact::{char_poly, mat_inverse_torsion, Rat};
use crate::torsion::{classes, SignRule, TorsionClass, TraceFamily};
use crate::weyl::HighestWeight;

pub use matrices::TraceMatrixFamily;

/// `values[n] = Tr(T^-1, Sym^n V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTraceSeq {
    pub source: usize,
    pub values: Vec<BigInt>,
}

pub fn sym_trace_oracle(class: &TorsionClass, nmax: usize) -> SymTraceSeq {
    let inverse = mat_inverse_torsion(class.matrix(), class.order)
        .expect("validated classes have their recorded order");
    let [c0, c1, c2, c3, _] = char_poly(&inverse);
    // det(x - A) = x^4 - e1 x^3 + e2 x^2 - e3 x + e4
    let e = [-c3, c2, -c1, c0];
    let mut values: Vec<BigInt> = Vec::with_capacity(nmax + 1);
    values.push(BigInt::one());
    for n in 1..=nmax {
        let mut h = BigInt::zero();
        for (i, ei) in e.iter().enumerate() {
            if let Some(prev) = n.checked_sub(i + 1).map(|k| &values[k]) {
                if i % 2 == 0 {
                    h += ei * prev;
                } else {
                    h -= ei * prev;
                }
            }
        }
        values.push(h);
    }
    SymTraceSeq { source: class.id, values }
}

/// Length of the shared per-class cache; larger requests are computed afresh.
pub const CACHE_LEN: usize = 512;

static SYM_CACHE: Lazy<Vec<SymTraceSeq>> =
    Lazy::new(|| classes().iter().map(|c| sym_trace_oracle(c, CACHE_LEN - 1)).collect());

/// Oracle values `h_0..h_nmax` for `class`, from the cache when it reaches.
pub fn sym_traces(class: &TorsionClass, nmax: usize) -> Cow<'static, [BigInt]> {
    if nmax < CACHE_LEN {
        Cow::Borrowed(&SYM_CACHE[class.id - 1].values[..=nmax])
    } else {
        Cow::Owned(sym_trace_oracle(class, nmax).values)
    }
}

fn sym_at(h: &[BigInt], n: i64) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        h[n as usize].clone()
    }
}

/// `Tr(T^-1, M_lambda)` from the symmetric-power traces:
/// `H_{n1,n2} = H_{n1}(H_{n2} + H_{n2-2}) - (H_{n1+1} + H_{n1-1}) H_{n2-1}`.
pub fn weight_trace(class: &TorsionClass, weight: HighestWeight) -> BigInt {
    let (n1, n2) = (weight.n1() as i64, weight.n2() as i64);
    let h = sym_traces(class, n1 as usize + 1);
    sym_at(&h, n1) * (sym_at(&h, n2) + sym_at(&h, n2 - 2))
        - (sym_at(&h, n1 + 1) + sym_at(&h, n1 - 1)) * sym_at(&h, n2 - 1)
}

/// Weyl dimension of `M_lambda`: `(n1+2)(n2+1)((n1+2)^2 - (n2+1)^2)/6`.
pub fn weyl_dimension(weight: HighestWeight) -> BigInt {
    let a = BigInt::from(weight.n1() + 2);
    let b = BigInt::from(weight.n2() + 1);
    &a * &b * (&a * &a - &b * &b) / 6
}

/// The lookup matrix of a family; `None` for the identity family, whose
/// trace is the Weyl dimension.
pub fn family_matrix(family: TraceFamily) -> Option<TraceMatrixFamily> {
    use TraceFamily as Tf;
    Some(match family {
        Tf::A => return None,
        Tf::BC => matrices::BC,
        Tf::DE => matrices::DE,
        Tf::F => matrices::F,
        Tf::F2 => matrices::F2,
        Tf::GHI => matrices::GHI,
        Tf::J => matrices::J,
        Tf::K => matrices::K,
        Tf::LM => matrices::LM,
        Tf::M => matrices::M,
        Tf::N => matrices::N,
        Tf::O => matrices::O,
    })
}

/// Family trace before the sign rule.
pub fn family_trace(family: TraceFamily, weight: HighestWeight) -> Rat {
    match family_matrix(family) {
        None => Rat::int(weyl_dimension(weight)),
        Some(m) => m.eval(weight.n1(), weight.n2()),
    }
}

fn m1_sign(rule: SignRule, weight: HighestWeight) -> i64 {
    match rule {
        SignRule::AlternatingM1 if weight.m1 % 2 == 1 => -1,
        _ => 1,
    }
}

/// Closed-form `Tr(T^-1, M_lambda)` via the family matrix and sign rule.
pub fn weight_trace_closed(class: &TorsionClass, weight: HighestWeight) -> Rat {
    family_trace(class.family, weight) * Rat::from(m1_sign(class.sign_rule, weight))
}

/// Piecewise shape of `Tr(T^-1, Sym^n V)` shared by a group of classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SymShape {
    Cubic,
    Involution,
    Order3Pair,
    Order3Single,
    Order4Pair,
    Order4Single,
    Order5,
    Order6Single,
    Order6Pair,
    Order8,
    Order12Pair,
    Order12Mixed,
}

/// Shape and whether the class is the negative of a base class, which
/// contributes `(-1)^n`.
fn sym_shape(id: usize) -> (SymShape, bool) {
    use SymShape::*;
    match id {
        1 => (Cubic, false),
        2 => (Cubic, true),
        3 | 4 => (Involution, false),
        5..=7 => (Order3Pair, false),
        22..=24 => (Order3Pair, true),
        8 | 9 => (Order3Single, false),
        27 | 28 => (Order3Single, true),
        10..=13 => (Order4Pair, false),
        14 | 15 => (Order4Single, false),
        16 | 17 => (Order4Single, true),
        18..=21 => (Order5, false),
        43..=46 => (Order5, true),
        25 | 26 => (Order6Single, false),
        29 | 30 => (Order6Single, true),
        31..=38 => (Order6Pair, false),
        39..=42 => (Order8, false),
        47 | 48 => (Order12Pair, false),
        49..=52 => (Order12Mixed, false),
        53..=56 => (Order12Mixed, true),
        _ => panic!("torsion class ids run 1..=56"),
    }
}

fn sym_shape_value(shape: SymShape, n: u64) -> Rat {
    use SymShape::*;
    let r = |num: i64, den: i64| Rat::new(num, den);
    let ni = n as i64;
    match shape {
        Cubic => r((ni + 1) * (ni + 2) * (ni + 3), 6),
        Involution if n.is_multiple_of(2) => r(ni + 2, 2),
        Involution => Rat::zero(),
        Order3Pair => match n % 3 {
            0 => r(ni + 3, 3),
            1 => r(-(2 * ni + 4), 3),
            _ => r(ni + 1, 3),
        },
        Order3Single => match n % 3 {
            0 => r(ni + 3, 3),
            1 => r(ni + 2, 3),
            _ => r(ni + 1, 3),
        },
        Order4Pair => match n % 4 {
            0 => r(ni + 2, 2),
            2 => r(-(ni + 2), 2),
            _ => Rat::zero(),
        },
        Order4Single => match n % 4 {
            1 => r(ni + 3, 2),
            3 => r(ni + 1, 2),
            _ => r(ni + 2, 2),
        },
        Order5 => match n % 5 {
            0 => Rat::one(),
            1 => -Rat::one(),
            _ => Rat::zero(),
        },
        Order6Single => Rat::from(ni + [1, 2, 3, 3, 2, 1][(n % 6) as usize]),
        Order6Pair => Rat::from([1, 0, -1, 0, 0, 0][(n % 6) as usize]),
        Order8 if n.is_multiple_of(4) => Rat::from(if (n / 4).is_multiple_of(2) { 1 } else { -1 }),
        Order8 => Rat::zero(),
        Order12Pair => Rat::from([1, 0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0][(n % 12) as usize]),
        Order12Mixed => Rat::from([1, -1, -1, 2, 0, -2, 1, 1, -1, 0, 0, 0][(n % 12) as usize]),
    }
}

/// Closed-form `Tr(T^-1, Sym^n V)`.
pub fn sym_trace_closed(class: &TorsionClass, n: u64) -> BigInt {
    let (shape, negated) = sym_shape(class.id);
    let mut v = sym_shape_value(shape, n);
    if negated && n % 2 == 1 {
        v = -v;
    }
    v.to_integer().expect("piecewise trace formulas are integral")
}

/// A lookup cell that disagrees with the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMismatch {
    pub class_id: usize,
    pub matrix: &'static str,
    pub row: usize,
    pub col: usize,
    pub weight: HighestWeight,
    pub closed: Rat,
    pub oracle: BigInt,
}

/// Compares closed and oracle traces for every class and every weight with
/// `n1 <= n1_max`, reporting each offending cell once per class.
pub fn audit_trace_matrices(n1_max: u64) -> Vec<CellMismatch> {
    let mut out: Vec<CellMismatch> = Vec::new();
    for class in classes() {
        let matrix = family_matrix(class.family);
        let modulus = matrix.map_or(1, |m| m.modulus) as u64;
        for weight in HighestWeight::all_up_to(n1_max) {
            let closed = weight_trace_closed(class, weight);
            let oracle = weight_trace(class, weight);
            if closed != Rat::int(oracle.clone()) {
                let row = (weight.n1() % modulus) as usize;
                let col = (weight.n2() % modulus) as usize;
                let seen = out
                    .iter()
                    .any(|m| m.class_id == class.id && m.row == row && m.col == col);
                if !seen {
                    out.push(CellMismatch {
                        class_id: class.id,
                        matrix: matrix.map_or("M_A", |m| m.name),
                        row,
                        col,
                        weight,
                        closed,
                        oracle,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torsion::class;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(sym_trace_oracle(class(1), 3).values, ints(&[1, 4, 10, 20]));
        assert_eq!(sym_trace_oracle(class(3), 2).values, ints(&[1, 0, 2]));
        assert_eq!(sym_trace_oracle(class(18), 6).values, ints(&[1, -1, 0, 0, 0, 1, -1]));
    }

    #[test]
    fn closed_examples() {
        assert_eq!(sym_trace_closed(class(5), 4), BigInt::from(-4));
        assert_eq!(sym_trace_closed(class(25), 5), BigInt::from(6));
        assert_eq!(sym_trace_closed(class(39), 8), BigInt::from(1));
    }

    #[test]
    fn weight_trace_examples() {
        assert_eq!(weight_trace(class(1), HighestWeight::new(0, 0)), BigInt::from(1));
        assert_eq!(weight_trace(class(1), HighestWeight::new(1, 1)), BigInt::from(16));
        assert_eq!(weight_trace_closed(class(2), HighestWeight::new(1, 0)), Rat::from(-4));
        assert_eq!(weight_trace_closed(class(18), HighestWeight::new(0, 0)), Rat::one());
        let w = HighestWeight::from_eps(8, 4);
        assert_eq!(weight_trace_closed(class(3), w), Rat::from(10 * 5 / 2));
    }

    #[test]
    fn matrix_sides() {
        let sides: Vec<usize> = TraceFamily::ALL
            .iter()
            .filter_map(|&f| family_matrix(f))
            .map(|m| m.modulus)
            .collect();
        assert_eq!(sides, vec![2, 3, 3, 6, 4, 4, 5, 6, 12, 8, 12]);
    }

    #[test]
    fn conjugate_classes_share_sequences() {
        for group in [&[5, 6, 7][..], &[39, 40, 41, 42], &[18, 19, 20, 21], &[31, 32, 33, 34, 35, 36, 37, 38]] {
            let first = sym_traces(class(group[0]), 60).into_owned();
            for &id in &group[1..] {
                assert_eq!(&*sym_traces(class(id), 60), &first[..], "T{id}");
            }
        }
    }

    #[test]
    fn uncached_path_matches_cache() {
        let long = sym_traces(class(25), CACHE_LEN + 10);
        assert_eq!(&long[..CACHE_LEN], &*sym_traces(class(25), CACHE_LEN - 1));
        assert_eq!(long[CACHE_LEN + 5], sym_trace_closed(class(25), (CACHE_LEN + 5) as u64));
    }

    proptest! {
        #[test]
        fn sym_specialization(id in 1usize..=56, n in 0u64..120) {
            let c = class(id);
            let h = sym_traces(c, n as usize);
            prop_assert_eq!(weight_trace(c, HighestWeight::new(n, 0)), h[n as usize].clone());
        }

        #[test]
        fn identity_trace_is_weyl_dimension(m1 in 0u64..60, m2 in 0u64..60) {
            let w = HighestWeight::new(m1, m2);
            let d = weight_trace(class(1), w);
            prop_assert!(d > BigInt::zero());
            prop_assert_eq!(d, weyl_dimension(w));
        }
    }
}
