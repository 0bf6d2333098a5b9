//! Exact rationals and 4x4 integer matrices.
//!
//! [`Rat`] wraps an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. [`Mat4`] is a dense 4x4 matrix over the integers with
//! the handful of operations needed for symplectic torsion elements.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn int(value: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|n| n.to_i64())
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRatError(String);

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || ParseRatError(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rat::new(num, den))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rat {
    fn from(value: i64) -> Self {
        Rat::int(value)
    }
}

impl From<BigInt> for Rat {
    fn from(value: BigInt) -> Self {
        Rat::int(value)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rat> for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Dense 4x4 integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat4 {
    entries: [[BigInt; 4]; 4],
}

impl Mat4 {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        Mat4 {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn from_i64(rows: [[i64; 4]; 4]) -> Self {
        Mat4::from_fn(|i, j| BigInt::from(rows[i][j]))
    }

    pub fn identity() -> Self {
        Mat4::from_fn(|i, j| BigInt::from((i == j) as i64))
    }

    /// The standard symplectic form `[[0, id2], [-id2, 0]]`.
    pub fn symplectic_form() -> Self {
        Mat4::from_i64([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[[BigInt; 4]; 4] {
        &self.entries
    }

    /// Entries as machine integers; `None` if any entry overflows.
    pub fn to_i64(&self) -> Option<[[i64; 4]; 4]> {
        let mut out = [[0i64; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] = self.entries[i][j].to_i64()?;
            }
        }
        Some(out)
    }

    pub fn transpose(&self) -> Self {
        Mat4::from_fn(|i, j| self.entries[j][i].clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Mat4::identity(), |acc, _| mat_mul(&acc, self))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat4::identity()
    }

    pub fn trace(&self) -> BigInt {
        (0..4).map(|i| self.entries[i][i].clone()).sum()
    }
}

impl Neg for &Mat4 {
    type Output = Mat4;
    fn neg(self) -> Mat4 {
        Mat4::from_fn(|i, j| -&self.entries[i][j])
    }
}

impl Neg for Mat4 {
    type Output = Mat4;
    fn neg(self) -> Mat4 {
        -&self
    }
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    Mat4::from_fn(|i, j| (0..4).map(|k| &a.entries[i][k] * &b.entries[k][j]).sum())
}

/// Polynomial in x with integer coefficients, index = power.
type Poly = Vec<BigInt>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_signed(acc: &mut Poly, term: &Poly, negate: bool) {
    if acc.len() < term.len() {
        acc.resize(term.len(), BigInt::zero());
    }
    for (slot, t) in acc.iter_mut().zip(term) {
        if negate {
            *slot -= t;
        } else {
            *slot += t;
        }
    }
}

/// Laplace expansion along the first row; `rows` and `cols` select the minor.
fn poly_det(m: &[[Poly; 4]; 4], rows: &[usize], cols: &[usize]) -> Poly {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let mut acc: Poly = vec![BigInt::zero()];
    for (k, &c) in cols.iter().enumerate() {
        let minor_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = poly_det(m, &rows[1..], &minor_cols);
        let term = poly_mul(&m[rows[0]][c], &minor);
        poly_add_signed(&mut acc, &term, k % 2 == 1);
    }
    acc
}

/// Coefficients `c0..c4` of `det(x*id - m)`, index = power of x.
pub fn char_poly(m: &Mat4) -> [BigInt; 5] {
    let xm: [[Poly; 4]; 4] = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let c = -&m.entries[i][j];
            if i == j {
                vec![c, BigInt::one()]
            } else {
                vec![c]
            }
        })
    });
    let det = poly_det(&xm, &[0, 1, 2, 3], &[0, 1, 2, 3]);
    std::array::from_fn(|k| det.get(k).cloned().unwrap_or_default())
}

pub fn is_symplectic(m: &Mat4) -> bool {
    let j = Mat4::symplectic_form();
    mat_mul(&mat_mul(&m.transpose(), &j), m) == j
}

/// Inverse of a matrix of known finite order, computed as `m^(order-1)`.
pub fn mat_inverse_torsion(m: &Mat4, order: u32) -> Result<Mat4> {
    if order == 0 || !m.pow(order).is_identity() {
        return Err(Error::NotTorsion { order });
    }
    let inv = m.pow(order - 1);
    debug_assert!(mat_mul(m, &inv).is_identity());
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn coeffs(m: &Mat4) -> Vec<i64> {
        char_poly(m).iter().map(|c| c.to_i64().unwrap()).collect()
    }

    /// Faddeev-LeVerrier: an independent route to the characteristic polynomial.
    fn faddeev_leverrier(m: &Mat4) -> Vec<i64> {
        let mut c = vec![BigInt::zero(); 5];
        c[4] = BigInt::one();
        let mut mk = Mat4::from_fn(|_, _| BigInt::zero());
        for k in 1..=4usize {
            let shifted = Mat4::from_fn(|i, j| {
                let diag = if i == j { c[5 - k].clone() } else { BigInt::zero() };
                mk.entry(i, j) + diag
            });
            mk = mat_mul(m, &shifted);
            c[4 - k] = -mk.trace() / BigInt::from(k);
        }
        c.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn identity_products() {
        assert_eq!(mat_mul(&Mat4::identity(), &Mat4::identity()), Mat4::identity());
        let j = Mat4::symplectic_form();
        assert_eq!(mat_mul(&j, &j), -Mat4::identity());
    }

    #[test]
    fn block_diagonal_involution_squares_to_identity() {
        let t4 = Mat4::from_i64([[1, 0, 0, 0], [1, -1, 0, 0], [0, 0, 1, 1], [0, 0, 0, -1]]);
        assert!(mat_mul(&t4, &t4).is_identity());
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(coeffs(&Mat4::identity()), vec![1, -4, 6, -4, 1]);
        let diag = Mat4::from_i64([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]);
        assert_eq!(coeffs(&diag), vec![1, 0, -2, 0, 1]);
        let s = Mat4::from_i64([[0, 1, 0, 0], [0, 0, -1, 0], [0, 0, -1, 1], [1, 1, -1, 0]]);
        assert_eq!(coeffs(&s), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn symplectic_examples() {
        assert!(is_symplectic(&Mat4::identity()));
        assert!(is_symplectic(&Mat4::symplectic_form()));
        let d = Mat4::from_i64([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert!(!is_symplectic(&d));
    }

    #[test]
    fn torsion_inverse() {
        assert_eq!(mat_inverse_torsion(&Mat4::identity(), 1).unwrap(), Mat4::identity());
        let s = Mat4::from_i64([[0, 1, 0, 0], [0, 0, -1, 0], [0, 0, -1, 1], [1, 1, -1, 0]]);
        let inv = mat_inverse_torsion(&s, 5).unwrap();
        assert_eq!(inv, s.pow(4));
        assert!(mat_mul(&inv, &s).is_identity());
        assert!(matches!(mat_inverse_torsion(&s, 4), Err(Error::NotTorsion { order: 4 })));
    }

    #[test]
    fn rat_display_and_parse() {
        assert_eq!(Rat::new(6, -144).to_string(), "-1/24");
        assert_eq!(Rat::new(10, 5).to_string(), "2");
        assert_eq!("-7/14".parse::<Rat>().unwrap(), Rat::new(-1, 2));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
        let json = serde_json::to_string(&Rat::new(7, 144)).unwrap();
        assert_eq!(json, "\"7/144\"");
        assert_eq!(serde_json::from_str::<Rat>(&json).unwrap(), Rat::new(7, 144));
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-200i64..200, 1i64..60).prop_map(|(n, d)| Rat::new(n, d))
    }

    fn small_mat() -> impl Strategy<Value = Mat4> {
        prop::array::uniform4(prop::array::uniform4(-4i64..=4)).prop_map(Mat4::from_i64)
    }

    proptest! {
        #[test]
        fn rat_field_laws(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a - &a, Rat::zero());
        }

        #[test]
        fn rat_reduced_form(n in -10_000i64..10_000, d in 1i64..500, k in 1i64..50) {
            let r = Rat::new(n * k, d * k);
            prop_assert_eq!(&r, &Rat::new(n, d));
            prop_assert!(r.denom() > &BigInt::zero());
            let g = num_integer::Integer::gcd(r.numer(), r.denom());
            prop_assert!(g.is_one() || r.is_zero());
            prop_assert_eq!(r.to_string().parse::<Rat>().unwrap(), r);
        }

        #[test]
        fn char_poly_matches_faddeev_leverrier(m in small_mat()) {
            prop_assert_eq!(coeffs(&m), faddeev_leverrier(&m));
        }
    }
}
