//! Weyl group of type C2, the shifted (dot) action on weights, and the
//! Kostant coset representatives of the three standard parabolics.
//!
//! Weights are written in epsilon coordinates `(a, b) = a*e1 + b*e2`. The
//! simple reflections act by `s1: (a, b) -> (b, a)` and `s2: (a, b) -> (a, -b)`.
//! A word such as `[S1, S2]` denotes the composite `s1 . s2`, so its rightmost
//! letter acts first.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Highest weight `m1*lambda1 + m2*lambda2` of an irreducible representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HighestWeight {
    pub m1: u64,
    pub m2: u64,
}

impl HighestWeight {
    pub fn new(m1: u64, m2: u64) -> Self {
        HighestWeight { m1, m2 }
    }

    /// Builds the weight with epsilon coordinates `(n1, n2)`; requires `n1 >= n2`.
    pub fn from_eps(n1: u64, n2: u64) -> Self {
        assert!(n1 >= n2, "dominant weight needs n1 >= n2");
        HighestWeight { m1: n1 - n2, m2: n2 }
    }

    pub fn n1(&self) -> u64 {
        self.m1 + self.m2
    }

    pub fn n2(&self) -> u64 {
        self.m2
    }

    /// The weight itself as an epsilon pair.
    pub fn eps(&self) -> EpsPair {
        EpsPair::new(self.n1() as i64, self.n2() as i64)
    }

    /// Dominant weights with `n1 <= n1_max`, ordered by `(n1, n2)`.
    pub fn all_up_to(n1_max: u64) -> impl Iterator<Item = HighestWeight> {
        (0..=n1_max).flat_map(|n1| (0..=n1).map(move |n2| HighestWeight::from_eps(n1, n2)))
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m1, self.m2)
    }
}

/// The element `a*e1 + b*e2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EpsPair {
    pub a: i64,
    pub b: i64,
}

impl EpsPair {
    pub const fn new(a: i64, b: i64) -> Self {
        EpsPair { a, b }
    }
}

impl fmt::Display for EpsPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Half the sum of positive roots, `2*e1 + e2`.
pub const RHO: EpsPair = EpsPair::new(2, 1);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reflection {
    S1,
    S2,
}

impl Reflection {
    pub fn apply(self, p: EpsPair) -> EpsPair {
        match self {
            Reflection::S1 => EpsPair::new(p.b, p.a),
            Reflection::S2 => EpsPair::new(p.a, -p.b),
        }
    }
}

use Reflection::{S1, S2};

const WORDS: [&[Reflection]; 8] = [
    &[],
    &[S1],
    &[S2],
    &[S1, S2],
    &[S2, S1],
    &[S1, S2, S1],
    &[S2, S1, S2],
    &[S1, S2, S1, S2],
];

/// One of the eight elements `w0..w7`, indexed as in the standard table of
/// reduced words ordered by length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement(u8);

impl WeylElement {
    pub const ALL: [WeylElement; 8] = [
        WeylElement(0),
        WeylElement(1),
        WeylElement(2),
        WeylElement(3),
        WeylElement(4),
        WeylElement(5),
        WeylElement(6),
        WeylElement(7),
    ];

    /// Panics unless `index < 8`.
    pub fn new(index: usize) -> Self {
        assert!(index < 8, "Weyl group of C2 has eight elements");
        WeylElement(index as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn label(self) -> String {
        format!("w{}", self.0)
    }

    pub fn word(self) -> &'static [Reflection] {
        WORDS[self.index()]
    }

    pub fn length(self) -> usize {
        self.word().len()
    }

    /// Linear action on epsilon coordinates.
    pub fn apply(self, p: EpsPair) -> EpsPair {
        self.word().iter().rev().fold(p, |acc, s| s.apply(acc))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{}", self.0)
    }
}

/// `w . lambda = w(lambda + rho) - rho`, evaluated by composing reflections.
pub fn dot_action(w: WeylElement, weight: HighestWeight) -> EpsPair {
    let p = weight.eps();
    let moved = w.apply(EpsPair::new(p.a + RHO.a, p.b + RHO.b));
    EpsPair::new(moved.a - RHO.a, moved.b - RHO.b)
}

/// Affine form `c_m1*m1 + c_m2*m2 + c` in the highest-weight coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineM {
    pub m1: i64,
    pub m2: i64,
    pub c: i64,
}

impl AffineM {
    pub const fn new(m1: i64, m2: i64, c: i64) -> Self {
        AffineM { m1, m2, c }
    }

    pub fn eval(&self, weight: HighestWeight) -> i64 {
        self.m1 * weight.m1 as i64 + self.m2 * weight.m2 as i64 + self.c
    }
}

/// Tabulated closed form of `w . lambda` for each of the eight elements.
pub const DOT_CLOSED_FORMS: [(AffineM, AffineM); 8] = [
    (AffineM::new(1, 1, 0), AffineM::new(0, 1, 0)),
    (AffineM::new(0, 1, -1), AffineM::new(1, 1, 1)),
    (AffineM::new(1, 1, 0), AffineM::new(0, -1, -2)),
    (AffineM::new(0, -1, -3), AffineM::new(1, 1, 1)),
    (AffineM::new(0, 1, -1), AffineM::new(-1, -1, -3)),
    (AffineM::new(-1, -1, -4), AffineM::new(0, 1, 0)),
    (AffineM::new(0, -1, -3), AffineM::new(-1, -1, -3)),
    (AffineM::new(-1, -1, -4), AffineM::new(0, -1, -2)),
];

pub fn dot_action_closed(w: WeylElement, weight: HighestWeight) -> EpsPair {
    let (a, b) = DOT_CLOSED_FORMS[w.index()];
    EpsPair::new(a.eval(weight), b.eval(weight))
}

/// The standard parabolics: the Borel and the two maximal ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parabolic {
    P0,
    P1,
    P2,
}

/// Kostant representatives of `W^P`, ordered by length.
pub fn kostant_representatives(parabolic: Parabolic) -> Vec<WeylElement> {
    let indices: &[usize] = match parabolic {
        Parabolic::P0 => &[0, 1, 2, 3, 4, 5, 6, 7],
        Parabolic::P1 => &[0, 1, 3, 5],
        Parabolic::P2 => &[0, 2, 4, 6],
    };
    indices.iter().map(|&i| WeylElement::new(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn lengths() {
        let lengths: Vec<usize> = WeylElement::ALL.iter().map(|w| w.length()).collect();
        assert_eq!(lengths, vec![0, 1, 1, 2, 2, 3, 3, 4]);
    }

    #[test]
    fn dot_action_examples() {
        let w = |i| WeylElement::new(i);
        assert_eq!(dot_action(w(7), HighestWeight::new(0, 0)), EpsPair::new(-4, -2));
        assert_eq!(dot_action(w(3), HighestWeight::new(2, 1)), EpsPair::new(-4, 4));
        assert_eq!(dot_action(w(0), HighestWeight::new(5, 3)), EpsPair::new(8, 3));
    }

    #[test]
    fn group_has_eight_distinct_elements() {
        let probe = EpsPair::new(7, 3);
        let images: HashSet<(i64, i64)> = WeylElement::ALL
            .iter()
            .map(|w| {
                let p = w.apply(probe);
                (p.a, p.b)
            })
            .collect();
        assert_eq!(images.len(), 8);
    }

    #[test]
    fn kostant_sets() {
        let labels = |p| -> Vec<String> {
            kostant_representatives(p).into_iter().map(|w| w.label()).collect()
        };
        assert_eq!(labels(Parabolic::P1), ["w0", "w1", "w3", "w5"]);
        assert_eq!(labels(Parabolic::P2), ["w0", "w2", "w4", "w6"]);
        assert_eq!(labels(Parabolic::P0).len(), 8);
    }

    proptest! {
        #[test]
        fn reflection_route_matches_closed_forms(m1 in 0u64..40, m2 in 0u64..40) {
            let weight = HighestWeight::new(m1, m2);
            for w in WeylElement::ALL {
                prop_assert_eq!(dot_action(w, weight), dot_action_closed(w, weight));
            }
            prop_assert_eq!(dot_action(WeylElement::new(0), weight), weight.eps());
        }
    }
}
