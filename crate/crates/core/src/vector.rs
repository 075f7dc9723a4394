use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use num_traits::Zero;

/// Exact rational scalar used throughout the crate.
pub type Rational = Ratio<i64>;

/// A vector in the ambient Euclidean space of a root-system realization.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AmbientVector {
    coords: Vec<Rational>,
}

impl AmbientVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    /// Builds `coords / 2`; convenient for the half-integral roots of E and F.
    pub fn halves(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| Rational::new(c, 2)).collect())
    }

    /// The unit vector `e_i` (0-based).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = Rational::from_integer(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Euclidean product. Callers guarantee equal dimensions.
    pub(crate) fn dot(&self, other: &Self) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, s: Rational) -> Self {
        Self::new(self.coords.iter().map(|c| c * s).collect())
    }

    /// `self + s * other`
    pub fn add_scaled(&self, s: Rational, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + s * b)
                .collect(),
        )
    }
}

impl Add for &AmbientVector {
    type Output = AmbientVector;
    fn add(self, rhs: Self) -> AmbientVector {
        self.add_scaled(Rational::from_integer(1), rhs)
    }
}

impl Sub for &AmbientVector {
    type Output = AmbientVector;
    fn sub(self, rhs: Self) -> AmbientVector {
        self.add_scaled(Rational::from_integer(-1), rhs)
    }
}

impl Neg for &AmbientVector {
    type Output = AmbientVector;
    fn neg(self) -> AmbientVector {
        AmbientVector::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for AmbientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}
