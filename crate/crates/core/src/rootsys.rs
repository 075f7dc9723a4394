//! Root data of the simple Dynkin types in explicit rational coordinates.
//!
//! Exceptional types use the realizations below, with node labels following
//! the usual (Bourbaki) Dynkin diagrams:
//!
//! ```text
//! E8 in R^8:  a1 = (e1 - e2 - ... - e7 + e8)/2,  a2 = e1 + e2,
//!             a_i = e_{i-1} - e_{i-2}  (3 <= i <= 8)
//! E6, E7:     the first 6 (resp. 7) of the E8 simple roots, still in R^8
//! F4 in R^4:  a1 = e2 - e3, a2 = e3 - e4, a3 = e4, a4 = (e1 - e2 - e3 - e4)/2
//! G2 in R^3:  a1 = e2 - e3, a2 = e1 - 2 e2 + e3   (sum-zero plane)
//! ```
//!
//! Classical types use the standard orthonormal realizations:
//!
//! ```text
//! A_n in R^{n+1}: a_i = e_i - e_{i+1}
//! B_n in R^n:     a_i = e_i - e_{i+1} (i < n),  a_n = e_n
//! C_n in R^n:     a_i = e_i - e_{i+1} (i < n),  a_n = 2 e_n
//! D_n in R^n:     a_i = e_i - e_{i+1} (i < n),  a_n = e_{n-1} + e_n
//! ```
//!
//! Positive roots are generated from the simple roots by root-string
//! closure, and fundamental weights are obtained by inverting the Gram
//! matrix of the simple roots, so every fundamental weight lies in the span
//! of the roots (for A_n that is the sum-zero hyperplane).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::{linalg, AmbientVector, Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// A simple Dynkin type such as `E6` or `B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    series: Series,
    rank: usize,
}

impl DynkinType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let constraint = match series {
            Series::A if rank < 1 => Some("A requires rank >= 1"),
            Series::B if rank < 2 => Some("B requires rank >= 2"),
            Series::C if rank < 2 => Some("C requires rank >= 2"),
            Series::D if rank < 3 => Some("D requires rank >= 3"),
            Series::E if !(6..=8).contains(&rank) => Some("E requires rank 6, 7 or 8"),
            Series::F if rank != 4 => Some("F requires rank 4"),
            Series::G if rank != 2 => Some("G requires rank 2"),
            _ => None,
        };
        match constraint {
            Some(constraint) => Err(Error::InvalidRank {
                series: series.letter(),
                rank,
                constraint,
            }),
            None => Ok(Self { series, rank }),
        }
    }

    pub fn series(self) -> Series {
        self.series
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn ambient_dim(self) -> usize {
        match self.series {
            Series::A => self.rank + 1,
            Series::B | Series::C | Series::D => self.rank,
            Series::E => 8,
            Series::F => 4,
            Series::G => 3,
        }
    }

    /// Every exceptional (type, node) pair: 6 + 7 + 8 + 4 + 2 = 27 nodes over
    /// five types, i.e. the 26 distinct varieties plus the E6 duplicate.
    pub fn exceptional() -> Vec<DynkinType> {
        [
            (Series::E, 6),
            (Series::E, 7),
            (Series::E, 8),
            (Series::F, 4),
            (Series::G, 2),
        ]
        .into_iter()
        .map(|(s, r)| DynkinType { series: s, rank: r })
        .collect()
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::ParseType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        DynkinType::new(series, rank)
    }
}

/// A weight `sum a_i w_i` in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightCoeffs {
    dynkin: DynkinType,
    a: Vec<i64>,
}

impl WeightCoeffs {
    pub fn new(dynkin: DynkinType, a: Vec<i64>) -> Result<Self> {
        if a.len() != dynkin.rank() {
            return Err(Error::WrongLength {
                expected: dynkin.rank(),
                found: a.len(),
            });
        }
        Ok(Self { dynkin, a })
    }

    pub fn zero(dynkin: DynkinType) -> Self {
        Self {
            dynkin,
            a: vec![0; dynkin.rank()],
        }
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.a
    }

    /// Coefficient at a 1-based node label.
    pub fn at(&self, node: usize) -> i64 {
        self.a[node - 1]
    }

    pub(crate) fn with(&self, node: usize, value: i64) -> Self {
        let mut a = self.a.clone();
        a[node - 1] = value;
        Self {
            dynkin: self.dynkin,
            a,
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.a.iter().all(|&x| x >= 0)
    }
}

/// Weyl-chamber position of a weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChamberClass {
    /// Some positive root is orthogonal to the weight.
    Singular,
    /// No positive root is orthogonal; `index` positive roots pair negatively.
    Regular {
        index: usize,
        dominant_rep: AmbientVector,
        reflection_count: usize,
    },
}

impl ChamberClass {
    pub fn index(&self) -> Option<usize> {
        match self {
            ChamberClass::Singular => None,
            ChamberClass::Regular { index, .. } => Some(*index),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    dynkin: DynkinType,
    simple_roots: Vec<AmbientVector>,
    positive_roots: Vec<AmbientVector>,
    /// Simple-root coordinates of each positive root, parallel to `positive_roots`.
    root_coeffs: Vec<Vec<i64>>,
    fundamental_weights: Vec<AmbientVector>,
    rho: AmbientVector,
    /// `(a_i, a_i) / 2`, cached for coroot pairings.
    half_norms: Vec<Rational>,
    /// `<w_i, a^v>` for each positive root `a` (rows) and node `i`.
    coroot_coeffs: Vec<Vec<i64>>,
    /// Cartan integers `<a_j, a_i^v>`, row `j` = `a_j` in the fundamental basis.
    cartan: Vec<Vec<i64>>,
}

fn simple_roots(dynkin: DynkinType) -> Vec<AmbientVector> {
    let n = dynkin.rank();
    let dim = dynkin.ambient_dim();
    let diff = |i: usize, j: usize| &AmbientVector::unit(dim, i) - &AmbientVector::unit(dim, j);
    match dynkin.series() {
        Series::A => (0..n).map(|i| diff(i, i + 1)).collect(),
        Series::B | Series::C | Series::D => {
            let mut roots: Vec<_> = (0..n - 1).map(|i| diff(i, i + 1)).collect();
            let last = match dynkin.series() {
                Series::B => AmbientVector::unit(dim, n - 1),
                Series::C => AmbientVector::unit(dim, n - 1).scale(Rational::from_integer(2)),
                _ => &AmbientVector::unit(dim, n - 2) + &AmbientVector::unit(dim, n - 1),
            };
            roots.push(last);
            roots
        }
        Series::E => {
            let mut roots = vec![
                AmbientVector::halves(&[1, -1, -1, -1, -1, -1, -1, 1]),
                AmbientVector::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]),
            ];
            // a_i = e_{i-1} - e_{i-2}, 1-based
            roots.extend((3..=n).map(|i| diff(i - 2, i - 3)));
            roots
        }
        Series::F => vec![
            AmbientVector::from_ints(&[0, 1, -1, 0]),
            AmbientVector::from_ints(&[0, 0, 1, -1]),
            AmbientVector::from_ints(&[0, 0, 0, 1]),
            AmbientVector::halves(&[1, -1, -1, -1]),
        ],
        Series::G => vec![
            AmbientVector::from_ints(&[0, 1, -1]),
            AmbientVector::from_ints(&[1, -2, 1]),
        ],
    }
}

impl RootSystem {
    pub fn new(dynkin: DynkinType) -> Self {
        let simple_roots = simple_roots(dynkin);
        let n = dynkin.rank();
        let half_norms: Vec<Rational> = simple_roots
            .iter()
            .map(|a| a.dot(a) / Rational::from_integer(2))
            .collect();

        // w_i = sum_l X_il a_l with X G = D, G the Gram matrix and
        // D = diag((a_j, a_j)/2).
        let gram: Vec<Vec<Rational>> = simple_roots
            .iter()
            .map(|u| simple_roots.iter().map(|v| u.dot(v)).collect())
            .collect();
        let gram_inv = linalg::invert(&gram).expect("simple roots are linearly independent");
        let dim = dynkin.ambient_dim();
        let fundamental_weights: Vec<AmbientVector> = (0..n)
            .map(|i| {
                (0..n).fold(AmbientVector::zero(dim), |acc, l| {
                    acc.add_scaled(half_norms[i] * gram_inv[i][l], &simple_roots[l])
                })
            })
            .collect();
        let rho = fundamental_weights
            .iter()
            .fold(AmbientVector::zero(dim), |acc, w| &acc + w);

        let mut rs = Self {
            dynkin,
            simple_roots,
            positive_roots: Vec::new(),
            root_coeffs: Vec::new(),
            fundamental_weights,
            rho,
            half_norms,
            coroot_coeffs: Vec::new(),
            cartan: Vec::new(),
        };
        rs.close_positive_roots();
        rs.cartan = rs
            .simple_roots
            .iter()
            .map(|a| integral(&rs.weight_coords(a)))
            .collect();
        rs.coroot_coeffs = rs
            .positive_roots
            .iter()
            .map(|root| {
                let half = root.dot(root) / Rational::from_integer(2);
                integral(
                    &rs.fundamental_weights
                        .iter()
                        .map(|w| w.dot(root) / half)
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        rs
    }

    /// Generates the positive roots height by height: for a positive root `b`
    /// and simple root `a_i`, the `a_i`-string through `b` runs from
    /// `b - p a_i` to `b + q a_i` with `p - q = <b, a_i^v>`.
    fn close_positive_roots(&mut self) {
        let n = self.rank();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut coeffs: Vec<Vec<i64>> = Vec::new();
        let mut vectors: Vec<AmbientVector> = Vec::new();

        let mut layer: Vec<usize> = Vec::new();
        for i in 0..n {
            let mut c = vec![0; n];
            c[i] = 1;
            index.insert(c.clone(), coeffs.len());
            layer.push(coeffs.len());
            coeffs.push(c);
            vectors.push(self.simple_roots[i].clone());
        }

        while !layer.is_empty() {
            let mut next = Vec::new();
            for &b in &layer {
                for i in 0..n {
                    let mut p = 0;
                    let mut probe = coeffs[b].clone();
                    loop {
                        probe[i] -= 1;
                        if index.contains_key(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing = self.coroot_pairing(&vectors[b], i);
                    assert!(pairing.is_integer(), "non-integral coroot pairing");
                    let q = p - pairing.to_integer();
                    if q > 0 {
                        let mut c = coeffs[b].clone();
                        c[i] += 1;
                        if !index.contains_key(&c) {
                            index.insert(c.clone(), coeffs.len());
                            next.push(coeffs.len());
                            vectors.push(
                                vectors[b].add_scaled(Rational::one(), &self.simple_roots[i]),
                            );
                            coeffs.push(c);
                        }
                    }
                }
            }
            layer = next;
        }

        self.positive_roots = vectors;
        self.root_coeffs = coeffs;
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dynkin.ambient_dim()
    }

    pub fn simple_roots(&self) -> &[AmbientVector] {
        &self.simple_roots
    }

    /// Positive roots ordered by height, then by simple-root coordinates.
    pub fn positive_roots(&self) -> &[AmbientVector] {
        &self.positive_roots
    }

    /// Simple-root coordinates, parallel to [`positive_roots`](Self::positive_roots).
    pub fn root_coeffs(&self) -> &[Vec<i64>] {
        &self.root_coeffs
    }

    pub fn fundamental_weights(&self) -> &[AmbientVector] {
        &self.fundamental_weights
    }

    /// Fundamental weight at a 1-based node label.
    pub fn fundamental_weight(&self, node: usize) -> &AmbientVector {
        &self.fundamental_weights[node - 1]
    }

    pub fn rho(&self) -> &AmbientVector {
        &self.rho
    }

    /// The invariant form, realized as the Euclidean product of the ambient
    /// coordinates.
    pub fn pairing(&self, u: &AmbientVector, v: &AmbientVector) -> Result<Rational> {
        pairing(u, v)
    }

    /// `2 (v, a_i) / (a_i, a_i)` for a 0-based simple root index.
    pub fn coroot_pairing(&self, v: &AmbientVector, i: usize) -> Rational {
        v.dot(&self.simple_roots[i]) / self.half_norms[i]
    }

    /// Simple reflection `s_i` for a 0-based index.
    pub fn reflect(&self, v: &AmbientVector, i: usize) -> AmbientVector {
        v.add_scaled(-self.coroot_pairing(v, i), &self.simple_roots[i])
    }

    /// `sum a_i w_i` in ambient coordinates.
    pub fn to_ambient(&self, w: &WeightCoeffs) -> Result<AmbientVector> {
        if w.dynkin() != self.dynkin {
            return Err(Error::TypeMismatch {
                expected: self.dynkin,
                found: w.dynkin(),
            });
        }
        Ok(w.coeffs()
            .iter()
            .zip(&self.fundamental_weights)
            .fold(AmbientVector::zero(self.ambient_dim()), |acc, (&a, fw)| {
                acc.add_scaled(Rational::from_integer(a), fw)
            }))
    }

    /// Fundamental-basis coordinates of an ambient vector: its coroot
    /// pairings with the simple roots.
    pub fn weight_coords(&self, v: &AmbientVector) -> Vec<Rational> {
        (0..self.rank())
            .map(|i| self.coroot_pairing(v, i))
            .collect()
    }

    /// Converts an integral ambient weight back to [`WeightCoeffs`].
    /// Returns `None` if some coroot pairing is not an integer.
    pub fn to_weight_coeffs(&self, v: &AmbientVector) -> Option<WeightCoeffs> {
        let coords = self.weight_coords(v);
        if !coords.iter().all(|c| c.is_integer()) {
            return None;
        }
        Some(WeightCoeffs {
            dynkin: self.dynkin,
            a: coords.iter().map(|c| c.to_integer()).collect(),
        })
    }

    /// Singular / regular-of-index-`p` classification of `mu`. For a regular
    /// weight the dominant representative is reached by repeatedly applying
    /// the lowest-index simple reflection whose coroot pairing is negative.
    pub fn classify_chamber(&self, mu: &AmbientVector) -> ChamberClass {
        let coords = self.weight_coords(mu);
        if coords.iter().all(|c| c.is_integer()) {
            let m: Vec<i64> = coords.iter().map(|c| c.to_integer()).collect();
            return match self.classify_weight(&m) {
                WeightChamber::Singular => ChamberClass::Singular,
                WeightChamber::Regular {
                    index,
                    dominant,
                    reflection_count,
                } => ChamberClass::Regular {
                    index,
                    dominant_rep: self.ambient_from_weight_coords(&dominant),
                    reflection_count,
                },
            };
        }
        self.classify_chamber_rational(mu)
    }

    /// Chamber classification of an integral weight given by its
    /// fundamental-basis coordinates, in integer arithmetic.
    pub fn classify_weight(&self, m: &[i64]) -> WeightChamber {
        debug_assert_eq!(m.len(), self.rank());
        let mut negatives = 0;
        for row in &self.coroot_coeffs {
            let p: i64 = row.iter().zip(m).map(|(c, x)| c * x).sum();
            if p == 0 {
                return WeightChamber::Singular;
            }
            if p < 0 {
                negatives += 1;
            }
        }
        let mut v = m.to_vec();
        let mut reflections = 0;
        while let Some(j) = v.iter().position(|&x| x < 0) {
            let s = v[j];
            for (x, c) in v.iter_mut().zip(&self.cartan[j]) {
                *x -= s * c;
            }
            reflections += 1;
        }
        WeightChamber::Regular {
            index: negatives,
            dominant: v,
            reflection_count: reflections,
        }
    }

    /// `sum m_i w_i` for rational coordinates given as integers.
    fn ambient_from_weight_coords(&self, m: &[i64]) -> AmbientVector {
        m.iter()
            .zip(&self.fundamental_weights)
            .fold(AmbientVector::zero(self.ambient_dim()), |acc, (&x, w)| {
                acc.add_scaled(Rational::from_integer(x), w)
            })
    }

    pub(crate) fn classify_chamber_rational(&self, mu: &AmbientVector) -> ChamberClass {
        let mut negatives = 0;
        for root in &self.positive_roots {
            let p = mu.dot(root);
            if p.is_zero() {
                return ChamberClass::Singular;
            }
            if p.is_negative() {
                negatives += 1;
            }
        }

        let mut v = mu.clone();
        let mut reflections = 0;
        while let Some(i) = (0..self.rank()).find(|&i| v.dot(&self.simple_roots[i]).is_negative()) {
            v = self.reflect(&v, i);
            reflections += 1;
        }
        ChamberClass::Regular {
            index: negatives,
            dominant_rep: v,
            reflection_count: reflections,
        }
    }
}

/// [`ChamberClass`] in fundamental-basis integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightChamber {
    Singular,
    Regular {
        index: usize,
        dominant: Vec<i64>,
        reflection_count: usize,
    },
}

fn integral(v: &[Rational]) -> Vec<i64> {
    v.iter()
        .map(|q| {
            assert!(q.is_integer(), "expected an integral coordinate, got {q}");
            q.to_integer()
        })
        .collect()
}

/// Euclidean pairing of two ambient vectors of equal dimension.
pub fn pairing(u: &AmbientVector, v: &AmbientVector) -> Result<Rational> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(u.dot(v))
}
