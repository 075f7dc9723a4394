//! The variety `G/P_k` for a maximal parabolic subgroup, the value multiset
//! `T` of a highest weight and the combinatorial ACM criterion.
//!
//! For a node `k`, `roots_k` is the set of positive roots `a` with
//! `c_a = (w_k, a) != 0`; its size is `dim G/P_k`. For a highest weight
//! `lambda` the profile `T` holds `(lambda + rho, a) / c_a` for every such
//! root, `M` is its maximum and `n_l` counts entries equal to the integer
//! `l`. An initialized bundle is ACM exactly when `n_l >= 1` for every
//! integer `1 <= l <= M`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::rootsys::{RootSystem, Series, WeightCoeffs};
use crate::{AmbientVector, Error, Rational, Result};

/// `constant + sum_i coeffs[i] * a_i`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineForm {
    pub constant: Rational,
    pub coeffs: Vec<Rational>,
}

impl AffineForm {
    pub fn eval(&self, a: &[i64]) -> Rational {
        self.coeffs
            .iter()
            .zip(a)
            .fold(self.constant, |acc, (c, &x)| {
                acc + c * Rational::from_integer(x)
            })
    }

    /// True when every coefficient and the constant are at least those of `other`.
    fn dominates(&self, other: &AffineForm) -> bool {
        self.constant >= other.constant
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a >= b)
    }
}

#[derive(Clone, Debug)]
pub struct ParabolicRoot {
    pub root: AmbientVector,
    /// `(w_k, root) > 0`
    pub c: Rational,
    /// The entry `(lambda + rho, root) / c` as an affine form in the `a_i`.
    pub form: AffineForm,
}

#[derive(Clone, Debug)]
pub struct ParabolicData {
    rs: RootSystem,
    k: usize,
    roots: Vec<ParabolicRoot>,
    m_form: Option<AffineForm>,
}

impl ParabolicData {
    /// `k` is a 1-based node label.
    pub fn new(rs: RootSystem, k: usize) -> Result<Self> {
        if k == 0 || k > rs.rank() {
            return Err(Error::NodeOutOfRange { k, rank: rs.rank() });
        }
        let wk = rs.fundamental_weight(k).clone();
        let mut roots: Vec<ParabolicRoot> = rs
            .positive_roots()
            .iter()
            .filter_map(|root| {
                let c = rs.pairing(&wk, root).ok()?;
                if c.is_zero() {
                    return None;
                }
                debug_assert!(c.is_positive());
                let form = AffineForm {
                    constant: rs.pairing(rs.rho(), root).ok()? / c,
                    coeffs: rs
                        .fundamental_weights()
                        .iter()
                        .map(|w| w.dot(root) / c)
                        .collect(),
                };
                Some(ParabolicRoot {
                    root: root.clone(),
                    c,
                    form,
                })
            })
            .collect();
        roots.sort_by(|a, b| a.root.cmp(&b.root));

        let m_form = roots
            .iter()
            .find(|r| roots.iter().all(|o| r.form.dominates(&o.form)))
            .map(|r| r.form.clone());

        Ok(Self {
            rs,
            k,
            roots,
            m_form,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `dim G/P_k = |roots_k|`.
    pub fn dim(&self) -> usize {
        self.roots.len()
    }

    /// Parabolic roots in canonical (lexicographic coordinate) order.
    pub fn roots(&self) -> &[ParabolicRoot] {
        &self.roots
    }

    /// The affine form of `M` in the coefficients `a_i`, valid for every
    /// weight with `a_i >= 0` off node `k`. It exists when a single entry of
    /// `T` dominates all others coefficientwise, which holds for every
    /// simple type's maximal parabolics.
    pub fn m_form(&self) -> Option<&AffineForm> {
        self.m_form.as_ref()
    }

    /// Position of each entry in the 5x5 display matrix used for `E6/P_2`:
    /// `e_i + e_j` above the diagonal at `(i, j)`, `a_{i,j,6,7}` below it at
    /// `(j, i)`, and `a_{6,7}` at `(5, 5)`. `None` for every other variety.
    pub fn display_matrix(&self) -> Option<[[Option<usize>; 5]; 5]> {
        if self.rs.dynkin().series() != Series::E || self.rs.rank() != 6 || self.k != 2 {
            return None;
        }
        let find = |v: AmbientVector| self.roots.iter().position(|r| r.root == v);
        let mut cells = [[None; 5]; 5];
        for i in 0..5 {
            for j in (i + 1)..5 {
                let mut plus = [0i64; 8];
                plus[i] = 1;
                plus[j] = 1;
                cells[i][j] = Some(find(AmbientVector::from_ints(&plus))?);

                let mut half = [1i64; 8];
                for idx in [i, j, 5, 6] {
                    half[idx] = -1;
                }
                cells[j][i] = Some(find(AmbientVector::halves(&half))?);
            }
        }
        cells[4][4] = Some(find(AmbientVector::halves(&[1, 1, 1, 1, 1, -1, -1, 1]))?);
        Some(cells)
    }
}

/// An irreducible homogeneous bundle `E_lambda` on `G/P_k`.
#[derive(Clone, Debug)]
pub struct BundleSpec<'a> {
    pd: &'a ParabolicData,
    lambda: WeightCoeffs,
}

impl<'a> BundleSpec<'a> {
    /// Requires `a_i >= 0` for `i != k`; `a_k` is an arbitrary twist.
    pub fn new(pd: &'a ParabolicData, lambda: WeightCoeffs) -> Result<Self> {
        if lambda.dynkin() != pd.rs.dynkin() {
            return Err(Error::TypeMismatch {
                expected: pd.rs.dynkin(),
                found: lambda.dynkin(),
            });
        }
        if let Some((i, &v)) = lambda
            .coeffs()
            .iter()
            .enumerate()
            .find(|&(i, &v)| i + 1 != pd.k && v < 0)
        {
            return Err(Error::NotDominantOffNode {
                node: i + 1,
                value: v,
            });
        }
        Ok(Self { pd, lambda })
    }

    pub fn parabolic(&self) -> &'a ParabolicData {
        self.pd
    }

    pub fn lambda(&self) -> &WeightCoeffs {
        &self.lambda
    }

    pub fn is_initialized(&self) -> bool {
        self.lambda.at(self.pd.k) == 0
    }

    /// Strips `a_k`: `E_lambda = E_{lambda - a_k w_k}(a_k)`.
    pub fn normalize(&self) -> (BundleSpec<'a>, i64) {
        let twist = self.lambda.at(self.pd.k);
        (
            BundleSpec {
                pd: self.pd,
                lambda: self.lambda.with(self.pd.k, 0),
            },
            twist,
        )
    }

    pub fn t_profile(&self) -> Result<TProfile> {
        t_profile(self)
    }

    pub fn max_element(&self) -> Result<Rational> {
        Ok(t_profile(self)?.m_max)
    }

    pub fn is_acm(&self) -> AcmVerdict {
        is_acm(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TEntry {
    pub root: AmbientVector,
    pub c: Rational,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TProfile {
    /// One entry per parabolic root, in the order of [`ParabolicData::roots`].
    pub entries: Vec<TEntry>,
    pub m_max: Rational,
    /// `n[l]` = number of entries equal to the integer `l`; only integers
    /// that occur are present.
    pub n: BTreeMap<i64, usize>,
}

impl TProfile {
    pub fn n(&self, l: i64) -> usize {
        self.n.get(&l).copied().unwrap_or(0)
    }
}

/// Computes `T` directly from ambient pairings `(lambda + rho, a) / c_a`.
pub fn t_profile(spec: &BundleSpec<'_>) -> Result<TProfile> {
    let pd = spec.pd;
    if !spec.is_initialized() {
        return Err(Error::NotInitialized {
            k: pd.k,
            value: spec.lambda.at(pd.k),
        });
    }
    let shifted = &pd.rs.to_ambient(&spec.lambda)? + pd.rs.rho();
    let entries: Vec<TEntry> = pd
        .roots
        .iter()
        .map(|r| {
            Ok(TEntry {
                root: r.root.clone(),
                c: r.c,
                value: pd.rs.pairing(&shifted, &r.root)? / r.c,
            })
        })
        .collect::<Result<_>>()?;
    let m_max = entries
        .iter()
        .map(|e| e.value)
        .max()
        .expect("a maximal parabolic has at least one root");
    let mut n = BTreeMap::new();
    for e in &entries {
        if e.value.is_integer() {
            *n.entry(e.value.to_integer()).or_insert(0) += 1;
        }
    }
    Ok(TProfile { entries, m_max, n })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `n_l` for every `l` in `1..=floor(M)`, all at least one.
    Covered(Vec<(i64, usize)>),
    /// Least integer `l` in `[1, M]` with `n_l = 0`.
    Missing(i64),
    /// An integer entry of `T` outside `[1, M]`.
    OutOfRange(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcmVerdict {
    pub acm: bool,
    /// Twist removed by normalization (the original `a_k`).
    pub twist: i64,
    /// `M` of the initialized weight.
    pub m_max: Rational,
    pub certificate: Certificate,
}

/// Decides ACM-ness of `E_lambda` by checking that the integers in `T` are
/// exactly `1..=floor(M)`. Non-initialized weights are normalized first;
/// twisting does not change the verdict.
pub fn is_acm(spec: &BundleSpec<'_>) -> AcmVerdict {
    let (init, twist) = spec.normalize();
    let profile = t_profile(&init).expect("normalized spec is initialized");
    let m = profile.m_max;
    let top = m.floor().to_integer();

    let out_of_range = profile
        .n
        .keys()
        .copied()
        .find(|&l| l < 1 || Rational::from_integer(l) > m);
    let certificate = if let Some(v) = out_of_range {
        Certificate::OutOfRange(v)
    } else if let Some(l) = (1..=top).find(|&l| profile.n(l) == 0) {
        Certificate::Missing(l)
    } else {
        Certificate::Covered((1..=top).map(|l| (l, profile.n(l))).collect())
    };
    AcmVerdict {
        acm: matches!(certificate, Certificate::Covered(_)),
        twist,
        m_max: m,
        certificate,
    }
}
