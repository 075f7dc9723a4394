//! Borel-Weil-Bott cohomology of twisted irreducible homogeneous bundles.
//!
//! `H^*(G/P_k, E_lambda(-t))` is governed by the chamber of
//! `lambda + rho - t w_k`: singular weights have no cohomology at all, and a
//! weight regular of index `p` has cohomology only in degree `p`, equal to the
//! irreducible representation with highest weight `w(lambda + rho - t w_k) - rho`.
//!
//! The ACM oracle here scans twists and looks only at chamber indices. It
//! never inspects the coverage structure of `T`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::parabolic::{BundleSpec, ParabolicData};
use crate::rootsys::{ChamberClass, RootSystem, WeightChamber, WeightCoeffs};
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyRow {
    pub twist: i64,
    pub class: ChamberClass,
    /// The only degree with nonzero cohomology, if any.
    pub degree: Option<usize>,
    pub highest_weight: Option<WeightCoeffs>,
    pub dimension: Option<BigUint>,
}

fn check_initialized(pd: &ParabolicData, lambda: &WeightCoeffs) -> Result<()> {
    let spec = BundleSpec::new(pd, lambda.clone())?;
    if !spec.is_initialized() {
        return Err(Error::NotInitialized {
            k: pd.k(),
            value: lambda.at(pd.k()),
        });
    }
    Ok(())
}

/// Cohomology of `E_lambda` twisted so that the shifted weight is
/// `lambda + rho - t w_k`.
pub fn cohomology(pd: &ParabolicData, lambda: &WeightCoeffs, t: i64) -> Result<CohomologyRow> {
    check_initialized(pd, lambda)?;
    let rs = pd.root_system();
    let mu = (&rs.to_ambient(lambda)? + rs.rho())
        .add_scaled(Rational::from_integer(-t), rs.fundamental_weight(pd.k()));
    let class = rs.classify_chamber(&mu);
    let (degree, highest_weight, dimension) = match &class {
        ChamberClass::Singular => (None, None, None),
        ChamberClass::Regular {
            index,
            dominant_rep,
            ..
        } => {
            let hw = rs
                .to_weight_coeffs(&(dominant_rep - rs.rho()))
                .ok_or_else(|| Error::Inconsistent {
                    t,
                    detail: "dominant representative is not integral".into(),
                })?;
            let dim = weyl_dimension(rs, &hw)?;
            (Some(*index), Some(hw), Some(dim))
        }
    };
    Ok(CohomologyRow {
        twist: t,
        class,
        degree,
        highest_weight,
        dimension,
    })
}

/// Dimension of the irreducible representation with dominant highest weight
/// `mu`: the product over positive roots of `(mu + rho, a) / (rho, a)`.
pub fn weyl_dimension(rs: &RootSystem, mu: &WeightCoeffs) -> Result<BigUint> {
    if let Some((i, &v)) = mu.coeffs().iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(Error::NotDominant {
            node: i + 1,
            value: v,
        });
    }
    let shifted = &rs.to_ambient(mu)? + rs.rho();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for root in rs.positive_roots() {
        let ratio = rs.pairing(&shifted, root)? / rs.pairing(rs.rho(), root)?;
        num *= BigInt::from(*ratio.numer());
        den *= BigInt::from(*ratio.denom());
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Weyl dimension product is not an integer");
    Ok(q.to_biguint().expect("dimension is positive"))
}

/// Chamber index of one scanned twist; `None` means singular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistClass {
    pub twist: i64,
    pub index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub acm: bool,
    pub m_max: Rational,
    pub dim: usize,
    pub rows: Vec<TwistClass>,
    /// Least scanned twist whose weight is regular of an intermediate index.
    pub failing_twist: Option<i64>,
}

/// Decides ACM-ness of an initialized `E_lambda` by scanning every integer
/// twist in `[-pad, ceil(M) + pad]` and requiring each shifted weight to be
/// singular, regular of index 0, or regular of index `dim G/P_k`.
///
/// Outside `[1, M]` the chamber is forced (index 0 for `t < 1`, index `dim`
/// for `t > M`); those facts are checked on the scanned margin and a
/// violation is reported as [`Error::Inconsistent`].
pub fn acm_oracle(pd: &ParabolicData, lambda: &WeightCoeffs, pad: u32) -> Result<OracleReport> {
    check_initialized(pd, lambda)?;
    let rs = pd.root_system();
    let shifted = &rs.to_ambient(lambda)? + rs.rho();

    let m_max = pd
        .roots()
        .iter()
        .map(|r| rs.pairing(&shifted, &r.root).map(|p| p / r.c))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .expect("nonempty");
    let dim = pd.dim();
    let lo = -i64::from(pad);
    let hi = m_max.ceil().to_integer() + i64::from(pad);

    // lambda + rho - t w_k in the fundamental basis
    let base: Vec<i64> = lambda.coeffs().iter().map(|a| a + 1).collect();
    let rows: Vec<TwistClass> = (lo..=hi)
        .into_par_iter()
        .map(|t| {
            let mut m = base.clone();
            m[pd.k() - 1] -= t;
            let index = match rs.classify_weight(&m) {
                WeightChamber::Singular => None,
                WeightChamber::Regular { index, .. } => Some(index),
            };
            TwistClass { twist: t, index }
        })
        .collect();

    for row in &rows {
        let t = Rational::from_integer(row.twist);
        let below = row.twist < 1;
        let above = t > m_max;
        let detail = match row.index {
            Some(0) if !below => Some("regular of index 0 at t >= 1"),
            Some(i) if i == dim && !above => Some("regular of index dim at t <= M"),
            Some(i) if below && i != 0 => Some("not regular of index 0 at t < 1"),
            None if below => Some("singular at t < 1"),
            Some(i) if above && i != dim => Some("not regular of index dim at t > M"),
            None if above => Some("singular at t > M"),
            _ => None,
        };
        if let Some(detail) = detail {
            return Err(Error::Inconsistent {
                t: row.twist,
                detail: detail.into(),
            });
        }
        debug_assert!(!t.is_negative() || below);
    }

    let failing_twist = rows
        .iter()
        .find(|r| matches!(r.index, Some(i) if i != 0 && i != dim))
        .map(|r| r.twist);
    Ok(OracleReport {
        acm: failing_twist.is_none(),
        m_max,
        dim,
        rows,
        failing_twist,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::DynkinType;

    fn pd(name: &str, k: usize) -> ParabolicData {
        let t: DynkinType = name.parse().unwrap();
        ParabolicData::new(RootSystem::new(t), k).unwrap()
    }

    fn w(pd: &ParabolicData, a: &[i64]) -> WeightCoeffs {
        WeightCoeffs::new(pd.root_system().dynkin(), a.to_vec()).unwrap()
    }

    #[test]
    fn trivial_bundle_h0() {
        for (name, k) in [("E6", 2), ("G2", 1), ("B3", 2)] {
            let p = pd(name, k);
            let zero = WeightCoeffs::zero(p.root_system().dynkin());
            let row = cohomology(&p, &zero, 0).unwrap();
            assert_eq!(row.degree, Some(0));
            assert!(row.highest_weight.unwrap().coeffs().iter().all(|&a| a == 0));
            assert_eq!(row.dimension, Some(BigUint::one()));
        }
    }

    #[test]
    fn e6_twist_two_vanishes() {
        let p = pd("E6", 2);
        let row = cohomology(&p, &w(&p, &[0; 6]), 2).unwrap();
        assert_eq!(row.class, ChamberClass::Singular);
        assert_eq!(row.degree, None);
        assert_eq!(row.dimension, None);
    }

    #[test]
    fn e6_large_twist_top_degree() {
        let p = pd("E6", 2);
        for t in 11..16 {
            let row = cohomology(&p, &w(&p, &[0; 6]), t).unwrap();
            assert_eq!(row.degree, Some(21), "t={t}");
        }
    }

    #[test]
    fn cohomology_rejects_uninitialized() {
        let p = pd("E6", 2);
        let err = cohomology(&p, &w(&p, &[0, 1, 0, 0, 0, 0]), 0).unwrap_err();
        assert_eq!(err, Error::NotInitialized { k: 2, value: 1 });
    }

    #[test]
    fn weyl_dimensions() {
        let e6 = RootSystem::new("E6".parse().unwrap());
        let zero = WeightCoeffs::zero(e6.dynkin());
        assert_eq!(weyl_dimension(&e6, &zero).unwrap(), BigUint::one());
        let w6 = WeightCoeffs::new(e6.dynkin(), vec![0, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(weyl_dimension(&e6, &w6).unwrap(), BigUint::from(27u32));

        let a1 = RootSystem::new("A1".parse().unwrap());
        for m in 0..20 {
            let w = WeightCoeffs::new(a1.dynkin(), vec![m]).unwrap();
            assert_eq!(
                weyl_dimension(&a1, &w).unwrap(),
                BigUint::from(m as u64 + 1)
            );
        }

        let bad = WeightCoeffs::new(e6.dynkin(), vec![0, -1, 0, 0, 0, 0]).unwrap();
        assert_eq!(
            weyl_dimension(&e6, &bad).unwrap_err(),
            Error::NotDominant { node: 2, value: -1 }
        );
    }

    #[test]
    fn oracle_examples() {
        let p = pd("E6", 2);
        assert!(acm_oracle(&p, &w(&p, &[2, 0, 1, 0, 0, 0]), 2).unwrap().acm);
        let r = acm_oracle(&p, &w(&p, &[0, 0, 0, 1, 1, 0]), 2).unwrap();
        assert!(!r.acm);
        assert_eq!(r.failing_twist, Some(2));
        let idx = r
            .rows
            .iter()
            .find(|row| row.twist == 2)
            .unwrap()
            .index
            .unwrap();
        assert!(idx > 0 && idx < 21);

        let g = pd("G2", 2);
        assert!(acm_oracle(&g, &w(&g, &[1, 0]), 2).unwrap().acm);
    }

    #[test]
    fn oracle_scan_bounds() {
        let p = pd("G2", 1);
        let r = acm_oracle(&p, &w(&p, &[0, 0]), 3).unwrap();
        // M = 4
        assert_eq!(r.rows.first().unwrap().twist, -3);
        assert_eq!(r.rows.last().unwrap().twist, 7);
    }
}
