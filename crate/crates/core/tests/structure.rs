//! Structural facts about the root-system data: root counts, duality,
//! tabulated fundamental weights and the dimensions of all exceptional
//! `G/P_k`.

use acm_core::parabolic::ParabolicData;
use acm_core::rootsys::{DynkinType, RootSystem};
use acm_core::{AmbientVector, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn vec_q(v: &[(i64, i64)]) -> AmbientVector {
    AmbientVector::new(v.iter().map(|&(n, d)| q(n, d)).collect())
}

fn ints(v: &[i64]) -> Vec<(i64, i64)> {
    v.iter().map(|&x| (x, 1)).collect()
}

fn halves(v: &[i64]) -> Vec<(i64, i64)> {
    v.iter().map(|&x| (x, 2)).collect()
}

fn all_types_up_to(rank: usize) -> Vec<DynkinType> {
    let mut out = Vec::new();
    for n in 1..=rank {
        for s in ["A", "B", "C", "D"] {
            if let Ok(t) = format!("{s}{n}").parse() {
                out.push(t);
            }
        }
    }
    out.extend(DynkinType::exceptional());
    out
}

fn expected_positive_roots(t: DynkinType) -> usize {
    let n = t.rank();
    match t.to_string().as_str() {
        "E6" => 36,
        "E7" => 63,
        "E8" => 120,
        "F4" => 24,
        "G2" => 6,
        s if s.starts_with('A') => n * (n + 1) / 2,
        s if s.starts_with('B') || s.starts_with('C') => n * n,
        _ => n * (n - 1),
    }
}

#[test]
fn positive_root_counts() {
    for t in all_types_up_to(8) {
        let rs = RootSystem::new(t);
        assert_eq!(rs.positive_roots().len(), expected_positive_roots(t), "{t}");
    }
}

#[test]
fn fundamental_weights_are_dual_to_coroots() {
    for t in all_types_up_to(8) {
        let rs = RootSystem::new(t);
        for i in 1..=rs.rank() {
            for j in 0..rs.rank() {
                let expected = if i - 1 == j { 1 } else { 0 };
                assert_eq!(
                    rs.coroot_pairing(rs.fundamental_weight(i), j),
                    Rational::from_integer(expected),
                    "{t} w{i} a{}",
                    j + 1
                );
            }
            assert_eq!(
                rs.coroot_pairing(rs.rho(), i - 1),
                Rational::from_integer(1)
            );
        }
        let sum = rs
            .fundamental_weights()
            .iter()
            .fold(AmbientVector::zero(rs.ambient_dim()), |acc, w| &acc + w);
        assert_eq!(&sum, rs.rho(), "{t}");
    }
}

#[test]
fn positive_roots_are_nonnegative_integer_combinations() {
    for t in all_types_up_to(8) {
        let rs = RootSystem::new(t);
        for (root, coeffs) in rs.positive_roots().iter().zip(rs.root_coeffs()) {
            assert!(coeffs.iter().all(|&c| c >= 0), "{t} {root}");
            let rebuilt = coeffs
                .iter()
                .zip(rs.simple_roots())
                .fold(AmbientVector::zero(rs.ambient_dim()), |acc, (&c, a)| {
                    acc.add_scaled(Rational::from_integer(c), a)
                });
            assert_eq!(&rebuilt, root, "{t}");
        }
    }
}

#[test]
fn g2_vectors_lie_in_the_trace_zero_plane() {
    let rs = RootSystem::new("G2".parse().unwrap());
    let all = rs
        .positive_roots()
        .iter()
        .chain(rs.fundamental_weights())
        .chain([rs.rho()]);
    for v in all {
        let s: Rational = v.coords().iter().sum();
        assert_eq!(s, Rational::from_integer(0), "{v}");
    }
}

#[test]
fn tabulated_fundamental_weights() {
    let e6 = [
        vec_q(&[
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (-2, 3),
            (-2, 3),
            (2, 3),
        ]),
        vec_q(&halves(&[1, 1, 1, 1, 1, -1, -1, 1])),
        vec_q(&[
            (-1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (1, 2),
            (-5, 6),
            (-5, 6),
            (5, 6),
        ]),
        vec_q(&ints(&[0, 0, 1, 1, 1, -1, -1, 1])),
        vec_q(&[
            (0, 1),
            (0, 1),
            (0, 1),
            (1, 1),
            (1, 1),
            (-2, 3),
            (-2, 3),
            (2, 3),
        ]),
        vec_q(&[
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (1, 1),
            (-1, 3),
            (-1, 3),
            (1, 3),
        ]),
    ];
    let e7 = [
        vec_q(&ints(&[0, 0, 0, 0, 0, 0, -1, 1])),
        vec_q(&halves(&[1, 1, 1, 1, 1, 1, -2, 2])),
        vec_q(&halves(&[-1, 1, 1, 1, 1, 1, -3, 3])),
        vec_q(&ints(&[0, 0, 1, 1, 1, 1, -2, 2])),
        vec_q(&halves(&[0, 0, 0, 2, 2, 2, -3, 3])),
        vec_q(&ints(&[0, 0, 0, 0, 1, 1, -1, 1])),
        vec_q(&halves(&[0, 0, 0, 0, 0, 2, -1, 1])),
    ];
    let e8 = [
        vec_q(&ints(&[0, 0, 0, 0, 0, 0, 0, 2])),
        vec_q(&halves(&[1, 1, 1, 1, 1, 1, 1, 5])),
        vec_q(&halves(&[-1, 1, 1, 1, 1, 1, 1, 7])),
        vec_q(&ints(&[0, 0, 1, 1, 1, 1, 1, 5])),
        vec_q(&ints(&[0, 0, 0, 1, 1, 1, 1, 4])),
        vec_q(&ints(&[0, 0, 0, 0, 1, 1, 1, 3])),
        vec_q(&ints(&[0, 0, 0, 0, 0, 1, 1, 2])),
        vec_q(&ints(&[0, 0, 0, 0, 0, 0, 1, 1])),
    ];
    let f4 = [
        vec_q(&ints(&[1, 1, 0, 0])),
        vec_q(&ints(&[2, 1, 1, 0])),
        vec_q(&halves(&[3, 1, 1, 1])),
        vec_q(&ints(&[1, 0, 0, 0])),
    ];
    let g2 = [vec_q(&ints(&[1, 0, -1])), vec_q(&ints(&[2, -1, -1]))];

    for (name, expected) in [
        ("E6", &e6[..]),
        ("E7", &e7[..]),
        ("E8", &e8[..]),
        ("F4", &f4[..]),
        ("G2", &g2[..]),
    ] {
        let rs = RootSystem::new(name.parse().unwrap());
        assert_eq!(rs.fundamental_weights(), expected, "{name}");
    }
}

#[test]
fn tabulated_simple_roots() {
    let rs = RootSystem::new("F4".parse().unwrap());
    let expected = [
        vec_q(&ints(&[0, 1, -1, 0])),
        vec_q(&ints(&[0, 0, 1, -1])),
        vec_q(&ints(&[0, 0, 0, 1])),
        vec_q(&halves(&[1, -1, -1, -1])),
    ];
    assert_eq!(rs.simple_roots(), &expected[..]);

    let rs = RootSystem::new("E8".parse().unwrap());
    assert_eq!(
        rs.simple_roots()[0],
        vec_q(&halves(&[1, -1, -1, -1, -1, -1, -1, 1]))
    );
    assert_eq!(
        rs.simple_roots()[1],
        vec_q(&ints(&[1, 1, 0, 0, 0, 0, 0, 0]))
    );
    for i in 3..=8 {
        let mut v = vec![0; 8];
        v[i - 2] = 1;
        v[i - 3] = -1;
        assert_eq!(rs.simple_roots()[i - 1], vec_q(&ints(&v)), "a{i}");
    }
}

/// Dimension of `G/P_k` for every exceptional node.
const DIMENSIONS: [(&str, &[usize]); 5] = [
    ("E6", &[16, 21, 25, 29, 25, 16]),
    ("E7", &[33, 42, 47, 53, 50, 42, 27]),
    ("E8", &[78, 92, 98, 106, 104, 97, 83, 57]),
    ("F4", &[15, 20, 20, 15]),
    ("G2", &[5, 5]),
];

#[test]
fn exceptional_dimension_tables() {
    let mut cases = 0;
    for (name, dims) in DIMENSIONS {
        let rs = RootSystem::new(name.parse().unwrap());
        for (k, &dim) in (1..).zip(dims) {
            let pd = ParabolicData::new(rs.clone(), k).unwrap();
            assert_eq!(pd.dim(), dim, "{name} k={k}");
            assert_eq!(pd.roots().len(), dim, "{name} k={k}");
            let direct = rs
                .positive_roots()
                .iter()
                .filter(|a| {
                    rs.pairing(rs.fundamental_weight(k), a).unwrap() != Rational::from_integer(0)
                })
                .count();
            assert_eq!(direct, dim, "{name} k={k}");
            assert!(pd.roots().iter().all(|r| r.c > Rational::from_integer(0)));
            cases += 1;
        }
    }
    assert_eq!(cases, 27);
}

#[test]
fn classical_dimensions() {
    // Grassmannians, odd/even quadrics and the Lagrangian/spinor cases.
    let cases: [(&str, usize, usize); 8] = [
        ("A4", 2, 6),
        ("A5", 3, 9),
        ("B3", 1, 5),
        ("B4", 4, 10),
        ("C3", 3, 6),
        ("C4", 1, 7),
        ("D4", 1, 6),
        ("D5", 5, 10),
    ];
    for (name, k, dim) in cases {
        let pd = ParabolicData::new(RootSystem::new(name.parse().unwrap()), k).unwrap();
        assert_eq!(pd.dim(), dim, "{name} k={k}");
    }
}

#[test]
fn simple_reflections_permute_the_other_positive_roots() {
    for t in all_types_up_to(8) {
        let rs = RootSystem::new(t);
        for (i, alpha) in rs.simple_roots().iter().enumerate() {
            let mut others: Vec<AmbientVector> = rs
                .positive_roots()
                .iter()
                .filter(|r| *r != alpha)
                .cloned()
                .collect();
            let mut images: Vec<AmbientVector> = others.iter().map(|r| rs.reflect(r, i)).collect();
            others.sort();
            images.sort();
            assert_eq!(others, images, "{t} s{}", i + 1);
            assert_eq!(rs.reflect(alpha, i), -alpha);
        }
    }
}
