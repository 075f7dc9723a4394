//! Reference data: the `E6/P_2` display matrices for two highest weights and
//! the reference classifications of initialized ACM bundles on `E6/P_1`,
//! `E7/P_7`, `E8/P_8`, `F4/P_1`, `G2/P_1` and `G2/P_2`.

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    /// Exact set of initialized ACM highest weights.
    Classification { expected: Vec<Vec<i64>> },
    /// Display matrices of `T` for one or more weights.
    Profiles(Vec<ProfileCase>),
}

/// Display matrix of `T` (cells as `(numerator, denominator)`, `None` on the
/// unused diagonal), `M`, verdict and least missing integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileCase {
    pub weight: Vec<i64>,
    pub matrix: Vec<Vec<Option<(i64, i64)>>>,
    pub m_max: i64,
    pub acm: bool,
    pub missing_l: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub dynkin: &'static str,
    pub k: usize,
    pub kind: FixtureKind,
}

fn matrix(rows: [[i64; 5]; 5], corner: (i64, i64)) -> Vec<Vec<Option<(i64, i64)>>> {
    (0..5)
        .map(|i| {
            (0..5)
                .map(|j| match (i, j) {
                    (4, 4) => Some(corner),
                    _ if i == j => None,
                    _ => Some((rows[i][j], 1)),
                })
                .collect()
        })
        .collect()
}

fn classification(name: &str, dynkin: &'static str, k: usize, expected: Vec<Vec<i64>>) -> Fixture {
    Fixture {
        name: name.to_string(),
        dynkin,
        k,
        kind: FixtureKind::Classification { expected },
    }
}

/// `lambda = 2w1 + w3` (ACM, `M = 14`) and `mu = w4 + w5` (not ACM,
/// `M = 15`, `n_2 = n_14 = 0`) on `E6/P_2`.
pub fn e6_p2_profiles() -> Fixture {
    let lambda = ProfileCase {
        weight: vec![2, 0, 1, 0, 0, 0],
        matrix: matrix(
            [
                [0, 1, 2, 3, 4],
                [14, 0, 4, 5, 6],
                [13, 11, 0, 6, 7],
                [12, 10, 9, 0, 8],
                [11, 9, 8, 7, 0],
            ],
            (15, 2),
        ),
        m_max: 14,
        acm: true,
        missing_l: None,
    };
    let mu = ProfileCase {
        weight: vec![0, 0, 0, 1, 1, 0],
        matrix: matrix(
            [
                [0, 1, 3, 5, 6],
                [15, 0, 4, 6, 7],
                [13, 12, 0, 8, 9],
                [11, 10, 8, 0, 11],
                [10, 9, 7, 5, 0],
            ],
            (8, 1),
        ),
        m_max: 15,
        acm: false,
        missing_l: Some(2),
    };
    Fixture {
        name: "E6/P2 step matrices".into(),
        dynkin: "E6",
        k: 2,
        kind: FixtureKind::Profiles(vec![lambda, mu]),
    }
}

pub fn cayley_plane() -> Fixture {
    let expected = (0..=1)
        .flat_map(|i| (0..=3).map(move |j| vec![0, 0, 0, 0, i, j]))
        .collect();
    classification("E6/P1 (Cayley plane)", "E6", 1, expected)
}

pub fn freudenthal() -> Fixture {
    let expected = (0..=2).map(|i| vec![0, i, 0, 0, 0, 0, 0]).collect();
    classification("E7/P7 (Freudenthal variety)", "E7", 7, expected)
}

pub fn e8_p8() -> Fixture {
    let mut expected = Vec::new();
    for i in 0..=5 {
        expected.push(vec![i, 0, 0, 0, 0, 0, 0, 0]);
        expected.push(vec![i, 0, 1, 0, 0, 0, 0, 0]);
    }
    for j in 1..=4 {
        expected.push(vec![j, 1, 0, 0, 0, 0, 0, 0]);
    }
    for k in 1..=2 {
        expected.push(vec![0, k, 0, 0, 0, 0, 0, 0]);
    }
    classification("E8/P8", "E8", 8, expected)
}

pub fn f4_p1() -> Fixture {
    let mut expected: Vec<Vec<i64>> = (0..=4).map(|i| vec![0, 0, 0, i]).collect();
    expected.extend([0, 1, 2, 3, 5].into_iter().map(|j| vec![0, 0, 1, j]));
    classification("F4/P1", "F4", 1, expected)
}

pub fn g2_p1() -> Fixture {
    classification("G2/P1", "G2", 1, vec![vec![0, 0]])
}

pub fn g2_p2() -> Fixture {
    classification("G2/P2", "G2", 2, (0..=2).map(|i| vec![i, 0]).collect())
}

pub fn builtin() -> Vec<Fixture> {
    vec![
        e6_p2_profiles(),
        cayley_plane(),
        freudenthal(),
        e8_p8(),
        f4_p1(),
        g2_p1(),
        g2_p2(),
    ]
}

/// A tabulated closed form for `M` on `G/P_k`: `sum coeffs[i] a_{i+1} + constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabulatedMaximum {
    pub dynkin: &'static str,
    pub k: usize,
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

impl TabulatedMaximum {
    pub fn eval(&self, a: &[i64]) -> i64 {
        self.coeffs.iter().zip(a).map(|(c, x)| c * x).sum::<i64>() + self.constant
    }
}

/// The closed forms for `M` on all 27 exceptional `G/P_k`, exactly as
/// tabulated (forms shared between nodes are repeated per node).
///
/// Three of them do not agree with the maximum of `T`: E6 `k = 3` (the
/// tabulated form is the one for `k = 5`; the true form is its mirror image
/// `a1+a2+a3+2a4+2a5+a6+8`), F4 `k = 3` (true form `2a1+2a2+a3+a4+6`) and
/// E8 `k = 8` (true form `2a1+3a2+4a3+6a4+5a5+4a6+3a7+a8+28`; the tabulated
/// one is `(lambda + rho, theta)` for the highest root `theta`, whose
/// `c = 2` was not divided out).
pub fn tabulated_maxima() -> Vec<TabulatedMaximum> {
    let table: [(&'static str, usize, &[i64], i64); 27] = [
        ("E6", 1, &[1, 2, 2, 3, 2, 1], 11),
        ("E6", 2, &[1, 1, 2, 3, 2, 1], 10),
        ("E6", 3, &[1, 1, 2, 2, 1, 1], 8),
        ("E6", 4, &[1, 1, 1, 1, 1, 1], 6),
        ("E6", 5, &[1, 1, 2, 2, 1, 1], 8),
        ("E6", 6, &[1, 2, 2, 3, 2, 1], 11),
        ("E7", 1, &[1, 2, 3, 4, 3, 2, 1], 16),
        ("E7", 2, &[1, 1, 2, 3, 3, 2, 1], 13),
        ("E7", 3, &[1, 1, 1, 2, 2, 2, 1], 10),
        ("E7", 4, &[1, 1, 1, 1, 1, 1, 1], 7),
        ("E7", 5, &[1, 1, 2, 2, 1, 1, 1], 9),
        ("E7", 6, &[1, 2, 2, 3, 2, 1, 1], 12),
        ("E7", 7, &[2, 2, 3, 4, 3, 2, 1], 17),
        ("E8", 1, &[1, 3, 3, 5, 4, 3, 2, 1], 22),
        ("E8", 2, &[1, 1, 2, 3, 3, 3, 2, 1], 16),
        ("E8", 3, &[1, 1, 1, 2, 2, 2, 2, 1], 12),
        ("E8", 4, &[1, 1, 1, 1, 1, 1, 1, 1], 8),
        ("E8", 5, &[1, 1, 2, 2, 1, 1, 1, 1], 10),
        ("E8", 6, &[1, 2, 2, 3, 2, 1, 1, 1], 13),
        ("E8", 7, &[2, 2, 3, 4, 3, 2, 1, 1], 18),
        ("E8", 8, &[2, 3, 4, 6, 5, 4, 3, 2], 29),
        ("F4", 1, &[1, 3, 2, 1], 7),
        ("F4", 2, &[1, 1, 1, 1], 4),
        ("F4", 3, &[1, 2, 1, 1], 5),
        ("F4", 4, &[2, 4, 3, 1], 10),
        ("G2", 1, &[1, 3], 4),
        ("G2", 2, &[1, 1], 2),
    ];
    table
        .iter()
        .map(|&(dynkin, k, coeffs, constant)| TabulatedMaximum {
            dynkin,
            k,
            coeffs: coeffs.to_vec(),
            constant,
        })
        .collect()
}
