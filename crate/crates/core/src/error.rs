use crate::rootsys::DynkinType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid Dynkin type {series}{rank}: {constraint}")]
    InvalidRank {
        series: char,
        rank: usize,
        constraint: &'static str,
    },

    #[error("cannot parse Dynkin type {0:?} (expected e.g. \"E6\", \"F4\", \"A5\")")]
    ParseType(String),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("weight belongs to {found}, expected {expected}")]
    TypeMismatch {
        expected: DynkinType,
        found: DynkinType,
    },

    #[error("{found} coefficients given, {expected} required")]
    WrongLength { expected: usize, found: usize },

    #[error("node {k} out of range 1..={rank}")]
    NodeOutOfRange { k: usize, rank: usize },

    #[error("coefficient a_{node} = {value} is negative; only a_k may be negative")]
    NotDominantOffNode { node: usize, value: i64 },

    #[error("weight is not initialized (a_{k} = {value}); normalize it first")]
    NotInitialized { k: usize, value: i64 },

    #[error("weight is not dominant (a_{node} = {value})")]
    NotDominant { node: usize, value: i64 },

    #[error("internal inconsistency at twist t = {t}: {detail}")]
    Inconsistent { t: i64, detail: String },

    #[error(
        "refusing to enumerate about {estimated} candidates (limit {limit}); \
         raise --max-candidates or pass --force"
    )]
    CandidateGuard { estimated: u128, limit: u64 },

    #[error("criterion and cohomology oracle disagree on {weight:?}: criterion {criterion}, oracle {oracle}")]
    Disagreement {
        weight: Vec<i64>,
        criterion: bool,
        oracle: bool,
    },
}
