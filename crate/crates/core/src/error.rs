use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("permutations must act on at least one point")]
    EmptyPermutation,

    #[error("label {label} is outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("label {label} appears twice; images must form a bijection")]
    NotBijective { label: usize },

    #[error("permutations act on different sets: {left} vs {right} points")]
    SizeMismatch { left: usize, right: usize },

    #[error("sigma and tau do not act transitively; the surface is disconnected")]
    Disconnected,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid stratum: {0}")]
    InvalidStratum(String),

    #[error("surface has no cone points; saddle connections are undefined")]
    NoSaddles,

    #[error("surface is not reduced; {0} requires a reduced surface")]
    NotReduced(&'static str),

    #[error("holonomy vector must be non-zero")]
    ZeroVector,

    #[error("radius {radius} exceeds the configured cap {cap}")]
    RadiusCap { radius: f64, cap: f64 },

    #[error("monodromy group exceeds {cap} elements; undecided at this size")]
    GroupTooLarge { cap: usize },

    #[error("orbit exceeds {cap} surfaces; only a partial orbit was computed")]
    OrbitTooLarge { cap: usize },

    #[error("n = {n} exceeds the enumeration cap {cap}")]
    EnumerationCap { n: usize, cap: usize },

    #[error("n = {n} is below the minimum {min} squares for this stratum")]
    TooFewSquares { n: usize, min: usize },

    #[error("parameter out of range: {0}")]
    BadParameters(String),

    #[error("unsupported stratum {0}; only H(2) is supported here")]
    UnsupportedStratum(String),

    #[error("closed form is not an integer: {0}")]
    NonIntegral(String),
}
