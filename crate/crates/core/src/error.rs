use thiserror::Error;

use crate::freelie::Generator;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {generator} is outside the alphabet (n = {n}, m = {m})")]
    IndexOutOfRange {
        generator: Generator,
        n: u32,
        m: u32,
    },

    #[error("multi-index {0:?} is not injective")]
    NotInjective(Vec<u32>),

    #[error("w undefined for #A = {a}, #B = {b}: a part empty on one side must be a singleton on the other")]
    WUndefined { a: usize, b: usize },

    #[error("element is not primitive: {0}")]
    NotPrimitive(String),

    #[error("total degree {requested} exceeds the cap {cap}")]
    DegreeCap { requested: u32, cap: u32 },

    #[error("degree cap {cap} is below n + m = {needed}")]
    CapTooSmall { cap: u32, needed: u32 },

    #[error("antisymmetry violated at ({i},{j},{k})")]
    Antisymmetry { i: usize, j: usize, k: usize },

    #[error("Jacobi identity violated at ({i},{j},{k},{m})")]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        m: usize,
    },

    #[error("generator {0} has no assigned basis element")]
    Unassigned(Generator),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
