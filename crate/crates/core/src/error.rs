use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("structure tensor is not commutative at ({i}, {j})")]
    NotCommutative { i: usize, j: usize },
    #[error("twist map is singular, algebra is not of Jordan type")]
    NotJordanType,
    #[error("map is not an endomorphism of the algebra")]
    NotEndomorphism,
    #[error("map is not an automorphism of the algebra")]
    NotAutomorphism,
    #[error("algebra is not multiplicative")]
    NotMultiplicative,
    #[error("subspace is not a Hom-ideal")]
    NotAnIdeal,
    #[error("operation needs characteristic 0, field has characteristic {0}")]
    UnsupportedCharacteristic(u64),
    #[error("enumeration budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("radical is nonzero (dimension {0})")]
    RadicalNonzero(usize),
    #[error("internal certification failed: {0}")]
    CertificationFailed(String),
    #[error("input is not associative")]
    NotAssociative,
    #[error("operation is undefined in characteristic 2")]
    CharacteristicTwo,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("algebra is not simple: {0}")]
    NotSimple(String),
    #[error("ideal map does not intertwine the twist powers")]
    IntertwiningFailed,
    #[error("ideal map is not an isomorphism of the ideal algebras")]
    NotIdealIso,
    #[error("module twist is not equivariant")]
    EquivarianceFailed,
    #[error("unsupported: {0}")]
    Unsupported(String),
}
