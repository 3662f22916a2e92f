use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in this crate.
///
/// Variants fall into three groups that the command-line front end maps to
/// distinct exit codes: invalid input, resource gates, and failed
/// consistency checks (see [`Error::kind`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = 2 is not supported: for groups of order 4q the holomorph contains regular subgroups with elementary abelian Sylow 2-subgroups")]
    EvenP,
    #[error("p and q must be distinct primes (got p = q = {0})")]
    EqualPrimes(u64),
    #[error("order-pq families need p > q (got p = {p}, q = {q})")]
    PqOrdering { p: u64, q: u64 },
    #[error("{family} does not exist for p = {p}, q = {q}: {reason}")]
    FamilyNotApplicable {
        family: &'static str,
        p: u64,
        q: u64,
        reason: &'static str,
    },
    #[error("group order {0} exceeds the supported bound of 10000")]
    GroupTooLarge(u64),
    #[error("modulus must be at least 2 (got {0})")]
    BadModulus(u64),
    #[error("{x} is not a unit modulo {m}")]
    NotAUnit { x: i64, m: u64 },
    #[error("no residue of multiplicative order {order} modulo {m}")]
    NoActionExponent { order: u64, m: u64 },
    #[error("e_s is not a bijection modulo {m} for s = {s}")]
    EsNotBijective { s: u64, m: u64 },

    #[error("aut-size-mismatch: computed |Aut(G)| = {computed}, expected {expected}")]
    AutSizeMismatch { computed: usize, expected: usize },
    #[error("constructed map is not an automorphism in Aut(G): {0}")]
    NotInAutGroup(String),

    #[error("automorphism group too large for tabulation: |Aut(G)| = {aut_order}, |G| = {order}")]
    AutTooLarge { aut_order: usize, order: usize },
    #[error("oracle-too-large: |Hol(G)| = {hol_order} exceeds the limit {limit}")]
    OracleTooLarge { hol_order: usize, limit: usize },
    #[error(
        "search-too-large: |G| = {order}, |Aut(G)| = {aut_order} (limits {max_order}, {max_aut})"
    )]
    SearchTooLarge {
        order: usize,
        aut_order: usize,
        max_order: usize,
        max_aut: usize,
    },

    #[error("gamma functional equation fails at g = {g}, h = {h}")]
    GfeViolation { g: usize, h: usize },
    #[error("brace-axiom-violation at ({g}, {h}, {k})")]
    BraceAxiomViolation { g: usize, h: usize, k: usize },
    #[error("kernel of gamma is not {0}")]
    KernelViolation(&'static str),
    #[error("not-invariant: the cyclic subgroup is not invariant under the automorphism")]
    NotInvariant,
    #[error("order-too-big: automorphism order {aut_order} does not divide {subgroup_order}")]
    OrderTooBig {
        aut_order: usize,
        subgroup_order: usize,
    },
    #[error("lift-precondition-failed: {0}")]
    LiftPreconditionFailed(&'static str),
    #[error("structured-count-mismatch in {branch}: expected {expected}, constructed {found}")]
    StructuredCountMismatch {
        branch: String,
        expected: usize,
        found: usize,
    },
    #[error("brace set is not closed under conjugation by Aut(G)")]
    NotClosed,
    #[error("methods disagree on {family}: {detail}")]
    MethodDisagreement { family: String, detail: String },
    #[error("{0} is not one of the four p^2 q families")]
    NotP2q(&'static str),

    #[error("malformed Cayley table: {0}")]
    MalformedTable(String),
}

/// Coarse classification of an [`Error`], used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    InvalidInput,
    ResourceLimit,
    CheckFailed,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            NotPrime(_)
            | EvenP
            | EqualPrimes(_)
            | PqOrdering { .. }
            | FamilyNotApplicable { .. }
            | GroupTooLarge(_)
            | BadModulus(_)
            | NotAUnit { .. }
            | NoActionExponent { .. }
            | EsNotBijective { .. }
            | NotInvariant
            | OrderTooBig { .. }
            | LiftPreconditionFailed(_)
            | NotP2q(_)
            | MalformedTable(_) => ErrorKind::InvalidInput,
            OracleTooLarge { .. } | SearchTooLarge { .. } | AutTooLarge { .. } => {
                ErrorKind::ResourceLimit
            }
            AutSizeMismatch { .. }
            | NotInAutGroup(_)
            | GfeViolation { .. }
            | BraceAxiomViolation { .. }
            | KernelViolation(_)
            | StructuredCountMismatch { .. }
            | NotClosed
            | MethodDisagreement { .. } => ErrorKind::CheckFailed,
        }
    }
}
