//! Galois connections, Galois q-connections, q-tense operators and the
//! canonical construction over finite chains.

mod canonical;
mod frame;
mod galois;
mod lemmas;
mod operators;

pub use canonical::{
    canonical_connection, canonical_tense, g_star, p_star, require_chain, CanonicalConnection, CanonicalTense,
    CertifyOptions, CorollaryReport,
};
pub use frame::Frame;
pub use galois::{
    bar_maps, check_adjoint_identities, check_galois_connection, check_galois_q_connection, check_q_transport,
    conjugate, powerset_galois, right_adjoint, GaloisPair, GaloisReport, PowersetPoset, QConnectionReport, Scope,
    MAX_POWERSET_BASE,
};
pub use lemmas::{verify_rgrf_transfer, verify_term_commutation, TransferReport};
pub use operators::{check_tense_operators, TenseReport, TenseStructure};
