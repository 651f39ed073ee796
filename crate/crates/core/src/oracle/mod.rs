//! Exhaustive small-graph enumeration and the sweeps built on it.

mod canon;
mod enumerate;
mod verify;

pub use canon::{canonical_code, canonical_form, canonical_labeling, decode, MAX_ORDER};
pub use enumerate::{
    connected_codes, enumerate_connected, enumerate_trees, hereditary_codes, tree_codes,
    MAX_CONNECTED, MAX_HEREDITARY, MAX_TREE,
};
pub use verify::{
    alpha_grid, cases, check_case, describe, verify_theorem, Case, Mismatch, TheoremId,
    VerificationReport,
};
