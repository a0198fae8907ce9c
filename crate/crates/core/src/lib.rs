//! Exact-arithmetic computational Lie theory engine.
//!
//! Everything here is computed over arbitrary-precision rationals; there is
//! no floating point anywhere. The crate provides:
//!
//! - root-system data for `F4`, `B4`, `D5`, `A1` in their standard coordinate
//!   realizations ([`root_system`]),
//! - finite-dimensional representation arithmetic: Weyl dimensions,
//!   Freudenthal weight multiplicities, Brauer-Klimyk tensor decompositions,
//!   infinitesimal characters ([`characters`]),
//! - branching along the two restrictions `F4 -> B4` and `D5 -> B4`, with
//!   classification of constituents as `tau(m,n)` ([`branching`]),
//! - explicit truncated matrix models of lowest/highest weight `sl2`-modules
//!   and their tensor products, with exact-rank filtration checks ([`sl2`]),
//! - the theta-correspondence bookkeeping layer: lifts of K-types and
//!   SO(2)-types, see-saw Hom dimensions, K-type supports, and lowest-type
//!   matching reports ([`theta`]),
//! - independent cross-check oracles (character-product tensor decomposition
//!   and the interlacing rule for `so(10) -> so(9)`) ([`oracles`]), and
//! - the one-shot verification suite ([`verify`]).
//!
//! The crate is `no_std` (with `alloc`); IO, CLI, and caching live in the
//! companion `theta-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod branching;
pub mod characters;
pub mod error;
pub mod linalg;
pub mod oracles;
pub mod root_system;
pub mod sl2;
pub mod theta;
pub mod verify;
pub mod weight;

pub use error::{EngineError, Result};
pub use root_system::{RootSystem, SystemLabel, Systems};
pub use weight::{Rat, Weight};

pub use branching::{
    branch, classify_tau, make_embedding, EmbeddingMap, EmbeddingName, TauClassification, TauLabel,
};
pub use characters::{
    freudenthal_character, infinitesimal_character, tensor_decompose, theta_infchar_transfer,
    weyl_dim, CharCache, DecompositionList, FormalCharacter, InfCharTransfer, IrrepLabel,
};
pub use sl2::{
    build_highest_weight_module, build_lowest_weight_module, filtration_rank, hc_parameter,
    support_membership, tensor_modules, Parity, Sl2Kind, So2Support, TruncatedSl2Module,
};
pub use theta::{
    dual_support, hom_dim_ktype, lift_ktype, lift_so2type, match_lowest_types, pi_compact_table,
    theta_support, PairingReport, PiRow, PiTable, ThetaKTypeLift, ThetaSo2Lift, ThetaSupport,
    Verdict, DEFAULT_DIM_CAP,
};
pub use verify::{CheckResult, Profile};
