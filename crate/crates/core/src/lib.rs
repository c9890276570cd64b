//! Perfect binary codes and Steiner triple systems built by the Mollard
//! construction, their structural invariants (rank, kernel, dual,
//! fundamental partition, mu/nu linearity, Pasch counts), the explicit
//! symmetry generators Dub1/Dub2/Ort, and executable verification of the
//! stabilizer factorization theorems.

pub mod bitcode;
pub mod design;
pub mod error;
pub mod fundpart;
pub mod io;
pub mod linearity;
pub mod mollard;
pub mod symmetry;
pub mod verify;

pub use bitcode::{hamming_code, vasilev, BinaryCode, BitWord, Gf2Basis, Lambda};
pub use design::{sts_of_code, SteinerLoop, TripleSystem};
pub use error::{Error, Result};
pub use fundpart::{fundamental_partition, FundamentalPartition};
pub use linearity::{mu_profile, MuProfile};
pub use mollard::{mollard, mollard_sts, GridCoords, MollardCode};
pub use symmetry::{PermGroup, Permutation};
pub use verify::{verify_lemmas, verify_theorem2, verify_theorem3, VerificationReport};
