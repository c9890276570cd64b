//! GF(2) words and explicit binary codes: arithmetic, linear algebra,
//! perfection testing, and the Hamming and Vasil'ev constructions.

mod code;
mod gf2;
mod word;

pub use code::{hamming_code, vasilev, BinaryCode, Lambda, MAX_EXPLICIT_WORDS};
pub use gf2::Gf2Basis;
pub use word::BitWord;
