//! Permutations, permutation groups with exact orders, and the explicit
//! symmetry generators of Mollard codes and designs.

mod generators;
mod group;
mod perm;
mod schreier;

pub use generators::{
    c1_coords, d2_coords, dub1, dub2, grid_row_conditions, in_t, is_symmetry_explicit, ort,
    ort_design, stabilizer_elements, symmetry_elements,
};
pub use group::{PermGroup, DEFAULT_ENUM_BOUND};
pub use perm::Permutation;
pub use schreier::StabChain;
