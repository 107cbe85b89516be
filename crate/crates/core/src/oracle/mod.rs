//! Ground truth that does not rely on the structure of `Hol(C_n)`: finite
//! groups as explicit Cayley tables, presentations, and exhaustive search for
//! automorphisms and isomorphisms.

mod builders;
mod cayley;
mod hom;
mod presentation;
mod search;

pub use builders::{
    build_dihedral, build_general_holomorph, build_holomorph_table, GENERAL_HOLOMORPH_MAX_N,
};
pub use cayley::{CayleyGroup, EXHAUSTIVE_ASSOCIATIVITY_LIMIT, SAMPLED_TRIPLES};
pub use hom::GroupHom;
pub use presentation::{Letter, Presentation, Word};
pub use search::{
    aut_group_table, center_bruteforce, enumerate_automorphisms_bruteforce, find_isomorphism,
    inner_automorphisms,
};
