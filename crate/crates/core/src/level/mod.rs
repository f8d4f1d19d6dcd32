//! Level-`N` data: the projective line, Dirichlet characters and cusps.

mod character;
mod cusps;
mod p1;

pub use character::{char_group, unit_group_generators, DirichletCharacter};
pub use cusps::{
    cusp_classes, cusps_equivalent, equivalence_shift, Cusp, CuspClasses, CuspLocation, CuspStatus,
};
pub use p1::{p1_list, p1_normalize, P1Element, P1Table};
