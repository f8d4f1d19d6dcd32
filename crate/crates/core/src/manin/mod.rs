//! Manin symbol presentations of modular symbol spaces.

mod space;
mod sparse;
mod weight;
mod word;

pub use space::{build_space, lift_to_sl2, ManinSpace, ModularSymbolPath};
pub use sparse::SparseRow;
pub use weight::{act_left, act_subst, monomial, substitution_matrix};
pub use word::{psl2_word, word_product, Atom};
