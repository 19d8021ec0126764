//! The Bruhat order on involutions of the symmetric group.
//!
//! * [`perm`]: permutations, involutions and their statistics.
//! * [`bruhat`]: the dot criterion and Hasse diagrams of induced subposets.
//! * [`moves`]: suitable rises and the covering transformations of `I_n`.
//! * [`chains`]: increasing, decreasing and all saturated chains.
//! * [`classes`]: the sets `F_n^A`, their gradedness and rank functions.
//! * [`el`]: EL-labellings of class posets.
//! * [`cli`]: the reports behind the `bruhat-inv` binary.

pub mod bruhat;
pub mod chains;
pub mod classes;
pub mod cli;
pub mod el;
pub mod error;
pub mod moves;
pub mod perm;

pub use bruhat::{bruhat_leq, dot_table, interval, poset_view, Cover, DotTable, PosetView};
pub use chains::{all_saturated_chains, decreasing_chain, di, increasing_chain, Chain};
pub use classes::{
    enumerate_class, is_graded_bruteforce, is_graded_theorem1, make_spec, rank_in_involutions, rank_value,
    top_element, FixedPointSpec,
};
pub use el::{el_check, labelled_class_view, LabelOrder};
pub use error::{Error, Result};
pub use moves::{classify_rise, covers, ct, ict, RiseClass, RiseLabel};
pub use perm::{enumerate_involutions, Permutation};
