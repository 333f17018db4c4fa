//! The free associative algebra (enveloping algebra of the free Lie algebra),
//! the symmetric algebra, and the two brute-force oracles built on them:
//! `B = e⁻¹(e·e)` by PBW straightening and the multilinear Campbell–Hausdorff
//! coefficients by a truncated logarithm.

mod chlog;
mod pbw;
mod sym;
mod word;

pub use chlog::{ch_log, lie_project, ChLog, MultilinearTag};
pub use pbw::{b_oracle, b_p_oracle, e_inverse, straighten, symmetrize, symmetrize_element};
pub use sym::{SymElement, SymMonomial, SymTerm, SymTree};
pub use word::{embed, AssocElement, AssocWord};
