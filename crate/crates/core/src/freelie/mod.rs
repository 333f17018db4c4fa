//! Free Lie algebra on an ordered alphabet `x1 < … < xn < y1 < … < ym`,
//! kept in the Lyndon basis.

mod element;
mod generator;
mod lyndon;
mod monomial;

pub use element::{ad_chain, ad_sequence, bracket, normalize, LieElement};
pub use generator::{Alphabet, Generator, MultiIndex, Side};
pub use lyndon::{is_lyndon, lyndon_words, LyndonWord};
pub use monomial::LieMonomial;
