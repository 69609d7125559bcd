//! Exact polynomial algebra over the rationals: parsing, arithmetic and
//! Groebner-basis machinery (elimination, saturation, dimension, consistency).

mod groebner;
mod ideal;
mod parse;
mod poly;

pub use groebner::{leading_monomial, Budget, MonomialOrder};
pub use ideal::{
    eliminate, groebner, ideal_dimension, is_inconsistent, normal_form, saturate, vanishes_at, GroebnerBasis, Ideal, IdealFile,
};
pub use parse::parse_poly;
pub use poly::{Monomial, Polynomial, Rational, Ring};

#[cfg(test)]
mod tests;
