//! Factorization in imaginary quadratic orders `Z[sqrt(d)]`, their polynomial
//! rings and the constructions `R + xK[x]` and `R + Rx + x^2 K[x]`.
//!
//! All arithmetic is exact. Elements of `R` use machine integers; elements
//! of the quotient field and polynomial coefficients use big rationals.

pub mod arith;
pub mod error;
pub mod extring;
pub mod factor;
pub mod ideals;
pub mod kelem;
pub mod kpoly;
pub mod qint;
pub mod rpoly;
pub mod text;

pub use error::{Error, Result};

/// Serializes through `Display`, so reports use the text grammar.
macro_rules! serialize_as_text {
    ($($t:ty),*) => {$(
        impl serde::Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
    )*};
}

serialize_as_text!(QuadInt, KElem, KPoly, RPoly, FracIdeal);
pub use extring::{D1Class, ExtElem, Level};
pub use factor::{Elasticity, FactorizationSet, Factorizer};
pub use ideals::FracIdeal;
pub use kelem::KElem;
pub use kpoly::KPoly;
pub use qint::{QuadInt, RingCfg};
pub use rpoly::RPoly;
