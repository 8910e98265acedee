//! Exact computations for Yangians of classical Lie algebras and G2: ordered
//! tensor-product realizations of local Weyl modules, cyclicity and
//! irreducibility criteria for tensor products of fundamental
//! representations, and an explicit Y(sl2) engine used to cross-check them.

pub mod exact;
pub mod rootsys;
pub mod weylpath;
pub mod drinfeld;
pub mod criteria;
pub mod dims;
pub mod ysl2;
pub mod cli;
