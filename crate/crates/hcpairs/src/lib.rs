//! Exact SL2/GL2 weight modules, bracket spaces and Harish-Chandra pair verification.

pub mod exactla;
pub mod rep;
pub mod hcpair;
pub mod homsolve;
pub mod families;
pub mod isomap;
pub mod centralizers;
pub mod suite;
pub mod cli;
