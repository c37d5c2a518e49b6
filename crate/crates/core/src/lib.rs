//! Exact-arithmetic toolkit for conjugacy-class-size spectra.
//!
//! * [`numtheory`] — arbitrary-precision factorization, pi-parts,
//!   multiplicative orders, cyclotomic values, and greatest primitive
//!   divisors k_i(a).
//! * [`lieorders`] — order formulas for the finite simple groups of Lie
//!   type, outer automorphism orders, bound sweeps, and the index-formula
//!   catalog for the orthogonal groups D_n(q).
//! * [`groupengine`] — small concrete groups given by permutation
//!   generators: conjugacy classes, centralizers, Sylow subgroups,
//!   quotients, and coprime-action decompositions.
//! * [`spectrumlab`] — class-size spectra as abstract data: derived
//!   orders, the {p,q}* condition, and catalog recognition scans.
//! * [`verify`] — a registry of named desk-scale checks producing
//!   machine-readable reports.
//! * [`cache`] — the on-disk result cache behind the `csl` binary.

pub mod cache;
pub mod groupengine;
pub mod lieorders;
pub mod numtheory;
pub mod spectrumlab;
pub mod verify;
