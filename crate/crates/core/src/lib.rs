//! Exact symbolic computation for the prime regular Hopf algebras of
//! Gelfand-Kirillov dimension one.
//!
//! The crate constructs five families of Hopf algebras as confluent rewriting
//! systems with canonical monomial bases — the polynomial and Laurent lines
//! `k[x]` and `k[x^{±1}]`, the infinite dihedral group algebra, the Taft
//! algebras `H(n,t,ξ)`, and the generalized Liu algebras `B(n,w,ξ)` — and
//! computes their Hopf-theoretic invariants with exact cyclotomic arithmetic:
//!
//! * coproduct, counit and antipode, with full axiom verification
//!   ([`hopf`]);
//! * characters, convolution, winding automorphisms, the integral order
//!   `io`, the integral minor `im`, graded decompositions, strong-grading
//!   witnesses, the integral annihilator `J_iq`, and the PI-degree
//!   ([`winding`]);
//! * the finite-dimensional twistor quotient with its multiplication and
//!   coproduct coefficient tables ([`twistor`]);
//! * detection of group-like and skew-primitive elements in truncated
//!   slices, and a classification oracle keyed on `(io, im)` and the
//!   primitive/group-like dichotomy ([`classify`]).
//!
//! Everything is `no_std` + `alloc`; there is no floating point anywhere.
//! The companion `gkhopf-cli` crate carries the command-line interface and
//! the structured output formats.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod scalars;

pub use scalars::{primitive_root, qbinom, Cyclotomic, Order, Rational};
