#![forbid(unsafe_code)]

//! Exact computer algebra for Fermat/Ceva configuration ideals.
//!
//! The crate builds the codimension-two configuration ideal I of all
//! triple-intersection flats of a Fermat hyperplane arrangement, decides
//! symbolic-power membership by vanishing orders along each flat, decides
//! ordinary-power membership by Groebner normal forms, and packages the
//! inductive transport of noncontainment to higher dimension as a
//! machine-checkable certificate chain.
//!
//! Everything is generic over the coefficient [`coeff::Field`]; two exact
//! backends are provided, with concrete aliases below.

pub mod arrangement;
pub mod certify;
pub mod coeff;
mod error;
pub mod groebner;
mod linalg;
pub mod multipoly;
pub mod symbolic;

pub use arrangement::{
    build_config, config_dump, config_hash, hyperplane_factors, verify_lemma1, Configuration,
    Lemma1Report, LinearPrime, PrimeTag,
};
pub use certify::{
    base_case, check_containment, ordinary_power_check, reduction_certificate, verify_certificate,
    verify_chain, ChainReport, ContainmentReport, OrdinaryReport, ReductionCertificate,
};
pub use coeff::{validate_spec, CycloElem, CyclotomicField, Field, FieldSpec, PrimeField};
pub use coeff::cyclotomic_poly;
pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal, Limits};
pub use multipoly::text::{format_poly, format_scalar, parse_poly, parse_scalar};
pub use multipoly::{Monomial, Poly, Ring, RingHom, TermOrder};
pub use symbolic::{
    adapted_coords, in_symbolic_power, min_vanishing_order, symbolic_power_ideal,
    symbolic_report, vanishing_order, AdaptedCoordinates, SymbolicReport,
};

/// Polynomials over the cyclotomic rationals Q(eps_n).
pub type QPoly = Poly<CyclotomicField>;
pub type QRing = Ring<CyclotomicField>;

/// Polynomials over a prime field F_p with n | p - 1.
pub type FpPoly = Poly<PrimeField>;
pub type FpRing = Ring<PrimeField>;
