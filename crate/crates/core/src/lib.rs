//! Exact classification of global surfaces of section for Seifert fibered
//! 3-manifolds.
//!
//! A closed oriented Seifert fibered 3-manifold is presented by unnormalized
//! invariants `M(g; (a1,b1), ..., (an,bn))`: a base surface of genus `g` and
//! one coprime gluing pair per marked fiber.  This crate computes, with exact
//! arbitrary-precision arithmetic throughout:
//!
//! * the rational Euler number and the canonical normal form under the
//!   standard equivalence moves ([`seifert`]);
//! * quotients by the cyclic subgroups of the fiber circle ([`quotient`]);
//! * existence and topology (genus, boundary components) of positive
//!   `d`-sections, i.e. global surfaces of section hitting every fiber `d`
//!   times ([`sections`]);
//! * the closed-form `d`-section families for the Seifert fibrations of the
//!   3-sphere, with an independent Riemann-Hurwitz oracle through the Hopf
//!   fibration ([`sphere`]);
//! * the degree-genus formula on weighted projective planes, which realizes
//!   those sections as algebraic curves ([`wps`]);
//! * integer surgery presentations for base genus zero ([`surgery`]).
//!
//! No floating point is used anywhere in the computational core; every
//! rational intermediate is checked for exact integrality before it is
//! converted to an integer.

mod arith;
mod error;

pub mod parse;
pub mod quotient;
pub mod sections;
pub mod seifert;
pub mod sphere;
pub mod surgery;
pub mod wps;

/// Exact rational number: arbitrary-precision, always in lowest terms with a
/// positive denominator.  Renders as `p/q`, or `p` alone when `q == 1`.
pub type Rational = num_rational::BigRational;

pub use error::Error;
pub use parse::ParseError;
pub use quotient::zd_quotient;
pub use sections::{
    classify_one_section, classify_positive_d_section, d_section_necessary, minimal_positive_d,
    rh_quotient_chi, FiberRole, Obstruction, OneSection, OneSectionResult, PairVerdict,
    PositiveSectionOutcome, SectionReport, Sign, SignChoice, Topology,
};
pub use seifert::{ExceptionalPair, InvalidSeifertData, MoveError, MoveSpec, NormalForm, SeifertData};
pub use sphere::{rh_hopf_lift_genus, sphere_from_weights, BranchProfile, Family, SphereFibration, TableRow};
pub use surgery::{rolfsen_twist, surgery_presentation, MeridianCoefficient, SurgeryDiagram};
pub use wps::{
    admissible_degrees, curve_section_correspondence, degree_genus, CurveSectionSummary, CurveSpec,
    DegreeRep, WeightedPlane,
};
