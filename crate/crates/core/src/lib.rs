//! Local invariants of isolated complete intersection singularities.
//!
//! The crate computes Milnor, Tjurina and Bruce–Roberts numbers with Mora
//! standard bases over the local ring at the origin, and derives the
//! GSV-index, local Euler obstructions, the Brasselet number and the top
//! polar multiplicity from them, checking every identity that relates these
//! numbers exactly.
//!
//! All algebra is generic over an exact [`Coefficient`] field; the aliases
//! below fix it to arbitrary-precision rationals.

pub mod derlog;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod ops;
pub mod parse;
pub mod polynomial;
pub mod ring;
pub mod scalar;
pub mod stdbasis;

pub use error::{Error, IcisViolation, ParseError, ParseErrorKind};
pub use module::{LeadTerm, ModuleElement, Submodule};
pub use monomial::{LocalOrder, ModuleOrder, Monomial};
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use ring::RingSpec;
pub use scalar::Coefficient;
pub use stdbasis::{mora_normal_form, standard_basis, Budget, Colength, NormalFormCertificate, StandardBasis};

pub type Rational = num_rational::BigRational;
pub type Poly = Polynomial<Rational>;
pub type Element = ModuleElement<Rational>;
pub type Module = Submodule<Rational>;
pub type Basis = StandardBasis<Rational>;
pub type Germ = derlog::VarietyGerm<Rational>;
pub type Report = invariants::InvariantReport<Rational>;
