//! Genus-2 curves over real quadratic fields whose restrictions of scalars
//! are abelian fourfolds of GL4-type, together with an exact certifier for
//! trivial geometric endomorphism rings.
//!
//! Module map:
//! - [`exact`]: rationals, polynomials, resultants, cyclotomics, quartic factoring
//! - [`numberfield`]: real quadratic fields and quartic Weil fields
//! - [`finitefield`]: 𝔽_p, 𝔽_{p²}, 𝔽_{p⁴}
//! - [`symbolic`]: generic verification of the family identities
//! - [`curves`]: the curve family, reduction, point counting, Jacobians, Richelot
//! - [`criterion`]: stable irreducibility, ordinariness and certificates

pub mod criterion;
pub mod curves;
pub mod exact;
pub mod finitefield;
pub mod numberfield;
pub mod symbolic;
