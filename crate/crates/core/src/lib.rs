//! Exact computation in the cohomology rings attached to the moduli space of
//! rank-2 stable bundles on a genus-g curve and to its PGL2 quotient orbifold.
//!
//! Everything is exact rational arithmetic: sparse polynomials over Q in the
//! generators a (degree 1), b (degree 2), g (degree 3) and the deformation
//! parameter Q, Groebner normal forms for the recursively defined relation
//! ideals, the torsion group (Z/2)^{2g} with its mod-2 symplectic pairing,
//! the twisted-sector algebra, the orbifold cup product, its quantum
//! deformation, and closed-form dimension/invariant evaluators used as
//! independent cross-checks.

pub mod chenruan;
pub mod classical;
pub mod error;
pub mod gw;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod quantum;
pub mod rational;
pub mod report;
pub mod sector;
pub mod verify;

pub use chenruan::{cr_poincare_polynomial, ChenRuanAlgebra, OrbifoldClass};
pub use classical::{
    classical_relations, full_poincare_polynomial, invariant_ring, ClassicalRelationTriple,
    InvariantRing,
};
pub use error::{Error, Result};
pub use gw::{donaldson_evaluate, extension_rank, virtual_dim_m, virtual_dim_n, StackyModel};
pub use hilbert::HilbertSeries;
pub use ideal::IdealPresentation;
pub use monomial::{Grading, Monomial};
pub use poly::GradedPolynomial;
pub use quantum::{
    quantum_relations, twisted_alpha_product, ProductMode, QuantumOrbifoldPresentation,
    QuantumRelationTriple,
};
pub use rational::Rational;
pub use sector::{
    age, sector_integral, sector_rank, sector_total_rank, weil_pairing, SectorBasisElement,
    TorsionClass,
};
