//! The three-term relation recursion, the invariant ring Q[a,b,g]/I_g, the
//! Poincare polynomial of the full cohomology and the top-degree pairing.

use crate::error::{Error, Result};
use crate::hilbert::{HilbertSeries, IntPoly};
use crate::ideal::{IdealPresentation, DEFAULT_DEGREE_CAP};
use crate::monomial::{Grading, Monomial};
use crate::poly::{alpha, beta, gamma, GradedPolynomial};
use crate::rational::{rat, ratq, Rational};
use num_integer::binomial;
use serde::{Deserialize, Serialize};

/// The level-r relation triple (q_r^1, q_r^2, q_r^3), homogeneous of
/// degrees (r, r+1, r+2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalRelationTriple {
    pub level: u32,
    pub q1: GradedPolynomial,
    pub q2: GradedPolynomial,
    pub q3: GradedPolynomial,
}

impl ClassicalRelationTriple {
    pub fn generators(&self) -> Vec<GradedPolynomial> {
        vec![self.q1.clone(), self.q2.clone(), self.q3.clone()]
    }
}

/// Iterate the recursion
///   q1' = a*q1 + r^2*q2,  q2' = b*q1 + (2r/(r+1))*q3,  q3' = g*q1
/// from (1, 0, 0). Level g >= 1.
pub fn classical_relations(g: u32) -> Result<ClassicalRelationTriple> {
    if g == 0 {
        return Err(Error::GenusOutOfRange { genus: 0, min: 1, max: u32::MAX });
    }
    let mut q1 = GradedPolynomial::one();
    let mut q2 = GradedPolynomial::zero();
    let mut q3 = GradedPolynomial::zero();
    for r in 0..g {
        let r_i64 = r as i64;
        let n1 = &(&alpha() * &q1) + &q2.scale(&rat(r_i64 * r_i64));
        let n2 = &(&beta() * &q1) + &q3.scale(&ratq(2 * r_i64, r_i64 + 1));
        let n3 = &gamma() * &q1;
        q1 = n1;
        q2 = n2;
        q3 = n3;
    }
    Ok(ClassicalRelationTriple { level: g, q1, q2, q3 })
}

/// The invariant ring Q[a,b,g]/I_g with its Groebner engine and the
/// normalization constant of the top pairing.
#[derive(Clone, Debug)]
pub struct InvariantRing {
    genus: u32,
    ideal: IdealPresentation,
    normalization: Rational,
    top_monomial: Monomial,
}

pub fn invariant_ring(g: u32) -> Result<InvariantRing> {
    InvariantRing::new(g, DEFAULT_DEGREE_CAP, rat(1))
}

impl InvariantRing {
    pub fn new(genus: u32, degree_cap: u32, normalization: Rational) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusOutOfRange { genus, min: 2, max: u32::MAX });
        }
        let triple = classical_relations(genus)?;
        let ideal = IdealPresentation::with_cap(triple.generators(), Grading::classical(), degree_cap)?;
        Self::from_ideal(genus, ideal, normalization)
    }

    pub fn from_ideal(genus: u32, ideal: IdealPresentation, normalization: Rational) -> Result<Self> {
        let top = 3 * genus - 3;
        let top_basis = ideal.graded_basis(top);
        // The top component is one-dimensional; the lexicographically least
        // standard monomial fixes the pairing reference.
        let top_monomial = top_basis
            .iter()
            .min_by(|a, b| a.0.cmp(&b.0))
            .copied()
            .ok_or(Error::SingularPairing(top))?;
        Ok(InvariantRing { genus, ideal, normalization, top_monomial })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn ideal(&self) -> &IdealPresentation {
        &self.ideal
    }

    pub fn normalization(&self) -> &Rational {
        &self.normalization
    }

    pub fn top_degree(&self) -> u32 {
        3 * self.genus - 3
    }

    pub fn top_monomial(&self) -> Monomial {
        self.top_monomial
    }

    pub fn normal_form(&self, p: &GradedPolynomial) -> Result<GradedPolynomial> {
        self.ideal.normal_form(p)
    }

    pub fn graded_basis(&self, d: u32) -> Vec<Monomial> {
        self.ideal.graded_basis(d)
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        self.ideal.hilbert_series()
    }

    /// Coefficient of the top standard monomial in the normal form of a*b,
    /// times the normalization constant. Vanishes unless the degrees are
    /// complementary.
    pub fn pairing(&self, a: &GradedPolynomial, b: &GradedPolynomial) -> Result<Rational> {
        let prod = self.normal_form(&(a * b))?;
        Ok(prod.coefficient(&self.top_monomial) * &self.normalization)
    }
}

pub fn poincare_pairing(ring: &InvariantRing, a: &GradedPolynomial, b: &GradedPolynomial) -> Result<Rational> {
    ring.pairing(a, b)
}

/// dim of the primitive part of the k-th exterior power of the odd-degree
/// slice: C(2g, k) - C(2g, k-2).
pub fn lambda0_dim(g: u32, k: u32) -> i128 {
    let n = 2 * g as i128;
    let first = binomial(n, k as i128);
    let second = if k >= 2 { binomial(n, k as i128 - 2) } else { 0 };
    first - second
}

/// Poincare polynomial of the full cohomology in the real (topological)
/// grading: sum over k of dim(Lambda_0^k) * t^{3k} * HS_{g-k}(t^2).
pub fn full_poincare_polynomial(g: u32) -> Result<IntPoly> {
    if g < 2 {
        return Err(Error::GenusOutOfRange { genus: g, min: 2, max: u32::MAX });
    }
    let mut out = vec![0i128; (6 * g - 6) as usize + 1];
    for k in 0..g {
        let level = g - k;
        let triple = classical_relations(level)?;
        let ideal = IdealPresentation::new(triple.generators(), Grading::classical())?;
        let hs = ideal.hilbert_series()?;
        let coeffs = hs
            .polynomial()
            .expect("complete-intersection quotient is finite-dimensional");
        let lam = lambda0_dim(g, k);
        for (d, c) in coeffs.iter().enumerate() {
            let real = 2 * d + 3 * k as usize;
            out[real] += lam * c;
        }
    }
    Ok(out)
}

/// JSON form of a ring presentation: generators with their degrees, the
/// relation texts, and the Hilbert polynomial of the quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingPresentationJson {
    pub schema_version: u32,
    pub genus: u32,
    pub generators: Vec<(String, u32)>,
    pub relations: Vec<String>,
    pub hilbert: Vec<i128>,
}

pub const SCHEMA_VERSION: u32 = 1;

pub fn export_classical(ring: &InvariantRing) -> Result<RingPresentationJson> {
    let hilbert = ring
        .hilbert_series()?
        .polynomial()
        .expect("invariant ring quotient is finite-dimensional");
    Ok(RingPresentationJson {
        schema_version: SCHEMA_VERSION,
        genus: ring.genus(),
        generators: vec![
            ("a".to_string(), 1),
            ("b".to_string(), 2),
            ("g".to_string(), 3),
        ],
        relations: ring
            .ideal()
            .generators()
            .iter()
            .map(GradedPolynomial::canonical_text)
            .collect(),
        hilbert,
    })
}
