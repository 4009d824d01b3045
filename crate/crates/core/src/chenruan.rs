//! The orbifold cohomology of the quotient stack: classes split into an
//! untwisted part in Q[a,b,g]/I_g and contributions of the twisted sectors,
//! with the degree-zero orbifold cup product and the orbifold pairing.

use crate::classical::{full_poincare_polynomial, invariant_ring, InvariantRing};
use crate::error::{Error, Result};
use crate::hilbert::IntPoly;
use crate::linalg;
use crate::monomial::{ALPHA, BETA, GAMMA, QPARAM};
use crate::poly::GradedPolynomial;
use crate::rational::{rat, rat_pow2, Rational};
use crate::sector::{sector_rank, weil_pairing, SectorBasisElement};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A class with an untwisted polynomial part and a finite combination of
/// twisted-sector generators. Twisted coefficients are polynomials in the
/// deformation parameter only, so the same type carries classical classes
/// (constant coefficients) and quantum products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbifoldClass {
    genus: u32,
    untwisted: GradedPolynomial,
    twisted: BTreeMap<SectorBasisElement, GradedPolynomial>,
}

impl OrbifoldClass {
    pub fn zero(genus: u32) -> Self {
        OrbifoldClass { genus, untwisted: GradedPolynomial::zero(), twisted: BTreeMap::new() }
    }

    pub fn unit(genus: u32) -> Self {
        Self::from_untwisted(genus, GradedPolynomial::one())
    }

    pub fn from_untwisted(genus: u32, p: GradedPolynomial) -> Self {
        OrbifoldClass { genus, untwisted: p, twisted: BTreeMap::new() }
    }

    pub fn from_sector(genus: u32, elem: SectorBasisElement) -> Result<Self> {
        Self::from_sector_scaled(genus, elem, GradedPolynomial::one())
    }

    pub fn from_sector_scaled(genus: u32, elem: SectorBasisElement, coeff: GradedPolynomial) -> Result<Self> {
        if elem.genus() != genus {
            return Err(Error::GenusMismatch(elem.genus(), genus));
        }
        let mut out = Self::zero(genus);
        out.add_sector_term(elem, coeff);
        Ok(out)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn untwisted_part(&self) -> &GradedPolynomial {
        &self.untwisted
    }

    pub fn twisted_part(&self) -> &BTreeMap<SectorBasisElement, GradedPolynomial> {
        &self.twisted
    }

    pub fn is_zero(&self) -> bool {
        self.untwisted.is_zero() && self.twisted.is_empty()
    }

    pub fn add_untwisted(&mut self, p: &GradedPolynomial) {
        self.untwisted += p;
    }

    pub fn add_sector_term(&mut self, elem: SectorBasisElement, coeff: GradedPolynomial) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(
            coeff.terms().all(|(m, _)| m.0[ALPHA] == 0 && m.0[BETA] == 0 && m.0[GAMMA] == 0),
            "twisted coefficients are polynomials in Q only"
        );
        let entry = self.twisted.entry(elem).or_insert_with(GradedPolynomial::zero);
        *entry += &coeff;
        if entry.is_zero() {
            self.twisted.remove(&elem);
        }
    }

    pub fn add(&self, other: &OrbifoldClass) -> Result<OrbifoldClass> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch(self.genus, other.genus));
        }
        let mut out = self.clone();
        out.untwisted += &other.untwisted;
        for (e, c) in &other.twisted {
            out.add_sector_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> OrbifoldClass {
        let mut out = OrbifoldClass::zero(self.genus);
        out.untwisted = self.untwisted.scale(c);
        for (e, coeff) in &self.twisted {
            out.add_sector_term(*e, coeff.scale(c));
        }
        out
    }

    pub fn negate(&self) -> OrbifoldClass {
        self.scale(&rat(-1))
    }

    /// Multiply by Q^e (the deformation parameter is central).
    pub fn mul_q_power(&self, e: u32) -> OrbifoldClass {
        let mut out = OrbifoldClass::zero(self.genus);
        out.untwisted = self.untwisted.mul_q_power(e);
        for (elem, coeff) in &self.twisted {
            out.add_sector_term(*elem, coeff.mul_q_power(e));
        }
        out
    }

    pub fn substitute_q_zero(&self) -> OrbifoldClass {
        let mut out = OrbifoldClass::zero(self.genus);
        out.untwisted = self.untwisted.specialize_q_zero();
        for (elem, coeff) in &self.twisted {
            out.add_sector_term(*elem, coeff.specialize_q_zero());
        }
        out
    }

    pub fn uses_q(&self) -> bool {
        self.untwisted.uses_q() || self.twisted.values().any(GradedPolynomial::uses_q)
    }

    /// Real (topological) degrees present in a Q-free class: 2x the
    /// algebraic degree of untwisted monomials, s + 2(g-1) for sector terms.
    pub fn real_degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        let grading = crate::monomial::Grading::classical();
        for (m, _) in self.untwisted.terms() {
            out.push(2 * m.degree(&grading));
        }
        for elem in self.twisted.keys() {
            out.push(elem.real_degree());
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Algebraic degrees present, with the given weight for the deformation
    /// parameter (2 in the untwisted ring, 1 in twisted identities).
    pub fn algebraic_degrees(&self, q_weight: u32) -> Vec<u32> {
        let grading = crate::monomial::Grading {
            weights: [1, 2, 3, q_weight],
            nvars: 4,
        };
        let mut out: Vec<u32> = Vec::new();
        for (m, _) in self.untwisted.terms() {
            out.push(m.degree(&grading));
        }
        for (elem, coeff) in &self.twisted {
            for (m, _) in coeff.terms() {
                out.push(elem.algebraic_degree() + m.0[QPARAM] * q_weight);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Degree-raising inside a sector: multiplication by an untwisted class of
/// algebraic degree d sends the generator (kappa, s, i) to
/// (kappa, s + 2d, i) when the target degree stays within the sector and the
/// index survives the rank truncation, and to zero otherwise. This is the
/// one place the opaque-generator model of the sector cohomology is pinned.
pub fn sector_raise(elem: &SectorBasisElement, by_algebraic_degree: u32) -> Option<SectorBasisElement> {
    let g = elem.genus();
    let target = elem.s + 2 * by_algebraic_degree;
    if target > 2 * (g - 1) {
        return None;
    }
    let rank = sector_rank(g, target).ok()?;
    if (elem.index as u64) > rank {
        return None;
    }
    Some(SectorBasisElement { kappa: elem.kappa, s: target, index: elem.index })
}

/// The orbifold cohomology with its cup product. Holds the invariant ring
/// and the solved case-(1) classes; immutable once built.
#[derive(Clone, Debug)]
pub struct ChenRuanAlgebra {
    ring: InvariantRing,
    /// omega[(s+t)/2] is the untwisted class produced by a same-sector
    /// product of total twisted degree s + t.
    omega: Vec<GradedPolynomial>,
}

impl ChenRuanAlgebra {
    pub fn new(genus: u32) -> Result<Self> {
        Self::with_ring(invariant_ring(genus)?)
    }

    pub fn with_ring(ring: InvariantRing) -> Result<Self> {
        let g = ring.genus();
        let mut omega = Vec::new();
        for half in 0..=(g - 1) {
            omega.push(solve_case1(&ring, half)?);
        }
        Ok(ChenRuanAlgebra { ring, omega })
    }

    pub fn genus(&self) -> u32 {
        self.ring.genus()
    }

    pub fn ring(&self) -> &InvariantRing {
        &self.ring
    }

    /// The class Omega of algebraic degree (s+t)/2 + 2(g-1) fixed by
    /// pairing(Omega, m) = 1/|Gamma| against every standard monomial m of
    /// the complementary degree.
    pub fn case1_class(&self, s_plus_t: u32) -> Result<&GradedPolynomial> {
        let g = self.genus();
        if s_plus_t % 2 == 1 {
            return Err(Error::OddSectorDegree(s_plus_t));
        }
        if s_plus_t > 2 * (g - 1) {
            return Err(Error::SectorDegreeRange { s: s_plus_t, max: 2 * (g - 1) });
        }
        Ok(&self.omega[(s_plus_t / 2) as usize])
    }

    /// Rewrite the untwisted part in normal form; sector terms are already
    /// canonical.
    pub fn canonicalize(&self, x: &OrbifoldClass) -> Result<OrbifoldClass> {
        let mut out = OrbifoldClass::zero(x.genus());
        out.add_untwisted(&self.ring.normal_form(x.untwisted_part())?);
        for (e, c) in x.twisted_part() {
            out.add_sector_term(*e, c.clone());
        }
        Ok(out)
    }

    /// The orbifold cup product, distributed bilinearly over the sector
    /// decomposition of both operands.
    pub fn cr_product(&self, x: &OrbifoldClass, y: &OrbifoldClass) -> Result<OrbifoldClass> {
        let g = self.genus();
        if x.genus() != g || y.genus() != g {
            return Err(Error::GenusMismatch(x.genus(), y.genus()));
        }
        let mut out = OrbifoldClass::zero(g);

        // Untwisted times untwisted: normal-form product in the quotient.
        if !x.untwisted.is_zero() && !y.untwisted.is_zero() {
            out.untwisted += &self.ring.normal_form(&(&x.untwisted * &y.untwisted))?;
        }

        // Untwisted times twisted, both ways.
        for (elem, c) in &y.twisted {
            self.untwisted_times_sector(&x.untwisted, elem, c, &mut out)?;
        }
        for (elem, c) in &x.twisted {
            self.untwisted_times_sector(&y.untwisted, elem, c, &mut out)?;
        }

        // Twisted times twisted.
        for (e1, c1) in &x.twisted {
            for (e2, c2) in &y.twisted {
                let coeff = c1 * c2;
                if e1.kappa == e2.kappa {
                    // Same sector: untwisted output pinned by the pairing.
                    let total = e1.s + e2.s;
                    if total <= 2 * (g - 1) {
                        let omega = self.case1_class(total)?;
                        out.untwisted += &(omega * &coeff);
                    }
                } else if weil_pairing(&e1.kappa, &e2.kappa)? == 1 && e1.s == 0 && e2.s == 0 {
                    // Transverse sectors meet in a stacky point: top-degree
                    // output in the xor sector, scaled by 2^{2g-2}.
                    let k3 = e1.kappa.xor(&e2.kappa)?;
                    let top = SectorBasisElement::new(k3, 2 * (g - 1), 1)?;
                    out.add_sector_term(top, coeff.scale(&rat_pow2(2 * g - 2)));
                }
                // Non-pairing distinct sectors, and pairs of positive
                // degree, multiply to zero.
            }
        }
        Ok(out)
    }

    fn untwisted_times_sector(
        &self,
        u: &GradedPolynomial,
        elem: &SectorBasisElement,
        coeff: &GradedPolynomial,
        out: &mut OrbifoldClass,
    ) -> Result<()> {
        if u.is_zero() {
            return Ok(());
        }
        let grading = crate::monomial::Grading::classical();
        for (m, c) in u.terms() {
            if m.uses_q() {
                return Err(Error::VariableMismatch);
            }
            let d = m.degree(&grading);
            if let Some(raised) = sector_raise(elem, d) {
                out.add_sector_term(raised, coeff.scale(c));
            }
        }
        Ok(())
    }

    /// Sector-diagonal orbifold pairing: the untwisted parts pair through
    /// the top-degree pairing scaled by 1/|Gamma|; a sector generator pairs
    /// with the same-index generator of complementary degree in its own
    /// sector, contributing 1/|Gamma|.
    pub fn orbifold_pairing(&self, x: &OrbifoldClass, y: &OrbifoldClass) -> Result<Rational> {
        let g = self.genus();
        if x.genus() != g || y.genus() != g {
            return Err(Error::GenusMismatch(x.genus(), y.genus()));
        }
        let gamma_order = rat_pow2(2 * g);
        let mut acc = self.ring.pairing(&x.untwisted, &y.untwisted)? / &gamma_order;
        for (e1, c1) in &x.twisted {
            let partner = SectorBasisElement {
                kappa: e1.kappa,
                s: 2 * (g - 1) - e1.s,
                index: e1.index,
            };
            if let Some(c2) = y.twisted.get(&partner) {
                let prod = c1 * c2;
                let c = constant_value(&prod)?;
                acc += c / &gamma_order;
            }
        }
        Ok(acc)
    }
}

fn constant_value(p: &GradedPolynomial) -> Result<Rational> {
    if p.is_zero() {
        return Ok(Rational::zero());
    }
    if p.len() == 1 {
        if let Some((m, c)) = p.terms().next() {
            if m.is_one() {
                return Ok(c.clone());
            }
        }
    }
    Err(Error::Unsupported(
        "pairing requires classes with constant (Q-free) coefficients".into(),
    ))
}

fn solve_case1(ring: &InvariantRing, half: u32) -> Result<GradedPolynomial> {
    let g = ring.genus();
    let degree = half + 2 * (g - 1);
    let complement = (g - 1) - half;
    let basis = ring.graded_basis(degree);
    let dual = ring.graded_basis(complement);
    if basis.is_empty() || basis.len() != dual.len() {
        return Err(Error::SingularPairing(degree));
    }
    let rhs_value = Rational::from_integer(1.into()) / rat_pow2(2 * g);
    let mut matrix = Vec::with_capacity(dual.len());
    for d in &dual {
        let mut row = Vec::with_capacity(basis.len());
        let dp = GradedPolynomial::monomial(*d, rat(1));
        for b in &basis {
            let bp = GradedPolynomial::monomial(*b, rat(1));
            row.push(ring.pairing(&bp, &dp)?);
        }
        matrix.push(row);
    }
    let rhs = vec![rhs_value; dual.len()];
    let coeffs = linalg::solve(matrix, rhs).ok_or(Error::SingularPairing(degree))?;
    let mut omega = GradedPolynomial::zero();
    for (m, c) in basis.iter().zip(coeffs) {
        omega.add_term(*m, c);
    }
    Ok(omega)
}

/// Poincare polynomial of the orbifold cohomology in the real grading:
/// the untwisted polynomial plus (2^{2g}-1) age-shifted sector contributions.
pub fn cr_poincare_polynomial(genus: u32) -> Result<IntPoly> {
    let mut out = full_poincare_polynomial(genus)?;
    let sectors = (1i128 << (2 * genus)) - 1;
    let shift = 2 * (genus - 1);
    for s in (0..=2 * (genus - 1)).step_by(2) {
        let rank = sector_rank(genus, s)? as i128;
        out[(s + shift) as usize] += sectors * rank;
    }
    Ok(out)
}

/// One row of the structure-constant table: left * right expanded over the
/// generator set, each result term as (canonical text, coefficient text).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductEntryJson {
    pub left: String,
    pub right: String,
    pub result: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureConstantsJson {
    pub schema_version: u32,
    pub genus: u32,
    pub products: Vec<ProductEntryJson>,
}

/// Names and classes of the generator set used for table exports: a, b, g
/// and every sector generator.
pub fn generator_set(algebra: &ChenRuanAlgebra) -> Result<Vec<(String, OrbifoldClass)>> {
    let g = algebra.genus();
    let mut gens: Vec<(String, OrbifoldClass)> = vec![
        ("a".into(), OrbifoldClass::from_untwisted(g, crate::poly::alpha())),
        ("b".into(), OrbifoldClass::from_untwisted(g, crate::poly::beta())),
        ("g".into(), OrbifoldClass::from_untwisted(g, crate::poly::gamma())),
    ];
    for kappa in crate::sector::twisted_classes(g)? {
        for s in (0..=2 * (g - 1)).step_by(2) {
            let rank = sector_rank(g, s)?;
            for index in 1..=rank as u32 {
                let elem = SectorBasisElement::new(kappa, s, index)?;
                gens.push((elem.text(), OrbifoldClass::from_sector(g, elem)?));
            }
        }
    }
    Ok(gens)
}

pub fn export_structure_constants(algebra: &ChenRuanAlgebra) -> Result<StructureConstantsJson> {
    let g = algebra.genus();
    if g > 3 {
        return Err(Error::Unsupported(
            "structure-constant export enumerates the full generator set; supported for genus <= 3".into(),
        ));
    }
    let gens = generator_set(algebra)?;
    let mut products = Vec::new();
    for (lname, lclass) in &gens {
        for (rname, rclass) in &gens {
            let prod = algebra.cr_product(lclass, rclass)?;
            let mut result = Vec::new();
            for (m, c) in prod.untwisted_part().terms() {
                result.push((m.text(&crate::monomial::ASCII_NAMES), c.to_string()));
            }
            for (elem, coeff) in prod.twisted_part() {
                let c = constant_value(coeff)?;
                result.push((elem.text(), c.to_string()));
            }
            products.push(ProductEntryJson {
                left: lname.clone(),
                right: rname.clone(),
                result,
            });
        }
    }
    Ok(StructureConstantsJson {
        schema_version: crate::classical::SCHEMA_VERSION,
        genus: g,
        products,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{alpha, beta, gamma};
    use crate::rational::ratq;
    use crate::sector::{twisted_classes, TorsionClass};

    fn kappa(g: u32, bits: u64) -> TorsionClass {
        TorsionClass::new(g, bits).unwrap()
    }

    fn sector(g: u32, bits: u64, s: u32, i: u32) -> OrbifoldClass {
        OrbifoldClass::from_sector(g, SectorBasisElement::new(kappa(g, bits), s, i).unwrap()).unwrap()
    }

    #[test]
    fn unit_is_two_sided() {
        let cr = ChenRuanAlgebra::new(2).unwrap();
        let one = OrbifoldClass::unit(2);
        // Untwisted part in normal form, so the product returns it verbatim.
        let x = sector(2, 0b0001, 2, 1)
            .add(&OrbifoldClass::from_untwisted(2, &alpha() + &alpha().pow(2)))
            .unwrap();
        assert_eq!(cr.cr_product(&one, &x).unwrap(), x);
        assert_eq!(cr.cr_product(&x, &one).unwrap(), x);
        // A non-reduced representative comes back canonicalized.
        let y = OrbifoldClass::from_untwisted(2, beta());
        assert_eq!(
            cr.cr_product(&one, &y).unwrap(),
            OrbifoldClass::from_untwisted(2, -&alpha().pow(2))
        );
    }

    #[test]
    fn alpha_vanishes_on_the_top_sector_degree() {
        let cr = ChenRuanAlgebra::new(2).unwrap();
        let a = OrbifoldClass::from_untwisted(2, alpha());
        let top = sector(2, 0b0001, 2, 1);
        assert!(cr.cr_product(&a, &top).unwrap().is_zero());
        let bottom = sector(2, 0b0001, 0, 1);
        let raised = cr.cr_product(&a, &bottom).unwrap();
        assert_eq!(raised, sector(2, 0b0001, 2, 1));
    }

    #[test]
    fn beta_gamma_thresholds_at_genus_three() {
        let cr = ChenRuanAlgebra::new(3).unwrap();
        let b = OrbifoldClass::from_untwisted(3, beta());
        let c = OrbifoldClass::from_untwisted(3, gamma());
        // 2(g-1) = 4: b raises by 4, so only s = 0 survives; g raises by 6,
        // so nothing survives.
        assert_eq!(cr.cr_product(&b, &sector(3, 1, 0, 1)).unwrap(), sector(3, 1, 4, 1));
        assert!(cr.cr_product(&b, &sector(3, 1, 2, 1)).unwrap().is_zero());
        assert!(cr.cr_product(&c, &sector(3, 1, 0, 1)).unwrap().is_zero());
    }

    #[test]
    fn case_four_products() {
        let g = 2;
        let cr = ChenRuanAlgebra::new(g).unwrap();
        let k1 = kappa(g, 0b0001);
        let k2 = kappa(g, 0b0100); // e1 and e_{g+1}: pairing 1
        let k3 = kappa(g, 0b0010); // e1 and e2: pairing 0
        assert_eq!(weil_pairing(&k1, &k2).unwrap(), 1);
        assert_eq!(weil_pairing(&k1, &k3).unwrap(), 0);
        let u1 = sector(g, 0b0001, 0, 1);
        let u2 = sector(g, 0b0100, 0, 1);
        let u3 = sector(g, 0b0010, 0, 1);
        let prod = cr.cr_product(&u1, &u2).unwrap();
        let expected_elem = SectorBasisElement::new(k1.xor(&k2).unwrap(), 2, 1).unwrap();
        let expected =
            OrbifoldClass::from_sector_scaled(g, expected_elem, GradedPolynomial::constant(rat(4)))
                .unwrap();
        assert_eq!(prod, expected);
        assert!(cr.cr_product(&u1, &u3).unwrap().is_zero());
        // (s,t) != (0,0) dies even for paired sectors.
        let h1 = sector(g, 0b0001, 2, 1);
        assert!(cr.cr_product(&h1, &u2).unwrap().is_zero());
    }

    #[test]
    fn case_one_genus_two() {
        let cr = ChenRuanAlgebra::new(2).unwrap();
        // s = t = 0: Omega has algebraic degree 2 and pairs to 1/16
        // against a.
        let omega = cr.case1_class(0).unwrap().clone();
        assert_eq!(omega, alpha().pow(2).scale(&ratq(1, 16)));
        let u = sector(2, 0b0001, 0, 1);
        let prod = cr.cr_product(&u, &u).unwrap();
        assert_eq!(prod, OrbifoldClass::from_untwisted(2, omega));
        // s + t beyond the sector top gives zero.
        let h = sector(2, 0b0001, 2, 1);
        assert!(cr.cr_product(&h, &h).unwrap().is_zero());
    }

    #[test]
    fn products_are_graded_and_commutative_genus_two() {
        let cr = ChenRuanAlgebra::new(2).unwrap();
        let gens = generator_set(&cr).unwrap();
        for (_, x) in &gens {
            for (_, y) in &gens {
                let xy = cr.cr_product(x, y).unwrap();
                let yx = cr.cr_product(y, x).unwrap();
                assert_eq!(xy, yx);
                if !xy.is_zero() {
                    let dx = x.real_degrees()[0];
                    let dy = y.real_degrees()[0];
                    assert_eq!(xy.real_degrees(), vec![dx + dy]);
                }
            }
        }
    }

    #[test]
    fn orbifold_poincare_polynomial_genus_two() {
        let p = cr_poincare_polynomial(2).unwrap();
        assert_eq!(p, vec![1, 0, 16, 4, 16, 0, 1]);
        for g in 2..=4 {
            let p = cr_poincare_polynomial(g).unwrap();
            let n = p.len() - 1;
            for d in 0..=n {
                assert_eq!(p[d], p[n - d], "genus {} degree {}", g, d);
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let cr = ChenRuanAlgebra::new(2).unwrap();
        let u = sector(2, 0b0001, 0, 1);
        let top = sector(2, 0b0001, 2, 1);
        assert_eq!(cr.orbifold_pairing(&u, &top).unwrap(), ratq(1, 16));
        let other = sector(2, 0b0010, 2, 1);
        assert_eq!(cr.orbifold_pairing(&u, &other).unwrap(), rat(0));
        assert_eq!(cr.orbifold_pairing(&u, &u).unwrap(), rat(0));
        // Middle-degree sectors at genus 3 are self-dual.
        let cr3 = ChenRuanAlgebra::new(3).unwrap();
        let mid = sector(3, 1, 2, 1);
        assert_eq!(cr3.orbifold_pairing(&mid, &mid).unwrap(), ratq(1, 64));
        let mid_other = sector(3, 1, 2, 2);
        assert_eq!(cr3.orbifold_pairing(&mid, &mid_other).unwrap(), rat(0));
    }

    #[test]
    fn sector_count_matches_group_order() {
        assert_eq!(twisted_classes(2).unwrap().count() as i128, (1i128 << 4) - 1);
    }
}
