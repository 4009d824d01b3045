//! The deformed relation ideals, the twisted deformation of multiplication
//! by a, the assembled quantum orbifold presentation with its two
//! normalization modes, the genus-2 ground-truth product table and the
//! classical limit.

use crate::chenruan::{sector_raise, ChenRuanAlgebra, OrbifoldClass};
use crate::classical::classical_relations;
use crate::error::{Error, Result};
use crate::ideal::{IdealPresentation, DEFAULT_DEGREE_CAP};
use crate::monomial::{Grading, ALPHA, BETA, GAMMA, QPARAM};
use crate::poly::{alpha, beta, gamma, qparam, GradedPolynomial};
use crate::rational::{rat, ratq, Rational};
use crate::sector::{sector_rank, twisted_classes, SectorBasisElement, TorsionClass};
use serde::{Deserialize, Serialize};

/// The level-r deformed triple, homogeneous of degrees (r, r+1, r+2) with
/// the deformation parameter of degree 2; at Q = 0 it is the classical
/// triple of the same level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumRelationTriple {
    pub level: u32,
    pub q1: GradedPolynomial,
    pub q2: GradedPolynomial,
    pub q3: GradedPolynomial,
}

impl QuantumRelationTriple {
    pub fn generators(&self) -> Vec<GradedPolynomial> {
        vec![self.q1.clone(), self.q2.clone(), self.q3.clone()]
    }
}

fn sign(parity: u32) -> Rational {
    if parity % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Level-2 base case
///   Q1 = a^2 + b + (-1)^g 8 Q
///   Q2 = a (b + (-1)^g 8 Q) + g
///   Q3 = a g + a^2 Q
/// then for r >= 2 the recursion
///   Q1' = a Q1 + r^2 Q2
///   Q2' = (b + (-1)^{r+g-1} 8 Q) Q1 + (2r/(r+1)) Q3
///   Q3' = g Q1
/// The 8Q in the recursion's middle line is forced by homogeneity and by
/// the level-2 base case.
pub fn quantum_relations(g: u32) -> Result<QuantumRelationTriple> {
    if g < 2 {
        return Err(Error::GenusOutOfRange { genus: g, min: 2, max: u32::MAX });
    }
    let eight_q = qparam().scale(&rat(8));
    let base_sign = sign(g);
    let deformed_beta = &beta() + &eight_q.scale(&base_sign);
    let mut q1 = &(&alpha() * &alpha()) + &deformed_beta;
    let mut q2 = &(&alpha() * &deformed_beta) + &gamma();
    let mut q3 = &(&alpha() * &gamma()) + &(&alpha() * &alpha()).mul_q_power(1);
    for r in 2..g {
        let r_i64 = r as i64;
        let step_beta = &beta() + &eight_q.scale(&sign(r + g - 1));
        let n1 = &(&alpha() * &q1) + &q2.scale(&rat(r_i64 * r_i64));
        let n2 = &(&step_beta * &q1) + &q3.scale(&ratq(2 * r_i64, r_i64 + 1));
        let n3 = &gamma() * &q1;
        q1 = n1;
        q2 = n2;
        q3 = n3;
    }
    Ok(QuantumRelationTriple { level: g, q1, q2, q3 })
}

/// The deformed product of a with a sector generator:
///   a . (1_k h^s) = 1_k a h^s + 1_k h^s Q   for s < 2(g-1)
///   a . (1_k h^{2(g-1)}) = 1_k h^{2(g-1)} Q
/// Both terms have algebraic degree g + s/2 once Q carries degree 1.
pub fn twisted_alpha_product(genus: u32, elem: &SectorBasisElement) -> Result<OrbifoldClass> {
    if elem.genus() != genus {
        return Err(Error::GenusMismatch(elem.genus(), genus));
    }
    if elem.s % 2 == 1 {
        return Err(Error::OddSectorDegree(elem.s));
    }
    let mut out = OrbifoldClass::zero(genus);
    if let Some(raised) = sector_raise(elem, 1) {
        out.add_sector_term(raised, GradedPolynomial::one());
    }
    out.add_sector_term(*elem, qparam());
    Ok(out)
}

/// Which convention the product engine runs in. The deformed relations and
/// the genus-2 constant table use different scalings of the degree-2 and
/// degree-4 generators, and the source material never reconciles them, so
/// both are exposed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ProductMode {
    /// Products of untwisted classes via normal form modulo the deformed
    /// relation ideal.
    Relations,
    /// Products looked up in the genus-2 table.
    Table,
}

impl ProductMode {
    pub fn name(&self) -> &'static str {
        match self {
            ProductMode::Relations => "relations",
            ProductMode::Table => "table",
        }
    }
}

/// The assembled quantum orbifold presentation: deformed relation ideal,
/// twisted product rules, sector data, and the product mode.
#[derive(Clone, Debug)]
pub struct QuantumOrbifoldPresentation {
    genus: u32,
    triple: QuantumRelationTriple,
    ideal: IdealPresentation,
    cr: ChenRuanAlgebra,
    mode: ProductMode,
}

impl QuantumOrbifoldPresentation {
    pub fn new(genus: u32, mode: ProductMode) -> Result<Self> {
        Self::with_cap(genus, mode, DEFAULT_DEGREE_CAP)
    }

    pub fn with_cap(genus: u32, mode: ProductMode, degree_cap: u32) -> Result<Self> {
        if mode == ProductMode::Table && genus != 2 {
            return Err(Error::Unsupported(
                "table mode is the genus-2 constant table".into(),
            ));
        }
        let triple = quantum_relations(genus)?;
        let ideal = IdealPresentation::with_cap(triple.generators(), Grading::quantum(), degree_cap)?;
        let cr = ChenRuanAlgebra::new(genus)?;
        Ok(QuantumOrbifoldPresentation { genus, triple, ideal, cr, mode })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn mode(&self) -> ProductMode {
        self.mode
    }

    pub fn relations(&self) -> &QuantumRelationTriple {
        &self.triple
    }

    pub fn ideal(&self) -> &IdealPresentation {
        &self.ideal
    }

    pub fn chen_ruan(&self) -> &ChenRuanAlgebra {
        &self.cr
    }

    /// Rewrite the untwisted part in normal form modulo the deformed ideal.
    pub fn canonicalize(&self, x: &OrbifoldClass) -> Result<OrbifoldClass> {
        let mut out = OrbifoldClass::zero(x.genus());
        out.add_untwisted(&self.ideal.normal_form(x.untwisted_part())?);
        for (e, c) in x.twisted_part() {
            out.add_sector_term(*e, c.clone());
        }
        Ok(out)
    }

    /// The deformed product. Untwisted products run through the deformed
    /// ideal (relations mode) or the genus-2 table; a acts on sectors with
    /// its linear deformation term; b and g act by their undeformed sector
    /// products; sector-sector products carry no deformation.
    pub fn quantum_product(&self, x: &OrbifoldClass, y: &OrbifoldClass) -> Result<OrbifoldClass> {
        if x.genus() != self.genus || y.genus() != self.genus {
            return Err(Error::GenusMismatch(x.genus(), y.genus()));
        }
        match self.mode {
            ProductMode::Relations => self.product_relations(x, y),
            ProductMode::Table => table_product(x, y),
        }
    }

    fn product_relations(&self, x: &OrbifoldClass, y: &OrbifoldClass) -> Result<OrbifoldClass> {
        let g = self.genus;
        let mut out = OrbifoldClass::zero(g);
        let xu = x.untwisted_part();
        let yu = y.untwisted_part();
        if !xu.is_zero() && !yu.is_zero() {
            out.add_untwisted(&self.ideal.normal_form(&(xu * yu))?);
        }
        for (elem, c) in y.twisted_part() {
            self.untwisted_times_sector_quantum(xu, elem, c, &mut out)?;
        }
        for (elem, c) in x.twisted_part() {
            self.untwisted_times_sector_quantum(yu, elem, c, &mut out)?;
        }
        // Sector-sector products keep their undeformed values.
        let x_tw = strip_untwisted(x);
        let y_tw = strip_untwisted(y);
        if !x_tw.is_zero() && !y_tw.is_zero() {
            let classical = self.cr.cr_product(&x_tw, &y_tw)?;
            out = out.add(&classical)?;
        }
        Ok(out)
    }

    /// Action of one untwisted monomial a^i b^j g^k Q^e on a sector
    /// generator: the a-action applies i times with its deformation term,
    /// b and g raise degrees undeformed, Q multiplies the coefficient.
    /// The generator actions commute, so the factorization order is
    /// immaterial.
    fn untwisted_times_sector_quantum(
        &self,
        u: &GradedPolynomial,
        elem: &SectorBasisElement,
        coeff: &GradedPolynomial,
        out: &mut OrbifoldClass,
    ) -> Result<()> {
        if u.is_zero() {
            return Ok(());
        }
        for (m, c) in u.terms() {
            let mut acc = OrbifoldClass::from_sector_scaled(self.genus, *elem, coeff.scale(c))?;
            // b^j and g^k: undeformed degree raising.
            let classical_degree = 2 * m.0[BETA] + 3 * m.0[GAMMA];
            if classical_degree > 0 {
                acc = raise_all(&acc, classical_degree);
            }
            // a^i: deformed action.
            for _ in 0..m.0[ALPHA] {
                acc = self.alpha_action(&acc)?;
            }
            // Q^e: central.
            if m.0[QPARAM] > 0 {
                acc = acc.mul_q_power(m.0[QPARAM]);
            }
            out.add_untwisted(acc.untwisted_part());
            for (e, cc) in acc.twisted_part() {
                out.add_sector_term(*e, cc.clone());
            }
        }
        Ok(())
    }

    fn alpha_action(&self, x: &OrbifoldClass) -> Result<OrbifoldClass> {
        let mut out = OrbifoldClass::zero(self.genus);
        debug_assert!(x.untwisted_part().is_zero());
        for (elem, c) in x.twisted_part() {
            let line = twisted_alpha_product(self.genus, elem)?;
            for (e, cc) in line.twisted_part() {
                out.add_sector_term(*e, cc * c);
            }
        }
        Ok(out)
    }

    /// The identities defining the twisted deformation, one per even sector
    /// degree, rendered symbolically in a generic sector.
    pub fn i_quantum_lines(&self) -> Vec<IQuantumLine> {
        let g = self.genus;
        let top = 2 * (g - 1);
        (0..=top)
            .step_by(2)
            .map(|s| {
                let lhs = format!("a * t[k]:h{}:i", s);
                let rhs = if s == top {
                    format!("t[k]:h{}:i*Q", s)
                } else {
                    format!("t[k]:h{}:i + t[k]:h{}:i*Q", s + 2, s)
                };
                IQuantumLine { s, lhs, rhs }
            })
            .collect()
    }

    /// Substitute Q = 0 everywhere and verify the result is the undeformed
    /// presentation: the relations become the classical triple and every
    /// twisted a-product drops to its cup-product value.
    pub fn classical_limit(&self) -> Result<ChenRuanAlgebra> {
        let g = self.genus;
        let classical = classical_relations(g)?;
        let specialized = QuantumRelationTriple {
            level: g,
            q1: self.triple.q1.specialize_q_zero(),
            q2: self.triple.q2.specialize_q_zero(),
            q3: self.triple.q3.specialize_q_zero(),
        };
        if specialized.q1 != classical.q1
            || specialized.q2 != classical.q2
            || specialized.q3 != classical.q3
        {
            return Err(Error::Unsupported(
                "deformed relations do not specialize to the classical triple".into(),
            ));
        }
        let a = OrbifoldClass::from_untwisted(g, alpha());
        let sample: Vec<TorsionClass> = if g <= 4 {
            twisted_classes(g)?.collect()
        } else {
            twisted_classes(g)?.take(3).collect()
        };
        for kappa in sample {
            for s in (0..=2 * (g - 1)).step_by(2) {
                let rank = sector_rank(g, s)?;
                for index in 1..=rank as u32 {
                    let elem = SectorBasisElement::new(kappa, s, index)?;
                    let limit = twisted_alpha_product(g, &elem)?.substitute_q_zero();
                    let cup = self
                        .cr
                        .cr_product(&a, &OrbifoldClass::from_sector(g, elem)?)?;
                    if limit != cup {
                        return Err(Error::Unsupported(format!(
                            "twisted a-product at {} does not specialize to the cup product",
                            elem.text()
                        )));
                    }
                }
            }
        }
        Ok(self.cr.clone())
    }
}

fn strip_untwisted(x: &OrbifoldClass) -> OrbifoldClass {
    let mut out = OrbifoldClass::zero(x.genus());
    for (e, c) in x.twisted_part() {
        out.add_sector_term(*e, c.clone());
    }
    out
}

/// Raise every sector term by the given algebraic degree, truncating by
/// rank, leaving untwisted parts untouched.
fn raise_all(x: &OrbifoldClass, by: u32) -> OrbifoldClass {
    let mut out = OrbifoldClass::zero(x.genus());
    out.add_untwisted(x.untwisted_part());
    for (elem, c) in x.twisted_part() {
        if let Some(raised) = sector_raise(elem, by) {
            out.add_sector_term(raised, c.clone());
        }
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IQuantumLine {
    pub s: u32,
    pub lhs: String,
    pub rhs: String,
}

/// Right-hand operands of the genus-2 product table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum G2Right {
    Alpha,
    Beta,
    Gamma,
    Psi,
    SectorUnit,
    SectorAlpha,
}

#[derive(Clone, Debug)]
pub struct G2Line {
    pub right: G2Right,
    pub lhs: String,
    pub rhs: String,
}

/// The genus-2 product table: a times each generator, in the point-class
/// normalization. The psi line records the vanishing of the products with
/// the odd-degree generators.
pub fn g2_table() -> Vec<G2Line> {
    vec![
        G2Line { right: G2Right::Alpha, lhs: "a * a".into(), rhs: "b + 4*Q".into() },
        G2Line { right: G2Right::Beta, lhs: "a * b".into(), rhs: "g + 2*a*Q".into() },
        G2Line { right: G2Right::Gamma, lhs: "a * g".into(), rhs: "b*Q".into() },
        G2Line { right: G2Right::Psi, lhs: "a * psi_i".into(), rhs: "0".into() },
        G2Line {
            right: G2Right::SectorUnit,
            lhs: "a * t[k]:h0:1".into(),
            rhs: "t[k]:h2:1 + t[k]:h0:1*Q".into(),
        },
        G2Line {
            right: G2Right::SectorAlpha,
            lhs: "a * t[k]:h2:1".into(),
            rhs: "t[k]:h2:1*Q".into(),
        },
    ]
}

/// The table line instantiated at a concrete sector. `kappa` is ignored for
/// the untwisted lines.
pub fn g2_expected(right: G2Right, kappa: Option<&TorsionClass>) -> Result<OrbifoldClass> {
    let g = 2;
    match right {
        G2Right::Alpha => Ok(OrbifoldClass::from_untwisted(
            g,
            &beta() + &qparam().scale(&rat(4)),
        )),
        G2Right::Beta => Ok(OrbifoldClass::from_untwisted(
            g,
            &gamma() + &(&alpha() * &qparam()).scale(&rat(2)),
        )),
        G2Right::Gamma => Ok(OrbifoldClass::from_untwisted(g, &beta() * &qparam())),
        G2Right::Psi => Ok(OrbifoldClass::zero(g)),
        G2Right::SectorUnit => {
            let kappa = kappa.ok_or(Error::ZeroTorsionClass)?;
            let mut out = OrbifoldClass::zero(g);
            out.add_sector_term(SectorBasisElement::new(*kappa, 2, 1)?, GradedPolynomial::one());
            out.add_sector_term(SectorBasisElement::new(*kappa, 0, 1)?, qparam());
            Ok(out)
        }
        G2Right::SectorAlpha => {
            let kappa = kappa.ok_or(Error::ZeroTorsionClass)?;
            let mut out = OrbifoldClass::zero(g);
            out.add_sector_term(SectorBasisElement::new(*kappa, 2, 1)?, qparam());
            Ok(out)
        }
    }
}

/// Table-mode product: classify both operands over the genus-2 generator
/// set and look the pair up, extending bilinearly over Q[Q]. Products the
/// table does not define are reported, not guessed.
fn table_product(x: &OrbifoldClass, y: &OrbifoldClass) -> Result<OrbifoldClass> {
    let g = 2;
    let xs = classify_g2(x)?;
    let ys = classify_g2(y)?;
    let mut out = OrbifoldClass::zero(g);
    for (gx, cx, ex) in &xs {
        for (gy, cy, ey) in &ys {
            let part = table_pair(gx, gy)?;
            let scaled = part.scale(&(cx * cy)).mul_q_power(ex + ey);
            out = out.add(&scaled)?;
        }
    }
    Ok(out)
}

/// Operands the genus-2 table can multiply.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum G2Atom {
    One,
    Alpha,
    Beta,
    Gamma,
    SectorUnit(TorsionClass),
    SectorAlpha(TorsionClass),
}

fn classify_g2(x: &OrbifoldClass) -> Result<Vec<(G2Atom, Rational, u32)>> {
    let mut out = Vec::new();
    for (m, c) in x.untwisted_part().terms() {
        let e = m.0[QPARAM];
        let atom = match (m.0[ALPHA], m.0[BETA], m.0[GAMMA]) {
            (0, 0, 0) => G2Atom::One,
            (1, 0, 0) => G2Atom::Alpha,
            (0, 1, 0) => G2Atom::Beta,
            (0, 0, 1) => G2Atom::Gamma,
            _ => {
                return Err(Error::Unsupported(format!(
                    "table mode multiplies the published generators only; {} is not one",
                    m.text(&crate::monomial::ASCII_NAMES)
                )))
            }
        };
        out.push((atom, c.clone(), e));
    }
    for (elem, coeff) in x.twisted_part() {
        let atom = match elem.s {
            0 => G2Atom::SectorUnit(elem.kappa),
            2 => G2Atom::SectorAlpha(elem.kappa),
            _ => unreachable!("genus-2 sectors have degrees 0 and 2"),
        };
        for (m, c) in coeff.terms() {
            out.push((atom, c.clone(), m.0[QPARAM]));
        }
    }
    Ok(out)
}

fn table_pair(x: &G2Atom, y: &G2Atom) -> Result<OrbifoldClass> {
    let g = 2;
    match (x, y) {
        (G2Atom::One, other) | (other, G2Atom::One) => atom_class(other),
        (G2Atom::Alpha, other) | (other, G2Atom::Alpha) => match other {
            G2Atom::Alpha => g2_expected(G2Right::Alpha, None),
            G2Atom::Beta => g2_expected(G2Right::Beta, None),
            G2Atom::Gamma => g2_expected(G2Right::Gamma, None),
            G2Atom::SectorUnit(k) => g2_expected(G2Right::SectorUnit, Some(k)),
            G2Atom::SectorAlpha(k) => g2_expected(G2Right::SectorAlpha, Some(k)),
            G2Atom::One => Ok(OrbifoldClass::from_untwisted(g, alpha())),
        },
        _ => Err(Error::Unsupported(
            "table mode defines products of a with the generator set only".into(),
        )),
    }
}

fn atom_class(a: &G2Atom) -> Result<OrbifoldClass> {
    let g = 2;
    match a {
        G2Atom::One => Ok(OrbifoldClass::unit(g)),
        G2Atom::Alpha => Ok(OrbifoldClass::from_untwisted(g, alpha())),
        G2Atom::Beta => Ok(OrbifoldClass::from_untwisted(g, beta())),
        G2Atom::Gamma => Ok(OrbifoldClass::from_untwisted(g, gamma())),
        G2Atom::SectorUnit(k) => {
            OrbifoldClass::from_sector(g, SectorBasisElement::new(*k, 0, 1)?)
        }
        G2Atom::SectorAlpha(k) => {
            OrbifoldClass::from_sector(g, SectorBasisElement::new(*k, 2, 1)?)
        }
    }
}

/// JSON form of the quantum presentation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantumPresentationJson {
    pub schema_version: u32,
    pub genus: u32,
    pub quantum_relations: Vec<String>,
    pub i_quantum: Vec<IQuantumLineJson>,
    pub mode: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IQuantumLineJson {
    pub s: u32,
    pub lhs: String,
    pub rhs: String,
}

pub fn export_quantum(p: &QuantumOrbifoldPresentation) -> QuantumPresentationJson {
    QuantumPresentationJson {
        schema_version: crate::classical::SCHEMA_VERSION,
        genus: p.genus(),
        quantum_relations: p
            .relations()
            .generators()
            .iter()
            .map(GradedPolynomial::canonical_text)
            .collect(),
        i_quantum: p
            .i_quantum_lines()
            .into_iter()
            .map(|l| IQuantumLineJson { s: l.s, lhs: l.lhs, rhs: l.rhs })
            .collect(),
        mode: p.mode().name().to_string(),
    }
}
