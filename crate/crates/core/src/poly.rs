//! Sparse multivariate polynomials over Q, keyed by the division order.

use crate::monomial::{Grading, Monomial, ASCII_NAMES, NVARS, QPARAM, UNICODE_NAMES};
use crate::rational::{rat, Rational};
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A finite Q-linear combination of monomials. Zero coefficients are never
/// stored; the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), rat(1))
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        GradedPolynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Leading term under the division order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedPolynomial {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedPolynomial {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) => {
                let inv = Rational::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn uses_q(&self) -> bool {
        self.terms.keys().any(Monomial::uses_q)
    }

    /// Substitute Q = 0: drop every term with a positive Q exponent.
    pub fn specialize_q_zero(&self) -> Self {
        GradedPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.uses_q())
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Multiply by Q^e.
    pub fn mul_q_power(&self, e: u32) -> Self {
        let mut q = Monomial::ONE;
        q.0[QPARAM] = e;
        self.mul_monomial(&q, &rat(1))
    }

    pub fn degrees(&self, grading: &Grading) -> BTreeSet<u32> {
        self.terms.keys().map(|m| m.degree(grading)).collect()
    }

    pub fn is_homogeneous(&self, grading: &Grading) -> bool {
        self.degrees(grading).len() <= 1
    }

    /// The common degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self, grading: &Grading) -> Option<u32> {
        let ds = self.degrees(grading);
        if ds.len() == 1 {
            ds.into_iter().next()
        } else {
            None
        }
    }

    pub fn max_degree(&self, grading: &Grading) -> Option<u32> {
        self.degrees(grading).into_iter().next_back()
    }

    /// Canonical text: terms joined by " + " / " - " in descending display
    /// order, monomials as `a^i*b^j*g^k*Q^l`.
    pub fn canonical_text(&self) -> String {
        self.text(&ASCII_NAMES)
    }

    pub fn unicode_text(&self) -> String {
        self.text(&UNICODE_NAMES)
    }

    pub fn text(&self, names: &[&str; NVARS]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut sorted: Vec<_> = self.terms.iter().collect();
        sorted.sort_by(|x, y| y.0.display_cmp(x.0));
        let mut out = String::new();
        for (i, (m, c)) in sorted.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = m.text(names);
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", abs, mono));
            }
        }
        out
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl AddAssign<&GradedPolynomial> for GradedPolynomial {
    fn add_assign(&mut self, rhs: &GradedPolynomial) {
        for (m, c) in rhs.terms.iter() {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        self.scale(&rat(-1))
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in rhs.terms.iter() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

/// Convenience constructors for the four generators.
pub fn alpha() -> GradedPolynomial {
    GradedPolynomial::var(crate::monomial::ALPHA)
}
pub fn beta() -> GradedPolynomial {
    GradedPolynomial::var(crate::monomial::BETA)
}
pub fn gamma() -> GradedPolynomial {
    GradedPolynomial::var(crate::monomial::GAMMA)
}
pub fn qparam() -> GradedPolynomial {
    GradedPolynomial::var(QPARAM)
}
