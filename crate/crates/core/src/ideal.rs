//! Homogeneous ideals with cached reduced Groebner bases, normal forms,
//! graded component bases and Hilbert series.

use crate::error::{Error, Result};
use crate::hilbert::{quotient_numerator, HilbertSeries};
use crate::monomial::{monomials_of_degree, Grading, Monomial};
use crate::poly::GradedPolynomial;
use crate::rational::Rational;
use num_traits::One;

pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// A generator list together with its reduced Groebner basis for the fixed
/// division order. Immutable once constructed; safe to share across threads.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    generators: Vec<GradedPolynomial>,
    basis: Vec<GradedPolynomial>,
    grading: Grading,
    degree_cap: u32,
}

impl IdealPresentation {
    pub fn new(generators: Vec<GradedPolynomial>, grading: Grading) -> Result<Self> {
        Self::with_cap(generators, grading, DEFAULT_DEGREE_CAP)
    }

    pub fn with_cap(generators: Vec<GradedPolynomial>, grading: Grading, degree_cap: u32) -> Result<Self> {
        if grading.nvars < 4 {
            for g in &generators {
                if g.uses_q() {
                    return Err(Error::VariableMismatch);
                }
            }
        }
        let basis = buchberger(&generators, degree_cap)?;
        Ok(IdealPresentation { generators, basis, grading, degree_cap })
    }

    /// Rebuild from a previously computed reduced basis, re-verifying that
    /// the claimed basis is consistent with the generators.
    pub fn from_cached(
        generators: Vec<GradedPolynomial>,
        basis: Vec<GradedPolynomial>,
        grading: Grading,
        degree_cap: u32,
    ) -> Result<Self> {
        let candidate = IdealPresentation { generators, basis, grading, degree_cap };
        for g in &candidate.generators {
            if !candidate.normal_form_unchecked(g).is_zero() {
                return Err(Error::Unsupported(
                    "cached basis does not reduce the generators to zero".into(),
                ));
            }
        }
        Ok(candidate)
    }

    pub fn generators(&self) -> &[GradedPolynomial] {
        &self.generators
    }

    pub fn basis(&self) -> &[GradedPolynomial] {
        &self.basis
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .filter_map(|p| p.leading().map(|(m, _)| *m))
            .collect()
    }

    /// Unique remainder of p modulo the ideal under the fixed order.
    pub fn normal_form(&self, p: &GradedPolynomial) -> Result<GradedPolynomial> {
        if self.grading.nvars < 4 && p.uses_q() {
            return Err(Error::VariableMismatch);
        }
        Ok(self.normal_form_unchecked(p))
    }

    fn normal_form_unchecked(&self, p: &GradedPolynomial) -> GradedPolynomial {
        reduce_full(p.clone(), &self.basis)
    }

    /// Standard monomials of the given algebraic degree, in increasing
    /// division order.
    pub fn graded_basis(&self, d: u32) -> Vec<Monomial> {
        let lts = self.leading_monomials();
        monomials_of_degree(d, &self.grading)
            .into_iter()
            .filter(|m| !lts.iter().any(|lt| lt.divides(m)))
            .collect()
    }

    /// Hilbert series of the quotient as a rational function in t.
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        for g in &self.generators {
            if !g.is_homogeneous(&self.grading) {
                return Err(Error::InhomogeneousGenerator(g.canonical_text()));
            }
        }
        let numerator = quotient_numerator(&self.leading_monomials(), &self.grading);
        let weights = self.grading.weights[..self.grading.nvars].to_vec();
        Ok(HilbertSeries::new(numerator, weights))
    }
}

/// Fully reduce p against the basis: every term of the output is divisible
/// by no basis leading term.
pub fn reduce_full(mut p: GradedPolynomial, basis: &[GradedPolynomial]) -> GradedPolynomial {
    let mut remainder = GradedPolynomial::zero();
    'outer: while let Some((lm, lc)) = p.leading().map(|(m, c)| (*m, c.clone())) {
        for g in basis {
            let Some((glm, glc)) = g.leading() else { continue };
            if let Some(quot) = lm.try_div(glm) {
                let factor = &lc / glc;
                p = &p - &g.mul_monomial(&quot, &factor);
                continue 'outer;
            }
        }
        // Leading term irreducible: move it to the remainder.
        remainder.add_term(lm, lc.clone());
        p.add_term(lm, -lc);
    }
    remainder
}

/// Buchberger's algorithm with the coprime-leading-term criterion, followed
/// by inter-reduction; output is the reduced (monic, tail-reduced) basis,
/// sorted by leading monomial, hence unique for the fixed order.
pub fn buchberger(generators: &[GradedPolynomial], degree_cap: u32) -> Result<Vec<GradedPolynomial>> {
    let order = Grading::quantum(); // order weights, used for the cap only
    let mut basis: Vec<GradedPolynomial> = Vec::new();
    for g in generators {
        let r = reduce_full(g.clone(), &basis);
        if !r.is_zero() {
            check_cap(&r, degree_cap, &order)?;
            basis.push(r.monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }
    while !pairs.is_empty() {
        // Normal selection: smallest lcm first, for determinism.
        pairs.sort_by(|a, b| {
            let la = lcm_of(&basis, *a);
            let lb = lcm_of(&basis, *b);
            la.cmp(&lb).then(a.cmp(b)).reverse()
        });
        let (i, j) = pairs.pop().unwrap();
        let (li, _) = basis[i].leading().unwrap();
        let (lj, _) = basis[j].leading().unwrap();
        if li.is_coprime(lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce_full(s, &basis);
        if r.is_zero() {
            continue;
        }
        check_cap(&r, degree_cap, &order)?;
        basis.push(r.monic());
        let k = basis.len() - 1;
        for i in 0..k {
            pairs.push((i, k));
        }
    }
    Ok(interreduce(basis))
}

fn check_cap(p: &GradedPolynomial, cap: u32, order: &Grading) -> Result<()> {
    if p.max_degree(order).unwrap_or(0) > cap {
        return Err(Error::DegreeCapExceeded { cap });
    }
    Ok(())
}

fn lcm_of(basis: &[GradedPolynomial], pair: (usize, usize)) -> Monomial {
    let (li, _) = basis[pair.0].leading().unwrap();
    let (lj, _) = basis[pair.1].leading().unwrap();
    li.lcm(lj)
}

fn s_polynomial(f: &GradedPolynomial, g: &GradedPolynomial) -> GradedPolynomial {
    let (lf, cf) = f.leading().unwrap();
    let (lg, cg) = g.leading().unwrap();
    let l = lf.lcm(lg);
    let mf = l.try_div(lf).unwrap();
    let mg = l.try_div(lg).unwrap();
    let inv_f = Rational::one() / cf.clone();
    let inv_g = Rational::one() / cg.clone();
    &f.mul_monomial(&mf, &inv_f) - &g.mul_monomial(&mg, &inv_g)
}

fn interreduce(mut basis: Vec<GradedPolynomial>) -> Vec<GradedPolynomial> {
    // Drop elements whose leading term another element divides.
    let mut keep: Vec<GradedPolynomial> = Vec::new();
    basis.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    for (idx, p) in basis.iter().enumerate() {
        let (lp, _) = p.leading().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, q)| {
            if idx == j {
                return false;
            }
            let (lq, _) = q.leading().unwrap();
            lq.divides(lp) && (lq != lp || j < idx)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    // Reduce each tail against the others.
    let snapshot = keep.clone();
    let mut out = Vec::new();
    for (idx, p) in snapshot.iter().enumerate() {
        let others: Vec<GradedPolynomial> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != idx)
            .map(|(_, q)| q.clone())
            .collect();
        let r = reduce_full(p.clone(), &others);
        if !r.is_zero() {
            out.push(r.monic());
        }
    }
    out.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{alpha, beta, gamma};
    use crate::rational::rat;

    fn i2() -> IdealPresentation {
        // (a^2 + b, a*b + g, a*g)
        let gens = vec![
            &(&alpha() * &alpha()) + &beta(),
            &(&alpha() * &beta()) + &gamma(),
            &alpha() * &gamma(),
        ];
        IdealPresentation::new(gens, Grading::classical()).unwrap()
    }

    #[test]
    fn single_linear_generator() {
        let i = IdealPresentation::new(vec![alpha()], Grading::classical()).unwrap();
        assert_eq!(i.basis(), &[alpha()]);
    }

    #[test]
    fn empty_generator_set_is_zero_ideal() {
        let i = IdealPresentation::new(vec![], Grading::classical()).unwrap();
        assert!(i.basis().is_empty());
        let p = &(&alpha() * &beta()) + &gamma();
        assert_eq!(i.normal_form(&p).unwrap(), p);
        assert_eq!(i.graded_basis(1), vec![Monomial::var(crate::monomial::ALPHA)]);
    }

    #[test]
    fn level_two_ideal_normal_forms() {
        let i = i2();
        assert!(i.normal_form(&GradedPolynomial::zero()).unwrap().is_zero());
        for g in i.generators() {
            assert!(i.normal_form(g).unwrap().is_zero());
        }
        let a4 = alpha().pow(4);
        assert!(i.normal_form(&a4).unwrap().is_zero());
        let a3 = alpha().pow(3);
        assert_eq!(i.normal_form(&a3).unwrap(), a3);
        // b reduces to -a^2 and g to a^3.
        assert_eq!(i.normal_form(&beta()).unwrap(), -&alpha().pow(2));
        assert_eq!(i.normal_form(&gamma()).unwrap(), alpha().pow(3));
    }

    #[test]
    fn level_two_ideal_graded_basis() {
        let i = i2();
        assert_eq!(i.graded_basis(0), vec![Monomial::ONE]);
        assert_eq!(i.graded_basis(1), vec![Monomial([1, 0, 0, 0])]);
        assert_eq!(i.graded_basis(2), vec![Monomial([2, 0, 0, 0])]);
        assert_eq!(i.graded_basis(3), vec![Monomial([3, 0, 0, 0])]);
        assert!(i.graded_basis(4).is_empty());
        assert!(i.graded_basis(7).is_empty());
    }

    #[test]
    fn level_two_hilbert_series() {
        let hs = i2().hilbert_series().unwrap();
        assert_eq!(hs.polynomial(), Some(vec![1, 1, 1, 1]));
    }

    #[test]
    fn zero_ideal_hilbert_series() {
        let i = IdealPresentation::new(vec![], Grading::classical()).unwrap();
        let hs = i.hilbert_series().unwrap();
        let free = HilbertSeries::new(vec![1], vec![1, 2, 3]);
        assert_eq!(hs, free);
    }

    #[test]
    fn inhomogeneous_generator_is_named() {
        let p = &alpha() + &beta(); // degrees 1 and 2
        let i = IdealPresentation::new(vec![p], Grading::classical()).unwrap();
        match i.hilbert_series() {
            Err(Error::InhomogeneousGenerator(name)) => assert_eq!(name, "b + a"),
            other => panic!("expected inhomogeneous error, got {:?}", other),
        }
    }

    #[test]
    fn variable_set_mismatch_rejected() {
        let i = i2();
        let p = crate::poly::qparam();
        assert_eq!(i.normal_form(&p), Err(Error::VariableMismatch));
        let bad = IdealPresentation::new(vec![crate::poly::qparam()], Grading::classical());
        assert_eq!(bad.err(), Some(Error::VariableMismatch));
    }

    #[test]
    fn degree_cap_is_enforced() {
        let gens = vec![&(&alpha() * &alpha()) + &beta()];
        let err = IdealPresentation::with_cap(gens, Grading::classical(), 1).err();
        assert_eq!(err, Some(Error::DegreeCapExceeded { cap: 1 }));
    }

    #[test]
    fn reduced_basis_is_deterministic_and_self_reduced() {
        let a = i2();
        let b = i2();
        assert_eq!(a.basis(), b.basis());
        for (idx, p) in a.basis().iter().enumerate() {
            assert!(p.leading().unwrap().1.is_one());
            let others: Vec<_> = a
                .basis()
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != idx)
                .map(|(_, q)| q.clone())
                .collect();
            assert_eq!(reduce_full(p.clone(), &others), *p);
        }
    }

    #[test]
    fn cached_roundtrip_verifies() {
        let i = i2();
        let again = IdealPresentation::from_cached(
            i.generators().to_vec(),
            i.basis().to_vec(),
            Grading::classical(),
            DEFAULT_DEGREE_CAP,
        )
        .unwrap();
        assert_eq!(again.basis(), i.basis());
        let broken = IdealPresentation::from_cached(
            i.generators().to_vec(),
            vec![alpha()],
            Grading::classical(),
            DEFAULT_DEGREE_CAP,
        );
        assert!(broken.is_err());
    }

    #[test]
    fn normal_form_scales_with_coefficients() {
        let i = i2();
        let p = beta().scale(&rat(3));
        assert_eq!(i.normal_form(&p).unwrap(), alpha().pow(2).scale(&rat(-3)));
    }
}
