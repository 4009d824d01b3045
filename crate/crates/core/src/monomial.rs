//! Monomials over the ordered variable set (a, b, g, Q) with a fixed
//! admissible division order and pluggable grading weights.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

pub const NVARS: usize = 4;
pub const ALPHA: usize = 0;
pub const BETA: usize = 1;
pub const GAMMA: usize = 2;
pub const QPARAM: usize = 3;

pub const ASCII_NAMES: [&str; NVARS] = ["a", "b", "g", "Q"];
pub const UNICODE_NAMES: [&str; NVARS] = ["\u{3b1}", "\u{3b2}", "\u{3b3}", "\u{1d514}"];

/// Weights used by the division order itself. Fixed once and for all so the
/// ordering of monomials never depends on which grading is being audited.
const ORDER_WEIGHTS: [u32; NVARS] = [1, 2, 3, 2];

/// A grading assigns algebraic degrees to the variables. The a/b/g weights
/// are always (1, 2, 3); the quantum parameter carries weight 2 in the
/// untwisted ring and weight 1 in identities involving twisted sectors,
/// where the stacky marked points halve the degree contribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grading {
    pub weights: [u32; NVARS],
    pub nvars: usize,
}

impl Grading {
    /// Three variables a, b, g; the classical relation ideals live here.
    pub fn classical() -> Self {
        Grading { weights: [1, 2, 3, 2], nvars: 3 }
    }

    /// Four variables with Q of algebraic degree 2.
    pub fn quantum() -> Self {
        Grading { weights: [1, 2, 3, 2], nvars: 4 }
    }

    /// Four variables with Q of algebraic degree 1 (twisted-sector context).
    pub fn twisted_quantum() -> Self {
        Grading { weights: [1, 2, 3, 1], nvars: 4 }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn uses_q(&self) -> bool {
        self.0[QPARAM] > 0
    }

    fn order_degree(&self) -> u32 {
        self.0
            .iter()
            .zip(ORDER_WEIGHTS.iter())
            .map(|(e, w)| e * w)
            .sum()
    }

    pub fn degree(&self, grading: &Grading) -> u32 {
        self.0
            .iter()
            .zip(grading.weights.iter())
            .map(|(e, w)| e * w)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i] + other.0[i];
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..NVARS).all(|i| self.0[i] <= other.0[i])
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(e))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i].max(other.0[i]);
        }
        Monomial(e)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i].min(other.0[i]);
        }
        Monomial(e)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..NVARS).all(|i| self.0[i] == 0 || other.0[i] == 0)
    }

    /// Canonical text, e.g. `a^2*b*Q`. The unit monomial renders as `1`.
    pub fn text(&self, names: &[&str; NVARS]) -> String {
        let mut parts = Vec::new();
        for i in 0..NVARS {
            match self.0[i] {
                0 => {}
                1 => parts.push(names[i].to_string()),
                e => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Order used only for printing: weighted degree first, ties broken so
    /// that at equal degree a-heavy monomials print before b-, g- and
    /// Q-heavy ones (a^2 before b, a*b before g, b before Q).
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        match self.order_degree().cmp(&other.order_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for idx in [QPARAM, GAMMA, BETA, ALPHA] {
            let d = self.0[idx] as i64 - other.0[idx] as i64;
            if d != 0 {
                return if d < 0 { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }
}

/// Division order: graded reverse lexicographic for the weights (1, 2, 3, 2)
/// with variable precedence g > b > a > Q. At equal weighted degree the
/// monomial with fewer Q's wins, then fewer a's, then fewer b's. This makes
/// the relation ideals eliminate b and g in favor of powers of a, so the
/// quotient of the level-2 ideal has standard monomials {1, a, a^2, a^3}
/// and quantum quotients stay free over Q[Q].
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.order_degree().cmp(&other.order_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for idx in [QPARAM, ALPHA, BETA, GAMMA] {
            let d = self.0[idx] as i64 - other.0[idx] as i64;
            if d != 0 {
                return if d < 0 { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given weighted degree in the first `grading.nvars`
/// variables, in increasing division order.
pub fn monomials_of_degree(d: u32, grading: &Grading) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = [0u32; NVARS];
    fill(0, d, grading, &mut exps, &mut out);
    out.sort();
    out
}

fn fill(var: usize, remaining: u32, grading: &Grading, exps: &mut [u32; NVARS], out: &mut Vec<Monomial>) {
    if var == grading.nvars {
        if remaining == 0 {
            out.push(Monomial(*exps));
        }
        return;
    }
    let w = grading.weights[var];
    let max = remaining / w;
    for e in 0..=max {
        exps[var] = e;
        fill(var + 1, remaining - e * w, grading, exps, out);
    }
    exps[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: [u32; 4]) -> Monomial {
        Monomial(e)
    }

    #[test]
    fn division_order_eliminates_b_and_g() {
        // b > a^2 and g > a^3, so the relation ideals rewrite b and g as
        // polynomials in a.
        assert!(m([0, 1, 0, 0]) > m([2, 0, 0, 0]));
        assert!(m([0, 0, 1, 0]) > m([3, 0, 0, 0]));
        assert!(m([0, 0, 1, 0]) > m([1, 1, 0, 0]));
        // Q is the most minor variable at equal degree.
        assert!(m([2, 0, 0, 0]) > m([0, 0, 0, 1]));
        assert!(m([1, 0, 1, 0]) > m([2, 0, 0, 1]));
    }

    #[test]
    fn display_order_prefers_a_powers() {
        assert_eq!(m([2, 0, 0, 0]).display_cmp(&m([0, 1, 0, 0])), Ordering::Greater);
        assert_eq!(m([1, 1, 0, 0]).display_cmp(&m([0, 0, 1, 0])), Ordering::Greater);
        assert_eq!(m([0, 1, 0, 0]).display_cmp(&m([0, 0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn degrees_and_text() {
        let x = m([2, 1, 0, 1]);
        assert_eq!(x.degree(&Grading::quantum()), 6);
        assert_eq!(x.degree(&Grading::twisted_quantum()), 5);
        assert_eq!(x.text(&ASCII_NAMES), "a^2*b*Q");
        assert_eq!(Monomial::ONE.text(&ASCII_NAMES), "1");
    }

    #[test]
    fn degree_enumeration() {
        let g = Grading::classical();
        let deg3: Vec<_> = monomials_of_degree(3, &g);
        // a^3, a*b, g
        assert_eq!(deg3.len(), 3);
        assert!(deg3.contains(&m([3, 0, 0, 0])));
        assert!(deg3.contains(&m([1, 1, 0, 0])));
        assert!(deg3.contains(&m([0, 0, 1, 0])));
        let q = Grading::quantum();
        // degree 2: a^2, b, Q
        assert_eq!(monomials_of_degree(2, &q).len(), 3);
    }
}
