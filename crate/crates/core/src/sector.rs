//! The 2-torsion group (Z/2)^{2g} with its mod-2 symplectic pairing, and the
//! invariant cohomology of the twisted Prym sectors: ranks, ages, the top
//! integral and indexed basis generators.

use crate::error::{Error, Result};
use crate::rational::{rat_pow2, Rational};
use num_integer::binomial;
use num_traits::Zero;

/// Bit-vector torsion classes only fit a u64 for 2g <= 64.
pub const MAX_GENUS: u32 = 32;

fn check_genus(genus: u32) -> Result<()> {
    if !(1..=MAX_GENUS).contains(&genus) {
        return Err(Error::GenusOutOfRange { genus, min: 1, max: MAX_GENUS });
    }
    Ok(())
}

/// An element of the torsion group, as 2g bits in the standard symplectic
/// basis e_1..e_g, e_{g+1}..e_{2g}. The group law is bitwise xor.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TorsionClass {
    genus: u32,
    bits: u64,
}

impl TorsionClass {
    pub fn new(genus: u32, bits: u64) -> Result<Self> {
        check_genus(genus)?;
        let width = 2 * genus;
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        if bits & !mask != 0 {
            return Err(Error::BitLength(64 - bits.leading_zeros() as usize, 2 * genus));
        }
        Ok(TorsionClass { genus, bits })
    }

    pub fn zero(genus: u32) -> Result<Self> {
        Self::new(genus, 0)
    }

    /// The i-th standard basis vector, 1-based.
    pub fn basis_vector(genus: u32, i: u32) -> Result<Self> {
        check_genus(genus)?;
        if i == 0 || i > 2 * genus {
            return Err(Error::BitLength(i as usize, 2 * genus));
        }
        Self::new(genus, 1u64 << (i - 1))
    }

    /// Parse a bit string like "1000" (leftmost character is the first
    /// coordinate).
    pub fn from_bit_str(genus: u32, s: &str) -> Result<Self> {
        check_genus(genus)?;
        if s.len() != 2 * genus as usize {
            return Err(Error::BitLength(s.len(), 2 * genus));
        }
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1u64 << i,
                _ => return Err(Error::BitLength(s.len(), 2 * genus)),
            }
        }
        Self::new(genus, bits)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn bit(&self, i: u32) -> u64 {
        (self.bits >> i) & 1
    }

    pub fn xor(&self, other: &TorsionClass) -> Result<TorsionClass> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch(self.genus, other.genus));
        }
        TorsionClass::new(self.genus, self.bits ^ other.bits)
    }

    pub fn bit_string(&self) -> String {
        (0..2 * self.genus)
            .map(|i| if self.bit(i) == 1 { '1' } else { '0' })
            .collect()
    }
}

/// The mod-2 symplectic (Weil) pairing
/// mu(x, y) = sum_{i=1}^{g} (x_i y_{i+g} + x_{i+g} y_i)  in F_2.
pub fn weil_pairing(a: &TorsionClass, b: &TorsionClass) -> Result<u8> {
    if a.genus != b.genus {
        return Err(Error::GenusMismatch(a.genus, b.genus));
    }
    let g = a.genus;
    let mut acc = 0u64;
    for i in 0..g {
        acc ^= a.bit(i) & b.bit(i + g);
        acc ^= a.bit(i + g) & b.bit(i);
    }
    Ok(acc as u8)
}

/// All nonzero torsion classes, i.e. the index set of the twisted sectors.
pub fn twisted_classes(genus: u32) -> Result<impl Iterator<Item = TorsionClass>> {
    check_genus(genus)?;
    let count = 1u64 << (2 * genus);
    Ok((1..count).map(move |bits| TorsionClass { genus, bits }))
}

/// Rank of the invariant sector cohomology in (real) degree s:
/// C(2(g-1), s) for even s, 0 for odd s.
pub fn sector_rank(genus: u32, s: u32) -> Result<u64> {
    let max = 2 * (genus - 1);
    if s > max {
        return Err(Error::SectorDegreeRange { s, max });
    }
    if s % 2 == 1 {
        return Ok(0);
    }
    Ok(binomial(max as u64, s as u64))
}

/// Total rank over the even degrees: 2^{2g-3}.
pub fn sector_total_rank(genus: u32) -> u64 {
    1u64 << (2 * genus - 3)
}

/// Degree-shifting number of a twisted sector: g-1 for nonzero classes.
pub fn age(kappa: &TorsionClass) -> u32 {
    if kappa.is_zero() {
        0
    } else {
        kappa.genus - 1
    }
}

/// Integral over a twisted sector: 1/2^{2g} times the top-class coefficient,
/// zero below the top degree 2(g-1).
pub fn sector_integral(genus: u32, s: u32, top_coefficient: &Rational) -> Rational {
    if s == 2 * (genus - 1) {
        top_coefficient / rat_pow2(2 * genus)
    } else {
        Rational::zero()
    }
}

/// One of the r_kappa^s generators of the sector cohomology in degree s.
/// Opaque: only the rank data and the top integral are modeled.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SectorBasisElement {
    pub kappa: TorsionClass,
    pub s: u32,
    pub index: u32,
}

impl SectorBasisElement {
    pub fn new(kappa: TorsionClass, s: u32, index: u32) -> Result<Self> {
        if kappa.is_zero() {
            return Err(Error::ZeroTorsionClass);
        }
        if s % 2 == 1 {
            return Err(Error::OddSectorDegree(s));
        }
        let rank = sector_rank(kappa.genus(), s)?;
        if index == 0 || index as u64 > rank {
            return Err(Error::SectorIndexRange { index, rank });
        }
        Ok(SectorBasisElement { kappa, s, index })
    }

    pub fn genus(&self) -> u32 {
        self.kappa.genus()
    }

    /// Real (orbifold) degree: s + 2 age(kappa).
    pub fn real_degree(&self) -> u32 {
        self.s + 2 * (self.genus() - 1)
    }

    /// Algebraic degree: (g-1) + s/2.
    pub fn algebraic_degree(&self) -> u32 {
        (self.genus() - 1) + self.s / 2
    }

    /// Canonical text form `t[bits]:h{s}:{index}`.
    pub fn text(&self) -> String {
        format!("t[{}]:h{}:{}", self.kappa.bit_string(), self.s, self.index)
    }
}

/// Rank over F_2 of the Gram matrix of the pairing in the standard basis.
pub fn weil_gram_rank(genus: u32) -> Result<u32> {
    let n = 2 * genus;
    let mut rows: Vec<u64> = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let ei = TorsionClass::basis_vector(genus, i)?;
        let mut row = 0u64;
        for j in 1..=n {
            let ej = TorsionClass::basis_vector(genus, j)?;
            row |= (weil_pairing(&ei, &ej)? as u64) << (j - 1);
        }
        rows.push(row);
    }
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank as usize..rows.len()).find(|&r| (rows[r] >> col) & 1 == 1) else {
            continue;
        };
        rows.swap(rank as usize, p);
        let pivot = rows[rank as usize];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank as usize && (*row >> col) & 1 == 1 {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    Ok(rank)
}
