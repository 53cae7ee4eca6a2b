//! Descriptors for the five irreducible symmetric cone families, Wallach set
//! membership, and the rank / Peirce-invariant / dimension identity
//! n = r + (d/2) r (r−1).

use std::fmt;

use crate::error::Error;
use crate::rational::{frac, rat, Rat};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConeFamily {
    /// Positive semidefinite real symmetric m×m matrices (d = 1).
    RealSymmetric(u32),
    /// Positive semidefinite complex Hermitian m×m matrices (d = 2).
    ComplexHermitian(u32),
    /// Positive semidefinite quaternion Hermitian m×m matrices (d = 4).
    QuaternionHermitian(u32),
    /// Lorentz cone in dimension n (r = 2, d = n−2).
    Lorentz(u32),
    /// Exceptional cone of 3×3 octonion Hermitian matrices (r = 3, d = 8, n = 27).
    Octonion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeDescriptor {
    pub family: ConeFamily,
    /// Rank r of the associated Jordan algebra.
    pub rank: u32,
    /// Peirce invariant d.
    pub peirce: u32,
    /// Real dimension n.
    pub dim: u32,
    /// Jack parameter α = 2/d.
    pub alpha: Rat,
}

impl ConeDescriptor {
    /// Structural check used by every constructor and the property tests.
    pub fn dimension_identity_holds(&self) -> bool {
        let r = self.rank as u64;
        let d = self.peirce as u64;
        2 * self.dim as u64 == 2 * r + d * r * (r - 1)
    }
}

impl fmt::Display for ConeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeFamily::RealSymmetric(m) => write!(f, "real:{m}"),
            ConeFamily::ComplexHermitian(m) => write!(f, "complex:{m}"),
            ConeFamily::QuaternionHermitian(m) => write!(f, "quat:{m}"),
            ConeFamily::Lorentz(n) => write!(f, "lorentz:{n}"),
            ConeFamily::Octonion => write!(f, "octonion"),
        }
    }
}

pub fn make_cone(family: ConeFamily) -> Result<ConeDescriptor> {
    let (rank, peirce, dim) = match family {
        ConeFamily::RealSymmetric(m) => {
            require(m >= 1, "real", m)?;
            (m, 1, m * (m + 1) / 2)
        }
        ConeFamily::ComplexHermitian(m) => {
            require(m >= 1, "complex", m)?;
            (m, 2, m * m)
        }
        ConeFamily::QuaternionHermitian(m) => {
            require(m >= 1, "quat", m)?;
            (m, 4, 2 * m * m - m)
        }
        ConeFamily::Lorentz(n) => {
            require(n >= 3, "lorentz", n)?;
            (2, n - 2, n)
        }
        ConeFamily::Octonion => (3, 8, 27),
    };
    let descriptor = ConeDescriptor {
        family,
        rank,
        peirce,
        dim,
        alpha: frac(2, peirce as i64),
    };
    debug_assert!(descriptor.dimension_identity_holds());
    Ok(descriptor)
}

fn require(ok: bool, family: &str, size: u32) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidSize {
            family: family.to_string(),
            size,
        })
    }
}

/// Parse a CLI cone spec: `real:3 | complex:3 | quat:2 | lorentz:5 | octonion`.
pub fn parse_cone(spec: &str) -> Result<ConeDescriptor> {
    let spec = spec.trim();
    let bad = || Error::InvalidSize {
        family: spec.to_string(),
        size: 0,
    };
    if spec == "octonion" {
        return make_cone(ConeFamily::Octonion);
    }
    let (name, size) = spec.split_once(':').ok_or_else(bad)?;
    let size: u32 = size.trim().parse().map_err(|_| bad())?;
    let family = match name.trim() {
        "real" => ConeFamily::RealSymmetric(size),
        "complex" => ConeFamily::ComplexHermitian(size),
        "quat" => ConeFamily::QuaternionHermitian(size),
        "lorentz" => ConeFamily::Lorentz(size),
        _ => return Err(bad()),
    };
    make_cone(family)
}

/// Wallach set membership: β ∈ {0, d/2, …, d(r−2)/2} ∪ [d(r−1)/2, ∞).
pub fn wallach_contains(cone: &ConeDescriptor, beta: &Rat) -> Result<bool> {
    if beta < &Rat::from_integer(0.into()) {
        return Err(Error::NegativeShape(beta.to_string()));
    }
    let d = rat(cone.peirce as i64);
    let r = cone.rank as i64;
    let ray_start = &d * frac(r - 1, 2);
    if beta >= &ray_start {
        return Ok(true);
    }
    let mut point = Rat::from_integer(0.into());
    let step = &d / rat(2);
    for _ in 0..=(r - 2).max(0) {
        if beta == &point {
            return Ok(true);
        }
        point += &step;
    }
    Ok(false)
}

/// Gindikin set for d = 1 (eq-level transcription used as an independent
/// cross-check of `wallach_contains` on the real matrix family):
/// Λ = {0, 1/2, …, (m−2)/2} ∪ [(m−1)/2, ∞).
pub fn gindikin_contains(m: u32, beta: &Rat) -> Result<bool> {
    if beta < &Rat::from_integer(0.into()) {
        return Err(Error::NegativeShape(beta.to_string()));
    }
    if beta >= &frac(m as i64 - 1, 2) {
        return Ok(true);
    }
    for j in 0..=(m as i64 - 2).max(0) {
        if beta == &frac(j, 2) {
            return Ok(true);
        }
    }
    Ok(false)
}
