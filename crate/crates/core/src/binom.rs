//! Generalized binomial coefficients (κ choose σ)_α: contiguous values from
//! hook-length products, general values from the degree recursion, and an
//! independent oracle from the shifted-Jack expansion.
//!
//! The hook-product formula multiplies, over the cells of σ, one hook of σ
//! (selector A) and one hook of σ^i (selector B), divided by j_σ(α). The
//! published selector notation is ambiguous about which hook goes with which
//! cell class; the orientation below (row-i cells take the upper hooks,
//! off-row cells the lower hooks) is the one that reproduces the classical
//! single-row value (σ^1 choose σ) = k+1 for σ = (k) at every α, and it is
//! cross-checked against the expansion oracle in the tests.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::partition::{enumerate_up_to, hooks, j_constant, Partition};
use crate::rational::{is_positive, Rat};
use crate::symfun::{jack, jack_at_ones, SymmetricPolynomial};
use crate::Result;

fn check_alpha(alpha: &Rat) -> Result<()> {
    if !is_positive(alpha) {
        return Err(Error::NonPositiveAlpha(alpha.to_string()));
    }
    Ok(())
}

/// Contiguous coefficient (σ^i choose σ)_α as j_σ(α)^{-1} ∏ A ∏ B.
pub fn contiguous_binomial(sigma: &Partition, i: usize, alpha: &Rat) -> Result<Rat> {
    check_alpha(alpha)?;
    let up = sigma.contiguous(i)?;
    let mut numerator = Rat::one();
    for s in sigma.cells() {
        let (upper_sigma, lower_sigma) = hooks(sigma, s, alpha)?;
        let (upper_up, lower_up) = hooks(&up, s, alpha)?;
        let a = if s.row == i { lower_sigma } else { upper_sigma };
        let b = if s.row == i { upper_up } else { lower_up };
        numerator *= a * b;
    }
    let value = numerator / j_constant(sigma, alpha)?;
    debug_assert!(is_positive(&value));
    Ok(value)
}

/// Memoized table of general binomial coefficients at a fixed α.
///
/// (κ choose σ) is computed top-down on d = |κ|−|σ| through
/// Σ_i (σ^i choose σ)(κ choose σ^i) = d (κ choose σ),
/// with (κ choose σ) = δ_{κσ} at equal degrees. Values vanish exactly when
/// σ ⊄ κ (no box-addition chain reaches κ).
pub struct BinomialTable {
    alpha: Rat,
    memo: Mutex<BTreeMap<(Partition, Partition), Rat>>,
}

impl BinomialTable {
    pub fn new(alpha: Rat) -> Result<Self> {
        check_alpha(&alpha)?;
        Ok(BinomialTable {
            alpha,
            memo: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    pub fn contiguous(&self, sigma: &Partition, i: usize) -> Result<Rat> {
        contiguous_binomial(sigma, i, &self.alpha)
    }

    pub fn general(&self, kappa: &Partition, sigma: &Partition) -> Result<Rat> {
        if sigma.degree() > kappa.degree() || !sigma.contained_in(kappa) {
            return Ok(Rat::zero());
        }
        if sigma.degree() == kappa.degree() {
            return Ok(Rat::one()); // contained + equal degree ⇒ equal
        }
        let key = (kappa.clone(), sigma.clone());
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let gap = Rat::from_integer((kappa.degree() - sigma.degree()).into());
        let mut sum = Rat::zero();
        for i in sigma.contiguous_indices() {
            let up = sigma.contiguous(i)?;
            if !up.contained_in(kappa) {
                continue;
            }
            sum += self.contiguous(sigma, i)? * self.general(kappa, &up)?;
        }
        let value = sum / gap;
        self.memo.lock().unwrap().insert(key, value.clone());
        Ok(value)
    }
}

/// One-shot general coefficient without a shared table.
pub fn general_binomial(kappa: &Partition, sigma: &Partition, alpha: &Rat) -> Result<Rat> {
    BinomialTable::new(alpha.clone())?.general(kappa, sigma)
}

/// Independent oracle: expand J_κ(t+1^m;α)/J_κ(1^m;α) in the basis
/// {J_σ(t;α)/J_σ(1^m;α)} by exact triangular elimination in the monomial
/// basis. Returns the nonzero coefficients.
pub fn oracle_binomial(
    kappa: &Partition,
    m: usize,
    alpha: &Rat,
) -> Result<BTreeMap<Partition, Rat>> {
    check_alpha(alpha)?;
    if kappa.len() > m {
        return Err(Error::LengthExceedsVars {
            length: kappa.len(),
            vars: m,
        });
    }
    if (m as u64) < kappa.degree() {
        return Err(Error::InsufficientVars {
            needed: kappa.degree() as usize,
            vars: m,
        });
    }
    let j_kappa = jack(kappa, m, alpha)?;
    let norm = jack_at_ones(kappa, m, alpha)?;
    let mut remainder = j_kappa.shift_by_one().scaled(&(Rat::one() / norm));

    let mut out = BTreeMap::new();
    for degree in (0..=kappa.degree()).rev() {
        for sigma in crate::partition::enumerate_partitions(degree, m) {
            let j_sigma = jack(&sigma, m, alpha)?;
            let lead = j_sigma.coeff(&sigma);
            debug_assert!(!lead.is_zero());
            let sigma_norm = jack_at_ones(&sigma, m, alpha)?;
            // Coefficient of m_σ still left in the remainder fixes x_σ.
            let x = remainder.coeff(&sigma) * &sigma_norm / lead;
            if x.is_zero() {
                continue;
            }
            let normalized: SymmetricPolynomial = j_sigma.scaled(&(&x / &sigma_norm));
            remainder = remainder.sub(&normalized);
            out.insert(sigma, x);
        }
    }
    assert!(
        remainder.is_zero(),
        "shifted Jack expansion left a nonzero remainder"
    );
    Ok(out)
}

/// A single positivity failure found by `positivity_scan`.
#[derive(Debug, Clone, PartialEq)]
pub enum PositivityViolation {
    NegativeGeneral {
        kappa: Partition,
        sigma: Partition,
        value: Rat,
    },
    NonpositiveContiguous {
        sigma: Partition,
        index: usize,
        value: Rat,
    },
}

#[derive(Debug, Clone)]
pub struct PositivityReport {
    pub alpha: Rat,
    pub max_degree: u64,
    pub max_length: usize,
    pub general_checked: u64,
    pub contiguous_checked: u64,
    pub violations: Vec<PositivityViolation>,
}

/// Exhaustively checks {general ≥ 0, contiguous > 0} over all pairs with
/// |σ| ≤ |κ| ≤ max_degree and lengths ≤ max_length. Violations are data,
/// not errors; the contract is an empty list.
pub fn positivity_scan(max_degree: u64, max_length: usize, alpha: &Rat) -> Result<PositivityReport> {
    let table = BinomialTable::new(alpha.clone())?;
    let all = enumerate_up_to(max_degree, max_length);
    let mut violations = Vec::new();
    let mut general_checked = 0u64;
    let mut contiguous_checked = 0u64;
    for kappa in &all {
        for sigma in &all {
            if sigma.degree() > kappa.degree() {
                continue;
            }
            let value = table.general(kappa, sigma)?;
            general_checked += 1;
            if value < Rat::zero() {
                violations.push(PositivityViolation::NegativeGeneral {
                    kappa: kappa.clone(),
                    sigma: sigma.clone(),
                    value,
                });
            }
        }
    }
    for sigma in &all {
        for i in sigma.contiguous_indices() {
            if sigma.degree() + 1 > max_degree || i > max_length {
                continue;
            }
            let value = table.contiguous(sigma, i)?;
            contiguous_checked += 1;
            if !is_positive(&value) {
                violations.push(PositivityViolation::NonpositiveContiguous {
                    sigma: sigma.clone(),
                    index: i,
                    value,
                });
            }
        }
    }
    Ok(PositivityReport {
        alpha: alpha.clone(),
        max_degree,
        max_length,
        general_checked,
        contiguous_checked,
        violations,
    })
}
