//! Moments and existence checking for (non-central) Wishart distributions on
//! irreducible symmetric cones.
//!
//! The standardized scale is e/2 ("unit"): at that scale the putative moment
//! of Z_(1) equals the negative u-derivative of the Laplace transform at 0,
//! which pins every scale convention used below (asserted in the tests).
//!
//! Pochhammer symbols are rising: (b)_k = b(b+1)…(b+k−1), the convention
//! under which the moment formula closes; every certificate the checker emits
//! uses partitions with parts ≤ 1, where rising and falling agree anyway.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::cone::{wallach_contains, ConeDescriptor, ConeFamily};
use crate::error::Error;
use crate::linalg::RMatrix;
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::{is_positive, rat, rat_to_f64, rising, Rat};
use crate::spectral::{monomial_values_from_power_sums, poly_in_power_basis};
use crate::symfun::{jack, jack_at_ones, trace_power};
use crate::Result;

// ---------------------------------------------------------------------------
// Pochhammer symbols
// ---------------------------------------------------------------------------

fn check_alpha(alpha: &Rat) -> Result<()> {
    if !is_positive(alpha) {
        return Err(Error::NonPositiveAlpha(alpha.to_string()));
    }
    Ok(())
}

/// Generalized Pochhammer symbol (a)_κ = ∏_i (a − (i−1)/α)_{κ_i}.
pub fn pochhammer_general(a: &Rat, kappa: &Partition, alpha: &Rat) -> Result<Rat> {
    check_alpha(alpha)?;
    let mut acc = Rat::one();
    for (idx, &part) in kappa.parts().iter().enumerate() {
        let base = a - rat(idx as i64) / alpha;
        acc *= rising(&base, part);
    }
    Ok(acc)
}

/// (a)_κ / (a)_σ computed as a product, ∏_i (a − (i−1)/α + σ_i)_{κ_i−σ_i},
/// finite even where (a)_σ vanishes. Requires σ ⊆ κ row-wise.
pub fn pochhammer_ratio(
    a: &Rat,
    kappa: &Partition,
    sigma: &Partition,
    alpha: &Rat,
) -> Result<Rat> {
    check_alpha(alpha)?;
    let mut acc = Rat::one();
    for i in 1..=kappa.len().max(sigma.len()) {
        let k_i = kappa.part(i);
        let s_i = sigma.part(i);
        if s_i > k_i {
            return Err(Error::NotNested { row: i });
        }
        if k_i == s_i {
            continue;
        }
        let base = a - rat(i as i64 - 1) / alpha + rat(s_i as i64);
        acc *= rising(&base, k_i - s_i);
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Zonal polynomials through the Jack identification
// ---------------------------------------------------------------------------

/// Normalization constants c_κ of degree k at rank r and Peirce invariant d:
/// the unique solution of Σ_{|κ|=k} c_κ J_κ(λ;2/d)/J_κ(1^r;2/d) = (Σλ_i)^k.
#[derive(Debug, Clone)]
pub struct ZonalNormalization {
    pub degree: u64,
    pub rank: usize,
    pub peirce: u32,
    pub coeffs: BTreeMap<Partition, Rat>,
}

type ZonalCache = Mutex<HashMap<(u64, usize, u32), Arc<ZonalNormalization>>>;

fn zonal_cache() -> &'static ZonalCache {
    static CACHE: OnceLock<ZonalCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn zonal_normalization(k: u64, r: usize, d: u32) -> Result<Arc<ZonalNormalization>> {
    assert!(r >= 1 && d >= 1);
    if let Some(hit) = zonal_cache().lock().unwrap().get(&(k, r, d)) {
        return Ok(hit.clone());
    }
    let alpha = rat(2) / rat(d as i64);
    let mut remainder = trace_power(k, r);
    let mut coeffs = BTreeMap::new();
    for kappa in enumerate_partitions(k, r) {
        let j = jack(&kappa, r, &alpha)?;
        let ones = jack_at_ones(&kappa, r, &alpha)?;
        let lead = j.coeff(&kappa);
        assert!(
            !lead.is_zero(),
            "singular zonal normalization system at {kappa}"
        );
        let c = remainder.coeff(&kappa) * &ones / &lead;
        remainder = remainder.sub(&j.scaled(&(&c / &ones)));
        assert!(is_positive(&c), "zonal coefficient c_{kappa} must be positive");
        coeffs.insert(kappa, c);
    }
    assert!(
        remainder.is_zero(),
        "singular zonal normalization system: residual left"
    );
    let entry = Arc::new(ZonalNormalization {
        degree: k,
        rank: r,
        peirce: d,
        coeffs,
    });
    zonal_cache()
        .lock()
        .unwrap()
        .entry((k, r, d))
        .or_insert_with(|| entry.clone());
    Ok(entry)
}

/// Spherical value Φ_κ(x) = J_κ(λ(x); 2/d) / J_κ(1^r; 2/d) from the power
/// sums of x; Φ_κ(e) = 1.
fn phi_from_power_sums(kappa: &Partition, r: usize, d: u32, power_sums: &[Rat]) -> Result<Rat> {
    let alpha = rat(2) / rat(d as i64);
    let j = jack(kappa, r, &alpha)?;
    let mvals = monomial_values_from_power_sums(kappa.degree(), r, power_sums)?;
    let mut num = Rat::zero();
    for (mu, c) in j.coeffs() {
        num += c * &mvals[mu];
    }
    Ok(num / jack_at_ones(kappa, r, &alpha)?)
}

/// Z_κ(x) for x given by its eigenvalue vector (length r).
pub fn zonal_value(kappa: &Partition, eigenvalues: &[Rat], d: u32) -> Result<Rat> {
    let r = eigenvalues.len();
    if kappa.len() > r {
        return Err(Error::DimensionMismatch {
            expected: kappa.len(),
            got: r,
        });
    }
    let power_sums = power_sums_of(eigenvalues, kappa.degree() as usize);
    zonal_value_from_power_sums(kappa, r, d, &power_sums)
}

/// Z_κ(x) from power sums tr(x^j), j = 1..=|κ|.
pub fn zonal_value_from_power_sums(
    kappa: &Partition,
    r: usize,
    d: u32,
    power_sums: &[Rat],
) -> Result<Rat> {
    if kappa.len() > r {
        return Err(Error::DimensionMismatch {
            expected: kappa.len(),
            got: r,
        });
    }
    let c = zonal_normalization(kappa.degree(), r, d)?.coeffs[kappa].clone();
    Ok(c * phi_from_power_sums(kappa, r, d, power_sums)?)
}

/// Z_κ(e) = c_κ.
pub fn zonal_at_identity(kappa: &Partition, r: usize, d: u32) -> Result<Rat> {
    if kappa.len() > r {
        return Err(Error::DimensionMismatch {
            expected: kappa.len(),
            got: r,
        });
    }
    Ok(zonal_normalization(kappa.degree(), r, d)?.coeffs[kappa].clone())
}

/// Z_κ expanded in the power-sum basis (λ ↦ w_λ with Z_κ = Σ w_λ p_λ);
/// the fast path for per-sample Monte-Carlo evaluation.
pub fn zonal_in_power_basis(
    kappa: &Partition,
    r: usize,
    d: u32,
) -> Result<BTreeMap<Partition, Rat>> {
    let alpha = rat(2) / rat(d as i64);
    let j = jack(kappa, r, &alpha)?;
    let scale = zonal_at_identity(kappa, r, d)? / jack_at_ones(kappa, r, &alpha)?;
    Ok(poly_in_power_basis(&j.scaled(&scale)))
}

pub fn power_sums_of(values: &[Rat], max_degree: usize) -> Vec<Rat> {
    (1..=max_degree)
        .map(|j| {
            values
                .iter()
                .map(|x| {
                    let mut acc = Rat::one();
                    for _ in 0..j {
                        acc *= x;
                    }
                    acc
                })
                .sum()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

/// Scale parameter. `Unit` is the standardized scale e/2.
#[derive(Debug, Clone, PartialEq)]
pub enum Scale {
    Unit,
    Matrix(RMatrix),
}

/// Non-centrality parameter. `Spectral` carries a rational matrix similar to
/// the true (possibly irrational) standardized Ω together with its exact
/// rank; only power sums and rank are ever read from it.
#[derive(Debug, Clone, PartialEq)]
pub enum Omega {
    Eigenvalues(Vec<Rat>),
    Matrix(RMatrix),
    Spectral { rank: usize, carrier: RMatrix },
}

#[derive(Debug, Clone, PartialEq)]
pub struct WishartParams {
    pub cone: ConeDescriptor,
    pub beta: Rat,
    pub scale: Scale,
    pub omega: Omega,
}

impl WishartParams {
    pub fn new(cone: ConeDescriptor, beta: Rat, scale: Scale, omega: Omega) -> Result<Self> {
        if beta.is_negative() {
            return Err(Error::NegativeShape(beta.to_string()));
        }
        let m = matrix_size(&cone);
        if let Scale::Matrix(sigma) = &scale {
            let m = m.ok_or_else(|| {
                Error::InvalidParams("matrix scale requires a real matrix cone".into())
            })?;
            if sigma.nrows() != m || sigma.ncols() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    got: sigma.nrows(),
                });
            }
            if !sigma.is_positive_definite() {
                return Err(Error::NotPositiveDefinite);
            }
        }
        match &omega {
            Omega::Eigenvalues(v) => {
                if v.len() != cone.rank as usize {
                    return Err(Error::DimensionMismatch {
                        expected: cone.rank as usize,
                        got: v.len(),
                    });
                }
                if v.iter().any(|x| x.is_negative()) {
                    return Err(Error::InvalidParams(
                        "noncentrality eigenvalues must be nonnegative".into(),
                    ));
                }
            }
            Omega::Matrix(om) => {
                let m = m.ok_or_else(|| {
                    Error::InvalidParams("matrix noncentrality requires a real matrix cone".into())
                })?;
                if om.nrows() != m || om.ncols() != m {
                    return Err(Error::DimensionMismatch {
                        expected: m,
                        got: om.nrows(),
                    });
                }
                if !om.is_positive_semidefinite() {
                    return Err(Error::NotPositiveSemidefinite);
                }
            }
            Omega::Spectral { rank, .. } => {
                if *rank > cone.rank as usize {
                    return Err(Error::InvalidParams(
                        "spectral rank exceeds cone rank".into(),
                    ));
                }
            }
        }
        Ok(WishartParams {
            cone,
            beta,
            scale,
            omega,
        })
    }

    pub fn omega_rank(&self) -> usize {
        match &self.omega {
            Omega::Eigenvalues(v) => v.iter().filter(|x| !x.is_zero()).count(),
            Omega::Matrix(m) => m.rank(),
            Omega::Spectral { rank, .. } => *rank,
        }
    }

    /// Power sums tr(Ω^j) for j = 1..=max_degree.
    pub fn omega_power_sums(&self, max_degree: usize) -> Vec<Rat> {
        match &self.omega {
            Omega::Eigenvalues(v) => power_sums_of(v, max_degree),
            Omega::Matrix(m) | Omega::Spectral { carrier: m, .. } => {
                if max_degree == 0 {
                    Vec::new()
                } else {
                    m.power_traces(max_degree)
                }
            }
        }
    }
}

/// Side length for a real matrix cone; `None` for other families.
fn matrix_size(cone: &ConeDescriptor) -> Option<usize> {
    match cone.family {
        ConeFamily::RealSymmetric(m) => Some(m as usize),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Laguerre polynomials and moments
// ---------------------------------------------------------------------------

/// All partitions σ ⊆ κ.
fn subpartitions(kappa: &Partition) -> Vec<Partition> {
    let parts = kappa.parts();
    let mut out = Vec::new();
    let mut prefix: Vec<u32> = Vec::new();
    fn rec(parts: &[u32], row: usize, prev: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == parts.len() {
            out.push(Partition::new(prefix.clone()));
            return;
        }
        let hi = parts[row].min(prev);
        for v in (0..=hi).rev() {
            prefix.push(v);
            rec(parts, row + 1, v, prefix, out);
            prefix.pop();
        }
    }
    rec(parts, 0, u32::MAX, &mut prefix, &mut out);
    out
}

/// L_κ^β(−tΩ) = Σ_{σ⊆κ} (κ σ)_{2/d} · [(β)_κ/(β)_σ] · Z_σ(tΩ)/Z_σ(e),
/// with Ω described by power sums (of the unscaled Ω).
fn laguerre_from_power_sums(
    kappa: &Partition,
    beta: &Rat,
    omega_power_sums: &[Rat],
    t: &Rat,
    r: usize,
    d: u32,
) -> Result<Rat> {
    let alpha = rat(2) / rat(d as i64);
    let table = crate::binom::BinomialTable::new(alpha.clone())?;
    // Power sums of tΩ.
    let scaled: Vec<Rat> = omega_power_sums
        .iter()
        .enumerate()
        .map(|(idx, p)| {
            let mut tp = Rat::one();
            for _ in 0..=idx {
                tp *= t;
            }
            tp * p
        })
        .collect();
    let mut total = Rat::zero();
    for sigma in subpartitions(kappa) {
        let b = table.general(kappa, &sigma)?;
        if b.is_zero() {
            continue;
        }
        let ratio = pochhammer_ratio(beta, kappa, &sigma, &alpha)?;
        if ratio.is_zero() {
            continue;
        }
        let phi = phi_from_power_sums(&sigma, r, d, &scaled)?;
        total += b * ratio * phi;
    }
    Ok(total)
}

/// Spec-level Laguerre entry point: ω is the eigenvalue vector of Ω.
pub fn laguerre(
    kappa: &Partition,
    beta: &Rat,
    omega: &[Rat],
    t: &Rat,
    cone: &ConeDescriptor,
) -> Result<Rat> {
    if omega.len() != cone.rank as usize {
        return Err(Error::DimensionMismatch {
            expected: cone.rank as usize,
            got: omega.len(),
        });
    }
    if omega.iter().any(|x| x.is_negative()) || t.is_negative() {
        return Err(Error::InvalidParams(
            "laguerre expects nonnegative eigenvalues and t ≥ 0".into(),
        ));
    }
    let sums = power_sums_of(omega, kappa.degree() as usize);
    laguerre_from_power_sums(
        kappa,
        beta,
        &sums,
        t,
        cone.rank as usize,
        cone.peirce,
    )
}

/// The putative moment E Z_κ(S(t)) = Z_κ(e) · L_κ^β(−tΩ) for standardized
/// (unit-scale) parameters. Negative values certify non-existence.
pub fn putative_moment(kappa: &Partition, params: &WishartParams, t: &Rat) -> Result<Rat> {
    if params.scale != Scale::Unit {
        return Err(Error::InvalidParams(
            "putative_moment requires standardized (unit) scale".into(),
        ));
    }
    if t.is_negative() {
        return Err(Error::InvalidParams("t must be nonnegative".into()));
    }
    let r = params.cone.rank as usize;
    let d = params.cone.peirce;
    if kappa.len() > r {
        return Err(Error::LengthExceedsVars {
            length: kappa.len(),
            vars: r,
        });
    }
    let sums = params.omega_power_sums(kappa.degree() as usize);
    let l = laguerre_from_power_sums(kappa, &params.beta, &sums, t, r, d)?;
    Ok(zonal_at_identity(kappa, r, d)? * l)
}

// ---------------------------------------------------------------------------
// Existence verdict
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailedCondition {
    GindikinWallach,
    RankCondition,
}

impl fmt::Display for FailedCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailedCondition::GindikinWallach => write!(f, "GindikinWallach"),
            FailedCondition::RankCondition => write!(f, "RankCondition"),
        }
    }
}

/// A machine-verifiable witness: the putative moment of Z_κ at the stated t
/// is the stated strictly negative exact rational.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub kappa: Partition,
    pub t: Rat,
    pub value: Rat,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExistenceVerdict {
    pub passes: bool,
    pub failed_condition: Option<FailedCondition>,
    pub certificate: Option<Certificate>,
}

/// Decide the necessary existence conditions:
///   (1) β in the Wallach set;
///   (2) if 2β < d(r−1), then d·rank(Ω) ≤ 2β.
/// On failure, emit a certificate (κ, t) whose putative moment is exactly
/// negative.
pub fn existence_check(params: &WishartParams) -> Result<ExistenceVerdict> {
    let std_params = match (&params.scale, matrix_size(&params.cone)) {
        (Scale::Unit, _) => params.clone(),
        (Scale::Matrix(_), Some(_)) => standardize(params)?,
        (Scale::Matrix(_), None) => {
            return Err(Error::InvalidParams(
                "matrix scale on a non-matrix cone".into(),
            ))
        }
    };
    let cone = &std_params.cone;
    let beta = &std_params.beta;
    let d = rat(cone.peirce as i64);
    let r = cone.rank as i64;
    let wallach_ok = wallach_contains(cone, beta)?;
    let below_ray = rat(2) * beta < &d * rat(r - 1);
    let rank = std_params.omega_rank();
    let rank_ok = !below_ray || &d * rat(rank as i64) <= rat(2) * beta;

    if wallach_ok && rank_ok {
        return Ok(ExistenceVerdict {
            passes: true,
            failed_condition: None,
            certificate: None,
        });
    }

    let failed = if !wallach_ok {
        FailedCondition::GindikinWallach
    } else {
        FailedCondition::RankCondition
    };
    let kappa = certificate_partition(&std_params, failed);
    let (t, value) = scan_for_negative_moment(&kappa, &std_params)?;
    debug_assert!(value.is_negative());
    Ok(ExistenceVerdict {
        passes: false,
        failed_condition: Some(failed),
        certificate: Some(Certificate { kappa, t, value }),
    })
}

/// κ = 1^{l+1} per the proofs: l indexes the failing Pochhammer factor for
/// Wallach violations; l = rank(Ω) for rank violations. A full-rank Ω has no
/// room for 1^{r+1}, so that case falls back to 1^{j+2} (j = 2β/d), whose
/// sub-leading coefficient is the uncancelled negative one.
fn certificate_partition(params: &WishartParams, failed: FailedCondition) -> Partition {
    let d = rat(params.cone.peirce as i64);
    let r = params.cone.rank as usize;
    let two_beta_over_d = rat(2) * &params.beta / &d;
    let rows = match failed {
        FailedCondition::GindikinWallach => {
            // β strictly between d(l−1)/2 and dl/2
            let l: usize = two_beta_over_d
                .floor()
                .to_integer()
                .try_into()
                .expect("small index");
            l + 2
        }
        FailedCondition::RankCondition => {
            let k = params.omega_rank();
            if k < r {
                k + 1
            } else {
                let j: usize = two_beta_over_d
                    .to_integer()
                    .try_into()
                    .expect("small index");
                j + 2
            }
        }
    };
    assert!(rows <= r, "certificate partition exceeds cone rank");
    Partition::new(vec![1; rows])
}

/// Scan t over {0, 1, 2, 4, …} and then {1/2, 1/4, …}; the proofs guarantee a
/// strictly negative value in one of the two regimes.
fn scan_for_negative_moment(kappa: &Partition, params: &WishartParams) -> Result<(Rat, Rat)> {
    let mut grid = vec![Rat::zero()];
    let mut up = Rat::one();
    for _ in 0..64 {
        grid.push(up.clone());
        up *= rat(2);
    }
    let mut down = rat(1) / rat(2);
    for _ in 0..64 {
        grid.push(down.clone());
        down /= rat(2);
    }
    for t in grid {
        let value = putative_moment(kappa, params, &t)?;
        if value.is_negative() {
            return Ok((t, value));
        }
    }
    panic!("no negative moment found within the capped t-grid; certificate search is broken");
}

// ---------------------------------------------------------------------------
// Laplace transform, standardization, tilting
// ---------------------------------------------------------------------------

fn scale_matrix(params: &WishartParams) -> Result<RMatrix> {
    let m = matrix_size(&params.cone).ok_or_else(|| {
        Error::InvalidParams("operation requires the real matrix family".into())
    })?;
    Ok(match &params.scale {
        Scale::Unit => RMatrix::identity(m).scaled(&(rat(1) / rat(2))),
        Scale::Matrix(sigma) => sigma.clone(),
    })
}

fn omega_matrix(params: &WishartParams) -> Result<RMatrix> {
    let m = matrix_size(&params.cone).ok_or_else(|| {
        Error::InvalidParams("operation requires the real matrix family".into())
    })?;
    match &params.omega {
        Omega::Eigenvalues(v) => {
            let mut om = RMatrix::zeros(m, m);
            for (i, x) in v.iter().enumerate() {
                om[(i, i)] = x.clone();
            }
            Ok(om)
        }
        Omega::Matrix(om) => Ok(om.clone()),
        Omega::Spectral { .. } => Err(Error::InvalidParams(
            "spectral noncentrality carries eigenvalue data only".into(),
        )),
    }
}

/// Exact pieces of the Laplace transform at u:
/// value = det(I + 2uΣ)^{−β} · exp(−2 tr(Ω uΣ (I + 2uΣ)^{−1})).
/// Errors with OutOfDomain unless Σ^{−1}/2 + u is positive definite.
pub fn laplace_transform_parts(params: &WishartParams, u: &RMatrix) -> Result<(Rat, Rat)> {
    let sigma = scale_matrix(params)?;
    let m = sigma.nrows();
    if u.nrows() != m || u.ncols() != m || !u.is_symmetric() {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: u.nrows(),
        });
    }
    let sigma_inv = sigma.inverse().ok_or(Error::NotPositiveDefinite)?;
    let boundary = sigma_inv.scaled(&(rat(1) / rat(2))).add(u);
    if !boundary.is_positive_definite() {
        return Err(Error::OutOfDomain);
    }
    let two_u_sigma = u.matmul(&sigma).scaled(&rat(2));
    let inner = RMatrix::identity(m).add(&two_u_sigma);
    let det = inner.det();
    let inner_inv = inner
        .inverse()
        .expect("I + 2uΣ is invertible on the domain");
    let omega = omega_matrix(params)?;
    let exponent = omega
        .matmul(&u.matmul(&sigma))
        .matmul(&inner_inv)
        .trace();
    Ok((det, exponent))
}

/// Laplace transform value as a float; both ingredients are exact rationals,
/// only the final power/exponential round.
pub fn laplace_transform(params: &WishartParams, u: &RMatrix) -> Result<f64> {
    let (det, exponent) = laplace_transform_parts(params, u)?;
    let beta = rat_to_f64(&params.beta);
    Ok(rat_to_f64(&det).powf(-beta) * (-2.0 * rat_to_f64(&exponent)).exp())
}

fn scalar_multiple_of_identity(m: &RMatrix) -> Option<Rat> {
    if !m.is_square() || m.nrows() == 0 {
        return None;
    }
    let c = m[(0, 0)].clone();
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let expected = if i == j { c.clone() } else { Rat::zero() };
            if m[(i, j)] != expected {
                return None;
            }
        }
    }
    Some(c)
}

/// Map Γ(β, Σ; Ω) to the standardized scale e/2. The non-centrality is
/// conjugated by P(√Σ⁻¹) and halved; since √Σ is irrational in general, the
/// result is carried as the similar rational matrix (1/2)Σ⁻¹Ω (same power
/// sums, same rank). Scalar Σ keeps the explicit form.
pub fn standardize(params: &WishartParams) -> Result<WishartParams> {
    let sigma = match &params.scale {
        Scale::Unit => return Ok(params.clone()),
        Scale::Matrix(sigma) => sigma.clone(),
    };
    if !sigma.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let omega = if let Some(c) = scalar_multiple_of_identity(&sigma) {
        let factor = rat(1) / (rat(2) * c);
        match &params.omega {
            Omega::Eigenvalues(v) => Omega::Eigenvalues(v.iter().map(|x| x * &factor).collect()),
            Omega::Matrix(om) => Omega::Matrix(om.scaled(&factor)),
            Omega::Spectral { rank, carrier } => Omega::Spectral {
                rank: *rank,
                carrier: carrier.scaled(&factor),
            },
        }
    } else {
        let om = omega_matrix(params)?;
        let rank = om.rank();
        let sigma_inv = sigma.inverse().ok_or(Error::NotPositiveDefinite)?;
        let carrier = sigma_inv.matmul(&om).scaled(&(rat(1) / rat(2)));
        debug_assert_eq!(carrier.rank(), rank);
        Omega::Spectral { rank, carrier }
    };
    WishartParams::new(params.cone.clone(), params.beta.clone(), Scale::Unit, omega)
}

/// Exponential tilt: parameters Γ(β, t·e; Ω) map to Γ(β, e; Ω/t²).
/// The scale must equal t·e exactly; t = 1 is the identity.
pub fn tilt(params: &WishartParams, t: &Rat) -> Result<WishartParams> {
    if !is_positive(t) {
        return Err(Error::NonPositiveT(t.to_string()));
    }
    let scale_scalar = match &params.scale {
        Scale::Unit => rat(1) / rat(2),
        Scale::Matrix(m) => scalar_multiple_of_identity(m).ok_or_else(|| {
            Error::InvalidParams("tilt requires a scale of the form t·e".into())
        })?,
    };
    if &scale_scalar != t {
        return Err(Error::InvalidParams(format!(
            "scale is {scale_scalar}·e but tilt was called with t = {t}"
        )));
    }
    let factor = rat(1) / (t * t);
    let omega = match &params.omega {
        Omega::Eigenvalues(v) => Omega::Eigenvalues(v.iter().map(|x| x * &factor).collect()),
        Omega::Matrix(om) => Omega::Matrix(om.scaled(&factor)),
        Omega::Spectral { rank, carrier } => Omega::Spectral {
            rank: *rank,
            carrier: carrier.scaled(&factor),
        },
    };
    let m = matrix_size(&params.cone).ok_or_else(|| {
        Error::InvalidParams("tilt is implemented for the real matrix family".into())
    })?;
    WishartParams::new(
        params.cone.clone(),
        params.beta.clone(),
        Scale::Matrix(RMatrix::identity(m)),
        omega,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::{make_cone, ConeFamily};
    use crate::rational::frac;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn real_cone(m: u32) -> ConeDescriptor {
        make_cone(ConeFamily::RealSymmetric(m)).unwrap()
    }

    fn unit_params(m: u32, beta: Rat, omega: Vec<Rat>) -> WishartParams {
        WishartParams::new(real_cone(m), beta, Scale::Unit, Omega::Eigenvalues(omega)).unwrap()
    }

    fn rmat(rows: &[&[i64]]) -> RMatrix {
        RMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        let beta = frac(3, 4);
        assert_eq!(
            pochhammer_general(&beta, &Partition::empty(), &rat(2)).unwrap(),
            rat(1)
        );
        // κ = 1^{l+1} at α = 2: β(β−1/2)…(β−l/2)
        for l in 0..4usize {
            let kappa = Partition::new(vec![1; l + 1]);
            let mut expected = Rat::one();
            for i in 0..=l {
                expected *= &beta - frac(i as i64, 2);
            }
            assert_eq!(
                pochhammer_general(&beta, &kappa, &rat(2)).unwrap(),
                expected
            );
        }
        assert_eq!(
            pochhammer_general(&rat(0), &p(&[1]), &frac(1, 2)).unwrap(),
            rat(0)
        );
    }

    #[test]
    fn pochhammer_ratio_examples() {
        let alpha = rat(2);
        let kappa = p(&[2, 1]);
        assert_eq!(
            pochhammer_ratio(&frac(5, 7), &kappa, &kappa, &alpha).unwrap(),
            rat(1)
        );
        // σ = (): collapses to the general symbol
        for beta in [frac(5, 7), rat(2), frac(1, 2)] {
            assert_eq!(
                pochhammer_ratio(&beta, &kappa, &Partition::empty(), &alpha).unwrap(),
                pochhammer_general(&beta, &kappa, &alpha).unwrap()
            );
        }
        // the 0/0 guard: a = 1/2, κ = (1,1), σ = (1) gives exactly 0
        assert_eq!(
            pochhammer_ratio(&frac(1, 2), &p(&[1, 1]), &p(&[1]), &alpha).unwrap(),
            rat(0)
        );
        assert!(matches!(
            pochhammer_ratio(&rat(1), &p(&[1]), &p(&[2]), &alpha),
            Err(Error::NotNested { .. })
        ));
        // Where (a)_σ ≠ 0 the product form equals the true quotient.
        let a = frac(7, 3);
        let sigma = p(&[1, 1]);
        let lhs = pochhammer_ratio(&a, &kappa, &sigma, &alpha).unwrap();
        let num = pochhammer_general(&a, &kappa, &alpha).unwrap();
        let den = pochhammer_general(&a, &sigma, &alpha).unwrap();
        assert_eq!(lhs, num / den);
    }

    #[test]
    fn zonal_normalization_reproduces_quoted_split() {
        // k = 2, r = 2, d = 1: C_(2) = λ1²+λ2²+(2/3)λ1λ2, C_(1,1) = (4/3)λ1λ2.
        let z = zonal_normalization(2, 2, 1).unwrap();
        assert_eq!(z.coeffs[&p(&[2])], frac(8, 3));
        assert_eq!(z.coeffs[&p(&[1, 1])], frac(4, 3));

        let alpha = rat(2);
        let j2 = jack(&p(&[2]), 2, &alpha).unwrap();
        let scale = &z.coeffs[&p(&[2])] / jack_at_ones(&p(&[2]), 2, &alpha).unwrap();
        let z2 = j2.scaled(&scale);
        assert_eq!(z2.coeff(&p(&[2])), rat(1));
        assert_eq!(z2.coeff(&p(&[1, 1])), frac(2, 3));

        assert_eq!(zonal_normalization(0, 3, 1).unwrap().coeffs[&Partition::empty()], rat(1));
        // Z_(1) = trace forces c_(1) = Z_(1)(e) = r.
        for r in 1..=4usize {
            for d in [1u32, 2] {
                assert_eq!(
                    zonal_normalization(1, r, d).unwrap().coeffs[&p(&[1])],
                    rat(r as i64)
                );
            }
        }
    }

    #[test]
    fn zonal_value_examples() {
        // Z_(1) is the trace.
        let lam = [frac(3, 2), rat(2), rat(0)];
        assert_eq!(
            zonal_value(&p(&[1]), &lam, 1).unwrap(),
            frac(7, 2)
        );
        // Z_(1,1) vanishes on rank-1 arguments and is 4/3 at (1,1).
        assert_eq!(zonal_value(&p(&[1, 1]), &[rat(1), rat(0)], 1).unwrap(), rat(0));
        assert_eq!(
            zonal_value(&p(&[1, 1]), &[rat(1), rat(1)], 1).unwrap(),
            frac(4, 3)
        );
        assert!(matches!(
            zonal_value(&p(&[1, 1, 1]), &[rat(1), rat(1)], 1),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn zonal_value_dual_route_matrix_vs_eigenvalues() {
        // [[2,1],[1,2]] has eigenvalues (3, 1); power sums are rational either way.
        let m = rmat(&[&[2, 1], &[1, 2]]);
        for d in [1u32, 2] {
            for degree in 0..=4u64 {
                for kappa in enumerate_partitions(degree, 2) {
                    let via_matrix = zonal_value_from_power_sums(
                        &kappa,
                        2,
                        d,
                        &m.power_traces(degree.max(1) as usize),
                    )
                    .unwrap();
                    let via_eigen = zonal_value(&kappa, &[rat(3), rat(1)], d).unwrap();
                    assert_eq!(via_matrix, via_eigen, "kappa={kappa} d={d}");
                }
            }
        }
    }

    #[test]
    fn zonal_positivity_on_the_cone() {
        // Z_κ ≥ 0 on nonnegative eigenvalues; strictly positive exactly when
        // the number of nonzero eigenvalues is at least l(κ), and in
        // particular when it equals l(κ).
        let vectors: Vec<Vec<Rat>> = vec![
            vec![rat(0), rat(0), rat(0)],
            vec![rat(2), rat(0), rat(0)],
            vec![rat(2), frac(1, 3), rat(0)],
            vec![rat(2), frac(1, 3), rat(5)],
        ];
        for d in [1u32, 2, 4] {
            for degree in 0..=4u64 {
                for kappa in enumerate_partitions(degree, 3) {
                    for lam in &vectors {
                        let nonzero = lam.iter().filter(|x| !x.is_zero()).count();
                        let v = zonal_value(&kappa, lam, d).unwrap();
                        assert!(!v.is_negative(), "Z_{kappa}({lam:?}) < 0");
                        if nonzero >= kappa.len() {
                            assert!(
                                v.is_positive(),
                                "Z_{kappa} should be positive at rank {nonzero}"
                            );
                        } else {
                            assert!(v.is_zero(), "Z_{kappa} should vanish at rank {nonzero}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn zonal_trace_power_identity_small() {
        // Σ_{|κ|=k} Z_κ(λ) = (Σλ)^k at sample points (full sweep in acceptance).
        let lam = [rat(2), frac(1, 3), rat(1)];
        for d in [1u32, 2, 4, 8] {
            for k in 0..=4u64 {
                let mut total = Rat::zero();
                for kappa in enumerate_partitions(k, 3) {
                    total += zonal_value(&kappa, &lam, d).unwrap();
                }
                let trace: Rat = lam.iter().cloned().sum();
                let mut expected = Rat::one();
                for _ in 0..k {
                    expected *= &trace;
                }
                assert_eq!(total, expected, "k={k} d={d}");
            }
        }
    }

    #[test]
    fn laguerre_examples() {
        let cone = real_cone(2);
        let beta = rat(1);
        assert_eq!(
            laguerre(&Partition::empty(), &beta, &[rat(1), rat(0)], &rat(3), &cone).unwrap(),
            rat(1)
        );
        // κ = (1): β + t(Σω)/r
        for (beta, omega, t) in [
            (rat(1), [rat(1), rat(0)], rat(1)),
            (frac(1, 2), [rat(2), rat(1)], frac(3, 2)),
        ] {
            let expected =
                &beta + &t * (omega[0].clone() + omega[1].clone()) / rat(2);
            assert_eq!(
                laguerre(&p(&[1]), &beta, &omega, &t, &cone).unwrap(),
                expected
            );
        }
        assert_eq!(
            laguerre(&p(&[1]), &rat(1), &[rat(1), rat(0)], &rat(1), &cone).unwrap(),
            frac(3, 2)
        );
    }

    #[test]
    fn putative_moment_examples() {
        // κ = (1): β r + t Σω.
        for (m, beta, omega, t) in [
            (2u32, rat(1), vec![rat(1), rat(0)], rat(1)),
            (3u32, frac(1, 2), vec![rat(2), rat(1), rat(0)], rat(4)),
        ] {
            let params = unit_params(m, beta.clone(), omega.clone());
            let expected = &beta * rat(m as i64)
                + &t * omega.iter().cloned().sum::<Rat>();
            assert_eq!(
                putative_moment(&p(&[1]), &params, &t).unwrap(),
                expected
            );
        }

        // κ = (1,1), β = 1/4, ω = (1,0), d = 1: exactly (4/3)(−1/16 − t/4) < 0.
        let params = unit_params(2, frac(1, 4), vec![rat(1), rat(0)]);
        for t in [rat(0), rat(1), rat(5)] {
            let got = putative_moment(&p(&[1, 1]), &params, &t).unwrap();
            let expected = frac(4, 3) * (frac(-1, 16) - &t / rat(4));
            assert_eq!(got, expected);
            assert!(got.is_negative());
        }

        // t = 0, ω = 0: Z_κ(e)(β)_κ.
        let central = unit_params(3, frac(1, 2), vec![rat(0), rat(0), rat(0)]);
        for kappa in enumerate_partitions(3, 3) {
            let got = putative_moment(&kappa, &central, &rat(0)).unwrap();
            let expected = zonal_at_identity(&kappa, 3, 1).unwrap()
                * pochhammer_general(&frac(1, 2), &kappa, &rat(2)).unwrap();
            assert_eq!(got, expected, "kappa={kappa}");
        }
    }

    #[test]
    fn moment_transform_consistency_at_unit_scale() {
        // putative_moment((1), ·, t) must equal −d/ds laplace(u = sI) at 0,
        // whose exact closed form at unit scale is βm + t·trΩ.
        for (m, beta, omega) in [
            (1u32, frac(1, 2), vec![rat(0)]),
            (2, rat(1), vec![rat(1), rat(0)]),
            (3, frac(3, 2), vec![rat(2), rat(1), rat(1)]),
        ] {
            for t in [rat(0), rat(1), frac(1, 2), rat(3)] {
                let params = unit_params(m, beta.clone(), omega.clone());
                let moment = putative_moment(&p(&[1]), &params, &t).unwrap();
                let exact_derivative = &beta * rat(m as i64)
                    + &t * omega.iter().cloned().sum::<Rat>();
                assert_eq!(moment, exact_derivative);

                // Cross-check the implemented transform by finite differences
                // on the tilted noncentrality tΩ.
                let scaled: Vec<Rat> = omega.iter().map(|x| x * &t).collect();
                let tilted = unit_params(m, beta.clone(), scaled);
                let h = 1e-6;
                let mm = m as usize;
                let u = |s: f64| {
                    let mut v = RMatrix::zeros(mm, mm);
                    for i in 0..mm {
                        v[(i, i)] = crate::rational::rat_from_f64(s).unwrap();
                    }
                    v
                };
                let f_plus = laplace_transform(&tilted, &u(h)).unwrap();
                let f_minus = laplace_transform(&tilted, &u(-h)).unwrap();
                let numeric = -(f_plus - f_minus) / (2.0 * h);
                assert!(
                    (numeric - rat_to_f64(&moment)).abs() < 1e-5,
                    "numeric {numeric} vs exact {moment}"
                );
            }
        }
    }

    #[test]
    fn existence_examples_from_theorem() {
        // real:3, β = 1/2, rank 1 passes.
        let passing = unit_params(3, frac(1, 2), vec![rat(1), rat(0), rat(0)]);
        let verdict = existence_check(&passing).unwrap();
        assert!(verdict.passes);
        assert!(verdict.certificate.is_none());

        // real:3, β = 1/2, rank 2 fails the rank condition with κ = (1,1,1).
        let failing = unit_params(3, frac(1, 2), vec![rat(1), rat(1), rat(0)]);
        let verdict = existence_check(&failing).unwrap();
        assert!(!verdict.passes);
        assert_eq!(verdict.failed_condition, Some(FailedCondition::RankCondition));
        let cert = verdict.certificate.unwrap();
        assert_eq!(cert.kappa, p(&[1, 1, 1]));
        assert!(cert.value.is_negative());
        assert_eq!(
            putative_moment(&cert.kappa, &failing, &cert.t).unwrap(),
            cert.value
        );

        // real:3, β = 3/4 fails Wallach with the zero-order certificate.
        let wallach = unit_params(3, frac(3, 4), vec![rat(0), rat(0), rat(0)]);
        let verdict = existence_check(&wallach).unwrap();
        assert!(!verdict.passes);
        assert_eq!(
            verdict.failed_condition,
            Some(FailedCondition::GindikinWallach)
        );
        let cert = verdict.certificate.unwrap();
        assert_eq!(cert.kappa, p(&[1, 1, 1]));
        assert_eq!(cert.t, rat(0));
        // value = Z_κ(e) · (3/4)(1/4)(−1/4)
        let expected = zonal_at_identity(&p(&[1, 1, 1]), 3, 1).unwrap() * frac(-3, 64);
        assert_eq!(cert.value, expected);
    }

    #[test]
    fn verdicts_match_direct_transcription_on_small_grid() {
        // Small version of acceptance criterion 6 (m ≤ 3, d = 1).
        for m in 2u32..=3 {
            let cone = real_cone(m);
            for num in 0..=8i64 {
                let beta = frac(num, 4);
                for rank in 0..=m as usize {
                    let mut omega = vec![rat(0); m as usize];
                    for entry in omega.iter_mut().take(rank) {
                        *entry = rat(1);
                    }
                    let params = unit_params(m, beta.clone(), omega);
                    let verdict = existence_check(&params).unwrap();
                    let wallach = wallach_contains(&cone, &beta).unwrap();
                    let below = rat(2) * &beta < rat((m - 1) as i64);
                    let rank_ok = !below || rat(rank as i64) <= rat(2) * &beta;
                    assert_eq!(
                        verdict.passes,
                        wallach && rank_ok,
                        "m={m} beta={beta} rank={rank}"
                    );
                    if let Some(cert) = verdict.certificate {
                        let check = putative_moment(&cert.kappa, &params, &cert.t).unwrap();
                        assert_eq!(check, cert.value);
                        assert!(check.is_negative());
                    }
                }
            }
        }
    }

    #[test]
    fn full_rank_violation_still_yields_certificate() {
        // rank(Ω) = r leaves no room for 1^{r+1}; the fallback must still
        // produce an exact negative moment.
        let params = unit_params(2, rat(0), vec![rat(1), rat(1)]);
        let verdict = existence_check(&params).unwrap();
        assert!(!verdict.passes);
        let cert = verdict.certificate.unwrap();
        assert_eq!(cert.kappa, p(&[1, 1]));
        assert!(cert.value.is_negative());
        assert_eq!(
            putative_moment(&cert.kappa, &params, &cert.t).unwrap(),
            cert.value
        );
    }

    #[test]
    fn laplace_transform_examples() {
        // u = 0 gives 1 exactly.
        let params = unit_params(2, rat(1), vec![rat(1), rat(0)]);
        let u0 = RMatrix::zeros(2, 2);
        assert_eq!(laplace_transform(&params, &u0).unwrap(), 1.0);

        // m = 1, β = 1, Σ = 1/2, Ω = 0, u = 1 → 1/2.
        let scalar = unit_params(1, rat(1), vec![rat(0)]);
        let u1 = rmat(&[&[1]]);
        let (det, expo) = laplace_transform_parts(&scalar, &u1).unwrap();
        assert_eq!(det, rat(2));
        assert_eq!(expo, rat(0));
        assert!((laplace_transform(&scalar, &u1).unwrap() - 0.5).abs() < 1e-15);

        // m = 1, Σ = 1: u = −0.6 out of domain, u = −0.4 fine.
        let sigma_one = WishartParams::new(
            real_cone(1),
            rat(1),
            Scale::Matrix(rmat(&[&[1]])),
            Omega::Eigenvalues(vec![rat(0)]),
        )
        .unwrap();
        let mut u = RMatrix::zeros(1, 1);
        u[(0, 0)] = frac(-3, 5);
        assert!(matches!(
            laplace_transform(&sigma_one, &u),
            Err(Error::OutOfDomain)
        ));
        u[(0, 0)] = frac(-2, 5);
        assert!(laplace_transform(&sigma_one, &u).is_ok());
    }

    #[test]
    fn laplace_domain_boundary_is_exact() {
        // Σ = I (m = 2): domain is u > −I/2. ε = 10⁻⁶ inside works, ε ≤ 0 fails.
        let params = WishartParams::new(
            real_cone(2),
            frac(1, 2),
            Scale::Matrix(RMatrix::identity(2)),
            Omega::Eigenvalues(vec![rat(1), rat(0)]),
        )
        .unwrap();
        let eps = frac(1, 1_000_000);
        let at = |offset: Rat| {
            let mut u = RMatrix::zeros(2, 2);
            u[(0, 0)] = frac(-1, 2) + offset;
            u[(1, 1)] = rat(1);
            u
        };
        assert!(laplace_transform(&params, &at(eps.clone())).is_ok());
        assert!(matches!(
            laplace_transform(&params, &at(rat(0))),
            Err(Error::OutOfDomain)
        ));
        assert!(matches!(
            laplace_transform(&params, &at(-eps)),
            Err(Error::OutOfDomain)
        ));
    }

    #[test]
    fn standardize_examples() {
        // Σ = I/2 is already standardized: Ω unchanged.
        let half_identity = RMatrix::identity(2).scaled(&frac(1, 2));
        let params = WishartParams::new(
            real_cone(2),
            rat(1),
            Scale::Matrix(half_identity),
            Omega::Eigenvalues(vec![rat(2), rat(1)]),
        )
        .unwrap();
        let std = standardize(&params).unwrap();
        assert_eq!(std.scale, Scale::Unit);
        assert_eq!(
            std.omega,
            Omega::Eigenvalues(vec![rat(2), rat(1)])
        );

        // m = 1, Σ = 2: ω scales by 1/(2Σ) = 1/4.
        let scalar = WishartParams::new(
            real_cone(1),
            rat(1),
            Scale::Matrix(rmat(&[&[2]])),
            Omega::Eigenvalues(vec![rat(8)]),
        )
        .unwrap();
        let std = standardize(&scalar).unwrap();
        assert_eq!(std.omega, Omega::Eigenvalues(vec![rat(2)]));

        // Non-scalar Σ: rank is preserved exactly and power sums match the
        // conjugated noncentrality (similar matrices share traces).
        let sigma = rmat(&[&[2, 1], &[1, 3]]);
        let omega = rmat(&[&[1, 1], &[1, 1]]); // rank 1
        let params = WishartParams::new(
            real_cone(2),
            frac(1, 2),
            Scale::Matrix(sigma.clone()),
            Omega::Matrix(omega.clone()),
        )
        .unwrap();
        let std = standardize(&params).unwrap();
        assert_eq!(std.scale, Scale::Unit);
        assert_eq!(std.omega_rank(), 1);
        let expected_carrier = sigma.inverse().unwrap().matmul(&omega).scaled(&frac(1, 2));
        assert_eq!(
            std.omega_power_sums(3),
            expected_carrier.power_traces(3)
        );
        // Standardizing twice is idempotent.
        assert_eq!(standardize(&std).unwrap(), std);
    }

    #[test]
    fn tilt_examples() {
        let base = WishartParams::new(
            real_cone(2),
            rat(1),
            Scale::Matrix(RMatrix::identity(2)),
            Omega::Eigenvalues(vec![rat(4), rat(0)]),
        )
        .unwrap();
        // t = 1 is the identity.
        assert_eq!(tilt(&base, &rat(1)).unwrap(), base);

        // t = 2: scale 2e maps to e with Ω/4.
        let scaled = WishartParams::new(
            real_cone(2),
            rat(1),
            Scale::Matrix(RMatrix::identity(2).scaled(&rat(2))),
            Omega::Eigenvalues(vec![rat(4), rat(0)]),
        )
        .unwrap();
        let tilted = tilt(&scaled, &rat(2)).unwrap();
        assert_eq!(tilted.omega, Omega::Eigenvalues(vec![rat(1), rat(0)]));
        assert_eq!(tilted.scale, Scale::Matrix(RMatrix::identity(2)));

        assert!(matches!(
            tilt(&scaled, &rat(3)),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            tilt(&scaled, &rat(0)),
            Err(Error::NonPositiveT(_))
        ));
    }

    #[test]
    fn params_validation() {
        assert!(matches!(
            WishartParams::new(
                real_cone(2),
                frac(-1, 2),
                Scale::Unit,
                Omega::Eigenvalues(vec![rat(0), rat(0)])
            ),
            Err(Error::NegativeShape(_))
        ));
        assert!(matches!(
            WishartParams::new(
                real_cone(2),
                rat(1),
                Scale::Matrix(rmat(&[&[1, 2], &[2, 1]])),
                Omega::Eigenvalues(vec![rat(0), rat(0)])
            ),
            Err(Error::NotPositiveDefinite)
        ));
        assert!(matches!(
            WishartParams::new(
                real_cone(2),
                rat(1),
                Scale::Unit,
                Omega::Matrix(rmat(&[&[1, 2], &[2, 1]]))
            ),
            Err(Error::NotPositiveSemidefinite)
        ));
        assert!(matches!(
            WishartParams::new(
                real_cone(2),
                rat(1),
                Scale::Unit,
                Omega::Eigenvalues(vec![rat(1)])
            ),
            Err(Error::DimensionMismatch { .. })
        ));
        let lorentz = make_cone(ConeFamily::Lorentz(5)).unwrap();
        assert!(matches!(
            WishartParams::new(
                lorentz,
                rat(1),
                Scale::Matrix(RMatrix::identity(2)),
                Omega::Eigenvalues(vec![rat(0), rat(0)])
            ),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn existence_on_non_matrix_cones() {
        // Lorentz(5): r = 2, d = 3. Wallach = {0} ∪ [3/2, ∞).
        let cone = make_cone(ConeFamily::Lorentz(5)).unwrap();
        let params = WishartParams::new(
            cone.clone(),
            rat(1),
            Scale::Unit,
            Omega::Eigenvalues(vec![rat(0), rat(0)]),
        )
        .unwrap();
        let verdict = existence_check(&params).unwrap();
        assert!(!verdict.passes);
        assert_eq!(
            verdict.failed_condition,
            Some(FailedCondition::GindikinWallach)
        );
        let cert = verdict.certificate.unwrap();
        assert!(cert.value.is_negative());

        // Octonion cone: r = 3, d = 8: β = 4 is the discrete point d/2.
        let oct = make_cone(ConeFamily::Octonion).unwrap();
        let ok = WishartParams::new(
            oct.clone(),
            rat(4),
            Scale::Unit,
            Omega::Eigenvalues(vec![rat(1), rat(0), rat(0)]),
        )
        .unwrap();
        assert!(existence_check(&ok).unwrap().passes);
        let bad = WishartParams::new(
            oct,
            rat(4),
            Scale::Unit,
            Omega::Eigenvalues(vec![rat(1), rat(1), rat(0)]),
        )
        .unwrap();
        let verdict = existence_check(&bad).unwrap();
        assert!(!verdict.passes);
        assert_eq!(verdict.failed_condition, Some(FailedCondition::RankCondition));
        let cert = verdict.certificate.unwrap();
        assert_eq!(
            putative_moment(&cert.kappa, &bad, &cert.t).unwrap(),
            cert.value
        );

        // Full-rank noncentrality at the discrete point β = d/2 = 4: the
        // certificate partition cannot exceed the rank, and the witness
        // comes from the small-t regime.
        let full = WishartParams::new(
            make_cone(ConeFamily::Octonion).unwrap(),
            rat(4),
            Scale::Unit,
            Omega::Eigenvalues(vec![rat(1), rat(2), rat(3)]),
        )
        .unwrap();
        let verdict = existence_check(&full).unwrap();
        assert!(!verdict.passes);
        assert_eq!(verdict.failed_condition, Some(FailedCondition::RankCondition));
        let cert = verdict.certificate.unwrap();
        assert_eq!(cert.kappa, p(&[1, 1, 1]));
        assert!(cert.value.is_negative());
        assert_eq!(
            putative_moment(&cert.kappa, &full, &cert.t).unwrap(),
            cert.value
        );
    }
}
