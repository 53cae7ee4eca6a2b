//! Conversion between power-sum and monomial symmetric bases.
//!
//! Exact symmetric matrices may have irrational eigenvalues, but every
//! symmetric-function value the engine needs is determined by the power sums
//! tr(x^j), which are rational. This module turns power-sum values into
//! monomial symmetric values (and symmetric polynomials into power-sum
//! expansions) by exact linear solves, so zonal evaluations at matrix
//! arguments never touch an eigenvalue.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::linalg::RMatrix;
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::Rat;
use crate::symfun::SymmetricPolynomial;
use crate::Result;

/// p_λ = ∏_i p_{λ_i} as a polynomial in the monomial basis of `r` variables.
pub fn power_sum_poly(lambda: &Partition, r: usize) -> SymmetricPolynomial {
    let mut acc = SymmetricPolynomial::constant(Rat::one(), r);
    for &part in lambda.parts() {
        let pk = SymmetricPolynomial::monomial(Partition::new(vec![part]), r)
            .expect("single-row partition always fits");
        acc = acc.mul(&pk);
    }
    acc
}

/// Basis partitions for the degree-`s` component in `r` variables.
/// Rows: partitions of s with all parts ≤ r (indexing p_λ).
/// Columns: partitions of s with length ≤ r (indexing m_μ).
fn row_partitions(degree: u64, r: usize) -> Vec<Partition> {
    enumerate_partitions(degree, degree as usize)
        .into_iter()
        .filter(|lambda| lambda.parts().iter().all(|&p| p as usize <= r))
        .collect()
}

fn col_partitions(degree: u64, r: usize) -> Vec<Partition> {
    enumerate_partitions(degree, r)
}

struct BasisChange {
    rows: Vec<Partition>,
    cols: Vec<Partition>,
    /// inverse of the (p_λ in m-basis) matrix: maps m-coefficients back
    /// through the p-basis
    p_to_m_inverse: RMatrix,
    p_to_m: RMatrix,
}

type BasisCache = Mutex<HashMap<(u64, usize), Arc<BasisChange>>>;

fn basis_change(degree: u64, r: usize) -> Arc<BasisChange> {
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(degree, r)) {
        return hit.clone();
    }
    let rows = row_partitions(degree, r);
    let cols = col_partitions(degree, r);
    assert_eq!(rows.len(), cols.len(), "p/m index sets must be conjugate-equal");
    let n = rows.len();
    let mut a = RMatrix::zeros(n, n);
    for (i, lambda) in rows.iter().enumerate() {
        let poly = power_sum_poly(lambda, r);
        for (j, mu) in cols.iter().enumerate() {
            a[(i, j)] = poly.coeff(mu);
        }
    }
    let inv = a
        .inverse()
        .expect("power-sum to monomial change of basis is invertible");
    let entry = Arc::new(BasisChange {
        rows,
        cols,
        p_to_m_inverse: inv,
        p_to_m: a,
    });
    cache
        .lock()
        .unwrap()
        .entry((degree, r))
        .or_insert_with(|| entry.clone());
    entry
}

/// Values m_μ(x) for all |μ| = degree, l(μ) ≤ r, given the power sums
/// p_j = p_j(x) for j = 1..=degree (of a vector of r eigenvalues).
pub fn monomial_values_from_power_sums(
    degree: u64,
    r: usize,
    power_sums: &[Rat],
) -> Result<BTreeMap<Partition, Rat>> {
    assert!(power_sums.len() as u64 >= degree);
    let change = basis_change(degree, r);
    let n = change.rows.len();
    // b_λ = ∏ p_{λ_i}
    let mut b = Vec::with_capacity(n);
    for lambda in &change.rows {
        let mut acc = Rat::one();
        for &part in lambda.parts() {
            acc *= &power_sums[part as usize - 1];
        }
        b.push(acc);
    }
    // m = A^{-1} b solves A m = b, where A maps m-values to p-values.
    let mut out = BTreeMap::new();
    for (j, mu) in change.cols.iter().enumerate() {
        let mut acc = Rat::zero();
        for (i, bi) in b.iter().enumerate() {
            let w = &change.p_to_m_inverse[(j, i)];
            if !w.is_zero() {
                acc += w * bi;
            }
        }
        out.insert(mu.clone(), acc);
    }
    Ok(out)
}

/// Expand a symmetric polynomial (any mix of degrees) in the power-sum
/// basis: returns λ ↦ w_λ with p = Σ w_λ p_λ.
pub fn poly_in_power_basis(p: &SymmetricPolynomial) -> BTreeMap<Partition, Rat> {
    let r = p.num_vars();
    let mut degrees: Vec<u64> = p.coeffs().keys().map(|mu| mu.degree()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = BTreeMap::new();
    for degree in degrees {
        let change = basis_change(degree, r);
        // c_μ vector for this degree
        let c: Vec<Rat> = change.cols.iter().map(|mu| p.coeff(mu)).collect();
        // solve wᵀ A = cᵀ  ⇔  w = (A⁻¹ applied on the right): w_i = Σ_j c_j (A⁻¹)_{j i}
        for (i, lambda) in change.rows.iter().enumerate() {
            let mut acc = Rat::zero();
            for (j, cj) in c.iter().enumerate() {
                if !cj.is_zero() {
                    acc += cj * &change.p_to_m_inverse[(j, i)];
                }
            }
            if !acc.is_zero() {
                out.insert(lambda.clone(), acc);
            }
        }
    }
    out
}

/// Evaluate a power-basis expansion at given power-sum values
/// (p_j supplied for j = 1..=max part appearing).
pub fn eval_power_basis(expansion: &BTreeMap<Partition, Rat>, power_sums: &[Rat]) -> Rat {
    let mut total = Rat::zero();
    for (lambda, w) in expansion {
        let mut term = w.clone();
        for &part in lambda.parts() {
            term *= &power_sums[part as usize - 1];
        }
        total += term;
    }
    total
}

/// Sanity accessor for tests: the raw p→m matrix restricted to one degree.
pub fn power_to_monomial_matrix(degree: u64, r: usize) -> (Vec<Partition>, Vec<Partition>, RMatrix) {
    let change = basis_change(degree, r);
    (
        change.rows.clone(),
        change.cols.clone(),
        change.p_to_m.clone(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn classic_degree_two_change_of_basis() {
        // r = 2: p_(1,1) = m_2 + 2 m_11, p_(2) = m_2
        let (rows, cols, a) = power_to_monomial_matrix(2, 2);
        assert_eq!(rows, vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(cols, vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(a[(0, 0)], rat(1));
        assert_eq!(a[(0, 1)], rat(0));
        assert_eq!(a[(1, 0)], rat(1));
        assert_eq!(a[(1, 1)], rat(2));
    }

    #[test]
    fn monomial_values_match_direct_evaluation() {
        // eigenvalues (3, 1/2, 0) with r = 3
        let eig = [rat(3), frac(1, 2), rat(0)];
        for degree in 1..=5u64 {
            let power_sums: Vec<Rat> = (1..=degree)
                .map(|j| {
                    eig.iter()
                        .map(|x| {
                            let mut acc = Rat::one();
                            for _ in 0..j {
                                acc *= x;
                            }
                            acc
                        })
                        .sum()
                })
                .collect();
            let values = monomial_values_from_power_sums(degree, 3, &power_sums).unwrap();
            for (mu, got) in values {
                let direct = SymmetricPolynomial::monomial(mu.clone(), 3)
                    .unwrap()
                    .eval(&eig)
                    .unwrap();
                assert_eq!(got, direct, "mu={mu}");
            }
        }
    }

    #[test]
    fn power_basis_round_trip() {
        // trace^3 in 2 variables should expand and evaluate consistently.
        let poly = crate::symfun::trace_power(3, 2);
        let expansion = poly_in_power_basis(&poly);
        // (p_1)^3 exactly
        assert_eq!(expansion.len(), 1);
        assert_eq!(expansion[&p(&[1, 1, 1])], rat(1));

        let e2 = SymmetricPolynomial::monomial(p(&[1, 1]), 2).unwrap();
        let exp2 = poly_in_power_basis(&e2);
        // m_11 = (p_1^2 - p_2)/2
        assert_eq!(exp2[&p(&[1, 1])], frac(1, 2));
        assert_eq!(exp2[&p(&[2])], frac(-1, 2));

        let point = [frac(5, 2), rat(-1)];
        let ps: Vec<Rat> = (1..=2)
            .map(|j| {
                point
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
            .collect();
        assert_eq!(
            eval_power_basis(&exp2, &ps),
            e2.eval(&point).unwrap()
        );
    }
}
