//! Exact symmetric polynomials in the monomial basis, the degree-preserving
//! operator D(α), and Jack polynomials J_κ(·;α) built as its eigenfunctions.
//!
//! D(α) = (α/2) Σ_i t_i² ∂²/∂t_i² + Σ_{i≠j} t_i²/(t_i−t_j) ∂/∂t_i.
//!
//! The pair terms are evaluated by combining the (i,j) and (j,i)
//! contributions and dividing the resulting antisymmetric polynomial by
//! (t_i − t_j); on symmetric inputs the division is exact and reduces to a
//! finite geometric sum, so all arithmetic stays polynomial and rational.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::Error;
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::{factorial, is_positive, Rat};
use crate::Result;

/// Σ c_μ m_μ in `num_vars` variables; no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPolynomial {
    num_vars: usize,
    coeffs: BTreeMap<Partition, Rat>,
}

impl SymmetricPolynomial {
    pub fn zero(num_vars: usize) -> Self {
        SymmetricPolynomial {
            num_vars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rat, num_vars: usize) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(Partition::empty(), c);
        p
    }

    /// The monomial symmetric polynomial m_μ. Requires l(μ) ≤ num_vars.
    pub fn monomial(mu: Partition, num_vars: usize) -> Result<Self> {
        if mu.len() > num_vars {
            return Err(Error::LengthExceedsVars {
                length: mu.len(),
                vars: num_vars,
            });
        }
        let mut p = Self::zero(num_vars);
        p.add_term(mu, Rat::one());
        Ok(p)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, mu: &Partition) -> Rat {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, mu: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert!(mu.len() <= self.num_vars);
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(mu) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &SymmetricPolynomial) {
        debug_assert_eq!(self.num_vars, other.num_vars);
        for (mu, c) in &other.coeffs {
            self.add_term(mu.clone(), c.clone());
        }
    }

    pub fn scaled(&self, factor: &Rat) -> SymmetricPolynomial {
        if factor.is_zero() {
            return Self::zero(self.num_vars);
        }
        SymmetricPolynomial {
            num_vars: self.num_vars,
            coeffs: self
                .coeffs
                .iter()
                .map(|(mu, c)| (mu.clone(), c * factor))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SymmetricPolynomial) -> SymmetricPolynomial {
        let mut out = self.clone();
        for (mu, c) in &other.coeffs {
            out.add_term(mu.clone(), -c.clone());
        }
        out
    }

    /// Expand into explicit monomials (exponent vector of length num_vars).
    pub fn to_dense(&self) -> BTreeMap<Vec<u32>, Rat> {
        let mut out = BTreeMap::new();
        for (mu, c) in &self.coeffs {
            let mut padded = mu.parts().to_vec();
            padded.resize(self.num_vars, 0);
            for perm in distinct_permutations(&padded) {
                out.insert(perm, c.clone());
            }
        }
        out
    }

    /// Collect a dense symmetric expansion back into the m-basis by reading
    /// the non-increasing representative of each orbit.
    pub fn from_dense(num_vars: usize, dense: &BTreeMap<Vec<u32>, Rat>) -> SymmetricPolynomial {
        let mut p = Self::zero(num_vars);
        for (expo, c) in dense {
            if expo.windows(2).all(|w| w[0] >= w[1]) {
                p.add_term(Partition::new(expo.clone()), c.clone());
            }
        }
        p
    }

    pub fn mul(&self, other: &SymmetricPolynomial) -> SymmetricPolynomial {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let a = self.to_dense();
        let b = other.to_dense();
        let mut dense: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let expo: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = dense.entry(expo).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        dense.retain(|_, v| !v.is_zero());
        Self::from_dense(self.num_vars, &dense)
    }

    /// Exact evaluation at a point of length num_vars.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        let mut total = Rat::zero();
        for (mu, c) in &self.coeffs {
            let mut padded = mu.parts().to_vec();
            padded.resize(self.num_vars, 0);
            let mut msum = Rat::zero();
            for perm in distinct_permutations(&padded) {
                let mut term = Rat::one();
                for (x, &e) in point.iter().zip(&perm) {
                    term *= pow_rat(x, e);
                }
                msum += term;
            }
            total += c * msum;
        }
        Ok(total)
    }

    /// Substitute t_i → t_i + 1 in every variable and re-collect.
    pub fn shift_by_one(&self) -> SymmetricPolynomial {
        let dense = self.to_dense();
        let mut out: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (expo, c) in &dense {
            let mut choice = vec![0u32; expo.len()];
            loop {
                let mut coef = c.clone();
                for (i, &e) in expo.iter().enumerate() {
                    coef *= Rat::from_integer(num_integer::binomial(
                        num_bigint::BigInt::from(e),
                        num_bigint::BigInt::from(choice[i]),
                    ));
                }
                let entry = out.entry(choice.clone()).or_insert_with(Rat::zero);
                *entry += coef;
                // mixed-radix increment of `choice` bounded by `expo`
                let mut pos = 0;
                loop {
                    if pos == expo.len() {
                        break;
                    }
                    if choice[pos] < expo[pos] {
                        choice[pos] += 1;
                        break;
                    }
                    choice[pos] = 0;
                    pos += 1;
                }
                if pos == expo.len() {
                    break;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        Self::from_dense(self.num_vars, &out)
    }

    /// Restriction to fewer variables: delete keys longer than `new_vars`.
    pub fn restrict(&self, new_vars: usize) -> SymmetricPolynomial {
        SymmetricPolynomial {
            num_vars: new_vars,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(mu, _)| mu.len() <= new_vars)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }
}

fn pow_rat(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// All distinct permutations of a multiset of exponents.
pub fn distinct_permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &v in values {
        *counts.entry(v).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(values.len());
    fn rec(
        counts: &mut BTreeMap<u32, usize>,
        prefix: &mut Vec<u32>,
        total: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if prefix.len() == total {
            out.push(prefix.clone());
            return;
        }
        let keys: Vec<u32> = counts
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&k, _)| k)
            .collect();
        for k in keys {
            *counts.get_mut(&k).unwrap() -= 1;
            prefix.push(k);
            rec(counts, prefix, total, out);
            prefix.pop();
            *counts.get_mut(&k).unwrap() += 1;
        }
    }
    rec(&mut counts, &mut prefix, values.len(), &mut out);
    out
}

fn check_alpha(alpha: &Rat) -> Result<()> {
    if !is_positive(alpha) {
        return Err(Error::NonPositiveAlpha(alpha.to_string()));
    }
    Ok(())
}

/// Exact image of a symmetric polynomial under D(α).
pub fn apply_d(p: &SymmetricPolynomial, alpha: &Rat) -> Result<SymmetricPolynomial> {
    check_alpha(alpha)?;
    let m = p.num_vars();
    let dense = p.to_dense();
    let mut out: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
    let half_alpha = alpha / Rat::from_integer(2.into());
    let mut add = |expo: Vec<u32>, c: Rat| {
        if c.is_zero() {
            return;
        }
        let entry = out.entry(expo).or_insert_with(Rat::zero);
        *entry += c;
    };
    for (expo, c) in &dense {
        // (α/2) Σ_i t_i² ∂²/∂t_i² is diagonal on monomials.
        let second: u64 = expo.iter().map(|&e| e as u64 * (e as u64).saturating_sub(1)).sum();
        if second > 0 {
            add(
                expo.clone(),
                c * &half_alpha * Rat::from_integer(second.into()),
            );
        }
        // Pair terms. For exponents (a, b) on positions (i, j) with a > b:
        //   [a t^{π} + a t^{π·swap} + (a−b) Σ_{b<c<a} t^{π with (c, a+b−c)}]
        // is the exact polynomial value of the combined (i,j)+(j,i) terms on
        // the symmetrized orbit; the a < b member of the orbit is skipped.
        for i in 0..m {
            for j in (i + 1)..m {
                let a = expo[i];
                let b = expo[j];
                if a == b {
                    if a > 0 {
                        add(expo.clone(), c * Rat::from_integer(a.into()));
                    }
                } else if a > b {
                    add(expo.clone(), c * Rat::from_integer(a.into()));
                    let mut swapped = expo.clone();
                    swapped.swap(i, j);
                    add(swapped, c * Rat::from_integer(a.into()));
                    let gap = Rat::from_integer((a - b).into());
                    for cc in (b + 1)..a {
                        let mut mid = expo.clone();
                        mid[i] = cc;
                        mid[j] = a + b - cc;
                        add(mid, c * &gap);
                    }
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(SymmetricPolynomial::from_dense(m, &out))
}

/// Eigenvalue e_κ(α) = α Σ κ_i(κ_i−1)/2 − Σ (i−1)κ_i + (m−1)|κ|.
pub fn eigenvalue(kappa: &Partition, m: usize, alpha: &Rat) -> Result<Rat> {
    if kappa.len() > m {
        return Err(Error::LengthExceedsVars {
            length: kappa.len(),
            vars: m,
        });
    }
    let mut quad = Rat::zero();
    let mut linear = Rat::zero();
    for (idx, &part) in kappa.parts().iter().enumerate() {
        let k = part as i64;
        quad += Rat::from_integer((k * (k - 1) / 2).into());
        linear += Rat::from_integer((idx as i64 * k).into());
    }
    let grade = Rat::from_integer(((m as i64 - 1) * kappa.degree() as i64).into());
    Ok(alpha * quad - linear + grade)
}

type JackKey = (Partition, usize, Rat);
type JackCache = Mutex<HashMap<JackKey, Arc<SymmetricPolynomial>>>;

fn jack_cache() -> &'static JackCache {
    static CACHE: OnceLock<JackCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Jack polynomial J_κ(·;α) in `m` variables, J-normalized: the
/// coefficient of m_{1^{|κ|}} equals |κ|!.
///
/// When m < |κ| the all-ones monomial does not exist in m variables; the
/// polynomial is then built in |κ| variables, normalized, and restricted
/// (stability), with the eigen-identity re-checked after restriction.
pub fn jack(kappa: &Partition, m: usize, alpha: &Rat) -> Result<Arc<SymmetricPolynomial>> {
    check_alpha(alpha)?;
    if kappa.len() > m {
        return Err(Error::LengthExceedsVars {
            length: kappa.len(),
            vars: m,
        });
    }
    let key = (kappa.clone(), m, alpha.clone());
    if let Some(hit) = jack_cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let degree = kappa.degree();
    let poly = if (m as u64) < degree {
        let full = jack(kappa, degree as usize, alpha)?;
        let restricted = full.restrict(m);
        // Stability: the restriction must again satisfy the eigen-identity
        // with the m-variable eigenvalue.
        let expected = eigenvalue(kappa, m, alpha)?;
        let image = apply_d(&restricted, alpha)?;
        assert_eq!(
            image,
            restricted.scaled(&expected),
            "restriction of J_{kappa} to {m} variables lost the eigen-identity"
        );
        restricted
    } else {
        construct_jack(kappa, m, alpha)?
    };
    let arc = Arc::new(poly);
    jack_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert_with(|| arc.clone());
    Ok(arc)
}

fn construct_jack(kappa: &Partition, m: usize, alpha: &Rat) -> Result<SymmetricPolynomial> {
    let degree = kappa.degree();
    if degree == 0 {
        return Ok(SymmetricPolynomial::constant(Rat::one(), m));
    }
    // Basis: {m_μ : |μ| = |κ|, μ ⊴ κ, l(μ) ≤ m}, most dominant first.
    let basis: Vec<Partition> = enumerate_partitions(degree, m)
        .into_iter()
        .filter(|mu| mu.dominated_by(kappa))
        .collect();
    debug_assert_eq!(basis[0], *kappa);

    // Column μ: expansion of D(α) m_μ in the m-basis.
    let mut columns: HashMap<Partition, SymmetricPolynomial> = HashMap::new();
    for mu in &basis {
        let m_mu = SymmetricPolynomial::monomial(mu.clone(), m)?;
        columns.insert(mu.clone(), apply_d(&m_mu, alpha)?);
    }

    let e_kappa = eigenvalue(kappa, m, alpha)?;
    let mut x: HashMap<Partition, Rat> = HashMap::new();
    x.insert(kappa.clone(), Rat::one());
    for (idx, mu) in basis.iter().enumerate().skip(1) {
        let e_mu = eigenvalue(mu, m, alpha)?;
        let pivot = &e_kappa - &e_mu;
        assert!(
            is_positive(&pivot),
            "pivot safety violated: e_{kappa} - e_{mu} = {pivot} at alpha={alpha}"
        );
        let mut rhs = Rat::zero();
        for nu in &basis[..idx] {
            let contrib = columns[nu].coeff(mu);
            if !contrib.is_zero() {
                rhs += contrib * &x[nu];
            }
        }
        x.insert(mu.clone(), rhs / pivot);
    }

    // Normalize so the coefficient of m_{1^k} is k!.
    let ones = Partition::new(vec![1; degree as usize]);
    let c_ones = x
        .get(&ones)
        .cloned()
        .filter(|c| !c.is_zero())
        .expect("coefficient of the all-ones monomial must be nonzero");
    let scale = factorial(degree) / c_ones;

    let mut poly = SymmetricPolynomial::zero(m);
    for (mu, c) in x {
        poly.add_term(mu, c * &scale);
    }
    Ok(poly)
}

/// (Σ t_i)^k in `m` variables via the multinomial theorem.
pub fn trace_power(k: u64, m: usize) -> SymmetricPolynomial {
    let mut p = SymmetricPolynomial::zero(m);
    for mu in enumerate_partitions(k, m) {
        let mut denom = Rat::one();
        for &part in mu.parts() {
            denom *= factorial(part as u64);
        }
        p.add_term(mu, factorial(k) / denom);
    }
    p
}

/// J_κ(1^m; α): evaluation at the all-ones vector; strictly positive.
pub fn jack_at_ones(kappa: &Partition, m: usize, alpha: &Rat) -> Result<Rat> {
    let j = jack(kappa, m, alpha)?;
    let ones = vec![Rat::one(); m];
    let v = j.eval(&ones)?;
    debug_assert!(is_positive(&v));
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn alpha_grid() -> Vec<Rat> {
        vec![rat(2), rat(1), frac(1, 2), frac(2, 3), frac(1, 4)]
    }

    #[test]
    fn apply_d_on_first_power_sum() {
        for m in 1..=5 {
            for alpha in alpha_grid() {
                let m1 = SymmetricPolynomial::monomial(p(&[1]), m).unwrap();
                let image = apply_d(&m1, &alpha).unwrap();
                let expected = m1.scaled(&rat(m as i64 - 1));
                assert_eq!(image, expected, "m={m} alpha={alpha}");
            }
        }
    }

    #[test]
    fn apply_d_kills_constants() {
        let c = SymmetricPolynomial::constant(rat(7), 3);
        assert!(apply_d(&c, &rat(2)).unwrap().is_zero());
    }

    #[test]
    fn apply_d_on_the_quoted_jack_combination() {
        // p = 3 m_(2) + 2 m_(1,1) is J_(2)(·;2) in two variables; D p = 4 p.
        let mut jp = SymmetricPolynomial::zero(2);
        jp.add_term(p(&[2]), rat(3));
        jp.add_term(p(&[1, 1]), rat(2));
        let image = apply_d(&jp, &rat(2)).unwrap();
        assert_eq!(image, jp.scaled(&rat(4)));
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(eigenvalue(&p(&[2]), 2, &rat(2)).unwrap(), rat(4));
        assert_eq!(eigenvalue(&p(&[1, 1]), 2, &rat(2)).unwrap(), rat(1));
        assert_eq!(eigenvalue(&Partition::empty(), 5, &frac(1, 3)).unwrap(), rat(0));
    }

    #[test]
    fn jack_ground_truth_alpha_two() {
        let j2 = jack(&p(&[2]), 2, &rat(2)).unwrap();
        assert_eq!(j2.coeff(&p(&[2])), rat(3));
        assert_eq!(j2.coeff(&p(&[1, 1])), rat(2));
        assert_eq!(j2.coeffs().len(), 2);

        let j11 = jack(&p(&[1, 1]), 2, &rat(2)).unwrap();
        assert_eq!(j11.coeff(&p(&[1, 1])), rat(2));
        assert_eq!(j11.coeffs().len(), 1);
    }

    #[test]
    fn jack_degree_three_closed_forms() {
        // J_(3) = (1+α)(1+2α) m_3 + 3(1+α) m_21 + 6 m_111,
        // J_(2,1) = (2+α) m_21 + 6 m_111,  J_(1,1,1) = 6 m_111.
        for alpha in alpha_grid() {
            let one = rat(1);
            let j3 = jack(&p(&[3]), 3, &alpha).unwrap();
            assert_eq!(
                j3.coeff(&p(&[3])),
                (&one + &alpha) * (&one + rat(2) * &alpha)
            );
            assert_eq!(j3.coeff(&p(&[2, 1])), rat(3) * (&one + &alpha));
            assert_eq!(j3.coeff(&p(&[1, 1, 1])), rat(6));

            let j21 = jack(&p(&[2, 1]), 3, &alpha).unwrap();
            assert_eq!(j21.coeff(&p(&[2, 1])), rat(2) + &alpha);
            assert_eq!(j21.coeff(&p(&[1, 1, 1])), rat(6));
            assert_eq!(j21.coeff(&p(&[3])), rat(0));

            let j111 = jack(&p(&[1, 1, 1]), 3, &alpha).unwrap();
            assert_eq!(j111.coeff(&p(&[1, 1, 1])), rat(6));
            assert_eq!(j111.coeffs().len(), 1);
        }
    }

    #[test]
    fn jack_of_single_box_is_first_monomial() {
        for m in 1..=4 {
            for alpha in alpha_grid() {
                let j = jack(&p(&[1]), m, &alpha).unwrap();
                assert_eq!(j.coeff(&p(&[1])), rat(1));
                assert_eq!(j.coeffs().len(), 1);
            }
        }
    }

    #[test]
    fn eval_examples() {
        let pt = [rat(1), rat(1)];
        assert_eq!(
            jack(&p(&[1, 1]), 2, &rat(2)).unwrap().eval(&pt).unwrap(),
            rat(2)
        );
        assert_eq!(
            jack(&p(&[2]), 2, &rat(2)).unwrap().eval(&pt).unwrap(),
            rat(8)
        );
        let zero_pt = [rat(0), rat(0)];
        let mut q = SymmetricPolynomial::constant(frac(5, 3), 2);
        q.add_term(p(&[2]), rat(4));
        assert_eq!(q.eval(&zero_pt).unwrap(), frac(5, 3));
        assert!(matches!(
            q.eval(&[rat(1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn eigenfunction_identity_on_a_small_grid() {
        // The full |κ| ≤ 6, m ≤ 4 sweep lives in the acceptance suite.
        for alpha in alpha_grid() {
            for m in 1..=3usize {
                for degree in 0..=4u64 {
                    for kappa in enumerate_partitions(degree, m) {
                        let j = jack(&kappa, m, &alpha).unwrap();
                        let image = apply_d(&j, &alpha).unwrap();
                        let e = eigenvalue(&kappa, m, &alpha).unwrap();
                        assert_eq!(image, j.scaled(&e), "kappa={kappa} m={m} alpha={alpha}");
                    }
                }
            }
        }
    }

    #[test]
    fn jack_is_dominance_triangular_with_positive_coefficients() {
        for alpha in alpha_grid() {
            for kappa in enumerate_partitions(5, 3) {
                let j = jack(&kappa, 3, &alpha).unwrap();
                assert!(is_positive(&j.coeff(&kappa)));
                for (mu, c) in j.coeffs() {
                    assert!(mu.dominated_by(&kappa), "support outside dominance ideal");
                    assert!(is_positive(c), "negative monomial coefficient");
                }
            }
        }
    }

    #[test]
    fn single_variable_collapse() {
        // J_(k) in one variable is c·t^k, so J(t+1)/J(1) = (t+1)^k.
        for alpha in [rat(2), frac(1, 2)] {
            for k in 1..=6u32 {
                let j = jack(&p(&[k]), 1, &alpha).unwrap();
                assert_eq!(j.coeffs().len(), 1);
                let at_2 = j.eval(&[rat(2)]).unwrap();
                let at_1 = j.eval(&[rat(1)]).unwrap();
                // (1+1)^k = 2^k
                assert_eq!(at_2 / at_1, rat(1 << k));
            }
        }
    }

    #[test]
    fn length_exceeds_vars_is_an_error() {
        assert!(matches!(
            jack(&p(&[1, 1, 1]), 2, &rat(2)),
            Err(Error::LengthExceedsVars { .. })
        ));
    }

    #[test]
    fn trace_power_matches_repeated_multiplication() {
        for m in 1..=3usize {
            let t = SymmetricPolynomial::monomial(p(&[1]), m).unwrap();
            let mut acc = SymmetricPolynomial::constant(rat(1), m);
            for k in 0..=5u64 {
                assert_eq!(acc, trace_power(k, m), "k={k} m={m}");
                acc = acc.mul(&t);
            }
        }
    }

    #[test]
    fn shift_by_one_on_elementary_case() {
        // m_(1,1) = t1 t2 shifted: (t1+1)(t2+1) = m_(1,1) + m_(1) + 1.
        let e2 = SymmetricPolynomial::monomial(p(&[1, 1]), 2).unwrap();
        let shifted = e2.shift_by_one();
        assert_eq!(shifted.coeff(&p(&[1, 1])), rat(1));
        assert_eq!(shifted.coeff(&p(&[1])), rat(1));
        assert_eq!(shifted.coeff(&Partition::empty()), rat(1));
        assert_eq!(shifted.coeffs().len(), 3);
    }
}
