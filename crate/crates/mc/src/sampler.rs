//! Sampling genuine non-central Wishart matrices for half-integer degrees on
//! the real matrix cone, standardized scale Σ = I/2.
//!
//! S = Σ_{j=1}^{2β} x_j x_jᵀ with x_j ~ N(μ_j, I/2) independent and
//! Σ_j μ_j μ_jᵀ = diag(ω); the empirical Laplace transform then converges to
//! det(I+u)^{−β} exp(−tr(Ω u (I+u)^{−1})).
//!
//! Reproducibility: one ChaCha8 stream per fixed-size chunk, keyed by
//! (seed, chunk index) through the generator's stream counter, so the batch
//! is bit-identical no matter how chunks are scheduled across threads.
//! Gaussian variates use rand_distr's ziggurat StandardNormal.

use num_traits::{Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use zonal_core::rational::rat_to_f64;
use zonal_core::Rat;

use crate::{McError, Result};

/// A reproducible batch of m×m symmetric PSD samples (row-major flat).
#[derive(Debug, Clone)]
pub struct SampleBatch {
    pub m: usize,
    pub count: usize,
    pub seed: u64,
    pub chunk_size: usize,
    pub samples: Vec<Vec<f64>>,
}

impl SampleBatch {
    /// Chunk boundaries used for all deterministic reductions over the batch.
    pub fn chunk_ranges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 0;
        while start < self.count {
            let end = (start + self.chunk_size).min(self.count);
            out.push((start, end));
            start = end;
        }
        out
    }
}

fn chunk_rng(seed: u64, chunk_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk_index);
    rng
}

pub fn sample_noncentral_wishart(
    m: usize,
    beta: &Rat,
    omega: &[Rat],
    count: usize,
    seed: u64,
    chunk_size: usize,
) -> Result<SampleBatch> {
    if omega.len() != m {
        return Err(McError::DimensionMismatch {
            expected: m,
            got: omega.len(),
        });
    }
    if omega.iter().any(|x| x.is_negative()) {
        return Err(McError::InvalidParams(
            "noncentrality eigenvalues must be nonnegative".into(),
        ));
    }
    if chunk_size == 0 || m == 0 {
        return Err(McError::InvalidParams("m and chunk_size must be positive".into()));
    }
    let two_beta = beta * Rat::from_integer(2.into());
    if !two_beta.is_integer() || two_beta <= Rat::zero() {
        return Err(McError::NonHalfInteger(beta.to_string()));
    }
    let degrees = two_beta
        .to_integer()
        .to_u64()
        .ok_or_else(|| McError::InvalidParams("2β too large".into()))?;
    let nonzero = omega.iter().filter(|x| !x.is_zero()).count();
    if nonzero as u64 > degrees {
        return Err(McError::RankExceedsDegrees {
            rank: nonzero,
            degrees,
        });
    }

    // One mean vector per nonzero entry of ω: the j-th Gaussian vector gets
    // mean sqrt(ω_c)·e_c for the j-th nonzero coordinate c, so that
    // Σ_j μ_j μ_jᵀ = diag(ω); remaining vectors are centered.
    let means: Vec<(usize, f64)> = omega
        .iter()
        .enumerate()
        .filter(|(_, w)| !w.is_zero())
        .map(|(c, w)| (c, rat_to_f64(w).sqrt()))
        .collect();

    let n_chunks = count.div_ceil(chunk_size);
    let sigma = std::f64::consts::FRAC_1_SQRT_2; // per-coordinate std for covariance I/2
    let mut chunks: Vec<Vec<Vec<f64>>> = Vec::with_capacity(n_chunks);
    (0..n_chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * chunk_size;
            let len = chunk_size.min(count - start);
            let mut rng = chunk_rng(seed, chunk as u64);
            let normal = StandardNormal;
            let mut out = Vec::with_capacity(len);
            let mut x = vec![0.0f64; m];
            for _ in 0..len {
                let mut s = vec![0.0f64; m * m];
                for j in 0..degrees as usize {
                    let mean = means.get(j).copied();
                    for (i, xi) in x.iter_mut().enumerate() {
                        let z: f64 = normal.sample(&mut rng);
                        let mu = match mean {
                            Some((c, scale)) if c == i => scale,
                            _ => 0.0,
                        };
                        *xi = mu + sigma * z;
                    }
                    for a in 0..m {
                        for b in a..m {
                            let v = x[a] * x[b];
                            s[a * m + b] += v;
                            if a != b {
                                s[b * m + a] += v;
                            }
                        }
                    }
                }
                out.push(s);
            }
            out
        })
        .collect_into_vec(&mut chunks);

    let samples: Vec<Vec<f64>> = chunks.into_iter().flatten().collect();
    let batch = SampleBatch {
        m,
        count,
        seed,
        chunk_size,
        samples,
    };
    assert_batch_psd(&batch);
    Ok(batch)
}

/// Every sample must pass a tolerant Cholesky (pivots ≥ −1e-12·scale).
fn assert_batch_psd(batch: &SampleBatch) {
    for (idx, s) in batch.samples.iter().enumerate() {
        assert!(
            is_psd_with_tolerance(s, batch.m),
            "sample {idx} failed the PSD check"
        );
    }
}

fn is_psd_with_tolerance(s: &[f64], m: usize) -> bool {
    let scale = (0..m).map(|i| s[i * m + i].abs()).fold(1.0f64, f64::max);
    let tol = 1e-12 * scale;
    // LDLᵀ without pivoting; PSD up to tolerance means no pivot below −tol.
    let mut a = s.to_vec();
    for k in 0..m {
        let pivot = a[k * m + k];
        if pivot < -tol {
            return false;
        }
        if pivot.abs() <= tol {
            continue;
        }
        for i in (k + 1)..m {
            let f = a[i * m + k] / pivot;
            for j in k..m {
                a[i * m + j] -= f * a[k * m + j];
            }
        }
    }
    true
}
