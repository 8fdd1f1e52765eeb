//! Bivariate series in (t, q), truncated by q-order.
//!
//! The coefficient of qⁿ is a polynomial in t of degree at most n — every
//! series built here counts partitions of n by a statistic bounded by n, so
//! row n is stored densely as n+1 integers. There is no independent
//! t-truncation; all identities are graded by q.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use seaweed_core::{for_each_partition, PartitionClass};

use crate::gauss::GaussInt;
use crate::series::Series;

/// A coefficient sits at t-exponent `t_exp`, q-exponent `q_exp` where the
/// two disagree mod 2, breaking the even/odd pairing the substitutions
/// rely on.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("parity structure violated: nonzero coefficient at t^{t_exp} q^{q_exp} (exponents must agree mod 2)")]
pub struct ParityViolation {
    pub t_exp: usize,
    pub q_exp: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariateSeries {
    /// rows[n][k] is the coefficient of t^k qⁿ; rows[n] has length n+1.
    rows: Vec<Vec<BigInt>>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries { rows: (0..=order).map(|n| vec![BigInt::ZERO; n + 1]).collect() }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.rows[0][0] = BigInt::from(1);
        s
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficient of t^k qⁿ.
    pub fn coeff(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }

    /// The t-polynomial attached to qⁿ, dense up to degree n.
    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    pub fn add_at(&mut self, n: usize, k: usize, delta: BigInt) {
        self.rows[n][k] += delta;
    }

    /// In-place multiplication by 1 + c·t^{t_exp}·q^{q_exp}.
    ///
    /// Requires q_exp ≥ 1 and t_exp ≤ q_exp so the t-degree bound
    /// deg ≤ n is preserved.
    pub fn mul_binomial(&mut self, c: &BigInt, t_exp: usize, q_exp: usize) {
        assert!(q_exp >= 1, "q exponent must be positive");
        assert!(t_exp <= q_exp, "t exponent may not exceed the q exponent");
        if c.is_zero() {
            return;
        }
        for n in (q_exp..=self.order()).rev() {
            let (lo, hi) = self.rows.split_at_mut(n);
            let src = &lo[n - q_exp];
            let dst = &mut hi[0];
            for (k, v) in src.iter().enumerate() {
                if !v.is_zero() {
                    dst[k + t_exp] += c * v;
                }
            }
        }
    }

    /// In-place division by 1 + c·t^{t_exp}·q^{q_exp}; exact inverse of
    /// [`Self::mul_binomial`].
    pub fn div_binomial(&mut self, c: &BigInt, t_exp: usize, q_exp: usize) {
        assert!(q_exp >= 1, "q exponent must be positive");
        assert!(t_exp <= q_exp, "t exponent may not exceed the q exponent");
        if c.is_zero() {
            return;
        }
        for n in q_exp..=self.order() {
            let (lo, hi) = self.rows.split_at_mut(n);
            let src = &lo[n - q_exp];
            let dst = &mut hi[0];
            for k in 0..src.len() {
                if !src[k].is_zero() {
                    let sub = c * &src[k];
                    dst[k + t_exp] -= sub;
                }
            }
        }
    }

    fn check_parity(&self) -> Result<(), ParityViolation> {
        for (n, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                if !v.is_zero() && (n + k) % 2 != 0 {
                    return Err(ParityViolation { t_exp: k, q_exp: n });
                }
            }
        }
        Ok(())
    }

    /// Evaluates at t = i, q ↦ −i·q, exactly over Gaussian integers: the
    /// coefficient of qⁿ becomes Σ_k f(k,n)·i^k·(−i)^n.
    ///
    /// Rejects series whose nonzero coefficients do not satisfy
    /// k ≡ n (mod 2); under that structure the result is real whenever the
    /// underlying counts obey the residue-difference laws, which callers
    /// assert.
    pub fn eval_i_neg_iq(&self) -> Result<Series<GaussInt>, ParityViolation> {
        self.check_parity()?;
        let mut out = Series::zero(self.order());
        for (n, row) in self.rows.iter().enumerate() {
            let mut acc = GaussInt::zero();
            for (k, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    acc = acc + GaussInt::i_power(k as u64) * GaussInt::from(v.clone());
                }
            }
            out.set_coeff(n, GaussInt::neg_i_power(n as u64) * acc);
        }
        Ok(out)
    }

    /// Moves the coefficient of t^j qⁿ to t^{(n−j)/2} qⁿ — the substitution
    /// t ↦ t^{−1/2}, q ↦ t^{1/2}q carried out as an integral exponent
    /// remap. Requires the k ≡ n (mod 2) parity structure, which makes
    /// every new exponent a nonnegative integer.
    pub fn remap_t_half_gap(&self) -> Result<BivariateSeries, ParityViolation> {
        self.check_parity()?;
        let mut out = Self::zero(self.order());
        for (n, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    out.rows[n][(n - j) / 2] = v.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "coeffs": self
                .rows
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Generating function of a partition class by odd-part count and weight:
/// the coefficient of t^k qⁿ counts the partitions of n in `class` with
/// exactly k odd parts, found by exhaustive enumeration of every weight up
/// to `order`.
pub fn partition_class_gf(class: &PartitionClass, order: usize) -> BivariateSeries {
    let mut gf = BivariateSeries::zero(order);
    for n in 0..=order {
        for_each_partition(n as u64, class, |_, odd| {
            gf.rows[n][odd as usize] += 1;
        });
    }
    gf
}
