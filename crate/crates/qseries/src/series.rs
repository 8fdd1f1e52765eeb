//! Truncated formal power series with exact coefficients.
//!
//! A [`Series`] stores coefficients for q⁰..q^N; exponents beyond N are
//! undefined rather than zero, and every binary operation truncates to the
//! smaller of its operands' orders. Arithmetic is exact — the coefficient
//! ring is big integers or Gaussian integers, chosen through the [`Coeff`]
//! parameter. Mixing rings is a type error.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::gauss::GaussInt;

/// Coefficient rings usable in a series: exact, with recognizable units.
pub trait Coeff:
    Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    /// Multiplicative inverse, when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Coeff for BigInt {
    fn unit_inverse(&self) -> Option<Self> {
        let one = BigInt::one();
        (*self == one || *self == -&one).then(|| self.clone())
    }
}

impl Coeff for GaussInt {
    fn unit_inverse(&self) -> Option<Self> {
        GaussInt::unit_inverse(self)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot invert series: constant term {constant} is not a unit")]
pub struct NonUnitConstantTerm {
    pub constant: String,
}

/// Formal power series truncated at a fixed order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![C::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = C::one();
        s
    }

    /// Series with the given coefficients for q⁰.. ; order is len − 1.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the constant term");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of qⁿ; None beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: C) {
        assert!(n <= self.order(), "exponent {n} beyond order {}", self.order());
        self.coeffs[n] = c;
    }

    /// Copy truncated to a smaller order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order());
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// In-place multiplication by the sparse binomial 1 + c·q^e, exact at
    /// this order. Requires e ≥ 1.
    pub fn mul_binomial(&mut self, c: &C, e: usize) {
        assert!(e >= 1, "binomial exponent must be positive");
        if c.is_zero() {
            return;
        }
        for n in (e..=self.order()).rev() {
            let add = c.clone() * self.coeffs[n - e].clone();
            self.coeffs[n] = self.coeffs[n].clone() + add;
        }
    }

    /// In-place division by 1 + c·q^e: the inverse of [`Self::mul_binomial`].
    /// Exact because the binomial has unit constant term.
    pub fn div_binomial(&mut self, c: &C, e: usize) {
        assert!(e >= 1, "binomial exponent must be positive");
        if c.is_zero() {
            return;
        }
        for n in e..=self.order() {
            let sub = c.clone() * self.coeffs[n - e].clone();
            self.coeffs[n] = self.coeffs[n].clone() - sub;
        }
    }

    /// Multiplicative inverse at the same order. The constant term must be
    /// a unit of the coefficient ring.
    pub fn inverse(&self) -> Result<Self, NonUnitConstantTerm> {
        let lead = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| NonUnitConstantTerm { constant: self.coeffs[0].to_string() })?;
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = lead.clone();
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !inv.coeffs[n - k].is_zero() {
                    acc = acc + self.coeffs[k].clone() * inv.coeffs[n - k].clone();
                }
            }
            inv.coeffs[n] = -(lead.clone() * acc);
        }
        Ok(inv)
    }
}

impl<C: Coeff> Add for &Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].clone() + rhs.coeffs[n].clone())
            .collect();
        Series { coeffs }
    }
}

impl<C: Coeff> Sub for &Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].clone() - rhs.coeffs[n].clone())
            .collect();
        Series { coeffs }
    }
}

impl<C: Coeff> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        Series { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

/// Cauchy product, truncated at the smaller order.
impl<C: Coeff> Mul for &Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: &Series<C>) -> Series<C> {
        let order = self.order().min(rhs.order());
        let mut out = Series::<C>::zero(order);
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        out
    }
}

/// Coefficients that know their JSON form. Big integers serialize as
/// decimal strings so arbitrary precision survives; Gaussian integers as
/// {"re", "im"} string pairs.
pub trait JsonCoeff {
    fn to_json(&self) -> Value;
}

impl JsonCoeff for BigInt {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl JsonCoeff for GaussInt {
    fn to_json(&self) -> Value {
        json!({ "re": self.re.to_string(), "im": self.im.to_string() })
    }
}

impl<C: Coeff + JsonCoeff> Series<C> {
    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(JsonCoeff::to_json).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(values: &[i64]) -> Series<BigInt> {
        Series::from_coeffs(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn difference_of_squares() {
        let a = ints(&[1, 1, 0, 0, 0, 0]); // 1+q at order 5
        let b = ints(&[1, -1, 0, 0, 0, 0]); // 1−q
        assert_eq!(&a * &b, ints(&[1, 0, -1, 0, 0, 0]));
    }

    #[test]
    fn geometric_series_telescopes() {
        let geo = ints(&[1; 11]);
        let mut one_minus_q = Series::zero(10);
        one_minus_q.set_coeff(0, BigInt::from(1));
        one_minus_q.set_coeff(1, BigInt::from(-1));
        let mut expect = ints(&[0; 11]);
        expect.set_coeff(0, BigInt::from(1));
        assert_eq!(&geo * &one_minus_q, expect);
    }

    #[test]
    fn gaussian_conjugate_product() {
        // (1+iq)(1−iq) = 1+q² at order 4.
        let mut a = Series::<GaussInt>::one(4);
        a.set_coeff(1, GaussInt::i());
        let mut b = Series::<GaussInt>::one(4);
        b.set_coeff(1, -GaussInt::i());
        let mut expect = Series::<GaussInt>::one(4);
        expect.set_coeff(2, GaussInt::one());
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn product_order_is_the_minimum() {
        let a = ints(&[1, 2, 3, 4]);
        let b = ints(&[1, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a - &b).order(), 3);
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let mut s = Series::<BigInt>::one(6);
        s.set_coeff(1, BigInt::from(-1));
        assert_eq!(s.inverse().unwrap(), ints(&[1; 7]));
    }

    #[test]
    fn inverse_of_one_plus_q_cubed() {
        let mut s = Series::<BigInt>::one(7);
        s.set_coeff(3, BigInt::from(1));
        assert_eq!(s.inverse().unwrap(), ints(&[1, 0, 0, -1, 0, 0, 1, 0]));
    }

    #[test]
    fn inverse_of_one_is_one() {
        let one = Series::<BigInt>::one(5);
        assert_eq!(one.inverse().unwrap(), one);
    }

    #[test]
    fn inverse_rejects_non_unit_constant() {
        let err = ints(&[2, 1, 1]).inverse().unwrap_err();
        assert_eq!(err.constant, "2");
        assert!(ints(&[0, 1]).inverse().is_err());
        let mut g = Series::<GaussInt>::zero(2);
        g.set_coeff(0, GaussInt::from_i64(1, 1));
        assert_eq!(g.inverse().unwrap_err().constant, "1+i");
    }

    #[test]
    fn gaussian_unit_constant_inverts() {
        let mut s = Series::<GaussInt>::zero(4);
        s.set_coeff(0, GaussInt::i());
        s.set_coeff(1, GaussInt::one());
        let inv = s.inverse().unwrap();
        assert_eq!(&s * &inv, Series::one(4));
    }

    #[test]
    fn binomial_mul_and_div_are_mutually_inverse() {
        let mut s = ints(&[1, 4, -2, 7, 0, 3, 1, -5]);
        let original = s.clone();
        let c = BigInt::from(-3);
        s.mul_binomial(&c, 2);
        s.div_binomial(&c, 2);
        assert_eq!(s, original);
    }

    #[test]
    fn binomial_mul_matches_full_product() {
        let s = ints(&[2, -1, 3, 0, 5, 1]);
        let mut by_binomial = s.clone();
        by_binomial.mul_binomial(&BigInt::from(4), 3);
        let mut factor = Series::<BigInt>::one(5);
        factor.set_coeff(3, BigInt::from(4));
        assert_eq!(by_binomial, &s * &factor);
    }

    #[test]
    fn coeff_access_respects_truncation() {
        let s = ints(&[1, 2, 3]);
        assert_eq!(s.coeff(2), Some(&BigInt::from(3)));
        assert_eq!(s.coeff(3), None);
        assert_eq!(s.truncated(1), ints(&[1, 2]));
    }

    #[test]
    fn json_form() {
        let s = ints(&[1, -12]);
        assert_eq!(
            s.to_json().to_string(),
            r#"{"coeffs":["1","-12"],"order":1}"#
        );
        let mut g = Series::<GaussInt>::one(0);
        g.set_coeff(0, GaussInt::from_i64(0, -3));
        assert_eq!(g.to_json().to_string(), r#"{"coeffs":[{"im":"-3","re":"0"}],"order":0}"#);
    }

    mod laws {
        use super::*;
        use proptest::prelude::*;

        fn series_strategy() -> impl Strategy<Value = Series<BigInt>> {
            proptest::collection::vec(-6i64..=6, 1..=9)
                .prop_map(|v| Series::from_coeffs(v.into_iter().map(BigInt::from).collect()))
        }

        fn unit_series_strategy() -> impl Strategy<Value = Series<BigInt>> {
            (series_strategy(), proptest::bool::ANY).prop_map(|(mut s, flip)| {
                s.set_coeff(0, BigInt::from(if flip { -1 } else { 1 }));
                s
            })
        }

        proptest! {
            #[test]
            fn multiplication_is_associative(a in series_strategy(),
                                             b in series_strategy(),
                                             c in series_strategy()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            }

            #[test]
            fn multiplication_distributes(a in series_strategy(),
                                          b in series_strategy(),
                                          c in series_strategy()) {
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            }

            #[test]
            fn multiplication_commutes(a in series_strategy(), b in series_strategy()) {
                prop_assert_eq!(&a * &b, &b * &a);
            }

            #[test]
            fn inverse_is_a_right_inverse(a in unit_series_strategy()) {
                let inv = a.inverse().unwrap();
                prop_assert_eq!(&a * &inv, Series::one(a.order()));
            }
        }
    }
}
