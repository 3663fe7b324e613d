//! Truncated univariate power series with exact rational coefficients.
//!
//! Used for ordinary generating functions (counts of unlabeled structures)
//! and for exponential generating functions in normalized form, where the
//! coefficient of `x^n` is the labeled count divided by `n!`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::factorial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesRole {
    Ogf,
    /// EGF-normalized: the labeled count at size n is `n!` times the stored
    /// coefficient.
    Egf,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
    role: SeriesRole,
}

impl PowerSeries {
    pub fn zero(truncation: u32, role: SeriesRole) -> Self {
        PowerSeries {
            coeffs: vec![BigRational::zero(); truncation as usize + 1],
            role,
        }
    }

    pub fn one(truncation: u32, role: SeriesRole) -> Self {
        let mut s = PowerSeries::zero(truncation, role);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The monomial `x`.
    pub fn x(truncation: u32, role: SeriesRole) -> Self {
        let mut s = PowerSeries::zero(truncation, role);
        if truncation >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    pub fn from_coefficients(coeffs: Vec<BigRational>, role: SeriesRole) -> Self {
        assert!(!coeffs.is_empty());
        PowerSeries { coeffs, role }
    }

    pub fn role(&self) -> SeriesRole {
        self.role
    }

    pub fn truncation(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coefficient(&self, degree: u32) -> &BigRational {
        &self.coeffs[degree as usize]
    }

    pub fn set_coefficient(&mut self, degree: u32, value: BigRational) {
        self.coeffs[degree as usize] = value;
    }

    pub fn truncated(&self, truncation: u32) -> PowerSeries {
        assert!(truncation <= self.truncation());
        PowerSeries {
            coeffs: self.coeffs[..=truncation as usize].to_vec(),
            role: self.role,
        }
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.truncation().min(other.truncation());
        let coeffs = (0..=n as usize)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        PowerSeries { coeffs, role: self.role }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.truncation().min(other.truncation());
        let coeffs = (0..=n as usize)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        PowerSeries { coeffs, role: self.role }
    }

    pub fn scale(&self, scale: &BigRational) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * scale).collect(),
            role: self.role,
        }
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.truncation().min(other.truncation()) as usize;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !other.coeffs[j].is_zero() {
                    coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        PowerSeries { coeffs, role: self.role }
    }

    /// Substitutes `x -> x^k`, keeping the same truncation.
    pub fn substitute_power(&self, k: u32) -> PowerSeries {
        assert!(k >= 1);
        let n = self.truncation();
        let mut out = PowerSeries::zero(n, self.role);
        let mut d = 0u32;
        while d * k <= n {
            out.coeffs[(d * k) as usize] = self.coeffs[d as usize].clone();
            d += 1;
        }
        out
    }

    /// Formal derivative; the truncation drops by one.
    pub fn derivative(&self) -> PowerSeries {
        let n = self.truncation() as usize;
        let coeffs = (1..=n.max(1))
            .map(|i| {
                if i <= n {
                    &self.coeffs[i] * BigRational::from(BigInt::from(i))
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        PowerSeries { coeffs, role: self.role }
    }

    /// Antiderivative with zero constant term; the truncation rises by one.
    pub fn integral(&self) -> PowerSeries {
        let n = self.truncation() as usize;
        let mut coeffs = vec![BigRational::zero(); n + 2];
        for i in 0..=n {
            coeffs[i + 1] = &self.coeffs[i] / BigRational::from(BigInt::from(i + 1));
        }
        PowerSeries { coeffs, role: self.role }
    }

    /// Multiplication by `x`; the truncation rises by one.
    pub fn shifted_up(&self) -> PowerSeries {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] = c.clone();
        }
        PowerSeries { coeffs, role: self.role }
    }

    /// `log(self)`; requires constant term 1.
    pub fn log(&self) -> PowerSeries {
        assert!(self.coeffs[0].is_one(), "log requires constant term 1");
        let n = self.truncation() as usize;
        let mut out = vec![BigRational::zero(); n + 1];
        for d in 1..=n {
            let mut acc = &self.coeffs[d] * BigRational::from(BigInt::from(d));
            for j in 1..d {
                if !out[j].is_zero() && !self.coeffs[d - j].is_zero() {
                    acc -= &out[j] * BigRational::from(BigInt::from(j)) * &self.coeffs[d - j];
                }
            }
            out[d] = acc / BigRational::from(BigInt::from(d));
        }
        PowerSeries { coeffs: out, role: self.role }
    }

    /// `exp(self)`; requires constant term 0.
    pub fn exp(&self) -> PowerSeries {
        assert!(self.coeffs[0].is_zero(), "exp requires constant term 0");
        let n = self.truncation() as usize;
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = BigRational::one();
        for d in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=d {
                if !self.coeffs[j].is_zero() && !out[d - j].is_zero() {
                    acc += &self.coeffs[j] * BigRational::from(BigInt::from(j)) * &out[d - j];
                }
            }
            out[d] = acc / BigRational::from(BigInt::from(d));
        }
        PowerSeries { coeffs: out, role: self.role }
    }

    /// Composition `self(other)`; `other` must have zero constant term.
    pub fn compose(&self, other: &PowerSeries) -> PowerSeries {
        assert!(other.coeffs[0].is_zero(), "composition requires zero constant term");
        let n = self.truncation().min(other.truncation());
        let inner = other.truncated(n);
        let mut acc = PowerSeries::zero(n, self.role);
        for i in (0..=n as usize).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[i];
        }
        acc
    }

    /// Compositional inverse: the series `g` with `self(g) = x` and
    /// `g(self) = x`. Requires zero constant term and nonzero linear term.
    pub fn compositional_inverse(&self) -> PowerSeries {
        assert!(self.coeffs[0].is_zero(), "inverse requires zero constant term");
        let n = self.truncation();
        assert!(n >= 1 && !self.coeffs[1].is_zero(), "inverse requires nonzero linear term");
        let linear_inv = self.coeffs[1].recip();
        let mut inverse = PowerSeries::zero(n, self.role);
        inverse.coeffs[1] = linear_inv.clone();
        for d in 2..=n {
            let image = self.compose(&inverse);
            let excess = image.coeffs[d as usize].clone();
            inverse.coeffs[d as usize] = -excess * &linear_inv;
        }
        inverse
    }

    /// The coefficient as an exact integer, or an error if it is fractional.
    pub fn integer_coefficient(&self, degree: u32) -> Result<BigInt> {
        let c = &self.coeffs[degree as usize];
        if c.denom().is_one() {
            Ok(c.numer().clone())
        } else {
            Err(Error::NonIntegerCoefficient { degree: degree as usize })
        }
    }

    pub fn integer_coefficients(&self) -> Result<Vec<BigInt>> {
        (0..=self.truncation()).map(|d| self.integer_coefficient(d)).collect()
    }

    /// Labeled count at size n for an EGF-normalized series: `n!` times the
    /// coefficient, which must come out an integer.
    pub fn labeled_count(&self, n: u32) -> Result<BigInt> {
        let value = self.coeffs[n as usize].clone() * BigRational::from(factorial(n as u64));
        if value.denom().is_one() {
            Ok(value.numer().clone())
        } else {
            Err(Error::NonIntegerCoefficient { degree: n as usize })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}
