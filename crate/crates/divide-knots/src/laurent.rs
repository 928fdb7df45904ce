//! Laurent polynomials in one variable over the integers, with the exact
//! division and determinant support the Alexander computations need.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("coefficient does not fit in i64")]
    CoefficientOverflow,
}

/// A Laurent polynomial `sum coef[i] * t^(lo + i)`; `coef` is empty exactly
/// for zero and otherwise has nonzero first and last entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    lo: i64,
    coef: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            lo: 0,
            coef: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(0, c)
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    pub fn monomial(degree: i64, c: i64) -> Self {
        if c == 0 {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            lo: degree,
            coef: vec![BigInt::from(c)],
        }
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: i64) -> Self {
        assert!(n > 0);
        let mut coef = vec![BigInt::zero(); n as usize + 1];
        coef[0] = BigInt::from(-1);
        coef[n as usize] = BigInt::one();
        LaurentPoly { lo: 0, coef }
    }

    pub fn from_coeffs(lo: i64, coef: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { lo, coef };
        p.trim();
        p
    }

    pub fn from_i64_coeffs(lo: i64, coef: &[i64]) -> Self {
        LaurentPoly::from_coeffs(lo, coef.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coef.last().is_some_and(|c| c.is_zero()) {
            self.coef.pop();
        }
        let leading_zeros = self.coef.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros > 0 {
            self.coef.drain(..leading_zeros);
            self.lo += leading_zeros as i64;
        }
        if self.coef.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_empty()
    }

    pub fn lo(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo)
    }

    pub fn hi(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo + self.coef.len() as i64 - 1)
    }

    /// Difference between the highest and lowest degree (zero for constants
    /// and for the zero polynomial).
    pub fn span(&self) -> i64 {
        self.coef.len().saturating_sub(1) as i64
    }

    pub fn coeff(&self, degree: i64) -> BigInt {
        let i = degree - self.lo;
        if i < 0 || i >= self.coef.len() as i64 {
            BigInt::zero()
        } else {
            self.coef[i as usize].clone()
        }
    }

    pub fn coeffs(&self) -> (i64, &[BigInt]) {
        (self.lo, &self.coef)
    }

    /// Multiply by `t^k`.
    pub fn shifted(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            lo: self.lo + k,
            coef: self.coef.clone(),
        }
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coef.iter().rev() {
            acc = acc * &x + c;
        }
        // Laurent part: multiply by x^lo; only meaningful when lo >= 0 or
        // x is a unit, which covers the +-1 evaluations used here.
        if self.lo >= 0 {
            acc * x.pow(self.lo as u32)
        } else {
            assert!(
                x.clone().abs().is_one(),
                "cannot evaluate a negative power at {x}"
            );
            acc * x.pow(self.lo.unsigned_abs() as u32)
        }
    }

    /// Exact division, failing when the divisor does not divide evenly.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if self.coef.len() < divisor.coef.len() {
            return Err(LaurentError::InexactDivision);
        }
        let mut rem = self.coef.clone();
        let d = &divisor.coef;
        let dn = d.len();
        let lead = &d[dn - 1];
        let qlen = rem.len() - dn + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for qi in (0..qlen).rev() {
            let top = rem[qi + dn - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return Err(LaurentError::InexactDivision);
            }
            for (j, dj) in d.iter().enumerate() {
                let sub = dj * &c;
                rem[qi + j] -= sub;
            }
            q[qi] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(LaurentError::InexactDivision);
        }
        Ok(LaurentPoly::from_coeffs(self.lo - divisor.lo, q))
    }

    /// Shift to lowest degree zero and make the constant term positive.
    pub fn normalized(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut p = LaurentPoly {
            lo: 0,
            coef: self.coef.clone(),
        };
        if p.coef[0].is_negative() {
            for c in &mut p.coef {
                *c = -std::mem::take(c);
            }
        }
        p
    }

    /// Whether the coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coef.len();
        (0..n / 2).all(|i| self.coef[i] == self.coef[n - 1 - i])
    }

    /// Whether the coefficient sequence negates under reversal.
    pub fn is_anti_palindromic(&self) -> bool {
        let n = self.coef.len();
        (0..n.div_ceil(2)).all(|i| self.coef[i] == -(&self.coef[n - 1 - i]))
    }

    /// The `(lo, coefficients)` pair with `i64` coefficients, for
    /// serialization; fails on overflow.
    pub fn to_i64_parts(&self) -> Result<(i64, Vec<i64>), LaurentError> {
        let mut out = Vec::with_capacity(self.coef.len());
        for c in &self.coef {
            out.push(
                i64::try_from(c.clone()).map_err(|_| LaurentError::CoefficientOverflow)?,
            );
        }
        Ok((self.lo, out))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coef.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let deg = self.lo + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || deg == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "{}t", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}t^{deg}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(rhs.lo);
        let hi = (self.lo + self.coef.len() as i64).max(rhs.lo + rhs.coef.len() as i64);
        let mut coef = vec![BigInt::zero(); (hi - lo) as usize];
        for (i, c) in self.coef.iter().enumerate() {
            coef[(self.lo - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coef.iter().enumerate() {
            coef[(rhs.lo - lo) as usize + i] += c;
        }
        LaurentPoly::from_coeffs(lo, coef)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            lo: self.lo,
            coef: self.coef.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coef = vec![BigInt::zero(); self.coef.len() + rhs.coef.len() - 1];
        for (i, a) in self.coef.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coef.iter().enumerate() {
                coef[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.lo + rhs.lo, coef)
    }
}

/// Fraction-free Bareiss determinant of a square matrix of Laurent
/// polynomials. Intermediate entries are exact minors, so every interior
/// division is exact.
pub fn laurent_det(mut m: Vec<Vec<LaurentPoly>>) -> Result<LaurentPoly, LaurentError> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(LaurentPoly::zero());
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign < 0 { -&det } else { det })
}
