//! Univariate truncated power series in `z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::{rat, Rat, SeriesError};

/// A truncated power series `c_0 + c_1 z + ... + c_N z^N + O(z^{N+1})`.
///
/// `coeffs.len() == order + 1` always holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Zero series of the given truncation order.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    /// Constant 1 of the given truncation order.
    pub fn one(order: usize) -> Self {
        Series::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Series::monomial(Rat::one(), 1, order)
    }

    /// `c * z^n` (zero if `n` exceeds the order).
    pub fn monomial(c: Rat, n: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    /// Build from explicit coefficients `c_0 .. c_N`; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least z^0");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Exact `z^n` coefficient.
    pub fn coeff(&self, n: usize) -> Result<&Rat, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::OutOfRange {
            index: n,
            order: self.order(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drop coefficients above `order` (or zero-pad when raising the order;
    /// the padded tail is only valid if the series is exact up there, so
    /// raising is restricted to polynomials the caller controls).
    pub fn truncate(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Rat::zero());
        Series { coeffs }
    }

    /// Multiply by `z^k`, keeping the truncation order.
    pub fn shift_up(&self, k: usize) -> Series {
        let order = self.order();
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            if n + k <= order {
                coeffs[n + k] = c.clone();
            }
        }
        Series { coeffs }
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn binary_order(&self, other: &Series) -> usize {
        self.order().min(other.order())
    }

    pub fn add_ref(&self, other: &Series) -> Series {
        let order = self.binary_order(other);
        Series {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &other.coeffs[n])
                .collect(),
        }
    }

    pub fn sub_ref(&self, other: &Series) -> Series {
        let order = self.binary_order(other);
        Series {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &other.coeffs[n])
                .collect(),
        }
    }

    pub fn neg_ref(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product truncated to the minimum order.
    pub fn mul_ref(&self, other: &Series) -> Series {
        let order = self.binary_order(other);
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }

    /// `self^k` at this series' order.
    pub fn pow(&self, k: usize) -> Series {
        let mut acc = Series::one(self.order());
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Exact division, valuation-aware: if the divisor has valuation `w`,
    /// the dividend must have valuation `>= w`; both are shifted down by `w`
    /// and the result has order `min(orders) - w`.
    pub fn div(&self, divisor: &Series) -> Result<Series, SeriesError> {
        let w = divisor
            .valuation()
            .ok_or(SeriesError::DivisionByZeroSeries)?;
        let order = self.binary_order(divisor);
        if w > order {
            return Err(SeriesError::DivisionByZeroSeries);
        }
        if let Some(va) = self.valuation() {
            if va < w {
                return Err(SeriesError::NonExactDivision(
                    "dividend valuation below divisor valuation",
                ));
            }
        }
        let out_order = order - w;
        let a = &self.coeffs[w..=order];
        let b = &divisor.coeffs[w..=order];
        let lead = &b[0];
        let mut q = vec![Rat::zero(); out_order + 1];
        for n in 0..=out_order {
            let mut acc = a.get(n).cloned().unwrap_or_else(Rat::zero);
            for j in 1..=n {
                if !b[j].is_zero() && !q[n - j].is_zero() {
                    acc -= &b[j] * &q[n - j];
                }
            }
            q[n] = acc / lead;
        }
        Ok(Series { coeffs: q })
    }

    /// Square root with constant term 1, by the term-by-term recurrence
    /// `s_n = (a_n - sum_{0<j<n} s_j s_{n-j}) / 2`.
    pub fn sqrt(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadConstantTerm(self.coeffs[0].to_string()));
        }
        let order = self.order();
        let two = rat(2);
        let mut s = vec![Rat::zero(); order + 1];
        s[0] = Rat::one();
        for n in 1..=order {
            let mut acc = self.coeffs[n].clone();
            for j in 1..n {
                acc -= &s[j] * &s[n - j];
            }
            s[n] = acc / &two;
        }
        Ok(Series { coeffs: s })
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

/// The unique series `v` with `v(0) = 0` solving `v = z (1 + 3v + v^2)`,
/// i.e. the inverse of the substitution `z = v / (1 + 3v + v^2)`.
///
/// Iterating the fixed point raises the correct order by one per step, so
/// `order` iterations suffice; the loop stops early once stable.
pub fn solve_v(order: usize) -> Series {
    assert!(order >= 1);
    let mut v = Series::zero(order);
    let three = rat(3);
    for _ in 0..=order {
        let rhs = Series::one(order)
            .add_ref(&v.scale(&three))
            .add_ref(&v.mul_ref(&v))
            .shift_up(1);
        if rhs == v {
            break;
        }
        v = rhs;
    }
    v
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.add_ref(rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.sub_ref(rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.mul_ref(rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.neg_ref()
    }
}

fn fmt_rat(c: &Rat) -> String {
    c.to_string()
}

impl fmt::Display for Series {
    /// Renders like `1 - 3*z - 2*z^2`; the zero series prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign_neg = c < &Rat::zero();
            if first {
                if sign_neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = n == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", fmt_rat(&mag))?;
            }
            if n > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if n == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{n}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
