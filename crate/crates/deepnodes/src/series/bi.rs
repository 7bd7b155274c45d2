//! Bivariate truncated power series in `(z, t)`.
//!
//! The `z^n` coefficient is a polynomial in `t`. For series with
//! combinatorial meaning the `t`-degree of the `z^n` coefficient is at most
//! `n`; intermediates of the kernel algebra (the quantity `R` and its
//! binomial powers) legitimately exceed that bound, so the cap is checked
//! with [`BiSeries::check_t_cap`] at the points where a series is claimed
//! to count trees, rather than enforced structurally on every value.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{Signed, Zero};

use super::{Rat, Series, SeriesError, TPoly};

/// Truncated series `sum_n c_n(t) z^n + O(z^{N+1})` with polynomial
/// `t`-coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    coeffs: Vec<TPoly>,
}

impl BiSeries {
    pub fn zero(order: usize) -> Self {
        BiSeries {
            coeffs: vec![TPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = BiSeries::zero(order);
        s.coeffs[0] = TPoly::one();
        s
    }

    /// Embed a univariate series as a `t`-free bivariate one.
    pub fn from_series(s: &Series) -> Self {
        BiSeries {
            coeffs: s
                .coeffs()
                .iter()
                .map(|c| TPoly::constant(c.clone()))
                .collect(),
        }
    }

    /// `c * t^td * z^zn`.
    pub fn monomial(c: Rat, zn: usize, td: usize, order: usize) -> Self {
        let mut s = BiSeries::zero(order);
        if zn <= order {
            s.coeffs[zn] = TPoly::monomial(c, td);
        }
        s
    }

    /// The series `z*t`.
    pub fn zt(order: usize) -> Self {
        BiSeries::monomial(Rat::from_integer(1.into()), 1, 1, order)
    }

    pub fn from_coeffs(coeffs: Vec<TPoly>) -> Self {
        assert!(!coeffs.is_empty());
        BiSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Exact `z^n` coefficient polynomial.
    pub fn coeff(&self, n: usize) -> Result<&TPoly, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::OutOfRange {
            index: n,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(TPoly::is_zero)
    }

    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Verify the combinatorial bound: `t`-degree of the `z^n` coefficient
    /// is at most `n`.
    pub fn check_t_cap(&self) -> Result<(), SeriesError> {
        for (n, c) in self.coeffs.iter().enumerate() {
            if let Some(d) = c.degree() {
                if d > n {
                    return Err(SeriesError::TDegreeOverflow {
                        z_power: n,
                        degree: d,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn truncate(&self, order: usize) -> BiSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, TPoly::zero());
        BiSeries { coeffs }
    }

    /// Multiply by `z^k`, keeping the truncation order.
    pub fn shift_up(&self, k: usize) -> BiSeries {
        let order = self.order();
        let mut coeffs = vec![TPoly::zero(); order + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            if n + k <= order {
                coeffs[n + k] = c.clone();
            }
        }
        BiSeries { coeffs }
    }

    pub fn scale(&self, c: &Rat) -> BiSeries {
        BiSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    fn binary_order(&self, other: &BiSeries) -> usize {
        self.order().min(other.order())
    }

    pub fn add_ref(&self, other: &BiSeries) -> BiSeries {
        let order = self.binary_order(other);
        BiSeries {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n].add(&other.coeffs[n]))
                .collect(),
        }
    }

    pub fn sub_ref(&self, other: &BiSeries) -> BiSeries {
        let order = self.binary_order(other);
        BiSeries {
            coeffs: (0..=order)
                .map(|n| self.coeffs[n].sub(&other.coeffs[n]))
                .collect(),
        }
    }

    pub fn neg_ref(&self) -> BiSeries {
        BiSeries {
            coeffs: self.coeffs.iter().map(TPoly::neg).collect(),
        }
    }

    /// Cauchy product in `z`, polynomial product in `t`, truncated to the
    /// minimum order.
    pub fn mul_ref(&self, other: &BiSeries) -> BiSeries {
        let order = self.binary_order(other);
        let mut coeffs = vec![TPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        BiSeries { coeffs }
    }

    pub fn pow(&self, k: usize) -> BiSeries {
        let mut acc = BiSeries::one(self.order());
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Exact valuation-aware division; the divisor's leading `z`-coefficient
    /// must divide exactly at every step (for the divisors arising here it
    /// is a nonzero constant).
    pub fn div(&self, divisor: &BiSeries) -> Result<BiSeries, SeriesError> {
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
        let mut q = vec![TPoly::zero(); out_order + 1];
        for n in 0..=out_order {
            let mut acc = a.get(n).cloned().unwrap_or_default();
            for j in 1..=n {
                if !b[j].is_zero() && !q[n - j].is_zero() {
                    acc = acc.sub(&b[j].mul(&q[n - j]));
                }
            }
            q[n] = acc.div_exact(lead).ok_or(SeriesError::NonExactDivision(
                "leading t-polynomial does not divide a coefficient",
            ))?;
        }
        Ok(BiSeries { coeffs: q })
    }

    /// Multiply by `t` (raise every coefficient's degree by one).
    pub fn mul_t(&self) -> BiSeries {
        BiSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|p| p.mul(&TPoly::monomial(num::One::one(), 1)))
                .collect(),
        }
    }

    /// Per-coefficient polynomial derivative in `t`.
    pub fn d_dt(&self) -> BiSeries {
        BiSeries {
            coeffs: self.coeffs.iter().map(TPoly::derivative).collect(),
        }
    }

    /// Substitute `t := t0`, collapsing to a univariate series.
    pub fn eval_t(&self, t0: &Rat) -> Series {
        Series::from_coeffs(self.coeffs.iter().map(|p| p.eval(t0)).collect())
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &BiSeries) -> BiSeries {
        self.add_ref(rhs)
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;
    fn sub(self, rhs: &BiSeries) -> BiSeries {
        self.sub_ref(rhs)
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &BiSeries) -> BiSeries {
        self.mul_ref(rhs)
    }
}

impl Neg for &BiSeries {
    type Output = BiSeries;
    fn neg(self) -> BiSeries {
        self.neg_ref()
    }
}

fn fmt_tpoly(p: &TPoly) -> String {
    let mut out = String::new();
    for (d, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let neg = c < &Rat::zero();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let show_coeff = d == 0 || mag != Rat::from_integer(1.into());
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        if d > 0 {
            if show_coeff {
                out.push('*');
            }
            out.push('t');
            if d > 1 {
                out.push_str(&format!("^{d}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for BiSeries {
    /// Renders like `z + (6 + 4*t)*z^4`; pure monomial coefficients print
    /// without parentheses, e.g. `t^2*z^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let body = fmt_tpoly(p);
            let single_term = p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
                && !body.starts_with('-');
            if n == 0 {
                if single_term {
                    write!(f, "{body}")?;
                } else {
                    write!(f, "({body})")?;
                }
            } else {
                let zpow = if n == 1 {
                    "z".to_string()
                } else {
                    format!("z^{n}")
                };
                if body == "1" {
                    write!(f, "{zpow}")?;
                } else if single_term {
                    write!(f, "{body}*{zpow}")?;
                } else {
                    write!(f, "({body})*{zpow}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
