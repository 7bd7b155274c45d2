//! Dense polynomials in `t` over `Rat`, used as the coefficients of
//! [`BiSeries`](super::BiSeries). Coefficients are ascending in degree and
//! trailing zeros are trimmed, so the zero polynomial is the empty vector.

use num::{One, Zero};

use super::Rat;

/// A polynomial in `t`, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TPoly(Vec<Rat>);

impl TPoly {
    pub fn zero() -> Self {
        TPoly(Vec::new())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = TPoly(vec![c]);
        p.trim();
        p
    }

    /// `c * t^d`.
    pub fn monomial(c: Rat, d: usize) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        let mut v = vec![Rat::zero(); d + 1];
        v[d] = c;
        TPoly(v)
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = TPoly(coeffs);
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Coefficient of `t^d` (zero beyond the stored length).
    pub fn coeff(&self, d: usize) -> Rat {
        self.0.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn add(&self, other: &TPoly) -> TPoly {
        let mut out = vec![Rat::zero(); self.0.len().max(other.0.len())];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        TPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &TPoly) -> TPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TPoly {
        TPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly(self.0.iter().map(|a| a * c).collect())
    }

    /// Exact polynomial division; `None` if the remainder is nonzero or the
    /// divisor is zero.
    pub fn div_exact(&self, divisor: &TPoly) -> Option<TPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(TPoly::zero());
        }
        let dd = divisor.0.len() - 1;
        if self.0.len() - 1 < dd {
            return None;
        }
        let lead = &divisor.0[dd];
        let mut rem = self.0.clone();
        let mut quot = vec![Rat::zero(); self.0.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / lead;
            if !q.is_zero() {
                for (j, b) in divisor.0.iter().enumerate() {
                    rem[i + j] -= &q * b;
                }
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(TPoly::from_coeffs(quot))
    }

    /// Formal derivative with respect to `t`.
    pub fn derivative(&self) -> TPoly {
        if self.0.len() <= 1 {
            return TPoly::zero();
        }
        TPoly::from_coeffs(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer((i as i64 + 1).into()))
                .collect(),
        )
    }

    /// Evaluate at `t = t0`.
    pub fn eval(&self, t0: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * t0 + c;
        }
        acc
    }

    pub fn one() -> Self {
        TPoly(vec![Rat::one()])
    }
}
