//! The one-variable Alexander polynomial `det(tS - S^T)`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactnum::{IntPolynomial, Rational, RationalPolynomial};
use crate::matrix::Matrix;
use crate::seifert::SeifertMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderPolynomial {
    /// `det(tS - S^T)` exactly as computed.
    pub poly: IntPolynomial,
    /// `poly` with the factor `t^k` removed and a positive leading coefficient.
    pub normalized: IntPolynomial,
    /// Largest `m` with `(t-1)^m | normalized`.
    pub t1_multiplicity: usize,
    pub is_zero: bool,
}

impl AlexanderPolynomial {
    pub fn from_poly(poly: IntPolynomial) -> Self {
        if poly.is_zero() {
            return Self {
                poly,
                normalized: IntPolynomial::zero(),
                t1_multiplicity: 0,
                is_zero: true,
            };
        }
        let (_, mut normalized) = poly.strip_t_power();
        if normalized
            .leading_coefficient()
            .is_some_and(Signed::is_negative)
        {
            normalized = -normalized;
        }
        let (t1_multiplicity, _) = normalized.root_multiplicity(1);
        Self {
            poly,
            normalized,
            t1_multiplicity,
            is_zero: false,
        }
    }

    /// `normalized / (t-1)^m`.
    pub fn t1_cofactor(&self) -> IntPolynomial {
        self.normalized.root_multiplicity(1).1
    }

    /// Human-readable factored form, e.g. `(t-1)^3` or `(t-1)*(3t^2 - 4t + 3)`.
    pub fn display(&self) -> String {
        if self.is_zero {
            return "0".to_string();
        }
        let cof = self.t1_cofactor();
        let mut parts = Vec::new();
        match self.t1_multiplicity {
            0 => {}
            1 => parts.push("(t-1)".to_string()),
            m => parts.push(format!("(t-1)^{m}")),
        }
        if cof != IntPolynomial::one() || parts.is_empty() {
            if cof.degree() == Some(0) {
                parts.insert(0, cof.to_string());
            } else {
                parts.push(format!("({cof})"));
            }
        }
        parts.join("*")
    }
}

/// `det(tS - S^T)` by evaluating `det(kS - S^T)` at `k = 0, ..., n` with
/// fraction-free elimination and interpolating exactly.
pub fn alexander_poly(s: &SeifertMatrix) -> AlexanderPolynomial {
    let n = s.dim();
    let e = s.entries();
    let et = e.transpose();
    let samples: Vec<(BigInt, BigInt)> = (0..=n as i64)
        .map(|k| {
            let k = BigInt::from(k);
            let m = Matrix::from_fn(n, n, |i, j| &k * &e[(i, j)] - &et[(i, j)]);
            (k, m.determinant())
        })
        .collect();
    let poly = interpolate(&samples)
        .to_integer_poly()
        .expect("determinant of an integer pencil has integer coefficients");
    AlexanderPolynomial::from_poly(poly)
}

/// Newton divided differences through the given points.
fn interpolate(points: &[(BigInt, BigInt)]) -> RationalPolynomial {
    let xs: Vec<Rational> = points
        .iter()
        .map(|(x, _)| Rational::from_integer(x.clone()))
        .collect();
    let mut dd: Vec<Rational> = points
        .iter()
        .map(|(_, y)| Rational::from_integer(y.clone()))
        .collect();
    let n = dd.len();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = RationalPolynomial::zero();
    for i in (0..n).rev() {
        let lin = RationalPolynomial::new(vec![-&xs[i], Rational::from_integer(1.into())]);
        acc = &(&acc * &lin) + &RationalPolynomial::constant(dd[i].clone());
    }
    acc
}

/// Nonzero `Δ` and `(t-1)^r ∤ Δ`.
pub fn hypothesis_holds(a: &AlexanderPolynomial, r: usize) -> bool {
    !a.is_zero && a.t1_multiplicity < r
}

impl AlexanderPolynomial {
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.poly.eval(t)
    }

    pub fn vanishes_at_minus_one(&self) -> bool {
        !self.is_zero && self.normalized.eval(&BigInt::from(-1)).is_zero()
    }
}
