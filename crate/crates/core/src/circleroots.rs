//! Roots of integer polynomials on the unit circle.
//!
//! A root `e^{iθ}` with `θ ∉ {0, π}` comes with its conjugate and is
//! tracked through `x = t + 1/t = 2cos θ ∈ (-2, 2)`. The upper semicircle is
//! parametrized by `x` decreasing from 2 (at `z = 1`) to -2 (at `z = -1`).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{
    isolate_real_roots, poly_gcd, poly_reverse, refine_root, sturm_count, GaussianRational,
    IntPolynomial, Rational, RationalPolynomial,
};
use crate::{Error, Result};

/// Isolated unit-circle roots of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleRootSet {
    /// Squarefree; its real roots in `(-2, 2)` are the `x`-images of the
    /// non-real unit-circle roots.
    pub x_poly: RationalPolynomial,
    /// Isolating intervals in increasing order, disjoint, inside `[-2, 2]`.
    pub x_intervals: Vec<(Rational, Rational)>,
    /// Multiplicity of each isolated root in the original polynomial.
    pub x_multiplicities: Vec<usize>,
    pub root_at_1: usize,
    pub root_at_minus1: usize,
    /// Power of `t` stripped before the analysis.
    pub t_power: usize,
    /// Degree of the input polynomial.
    pub degree: usize,
}

impl CircleRootSet {
    /// Total number of unit-circle roots with multiplicity.
    pub fn circle_root_count(&self) -> usize {
        2 * self.x_multiplicities.iter().sum::<usize>() + self.root_at_1 + self.root_at_minus1
    }

    /// Shrinks the isolating intervals so that adjacent ones, and the
    /// boundary points `±2`, are strictly separated.
    fn separate(&mut self) {
        let two = Rational::from_integer(BigInt::from(2));
        let neg_two = -two.clone();
        loop {
            let n = self.x_intervals.len();
            let mut touching = vec![false; n];
            for (k, (lo, hi)) in self.x_intervals.iter().enumerate() {
                let left = if k == 0 {
                    &neg_two
                } else {
                    &self.x_intervals[k - 1].1
                };
                let right = if k + 1 == n {
                    &two
                } else {
                    &self.x_intervals[k + 1].0
                };
                if lo <= left || hi >= right {
                    touching[k] = true;
                }
            }
            if !touching.contains(&true) {
                return;
            }
            for (k, t) in touching.into_iter().enumerate() {
                if t {
                    let (lo, hi) = &self.x_intervals[k];
                    let half = (hi - lo) / &two;
                    self.x_intervals[k] = refine_root(&self.x_poly, lo, hi, &half);
                }
            }
        }
    }
}

/// Writes a palindromic polynomial of even degree `2m` as `t^m h(t + 1/t)`
/// and returns `h`.
fn palindromic_to_x(g: &IntPolynomial) -> RationalPolynomial {
    let c = g.coefficients();
    let m = (c.len() - 1) / 2;
    // t^k + t^-k = P_k(x) with P_0 = 2, P_1 = x, P_k = x P_{k-1} - P_{k-2}
    let x = RationalPolynomial::x();
    let mut prev = RationalPolynomial::from_i64(&[2]);
    let mut cur = x.clone();
    let mut h = RationalPolynomial::constant(Rational::from_integer(c[m].clone()));
    for k in 1..=m {
        let term = cur.scale(&Rational::from_integer(c[m + k].clone()));
        h = &h + &term;
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    h
}

/// Certified isolation of the unit-circle roots of `p`.
pub fn unit_circle_roots(p: &IntPolynomial) -> Result<CircleRootSet> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = p.degree().unwrap();
    let (t_power, q) = p.strip_t_power();
    let (root_at_1, q) = q.root_multiplicity(1);
    let (root_at_minus1, q) = q.root_multiplicity(-1);

    // every unit-circle root ζ of q has 1/ζ = ζ̄ as a root of the same
    // multiplicity, so it is a root of the reverse as well
    let g = poly_gcd(&q, &poly_reverse(&q));
    let rev = poly_reverse(&g);
    // g(±1) ≠ 0, so g is palindromic of even degree
    debug_assert!(rev == g || rev == -g.clone());
    debug_assert!(g.degree().unwrap_or(0).is_multiple_of(2));
    let h = palindromic_to_x(&g);

    let two = Rational::from_integer(BigInt::from(2));
    let neg_two = -two.clone();
    let x_poly = h.squarefree_part();
    let (x_intervals, x_multiplicities) = if x_poly.degree().unwrap_or(0) == 0 {
        (Vec::new(), Vec::new())
    } else {
        let iv = isolate_real_roots(&x_poly, &neg_two, &two)?;
        let factors = h.squarefree_decomposition();
        let mult = iv
            .iter()
            .map(|(lo, hi)| {
                factors
                    .iter()
                    .position(|f| f.degree().unwrap_or(0) > 0 && sturm_count(f, lo, hi) == Ok(1))
                    .map(|i| i + 1)
                    .expect("every isolated root lies in one squarefree factor")
            })
            .collect();
        (iv, mult)
    };
    let mut set = CircleRootSet {
        x_poly,
        x_intervals,
        x_multiplicities,
        root_at_1,
        root_at_minus1,
        t_power,
        degree,
    };
    set.separate();
    Ok(set)
}

/// An open arc of the upper semicircle free of roots. `sample_z` lies
/// strictly inside, with `2·Re(sample_z) ∈ (lower_x, upper_x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleArc {
    pub lower_x: Rational,
    pub upper_x: Rational,
    pub sample_z: GaussianRational,
}

impl CircleArc {
    /// Whether the arc reaches `z = 1`.
    pub fn touches_one(&self) -> bool {
        self.upper_x == Rational::from_integer(BigInt::from(2))
    }

    /// Whether the arc reaches `z = -1`.
    pub fn touches_minus_one(&self) -> bool {
        self.lower_x == Rational::from_integer(BigInt::from(-2))
    }

    /// A second sample point in the same arc, distinct from `sample_z`.
    pub fn alternate_sample(&self) -> GaussianRational {
        alternate_point_in_arc(&self.lower_x, &self.upper_x).expect("arc windows are non-empty")
    }
}

/// Root-free windows of the upper semicircle, ordered from `z = 1`
/// (`x = 2`) towards `z = -1` (`x = -2`).
pub fn arcs(roots: &CircleRootSet) -> Vec<CircleArc> {
    let two = Rational::from_integer(BigInt::from(2));
    let mut bounds = vec![two.clone()];
    for (lo, hi) in roots.x_intervals.iter().rev() {
        bounds.push(hi.clone());
        bounds.push(lo.clone());
    }
    bounds.push(-two);
    bounds
        .chunks(2)
        .map(|w| {
            let (upper_x, lower_x) = (w[0].clone(), w[1].clone());
            let sample_z =
                rational_point_in_arc(&lower_x, &upper_x).expect("arc windows are non-empty");
            CircleArc {
                lower_x,
                upper_x,
                sample_z,
            }
        })
        .collect()
}

/// `u² ↦ x` bound: the point `((1-u²) + 2ui)/(1+u²)` has `x = 2(1-u²)/(1+u²)`,
/// so `x > x0 ⇔ u² < (2-x0)/(2+x0)`.
fn u_squared_bound(x: &Rational) -> Option<Rational> {
    let two = Rational::from_integer(BigInt::from(2));
    let den = &two + x;
    (!den.is_zero()).then(|| (&two - x) / den)
}

fn point_from_u(u: &Rational) -> GaussianRational {
    let one = Rational::one();
    let u2 = u * u;
    let den = &one + &u2;
    GaussianRational::new(
        (&one - &u2) / &den,
        (Rational::from_integer(BigInt::from(2)) * u) / &den,
    )
}

fn check_window(x_lo: &Rational, x_hi: &Rational) -> Result<(Rational, Option<Rational>)> {
    let two = Rational::from_integer(BigInt::from(2));
    if x_lo >= x_hi || x_lo < &-two.clone() || x_hi > &two {
        return Err(Error::EmptyInterval {
            lo: Box::new(x_lo.clone()),
            hi: Box::new(x_hi.clone()),
        });
    }
    // admissible u: u² ∈ (a, b) with b = ∞ when x_lo = -2
    let a = u_squared_bound(x_hi).expect("x_hi > -2");
    let b = u_squared_bound(x_lo);
    Ok((a, b))
}

/// The simplest positive rational `u` (Stern–Brocot order) with
/// `a < u² < b`, where `b = None` means no upper bound.
fn simplest_u(a: &Rational, b: Option<&Rational>) -> Rational {
    let inside = |p: &BigInt, q: &BigInt| {
        let u = Rational::new(p.clone(), q.clone());
        let u2 = &u * &u;
        if &u2 <= a {
            std::cmp::Ordering::Less
        } else if b.is_some_and(|b| &u2 >= b) {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    };
    // Stern–Brocot descent between 0/1 and 1/0, taking runs of equal moves
    // in one step via doubling plus binary search
    let (mut lp, mut lq) = (BigInt::zero(), BigInt::one());
    let (mut rp, mut rq) = (BigInt::one(), BigInt::zero());
    loop {
        let (mp, mq) = (&lp + &rp, &lq + &rq);
        match inside(&mp, &mq) {
            std::cmp::Ordering::Equal => return Rational::new(mp, mq),
            std::cmp::Ordering::Less => {
                // move right: left bound becomes l + k·r for the largest k still too small
                let too_small = |k: &BigInt| {
                    inside(&(&lp + k * &rp), &(&lq + k * &rq)) == std::cmp::Ordering::Less
                };
                let k = largest_k(too_small);
                lp = &lp + &k * &rp;
                lq = &lq + &k * &rq;
            }
            std::cmp::Ordering::Greater => {
                let too_big = |k: &BigInt| {
                    inside(&(&rp + k * &lp), &(&rq + k * &lq)) == std::cmp::Ordering::Greater
                };
                let k = largest_k(too_big);
                rp = &rp + &k * &lp;
                rq = &rq + &k * &lq;
            }
        }
    }
}

/// Largest `k ≥ 1` with `pred(k)`, given `pred(1)` and that `pred` is
/// monotone (true then false).
fn largest_k(pred: impl Fn(&BigInt) -> bool) -> BigInt {
    let mut lo = BigInt::one();
    let mut hi = BigInt::from(2);
    while pred(&hi) {
        lo = hi.clone();
        hi *= 2;
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        if pred(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// A Gaussian rational on the unit circle with `2·Re(z) ∈ (x_lo, x_hi)` and
/// positive imaginary part, using the smallest-denominator parameter `u`.
pub fn rational_point_in_arc(x_lo: &Rational, x_hi: &Rational) -> Result<GaussianRational> {
    let (a, b) = check_window(x_lo, x_hi)?;
    Ok(point_from_u(&simplest_u(&a, b.as_ref())))
}

/// Another point of the same window, distinct from
/// [`rational_point_in_arc`]: the parameter midway between the simplest `u`
/// and the simplest admissible value above it.
pub fn alternate_point_in_arc(x_lo: &Rational, x_hi: &Rational) -> Result<GaussianRational> {
    let (a, b) = check_window(x_lo, x_hi)?;
    let u0 = simplest_u(&a, b.as_ref());
    let u1 = simplest_u(&(&u0 * &u0), b.as_ref());
    let u = (&u0 + &u1) / Rational::from_integer(BigInt::from(2));
    debug_assert!(u.is_positive());
    Ok(point_from_u(&u))
}
