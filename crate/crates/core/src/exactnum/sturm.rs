use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rational, RationalPolynomial};
use crate::{Error, Result};

/// Sturm sequence of a squarefree polynomial. Each remainder is rescaled by a
/// positive rational to primitive integer coefficients, which keeps every
/// sign intact.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<RationalPolynomial>,
}

impl SturmSequence {
    /// Builds the sequence for the squarefree part of `p`.
    pub fn new(p: &RationalPolynomial) -> Self {
        let p0 = p.squarefree_part();
        let mut chain = vec![p0.clone()];
        let p1 = p0.derivative().primitive_scaled();
        if !p1.is_zero() {
            chain.push(p1);
            loop {
                let n = chain.len();
                let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push((-&r).primitive_scaled());
            }
        }
        Self { chain }
    }

    /// The squarefree polynomial at the head of the sequence.
    pub fn head(&self) -> &RationalPolynomial {
        &self.chain[0]
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in self.chain.iter().map(|q| q.sign_at(x)) {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(a, b)`; both endpoints must be non-roots.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

fn check_interval(p: &RationalPolynomial, a: &Rational, b: &Rational) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Err(Error::EmptyInterval {
            lo: Box::new(a.clone()),
            hi: Box::new(b.clone()),
        });
    }
    for e in [a, b] {
        if p.eval(e).is_zero() {
            return Err(Error::EndpointIsRoot(Box::new(e.clone())));
        }
    }
    Ok(())
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
pub fn sturm_count(p: &RationalPolynomial, a: &Rational, b: &Rational) -> Result<usize> {
    check_interval(p, a, b)?;
    Ok(SturmSequence::new(p).count(a, b))
}

/// A point strictly inside `(lo, hi)` where `q` does not vanish. Tries the
/// midpoint first, then the other dyadic subdivision points.
fn split_point(q: &RationalPolynomial, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    let mut denom = BigInt::from(2);
    loop {
        let mut j = BigInt::one();
        while j < denom {
            let m = lo + &width * Rational::new(j.clone(), denom.clone());
            if !q.eval(&m).is_zero() {
                return m;
            }
            j += 2;
        }
        denom *= 2;
    }
}

/// Disjoint isolating intervals for the real roots of `p` in `(a, b)`, in
/// increasing order. Every endpoint is a non-root.
pub fn isolate_real_roots(
    p: &RationalPolynomial,
    a: &Rational,
    b: &Rational,
) -> Result<Vec<(Rational, Rational)>> {
    check_interval(p, a, b)?;
    let seq = SturmSequence::new(p);
    let mut out = Vec::new();
    let mut stack = vec![(a.clone(), b.clone(), seq.count(a, b))];
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let m = split_point(seq.head(), &lo, &hi);
                let left = seq.count(&lo, &m);
                stack.push((m.clone(), hi, n - left));
                stack.push((lo, m, left));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Shrinks an isolating interval of a squarefree `q` (one simple root,
/// non-root endpoints) until its width is below `max_width`.
pub fn refine_root(
    q: &RationalPolynomial,
    lo: &Rational,
    hi: &Rational,
    max_width: &Rational,
) -> (Rational, Rational) {
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let mut s_lo = q.sign_at(&lo);
    let two = Rational::from_integer(BigInt::from(2));
    while &(&hi - &lo) >= max_width {
        let m = (&lo + &hi) / &two;
        let s = q.sign_at(&m);
        if s == 0 {
            let quarter = (&hi - &lo) / Rational::from_integer(BigInt::from(4));
            lo = &m - &quarter;
            hi = &m + &quarter;
            s_lo = q.sign_at(&lo);
        } else if s == s_lo {
            lo = m;
        } else {
            hi = m;
        }
    }
    (lo, hi)
}
