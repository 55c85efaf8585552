//! Exact inertia of Hermitian matrices over the Gaussian rationals, the
//! Tristram-Levine matrix `(1-z)S + (1-z̄)S^T`, and the symmetric form
//! `S + S^T` restricted to `ker(S - S^T)`.

use num_traits::{One, Signed, Zero};

use crate::exactnum::{GaussianRational, Rational};
use crate::matrix::Matrix;
use crate::seifert::SeifertMatrix;
use crate::{Error, Result};

/// A square Gaussian-rational matrix equal to its conjugate transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMatrix {
    entries: Matrix<GaussianRational>,
}

impl HermitianMatrix {
    pub fn new(entries: Matrix<GaussianRational>) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::NotSquare {
                rows: entries.rows(),
                cols: entries.cols(),
            });
        }
        let n = entries.rows();
        for i in 0..n {
            for j in i..n {
                if entries[(i, j)] != entries[(j, i)].conj() {
                    return Err(Error::NotHermitian);
                }
            }
        }
        Ok(Self { entries })
    }

    /// Embeds a real symmetric matrix.
    pub fn from_symmetric(m: &Matrix<Rational>) -> Result<Self> {
        Self::new(m.map(|x| GaussianRational::real(x.clone())))
    }

    pub fn entries(&self) -> &Matrix<GaussianRational> {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    /// `P* M P`.
    pub fn congruent(&self, p: &Matrix<GaussianRational>) -> Self {
        let p_star = p.transpose().map(GaussianRational::conj);
        Self {
            entries: &(&p_star * &self.entries) * p,
        }
    }
}

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct InertiaTriple {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl InertiaTriple {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Self {
            positive,
            negative,
            zero,
        }
    }

    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }
}

/// `(1 - z)S + (1 - z̄)S^T` for `|z| = 1`.
pub fn levine_tristram_matrix(s: &SeifertMatrix, z: &GaussianRational) -> Result<HermitianMatrix> {
    if !z.is_on_unit_circle() {
        return Err(Error::OffUnitCircle(Box::new(z.clone())));
    }
    let one = GaussianRational::one();
    let a = &one - z;
    let b = a.conj();
    let e = s.entries();
    let entries = Matrix::from_fn(s.dim(), s.dim(), |i, j| {
        let sij = GaussianRational::real(Rational::from_integer(e[(i, j)].clone()));
        let sji = GaussianRational::real(Rational::from_integer(e[(j, i)].clone()));
        &(&a * &sij) + &(&b * &sji)
    });
    Ok(HermitianMatrix { entries })
}

/// Inertia by symmetric Gaussian elimination.
///
/// Pivots on the first nonzero diagonal entry; when the whole remaining
/// diagonal vanishes, the first nonzero off-diagonal entry `a = M[i][j]`
/// gives a hyperbolic block `[[0, a], [ā, 0]]` of inertia (1, 1, 0), which is
/// eliminated by its Schur complement.
pub fn signature(m: &HermitianMatrix) -> InertiaTriple {
    let mut a = m.entries.clone();
    let mut active: Vec<usize> = (0..m.dim()).collect();
    let mut out = InertiaTriple::default();
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&k| !a[(k, k)].is_zero()) {
            let k = active.remove(pos);
            let d = a[(k, k)].re.clone();
            if d.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            let d_inv = d.recip();
            for &i in &active {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] * &GaussianRational::real(d_inv.clone());
                for &j in &active {
                    let v = &f * &a[(k, j)];
                    a[(i, j)] = &a[(i, j)] - &v;
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(pi, &i)| {
            active[pi + 1..]
                .iter()
                .find(|&&j| !a[(i, j)].is_zero())
                .map(|&j| (i, j))
        });
        let Some((i, j)) = pair else {
            out.zero += active.len();
            break;
        };
        out.positive += 1;
        out.negative += 1;
        active.retain(|&k| k != i && k != j);
        // B^{-1} = [[0, 1/ā], [1/a, 0]] for B = [[0, a], [ā, 0]]
        let inv_a = a[(i, j)].recip();
        let inv_a_bar = inv_a.conj();
        for &p in &active {
            for &q in &active {
                let t1 = &(&a[(p, i)] * &inv_a_bar) * &a[(j, q)];
                let t2 = &(&a[(p, j)] * &inv_a) * &a[(i, q)];
                a[(p, q)] = &(&a[(p, q)] - &t1) - &t2;
            }
        }
    }
    out
}

/// Inertia of a real symmetric rational matrix.
pub fn symmetric_signature(m: &Matrix<Rational>) -> InertiaTriple {
    signature(&HermitianMatrix::from_symmetric(m).expect("symmetric matrix"))
}

/// Characteristic polynomial `det(xI - M)` by Faddeev–LeVerrier, ascending
/// coefficients.
fn characteristic_polynomial(m: &Matrix<GaussianRational>) -> Vec<GaussianRational> {
    let n = m.rows();
    let mut coeffs = vec![GaussianRational::zero(); n + 1];
    coeffs[n] = GaussianRational::one();
    let ident = Matrix::<GaussianRational>::identity(n);
    let mut mk = Matrix::<GaussianRational>::zeros(n, n);
    for k in 1..=n {
        let scaled = ident.map(|x| x * &coeffs[n - k + 1]);
        mk = &(m * &mk) + &scaled;
        let am = m * &mk;
        let trace = (0..n).fold(GaussianRational::zero(), |acc, i| &acc + &am[(i, i)]);
        let factor = GaussianRational::real(Rational::new((-1).into(), (k as i64).into()));
        coeffs[n - k] = &trace * &factor;
    }
    coeffs
}

fn sign_variations(coeffs: &[Rational]) -> usize {
    let signs: Vec<bool> = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .map(Signed::is_positive)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia from the characteristic polynomial. A Hermitian matrix has only
/// real eigenvalues, so Descartes' rule of signs counts the positive and
/// negative roots exactly, with multiplicity.
pub fn signature_oracle(m: &HermitianMatrix) -> InertiaTriple {
    let cp = characteristic_polynomial(&m.entries);
    let real: Vec<Rational> = cp
        .into_iter()
        .map(|c| {
            assert!(
                c.im.is_zero(),
                "characteristic polynomial of a Hermitian matrix is real"
            );
            c.re
        })
        .collect();
    let zero = real.iter().take_while(|c| c.is_zero()).count();
    let rest = &real[zero..];
    let reflected: Vec<Rational> = rest
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
        .collect();
    InertiaTriple::new(sign_variations(rest), sign_variations(&reflected), zero)
}

/// Exact basis of the right kernel, built from the reduced row-echelon form
/// with free columns in increasing order.
pub fn kernel_basis(a: &Matrix<Rational>) -> Vec<Vec<Rational>> {
    a.kernel_basis()
}

/// The form `S + S^T` on `ker(S - S^T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedForm {
    pub basis: Vec<Vec<Rational>>,
    pub gram: Matrix<Rational>,
}

impl RestrictedForm {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn restricted_form(s: &SeifertMatrix) -> RestrictedForm {
    let basis = kernel_basis(&s.antisymmetric_part().to_rational());
    let sym = s.symmetric_part().to_rational();
    let images: Vec<Vec<Rational>> = basis.iter().map(|v| sym.mul_vec(v)).collect();
    let gram = Matrix::from_fn(basis.len(), basis.len(), |i, j| {
        basis[i]
            .iter()
            .zip(&images[j])
            .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
    });
    RestrictedForm { basis, gram }
}

pub fn restricted_signature(s: &SeifertMatrix) -> InertiaTriple {
    symmetric_signature(&restricted_form(s).gram)
}

/// `(S^T)^{-1} S`.
pub fn monodromy(s: &SeifertMatrix) -> Result<Matrix<Rational>> {
    let q = s.entries().to_rational();
    let inv = q.transpose().inverse()?;
    Ok(&inv * &q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int_rat, rat};
    use crate::fixtures;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn herm_i64(rows: &[&[i64]]) -> HermitianMatrix {
        let m = Matrix::from_i64(rows).unwrap().to_rational();
        HermitianMatrix::from_symmetric(&m).unwrap()
    }

    fn g(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational::new(re, im)
    }

    #[test]
    fn whitehead_murasugi_matrix() {
        let m = herm_i64(&[&[2, -1, -1], &[-1, 2, 1], &[-1, 1, -2]]);
        assert_eq!(signature(&m), InertiaTriple::new(2, 1, 0));
        assert_eq!(signature_oracle(&m), InertiaTriple::new(2, 1, 0));
    }

    #[test]
    fn identity_and_hyperbolic() {
        for n in 0..5 {
            let id = HermitianMatrix::new(Matrix::identity(n)).unwrap();
            assert_eq!(signature(&id), InertiaTriple::new(n, 0, 0));
            assert_eq!(signature_oracle(&id), InertiaTriple::new(n, 0, 0));
        }
        let h = herm_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(signature(&h), InertiaTriple::new(1, 1, 0));
        assert_eq!(signature_oracle(&h), InertiaTriple::new(1, 1, 0));
        let d = herm_i64(&[&[3, 0, 0], &[0, -2, 0], &[0, 0, 0]]);
        assert_eq!(signature(&d), InertiaTriple::new(1, 1, 1));
        assert_eq!(signature_oracle(&d), InertiaTriple::new(1, 1, 1));
    }

    #[test]
    fn complex_hyperbolic_block() {
        let a = g(int_rat(1), int_rat(2));
        let z = GaussianRational::zero();
        let m = HermitianMatrix::new(
            Matrix::from_rows(vec![
                vec![z.clone(), a.clone(), z.clone()],
                vec![a.conj(), z.clone(), GaussianRational::one()],
                vec![z.clone(), GaussianRational::one(), z.clone()],
            ])
            .unwrap(),
        )
        .unwrap();
        assert_eq!(signature(&m), signature_oracle(&m));
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = Matrix::from_rows(vec![
            vec![GaussianRational::zero(), GaussianRational::i()],
            vec![GaussianRational::i(), GaussianRational::zero()],
        ])
        .unwrap();
        assert_eq!(HermitianMatrix::new(m), Err(Error::NotHermitian));
        let diag = Matrix::from_rows(vec![vec![GaussianRational::i()]]).unwrap();
        assert_eq!(HermitianMatrix::new(diag), Err(Error::NotHermitian));
    }

    #[test]
    fn levine_tristram_special_points() {
        let s = fixtures::l7a2().seifert;
        let at_one = levine_tristram_matrix(&s, &GaussianRational::one()).unwrap();
        assert!(at_one.entries().is_zero());
        let at_minus = levine_tristram_matrix(&s, &g(int_rat(-1), int_rat(0))).unwrap();
        let twice = s
            .symmetric_part()
            .to_rational()
            .map(|x| GaussianRational::real(x * int_rat(2)));
        assert_eq!(*at_minus.entries(), twice);
        let z = g(rat(4, 5), rat(3, 5));
        assert_eq!(
            signature(&levine_tristram_matrix(&s, &z).unwrap()).signature(),
            1
        );
        assert!(matches!(
            levine_tristram_matrix(&s, &g(rat(1, 2), rat(1, 2))),
            Err(Error::OffUnitCircle(_))
        ));
    }

    #[test]
    fn kernel_examples() {
        let w = fixtures::l5a1().seifert;
        let k = kernel_basis(&w.antisymmetric_part().to_rational());
        assert_eq!(k, vec![vec![int_rat(1), int_rat(1), int_rat(1)]]);
    }

    #[test]
    fn restricted_forms_of_fixtures() {
        let w = fixtures::l5a1().seifert;
        let f = restricted_form(&w);
        assert_eq!(f.dim(), 1);
        // (1,1,1)(S+S^T)(1,1,1)^T = 2-1-1-1+2+1-1+1-2 = 0
        assert_eq!(f.gram, Matrix::from_rows(vec![vec![int_rat(0)]]).unwrap());
        assert_eq!(restricted_signature(&w), InertiaTriple::new(0, 0, 1));

        let l = fixtures::l7a2().seifert;
        let r = restricted_signature(&l);
        assert_eq!(r, InertiaTriple::new(1, 0, 0));
    }

    #[test]
    fn restricted_form_of_symmetric_matrix_is_twice_it() {
        let s = SeifertMatrix::from_i64(&[&[1, 2], &[2, -3]], 1).unwrap();
        let f = restricted_form(&s);
        assert_eq!(f.basis.len(), 2);
        assert_eq!(f.gram, s.entries().to_rational().map(|x| x * int_rat(2)));
    }

    #[test]
    fn monodromy_examples() {
        let id = SeifertMatrix::new(Matrix::identity(3), 1).unwrap();
        assert_eq!(monodromy(&id).unwrap(), Matrix::identity(3));
        let s = SeifertMatrix::from_i64(&[&[1, 1], &[0, 1]], 1).unwrap();
        assert_eq!(
            monodromy(&s).unwrap(),
            Matrix::from_i64(&[&[1, 1], &[-1, 0]])
                .unwrap()
                .to_rational()
        );
        let sing = SeifertMatrix::from_i64(&[&[1, 1], &[1, 1]], 1).unwrap();
        assert_eq!(monodromy(&sing), Err(Error::Singular));
    }

    #[test]
    fn monodromy_characteristic_polynomial_matches_alexander() {
        // det(tI - h) = det(tS - S^T) / det(S^T) since h = (S^T)^{-1} S
        let s = SeifertMatrix::from_i64(&[&[-1, 1, 0], &[0, -1, 2], &[1, 0, 3]], 1).unwrap();
        let h = monodromy(&s)
            .unwrap()
            .map(|x| GaussianRational::real(x.clone()));
        let cp = characteristic_polynomial(&h);
        let det_st = Rational::from_integer(s.entries().determinant());
        let alex = crate::alexander::alexander_poly(&s);
        let coeffs = alex.poly.coefficients();
        assert_eq!(cp.len(), coeffs.len());
        for (c, a) in cp.iter().zip(coeffs) {
            assert!(c.im.is_zero());
            assert_eq!(&c.re * &det_st, Rational::from_integer(a.clone()));
        }
    }

    fn arb_gauss() -> impl Strategy<Value = GaussianRational> {
        (-4i64..5, -4i64..5, 1i64..4).prop_map(|(a, b, d)| g(rat(a, d), rat(b, d)))
    }

    fn arb_hermitian(max: usize) -> impl Strategy<Value = HermitianMatrix> {
        (1..=max).prop_flat_map(|n| {
            (
                proptest::collection::vec(arb_gauss(), n * n),
                proptest::collection::vec(0u8..4, n * n),
            )
                .prop_map(move |(v, mask)| {
                    // sparsify to hit zero pivots and hyperbolic blocks
                    let pick = |i: usize, j: usize| {
                        if mask[i * n + j] == 0 {
                            GaussianRational::zero()
                        } else {
                            v[i * n + j].clone()
                        }
                    };
                    let m = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => pick(i, j),
                        std::cmp::Ordering::Greater => pick(j, i).conj(),
                        std::cmp::Ordering::Equal => GaussianRational::real(pick(i, i).re),
                    });
                    HermitianMatrix::new(m).unwrap()
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn signature_agrees_with_oracle(m in arb_hermitian(6)) {
            let s = signature(&m);
            prop_assert_eq!(s.dim(), m.dim());
            prop_assert_eq!(s, signature_oracle(&m));
        }

        #[test]
        fn sylvester_congruence(m in arb_hermitian(4), p in proptest::collection::vec(arb_gauss(), 16)) {
            let n = m.dim();
            let pm = Matrix::from_fn(n, n, |i, j| p[i * 4 + j].clone());
            // P is invertible iff its realification is
            let real = Matrix::from_fn(2 * n, 2 * n, |i, j| {
                let e = &pm[(i % n, j % n)];
                match (i < n, j < n) {
                    (true, true) | (false, false) => e.re.clone(),
                    (true, false) => -&e.im,
                    (false, true) => e.im.clone(),
                }
            });
            prop_assume!(real.rank() == 2 * n);
            prop_assert_eq!(signature(&m.congruent(&pm)), signature(&m));
        }

        #[test]
        fn conjugate_point_same_signature(seed in proptest::collection::vec(-2i64..3, 16), u in 1i64..20, v in 1i64..20) {
            let s = SeifertMatrix::new(Matrix::from_fn(4, 4, |i, j| BigInt::from(seed[i * 4 + j])), 1).unwrap();
            let u = rat(u, v);
            let den = &u * &u + int_rat(1);
            let z = g((int_rat(1) - &u * &u) / &den, (int_rat(2) * &u) / &den);
            let a = levine_tristram_matrix(&s, &z).unwrap();
            let b = levine_tristram_matrix(&s, &z.conj()).unwrap();
            prop_assert_eq!(signature(&a), signature(&b));
        }
    }
}
