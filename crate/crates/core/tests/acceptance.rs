//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. All checks are exact; randomized ones use a fixed
//! seed.

use linksig_core::num_bigint::BigInt;
use linksig_core::{
    alexander_poly, arcs, check_theorem, fixtures, gl_bound_check, hodge_aggregates,
    hypothesis_holds, levine_tristram_matrix, linking_matrix, restricted_form,
    restricted_signature, sigma_one, signature, signature_at, signature_oracle,
    small_linking_matrix, unit_circle_roots, AlexanderPolynomial, GaussianRational,
    HermitianMatrix, IntPolynomial, Matrix, Rational, SeifertMatrix, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn minus_one() -> GaussianRational {
    GaussianRational::real(q(-1, 1))
}

fn ints(rows: &[&[i64]]) -> Matrix<BigInt> {
    Matrix::from_i64(rows).unwrap()
}

fn ac1_l5a1_alexander() -> Check {
    let f = fixtures::l5a1();
    let a = alexander_poly(&f.seifert);
    let cube = IntPolynomial::from_i64(&[-1, 1]).pow(3);
    ensure(a.normalized == cube, format!("Δ = {}", a.display()))?;
    ensure(a.t1_multiplicity == 3, format!("m = {}", a.t1_multiplicity))?;
    ensure(!hypothesis_holds(&a, 2), "hypothesis should fail for r = 2")?;
    Ok(format!("Δ = {}, m = 3, hypothesis fails", a.display()))
}

fn ac2_l5a1_signatures() -> Check {
    let f = fixtures::l5a1();
    let at =
        signature(&levine_tristram_matrix(&f.seifert, &minus_one()).map_err(|e| e.to_string())?);
    ensure(at.signature() == 1, format!("σ(-1) = {}", at.signature()))?;
    let s1 = sigma_one(&f.seifert).map_err(|e| e.to_string())?;
    ensure(s1 == 1, format!("σ¹ = {s1}"))?;
    let rep = check_theorem(&f.seifert, f.linking.as_ref()).map_err(|e| e.to_string())?;
    ensure(
        rep.verdict == Verdict::HypothesisViolated,
        format!("verdict {:?}", rep.verdict),
    )?;
    ensure(
        rep.a_linking == Some(0),
        format!("linking signature {:?}", rep.a_linking),
    )?;
    Ok("σ(-1) = 1, σ¹ = 1, linking signature 0, hypothesis_violated".into())
}

fn ac3_l7a2_alexander() -> Check {
    let f = fixtures::l7a2();
    let a = alexander_poly(&f.seifert);
    let expected =
        &IntPolynomial::from_i64(&[0, 0, 0, 0, 3, -4, 3]) * &IntPolynomial::from_i64(&[-1, 1]);
    let expected = AlexanderPolynomial::from_poly(expected).normalized;
    ensure(
        a.normalized == expected,
        format!("Δ = {} vs {}", a.normalized, expected),
    )?;
    ensure(a.t1_multiplicity == 1, format!("m = {}", a.t1_multiplicity))?;
    ensure(hypothesis_holds(&a, 2), "hypothesis should hold")?;
    Ok(format!("Δ = {}, m = 1, hypothesis holds", a.display()))
}

fn ac4_l7a2_profile() -> Check {
    let f = fixtures::l7a2();
    let a = alexander_poly(&f.seifert);
    let roots = unit_circle_roots(&a.normalized).map_err(|e| e.to_string())?;
    let four_thirds = q(4, 3);
    ensure(
        roots.x_intervals.len() == 1,
        format!("{} x-intervals", roots.x_intervals.len()),
    )?;
    let (lo, hi) = &roots.x_intervals[0];
    ensure(
        lo <= &four_thirds && &four_thirds <= hi,
        format!("interval [{lo}, {hi}]"),
    )?;
    ensure(
        roots.root_at_1 == 1,
        format!("root_at_1 = {}", roots.root_at_1),
    )?;
    let z = GaussianRational::new(q(4, 5), q(3, 5));
    let sz = signature_at(&f.seifert, &z)
        .map_err(|e| e.to_string())?
        .signature();
    ensure(sz == 1, format!("σ(4/5+3/5i) = {sz}"))?;
    let s1 = sigma_one(&f.seifert).map_err(|e| e.to_string())?;
    ensure(s1 == 1, format!("σ¹ = {s1}"))?;
    let form = restricted_form(&f.seifert);
    let rs = restricted_signature(&f.seifert);
    ensure(
        form.dim() == 1 && rs.signature() == 1,
        format!("restricted dim {} signature {}", form.dim(), rs.signature()),
    )?;
    let rep = check_theorem(&f.seifert, f.linking.as_ref()).map_err(|e| e.to_string())?;
    ensure(
        rep.verdict == Verdict::Confirmed,
        format!("verdict {:?}", rep.verdict),
    )?;
    Ok(format!(
        "x-root in [{lo}, {hi}], σ(4/5+3/5i) = 1, σ¹ = 1, restricted +1 on dim 1, confirmed"
    ))
}

fn ac5_hopf() -> Check {
    let f = fixtures::hopf();
    let lk = f
        .linking
        .clone()
        .ok_or("hopf fixture has no linking numbers")?;
    let a = linking_matrix(&lk, 2).map_err(|e| e.to_string())?;
    ensure(
        a.entries() == &ints(&[&[-1, 1], &[1, -1]]),
        format!("A = {}", a.entries()),
    )?;
    ensure(a.signature() == -1, format!("sign A = {}", a.signature()))?;
    let h = small_linking_matrix(&a, 2).map_err(|e| e.to_string())?;
    ensure(
        h.entries() == &ints(&[&[-1]]),
        format!("small = {}", h.entries()),
    )?;
    let rep = check_theorem(&f.seifert, Some(&lk)).map_err(|e| e.to_string())?;
    ensure(
        rep.verdict == Verdict::Confirmed,
        format!("verdict {:?}", rep.verdict),
    )?;
    ensure(
        rep.f_sigma_one == Some(-1),
        format!("σ¹ = {:?}", rep.f_sigma_one),
    )?;
    Ok("A = [[-1,1],[1,-1]], sign -1, small (-1), confirmed with σ¹ = -1".into())
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    q(rng.random_range(-4..=4), rng.random_range(1..=3))
}

fn random_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    GaussianRational::new(small_rational(rng), small_rational(rng))
}

fn random_hermitian(rng: &mut ChaCha8Rng) -> HermitianMatrix {
    let n = rng.random_range(1..=8);
    if rng.random_bool(0.5) {
        let mut m = Matrix::from_fn(n, n, |_, _| GaussianRational::new(q(0, 1), q(0, 1)));
        for i in 0..n {
            m[(i, i)] = GaussianRational::real(small_rational(rng));
            for j in i + 1..n {
                let v = random_gaussian(rng);
                m[(j, i)] = v.conj();
                m[(i, j)] = v;
            }
        }
        HermitianMatrix::new(m).unwrap()
    } else {
        // P* D P with a degenerate diagonal D and a random, possibly
        // rank-deficient P, to exercise the zero-pivot paths.
        let d = Matrix::from_fn(n, n, |i, j| {
            GaussianRational::real(if i == j {
                q(rng.random_range(-1..=1), 1)
            } else {
                q(0, 1)
            })
        });
        let k = rng.random_range(1..=n);
        let p = Matrix::from_fn(n, n, |i, _| {
            if i < k {
                GaussianRational::new(
                    q(rng.random_range(-2..=2), 1),
                    q(rng.random_range(-2..=2), 1),
                )
            } else {
                GaussianRational::new(q(0, 1), q(0, 1))
            }
        });
        HermitianMatrix::new(d).unwrap().congruent(&p)
    }
}

fn ac6_signature_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let trials = 240;
    for t in 0..trials {
        let m = random_hermitian(&mut rng);
        let fast = signature(&m);
        let slow = signature_oracle(&m);
        ensure(
            fast == slow,
            format!("trial {t}: {fast:?} vs oracle {slow:?}\n{}", m.entries()),
        )?;
    }
    Ok(format!(
        "{trials} random Hermitian matrices (n ≤ 8) agree with the oracle"
    ))
}

fn random_seifert(rng: &mut ChaCha8Rng) -> SeifertMatrix {
    let n = rng.random_range(1..=4);
    let r = rng.random_range(1..=3);
    let m = Matrix::from_fn(n, n, |_, _| BigInt::from(rng.random_range(-2..=2)));
    SeifertMatrix::new(m, r).unwrap()
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Matrix<BigInt> {
    let mut p: Matrix<BigInt> = Matrix::identity(n);
    for _ in 0..3 * n {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        let e = if i != j {
            let mut e: Matrix<BigInt> = Matrix::identity(n);
            e[(i, j)] = BigInt::from(rng.random_range(-2..=2));
            e
        } else {
            let mut e: Matrix<BigInt> = Matrix::identity(n);
            e[(i, i)] = BigInt::from(-1);
            e
        };
        p = &p * &e;
    }
    p
}

fn invariants(s: &SeifertMatrix) -> (IntPolynomial, usize, i64) {
    (
        alexander_poly(s).normalized,
        s.boundary_nullity(),
        restricted_signature(s).signature(),
    )
}

fn ac7_s_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let trials = 120;
    let mut max_dim = 0;
    for t in 0..trials {
        let s = random_seifert(&mut rng);
        let base = invariants(&s);
        let xi: Vec<BigInt> = (0..s.dim())
            .map(|_| BigInt::from(rng.random_range(-3..=3)))
            .collect();
        let row = s.row_extension(&xi).map_err(|e| e.to_string())?;
        let col = s.column_extension(&xi).map_err(|e| e.to_string())?;
        let p = random_unimodular(&mut rng, row.dim());
        let cong = row.congruence(&p).map_err(|e| e.to_string())?;
        max_dim = max_dim.max(cong.dim());
        for (label, other) in [("row", &row), ("column", &col), ("congruence", &cong)] {
            ensure(
                invariants(other) == base,
                format!(
                    "trial {t}: {label} extension changed invariants of\n{}",
                    s.entries()
                ),
            )?;
        }
    }
    Ok(format!(
        "{trials} random (S, ξ, P), dim ≤ {max_dim}: Δ, nullity, restricted signature preserved"
    ))
}

fn random_circle_point(rng: &mut ChaCha8Rng) -> GaussianRational {
    let u = q(rng.random_range(-50..=50), rng.random_range(1..=17));
    let one = q(1, 1);
    let den = &one + &u * &u;
    GaussianRational::new((&one - &u * &u) / &den, (q(2, 1) * &u) / &den)
}

fn ac8_arc_constancy() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut n_arcs = 0;
    for f in fixtures::all() {
        let a = alexander_poly(&f.seifert);
        let roots = unit_circle_roots(&a.normalized).map_err(|e| e.to_string())?;
        for arc in arcs(&roots) {
            let z1 = arc.sample_z.clone();
            let z2 = arc.alternate_sample();
            ensure(z1 != z2, format!("{}: coincident samples", f.name))?;
            let s1 = signature_at(&f.seifert, &z1).map_err(|e| e.to_string())?;
            let s2 = signature_at(&f.seifert, &z2).map_err(|e| e.to_string())?;
            ensure(
                s1.signature() == s2.signature(),
                format!(
                    "{}: σ({z1}) = {} but σ({z2}) = {}",
                    f.name,
                    s1.signature(),
                    s2.signature()
                ),
            )?;
            n_arcs += 1;
        }
        for _ in 0..20 {
            let z = random_circle_point(&mut rng);
            let s = signature_at(&f.seifert, &z).map_err(|e| e.to_string())?;
            let c = signature_at(&f.seifert, &z.conj()).map_err(|e| e.to_string())?;
            ensure(
                s.signature() == c.signature(),
                format!("{}: σ({z}) ≠ σ(conj)", f.name),
            )?;
        }
    }
    Ok(format!(
        "{n_arcs} arcs constant on two samples; σ(z) = σ(z̄) at 20 points per fixture"
    ))
}

fn ac9_bounds() -> Check {
    for f in fixtures::all() {
        ensure(
            gl_bound_check(&f.seifert).map_err(|e| e.to_string())?,
            format!("{}: |σ¹| > r - 1", f.name),
        )?;
        if f.seifert.components() == 1 {
            let s1 = sigma_one(&f.seifert).map_err(|e| e.to_string())?;
            ensure(s1 == 0, format!("{}: knot with σ¹ = {s1}", f.name))?;
        }
    }
    Ok("|σ¹| ≤ r - 1 on every fixture; σ¹ = 0 on knots".into())
}

fn ac10_hodge() -> Check {
    let h = hodge_aggregates(&fixtures::l7a2().seifert).map_err(|e| e.to_string())?;
    let got = (h.weighted_sum, h.count_sum, h.p11_plus, h.p11_minus);
    ensure(
        h.resolved && got == (1, 1, 1, 0),
        format!("L7a2 {got:?} resolved={}", h.resolved),
    )?;
    let h = hodge_aggregates(&fixtures::l5a1().seifert).map_err(|e| e.to_string())?;
    ensure(
        !h.resolved && h.weighted_sum == 3 && h.count_sum == 1,
        format!(
            "L5a1 weighted {} count {} resolved={}",
            h.weighted_sum, h.count_sum, h.resolved
        ),
    )?;
    Ok("L7a2 (1, 1, 1, 0) resolved; L5a1 unresolved with sums 3 and 1".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1  L5a1 Alexander polynomial", ac1_l5a1_alexander),
        ("AC2  L5a1 signatures and verdict", ac2_l5a1_signatures),
        ("AC3  L7a2 Alexander polynomial", ac3_l7a2_alexander),
        ("AC4  L7a2 circle roots and signatures", ac4_l7a2_profile),
        ("AC5  Hopf linking matrices", ac5_hopf),
        ("AC6  Hermitian signature vs oracle", ac6_signature_oracle),
        ("AC7  S-equivalence invariance", ac7_s_equivalence),
        (
            "AC8  arc constancy and conjugate symmetry",
            ac8_arc_constancy,
        ),
        ("AC9  |σ¹| ≤ r - 1 and knots", ac9_bounds),
        ("AC10 Hodge aggregates", ac10_hodge),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
