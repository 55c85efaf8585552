//! Signature profile on the unit circle, the limit signature at `z = 1`,
//! eigenvalue-1 Hodge aggregates, and the comparison of the limit signature
//! with the signature of the linking matrix.

use num_bigint::BigInt;
use serde::Serialize;

use crate::alexander::{alexander_poly, hypothesis_holds, AlexanderPolynomial};
use crate::circleroots::{arcs, unit_circle_roots, CircleArc};
use crate::exactnum::{GaussianRational, Rational};
use crate::hermitian::{levine_tristram_matrix, restricted_signature, signature, InertiaTriple};
use crate::seifert::{linking_matrix, small_linking_matrix, LinkingNumbers, SeifertMatrix};
use crate::{Error, Result};

/// Inertia of `(1-z)S + (1-z̄)S^T` at a unit-circle point.
pub fn signature_at(s: &SeifertMatrix, z: &GaussianRational) -> Result<InertiaTriple> {
    Ok(signature(&levine_tristram_matrix(s, z)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcValue {
    pub arc: CircleArc,
    pub signature: i64,
    pub nullity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureProfile {
    pub alexander: AlexanderPolynomial,
    /// Upper-semicircle arcs, starting next to `z = 1`.
    pub arcs: Vec<ArcValue>,
    /// Inertia at `z = -1` when `Δ(-1) ≠ 0`.
    pub value_at_minus1: Option<InertiaTriple>,
    pub sigma_one: i64,
}

/// Signature and nullity on every root-free arc of the upper semicircle.
pub fn signature_profile(s: &SeifertMatrix) -> Result<SignatureProfile> {
    let alexander = alexander_poly(s);
    if alexander.is_zero {
        return Err(Error::ZeroAlexander);
    }
    let roots = unit_circle_roots(&alexander.normalized)?;
    let arcs = arcs(&roots)
        .into_iter()
        .map(|arc| {
            let inertia = signature_at(s, &arc.sample_z)?;
            Ok(ArcValue {
                signature: inertia.signature(),
                nullity: inertia.zero,
                arc,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let value_at_minus1 = if roots.root_at_minus1 == 0 {
        let minus_one = GaussianRational::real(Rational::from_integer(BigInt::from(-1)));
        Some(signature_at(s, &minus_one)?)
    } else {
        None
    };
    let sigma_one = arcs[0].signature;
    Ok(SignatureProfile {
        alexander,
        arcs,
        value_at_minus1,
        sigma_one,
    })
}

impl SignatureProfile {
    /// Re-evaluates every arc at its alternate sample point and reports the
    /// arcs where signature or nullity differ from the stored value.
    pub fn inconsistent_arcs(&self, s: &SeifertMatrix) -> Result<Vec<usize>> {
        let mut bad = Vec::new();
        for (k, a) in self.arcs.iter().enumerate() {
            let i = signature_at(s, &a.arc.alternate_sample())?;
            if i.signature() != a.signature || i.zero != a.nullity {
                bad.push(k);
            }
        }
        Ok(bad)
    }
}

/// The limit of `σ(z)` as `z → 1` along the unit circle.
pub fn sigma_one(s: &SeifertMatrix) -> Result<i64> {
    Ok(signature_profile(s)?.sigma_one)
}

/// Sums over the eigenvalue-1 Hodge numbers `p^k_1(u)` that are determined by
/// `Δ` and the restricted form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeAggregates {
    /// `Σ k·p^k_1(u)`, the `(t-1)`-multiplicity of `Δ`.
    pub weighted_sum: usize,
    /// `Σ p^k_1(u)`, the nullity of `S - S^T`.
    pub count_sum: usize,
    pub p11_plus: usize,
    pub p11_minus: usize,
    /// `p^k_1 = 0` for `k > 1`, so `p^1_1(±1)` follow from the restricted form.
    pub resolved: bool,
}

pub fn hodge_aggregates(s: &SeifertMatrix) -> Result<HodgeAggregates> {
    let alexander = alexander_poly(s);
    if alexander.is_zero {
        return Err(Error::ZeroAlexander);
    }
    let weighted_sum = alexander.t1_multiplicity;
    let count_sum = s.boundary_nullity();
    let restricted = restricted_signature(s);
    // the weighted and plain sums agree exactly when no Jordan block of size
    // > 1 occurs; for a consistent component count this is the hypothesis
    let resolved = hypothesis_holds(&alexander, s.components())
        && weighted_sum == count_sum
        && restricted.zero == 0;
    let (p11_plus, p11_minus) = if resolved {
        (restricted.positive, restricted.negative)
    } else {
        (0, 0)
    };
    Ok(HodgeAggregates {
        weighted_sum,
        count_sum,
        p11_plus,
        p11_minus,
        resolved,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    HypothesisViolated,
    Counterexample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub delta_nonzero: bool,
    pub t1_multiplicity: usize,
    pub r: usize,
    pub holds: bool,
}

/// The chain of quantities that coincide under the hypothesis:
/// (a) linking matrix, (b) small linking matrix, (c)/(d) restricted form,
/// (e) `p^1_1(+1) - p^1_1(-1)`, (f) `σ¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub a_linking: Option<i64>,
    pub b_small_linking: Option<i64>,
    pub c_restricted: i64,
    pub d_restricted: i64,
    pub e_hodge: Option<i64>,
    pub f_sigma_one: Option<i64>,
    pub hypothesis: Hypothesis,
    pub verdict: Verdict,
    pub warnings: Vec<String>,
}

impl TheoremReport {
    pub fn quantities(&self) -> Vec<i64> {
        [
            self.a_linking,
            self.b_small_linking,
            Some(self.c_restricted),
            Some(self.d_restricted),
            self.e_hodge,
            self.f_sigma_one,
        ]
        .into_iter()
        .flatten()
        .collect()
    }
}

/// Computes every available quantity and compares them when `Δ ≠ 0` and
/// `(t-1)^r ∤ Δ`.
pub fn check_theorem(s: &SeifertMatrix, lk: Option<&LinkingNumbers>) -> Result<TheoremReport> {
    let r = s.components();
    let alexander = alexander_poly(s);
    let holds = hypothesis_holds(&alexander, r);
    let hypothesis = Hypothesis {
        delta_nonzero: !alexander.is_zero,
        t1_multiplicity: alexander.t1_multiplicity,
        r,
        holds,
    };
    let mut warnings: Vec<String> = s.consistency_warning().into_iter().collect();

    // A knot has no pairs to link, so its linking matrix is known without input.
    let knot = LinkingNumbers::new();
    let lk = lk.or((r == 1).then_some(&knot));
    let (a_linking, b_small_linking) = match lk {
        Some(lk) => {
            let a = linking_matrix(lk, r)?;
            let b = small_linking_matrix(&a, r)?;
            (Some(a.signature()), Some(b.signature()))
        }
        None => (None, None),
    };
    let restricted = restricted_signature(s).signature();
    let (e_hodge, f_sigma_one) = if alexander.is_zero {
        warnings.push("Alexander polynomial is identically zero; σ¹ is not certified".into());
        (None, None)
    } else {
        let h = hodge_aggregates(s)?;
        let e = h.resolved.then(|| h.p11_plus as i64 - h.p11_minus as i64);
        (e, Some(sigma_one(s)?))
    };
    if !holds && !alexander.is_zero {
        warnings.push(format!(
            "(t-1)^{r} divides the Alexander polynomial (multiplicity {}); σ¹ need not equal the linking signature",
            alexander.t1_multiplicity
        ));
    }
    let mut report = TheoremReport {
        a_linking,
        b_small_linking,
        c_restricted: restricted,
        d_restricted: restricted,
        e_hodge,
        f_sigma_one,
        hypothesis,
        verdict: Verdict::HypothesisViolated,
        warnings,
    };
    if holds {
        let q = report.quantities();
        report.verdict = if q.windows(2).all(|w| w[0] == w[1]) {
            Verdict::Confirmed
        } else {
            Verdict::Counterexample
        };
    }
    Ok(report)
}

/// `|σ¹| ≤ r - 1`.
pub fn gl_bound_check(s: &SeifertMatrix) -> Result<bool> {
    let bound = s.components() as i64 - 1;
    Ok(sigma_one(s)?.abs() <= bound)
}
