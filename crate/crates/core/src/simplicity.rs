//! Simplicity of a Lie algebra as irreducibility of its adjoint module,
//! decided by Norton's criterion.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgElement, LieAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

pub const DEFAULT_TRIALS: usize = 64;
const MAX_WORD: usize = 4;
/// Upper bound on projective points of ker θ that are spun.
const MAX_POINTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "simple")]
    Simple,
    #[serde(rename = "proper ideal found")]
    ProperIdealFound,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

/// Data from the trial that settled irreducibility: every projective point
/// of ker θ spins to the whole module and `dual_vector` ∈ ker θᵀ spins to the
/// whole dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<F> {
    pub trial: usize,
    pub shift: F,
    pub nullity: usize,
    pub kernel_basis: Vec<Vec<F>>,
    pub dual_vector: Vec<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport<F> {
    pub verdict: Verdict,
    pub witness: Option<Vec<AlgElement<F>>>,
    pub trials_used: usize,
    pub seed: u64,
    pub certificate: Option<Certificate<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub trial: usize,
    pub shift: String,
    pub nullity: usize,
    pub kernel_basis: Vec<BTreeMap<String, String>>,
    pub dual_vector: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicityReportDoc {
    pub verdict: Verdict,
    pub witness: Option<Vec<BTreeMap<String, String>>>,
    pub witness_dim: Option<usize>,
    pub trials_used: usize,
    pub seed: u64,
    pub certificate: Option<CertificateDoc>,
}

impl<F: Field> SimplicityReport<F> {
    pub fn to_doc(&self, alg: &LieAlgebra<F>) -> SimplicityReportDoc {
        SimplicityReportDoc {
            verdict: self.verdict,
            witness: self
                .witness
                .as_ref()
                .map(|w| w.iter().map(|x| alg.element_doc(x)).collect()),
            witness_dim: self.witness.as_ref().map(Vec::len),
            trials_used: self.trials_used,
            seed: self.seed,
            certificate: self.certificate.as_ref().map(|c| CertificateDoc {
                trial: c.trial,
                shift: c.shift.to_hex(),
                nullity: c.nullity,
                kernel_basis: c
                    .kernel_basis
                    .iter()
                    .map(|v| alg.element_doc(&AlgElement(v.clone())))
                    .collect(),
                dual_vector: c.dual_vector.iter().map(|x| x.to_hex()).collect(),
            }),
        }
    }
}

/// Closure of span{v} under the given operators.
fn spin<F: Field>(gens: &[Matrix<F>], v: &[F]) -> Subspace<F> {
    let mut space = Subspace::new(v.len());
    let mut queue = Vec::new();
    if space.insert(v).is_some() {
        queue.push(v.to_vec());
    }
    while let Some(u) = queue.pop() {
        if space.is_full() {
            break;
        }
        for g in gens {
            let w = g.mul_vec(&u).expect("square");
            if space.insert(&w).is_some() {
                queue.push(w);
            }
        }
    }
    space
}

fn ad_operators<F: Field>(alg: &LieAlgebra<F>) -> Vec<Matrix<F>> {
    (0..alg.dim()).map(|i| alg.ad_basis(i)).collect()
}

/// Basis of the smallest ideal containing `v`.
pub fn smallest_ideal_containing<F: Field>(
    alg: &LieAlgebra<F>,
    v: &AlgElement<F>,
) -> Result<Vec<AlgElement<F>>> {
    if v.dim() != alg.dim() {
        return Err(Error::DimensionMismatch(
            "element and algebra dimensions".into(),
        ));
    }
    if v.is_zero() {
        return Err(Error::Precondition("the ideal generated by 0 is 0".into()));
    }
    Ok(spin(&ad_operators(alg), v.coeffs())
        .basis()
        .into_iter()
        .map(AlgElement)
        .collect())
}

/// Whether `basis` spans a nonzero proper subspace with [b_i, I] ⊆ I for all i.
pub fn is_proper_ideal<F: Field>(alg: &LieAlgebra<F>, basis: &[AlgElement<F>]) -> bool {
    let n = alg.dim();
    let mut space = Subspace::new(n);
    for x in basis {
        space.insert(x.coeffs());
    }
    if space.dim() == 0 || space.is_full() {
        return false;
    }
    (0..n).all(|i| {
        let b = AlgElement::basis(n, i);
        basis
            .iter()
            .all(|x| space.contains(alg.bracket(&b, x).coeffs()))
    })
}

/// All nonzero vectors of span(basis) up to scalars, or `None` if too many.
fn projective_points<F: Field>(basis: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let k = basis.len();
    let q = F::ORDER;
    let count = (q.checked_pow(k as u32)? - 1) / (q - 1);
    if count > MAX_POINTS {
        return None;
    }
    let n = basis.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(count);
    // leading nonzero coefficient normalised to 1
    for lead in 0..k {
        let tail = k - lead - 1;
        for code in 0..q.pow(tail as u32) {
            let mut v = basis[lead].clone();
            let mut c = code;
            for b in &basis[lead + 1..] {
                let s = F::from_bits((c % q) as u8).expect("in range");
                c /= q;
                for (x, y) in v.iter_mut().zip(b) {
                    *x += s * *y;
                }
            }
            debug_assert_eq!(v.len(), n);
            out.push(v);
        }
    }
    Some(out)
}

/// Random element of the enveloping algebra: a combination of the words
/// of length 1..=4 in X = ad x and Y = ad y for random x, y.
fn random_theta<F: Field, R: Rng>(alg: &LieAlgebra<F>, rng: &mut R) -> Matrix<F> {
    let n = alg.dim();
    let rand_elt = |rng: &mut R| AlgElement((0..n).map(|_| F::random(rng)).collect());
    let x = alg.ad_matrix(&rand_elt(rng));
    let y = alg.ad_matrix(&rand_elt(rng));
    let mut theta = Matrix::zeros(n, n);
    let mut layer = vec![Matrix::identity(n)];
    for _ in 0..MAX_WORD {
        let mut next = Vec::with_capacity(layer.len() * 2);
        for w in &layer {
            next.push(x.mul(w).expect("square"));
            next.push(y.mul(w).expect("square"));
        }
        // keep the number of words per length bounded
        while next.len() > 4 {
            let i = rng.gen_range(0..next.len());
            next.swap_remove(i);
        }
        for w in &next {
            theta = theta.add(&w.scale(F::random(rng))).expect("square");
        }
        layer = next;
    }
    theta
}

enum Trial<F> {
    Certified(Certificate<F>),
    Witness(Vec<AlgElement<F>>),
    Skipped,
}

fn run_trial<F: Field>(
    alg: &LieAlgebra<F>,
    gens: &[Matrix<F>],
    duals: &[Matrix<F>],
    seed: u64,
    trial: usize,
) -> Trial<F> {
    let n = alg.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let theta = random_theta(alg, &mut rng);
    for shift in F::elements() {
        let t = theta
            .add(&Matrix::identity(n).scale(shift))
            .expect("square");
        let kernel = t.kernel_basis();
        if kernel.is_empty() {
            continue;
        }
        let Some(points) = projective_points(&kernel) else {
            continue;
        };
        for v in &points {
            let s = spin(gens, v);
            if !s.is_full() {
                return Trial::Witness(s.basis().into_iter().map(AlgElement).collect());
            }
        }
        let dual_kernel = t.transpose().kernel_basis();
        let w = dual_kernel[0].clone();
        let s = spin(duals, &w);
        if !s.is_full() {
            let rows = s.basis();
            let ann = Matrix::from_rows(&rows)
                .expect("rectangular")
                .kernel_basis();
            return Trial::Witness(ann.into_iter().map(AlgElement).collect());
        }
        return Trial::Certified(Certificate {
            trial,
            shift,
            nullity: kernel.len(),
            kernel_basis: kernel,
            dual_vector: w,
        });
    }
    Trial::Skipped
}

/// Norton's irreducibility test on the adjoint module, at most `trials`
/// random θ, deterministic in `seed`.
pub fn is_simple<F: Field>(
    alg: &LieAlgebra<F>,
    trials: usize,
    seed: u64,
) -> Result<SimplicityReport<F>> {
    let n = alg.dim();
    if n < 2 {
        return Err(Error::Precondition("simplicity test needs dim ≥ 2".into()));
    }
    let gens = ad_operators(alg);
    let duals: Vec<Matrix<F>> = gens.iter().map(Matrix::transpose).collect();
    for trial in 0..trials {
        match run_trial(alg, &gens, &duals, seed, trial) {
            Trial::Skipped => {}
            Trial::Certified(c) => {
                return Ok(SimplicityReport {
                    verdict: Verdict::Simple,
                    witness: None,
                    trials_used: trial + 1,
                    seed,
                    certificate: Some(c),
                })
            }
            Trial::Witness(w) => {
                if !is_proper_ideal(alg, &w) {
                    return Err(Error::Internal(
                        "submodule witness failed ideal verification".into(),
                    ));
                }
                return Ok(SimplicityReport {
                    verdict: Verdict::ProperIdealFound,
                    witness: Some(w),
                    trials_used: trial + 1,
                    seed,
                    certificate: None,
                });
            }
        }
    }
    // deterministic fallback: ideals generated by basis vectors
    for i in 0..n {
        let ideal = smallest_ideal_containing(alg, &AlgElement::basis(n, i))?;
        if ideal.len() < n && is_proper_ideal(alg, &ideal) {
            return Ok(SimplicityReport {
                verdict: Verdict::ProperIdealFound,
                witness: Some(ideal),
                trials_used: trials,
                seed,
                certificate: None,
            });
        }
    }
    Ok(SimplicityReport {
        verdict: Verdict::Inconclusive,
        witness: None,
        trials_used: trials,
        seed,
        certificate: None,
    })
}

/// Re-checks a certificate against `alg`: ker(θ) is not stored, so this
/// confirms that every projective point of the recorded kernel basis spins
/// to the whole module and the dual vector spins to the whole dual.
pub fn check_certificate<F: Field>(alg: &LieAlgebra<F>, c: &Certificate<F>) -> bool {
    let gens = ad_operators(alg);
    let duals: Vec<Matrix<F>> = gens.iter().map(Matrix::transpose).collect();
    let Some(points) = projective_points(&c.kernel_basis) else {
        return false;
    };
    points.iter().all(|v| spin(&gens, v).is_full()) && spin(&duals, &c.dual_vector).is_full()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_quotient, build_sl6, BasisLabel};
    use crate::deform::{build_type_ii, build_type_iii, specialize};
    use crate::field::{Gf2, Gf4};

    #[test]
    fn ideals_generated_by_single_vectors() {
        let l = build_quotient::<Gf2>();
        let e = AlgElement::basis(34, l.index_of_str("E+1-2").unwrap());
        assert_eq!(smallest_ideal_containing(&l, &e).unwrap().len(), 34);

        let ab = LieAlgebra::<Gf2>::abelian(2);
        assert_eq!(
            smallest_ideal_containing(&ab, &AlgElement::basis(2, 0))
                .unwrap()
                .len(),
            1
        );

        let a = build_sl6::<Gf2>();
        let z = a
            .element_from_labels(&[("H1", Gf2::ONE), ("H3", Gf2::ONE), ("H5", Gf2::ONE)])
            .unwrap();
        assert_eq!(smallest_ideal_containing(&a, &z).unwrap(), vec![z]);
        assert!(smallest_ideal_containing(&a, &AlgElement::zero(35)).is_err());
    }

    #[test]
    fn quotient_is_simple() {
        let l = build_quotient::<Gf2>();
        let r = is_simple(&l, DEFAULT_TRIALS, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Simple);
        assert!(check_certificate(&l, r.certificate.as_ref().unwrap()));
        assert_eq!(is_simple(&l, DEFAULT_TRIALS, 1).unwrap(), r);
    }

    #[test]
    fn sl6_has_the_center_as_ideal() {
        let a = build_sl6::<Gf2>();
        let r = is_simple(&a, DEFAULT_TRIALS, 1).unwrap();
        assert_eq!(r.verdict, Verdict::ProperIdealFound);
        let w = r.witness.unwrap();
        assert!(is_proper_ideal(&a, &w));
        // Z is the only proper ideal of sl(6) in characteristic 2
        let z: Vec<usize> = ["H1", "H3", "H5"]
            .iter()
            .map(|l| a.index_of_str(l).unwrap())
            .collect();
        assert_eq!(w.len(), 1);
        let support: Vec<usize> = w[0].support().map(|(k, _)| k).collect();
        assert_eq!(support, z);
        assert!(matches!(a.label(z[0]), BasisLabel::Cartan(_)));
    }

    #[test]
    fn abelian_algebra_is_not_simple() {
        let r = is_simple(&LieAlgebra::<Gf2>::abelian(3), 8, 0).unwrap();
        assert_eq!(r.verdict, Verdict::ProperIdealFound);
    }

    #[test]
    fn deformations_are_simple() {
        let l = build_quotient::<Gf2>();
        for f in [build_type_ii(&l).unwrap(), build_type_iii(&l).unwrap()] {
            let a = specialize(&l, &f, Gf2::ONE).unwrap();
            let r = is_simple(&a, DEFAULT_TRIALS, 7).unwrap();
            assert_eq!(r.verdict, Verdict::Simple);
            assert!(check_certificate(&a, r.certificate.as_ref().unwrap()));
        }
    }

    #[test]
    fn deformations_over_gf4_are_simple() {
        let l = build_quotient::<Gf4>();
        for f in [build_type_ii(&l).unwrap(), build_type_iii(&l).unwrap()] {
            for t0 in [Gf4::ONE, Gf4::generator(), Gf4::generator().frobenius()] {
                let a = specialize(&l, &f, t0).unwrap();
                assert_eq!(
                    is_simple(&a, DEFAULT_TRIALS, 3).unwrap().verdict,
                    Verdict::Simple
                );
            }
        }
    }

    #[test]
    fn verdict_is_invariant_under_change_of_basis() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let l = build_quotient::<Gf2>();
        let a = build_sl6::<Gf2>();
        for _ in 0..20 {
            let p = Matrix::<Gf2>::random_invertible(&mut rng, 34);
            assert_eq!(
                is_simple(&l.change_basis(&p).unwrap(), DEFAULT_TRIALS, 5)
                    .unwrap()
                    .verdict,
                Verdict::Simple
            );
            let q = Matrix::<Gf2>::random_invertible(&mut rng, 35);
            assert_eq!(
                is_simple(&a.change_basis(&q).unwrap(), DEFAULT_TRIALS, 5)
                    .unwrap()
                    .verdict,
                Verdict::ProperIdealFound
            );
        }
    }

    #[test]
    fn report_doc_serializes_verdict_names() {
        let l = build_quotient::<Gf2>();
        let doc = is_simple(&l, DEFAULT_TRIALS, 1).unwrap().to_doc(&l);
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.contains("\"verdict\":\"simple\""));
        let back: SimplicityReportDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }
}
