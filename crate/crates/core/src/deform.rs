//! Brackets f_t = b₀ + t b₁ + … + t^m b_m on L, polynomial in t, and the
//! global deformations of types II and III.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgElement, AlgebraKind, LieAlgebra};
use crate::cochain::{cbracket, cup, differential, set_count, Args, Cochain, CochainDoc};
use crate::cohomology::{basis_cocycle, Complex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::rootsys::Weight;

/// ψ₁ = ψ_{ε₁+ε₂+ε₃−ε₄−ε₅−ε₆}, the local part of type II.
pub const MU_1: Weight = Weight([1, 1, 1, -1, -1, -1]);
/// ψ₂ = ψ_{ε₁−ε₂−ε₃+ε₄+ε₅−ε₆}; ψ₁ + ψ₂ is the local part of type III.
pub const MU_2: Weight = Weight([1, -1, -1, 1, 1, -1]);

/// The six sets of φ as ((a, b), (c, d), (p, q)) meaning
/// [{ε_a − ε_b, ε_c − ε_d}, ε_p − ε_q], indices one-based.
pub const PHI_SETS: [((u8, u8), (u8, u8), (u8, u8)); 6] = [
    ((5, 1), (6, 5), (1, 6)),
    ((5, 1), (6, 1), (5, 6)),
    ((6, 1), (6, 5), (1, 5)),
    ((6, 4), (4, 1), (1, 6)),
    ((4, 1), (6, 1), (4, 6)),
    ((6, 1), (6, 4), (1, 4)),
];

fn root_vector<F: Field>(alg: &LieAlgebra<F>, (i, j): (u8, u8)) -> Result<usize> {
    alg.index_of_str(&format!("E+{i}-{j}"))
}

/// The single-set 2-cochains making up φ, in the order of [`PHI_SETS`].
pub fn phi_parts<F: Field>(alg: &LieAlgebra<F>) -> Result<Vec<Cochain<F>>> {
    PHI_SETS
        .iter()
        .map(|&(a, b, v)| {
            let mut c = Cochain::zero(2, alg.dim());
            let value = AlgElement::basis(alg.dim(), root_vector(alg, v)?);
            c.add_entry(&[root_vector(alg, a)?, root_vector(alg, b)?], &value)?;
            Ok(c)
        })
        .collect()
}

/// φ, of weight 2(ε₁ − ε₆), with dφ = [ψ₁, ψ₂].
pub fn phi_cochain<F: Field>(alg: &LieAlgebra<F>) -> Result<Cochain<F>> {
    phi_parts(alg)?
        .iter()
        .try_fold(Cochain::zero(2, alg.dim()), |acc, p| acc.add(p))
}

pub fn psi_1<F: Field>(alg: &LieAlgebra<F>) -> Result<Cochain<F>> {
    basis_cocycle(alg, MU_1)
}

pub fn psi_2<F: Field>(alg: &LieAlgebra<F>) -> Result<Cochain<F>> {
    basis_cocycle(alg, MU_2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformedBracket<F: Field> {
    terms: Vec<Cochain<F>>,
}

impl<F: Field> DeformedBracket<F> {
    /// b₀ = the bracket of `alg`, followed by `higher` as b₁, b₂, ….
    pub fn new(alg: &LieAlgebra<F>, higher: Vec<Cochain<F>>) -> Result<Self> {
        for (i, c) in higher.iter().enumerate() {
            if c.degree() != 2 || c.dim() != alg.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "term b{} is not a 2-cochain on the algebra",
                    i + 1
                )));
            }
        }
        let mut terms = vec![Cochain::from_bracket(alg)];
        terms.extend(higher);
        while terms.len() > 1 && terms.last().is_some_and(|c| c.is_zero()) {
            terms.pop();
        }
        Ok(DeformedBracket { terms })
    }

    pub fn undeformed(alg: &LieAlgebra<F>) -> Self {
        DeformedBracket {
            terms: vec![Cochain::from_bracket(alg)],
        }
    }

    pub fn terms(&self) -> &[Cochain<F>] {
        &self.terms
    }

    pub fn term(&self, i: usize) -> Option<&Cochain<F>> {
        self.terms.get(i)
    }

    /// Degree m in t.
    pub fn t_degree(&self) -> usize {
        self.terms.len() - 1
    }

    /// Coefficient of t^d in f(f(x,y),z) + f(f(y,z),x) + f(f(z,x),y) for
    /// d = 0 … 2m, namely Σ_{i+j=d} b_i ∪ b_j.
    pub fn jacobi_coefficients(&self, alg: &LieAlgebra<F>) -> Result<BTreeMap<usize, Cochain<F>>> {
        let m = self.t_degree();
        let mut out = BTreeMap::new();
        for d in 0..=2 * m {
            let mut acc = Cochain::zero(3, alg.dim());
            for i in d.saturating_sub(m)..=d.min(m) {
                acc = acc.add(&cup(alg, &self.terms[i], &self.terms[d - i])?)?;
            }
            out.insert(d, acc);
        }
        Ok(out)
    }

    /// t-degrees at which the Jacobi identity fails.
    pub fn failing_degrees(&self, alg: &LieAlgebra<F>) -> Result<Vec<usize>> {
        Ok(self
            .jacobi_coefficients(alg)?
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, _)| d)
            .collect())
    }

    /// Σ t₀^i b_i.
    pub fn evaluate_at(&self, t0: F) -> Cochain<F> {
        let (first, rest) = self.terms.split_first().expect("b0 is always present");
        let mut acc = first.clone();
        let mut power = F::one();
        for b in rest {
            power *= t0;
            acc = acc.add(&b.scale(power)).expect("same shape");
        }
        acc
    }

    pub fn to_doc(&self, alg: &LieAlgebra<F>) -> DeformationDoc {
        DeformationDoc {
            field_degree: F::DEGREE,
            terms: self
                .terms
                .iter()
                .enumerate()
                .map(|(i, c)| TermDoc {
                    t_degree: i,
                    cochain: c.to_doc(alg),
                })
                .collect(),
        }
    }

    /// Reads a deformation; b₀ may be omitted and must otherwise equal the
    /// bracket of `alg`.
    pub fn from_doc(alg: &LieAlgebra<F>, doc: &DeformationDoc) -> Result<Self> {
        if doc.field_degree != F::DEGREE {
            return Err(Error::Parse(format!(
                "field_degree: file has {}, expected {}",
                doc.field_degree,
                F::DEGREE
            )));
        }
        let mut by_degree: BTreeMap<usize, Cochain<F>> = BTreeMap::new();
        for (n, t) in doc.terms.iter().enumerate() {
            let c = Cochain::from_doc(alg, &t.cochain)
                .map_err(|e| Error::Parse(format!("terms[{n}].cochain: {e}")))?;
            if c.degree() != 2 {
                return Err(Error::Parse(format!(
                    "terms[{n}].cochain: degree must be 2"
                )));
            }
            if by_degree.insert(t.t_degree, c).is_some() {
                return Err(Error::Parse(format!(
                    "terms[{n}].t_degree: duplicate degree {}",
                    t.t_degree
                )));
            }
        }
        if let Some(b0) = by_degree.get(&0) {
            if *b0 != Cochain::from_bracket(alg) {
                return Err(Error::Parse(
                    "terms: t_degree 0 term differs from the bracket of L".into(),
                ));
            }
        }
        let m = by_degree.keys().next_back().copied().unwrap_or(0);
        let higher = (1..=m)
            .map(|d| {
                by_degree
                    .remove(&d)
                    .unwrap_or_else(|| Cochain::zero(2, alg.dim()))
            })
            .collect();
        Self::new(alg, higher)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub t_degree: usize,
    pub cochain: CochainDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationDoc {
    pub field_degree: u32,
    pub terms: Vec<TermDoc>,
}

fn verified<F: Field>(
    alg: &LieAlgebra<F>,
    f: DeformedBracket<F>,
    name: &str,
) -> Result<DeformedBracket<F>> {
    let bad = f.failing_degrees(alg)?;
    if bad.is_empty() {
        Ok(f)
    } else {
        Err(Error::Verification(format!(
            "{name}: Jacobi fails at t-degrees {bad:?}"
        )))
    }
}

/// [ , ] + tψ₁.
pub fn build_type_ii<F: Field>(alg: &LieAlgebra<F>) -> Result<DeformedBracket<F>> {
    let f = DeformedBracket::new(alg, vec![psi_1(alg)?])?;
    verified(alg, f, "type II")
}

/// [ , ] + t(ψ₁ + ψ₂) + t²φ.
pub fn build_type_iii<F: Field>(alg: &LieAlgebra<F>) -> Result<DeformedBracket<F>> {
    let psi = psi_1(alg)?.add(&psi_2(alg)?)?;
    let f = DeformedBracket::new(alg, vec![psi, phi_cochain(alg)?])?;
    verified(alg, f, "type III")
}

#[derive(Clone, Debug)]
pub struct ObstructionReport<F: Field> {
    pub obstruction_vanishes_identically: bool,
    pub is_coboundary: bool,
    pub witness: Option<Cochain<F>>,
}

impl<F: Field> ObstructionReport<F> {
    pub fn to_doc(&self, alg: &LieAlgebra<F>) -> ObstructionDoc {
        ObstructionDoc {
            obstruction_vanishes_identically: self.obstruction_vanishes_identically,
            is_coboundary: self.is_coboundary,
            witness: self.witness.as_ref().map(|w| w.to_doc(alg)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionDoc {
    pub obstruction_vanishes_identically: bool,
    pub is_coboundary: bool,
    pub witness: Option<CochainDoc>,
}

/// First obstruction to extending b₀ + tψ: whether ψ ∪ ψ is exact, and a φ′
/// with dφ′ = ψ ∪ ψ when it is.
pub fn obstruction_status<F: Field>(
    cx: &Complex<'_, F>,
    psi: &Cochain<F>,
) -> Result<ObstructionReport<F>> {
    if !cx.is_cocycle(psi)? {
        return Err(Error::NotACocycle);
    }
    let sq = cup(cx.algebra(), psi, psi)?;
    if sq.is_zero() {
        return Ok(ObstructionReport {
            obstruction_vanishes_identically: true,
            is_coboundary: true,
            witness: Some(Cochain::zero(2, psi.dim())),
        });
    }
    let witness = cx.is_coboundary(&sq)?;
    Ok(ObstructionReport {
        obstruction_vanishes_identically: false,
        is_coboundary: witness.is_some(),
        witness,
    })
}

/// The Lie algebra with bracket Σ t₀^i b_i.
pub fn specialize<F: Field>(
    alg: &LieAlgebra<F>,
    f: &DeformedBracket<F>,
    t0: F,
) -> Result<LieAlgebra<F>> {
    let bad = f.failing_degrees(alg)?;
    if !bad.is_empty() {
        return Err(Error::Precondition(format!(
            "deformation fails Jacobi at t-degrees {bad:?}"
        )));
    }
    let c = f.evaluate_at(t0);
    let n = alg.dim();
    LieAlgebra::from_upper_brackets(AlgebraKind::Other, alg.labels().to_vec(), None, |i, j| {
        Args::new(&[i, j])
            .and_then(|a| c.get(&a).cloned())
            .unwrap_or_else(|| AlgElement::zero(n))
    })
}

/// Set counts in the differentials of the six parts of φ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiForensics {
    /// Sets in d(part i); entries with a Cartan component are not sets.
    pub part_counts: Vec<usize>,
    /// Entries of d(part i) with a Cartan component in the value.
    pub cartan_valued: Vec<usize>,
    pub total: usize,
    /// matches[i][j]: sets common to d(part i) and d(part j), i < j.
    pub matches: Vec<Vec<usize>>,
    pub total_matches: usize,
    /// Sets in dφ.
    pub net: usize,
    pub d_phi_equals_bracket: bool,
}

fn sets<F: Field>(alg: &LieAlgebra<F>, c: &Cochain<F>) -> Vec<(Args, usize)> {
    c.entries()
        .filter(|(a, _)| a.iter().all(|i| alg.label(i).is_root()))
        .filter(|(_, v)| v.support().all(|(k, _)| alg.label(k).is_root()))
        .flat_map(|(a, v)| v.support().map(move |(k, _)| (*a, k)))
        .collect()
}

pub fn phi_forensics<F: Field>(alg: &LieAlgebra<F>) -> Result<PhiForensics> {
    let parts = phi_parts(alg)?;
    let dparts = parts
        .iter()
        .map(|p| differential(alg, p))
        .collect::<Result<Vec<_>>>()?;
    let part_sets: Vec<Vec<(Args, usize)>> = dparts.iter().map(|d| sets(alg, d)).collect();
    let part_counts: Vec<usize> = part_sets.iter().map(Vec::len).collect();
    let cartan_valued = dparts
        .iter()
        .map(|d| {
            d.entries()
                .filter(|(_, v)| v.support().any(|(k, _)| !alg.label(k).is_root()))
                .count()
        })
        .collect();
    let k = parts.len();
    let mut matches = vec![vec![0; k]; k];
    let mut total_matches = 0;
    for i in 0..k {
        for j in i + 1..k {
            let m = part_sets[i]
                .iter()
                .filter(|s| part_sets[j].contains(s))
                .count();
            matches[i][j] = m;
            total_matches += m;
        }
    }
    let phi = phi_cochain(alg)?;
    let dphi = differential(alg, &phi)?;
    let bracket = cbracket(alg, &psi_1(alg)?, &psi_2(alg)?)?;
    Ok(PhiForensics {
        total: part_counts.iter().sum(),
        part_counts,
        cartan_valued,
        matches,
        total_matches,
        net: set_count(alg, &dphi),
        d_phi_equals_bracket: dphi == bracket,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_quotient;
    use crate::cohomology::Complex;
    use crate::field::{Gf2, Gf4};
    use crate::trivector::{OrbitTag, Trivector};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn l2() -> LieAlgebra<Gf2> {
        build_quotient()
    }

    #[test]
    fn phi_is_six_sets_of_weight_two_eps1_minus_eps6() {
        let l = l2();
        let phi = phi_cochain(&l).unwrap();
        assert_eq!(set_count(&l, &phi), 6);
        assert_eq!(
            phi.homogeneous_weight(&l).unwrap(),
            Some(Weight([2, 0, 0, 0, 0, -2]))
        );
    }

    #[test]
    fn d_phi_is_the_bracket_of_psi1_psi2() {
        let l = l2();
        let phi = phi_cochain(&l).unwrap();
        let b = cbracket(&l, &psi_1(&l).unwrap(), &psi_2(&l).unwrap()).unwrap();
        assert_eq!(differential(&l, &phi).unwrap(), b);
        assert_eq!(
            b.homogeneous_weight(&l).unwrap(),
            Some(Weight([2, 0, 0, 0, 0, -2]))
        );
    }

    #[test]
    fn set_counts() {
        let l = l2();
        let (p1, p2) = (psi_1(&l).unwrap(), psi_2(&l).unwrap());
        assert_eq!(set_count(&l, &cup(&l, &p1, &p2).unwrap()), 28);
        assert_eq!(set_count(&l, &cup(&l, &p2, &p1).unwrap()), 28);
        assert_eq!(set_count(&l, &cbracket(&l, &p1, &p2).unwrap()), 48);
        assert_eq!(
            set_count(&l, &differential(&l, &phi_cochain(&l).unwrap()).unwrap()),
            48
        );
    }

    #[test]
    fn forensics_of_the_parts_of_phi() {
        let f = phi_forensics(&l2()).unwrap();
        assert_eq!(f.part_counts, vec![14, 13, 13, 14, 13, 13]);
        assert_eq!(f.total, 80);
        assert_eq!(f.total_matches, 16);
        assert_eq!(f.total - 2 * f.total_matches, 48);
        assert_eq!(f.net, 48);
        let expected = [
            [0, 1, 1, 2, 1, 1],
            [0, 0, 0, 1, 2, 1],
            [0, 0, 0, 1, 1, 2],
            [0, 0, 0, 0, 1, 1],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0],
        ];
        assert_eq!(f.matches, expected.map(|r| r.to_vec()).to_vec());
        assert_eq!(f.cartan_valued, vec![1; 6]);
        assert!(f.d_phi_equals_bracket);
    }

    #[test]
    fn undeformed_bracket_is_lie() {
        let l = l2();
        let f = DeformedBracket::undeformed(&l);
        assert!(f.failing_degrees(&l).unwrap().is_empty());
    }

    #[test]
    fn degree_one_coefficient_is_the_differential() {
        let l = l2();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let c = Cochain::<Gf2>::random(&mut rng, 2, 34, 0.05);
            let f = DeformedBracket::new(&l, vec![c.clone()]).unwrap();
            let j = f.jacobi_coefficients(&l).unwrap();
            assert_eq!(j[&1], differential(&l, &c).unwrap());
            assert_eq!(j[&2], cup(&l, &c, &c).unwrap());
        }
    }

    #[test]
    fn type_ii() {
        let l = l2();
        let f = build_type_ii(&l).unwrap();
        assert_eq!(f.t_degree(), 1);
        assert!(f.failing_degrees(&l).unwrap().is_empty());
        let block: Vec<String> = (1..=3)
            .flat_map(|i| (4..=6).map(move |j| format!("E+{j}-{i}")))
            .collect();
        for (a, _) in f.term(1).unwrap().entries() {
            for i in a.iter() {
                assert!(block.contains(&l.label(i).to_string()), "{}", l.label(i));
            }
        }
        let cx = Complex::new(&l).unwrap();
        assert_eq!(
            Trivector::from_class(&cx, f.term(1).unwrap()).unwrap(),
            Trivector::canonical(OrbitTag::II)
        );
    }

    #[test]
    fn type_iii() {
        let l = l2();
        let f = build_type_iii(&l).unwrap();
        let j = f.jacobi_coefficients(&l).unwrap();
        assert_eq!(j.keys().copied().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
        assert!(j.values().all(Cochain::is_zero));
        let psi = f.term(1).unwrap();
        let phi = f.term(2).unwrap();
        let by_hand = cup(&l, psi, psi)
            .unwrap()
            .add(&differential(&l, phi).unwrap())
            .unwrap();
        assert_eq!(j[&2], by_hand);
        assert!(cbracket(&l, psi, phi).unwrap().is_zero());
        assert!(cup(&l, phi, phi).unwrap().is_zero());
    }

    #[test]
    fn type_iii_without_phi_fails_at_t2() {
        let l = l2();
        let psi = psi_1(&l).unwrap().add(&psi_2(&l).unwrap()).unwrap();
        let f = DeformedBracket::new(&l, vec![psi]).unwrap();
        assert_eq!(f.failing_degrees(&l).unwrap(), vec![2]);
        assert!(specialize(&l, &f, Gf2::ONE).is_err());
    }

    #[test]
    fn obstructions() {
        let l = l2();
        let cx = Complex::new(&l).unwrap();
        let r = obstruction_status(&cx, &psi_1(&l).unwrap()).unwrap();
        assert!(r.obstruction_vanishes_identically && r.is_coboundary);
        let psi = psi_1(&l).unwrap().add(&psi_2(&l).unwrap()).unwrap();
        let r = obstruction_status(&cx, &psi).unwrap();
        assert!(!r.obstruction_vanishes_identically);
        assert!(r.is_coboundary);
        let w = r.witness.unwrap();
        assert_eq!(differential(&l, &w).unwrap(), cup(&l, &psi, &psi).unwrap());
        // φ and the solver's witness differ by a cocycle of weight 2(ε₁−ε₆),
        // which is not an H² weight, so by a coboundary
        let diff = w.add(&phi_cochain(&l).unwrap()).unwrap();
        assert!(cx.solve(1, &diff).unwrap().is_some());
        let junk = Cochain::<Gf2>::random(&mut ChaCha8Rng::seed_from_u64(1), 2, 34, 0.01);
        assert!(matches!(
            obstruction_status(&cx, &junk),
            Err(Error::NotACocycle)
        ));
    }

    #[test]
    fn specializations_are_lie_algebras() {
        let l = l2();
        let f = build_type_ii(&l).unwrap();
        let at0 = specialize(&l, &f, Gf2::ZERO).unwrap();
        for i in 0..34 {
            for j in 0..34 {
                assert_eq!(at0.bracket_basis(i, j), l.bracket_basis(i, j));
            }
        }
        assert!(specialize(&l, &f, Gf2::ONE).unwrap().satisfies_jacobi());
        assert!(specialize(&l, &build_type_iii(&l).unwrap(), Gf2::ONE)
            .unwrap()
            .satisfies_jacobi());

        let l4 = build_quotient::<Gf4>();
        let f4 = build_type_iii(&l4).unwrap();
        let a = specialize(&l4, &f4, Gf4::generator()).unwrap();
        assert!(a.satisfies_jacobi());
    }

    #[test]
    fn doc_round_trip() {
        let l = l2();
        let f = build_type_iii(&l).unwrap();
        let json = serde_json::to_string(&f.to_doc(&l)).unwrap();
        let doc: DeformationDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(DeformedBracket::from_doc(&l, &doc).unwrap(), f);

        let mut without_b0 = doc.clone();
        without_b0.terms.retain(|t| t.t_degree != 0);
        assert_eq!(DeformedBracket::from_doc(&l, &without_b0).unwrap(), f);

        let mut corrupted = doc;
        let t2 = corrupted
            .terms
            .iter_mut()
            .find(|t| t.t_degree == 2)
            .unwrap();
        t2.cochain.entries.remove(0);
        let g = DeformedBracket::from_doc(&l, &corrupted).unwrap();
        assert!(g.failing_degrees(&l).unwrap().contains(&2));
    }
}
