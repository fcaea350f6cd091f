//! Second adjoint cohomology of L = sl(6)/Z, computed weight block by
//! weight block, plus coboundary solving in C² and C³.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgElement, BasisLabel, LieAlgebra};
use crate::cochain::{coordinate_weight, tuples, Args, Cochain, CochainDoc, Differential};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::rootsys::{roots, Weight};

type Coord = (Args, usize);

/// ψ_μ = Σ E*_{−γ} ∧ E*_{−δ} ⊗ E_{μ−γ−δ} over unordered pairs of distinct
/// roots γ, δ with μ − γ − δ a root.
pub fn basis_cocycle<F: Field>(alg: &LieAlgebra<F>, mu: Weight) -> Result<Cochain<F>> {
    if !mu.is_h2_weight() {
        return Err(Error::NotAnH2Weight(mu.to_string()));
    }
    let label_of = |w: Weight| -> Result<usize> {
        let (i, j) = w.as_root().expect("root");
        alg.index_of(BasisLabel::Root(i as u8 + 1, j as u8 + 1))
            .ok_or_else(|| Error::Precondition("algebra lacks root vectors".into()))
    };
    let rs = roots();
    let n = alg.dim();
    let mut c = Cochain::zero(2, n);
    for (a, &gamma) in rs.iter().enumerate() {
        for &delta in &rs[a + 1..] {
            let nu = mu - gamma - delta;
            if nu.is_root() {
                let value = AlgElement::basis(n, label_of(nu)?);
                c.add_entry(&[label_of(-gamma)?, label_of(-delta)?], &value)?;
            }
        }
    }
    Ok(c)
}

/// Dimensions of one weight block of C², Z², B², H².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDims {
    pub weight: Weight,
    pub c2: usize,
    pub z2: usize,
    pub b2: usize,
    pub h2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H2Summary<F: Field> {
    pub total: usize,
    /// Number of weight blocks of C² examined.
    pub blocks_examined: usize,
    /// Blocks with nonzero H², in weight order.
    pub nonzero: Vec<BlockDims>,
    /// ψ_μ for every nonzero block whose weight is an H² weight.
    pub cocycles: BTreeMap<Weight, Cochain<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleDoc {
    pub weight: Weight,
    pub cocycle: CochainDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H2SummaryDoc {
    pub total: usize,
    pub blocks_examined: usize,
    pub weights: Vec<BlockDims>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cocycles: Vec<CocycleDoc>,
}

impl<F: Field> H2Summary<F> {
    pub fn to_doc(&self, alg: &LieAlgebra<F>, with_cocycles: bool) -> H2SummaryDoc {
        H2SummaryDoc {
            total: self.total,
            blocks_examined: self.blocks_examined,
            weights: self.nonzero.clone(),
            cocycles: if with_cocycles {
                self.cocycles
                    .iter()
                    .map(|(w, c)| CocycleDoc {
                        weight: *w,
                        cocycle: c.to_doc(alg),
                    })
                    .collect()
            } else {
                Vec::new()
            },
        }
    }
}

/// Weight-graded coordinate spaces of C¹ and C² with the differential.
pub struct Complex<'a, F> {
    alg: &'a LieAlgebra<F>,
    diff: Differential<'a, F>,
    weights: Vec<Weight>,
    c1: BTreeMap<Weight, Vec<Coord>>,
    c2: BTreeMap<Weight, Vec<Coord>>,
}

impl<'a, F: Field> Complex<'a, F> {
    pub fn new(alg: &'a LieAlgebra<F>) -> Result<Self> {
        let weights = alg
            .weights()
            .ok_or_else(|| Error::Precondition("algebra carries no weight grading".into()))?
            .to_vec();
        let n = alg.dim();
        let graded = |k: usize| {
            let mut m: BTreeMap<Weight, Vec<Coord>> = BTreeMap::new();
            for a in tuples(n, k) {
                for v in 0..n {
                    m.entry(coordinate_weight(&weights, &a, v))
                        .or_default()
                        .push((a, v));
                }
            }
            m
        };
        let c1 = graded(1);
        let c2 = graded(2);
        Ok(Complex {
            alg,
            diff: Differential::new(alg),
            weights,
            c1,
            c2,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra<F> {
        self.alg
    }

    pub fn differential(&self) -> &Differential<'a, F> {
        &self.diff
    }

    pub fn c2_weights(&self) -> impl Iterator<Item = &Weight> {
        self.c2.keys()
    }

    fn domain(&self, degree: usize, mu: &Weight) -> &[Coord] {
        let m = if degree == 1 { &self.c1 } else { &self.c2 };
        m.get(mu).map_or(&[], Vec::as_slice)
    }

    /// Images of the domain coordinates as sparse columns, plus a row index.
    fn block_columns(
        &self,
        degree: usize,
        mu: &Weight,
    ) -> (Vec<Vec<(usize, F)>>, HashMap<Coord, usize>) {
        let mut rows: HashMap<Coord, usize> = HashMap::new();
        let cols = self
            .domain(degree, mu)
            .iter()
            .map(|(a, v)| {
                self.diff
                    .apply_coordinate(a, *v, F::one())
                    .coordinates()
                    .map(|(b, k, c)| {
                        let next = rows.len();
                        (*rows.entry((b, k)).or_insert(next), c)
                    })
                    .collect()
            })
            .collect();
        (cols, rows)
    }

    fn block_matrix(cols: &[Vec<(usize, F)>], nrows: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(nrows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for &(i, c) in col {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Rank of d restricted to C^degree of weight μ.
    pub fn block_rank(&self, degree: usize, mu: &Weight) -> usize {
        let (cols, rows) = self.block_columns(degree, mu);
        if cols.is_empty() {
            return 0;
        }
        Self::block_matrix(&cols, rows.len()).rank()
    }

    pub fn block_dims(&self, mu: &Weight) -> BlockDims {
        let c2 = self.domain(2, mu).len();
        let z2 = c2 - self.block_rank(2, mu);
        let b2 = self.block_rank(1, mu);
        BlockDims {
            weight: *mu,
            c2,
            z2,
            b2,
            h2: z2 - b2,
        }
    }

    /// Some x ∈ C^degree with dx = target, solved on the weight blocks of
    /// `target`; `None` if no such x exists.
    pub fn solve(&self, degree: usize, target: &Cochain<F>) -> Result<Option<Cochain<F>>> {
        if !(1..=2).contains(&degree) || target.degree() != degree + 1 {
            return Err(Error::Precondition(format!(
                "solving d x = c needs x of degree 1 or 2 and c one degree higher (got {} → {})",
                degree,
                target.degree()
            )));
        }
        let parts = target.weight_components(self.alg)?;
        let n = self.alg.dim();
        let mut solution = Cochain::zero(degree, n);
        for (mu, part) in parts {
            let (cols, mut rows) = self.block_columns(degree, &mu);
            let mut rhs_coords = Vec::new();
            for (a, k, c) in part.coordinates() {
                match rows.get(&(a, k)) {
                    Some(&r) => rhs_coords.push((r, c)),
                    None => return Ok(None),
                }
            }
            let nrows = rows.len();
            rows.clear();
            let m = Self::block_matrix(&cols, nrows);
            let mut rhs = vec![F::zero(); nrows];
            for (r, c) in rhs_coords {
                rhs[r] = c;
            }
            let Some(x) = m.solve(&rhs)? else {
                return Ok(None);
            };
            let dom = self.domain(degree, &mu);
            let piece = Cochain::from_coordinates(
                degree,
                n,
                x.iter().enumerate().map(|(j, &c)| (dom[j].0, dom[j].1, c)),
            );
            solution = solution.add(&piece)?;
        }
        Ok(Some(solution))
    }

    pub fn h2_summary(&self) -> Result<H2Summary<F>> {
        let weights: Vec<Weight> = self.c2.keys().copied().collect();
        let dims: Vec<BlockDims> = weights.par_iter().map(|mu| self.block_dims(mu)).collect();
        let nonzero: Vec<BlockDims> = dims.iter().filter(|d| d.h2 > 0).copied().collect();
        let total = nonzero.iter().map(|d| d.h2).sum();
        let cocycles = nonzero
            .iter()
            .filter(|d| d.weight.is_h2_weight())
            .map(|d| basis_cocycle(self.alg, d.weight).map(|c| (d.weight, c)))
            .collect::<Result<_>>()?;
        Ok(H2Summary {
            total,
            blocks_examined: weights.len(),
            nonzero,
            cocycles,
        })
    }

    pub fn is_cocycle(&self, c: &Cochain<F>) -> Result<bool> {
        Ok(self.diff.apply(c)?.is_zero())
    }

    /// Some φ with dφ = c for a 3-cochain c, or `None`.
    pub fn is_coboundary(&self, c: &Cochain<F>) -> Result<Option<Cochain<F>>> {
        if c.degree() != 3 {
            return Err(Error::Precondition(
                "is_coboundary expects a 3-cochain".into(),
            ));
        }
        self.solve(2, c)
    }

    /// Whether two 2-cocycles represent the same class in H².
    pub fn classes_equal(&self, a: &Cochain<F>, b: &Cochain<F>) -> Result<bool> {
        if a.degree() != 2 || b.degree() != 2 {
            return Err(Error::Precondition(
                "classes_equal expects 2-cochains".into(),
            ));
        }
        if !self.is_cocycle(a)? || !self.is_cocycle(b)? {
            return Err(Error::NotACocycle);
        }
        Ok(self.solve(1, &a.add(b)?)?.is_some())
    }

    /// Weight table of the underlying algebra.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }
}

pub fn h2_summary<F: Field>(alg: &LieAlgebra<F>) -> Result<H2Summary<F>> {
    Complex::new(alg)?.h2_summary()
}

pub fn is_coboundary<F: Field>(alg: &LieAlgebra<F>, c: &Cochain<F>) -> Result<Option<Cochain<F>>> {
    Complex::new(alg)?.is_coboundary(c)
}

pub fn classes_equal<F: Field>(
    alg: &LieAlgebra<F>,
    a: &Cochain<F>,
    b: &Cochain<F>,
) -> Result<bool> {
    Complex::new(alg)?.classes_equal(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_quotient;
    use crate::cochain::{differential, set_count};
    use crate::field::Gf2;
    use crate::rootsys::{decompositions, h2_weights};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mu_star() -> Weight {
        Weight([1, -1, 1, -1, 1, -1])
    }

    #[test]
    fn basis_cocycle_shape() {
        let l = build_quotient::<Gf2>();
        let psi = basis_cocycle(&l, mu_star()).unwrap();
        // oracle: every unordered pair inside a three-root decomposition
        let decs = decompositions(mu_star(), 3, 0);
        assert_eq!(decs.len(), 6);
        assert_eq!(set_count(&l, &psi), 6 * 3);
        assert_eq!(psi.len(), 18);
        for d in &decs {
            for skip in 0..3 {
                let pair: Vec<usize> = (0..3)
                    .filter(|&k| k != skip)
                    .map(|k| {
                        let (i, j) = (-d[k]).as_root().unwrap();
                        l.root_index(i as u8 + 1, j as u8 + 1)
                    })
                    .collect();
                let (i, j) = d[skip].as_root().unwrap();
                let v = psi.evaluate_basis(&pair).unwrap();
                assert_eq!(
                    v,
                    AlgElement::basis(34, l.root_index(i as u8 + 1, j as u8 + 1))
                );
            }
        }
        assert!(basis_cocycle(&l, Weight::root(0, 1)).is_err());
    }

    #[test]
    fn every_basis_cocycle_is_closed() {
        let l = build_quotient::<Gf2>();
        for mu in h2_weights() {
            let psi = basis_cocycle(&l, mu).unwrap();
            assert!(differential(&l, &psi).unwrap().is_zero(), "{mu}");
            assert_eq!(psi.homogeneous_weight(&l).unwrap(), Some(mu));
        }
    }

    #[test]
    fn h2_of_the_quotient() {
        let l = build_quotient::<Gf2>();
        let s = h2_summary(&l).unwrap();
        assert_eq!(s.total, 20);
        assert_eq!(s.nonzero.len(), 20);
        for b in &s.nonzero {
            assert!(b.weight.is_h2_weight());
            assert_eq!((b.h2, b.b2), (1, 0));
        }
        assert_eq!(s.cocycles.len(), 20);
    }

    #[test]
    fn h2_invariant_under_basis_reordering() {
        let l = build_quotient::<Gf2>();
        let base = h2_summary(&l).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut perm: Vec<usize> = (0..34).collect();
        for i in (1..34).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let p = l.permuted(&perm).unwrap();
        let s = Complex::new(&p).unwrap().h2_summary().unwrap();
        assert_eq!(s.total, base.total);
        assert_eq!(s.nonzero, base.nonzero);
    }

    #[test]
    fn coboundary_solving() {
        let l = build_quotient::<Gf2>();
        let cx = Complex::new(&l).unwrap();
        let zero = Cochain::<Gf2>::zero(3, 34);
        assert!(cx.is_coboundary(&zero).unwrap().is_some());
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let phi = Cochain::<Gf2>::random(&mut rng, 2, 34, 0.003);
        let dphi = differential(&l, &phi).unwrap();
        let sol = cx.is_coboundary(&dphi).unwrap().unwrap();
        assert_eq!(differential(&l, &sol).unwrap(), dphi);
    }

    #[test]
    fn non_exact_three_cochain_is_rejected() {
        // Certify by rank comparison that a single coordinate of C³ at the
        // weight 3ε₁+ε₂+ε₃−ε₄−ε₅−3ε₆ lies outside the image of d.
        let l = build_quotient::<Gf2>();
        let cx = Complex::new(&l).unwrap();
        let mu = Weight([1, 1, 1, -1, -1, -1]);
        let psi = basis_cocycle(&l, mu).unwrap();
        let (cols, rows) = cx.block_columns(2, &mu);
        let base_rank = Complex::block_matrix(&cols, rows.len()).rank();
        // candidate: ψ_μ's value placed on a triple (first entry + a Cartan arg)
        let (args, value) = psi.entries().next().unwrap();
        let mut c = Cochain::zero(3, 34);
        let mut a = args.to_vec();
        a.push(0);
        c.add_entry(&a, value).unwrap();
        let coords: Vec<_> = c.coordinates().collect();
        let mut ext_cols = cols.clone();
        let mut rows2 = rows.clone();
        let col = coords
            .iter()
            .map(|&(b, k, x)| {
                let next = rows2.len();
                (*rows2.entry((b, k)).or_insert(next), x)
            })
            .collect();
        ext_cols.push(col);
        let ext_rank = Complex::block_matrix(&ext_cols, rows2.len()).rank();
        assert_eq!(
            ext_rank,
            base_rank + 1,
            "candidate must be outside the image"
        );
        assert!(cx.is_coboundary(&c).unwrap().is_none());
    }

    #[test]
    fn class_comparison() {
        let l = build_quotient::<Gf2>();
        let cx = Complex::new(&l).unwrap();
        let w = h2_weights();
        let psi1 = basis_cocycle(&l, w[0]).unwrap();
        let psi2 = basis_cocycle(&l, w[5]).unwrap();
        assert!(cx.classes_equal(&psi1, &psi1).unwrap());
        assert!(!cx.classes_equal(&psi1, &psi2).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = Cochain::<Gf2>::random(&mut rng, 1, 34, 0.1);
        let shifted = psi1.add(&differential(&l, &f).unwrap()).unwrap();
        assert!(cx.classes_equal(&psi1, &shifted).unwrap());
        let junk = Cochain::<Gf2>::random(&mut rng, 2, 34, 0.01);
        assert!(matches!(
            cx.classes_equal(&psi1, &junk),
            Err(Error::NotACocycle)
        ));
    }
}
