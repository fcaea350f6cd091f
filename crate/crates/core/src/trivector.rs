//! Trivectors w ∈ Λ³V, dim V = 6: canonical orbit representatives, rank,
//! and the correspondence with classes in H²(L, L).

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::LieAlgebra;
use crate::cochain::Cochain;
use crate::cohomology::{basis_cocycle, Complex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::rootsys::{triple_of_weight, triples, weight_of_triple, N};

/// Representatives of the GL(V)-orbits on Λ³V.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OrbitTag {
    I,
    II,
    III,
    IV,
    V,
}

impl OrbitTag {
    pub const ALL: [OrbitTag; 5] = [
        OrbitTag::I,
        OrbitTag::II,
        OrbitTag::III,
        OrbitTag::IV,
        OrbitTag::V,
    ];
}

impl std::str::FromStr for OrbitTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(OrbitTag::I),
            "II" => Ok(OrbitTag::II),
            "III" => Ok(OrbitTag::III),
            "IV" => Ok(OrbitTag::IV),
            "V" => Ok(OrbitTag::V),
            _ => Err(Error::Parse(format!("unknown orbit tag {s:?}"))),
        }
    }
}

/// Result of [`Trivector::classify`]. Rank-6 trivectors are not split further.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    I,
    II,
    III,
    #[serde(rename = "RANK6")]
    Rank6,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::I => "I",
            Classification::II => "II",
            Classification::III => "III",
            Classification::Rank6 => "RANK6",
        })
    }
}

/// Σ c_T e_T over increasing zero-based triples T.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Trivector<F> {
    coeffs: BTreeMap<[u8; 3], F>,
}

impl<F: Field> fmt::Debug for Trivector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(t, c)| format!("{c}·e{}e{}e{}", t[0] + 1, t[1] + 1, t[2] + 1))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn sort3(t: [usize; 3]) -> Option<[u8; 3]> {
    let mut s = t;
    s.sort_unstable();
    if s[0] == s[1] || s[1] == s[2] || s[2] >= N {
        return None;
    }
    Some([s[0] as u8, s[1] as u8, s[2] as u8])
}

impl<F: Field> Trivector<F> {
    pub fn zero() -> Self {
        Trivector {
            coeffs: BTreeMap::new(),
        }
    }

    /// Adds c·e_i∧e_j∧e_k (zero-based indices, any order; repeats vanish).
    pub fn add_term(&mut self, t: [usize; 3], c: F) {
        let Some(key) = sort3(t) else { return };
        let slot = self.coeffs.entry(key).or_insert_with(F::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// Builds from terms with one-based indices.
    pub fn from_terms(terms: &[[usize; 3]]) -> Self {
        let mut w = Self::zero();
        for t in terms {
            w.add_term([t[0] - 1, t[1] - 1, t[2] - 1], F::one());
        }
        w
    }

    pub fn canonical(tag: OrbitTag) -> Self {
        match tag {
            OrbitTag::I => Self::zero(),
            OrbitTag::II => Self::from_terms(&[[1, 2, 3]]),
            OrbitTag::III => Self::from_terms(&[[1, 2, 3], [1, 4, 5]]),
            OrbitTag::IV => Self::from_terms(&[[1, 5, 6], [2, 6, 4], [3, 4, 5]]),
            OrbitTag::V => Self::from_terms(&[[1, 2, 3], [4, 5, 6]]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, t: [usize; 3]) -> F {
        sort3(t)
            .and_then(|k| self.coeffs.get(&k).copied())
            .unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ([usize; 3], F)> + '_ {
        self.coeffs
            .iter()
            .map(|(t, &c)| ([t[0] as usize, t[1] as usize, t[2] as usize], c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for (t, c) in other.terms() {
            w.add_term(t, c);
        }
        w
    }

    pub fn scale(&self, s: F) -> Self {
        let mut w = Self::zero();
        for (t, c) in self.terms() {
            w.add_term(t, c * s);
        }
        w
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut w = Self::zero();
        for t in triples() {
            w.add_term(t, F::random(rng));
        }
        w
    }

    /// Dimension of the span of the double contractions ι_a ι_b w, which is
    /// the dimension of the smallest U ⊆ V with w ∈ Λ³U.
    pub fn rank(&self) -> usize {
        let mut rows = Vec::new();
        for a in 0..N {
            for b in a + 1..N {
                let mut v = vec![F::zero(); N];
                for (t, c) in self.terms() {
                    if t.contains(&a) && t.contains(&b) {
                        let third = t
                            .iter()
                            .copied()
                            .find(|&x| x != a && x != b)
                            .expect("three distinct");
                        v[third] += c;
                    }
                }
                rows.push(v);
            }
        }
        Matrix::from_rows(&rows).expect("rectangular").rank()
    }

    pub fn classify(&self) -> Result<Classification> {
        match self.rank() {
            0 => Ok(Classification::I),
            3 => Ok(Classification::II),
            5 => Ok(Classification::III),
            6 => Ok(Classification::Rank6),
            r => Err(Error::Internal(format!("trivector of impossible rank {r}"))),
        }
    }

    /// g·w with g acting on V by e_i ↦ Σ_k g_{ki} e_k.
    pub fn act(&self, g: &Matrix<F>) -> Result<Self> {
        if g.rows() != N || g.cols() != N {
            return Err(Error::DimensionMismatch("GL(6) element must be 6x6".into()));
        }
        let mut w = Self::zero();
        for (t, c) in self.terms() {
            for out in triples() {
                // 3×3 minor; determinant = permanent in characteristic 2
                let m = |r: usize, s: usize| g.get(out[r], t[s]);
                let det = m(0, 0) * (m(1, 1) * m(2, 2) + m(1, 2) * m(2, 1))
                    + m(0, 1) * (m(1, 0) * m(2, 2) + m(1, 2) * m(2, 0))
                    + m(0, 2) * (m(1, 0) * m(2, 1) + m(1, 1) * m(2, 0));
                w.add_term(out, det * c);
            }
        }
        Ok(w)
    }

    /// Σ c_T e_T ↦ Σ c_T² ψ_{μ(T)}.
    pub fn to_cocycle(&self, alg: &LieAlgebra<F>) -> Result<Cochain<F>> {
        let mut z = Cochain::zero(2, alg.dim());
        for (t, c) in self.terms() {
            let psi = basis_cocycle(alg, weight_of_triple(&t))?;
            z = z.add(&psi.scale(c.frobenius()))?;
        }
        Ok(z)
    }

    /// Inverse of [`to_cocycle`](Self::to_cocycle) on cohomology classes:
    /// reads the coefficient of ψ_μ in each H² weight component of `z` and
    /// takes its square root.
    pub fn from_class(cx: &Complex<'_, F>, z: &Cochain<F>) -> Result<Self> {
        if z.degree() != 2 {
            return Err(Error::Precondition("from_class expects a 2-cochain".into()));
        }
        if !cx.is_cocycle(z)? {
            return Err(Error::NotACocycle);
        }
        let alg = cx.algebra();
        let comps = z.weight_components(alg)?;
        let mut w = Self::zero();
        for (mu, part) in comps {
            let Some(t) = triple_of_weight(&mu) else {
                continue;
            };
            let psi = basis_cocycle(alg, mu)?;
            let (args, value) = psi.entries().next().expect("ψ_μ is nonzero");
            let (k, _) = value.support().next().expect("nonzero value");
            let lambda = part.get(args).map_or(F::zero(), |v| v.0[k]);
            // Z²_μ is spanned by ψ_μ
            if part != psi.scale(lambda) {
                return Err(Error::Internal(format!(
                    "weight-{mu} component of a cocycle is not a multiple of ψ_μ"
                )));
            }
            w.add_term(t, lambda.sqrt());
        }
        Ok(w)
    }

    pub fn to_doc(&self) -> TrivectorDoc {
        TrivectorDoc {
            coeffs: self
                .terms()
                .map(|(t, c)| TermDoc {
                    triple: [t[0] + 1, t[1] + 1, t[2] + 1],
                    value: c.to_hex(),
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &TrivectorDoc) -> Result<Self> {
        let mut w = Self::zero();
        for (n, term) in doc.coeffs.iter().enumerate() {
            let t = term.triple;
            if t.iter().any(|&i| !(1..=N).contains(&i))
                || sort3([t[0] - 1, t[1] - 1, t[2] - 1]).is_none()
            {
                return Err(Error::Parse(format!(
                    "coeffs[{n}].triple: expected three distinct indices in 1..=6, got {t:?}"
                )));
            }
            let c = F::from_hex(&term.value)
                .map_err(|e| Error::Parse(format!("coeffs[{n}].value: {e}")))?;
            w.add_term([t[0] - 1, t[1] - 1, t[2] - 1], c);
        }
        Ok(w)
    }

    /// u₁ ∧ u₂ ∧ u₃ for vectors in V.
    pub fn wedge(u: &[F; N], v: &[F; N], x: &[F; N]) -> Self {
        let mut g = Matrix::zeros(N, N);
        for k in 0..N {
            g.set(k, 0, u[k]);
            g.set(k, 1, v[k]);
            g.set(k, 2, x[k]);
        }
        Self::canonical(OrbitTag::II).act(&g).expect("6x6")
    }

    /// Searches for w = D₁ + D₂ with D₁, D₂ decomposable. Over GF(2) the
    /// search is exhaustive (1395 nonzero decomposables); otherwise it
    /// samples `budget` random decomposables D₁ and tests whether w − D₁ has
    /// rank 3. Diagnostic only.
    pub fn two_decomposable_split<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        budget: usize,
    ) -> Option<(Self, Self)> {
        let candidates: Vec<Self> = if F::ORDER == 2 {
            let vectors: Vec<[F; N]> = (1u8..64)
                .map(|b| {
                    std::array::from_fn(|k| {
                        if (b >> k) & 1 == 1 {
                            F::one()
                        } else {
                            F::zero()
                        }
                    })
                })
                .collect();
            let mut seen = HashSet::new();
            let mut out = Vec::new();
            for (i, u) in vectors.iter().enumerate() {
                for (j, v) in vectors.iter().enumerate().skip(i + 1) {
                    for x in vectors.iter().skip(j + 1) {
                        let d = Self::wedge(u, v, x);
                        if !d.is_zero() && seen.insert(d.clone()) {
                            out.push(d);
                        }
                    }
                }
            }
            out
        } else {
            (0..budget)
                .map(|_| {
                    let mut r = || std::array::from_fn(|_| F::random(rng));
                    let (u, v, x) = (r(), r(), r());
                    Self::wedge(&u, &v, &x)
                })
                .filter(|d| !d.is_zero())
                .collect()
        };
        candidates.into_iter().find_map(|d| {
            let rest = self.add(&d.scale(-F::one()));
            (rest.rank() == 3).then(|| (d, rest))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub triple: [usize; 3],
    pub value: String,
}

/// JSON form: `{"coeffs": [{"triple": [i, j, k], "value": "<hex>"}]}`, indices 1..=6.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivectorDoc {
    pub coeffs: Vec<TermDoc>,
}
