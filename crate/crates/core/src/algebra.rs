//! Structure-constant Lie algebras, with constructors for sl(6) in the
//! Chevalley basis and its quotient by the center.
//!
//! Root vectors are realized as matrix units, E_{ε_i−ε_j} = e_i ⊗ f_j, so
//! every Chevalley structure constant reduces to 0 or 1 modulo 2.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::rootsys::{Weight, N};

/// Label of a basis vector.
///
/// String grammar: `H<k>` for the Cartan element H_{α_k}; `E+<i>-<j>` for the
/// root vector E_{ε_i−ε_j} (indices 1..6); `b<n>` for an unnamed basis vector
/// after a change of basis.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BasisLabel {
    Cartan(u8),
    Root(u8, u8),
    Generic(u16),
}

impl BasisLabel {
    pub fn is_root(&self) -> bool {
        matches!(self, BasisLabel::Root(..))
    }

    pub fn is_cartan(&self) -> bool {
        matches!(self, BasisLabel::Cartan(_))
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Cartan(k) => write!(f, "H{k}"),
            BasisLabel::Root(i, j) => write!(f, "E+{i}-{j}"),
            BasisLabel::Generic(n) => write!(f, "b{n}"),
        }
    }
}

impl FromStr for BasisLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid basis label {s:?}"));
        if let Some(rest) = s.strip_prefix("E+") {
            let (i, j) = rest.split_once('-').ok_or_else(bad)?;
            let i: u8 = i.parse().map_err(|_| bad())?;
            let j: u8 = j.parse().map_err(|_| bad())?;
            if i == j || !(1..=6).contains(&i) || !(1..=6).contains(&j) {
                return Err(bad());
            }
            Ok(BasisLabel::Root(i, j))
        } else if let Some(k) = s.strip_prefix('H') {
            let k: u8 = k.parse().map_err(|_| bad())?;
            if !(1..=5).contains(&k) {
                return Err(bad());
            }
            Ok(BasisLabel::Cartan(k))
        } else if let Some(n) = s.strip_prefix('b') {
            Ok(BasisLabel::Generic(n.parse().map_err(|_| bad())?))
        } else {
            Err(bad())
        }
    }
}

impl Serialize for BasisLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BasisLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which realization an algebra carries; the GL(6) action needs one of the
/// matrix models.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraKind {
    /// sl(6), basis H₁..H₅ then the 30 root vectors.
    Sl6,
    /// sl(6)/Z, basis H̄₁..H̄₄ then the 30 root vectors.
    Sl6ModCenter,
    Other,
}

/// Coordinate vector over an algebra's basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgElement<F>(pub Vec<F>);

impl<F: Field> AlgElement<F> {
    pub fn zero(dim: usize) -> Self {
        AlgElement(vec![F::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = F::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.0
    }

    pub fn add_scaled(&mut self, s: F, other: &Self) {
        for (a, &b) in self.0.iter_mut().zip(&other.0) {
            *a += s * b;
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, &b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    pub fn scale(&self, s: F) -> Self {
        AlgElement(self.0.iter().map(|&a| a * s).collect())
    }

    /// Nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, F)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, &x)| (i, x))
    }
}

impl<F: Field> std::ops::Add for &AlgElement<F> {
    type Output = AlgElement<F>;
    fn add(self, rhs: Self) -> AlgElement<F> {
        AlgElement(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a + b).collect())
    }
}

/// Finite-dimensional Lie algebra over a field of characteristic 2 given by
/// its structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra<F> {
    kind: AlgebraKind,
    labels: Vec<BasisLabel>,
    weights: Option<Vec<Weight>>,
    /// `table[i * dim + j]` = [b_i, b_j] as sparse (index, coefficient).
    table: Vec<Vec<(usize, F)>>,
}

impl<F: Field> LieAlgebra<F> {
    /// Builds an algebra from brackets given for i < j; the table is completed
    /// by symmetry ([x, y] = [y, x] in characteristic 2 for basis vectors)
    /// and [b_i, b_i] = 0.
    pub fn from_upper_brackets(
        kind: AlgebraKind,
        labels: Vec<BasisLabel>,
        weights: Option<Vec<Weight>>,
        upper: impl Fn(usize, usize) -> AlgElement<F>,
    ) -> Result<Self> {
        let n = labels.len();
        if let Some(w) = &weights {
            if w.len() != n {
                return Err(Error::DimensionMismatch("weight table length".into()));
            }
        }
        let mut table = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = upper(i, j);
                if v.dim() != n {
                    return Err(Error::DimensionMismatch(format!(
                        "bracket [{i},{j}] has length {}",
                        v.dim()
                    )));
                }
                let sparse: Vec<(usize, F)> = v.support().collect();
                table[j * n + i] = sparse.clone();
                table[i * n + j] = sparse;
            }
        }
        Ok(LieAlgebra {
            kind,
            labels,
            weights,
            table,
        })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> BasisLabel {
        self.labels[i]
    }

    pub fn index_of(&self, label: BasisLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn index_of_str(&self, label: &str) -> Result<usize> {
        let l: BasisLabel = label.parse()?;
        self.index_of(l)
            .ok_or_else(|| Error::Parse(format!("basis label {label:?} not in this algebra")))
    }

    /// Index of the root vector E_{ε_i−ε_j}, 1-based i, j.
    pub fn root_index(&self, i: u8, j: u8) -> usize {
        self.index_of(BasisLabel::Root(i, j))
            .expect("root vector present")
    }

    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, i: usize) -> Option<Weight> {
        self.weights.as_ref().map(|w| w[i])
    }

    /// [b_i, b_j] as sparse coordinates.
    #[inline]
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &AlgElement<F>, y: &AlgElement<F>) -> AlgElement<F> {
        let n = self.dim();
        let mut out = AlgElement::zero(n);
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                let ab = a * b;
                for &(k, c) in self.bracket_basis(i, j) {
                    out.0[k] += ab * c;
                }
            }
        }
        out
    }

    /// Matrix of ad x: column j holds [x, b_j].
    pub fn ad_matrix(&self, x: &AlgElement<F>) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, a) in x.support() {
            for j in 0..n {
                for &(k, c) in self.bracket_basis(i, j) {
                    let v = m.get(k, j) + a * c;
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Matrix<F> {
        self.ad_matrix(&AlgElement::basis(self.dim(), i))
    }

    /// First basis triple violating the Jacobi identity, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        let mut acc = vec![F::zero(); n];
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    acc.iter_mut().for_each(|x| *x = F::zero());
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for &(m, s) in self.bracket_basis(a, b) {
                            for &(r, t) in self.bracket_basis(m, c) {
                                acc[r] += s * t;
                            }
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn satisfies_jacobi(&self) -> bool {
        self.jacobi_violation().is_none()
    }

    /// Basis of the center {z : [z, x] = 0 for all x}.
    pub fn center(&self) -> Vec<AlgElement<F>> {
        let n = self.dim();
        // row (j, k), column i: coefficient of b_k in [b_i, b_j]
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                for &(k, c) in self.bracket_basis(i, j) {
                    m.set(j * n + k, i, c);
                }
            }
        }
        m.kernel_basis().into_iter().map(AlgElement).collect()
    }

    /// Same algebra with the basis reordered: new basis vector `i` is old
    /// basis vector `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.dim();
        if perm.len() != n {
            return Err(Error::DimensionMismatch("permutation length".into()));
        }
        let mut inv = vec![usize::MAX; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        if inv.contains(&usize::MAX) {
            return Err(Error::Precondition("not a permutation".into()));
        }
        let labels = perm.iter().map(|&p| self.labels[p]).collect();
        let weights = self
            .weights
            .as_ref()
            .map(|w| perm.iter().map(|&p| w[p]).collect());
        Self::from_upper_brackets(AlgebraKind::Other, labels, weights, |i, j| {
            let mut v = AlgElement::zero(n);
            for &(k, c) in self.bracket_basis(perm[i], perm[j]) {
                v.0[inv[k]] += c;
            }
            v
        })
    }

    /// Structure constants in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<Self> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch("change of basis matrix".into()));
        }
        let pinv = p.inverse()?;
        let cols: Vec<AlgElement<F>> = (0..n).map(|j| AlgElement(p.column(j))).collect();
        let labels = (0..n).map(|i| BasisLabel::Generic(i as u16)).collect();
        Self::from_upper_brackets(AlgebraKind::Other, labels, None, |i, j| {
            let br = self.bracket(&cols[i], &cols[j]);
            AlgElement(pinv.mul_vec(&br.0).expect("square"))
        })
    }

    /// Plain algebra over the same basis with no matrix model attached.
    pub fn forget_model(mut self) -> Self {
        self.kind = AlgebraKind::Other;
        self
    }

    pub fn without_weights(mut self) -> Self {
        self.weights = None;
        self
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Abelian algebra of the given dimension (tests and small examples).
    pub fn abelian(dim: usize) -> Self {
        let labels = (0..dim).map(|i| BasisLabel::Generic(i as u16)).collect();
        LieAlgebra {
            kind: AlgebraKind::Other,
            labels,
            weights: None,
            table: vec![Vec::new(); dim * dim],
        }
    }

    pub fn element_from_labels(&self, coeffs: &[(&str, F)]) -> Result<AlgElement<F>> {
        let mut v = AlgElement::zero(self.dim());
        for (l, c) in coeffs {
            v.0[self.index_of_str(l)?] += *c;
        }
        Ok(v)
    }

    /// `{label: hex}` over the support of `x`.
    pub fn element_doc(&self, x: &AlgElement<F>) -> BTreeMap<String, String> {
        x.support()
            .map(|(k, c)| (self.label(k).to_string(), c.to_hex()))
            .collect()
    }

    /// Structure constants for i < j as a serializable document.
    pub fn to_table_doc(&self) -> StructureTableDoc {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let b = self.bracket_basis(i, j);
                if b.is_empty() {
                    continue;
                }
                brackets.push(BracketDoc {
                    left: self.labels[i],
                    right: self.labels[j],
                    value: b
                        .iter()
                        .map(|&(k, c)| (self.labels[k].to_string(), c.to_hex()))
                        .collect(),
                });
            }
        }
        StructureTableDoc {
            field_degree: F::DEGREE,
            dim: n,
            labels: self.labels.clone(),
            brackets,
        }
    }

    /// Inverse of [`to_table_doc`](Self::to_table_doc); labels are taken as
    /// given and weights are recomputed from root labels when all labels are
    /// Chevalley labels.
    pub fn from_table_doc(doc: &StructureTableDoc) -> Result<Self> {
        if doc.field_degree != F::DEGREE {
            return Err(Error::Parse(format!(
                "field_degree {} does not match GF(2^{})",
                doc.field_degree,
                F::DEGREE
            )));
        }
        if doc.labels.len() != doc.dim {
            return Err(Error::Parse("labels: length differs from dim".into()));
        }
        let n = doc.dim;
        let index: BTreeMap<BasisLabel, usize> = doc
            .labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i))
            .collect();
        let mut upper: BTreeMap<(usize, usize), AlgElement<F>> = BTreeMap::new();
        for b in &doc.brackets {
            let (Some(&i), Some(&j)) = (index.get(&b.left), index.get(&b.right)) else {
                return Err(Error::Parse(format!(
                    "brackets: unknown label in [{}, {}]",
                    b.left, b.right
                )));
            };
            let mut v = AlgElement::zero(n);
            for (l, c) in &b.value {
                let l: BasisLabel = l.parse()?;
                let k = *index
                    .get(&l)
                    .ok_or_else(|| Error::Parse(format!("brackets.value: unknown label {l}")))?;
                v.0[k] += F::from_hex(c)?;
            }
            upper.insert((i.min(j), i.max(j)), v);
        }
        let weights = label_weights(&doc.labels);
        let kind = if doc.labels == sl6_labels() {
            AlgebraKind::Sl6
        } else if doc.labels == quotient_labels() {
            AlgebraKind::Sl6ModCenter
        } else {
            AlgebraKind::Other
        };
        Self::from_upper_brackets(kind, doc.labels.clone(), weights, |i, j| {
            upper
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| AlgElement::zero(n))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketDoc {
    pub left: BasisLabel,
    pub right: BasisLabel,
    pub value: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureTableDoc {
    pub field_degree: u32,
    pub dim: usize,
    pub labels: Vec<BasisLabel>,
    pub brackets: Vec<BracketDoc>,
}

fn label_weights(labels: &[BasisLabel]) -> Option<Vec<Weight>> {
    labels
        .iter()
        .map(|l| match *l {
            BasisLabel::Cartan(_) => Some(Weight::ZERO),
            BasisLabel::Root(i, j) => Some(Weight::root(i as usize - 1, j as usize - 1)),
            BasisLabel::Generic(_) => None,
        })
        .collect()
}

/// Root pairs (i, j), i ≠ j, zero-based, in basis order.
pub fn root_pairs() -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(30);
    for i in 0..N {
        for j in 0..N {
            if i != j {
                v.push((i, j));
            }
        }
    }
    v
}

fn root_labels() -> impl Iterator<Item = BasisLabel> {
    root_pairs()
        .into_iter()
        .map(|(i, j)| BasisLabel::Root(i as u8 + 1, j as u8 + 1))
}

pub fn sl6_labels() -> Vec<BasisLabel> {
    (1..=5)
        .map(BasisLabel::Cartan)
        .chain(root_labels())
        .collect()
}

pub fn quotient_labels() -> Vec<BasisLabel> {
    (1..=4)
        .map(BasisLabel::Cartan)
        .chain(root_labels())
        .collect()
}

/// Coefficient of E_{ε_i−ε_j} under [H_{α_k}, ·], k = 1..5, reduced mod 2:
/// (ε_i − ε_j)(E_kk + E_{k+1,k+1}).
fn root_on_cartan(i: usize, j: usize, k: usize) -> bool {
    let hit = |x: usize| x + 1 == k || x == k;
    hit(i) ^ hit(j)
}

/// sl(6) over GF(2^e) in the Chevalley basis {H_{α₁}, …, H_{α₅}, E_α}.
pub fn build_sl6<F: Field>() -> LieAlgebra<F> {
    let labels = sl6_labels();
    let weights = label_weights(&labels);
    let n = labels.len();
    let pairs = root_pairs();
    let root_index =
        |a: usize, b: usize| 5 + pairs.iter().position(|&p| p == (a, b)).expect("root");
    LieAlgebra::from_upper_brackets(AlgebraKind::Sl6, labels, weights, |p, q| {
        let mut v = AlgElement::zero(n);
        match (p < 5, q < 5) {
            (true, true) => {}
            (true, false) | (false, true) => {
                let (h, e) = if p < 5 { (p, q) } else { (q, p) };
                let (i, j) = pairs[e - 5];
                if root_on_cartan(i, j, h + 1) {
                    v.0[e] = F::one();
                }
            }
            (false, false) => {
                let (i, j) = pairs[p - 5];
                let (k, l) = pairs[q - 5];
                if i == l && j == k {
                    // H_{ε_i−ε_j} = Σ H_{α_m} for m between i and j
                    let (lo, hi) = (i.min(j), i.max(j));
                    for m in lo..hi {
                        v.0[m] = F::one();
                    }
                } else if j == k {
                    v.0[root_index(i, l)] = F::one();
                } else if l == i {
                    v.0[root_index(k, j)] = F::one();
                }
            }
        }
        v
    })
    .expect("consistent dimensions")
}

/// L = A / Z for A = sl(6): requires the center of `alg` to be spanned by
/// H_{α₁} + H_{α₃} + H_{α₅}; H_{α₅} is rewritten as H̄₁ + H̄₃.
pub fn quotient_by_center<F: Field>(alg: &LieAlgebra<F>) -> Result<LieAlgebra<F>> {
    if alg.kind() != AlgebraKind::Sl6 {
        return Err(Error::Precondition(
            "quotient_by_center expects sl(6)".into(),
        ));
    }
    let center = alg.center();
    let mut expected = AlgElement::zero(alg.dim());
    for k in [0, 2, 4] {
        expected.0[k] = F::one();
    }
    let spanned = center.len() == 1 && {
        let z = &center[0];
        let s = z.0[0];
        !s.is_zero() && z.scale(s.inv().expect("nonzero")) == expected
    };
    if !spanned {
        return Err(Error::Precondition(format!(
            "center has dimension {} and is not span{{H1+H3+H5}}",
            center.len()
        )));
    }
    let labels = quotient_labels();
    let weights = label_weights(&labels);
    let n = labels.len();
    // L index -> A index
    let lift = |i: usize| if i < 4 { i } else { i + 1 };
    LieAlgebra::from_upper_brackets(AlgebraKind::Sl6ModCenter, labels, weights, |i, j| {
        let mut v = AlgElement::zero(n);
        for &(k, c) in alg.bracket_basis(lift(i), lift(j)) {
            match k {
                4 => {
                    v.0[0] += c;
                    v.0[2] += c;
                }
                k if k < 4 => v.0[k] += c,
                k => v.0[k - 1] += c,
            }
        }
        v
    })
}

/// The 34-dimensional algebra L = sl(6)/Z.
pub fn build_quotient<F: Field>() -> LieAlgebra<F> {
    quotient_by_center(&build_sl6::<F>()).expect("sl(6) has center span{H1+H3+H5}")
}

/// Lift of `x` to a 6×6 matrix through the section s (E_α ↦ matrix unit,
/// H̄_k ↦ E_kk + E_{k+1,k+1}).
pub fn section<F: Field>(alg: &LieAlgebra<F>, x: &AlgElement<F>) -> Result<Matrix<F>> {
    let cartan = match alg.kind() {
        AlgebraKind::Sl6 => 5,
        AlgebraKind::Sl6ModCenter => 4,
        AlgebraKind::Other => {
            return Err(Error::Precondition(
                "algebra has no sl(6) matrix model".into(),
            ))
        }
    };
    if x.dim() != alg.dim() {
        return Err(Error::DimensionMismatch("element length".into()));
    }
    let mut m = Matrix::zeros(N, N);
    for (idx, c) in x.support() {
        if idx < cartan {
            for d in [idx, idx + 1] {
                let v = m.get(d, d) + c;
                m.set(d, d, v);
            }
        } else {
            let BasisLabel::Root(i, j) = alg.label(idx) else {
                unreachable!("non-Cartan labels are roots")
            };
            let (i, j) = (i as usize - 1, j as usize - 1);
            let v = m.get(i, j) + c;
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// Projection of a traceless 6×6 matrix back to algebra coordinates; for the
/// quotient the diagonal is read modulo the identity.
pub fn project<F: Field>(alg: &LieAlgebra<F>, m: &Matrix<F>) -> Result<AlgElement<F>> {
    let quotient = match alg.kind() {
        AlgebraKind::Sl6 => false,
        AlgebraKind::Sl6ModCenter => true,
        AlgebraKind::Other => {
            return Err(Error::Precondition(
                "algebra has no sl(6) matrix model".into(),
            ))
        }
    };
    let mut x = AlgElement::zero(alg.dim());
    let cartan = if quotient { 4 } else { 5 };
    for i in 0..N {
        for j in 0..N {
            if i != j {
                let c = m.get(i, j);
                if !c.is_zero() {
                    x.0[alg.root_index(i as u8 + 1, j as u8 + 1)] += c;
                }
            }
        }
    }
    // diag = Σ c_k (e_k + e_{k+1}): c_1 = d_1, c_k = d_k − c_{k−1}
    let mut c = [F::zero(); 5];
    let mut prev = F::zero();
    for k in 0..5 {
        c[k] = m.get(k, k) - prev;
        prev = c[k];
    }
    if c[4] != m.get(5, 5) {
        return Err(Error::Precondition("matrix is not traceless".into()));
    }
    if quotient {
        // H5 ≡ H1 + H3 modulo the identity
        c[0] += c[4];
        c[2] += c[4];
    }
    x.0[..cartan].copy_from_slice(&c[..cartan]);
    Ok(x)
}

/// g·x, the action of g ∈ GL(6) by conjugation g M g⁻¹ on the matrix model.
pub fn act_gl<F: Field>(
    g: &Matrix<F>,
    alg: &LieAlgebra<F>,
    x: &AlgElement<F>,
) -> Result<AlgElement<F>> {
    let gi = g.inverse()?;
    conjugate(g, &gi, alg, x)
}

fn conjugate<F: Field>(
    g: &Matrix<F>,
    gi: &Matrix<F>,
    alg: &LieAlgebra<F>,
    x: &AlgElement<F>,
) -> Result<AlgElement<F>> {
    let m = section(alg, x)?;
    let c = g.mul(&m)?.mul(gi)?;
    project(alg, &c)
}

/// Matrix of x ↦ g·x on the algebra (column j is g·b_j).
pub fn gl_adjoint<F: Field>(g: &Matrix<F>, alg: &LieAlgebra<F>) -> Result<Matrix<F>> {
    if g.rows() != N || g.cols() != N {
        return Err(Error::DimensionMismatch("GL(6) element must be 6x6".into()));
    }
    let gi = g.inverse()?;
    let n = alg.dim();
    let cols = (0..n)
        .map(|j| conjugate(g, &gi, alg, &AlgElement::basis(n, j)).map(|v| v.0))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(n, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf2, Gf4};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn e<F: Field>(alg: &LieAlgebra<F>, i: u8, j: u8) -> AlgElement<F> {
        AlgElement::basis(alg.dim(), alg.root_index(i, j))
    }

    #[test]
    fn label_grammar() {
        for l in sl6_labels() {
            assert_eq!(l.to_string().parse::<BasisLabel>().unwrap(), l);
        }
        assert_eq!(
            "E+1-2".parse::<BasisLabel>().unwrap(),
            BasisLabel::Root(1, 2)
        );
        assert!("E+1-1".parse::<BasisLabel>().is_err());
        assert!("H6".parse::<BasisLabel>().is_err());
        assert!("X".parse::<BasisLabel>().is_err());
    }

    #[test]
    fn sl6_basic_brackets() {
        let a = build_sl6::<Gf2>();
        assert_eq!(a.dim(), 35);
        assert_eq!(a.bracket(&e(&a, 1, 2), &e(&a, 2, 3)), e(&a, 1, 3));
        assert_eq!(
            a.bracket(&e(&a, 1, 2), &e(&a, 2, 1)),
            AlgElement::basis(35, 0)
        );
        assert!(a.satisfies_jacobi());
    }

    #[test]
    fn sl6_center() {
        let a = build_sl6::<Gf2>();
        let z = a.center();
        assert_eq!(z.len(), 1);
        let mut expected = AlgElement::zero(35);
        for k in [0, 2, 4] {
            expected.0[k] = Gf2::ONE;
        }
        assert_eq!(z[0], expected);
    }

    #[test]
    fn quotient_structure() {
        let l = build_quotient::<Gf2>();
        assert_eq!(l.dim(), 34);
        assert!(l.center().is_empty());
        assert!(l.satisfies_jacobi());
        let h = l.bracket(&e(&l, 5, 6), &e(&l, 6, 5));
        let mut expected = AlgElement::zero(34);
        expected.0[0] = Gf2::ONE;
        expected.0[2] = Gf2::ONE;
        assert_eq!(h, expected);
        assert!(quotient_by_center(&l).is_err());
    }

    #[test]
    fn abelian_center() {
        assert_eq!(LieAlgebra::<Gf2>::abelian(2).center().len(), 2);
    }

    #[test]
    fn weights_are_additive() {
        let l = build_quotient::<Gf2>();
        let w = l.weights().unwrap();
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                for &(k, _) in l.bracket_basis(i, j) {
                    assert_eq!(w[k], w[i] + w[j], "[{}, {}]", l.label(i), l.label(j));
                }
            }
        }
    }

    /// Brute-force oracle: commutators of 6×6 matrices through the section.
    fn matrix_commutator_oracle<F: Field>(alg: &LieAlgebra<F>) {
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                let x = section(alg, &AlgElement::basis(n, i)).unwrap();
                let y = section(alg, &AlgElement::basis(n, j)).unwrap();
                let c = x.mul(&y).unwrap().add(&y.mul(&x).unwrap()).unwrap();
                let expected = project(alg, &c).unwrap();
                let got = alg.bracket(&AlgElement::basis(n, i), &AlgElement::basis(n, j));
                assert_eq!(got, expected, "[{}, {}]", alg.label(i), alg.label(j));
            }
        }
    }

    #[test]
    fn table_matches_matrix_commutators() {
        matrix_commutator_oracle(&build_sl6::<Gf2>());
        matrix_commutator_oracle(&build_quotient::<Gf2>());
        matrix_commutator_oracle(&build_quotient::<Gf4>());
    }

    #[test]
    fn gl_action_identity_and_permutation() {
        let l = build_quotient::<Gf2>();
        let x = e(&l, 1, 3);
        assert_eq!(act_gl(&Matrix::identity(6), &l, &x).unwrap(), x);
        let swap = Matrix::<Gf2>::permutation(&[1, 0, 2, 3, 4, 5]);
        assert_eq!(act_gl(&swap, &l, &x).unwrap(), e(&l, 2, 3));
        assert!(matches!(
            act_gl(&Matrix::zeros(6, 6), &l, &x),
            Err(Error::Singular)
        ));
    }

    fn random_element<F: Field>(rng: &mut ChaCha8Rng, n: usize) -> AlgElement<F> {
        AlgElement((0..n).map(|_| F::random(rng)).collect())
    }

    fn automorphism_checks<F: Field>(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for alg in [build_quotient::<F>(), build_sl6::<F>()] {
            let n = alg.dim();
            for _ in 0..20 {
                let g = Matrix::<F>::random_invertible(&mut rng, 6);
                let h = Matrix::<F>::random_invertible(&mut rng, 6);
                let x = random_element::<F>(&mut rng, n);
                let y = random_element::<F>(&mut rng, n);
                let lhs = act_gl(&g, &alg, &alg.bracket(&x, &y)).unwrap();
                let rhs = alg.bracket(
                    &act_gl(&g, &alg, &x).unwrap(),
                    &act_gl(&g, &alg, &y).unwrap(),
                );
                assert_eq!(lhs, rhs);
                let gh = g.mul(&h).unwrap();
                assert_eq!(
                    act_gl(&gh, &alg, &x).unwrap(),
                    act_gl(&g, &alg, &act_gl(&h, &alg, &x).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn gl_acts_by_automorphisms() {
        automorphism_checks::<Gf2>(1);
        automorphism_checks::<Gf4>(2);
    }

    #[test]
    fn alternating_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let l = build_quotient::<Gf4>();
        for _ in 0..20 {
            let x = random_element::<Gf4>(&mut rng, 34);
            assert!(l.bracket(&x, &x).is_zero());
        }
    }

    #[test]
    fn permuted_and_rebased_algebras_stay_lie() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let l = build_quotient::<Gf2>();
        let mut perm: Vec<usize> = (0..34).collect();
        perm.reverse();
        let p = l.permuted(&perm).unwrap();
        assert!(p.satisfies_jacobi());
        let b = l
            .change_basis(&Matrix::random_invertible(&mut rng, 34))
            .unwrap();
        assert!(b.satisfies_jacobi());
        assert!(b.center().is_empty());
    }

    #[test]
    fn table_doc_round_trip() {
        let l = build_quotient::<Gf2>();
        let doc = l.to_table_doc();
        let json = serde_json::to_string(&doc).unwrap();
        let back: StructureTableDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(LieAlgebra::<Gf2>::from_table_doc(&back).unwrap(), l);
    }
}
