//! Alternating cochains C^k(L, L), k ≤ 4, with the Chevalley–Eilenberg
//! differential, the cyclic cup product of 2-cochains, the GL(6) action and
//! the weight grading.
//!
//! A cochain is stored by its values on strictly increasing index tuples. In
//! characteristic 2 an alternating map is symmetric, so any argument order
//! reads the same entry, and a repeated argument gives 0.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{gl_adjoint, AlgElement, BasisLabel, LieAlgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::rootsys::Weight;

pub const MAX_DEGREE: usize = 4;

/// Strictly increasing tuple of basis indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Args {
    len: u8,
    idx: [u8; MAX_DEGREE + 1],
}

impl Args {
    /// Sorts `indices`; `None` if an index repeats.
    pub fn new(indices: &[usize]) -> Option<Args> {
        let mut idx = [0u8; MAX_DEGREE + 1];
        for (slot, &i) in idx.iter_mut().zip(indices) {
            *slot = i as u8;
        }
        let k = indices.len();
        idx[..k].sort_unstable();
        if idx[..k].windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Args { len: k as u8, idx })
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.idx[..self.len()].iter().map(|&i| i as usize)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.iter().any(|x| x == i)
    }

    pub fn without(&self, i: usize) -> Args {
        let v: Vec<usize> = self.iter().filter(|&x| x != i).collect();
        Args::new(&v).expect("subset of distinct indices")
    }

    pub fn with(&self, extra: &[usize]) -> Option<Args> {
        let mut v = self.to_vec();
        v.extend_from_slice(extra);
        Args::new(&v)
    }
}

impl fmt::Debug for Args {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

/// Alternating k-linear map L × … × L → L.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain<F> {
    degree: usize,
    dim: usize,
    entries: BTreeMap<Args, AlgElement<F>>,
}

impl<F: Field> fmt::Debug for Cochain<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Cochain(deg {}, {} entries)",
            self.degree,
            self.entries.len()
        )
    }
}

impl<F: Field> Cochain<F> {
    pub fn zero(degree: usize, dim: usize) -> Self {
        Cochain {
            degree,
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Args, &AlgElement<F>)> {
        self.entries.iter()
    }

    /// Nonzero coordinates (tuple, value index, coefficient).
    pub fn coordinates(&self) -> impl Iterator<Item = (Args, usize, F)> + '_ {
        self.entries
            .iter()
            .flat_map(|(a, v)| v.support().map(move |(k, c)| (*a, k, c)))
    }

    /// Adds `value` at the given arguments (any order). Repeated arguments
    /// are ignored since the entry would be zero.
    pub fn add_entry(&mut self, args: &[usize], value: &AlgElement<F>) -> Result<()> {
        if args.len() != self.degree {
            return Err(Error::Arity {
                expected: self.degree,
                got: args.len(),
            });
        }
        if value.dim() != self.dim {
            return Err(Error::DimensionMismatch("cochain value length".into()));
        }
        if let Some(a) = Args::new(args) {
            self.add_at(a, value);
        }
        Ok(())
    }

    fn add_at(&mut self, a: Args, value: &AlgElement<F>) {
        if value.is_zero() {
            return;
        }
        let slot = self
            .entries
            .entry(a)
            .or_insert_with(|| AlgElement::zero(self.dim));
        slot.add_assign(value);
        if slot.is_zero() {
            self.entries.remove(&a);
        }
    }

    fn add_coord(&mut self, a: Args, k: usize, c: F) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .entries
            .entry(a)
            .or_insert_with(|| AlgElement::zero(self.dim));
        slot.0[k] += c;
        if slot.is_zero() {
            self.entries.remove(&a);
        }
    }

    pub fn from_coordinates(
        degree: usize,
        dim: usize,
        coords: impl IntoIterator<Item = (Args, usize, F)>,
    ) -> Self {
        let mut c = Self::zero(degree, dim);
        for (a, k, x) in coords {
            c.add_coord(a, k, x);
        }
        c
    }

    /// Stored value on a strictly increasing tuple.
    pub fn get(&self, args: &Args) -> Option<&AlgElement<F>> {
        self.entries.get(args)
    }

    /// Value on basis vectors given in any order.
    pub fn evaluate_basis(&self, args: &[usize]) -> Result<AlgElement<F>> {
        if args.len() != self.degree {
            return Err(Error::Arity {
                expected: self.degree,
                got: args.len(),
            });
        }
        Ok(Args::new(args)
            .and_then(|a| self.entries.get(&a).cloned())
            .unwrap_or_else(|| AlgElement::zero(self.dim)))
    }

    /// Multilinear alternating extension of the stored table.
    pub fn evaluate(&self, args: &[AlgElement<F>]) -> Result<AlgElement<F>> {
        if args.len() != self.degree {
            return Err(Error::Arity {
                expected: self.degree,
                got: args.len(),
            });
        }
        let mut out = AlgElement::zero(self.dim);
        let supports: Vec<Vec<(usize, F)>> = args.iter().map(|a| a.support().collect()).collect();
        let mut pick = Vec::with_capacity(self.degree);
        fn rec<F: Field>(
            c: &Cochain<F>,
            supports: &[Vec<(usize, F)>],
            pick: &mut Vec<usize>,
            coeff: F,
            out: &mut AlgElement<F>,
        ) {
            let r = pick.len();
            if r == supports.len() {
                if let Some(v) = Args::new(pick).and_then(|a| c.entries.get(&a)) {
                    out.add_scaled(coeff, v);
                }
                return;
            }
            for &(i, x) in &supports[r] {
                if pick.contains(&i) {
                    continue;
                }
                pick.push(i);
                rec(c, supports, pick, coeff * x, out);
                pick.pop();
            }
        }
        rec(self, &supports, &mut pick, F::one(), &mut out);
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (a, v) in &other.entries {
            out.add_at(*a, v);
        }
        Ok(out)
    }

    pub fn scale(&self, s: F) -> Self {
        if s.is_zero() {
            return Self::zero(self.degree, self.dim);
        }
        Cochain {
            degree: self.degree,
            dim: self.dim,
            entries: self.entries.iter().map(|(a, v)| (*a, v.scale(s))).collect(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree || self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "cochains of degree {} / dim {} and degree {} / dim {}",
                self.degree, self.dim, other.degree, other.dim
            )));
        }
        Ok(())
    }

    /// The bracket of `alg` viewed as a 2-cochain.
    pub fn from_bracket(alg: &LieAlgebra<F>) -> Self {
        let n = alg.dim();
        let mut c = Self::zero(2, n);
        for i in 0..n {
            for j in i + 1..n {
                for &(k, x) in alg.bracket_basis(i, j) {
                    c.add_coord(Args::new(&[i, j]).expect("distinct"), k, x);
                }
            }
        }
        c
    }

    /// Random cochain: each tuple is populated with probability `density`
    /// by a uniformly random value.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, degree: usize, dim: usize, density: f64) -> Self {
        let mut c = Self::zero(degree, dim);
        for a in tuples(dim, degree) {
            if rng.gen_bool(density) {
                let v = AlgElement((0..dim).map(|_| F::random(rng)).collect());
                c.add_at(a, &v);
            }
        }
        c
    }

    /// Weight of each nonzero coordinate, grouped into homogeneous parts.
    pub fn weight_components(&self, alg: &LieAlgebra<F>) -> Result<BTreeMap<Weight, Cochain<F>>> {
        let w = alg
            .weights()
            .ok_or_else(|| Error::Precondition("algebra carries no weight grading".into()))?;
        let mut out: BTreeMap<Weight, Cochain<F>> = BTreeMap::new();
        for (a, k, c) in self.coordinates() {
            let wt = coordinate_weight(w, &a, k);
            out.entry(wt)
                .or_insert_with(|| Cochain::zero(self.degree, self.dim))
                .add_coord(a, k, c);
        }
        Ok(out)
    }

    /// The common weight of all coordinates, if the cochain is nonzero and
    /// homogeneous.
    pub fn homogeneous_weight(&self, alg: &LieAlgebra<F>) -> Result<Option<Weight>> {
        let comps = self.weight_components(alg)?;
        Ok(if comps.len() == 1 {
            comps.keys().next().copied()
        } else {
            None
        })
    }

    pub fn to_doc(&self, alg: &LieAlgebra<F>) -> CochainDoc {
        CochainDoc {
            degree: self.degree,
            entries: self
                .entries
                .iter()
                .map(|(a, v)| EntryDoc {
                    args: a.iter().map(|i| alg.label(i)).collect(),
                    value: v
                        .support()
                        .map(|(k, c)| (alg.label(k).to_string(), c.to_hex()))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_doc(alg: &LieAlgebra<F>, doc: &CochainDoc) -> Result<Self> {
        if doc.degree > MAX_DEGREE {
            return Err(Error::Parse(format!(
                "degree: {} exceeds {MAX_DEGREE}",
                doc.degree
            )));
        }
        let n = alg.dim();
        let mut c = Self::zero(doc.degree, n);
        for (e, entry) in doc.entries.iter().enumerate() {
            if entry.args.len() != doc.degree {
                return Err(Error::Parse(format!(
                    "entries[{e}].args: expected {} labels, found {}",
                    doc.degree,
                    entry.args.len()
                )));
            }
            let args = entry
                .args
                .iter()
                .map(|&l| {
                    alg.index_of(l).ok_or_else(|| {
                        Error::Parse(format!("entries[{e}].args: unknown label {l}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let mut v = AlgElement::zero(n);
            for (l, x) in &entry.value {
                let k = alg
                    .index_of_str(l)
                    .map_err(|_| Error::Parse(format!("entries[{e}].value: unknown label {l}")))?;
                v.0[k] += F::from_hex(x)
                    .map_err(|err| Error::Parse(format!("entries[{e}].value.{l}: {err}")))?;
            }
            c.add_entry(&args, &v)?;
        }
        Ok(c)
    }
}

/// wt(value) − Σ wt(arguments).
pub fn coordinate_weight(weights: &[Weight], args: &Args, value: usize) -> Weight {
    args.iter().fold(weights[value], |acc, i| acc - weights[i])
}

/// All strictly increasing `k`-tuples from 0..dim in lexicographic order.
pub fn tuples(dim: usize, k: usize) -> Vec<Args> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(dim: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Args>) {
        if cur.len() == k {
            out.push(Args::new(cur).expect("increasing"));
            return;
        }
        for i in start..dim {
            cur.push(i);
            rec(dim, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(dim, k, 0, &mut cur, &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub args: Vec<BasisLabel>,
    pub value: BTreeMap<String, String>,
}

/// JSON form: `{"degree": k, "entries": [{"args": [labels], "value": {label: hex}}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainDoc {
    pub degree: usize,
    pub entries: Vec<EntryDoc>,
}

/// The Chevalley–Eilenberg differential of one algebra, with the inverse
/// bracket table precomputed.
pub struct Differential<'a, F> {
    alg: &'a LieAlgebra<F>,
    /// preimage[s]: pairs p < q with a nonzero b_s-coefficient λ in [b_p, b_q].
    preimage: Vec<Vec<(usize, usize, F)>>,
}

impl<'a, F: Field> Differential<'a, F> {
    pub fn new(alg: &'a LieAlgebra<F>) -> Self {
        let n = alg.dim();
        let mut preimage = vec![Vec::new(); n];
        for p in 0..n {
            for q in p + 1..n {
                for &(s, c) in alg.bracket_basis(p, q) {
                    preimage[s].push((p, q, c));
                }
            }
        }
        Differential { alg, preimage }
    }

    /// (dc)(x₀,…,x_k) = Σ_i [x_i, c(…x̂_i…)] + Σ_{i<j} c([x_i,x_j], …x̂_i…x̂_j…).
    pub fn apply(&self, c: &Cochain<F>) -> Result<Cochain<F>> {
        if c.degree >= MAX_DEGREE {
            return Err(Error::Precondition(format!(
                "differential defined for degree ≤ {}, got {}",
                MAX_DEGREE - 1,
                c.degree
            )));
        }
        if c.dim != self.alg.dim() {
            return Err(Error::DimensionMismatch(
                "cochain and algebra dimensions".into(),
            ));
        }
        let mut acc: HashMap<Args, AlgElement<F>> = HashMap::new();
        for (s, v) in &c.entries {
            self.accumulate(s, v, &mut acc);
        }
        Ok(self.finish(c.degree + 1, acc))
    }

    /// d of the cochain with a single coordinate c at (args, value index).
    pub fn apply_coordinate(&self, args: &Args, value: usize, coeff: F) -> Cochain<F> {
        let mut v = AlgElement::zero(self.alg.dim());
        v.0[value] = coeff;
        let mut acc = HashMap::new();
        self.accumulate(args, &v, &mut acc);
        self.finish(args.len() + 1, acc)
    }

    fn accumulate(&self, s: &Args, v: &AlgElement<F>, acc: &mut HashMap<Args, AlgElement<F>>) {
        let n = self.alg.dim();
        let alg = self.alg;
        // [x_y, c(S)] on X = S ∪ {y}
        for y in 0..n {
            if s.contains(y) {
                continue;
            }
            let mut br = AlgElement::zero(n);
            let mut any = false;
            for (m, a) in v.support() {
                for &(k, b) in alg.bracket_basis(y, m) {
                    br.0[k] += a * b;
                    any = true;
                }
            }
            if any && !br.is_zero() {
                let x = s.with(&[y]).expect("y not in S");
                acc.entry(x)
                    .or_insert_with(|| AlgElement::zero(n))
                    .add_assign(&br);
            }
        }
        // c([x_p, x_q], rest) with rest ∪ {s_i} = S
        for si in s.iter() {
            let rest = s.without(si);
            for &(p, q, lam) in &self.preimage[si] {
                if rest.contains(p) || rest.contains(q) {
                    continue;
                }
                let x = rest.with(&[p, q]).expect("distinct");
                acc.entry(x)
                    .or_insert_with(|| AlgElement::zero(n))
                    .add_scaled(lam, v);
            }
        }
    }

    fn finish(&self, degree: usize, acc: HashMap<Args, AlgElement<F>>) -> Cochain<F> {
        Cochain {
            degree,
            dim: self.alg.dim(),
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }
}

pub fn differential<F: Field>(alg: &LieAlgebra<F>, c: &Cochain<F>) -> Result<Cochain<F>> {
    Differential::new(alg).apply(c)
}

fn check_degree_two<F: Field>(alg: &LieAlgebra<F>, c: &Cochain<F>) -> Result<()> {
    if c.degree != 2 {
        return Err(Error::Precondition(format!(
            "expected a 2-cochain, got degree {}",
            c.degree
        )));
    }
    if c.dim != alg.dim() {
        return Err(Error::DimensionMismatch(
            "cochain and algebra dimensions".into(),
        ));
    }
    Ok(())
}

/// (a ∪ b)(x, y, z) = a(b(x, y), z) + a(b(y, z), x) + a(b(z, x), y).
pub fn cup<F: Field>(alg: &LieAlgebra<F>, a: &Cochain<F>, b: &Cochain<F>) -> Result<Cochain<F>> {
    check_degree_two(alg, a)?;
    check_degree_two(alg, b)?;
    let n = alg.dim();
    let lookup: HashMap<Args, &AlgElement<F>> = a.entries.iter().map(|(k, v)| (*k, v)).collect();
    let mut acc: HashMap<Args, AlgElement<F>> = HashMap::new();
    for (pq, w) in &b.entries {
        for z in 0..n {
            if pq.contains(z) {
                continue;
            }
            let mut val = AlgElement::zero(n);
            let mut any = false;
            for (m, c) in w.support() {
                if let Some(av) = Args::new(&[m, z]).and_then(|k| lookup.get(&k)) {
                    val.add_scaled(c, av);
                    any = true;
                }
            }
            if any && !val.is_zero() {
                let x = pq.with(&[z]).expect("z not in pair");
                acc.entry(x)
                    .or_insert_with(|| AlgElement::zero(n))
                    .add_assign(&val);
            }
        }
    }
    Ok(Cochain {
        degree: 3,
        dim: n,
        entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
    })
}

/// [a, b] = a ∪ b + b ∪ a.
pub fn cbracket<F: Field>(
    alg: &LieAlgebra<F>,
    a: &Cochain<F>,
    b: &Cochain<F>,
) -> Result<Cochain<F>> {
    cup(alg, a, b)?.add(&cup(alg, b, a)?)
}

/// Number of "sets": entries whose arguments are all root vectors and whose
/// value has no Cartan coordinate, counted once per nonzero root-vector
/// coordinate of the value. Over GF(2) every nonzero coefficient is 1.
pub fn set_count<F: Field>(alg: &LieAlgebra<F>, c: &Cochain<F>) -> usize {
    c.entries
        .iter()
        .filter(|(a, _)| a.iter().all(|i| alg.label(i).is_root()))
        .filter(|(_, v)| v.support().all(|(k, _)| alg.label(k).is_root()))
        .map(|(_, v)| v.support().count())
        .sum()
}

/// (g·c)(x₁,…,x_k) = g·c(g⁻¹x₁, …, g⁻¹x_k).
pub fn act<F: Field>(alg: &LieAlgebra<F>, g: &Matrix<F>, c: &Cochain<F>) -> Result<Cochain<F>> {
    let ad = gl_adjoint(g, alg)?;
    let ad_inv = ad.inverse()?;
    act_with(&ad, &ad_inv, c)
}

/// The action through precomputed adjoint matrices of g and g⁻¹ on L.
pub fn act_with<F: Field>(
    ad: &Matrix<F>,
    ad_inv: &Matrix<F>,
    c: &Cochain<F>,
) -> Result<Cochain<F>> {
    let n = c.dim;
    if ad.rows() != n || ad_inv.rows() != n {
        return Err(Error::DimensionMismatch(
            "adjoint matrix and cochain".into(),
        ));
    }
    // functional f_i ∘ g⁻¹ is row i of ad_inv
    let rows: Vec<Vec<(usize, F)>> = (0..n)
        .map(|i| {
            ad_inv
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, &x)| (j, x))
                .collect()
        })
        .collect();
    let mut out = Cochain::zero(c.degree, n);
    for (s, v) in &c.entries {
        let gv = AlgElement(ad.mul_vec(&v.0)?);
        if gv.is_zero() {
            continue;
        }
        let funcs: Vec<&[(usize, F)]> = s.iter().map(|i| rows[i].as_slice()).collect();
        let mut coeffs: HashMap<Args, F> = HashMap::new();
        let mut pick = Vec::with_capacity(funcs.len());
        fn rec<F: Field>(
            funcs: &[&[(usize, F)]],
            pick: &mut Vec<usize>,
            coeff: F,
            out: &mut HashMap<Args, F>,
        ) {
            let r = pick.len();
            if r == funcs.len() {
                if let Some(a) = Args::new(pick) {
                    *out.entry(a).or_insert_with(F::zero) += coeff;
                }
                return;
            }
            for &(j, x) in funcs[r] {
                if pick.contains(&j) {
                    continue;
                }
                pick.push(j);
                rec(funcs, pick, coeff * x, out);
                pick.pop();
            }
        }
        rec(&funcs, &mut pick, F::one(), &mut coeffs);
        for (a, x) in coeffs {
            if !x.is_zero() {
                out.add_at(a, &gv.scale(x));
            }
        }
    }
    Ok(out)
}
