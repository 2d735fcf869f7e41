//! Z2-graded vector spaces and sparse matrices between them.
//!
//! Operators are stored as [`SparseMat`] with rows indexed by the target
//! basis and columns by the source basis. Tensor products use the basis order
//! `i * dim(W) + j` for `v_i ⊗ w_j`; the vectorization of an operator is
//! row-major over that order.

pub mod dump;
pub mod linalg;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Field, RatFunc, Rational};

/// One basis vector: a label, a parity bit (0 even, 1 odd) and an integer
/// weight vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BasisVector {
    pub label: String,
    pub parity: u8,
    pub weight: Vec<i64>,
}

impl BasisVector {
    pub fn new(label: impl Into<String>, parity: u8, weight: Vec<i64>) -> Self {
        Self {
            label: label.into(),
            parity: parity & 1,
            weight,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuperSpace {
    basis: Vec<BasisVector>,
}

impl SuperSpace {
    pub fn new(basis: Vec<BasisVector>) -> Result<Self> {
        let mut seen = HashSet::new();
        for b in &basis {
            if !seen.insert(b.label.as_str()) {
                return Err(Error::DuplicateLabel(b.label.clone()));
            }
        }
        Ok(Self { basis })
    }

    /// The one-dimensional even space spanned by `1`.
    pub fn unit(weight_len: usize) -> Self {
        Self {
            basis: vec![BasisVector::new("1", 0, vec![0; weight_len])],
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.basis[i].parity
    }

    pub fn parities(&self) -> Vec<u8> {
        self.basis.iter().map(|b| b.parity).collect()
    }

    pub fn weight(&self, i: usize) -> &[i64] {
        &self.basis[i].weight
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis.iter().map(|b| b.label.clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].label == "1"
    }

    /// `self ⊗ other`; the unit space is a strict identity.
    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.basis {
            for b in &other.basis {
                let weight = if a.weight.len() == b.weight.len() {
                    a.weight.iter().zip(&b.weight).map(|(x, y)| x + y).collect()
                } else if a.weight.is_empty() {
                    b.weight.clone()
                } else {
                    a.weight.clone()
                };
                basis.push(BasisVector {
                    label: format!("{}⊗{}", a.label, b.label),
                    parity: (a.parity + b.parity) & 1,
                    weight,
                });
            }
        }
        SuperSpace { basis }
    }

    /// `self^{⊗r}`; `r = 0` gives the unit space.
    pub fn tensor_power(&self, r: usize) -> SuperSpace {
        let wlen = self.basis.first().map_or(0, |b| b.weight.len());
        (0..r).fold(SuperSpace::unit(wlen), |acc, _| acc.tensor(self))
    }

    /// The dual space with dual basis `b*_a`, same parities, negated weights.
    pub fn dual(&self) -> SuperSpace {
        SuperSpace {
            basis: self
                .basis
                .iter()
                .map(|b| BasisVector {
                    label: format!("{}*", b.label),
                    parity: b.parity,
                    weight: b.weight.iter().map(|w| -w).collect(),
                })
                .collect(),
        }
    }
}

/// Sparse matrix with rows indexed by the target basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMat<T> {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, T>>,
}

impl<T: Field> SparseMat<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            rows: vec![BTreeMap::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| T::one()).collect())
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in entries.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        entries: impl IntoIterator<Item = (usize, usize, T)>,
    ) -> Result<Self> {
        let mut m = Self::zeros(nrows, ncols);
        for (i, j, v) in entries {
            if i >= nrows || j >= ncols {
                return Err(Error::OutOfBounds(i, j));
            }
            m.add_at(i, j, &v);
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        self.rows.get(i).and_then(|r| r.get(&j))
    }

    pub fn entry(&self, i: usize, j: usize) -> T {
        self.get(i, j).cloned().unwrap_or_else(T::zero)
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, T> {
        &self.rows[i]
    }

    /// Set an entry; zero removes it. Panics on out-of-range indices.
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(j < self.ncols, "column {j} out of range");
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &T) {
        if v.is_zero() {
            return;
        }
        let row = &mut self.rows[i];
        match row.get_mut(&j) {
            Some(x) => {
                *x = x.add_ref(v);
                if x.is_zero() {
                    row.remove(&j);
                }
            }
            None => {
                row.insert(j, v.clone());
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn is_diagonal(&self) -> bool {
        self.iter().all(|(i, j, _)| i == j)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.is_diagonal()
            && self.nnz() == self.nrows
            && self.rows.iter().enumerate().all(|(i, r)| r[&i].is_one())
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &SparseMat<T>) -> Result<SparseMat<T>> {
        if self.ncols != rhs.nrows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let rows: Vec<BTreeMap<usize, T>> = self
            .rows
            .par_iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, T> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &rhs.rows[*k] {
                        let p = a.mul_ref(b);
                        match acc.get_mut(j) {
                            Some(x) => *x = x.add_ref(&p),
                            None => {
                                acc.insert(*j, p);
                            }
                        }
                    }
                }
                acc.retain(|_, v| !v.is_zero());
                acc
            })
            .collect();
        Ok(SparseMat {
            nrows: self.nrows,
            ncols: rhs.ncols,
            rows,
        })
    }

    fn check_same_shape(&self, rhs: &SparseMat<T>, op: &'static str) -> Result<()> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &SparseMat<T>) -> Result<SparseMat<T>> {
        self.check_same_shape(rhs, "add")?;
        let mut out = self.clone();
        for (i, j, v) in rhs.iter() {
            out.add_at(i, j, v);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &SparseMat<T>) -> Result<SparseMat<T>> {
        self.check_same_shape(rhs, "sub")?;
        let mut out = self.clone();
        for (i, j, v) in rhs.iter() {
            out.add_at(i, j, &v.neg_ref());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &T) -> SparseMat<T> {
        if s.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        self.map(|v| v.mul_ref(s))
    }

    pub fn neg(&self) -> SparseMat<T> {
        self.map(T::neg_ref)
    }

    pub fn transpose(&self) -> SparseMat<T> {
        let mut out = Self::zeros(self.ncols, self.nrows);
        for (i, j, v) in self.iter() {
            out.rows[j].insert(i, v.clone());
        }
        out
    }

    /// Entrywise map; entries mapped to zero are dropped.
    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U + Sync) -> SparseMat<U> {
        self.try_map(|v| Ok::<U, std::convert::Infallible>(f(v)))
            .unwrap_or_else(|e| match e {})
    }

    pub fn try_map<U: Field, E: Send>(
        &self,
        f: impl Fn(&T) -> std::result::Result<U, E> + Sync,
    ) -> std::result::Result<SparseMat<U>, E> {
        let rows = self
            .rows
            .par_iter()
            .map(|r| {
                let mut out = BTreeMap::new();
                for (j, v) in r {
                    let u = f(v)?;
                    if !u.is_zero() {
                        out.insert(*j, u);
                    }
                }
                Ok(out)
            })
            .collect::<std::result::Result<Vec<_>, E>>()?;
        Ok(SparseMat {
            nrows: self.nrows,
            ncols: self.ncols,
            rows,
        })
    }

    /// Ordinary (unsigned) Kronecker product.
    pub fn kron(&self, rhs: &SparseMat<T>) -> SparseMat<T> {
        let mut out = Self::zeros(self.nrows * rhs.nrows, self.ncols * rhs.ncols);
        for (a, f, x) in self.iter() {
            for (c, g, y) in rhs.iter() {
                out.rows[a * rhs.nrows + c].insert(f * rhs.ncols + g, x.mul_ref(y));
            }
        }
        out
    }

    /// Row-major vectorization `(i * ncols + j, value)`, sorted by index.
    pub fn vectorize(&self) -> Vec<(usize, T)> {
        self.iter().map(|(i, j, v)| (i * self.ncols + j, v.clone())).collect()
    }

    /// Integer power of a square matrix (non-negative exponent).
    pub fn pow(&self, k: u32) -> Result<SparseMat<T>> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.nrows, self.ncols));
        }
        let mut acc = Self::identity(self.nrows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

impl SparseMat<RatFunc> {
    /// Specialize every entry at `q = point`.
    pub fn specialize(&self, point: &Rational) -> Result<SparseMat<Rational>> {
        Ok(self.try_map(|v| v.specialize(point))?)
    }
}

impl SparseMat<Rational> {
    /// Embed a rational matrix into `Q(q)`.
    pub fn to_ratfunc(&self) -> SparseMat<RatFunc> {
        self.map(|v| RatFunc::from_rational(v.clone()))
    }
}

impl<T: Field> fmt::Debug for SparseMat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMat {}x{} [", self.nrows, self.ncols)?;
        for (i, j, v) in self.iter() {
            writeln!(f, "  ({i}, {j}) = {v}")?;
        }
        write!(f, "]")
    }
}

fn koszul<T: Field>(v: &T, odd: bool) -> T {
    if odd {
        v.neg_ref()
    } else {
        v.clone()
    }
}

/// Graded tensor product of operators `A: V -> V'` and `B: W -> W'`:
/// `(A ⊗ B)[(a,c),(f,g)] = (-1)^{[f]([c]+[g])} A[a,f] B[c,g]`.
///
/// The sign is applied entry by entry, which handles a `B` that is not
/// parity-homogeneous by splitting it into its homogeneous parts implicitly.
pub fn graded_kron<T: Field>(
    a: &SparseMat<T>,
    a_src: &[u8],
    b: &SparseMat<T>,
    b_src: &[u8],
    b_tgt: &[u8],
) -> Result<SparseMat<T>> {
    if a_src.len() != a.ncols() {
        return Err(Error::DimensionMismatch {
            op: "graded_kron (left source)",
            left: a.shape(),
            right: (a_src.len(), a_src.len()),
        });
    }
    if b_src.len() != b.ncols() || b_tgt.len() != b.nrows() {
        return Err(Error::DimensionMismatch {
            op: "graded_kron (right operand)",
            left: b.shape(),
            right: (b_tgt.len(), b_src.len()),
        });
    }
    let (bn, bm) = b.shape();
    let mut out = SparseMat::zeros(a.nrows() * bn, a.ncols() * bm);
    for (ra, f, x) in a.iter() {
        for (c, g, y) in b.iter() {
            let odd = a_src[f] & (b_tgt[c] ^ b_src[g]) == 1;
            out.rows[ra * bn + c].insert(f * bm + g, koszul(&x.mul_ref(y), odd));
        }
    }
    Ok(out)
}

/// Graded tensor product of two endomorphisms of `v` and `w`.
pub fn graded_kron_endo<T: Field>(
    a: &SparseMat<T>,
    v: &SuperSpace,
    b: &SparseMat<T>,
    w: &SuperSpace,
) -> Result<SparseMat<T>> {
    let pw = w.parities();
    graded_kron(a, &v.parities(), b, &pw, &pw)
}

/// Graded tensor product `op_1 ⊗ … ⊗ op_k` of endomorphisms of the given
/// spaces.
pub fn kron_chain<T: Field>(ops: &[SparseMat<T>], spaces: &[&SuperSpace]) -> Result<SparseMat<T>> {
    if ops.len() != spaces.len() {
        return Err(Error::DimensionMismatch {
            op: "kron_chain",
            left: (ops.len(), ops.len()),
            right: (spaces.len(), spaces.len()),
        });
    }
    let mut acc = SparseMat::identity(1);
    let mut acc_par: Vec<u8> = vec![0];
    for (op, sp) in ops.iter().zip(spaces) {
        let p = sp.parities();
        acc = graded_kron(&acc, &acc_par, op, &p, &p)?;
        acc_par = acc_par.iter().flat_map(|a| p.iter().map(move |b| a ^ b)).collect();
    }
    Ok(acc)
}

/// Leibniz action `Σ_i 1 ⊗ … ⊗ x ⊗ … ⊗ 1` of an endomorphism `x` of `v` on
/// `v^{⊗r}`, with Koszul signs.
pub fn leibniz<T: Field>(x: &SparseMat<T>, v: &SuperSpace, r: usize) -> Result<SparseMat<T>> {
    let d = v.dim();
    let total = d.pow(r as u32);
    let spaces = vec![v; r];
    let mut acc = SparseMat::zeros(total, total);
    for i in 0..r {
        let ops: Vec<SparseMat<T>> = (0..r)
            .map(|t| if t == i { x.clone() } else { SparseMat::identity(d) })
            .collect();
        acc = acc.add(&kron_chain(&ops, &spaces)?)?;
    }
    Ok(acc)
}

/// The signed flip `v ⊗ w -> (-1)^{[v][w]} w ⊗ v` from `V⊗W` to `W⊗V`.
pub fn tau<T: Field>(v: &SuperSpace, w: &SuperSpace) -> SparseMat<T> {
    let (dv, dw) = (v.dim(), w.dim());
    let mut out = SparseMat::zeros(dv * dw, dv * dw);
    for i in 0..dv {
        for j in 0..dw {
            let odd = v.parity(i) & w.parity(j) == 1;
            out.set(j * dv + i, i * dw + j, koszul(&T::one(), odd));
        }
    }
    out
}

/// Supertrace `Σ_a (-1)^{[a]} A[a,a]` of an endomorphism of `space`.
pub fn supertrace<T: Field>(a: &SparseMat<T>, space: &SuperSpace) -> Result<T> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.nrows(), a.ncols()));
    }
    if a.nrows() != space.dim() {
        return Err(Error::DimensionMismatch {
            op: "supertrace",
            left: a.shape(),
            right: (space.dim(), space.dim()),
        });
    }
    let mut acc = T::zero();
    for i in 0..a.nrows() {
        if let Some(v) = a.get(i, i) {
            acc = acc.add_ref(&koszul(v, space.parity(i) == 1));
        }
    }
    Ok(acc)
}

/// Operator `id_{V^{⊗left}} ⊗ op ⊗ id_{V^{⊗right}}` on tensor powers of `v`,
/// for an endomorphism `op` of `V^{⊗k}` of even parity.
pub fn place_even<T: Field>(op: &SparseMat<T>, dim_v: usize, left: usize, right: usize) -> SparseMat<T> {
    let l = SparseMat::<T>::identity(dim_v.pow(left as u32));
    let r = SparseMat::<T>::identity(dim_v.pow(right as u32));
    l.kron(op).kron(&r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn gl_space(m: usize, n: usize) -> SuperSpace {
        SuperSpace::new(
            (0..m + n)
                .map(|a| BasisVector::new(format!("e{}", a + 1), u8::from(a >= m), vec![]))
                .collect(),
        )
        .unwrap()
    }

    fn unit_mat(d: usize, i: usize, j: usize) -> SparseMat<Rational> {
        SparseMat::from_triplets(d, d, [(i, j, rat(1, 1))]).unwrap()
    }

    #[test]
    fn duplicate_labels_rejected() {
        let b = vec![BasisVector::new("x", 0, vec![]), BasisVector::new("x", 1, vec![])];
        assert!(matches!(SuperSpace::new(b), Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn graded_kron_sign_rule_on_gl11() {
        // (e12 ⊗ e21)(e2 ⊗ e1): sign (-1)^{[2]([2]+[1])} = -1.
        let v = gl_space(1, 1);
        let a = unit_mat(2, 0, 1);
        let b = unit_mat(2, 1, 0);
        let k = graded_kron_endo(&a, &v, &b, &v).unwrap();
        // column e2⊗e1 = 1*2+0 = 2; row e1⊗e2 = 1
        assert_eq!(k.entry(1, 2), rat(-1, 1));
        assert_eq!(k.nnz(), 1);
    }

    #[test]
    fn graded_kron_even_is_plain_kron() {
        let v = gl_space(2, 0);
        let a = unit_mat(2, 0, 1);
        let b = unit_mat(2, 1, 1);
        assert_eq!(graded_kron_endo(&a, &v, &b, &v).unwrap(), a.kron(&b));
        let id = SparseMat::<Rational>::identity(2);
        let w = gl_space(1, 1);
        assert!(graded_kron_endo(&id, &w, &id, &w).unwrap().is_identity());
    }

    #[test]
    fn tau_signs_and_involution() {
        let v = gl_space(1, 1);
        let t: SparseMat<Rational> = tau(&v, &v);
        assert_eq!(t.entry(3, 3), rat(-1, 1));
        assert_eq!(t.entry(2, 1), rat(1, 1));
        assert!(t.mul(&t).unwrap().is_identity());
        let w = gl_space(2, 1);
        let tvw: SparseMat<Rational> = tau(&v, &w);
        let twv: SparseMat<Rational> = tau(&w, &v);
        assert!(twv.mul(&tvw).unwrap().is_identity());
    }

    #[test]
    fn supertrace_of_identity() {
        for (m, n) in [(2, 1), (1, 1), (0, 3)] {
            let v = gl_space(m, n);
            let id = SparseMat::<Rational>::identity(m + n);
            assert_eq!(supertrace(&id, &v).unwrap(), rat(m as i64 - n as i64, 1));
        }
        let v = gl_space(1, 1);
        assert!(supertrace(&SparseMat::<Rational>::zeros(2, 3), &v).is_err());
    }

    #[test]
    fn tensor_space_parity_and_labels() {
        let v = gl_space(1, 1);
        let vv = v.tensor(&v);
        assert_eq!(vv.dim(), 4);
        assert_eq!(vv.parities(), vec![0, 1, 1, 0]);
        assert_eq!(vv.basis()[2].label, "e2⊗e1");
        assert_eq!(v.tensor_power(0).dim(), 1);
        assert_eq!(v.tensor_power(3).dim(), 8);
        assert_eq!(v.dual().basis()[1].label, "e2*");
    }

    #[test]
    fn mul_rejects_bad_shapes() {
        let a = SparseMat::<Rational>::zeros(2, 3);
        assert!(a.mul(&a).is_err());
        assert!(a.add(&SparseMat::zeros(3, 2)).is_err());
    }
}
