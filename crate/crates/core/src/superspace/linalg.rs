//! Exact rank and nullspace computations.
//!
//! Over `Q` rows are scaled to primitive integer vectors and reduced to
//! echelon form by fraction-free elimination (no back substitution), removing
//! the content after every step. Over a general [`Field`] a plain sparse
//! Gaussian elimination is used.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Field, RatFunc, Rational};
use crate::superspace::SparseMat;

type IntRow = Vec<(usize, BigInt)>;

/// Incremental integer row echelon form.
#[derive(Debug, Default, Clone)]
pub struct Echelon {
    pivots: HashMap<usize, IntRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Insert a sparse rational row; returns whether it raised the rank.
    pub fn insert_rational(&mut self, row: &[(usize, Rational)]) -> bool {
        self.insert(integer_row(row))
    }

    /// Insert a sparse integer row sorted by column.
    pub fn insert(&mut self, mut row: IntRow) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        normalize_content(&mut row);
        while let Some((lead, _)) = row.first() {
            match self.pivots.get(lead) {
                Some(piv) => {
                    row = eliminate(&row, piv);
                    normalize_content(&mut row);
                }
                None => {
                    self.pivots.insert(*lead, row);
                    return true;
                }
            }
        }
        false
    }
}

fn integer_row(row: &[(usize, Rational)]) -> IntRow {
    let lcm = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut out: IntRow = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(j, v)| (*j, v.numer() * (&lcm / v.denom())))
        .collect();
    out.sort_by_key(|(j, _)| *j);
    out
}

fn normalize_content(row: &mut IntRow) {
    let Some((_, first)) = row.first() else { return };
    let mut g = first.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let flip = first.is_negative();
    if !g.is_one() || flip {
        let g = if flip { -g } else { g };
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `b·row - a·piv` where `a`, `b` are the (shared) leading coefficients,
/// reduced by their gcd, so the leading column cancels.
fn eliminate(row: &IntRow, piv: &IntRow) -> IntRow {
    let a = &row[0].1;
    let b = &piv[0].1;
    let g = a.gcd(b);
    let (a, b) = (a / &g, b / &g);
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < piv.len() {
        let ci = row.get(i).map_or(usize::MAX, |x| x.0);
        let cj = piv.get(j).map_or(usize::MAX, |x| x.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, &b * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(&a * &piv[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &b * &row[i - 1].1 - &a * &piv[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

/// Rank over `Q` of a set of sparse rows.
pub fn rank_rational(rows: &[Vec<(usize, Rational)>]) -> usize {
    let mut ints: Vec<IntRow> = rows.iter().map(|r| integer_row(r)).collect();
    ints.sort_by_key(Vec::len);
    let mut ech = Echelon::new();
    for r in ints {
        ech.insert(r);
    }
    ech.rank()
}

/// Rank over `Q` of a matrix.
pub fn rank_matrix(a: &SparseMat<Rational>) -> usize {
    let rows: Vec<Vec<(usize, Rational)>> = (0..a.nrows())
        .map(|i| a.row(i).iter().map(|(j, v)| (*j, v.clone())).collect())
        .collect();
    rank_rational(&rows)
}

/// Exact nullity over `Q`: number of columns minus rank.
pub fn nullspace_dim_at(constraint: &SparseMat<Rational>) -> usize {
    constraint.ncols() - rank_matrix(constraint)
}

/// Rank over an arbitrary field by sparse Gaussian elimination.
pub fn rank_field<T: Field>(rows: &[Vec<(usize, T)>]) -> usize {
    let mut pivots: HashMap<usize, BTreeMap<usize, T>> = HashMap::new();
    for r in rows {
        let mut row: BTreeMap<usize, T> = r.iter().filter(|(_, v)| !v.is_zero()).cloned().collect();
        while let Some((&lead, lv)) = row.iter().next() {
            match pivots.get(&lead) {
                Some(piv) => {
                    let c = lv.clone();
                    for (j, pv) in piv {
                        let d = c.mul_ref(pv);
                        let nv = row.get(j).map_or_else(|| d.neg_ref(), |x| x.sub_ref(&d));
                        if nv.is_zero() {
                            row.remove(j);
                        } else {
                            row.insert(*j, nv);
                        }
                    }
                }
                None => {
                    let inv = lv.inv().expect("nonzero pivot");
                    let normed = row.iter().map(|(j, v)| (*j, v.mul_ref(&inv))).collect();
                    pivots.insert(lead, normed);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Basis of the right nullspace `{x : A x = 0}` over `Q`, via dense reduced
/// row echelon form. Intended for small systems.
pub fn nullspace_basis(rows: &[Vec<(usize, Rational)>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut mat: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut dense = vec![Rational::zero(); ncols];
            for (j, v) in r {
                dense[*j] += v;
            }
            dense
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut prow = 0;
    for col in 0..ncols {
        let Some(sel) = (prow..mat.len()).find(|&i| !mat[i][col].is_zero()) else {
            continue;
        };
        mat.swap(prow, sel);
        let inv = mat[prow][col].recip();
        for v in mat[prow].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = mat[prow].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != prow && !row[col].is_zero() {
                let c = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &c * p;
                }
            }
        }
        pivot_cols.push(col);
        prow += 1;
        if prow == mat.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -mat[r][f].clone();
            }
            v
        })
        .collect()
}

/// Outcome of a rank computation at several specialization points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankReport {
    /// Maximum rank observed; specialization can only lower rank, so this is
    /// the best lower bound for the rank over `Q(q)`.
    pub rank: usize,
    #[serde(serialize_with = "ser_point_ranks")]
    pub per_point: Vec<(Rational, usize)>,
    pub agree: bool,
}

fn ser_point_ranks<S: serde::Serializer>(v: &[(Rational, usize)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (p, r) in v {
        seq.serialize_element(&(crate::scalar::format_rational(p), r))?;
    }
    seq.end()
}

/// Rank of a set of `Q(q)` rows after specialization at each point.
pub fn rank_rows_at(rows: &[Vec<(usize, RatFunc)>], points: &[Rational]) -> Result<RankReport> {
    if points.is_empty() {
        return Err(Error::EmptyPoints);
    }
    let per_point = points
        .par_iter()
        .map(|p| {
            let spec = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(j, v)| Ok((*j, v.specialize(p)?)))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((p.clone(), rank_rational(&spec)))
        })
        .collect::<Result<Vec<_>>>()?;
    let rank = per_point.iter().map(|(_, r)| *r).max().unwrap_or(0);
    let agree = per_point.iter().all(|(_, r)| *r == rank);
    Ok(RankReport { rank, per_point, agree })
}

/// Rank of a `Q(q)` matrix at each of the given points.
pub fn rank_at(a: &SparseMat<RatFunc>, points: &[Rational]) -> Result<RankReport> {
    let rows: Vec<Vec<(usize, RatFunc)>> = (0..a.nrows())
        .map(|i| a.row(i).iter().map(|(j, v)| (*j, v.clone())).collect())
        .collect();
    rank_rows_at(&rows, points)
}
