//! Root data for gl(m|n) and osp(m|2n).
//!
//! Weights live in the lattice spanned by `ε_1..ε_l̂, δ_1..δ_n` (l̂ = m for gl,
//! l̂ = ⌊m/2⌋ for osp) with the form `(ε_i, ε_i) = 1`, `(δ_j, δ_j) = -1`.
//! A root datum is an admissible ordering of these symbols. A root is
//! positive when its first nonzero coefficient, read in ordering sequence,
//! is positive.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{LaurentPoly, RatFunc, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    Gl,
    Osp,
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::Gl => "gl",
            Algebra::Osp => "osp",
        })
    }
}

/// A basis symbol `ε_i` or `δ_j` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    Eps(usize),
    Delta(usize),
}

impl Sym {
    pub fn parity(self) -> u8 {
        match self {
            Sym::Eps(_) => 0,
            Sym::Delta(_) => 1,
        }
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sym::Eps(i) => write!(f, "e{i}"),
            Sym::Delta(j) => write!(f, "d{j}"),
        }
    }
}

impl FromStr for Sym {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad ordering symbol '{s}'"));
        let (kind, idx) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let i: usize = idx.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match kind {
            "e" | "ε" => Ok(Sym::Eps(i)),
            "d" | "δ" => Ok(Sym::Delta(i)),
            _ => Err(bad()),
        }
    }
}

/// Integer coordinates in `(ε_1..ε_l̂, δ_1..δ_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn zero(len: usize) -> Self {
        WeightVec(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        WeightVec(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for &WeightVec {
    type Output = WeightVec;
    fn add(self, rhs: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVec {
    type Output = WeightVec;
    fn sub(self, rhs: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        self.scale(-1)
    }
}

/// A root together with its parity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    pub weight: WeightVec,
    pub parity: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RootDatum {
    algebra: Algebra,
    m: usize,
    n: usize,
    #[serde(serialize_with = "ser_ordering")]
    ordering: Vec<Sym>,
}

fn ser_ordering<S: serde::Serializer>(o: &[Sym], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(o.iter().map(Sym::to_string))
}

impl RootDatum {
    pub fn new(algebra: Algebra, m: usize, n: usize, ordering: Vec<Sym>) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::InvalidDatum("m + n must be positive".into()));
        }
        let datum = RootDatum {
            algebra,
            m,
            n,
            ordering,
        };
        datum.validate()?;
        Ok(datum)
    }

    /// The distinguished ordering: `ε` block first for gl, `δ` block first
    /// for osp.
    pub fn distinguished(algebra: Algebra, m: usize, n: usize) -> Result<Self> {
        let l = ell_hat(algebra, m);
        let eps = (1..=l).map(Sym::Eps);
        let del = (1..=n).map(Sym::Delta);
        let ordering = match algebra {
            Algebra::Gl => eps.chain(del).collect(),
            Algebra::Osp => del.chain(eps).collect(),
        };
        Self::new(algebra, m, n, ordering)
    }

    pub fn gl(m: usize, n: usize) -> Result<Self> {
        Self::distinguished(Algebra::Gl, m, n)
    }

    pub fn osp(m: usize, n: usize) -> Result<Self> {
        Self::distinguished(Algebra::Osp, m, n)
    }

    fn validate(&self) -> Result<()> {
        let l = self.ell_hat();
        if self.ordering.len() != l + self.n {
            return Err(Error::InvalidDatum(format!(
                "ordering has {} symbols, expected {}",
                self.ordering.len(),
                l + self.n
            )));
        }
        let (mut next_e, mut next_d) = (1, 1);
        for s in &self.ordering {
            match *s {
                Sym::Eps(i) if i == next_e && i <= l => next_e += 1,
                Sym::Delta(j) if j == next_d && j <= self.n => next_d += 1,
                _ => {
                    return Err(Error::InvalidDatum(format!(
                        "ordering {} is not admissible",
                        self.ordering_string()
                    )))
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ordering(&self) -> &[Sym] {
        &self.ordering
    }

    pub fn ell_hat(&self) -> usize {
        ell_hat(self.algebra, self.m)
    }

    /// Number of coordinates of a weight vector.
    pub fn rank_len(&self) -> usize {
        self.ell_hat() + self.n
    }

    pub fn is_distinguished(&self) -> bool {
        Self::distinguished(self.algebra, self.m, self.n)
            .map(|d| d.ordering == self.ordering)
            .unwrap_or(false)
    }

    pub fn ordering_string(&self) -> String {
        self.ordering.iter().map(Sym::to_string).collect::<Vec<_>>().join(",")
    }

    pub fn coord(&self, s: Sym) -> usize {
        match s {
            Sym::Eps(i) => i - 1,
            Sym::Delta(j) => self.ell_hat() + j - 1,
        }
    }

    /// Unit weight of a symbol.
    pub fn sym_weight(&self, s: Sym) -> WeightVec {
        let mut w = WeightVec::zero(self.rank_len());
        w.0[self.coord(s)] = 1;
        w
    }

    /// `Σ ε-parts · ε-parts − Σ δ-parts · δ-parts`.
    pub fn form(&self, a: &WeightVec, b: &WeightVec) -> Result<i64> {
        let len = self.rank_len();
        if a.len() != len || b.len() != len {
            return Err(Error::InvalidDatum(format!(
                "weight length mismatch: {} and {} for {len}",
                a.len(),
                b.len()
            )));
        }
        let l = self.ell_hat();
        Ok((0..len)
            .map(|k| {
                let p = a.0[k] * b.0[k];
                if k < l {
                    p
                } else {
                    -p
                }
            })
            .sum())
    }

    fn form_unchecked(&self, a: &WeightVec, b: &WeightVec) -> i64 {
        self.form(a, b).expect("weights built from this datum")
    }

    /// All roots with parities, in a fixed order independent of the ordering.
    pub fn roots(&self) -> Vec<Root> {
        let l = self.ell_hat();
        let n = self.n;
        let len = self.rank_len();
        let e = |i: usize| {
            let mut w = WeightVec::zero(len);
            w.0[i] = 1;
            w
        };
        let eps = |i: usize| e(i);
        let del = |j: usize| e(l + j);
        let mut out = Vec::new();
        let mut push = |w: WeightVec, parity: u8| out.push(Root { weight: w, parity });
        match self.algebra {
            Algebra::Gl => {
                for a in 0..len {
                    for b in 0..len {
                        if a != b {
                            let pa = u8::from(a >= l);
                            let pb = u8::from(b >= l);
                            push(&e(a) - &e(b), pa ^ pb);
                        }
                    }
                }
            }
            Algebra::Osp => {
                let signs = [1i64, -1];
                for i in 0..l {
                    for i2 in i + 1..l {
                        for s in signs {
                            for t in signs {
                                push(&eps(i).scale(s) + &eps(i2).scale(t), 0);
                            }
                        }
                    }
                }
                for j in 0..n {
                    for j2 in j + 1..n {
                        for s in signs {
                            for t in signs {
                                push(&del(j).scale(s) + &del(j2).scale(t), 0);
                            }
                        }
                    }
                    for s in signs {
                        push(del(j).scale(2 * s), 0);
                    }
                }
                for i in 0..l {
                    for j in 0..n {
                        for s in signs {
                            for t in signs {
                                push(&eps(i).scale(s) + &del(j).scale(t), 1);
                            }
                        }
                    }
                }
                if self.m % 2 == 1 {
                    for i in 0..l {
                        for s in signs {
                            push(eps(i).scale(s), 0);
                        }
                    }
                    for j in 0..n {
                        for s in signs {
                            push(del(j).scale(s), 1);
                        }
                    }
                }
            }
        }
        out
    }

    /// Coefficients of `w` read in ordering sequence.
    pub fn in_ordering(&self, w: &WeightVec) -> Vec<i64> {
        self.ordering.iter().map(|s| w.0[self.coord(*s)]).collect()
    }

    pub fn is_positive(&self, w: &WeightVec) -> bool {
        self.in_ordering(w).into_iter().find(|&c| c != 0).is_some_and(|c| c > 0)
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        self.roots()
            .into_iter()
            .filter(|r| self.is_positive(&r.weight))
            .collect()
    }

    /// Positive roots that are not the sum of two positive roots, sorted by
    /// their coefficient sequence in ordering order.
    pub fn simple_roots(&self) -> Vec<Root> {
        let pos = self.positive_roots();
        let weights: std::collections::HashSet<&WeightVec> = pos.iter().map(|r| &r.weight).collect();
        let mut simple: Vec<Root> = pos
            .iter()
            .filter(|r| {
                !pos.iter().any(|p| {
                    let rest = &r.weight - &p.weight;
                    weights.contains(&rest)
                })
            })
            .cloned()
            .collect();
        simple.sort_by_key(|r| {
            let c = self.in_ordering(&r.weight);
            let first = c.iter().position(|&x| x != 0).unwrap_or(usize::MAX);
            (first, c)
        });
        simple
    }

    /// Even positive roots minus odd positive roots.
    pub fn rho2(&self) -> WeightVec {
        self.positive_roots()
            .iter()
            .fold(WeightVec::zero(self.rank_len()), |acc, r| {
                if r.parity == 0 {
                    &acc + &r.weight
                } else {
                    &acc - &r.weight
                }
            })
    }

    /// `(λ + 2ρ, λ)`.
    pub fn casimir_eigenvalue(&self, lambda: &WeightVec) -> Result<i64> {
        let r = self.rho2();
        if lambda.len() != r.len() {
            return Err(Error::InvalidDatum("weight length mismatch".into()));
        }
        self.form(&(lambda + &r), lambda)
    }

    pub fn is_isotropic(&self, r: &Root) -> bool {
        r.parity == 1 && self.form_unchecked(&r.weight, &r.weight) == 0
    }

    /// Root datum obtained by the odd reflection at the simple root with
    /// index `s` (into [`simple_roots`](Self::simple_roots)).
    ///
    /// Realized as the swap of two adjacent symbols, which covers every
    /// isotropic simple root of gl and every `ε − δ` type one of osp. The
    /// `ε_l + δ_n` fork root of even-m osp leads to a positive system that no
    /// ordering realizes and is reported as unsupported.
    pub fn odd_reflection(&self, s: usize) -> Result<RootDatum> {
        let simple = self.simple_roots();
        let alpha = simple.get(s).ok_or(Error::NonIsotropicRoot(s))?;
        if !self.is_isotropic(alpha) {
            return Err(Error::NonIsotropicRoot(s));
        }
        let c = self.in_ordering(&alpha.weight);
        let nz: Vec<usize> = (0..c.len()).filter(|&k| c[k] != 0).collect();
        if nz.len() == 2 && nz[1] == nz[0] + 1 && c[nz[0]] == 1 && c[nz[1]] == -1 {
            let mut ordering = self.ordering.clone();
            ordering.swap(nz[0], nz[1]);
            return RootDatum::new(self.algebra, self.m, self.n, ordering);
        }
        Err(Error::Unsupported(format!(
            "odd reflection at simple root {s} of {self} is not realized by an ordering"
        )))
    }

    /// Weights of the natural module with parities: `ℰ_a` for gl;
    /// `±ε_i, ±δ_j` (and `0` for odd m) for osp.
    pub fn natural_weights(&self) -> Vec<(WeightVec, u8)> {
        let len = self.rank_len();
        let l = self.ell_hat();
        let unit = |k: usize| {
            let mut w = WeightVec::zero(len);
            w.0[k] = 1;
            w
        };
        match self.algebra {
            Algebra::Gl => (0..len).map(|k| (unit(k), u8::from(k >= l))).collect(),
            Algebra::Osp => {
                let mut out = Vec::new();
                for k in 0..len {
                    let p = u8::from(k >= l);
                    out.push((unit(k), p));
                    out.push((unit(k).scale(-1), p));
                }
                if self.m % 2 == 1 {
                    out.push((WeightVec::zero(len), 0));
                }
                out
            }
        }
    }

    /// `Σ_w (−1)^{[w]} q^{(w, 2ρ)}` over the natural module weights.
    pub fn sdim_q(&self) -> RatFunc {
        let r = self.rho2();
        let poly = LaurentPoly::from_terms(self.natural_weights().into_iter().map(|(w, p)| {
            let sign = if p == 1 { -1 } else { 1 };
            (self.form_unchecked(&w, &r), Rational::from_integer(sign.into()))
        }));
        RatFunc::from_poly(poly)
    }

    /// Literal form accepted by [`FromStr`], e.g. `gl 2|1 order=e1,d1,e2`.
    pub fn literal(&self) -> String {
        format!(
            "{} {}|{} order={}",
            self.algebra,
            self.m,
            self.odd_dim(),
            self.ordering_string()
        )
    }

    /// Dimension of the odd part of the natural module (`n` for gl, `2n` for osp).
    pub fn odd_dim(&self) -> usize {
        match self.algebra {
            Algebra::Gl => self.n,
            Algebra::Osp => 2 * self.n,
        }
    }
}

fn ell_hat(algebra: Algebra, m: usize) -> usize {
    match algebra {
        Algebra::Gl => m,
        Algebra::Osp => m / 2,
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}|{}) order={}",
            self.algebra,
            self.m,
            self.odd_dim(),
            self.ordering_string()
        )
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Without datum context, coordinates print positionally.
        write!(f, "{:?}", self.0)
    }
}

/// Render a weight as e.g. `e1 - d1` using the datum's symbols.
pub fn format_weight(datum: &RootDatum, w: &WeightVec) -> String {
    let l = datum.ell_hat();
    let mut out = String::new();
    for (k, &c) in w.0.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sym = if k < l { Sym::Eps(k + 1) } else { Sym::Delta(k - l + 1) };
        let mag = c.abs();
        let term = if mag == 1 {
            sym.to_string()
        } else {
            format!("{mag}{sym}")
        };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// All admissible orderings (shuffles of the ε- and δ-blocks).
pub fn admissible_orderings(algebra: Algebra, m: usize, n: usize) -> Result<Vec<RootDatum>> {
    let l = ell_hat(algebra, m);
    if l + n > 12 {
        return Err(Error::Guard(format!(
            "{} symbols exceeds the ordering enumeration limit of 12",
            l + n
        )));
    }
    let total = l + n;
    let mut out = Vec::new();
    for mask in 0u32..(1 << total) {
        if mask.count_ones() as usize != l {
            continue;
        }
        let (mut i, mut j) = (0, 0);
        let ordering = (0..total)
            .map(|pos| {
                if mask >> (total - 1 - pos) & 1 == 1 {
                    i += 1;
                    Sym::Eps(i)
                } else {
                    j += 1;
                    Sym::Delta(j)
                }
            })
            .collect();
        out.push(RootDatum::new(algebra, m, n, ordering)?);
    }
    out.reverse();
    Ok(out)
}

/// Parses `gl M|N [order=...]` or `osp M|N [order=...]`. For osp the odd
/// dimension `N` is the size of the symplectic block and must be even.
impl FromStr for RootDatum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut toks = s.split_whitespace();
        let alg = match toks.next() {
            Some("gl") => Algebra::Gl,
            Some("osp") => Algebra::Osp,
            other => {
                return Err(Error::Parse(format!(
                    "expected 'gl' or 'osp', found {:?}",
                    other.unwrap_or("")
                )))
            }
        };
        let dims = toks
            .next()
            .ok_or_else(|| Error::Parse("missing dimensions 'M|N'".into()))?;
        let (a, b) = dims
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("bad dimensions '{dims}'")))?;
        let m: usize = a.parse().map_err(|_| Error::Parse(format!("bad dimension '{a}'")))?;
        let odd: usize = b.parse().map_err(|_| Error::Parse(format!("bad dimension '{b}'")))?;
        let n = match alg {
            Algebra::Gl => odd,
            Algebra::Osp => {
                if odd % 2 == 1 {
                    return Err(Error::InvalidDatum(format!(
                        "osp({m}|{odd}): the symplectic block must have even size"
                    )));
                }
                odd / 2
            }
        };
        let mut datum = RootDatum::distinguished(alg, m, n)?;
        for tok in toks {
            match tok.strip_prefix("order=") {
                Some(list) => {
                    let ordering = list
                        .split(',')
                        .filter(|x| !x.is_empty())
                        .map(Sym::from_str)
                        .collect::<Result<Vec<_>>>()?;
                    datum = RootDatum::new(alg, m, n, ordering)?;
                }
                None => return Err(Error::Parse(format!("unexpected token '{tok}'"))),
            }
        }
        Ok(datum)
    }
}

/// `1 + (q^{m-2n-1} - q^{-m+2n+1}) / (q - q^{-1})`.
pub fn osp_sdim_closed_form(m: usize, n: usize) -> RatFunc {
    let k = m as i64 - 2 * n as i64 - 1;
    &RatFunc::one() + &crate::scalar::qint(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qint;

    fn w(v: &[i64]) -> WeightVec {
        WeightVec(v.to_vec())
    }

    #[test]
    fn form_examples() {
        let d = RootDatum::gl(1, 1).unwrap();
        assert_eq!(d.form(&w(&[1, 0]), &w(&[1, 0])).unwrap(), 1);
        assert_eq!(d.form(&w(&[0, 1]), &w(&[0, 1])).unwrap(), -1);
        assert_eq!(d.form(&w(&[1, 0]), &w(&[0, 1])).unwrap(), 0);
        assert!(d.form(&w(&[1]), &w(&[0, 1])).is_err());
    }

    #[test]
    fn positive_roots_small() {
        let d = RootDatum::gl(1, 1).unwrap();
        let pos = d.positive_roots();
        assert_eq!(pos.len(), 1);
        assert_eq!(pos[0].weight, w(&[1, -1]));
        assert_eq!(pos[0].parity, 1);
        let d = RootDatum::gl(2, 0).unwrap();
        assert_eq!(d.positive_roots()[0].weight, w(&[1, -1]));
    }

    #[test]
    fn osp32_distinguished_roots() {
        // coordinates (e1, d1)
        let d = RootDatum::osp(3, 1).unwrap();
        assert_eq!(d.ordering(), &[Sym::Delta(1), Sym::Eps(1)]);
        let mut pos: Vec<(Vec<i64>, u8)> = d.positive_roots().into_iter().map(|r| (r.weight.0, r.parity)).collect();
        pos.sort();
        let mut expect = vec![
            (vec![0, 2], 0),
            (vec![1, 0], 0),
            (vec![1, 1], 1),
            (vec![-1, 1], 1),
            (vec![0, 1], 1),
        ];
        expect.sort();
        assert_eq!(pos, expect);
        let simple: Vec<_> = d.simple_roots().into_iter().map(|r| r.weight).collect();
        assert_eq!(simple, vec![w(&[-1, 1]), w(&[1, 0])]);
        assert_eq!(d.rho2(), w(&[1, -1]));
    }

    #[test]
    fn rho2_examples() {
        assert_eq!(RootDatum::gl(1, 1).unwrap().rho2(), w(&[-1, 1]));
        assert_eq!(RootDatum::gl(2, 0).unwrap().rho2(), w(&[1, -1]));
    }

    #[test]
    fn simple_roots_match_listed_forms() {
        // odd m: E1 - E2, ..., E_{l+n}
        for d in admissible_orderings(Algebra::Osp, 5, 2).unwrap() {
            let simple: Vec<_> = d.simple_roots().into_iter().map(|r| r.weight).collect();
            let o = d.ordering();
            let mut expect: Vec<WeightVec> = o
                .windows(2)
                .map(|p| &d.sym_weight(p[0]) - &d.sym_weight(p[1]))
                .collect();
            expect.push(d.sym_weight(*o.last().unwrap()));
            assert_eq!(simple, expect, "{d}");
        }
        // even m with ε_l last: E1 - E2, ..., E_{l+n-1} + E_{l+n}
        for d in admissible_orderings(Algebra::Osp, 4, 2).unwrap() {
            let o = d.ordering();
            let simple: Vec<_> = d.simple_roots().into_iter().map(|r| r.weight).collect();
            let mut expect: Vec<WeightVec> = o
                .windows(2)
                .map(|p| &d.sym_weight(p[0]) - &d.sym_weight(p[1]))
                .collect();
            let k = o.len();
            match o[k - 1] {
                Sym::Eps(_) => expect.push(&d.sym_weight(o[k - 2]) + &d.sym_weight(o[k - 1])),
                Sym::Delta(_) => expect.push(d.sym_weight(o[k - 1]).scale(2)),
            }
            assert_eq!(simple, expect, "{d}");
        }
    }

    #[test]
    fn ordering_counts() {
        assert_eq!(admissible_orderings(Algebra::Gl, 1, 1).unwrap().len(), 2);
        assert_eq!(admissible_orderings(Algebra::Gl, 2, 1).unwrap().len(), 3);
        assert_eq!(admissible_orderings(Algebra::Osp, 5, 1).unwrap().len(), 3);
        assert!(admissible_orderings(Algebra::Gl, 7, 6).is_err());
        assert_eq!(
            admissible_orderings(Algebra::Gl, 2, 1).unwrap()[0],
            RootDatum::gl(2, 1).unwrap()
        );
    }

    #[test]
    fn odd_reflection_gl11() {
        let d = RootDatum::gl(1, 1).unwrap();
        let r = d.odd_reflection(0).unwrap();
        assert_eq!(r.ordering(), &[Sym::Delta(1), Sym::Eps(1)]);
        assert_eq!(r.odd_reflection(0).unwrap(), d);
        let even = RootDatum::gl(2, 0).unwrap();
        assert!(matches!(even.odd_reflection(0), Err(Error::NonIsotropicRoot(0))));
    }

    #[test]
    fn osp_fork_reflection_unsupported() {
        let d: RootDatum = "osp 2|2 order=d1,e1".parse().unwrap();
        let simple = d.simple_roots();
        assert_eq!(simple.len(), 2);
        assert!(d.odd_reflection(0).is_ok());
        assert!(matches!(d.odd_reflection(1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn sdim_examples() {
        assert_eq!(RootDatum::gl(3, 1).unwrap().sdim_q(), qint(2));
        assert_eq!(RootDatum::osp(2, 1).unwrap().sdim_q(), RatFunc::zero());
        assert_eq!(RootDatum::osp(3, 1).unwrap().sdim_q(), RatFunc::one());
        assert_eq!(osp_sdim_closed_form(1, 1), "1 - q - q^-1".parse().unwrap());
        assert_eq!(RootDatum::osp(1, 1).unwrap().sdim_q(), osp_sdim_closed_form(1, 1));
    }

    #[test]
    fn casimir_examples() {
        let d = RootDatum::osp(3, 1).unwrap();
        assert_eq!(d.casimir_eigenvalue(&WeightVec::zero(2)).unwrap(), 0);
        assert_eq!(d.casimir_eigenvalue(&w(&[0, 1])).unwrap(), 0);
        let g = RootDatum::gl(2, 1).unwrap();
        assert_eq!(g.casimir_eigenvalue(&w(&[1, 0, 0])).unwrap(), 1);
    }

    #[test]
    fn literal_parsing() {
        let d: RootDatum = "gl 2|1 order=e1,d1,e2".parse().unwrap();
        assert_eq!(d.ordering(), &[Sym::Eps(1), Sym::Delta(1), Sym::Eps(2)]);
        assert_eq!(d.literal().parse::<RootDatum>().unwrap(), d);
        let o: RootDatum = "osp 3|2 order=d1,e1".parse().unwrap();
        assert_eq!((o.m(), o.n()), (3, 1));
        assert_eq!(o.to_string(), "osp(3|2) order=d1,e1");
        for bad in [
            "gl 0|0",
            "osp 3|3",
            "gl 2|1 order=e2,e1,d1",
            "sl 2|1",
            "gl 2",
            "gl 2|1 order=e1,d1",
        ] {
            assert!(bad.parse::<RootDatum>().is_err(), "{bad}");
        }
    }

    #[test]
    fn weight_rendering() {
        let d = RootDatum::gl(1, 1).unwrap();
        assert_eq!(format_weight(&d, &w(&[1, -1])), "e1 - d1");
        assert_eq!(format_weight(&d, &w(&[0, 2])), "2d1");
        assert_eq!(format_weight(&d, &w(&[0, 0])), "0");
    }
}
