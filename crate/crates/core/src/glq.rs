//! Quantum gl(m|n) acting on its natural module and on the dual module.
//!
//! The basis of `V` follows the datum's ordering: basis vector `a` has the
//! weight `ℰ_a` of the `a`-th ordering symbol. Generators are `e_i`, `f_i`
//! (`1 ≤ i < m+n`) and `K_a^{±1}` with `K_a b_c = q^{(ℰ_a, ℰ_c)} b_c`. The
//! coproduct is `Δ(e) = e⊗k + 1⊗e`, `Δ(f) = f⊗1 + k^{-1}⊗f`, `Δ(K) = K⊗K`
//! with `k_i = K_i K_{i+1}^{-1}`, and the antipode is `S(e) = -e k^{-1}`,
//! `S(f) = -k f`, `S(K) = K^{-1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rootdata::{Algebra, RootDatum};
use crate::scalar::{q_minus_qinv, Field, RatFunc};
use crate::superspace::{graded_kron_endo, kron_chain, tau, BasisVector, SparseMat, SuperSpace};

pub type QMat = SparseMat<RatFunc>;

/// A Chevalley-type generator; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    E(usize),
    F(usize),
    K(usize),
    KInv(usize),
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(i) => write!(f, "e{i}"),
            Gen::F(i) => write!(f, "f{i}"),
            Gen::K(a) => write!(f, "K{a}"),
            Gen::KInv(a) => write!(f, "K{a}^-1"),
        }
    }
}

impl FromStr for Gen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownGenerator(s.to_string());
        let idx = |t: &str| t.parse::<usize>().ok().filter(|&i| i > 0).ok_or_else(unknown);
        if let Some(rest) = s.strip_prefix('e') {
            Ok(Gen::E(idx(rest)?))
        } else if let Some(rest) = s.strip_prefix('f') {
            Ok(Gen::F(idx(rest)?))
        } else if let Some(rest) = s.strip_prefix('K') {
            match rest.strip_suffix("^-1") {
                Some(a) => Ok(Gen::KInv(idx(a)?)),
                None => Ok(Gen::K(idx(rest)?)),
            }
        } else {
            Err(unknown())
        }
    }
}

/// Generator matrices on a module (the natural module or its dual).
#[derive(Debug, Clone)]
pub struct GlqRep {
    datum: RootDatum,
    space: SuperSpace,
    e: Vec<QMat>,
    f: Vec<QMat>,
    k: Vec<QMat>,
    kinv: Vec<QMat>,
    f_signs: Vec<i64>,
}

fn unit(d: usize, i: usize, j: usize, v: RatFunc) -> QMat {
    QMat::from_triplets(d, d, [(i, j, v)]).expect("in range")
}

fn is_odd_mat(m: &QMat, space: &SuperSpace) -> bool {
    m.iter().any(|(i, j, _)| space.parity(i) != space.parity(j))
}

/// The natural module `V` of the gl datum, with basis labels taken from the
/// ordering symbols.
pub fn natural_space(datum: &RootDatum) -> SuperSpace {
    let basis = datum
        .ordering()
        .iter()
        .map(|s| BasisVector::new(s.to_string(), s.parity(), datum.sym_weight(*s).0))
        .collect();
    SuperSpace::new(basis).expect("ordering symbols are distinct")
}

/// `(ℰ_a, ℰ_b)` for ordering positions `a`, `b`.
fn pairing(datum: &RootDatum, a: usize, b: usize) -> i64 {
    let o = datum.ordering();
    datum
        .form(&datum.sym_weight(o[a]), &datum.sym_weight(o[b]))
        .expect("same datum")
}

impl GlqRep {
    /// Natural representation. The signs of the `f_i` are found by trying
    /// `±E_{i+1,i}` against the `[e_i, f_i]` relation.
    pub fn natural(datum: &RootDatum) -> Result<Self> {
        if datum.algebra() != Algebra::Gl {
            return Err(Error::InvalidDatum(format!("{datum} is not of type gl")));
        }
        let space = natural_space(datum);
        let d = space.dim();
        let k: Vec<QMat> = (0..d)
            .map(|a| QMat::diagonal((0..d).map(|b| RatFunc::q_pow(pairing(datum, a, b))).collect()))
            .collect();
        let kinv: Vec<QMat> = (0..d)
            .map(|a| QMat::diagonal((0..d).map(|b| RatFunc::q_pow(-pairing(datum, a, b))).collect()))
            .collect();
        let e: Vec<QMat> = (0..d.saturating_sub(1))
            .map(|i| unit(d, i, i + 1, RatFunc::one()))
            .collect();
        let mut rep = GlqRep {
            datum: datum.clone(),
            space,
            e,
            f: Vec::new(),
            k,
            kinv,
            f_signs: Vec::new(),
        };
        for i in 0..d.saturating_sub(1) {
            let found = [1i64, -1].into_iter().find(|&s| {
                rep.f.push(unit(d, i + 1, i, RatFunc::from_int(s)));
                let ok = rep.check_ef(i + 1, i + 1).unwrap_or(false);
                if !ok {
                    rep.f.pop();
                }
                ok
            });
            match found {
                Some(s) => rep.f_signs.push(s),
                None => {
                    return Err(Error::Verification(format!(
                        "no sign for f{} satisfies the [e, f] relation",
                        i + 1
                    )))
                }
            }
        }
        Ok(rep)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Signs `ς_i` with `f_i ↦ ς_i E_{i+1,i}`.
    pub fn f_signs(&self) -> &[i64] {
        &self.f_signs
    }

    /// All generators `e_i, f_i, K_a, K_a^{-1}`.
    pub fn generators(&self) -> Vec<Gen> {
        let d = self.dim();
        let mut g = Vec::new();
        for i in 1..d {
            g.push(Gen::E(i));
            g.push(Gen::F(i));
        }
        for a in 1..=d {
            g.push(Gen::K(a));
            g.push(Gen::KInv(a));
        }
        g
    }

    pub fn mat(&self, g: Gen) -> Result<&QMat> {
        let (v, i) = match g {
            Gen::E(i) => (&self.e, i),
            Gen::F(i) => (&self.f, i),
            Gen::K(a) => (&self.k, a),
            Gen::KInv(a) => (&self.kinv, a),
        };
        let m = i.checked_sub(1).and_then(|j| v.get(j));
        m.ok_or_else(|| Error::UnknownGenerator(g.to_string()))
    }

    /// Parity of a generator: `[e_i] = [f_i] = [i] + [i+1]`, `K` even.
    pub fn gen_parity(&self, g: Gen) -> u8 {
        let o = self.datum.ordering();
        match g {
            Gen::E(i) | Gen::F(i) => o[i - 1].parity() ^ o[i].parity(),
            _ => 0,
        }
    }

    /// `k_i = K_i K_{i+1}^{-1}`.
    pub fn small_k(&self, i: usize) -> Result<QMat> {
        self.mat(Gen::K(i))?.mul(self.mat(Gen::KInv(i + 1))?)
    }

    pub fn small_k_inv(&self, i: usize) -> Result<QMat> {
        self.mat(Gen::KInv(i))?.mul(self.mat(Gen::K(i + 1))?)
    }

    /// `q_i = q^{(ℰ_i, ℰ_i)}`.
    fn q_i(&self, i: usize) -> RatFunc {
        RatFunc::q_pow(pairing(&self.datum, i - 1, i - 1))
    }

    /// `e_i f_j − (−1)^{[e_i][f_j]} f_j e_i = δ_ij (k_i − k_i^{-1})/(q_i − q_i^{-1})`.
    pub fn check_ef(&self, i: usize, j: usize) -> Result<bool> {
        let e = self.mat(Gen::E(i))?;
        let f = self.mat(Gen::F(j))?;
        let both_odd = self.gen_parity(Gen::E(i)) & self.gen_parity(Gen::F(j)) == 1;
        let ef = e.mul(f)?;
        let fe = f.mul(e)?;
        let lhs = if both_odd { ef.add(&fe)? } else { ef.sub(&fe)? };
        let rhs = if i == j {
            let qi = self.q_i(i);
            let denom = &qi - &qi.inv().expect("q power");
            self.small_k(i)?
                .sub(&self.small_k_inv(i)?)?
                .scale(&denom.inv().expect("q_i is not ±1"))
        } else {
            QMat::zeros(self.dim(), self.dim())
        };
        Ok(lhs == rhs)
    }

    /// Matrix of `S(x)` on this module.
    pub fn antipode(&self, g: Gen) -> Result<QMat> {
        match g {
            Gen::E(i) => Ok(self.mat(Gen::E(i))?.mul(&self.small_k_inv(i)?)?.neg()),
            Gen::F(i) => Ok(self.small_k(i)?.mul(self.mat(Gen::F(i))?)?.neg()),
            Gen::K(a) => Ok(self.mat(Gen::KInv(a))?.clone()),
            Gen::KInv(a) => Ok(self.mat(Gen::K(a))?.clone()),
        }
    }

    /// Dual module: `(x·b*)(w) = (−1)^{[x][b*]} b*(S(x) w)`, i.e.
    /// `X*[c, a] = (−1)^{[x][a]} S(x)[a, c]` on the dual basis.
    pub fn dual(&self) -> Result<GlqRep> {
        let space = self.space.dual();
        let transform = |g: Gen| -> Result<QMat> {
            let s = self.antipode(g)?;
            let px = self.gen_parity(g);
            let mut out = QMat::zeros(s.ncols(), s.nrows());
            for (a, c, v) in s.iter() {
                let odd = px & self.space.parity(a) == 1;
                out.set(c, a, if odd { v.neg_ref() } else { v.clone() });
            }
            Ok(out)
        };
        let d = self.dim();
        Ok(GlqRep {
            datum: self.datum.clone(),
            space,
            e: (1..d).map(|i| transform(Gen::E(i))).collect::<Result<_>>()?,
            f: (1..d).map(|i| transform(Gen::F(i))).collect::<Result<_>>()?,
            k: (1..=d).map(|a| transform(Gen::K(a))).collect::<Result<_>>()?,
            kinv: (1..=d).map(|a| transform(Gen::KInv(a))).collect::<Result<_>>()?,
            f_signs: self.f_signs.clone(),
        })
    }

    /// Whether `g` acts by an odd operator on this module.
    pub fn is_odd_action(&self, g: Gen) -> Result<bool> {
        Ok(is_odd_mat(self.mat(g)?, &self.space))
    }
}

/// Tensor product of the module spaces.
pub fn tensor_space(reps: &[&GlqRep]) -> SuperSpace {
    reps.iter().fold(SuperSpace::unit(0), |acc, r| acc.tensor(r.space()))
}

/// Action of `g` on `M_1 ⊗ … ⊗ M_r` through the iterated coproduct.
pub fn coproduct_action(reps: &[&GlqRep], g: Gen) -> Result<QMat> {
    let spaces: Vec<&SuperSpace> = reps.iter().map(|r| r.space()).collect();
    let r = reps.len();
    match g {
        Gen::K(_) | Gen::KInv(_) => {
            let ops = reps.iter().map(|m| m.mat(g).cloned()).collect::<Result<Vec<_>>>()?;
            kron_chain(&ops, &spaces)
        }
        Gen::E(i) => {
            let total: usize = reps.iter().map(|m| m.dim()).product();
            let mut acc = QMat::zeros(total, total);
            for j in 0..r {
                let ops = (0..r)
                    .map(|t| match t.cmp(&j) {
                        std::cmp::Ordering::Less => Ok(QMat::identity(reps[t].dim())),
                        std::cmp::Ordering::Equal => reps[t].mat(Gen::E(i)).cloned(),
                        std::cmp::Ordering::Greater => reps[t].small_k(i),
                    })
                    .collect::<Result<Vec<_>>>()?;
                acc = acc.add(&kron_chain(&ops, &spaces)?)?;
            }
            Ok(acc)
        }
        Gen::F(i) => {
            let total: usize = reps.iter().map(|m| m.dim()).product();
            let mut acc = QMat::zeros(total, total);
            for j in 0..r {
                let ops = (0..r)
                    .map(|t| match t.cmp(&j) {
                        std::cmp::Ordering::Less => reps[t].small_k_inv(i),
                        std::cmp::Ordering::Equal => reps[t].mat(Gen::F(i)).cloned(),
                        std::cmp::Ordering::Greater => Ok(QMat::identity(reps[t].dim())),
                    })
                    .collect::<Result<Vec<_>>>()?;
                acc = acc.add(&kron_chain(&ops, &spaces)?)?;
            }
            Ok(acc)
        }
    }
}

/// Action of `g` on `V^{⊗r}`.
pub fn act_tensor(rep: &GlqRep, g: Gen, r: usize) -> Result<QMat> {
    if r == 0 {
        return Err(Error::InvalidDatum("tensor power must be at least 1".into()));
    }
    let reps: Vec<&GlqRep> = vec![rep; r];
    coproduct_action(&reps, g)
}

fn require_distinguished(datum: &RootDatum) -> Result<()> {
    if datum.algebra() != Algebra::Gl || !datum.is_distinguished() {
        return Err(Error::Unsupported(format!(
            "the explicit R-matrix is available for the distinguished gl ordering only, got {datum}"
        )));
    }
    Ok(())
}

/// `R` on `V⊗V`: diagonal `q^{(ℰ_a,ℰ_a)}` on `b_a⊗b_a` (1 elsewhere) plus
/// `(q − q^{-1}) Σ_{a<b} (−1)^{[b]} e_ab ⊗ e_ba` in the graded tensor product.
pub fn rmatrix_vv(datum: &RootDatum) -> Result<QMat> {
    require_distinguished(datum)?;
    let v = natural_space(datum);
    let d = v.dim();
    let mut r = QMat::identity(d * d);
    for a in 0..d {
        r.set(a * d + a, a * d + a, RatFunc::q_pow(pairing(datum, a, a)));
    }
    let z = q_minus_qinv();
    for a in 0..d {
        for b in a + 1..d {
            let coef = if v.parity(b) == 1 { z.neg_ref() } else { z.clone() };
            let term = graded_kron_endo(&unit(d, a, b, coef), &v, &unit(d, b, a, RatFunc::one()), &v)?;
            r = r.add(&term)?;
        }
    }
    Ok(r)
}

/// Braiding `ǧ = τ ∘ R` on `V⊗V`.
pub fn braiding(datum: &RootDatum) -> Result<QMat> {
    let v = natural_space(datum);
    tau::<RatFunc>(&v, &v).mul(&rmatrix_vv(datum)?)
}

/// `ǧ^{-1} = ǧ − (q − q^{-1})·id`, a consequence of the Hecke relation.
pub fn braiding_inv(datum: &RootDatum) -> Result<QMat> {
    let g = braiding(datum)?;
    let n = g.nrows();
    g.sub(&QMat::identity(n).scale(&q_minus_qinv()))
}

/// Exponents `(ℰ_a, 2ρ)` in basis order.
pub fn rho_exponents(datum: &RootDatum) -> Vec<i64> {
    let r = datum.rho2();
    datum
        .ordering()
        .iter()
        .map(|s| datum.form(&datum.sym_weight(*s), &r).expect("same datum"))
        .collect()
}

/// `K_{2ρ} = diag(q^{(ℰ_a, 2ρ)})`.
pub fn k2rho(datum: &RootDatum) -> QMat {
    QMat::diagonal(rho_exponents(datum).into_iter().map(RatFunc::q_pow).collect())
}

/// The four duality maps of the natural module.
#[derive(Debug, Clone)]
pub struct DualityMaps {
    /// `Ω: V*⊗V → 𝕂`, `b*_a ⊗ b_c ↦ δ_ac`.
    pub omega: QMat,
    /// `Υ: 𝕂 → V⊗V*`, `1 ↦ Σ b_a ⊗ b*_a`.
    pub upsilon: QMat,
    /// `Ω′: V⊗V* → 𝕂`, `b_a ⊗ b*_c ↦ δ_ac (−1)^{[a]} q^{(ℰ_a, 2ρ)}`.
    pub omega_p: QMat,
    /// `Υ′: 𝕂 → V*⊗V`, `1 ↦ Σ (−1)^{[a]} q^{−(ℰ_a, 2ρ)} b*_a ⊗ b_a`.
    pub upsilon_p: QMat,
}

pub fn duality_maps(datum: &RootDatum) -> DualityMaps {
    let v = natural_space(datum);
    let d = v.dim();
    let ex = rho_exponents(datum);
    let sign = |a: usize| if v.parity(a) == 1 { -1 } else { 1 };
    let diag = |a: usize| a * d + a;
    let row = |vals: Vec<(usize, RatFunc)>| {
        QMat::from_triplets(1, d * d, vals.into_iter().map(|(j, x)| (0, j, x))).expect("in range")
    };
    let col = |vals: Vec<(usize, RatFunc)>| {
        QMat::from_triplets(d * d, 1, vals.into_iter().map(|(i, x)| (i, 0, x))).expect("in range")
    };
    DualityMaps {
        omega: row((0..d).map(|a| (diag(a), RatFunc::one())).collect()),
        upsilon: col((0..d).map(|a| (diag(a), RatFunc::one())).collect()),
        omega_p: row((0..d)
            .map(|a| (diag(a), &RatFunc::from_int(sign(a)) * &RatFunc::q_pow(ex[a])))
            .collect()),
        upsilon_p: col((0..d)
            .map(|a| (diag(a), &RatFunc::from_int(sign(a)) * &RatFunc::q_pow(-ex[a])))
            .collect()),
    }
}

/// Partial supertrace over the second factor of an endomorphism of `V⊗W`.
pub fn partial_supertrace_2(a: &QMat, v: &SuperSpace, w: &SuperSpace) -> Result<QMat> {
    let (dv, dw) = (v.dim(), w.dim());
    if a.shape() != (dv * dw, dv * dw) {
        return Err(Error::DimensionMismatch {
            op: "partial_supertrace_2",
            left: a.shape(),
            right: (dv * dw, dv * dw),
        });
    }
    let mut out = QMat::zeros(dv, dv);
    for (row, col, x) in a.iter() {
        let (i, c) = (row / dw, row % dw);
        let (j, c2) = (col / dw, col % dw);
        if c == c2 {
            let val = if w.parity(c) == 1 { x.neg_ref() } else { x.clone() };
            out.add_at(i, j, &val);
        }
    }
    Ok(out)
}

/// Ribbon scalar `θ` on `V`, computed as the scalar value of
/// `ptr₂((id ⊗ K_{2ρ}) ǧ)` for the distinguished datum of the same (m, n).
pub fn twist_scalar(datum: &RootDatum) -> Result<RatFunc> {
    let dist = RootDatum::gl(datum.m(), datum.n())?;
    let v = natural_space(&dist);
    let d = v.dim();
    let op = QMat::identity(d).kron(&k2rho(&dist)).mul(&braiding(&dist)?)?;
    let p = partial_supertrace_2(&op, &v, &v)?;
    let theta = p.entry(0, 0);
    if p != QMat::identity(d).scale(&theta) {
        return Err(Error::Verification(
            "partial quantum trace of the braiding is not scalar".into(),
        ));
    }
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qint;
    use crate::superspace::supertrace;

    fn q(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn gl(m: usize, n: usize) -> RootDatum {
        RootDatum::gl(m, n).unwrap()
    }

    #[test]
    fn gl11_generators() {
        let rep = GlqRep::natural(&gl(1, 1)).unwrap();
        assert_eq!(rep.mat(Gen::E(1)).unwrap(), &unit(2, 0, 1, RatFunc::one()));
        assert_eq!(rep.mat(Gen::K(1)).unwrap(), &QMat::diagonal(vec![q("q"), q("1")]));
        assert_eq!(rep.mat(Gen::K(2)).unwrap(), &QMat::diagonal(vec![q("1"), q("q^-1")]));
        // odd simple root squares to zero
        let e = rep.mat(Gen::E(1)).unwrap();
        assert!(e.mul(e).unwrap().is_zero());
    }

    #[test]
    fn f_signs_are_frozen() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (4, 0)] {
            let rep = GlqRep::natural(&gl(m, n)).unwrap();
            assert!(rep.f_signs().iter().all(|&s| s == 1), "gl({m}|{n})");
        }
    }

    #[test]
    fn quadratic_relations_hold() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let rep = GlqRep::natural(&gl(m, n)).unwrap();
            let d = m + n;
            for i in 1..d {
                for j in 1..d {
                    assert!(rep.check_ef(i, j).unwrap(), "gl({m}|{n}) e{i} f{j}");
                }
            }
            // K_a e_i K_a^{-1} = q^{(ℰ_a, α_i)} e_i
            for a in 1..=d {
                for i in 1..d {
                    let k = rep.mat(Gen::K(a)).unwrap();
                    let ki = rep.mat(Gen::KInv(a)).unwrap();
                    let e = rep.mat(Gen::E(i)).unwrap();
                    let lhs = k.mul(e).unwrap().mul(ki).unwrap();
                    let exp = pairing(rep.datum(), a - 1, i - 1) - pairing(rep.datum(), a - 1, i);
                    assert_eq!(lhs, e.scale(&RatFunc::q_pow(exp)));
                }
            }
        }
    }

    #[test]
    fn coproduct_small_case() {
        // gl(1|1), r = 2: Δ(e) = e⊗k + 1⊗e with k = diag(q, q)
        let rep = GlqRep::natural(&gl(1, 1)).unwrap();
        let got = act_tensor(&rep, Gen::E(1), 2).unwrap();
        // basis e1e1, e1e2, e2e1, e2e2; parities 0,1,1,0
        let expect =
            QMat::from_triplets(4, 4, [(0, 2, q("q")), (1, 3, q("q")), (0, 1, q("1")), (2, 3, q("-1"))]).unwrap();
        assert_eq!(got, expect);
        assert_eq!(
            act_tensor(&rep, Gen::E(1), 1).unwrap(),
            rep.mat(Gen::E(1)).unwrap().clone()
        );
        let k = rep.mat(Gen::K(1)).unwrap();
        assert_eq!(act_tensor(&rep, Gen::K(1), 2).unwrap(), k.kron(k));
    }

    #[test]
    fn rmatrix_gl11_entries() {
        let r = rmatrix_vv(&gl(1, 1)).unwrap();
        assert_eq!(r.entry(0, 0), q("q"));
        assert_eq!(r.entry(3, 3), q("q^-1"));
        // R(e1⊗e2) = e1⊗e2
        assert_eq!(r.entry(1, 1), q("1"));
        assert_eq!(r.entry(2, 1), q("0"));
        // R(e2⊗e1) = e2⊗e1 + (q − q^{-1}) e1⊗e2
        assert_eq!(r.entry(2, 2), q("1"));
        assert_eq!(r.entry(1, 2), q_minus_qinv());
        let other: RootDatum = "gl 1|1 order=d1,e1".parse().unwrap();
        assert!(rmatrix_vv(&other).is_err());
    }

    #[test]
    fn r_intertwines_coproduct() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            let d = gl(m, n);
            let rep = GlqRep::natural(&d).unwrap();
            let r = rmatrix_vv(&d).unwrap();
            let t = tau::<RatFunc>(rep.space(), rep.space());
            for g in rep.generators() {
                let x = act_tensor(&rep, g, 2).unwrap();
                let xop = t.mul(&x).unwrap().mul(&t).unwrap();
                assert_eq!(r.mul(&x).unwrap(), xop.mul(&r).unwrap(), "gl({m}|{n}) {g}");
            }
        }
    }

    #[test]
    fn hecke_and_inverse() {
        for (m, n) in [(1, 1), (2, 0), (2, 1), (1, 2)] {
            let d = gl(m, n);
            let g = braiding(&d).unwrap();
            let gi = braiding_inv(&d).unwrap();
            assert!(g.mul(&gi).unwrap().is_identity());
            let id = QMat::identity(g.nrows());
            let a = g.sub(&id.scale(&RatFunc::q())).unwrap();
            let b = g.add(&id.scale(&q("q^-1"))).unwrap();
            assert!(a.mul(&b).unwrap().is_zero());
        }
    }

    #[test]
    fn classical_limit_is_flip() {
        let d = gl(2, 1);
        let g = braiding(&d).unwrap().specialize(&crate::scalar::rat(1, 1)).unwrap();
        let v = natural_space(&d);
        assert_eq!(g, tau(&v, &v));
    }

    #[test]
    fn k2rho_examples() {
        let d = gl(1, 1);
        let k = k2rho(&d);
        assert_eq!(k.entry(0, 0), k.entry(1, 1));
        for (m, n) in [(2, 1), (3, 1), (1, 2)] {
            let d = gl(m, n);
            let v = natural_space(&d);
            assert_eq!(supertrace(&k2rho(&d), &v).unwrap(), qint(m as i64 - n as i64));
            let kk = k2rho(&d).kron(&k2rho(&d));
            let kki = kk.map(|x| x.inv().unwrap());
            let g = braiding(&d).unwrap();
            assert_eq!(kk.mul(&g).unwrap().mul(&kki).unwrap(), g);
        }
    }

    #[test]
    fn dual_module_relations() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            let d = gl(m, n);
            let rep = GlqRep::natural(&d).unwrap();
            let dual = rep.dual().unwrap();
            // K_a on V* is the inverse transpose
            for a in 1..=m + n {
                let k = rep.mat(Gen::K(a)).unwrap();
                assert_eq!(dual.mat(Gen::K(a)).unwrap(), &k.map(|x| x.inv().unwrap()));
            }
            // the dual action is again a representation
            for i in 1..m + n {
                for j in 1..m + n {
                    let e = dual.mat(Gen::E(i)).unwrap();
                    let f = dual.mat(Gen::F(j)).unwrap();
                    let both_odd = rep.gen_parity(Gen::E(i)) == 1;
                    let lhs = if both_odd {
                        e.mul(f).unwrap().add(&f.mul(e).unwrap()).unwrap()
                    } else {
                        e.mul(f).unwrap().sub(&f.mul(e).unwrap()).unwrap()
                    };
                    if i != j {
                        assert!(lhs.is_zero());
                    }
                }
            }
            // V** is V conjugated by P K_{2ρ}, P = diag((−1)^{[a]})
            let ddual = dual.dual().unwrap();
            let v = rep.space();
            let pk = QMat::diagonal(
                (0..m + n)
                    .map(|a| {
                        let s = if v.parity(a) == 1 { -1 } else { 1 };
                        &RatFunc::from_int(s) * &k2rho(&d).entry(a, a)
                    })
                    .collect(),
            );
            let pki = pk.map(|x| x.inv().unwrap());
            for g in rep.generators() {
                let x = rep.mat(g).unwrap();
                assert_eq!(
                    ddual.mat(g).unwrap(),
                    &pk.mul(x).unwrap().mul(&pki).unwrap(),
                    "gl({m}|{n}) {g}"
                );
            }
        }
    }

    fn counit(g: Gen) -> RatFunc {
        match g {
            Gen::K(_) | Gen::KInv(_) => RatFunc::one(),
            _ => RatFunc::zero(),
        }
    }

    #[test]
    fn duality_maps_are_module_maps() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 0)] {
            let d = gl(m, n);
            let rep = GlqRep::natural(&d).unwrap();
            let dual = rep.dual().unwrap();
            let maps = duality_maps(&d);
            for g in rep.generators() {
                let vvd = coproduct_action(&[&rep, &dual], g).unwrap();
                let vdv = coproduct_action(&[&dual, &rep], g).unwrap();
                let eps = counit(g);
                assert_eq!(vvd.mul(&maps.upsilon).unwrap(), maps.upsilon.scale(&eps), "{g}");
                assert_eq!(maps.omega.mul(&vdv).unwrap(), maps.omega.scale(&eps), "{g}");
                assert_eq!(maps.omega_p.mul(&vvd).unwrap(), maps.omega_p.scale(&eps), "{g}");
                assert_eq!(vdv.mul(&maps.upsilon_p).unwrap(), maps.upsilon_p.scale(&eps), "{g}");
            }
            let closed = maps.omega_p.mul(&maps.upsilon).unwrap();
            assert_eq!(closed.entry(0, 0), qint(m as i64 - n as i64));
        }
    }

    #[test]
    fn twist_scalar_value() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (3, 1), (2, 0)] {
            let theta = twist_scalar(&gl(m, n)).unwrap();
            assert_eq!(theta, RatFunc::q_pow(m as i64 - n as i64));
            assert_eq!(
                theta.specialize(&crate::scalar::rat(1, 1)).unwrap(),
                crate::scalar::rat(1, 1)
            );
        }
    }

    #[test]
    fn generator_names_round_trip() {
        for g in [Gen::E(2), Gen::F(1), Gen::K(3), Gen::KInv(1)] {
            assert_eq!(g.to_string().parse::<Gen>().unwrap(), g);
        }
        assert!("x1".parse::<Gen>().is_err());
        assert!("e0".parse::<Gen>().is_err());
        let rep = GlqRep::natural(&gl(1, 1)).unwrap();
        assert!(rep.mat(Gen::E(5)).is_err());
    }
}
