//! The classical orthosymplectic supergroup on its natural module, and the
//! BMW parameter data of quantum osp(m|2n).
//!
//! Basis order of `V = C^{m|2n}`: `e_{ε_1}..e_{ε_l}`, (`e_0` for odd m),
//! `e_{-ε_l}..e_{-ε_1}`, then `e_{δ_1}..e_{δ_n}`, `e_{-δ_n}..e_{-δ_1}`. The
//! Gram matrix is anti-diagonal on each block, with the symplectic sign
//! `+1` in the upper half and `-1` in the lower half of the odd block.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{osp_sdim_closed_form, RootDatum};
use crate::scalar::{q_minus_qinv, Field, RatFunc, Rational};
use crate::superspace::linalg::nullspace_basis;
use crate::superspace::{leibniz, place_even, tau, BasisVector, SparseMat, SuperSpace};

pub type RMat = SparseMat<Rational>;

/// The even supersymmetric form of the natural module.
#[derive(Debug, Clone)]
pub struct OspForm {
    pub m: usize,
    pub n: usize,
    pub space: SuperSpace,
    pub gram: RMat,
}

fn one() -> Rational {
    Rational::one()
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m + n == 0 {
        return Err(Error::InvalidDatum("osp needs m + n >= 1".into()));
    }
    Ok(())
}

/// The natural module with weights in `(ε_1..ε_l, δ_1..δ_n)` coordinates.
pub fn osp_space(m: usize, n: usize) -> SuperSpace {
    let l = m / 2;
    let len = l + n;
    let wt = |k: usize, s: i64| {
        let mut w = vec![0; len];
        w[k] = s;
        w
    };
    let mut basis = Vec::with_capacity(m + 2 * n);
    for i in 0..l {
        basis.push(BasisVector::new(format!("e{}", i + 1), 0, wt(i, 1)));
    }
    if m % 2 == 1 {
        basis.push(BasisVector::new("e0", 0, vec![0; len]));
    }
    for i in (0..l).rev() {
        basis.push(BasisVector::new(format!("-e{}", i + 1), 0, wt(i, -1)));
    }
    for j in 0..n {
        basis.push(BasisVector::new(format!("d{}", j + 1), 1, wt(l + j, 1)));
    }
    for j in (0..n).rev() {
        basis.push(BasisVector::new(format!("-d{}", j + 1), 1, wt(l + j, -1)));
    }
    SuperSpace::new(basis).expect("labels are distinct")
}

pub fn osp_form(m: usize, n: usize) -> Result<OspForm> {
    check_dims(m, n)?;
    let d = m + 2 * n;
    let mut gram = RMat::zeros(d, d);
    for i in 0..m {
        gram.set(i, m - 1 - i, one());
    }
    for j in 0..2 * n {
        let v = if j < n { one() } else { -one() };
        gram.set(m + j, m + 2 * n - 1 - j, v);
    }
    Ok(OspForm {
        m,
        n,
        space: osp_space(m, n),
        gram,
    })
}

impl OspForm {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `(v, w) = (−1)^{[v][w]} (w, v)` and the form is even.
    pub fn is_supersymmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                let a = self.gram.entry(i, j);
                let b = self.gram.entry(j, i);
                let pi = self.space.parity(i);
                let pj = self.space.parity(j);
                if pi != pj {
                    a.is_zero()
                } else if pi & pj == 1 {
                    a == -b
                } else {
                    a == b
                }
            })
        })
    }

    /// `ĉ_0: V⊗V → C`, `v ⊗ w ↦ (v, w)`.
    pub fn pairing(&self) -> RMat {
        let d = self.dim();
        RMat::from_triplets(1, d * d, self.gram.iter().map(|(i, j, v)| (0, i * d + j, v.clone()))).expect("in range")
    }

    /// `č_0: C → V⊗V`, the copairing with `(id ⊗ ĉ_0)(č_0(1) ⊗ v) = v`,
    /// i.e. the vectorization of `J^{-1}`.
    pub fn copairing(&self) -> RMat {
        let d = self.dim();
        // J is a signed permutation, so J^{-1} = J^T with the signs inverted.
        let inv = self.gram.transpose().map(|v| v.recip());
        RMat::from_triplets(d * d, 1, inv.iter().map(|(i, j, v)| (i * d + j, 0, v.clone()))).expect("in range")
    }
}

/// Basis of `osp(m|2n) ⊂ gl(m|2n)`: every homogeneous `X` with
/// `(Xv, w) + (−1)^{[v][X]} (v, Xw) = 0`. Each element is a weight vector.
pub fn osp_basis(m: usize, n: usize) -> Result<Vec<RMat>> {
    let form = osp_form(m, n)?;
    let d = form.dim();
    let v = &form.space;
    let j = &form.gram;
    let mut out = Vec::new();
    for px in 0..2u8 {
        let vars: Vec<(usize, usize)> = (0..d)
            .flat_map(|a| (0..d).map(move |b| (a, b)))
            .filter(|&(a, b)| v.parity(a) ^ v.parity(b) == px)
            .collect();
        let var_index = |a: usize, b: usize| vars.iter().position(|&x| x == (a, b));
        let mut rows = Vec::new();
        for i in 0..d {
            for jj in 0..d {
                let mut row: Vec<(usize, Rational)> = Vec::new();
                // Σ_k X_ki J_k,jj
                for k in 0..d {
                    if let (Some(c), Some(x)) = (j.get(k, jj), var_index(k, i)) {
                        row.push((x, c.clone()));
                    }
                }
                // (−1)^{[i][X]} Σ_k J_ik X_k,jj
                let sign = if v.parity(i) & px == 1 { -one() } else { one() };
                for k in 0..d {
                    if let (Some(c), Some(x)) = (j.get(i, k), var_index(k, jj)) {
                        row.push((x, c * &sign));
                    }
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
        for sol in nullspace_basis(&rows, vars.len()) {
            let mut x = RMat::zeros(d, d);
            for (idx, val) in sol.into_iter().enumerate() {
                if !val.is_zero() {
                    let (a, b) = vars[idx];
                    x.set(a, b, val);
                }
            }
            out.push(x);
        }
    }
    Ok(out)
}

/// `dim osp(m|2n) = m(m−1)/2 + n(2n+1) + 2mn`.
pub fn osp_dim(m: usize, n: usize) -> usize {
    m * m.saturating_sub(1) / 2 + n * (2 * n + 1) + 2 * m * n
}

/// The element `σ`: `−id` for odd m; for even m the swap of the weight
/// spaces `±ε_l` (identity when `m = 0`).
pub fn sigma(m: usize, n: usize) -> RMat {
    let d = m + 2 * n;
    if m % 2 == 1 {
        return RMat::identity(d).neg();
    }
    let mut s = RMat::identity(d);
    if m > 0 {
        let l = m / 2;
        s.set(l - 1, l - 1, Rational::zero());
        s.set(l, l, Rational::zero());
        s.set(l - 1, l, one());
        s.set(l, l - 1, one());
    }
    s
}

/// `E = č_0 ∘ ĉ_0` on `V⊗V`.
pub fn e_map(m: usize, n: usize) -> Result<RMat> {
    let f = osp_form(m, n)?;
    f.copairing().mul(&f.pairing())
}

/// Images of the Brauer generators `s_i ↦ τ_i`, `e_i ↦ E_i` on `V^{⊗r}`.
#[derive(Debug, Clone)]
pub struct BrauerRep {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub space: SuperSpace,
    pub s: Vec<RMat>,
    pub e: Vec<RMat>,
}

pub fn brauer_rep(m: usize, n: usize, r: usize) -> Result<BrauerRep> {
    if r == 0 {
        return Err(Error::InvalidDatum("r must be at least 1".into()));
    }
    let form = osp_form(m, n)?;
    let d = form.dim();
    let t: RMat = tau(&form.space, &form.space);
    let e = e_map(m, n)?;
    let place = |op: &RMat, i: usize| place_even(op, d, i, r - i - 2);
    Ok(BrauerRep {
        m,
        n,
        r,
        space: form.space.tensor_power(r),
        s: (0..r.saturating_sub(1)).map(|i| place(&t, i)).collect(),
        e: (0..r.saturating_sub(1)).map(|i| place(&e, i)).collect(),
    })
}

impl BrauerRep {
    pub fn delta(&self) -> i64 {
        self.m as i64 - 2 * self.n as i64
    }

    /// Names and residual matrices of the Brauer relations; every residual
    /// is zero when the relations hold.
    pub fn relation_residuals(&self) -> Result<Vec<(String, RMat)>> {
        let d = self.space.dim();
        let id = RMat::identity(d);
        let delta = Rational::from_integer(self.delta().into());
        let mut out = Vec::new();
        let k = self.s.len();
        for i in 0..k {
            let (s, e) = (&self.s[i], &self.e[i]);
            out.push((format!("s{0}^2 = 1", i + 1), s.mul(s)?.sub(&id)?));
            out.push((format!("e{0}^2 = δ e{0}", i + 1), e.mul(e)?.sub(&e.scale(&delta))?));
            out.push((format!("e{0} s{0} = e{0}", i + 1), e.mul(s)?.sub(e)?));
            out.push((format!("s{0} e{0} = e{0}", i + 1), s.mul(e)?.sub(e)?));
            if i + 1 < k {
                let (s2, e2) = (&self.s[i + 1], &self.e[i + 1]);
                let a = i + 1;
                let b = i + 2;
                out.push((
                    format!("s{a} s{b} s{a} = s{b} s{a} s{b}"),
                    s.mul(s2)?.mul(s)?.sub(&s2.mul(s)?.mul(s2)?)?,
                ));
                out.push((format!("e{a} e{b} e{a} = e{a}"), e.mul(e2)?.mul(e)?.sub(e)?));
                out.push((format!("e{b} e{a} e{b} = e{b}"), e2.mul(e)?.mul(e2)?.sub(e2)?));
                out.push((
                    format!("s{a} e{b} e{a} = s{b} e{a}"),
                    s.mul(e2)?.mul(e)?.sub(&s2.mul(e)?)?,
                ));
                out.push((
                    format!("e{a} e{b} s{a} = e{a} s{b}"),
                    e.mul(e2)?.mul(s)?.sub(&e.mul(s2)?)?,
                ));
            }
            for j in i + 2..k {
                let (s2, e2) = (&self.s[j], &self.e[j]);
                let (a, b) = (i + 1, j + 1);
                out.push((format!("s{a} s{b} = s{b} s{a}"), s.mul(s2)?.sub(&s2.mul(s)?)?));
                out.push((format!("e{a} e{b} = e{b} e{a}"), e.mul(e2)?.sub(&e2.mul(e)?)?));
                out.push((format!("s{a} e{b} = e{b} s{a}"), s.mul(e2)?.sub(&e2.mul(s)?)?));
                out.push((format!("e{a} s{b} = s{b} e{a}"), e.mul(s2)?.sub(&s2.mul(e)?)?));
            }
        }
        Ok(out)
    }
}

/// Operators whose common commutant on `V^{⊗r}` is `End_G(V^{⊗r})`: the
/// Leibniz action of an osp basis and `σ^{⊗r}`.
pub fn centralizer_generators(m: usize, n: usize, r: usize) -> Result<Vec<RMat>> {
    let form = osp_form(m, n)?;
    let mut ops = osp_basis(m, n)?
        .iter()
        .map(|x| leibniz(x, &form.space, r))
        .collect::<Result<Vec<_>>>()?;
    let s = sigma(m, n);
    let mut sr = RMat::identity(1);
    for _ in 0..r {
        sr = sr.kron(&s);
    }
    ops.push(sr);
    Ok(ops)
}

/// Scalar data of the BMW quotient for quantum osp(m|2n).
#[derive(Debug, Clone, Serialize)]
pub struct BmwParameters {
    #[serde(serialize_with = "ser_display")]
    pub y: RatFunc,
    #[serde(serialize_with = "ser_display")]
    pub z: RatFunc,
    pub delta: i64,
    pub omega_v: i64,
    /// Casimir eigenvalues `(χ_s̃, χ_a, χ_0)`.
    pub chi: (i64, i64, i64),
    #[serde(serialize_with = "ser_display")]
    pub sdim: RatFunc,
}

fn ser_display<S: serde::Serializer>(v: &RatFunc, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn bmw_parameters(m: usize, n: usize) -> Result<BmwParameters> {
    check_dims(m, n)?;
    let omega_v = m as i64 - 2 * n as i64 - 1;
    Ok(BmwParameters {
        y: RatFunc::q_pow(-omega_v),
        z: q_minus_qinv(),
        delta: m as i64 - 2 * n as i64,
        omega_v,
        chi: (1, -1, -omega_v),
        sdim: RootDatum::osp(m, n)?.sdim_q(),
    })
}

/// Element `c_1·1 + c_a·P[a] + c_e·e` of the commutative algebra spanned by
/// `1`, the idempotent `P[a]` and `e`, with `P[a] e = 0` and `e² = sdim·e`.
#[derive(Debug, Clone, PartialEq)]
pub struct IdemElem {
    pub one: RatFunc,
    pub pa: RatFunc,
    pub e: RatFunc,
}

impl IdemElem {
    pub fn new(one: RatFunc, pa: RatFunc, e: RatFunc) -> Self {
        Self { one, pa, e }
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::new(c, RatFunc::zero(), RatFunc::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.one.is_zero() && self.pa.is_zero() && self.e.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.one + &o.one, &self.pa + &o.pa, &self.e + &o.e)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.one - &o.one, &self.pa - &o.pa, &self.e - &o.e)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::new(&self.one * c, &self.pa * c, &self.e * c)
    }

    pub fn mul(&self, o: &Self, sdim: &RatFunc) -> Self {
        let one = &self.one * &o.one;
        let pa = &(&(&self.one * &o.pa) + &(&self.pa * &o.one)) + &(&self.pa * &o.pa);
        let e = &(&(&self.one * &o.e) + &(&self.e * &o.one)) + &(&(&self.e * &o.e) * sdim);
        Self::new(one, pa, e)
    }
}

/// Outcome of the spectral identity checks.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    pub m: usize,
    pub n: usize,
    /// `(relation, holds)` pairs.
    pub relations: Vec<(String, bool)>,
}

impl SpectralReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|(_, ok)| *ok)
    }
}

/// The braiding and its inverse in the idempotent model, after eliminating
/// `P[s̃]` from the spectral decompositions:
/// `g = q − (q+q^{-1}) P[a] − q(q−q^{-1})/(q+q^k) e`,
/// `g^{-1} = q^{-1} − (q+q^{-1}) P[a] + q^k(q−q^{-1})/(q+q^k) e`, `k = m−2n−1`.
pub fn spectral_g(m: usize, n: usize) -> (IdemElem, IdemElem) {
    let k = m as i64 - 2 * n as i64 - 1;
    let q = RatFunc::q();
    let qi = RatFunc::q_pow(-1);
    let z = q_minus_qinv();
    let s = &q + &qi;
    let denom = &q + &RatFunc::q_pow(k);
    let g = IdemElem::new(q.clone(), s.neg_ref(), (&(&q * &z) / &denom).neg_ref());
    let ginv = IdemElem::new(qi, s.neg_ref(), &(&RatFunc::q_pow(k) * &z) / &denom);
    (g, ginv)
}

/// Verify the BMW spectral identities in the idempotent model.
pub fn quantum_g_spectral(m: usize, n: usize) -> Result<SpectralReport> {
    let p = bmw_parameters(m, n)?;
    let sdim = p.sdim.clone();
    let (g, ginv) = spectral_g(m, n);
    let one = IdemElem::scalar(RatFunc::one());
    let e = IdemElem::new(RatFunc::zero(), RatFunc::zero(), RatFunc::one());
    let pa = IdemElem::new(RatFunc::zero(), RatFunc::one(), RatFunc::zero());
    let mul = |a: &IdemElem, b: &IdemElem| a.mul(b, &sdim);
    let mut rel = vec![
        ("g g^-1 = 1".to_string(), mul(&g, &ginv) == one),
        ("g^-1 g = 1".to_string(), mul(&ginv, &g) == one),
        (
            "g - g^-1 = z (1 - e)".to_string(),
            g.sub(&ginv) == one.sub(&e).scale(&p.z),
        ),
        ("e^2 = sdim e".to_string(), mul(&e, &e) == e.scale(&sdim)),
    ];
    rel.push(("e g = y e".to_string(), mul(&e, &g) == e.scale(&p.y)));
    rel.push(("g e = y e".to_string(), mul(&g, &e) == e.scale(&p.y)));
    rel.push((
        "e g^-1 = y^-1 e".to_string(),
        mul(&e, &ginv) == e.scale(&p.y.inv().expect("q power")),
    ));
    rel.push(("P[a]^2 = P[a]".to_string(), mul(&pa, &pa) == pa));
    let cubic = mul(
        &mul(
            &g.sub(&IdemElem::scalar(RatFunc::q())),
            &g.add(&IdemElem::scalar(RatFunc::q_pow(-1))),
        ),
        &g.sub(&IdemElem::scalar(p.y.clone())),
    );
    rel.push(("(g - q)(g + q^-1)(g - y) = 0".to_string(), cubic.is_zero()));
    rel.push(("y = q^-omega_V".to_string(), p.y == RatFunc::q_pow(-p.omega_v)));
    rel.push((
        "chi_0 = -m + 2n + 1".to_string(),
        p.chi.2 == -(m as i64) + 2 * n as i64 + 1,
    ));
    rel.push((
        "omega_V = m - 2n - 1".to_string(),
        p.omega_v == m as i64 - 2 * n as i64 - 1,
    ));
    rel.push((
        "sdim = 1 + [m - 2n - 1]_q".to_string(),
        p.sdim == osp_sdim_closed_form(m, n),
    ));
    if !sdim.is_zero() {
        // Spectral form with P[0] = e / sdim and P[s̃] = 1 − P[a] − P[0].
        let p0 = e.scale(&sdim.inv().expect("nonzero"));
        let ps = one.sub(&pa).sub(&p0);
        let (chi_s, chi_a, chi_0) = p.chi;
        let spec = |sign: i64| {
            ps.scale(&RatFunc::q_pow(sign * chi_s))
                .sub(&pa.scale(&RatFunc::q_pow(sign * chi_a)))
                .add(&p0.scale(&RatFunc::q_pow(sign * chi_0)))
        };
        rel.push(("g matches spectral form".to_string(), spec(1) == g));
        rel.push(("g^-1 matches spectral form".to_string(), spec(-1) == ginv));
    }
    Ok(SpectralReport { m, n, relations: rel })
}
