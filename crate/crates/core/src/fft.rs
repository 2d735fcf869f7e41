//! First fundamental theorems at desk scale: centralizer dimensions against
//! ranks of diagram-image spans.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::diagrams::{
    brauer_basis, compose_brauer, quotient_relations, Mode, QuotientKind, QuotientParams, RibbonWord, Sign, Token,
};
use crate::error::{Error, Result};
use crate::functor::{
    brauer_image, evaluate_relation, image_basis, make_context, EvalContext, Flavor, ImageKind, Images,
};
use crate::glq::{coproduct_action, natural_space, Gen, GlqRep, QMat};
use crate::ospc::{bmw_parameters, brauer_rep, centralizer_generators, quantum_g_spectral, RMat};
use crate::rootdata::RootDatum;
use crate::scalar::{format_rational, rat, Field, Rational};
use crate::superspace::linalg::{rank_rational, rank_rows_at, Echelon, RankReport};
use crate::superspace::{leibniz, SparseMat};

/// The default specialization points `7/5, 13/9, 23/17`.
pub fn default_points() -> Vec<Rational> {
    vec![rat(7, 5), rat(13, 9), rat(23, 17)]
}

/// `k` distinct points `a/b` with `2 <= a, b <= 97`, away from `0, ±1`,
/// drawn from a seeded stream.
pub fn fresh_points(seed: u64, k: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < k {
        let p = rat(rng.gen_range(2..=97), rng.gen_range(2..=97));
        if p != rat(1, 1) && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn check_dim(needed: usize, budget: usize) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Dimension of `{M : M X = X M for all X in ops}` over `Q`.
///
/// Diagonal operators are used first to discard the entries `M_ij` with
/// differing eigenvalues; the remaining operators give sparse linear
/// equations in the surviving entries.
pub fn commutant_nullity(ops: &[RMat], dim: usize) -> Result<usize> {
    for op in ops {
        if op.shape() != (dim, dim) {
            return Err(Error::DimensionMismatch {
                op: "commutant_nullity",
                left: op.shape(),
                right: (dim, dim),
            });
        }
    }
    let (diag, rest): (Vec<&RMat>, Vec<&RMat>) = ops.iter().partition(|o| o.is_diagonal());
    let key = |i: usize| diag.iter().map(|d| d.entry(i, i)).collect::<Vec<_>>();
    let keys: Vec<Vec<Rational>> = (0..dim).map(key).collect();
    let vars: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (0..dim).map(move |j| (i, j)))
        .filter(|&(i, j)| keys[i] == keys[j])
        .collect();
    let mut ech = Echelon::new();
    for x in &rest {
        let xt = x.transpose();
        // (M X − X M)_{ij} = Σ_k M_ik X_kj − Σ_k X_ik M_kj
        let mut eqs: std::collections::BTreeMap<(usize, usize), std::collections::BTreeMap<usize, Rational>> =
            Default::default();
        for (v, &(i, k)) in vars.iter().enumerate() {
            for (&j, c) in x.row(k) {
                let e = eqs.entry((i, j)).or_default().entry(v).or_insert_with(Rational::zero);
                *e += c;
            }
            // M_ik appears in (X M)_{a k} with coefficient X_{a i}
            for (&a, c) in xt.row(i) {
                let e = eqs.entry((a, k)).or_default().entry(v).or_insert_with(Rational::zero);
                *e -= c;
            }
        }
        for (_, row) in eqs {
            let row: Vec<(usize, Rational)> = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !row.is_empty() {
                ech.insert_rational(&row);
            }
        }
    }
    Ok(vars.len() - ech.rank())
}

/// Generators `e_i, f_i, K_a` acting on `M_1 ⊗ … ⊗ M_k`, over `Q(q)`.
fn glq_generator_actions(reps: &[&GlqRep]) -> Result<Vec<QMat>> {
    let gens: Vec<Gen> = reps[0]
        .generators()
        .into_iter()
        .filter(|g| !matches!(g, Gen::KInv(_)))
        .collect();
    gens.par_iter().map(|&g| coproduct_action(reps, g)).collect()
}

fn mixed_reps(datum: &RootDatum, r: usize, s: usize) -> Result<(GlqRep, GlqRep, usize)> {
    if r + s == 0 {
        return Err(Error::Validation("need r + s >= 1".into()));
    }
    let v = GlqRep::natural(datum)?;
    let vd = v.dual()?;
    let dim = v.dim().pow((r + s) as u32);
    Ok((v, vd, dim))
}

/// Nullity of the commutation constraints at each point.
fn nullities_at(actions: &[QMat], dim: usize, points: &[Rational]) -> Result<Vec<(Rational, usize)>> {
    if points.is_empty() {
        return Err(Error::EmptyPoints);
    }
    points
        .par_iter()
        .map(|p| {
            let ops = actions
                .iter()
                .map(|a| a.specialize(p))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            Ok((p.clone(), commutant_nullity(&ops, dim)?))
        })
        .collect()
}

fn agreed(per_point: Vec<(Rational, usize)>) -> Result<usize> {
    let first = per_point[0].1;
    if per_point.iter().all(|(_, d)| *d == first) {
        Ok(first)
    } else {
        Err(Error::PointDisagreement(per_point))
    }
}

/// `dim End_{U_q}(V^{⊗r} ⊗ V*^{⊗s})`, from specializations that must agree.
pub fn commutant_dim_glq_mixed(
    datum: &RootDatum,
    r: usize,
    s: usize,
    points: &[Rational],
    budget: usize,
) -> Result<usize> {
    let (v, vd, dim) = mixed_reps(datum, r, s)?;
    check_dim(dim, budget)?;
    let mut reps: Vec<&GlqRep> = vec![&v; r];
    reps.extend(vec![&vd; s]);
    let actions = glq_generator_actions(&reps)?;
    agreed(nullities_at(&actions, dim, points)?)
}

/// `dim End_{U_q}(V^{⊗r})`.
pub fn commutant_dim_glq(datum: &RootDatum, r: usize, points: &[Rational], budget: usize) -> Result<usize> {
    commutant_dim_glq_mixed(datum, r, 0, points, budget)
}

/// Classical `dim End_{gl(m|n)}(V^{⊗r})` from the Leibniz action of the
/// matrix units.
pub fn commutant_dim_gl_classical(m: usize, n: usize, r: usize, budget: usize) -> Result<usize> {
    let datum = RootDatum::gl(m, n)?;
    let v = natural_space(&datum);
    let d = v.dim();
    let dim = d.pow(r as u32);
    check_dim(dim, budget)?;
    let ops = (0..d)
        .flat_map(|a| (0..d).map(move |b| (a, b)))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(a, b)| {
            let unit = RMat::from_triplets(d, d, [(a, b, rat(1, 1))])?;
            leibniz(&unit, &v, r)
        })
        .collect::<Result<Vec<_>>>()?;
    commutant_nullity(&ops, dim)
}

/// `dim End_G(V^{⊗r})` for `G = OSp(m|2n)`: commutant of the osp Leibniz
/// action together with `σ^{⊗r}`.
pub fn commutant_dim_osp(m: usize, n: usize, r: usize, budget: usize) -> Result<usize> {
    if r == 0 {
        return Err(Error::Validation("r must be at least 1".into()));
    }
    let dim = (m + 2 * n).pow(r as u32);
    check_dim(dim, budget)?;
    commutant_nullity(&centralizer_generators(m, n, r)?, dim)
}

/// Rank of the span of quantum images at each point.
pub fn span_rank(images: &[QMat], points: &[Rational]) -> Result<RankReport> {
    let rows: Vec<Vec<(usize, crate::scalar::RatFunc)>> = images.iter().map(|m| m.vectorize()).collect();
    rank_rows_at(&rows, points)
}

/// Exact rank of the span of classical images.
pub fn span_rank_exact(images: &[RMat]) -> usize {
    let rows: Vec<Vec<(usize, Rational)>> = images.iter().map(|m| m.vectorize()).collect();
    rank_rational(&rows)
}

fn commutes<T: crate::scalar::Field>(a: &SparseMat<T>, b: &SparseMat<T>) -> Result<bool> {
    Ok(a.mul(b)? == b.mul(a)?)
}

/// Check that every image commutes with every operator, exactly.
pub fn verify_membership<T: crate::scalar::Field>(images: &[SparseMat<T>], ops: &[SparseMat<T>]) -> Result<()> {
    let bad = images
        .par_iter()
        .enumerate()
        .map(|(i, img)| {
            for (k, op) in ops.iter().enumerate() {
                if !commutes(img, op)? {
                    return Ok(Some((i, k)));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some((i, k)) = bad.into_iter().flatten().next() {
        return Err(Error::Verification(format!(
            "image {i} does not commute with generator action {k}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FftFlavor {
    Gl,
    Osp,
}

impl fmt::Display for FftFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FftFlavor::Gl => "gl",
            FftFlavor::Osp => "osp",
        })
    }
}

impl FromStr for FftFlavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(FftFlavor::Gl),
            "osp" => Ok(FftFlavor::Osp),
            _ => Err(Error::Parse(format!("unknown flavor '{s}'"))),
        }
    }
}

impl Serialize for FftFlavor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    Gap(usize),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Equal => f.write_str("equal"),
            Verdict::Gap(k) => write!(f, "gap({k})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The even-osp spanning bound `r + s < m(2n+1)`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BoundCheck {
    pub bound: usize,
    pub r_plus_s: usize,
    pub within: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FftReport {
    pub flavor: FftFlavor,
    pub m: usize,
    /// `n` of gl(m|n), or of osp(m|2n).
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub commutant_dim: usize,
    pub span_rank: usize,
    #[serde(serialize_with = "ser_points")]
    pub points: Vec<Rational>,
    pub agreement: bool,
    pub verdict: Verdict,
    /// Images checked to commute with every generator action.
    pub membership_verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundCheck>,
    /// Whether the default points disagreed and fresh points were used.
    pub retried: bool,
    pub wall_clock_ms: Option<u64>,
}

fn ser_points<S: Serializer>(p: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(format_rational))
}

/// Options shared by the report runners.
#[derive(Debug, Clone)]
pub struct FftOptions {
    pub points: Vec<Rational>,
    pub seed: u64,
    pub budget: usize,
    pub timing: bool,
}

impl Default for FftOptions {
    fn default() -> Self {
        Self {
            points: default_points(),
            seed: 0,
            budget: crate::functor::DEFAULT_BUDGET,
            timing: false,
        }
    }
}

/// One cell of an FFT run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FftCell {
    pub flavor: FftFlavor,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub s: usize,
}

/// Both sides of the FFT for one cell, membership included.
pub fn fft_report(cell: FftCell, opts: &FftOptions) -> Result<FftReport> {
    if let Some(p) = opts.points.iter().find(|p| p.is_zero() || p.abs().is_one()) {
        return Err(Error::Validation(format!(
            "specialization point {} collapses the Cartan action; use a point other than 0, 1, -1",
            format_rational(p)
        )));
    }
    let start = Instant::now();
    let mut report = match run_cell(cell, opts, &opts.points) {
        Err(Error::PointDisagreement(_)) => {
            let fresh = fresh_points(opts.seed, opts.points.len().max(3));
            let mut rep = run_cell(cell, opts, &fresh)?;
            rep.retried = true;
            rep
        }
        other => other?,
    };
    if opts.timing {
        report.wall_clock_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

/// Run several cells concurrently.
pub fn fft_reports(cells: &[FftCell], opts: &FftOptions) -> Vec<Result<FftReport>> {
    cells.par_iter().map(|c| fft_report(*c, opts)).collect()
}

fn finish(
    cell: FftCell,
    commutant_dim: usize,
    span: usize,
    points: Vec<Rational>,
    agreement: bool,
) -> Result<FftReport> {
    if span > commutant_dim {
        return Err(Error::Verification(format!(
            "span rank {span} exceeds commutant dimension {commutant_dim}"
        )));
    }
    let verdict = if span == commutant_dim {
        Verdict::Equal
    } else {
        Verdict::Gap(commutant_dim - span)
    };
    let bound = (cell.flavor == FftFlavor::Osp && cell.m.is_multiple_of(2)).then(|| {
        let bound = cell.m * (2 * cell.n + 1);
        BoundCheck {
            bound,
            r_plus_s: cell.r + cell.s,
            within: cell.r + cell.s < bound,
        }
    });
    Ok(FftReport {
        flavor: cell.flavor,
        m: cell.m,
        n: cell.n,
        r: cell.r,
        s: cell.s,
        commutant_dim,
        span_rank: span,
        points,
        agreement,
        verdict,
        membership_verified: true,
        bound,
        retried: false,
        wall_clock_ms: None,
    })
}

fn run_cell(cell: FftCell, opts: &FftOptions, points: &[Rational]) -> Result<FftReport> {
    match cell.flavor {
        FftFlavor::Gl => {
            let datum = RootDatum::gl(cell.m, cell.n)?;
            let (v, vd, dim) = mixed_reps(&datum, cell.r, cell.s)?;
            check_dim(dim, opts.budget)?;
            let ctx = make_context(Flavor::Glq(datum.clone()), Mode::Directed)?.with_budget(opts.budget);
            let kind = if cell.s == 0 {
                ImageKind::Hecke
            } else {
                ImageKind::Walled
            };
            let Images::Quantum(images) = image_basis(kind, &ctx, cell.r, cell.s)? else {
                unreachable!("glq images are quantum")
            };
            let mut reps: Vec<&GlqRep> = vec![&v; cell.r];
            reps.extend(vec![&vd; cell.s]);
            let actions = glq_generator_actions(&reps)?;
            verify_membership(&images, &actions)?;
            let dim_c = agreed(nullities_at(&actions, dim, points)?)?;
            let rank = span_rank(&images, points)?;
            if !rank.agree {
                return Err(Error::PointDisagreement(rank.per_point));
            }
            finish(cell, dim_c, rank.rank, points.to_vec(), true)
        }
        FftFlavor::Osp => {
            if cell.s != 0 {
                return Err(Error::Validation("the osp report takes s = 0 (V is self-dual)".into()));
            }
            let ctx = make_context(Flavor::OspClassical { m: cell.m, n: cell.n }, Mode::Nondirected)?
                .with_budget(opts.budget);
            let Images::Classical(images) = image_basis(ImageKind::Brauer, &ctx, cell.r, 0)? else {
                unreachable!("osp images are classical")
            };
            let ops = centralizer_generators(cell.m, cell.n, cell.r)?;
            verify_membership(&images, &ops)?;
            let dim_c = commutant_dim_osp(cell.m, cell.n, cell.r, opts.budget)?;
            finish(cell, dim_c, span_rank_exact(&images), Vec::new(), true)
        }
    }
}

/// One relation pushed through the functor at one position.
#[derive(Debug, Clone, Serialize)]
pub struct RelationResult {
    pub name: String,
    /// Index of the leftmost strand the relation acts on.
    pub position: Option<usize>,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub kind: QuotientKind,
    pub context: String,
    pub results: Vec<RelationResult>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    /// Fail with the first relation that does not vanish.
    pub fn ensure(&self) -> Result<()> {
        match self.results.iter().find(|r| !r.holds) {
            None => Ok(()),
            Some(r) => Err(Error::Verification(match r.position {
                Some(p) => format!("relation '{}' does not vanish at position {}", r.name, p + 1),
                None => format!("relation '{}' does not vanish", r.name),
            })),
        }
    }
}

fn check_at_positions(
    rel: &crate::diagrams::Relation,
    ctx: &EvalContext,
    boundary: &[Sign],
    out: &mut Vec<RelationResult>,
) -> Result<()> {
    let src = rel.source();
    if src.is_empty() {
        let holds = evaluate_relation(rel, ctx)?.is_zero();
        out.push(RelationResult {
            name: rel.name.clone(),
            position: None,
            holds,
        });
        return Ok(());
    }
    let k = src.len();
    if k > boundary.len() {
        return Ok(());
    }
    for p in 0..=boundary.len() - k {
        if boundary[p..p + k] != src[..] {
            continue;
        }
        let placed = rel.pad(&boundary[..p], &boundary[p + k..]);
        let holds = evaluate_relation(&placed, ctx)?.is_zero();
        out.push(RelationResult {
            name: rel.name.clone(),
            position: Some(p),
            holds,
        });
    }
    Ok(())
}

fn braid_relation(r: usize) -> Result<Option<crate::diagrams::Relation>> {
    if r < 3 {
        return Ok(None);
    }
    use Token::*;
    let w = |layers| RibbonWord::new(Mode::Directed, layers);
    let a = w(vec![vec![XPlus, IPlus], vec![IPlus, XPlus], vec![XPlus, IPlus]])?;
    let b = w(vec![vec![IPlus, XPlus], vec![XPlus, IPlus], vec![IPlus, XPlus]])?;
    let one = crate::scalar::RatFunc::one();
    Ok(Some(crate::diagrams::Relation::new(
        "X1 X2 X1 - X2 X1 X2",
        vec![(one.clone(), a), (one.neg_ref(), b)],
    )?))
}

/// Push the quotient relations through the functor at every position of
/// `V^{⊗r} ⊗ V*^{⊗s}` and report which vanish.
pub fn relation_check(kind: QuotientKind, ctx: &EvalContext, r: usize, s: usize) -> Result<RelationReport> {
    let mut results = Vec::new();
    match kind {
        QuotientKind::Hecke | QuotientKind::WalledBmw => {
            let Flavor::Glq(datum) = ctx.flavor() else {
                return Err(Error::Unsupported(format!("{kind} relations need a glq context")));
            };
            if ctx.mode() != Mode::Directed {
                return Err(Error::Unsupported(format!("{kind} relations need a directed context")));
            }
            let params = if kind == QuotientKind::Hecke {
                if s != 0 {
                    return Err(Error::Validation("hecke relations act on V^{⊗r}".into()));
                }
                QuotientParams::Hecke
            } else {
                QuotientParams::WalledBmw { z: datum.sdim_q() }
            };
            let boundary = crate::functor::walled_boundary(r, s);
            let mut rels = quotient_relations(&params)?;
            rels.extend(braid_relation(r)?);
            for rel in &rels {
                check_at_positions(rel, ctx, &boundary, &mut results)?;
            }
        }
        QuotientKind::Bmw => {
            let Flavor::OspClassical { m, n } = *ctx.flavor() else {
                return Err(Error::Unsupported(
                    "BMW relations are checked in the classical osp context and the idempotent model".into(),
                ));
            };
            if s != 0 {
                return Err(Error::Validation("BMW relations act on V^{⊗r}".into()));
            }
            let p = bmw_parameters(m, n)?;
            let rels = quotient_relations(&QuotientParams::Bmw { y: p.y, sdim: p.sdim })?;
            let boundary = vec![Sign::Plus; r];
            for rel in &rels {
                check_at_positions(rel, ctx, &boundary, &mut results)?;
            }
            for (name, holds) in quantum_g_spectral(m, n)?.relations {
                results.push(RelationResult {
                    name: format!("model: {name}"),
                    position: None,
                    holds,
                });
            }
        }
    }
    Ok(RelationReport {
        kind,
        context: ctx.flavor().to_string(),
        results,
    })
}

/// Brauer relations and the homomorphism property on `V^{⊗r}` for
/// classical osp(m|2n).
#[derive(Debug, Clone, Serialize)]
pub struct BrauerReport {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub delta: i64,
    pub relations: Vec<RelationResult>,
    /// Pairs of basis diagrams checked against `compose_brauer`.
    pub homomorphism_pairs: usize,
    pub homomorphism_holds: bool,
}

impl BrauerReport {
    pub fn all_hold(&self) -> bool {
        self.homomorphism_holds && self.relations.iter().all(|r| r.holds)
    }
}

pub fn brauer_check(m: usize, n: usize, r: usize, budget: usize) -> Result<BrauerReport> {
    let dim = (m + 2 * n).checked_pow(r as u32).unwrap_or(usize::MAX);
    if dim > budget {
        return Err(Error::BudgetExceeded { needed: dim, budget });
    }
    let rep = brauer_rep(m, n, r)?;
    let relations = rep
        .relation_residuals()?
        .into_iter()
        .map(|(name, res)| RelationResult {
            name,
            position: None,
            holds: res.is_zero(),
        })
        .collect();
    let ctx = make_context(Flavor::OspClassical { m, n }, Mode::Nondirected)?.with_budget(budget);
    let delta = rep.delta();
    let delta_q = Rational::from_integer(delta.into());
    let basis = brauer_basis(r)?;
    if basis.len() > budget {
        return Err(Error::BudgetExceeded {
            needed: basis.len(),
            budget,
        });
    }
    let images = basis
        .iter()
        .map(|d| brauer_image(d, &ctx))
        .collect::<Result<Vec<_>>>()?;
    let mut holds = true;
    for (a, ia) in basis.iter().zip(&images) {
        for (b, ib) in basis.iter().zip(&images) {
            let (ab, c) = compose_brauer(a, b, &delta_q)?;
            holds &= brauer_image(&ab, &ctx)?.scale(&c) == ia.mul(ib)?;
        }
    }
    Ok(BrauerReport {
        m,
        n,
        r,
        delta,
        relations,
        homomorphism_pairs: basis.len() * basis.len(),
        homomorphism_holds: holds,
    })
}
