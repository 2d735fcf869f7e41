//! The braided tensor functor from ribbon words to matrices: quantum gl on
//! `V` and `V*` in directed mode, the classical orthosymplectic group on
//! the self-dual `V` in non-directed mode.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_traits::One;

use crate::diagrams::{
    braid_to_ribbon, brauer_basis, closure, dual_crossing, permutations, BraidWord, Mode, Relation, RibbonWord, Sign,
    Token,
};
use crate::error::{Error, Result};
use crate::glq::{braiding, braiding_inv, duality_maps, GlqRep, QMat};
use crate::ospc::{osp_form, RMat};
use crate::rootdata::RootDatum;
use crate::scalar::{Field, RatFunc, Rational};
use crate::superspace::linalg::Echelon;
use crate::superspace::{graded_kron, tau, SparseMat, SuperSpace};

/// Default bound on the dimension of any tensor space built during
/// evaluation, and on the size of spanning sets.
pub const DEFAULT_BUDGET: usize = 625;

/// Target category of the functor.
#[derive(Debug, Clone, PartialEq)]
pub enum Flavor {
    /// Quantum gl(m|n) on its natural module.
    Glq(RootDatum),
    /// Classical osp(m|2n) at `q = 1`.
    OspClassical { m: usize, n: usize },
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Glq(d) => write!(f, "glq {d}"),
            Flavor::OspClassical { m, n } => write!(f, "osp_classical({m}|{})", 2 * n),
        }
    }
}

/// Generator images and object assignment for one flavor and mode.
#[derive(Debug)]
pub struct EvalContext {
    flavor: Flavor,
    mode: Mode,
    budget: usize,
    plus: SuperSpace,
    minus: SuperSpace,
    images: HashMap<Token, QMat>,
    layer_cache: RwLock<HashMap<Vec<Token>, Arc<QMat>>>,
}

pub fn make_context(flavor: Flavor, mode: Mode) -> Result<EvalContext> {
    let mut images = HashMap::new();
    let (plus, minus) = match &flavor {
        Flavor::Glq(datum) => {
            let rep = GlqRep::natural(datum)?;
            let dual = rep.dual()?;
            let d = rep.dim();
            images.insert(Token::XPlus, braiding(datum)?);
            images.insert(Token::XMinus, braiding_inv(datum)?);
            match mode {
                Mode::Directed => {
                    let maps = duality_maps(datum);
                    images.insert(Token::IPlus, QMat::identity(d));
                    images.insert(Token::IMinus, QMat::identity(d));
                    images.insert(Token::OmegaPlus, maps.omega);
                    images.insert(Token::OmegaMinus, maps.omega_p);
                    images.insert(Token::UPlus, maps.upsilon);
                    images.insert(Token::UMinus, maps.upsilon_p);
                }
                Mode::Nondirected => {
                    images.insert(Token::I, QMat::identity(d));
                }
            }
            (rep.space().clone(), dual.space().clone())
        }
        Flavor::OspClassical { m, n } => {
            if mode != Mode::Nondirected {
                return Err(Error::Unsupported(
                    "the classical osp context is non-directed only".into(),
                ));
            }
            let form = osp_form(*m, *n)?;
            let t: RMat = tau(&form.space, &form.space);
            let t = t.to_ratfunc();
            images.insert(Token::I, QMat::identity(form.dim()));
            images.insert(Token::XPlus, t.clone());
            images.insert(Token::XMinus, t);
            images.insert(Token::Omega, form.pairing().to_ratfunc());
            images.insert(Token::U, form.copairing().to_ratfunc());
            (form.space.clone(), form.space)
        }
    };
    Ok(EvalContext {
        flavor,
        mode,
        budget: DEFAULT_BUDGET,
        plus,
        minus,
        images,
        layer_cache: RwLock::new(HashMap::new()),
    })
}

impl EvalContext {
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn flavor(&self) -> &Flavor {
        &self.flavor
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.flavor, Flavor::OspClassical { .. })
    }

    pub fn datum(&self) -> Option<&RootDatum> {
        match &self.flavor {
            Flavor::Glq(d) => Some(d),
            Flavor::OspClassical { .. } => None,
        }
    }

    /// The module assigned to a strand orientation.
    pub fn space(&self, s: Sign) -> &SuperSpace {
        match s {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    /// The tensor product assigned to a boundary sequence.
    pub fn object(&self, boundary: &[Sign]) -> SuperSpace {
        boundary
            .iter()
            .fold(SuperSpace::unit(0), |acc, &s| acc.tensor(self.space(s)))
    }

    pub fn image(&self, t: Token) -> Result<&QMat> {
        self.images
            .get(&t)
            .ok_or_else(|| Error::Unsupported(format!("token {t} has no image in the {} context", self.flavor)))
    }

    /// Scalars of relations are read at `q = 1` in the classical context.
    pub fn coefficient(&self, c: &RatFunc) -> Result<RatFunc> {
        if self.is_classical() {
            Ok(RatFunc::from_rational(c.specialize(&Rational::one())?))
        } else {
            Ok(c.clone())
        }
    }

    fn parities(&self, boundary: &[Sign]) -> Vec<u8> {
        boundary.iter().fold(vec![0u8], |acc, &s| {
            let p = self.space(s).parities();
            acc.iter().flat_map(|a| p.iter().map(move |b| a ^ b)).collect()
        })
    }

    fn check_budget(&self, boundary: &[Sign]) -> Result<()> {
        let needed = boundary.iter().map(|&s| self.space(s).dim()).product::<usize>();
        if needed > self.budget {
            return Err(Error::BudgetExceeded {
                needed,
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn token_io(&self, t: Token) -> Result<(Vec<Sign>, Vec<Sign>)> {
        let word = RibbonWord::new(self.mode, vec![vec![t]])?;
        Ok((word.source(), word.target()))
    }

    fn layer(&self, layer: &[Token]) -> Result<Arc<QMat>> {
        if let Some(m) = self.layer_cache.read().expect("cache lock").get(layer) {
            return Ok(m.clone());
        }
        let mut acc = QMat::identity(1);
        let mut acc_src: Vec<Sign> = Vec::new();
        for &t in layer {
            let (src, tgt) = self.token_io(t)?;
            acc = graded_kron(
                &acc,
                &self.parities(&acc_src),
                self.image(t)?,
                &self.parities(&src),
                &self.parities(&tgt),
            )?;
            acc_src.extend(src);
        }
        let m = Arc::new(acc);
        self.layer_cache
            .write()
            .expect("cache lock")
            .entry(layer.to_vec())
            .or_insert_with(|| m.clone());
        Ok(m)
    }
}

/// Matrix of a ribbon word: graded tensor product across each layer, then
/// the product of the layers from the bottom up.
pub fn evaluate(word: &RibbonWord, ctx: &EvalContext) -> Result<QMat> {
    if word.mode() != ctx.mode {
        return Err(Error::Validation(format!(
            "a {} word cannot be evaluated in a {} context",
            word.mode(),
            ctx.mode
        )));
    }
    let mut out: Option<QMat> = None;
    for layer in word.layers() {
        let probe = RibbonWord::new(word.mode(), vec![layer.clone()])?;
        ctx.check_budget(&probe.source())?;
        ctx.check_budget(&probe.target())?;
        let m = ctx.layer(layer)?;
        out = Some(match out {
            None => (*m).clone(),
            Some(prev) => m.mul(&prev)?,
        });
    }
    Ok(out.expect("words have at least one layer"))
}

/// Image of the linear combination `Σ c_k w_k`.
pub fn evaluate_relation(rel: &Relation, ctx: &EvalContext) -> Result<QMat> {
    let mut acc: Option<QMat> = None;
    for (c, w) in &rel.terms {
        let term = evaluate(w, ctx)?.scale(&ctx.coefficient(c)?);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    Ok(acc.expect("relations have terms"))
}

fn scalar_of(m: &QMat) -> Result<RatFunc> {
    if m.shape() != (1, 1) {
        return Err(Error::Validation(format!(
            "expected a closed graph, got a {:?} matrix",
            m.shape()
        )));
    }
    Ok(m.entry(0, 0))
}

/// Framed link invariant of the trace closure of a braid.
pub fn invariant(w: &BraidWord, ctx: &EvalContext) -> Result<RatFunc> {
    if !matches!(ctx.flavor, Flavor::Glq(_)) || ctx.mode != Mode::Directed {
        return Err(Error::Unsupported("invariants need a directed glq context".into()));
    }
    scalar_of(&evaluate(&closure(w), ctx)?)
}

/// Which spanning set of diagram images to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageKind {
    Hecke,
    Brauer,
    Walled,
}

impl FromStr for ImageKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hecke" => Ok(ImageKind::Hecke),
            "brauer" => Ok(ImageKind::Brauer),
            "walled" => Ok(ImageKind::Walled),
            _ => Err(Error::Parse(format!("unknown image kind '{s}'"))),
        }
    }
}

/// Diagram images over `Q(q)` (quantum) or `Q` (classical).
#[derive(Debug, Clone)]
pub enum Images {
    Quantum(Vec<QMat>),
    Classical(Vec<RMat>),
}

impl Images {
    pub fn len(&self) -> usize {
        match self {
            Images::Quantum(v) => v.len(),
            Images::Classical(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn double_factorial_odd(r: usize) -> usize {
    (1..=r).map(|k| 2 * k - 1).product()
}

fn guard_count(needed: usize, budget: usize) -> Result<()> {
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Images of a spanning set of the diagram algebra acting on
/// `V^{⊗r}` (and `V*^{⊗s}` for the walled kind).
pub fn image_basis(kind: ImageKind, ctx: &EvalContext, r: usize, s: usize) -> Result<Images> {
    if r == 0 && s == 0 {
        return Err(Error::Validation("need r + s >= 1".into()));
    }
    match kind {
        ImageKind::Hecke => {
            require_glq_directed(ctx)?;
            if s != 0 || r == 0 {
                return Err(Error::Validation("hecke images live on V^{⊗r} with r >= 1".into()));
            }
            guard_count(factorial(r), ctx.budget)?;
            let words: Vec<BraidWord> = permutations(r)
                .iter()
                .map(|p| BraidWord::positive_lift(p))
                .collect::<Result<_>>()?;
            let mats = words
                .iter()
                .map(|w| evaluate(&braid_to_ribbon(w), ctx))
                .collect::<Result<Vec<_>>>()?;
            Ok(Images::Quantum(mats))
        }
        ImageKind::Brauer => {
            if !ctx.is_classical() {
                return Err(Error::Unsupported(
                    "brauer images need the classical osp context".into(),
                ));
            }
            if s != 0 || r == 0 {
                return Err(Error::Validation("brauer images live on V^{⊗r} with r >= 1".into()));
            }
            guard_count(double_factorial_odd(r), ctx.budget)?;
            let one = Rational::one();
            let mats = brauer_basis(r)?
                .iter()
                .map(|d| evaluate(&d.to_ribbon(), ctx)?.specialize(&one))
                .collect::<Result<Vec<_>>>()?;
            Ok(Images::Classical(mats))
        }
        ImageKind::Walled => {
            require_glq_directed(ctx)?;
            Ok(Images::Quantum(walled_images(ctx, r, s)?))
        }
    }
}

fn require_glq_directed(ctx: &EvalContext) -> Result<()> {
    if matches!(ctx.flavor, Flavor::Glq(_)) && ctx.mode == Mode::Directed {
        Ok(())
    } else {
        Err(Error::Unsupported("this needs a directed glq context".into()))
    }
}

/// Walled boundary `(+^r, −^s)`.
pub fn walled_boundary(r: usize, s: usize) -> Vec<Sign> {
    let mut b = vec![Sign::Plus; r];
    b.extend(vec![Sign::Minus; s]);
    b
}

/// Generators of the walled diagrams on `(+^r, −^s)`: crossings on either
/// side of the wall and the turnback across it.
pub fn walled_generators(r: usize, s: usize) -> Vec<RibbonWord> {
    use Sign::{Minus, Plus};
    let mut out = Vec::new();
    let braid = RibbonWord::new(Mode::Directed, vec![vec![Token::XPlus]]).expect("valid");
    for i in 0..r.saturating_sub(1) {
        let mut right = vec![Plus; r - 2 - i];
        right.extend(vec![Minus; s]);
        out.push(braid.pad(&vec![Plus; i], &right));
    }
    let dual = dual_crossing(true);
    for j in 0..s.saturating_sub(1) {
        let mut left = vec![Plus; r];
        left.extend(vec![Minus; j]);
        out.push(dual.pad(&left, &vec![Minus; s - 2 - j]));
    }
    if r >= 1 && s >= 1 {
        let turn = RibbonWord::new(Mode::Directed, vec![vec![Token::OmegaMinus], vec![Token::UPlus]]).expect("valid");
        out.push(turn.pad(&vec![Plus; r - 1], &vec![Minus; s - 1]));
    }
    out
}

/// The algebra generated by the walled generators, as the multiplicative
/// closure of their images; a product is kept when it raises the rank at
/// a fixed generic point.
fn walled_images(ctx: &EvalContext, r: usize, s: usize) -> Result<Vec<QMat>> {
    let boundary = walled_boundary(r, s);
    ctx.check_budget(&boundary)?;
    let dim = ctx.object(&boundary).dim();
    let gens = walled_generators(r, s)
        .iter()
        .map(|w| evaluate(w, ctx))
        .collect::<Result<Vec<_>>>()?;
    let point = crate::scalar::rat(7, 5);
    let mut ech = Echelon::new();
    let mut basis = Vec::new();
    let push = |m: QMat, ech: &mut Echelon, basis: &mut Vec<QMat>| -> Result<()> {
        let v = m.specialize(&point)?.vectorize();
        if ech.insert_rational(&v) {
            basis.push(m);
        }
        Ok(())
    };
    push(QMat::identity(dim), &mut ech, &mut basis)?;
    let mut k = 0;
    while k < basis.len() {
        for g in &gens {
            let p = g.mul(&basis[k])?;
            push(p, &mut ech, &mut basis)?;
        }
        guard_count(basis.len(), ctx.budget)?;
        k += 1;
    }
    Ok(basis)
}

/// The matrix of a Brauer diagram through the classical functor, over `Q`.
pub fn brauer_image(d: &crate::diagrams::BrauerDiagram, ctx: &EvalContext) -> Result<RMat> {
    evaluate(&d.to_ribbon(), ctx)?.specialize(&Rational::one())
}

/// `true` when every entry is zero.
pub fn vanishes<T: Field>(m: &SparseMat<T>) -> bool {
    m.iter().all(|(_, _, v)| v.is_zero())
}
