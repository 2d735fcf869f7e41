//! Diagram objects: layered ribbon-graph words, braid words, Brauer
//! diagrams, and the relation sets of the Hecke, walled BMW and BMW
//! quotients.
//!
//! A ribbon word is read bottom to top: `layers[0]` is applied first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{q_minus_qinv, Field, RatFunc};

/// Orientation of a strand endpoint: `+` is `V`, `−` is `V*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Directed,
    Nondirected,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Directed => "directed",
            Mode::Nondirected => "nondirected",
        })
    }
}

/// Generators of ribbon graphs. The signed variants belong to directed
/// words, `I`, `Omega` and `U` to non-directed words; `X±` to both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Token {
    IPlus,
    IMinus,
    XPlus,
    XMinus,
    OmegaPlus,
    OmegaMinus,
    UPlus,
    UMinus,
    I,
    Omega,
    U,
}

use Sign::{Minus as M, Plus as P};

impl Token {
    /// Source and target sign sequences in directed mode.
    pub fn directed_io(self) -> Option<(&'static [Sign], &'static [Sign])> {
        Some(match self {
            Token::IPlus => (&[P], &[P]),
            Token::IMinus => (&[M], &[M]),
            Token::XPlus | Token::XMinus => (&[P, P], &[P, P]),
            Token::OmegaPlus => (&[M, P], &[]),
            Token::OmegaMinus => (&[P, M], &[]),
            Token::UPlus => (&[], &[P, M]),
            Token::UMinus => (&[], &[M, P]),
            Token::I | Token::Omega | Token::U => return None,
        })
    }

    /// Source and target arities in non-directed mode.
    pub fn arity(self) -> Option<(usize, usize)> {
        Some(match self {
            Token::I => (1, 1),
            Token::XPlus | Token::XMinus => (2, 2),
            Token::Omega => (2, 0),
            Token::U => (0, 2),
            _ => return None,
        })
    }

    pub fn identity(mode: Mode, s: Sign) -> Token {
        match (mode, s) {
            (Mode::Nondirected, _) => Token::I,
            (Mode::Directed, Sign::Plus) => Token::IPlus,
            (Mode::Directed, Sign::Minus) => Token::IMinus,
        }
    }

    fn io(self, mode: Mode) -> Option<(Vec<Sign>, Vec<Sign>)> {
        match mode {
            Mode::Directed => self.directed_io().map(|(s, t)| (s.to_vec(), t.to_vec())),
            Mode::Nondirected => self.arity().map(|(s, t)| (vec![P; s], vec![P; t])),
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Token::IPlus => "I+",
            Token::IMinus => "I-",
            Token::XPlus => "X+",
            Token::XMinus => "X-",
            Token::OmegaPlus => "Omega+",
            Token::OmegaMinus => "Omega-",
            Token::UPlus => "U+",
            Token::UMinus => "U-",
            Token::I => "I",
            Token::Omega => "Omega",
            Token::U => "U",
        })
    }
}

impl FromStr for Token {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace('⁺', "+").replace('⁻', "-").replace('Ω', "Omega");
        Ok(match t.as_str() {
            "I+" => Token::IPlus,
            "I-" => Token::IMinus,
            "X+" => Token::XPlus,
            "X-" => Token::XMinus,
            "Omega+" => Token::OmegaPlus,
            "Omega-" => Token::OmegaMinus,
            "U+" => Token::UPlus,
            "U-" => Token::UMinus,
            "I" => Token::I,
            "Omega" => Token::Omega,
            "U" => Token::U,
            _ => return Err(Error::Parse(format!("unknown ribbon token '{s}'"))),
        })
    }
}

impl TryFrom<String> for Token {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Token> for String {
    fn from(t: Token) -> String {
        t.to_string()
    }
}

/// A ribbon graph as a stack of layers of generator tokens.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawRibbonWord")]
pub struct RibbonWord {
    mode: Mode,
    layers: Vec<Vec<Token>>,
}

#[derive(Deserialize)]
struct RawRibbonWord {
    mode: Mode,
    layers: Vec<Vec<Token>>,
}

impl TryFrom<RawRibbonWord> for RibbonWord {
    type Error = Error;
    fn try_from(raw: RawRibbonWord) -> Result<Self> {
        RibbonWord::new(raw.mode, raw.layers)
    }
}

fn layer_io(mode: Mode, layer: &[Token]) -> Result<(Vec<Sign>, Vec<Sign>)> {
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    for t in layer {
        let (s, g) = t
            .io(mode)
            .ok_or_else(|| Error::Validation(format!("token {t} is not allowed in {mode} mode")))?;
        src.extend(s);
        tgt.extend(g);
    }
    Ok((src, tgt))
}

fn signs_string(s: &[Sign]) -> String {
    if s.is_empty() {
        "∅".into()
    } else {
        s.iter().map(|x| x.to_string()).collect()
    }
}

impl RibbonWord {
    pub fn new(mode: Mode, layers: Vec<Vec<Token>>) -> Result<Self> {
        if layers.is_empty() {
            return Err(Error::Validation("a ribbon word needs at least one layer".into()));
        }
        let mut prev: Option<Vec<Sign>> = None;
        for (k, layer) in layers.iter().enumerate() {
            let (src, tgt) = layer_io(mode, layer)?;
            if let Some(p) = &prev {
                if *p != src {
                    return Err(Error::Validation(format!(
                        "layer {k} has source {} but the layer below ends in {}",
                        signs_string(&src),
                        signs_string(p)
                    )));
                }
            }
            prev = Some(tgt);
        }
        Ok(Self { mode, layers })
    }

    /// A single identity layer on the given boundary.
    pub fn identity(mode: Mode, boundary: &[Sign]) -> Self {
        Self {
            mode,
            layers: vec![boundary.iter().map(|&s| Token::identity(mode, s)).collect()],
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn layers(&self) -> &[Vec<Token>] {
        &self.layers
    }

    pub fn source(&self) -> Vec<Sign> {
        layer_io(self.mode, &self.layers[0]).expect("validated").0
    }

    pub fn target(&self) -> Vec<Sign> {
        layer_io(self.mode, self.layers.last().expect("nonempty"))
            .expect("validated")
            .1
    }

    pub fn is_closed(&self) -> bool {
        self.source().is_empty() && self.target().is_empty()
    }

    /// `other ∘ self`: `self` first, then `other` on top.
    pub fn then(&self, other: &RibbonWord) -> Result<RibbonWord> {
        if self.mode != other.mode {
            return Err(Error::Validation("cannot compose words of different modes".into()));
        }
        let mut layers = self.layers.clone();
        layers.extend(other.layers.iter().cloned());
        RibbonWord::new(self.mode, layers)
    }

    /// Juxtaposition `self ⊗ other`, padding the shorter word with
    /// identity layers at the top.
    pub fn juxtapose(&self, other: &RibbonWord) -> Result<RibbonWord> {
        if self.mode != other.mode {
            return Err(Error::Validation("cannot juxtapose words of different modes".into()));
        }
        let h = self.layers.len().max(other.layers.len());
        let grow = |w: &RibbonWord| {
            let mut l = w.layers.clone();
            let id = RibbonWord::identity(w.mode, &w.target()).layers.remove(0);
            l.resize(h, id);
            l
        };
        let (a, b) = (grow(self), grow(other));
        let layers = a.into_iter().zip(b).map(|(mut x, y)| {
            x.extend(y);
            x
        });
        RibbonWord::new(self.mode, layers.collect())
    }

    /// `id_left ⊗ self ⊗ id_right`.
    pub fn pad(&self, left: &[Sign], right: &[Sign]) -> RibbonWord {
        let l: Vec<Token> = left.iter().map(|&s| Token::identity(self.mode, s)).collect();
        let r: Vec<Token> = right.iter().map(|&s| Token::identity(self.mode, s)).collect();
        let layers = self
            .layers
            .iter()
            .map(|layer| l.iter().chain(layer).chain(&r).copied().collect())
            .collect();
        RibbonWord::new(self.mode, layers).expect("padding keeps the word valid")
    }

    /// Mirror a directed braid-type word into non-directed mode.
    pub fn to_nondirected(&self) -> Result<RibbonWord> {
        let layers = self
            .layers
            .iter()
            .map(|layer| {
                layer
                    .iter()
                    .map(|t| match t {
                        Token::IPlus => Ok(Token::I),
                        Token::XPlus | Token::XMinus => Ok(*t),
                        Token::I | Token::Omega | Token::U => Ok(*t),
                        _ => Err(Error::Validation(format!("token {t} has no non-directed counterpart"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        RibbonWord::new(Mode::Nondirected, layers)
    }
}

impl fmt::Display for RibbonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .layers
            .iter()
            .map(|l| format!("[{}]", l.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "{}: {}", self.mode, body.join(" "))
    }
}

/// A braid word on `strands` strands; letters `(i, ±1)` mean `X_i^±`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i8)>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Validation("a braid needs at least one strand".into()));
        }
        for &(i, e) in &letters {
            if i == 0 || i >= strands {
                return Err(Error::Validation(format!(
                    "generator s{i} needs 1 <= i <= {} on {strands} strands",
                    strands - 1
                )));
            }
            if e != 1 && e != -1 {
                return Err(Error::Validation(format!("exponent {e} is not ±1")));
            }
        }
        Ok(Self { strands, letters })
    }

    /// Parse `"s1 s2^-1 s1"`. With `strands = None` the braid uses the
    /// fewest strands that fit the letters.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let body = tok
                .strip_prefix('s')
                .ok_or_else(|| Error::Parse(format!("braid letter '{tok}' must look like s1 or s1^-1")))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, "-1")) => (i, -1),
                Some((i, "1")) | Some((i, "+1")) => (i, 1),
                Some(_) => return Err(Error::Parse(format!("bad exponent in '{tok}'"))),
                None => (body, 1),
            };
            let i: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index in '{tok}'")))?;
            letters.push((i, exp));
        }
        let need = letters.iter().map(|&(i, _)| i + 1).max().unwrap_or(1);
        BraidWord::new(strands.unwrap_or(need), letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    /// Positive lift `X_{j_1}^+ … ` of a reduced word of a permutation of
    /// `0..r`, where `perm[j]` is the image of `j`.
    pub fn positive_lift(perm: &[usize]) -> Result<Self> {
        let word = permutation_word(perm)?;
        BraidWord::new(perm.len().max(1), word.into_iter().map(|j| (j, 1)).collect())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, e)| if e < 0 { format!("s{i}^-1") } else { format!("s{i}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Reduced word `[j_1, …, j_k]` (1-based) with `perm = s_{j_k} ∘ … ∘ s_{j_1}`.
pub fn permutation_word(perm: &[usize]) -> Result<Vec<usize>> {
    let r = perm.len();
    let mut seen = vec![false; r];
    for &p in perm {
        if p >= r || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Validation(format!("{perm:?} is not a permutation")));
        }
    }
    let mut cur = perm.to_vec();
    let mut word = Vec::new();
    while let Some(j) = (0..r.saturating_sub(1)).find(|&j| cur[j] > cur[j + 1]) {
        cur.swap(j, j + 1);
        word.push(j + 1);
    }
    Ok(word)
}

/// All permutations of `0..r` in lexicographic order.
pub fn permutations(r: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; r], &mut out);
    out
}

fn braid_layer(strands: usize, i: usize, tok: Token) -> Vec<Token> {
    let mut layer = vec![Token::IPlus; strands - 1];
    layer[i - 1] = tok;
    layer
}

/// One directed layer per letter, identities on the untouched strands.
pub fn braid_to_ribbon(w: &BraidWord) -> RibbonWord {
    let layers: Vec<Vec<Token>> = if w.letters.is_empty() {
        vec![vec![Token::IPlus; w.strands]]
    } else {
        w.letters
            .iter()
            .map(|&(i, e)| braid_layer(w.strands, i, if e > 0 { Token::XPlus } else { Token::XMinus }))
            .collect()
    };
    RibbonWord::new(Mode::Directed, layers).expect("braid layers are valid")
}

/// Trace closure to the right: nested `U⁺` caps, the braid with `I⁻` on
/// the returning strands, nested `Ω⁻` cups.
pub fn closure(w: &BraidWord) -> RibbonWord {
    let r = w.strands;
    let mut layers = Vec::new();
    for t in 0..r {
        let mut l = vec![Token::IPlus; t];
        l.push(Token::UPlus);
        l.extend(vec![Token::IMinus; t]);
        layers.push(l);
    }
    for &(i, e) in &w.letters {
        let mut l = braid_layer(r, i, if e > 0 { Token::XPlus } else { Token::XMinus });
        l.extend(vec![Token::IMinus; r]);
        layers.push(l);
    }
    for t in 0..r {
        let k = r - 1 - t;
        let mut l = vec![Token::IPlus; k];
        l.push(Token::OmegaMinus);
        l.extend(vec![Token::IMinus; k]);
        layers.push(l);
    }
    RibbonWord::new(Mode::Directed, layers).expect("closure is a valid (∅, ∅) word")
}

/// Crossing of two `−` strands, obtained by rotating `X^±` with the left
/// duality.
pub fn dual_crossing(positive: bool) -> RibbonWord {
    let x = if positive { Token::XPlus } else { Token::XMinus };
    use Token::*;
    RibbonWord::new(
        Mode::Directed,
        vec![
            vec![IMinus, IMinus, UPlus],
            vec![IMinus, IMinus, IPlus, UPlus, IMinus],
            vec![IMinus, IMinus, x, IMinus, IMinus],
            vec![IMinus, OmegaPlus, IPlus, IMinus, IMinus],
            vec![OmegaPlus, IMinus, IMinus],
        ],
    )
    .expect("rotated crossing is valid")
}

/// A perfect matching on `r` bottom points `0..r` and `r` top points
/// `r..2r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    r: usize,
    partner: Vec<usize>,
}

/// Brauer algebra generators, 1-based: `S(i)` swaps strands `i, i+1`,
/// `E(i)` is the cup-cap on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrauerLetter {
    S(usize),
    E(usize),
}

impl fmt::Display for BrauerLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrauerLetter::S(i) => write!(f, "s{i}"),
            BrauerLetter::E(i) => write!(f, "e{i}"),
        }
    }
}

impl BrauerDiagram {
    pub fn new(r: usize, partner: Vec<usize>) -> Result<Self> {
        if partner.len() != 2 * r {
            return Err(Error::Validation(format!(
                "need {} endpoints, got {}",
                2 * r,
                partner.len()
            )));
        }
        for (p, &q) in partner.iter().enumerate() {
            if q >= 2 * r || q == p || partner[q] != p {
                return Err(Error::Validation(format!("{partner:?} is not a perfect matching")));
            }
        }
        Ok(Self { r, partner })
    }

    pub fn identity(r: usize) -> Self {
        let partner = (0..2 * r).map(|p| if p < r { p + r } else { p - r }).collect();
        Self { r, partner }
    }

    /// Permutation diagram joining bottom `j` to top `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let r = perm.len();
        let mut partner = vec![0; 2 * r];
        for (j, &p) in perm.iter().enumerate() {
            if p >= r {
                return Err(Error::Validation(format!("{perm:?} is not a permutation")));
            }
            partner[j] = r + p;
            partner[r + p] = j;
        }
        Self::new(r, partner)
    }

    pub fn letter(r: usize, l: BrauerLetter) -> Result<Self> {
        let i = match l {
            BrauerLetter::S(i) | BrauerLetter::E(i) => i,
        };
        if i == 0 || i >= r {
            return Err(Error::Validation(format!("{l} is out of range on {r} strands")));
        }
        let mut d = Self::identity(r);
        let (a, b) = (i - 1, i);
        let p = &mut d.partner;
        match l {
            BrauerLetter::S(_) => {
                p[a] = r + b;
                p[r + b] = a;
                p[b] = r + a;
                p[r + a] = b;
            }
            BrauerLetter::E(_) => {
                p[a] = b;
                p[b] = a;
                p[r + a] = r + b;
                p[r + b] = r + a;
            }
        }
        Ok(d)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn partner(&self) -> &[usize] {
        &self.partner
    }

    /// Number of bottom-to-bottom arcs.
    pub fn cups(&self) -> usize {
        (0..self.r).filter(|&p| self.partner[p] < self.r).count() / 2
    }

    /// A word in the generators, applied bottom first, that equals this
    /// diagram with no closed loops: a permutation, then
    /// `e_1 e_3 … e_{2k−1}`, then a permutation.
    pub fn word(&self) -> Vec<BrauerLetter> {
        let r = self.r;
        let p = &self.partner;
        let mut list_b = Vec::new();
        let mut list_t = Vec::new();
        let mut through = Vec::new();
        for a in 0..r {
            if p[a] < r {
                if a < p[a] {
                    list_b.extend([a, p[a]]);
                }
            } else {
                through.push((p[a] - r, a));
            }
            let ta = r + a;
            if p[ta] >= r && ta < p[ta] {
                list_t.extend([a, p[ta] - r]);
            }
        }
        through.sort();
        let k = list_b.len() / 2;
        for &(t, b) in &through {
            list_b.push(b);
            list_t.push(t);
        }
        let mut perm_b = vec![0; r];
        for (j, &b) in list_b.iter().enumerate() {
            perm_b[b] = j;
        }
        let mut word: Vec<BrauerLetter> = permutation_word(&perm_b)
            .expect("permutation")
            .into_iter()
            .map(BrauerLetter::S)
            .collect();
        word.extend((0..k).map(|i| BrauerLetter::E(2 * i + 1)));
        word.extend(
            permutation_word(&list_t)
                .expect("permutation")
                .into_iter()
                .map(BrauerLetter::S),
        );
        word
    }

    /// The non-directed ribbon word of [`BrauerDiagram::word`]; `e_i` is
    /// `Ω` followed by `U`.
    pub fn to_ribbon(&self) -> RibbonWord {
        letters_to_ribbon(self.r, &self.word())
    }
}

/// Non-directed ribbon word of a Brauer word on `r` strands.
pub fn letters_to_ribbon(r: usize, word: &[BrauerLetter]) -> RibbonWord {
    let mut layers = Vec::new();
    for &l in word {
        match l {
            BrauerLetter::S(i) => {
                let mut layer = vec![Token::I; r - 1];
                layer[i - 1] = Token::XPlus;
                layers.push(layer);
            }
            BrauerLetter::E(i) => {
                let mut cap = vec![Token::I; r - 2];
                cap.insert(i - 1, Token::Omega);
                let mut cup = vec![Token::I; r - 2];
                cup.insert(i - 1, Token::U);
                layers.push(cap);
                layers.push(cup);
            }
        }
    }
    if layers.is_empty() {
        layers.push(vec![Token::I; r]);
    }
    RibbonWord::new(Mode::Nondirected, layers).expect("Brauer word layers are valid")
}

/// `d1 ∘ d2` (`d2` below): the stacked matching and `δ^{#loops}`.
pub fn compose_brauer<T: Field>(d1: &BrauerDiagram, d2: &BrauerDiagram, delta: &T) -> Result<(BrauerDiagram, T)> {
    if d1.r != d2.r {
        return Err(Error::DimensionMismatch {
            op: "compose_brauer",
            left: (d1.r, d1.r),
            right: (d2.r, d2.r),
        });
    }
    let r = d1.r;
    let mut seen_mid = vec![false; r];
    let mut partner = vec![usize::MAX; 2 * r];
    // Walk from an outer endpoint; `upper` says which diagram we are in.
    let walk = |mut upper: bool, mut p: usize, seen: &mut Vec<bool>| -> usize {
        loop {
            if upper {
                let q = d1.partner[p];
                if q >= r {
                    return q;
                }
                seen[q] = true;
                upper = false;
                p = r + q;
            } else {
                let q = d2.partner[p];
                if q < r {
                    return q;
                }
                seen[q - r] = true;
                upper = true;
                p = q - r;
            }
        }
    };
    for start in 0..2 * r {
        if partner[start] != usize::MAX {
            continue;
        }
        let end = if start < r {
            walk(false, start, &mut seen_mid)
        } else {
            walk(true, start, &mut seen_mid)
        };
        partner[start] = end;
        partner[end] = start;
    }
    let mut loops = 0u32;
    for m in 0..r {
        if seen_mid[m] {
            continue;
        }
        loops += 1;
        let mut cur = m;
        loop {
            seen_mid[cur] = true;
            // up through d1 from its bottom point `cur`, back down through d2
            let a = d1.partner[cur];
            let b = d2.partner[r + a];
            seen_mid[a] = true;
            cur = b - r;
            if cur == m {
                break;
            }
        }
    }
    let mut scalar = T::one();
    for _ in 0..loops {
        scalar = scalar.mul_ref(delta);
    }
    Ok((BrauerDiagram::new(r, partner)?, scalar))
}

/// All `(2r−1)!!` Brauer diagrams on `r` strands.
pub fn brauer_basis(r: usize) -> Result<Vec<BrauerDiagram>> {
    if r > 6 {
        return Err(Error::Guard(format!("brauer_basis is limited to r <= 6, got {r}")));
    }
    fn go(partner: &mut Vec<usize>, r: usize, out: &mut Vec<BrauerDiagram>) {
        let Some(a) = partner.iter().position(|&x| x == usize::MAX) else {
            out.push(BrauerDiagram {
                r,
                partner: partner.clone(),
            });
            return;
        };
        for b in a + 1..2 * r {
            if partner[b] == usize::MAX {
                partner[a] = b;
                partner[b] = a;
                go(partner, r, out);
                partner[a] = usize::MAX;
                partner[b] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; 2 * r], r, &mut out);
    Ok(out)
}

/// A linear relation `Σ c_k · w_k = 0` between ribbon words that share
/// source and target.
#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(RatFunc, RibbonWord)>,
}

impl Relation {
    pub fn new(name: impl Into<String>, terms: Vec<(RatFunc, RibbonWord)>) -> Result<Self> {
        let name = name.into();
        let first = terms
            .first()
            .ok_or_else(|| Error::Validation(format!("relation '{name}' has no terms")))?;
        let (src, tgt, mode) = (first.1.source(), first.1.target(), first.1.mode());
        if terms
            .iter()
            .any(|(_, w)| w.source() != src || w.target() != tgt || w.mode() != mode)
        {
            return Err(Error::Validation(format!(
                "terms of '{name}' have different boundaries"
            )));
        }
        Ok(Self { name, terms })
    }

    pub fn source(&self) -> Vec<Sign> {
        self.terms[0].1.source()
    }

    pub fn mode(&self) -> Mode {
        self.terms[0].1.mode()
    }

    /// The same relation with identity strands on both sides.
    pub fn pad(&self, left: &[Sign], right: &[Sign]) -> Relation {
        Relation {
            name: self.name.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, w)| (c.clone(), w.pad(left, right)))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QuotientKind {
    Hecke,
    WalledBmw,
    Bmw,
}

impl FromStr for QuotientKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "hecke" => Ok(QuotientKind::Hecke),
            "walledbmw" | "walled" => Ok(QuotientKind::WalledBmw),
            "bmw" => Ok(QuotientKind::Bmw),
            _ => Err(Error::Parse(format!("unknown quotient kind '{s}'"))),
        }
    }
}

impl fmt::Display for QuotientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuotientKind::Hecke => "hecke",
            QuotientKind::WalledBmw => "walledbmw",
            QuotientKind::Bmw => "bmw",
        })
    }
}

/// Parameters of the quotient relation sets.
#[derive(Debug, Clone)]
pub enum QuotientParams {
    Hecke,
    /// Loop value `z`.
    WalledBmw {
        z: RatFunc,
    },
    /// Kink value `y` and loop value `sdim`.
    Bmw {
        y: RatFunc,
        sdim: RatFunc,
    },
}

impl QuotientParams {
    pub fn kind(&self) -> QuotientKind {
        match self {
            QuotientParams::Hecke => QuotientKind::Hecke,
            QuotientParams::WalledBmw { .. } => QuotientKind::WalledBmw,
            QuotientParams::Bmw { .. } => QuotientKind::Bmw,
        }
    }
}

fn w(mode: Mode, layers: Vec<Vec<Token>>) -> RibbonWord {
    RibbonWord::new(mode, layers).expect("relation word is valid")
}

fn c(x: i64) -> RatFunc {
    RatFunc::from_int(x)
}

/// The defining relations of the quotient, on the fewest strands each
/// needs.
pub fn quotient_relations(params: &QuotientParams) -> Result<Vec<Relation>> {
    use Token::*;
    let z = q_minus_qinv();
    let d = Mode::Directed;
    let hecke = Relation::new(
        "X+ - X- - (q - q^-1) I",
        vec![
            (c(1), w(d, vec![vec![XPlus]])),
            (c(-1), w(d, vec![vec![XMinus]])),
            (z.neg_ref(), w(d, vec![vec![IPlus, IPlus]])),
        ],
    )?;
    match params {
        QuotientParams::Hecke => Ok(vec![hecke]),
        QuotientParams::WalledBmw { z: loop_z } => {
            let empty = w(d, vec![vec![]]);
            Ok(vec![
                hecke,
                Relation::new(
                    "Omega- U+ - z",
                    vec![
                        (c(1), w(d, vec![vec![UPlus], vec![OmegaMinus]])),
                        (loop_z.neg_ref(), empty.clone()),
                    ],
                )?,
                Relation::new(
                    "Omega+ U- - z",
                    vec![
                        (c(1), w(d, vec![vec![UMinus], vec![OmegaPlus]])),
                        (loop_z.neg_ref(), empty),
                    ],
                )?,
            ])
        }
        QuotientParams::Bmw { y, sdim } => {
            let n = Mode::Nondirected;
            let e = vec![vec![Omega], vec![U]];
            let cat = |parts: &[&[Vec<Token>]]| w(n, parts.iter().flat_map(|p| p.iter().cloned()).collect());
            let g: &[Vec<Token>] = &[vec![XPlus]];
            let gi: &[Vec<Token>] = &[vec![XMinus]];
            let yi = y
                .inv()
                .ok_or_else(|| Error::Validation("y must be invertible".into()))?;
            let e1: &[Vec<Token>] = &[vec![Omega, I], vec![U, I]];
            let e2: &[Vec<Token>] = &[vec![I, Omega], vec![I, U]];
            let g1: &[Vec<Token>] = &[vec![XPlus, I]];
            let g2: &[Vec<Token>] = &[vec![I, XPlus]];
            Ok(vec![
                Relation::new(
                    "g - g^-1 - z (1 - e)",
                    vec![
                        (c(1), cat(&[g])),
                        (c(-1), cat(&[gi])),
                        (z.neg_ref(), w(n, vec![vec![I, I]])),
                        (z.clone(), cat(&[&e])),
                    ],
                )?,
                Relation::new(
                    "e^2 - sdim e",
                    vec![(c(1), cat(&[&e, &e])), (sdim.neg_ref(), cat(&[&e]))],
                )?,
                Relation::new("e g - y e", vec![(c(1), cat(&[g, &e])), (y.neg_ref(), cat(&[&e]))])?,
                Relation::new("g e - y e", vec![(c(1), cat(&[&e, g])), (y.neg_ref(), cat(&[&e]))])?,
                Relation::new(
                    "e g^-1 - y^-1 e",
                    vec![(c(1), cat(&[gi, &e])), (yi.neg_ref(), cat(&[&e]))],
                )?,
                Relation::new(
                    "g1 g2 g1 - g2 g1 g2",
                    vec![(c(1), cat(&[g1, g2, g1])), (c(-1), cat(&[g2, g1, g2]))],
                )?,
                Relation::new("e1 e2 e1 - e1", vec![(c(1), cat(&[e1, e2, e1])), (c(-1), cat(&[e1]))])?,
                Relation::new("e2 e1 e2 - e2", vec![(c(1), cat(&[e2, e1, e2])), (c(-1), cat(&[e2]))])?,
                Relation::new(
                    "g1 g2 e1 - e2 e1",
                    vec![(c(1), cat(&[e1, g2, g1])), (c(-1), cat(&[e1, e2]))],
                )?,
            ])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn delta() -> Rational {
        rat(7, 3)
    }

    #[test]
    fn token_round_trip() {
        for t in [
            "I+", "I-", "X+", "X-", "Omega+", "Omega-", "U+", "U-", "I", "Omega", "U",
        ] {
            assert_eq!(t.parse::<Token>().unwrap().to_string(), t);
        }
        assert_eq!("Ω⁻".parse::<Token>().unwrap(), Token::OmegaMinus);
        assert!("Y".parse::<Token>().is_err());
    }

    #[test]
    fn word_validation() {
        use Token::*;
        assert!(RibbonWord::new(Mode::Directed, vec![vec![UPlus], vec![OmegaMinus]]).is_ok());
        assert!(RibbonWord::new(Mode::Directed, vec![vec![UPlus], vec![OmegaPlus]]).is_err());
        assert!(RibbonWord::new(Mode::Directed, vec![vec![I]]).is_err());
        assert!(RibbonWord::new(Mode::Nondirected, vec![vec![U], vec![XPlus, I]]).is_err());
        assert!(RibbonWord::new(Mode::Nondirected, vec![vec![U], vec![XPlus]]).is_ok());
        assert!(RibbonWord::new(Mode::Nondirected, vec![]).is_err());
    }

    #[test]
    fn json_schema() {
        let w = closure(&BraidWord::parse("s1", None).unwrap());
        let text = serde_json::to_string(&w).unwrap();
        assert!(text.starts_with("{\"mode\":\"directed\",\"layers\":[[\"U+\"]"));
        let back: RibbonWord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);
        let bad = r#"{"mode":"directed","layers":[["U+"],["Omega+"]]}"#;
        assert!(serde_json::from_str::<RibbonWord>(bad).is_err());
    }

    #[test]
    fn braid_parsing() {
        let b = BraidWord::parse("s1 s2^-1 s1", None).unwrap();
        assert_eq!(b.strands(), 3);
        assert_eq!(b.letters(), &[(1, 1), (2, -1), (1, 1)]);
        assert_eq!(b.to_string(), "s1 s2^-1 s1");
        assert_eq!(BraidWord::parse("", None).unwrap().strands(), 1);
        assert!(BraidWord::parse("s0", None).is_err());
        assert!(BraidWord::parse("s3", Some(3)).is_err());
        assert!(BraidWord::parse("t1", None).is_err());
        assert!(BraidWord::parse("s1^2", None).is_err());
    }

    #[test]
    fn braid_to_ribbon_examples() {
        let e = braid_to_ribbon(&BraidWord::new(2, vec![]).unwrap());
        assert_eq!(e.layers(), &[vec![Token::IPlus, Token::IPlus]]);
        let one = braid_to_ribbon(&BraidWord::new(3, vec![(1, 1)]).unwrap());
        assert_eq!(one.layers(), &[vec![Token::XPlus, Token::IPlus]]);
        let two = braid_to_ribbon(&BraidWord::new(3, vec![(1, 1), (2, -1)]).unwrap());
        assert_eq!(two.layers().len(), 2);
    }

    #[test]
    fn closure_is_closed() {
        let c1 = closure(&BraidWord::new(1, vec![]).unwrap());
        assert_eq!(c1.layers(), &[vec![Token::UPlus], vec![Token::OmegaMinus]]);
        let c3 = closure(&BraidWord::parse("s1 s2^-1", None).unwrap());
        assert!(c3.is_closed());
        assert_eq!(c3.layers().len(), 8);
        let d = dual_crossing(true);
        assert_eq!(d.source(), vec![Sign::Minus, Sign::Minus]);
        assert_eq!(d.target(), vec![Sign::Minus, Sign::Minus]);
    }

    #[test]
    fn juxtapose_and_stack() {
        let a = braid_to_ribbon(&BraidWord::parse("s1 s1", None).unwrap());
        let b = RibbonWord::identity(Mode::Directed, &[Sign::Minus]);
        let j = a.juxtapose(&b).unwrap();
        assert_eq!(j.layers().len(), 2);
        assert_eq!(j.source(), vec![Sign::Plus, Sign::Plus, Sign::Minus]);
        assert!(a.then(&b).is_err());
        assert_eq!(a.then(&a).unwrap().layers().len(), 4);
    }

    #[test]
    fn brauer_counts() {
        assert_eq!(brauer_basis(1).unwrap().len(), 1);
        assert_eq!(brauer_basis(2).unwrap().len(), 3);
        assert_eq!(brauer_basis(3).unwrap().len(), 15);
        assert_eq!(brauer_basis(4).unwrap().len(), 105);
        assert_eq!(brauer_basis(5).unwrap().len(), 945);
        assert!(brauer_basis(7).is_err());
    }

    #[test]
    fn brauer_composition_examples() {
        let e = BrauerDiagram::letter(2, BrauerLetter::E(1)).unwrap();
        let s = BrauerDiagram::letter(2, BrauerLetter::S(1)).unwrap();
        let id = BrauerDiagram::identity(2);
        assert_eq!(compose_brauer(&e, &e, &delta()).unwrap(), (e.clone(), delta()));
        assert_eq!(compose_brauer(&id, &s, &delta()).unwrap(), (s.clone(), rat(1, 1)));
        assert_eq!(compose_brauer(&s, &s, &delta()).unwrap(), (id.clone(), rat(1, 1)));
        assert_eq!(compose_brauer(&s, &e, &delta()).unwrap(), (e.clone(), rat(1, 1)));
        assert!(compose_brauer(&id, &BrauerDiagram::identity(3), &delta()).is_err());
        // a closed loop only in the middle region
        let e3 = BrauerDiagram::letter(3, BrauerLetter::E(1)).unwrap();
        let f3 = BrauerDiagram::letter(3, BrauerLetter::E(2)).unwrap();
        assert_eq!(compose_brauer(&e3, &f3, &delta()).unwrap().1, rat(1, 1));
        assert_eq!(
            compose_brauer(&e3, &compose_brauer(&f3, &e3, &delta()).unwrap().0, &delta()).unwrap(),
            (e3.clone(), rat(1, 1))
        );
    }

    #[test]
    fn brauer_associativity_exhaustive() {
        for r in 2..=3 {
            let basis = brauer_basis(r).unwrap();
            for a in &basis {
                for b in &basis {
                    let (ab, x) = compose_brauer(a, b, &delta()).unwrap();
                    for c in &basis {
                        let (ab_c, y) = compose_brauer(&ab, c, &delta()).unwrap();
                        let (bc, u) = compose_brauer(b, c, &delta()).unwrap();
                        let (a_bc, v) = compose_brauer(a, &bc, &delta()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        assert_eq!(&x * &y, &u * &v);
                    }
                }
            }
        }
    }

    #[test]
    fn brauer_words_rebuild_diagrams() {
        for r in 1..=4 {
            for d in brauer_basis(r).unwrap() {
                let mut acc = BrauerDiagram::identity(r);
                for l in d.word() {
                    let (next, s) = compose_brauer(&BrauerDiagram::letter(r, l).unwrap(), &acc, &delta()).unwrap();
                    assert_eq!(s, rat(1, 1));
                    acc = next;
                }
                assert_eq!(acc, d, "word {:?}", d.word());
                assert!(d.to_ribbon().source().len() == r);
            }
        }
    }

    #[test]
    fn permutation_words() {
        for perm in permutations(4) {
            let word = permutation_word(&perm).unwrap();
            let mut acc = BrauerDiagram::identity(4);
            for j in &word {
                acc = compose_brauer(&BrauerDiagram::letter(4, BrauerLetter::S(*j)).unwrap(), &acc, &delta())
                    .unwrap()
                    .0;
            }
            assert_eq!(acc, BrauerDiagram::permutation(&perm).unwrap());
            let inversions = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            assert_eq!(word.len(), inversions);
        }
        assert!(permutation_word(&[0, 0]).is_err());
    }

    #[test]
    fn relation_sets() {
        assert_eq!(quotient_relations(&QuotientParams::Hecke).unwrap().len(), 1);
        let w = quotient_relations(&QuotientParams::WalledBmw { z: RatFunc::one() }).unwrap();
        assert_eq!(w.len(), 3);
        assert!(w[1].source().is_empty());
        let b = quotient_relations(&QuotientParams::Bmw {
            y: RatFunc::one(),
            sdim: RatFunc::one(),
        })
        .unwrap();
        assert!(b.iter().all(|r| r.mode() == Mode::Nondirected));
        assert!("nope".parse::<QuotientKind>().is_err());
        assert_eq!("walled-bmw".parse::<QuotientKind>().unwrap(), QuotientKind::WalledBmw);
    }
}
