//! Seeded random ribbon words for the functor property checks.

#![allow(dead_code)]

use qsuper_core::diagrams::{Mode, RibbonWord, Sign, Token};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random boundary of length `1..=max`.
pub fn random_boundary(rng: &mut ChaCha8Rng, max: usize) -> Vec<Sign> {
    let len = rng.gen_range(1..=max);
    (0..len)
        .map(|_| if rng.gen_bool(0.6) { Sign::Plus } else { Sign::Minus })
        .collect()
}

/// One random directed layer on `boundary`, never wider than `max_width`.
pub fn random_layer(rng: &mut ChaCha8Rng, boundary: &[Sign], max_width: usize) -> Vec<Token> {
    let mut out = Vec::new();
    let mut width = boundary.len();
    let mut i = 0;
    while i <= boundary.len() {
        if width + 2 <= max_width && rng.gen_bool(0.15) {
            out.push(if rng.gen_bool(0.5) { Token::UPlus } else { Token::UMinus });
            width += 2;
        }
        if i == boundary.len() {
            break;
        }
        let pair = boundary.get(i + 1).map(|&b| (boundary[i], b));
        let pick = rng.gen_range(0..4);
        match (pair, pick) {
            (Some((Sign::Plus, Sign::Plus)), 0) => {
                out.push(Token::XPlus);
                i += 2;
            }
            (Some((Sign::Plus, Sign::Plus)), 1) => {
                out.push(Token::XMinus);
                i += 2;
            }
            (Some((Sign::Minus, Sign::Plus)), 2) if width > 2 => {
                out.push(Token::OmegaPlus);
                width -= 2;
                i += 2;
            }
            (Some((Sign::Plus, Sign::Minus)), 3) if width > 2 => {
                out.push(Token::OmegaMinus);
                width -= 2;
                i += 2;
            }
            _ => {
                out.push(Token::identity(Mode::Directed, boundary[i]));
                i += 1;
            }
        }
    }
    out
}

/// A random directed word with the given source and `layers` layers.
pub fn random_word(rng: &mut ChaCha8Rng, source: &[Sign], layers: usize, max_width: usize) -> RibbonWord {
    let mut boundary = source.to_vec();
    let mut ls = Vec::new();
    for _ in 0..layers.max(1) {
        let layer = random_layer(rng, &boundary, max_width);
        let probe = RibbonWord::new(Mode::Directed, vec![layer.clone()]).expect("random layer is valid");
        boundary = probe.target();
        ls.push(layer);
    }
    RibbonWord::new(Mode::Directed, ls).expect("random word is valid")
}

/// Random braid letters on `strands` strands.
pub fn random_braid_letters(rng: &mut ChaCha8Rng, strands: usize, len: usize) -> Vec<(usize, i8)> {
    (0..len)
        .map(|_| (rng.gen_range(1..strands), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect()
}
