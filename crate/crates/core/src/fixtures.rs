//! Built-in colorings, written as digit strings per class.

use crate::deck::{Hand, Signature};
use crate::error::{Error, Result};
use crate::protocols::Coloring;

pub const FIXTURE_NAMES: [&str; 5] = ["six_chi", "six_chi1", "six_chi2", "two_msg_331", "j42_safe"];

const SIX_CHI: [&str; 6] = [
    "012 034 056 135 146 236 245",
    "016 024 035 123 145 256 346",
    "015 023 046 124 136 345",
    "013 026 045 125 234 356",
    "014 025 036 126 456",
    "134 156 235 246",
];

const SIX_CHI1: [&str; 6] = [
    "034 056 135 146 236 245",
    "016 024 035 123 145 256 346",
    "015 023 046 124 136 345",
    "013 026 045 125 234 356",
    "014 025 036 126 456",
    "012 134 156 235 246",
];

const SIX_CHI2: [&str; 6] = [
    "013 026 045 124 156 235 346",
    "015 023 046 126 134 245 356",
    "016 024 035 123 145 256",
    "012 036 135 234 456",
    "056 034 125 146 236",
    "014 025 136 246 345",
];

const TWO_MSG_331: [&str; 2] = [
    "012 013 014 015 016 023 024 025 036 046 056 126 134 135 234 236 245 246 345 356 456",
    "026 034 035 045 123 124 125 136 145 146 156 235 256 346",
];

const J42_SAFE: [&str; 3] = ["01 23", "02 13", "03 12"];

fn digits(word: &str) -> Hand {
    debug_assert!(word.bytes().all(|b| b.is_ascii_digit()));
    Hand::from_cards(word.bytes().map(|b| b - b'0'))
}

fn build(n: usize, a: usize, rows: &[&str], sig: Signature, name: &str) -> Result<(Coloring, Signature)> {
    let classes: Vec<Vec<Hand>> =
        rows.iter().map(|row| row.split_whitespace().map(digits).collect()).collect();
    let col = Coloring::from_classes(n, a, &classes)?.with_note(format!("fixture {name}"));
    Ok((col, sig))
}

/// A transcribed coloring and the signature it is stated for.
pub fn builtin_fixture(name: &str) -> Result<(Coloring, Signature)> {
    match name {
        "six_chi" => build(7, 3, &SIX_CHI, Signature::new(3, 3, 0, 1)?, name),
        "six_chi1" => build(7, 3, &SIX_CHI1, Signature::new(3, 3, 0, 1)?, name),
        "six_chi2" => build(7, 3, &SIX_CHI2, Signature::new(3, 3, 1, 0)?, name),
        "two_msg_331" => build(7, 3, &TWO_MSG_331, Signature::new(3, 3, 1, 0)?, name),
        "j42_safe" => build(4, 2, &J42_SAFE, Signature::new(2, 1, 0, 1)?, name),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}
