//! What B learns from an announcement.

use crate::deck::{subsets_of, Card, Hand, Signature};
use crate::error::{Error, Result};
use crate::protocols::{Coloring, MessageId};

/// Hands of color `msg` inside the clique of `b_hand`.
fn candidates(b_hand: Hand, msg: MessageId, col: &Coloring, sig: &Signature) -> Result<Vec<Hand>> {
    col.check_dimensions(sig)?;
    if b_hand.len() != sig.b() || b_hand.span() > sig.n() {
        return Err(Error::InvalidArguments(format!("{b_hand} is not a {}-hand of {} cards", sig.b(), sig.n())));
    }
    let found: Vec<Hand> =
        subsets_of(b_hand.complement(sig.n()), sig.a()).filter(|&h| col.color(h) == msg).collect();
    if found.is_empty() {
        return Err(Error::InconsistentAnnouncement(format!(
            "no hand avoiding {b_hand} has message {msg}"
        )));
    }
    Ok(found)
}

/// A's hand, when the announcement pins it down.
pub fn decode_full(b_hand: Hand, msg: MessageId, col: &Coloring, sig: &Signature) -> Result<Hand> {
    match candidates(b_hand, msg, col, sig)?.as_slice() {
        [only] => Ok(*only),
        many => Err(Error::Ambiguous(format!(
            "{} hands avoiding {b_hand} have message {msg}",
            many.len()
        ))),
    }
}

/// The least `(c+r)`-set outside `b_hand` meeting every hand A might hold.
pub fn decode_min(b_hand: Hand, msg: MessageId, col: &Coloring, sig: &Signature) -> Result<Hand> {
    if sig.hidden() == 0 {
        return Err(Error::Undefined("minimal decoding needs c+r >= 1".into()));
    }
    let found = candidates(b_hand, msg, col, sig)?;
    subsets_of(b_hand.complement(sig.n()), sig.hidden())
        .find(|&s| found.iter().all(|h| !h.is_disjoint(s)))
        .ok_or_else(|| {
            Error::NotMinimallyInformative(format!("every hand avoiding {b_hand} has message {msg}"))
        })
}

/// The single card of [`decode_min`] when `c+r = 1`.
pub fn learned_card(b_hand: Hand, msg: MessageId, col: &Coloring, sig: &Signature) -> Result<Card> {
    if sig.hidden() != 1 {
        return Err(Error::OutOfScope(format!("a single learned card needs c+r=1, got {}", sig.hidden())));
    }
    let s = decode_min(b_hand, msg, col, sig)?;
    Ok(s.cards().next().expect("decode_min returns c+r cards"))
}
