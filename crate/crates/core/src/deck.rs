//! Decks, hands, signatures and deals.
//!
//! A deck is the card set `{0, .., n-1}` with `n <= 64`. Hands are stored as
//! 64-bit membership masks, so intersection, union and containment are single
//! word operations. Every ordered listing of hands in this crate uses the
//! lexicographic order of the sorted card lists (`012 < 013 < ... < 456`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported deck.
pub const MAX_DECK: usize = 64;

/// A single card of the deck.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Card(pub u8);

impl Card {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u8> for Card {
    fn from(v: u8) -> Self {
        Card(v)
    }
}

impl fmt::Display for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Card {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: u8 = s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArguments(format!("`{s}` is not a card")))?;
        if v as usize >= MAX_DECK {
            return Err(Error::InvalidArguments(format!("card {v} exceeds the deck limit")));
        }
        Ok(Card(v))
    }
}

/// A set of cards.
///
/// The deck size is not stored; operations that need it (complement,
/// ranking) take it as an argument.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Hand(u64);

impl Hand {
    pub const EMPTY: Hand = Hand(0);

    pub const fn from_bits(bits: u64) -> Self {
        Hand(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full deck `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_DECK);
        if n == MAX_DECK {
            Hand(u64::MAX)
        } else {
            Hand((1u64 << n) - 1)
        }
    }

    pub fn from_cards<I: IntoIterator<Item = u8>>(cards: I) -> Self {
        let mut bits = 0u64;
        for c in cards {
            assert!((c as usize) < MAX_DECK, "card {c} out of range");
            bits |= 1 << c;
        }
        Hand(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, card: Card) -> bool {
        card.index() < MAX_DECK && self.0 >> card.0 & 1 == 1
    }

    pub fn with(self, card: Card) -> Hand {
        Hand(self.0 | 1 << card.0)
    }

    pub fn without(self, card: Card) -> Hand {
        Hand(self.0 & !(1 << card.0))
    }

    pub fn union(self, other: Hand) -> Hand {
        Hand(self.0 | other.0)
    }

    pub fn intersection(self, other: Hand) -> Hand {
        Hand(self.0 & other.0)
    }

    pub fn difference(self, other: Hand) -> Hand {
        Hand(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Hand) -> Hand {
        Hand(self.0 ^ other.0)
    }

    pub fn is_disjoint(self, other: Hand) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Hand) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest card plus one, or zero for the empty hand.
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Cards in ascending order.
    pub fn cards(self) -> Cards {
        Cards(self.0)
    }

    /// `{0..n-1} \ self`.
    pub fn complement(self, n: usize) -> Hand {
        Hand(!self.0 & Hand::full(n).0)
    }

    /// Position of this hand in [`enumerate_hands`]`(n, self.len())`.
    pub fn lex_rank(self, n: usize) -> usize {
        debug_assert!(self.span() <= n);
        let m = self.len();
        // Reflecting cards (x -> n-1-x) turns lexicographic order into
        // reverse colexicographic order.
        let mut colex = 0u64;
        for (i, card) in self.cards().enumerate() {
            // the i-th smallest card is the (m-i)-th smallest reflected card
            colex += binomial(n - 1 - card.index(), m - i);
        }
        (binomial(n, m) - 1 - colex) as usize
    }
}

impl fmt::Debug for Hand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hand({self})")
    }
}

impl fmt::Display for Hand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        for (i, c) in self.cards().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Hand {
    type Err = Error;

    /// Parses `"0,1,3"`; `"-"` is the empty hand.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Hand::EMPTY);
        }
        let mut hand = Hand::EMPTY;
        for part in s.split(',') {
            let card: Card = part.parse()?;
            if hand.contains(card) {
                return Err(Error::InvalidArguments(format!("card {card} repeated in `{s}`")));
            }
            hand = hand.with(card);
        }
        Ok(hand)
    }
}

impl PartialOrd for Hand {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Hand {
    /// Lexicographic order on the sorted card lists.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.cards().cmp(other.cards())
    }
}

/// Ascending iterator over the cards of a hand.
#[derive(Clone)]
pub struct Cards(u64);

impl Iterator for Cards {
    type Item = Card;

    fn next(&mut self) -> Option<Card> {
        if self.0 == 0 {
            return None;
        }
        let c = self.0.trailing_zeros() as u8;
        self.0 &= self.0 - 1;
        Some(Card(c))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Cards {}

static BINOM: [[u64; MAX_DECK + 1]; MAX_DECK + 1] = {
    let mut t = [[0u64; MAX_DECK + 1]; MAX_DECK + 1];
    let mut n = 0;
    while n <= MAX_DECK {
        t[n][0] = 1;
        let mut k = 1;
        while k <= n {
            t[n][k] = t[n - 1][k - 1].wrapping_add(if k < n { t[n - 1][k] } else { 0 });
            k += 1;
        }
        n += 1;
    }
    t
};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n || n > MAX_DECK {
        0
    } else {
        BINOM[n][k]
    }
}

/// All `m`-subsets of `mask` in lexicographic order.
pub fn subsets_of(mask: Hand, m: usize) -> Subsets {
    let pool: Vec<u8> = mask.cards().map(|c| c.0).collect();
    let idx = if m <= pool.len() { Some((0..m).collect()) } else { None };
    Subsets { pool, idx }
}

pub struct Subsets {
    pool: Vec<u8>,
    idx: Option<Vec<usize>>,
}

impl Iterator for Subsets {
    type Item = Hand;

    fn next(&mut self) -> Option<Hand> {
        let idx = self.idx.as_mut()?;
        let hand = Hand::from_cards(idx.iter().map(|&i| self.pool[i]));
        let m = idx.len();
        let p = self.pool.len();
        let mut i = m;
        loop {
            if i == 0 {
                self.idx = None;
                break;
            }
            i -= 1;
            if idx[i] < p - m + i {
                idx[i] += 1;
                for j in i + 1..m {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(hand)
    }
}

/// All `C(n, m)` hands of size `m` in canonical (lexicographic) order.
pub fn enumerate_hands(n: usize, m: usize) -> Result<Vec<Hand>> {
    if m > n || n > MAX_DECK {
        return Err(Error::InvalidDimension { n, m });
    }
    Ok(subsets_of(Hand::full(n), m).collect())
}

/// `{0..n-1} \ hand`.
pub fn complement(hand: Hand, n: usize) -> Hand {
    hand.complement(n)
}

/// Public hand sizes `(a, b, c, r)` with `n = a + b + c + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    a: usize,
    b: usize,
    c: usize,
    r: usize,
}

impl Signature {
    pub fn new(a: usize, b: usize, c: usize, r: usize) -> Result<Self> {
        if a < 1 || b < 1 {
            return Err(Error::InvalidSignature(format!(
                "A and B must hold at least one card (got a={a}, b={b})"
            )));
        }
        if a + b + c + r > MAX_DECK {
            return Err(Error::InvalidSignature(format!(
                "deck of {} cards exceeds the {MAX_DECK}-card limit",
                a + b + c + r
            )));
        }
        Ok(Signature { a, b, c, r })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.a + self.b + self.c + self.r
    }

    /// `c + r`: the distance parameter of B's indistinguishability graph.
    pub fn hidden(&self) -> usize {
        self.c + self.r
    }

    /// Size of every clique of hands B considers possible: `C(a+c+r, a)`.
    pub fn clique_size(&self) -> u64 {
        binomial(self.a + self.c + self.r, self.a)
    }

    /// Every valid deal in canonical order (A's hand, then B's, then C's).
    pub fn deals(&self) -> Vec<Deal> {
        let n = self.n();
        let mut out = Vec::new();
        for a in subsets_of(Hand::full(n), self.a) {
            let rest = a.complement(n);
            for b in subsets_of(rest, self.b) {
                for c in subsets_of(rest.difference(b), self.c) {
                    out.push(Deal { a, b, c });
                }
            }
        }
        out
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.r)
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Parses `"a,b,c,r"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(',').collect();
        if parts.len() != 4 {
            return Err(Error::InvalidSignature(format!("expected `a,b,c,r`, got `{s}`")));
        }
        let mut v = [0usize; 4];
        for (slot, p) in v.iter_mut().zip(&parts) {
            *slot = p
                .trim()
                .parse()
                .map_err(|_| Error::InvalidSignature(format!("`{p}` is not a count")))?;
        }
        Signature::new(v[0], v[1], v[2], v[3])
    }
}

pub fn make_signature(a: usize, b: usize, c: usize, r: usize) -> Result<Signature> {
    Signature::new(a, b, c, r)
}

/// One hand per agent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Deal {
    pub a: Hand,
    pub b: Hand,
    pub c: Hand,
}

/// Hands pairwise disjoint, within the deck, and sized as the signature says.
pub fn deal_valid(sig: &Signature, deal: &Deal) -> bool {
    let deck = Hand::full(sig.n());
    deal.a.is_disjoint(deal.b)
        && deal.a.is_disjoint(deal.c)
        && deal.b.is_disjoint(deal.c)
        && deal.a.union(deal.b).union(deal.c).is_subset(deck)
        && deal.a.len() == sig.a
        && deal.b.len() == sig.b
        && deal.c.len() == sig.c
}
