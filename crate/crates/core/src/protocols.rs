//! Announcement protocols as colorings of the `a`-hands.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::deck::{binomial, enumerate_hands, Card, Hand, Signature};
use crate::error::{Error, Result};

pub type MessageId = u32;

/// Largest message id accepted from text.
pub const MAX_MESSAGE_ID: u64 = (1 << 31) - 1;

const HEADER: &str = "# cardcodes-coloring v1";

/// A total map from the `a`-subsets of `{0..n-1}` to message ids
/// `0..message_count`.
///
/// Ids are assigned to the original message values in ascending order; the
/// originals are kept as labels.
#[derive(Debug, Clone)]
pub struct Coloring {
    n: usize,
    a: usize,
    hands: Vec<Hand>,
    colors: Vec<MessageId>,
    labels: Vec<u64>,
    note: Option<String>,
}

impl PartialEq for Coloring {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.a == other.a && self.colors == other.colors
    }
}

impl Eq for Coloring {}

impl Coloring {
    /// Builds a coloring from one value per hand, in canonical hand order.
    pub fn from_values(n: usize, a: usize, values: &[u64]) -> Result<Self> {
        let hands = enumerate_hands(n, a)?;
        if values.len() != hands.len() {
            return Err(Error::InvalidArguments(format!(
                "{} values given for {} hands",
                values.len(),
                hands.len()
            )));
        }
        let mut labels = values.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let ids: BTreeMap<u64, MessageId> =
            labels.iter().enumerate().map(|(i, &v)| (v, i as MessageId)).collect();
        let colors = values.iter().map(|v| ids[v]).collect();
        Ok(Coloring { n, a, hands, colors, labels, note: None })
    }

    pub fn from_fn(n: usize, a: usize, mut f: impl FnMut(Hand) -> u64) -> Result<Self> {
        let values: Vec<u64> = enumerate_hands(n, a)?.into_iter().map(&mut f).collect();
        Self::from_values(n, a, &values)
    }

    /// Builds a coloring from explicit color classes; class `i` gets value `i`.
    /// Every `a`-hand must appear in exactly one class.
    pub fn from_classes(n: usize, a: usize, classes: &[Vec<Hand>]) -> Result<Self> {
        let total = binomial(n, a) as usize;
        let mut values = vec![None; total];
        for (i, class) in classes.iter().enumerate() {
            for &h in class {
                if h.len() != a || h.span() > n {
                    return Err(Error::InvalidVertex(format!("{h} is not an {a}-subset of {n} cards")));
                }
                let slot = &mut values[h.lex_rank(n)];
                if slot.is_some() {
                    return Err(Error::InvalidArguments(format!("hand {h} listed twice")));
                }
                *slot = Some(i as u64);
            }
        }
        let values: Option<Vec<u64>> = values.into_iter().collect();
        let values = values.ok_or_else(|| {
            Error::InvalidArguments(format!("classes do not cover all {total} hands"))
        })?;
        Self::from_values(n, a, &values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn message_count(&self) -> usize {
        self.labels.len()
    }

    /// All hands in canonical order.
    pub fn hands(&self) -> &[Hand] {
        &self.hands
    }

    /// Colors indexed by canonical hand rank.
    pub fn colors(&self) -> &[MessageId] {
        &self.colors
    }

    pub fn color(&self, hand: Hand) -> MessageId {
        self.colors[hand.lex_rank(self.n)]
    }

    /// Original value behind each id.
    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, id: MessageId) -> u64 {
        self.labels[id as usize]
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn class(&self, id: MessageId) -> Vec<Hand> {
        self.iter().filter(|&(_, c)| c == id).map(|(h, _)| h).collect()
    }

    pub fn classes(&self) -> Vec<Vec<Hand>> {
        let mut out = vec![Vec::new(); self.message_count()];
        for (h, c) in self.iter() {
            out[c as usize].push(h);
        }
        out
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.message_count()];
        for &c in &self.colors {
            out[c as usize] += 1;
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (Hand, MessageId)> + '_ {
        self.hands.iter().copied().zip(self.colors.iter().copied())
    }

    /// Checks that this coloring lives on the `a`-hands of `sig`.
    pub fn check_dimensions(&self, sig: &Signature) -> Result<()> {
        if self.n != sig.n() || self.a != sig.a() {
            return Err(Error::DimensionMismatch {
                n: sig.n(),
                a: sig.a(),
                found_n: self.n,
                found_a: self.a,
            });
        }
        Ok(())
    }

    /// Applies `f` to every id and renormalizes.
    pub fn map_ids(&self, mut f: impl FnMut(MessageId) -> u64) -> Result<Self> {
        let values: Vec<u64> = self.colors.iter().map(|&c| f(c)).collect();
        Self::from_values(self.n, self.a, &values)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER}")?;
        writeln!(f, "n={} a={}", self.n, self.a)?;
        for (h, c) in self.iter() {
            writeln!(f, "{h} {c}")?;
        }
        Ok(())
    }
}

impl FromStr for Coloring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |line: usize, msg: String| Error::Parse { line, msg };
        let mut lines = s.lines().enumerate().map(|(i, l)| (i + 1, l));
        match lines.next() {
            Some((_, l)) if l == HEADER => {}
            _ => return Err(parse_err(1, format!("expected `{HEADER}`"))),
        }
        let (n, a) = match lines.next() {
            Some((no, l)) => parse_dims(l).ok_or_else(|| parse_err(no, "expected `n=<int> a=<int>`".into()))?,
            None => return Err(parse_err(2, "missing `n=<int> a=<int>`".into())),
        };
        if n > crate::deck::MAX_DECK || a > n {
            return Err(parse_err(2, format!("unsupported dimensions n={n} a={a}")));
        }
        let total = binomial(n, a) as usize;
        let mut values = vec![None; total];
        for (no, line) in lines {
            let mut parts = line.split(' ');
            let (Some(hand), Some(id), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(parse_err(no, format!("expected `<hand> <id>`, got `{line}`")));
            };
            let hand: Hand = hand.parse().map_err(|e: Error| parse_err(no, e.to_string()))?;
            if hand.len() != a || hand.span() > n {
                return Err(parse_err(no, format!("{hand} is not an {a}-subset of {n} cards")));
            }
            let id: u64 = id.parse().map_err(|_| parse_err(no, format!("bad message id `{id}`")))?;
            if id > MAX_MESSAGE_ID {
                return Err(parse_err(no, format!("message id {id} exceeds {MAX_MESSAGE_ID}")));
            }
            let slot = &mut values[hand.lex_rank(n)];
            if slot.is_some() {
                return Err(parse_err(no, format!("hand {hand} listed twice")));
            }
            *slot = Some(id);
        }
        let missing = values.iter().position(Option::is_none);
        if let Some(rank) = missing {
            let hand = enumerate_hands(n, a)?[rank];
            return Err(parse_err(2 + total, format!("hand {hand} missing")));
        }
        let values: Vec<u64> = values.into_iter().flatten().collect();
        Coloring::from_values(n, a, &values)
    }
}

fn parse_dims(line: &str) -> Option<(usize, usize)> {
    let (n, a) = line.split_once(' ')?;
    let n = n.strip_prefix("n=")?.parse().ok()?;
    let a = a.strip_prefix("a=")?.parse().ok()?;
    Some((n, a))
}

/// Sum of the cards modulo `n`.
pub fn chi_modn(n: usize, hand: Hand) -> MessageId {
    (hand.cards().map(Card::index).sum::<usize>() % n) as MessageId
}

/// Parity of the card sum.
pub fn chi_2(hand: Hand) -> MessageId {
    (hand.cards().map(Card::index).sum::<usize>() % 2) as MessageId
}

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|p| p * p <= q).all(|p| !q.is_multiple_of(p))
}

pub fn least_prime_at_least(n: u64) -> u64 {
    (n.max(2)..).find(|&q| is_prime(q)).expect("primes are unbounded")
}

/// A prime field `GF(q)` with a distinct element `w_i` for each card `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldWeights {
    q: u64,
    w: Vec<u64>,
}

impl FieldWeights {
    pub fn new(q: u64, w: Vec<u64>) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::InvalidField(format!("{q} is not prime")));
        }
        if (q as usize) < w.len() {
            return Err(Error::InvalidField(format!("q={q} is smaller than the deck size {}", w.len())));
        }
        let mut seen = w.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != w.len() || w.iter().any(|&x| x >= q) {
            return Err(Error::InvalidField("weights must be distinct field elements".into()));
        }
        Ok(FieldWeights { q, w })
    }

    /// `w_i = i` over the least prime `q >= n`.
    pub fn identity(n: usize) -> Self {
        let q = least_prime_at_least(n as u64);
        FieldWeights { q, w: (0..n as u64).collect() }
    }

    /// `w_i = i` over the given prime.
    pub fn identity_mod(n: usize, q: u64) -> Result<Self> {
        Self::new(q, (0..n as u64).collect())
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.w
    }
}

/// The first `d` elementary symmetric polynomials of `{w_i : i in hand}` over
/// `GF(q)`.
pub fn chi_gf(weights: &FieldWeights, d: usize, hand: Hand) -> Result<Vec<u64>> {
    if d == 0 {
        return Err(Error::InvalidArguments("d must be at least 1".into()));
    }
    if hand.span() > weights.n() {
        return Err(Error::InvalidField(format!("{hand} uses cards without a weight")));
    }
    let q = weights.q;
    let mut e = vec![0u64; d + 1];
    e[0] = 1;
    for card in hand.cards() {
        let w = weights.w[card.index()];
        for k in (1..=d).rev() {
            e[k] = (e[k] + e[k - 1] * w) % q;
        }
    }
    e.remove(0);
    Ok(e)
}

/// Base-`q` integer with the first entry most significant.
pub fn encode_vector(q: u64, v: &[u64]) -> u64 {
    v.iter().fold(0, |acc, &x| acc * q + x)
}

pub fn decode_vector(q: u64, d: usize, mut x: u64) -> Vec<u64> {
    let mut out = vec![0; d];
    for slot in out.iter_mut().rev() {
        *slot = x % q;
        x /= q;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Protocol {
    ModN,
    Parity,
    Gf { weights: FieldWeights, d: usize },
}

impl Protocol {
    pub fn message(&self, n: usize, hand: Hand) -> Result<u64> {
        Ok(match self {
            Protocol::ModN => chi_modn(n, hand) as u64,
            Protocol::Parity => chi_2(hand) as u64,
            Protocol::Gf { weights, d } => encode_vector(weights.q, &chi_gf(weights, *d, hand)?),
        })
    }
}

impl fmt::Display for Protocol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Protocol::ModN => write!(f, "modn"),
            Protocol::Parity => write!(f, "mod2"),
            Protocol::Gf { weights, d } => write!(f, "gf(d={d},q={})", weights.q),
        }
    }
}

pub fn tabulate(kind: &Protocol, sig: &Signature) -> Result<Coloring> {
    let (n, a) = (sig.n(), sig.a());
    if let Protocol::Gf { weights, .. } = kind {
        if weights.n() < n {
            return Err(Error::InvalidField(format!(
                "{} weights for a deck of {n}",
                weights.n()
            )));
        }
    }
    let values = enumerate_hands(n, a)?
        .into_iter()
        .map(|h| kind.message(n, h))
        .collect::<Result<Vec<u64>>>()?;
    let col = Coloring::from_values(n, a, &values)?;
    Ok(match kind {
        Protocol::Gf { weights, d } => {
            col.with_note(format!("labels are base-{} vectors of length {d}", weights.q))
        }
        _ => col,
    })
}

/// `h -> col(complement(h))` on the `(n-a)`-hands, with no signature check.
pub fn dual_protocol_unchecked(col: &Coloring) -> Result<Coloring> {
    let n = col.n();
    Coloring::from_fn(n, n - col.a(), |h| col.color(h.complement(n)) as u64)
}

/// The complement transform onto signature `(b+1, a-1, c, r)`.
pub fn dual_protocol(col: &Coloring, sig: &Signature) -> Result<(Coloring, Signature)> {
    col.check_dimensions(sig)?;
    if sig.hidden() != 1 {
        return Err(Error::OutOfScope(format!("duality needs c+r=1, signature {sig} has {}", sig.hidden())));
    }
    let target = Signature::new(sig.b() + 1, sig.a() - 1, sig.c(), sig.r())?;
    Ok((dual_protocol_unchecked(col)?, target))
}

/// Reduces every id modulo `ceil(m/(p-1))`, with `p = C(a+c+r, a)`.
pub fn reduce_protocol(col: &Coloring, sig: &Signature) -> Result<Coloring> {
    col.check_dimensions(sig)?;
    if sig.hidden() == 0 {
        return Err(Error::Undefined("reduction needs c+r >= 1".into()));
    }
    let modulus = reduction_modulus(col.message_count() as u64, sig.clique_size());
    col.map_ids(|id| id as u64 % modulus)
}

pub fn reduction_modulus(m: u64, p: u64) -> u64 {
    m.div_ceil(p - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::johnson::{adjacent, GraphSpec};
    use proptest::prelude::*;

    fn h(s: &str) -> Hand {
        s.parse().unwrap()
    }

    fn sig(a: usize, b: usize, c: usize, r: usize) -> Signature {
        Signature::new(a, b, c, r).unwrap()
    }

    /// Direct edge scan: no two adjacent hands share a color.
    fn proper_by_edges(col: &Coloring, d: usize) -> bool {
        let spec = GraphSpec::new(col.n(), col.a(), d).unwrap();
        let hs = col.hands();
        (0..hs.len()).all(|i| {
            (i + 1..hs.len()).all(|j| {
                col.colors()[i] != col.colors()[j] || !adjacent(&spec, hs[i], hs[j]).unwrap()
            })
        })
    }

    #[test]
    fn sums() {
        assert_eq!(chi_modn(6, h("0,1,3")), 4);
        assert_eq!(chi_modn(7, h("0,1,2")), 3);
        assert_eq!(chi_modn(7, Hand::EMPTY), 0);
        assert_eq!(chi_2(h("0,1,3")), 0);
        assert_eq!(chi_2(h("0,2,4")), 0);
        assert_eq!(chi_2(h("1,2,4")), 1);
        for x in 0..10u8 {
            assert_eq!(chi_2(Hand::from_cards([x])), (x % 2) as u32);
        }
    }

    #[test]
    fn field_examples() {
        let w = FieldWeights::identity(7);
        assert_eq!(w.q(), 7);
        assert_eq!(chi_gf(&w, 2, h("0,1,4")).unwrap(), [5, 4]);
        assert_eq!(chi_gf(&w, 2, h("0,2,3")).unwrap(), [5, 6]);
        assert!(matches!(FieldWeights::identity_mod(7, 9), Err(Error::InvalidField(_))));
        assert!(matches!(FieldWeights::identity_mod(7, 5), Err(Error::InvalidField(_))));
        assert!(matches!(FieldWeights::new(7, vec![0, 1, 1]), Err(Error::InvalidField(_))));
        assert_eq!(FieldWeights::identity(8).q(), 11);
        assert_eq!(decode_vector(7, 2, encode_vector(7, &[5, 4])), [5, 4]);
    }

    #[test]
    fn gf_degree_one_is_sum_mod_q() {
        for n in 2..=10 {
            let w = FieldWeights::identity(n);
            for hand in enumerate_hands(n, 3.min(n)).unwrap() {
                let s: u64 = hand.cards().map(|c| c.index() as u64).sum();
                assert_eq!(chi_gf(&w, 1, hand).unwrap(), [s % w.q()]);
            }
        }
    }

    #[test]
    fn tabulate_counts() {
        assert_eq!(tabulate(&Protocol::ModN, &sig(3, 3, 1, 0)).unwrap().message_count(), 7);
        assert_eq!(tabulate(&Protocol::Parity, &sig(3, 2, 1, 1)).unwrap().message_count(), 2);
        let gf = Protocol::Gf { weights: FieldWeights::identity(7), d: 2 };
        let col = tabulate(&gf, &sig(3, 2, 2, 0)).unwrap();
        assert!(col.message_count() <= 49);
        assert!(col.note().is_some());
        let sizes: usize = col.class_sizes().iter().sum();
        assert_eq!(sizes, 35);
    }

    #[test]
    fn labels_keep_original_values() {
        let col = tabulate(&Protocol::ModN, &sig(3, 3, 1, 0)).unwrap();
        for (hand, id) in col.iter() {
            assert_eq!(col.label(id), chi_modn(7, hand) as u64);
        }
        let col = Coloring::from_fn(5, 2, |h| if h.contains(Card(0)) { 40 } else { 7 }).unwrap();
        assert_eq!(col.labels(), [7, 40]);
        assert_eq!(col.color(h("0,3")), 1);
    }

    #[test]
    fn dual_examples() {
        let s = sig(3, 3, 1, 0);
        let col = tabulate(&Protocol::ModN, &s).unwrap();
        let (dual, ds) = dual_protocol(&col, &s).unwrap();
        assert_eq!(ds, sig(4, 2, 1, 0));
        assert_eq!(dual.a(), 4);
        assert_eq!(dual.label(dual.color(h("0,1,2,3"))), 1);
        let (back, bs) = dual_protocol(&dual, &ds).unwrap();
        assert_eq!(bs, s);
        assert_eq!(back, col);
        assert!(matches!(
            dual_protocol(&col, &sig(3, 2, 2, 0)),
            Err(Error::DimensionMismatch { .. }) | Err(Error::OutOfScope(_))
        ));
        let s2 = sig(3, 2, 1, 1);
        let col2 = tabulate(&Protocol::ModN, &s2).unwrap();
        assert!(matches!(dual_protocol(&col2, &s2), Err(Error::OutOfScope(_))));
        assert_eq!(dual_protocol_unchecked(&col2).unwrap().a(), 4);
    }

    #[test]
    fn reduce_examples() {
        let s = sig(3, 3, 1, 0);
        let col = tabulate(&Protocol::ModN, &s).unwrap();
        let red = reduce_protocol(&col, &s).unwrap();
        assert_eq!(red.message_count(), 3);
        assert_eq!(red.color(h("0,1,3")), 1);
        let s0 = sig(3, 4, 0, 0);
        let col0 = tabulate(&Protocol::ModN, &s0).unwrap();
        assert!(matches!(reduce_protocol(&col0, &s0), Err(Error::Undefined(_))));
        // m <= p-1 collapses to one message
        let s5 = sig(2, 1, 2, 0);
        let small = Coloring::from_fn(5, 2, |h| chi_2(h) as u64).unwrap();
        assert_eq!(reduce_protocol(&small, &s5).unwrap().message_count(), 1);
    }

    #[test]
    fn text_roundtrip_and_format() {
        let col = tabulate(&Protocol::ModN, &sig(3, 3, 1, 0)).unwrap();
        let text = col.to_string();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("# cardcodes-coloring v1"));
        assert_eq!(lines.next(), Some("n=7 a=3"));
        assert_eq!(lines.next(), Some("0,1,2 3"));
        assert_eq!(text.lines().count(), 37);
        let back: Coloring = text.parse().unwrap();
        assert_eq!(back, col);
        assert_eq!(back.to_string(), text);
    }

    #[test]
    fn parser_rejections() {
        let good = "# cardcodes-coloring v1\nn=3 a=1\n0 0\n1 1\n2 5\n";
        let col: Coloring = good.parse().unwrap();
        assert_eq!(col.labels(), [0, 1, 5]);
        assert_eq!(col.colors(), [0, 1, 2]);
        let bad = [
            "n=3 a=1\n0 0\n1 1\n2 5\n",
            "# cardcodes-coloring v1\nn=3\n0 0\n1 1\n2 5\n",
            "# cardcodes-coloring v1\nn=3 a=1\n0 0\n1 1\n",
            "# cardcodes-coloring v1\nn=3 a=1\n0 0\n1 1\n1 1\n2 0\n",
            "# cardcodes-coloring v1\nn=3 a=1\n0 0\n1 1\n2 5 x\n",
            "# cardcodes-coloring v1\nn=3 a=1\n0 0\n1 1\n2 2147483648\n",
            "# cardcodes-coloring v1\nn=3 a=1\n0 0\n1 1\n2 -1\n",
            "# cardcodes-coloring v1\nn=3 a=1\n0 0\n1 1\n3 0\n",
            "# cardcodes-coloring v1\nn=3 a=1\n0 0\n1 1\n2 0\n\n",
        ];
        for text in bad {
            assert!(matches!(text.parse::<Coloring>(), Err(Error::Parse { .. })), "{text:?}");
        }
        let edge = "# cardcodes-coloring v1\nn=3 a=1\n0 0\n1 1\n2 2147483647\n";
        assert!(edge.parse::<Coloring>().is_ok());
    }

    #[test]
    fn from_classes_checks_totality() {
        let c = |s: &[&str]| s.iter().map(|x| h(x)).collect::<Vec<_>>();
        let ok = Coloring::from_classes(4, 2, &[c(&["0,1", "2,3"]), c(&["0,2", "1,3"]), c(&["0,3", "1,2"])]);
        assert_eq!(ok.unwrap().class_sizes(), [2, 2, 2]);
        assert!(Coloring::from_classes(4, 2, &[c(&["0,1", "2,3"]), c(&["0,2", "1,3"])]).is_err());
        assert!(Coloring::from_classes(4, 2, &[c(&["0,1", "2,3", "0,1"]), c(&["0,2", "1,3", "0,3", "1,2"])]).is_err());
    }

    #[test]
    fn modn_proper_exhaustive() {
        for n in 2..=12 {
            for a in 1..n {
                let col = Coloring::from_fn(n, a, |h| chi_modn(n, h) as u64).unwrap();
                assert!(proper_by_edges(&col, 1), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn gf_proper_exhaustive() {
        for n in 2..=10 {
            let w = FieldWeights::identity(n);
            for a in 1..n {
                for d in 1..a.min(n - a) {
                    let kind = Protocol::Gf { weights: w.clone(), d };
                    let col = Coloring::from_fn(n, a, |h| kind.message(n, h).unwrap()).unwrap();
                    assert!(proper_by_edges(&col, d), "n={n} a={a} d={d}");
                    assert!(col.message_count() as u64 <= w.q().pow(d as u32));
                    assert!(w.q() <= 2 * n as u64);
                }
            }
        }
    }

    #[test]
    fn consecutive_hand_coverage() {
        for n in 4..=12 {
            for a in 2..=n / 2 {
                for x1 in 0..n {
                    // a-1 consecutive cards from x1 or x1+1 plus one extra card
                    let mut sums = vec![false; n];
                    for start in [x1, x1 + 1] {
                        let run: Vec<usize> = (0..a - 1).map(|k| (start + k) % n).collect();
                        let run_hand = Hand::from_cards(run.iter().map(|&x| x as u8));
                        for extra in 0..n {
                            let hand = run_hand.with(Card(extra as u8));
                            if hand.len() == a {
                                sums[chi_modn(n, hand) as usize] = true;
                            }
                        }
                    }
                    assert!(sums.iter().all(|&s| s), "n={n} a={a} x1={x1}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn shift_by_one_covariance(n in 2usize..20, bits in any::<u64>()) {
            let hand = Hand::from_bits(bits).intersection(Hand::full(n));
            let shifted = Hand::from_cards(hand.cards().map(|c| ((c.index() + 1) % n) as u8));
            let expect = (chi_modn(n, hand) as usize + hand.len()) % n;
            prop_assert_eq!(chi_modn(n, shifted) as usize, expect);
        }

        #[test]
        fn text_roundtrip(n in 1usize..8, seed in any::<u64>(), k in 1u64..5) {
            let a = (seed % (n as u64 + 1)) as usize;
            let col = Coloring::from_fn(n, a, |h| (h.bits().wrapping_mul(seed | 1) >> 7) % k).unwrap();
            let back: Coloring = col.to_string().parse().unwrap();
            prop_assert_eq!(&back, &col);
        }

        #[test]
        fn normalization_is_order_preserving(vals in proptest::collection::vec(0u64..1000, 10)) {
            let col = Coloring::from_values(5, 2, &vals).unwrap();
            for (i, &v) in vals.iter().enumerate() {
                prop_assert_eq!(col.label(col.colors()[i]), v);
            }
            prop_assert!(col.labels().windows(2).all(|w| w[0] < w[1]));
        }
    }
}
