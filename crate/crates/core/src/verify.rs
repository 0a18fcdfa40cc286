//! Informativeness and safety predicates with checkable witnesses.
//!
//! Every check walks its groups (hands, cliques or eavesdropper hands) in
//! canonical order and concatenates per-group results in that order, so
//! reports do not depend on the number of worker threads.

use std::fmt;

use rayon::prelude::*;

use crate::deck::{enumerate_hands, subsets_of, Card, Hand, Signature};
use crate::error::{Error, Result};
use crate::johnson::{adjacent, neighbors, GraphSpec};
use crate::protocols::{Coloring, MessageId};

/// Which side of a safety violation the eavesdropper learns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Every candidate hand holds the card.
    In,
    /// No candidate hand holds the card.
    Out,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::In => "in",
            Direction::Out => "out",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    ProperViolation { a: Hand, a2: Hand, m: MessageId },
    MonochromeClique { b: Hand, m: MessageId },
    SafetyViolation { c: Hand, y: Card, m: MessageId, direction: Direction },
    Ca2Violation { c: Hand, y: Card, m: MessageId },
    Ca3Violation { c: Hand, y: Card, m: MessageId },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::ProperViolation { a, a2, m } => write!(f, "PROPER M={m} a={a} a2={a2}"),
            Witness::MonochromeClique { b, m } => write!(f, "MONOCHROME b={b} M={m}"),
            Witness::SafetyViolation { c, y, m, direction } => {
                write!(f, "SAFETY c={c} y={y} M={m} dir={direction}")
            }
            Witness::Ca2Violation { c, y, m } => write!(f, "CA2 c={c} y={y} M={m}"),
            Witness::Ca3Violation { c, y, m } => write!(f, "CA3 c={c} y={y} M={m}"),
        }
    }
}

impl Witness {
    /// Re-checks the witness against the coloring from scratch.
    pub fn revalidate(&self, col: &Coloring, sig: &Signature) -> bool {
        let n = sig.n();
        let avoiding = |c: Hand, m: MessageId| -> Vec<Hand> {
            col.iter().filter(|&(h, k)| k == m && h.is_disjoint(c)).map(|(h, _)| h).collect()
        };
        let eaves = |c: Hand| c.len() == sig.c() && c.span() <= n;
        match *self {
            Witness::ProperViolation { a, a2, m } => {
                let spec = GraphSpec::of_signature(sig);
                adjacent(&spec, a, a2).unwrap_or(false) && col.color(a) == m && col.color(a2) == m
            }
            Witness::MonochromeClique { b, m } => {
                b.len() == sig.b()
                    && b.span() <= n
                    && subsets_of(b.complement(n), sig.a()).all(|h| col.color(h) == m)
            }
            Witness::SafetyViolation { c, y, m, direction } => {
                let x = avoiding(c, m);
                eaves(c)
                    && !c.contains(y)
                    && y.index() < n
                    && !x.is_empty()
                    && x.iter().all(|h| h.contains(y) == (direction == Direction::In))
            }
            Witness::Ca2Violation { c, y, m } => {
                let x = avoiding(c, m);
                eaves(c) && !x.is_empty() && x.iter().all(|h| h.contains(y))
            }
            Witness::Ca3Violation { c, y, m } => {
                let x = avoiding(c, m);
                eaves(c) && !c.contains(y) && y.index() < n && !x.is_empty() && x.iter().all(|h| !h.contains(y))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WitnessMode {
    /// The first witness of each failing group.
    #[default]
    First,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub verdict: bool,
    pub witnesses: Vec<Witness>,
    /// Number of edges, cliques or (eavesdropper hand, card, message)
    /// triples examined.
    pub checked_count: u64,
}

impl Report {
    fn from_parts(parts: Vec<(Vec<Witness>, u64)>) -> Self {
        let checked_count = parts.iter().map(|p| p.1).sum();
        let witnesses: Vec<Witness> = parts.into_iter().flat_map(|p| p.0).collect();
        Report { verdict: witnesses.is_empty(), witnesses, checked_count }
    }
}

/// Proper coloring of `J^{c+r}(n, a)`.
///
/// In `First` mode one violating pair is reported per offending message: the
/// least pair `(a, a2)`, `a < a2`, in canonical order.
pub fn check_informative(col: &Coloring, sig: &Signature, mode: WitnessMode) -> Result<Report> {
    col.check_dimensions(sig)?;
    let spec = GraphSpec::of_signature(sig);
    let parts: Vec<(Vec<Witness>, u64)> = col
        .hands()
        .par_iter()
        .map(|&a| {
            let m = col.color(a);
            let mut out = Vec::new();
            let mut checked = 0;
            for a2 in neighbors(&spec, a).into_iter().filter(|&a2| a2 > a) {
                checked += 1;
                if col.color(a2) == m {
                    out.push(Witness::ProperViolation { a, a2, m });
                    if mode == WitnessMode::First {
                        break;
                    }
                }
            }
            (out, checked)
        })
        .collect();
    let mut report = Report::from_parts(parts);
    if mode == WitnessMode::First {
        let mut seen = vec![false; col.message_count()];
        report.witnesses.retain(|w| match *w {
            Witness::ProperViolation { m, .. } => !std::mem::replace(&mut seen[m as usize], true),
            _ => true,
        });
    }
    Ok(report)
}

/// Every clique `K_p(b̄)` carries at least two colors.
///
/// In `First` mode one monochrome clique is reported per message.
pub fn check_min_informative(col: &Coloring, sig: &Signature, mode: WitnessMode) -> Result<Report> {
    col.check_dimensions(sig)?;
    if sig.hidden() == 0 {
        return Err(Error::Undefined("minimal informativeness needs c+r >= 1".into()));
    }
    let n = sig.n();
    let parts: Vec<(Vec<Witness>, u64)> = enumerate_hands(n, sig.b())?
        .par_iter()
        .map(|&b| {
            let mut colors = subsets_of(b.complement(n), sig.a()).map(|h| col.color(h));
            let first = colors.next();
            let out = match first {
                Some(m) if colors.all(|k| k == m) => vec![Witness::MonochromeClique { b, m }],
                _ => Vec::new(),
            };
            (out, 1)
        })
        .collect();
    let mut report = Report::from_parts(parts);
    if mode == WitnessMode::First {
        let mut seen = vec![false; col.message_count()];
        report.witnesses.retain(|w| match *w {
            Witness::MonochromeClique { m, .. } => !std::mem::replace(&mut seen[m as usize], true),
            _ => true,
        });
    }
    Ok(report)
}

/// For one eavesdropper hand: per message, the intersection and union of the
/// class members avoiding it.
fn class_spans(col: &Coloring, n: usize, a: usize, c: Hand) -> Vec<Option<(Hand, Hand)>> {
    let mut spans: Vec<Option<(Hand, Hand)>> = vec![None; col.message_count()];
    for h in subsets_of(c.complement(n), a) {
        let slot = &mut spans[col.color(h) as usize];
        *slot = Some(match *slot {
            None => (h, h),
            Some((meet, join)) => (meet.intersection(h), join.union(h)),
        });
    }
    spans
}

fn eavesdropper_parts(
    col: &Coloring,
    sig: &Signature,
    per_class: impl Fn(Hand, MessageId, Hand, Hand, &mut Vec<Witness>) -> u64 + Sync,
) -> Result<Report> {
    col.check_dimensions(sig)?;
    let (n, a) = (sig.n(), sig.a());
    let parts: Vec<(Vec<Witness>, u64)> = enumerate_hands(n, sig.c())?
        .par_iter()
        .map(|&c| {
            let mut out = Vec::new();
            let mut checked = 0;
            for (m, span) in class_spans(col, n, a, c).into_iter().enumerate() {
                if let Some((meet, join)) = span {
                    checked += per_class(c, m as MessageId, meet, join, &mut out);
                }
            }
            (out, checked)
        })
        .collect();
    Ok(Report::from_parts(parts))
}

/// For every eavesdropper hand `c`, card `y ∉ c` and message `M` possible
/// for `c`, two class-`M` hands avoiding `c` disagree on `y`.
///
/// In `First` mode the least card is reported per failing `(c, M)`.
pub fn check_safe(col: &Coloring, sig: &Signature, mode: WitnessMode) -> Result<Report> {
    let n = sig.n();
    eavesdropper_parts(col, sig, |c, m, meet, join, out| {
        let rest = c.complement(n);
        let before = out.len();
        for y in rest.cards() {
            let direction = if meet.contains(y) {
                Direction::In
            } else if !join.contains(y) {
                Direction::Out
            } else {
                continue;
            };
            if mode == WitnessMode::All || out.len() == before {
                out.push(Witness::SafetyViolation { c, y, m, direction });
            }
        }
        rest.len() as u64
    })
}

/// CA2: the class members avoiding `c` have empty intersection.
/// CA3: their union is everything outside `c`.
pub fn check_ca2_ca3(col: &Coloring, sig: &Signature, mode: WitnessMode) -> Result<Report> {
    let n = sig.n();
    eavesdropper_parts(col, sig, |c, m, meet, join, out| {
        let take = |hand: Hand| -> Vec<Card> {
            match mode {
                WitnessMode::All => hand.cards().collect(),
                WitnessMode::First => hand.cards().take(1).collect(),
            }
        };
        for y in take(meet) {
            out.push(Witness::Ca2Violation { c, y, m });
        }
        for y in take(c.complement(n).difference(join)) {
            out.push(Witness::Ca3Violation { c, y, m });
        }
        1
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solvability {
    /// A protocol is known to exist.
    Possible,
    Impossible,
    /// No necessary condition fails; existence is open to this check.
    Unknown,
}

impl fmt::Display for Solvability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Solvability::Possible => "possible",
            Solvability::Impossible => "impossible",
            Solvability::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub informative_safe_possible: Solvability,
    pub reasons: Vec<String>,
}

/// Necessary conditions for an informative and safe protocol.
pub fn check_solvability_bounds(sig: &Signature) -> Bounds {
    let (a, b, c, n) = (sig.a(), sig.b(), sig.c(), sig.n());
    let hidden = sig.hidden();
    let mut reasons = Vec::new();
    if c >= 1 && c >= b {
        reasons.push(format!("c={c} >= b={b}"));
    }
    if c >= 1 && hidden + 1 >= a.min(n - a) {
        reasons.push(format!("c >= 1 and c+r={hidden} >= min(a, n-a)-1={}", a.min(n - a) - 1));
    }
    if a == 1 && hidden >= 1 {
        reasons.push("a=1 and c+r >= 1: every proper coloring uses singleton classes".to_string());
    }
    let informative_safe_possible = if !reasons.is_empty() {
        Solvability::Impossible
    } else if hidden == 0 {
        reasons.push("c+r=0: the constant announcement is informative and safe".to_string());
        Solvability::Possible
    } else {
        Solvability::Unknown
    };
    Bounds { informative_safe_possible, reasons }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deck::binomial;
    use crate::fixtures::builtin_fixture;
    use crate::protocols::{chi_2, reduce_protocol, tabulate, Protocol};
    use proptest::prelude::*;

    fn h(s: &str) -> Hand {
        s.parse().unwrap()
    }

    fn sig(a: usize, b: usize, c: usize, r: usize) -> Signature {
        Signature::new(a, b, c, r).unwrap()
    }

    const F: WitnessMode = WitnessMode::First;

    /// Safety straight from the definition: some pair of possible hands
    /// disagrees on each card.
    fn safe_oracle(col: &Coloring, sig: &Signature) -> bool {
        let n = sig.n();
        enumerate_hands(n, sig.c()).unwrap().into_iter().all(|c| {
            (0..col.message_count() as MessageId).all(|m| {
                let x: Vec<Hand> =
                    col.iter().filter(|&(h, k)| k == m && h.is_disjoint(c)).map(|(h, _)| h).collect();
                x.is_empty()
                    || c.complement(n).cards().all(|y| {
                        x.iter().any(|p| x.iter().any(|q| p.symmetric_difference(*q).contains(y)))
                    })
            })
        })
    }

    fn proper_oracle(col: &Coloring, sig: &Signature) -> bool {
        let spec = GraphSpec::of_signature(sig);
        col.iter().all(|(p, m)| col.iter().all(|(q, k)| m != k || !adjacent(&spec, p, q).unwrap()))
    }

    fn all_revalidate(r: &Report, col: &Coloring, s: &Signature) -> bool {
        r.witnesses.iter().all(|w| w.revalidate(col, s))
    }

    #[test]
    fn informative_examples() {
        let s = sig(3, 3, 1, 0);
        let col = tabulate(&Protocol::ModN, &s).unwrap();
        assert!(check_informative(&col, &s, F).unwrap().verdict);

        let s = sig(3, 2, 2, 0);
        let col = tabulate(&Protocol::ModN, &s).unwrap();
        let r = check_informative(&col, &s, WitnessMode::All).unwrap();
        assert!(!r.verdict);
        let m = col.color(h("0,1,4"));
        assert!(r.witnesses.contains(&Witness::ProperViolation { a: h("0,1,4"), a2: h("0,2,3"), m }));
        assert!(all_revalidate(&r, &col, &s));
        let first = check_informative(&col, &s, F).unwrap();
        assert_eq!(first.witnesses.len(), col.message_count());

        let (col, _) = builtin_fixture("six_chi2").unwrap();
        assert!(check_informative(&col, &sig(3, 3, 1, 0), F).unwrap().verdict);
        assert!(matches!(
            check_informative(&col, &sig(3, 4, 1, 0), F),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn min_informative_examples() {
        let s = sig(3, 2, 1, 1);
        assert!(check_min_informative(&tabulate(&Protocol::Parity, &s).unwrap(), &s, F).unwrap().verdict);

        let s = sig(3, 3, 1, 0);
        let col = tabulate(&Protocol::Parity, &s).unwrap();
        let r = check_min_informative(&col, &s, WitnessMode::All).unwrap();
        assert!(!r.verdict);
        assert!(r.witnesses.contains(&Witness::MonochromeClique { b: h("1,3,5"), m: 0 }));
        assert!(all_revalidate(&r, &col, &s));

        let (col, s) = builtin_fixture("two_msg_331").unwrap();
        assert!(check_min_informative(&col, &s, F).unwrap().verdict);

        let s0 = sig(3, 4, 0, 0);
        let col0 = tabulate(&Protocol::ModN, &s0).unwrap();
        assert!(matches!(check_min_informative(&col0, &s0, F), Err(Error::Undefined(_))));
    }

    #[test]
    fn safe_examples() {
        let s = sig(3, 3, 1, 0);
        assert!(check_safe(&tabulate(&Protocol::ModN, &s).unwrap(), &s, F).unwrap().verdict);

        let s = sig(3, 2, 2, 0);
        let col = tabulate(&Protocol::Parity, &s).unwrap();
        let r = check_safe(&col, &s, WitnessMode::All).unwrap();
        assert!(!r.verdict);
        assert!(r.witnesses.contains(&Witness::SafetyViolation {
            c: h("1,3"),
            y: Card(5),
            m: 0,
            direction: Direction::Out
        }));
        assert!(all_revalidate(&r, &col, &s));

        let (col, weak) = builtin_fixture("six_chi1").unwrap();
        assert!(check_safe(&col, &weak, F).unwrap().verdict);
        let r = check_safe(&col, &sig(3, 3, 1, 0), WitnessMode::All).unwrap();
        assert!(!r.verdict);
        assert!(r.witnesses.contains(&Witness::SafetyViolation {
            c: h("1"),
            y: Card(2),
            m: 5,
            direction: Direction::In
        }));
    }

    #[test]
    fn ca_examples() {
        let s = sig(3, 3, 1, 0);
        assert!(check_ca2_ca3(&tabulate(&Protocol::ModN, &s).unwrap(), &s, F).unwrap().verdict);
        let (col, s) = builtin_fixture("six_chi").unwrap();
        let r = check_ca2_ca3(&col, &s, F).unwrap();
        assert!(!r.verdict);
        assert!(r.witnesses.contains(&Witness::Ca3Violation { c: Hand::EMPTY, y: Card(0), m: 5 }));
        assert!(all_revalidate(&r, &col, &s));
    }

    #[test]
    fn witness_text() {
        let w = Witness::SafetyViolation { c: h("1"), y: Card(2), m: 5, direction: Direction::In };
        assert_eq!(w.to_string(), "SAFETY c=1 y=2 M=5 dir=in");
        let w = Witness::Ca3Violation { c: Hand::EMPTY, y: Card(0), m: 5 };
        assert_eq!(w.to_string(), "CA3 c=- y=0 M=5");
    }

    #[test]
    fn stale_witnesses_rejected() {
        let (col, s) = builtin_fixture("six_chi2").unwrap();
        let m = col.color(h("0,1,3"));
        assert!(!Witness::ProperViolation { a: h("0,1,3"), a2: h("0,1,4"), m }.revalidate(&col, &s));
        assert!(!Witness::MonochromeClique { b: h("4,5,6"), m }.revalidate(&col, &s));
        assert!(!Witness::SafetyViolation { c: h("6"), y: Card(0), m, direction: Direction::In }
            .revalidate(&col, &s));
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(check_solvability_bounds(&sig(2, 4, 1, 0)).informative_safe_possible, Solvability::Impossible);
        assert_eq!(check_solvability_bounds(&sig(6, 6, 8, 0)).informative_safe_possible, Solvability::Impossible);
        assert_eq!(check_solvability_bounds(&sig(3, 3, 1, 0)).informative_safe_possible, Solvability::Unknown);
        assert_eq!(check_solvability_bounds(&sig(1, 3, 0, 1)).informative_safe_possible, Solvability::Impossible);
        assert_eq!(check_solvability_bounds(&sig(3, 3, 0, 0)).informative_safe_possible, Solvability::Possible);
    }

    /// Every set partition of `0..len` into at most `k` blocks, as
    /// restricted growth strings.
    fn partitions(len: usize, k: u64) -> Vec<Vec<u64>> {
        fn go(prefix: &mut Vec<u64>, len: usize, k: u64, out: &mut Vec<Vec<u64>>) {
            if prefix.len() == len {
                out.push(prefix.clone());
                return;
            }
            let next = prefix.iter().max().map_or(0, |m| m + 1);
            for v in 0..=next.min(k - 1) {
                prefix.push(v);
                go(prefix, len, k, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), len, k, &mut out);
        out
    }

    #[test]
    fn ca_agrees_with_safe_on_small_partitions() {
        let parts = partitions(10, 3);
        assert_eq!(parts.len(), 1 + 511 + 9330);
        for s in [sig(2, 2, 1, 0), sig(2, 1, 2, 0), sig(2, 1, 0, 2), sig(2, 2, 0, 1), sig(2, 3, 0, 0)] {
            for p in &parts {
                let col = Coloring::from_values(5, 2, p).unwrap();
                let safe = check_safe(&col, &s, F).unwrap().verdict;
                assert_eq!(safe, check_ca2_ca3(&col, &s, F).unwrap().verdict);
                assert_eq!(safe, safe_oracle(&col, &s), "{s} {p:?}");
            }
        }
    }

    /// Colorings used for the sweeps below.
    fn zoo(s: &Signature) -> Vec<Coloring> {
        let mut out = vec![
            tabulate(&Protocol::ModN, s).unwrap(),
            tabulate(&Protocol::Parity, s).unwrap(),
        ];
        if s.hidden() >= 1 {
            out.push(reduce_protocol(&out[0], s).unwrap());
        }
        out
    }

    fn small_signatures(max_n: usize) -> Vec<Signature> {
        let mut out = Vec::new();
        for n in 2..=max_n {
            for a in 1..n {
                for b in 1..=n - a {
                    for c in 0..=n - a - b {
                        out.push(sig(a, b, c, n - a - b - c));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn informative_implies_min_informative() {
        for s in small_signatures(9).into_iter().filter(|s| s.hidden() >= 1) {
            for col in zoo(&s) {
                if check_informative(&col, &s, F).unwrap().verdict {
                    assert!(check_min_informative(&col, &s, F).unwrap().verdict, "{s}");
                }
            }
        }
    }

    #[test]
    fn checks_agree_with_oracles() {
        for s in small_signatures(7) {
            for col in zoo(&s) {
                let inf = check_informative(&col, &s, WitnessMode::All).unwrap();
                assert_eq!(inf.verdict, proper_oracle(&col, &s), "{s}");
                assert!(all_revalidate(&inf, &col, &s));
                let safe = check_safe(&col, &s, WitnessMode::All).unwrap();
                assert_eq!(safe.verdict, safe_oracle(&col, &s), "{s}");
                assert!(all_revalidate(&safe, &col, &s));
                let ca = check_ca2_ca3(&col, &s, WitnessMode::All).unwrap();
                assert!(all_revalidate(&ca, &col, &s));
                if s.hidden() >= 1 {
                    let min = check_min_informative(&col, &s, WitnessMode::All).unwrap();
                    assert!(all_revalidate(&min, &col, &s));
                    let expect = (binomial(s.n() - s.b(), s.a()) as usize) >= 2;
                    if !expect {
                        assert!(!min.verdict);
                    }
                }
            }
        }
    }

    #[test]
    fn first_mode_is_a_subset_of_all() {
        for s in small_signatures(7) {
            for col in zoo(&s) {
                let all = check_safe(&col, &s, WitnessMode::All).unwrap();
                let first = check_safe(&col, &s, F).unwrap();
                assert_eq!(all.verdict, first.verdict);
                assert_eq!(all.checked_count, first.checked_count);
                assert!(first.witnesses.iter().all(|w| all.witnesses.contains(w)));
            }
        }
    }

    /// For a safe coloring with `a >= 2`, `c >= 1`: for each class member `a`
    /// and cards `z != y` of `a`, another member holds `z` but not `y`.
    #[test]
    fn double_cover_property() {
        for s in small_signatures(8).into_iter().filter(|s| s.a() >= 2 && s.c() >= 1) {
            let mut cols = zoo(&s);
            for name in ["six_chi2", "two_msg_331"] {
                let (col, _) = builtin_fixture(name).unwrap();
                if col.n() == s.n() && col.a() == s.a() {
                    cols.push(col);
                }
            }
            for col in cols {
                if !check_safe(&col, &s, F).unwrap().verdict {
                    continue;
                }
                for (a, m) in col.iter() {
                    for z in a.cards() {
                        for y in a.without(z).cards() {
                            let ok = col
                                .iter()
                                .any(|(a2, k)| k == m && a2.contains(z) && !a2.contains(y));
                            assert!(ok, "{s} a={a} z={z} y={y}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn double_cover_needs_y_in_a() {
        // the variant with y outside a fails for a safe coloring
        let (col, s) = builtin_fixture("six_chi2").unwrap();
        assert!(check_safe(&col, &s, F).unwrap().verdict);
        let (a, z, y) = (h("0,1,2"), Card(0), Card(4));
        let m = col.color(a);
        assert!(!col.iter().any(|(a2, k)| k == m && a2.contains(z) && a2.contains(y)));
    }

    #[test]
    fn parallel_matches_sequential() {
        let (col, _) = builtin_fixture("six_chi1").unwrap();
        let s = sig(3, 3, 1, 0);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let seq = pool.install(|| check_safe(&col, &s, WitnessMode::All).unwrap());
        let par = check_safe(&col, &s, WitnessMode::All).unwrap();
        assert_eq!(seq, par);
    }

    proptest! {
        #[test]
        fn merging_classes_keeps_safety(pick in any::<(u32, u32)>()) {
            for (name, s) in [("six_chi2", sig(3, 3, 1, 0)), ("six_chi1", sig(3, 3, 0, 1))] {
                let (col, _) = builtin_fixture(name).unwrap();
                let k = col.message_count() as u32;
                let (x, y) = (pick.0 % k, pick.1 % k);
                let merged = col.map_ids(|id| if id == y { x as u64 } else { id as u64 }).unwrap();
                prop_assert!(check_safe(&merged, &s, F).unwrap().verdict);
            }
            let s = sig(3, 3, 1, 0);
            let col = tabulate(&Protocol::ModN, &s).unwrap();
            let merged = col.map_ids(|id| (id % (1 + pick.0 % 7)) as u64).unwrap();
            prop_assert!(check_safe(&merged, &s, F).unwrap().verdict);
        }

        #[test]
        fn parity_weak_cases(n in 4usize..10, a in 2usize..5) {
            prop_assume!(a + 2 <= n);
            let s = sig(a, n - a - 1, 0, 1);
            let col = Coloring::from_fn(n, a, |h| chi_2(h) as u64).unwrap();
            prop_assert_eq!(check_safe(&col, &s, F).unwrap().verdict, safe_oracle(&col, &s));
        }
    }
}
