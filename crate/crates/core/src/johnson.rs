//! Distance-d Johnson graphs `J^d(n, m)`.
//!
//! Vertices are the `m`-subsets of the deck; two distinct vertices are
//! adjacent when they share at least `m - d` cards. The graph is never
//! materialized: adjacency is a predicate and cliques are generated on demand.

use std::collections::VecDeque;
use std::fmt;

use crate::deck::{binomial, enumerate_hands, subsets_of, Card, Hand, Signature, MAX_DECK};
use crate::error::{Error, Result};

/// Parameters of `J^d(n, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphSpec {
    pub n: usize,
    pub m: usize,
    pub d: usize,
}

impl GraphSpec {
    pub fn new(n: usize, m: usize, d: usize) -> Result<Self> {
        if d > m || m > n || n > MAX_DECK {
            return Err(Error::InvalidArguments(format!(
                "J^{d}({n},{m}) requires 0 <= d <= m <= n <= {MAX_DECK}"
            )));
        }
        Ok(GraphSpec { n, m, d })
    }

    /// B's graph `J^{c+r}(n, a)`; distances beyond `a` give the same graph.
    pub fn of_signature(sig: &Signature) -> Self {
        GraphSpec { n: sig.n(), m: sig.a(), d: sig.hidden().min(sig.a()) }
    }

    pub fn vertex_count(&self) -> u64 {
        binomial(self.n, self.m)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            write!(f, "J({},{})", self.n, self.m)
        } else {
            write!(f, "J^{}({},{})", self.d, self.n, self.m)
        }
    }
}

/// A shifting arc `from -> (from \ {out_card}) ∪ {in_card}` of weight
/// `in_card - out_card`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub from: Hand,
    pub in_card: Card,
    pub out_card: Card,
}

impl Arc {
    pub fn new(from: Hand, in_card: Card, out_card: Card) -> Result<Self> {
        if from.contains(in_card) || !from.contains(out_card) {
            return Err(Error::InvalidArc(format!(
                "arc {in_card}<-{out_card} needs {in_card} outside and {out_card} inside {from}"
            )));
        }
        Ok(Arc { from, in_card, out_card })
    }

    pub fn target(&self) -> Hand {
        self.from.without(self.out_card).with(self.in_card)
    }

    pub fn weight(&self) -> i64 {
        self.in_card.0 as i64 - self.out_card.0 as i64
    }
}

/// Adjacency in `J^d(n, m)`.
pub fn adjacent(spec: &GraphSpec, a: Hand, a2: Hand) -> Result<bool> {
    for h in [a, a2] {
        if h.len() != spec.m || h.span() > spec.n {
            return Err(Error::InvalidVertex(format!("{h} is not a vertex of {spec}")));
        }
    }
    Ok(a != a2 && a.intersection(a2).len() + spec.d >= spec.m)
}

/// All `m`-subsets of the complement of `excluded`, in canonical order.
///
/// These are the hands an agent holding `excluded` considers possible for A;
/// they form a clique of `J^d` with `d = n - |excluded| - m`.
pub fn clique_of(spec: &GraphSpec, excluded: Hand) -> Vec<Hand> {
    subsets_of(excluded.complement(spec.n), spec.m).collect()
}

/// `(a \ {j}) ∪ {i}`.
pub fn shift(a: Hand, i: Card, j: Card) -> Result<Hand> {
    Ok(Arc::new(a, i, j)?.target())
}

/// A two-arc path `a -> a1 -> a2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftPath {
    pub arcs: Vec<Arc>,
    pub offset: usize,
}

impl ShiftPath {
    pub fn end(&self) -> Option<Hand> {
        self.arcs.last().map(Arc::target)
    }

    /// Sum of arc weights.
    pub fn weight(&self) -> i64 {
        self.arcs.iter().map(Arc::weight).sum()
    }
}

impl fmt::Display for ShiftPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(first) = self.arcs.first() {
            write!(f, "{{{}}}", first.from)?;
        }
        for arc in &self.arcs {
            write!(f, " -[{}<-{}]-> {{{}}}", arc.in_card, arc.out_card, arc.target())?;
        }
        Ok(())
    }
}

/// Moves `z1` up by `i` and `z2` down by `i` (both mod `n`) for the smallest
/// `1 <= i <= floor(((z2 - z1 - 1) mod n) / 2)` that lands both on cards
/// outside `a ∪ forbidden`.
///
/// The two moves cancel modulo `n`, so the card sum modulo `n` is unchanged.
/// Only the interval walked upward from `z1` to `z2` is searched; see
/// [`zero_sum_shift`] for the two-sided search.
pub fn zero_sum_two_arc(
    a: Hand,
    z1: Card,
    z2: Card,
    forbidden: Hand,
    n: usize,
) -> Result<Option<(Hand, ShiftPath)>> {
    if z1 == z2 || !a.contains(z1) || !a.contains(z2) {
        return Err(Error::InvalidArguments(format!(
            "{z1} and {z2} must be distinct members of {a}"
        )));
    }
    if !a.is_disjoint(forbidden) {
        return Err(Error::InvalidArguments(format!("{a} meets the forbidden set {forbidden}")));
    }
    if a.span() > n || forbidden.span() > n {
        return Err(Error::InvalidArguments(format!("cards must lie below {n}")));
    }
    let (lo, hi) = (z1.index(), z2.index());
    let gap = (hi + n - lo - 1) % n;
    let blocked = a.union(forbidden);
    for i in 1..=gap / 2 {
        let y1 = Card(((lo + i) % n) as u8);
        let y2 = Card(((hi + n - i) % n) as u8);
        if blocked.contains(y1) || blocked.contains(y2) {
            continue;
        }
        let first = Arc::new(a, y1, z1)?;
        let second = Arc::new(first.target(), y2, z2)?;
        let end = second.target();
        return Ok(Some((end, ShiftPath { arcs: vec![first, second], offset: i })));
    }
    Ok(None)
}

/// [`zero_sum_two_arc`] on the interval `(z1, z2)`, falling back to the
/// wrap-around interval `(z2, z1)`.
pub fn zero_sum_shift(
    a: Hand,
    z1: Card,
    z2: Card,
    forbidden: Hand,
    n: usize,
) -> Result<Option<(Hand, ShiftPath)>> {
    match zero_sum_two_arc(a, z1, z2, forbidden, n)? {
        Some(found) => Ok(Some(found)),
        None => zero_sum_two_arc(a, z2, z1, forbidden, n),
    }
}

/// A path of shifting arcs from `from` to `to`, all entering cards of
/// `to \ from`. Both hands must have the same size.
pub fn reachability_path(from: Hand, to: Hand) -> Result<Vec<Arc>> {
    if from.len() != to.len() {
        return Err(Error::InvalidArguments(format!("{from} and {to} differ in size")));
    }
    let outs = from.difference(to).cards();
    let ins = to.difference(from).cards();
    let mut cur = from;
    let mut path = Vec::new();
    for (i, j) in ins.zip(outs) {
        let arc = Arc::new(cur, i, j)?;
        cur = arc.target();
        path.push(arc);
    }
    debug_assert_eq!(cur, to);
    Ok(path)
}

/// Neighbours of `v` in `J^d(n, m)`, in canonical order.
pub fn neighbors(spec: &GraphSpec, v: Hand) -> Vec<Hand> {
    let mut out = Vec::new();
    let rest = v.complement(spec.n);
    // keep m-k cards of v and take k fresh ones, for k = 1..=d
    for k in 1..=spec.d.min(rest.len()) {
        for keep in subsets_of(v, spec.m - k) {
            for add in subsets_of(rest, k) {
                out.push(keep.union(add));
            }
        }
    }
    out.sort();
    out
}

/// Structural statistics of `J^d(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub vertex_count: u64,
    /// Common vertex degree (every `J^d(n, m)` is regular).
    pub degree: u64,
    pub diameter: usize,
    /// Sizes of the two families of maximal cliques: the `m`-subsets holding a
    /// fixed `(m-d)`-set, and the `m`-subsets of a fixed `(m+d)`-set.
    pub max_clique_sizes: (u64, u64),
}

impl fmt::Display for GraphStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertex_count={}", self.vertex_count)?;
        writeln!(f, "degree={}", self.degree)?;
        writeln!(f, "diameter={}", self.diameter)?;
        write!(f, "max_clique_sizes={},{}", self.max_clique_sizes.0, self.max_clique_sizes.1)
    }
}

pub fn graph_stats(spec: &GraphSpec) -> Result<GraphStats> {
    let GraphSpec { n, m, d } = *spec;
    let vertex_count = binomial(n, m);
    let degree: u64 = (1..=d).map(|k| binomial(m, k) * binomial(n - m, k)).sum();
    let diameter = if d == 1 {
        m.min(n - m)
    } else {
        bfs_eccentricity(spec)?
    };
    let max_clique_sizes = if d == 0 {
        (1, 1)
    } else {
        (binomial(n - m + d, d), binomial(m + d, m))
    };
    Ok(GraphStats { vertex_count, degree, diameter, max_clique_sizes })
}

/// Eccentricity of the first vertex, which equals the diameter because the
/// graph is vertex-transitive. An edgeless graph on several vertices reports
/// `usize::MAX`.
fn bfs_eccentricity(spec: &GraphSpec) -> Result<usize> {
    let hands = enumerate_hands(spec.n, spec.m)?;
    if hands.len() <= 1 {
        return Ok(0);
    }
    let mut dist = vec![usize::MAX; hands.len()];
    let mut queue = VecDeque::new();
    dist[0] = 0;
    queue.push_back(0usize);
    while let Some(i) = queue.pop_front() {
        for nb in neighbors(spec, hands[i]) {
            let j = nb.lex_rank(spec.n);
            if dist[j] == usize::MAX {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    Ok(dist.into_iter().max().unwrap_or(0))
}
