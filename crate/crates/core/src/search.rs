//! Exhaustive backtracking over colorings of the `a`-hands.
//!
//! Vertices are taken in canonical order and colors in ascending order.
//! Propagation keeps, per vertex, the set of colors not yet ruled out:
//! properness forbids the colors of assigned neighbours, and minimal
//! informativeness forbids the one color that would leave a clique
//! monochrome once all but one of its members are assigned. Safety and the
//! class-size profile are checked through necessary conditions that become
//! exact at the leaves.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::deck::{binomial, enumerate_hands, subsets_of, Hand, Signature};
use crate::error::{Error, Result};
use crate::johnson::{neighbors, GraphSpec};
use crate::protocols::Coloring;
use crate::verify::{check_informative, check_safe, WitnessMode};

/// Most colors a single search can use.
pub const MAX_COLORS: usize = 64;

/// Default wall-clock budget per search.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(600);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Informativeness {
    /// Proper coloring of `J^{c+r}(n, a)`.
    Proper,
    /// Every clique `K_p(b̄)` bichromatic.
    MinInformative,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Safety {
    /// Against an eavesdropper holding `c` cards.
    Safe,
    /// Against an eavesdropper holding no cards.
    WeakSafe,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraints {
    pub informativeness: Informativeness,
    pub safety: Safety,
    /// Most messages allowed.
    pub k: usize,
    /// Required multiset of class sizes; missing parts count as empty
    /// classes.
    pub size_profile: Option<Vec<usize>>,
    pub timeout: Option<Duration>,
    pub symmetry_breaking: bool,
    /// Each member `a` of a class, and cards `z != y` of `a`, need another
    /// member holding `z` but not `y`. Used only for safe searches with
    /// `a >= 2` and a nonempty eavesdropper hand.
    pub double_cover_pruning: bool,
    /// Split the top of the tree across the rayon pool.
    pub parallel: bool,
}

impl Constraints {
    pub fn new(informativeness: Informativeness, safety: Safety, k: usize) -> Self {
        Constraints {
            informativeness,
            safety,
            k,
            size_profile: None,
            timeout: Some(DEFAULT_TIMEOUT),
            symmetry_breaking: true,
            double_cover_pruning: false,
            parallel: false,
        }
    }

    pub fn with_profile(mut self, profile: Vec<usize>) -> Self {
        self.size_profile = Some(profile);
        self
    }

    pub fn with_timeout(mut self, timeout: Option<Duration>) -> Self {
        self.timeout = timeout;
        self
    }

    pub fn with_symmetry_breaking(mut self, on: bool) -> Self {
        self.symmetry_breaking = on;
        self
    }

    pub fn with_double_cover_pruning(mut self, on: bool) -> Self {
        self.double_cover_pruning = on;
        self
    }

    pub fn with_parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Sat(Coloring),
    /// The whole tree was explored.
    Unsat,
    Timeout,
}

impl Outcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, Outcome::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        matches!(self, Outcome::Unsat)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Sat(_) => "SAT",
            Outcome::Unsat => "UNSAT",
            Outcome::Timeout => "TIMEOUT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: Outcome,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// The instance behind a search: `a`-hands of `n` cards, the graph distance,
/// B's hand size for the cliques and the eavesdropper's hand size.
#[derive(Debug, Clone, Copy)]
struct Shape {
    n: usize,
    a: usize,
    d: usize,
    b: Option<usize>,
    c: usize,
}

impl Shape {
    fn of_signature(sig: &Signature, safety: Safety) -> Self {
        let c = if safety == Safety::WeakSafe { 0 } else { sig.c() };
        Shape { n: sig.n(), a: sig.a(), d: sig.hidden().min(sig.a()), b: Some(sig.b()), c }
    }

    fn of_graph(spec: &GraphSpec, safety: Safety) -> Self {
        let c = if safety == Safety::WeakSafe { 0 } else { spec.d };
        let b = spec.n.checked_sub(spec.m + spec.d);
        Shape { n: spec.n, a: spec.m, d: spec.d, b, c }
    }
}

/// Precomputed, read-only search data.
struct Problem {
    n: usize,
    k: usize,
    hands: Vec<Hand>,
    nbrs: Vec<Vec<u32>>,
    clique_size: usize,
    cliques: Vec<Vec<u32>>,
    vertex_cliques: Vec<Vec<u32>>,
    /// Eavesdropper hand and the vertices avoiding it.
    eaves: Vec<(Hand, Vec<u32>)>,
    profile: Option<Vec<usize>>,
    double_cover: bool,
    symmetry: bool,
    precolor: Vec<(u32, u8)>,
    order: Vec<u32>,
    timeout: Option<Duration>,
}

/// Largest clique of `J^d(n, a)`: the `a`-subsets of `{0..a+d-1}`, or the
/// `a`-subsets holding `{0..a-d-1}`.
pub fn max_clique(spec: &GraphSpec) -> Vec<Hand> {
    let GraphSpec { n, m, d } = *spec;
    let inside = if m + d <= n { binomial(m + d, m) } else { 0 };
    let holding = binomial(n - m + d, d);
    if inside >= holding {
        subsets_of(Hand::full(m + d), m).collect()
    } else {
        let core = Hand::full(m - d);
        subsets_of(Hand::full(n).difference(core), d).map(|s| s.union(core)).collect()
    }
}

impl Problem {
    fn build(shape: Shape, cons: &Constraints) -> Result<std::result::Result<Self, Outcome>> {
        let Shape { n, a, d, b, c } = shape;
        if cons.k == 0 || cons.k > MAX_COLORS {
            return Err(Error::InvalidArguments(format!("k must lie in 1..={MAX_COLORS}")));
        }
        let hands = enumerate_hands(n, a)?;
        let v = hands.len();
        let k = cons.k.min(v.max(1));
        if let Some(profile) = &cons.size_profile {
            if profile.iter().sum::<usize>() != v || profile.len() > cons.k {
                return Err(Error::InvalidArguments(format!(
                    "profile {profile:?} must sum to {v} with at most {} parts",
                    cons.k
                )));
            }
            if profile.iter().filter(|&&s| s > 0).count() > k {
                return Ok(Err(Outcome::Unsat));
            }
        }
        let spec = GraphSpec::new(n, a, d)?;
        let rank = |h: Hand| h.lex_rank(n) as u32;

        let nbrs = if cons.informativeness == Informativeness::Proper {
            hands.iter().map(|&h| neighbors(&spec, h).into_iter().map(rank).collect()).collect()
        } else {
            vec![Vec::new(); v]
        };

        let (mut cliques, mut vertex_cliques, mut clique_size) = (Vec::new(), vec![Vec::new(); v], 0);
        if cons.informativeness == Informativeness::MinInformative {
            let Some(b) = b.filter(|_| d >= 1) else {
                return Err(Error::Undefined("minimal informativeness needs c+r >= 1".into()));
            };
            clique_size = binomial(n - b, a) as usize;
            if clique_size < 2 {
                return Ok(Err(Outcome::Unsat));
            }
            for bh in enumerate_hands(n, b)? {
                let q = cliques.len() as u32;
                let members: Vec<u32> = subsets_of(bh.complement(n), a).map(rank).collect();
                for &m in &members {
                    vertex_cliques[m as usize].push(q);
                }
                cliques.push(members);
            }
        }

        let eaves = if cons.safety == Safety::None {
            Vec::new()
        } else {
            enumerate_hands(n, c)?
                .into_iter()
                .map(|e| (e, subsets_of(e.complement(n), a).map(rank).collect()))
                .collect()
        };

        let mut precolor = Vec::new();
        if cons.symmetry_breaking {
            if cons.informativeness == Informativeness::Proper {
                let clique = max_clique(&spec);
                if clique.len() > k {
                    return Ok(Err(Outcome::Unsat));
                }
                precolor = clique.into_iter().enumerate().map(|(i, h)| (rank(h), i as u8)).collect();
            } else {
                precolor.push((0, 0));
            }
        }
        let order = (0..v as u32).filter(|x| precolor.iter().all(|p| p.0 != *x)).collect();

        let double_cover = cons.double_cover_pruning && cons.safety == Safety::Safe && c >= 1 && a >= 2;
        Ok(Ok(Problem {
            n,
            k,
            hands,
            nbrs,
            clique_size,
            cliques,
            vertex_cliques,
            eaves,
            profile: cons.size_profile.clone(),
            double_cover,
            symmetry: cons.symmetry_breaking,
            precolor,
            order,
            timeout: cons.timeout,
        }))
    }
}

const NONE: u8 = u8::MAX;

#[derive(Clone)]
struct State {
    color: Vec<u8>,
    allowed: Vec<u64>,
    forbid: Vec<u16>,
    clique_assigned: Vec<u16>,
    clique_count: Vec<u16>,
    class_size: Vec<u32>,
    max_used: i32,
    trail: Vec<u32>,
    // scratch buffers for the safety check
    meet: Vec<Hand>,
    join: Vec<Hand>,
    fixed: Vec<bool>,
}

struct Undo {
    mark: usize,
    max_used: i32,
}

impl State {
    fn new(p: &Problem) -> Self {
        let v = p.hands.len();
        let full = if p.k == 64 { u64::MAX } else { (1u64 << p.k) - 1 };
        State {
            color: vec![NONE; v],
            allowed: vec![full; v],
            forbid: vec![0; v * p.k],
            clique_assigned: vec![0; p.cliques.len()],
            clique_count: vec![0; p.cliques.len() * p.k],
            class_size: vec![0; p.k],
            max_used: -1,
            trail: Vec::new(),
            meet: vec![Hand::EMPTY; p.k],
            join: vec![Hand::EMPTY; p.k],
            fixed: vec![false; p.k],
        }
    }

    /// Returns false when vertex `w` has no color left.
    fn forbid(&mut self, k: usize, w: usize, col: usize) -> bool {
        let idx = w * k + col;
        self.forbid[idx] += 1;
        if self.forbid[idx] == 1 {
            self.allowed[w] &= !(1u64 << col);
        }
        self.trail.push(idx as u32);
        self.allowed[w] != 0
    }

    fn assign(&mut self, p: &Problem, v: usize, col: usize) -> (Undo, bool) {
        let undo = Undo { mark: self.trail.len(), max_used: self.max_used };
        self.color[v] = col as u8;
        self.class_size[col] += 1;
        self.max_used = self.max_used.max(col as i32);
        let mut ok = true;
        for &w in &p.nbrs[v] {
            let w = w as usize;
            if self.color[w] == NONE {
                ok &= self.forbid(p.k, w, col);
            }
        }
        let last = (p.clique_size as u16).saturating_sub(1);
        for &q in &p.vertex_cliques[v] {
            let q = q as usize;
            self.clique_assigned[q] += 1;
            self.clique_count[q * p.k + col] += 1;
            if self.clique_assigned[q] == last && self.clique_count[q * p.k + col] == last {
                let w = p.cliques[q].iter().map(|&w| w as usize).find(|&w| self.color[w] == NONE);
                if let Some(w) = w {
                    ok &= self.forbid(p.k, w, col);
                }
            }
        }
        ok = ok && self.profile_feasible(p) && self.safety_feasible(p) && self.double_cover_feasible(p);
        (undo, ok)
    }

    fn unassign(&mut self, p: &Problem, v: usize, col: usize, undo: Undo) {
        while self.trail.len() > undo.mark {
            let idx = self.trail.pop().unwrap() as usize;
            self.forbid[idx] -= 1;
            if self.forbid[idx] == 0 {
                self.allowed[idx / p.k] |= 1u64 << (idx % p.k);
            }
        }
        for &q in &p.vertex_cliques[v] {
            let q = q as usize;
            self.clique_assigned[q] -= 1;
            self.clique_count[q * p.k + col] -= 1;
        }
        self.class_size[col] -= 1;
        self.color[v] = NONE;
        self.max_used = undo.max_used;
    }

    /// Classes can still grow into the profile: each class `j` ends with a
    /// size in `[size_j, size_j + candidates_j]`, and these intervals must
    /// match the profile entries one to one.
    fn profile_feasible(&self, p: &Problem) -> bool {
        let Some(profile) = &p.profile else { return true };
        let k = p.k;
        let mut room = vec![0u32; k];
        for (w, &c) in self.color.iter().enumerate() {
            if c == NONE {
                let mut bits = self.allowed[w];
                while bits != 0 {
                    room[bits.trailing_zeros() as usize] += 1;
                    bits &= bits - 1;
                }
            }
        }
        let mut points: Vec<u32> = profile.iter().map(|&s| s as u32).collect();
        points.resize(k.max(points.len()), 0);
        points.sort_unstable();
        let mut used = vec![false; k];
        for &pt in &points {
            let best = (0..k)
                .filter(|&j| !used[j] && self.class_size[j] <= pt && pt <= self.class_size[j] + room[j])
                .min_by_key(|&j| self.class_size[j] + room[j]);
            match best {
                Some(j) => used[j] = true,
                None => return false,
            }
        }
        true
    }

    /// For each eavesdropper hand and each message already possible for it,
    /// the hands that may still end up in that class must have empty
    /// intersection and cover every card the eavesdropper lacks.
    fn safety_feasible(&mut self, p: &Problem) -> bool {
        for (e, inside) in &p.eaves {
            self.meet.fill(Hand::full(p.n));
            self.join.fill(Hand::EMPTY);
            self.fixed.fill(false);
            for &w in inside {
                let w = w as usize;
                let h = p.hands[w];
                let c = self.color[w];
                if c != NONE {
                    let c = c as usize;
                    self.fixed[c] = true;
                    self.meet[c] = self.meet[c].intersection(h);
                    self.join[c] = self.join[c].union(h);
                } else {
                    let mut bits = self.allowed[w];
                    while bits != 0 {
                        let c = bits.trailing_zeros() as usize;
                        self.meet[c] = self.meet[c].intersection(h);
                        self.join[c] = self.join[c].union(h);
                        bits &= bits - 1;
                    }
                }
            }
            let rest = e.complement(p.n);
            for c in 0..p.k {
                if self.fixed[c] && (!self.meet[c].is_empty() || !rest.is_subset(self.join[c])) {
                    return false;
                }
            }
        }
        true
    }

    fn double_cover_feasible(&self, p: &Problem) -> bool {
        if !p.double_cover {
            return true;
        }
        let may = |w: usize, c: usize| -> bool {
            let own = self.color[w];
            if own == NONE {
                self.allowed[w] & (1u64 << c) != 0
            } else {
                own as usize == c
            }
        };
        for (v, &c) in self.color.iter().enumerate() {
            if c == NONE {
                continue;
            }
            let a = p.hands[v];
            for z in a.cards() {
                for y in a.without(z).cards() {
                    let found = (0..p.hands.len()).any(|w| {
                        w != v && may(w, c as usize) && p.hands[w].contains(z) && !p.hands[w].contains(y)
                    });
                    if !found {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn coloring(&self, p: &Problem) -> Result<Coloring> {
        let values: Vec<u64> = self.color.iter().map(|&c| c as u64).collect();
        Coloring::from_values(p.n, p.hands[0].len(), &values)
    }
}

enum Step {
    Sat,
    Unsat,
    Stop,
}

/// One depth-first worker. `index` orders workers for the parallel split.
struct Worker<'a> {
    p: &'a Problem,
    state: State,
    nodes: u64,
    start: Instant,
    index: usize,
    best: &'a AtomicUsize,
    timed_out: bool,
}

impl Worker<'_> {
    fn should_stop(&mut self) -> bool {
        if self.best.load(Ordering::Relaxed) < self.index {
            return true;
        }
        if let Some(limit) = self.p.timeout {
            if self.start.elapsed() > limit {
                self.timed_out = true;
                return true;
            }
        }
        false
    }

    fn colors_for(&self, v: usize) -> impl Iterator<Item = usize> {
        let top = if self.p.symmetry {
            (self.state.max_used + 1).min(self.p.k as i32 - 1) as usize
        } else {
            self.p.k - 1
        };
        let bits = self.state.allowed[v];
        (0..=top).filter(move |&c| bits & (1u64 << c) != 0)
    }

    fn dfs(&mut self, pos: usize) -> Step {
        let Some(&v) = self.p.order.get(pos) else { return Step::Sat };
        let v = v as usize;
        let colors: Vec<usize> = self.colors_for(v).collect();
        for col in colors {
            self.nodes += 1;
            if self.nodes.is_multiple_of(1024) && self.should_stop() {
                return Step::Stop;
            }
            let (undo, ok) = self.state.assign(self.p, v, col);
            if ok {
                match self.dfs(pos + 1) {
                    Step::Sat => return Step::Sat,
                    Step::Stop => {
                        self.state.unassign(self.p, v, col, undo);
                        return Step::Stop;
                    }
                    Step::Unsat => {}
                }
            }
            self.state.unassign(self.p, v, col, undo);
        }
        Step::Unsat
    }

    /// All consistent assignments of the next `depth` vertices, in search
    /// order.
    fn prefixes(&mut self, pos: usize, depth: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if depth == 0 || pos == self.p.order.len() {
            out.push(prefix.clone());
            return;
        }
        let v = self.p.order[pos] as usize;
        let colors: Vec<usize> = self.colors_for(v).collect();
        for col in colors {
            self.nodes += 1;
            let (undo, ok) = self.state.assign(self.p, v, col);
            if ok {
                prefix.push(col);
                self.prefixes(pos + 1, depth - 1, prefix, out);
                prefix.pop();
            }
            self.state.unassign(self.p, v, col, undo);
        }
    }
}

fn run(shape: Shape, cons: &Constraints) -> Result<SearchResult> {
    let start = Instant::now();
    let finish = |outcome, nodes| SearchResult { outcome, nodes_explored: nodes, elapsed: start.elapsed() };
    let p = match Problem::build(shape, cons)? {
        Ok(p) => p,
        Err(outcome) => return Ok(finish(outcome, 0)),
    };
    let mut base = State::new(&p);
    for &(v, c) in &p.precolor {
        let (_, ok) = base.assign(&p, v as usize, c as usize);
        if !ok {
            return Ok(finish(Outcome::Unsat, 0));
        }
    }
    let best = AtomicUsize::new(usize::MAX);
    let mut root = Worker { p: &p, state: base, nodes: 0, start, index: 0, best: &best, timed_out: false };

    if !cons.parallel || rayon::current_num_threads() < 2 {
        let step = root.dfs(0);
        let outcome = match step {
            Step::Sat => Outcome::Sat(root.state.coloring(&p)?),
            Step::Unsat => Outcome::Unsat,
            Step::Stop => Outcome::Timeout,
        };
        return Ok(finish(outcome, root.nodes));
    }

    let target = 8 * rayon::current_num_threads();
    let mut branches = Vec::new();
    for depth in 1..=p.order.len().min(8) {
        branches.clear();
        root.prefixes(0, depth, &mut Vec::new(), &mut branches);
        if branches.len() >= target {
            break;
        }
    }
    let base = root.state.clone();
    let prefix_nodes = root.nodes;
    let results: Vec<(Step, u64, Option<Coloring>)> = branches
        .par_iter()
        .enumerate()
        .map(|(index, prefix)| {
            let mut w = Worker { p: &p, state: base.clone(), nodes: 0, start, index, best: &best, timed_out: false };
            if best.load(Ordering::Relaxed) < index {
                return (Step::Stop, 0, None);
            }
            for (pos, &col) in prefix.iter().enumerate() {
                let (_, ok) = w.state.assign(&p, p.order[pos] as usize, col);
                debug_assert!(ok);
            }
            let step = w.dfs(prefix.len());
            let mut col = None;
            if let Step::Sat = step {
                best.fetch_min(index, Ordering::Relaxed);
                col = w.state.coloring(&p).ok();
            }
            (step, w.nodes, col)
        })
        .collect();
    let nodes = prefix_nodes + results.iter().map(|r| r.1).sum::<u64>();
    for (step, _, col) in results {
        match step {
            Step::Unsat => continue,
            Step::Sat => return Ok(finish(Outcome::Sat(col.expect("coloring of a SAT leaf")), nodes)),
            Step::Stop => {
                // aborted branches come only after a satisfiable one
                return Ok(finish(Outcome::Timeout, nodes));
            }
        }
    }
    Ok(finish(Outcome::Unsat, nodes))
}

/// Searches for a coloring of the `a`-hands of `sig` meeting `cons`.
pub fn find_coloring(sig: &Signature, cons: &Constraints) -> Result<SearchResult> {
    run(Shape::of_signature(sig, cons.safety), cons)
}

/// Like [`find_coloring`], on `J^d(n, m)` directly. Safety is taken against
/// an eavesdropper holding `d` cards (`WeakSafe`: none), and cliques are
/// those of `(n-m-d)`-hands.
pub fn find_coloring_on(spec: &GraphSpec, cons: &Constraints) -> Result<SearchResult> {
    run(Shape::of_graph(spec, cons.safety), cons)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    /// Least `k` with a coloring, if established within the bound.
    pub number: Option<usize>,
    /// Outcome and node count for each `k` tried.
    pub trace: Vec<(usize, SearchResult)>,
}

/// Sweeps `k = 1, 2, ..` up to `k_max` and stops at the first satisfiable
/// `k`; a timeout leaves the number unknown.
pub fn chromatic_number_exact(spec: &GraphSpec, base: &Constraints, k_max: usize) -> Result<ChromaticResult> {
    let mut trace = Vec::new();
    for k in 1..=k_max.min(MAX_COLORS) {
        let cons = Constraints { k, ..base.clone() };
        let res = find_coloring_on(spec, &cons)?;
        let outcome = res.outcome.clone();
        trace.push((k, res));
        match outcome {
            Outcome::Sat(_) => return Ok(ChromaticResult { number: Some(k), trace }),
            Outcome::Unsat => {}
            Outcome::Timeout => break,
        }
    }
    Ok(ChromaticResult { number: None, trace })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionPredicate {
    ProperAndSafe,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCheck {
    pub exists: bool,
    pub count: u64,
    pub partitions_examined: u64,
    /// The first satisfying partitions in enumeration order.
    pub witnesses: Vec<Coloring>,
}

/// Largest vertex count accepted by [`exhaustive_partition_check`].
pub const MAX_PARTITION_VERTICES: usize = 12;

const MAX_PARTITION_WITNESSES: usize = 16;

/// Tests every set partition of the `a`-hands, as a coloring, against the
/// predicate.
pub fn exhaustive_partition_check(sig: &Signature, predicate: PartitionPredicate) -> Result<PartitionCheck> {
    let PartitionPredicate::ProperAndSafe = predicate;
    let (n, a) = (sig.n(), sig.a());
    let hands = enumerate_hands(n, a)?;
    let v = hands.len();
    if v > MAX_PARTITION_VERTICES {
        return Err(Error::InstanceTooLarge(format!(
            "{v} hands; partitions are enumerated only up to {MAX_PARTITION_VERTICES}"
        )));
    }
    let spec = GraphSpec::of_signature(sig);
    let edges: Vec<(usize, usize)> = (0..v)
        .flat_map(|i| {
            neighbors(&spec, hands[i]).into_iter().map(move |h| (i, h.lex_rank(n))).filter(|&(i, j)| i < j)
        })
        .collect();
    let eaves: Vec<(Hand, Vec<usize>)> = enumerate_hands(n, sig.c())?
        .into_iter()
        .map(|e| (e, (0..v).filter(|&i| hands[i].is_disjoint(e)).collect()))
        .collect();
    let safe = |rgs: &[usize], blocks: usize| -> bool {
        eaves.iter().all(|(e, inside)| {
            let rest = e.complement(n);
            (0..blocks).all(|m| {
                let mut members = inside.iter().filter(|&&i| rgs[i] == m).map(|&i| hands[i]);
                match members.next() {
                    None => true,
                    Some(first) => {
                        let (meet, join) =
                            members.fold((first, first), |(x, y), h| (x.intersection(h), y.union(h)));
                        meet.is_empty() && rest.is_subset(join)
                    }
                }
            })
        })
    };

    let mut out = PartitionCheck { exists: false, count: 0, partitions_examined: 0, witnesses: Vec::new() };
    let mut rgs = vec![0usize; v];
    let mut maxes = vec![0usize; v];
    loop {
        out.partitions_examined += 1;
        let blocks = maxes[v - 1] + 1;
        if edges.iter().all(|&(i, j)| rgs[i] != rgs[j]) && safe(&rgs, blocks) {
            out.count += 1;
            if out.witnesses.len() < MAX_PARTITION_WITNESSES {
                let values: Vec<u64> = rgs.iter().map(|&x| x as u64).collect();
                out.witnesses.push(Coloring::from_values(n, a, &values)?);
            }
        }
        // next restricted growth string
        let mut i = v - 1;
        loop {
            if i == 0 {
                out.exists = out.count > 0;
                return Ok(out);
            }
            let bound = maxes[i - 1] + 1;
            if rgs[i] < bound {
                rgs[i] += 1;
                maxes[i] = maxes[i - 1].max(rgs[i]);
                for j in i + 1..v {
                    rgs[j] = 0;
                    maxes[j] = maxes[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Sizes `s` for which a single class of `s` hands can be part of a proper
/// and safe coloring: pairwise non-adjacent in `J^{c+r}(n, a)` and safe on
/// its own. Safety and properness both hold class by class.
pub fn admissible_class_sizes(sig: &Signature) -> Result<Vec<usize>> {
    let (n, a) = (sig.n(), sig.a());
    let hands = enumerate_hands(n, a)?;
    let spec = GraphSpec::of_signature(sig);
    let adj: Vec<Vec<bool>> = hands
        .iter()
        .map(|&x| {
            let mut row = vec![false; hands.len()];
            for y in neighbors(&spec, x) {
                row[y.lex_rank(n)] = true;
            }
            row
        })
        .collect();
    let eaves = enumerate_hands(n, sig.c())?;
    let class_safe = |class: &[usize]| -> bool {
        eaves.iter().all(|&e| {
            let mut members = class.iter().map(|&i| hands[i]).filter(|h| h.is_disjoint(e));
            match members.next() {
                None => true,
                Some(first) => {
                    let (meet, join) = members.fold((first, first), |(x, y), h| (x.intersection(h), y.union(h)));
                    meet.is_empty() && e.complement(n).is_subset(join)
                }
            }
        })
    };
    let mut found = vec![false; hands.len() + 1];
    let mut class = Vec::new();
    fn grow(
        start: usize,
        class: &mut Vec<usize>,
        adj: &[Vec<bool>],
        found: &mut [bool],
        class_safe: &dyn Fn(&[usize]) -> bool,
    ) {
        if !class.is_empty() && class_safe(class) {
            found[class.len()] = true;
        }
        for next in start..adj.len() {
            if class.iter().all(|&x| !adj[x][next]) {
                class.push(next);
                grow(next + 1, class, adj, found, class_safe);
                class.pop();
            }
        }
    }
    grow(0, &mut class, &adj, &mut found, &class_safe);
    Ok((1..found.len()).filter(|&s| found[s]).collect())
}

/// Re-checks a SAT coloring against the constraints it was searched under.
pub fn satisfies(col: &Coloring, sig: &Signature, cons: &Constraints) -> Result<bool> {
    let mut ok = col.message_count() <= cons.k;
    ok &= match cons.informativeness {
        Informativeness::Proper => check_informative(col, sig, WitnessMode::First)?.verdict,
        Informativeness::MinInformative => {
            crate::verify::check_min_informative(col, sig, WitnessMode::First)?.verdict
        }
        Informativeness::None => true,
    };
    ok &= match cons.safety {
        Safety::Safe => check_safe(col, sig, WitnessMode::First)?.verdict,
        Safety::WeakSafe => {
            let weak = Signature::new(sig.a(), sig.b(), 0, sig.c() + sig.r())?;
            check_safe(col, &weak, WitnessMode::First)?.verdict
        }
        Safety::None => true,
    };
    if let Some(profile) = &cons.size_profile {
        let mut want: Vec<usize> = profile.iter().copied().filter(|&s| s > 0).collect();
        let mut got = col.class_sizes();
        want.sort_unstable();
        got.sort_unstable();
        ok &= want == got;
    }
    Ok(ok)
}
