//! Exact feasibility search and lambda computation.
//!
//! Plain depth-first backtracking over the vertex order, labels tried in
//! ascending order. Every vertex keeps a candidate bitset of width `k+1`;
//! assigning a label strikes the forbidden interval from every
//! later-ordered vertex within the profile radius, saving the old word on
//! a trail so retraction is a plain restore. An unassigned vertex with no
//! candidates left triggers backtrack. Everything is deterministic: same
//! inputs, same witness, same node count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{check_labeling, ConstraintProfile, Labeling};

/// Labels are kept in a single machine word per vertex.
pub const MAX_LABEL: u32 = 63;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("max label {0} exceeds the supported limit of {MAX_LABEL}")]
    LabelLimit(u32),
    #[error("anchor policy requires a vertex-transitive origin (circulant, cycle or complete)")]
    AnchorUnsound,
    #[error("vertex order is not a permutation of 0..{0}")]
    BadVertexOrder(usize),
    #[error("prefix length {got} exceeds vertex count {n}")]
    PrefixTooLong { got: usize, n: usize },
    #[error("prefix label {label} exceeds max label {k}")]
    PrefixLabelTooLarge { label: u32, k: u32 },
    #[error("node budget exhausted before lambda was resolved (stuck at k = {at}, {nodes} nodes)")]
    LambdaBudget { at: u32, nodes: u64 },
}

/// Whether the search may fix the first vertex's label to 0. Sound only on
/// vertex-transitive graphs; `solve` refuses it otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnchorPolicy {
    FixFirstZero,
    Free,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub anchor: AnchorPolicy,
    /// Assignment order; natural index order when `None`.
    pub vertex_order: Option<Vec<usize>>,
    /// Cap on label-assignment attempts; unlimited when `None`.
    pub node_budget: Option<u64>,
    /// Workers for deterministic root splitting; 1 = sequential.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            anchor: AnchorPolicy::Free,
            vertex_order: None,
            node_budget: None,
            threads: 1,
        }
    }
}

impl SolveOptions {
    pub fn anchored() -> Self {
        Self {
            anchor: AnchorPolicy::FixFirstZero,
            ..Self::default()
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.node_budget = Some(budget);
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Feasible(Labeling),
    Infeasible,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: Outcome,
    /// Label-assignment attempts explored.
    pub nodes: u64,
}

impl SearchResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self.outcome, Outcome::Feasible(_))
    }

    pub fn witness(&self) -> Option<&Labeling> {
        match &self.outcome {
            Outcome::Feasible(f) => Some(f),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaResult {
    pub value: u32,
    pub witness: Labeling,
    /// Total nodes over all label budgets tried.
    pub nodes: u64,
}

/// Decides whether `g` admits a labeling with labels in `[0, k]`.
pub fn solve(
    g: &Graph,
    k: u32,
    p: &ConstraintProfile,
    opts: &SolveOptions,
) -> Result<SearchResult, SolveError> {
    let order = checked_order(g, opts)?;
    let anchored = match opts.anchor {
        AnchorPolicy::FixFirstZero => {
            if !g.origin().is_vertex_transitive() {
                return Err(SolveError::AnchorUnsound);
            }
            true
        }
        AnchorPolicy::Free => false,
    };
    let prefix: &[u32] = if anchored { &[0] } else { &[] };
    // With no anchor, restrict to labelings that use label 0 somewhere;
    // feasibility is unchanged because valid labelings shift down.
    run(g, k, p, &order, prefix, !anchored, opts)
}

/// Searches only completions of `prefix` (labels for the initial segment of
/// the vertex order). A prefix that already violates a constraint yields an
/// immediate `Infeasible` with zero nodes.
pub fn extend_prefix(
    g: &Graph,
    k: u32,
    p: &ConstraintProfile,
    prefix: &[u32],
    opts: &SolveOptions,
) -> Result<SearchResult, SolveError> {
    let order = checked_order(g, opts)?;
    if prefix.len() > g.n() {
        return Err(SolveError::PrefixTooLong {
            got: prefix.len(),
            n: g.n(),
        });
    }
    for &label in prefix {
        if label > k {
            return Err(SolveError::PrefixLabelTooLarge { label, k });
        }
    }
    // No zero-rule here: shifting a completion would move the prefix too.
    run(g, k, p, &order, prefix, false, opts)
}

/// Smallest `k` admitting a labeling with labels in `[0, k]`, plus a
/// witness. Iterates `k` upward from `from`.
pub fn lambda_exact(
    g: &Graph,
    p: &ConstraintProfile,
    opts: &SolveOptions,
    from: u32,
) -> Result<LambdaResult, SolveError> {
    let max_required = p.mins().iter().copied().max().unwrap_or(1).max(1);
    // any graph is labelable with distinct multiples of the largest demand
    let ceiling = (g.n() as u32 - 1).saturating_mul(max_required) + 1;
    let mut nodes = 0u64;
    let mut k = from;
    loop {
        let res = solve(g, k, p, opts)?;
        nodes += res.nodes;
        match res.outcome {
            Outcome::Feasible(witness) => {
                return Ok(LambdaResult {
                    value: k,
                    witness,
                    nodes,
                })
            }
            Outcome::BudgetExhausted => return Err(SolveError::LambdaBudget { at: k, nodes }),
            Outcome::Infeasible => {
                assert!(k <= ceiling, "no feasible labeling below trivial ceiling");
                k += 1;
            }
        }
    }
}

fn checked_order(g: &Graph, opts: &SolveOptions) -> Result<Vec<usize>, SolveError> {
    match &opts.vertex_order {
        None => Ok((0..g.n()).collect()),
        Some(order) => {
            let mut seen = vec![false; g.n()];
            if order.len() != g.n() {
                return Err(SolveError::BadVertexOrder(g.n()));
            }
            for &v in order {
                if v >= g.n() || seen[v] {
                    return Err(SolveError::BadVertexOrder(g.n()));
                }
                seen[v] = true;
            }
            Ok(order.clone())
        }
    }
}

fn run(
    g: &Graph,
    k: u32,
    p: &ConstraintProfile,
    order: &[usize],
    prefix: &[u32],
    zero_rule: bool,
    opts: &SolveOptions,
) -> Result<SearchResult, SolveError> {
    if k > MAX_LABEL {
        return Err(SolveError::LabelLimit(k));
    }
    let budget = opts.node_budget.unwrap_or(u64::MAX);
    let result = if opts.threads > 1 && prefix.len() < g.n() {
        // quick sequential probe first: feasible instances usually resolve
        // within it, keeping node counts deterministic and avoiding an
        // exhaustive parallel sweep just to reconstruct the witness
        let probe_budget = budget.min(1_000_000);
        let probe = run_sequential(g, k, p, order, prefix, zero_rule, probe_budget);
        match probe.outcome {
            Outcome::BudgetExhausted if probe_budget < budget => {
                let mut split = run_split(g, k, p, order, prefix, zero_rule, budget, opts.threads);
                split.nodes += probe.nodes;
                split
            }
            _ => probe,
        }
    } else {
        run_sequential(g, k, p, order, prefix, zero_rule, budget)
    };
    if let Outcome::Feasible(f) = &result.outcome {
        debug_assert!(f.labels().iter().all(|&l| l <= k));
        let viols = check_labeling(g, f, p).expect("witness length matches graph");
        assert!(viols.is_empty(), "solver produced an invalid witness");
    }
    Ok(result)
}

/// Deterministic root splitting: branches over the first unassigned
/// vertices' labels are pulled dynamically by the workers, each branch
/// searched sequentially to completion. The feasible branch with the
/// lexicographically smallest branch labels wins, so the witness — and,
/// because every branch always runs, the node total — equal those of a
/// canonical enumeration regardless of scheduling.
#[allow(clippy::too_many_arguments)]
fn run_split(
    g: &Graph,
    k: u32,
    p: &ConstraintProfile,
    order: &[usize],
    prefix: &[u32],
    zero_rule: bool,
    budget: u64,
    threads: usize,
) -> SearchResult {
    let mut probe = Engine::new(g, k, p, order, zero_rule);
    if !probe.apply_prefix(prefix) {
        return SearchResult {
            outcome: Outcome::Infeasible,
            nodes: 0,
        };
    }
    let root = order[prefix.len()];
    let mut root_labels = Vec::new();
    let mut rest = probe.cand[root];
    while rest != 0 {
        root_labels.push(rest.trailing_zeros());
        rest &= rest - 1;
    }
    drop(probe);

    // branch over up to three assignment levels: the subtree sizes are
    // heavily skewed, and finer branches keep every worker busy
    let extra_levels = (g.n() - prefix.len() - 1).min(2);
    let mut branches: Vec<Vec<u32>> = root_labels.iter().map(|&l| vec![l]).collect();
    for _ in 0..extra_levels {
        let mut refined = Vec::with_capacity(branches.len() * (k as usize + 1));
        for branch in &branches {
            for label in 0..=k {
                let mut longer = branch.clone();
                longer.push(label);
                refined.push(longer);
            }
        }
        branches = refined;
    }

    // dynamic pulling balances the heavily skewed branch sizes
    let cursor = AtomicUsize::new(0);
    let branch_results: Vec<(Vec<u32>, SearchResult)> = thread::scope(|scope| {
        let mut handles = Vec::new();
        for _ in 0..threads {
            let cursor = &cursor;
            let branches = &branches;
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                loop {
                    let i = cursor.fetch_add(1, Ordering::Relaxed);
                    let Some(branch) = branches.get(i) else { break };
                    let mut branch_prefix = prefix.to_vec();
                    branch_prefix.extend_from_slice(branch);
                    let res = run_sequential(g, k, p, order, &branch_prefix, zero_rule, budget);
                    out.push((branch.clone(), res));
                }
                out
            }));
        }
        let mut all = Vec::new();
        for h in handles {
            all.extend(h.join().expect("solver worker panicked"));
        }
        all
    });

    let nodes: u64 = branch_results.iter().map(|(_, r)| r.nodes).sum();
    let budget_hit = branch_results
        .iter()
        .any(|(_, r)| matches!(r.outcome, Outcome::BudgetExhausted));
    let best = branch_results
        .into_iter()
        .filter(|(_, r)| r.is_feasible())
        .min_by_key(|(branch, _)| branch.clone());
    let outcome = match best {
        Some((_, r)) => r.outcome,
        None if budget_hit => Outcome::BudgetExhausted,
        None => Outcome::Infeasible,
    };
    SearchResult { outcome, nodes }
}

fn run_sequential(
    g: &Graph,
    k: u32,
    p: &ConstraintProfile,
    order: &[usize],
    prefix: &[u32],
    zero_rule: bool,
    budget: u64,
) -> SearchResult {
    let mut engine = Engine::new(g, k, p, order, zero_rule);
    if !engine.apply_prefix(prefix) {
        return SearchResult {
            outcome: Outcome::Infeasible,
            nodes: 0,
        };
    }
    engine.budget = budget;
    let outcome = match engine.dfs(prefix.len()) {
        Dfs::Found => {
            Outcome::Feasible(Labeling::new(engine.labels.clone()).expect("graph is nonempty"))
        }
        Dfs::Exhausted => Outcome::Infeasible,
        Dfs::Budget => Outcome::BudgetExhausted,
    };
    SearchResult {
        outcome,
        nodes: engine.nodes,
    }
}

enum Dfs {
    Found,
    Exhausted,
    Budget,
}

struct Engine<'g> {
    n: usize,
    order: &'g [usize],
    /// packed per-vertex constraints: entries\[starts\[v\]..starts\[v+1\]\] hold
    /// (later-ordered vertex, mask row offset) pairs within the radius
    cons_starts: Vec<u32>,
    cons_entries: Vec<(u32, u32)>,
    /// forbidden-interval masks, row per required difference, k+1 wide
    masks: Vec<u64>,
    labels: Vec<u32>,
    cand: Vec<u64>,
    /// saved candidate words; LIFO per search level
    trail: Vec<(u32, u64)>,
    /// trail length at entry of each level
    marks: Vec<usize>,
    zero_rule: bool,
    zeros_assigned: u32,
    zero_avail: u32,
    nodes: u64,
    budget: u64,
}

impl<'g> Engine<'g> {
    fn new(
        g: &'g Graph,
        k: u32,
        p: &ConstraintProfile,
        order: &'g [usize],
        zero_rule: bool,
    ) -> Self {
        let n = g.n();
        let mut pos = vec![0usize; n];
        for (d, &v) in order.iter().enumerate() {
            pos[v] = d;
        }
        let dists = g.distances_up_to(p.radius());
        let width = k as usize + 1;
        let mut cons_starts = Vec::with_capacity(n + 1);
        let mut cons_entries = Vec::new();
        for i in 0..n {
            cons_starts.push(cons_entries.len() as u32);
            for j in 0..n {
                if i == j || pos[j] < pos[i] {
                    continue;
                }
                if let Some(d) = dists.dist(i, j) {
                    let req = p.required(d);
                    if req > 0 {
                        cons_entries.push((j as u32, req * width as u32));
                    }
                }
            }
        }
        cons_starts.push(cons_entries.len() as u32);
        let full: u64 = if k == 63 {
            u64::MAX
        } else {
            (1u64 << (k + 1)) - 1
        };
        let max_req = p.mins().iter().copied().max().unwrap_or(0) as usize;
        let mut masks = vec![0u64; (max_req + 1) * width];
        for req in 1..=max_req {
            for l in 0..width {
                let lo = l.saturating_sub(req - 1);
                let hi = (l + req - 1).min(k as usize);
                let span = hi - lo + 1;
                let bits = if span == 64 {
                    u64::MAX
                } else {
                    (1u64 << span) - 1
                };
                masks[req * width + l] = bits << lo;
            }
        }
        Engine {
            n,
            order,
            cons_starts,
            cons_entries,
            masks,
            labels: vec![0; n],
            cand: vec![full; n],
            trail: Vec::with_capacity(4 * n),
            marks: vec![0; n + 1],
            zero_rule,
            zeros_assigned: 0,
            zero_avail: n as u32,
            nodes: 0,
            budget: u64::MAX,
        }
    }

    /// Returns false when some prefix label is already forbidden by an
    /// earlier prefix assignment (a violating pair exists).
    fn apply_prefix(&mut self, prefix: &[u32]) -> bool {
        for (depth, &label) in prefix.iter().enumerate() {
            let v = self.order[depth];
            if self.cand[v] & (1u64 << label) == 0 {
                return false;
            }
            self.assign(depth, v, label);
        }
        true
    }

    /// Applies the assignment and strikes the forbidden interval from every
    /// later vertex in range; returns false when a dead end is already
    /// visible (an unassigned vertex lost all candidates, or label 0 can no
    /// longer appear under the zero rule).
    fn assign(&mut self, depth: usize, v: usize, label: u32) -> bool {
        if self.zero_rule {
            if self.cand[v] & 1 != 0 {
                self.zero_avail -= 1;
            }
            if label == 0 {
                self.zeros_assigned += 1;
            }
        }
        self.labels[v] = label;
        self.marks[depth] = self.trail.len();
        let mut dead = false;
        let lo = self.cons_starts[v] as usize;
        let hi = self.cons_starts[v + 1] as usize;
        // hot loop: indices come from construction-time invariants
        for idx in lo..hi {
            let (u, mask_row) = unsafe { *self.cons_entries.get_unchecked(idx) };
            let u = u as usize;
            let mask = unsafe { *self.masks.get_unchecked(mask_row as usize + label as usize) };
            let old = unsafe { *self.cand.get_unchecked(u) };
            let new = old & !mask;
            if new != old {
                self.trail.push((u as u32, old));
                unsafe { *self.cand.get_unchecked_mut(u) = new };
                if self.zero_rule && (old & 1 != 0) && (new & 1 == 0) {
                    self.zero_avail -= 1;
                }
                dead |= new == 0;
            }
        }
        if self.zero_rule && self.zeros_assigned == 0 && self.zero_avail == 0 {
            dead = true;
        }
        !dead
    }

    fn unassign(&mut self, depth: usize, v: usize, label: u32) {
        let mark = self.marks[depth];
        while self.trail.len() > mark {
            let (u, old) = self.trail.pop().expect("trail underflow");
            let u = u as usize;
            if self.zero_rule && (old & 1 != 0) && (self.cand[u] & 1 == 0) {
                self.zero_avail += 1;
            }
            self.cand[u] = old;
        }
        if self.zero_rule {
            if label == 0 {
                self.zeros_assigned -= 1;
            }
            if self.cand[v] & 1 != 0 {
                self.zero_avail += 1;
            }
        }
    }

    fn dfs(&mut self, depth: usize) -> Dfs {
        if depth == self.n {
            debug_assert!(!self.zero_rule || self.zeros_assigned > 0);
            return Dfs::Found;
        }
        let v = self.order[depth];
        let mut rest = self.cand[v];
        while rest != 0 {
            let label = rest.trailing_zeros();
            rest &= rest - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return Dfs::Budget;
            }
            if self.assign(depth, v, label) {
                match self.dfs(depth + 1) {
                    Dfs::Exhausted => {}
                    found_or_budget => return found_or_budget,
                }
            }
            self.unassign(depth, v, label);
        }
        Dfs::Exhausted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CirculantSpec;

    fn l321() -> ConstraintProfile {
        ConstraintProfile::l321()
    }

    fn circ(n: usize, gens: &[usize]) -> Graph {
        Graph::circulant(CirculantSpec::new(n, gens.iter().copied()).unwrap())
    }

    #[test]
    fn c7_needs_twelve() {
        let g = circ(7, &[1, 3]);
        let opts = SolveOptions::anchored();
        let r = solve(&g, 11, &l321(), &opts).unwrap();
        assert_eq!(r.outcome, Outcome::Infeasible);
        let r = solve(&g, 12, &l321(), &opts).unwrap();
        assert!(r.is_feasible());
    }

    #[test]
    fn k4_witness_is_0_3_6_9() {
        let g = Graph::complete(4).unwrap();
        let r = solve(&g, 9, &l321(), &SolveOptions::anchored()).unwrap();
        let w = r.witness().unwrap();
        assert_eq!(w.labels(), &[0, 3, 6, 9]);
    }

    #[test]
    fn single_vertex_path() {
        let g = Graph::path(1).unwrap();
        let r = solve(&g, 0, &l321(), &SolveOptions::default()).unwrap();
        assert_eq!(r.witness().unwrap().labels(), &[0]);
    }

    #[test]
    fn anchor_refused_off_transitive_origins() {
        let g = Graph::path(3).unwrap();
        let err = solve(&g, 5, &l321(), &SolveOptions::anchored()).unwrap_err();
        assert_eq!(err, SolveError::AnchorUnsound);
        // products and windows are refused too
        let w = Graph::distance_window(crate::graph::DistanceWindowSpec::new([1, 3], 5).unwrap());
        assert!(solve(&w, 10, &l321(), &SolveOptions::anchored()).is_err());
    }

    #[test]
    fn lambda_small_graphs() {
        let opts = SolveOptions::default();
        let p = l321();
        assert_eq!(
            lambda_exact(&Graph::path(2).unwrap(), &p, &opts, 0)
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            lambda_exact(
                &Graph::complete(4).unwrap(),
                &p,
                &SolveOptions::anchored(),
                0
            )
            .unwrap()
            .value,
            9
        );
        assert_eq!(
            lambda_exact(&circ(12, &[1, 3]), &p, &SolveOptions::anchored(), 0)
                .unwrap()
                .value,
            11
        );
    }

    #[test]
    fn lambda_respects_starting_bound() {
        let g = circ(12, &[1, 3]);
        let r = lambda_exact(&g, &l321(), &SolveOptions::anchored(), 11).unwrap();
        assert_eq!(r.value, 11);
    }

    #[test]
    fn extend_prefix_verifies_complete_patterns() {
        let g = circ(12, &[1, 3]);
        let pattern = [0u32, 5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7];
        let r = extend_prefix(&g, 11, &l321(), &pattern, &SolveOptions::default()).unwrap();
        assert!(r.is_feasible());
        assert_eq!(r.witness().unwrap().labels(), &pattern);
    }

    #[test]
    fn extend_prefix_completes_partial_patterns() {
        let g = Graph::path(2).unwrap();
        let r = extend_prefix(&g, 3, &l321(), &[0], &SolveOptions::default()).unwrap();
        assert_eq!(r.witness().unwrap().labels(), &[0, 3]);

        let g = circ(10, &[1, 3]);
        let prefix = [0u32, 3, 10, 13, 6, 1, 4, 9, 12];
        let r = extend_prefix(&g, 13, &l321(), &prefix, &SolveOptions::default()).unwrap();
        assert_eq!(r.witness().unwrap().labels()[9], 7);
    }

    #[test]
    fn extend_prefix_rejects_violating_prefix() {
        let g = Graph::path(3).unwrap();
        let r = extend_prefix(&g, 7, &l321(), &[0, 1], &SolveOptions::default()).unwrap();
        assert_eq!(r.outcome, Outcome::Infeasible);
        assert_eq!(r.nodes, 0);
    }

    #[test]
    fn prefix_without_zero_is_still_searched() {
        // the zero-used normalization must not apply to prefix searches
        let g = Graph::path(2).unwrap();
        let r = extend_prefix(&g, 5, &l321(), &[2], &SolveOptions::default()).unwrap();
        assert_eq!(r.witness().unwrap().labels(), &[2, 5]);
    }

    #[test]
    fn budget_is_reported() {
        let g = circ(16, &[1, 3]);
        let opts = SolveOptions::anchored().with_budget(5);
        let r = solve(&g, 14, &l321(), &opts).unwrap();
        assert_eq!(r.outcome, Outcome::BudgetExhausted);
    }

    #[test]
    fn label_limit_enforced() {
        let g = Graph::path(2).unwrap();
        assert_eq!(
            solve(&g, 64, &l321(), &SolveOptions::default()).unwrap_err(),
            SolveError::LabelLimit(64)
        );
    }

    #[test]
    fn custom_vertex_order_is_validated() {
        let g = Graph::path(3).unwrap();
        let mut opts = SolveOptions::default();
        opts.vertex_order = Some(vec![0, 0, 1]);
        assert!(solve(&g, 7, &l321(), &opts).is_err());
        opts.vertex_order = Some(vec![2, 0, 1]);
        assert!(solve(&g, 7, &l321(), &opts).unwrap().is_feasible());
    }

    #[test]
    fn general_profiles_solve_classical_values() {
        // L(2,1): cycles need span 4, the 3-path needs 3
        let p21 = ConstraintProfile::new(vec![2, 1]).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            lambda_exact(&c5, &p21, &SolveOptions::anchored(), 0)
                .unwrap()
                .value,
            4
        );
        let p3 = Graph::path(3).unwrap();
        assert_eq!(
            lambda_exact(&p3, &p21, &SolveOptions::default(), 0)
                .unwrap()
                .value,
            3
        );
    }

    #[test]
    fn disconnected_circulants_are_labeled_per_component() {
        // two disjoint triangles: constraints never cross components
        let spec = CirculantSpec::new(6, [2]).unwrap();
        assert_eq!(spec.component_count(), 2);
        let g = Graph::circulant(spec);
        let r = lambda_exact(&g, &l321(), &SolveOptions::anchored(), 0).unwrap();
        assert_eq!(r.value, 6);
        assert_eq!(r.witness.labels(), &[0, 0, 3, 3, 6, 6]);
    }

    #[test]
    fn parallel_matches_sequential() {
        let p = l321();
        for &(n, k) in &[(10usize, 12u32), (12, 11), (12, 10), (14, 13)] {
            let g = circ(n, &[1, 3]);
            let seq = solve(&g, k, &p, &SolveOptions::anchored()).unwrap();
            let par = solve(&g, k, &p, &SolveOptions::anchored().with_threads(4)).unwrap();
            assert_eq!(seq.outcome, par.outcome, "n={n} k={k}");
        }
    }
}
