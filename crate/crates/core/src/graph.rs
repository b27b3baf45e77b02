//! Graph construction and bounded-distance queries.
//!
//! Everything here is a finite simple undirected graph on vertices
//! `0..n-1`. Circulants are the main citizens; paths, cycles, complete
//! graphs, Cartesian products and distance-graph windows exist so the
//! classical results can be checked against the same machinery.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("circulant order must be at least 3, got {0}")]
    OrderTooSmall(usize),
    #[error("generator {gen} out of range [1, {}] for order {n}", n - 1)]
    GeneratorOutOfRange { gen: usize, n: usize },
    #[error("path and complete graphs need at least one vertex")]
    EmptyGraph,
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("induced vertex set is empty")]
    EmptyInducedSet,
    #[error("induced vertex {0} out of range")]
    InducedOutOfRange(usize),
    #[error("induced vertex {0} listed twice")]
    InducedDuplicate(usize),
    #[error("window length must be at least 1")]
    EmptyWindow,
    #[error("window distances must be positive")]
    ZeroWindowDistance,
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A circulant descriptor: order `n` and a generator set closed under
/// `x -> n - x`.
///
/// Construction closes the set automatically, so `C_12` of `{1,3}` and of
/// `{1,3,9,11}` are the same spec. Generators are kept sorted and
/// deduplicated; an empty set describes the edgeless circulant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    n: usize,
    gens: Vec<usize>,
}

impl CirculantSpec {
    pub fn new(n: usize, gens: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::OrderTooSmall(n));
        }
        let mut closed = Vec::new();
        for g in gens {
            if g == 0 || g >= n {
                return Err(GraphError::GeneratorOutOfRange { gen: g, n });
            }
            closed.push(g);
            closed.push(n - g);
        }
        closed.sort_unstable();
        closed.dedup();
        Ok(Self { n, gens: closed })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The closed, sorted generator set.
    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains_offset(&self, offset: usize) -> bool {
        self.gens.binary_search(&offset).is_ok()
    }

    /// Number of connected components: gcd of the generators and `n`.
    pub fn component_count(&self) -> usize {
        self.gens.iter().fold(self.n, |acc, &g| gcd(acc, g))
    }

    /// The complement circulant, generated by `[1, n-1] \ gens`.
    pub fn complement(&self) -> CirculantSpec {
        let gens = (1..self.n).filter(|g| !self.contains_offset(*g)).collect();
        CirculantSpec { n: self.n, gens }
    }

    /// Generators reduced to their small residue `min(g, n-g)`, sorted and
    /// deduplicated. For `C_n({1,s,n-s,n-1})` this is `{1,s}`.
    pub fn small_residues(&self) -> Vec<usize> {
        let mut small: Vec<usize> = self.gens.iter().map(|&g| g.min(self.n - g)).collect();
        small.sort_unstable();
        small.dedup();
        small
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}({{", self.n)?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}})")
    }
}

/// Window of a distance graph `G(Z, D)`: `m` consecutive integers with
/// `i ~ j` iff `|i - j|` is in `D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceWindowSpec {
    dset: Vec<usize>,
    m: usize,
}

impl DistanceWindowSpec {
    pub fn new(dset: impl IntoIterator<Item = usize>, m: usize) -> Result<Self, GraphError> {
        if m < 1 {
            return Err(GraphError::EmptyWindow);
        }
        let mut dset: Vec<usize> = dset.into_iter().collect();
        if dset.contains(&0) {
            return Err(GraphError::ZeroWindowDistance);
        }
        dset.sort_unstable();
        dset.dedup();
        Ok(Self { dset, m })
    }

    pub fn dset(&self) -> &[usize] {
        &self.dset
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

/// Where a graph came from. Solvers use this to decide whether fixing the
/// first label to 0 is sound (it needs vertex transitivity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin {
    Circulant(CirculantSpec),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Product,
    Window(DistanceWindowSpec),
    Derived,
}

impl Origin {
    /// True when the origin certifies vertex transitivity.
    pub fn is_vertex_transitive(&self) -> bool {
        matches!(
            self,
            Origin::Circulant(_) | Origin::Cycle(_) | Origin::Complete(_)
        )
    }
}

/// Immutable simple graph with sorted adjacency lists.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    origin: Origin,
}

impl Graph {
    fn from_edge_rule(n: usize, origin: Origin, rule: impl Fn(usize, usize) -> bool) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for i in 0..n {
            for j in (i + 1)..n {
                if rule(i, j) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, adj, origin }
    }

    /// The circulant `C_n(S)`: `i ~ j` iff `(j - i) mod n` is in the
    /// (closed) generator set.
    pub fn circulant(spec: CirculantSpec) -> Graph {
        let n = spec.n();

        Graph::from_edge_rule(n, Origin::Circulant(spec.clone()), |i, j| {
            spec.contains_offset((j + n - i) % n)
        })
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::EmptyGraph);
        }
        Ok(Graph::from_edge_rule(n, Origin::Path(n), |i, j| j == i + 1))
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooSmall(n));
        }
        Ok(Graph::from_edge_rule(n, Origin::Cycle(n), |i, j| {
            j == i + 1 || (i == 0 && j == n - 1)
        }))
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        if n < 1 {
            return Err(GraphError::EmptyGraph);
        }
        Ok(Graph::from_edge_rule(n, Origin::Complete(n), |_, _| true))
    }

    /// Cartesian product; vertex `(x, y)` of `self x other` becomes index
    /// `x * other.n() + y`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let n2 = other.n;
        Graph::from_edge_rule(self.n * n2, Origin::Product, |a, b| {
            let (x1, y1) = (a / n2, a % n2);
            let (x2, y2) = (b / n2, b % n2);
            (x1 == x2 && other.is_adjacent(y1, y2)) || (y1 == y2 && self.is_adjacent(x1, x2))
        })
    }

    /// The induced subgraph of `G(Z, D)` on `m` consecutive integers.
    pub fn distance_window(spec: DistanceWindowSpec) -> Graph {
        let dset = spec.dset().to_vec();
        Graph::from_edge_rule(spec.m(), Origin::Window(spec), |i, j| {
            dset.contains(&(j - i))
        })
    }

    /// Induced subgraph on `xs`, reindexed `0..xs.len()` in the order given.
    pub fn induced(&self, xs: &[usize]) -> Result<Graph, GraphError> {
        if xs.is_empty() {
            return Err(GraphError::EmptyInducedSet);
        }
        let mut seen = vec![false; self.n];
        for &x in xs {
            if x >= self.n {
                return Err(GraphError::InducedOutOfRange(x));
            }
            if seen[x] {
                return Err(GraphError::InducedDuplicate(x));
            }
            seen[x] = true;
        }
        Ok(Graph::from_edge_rule(xs.len(), Origin::Derived, |a, b| {
            self.is_adjacent(xs[a], xs[b])
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as sorted `(i, j)` pairs with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for &j in &self.adj[i] {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// All-pairs distances truncated at radius `r` (BFS from every vertex).
    pub fn distances_up_to(&self, r: usize) -> BoundedDistances {
        assert!(r >= 1 && r < usize::from(u8::MAX), "radius out of range");
        let n = self.n;
        let mut table = vec![u8::MAX; n * n];
        let mut queue = Vec::with_capacity(n);
        for s in 0..n {
            table[s * n + s] = 0;
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                let du = table[s * n + u];
                if usize::from(du) >= r {
                    continue;
                }
                for &v in &self.adj[u] {
                    if table[s * n + v] == u8::MAX {
                        table[s * n + v] = du + 1;
                        queue.push(v);
                    }
                }
            }
        }
        BoundedDistances {
            n,
            radius: r,
            table,
        }
    }

    /// Number of connected components (plain BFS; used as an oracle for
    /// `CirculantSpec::component_count`).
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }
}

/// Distances for every ordered pair, exact up to a radius, `None` beyond it.
#[derive(Debug, Clone)]
pub struct BoundedDistances {
    n: usize,
    radius: usize,
    table: Vec<u8>,
}

impl BoundedDistances {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Exact distance when it is at most the radius.
    pub fn dist(&self, i: usize, j: usize) -> Option<usize> {
        let d = self.table[i * self.n + j];
        (d != u8::MAX).then_some(usize::from(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_spec_closes_generators() {
        let spec = CirculantSpec::new(12, [1, 3]).unwrap();
        assert_eq!(spec.gens(), &[1, 3, 9, 11]);
        let same = CirculantSpec::new(12, [1, 3, 9, 11]).unwrap();
        assert_eq!(spec, same);
    }

    #[test]
    fn circulant_spec_dedups_coinciding_residues() {
        // for n=7 the offsets 3 and 4 are the same +-3 pair
        let spec = CirculantSpec::new(7, [3, 4]).unwrap();
        assert_eq!(spec.gens(), &[3, 4]);
        let spec = CirculantSpec::new(7, [1, 3]).unwrap();
        assert_eq!(spec.gens(), &[1, 3, 4, 6]);
    }

    #[test]
    fn circulant_spec_rejects_bad_input() {
        assert!(matches!(
            CirculantSpec::new(2, [1]),
            Err(GraphError::OrderTooSmall(2))
        ));
        assert!(CirculantSpec::new(5, [0]).is_err());
        assert!(CirculantSpec::new(5, [5]).is_err());
    }

    #[test]
    fn four_valent_circulant_examples() {
        let g = Graph::circulant(CirculantSpec::new(12, [1, 3]).unwrap());
        assert_eq!(g.n(), 12);
        assert!((0..12).all(|v| g.degree(v) == 4));

        let k5 = Graph::circulant(CirculantSpec::new(5, [1, 2, 3, 4]).unwrap());
        assert_eq!(k5.edges(), Graph::complete(5).unwrap().edges());

        // n=7: residues +-3 coincide with 4, so the graph stays 4-regular
        let g7 = Graph::circulant(CirculantSpec::new(7, [1, 3]).unwrap());
        assert!((0..7).all(|v| g7.degree(v) == 4));
        for i in 0..7usize {
            for j in 0..7usize {
                if i == j {
                    continue;
                }
                let off = (j + 7 - i) % 7;
                assert_eq!(g7.is_adjacent(i, j), [1, 3, 4, 6].contains(&off));
            }
        }
    }

    #[test]
    fn standard_graphs() {
        assert_eq!(Graph::path(2).unwrap().edge_count(), 1);
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
        let c5 = Graph::cycle(5).unwrap();
        let circ = Graph::circulant(CirculantSpec::new(5, [1]).unwrap());
        assert_eq!(c5.edges(), circ.edges());
        assert!(Graph::path(0).is_err());
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn cartesian_products() {
        let p2 = Graph::path(2).unwrap();
        let sq = p2.cartesian_product(&p2);
        // 2-regular on 4 vertices: the 4-cycle
        assert_eq!(sq.n(), 4);
        assert!((0..4).all(|v| sq.degree(v) == 2));
        let p3 = Graph::path(3).unwrap();
        let g = p2.cartesian_product(&p3);
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn distance_windows() {
        let w = Graph::distance_window(DistanceWindowSpec::new([1], 5).unwrap());
        assert_eq!(w.edges(), Graph::path(5).unwrap().edges());

        let w = Graph::distance_window(DistanceWindowSpec::new([1, 3], 8).unwrap());
        for i in 0..8usize {
            for j in (i + 1)..8 {
                assert_eq!(w.is_adjacent(i, j), [1, 3].contains(&(j - i)));
            }
        }

        let w = Graph::distance_window(DistanceWindowSpec::new([1, 4], 14).unwrap());
        assert_eq!(w.n(), 14);
        assert!(w.is_adjacent(0, 4) && !w.is_adjacent(0, 2));
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.induced(&[0, 1]).unwrap().edge_count(), 1);

        let g = Graph::circulant(CirculantSpec::new(12, [1, 3]).unwrap());
        let window: Vec<usize> = (0..8).collect();
        let ind = g.induced(&window).unwrap();
        let w = Graph::distance_window(DistanceWindowSpec::new([1, 3], 8).unwrap());
        assert_eq!(ind.edges(), w.edges());

        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.induced(&[0, 2, 4]).unwrap().edge_count(), 0);

        assert!(p5.induced(&[]).is_err());
        assert!(p5.induced(&[9]).is_err());
        assert!(p5.induced(&[1, 1]).is_err());
    }

    #[test]
    fn bounded_distances_on_c12() {
        let g = Graph::circulant(CirculantSpec::new(12, [1, 3]).unwrap());
        let d = g.distances_up_to(3);
        assert_eq!(d.dist(0, 1), Some(1));
        assert_eq!(d.dist(0, 0), Some(0));
        // two steps reach offsets {0,2,4,6}; 5 takes three
        assert_eq!(d.dist(0, 5), Some(3));
    }

    #[test]
    fn component_counts() {
        let spec = CirculantSpec::new(12, [2]).unwrap();
        assert_eq!(spec.component_count(), 2);
        assert_eq!(Graph::circulant(spec).component_count(), 2);

        let spec = CirculantSpec::new(12, [1, 3]).unwrap();
        assert_eq!(spec.component_count(), 1);

        let spec = CirculantSpec::new(9, [3]).unwrap();
        assert_eq!(spec.gens(), &[3, 6]);
        assert_eq!(spec.component_count(), 3);
        assert_eq!(Graph::circulant(spec).component_count(), 3);
    }

    #[test]
    fn complements() {
        let spec = CirculantSpec::new(5, [1]).unwrap();
        assert_eq!(spec.complement().gens(), &[2, 3]);

        let spec = CirculantSpec::new(7, [2]).unwrap();
        assert_eq!(spec.complement().gens(), &[1, 3, 4, 6]);

        let spec = CirculantSpec::new(4, [1, 2, 3]).unwrap();
        assert_eq!(spec.complement().gens(), &[] as &[usize]);
    }
}
