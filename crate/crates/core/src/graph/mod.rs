//! Simple undirected graphs of order at most 64, one `u64` neighbour mask
//! per vertex.

mod edgelist;
mod enumerate;
mod graph6;
mod iso;
mod pattern;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use edgelist::{parse_edge_list, write_edge_list};
pub use enumerate::{enumerate_all, enumerate_connected, MAX_ENUMERATION_ORDER};
pub use graph6::{parse_graph6, parse_graph6_corpus, write_graph6};
pub(crate) use iso::isomorphic_unchecked as iso_unchecked;
pub use iso::{canonical_code, canonical_form, is_isomorphic, CanonicalCode, MAX_ISO_ORDER};
pub use pattern::NamedPattern;

pub const MAX_ORDER: usize = 64;

/// A set of vertices stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// An edge `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalises the endpoint order. Does not check membership in any graph.
    pub fn new(a: usize, b: usize) -> Self {
        Edge { u: a.min(b), v: a.max(b) }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// An undirected simple graph on vertices `0..n`, `1 <= n <= 64`.
///
/// `rows[v]` is the neighbour mask of `v`. The relation is symmetric with an
/// empty diagonal; every constructor maintains this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph `E_n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(!rows.is_empty() && rows.len() <= MAX_ORDER);
        Graph { n: rows.len(), rows }
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).0;
        for v in 0..n {
            g.rows[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OrderOutOfRange(n));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::build(n, &edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Graph::empty(a + b)?;
        for x in 0..a {
            for y in a..a + b {
                g.add_edge_unchecked(x, y);
            }
        }
        Ok(g)
    }

    /// The star `K_{1,m}` with centre 0.
    pub fn star(m: usize) -> Result<Self> {
        Graph::complete_bipartite(1, m)
    }

    /// Join of two graphs: disjoint union plus every edge between them.
    pub fn join(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges().map(|e| (e.u, e.v)) {
            g.add_edge_unchecked(u, v);
        }
        for (u, v) in other.edges().map(|e| (e.u, e.v)) {
            g.add_edge_unchecked(u + self.n, v + self.n);
        }
        for x in 0..self.n {
            for y in 0..other.n {
                g.add_edge_unchecked(x, self.n + y);
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.rows[u] & !((2u64 << u).wrapping_sub(1))).iter().map(move |v| Edge { u, v })
        })
    }

    /// Validates that `(a, b)` is an edge of this graph and normalises it.
    pub fn edge(&self, a: usize, b: usize) -> Result<Edge> {
        if self.has_edge(a, b) {
            Ok(Edge::new(a, b))
        } else {
            Err(Error::NotAnEdge(a, b))
        }
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).intersection(s).is_empty())
    }

    /// Union of the neighbourhoods of `s`, excluding nothing.
    pub fn neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighborhood_of(frontier).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen == self.vertices()
    }

    /// Contracts the edge `uv`: `v` is merged into `u`, vertices above `v`
    /// shift down by one.
    pub fn contract(&self, e: Edge) -> Result<Graph> {
        let Edge { u, v } = e;
        if u >= v || !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let low = (1u64 << v) - 1;
        let squeeze = |row: u64| (row & low) | ((row >> 1) & !low);
        let mut rows = Vec::with_capacity(self.n - 1);
        for w in 0..self.n {
            if w == v {
                continue;
            }
            let mut row = self.rows[w];
            if w == u {
                row |= self.rows[v];
            } else if row >> v & 1 == 1 {
                row |= 1u64 << u;
            }
            row &= !(1u64 << v);
            let row = squeeze(row) & !(1u64 << if w < v { w } else { w - 1 });
            rows.push(row);
        }
        Ok(Graph::from_rows(rows))
    }

    /// Label of vertex `w` of `self` after contracting `e`.
    pub fn contracted_label(e: Edge, w: usize) -> usize {
        if w == e.v {
            e.u
        } else if w > e.v {
            w - 1
        } else {
            w
        }
    }

    /// Image of `s` under contraction of `e`.
    pub fn contracted_set(e: Edge, s: VertexSet) -> VertexSet {
        s.iter().map(|w| Graph::contracted_label(e, w)).collect()
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).0;
        let rows = self.rows.iter().enumerate().map(|(v, r)| !r & all & !(1u64 << v)).collect();
        Graph::from_rows(rows)
    }

    /// Subgraph induced by `s`, relabelled in ascending order of the
    /// original labels.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(v) = s.difference(self.vertices()).first() {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: VertexSet) -> Graph {
        let members: Vec<usize> = s.iter().collect();
        let rows = members
            .iter()
            .map(|&v| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(v, w))
                    .fold(0u64, |m, (i, _)| m | (1u64 << i))
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::OrderOutOfRange(perm.len()));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::VertexOutOfRange { vertex: p, order: self.n });
            }
            seen.insert(p);
        }
        let mut rows = vec![0u64; self.n];
        for e in self.edges() {
            let (a, b) = (perm[e.u], perm[e.v]);
            rows[a] |= 1u64 << b;
            rows[b] |= 1u64 << a;
        }
        Ok(Graph::from_rows(rows))
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, [", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}
