//! Finite simple graphs: parsing, neighborhoods, connectivity, the twin
//! partition and its size-&gt;=3 filtration, and the relabeling that packs
//! those classes into contiguous index blocks.
//!
//! Vertices are 1-based in every input and output format (files, JSON,
//! reports, error messages) and 0-based in the API and internals.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Simple undirected graph: no loops, no multi-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>, // n*n, symmetric, zero diagonal
}

#[derive(Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Builds a graph from 0-based endpoint pairs. Duplicate edges (in
    /// either orientation) collapse silently; loops are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedInput("graph needs at least one vertex".into()));
        }
        let mut g = Graph { n, adj: vec![false; n * n] };
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::LabelOutOfRange { label: u + 1, n });
            }
            if v >= n {
                return Err(Error::LabelOutOfRange { label: v + 1, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u + 1));
            }
            g.adj[u * n + v] = true;
            g.adj[v * n + u] = true;
        }
        Ok(g)
    }

    /// Parses either the edge-list format (first line `n`, then `u v`
    /// lines) or the JSON document `{"n": .., "edges": [[u,v], ..]}`,
    /// auto-detected by the leading character. Labels are 1-based.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            Self::parse_json(trimmed)
        } else {
            Self::parse_edge_list(text)
        }
    }

    fn parse_json(text: &str) -> Result<Self> {
        let doc: GraphDoc = serde_json::from_str(text)
            .map_err(|e| Error::MalformedInput(format!("bad JSON graph: {e}")))?;
        let edges: Vec<(usize, usize)> = doc
            .edges
            .iter()
            .map(|&[u, v]| Self::check_endpoints(u, v, doc.n))
            .collect::<Result<_>>()?;
        Self::new(doc.n, &edges)
    }

    fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::MalformedInput("empty input".into()))?
            .parse()
            .map_err(|_| Error::MalformedInput("first line must be the vertex count".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut tok = line.split_whitespace();
            let (u, v) = match (tok.next(), tok.next(), tok.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => return Err(Error::MalformedInput(format!("bad edge line {line:?}"))),
            };
            let u: usize = u
                .parse()
                .map_err(|_| Error::MalformedInput(format!("bad vertex label {u:?}")))?;
            let v: usize = v
                .parse()
                .map_err(|_| Error::MalformedInput(format!("bad vertex label {v:?}")))?;
            edges.push(Self::check_endpoints(u, v, n)?);
        }
        Self::new(n, &edges)
    }

    /// 1-based labels in, validated 0-based pair out.
    fn check_endpoints(u: usize, v: usize, n: usize) -> Result<(usize, usize)> {
        for label in [u, v] {
            if label == 0 || label > n {
                return Err(Error::LabelOutOfRange { label, n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        Ok((u - 1, v - 1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Edges as 0-based pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn num_edges(&self) -> usize {
        self.edges().len()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(v, u)).count()
    }

    /// Neighbor set of `v` (0-based), ascending. Never contains `v`.
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        if v >= self.n {
            return Err(Error::LabelOutOfRange { label: v + 1, n: self.n });
        }
        Ok((0..self.n).filter(|&u| self.has_edge(v, u)).collect())
    }

    fn adj_row(&self, v: usize) -> &[bool] {
        &self.adj[v * self.n..(v + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in 0..self.n {
                if self.has_edge(v, u) && !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Adjacency matrix with entries 0/1 in the requested scalar.
    pub fn adjacency_matrix<T: Scalar>(&self) -> Matrix<T> {
        Matrix::from_fn(self.n, self.n, |r, c| {
            if self.has_edge(r, c) {
                T::one()
            } else {
                T::zero()
            }
        })
    }

    /// Groups vertices by equal neighbor sets. Classes are sorted
    /// internally and ordered by smallest member, so the result is
    /// deterministic.
    pub fn twin_partition(&self) -> TwinPartition {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| self.adj_row(a).cmp(self.adj_row(b)));

        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match classes.last_mut() {
                Some(class) if self.adj_row(class[0]) == self.adj_row(v) => class.push(v),
                _ => classes.push(vec![v]),
            }
        }
        for class in &mut classes {
            class.sort_unstable();
        }
        classes.sort_by_key(|class| class[0]);
        TwinPartition { classes }
    }

    /// The graph with every vertex `v` renamed to `perm(v)`.
    pub fn permuted(&self, perm: &VertexPermutation) -> Graph {
        let mut g = Graph { n: self.n, adj: vec![false; self.n * self.n] };
        for (u, v) in self.edges() {
            let (pu, pv) = (perm.apply(u), perm.apply(v));
            g.adj[pu * self.n + pv] = true;
            g.adj[pv * self.n + pu] = true;
        }
        g
    }

    /// Permutation packing each size->=3 twin class into the contiguous
    /// block starting at its offset; all remaining vertices follow in
    /// ascending original order.
    pub fn block_relabeling(&self, g3: &Gamma3) -> VertexPermutation {
        let mut in_class = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        for class in g3.classes() {
            for &v in class {
                in_class[v] = true;
                order.push(v);
            }
        }
        order.extend((0..self.n).filter(|&v| !in_class[v]));

        let mut map = vec![0usize; self.n];
        for (new, &old) in order.iter().enumerate() {
            map[old] = new;
        }
        VertexPermutation { map }
    }

    /// Edge-list document for this graph, 1-based.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    /// Edges as 1-based pairs, for reports.
    pub fn edges_1based(&self) -> Vec<[usize; 2]> {
        self.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect()
    }
}

/// Partition of the vertex set into twin classes (equal neighbor sets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<Vec<usize>>,
}

impl TwinPartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Index of the class containing `v`.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|class| class.binary_search(&v).is_ok())
    }

    /// Are `u` and `v` twins?
    pub fn same_class(&self, u: usize, v: usize) -> bool {
        self.class_of(u).is_some() && self.class_of(u) == self.class_of(v)
    }

    /// Filters down to the classes with at least three vertices,
    /// preserving order, and records their sizes and offsets.
    pub fn gamma3(&self) -> Gamma3 {
        let classes: Vec<Vec<usize>> =
            self.classes.iter().filter(|c| c.len() >= 3).cloned().collect();
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut acc = 0;
        for &a in &sizes {
            offsets.push(acc);
            acc += a;
        }
        Gamma3 { classes, sizes, offsets }
    }

    /// 1-based copy of the classes, for reports.
    pub fn classes_1based(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.iter().map(|v| v + 1).collect()).collect()
    }
}

/// The twin classes with at least three vertices, in partition order,
/// with sizes `a_l` and block offsets `s(l) = a_1 + .. + a_{l-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gamma3 {
    classes: Vec<Vec<usize>>,
    sizes: Vec<usize>,
    offsets: Vec<usize>,
}

impl Gamma3 {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn classes_1based(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(|c| c.iter().map(|v| v + 1).collect()).collect()
    }
}

/// Bijection on vertex indices; `map[old] = new`, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPermutation {
    map: Vec<usize>,
}

impl VertexPermutation {
    pub fn identity(n: usize) -> Self {
        VertexPermutation { map: (0..n).collect() }
    }

    /// Builds from an old-to-new index map; must be a bijection.
    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || seen[v] {
                return Err(Error::MalformedInput("not a permutation".into()));
            }
            seen[v] = true;
        }
        Ok(VertexPermutation { map })
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> VertexPermutation {
        let mut inv = vec![0usize; self.map.len()];
        for (old, &new) in self.map.iter().enumerate() {
            inv[new] = old;
        }
        VertexPermutation { map: inv }
    }

    /// Rewrites a matrix indexed by new labels back into old labels:
    /// `out[i][j] = m[perm(i)][perm(j)]`.
    pub fn pull_back_matrix<T: Scalar>(&self, m: &Matrix<T>) -> Matrix<T> {
        Matrix::from_fn(m.rows(), m.cols(), |i, j| m[(self.apply(i), self.apply(j))].clone())
    }

    /// Rewrites a matrix indexed by old labels into new labels:
    /// `out[perm(i)][perm(j)] = m[i][j]`.
    pub fn push_forward_matrix<T: Scalar>(&self, m: &Matrix<T>) -> Matrix<T> {
        self.inverse().pull_back_matrix(m)
    }

    /// 1-based `old -> new` pairs for reports.
    pub fn map_1based(&self) -> Vec<[usize; 2]> {
        self.map.iter().enumerate().map(|(old, &new)| [old + 1, new + 1]).collect()
    }
}
