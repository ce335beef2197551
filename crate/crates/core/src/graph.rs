//! Labeled simple graphs.
//!
//! Vertices are dense ids `0..vertex_count`. Edges are stored once as
//! `(u, v)` with `u < v`, sorted, and mirrored into a compressed adjacency
//! array so neighbor lists come out in increasing order.

use alloc::vec;
use alloc::vec::Vec;

use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adj_start: Vec<usize>,
    adj: Vec<usize>,
}

impl Graph {
    /// Builds a graph, deduplicating edges. Self-loops and out-of-range
    /// endpoints are rejected.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push(if u < v { (u, v) } else { (v, u) });
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(vertex_count, list))
    }

    fn from_sorted(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj_start = vec![0usize; vertex_count + 1];
        for &(u, v) in &edges {
            adj_start[u + 1] += 1;
            adj_start[v + 1] += 1;
        }
        for i in 0..vertex_count {
            adj_start[i + 1] += adj_start[i];
        }
        let mut fill = adj_start.clone();
        let mut adj = vec![0usize; 2 * edges.len()];
        // Edges are sorted by their smaller endpoint, so every list receives
        // its smaller neighbors before its larger ones, each in order.
        for &(u, v) in &edges {
            adj[fill[u]] = v;
            fill[u] += 1;
            adj[fill[v]] = u;
            fill[v] += 1;
        }
        Self { vertex_count, edges, adj_start, adj }
    }

    /// The graph with no vertices.
    pub fn empty() -> Self {
        Self::from_sorted(0, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[self.adj_start[v]..self.adj_start[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj_start[v + 1] - self.adj_start[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.vertex_count || v >= self.vertex_count {
            return false;
        }
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = (0..self.vertex_count).map(|v| self.degree(v)).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeStats { max_degree, degrees }
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count >= 1 && self.edges.len() + 1 == self.vertex_count && self.is_connected()
    }

    /// The subgraph induced by an edge set, relabeled onto `0..k`.
    ///
    /// Returns the subgraph together with the map from its local ids back to
    /// ids of the vertices it was built from. Local ids follow the order in
    /// which vertices first appear in `edges`, after `seed` if one is given.
    pub fn from_edge_subset(edges: &[(usize, usize)], seed: Option<usize>) -> (Graph, Vec<usize>) {
        let mut global = Vec::new();
        let mut local = alloc::collections::BTreeMap::new();
        let mut intern = |v: usize, global: &mut Vec<usize>| -> usize {
            *local.entry(v).or_insert_with(|| {
                global.push(v);
                global.len() - 1
            })
        };
        if let Some(s) = seed {
            intern(s, &mut global);
        }
        let mut local_edges = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let a = intern(u, &mut global);
            let b = intern(v, &mut global);
            local_edges.push((a, b));
        }
        let graph = Graph::new(global.len(), local_edges).expect("local ids are in range");
        (graph, global)
    }
}

/// Labeled equality: same vertex count and the same edge set.
pub fn graphs_equal(g: &Graph, h: &Graph) -> bool {
    g.vertex_count == h.vertex_count && g.edges == h.edges
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub degrees: Vec<usize>,
}

/// Graph families with a canonical vertex numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// Path on `n` vertices, `0 - 1 - ... - (n-1)`.
    Path(usize),
    /// `K_{1,n}`: hub 0 with leaves `1..=n`.
    Star(usize),
    Complete(usize),
    /// `K_{m,n}` with one side `0..m` and the other `m..m+n`.
    CompleteBipartite(usize, usize),
    /// Center 0 with `legs` paths of `leg_len` vertices each; leg `i` is
    /// `1 + i*leg_len .. 1 + (i+1)*leg_len`, ordered outward.
    Spider {
        legs: usize,
        leg_len: usize,
    },
    /// The 10-vertex tree with four degree-3 vertices: center 0 joined to
    /// 1, 2, 3, each of which has two leaf children.
    YTree,
}

pub fn generate(kind: GraphKind) -> Result<Graph, Error> {
    let mut edges = Vec::new();
    let n = match kind {
        GraphKind::Path(n) => {
            if n == 0 {
                return Err(Error::InvalidSize("path needs at least one vertex"));
            }
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        GraphKind::Star(n) => {
            if n == 0 {
                return Err(Error::InvalidSize("star needs at least one leaf"));
            }
            edges.extend((1..=n).map(|i| (0, i)));
            n + 1
        }
        GraphKind::Complete(n) => {
            if n == 0 {
                return Err(Error::InvalidSize("complete graph needs at least one vertex"));
            }
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
            n
        }
        GraphKind::CompleteBipartite(m, n) => {
            if m == 0 || n == 0 {
                return Err(Error::InvalidSize("both sides of K_{m,n} must be nonempty"));
            }
            for y in 0..m {
                edges.extend((m..m + n).map(|x| (y, x)));
            }
            m + n
        }
        GraphKind::Spider { legs, leg_len } => {
            if legs == 0 || leg_len == 0 {
                return Err(Error::InvalidSize("spider needs at least one nonempty leg"));
            }
            for leg in 0..legs {
                let first = 1 + leg * leg_len;
                edges.push((0, first));
                edges.extend((first + 1..first + leg_len).map(|v| (v - 1, v)));
            }
            1 + legs * leg_len
        }
        GraphKind::YTree => {
            edges.extend([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)]);
            10
        }
    };
    Graph::new(n, edges)
}

/// A tree with a chosen root, stored as parent pointers plus a BFS order.
#[derive(Debug, Clone)]
pub struct RootedTree {
    root: usize,
    parent: Vec<usize>,
    order: Vec<usize>,
    child_start: Vec<usize>,
    children: Vec<usize>,
}

impl RootedTree {
    pub const NO_PARENT: usize = usize::MAX;

    pub fn new(tree: &Graph, root: usize) -> Result<Self, Error> {
        let n = tree.vertex_count();
        if root >= n {
            return Err(Error::VertexOutOfRange { vertex: root, vertex_count: n });
        }
        if tree.edge_count() + 1 != n {
            return Err(Error::NotATree);
        }
        let mut parent = vec![Self::NO_PARENT; n];
        let mut order = Vec::with_capacity(n);
        // The root points at itself until the search ends.
        parent[root] = root;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in tree.neighbors(v) {
                if parent[w] == Self::NO_PARENT {
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::NotATree);
        }
        parent[root] = Self::NO_PARENT;
        let mut child_start = vec![0usize; n + 1];
        for v in 0..n {
            child_start[v + 1] = child_start[v] + tree.degree(v) - usize::from(v != root);
        }
        let mut children = Vec::with_capacity(n.saturating_sub(1));
        for (v, &p) in parent.iter().enumerate() {
            children.extend(tree.neighbors(v).iter().copied().filter(|&w| p != w));
        }
        Ok(Self { root, parent, order, child_start, children })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        let p = self.parent[v];
        (p != Self::NO_PARENT).then_some(p)
    }

    /// Children of `v` in increasing order.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[self.child_start[v]..self.child_start[v + 1]]
    }

    /// Vertices in breadth-first order from the root. Reversing it visits
    /// every vertex after all of its descendants.
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }
}
