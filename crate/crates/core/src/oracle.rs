//! Brute-force references.
//!
//! Nothing here shares code with the sweep or the tree algorithm it checks:
//! visibilities are recomputed pair by pair on integer coordinates, and the
//! tree value comes from an exhaustive search over edge partitions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::graph::{Graph, RootedTree};
use crate::layout::Layout;
use crate::tree::is_ubvt;
use crate::{div_ceil, Error};

/// Largest tree [`brute_ub_tree`] accepts, in edges.
pub const BRUTE_TREE_MAX_EDGES: usize = 13;

/// Bars as `(left, right, y)` on a common integer grid.
fn integer_bars(layout: &Layout) -> Result<Vec<(i128, i128, i128)>, Error> {
    let mut scale: i128 = 1;
    for bar in &layout.bars {
        for v in [bar.x, bar.y] {
            scale = scale.lcm(&i128::from(*v.denom()));
            if scale > i128::from(i64::MAX) {
                return Err(Error::CoordinateOverflow);
            }
        }
    }
    let lift = |v: crate::Rational| -> Result<i128, Error> {
        i128::from(*v.numer()).checked_mul(scale / i128::from(*v.denom())).ok_or(Error::CoordinateOverflow)
    };
    layout
        .bars
        .iter()
        .map(|b| {
            let x = lift(b.x)?;
            Ok((x, x.checked_add(scale).ok_or(Error::CoordinateOverflow)?, lift(b.y)?))
        })
        .collect()
}

/// Visible bar pairs `(a, b)`, `a < b`, found by testing every pair directly.
///
/// For a pair at different heights with overlapping projections, the
/// endpoints of all bars cut the overlap into elementary open intervals; the
/// pair sees each other if some interval is covered by no bar strictly
/// between them.
pub fn brute_visibilities(layout: &Layout) -> Result<BTreeSet<(usize, usize)>, Error> {
    let bars = integer_bars(layout)?;
    for (a, p) in bars.iter().enumerate() {
        for (b, q) in bars.iter().enumerate().skip(a + 1) {
            if p.2 == q.2 && p.0 < q.1 && q.0 < p.1 {
                return Err(Error::IntersectingBars { first: a, second: b });
            }
        }
    }
    let mut cuts: Vec<i128> = bars.iter().flat_map(|b| [b.0, b.1]).collect();
    cuts.sort_unstable();
    cuts.dedup();

    let mut out = BTreeSet::new();
    for (a, p) in bars.iter().enumerate() {
        for (b, q) in bars.iter().enumerate().skip(a + 1) {
            if p.2 == q.2 {
                continue;
            }
            let (lo, hi) = (p.0.max(q.0), p.1.min(q.1));
            if lo >= hi {
                continue;
            }
            let (y_lo, y_hi) = (p.2.min(q.2), p.2.max(q.2));
            let mut points = vec![lo];
            points.extend(cuts.iter().copied().filter(|&c| lo < c && c < hi));
            points.push(hi);
            let open =
                points.windows(2).any(|w| !bars.iter().any(|c| y_lo < c.2 && c.2 < y_hi && c.0 <= w[0] && w[1] <= c.1));
            if open {
                out.insert((a, b));
            }
        }
    }
    Ok(out)
}

/// `ub(T)` by exhaustive search over partitions of the edges into connected
/// UBVT parts.
///
/// Edges are taken in breadth-first order, so each edge's upper endpoint is
/// already placed. An edge either joins a part containing that endpoint or
/// opens a new part; parts that stop being UBVTs are abandoned, since adding
/// edges cannot repair them.
pub fn brute_ub_tree(tree: &Graph) -> Result<usize, Error> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    if tree.edge_count() > BRUTE_TREE_MAX_EDGES {
        return Err(Error::TooLarge { size: tree.edge_count(), limit: BRUTE_TREE_MAX_EDGES });
    }
    if tree.edge_count() == 0 {
        return Ok(1);
    }
    let rooted = RootedTree::new(tree, 0)?;
    let edges: Vec<(usize, usize)> =
        rooted.bfs_order()[1..].iter().map(|&c| (rooted.parent(c).expect("non-root"), c)).collect();
    let delta = tree.max_degree();
    let lower = div_ceil(delta, 3).max(1);
    let upper = div_ceil(delta + 1, 3).max(1);
    for k in lower..=upper {
        let mut search = Search { edges: &edges, k, parts: Vec::new(), count: vec![0; tree.vertex_count()] };
        if search.run(0) {
            return Ok(k);
        }
    }
    // Not reached for trees: the star decomposition always fits the upper
    // bound. Keep searching rather than assume it.
    let mut k = upper + 1;
    loop {
        let mut search = Search { edges: &edges, k, parts: Vec::new(), count: vec![0; tree.vertex_count()] };
        if search.run(0) {
            return Ok(k);
        }
        k += 1;
    }
}

/// Edges and vertex set of a part.
type OpenPart = (Vec<(usize, usize)>, BTreeSet<usize>);

struct Search<'a> {
    edges: &'a [(usize, usize)],
    k: usize,
    /// Edges and vertex set of each open part.
    parts: Vec<OpenPart>,
    /// Number of parts containing each vertex.
    count: Vec<usize>,
}

impl Search<'_> {
    fn part_ok(edges: &[(usize, usize)]) -> bool {
        let (g, _) = Graph::from_edge_subset(edges, None);
        is_ubvt(&g).unwrap_or(false)
    }

    fn run(&mut self, i: usize) -> bool {
        let Some(&(p, c)) = self.edges.get(i) else { return true };
        for part in 0..self.parts.len() {
            if !self.parts[part].1.contains(&p) || self.count[c] >= self.k {
                continue;
            }
            self.parts[part].0.push((p, c));
            if Self::part_ok(&self.parts[part].0) {
                self.parts[part].1.insert(c);
                self.count[c] += 1;
                if self.run(i + 1) {
                    return true;
                }
                self.count[c] -= 1;
                self.parts[part].1.remove(&c);
            }
            self.parts[part].0.pop();
        }
        if self.count[p] < self.k && self.count[c] < self.k {
            self.count[p] += 1;
            self.count[c] += 1;
            self.parts.push((vec![(p, c)], [p, c].into_iter().collect()));
            if self.run(i + 1) {
                return true;
            }
            self.parts.pop();
            self.count[p] -= 1;
            self.count[c] -= 1;
        }
        false
    }
}

/// Largest order [`enumerate_trees`] accepts.
pub const ENUMERATE_MAX_VERTICES: usize = 10;

/// Stream of trees on `0..n`.
#[derive(Debug, Clone)]
pub struct TreeEnumeration {
    inner: Inner,
}

#[derive(Debug, Clone)]
enum Inner {
    /// Odometer over Prüfer sequences; `None` once exhausted.
    Labeled {
        n: usize,
        seq: Option<Vec<usize>>,
    },
    Unlabeled(vec::IntoIter<Graph>),
}

impl Iterator for TreeEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match &mut self.inner {
            Inner::Unlabeled(it) => it.next(),
            Inner::Labeled { n, seq } => {
                let current = seq.as_mut()?;
                let tree = prufer_decode(*n, current);
                let mut pos = current.len();
                loop {
                    if pos == 0 {
                        *seq = None;
                        break;
                    }
                    pos -= 1;
                    current[pos] += 1;
                    if current[pos] < *n {
                        break;
                    }
                    current[pos] = 0;
                }
                Some(tree)
            }
        }
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    if n == 1 {
        return Graph::new(1, []).expect("K_1");
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a tree")
}

/// All trees on `n` vertices: every labeled tree, or one representative per
/// isomorphism class.
pub fn enumerate_trees(n: usize, labeled: bool) -> Result<TreeEnumeration, Error> {
    if n == 0 || n > ENUMERATE_MAX_VERTICES {
        return Err(Error::InvalidSize("tree enumeration supports 1 to 10 vertices"));
    }
    let inner = if labeled {
        Inner::Labeled { n, seq: Some(vec![0; n.saturating_sub(2)]) }
    } else {
        Inner::Unlabeled(free_trees(n).into_iter())
    };
    Ok(TreeEnumeration { inner })
}

/// Rooted trees as level sequences in the order of successive
/// canonical-sequence updates, deduplicated by a center-rooted canonical
/// string.
fn free_trees(n: usize) -> Vec<Graph> {
    let mut levels: Vec<usize> = (0..n).collect();
    let mut seen: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    loop {
        let g = from_levels(&levels);
        seen.entry(canonical(&g)).or_insert(g);
        let Some(p) = (0..n).rev().find(|&i| levels[i] > 1) else { break };
        let q = (0..p).rev().find(|&i| levels[i] == levels[p] - 1).expect("parent level exists");
        for i in p..n {
            levels[i] = levels[i - (p - q)];
        }
    }
    seen.into_values().collect()
}

fn from_levels(levels: &[usize]) -> Graph {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::new();
    for (v, &l) in levels.iter().enumerate() {
        stack.truncate(l);
        if let Some(&parent) = stack.last() {
            edges.push((parent, v));
        }
        stack.push(v);
    }
    Graph::new(levels.len(), edges).expect("level sequence is a tree")
}

fn encode(g: &Graph, v: usize, parent: usize) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = g.neighbors(v).iter().filter(|&&w| w != parent).map(|&w| encode(g, w, v)).collect();
    kids.sort_unstable();
    let mut out = vec![b'('];
    for k in kids {
        out.extend(k);
    }
    out.push(b')');
    out
}

/// Isomorphism-invariant string of a tree: the smaller encoding over its
/// one or two centers.
fn canonical(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| encode(g, c, usize::MAX)).min().expect("a center exists")
}
