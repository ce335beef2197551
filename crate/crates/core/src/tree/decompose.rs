//! Optimal decomposition of a tree into UBVTs.
//!
//! The tree is rooted and processed bottom-up. At each vertex `v` a prune
//! step greedily cuts off UBVTs made of whole child branches, choosing
//! branch-color combinations in the fixed order `RG, R, YYG, YY, YGG, YG, Y,
//! GGG, GG, G`. A color step then classifies what is left below `v` and
//! passes that color up the edge to the parent, or gives up when the rest
//! cannot be part of a single UBVT together with the parent edge.
//!
//! With `k = ⌈Δ/3⌉`, a non-root vertex may prune `k - 1` subtrees and the
//! root `k`. Finishing without giving up proves `ub(T) = k`; otherwise
//! `ub(T) = ⌈(Δ+1)/3⌉` and a second pass with each budget raised by one
//! produces a decomposition of that width. A spider decomposition, in which
//! every vertex appears in at most `⌈(d(v)+1)/3⌉` parts, backs up the second
//! pass.

use alloc::vec;
use alloc::vec::Vec;

use super::{is_ubvt_unchecked, EdgeColor};
use crate::div_ceil;
use crate::graph::{Graph, RootedTree};
use crate::Error;

const NIL: usize = usize::MAX;

/// A connected piece of a decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    /// The vertex at which the piece was cut off; every edge points away
    /// from it.
    pub anchor: usize,
    /// Edges as `(parent, child)` with respect to `anchor`.
    pub edges: Vec<(usize, usize)>,
}

impl Part {
    /// Vertices of the part, anchor first.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = vec![self.anchor];
        out.extend(self.edges.iter().map(|&(_, c)| c));
        out
    }

    /// The part as a graph on local ids, with the map back to tree ids.
    /// The anchor is local vertex 0.
    pub fn to_graph(&self) -> (Graph, Vec<usize>) {
        Graph::from_edge_subset(&self.edges, Some(self.anchor))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<Part>,
    /// Number of parts containing each vertex.
    pub multiplicity: Vec<usize>,
    /// Largest multiplicity.
    pub width: usize,
}

impl Decomposition {
    fn from_parts(vertex_count: usize, parts: Vec<Part>) -> Self {
        let mut multiplicity = vec![0usize; vertex_count];
        for part in &parts {
            multiplicity[part.anchor] += 1;
            for &(_, c) in &part.edges {
                multiplicity[c] += 1;
            }
        }
        let width = multiplicity.iter().copied().max().unwrap_or(0);
        Self { parts, multiplicity, width }
    }

    /// Checks that the parts partition the edges of `tree`, that every part
    /// is a UBVT, and that the recorded multiplicities are right.
    pub fn validate(&self, tree: &Graph) -> Result<(), Error> {
        let n = tree.vertex_count();
        let mut used = alloc::collections::BTreeSet::new();
        let mut multiplicity = vec![0usize; n];
        for part in &self.parts {
            for &(u, v) in &part.edges {
                if !tree.has_edge(u, v) {
                    return Err(Error::InvalidDecomposition("part uses an edge not in the tree"));
                }
                if !used.insert((u.min(v), u.max(v))) {
                    return Err(Error::InvalidDecomposition("edge used by two parts"));
                }
            }
            let (g, global) = part.to_graph();
            if !g.is_tree() {
                return Err(Error::InvalidDecomposition("part is not connected"));
            }
            if !is_ubvt_unchecked(&g) {
                return Err(Error::InvalidDecomposition("part is not a UBVT"));
            }
            for v in global {
                multiplicity[v] += 1;
            }
        }
        if used.len() != tree.edge_count() {
            return Err(Error::InvalidDecomposition("some edge is in no part"));
        }
        if multiplicity.contains(&0) {
            return Err(Error::InvalidDecomposition("some vertex is in no part"));
        }
        if multiplicity != self.multiplicity || self.width != multiplicity.iter().copied().max().unwrap_or(0) {
            return Err(Error::InvalidDecomposition("multiplicities do not match the parts"));
        }
        Ok(())
    }
}

/// Which procedure produced the decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionSource {
    /// The first greedy pass finished; `ub = ⌈Δ/3⌉`.
    Greedy,
    /// The first pass gave up and the widened pass succeeded.
    Widened,
    /// The first pass gave up and the spider decomposition was used.
    Spider,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitBarTree {
    pub ub: usize,
    pub max_degree: usize,
    pub decomposition: Decomposition,
    pub source: DecompositionSource,
}

impl UnitBarTree {
    /// `⌈Δ/3⌉`, the lower bound.
    pub fn lower_bound(&self) -> usize {
        div_ceil(self.max_degree, 3).max(1)
    }

    /// `⌈(Δ+1)/3⌉`, the upper bound.
    pub fn upper_bound(&self) -> usize {
        div_ceil(self.max_degree + 1, 3)
    }
}

/// Computes `ub(T)` and a decomposition of `T` into UBVTs of that width.
///
/// `root` defaults to vertex 0. The value does not depend on the root.
pub fn unit_bar_tree(tree: &Graph, root: Option<usize>) -> Result<UnitBarTree, Error> {
    let rooted = RootedTree::new(tree, root.unwrap_or(0))?;
    let n = tree.vertex_count();
    let max_degree = tree.max_degree();
    if n == 1 {
        let decomposition = Decomposition::from_parts(1, vec![Part { anchor: 0, edges: Vec::new() }]);
        return Ok(UnitBarTree { ub: 1, max_degree, decomposition, source: DecompositionSource::Greedy });
    }
    let k = div_ceil(max_degree, 3);
    if let Ok(pass) = greedy_pass(&rooted, k - 1, k) {
        let decomposition = Decomposition::from_parts(n, pass.parts);
        return Ok(UnitBarTree { ub: k, max_degree, decomposition, source: DecompositionSource::Greedy });
    }
    let ub = div_ceil(max_degree + 1, 3);
    if let Ok(pass) = greedy_pass(&rooted, k, k + 1) {
        let decomposition = Decomposition::from_parts(n, pass.parts);
        if decomposition.width <= ub {
            return Ok(UnitBarTree { ub, max_degree, decomposition, source: DecompositionSource::Widened });
        }
    }
    let decomposition = Decomposition::from_parts(n, spider_parts(&rooted));
    Ok(UnitBarTree { ub, max_degree, decomposition, source: DecompositionSource::Spider })
}

pub(crate) struct Pass {
    pub parts: Vec<Part>,
    /// Color given to the edge above each non-root vertex.
    #[cfg_attr(not(test), allow(dead_code))]
    pub colors: Vec<Option<EdgeColor>>,
}

/// Index of the first prune pattern available with `(r, y, g)` children
/// left, as counts of red, yellow and green children to take.
fn pick(r: usize, y: usize, g: usize) -> Option<(usize, usize, usize)> {
    let take = if r >= 1 && g >= 1 {
        (1, 0, 1)
    } else if r >= 1 {
        (1, 0, 0)
    } else if y >= 2 && g >= 1 {
        (0, 2, 1)
    } else if y >= 2 {
        (0, 2, 0)
    } else if y >= 1 && g >= 2 {
        (0, 1, 2)
    } else if y >= 1 && g >= 1 {
        (0, 1, 1)
    } else if y >= 1 {
        (0, 1, 0)
    } else if g >= 3 {
        (0, 0, 3)
    } else if g >= 2 {
        (0, 0, 2)
    } else if g >= 1 {
        (0, 0, 1)
    } else {
        return None;
    };
    Some(take)
}

/// Color of the parent edge given the children left after pruning, or
/// `None` when the vertex must give up.
fn color(r: usize, y: usize, g: usize) -> Option<EdgeColor> {
    match (r, y, g) {
        (0, 0, 0) | (0, 0, 1) => Some(EdgeColor::Green),
        (0, 0, 2) | (0, 1, 0) | (0, 1, 1) => Some(EdgeColor::Yellow),
        (0, 2, 0) | (1, 0, 0) => Some(EdgeColor::Red),
        _ => None,
    }
}

#[derive(Clone, Copy)]
struct List {
    next: usize,
    head: usize,
    tail: usize,
    len: usize,
}

/// One bottom-up pass. `Err(v)` names the vertex that gave up.
pub(crate) fn greedy_pass(tree: &RootedTree, nonroot_budget: usize, root_budget: usize) -> Result<Pass, usize> {
    let n = tree.vertex_count();
    let root = tree.root();
    // The edge above vertex c is represented by c. Each vertex keeps the
    // edges still hanging below it as a linked list through `next`, with its
    // length kept alongside.
    let mut lists = vec![List { next: NIL, head: NIL, tail: NIL, len: 0 }; n];
    let mut colors: Vec<Option<EdgeColor>> = vec![None; n];
    let mut parts = Vec::new();
    let (mut reds, mut yellows, mut greens) = (Vec::new(), Vec::new(), Vec::new());

    for &v in tree.bfs_order().iter().rev() {
        reds.clear();
        yellows.clear();
        greens.clear();
        for &c in tree.children(v) {
            match colors[c].expect("children are colored before their parent") {
                EdgeColor::Red => reds.push(c),
                EdgeColor::Yellow => yellows.push(c),
                EdgeColor::Green => greens.push(c),
            }
        }
        // Close each child's segment: the edge above c followed by its list.
        for &c in tree.children(v) {
            lists[c].next = lists[c].head;
            if lists[c].head == NIL {
                lists[c].tail = c;
            }
            lists[c].head = c;
            lists[c].len += 1;
        }

        let budget = if v == root { root_budget } else { nonroot_budget };
        let (mut ri, mut yi, mut gi) = (0, 0, 0);
        let mut pruned = 0;
        while pruned < budget {
            let Some((tr, ty, tg)) = pick(reds.len() - ri, yellows.len() - yi, greens.len() - gi) else {
                break;
            };
            let taken = || reds[ri..ri + tr].iter().chain(&yellows[yi..yi + ty]).chain(&greens[gi..gi + tg]);
            let mut edges = Vec::with_capacity(taken().map(|&c| lists[c].len).sum());
            for &c in taken() {
                let mut e = lists[c].head;
                while e != NIL {
                    edges.push((tree.parent(e).expect("non-root"), e));
                    e = lists[e].next;
                }
            }
            parts.push(Part { anchor: v, edges });
            ri += tr;
            yi += ty;
            gi += tg;
            pruned += 1;
        }

        let (r, y, g) = (reds.len() - ri, yellows.len() - yi, greens.len() - gi);
        if v == root {
            if r + y + g > 0 {
                return Err(v);
            }
            continue;
        }
        colors[v] = Some(color(r, y, g).ok_or(v)?);
        for &c in reds[ri..].iter().chain(&yellows[yi..]).chain(&greens[gi..]) {
            if lists[v].head == NIL {
                lists[v].head = lists[c].head;
            } else {
                let t = lists[v].tail;
                lists[t].next = lists[c].head;
            }
            lists[v].tail = lists[c].tail;
            lists[v].len += lists[c].len;
        }
    }
    Ok(Pass { parts, colors })
}

/// Spiders hanging from each vertex: a non-root vertex extends the leg it
/// was reached by with one child and starts a new spider for every three
/// further children; the root starts one for every three children.
fn spider_parts(tree: &RootedTree) -> Vec<Part> {
    let n = tree.vertex_count();
    let mut part_of = vec![NIL; n];
    let mut parts: Vec<Part> = Vec::new();
    for &v in tree.bfs_order() {
        let mut kids = tree.children(v);
        if v != tree.root() {
            if let Some((&c, rest)) = kids.split_first() {
                let p = part_of[v];
                parts[p].edges.push((v, c));
                part_of[c] = p;
                kids = rest;
            }
        }
        for chunk in kids.chunks(3) {
            let p = parts.len();
            parts.push(Part { anchor: v, edges: chunk.iter().map(|&c| (v, c)).collect() });
            for &c in chunk {
                part_of[c] = p;
            }
        }
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use crate::tree::{branch_color, color_type};

    fn ub(kind: GraphKind) -> UnitBarTree {
        let t = generate(kind).unwrap();
        let res = unit_bar_tree(&t, None).unwrap();
        res.decomposition.validate(&t).unwrap();
        assert_eq!(res.decomposition.width, res.ub);
        res
    }

    #[test]
    fn paths_have_one_part() {
        let r = ub(GraphKind::Path(10));
        assert_eq!(r.ub, 1);
        assert_eq!(r.decomposition.parts.len(), 1);
    }

    #[test]
    fn stars() {
        assert_eq!(ub(GraphKind::Star(4)).ub, 2);
        assert_eq!(ub(GraphKind::Star(6)).ub, 2);
        assert_eq!(ub(GraphKind::Star(7)).ub, 3);
        assert_eq!(ub(GraphKind::Star(3)).ub, 1);
    }

    #[test]
    fn y_tree_and_spider() {
        let y = ub(GraphKind::YTree);
        assert_eq!(y.ub, 2);
        assert_ne!(y.source, DecompositionSource::Greedy);
        assert_eq!(ub(GraphKind::Spider { legs: 3, leg_len: 2 }).ub, 1);
    }

    #[test]
    fn trivial_trees() {
        let k1 = ub(GraphKind::Path(1));
        assert_eq!(k1.ub, 1);
        assert_eq!(k1.decomposition.parts.len(), 1);
        assert_eq!(ub(GraphKind::Path(2)).ub, 1);
    }

    #[test]
    fn rejects_non_trees() {
        let k3 = generate(GraphKind::Complete(3)).unwrap();
        assert_eq!(unit_bar_tree(&k3, None).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn prune_patterns_are_ubvt_types() {
        for (i, ct) in super::super::ColorType::PRUNE_ORDER.iter().enumerate() {
            assert_eq!(pick(ct.red, ct.yellow, ct.green), Some((ct.red, ct.yellow, ct.green)), "{i}");
        }
        // Preference only looks at what is available.
        assert_eq!(pick(2, 3, 4), Some((1, 0, 1)));
        assert_eq!(pick(0, 1, 5), Some((0, 1, 2)));
        assert_eq!(pick(0, 0, 0), None);
    }

    #[test]
    fn color_table() {
        assert_eq!(color(0, 0, 0), Some(EdgeColor::Green));
        assert_eq!(color(0, 0, 1), Some(EdgeColor::Green));
        assert_eq!(color(0, 0, 2), Some(EdgeColor::Yellow));
        assert_eq!(color(0, 1, 1), Some(EdgeColor::Yellow));
        assert_eq!(color(0, 2, 0), Some(EdgeColor::Red));
        assert_eq!(color(1, 0, 0), Some(EdgeColor::Red));
        assert_eq!(color(0, 0, 3), None);
        assert_eq!(color(2, 0, 0), None);
        assert_eq!(color(1, 1, 0), None);
        assert_eq!(color(1, 0, 1), None);
    }

    #[test]
    fn pruned_parts_have_preferred_types() {
        let t =
            Graph::new(12, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (5, 7), (5, 8), (2, 9), (9, 10), (3, 11)])
                .unwrap();
        let r = unit_bar_tree(&t, None).unwrap();
        r.decomposition.validate(&t).unwrap();
        for part in &r.decomposition.parts {
            let (g, _) = part.to_graph();
            let ct = color_type(&g, 0).unwrap().unwrap();
            assert!(ct.is_ubvt_type(), "{ct}");
        }
    }

    /// The color passed up an edge equals the color of the branch formed by
    /// that edge and what was left below it.
    #[test]
    fn edge_colors_match_branch_colors() {
        let t = Graph::new(
            14,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (2, 4),
                (4, 5),
                (4, 6),
                (1, 7),
                (7, 8),
                (7, 9),
                (9, 10),
                (9, 11),
                (0, 12),
                (12, 13),
            ],
        )
        .unwrap();
        let rooted = RootedTree::new(&t, 0).unwrap();
        let pass = greedy_pass(&rooted, 0, 1).unwrap_or_else(|_| greedy_pass(&rooted, 1, 2).unwrap());
        let mut anchor = vec![NIL; t.vertex_count()];
        for part in &pass.parts {
            for &(_, c) in &part.edges {
                anchor[c] = part.anchor;
            }
        }
        let below_or_at = |mut a: usize, v: usize| loop {
            if a == v {
                return true;
            }
            match rooted.parent(a) {
                Some(p) => a = p,
                None => return false,
            }
        };
        for v in 1..t.vertex_count() {
            let Some(c) = pass.colors[v] else { continue };
            // Edges cut off before v was colored hang from parts anchored in v's subtree.
            let pruned: alloc::collections::BTreeSet<usize> =
                (0..t.vertex_count()).filter(|&w| anchor[w] != NIL && below_or_at(anchor[w], v)).collect();
            // Remaining subtree below v plus the edge to its parent.
            let p = rooted.parent(v).unwrap();
            let mut edges = vec![(p, v)];
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                for &w in rooted.children(u) {
                    if !pruned.contains(&w) {
                        edges.push((u, w));
                        stack.push(w);
                    }
                }
            }
            let (g, global) = Graph::from_edge_subset(&edges, Some(p));
            assert_eq!(global[1], v);
            assert_eq!(branch_color(&g, 0, 1), Some(c), "vertex {v}");
        }
    }

    #[test]
    fn spider_fallback_width() {
        for kind in [GraphKind::Star(7), GraphKind::YTree, GraphKind::Path(6)] {
            let t = generate(kind).unwrap();
            let rooted = RootedTree::new(&t, 0).unwrap();
            let d = Decomposition::from_parts(t.vertex_count(), spider_parts(&rooted));
            d.validate(&t).unwrap();
            assert!(d.width <= div_ceil(t.max_degree() + 1, 3));
        }
    }
}
