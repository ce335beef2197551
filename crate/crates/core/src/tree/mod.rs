//! Trees: recognition of unit bar visibility trees (UBVTs), branch colors,
//! the optimal decomposition algorithm and layouts.
//!
//! A tree has a one-bar-per-vertex layout exactly when its maximum degree is
//! at most 3 and all of its degree-3 vertices lie on one path, i.e. it is a
//! subdivided caterpillar.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::Error;

mod decompose;
mod draw;

pub use decompose::{unit_bar_tree, Decomposition, DecompositionSource, Part, UnitBarTree};
pub use draw::{decomposition_layout, tree_layout, ubvt_layout};

/// Color of a branch, or of the edge from a processed vertex to its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeColor {
    /// The branch is a path.
    Green,
    /// Has degree-3 vertices, all on one path through the branch's root.
    Yellow,
    /// Has degree-3 vertices, all on one path, and no such path reaches
    /// the branch's root.
    Red,
}

impl EdgeColor {
    pub fn letter(self) -> char {
        match self {
            EdgeColor::Green => 'G',
            EdgeColor::Yellow => 'Y',
            EdgeColor::Red => 'R',
        }
    }
}

/// Multiset of branch colors at a vertex, written as Rs, then Ys, then Gs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColorType {
    pub red: usize,
    pub yellow: usize,
    pub green: usize,
}

impl ColorType {
    pub const fn new(red: usize, yellow: usize, green: usize) -> Self {
        Self { red, yellow, green }
    }

    /// Color-types of UBVTs, most preferred first. This is also the order
    /// in which the decomposition prunes subtrees.
    pub const PRUNE_ORDER: [ColorType; 10] = [
        ColorType::new(1, 0, 1), // RG
        ColorType::new(1, 0, 0), // R
        ColorType::new(0, 2, 1), // YYG
        ColorType::new(0, 2, 0), // YY
        ColorType::new(0, 1, 2), // YGG
        ColorType::new(0, 1, 1), // YG
        ColorType::new(0, 1, 0), // Y
        ColorType::new(0, 0, 3), // GGG
        ColorType::new(0, 0, 2), // GG
        ColorType::new(0, 0, 1), // G
    ];

    pub fn count(&self) -> usize {
        self.red + self.yellow + self.green
    }

    /// Whether a tree with this color-type at some vertex is a UBVT.
    pub fn is_ubvt_type(&self) -> bool {
        Self::PRUNE_ORDER.contains(self)
    }

    pub fn add(&mut self, color: EdgeColor) {
        match color {
            EdgeColor::Green => self.green += 1,
            EdgeColor::Yellow => self.yellow += 1,
            EdgeColor::Red => self.red += 1,
        }
    }
}

impl fmt::Display for ColorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in [(self.red, 'R'), (self.yellow, 'Y'), (self.green, 'G')] {
            for _ in 0..n {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

/// Vertices of the smallest subtree containing every terminal.
///
/// Works on the subgraph induced by `scope`; non-terminal leaves are peeled
/// off until none remain.
fn steiner_core(g: &Graph, scope: &[bool], terminals: &[bool]) -> Vec<bool> {
    let n = g.vertex_count();
    let mut alive = scope.to_vec();
    if !terminals.iter().zip(scope).any(|(&t, &s)| t && s) {
        return vec![false; n];
    }
    let mut deg: Vec<usize> =
        (0..n).map(|v| if alive[v] { g.neighbors(v).iter().filter(|&&w| alive[w]).count() } else { 0 }).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| alive[v] && !terminals[v] && deg[v] <= 1).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 && !terminals[w] {
                    queue.push(w);
                }
            }
        }
    }
    alive
}

fn core_is_path(g: &Graph, core: &[bool]) -> bool {
    (0..g.vertex_count()).filter(|&v| core[v]).all(|v| g.neighbors(v).iter().filter(|&&w| core[w]).count() <= 2)
}

/// Whether a tree is a subdivided caterpillar of maximum degree at most 3.
pub fn is_ubvt(tree: &Graph) -> Result<bool, Error> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(is_ubvt_unchecked(tree))
}

pub(crate) fn is_ubvt_unchecked(tree: &Graph) -> bool {
    let n = tree.vertex_count();
    if tree.max_degree() > 3 {
        return false;
    }
    let terminals: Vec<bool> = (0..n).map(|v| tree.degree(v) == 3).collect();
    let core = steiner_core(tree, &vec![true; n], &terminals);
    core_is_path(tree, &core)
}

/// Color of the branch at `v` that starts with the edge `v - first`.
///
/// `None` if the branch is not a UBVT.
pub fn branch_color(tree: &Graph, v: usize, first: usize) -> Option<EdgeColor> {
    let n = tree.vertex_count();
    let mut scope = vec![false; n];
    scope[v] = true;
    scope[first] = true;
    let mut stack = vec![first];
    while let Some(u) = stack.pop() {
        for &w in tree.neighbors(u) {
            if !scope[w] {
                scope[w] = true;
                stack.push(w);
            }
        }
    }
    let mut terminals = vec![false; n];
    let mut any = false;
    for u in (0..n).filter(|&u| scope[u] && u != v) {
        match tree.degree(u) {
            0..=2 => {}
            3 => {
                terminals[u] = true;
                any = true;
            }
            _ => return None,
        }
    }
    if !any {
        return Some(EdgeColor::Green);
    }
    let mut with_root = terminals.clone();
    with_root[v] = true;
    if core_is_path(tree, &steiner_core(tree, &scope, &with_root)) {
        return Some(EdgeColor::Yellow);
    }
    core_is_path(tree, &steiner_core(tree, &scope, &terminals)).then_some(EdgeColor::Red)
}

/// The color-type of `tree` at `v`, or `None` if some branch at `v` is not
/// a UBVT.
pub fn color_type(tree: &Graph, v: usize) -> Result<Option<ColorType>, Error> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    if v >= tree.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: v, vertex_count: tree.vertex_count() });
    }
    let mut ct = ColorType::default();
    for &w in tree.neighbors(v) {
        match branch_color(tree, v, w) {
            Some(c) => ct.add(c),
            None => return Ok(None),
        }
    }
    Ok(Some(ct))
}

/// Whether the tree has a unit rectangle visibility representation, which
/// for trees holds exactly when `ub(T) <= 2`.
pub fn is_unit_rectangle_tree(tree: &Graph) -> Result<bool, Error> {
    Ok(unit_bar_tree(tree, None)?.ub <= 2)
}

/// A subdivided caterpillar split into a leaf-to-leaf spine and the
/// pendant paths hanging off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Spine {
    pub path: Vec<usize>,
    /// `(spine index, path outward)` for every pendant path.
    pub legs: Vec<(usize, Vec<usize>)>,
}

fn walk(tree: &Graph, from: usize, start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let (mut prev, mut cur) = (from, start);
    while tree.degree(cur) == 2 {
        let next = tree.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree 2");
        out.push(next);
        prev = cur;
        cur = next;
    }
    out
}

pub(crate) fn caterpillar_spine(tree: &Graph) -> Option<Spine> {
    let n = tree.vertex_count();
    if n == 1 {
        return Some(Spine { path: vec![0], legs: Vec::new() });
    }
    if tree.max_degree() > 3 {
        return None;
    }
    let terminals: Vec<bool> = (0..n).map(|v| tree.degree(v) == 3).collect();
    let path = if !terminals.contains(&true) {
        let leaf = (0..n).find(|&v| tree.degree(v) == 1)?;
        let mut p = vec![leaf];
        p.extend(walk(tree, leaf, tree.neighbors(leaf)[0]));
        p
    } else {
        let core = steiner_core(tree, &vec![true; n], &terminals);
        if !core_is_path(tree, &core) {
            return None;
        }
        let core_deg = |v: usize| tree.neighbors(v).iter().filter(|&&w| core[w]).count();
        let first = (0..n).find(|&v| core[v] && core_deg(v) <= 1)?;
        let mut core_path = vec![first];
        let mut prev = usize::MAX;
        let mut cur = first;
        while let Some(&next) = tree.neighbors(cur).iter().find(|&&w| core[w] && w != prev) {
            core_path.push(next);
            prev = cur;
            cur = next;
        }
        let last = cur;
        let mut off_first = tree.neighbors(first).iter().copied().filter(|&w| !core[w]);
        let ext_a = off_first.next()?;
        let ext_b =
            if first == last { off_first.next()? } else { tree.neighbors(last).iter().copied().find(|&w| !core[w])? };
        let mut p = walk(tree, first, ext_a);
        p.reverse();
        p.extend(core_path);
        p.extend(walk(tree, last, ext_b));
        p
    };
    let mut on_spine = vec![false; n];
    for &v in &path {
        on_spine[v] = true;
    }
    let mut legs = Vec::new();
    for (i, &v) in path.iter().enumerate() {
        for &w in tree.neighbors(v) {
            if !on_spine[w] {
                legs.push((i, walk(tree, v, w)));
            }
        }
    }
    Some(Spine { path, legs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use alloc::string::ToString;

    fn g(kind: GraphKind) -> Graph {
        generate(kind).unwrap()
    }

    #[test]
    fn recognizes_ubvts() {
        assert!(is_ubvt(&g(GraphKind::Path(9))).unwrap());
        assert!(!is_ubvt(&g(GraphKind::Star(4))).unwrap());
        assert!(!is_ubvt(&g(GraphKind::YTree)).unwrap());
        assert!(is_ubvt(&g(GraphKind::Spider { legs: 3, leg_len: 2 })).unwrap());
        assert!(is_ubvt(&g(GraphKind::Path(1))).unwrap());
        assert!(is_ubvt(&g(GraphKind::Path(2))).unwrap());
        assert_eq!(is_ubvt(&g(GraphKind::Complete(3))), Err(Error::NotATree));
    }

    #[test]
    fn caterpillar_with_degree_three_spine() {
        // 0-1-2-3-4 with leaves 5 on 1, 6 on 2, 7 on 3.
        let t = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        assert!(is_ubvt(&t).unwrap());
        // Hanging a path of length two off a middle leaf keeps it a caterpillar subdivision.
        let t = Graph::new(9, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6), (3, 7), (6, 8)]).unwrap();
        assert!(is_ubvt(&t).unwrap());
        // Branching at the end of that leg does not.
        let t =
            Graph::new(11, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6), (3, 7), (6, 8), (8, 9), (8, 10)]).unwrap();
        assert!(!is_ubvt(&t).unwrap());
    }

    #[test]
    fn color_types_of_paths_and_spiders() {
        let p5 = g(GraphKind::Path(5));
        assert_eq!(color_type(&p5, 0).unwrap().unwrap().to_string(), "G");
        assert_eq!(color_type(&p5, 2).unwrap().unwrap().to_string(), "GG");
        let spider = g(GraphKind::Spider { legs: 3, leg_len: 2 });
        assert_eq!(color_type(&spider, 0).unwrap().unwrap().to_string(), "GGG");
        // From a leg tip, the single branch has the center on a path through the tip.
        assert_eq!(color_type(&spider, 2).unwrap().unwrap().to_string(), "Y");
    }

    #[test]
    fn red_branch() {
        // The degree-3 vertices 2, 1, 3 form the spine 4-2-1-3-6, and the
        // root 0 hangs off its middle.
        let t = Graph::new(8, [(0, 1), (1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)]).unwrap();
        assert_eq!(branch_color(&t, 0, 1), Some(EdgeColor::Red));
        assert_eq!(color_type(&t, 0).unwrap().unwrap().to_string(), "R");
        let chain = Graph::new(8, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (3, 6), (6, 7)]).unwrap();
        assert_eq!(branch_color(&chain, 0, 1), Some(EdgeColor::Yellow));
        let y = g(GraphKind::YTree);
        let yyy = color_type(&y, 0).unwrap().unwrap();
        assert_eq!(yyy.to_string(), "YYY");
        assert!(!yyy.is_ubvt_type());
        assert_eq!(branch_color(&y, 4, 1), None);
    }

    #[test]
    fn spine_covers_tree() {
        let t = Graph::new(9, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6), (3, 7), (6, 8)]).unwrap();
        let s = caterpillar_spine(&t).unwrap();
        let total = s.path.len() + s.legs.iter().map(|(_, l)| l.len()).sum::<usize>();
        assert_eq!(total, 9);
        assert_eq!(s.path.first().map(|&v| t.degree(v)), Some(1));
        assert_eq!(s.path.last().map(|&v| t.degree(v)), Some(1));
        assert!(caterpillar_spine(&g(GraphKind::YTree)).is_none());
        let single = caterpillar_spine(&g(GraphKind::Spider { legs: 3, leg_len: 2 })).unwrap();
        assert_eq!(single.path.len(), 5);
        assert_eq!(single.legs.len(), 1);
    }

    #[test]
    fn display_order() {
        assert_eq!(ColorType::new(1, 2, 1).to_string(), "RYYG");
        assert_eq!(
            ColorType::PRUNE_ORDER.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
            "RG R YYG YY YGG YG Y GGG GG G"
        );
    }
}
