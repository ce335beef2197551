//! Layouts of UBVTs and of arbitrary trees.
//!
//! A UBVT is drawn around a leaf-to-leaf spine holding every degree-3
//! vertex. Spine bar `i` starts at `x = i/2` and alternates between rows 0
//! and 1, so consecutive spine bars overlap by one half and bars two apart
//! sit end to end on the same row. A pendant path at an even spine index
//! hangs below its spine bar as an aligned stack; at an odd index it rises
//! above. The spine bar shields its stack from everything else.

use super::{caterpillar_spine, unit_bar_tree, Decomposition};
use crate::graph::Graph;
use crate::layout::{int, rat, Layout};
use crate::Error;

/// A one-bar-per-vertex layout of a UBVT.
pub fn ubvt_layout(tree: &Graph) -> Result<Layout, Error> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let spine = caterpillar_spine(tree).ok_or(Error::NotUbvt)?;
    let mut layout = Layout::default();
    for (i, &v) in spine.path.iter().enumerate() {
        layout.push(v, rat(i as i64, 2), int((i % 2) as i64));
    }
    for (i, leg) in &spine.legs {
        let x = rat(*i as i64, 2);
        for (depth, &v) in leg.iter().enumerate() {
            let d = depth as i64 + 1;
            let y = if i % 2 == 0 { -d } else { 1 + d };
            layout.push(v, x, int(y));
        }
    }
    Ok(layout)
}

/// A layout of any tree using `ub(T)` bars for its busiest vertex: the
/// parts of an optimal decomposition are drawn side by side.
pub fn tree_layout(tree: &Graph) -> Result<Layout, Error> {
    decomposition_layout(&unit_bar_tree(tree, None)?.decomposition)
}

/// Draws every part of `decomposition` with [`ubvt_layout`], left to right.
/// A vertex gets one bar per part containing it.
pub fn decomposition_layout(decomposition: &Decomposition) -> Result<Layout, Error> {
    let mut layout = Layout::default();
    let mut cursor = int(0);
    for part in &decomposition.parts {
        let (g, global) = part.to_graph();
        let mut piece = ubvt_layout(&g)?;
        // Same placement as `disjoint_union`, without copying the prefix.
        let (lo, hi) = (piece.min_x().unwrap_or(cursor), piece.max_x().unwrap_or(cursor));
        piece.translate(cursor - lo, int(0));
        cursor += hi - lo + int(2);
        layout.bars.extend(piece.bars.into_iter().map(|mut bar| {
            bar.vertex = global[bar.vertex];
            bar
        }));
    }
    Ok(layout)
}
