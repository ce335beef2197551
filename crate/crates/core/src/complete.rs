//! Layouts of complete graphs.
//!
//! `K_{6m}` splits into three classes `V_1, V_2, V_3` of `2m` vertices. Each
//! `K_{2m}` on a class decomposes into `m` zigzag Hamiltonian paths, and
//! joining path `j` of `V_i` with two vertices of the previous class gives a
//! copy `H_{i,j}` of `P_{2m} ∨ 2K_1`. Every edge of `K_{6m}` lies in exactly
//! one copy and every vertex in `m + 1` copies, so stacking one-bar layouts
//! of the `3m` copies gives an `(m+1)`-unit-bar layout of `K_{6m}`.
//!
//! The copies are staggered so that a single bar above the stack sees every
//! copy's top and second-lowest bars, and a single bar below sees every
//! copy's bottom and second-highest bars. Those two bars plus one more go to
//! two extra vertices, which yields `K_{6m+2}` with `m + 1` bars per vertex.
//!
//! Vertex `v_a` of class `V_i` (both 0-based) has id `2m·i + a`; the two
//! extra vertices are `6m` (top) and `6m + 1` (bottom).

use alloc::vec;
use alloc::vec::Vec;

use crate::div_ceil;
use crate::layout::{int, rat, Layout, Rational};
use crate::Error;

/// The `m` zigzag paths decomposing `K_{2m}`.
///
/// Path `k` visits `k, k+1, k-1, k+2, k-2, …, k+m` modulo `2m`; its ends are
/// `k` and `k + m`.
pub fn zigzag_paths(two_m: usize) -> Result<Vec<Vec<usize>>, Error> {
    if two_m == 0 || two_m % 2 == 1 {
        return Err(Error::InvalidSize("zigzag paths need a positive even order"));
    }
    let m = two_m / 2;
    Ok((0..m)
        .map(|k| {
            let mut path = vec![k];
            for t in 1..m {
                path.push((k + t) % two_m);
                path.push((k + two_m - t) % two_m);
            }
            path.push((k + m) % two_m);
            path
        })
        .collect())
}

/// One copy of `P_{2m} ∨ 2K_1`: a path listed bottom to top and the two
/// vertices joined to all of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSpec {
    pub m: usize,
    pub path: Vec<usize>,
    /// Joined vertex drawn below the path.
    pub bottom: usize,
    /// Joined vertex drawn above the path.
    pub top: usize,
}

impl BlockSpec {
    pub fn new(path: Vec<usize>, bottom: usize, top: usize) -> Result<Self, Error> {
        if path.is_empty() || path.len() % 2 == 1 {
            return Err(Error::InvalidSize("block path needs a positive even number of vertices"));
        }
        let mut all = path.clone();
        all.extend([bottom, top]);
        all.sort_unstable();
        all.dedup();
        if all.len() != path.len() + 2 {
            return Err(Error::InvalidSize("block vertices must be distinct"));
        }
        Ok(Self { m: path.len() / 2, path, bottom, top })
    }
}

/// One-bar layout of a block, shifted by `(x_offset, y_offset)`.
///
/// With `δ = 1/(6m)`, path bar `k` (0-based) starts at `kδ` on row `k + 1`,
/// the bottom vertex starts at `(2m-1)δ - δ/2` on row 0 and the top vertex at
/// `δ/2` on row `2m + 1`. The first path bar thus sticks out `δ/2` to the
/// left of the top bar and the last path bar `δ/2` to the right of the
/// bottom bar.
pub fn block_layout(spec: &BlockSpec, y_offset: Rational, x_offset: Rational) -> Layout {
    let m = spec.m as i64;
    let delta = rat(1, 6 * m);
    let half = rat(1, 12 * m);
    let mut layout = Layout::default();
    layout.push(spec.bottom, x_offset + delta * int(2 * m - 1) - half, y_offset);
    for (k, &v) in spec.path.iter().enumerate() {
        layout.push(v, x_offset + delta * int(k as i64), y_offset + int(k as i64 + 1));
    }
    layout.push(spec.top, x_offset + half, y_offset + int(2 * m + 1));
    layout
}

fn blocks(m: usize) -> Vec<BlockSpec> {
    let paths = zigzag_paths(2 * m).expect("2m is even");
    let id = |class: usize, a: usize| 2 * m * class + a;
    let mut out = Vec::with_capacity(3 * m);
    for class in 0..3 {
        let prev = (class + 2) % 3;
        for (j, path) in paths.iter().enumerate() {
            out.push(BlockSpec {
                m,
                path: path.iter().map(|&a| id(class, a)).collect(),
                bottom: id(prev, j),
                top: id(prev, m + j),
            });
        }
    }
    out
}

/// Blocks stacked in order `H_{1,1}, …, H_{1,m}, H_{2,1}, …, H_{3,m}`, each
/// shifted right by `δ` from the previous one.
fn stack(m: usize) -> Layout {
    let delta = rat(1, 6 * m as i64);
    let height = 2 * m as i64 + 3;
    let mut layout = Layout::default();
    for (b, spec) in blocks(m).iter().enumerate() {
        let piece = block_layout(spec, int(b as i64 * height), delta * int(b as i64));
        layout.bars.extend(piece.bars);
    }
    layout
}

/// An `(m+1)`-unit-bar layout of `K_{6m}`.
pub fn construct_k6m(m: usize) -> Result<Layout, Error> {
    if m == 0 {
        return Err(Error::InvalidSize("m must be positive"));
    }
    Ok(stack(m))
}

/// An `(m+1)`-unit-bar layout of `K_{6m+2}`.
fn construct_k6m2(m: usize) -> Layout {
    let mut layout = stack(m);
    let top_vertex = 6 * m;
    let bottom_vertex = 6 * m + 1;
    let mi = m as i64;
    let half = rat(1, 12 * mi);
    let first_bottom = rat(2 * mi - 1, 6 * mi) - half;
    let top_y = int(3 * mi * (2 * mi + 3));
    layout.push(top_vertex, int(0), top_y);
    let x = first_bottom + int(1) - half;
    layout.push(bottom_vertex, x, int(-1));
    layout.push(top_vertex, x, int(-2));
    layout
}

/// A layout of `K_n` with at most `⌈(n+4)/6⌉` bars per vertex, and exactly
/// `⌈n/6⌉` when `n ≡ 1, 2 (mod 6)`.
///
/// Built from `K_{6m+2}` for the smallest suitable `m` by deleting the bars
/// of the highest-numbered class vertices and relabeling.
pub fn construct_kn(n: usize) -> Result<Layout, Error> {
    match n {
        0 => return Err(Error::InvalidSize("K_n needs at least one vertex")),
        1 => return Ok(Layout::new(vec![crate::Bar::new(0, int(0), int(0))])),
        2 => return Ok(Layout::new(vec![crate::Bar::new(0, int(0), int(0)), crate::Bar::new(1, int(0), int(1))])),
        _ => {}
    }
    let m = if matches!(n % 6, 1 | 2) { div_ceil(n - 2, 6).max(1) } else { div_ceil(n, 6) };
    let full = construct_k6m2(m);
    let surplus = 6 * m + 2 - n;
    // Class vertices 6m - surplus .. 6m go away; the two extra vertices
    // move down to close the gap.
    let cut = 6 * m - surplus;
    let bars = full
        .bars
        .into_iter()
        .filter(|b| b.vertex < cut || b.vertex >= 6 * m)
        .map(|mut b| {
            if b.vertex >= 6 * m {
                b.vertex -= surplus;
            }
            b
        })
        .collect();
    Ok(Layout::new(bars))
}

/// `(⌈n/6⌉, ⌈(n+4)/6⌉)`, which agree exactly when `n ≡ 1, 2 (mod 6)`.
pub fn bounds_kn(n: usize) -> Result<(usize, usize), Error> {
    if n == 0 {
        return Err(Error::InvalidSize("K_n needs at least one vertex"));
    }
    Ok((div_ceil(n, 6), div_ceil(n + 4, 6)))
}
