//! Layouts of complete bipartite graphs `K_{m,n}`.
//!
//! Vertex ids follow [`GraphKind::CompleteBipartite`](crate::GraphKind):
//! `y_i` is vertex `i` for `i < m` and `x_i` is vertex `m + i` for `i < n`,
//! both 0-based.
//!
//! All constructions stack long horizontal segments, each cut into
//! contiguous unit bars, alternately assigned to `Y` and `X`. Each `X`
//! segment is shifted half a unit to the right of the `Y` segment below it,
//! so an interior `X` bar sees two `Y` bars below and two above. Any pair
//! `(x_i, y_j)` still unseen afterwards gets a private pair of stacked bars
//! to the right of everything else.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{generate, GraphKind};
use crate::layout::{extract_visibilities, int, multiplicity_report, rat, Layout};
use crate::{div_ceil, Error};

/// Side sizes of `K_{m,n}` with `m >= n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteParams {
    pub m: usize,
    pub n: usize,
}

impl BipartiteParams {
    pub fn new(m: usize, n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidSize("K_{m,n} layouts need n >= 2"));
        }
        if m < n {
            return Err(Error::InvalidSize("K_{m,n} layouts need m >= n"));
        }
        Ok(Self { m, n })
    }

    fn y(&self, i: usize) -> usize {
        i
    }

    fn x(&self, i: usize) -> usize {
        self.m + i
    }
}

/// Which construction [`construct_kmn`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Dense,
    Sparse,
    Ladder,
    /// Build every construction and keep the one with the fewest bars on
    /// its busiest vertex; ties go to the dense one.
    #[default]
    Auto,
}

/// Appends `count` contiguous bars starting at `(x0, y)`, labeling bar `q`
/// with `label(q)`.
fn segment(layout: &mut Layout, x0: crate::Rational, y: i64, count: usize, label: impl Fn(usize) -> usize) {
    for q in 0..count {
        layout.push(label(q), x0 + int(q as i64), int(y));
    }
}

/// Adds a private visible pair for every non-adjacent `(y, x)` pair.
fn complete_with_pendants(p: BipartiteParams, mut layout: Layout) -> Layout {
    let seen: BTreeSet<(usize, usize)> = if layout.is_empty() {
        BTreeSet::new()
    } else {
        extract_visibilities(&layout).expect("segments do not overlap").vertex_graph.edges().iter().copied().collect()
    };
    let mut slot = layout.max_x().map_or(int(0), |x| x + int(2));
    for i in 0..p.m {
        for j in 0..p.n {
            let (y, x) = (p.y(i), p.x(j));
            if !seen.contains(&(y, x)) {
                layout.push(y, slot, int(0));
                layout.push(x, slot, int(1));
                slot += int(2);
            }
        }
    }
    layout
}

/// The dense construction: `⌈m/4⌉ + 1` segments for `Y` and `⌈m/4⌉` for
/// `X`, all of length `n`.
///
/// `Y_j` (1-based) starts at `x = j - 1` with leftmost bar `y_{3j-3}`; `X_j`
/// starts at `x = j - 1/2` with leftmost bar `x_{1-j}`; labels increase
/// along a segment and wrap around modulo the side size.
pub fn construct_kmn_dense(m: usize, n: usize) -> Result<Layout, Error> {
    let p = BipartiteParams::new(m, n)?;
    let k = div_ceil(m, 4);
    let mut layout = Layout::default();
    for j in 1..=k + 1 {
        let first = 3 * j - 3;
        segment(&mut layout, int(j as i64 - 1), 2 * (j as i64 - 1), n, |q| p.y((first + q) % m));
    }
    for j in 1..=k {
        let first = (1 + n as i64 - (j as i64 % n as i64)) as usize % n;
        segment(&mut layout, rat(2 * j as i64 - 1, 2), 2 * j as i64 - 1, n, |q| p.x((first + q) % n));
    }
    Ok(complete_with_pendants(p, layout))
}

/// The sparse construction: `⌊n/4⌋ + 1` segments for `Y` and `⌊n/4⌋` for
/// `X`, all of length `L = n⌊m/n⌋`.
///
/// `Y` segments carry `y_0 .. y_{L-1}` cyclically, `Y_j` starting at
/// `y_{3j-3}`; `X` segments carry `⌊m/n⌋` copies of `x_0 .. x_{n-1}`
/// cyclically, `X_j` starting at `x_{1-j}`. For `n < 4` there are no `X`
/// segments and every edge is realized by a pendant pair.
pub fn construct_kmn_sparse(m: usize, n: usize) -> Result<Layout, Error> {
    let p = BipartiteParams::new(m, n)?;
    let k = n / 4;
    let len = n * (m / n);
    let mut layout = Layout::default();
    if k > 0 {
        for j in 1..=k + 1 {
            let first = 3 * j - 3;
            segment(&mut layout, int(j as i64 - 1), 2 * (j as i64 - 1), len, |q| p.y((first + q) % len));
        }
        for j in 1..=k {
            let first = (1 + n as i64 - (j as i64 % n as i64)) as usize % n;
            segment(&mut layout, rat(2 * j as i64 - 1, 2), 2 * j as i64 - 1, len, |q| p.x((first + q) % n));
        }
    }
    Ok(complete_with_pendants(p, layout))
}

/// Stacks equal-length segments in a staircase: `ys[j]` at `x = j`,
/// `y = 2j` and `xs[j]` at `x = j + 1/2`, `y = 2j + 1` (0-based `j`).
fn staircase(ys: &[Vec<usize>], xs: &[Vec<usize>]) -> Layout {
    let mut layout = Layout::default();
    for (j, row) in ys.iter().enumerate() {
        segment(&mut layout, int(j as i64), 2 * j as i64, row.len(), |q| row[q]);
    }
    for (j, row) in xs.iter().enumerate() {
        segment(&mut layout, rat(2 * j as i64 + 1, 2), 2 * j as i64 + 1, row.len(), |q| row[q]);
    }
    layout
}

/// The ladder construction: `⌈n/2⌉` `X` segments and `⌈n/2⌉ + 1` `Y`
/// segments, all of length `L = ⌈m/2⌉`.
///
/// `X_j` alternates the pair `x_{2j-2}, x_{2j-1}`, so each of its `Y` bars
/// sees both members. For odd `n` the last `X` segment alternates
/// `x_{n-1}` with free slots, ending on `x_{n-1}`. `Y` segments alternate between the first `L`
/// vertices of `Y` and the rest, each rotated so that different vertices
/// land on segment ends. A `Y` bar then sees both pairs around it, and a
/// pair member sees both `Y` segments around it.
///
/// Free slots first go to pairs that the segments leave unseen, then to
/// whichever `x` vertex has the fewest bars.
pub fn construct_kmn_ladder(m: usize, n: usize) -> Result<Layout, Error> {
    let p = BipartiteParams::new(m, n)?;
    let len = div_ceil(m, 2);
    let rows = div_ceil(n, 2);
    let xs: Vec<Vec<usize>> = (0..rows)
        .map(|j| (0..len).map(|q| if 2 * j + 1 < n { p.x(2 * j + q % 2) } else { p.x(n - 1) }).collect())
        .collect();
    let ys: Vec<Vec<usize>> = (0..=rows)
        .map(|j| {
            let (start, size) = if j % 2 == 0 { (0, len) } else { (len, m - len) };
            let shift = j / 2;
            (0..len).map(|q| p.y(start + (q + size - shift % size) % size)).collect()
        })
        .collect();
    let mut layout = staircase(&ys, &xs);
    if n % 2 == 1 {
        let first = ys.iter().map(Vec::len).sum::<usize>() + (rows - 1) * len;
        let mut free: Vec<usize> = (1..len).step_by(2).collect();
        if len.is_multiple_of(2) && len >= 4 {
            // Keep `x_{n-1}` under the last bar of the top segment.
            free.retain(|&q| q < len - 3);
            free.push(len - 2);
        }
        let free: Vec<usize> = free.into_iter().map(|q| first + q).collect();
        fill_free_slots(p, &mut layout, &free);
    }
    Ok(complete_with_pendants(p, layout))
}

/// Labels the `X` bars at indices `free`, which must not see each other.
fn fill_free_slots(p: BipartiteParams, layout: &mut Layout, free: &[usize]) {
    let is_free = |b: usize| free.binary_search(&b).is_ok();
    let pairs = extract_visibilities(layout).expect("segments do not overlap").bar_pairs;
    let mut seen = BTreeSet::new();
    let mut around: Vec<Vec<usize>> = vec![Vec::new(); free.len()];
    for &(a, b) in &pairs {
        let (u, v) = (layout.bars[a].vertex, layout.bars[b].vertex);
        match (is_free(a), is_free(b)) {
            (false, false) => {
                seen.insert((u.min(v), u.max(v)));
            }
            (true, false) => around[free.binary_search(&a).unwrap()].push(v),
            (false, true) => around[free.binary_search(&b).unwrap()].push(u),
            (true, true) => {}
        }
    }
    let mut load = vec![0usize; p.n];
    for (i, bar) in layout.bars.iter().enumerate() {
        if bar.vertex >= p.m && !is_free(i) {
            load[bar.vertex - p.m] += 1;
        }
    }
    let mut chosen: Vec<Option<usize>> = vec![None; free.len()];
    for (slot, ys) in around.iter().enumerate() {
        let gain = |x: usize| ys.iter().filter(|&&y| !seen.contains(&(y, p.x(x)))).count();
        let best = (0..p.n).max_by_key(|&x| (gain(x), core::cmp::Reverse(load[x])));
        if let Some(x) = best.filter(|&x| gain(x) > 0) {
            for &y in ys {
                seen.insert((y, p.x(x)));
            }
            load[x] += 1;
            chosen[slot] = Some(x);
        }
    }
    for (slot, &bar) in free.iter().enumerate() {
        let x = chosen[slot].unwrap_or_else(|| {
            let x = (0..p.n).min_by_key(|&x| load[x]).expect("n >= 2");
            load[x] += 1;
            x
        });
        layout.bars[bar].vertex = p.x(x);
    }
}

/// A layout of `K_{m,n}` built with the chosen method.
pub fn construct_kmn(m: usize, n: usize, method: Method) -> Result<Layout, Error> {
    match method {
        Method::Dense => construct_kmn_dense(m, n),
        Method::Sparse => construct_kmn_sparse(m, n),
        Method::Ladder => construct_kmn_ladder(m, n),
        Method::Auto => {
            let mut best = construct_kmn_dense(m, n)?;
            let mut best_max = multiplicity_report(&best).max;
            for other in [construct_kmn_sparse(m, n)?, construct_kmn_ladder(m, n)?] {
                let max = multiplicity_report(&other).max;
                if max < best_max {
                    best = other;
                    best_max = max;
                }
            }
            Ok(best)
        }
    }
}

/// Known bounds on `ub(K_{m,n})` for `m >= n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteBounds {
    pub lower: usize,
    pub upper: usize,
}

/// Lower bound: the largest of `⌈m/5⌉`, `⌈(mn + 4) / (2(m + n))⌉` and, for
/// `n = 2`, `⌈m/4⌉`. Upper bound: the smaller of `⌈m/4⌉ + ⌊2m/n⌋ + 12` and
/// `⌊m/4 + n + 1⌋`.
pub fn bounds_kmn(m: usize, n: usize) -> Result<BipartiteBounds, Error> {
    BipartiteParams::new(m, n)?;
    let mut lower = div_ceil(m, 5).max(div_ceil(m * n + 4, 2 * (m + n)));
    if n == 2 {
        lower = lower.max(div_ceil(m, 4));
    }
    let upper = (div_ceil(m, 4) + 2 * m / n + 12).min((m + 4 * n + 4) / 4);
    Ok(BipartiteBounds { lower, upper })
}

/// `K_{m,n}` with the vertex numbering used by the constructions.
pub fn target(m: usize, n: usize) -> Result<crate::Graph, Error> {
    generate(GraphKind::CompleteBipartite(m, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::verify_representation;

    fn verify(layout: &Layout, m: usize, n: usize) -> usize {
        let report = verify_representation(layout, &target(m, n).unwrap());
        assert!(report.represents_target, "K_{{{m},{n}}}: {report:?}");
        report.max_multiplicity
    }

    #[test]
    fn dense_small_cases() {
        assert!(verify(&construct_kmn_dense(8, 8).unwrap(), 8, 8) <= 16);
        verify(&construct_kmn_dense(4, 4).unwrap(), 4, 4);
    }

    #[test]
    fn sparse_small_cases() {
        assert!(verify(&construct_kmn_sparse(16, 4).unwrap(), 16, 4) <= 9);
        verify(&construct_kmn_sparse(4, 4).unwrap(), 4, 4);
        let l = construct_kmn_sparse(9, 4).unwrap();
        verify(&l, 9, 4);
        // y_8 lies beyond the segments and only appears in pendant pairs.
        let bars: Vec<_> = l.bars.iter().filter(|b| b.vertex == 8).collect();
        assert_eq!(bars.len(), 4);
        assert!(bars.iter().all(|b| b.y == int(0) && b.x > int(8)));
    }

    /// An interior bar of `x_i` in `X_j` sees `y_{i+4j-4}`, `y_{i+4j-3}`
    /// below and `y_{i+4j-2}`, `y_{i+4j-1}` above, with 1-based indices
    /// taken cyclically.
    #[test]
    fn dense_interior_bar_neighbors() {
        let (m, n) = (12, 7);
        let l = construct_kmn_dense(m, n).unwrap();
        let vis = extract_visibilities(&l).unwrap();
        let segment_bars = (div_ceil(m, 4) * 2 + 1) * n;
        for (b, bar) in l.bars.iter().enumerate().take(segment_bars) {
            if bar.vertex < m {
                continue;
            }
            let j = (bar.y.to_integer() as usize).div_ceil(2);
            let q = (bar.x - rat(2 * j as i64 - 1, 2)).to_integer() as usize;
            if q == 0 || q == n - 1 {
                continue;
            }
            // 1-based index of x before reduction modulo n.
            if q + 1 < j {
                continue;
            }
            let i = q + 2 - j;
            assert_eq!(bar.vertex - m, (i - 1) % n);
            let mut expected: Vec<usize> = (4 * j - 4..4 * j).map(|s| (i + s - 1) % m).collect();
            expected.sort_unstable();
            let mut got: Vec<usize> = vis
                .bar_pairs
                .iter()
                .filter_map(|&(a, c)| {
                    if a == b {
                        Some(c)
                    } else if c == b {
                        Some(a)
                    } else {
                        None
                    }
                })
                .map(|o| l.bars[o].vertex)
                .collect();
            got.sort_unstable();
            assert_eq!(got, expected, "bar {b}");
        }
    }

    #[test]
    fn ladder_small_cases() {
        for (m, n) in [(2, 2), (3, 2), (7, 3), (9, 5), (12, 6), (20, 20), (21, 7)] {
            verify(&construct_kmn_ladder(m, n).unwrap(), m, n);
        }
        // Two bars per x vertex on a single segment of length 4, plus the
        // pendants closing off its ends.
        assert!(verify(&construct_kmn_ladder(8, 2).unwrap(), 8, 2) <= 3);
    }

    #[test]
    fn ladder_pairs_see_whole_neighbor_segments() {
        let (m, n) = (24, 4);
        let l = construct_kmn_ladder(m, n).unwrap();
        let vis = extract_visibilities(&l).unwrap();
        // Without pendants, x_0 and x_1 each sit on every other bar of the
        // first X segment and meet both Y segments around it.
        let seen_by = |x: usize| {
            (0..m)
                .filter(|&y| {
                    vis.bar_pairs.iter().any(|&(a, b)| {
                        let (va, vb) = (l.bars[a].vertex, l.bars[b].vertex);
                        (va, vb) == (y, x) || (va, vb) == (x, y)
                    })
                })
                .count()
        };
        assert_eq!(seen_by(m), m);
        assert_eq!(seen_by(m + 1), m);
    }

    #[test]
    fn ladder_two_sided_bound() {
        for m in 2..=60 {
            let t = verify(&construct_kmn_ladder(m, 2).unwrap(), m, 2);
            assert!(t <= m / 4 + 3, "m={m} t={t}");
        }
    }

    #[test]
    fn ladder_odd_side_is_balanced() {
        for m in 9..=60 {
            let layout = construct_kmn_ladder(m, 3).unwrap();
            let t = verify(&layout, m, 3);
            let x_bars = 2 * div_ceil(m, 2);
            assert_eq!(layout.len(), 5 * div_ceil(m, 2), "m={m}: pendant pairs were needed");
            assert_eq!(t, div_ceil(x_bars, 3), "m={m}");
        }
    }

    #[test]
    fn auto_choice() {
        for (m, n) in [(100, 4), (100, 100), (40, 2), (40, 26), (9, 9)] {
            let l = construct_kmn(m, n, Method::Auto).unwrap();
            let best = [construct_kmn_dense(m, n), construct_kmn_sparse(m, n), construct_kmn_ladder(m, n)]
                .into_iter()
                .map(|l| multiplicity_report(&l.unwrap()).max)
                .min()
                .unwrap();
            assert_eq!(multiplicity_report(&l).max, best);
        }
        let sparse = multiplicity_report(&construct_kmn_sparse(100, 4).unwrap()).max;
        let dense = multiplicity_report(&construct_kmn_dense(100, 4).unwrap()).max;
        assert!(sparse < dense);
    }

    #[test]
    fn bounds_by_hand() {
        assert_eq!(bounds_kmn(20, 2).unwrap().lower, 5);
        assert_eq!(bounds_kmn(10, 10).unwrap().lower, 3);
        assert_eq!(bounds_kmn(5, 5).unwrap().lower, 2);
        assert_eq!(bounds_kmn(16, 4).unwrap().upper, 9);
        assert!(bounds_kmn(3, 4).is_err());
        assert!(bounds_kmn(3, 1).is_err());
    }
}
