//! Exact unit-bar layouts and visibility extraction.
//!
//! A bar is the half-open segment `[x, x + 1) × {y}` with rational `x` and
//! `y`. Two bars see each other when they lie at different heights and some
//! open vertical channel of positive width joins them without meeting any bar
//! in between. Bars at equal heights never see each other; they may touch
//! end to end, which lets a long segment be split into contiguous unit bars.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::graph::Graph;
use crate::Error;

/// Exact rational coordinate, always kept in lowest terms.
pub type Rational = Ratio<i64>;

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

pub(crate) fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bar {
    /// Vertex the bar is assigned to.
    pub vertex: usize,
    /// Left endpoint abscissa.
    pub x: Rational,
    pub y: Rational,
}

impl Bar {
    pub fn new(vertex: usize, x: Rational, y: Rational) -> Self {
        Self { vertex, x, y }
    }

    /// Right end of the half-open projection `[x, x + 1)`.
    pub fn right(&self) -> Rational {
        self.x + int(1)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Layout {
    pub bars: Vec<Bar>,
}

impl Layout {
    pub fn new(bars: Vec<Bar>) -> Self {
        Self { bars }
    }

    pub fn len(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    pub fn push(&mut self, vertex: usize, x: Rational, y: Rational) {
        self.bars.push(Bar::new(vertex, x, y));
    }

    /// One more than the largest vertex id used, or 0 for an empty layout.
    pub fn vertex_count(&self) -> usize {
        self.bars.iter().map(|b| b.vertex + 1).max().unwrap_or(0)
    }

    pub fn min_x(&self) -> Option<Rational> {
        self.bars.iter().map(|b| b.x).min()
    }

    pub fn max_x(&self) -> Option<Rational> {
        self.bars.iter().map(|b| b.x).max()
    }

    /// Moves every bar by `(dx, dy)`.
    pub fn translate(&mut self, dx: Rational, dy: Rational) {
        for bar in &mut self.bars {
            bar.x += dx;
            bar.y += dy;
        }
    }

    /// Checks that no two bars at the same height overlap.
    ///
    /// Reports the offending pair with the smaller index first.
    pub fn validate(&self) -> Result<(), Error> {
        let mut idx: Vec<usize> = (0..self.bars.len()).collect();
        idx.sort_by(|&a, &b| {
            let (p, q) = (&self.bars[a], &self.bars[b]);
            (p.y, p.x, a).cmp(&(q.y, q.x, b))
        });
        for w in idx.windows(2) {
            let (a, b) = (&self.bars[w[0]], &self.bars[w[1]]);
            if a.y == b.y && b.x < a.right() {
                return Err(Error::IntersectingBars { first: w[0].min(w[1]), second: w[0].max(w[1]) });
            }
        }
        Ok(())
    }
}

/// Result of [`extract_visibilities`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Visibilities {
    /// Pairs of bar indices `(a, b)` with `a < b` that see each other.
    pub bar_pairs: BTreeSet<(usize, usize)>,
    /// Visibility graph on vertices; pairs of bars of one vertex are dropped.
    pub vertex_graph: Graph,
}

/// One witnessed line of sight: `lower` sees `upper` above it through the
/// vertical line at abscissa `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sightline {
    pub lower: usize,
    pub upper: usize,
    pub x: Rational,
}

/// Plane sweep over the distinct bar endpoints.
///
/// Between two consecutive event abscissas the set of bars crossing the slab
/// is fixed, and exactly the bars adjacent in height order see each other
/// there. Only adjacencies that change at an event need to be reported, so
/// each event looks at the neighbors of inserted bars and at the gap left by
/// removed ones. Returns every visible pair with the midpoint of the first
/// slab in which it was seen.
fn sweep(layout: &Layout) -> Result<BTreeMap<(usize, usize), Rational>, Error> {
    layout.validate()?;
    let bars = &layout.bars;
    // (abscissa, is_start, bar); ends sort before starts at equal abscissas.
    let mut events: Vec<(Rational, bool, usize)> = Vec::with_capacity(2 * bars.len());
    for (i, b) in bars.iter().enumerate() {
        events.push((b.x, true, i));
        events.push((b.right(), false, i));
    }
    events.sort_unstable();

    let mut active: BTreeSet<(Rational, usize)> = BTreeSet::new();
    let mut seen: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    let mut inserted = Vec::new();
    let mut removed = Vec::new();
    let mut i = 0;
    while i < events.len() {
        let at = events[i].0;
        inserted.clear();
        removed.clear();
        while i < events.len() && events[i].0 == at {
            let (_, is_start, bar) = events[i];
            let key = (bars[bar].y, bar);
            if is_start {
                active.insert(key);
                inserted.push(key);
            } else {
                active.remove(&key);
                removed.push(key);
            }
            i += 1;
        }
        let Some(&(next, _, _)) = events.get(i) else { break };
        let witness = (at + next) / int(2);
        let mut record = |a: (Rational, usize), b: (Rational, usize)| {
            let pair = (a.1.min(b.1), a.1.max(b.1));
            seen.entry(pair).or_insert(witness);
        };
        for &key in &inserted {
            if let Some(&below) = active.range(..key).next_back() {
                record(below, key);
            }
            if let Some(&above) = active.range((core::ops::Bound::Excluded(key), core::ops::Bound::Unbounded)).next() {
                record(key, above);
            }
        }
        for &key in &removed {
            let below = active.range(..key).next_back();
            let above = active.range(key..).next();
            if let (Some(&below), Some(&above)) = (below, above) {
                record(below, above);
            }
        }
    }
    Ok(seen)
}

/// All visibilities of a layout, at bar level and contracted to vertices.
pub fn extract_visibilities(layout: &Layout) -> Result<Visibilities, Error> {
    let seen = sweep(layout)?;
    let bar_pairs: BTreeSet<(usize, usize)> = seen.into_keys().collect();
    let vertex_graph = contract(layout, &bar_pairs);
    Ok(Visibilities { bar_pairs, vertex_graph })
}

/// One sightline per visible bar pair, ordered by pair.
pub fn sightlines(layout: &Layout) -> Result<Vec<Sightline>, Error> {
    let seen = sweep(layout)?;
    Ok(seen
        .into_iter()
        .map(|((a, b), x)| {
            let (lower, upper) = if layout.bars[a].y < layout.bars[b].y { (a, b) } else { (b, a) };
            Sightline { lower, upper, x }
        })
        .collect())
}

fn contract(layout: &Layout, bar_pairs: &BTreeSet<(usize, usize)>) -> Graph {
    let edges = bar_pairs.iter().map(|&(a, b)| (layout.bars[a].vertex, layout.bars[b].vertex)).filter(|(u, v)| u != v);
    Graph::new(layout.vertex_count(), edges).expect("bar labels are below vertex_count")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplicity {
    /// Number of bars per vertex id.
    pub counts: Vec<usize>,
    pub max: usize,
}

pub fn multiplicity_report(layout: &Layout) -> Multiplicity {
    let mut counts = vec![0usize; layout.vertex_count()];
    for bar in &layout.bars {
        counts[bar.vertex] += 1;
    }
    let max = counts.iter().copied().max().unwrap_or(0);
    Multiplicity { counts, max }
}

/// Diagnosis of a layout against the graph it is meant to represent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// No overlapping bars, every bar labeled in range, every vertex has a bar.
    pub is_valid_layout: bool,
    pub represents_target: bool,
    /// Target edges with no witnessing visibility.
    pub missing_edges: Vec<(usize, usize)>,
    /// Visibilities between vertices that are not adjacent in the target.
    pub forbidden_visibilities: Vec<(usize, usize)>,
    /// Bars per vertex of the target.
    pub multiplicity: Vec<usize>,
    /// Largest entry of `multiplicity`; the `t` this layout witnesses.
    pub max_multiplicity: usize,
    /// Visible bar pairs belonging to one vertex. Allowed, counted only.
    pub self_visibilities: usize,
    /// Target vertices that received no bar.
    pub unlabeled_vertices: Vec<usize>,
    /// Bars whose vertex id is not a vertex of the target.
    pub out_of_range_bars: Vec<usize>,
    /// First pair of intersecting bars, if any.
    pub intersecting: Option<(usize, usize)>,
}

pub fn verify_representation(layout: &Layout, target: &Graph) -> VerifyReport {
    let n = target.vertex_count();
    let mut multiplicity = vec![0usize; n];
    let mut out_of_range_bars = Vec::new();
    for (i, bar) in layout.bars.iter().enumerate() {
        match multiplicity.get_mut(bar.vertex) {
            Some(c) => *c += 1,
            None => out_of_range_bars.push(i),
        }
    }
    let unlabeled_vertices: Vec<usize> = (0..n).filter(|&v| multiplicity[v] == 0).collect();
    let max_multiplicity = multiplicity.iter().copied().max().unwrap_or(0);

    let mut report = VerifyReport {
        is_valid_layout: false,
        represents_target: false,
        missing_edges: Vec::new(),
        forbidden_visibilities: Vec::new(),
        multiplicity,
        max_multiplicity,
        self_visibilities: 0,
        unlabeled_vertices,
        out_of_range_bars,
        intersecting: None,
    };
    let visible = match extract_visibilities(layout) {
        Ok(v) => v,
        Err(Error::IntersectingBars { first, second }) => {
            report.intersecting = Some((first, second));
            return report;
        }
        Err(_) => return report,
    };
    report.self_visibilities =
        visible.bar_pairs.iter().filter(|&&(a, b)| layout.bars[a].vertex == layout.bars[b].vertex).count();
    let seen: BTreeSet<(usize, usize)> = visible.vertex_graph.edges().iter().copied().collect();
    report.missing_edges = target.edges().iter().copied().filter(|e| !seen.contains(e)).collect();
    report.forbidden_visibilities = seen.iter().copied().filter(|&(u, v)| !target.has_edge(u, v)).collect();
    report.is_valid_layout = report.out_of_range_bars.is_empty() && report.unlabeled_vertices.is_empty();
    report.represents_target =
        report.is_valid_layout && report.missing_edges.is_empty() && report.forbidden_visibilities.is_empty();
    report
}

/// Gives every bar its own height without changing any visibility.
///
/// Bars sharing a height have disjoint projections, so nothing can see
/// through one of them to another. Within each such group all bars but the
/// first are lifted into `(y, y + ε/2)`, where `ε` is the smallest gap
/// between distinct heights; no other bar lives in that band.
pub fn perturb_distinct_y(layout: &Layout) -> Layout {
    let mut heights: Vec<Rational> = layout.bars.iter().map(|b| b.y).collect();
    heights.sort_unstable();
    heights.dedup();
    let eps = heights.windows(2).map(|w| w[1] - w[0]).min().unwrap_or_else(|| int(1));

    let mut groups: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
    for (i, bar) in layout.bars.iter().enumerate() {
        groups.entry(bar.y).or_default().push(i);
    }
    let mut out = layout.clone();
    for members in groups.values() {
        let k = members.len() as i64;
        for (j, &bar) in members.iter().enumerate().skip(1) {
            out.bars[bar].y += eps * rat(j as i64, 2 * k);
        }
    }
    out
}

/// Places `b` to the right of `a` with a gap of at least one between their
/// projections; the visibility graph becomes the disjoint union.
pub fn disjoint_union(a: &Layout, b: &Layout) -> Layout {
    let (Some(a_max), Some(b_min)) = (a.max_x(), b.min_x()) else {
        let mut out = a.clone();
        out.bars.extend(b.bars.iter().cloned());
        return out;
    };
    let mut shifted = b.clone();
    shifted.translate(a_max + int(2) - b_min, int(0));
    let mut out = a.clone();
    out.bars.extend(shifted.bars);
    out
}
