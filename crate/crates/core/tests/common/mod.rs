//! Seeded generators shared by the integration tests and the acceptance
//! harness.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ubv_core::layout::rat;
use ubv_core::{Graph, Layout};

pub const DEFAULT_SEED: u64 = 0x5eed_0b1e;

/// The seed from `UBV_SEED`, or a fixed default.
pub fn seed() -> u64 {
    std::env::var("UBV_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed());
    rng.set_stream(stream);
    rng
}

/// A valid layout of 1 to `max_bars` bars. Abscissas have denominators up
/// to 24; heights come from a short list so collinear bars are common.
pub fn random_layout(rng: &mut impl Rng, max_bars: usize) -> Layout {
    let target = rng.gen_range(1..=max_bars);
    let mut layout = Layout::default();
    let mut attempts = 0;
    while layout.len() < target && attempts < 200 {
        attempts += 1;
        let den = rng.gen_range(1..=24i64);
        let x = rat(rng.gen_range(-2 * den..=3 * den), den);
        let y = rat(rng.gen_range(0..8i64), [1, 2, 3][rng.gen_range(0..3)]);
        let clash = layout.bars.iter().any(|b| b.y == y && b.x < x + rat(1, 1) && x < b.x + rat(1, 1));
        if !clash {
            layout.push(0, x, y);
        }
    }
    let vertices = rng.gen_range(1..=layout.len());
    let mut labels: Vec<usize> =
        (0..layout.len()).map(|i| if i < vertices { i } else { rng.gen_range(0..vertices) }).collect();
    labels.shuffle(rng);
    for (bar, v) in layout.bars.iter_mut().zip(labels) {
        bar.vertex = v;
    }
    layout
}

/// Random recursive tree: vertex `i` hangs off a uniform earlier vertex.
pub fn random_recursive_tree(rng: &mut impl Rng, n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (rng.gen_range(0..i), i))).unwrap()
}

/// Uniform labeled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    if n <= 2 {
        return Graph::new(n, (1..n).map(|i| (0, i))).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &seq {
        let leaf = leaves.pop_first().unwrap();
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

/// A caterpillar with `Δ ≤ 3` whose legs are paths, relabeled at random.
pub fn random_subdivided_caterpillar(rng: &mut impl Rng, max_vertices: usize) -> Graph {
    let spine = rng.gen_range(1..=max_vertices.min(20));
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for s in 0..spine {
        let free = if spine == 1 {
            3
        } else if s == 0 || s + 1 == spine {
            2
        } else {
            1
        };
        for _ in 0..free {
            if next >= max_vertices || !rng.gen_bool(0.5) {
                continue;
            }
            let len = rng.gen_range(1..=(max_vertices - next).min(6));
            let mut prev = s;
            for v in next..next + len {
                edges.push((prev, v));
                prev = v;
            }
            next += len;
        }
    }
    let mut perm: Vec<usize> = (0..next).collect();
    perm.shuffle(rng);
    Graph::new(next, edges.into_iter().map(|(a, b)| (perm[a], perm[b]))).unwrap()
}

/// The same tree with vertices renumbered in breadth-first order from 0.
pub fn bfs_relabel(tree: &Graph) -> Graph {
    let rooted = ubv_core::RootedTree::new(tree, 0).unwrap();
    let mut pos = vec![0; tree.vertex_count()];
    for (i, &v) in rooted.bfs_order().iter().enumerate() {
        pos[v] = i;
    }
    Graph::new(tree.vertex_count(), tree.edges().iter().map(|&(a, b)| (pos[a], pos[b]))).unwrap()
}
