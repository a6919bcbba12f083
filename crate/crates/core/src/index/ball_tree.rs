use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{rank_order, similarity_from_squared_distance, squared_distance, Neighbor, RefId};

// Prune margin on similarity bounds; only costs extra distance evaluations,
// never changes results.
const PRUNE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone)]
struct Node {
    start: usize,
    end: usize,
    radius: f64,
    children: Option<(usize, usize)>,
}

/// Ball tree over rows of a flat row-major matrix. Nodes split on the
/// coordinate of maximum spread at the median.
#[derive(Debug, Clone)]
pub(super) struct BallTree {
    nodes: Vec<Node>,
    centers: Vec<f64>,
    order: Vec<usize>,
}

#[derive(PartialEq)]
struct Candidate(Neighbor);

impl Eq for Candidate {}

impl Ord for Candidate {
    // Greater means ranked later, so the heap top is the current worst.
    fn cmp(&self, other: &Self) -> Ordering {
        rank_order(&self.0, &other.0)
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BallTree {
    pub(super) fn build(data: &[f32], dim: usize, leaf_size: usize) -> BallTree {
        let n = data.len().checked_div(dim).unwrap_or(0);
        let mut tree = BallTree {
            nodes: Vec::new(),
            centers: Vec::new(),
            order: (0..n).collect(),
        };
        if n > 0 {
            tree.build_node(data, dim, 0, n, leaf_size.max(1));
        }
        tree
    }

    fn row(data: &[f32], dim: usize, row: usize) -> &[f32] {
        &data[row * dim..(row + 1) * dim]
    }

    fn build_node(&mut self, data: &[f32], dim: usize, start: usize, end: usize, leaf_size: usize) -> usize {
        let count = (end - start) as f64;
        let mut center = vec![0.0f64; dim];
        for &r in &self.order[start..end] {
            for (c, &x) in center.iter_mut().zip(Self::row(data, dim, r)) {
                *c += f64::from(x);
            }
        }
        center.iter_mut().for_each(|c| *c /= count);
        let radius = self.order[start..end]
            .iter()
            .map(|&r| {
                Self::row(data, dim, r)
                    .iter()
                    .zip(&center)
                    .map(|(&x, &c)| (f64::from(x) - c).powi(2))
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max);

        let id = self.nodes.len();
        self.nodes.push(Node {
            start,
            end,
            radius,
            children: None,
        });
        self.centers.extend_from_slice(&center);

        if end - start <= leaf_size {
            return id;
        }

        let split_dim = (0..dim)
            .map(|d| {
                let (lo, hi) = self.order[start..end].iter().fold((f32::INFINITY, f32::NEG_INFINITY), |(lo, hi), &r| {
                    let x = data[r * dim + d];
                    (lo.min(x), hi.max(x))
                });
                (d, hi - lo)
            })
            .max_by(|a, b| a.1.total_cmp(&b.1).then(b.0.cmp(&a.0)))
            .map_or(0, |(d, _)| d);

        let mid = (end - start) / 2;
        self.order[start..end].select_nth_unstable_by(mid, |&a, &b| {
            data[a * dim + split_dim]
                .total_cmp(&data[b * dim + split_dim])
                .then(a.cmp(&b))
        });

        let left = self.build_node(data, dim, start, start + mid, leaf_size);
        let right = self.build_node(data, dim, start + mid, end, leaf_size);
        self.nodes[id].children = Some((left, right));
        id
    }

    fn center_distance(&self, node: usize, query: &[f32]) -> f64 {
        let dim = query.len();
        self.centers[node * dim..(node + 1) * dim]
            .iter()
            .zip(query)
            .map(|(&c, &q)| (f64::from(q) - c).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    pub(super) fn search(&self, data: &[f32], dim: usize, ids: &[RefId], query: &[f32], m: usize) -> Vec<Neighbor> {
        let mut heap: BinaryHeap<Candidate> = BinaryHeap::with_capacity(m + 1);
        if !self.nodes.is_empty() {
            let d = self.center_distance(0, query);
            self.visit(0, d, data, dim, ids, query, m, &mut heap);
        }
        let mut out: Vec<Neighbor> = heap.into_iter().map(|c| c.0).collect();
        out.sort_by(rank_order);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn visit(
        &self,
        node_id: usize,
        center_dist: f64,
        data: &[f32],
        dim: usize,
        ids: &[RefId],
        query: &[f32],
        m: usize,
        heap: &mut BinaryHeap<Candidate>,
    ) {
        let node = &self.nodes[node_id];
        if heap.len() == m {
            let lower = (center_dist - node.radius).max(0.0);
            let upper_sim = similarity_from_squared_distance(lower * lower);
            if let Some(worst) = heap.peek() {
                if upper_sim < worst.0.similarity - PRUNE_SLACK {
                    return;
                }
            }
        }
        match node.children {
            None => {
                for &row in &self.order[node.start..node.end] {
                    let candidate = Neighbor {
                        ref_id: ids[row],
                        similarity: similarity_from_squared_distance(squared_distance(
                            query,
                            Self::row(data, dim, row),
                        )),
                    };
                    if heap.len() < m {
                        heap.push(Candidate(candidate));
                    } else if let Some(worst) = heap.peek() {
                        if rank_order(&candidate, &worst.0) == Ordering::Less {
                            heap.pop();
                            heap.push(Candidate(candidate));
                        }
                    }
                }
            }
            Some((left, right)) => {
                let dl = self.center_distance(left, query);
                let dr = self.center_distance(right, query);
                let (first, df, second, ds) = if dl <= dr {
                    (left, dl, right, dr)
                } else {
                    (right, dr, left, dl)
                };
                self.visit(first, df, data, dim, ids, query, m, heap);
                self.visit(second, ds, data, dim, ids, query, m, heap);
            }
        }
    }
}
