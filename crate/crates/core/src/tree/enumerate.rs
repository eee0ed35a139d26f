use super::{BoronTree, Label};
use crate::error::{Error, Result};

/// `(2n - 5)!!`, the number of labeled boron trees on `n >= 3` leaves
/// (and 1 for `n = 2`).
pub fn double_factorial_count(n: usize) -> u64 {
    if n <= 3 {
        return 1;
    }
    (1..=(2 * n - 5) as u64).step_by(2).product()
}

/// Every boron tree with leaf set `{1, ..., n}`, each exactly once.
///
/// Trees on `k` leaves come from trees on `k - 1` leaves by subdividing one
/// edge and hanging leaf `k` off the new vertex.
pub fn enumerate_labeled(n: usize) -> Result<Vec<BoronTree>> {
    if n < 2 {
        return Err(Error::TooFewLeaves { needed: 2, got: n });
    }
    struct Raw {
        vertices: usize,
        edges: Vec<(usize, usize)>,
        labels: Vec<(usize, Label)>,
    }
    let mut level = vec![if n == 2 {
        Raw {
            vertices: 2,
            edges: vec![(0, 1)],
            labels: vec![(0, 1), (1, 2)],
        }
    } else {
        Raw {
            vertices: 4,
            edges: vec![(3, 0), (3, 1), (3, 2)],
            labels: vec![(0, 1), (1, 2), (2, 3)],
        }
    }];
    for k in 4..=n {
        let mut next = Vec::with_capacity(level.len() * (2 * k - 5));
        for raw in &level {
            for (e, &(u, v)) in raw.edges.iter().enumerate() {
                let mid = raw.vertices;
                let leaf = raw.vertices + 1;
                let mut edges = raw.edges.clone();
                edges[e] = (u, mid);
                edges.extend([(mid, v), (mid, leaf)]);
                let mut labels = raw.labels.clone();
                labels.push((leaf, k as Label));
                next.push(Raw {
                    vertices: raw.vertices + 2,
                    edges,
                    labels,
                });
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|r| BoronTree::from_edges(r.vertices, &r.edges, &r.labels))
        .collect()
}
