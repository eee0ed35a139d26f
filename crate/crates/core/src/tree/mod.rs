//! Boron trees: finite trees whose internal vertices have valence three.
//!
//! A tree is stored as an adjacency list over vertex ids together with the
//! labels of its leaves. The structure that matters is the quartet relation
//! on the leaves; the vertex numbering is an implementation detail, so
//! equality and hashing go through the canonical labeled Newick string.

mod canonical;
mod embed;
mod enumerate;
mod newick;
mod ordered;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

pub use canonical::CanonicalForm;
pub use embed::{enumerate_embeddings, is_embedding, LeafMap};
pub use enumerate::{double_factorial_count, enumerate_labeled};
pub use newick::{parse_newick, parse_ordered_newick, parse_tree_any, ParsedTree};
pub use ordered::OrderedBoronTree;

use crate::error::{Error, Result};

/// Leaf ("hydrogen atom") label.
pub type Label = u32;

/// One of the three ways to split four leaves into two pairs.
///
/// For leaf indices `(a, b, c, d)` the variants name the pair containing `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Pairing {
    AB,
    AC,
    AD,
}

#[derive(Clone)]
pub struct BoronTree {
    adj: Vec<Vec<usize>>,
    labels: Vec<Option<Label>>,
    leaves: Vec<Label>,
    leaf_vertex: Vec<usize>,
    dist: Vec<u32>,
}

impl BoronTree {
    /// Builds a tree from raw parts, validating the boron invariants.
    ///
    /// `leaf_labels` assigns a label to every leaf vertex. Trees with one or
    /// two vertices are accepted as degenerate boron trees.
    pub fn from_edges(
        vertex_count: usize,
        edges: &[(usize, usize)],
        leaf_labels: &[(usize, Label)],
    ) -> Result<Self> {
        let invalid = |m: String| Err(Error::InvalidTree(m));
        if vertex_count == 0 {
            return invalid("empty tree".into());
        }
        if edges.len() + 1 != vertex_count {
            return invalid(format!(
                "{} vertices need {} edges, got {}",
                vertex_count,
                vertex_count - 1,
                edges.len()
            ));
        }
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count || u == v {
                return invalid(format!("bad edge ({u}, {v})"));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut labels = vec![None; vertex_count];
        for &(v, l) in leaf_labels {
            if v >= vertex_count {
                return invalid(format!("label on missing vertex {v}"));
            }
            if labels[v].replace(l).is_some() {
                return invalid(format!("vertex {v} labeled twice"));
            }
        }
        // connectivity; with |E| = |V| - 1 this also rules out cycles
        let mut seen = vec![false; vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != vertex_count {
            return invalid("graph is not connected".into());
        }
        for v in 0..vertex_count {
            let deg = adj[v].len();
            let leafy = vertex_count <= 2 || deg == 1;
            match (leafy, labels[v]) {
                (true, None) => return invalid(format!("leaf vertex {v} has no label")),
                (false, Some(l)) => {
                    return invalid(format!("label {l} sits on a vertex of degree {deg}"))
                }
                (false, None) if deg != 3 => {
                    return invalid(format!("internal vertex {v} has degree {deg}"))
                }
                _ => {}
            }
        }
        let mut pairs: Vec<(Label, usize)> = labels
            .iter()
            .enumerate()
            .filter_map(|(v, l)| l.map(|l| (l, v)))
            .collect();
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return invalid(format!("duplicate leaf label {}", w[0].0));
        }
        let (leaves, leaf_vertex): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let mut tree = BoronTree {
            adj,
            labels,
            leaves,
            leaf_vertex,
            dist: Vec::new(),
        };
        tree.dist = tree.leaf_distances();
        Ok(tree)
    }

    /// The tree with a single leaf.
    pub fn single(label: Label) -> Self {
        Self::from_edges(1, &[], &[(0, label)]).expect("single vertex tree")
    }

    /// The star on three leaves, or the edge / single vertex for fewer.
    pub fn star(labels: &[Label]) -> Result<Self> {
        match labels {
            [a] => Ok(Self::single(*a)),
            [a, b] => Self::from_edges(2, &[(0, 1)], &[(0, *a), (1, *b)]),
            [a, b, c] => Self::from_edges(
                4,
                &[(3, 0), (3, 1), (3, 2)],
                &[(0, *a), (1, *b), (2, *c)],
            ),
            _ => Err(Error::InvalidTree(format!(
                "a star boron tree has 1 to 3 leaves, got {}",
                labels.len()
            ))),
        }
    }

    fn leaf_distances(&self) -> Vec<u32> {
        let n = self.leaves.len();
        let mut out = vec![0; n * n];
        let mut d = vec![u32::MAX; self.adj.len()];
        for (i, &src) in self.leaf_vertex.iter().enumerate() {
            d.iter_mut().for_each(|x| *x = u32::MAX);
            d[src] = 0;
            let mut queue = VecDeque::from([src]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if d[w] == u32::MAX {
                        d[w] = d[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for (j, &dst) in self.leaf_vertex.iter().enumerate() {
                out[i * n + j] = d[dst];
            }
        }
        out
    }

    /// Sorted leaf labels.
    pub fn leaves(&self) -> &[Label] {
        &self.leaves
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn label_of(&self, v: usize) -> Option<Label> {
        self.labels[v]
    }

    pub fn contains_leaf(&self, l: Label) -> bool {
        self.index_of(l).is_some()
    }

    pub fn leaf_vertex(&self, l: Label) -> Result<usize> {
        self.index_of(l)
            .map(|i| self.leaf_vertex[i])
            .ok_or(Error::InvalidLeaf(l))
    }

    pub(crate) fn index_of(&self, l: Label) -> Option<usize> {
        self.leaves.binary_search(&l).ok()
    }

    /// Number of edges on the path between two leaves.
    pub fn distance(&self, a: Label, b: Label) -> Result<u32> {
        let i = self.index_of(a).ok_or(Error::InvalidLeaf(a))?;
        let j = self.index_of(b).ok_or(Error::InvalidLeaf(b))?;
        Ok(self.dist_idx(i, j))
    }

    #[inline]
    fn dist_idx(&self, i: usize, j: usize) -> u32 {
        self.dist[i * self.leaves.len() + j]
    }

    /// The split of four distinct leaf indices, by the four-point condition:
    /// the pairing with the strictly smallest distance sum is the one whose
    /// geodesics are disjoint.
    #[inline]
    pub(crate) fn pairing_idx(&self, a: usize, b: usize, c: usize, d: usize) -> Pairing {
        let s_ab = self.dist_idx(a, b) + self.dist_idx(c, d);
        let s_ac = self.dist_idx(a, c) + self.dist_idx(b, d);
        let s_ad = self.dist_idx(a, d) + self.dist_idx(b, c);
        if s_ab < s_ac && s_ab < s_ad {
            Pairing::AB
        } else if s_ac < s_ad {
            Pairing::AC
        } else {
            Pairing::AD
        }
    }

    fn quartet_indices(&self, w: Label, x: Label, y: Label, z: Label) -> Result<[usize; 4]> {
        let mut idx = [0; 4];
        for (slot, l) in idx.iter_mut().zip([w, x, y, z]) {
            *slot = self.index_of(l).ok_or(Error::InvalidLeaf(l))?;
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if idx[i] == idx[j] {
                    return Err(Error::DegenerateQuartet);
                }
            }
        }
        Ok(idx)
    }

    /// `rho(w, x; y, z)`: whether the `w`-`x` geodesic meets the `y`-`z`
    /// geodesic.
    pub fn quartet(&self, w: Label, x: Label, y: Label, z: Label) -> Result<bool> {
        let [a, b, c, d] = self.quartet_indices(w, x, y, z)?;
        Ok(self.pairing_idx(a, b, c, d) != Pairing::AB)
    }

    /// Whether `wx|yz` is the split of the four leaves, i.e. `rho` is false.
    pub fn is_split(&self, w: Label, x: Label, y: Label, z: Label) -> Result<bool> {
        self.quartet(w, x, y, z).map(|r| !r)
    }

    pub fn quartet_table(&self) -> QuartetTable {
        let n = self.leaves.len();
        let mut splits = BTreeMap::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let partner = match self.pairing_idx(a, b, c, d) {
                            Pairing::AB => b,
                            Pairing::AC => c,
                            Pairing::AD => d,
                        };
                        let key = [self.leaves[a], self.leaves[b], self.leaves[c], self.leaves[d]];
                        splits.insert(key, self.leaves[partner]);
                    }
                }
            }
        }
        QuartetTable {
            leaves: self.leaves.clone(),
            splits,
        }
    }

    /// The boron tree induced on a subset of the leaves: the spanning subtree
    /// of `subset` with every degree-two vertex suppressed.
    pub fn induced(&self, subset: &[Label]) -> Result<BoronTree> {
        let mut keep: Vec<Label> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.len() < 2 {
            return Err(Error::TooFewLeaves {
                needed: 2,
                got: keep.len(),
            });
        }
        let mut in_subset = vec![false; self.adj.len()];
        for &l in &keep {
            in_subset[self.leaf_vertex(l)?] = true;
        }
        let root = self.leaf_vertex(keep[0])?;
        // iterative DFS from root, then mark vertices whose subtree meets the subset
        let mut parent = vec![usize::MAX; self.adj.len()];
        let mut order = Vec::with_capacity(self.adj.len());
        let mut stack = vec![root];
        parent[root] = root;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        let mut kept = in_subset;
        for &u in order.iter().rev() {
            if kept[u] && u != root {
                kept[parent[u]] = true;
            }
        }
        let kdeg: Vec<usize> = (0..self.adj.len())
            .map(|u| {
                if kept[u] {
                    self.adj[u].iter().filter(|&&w| kept[w]).count()
                } else {
                    0
                }
            })
            .collect();
        let mut new_id = vec![usize::MAX; self.adj.len()];
        let mut count = 0;
        for u in 0..self.adj.len() {
            if kept[u] && kdeg[u] != 2 {
                new_id[u] = count;
                count += 1;
            }
        }
        let mut edges = Vec::with_capacity(count.saturating_sub(1));
        for u in 0..self.adj.len() {
            if new_id[u] == usize::MAX {
                continue;
            }
            for &first in &self.adj[u] {
                if !kept[first] {
                    continue;
                }
                let (mut prev, mut cur) = (u, first);
                while new_id[cur] == usize::MAX {
                    let next = self.adj[cur]
                        .iter()
                        .copied()
                        .find(|&w| kept[w] && w != prev)
                        .expect("degree-two chain continues");
                    prev = cur;
                    cur = next;
                }
                if new_id[u] < new_id[cur] {
                    edges.push((new_id[u], new_id[cur]));
                }
            }
        }
        let labels: Vec<(usize, Label)> = keep
            .iter()
            .map(|&l| (new_id[self.leaf_vertex[self.index_of(l).unwrap()]], l))
            .collect();
        BoronTree::from_edges(count, &edges, &labels)
    }

    /// Renames every leaf; the map must be injective on the leaves.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Result<BoronTree> {
        let labels: Vec<(usize, Label)> = self
            .labels
            .iter()
            .enumerate()
            .filter_map(|(v, l)| l.map(|l| (v, f(l))))
            .collect();
        BoronTree::from_edges(self.adj.len(), &self.edges(), &labels)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.adj.len().saturating_sub(1));
        for (u, ns) in self.adj.iter().enumerate() {
            for &w in ns {
                if u < w {
                    out.push((u, w));
                }
            }
        }
        out
    }

    /// Leaves on the `to` side of the edge `(from, to)`.
    pub(crate) fn side_leaves(&self, from: usize, to: usize) -> Vec<Label> {
        let mut out = Vec::new();
        let mut stack = vec![(to, from)];
        while let Some((u, p)) = stack.pop() {
            if let Some(l) = self.labels[u] {
                out.push(l);
            }
            for &w in &self.adj[u] {
                if w != p {
                    stack.push((w, u));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_isomorphic(&self, other: &BoronTree) -> bool {
        self.leaf_count() == other.leaf_count()
            && self.vertex_count() == other.vertex_count()
            && self.canonical_form() == other.canonical_form()
    }
}

impl PartialEq for BoronTree {
    fn eq(&self, other: &Self) -> bool {
        self.leaves == other.leaves && self.to_newick() == other.to_newick()
    }
}

impl Eq for BoronTree {}

impl Hash for BoronTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.to_newick().hash(state);
    }
}

impl fmt::Debug for BoronTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoronTree({})", self.to_newick())
    }
}

impl fmt::Display for BoronTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_newick())
    }
}

/// The quartet relation of a tree, stored as the split of every 4-subset.
///
/// For a sorted 4-set `{a < b < c < d}` the table records the leaf paired
/// with `a` in the split. `rho(w, x; y, z)` holds for exactly the two
/// pairings that are not the split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuartetTable {
    leaves: Vec<Label>,
    splits: BTreeMap<[Label; 4], Label>,
}

impl QuartetTable {
    pub fn leaves(&self) -> &[Label] {
        &self.leaves
    }

    pub fn len(&self) -> usize {
        self.splits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.splits.is_empty()
    }

    pub fn splits(&self) -> impl Iterator<Item = (&[Label; 4], &Label)> {
        self.splits.iter()
    }

    pub fn holds(&self, w: Label, x: Label, y: Label, z: Label) -> Result<bool> {
        for l in [w, x, y, z] {
            if self.leaves.binary_search(&l).is_err() {
                return Err(Error::InvalidLeaf(l));
            }
        }
        let mut key = [w, x, y, z];
        key.sort_unstable();
        if key.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::DegenerateQuartet);
        }
        let partner = self.splits[&key];
        let smallest = key[0];
        // wx|yz is the split iff {w,x} is the pair containing the smallest leaf
        // or the complementary pair
        let pair_with_smallest = if w == smallest || x == smallest {
            [w, x]
        } else {
            [y, z]
        };
        Ok(!pair_with_smallest.contains(&partner))
    }

    /// The table of the induced structure on a subset of the leaves.
    pub fn restrict(&self, subset: &[Label]) -> QuartetTable {
        let mut leaves: Vec<Label> = subset
            .iter()
            .copied()
            .filter(|l| self.leaves.binary_search(l).is_ok())
            .collect();
        leaves.sort_unstable();
        leaves.dedup();
        let splits = self
            .splits
            .iter()
            .filter(|(k, _)| k.iter().all(|l| leaves.binary_search(l).is_ok()))
            .map(|(k, v)| (*k, *v))
            .collect();
        QuartetTable { leaves, splits }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn quartet_tree() -> BoronTree {
        parse_newick("((1,2),(3,4));").unwrap()
    }

    #[test]
    fn quartet_on_12_34() {
        let t = quartet_tree();
        assert!(!t.quartet(1, 2, 3, 4).unwrap());
        assert!(t.quartet(1, 3, 2, 4).unwrap());
        assert!(t.quartet(1, 4, 2, 3).unwrap());
        assert_eq!(t.quartet(3, 4, 1, 2).unwrap(), t.quartet(1, 2, 3, 4).unwrap());
    }

    #[test]
    fn quartet_errors() {
        let t = quartet_tree();
        assert_eq!(t.quartet(1, 2, 3, 9), Err(Error::InvalidLeaf(9)));
        assert_eq!(t.quartet(1, 2, 3, 3), Err(Error::DegenerateQuartet));
    }

    #[test]
    fn table_matches_direct_queries() {
        let t = parse_newick("(((1,2),(3,4)),((5,6),(7,8)),((9,10),(11,12)));").unwrap();
        let table = t.quartet_table();
        assert_eq!(table.len(), 495);
        for (w, x, y, z) in [(1, 2, 3, 4), (1, 5, 9, 12), (12, 3, 7, 1), (2, 8, 10, 4)] {
            assert_eq!(table.holds(w, x, y, z).unwrap(), t.quartet(w, x, y, z).unwrap());
        }
    }

    #[test]
    fn induced_small_subsets() {
        let t = quartet_tree();
        assert_eq!(
            t.induced(&[1]),
            Err(Error::TooFewLeaves { needed: 2, got: 1 })
        );
        assert_eq!(t.induced(&[1, 7]), Err(Error::InvalidLeaf(7)));
        let e = t.induced(&[2, 4]).unwrap();
        assert_eq!(e.vertex_count(), 2);
        assert_eq!(e.leaves(), &[2, 4]);
        let s = t.induced(&[1, 2, 4]).unwrap();
        assert_eq!(s.vertex_count(), 4);
        assert_eq!(t.induced(&[1, 2, 3, 4]).unwrap(), t);
    }

    #[test]
    fn rejects_non_boron_graphs() {
        // star with four leaves
        let r = BoronTree::from_edges(
            5,
            &[(4, 0), (4, 1), (4, 2), (4, 3)],
            &[(0, 1), (1, 2), (2, 3), (3, 4)],
        );
        assert!(matches!(r, Err(Error::InvalidTree(_))));
        // duplicate labels
        let r = BoronTree::from_edges(2, &[(0, 1)], &[(0, 1), (1, 1)]);
        assert!(matches!(r, Err(Error::InvalidTree(_))));
        // cycle-ish: wrong edge count
        let r = BoronTree::from_edges(3, &[(0, 1)], &[(0, 1), (1, 2), (2, 3)]);
        assert!(matches!(r, Err(Error::InvalidTree(_))));
    }

    #[test]
    fn degenerate_trees_have_no_quartets() {
        let t = BoronTree::single(5);
        assert_eq!(t.leaf_count(), 1);
        assert!(t.quartet_table().is_empty());
        let e = BoronTree::star(&[1, 2]).unwrap();
        assert_eq!(e.quartet(1, 2, 1, 2), Err(Error::DegenerateQuartet));
    }
}
