use std::fmt;

use super::{BoronTree, Label};
use crate::error::{Error, Result};

/// A planar boron tree with a distinguished root leaf.
///
/// `order` lists the leaves counterclockwise starting at the root, so the
/// induced total order is `order[1] < order[2] < ... < root`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedBoronTree {
    tree: BoronTree,
    order: Vec<Label>,
}

impl OrderedBoronTree {
    /// Validates that `arrangement` is a counterclockwise leaf order that some
    /// crossing-free drawing realizes: the leaves on each side of every edge
    /// must occupy a contiguous arc.
    pub fn new(tree: BoronTree, root: Label, arrangement: Vec<Label>) -> Result<Self> {
        if !tree.contains_leaf(root) {
            return Err(Error::InvalidLeaf(root));
        }
        let mut sorted = arrangement.clone();
        sorted.sort_unstable();
        if sorted != tree.leaves() {
            return Err(Error::NotPlanar(
                "arrangement is not a permutation of the leaves".into(),
            ));
        }
        let start = arrangement.iter().position(|&l| l == root).unwrap();
        let mut order = arrangement;
        order.rotate_left(start);
        let out = OrderedBoronTree { tree, order };
        out.check_arcs()?;
        Ok(out)
    }

    fn check_arcs(&self) -> Result<()> {
        let n = self.order.len();
        if n <= 3 {
            return Ok(());
        }
        for (u, v) in self.tree.edges() {
            let side = self.tree.side_leaves(u, v);
            let inside: Vec<bool> = self
                .order
                .iter()
                .map(|l| side.binary_search(l).is_ok())
                .collect();
            let boundaries = (0..n).filter(|&i| inside[i] != inside[(i + 1) % n]).count();
            if boundaries > 2 {
                return Err(Error::NotPlanar(format!(
                    "leaves {side:?} are not contiguous around the circle"
                )));
            }
        }
        Ok(())
    }

    /// Planar structure read off a depth-first walk from `root`.
    pub fn from_tree(tree: BoronTree, root: Label) -> Result<Self> {
        let rv = tree.leaf_vertex(root)?;
        let mut order = Vec::with_capacity(tree.leaf_count());
        let mut stack = vec![(rv, usize::MAX)];
        while let Some((u, p)) = stack.pop() {
            if let Some(l) = tree.label_of(u) {
                order.push(l);
            }
            for &w in tree.neighbors(u).iter().rev() {
                if w != p {
                    stack.push((w, u));
                }
            }
        }
        OrderedBoronTree::new(tree, root, order)
    }

    /// Every ordered structure on `tree`: each choice of root leaf and each
    /// choice of left/right at every boron atom.
    pub fn all_orderings(tree: &BoronTree) -> Vec<OrderedBoronTree> {
        let mut out = Vec::new();
        for &root in tree.leaves() {
            let rv = tree.leaf_vertex(root).unwrap();
            let mut orders = vec![vec![root]];
            if let Some(&b) = tree.neighbors(rv).first() {
                orders = planar_orders(tree, b, rv)
                    .into_iter()
                    .map(|tail| {
                        let mut o = vec![root];
                        o.extend(tail);
                        o
                    })
                    .collect();
            }
            for o in orders {
                out.push(OrderedBoronTree::new(tree.clone(), root, o).expect("dfs orders are planar"));
            }
        }
        out
    }

    pub fn tree(&self) -> &BoronTree {
        &self.tree
    }

    pub fn into_tree(self) -> BoronTree {
        self.tree
    }

    pub fn root(&self) -> Label {
        self.order[0]
    }

    /// Counterclockwise arrangement starting at the root.
    pub fn arrangement(&self) -> &[Label] {
        &self.order
    }

    /// Leaves in increasing order; the root comes last.
    pub fn leaf_order(&self) -> Vec<Label> {
        let mut out = self.order[1..].to_vec();
        out.push(self.order[0]);
        out
    }

    /// Position in the total order (0-based); the root has the largest rank.
    pub fn rank(&self, l: Label) -> Result<usize> {
        let p = self
            .order
            .iter()
            .position(|&x| x == l)
            .ok_or(Error::InvalidLeaf(l))?;
        Ok(if p == 0 { self.order.len() - 1 } else { p - 1 })
    }

    /// `x < y` in the leaf order: `x` lies between the root and `y`.
    pub fn less(&self, x: Label, y: Label) -> Result<bool> {
        Ok(self.rank(x)? < self.rank(y)?)
    }

    /// Splits the non-root leaves by the two subtrees below the root's
    /// neighbor. Each part keeps the root and inherits the induced structure
    /// and arrangement; every leaf of the left part precedes every leaf of the
    /// right part.
    pub fn root_decomposition(&self) -> Result<(OrderedBoronTree, OrderedBoronTree)> {
        if self.order.len() < 3 {
            return Err(Error::TooSmall);
        }
        let root = self.root();
        let rv = self.tree.leaf_vertex(root)?;
        let b = self.tree.neighbors(rv)[0];
        let mut sides: Vec<Vec<Label>> = self
            .tree
            .neighbors(b)
            .iter()
            .filter(|&&w| w != rv)
            .map(|&w| self.tree.side_leaves(b, w))
            .collect();
        if sides[0].binary_search(&self.order[1]).is_err() {
            sides.swap(0, 1);
        }
        let mut parts = sides.into_iter().map(|mut side| {
            side.push(root);
            let sub = self.tree.induced(&side)?;
            side.sort_unstable();
            let arrangement: Vec<Label> = self
                .order
                .iter()
                .copied()
                .filter(|l| side.binary_search(l).is_ok())
                .collect();
            OrderedBoronTree::new(sub, root, arrangement)
        });
        let left = parts.next().unwrap()?;
        let right = parts.next().unwrap()?;
        Ok((left, right))
    }

    /// Inverse of [`root_decomposition`](Self::root_decomposition): joins two
    /// ordered trees with the same root at a new boron atom next to the root.
    pub fn graft(left: &OrderedBoronTree, right: &OrderedBoronTree) -> Result<OrderedBoronTree> {
        let root = left.root();
        if right.root() != root {
            return Err(Error::InvalidTree("parts have different roots".into()));
        }
        if left.order.len() < 2 || right.order.len() < 2 {
            return Err(Error::TooFewLeaves {
                needed: 2,
                got: left.order.len().min(right.order.len()),
            });
        }
        if left.order[1..].iter().any(|l| right.order[1..].contains(l)) {
            return Err(Error::InvalidTree("parts share a non-root leaf".into()));
        }
        let (lt, rt) = (&left.tree, &right.tree);
        let nl = lt.vertex_count();
        let l_root = lt.leaf_vertex(root)?;
        let r_root = rt.leaf_vertex(root)?;
        // right vertex ids shift by nl, except that the right root is dropped
        let rid = |v: usize| if v < r_root { nl + v } else { nl + v - 1 };
        let b = nl + rt.vertex_count() - 1;
        let mut edges = Vec::new();
        for (u, v) in lt.edges() {
            if u == l_root || v == l_root {
                edges.push((b, u + v - l_root));
            } else {
                edges.push((u, v));
            }
        }
        for (u, v) in rt.edges() {
            if u == r_root || v == r_root {
                edges.push((b, rid(u + v - r_root)));
            } else {
                edges.push((rid(u), rid(v)));
            }
        }
        edges.push((l_root, b));
        let mut labels = Vec::new();
        for v in 0..nl {
            if let Some(l) = lt.label_of(v) {
                labels.push((v, l));
            }
        }
        for v in 0..rt.vertex_count() {
            if v != r_root {
                if let Some(l) = rt.label_of(v) {
                    labels.push((rid(v), l));
                }
            }
        }
        let tree = BoronTree::from_edges(b + 1, &edges, &labels)?;
        let mut order = left.order.clone();
        order.extend_from_slice(&right.order[1..]);
        OrderedBoronTree::new(tree, root, order)
    }

    /// `root=R:(R,...);` with children written in planar order.
    pub fn to_newick(&self) -> String {
        let root = self.root();
        let t = &self.tree;
        let body = match t.vertex_count() {
            1 => root.to_string(),
            2 => format!("({},{})", root, self.order[1]),
            _ => {
                let rv = t.leaf_vertex(root).unwrap();
                let b = t.neighbors(rv)[0];
                let mut parts = vec![root.to_string()];
                parts.extend(self.planar_children(b, rv).into_iter().map(|w| self.write(w, b)));
                format!("({})", parts.join(","))
            }
        };
        format!("root={root}:{body};")
    }

    fn first_position(&self, v: usize, parent: usize) -> usize {
        self.tree
            .side_leaves(parent, v)
            .iter()
            .map(|l| self.order.iter().position(|x| x == l).unwrap())
            .min()
            .unwrap()
    }

    fn planar_children(&self, v: usize, parent: usize) -> Vec<usize> {
        let mut kids: Vec<usize> = self
            .tree
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| w != parent)
            .collect();
        kids.sort_by_key(|&w| self.first_position(w, v));
        kids
    }

    fn write(&self, v: usize, parent: usize) -> String {
        if let Some(l) = self.tree.label_of(v) {
            return l.to_string();
        }
        let parts: Vec<String> = self
            .planar_children(v, parent)
            .into_iter()
            .map(|w| self.write(w, v))
            .collect();
        format!("({})", parts.join(","))
    }
}

/// Leaf sequences of the subtree at `v` (entered from `parent`) over all
/// left/right choices.
fn planar_orders(tree: &BoronTree, v: usize, parent: usize) -> Vec<Vec<Label>> {
    if let Some(l) = tree.label_of(v) {
        return vec![vec![l]];
    }
    let kids: Vec<usize> = tree
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| w != parent)
        .collect();
    let a = planar_orders(tree, kids[0], v);
    let b = planar_orders(tree, kids[1], v);
    let mut out = Vec::with_capacity(2 * a.len() * b.len());
    for x in &a {
        for y in &b {
            out.push(x.iter().chain(y).copied().collect());
        }
    }
    for x in &a {
        for y in &b {
            out.push(y.iter().chain(x).copied().collect());
        }
    }
    out
}

impl fmt::Debug for OrderedBoronTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedBoronTree({})", self.to_newick())
    }
}

impl fmt::Display for OrderedBoronTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_newick())
    }
}
