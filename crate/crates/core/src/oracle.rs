//! Slow reference implementations, kept independent of the fast paths they
//! check: the quartet relation by explicit geodesics, embeddings by
//! filtering all injections, labeled boron trees from Pruefer codes, the
//! discriminant by the Leibniz expansion, and the Higman order by trying
//! every increasing position map.

use std::collections::{BTreeSet, HashSet, VecDeque};

use itertools::Itertools;
use num_traits::Zero;

use crate::algebra::{Coeff, Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::tree::{BoronTree, Label, LeafMap};
use crate::Elem;

/// Vertices on the unique path between two vertices.
fn geodesic(t: &BoronTree, from: usize, to: usize) -> BTreeSet<usize> {
    let mut parent = vec![usize::MAX; t.vertex_count()];
    let mut queue = VecDeque::from([from]);
    parent[from] = from;
    while let Some(u) = queue.pop_front() {
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = BTreeSet::from([to]);
    let mut v = to;
    while v != from {
        v = parent[v];
        path.insert(v);
    }
    path
}

/// Whether the `w-x` and `y-z` geodesics share a vertex.
pub fn quartet_by_paths(t: &BoronTree, w: Label, x: Label, y: Label, z: Label) -> Result<bool> {
    let vs = [w, x, y, z]
        .iter()
        .map(|&l| t.leaf_vertex(l))
        .collect::<Result<Vec<_>>>()?;
    if vs.iter().collect::<HashSet<_>>().len() < 4 {
        return Err(Error::DegenerateQuartet);
    }
    let p = geodesic(t, vs[0], vs[1]);
    let q = geodesic(t, vs[2], vs[3]);
    Ok(!p.is_disjoint(&q))
}

/// The quartet relation of a tree as a dense table over leaf positions.
pub struct PathQuartets {
    leaves: Vec<Label>,
    rho: Vec<bool>,
}

impl PathQuartets {
    pub fn new(t: &BoronTree) -> Self {
        let leaves = t.leaves().to_vec();
        let n = leaves.len();
        let verts: Vec<usize> = leaves.iter().map(|&l| t.leaf_vertex(l).unwrap()).collect();
        let mut paths = vec![BTreeSet::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                paths[i * n + j] = geodesic(t, verts[i], verts[j]);
            }
        }
        let mut rho = vec![false; n * n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if [a, b, c, d].iter().collect::<HashSet<_>>().len() == 4 {
                            rho[((a * n + b) * n + c) * n + d] =
                                !paths[a * n + b].is_disjoint(&paths[c * n + d]);
                        }
                    }
                }
            }
        }
        PathQuartets { leaves, rho }
    }

    pub fn leaves(&self) -> &[Label] {
        &self.leaves
    }

    /// By positions in the sorted leaf list.
    pub fn holds(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let n = self.leaves.len();
        self.rho[((a * n + b) * n + c) * n + d]
    }
}

/// All injections `leaves(small) -> leaves(big)` under which the quartet
/// relation is preserved and reflected, found by checking every injection.
pub fn brute_force_embeddings(small: &BoronTree, big: &BoronTree) -> Vec<LeafMap> {
    let (ps, pb) = (PathQuartets::new(small), PathQuartets::new(big));
    let k = ps.leaves.len();
    let quads: Vec<[usize; 4]> = (0..k)
        .combinations(4)
        .flat_map(|c| {
            [
                [c[0], c[1], c[2], c[3]],
                [c[0], c[2], c[1], c[3]],
                [c[0], c[3], c[1], c[2]],
            ]
        })
        .collect();
    let mut out: Vec<LeafMap> = (0..pb.leaves.len())
        .permutations(k)
        .filter(|img| {
            quads
                .iter()
                .all(|q| ps.holds(q[0], q[1], q[2], q[3]) == pb.holds(img[q[0]], img[q[1]], img[q[2]], img[q[3]]))
        })
        .map(|img| {
            LeafMap::new(
                img.iter()
                    .enumerate()
                    .map(|(i, &j)| (ps.leaves[i], pb.leaves[j]))
                    .collect(),
            )
        })
        .collect();
    out.sort();
    out
}

/// Sequences over `items` in which item `i` appears `counts[i]` times.
fn multiset_permutations(counts: &mut [usize], len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for i in 0..counts.len() {
        if counts[i] > 0 {
            counts[i] -= 1;
            cur.push(i);
            multiset_permutations(counts, len, cur, out);
            cur.pop();
            counts[i] += 1;
        }
    }
}

fn prufer_decode(seq: &[usize], v: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1; v];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(v - 1);
    for &s in seq {
        let leaf = (0..v).find(|&i| degree[i] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..v).filter(|&i| degree[i] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Boron trees with leaves `1..=n`, from Pruefer codes in which each of the
/// `n - 2` internal vertices appears exactly twice (degree 3) and no leaf
/// appears. Internal labels are then forgotten. Sorted by Newick text.
pub fn prufer_boron_trees(n: usize) -> Result<Vec<BoronTree>> {
    if n < 2 {
        return Err(Error::TooFewLeaves { needed: 2, got: n });
    }
    let v = 2 * n - 2;
    let mut counts = vec![2; n - 2];
    let mut seqs = Vec::new();
    multiset_permutations(&mut counts, 2 * (n - 2), &mut Vec::new(), &mut seqs);
    let labels: Vec<(usize, Label)> = (0..n).map(|i| (i, i as Label + 1)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for seq in seqs {
        let seq: Vec<usize> = seq.into_iter().map(|i| i + n).collect();
        let t = BoronTree::from_edges(v, &prufer_decode(&seq, v), &labels)?;
        if seen.insert(t.to_newick()) {
            out.push(t);
        }
    }
    out.sort_by_key(|t| t.to_newick());
    Ok(out)
}

fn sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `det [x_{v_i}^{n-1-j}]`, expanded over all permutations.
pub fn leibniz_discriminant(ring: &Ring, vars: &[Elem]) -> Result<Polynomial> {
    let n = vars.len();
    let idx = vars
        .iter()
        .map(|&v| {
            ring.index_of(v)
                .ok_or_else(|| Error::BadRenaming(format!("{v} is not a variable of {ring:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if idx.iter().collect::<HashSet<_>>().len() < n {
        return Err(Error::BadRenaming("repeated variable".into()));
    }
    let mut acc = Polynomial::zero(ring);
    for perm in (0..n).permutations(n) {
        let mut e = vec![0u32; ring.len()];
        for (i, &p) in perm.iter().enumerate() {
            e[idx[i]] = (n - 1 - p) as u32;
        }
        let c = Coeff::from_integer(sign(&perm).into());
        acc = &acc + &Polynomial::from_terms(ring, [(Monomial(e), c)]);
    }
    Ok(acc)
}

/// Tries every strictly increasing position map.
pub fn higman_brute<T>(u: &[T], v: &[T], leq: impl Fn(&T, &T) -> bool) -> bool {
    if u.len() > v.len() {
        return false;
    }
    (0..v.len())
        .combinations(u.len())
        .any(|pos| pos.iter().enumerate().all(|(i, &j)| leq(&u[i], &v[j])))
}

/// Evaluates every polynomial of `gens` at a point; true iff all vanish.
pub fn all_vanish(gens: &[Polynomial], point: &[Coeff]) -> Result<bool> {
    for g in gens {
        if !g.eval(point)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
