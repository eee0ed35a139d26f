use std::fmt;

use super::{BoronTree, Label};

/// An injective map between leaf sets, stored as `(source, image)` pairs
/// sorted by source.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeafMap(Vec<(Label, Label)>);

impl LeafMap {
    pub fn new(mut pairs: Vec<(Label, Label)>) -> Self {
        pairs.sort_unstable();
        LeafMap(pairs)
    }

    pub fn pairs(&self) -> &[(Label, Label)] {
        &self.0
    }

    pub fn image(&self, l: Label) -> Option<Label> {
        self.0
            .binary_search_by_key(&l, |p| p.0)
            .ok()
            .map(|i| self.0[i].1)
    }

    pub fn images(&self) -> Vec<Label> {
        self.0.iter().map(|p| p.1).collect()
    }
}

impl fmt::Display for LeafMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(a, b)| format!("{a}->{b}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Whether a leaf map preserves and reflects the quartet relation.
pub fn is_embedding(small: &BoronTree, big: &BoronTree, map: &LeafMap) -> bool {
    if map.0.len() != small.leaf_count() {
        return false;
    }
    let mut img = Vec::with_capacity(map.0.len());
    for (i, &(s, t)) in map.0.iter().enumerate() {
        if s != small.leaves()[i] {
            return false;
        }
        match big.index_of(t) {
            Some(j) if !img.contains(&j) => img.push(j),
            _ => return false,
        }
    }
    (0..img.len()).all(|d| consistent_with_prefix(small, big, &img, d))
}

/// Checks every quartet whose largest source index is `d`.
#[inline]
fn consistent_with_prefix(small: &BoronTree, big: &BoronTree, img: &[usize], d: usize) -> bool {
    for a in 0..d {
        for b in a + 1..d {
            for c in b + 1..d {
                if small.pairing_idx(a, b, c, d) != big.pairing_idx(img[a], img[b], img[c], img[d]) {
                    return false;
                }
            }
        }
    }
    true
}

/// All embeddings `small -> big`: injections on leaves that preserve and
/// reflect the quartet relation.
///
/// Backtracking assigns the source leaves in increasing label order, trying
/// images in increasing label order, and prunes as soon as a quartet through
/// the newest leaf disagrees. The output is therefore sorted.
pub fn enumerate_embeddings(small: &BoronTree, big: &BoronTree) -> Vec<LeafMap> {
    let k = small.leaf_count();
    let n = big.leaf_count();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut img = Vec::with_capacity(k);
    let mut used = vec![false; n];
    search(small, big, &mut img, &mut used, &mut out);
    out
}

fn search(
    small: &BoronTree,
    big: &BoronTree,
    img: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<LeafMap>,
) {
    let d = img.len();
    if d == small.leaf_count() {
        let pairs = small
            .leaves()
            .iter()
            .zip(img.iter())
            .map(|(&s, &t)| (s, big.leaves()[t]))
            .collect();
        out.push(LeafMap(pairs));
        return;
    }
    for j in 0..used.len() {
        if used[j] {
            continue;
        }
        img.push(j);
        if consistent_with_prefix(small, big, img, d) {
            used[j] = true;
            search(small, big, img, used, out);
            used[j] = false;
        }
        img.pop();
    }
}
