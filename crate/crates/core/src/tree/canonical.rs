use std::fmt;

use super::BoronTree;

/// Label-independent encoding of a boron tree: equal iff the unlabeled trees
/// are isomorphic.
///
/// Each vertex is tried as a root; the rooted tree is encoded AHU style
/// (`(` + sorted child codes + `)`) and the lexicographically smallest code is
/// kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl BoronTree {
    pub fn canonical_form(&self) -> CanonicalForm {
        let best = (0..self.vertex_count())
            .map(|root| rooted_code(self, root, usize::MAX))
            .min()
            .expect("trees are non-empty");
        CanonicalForm(best)
    }
}

fn rooted_code(t: &BoronTree, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(t, w, v))
        .collect();
    children.sort_unstable();
    let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    s.push('(');
    for c in children {
        s.push_str(&c);
    }
    s.push(')');
    s
}
