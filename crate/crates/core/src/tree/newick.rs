//! Newick-like text format for boron trees.
//!
//! ```text
//! tree    := ordered | plain
//! ordered := "root=" LABEL ":" node ";"
//! plain   := node ";"
//! node    := LABEL | "(" node ("," node)* ")"
//! LABEL   := [0-9]+
//! ```
//!
//! Whitespace is allowed between tokens. Internal nodes are unlabeled. The
//! outermost node may have two children (it is then suppressed, as in a
//! rooted binary Newick string) or three children (it becomes a boron atom);
//! every other internal node must have exactly two children. A bare label
//! denotes the one-vertex tree.
//!
//! For ordered trees the left-to-right order of the leaves in the text is the
//! counterclockwise order around the disk. `root=5:((1,2),(3,4),5);` and
//! `root=5:(5,(1,2),(3,4));` denote the same ordered tree; serialization
//! always puts the root leaf first.

use super::{BoronTree, Label};
use crate::error::{Error, ParseError, Result};

/// A parsed tree together with the textual leaf order and optional root.
#[derive(Debug, Clone)]
pub struct ParsedTree {
    pub tree: BoronTree,
    pub leaf_order: Vec<Label>,
    pub root: Option<Label>,
}

enum Node {
    Leaf(Label),
    Inner(Vec<Node>, usize),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse(ParseError::new(self.pos, msg)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn label(&mut self) -> Result<Label> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a leaf label");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("leaf label out of range")
        })
    }

    fn node(&mut self) -> Result<Node> {
        match self.peek() {
            Some(b'(') => {
                let at = self.pos;
                self.pos += 1;
                let mut children = vec![self.node()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    children.push(self.node()?);
                }
                self.expect(b')')?;
                Ok(Node::Inner(children, at))
            }
            Some(c) if c.is_ascii_digit() => self.label().map(Node::Leaf),
            _ => self.err("expected `(` or a leaf label"),
        }
    }
}

/// Parses either form; see the module docs for the grammar.
pub fn parse_tree_any(text: &str) -> Result<ParsedTree> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let root = if p.src[p.pos..].starts_with(b"root=") {
        p.pos += 5;
        let r = p.label()?;
        p.expect(b':')?;
        Some(r)
    } else {
        None
    };
    let node = p.node()?;
    p.expect(b';')?;
    if p.peek().is_some() {
        return p.err("trailing input after `;`");
    }
    let mut b = Builder::default();
    let mut leaf_order = Vec::new();
    match &node {
        Node::Leaf(l) => {
            b.leaf(*l, &mut leaf_order);
        }
        Node::Inner(children, at) => match children.len() {
            2 => {
                let u = b.subtree(&children[0], &mut leaf_order)?;
                let v = b.subtree(&children[1], &mut leaf_order)?;
                b.edges.push((u, v));
            }
            3 => {
                let c = b.fresh();
                for child in children {
                    let u = b.subtree(child, &mut leaf_order)?;
                    b.edges.push((c, u));
                }
            }
            k => {
                return Err(Error::Parse(ParseError::new(
                    *at,
                    format!("outermost node has {k} children; expected 2 or 3"),
                )))
            }
        },
    }
    let tree = BoronTree::from_edges(b.count, &b.edges, &b.labels).map_err(|e| match e {
        Error::InvalidTree(m) => Error::Parse(ParseError::new(0, m)),
        other => other,
    })?;
    if let Some(r) = root {
        if !tree.contains_leaf(r) {
            return Err(Error::Parse(ParseError::new(
                5,
                format!("root {r} is not a leaf of the tree"),
            )));
        }
    }
    Ok(ParsedTree {
        tree,
        leaf_order,
        root,
    })
}

/// Parses an unordered tree. A `root=` prefix is accepted and ignored.
pub fn parse_newick(text: &str) -> Result<BoronTree> {
    parse_tree_any(text).map(|p| p.tree)
}

/// Parses an ordered tree; the `root=` prefix is required.
pub fn parse_ordered_newick(text: &str) -> Result<super::OrderedBoronTree> {
    let parsed = parse_tree_any(text)?;
    let Some(root) = parsed.root else {
        return Err(Error::Parse(ParseError::new(0, "ordered tree needs a `root=LABEL:` prefix")));
    };
    super::OrderedBoronTree::new(parsed.tree, root, parsed.leaf_order)
}

#[derive(Default)]
struct Builder {
    count: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<(usize, Label)>,
}

impl Builder {
    fn fresh(&mut self) -> usize {
        self.count += 1;
        self.count - 1
    }

    fn leaf(&mut self, l: Label, order: &mut Vec<Label>) -> usize {
        let v = self.fresh();
        self.labels.push((v, l));
        order.push(l);
        v
    }

    fn subtree(&mut self, node: &Node, order: &mut Vec<Label>) -> Result<usize> {
        match node {
            Node::Leaf(l) => Ok(self.leaf(*l, order)),
            Node::Inner(children, at) => {
                if children.len() != 2 {
                    return Err(Error::Parse(ParseError::new(
                        *at,
                        format!(
                            "internal node has {} children; boron atoms need exactly 2 below them",
                            children.len()
                        ),
                    )));
                }
                let v = self.fresh();
                for child in children {
                    let u = self.subtree(child, order)?;
                    self.edges.push((v, u));
                }
                Ok(v)
            }
        }
    }
}

impl BoronTree {
    /// Canonical labeled serialization: rooted at the neighbor of the
    /// smallest leaf, children sorted by their smallest leaf.
    pub fn to_newick(&self) -> String {
        match self.vertex_count() {
            1 => format!("{};", self.leaves()[0]),
            2 => format!("({},{});", self.leaves()[0], self.leaves()[1]),
            _ => {
                let s = self.leaf_vertex[0];
                let c = self.neighbors(s)[0];
                let mut parts: Vec<(Label, String)> = self
                    .neighbors(c)
                    .iter()
                    .map(|&w| write_sorted(self, w, c))
                    .collect();
                parts.sort();
                let body: Vec<String> = parts.into_iter().map(|p| p.1).collect();
                format!("({});", body.join(","))
            }
        }
    }
}

fn write_sorted(t: &BoronTree, v: usize, parent: usize) -> (Label, String) {
    if let Some(l) = t.label_of(v) {
        return (l, l.to_string());
    }
    let mut parts: Vec<(Label, String)> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| write_sorted(t, w, v))
        .collect();
    parts.sort();
    let min = parts[0].0;
    let body: Vec<String> = parts.into_iter().map(|p| p.1).collect();
    (min, format!("({})", body.join(",")))
}
