use std::collections::BTreeSet;

use clap::Subcommand;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use boric::oracle::{brute_force_embeddings, prufer_boron_trees};
use boric::tree::{enumerate_embeddings, enumerate_labeled, parse_newick, BoronTree, LeafMap};

use crate::input::{parse_labels, read_arg, Failure, Within};
use crate::{Global, Report};

#[derive(Subcommand)]
pub enum TreeCommand {
    /// Print the tree induced on a set of leaves
    Induce {
        /// Newick file, `-` for stdin, or an inline Newick string
        tree: String,
        /// Leaves, e.g. 1,3,7
        leaves: String,
    },
    /// Decide whether two trees are isomorphic
    Iso { a: String, b: String },
    /// List the embeddings of one tree into another
    Embed {
        small: String,
        big: String,
        /// Print only the number of embeddings
        #[arg(long)]
        count: bool,
    },
    /// List the boron trees with leaves 1..=n
    Enumerate {
        n: usize,
        #[arg(long)]
        count: bool,
        /// Report isomorphism classes instead of labeled trees
        #[arg(long)]
        shapes: bool,
    },
    /// Print the canonical encoding of a tree's shape
    Canon { tree: String },
    /// Compare embedding enumeration with the brute-force filter on random trees
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

fn load(arg: &str) -> Result<BoronTree, Failure> {
    let src = read_arg(arg)?;
    parse_newick(src.text.trim_end()).within(&src)
}

fn map_json(m: &LeafMap) -> serde_json::Value {
    json!(m.pairs().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>())
}

fn show_map(m: &LeafMap) -> String {
    let parts: Vec<String> = m.pairs().iter().map(|(a, b)| format!("{a}->{b}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn oracle_embeddings(small: &BoronTree, big: &BoronTree, fast: &[LeafMap]) -> Result<(), Failure> {
    let slow = brute_force_embeddings(small, big);
    if slow != fast {
        return Err(Failure::Oracle(format!(
            "{} -> {}: {} embeddings, brute force finds {}",
            small.to_newick(),
            big.to_newick(),
            fast.len(),
            slow.len()
        )));
    }
    Ok(())
}

pub fn run(cmd: &TreeCommand, g: &Global) -> Result<Report, Failure> {
    match cmd {
        TreeCommand::Induce { tree, leaves } => {
            let t = load(tree)?;
            let s = parse_labels(leaves)?;
            let sub = t.induced(&s)?;
            Ok(Report::ok(sub.to_newick(), json!({ "tree": sub.to_newick(), "leaves": s })))
        }
        TreeCommand::Iso { a, b } => {
            let (ta, tb) = (load(a)?, load(b)?);
            let iso = ta.is_isomorphic(&tb);
            if g.oracle {
                let by_maps = ta.leaf_count() == tb.leaf_count() && !brute_force_embeddings(&ta, &tb).is_empty();
                if by_maps != iso {
                    return Err(Failure::Oracle(format!("canonical forms say {iso}, embeddings say {by_maps}")));
                }
            }
            let text = if iso { "isomorphic" } else { "not isomorphic" };
            Ok(Report::verdict(iso, text, json!({ "isomorphic": iso })))
        }
        TreeCommand::Embed { small, big, count } => {
            let (ts, tb) = (load(small)?, load(big)?);
            let maps = enumerate_embeddings(&ts, &tb);
            if g.oracle {
                oracle_embeddings(&ts, &tb, &maps)?;
            }
            let text = if *count {
                maps.len().to_string()
            } else {
                maps.iter().map(show_map).collect::<Vec<_>>().join("\n")
            };
            let json = json!({
                "count": maps.len(),
                "embeddings": if *count { json!(null) } else { json!(maps.iter().map(map_json).collect::<Vec<_>>()) },
            });
            Ok(Report::verdict(!maps.is_empty() || *count, text, json))
        }
        TreeCommand::Enumerate { n, count, shapes } => {
            let trees = enumerate_labeled(*n)?;
            if g.oracle {
                let ours: BTreeSet<String> = trees.iter().map(BoronTree::to_newick).collect();
                let theirs: BTreeSet<String> = prufer_boron_trees(*n)?.iter().map(BoronTree::to_newick).collect();
                if ours != theirs {
                    return Err(Failure::Oracle(format!(
                        "{} trees, Pruefer decoding finds {}",
                        ours.len(),
                        theirs.len()
                    )));
                }
            }
            let items: Vec<String> = if *shapes {
                let mut reps: Vec<BoronTree> = Vec::new();
                let mut seen = BTreeSet::new();
                for t in trees {
                    if seen.insert(t.canonical_form()) {
                        reps.push(t);
                    }
                }
                reps.iter().map(BoronTree::to_newick).collect()
            } else {
                trees.iter().map(BoronTree::to_newick).collect()
            };
            let text = if *count { items.len().to_string() } else { items.join("\n") };
            let key = if *shapes { "shapes" } else { "trees" };
            Ok(Report::ok(text, json!({ "count": items.len(), key: items })))
        }
        TreeCommand::Canon { tree } => {
            let t = load(tree)?;
            let c = t.canonical_form();
            Ok(Report::ok(c.as_str(), json!({ "canonical": c.as_str() })))
        }
        TreeCommand::Fuzz { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let pools: Vec<Vec<BoronTree>> = (2..=7).map(|n| enumerate_labeled(n).unwrap()).collect();
            let mut total = 0;
            for _ in 0..*count {
                let k = rng.gen_range(0..4);
                let m = rng.gen_range(k..6);
                let small = &pools[k][rng.gen_range(0..pools[k].len())];
                let big = &pools[m][rng.gen_range(0..pools[m].len())];
                let maps = enumerate_embeddings(small, big);
                oracle_embeddings(small, big, &maps)?;
                total += maps.len();
            }
            let text = format!("{count} random pairs agree with brute force ({total} embeddings, seed {seed})");
            Ok(Report::ok(text, json!({ "cases": count, "embeddings": total, "seed": seed })))
        }
    }
}
