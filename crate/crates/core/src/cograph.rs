//! Cograph recognition by complement-connectivity recursion, the resulting
//! cotree, and an exact biclique-number computation over the cotree.

use crate::graph::Graph;
use crate::{Error, Result};

/// Cotree of a cograph: leaves are vertices; internal nodes are disjoint
/// unions or complete joins of their children (each with at least two).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(cs) | Cotree::Join(cs) => cs.iter().for_each(|c| c.collect(out)),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Union(cs) | Cotree::Join(cs) => cs.iter().map(Cotree::size).sum(),
        }
    }
}

/// Cotree of `g`, or an error if `g` is not a cograph. Recursion: a graph
/// on at least two vertices is a union of its components if disconnected,
/// otherwise a join of the co-components of its complement; a connected
/// graph with connected complement and more than one vertex is not a
/// cograph.
pub fn cotree(g: &Graph) -> Result<Cotree> {
    let verts: Vec<usize> = (0..g.n()).collect();
    if verts.is_empty() {
        return Err(Error::InvalidInput("empty graph has no cotree".into()));
    }
    cotree_rec(g, &verts)
}

fn cotree_rec(g: &Graph, verts: &[usize]) -> Result<Cotree> {
    if verts.len() == 1 {
        return Ok(Cotree::Leaf(verts[0]));
    }
    let (sub, map) = g.induced(verts);
    let comps = sub.components();
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| {
                let orig: Vec<usize> = c.iter().map(|&v| map[v]).collect();
                cotree_rec(g, &orig)
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(Cotree::Union(children));
    }
    let co_comps = sub.complement().components();
    if co_comps.len() > 1 {
        let children = co_comps
            .iter()
            .map(|c| {
                let orig: Vec<usize> = c.iter().map(|&v| map[v]).collect();
                cotree_rec(g, &orig)
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(Cotree::Join(children));
    }
    Err(Error::NotACograph)
}

pub fn is_cograph(g: &Graph) -> bool {
    g.n() == 0 || cotree(g).is_ok()
}

/// Exact biclique number of a cograph via a cotree DP.
///
/// For each subtree compute `f[a]` = the largest `b` such that disjoint
/// vertex sets `A`, `B` with `|A| = a`, `|B| = b` and all `A`-`B` pairs
/// adjacent exist. Unions take the pointwise maximum (a biclique side
/// adjacent to anything cannot cross components); joins take the max-plus
/// convolution (cross pairs are free, within-side constraints split).
pub fn bomega_cotree(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let t = cotree(g)?;
    let f = biclique_profile(&t);
    Ok((1..f.len()).rev().find(|&s| f[s] >= s as i64).unwrap_or(0))
}

const NEG: i64 = i64::MIN / 2;

fn biclique_profile(t: &Cotree) -> Vec<i64> {
    match t {
        Cotree::Leaf(_) => vec![1, 0],
        Cotree::Union(cs) => {
            let profiles: Vec<Vec<i64>> = cs.iter().map(biclique_profile).collect();
            let n: usize = cs.iter().map(Cotree::size).sum();
            // an empty right side is always available, so no entry drops below 0
            let mut f = vec![0i64; n + 1];
            f[0] = n as i64; // with no left side, every vertex qualifies for the right
            for p in &profiles {
                for (a, &v) in p.iter().enumerate().skip(1) {
                    f[a] = f[a].max(v);
                }
            }
            f
        }
        Cotree::Join(cs) => {
            let mut acc = vec![0i64]; // empty graph: f[0] = 0
            for c in cs {
                let p = biclique_profile(c);
                let mut next = vec![NEG; acc.len() + p.len() - 1];
                for (a1, &v1) in acc.iter().enumerate() {
                    if v1 <= NEG {
                        continue;
                    }
                    for (a2, &v2) in p.iter().enumerate() {
                        if v2 <= NEG {
                            continue;
                        }
                        let t = &mut next[a1 + a2];
                        *t = (*t).max(v1 + v2);
                    }
                }
                acc = next;
            }
            acc
        }
    }
}
