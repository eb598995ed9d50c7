//! Classification of induced sub-diagrams of the Dynkin diagram.
//!
//! Support reduction and the pair-classification tables both need to know,
//! for an arbitrary set of simple nodes, which simple types its connected
//! components form and how the component nodes map onto the canonical node
//! labels of that type (for D and E, the labelings fixed in `rootsys`).

use crate::rootsys::{cartan_matrix, CartanType, Family, RootSystem};
use crate::weyl::SimpleSet;

/// One connected component of an induced sub-diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramComponent {
    /// Ambient simple indices, ascending.
    pub nodes: Vec<usize>,
    pub family: Family,
    pub rank: usize,
    /// `canonical[i]` is the ambient node carrying canonical label `i + 1`.
    pub canonical: Vec<usize>,
}

impl DiagramComponent {
    pub fn node_set(&self) -> SimpleSet {
        SimpleSet::from_indices(self.nodes.iter().copied())
    }

    /// Canonical 1-based label of an ambient node in this component.
    pub fn label_of(&self, ambient: usize) -> Option<usize> {
        self.canonical.iter().position(|&n| n == ambient).map(|p| p + 1)
    }

    /// Maps an ambient subset into canonical labels (bit `i` = label `i + 1`).
    pub fn to_canonical(&self, ambient: SimpleSet) -> SimpleSet {
        let mut out = SimpleSet::empty();
        for (pos, &node) in self.canonical.iter().enumerate() {
            if ambient.contains(node) {
                out.insert(pos);
            }
        }
        out
    }
}

/// Connected components of the sub-diagram induced on `set`, classified.
pub fn components(sys: &RootSystem, set: SimpleSet) -> Vec<DiagramComponent> {
    let cartan = |i: usize, j: usize| sys.cartan(i, j);
    components_impl(sys.rank(), set, &cartan)
}

/// Same, from a bare Cartan type (no root system needed).
pub fn components_of_type(ctype: CartanType, set: SimpleSet) -> Vec<DiagramComponent> {
    let c = cartan_matrix(ctype);
    let cartan = |i: usize, j: usize| c[i][j];
    components_impl(ctype.rank(), set, &cartan)
}

fn components_impl(rank: usize, set: SimpleSet, cartan: &dyn Fn(usize, usize) -> i32) -> Vec<DiagramComponent> {
    let nodes: Vec<usize> = set.iter().filter(|&i| i < rank).collect();
    let adjacent = |i: usize, j: usize| i != j && cartan(i, j) != 0;
    let mut seen = vec![false; rank];
    let mut out = Vec::new();
    for &start in &nodes {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in &nodes {
                if !seen[v] && adjacent(u, v) {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(classify(comp, cartan));
    }
    out.sort_by_key(|c| c.nodes[0]);
    out
}

fn classify(nodes: Vec<usize>, cartan: &dyn Fn(usize, usize) -> i32) -> DiagramComponent {
    let rank = nodes.len();
    let adj: Vec<Vec<usize>> = nodes
        .iter()
        .map(|&u| {
            nodes
                .iter()
                .copied()
                .filter(|&v| v != u && cartan(u, v) != 0)
                .collect()
        })
        .collect();
    let deg = |k: usize| adj[k].len();
    let pos = |u: usize| nodes.iter().position(|&n| n == u).unwrap();

    if rank == 1 {
        return DiagramComponent {
            canonical: nodes.clone(),
            family: Family::A,
            rank,
            nodes,
        };
    }

    // Bond multiplicities m_ij = C[i][j] * C[j][i].
    let mut max_bond = 1;
    let mut bond_pair = None;
    for (k, &u) in nodes.iter().enumerate() {
        for &v in &adj[k] {
            if v > u {
                let m = cartan(u, v) * cartan(v, u);
                if m > max_bond {
                    max_bond = m;
                    bond_pair = Some((u, v));
                }
            }
        }
    }

    if max_bond == 3 {
        // G2: label the long root 1. C[i][j] = -3 means alpha_j is short.
        let (u, v) = bond_pair.unwrap();
        let (long, short) = if cartan(u, v) == -3 { (v, u) } else { (u, v) };
        return DiagramComponent {
            canonical: vec![long, short],
            family: Family::G,
            rank,
            nodes,
        };
    }

    if max_bond == 2 {
        // B, C, or F shape: a path with one double bond. C[i][j] = -2 means
        // alpha_j is long and alpha_i short.
        let (u, v) = bond_pair.unwrap();
        let (short, long) = if cartan(u, v) == -2 { (u, v) } else { (v, u) };
        let endpoints: Vec<usize> = nodes.iter().copied().filter(|&n| deg(pos(n)) == 1).collect();
        let walk_from = |end: usize| -> Vec<usize> {
            let mut path = vec![end];
            let mut prev = None;
            let mut cur = end;
            while path.len() < rank {
                let next = adj[pos(cur)]
                    .iter()
                    .copied()
                    .find(|&n| Some(n) != prev)
                    .expect("path component");
                prev = Some(cur);
                cur = next;
                path.push(cur);
            }
            path
        };
        if endpoints.contains(&short) && rank >= 2 {
            // short root at the far end: B shape, labels n..1 from that end
            let mut path = walk_from(short);
            path.reverse();
            return DiagramComponent {
                canonical: path,
                family: Family::B,
                rank,
                nodes,
            };
        }
        if endpoints.contains(&long) {
            let mut path = walk_from(long);
            path.reverse();
            return DiagramComponent {
                canonical: path,
                family: Family::C,
                rank,
                nodes,
            };
        }
        // interior double bond: F4 shape; orient so the long side gets 1, 2
        let mut path = walk_from(*endpoints.iter().min().unwrap());
        if path.iter().position(|&n| n == long) > path.iter().position(|&n| n == short) {
            path.reverse();
        }
        return DiagramComponent {
            canonical: path,
            family: Family::F,
            rank,
            nodes,
        };
    }

    // Simply laced: path (A) or one trivalent node (D or E).
    let trivalent: Vec<usize> = nodes.iter().copied().filter(|&n| deg(pos(n)) == 3).collect();
    if trivalent.is_empty() {
        let endpoints: Vec<usize> = nodes.iter().copied().filter(|&n| deg(pos(n)) <= 1).collect();
        let start = *endpoints.iter().min().unwrap();
        let mut path = vec![start];
        let mut prev = None;
        let mut cur = start;
        while path.len() < rank {
            let next = adj[pos(cur)]
                .iter()
                .copied()
                .find(|&n| Some(n) != prev)
                .expect("path component");
            prev = Some(cur);
            cur = next;
            path.push(cur);
        }
        return DiagramComponent {
            canonical: path,
            family: Family::A,
            rank,
            nodes,
        };
    }

    assert_eq!(trivalent.len(), 1, "not a Dynkin sub-diagram");
    let center = trivalent[0];
    // Walk each branch outward from the center.
    let mut branches: Vec<Vec<usize>> = adj[pos(center)]
        .iter()
        .map(|&first| {
            let mut branch = vec![first];
            let mut prev = center;
            let mut cur = first;
            loop {
                let next = adj[pos(cur)].iter().copied().find(|&n| n != prev);
                match next {
                    Some(n) => {
                        branch.push(n);
                        prev = cur;
                        cur = n;
                    }
                    None => break,
                }
            }
            branch
        })
        .collect();
    branches.sort_by_key(|b| (b.len(), b[0]));
    let lens: Vec<usize> = branches.iter().map(|b| b.len()).collect();

    if lens[0] == 1 && lens[1] == 1 {
        // D shape: fork leaves 1, 2 then the chain 3, 4, ..., n.
        let mut canonical = vec![branches[0][0], branches[1][0], center];
        canonical.extend(branches[2].iter().copied());
        return DiagramComponent {
            canonical,
            family: Family::D,
            rank,
            nodes,
        };
    }

    assert_eq!(lens[0], 1, "not a Dynkin sub-diagram");
    assert_eq!(lens[1], 2, "not a Dynkin sub-diagram");
    // E shape: center is 4, the singleton branch is 1, the 2-branch is 3, 2,
    // and the long branch is 5, 6, ...
    let mut canonical = vec![
        branches[0][0],
        branches[1][1],
        branches[1][0],
        center,
    ];
    canonical.extend(branches[2].iter().copied());
    DiagramComponent {
        canonical,
        family: Family::E,
        rank,
        nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    #[test]
    fn a5_sub_components() {
        let s = RootSystem::new(Family::A, 5).unwrap();
        let comps = components(&s, SimpleSet::from_indices([0, 2, 3]));
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].family, Family::A);
        assert_eq!(comps[0].rank, 1);
        assert_eq!(comps[1].nodes, vec![2, 3]);
        assert_eq!(comps[1].family, Family::A);
    }

    #[test]
    fn d4_shapes() {
        let s = RootSystem::new(Family::D, 4).unwrap();
        let all = components(&s, SimpleSet::all(4));
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].family, Family::D);
        assert_eq!(all[0].canonical[2], 2); // center keeps label 3
        // dropping a fork leaf leaves a path
        let sub = components(&s, SimpleSet::from_indices([1, 2, 3]));
        assert_eq!(sub[0].family, Family::A);
        assert_eq!(sub[0].rank, 3);
    }

    #[test]
    fn e6_sub_diagrams() {
        let s = RootSystem::new(Family::E, 6).unwrap();
        let all = components(&s, SimpleSet::all(6));
        assert_eq!(all[0].family, Family::E);
        assert_eq!(all[0].canonical, vec![0, 1, 2, 3, 4, 5]);
        // J_6 = S_6 minus node 2 is a D5 shape
        let j6 = components(&s, SimpleSet::all(6).remove(1));
        assert_eq!(j6.len(), 1);
        assert_eq!(j6[0].family, Family::D);
        assert_eq!(j6[0].rank, 5);
        // dropping node 6 is also D5; dropping node 1 is A5
        let d5 = components(&s, SimpleSet::all(6).remove(5));
        assert_eq!(d5[0].family, Family::D);
        let a5 = components(&s, SimpleSet::all(6).remove(0));
        assert_eq!(a5[0].family, Family::A);
        assert_eq!(a5[0].rank, 5);
    }

    #[test]
    fn b_and_c_tails() {
        let b4 = RootSystem::new(Family::B, 4).unwrap();
        let tail = components(&b4, SimpleSet::from_indices([1, 2, 3]));
        assert_eq!(tail[0].family, Family::B);
        assert_eq!(tail[0].rank, 3);
        assert_eq!(tail[0].canonical, vec![1, 2, 3]);
        let head = components(&b4, SimpleSet::from_indices([0, 1, 2]));
        assert_eq!(head[0].family, Family::A);
        let c4 = RootSystem::new(Family::C, 4).unwrap();
        let tail = components(&c4, SimpleSet::from_indices([1, 2, 3]));
        assert_eq!(tail[0].family, Family::C);
    }

    #[test]
    fn canonical_mapping_roundtrip() {
        let s = RootSystem::new(Family::D, 5).unwrap();
        let comp = &components(&s, SimpleSet::all(5))[0];
        assert_eq!(comp.family, Family::D);
        assert_eq!(comp.canonical, vec![0, 1, 2, 3, 4]);
        let set = SimpleSet::from_indices([0, 4]);
        let canon = comp.to_canonical(set);
        assert!(canon.contains(0) && canon.contains(4));
    }
}
