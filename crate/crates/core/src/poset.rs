//! The closure order on parameter graphs: rank-matrix domination, the ten
//! elementary downward moves generating cover relations, and Hasse diagram
//! construction with DOT export.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::orbit::{enumerate_parameters, OrbitGraph};

/// True iff the orbit of `lower` lies in the closure of the orbit of
/// `upper`, i.e. the rank matrix of `lower` dominates that of `upper`
/// entrywise.
pub fn leq(lower: &OrbitGraph, upper: &OrbitGraph) -> Result<bool> {
    if (lower.p(), lower.q(), lower.r()) != (upper.p(), upper.q(), upper.r()) {
        return Err(Error::MismatchedParameters);
    }
    Ok(lower.rank_matrix().dominates(&upper.rank_matrix()))
}

/// All graphs reachable from `upper` by one elementary move. Each move
/// rewrites a pattern of at most four vertices:
///
/// 1. crossing edges (a,d),(b,c) with a<b, c<d  ->  edges (a,c),(b,d);
/// 2. edge (a,c) + mark b+ (a<b)  ->  mark a+ + edge (b,c), and the
///    mirror image on the minus side;
/// 3. edge (b,c) with a+ free (a<b)  ->  edge (a,c), and the mirror;
/// 4. edge (a,c)  ->  mark a+ (c- freed), and the mirror;
/// 5. mark b+ with a+ free (a<b)  ->  mark a+, and the mirror.
pub fn downward_moves(upper: &OrbitGraph) -> Vec<OrbitGraph> {
    let (p, q) = (upper.p(), upper.q());
    let edges = upper.edges().to_vec();
    let plus_marks = upper.plus_marks().to_vec();
    let minus_marks = upper.minus_marks().to_vec();
    let free_plus: Vec<usize> = (1..=p).filter(|&a| upper.degree_plus(a) == 0).collect();
    let free_minus: Vec<usize> = (1..=q).filter(|&c| upper.degree_minus(c) == 0).collect();

    let mut results: BTreeSet<OrbitGraph> = BTreeSet::new();
    let mut emit = |edges: Vec<(usize, usize)>, plus: Vec<usize>, minus: Vec<usize>| {
        results.insert(OrbitGraph::new(p, q, edges, plus, minus).expect("moves preserve validity"));
    };
    let without = |list: &[usize], v: usize| -> Vec<usize> {
        list.iter().copied().filter(|&x| x != v).collect()
    };
    let edges_without = |skip: &[(usize, usize)]| -> Vec<(usize, usize)> {
        edges
            .iter()
            .copied()
            .filter(|e| !skip.contains(e))
            .collect()
    };

    // case 1: uncross a pair of crossing edges
    for (i, &(a1, c1)) in edges.iter().enumerate() {
        for &(a2, c2) in &edges[i + 1..] {
            let (left, right) = if a1 < a2 {
                ((a1, c1), (a2, c2))
            } else {
                ((a2, c2), (a1, c1))
            };
            if left.1 > right.1 {
                let mut e = edges_without(&[left, right]);
                e.push((left.0, right.1));
                e.push((right.0, left.1));
                emit(e, plus_marks.clone(), minus_marks.clone());
            }
        }
    }

    for &(a, c) in &edges {
        // case 2, plus side: swap the edge with a mark further right
        for &b in plus_marks.iter().filter(|&&b| b > a) {
            let mut e = edges_without(&[(a, c)]);
            e.push((b, c));
            let mut pm = without(&plus_marks, b);
            pm.push(a);
            emit(e, pm, minus_marks.clone());
        }
        // case 2, minus side
        for &d in minus_marks.iter().filter(|&&d| d > c) {
            let mut e = edges_without(&[(a, c)]);
            e.push((a, d));
            let mut mm = without(&minus_marks, d);
            mm.push(c);
            emit(e, plus_marks.clone(), mm);
        }
        // case 3, plus side: slide the plus endpoint left onto a free vertex
        for &a2 in free_plus.iter().filter(|&&a2| a2 < a) {
            let mut e = edges_without(&[(a, c)]);
            e.push((a2, c));
            emit(e, plus_marks.clone(), minus_marks.clone());
        }
        // case 3, minus side
        for &c2 in free_minus.iter().filter(|&&c2| c2 < c) {
            let mut e = edges_without(&[(a, c)]);
            e.push((a, c2));
            emit(e, plus_marks.clone(), minus_marks.clone());
        }
        // case 4: collapse the edge to a mark at either endpoint
        {
            let e = edges_without(&[(a, c)]);
            let mut pm = plus_marks.clone();
            pm.push(a);
            emit(e.clone(), pm, minus_marks.clone());
            let mut mm = minus_marks.clone();
            mm.push(c);
            emit(e, plus_marks.clone(), mm);
        }
    }

    // case 5: slide a mark left onto a free vertex
    for &b in &plus_marks {
        for &a in free_plus.iter().filter(|&&a| a < b) {
            let mut pm = without(&plus_marks, b);
            pm.push(a);
            emit(edges.clone(), pm, minus_marks.clone());
        }
    }
    for &d in &minus_marks {
        for &c in free_minus.iter().filter(|&&c| c < d) {
            let mut mm = without(&minus_marks, d);
            mm.push(c);
            emit(edges.clone(), plus_marks.clone(), mm);
        }
    }

    results.into_iter().collect()
}

/// The lower covers of `upper`: the downward moves that drop the dimension
/// by exactly one.
pub fn covers(upper: &OrbitGraph) -> Vec<OrbitGraph> {
    let dim = upper.dimension();
    downward_moves(upper)
        .into_iter()
        .filter(|w| w.dimension() + 1 == dim)
        .collect()
}

/// Nodes with their dimensions and the cover relations between them.
#[derive(Clone, Debug)]
pub struct HasseDiagram {
    nodes: Vec<(OrbitGraph, usize)>,
    cover_edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn nodes(&self) -> &[(OrbitGraph, usize)] {
        &self.nodes
    }

    /// Pairs (upper index, lower index).
    pub fn cover_edges(&self) -> &[(usize, usize)] {
        &self.cover_edges
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n");
        out.push_str("  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n");
        let mut by_dim: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &(_, dim)) in self.nodes.iter().enumerate() {
            by_dim.entry(dim).or_default().push(i);
        }
        for (i, (omega, dim)) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{} [label=\"{}\\ndim {}\"];\n", i, omega, dim));
        }
        for (dim, ids) in by_dim.iter().rev() {
            let names: Vec<String> = ids.iter().map(|i| format!("n{}", i)).collect();
            out.push_str(&format!(
                "  {{ rank=same; /* dim {} */ {}; }}\n",
                dim,
                names.join("; ")
            ));
        }
        for &(upper, lower) in &self.cover_edges {
            out.push_str(&format!("  n{} -> n{};\n", upper, lower));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.nodes.iter().map(|(w, dim)| {
                serde_json::json!({"omega": w.to_string(), "dim": dim})
            }).collect::<Vec<_>>(),
            "covers": self.cover_edges,
        })
    }
}

/// Builds the Hasse diagram for (p, q, r). The cover set is computed twice,
/// as the transitive reduction of the closure order and as the union of
/// dimension-filtered elementary moves, and the two must agree.
pub fn hasse_diagram(p: usize, q: usize, r: usize) -> Result<HasseDiagram> {
    let nodes = enumerate_parameters(p, q, r)?;
    let n = nodes.len();
    let ranks: Vec<_> = nodes.iter().map(|w| w.rank_matrix()).collect();
    let dims: Vec<usize> = nodes.iter().map(|w| w.dimension()).collect();

    // strict order: index i strictly below index j
    let mut less = vec![vec![false; n]; n];
    for (i, ri) in ranks.iter().enumerate() {
        for (j, rj) in ranks.iter().enumerate() {
            if i != j && ri.dominates(rj) {
                less[i][j] = true;
            }
        }
    }
    let mut reduction: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if less[i][j] && !(0..n).any(|m| less[i][m] && less[m][j]) {
                reduction.push((j, i));
            }
        }
    }
    reduction.sort_unstable();

    let index: BTreeMap<String, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, w)| (w.canonical_string(), i))
        .collect();
    let mut from_moves: Vec<(usize, usize)> = Vec::new();
    for (j, upper) in nodes.iter().enumerate() {
        for lower in covers(upper) {
            let i = *index
                .get(&lower.canonical_string())
                .ok_or_else(|| Error::Internal("cover leaves the parameter set".into()))?;
            from_moves.push((j, i));
        }
    }
    from_moves.sort_unstable();
    from_moves.dedup();

    if reduction != from_moves {
        return Err(Error::Internal(format!(
            "transitive reduction and elementary moves disagree at ({}, {}, {})",
            p, q, r
        )));
    }
    for &(upper, lower) in &reduction {
        if dims[upper] != dims[lower] + 1 {
            return Err(Error::Internal(
                "cover relation does not drop dimension by one".into(),
            ));
        }
    }

    Ok(HasseDiagram {
        nodes: nodes.into_iter().zip(dims).collect(),
        cover_edges: reduction,
    })
}
