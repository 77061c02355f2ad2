//! Closure and reduction of finite relations given as edge lists.

use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("relation contains a cycle")]
pub struct CycleDetected;

struct Indexed<N> {
    nodes: Vec<N>,
    succ: Vec<Vec<usize>>,
}

fn index<N: Ord + Clone>(edges: &[(N, N)]) -> Indexed<N> {
    let mut ids: BTreeMap<N, usize> = BTreeMap::new();
    for (a, b) in edges {
        for n in [a, b] {
            let next = ids.len();
            ids.entry(n.clone()).or_insert(next);
        }
    }
    let mut nodes = vec![None; ids.len()];
    for (n, &i) in &ids {
        nodes[i] = Some(n.clone());
    }
    let mut succ = vec![Vec::new(); ids.len()];
    for (a, b) in edges {
        succ[ids[a]].push(ids[b]);
    }
    for s in &mut succ {
        s.sort_unstable();
        s.dedup();
    }
    Indexed { nodes: nodes.into_iter().map(Option::unwrap).collect(), succ }
}

/// Kahn order, or `CycleDetected`.
fn topo(succ: &[Vec<usize>]) -> Result<Vec<usize>, CycleDetected> {
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for s in succ {
        for &v in s {
            indeg[v] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in &succ[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                stack.push(v);
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err(CycleDetected)
    }
}

/// Bitset of nodes reachable from each node (excluding itself).
fn reach(succ: &[Vec<usize>], order: &[usize]) -> Vec<Vec<u64>> {
    let words = succ.len().div_ceil(64);
    let mut r = vec![vec![0u64; words]; succ.len()];
    for &u in order.iter().rev() {
        let mut acc = vec![0u64; words];
        for &v in &succ[u] {
            acc[v / 64] |= 1 << (v % 64);
            for (a, b) in acc.iter_mut().zip(&r[v]) {
                *a |= b;
            }
        }
        r[u] = acc;
    }
    r
}

fn has(bits: &[u64], v: usize) -> bool {
    bits[v / 64] >> (v % 64) & 1 == 1
}

/// Is the relation acyclic?
pub fn is_acyclic<N: Ord + Clone>(edges: &[(N, N)]) -> bool {
    topo(&index(edges).succ).is_ok()
}

/// Transitive closure of an acyclic relation, sorted.
pub fn transitive_closure<N: Ord + Clone>(edges: &[(N, N)]) -> Result<Vec<(N, N)>, CycleDetected> {
    let g = index(edges);
    let order = topo(&g.succ)?;
    let r = reach(&g.succ, &order);
    let mut out = Vec::new();
    for u in 0..g.nodes.len() {
        for v in 0..g.nodes.len() {
            if has(&r[u], v) {
                out.push((g.nodes[u].clone(), g.nodes[v].clone()));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The unique minimal edge set with the same transitive closure, sorted.
pub fn transitive_reduce<N: Ord + Clone>(edges: &[(N, N)]) -> Result<Vec<(N, N)>, CycleDetected> {
    let g = index(edges);
    let order = topo(&g.succ)?;
    let r = reach(&g.succ, &order);
    let mut out = Vec::new();
    for (u, succ) in g.succ.iter().enumerate() {
        for &v in succ {
            let implied = succ.iter().any(|&w| w != v && has(&r[w], v));
            if !implied {
                out.push((g.nodes[u].clone(), g.nodes[v].clone()));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Some cycle in the relation as a list of edge indices, if one exists.
pub fn find_cycle<N: Ord + Clone>(edges: &[(N, N)]) -> Option<Vec<usize>> {
    let g = index(edges);
    let ids: BTreeMap<&N, usize> = g.nodes.iter().enumerate().map(|(i, n)| (n, i)).collect();
    // edge index for (u, v), first occurrence
    let mut eid: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (k, (a, b)) in edges.iter().enumerate() {
        eid.entry((ids[a], ids[b])).or_insert(k);
    }
    // 0 = unvisited, 1 = on stack, 2 = done
    let n = g.nodes.len();
    let mut state = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        state[root] = 1;
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if *next < g.succ[u].len() {
                let v = g.succ[u][*next];
                *next += 1;
                match state[v] {
                    0 => {
                        state[v] = 1;
                        parent[v] = u;
                        stack.push((v, 0));
                    }
                    1 => {
                        // back edge u -> v closes a cycle
                        let mut cyc = vec![eid[&(u, v)]];
                        let mut w = u;
                        while w != v {
                            cyc.push(eid[&(parent[w], w)]);
                            w = parent[w];
                        }
                        cyc.reverse();
                        return Some(cyc);
                    }
                    _ => {}
                }
            } else {
                state[u] = 2;
                stack.pop();
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(v: &[(u32, u32)]) -> Vec<(u32, u32)> {
        v.to_vec()
    }

    #[test]
    fn chain_and_diamond() {
        assert_eq!(transitive_reduce(&e(&[(1, 2), (2, 3), (1, 3)])).unwrap(), e(&[(1, 2), (2, 3)]));
        assert_eq!(transitive_reduce(&e(&[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])).unwrap().len(), 3);
        let diamond = e(&[(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]);
        assert_eq!(transitive_reduce(&diamond).unwrap(), e(&[(0, 1), (0, 2), (1, 3), (2, 3)]));
        let reduced = transitive_reduce(&diamond).unwrap();
        assert_eq!(transitive_reduce(&reduced).unwrap(), reduced);
        assert_eq!(transitive_reduce(&e(&[(1, 2), (2, 1)])), Err(CycleDetected));
        assert!(transitive_reduce::<u32>(&[]).unwrap().is_empty());
    }

    #[test]
    fn cycles_are_found() {
        let edges = e(&[(1, 2), (2, 3), (3, 1), (3, 4)]);
        let c = find_cycle(&edges).unwrap();
        let mut c: Vec<_> = c.into_iter().map(|i| edges[i]).collect();
        c.sort();
        assert_eq!(c, e(&[(1, 2), (2, 3), (3, 1)]));
        assert!(find_cycle(&e(&[(1, 2), (2, 3)])).is_none());
        assert!(find_cycle(&e(&[(5, 5)])).is_some());
    }

    /// Floyd–Warshall style closure over a dense matrix.
    fn brute_closure(n: usize, edges: &[(u32, u32)]) -> Vec<(u32, u32)> {
        let mut m = vec![vec![false; n]; n];
        for &(a, b) in edges {
            m[a as usize][b as usize] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if m[i][k] && m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if m[i][j] {
                    out.push((i as u32, j as u32));
                }
            }
        }
        out
    }

    fn arb_dag() -> impl Strategy<Value = (usize, Vec<(u32, u32)>)> {
        (1usize..=12).prop_flat_map(|n| {
            prop::collection::vec((0..n as u32, 0..n as u32), 0..40).prop_map(move |pairs| {
                // orient low -> high to guarantee acyclicity
                let edges = pairs.into_iter().filter(|(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b))).collect();
                (n, edges)
            })
        })
    }

    proptest! {
        #[test]
        fn reduction_preserves_closure((n, edges) in arb_dag()) {
            let red = transitive_reduce(&edges).unwrap();
            prop_assert_eq!(brute_closure(n, &red), brute_closure(n, &edges));
            prop_assert_eq!(transitive_closure(&edges).unwrap(), brute_closure(n, &edges));
            // minimality: removing any kept edge changes the closure
            for i in 0..red.len() {
                let mut fewer = red.clone();
                fewer.remove(i);
                prop_assert_ne!(brute_closure(n, &fewer), brute_closure(n, &edges));
            }
        }
    }
}
