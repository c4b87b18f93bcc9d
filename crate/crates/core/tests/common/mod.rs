//! Slow, obviously-correct reference implementations used to cross-check the
//! library. Nothing here shares code with the crate beyond `Graph` accessors.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use pebbling::Graph;

/// Every distribution of `total` pebbles on `n` vertices, built recursively.
pub fn all_distributions(n: usize, total: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for c in 0..=left {
            cur.push(c);
            go(n, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Exhaustive breadth-first exploration of every descendant, no pruning.
pub fn reachable(g: &Graph, counts: &[u32], target: usize) -> bool {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(counts.to_vec());
    queue.push_back(counts.to_vec());
    while let Some(state) = queue.pop_front() {
        if state[target] > 0 {
            return true;
        }
        for x in 0..g.n() {
            if state[x] < 2 {
                continue;
            }
            for &y in g.neighbors(x) {
                let mut next = state.clone();
                next[x] -= 2;
                next[y] += 1;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    false
}

/// Smallest `p` such that every size-`p` distribution reaches every vertex.
/// Panics on disconnected graphs.
pub fn pebbling_number(g: &Graph) -> u64 {
    assert!(g.is_connected());
    let n = g.n();
    let mut p = 1;
    loop {
        let ok = all_distributions(n, p as u32)
            .iter()
            .all(|d| (0..n).all(|t| reachable(g, d, t)));
        if ok {
            return p;
        }
        p += 1;
    }
}

pub fn is_class0(g: &Graph) -> bool {
    let n = g.n();
    g.is_connected()
        && all_distributions(n, n as u32)
            .iter()
            .all(|d| (0..n).all(|t| reachable(g, d, t)))
}

fn connected_without(g: &Graph, removed: &[bool], a: usize, b: usize) -> bool {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(u) = stack.pop() {
        if u == b {
            return true;
        }
        for &w in g.neighbors(u) {
            if !seen[w] && !removed[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Subsets of `pool` in order of increasing size.
fn subsets_by_size(pool: &[usize]) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0u32..1 << pool.len())
        .map(|mask| {
            (0..pool.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pool[i])
                .collect()
        })
        .collect();
    all.sort_by_key(|s: &Vec<usize>| s.len());
    all
}

/// Size of a smallest vertex set avoiding `s` and `t` whose removal
/// disconnects them; `s` and `t` must not be adjacent.
pub fn min_separator_size(g: &Graph, s: usize, t: usize) -> usize {
    assert!(s != t && !g.has_edge(s, t));
    let pool: Vec<usize> = (0..g.n()).filter(|&x| x != s && x != t).collect();
    for set in subsets_by_size(&pool) {
        let mut removed = vec![false; g.n()];
        for &x in &set {
            removed[x] = true;
        }
        if !connected_without(g, &removed, s, t) {
            return set.len();
        }
    }
    unreachable!("removing every other vertex separates s and t")
}

fn is_connected_without(g: &Graph, removed: &[bool]) -> bool {
    let left: Vec<usize> = (0..g.n()).filter(|&x| !removed[x]).collect();
    left.iter().all(|&x| connected_without(g, removed, left[0], x))
}

/// Fewest vertices whose removal disconnects `g`, or `n - 1` for a complete graph.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    let all: Vec<usize> = (0..n).collect();
    for set in subsets_by_size(&all) {
        if set.len() + 1 >= n {
            break;
        }
        let mut removed = vec![false; n];
        for &x in &set {
            removed[x] = true;
        }
        if !is_connected_without(g, &removed) {
            return set.len();
        }
    }
    n - 1
}

/// Every simple path from `v` with at least one edge, listed as vertex sequences.
pub fn simple_paths_from(g: &Graph, v: usize, allowed: &dyn Fn(usize) -> bool) -> Vec<Vec<usize>> {
    fn go(g: &Graph, cur: &mut Vec<usize>, allowed: &dyn Fn(usize) -> bool, out: &mut Vec<Vec<usize>>) {
        let last = *cur.last().unwrap();
        for &w in g.neighbors(last) {
            if cur.contains(&w) || !allowed(w) {
                continue;
            }
            cur.push(w);
            out.push(cur.clone());
            go(g, cur, allowed, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(g, &mut vec![v], allowed, &mut out);
    out
}

/// Largest family of paths from `v` to bigs (other than `v`) with at most
/// `floor(phi(b)/2)` paths ending at `b`, interiors on nonzero vertices, no
/// vertex used as an interior twice and no vertex both an interior and an end.
pub fn max_claim1_family(g: &Graph, counts: &[u32], v: usize) -> usize {
    let mut paths: Vec<Vec<usize>> = Vec::new();
    for p in simple_paths_from(g, v, &|x| counts[x] > 0) {
        let end = *p.last().unwrap();
        if counts[end] < 2 {
            continue;
        }
        // a single edge has no interior and may be used once per pebble pair
        let copies = if p.len() == 2 { counts[end] / 2 } else { 1 };
        paths.extend(std::iter::repeat_n(p, copies as usize));
    }

    struct State {
        ends: Vec<u32>,
        interior: Vec<bool>,
    }
    fn fits(p: &[usize], st: &State, counts: &[u32]) -> bool {
        let end = *p.last().unwrap();
        if st.ends[end] + 1 > counts[end] / 2 || st.interior[end] {
            return false;
        }
        p[1..p.len() - 1].iter().all(|&x| !st.interior[x] && st.ends[x] == 0)
    }
    fn go(i: usize, paths: &[Vec<usize>], st: &mut State, counts: &[u32], size: usize, best: &mut usize) {
        *best = (*best).max(size);
        if i == paths.len() || size + (paths.len() - i) <= *best {
            return;
        }
        let p = &paths[i];
        if fits(p, st, counts) {
            let end = *p.last().unwrap();
            st.ends[end] += 1;
            for &x in &p[1..p.len() - 1] {
                st.interior[x] = true;
            }
            go(i + 1, paths, st, counts, size + 1, best);
            st.ends[end] -= 1;
            for &x in &p[1..p.len() - 1] {
                st.interior[x] = false;
            }
        }
        go(i + 1, paths, st, counts, size, best);
    }
    let mut st = State {
        ends: vec![0; g.n()],
        interior: vec![false; g.n()],
    };
    let mut best = 0;
    go(0, &paths, &mut st, counts, 0, &mut best);
    best
}

/// Whether the two graphs are isomorphic, by trying every permutation.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    fn go(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == a.n() {
            return a.edges().all(|(u, v)| b.has_edge(map[u], map[v]));
        }
        for j in 0..b.n() {
            if !used[j] {
                used[j] = true;
                map.push(j);
                if go(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    a.n() == b.n() && a.edge_count() == b.edge_count() && go(a, b, &mut Vec::new(), &mut vec![false; b.n()])
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
