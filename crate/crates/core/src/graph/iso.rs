//! Brute-force isomorphism by backtracking over vertex bijections.
//!
//! Candidates are pruned by degree and by adjacency to the already-mapped
//! prefix. Intended for the small graphs this crate enumerates (n <= 8 or so).

use super::Graph;

struct Matcher<'a> {
    a: &'a Graph,
    b: &'a Graph,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let n = self.a.n();
        if depth == n {
            return true;
        }
        for cand in 0..n {
            if self.used[cand] || self.a.degree(depth) != self.b.degree(cand) {
                continue;
            }
            let consistent = (0..depth).all(|u| self.a.has_edge(u, depth) == self.b.has_edge(self.map[u], cand));
            if !consistent {
                continue;
            }
            self.map[depth] = cand;
            self.used[cand] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[cand] = false;
        }
        false
    }
}

fn quick_reject(a: &Graph, b: &Graph) -> bool {
    a.n() != b.n() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence()
}

/// A bijection `map` with `{u,v}` an edge of `a` iff `{map[u], map[v]}` is an edge of `b`.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if quick_reject(a, b) {
        return None;
    }
    find_with_prefix(a, b, &[])
}

fn find_with_prefix(a: &Graph, b: &Graph, fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
    let n = a.n();
    // Relabel `a` so the fixed vertices come first, then run the plain search.
    let mut order: Vec<usize> = fixed.iter().map(|&(x, _)| x).collect();
    order.extend((0..n).filter(|v| !fixed.iter().any(|&(x, _)| x == *v)));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let relabelled = Graph::new(n, a.edges().map(|(u, v)| (pos[u], pos[v]))).ok()?;
    let mut m = Matcher {
        a: &relabelled,
        b,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    for (i, &(x, y)) in fixed.iter().enumerate() {
        if m.used[y] || a.degree(x) != b.degree(y) {
            return None;
        }
        let consistent = (0..i).all(|u| relabelled.has_edge(u, i) == b.has_edge(m.map[u], y));
        if !consistent {
            return None;
        }
        m.map[i] = y;
        m.used[y] = true;
    }
    if !m.extend(fixed.len()) {
        return None;
    }
    let mut result = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        result[v] = m.map[i];
    }
    Some(result)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Orbits of the automorphism group, as a representative (smallest member) per vertex.
#[allow(clippy::needless_range_loop)]
pub fn automorphism_orbits(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut rep: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if rep[v] != v {
            continue;
        }
        for w in v + 1..n {
            if rep[w] == w && g.degree(v) == g.degree(w) && find_with_prefix(g, g, &[(v, w)]).is_some() {
                rep[w] = v;
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn relabelled_cycle() {
        let perm = [3, 0, 5, 1, 4, 2];
        let c = cycle(6);
        let r = Graph::new(6, c.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        let map = find_isomorphism(&c, &r).unwrap();
        for (u, v) in c.edges() {
            assert!(r.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn triangle_is_not_path() {
        let k3 = cycle(3);
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!is_isomorphic(&k3, &p3));
        assert!(!is_isomorphic(&k3, &cycle(4)));
    }

    #[test]
    fn orbits() {
        assert_eq!(automorphism_orbits(&cycle(6)), vec![0; 6]);
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(automorphism_orbits(&p4), vec![0, 1, 1, 0]);
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(automorphism_orbits(&star), vec![0, 1, 1, 1]);
    }
}
