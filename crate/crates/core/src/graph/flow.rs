//! Integer max-flow (Dinic) used for every disjoint-path and separator computation.

use std::collections::VecDeque;

pub(crate) const INF: u64 = u64::MAX / 4;

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    out: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
    original: Vec<u64>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            out: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            original: Vec::new(),
        }
    }

    /// Adds `u -> v` with capacity `cap`; returns the arc id. Arc `id ^ 1` is its residual twin.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize, cap: u64) -> usize {
        let id = self.to.len();
        self.out[u].push(id);
        self.to.push(v);
        self.cap.push(cap);
        self.original.push(cap);
        self.out[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        self.original.push(0);
        id
    }

    pub(crate) fn arc_count(&self) -> usize {
        self.to.len()
    }

    pub(crate) fn head(&self, arc: usize) -> usize {
        self.to[arc]
    }

    pub(crate) fn arcs_from(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    /// Flow currently routed along a forward arc.
    pub(crate) fn flow(&self, arc: usize) -> u64 {
        self.original[arc].saturating_sub(self.cap[arc])
    }

    pub(crate) fn is_forward(&self, arc: usize) -> bool {
        arc.is_multiple_of(2)
    }

    fn levels(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut level = vec![usize::MAX; self.out.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.out[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        (level[t] != usize::MAX).then_some(level)
    }

    fn augment(&mut self, u: usize, t: usize, limit: u64, level: &[usize], next: &mut [usize]) -> u64 {
        if u == t {
            return limit;
        }
        while next[u] < self.out[u].len() {
            let e = self.out[u][next[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let pushed = self.augment(v, t, limit.min(self.cap[e]), level, next);
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            next[u] += 1;
        }
        0
    }

    pub(crate) fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        if s == t {
            return 0;
        }
        let mut total = 0;
        while let Some(level) = self.levels(s, t) {
            let mut next = vec![0; self.out.len()];
            loop {
                let pushed = self.augment(s, t, INF, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Nodes reachable from `s` in the residual network (the source side of a minimum cut).
    pub(crate) fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.out[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}
