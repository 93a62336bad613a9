//! Simple undirected graphs stored as adjacency bit rows.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Hard cap on vertex count.
pub const MAX_VERTICES: usize = 1 << 16;

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Option<Vec<String>>,
}

// labels are annotations only; equality is on adjacency
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

/// Hop distances with `n` as the "unreachable" sentinel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceTable {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    pub fn sentinel(&self) -> usize {
        self.n
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics {
    pub distances: DistanceTable,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub odd_girth: Option<usize>,
    pub even_girth: Option<usize>,
    pub is_connected: bool,
    pub is_bipartite: bool,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph too large");
        let words = n.div_ceil(64).max(1);
        Graph { n, words, rows: vec![0; n * words], labels: None }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeGuard(format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!("edge {u}-{v} out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric irreflexive predicate.
    pub fn from_fn(n: usize, adj: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adj(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.rows[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &bits)| BitIter { bits, base: w * 64 })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u).iter().zip(self.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// The common valency, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameter(format!("{} labels for {} vertices", labels.len(), self.n)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Image of the graph under `v ↦ perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.n && self.edges().iter().all(|&(u, v)| self.has_edge(perm[u], perm[v]))
    }

    /// Induced subgraph on `vs`, vertices renumbered in the given order.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Graph {
        Graph::from_fn(vs.len(), |i, j| self.has_edge(vs[i], vs[j]))
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges().iter().all(|&(u, v)| other.has_edge(u, v))
    }

    pub fn bfs(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![self.n; self.n];
        dist[s] = 0;
        let mut queue = vec![s];
        let mut i = 0;
        while i < queue.len() {
            let u = queue[i];
            i += 1;
            for w in self.neighbors(u) {
                if dist[w] == self.n {
                    dist[w] = dist[u] + 1;
                    queue.push(w);
                }
            }
        }
        dist
    }

    pub fn distance_table(&self) -> DistanceTable {
        let mut dist = Vec::with_capacity(self.n * self.n);
        for s in 0..self.n {
            dist.extend(self.bfs(s).into_iter().map(|d| d as u32));
        }
        DistanceTable { n: self.n, dist }
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let d = self.bfs(s);
            let comp: Vec<usize> = (0..self.n).filter(|&v| d[v] < self.n).collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs(0).iter().all(|&d| d < self.n)
    }

    /// Two-colouring with each component's least vertex coloured 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        stack.push(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            let d = self.bfs(s);
            let m = *d.iter().max().unwrap_or(&0);
            if m == self.n && self.n > 0 {
                return None;
            }
            best = best.max(m);
        }
        Some(best)
    }

    /// Shortest cycle length, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.fill(usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = vec![s];
            let mut i = 0;
            while i < queue.len() {
                let u = queue[i];
                i += 1;
                // cycles closed at u have length >= 2 dist[u]
                if 2 * dist[u] >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Shortest odd cycle: an edge inside one BFS layer at depth `l` closes
    /// an odd walk of length `2l+1`, and the minimum over sources is exact.
    pub fn odd_girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        for s in 0..self.n {
            let d = self.bfs(s);
            for (u, v) in self.edges() {
                if d[u] == d[v] && d[u] < self.n {
                    best = best.min(2 * d[u] + 1);
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Shortest even cycle.
    ///
    /// A vertex with two BFS parents at depth `l` lies on an even cycle of
    /// length at most `2l`, giving an upper bound; shorter lengths are then
    /// ruled out by exhaustive path search.
    pub fn even_girth(&self) -> Option<usize> {
        let girth = self.girth()?;
        if girth % 2 == 0 {
            return Some(girth);
        }
        let mut upper = usize::MAX;
        for s in 0..self.n {
            let d = self.bfs(s);
            for v in 0..self.n {
                if d[v] == 0 || d[v] == self.n {
                    continue;
                }
                let parents = self.neighbors(v).filter(|&w| d[w] + 1 == d[v]).count();
                if parents >= 2 {
                    upper = upper.min(2 * d[v]);
                }
            }
        }
        let limit = if upper == usize::MAX { self.n } else { upper - 2 };
        let dt = self.distance_table();
        let mut len = girth + 1;
        while len <= limit {
            if (0..self.n).any(|s| self.has_cycle_through_min(s, len, &dt)) {
                return Some(len);
            }
            len += 2;
        }
        (upper != usize::MAX).then_some(upper)
    }

    /// Is there a cycle of length `len` whose least vertex is `s`?
    fn has_cycle_through_min(&self, s: usize, len: usize, dt: &DistanceTable) -> bool {
        let mut on_path = vec![false; self.n];
        on_path[s] = true;
        self.extend_path(s, s, 1, len, &mut on_path, dt)
    }

    fn extend_path(
        &self,
        s: usize,
        cur: usize,
        edges_left_from: usize,
        len: usize,
        on_path: &mut [bool],
        dt: &DistanceTable,
    ) -> bool {
        // path currently has `edges_left_from - 1` edges
        let used = edges_left_from - 1;
        let remaining = len - used;
        if remaining == 1 {
            return used >= 2 && self.has_edge(cur, s);
        }
        for w in self.neighbors(cur) {
            if w <= s || on_path[w] || dt.get(w, s) > remaining - 1 {
                continue;
            }
            on_path[w] = true;
            if self.extend_path(s, w, edges_left_from + 1, len, on_path, dt) {
                return true;
            }
            on_path[w] = false;
        }
        false
    }

    pub fn metrics(&self) -> Metrics {
        let distances = self.distance_table();
        let is_connected = self.is_connected();
        let diameter = if is_connected {
            Some((0..self.n * self.n).map(|i| distances.dist[i] as usize).max().unwrap_or(0))
        } else {
            None
        };
        Metrics {
            diameter,
            girth: self.girth(),
            odd_girth: self.odd_girth(),
            even_girth: self.even_girth(),
            is_connected,
            is_bipartite: self.is_bipartite(),
            distances,
        }
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Line graph; vertex `i` is the `i`-th edge in lexicographic order.
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut at: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            at[u].push(i);
            at[v].push(i);
        }
        let mut g = Graph::empty(edges.len());
        for inc in &at {
            for (a, &e) in inc.iter().enumerate() {
                for &f in &inc[a + 1..] {
                    g.add_edge(e, f);
                }
            }
        }
        g
    }

    /// Bipartite double: `(v, side)` is vertex `side * n + v`.
    pub fn bipartite_double(&self) -> Graph {
        let n = self.n;
        let mut g = Graph::empty(2 * n);
        for (u, v) in self.edges() {
            g.add_edge(u, n + v);
            g.add_edge(v, n + u);
        }
        g
    }

    pub fn distance_graph(&self, i: usize) -> Result<Graph> {
        let dt = self.distance_table();
        let diam = (0..self.n * self.n).map(|x| dt.dist[x] as usize).filter(|&d| d < self.n).max().unwrap_or(0);
        if i == 0 || i > diam {
            return Err(Error::Precondition(format!("distance {i} outside 1..={diam}")));
        }
        Ok(Graph::from_fn(self.n, |u, v| dt.get(u, v) == i))
    }

    /// Distance-2 graph restricted to one colour class. Returns the graph
    /// and the original vertex ids in order.
    pub fn halved(&self, part: u8) -> Result<(Graph, Vec<usize>)> {
        if part > 1 {
            return Err(Error::Precondition(format!("halved part must be 0 or 1, got {part}")));
        }
        let color =
            self.bipartition().ok_or_else(|| Error::Precondition("halved graph needs a bipartite graph".into()))?;
        let vs: Vec<usize> = (0..self.n).filter(|&v| color[v] == part).collect();
        let dt = self.distance_table();
        Ok((Graph::from_fn(vs.len(), |i, j| dt.get(vs[i], vs[j]) == 2), vs))
    }

    /// Contracts the cliques of the distance-`d` graph. Returns the folded
    /// graph and the classes (each sorted, ordered by least vertex).
    pub fn antipodal_quotient(&self) -> Result<(Graph, Vec<Vec<usize>>)> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let dt = self.distance_table();
        let d = self.diameter().unwrap_or(0);
        if d == 0 {
            return Err(Error::Precondition("antipodal quotient needs diameter at least 1".into()));
        }
        let mut class = vec![usize::MAX; self.n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            if class[v] != usize::MAX {
                continue;
            }
            let c: Vec<usize> = (0..self.n).filter(|&w| w == v || dt.get(v, w) == d).collect();
            for &x in &c {
                for &y in &c {
                    if x != y && dt.get(x, y) != d {
                        return Err(Error::Precondition(format!(
                            "distance-{d} graph is not a union of cliques: {x} and {y} at distance {}",
                            dt.get(x, y)
                        )));
                    }
                }
                if class[x] != usize::MAX {
                    return Err(Error::Precondition("distance-d classes overlap".into()));
                }
                class[x] = classes.len();
            }
            classes.push(c);
        }
        let mut q = Graph::empty(classes.len());
        for (u, v) in self.edges() {
            let (a, b) = (class[u], class[v]);
            if a == b {
                return Err(Error::Precondition("edge inside an antipodal class".into()));
            }
            q.add_edge(a, b);
        }
        Ok((q, classes))
    }

    /// Cartesian product; `(u, v)` is vertex `u * |h| + v`.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let m = h.n;
        Graph::from_fn(self.n * m, |x, y| {
            let (u1, v1, u2, v2) = (x / m, x % m, y / m, y % m);
            (u1 == u2 && h.has_edge(v1, v2)) || (v1 == v2 && self.has_edge(u1, u2))
        })
    }
}

struct BitIter {
    bits: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let t = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(self.base + t)
    }
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// `k`-subsets of `0..m` in lexicographic order.
pub fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < m - k + i) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Kneser graph `K(m, k)`: `k`-subsets of `{1..m}`, adjacent when disjoint.
pub fn kneser(m: usize, k: usize) -> Result<Graph> {
    match binomial(m, k) {
        Some(c) if c <= 100_000 => {}
        _ => return Err(Error::SizeGuard(format!("C({m},{k}) exceeds 100000"))),
    }
    let sets = k_subsets(m, k);
    let masks: Vec<u64> = sets.iter().map(|s| s.iter().fold(0u64, |acc, &x| acc | 1 << x)).collect();
    let g = Graph::from_fn(sets.len(), |a, b| masks[a] & masks[b] == 0);
    let labels = sets
        .iter()
        .map(|s| {
            let parts: Vec<String> = s.iter().map(|x| format!("{}", x + 1)).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    g.with_labels(labels)
}

/// Odd graph `O_n = K(2n-1, n-1)`.
pub fn odd_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter("odd graph needs n >= 2".into()));
    }
    kneser(2 * n - 1, n - 1)
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| (v - u) % n == 1 || (u + n - v) % n == 1)
}

/// `K_{parts × size}`; vertex `v` lies in part `v / size`.
pub fn complete_multipartite(parts: usize, size: usize) -> Graph {
    Graph::from_fn(parts * size, |u, v| u / size != v / size)
}

/// `K_{n,n}` minus a perfect matching: `i ~ n + j` iff `i != j`.
pub fn crown(n: usize) -> Graph {
    Graph::from_fn(2 * n, |u, v| u < n && v >= n && v - n != u)
}

/// Hamming graph `H(d, q)`; vertices are base-`q` words.
pub fn hamming(d: usize, q: usize) -> Result<Graph> {
    let n = q
        .checked_pow(d as u32)
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or_else(|| Error::SizeGuard("Hamming graph too large".into()))?;
    Ok(Graph::from_fn(n, |u, v| {
        let (mut a, mut b, mut diff) = (u, v, 0);
        for _ in 0..d {
            diff += usize::from(a % q != b % q);
            a /= q;
            b /= q;
        }
        diff == 1
    }))
}

pub fn hypercube(d: usize) -> Result<Graph> {
    hamming(d, 2)
}

/// Folded `d`-cube: `Q_{d-1}` plus the antipodal matching.
pub fn folded_cube(d: usize) -> Result<Graph> {
    if d < 2 {
        return Err(Error::InvalidParameter("folded cube needs d >= 2".into()));
    }
    let mut g = hypercube(d - 1)?;
    let all = (1usize << (d - 1)) - 1;
    for v in 0..g.order() {
        if v < v ^ all {
            g.add_edge(v, v ^ all);
        }
    }
    Ok(g)
}

/// Triangular graph `T(m)`: line graph of `K_m`.
pub fn triangular(m: usize) -> Graph {
    complete(m).line_graph()
}

/// LCF notation: a Hamiltonian cycle on `n` vertices plus chords
/// `i ~ i + shifts[i mod len]`, with the shift list repeated.
pub fn lcf(n: usize, shifts: &[isize], repeats: usize) -> Result<Graph> {
    if shifts.len() * repeats != n {
        return Err(Error::InvalidParameter(format!("{} shifts x {repeats} != {n}", shifts.len())));
    }
    let mut g = cycle(n);
    for i in 0..n {
        let j = (i as isize + shifts[i % shifts.len()]).rem_euclid(n as isize) as usize;
        if j != i {
            g.add_edge(i, j);
        }
    }
    Ok(g)
}

/// Multiset of degrees, for quick invariants.
pub fn degree_histogram(g: &Graph) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for v in 0..g.order() {
        *h.entry(g.degree(v)).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn petersen() -> Graph {
        kneser(5, 2).unwrap()
    }

    #[test]
    fn petersen_metrics() {
        let m = petersen().metrics();
        assert_eq!(m.girth, Some(5));
        assert_eq!(m.diameter, Some(2));
        assert_eq!(m.odd_girth, Some(5));
        assert_eq!(m.even_girth, Some(6));
        assert!(!m.is_bipartite);
    }

    #[test]
    fn complete_graph_metrics() {
        let m = complete(4).metrics();
        assert_eq!((m.girth, m.diameter, m.even_girth), (Some(3), Some(1), Some(4)));
        assert_eq!(cycle(7).metrics().even_girth, None);
        assert_eq!(cycle(6).metrics().odd_girth, None);
    }

    #[test]
    fn heawood_from_lcf() {
        let h = lcf(14, &[5, -5], 7).unwrap();
        let m = h.metrics();
        assert_eq!(m.girth, Some(6));
        assert!(m.is_bipartite);
        assert_eq!(h.line_graph().order(), 21);
        assert_eq!(h.line_graph().regular_degree(), Some(4));
    }

    #[test]
    fn kneser_sizes() {
        assert_eq!(odd_graph(4).unwrap().order(), 35);
        assert_eq!(odd_graph(4).unwrap().regular_degree(), Some(4));
        assert_eq!(odd_graph(5).unwrap().order(), 126);
    }

    #[test]
    fn desargues_is_double_of_petersen() {
        let d = petersen().bipartite_double();
        assert_eq!(d.order(), 20);
        assert!(d.is_bipartite());
        assert_eq!(d.girth(), Some(6));
        assert_eq!(d.diameter(), Some(5));
    }

    #[test]
    fn halved_cube_is_k4() {
        let q3 = hypercube(3).unwrap();
        let (h0, vs0) = q3.halved(0).unwrap();
        let (h1, vs1) = q3.halved(1).unwrap();
        assert_eq!(h0, complete(4));
        assert_eq!(h1, complete(4));
        let mut all = [vs0, vs1].concat();
        all.sort_unstable();
        assert_eq!(all, (0..8).collect::<Vec<_>>());
        assert!(petersen().halved(0).is_err());
    }

    #[test]
    fn antipodal_quotient_of_cube() {
        let (q, classes) = hypercube(3).unwrap().antipodal_quotient().unwrap();
        assert_eq!(q, complete(4));
        assert_eq!(classes.len(), 4);
        assert!(petersen().antipodal_quotient().is_err());
    }

    #[test]
    fn families() {
        assert_eq!(folded_cube(5).unwrap().regular_degree(), Some(5));
        assert_eq!(folded_cube(5).unwrap().diameter(), Some(2));
        assert_eq!(crown(4).edge_count(), 12);
        assert_eq!(triangular(5).order(), 10);
        assert_eq!(complete_multipartite(3, 3).regular_degree(), Some(6));
        assert_eq!(hamming(3, 3).unwrap().regular_degree(), Some(6));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..10).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    // brute-force shortest cycle lengths by parity over all simple cycles
    fn cycle_lengths(g: &Graph) -> (Option<usize>, Option<usize>) {
        fn go(g: &Graph, s: usize, cur: usize, depth: usize, on: &mut Vec<bool>, best: &mut [usize; 2]) {
            for w in g.neighbors(cur) {
                if w == s && depth >= 3 {
                    let p = depth % 2;
                    best[p] = best[p].min(depth);
                }
                if w > s && !on[w] {
                    on[w] = true;
                    go(g, s, w, depth + 1, on, best);
                    on[w] = false;
                }
            }
        }
        let mut best = [usize::MAX; 2];
        for s in 0..g.order() {
            let mut on = vec![false; g.order()];
            on[s] = true;
            go(g, s, s, 1, &mut on, &mut best);
        }
        let f = |x: usize| (x != usize::MAX).then_some(x);
        (f(best[1]), f(best[0]))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn girths_match_brute_force(g in arb_graph()) {
            let (odd, even) = cycle_lengths(&g);
            prop_assert_eq!(g.odd_girth(), odd);
            prop_assert_eq!(g.even_girth(), even);
            let girth = match (odd, even) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
            prop_assert_eq!(g.girth(), girth);
        }

        #[test]
        fn complement_is_involution(g in arb_graph()) {
            prop_assert_eq!(g.complement().complement(), g.clone());
            if g.is_connected() && g.order() > 1 {
                prop_assert_eq!(g.distance_graph(1).unwrap(), g);
            }
        }
    }
}
