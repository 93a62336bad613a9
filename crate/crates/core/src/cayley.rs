//! Cayley graphs `Cay(G, S)` and the group-level tools built on them:
//! distance sets, coset quotients, the short-cycle lemmas, the `H ∪ K`
//! decomposition and connection-set search.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;

use crate::budget::Budget;
use crate::drg::{symmetric_spectrum, IntersectionArray, Spectrum, MERGE_TOL, SNAP_TOL};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{Elem, Group, Subgroup};

/// Inverse-closed, identity-free subset of a group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConnectionSet {
    elements: Vec<Elem>,
}

impl ConnectionSet {
    pub fn new(g: &Group, elements: &[Elem]) -> Result<Self> {
        let set: BTreeSet<Elem> = elements.iter().copied().collect();
        if let Some(&x) = set.iter().find(|&&x| x >= g.order()) {
            return Err(Error::InvalidParameter(format!("element {x} not in a group of order {}", g.order())));
        }
        if set.contains(&g.identity()) {
            return Err(Error::InvalidParameter("connection set contains the identity".into()));
        }
        if let Some(&x) = set.iter().find(|&&x| !set.contains(&g.inv(x))) {
            return Err(Error::InvalidParameter(format!(
                "connection set not inverse-closed: {} lacks its inverse {}",
                g.label(x),
                g.label(g.inv(x))
            )));
        }
        Ok(ConnectionSet { elements: set.into_iter().collect() })
    }

    /// Parses comma-separated element labels. Commas inside parentheses
    /// belong to cycle notation.
    pub fn from_labels(g: &Group, text: &str) -> Result<Self> {
        let mut elems = Vec::new();
        for tok in split_labels(text) {
            let e = g.find_label(&tok).ok_or_else(|| Error::UnknownName(format!("group element '{tok}'")))?;
            elems.push(e);
        }
        Self::new(g, &elems)
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn labels(&self, g: &Group) -> String {
        self.elements.iter().map(|&x| g.label(x)).collect::<Vec<_>>().join(",")
    }
}

fn split_labels(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if (ch == ',' || ch == ';') && depth == 0 {
            if !cur.trim().is_empty() {
                out.push(cur.trim().to_string());
            }
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

/// `a ~ b` iff `a b^-1 ∈ S`, so the neighbours of `a` are `s a`.
pub fn cayley_graph(g: &Group, s: &ConnectionSet) -> Graph {
    let mut gr = Graph::empty(g.order());
    for a in 0..g.order() {
        for &x in s.elements() {
            let b = g.mul(x, a);
            if a < b {
                gr.add_edge(a, b);
            }
        }
    }
    gr.with_labels(g.labels().to_vec()).expect("one label per element")
}

pub fn generates(g: &Group, s: &ConnectionSet) -> bool {
    g.closure(s.elements()).order() == g.order()
}

/// `v ↦ v h` is an automorphism of every Cayley graph on `g`.
pub fn right_translation(g: &Group, h: Elem) -> Vec<usize> {
    (0..g.order()).map(|v| g.mul(v, h)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceSets {
    /// `sets[i] = S_i`, sorted; `sets[0] = {e}`.
    pub sets: Vec<Vec<Elem>>,
    /// `N_d = S_d ∪ {e}`.
    pub n_d: Vec<Elem>,
    pub n_d_is_subgroup: bool,
    pub n_d_is_normal: bool,
}

/// `S_{i+1} = S S_i \ (S_i ∪ S_{i-1})`, checked against BFS from `e`.
pub fn distance_sets(g: &Group, s: &ConnectionSet) -> Result<DistanceSets> {
    if !generates(g, s) {
        return Err(Error::Disconnected);
    }
    let e = g.identity();
    let mut sets: Vec<Vec<Elem>> = vec![vec![e]];
    if !s.is_empty() {
        sets.push(s.elements().to_vec());
    }
    loop {
        let i = sets.len() - 1;
        let mut next = BTreeSet::new();
        for &x in s.elements() {
            for &y in &sets[i] {
                next.insert(g.mul(x, y));
            }
        }
        for &y in &sets[i] {
            next.remove(&y);
        }
        if i >= 1 {
            for &y in &sets[i - 1] {
                next.remove(&y);
            }
        }
        if next.is_empty() {
            break;
        }
        sets.push(next.into_iter().collect());
    }
    let bfs = cayley_graph(g, s).bfs(e);
    for (i, set) in sets.iter().enumerate() {
        let class: Vec<Elem> = (0..g.order()).filter(|&v| bfs[v] == i).collect();
        if &class != set {
            return Err(Error::Precondition(format!("S_{i} disagrees with the BFS layer at distance {i}")));
        }
    }
    let mut n_d = sets.last().unwrap().clone();
    if sets.len() > 1 {
        n_d.push(e);
        n_d.sort_unstable();
    }
    let sub = g.subgroup(&n_d).ok();
    let n_d_is_normal = sub.as_ref().is_some_and(|h| g.is_normal(h));
    Ok(DistanceSets { sets, n_d_is_subgroup: sub.is_some(), n_d_is_normal, n_d })
}

/// Quotient matrix of an equitable partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub parts: Vec<Vec<usize>>,
    pub entries: Vec<Vec<usize>>,
}

impl QuotientMatrix {
    /// Eigenvalues via the symmetrisation `Q_ij sqrt(|P_i| / |P_j|)`.
    pub fn spectrum(&self) -> Spectrum {
        let m = self.parts.len();
        let sym = DMatrix::from_fn(m, m, |i, j| {
            let qi = self.entries[i][j] as f64 * self.parts[i].len() as f64;
            let qj = self.entries[j][i] as f64 * self.parts[j].len() as f64;
            // both equal the edge count between P_i and P_j
            debug_assert!((qi - qj).abs() < 1e-9);
            qi / libm::sqrt(self.parts[i].len() as f64 * self.parts[j].len() as f64)
        });
        symmetric_spectrum(sym, SNAP_TOL, MERGE_TOL)
    }

    /// Every quotient eigenvalue must be a graph eigenvalue; returns the
    /// first one that is not.
    pub fn eigenvalue_violation(&self, graph_spectrum: &Spectrum, tol: f64) -> Option<f64> {
        self.spectrum().distinct().into_iter().find(|&v| !graph_spectrum.contains(v, tol))
    }
}

/// Checks that `parts` is equitable and returns its quotient matrix.
pub fn equitable_quotient(gr: &Graph, parts: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let n = gr.order();
    let mut which = vec![usize::MAX; n];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            if v >= n || which[v] != usize::MAX {
                return Err(Error::Precondition(format!("vertex {v} out of range or in two parts")));
            }
            which[v] = i;
        }
    }
    if which.contains(&usize::MAX) || parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Precondition("parts do not cover the vertex set".into()));
    }
    let m = parts.len();
    let mut entries = vec![vec![0usize; m]; m];
    for (i, p) in parts.iter().enumerate() {
        for (idx, &v) in p.iter().enumerate() {
            let mut row = vec![0usize; m];
            for w in gr.neighbors(v) {
                row[which[w]] += 1;
            }
            if idx == 0 {
                entries[i] = row;
            } else if entries[i] != row {
                return Err(Error::Precondition(format!("partition not equitable at vertex {v} in part {i}")));
            }
        }
    }
    Ok(QuotientMatrix { parts: parts.to_vec(), entries })
}

/// `Q_{Hc,Hb} = |S ∩ H c b^-1|` over the right cosets of a normal `H`,
/// cross-checked against neighbour counts in `Cay(G, S)`.
pub fn coset_quotient(g: &Group, s: &ConnectionSet, h: &Subgroup) -> Result<QuotientMatrix> {
    if !g.is_normal(h) {
        return Err(Error::NotNormal);
    }
    let parts = g.right_cosets(h);
    let m = parts.len();
    let mut entries = vec![vec![0usize; m]; m];
    for i in 0..m {
        for j in 0..m {
            let cb = g.mul(parts[i][0], g.inv(parts[j][0]));
            entries[i][j] = h.elements().iter().filter(|&&x| s.contains(g.mul(x, cb))).count();
        }
    }
    let q = QuotientMatrix { parts, entries };
    let observed = equitable_quotient(&cayley_graph(g, s), &q.parts)?;
    if observed.entries != q.entries {
        return Err(Error::Precondition("coset formula disagrees with neighbour counts".into()));
    }
    Ok(q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePartition {
    pub element: Elem,
    pub order: usize,
    /// Right cosets of `<element>`.
    pub cosets: Vec<Vec<Elem>>,
    pub induced_cycles: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    /// Abelian with `|S| > 2`, so `Cay(G, S)` contains a 4-cycle.
    pub abelian_forces_4cycle: bool,
    pub girth: Option<usize>,
    /// For each `s ∈ S` of order `m > 2`, reported only when girth `> 4`.
    pub order_m_cycle_partitions: Vec<CyclePartition>,
}

pub fn girth_lemma_predicates(g: &Group, s: &ConnectionSet) -> LemmaReport {
    let gr = cayley_graph(g, s);
    let girth = gr.girth();
    let mut parts = Vec::new();
    if girth.is_none_or(|x| x > 4) {
        for &a in s.elements() {
            let m = g.element_order(a);
            if m <= 2 {
                continue;
            }
            let h = g.closure(&[a]);
            let cosets = g.right_cosets(&h);
            let induced_cycles = cosets.iter().all(|c| {
                // the coset <a> b, walked as b, ab, a^2 b, ...
                let b = c[0];
                let walk: Vec<Elem> = (0..m).map(|i| g.mul(g.pow(a, i), b)).collect();
                let sub = gr.induced_subgraph(&walk);
                (0..m).all(|i| sub.degree(i) == 2 && sub.has_edge(i, (i + 1) % m))
            });
            parts.push(CyclePartition { element: a, order: m, cosets, induced_cycles });
        }
    }
    LemmaReport { abelian_forces_4cycle: g.is_abelian() && s.len() > 2, girth, order_m_cycle_partitions: parts }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HkReport {
    pub found: bool,
    pub h: Option<Subgroup>,
    pub k: Option<Subgroup>,
    pub closure_condition_holds: bool,
    pub diameter: usize,
}

/// Looks for subgroups `H, K` of order `q + 1` with `H ∩ K = {e}` and
/// `S = (H ∪ K) \ {e}`, and separately evaluates whether `<a> ⊆ S ∪ {e}`
/// for every `a ∈ S` of order `2i` with `i` at least the diameter.
pub fn hk_decomposition(g: &Group, s: &ConnectionSet, q: usize) -> Result<HkReport> {
    if s.len() != 2 * q {
        return Err(Error::Precondition(format!("|S| = {} but 2q = {}", s.len(), 2 * q)));
    }
    let diameter = cayley_graph(g, s).diameter().ok_or(Error::Disconnected)?;
    let e = g.identity();
    let with_e = |xs: &[Elem]| -> Vec<Elem> {
        let mut v = xs.to_vec();
        v.push(e);
        v.sort_unstable();
        v
    };
    let mut found = None;
    if q > 0 {
        let first = s.elements()[0];
        let rest: Vec<Elem> = s.elements()[1..].to_vec();
        // H holds the least element of S, which halves the pair scan
        for pick in crate::graph::k_subsets(rest.len(), q - 1) {
            let mut hs = vec![first];
            hs.extend(pick.iter().map(|&i| rest[i]));
            let ks: Vec<Elem> = s.elements().iter().copied().filter(|x| !hs.contains(x)).collect();
            if let (Ok(h), Ok(k)) = (g.subgroup(&with_e(&hs)), g.subgroup(&with_e(&ks))) {
                found = Some((h, k));
                break;
            }
        }
    }
    let closure_condition_holds = s.elements().iter().all(|&a| {
        let m = g.element_order(a);
        if !m.is_multiple_of(2) || m / 2 < diameter {
            return true;
        }
        (1..m).all(|i| s.contains(g.pow(a, i)))
    });
    let (h, k) = match found {
        Some((h, k)) => (Some(h), Some(k)),
        None => (None, None),
    };
    Ok(HkReport { found: h.is_some(), h, k, closure_condition_holds, diameter })
}

/// Size guards for [`connection_set_search`].
pub const SEARCH_MAX_VALENCY: usize = 12;
pub const SEARCH_MAX_ORDER: usize = 256;

/// Does a non-backtracking closed walk of length `< limit` start at `e`?
/// Any such walk contains a cycle no longer than itself.
fn has_short_cycle(g: &Group, s: &[Elem], limit: usize) -> bool {
    fn walk(g: &Group, s: &[Elem], cur: Elem, last: Option<Elem>, len: usize, limit: usize) -> bool {
        if len > 0 && cur == g.identity() {
            return true;
        }
        if len + 1 >= limit {
            return false;
        }
        for &x in s {
            if last.is_some_and(|l| g.inv(l) == x) {
                continue;
            }
            if walk(g, s, g.mul(x, cur), Some(x), len + 1, limit) {
                return true;
            }
        }
        false
    }
    walk(g, s, g.identity(), None, 0, limit)
}

/// Checks the intersection numbers of `Cay(G, S)` from the identity only,
/// which suffices because Cayley graphs are vertex-transitive.
pub fn cayley_matches_array(g: &Group, s: &[Elem], target: &IntersectionArray) -> bool {
    let n = g.order();
    let e = g.identity();
    let mut dist = vec![usize::MAX; n];
    dist[e] = 0;
    let mut queue = vec![e];
    let mut i = 0;
    while i < queue.len() {
        let u = queue[i];
        i += 1;
        for &x in s {
            let w = g.mul(x, u);
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push(w);
            }
        }
    }
    if queue.len() != n {
        return false;
    }
    for y in 0..n {
        let d = dist[y];
        if d > target.diameter() {
            return false;
        }
        let (mut down, mut up) = (0, 0);
        for &x in s {
            let w = dist[g.mul(x, y)];
            if w + 1 == d {
                down += 1;
            } else if w == d + 1 {
                up += 1;
            }
        }
        if down != target.c(d) || up != target.b(d) {
            return false;
        }
    }
    true
}

/// Every inverse-closed identity-free `S ⊆ G` with `Cay(G, S)`
/// distance-regular with array `target`, in lexicographic order.
///
/// An empty result is a proof of non-existence over this `G`.
pub fn connection_set_search(g: &Group, target: &IntersectionArray, budget: &dyn Budget) -> Result<Vec<ConnectionSet>> {
    let n = g.order();
    let k = target.valency();
    if target.order() != Some(n as u128) {
        return Err(Error::Precondition(format!("target has {:?} vertices, group has order {n}", target.order())));
    }
    if k > SEARCH_MAX_VALENCY || n > SEARCH_MAX_ORDER {
        return Err(Error::SizeGuard(format!(
            "search limited to valency {SEARCH_MAX_VALENCY} and order {SEARCH_MAX_ORDER}"
        )));
    }
    let girth = target.girth().unwrap_or(usize::MAX);
    let no_4cycles = target.c(2) <= 1 && target.a(1) <= 1 && target.diameter() >= 2;
    if g.is_abelian() && k > 2 && no_4cycles {
        return Ok(Vec::new());
    }
    let e = g.identity();
    // inverse classes {x, x^-1}, ordered by least element
    let mut classes: Vec<Vec<Elem>> = Vec::new();
    for x in 0..n {
        if x == e || g.inv(x) < x {
            continue;
        }
        let m = g.element_order(x);
        // an element of order m > 2 in S closes an m-cycle
        if m > 2 && m < girth {
            continue;
        }
        classes.push(if g.inv(x) == x { vec![x] } else { vec![x, g.inv(x)] });
    }
    let mut ctx =
        Search { g, target, classes: &classes, budget, girth, out: Vec::new(), chosen: Vec::new(), aborted: false };
    ctx.go(0, k);
    if ctx.aborted {
        return Err(Error::BudgetExceeded);
    }
    let mut out = ctx.out;
    out.sort();
    Ok(out)
}

struct Search<'a> {
    g: &'a Group,
    target: &'a IntersectionArray,
    classes: &'a [Vec<Elem>],
    budget: &'a dyn Budget,
    girth: usize,
    out: Vec<ConnectionSet>,
    chosen: Vec<Elem>,
    aborted: bool,
}

impl Search<'_> {
    fn consistent(&self, next_class: usize) -> bool {
        let g = self.g;
        let s = &self.chosen;
        if self.girth > 3 && has_short_cycle(g, s, self.girth) {
            return false;
        }
        let common = |x: Elem| s.iter().filter(|&&y| s.contains(&g.mul(y, g.inv(x)))).count();
        // adjacent pairs (e, x) share a_1 neighbours in the end
        if s.iter().any(|&x| common(x) > self.target.a(1)) {
            return false;
        }
        // elements already passed over end at distance >= 2
        let mu = if self.target.diameter() >= 2 { self.target.c(2) } else { 0 };
        for cls in &self.classes[..next_class] {
            if !s.contains(&cls[0]) && common(cls[0]) > mu {
                return false;
            }
        }
        true
    }

    fn go(&mut self, idx: usize, remaining: usize) {
        if self.aborted {
            return;
        }
        if self.budget.exhausted() {
            self.aborted = true;
            return;
        }
        if !self.consistent(idx) {
            return;
        }
        if remaining == 0 {
            if cayley_matches_array(self.g, &self.chosen, self.target) {
                let cs = ConnectionSet::new(self.g, &self.chosen).expect("classes are inverse-closed");
                self.out.push(cs);
            }
            return;
        }
        if idx == self.classes.len() {
            return;
        }
        let cls = &self.classes[idx];
        if cls.len() <= remaining {
            let mark = self.chosen.len();
            self.chosen.extend_from_slice(cls);
            self.go(idx + 1, remaining - cls.len());
            self.chosen.truncate(mark);
        }
        self.go(idx + 1, remaining);
    }
}
