//! Automorphism groups and canonical forms by individualization-refinement.
//!
//! Nodes of the search tree are ordered partitions made equitable by
//! neighbour-count refinement. Each node carries a hash of its refinement
//! history (the trace), which is an isomorphism invariant. Leaves are
//! discrete partitions, read as vertex orderings.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::perm::{orbits_of, Permutation, PermutationGroup};

/// Scale at which searches run without an explicit budget concern.
pub const CATALOG_SCALE: usize = 256;

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    // splitmix64 finalizer over the running state
    let mut z = h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
struct Partition {
    lab: Vec<usize>,
    pos: Vec<usize>,
    // start of the cell holding each position
    cstart: Vec<usize>,
    // end of the cell, indexed by its start
    cend: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition { lab: (0..n).collect(), pos: (0..n).collect(), cstart: vec![0; n], cend: vec![n; n.max(1)] }
    }

    /// First non-singleton cell of least size.
    fn target_cell(&self) -> Option<(usize, usize)> {
        let n = self.lab.len();
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < n {
            let e = self.cend[s];
            if e - s > 1 && best.is_none_or(|(bs, be)| e - s < be - bs) {
                best = Some((s, e));
            }
            s = e;
        }
        best
    }

    fn set_cell(&mut self, s: usize, e: usize) {
        self.cend[s] = e;
        for p in s..e {
            self.cstart[p] = s;
        }
    }
}

struct Engine<'a> {
    g: &'a Graph,
    n: usize,
    adj: Vec<Vec<usize>>,
    budget: &'a dyn Budget,
}

struct FirstPath {
    partitions: Vec<Partition>,
    traces: Vec<u64>,
    cells: Vec<(usize, usize)>,
    leaf: Vec<u64>,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, budget: &'a dyn Budget) -> Self {
        let adj = (0..g.order()).map(|v| g.neighbors(v).collect()).collect();
        Engine { g, n: g.order(), adj, budget }
    }

    fn tick(&self) -> Result<()> {
        if self.budget.exhausted() {
            Err(Error::BudgetExceeded)
        } else {
            Ok(())
        }
    }

    /// Refines to the coarsest equitable partition finer than `p`, starting
    /// from the splitter cells in `queue`. Returns the trace hash.
    fn refine(&self, p: &mut Partition, mut queue: Vec<usize>, mut h: u64) -> u64 {
        let n = self.n;
        let mut in_queue = vec![false; n];
        for &s in &queue {
            in_queue[s] = true;
        }
        let mut counts = vec![0usize; n];
        let mut head = 0;
        while head < queue.len() {
            let w = queue[head];
            head += 1;
            in_queue[w] = false;
            counts.iter_mut().for_each(|c| *c = 0);
            for q in w..p.cend[w] {
                for &u in &self.adj[p.lab[q]] {
                    counts[u] += 1;
                }
            }
            h = mix(h, w as u64);
            let mut s = 0;
            while s < n {
                let e = p.cend[s];
                if e - s == 1 {
                    h = mix(h, counts[p.lab[s]] as u64);
                    s = e;
                    continue;
                }
                let cell = &mut p.lab[s..e];
                cell.sort_by_key(|&v| counts[v]);
                let lo = counts[cell[0]];
                let hi = counts[cell[e - s - 1]];
                h = mix(mix(h, lo as u64), hi as u64);
                if lo != hi {
                    let mut frags = Vec::new();
                    let mut a = s;
                    for q in s + 1..=e {
                        if q == e || counts[p.lab[q]] != counts[p.lab[a]] {
                            frags.push((a, q));
                            a = q;
                        }
                    }
                    for &(a, b) in &frags {
                        p.set_cell(a, b);
                        for q in a..b {
                            p.pos[p.lab[q]] = q;
                        }
                        h = mix(mix(h, counts[p.lab[a]] as u64), (b - a) as u64);
                    }
                    let largest =
                        frags.iter().enumerate().max_by_key(|&(i, &(a, b))| (b - a, usize::MAX - i)).unwrap().0;
                    for (i, &(a, _)) in frags.iter().enumerate() {
                        if !in_queue[a] && (in_queue[s] || i != largest) {
                            in_queue[a] = true;
                            queue.push(a);
                        }
                    }
                }
                s = e;
            }
        }
        h
    }

    fn root(&self) -> (Partition, u64) {
        let mut p = Partition::unit(self.n);
        let h = if self.n == 0 { 0 } else { self.refine(&mut p, vec![0], mix(0, self.n as u64)) };
        (p, h)
    }

    fn individualize(&self, p: &Partition, v: usize) -> (Partition, u64) {
        let mut c = p.clone();
        let s = c.cstart[c.pos[v]];
        let e = c.cend[s];
        let q = c.pos[v];
        let u = c.lab[s];
        c.lab.swap(s, q);
        c.pos[v] = s;
        c.pos[u] = q;
        c.set_cell(s, s + 1);
        c.set_cell(s + 1, e);
        let h = self.refine(&mut c, vec![s], mix(s as u64, (e - s) as u64));
        (c, h)
    }

    /// Adjacency of the graph relabelled so that `lab[i]` becomes `i`.
    fn leaf_graph(&self, lab: &[usize]) -> Vec<u64> {
        let w = self.n.div_ceil(64);
        let mut out = vec![0u64; self.n * w];
        let mut inv = vec![0; self.n];
        for (i, &v) in lab.iter().enumerate() {
            inv[v] = i;
        }
        for (i, &v) in lab.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = inv[u];
                out[i * w + j / 64] |= 1 << (j % 64);
            }
        }
        out
    }

    fn first_path(&self) -> Result<FirstPath> {
        let (mut p, mut h) = self.root();
        let mut fp = FirstPath { partitions: Vec::new(), traces: vec![h], cells: Vec::new(), leaf: Vec::new() };
        while let Some((s, e)) = p.target_cell() {
            self.tick()?;
            let v = p.lab[s];
            fp.partitions.push(p.clone());
            fp.cells.push((s, e));
            (p, h) = self.individualize(&p, v);
            fp.traces.push(h);
        }
        fp.leaf = self.leaf_graph(&p.lab);
        fp.partitions.push(p);
        Ok(fp)
    }

    /// A leaf below `p` (at `level`) equivalent to the first leaf.
    fn equivalent_leaf(&self, p: &Partition, level: usize, fp: &FirstPath) -> Result<Option<Vec<usize>>> {
        self.tick()?;
        match p.target_cell() {
            None => {
                let ok = level + 1 == fp.partitions.len() && self.leaf_graph(&p.lab) == fp.leaf;
                Ok(ok.then(|| p.lab.clone()))
            }
            Some(cell) => {
                if fp.cells.get(level) != Some(&cell) {
                    return Ok(None);
                }
                for q in cell.0..cell.1 {
                    let (c, h) = self.individualize(p, p.lab[q]);
                    if h != fp.traces[level + 1] {
                        continue;
                    }
                    if let Some(l) = self.equivalent_leaf(&c, level + 1, fp)? {
                        return Ok(Some(l));
                    }
                }
                Ok(None)
            }
        }
    }

    fn automorphisms(&self) -> Result<(Vec<Permutation>, Vec<usize>)> {
        let fp = self.first_path()?;
        let first_lab = &fp.partitions.last().unwrap().lab;
        let base: Vec<usize> = fp.cells.iter().zip(&fp.partitions).map(|(&(s, _), p)| p.lab[s]).collect();
        let mut gens: Vec<Permutation> = Vec::new();
        for level in (0..fp.cells.len()).rev() {
            let p = &fp.partitions[level];
            let (s, e) = fp.cells[level];
            let mut orbit = orbit_of(self.n, &gens, base[level]);
            for q in s + 1..e {
                let w = p.lab[q];
                if orbit[w] {
                    continue;
                }
                let (c, h) = self.individualize(p, w);
                if h != fp.traces[level + 1] {
                    continue;
                }
                if let Some(lab) = self.equivalent_leaf(&c, level + 1, &fp)? {
                    let mut image = vec![0; self.n];
                    for (i, &v) in first_lab.iter().enumerate() {
                        image[v] = lab[i];
                    }
                    if !self.g.is_automorphism(&image) {
                        return Err(Error::NotAutomorphism);
                    }
                    gens.push(Permutation::from_images(image)?);
                    orbit = orbit_of(self.n, &gens, base[level]);
                }
            }
        }
        Ok((gens, base))
    }
}

fn orbit_of(n: usize, gens: &[Permutation], x: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut stack = vec![x];
    while let Some(y) = stack.pop() {
        for g in gens {
            let z = g.apply(y);
            if !seen[z] {
                seen[z] = true;
                stack.push(z);
            }
        }
    }
    seen
}

/// The full automorphism group, with the first search path as base.
pub fn automorphism_group(g: &Graph, budget: &dyn Budget) -> Result<PermutationGroup> {
    let eng = Engine::new(g, budget);
    let (gens, base) = eng.automorphisms()?;
    PermutationGroup::with_base(g.order(), gens, &base)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `labeling[i]` is the vertex placed at position `i`.
    pub labeling: Vec<usize>,
    /// graph6 of the canonically relabelled graph.
    pub certificate: String,
}

impl CanonicalForm {
    pub fn graph(&self) -> Graph {
        graph6::decode(&self.certificate).expect("certificate is valid graph6")
    }
}

struct Best {
    trace: Vec<u64>,
    leaf: Vec<u64>,
    lab: Vec<usize>,
}

impl Engine<'_> {
    fn canon_search(
        &self,
        p: &Partition,
        path: &mut Vec<usize>,
        trace: &mut Vec<u64>,
        aut: &[Permutation],
        best: &mut Option<Best>,
    ) -> Result<()> {
        self.tick()?;
        if let Some(b) = best.as_ref() {
            let m = trace.len().min(b.trace.len());
            if trace[..m] < b.trace[..m] {
                return Ok(());
            }
        }
        let Some((s, e)) = p.target_cell() else {
            let leaf = self.leaf_graph(&p.lab);
            let better = match best.as_ref() {
                None => true,
                Some(b) => (trace.as_slice(), leaf.as_slice()) > (b.trace.as_slice(), b.leaf.as_slice()),
            };
            if better {
                *best = Some(Best { trace: trace.clone(), leaf, lab: p.lab.clone() });
            }
            return Ok(());
        };
        // children in one orbit of the path stabilizer have isomorphic subtrees
        let stab = if aut.is_empty() {
            Vec::new()
        } else {
            PermutationGroup::with_base(self.n, aut.to_vec(), path)?.stabilizer_generators(path.len())
        };
        let orbit_id = {
            let mut id = vec![usize::MAX; self.n];
            for (i, o) in orbits_of(self.n, &stab).iter().enumerate() {
                for &x in o {
                    id[x] = i;
                }
            }
            id
        };
        let mut tried = Vec::new();
        for q in s..e {
            let v = p.lab[q];
            if tried.contains(&orbit_id[v]) {
                continue;
            }
            tried.push(orbit_id[v]);
            let (c, h) = self.individualize(p, v);
            path.push(v);
            trace.push(h);
            self.canon_search(&c, path, trace, &stab, best)?;
            path.pop();
            trace.pop();
        }
        Ok(())
    }
}

/// Canonical labelling: equal certificates iff isomorphic graphs.
pub fn canonical_form(g: &Graph, budget: &dyn Budget) -> Result<CanonicalForm> {
    let eng = Engine::new(g, budget);
    let (aut, _) = eng.automorphisms()?;
    let (p, h) = eng.root();
    let mut best = None;
    eng.canon_search(&p, &mut Vec::new(), &mut vec![h], &aut, &mut best)?;
    let lab = best.map(|b| b.lab).unwrap_or_default();
    let mut inv = vec![0; g.order()];
    for (i, &v) in lab.iter().enumerate() {
        inv[v] = i;
    }
    let certificate = graph6::encode(&g.relabel(&inv));
    Ok(CanonicalForm { labeling: lab, certificate })
}

pub fn is_isomorphic(a: &Graph, b: &Graph, budget: &dyn Budget) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a, budget)?.certificate == canonical_form(b, budget)?.certificate)
}

/// Checks every generator preserves adjacency.
pub fn verify_automorphisms(g: &Graph, grp: &PermutationGroup) -> Result<()> {
    for s in grp.generators() {
        if !g.is_automorphism(&s.images()) {
            return Err(Error::Precondition(format!("generator {s:?} is not an automorphism")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{StepBudget, Unlimited};
    use crate::graph::{complete, complete_multipartite, cycle, hypercube, kneser, lcf};

    fn order(g: &Graph) -> u128 {
        let a = automorphism_group(g, &Unlimited).unwrap();
        verify_automorphisms(g, &a).unwrap();
        a.order().unwrap()
    }

    // every permutation of a small vertex set, tested directly
    fn brute_force_order(g: &Graph) -> u128 {
        fn go(g: &Graph, img: &mut Vec<usize>, used: &mut Vec<bool>) -> u128 {
            let k = img.len();
            if k == g.order() {
                return 1;
            }
            let mut total = 0;
            for v in 0..g.order() {
                if used[v] || (0..k).any(|u| g.has_edge(u, k) != g.has_edge(img[u], v)) {
                    continue;
                }
                used[v] = true;
                img.push(v);
                total += go(g, img, used);
                img.pop();
                used[v] = false;
            }
            total
        }
        go(g, &mut Vec::new(), &mut vec![false; g.order()])
    }

    #[test]
    fn petersen_matches_brute_force() {
        let p = kneser(5, 2).unwrap();
        assert_eq!(brute_force_order(&p), 120);
        assert_eq!(order(&p), 120);
    }

    #[test]
    fn small_families() {
        assert_eq!(order(&complete(5)), 120);
        assert_eq!(order(&cycle(7)), 14);
        assert_eq!(order(&hypercube(3).unwrap()), 48);
        assert_eq!(order(&hypercube(4).unwrap()), 384);
        assert_eq!(order(&complete_multipartite(3, 2)), 48);
        assert_eq!(order(&Graph::empty(4)), 24);
        assert_eq!(order(&Graph::empty(0)), 1);
        let heawood = lcf(14, &[5, -5], 7).unwrap();
        assert_eq!(order(&heawood), 336);
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        for seed in 0u64..40 {
            let n = 3 + (seed % 5) as usize;
            let g = Graph::from_fn(n, |u, v| (seed.wrapping_mul(0x9e37_79b9) >> ((u * 5 + v * 3) % 60)) & 1 == 1);
            assert_eq!(order(&g), brute_force_order(&g), "seed {seed}");
        }
    }

    #[test]
    fn canonical_form_is_invariant() {
        let p = kneser(5, 2).unwrap();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        let q = p.relabel(&perm);
        let a = canonical_form(&p, &Unlimited).unwrap();
        let b = canonical_form(&q, &Unlimited).unwrap();
        assert_eq!(a.certificate, b.certificate);
        assert_eq!(
            a.graph(),
            p.relabel(&{
                let mut inv = vec![0; 10];
                for (i, &v) in a.labeling.iter().enumerate() {
                    inv[v] = i;
                }
                inv
            })
        );
        // the 3-prism and K_{3,3} are both cubic on 6 vertices
        let prism = complete(3).cartesian_product(&complete(2));
        assert!(!is_isomorphic(&prism, &complete_multipartite(2, 3), &Unlimited).unwrap());
        assert!(is_isomorphic(
            &hypercube(3).unwrap(),
            &hypercube(3).unwrap().relabel(&[7, 6, 5, 4, 3, 2, 1, 0]),
            &Unlimited
        )
        .unwrap());
    }

    #[test]
    fn canonical_form_separates_small_graphs() {
        // brute-force isomorphism oracle on random 6-vertex graphs
        let gs: Vec<Graph> = (0u64..30)
            .map(|seed| Graph::from_fn(6, |u, v| (seed.wrapping_mul(0x2545_f491) >> ((u * 7 + v) % 50)) & 1 == 1))
            .collect();
        let iso = |a: &Graph, b: &Graph| {
            fn go(a: &Graph, b: &Graph, img: &mut Vec<usize>) -> bool {
                let k = img.len();
                if k == a.order() {
                    return true;
                }
                for v in 0..a.order() {
                    if img.contains(&v) || (0..k).any(|u| a.has_edge(u, k) != b.has_edge(img[u], v)) {
                        continue;
                    }
                    img.push(v);
                    if go(a, b, img) {
                        return true;
                    }
                    img.pop();
                }
                false
            }
            go(a, b, &mut Vec::new())
        };
        for a in &gs {
            for b in &gs {
                assert_eq!(is_isomorphic(a, b, &Unlimited).unwrap(), iso(a, b));
            }
        }
    }

    #[test]
    fn budget_is_reported() {
        assert_eq!(automorphism_group(&kneser(7, 3).unwrap(), &StepBudget::new(3)).unwrap_err(), Error::BudgetExceeded);
    }
}
