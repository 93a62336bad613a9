//! Deciding whether a graph is a Cayley graph: a graph is Cayley iff its
//! automorphism group has a subgroup acting regularly on the vertices.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::autom::automorphism_group;
use crate::budget::Budget;
use crate::cayley::{cayley_graph, ConnectionSet};
use crate::drg::{halving_obstruction, IntersectionArray};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::Group;
use crate::perm::{Permutation, PermutationGroup};

/// Bound on the point stabilizer enumerated as candidate lists.
pub const MAX_STABILIZER: usize = 1 << 20;

#[derive(Debug, Clone)]
pub enum RegularSearch {
    /// `witness[v]` is the unique element mapping vertex 0 to `v`.
    Found(Vec<Permutation>),
    /// Every branch was closed; `nodes` counts the search nodes visited.
    Exhausted { nodes: u64 },
}

// A partial semiregular subgroup, indexed by the image of vertex 0.
#[derive(Clone)]
struct Partial {
    by_image: Vec<Option<Permutation>>,
    size: usize,
    gens: Vec<Permutation>,
}

impl Partial {
    fn trivial(n: usize) -> Self {
        let mut by_image = vec![None; n];
        if n > 0 {
            by_image[0] = Some(Permutation::identity(n));
        }
        Partial { by_image, size: 1, gens: Vec::new() }
    }

    /// Closure with `s` added, or `None` if it is not semiregular or its
    /// order does not divide `n`.
    fn extend(&self, s: &Permutation) -> Option<Partial> {
        let n = self.by_image.len();
        let mut next = self.clone();
        next.gens.push(s.clone());
        let mut queue: Vec<Permutation> = self.by_image.iter().flatten().cloned().collect();
        let mut i = 0;
        while i < queue.len() {
            for g in &next.gens {
                let y = &queue[i] * g;
                let v = y.apply(0);
                match &next.by_image[v] {
                    Some(z) if *z == y => {}
                    Some(_) => return None,
                    None => {
                        if y.fixed_points() > 0 {
                            return None;
                        }
                        next.size += 1;
                        if next.size > n {
                            return None;
                        }
                        next.by_image[v] = Some(y.clone());
                        queue.push(y);
                    }
                }
            }
            i += 1;
        }
        n.is_multiple_of(next.size).then_some(next)
    }
}

fn semiregular(p: &Permutation) -> bool {
    let cycles = p.cycles();
    cycles.windows(2).all(|w| w[0].len() == w[1].len()) && (cycles.len() == 1 || cycles[0].len() > 1)
}

/// Searches `a` (the automorphism group of `g`) for a regular subgroup.
///
/// The element `σ_v` taking vertex 0 to `v` is chosen for the least vertex
/// not yet reached, trying candidates in lexicographic order of images;
/// each choice is closed under composition and pruned as soon as the
/// closure stops being semiregular or its order stops dividing `n`.
pub fn regular_subgroup_search(a: &PermutationGroup, g: &Graph, budget: &dyn Budget) -> Result<RegularSearch> {
    let n = g.order();
    if a.degree() != n {
        return Err(Error::Precondition("group degree differs from graph order".into()));
    }
    if n == 0 {
        return Ok(RegularSearch::Exhausted { nodes: 0 });
    }
    let a0 = PermutationGroup::with_base(n, a.generators().to_vec(), &[0])?;
    if a0.basic_orbit(0).len() != n && n > 1 {
        return Ok(RegularSearch::Exhausted { nodes: 0 });
    }
    let stab = a0.stabilizer_elements(1, MAX_STABILIZER)?;
    let mut cands = Candidates { a0: &a0, stab, lists: vec![None; n] };
    // The root branches on σ_1. Conjugating a regular subgroup by anything
    // fixing 0 and 1 gives another one, so one σ_1 per conjugacy orbit of
    // that stabilizer suffices.
    if n > 1 {
        let fix01 = PermutationGroup::with_base(n, a.generators().to_vec(), &[0, 1])?.stabilizer_generators(2);
        let reps = conjugacy_representatives(cands.get(1), &fix01);
        cands.lists[1] = Some(reps);
    }
    let mut nodes = 0u64;
    let found = search(&Partial::trivial(n), &mut cands, budget, &mut nodes)?;
    let Some(r) = found else {
        return Ok(RegularSearch::Exhausted { nodes });
    };
    let witness: Vec<Permutation> = r.by_image.into_iter().map(|x| x.expect("regular")).collect();
    verify_regular(g, &witness)?;
    Ok(RegularSearch::Found(witness))
}

/// Least element of each orbit of `gens` acting on `set` by conjugation.
fn conjugacy_representatives(set: &[Permutation], gens: &[Permutation]) -> Vec<Permutation> {
    let inverses: Vec<Permutation> = gens.iter().map(Permutation::inverse).collect();
    let mut seen = vec![false; set.len()];
    let mut reps = Vec::new();
    for i in 0..set.len() {
        if seen[i] {
            continue;
        }
        seen[i] = true;
        reps.push(set[i].clone());
        let mut stack = vec![i];
        while let Some(j) = stack.pop() {
            for (h, hi) in gens.iter().zip(&inverses) {
                let c = &(hi * &set[j]) * h;
                if let Ok(k) = set.binary_search(&c) {
                    if !seen[k] {
                        seen[k] = true;
                        stack.push(k);
                    }
                }
            }
        }
    }
    reps
}

// Semiregular elements taking 0 to each vertex, built on first use.
struct Candidates<'a> {
    a0: &'a PermutationGroup,
    stab: Vec<Permutation>,
    lists: Vec<Option<Vec<Permutation>>>,
}

impl Candidates<'_> {
    fn get(&mut self, v: usize) -> &[Permutation] {
        if self.lists[v].is_none() {
            let u = self.a0.transversal(0, v).expect("vertex-transitive");
            let mut list: Vec<Permutation> = self.stab.iter().map(|h| h * u).filter(semiregular).collect();
            list.sort();
            self.lists[v] = Some(list);
        }
        self.lists[v].as_deref().unwrap()
    }
}

fn search(r: &Partial, cands: &mut Candidates, budget: &dyn Budget, nodes: &mut u64) -> Result<Option<Partial>> {
    *nodes += 1;
    if budget.exhausted() {
        return Err(Error::BudgetExceeded);
    }
    let Some(v) = r.by_image.iter().position(Option::is_none) else {
        return Ok(Some(r.clone()));
    };
    let list = cands.get(v).to_vec();
    for s in &list {
        if let Some(next) = r.extend(s) {
            if let Some(done) = search(&next, cands, budget, nodes)? {
                return Ok(Some(done));
            }
        }
    }
    Ok(None)
}

/// Closure, identity and sharp transitivity of a claimed regular subgroup,
/// plus adjacency preservation of each element.
pub fn verify_regular(g: &Graph, witness: &[Permutation]) -> Result<()> {
    let n = g.order();
    let fail = |m: String| Err(Error::Precondition(m));
    if witness.len() != n || witness.first().is_some_and(|e| !e.is_identity()) {
        return fail("witness must list n elements starting with the identity".into());
    }
    for (v, s) in witness.iter().enumerate() {
        if s.apply(0) != v {
            return fail(format!("element {v} does not map 0 to {v}"));
        }
        if !g.is_automorphism(&s.images()) {
            return Err(Error::NotAutomorphism);
        }
    }
    for x in witness {
        for y in witness {
            let z = x * y;
            if witness[z.apply(0)] != z {
                return fail("witness is not closed under composition".into());
            }
        }
    }
    Ok(())
}

/// Reads the regular group off the witness: element `v` is `σ_v`, with
/// `v · w = σ_w(v)`. Then `v ~ w` iff `v w^-1` lies in the neighbourhood
/// of 0, so the graph equals `Cay(G, N(0))` on the nose.
pub fn witness_to_cayley(g: &Graph, witness: &[Permutation]) -> Result<(Group, ConnectionSet)> {
    let n = g.order();
    let table: Vec<Vec<usize>> = (0..n).map(|v| (0..n).map(|w| witness[w].apply(v)).collect()).collect();
    let labels = g.labels().map(|l| l.to_vec());
    let grp = Group::from_table(table, labels)?;
    let s: Vec<usize> = g.neighbors(0).collect();
    let s = ConnectionSet::new(&grp, &s)?;
    if cayley_graph(&grp, &s) != *g {
        return Err(Error::Precondition("reconstructed Cayley graph differs from the input".into()));
    }
    Ok((grp, s))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoCertificate {
    NotVertexTransitive {
        orbits: usize,
    },
    /// The regular-subgroup search closed every branch.
    Exhausted {
        aut_order: u128,
        nodes: u64,
    },
    /// Spectral index-2 argument for `n = 2 mod 4`.
    Halving(String),
}

#[derive(Debug, Clone)]
pub enum CayleyVerdict {
    Yes { group: Group, connection_set: ConnectionSet, aut_order: u128 },
    No(Vec<NoCertificate>),
    Unknown(String),
}

impl CayleyVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, CayleyVerdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, CayleyVerdict::No(_))
    }

    /// True when a "no" was settled by exhausting the search.
    pub fn is_exhaustive_no(&self) -> bool {
        match self {
            CayleyVerdict::No(c) => c
                .iter()
                .any(|x| matches!(x, NoCertificate::Exhausted { .. } | NoCertificate::NotVertexTransitive { .. })),
            _ => false,
        }
    }
}

impl fmt::Display for CayleyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CayleyVerdict::Yes { group, .. } => write!(f, "yes (group of order {})", group.order()),
            CayleyVerdict::No(certs) => {
                let parts: Vec<String> = certs
                    .iter()
                    .map(|c| match c {
                        NoCertificate::NotVertexTransitive { .. } => "not vertex-transitive".to_string(),
                        NoCertificate::Exhausted { .. } => "exhaustive".to_string(),
                        NoCertificate::Halving(_) => "halving".to_string(),
                    })
                    .collect();
                write!(f, "no ({})", parts.join(", "))
            }
            CayleyVerdict::Unknown(why) => write!(f, "unknown ({why})"),
        }
    }
}

/// Decides Cayleyness by computing the automorphism group and searching it
/// for a regular subgroup.
pub fn is_cayley(g: &Graph, budget: &dyn Budget) -> Result<CayleyVerdict> {
    is_cayley_with_array(g, None, budget)
}

/// As [`is_cayley`], first consulting the index-2 spectral argument when
/// the intersection array is known and `n = 2 mod 4` (every group of such
/// order has a subgroup of index 2). Both routes must agree.
pub fn is_cayley_with_array(
    g: &Graph,
    array: Option<&IntersectionArray>,
    budget: &dyn Budget,
) -> Result<CayleyVerdict> {
    let n = g.order();
    let mut certs = Vec::new();
    if let Some(a) = array {
        let h = halving_obstruction(a);
        if n % 4 == 2 && h.obstructed {
            certs.push(NoCertificate::Halving(h.message(n as u128)));
        }
    }
    let aut = match automorphism_group(g, budget) {
        Ok(a) => a,
        Err(Error::BudgetExceeded) => return Ok(unknown_or(certs, "budget exceeded in automorphism group".into())),
        Err(e) => return Err(e),
    };
    let aut_order = aut.order().unwrap_or(u128::MAX);
    let orbits = aut.orbits().len();
    if orbits > 1 {
        certs.push(NoCertificate::NotVertexTransitive { orbits });
        return Ok(CayleyVerdict::No(certs));
    }
    match regular_subgroup_search(&aut, g, budget) {
        Ok(RegularSearch::Found(w)) => {
            if !certs.is_empty() {
                return Err(Error::Precondition("halving argument contradicts a regular subgroup".into()));
            }
            let (group, connection_set) = witness_to_cayley(g, &w)?;
            Ok(CayleyVerdict::Yes { group, connection_set, aut_order })
        }
        Ok(RegularSearch::Exhausted { nodes }) => {
            certs.push(NoCertificate::Exhausted { aut_order, nodes });
            Ok(CayleyVerdict::No(certs))
        }
        Err(Error::BudgetExceeded) => Ok(unknown_or(certs, "budget exceeded in regular subgroup search".into())),
        // Dense graphs (K_n for n > 10, say) have stabilizers too large to list.
        Err(Error::SizeGuard(m)) => Ok(unknown_or(certs, m)),
        Err(e) => Err(e),
    }
}

fn unknown_or(certs: Vec<NoCertificate>, why: String) -> CayleyVerdict {
    if certs.is_empty() {
        CayleyVerdict::Unknown(why)
    } else {
        CayleyVerdict::No(certs)
    }
}
