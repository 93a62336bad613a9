//! Permutations on `0..n` and permutation groups via Schreier–Sims.
//!
//! Products compose left to right: `(p * q)(x) = q(p(x))`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n as u32).collect() }
    }

    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(Error::InvalidParameter(format!("image list is not a bijection on 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { image: image.into_iter().map(|x| x as u32).collect() })
    }

    /// Builds from 0-based cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x >= n || seen[x] {
                    return Err(Error::InvalidParameter(format!("bad cycle point {x}")));
                }
                seen[x] = true;
                image[x] = c[(i + 1) % c.len()];
            }
        }
        Self::from_images(image)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&x| x as usize).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn fixed_points(&self) -> usize {
        self.image.iter().enumerate().filter(|&(x, &y)| x as u32 == y).count()
    }

    /// Cycles of length at least 2, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if seen[i] || self.apply(i) == i {
                continue;
            }
            let mut c = Vec::new();
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            out.push(c);
        }
        out
    }

    /// Order as the lcm of cycle lengths; `None` on u128 overflow.
    pub fn order(&self) -> Option<u128> {
        self.cycles().iter().try_fold(1u128, |acc, c| {
            let l = c.len() as u128;
            (acc / gcd(acc, l)).checked_mul(l)
        })
    }

    pub fn cycle_string(&self) -> String {
        let mut s = String::new();
        for c in self.cycles() {
            s.push('(');
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                s.push_str(&format!("{x}"));
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation { image: self.image.iter().map(|&x| rhs.image[x as usize]).collect() }
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    // transversal[β] maps `point` to β
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(point: usize, n: usize) -> Self {
        let mut l = Level { point, gens: Vec::new(), orbit: Vec::new(), transversal: vec![None; n] };
        l.rebuild(n);
        l
    }

    fn rebuild(&mut self, n: usize) {
        self.transversal = vec![None; n];
        self.transversal[self.point] = Some(Permutation::identity(n));
        self.orbit = vec![self.point];
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for g in &self.gens {
                let c = g.apply(b);
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().unwrap() * g;
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

/// A permutation group with a base and strong generating set.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermutationGroup {
    pub fn trivial(n: usize) -> Self {
        PermutationGroup { degree: n, generators: Vec::new(), levels: Vec::new() }
    }

    pub fn new(n: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_base(n, generators, &[])
    }

    /// Runs deterministic Schreier–Sims with `base_prefix` as the first base
    /// points, so that level `i` is the pointwise stabilizer of the prefix.
    pub fn with_base(n: usize, generators: Vec<Permutation>, base_prefix: &[usize]) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != n) {
            return Err(Error::InvalidParameter(format!("generator of degree {} in group of degree {n}", g.degree())));
        }
        if let Some(&b) = base_prefix.iter().find(|&&b| b >= n) {
            return Err(Error::InvalidParameter(format!("base point {b} out of range")));
        }
        let generators: Vec<Permutation> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        let mut grp = PermutationGroup { degree: n, generators: generators.clone(), levels: Vec::new() };
        let mut base: Vec<usize> = Vec::new();
        for &b in base_prefix {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        for g in &generators {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push((0..n).find(|&x| g.apply(x) != x).unwrap());
            }
        }
        for &b in &base {
            grp.levels.push(Level::new(b, n));
        }
        for g in &generators {
            // g lands on every level whose base prefix it fixes
            for i in 0..grp.levels.len() {
                grp.levels[i].gens.push(g.clone());
                if g.apply(grp.levels[i].point) != grp.levels[i].point {
                    break;
                }
            }
        }
        for l in &mut grp.levels {
            l.rebuild(n);
        }
        grp.complete();
        Ok(grp)
    }

    fn complete(&mut self) {
        let n = self.degree;
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            let mut restarted = false;
            'scan: for bi in 0..self.levels[lvl].orbit.len() {
                let beta = self.levels[lvl].orbit[bi];
                for si in 0..self.levels[lvl].gens.len() {
                    let s = &self.levels[lvl].gens[si];
                    let ub = self.levels[lvl].transversal[beta].as_ref().unwrap();
                    let ubs = self.levels[lvl].transversal[s.apply(beta)].as_ref().unwrap();
                    let h = &(ub * s) * &ubs.inverse();
                    let (r, j) = self.strip(h, lvl + 1);
                    let k = self.levels.len();
                    if j < k || !r.is_identity() {
                        if j == k {
                            let p = (0..n).find(|&x| r.apply(x) != x).unwrap();
                            self.levels.push(Level::new(p, n));
                        }
                        for l in lvl + 1..=j {
                            self.levels[l].gens.push(r.clone());
                            self.levels[l].rebuild(n);
                        }
                        i = j as isize;
                        restarted = true;
                        break 'scan;
                    }
                }
            }
            if !restarted {
                i -= 1;
            }
        }
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// where sifting stopped (`levels.len()` if it went all the way).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = g.apply(level.point);
            match &level.transversal[b] {
                Some(u) => g = &g * &u.inverse(),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Basic orbit lengths along the base.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Exact order; `None` if it does not fit in u128.
    pub fn order(&self) -> Option<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (r, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && r.is_identity()
    }

    /// Orbits of the whole group, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    /// Strong generators of the pointwise stabilizer of the first `depth`
    /// base points.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels.get(depth).map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// The orbit of base point `depth` under the stabilizer of the earlier ones.
    pub fn basic_orbit(&self, depth: usize) -> &[usize] {
        self.levels.get(depth).map(|l| l.orbit.as_slice()).unwrap_or(&[])
    }

    /// The transversal element at level `depth` mapping the base point to `beta`.
    pub fn transversal(&self, depth: usize, beta: usize) -> Option<&Permutation> {
        self.levels.get(depth).and_then(|l| l.transversal[beta].as_ref())
    }

    /// All elements of the stabilizer of the first `depth` base points, in a
    /// deterministic order. Fails if there are more than `limit`.
    pub fn stabilizer_elements(&self, depth: usize, limit: usize) -> Result<Vec<Permutation>> {
        let size = self.levels.iter().skip(depth).try_fold(1usize, |acc, l| acc.checked_mul(l.orbit.len()));
        match size {
            Some(s) if s <= limit => {}
            _ => return Err(Error::SizeGuard(format!("stabilizer has more than {limit} elements"))),
        }
        let mut out = vec![Permutation::identity(self.degree)];
        // g = u_{k-1} * ... * u_{depth}, built from the deepest level up
        for l in self.levels.iter().skip(depth).rev() {
            let mut next = Vec::with_capacity(out.len() * l.orbit.len());
            for h in &out {
                for &b in &l.orbit {
                    next.push(h * l.transversal[b].as_ref().unwrap());
                }
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }
}

/// Orbits of the group generated by `gens` on `0..n`.
pub fn orbits_of(n: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut orb = vec![s];
        let mut i = 0;
        while i < orb.len() {
            let x = orb[i];
            for g in gens {
                let y = g.apply(x);
                if comp[y] == usize::MAX {
                    comp[y] = id;
                    orb.push(y);
                }
            }
            i += 1;
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}
