//! Finite groups stored as explicit multiplication tables.
//!
//! Every group used by the catalog has order well below a few hundred, so a
//! dense `n × n` table makes products, inverses and conjugation O(1).
//! Elements are plain indices `0..n`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{prime_power, GaloisField};

pub type Elem = usize;

/// Largest order accepted by the constructors.
pub const MAX_ORDER: usize = 4096;
/// Associativity is audited exhaustively up to this order.
pub const FULL_AUDIT_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    identity: Elem,
    inverse: Vec<u32>,
    labels: Vec<String>,
}

/// A subgroup, kept as the sorted list of its elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    elements: Vec<Elem>,
}

impl Subgroup {
    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// Summary of the structural queries used throughout the proofs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSummary {
    pub center: Subgroup,
    pub is_abelian: bool,
    pub involutions: Vec<Elem>,
    pub element_orders: Vec<usize>,
}

/// Result of [`Group::subgroup_ops`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupReport {
    pub closure: Subgroup,
    pub is_normal: bool,
    pub right_cosets: Vec<Vec<Elem>>,
    pub quotient: Option<Group>,
}

/// The order-32 group carrying the Armanios-Wells graph, with its
/// distinguished generators `g1..g4` and central commutator `a`.
#[derive(Debug, Clone)]
pub struct ArmaniosWells {
    pub group: Group,
    pub generators: [Elem; 4],
    pub a: Elem,
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidParameter(format!("group order {n} outside 1..={MAX_ORDER}")));
    }
    Ok(())
}

impl Group {
    /// Builds a group from a full multiplication table, auditing the axioms.
    ///
    /// The error message names the first axiom that fails.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Group> {
        let n = table.len();
        check_order(n)?;
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GroupAxiom(format!("closure: row {a} has {} entries, expected {n}", row.len())));
            }
            for (b, &x) in row.iter().enumerate() {
                if x >= n {
                    return Err(Error::GroupAxiom(format!("closure: {a}*{b} = {x} is not an element")));
                }
                flat.push(x as u32);
            }
        }
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(Error::InvalidParameter(format!("{} labels for {n} elements", l.len())))
            }
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Self::from_flat(n, flat, labels)
    }

    fn from_flat(n: usize, table: Vec<u32>, labels: Vec<String>) -> Result<Group> {
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::GroupAxiom("identity: no two-sided identity element".into()))?;
        let mut inverse = vec![0u32; n];
        for (x, inv) in inverse.iter_mut().enumerate() {
            let y = (0..n)
                .find(|&y| at(x, y) == identity)
                .ok_or_else(|| Error::GroupAxiom(format!("inverses: element {x} has no right inverse")))?;
            if at(y, x) != identity {
                return Err(Error::GroupAxiom(format!("inverses: element {x} has no two-sided inverse")));
            }
            *inv = y as u32;
        }
        let g = Group { order: n, table, identity, inverse, labels };
        g.audit_associativity()?;
        Ok(g)
    }

    fn audit_associativity(&self) -> Result<()> {
        let n = self.order;
        if n <= FULL_AUDIT_ORDER {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::GroupAxiom(format!("associativity: ({a}*{b})*{c} != {a}*({b}*{c})")));
                        }
                    }
                }
            }
        } else {
            // deterministic sparse sample for large tables
            let step = n / 97 + 1;
            for a in (0..n).step_by(step) {
                for b in (0..n).step_by(step) {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::GroupAxiom(format!("associativity: ({a}*{b})*{c} != {a}*({b}*{c})")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Re-runs the full axiom audit (identity, inverses, associativity).
    pub fn audit(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            if self.mul(self.identity, x) != x || self.mul(x, self.identity) != x {
                return Err(Error::GroupAxiom(format!("identity: fails on {x}")));
            }
            if self.mul(x, self.inv(x)) != self.identity {
                return Err(Error::GroupAxiom(format!("inverses: fails on {x}")));
            }
        }
        self.audit_associativity()
    }

    fn from_fn(n: usize, mul: impl Fn(usize, usize) -> usize, labels: Vec<String>) -> Result<Group> {
        check_order(n)?;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(mul(a, b) as u32);
            }
        }
        Self::from_flat(n, table, labels)
    }

    pub fn cyclic(n: usize) -> Result<Group> {
        Self::from_fn(n, |a, b| (a + b) % n, (0..n).map(|i| i.to_string()).collect())
    }

    /// Dihedral group of order `order = 2m`, presented as
    /// `<a, b | a^m = b^2 = 1, bab = a^-1>`.
    ///
    /// Index `i < m` is `a^i`, index `m + i` is `b a^i`.
    pub fn dihedral(order: usize) -> Result<Group> {
        if order < 2 || !order.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!("dihedral order {order} must be even and >= 2")));
        }
        let m = order / 2;
        let mul = |x: usize, y: usize| {
            let (bx, ix) = (x >= m, x % m);
            let (by, iy) = (y >= m, y % m);
            // a^i b = b a^-i
            let exp = if by { (iy + m - ix) % m } else { (ix + iy) % m };
            if bx ^ by {
                m + exp
            } else {
                exp
            }
        };
        let power = |i: usize| match i {
            0 => String::new(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        };
        let mut labels: Vec<String> = (0..m).map(|i| if i == 0 { "e".into() } else { power(i) }).collect();
        labels.extend((0..m).map(|i| format!("b{}", power(i))));
        Self::from_fn(order, mul, labels)
    }

    /// `Z_p^k` as vectors of `k` coordinates mod `p`.
    pub fn elementary_abelian(p: usize, k: usize) -> Result<Group> {
        if prime_power(p) != Some((p, 1)) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        Self::abelian(&vec![p; k])
    }

    /// Direct product of cyclic groups `Z_m1 × ... × Z_mr`.
    pub fn abelian(moduli: &[usize]) -> Result<Group> {
        let n = moduli.iter().try_fold(1usize, |acc, &m| (m >= 1).then(|| acc.checked_mul(m)).flatten());
        let n = n.ok_or_else(|| Error::InvalidParameter("abelian group order overflow".into()))?;
        check_order(n)?;
        let digits = |mut x: usize| -> Vec<usize> {
            let mut d = vec![0; moduli.len()];
            for (i, &m) in moduli.iter().enumerate().rev() {
                d[i] = x % m;
                x /= m;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().zip(moduli).fold(0, |acc, (&x, &m)| acc * m + x);
        let labels = (0..n)
            .map(|x| {
                let d: Vec<String> = digits(x).iter().map(|v| v.to_string()).collect();
                format!("({})", d.join(","))
            })
            .collect();
        Self::from_fn(
            n,
            |a, b| {
                let s: Vec<usize> =
                    digits(a).iter().zip(digits(b)).zip(moduli).map(|((x, y), m)| (x + y) % m).collect();
                encode(&s)
            },
            labels,
        )
    }

    /// Direct product; element `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(g: &Group, h: &Group) -> Result<Group> {
        let (n, m) = (g.order, h.order);
        let labels = (0..n * m).map(|x| format!("({},{})", g.label(x / m), h.label(x % m))).collect();
        Self::from_fn(n * m, |a, b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m), labels)
    }

    /// `Z_n ⋊ Z_m` where the generator of `Z_m` acts as multiplication by `r`.
    ///
    /// Element `(x, i)` has index `i * n + x`. Requires `r^m ≡ 1 (mod n)`.
    pub fn metacyclic(n: usize, m: usize, r: usize) -> Result<Group> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParameter("metacyclic factors must be nonzero".into()));
        }
        let mut pow = vec![1 % n; m + 1];
        for i in 1..=m {
            pow[i] = pow[i - 1] * r % n;
        }
        if pow[m] != 1 % n {
            return Err(Error::InvalidParameter(format!("{r}^{m} is not 1 mod {n}")));
        }
        let labels = (0..n * m).map(|x| format!("({},{})", x % n, x / n)).collect();
        Self::from_fn(
            n * m,
            |a, b| {
                let (x, i) = (a % n, a / n);
                let (y, j) = (b % n, b / n);
                // (x,i)(y,j) = (x + r^i y, i + j)
                ((i + j) % m) * n + (x + pow[i] * y) % n
            },
            labels,
        )
    }

    /// Symmetric group on `{1..n}`, `n <= 5`, with GAP's left-to-right
    /// product: `(p*q)(x) = q(p(x))`. Labels use cycle notation.
    pub fn symmetric(n: usize) -> Result<Group> {
        Self::permutation_group(n, false)
    }

    /// Alternating group on `{1..n}`, `n <= 5`.
    pub fn alternating(n: usize) -> Result<Group> {
        Self::permutation_group(n, true)
    }

    fn permutation_group(n: usize, even_only: bool) -> Result<Group> {
        if n == 0 || n > 5 {
            return Err(Error::InvalidParameter(format!("symmetric/alternating degree {n} outside 1..=5")));
        }
        let mut perms = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            if !even_only || parity(&cur) == 0 {
                perms.push(cur.clone());
            }
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        let m = perms.len();
        let mut table = Vec::with_capacity(m * m);
        for p in &perms {
            for q in &perms {
                let pq: Vec<usize> = (0..n).map(|x| q[p[x]]).collect();
                table.push(index(&pq) as u32);
            }
        }
        Self::from_flat(m, table, labels)
    }

    /// `G ⋊ Z_2` with `c g c = g^-1`, for abelian `G`.
    ///
    /// Index `x < |G|` is `x` itself, index `|G| + x` is `x c`.
    pub fn generalized_dihedral_extension(&self) -> Result<Group> {
        if !self.is_abelian() {
            return Err(Error::NotAbelian);
        }
        let n = self.order;
        let labels = (0..2 * n)
            .map(|x| if x < n { self.label(x).to_string() } else { format!("{}c", self.label(x - n)) })
            .collect();
        Self::from_fn(
            2 * n,
            |a, b| {
                let (x, ca) = (a % n, a >= n);
                let (y, cb) = (b % n, b >= n);
                // x c^i · y c^j = x (c^i y c^-i) c^(i+j)
                let y = if ca { self.inv(y) } else { y };
                let z = self.mul(x, y);
                if ca ^ cb {
                    n + z
                } else {
                    z
                }
            },
            labels,
        )
    }

    /// Additive group of `GF(q)^dim`; a vector is its base-`q` digit string,
    /// most significant coordinate first.
    pub fn field_additive(q: usize, dim: usize) -> Result<Group> {
        let f = GaloisField::new(q)?;
        let n = q
            .checked_pow(dim as u32)
            .filter(|&n| n <= MAX_ORDER)
            .ok_or_else(|| Error::InvalidParameter(format!("GF({q})^{dim} too large")))?;
        let digits = |mut x: usize| {
            let mut d = vec![0; dim];
            for i in (0..dim).rev() {
                d[i] = x % q;
                x /= q;
            }
            d
        };
        let labels = (0..n)
            .map(|x| {
                let d: Vec<String> = digits(x).iter().map(|v| v.to_string()).collect();
                format!("({})", d.join(","))
            })
            .collect();
        Self::from_fn(n, |a, b| digits(a).iter().zip(digits(b)).fold(0, |acc, (&x, y)| acc * q + f.add(x, y)), labels)
    }

    /// Group on `GF(q)^2` with `(x1,x2)+(y1,y2) = (x1+y1, x2+y2+x1 y1)`.
    ///
    /// Element `(x1, x2)` has index `x1 * q + x2`.
    pub fn semifield_plane_group(q: usize) -> Result<Group> {
        let f = GaloisField::new(q)?;
        let labels = (0..q * q).map(|x| format!("({},{})", x / q, x % q)).collect();
        Self::from_fn(
            q * q,
            |a, b| {
                let (x1, x2) = (a / q, a % q);
                let (y1, y2) = (b / q, b % q);
                f.add(x1, y1) * q + f.add(f.add(x2, y2), f.mul(x1, y1))
            },
            labels,
        )
    }

    /// Multiplication table of `n` generators `g_i` of order 2 whose pairwise
    /// commutators all equal one central involution `a`.
    pub fn armanios_wells_group() -> ArmaniosWells {
        const K: usize = 4;
        // (u, z) with u in Z_2^4 (bit i = coordinate i), z in Z_2;
        // (u,x)(v,y) = (u+v, x+y+β(u,v)), β(u,v) = Σ_{i>j} u_i v_j.
        let beta = |u: usize, v: usize| {
            let mut s = 0;
            for i in 0..K {
                for j in 0..i {
                    s ^= (u >> i) & (v >> j) & 1;
                }
            }
            s
        };
        let index = |u: usize, z: usize| (u << 1) | z;
        let labels = (0..32)
            .map(|x| {
                let u = x >> 1;
                let bits: String = (0..K).map(|i| if (u >> i) & 1 == 1 { '1' } else { '0' }).collect();
                format!("({};{})", bits, x & 1)
            })
            .collect();
        let group = Self::from_fn(
            32,
            |p, q| {
                let (u, x) = (p >> 1, p & 1);
                let (v, y) = (q >> 1, q & 1);
                index(u ^ v, x ^ y ^ beta(u, v))
            },
            labels,
        )
        .expect("cocycle table is a group");
        let generators = [index(1, 0), index(2, 0), index(4, 0), index(8, 0)];
        let a = index(0, 1);
        ArmaniosWells { group, generators, a }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a] as usize
    }

    pub fn pow(&self, a: Elem, mut k: usize) -> Elem {
        let (mut base, mut acc) = (a, self.identity);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by label; cycle notation is normalised first
    /// so `(1,2,3)` and `(123)` both match.
    pub fn find_label(&self, label: &str) -> Option<Elem> {
        let label = label.trim();
        if let Some(i) = self.labels.iter().position(|l| l == label) {
            return Some(i);
        }
        let norm = normalize_cycles(label)?;
        self.labels.iter().position(|l| normalize_cycles(l).as_deref() == Some(norm.as_str()))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Group> {
        if labels.len() != self.order {
            return Err(Error::InvalidParameter(format!("{} labels for {} elements", labels.len(), self.order)));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Row-major copy of the multiplication table.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.element_order(a)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Subgroup {
        let elements = (0..self.order).filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z))).collect();
        Subgroup { elements }
    }

    pub fn involutions(&self) -> Vec<Elem> {
        (0..self.order).filter(|&x| x != self.identity && self.mul(x, x) == self.identity).collect()
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            center: self.center(),
            is_abelian: self.is_abelian(),
            involutions: self.involutions(),
            element_orders: self.element_orders(),
        }
    }

    /// The subgroup generated by `xs`.
    pub fn closure(&self, xs: &[Elem]) -> Subgroup {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut elements = vec![self.identity];
        let mut i = 0;
        while i < elements.len() {
            let g = elements[i];
            for &x in xs {
                let h = self.mul(g, x);
                if !seen[h] {
                    seen[h] = true;
                    elements.push(h);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        Subgroup { elements }
    }

    /// Wraps `elements` as a subgroup after checking closure.
    pub fn subgroup(&self, elements: &[Elem]) -> Result<Subgroup> {
        let set: BTreeSet<Elem> = elements.iter().copied().collect();
        if !set.contains(&self.identity) {
            return Err(Error::Precondition("subgroup must contain the identity".into()));
        }
        for &a in &set {
            if !set.contains(&self.inv(a)) {
                return Err(Error::Precondition(format!("not closed under inverse at {}", self.label(a))));
            }
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(Error::Precondition(format!(
                        "not closed under product at {}·{}",
                        self.label(a),
                        self.label(b)
                    )));
                }
            }
        }
        Ok(Subgroup { elements: set.into_iter().collect() })
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        // conjugating the members by every element is O(|G||H|) and avoids
        // needing a generating set
        (0..self.order).all(|g| h.elements.iter().all(|&x| h.contains(self.conjugate(x, g))))
    }

    /// Right cosets `Hc`, each sorted, ordered by least element.
    pub fn right_cosets(&self, h: &Subgroup) -> Vec<Vec<Elem>> {
        let mut assigned = vec![false; self.order];
        let mut cosets = Vec::new();
        for c in 0..self.order {
            if assigned[c] {
                continue;
            }
            let mut coset: Vec<Elem> = h.elements.iter().map(|&x| self.mul(x, c)).collect();
            coset.sort_unstable();
            for &y in &coset {
                assigned[y] = true;
            }
            cosets.push(coset);
        }
        cosets
    }

    /// `G/H` for normal `H`, with cosets numbered as in [`Group::right_cosets`].
    pub fn quotient(&self, h: &Subgroup) -> Result<Group> {
        if !self.is_normal(h) {
            return Err(Error::NotNormal);
        }
        let cosets = self.right_cosets(h);
        let mut which = vec![0usize; self.order];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                which[x] = i;
            }
        }
        let m = cosets.len();
        let labels = cosets.iter().map(|c| format!("H{}", self.label(c[0]))).collect();
        Self::from_fn(m, |i, j| which[self.mul(cosets[i][0], cosets[j][0])], labels)
    }

    pub fn subgroup_ops(&self, xs: &[Elem]) -> Result<SubgroupReport> {
        if xs.is_empty() {
            return Err(Error::Precondition("generating set must be nonempty".into()));
        }
        let closure = self.closure(xs);
        let is_normal = self.is_normal(&closure);
        let right_cosets = self.right_cosets(&closure);
        let quotient = if is_normal { Some(self.quotient(&closure)?) } else { None };
        Ok(SubgroupReport { closure, is_normal, right_cosets, quotient })
    }
}

fn parity(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Cycle notation on points `1..n`, e.g. `(12)(34)`; identity is `()`.
pub fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for i in 0..p.len() {
        if seen[i] || p[i] == i {
            continue;
        }
        out.push('(');
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            out.push_str(&(j + 1).to_string());
            j = p[j];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Canonical form of a cycle-notation string: commas and spaces dropped,
/// each cycle rotated to start at its least point, cycles sorted.
fn normalize_cycles(s: &str) -> Option<String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if !s.starts_with('(') {
        return None;
    }
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    for part in s.split(')') {
        if part.is_empty() {
            continue;
        }
        let body = part.strip_prefix('(')?;
        if body.is_empty() {
            continue;
        }
        let pts: Vec<u32> = if body.contains(',') {
            body.split(',').map(|t| t.parse().ok()).collect::<Option<_>>()?
        } else {
            body.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?
        };
        if pts.len() < 2 {
            continue;
        }
        let k = pts.iter().enumerate().min_by_key(|(_, &v)| v)?.0;
        let mut rot = pts[k..].to_vec();
        rot.extend_from_slice(&pts[..k]);
        cycles.push(rot);
    }
    cycles.sort();
    let mut out = String::new();
    for c in cycles {
        out.push('(');
        for (i, v) in c.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&v.to_string());
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    Some(out)
}
