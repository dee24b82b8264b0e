//! Finite groups stored as dense Cayley tables.
//!
//! Elements are the indices `0..n`. Every group produced here has passed the
//! full set of table invariants: two-sided identity, two-sided inverses,
//! Latin-square rows and columns, and associativity (exhaustive up to
//! [`FULL_ASSOCIATIVITY_LIMIT`], sampled above).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Groups up to this order get an exhaustive `n³` associativity check.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 512;

/// Largest order a [`GroupSpec`] may build; keeps the dense table in memory.
pub const MAX_ORDER: usize = 2048;

const ASSOCIATIVITY_SAMPLES: usize = 1 << 20;

/// Names one of the built-in group families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GroupSpec {
    Cyclic(usize),
    Symmetric(usize),
    Dihedral(usize),
    Klein4,
    Heisenberg(u64),
}

impl GroupSpec {
    /// Checks the family parameters without building anything.
    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupSpec::Cyclic(n) | GroupSpec::Symmetric(n) | GroupSpec::Dihedral(n) if n == 0 => {
                Err(Error::InvalidSpec(format!("{self}: parameter must be at least 1")))
            }
            GroupSpec::Heisenberg(p) if !is_odd_prime(p) => Err(Error::InvalidSpec(format!(
                "{self}: Heisenberg groups need an odd prime"
            ))),
            _ => match self.order() {
                Some(n) if n <= MAX_ORDER => Ok(()),
                _ => Err(Error::InvalidSpec(format!(
                    "{self}: order exceeds the supported maximum of {MAX_ORDER}"
                ))),
            },
        }
    }

    /// Order of the group this spec names, or `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        match *self {
            GroupSpec::Cyclic(n) => Some(n),
            GroupSpec::Symmetric(n) => (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)),
            GroupSpec::Dihedral(n) => n.checked_mul(2),
            GroupSpec::Klein4 => Some(4),
            GroupSpec::Heisenberg(p) => {
                let p = usize::try_from(p).ok()?;
                p.checked_mul(p)?.checked_mul(p)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Klein4 => write!(f, "K4"),
            GroupSpec::Heisenberg(p) => write!(f, "H{p}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses `C<n>`, `S<n>`, `D<n>`, `K4` or `H<p>`, case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidSpec(format!("cannot parse group spec {s:?}"));
        let mut chars = t.chars();
        let head = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let spec = match head {
            'C' => GroupSpec::Cyclic(rest.parse().map_err(|_| bad())?),
            'S' => GroupSpec::Symmetric(rest.parse().map_err(|_| bad())?),
            'D' => GroupSpec::Dihedral(rest.parse().map_err(|_| bad())?),
            'K' if rest == "4" => GroupSpec::Klein4,
            'H' => GroupSpec::Heisenberg(rest.parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl From<GroupSpec> for String {
    fn from(s: GroupSpec) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for GroupSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

pub(crate) fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A validated finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
    spec: Option<GroupSpec>,
}

impl FiniteGroup {
    /// Builds a group from a multiplication table, checking every group axiom.
    ///
    /// `cayley[x][y]` is the product `xy`. Labels must be distinct.
    pub fn from_table(
        cayley: Vec<Vec<usize>>,
        labels: Vec<String>,
        spec: Option<GroupSpec>,
    ) -> Result<Self> {
        let n = cayley.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if labels.len() != n {
            return Err(Error::InvalidTable(format!("{} labels for order {n}", labels.len())));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (x, row) in cayley.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {x} has length {}", row.len())));
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(n, flat, labels, spec)
    }

    fn from_flat(
        n: usize,
        cayley: Vec<usize>,
        labels: Vec<String>,
        spec: Option<GroupSpec>,
    ) -> Result<Self> {
        if let Some(&bad) = cayley.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        {
            let mut seen = std::collections::HashSet::with_capacity(n);
            if !labels.iter().all(|l| seen.insert(l.as_str())) {
                return Err(Error::InvalidTable("duplicate labels".into()));
            }
        }
        let at = |x: usize, y: usize| cayley[x * n + y];

        // Latin square.
        let mut seen = vec![usize::MAX; n];
        for x in 0..n {
            for y in 0..n {
                let v = at(x, y);
                if seen[v] == x {
                    return Err(Error::InvalidTable(format!("row {x} repeats {v}")));
                }
                seen[v] = x;
            }
        }
        seen.fill(usize::MAX);
        for y in 0..n {
            for x in 0..n {
                let v = at(x, y);
                if seen[v] == y {
                    return Err(Error::InvalidTable(format!("column {y} repeats {v}")));
                }
                seen[v] = y;
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidTable("no identity".into()))?;

        let mut inv = vec![0; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| at(x, y) == identity)
                .ok_or_else(|| Error::InvalidTable(format!("{x} has no inverse")))?;
            if at(y, x) != identity {
                return Err(Error::InvalidTable(format!("{x} has no two-sided inverse")));
            }
            inv[x] = y;
        }

        let assoc = |x: usize, y: usize, z: usize| at(at(x, y), z) == at(x, at(y, z));
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for x in 0..n {
                for y in 0..n {
                    let xy = at(x, y);
                    for z in 0..n {
                        if at(xy, z) != at(x, at(y, z)) {
                            return Err(Error::InvalidTable(format!(
                                "({x}{y}){z} != {x}({y}{z})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (x, y, z) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                if !assoc(x, y, z) {
                    return Err(Error::InvalidTable(format!("({x}{y}){z} != {x}({y}{z})")));
                }
            }
        }

        Ok(FiniteGroup { order: n, cayley, inv, identity, labels, spec })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// The spec this group was built from; `None` for subgroups and custom tables.
    pub fn spec(&self) -> Option<GroupSpec> {
        self.spec
    }

    /// Looks up an element by its display label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Row `x` of the Cayley table.
    pub fn row(&self, x: usize) -> &[usize] {
        &self.cayley[x * self.order..(x + 1) * self.order]
    }

    /// The full inverse table.
    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    fn check(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: x, order: self.order })
        }
    }

    pub fn mul(&self, x: usize, y: usize) -> Result<usize> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.cayley[x * self.order + y])
    }

    pub fn inverse(&self, x: usize) -> Result<usize> {
        self.check(x)?;
        Ok(self.inv[x])
    }

    /// Unchecked product, for callers that already hold valid indices.
    #[inline]
    pub(crate) fn op(&self, x: usize, y: usize) -> usize {
        self.cayley[x * self.order + y]
    }

    #[inline]
    pub(crate) fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    /// `x² = e`; the identity counts.
    pub fn is_involution(&self, x: usize) -> bool {
        self.inv[x] == x
    }

    /// Number of `x` with `x² = e`, identity included.
    pub fn involution_count(&self) -> usize {
        (0..self.order).filter(|&x| self.is_involution(x)).count()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.op(x, y) == self.op(y, x)))
    }

    /// Order of the element `x`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.op(y, x);
            k += 1;
        }
        k
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut out = vec![self.identity];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.op(x, g);
                if !member[y] {
                    member[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }
}

/// Builds one of the catalog groups.
pub fn build_group(spec: GroupSpec) -> Result<Arc<FiniteGroup>> {
    spec.validate()?;
    let (n, table, labels) = match spec {
        GroupSpec::Cyclic(n) => cyclic(n),
        GroupSpec::Symmetric(n) => symmetric(n),
        GroupSpec::Dihedral(n) => dihedral(n),
        GroupSpec::Klein4 => klein4(),
        GroupSpec::Heisenberg(p) => heisenberg(p as usize),
    };
    FiniteGroup::from_flat(n, table, labels, Some(spec)).map(Arc::new)
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn cyclic(n: usize) -> (usize, Vec<usize>, Vec<String>) {
    let table = (0..n).flat_map(|x| (0..n).map(move |y| (x + y) % n)).collect();
    let labels = (0..n)
        .map(|k| if k == 0 { "e".to_string() } else { power_label("a", k) })
        .collect();
    (n, table, labels)
}

fn klein4() -> (usize, Vec<usize>, Vec<String>) {
    // a = (1,0), b = (0,1), c = (1,1) as bit vectors.
    let table = (0..4).flat_map(|x| (0..4).map(move |y| x ^ y)).collect();
    let labels = ["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect();
    (4, table, labels)
}

/// `r^k s^j` sits at index `k + n·j`.
fn dihedral(n: usize) -> (usize, Vec<usize>, Vec<String>) {
    let size = 2 * n;
    let split = |x: usize| (x % n, x / n);
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        let (a, i) = split(x);
        for y in 0..size {
            let (b, j) = split(y);
            // s r^b = r^-b s
            let k = if i == 0 { (a + b) % n } else { (a + n - b) % n };
            table.push(k + n * ((i + j) % 2));
        }
    }
    let labels = (0..size)
        .map(|x| {
            let (k, j) = split(x);
            match (k, j) {
                (0, 0) => "e".to_string(),
                (_, 0) => power_label("r", k),
                _ => format!("{}s", power_label("r", k)),
            }
        })
        .collect();
    (size, table, labels)
}

/// Permutations of `{1..n}` in lexicographic one-line order; the product
/// `στ` applies `τ` first.
fn symmetric(n: usize) -> (usize, Vec<usize>, Vec<String>) {
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    loop {
        perms.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    let index: HashMap<Vec<u8>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let size = perms.len();
    let mut table = Vec::with_capacity(size * size);
    let mut buf = vec![0u8; n];
    for sigma in &perms {
        for tau in &perms {
            for (slot, &t) in buf.iter_mut().zip(tau) {
                *slot = sigma[t as usize];
            }
            table.push(index[&buf]);
        }
    }
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    (size, table, labels)
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Cycle notation with 1-based points, fixed points dropped; identity is `e`.
fn cycle_notation(p: &[u8]) -> String {
    let sep = if p.len() > 9 { "," } else { "" };
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(sep));
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// Upper unitriangular 3×3 matrices over `Z_p`; `(a,b,c)` is the matrix with
/// `a` at (1,2), `b` at (1,3), `c` at (2,3), stored at index `a·p² + b·p + c`.
fn heisenberg(p: usize) -> (usize, Vec<usize>, Vec<String>) {
    let size = p * p * p;
    let split = |x: usize| (x / (p * p), (x / p) % p, x % p);
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        let (a, b, c) = split(x);
        for y in 0..size {
            let (a2, b2, c2) = split(y);
            let na = (a + a2) % p;
            let nb = (b + b2 + a * c2) % p;
            let nc = (c + c2) % p;
            table.push(na * p * p + nb * p + nc);
        }
    }
    let labels = (0..size)
        .map(|x| {
            let (a, b, c) = split(x);
            format!("({a},{b},{c})")
        })
        .collect();
    (size, table, labels)
}

/// Index of the Heisenberg element `(a,b,c)` in [`build_group`]'s `H<p>`.
pub fn heisenberg_index(p: u64, a: u64, b: u64, c: u64) -> usize {
    let p = p as usize;
    (a as usize % p) * p * p + (b as usize % p) * p + (c as usize % p)
}
