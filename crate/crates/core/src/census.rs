//! Exhaustive enumeration of small Γ-semigroups.
//!
//! Tables are filled cell by cell in op-major, row-major order with values
//! tried in ascending order, so solutions come out in lexicographic order of
//! their flat encoding. After every assignment each associativity equation
//! that just became fully determined is checked, and the branch is cut on the
//! first failure.
//!
//! Isomorphism relabels elements and operation symbols independently:
//! `(φ, ψ)` maps `g` onto `h` when `φ(aγb) = φ(a) ψ(γ) φ(b)`. The canonical
//! form of a table family is the least flat encoding over all `n!·k!`
//! relabelings.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::gamma::{GammaGroupoid, GammaSemigroup};

/// Environment variable overriding the largest enumerable element count.
pub const MAX_N_ENV: &str = "GAMMASG_MAX_N";
/// Environment variable overriding the largest enumerable symbol count.
pub const MAX_K_ENV: &str = "GAMMASG_MAX_K";

const UNSET: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CensusMode {
    Labeled,
    UpToIso,
}

impl fmt::Display for CensusMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CensusMode::Labeled => "labeled",
            CensusMode::UpToIso => "up_to_iso",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusBounds {
    pub max_n: usize,
    pub max_k: usize,
}

impl Default for CensusBounds {
    fn default() -> Self {
        Self { max_n: 4, max_k: 2 }
    }
}

impl CensusBounds {
    /// Defaults, overridden by [`MAX_N_ENV`] / [`MAX_K_ENV`] when they parse.
    pub fn from_env() -> Self {
        let read = |var: &str, fallback: usize| {
            std::env::var(var)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(fallback)
        };
        let d = Self::default();
        Self {
            max_n: read(MAX_N_ENV, d.max_n),
            max_k: read(MAX_K_ENV, d.max_k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CensusOptions {
    pub bounds: CensusBounds,
    /// Worker threads; `None` uses the global rayon pool, `Some(1)` runs inline.
    pub threads: Option<usize>,
    /// Keep the representatives, not just the count.
    pub emit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("{what} must be at least 1")]
    Empty { what: &'static str },
    #[error("{what} = {value} exceeds the configured limit {max}")]
    OutOfBounds {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("could not build thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub n: usize,
    pub k: usize,
    pub mode: CensusMode,
    pub count: u64,
    /// In lexicographic order of the flat table encoding.
    pub representatives: Option<Vec<GammaSemigroup>>,
}

/// Least flat encoding `[n, k, cells…]` over all relabelings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// An element bijection `phi` and symbol bijection `psi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsoWitness {
    pub phi: Vec<usize>,
    pub psi: Vec<usize>,
}

impl IsoWitness {
    pub fn identity(n: usize, k: usize) -> Self {
        Self {
            phi: (0..n).collect(),
            psi: (0..k).collect(),
        }
    }

    /// Whether `phi(aγb) = phi(a) psi(γ) phi(b)` for all `a, b, γ`.
    pub fn transports(&self, g: &GammaGroupoid, h: &GammaGroupoid) -> bool {
        g.n() == h.n()
            && g.k() == h.k()
            && (0..g.k()).all(|op| {
                (0..g.n()).all(|a| {
                    (0..g.n()).all(|b| {
                        self.phi[g.op(op, a, b)] == h.op(self.psi[op], self.phi[a], self.phi[b])
                    })
                })
            })
    }
}

struct Relabeling {
    phi: Vec<u8>,
    phi_inv: Vec<u8>,
    psi_inv: Vec<usize>,
    psi: Vec<usize>,
}

fn relabelings(n: usize, k: usize) -> Vec<Relabeling> {
    let invert = |p: &[usize]| {
        let mut inv = vec![0; p.len()];
        for (i, &x) in p.iter().enumerate() {
            inv[x] = i;
        }
        inv
    };
    let phis: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let psis: Vec<Vec<usize>> = (0..k).permutations(k).collect();
    let mut out = Vec::with_capacity(phis.len() * psis.len());
    for phi in &phis {
        let phi_inv = invert(phi);
        for psi in &psis {
            out.push(Relabeling {
                phi: phi.iter().map(|&x| x as u8).collect(),
                phi_inv: phi_inv.iter().map(|&x| x as u8).collect(),
                psi_inv: invert(psi),
                psi: psi.clone(),
            });
        }
    }
    out
}

impl Relabeling {
    /// Entry at flat position `pos` of the relabeled family.
    #[inline]
    fn image_at(&self, cells: &[u8], n: usize, pos: usize) -> u8 {
        let op = pos / (n * n);
        let a = (pos / n) % n;
        let b = pos % n;
        let src_op = self.psi_inv[op];
        let src_a = self.phi_inv[a] as usize;
        let src_b = self.phi_inv[b] as usize;
        self.phi[cells[(src_op * n + src_a) * n + src_b] as usize]
    }

    fn apply(&self, cells: &[u8], n: usize) -> Vec<u8> {
        (0..cells.len()).map(|pos| self.image_at(cells, n, pos)).collect()
    }

    fn witness(&self) -> IsoWitness {
        IsoWitness {
            phi: self.phi.iter().map(|&x| x as usize).collect(),
            psi: self.psi.clone(),
        }
    }

    /// Compares the relabeled encoding against `cells` without materialising it.
    fn cmp_image(&self, cells: &[u8], n: usize) -> std::cmp::Ordering {
        for (pos, &orig) in cells.iter().enumerate() {
            let img = self.image_at(cells, n, pos);
            if img != orig {
                return img.cmp(&orig);
            }
        }
        std::cmp::Ordering::Equal
    }
}

/// Applies `(phi, psi)` to `g`.
pub fn relabel(g: &GammaGroupoid, w: &IsoWitness) -> GammaGroupoid {
    let (n, k) = (g.n(), g.k());
    let mut cells = vec![0u8; k * n * n];
    for op in 0..k {
        for a in 0..n {
            for b in 0..n {
                cells[(w.psi[op] * n + w.phi[a]) * n + w.phi[b]] = w.phi[g.op(op, a, b)] as u8;
            }
        }
    }
    GammaGroupoid::from_cells_unchecked(n, k, cells)
}

fn key_of(n: usize, k: usize, cells: &[u8]) -> CanonicalKey {
    let mut bytes = Vec::with_capacity(cells.len() + 2);
    bytes.push(n as u8);
    bytes.push(k as u8);
    bytes.extend_from_slice(cells);
    CanonicalKey(bytes)
}

pub fn canonical_form(g: &GammaGroupoid) -> CanonicalKey {
    let (n, k) = (g.n(), g.k());
    let best = relabelings(n, k)
        .iter()
        .map(|r| r.apply(g.cells(), n))
        .min()
        .expect("at least the identity relabeling");
    key_of(n, k, &best)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_representative(g: &GammaGroupoid) -> GammaGroupoid {
    let key = canonical_form(g);
    GammaGroupoid::from_cells_unchecked(g.n(), g.k(), key.0[2..].to_vec())
}

pub fn isomorphic(g: &GammaGroupoid, h: &GammaGroupoid) -> Option<IsoWitness> {
    if g.n() != h.n() || g.k() != h.k() {
        return None;
    }
    let n = g.n();
    relabelings(n, g.k())
        .into_iter()
        .find(|r| r.apply(g.cells(), n) == h.cells())
        .map(|r| r.witness())
}

/// Number of relabelings fixing `g`.
pub fn automorphism_count(g: &GammaGroupoid) -> usize {
    let n = g.n();
    relabelings(n, g.k())
        .iter()
        .filter(|r| r.cmp_image(g.cells(), n).is_eq())
        .count()
}

/// Whether `g` equals its own canonical form.
pub fn is_canonical(g: &GammaGroupoid) -> bool {
    let n = g.n();
    relabelings(n, g.k())
        .iter()
        .all(|r| r.cmp_image(g.cells(), n).is_ge())
}

struct Search<'r> {
    n: usize,
    k: usize,
    cells: Vec<u8>,
    mode: CensusMode,
    emit: bool,
    relabelings: &'r [Relabeling],
    count: u64,
    found: Vec<Vec<u8>>,
}

impl<'r> Search<'r> {
    #[inline]
    fn get(&self, op: usize, a: usize, b: usize) -> u8 {
        self.cells[(op * self.n + a) * self.n + b]
    }

    /// `(aγb)μc = aγ(bμc)`, or `true` while any product is still unset.
    #[inline]
    fn equation_open_or_holds(&self, gamma: usize, mu: usize, a: usize, b: usize, c: usize) -> bool {
        let ab = self.get(gamma, a, b);
        if ab == UNSET {
            return true;
        }
        let lhs = self.get(mu, ab as usize, c);
        if lhs == UNSET {
            return true;
        }
        let bc = self.get(mu, b, c);
        if bc == UNSET {
            return true;
        }
        let rhs = self.get(gamma, a, bc as usize);
        rhs == UNSET || lhs == rhs
    }

    /// Checks every equation that reads the cell at `pos`, which has just
    /// been assigned. Any equation that became fully determined reads it.
    fn consistent(&self, pos: usize) -> bool {
        let (n, k) = (self.n, self.k);
        let op = pos / (n * n);
        let i = (pos / n) % n;
        let j = pos % n;
        // as aγb
        for mu in 0..k {
            for c in 0..n {
                if !self.equation_open_or_holds(op, mu, i, j, c) {
                    return false;
                }
            }
        }
        // as bμc
        for gamma in 0..k {
            for a in 0..n {
                if !self.equation_open_or_holds(gamma, op, a, i, j) {
                    return false;
                }
            }
        }
        for other in 0..k {
            for x in 0..n {
                for y in 0..n {
                    let xy = self.get(other, x, y) as usize;
                    // as (xy)μc with xy = i
                    if xy == i && !self.equation_open_or_holds(other, op, x, y, j) {
                        return false;
                    }
                    // as aγ(xy) with xy = j
                    if xy == j && !self.equation_open_or_holds(op, other, i, x, y) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn leaf(&mut self) {
        if self.mode == CensusMode::UpToIso
            && !self
                .relabelings
                .iter()
                .all(|r| r.cmp_image(&self.cells, self.n).is_ge())
        {
            return;
        }
        self.count += 1;
        if self.emit {
            self.found.push(self.cells.clone());
        }
    }

    fn dfs(&mut self, pos: usize) {
        if pos == self.cells.len() {
            self.leaf();
            return;
        }
        for v in 0..self.n as u8 {
            self.cells[pos] = v;
            if self.consistent(pos) {
                self.dfs(pos + 1);
            }
        }
        self.cells[pos] = UNSET;
    }

    /// Consistent assignments of the first `depth` cells, in search order.
    fn prefixes(&mut self, pos: usize, depth: usize, out: &mut Vec<Vec<u8>>) {
        if pos == depth {
            out.push(self.cells[..depth].to_vec());
            return;
        }
        for v in 0..self.n as u8 {
            self.cells[pos] = v;
            if self.consistent(pos) {
                self.prefixes(pos + 1, depth, out);
            }
        }
        self.cells[pos] = UNSET;
    }
}

fn check_dims(n: usize, k: usize, bounds: &CensusBounds) -> Result<(), CensusError> {
    if n == 0 {
        return Err(CensusError::Empty { what: "n" });
    }
    if k == 0 {
        return Err(CensusError::Empty { what: "k" });
    }
    if n > bounds.max_n {
        return Err(CensusError::OutOfBounds {
            what: "n",
            value: n,
            max: bounds.max_n,
        });
    }
    if k > bounds.max_k {
        return Err(CensusError::OutOfBounds {
            what: "k",
            value: k,
            max: bounds.max_k,
        });
    }
    Ok(())
}

/// Enumerates with default bounds and the global thread pool.
pub fn enumerate(n: usize, k: usize, mode: CensusMode, emit: bool) -> Result<CensusResult, CensusError> {
    enumerate_with(
        n,
        k,
        mode,
        &CensusOptions {
            emit,
            ..CensusOptions::default()
        },
    )
}

pub fn enumerate_with(
    n: usize,
    k: usize,
    mode: CensusMode,
    opts: &CensusOptions,
) -> Result<CensusResult, CensusError> {
    check_dims(n, k, &opts.bounds)?;
    if n > crate::gamma::MAX_ELEMENTS {
        return Err(CensusError::OutOfBounds {
            what: "n",
            value: n,
            max: crate::gamma::MAX_ELEMENTS,
        });
    }
    let total = k * n * n;
    let relabelings = relabelings(n, k);
    let new_search = || Search {
        n,
        k,
        cells: vec![UNSET; total],
        mode,
        emit: opts.emit,
        relabelings: &relabelings,
        count: 0,
        found: Vec::new(),
    };

    // Split on the first cells so there are a few hundred subtrees at most.
    let mut depth = 0;
    let mut width = 1usize;
    while depth < total && width * n <= 256 {
        width *= n;
        depth += 1;
    }
    let mut prefixes = Vec::new();
    new_search().prefixes(0, depth, &mut prefixes);

    let explore = |prefix: &Vec<u8>| -> (u64, Vec<Vec<u8>>) {
        let mut s = new_search();
        s.cells[..depth].copy_from_slice(prefix);
        s.dfs(depth);
        (s.count, s.found)
    };
    let parts: Vec<(u64, Vec<Vec<u8>>)> = match opts.threads {
        Some(1) => prefixes.iter().map(explore).collect(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CensusError::ThreadPool(e.to_string()))?
            .install(|| prefixes.par_iter().map(explore).collect()),
        None => prefixes.par_iter().map(explore).collect(),
    };

    let count = parts.iter().map(|(c, _)| c).sum();
    let representatives = opts.emit.then(|| {
        parts
            .into_iter()
            .flat_map(|(_, found)| found)
            .map(|cells| GammaSemigroup::from_verified(GammaGroupoid::from_cells_unchecked(n, k, cells)))
            .collect()
    });
    Ok(CensusResult {
        n,
        k,
        mode,
        count,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::example_semigroup;

    fn count(n: usize, k: usize, mode: CensusMode) -> u64 {
        enumerate(n, k, mode, false).unwrap().count
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(1, 1, CensusMode::Labeled), 1);
        assert_eq!(count(2, 1, CensusMode::Labeled), 8);
        assert_eq!(count(2, 1, CensusMode::UpToIso), 5);
        assert_eq!(count(3, 1, CensusMode::Labeled), 113);
        assert_eq!(count(3, 1, CensusMode::UpToIso), 24);
    }

    #[test]
    fn trivial_key() {
        let g = GammaGroupoid::build_tables(1, 1, &[0]).unwrap();
        assert_eq!(canonical_form(&g).as_bytes(), &[1, 1, 0]);
    }

    #[test]
    fn example_semigroup_swap_is_isomorphic() {
        let g = example_semigroup();
        let swap = IsoWitness {
            phi: vec![0, 2, 1],
            psi: vec![0, 1],
        };
        let h = relabel(&g, &swap);
        assert_ne!(g.groupoid(), &h);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        let w = isomorphic(&g, &h).unwrap();
        assert!(w.transports(&g, &h));
        assert_eq!(w, swap);
    }

    #[test]
    fn left_and_right_zero_differ() {
        let lz = GammaGroupoid::from_single_op(&[vec![0, 0], vec![1, 1]]).unwrap();
        let rz = GammaGroupoid::from_single_op(&[vec![0, 1], vec![0, 1]]).unwrap();
        assert_ne!(canonical_form(&lz), canonical_form(&rz));
        assert!(isomorphic(&lz, &rz).is_none());
        assert_eq!(isomorphic(&lz, &lz), Some(IsoWitness::identity(2, 1)));
    }

    #[test]
    fn bounds_are_enforced() {
        assert_eq!(
            enumerate(5, 1, CensusMode::Labeled, false).unwrap_err(),
            CensusError::OutOfBounds {
                what: "n",
                value: 5,
                max: 4
            }
        );
        assert!(matches!(
            enumerate(2, 3, CensusMode::Labeled, false),
            Err(CensusError::OutOfBounds { what: "k", .. })
        ));
        assert!(matches!(
            enumerate(0, 1, CensusMode::Labeled, false),
            Err(CensusError::Empty { what: "n" })
        ));
        let opts = CensusOptions {
            bounds: CensusBounds { max_n: 2, max_k: 1 },
            ..CensusOptions::default()
        };
        assert!(enumerate_with(3, 1, CensusMode::Labeled, &opts).is_err());
    }

    #[test]
    fn representatives_are_sorted_and_canonical() {
        let res = enumerate(3, 1, CensusMode::UpToIso, true).unwrap();
        let reps = res.representatives.unwrap();
        assert_eq!(reps.len() as u64, res.count);
        assert!(reps.windows(2).all(|w| w[0].cells() < w[1].cells()));
        for r in &reps {
            assert!(is_canonical(r));
            assert_eq!(&canonical_form(r).as_bytes()[2..], r.cells());
        }
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let run = |threads| {
            enumerate_with(
                3,
                1,
                CensusMode::Labeled,
                &CensusOptions {
                    threads: Some(threads),
                    emit: true,
                    ..CensusOptions::default()
                },
            )
            .unwrap()
        };
        assert_eq!(run(1), run(3));
    }
}
