//! Independent reference implementations used only by tests. Nothing here
//! calls into the census or Green modules.

#![allow(dead_code, clippy::needless_range_loop)]

/// `tables[op][a][b]`, flat: `cells[(op * n + a) * n + b]`.
pub fn mixed_associative(n: usize, k: usize, cells: &[usize]) -> bool {
    let t = |op: usize, a: usize, b: usize| cells[(op * n + a) * n + b];
    for g in 0..k {
        for m in 0..k {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if t(m, t(g, a, b), c) != t(g, a, t(m, b, c)) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Every `n^(n²)` single table, in lexicographic order.
pub fn all_tables(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let len = n * n;
    let total = n.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut cells = vec![0; len];
        for slot in cells.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        cells
    })
}

/// Associative single tables, found by brute force.
pub fn naive_semigroups(n: usize) -> Vec<Vec<usize>> {
    all_tables(n).filter(|t| mixed_associative(n, 1, t)).collect()
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

pub fn relabel(n: usize, k: usize, cells: &[usize], phi: &[usize], psi: &[usize]) -> Vec<usize> {
    let mut out = vec![0; cells.len()];
    for op in 0..k {
        for a in 0..n {
            for b in 0..n {
                out[(psi[op] * n + phi[a]) * n + phi[b]] = phi[cells[(op * n + a) * n + b]];
            }
        }
    }
    out
}

/// Number of isomorphism classes among `families`, by pairwise search.
pub fn count_iso_classes(n: usize, k: usize, families: &[Vec<usize>]) -> usize {
    let phis = permutations(n);
    let psis = permutations(k);
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for f in families {
        let seen = reps.iter().any(|r| {
            phis.iter()
                .any(|phi| psis.iter().any(|psi| &relabel(n, k, f, phi, psi) == r))
        });
        if !seen {
            reps.push(f.clone());
        }
    }
    reps.len()
}

/// Class id per element (ids by least member) of the equivalence `rel`.
pub fn class_ids(n: usize, rel: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut ids = vec![usize::MAX; n];
    let mut next = 0;
    for a in 0..n {
        if ids[a] == usize::MAX {
            for b in a..n {
                if rel(a, b) {
                    ids[b] = next;
                }
            }
            next += 1;
        }
    }
    ids
}

/// Green's R, L, H of an ordinary semigroup via reachability in its right
/// and left Cayley graphs: `a R b` iff each reaches the other (or `a = b`).
pub struct OrdinaryGreen {
    pub r: Vec<usize>,
    pub l: Vec<usize>,
    pub h: Vec<usize>,
}

pub fn ordinary_green(n: usize, table: &[usize]) -> OrdinaryGreen {
    let closure = |edge: &dyn Fn(usize, usize) -> usize| {
        let mut reach = vec![vec![false; n]; n];
        for a in 0..n {
            reach[a][a] = true;
            for x in 0..n {
                reach[a][edge(a, x)] = true;
            }
        }
        for m in 0..n {
            for a in 0..n {
                if reach[a][m] {
                    for b in 0..n {
                        if reach[m][b] {
                            reach[a][b] = true;
                        }
                    }
                }
            }
        }
        reach
    };
    let right = closure(&|a, x| table[a * n + x]);
    let left = closure(&|a, x| table[x * n + a]);
    let r = class_ids(n, |a, b| right[a][b] && right[b][a]);
    let l = class_ids(n, |a, b| left[a][b] && left[b][a]);
    let h = class_ids(n, |a, b| right[a][b] && right[b][a] && left[a][b] && left[b][a]);
    OrdinaryGreen { r, l, h }
}
