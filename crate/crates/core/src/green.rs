//! Green's relations on a finite Γ-semigroup.
//!
//! `R` is decided from its witness form over G¹: `a R b` iff `a = b`, or
//! `aγx = b` and `bμy = a` for some elements `x, y` and symbols `γ, μ`.
//! `L` is the left-sided dual and `H = R ∩ L`. Principal one-sided ideals
//! `R(a) = {a} ∪ aΓG` and `L(a) = {a} ∪ GΓa` are computed separately so the
//! characterisation `a R b ⟺ R(a) = R(b)` can be cross-checked.

use std::fmt;

use crate::error::IndexError;
use crate::gamma::GammaSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

/// The equivalences that induce partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    R,
    L,
    H,
}

/// Every relation [`GreenStructure::related`] can decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreenRelation {
    R,
    L,
    H,
    /// The composite `R∘L`: some `m` with `a R m` and `m L c`.
    RoL,
}

impl From<Relation> for GreenRelation {
    fn from(rel: Relation) -> Self {
        match rel {
            Relation::R => GreenRelation::R,
            Relation::L => GreenRelation::L,
            Relation::H => GreenRelation::H,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::R => "R",
            Relation::L => "L",
            Relation::H => "H",
        })
    }
}

impl fmt::Display for GreenRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GreenRelation::R => "R",
            GreenRelation::L => "L",
            GreenRelation::H => "H",
            GreenRelation::RoL => "RoL",
        })
    }
}

/// Outcome of a relatedness query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Related {
    No,
    Yes,
    /// `R∘L` holds through this (least) intermediary.
    Via(usize),
}

impl Related {
    pub fn holds(self) -> bool {
        !matches!(self, Related::No)
    }

    pub fn intermediary(self) -> Option<usize> {
        match self {
            Related::Via(m) => Some(m),
            _ => None,
        }
    }
}

/// Strictly increasing list of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(Vec<usize>);

impl ElementSet {
    pub fn from_mask(mask: &[bool]) -> Self {
        Self(
            mask.iter()
                .enumerate()
                .filter_map(|(i, &m)| m.then_some(i))
                .collect(),
        )
    }

    /// Sorts and deduplicates.
    pub fn from_unsorted(mut items: Vec<usize>) -> Self {
        items.sort_unstable();
        items.dedup();
        Self(items)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.iter().filter(|&x| other.contains(x)).collect())
    }
}

/// Equivalence classes of elements, ids assigned by least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<ElementSet>,
}

impl Partition {
    /// Builds the partition of `0..n` induced by an equivalence matrix.
    fn from_equivalence(n: usize, related: impl Fn(usize, usize) -> bool) -> Self {
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let members: Vec<usize> = (a..n).filter(|&b| related(a, b)).collect();
            for &b in &members {
                class_of[b] = id;
            }
            classes.push(ElementSet(members));
        }
        Self { class_of, classes }
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> &[ElementSet] {
        &self.classes
    }

    /// The class containing `x`.
    pub fn class(&self, x: usize) -> &ElementSet {
        &self.classes[self.class_of[x]]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CongruenceViolation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub op: usize,
}

/// Result of checking that `R` is a left congruence (or `L` a right one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub relation: Relation,
    pub violations: Vec<CongruenceViolation>,
}

impl CongruenceReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// One connected component of `R ∪ L`, laid out with R-classes as rows and
/// L-classes as columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EggBlock {
    pub r_classes: Vec<ElementSet>,
    pub l_classes: Vec<ElementSet>,
    /// `cells[i][j] = r_classes[i] ∩ l_classes[j]`, possibly empty.
    pub cells: Vec<Vec<ElementSet>>,
}

impl EggBlock {
    pub fn elements(&self) -> ElementSet {
        ElementSet::from_unsorted(self.r_classes.iter().flat_map(|c| c.iter()).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EggBox {
    pub blocks: Vec<EggBlock>,
    /// Whether `R∘L = L∘R` on this instance. Blocks are built from `R ∪ L`
    /// either way; a `false` here is reported as a warning.
    pub rol_symmetric: bool,
}

/// Precomputed Green data for one Γ-semigroup.
///
/// Construction is `O(k·n²)`; every query afterwards is a lookup.
#[derive(Debug, Clone)]
pub struct GreenStructure<'g> {
    g: &'g GammaSemigroup,
    n: usize,
    r: Vec<bool>,
    l: Vec<bool>,
    r_partition: Partition,
    l_partition: Partition,
    h_partition: Partition,
}

impl<'g> GreenStructure<'g> {
    pub fn new(g: &'g GammaSemigroup) -> Self {
        let n = g.n();
        // reach_right[a * n + b]: b = aγx for some γ, x ∈ G
        let mut reach_right = vec![false; n * n];
        let mut reach_left = vec![false; n * n];
        for op in 0..g.k() {
            for a in 0..n {
                for x in 0..n {
                    reach_right[a * n + g.op(op, a, x)] = true;
                    reach_left[a * n + g.op(op, x, a)] = true;
                }
            }
        }
        let mutual = |reach: &[bool]| -> Vec<bool> {
            let mut rel = vec![false; n * n];
            for a in 0..n {
                for b in 0..n {
                    rel[a * n + b] = a == b || (reach[a * n + b] && reach[b * n + a]);
                }
            }
            rel
        };
        let r = mutual(&reach_right);
        let l = mutual(&reach_left);
        let r_partition = Partition::from_equivalence(n, |a, b| r[a * n + b]);
        let l_partition = Partition::from_equivalence(n, |a, b| l[a * n + b]);
        let h_partition = Partition::from_equivalence(n, |a, b| r[a * n + b] && l[a * n + b]);
        Self {
            g,
            n,
            r,
            l,
            r_partition,
            l_partition,
            h_partition,
        }
    }

    pub fn semigroup(&self) -> &'g GammaSemigroup {
        self.g
    }

    #[inline]
    pub fn r(&self, a: usize, b: usize) -> bool {
        self.r[a * self.n + b]
    }

    #[inline]
    pub fn l(&self, a: usize, b: usize) -> bool {
        self.l[a * self.n + b]
    }

    #[inline]
    pub fn h(&self, a: usize, b: usize) -> bool {
        self.r(a, b) && self.l(a, b)
    }

    /// Least `m` with `a R m` and `m L c`.
    pub fn rol_intermediary(&self, a: usize, c: usize) -> Option<usize> {
        (0..self.n).find(|&m| self.r(a, m) && self.l(m, c))
    }

    pub fn related(&self, a: usize, b: usize, rel: GreenRelation) -> Result<Related, IndexError> {
        self.g.check_element(a)?;
        self.g.check_element(b)?;
        let yes = |holds: bool| if holds { Related::Yes } else { Related::No };
        Ok(match rel {
            GreenRelation::R => yes(self.r(a, b)),
            GreenRelation::L => yes(self.l(a, b)),
            GreenRelation::H => yes(self.h(a, b)),
            GreenRelation::RoL => self.rol_intermediary(a, b).map_or(Related::No, Related::Via),
        })
    }

    /// `R(a) = {a} ∪ aΓG` (right) or `L(a) = {a} ∪ GΓa` (left).
    pub fn principal_ideal(&self, a: usize, side: Side) -> Result<ElementSet, IndexError> {
        principal_ideal(self.g, a, side)
    }

    pub fn partition(&self, rel: Relation) -> &Partition {
        match rel {
            Relation::R => &self.r_partition,
            Relation::L => &self.l_partition,
            Relation::H => &self.h_partition,
        }
    }

    /// `(a)_R ∩ (a)_L`.
    pub fn h_class(&self, a: usize) -> &ElementSet {
        self.h_partition.class(a)
    }

    /// `R` as a left congruence and `L` as a right congruence.
    pub fn congruence_check(&self) -> (CongruenceReport, CongruenceReport) {
        let g = self.g;
        let mut r_violations = Vec::new();
        let mut l_violations = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                let (ra, la) = (self.r(a, b), self.l(a, b));
                if !ra && !la {
                    continue;
                }
                for c in 0..self.n {
                    for op in 0..g.k() {
                        if ra && !self.r(g.op(op, c, a), g.op(op, c, b)) {
                            r_violations.push(CongruenceViolation { a, b, c, op });
                        }
                        if la && !self.l(g.op(op, a, c), g.op(op, b, c)) {
                            l_violations.push(CongruenceViolation { a, b, c, op });
                        }
                    }
                }
            }
        }
        (
            CongruenceReport {
                relation: Relation::R,
                violations: r_violations,
            },
            CongruenceReport {
                relation: Relation::L,
                violations: l_violations,
            },
        )
    }

    /// Whether `(a, c) ∈ R∘L ⟺ (a, c) ∈ L∘R` for every pair.
    pub fn rol_symmetric(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|c| {
                let rol = self.rol_intermediary(a, c).is_some();
                let lor = (0..self.n).any(|m| self.l(a, m) && self.r(m, c));
                rol == lor
            })
        })
    }

    pub fn eggbox(&self) -> EggBox {
        let n = self.n;
        let mut dsu = Dsu::new(n);
        for a in 0..n {
            dsu.union(a, self.r_partition.classes[self.r_partition.class_of[a]].0[0]);
            dsu.union(a, self.l_partition.classes[self.l_partition.class_of[a]].0[0]);
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::new();
        for a in 0..n {
            let root = dsu.find(a);
            match roots.iter().position(|&r| r == root) {
                Some(i) => members[i].push(a),
                None => {
                    roots.push(root);
                    members.push(vec![a]);
                }
            }
        }
        let blocks = members
            .into_iter()
            .map(|elems| {
                let collect = |p: &Partition| -> Vec<ElementSet> {
                    let mut ids: Vec<usize> = elems.iter().map(|&x| p.class_of(x)).collect();
                    ids.dedup();
                    ids.sort_unstable();
                    ids.dedup();
                    ids.into_iter().map(|id| p.classes[id].clone()).collect()
                };
                let r_classes = collect(&self.r_partition);
                let l_classes = collect(&self.l_partition);
                let cells = r_classes
                    .iter()
                    .map(|rc| l_classes.iter().map(|lc| rc.intersection(lc)).collect())
                    .collect();
                EggBlock {
                    r_classes,
                    l_classes,
                    cells,
                }
            })
            .collect();
        EggBox {
            blocks,
            rol_symmetric: self.rol_symmetric(),
        }
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so roots are block minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// `R(a) = {a} ∪ aΓG` (right) or `L(a) = {a} ∪ GΓa` (left), read straight
/// off the tables.
pub fn principal_ideal(g: &GammaSemigroup, a: usize, side: Side) -> Result<ElementSet, IndexError> {
    g.check_element(a)?;
    let mut items = vec![a];
    for op in 0..g.k() {
        for x in 0..g.n() {
            items.push(match side {
                Side::Right => g.op(op, a, x),
                Side::Left => g.op(op, x, a),
            });
        }
    }
    Ok(ElementSet::from_unsorted(items))
}

pub fn related(
    g: &GammaSemigroup,
    a: usize,
    b: usize,
    rel: GreenRelation,
) -> Result<Related, IndexError> {
    GreenStructure::new(g).related(a, b, rel)
}

pub fn partition(g: &GammaSemigroup, rel: Relation) -> Partition {
    GreenStructure::new(g).partition(rel).clone()
}

pub fn congruence_check(g: &GammaSemigroup) -> (CongruenceReport, CongruenceReport) {
    GreenStructure::new(g).congruence_check()
}

pub fn eggbox(g: &GammaSemigroup) -> EggBox {
    GreenStructure::new(g).eggbox()
}
