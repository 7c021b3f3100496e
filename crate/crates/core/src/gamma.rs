//! Cayley-table representation of Γ-groupoids and Γ-semigroups.
//!
//! Elements are the dense indices `0..n` and operation symbols the dense
//! indices `0..k`. A [`GammaGroupoid`] is any family of `k` closed binary
//! tables; a [`GammaSemigroup`] is a groupoid that has passed the mixed
//! associativity check `(aγb)μc = aγ(bμc)` for every pair of symbols.

use std::fmt;
use std::ops::Deref;

use crate::error::{IndexError, TableError};

/// Largest carrier size representable; table entries are stored as bytes.
pub const MAX_ELEMENTS: usize = u8::MAX as usize;

/// `k` Cayley tables over `n` elements, with no associativity requirement.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GammaGroupoid {
    n: usize,
    k: usize,
    // op-major, then row-major: cells[(op * n + a) * n + b] = a op b
    cells: Vec<u8>,
}

impl GammaGroupoid {
    /// Builds a groupoid from `k·n·n` entries laid out op-major, then row-major.
    pub fn build_tables(n: usize, k: usize, entries: &[usize]) -> Result<Self, TableError> {
        if n == 0 {
            return Err(TableError::EmptyCarrier);
        }
        if k == 0 {
            return Err(TableError::NoOperations);
        }
        if n > MAX_ELEMENTS {
            return Err(TableError::TooManyElements { n, max: MAX_ELEMENTS });
        }
        let expected = k * n * n;
        if entries.len() != expected {
            return Err(TableError::WrongEntryCount {
                expected,
                found: entries.len(),
            });
        }
        let mut cells = Vec::with_capacity(expected);
        for (idx, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(TableError::EntryOutOfRange {
                    table: idx / (n * n),
                    row: (idx / n) % n,
                    column: idx % n,
                    value,
                    n,
                });
            }
            cells.push(value as u8);
        }
        Ok(Self { n, k, cells })
    }

    /// Wraps one ordinary binary operation table as a groupoid with `k = 1`.
    pub fn from_single_op(table: &[Vec<usize>]) -> Result<Self, TableError> {
        let n = table.len();
        let mut entries = Vec::with_capacity(n * n);
        for (row, cols) in table.iter().enumerate() {
            if cols.len() != n {
                return Err(TableError::RaggedRow {
                    table: 0,
                    row,
                    expected: n,
                    found: cols.len(),
                });
            }
            entries.extend_from_slice(cols);
        }
        Self::build_tables(n, 1, &entries)
    }

    /// Builds from nested tables `tables[op][row][column]`.
    pub fn from_tables(tables: &[Vec<Vec<usize>>]) -> Result<Self, TableError> {
        let k = tables.len();
        let n = tables.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(k * n * n);
        for (t, table) in tables.iter().enumerate() {
            if table.len() != n {
                return Err(TableError::WrongEntryCount {
                    expected: k * n * n,
                    found: tables.iter().map(|t| t.iter().map(Vec::len).sum::<usize>()).sum(),
                });
            }
            for (row, cols) in table.iter().enumerate() {
                if cols.len() != n {
                    return Err(TableError::RaggedRow {
                        table: t,
                        row,
                        expected: n,
                        found: cols.len(),
                    });
                }
                entries.extend_from_slice(cols);
            }
        }
        Self::build_tables(n, k, &entries)
    }

    pub(crate) fn from_cells_unchecked(n: usize, k: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), k * n * n);
        debug_assert!(cells.iter().all(|&c| (c as usize) < n));
        Self { n, k, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `a op b`. Panics if any index is out of range.
    #[inline]
    pub fn op(&self, op: usize, a: usize, b: usize) -> usize {
        self.cells[(op * self.n + a) * self.n + b] as usize
    }

    /// Flat op-major, row-major entries.
    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    /// Row `a` of table `op`.
    pub fn row(&self, op: usize, a: usize) -> &[u8] {
        let start = (op * self.n + a) * self.n;
        &self.cells[start..start + self.n]
    }

    /// Nested copy of the tables, `[op][row][column]`.
    pub fn tables(&self) -> Vec<Vec<Vec<usize>>> {
        (0..self.k)
            .map(|op| {
                (0..self.n)
                    .map(|a| self.row(op, a).iter().map(|&c| c as usize).collect())
                    .collect()
            })
            .collect()
    }

    pub fn check_element(&self, index: usize) -> Result<(), IndexError> {
        if index < self.n {
            Ok(())
        } else {
            Err(IndexError::Element { index, n: self.n })
        }
    }

    pub fn check_operation(&self, index: usize) -> Result<(), IndexError> {
        if index < self.k {
            Ok(())
        } else {
            Err(IndexError::Operation { index, k: self.k })
        }
    }

    pub fn check_ext(&self, e: ExtElement) -> Result<(), IndexError> {
        match e {
            ExtElement::Identity => Ok(()),
            ExtElement::Element(i) => self.check_element(i),
        }
    }

    /// Product in G¹: the adjoined identity is absorbed on either side.
    #[inline]
    pub fn op_ext(&self, x: ExtElement, op: usize, y: ExtElement) -> ExtElement {
        match (x, y) {
            (ExtElement::Identity, e) | (e, ExtElement::Identity) => e,
            (ExtElement::Element(a), ExtElement::Element(b)) => ExtElement::Element(self.op(op, a, b)),
        }
    }

    /// Number of associativity equations, `k²·n³`.
    pub fn equation_count(&self) -> usize {
        self.k * self.k * self.n * self.n * self.n
    }

    /// Checks every equation `(aγb)μc = aγ(bμc)`.
    ///
    /// Violations come out in lexicographic order on `(γ, μ, a, b, c)`.
    pub fn check_associativity(&self) -> AssociativityReport {
        let mut violations = Vec::new();
        for gamma in 0..self.k {
            for mu in 0..self.k {
                for a in 0..self.n {
                    for b in 0..self.n {
                        let ab = self.op(gamma, a, b);
                        for c in 0..self.n {
                            let lhs = self.op(mu, ab, c);
                            let rhs = self.op(gamma, a, self.op(mu, b, c));
                            if lhs != rhs {
                                violations.push(AssociativityViolation {
                                    a,
                                    b,
                                    c,
                                    gamma,
                                    mu,
                                    lhs,
                                    rhs,
                                });
                            }
                        }
                    }
                }
            }
        }
        AssociativityReport {
            equations_checked: self.equation_count(),
            violations,
        }
    }

    /// Returns a certified Γ-semigroup, or every associativity violation.
    pub fn validate(&self) -> Result<GammaSemigroup, Vec<AssociativityViolation>> {
        let report = self.check_associativity();
        if report.violations.is_empty() {
            Ok(GammaSemigroup { base: self.clone() })
        } else {
            Err(report.violations)
        }
    }

    pub fn into_semigroup(self) -> Result<GammaSemigroup, Vec<AssociativityViolation>> {
        let report = self.check_associativity();
        if report.violations.is_empty() {
            Ok(GammaSemigroup { base: self })
        } else {
            Err(report.violations)
        }
    }
}

impl fmt::Debug for GammaGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GammaGroupoid")
            .field("n", &self.n)
            .field("k", &self.k)
            .field("tables", &self.tables())
            .finish()
    }
}

/// A failed instance of `(aγb)μc = aγ(bμc)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AssociativityViolation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub gamma: usize,
    pub mu: usize,
    /// `(aγb)μc`
    pub lhs: usize,
    /// `aγ(bμc)`
    pub rhs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativityReport {
    pub equations_checked: usize,
    pub violations: Vec<AssociativityViolation>,
}

impl AssociativityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A groupoid whose tables satisfy mixed associativity.
///
/// Only obtainable through [`GammaGroupoid::validate`] (or the census, which
/// checks every equation during the search).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GammaSemigroup {
    base: GammaGroupoid,
}

impl GammaSemigroup {
    pub(crate) fn from_verified(base: GammaGroupoid) -> Self {
        debug_assert!(base.check_associativity().holds());
        Self { base }
    }

    pub fn groupoid(&self) -> &GammaGroupoid {
        &self.base
    }

    pub fn into_groupoid(self) -> GammaGroupoid {
        self.base
    }

    /// Evaluates an alternating word over G¹ left to right.
    pub fn eval_word(&self, word: &Word) -> Result<ExtElement, IndexError> {
        self.base.check_ext(word.head)?;
        for &(op, e) in &word.tail {
            self.base.check_operation(op)?;
            self.base.check_ext(e)?;
        }
        Ok(word
            .tail
            .iter()
            .fold(word.head, |acc, &(op, e)| self.base.op_ext(acc, op, e)))
    }
}

impl Deref for GammaSemigroup {
    type Target = GammaGroupoid;

    fn deref(&self) -> &GammaGroupoid {
        &self.base
    }
}

impl fmt::Debug for GammaSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("GammaSemigroup").field(&self.base).finish()
    }
}

/// An element of G¹ = G ∪ {1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtElement {
    /// The adjoined identity; orders before every element.
    Identity,
    Element(usize),
}

impl ExtElement {
    pub fn element(self) -> Option<usize> {
        match self {
            ExtElement::Identity => None,
            ExtElement::Element(i) => Some(i),
        }
    }
}

impl From<usize> for ExtElement {
    fn from(i: usize) -> Self {
        ExtElement::Element(i)
    }
}

/// An alternating word `e₀ γ₁ e₁ … γₘ eₘ` over G¹ and the operation symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    head: ExtElement,
    tail: Vec<(usize, ExtElement)>,
}

impl Word {
    pub fn new(head: impl Into<ExtElement>) -> Self {
        Self {
            head: head.into(),
            tail: Vec::new(),
        }
    }

    /// Appends `op e`.
    pub fn then(mut self, op: usize, e: impl Into<ExtElement>) -> Self {
        self.tail.push((op, e.into()));
        self
    }

    pub fn head(&self) -> ExtElement {
        self.head
    }

    pub fn steps(&self) -> &[(usize, ExtElement)] {
        &self.tail
    }

    /// Number of element positions.
    pub fn len(&self) -> usize {
        self.tail.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The order-3 Γ-semigroup with `M = {a, b, c}` and `Γ = {γ, μ}`.
///
/// `γ` is addition mod 3 and `μ` is addition plus one mod 3.
pub fn example_semigroup() -> GammaSemigroup {
    let gamma = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
    let mu = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
    GammaGroupoid::from_tables(&[gamma, mu])
        .expect("example tables are in range")
        .into_semigroup()
        .expect("example tables are associative")
}

/// Display names for [`example_semigroup`]: elements `a b c`, operations `gamma mu`.
pub fn example_names() -> (Vec<String>, Vec<String>) {
    (
        ["a", "b", "c"].map(String::from).to_vec(),
        ["gamma", "mu"].map(String::from).to_vec(),
    )
}
