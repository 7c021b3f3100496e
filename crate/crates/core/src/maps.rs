//! Green's Lemma and Green's Theorem translation maps, built as explicit
//! tables and checked exhaustively.
//!
//! For `a R b` with `aγs = b` and `bμs′ = a`, the lemma maps are
//! `σ: x ↦ xγs` on `(a)_L` and `σ′: y ↦ yμs′` on `(b)_L`. For `a R b L c`
//! with additionally `tρb = c` and `t′ζc = b`, the theorem maps are
//! `σ: x ↦ tρxγs` on `H_a` and `σ′: x ↦ t′ζxμs′` on `H_c`. All witnesses
//! range over G¹.

use std::fmt;

use thiserror::Error;

use crate::error::IndexError;
use crate::gamma::{ExtElement, GammaSemigroup, Word};
use crate::green::{ElementSet, GreenStructure, Relation, Side};

/// One `(operation, G¹-element)` pair realising a translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness {
    pub op: usize,
    pub elem: ExtElement,
}

impl Witness {
    pub fn new(op: usize, elem: impl Into<ExtElement>) -> Self {
        Self {
            op,
            elem: elem.into(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.elem {
            ExtElement::Identity => write!(f, "(op {}, {})", self.op, crate::gsg::IDENTITY_TOKEN),
            ExtElement::Element(e) => write!(f, "(op {}, {})", self.op, e),
        }
    }
}

/// A finite map with ascending domain.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Mapping {
    pairs: Vec<(usize, usize)>,
}

impl Mapping {
    fn build(domain: &ElementSet, f: impl Fn(usize) -> usize) -> Self {
        Self {
            pairs: domain.iter().map(|x| (x, f(x))).collect(),
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn get(&self, x: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&x, |&(d, _)| d)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|&(d, _)| d)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Whether `other ∘ self` is the identity on this map's domain.
    pub fn is_left_inverted_by(&self, other: &Mapping) -> bool {
        self.pairs.iter().all(|&(x, y)| other.get(y) == Some(x))
    }

    pub fn is_injective(&self) -> bool {
        let mut images: Vec<usize> = self.pairs.iter().map(|&(_, y)| y).collect();
        images.sort_unstable();
        images.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaChecks {
    /// `σ((a)_L) ⊆ (b)_L` and `σ′((b)_L) ⊆ (a)_L`.
    pub well_defined: bool,
    /// `σ′∘σ = id` on `(a)_L` and `σ∘σ′ = id` on `(b)_L`.
    pub mutually_inverse: bool,
    /// `σ(x) R x` on `(a)_L` and `σ′(y) R y` on `(b)_L`.
    pub r_class_preserving: bool,
}

impl LemmaChecks {
    pub fn all(&self) -> bool {
        self.well_defined && self.mutually_inverse && self.r_class_preserving
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCertificate {
    pub a: usize,
    pub b: usize,
    /// `(γ, s)` with `aγs = b`.
    pub right_witness: Witness,
    /// `(μ, s′)` with `bμs′ = a`.
    pub back_witness: Witness,
    /// `x ↦ xγs` on `(a)_L`.
    pub sigma: Mapping,
    /// `y ↦ yμs′` on `(b)_L`.
    pub sigma_prime: Mapping,
    pub checks: LemmaChecks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremChecks {
    /// `σ(H_a) ⊆ H_c`.
    pub well_defined_sigma: bool,
    /// `σ′(H_c) ⊆ H_a`.
    pub well_defined_sigma_prime: bool,
    /// `σ′∘σ = id` on `H_a` and `σ∘σ′ = id` on `H_c`.
    pub mutually_inverse: bool,
}

impl TheoremChecks {
    pub fn all(&self) -> bool {
        self.well_defined_sigma && self.well_defined_sigma_prime && self.mutually_inverse
    }
}

/// The four witnesses `(γ,s), (μ,s′), (ρ,t), (ζ,t′)` of the theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremWitnesses {
    /// `aγs = b`
    pub s: Witness,
    /// `bμs′ = a`
    pub s_prime: Witness,
    /// `tρb = c`
    pub t: Witness,
    /// `t′ζc = b`
    pub t_prime: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCertificate {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub witnesses: TheoremWitnesses,
    pub h_a: ElementSet,
    pub h_c: ElementSet,
    /// `x ↦ tρxγs` on `H_a`.
    pub sigma: Mapping,
    /// `x ↦ t′ζxμs′` on `H_c`.
    pub sigma_prime: Mapping,
    pub checks: TheoremChecks,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error("{a} and {b} are not R-related")]
    NotRRelated { a: usize, b: usize },
    #[error("{a} and {c} are not R∘L-related: no b with {a} R b and b L {c}")]
    NotRoLRelated { a: usize, c: usize },
    #[error("{b} and {c} are not L-related")]
    NotLRelated { b: usize, c: usize },
    #[error("witness equation {equation} fails: left side is {got}")]
    InvalidWitness { equation: String, got: String },
    #[error("lemma certificate for ({}, {}) failed its checks: {:?}", .0.a, .0.b, .0.checks)]
    LemmaCheckFailed(Box<LemmaCertificate>),
    #[error("theorem certificate for ({}, {}) failed its checks: {:?}", .0.a, .0.c, .0.checks)]
    TheoremCheckFailed(Box<TheoremCertificate>),
}

fn show(e: ExtElement) -> String {
    match e {
        ExtElement::Identity => crate::gsg::IDENTITY_TOKEN.to_string(),
        ExtElement::Element(i) => i.to_string(),
    }
}

/// All witnesses translating `a` to `b` on `side`.
///
/// Right: every `(γ, s)` with `aγs = b`; left: every `(ρ, t)` with `tρa = b`.
/// Identity witnesses come first (one per symbol, present iff `a = b`), then
/// ascending `(element, operation)`.
pub fn find_witnesses(
    g: &GammaSemigroup,
    a: usize,
    b: usize,
    side: Side,
) -> Result<Vec<Witness>, IndexError> {
    g.check_element(a)?;
    g.check_element(b)?;
    let mut out = Vec::new();
    if a == b {
        out.extend((0..g.k()).map(|op| Witness::new(op, ExtElement::Identity)));
    }
    for s in 0..g.n() {
        for op in 0..g.k() {
            let product = match side {
                Side::Right => g.op(op, a, s),
                Side::Left => g.op(op, s, a),
            };
            if product == b {
                out.push(Witness::new(op, s));
            }
        }
    }
    Ok(out)
}

fn first_witness(g: &GammaSemigroup, a: usize, b: usize, side: Side) -> Option<Witness> {
    find_witnesses(g, a, b, side).ok()?.into_iter().next()
}

fn check_witness(
    g: &GammaSemigroup,
    x: usize,
    w: Witness,
    target: usize,
    side: Side,
) -> Result<(), MapError> {
    g.check_operation(w.op)?;
    g.check_ext(w.elem)?;
    let (product, equation) = match side {
        Side::Right => (
            g.op_ext(x.into(), w.op, w.elem),
            format!("{} op{} {} = {}", x, w.op, show(w.elem), target),
        ),
        Side::Left => (
            g.op_ext(w.elem, w.op, x.into()),
            format!("{} op{} {} = {}", show(w.elem), w.op, x, target),
        ),
    };
    if product == ExtElement::Element(target) {
        Ok(())
    } else {
        Err(MapError::InvalidWitness {
            equation,
            got: show(product),
        })
    }
}

fn right_translate(g: &GammaSemigroup, x: usize, w: Witness) -> usize {
    match g.op_ext(x.into(), w.op, w.elem) {
        ExtElement::Element(y) => y,
        ExtElement::Identity => unreachable!("an element times a G¹ element is an element"),
    }
}

/// Builds and checks the Green's Lemma certificate for `a R b`.
///
/// With `chosen = None` the first witnesses from [`find_witnesses`] are used.
/// `a = b` is accepted; the identity witnesses then give identity maps.
pub fn lemma_certificate(
    gs: &GreenStructure<'_>,
    a: usize,
    b: usize,
    chosen: Option<(Witness, Witness)>,
) -> Result<LemmaCertificate, MapError> {
    let g = gs.semigroup();
    g.check_element(a)?;
    g.check_element(b)?;
    if !gs.r(a, b) {
        return Err(MapError::NotRRelated { a, b });
    }
    let (right_witness, back_witness) = match chosen {
        Some((w, w_back)) => {
            check_witness(g, a, w, b, Side::Right)?;
            check_witness(g, b, w_back, a, Side::Right)?;
            (w, w_back)
        }
        None => (
            first_witness(g, a, b, Side::Right).ok_or(MapError::NotRRelated { a, b })?,
            first_witness(g, b, a, Side::Right).ok_or(MapError::NotRRelated { a, b })?,
        ),
    };

    let la = gs.partition(Relation::L).class(a);
    let lb = gs.partition(Relation::L).class(b);
    let sigma = Mapping::build(la, |x| right_translate(g, x, right_witness));
    let sigma_prime = Mapping::build(lb, |y| right_translate(g, y, back_witness));

    let well_defined = sigma.pairs().iter().all(|&(_, y)| lb.contains(y))
        && sigma_prime.pairs().iter().all(|&(_, x)| la.contains(x));
    let mutually_inverse = sigma
        .pairs()
        .iter()
        .all(|&(x, y)| right_translate(g, y, back_witness) == x)
        && sigma_prime
            .pairs()
            .iter()
            .all(|&(y, x)| right_translate(g, x, right_witness) == y);
    let r_class_preserving = sigma.pairs().iter().all(|&(x, y)| gs.r(y, x))
        && sigma_prime.pairs().iter().all(|&(y, x)| gs.r(x, y));

    let cert = LemmaCertificate {
        a,
        b,
        right_witness,
        back_witness,
        sigma,
        sigma_prime,
        checks: LemmaChecks {
            well_defined,
            mutually_inverse,
            r_class_preserving,
        },
    };
    if cert.checks.all() {
        Ok(cert)
    } else {
        Err(MapError::LemmaCheckFailed(Box::new(cert)))
    }
}

pub fn green_lemma(
    g: &GammaSemigroup,
    a: usize,
    b: usize,
    chosen: Option<(Witness, Witness)>,
) -> Result<LemmaCertificate, MapError> {
    lemma_certificate(&GreenStructure::new(g), a, b, chosen)
}

/// Every witness pair for `a R b`, in [`find_witnesses`] order.
pub fn lemma_witness_pairs(
    g: &GammaSemigroup,
    a: usize,
    b: usize,
) -> Result<Vec<(Witness, Witness)>, IndexError> {
    let forward = find_witnesses(g, a, b, Side::Right)?;
    let back = find_witnesses(g, b, a, Side::Right)?;
    Ok(forward
        .iter()
        .flat_map(|&w| back.iter().map(move |&v| (w, v)))
        .collect())
}

fn eval_element(g: &GammaSemigroup, word: &Word) -> usize {
    match g.eval_word(word) {
        Ok(ExtElement::Element(x)) => x,
        other => unreachable!("word with an element position evaluated to {other:?}"),
    }
}

/// Builds and checks the Green's Theorem certificate for given witnesses and
/// intermediary `b`.
pub fn theorem_certificate_with(
    gs: &GreenStructure<'_>,
    a: usize,
    b: usize,
    c: usize,
    witnesses: TheoremWitnesses,
) -> Result<TheoremCertificate, MapError> {
    let g = gs.semigroup();
    for x in [a, b, c] {
        g.check_element(x)?;
    }
    if !gs.r(a, b) {
        return Err(MapError::NotRRelated { a, b });
    }
    if !gs.l(b, c) {
        return Err(MapError::NotLRelated { b, c });
    }
    let TheoremWitnesses {
        s,
        s_prime,
        t,
        t_prime,
    } = witnesses;
    check_witness(g, a, s, b, Side::Right)?;
    check_witness(g, b, s_prime, a, Side::Right)?;
    check_witness(g, b, t, c, Side::Left)?;
    check_witness(g, c, t_prime, b, Side::Left)?;

    // tρxγs and t′ζxμs′
    let forward = |x: usize| eval_element(g, &Word::new(t.elem).then(t.op, x).then(s.op, s.elem));
    let backward = |x: usize| {
        eval_element(
            g,
            &Word::new(t_prime.elem)
                .then(t_prime.op, x)
                .then(s_prime.op, s_prime.elem),
        )
    };

    let h_a = gs.h_class(a).clone();
    let h_c = gs.h_class(c).clone();
    let sigma = Mapping::build(&h_a, forward);
    let sigma_prime = Mapping::build(&h_c, backward);
    let checks = TheoremChecks {
        well_defined_sigma: sigma.pairs().iter().all(|&(_, y)| h_c.contains(y)),
        well_defined_sigma_prime: sigma_prime.pairs().iter().all(|&(_, x)| h_a.contains(x)),
        mutually_inverse: sigma.pairs().iter().all(|&(x, y)| backward(y) == x)
            && sigma_prime.pairs().iter().all(|&(y, x)| forward(x) == y),
    };
    let cert = TheoremCertificate {
        a,
        b,
        c,
        witnesses,
        h_a,
        h_c,
        sigma,
        sigma_prime,
        checks,
    };
    if cert.checks.all() {
        Ok(cert)
    } else {
        Err(MapError::TheoremCheckFailed(Box::new(cert)))
    }
}

/// Green's Theorem certificate for `a R∘L c`, using the least intermediary
/// and the first witness of each kind.
pub fn theorem_certificate(
    gs: &GreenStructure<'_>,
    a: usize,
    c: usize,
) -> Result<TheoremCertificate, MapError> {
    let g = gs.semigroup();
    g.check_element(a)?;
    g.check_element(c)?;
    let b = gs
        .rol_intermediary(a, c)
        .ok_or(MapError::NotRoLRelated { a, c })?;
    let pick = |x, y, side| first_witness(g, x, y, side).ok_or(MapError::NotRoLRelated { a, c });
    let witnesses = TheoremWitnesses {
        s: pick(a, b, Side::Right)?,
        s_prime: pick(b, a, Side::Right)?,
        t: pick(b, c, Side::Left)?,
        t_prime: pick(c, b, Side::Left)?,
    };
    theorem_certificate_with(gs, a, b, c, witnesses)
}

pub fn green_theorem(g: &GammaSemigroup, a: usize, c: usize) -> Result<TheoremCertificate, MapError> {
    theorem_certificate(&GreenStructure::new(g), a, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{example_semigroup, GammaGroupoid};

    const ID: ExtElement = ExtElement::Identity;

    fn left_zero() -> GammaSemigroup {
        GammaGroupoid::from_single_op(&[vec![0, 0], vec![1, 1]])
            .unwrap()
            .into_semigroup()
            .unwrap()
    }

    #[test]
    fn witnesses_in_example_semigroup() {
        let g = example_semigroup();
        let ws = find_witnesses(&g, 0, 1, Side::Right).unwrap();
        assert!(ws.contains(&Witness::new(0, 1)));
        assert!(ws.contains(&Witness::new(1, 0)));
        // 0γx = x and 0μx = x + 1: exactly these two
        assert_eq!(ws, vec![Witness::new(1, 0), Witness::new(0, 1)]);
    }

    #[test]
    fn identity_witnesses_lead_when_equal() {
        let g = example_semigroup();
        let ws = find_witnesses(&g, 2, 2, Side::Left).unwrap();
        assert_eq!(&ws[..2], &[Witness::new(0, ID), Witness::new(1, ID)]);
        assert!(ws[2..].iter().all(|w| w.elem != ID));
    }

    #[test]
    fn left_zero_has_no_right_witness() {
        let g = left_zero();
        assert!(find_witnesses(&g, 0, 1, Side::Right).unwrap().is_empty());
    }

    #[test]
    fn lemma_example_semigroup_cycle() {
        let g = example_semigroup();
        let cert = green_lemma(&g, 0, 1, Some((Witness::new(0, 1), Witness::new(0, 2)))).unwrap();
        assert_eq!(cert.sigma.pairs(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(cert.sigma_prime.pairs(), &[(0, 2), (1, 0), (2, 1)]);
        assert!(cert.checks.all());
    }

    #[test]
    fn lemma_identity_case() {
        let g = example_semigroup();
        let cert = green_lemma(&g, 1, 1, None).unwrap();
        assert_eq!(cert.right_witness, Witness::new(0, ID));
        assert_eq!(cert.sigma.pairs(), &[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(cert.sigma_prime.pairs(), &[(0, 0), (1, 1), (2, 2)]);
    }

    #[test]
    fn lemma_rejections() {
        assert_eq!(
            green_lemma(&left_zero(), 0, 1, None).unwrap_err(),
            MapError::NotRRelated { a: 0, b: 1 }
        );
        let g = example_semigroup();
        let err = green_lemma(&g, 0, 1, Some((Witness::new(0, 2), Witness::new(0, 2)))).unwrap_err();
        assert!(matches!(err, MapError::InvalidWitness { ref equation, .. } if equation == "0 op0 2 = 1"));
        assert!(matches!(
            green_lemma(&g, 0, 1, Some((Witness::new(5, 1), Witness::new(0, 2)))),
            Err(MapError::Index(IndexError::Operation { index: 5, k: 2 }))
        ));
    }

    #[test]
    fn theorem_example_semigroup() {
        let g = example_semigroup();
        let cert = green_theorem(&g, 0, 2).unwrap();
        assert_eq!(cert.b, 0);
        // first left witnesses under (element, operation) order: 1μ0 = 2 and 0μ2 = 0
        assert_eq!(cert.witnesses.s, Witness::new(0, ID));
        assert_eq!(cert.witnesses.s_prime, Witness::new(0, ID));
        assert_eq!(cert.witnesses.t, Witness::new(1, 1));
        assert_eq!(cert.witnesses.t_prime, Witness::new(1, 0));
        // σ = x ↦ x + 2, σ′ = x ↦ x + 1 (mod 3)
        assert_eq!(cert.sigma.pairs(), &[(0, 2), (1, 0), (2, 1)]);
        assert_eq!(cert.sigma_prime.pairs(), &[(0, 1), (1, 2), (2, 0)]);
        assert!(cert.checks.all());
    }

    #[test]
    fn theorem_with_gamma_only_witnesses_gives_same_maps() {
        let g = example_semigroup();
        let gs = GreenStructure::new(&g);
        let ws = TheoremWitnesses {
            s: Witness::new(0, ID),
            s_prime: Witness::new(0, ID),
            t: Witness::new(0, 2),
            t_prime: Witness::new(0, 1),
        };
        let cert = theorem_certificate_with(&gs, 0, 0, 2, ws).unwrap();
        assert_eq!(cert.sigma.pairs(), &[(0, 2), (1, 0), (2, 1)]);
        assert_eq!(cert.sigma_prime.pairs(), &[(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn theorem_identity_case() {
        let g = example_semigroup();
        let cert = green_theorem(&g, 0, 0).unwrap();
        assert_eq!(cert.b, 0);
        assert_eq!(cert.witnesses.t, Witness::new(0, ID));
        assert_eq!(cert.witnesses.t_prime, Witness::new(0, ID));
        assert!(cert.sigma.pairs().iter().all(|&(x, y)| x == y));
        assert!(cert.sigma_prime.pairs().iter().all(|&(x, y)| x == y));
    }

    #[test]
    fn theorem_rejects_unrelated_pair() {
        // left-zero band {0,1} with adjoined zero 2: 0 and 2 are in different blocks
        let g = GammaGroupoid::from_single_op(&[vec![0, 0, 2], vec![1, 1, 2], vec![2, 2, 2]])
            .unwrap()
            .into_semigroup()
            .unwrap();
        assert_eq!(
            green_theorem(&g, 0, 2).unwrap_err(),
            MapError::NotRoLRelated { a: 0, c: 2 }
        );
        // left zero: 0 L 1, so 0 R∘L 1 through b = 0
        let cert = green_theorem(&left_zero(), 0, 1).unwrap();
        assert_eq!(cert.b, 0);
        assert_eq!(cert.h_a.len(), cert.h_c.len());
    }

    #[test]
    fn mapping_helpers() {
        let m = Mapping {
            pairs: vec![(0, 1), (1, 0)],
        };
        assert!(m.is_injective());
        assert!(m.is_left_inverted_by(&m));
        assert_eq!(m.get(1), Some(0));
        assert_eq!(m.get(2), None);
    }
}
