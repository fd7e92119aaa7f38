//! Frontal operators, their π-extension to the upsets of the spectrum, and the
//! canonical operators γ, S and G.
//!
//! Each canonical operator is the pointwise minimum of a family of sets:
//!
//! * `γ_a = {b : ¬b ≤ b, a ≤ b}` (bounded algebras),
//! * `S_a = {b : b → a ≤ b}`,
//! * `G_a = {b : b → a ≤ ¬¬a → b}` (bounded algebras).
//!
//! When one of these sets has no minimum the operator does not exist, and the
//! search reports the offending element with the minimal members of its set.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{all_unary_maps, FiniteHilbertAlgebra, UnaryMap};
use crate::error::{Error, Result};
use crate::extension::{lift_hom, same_algebra, Extension};
use crate::filters::preimage;
use crate::hom::Homomorphism;
use crate::poset::FinitePoset;
use crate::report::{Law, Report};
use crate::subset::Subset;

/// Which formulation of the frontal conditions to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Flavor {
    /// (i1), (i2), (i3) over the implication alone.
    Hilbert,
    /// meet preservation, (i2), (i3); needs a meet table.
    Semilattice,
    /// (f1), (f2), (f3); needs meets and joins of the natural order.
    HeytingF,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Hilbert => "hilbert",
            Flavor::Semilattice => "semilattice",
            Flavor::HeytingF => "heyting_f",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hilbert" => Ok(Flavor::Hilbert),
            "semilattice" => Ok(Flavor::Semilattice),
            "heyting_f" => Ok(Flavor::HeytingF),
            other => Err(Error::Malformed(format!("unknown flavor {other:?}"))),
        }
    }
}

/// The canonical operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OperatorKind {
    Successor,
    Gamma,
    Gabbay,
}

impl OperatorKind {
    /// Classification order: successor first since it needs no bound.
    pub const ALL: [OperatorKind; 3] = [OperatorKind::Successor, OperatorKind::Gamma, OperatorKind::Gabbay];

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::Successor => "succ",
            OperatorKind::Gamma => "gamma",
            OperatorKind::Gabbay => "gabbay",
        }
    }

    pub fn needs_zero(self) -> bool {
        !matches!(self, OperatorKind::Successor)
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "succ" | "successor" => Ok(OperatorKind::Successor),
            "gamma" => Ok(OperatorKind::Gamma),
            "gabbay" => Ok(OperatorKind::Gabbay),
            other => Err(Error::Malformed(format!("unknown operator {other:?}"))),
        }
    }
}

fn require_len(h: &FiniteHilbertAlgebra, t: &UnaryMap) -> Result<()> {
    if t.len() == h.len() {
        Ok(())
    } else {
        Err(Error::CarrierMismatch(format!(
            "operator on {} elements used with an algebra of {}",
            t.len(),
            h.len()
        )))
    }
}

/// Checks the frontal conditions in the requested formulation.
pub fn check_frontal(h: &FiniteHilbertAlgebra, t: &UnaryMap, flavor: Flavor) -> Result<Report> {
    require_len(h, t)?;
    let mut report = Report::new(format!("frontal ({flavor})"));
    let n = h.len();
    let tau = |a| t.apply(a);
    for a in 0..n {
        if !h.leq(a, tau(a)) {
            report.push(Law::I2, [a]);
        }
    }
    match flavor {
        Flavor::Hilbert | Flavor::Semilattice => {
            for a in 0..n {
                for b in 0..n {
                    if !h.leq(tau(a), h.imp(h.imp(h.imp(b, a), b), b)) {
                        report.push(Law::I3, [a, b]);
                    }
                }
            }
        }
        Flavor::HeytingF => {}
    }
    match flavor {
        Flavor::Hilbert => {
            for a in 0..n {
                for b in 0..n {
                    if !h.leq(tau(h.imp(a, b)), h.imp(tau(a), tau(b))) {
                        report.push(Law::I1, [a, b]);
                    }
                }
            }
        }
        Flavor::Semilattice | Flavor::HeytingF => {
            if !h.has_meet() {
                return Err(Error::MissingStructure(format!("flavor {flavor} needs a meet table")));
            }
            for a in 0..n {
                for b in 0..n {
                    let m = h.meet(a, b).unwrap();
                    if tau(m) != h.meet(tau(a), tau(b)).unwrap() {
                        report.push(Law::F1, [a, b]);
                    }
                }
            }
        }
    }
    if flavor == Flavor::HeytingF {
        for a in 0..n {
            for b in 0..n {
                let join = h
                    .lub(b, h.imp(b, a))
                    .ok_or_else(|| Error::MissingStructure(format!("no join of {b} and {b}->{a}")))?;
                if !h.leq(tau(a), join) {
                    report.push(Law::F3, [a, b]);
                }
            }
        }
    }
    Ok(report)
}

/// A Hilbert algebra together with a verified frontal operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontalAlgebra {
    base: FiniteHilbertAlgebra,
    tau: UnaryMap,
}

impl FrontalAlgebra {
    /// Fails with [`Error::Classification`] when `tau` is not frontal.
    pub fn new(base: FiniteHilbertAlgebra, tau: UnaryMap) -> Result<Self> {
        let report = check_frontal(&base, &tau, Flavor::Hilbert)?;
        if !report.passes() {
            return Err(Error::Classification(report.to_string()));
        }
        Ok(FrontalAlgebra { base, tau })
    }

    pub fn base(&self) -> &FiniteHilbertAlgebra {
        &self.base
    }

    pub fn tau(&self) -> &UnaryMap {
        &self.tau
    }
}

/// `U ∪ (Uᶜ)_M` on the upsets of a poset.
pub fn coderivative(p: &FinitePoset, u: &Subset) -> Result<Subset> {
    p.coderivative(u)
}

/// Elements of `s` with nothing of `s` strictly above them.
pub fn maximal_elements(p: &FinitePoset, s: &Subset) -> Subset {
    p.maximal_elements(s)
}

fn require_base(e: &Extension, f: &FrontalAlgebra) -> Result<()> {
    if same_algebra(e.source(), &f.base) {
        Ok(())
    } else {
        Err(Error::CarrierMismatch("operator lives on a different algebra".into()))
    }
}

fn require_spectrum_upset(e: &Extension, u: &Subset) -> Result<()> {
    if u.universe() != e.spectrum().len() {
        return Err(Error::CarrierMismatch(format!(
            "upset over {} points used with a spectrum of {}",
            u.universe(),
            e.spectrum().len()
        )));
    }
    if !e.spectrum().order().is_upset(u) {
        return Err(Error::NotAnUpset(u.to_vec()));
    }
    Ok(())
}

/// `τ^π(U)`: the points `P` such that every irreducible `Q ⊇ τ⁻¹[P]` lies in `U`.
pub fn tau_pi(e: &Extension, f: &FrontalAlgebra, u: &Subset) -> Result<Subset> {
    require_base(e, f)?;
    require_spectrum_upset(e, u)?;
    let spec = e.spectrum();
    let filters = spec.filters();
    let tau = f.tau.as_slice();
    Ok(Subset::from_indices(
        spec.len(),
        (0..spec.len()).filter(|&p| {
            let pre = preimage(tau, &filters[p]);
            (0..spec.len()).all(|q| !pre.is_subset(&filters[q]) || u.contains(q))
        }),
    ))
}

/// `τ^π` restricted to `L(H)`, indexed like the extension's elements.
///
/// Each element `φ(a₁) ∩ ⋯ ∩ φ(aₖ)` goes to `φ(τ(a₁)) ∩ ⋯ ∩ φ(τ(aₖ))`; the
/// result is cross-checked against [`tau_pi`] and the frontal conditions.
pub fn extend_frontal(e: &Extension, f: &FrontalAlgebra) -> Result<UnaryMap> {
    require_base(e, f)?;
    let mut map = Vec::with_capacity(e.len());
    for i in 0..e.len() {
        let images: Vec<usize> = e.gens(i).iter().map(|&a| f.tau.apply(a)).collect();
        let u = e.intersect_phi(&images);
        if u != tau_pi(e, f, e.element(i))? {
            return Err(Error::Soundness(format!("generator formula and tau_pi disagree on element {i}")));
        }
        map.push(
            e.index_of(&u)
                .ok_or_else(|| Error::Soundness(format!("tau_pi of element {i} leaves L(H)")))?,
        );
    }
    let ext = UnaryMap::new(map, e.len())?;
    let report = check_frontal(e.algebra(), &ext, Flavor::Semilattice)?;
    if !report.passes() {
        return Err(Error::Soundness(format!("extended operator is not frontal: {report}")));
    }
    Ok(ext)
}

/// `ĥ ∘ τ₁^π = τ₂^π ∘ ĥ` on all of `L(H₁)` for a frontal homomorphism `h`.
pub fn lift_commutes(h: &Homomorphism<'_>, e1: &Extension, f1: &FrontalAlgebra, e2: &Extension, f2: &FrontalAlgebra) -> Result<bool> {
    let lifted = lift_hom(h, e1, e2)?;
    let (t1, t2) = (extend_frontal(e1, f1)?, extend_frontal(e2, f2)?);
    Ok((0..e1.len()).all(|u| lifted.apply(t1.apply(u)) == t2.apply(lifted.apply(u))))
}

fn zero_of(h: &FiniteHilbertAlgebra) -> Result<usize> {
    h.zero().ok_or(Error::NotBounded)
}

/// Membership in `γ_a`, `S_a` or `G_a`.
pub fn in_filter_set(h: &FiniteHilbertAlgebra, kind: OperatorKind, a: usize, b: usize) -> Result<bool> {
    Ok(match kind {
        OperatorKind::Successor => h.leq(h.imp(b, a), b),
        OperatorKind::Gamma => {
            let nb = h.neg(b)?;
            h.leq(nb, b) && h.leq(a, b)
        }
        OperatorKind::Gabbay => {
            let nna = h.neg(h.neg(a)?)?;
            h.leq(h.imp(b, a), h.imp(nna, b))
        }
    })
}

/// The set `γ_a`, `S_a` or `G_a` as a subset of the carrier.
pub fn filter_set(h: &FiniteHilbertAlgebra, kind: OperatorKind, a: usize) -> Result<Subset> {
    if kind.needs_zero() {
        zero_of(h)?;
    }
    let mut s = Subset::empty(h.len());
    for b in h.elements() {
        if in_filter_set(h, kind, a, b)? {
            s.insert(b);
        }
    }
    Ok(s)
}

/// Why an operator fails to exist: some `a` whose set has no minimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Absence {
    pub element: usize,
    /// minimal members of the set, pairwise incomparable
    pub minimal: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum OperatorSearch {
    Exists(UnaryMap),
    Absent(Vec<Absence>),
}

impl OperatorSearch {
    pub fn map(&self) -> Option<&UnaryMap> {
        match self {
            OperatorSearch::Exists(m) => Some(m),
            OperatorSearch::Absent(_) => None,
        }
    }
}

/// The frontal conditions plus the laws that single out `kind`.
pub fn check_operator(h: &FiniteHilbertAlgebra, t: &UnaryMap, kind: OperatorKind) -> Result<Report> {
    let mut report = check_frontal(h, t, Flavor::Hilbert)?;
    report.subject = format!("{kind} operator");
    let n = h.len();
    match kind {
        OperatorKind::Successor => {
            for a in 0..n {
                if h.imp(t.apply(a), a) != a {
                    report.push(Law::SuccessorFixed, [a]);
                }
            }
        }
        OperatorKind::Gamma => {
            zero_of(h)?;
            for a in 0..n {
                let ta = t.apply(a);
                if !h.leq(h.neg(ta)?, ta) {
                    report.push(Law::G4Gamma, [a]);
                }
                for b in 0..n {
                    let rhs = h.imp(h.imp(a, b), h.imp(h.imp(h.neg(b)?, b), b));
                    if !h.leq(ta, rhs) {
                        report.push(Law::G5Gamma, [a, b]);
                    }
                }
            }
        }
        OperatorKind::Gabbay => {
            zero_of(h)?;
            for a in 0..n {
                let ta = t.apply(a);
                let nna = h.neg(h.neg(a)?)?;
                if !h.leq(ta, nna) {
                    report.push(Law::G4Gabbay, [a]);
                }
                if !h.leq(h.imp(ta, a), h.imp(nna, a)) {
                    report.push(Law::G5Gabbay, [a]);
                }
            }
        }
    }
    Ok(report)
}

/// Pointwise minimum of the defining sets, verified against the laws of `kind`.
pub fn find_operator(h: &FiniteHilbertAlgebra, kind: OperatorKind) -> Result<OperatorSearch> {
    let order = crate::algebra::natural_order(h)?;
    let mut map = Vec::with_capacity(h.len());
    let mut absent = Vec::new();
    for a in h.elements() {
        let s = filter_set(h, kind, a)?;
        let minimal = order.minimal_elements(&s);
        match minimal.to_vec().as_slice() {
            [m] if s.iter().all(|b| h.leq(*m, b)) => map.push(*m),
            _ => absent.push(Absence { element: a, minimal: minimal.to_vec() }),
        }
    }
    if !absent.is_empty() {
        return Ok(OperatorSearch::Absent(absent));
    }
    let t = UnaryMap::new(map, h.len())?;
    let report = check_operator(h, &t, kind)?;
    if !report.passes() {
        return Err(Error::Soundness(format!("pointwise minimum fails the {kind} laws: {report}")));
    }
    if kind == OperatorKind::Gamma {
        // a frontal map is a gamma operator iff ~t(0) = 0 and (g5) holds
        let z = zero_of(h)?;
        if h.neg(t.apply(z))? != z {
            return Err(Error::Soundness("gamma operator with ~t(0) != 0".into()));
        }
    }
    Ok(OperatorSearch::Exists(t))
}

pub fn find_successor(h: &FiniteHilbertAlgebra) -> Result<OperatorSearch> {
    find_operator(h, OperatorKind::Successor)
}

pub fn find_gamma(h: &FiniteHilbertAlgebra) -> Result<OperatorSearch> {
    find_operator(h, OperatorKind::Gamma)
}

pub fn find_gabbay(h: &FiniteHilbertAlgebra) -> Result<OperatorSearch> {
    find_operator(h, OperatorKind::Gabbay)
}

/// Every unary map passing [`check_operator`]; at most one exists.
pub fn operators_by_scan(h: &FiniteHilbertAlgebra, kind: OperatorKind, limit: u128) -> Result<Vec<UnaryMap>> {
    let space = (h.len() as u128).pow(h.len() as u32);
    if space > limit {
        return Err(Error::GuardExceeded { what: "unary map scan", size: space, limit });
    }
    let mut out = Vec::new();
    for t in all_unary_maps(h.len()) {
        if check_operator(h, &t, kind)?.passes() {
            out.push(t);
        }
    }
    Ok(out)
}

/// Verdicts for a given operator, in the order successor, γ, G.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub frontal: Report,
    /// `None` when the operator needs a zero the algebra does not declare.
    pub verdicts: Vec<(OperatorKind, Option<Report>)>,
}

impl Classification {
    pub fn is(&self, kind: OperatorKind) -> bool {
        self.verdicts
            .iter()
            .any(|(k, r)| *k == kind && r.as_ref().is_some_and(Report::passes))
    }
}

pub fn classify(h: &FiniteHilbertAlgebra, t: &UnaryMap) -> Result<Classification> {
    let frontal = check_frontal(h, t, Flavor::Hilbert)?;
    let mut verdicts = Vec::new();
    for kind in OperatorKind::ALL {
        let verdict = if kind.needs_zero() && h.zero().is_none() {
            None
        } else {
            Some(check_operator(h, t, kind)?)
        };
        verdicts.push((kind, verdict));
    }
    Ok(Classification { frontal, verdicts })
}

/// The successor on the upsets of a finite poset, `S(U) = U ∪ (Uᶜ)_M`.
pub fn poset_successor(p: &FinitePoset, u: &Subset) -> Result<Subset> {
    p.coderivative(u)
}

/// `γ^π(U) = U ∪ X(H)_M`.
pub fn gamma_closed(p: &FinitePoset, u: &Subset) -> Subset {
    u.union(&p.maximal_elements(&Subset::full(p.len())))
}

/// `S^π(U) = U ∪ (Uᶜ)_M`.
pub fn s_closed(p: &FinitePoset, u: &Subset) -> Subset {
    u.union(&p.maximal_elements(&u.complement()))
}

/// `G^π(U) = U ∪ (¬¬U ∩ (Uᶜ)_M)`.
pub fn g_closed(p: &FinitePoset, u: &Subset) -> Subset {
    let empty = Subset::empty(p.len());
    let nn = p.implication_unchecked(&p.implication_unchecked(u, &empty), &empty);
    u.union(&nn.intersection(&p.maximal_elements(&u.complement())))
}

/// Closed form of the π-extension of the canonical operator `op`, cross-checked
/// against [`tau_pi`].
pub fn closed_pi(e: &Extension, kind: OperatorKind, op: &UnaryMap, u: &Subset) -> Result<Subset> {
    let report = check_operator(e.source(), op, kind)?;
    if !report.passes() {
        return Err(Error::Classification(report.to_string()));
    }
    require_spectrum_upset(e, u)?;
    let p = e.spectrum().order();
    let closed = match kind {
        OperatorKind::Gamma => gamma_closed(p, u),
        OperatorKind::Successor => s_closed(p, u),
        OperatorKind::Gabbay => g_closed(p, u),
    };
    let f = FrontalAlgebra { base: e.source().clone(), tau: op.clone() };
    if closed != tau_pi(e, &f, u)? {
        return Err(Error::Soundness(format!("closed form of {kind} disagrees with tau_pi on {u:?}")));
    }
    Ok(closed)
}

pub fn gamma_pi(e: &Extension, op: &UnaryMap, u: &Subset) -> Result<Subset> {
    closed_pi(e, OperatorKind::Gamma, op, u)
}

pub fn s_pi(e: &Extension, op: &UnaryMap, u: &Subset) -> Result<Subset> {
    closed_pi(e, OperatorKind::Successor, op, u)
}

pub fn g_pi(e: &Extension, op: &UnaryMap, u: &Subset) -> Result<Subset> {
    closed_pi(e, OperatorKind::Gabbay, op, u)
}
