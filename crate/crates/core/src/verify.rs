//! The full invariant suite for one algebra (and optional operator).
//!
//! Every check is a runtime recomputation; nothing is assumed from the
//! constructions being verified. Properties over all upsets of the spectrum
//! are exhaustive when the spectrum has at most `guards.filter_scan_bits`
//! points and sampled with a fixed seed otherwise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{check_axioms, AxiomClass, FiniteHilbertAlgebra, UnaryMap};
use crate::error::Result;
use crate::extension::{build_extension, universal_factor, Extension};
use crate::filters::{all_filters, filter_by_implication_chains, generate_filter, has_common_upper_bounds_outside, is_irreducible};
use crate::frontal::{check_frontal, closed_pi, extend_frontal, find_operator, tau_pi, Flavor, FrontalAlgebra, OperatorKind, OperatorSearch};
use crate::guard::Guards;
use crate::hom::{Homomorphism, Signature};
use crate::poset::FinitePoset;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// true when the property was tested on a random sample
    pub sampled: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: &str, failure: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: failure.is_none(),
            sampled: false,
            detail: failure,
        });
    }

    fn record_sampled(&mut self, name: &str, sampled: bool, failure: Option<String>) {
        self.record(name, failure);
        self.checks.last_mut().unwrap().sampled = sampled;
    }
}

/// Upsets of `p`: all of them when `p` is small enough, else a seeded sample
/// of up-closures of random subsets. The flag reports sampling.
pub fn upsets_for_checks(p: &FinitePoset, guards: &Guards) -> Result<(Vec<Subset>, bool)> {
    if p.len() <= guards.filter_scan_bits {
        return Ok((p.all_upsets(guards.filter_scan_bits)?, false));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(guards.seed);
    let sample = (0..guards.samples)
        .map(|_| {
            let s = Subset::from_indices(p.len(), (0..p.len()).filter(|_| rng.random_bool(0.5)));
            p.up_closure(&s)
        })
        .collect();
    Ok((sample, true))
}

fn first_failure<T, F>(items: impl IntoIterator<Item = T>, mut bad: F) -> Option<String>
where
    F: FnMut(&T) -> Option<String>,
{
    items.into_iter().find_map(|x| bad(&x))
}

/// Runs every applicable invariant. Hard errors (malformed input, guards)
/// propagate; failed properties are recorded in the report.
pub fn verify(h: &FiniteHilbertAlgebra, tau: Option<&UnaryMap>, guards: &Guards) -> Result<VerifyReport> {
    let mut out = VerifyReport::default();
    let class = AxiomClass::declared_by(h);
    let axioms = check_axioms(h, class)?;
    out.record(
        &format!("axioms ({class})"),
        (!axioms.passes()).then(|| axioms.to_string()),
    );
    if !axioms.passes() {
        return Ok(out);
    }
    let n = h.len();

    // filters
    let small: Vec<Subset> = (0..n)
        .flat_map(|a| (a..n).map(move |b| Subset::from_indices(n, [a, b])))
        .collect();
    let mut failure = None;
    for x in &small {
        if generate_filter(h, x)? != filter_by_implication_chains(h, x)? {
            failure = Some(format!("generated filter of {x:?}"));
            break;
        }
    }
    out.record("filter generation", failure);

    let filters = all_filters(h, guards)?;
    let mut failure = None;
    for f in filters.iter().filter(|f| !f.is_full()) {
        if is_irreducible(h, f, guards)? != has_common_upper_bounds_outside(h, f)? {
            failure = Some(format!("filter {f:?}"));
            break;
        }
    }
    out.record("irreducibility criterion", failure);

    let e = build_extension(h, guards)?;
    let spec = e.spectrum();
    let mut failure = None;
    'sep: for f in &filters {
        for a in h.elements().filter(|&a| !f.contains(a)) {
            if spec.avoiding(f, a).is_err() {
                failure = Some(format!("filter {f:?} and element {a}"));
                break 'sep;
            }
        }
    }
    out.record("prime separation", failure);

    // the embedding
    let order = spec.order();
    out.record(
        "phi embedding",
        first_failure(0..n * n, |&i| {
            let (a, b) = (i / n, i % n);
            let lhs = e.phi(h.imp(a, b));
            let rhs = order.up_implication(e.phi(a), e.phi(b)).ok()?;
            let pointwise = order.up_implication_pointwise(e.phi(a), e.phi(b)).ok()?;
            (lhs != &rhs || rhs != pointwise).then(|| format!("phi({a}->{b})"))
        })
        .or_else(|| (!e.phi(h.one()).is_full()).then(|| "phi(1) is not the whole spectrum".into())),
    );
    out.record(
        "iterated residuation",
        first_failure(0..e.len(), |&u| {
            let gens = e.gens(u);
            h.elements().find_map(|b| {
                let nested = gens.iter().rev().fold(b, |acc, &a| h.imp(a, acc));
                let lhs = order.implication_unchecked(e.element(u), e.phi(b));
                (lhs != *e.phi(nested)).then(|| format!("element {u}, b = {b}"))
            })
        }),
    );
    let ext_class = if h.zero().is_some() { AxiomClass::BoundedIs } else { AxiomClass::Is };
    let ext_axioms = check_axioms(e.algebra(), ext_class)?;
    out.record(
        "extension axioms",
        (!ext_axioms.passes()).then(|| ext_axioms.to_string()),
    );
    if h.has_meet() {
        let id = Homomorphism::identity(h, Signature::HILBERT);
        let failure = match universal_factor(&e, h, &id) {
            Ok(f) => {
                let mut image = f.map.clone();
                image.sort_unstable();
                image.dedup();
                (e.len() != n || image.len() != n).then(|| format!("|L(H)| = {}", e.len()))
            }
            Err(err) => Some(err.to_string()),
        };
        out.record("semilattice is its own extension", failure);
    }

    if let Some(t) = tau {
        verify_operator(&mut out, &e, t, guards)?;
    }

    // canonical operators
    for kind in OperatorKind::ALL {
        if kind.needs_zero() && h.zero().is_none() {
            continue;
        }
        if let OperatorSearch::Exists(op) = find_operator(h, kind)? {
            let f = FrontalAlgebra::new(h.clone(), op.clone())?;
            let failure = first_failure(e.elements(), |u| closed_pi(&e, kind, &op, u).err().map(|x| x.to_string()))
                .or_else(|| {
                    first_failure(h.elements(), |&a| {
                        (tau_pi(&e, &f, e.phi(a)).ok()? != *e.phi(op.apply(a)))
                            .then(|| format!("phi({kind}({a}))"))
                    })
                });
            out.record(&format!("closed form of {kind}"), failure);
        }
    }

    // set identities on the spectrum
    let mut failure = None;
    'outer: for i in 0..e.len() {
        for j in i..e.len() {
            let (u, v) = (e.element(i), e.element(j));
            let lhs = order.coderivative(u)?.intersection(&order.coderivative(v)?);
            let rhs = u
                .intersection(v)
                .union(&order.maximal_elements(&u.complement().union(&v.complement())));
            if lhs != rhs {
                failure = Some(format!("elements {i} and {j}"));
                break 'outer;
            }
        }
    }
    out.record("successor of intersections", failure);
    out.record(
        "complements generated by maximal points",
        first_failure(0..e.len(), |&i| {
            let d = e.element(i).complement();
            (order.down_closure(&order.maximal_elements(&d)) != d).then(|| format!("element {i}"))
        }),
    );
    Ok(out)
}

fn verify_operator(out: &mut VerifyReport, e: &Extension, t: &UnaryMap, guards: &Guards) -> Result<()> {
    let h = e.source();
    let frontal = check_frontal(h, t, Flavor::Hilbert)?;
    out.record("frontal axioms", (!frontal.passes()).then(|| frontal.to_string()));
    if !frontal.passes() {
        return Ok(());
    }
    let f = FrontalAlgebra::new(h.clone(), t.clone())?;
    let spec = e.spectrum();
    let order = spec.order();

    out.record(
        "tau_pi on phi images",
        first_failure(h.elements(), |&a| {
            (tau_pi(e, &f, e.phi(a)).ok()? != *e.phi(t.apply(a))).then(|| format!("a = {a}"))
        }),
    );
    out.record(
        "irreducible filters under tau",
        first_failure(0..spec.len(), |&p| {
            let filter = spec.filter(p);
            h.elements().find_map(|a| {
                h.elements().find_map(|b| {
                    (filter.contains(t.apply(a)) && !filter.contains(b) && !filter.contains(h.imp(b, a)))
                        .then(|| format!("point {p}, a = {a}, b = {b}"))
                })
            })
        }),
    );
    out.record(
        "extended operator",
        extend_frontal(e, &f).err().map(|x| x.to_string()),
    );

    let lh: Vec<Subset> = e.elements().to_vec();
    out.record("tau_pi frontal on L(H)", pp_failure(order, e, &f, &lh)?);
    let (upsets, sampled) = upsets_for_checks(order, guards)?;
    out.record_sampled("tau_pi frontal on all upsets", sampled, pp_failure(order, e, &f, &upsets)?);
    Ok(())
}

// meet preservation, inflation and the (f3)-form on a family of upsets
fn pp_failure(order: &FinitePoset, e: &Extension, f: &FrontalAlgebra, family: &[Subset]) -> Result<Option<String>> {
    let images: Vec<Subset> = family.iter().map(|u| tau_pi(e, f, u)).collect::<Result<_>>()?;
    for (i, u) in family.iter().enumerate() {
        if !u.is_subset(&images[i]) {
            return Ok(Some(format!("U not below tau_pi(U) for {u:?}")));
        }
        for (j, v) in family.iter().enumerate() {
            let meet = tau_pi(e, f, &u.intersection(v))?;
            if meet != images[i].intersection(&images[j]) {
                return Ok(Some(format!("meet not preserved at {u:?}, {v:?}")));
            }
            if !images[i].is_subset(&v.union(&order.implication_unchecked(v, u))) {
                return Ok(Some(format!("tau_pi({u:?}) not below V or V=>U for V = {v:?}")));
            }
        }
    }
    Ok(None)
}
