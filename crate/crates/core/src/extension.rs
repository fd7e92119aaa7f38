//! The free implicative semilattice extension `L(H)` of a Hilbert algebra.
//!
//! `H` embeds into the upsets of its spectrum `X(H)` by
//! `φ(a) = {P ∈ X(H) : a ∈ P}`. `L(H)` is the family of finite intersections
//! of φ-images, with intersection as meet, the upset implication as `→` and
//! `X(H)` as top. Elements are stored as canonical bitsets over the spectrum,
//! so two generator lists denote the same element exactly when their
//! intersections are equal as sets.

use std::collections::{HashMap, HashSet};

use crate::algebra::{check_axioms, natural_order, AxiomClass, FiniteHilbertAlgebra};
use crate::error::{Error, Result};
use crate::filters::{spectrum, SpectrumPoset};
use crate::guard::Guards;
use crate::hom::{homomorphism_defect, Homomorphism, Signature};
use crate::poset::FinitePoset;
use crate::subset::Subset;

#[derive(Debug, Clone)]
pub struct Extension {
    source: FiniteHilbertAlgebra,
    spectrum: SpectrumPoset,
    phi: Vec<Subset>,
    elements: Vec<Subset>,
    index: HashMap<Subset, usize>,
    gens: Vec<Vec<usize>>,
    algebra: FiniteHilbertAlgebra,
}

/// `φ(a)`: the spectrum points whose filter contains `a`.
pub fn phi(spec: &SpectrumPoset, a: usize) -> Result<Subset> {
    if a >= spec.source().len() {
        return Err(Error::Malformed(format!("element {a} out of range")));
    }
    Ok(spec.points_containing(a))
}

/// Upset implication `(U ∩ Vᶜ]ᶜ` over a poset.
pub fn up_implication(p: &FinitePoset, u: &Subset, v: &Subset) -> Result<Subset> {
    p.up_implication(u, v)
}

/// Index combinations of size `k` from `0..n`, in lexicographic order.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = if k <= n { Some((0..k).collect::<Vec<_>>()) } else { None };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut c = current.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                next = Some(c);
                break;
            }
        }
        Some(current)
    })
}

/// Builds `L(H)` together with its bookkeeping.
///
/// Elements are numbered by their minimal generator sets, shortest first and
/// lexicographically within a length, so element `a < |H|` is `φ(a)`.
pub fn build_extension(h: &FiniteHilbertAlgebra, guards: &Guards) -> Result<Extension> {
    natural_order(h)?;
    let spec = spectrum(h, guards)?;
    let n = h.len();
    let phi: Vec<Subset> = h.elements().map(|a| spec.points_containing(a)).collect();
    if phi.iter().collect::<HashSet<_>>().len() != n {
        return Err(Error::Soundness("phi is not injective".into()));
    }

    // closure of the phi-images under binary intersection
    let mut closure: HashSet<Subset> = phi.iter().cloned().collect();
    let mut frontier: Vec<Subset> = phi.clone();
    while let Some(u) = frontier.pop() {
        for v in phi.iter() {
            let w = u.intersection(v);
            if !closure.contains(&w) {
                if closure.len() >= guards.closure_elements {
                    return Err(Error::GuardExceeded {
                        what: "extension closure",
                        size: closure.len() as u128 + 1,
                        limit: guards.closure_elements as u128,
                    });
                }
                closure.insert(w.clone());
                frontier.push(w);
            }
        }
    }

    // minimal generator sets, shortest then lexicographic
    let mut elements = Vec::with_capacity(closure.len());
    let mut gens = Vec::with_capacity(closure.len());
    let mut index = HashMap::with_capacity(closure.len());
    'sizes: for k in 1..=n {
        for combo in combinations(n, k) {
            let u = combo
                .iter()
                .skip(1)
                .fold(phi[combo[0]].clone(), |acc, &a| acc.intersection(&phi[a]));
            if !index.contains_key(&u) {
                index.insert(u.clone(), elements.len());
                elements.push(u);
                gens.push(combo);
                if elements.len() == closure.len() {
                    break 'sizes;
                }
            }
        }
    }
    if elements.len() != closure.len() || elements.iter().any(|e| !closure.contains(e)) {
        return Err(Error::Soundness("generator search and intersection closure disagree".into()));
    }

    let order = spec.order();
    let m = elements.len();
    let mut imp = vec![vec![0; m]; m];
    let mut meet = vec![vec![0; m]; m];
    for i in 0..m {
        for j in 0..m {
            let w = order.implication_unchecked(&elements[i], &elements[j]);
            imp[i][j] = *index.get(&w).ok_or_else(|| {
                Error::Soundness(format!("implication of elements {i} and {j} leaves L(H)"))
            })?;
            meet[i][j] = index[&elements[i].intersection(&elements[j])];
        }
    }
    let labels = gens
        .iter()
        .map(|g| g.iter().map(|&a| h.label(a)).collect::<Vec<_>>().join("^"))
        .collect();
    let mut algebra = FiniteHilbertAlgebra::new(imp, h.one())?
        .with_meet(meet)?
        .with_labels(labels)?;
    let mut class = AxiomClass::Is;
    if let Some(z) = h.zero() {
        if !elements[z].is_empty() {
            return Err(Error::Soundness("phi(0) is not empty".into()));
        }
        algebra = algebra.with_zero(z)?;
        class = AxiomClass::BoundedIs;
    }
    let report = check_axioms(&algebra, class)?;
    if !report.passes() {
        return Err(Error::Soundness(format!("L(H) fails {class}: {report}")));
    }

    Ok(Extension {
        source: h.clone(),
        spectrum: spec,
        phi,
        elements,
        index,
        gens,
        algebra,
    })
}

impl Extension {
    pub fn source(&self) -> &FiniteHilbertAlgebra {
        &self.source
    }

    pub fn spectrum(&self) -> &SpectrumPoset {
        &self.spectrum
    }

    /// `L(H)` as a finite algebra with meet (and zero when `H` is bounded).
    pub fn algebra(&self) -> &FiniteHilbertAlgebra {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn phi(&self, a: usize) -> &Subset {
        &self.phi[a]
    }

    /// Index of `φ(a)` among the elements.
    pub fn phi_index(&self, a: usize) -> usize {
        self.index[&self.phi[a]]
    }

    pub fn elements(&self) -> &[Subset] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Subset {
        &self.elements[i]
    }

    pub fn gens(&self, i: usize) -> &[usize] {
        &self.gens[i]
    }

    pub fn index_of(&self, u: &Subset) -> Option<usize> {
        self.index.get(u).copied()
    }

    pub fn top(&self) -> usize {
        self.algebra.one()
    }

    /// `φ(a₁) ∩ ⋯ ∩ φ(aₖ)`; the whole spectrum for an empty list.
    pub fn intersect_phi(&self, gens: &[usize]) -> Subset {
        gens.iter()
            .fold(Subset::full(self.spectrum.len()), |acc, &a| acc.intersection(&self.phi[a]))
    }

    /// Every `a` with `U ⊆ φ(a)`. Its φ-intersection is `U` again for any `U ∈ L(H)`.
    pub fn all_gens(&self, i: usize) -> Vec<usize> {
        let u = &self.elements[i];
        self.source.elements().filter(|&a| u.is_subset(&self.phi[a])).collect()
    }
}

pub(crate) fn same_algebra(a: &FiniteHilbertAlgebra, b: &FiniteHilbertAlgebra) -> bool {
    a.len() == b.len() && a.one() == b.one() && a.imp_flat() == b.imp_flat()
}

/// The unique `{∧,→,1}`-homomorphism `ĥ: L(H₁) → L(H₂)` with `ĥ ∘ φ₁ = φ₂ ∘ h`.
pub fn lift_hom<'e>(h: &Homomorphism<'_>, e1: &'e Extension, e2: &'e Extension) -> Result<Homomorphism<'e>> {
    if !same_algebra(h.source, &e1.source) || !same_algebra(h.target, &e2.source) {
        return Err(Error::CarrierMismatch("extensions do not match the map's algebras".into()));
    }
    let plain = Homomorphism::new(h.source, h.target, h.map.clone(), Signature::HILBERT);
    if let Some(defect) = homomorphism_defect(&plain)? {
        return Err(Error::NotHomomorphism(defect));
    }
    let image = |gens: &[usize]| -> Result<usize> {
        let mapped: Vec<usize> = gens.iter().map(|&a| h.map[a]).collect();
        e2.index_of(&e2.intersect_phi(&mapped))
            .ok_or_else(|| Error::Soundness("lifted element leaves L(H2)".into()))
    };
    let mut map = Vec::with_capacity(e1.len());
    for i in 0..e1.len() {
        let v = image(e1.gens(i))?;
        if image(&e1.all_gens(i))? != v {
            return Err(Error::Soundness(format!("lift of element {i} depends on its generators")));
        }
        map.push(v);
    }
    let mut signature = Signature::IS;
    if h.signature.zero && e1.algebra.zero().is_some() && e2.algebra.zero().is_some() {
        signature = signature.with_zero();
    }
    let lifted = Homomorphism::new(&e1.algebra, &e2.algebra, map, signature);
    if let Some(defect) = homomorphism_defect(&lifted)? {
        return Err(Error::Soundness(format!("lifted map is not a homomorphism: {defect}")));
    }
    Ok(lifted)
}

/// The unique `{∧,→,1}`-homomorphism `h̄: L(H) → A` with `h̄ ∘ φ = h`,
/// computed as `h̄(φ(a₁) ∩ ⋯ ∩ φ(aₖ)) = h(a₁) ∧ ⋯ ∧ h(aₖ)`.
pub fn universal_factor<'e>(
    e: &'e Extension,
    target: &'e FiniteHilbertAlgebra,
    h: &Homomorphism<'_>,
) -> Result<Homomorphism<'e>> {
    let report = check_axioms(target, AxiomClass::Is)?;
    if !report.passes() {
        return Err(Error::MissingStructure(format!("target is not an implicative semilattice: {report}")));
    }
    if !same_algebra(h.source, &e.source) || !same_algebra(h.target, target) {
        return Err(Error::CarrierMismatch("map does not run from H into the target".into()));
    }
    let plain = Homomorphism::new(h.source, h.target, h.map.clone(), Signature::HILBERT);
    if let Some(defect) = homomorphism_defect(&plain)? {
        return Err(Error::NotHomomorphism(defect));
    }
    let meet_of = |gens: &[usize]| {
        gens.iter()
            .map(|&a| h.map[a])
            .reduce(|x, y| target.meet(x, y).unwrap())
            .unwrap_or(target.one())
    };
    let map: Vec<usize> = (0..e.len()).map(|i| meet_of(e.gens(i))).collect();
    let factor = Homomorphism::new(&e.algebra, target, map, Signature::IS);
    if let Some(defect) = homomorphism_defect(&factor)? {
        return Err(Error::Soundness(format!("factor is not a homomorphism: {defect}")));
    }
    if e.source.elements().any(|a| factor.map[e.phi_index(a)] != h.map[a]) {
        return Err(Error::Soundness("factor does not commute with phi".into()));
    }
    Ok(factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::{check_homomorphism, enumerate_homomorphisms};

    fn vee() -> FiniteHilbertAlgebra {
        FiniteHilbertAlgebra::new(vec![vec![2, 1, 2], vec![0, 2, 2], vec![0, 1, 2]], 2)
            .unwrap()
            .with_labels(vec!["x".into(), "y".into(), "1".into()])
            .unwrap()
    }

    fn min_meet(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect()
    }

    #[test]
    fn combinations_in_order() {
        let c: Vec<_> = combinations(4, 2).collect();
        assert_eq!(c, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(3, 3).count(), 1);
        assert_eq!(combinations(2, 3).count(), 0);
    }

    #[test]
    fn phi_values() {
        let g = Guards::default();
        let v = vee();
        let spec = spectrum(&v, &g).unwrap();
        assert_eq!(phi(&spec, 2).unwrap(), Subset::full(2));
        assert_eq!(phi(&spec, 0).unwrap(), Subset::from_indices(2, [0]));
        let h3 = FiniteHilbertAlgebra::godel_chain(3).with_zero(0).unwrap();
        let spec3 = spectrum(&h3, &g).unwrap();
        assert!(phi(&spec3, 0).unwrap().is_empty());
        assert!(phi(&spec3, 3).is_err());
    }

    #[test]
    fn vee_gains_a_bottom() {
        let e = build_extension(&vee(), &Guards::default()).unwrap();
        assert_eq!(e.len(), 4);
        assert!(e.element(3).is_empty());
        assert_eq!(e.gens(3), &[0, 1]);
        assert_eq!(e.algebra().label(3), "x^y");
        assert_eq!(e.top(), 2);
    }

    #[test]
    fn is_extends_to_itself() {
        let h3 = FiniteHilbertAlgebra::godel_chain(3).with_meet(min_meet(3)).unwrap();
        let e = build_extension(&h3, &Guards::default()).unwrap();
        assert_eq!(e.len(), 3);
        let id = Homomorphism::identity(&h3, Signature::HILBERT);
        let f = universal_factor(&e, &h3, &id).unwrap();
        assert_eq!(f.map, vec![0, 1, 2]);
    }

    #[test]
    fn trivial_algebra() {
        let t = FiniteHilbertAlgebra::new(vec![vec![0]], 0).unwrap();
        let e = build_extension(&t, &Guards::default()).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.spectrum().len(), 0);
    }

    #[test]
    fn identity_lifts_to_identity() {
        let v = vee();
        let e = build_extension(&v, &Guards::default()).unwrap();
        let id = Homomorphism::identity(&v, Signature::HILBERT);
        let lifted = lift_hom(&id, &e, &e).unwrap();
        assert_eq!(lifted.map, (0..4).collect::<Vec<_>>());
    }

    #[test]
    fn collapsing_vee_onto_top() {
        let (v, h2) = (vee(), FiniteHilbertAlgebra::chain2());
        let g = Guards::default();
        let h = Homomorphism::new(&v, &h2, vec![1, 1, 1], Signature::HILBERT);
        assert!(check_homomorphism(&h).unwrap());
        let (e1, e2) = (build_extension(&v, &g).unwrap(), build_extension(&h2, &g).unwrap());
        let lifted = lift_hom(&h, &e1, &e2).unwrap();
        // every element, including the new bottom x^y, goes to the top of L(H2)
        let top = e2.index_of(&Subset::full(e2.spectrum().len())).unwrap();
        assert_eq!(lifted.map, vec![top; 4]);
    }

    #[test]
    fn factor_into_boolean_square() {
        // A = {0, x, y, 1} with x, y atoms; H = {x, y, 1} sits inside it
        let a = FiniteHilbertAlgebra::boolean(2);
        let a = a.with_natural_meet().unwrap();
        let v = vee();
        let g = Guards::default();
        let incl = Homomorphism::new(&v, &a, vec![1, 2, 3], Signature::HILBERT);
        assert!(check_homomorphism(&incl).unwrap());
        let e = build_extension(&v, &g).unwrap();
        let f = universal_factor(&e, &a, &incl).unwrap();
        assert_eq!(f.map, vec![1, 2, 3, 0]);
        let all = enumerate_homomorphisms(e.algebra(), &a, Signature::IS, &g).unwrap();
        let commuting: Vec<_> = all
            .iter()
            .filter(|k| v.elements().all(|x| k.map[e.phi_index(x)] == incl.map[x]))
            .collect();
        assert_eq!(commuting.len(), 1);
        assert_eq!(commuting[0].map, f.map);
    }

    #[test]
    fn non_homomorphism_is_rejected() {
        let (v, h2) = (vee(), FiniteHilbertAlgebra::chain2());
        let g = Guards::default();
        let h = Homomorphism::new(&v, &h2, vec![0, 0, 1], Signature::HILBERT);
        let (e1, e2) = (build_extension(&v, &g).unwrap(), build_extension(&h2, &g).unwrap());
        assert!(matches!(lift_hom(&h, &e1, &e2), Err(Error::NotHomomorphism(_))));
    }
}
