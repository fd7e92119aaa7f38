//! Implicative filters, irreducible filters and the spectrum poset.

use crate::algebra::FiniteHilbertAlgebra;
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::poset::FinitePoset;
use crate::subset::Subset;

/// `1 ∈ F` and `b ∈ F` whenever `a ∈ F` and `a → b ∈ F`.
pub fn is_filter(h: &FiniteHilbertAlgebra, s: &Subset) -> bool {
    s.universe() == h.len()
        && s.contains(h.one())
        && s.iter().all(|a| h.elements().all(|b| !s.contains(h.imp(a, b)) || s.contains(b)))
}

/// Nonempty, downward closed and up-directed in the natural order.
pub fn is_order_ideal(h: &FiniteHilbertAlgebra, s: &Subset) -> bool {
    if s.universe() != h.len() || s.is_empty() {
        return false;
    }
    let down = s.iter().all(|x| h.elements().all(|y| !h.leq(y, x) || s.contains(y)));
    down && s
        .iter()
        .all(|a| s.iter().all(|b| s.iter().any(|c| h.leq(a, c) && h.leq(b, c))))
}

fn require_filter(h: &FiniteHilbertAlgebra, f: &Subset) -> Result<()> {
    if is_filter(h, f) {
        Ok(())
    } else {
        Err(Error::NotAFilter(f.to_vec()))
    }
}

fn require_universe(h: &FiniteHilbertAlgebra, s: &Subset) -> Result<()> {
    if s.universe() == h.len() {
        Ok(())
    } else {
        Err(Error::CarrierMismatch(format!(
            "subset over {} elements used with an algebra of {}",
            s.universe(),
            h.len()
        )))
    }
}

/// The least filter containing `x`, by modus ponens closure from `x ∪ {1}`.
pub fn generate_filter(h: &FiniteHilbertAlgebra, x: &Subset) -> Result<Subset> {
    require_universe(h, x)?;
    let mut f = x.clone();
    f.insert(h.one());
    loop {
        let mut grown = false;
        for a in f.to_vec() {
            for b in h.elements() {
                if !f.contains(b) && f.contains(h.imp(a, b)) {
                    f.insert(b);
                    grown = true;
                }
            }
        }
        if !grown {
            return Ok(f);
        }
    }
}

/// The explicit description of the generated filter: `b = 1`, or
/// `a₁ → (a₂ → ⋯ (aₖ → b)) = 1` for some `a₁, …, aₖ ∈ x`.
///
/// Repetitions and the order of the `aᵢ` do not matter in a Hilbert algebra,
/// so it suffices to try every subset of `x` in increasing index order.
pub fn filter_by_implication_chains(h: &FiniteHilbertAlgebra, x: &Subset) -> Result<Subset> {
    require_universe(h, x)?;
    let gens = x.to_vec();
    if gens.len() >= 32 {
        return Err(Error::GuardExceeded {
            what: "implication chain scan",
            size: 1u128 << gens.len(),
            limit: 1 << 31,
        });
    }
    let mut out = Subset::singleton(h.len(), h.one());
    for b in h.elements() {
        let hit = (0u64..1 << gens.len()).any(|mask| {
            let chain: Vec<usize> = (0..gens.len()).filter(|&i| mask >> i & 1 == 1).map(|i| gens[i]).collect();
            chain.iter().rev().fold(b, |acc, &a| h.imp(a, acc)) == h.one()
        });
        if hit {
            out.insert(b);
        }
    }
    Ok(out)
}

/// Every filter (including the improper one), sorted by cardinality then bitset value.
pub fn all_filters(h: &FiniteHilbertAlgebra, guards: &Guards) -> Result<Vec<Subset>> {
    let n = h.len();
    if n > guards.filter_scan_bits || n >= 64 {
        return Err(Error::GuardExceeded {
            what: "filter scan",
            size: 1u128 << n.min(127),
            limit: 1u128 << guards.filter_scan_bits.min(127),
        });
    }
    let mut out: Vec<Subset> = (0u64..1 << n)
        .filter(|bits| bits >> h.one() & 1 == 1)
        .map(|bits| Subset::from_bits(n, bits))
        .filter(|s| is_filter(h, s))
        .collect();
    out.sort_by(|a, b| a.cmp_card_value(b));
    Ok(out)
}

fn irreducible_among(f: &Subset, filters: &[Subset]) -> bool {
    if f.is_full() {
        return false;
    }
    let above: Vec<&Subset> = filters.iter().filter(|g| f.is_subset(g) && *g != f).collect();
    !above
        .iter()
        .enumerate()
        .any(|(i, g1)| above[i..].iter().any(|g2| g1.intersection(g2) == *f))
}

/// Proper, and not the intersection of two strictly larger filters.
pub fn is_irreducible(h: &FiniteHilbertAlgebra, f: &Subset, guards: &Guards) -> Result<bool> {
    require_universe(h, f)?;
    require_filter(h, f)?;
    Ok(irreducible_among(f, &all_filters(h, guards)?))
}

/// Irreducibility through common upper bounds: for all `a, b ∉ F` there is
/// `c ∉ F` above both.
pub fn has_common_upper_bounds_outside(h: &FiniteHilbertAlgebra, f: &Subset) -> Result<bool> {
    require_universe(h, f)?;
    require_filter(h, f)?;
    let outside = f.complement();
    if outside.is_empty() {
        return Ok(false);
    }
    let out = outside.to_vec();
    Ok(out
        .iter()
        .all(|&a| out.iter().all(|&b| out.iter().any(|&c| h.leq(a, c) && h.leq(b, c)))))
}

/// The irreducible filters of an algebra ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumPoset {
    source: FiniteHilbertAlgebra,
    filters: Vec<Subset>,
    order: FinitePoset,
}

/// Computes the spectrum; filters are listed in the order of [`all_filters`].
pub fn spectrum(h: &FiniteHilbertAlgebra, guards: &Guards) -> Result<SpectrumPoset> {
    let filters = all_filters(h, guards)?;
    let irreducible: Vec<Subset> = filters
        .iter()
        .filter(|f| irreducible_among(f, &filters))
        .cloned()
        .collect();
    let k = irreducible.len();
    let leq = (0..k * k)
        .map(|i| irreducible[i / k].is_subset(&irreducible[i % k]))
        .collect();
    Ok(SpectrumPoset {
        source: h.clone(),
        filters: irreducible,
        order: FinitePoset::from_flat_unchecked(k, leq),
    })
}

impl SpectrumPoset {
    pub fn source(&self) -> &FiniteHilbertAlgebra {
        &self.source
    }

    pub fn filters(&self) -> &[Subset] {
        &self.filters
    }

    pub fn filter(&self, i: usize) -> &Subset {
        &self.filters[i]
    }

    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    /// Spectrum points whose filter contains `a`.
    pub fn points_containing(&self, a: usize) -> Subset {
        Subset::from_indices(
            self.len(),
            (0..self.len()).filter(|&p| self.filters[p].contains(a)),
        )
    }

    /// Index of the first irreducible filter `P` with `F ⊆ P` and `P ∩ I = ∅`.
    pub fn separate(&self, f: &Subset, ideal: &Subset) -> Result<usize> {
        let h = &self.source;
        require_universe(h, f)?;
        require_universe(h, ideal)?;
        require_filter(h, f)?;
        if !is_order_ideal(h, ideal) {
            return Err(Error::NotAnOrderIdeal(ideal.to_vec()));
        }
        if !f.is_disjoint(ideal) {
            return Err(Error::NotDisjoint(f.intersection(ideal).to_vec()));
        }
        self.filters
            .iter()
            .position(|p| f.is_subset(p) && p.is_disjoint(ideal))
            .ok_or_else(|| Error::Soundness(format!("no irreducible filter separates {f:?} from {ideal:?}")))
    }

    /// Index of the first irreducible filter extending `f` and missing `a`.
    pub fn avoiding(&self, f: &Subset, a: usize) -> Result<usize> {
        let h = &self.source;
        require_universe(h, f)?;
        require_filter(h, f)?;
        if a >= h.len() {
            return Err(Error::Malformed(format!("element {a} out of range")));
        }
        if f.contains(a) {
            return Err(Error::NotDisjoint(vec![a]));
        }
        self.filters
            .iter()
            .position(|p| f.is_subset(p) && !p.contains(a))
            .ok_or_else(|| Error::Soundness(format!("no irreducible filter extends {f:?} avoiding {a}")))
    }
}

/// First irreducible filter `P` with `F ⊆ P` and `P ∩ I = ∅`.
pub fn separate(h: &FiniteHilbertAlgebra, f: &Subset, ideal: &Subset, guards: &Guards) -> Result<Subset> {
    let spec = spectrum(h, guards)?;
    let i = spec.separate(f, ideal)?;
    Ok(spec.filters[i].clone())
}

/// Preimage `h⁻¹[F]` of a subset under an element map.
pub fn preimage(map: &[usize], f: &Subset) -> Subset {
    Subset::from_indices(map.len(), (0..map.len()).filter(|&a| f.contains(map[a])))
}
