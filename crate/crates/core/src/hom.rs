//! Homomorphisms between finite algebras: checking, composing, enumerating.

use std::fmt;

use crate::algebra::{FiniteHilbertAlgebra, UnaryMap};
use crate::error::{Error, Result};
use crate::guard::Guards;

/// Which operations a map has to preserve. `→` and `1` are always included.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub meet: bool,
    pub zero: bool,
    pub unary: bool,
}

impl Signature {
    /// `{→, 1}`
    pub const HILBERT: Signature = Signature {
        meet: false,
        zero: false,
        unary: false,
    };
    /// `{∧, →, 1}`
    pub const IS: Signature = Signature {
        meet: true,
        zero: false,
        unary: false,
    };

    pub const fn with_zero(self) -> Signature {
        Signature { zero: true, ..self }
    }

    pub const fn with_unary(self) -> Signature {
        Signature { unary: true, ..self }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut ops = vec![];
        if self.meet {
            ops.push("^");
        }
        ops.push("->");
        if self.zero {
            ops.push("0");
        }
        ops.push("1");
        if self.unary {
            ops.push("t");
        }
        write!(f, "{{{}}}", ops.join(","))
    }
}

/// A map between two algebras together with the signature it claims to preserve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism<'a> {
    pub source: &'a FiniteHilbertAlgebra,
    pub target: &'a FiniteHilbertAlgebra,
    /// Unary operators on source and target, used when `signature.unary` is set.
    pub source_op: Option<&'a UnaryMap>,
    pub target_op: Option<&'a UnaryMap>,
    pub map: Vec<usize>,
    pub signature: Signature,
}

impl<'a> Homomorphism<'a> {
    pub fn new(
        source: &'a FiniteHilbertAlgebra,
        target: &'a FiniteHilbertAlgebra,
        map: Vec<usize>,
        signature: Signature,
    ) -> Self {
        Homomorphism {
            source,
            target,
            source_op: None,
            target_op: None,
            map,
            signature,
        }
    }

    /// Attaches the unary operators and adds them to the signature.
    pub fn with_ops(mut self, source_op: &'a UnaryMap, target_op: &'a UnaryMap) -> Self {
        self.source_op = Some(source_op);
        self.target_op = Some(target_op);
        self.signature = self.signature.with_unary();
        self
    }

    pub fn identity(alg: &'a FiniteHilbertAlgebra, signature: Signature) -> Self {
        Homomorphism::new(alg, alg, alg.elements().collect(), signature)
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `next ∘ self`. The signature is the common part of both.
    pub fn then(&self, next: &Homomorphism<'a>) -> Result<Homomorphism<'a>> {
        if next.source != self.target {
            return Err(Error::CarrierMismatch("composed maps do not meet".into()));
        }
        let signature = Signature {
            meet: self.signature.meet && next.signature.meet,
            zero: self.signature.zero && next.signature.zero,
            unary: self.signature.unary && next.signature.unary,
        };
        Ok(Homomorphism {
            source: self.source,
            target: next.target,
            source_op: self.source_op,
            target_op: next.target_op,
            map: self.map.iter().map(|&a| next.map[a]).collect(),
            signature,
        })
    }
}

struct Ops<'a> {
    source: &'a FiniteHilbertAlgebra,
    target: &'a FiniteHilbertAlgebra,
    source_op: Option<&'a UnaryMap>,
    target_op: Option<&'a UnaryMap>,
    signature: Signature,
}

impl Ops<'_> {
    fn validate(&self) -> Result<()> {
        let sig = self.signature;
        if sig.meet && !(self.source.has_meet() && self.target.has_meet()) {
            return Err(Error::MissingStructure("signature has meet but an algebra lacks it".into()));
        }
        if sig.zero && (self.source.zero().is_none() || self.target.zero().is_none()) {
            return Err(Error::MissingStructure("signature has 0 but an algebra is unbounded".into()));
        }
        if sig.unary {
            match (self.source_op, self.target_op) {
                (Some(s), Some(t)) if s.len() == self.source.len() && t.len() == self.target.len() => {}
                (Some(_), Some(_)) => {
                    return Err(Error::CarrierMismatch("unary operator size differs from carrier".into()))
                }
                _ => {
                    return Err(Error::MissingStructure(
                        "signature has a unary operator but none was supplied".into(),
                    ))
                }
            }
        }
        Ok(())
    }

    /// First failing operation, checking only the constraints whose arguments and
    /// results are all below `limit` and that mention `newest`.
    fn violation(&self, map: &[usize], limit: usize, newest: usize) -> Option<String> {
        let (s, t) = (self.source, self.target);
        if s.one() < limit && s.one() == newest && map[s.one()] != t.one() {
            return Some("1 is not preserved".into());
        }
        if self.signature.zero {
            let z = s.zero().unwrap();
            if z == newest && map[z] != t.zero().unwrap() {
                return Some("0 is not preserved".into());
            }
        }
        for a in 0..limit {
            for b in 0..limit {
                let ab = s.imp(a, b);
                if ab < limit
                    && (a == newest || b == newest || ab == newest)
                    && map[ab] != t.imp(map[a], map[b])
                {
                    return Some(format!("-> fails at ({a}, {b})"));
                }
                if self.signature.meet {
                    let m = s.meet(a, b).unwrap();
                    if m < limit
                        && (a == newest || b == newest || m == newest)
                        && map[m] != t.meet(map[a], map[b]).unwrap()
                    {
                        return Some(format!("^ fails at ({a}, {b})"));
                    }
                }
            }
            if self.signature.unary {
                let (so, to) = (self.source_op.unwrap(), self.target_op.unwrap());
                let ta = so.apply(a);
                if ta < limit && (a == newest || ta == newest) && map[ta] != to.apply(map[a]) {
                    return Some(format!("unary operator fails at {a}"));
                }
            }
        }
        None
    }

    fn full_violation(&self, map: &[usize]) -> Option<String> {
        let n = map.len();
        (0..n).find_map(|i| self.violation(map, n, i))
    }
}

fn ops_of<'a>(h: &Homomorphism<'a>) -> Ops<'a> {
    Ops {
        source: h.source,
        target: h.target,
        source_op: h.source_op,
        target_op: h.target_op,
        signature: h.signature,
    }
}

/// First operation `h` fails to preserve, or `None` when it is a homomorphism.
pub fn homomorphism_defect(h: &Homomorphism<'_>) -> Result<Option<String>> {
    if h.map.len() != h.source.len() {
        return Err(Error::Malformed(format!(
            "map has {} entries for a source of size {}",
            h.map.len(),
            h.source.len()
        )));
    }
    if let Some(&v) = h.map.iter().find(|&&v| v >= h.target.len()) {
        return Err(Error::Malformed(format!("map value {v} outside target")));
    }
    let ops = ops_of(h);
    ops.validate()?;
    Ok(ops.full_violation(&h.map))
}

/// True iff every operation in the signature is preserved pointwise.
pub fn check_homomorphism(h: &Homomorphism<'_>) -> Result<bool> {
    Ok(homomorphism_defect(h)?.is_none())
}

/// All homomorphisms `source → target` for the signature, in lexicographic order of their maps.
pub fn enumerate_homomorphisms<'a>(
    source: &'a FiniteHilbertAlgebra,
    target: &'a FiniteHilbertAlgebra,
    signature: Signature,
    guards: &Guards,
) -> Result<Vec<Homomorphism<'a>>> {
    enumerate_with_ops(source, target, None, None, signature, guards)
}

/// As [`enumerate_homomorphisms`], additionally preserving `source_op ↦ target_op`.
pub fn enumerate_homomorphisms_with_ops<'a>(
    source: &'a FiniteHilbertAlgebra,
    target: &'a FiniteHilbertAlgebra,
    source_op: &'a UnaryMap,
    target_op: &'a UnaryMap,
    signature: Signature,
    guards: &Guards,
) -> Result<Vec<Homomorphism<'a>>> {
    enumerate_with_ops(
        source,
        target,
        Some(source_op),
        Some(target_op),
        signature.with_unary(),
        guards,
    )
}

fn enumerate_with_ops<'a>(
    source: &'a FiniteHilbertAlgebra,
    target: &'a FiniteHilbertAlgebra,
    source_op: Option<&'a UnaryMap>,
    target_op: Option<&'a UnaryMap>,
    signature: Signature,
    guards: &Guards,
) -> Result<Vec<Homomorphism<'a>>> {
    let space = (target.len() as u128).checked_pow(source.len() as u32).unwrap_or(u128::MAX);
    if space > guards.hom_space {
        return Err(Error::GuardExceeded {
            what: "homomorphism enumeration",
            size: space,
            limit: guards.hom_space,
        });
    }
    let ops = Ops {
        source,
        target,
        source_op,
        target_op,
        signature,
    };
    ops.validate()?;

    let n = source.len();
    let mut found = Vec::new();
    let mut map = vec![0usize; n];
    // depth-first over positions 0..n; values tried in increasing order keep the output lexicographic
    fn go(ops: &Ops<'_>, map: &mut Vec<usize>, pos: usize, found: &mut Vec<Vec<usize>>) {
        if pos == map.len() {
            found.push(map.clone());
            return;
        }
        for v in 0..ops.target.len() {
            map[pos] = v;
            if ops.violation(map, pos + 1, pos).is_none() {
                go(ops, map, pos + 1, found);
            }
        }
    }
    go(&ops, &mut map, 0, &mut found);
    Ok(found
        .into_iter()
        .map(|map| Homomorphism {
            source,
            target,
            source_op,
            target_op,
            map,
            signature,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|p: Vec<usize>| (0..m).map(move |v| [p.clone(), vec![v]].concat()))
                .collect();
        }
        out
    }

    // pointwise check of all pairs, written independently of the backtracking
    fn brute(s: &FiniteHilbertAlgebra, t: &FiniteHilbertAlgebra) -> Vec<Vec<usize>> {
        all_maps(s.len(), t.len())
            .into_iter()
            .filter(|f| {
                f[s.one()] == t.one()
                    && s.elements().all(|a| s.elements().all(|b| f[s.imp(a, b)] == t.imp(f[a], f[b])))
            })
            .collect()
    }

    #[test]
    fn identity_and_constant() {
        let h3 = FiniteHilbertAlgebra::godel_chain(3);
        assert!(check_homomorphism(&Homomorphism::identity(&h3, Signature::HILBERT)).unwrap());
        let constant = Homomorphism::new(&h3, &h3, vec![2, 2, 2], Signature::HILBERT);
        assert!(check_homomorphism(&constant).unwrap());
    }

    #[test]
    fn h3_to_h2_collapsing_middle() {
        let (h3, h2) = (FiniteHilbertAlgebra::godel_chain(3), FiniteHilbertAlgebra::chain2());
        let h = Homomorphism::new(&h3, &h2, vec![0, 1, 1], Signature::HILBERT);
        // oracle: brute-force pointwise scan over all 8 maps
        let expected = brute(&h3, &h2).contains(&vec![0, 1, 1]);
        assert_eq!(check_homomorphism(&h).unwrap(), expected);
        assert!(expected);
    }

    #[test]
    fn h2_endomorphisms() {
        let h2 = FiniteHilbertAlgebra::chain2();
        let homs = enumerate_homomorphisms(&h2, &h2, Signature::HILBERT, &Guards::default()).unwrap();
        let maps: Vec<_> = homs.iter().map(|h| h.map.clone()).collect();
        assert_eq!(maps, vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(maps, brute(&h2, &h2));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let algebras = [
            FiniteHilbertAlgebra::chain2(),
            FiniteHilbertAlgebra::godel_chain(3),
            FiniteHilbertAlgebra::godel_chain(4),
            FiniteHilbertAlgebra::boolean(2),
            FiniteHilbertAlgebra::new(vec![vec![2, 1, 2], vec![0, 2, 2], vec![0, 1, 2]], 2).unwrap(),
        ];
        for s in &algebras {
            for t in &algebras {
                let maps: Vec<_> = enumerate_homomorphisms(s, t, Signature::HILBERT, &Guards::default())
                    .unwrap()
                    .into_iter()
                    .map(|h| h.map)
                    .collect();
                assert_eq!(maps, brute(s, t));
            }
        }
    }

    #[test]
    fn trivial_source_has_one_hom() {
        let triv = FiniteHilbertAlgebra::new(vec![vec![0]], 0).unwrap();
        let h3 = FiniteHilbertAlgebra::godel_chain(3);
        let homs = enumerate_homomorphisms(&triv, &h3, Signature::HILBERT, &Guards::default()).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].map, vec![2]);
    }

    #[test]
    fn composition_of_homs_is_hom() {
        let (h3, h2) = (FiniteHilbertAlgebra::godel_chain(3), FiniteHilbertAlgebra::chain2());
        let g = Guards::default();
        for f in enumerate_homomorphisms(&h3, &h3, Signature::HILBERT, &g).unwrap() {
            for k in enumerate_homomorphisms(&h3, &h2, Signature::HILBERT, &g).unwrap() {
                assert!(check_homomorphism(&f.then(&k).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn errors_are_reported() {
        let (h3, h2) = (FiniteHilbertAlgebra::godel_chain(3), FiniteHilbertAlgebra::chain2());
        let short = Homomorphism::new(&h3, &h2, vec![0, 1], Signature::HILBERT);
        assert!(matches!(check_homomorphism(&short), Err(Error::Malformed(_))));
        let meet = Homomorphism::new(&h3, &h2, vec![0, 1, 1], Signature::IS);
        assert!(matches!(check_homomorphism(&meet), Err(Error::MissingStructure(_))));
        let tight = Guards {
            hom_space: 4,
            ..Guards::default()
        };
        assert!(matches!(
            enumerate_homomorphisms(&h3, &h2, Signature::HILBERT, &tight),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
