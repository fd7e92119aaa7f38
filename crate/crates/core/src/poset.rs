//! Finite posets and the Heyting algebra of their upsets.

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A finite partial order on `0..n`, stored as a dense relation matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FinitePoset {
    n: usize,
    // leq[a * n + b] is true iff a <= b
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Validates a full relation matrix.
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = leq.len();
        if leq.iter().any(|row| row.len() != n) {
            return Err(Error::Malformed(format!("order relation must be {n}x{n}")));
        }
        let poset = FinitePoset {
            n,
            leq: leq.into_iter().flatten().collect(),
        };
        poset.validate()?;
        Ok(poset)
    }

    /// The reflexive closure of `pairs`, which must already be transitive and antisymmetric.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Malformed(format!("pair ({a}, {b}) out of range for {n} elements")));
            }
            leq[a * n + b] = true;
        }
        let poset = FinitePoset { n, leq };
        poset.validate()?;
        Ok(poset)
    }

    /// The reflexive-transitive closure of a cover relation.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::Malformed(format!("cover ({a}, {b}) out of range for {n} elements")));
            }
            leq[a * n + b] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let poset = FinitePoset { n, leq };
        poset.validate()?;
        Ok(poset)
    }

    pub(crate) fn from_flat_unchecked(n: usize, leq: Vec<bool>) -> Self {
        debug_assert_eq!(leq.len(), n * n);
        FinitePoset { n, leq }
    }

    pub fn antichain(n: usize) -> Self {
        FinitePoset::from_pairs(n, &[]).expect("discrete order")
    }

    pub fn chain(n: usize) -> Self {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FinitePoset::from_covers(n, &covers).expect("chain order")
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for a in 0..n {
            if !self.leq(a, a) {
                return Err(Error::NotPartialOrder(format!("not reflexive at {a}")));
            }
            for b in 0..n {
                if a != b && self.leq(a, b) && self.leq(b, a) {
                    return Err(Error::NotPartialOrder(format!("antisymmetry fails at ({a}, {b})")));
                }
                for c in 0..n {
                    if self.leq(a, b) && self.leq(b, c) && !self.leq(a, c) {
                        return Err(Error::NotPartialOrder(format!(
                            "transitivity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Rows of the relation matrix.
    pub fn matrix(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    /// Pairs `(a, b)` where `b` covers `a`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The greatest element, if there is one.
    pub fn maximum(&self) -> Option<usize> {
        (0..self.n).find(|&m| (0..self.n).all(|x| self.leq(x, m)))
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.n).find(|&m| (0..self.n).all(|x| self.leq(m, x)))
    }

    /// Relabels the carrier: element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> FinitePoset {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[perm[a] * n + perm[b]] = self.leq(a, b);
            }
        }
        FinitePoset { n, leq }
    }

    pub fn is_upset(&self, s: &Subset) -> bool {
        s.universe() == self.n
            && s.iter().all(|x| (0..self.n).all(|y| !self.leq(x, y) || s.contains(y)))
    }

    pub fn is_downset(&self, s: &Subset) -> bool {
        s.universe() == self.n
            && s.iter().all(|x| (0..self.n).all(|y| !self.leq(y, x) || s.contains(y)))
    }

    /// `[Y)`: everything above some member of `s`.
    pub fn up_closure(&self, s: &Subset) -> Subset {
        Subset::from_indices(
            self.n,
            (0..self.n).filter(|&x| s.iter().any(|y| self.leq(y, x))),
        )
    }

    /// `(Y]`: everything below some member of `s`.
    pub fn down_closure(&self, s: &Subset) -> Subset {
        Subset::from_indices(
            self.n,
            (0..self.n).filter(|&x| s.iter().any(|y| self.leq(x, y))),
        )
    }

    /// Members of `s` with nothing of `s` strictly above them.
    pub fn maximal_elements(&self, s: &Subset) -> Subset {
        Subset::from_indices(
            self.n,
            s.iter().filter(|&x| !s.iter().any(|y| self.lt(x, y))),
        )
    }

    pub fn minimal_elements(&self, s: &Subset) -> Subset {
        Subset::from_indices(
            self.n,
            s.iter().filter(|&x| !s.iter().any(|y| self.lt(y, x))),
        )
    }

    fn require_upset(&self, u: &Subset) -> Result<()> {
        if self.is_upset(u) {
            Ok(())
        } else {
            Err(Error::NotAnUpset(u.to_vec()))
        }
    }

    /// Heyting implication on upsets, `(U ∩ Vᶜ]ᶜ`.
    pub fn up_implication(&self, u: &Subset, v: &Subset) -> Result<Subset> {
        self.require_upset(u)?;
        self.require_upset(v)?;
        Ok(self.implication_unchecked(u, v))
    }

    pub(crate) fn implication_unchecked(&self, u: &Subset, v: &Subset) -> Subset {
        self.down_closure(&u.difference(v)).complement()
    }

    /// Pointwise form of the upset implication: `x ∈ U ⇒ V` iff every `y ≥ x` in `U` is in `V`.
    pub fn up_implication_pointwise(&self, u: &Subset, v: &Subset) -> Result<Subset> {
        self.require_upset(u)?;
        self.require_upset(v)?;
        Ok(Subset::from_indices(
            self.n,
            (0..self.n).filter(|&x| {
                (0..self.n).all(|y| !self.leq(x, y) || !u.contains(y) || v.contains(y))
            }),
        ))
    }

    /// Pseudocomplement `U ⇒ ∅`.
    pub fn negation(&self, u: &Subset) -> Result<Subset> {
        self.up_implication(u, &Subset::empty(self.n))
    }

    /// Co-derivative on upsets: `U ∪ (Uᶜ)_M`.
    pub fn coderivative(&self, u: &Subset) -> Result<Subset> {
        self.require_upset(u)?;
        Ok(u.union(&self.maximal_elements(&u.complement())))
    }

    /// Every upset, in increasing numeric order of the characteristic vector.
    pub fn all_upsets(&self, max_bits: usize) -> Result<Vec<Subset>> {
        if self.n > max_bits || self.n >= 64 {
            return Err(Error::GuardExceeded {
                what: "upset scan",
                size: 1u128 << self.n.min(127),
                limit: 1u128 << max_bits.min(127),
            });
        }
        // above[x] = bitmask of the principal upset [x)
        let above: Vec<u64> = (0..self.n)
            .map(|x| (0..self.n).filter(|&y| self.leq(x, y)).fold(0, |m, y| m | 1 << y))
            .collect();
        Ok((0..1u64 << self.n)
            .filter(|&bits| {
                (0..self.n).all(|x| bits >> x & 1 == 0 || above[x] & !bits == 0)
            })
            .map(|bits| Subset::from_bits(self.n, bits))
            .collect())
    }
}
