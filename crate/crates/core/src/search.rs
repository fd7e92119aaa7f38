//! Exhaustive enumeration of small posets and Hilbert algebras up to isomorphism.
//!
//! Algebras are generated order-first: every finite Hilbert algebra has a
//! natural order with a top, so we enumerate those posets up to isomorphism
//! and then fill in the implication entries `a → b` for `a ≰ b` by
//! backtracking, pruning with axioms 1 and 2 as soon as an instance is fully
//! determined. Results are deduplicated through a canonical form: the
//! lexicographically least implication table over all relabelings that put
//! the top last.

use std::collections::BTreeSet;

use crate::algebra::{check_axioms, AxiomClass, FiniteHilbertAlgebra};
use crate::error::{Error, Result};
use crate::guard::Guards;
use crate::poset::FinitePoset;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                go(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    go(n, &mut current, &mut used, &mut out);
    out
}

/// Relabelings of `0..n` sending `fixed` to `n - 1`.
fn permutations_fixing_last(n: usize, fixed: usize) -> Vec<Vec<usize>> {
    permutations(n - 1)
        .into_iter()
        .map(|p| {
            let mut perm = vec![0; n];
            let mut others = (0..n).filter(|&x| x != fixed);
            for &target in &p {
                perm[others.next().unwrap()] = target;
            }
            perm[fixed] = n - 1;
            perm
        })
        .collect()
}

/// Canonical representative of the isomorphism class of `alg`: top at index
/// `n - 1` and lexicographically least implication table.
pub fn canonical_form(alg: &FiniteHilbertAlgebra) -> FiniteHilbertAlgebra {
    let n = alg.len();
    permutations_fixing_last(n, alg.one())
        .iter()
        .map(|p| alg.permuted(p))
        .min_by(|x, y| x.imp_flat().cmp(y.imp_flat()))
        .expect("at least one permutation")
}

fn canonical_table(alg: &FiniteHilbertAlgebra, perms: &[Vec<usize>]) -> Vec<usize> {
    let n = alg.len();
    perms
        .iter()
        .map(|p| {
            let mut t = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[p[a] * n + p[b]] = p[alg.imp(a, b)];
                }
            }
            t
        })
        .min()
        .expect("at least one permutation")
}

/// True iff some relabeling maps `a` onto `b`, preserving `→` and `1`.
pub fn isomorphic(a: &FiniteHilbertAlgebra, b: &FiniteHilbertAlgebra) -> bool {
    a.len() == b.len() && canonical_form(&a.reduct()).imp_flat() == canonical_form(&b.reduct()).imp_flat()
}

fn poset_key(p: &FinitePoset, perm: &[usize]) -> Vec<bool> {
    let n = p.len();
    let mut key = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            key[perm[a] * n + perm[b]] = p.leq(a, b);
        }
    }
    key
}

/// One representative per isomorphism class of posets on `m` elements.
///
/// Every finite poset has a natural labeling (a linear extension), so it is
/// enough to generate relations contained in `<` on indices.
pub fn enumerate_posets(m: usize) -> Vec<FinitePoset> {
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let perms = permutations(m);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for bits in 0u64..1 << pairs.len() {
        let mut leq = vec![false; m * m];
        for i in 0..m {
            leq[i * m + i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                leq[i * m + j] = true;
            }
        }
        let transitive = (0..m).all(|a| {
            (0..m).all(|b| (0..m).all(|c| !(leq[a * m + b] && leq[b * m + c]) || leq[a * m + c]))
        });
        if !transitive {
            continue;
        }
        let p = FinitePoset::from_flat_unchecked(m, leq);
        let key = perms.iter().map(|perm| poset_key(&p, perm)).min().unwrap();
        if seen.insert(key.clone()) {
            out.push(FinitePoset::from_flat_unchecked(m, key));
        }
    }
    out
}

const UNSET: usize = usize::MAX;

struct Filler<'a> {
    n: usize,
    order: &'a FinitePoset,
    cells: Vec<(usize, usize)>,
    table: Vec<usize>,
    nodes: u128,
    limit: u128,
    found: Vec<Vec<usize>>,
}

impl Filler<'_> {
    #[inline]
    fn get(&self, a: usize, b: usize) -> usize {
        if a == UNSET || b == UNSET {
            UNSET
        } else {
            self.table[a * self.n + b]
        }
    }

    fn consistent(&self) -> bool {
        let top = self.n - 1;
        for a in 0..self.n {
            for b in 0..self.n {
                let ba = self.get(b, a);
                let k = self.get(a, ba);
                if k != UNSET && k != top {
                    return false;
                }
                let ab = self.get(a, b);
                for c in 0..self.n {
                    let lhs = self.get(a, self.get(b, c));
                    let rhs = self.get(ab, self.get(a, c));
                    let s = self.get(lhs, rhs);
                    if s != UNSET && s != top {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::GuardExceeded {
                what: "algebra table search",
                size: self.nodes,
                limit: self.limit,
            });
        }
        if depth == self.cells.len() {
            self.found.push(self.table.clone());
            return Ok(());
        }
        let (a, b) = self.cells[depth];
        let top = self.n - 1;
        for c in 0..top {
            // b <= a -> b, and a -> b = 1 only when a <= b
            if !self.order.leq(b, c) {
                continue;
            }
            self.table[a * self.n + b] = c;
            if self.consistent() {
                self.run(depth + 1)?;
            }
        }
        self.table[a * self.n + b] = UNSET;
        Ok(())
    }
}

fn fill_tables(order: &FinitePoset, guards: &Guards, nodes: &mut u128) -> Result<Vec<Vec<usize>>> {
    let n = order.len();
    let top = n - 1;
    let mut table = vec![UNSET; n * n];
    let mut cells = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if order.leq(a, b) {
                table[a * n + b] = top;
            } else if a == top {
                table[a * n + b] = b;
            } else {
                cells.push((a, b));
            }
        }
    }
    let mut filler = Filler {
        n,
        order,
        cells,
        table,
        nodes: *nodes,
        limit: guards.table_search,
        found: Vec::new(),
    };
    filler.run(0)?;
    *nodes = filler.nodes;
    Ok(filler.found)
}

/// One canonical representative per isomorphism class of algebras of size `n`
/// in `class`, sorted by canonical table.
///
/// For bounded classes the least element is declared as zero; for the
/// semilattice classes the natural-order meet is attached, and algebras
/// whose natural order has no meets (or whose meet is not residuated) are
/// skipped.
pub fn enumerate_algebras(n: usize, class: AxiomClass, guards: &Guards) -> Result<Vec<FiniteHilbertAlgebra>> {
    if n == 0 {
        return Err(Error::Malformed("algebras have at least one element".into()));
    }
    if n > guards.max_search_size {
        return Err(Error::GuardExceeded {
            what: "algebra enumeration size",
            size: n as u128,
            limit: guards.max_search_size as u128,
        });
    }
    let perms = permutations_fixing_last(n, n - 1);
    let mut canon = BTreeSet::new();
    let mut nodes = 0u128;
    for base in enumerate_posets(n - 1) {
        // adjoin a top element n - 1
        let mut leq = vec![false; n * n];
        for a in 0..n - 1 {
            for b in 0..n - 1 {
                leq[a * n + b] = base.leq(a, b);
            }
        }
        for a in 0..n {
            leq[a * n + n - 1] = true;
        }
        let order = FinitePoset::from_flat_unchecked(n, leq);
        for table in fill_tables(&order, guards, &mut nodes)? {
            let alg = FiniteHilbertAlgebra::from_flat(n, table, n - 1);
            canon.insert(canonical_table(&alg, &perms));
        }
    }
    let mut out = Vec::new();
    for table in canon {
        let alg = FiniteHilbertAlgebra::from_flat(n, table, n - 1);
        debug_assert!(check_axioms(&alg, AxiomClass::Hilbert).unwrap().passes());
        let alg = match class {
            AxiomClass::Hilbert => Some(alg),
            AxiomClass::BoundedHilbert => alg.with_natural_zero(),
            AxiomClass::Is => alg.with_natural_meet(),
            AxiomClass::BoundedIs | AxiomClass::HeytingUpsets => alg
                .with_natural_meet()
                .and_then(|a| a.with_natural_zero())
                .filter(|a| check_axioms(a, class).map(|r| r.passes()).unwrap_or(false)),
        };
        out.extend(alg);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts() {
        // number of unlabeled posets: 1, 1, 2, 5, 16, 63
        let counts: Vec<_> = (0..=5).map(|m| enumerate_posets(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn trivial_and_two_element() {
        let g = Guards::default();
        let one = enumerate_algebras(1, AxiomClass::Hilbert, &g).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].imp_table(), vec![vec![0]]);
        let two = enumerate_algebras(2, AxiomClass::Hilbert, &g).unwrap();
        assert_eq!(two.len(), 1);
        assert!(isomorphic(&two[0], &FiniteHilbertAlgebra::chain2()));
    }

    #[test]
    fn three_element_algebras_are_chain_and_vee() {
        let three = enumerate_algebras(3, AxiomClass::Hilbert, &Guards::default()).unwrap();
        assert_eq!(three.len(), 2);
        let vee = FiniteHilbertAlgebra::new(vec![vec![2, 1, 2], vec![0, 2, 2], vec![0, 1, 2]], 2).unwrap();
        assert!(three.iter().any(|a| isomorphic(a, &FiniteHilbertAlgebra::godel_chain(3))));
        assert!(three.iter().any(|a| isomorphic(a, &vee)));
    }

    #[test]
    fn canonical_form_is_invariant() {
        let b = FiniteHilbertAlgebra::boolean(2);
        let c = canonical_form(&b);
        for p in permutations(4) {
            assert_eq!(canonical_form(&b.permuted(&p)).imp_flat(), c.imp_flat());
        }
        assert_eq!(c.one(), 3);
    }

    #[test]
    fn guards_refuse() {
        let g = Guards::default();
        assert!(matches!(
            enumerate_algebras(6, AxiomClass::Hilbert, &g),
            Err(Error::GuardExceeded { .. })
        ));
        let tight = Guards {
            table_search: 3,
            ..Guards::default()
        };
        assert!(enumerate_algebras(4, AxiomClass::Hilbert, &tight).is_err());
    }
}
