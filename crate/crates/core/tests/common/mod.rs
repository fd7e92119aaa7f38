//! Brute-force oracles shared by the integration tests.
//!
//! Nothing here calls into the library's algorithms; the library types are
//! only used as table holders. Sets are `u64` bitmasks.
#![allow(dead_code)]

use std::collections::BTreeSet;

use frontal::{FiniteHilbertAlgebra, FinitePoset, Subset};

pub fn mask(s: &Subset) -> u64 {
    s.iter().fold(0, |m, i| m | 1 << i)
}

pub fn members(m: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| m >> i & 1 == 1)
}

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

pub fn leq(h: &FiniteHilbertAlgebra, a: usize, b: usize) -> bool {
    h.imp(a, b) == h.one()
}

/// Axioms 1, 2 and antisymmetry read straight off a flat table.
pub fn table_is_hilbert(n: usize, t: &[usize], one: usize) -> bool {
    let imp = |a: usize, b: usize| t[a * n + b];
    for a in 0..n {
        for b in 0..n {
            if imp(a, imp(b, a)) != one {
                return false;
            }
            if a != b && imp(a, b) == one && imp(b, a) == one {
                return false;
            }
            for c in 0..n {
                if imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c))) != one {
                    return false;
                }
            }
        }
    }
    true
}

pub fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least relabeled table over relabelings sending `one` to `n - 1`.
pub fn canonical(n: usize, t: &[usize], one: usize) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for p in perms(n) {
        if p[one] != n - 1 {
            continue;
        }
        let mut r = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                r[p[a] * n + p[b]] = p[t[a * n + b]];
            }
        }
        if best.as_ref().map_or(true, |b| r < *b) {
            best = Some(r);
        }
    }
    best.unwrap()
}

/// Canonical tables of every Hilbert algebra on `n` elements, top at `n - 1`.
///
/// Small sizes scan every table outright; larger ones backtrack cell by cell
/// in row-major order, rejecting as soon as a fully assigned instance of an
/// axiom fails. No use is made of the natural order.
pub fn hilbert_tables(n: usize) -> BTreeSet<Vec<usize>> {
    let top = n - 1;
    let mut base = vec![usize::MAX; n * n];
    let mut free = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || b == top {
                base[a * n + b] = top;
            } else if a == top {
                base[a * n + b] = b;
            } else {
                free.push(a * n + b);
            }
        }
    }
    let mut out = BTreeSet::new();
    if n <= 4 {
        let total = (n as u64).pow(free.len() as u32);
        for mut code in 0..total {
            let mut t = base.clone();
            for &cell in &free {
                t[cell] = (code % n as u64) as usize;
                code /= n as u64;
            }
            if table_is_hilbert(n, &t, top) {
                out.insert(canonical(n, &t, top));
            }
        }
        return out;
    }
    fn partial_ok(n: usize, t: &[usize], top: usize) -> bool {
        const U: usize = usize::MAX;
        let imp = |a: usize, b: usize| if a == U || b == U { U } else { t[a * n + b] };
        for a in 0..n {
            for b in 0..n {
                let k = imp(a, imp(b, a));
                if k != U && k != top {
                    return false;
                }
                let (ab, ba) = (imp(a, b), imp(b, a));
                if a != b && ab == top && ba == top {
                    return false;
                }
                for c in 0..n {
                    let s = imp(imp(a, imp(b, c)), imp(ab, imp(a, c)));
                    if s != U && s != top {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(n: usize, t: &mut Vec<usize>, free: &[usize], i: usize, out: &mut BTreeSet<Vec<usize>>) {
        if i == free.len() {
            out.insert(canonical(n, t, n - 1));
            return;
        }
        for v in 0..n {
            t[free[i]] = v;
            if partial_ok(n, t, n - 1) {
                go(n, t, free, i + 1, out);
            }
        }
        t[free[i]] = usize::MAX;
    }
    go(n, &mut base, &free, 0, &mut out);
    out
}

pub fn is_filter(h: &FiniteHilbertAlgebra, m: u64) -> bool {
    if m >> h.one() & 1 == 0 {
        return false;
    }
    members(m).all(|a| (0..h.len()).all(|b| m >> h.imp(a, b) & 1 == 0 || m >> b & 1 == 1))
}

pub fn filters(h: &FiniteHilbertAlgebra) -> Vec<u64> {
    (0..1u64 << h.len()).filter(|&m| is_filter(h, m)).collect()
}

/// Least filter containing `x`: intersection of all filters above it.
pub fn generated(fs: &[u64], x: u64) -> u64 {
    fs.iter().filter(|&&f| f & x == x).fold(u64::MAX, |acc, &f| acc & f)
}

pub fn irreducible(fs: &[u64], f: u64, n: usize) -> bool {
    if f == full(n) {
        return false;
    }
    let above: Vec<u64> = fs.iter().copied().filter(|&g| g & f == f && g != f).collect();
    !above.iter().any(|&g1| above.iter().any(|&g2| g1 & g2 == f))
}

/// Irreducible filters, sorted as bitmasks.
pub fn spectrum(h: &FiniteHilbertAlgebra) -> Vec<u64> {
    let fs = filters(h);
    let mut s: Vec<u64> = fs.iter().copied().filter(|&f| irreducible(&fs, f, h.len())).collect();
    s.sort_unstable();
    s
}

/// A finite order given by its `≤` matrix.
#[derive(Clone, Debug)]
pub struct Order {
    pub n: usize,
    pub le: Vec<Vec<bool>>,
}

impl Order {
    pub fn of_spectrum(spec: &[u64]) -> Self {
        let n = spec.len();
        Order {
            n,
            le: (0..n).map(|i| (0..n).map(|j| spec[i] & !spec[j] == 0).collect()).collect(),
        }
    }

    pub fn of_poset(p: &FinitePoset) -> Self {
        Order { n: p.len(), le: p.matrix() }
    }

    pub fn is_upset(&self, u: u64) -> bool {
        members(u).all(|x| (0..self.n).all(|y| !self.le[x][y] || u >> y & 1 == 1))
    }

    pub fn upsets(&self) -> Vec<u64> {
        (0..1u64 << self.n).filter(|&u| self.is_upset(u)).collect()
    }

    /// `x ∈ U ⇒ V` iff every `y ≥ x` in `U` is in `V`.
    pub fn imp(&self, u: u64, v: u64) -> u64 {
        (0..self.n)
            .filter(|&x| (0..self.n).all(|y| !self.le[x][y] || u >> y & 1 == 0 || v >> y & 1 == 1))
            .fold(0, |m, x| m | 1 << x)
    }

    pub fn maximal(&self, s: u64) -> u64 {
        members(s)
            .filter(|&x| members(s).all(|y| y == x || !self.le[x][y]))
            .fold(0, |m, x| m | 1 << x)
    }

    pub fn down(&self, s: u64) -> u64 {
        (0..self.n)
            .filter(|&x| members(s).any(|y| self.le[x][y]))
            .fold(0, |m, x| m | 1 << x)
    }

    pub fn full(&self) -> u64 {
        full(self.n)
    }
}

pub fn phi(spec: &[u64], a: usize) -> u64 {
    (0..spec.len()).filter(|&p| spec[p] >> a & 1 == 1).fold(0, |m, p| m | 1 << p)
}

/// Every nonempty intersection of φ-images.
pub fn lh(h: &FiniteHilbertAlgebra, spec: &[u64]) -> BTreeSet<u64> {
    let n = h.len();
    (1..1u64 << n)
        .map(|g| members(g).fold(full(spec.len()), |acc, a| acc & phi(spec, a)))
        .collect()
}

/// `P ∈ τ^π(U)` iff every irreducible `Q ⊇ τ⁻¹[P]` lies in `U`.
pub fn tau_pi(tau: &[usize], spec: &[u64], u: u64) -> u64 {
    (0..spec.len())
        .filter(|&p| {
            let pre = (0..tau.len()).filter(|&a| spec[p] >> tau[a] & 1 == 1).fold(0u64, |m, a| m | 1 << a);
            (0..spec.len()).all(|q| pre & !spec[q] != 0 || u >> q & 1 == 1)
        })
        .fold(0, |m, p| m | 1 << p)
}

/// (i1), (i2), (i3) read directly.
pub fn is_frontal(h: &FiniteHilbertAlgebra, t: &[usize]) -> bool {
    let n = h.len();
    (0..n).all(|a| {
        leq(h, a, t[a])
            && (0..n).all(|b| {
                leq(h, t[h.imp(a, b)], h.imp(t[a], t[b])) && leq(h, t[a], h.imp(h.imp(h.imp(b, a), b), b))
            })
    })
}

pub fn neg(h: &FiniteHilbertAlgebra, a: usize) -> usize {
    h.imp(a, h.zero().unwrap())
}

/// Membership in the defining set of the operator named `kind`.
pub fn in_set(h: &FiniteHilbertAlgebra, kind: &str, a: usize, b: usize) -> bool {
    match kind {
        "succ" => leq(h, h.imp(b, a), b),
        "gamma" => leq(h, neg(h, b), b) && leq(h, a, b),
        "gabbay" => leq(h, h.imp(b, a), h.imp(neg(h, neg(h, a)), b)),
        _ => unreachable!(),
    }
}

/// Pointwise minimum of the defining sets, if every one has a minimum.
pub fn min_operator(h: &FiniteHilbertAlgebra, kind: &str) -> Option<Vec<usize>> {
    (0..h.len())
        .map(|a| {
            let s: Vec<usize> = (0..h.len()).filter(|&b| in_set(h, kind, a, b)).collect();
            s.iter().copied().find(|&m| s.iter().all(|&b| leq(h, m, b)))
        })
        .collect()
}

/// The laws singling out each operator among frontal maps.
pub fn operator_laws(h: &FiniteHilbertAlgebra, kind: &str, t: &[usize]) -> bool {
    if !is_frontal(h, t) {
        return false;
    }
    let n = h.len();
    match kind {
        "succ" => (0..n).all(|a| h.imp(t[a], a) == a),
        "gamma" => (0..n).all(|a| {
            leq(h, neg(h, t[a]), t[a])
                && (0..n).all(|b| leq(h, t[a], h.imp(h.imp(a, b), h.imp(h.imp(neg(h, b), b), b))))
        }),
        "gabbay" => (0..n).all(|a| {
            let nna = neg(h, neg(h, a));
            leq(h, t[a], nna) && leq(h, h.imp(t[a], a), h.imp(nna, a))
        }),
        _ => unreachable!(),
    }
}

/// Every unary map on `0..n`.
pub fn unary_maps(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (n as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let v = (code % n as u64) as usize;
                code /= n as u64;
                v
            })
            .collect()
    })
}

/// Maps satisfying the laws of `kind`, by scanning every unary map.
pub fn operators_by_laws(h: &FiniteHilbertAlgebra, kind: &str) -> Vec<Vec<usize>> {
    unary_maps(h.len()).filter(|t| operator_laws(h, kind, t)).collect()
}

pub fn fixtures_h3() -> FiniteHilbertAlgebra {
    FiniteHilbertAlgebra::godel_chain(3).with_zero(0).unwrap()
}

pub fn fixtures_vee() -> FiniteHilbertAlgebra {
    FiniteHilbertAlgebra::new(vec![vec![2, 1, 2], vec![0, 2, 2], vec![0, 1, 2]], 2).unwrap()
}
