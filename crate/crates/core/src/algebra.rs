//! Finite Hilbert algebras, their natural order and axiom checking.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::report::{Law, Report};

/// A finite algebra `(H, →, 1)` on the carrier `0..n`, optionally carrying a
/// declared bottom and a meet table.
///
/// Construction only checks that the tables are well formed. Whether the
/// tables satisfy the Hilbert (or implicative semilattice) axioms is the job
/// of [`check_axioms`], so that corrupted tables can still be inspected.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteHilbertAlgebra {
    n: usize,
    imp: Vec<usize>,
    one: usize,
    zero: Option<usize>,
    meet: Option<Vec<usize>>,
    labels: Option<Vec<String>>,
}

fn flatten_table(n: usize, table: Vec<Vec<usize>>, what: &str) -> Result<Vec<usize>> {
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(Error::Malformed(format!("{what} table must be {n}x{n}")));
    }
    for (i, row) in table.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(Error::Malformed(format!(
                    "{what}[{i}][{j}] = {v} is out of range 0..{n}"
                )));
            }
        }
    }
    Ok(table.into_iter().flatten().collect())
}

impl FiniteHilbertAlgebra {
    pub fn new(imp: Vec<Vec<usize>>, one: usize) -> Result<Self> {
        let n = imp.len();
        if n == 0 {
            return Err(Error::Malformed("carrier must be nonempty".into()));
        }
        if one >= n {
            return Err(Error::Malformed(format!("one = {one} is out of range 0..{n}")));
        }
        Ok(FiniteHilbertAlgebra {
            n,
            imp: flatten_table(n, imp, "imp")?,
            one,
            zero: None,
            meet: None,
            labels: None,
        })
    }

    pub(crate) fn from_flat(n: usize, imp: Vec<usize>, one: usize) -> Self {
        debug_assert_eq!(imp.len(), n * n);
        FiniteHilbertAlgebra {
            n,
            imp,
            one,
            zero: None,
            meet: None,
            labels: None,
        }
    }

    pub fn with_zero(mut self, zero: usize) -> Result<Self> {
        if zero >= self.n {
            return Err(Error::Malformed(format!("zero = {zero} is out of range 0..{}", self.n)));
        }
        self.zero = Some(zero);
        Ok(self)
    }

    pub fn with_meet(mut self, meet: Vec<Vec<usize>>) -> Result<Self> {
        self.meet = Some(flatten_table(self.n, meet, "meet")?);
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Malformed(format!(
                "{} labels given for {} elements",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// The two-element chain `0 < 1`.
    pub fn chain2() -> Self {
        FiniteHilbertAlgebra::new(vec![vec![1, 1], vec![0, 1]], 1).unwrap()
    }

    /// The `n`-element Gödel chain `0 < 1 < ... < n-1` with `a → b = 1` if `a ≤ b` and `b` otherwise.
    pub fn godel_chain(n: usize) -> Self {
        let top = n - 1;
        let imp = (0..n)
            .map(|a| (0..n).map(|b| if a <= b { top } else { b }).collect())
            .collect();
        FiniteHilbertAlgebra::new(imp, top).unwrap()
    }

    /// The `{→,1}`-reduct of the Boolean algebra of subsets of a `k`-element set.
    pub fn boolean(k: usize) -> Self {
        let n = 1usize << k;
        let full = n - 1;
        let imp = (0..n)
            .map(|a| (0..n).map(|b| (!a | b) & full).collect())
            .collect();
        FiniteHilbertAlgebra::new(imp, full).unwrap()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp[a * self.n + b]
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.meet.as_ref().map(|m| m[a * self.n + b])
    }

    pub fn has_meet(&self) -> bool {
        self.meet.is_some()
    }

    /// Natural order: `a ≤ b` iff `a → b = 1`.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.imp(a, b) == self.one
    }

    /// `¬a = a → 0`; requires a declared bottom.
    pub fn neg(&self, a: usize) -> Result<usize> {
        self.zero.map(|z| self.imp(a, z)).ok_or(Error::NotBounded)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn imp_table(&self) -> Vec<Vec<usize>> {
        self.imp.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn meet_table(&self) -> Option<Vec<Vec<usize>>> {
        self.meet
            .as_ref()
            .map(|m| m.chunks(self.n).map(|r| r.to_vec()).collect())
    }

    pub(crate) fn imp_flat(&self) -> &[usize] {
        &self.imp
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element; the index itself when unlabelled.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    /// Drops meet, bottom and labels, keeping the `{→,1}` structure.
    pub fn reduct(&self) -> Self {
        FiniteHilbertAlgebra::from_flat(self.n, self.imp.clone(), self.one)
    }

    /// Drops only the meet table.
    pub fn without_meet(&self) -> Self {
        FiniteHilbertAlgebra {
            meet: None,
            ..self.clone()
        }
    }

    /// Greatest lower bound in the natural order.
    pub fn glb(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = self.elements().filter(|&c| self.leq(c, a) && self.leq(c, b)).collect();
        lower
            .iter()
            .copied()
            .find(|&m| lower.iter().all(|&c| self.leq(c, m)))
    }

    /// Least upper bound in the natural order.
    pub fn lub(&self, a: usize, b: usize) -> Option<usize> {
        let upper: Vec<usize> = self.elements().filter(|&c| self.leq(a, c) && self.leq(b, c)).collect();
        upper
            .iter()
            .copied()
            .find(|&m| upper.iter().all(|&c| self.leq(m, c)))
    }

    /// The meet table of the natural order, when every pair has an infimum.
    pub fn natural_meet_table(&self) -> Option<Vec<Vec<usize>>> {
        self.elements()
            .map(|a| self.elements().map(|b| self.glb(a, b)).collect::<Option<Vec<_>>>())
            .collect()
    }

    /// Attaches the natural-order meet if it exists and makes this an implicative semilattice.
    pub fn with_natural_meet(&self) -> Option<Self> {
        let table = self.natural_meet_table()?;
        let alg = self.clone().with_meet(table).ok()?;
        check_axioms(&alg, AxiomClass::Is).ok()?.passes().then_some(alg)
    }

    /// Declares the least element of the natural order as bottom, if there is one.
    pub fn with_natural_zero(&self) -> Option<Self> {
        let z = self.elements().find(|&z| self.elements().all(|a| self.leq(z, a)))?;
        self.clone().with_zero(z).ok()
    }

    /// Relabels the carrier: element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let mut imp = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                imp[perm[a] * n + perm[b]] = perm[self.imp(a, b)];
            }
        }
        let meet = self.meet.as_ref().map(|m| {
            let mut t = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[perm[a] * n + perm[b]] = perm[m[a * n + b]];
                }
            }
            t
        });
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for (i, s) in l.iter().enumerate() {
                out[perm[i]] = s.clone();
            }
            out
        });
        FiniteHilbertAlgebra {
            n,
            imp,
            one: perm[self.one],
            zero: self.zero.map(|z| perm[z]),
            meet,
            labels,
        }
    }
}

/// A total unary function on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub struct UnaryMap(Vec<usize>);

impl UnaryMap {
    pub fn new(map: Vec<usize>, domain_size: usize) -> Result<Self> {
        if map.len() != domain_size {
            return Err(Error::Malformed(format!(
                "unary map has {} entries, expected {domain_size}",
                map.len()
            )));
        }
        if let Some((i, &v)) = map.iter().enumerate().find(|(_, &v)| v >= domain_size) {
            return Err(Error::Malformed(format!("map[{i}] = {v} is out of range 0..{domain_size}")));
        }
        Ok(UnaryMap(map))
    }

    pub fn identity(n: usize) -> Self {
        UnaryMap((0..n).collect())
    }

    pub fn constant(n: usize, value: usize) -> Self {
        UnaryMap(vec![value; n])
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &UnaryMap) -> UnaryMap {
        UnaryMap(first.0.iter().map(|&i| self.0[i]).collect())
    }
}

/// Every unary map on `0..n`, in lexicographic order.
pub fn all_unary_maps(n: usize) -> impl Iterator<Item = UnaryMap> {
    let total = (n as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        let mut map = vec![0; n];
        for slot in map.iter_mut().rev() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        UnaryMap(map)
    })
}

/// Classes of algebras [`check_axioms`] can confirm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AxiomClass {
    Hilbert,
    BoundedHilbert,
    /// implicative semilattice
    Is,
    BoundedIs,
    /// bounded implicative semilattice whose natural order is a distributive lattice,
    /// i.e. a finite Heyting algebra (isomorphic to the upsets of a finite poset)
    HeytingUpsets,
}

impl AxiomClass {
    pub fn name(self) -> &'static str {
        match self {
            AxiomClass::Hilbert => "hilbert",
            AxiomClass::BoundedHilbert => "bounded_hilbert",
            AxiomClass::Is => "is",
            AxiomClass::BoundedIs => "bounded_is",
            AxiomClass::HeytingUpsets => "heyting_upsets",
        }
    }

    pub fn needs_zero(self) -> bool {
        matches!(
            self,
            AxiomClass::BoundedHilbert | AxiomClass::BoundedIs | AxiomClass::HeytingUpsets
        )
    }

    pub fn needs_meet(self) -> bool {
        matches!(
            self,
            AxiomClass::Is | AxiomClass::BoundedIs | AxiomClass::HeytingUpsets
        )
    }

    /// The class an algebra declares through its optional structure.
    pub fn declared_by(alg: &FiniteHilbertAlgebra) -> Self {
        match (alg.zero().is_some(), alg.has_meet()) {
            (false, false) => AxiomClass::Hilbert,
            (true, false) => AxiomClass::BoundedHilbert,
            (false, true) => AxiomClass::Is,
            (true, true) => AxiomClass::BoundedIs,
        }
    }
}

impl fmt::Display for AxiomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "hilbert" => AxiomClass::Hilbert,
            "bounded_hilbert" => AxiomClass::BoundedHilbert,
            "is" => AxiomClass::Is,
            "bounded_is" => AxiomClass::BoundedIs,
            "heyting_upsets" => AxiomClass::HeytingUpsets,
            other => return Err(Error::Malformed(format!("unknown class {other:?}"))),
        })
    }
}

fn check_hilbert(alg: &FiniteHilbertAlgebra, report: &mut Report) {
    let one = alg.one();
    for a in alg.elements() {
        for b in alg.elements() {
            if alg.imp(a, alg.imp(b, a)) != one {
                report.push(Law::K, [a, b]);
            }
            if a < b && alg.imp(a, b) == one && alg.imp(b, a) == one {
                report.push(Law::Antisymmetry, [a, b]);
            }
            for c in alg.elements() {
                let lhs = alg.imp(a, alg.imp(b, c));
                let rhs = alg.imp(alg.imp(a, b), alg.imp(a, c));
                if alg.imp(lhs, rhs) != one {
                    report.push(Law::S, [a, b, c]);
                }
            }
        }
    }
}

fn check_meet(alg: &FiniteHilbertAlgebra, report: &mut Report) {
    let m = |a, b| alg.meet(a, b).unwrap();
    let mle = |a, b| m(a, b) == a;
    let one = alg.one();
    for a in alg.elements() {
        if m(a, a) != a {
            report.push(Law::MeetIdempotent, [a]);
        }
        if m(a, one) != a {
            report.push(Law::MeetTop, [a]);
        }
        for b in alg.elements() {
            if m(a, b) != m(b, a) {
                report.push(Law::MeetCommutative, [a, b]);
            }
            if mle(a, b) != alg.leq(a, b) {
                report.push(Law::OrderAgreement, [a, b]);
            }
            for c in alg.elements() {
                if m(m(a, b), c) != m(a, m(b, c)) {
                    report.push(Law::MeetAssociative, [a, b, c]);
                }
                if mle(m(a, b), c) != mle(a, alg.imp(b, c)) {
                    report.push(Law::Residuation, [a, b, c]);
                }
                if alg.imp(m(a, b), c) != alg.imp(a, alg.imp(b, c)) {
                    report.push(Law::MeetCurry, [a, b, c]);
                }
                if alg.imp(a, m(b, c)) != m(alg.imp(a, b), alg.imp(a, c)) {
                    report.push(Law::ImplicationOverMeet, [a, b, c]);
                }
            }
        }
    }
}

fn check_heyting(alg: &FiniteHilbertAlgebra, report: &mut Report) {
    let joins: Vec<Vec<Option<usize>>> = alg
        .elements()
        .map(|a| alg.elements().map(|b| alg.lub(a, b)).collect())
        .collect();
    let mut complete = true;
    for a in alg.elements() {
        for b in alg.elements() {
            if a <= b && joins[a][b].is_none() {
                report.push(Law::JoinExists, [a, b]);
                complete = false;
            }
        }
    }
    if !complete {
        return;
    }
    let m = |a, b| alg.meet(a, b).unwrap();
    let j = |a: usize, b: usize| joins[a][b].unwrap();
    for a in alg.elements() {
        for b in alg.elements() {
            for c in alg.elements() {
                if m(a, j(b, c)) != j(m(a, b), m(a, c)) {
                    report.push(Law::Distributivity, [a, b, c]);
                }
            }
        }
    }
}

/// Checks `alg` against every law of `class`, listing each violated instance.
///
/// Fails with [`Error::MissingStructure`] when the class needs a bottom or a
/// meet table the algebra does not declare.
pub fn check_axioms(alg: &FiniteHilbertAlgebra, class: AxiomClass) -> Result<Report> {
    if class.needs_zero() && alg.zero().is_none() {
        return Err(Error::MissingStructure(format!("class {class} needs a declared zero")));
    }
    if class.needs_meet() && !alg.has_meet() {
        return Err(Error::MissingStructure(format!("class {class} needs a meet table")));
    }
    let mut report = Report::new(format!("class {class}"));
    check_hilbert(alg, &mut report);
    if let Some(z) = alg.zero().filter(|_| class.needs_zero()) {
        for a in alg.elements() {
            if !alg.leq(z, a) {
                report.push(Law::Bottom, [z, a]);
            }
        }
    }
    if class.needs_meet() {
        check_meet(alg, &mut report);
    }
    if class == AxiomClass::HeytingUpsets && report.passes() {
        check_heyting(alg, &mut report);
    }
    Ok(report)
}

/// The natural order of a Hilbert algebra; `1` is its maximum.
pub fn natural_order(alg: &FiniteHilbertAlgebra) -> Result<FinitePoset> {
    let mut report = Report::new("hilbert");
    check_hilbert(alg, &mut report);
    if let Some(v) = report
        .violations
        .iter()
        .find(|v| v.law == Law::Antisymmetry)
        .or(report.first())
    {
        return Err(Error::NotHilbert(v.clone()));
    }
    let n = alg.len();
    let leq = (0..n * n).map(|i| alg.leq(i / n, i % n)).collect();
    Ok(FinitePoset::from_flat_unchecked(n, leq))
}
