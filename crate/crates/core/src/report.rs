use std::fmt;

use serde::Serialize;

/// Identifies the law an element tuple violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Law {
    /// a → (b → a) = 1
    K,
    /// (a → (b → c)) → ((a → b) → (a → c)) = 1
    S,
    /// a → b = b → a = 1 implies a = b
    Antisymmetry,
    /// 0 → a = 1
    Bottom,
    MeetIdempotent,
    MeetCommutative,
    MeetAssociative,
    /// a ∧ 1 = a
    MeetTop,
    /// a ∧ b ≤ c iff a ≤ b → c
    Residuation,
    /// the meet order agrees with the natural order
    OrderAgreement,
    /// (x ∧ y) → z = x → (y → z)
    MeetCurry,
    /// x → (y ∧ z) = (x → y) ∧ (x → z)
    ImplicationOverMeet,
    /// a pair without a least upper bound
    JoinExists,
    Distributivity,
    /// τ(a → b) ≤ τ(a) → τ(b)
    I1,
    /// a ≤ τ(a)
    I2,
    /// τ(a) ≤ ((b → a) → b) → b
    I3,
    /// τ(a ∧ b) = τ(a) ∧ τ(b)
    F1,
    /// τ(a) ≤ b ∨ (b → a)
    F3,
    /// ¬τ(a) ≤ τ(a)
    G4Gamma,
    /// τ(a) ≤ (a → b) → ((¬b → b) → b)
    G5Gamma,
    /// S(a) → a = a
    SuccessorFixed,
    /// G(a) ≤ ¬¬a
    G4Gabbay,
    /// G(a) → a ≤ ¬¬a → a
    G5Gabbay,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::K => "axiom 1: a->(b->a)=1",
            Law::S => "axiom 2: (a->(b->c))->((a->b)->(a->c))=1",
            Law::Antisymmetry => "axiom 3: a->b=b->a=1 implies a=b",
            Law::Bottom => "bottom: 0->a=1",
            Law::MeetIdempotent => "meet idempotent",
            Law::MeetCommutative => "meet commutative",
            Law::MeetAssociative => "meet associative",
            Law::MeetTop => "meet top: a^1=a",
            Law::Residuation => "residuation: a^b<=c iff a<=b->c",
            Law::OrderAgreement => "meet order equals natural order",
            Law::MeetCurry => "(x^y)->z = x->(y->z)",
            Law::ImplicationOverMeet => "x->(y^z) = (x->y)^(x->z)",
            Law::JoinExists => "join exists",
            Law::Distributivity => "distributivity",
            Law::I1 => "(i1) t(a->b) <= t(a)->t(b)",
            Law::I2 => "(i2) a <= t(a)",
            Law::I3 => "(i3) t(a) <= ((b->a)->b)->b",
            Law::F1 => "(f1) t(a^b) = t(a)^t(b)",
            Law::F3 => "(f3) t(a) <= b v (b->a)",
            Law::G4Gamma => "(g4) ~t(a) <= t(a)",
            Law::G5Gamma => "(g5) t(a) <= (a->b)->((~b->b)->b)",
            Law::SuccessorFixed => "S(a)->a = a",
            Law::G4Gabbay => "(G4) G(a) <= ~~a",
            Law::G5Gabbay => "(G5) G(a)->a <= ~~a->a",
        };
        f.write_str(s)
    }
}

/// A violated law together with the element tuple witnessing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.witness)
    }
}

/// Outcome of a law check: the subject checked and every violation found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            violations: Vec::new(),
        }
    }

    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, law: Law, witness: impl Into<Vec<usize>>) {
        self.violations.push(Violation {
            law,
            witness: witness.into(),
        });
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn violates(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn merge(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passes() {
            write!(f, "{}: pass", self.subject)
        } else {
            write!(f, "{}: {} violation(s)", self.subject, self.violations.len())?;
            for v in &self.violations {
                write!(f, "\n  {v}")?;
            }
            Ok(())
        }
    }
}
