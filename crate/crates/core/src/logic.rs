//! Rule-presented finitary logics and the finite algebras they are
//! evaluated on.
//!
//! A presentation generates the least finitary substitution-invariant
//! consequence relation containing its rules. On a finite algebra that
//! reading makes the deductive filters computable: a subset is a filter
//! exactly when it is closed under every ground instance of every rule.

use crate::limits::DEFAULT_RULE_VAR_BUDGET;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LogicError {
    #[error("duplicate connective name `{0}`")]
    DuplicateConnective(String),
    #[error("unknown connective index {0}")]
    UnknownConnective(usize),
    #[error("connective `{name}` expects {expected} arguments, got {got}")]
    ArityMismatch { name: String, expected: usize, got: usize },
    #[error("rule uses {got} variables, presentation budget is {budget}")]
    VariableBudget { got: usize, budget: usize },
    #[error("term uses unassigned variable {0}")]
    UnassignedVariable(usize),
    #[error("algebra has no operation table for connective `{0}`")]
    MissingTable(String),
    #[error("operation table for `{name}` has wrong length: expected {expected}, got {got}")]
    TableLength { name: String, expected: usize, got: usize },
    #[error("operation table for `{name}` contains out-of-range value {value}")]
    TableValue { name: String, value: usize },
    #[error("algebra carrier must be non-empty")]
    EmptyCarrier,
    #[error("map is not a homomorphism: op `{op}` at arguments {args:?}")]
    NotHomomorphism { op: String, args: Vec<usize> },
}

/// A logical language: named connectives with arities (0-ary allowed).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    connectives: Vec<(String, usize)>,
}

impl Signature {
    pub fn new(connectives: &[(&str, usize)]) -> Result<Self, LogicError> {
        let mut seen = Vec::new();
        for (name, _) in connectives {
            if seen.contains(name) {
                return Err(LogicError::DuplicateConnective(name.to_string()));
            }
            seen.push(name);
        }
        Ok(Signature {
            connectives: connectives.iter().map(|(n, a)| (n.to_string(), *a)).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.connectives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.connectives.is_empty()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.connectives[idx].0
    }

    pub fn arity(&self, idx: usize) -> usize {
        self.connectives[idx].1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.connectives.iter().position(|(n, _)| n == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.connectives.iter().map(|(n, a)| (n.as_str(), *a))
    }
}

/// A formula over variables (by index) and signature connectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Term {
    Var(usize),
    App(usize, Vec<Term>),
}

impl Term {
    pub fn app(sig: &Signature, conn: usize, args: Vec<Term>) -> Result<Term, LogicError> {
        if conn >= sig.len() {
            return Err(LogicError::UnknownConnective(conn));
        }
        if args.len() != sig.arity(conn) {
            return Err(LogicError::ArityMismatch {
                name: sig.name(conn).to_string(),
                expected: sig.arity(conn),
                got: args.len(),
            });
        }
        Ok(Term::App(conn, args))
    }

    /// Collects variable indices into `out`.
    pub fn variables(&self, out: &mut Vec<usize>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(*v);
                }
            }
            Term::App(_, args) => {
                for a in args {
                    a.variables(out);
                }
            }
        }
    }

    pub fn max_var(&self) -> Option<usize> {
        let mut vars = Vec::new();
        self.variables(&mut vars);
        vars.into_iter().max()
    }

    pub fn is_ground(&self) -> bool {
        let mut vars = Vec::new();
        self.variables(&mut vars);
        vars.is_empty()
    }

    pub fn render(&self, sig: &Signature) -> String {
        match self {
            Term::Var(v) => variable_name(*v),
            Term::App(c, args) => {
                if args.is_empty() {
                    sig.name(*c).to_string()
                } else {
                    let inner: Vec<String> = args.iter().map(|a| a.render(sig)).collect();
                    format!("{}({})", sig.name(*c), inner.join(","))
                }
            }
        }
    }
}

/// Canonical variable names p, q, r, s, then v4, v5, ...
pub fn variable_name(idx: usize) -> String {
    match idx {
        0 => "p".to_string(),
        1 => "q".to_string(),
        2 => "r".to_string(),
        3 => "s".to_string(),
        n => format!("v{n}"),
    }
}

pub fn variable_index(name: &str) -> Option<usize> {
    match name {
        "p" => Some(0),
        "q" => Some(1),
        "r" => Some(2),
        "s" => Some(3),
        _ => name.strip_prefix('v').and_then(|rest| rest.parse().ok()),
    }
}

/// An inference rule with finitely many premises. Empty premise lists
/// encode axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rule {
    pub premises: Vec<Term>,
    pub conclusion: Term,
}

impl Rule {
    pub fn new(premises: Vec<Term>, conclusion: Term) -> Self {
        Rule { premises, conclusion }
    }

    pub fn variables(&self) -> Vec<usize> {
        let mut vars = Vec::new();
        for p in &self.premises {
            p.variables(&mut vars);
        }
        self.conclusion.variables(&mut vars);
        vars.sort_unstable();
        vars
    }

    pub fn render(&self, sig: &Signature) -> String {
        let prem: Vec<String> = self.premises.iter().map(|t| t.render(sig)).collect();
        format!("{} |- {}", prem.join(", "), self.conclusion.render(sig))
    }
}

/// User-asserted global properties of a presented logic. These are not
/// decidable from a finite presentation; the engine verifies their
/// per-algebra consequences and uses the flags only to gate which theorems
/// a suite may invoke.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Assertions {
    pub congruential: bool,
    pub filter_distributive: bool,
    pub has_theorems: bool,
    pub protoalgebraic: bool,
}

/// Declared witness terms for the transferable properties.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// Binary conjunction term.
    pub pc: Option<Term>,
    /// Finite disjunction set in two variables.
    pub pdi: Option<Vec<Term>>,
    /// Binary implication term for the single-formula deduction theorem.
    pub ddt: Option<Term>,
    /// Inconsistent term.
    pub pie: Option<Term>,
}

/// A finite rule presentation of a logic, together with its assertions and
/// property witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogicPresentation {
    pub name: String,
    pub signature: Signature,
    pub rules: Vec<Rule>,
    pub assertions: Assertions,
    pub witnesses: Witnesses,
    pub var_budget: usize,
}

impl LogicPresentation {
    pub fn new(
        name: &str,
        signature: Signature,
        rules: Vec<Rule>,
        assertions: Assertions,
        witnesses: Witnesses,
    ) -> Result<Self, LogicError> {
        Self::with_budget(name, signature, rules, assertions, witnesses, DEFAULT_RULE_VAR_BUDGET)
    }

    pub fn with_budget(
        name: &str,
        signature: Signature,
        rules: Vec<Rule>,
        assertions: Assertions,
        witnesses: Witnesses,
        var_budget: usize,
    ) -> Result<Self, LogicError> {
        for rule in &rules {
            let vars = rule.variables();
            if vars.len() > var_budget {
                return Err(LogicError::VariableBudget { got: vars.len(), budget: var_budget });
            }
        }
        Ok(LogicPresentation { name: name.to_string(), signature, rules, assertions, witnesses, var_budget })
    }

    /// A logic presented with at least one premise-free rule has theorems on
    /// every algebra.
    pub fn has_axioms(&self) -> bool {
        self.rules.iter().any(|r| r.premises.is_empty())
    }
}

/// A finite algebra for a signature: a carrier `0..size` plus one total
/// operation table per connective, row-major.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct FiniteAlgebra {
    pub name: String,
    size: usize,
    tables: Vec<Vec<usize>>,
}

impl FiniteAlgebra {
    pub fn new(
        name: &str,
        sig: &Signature,
        size: usize,
        tables: Vec<Vec<usize>>,
    ) -> Result<Self, LogicError> {
        if size == 0 {
            return Err(LogicError::EmptyCarrier);
        }
        if tables.len() != sig.len() {
            return Err(LogicError::MissingTable(
                sig.iter().nth(tables.len()).map(|(n, _)| n.to_string()).unwrap_or_default(),
            ));
        }
        for (idx, table) in tables.iter().enumerate() {
            let expected = size.pow(sig.arity(idx) as u32);
            if table.len() != expected {
                return Err(LogicError::TableLength {
                    name: sig.name(idx).to_string(),
                    expected,
                    got: table.len(),
                });
            }
            if let Some(&v) = table.iter().find(|&&v| v >= size) {
                return Err(LogicError::TableValue { name: sig.name(idx).to_string(), value: v });
            }
        }
        Ok(FiniteAlgebra { name: name.to_string(), size, tables })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Applies operation `conn` to `args` (row-major lookup).
    pub fn apply(&self, conn: usize, args: &[usize]) -> usize {
        let mut idx = 0;
        for &a in args {
            idx = idx * self.size + a;
        }
        self.tables[conn][idx]
    }

    pub fn table(&self, conn: usize) -> &[usize] {
        &self.tables[conn]
    }

    /// The one-element algebra of a signature.
    pub fn trivial(sig: &Signature) -> FiniteAlgebra {
        let tables = (0..sig.len()).map(|i| vec![0usize; 1usize.pow(sig.arity(i) as u32)]).collect();
        FiniteAlgebra { name: "trivial".to_string(), size: 1, tables }
    }

    /// Verifies that `map` is a homomorphism into `other`.
    pub fn check_homomorphism(
        &self,
        sig: &Signature,
        map: &[usize],
        other: &FiniteAlgebra,
    ) -> Result<(), LogicError> {
        assert_eq!(map.len(), self.size);
        for conn in 0..sig.len() {
            let arity = sig.arity(conn);
            for args in assignments(self.size, arity) {
                let lhs = map[self.apply(conn, &args)];
                let mapped: Vec<usize> = args.iter().map(|&a| map[a]).collect();
                let rhs = other.apply(conn, &mapped);
                if lhs != rhs {
                    return Err(LogicError::NotHomomorphism {
                        op: sig.name(conn).to_string(),
                        args,
                    });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteAlgebra({}, n={})", self.name, self.size)
    }
}

/// Evaluates a term under a variable assignment.
pub fn evaluate(term: &Term, algebra: &FiniteAlgebra, assignment: &[usize]) -> Result<usize, LogicError> {
    match term {
        Term::Var(v) => assignment.get(*v).copied().ok_or(LogicError::UnassignedVariable(*v)),
        Term::App(conn, args) => {
            let mut vals = Vec::with_capacity(args.len());
            for a in args {
                vals.push(evaluate(a, algebra, assignment)?);
            }
            Ok(algebra.apply(*conn, &vals))
        }
    }
}

/// All assignments of `vars` variables into a carrier of `size` elements,
/// in lexicographic order.
pub fn assignments(size: usize, vars: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = size.checked_pow(vars as u32).expect("assignment space overflow");
    (0..total).map(move |mut k| {
        let mut v = vec![0usize; vars];
        for slot in (0..vars).rev() {
            v[slot] = k % size;
            k /= size;
        }
        v
    })
}

/// A convenience builder for terms out of a signature, used by fixtures and
/// the parser.
pub struct TermBuilder<'a> {
    pub sig: &'a Signature,
}

impl<'a> TermBuilder<'a> {
    pub fn new(sig: &'a Signature) -> Self {
        TermBuilder { sig }
    }

    pub fn var(&self, idx: usize) -> Term {
        Term::Var(idx)
    }

    pub fn op(&self, name: &str, args: Vec<Term>) -> Term {
        let idx = self.sig.index_of(name).unwrap_or_else(|| panic!("unknown connective {name}"));
        Term::app(self.sig, idx, args).expect("arity checked by caller")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn evaluation_on_the_two_element_implication_algebra() {
        let logic = fixtures::l_hil();
        let h2 = fixtures::h2();
        let b = TermBuilder::new(&logic.signature);
        let imp_pq = b.op("imp", vec![b.var(0), b.var(1)]);
        // 0 -> 0 evaluates to 1
        assert_eq!(evaluate(&imp_pq, &h2, &[0, 0]), Ok(1));
        assert_eq!(evaluate(&imp_pq, &h2, &[1, 0]), Ok(0));
    }

    #[test]
    fn evaluation_on_m4_and_constants() {
        let logic = fixtures::l_top_meet();
        let m4 = fixtures::m4_algebra();
        let b = TermBuilder::new(&logic.signature);
        let and_pq = b.op("and", vec![b.var(0), b.var(1)]);
        // a /\ b = 0 in the diamond
        assert_eq!(evaluate(&and_pq, &m4, &[1, 2]), Ok(0));
        let top = b.op("top", vec![]);
        assert_eq!(evaluate(&top, &m4, &[]), Ok(3));
    }

    #[test]
    fn unassigned_variable_is_an_error() {
        let m4 = fixtures::m4_algebra();
        assert_eq!(evaluate(&Term::Var(2), &m4, &[0]), Err(LogicError::UnassignedVariable(2)));
    }

    #[test]
    fn arity_checking() {
        let sig = Signature::new(&[("and", 2)]).unwrap();
        assert!(matches!(
            Term::app(&sig, 0, vec![Term::Var(0)]),
            Err(LogicError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn assignment_enumeration_is_exhaustive_and_ordered() {
        let all: Vec<Vec<usize>> = assignments(3, 2).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[8], vec![2, 2]);
    }

    #[test]
    fn variable_budget_enforced() {
        let sig = Signature::new(&[("and", 2)]).unwrap();
        let b = TermBuilder::new(&sig);
        let wide = Rule::new(
            vec![b.var(0), b.var(1), b.var(2), b.var(3), b.var(4)],
            b.var(0),
        );
        let err = LogicPresentation::new(
            "too-wide",
            sig,
            vec![wide],
            Assertions::default(),
            Witnesses::default(),
        );
        assert!(matches!(err, Err(LogicError::VariableBudget { got: 5, budget: 4 })));
    }
}
