//! The workbench document language: named algebras, logic presentations
//! with assertions and witnesses, homomorphisms, and suites. Line/column
//! diagnostics on parse errors; the printer emits the canonical form, and
//! parse-then-print is idempotent.

use dualis_core::logic::{
    variable_index, variable_name, Assertions, FiniteAlgebra, LogicPresentation, Rule, Signature,
    Term, Witnesses,
};
use std::fmt;

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
pub struct OpDecl {
    pub name: String,
    pub arity: usize,
    /// Row-major table of element names.
    pub table: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraDecl {
    pub name: String,
    pub elements: Vec<String>,
    pub ops: Vec<OpDecl>,
}

impl AlgebraDecl {
    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    /// Builds the finite algebra for a logic's signature, picking the
    /// needed tables by name. Extra operations are allowed and ignored.
    pub fn realize(&self, logic: &LogicPresentation) -> Option<FiniteAlgebra> {
        let mut tables = Vec::new();
        for (name, arity) in logic.signature.iter() {
            let op = self.ops.iter().find(|o| o.name == name && o.arity == arity)?;
            let table: Option<Vec<usize>> =
                op.table.iter().map(|e| self.element_index(e)).collect();
            tables.push(table?);
        }
        FiniteAlgebra::new(&self.name, &logic.signature, self.elements.len(), tables).ok()
    }

    pub fn matches(&self, logic: &LogicPresentation) -> bool {
        logic
            .signature
            .iter()
            .all(|(name, arity)| self.ops.iter().any(|o| o.name == name && o.arity == arity))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    /// Pairs of element names, source to target.
    pub pairs: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckDecl {
    pub id: String,
    /// Optional key=value arguments (logic=, algebra=).
    pub args: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteDecl {
    pub name: String,
    pub checks: Vec<CheckDecl>,
}

#[derive(Debug, Default)]
pub struct Document {
    pub algebras: Vec<AlgebraDecl>,
    pub logics: Vec<LogicPresentation>,
    pub homs: Vec<HomDecl>,
    pub suites: Vec<SuiteDecl>,
}

impl Document {
    pub fn algebra(&self, name: &str) -> Option<&AlgebraDecl> {
        self.algebras.iter().find(|a| a.name == name)
    }

    pub fn logic(&self, name: &str) -> Option<&LogicPresentation> {
        self.logics.iter().find(|l| l.name == name)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteDecl> {
        self.suites.iter().find(|s| s.name == name)
    }

    /// The resolved homomorphism as an index map, verified against every
    /// operation the two algebras share with the given logic.
    pub fn resolve_hom(&self, hom: &HomDecl, logic: &LogicPresentation) -> Option<Vec<usize>> {
        let src = self.algebra(&hom.source)?;
        let tgt = self.algebra(&hom.target)?;
        let mut map = vec![usize::MAX; src.elements.len()];
        for (from, to) in &hom.pairs {
            map[src.element_index(from)?] = tgt.element_index(to)?;
        }
        if map.contains(&usize::MAX) {
            return None;
        }
        let a = src.realize(logic)?;
        let b = tgt.realize(logic)?;
        a.check_homomorphism(&logic.signature, &map, &b).ok()?;
        Some(map)
    }
}

// ---------------------------------------------------------------------
// tokenizer

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Punct(&'static str),
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    for (lineno, raw_line) in text.lines().enumerate() {
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let mut chars = line.char_indices().peekable();
        while let Some(&(start, c)) = chars.peek() {
            let (lineno, col) = (lineno + 1, start + 1);
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            if c == '|' {
                chars.next();
                if let Some(&(_, '-')) = chars.peek() {
                    chars.next();
                    out.push(Spanned { tok: Tok::Punct("|-"), line: lineno, col });
                } else {
                    out.push(Spanned { tok: Tok::Punct("|"), line: lineno, col });
                }
                continue;
            }
            if c == '-' {
                chars.next();
                if let Some(&(_, '>')) = chars.peek() {
                    chars.next();
                    out.push(Spanned { tok: Tok::Punct("->"), line: lineno, col });
                    continue;
                }
                return Err(ParseError { line: lineno, col, message: "stray `-`".into() });
            }
            if c == '↦' {
                chars.next();
                out.push(Spanned { tok: Tok::Punct("|->"), line: lineno, col });
                continue;
            }
            let punct = match c {
                '{' => Some("{"),
                '}' => Some("}"),
                ':' => Some(":"),
                ';' => Some(";"),
                ',' => Some(","),
                '/' => Some("/"),
                '(' => Some("("),
                ')' => Some(")"),
                '=' => Some("="),
                _ => None,
            };
            if let Some(p) = punct {
                chars.next();
                out.push(Spanned { tok: Tok::Punct(p), line: lineno, col });
                continue;
            }
            if c.is_alphanumeric() || c == '_' {
                let mut ident = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' || d == '-' {
                        // identifiers may carry dashes (check ids), but a
                        // dash starting an arrow ends the identifier
                        if d == '-' {
                            let mut ahead = chars.clone();
                            ahead.next();
                            if matches!(ahead.peek(), Some(&(_, '>'))) {
                                break;
                            }
                        }
                        ident.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Spanned { tok: Tok::Ident(ident), line: lineno, col });
                continue;
            }
            return Err(ParseError {
                line: lineno,
                col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// parser

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn error_here(&self, message: String) -> ParseError {
        match self.toks.get(self.pos.min(self.toks.len().saturating_sub(1))) {
            Some(s) => ParseError { line: s.line, col: s.col, message },
            None => ParseError { line: 0, col: 0, message },
        }
    }

    fn next(&mut self) -> Result<Spanned, ParseError> {
        let s = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.error_here("unexpected end of input".into()))?;
        self.pos += 1;
        Ok(s)
    }

    fn expect_punct(&mut self, p: &str) -> Result<(), ParseError> {
        let s = self.next()?;
        match &s.tok {
            Tok::Punct(q) if *q == p => Ok(()),
            other => Err(ParseError {
                line: s.line,
                col: s.col,
                message: format!("expected `{p}`, found `{other:?}`"),
            }),
        }
    }

    fn expect_ident(&mut self) -> Result<(String, usize, usize), ParseError> {
        let s = self.next()?;
        match s.tok {
            Tok::Ident(i) => Ok((i, s.line, s.col)),
            other => Err(ParseError {
                line: s.line,
                col: s.col,
                message: format!("expected identifier, found `{other:?}`"),
            }),
        }
    }

    fn eat_punct(&mut self, p: &str) -> bool {
        if matches!(self.peek(), Some(Spanned { tok: Tok::Punct(q), .. }) if *q == p) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

}

fn parse_term(p: &mut Parser, sig: &Signature) -> Result<Term, ParseError> {
    let (name, line, col) = p.expect_ident()?;
    if p.eat_punct("(") {
        let conn = sig.index_of(&name).ok_or(ParseError {
            line,
            col,
            message: format!("unknown connective `{name}`"),
        })?;
        let mut args = Vec::new();
        if !p.eat_punct(")") {
            loop {
                args.push(parse_term(p, sig)?);
                if p.eat_punct(")") {
                    break;
                }
                p.expect_punct(",")?;
            }
        }
        Term::app(sig, conn, args).map_err(|e| ParseError { line, col, message: e.to_string() })
    } else if let Some(conn) = sig.index_of(&name) {
        Term::app(sig, conn, vec![]).map_err(|e| ParseError { line, col, message: e.to_string() })
    } else if let Some(v) = variable_index(&name) {
        Ok(Term::Var(v))
    } else {
        Err(ParseError { line, col, message: format!("unknown term symbol `{name}`") })
    }
}

fn parse_algebra(p: &mut Parser) -> Result<AlgebraDecl, ParseError> {
    let (name, ..) = p.expect_ident()?;
    p.expect_punct("{")?;
    let mut elements = Vec::new();
    let mut ops = Vec::new();
    while !p.eat_punct("}") {
        let (kw, line, col) = p.expect_ident()?;
        match kw.as_str() {
            "elements" => {
                p.expect_punct(":")?;
                while !p.eat_punct(";") {
                    let (e, line, col) = p.expect_ident()?;
                    if elements.contains(&e) {
                        return Err(ParseError {
                            line,
                            col,
                            message: format!("duplicate element `{e}`"),
                        });
                    }
                    elements.push(e);
                }
            }
            "op" => {
                let (op_name, ..) = p.expect_ident()?;
                p.expect_punct("/")?;
                let (arity_str, aline, acol) = p.expect_ident()?;
                let arity: usize = arity_str.parse().map_err(|_| ParseError {
                    line: aline,
                    col: acol,
                    message: format!("bad arity `{arity_str}`"),
                })?;
                p.expect_punct("{")?;
                let mut table = Vec::new();
                while !p.eat_punct("}") {
                    let (e, ..) = p.expect_ident()?;
                    table.push(e);
                }
                p.eat_punct(";");
                let expected = elements.len().pow(arity as u32);
                if table.len() != expected {
                    return Err(ParseError {
                        line,
                        col,
                        message: format!(
                            "op `{op_name}/{arity}` needs {expected} entries, found {}",
                            table.len()
                        ),
                    });
                }
                for e in &table {
                    if !elements.contains(e) {
                        return Err(ParseError {
                            line,
                            col,
                            message: format!("op `{op_name}` uses undeclared element `{e}`"),
                        });
                    }
                }
                ops.push(OpDecl { name: op_name, arity, table });
            }
            other => {
                return Err(ParseError {
                    line,
                    col,
                    message: format!("expected `elements` or `op`, found `{other}`"),
                })
            }
        }
    }
    Ok(AlgebraDecl { name, elements, ops })
}

fn parse_logic(p: &mut Parser) -> Result<LogicPresentation, ParseError> {
    let (name, nline, ncol) = p.expect_ident()?;
    p.expect_punct("{")?;
    let mut connectives: Vec<(String, usize)> = Vec::new();
    let mut rules_raw: Vec<(Vec<Term>, Term)> = Vec::new();
    let mut assertions = Assertions::default();
    let mut witnesses = Witnesses::default();
    let mut sig = Signature::new(&[]).unwrap();
    while !p.eat_punct("}") {
        let (kw, line, col) = p.expect_ident()?;
        match kw.as_str() {
            "connectives" => {
                p.expect_punct(":")?;
                while !p.eat_punct(";") {
                    let (cname, ..) = p.expect_ident()?;
                    p.expect_punct("/")?;
                    let (arity_str, aline, acol) = p.expect_ident()?;
                    let arity: usize = arity_str.parse().map_err(|_| ParseError {
                        line: aline,
                        col: acol,
                        message: format!("bad arity `{arity_str}`"),
                    })?;
                    connectives.push((cname, arity));
                    p.eat_punct(",");
                }
                let refs: Vec<(&str, usize)> =
                    connectives.iter().map(|(n, a)| (n.as_str(), *a)).collect();
                sig = Signature::new(&refs)
                    .map_err(|e| ParseError { line, col, message: e.to_string() })?;
            }
            "rule" => {
                p.expect_punct(":")?;
                let mut premises = Vec::new();
                if !p.eat_punct("|-") {
                    loop {
                        premises.push(parse_term(p, &sig)?);
                        if p.eat_punct("|-") {
                            break;
                        }
                        p.expect_punct(",")?;
                    }
                }
                let conclusion = parse_term(p, &sig)?;
                p.expect_punct(";")?;
                rules_raw.push((premises, conclusion));
            }
            "assert" => {
                p.expect_punct(":")?;
                while !p.eat_punct(";") {
                    let (flag, fline, fcol) = p.expect_ident()?;
                    match flag.as_str() {
                        "congruential" => assertions.congruential = true,
                        "filter-distributive" => assertions.filter_distributive = true,
                        "has-theorems" => assertions.has_theorems = true,
                        "protoalgebraic" => assertions.protoalgebraic = true,
                        other => {
                            return Err(ParseError {
                                line: fline,
                                col: fcol,
                                message: format!("unknown assertion `{other}`"),
                            })
                        }
                    }
                }
            }
            "witness" => {
                p.expect_punct(":")?;
                loop {
                    let (key, kline, kcol) = p.expect_ident()?;
                    p.expect_punct("=")?;
                    match key.as_str() {
                        "pc" => witnesses.pc = Some(parse_term(p, &sig)?),
                        "ddt" => witnesses.ddt = Some(parse_term(p, &sig)?),
                        "pie" => witnesses.pie = Some(parse_term(p, &sig)?),
                        "pdi" => {
                            if p.eat_punct("{") {
                                let mut terms = Vec::new();
                                loop {
                                    terms.push(parse_term(p, &sig)?);
                                    if p.eat_punct("}") {
                                        break;
                                    }
                                    p.expect_punct(",")?;
                                }
                                witnesses.pdi = Some(terms);
                            } else {
                                witnesses.pdi = Some(vec![parse_term(p, &sig)?]);
                            }
                        }
                        other => {
                            return Err(ParseError {
                                line: kline,
                                col: kcol,
                                message: format!("unknown witness kind `{other}`"),
                            })
                        }
                    }
                    if p.eat_punct(";") {
                        break;
                    }
                    p.expect_punct("|")?;
                }
            }
            other => {
                return Err(ParseError {
                    line,
                    col,
                    message: format!("unexpected `{other}` in logic block"),
                })
            }
        }
    }
    let rules: Vec<Rule> =
        rules_raw.into_iter().map(|(prem, concl)| Rule::new(prem, concl)).collect();
    LogicPresentation::new(&name, sig, rules, assertions, witnesses).map_err(|e| ParseError {
        line: nline,
        col: ncol,
        message: e.to_string(),
    })
}

fn parse_hom(p: &mut Parser) -> Result<HomDecl, ParseError> {
    let (name, ..) = p.expect_ident()?;
    p.expect_punct(":")?;
    let (source, ..) = p.expect_ident()?;
    p.expect_punct("->")?;
    let (target, ..) = p.expect_ident()?;
    p.expect_punct("{")?;
    let mut pairs = Vec::new();
    while !p.eat_punct("}") {
        let (from, ..) = p.expect_ident()?;
        // canonical arrow is ↦; the ascii type arrow is tolerated here
        if !p.eat_punct("|->") {
            p.expect_punct("->")?;
        }
        let (to, ..) = p.expect_ident()?;
        p.eat_punct(";");
        pairs.push((from, to));
    }
    Ok(HomDecl { name, source, target, pairs })
}

fn parse_suite(p: &mut Parser) -> Result<SuiteDecl, ParseError> {
    let (name, ..) = p.expect_ident()?;
    p.expect_punct("{")?;
    let mut checks = Vec::new();
    while !p.eat_punct("}") {
        let (kw, line, col) = p.expect_ident()?;
        if kw != "check" {
            return Err(ParseError {
                line,
                col,
                message: format!("expected `check`, found `{kw}`"),
            });
        }
        let (id, ..) = p.expect_ident()?;
        let mut args = Vec::new();
        while !p.eat_punct(";") {
            let (key, ..) = p.expect_ident()?;
            p.expect_punct("=")?;
            let (value, ..) = p.expect_ident()?;
            args.push((key, value));
        }
        checks.push(CheckDecl { id, args });
    }
    Ok(SuiteDecl { name, checks })
}

/// Parses a document, resolving all references and verifying homomorphism
/// tables against the operation tables.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0 };
    let mut doc = Document::default();
    while p.peek().is_some() {
        let (kw, line, col) = p.expect_ident()?;
        match kw.as_str() {
            "algebra" => doc.algebras.push(parse_algebra(&mut p)?),
            "logic" => doc.logics.push(parse_logic(&mut p)?),
            "hom" => doc.homs.push(parse_hom(&mut p)?),
            "suite" => doc.suites.push(parse_suite(&mut p)?),
            other => {
                return Err(ParseError {
                    line,
                    col,
                    message: format!("expected a top-level declaration, found `{other}`"),
                })
            }
        }
    }
    // reference resolution and load-time verification
    for hom in &doc.homs {
        let src = doc.algebra(&hom.source).ok_or(ParseError {
            line: 0,
            col: 0,
            message: format!("hom `{}` references undeclared algebra `{}`", hom.name, hom.source),
        })?;
        let tgt = doc.algebra(&hom.target).ok_or(ParseError {
            line: 0,
            col: 0,
            message: format!("hom `{}` references undeclared algebra `{}`", hom.name, hom.target),
        })?;
        for (from, to) in &hom.pairs {
            if src.element_index(from).is_none() {
                return Err(ParseError {
                    line: 0,
                    col: 0,
                    message: format!("hom `{}` maps undeclared element `{from}`", hom.name),
                });
            }
            if tgt.element_index(to).is_none() {
                return Err(ParseError {
                    line: 0,
                    col: 0,
                    message: format!("hom `{}` targets undeclared element `{to}`", hom.name),
                });
            }
        }
        for e in &src.elements {
            if !hom.pairs.iter().any(|(from, _)| from == e) {
                return Err(ParseError {
                    line: 0,
                    col: 0,
                    message: format!("hom `{}` leaves element `{e}` unmapped", hom.name),
                });
            }
        }
        // verified against every logic whose signature both algebras carry
        let mut verified_somewhere = doc.logics.is_empty();
        for logic in &doc.logics {
            if src.matches(logic) && tgt.matches(logic) {
                verified_somewhere = true;
                if doc.resolve_hom(hom, logic).is_none() {
                    return Err(ParseError {
                        line: 0,
                        col: 0,
                        message: format!(
                            "hom `{}` is not a homomorphism for logic `{}`",
                            hom.name, logic.name
                        ),
                    });
                }
            }
        }
        if !verified_somewhere {
            return Err(ParseError {
                line: 0,
                col: 0,
                message: format!("hom `{}` fits no declared logic", hom.name),
            });
        }
    }
    for suite in &doc.suites {
        for check in &suite.checks {
            for (key, value) in &check.args {
                let ok = match key.as_str() {
                    "logic" => doc.logic(value).is_some(),
                    "algebra" => doc.algebra(value).is_some(),
                    _ => true,
                };
                if !ok {
                    return Err(ParseError {
                        line: 0,
                        col: 0,
                        message: format!(
                            "suite `{}` references undeclared {key} `{value}`",
                            suite.name
                        ),
                    });
                }
            }
        }
    }
    Ok(doc)
}

// ---------------------------------------------------------------------
// printer

fn render_term(term: &Term, sig: &Signature) -> String {
    match term {
        Term::Var(v) => variable_name(*v),
        Term::App(c, args) => {
            if args.is_empty() {
                sig.name(*c).to_string()
            } else {
                let inner: Vec<String> = args.iter().map(|t| render_term(t, sig)).collect();
                format!("{}({})", sig.name(*c), inner.join(","))
            }
        }
    }
}

/// Emits the canonical textual form of a document.
pub fn print_document(doc: &Document) -> String {
    let mut out = String::new();
    for a in &doc.algebras {
        out.push_str(&format!("algebra {} {{\n", a.name));
        out.push_str(&format!("  elements: {};\n", a.elements.join(" ")));
        for op in &a.ops {
            out.push_str(&format!(
                "  op {}/{} {{ {} }};\n",
                op.name,
                op.arity,
                op.table.join(" ")
            ));
        }
        out.push_str("}\n");
    }
    for l in &doc.logics {
        out.push_str(&format!("logic {} {{\n", l.name));
        let conns: Vec<String> =
            l.signature.iter().map(|(n, a)| format!("{n}/{a}")).collect();
        out.push_str(&format!("  connectives: {};\n", conns.join(", ")));
        for rule in &l.rules {
            let prem: Vec<String> =
                rule.premises.iter().map(|t| render_term(t, &l.signature)).collect();
            if prem.is_empty() {
                out.push_str(&format!("  rule: |- {};\n", render_term(&rule.conclusion, &l.signature)));
            } else {
                out.push_str(&format!(
                    "  rule: {} |- {};\n",
                    prem.join(", "),
                    render_term(&rule.conclusion, &l.signature)
                ));
            }
        }
        let mut flags = Vec::new();
        if l.assertions.congruential {
            flags.push("congruential");
        }
        if l.assertions.filter_distributive {
            flags.push("filter-distributive");
        }
        if l.assertions.has_theorems {
            flags.push("has-theorems");
        }
        if l.assertions.protoalgebraic {
            flags.push("protoalgebraic");
        }
        if !flags.is_empty() {
            out.push_str(&format!("  assert: {};\n", flags.join(" ")));
        }
        let mut wits = Vec::new();
        if let Some(t) = &l.witnesses.pc {
            wits.push(format!("pc={}", render_term(t, &l.signature)));
        }
        if let Some(ts) = &l.witnesses.pdi {
            if ts.len() == 1 {
                wits.push(format!("pdi={}", render_term(&ts[0], &l.signature)));
            } else {
                let inner: Vec<String> =
                    ts.iter().map(|t| render_term(t, &l.signature)).collect();
                wits.push(format!("pdi={{{}}}", inner.join(",")));
            }
        }
        if let Some(t) = &l.witnesses.ddt {
            wits.push(format!("ddt={}", render_term(t, &l.signature)));
        }
        if let Some(t) = &l.witnesses.pie {
            wits.push(format!("pie={}", render_term(t, &l.signature)));
        }
        if !wits.is_empty() {
            out.push_str(&format!("  witness: {};\n", wits.join(" | ")));
        }
        out.push_str("}\n");
    }
    for h in &doc.homs {
        let pairs: Vec<String> =
            h.pairs.iter().map(|(from, to)| format!("{from} ↦ {to};")).collect();
        out.push_str(&format!(
            "hom {} : {} -> {} {{ {} }}\n",
            h.name,
            h.source,
            h.target,
            pairs.join(" ")
        ));
    }
    for s in &doc.suites {
        out.push_str(&format!("suite {} {{\n", s.name));
        for c in &s.checks {
            let mut line = format!("  check {}", c.id);
            for (k, v) in &c.args {
                line.push_str(&format!(" {k}={v}"));
            }
            out.push_str(&line);
            out.push_str(";\n");
        }
        out.push_str("}\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
# the diamond under the meet logic
algebra M4 {
  elements: 0 a b 1;
  op and/2 { 0 0 0 0 0 a 0 a 0 0 b b 0 a b 1 };
  op top/0 { 1 };
}
logic LTOP {
  connectives: and/2, top/0;
  rule: |- top;
  rule: p, q |- and(p,q);
  rule: and(p,q) |- p;
  rule: and(p,q) |- q;
  assert: congruential filter-distributive has-theorems;
  witness: pc=and(p,q);
}
hom id_M4 : M4 -> M4 { 0 ↦ 0; a ↦ a; b ↦ b; 1 ↦ 1; }
suite full-duality {
  check filters;
  check dualize algebra=M4;
}
"#;

    #[test]
    fn sample_document_parses() {
        let doc = parse_document(SAMPLE).unwrap();
        assert_eq!(doc.algebras.len(), 1);
        assert_eq!(doc.logics.len(), 1);
        assert_eq!(doc.homs.len(), 1);
        assert_eq!(doc.suites.len(), 1);
        let logic = &doc.logics[0];
        assert_eq!(logic.rules.len(), 4);
        assert!(logic.assertions.has_theorems);
        let m4 = doc.algebra("M4").unwrap().realize(logic).unwrap();
        assert_eq!(m4.apply(0, &[1, 2]), 0);
    }

    #[test]
    fn print_parse_is_idempotent() {
        let doc = parse_document(SAMPLE).unwrap();
        let canonical = print_document(&doc);
        let reparsed = parse_document(&canonical).unwrap();
        assert_eq!(print_document(&reparsed), canonical);
    }

    #[test]
    fn arity_error_has_a_span() {
        let bad = SAMPLE.replace("rule: p, q |- and(p,q);", "rule: p, q |- and(p);");
        let err = parse_document(&bad).unwrap_err();
        assert!(err.message.contains("expects 2 arguments"), "{err}");
        assert!(err.line > 0);
    }

    #[test]
    fn unresolved_reference_is_an_error() {
        let bad = SAMPLE.replace("check dualize algebra=M4;", "check dualize algebra=M9;");
        let err = parse_document(&bad).unwrap_err();
        assert!(err.message.contains("undeclared algebra `M9`"), "{err}");
    }

    #[test]
    fn non_homomorphism_is_rejected_at_load() {
        let bad = SAMPLE.replace("a ↦ a;", "a ↦ 1;");
        let err = parse_document(&bad).unwrap_err();
        assert!(err.message.contains("not a homomorphism"), "{err}");
    }

    #[test]
    fn ascii_arrow_is_accepted_in_hom_pairs() {
        let ascii = SAMPLE.replace('↦', "->");
        let doc = parse_document(&ascii).unwrap();
        assert_eq!(doc.homs[0].pairs.len(), 4);
        // the canonical printer normalizes back to the mapping arrow
        assert!(print_document(&doc).contains('↦'));
    }
}
