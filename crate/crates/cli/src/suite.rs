//! Suite execution: resolves check directives against the document's
//! declared logics, algebras and homomorphisms, runs the corresponding
//! verifiers, and assembles the JSON report.

use crate::document::{CheckDecl, Document, SuiteDecl};
use dualis_core::filters::{check_inverse_images, check_optimal_routes, check_prime_complements, Deductive};
use dualis_core::fixtures::HomFixture;
use dualis_core::logic::{FiniteAlgebra, LogicPresentation};
use dualis_core::report::{Checker, CheckRecord, Report};
use dualis_core::representation::{
    build_representation, check_base_independence, check_section_4_isos, check_theorem_3_3,
    ClosureBase,
};
use dualis_core::space::{
    b_structures, check_identity_laws, check_natural_isos, check_xi, dual_morphism, dual_space,
    verify_space, SPriestleySpace, SpaceError,
};
use dualis_core::subset::{SetFamily, Subset};
use serde::Serialize;

#[derive(Debug)]
pub enum SuiteError {
    /// Precondition of a gated check is not met: exit code 2.
    Gate(String),
    /// Unknown suite or check id: exit code 2.
    Usage(String),
    /// Internal verifier error that is itself a finding: exit code 1 with
    /// the message as a failure record.
    Internal(String),
}

#[derive(Serialize)]
pub struct FixtureReport {
    pub name: String,
    pub checks: Vec<CheckRecord>,
}

#[derive(Serialize)]
pub struct Summary {
    pub fixtures: usize,
    pub checks: usize,
    pub instances: u64,
    pub failures: usize,
    pub outcome: String,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub fixtures: Vec<FixtureReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn failure_count(&self) -> usize {
        self.fixtures.iter().flat_map(|f| &f.checks).map(|c| c.failures.len()).sum()
    }

    pub fn exit_code(&self) -> i32 {
        if self.failure_count() == 0 {
            0
        } else {
            1
        }
    }
}

struct Runner<'a> {
    doc: &'a Document,
    fixtures: Vec<FixtureReport>,
    notes: Vec<String>,
}

impl<'a> Runner<'a> {
    fn push(&mut self, name: String, report: Report) {
        self.notes.extend(report.notes.iter().cloned());
        match self.fixtures.iter_mut().find(|f| f.name == name) {
            Some(f) => f.checks.extend(report.checks),
            None => self.fixtures.push(FixtureReport { name, checks: report.checks }),
        }
    }

    /// All (logic, algebra) pairs the directive applies to.
    fn targets(
        &self,
        check: &CheckDecl,
    ) -> Vec<(&'a LogicPresentation, FiniteAlgebra)> {
        let logic_arg = check.args.iter().find(|(k, _)| k == "logic").map(|(_, v)| v.as_str());
        let algebra_arg = check.args.iter().find(|(k, _)| k == "algebra").map(|(_, v)| v.as_str());
        let mut out = Vec::new();
        for logic in &self.doc.logics {
            if logic_arg.is_some_and(|n| n != logic.name) {
                continue;
            }
            for decl in &self.doc.algebras {
                if algebra_arg.is_some_and(|n| n != decl.name) {
                    continue;
                }
                if let Some(algebra) = decl.realize(logic) {
                    out.push((logic, algebra));
                }
            }
        }
        out
    }

    /// The document's homomorphisms resolvable under a logic.
    fn hom_fixtures(&self, logic: &LogicPresentation) -> Vec<HomFixture> {
        let mut out = Vec::new();
        for hom in &self.doc.homs {
            let (Some(src), Some(tgt)) =
                (self.doc.algebra(&hom.source), self.doc.algebra(&hom.target))
            else {
                continue;
            };
            if !src.matches(logic) || !tgt.matches(logic) {
                continue;
            }
            let (Some(map), Some(source), Some(target)) = (
                self.doc.resolve_hom(hom, logic),
                src.realize(logic),
                tgt.realize(logic),
            ) else {
                continue;
            };
            out.push(HomFixture { name: hom.name.clone(), logic: logic.clone(), source, target, map });
        }
        out
    }

    fn run_check(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        match check.id.as_str() {
            "filters" => self.check_filters(check),
            "optimal-routes" => self.check_optimal_routes(check),
            "separation" => self.check_separation(check),
            "representation" => self.check_representation(check),
            "hull-isos" => self.check_hull_isos(check),
            "dualize" => self.check_dualize(check),
            "morphisms" => self.check_morphisms(check),
            "category" => self.check_category(check),
            "pc" => self.check_pc(check),
            "pdi" => self.check_pdi(check),
            "pdi-single" => self.check_pdi_single(check),
            "uddt" => self.check_uddt(check),
            "pie" => self.check_pie(check),
            "quotient-transfer" => self.check_quotient(check),
            "theorem-free" => self.check_theorem_free(check),
            "corrupted-space" => self.check_corrupted(check),
            other => Err(SuiteError::Usage(format!("unknown check `{other}`"))),
        }
    }

    fn engine<'b>(
        logic: &'b LogicPresentation,
        algebra: &'b FiniteAlgebra,
    ) -> Result<Deductive<'b>, SuiteError> {
        Deductive::new(logic, algebra).map_err(|e| SuiteError::Internal(e.to_string()))
    }

    fn check_filters(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            let ded = Self::engine(logic, &algebra)?;
            let mut report = Report::new();
            let mut ck = Checker::new("filters-form-closure-system", "filters-closed-under-intersection");
            let fi = ded.filters();
            for f in fi.iter() {
                for g in fi.iter() {
                    ck.instance(fi.contains(&f.intersection(g)), || {
                        format!("intersection of {f:?} and {g:?} escapes")
                    });
                }
            }
            if logic.assertions.has_theorems {
                for f in fi.iter() {
                    ck.instance(!f.is_empty(), || "empty filter under a theoremful logic".to_string());
                }
            }
            report.push(ck.finish());
            let mut cl = Checker::new("generation-closure-operator", "generation-is-a-closure-operator");
            for b in ded.carrier().subsets() {
                let fg = ded.generate(&b);
                cl.instance(b.is_subset_of(&fg), || format!("not extensive at {b:?}"));
                cl.instance(ded.generate(&fg) == fg, || format!("not idempotent at {b:?}"));
                for sub in b.subsets() {
                    cl.instance(ded.generate(&sub).is_subset_of(&fg), || {
                        format!("not monotone at {sub:?} within {b:?}")
                    });
                }
            }
            report.push(cl.finish());
            self.push(format!("{}/{}", logic.name, algebra.name), report);
        }
        Ok(())
    }

    fn check_optimal_routes(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            let ded = Self::engine(logic, &algebra)?;
            let mut report = check_optimal_routes(&ded)
                .map_err(|e| SuiteError::Internal(e.to_string()))?;
            report.merge(check_prime_complements(&ded));
            self.push(format!("{}/{}", logic.name, algebra.name), report);
        }
        Ok(())
    }

    fn check_separation(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            let ded = Self::engine(logic, &algebra)?;
            let mut report = Report::new();
            let mut ck = Checker::new("separation-search", "separating-filters-from-ideals");
            let strong = ded.strong_s_ideals().map_err(|e| SuiteError::Internal(e.to_string()))?;
            for f in ded.filters().iter() {
                for i in strong.iter() {
                    if !f.intersection(i).is_empty() {
                        continue;
                    }
                    match ded.separate_optimal(f, i) {
                        Ok(q) => ck.instance(
                            f.is_subset_of(&q) && q.intersection(i).is_empty(),
                            || format!("bad separator for F={f:?}, I={i:?}"),
                        ),
                        Err(e) => ck.fail(format!("F={f:?}, I={i:?}: {e}")),
                    }
                }
            }
            report.push(ck.finish());
            self.push(format!("{}/{}", logic.name, algebra.name), report);
        }
        Ok(())
    }

    fn check_representation(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            let ded = Self::engine(logic, &algebra)?;
            let base = ClosureBase::optimal(&ded).map_err(|e| SuiteError::Internal(e.to_string()))?;
            let (repr, mut report) =
                build_representation(&ded, base).map_err(|e| SuiteError::Internal(e.to_string()))?;
            report.merge(
                check_theorem_3_3(&ded, &repr).map_err(|e| SuiteError::Internal(e.to_string()))?,
            );
            self.push(format!("{}/{}", logic.name, algebra.name), report);
        }
        Ok(())
    }

    fn check_hull_isos(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            let ded = Self::engine(logic, &algebra)?;
            let mut report =
                check_section_4_isos(&ded).map_err(|e| SuiteError::Internal(e.to_string()))?;
            report.merge(
                check_base_independence(&ded).map_err(|e| SuiteError::Internal(e.to_string()))?,
            );
            self.push(format!("{}/{}", logic.name, algebra.name), report);
        }
        Ok(())
    }

    fn dualize_target(
        logic: &LogicPresentation,
        algebra: &FiniteAlgebra,
    ) -> Result<SPriestleySpace, SuiteError> {
        dual_space(logic, algebra).map_err(|e| match e {
            SpaceError::Gate(msg) => SuiteError::Gate(msg),
            other => SuiteError::Internal(other.to_string()),
        })
    }

    fn check_dualize(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            let space = Self::dualize_target(logic, &algebra)?;
            let mut report =
                verify_space(&space).map_err(|e| SuiteError::Internal(e.to_string()))?;
            report
                .merge(check_xi(&space).map_err(|e| SuiteError::Internal(e.to_string()))?);
            let (_, bs_report) =
                b_structures(&space).map_err(|e| SuiteError::Internal(e.to_string()))?;
            report.merge(bs_report);
            self.push(format!("{}/{}", logic.name, algebra.name), report);
        }
        Ok(())
    }

    fn check_morphisms(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        let logic_arg = check.args.iter().find(|(k, _)| k == "logic").map(|(_, v)| v.as_str());
        for logic in &self.doc.logics {
            if logic_arg.is_some_and(|n| n != logic.name) {
                continue;
            }
            for hom in self.hom_fixtures(logic) {
                let (rel, sp_src, sp_tgt, mut report) =
                    dual_morphism(&hom.map, logic, &hom.source, &hom.target).map_err(|e| match e {
                        SpaceError::Gate(msg) => SuiteError::Gate(msg),
                        other => SuiteError::Internal(other.to_string()),
                    })?;
                report.merge(check_identity_laws(&rel, &sp_src, &sp_tgt));
                report.merge(
                    check_inverse_images(logic, &hom.source, &hom.target, &hom.map)
                        .map_err(|e| SuiteError::Internal(e.to_string()))?,
                );
                self.push(format!("{}/hom/{}", logic.name, hom.name), report);
            }
        }
        Ok(())
    }

    fn check_category(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        let logic_arg = check.args.iter().find(|(k, _)| k == "logic").map(|(_, v)| v.as_str());
        for logic in &self.doc.logics {
            if logic_arg.is_some_and(|n| n != logic.name) {
                continue;
            }
            let homs = self.hom_fixtures(logic);
            if homs.is_empty() {
                continue;
            }
            let report = check_natural_isos(logic, &homs).map_err(|e| match e {
                SpaceError::Gate(msg) => SuiteError::Gate(msg),
                other => SuiteError::Internal(other.to_string()),
            })?;
            self.push(format!("{}/category", logic.name), report);
        }
        Ok(())
    }

    fn check_pc(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            let witness = logic.witnesses.pc.clone().ok_or_else(|| {
                SuiteError::Gate(format!("logic {} declares no conjunction witness", logic.name))
            })?;
            let report = dualis_core::properties::check_pc(logic, &witness, &algebra)
                .map_err(|e| match e {
                    SpaceError::Gate(msg) => SuiteError::Gate(msg),
                    other => SuiteError::Internal(other.to_string()),
                })?;
            self.push(format!("{}/{}", logic.name, algebra.name), report);
        }
        Ok(())
    }

    fn check_pdi(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            let witness = logic.witnesses.pdi.clone().ok_or_else(|| {
                SuiteError::Gate(format!("logic {} declares no disjunction witness", logic.name))
            })?;
            let homs = self.hom_fixtures(logic);
            let report = dualis_core::properties::check_pdi(logic, &witness, &algebra, &homs)
                .map_err(|e| match e {
                    SpaceError::Gate(msg) => SuiteError::Gate(msg),
                    other => SuiteError::Internal(other.to_string()),
                })?;
            self.push(format!("{}/{}", logic.name, algebra.name), report);
        }
        Ok(())
    }

    fn check_pdi_single(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            let space = Self::dualize_target(logic, &algebra)?;
            // the splitting condition also runs over the duals of every
            // declared homomorphism of this logic
            let mut rels = Vec::new();
            for hom in self.hom_fixtures(logic) {
                let (rel, sp_src, sp_tgt, _) =
                    dual_morphism(&hom.map, logic, &hom.source, &hom.target).map_err(|e| match e {
                        SpaceError::Gate(msg) => SuiteError::Gate(msg),
                        other => SuiteError::Internal(other.to_string()),
                    })?;
                rels.push((rel, sp_src, sp_tgt));
            }
            let borrowed: Vec<(&dualis_core::space::SPriestleyMorphism, &SPriestleySpace, &SPriestleySpace)> =
                rels.iter().map(|(r, s1, s2)| (r, s1, s2)).collect();
            let report = dualis_core::properties::check_pdi_single_dual(&space, &borrowed)
                .map_err(|e| SuiteError::Internal(e.to_string()))?;
            self.push(format!("{}/{}", logic.name, algebra.name), report);
        }
        Ok(())
    }

    fn check_uddt(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            let witness = logic.witnesses.ddt.clone().ok_or_else(|| {
                SuiteError::Gate(format!("logic {} declares no deduction witness", logic.name))
            })?;
            let report = dualis_core::properties::check_uddt(logic, &witness, &algebra)
                .map_err(|e| match e {
                    SpaceError::Gate(msg) => SuiteError::Gate(msg),
                    other => SuiteError::Internal(other.to_string()),
                })?;
            self.push(format!("{}/{}", logic.name, algebra.name), report);
        }
        Ok(())
    }

    fn check_pie(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            let report =
                dualis_core::properties::check_pie(logic, logic.witnesses.pie.as_ref(), &algebra)
                    .map_err(|e| match e {
                        SpaceError::Gate(msg) => SuiteError::Gate(msg),
                        other => SuiteError::Internal(other.to_string()),
                    })?;
            self.push(format!("{}/{}", logic.name, algebra.name), report);
        }
        Ok(())
    }

    fn check_quotient(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        let logic_arg = check.args.iter().find(|(k, _)| k == "logic").map(|(_, v)| v.as_str());
        for logic in &self.doc.logics {
            if logic_arg.is_some_and(|n| n != logic.name) {
                continue;
            }
            let homs = self.hom_fixtures(logic);
            if homs.is_empty() {
                continue;
            }
            let report = dualis_core::properties::quotient_transfer_check(logic, &homs)
                .map_err(|e| SuiteError::Internal(e.to_string()))?;
            self.push(format!("{}/quotients", logic.name), report);
        }
        Ok(())
    }

    fn check_theorem_free(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            if logic.assertions.has_theorems || logic.has_axioms() {
                return Err(SuiteError::Gate(format!(
                    "check theorem-free requires a theorem-free logic, got {}",
                    logic.name
                )));
            }
            let ded = Self::engine(logic, &algebra)?;
            let mut report = Report::new();
            let mut ck = Checker::new("empty-filter-is-optimal", "theorem-free-logics-admit-empty-optimal-filter");
            let n = algebra.size();
            ck.instance(ded.filters().contains(&Subset::empty(n)), || {
                "empty set is not a filter".to_string()
            });
            let opt = ded.optimal_filters().map_err(|e| SuiteError::Internal(e.to_string()))?;
            ck.instance(opt.contains(&Subset::empty(n)), || {
                "empty set is not an optimal filter".to_string()
            });
            report.push(ck.finish());
            self.push(format!("{}/{}", logic.name, algebra.name), report);
        }
        Ok(())
    }

    fn check_corrupted(&mut self, check: &CheckDecl) -> Result<(), SuiteError> {
        for (logic, algebra) in self.targets(check) {
            let space = Self::dualize_target(logic, &algebra)?;
            let full = Subset::full(space.points());
            let family = SetFamily::from_members(
                space.points(),
                space.family.iter().filter(|u| **u != full).copied(),
            );
            let mut tables = Vec::new();
            for conn in 0..logic.signature.len() {
                let arity = logic.signature.arity(conn);
                tables.push(vec![0usize; family.len().pow(arity as u32)]);
            }
            let family_algebra =
                FiniteAlgebra::new("corrupted", &logic.signature, family.len(), tables)
                    .map_err(|e| SuiteError::Internal(e.to_string()))?;
            let corrupted = SPriestleySpace::assemble(
                logic.clone(),
                space.poset.clone(),
                family,
                family_algebra,
            );
            let report =
                verify_space(&corrupted).map_err(|e| SuiteError::Internal(e.to_string()))?;
            self.push(format!("{}/{}/corrupted", logic.name, algebra.name), report);
        }
        Ok(())
    }
}

/// Runs a suite against a document, producing the JSON-serializable report.
pub fn run_suite(doc: &Document, suite_name: &str) -> Result<SuiteReport, SuiteError> {
    let suite: &SuiteDecl = doc
        .suite(suite_name)
        .ok_or_else(|| SuiteError::Usage(format!("unknown suite `{suite_name}`")))?;
    let mut runner = Runner { doc, fixtures: Vec::new(), notes: Vec::new() };
    for check in &suite.checks {
        runner.run_check(check)?;
    }
    let checks: usize = runner.fixtures.iter().map(|f| f.checks.len()).sum();
    let instances: u64 =
        runner.fixtures.iter().flat_map(|f| &f.checks).map(|c| c.instances).sum();
    let failures: usize =
        runner.fixtures.iter().flat_map(|f| &f.checks).map(|c| c.failures.len()).sum();
    let outcome = if failures == 0 { "pass" } else { "fail" };
    Ok(SuiteReport {
        suite: suite_name.to_string(),
        summary: Summary {
            fixtures: runner.fixtures.len(),
            checks,
            instances,
            failures,
            outcome: outcome.to_string(),
            notes: runner.notes,
        },
        fixtures: runner.fixtures,
    })
}
