//! Canonical rendering: deterministic text for humans and golden files,
//! and a structured JSON document for machine consumers. Text output is
//! byte-deterministic for a fixed input and flags, and every polynomial
//! string parses back to the same canonical value.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::border::OrderIdeal;
use crate::compsys::{
    BorderSystem, Branch, ComprehensiveBorderBasis, SpecializedBasis, VerifyReport,
};
use crate::context::{Block, Ctx};
use crate::domain::{rat_sign, rat_to_string, Rat, QQ};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::param::{split_param_coeffs, PPoly, ParamRing};
use crate::parametric::{Condition, Specialization};
use crate::poly::Poly;

/// Renders a monomial with variable names, `x^2*y` style.
pub fn render_monomial(m: &Monomial, ctx: &Ctx, block: Block) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for i in 0..m.len() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        let name = ctx.name(block, i);
        if e == 1 {
            parts.push(name.to_string());
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

fn join_terms(terms: Vec<(i32, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (sign, body)) in terms.into_iter().enumerate() {
        if i == 0 {
            if sign < 0 {
                out.push('-');
            }
        } else if sign < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}

fn rat_term_body(c: &Rat, mono: &str) -> String {
    let mag = c.clone().abs();
    let mag_str = rat_to_string(&mag);
    if mono == "1" {
        mag_str
    } else if mag_str == "1" {
        mono.to_string()
    } else {
        format!("{mag_str}*{mono}")
    }
}

/// Renders a polynomial with rational coefficients, terms descending in
/// `ord`.
pub fn render_poly(p: &Poly<Rat>, ord: TermOrder) -> String {
    let ctx = p.ctx();
    let block = p.block();
    let mut terms: Vec<(&Monomial, &Rat)> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| ord.cmp(b, a));
    let rendered = terms
        .into_iter()
        .map(|(m, c)| {
            (
                rat_sign(c),
                rat_term_body(c, &render_monomial(m, ctx, block)),
            )
        })
        .collect();
    join_terms(rendered)
}

/// Renders an element of k[U][X]: main terms descending in `ord`,
/// nonconstant parameter coefficients parenthesized. A polynomial whose
/// only main monomial is 1 renders as its bare parameter coefficient.
pub fn render_coeff_poly(p: &Poly<PPoly>, ord: TermOrder) -> String {
    let ctx = p.ctx();
    let ring = ParamRing::new(ctx);
    if p.is_zero() {
        return "0".to_string();
    }
    if p.num_terms() == 1 {
        if let Some(c) = p.coeff(&Monomial::one()) {
            return render_poly(c, ord);
        }
    }
    let mut terms: Vec<(&Monomial, &PPoly)> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| ord.cmp(b, a));
    let rendered = terms
        .into_iter()
        .map(|(m, c)| {
            let mono = render_monomial(m, ctx, Block::Main);
            if ring.is_constant(c) {
                let r = c.coeff(&Monomial::one()).expect("nonzero constant");
                (rat_sign(r), rat_term_body(r, &mono))
            } else if c.num_terms() == 1 {
                // a single parameter term fuses into the product
                let (pm, r) = c.terms().next().expect("single term");
                let pm_str = render_monomial(pm, ctx, Block::Param);
                let fused = if mono == "1" {
                    pm_str
                } else {
                    format!("{pm_str}*{mono}")
                };
                (rat_sign(r), rat_term_body(r, &fused))
            } else {
                let sign = ring.leading_sign(c);
                let body_poly = if sign < 0 { c.neg(&QQ) } else { c.clone() };
                let body = format!("({})", render_poly(&body_poly, ord));
                if mono == "1" {
                    (sign, body)
                } else {
                    (sign, format!("{body}*{mono}"))
                }
            }
        })
        .collect();
    join_terms(rendered)
}

/// Renders an order ideal ascending in `ord`, `{1, y, x, x*y}` style.
pub fn render_order_ideal(oi: &OrderIdeal, ctx: &Ctx, ord: TermOrder) -> String {
    let mut monos: Vec<&Monomial> = oi.iter().collect();
    monos.sort_by(|a, b| ord.cmp(a, b));
    let parts: Vec<String> = monos
        .iter()
        .map(|m| render_monomial(m, ctx, Block::Main))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn render_point(sigma: &Specialization) -> String {
    let coords: Vec<String> = sigma.values().iter().map(rat_to_string).collect();
    if coords.len() == 1 {
        coords.into_iter().next().unwrap()
    } else {
        format!("({})", coords.join(", "))
    }
}

pub fn render_condition(c: &Condition) -> String {
    let pts: Vec<String> = c.point_list().iter().map(render_point).collect();
    let set = format!("{{{}}}", pts.join(", "));
    match c {
        Condition::Points(_) => set,
        Condition::Complement(_) => format!("complement of {set}"),
    }
}

/// Text form of a border system, one block per branch.
pub fn render_border_system(system: &BorderSystem) -> String {
    let mut out = String::new();
    for (i, branch) in system.branches.iter().enumerate() {
        out.push_str(&format!("branch {}:\n", i + 1));
        out.push_str(&format!(
            "  condition: {}\n",
            render_condition(&branch.condition)
        ));
        out.push_str(&format!(
            "  order_ideal: {}\n",
            render_order_ideal(&branch.order_ideal, &system.ctx, system.ord)
        ));
        out.push_str("  basis:\n");
        for (el, mark) in branch.basis.iter().zip(&branch.marks) {
            let poly = render_coeff_poly(el, system.ord);
            match mark {
                Some(m) => out.push_str(&format!(
                    "    [{}] {}\n",
                    render_monomial(m, &system.ctx, Block::Main),
                    poly
                )),
                None => out.push_str(&format!("    {poly}\n")),
            }
        }
    }
    out
}

/// Text form of a comprehensive border basis, one element per line.
pub fn render_cbb(cbb: &ComprehensiveBorderBasis) -> String {
    let mut out = String::new();
    for (el, mark) in cbb.elements.iter().zip(&cbb.marks) {
        let poly = render_coeff_poly(el, cbb.ord);
        match mark {
            Some(m) => out.push_str(&format!(
                "[{}] {}\n",
                render_monomial(m, &cbb.ctx, Block::Main),
                poly
            )),
            None => out.push_str(&format!("[-] {poly}\n")),
        }
    }
    out
}

pub fn render_specialized(sb: &SpecializedBasis, ctx: &Ctx, ord: TermOrder) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "order_ideal: {}\n",
        render_order_ideal(&sb.order_ideal, ctx, ord)
    ));
    out.push_str("basis:\n");
    for el in &sb.elements {
        out.push_str(&format!("  {}\n", render_poly(el, ord)));
    }
    out
}

pub fn render_report(report: &VerifyReport) -> String {
    let mut out = String::new();
    for failure in &report.structure_failures {
        out.push_str(&format!("FAIL structure: {failure}\n"));
    }
    if report.structure_failures.is_empty() {
        out.push_str("PASS structure: conditions disjoint and covering\n");
    }
    for entry in &report.entries {
        let point = render_point(&entry.point);
        if entry.ok {
            out.push_str(&format!("PASS {} point {}\n", entry.region, point));
        } else {
            out.push_str(&format!(
                "FAIL {} point {}: {}\n",
                entry.region, point, entry.detail
            ));
        }
    }
    out
}

// ---------------------------------------------------------------------
// Structured document
// ---------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
pub struct ConditionDoc {
    pub kind: String,
    pub points: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BranchDoc {
    pub condition: ConditionDoc,
    pub order_ideal: Vec<String>,
    pub basis: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CbbElementDoc {
    pub poly: String,
    pub mark: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CbbDoc {
    pub elements: Vec<CbbElementDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReportEntryDoc {
    pub region: String,
    pub point: Vec<String>,
    pub ok: bool,
    pub detail: String,
}

/// The single tree document every subcommand's structured output uses.
#[derive(Debug, Default, Serialize, Deserialize)]
pub struct StructuredDoc {
    pub main_vars: Vec<String>,
    pub params: Vec<String>,
    pub order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_ideal: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eliminant: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branches: Option<Vec<BranchDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cbb: Option<CbbDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Vec<ReportEntryDoc>>,
}

impl StructuredDoc {
    pub fn new(ctx: &Ctx, order_name: &str) -> Self {
        StructuredDoc {
            main_vars: ctx.main_names().to_vec(),
            params: ctx.param_names().to_vec(),
            order: order_name.to_string(),
            ..Default::default()
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

fn condition_doc(c: &Condition) -> ConditionDoc {
    ConditionDoc {
        kind: match c {
            Condition::Points(_) => "points".to_string(),
            Condition::Complement(_) => "complement".to_string(),
        },
        points: c
            .point_list()
            .iter()
            .map(|s| s.values().iter().map(rat_to_string).collect())
            .collect(),
    }
}

fn order_ideal_doc(oi: &OrderIdeal, ctx: &Ctx, ord: TermOrder) -> Vec<String> {
    let mut monos: Vec<&Monomial> = oi.iter().collect();
    monos.sort_by(|a, b| ord.cmp(a, b));
    monos
        .iter()
        .map(|m| render_monomial(m, ctx, Block::Main))
        .collect()
}

pub fn branch_doc(branch: &Branch, ctx: &Ctx, ord: TermOrder) -> BranchDoc {
    BranchDoc {
        condition: condition_doc(&branch.condition),
        order_ideal: order_ideal_doc(&branch.order_ideal, ctx, ord),
        basis: branch
            .basis
            .iter()
            .map(|b| render_coeff_poly(b, ord))
            .collect(),
    }
}

pub fn border_system_doc(system: &BorderSystem, doc: &mut StructuredDoc) {
    doc.branches = Some(
        system
            .branches
            .iter()
            .map(|b| branch_doc(b, &system.ctx, system.ord))
            .collect(),
    );
    doc.eliminant = Some(
        system
            .eliminant
            .iter()
            .map(|e| render_poly(e, system.ord))
            .collect(),
    );
}

pub fn cbb_doc(cbb: &ComprehensiveBorderBasis, doc: &mut StructuredDoc) {
    doc.cbb = Some(CbbDoc {
        elements: cbb
            .elements
            .iter()
            .zip(&cbb.marks)
            .map(|(el, mark)| CbbElementDoc {
                poly: render_coeff_poly(el, cbb.ord),
                mark: mark
                    .as_ref()
                    .map(|m| render_monomial(m, &cbb.ctx, Block::Main)),
            })
            .collect(),
    });
}

pub fn report_doc(report: &VerifyReport, doc: &mut StructuredDoc) {
    let mut entries: Vec<ReportEntryDoc> = report
        .structure_failures
        .iter()
        .map(|f| ReportEntryDoc {
            region: "structure".into(),
            point: Vec::new(),
            ok: false,
            detail: f.clone(),
        })
        .collect();
    entries.extend(report.entries.iter().map(|e| ReportEntryDoc {
        region: e.region.clone(),
        point: e.point.values().iter().map(rat_to_string).collect(),
        ok: e.ok,
        detail: e.detail.clone(),
    }));
    doc.report = Some(entries);
}

/// Reloads a comprehensive border basis from a structured document.
pub fn cbb_from_doc(doc: &StructuredDoc) -> Result<ComprehensiveBorderBasis> {
    use crate::context::VarContext;
    use crate::order::BaseOrder;
    let ctx = VarContext::new(doc.main_vars.clone(), doc.params.clone())?;
    let base = BaseOrder::from_name(&doc.order).ok_or_else(|| Error::Parse {
        line: 1,
        col: 1,
        msg: format!("unknown order `{}`", doc.order),
    })?;
    let cbb_doc = doc.cbb.as_ref().ok_or_else(|| Error::Parse {
        line: 1,
        col: 1,
        msg: "document has no cbb section".into(),
    })?;
    let mut elements = Vec::new();
    let mut marks = Vec::new();
    let mut provenance = Vec::new();
    for e in &cbb_doc.elements {
        let flat = crate::parse::parse_poly(&e.poly, &ctx, 1, 1)?;
        elements.push(split_param_coeffs(&flat));
        let mark = match &e.mark {
            None => None,
            Some(text) => {
                let p = crate::parse::parse_poly(text, &ctx, 1, 1)?;
                if p.num_terms() != 1 {
                    return Err(Error::Parse {
                        line: 1,
                        col: 1,
                        msg: format!("mark `{text}` is not a single monomial"),
                    });
                }
                let flat_main = p.support().next().cloned().expect("single term");
                Some(flat_main.truncate_vars(ctx.n_main()))
            }
        };
        provenance.push(match mark {
            Some(_) => crate::compsys::Provenance::PointBranch(0),
            None => crate::compsys::Provenance::Eliminant,
        });
        marks.push(mark);
    }
    Ok(ComprehensiveBorderBasis {
        elements,
        marks,
        provenance,
        ctx,
        ord: TermOrder::Base(base),
    })
}

/// Parse-back helper for round-trip checks on nested renderings.
pub fn reparse_coeff_poly(text: &str, ctx: &Ctx) -> Result<Poly<PPoly>> {
    let flat = crate::parse::parse_poly(text, ctx, 1, 1)?;
    Ok(split_param_coeffs(&flat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::VarContext;
    use crate::domain::{rat, ratio};
    use crate::parse::parse_poly;

    #[test]
    fn flat_rendering_is_canonical() {
        let ctx = VarContext::new(["x", "y"], ["z"]).unwrap();
        let p = parse_poly("x^2 - z^2 - 6x + 4z + 5", &ctx, 1, 1).unwrap();
        let s = render_poly(&p, TermOrder::DEGLEX);
        assert_eq!(s, "x^2 - z^2 - 6*x + 4*z + 5");
        // round trip
        assert_eq!(parse_poly(&s, &ctx, 1, 1).unwrap(), p);
    }

    #[test]
    fn zero_renders_as_zero() {
        let ctx = VarContext::new(["x"], []).unwrap();
        let z: Poly<Rat> = Poly::zero(&ctx, Block::Full);
        assert_eq!(render_poly(&z, TermOrder::DEGLEX), "0");
    }

    #[test]
    fn nested_rendering_parenthesizes_parameter_coefficients() {
        let ctx = VarContext::new(["x", "y"], ["z"]).unwrap();
        let flat = parse_poly("x^2 - 6x - (z^2 - 4z - 5)", &ctx, 1, 1).unwrap();
        let nested = split_param_coeffs(&flat);
        let s = render_coeff_poly(&nested, TermOrder::DEGLEX);
        assert_eq!(s, "x^2 - 6*x - (z^2 - 4*z - 5)");
        assert_eq!(reparse_coeff_poly(&s, &ctx).unwrap(), nested);

        let flat = parse_poly("(z-4)x^2 + x - 1", &ctx, 1, 1).unwrap();
        let nested = split_param_coeffs(&flat);
        assert_eq!(
            render_coeff_poly(&nested, TermOrder::DEGLEX),
            "(z - 4)*x^2 + x - 1"
        );

        // rational constants keep the a/b form
        let flat = parse_poly("y^2 - 4y + 1/3(z^2 - 4z + 12)", &ctx, 1, 1).unwrap();
        let nested = split_param_coeffs(&flat);
        assert_eq!(
            render_coeff_poly(&nested, TermOrder::DEGLEX),
            "y^2 - 4*y + (1/3*z^2 - 4/3*z + 4)"
        );
    }

    #[test]
    fn coefficients_render_with_slash() {
        let ctx = VarContext::new(["x"], []).unwrap();
        let p = Poly::from_terms(
            &QQ,
            &ctx,
            Block::Full,
            [(Monomial::var(0), ratio(-3, 7)), (Monomial::one(), rat(2))],
        );
        assert_eq!(render_poly(&p, TermOrder::DEGLEX), "-3/7*x + 2");
    }
}
