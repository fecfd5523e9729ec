//! Border systems, comprehensive border bases and the verification oracle.
//!
//! The pipeline: eliminate the main variables to get the parameter
//! eliminant, solve for its rational variety, run a conditional border
//! basis per point, compress, and assemble the comprehensive basis by
//! switching branch contributions on and off with vanishing polynomials.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::border::{check_border_basis, sorted_border, BorderBasis, OrderIdeal};
use crate::context::{Block, Ctx};
use crate::domain::{rat_to_string, Domain, FieldDomain, Rat, QQ};
use crate::error::{Error, Result};
use crate::groebner::{
    eff_leading, elimination_ideal, is_zero_dimensional, make_monic, normal_form,
    reduced_groebner_basis, staircase_complement,
};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::param::{
    in_param_subring, inject_fractions, primitive_param_form, specialize_poly, split_param_coeffs,
    PFrac, PPoly, ParamRing, SigmaFracField,
};
use crate::parametric::{
    color_polynomial, rational_variety, to_scalar_basis, Condition,
    ConditionalBorderBasisAlgorithm, Specialization, TermOrderBorderBasis,
};
use crate::poly::Poly;

/// How the vanishing polynomial of a point is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VanishingMode {
    /// Sum of squares of the coordinate differences.
    #[default]
    Squares,
    /// Linear factors; single-parameter instances only.
    LinearUnivariate,
}

/// What the generic (complement) branch carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GenericBranchPayload {
    /// The original generators.
    #[default]
    Generators,
    /// The generators of the parameter eliminant.
    Eliminant,
}

/// One branch of a border system.
#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    pub condition: Condition,
    pub order_ideal: OrderIdeal,
    pub basis: Vec<Poly<PPoly>>,
    /// Marked border monomial per element; `None` on the complement branch.
    pub marks: Vec<Option<Monomial>>,
}

/// A finite case distinction of parameter space with a conditional scalar
/// border basis per case.
#[derive(Debug, Clone, PartialEq)]
pub struct BorderSystem {
    pub branches: Vec<Branch>,
    /// Reduced lex basis of the parameter eliminant, kept for the
    /// comprehensive construction.
    pub eliminant: Vec<Poly<Rat>>,
    pub ctx: Ctx,
    pub ord: TermOrder,
}

/// A point-wise Gröbner system: conditional reduced bases per variety
/// point plus the generic branch.
#[derive(Debug, Clone, PartialEq)]
pub struct PointwiseGroebnerSystem {
    pub branches: Vec<(Condition, Vec<Poly<PPoly>>)>,
    pub eliminant: Vec<Poly<Rat>>,
    pub ctx: Ctx,
    pub ord: TermOrder,
}

/// Where a comprehensive-basis element came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    PointBranch(usize),
    Eliminant,
}

/// A single polynomial set that specializes to a scalar border basis
/// under every specialization.
#[derive(Debug, Clone, PartialEq)]
pub struct ComprehensiveBorderBasis {
    pub elements: Vec<Poly<PPoly>>,
    /// Marked border-form monomial per element; parameter-only elements
    /// are unmarked.
    pub marks: Vec<Option<Monomial>>,
    pub provenance: Vec<Provenance>,
    pub ctx: Ctx,
    pub ord: TermOrder,
}

/// Result of specializing a comprehensive basis at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecializedBasis {
    pub order_ideal: OrderIdeal,
    pub elements: Vec<Poly<Rat>>,
    pub marks: Vec<Option<Monomial>>,
    pub unit: bool,
}

// ---------------------------------------------------------------------
// Vanishing polynomials
// ---------------------------------------------------------------------

/// The vanishing polynomial of one point: a sum of squares by default,
/// a linear factor in the single-parameter mode. Over rational points
/// both vanish exactly on the point.
pub fn vanishing_polynomial_at(
    sigma: &Specialization,
    mode: VanishingMode,
    ctx: &Ctx,
) -> Result<PPoly> {
    let ring = ParamRing::new(ctx);
    let m = ctx.n_params();
    if sigma.arity() != m {
        return Err(Error::ArityMismatch {
            expected: m,
            got: sigma.arity(),
        });
    }
    if m == 0 {
        return Err(Error::Unsupported(
            "vanishing polynomial needs parameters".into(),
        ));
    }
    match mode {
        VanishingMode::Squares => {
            let mut acc = ring.zero();
            for (i, c) in sigma.values().iter().enumerate() {
                let diff = ring.var(i).sub(&QQ, &ring.constant(c.clone()));
                acc = acc.add(&QQ, &diff.mul(&QQ, &diff));
            }
            Ok(acc)
        }
        VanishingMode::LinearUnivariate => {
            if m != 1 {
                return Err(Error::Unsupported(
                    "linear-univariate vanishing polynomials need exactly one parameter".into(),
                ));
            }
            Ok(ring
                .var(0)
                .sub(&QQ, &ring.constant(sigma.values()[0].clone())))
        }
    }
}

/// The vanishing polynomial of a finite condition: the product over its
/// points. Complement conditions have none.
pub fn vanishing_polynomial(
    condition: &Condition,
    mode: VanishingMode,
    ctx: &Ctx,
) -> Result<PPoly> {
    if condition.is_complement() {
        return Err(Error::Unsupported(
            "vanishing polynomial of a complement condition".into(),
        ));
    }
    let ring = ParamRing::new(ctx);
    let mut acc = ring.one();
    for sigma in condition.point_list() {
        acc = acc.mul(&QQ, &vanishing_polynomial_at(sigma, mode, ctx)?);
    }
    Ok(acc)
}

// ---------------------------------------------------------------------
// Shared pipeline prelude
// ---------------------------------------------------------------------

pub(crate) struct Prepared {
    pub ctx: Ctx,
    pub eliminant: Vec<Poly<Rat>>,
    pub variety: Vec<Specialization>,
    /// Generators outside k[U], moved to k(U)[X].
    pub fprime: Vec<Poly<PFrac>>,
    /// All generators in k[U][X] form, for the generic branch.
    pub f_split: Vec<Poly<PPoly>>,
}

pub(crate) fn prepare(input: &[Poly<Rat>]) -> Result<Prepared> {
    let first = input.first().ok_or(Error::ZeroIdeal)?;
    assert!(input.iter().all(|f| f.block() == Block::Full));
    let ctx = first.ctx().clone();
    let (n, m) = (ctx.n_main(), ctx.n_params());
    let nonzero: Vec<Poly<Rat>> = input.iter().filter(|f| !f.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err(Error::ZeroIdeal);
    }

    let full_gb = reduced_groebner_basis(&QQ, &nonzero, TermOrder::elimination(n))?;
    if !is_zero_dimensional(&QQ, &full_gb, n + m) {
        return Err(Error::NotZeroDimensional);
    }
    let eliminant = elimination_ideal(&nonzero)?;
    let variety = if m == 0 {
        // no parameters: the unique empty specialization unless the
        // ideal is the unit ideal
        if full_gb.is_unit_ideal(&QQ) {
            Vec::new()
        } else {
            vec![Specialization::new(Vec::new())]
        }
    } else if eliminant.is_empty() {
        return Err(Error::NotZeroDimensional);
    } else {
        rational_variety(&eliminant)?
    };

    let fprime: Vec<Poly<PFrac>> = nonzero
        .iter()
        .filter(|f| !in_param_subring(f))
        .map(|f| inject_fractions(&split_param_coeffs(f)))
        .collect();
    let f_split: Vec<Poly<PPoly>> = nonzero.iter().map(split_param_coeffs).collect();
    Ok(Prepared {
        ctx,
        eliminant,
        variety,
        fprime,
        f_split,
    })
}

fn eliminant_as_coefficient_polys(eliminant: &[Poly<Rat>], ctx: &Ctx) -> Vec<Poly<PPoly>> {
    let ring = ParamRing::new(ctx);
    eliminant
        .iter()
        .map(|e| Poly::term(&ring, ctx, Block::Main, Monomial::one(), e.clone()))
        .collect()
}

// ---------------------------------------------------------------------
// Border system
// ---------------------------------------------------------------------

/// Computes a border system for `<input>` with the default conditional
/// border-basis engine and the generic branch carrying the generators.
pub fn compute_border_system(input: &[Poly<Rat>], ord: TermOrder) -> Result<BorderSystem> {
    compute_border_system_with(
        input,
        ord,
        GenericBranchPayload::default(),
        &TermOrderBorderBasis,
    )
}

/// Full-control variant: generic-branch payload and a pluggable
/// conditional border-basis engine.
pub fn compute_border_system_with(
    input: &[Poly<Rat>],
    ord: TermOrder,
    payload: GenericBranchPayload,
    algo: &dyn ConditionalBorderBasisAlgorithm,
) -> Result<BorderSystem> {
    let prep = prepare(input)?;
    let ctx = prep.ctx.clone();
    let mut branches = Vec::new();
    for sigma in &prep.variety {
        let (order_ideal, elements, marks) = algo.compute(&prep.fprime, sigma, ord)?;
        let scalar = to_scalar_basis(&elements, &marks, &order_ideal)?;
        branches.push(Branch {
            condition: Condition::points(vec![sigma.clone()]),
            order_ideal: scalar.order_ideal,
            basis: scalar.elements,
            marks: scalar.marks.into_iter().map(Some).collect(),
        });
    }
    let generic = match payload {
        GenericBranchPayload::Generators => prep.f_split.clone(),
        GenericBranchPayload::Eliminant => eliminant_as_coefficient_polys(&prep.eliminant, &ctx),
    };
    branches.push(Branch {
        condition: Condition::complement(prep.variety.clone()),
        order_ideal: OrderIdeal::empty(),
        marks: vec![None; generic.len()],
        basis: generic,
    });
    let system = BorderSystem {
        branches,
        eliminant: prep.eliminant,
        ctx,
        ord,
    };
    Ok(compress_system(&system))
}

/// Merges point branches with identical order ideal and basis by uniting
/// their conditions, then sorts branches canonically (point branches by
/// ascending point vectors, complement last). Idempotent.
pub fn compress_system(system: &BorderSystem) -> BorderSystem {
    let mut merged: Vec<Branch> = Vec::new();
    let mut complement: Vec<Branch> = Vec::new();
    for branch in &system.branches {
        if branch.condition.is_complement() {
            complement.push(branch.clone());
            continue;
        }
        if let Some(existing) = merged.iter_mut().find(|b| {
            b.order_ideal == branch.order_ideal
                && b.basis == branch.basis
                && b.marks == branch.marks
        }) {
            let mut pts = existing.condition.point_list().to_vec();
            pts.extend_from_slice(branch.condition.point_list());
            existing.condition = Condition::points(pts);
        } else {
            merged.push(branch.clone());
        }
    }
    merged.sort_by(|a, b| a.condition.point_list().cmp(b.condition.point_list()));
    merged.extend(complement);
    BorderSystem {
        branches: merged,
        eliminant: system.eliminant.clone(),
        ctx: system.ctx.clone(),
        ord: system.ord,
    }
}

// ---------------------------------------------------------------------
// Comprehensive border basis
// ---------------------------------------------------------------------

/// Assembles a comprehensive border basis from a border system: each
/// point branch is multiplied by the vanishing polynomials of every other
/// point branch, and the eliminant generators cover the complement (they
/// vanish on every variety point and specialize to a nonzero constant off
/// the variety).
pub fn compute_cbb(system: &BorderSystem, mode: VanishingMode) -> Result<ComprehensiveBorderBasis> {
    let ctx = system.ctx.clone();
    let ring = ParamRing::new(&ctx);
    let point_branches: Vec<&Branch> = system
        .branches
        .iter()
        .filter(|b| !b.condition.is_complement())
        .collect();
    // with a single point branch every multiplier is the empty product,
    // so no vanishing polynomials are needed (and none exist for
    // parameter-free instances)
    let vanishing: Vec<PPoly> = if point_branches.len() > 1 {
        point_branches
            .iter()
            .map(|b| vanishing_polynomial(&b.condition, mode, &ctx))
            .collect::<Result<_>>()?
    } else {
        vec![ring.one(); point_branches.len()]
    };

    let mut elements = Vec::new();
    let mut marks = Vec::new();
    let mut provenance = Vec::new();
    for (i, branch) in point_branches.iter().enumerate() {
        let mut multiplier = ring.one();
        for (j, f) in vanishing.iter().enumerate() {
            if i != j {
                multiplier = multiplier.mul(&QQ, f);
            }
        }
        for (el, mark) in branch.basis.iter().zip(&branch.marks) {
            elements.push(el.scalar_mul(&ring, &multiplier));
            marks.push(mark.clone());
            provenance.push(Provenance::PointBranch(i));
        }
    }
    for e in eliminant_as_coefficient_polys(&system.eliminant, &ctx) {
        elements.push(e);
        marks.push(None);
        provenance.push(Provenance::Eliminant);
    }
    Ok(ComprehensiveBorderBasis {
        elements,
        marks,
        provenance,
        ctx,
        ord: system.ord,
    })
}

/// Specializes a comprehensive basis: drops vanished elements, detects
/// the unit case, and recovers the order ideal as the staircase
/// complement of the surviving marked monomials.
pub fn specialize_cbb(
    cbb: &ComprehensiveBorderBasis,
    sigma: &Specialization,
) -> Result<SpecializedBasis> {
    let ctx = &cbb.ctx;
    let n = ctx.n_main();
    let ring = ParamRing::new(ctx);
    let mut elements = Vec::new();
    let mut marks = Vec::new();
    let mut surviving_marks = Vec::new();
    for (el, mark) in cbb.elements.iter().zip(&cbb.marks) {
        let s = specialize_poly(el, sigma.values())?;
        if s.is_zero() {
            continue;
        }
        if s.num_terms() == 1 && s.coeff(&Monomial::one()).is_some() {
            // a surviving nonzero constant: the specialized ideal is <1>
            return Ok(SpecializedBasis {
                order_ideal: OrderIdeal::empty(),
                elements: vec![Poly::constant(
                    &QQ,
                    ctx,
                    Block::Main,
                    Rat::from_integer(1.into()),
                )],
                marks: vec![Some(Monomial::one())],
                unit: true,
            });
        }
        if let Some(mk) = mark {
            let mark_coeff_alive = match el.coeff(mk) {
                Some(c) => !ring.eval(c, sigma.values())?.is_zero(),
                None => false,
            };
            if mark_coeff_alive {
                surviving_marks.push(mk.clone());
            }
        }
        marks.push(mark.clone());
        elements.push(s);
    }
    let order_ideal = staircase_complement(&surviving_marks, n)?;
    Ok(SpecializedBasis {
        order_ideal,
        elements,
        marks,
        unit: false,
    })
}

// ---------------------------------------------------------------------
// Point-wise Gröbner systems and the conversion to border systems
// ---------------------------------------------------------------------

/// One conditional reduced Gröbner basis per variety point, in primitive
/// k[U][X] form, plus the generic branch.
pub fn pointwise_groebner_system(
    input: &[Poly<Rat>],
    ord: TermOrder,
    payload: GenericBranchPayload,
) -> Result<PointwiseGroebnerSystem> {
    let prep = prepare(input)?;
    let ctx = prep.ctx.clone();
    let mut branches = Vec::new();
    for sigma in &prep.variety {
        let mut kept = Vec::new();
        for f in &prep.fprime {
            if color_polynomial(f, sigma)?.is_some() {
                kept.push(f.clone());
            }
        }
        if kept.is_empty() {
            return Err(Error::NotZeroDimensional);
        }
        let dom = SigmaFracField::new(&ctx, sigma.values().to_vec());
        let gb = reduced_groebner_basis(&dom, &kept, ord)?;
        let prim: Vec<Poly<PPoly>> = gb
            .gens
            .iter()
            .map(|g| {
                let lead = eff_leading(&dom, g, ord).expect("nonzero").0.clone();
                primitive_param_form(g, Some(&lead))
            })
            .collect();
        branches.push((Condition::points(vec![sigma.clone()]), prim));
    }
    let generic = match payload {
        GenericBranchPayload::Generators => prep.f_split.clone(),
        GenericBranchPayload::Eliminant => eliminant_as_coefficient_polys(&prep.eliminant, &ctx),
    };
    branches.push((Condition::complement(prep.variety.clone()), generic));
    Ok(PointwiseGroebnerSystem {
        branches,
        eliminant: prep.eliminant,
        ctx,
        ord,
    })
}

/// Converts a reduced Gröbner system to a border system branch by branch:
/// the order ideal is the staircase complement of the conditional leading
/// terms, border elements are built by conditional multiply-and-reduce
/// (variable times a known element, then reduction), and everything is
/// scalar-normalized. Branches come out uncompressed.
pub fn reduced_gs_to_bs(gs: &PointwiseGroebnerSystem) -> Result<BorderSystem> {
    let ctx = gs.ctx.clone();
    let n = ctx.n_main();
    let ord = gs.ord;
    let mut branches = Vec::new();
    let mut complement = Vec::new();
    for (condition, gens_pp) in &gs.branches {
        if condition.is_complement() {
            complement.push(Branch {
                condition: condition.clone(),
                order_ideal: OrderIdeal::empty(),
                marks: vec![None; gens_pp.len()],
                basis: gens_pp.clone(),
            });
            continue;
        }
        let sigma = condition
            .point_list()
            .first()
            .ok_or_else(|| Error::ShapeViolation("point branch without points".into()))?;
        let dom = SigmaFracField::new(&ctx, sigma.values().to_vec());
        let gens: Vec<Poly<PFrac>> = gens_pp.iter().map(inject_fractions).collect();
        let mut lead_set = Vec::new();
        let mut pool: std::collections::BTreeMap<Monomial, Poly<PFrac>> = Default::default();
        for g in &gens {
            let Some((lm, _)) = eff_leading(&dom, g, ord) else {
                return Err(Error::ShapeViolation(
                    "Gröbner-system element vanishes on its own condition".into(),
                ));
            };
            let lm = lm.clone();
            pool.insert(lm.clone(), make_monic(&dom, g, ord));
            lead_set.push(lm);
        }
        let order_ideal = staircase_complement(&lead_set, n)?;
        let border = sorted_border(&order_ideal, n, ord);
        let monic_gens: Vec<Poly<PFrac>> = pool.values().cloned().collect();

        let mut elements = Vec::new();
        for mono in &border {
            if let Some(g) = pool.get(mono) {
                elements.push(g.clone());
                continue;
            }
            // pick a parent: prefer conditional leading terms, largest
            // first, then previously built border elements
            let mut parents: Vec<(usize, Monomial)> = (0..n)
                .filter_map(|v| {
                    Monomial::var(v)
                        .div_into(mono)
                        .filter(|p| pool.contains_key(p))
                        .map(|p| (v, p))
                })
                .collect();
            parents.sort_by(|(_, a), (_, b)| {
                let a_is_lead = lead_set.contains(a);
                let b_is_lead = lead_set.contains(b);
                b_is_lead.cmp(&a_is_lead).then_with(|| ord.cmp(b, a))
            });
            let Some((v, parent)) = parents.into_iter().next() else {
                return Err(Error::ShapeViolation(format!(
                    "border monomial {mono} has no reachable parent"
                )));
            };
            let lifted = pool[&parent].mul_monomial(&Monomial::var(v));
            let c = lifted.coeff(mono).cloned().expect("border coefficient");
            let scaled = lifted.scalar_mul(&dom, &dom.inv(&c));
            let mut tail = scaled.clone();
            tail.remove_term(mono);
            let reduced_tail = normal_form(&dom, &tail, &monic_gens, ord);
            let element = Poly::term(&dom, &ctx, Block::Main, mono.clone(), dom.one())
                .add(&dom, &reduced_tail);
            pool.insert(mono.clone(), element.clone());
            elements.push(element);
        }
        let scalar = to_scalar_basis(&elements, &border, &order_ideal)?;
        branches.push(Branch {
            condition: condition.clone(),
            order_ideal: scalar.order_ideal,
            basis: scalar.elements,
            marks: scalar.marks.into_iter().map(Some).collect(),
        });
    }
    branches.sort_by(|a, b| a.condition.point_list().cmp(b.condition.point_list()));
    branches.extend(complement);
    Ok(BorderSystem {
        branches,
        eliminant: gs.eliminant.clone(),
        ctx,
        ord,
    })
}

// ---------------------------------------------------------------------
// Verification oracle
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    BorderSystem,
    Cbb,
}

#[derive(Debug, Clone)]
pub struct VerifyEntry {
    pub point: Specialization,
    pub region: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub entries: Vec<VerifyEntry>,
    pub structure_failures: Vec<String>,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.structure_failures.is_empty() && self.entries.iter().all(|e| e.ok)
    }

    fn push(
        &mut self,
        point: &Specialization,
        region: &str,
        result: std::result::Result<(), String>,
    ) {
        self.entries.push(VerifyEntry {
            point: point.clone(),
            region: region.to_string(),
            ok: result.is_ok(),
            detail: result.err().unwrap_or_else(|| "ok".into()),
        });
    }
}

/// Specializes a flat polynomial in k[X,U] at a parameter point.
pub fn specialize_generators(
    input: &[Poly<Rat>],
    sigma: &Specialization,
) -> Result<Vec<Poly<Rat>>> {
    input
        .iter()
        .map(|f| specialize_poly(&split_param_coeffs(f), sigma.values()))
        .collect()
}

fn format_point(sigma: &Specialization) -> String {
    let coords: Vec<String> = sigma.values().iter().map(rat_to_string).collect();
    format!("({})", coords.join(", "))
}

fn check_specialized_scalar_basis(
    order_ideal: &OrderIdeal,
    elements: &[Poly<Rat>],
    marks: &[Option<Monomial>],
    generators: &[Poly<Rat>],
    sigma: &Specialization,
    n: usize,
    ord: TermOrder,
) -> std::result::Result<(), String> {
    let specialized = specialize_generators(generators, sigma).map_err(|e| e.to_string())?;
    let mut pairs: Vec<(Monomial, Poly<Rat>)> = Vec::new();
    for (el, mark) in elements.iter().zip(marks) {
        let Some(mark) = mark else {
            return Err("unmarked element in a scalar basis".into());
        };
        pairs.push((mark.clone(), el.clone()));
    }
    pairs.sort_by(|(a, _), (b, _)| a.cmp(b));
    let candidate = BorderBasis {
        order_ideal: order_ideal.clone(),
        marks: pairs.iter().map(|(m, _)| m.clone()).collect(),
        elements: pairs.into_iter().map(|(_, e)| e).collect(),
    };
    check_border_basis(&candidate, &specialized, n, ord, true).map_err(|d| d.to_string())
}

fn check_unit_ideal(
    generators: &[Poly<Rat>],
    sigma: &Specialization,
    ord: TermOrder,
) -> std::result::Result<(), String> {
    let specialized = specialize_generators(generators, sigma).map_err(|e| e.to_string())?;
    let nonzero: Vec<Poly<Rat>> = specialized.into_iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err("specialized ideal is zero, not <1>".into());
    }
    let gb = reduced_groebner_basis(&QQ, &nonzero, ord).map_err(|e| e.to_string())?;
    if gb.is_unit_ideal(&QQ) {
        Ok(())
    } else {
        Err("specialized ideal is proper off the variety".into())
    }
}

/// Random rational points for complement sampling, avoiding `exclude`.
fn sample_points(
    m: usize,
    count: usize,
    seed: u64,
    exclude: &[Specialization],
) -> Vec<Specialization> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let coords: Vec<Rat> = (0..m)
            .map(|_| {
                let num = rng.gen_range(-30i64..=30);
                let den = rng.gen_range(1i64..=4);
                Rat::new(num.into(), den.into())
            })
            .collect();
        let candidate = Specialization::new(coords);
        if exclude.contains(&candidate) || out.contains(&candidate) {
            continue;
        }
        out.push(candidate);
    }
    out
}

/// Verifies a border system against its generators: structural
/// disjointness and cover, the scalar border-basis contract on every
/// point of every point branch, and the unit-ideal contract at sampled
/// complement points.
pub fn verify_border_system(
    system: &BorderSystem,
    generators: &[Poly<Rat>],
    samples: usize,
    seed: u64,
) -> VerifyReport {
    let mut report = VerifyReport::default();
    let n = system.ctx.n_main();
    let m = system.ctx.n_params();

    // structure: pairwise disjoint point sets, exactly one complement
    // whose excluded set is the union of the point branches
    let mut all_points: Vec<Specialization> = Vec::new();
    let mut complements = 0usize;
    for branch in &system.branches {
        match &branch.condition {
            Condition::Points(pts) => {
                for p in pts {
                    if all_points.contains(p) {
                        report.structure_failures.push(format!(
                            "point {} appears in two conditions",
                            format_point(p)
                        ));
                    }
                    all_points.push(p.clone());
                }
            }
            Condition::Complement(_) => complements += 1,
        }
    }
    if complements != 1 {
        report.structure_failures.push(format!(
            "expected exactly one complement branch, found {complements}"
        ));
    }
    all_points.sort();
    for branch in &system.branches {
        if let Condition::Complement(excluded) = &branch.condition {
            if excluded != &all_points {
                report.structure_failures.push(
                    "complement branch does not exclude exactly the point-branch points".into(),
                );
            }
        }
    }

    for branch in &system.branches {
        match &branch.condition {
            Condition::Points(pts) => {
                for sigma in pts {
                    let result =
                        specialize_branch_and_check(branch, generators, sigma, n, system.ord);
                    report.push(sigma, "variety", result);
                }
            }
            Condition::Complement(excluded) => {
                if m == 0 {
                    continue;
                }
                for sigma in sample_points(m, samples, seed, excluded) {
                    let spec_basis: std::result::Result<(), String> = branch
                        .basis
                        .iter()
                        .map(|b| {
                            specialize_poly(b, sigma.values())
                                .map(|_| ())
                                .map_err(|e| e.to_string())
                        })
                        .collect::<std::result::Result<Vec<()>, String>>()
                        .and_then(|_| check_unit_payload(branch, &sigma, system.ord))
                        .and_then(|_| check_unit_ideal(generators, &sigma, system.ord));
                    report.push(&sigma, "complement", spec_basis);
                }
            }
        }
    }
    report
}

fn check_unit_payload(
    branch: &Branch,
    sigma: &Specialization,
    ord: TermOrder,
) -> std::result::Result<(), String> {
    let specialized: Vec<Poly<Rat>> = branch
        .basis
        .iter()
        .map(|b| specialize_poly(b, sigma.values()).map_err(|e| e.to_string()))
        .collect::<std::result::Result<_, _>>()?;
    let nonzero: Vec<Poly<Rat>> = specialized.into_iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return Err("generic payload vanishes at a complement point".into());
    }
    let gb = reduced_groebner_basis(&QQ, &nonzero, ord).map_err(|e| e.to_string())?;
    if gb.is_unit_ideal(&QQ) {
        Ok(())
    } else {
        Err("generic payload does not generate <1> at a complement point".into())
    }
}

fn specialize_branch_and_check(
    branch: &Branch,
    generators: &[Poly<Rat>],
    sigma: &Specialization,
    n: usize,
    ord: TermOrder,
) -> std::result::Result<(), String> {
    let mut elements = Vec::new();
    for el in &branch.basis {
        elements.push(specialize_poly(el, sigma.values()).map_err(|e| e.to_string())?);
    }
    check_specialized_scalar_basis(
        &branch.order_ideal,
        &elements,
        &branch.marks,
        generators,
        sigma,
        n,
        ord,
    )
}

/// Verifies a comprehensive border basis against its generators at every
/// variety point and at sampled complement points.
pub fn verify_cbb(
    cbb: &ComprehensiveBorderBasis,
    generators: &[Poly<Rat>],
    samples: usize,
    seed: u64,
) -> VerifyReport {
    let mut report = VerifyReport::default();
    let n = cbb.ctx.n_main();
    let m = cbb.ctx.n_params();
    let prep = match prepare(generators) {
        Ok(p) => p,
        Err(e) => {
            report.structure_failures.push(e.to_string());
            return report;
        }
    };
    for sigma in &prep.variety {
        let result = match specialize_cbb(cbb, sigma) {
            Err(e) => Err(e.to_string()),
            Ok(sb) if sb.unit => check_unit_ideal(generators, sigma, cbb.ord)
                .map_err(|_| "specialized basis claims <1> on the variety".to_string()),
            Ok(sb) => check_specialized_scalar_basis(
                &sb.order_ideal,
                &sb.elements,
                &sb.marks,
                generators,
                sigma,
                n,
                cbb.ord,
            ),
        };
        report.push(sigma, "variety", result);
    }
    if m > 0 {
        for sigma in sample_points(m, samples, seed, &prep.variety) {
            let result = match specialize_cbb(cbb, &sigma) {
                Err(e) => Err(e.to_string()),
                Ok(sb) if sb.unit => check_unit_ideal(generators, &sigma, cbb.ord),
                Ok(_) => Err("specialized basis is not <1> off the variety".into()),
            };
            report.push(&sigma, "complement", result);
        }
    }
    report
}
