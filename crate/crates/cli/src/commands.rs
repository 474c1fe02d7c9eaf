use jumploci::aomoto::{aomoto_betti, cohomology_dims, resonance_member, GradedAlgebraPresentation};
use jumploci::arrangements::{
    max_multiplicity, multiple_points, omega_bounds, r1_arrangement, OmegaBound, ProjLineArrangement,
};
use jumploci::cvmodel::{
    classify_straightness, model_tau1, omega_member, omega_upper_bound, sigma_member, strictness_witness, CvModel,
    StraightnessCondition,
};
use jumploci::laurent::{
    compare_tangent_cones, cv_rank1_chain, link_cv1, tau1_with_certificates, EquivariantChainComplex1,
    LaurentPolynomial,
};
use jumploci::qlinalg::{QMatrix, Rational, RationalSubspace, SubspaceArrangement};
use jumploci::simplicial::SimplicialComplex;
use jumploci::toric::{
    graph_connectivity, omega_vanishing_bound, raag_r1, toric_cv, toric_omega_member, toric_resonance,
    toric_resonance_upto, CoordinateArrangement, Graph,
};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::io::*;
use crate::CliError;

fn coordinate_out(a: &CoordinateArrangement) -> Value {
    json!({
        "n": a.n(),
        "kind": format!("{:?}", a.kind()).to_lowercase(),
        "subsets": a.subsets(),
        "codim": a.codim(),
    })
}

pub fn toric_res(k: &SimplicialComplex, degree: usize, depth: usize) -> Result<Value, CliError> {
    let r = toric_resonance(k, degree, depth)?;
    Ok(json!({
        "degree": degree,
        "depth": depth,
        "resonance": coordinate_out(&r),
        "arrangement": arrangement_out(&r.to_subspaces()),
    }))
}

pub fn toric_cv_report(k: &SimplicialComplex, degree: usize, depth: usize) -> Result<Value, CliError> {
    let r = toric_cv(k, degree, depth)?;
    Ok(json!({ "degree": degree, "depth": depth, "characteristic": coordinate_out(&r) }))
}

pub fn toric_raag(k: &SimplicialComplex) -> Result<Value, CliError> {
    let g = Graph::one_skeleton(k);
    let kappa = graph_connectivity(&g);
    let empty_from = (1..=g.n() + 1).find(|&r| omega_vanishing_bound(&g, r));
    Ok(json!({
        "edges": g.edges(),
        "r1": coordinate_out(&raag_r1(&g)),
        "connectivity": kappa,
        "complete": g.is_complete(),
        "omega_empty_from_r": empty_from,
    }))
}

pub fn toric_omega(k: &SimplicialComplex, degree: usize, r: usize, p: &RationalSubspace) -> Result<Value, CliError> {
    let member = toric_omega_member(k, degree, r, p)?;
    Ok(json!({
        "degree": degree,
        "r": r,
        "plane": subspace_out(p),
        "member": member,
        "resonance": arrangement_out(&toric_resonance_upto(k, degree)),
    }))
}

pub fn tcone(f: &LaurentPolynomial) -> Result<Value, CliError> {
    let c = compare_tangent_cones(f)?;
    let certs = if f.value_at_one().is_zero() { tau1_with_certificates(f)? } else { Vec::new() };
    Ok(json!({
        "poly": poly_out(f),
        "tau1": arrangement_out(&c.tau1),
        "certificates": certs
            .iter()
            .map(|t| json!({
                "subspace": subspace_out(&t.subspace),
                "blocks": t.partition.blocks(),
            }))
            .collect::<Vec<_>>(),
        "tc1": poly_out(&c.tc1),
        "tau1_inside_tc1": c.tau1_inside_tc1,
        "equal": c.equal,
    }))
}

pub fn linkcv(delta: &LaurentPolynomial) -> Result<Value, CliError> {
    let l = link_cv1(delta);
    let mut out = json!({
        "delta": poly_out(delta),
        "n": l.n(),
        "tau1": arrangement_out(&l.tau1()?),
        "tc1": poly_out(&l.tc1()),
    });
    match CvModel::from_link(&l) {
        Ok(m) => out["model"] = model_out(&m),
        Err(e) => out["model_error"] = json!(e.to_string()),
    }
    Ok(out)
}

pub fn build_chain(c: &ChainIn) -> Result<EquivariantChainComplex1, CliError> {
    let boundaries = c
        .boundaries
        .iter()
        .map(|m| {
            m.iter()
                .map(|row| row.iter().map(|p| p.build(Some(1))).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EquivariantChainComplex1::new(c.ranks.clone(), boundaries)?)
}

pub fn cvchain(c: &EquivariantChainComplex1, degree: usize, depth: usize) -> Result<Value, CliError> {
    let locus = cv_rank1_chain(c, degree, depth)?;
    let mut out = json!({ "degree": degree, "depth": depth, "locus": unipoly_out(&locus) });
    match CvModel::from_univariate(&locus) {
        Ok(m) => out["model"] = model_out(&m),
        Err(e) => out["model_error"] = json!(e.to_string()),
    }
    Ok(out)
}

fn condition_name(c: StraightnessCondition) -> &'static str {
    match c {
        StraightnessCondition::A => "a",
        StraightnessCondition::B => "b",
        StraightnessCondition::C => "c",
    }
}

pub fn cv_classify(models: &[CvModel], res: &[SubspaceArrangement]) -> Result<Value, CliError> {
    let rep = classify_straightness(models, res)?;
    Ok(json!({
        "degrees": models.len(),
        "locally_straight": rep.locally_straight,
        "straight": rep.straight,
        "failure": rep.failure.map(|(c, d)| json!({"condition": condition_name(c), "degree": d})),
        "tau1": models.iter().map(|m| arrangement_out(&model_tau1(m))).collect::<Vec<_>>(),
    }))
}

pub fn classify_input(input: &ClassifyIn) -> Result<(Vec<CvModel>, Vec<SubspaceArrangement>), CliError> {
    let mut models = Vec::new();
    let mut res = Vec::new();
    for d in &input.degrees {
        models.push(d.model.build()?);
        res.push(d.resonance.build()?);
    }
    Ok((models, res))
}

pub fn cv_omega(m: &CvModel, p: &RationalSubspace, res: Option<&SubspaceArrangement>) -> Result<Value, CliError> {
    let member = omega_member(m, p)?;
    let tau = model_tau1(m);
    let bound_res = res.cloned().unwrap_or_else(|| tau.clone());
    Ok(json!({
        "plane": subspace_out(p),
        "member": member,
        "upper_bound": omega_upper_bound(&bound_res, p)?,
        "tau1": arrangement_out(&tau),
    }))
}

pub fn cv_witness(input: &WitnessIn, bound: u32) -> Result<Value, CliError> {
    let c = input.component.build(input.n)?;
    let res = input.resonance.build()?;
    let w = strictness_witness(&c, &res, bound)?;
    let model = CvModel::new(input.n, vec![c.clone()], vec![])?;
    Ok(json!({
        "component": torus_out(&c),
        "bound": bound,
        "lambda": w.lambda,
        "plane": subspace_out(&w.plane),
        "omega_member": omega_member(&model, &w.plane)?,
        "sigma_member": sigma_member(&res, &w.plane)?,
    }))
}

pub fn build_forms(forms: &[Vec<RatIn>]) -> Result<ProjLineArrangement, CliError> {
    let forms = forms
        .iter()
        .map(|f| {
            let v = rats(f)?;
            <[Rational; 3]>::try_from(v).map_err(|_| CliError::parse("each form needs three coefficients"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProjLineArrangement::new(forms)?)
}

pub fn arr_points(a: &ProjLineArrangement) -> Value {
    json!({
        "n": a.len(),
        "max_multiplicity": max_multiplicity(a),
        "points": multiple_points(a)
            .iter()
            .map(|p| json!({"point": vec_out(&p.point), "lines": p.lines, "multiplicity": p.multiplicity()}))
            .collect::<Vec<_>>(),
    })
}

pub fn arr_res1(a: &ProjLineArrangement, seed: u64) -> Result<Value, CliError> {
    let r = r1_arrangement(a, seed)?;
    Ok(json!({
        "n": a.len(),
        "seed": seed,
        "local": arrangement_out(&r.local),
        "braid": r.braid.iter().map(|b| json!({
            "lines": b.lines,
            "pairs": b.pairs.iter().map(|&(x, y)| vec![x, y]).collect::<Vec<_>>(),
            "subspace": subspace_out(&b.subspace),
        })).collect::<Vec<_>>(),
        "resonance": arrangement_out(&r.resonance),
        "components": r.resonance.len(),
        "possibly_incomplete": r.possibly_incomplete,
    }))
}

pub fn arr_omega(a: &ProjLineArrangement, r: usize) -> Value {
    let bound = match omega_bounds(a, r) {
        OmegaBound::Full => "full",
        OmegaBound::Empty => "empty",
        OmegaBound::Undetermined => "undetermined",
    };
    json!({ "n": a.len(), "r": r, "max_multiplicity": max_multiplicity(a), "bound": bound })
}

pub fn build_algebra(input: &AlgebraIn) -> Result<GradedAlgebraPresentation, CliError> {
    let k = input.dims.len().saturating_sub(1);
    let mut higher = Vec::new();
    for deg in 1..k {
        let entry = input
            .mult
            .iter()
            .find(|m| m.deg == deg)
            .ok_or_else(|| CliError::parse(format!("missing multiplication table for degree {deg}")))?;
        let tables = entry
            .table
            .iter()
            .map(|rows| Ok(QMatrix::from_rows(input.dims[deg], &rat_rows(rows)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        higher.push(tables);
    }
    Ok(GradedAlgebraPresentation::new(input.dims.clone(), higher)?)
}

pub fn aomoto_betti_report(alg: &GradedAlgebraPresentation, a: &[Rational], degree: usize) -> Result<Value, CliError> {
    let b = aomoto_betti(alg, a, degree)?;
    Ok(json!({
        "point": vec_out(a),
        "degree": degree,
        "betti": b,
        "all_degrees": cohomology_dims(alg, a)?,
    }))
}

pub fn aomoto_member_report(
    alg: &GradedAlgebraPresentation,
    a: &[Rational],
    degree: usize,
    depth: usize,
) -> Result<Value, CliError> {
    Ok(json!({
        "point": vec_out(a),
        "degree": degree,
        "depth": depth,
        "member": resonance_member(alg, a, degree, depth)?,
    }))
}
