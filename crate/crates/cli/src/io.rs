//! JSON input formats and report encoders. Rationals travel as `"p/q"`
//! strings; integers are also accepted on input.

use std::path::Path;

use jumploci::cvmodel::{CvModel, TranslatedTorus};
use jumploci::laurent::{LaurentPolynomial, UniPoly};
use jumploci::qlinalg::{Rational, RationalSubspace, SubspaceArrangement};
use jumploci::simplicial::SimplicialComplex;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::CliError;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    parse_json(&text).map_err(|e| CliError::parse(format!("{}: {}", path.display(), e.message())))
}

pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::parse(e.to_string()))
}

#[derive(Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum RatIn {
    Str(String),
    Int(i64),
}

impl RatIn {
    pub fn value(&self) -> Result<Rational, CliError> {
        match self {
            RatIn::Int(i) => Ok(Rational::from_integer((*i).into())),
            RatIn::Str(s) => {
                let r: Rational = s.trim().parse().map_err(|_| CliError::parse(format!("not a rational: {s:?}")))?;
                Ok(r)
            }
        }
    }
}

pub fn rats(v: &[RatIn]) -> Result<Vec<Rational>, CliError> {
    v.iter().map(RatIn::value).collect()
}

pub fn rat_rows(rows: &[Vec<RatIn>]) -> Result<Vec<Vec<Rational>>, CliError> {
    rows.iter().map(|r| rats(r)).collect()
}

/// `"1,-1/2,0"` as a vector.
pub fn parse_point(s: &str) -> Result<Vec<Rational>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| RatIn::Str(x.to_string()).value()).collect()
}

pub fn rat_out(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn vec_out(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rat_out).collect())
}

/// A subspace by spanning vectors or by equations.
#[derive(Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct SubspaceIn {
    pub n: usize,
    #[serde(default)]
    pub basis: Option<Vec<Vec<RatIn>>>,
    #[serde(default)]
    pub equations: Option<Vec<Vec<RatIn>>>,
}

impl SubspaceIn {
    pub fn build(&self) -> Result<RationalSubspace, CliError> {
        let out = match (&self.basis, &self.equations) {
            (Some(b), None) => RationalSubspace::span(self.n, &rat_rows(b)?),
            (None, Some(e)) => RationalSubspace::from_equations(self.n, &rat_rows(e)?),
            _ => return Err(CliError::parse("a subspace needs exactly one of `basis` or `equations`")),
        };
        Ok(out?)
    }
}

pub fn subspace_out(s: &RationalSubspace) -> Value {
    json!({
        "n": s.ambient_dim(),
        "basis": s.basis().iter().map(|b| vec_out(b)).collect::<Vec<_>>(),
    })
}

/// Components are listed by spanning vectors; `[]` is the zero subspace.
#[derive(Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct ArrangementIn {
    pub n: usize,
    pub components: Vec<Vec<Vec<RatIn>>>,
    /// Present in reports; ignored on input.
    #[serde(default, rename = "codim")]
    pub _codim: Option<Value>,
}

impl ArrangementIn {
    pub fn build(&self) -> Result<SubspaceArrangement, CliError> {
        let comps = self
            .components
            .iter()
            .map(|c| Ok(RationalSubspace::span(self.n, &rat_rows(c)?)?))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(SubspaceArrangement::new(self.n, comps)?)
    }
}

pub fn arrangement_out(a: &SubspaceArrangement) -> Value {
    json!({
        "n": a.ambient_dim(),
        "components": a
            .components()
            .iter()
            .map(|c| c.basis().iter().map(|b| vec_out(b)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "codim": a.codim(),
    })
}

#[derive(Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct TermIn {
    #[serde(alias = "exponents")]
    pub exp: Vec<i64>,
    pub coeff: RatIn,
}

/// A polynomial as a bare term list or as `{n, terms}`.
#[derive(Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum PolyIn {
    Terms(Vec<TermIn>),
    Full {
        #[serde(default)]
        n: Option<usize>,
        terms: Vec<TermIn>,
    },
}

impl PolyIn {
    pub fn build(&self, default_n: Option<usize>) -> Result<LaurentPolynomial, CliError> {
        let (n, terms) = match self {
            PolyIn::Terms(t) => (None, t),
            PolyIn::Full { n, terms } => (*n, terms),
        };
        let n = n
            .or_else(|| terms.first().map(|t| t.exp.len()))
            .or(default_n)
            .ok_or_else(|| CliError::parse("polynomial without terms needs `n`"))?;
        let terms = terms
            .iter()
            .map(|t| Ok((t.exp.clone(), t.coeff.value()?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(LaurentPolynomial::new(n, terms)?)
    }
}

pub fn poly_out(p: &LaurentPolynomial) -> Value {
    json!({
        "n": p.n_vars(),
        "display": p.to_string(),
        "terms": p.terms().map(|(e, c)| json!({"exp": e, "coeff": rat_out(c)})).collect::<Vec<_>>(),
    })
}

pub fn unipoly_out(p: &UniPoly) -> Value {
    json!({
        "display": p.to_string(),
        "coeffs": p.coeffs().iter().map(rat_out).collect::<Vec<_>>(),
    })
}

/// Facets as lists of vertex labels `1..=n`; a bare list takes `n` from the
/// largest label.
#[derive(Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum ComplexIn {
    Facets(Vec<Vec<usize>>),
    Full { n: usize, facets: Vec<Vec<usize>> },
}

impl ComplexIn {
    pub fn build(&self) -> Result<SimplicialComplex, CliError> {
        let (n, facets) = match self {
            ComplexIn::Facets(f) => (f.iter().flatten().copied().max().unwrap_or(0), f),
            ComplexIn::Full { n, facets } => (*n, facets),
        };
        Ok(SimplicialComplex::new(n, facets)?)
    }
}

#[derive(Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct ChainIn {
    pub ranks: Vec<usize>,
    /// `boundaries[i − 1]` is `∂_i`, a `c_{i−1} × c_i` matrix.
    pub boundaries: Vec<Vec<Vec<PolyIn>>>,
}

#[derive(Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct TorusIn {
    pub direction: Vec<Vec<RatIn>>,
    pub q: Vec<RatIn>,
}

impl TorusIn {
    pub fn build(&self, n: usize) -> Result<TranslatedTorus, CliError> {
        let dir = RationalSubspace::span(n, &rat_rows(&self.direction)?)?;
        Ok(TranslatedTorus::new(dir, rats(&self.q)?)?)
    }
}

pub fn torus_out(t: &TranslatedTorus) -> Value {
    json!({
        "direction": t.direction().basis().iter().map(|b| vec_out(b)).collect::<Vec<_>>(),
        "q": vec_out(t.translation()),
    })
}

#[derive(Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct ModelIn {
    pub n: usize,
    #[serde(default)]
    pub components: Vec<TorusIn>,
    #[serde(default)]
    pub isolated: Vec<Vec<RatIn>>,
}

impl ModelIn {
    pub fn build(&self) -> Result<CvModel, CliError> {
        let comps = self.components.iter().map(|c| c.build(self.n)).collect::<Result<Vec<_>, _>>()?;
        Ok(CvModel::new(self.n, comps, rat_rows(&self.isolated)?)?)
    }
}

pub fn model_out(m: &CvModel) -> Value {
    json!({
        "n": m.ambient_dim(),
        "components": m.components().iter().map(torus_out).collect::<Vec<_>>(),
        "isolated": m.isolated().iter().map(|p| vec_out(p)).collect::<Vec<_>>(),
    })
}

#[derive(Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct DegreeIn {
    pub model: ModelIn,
    pub resonance: ArrangementIn,
}

#[derive(Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct ClassifyIn {
    /// Entry `i − 1` describes degree `i`.
    pub degrees: Vec<DegreeIn>,
}

#[derive(Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct WitnessIn {
    pub n: usize,
    pub component: TorusIn,
    pub resonance: ArrangementIn,
}

#[derive(Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct MultIn {
    pub deg: usize,
    /// One matrix per degree-one generator, rows indexed by `A^{deg+1}`.
    pub table: Vec<Vec<Vec<RatIn>>>,
}

#[derive(Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct AlgebraIn {
    pub dims: Vec<usize>,
    #[serde(default)]
    pub mult: Vec<MultIn>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use jumploci::qlinalg::rat;
    use proptest::prelude::*;

    fn reparse_subspace(s: &RationalSubspace) -> RationalSubspace {
        parse_json::<SubspaceIn>(&subspace_out(s).to_string()).unwrap().build().unwrap()
    }

    fn reparse_arrangement(a: &SubspaceArrangement) -> SubspaceArrangement {
        parse_json::<ArrangementIn>(&arrangement_out(a).to_string()).unwrap().build().unwrap()
    }

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_point("1, -1/2,0").unwrap(), vec![rat(1, 1), rat(-1, 2), rat(0, 1)]);
        assert!(parse_point("1/0").is_err());
        assert!(parse_point("x").is_err());
        assert_eq!(parse_point("").unwrap(), Vec::<Rational>::new());
    }

    #[test]
    fn special_arrangements_round_trip() {
        for a in [SubspaceArrangement::empty(3), SubspaceArrangement::origin(3), SubspaceArrangement::full(3)] {
            assert_eq!(reparse_arrangement(&a), a);
        }
    }

    #[test]
    fn subspace_by_equations() {
        let s = parse_json::<SubspaceIn>(r#"{"n": 3, "equations": [["1", 1, "-1/3"]]}"#).unwrap().build().unwrap();
        assert_eq!(s.dim(), 2);
        assert!(parse_json::<SubspaceIn>(r#"{"n": 3}"#).unwrap().build().is_err());
        assert!(parse_json::<SubspaceIn>(r#"{"n": 3, "basis": [], "extra": 1}"#).is_err());
    }

    #[test]
    fn polynomial_formats_agree() {
        let bare = parse_json::<PolyIn>(r#"[{"exponents": [1, 0], "coeff": "2"}, {"exp": [0, 0], "coeff": -2}]"#)
            .unwrap()
            .build(None)
            .unwrap();
        let full = parse_json::<PolyIn>(r#"{"n": 2, "terms": [{"exp": [0, 0], "coeff": "-2"}, {"exp": [1, 0], "coeff": 2}]}"#)
            .unwrap()
            .build(None)
            .unwrap();
        assert_eq!(bare, full);
    }

    fn vectors(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
        prop::collection::vec(prop::collection::vec((-3i64..=3, 1i64..=3).prop_map(|(p, q)| rat(p, q)), n), 0..=n)
    }

    proptest! {
        #[test]
        fn subspaces_round_trip(v in vectors(4)) {
            let s = RationalSubspace::span(4, &v).unwrap();
            prop_assert_eq!(reparse_subspace(&s), s);
        }

        #[test]
        fn arrangements_round_trip(comps in prop::collection::vec(vectors(3), 0..4)) {
            let comps = comps.iter().map(|v| RationalSubspace::span(3, v).unwrap()).collect();
            let a = SubspaceArrangement::new(3, comps).unwrap();
            prop_assert_eq!(reparse_arrangement(&a), a);
        }
    }
}
