//! Built-in examples. Inputs live in `fixtures/` and are embedded at build
//! time, so each one can also be fed to the matching subcommand by hand.

use jumploci::aomoto::{
    cohomology_dims, s1s2_resonance, surface_algebra, tensor_product, torus_configuration_algebra,
    GradedAlgebraPresentation,
};
use jumploci::arrangements::r1_arrangement;
use jumploci::cvmodel::{CvModel, TranslatedTorus};
use jumploci::qlinalg::{int, Rational, SubspaceArrangement};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::commands::*;
use crate::io::*;
use crate::CliError;

struct Fixture {
    name: &'static str,
    module: &'static str,
    about: &'static str,
    run: fn() -> Result<Value, CliError>,
}

macro_rules! data {
    ($file:literal) => {
        include_str!(concat!("../fixtures/", $file))
    };
}

fn load<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    parse_json(text)
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "chain-link",
        module: "laurent",
        about: "tangent cones of the chain-link polynomial",
        run: || tcone(&load::<PolyIn>(data!("chain-link.json"))?.build(None)?),
    },
    Fixture {
        name: "trefoil",
        module: "laurent",
        about: "characteristic variety of the trefoil knot",
        run: || linkcv(&load::<PolyIn>(data!("trefoil.json"))?.build(None)?),
    },
    Fixture {
        name: "hopf-link",
        module: "laurent",
        about: "characteristic variety of the Hopf link",
        run: || linkcv(&load::<PolyIn>(data!("hopf-link.json"))?.build(None)?),
    },
    Fixture {
        name: "s1s2",
        module: "laurent",
        about: "rank-one chain complexes with f'(1) in {0, 1, 2} and their straightness",
        run: s1s2,
    },
    Fixture {
        name: "tree3",
        module: "toric",
        about: "path on three vertices: resonance and Omega membership",
        run: || {
            let k = load::<ComplexIn>(data!("tree3.json"))?.build()?;
            let line = load::<SubspaceIn>(data!("tree3-line.json"))?.build()?;
            let plane = load::<SubspaceIn>(data!("tree3-plane.json"))?.build()?;
            Ok(json!({
                "resonance": toric_res(&k, 1, 1)?,
                "raag": toric_raag(&k)?,
                "omega_line": toric_omega(&k, 1, 1, &line)?,
                "omega_plane": toric_omega(&k, 1, 2, &plane)?,
            }))
        },
    },
    Fixture {
        name: "torus3",
        module: "toric",
        about: "three-torus: Omega invariants are full",
        run: || {
            let k = load::<ComplexIn>(data!("torus3.json"))?.build()?;
            let line = load::<SubspaceIn>(data!("tree3-line.json"))?.build()?;
            let plane = load::<SubspaceIn>(data!("tree3-plane.json"))?.build()?;
            Ok(json!({
                "resonance": toric_res(&k, 1, 1)?,
                "omega_line": toric_omega(&k, 1, 1, &line)?,
                "omega_plane": toric_omega(&k, 1, 2, &plane)?,
            }))
        },
    },
    Fixture {
        name: "square",
        module: "toric",
        about: "four-cycle: resonance, connectivity and Omega vanishing",
        run: || {
            let k = load::<ComplexIn>(data!("square.json"))?.build()?;
            Ok(json!({ "resonance": toric_res(&k, 1, 1)?, "raag": toric_raag(&k)? }))
        },
    },
    Fixture {
        name: "k4",
        module: "toric",
        about: "complete graph on four vertices",
        run: || {
            let k = load::<ComplexIn>(data!("k4.json"))?.build()?;
            Ok(json!({ "resonance": toric_res(&k, 1, 1)?, "raag": toric_raag(&k)? }))
        },
    },
    Fixture {
        name: "braid",
        module: "arrangements",
        about: "braid arrangement: four local components and one braid component",
        run: || {
            let a = build_forms(&load::<Vec<Vec<RatIn>>>(data!("braid.json"))?)?;
            Ok(json!({ "points": arr_points(&a), "res1": arr_res1(&a, 0)? }))
        },
    },
    Fixture {
        name: "near-pencil",
        module: "arrangements",
        about: "near-pencil of four lines",
        run: || {
            let a = build_forms(&load::<Vec<Vec<RatIn>>>(data!("near-pencil.json"))?)?;
            Ok(json!({ "res1": arr_res1(&a, 0)?, "omega2": arr_omega(&a, 2) }))
        },
    },
    Fixture {
        name: "deleted-b3",
        module: "arrangements",
        about: "deleted B3 arrangement: seven local and five braid components",
        run: || {
            let a = build_forms(&load::<Vec<Vec<RatIn>>>(data!("deleted-b3.json"))?)?;
            Ok(json!({ "points": arr_points(&a), "res1": arr_res1(&a, 0)? }))
        },
    },
    Fixture {
        name: "straight-c",
        module: "cvmodel",
        about: "translated subtorus: locally straight but not straight, empty Omega",
        run: || {
            let (m, r) = classify_input(&load::<ClassifyIn>(data!("straight-c.json"))?)?;
            let plane = load::<SubspaceIn>(data!("plane-full2.json"))?.build()?;
            Ok(json!({ "classify": cv_classify(&m, &r)?, "omega": cv_omega(&m[0], &plane, Some(&r[0]))? }))
        },
    },
    Fixture {
        name: "heisenberg",
        module: "cvmodel",
        about: "trivial characteristic variety with full resonance",
        run: || {
            let (m, r) = classify_input(&load::<ClassifyIn>(data!("heisenberg.json"))?)?;
            cv_classify(&m, &r)
        },
    },
    Fixture {
        name: "full-torus",
        module: "cvmodel",
        about: "the full torus is straight",
        run: || {
            let (m, r) = classify_input(&load::<ClassifyIn>(data!("full-torus.json"))?)?;
            cv_classify(&m, &r)
        },
    },
    Fixture {
        name: "witness-line",
        module: "cvmodel",
        about: "strictness witness for a translated line in the 2-torus",
        run: || cv_witness(&load::<WitnessIn>(data!("witness-line.json"))?, 3),
    },
    Fixture {
        name: "witness-3",
        module: "cvmodel",
        about: "strictness witness for a translated line in the 3-torus",
        run: || cv_witness(&load::<WitnessIn>(data!("witness-3.json"))?, 3),
    },
    Fixture {
        name: "deleted-b3-translated",
        module: "cvmodel",
        about: "user-editable translated component for deleted B3, classified against its resonance",
        run: || {
            // Subtori through 1 for every resonance component, plus the
            // translated components read from the file.
            let extra = load::<ModelIn>(data!("deleted-b3-translated.json"))?.build()?;
            let a = build_forms(&load::<Vec<Vec<RatIn>>>(data!("deleted-b3.json"))?)?;
            let res = r1_arrangement(&a, 0)?.resonance;
            let mut comps: Vec<TranslatedTorus> =
                res.positive_dimensional().map(|l| TranslatedTorus::subtorus(l.clone())).collect();
            comps.extend(extra.components().iter().cloned());
            let m = CvModel::new(extra.ambient_dim(), comps, extra.isolated().to_vec())?;
            Ok(json!({ "model": model_out(&m), "classify": cv_classify(&[m], &[res])? }))
        },
    },
    Fixture {
        name: "surface2",
        module: "aomoto",
        about: "genus-two surface: Aomoto Betti numbers",
        run: || {
            let alg = build_algebra(&load::<AlgebraIn>(data!("surface2.json"))?)?;
            dims_at(&alg, &[&[0, 0, 0, 0], &[1, 0, 0, 0], &[1, 2, 3, 4]])
        },
    },
    Fixture {
        name: "exterior3",
        module: "aomoto",
        about: "exterior algebra on three generators: Koszul exactness",
        run: || {
            let alg = build_algebra(&load::<AlgebraIn>(data!("exterior3.json"))?)?;
            dims_at(&alg, &[&[0, 0, 0], &[1, 0, 0], &[2, -1, 5]])
        },
    },
    Fixture {
        name: "conf-torus3",
        module: "aomoto",
        about: "three points on a torus: on and off the resonance quadric",
        run: || {
            let alg = torus_configuration_algebra();
            dims_at(&alg, &[&[1, -1, 0, 1, -1, 0], &[1, -1, 0, 0, 1, -1], &[1, 1, 1, 0, 0, 0]])
        },
    },
    Fixture {
        name: "product-surfaces",
        module: "aomoto",
        about: "product of two genus-two surfaces",
        run: || {
            let alg = tensor_product(&surface_algebra(2), &surface_algebra(2));
            dims_at(&alg, &[&[1, 0, 0, 0, 0, 0, 0, 0], &[1, 0, 0, 0, 1, 0, 0, 0], &[0; 8]])
        },
    },
];

fn dims_at(alg: &GradedAlgebraPresentation, points: &[&[i64]]) -> Result<Value, CliError> {
    let rows = points
        .iter()
        .map(|p| {
            let a: Vec<Rational> = p.iter().map(|&x| int(x)).collect();
            Ok(json!({ "point": vec_out(&a), "betti": cohomology_dims(alg, &a)? }))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(json!({ "dims": alg.dims(), "points": rows }))
}

fn s1s2() -> Result<Value, CliError> {
    let cases = [
        (0, data!("s1s2-f0.json")),
        (1, data!("s1s2-f1.json")),
        (2, data!("s1s2-f2.json")),
    ];
    let mut out = Vec::new();
    for (fp, text) in cases {
        let chain = build_chain(&load::<ChainIn>(text)?)?;
        let loci = (1..=2).map(|i| cvchain(&chain, i, 1)).collect::<Result<Vec<_>, _>>()?;
        let models = (1..=2)
            .map(|i| Ok(CvModel::from_univariate(&jumploci::laurent::cv_rank1_chain(&chain, i, 1)?)?))
            .collect::<Result<Vec<_>, CliError>>()?;
        let (r1, r2) = s1s2_resonance(&int(fp));
        let res: Vec<SubspaceArrangement> = vec![r1, r2];
        out.push(json!({
            "fprime1": fp,
            "cv": loci,
            "resonance": res.iter().map(arrangement_out).collect::<Vec<_>>(),
            "classify": cv_classify(&models, &res)?,
        }));
    }
    Ok(json!({ "family": out }))
}

pub fn list() -> Value {
    json!({
        "fixtures": FIXTURES
            .iter()
            .map(|f| json!({ "name": f.name, "module": f.module, "about": f.about }))
            .collect::<Vec<_>>(),
    })
}

pub fn run(name: &str) -> Result<Value, CliError> {
    let f = FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| CliError::precondition("UnknownFixture", format!("no fixture named {name:?}")))?;
    Ok(json!({ "fixture": f.name, "module": f.module, "report": (f.run)()? }))
}
