//! Command handlers: each returns the JSON report and the process exit
//! code (0 success, 1 verification failure, 2 input error).

use crate::input::{parse_input, InputSpec};
use orbk_core::cohomology::{
    mckay_report, orbifold_euler_linear, orbifold_euler_wps, orbifold_poincare_linear,
    orbifold_poincare_wps, wps_sectors, McKayError, WeightedProjectiveSpace,
};
use orbk_core::fingroup::{close, FiniteMatrixGroup};
use orbk_core::goodmaps::{
    enumerate_equivariant_lifts, fixed_locus_goodness, splitting_problem, GoodmapError,
};
use orbk_core::moduli::{component_nonempty_pt, kpoint_constant_count, virtual_dimension,
    DimensionInput, SectorTuple};
use orbk_core::rat::{parse_rat, rat_string, Rat};
use orbk_core::ring::{
    cup_product_abelian_linear, ring_table_abelian_linear, ring_table_pt, threepoint_pt,
    pairing_pt, OrbClass,
};
use orbk_core::sectors::{inertia, Geometry, InertiaDecomposition};
use serde_json::{json, Value};
use std::path::Path;
use std::sync::Arc;

#[derive(Debug)]
pub struct CliError {
    pub message: String,
}

impl CliError {
    pub fn new(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
        }
    }
}

pub type CmdOutput = Result<(Value, i32), CliError>;

pub fn load_spec(path: &Path) -> Result<InputSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::new(format!("cannot read {}: {e}", path.display())))?;
    parse_input(&text).map_err(|e| CliError::new(e.to_string()))
}

fn build_group(
    dimension: usize,
    conductor: u64,
    generators: &[orbk_core::fingroup::Matrix],
    cap: usize,
) -> Result<Arc<FiniteMatrixGroup>, CliError> {
    close(dimension, conductor, generators, cap)
        .map(Arc::new)
        .map_err(|e| CliError::new(e.to_string()))
}

fn build_inertia(spec: &InputSpec, cap: usize) -> Result<InertiaDecomposition, CliError> {
    match spec {
        InputSpec::MatrixGroup {
            dimension,
            conductor,
            geometry,
            generators,
        } => {
            let group = build_group(*dimension, *conductor, generators, cap)?;
            Ok(inertia(group, *geometry))
        }
        InputSpec::WeightedProjective { .. } => Err(CliError::new(
            "this command needs a matrix_group input",
        )),
    }
}

fn geometry_name(g: Geometry) -> &'static str {
    match g {
        Geometry::Point => "point",
        Geometry::Linear => "linear",
    }
}

fn wps_sectors_json(space: &WeightedProjectiveSpace) -> Value {
    let rows: Vec<Value> = wps_sectors(space)
        .iter()
        .map(|s| {
            json!({
                "q": rat_string(&s.q),
                "fixedWeights": s.fixed_weights,
                "iota": rat_string(&s.iota),
            })
        })
        .collect();
    Value::Array(rows)
}

pub fn cmd_sectors(spec: &InputSpec, cap: usize) -> CmdOutput {
    match spec {
        InputSpec::MatrixGroup { .. } => {
            let dec = build_inertia(spec, cap)?;
            let report = json!({
                "geometry": geometry_name(dec.geometry()),
                "group_order": dec.group().order(),
                "class_count": dec.sectors().len(),
                "sectors": dec.sectors_json(),
            });
            Ok((report, 0))
        }
        InputSpec::WeightedProjective { space } => {
            let report = json!({
                "geometry": "weighted_projective",
                "weights": space.weights(),
                "sectors": wps_sectors_json(space),
            });
            Ok((report, 0))
        }
    }
}

pub fn cmd_poincare(spec: &InputSpec, cap: usize) -> CmdOutput {
    match spec {
        InputSpec::MatrixGroup { .. } => {
            let dec = build_inertia(spec, cap)?;
            let table = orbifold_poincare_linear(&dec);
            let report = json!({
                "geometry": geometry_name(dec.geometry()),
                "kind": "age_graded",
                "dimensions": table.to_json(),
                "total_dim": table.total_dim(),
            });
            Ok((report, 0))
        }
        InputSpec::WeightedProjective { space } => {
            let table = orbifold_poincare_wps(space);
            let report = json!({
                "geometry": "weighted_projective",
                "kind": "poincare",
                "dimensions": table.to_json(),
                "total_dim": table.total_dim(),
            });
            Ok((report, 0))
        }
    }
}

pub fn cmd_euler(spec: &InputSpec, cap: usize) -> CmdOutput {
    let euler = match spec {
        InputSpec::MatrixGroup { .. } => orbifold_euler_linear(&build_inertia(spec, cap)?),
        InputSpec::WeightedProjective { space } => orbifold_euler_wps(space),
    };
    Ok((json!({ "orbifold_euler": euler }), 0))
}

pub fn cmd_ring(spec: &InputSpec, sectors: &[usize], cap: usize) -> CmdOutput {
    let dec = match spec {
        InputSpec::MatrixGroup { .. } => build_inertia(spec, cap)?,
        InputSpec::WeightedProjective { .. } => {
            return Err(CliError::new(
                "unsupported geometry: the cup product on weighted projective spaces needs obstruction integrals beyond this toolkit",
            ))
        }
    };
    let sector_count = dec.sectors().len();
    for &s in sectors {
        if s >= sector_count {
            return Err(CliError::new(format!(
                "sector index {s} out of range (there are {sector_count} sectors)"
            )));
        }
    }
    let normalization = json!({
        "basis": "class_sum",
        "pairing": "|class|/|G|",
    });
    match dec.geometry() {
        Geometry::Point => {
            let table = ring_table_pt(dec.group());
            let body = match sectors {
                [] => json!({
                    "geometry": "point",
                    "normalization": normalization,
                    "table": table.to_json(),
                }),
                [a, b] => {
                    let product = table.cup(&OrbClass::basis(*a), &OrbClass::basis(*b));
                    json!({
                        "geometry": "point",
                        "normalization": normalization,
                        "sectors": [a, b],
                        "product": product.to_json(),
                    })
                }
                _ => {
                    return Err(CliError::new(
                        "pass exactly two --sector flags for a product, or none for the table",
                    ))
                }
            };
            Ok((body, 0))
        }
        Geometry::Linear => {
            let map_err = |e: orbk_core::ring::RingError| {
                CliError::new(format!("unsupported geometry: {e}"))
            };
            let body = match sectors {
                [] => {
                    let table = ring_table_abelian_linear(&dec).map_err(map_err)?;
                    json!({
                        "geometry": "linear",
                        "product_rule": "age_additive",
                        "table": table.to_json(),
                    })
                }
                [a, b] => {
                    let product = cup_product_abelian_linear(&dec, *a, *b).map_err(map_err)?;
                    json!({
                        "geometry": "linear",
                        "product_rule": "age_additive",
                        "sectors": [a, b],
                        "product": product.to_json(),
                    })
                }
                _ => {
                    return Err(CliError::new(
                        "pass exactly two --sector flags for a product, or none for the table",
                    ))
                }
            };
            Ok((body, 0))
        }
    }
}

fn point_group(spec: &InputSpec, cap: usize, what: &str) -> Result<Arc<FiniteMatrixGroup>, CliError> {
    match spec {
        InputSpec::MatrixGroup {
            dimension,
            conductor,
            geometry: Geometry::Point,
            generators,
        } => build_group(*dimension, *conductor, generators, cap),
        _ => Err(CliError::new(format!(
            "unsupported geometry: {what} is defined for point quotients"
        ))),
    }
}

fn check_classes(group: &FiniteMatrixGroup, classes: &[usize]) -> Result<(), CliError> {
    let count = group.conjugacy_classes().len();
    for &c in classes {
        if c >= count {
            return Err(CliError::new(format!(
                "class index {c} out of range (there are {count} classes)"
            )));
        }
    }
    Ok(())
}

pub fn cmd_pairing(spec: &InputSpec, classes: &[usize], cap: usize) -> CmdOutput {
    let group = point_group(spec, cap, "the pairing")?;
    let [a, b] = classes else {
        return Err(CliError::new("pass exactly two --class flags"));
    };
    check_classes(&group, classes)?;
    let value = pairing_pt(&group, *a, *b);
    Ok((
        json!({"classes": [a, b], "value": rat_string(&value)}),
        0,
    ))
}

pub fn cmd_threepoint(spec: &InputSpec, classes: &[usize], cap: usize) -> CmdOutput {
    let group = point_group(spec, cap, "three-point counting")?;
    let [a, b, c] = classes else {
        return Err(CliError::new("pass exactly three --class flags"));
    };
    check_classes(&group, classes)?;
    let value = threepoint_pt(&group, *a, *b, *c);
    Ok((
        json!({"classes": [a, b, c], "value": rat_string(&value)}),
        0,
    ))
}

pub fn cmd_kpoint(spec: &InputSpec, classes: &[usize], cap: usize) -> CmdOutput {
    let group = point_group(spec, cap, "k-point counting")?;
    if classes.len() < 2 {
        return Err(CliError::new("pass at least two --class flags"));
    }
    check_classes(&group, classes)?;
    let tuple = SectorTuple(classes.to_vec());
    let value = kpoint_constant_count(&group, &tuple);
    let nonempty = component_nonempty_pt(&group, &tuple);
    Ok((
        json!({
            "classes": classes,
            "value": rat_string(&value),
            "nonempty": nonempty,
            "normalization": "1/|G|",
        }),
        0,
    ))
}

pub fn parse_word(word: &str) -> Result<Vec<usize>, CliError> {
    if word.is_empty() || word == "e" {
        return Ok(Vec::new());
    }
    word.split('.')
        .map(|part| {
            part.parse::<usize>()
                .map_err(|_| CliError::new(format!("bad element word component {part:?}")))
        })
        .collect()
}

fn linear_group_element(
    spec: &InputSpec,
    element: &str,
    cap: usize,
) -> Result<(Arc<FiniteMatrixGroup>, usize), CliError> {
    match spec {
        InputSpec::MatrixGroup {
            dimension,
            conductor,
            geometry: Geometry::Linear,
            generators,
        } => {
            let group = build_group(*dimension, *conductor, generators, cap)?;
            let word = parse_word(element)?;
            let idx = group
                .eval_word(&word)
                .map_err(|e| CliError::new(e.to_string()))?;
            Ok((group, idx))
        }
        _ => Err(CliError::new(
            "unsupported geometry: sector inclusions live on linear quotients",
        )),
    }
}

pub fn cmd_goodmap(spec: &InputSpec, element: &str, cap: usize) -> CmdOutput {
    let (group, idx) = linear_group_element(spec, element, cap)?;
    let problem =
        splitting_problem(&group, idx).map_err(|e| CliError::new(e.to_string()))?;
    let verdict = fixed_locus_goodness(&group, idx).map_err(|e| CliError::new(e.to_string()))?;
    let mut body = verdict.to_json(&group);
    let obj = body.as_object_mut().unwrap();
    obj.insert("element".into(), json!(group.word_string(idx)));
    obj.insert("centralizer_order".into(), json!(problem.centralizer.len()));
    obj.insert("kernel_order".into(), json!(problem.kernel.len()));
    obj.insert("quotient_order".into(), json!(problem.quotient_order));
    obj.insert("fixed_dim".into(), json!(problem.fixed_dim()));
    Ok((body, 0))
}

pub fn cmd_lifts(spec: &InputSpec, element: &str, cap: usize) -> CmdOutput {
    let (group, idx) = linear_group_element(spec, element, cap)?;
    let problem =
        splitting_problem(&group, idx).map_err(|e| CliError::new(e.to_string()))?;
    let axes: Vec<usize> = (0..group.dimension())
        .filter(|&a| group.element(idx).fixes_axis(a))
        .collect();
    if axes.len() != problem.fixed_dim() {
        return Err(CliError::new(
            "the fixed locus of the element is not a coordinate subspace",
        ));
    }
    let m = problem.quotient_order as u64;
    let base = json!({
        "element": group.word_string(idx),
        "axes": axes,
        "order": m,
        "equivalence": "stabilizer_conjugation",
    });
    if m == 1 {
        let mut body = base;
        let obj = body.as_object_mut().unwrap();
        obj.insert("verdict".into(), json!("good"));
        obj.insert("splittings".into(), json!(["e"]));
        obj.insert("classes".into(), json!(1));
        return Ok((body, 0));
    }
    // The lift problem lives inside the centralizer; check its action on
    // the fixed axes is by scalars so the quotient is cyclic.
    let sub = group.subgroup(&problem.centralizer);
    for i in 0..sub.order() {
        let mat = sub.element(i);
        let scalar = mat.entry(axes[0], axes[0]).clone();
        if !axes.iter().all(|&a| mat.maps_axis_to_scalar(a, &scalar)) {
            return Err(CliError::new(
                "the centralizer does not act by scalars on the fixed locus",
            ));
        }
    }
    match enumerate_equivariant_lifts(&sub, &axes, m, 1) {
        Ok(set) => {
            // Report lifts as words of the ambient group.
            let words: Vec<Value> = set
                .lifts
                .iter()
                .map(|&i| {
                    let parent = group
                        .index_of(sub.element(i))
                        .expect("centralizer elements lie in the group");
                    Value::String(group.word_string(parent))
                })
                .collect();
            let mut body = base;
            let obj = body.as_object_mut().unwrap();
            obj.insert("verdict".into(), json!("good"));
            obj.insert("splittings".into(), Value::Array(words));
            obj.insert("classes".into(), json!(set.classes.len()));
            Ok((body, 0))
        }
        Err(GoodmapError::NoLifts) => {
            let mut body = base;
            let obj = body.as_object_mut().unwrap();
            obj.insert("verdict".into(), json!("not_good"));
            obj.insert("splittings".into(), json!([]));
            obj.insert("classes".into(), json!(0));
            Ok((body, 0))
        }
        Err(e) => Err(CliError::new(e.to_string())),
    }
}

pub fn cmd_vdim(
    c1a: &str,
    dim: i64,
    genus: i64,
    marks: usize,
    iotas: &[String],
) -> CmdOutput {
    let c1_pairing =
        parse_rat(c1a).ok_or_else(|| CliError::new(format!("bad rational {c1a:?} for --c1a")))?;
    if genus < 0 {
        return Err(CliError::new("--genus must be nonnegative"));
    }
    if dim < 0 {
        return Err(CliError::new("--dim must be nonnegative"));
    }
    let iotas: Vec<Rat> = iotas
        .iter()
        .map(|s| {
            let r = parse_rat(s)
                .ok_or_else(|| CliError::new(format!("bad rational {s:?} for --iota")))?;
            if r < Rat::from_integer(0.into()) {
                return Err(CliError::new("--iota values must be nonnegative"));
            }
            Ok(r)
        })
        .collect::<Result<_, _>>()?;
    if iotas.len() != marks {
        return Err(CliError::new(format!(
            "--marks is {marks} but {} --iota values were given",
            iotas.len()
        )));
    }
    let value = virtual_dimension(&DimensionInput {
        c1_pairing,
        complex_dim: dim,
        genus,
        iotas,
    });
    Ok((json!({"virtual_dimension": rat_string(&value)}), 0))
}

pub fn cmd_mckay(spec: &InputSpec, cap: usize) -> CmdOutput {
    let dec = build_inertia(spec, cap)?;
    match mckay_report(&dec) {
        Ok(report) => Ok((report.to_json(), 0)),
        Err(e @ McKayError::NotSL { .. }) => Err(CliError::new(e.to_string())),
        Err(e) => Err(CliError::new(e.to_string())),
    }
}

pub fn cmd_verify(spec: Option<&InputSpec>, cap: usize) -> CmdOutput {
    let report = match spec {
        None => crate::verify::corpus_report(),
        Some(spec) => crate::verify::input_report(spec, cap)?,
    };
    let exit = if report.passed() { 0 } else { 1 };
    Ok((report.to_json(), exit))
}
