use serde_json::{json, Map, Value};

use crate::chow::{compare_routes_on, intersection_table, multiplicity_table, IntersectionTable, MultiplicityRow, RouteComparison};
use crate::error::{Error, Result};
use crate::exactlinalg::format_rat;
use crate::fanbuild::{build_fan, triangulate, validate_fan, Fan, RayLabel, Triangulation, TriangulationOrder, WallKind};
use crate::framework::{self_stress_basis, validate_general, validate_planar, KFramework, PlanarFramework, StressBasis, ValidationReport};
use crate::multiframe::{glued_stress_space, glued_system, theorem1_check, LocalFan, LocalRayLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    A,
    B,
    #[default]
    Both,
}

impl Route {
    pub fn runs_a(self) -> bool {
        self != Route::B
    }

    pub fn runs_b(self) -> bool {
        self != Route::A
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    pub route: Route,
    pub order: TriangulationOrder,
    pub tables: bool,
}

/// Exit status of a command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Disagreement = 1,
    Usage = 2,
    Invalid = 3,
}

pub fn validation_json(r: &ValidationReport) -> Value {
    json!({
        "valid": r.is_valid(),
        "failures": r.failures.iter().map(|i| json!({"message": i.to_string(), "detail": i})).collect::<Vec<_>>(),
        "warnings": r.warnings.iter().map(|i| json!({"message": i.to_string(), "detail": i})).collect::<Vec<_>>(),
    })
}

pub fn basis_json(b: &StressBasis) -> Value {
    Value::Array(
        (0..b.dim())
            .map(|i| Value::Object(b.entries(i).map(|(l, x)| (l.to_string(), Value::String(format_rat(x)))).collect::<Map<_, _>>()))
            .collect(),
    )
}

fn int_json(x: &crate::exactlinalg::Int) -> Value {
    use num_traits::ToPrimitive;
    x.to_i64().map_or_else(|| json!(x.to_string()), |v| json!(v))
}

fn order_name(o: TriangulationOrder) -> &'static str {
    match o {
        TriangulationOrder::Lex => "lex",
        TriangulationOrder::RevLex => "revlex",
    }
}

pub fn fan_json(fw: &PlanarFramework, t: &Triangulation, fan: &Fan, order: TriangulationOrder) -> Result<Value> {
    let vid = |v: usize| fw.vertices()[v].id.clone();
    let rays: Vec<Value> = fan
        .rays
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let label = match r.label {
                RayLabel::Assistant => json!("assistant"),
                RayLabel::Vertex(v) => json!({"vertex": vid(v)}),
            };
            json!({"index": i, "name": crate::chow::ray_name(i), "generator": r.generator.iter().map(int_json).collect::<Vec<_>>(), "label": label})
        })
        .collect();
    let mut max_cones = Vec::new();
    for (c, cone) in fan.max_cones.iter().enumerate() {
        max_cones.push(json!({"name": fan.cone_name(c), "rays": cone.rays, "mult": crate::chow::cone_mult(fan, c)?.to_string()}));
    }
    let mut walls = Vec::new();
    for (w, wall) in fan.walls.iter().enumerate() {
        let (kind, source) = match wall.kind {
            WallKind::Framework(e) => ("framework", json!(fw.edge_label(e))),
            WallKind::Added(a, b) => ("added", json!([vid(a), vid(b)])),
            WallKind::Assistant(v) => ("assistant", json!(vid(v))),
            WallKind::Unclassified => ("unclassified", Value::Null),
        };
        walls.push(json!({
            "name": fan.wall_name(w),
            "rays": wall.rays,
            "cones": wall.cones,
            "kind": kind,
            "source": source,
            "mult": crate::chow::wall_mult(fan, w)?.to_string(),
        }));
    }
    let report = validate_fan(fan);
    Ok(json!({
        "rays": rays,
        "max_cones": max_cones,
        "walls": walls,
        "hull": fan.hull,
        "triangulation": {
            "order": order_name(order),
            "triangles": t.triangles.iter().map(|tr| tr.iter().map(|&v| vid(v)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "added_edges": t.added_edges.iter().map(|&(a, b)| [vid(a), vid(b)]).collect::<Vec<_>>(),
        },
        "validation": {"valid": report.is_valid(), "directions_checked": report.directions_checked},
    }))
}

pub struct Tables {
    pub multiplicities: Vec<MultiplicityRow>,
    pub intersections: IntersectionTable,
}

pub fn tables(fan: &Fan) -> Result<Tables> {
    Ok(Tables { multiplicities: multiplicity_table(fan)?, intersections: intersection_table(fan)? })
}

impl Tables {
    pub fn to_json(&self) -> Value {
        json!({
            "multiplicities": self.multiplicities,
            "intersections": {
                "rays": self.intersections.ray_names,
                "walls": self.intersections.wall_names,
                "entries": self.intersections.formatted(),
            },
        })
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("cone\tmult\n");
        for r in &self.multiplicities {
            s.push_str(&format!("{}\t{}\n", r.cone, r.mult));
        }
        s.push('\n');
        s.push_str(&format!("\t{}\n", self.intersections.wall_names.iter().map(|w| format!("V({w})")).collect::<Vec<_>>().join("\t")));
        for (name, row) in self.intersections.ray_names.iter().zip(self.intersections.formatted()) {
            s.push_str(&format!("{name}\t{}\n", row.join("\t")));
        }
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::from("| cone | mult |\n|---|---|\n");
        for r in &self.multiplicities {
            s.push_str(&format!("| {} | {} |\n", r.cone, r.mult));
        }
        let walls = &self.intersections.wall_names;
        s.push_str(&format!("\n| | {} |\n", walls.iter().map(|w| format!("V({w})")).collect::<Vec<_>>().join(" | ")));
        s.push_str(&format!("|---|{}\n", "---|".repeat(walls.len())));
        for (name, row) in self.intersections.ray_names.iter().zip(self.intersections.formatted()) {
            s.push_str(&format!("| {name} | {} |\n", row.join(" | ")));
        }
        s
    }
}

/// Result of `analyze`: JSON payload plus exit status.
pub struct Analysis {
    pub json: Value,
    pub status: Status,
}

fn invalid(v: &ValidationReport) -> Analysis {
    Analysis {
        json: json!({
            "valid": false,
            "validation": validation_json(v),
            "dim_stress_space": null,
            "stress_basis": [],
            "routes_agree": null,
            "fan": null,
        }),
        status: Status::Invalid,
    }
}

fn witnesses_json(c: &RouteComparison) -> Value {
    serde_json::to_value(&c.witnesses).expect("witnesses serialize")
}

pub fn analyze_planar(fw: &PlanarFramework, opts: AnalyzeOptions) -> Result<Analysis> {
    let v = validate_planar(fw);
    if !v.is_valid() {
        return Ok(invalid(&v));
    }
    let route_a = if opts.route.runs_a() { Some(self_stress_basis(fw)?) } else { None };
    let mut out = Map::new();
    out.insert("valid".into(), json!(true));
    out.insert("kind".into(), json!("planar"));
    out.insert("validation".into(), validation_json(&v));

    let mut status = Status::Ok;
    let mut route_b = None;
    let mut agree = Value::Null;
    let mut fan_value = Value::Null;
    let mut extra = Map::new();
    if opts.route.runs_b() {
        match triangulate(fw, opts.order).and_then(|t| build_fan(fw, &t).map(|f| (t, f))) {
            Ok((t, fan)) => {
                let cmp = compare_routes_on(fw, &fan)?;
                extra.insert(
                    "route_b".into(),
                    json!({
                        "dim": cmp.route_b.dim(),
                        "divisors": cmp.route_b.divisors.iter().map(|d| d.render()).collect::<Vec<_>>(),
                        "divisor_basis": cmp.route_b.basis.kept.iter().map(|&r| crate::chow::ray_name(r)).collect::<Vec<_>>(),
                        "stress_basis": basis_json(&cmp.route_b.stresses),
                    }),
                );
                if route_a.is_some() {
                    agree = json!(cmp.agree());
                    if !cmp.agree() {
                        status = Status::Disagreement;
                        extra.insert("witnesses".into(), witnesses_json(&cmp));
                    }
                }
                fan_value = fan_json(fw, &t, &fan, opts.order)?;
                if opts.tables {
                    extra.insert("tables".into(), tables(&fan)?.to_json());
                }
                route_b = Some(cmp.route_b.stresses);
            }
            Err(e @ Error::DegenerateHull) => {
                extra.insert("route_b_skipped".into(), json!(e.to_string()));
            }
            Err(e) => return Err(e),
        }
    }
    let basis = route_a.as_ref().or(route_b.as_ref());
    out.insert("dim_stress_space".into(), basis.map_or(Value::Null, |b| json!(b.dim())));
    out.insert("stress_basis".into(), basis.map_or(json!([]), basis_json));
    out.insert("routes_agree".into(), agree);
    out.extend(extra);
    out.insert("fan".into(), fan_value);
    Ok(Analysis { json: Value::Object(out), status })
}

fn local_fan_json(fw: &KFramework, lf: &LocalFan) -> Value {
    json!({
        "edge": fw.edges()[lf.edge].id,
        "rays": lf.rays.iter().map(|r| json!({
            "vector": [int_json(&r.vector[0]), int_json(&r.vector[1])],
            "label": match r.label {
                LocalRayLabel::Face(f) => json!({"face": fw.faces()[f].id}),
                LocalRayLabel::Assistant => json!("assistant"),
            },
        })).collect::<Vec<_>>(),
    })
}

pub fn analyze_general(fw: &KFramework, opts: AnalyzeOptions) -> Result<Analysis> {
    let v = validate_general(fw);
    if !v.is_valid() {
        return Ok(invalid(&v));
    }
    let route_a = if opts.route.runs_a() { Some(self_stress_basis(fw)?) } else { None };
    let mut out = Map::new();
    out.insert("valid".into(), json!(true));
    out.insert("kind".into(), json!("general"));
    out.insert("validation".into(), validation_json(&v));
    let mut status = Status::Ok;
    let mut agree = Value::Null;
    let mut glued = None;
    let mut extra = Map::new();
    if opts.route.runs_b() {
        match glued_stress_space(fw) {
            Ok(b) => {
                let sys = glued_system(fw)?;
                let check = theorem1_check(fw, &b.vectors)?;
                extra.insert("local_fans".into(), sys.local_fans.iter().map(|lf| local_fan_json(fw, lf)).collect());
                extra.insert("theorem1_check".into(), json!(check.passed()));
                if route_a.is_some() {
                    agree = json!(check.passed());
                }
                glued = Some(b);
            }
            Err(Error::Theorem1Mismatch(m)) => {
                status = Status::Disagreement;
                agree = json!(false);
                extra.insert("witnesses".into(), json!([m]));
            }
            Err(e @ (Error::UnsupportedCodim { .. } | Error::GenericityViolation(..))) => {
                extra.insert("route_b_skipped".into(), json!(e.to_string()));
            }
            Err(e) => return Err(e),
        }
    }
    let basis = route_a.as_ref().or(glued.as_ref());
    out.insert("dim_stress_space".into(), basis.map_or(Value::Null, |b| json!(b.dim())));
    out.insert("stress_basis".into(), basis.map_or(json!([]), basis_json));
    out.insert("routes_agree".into(), agree);
    out.extend(extra);
    out.insert("fan".into(), Value::Null);
    Ok(Analysis { json: Value::Object(out), status })
}

/// Human-readable rendering of an analysis JSON payload.
pub fn analysis_text(v: &Value) -> String {
    let mut s = String::new();
    if v["valid"] == json!(false) {
        s.push_str("invalid framework\n");
        for f in v["validation"]["failures"].as_array().into_iter().flatten() {
            s.push_str(&format!("  failure: {}\n", f["message"].as_str().unwrap_or("")));
        }
        return s;
    }
    for w in v["validation"]["warnings"].as_array().into_iter().flatten() {
        s.push_str(&format!("warning: {}\n", w["message"].as_str().unwrap_or("")));
    }
    let dim = v["dim_stress_space"].as_u64();
    match dim {
        Some(0) => s.push_str("self-stress space: dimension 0 (no tensegrity)\n"),
        Some(d) => s.push_str(&format!("self-stress space: dimension {d}\n")),
        None => s.push_str("self-stress space: not computed\n"),
    }
    for (i, b) in v["stress_basis"].as_array().into_iter().flatten().enumerate() {
        let entries: Vec<String> = b.as_object().into_iter().flatten().map(|(k, x)| format!("{k}={}", x.as_str().unwrap_or(""))).collect();
        s.push_str(&format!("  w{}: {}\n", i + 1, entries.join(" ")));
    }
    if let Some(d) = v["route_b"]["divisors"].as_array() {
        for d in d {
            s.push_str(&format!("  divisor: {}\n", d.as_str().unwrap_or("")));
        }
    }
    if let Some(r) = v["route_b_skipped"].as_str() {
        s.push_str(&format!("second route skipped: {r}\n"));
    }
    match v["routes_agree"].as_bool() {
        Some(true) => s.push_str("routes agree\n"),
        Some(false) => s.push_str("ROUTES DISAGREE\n"),
        None => {}
    }
    s
}

pub fn fan_text(v: &Value) -> String {
    let mut s = String::new();
    for r in v["rays"].as_array().into_iter().flatten() {
        let g: Vec<String> = r["generator"].as_array().into_iter().flatten().map(|x| x.to_string()).collect();
        let label = match &r["label"] {
            Value::String(x) => x.clone(),
            l => format!("vertex {}", l["vertex"].as_str().unwrap_or("")),
        };
        s.push_str(&format!("ray {} ({}) {}\n", r["name"].as_str().unwrap_or(""), g.join(", "), label));
    }
    for c in v["max_cones"].as_array().into_iter().flatten() {
        s.push_str(&format!("cone {} mult {}\n", c["name"].as_str().unwrap_or(""), c["mult"].as_str().unwrap_or("")));
    }
    for w in v["walls"].as_array().into_iter().flatten() {
        s.push_str(&format!("wall {} {} mult {}\n", w["name"].as_str().unwrap_or(""), w["kind"].as_str().unwrap_or(""), w["mult"].as_str().unwrap_or("")));
    }
    s
}

pub fn validation_text(v: &ValidationReport) -> String {
    let mut s = String::from(if v.is_valid() { "valid\n" } else { "invalid\n" });
    for f in &v.failures {
        s.push_str(&format!("  failure: {f}\n"));
    }
    for w in &v.warnings {
        s.push_str(&format!("  warning: {w}\n"));
    }
    s
}
