//! Command handlers.
//!
//! Each handler parses its inputs, runs the corresponding library kernel,
//! and renders the result either as one line of compact JSON (the default)
//! or as human-readable text (`--pretty`). Handlers return the rendered
//! output together with the process exit code; all failures travel through
//! [`CliError`](crate::error::CliError).

use std::path::Path;

use case_studies::{run_all, suite_by_name, VerificationReport};
use isometry_engine::{
    e8_simple_root_reflections, eichler_normalize, induced_disc_action, orbit_sizes, orbits,
};
use lattice_core::disc::DiscriminantGroup;
use lattice_core::standard::make_standard;
use lattice_core::{GramLattice, Int};
use nikulin_model::{div_hat1, in_lambda_hat1, named_class, ClassAmbient};
use orbit_classifier::{classify_hat, classify_lambda, OrbitClass};
use wall_oracle::{
    is_wall, k3_family_walls, kahler_side_test, walls_in_picard, K3Kind, PicardEmbedding,
    WallReport,
};

use crate::error::CliError;
use crate::json::{jarr, jbool, jint, jints, jobj, jopt, jrows, jstr};
use crate::picfile::load_pic;

/// Rendered output plus the exit code to finish with.
#[derive(Debug)]
pub struct Outcome {
    /// Text for stdout (one JSON line, or pretty text).
    pub stdout: String,
    /// Process exit code; nonzero only for `verify` failures.
    pub exit: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, exit: 0 }
    }
}

/// Parse a comma-separated coordinate vector of the given length.
///
/// Malformed entries are usage errors; a length mismatch is a precondition
/// violation (the request is well-formed but does not fit the lattice).
fn parse_coords(text: &str, rank: usize) -> Result<Vec<Int>, CliError> {
    let mut coords = Vec::new();
    for tok in text.split(',') {
        let tok = tok.trim();
        let n: Int = tok.parse().map_err(|_| {
            CliError::Usage(format!("coordinate {tok:?} is not an integer"))
        })?;
        coords.push(n);
    }
    if coords.len() != rank {
        return Err(CliError::Precondition(format!(
            "expected {rank} coordinates, got {}",
            coords.len()
        )));
    }
    Ok(coords)
}

fn pretty_coords(v: &[Int]) -> String {
    let body: Vec<String> = v.iter().map(Int::to_string).collect();
    format!("({})", body.join(", "))
}

/// `wallkit lattice show --name <name>`
pub fn lattice_show(name: &str, pretty: bool) -> Result<Outcome, CliError> {
    let l = make_standard(name)?;
    if pretty {
        let mut out = format!(
            "{}: rank {}, det {}, {}\n",
            l.name(),
            l.rank(),
            l.det(),
            if l.is_even() { "even" } else { "odd" }
        );
        for row in l.gram() {
            out.push_str(&format!("  {}\n", pretty_coords(row)));
        }
        return Ok(Outcome::ok(out.trim_end().to_string()));
    }
    Ok(Outcome::ok(jobj(&[
        ("name", jstr(l.name())),
        ("rank", l.rank().to_string()),
        ("det", jint(&l.det())),
        ("even", jbool(l.is_even())),
        ("gram", jrows(l.gram())),
    ])))
}

/// `wallkit class show --name <name>`
pub fn class_show(name: &str, pretty: bool) -> Result<Outcome, CliError> {
    let class = named_class(name)?;
    let ambient = match class.ambient {
        ClassAmbient::Lambda => "Lambda",
        ClassAmbient::LambdaHat => "LambdaHat",
    };
    if pretty {
        return Ok(Outcome::ok(format!(
            "{} in {}: {}",
            class.name,
            ambient,
            pretty_coords(&class.coords)
        )));
    }
    Ok(Outcome::ok(jobj(&[
        ("name", jstr(&class.name)),
        ("ambient", jstr(ambient)),
        ("coords", jints(&class.coords)),
    ])))
}

/// `wallkit vec invariants --lattice <name> --coords <list>`
///
/// Reports the norm and the divisibility of the vector in the named lattice.
/// In `LambdaHat1` the divisibility is taken with respect to the index-two
/// sublattice, which is what the classification tables use.
pub fn vec_invariants(lattice: &str, coords: &str, pretty: bool) -> Result<Outcome, CliError> {
    let l = make_standard(lattice)?;
    let v = parse_coords(coords, l.rank())?;
    let q = l.norm(&v)?;
    let div = if l.name() == "LambdaHat1" {
        if !in_lambda_hat1(&v) {
            return Err(CliError::Precondition(
                "vector is not in LambdaHat1 (odd last-two coordinate sum)".to_string(),
            ));
        }
        div_hat1(&v)?
    } else {
        l.divisibility(&v)?
    };
    if pretty {
        return Ok(Outcome::ok(format!("q = {q}\ndiv = {div}")));
    }
    Ok(Outcome::ok(jobj(&[("q", jint(&q)), ("div", jint(&div))])))
}

fn render_class(class: &OrbitClass, pretty: bool) -> String {
    let inv = &class.invariants;
    if pretty {
        let mut out = format!(
            "case {} with i = {}\nrepresentative: {}\nq = {}, div = {}",
            class.case_id,
            class.i,
            pretty_coords(&class.representative),
            inv.q,
            inv.div
        );
        if let Some(e) = &inv.e_bar {
            out.push_str(&format!(
                ", e-bar {}",
                if e.is_zero() { "zero" } else { "nonzero" }
            ));
        }
        if let Some(qbar) = inv.qbar {
            out.push_str(&format!(", q-bar {qbar}"));
        }
        if let Some(pred) = inv.hat_div1 {
            out.push_str(&format!(", hat-div-1 {pred}"));
        }
        return out;
    }
    let invariants = jobj(&[
        ("q", jint(&inv.q)),
        ("div", jint(&inv.div)),
        (
            "e_bar_zero",
            jopt(inv.e_bar.as_ref().map(|e| jbool(e.is_zero()))),
        ),
        ("qbar", jopt(inv.qbar.map(|n| n.to_string()))),
        ("hat_div1", jopt(inv.hat_div1.map(jbool))),
    ]);
    jobj(&[
        ("case", class.case_id.to_string()),
        ("i", jint(&class.i)),
        ("representative", jints(&class.representative)),
        ("invariants", invariants),
    ])
}

/// `wallkit classify --lattice <Lambda|LambdaHat1> --coords <list>`
pub fn classify(lattice: &str, coords: &str, pretty: bool) -> Result<Outcome, CliError> {
    let l = make_standard(lattice)?;
    let v = parse_coords(coords, l.rank())?;
    let class = match l.name() {
        "Lambda" => classify_lambda(&v)?,
        "LambdaHat1" => classify_hat(&v)?,
        other => {
            return Err(CliError::Precondition(format!(
                "classification is defined in Lambda and LambdaHat1, not {other}"
            )))
        }
    };
    Ok(Outcome::ok(render_class(&class, pretty)))
}

/// `wallkit wall test --coords <list>`
///
/// Membership is a property of rays in the Nikulin lattice, so the input may
/// be any nonzero integer vector; the primitive generator is tested.
pub fn wall_test(coords: &str, pretty: bool) -> Result<Outcome, CliError> {
    let lambda = make_standard("Lambda").expect("registry lattice");
    let v = parse_coords(coords, lambda.rank())?;
    let wall = is_wall(&v)?;
    if pretty {
        return Ok(Outcome::ok(format!(
            "wall divisor: {}",
            if wall { "yes" } else { "no" }
        )));
    }
    Ok(Outcome::ok(jobj(&[("is_wall", jbool(wall))])))
}

/// Enumerate the wall report for a Picard file, dispatching on its ambient.
fn report_for(ambient: &GramLattice, basis: Vec<Vec<Int>>) -> Result<WallReport, CliError> {
    let pic = PicardEmbedding::new(ambient.clone(), basis)?;
    let report = match ambient.name() {
        "Lambda" => walls_in_picard(&pic)?,
        "LambdaK3" => k3_family_walls(K3Kind::K3, &pic)?,
        "LambdaK3_2" => k3_family_walls(K3Kind::K3Two, &pic)?,
        other => {
            return Err(CliError::Precondition(format!(
                "wall enumeration is defined in Lambda, K3, and K3[2] ambients, not {other}"
            )))
        }
    };
    Ok(report)
}

/// `wallkit walls enum --pic <file>`
pub fn walls_enum(pic_path: &Path, pretty: bool) -> Result<Outcome, CliError> {
    let pic = load_pic(pic_path)?;
    let ambient_name = pic.ambient.name().to_string();
    let report = report_for(&pic.ambient, pic.basis)?;
    if pretty {
        let mut out = format!(
            "{} wall ray(s) in {} ({})\n",
            report.walls.len(),
            ambient_name,
            if report.complete { "complete" } else { "possibly incomplete" }
        );
        for w in &report.walls {
            out.push_str(&format!(
                "  {}  q = {}, div = {}{}\n",
                pretty_coords(&w.coords),
                w.q,
                w.div,
                match w.case_id {
                    Some(c) => format!(", case {c}"),
                    None => String::new(),
                }
            ));
        }
        return Ok(Outcome::ok(out.trim_end().to_string()));
    }
    let walls = jarr(report.walls.iter().map(|w| {
        jobj(&[
            ("coords", jints(&w.coords)),
            ("q", jint(&w.q)),
            ("div", jint(&w.div)),
            ("case", jopt(w.case_id.map(|c| c.to_string()))),
        ])
    }));
    Ok(Outcome::ok(jobj(&[
        ("ambient", jstr(&ambient_name)),
        ("complete", jbool(report.complete)),
        ("walls", walls),
    ])))
}

/// `wallkit kahler test --pic <file> --omega <list> --alpha <list>`
pub fn kahler_test(
    pic_path: &Path,
    omega: &str,
    alpha: &str,
    pretty: bool,
) -> Result<Outcome, CliError> {
    let pic = load_pic(pic_path)?;
    let rank = pic.ambient.rank();
    let omega = parse_coords(omega, rank)?;
    let alpha = parse_coords(alpha, rank)?;
    let ambient = pic.ambient.clone();
    let report = report_for(&pic.ambient, pic.basis)?;
    let inside = kahler_side_test(&ambient, &alpha, &omega, &report)?;
    if pretty {
        return Ok(Outcome::ok(format!(
            "inside the Kähler chamber of omega: {}",
            if inside { "yes" } else { "no" }
        )));
    }
    Ok(Outcome::ok(jobj(&[("in_chamber", jbool(inside))])))
}

/// `wallkit disc --lattice <name> [--orbits]`
pub fn disc(lattice: &str, with_orbits: bool, pretty: bool) -> Result<Outcome, CliError> {
    let l = make_standard(lattice)?;
    let disc = DiscriminantGroup::new(&l)?;
    if with_orbits {
        let order = disc.order_u64().ok_or_else(|| {
            CliError::Precondition(format!(
                "discriminant group of order {} is too large to enumerate",
                disc.order()
            ))
        })?;
        let perms: Vec<Vec<usize>> = e8_simple_root_reflections(&l)?
            .iter()
            .map(|r| induced_disc_action(&disc, r))
            .collect::<Result<_, _>>()?;
        let sizes = orbit_sizes(&orbits(order as usize, &perms));
        if pretty {
            let body: Vec<String> = sizes.iter().map(usize::to_string).collect();
            return Ok(Outcome::ok(format!("orbit sizes: {}", body.join(", "))));
        }
        return Ok(Outcome::ok(jobj(&[(
            "orbit_sizes",
            jarr(sizes.iter().map(usize::to_string)),
        )])));
    }
    if pretty {
        return Ok(Outcome::ok(format!(
            "order {}, invariant factors {}",
            disc.order(),
            pretty_coords(disc.invariant_factors())
        )));
    }
    Ok(Outcome::ok(jobj(&[
        ("order", jint(&disc.order())),
        ("invariant_factors", jints(disc.invariant_factors())),
    ])))
}

/// `wallkit eichler normalize --lattice <name> --from <list> --to <list>`
pub fn eichler(lattice: &str, from: &str, to: &str, pretty: bool) -> Result<Outcome, CliError> {
    let l = make_standard(lattice)?;
    let v = parse_coords(from, l.rank())?;
    let w = parse_coords(to, l.rank())?;
    let norm = eichler_normalize(&l, &v, &w)?;
    if pretty {
        let mut out = format!(
            "certified isometry from {} transvection(s)\n",
            norm.transvections
        );
        for row in norm.isometry.matrix() {
            out.push_str(&format!("  {}\n", pretty_coords(row)));
        }
        return Ok(Outcome::ok(out.trim_end().to_string()));
    }
    Ok(Outcome::ok(jobj(&[
        ("certified", jbool(true)),
        ("transvections", norm.transvections.to_string()),
        ("matrix", jrows(norm.isometry.matrix())),
    ])))
}

fn render_reports(reports: &[VerificationReport], pretty: bool) -> String {
    if pretty {
        let body: Vec<String> = reports.iter().map(VerificationReport::to_string).collect();
        return body.join("\n").trim_end().to_string();
    }
    let pass = reports.iter().all(|r| r.pass);
    let suites = jarr(reports.iter().map(|r| {
        let checks = jarr(r.checks.iter().map(|c| {
            jobj(&[
                ("description", jstr(&c.description)),
                ("expected", jstr(&c.expected)),
                ("actual", jstr(&c.actual)),
                ("pass", jbool(c.pass)),
            ])
        }));
        jobj(&[
            ("suite", jstr(&r.suite)),
            ("pass", jbool(r.pass)),
            ("checks", checks),
        ])
    }));
    jobj(&[("pass", jbool(pass)), ("suites", suites)])
}

/// `wallkit verify --suite <all|name>`
///
/// Exit code 1 when any check fails; the report still goes to stdout.
pub fn verify(suite: &str, pretty: bool) -> Result<Outcome, CliError> {
    let reports = if suite == "all" {
        run_all()
    } else {
        vec![suite_by_name(suite).ok_or_else(|| {
            CliError::Precondition(format!(
                "unknown suite {suite:?}; expected all, generic, one-curve, two-curves, elliptic, or involution"
            ))
        })?]
    };
    let pass = reports.iter().all(|r| r.pass);
    Ok(Outcome {
        stdout: render_reports(&reports, pretty),
        exit: if pass { 0 } else { 1 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_parsing_separates_usage_from_precondition() {
        assert!(parse_coords("1, -2, 3", 3).is_ok());
        assert_eq!(parse_coords("1,x", 2).unwrap_err().exit_code(), 2);
        assert_eq!(parse_coords("1,2", 3).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn the_published_invariant_line_is_byte_exact() {
        let coords = "0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1";
        let out = vec_invariants("Lambda", coords, false).unwrap();
        assert_eq!(out.stdout, "{\"q\":-4,\"div\":2}");
        assert_eq!(out.exit, 0);
    }

    #[test]
    fn wall_test_is_byte_exact() {
        let h1 = "0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0";
        let out = wall_test(h1, false).unwrap();
        assert_eq!(out.stdout, "{\"is_wall\":false}");
    }

    #[test]
    fn classification_requires_a_supported_ambient() {
        let err = classify("E8m2", "1,0,0,0,0,0,0,0", false).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn hat1_membership_is_enforced_for_invariants() {
        let mut coords = vec!["0"; 16];
        coords[14] = "1";
        let joined = coords.join(",");
        let err = vec_invariants("LambdaHat1", &joined, false).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn verify_reports_carry_the_exit_code() {
        let out = verify("generic", false).unwrap();
        assert_eq!(out.exit, 0);
        assert!(out.stdout.starts_with("{\"pass\":true,"));
        let err = verify("nope", false).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
