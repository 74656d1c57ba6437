//! Report formatting: verdict blocks, the branched-cover report, and the
//! machine-readable JSON form. Output is fully deterministic.

use serde_json::{json, Value};
use swcover::constraints::{
    Scenario, Status, Surfaces, Verdict,
};
use swcover::cover::{
    cover_dimension, cover_exists, cover_topology, ctilde, family_indices, normalize_pairing, nu,
    BranchSphere, SphereConfig, SpinCFamily,
};
use swcover::error::Error;
use swcover::exactmath::modp::ModP;
use swcover::swcalc::{partition_consistency, PartitionOutcome};

pub fn format_verdicts(verdicts: &[Verdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let status = match &v.status {
            Status::Consistent => "CONSISTENT".to_string(),
            Status::Obstructed => "OBSTRUCTED".to_string(),
            Status::NonSimpleTypeConstruction(_) => "NON-SIMPLE-TYPE CONSTRUCTION".to_string(),
            Status::NotApplicable => "NOT APPLICABLE".to_string(),
        };
        out.push_str(&format!("== {}: {}\n", v.check, status));
        if let Some(w) = &v.witness {
            out.push_str(&format!("   witness: {}\n", w));
        }
        if let Status::NonSimpleTypeConstruction(recipe) = &v.status {
            out.push_str("   construction:\n");
            for step in &recipe.steps {
                out.push_str(&format!("     - {}\n", step));
            }
        }
        for note in &v.notes {
            out.push_str(&format!("   note: {}\n", note));
        }
    }
    out
}

pub fn verdicts_json(verdicts: &[Verdict]) -> Value {
    Value::Array(
        verdicts
            .iter()
            .map(|v| {
                let status = match &v.status {
                    Status::Consistent => "consistent",
                    Status::Obstructed => "obstructed",
                    Status::NonSimpleTypeConstruction(_) => "non-simple-type-construction",
                    Status::NotApplicable => "not-applicable",
                };
                let mut obj = json!({
                    "check": v.check,
                    "status": status,
                    "notes": v.notes,
                });
                if let Some(w) = &v.witness {
                    obj["witness"] = json!({
                        "text": w.to_string(),
                        "holds": w.holds(),
                    });
                }
                if let Status::NonSimpleTypeConstruction(recipe) = &v.status {
                    obj["construction"] = Value::Array(
                        recipe.steps.iter().map(|s| Value::String(s.to_string())).collect(),
                    );
                }
                obj
            })
            .collect(),
    )
}

pub fn any_obstructed(verdicts: &[Verdict]) -> bool {
    verdicts.iter().any(|v| v.status.is_obstructed())
}

/// The branched-cover report: existence, topology transfer, the per-sphere
/// nu table, the expected dimension, the APS index family and the covering
/// formula evaluation. Returns the text and whether a contradiction or
/// inconsistency was found.
pub fn cover_report(scenario: &Scenario) -> Result<(String, bool), Error> {
    let mut out = String::new();
    let mut contradiction = false;
    let Surfaces::Spheres(entries) = &scenario.surfaces else {
        return Err(Error::MalformedScenario(
            "the cover report needs a sphere configuration".into(),
        ));
    };
    let Some(p) = scenario.cover_p else {
        return Err(Error::MalformedScenario(
            "the cover report needs a cover degree (cover.p)".into(),
        ));
    };
    out.push_str(&format!("branched cover of degree p = {p}\n"));
    let config = SphereConfig::new(
        p,
        entries
            .iter()
            .map(|e| BranchSphere {
                n: e.n,
                phi: e.weight,
                class_mod_p: e.class_mod_p.clone(),
            })
            .collect(),
    )?;
    let existence = cover_exists(&config, scenario.manifold.h1_coprime.contains(&p))?;
    out.push_str(&format!(
        "existence: {} ({})\n",
        if existence.exists { "yes" } else { "no" },
        existence.reason
    ));
    if !existence.exists {
        return Ok((out, false));
    }

    let ns: Vec<u64> = entries.iter().map(|e| e.n).collect();
    match cover_topology(p, scenario.manifold.sigma, scenario.manifold.b_plus, &ns) {
        Ok(topology) => {
            out.push_str(&format!(
                "topology transfer: rho = {}, sigma(X_0) = {}, sigma(cover_0) = {}, sigma(cover) = {}, b_+(cover_0) = {}\n",
                topology.rho,
                topology.sigma_x0,
                topology.sigma_cover0,
                topology.sigma_cover,
                topology.b_plus_cover0
            ));
        }
        Err(e) => out.push_str(&format!("topology transfer unavailable: {e}\n")),
    }

    let Some(class) = scenario.sw.iter().find(|c| c.sw_family.is_some()) else {
        out.push_str("no SW family supplied; stopping before the covering formula\n");
        return Ok((out, false));
    };
    let c_norm: Vec<i64> = class
        .pairings
        .iter()
        .zip(entries)
        .map(|(&c, e)| normalize_pairing(e.n, c))
        .collect();
    out.push_str("nu table:\n");
    for (i, (e, &c)) in entries.iter().zip(&c_norm).enumerate() {
        let ct = ctilde(e.n, p, c)?;
        let value = nu(p, e.n, c)?;
        out.push_str(&format!(
            "  sphere {i}: n = {}, c = {c}, lifted pairing = {ct}, nu = {value}\n",
            e.n
        ));
    }
    let pairs: Vec<(u64, i64)> = entries.iter().zip(&c_norm).map(|(e, &c)| (e.n, c)).collect();
    let d_cover = match cover_dimension(p, class.d, &pairs) {
        Ok(d) => {
            out.push_str(&format!("d(cover) = {d}\n"));
            Some(d)
        }
        Err(Error::NonIntegralDimension { value }) => {
            out.push_str(&format!(
                "CONTRADICTION: d(cover) = {value} is not an integer; the configuration is impossible\n"
            ));
            contradiction = true;
            None
        }
        Err(e) => return Err(e),
    };

    let sw_vec: Vec<ModP> = class
        .sw_family
        .as_ref()
        .unwrap()
        .iter()
        .map(|&v| ModP::new(v as i64, p))
        .collect::<Result<_, _>>()?;
    let family = SpinCFamily {
        c: c_norm,
        d_x: class.d,
        b_plus: scenario.manifold.b_plus,
        sw_mod_p: sw_vec.clone(),
    };
    let d_vec = match family_indices(p, &config, &family) {
        Ok(d) => {
            out.push_str(&format!(
                "APS index family: ({})\n",
                d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
            ));
            Some(d)
        }
        Err(Error::NonIntegralIndex { j, value }) => {
            out.push_str(&format!(
                "CONTRADICTION: APS index d_{j} = {value} is not an integer; the input scenario is impossible\n"
            ));
            contradiction = true;
            None
        }
        Err(e) => return Err(e),
    };

    if let (Some(d_cover), Some(d_vec)) = (d_cover, d_vec) {
        if d_cover < 0 {
            out.push_str("d(cover) < 0: SW(cover) = 0\n");
        } else {
            let m = ((d_cover + 1) / 2) as u64;
            out.push_str(&format!("covering formula over compositions of m = {m}:\n"));
            match partition_consistency(p, m, &d_vec, scenario.manifold.b_plus, &sw_vec)? {
                PartitionOutcome::Consistent(value) => {
                    let unit = if p != 2 { " x e (unit in Z_p^*)" } else { "" };
                    out.push_str(&format!("  SW(cover) = {value} (mod {p}){unit}\n"));
                    let k = sw_vec.iter().filter(|v| !v.is_zero()).count();
                    if k > 1 && d_cover == 2 * k as i64 - 2 && !value.is_zero() {
                        out.push_str(
                            "  NON-SIMPLE-TYPE CONSTRUCTION: SW(cover) != 0 in positive moduli dimension\n",
                        );
                    }
                }
                PartitionOutcome::Contradiction { first, second } => {
                    out.push_str(&format!(
                        "  CONTRADICTION: composition ({}) gives {} but ({}) gives {}; the SW family is impossible\n",
                        first.0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "),
                        first.1,
                        second.0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "),
                        second.1,
                    ));
                    contradiction = true;
                }
            }
        }
    }
    Ok((out, contradiction))
}
