//! Deterministic textual reports.
//!
//! Every number in a report is printed with 12 significant digits in
//! scientific notation, so repeated runs and golden files compare
//! byte-for-byte. JSON is the canonical format; CSV is a flat two-column
//! projection of the same content for spreadsheets.

use crate::matching::{MatchingResult, PairingEnd};
use crate::metrics::VerificationReport;
use crate::operators::AxiomReport;
use crate::persistence::PersistenceDiagram;

/// Formats a number with 12 significant digits.
pub fn fmt_sig(x: f64) -> String {
    format!("{x:.11e}")
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn number_list(xs: &[f64]) -> String {
    let body: Vec<String> = xs.iter().map(|x| fmt_sig(*x)).collect();
    format!("[{}]", body.join(", "))
}

/// CSV field with RFC 4180 quoting when the content needs it.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn diagram_json(d: &PersistenceDiagram) -> String {
    let pairs: Vec<String> = d
        .finite_deg0()
        .iter()
        .map(|(b, dth)| format!("[{}, {}]", fmt_sig(*b), fmt_sig(*dth)))
        .collect();
    format!(
        "{{\n  \"finite_deg0\": [{}],\n  \"essential_deg0\": {},\n  \"essential_deg1\": {}\n}}\n",
        pairs.join(", "),
        number_list(d.essential_deg0()),
        number_list(d.essential_deg1()),
    )
}

pub fn diagram_csv(d: &PersistenceDiagram) -> String {
    let mut out = String::from("kind,birth,death\n");
    for (b, dth) in d.finite_deg0() {
        out.push_str(&format!("finite_deg0,{},{}\n", fmt_sig(*b), fmt_sig(*dth)));
    }
    for b in d.essential_deg0() {
        out.push_str(&format!("essential_deg0,{},inf\n", fmt_sig(*b)));
    }
    for b in d.essential_deg1() {
        out.push_str(&format!("essential_deg1,{},inf\n", fmt_sig(*b)));
    }
    out
}

fn pairing_end_json(end: &PairingEnd) -> String {
    match end {
        PairingEnd::Point(i) => i.to_string(),
        PairingEnd::Diagonal => "null".to_string(),
    }
}

pub fn matching_json(r: &MatchingResult) -> String {
    let pairing: Vec<String> = r
        .pairing
        .iter()
        .map(|(l, right)| {
            format!(
                "{{\"left\": {}, \"right\": {}}}",
                pairing_end_json(l),
                pairing_end_json(right)
            )
        })
        .collect();
    format!(
        "{{\n  \"distance\": {},\n  \"finite_cost\": {},\n  \"essential_cost_deg0\": {},\n  \"essential_cost_deg1\": {},\n  \"pairing\": [{}]\n}}\n",
        fmt_sig(r.distance),
        fmt_sig(r.finite_cost),
        fmt_sig(r.essential_cost_deg0),
        fmt_sig(r.essential_cost_deg1),
        pairing.join(", "),
    )
}

pub fn matching_csv(r: &MatchingResult) -> String {
    let mut out = String::from("key,value\n");
    out.push_str(&format!("distance,{}\n", fmt_sig(r.distance)));
    out.push_str(&format!("finite_cost,{}\n", fmt_sig(r.finite_cost)));
    out.push_str(&format!(
        "essential_cost_deg0,{}\n",
        fmt_sig(r.essential_cost_deg0)
    ));
    out.push_str(&format!(
        "essential_cost_deg1,{}\n",
        fmt_sig(r.essential_cost_deg1)
    ));
    out
}

pub fn dg_json(distance: f64, argmin: &crate::group::GroupElement) -> String {
    format!(
        "{{\n  \"distance\": {},\n  \"argmin_g\": {}\n}}\n",
        fmt_sig(distance),
        json_string(&argmin.to_string()),
    )
}

pub fn dg_csv(distance: f64, argmin: &crate::group::GroupElement) -> String {
    format!(
        "key,value\ndistance,{}\nargmin_g,{argmin}\n",
        fmt_sig(distance)
    )
}

pub fn dmatch_json(distance: f64, argmax: &Option<String>, per_op: &[(String, f64)]) -> String {
    let rows: Vec<String> = per_op
        .iter()
        .map(|(label, d)| {
            format!(
                "    {{\"op\": {}, \"distance\": {}}}",
                json_string(label),
                fmt_sig(*d)
            )
        })
        .collect();
    let argmax_json = match argmax {
        Some(label) => json_string(label),
        None => "null".to_string(),
    };
    format!(
        "{{\n  \"distance\": {},\n  \"argmax_op\": {},\n  \"per_op\": [\n{}\n  ]\n}}\n",
        fmt_sig(distance),
        argmax_json,
        rows.join(",\n"),
    )
}

pub fn dmatch_csv(distance: f64, argmax: &Option<String>, per_op: &[(String, f64)]) -> String {
    let mut out = String::from("key,value\n");
    out.push_str(&format!("distance,{}\n", fmt_sig(distance)));
    out.push_str(&format!(
        "argmax_op,{}\n",
        csv_field(argmax.as_deref().unwrap_or(""))
    ));
    for (label, d) in per_op {
        out.push_str(&format!(
            "{},{}\n",
            csv_field(&format!("per_op[{label}]")),
            fmt_sig(*d)
        ));
    }
    out
}

fn axiom_json(label: &str, report: &AxiomReport, indent: &str) -> String {
    let equivariance: Vec<String> = report
        .equivariance_witnesses
        .iter()
        .map(|w| {
            format!(
                "{{\"input\": {}, \"element\": {}, \"violation\": {}}}",
                number_list(w.input.values()),
                json_string(&w.element.to_string()),
                fmt_sig(w.violation)
            )
        })
        .collect();
    let expansiveness: Vec<String> = report
        .expansiveness_witnesses
        .iter()
        .map(|w| {
            format!(
                "{{\"first\": {}, \"second\": {}, \"ratio\": {}}}",
                number_list(w.first.values()),
                number_list(w.second.values()),
                fmt_sig(w.ratio)
            )
        })
        .collect();
    format!(
        "{indent}{{\"op\": {}, \"max_equivariance_violation\": {}, \"max_expansiveness_ratio\": {}, \"trials\": {}, \"seed\": {}, \"pass\": {}, \"equivariance_witnesses\": [{}], \"expansiveness_witnesses\": [{}]}}",
        json_string(label),
        fmt_sig(report.max_equivariance_violation),
        fmt_sig(report.max_expansiveness_ratio),
        report.trials,
        report.seed,
        report.passes(),
        equivariance.join(", "),
        expansiveness.join(", "),
    )
}

pub fn verify_json(r: &VerificationReport) -> String {
    let per_op: Vec<String> = r
        .per_op_distances
        .iter()
        .map(|(label, d)| {
            format!(
                "    {{\"op\": {}, \"distance\": {}}}",
                json_string(label),
                fmt_sig(*d)
            )
        })
        .collect();
    let axioms: Vec<String> = r
        .axiom_reports
        .iter()
        .map(|(label, report)| axiom_json(label, report, "    "))
        .collect();
    let argmax_json = match &r.argmax_op {
        Some(label) => json_string(label),
        None => "null".to_string(),
    };
    format!(
        "{{\n  \"sup_norm\": {},\n  \"d_g\": {},\n  \"argmin_g\": {},\n  \"d_family_match\": {},\n  \"argmax_op\": {},\n  \"per_op_distances\": [\n{}\n  ],\n  \"axioms\": [\n{}\n  ],\n  \"chain_ok\": {},\n  \"stability_ok\": {},\n  \"tolerance\": {},\n  \"seed\": {}\n}}\n",
        fmt_sig(r.sup_norm),
        fmt_sig(r.d_g),
        json_string(&r.argmin_g.to_string()),
        fmt_sig(r.d_family_match),
        argmax_json,
        per_op.join(",\n"),
        axioms.join(",\n"),
        r.chain_ok,
        r.stability_ok,
        fmt_sig(r.tolerance),
        r.seed,
    )
}

pub fn verify_csv(r: &VerificationReport) -> String {
    let mut out = String::from("key,value\n");
    out.push_str(&format!("sup_norm,{}\n", fmt_sig(r.sup_norm)));
    out.push_str(&format!("d_g,{}\n", fmt_sig(r.d_g)));
    out.push_str(&format!("argmin_g,{}\n", r.argmin_g));
    out.push_str(&format!("d_family_match,{}\n", fmt_sig(r.d_family_match)));
    out.push_str(&format!(
        "argmax_op,{}\n",
        csv_field(r.argmax_op.as_deref().unwrap_or(""))
    ));
    for (label, d) in &r.per_op_distances {
        out.push_str(&format!(
            "{},{}\n",
            csv_field(&format!("per_op[{label}]")),
            fmt_sig(*d)
        ));
    }
    for (label, report) in &r.axiom_reports {
        out.push_str(&format!(
            "{},{}\n",
            csv_field(&format!("axiom_pass[{label}]")),
            report.passes()
        ));
    }
    out.push_str(&format!("chain_ok,{}\n", r.chain_ok));
    out.push_str(&format!("stability_ok,{}\n", r.stability_ok));
    out.push_str(&format!("tolerance,{}\n", fmt_sig(r.tolerance)));
    out.push_str(&format!("seed,{}\n", r.seed));
    out
}
