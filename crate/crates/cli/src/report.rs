//! Self-contained per-input records, one JSON object per line.

use serde::Serialize;

use periods_core::{
    classify_table, in_g, in_g_prime, product_irreducible, to_z_form, zelevinsky_dual, Classifier,
    Multisegment, Status, Verdict,
};

#[derive(Debug, Serialize)]
pub struct TraceRecord {
    pub rule: String,
    pub anchor: String,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct LadderRecord {
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violated_condition: Option<u8>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub input: String,
    pub normal_form: String,
    pub verdict: String,
    pub trace: Vec<TraceRecord>,
    pub dual: String,
    pub contragredient: String,
    pub g_prime: LadderRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_partition: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<bool>,
}

pub fn build_report(classifier: &Classifier, input: &str, m: &Multisegment) -> Report {
    let normal = m.normalized();
    let verdict: Option<Verdict> = classifier.classify(m).ok();
    let (verdict_str, trace) = match &verdict {
        Some(v) => (
            v.status.to_string(),
            v.trace
                .iter()
                .map(|s| TraceRecord {
                    rule: s.rule.name().to_string(),
                    anchor: s.rule.anchor().to_string(),
                    detail: s.detail.clone(),
                })
                .collect(),
        ),
        None => (Status::Unknown.to_string(), Vec::new()),
    };
    // Structural fields are computed on the submodule-form label the input
    // names, whichever convention it was written in.
    let z = to_z_form(&normal);
    let g_prime = match in_g_prime(&z) {
        Ok(check) => LadderRecord {
            member: check.member,
            violated_condition: check.violation.map(|v| v.condition()),
        },
        Err(_) => LadderRecord { member: false, violated_condition: None },
    };
    let g_partition = in_g(&z, product_irreducible)
        .ok()
        .flatten()
        .map(|blocks| blocks.iter().map(|b| b.to_string()).collect());
    Report {
        input: input.to_string(),
        normal_form: normal.to_string(),
        verdict: verdict_str,
        trace,
        dual: zelevinsky_dual(&normal).to_string(),
        contragredient: normal.contragredient().to_string(),
        g_prime,
        g_partition,
        table: classify_table(&z).ok().flatten(),
    }
}
