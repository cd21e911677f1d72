use num_rational::Ratio;
use serde::Serialize;

use crate::constructions::{build_fourell, build_gq, build_mq};
use crate::gf::FieldSpec;
use crate::perm::PermGroup;
use crate::solver::{
    analyze, two_p_clique, AnalysisReport, Check, GroupSummary, Rational, TwoPOutcome,
};
use crate::{Caps, Result, FORMAT_VERSION};

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub format: u32,
    pub theorem: String,
    pub parameters: serde_json::Value,
    pub group: GroupSummary,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_p: Option<TwoPOutcome>,
    pub analysis: AnalysisReport,
}

impl VerifyReport {
    fn new(
        theorem: &str,
        parameters: serde_json::Value,
        analysis: AnalysisReport,
        mut checks: Vec<Check>,
        two_p: Option<TwoPOutcome>,
    ) -> Self {
        checks.extend(analysis.checks.iter().cloned());
        VerifyReport {
            format: FORMAT_VERSION,
            theorem: theorem.into(),
            parameters,
            group: analysis.group.clone(),
            passed: checks.iter().all(|c| c.pass),
            checks,
            two_p,
            analysis,
        }
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn eq_check<T: PartialEq + std::fmt::Display>(name: &str, got: T, want: T) -> Check {
    let pass = got == want;
    Check::new(name, pass, format!("got {got}, expected {want}"))
}

fn int(n: usize) -> Rational {
    Ratio::from_integer(n as u64).into()
}

fn multipartite_checks(
    a: &AnalysisReport,
    parts: usize,
    part_size: usize,
    rho: usize,
) -> Vec<Check> {
    let (got_parts, got_size) = a
        .multipartite
        .as_ref()
        .map_or((0, 0), |m| (m.parts, m.part_size));
    vec![
        Check::new("transitive", a.transitive, ""),
        Check::new(
            "complete_multipartite",
            got_parts == parts && got_size == part_size,
            format!("{got_parts} parts of size {got_size}, expected {parts} of size {part_size}"),
        ),
        eq_check("rho", a.rho, int(rho)),
        Check::new("exact", !a.lower_bound, "alpha and omega exact"),
    ]
}

/// `G_q(A)`: degree q(q+1), order q²(q²−1), complete (q+1)-partite with
/// parts q²(q−1), `Fix = M_q`, density q.
pub fn verify_main(q: u64, caps: &Caps) -> Result<VerifyReport> {
    let s = FieldSpec::of_order(q)?;
    let g = build_gq(&s, caps.max_order)?;
    let a = analyze(&g, caps)?;
    let q = q as usize;
    let mut checks = vec![
        eq_check("degree", g.degree(), q * (q + 1)),
        eq_check("order", g.order(), q * q * (q * q - 1)),
        eq_check("stabilizer_size", a.stabilizer_size, q * (q - 1)),
    ];
    checks.extend(multipartite_checks(&a, q + 1, q * q * (q - 1), q));
    let fix = g.fix_subgroup()?;
    let mq = build_mq(&s)?;
    checks.push(Check::new(
        "fix_equals_mq",
        fix == mq,
        format!("|Fix| = {}, |M_q| = {}", fix.order(), mq.order()),
    ));
    let mq_intersecting = mq.elements().iter().all(|x| x.has_fixed_point());
    checks.push(Check::new(
        "mq_intersecting",
        mq_intersecting,
        "every element of M_q fixes a line",
    ));
    Ok(VerifyReport::new(
        "main",
        serde_json::json!({ "q": q }),
        a,
        checks,
        None,
    ))
}

/// Degree 4l construction: order 2^(l−1)·2l, complete 2l-partite, density 2.
pub fn verify_fourell(ell: usize, caps: &Caps) -> Result<VerifyReport> {
    let f = build_fourell(ell, caps.max_order)?;
    let a = analyze(&f.group, caps)?;
    let mut checks = vec![
        eq_check("degree", f.group.degree(), 4 * ell),
        eq_check("order", f.group.order(), (1usize << (ell - 1)) * 2 * ell),
    ];
    checks.extend(multipartite_checks(
        &a,
        2 * ell,
        f.group.order() / (2 * ell),
        2,
    ));
    let fix = f.group.fix_subgroup()?;
    checks.push(Check::new(
        "fix_equals_h",
        fix == f.h,
        format!("|Fix| = {}, |H| = {}", fix.order(), f.h.order()),
    ));
    for (name, ok) in f.relation_checks()? {
        checks.push(Check::new(name, ok, ""));
    }
    Ok(VerifyReport::new(
        "fourell",
        serde_json::json!({ "ell": ell }),
        a,
        checks,
        None,
    ))
}

/// A degree-2p transitive group carries a p-clique; hence density ≤ 2.
pub fn verify_twop(g: &PermGroup, p: usize, caps: &Caps) -> Result<VerifyReport> {
    let outcome = two_p_clique(g, p, caps)?;
    let a = analyze(g, caps)?;
    let mut checks = vec![Check::new("transitive", a.transitive, "")];
    if outcome.clique.is_empty() {
        checks.push(Check::new(
            "p_clique",
            false,
            format!("no clique found; route {:?}", outcome.route),
        ));
    } else {
        checks.push(Check::new(
            "p_clique",
            outcome.clique_valid && outcome.clique.len() == p,
            format!(
                "clique of size {} via {:?}",
                outcome.clique.len(),
                outcome.route
            ),
        ));
    }
    let rho: Ratio<u64> = a.rho.into();
    checks.push(Check::new(
        "rho_at_most_2",
        rho <= Ratio::from_integer(2) && !a.lower_bound,
        format!("rho = {}", a.rho),
    ));
    checks.push(Check::new(
        "no_anomalies",
        outcome.anomalies.is_empty(),
        outcome.anomalies.join("; "),
    ));
    Ok(VerifyReport::new(
        "twop",
        serde_json::json!({ "p": p }),
        a,
        checks,
        Some(outcome),
    ))
}
