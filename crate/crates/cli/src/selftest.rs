//! Cross-checks between closed forms and the determinant pipeline for the
//! two families, n <= 8.

use std::io::Write;

use knotcert::seifert::{alpha_closed, alpha_matrix, alpha_recursive, reciprocal_factor};
use knotcert::{
    alexander, alexander_matrix, build_family, certify_family, FamilyKind, FamilySpec, Verdict,
};
use serde_json::json;

use crate::Format;

pub const MAX_N: u32 = 8;

pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn print(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                let checks: Vec<_> = self
                    .checks
                    .iter()
                    .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                    .collect();
                let doc = json!({
                    "passed": self.passed(),
                    "failed": self.failed(),
                    "checks": checks,
                });
                writeln!(out, "{doc}")
            }
            Format::Text => {
                for c in &self.checks {
                    let tag = if c.passed { "ok" } else { "FAIL" };
                    if c.detail.is_empty() {
                        writeln!(out, "{tag}: {}", c.name)?;
                    } else {
                        writeln!(out, "{tag}: {} ({})", c.name, c.detail)?;
                    }
                }
                writeln!(out, "passed: {}", self.passed())?;
                writeln!(out, "failed: {}", self.failed())
            }
        }
    }
}

fn check(name: String, outcome: Result<(), String>) -> CheckResult {
    match outcome {
        Ok(()) => CheckResult {
            name,
            passed: true,
            detail: String::new(),
        },
        Err(detail) => CheckResult {
            name,
            passed: false,
            detail,
        },
    }
}

fn family_checks(kind: FamilyKind, n: u32) -> Vec<CheckResult> {
    let spec = FamilySpec::new(kind, n).expect("n >= 1");
    let label = kind.label(n, 0);
    let s = build_family(spec);
    let mut out = Vec::new();

    let result = alexander(&s);
    out.push(check(
        format!("{label} closed form"),
        match &result {
            Ok(r) if r.symmetric == spec.expected_delta() => Ok(()),
            Ok(r) => Err(format!(
                "got {}, expected {}",
                r.symmetric,
                spec.expected_delta()
            )),
            Err(e) => Err(e.to_string()),
        },
    ));
    out.push(check(
        format!("{label} genus = degree"),
        match &result {
            Ok(r) if r.d == n as i64 && r.genus_upper == n => Ok(()),
            Ok(r) => Err(format!("d = {}, surface genus = {}", r.d, r.genus_upper)),
            Err(e) => Err(e.to_string()),
        },
    ));

    // cofactor expansion is capped at dimension 8
    if 2 * n <= 8 {
        let m = alexander_matrix(s.matrix());
        out.push(check(
            format!("{label} Bareiss = cofactor"),
            match m.det_cofactor() {
                Ok(c) if c == m.det_bareiss() => Ok(()),
                Ok(c) => Err(format!("cofactor {c}, Bareiss {}", m.det_bareiss())),
                Err(e) => Err(e.to_string()),
            },
        ));
    }

    if kind == FamilyKind::C {
        let product = &alpha_closed(n).expect("n >= 1") * &reciprocal_factor(n).expect("n >= 1");
        out.push(check(
            format!("{label} factor identity"),
            match &result {
                Ok(r) if r.raw.doteq(&product).is_some() => Ok(()),
                Ok(r) => Err(format!("raw {} is not a unit multiple of {product}", r.raw)),
                Err(e) => Err(e.to_string()),
            },
        ));
    }

    out.push(check(
        format!("{label} primeness certificate"),
        match certify_family(spec) {
            Ok(cert) if cert.verdict == Verdict::Prime => cert.verify(),
            Ok(cert) => Err(cert.reasons.join("; ")),
            Err(e) => Err(e.to_string()),
        },
    ));
    out
}

fn recursion_check(n: u32) -> CheckResult {
    let outcome = (|| {
        let closed = alpha_closed(n).map_err(|e| e.to_string())?;
        let rec = alpha_recursive(n).map_err(|e| e.to_string())?;
        if rec != closed {
            return Err(format!("recursive {rec}, closed {closed}"));
        }
        if n <= 5 {
            let det = alpha_matrix(n)
                .map_err(|e| e.to_string())?
                .det_cofactor()
                .map_err(|e| e.to_string())?;
            if det != closed {
                return Err(format!("det(tA - B^T) = {det}, closed {closed}"));
            }
        }
        Ok(())
    })();
    check(format!("alpha_{n} recursion"), outcome)
}

pub fn run_all() -> Report {
    let mut checks = Vec::new();
    for n in 1..=MAX_N {
        checks.push(recursion_check(n));
        for kind in [FamilyKind::C, FamilyKind::E] {
            checks.extend(family_checks(kind, n));
        }
    }
    Report { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn everything_passes() {
        let report = run_all();
        for c in &report.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        // 8 recursion checks; per family and n: closed form, genus,
        // certificate; Bareiss for n <= 4; factor identity for C
        assert_eq!(report.checks.len(), 8 + 2 * 8 * 3 + 2 * 4 + 8);
    }
}
