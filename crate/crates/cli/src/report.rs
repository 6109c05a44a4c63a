//! JSON and markdown rendering of audit reports and certificate lists.

use std::fmt::Write;

use enumerlab_core::audit::NOT_FINITELY_CHECKABLE;
use enumerlab_core::{Certificate, ClaimFailure, ClaimReport, Status};
use serde::Serialize;

/// Witnesses shown per claim in markdown; JSON always carries all of them.
pub const MARKDOWN_WITNESS_LIMIT: usize = 8;

#[derive(Serialize)]
struct FailureEntry<'a> {
    claim: String,
    anchor: &'a str,
    depth: u64,
    status: &'static str,
    error: String,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Entry<'a> {
    Report(&'a ClaimReport),
    Failure(FailureEntry<'a>),
}

fn entries(results: &[Result<ClaimReport, ClaimFailure>]) -> Vec<Entry<'_>> {
    results
        .iter()
        .map(|r| match r {
            Ok(report) => Entry::Report(report),
            Err(f) => Entry::Failure(FailureEntry {
                claim: f.claim.to_string(),
                anchor: f.claim.anchor(),
                depth: f.depth,
                status: "error",
                error: f.error.to_string(),
            }),
        })
        .collect()
}

pub fn audit_json(results: &[Result<ClaimReport, ClaimFailure>]) -> String {
    let mut out = serde_json::to_string_pretty(&entries(results)).expect("report serializes");
    out.push('\n');
    out
}

fn cell(text: &str) -> String {
    text.replace('|', "\\|").replace('\n', " ")
}

pub fn audit_markdown(depth: u64, results: &[Result<ClaimReport, ClaimFailure>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Claim audit at depth {depth}\n");
    out.push_str("| claim | depth | status | witnesses | statement |\n");
    out.push_str("|-------|-------|--------|-----------|-----------|\n");
    for r in results {
        match r {
            Ok(rep) => {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    rep.claim,
                    rep.depth,
                    rep.status,
                    rep.witnesses.len(),
                    cell(&rep.anchor)
                );
            }
            Err(f) => {
                let _ = writeln!(
                    out,
                    "| {} | {} | error | 0 | {} |",
                    f.claim,
                    f.depth,
                    cell(f.claim.anchor())
                );
            }
        }
    }
    out.push_str(
        "\nA verified status holds only at the depth shown. \
         No statement about the infinite objects is inferred from a finite pass.\n",
    );

    for r in results {
        match r {
            Ok(rep) if !rep.witnesses.is_empty() => {
                let _ = writeln!(out, "\n## {} ({})\n", rep.claim, rep.status);
                for w in rep.witnesses.iter().take(MARKDOWN_WITNESS_LIMIT) {
                    let line = serde_json::to_string(w).expect("witness serializes");
                    let _ = writeln!(out, "- `{line}`");
                }
                let hidden = rep.witnesses.len().saturating_sub(MARKDOWN_WITNESS_LIMIT);
                if hidden > 0 {
                    let _ = writeln!(out, "- ... {hidden} more (see the JSON report)");
                }
            }
            Ok(_) => {}
            Err(f) => {
                let _ = writeln!(out, "\n## {} (error)\n\n{}", f.claim, f.error);
            }
        }
    }

    out.push_str("\n## Not finitely checkable\n\n");
    for (name, reason) in NOT_FINITELY_CHECKABLE {
        let _ = writeln!(out, "- **{name}**: {reason}");
    }
    out
}

pub fn any_refuted(results: &[Result<ClaimReport, ClaimFailure>]) -> bool {
    results
        .iter()
        .any(|r| matches!(r, Ok(rep) if rep.status == Status::Refuted))
}

pub fn certificates_json(list: &str, certs: &[Certificate]) -> String {
    #[derive(Serialize)]
    struct Doc<'a> {
        list: &'a str,
        certificates: &'a [Certificate],
    }
    let mut out = serde_json::to_string_pretty(&Doc {
        list,
        certificates: certs,
    })
    .expect("certificates serialize");
    out.push('\n');
    out
}

pub fn certificates_markdown(list: &str, certs: &[Certificate]) -> String {
    let mut out = format!("# Diagonal certificates for `{list}`\n\n");
    out.push_str("| row | position | diagonal bit | row bit |\n");
    out.push_str("|-----|----------|--------------|---------|\n");
    for c in certs {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} |",
            c.row, c.position, c.left_bit, c.right_bit
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use enumerlab_core::audit::run_claim;
    use enumerlab_core::{Budget, ClaimId, Error};

    #[test]
    fn json_field_order() {
        let rep = run_claim(ClaimId::C10, 4, Budget::default()).unwrap();
        let text = audit_json(&[Ok(rep)]);
        let keys = ["\"claim\"", "\"anchor\"", "\"depth\"", "\"status\"", "\"witnesses\"", "\"elapsed_ms\""];
        let at: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(at.windows(2).all(|w| w[0] < w[1]), "{text}");
        assert!(text.ends_with("]\n"));
    }

    #[test]
    fn failures_are_reported() {
        let fail = ClaimFailure {
            claim: ClaimId::C8,
            depth: 40,
            error: Error::DepthLimit {
                requested: 1u32.into(),
                budget: 0,
            },
        };
        let results = [Err(fail)];
        let v: serde_json::Value = serde_json::from_str(&audit_json(&results)).unwrap();
        assert_eq!(v[0]["status"], "error");
        assert_eq!(v[0]["claim"], "C8");
        let md = audit_markdown(40, &results);
        assert!(md.contains("| C8 | 40 | error |"));
        assert!(!any_refuted(&results));
    }

    #[test]
    fn markdown_truncates_witnesses() {
        let rep = run_claim(ClaimId::C9, 6, Budget::default()).unwrap();
        assert!(rep.witnesses.len() > MARKDOWN_WITNESS_LIMIT);
        let md = audit_markdown(6, &[Ok(rep)]);
        assert!(md.contains("| C9 | 6 | refuted |"));
        assert!(md.contains("more (see the JSON report)"));
        assert!(!md.contains("elapsed"));
        assert!(md.contains("## Not finitely checkable"));
    }

    #[test]
    fn pipes_are_escaped() {
        assert_eq!(cell("a|b"), "a\\|b");
    }
}
