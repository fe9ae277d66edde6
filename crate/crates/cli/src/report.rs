//! Text renderings of parameters, certificates and sizes.

use std::fmt::Write;

use gcqc::classical::{DistanceClaim, DistanceStatus, SizeRecord};
use gcqc::distance::{CertificateStatus, DistanceCertificate, Evidence, LevelDistance, Witness};
use gcqc::gc::{GCCode, GCParameters};

use crate::budget::{BudgetSource, Budgets};

/// `n=36 k=26 additive=yes bound d≥4`.
pub fn summary_line(code: &GCCode) -> String {
    let params = code.parameters();
    let size = match params.k {
        Some(k) => format!("k={k}"),
        None => format!("log2dim={:.4}", params.log2_dimension),
    };
    let additive = if code.is_additive().additive { "yes" } else { "no" };
    let bound = match (params.bound.value, params.bound.verified) {
        (Some(d), true) => format!("bound d≥{d}"),
        (Some(d), false) => format!("bound d≥{d} (conditional)"),
        (None, _) => "bound unknown".to_string(),
    };
    format!("n={} {size} additive={additive} {bound}", params.n)
}

pub fn budgets(b: &Budgets) -> String {
    let src = |s: BudgetSource| match s {
        BudgetSource::Default => "default",
        BudgetSource::Environment => "environment",
        BudgetSource::SpecFile => "spec file",
    };
    format!(
        "budgets: enumeration {} ({}), scan {} ({})",
        b.enumeration,
        src(b.enumeration_source),
        b.scan,
        src(b.scan_source)
    )
}

pub fn size(record: &SizeRecord) -> String {
    match record {
        SizeRecord::Power { base, exp } => format!("{base}^{exp} (exact)"),
        SizeRecord::Count { count } => format!("{count} (exact, enumerated)"),
        SizeRecord::PigeonholeBound { value, log2 } => {
            if value.len() <= 24 {
                format!("at least {value} = 2^{log2:.4} (pigeonhole bound for the best coset)")
            } else {
                format!("at least 2^{log2:.4} (pigeonhole bound for the best coset)")
            }
        }
        SizeRecord::Estimate { log2, ci_low, ci_high, samples, hits, seed } => format!(
            "2^{log2:.4}, 95% interval [2^{ci_low:.4}, 2^{ci_high:.4}] ({hits} hits in {samples} samples, seed {seed})"
        ),
    }
}

fn claim(c: Option<DistanceClaim>) -> String {
    match c {
        None => "unknown".into(),
        Some(c) => {
            let status = match c.status {
                DistanceStatus::VerifiedExact => "verified exactly",
                DistanceStatus::VerifiedLowerBound => "verified lower bound",
                DistanceStatus::Unverified => "unverified",
            };
            format!("{} ({status})", c.value)
        }
    }
}

fn level_distance(l: &LevelDistance) -> String {
    match (&l.result, l.value()) {
        (Some(r), Some(v)) => {
            let how = if r.exact { "exact" } else { "lower bound" };
            format!("{v} ({how})")
        }
        _ => "unknown".into(),
    }
}

/// Full parameter report of a built code.
pub fn parameters(code: &GCCode, budgets_line: &str) -> String {
    let params: &GCParameters = code.parameters();
    let mut out = String::new();
    let _ = writeln!(out, "{}", summary_line(code));
    let _ = writeln!(out, "blocks: {} over F_{}, {} levels", params.blocks, params.p, code.levels());
    let _ = writeln!(
        out,
        "dimension: log2 = {:.4} ({}), {} free bottom qudits",
        params.log2_dimension,
        format!("{:?}", params.dimension_provenance).to_lowercase(),
        params.bottom_logical
    );
    for (i, a) in code.outer().iter().enumerate() {
        let _ = writeln!(out, "outer A{}: {}, size {}", i + 1, a.describe(), size(&params.outer_sizes[i]));
    }
    let _ = writeln!(out, "additivity: {}", code.is_additive().reason);
    let bound = &params.bound;
    for t in &bound.levels {
        let inner = t.inner_distance.map_or("?".into(), |d| d.to_string());
        let proved = if t.inner_proved { "proved" } else { "unproved" };
        let product = t.product.map_or("?".into(), |d| d.to_string());
        let _ = writeln!(
            out,
            "bound level {}: outer distance {} × inner distance {inner} ({proved}) = {product}",
            t.level,
            claim(t.outer_distance)
        );
    }
    let last = bound.last_level.map_or("?".into(), |d| d.to_string());
    let proved = if bound.last_level_proved { "proved" } else { "unproved" };
    let _ = writeln!(out, "bound last level: {last} ({proved})");
    let value = bound.value.map_or("unknown".into(), |d| d.to_string());
    let status = if bound.verified { "every leaf verified" } else { "conditional" };
    let _ = writeln!(out, "bound: d ≥ {value} ({status})");
    let _ = writeln!(out, "{budgets_line}");
    out
}

pub fn witness(w: &Witness) -> String {
    let factors: Vec<String> = w.positions.iter().zip(&w.paulis).map(|(i, f)| format!("{f}{i}")).collect();
    format!("witness: weight {} on {}", w.weight, factors.join(" "))
}

fn status(s: CertificateStatus) -> &'static str {
    match s {
        CertificateStatus::ProvedExact => "proved-exact",
        CertificateStatus::ProvedLowerBound => "proved-lower-bound",
        CertificateStatus::Conditional => "conditional",
        CertificateStatus::Refuted => "refuted",
    }
}

/// Certificate summary: status line, evidence digest, witness.
pub fn certificate(cert: &DistanceCertificate) -> String {
    let mut out = String::new();
    let d = cert.distance.map_or("unknown".into(), |d| d.to_string());
    let _ = writeln!(out, "status: {} (claimed d={}, distance {d})", status(cert.status), cert.claimed);
    match &cert.evidence {
        Evidence::Scan(s) => {
            for w in &s.weights {
                let complete = if w.complete { "complete" } else { "stopped early" };
                let _ = writeln!(
                    out,
                    "weight {}: {} vectors, {} in the difference set, {} degenerate ({complete})",
                    w.weight, w.vectors, w.members, w.degenerate
                );
            }
            for note in &s.notes {
                let _ = writeln!(out, "note: {note}");
            }
            if let Some(w) = &s.witness {
                let _ = writeln!(out, "{}", witness(w));
            }
        }
        Evidence::Exhaustive(e) => {
            let _ = writeln!(
                out,
                "{} cosets, closure dimension {}, {} vectors checked",
                e.cosets, e.closure_dimension, e.vectors
            );
            if e.fallback_to_nonzero {
                let _ =
                    writeln!(out, "note: every difference lies in the closure dual; minimum nonzero weight reported");
            }
            if let Some(w) = &e.witness {
                let _ = writeln!(out, "{}", witness(w));
            }
        }
        Evidence::Composite(c) => {
            for leaf in &c.inner {
                let levels: Vec<String> = leaf.levels.iter().map(level_distance).collect();
                let _ =
                    writeln!(out, "inner leaf, {} blocks: level distances {}", leaf.blocks.len(), levels.join(", "));
            }
            for leaf in &c.outer {
                let _ = writeln!(
                    out,
                    "outer leaf A{}: {}, distance {}; {}",
                    leaf.level,
                    leaf.code,
                    claim(leaf.distance),
                    leaf.basis
                );
            }
            let terms: Vec<String> = c.terms.iter().map(|t| t.map_or("?".into(), |d| d.to_string())).collect();
            let last = c.last_level.map_or("?".into(), |d| d.to_string());
            let _ = writeln!(out, "terms: min({}, {last})", terms.join(", "));
        }
    }
    out
}
