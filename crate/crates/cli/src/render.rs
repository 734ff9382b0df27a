//! Markdown and CSV renderings. JSON goes straight through serde.

use std::fmt::Write as _;

use cliffspin_core::closure::mask_word;
use cliffspin_core::report::TableRow;
use cliffspin_core::{
    ClassificationResult, ClosureBasis, RootSet, Status, Verdict, VerificationReport,
};

fn csv_string(rows: Vec<Vec<String>>) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(&r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn mark(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skipped",
    }
}

pub fn closure_markdown(b: &ClosureBasis) -> String {
    let mut s = format!(
        "## E_{} closure\n\ndim {}\n\n| # | mask | blade |\n|---|---|---|\n",
        b.n(),
        b.dim()
    );
    for (i, &m) in b.masks().iter().enumerate() {
        let _ = writeln!(s, "| {} | {m:#x} | {} |", i + 1, mask_word(m));
    }
    s
}

pub fn closure_csv(b: &ClosureBasis) -> anyhow::Result<String> {
    let mut rows = vec![vec!["index".into(), "mask".into(), "blade".into()]];
    rows.extend(
        b.masks()
            .iter()
            .enumerate()
            .map(|(i, &m)| vec![(i + 1).to_string(), format!("{m:#x}"), mask_word(m)]),
    );
    csv_string(rows)
}

pub fn delta_markdown(n: usize, d: &[String; 4], total: &str, ok: bool) -> String {
    format!(
        "| n | δ0 | δ1 | δ2 | δ3 | sum | identities |\n|---|---|---|---|---|---|---|\n| {n} | {} | {} | {} | {} | {total} | {} |\n",
        d[0],
        d[1],
        d[2],
        d[3],
        if ok { "hold" } else { "FAIL" }
    )
}

pub fn delta_csv(n: usize, d: &[String; 4], total: &str, ok: bool) -> anyhow::Result<String> {
    let header = [
        "n",
        "delta0",
        "delta1",
        "delta2",
        "delta3",
        "sum",
        "identities_hold",
    ];
    let mut row = vec![n.to_string()];
    row.extend(d.iter().cloned());
    row.push(total.to_owned());
    row.push(ok.to_string());
    csv_string(vec![header.map(String::from).to_vec(), row])
}

pub fn classify_markdown(r: &ClassificationResult) -> String {
    let mut s = match &r.matched_type {
        Some(t) => format!("{t}\n"),
        None => format!("no match (expected {})\n", r.expected_type),
    };
    let _ = writeln!(
        s,
        "\n| n | dim | rank | center | derived | Killing negative definite | summands |\n|---|---|---|---|---|---|---|\n| {} | {} | {} | {} | {} | {} | {} |",
        r.n, r.dim, r.rank, r.center_dim, r.derived_dim, r.killing_negative_definite, r.summands
    );
    for m in &r.mismatches {
        let _ = writeln!(s, "\n- {m}");
    }
    s
}

pub fn classify_csv(r: &ClassificationResult) -> anyhow::Result<String> {
    let header = [
        "n",
        "dim",
        "rank",
        "center_dim",
        "derived_dim",
        "killing_negative_definite",
        "summands",
        "type",
        "pass",
    ];
    let row = vec![
        r.n.to_string(),
        r.dim.to_string(),
        r.rank.to_string(),
        r.center_dim.to_string(),
        r.derived_dim.to_string(),
        r.killing_negative_definite.to_string(),
        r.summands.to_string(),
        r.matched_type.map_or_else(String::new, |t| t.to_string()),
        r.pass.to_string(),
    ];
    csv_string(vec![header.map(String::from).to_vec(), row])
}

const CHECK_NAMES: [&str; 8] = [
    "relations",
    "lemma",
    "identities",
    "killing",
    "rank",
    "split",
    "roots",
    "classify",
];

pub fn verify_markdown(reports: &[VerificationReport]) -> String {
    let mut s = String::from("| n | dim | expected | type | ");
    s.push_str(&CHECK_NAMES.join(" | "));
    s.push_str(" | verdict |\n|");
    s.push_str(&"---|".repeat(CHECK_NAMES.len() + 5));
    s.push('\n');
    for r in reports {
        let _ = write!(
            s,
            "| {} | {} | {} | {} |",
            r.n,
            r.closure_dim,
            r.expected_dim,
            r.classified_as.as_deref().unwrap_or("-")
        );
        for (_, c) in r.checks.iter() {
            let _ = write!(s, " {} |", mark(c.status));
        }
        let _ = writeln!(
            s,
            " {} |",
            if r.verdict == Verdict::Pass {
                "pass"
            } else {
                "FAIL"
            }
        );
    }
    let notes: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .filter(|(_, c)| c.status != Status::Pass)
                .map(move |(name, c)| format!("- n = {}, {name}: {}", r.n, c.detail))
        })
        .collect();
    if !notes.is_empty() {
        s.push('\n');
        for line in notes {
            s.push_str(&line);
            s.push('\n');
        }
    }
    s
}

pub fn verify_csv(reports: &[VerificationReport]) -> anyhow::Result<String> {
    let mut header: Vec<String> = [
        "n",
        "closure_dim",
        "expected_dim",
        "delta0",
        "delta1",
        "delta2",
        "delta3",
        "bott_algebra",
        "max_compact",
        "classified_as",
    ]
    .map(String::from)
    .to_vec();
    header.extend(CHECK_NAMES.iter().map(|s| s.to_string()));
    header.push("verdict".into());
    let mut rows = vec![header];
    for r in reports {
        let mut row = vec![
            r.n.to_string(),
            r.closure_dim.to_string(),
            r.expected_dim.to_string(),
        ];
        row.extend(r.delta.iter().map(u64::to_string));
        row.push(r.bott_algebra.clone());
        row.push(r.max_compact.clone());
        row.push(r.classified_as.clone().unwrap_or_default());
        row.extend(r.checks.iter().map(|(_, c)| mark(c.status).to_lowercase()));
        row.push(
            if r.verdict == Verdict::Pass {
                "pass"
            } else {
                "fail"
            }
            .into(),
        );
        rows.push(row);
    }
    csv_string(rows)
}

fn coords(b: &[i64]) -> String {
    b.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

pub fn roots_markdown(r: &RootSet) -> String {
    let mut s = format!(
        "## E_{} positive roots: {}\n\n| height | coordinates |\n|---|---|\n",
        r.n,
        r.len()
    );
    for b in &r.roots {
        let _ = writeln!(s, "| {} | {} |", b.iter().sum::<i64>(), coords(b));
    }
    s
}

pub fn roots_csv(r: &RootSet) -> anyhow::Result<String> {
    let mut header = vec!["height".to_string()];
    header.extend((1..=r.n).map(|i| format!("a{i}")));
    let mut rows = vec![header];
    for b in &r.roots {
        let mut row = vec![b.iter().sum::<i64>().to_string()];
        row.extend(b.iter().map(i64::to_string));
        rows.push(row);
    }
    csv_string(rows)
}

pub fn table_markdown(rows: &[TableRow]) -> String {
    let mut s = String::from(
        "| n | C(R^n) | maximal compact | dim | closure dim |\n|---|---|---|---|---|\n",
    );
    for r in rows {
        let cd = r
            .closure_dim
            .map_or_else(|| "-".to_string(), |d| d.to_string());
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {cd} |",
            r.n, r.bott_algebra, r.max_compact, r.max_compact_dim
        );
    }
    s
}

pub fn table_csv(rows: &[TableRow]) -> anyhow::Result<String> {
    let mut out = vec![[
        "n",
        "clifford_algebra",
        "max_compact",
        "max_compact_dim",
        "closure_dim",
    ]
    .map(String::from)
    .to_vec()];
    for r in rows {
        out.push(vec![
            r.n.to_string(),
            r.bott_algebra.clone(),
            r.max_compact.clone(),
            r.max_compact_dim.clone(),
            r.closure_dim.map_or_else(String::new, |d| d.to_string()),
        ]);
    }
    csv_string(out)
}
