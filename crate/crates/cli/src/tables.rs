//! Deterministic table exports: identical inputs give identical bytes.
//! CSV uses comma separators, LF line endings and a header row; JSON is an
//! array of records with the same column names.

use serde_json::{json, Value};

use seaweed_core::{index_excess, parity_census, DefectTable, PartitionClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

fn render_csv(header: &str, rows: Vec<Vec<String>>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn render_json(records: Vec<Value>) -> String {
    let mut out = serde_json::to_string_pretty(&Value::Array(records))
        .expect("table records serialize");
    out.push('\n');
    out
}

/// Index-gap table over partitions into odd parts: columns n, eind,
/// signed, abs.
pub fn eind_table(max_n: u64, format: TableFormat) -> String {
    let entries: Vec<(u64, i64, i64, i64)> = (0..=max_n)
        .map(|n| {
            let gap = index_excess(n);
            let sign = if n.div_ceil(2) % 2 == 1 { -1 } else { 1 };
            (n, gap, sign * gap, gap.abs())
        })
        .collect();
    match format {
        TableFormat::Csv => render_csv(
            "n,eind,signed,abs",
            entries
                .iter()
                .map(|(n, gap, signed, abs)| {
                    vec![n.to_string(), gap.to_string(), signed.to_string(), abs.to_string()]
                })
                .collect(),
        ),
        TableFormat::Json => render_json(
            entries
                .iter()
                .map(|(n, gap, signed, abs)| {
                    json!({ "n": n, "eind": gap, "signed": signed, "abs": abs })
                })
                .collect(),
        ),
    }
}

/// Parity census table for one class: columns n, e, o, ebar, obar,
/// op0..op3.
pub fn census_table(class: &PartitionClass, max_n: u64, format: TableFormat) -> String {
    let records: Vec<_> = (0..=max_n).map(|n| parity_census(class, n)).collect();
    match format {
        TableFormat::Csv => render_csv(
            "n,e,o,ebar,obar,op0,op1,op2,op3",
            records
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.even_index.to_string(),
                        r.odd_index.to_string(),
                        r.even_conj.to_string(),
                        r.odd_conj.to_string(),
                        r.op_mod4[0].to_string(),
                        r.op_mod4[1].to_string(),
                        r.op_mod4[2].to_string(),
                        r.op_mod4[3].to_string(),
                    ]
                })
                .collect(),
        ),
        TableFormat::Json => render_json(
            records
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "e": r.even_index,
                        "o": r.odd_index,
                        "ebar": r.even_conj,
                        "obar": r.odd_conj,
                        "op0": r.op_mod4[0],
                        "op1": r.op_mod4[1],
                        "op2": r.op_mod4[2],
                        "op3": r.op_mod4[3],
                    })
                })
                .collect(),
        ),
    }
}

/// Defect-count table: one row per (n, k) with n ≤ 3·max_k, k ≤ max_k;
/// columns n, k, c, ctilde.
pub fn defect_table(max_k: usize, format: TableFormat) -> String {
    let table = DefectTable::build(max_k);
    let cells: Vec<(usize, usize, u64, u64)> = (0..=table.max_n())
        .flat_map(|n| (0..=max_k).map(move |k| (n, k)))
        .map(|(n, k)| (n, k, table.count(n, k), table.no_ones_count(n, k)))
        .collect();
    match format {
        TableFormat::Csv => render_csv(
            "n,k,c,ctilde",
            cells
                .iter()
                .map(|(n, k, c, ct)| {
                    vec![n.to_string(), k.to_string(), c.to_string(), ct.to_string()]
                })
                .collect(),
        ),
        TableFormat::Json => render_json(
            cells
                .iter()
                .map(|(n, k, c, ct)| json!({ "n": n, "k": k, "c": c, "ctilde": ct }))
                .collect(),
        ),
    }
}
