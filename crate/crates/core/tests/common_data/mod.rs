// Loader for the pinned high-precision reference tables in tests/data,
// regenerated by tools/gen_oracle.py.
#![allow(dead_code)]

pub fn rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(|s| s.trim().to_string()).collect())
        .collect()
}

pub fn gamma_table() -> Vec<(f64, f64)> {
    rows(include_str!("../data/gamma_oracle.csv"))
        .into_iter()
        .map(|r| (r[0].parse().unwrap(), r[1].parse().unwrap()))
        .collect()
}

pub fn constant(name: &str) -> f64 {
    rows(include_str!("../data/constants_oracle.csv"))
        .into_iter()
        .find(|r| r[0] == name)
        .map(|r| r[1].parse().unwrap())
        .unwrap_or_else(|| panic!("no constant {name}"))
}

pub struct HypRow {
    pub label: String,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z: f64,
    pub value: f64,
}

pub fn hyp_table() -> Vec<HypRow> {
    rows(include_str!("../data/hyp2f1_oracle.csv"))
        .into_iter()
        .map(|r| HypRow {
            label: r[0].clone(),
            a: r[1].parse().unwrap(),
            b: r[2].parse().unwrap(),
            c: r[3].parse().unwrap(),
            z: r[4].parse().unwrap(),
            value: r[5].parse().unwrap(),
        })
        .collect()
}

pub fn hyp(label: &str) -> HypRow {
    hyp_table()
        .into_iter()
        .find(|r| r.label == label)
        .unwrap_or_else(|| panic!("no hyp2f1 row {label}"))
}

/// (max residual, argmax x) from the high-precision evaluation.
pub fn berndt_residual(id: &str) -> (f64, f64) {
    rows(include_str!("../data/berndt_residuals.csv"))
        .into_iter()
        .find(|r| r[0] == id)
        .map(|r| (r[1].parse().unwrap(), r[2].parse().unwrap()))
        .unwrap_or_else(|| panic!("no residual row {id}"))
}

pub fn term_count() -> (f64, usize) {
    let r = &rows(include_str!("../data/term_count.csv"))[0];
    (r[0].parse().unwrap(), r[1].parse().unwrap())
}
