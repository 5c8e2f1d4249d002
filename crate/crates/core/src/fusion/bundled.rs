use super::{FusionData, FusionError};

const NAMES: [&str; 9] = ["trivial", "z2", "z3", "z4", "z5", "z6", "fibonacci", "ising", "rep_s3"];

/// Names accepted by [`bundled`], in a fixed order.
pub fn bundled_names() -> &'static [&'static str] {
    &NAMES
}

pub fn bundled(name: &str) -> Result<FusionData, FusionError> {
    match name {
        "trivial" => Ok(from_table(&["1"], &[])),
        "fibonacci" => Ok(from_table(&["1", "tau"], &[("tau", "tau", "1", 1), ("tau", "tau", "tau", 1)])),
        "ising" => Ok(from_table(
            &["1", "eps", "sigma"],
            &[
                ("eps", "eps", "1", 1),
                ("eps", "sigma", "sigma", 1),
                ("sigma", "eps", "sigma", 1),
                ("sigma", "sigma", "1", 1),
                ("sigma", "sigma", "eps", 1),
            ],
        )),
        "rep_s3" => Ok(from_table(
            &["1", "sgn", "V"],
            &[
                ("sgn", "sgn", "1", 1),
                ("sgn", "V", "V", 1),
                ("V", "sgn", "V", 1),
                ("V", "V", "1", 1),
                ("V", "V", "sgn", 1),
                ("V", "V", "V", 1),
            ],
        )),
        _ => match name.strip_prefix('z').and_then(|n| n.parse::<usize>().ok()) {
            Some(n @ 1..=6) => Ok(cyclic(n)),
            _ => Err(FusionError::Malformed(format!("no bundled fusion ring named `{name}`"))),
        },
    }
}

/// Pointed fusion data of `Z/n` on labels `g0, ..., g{n-1}`.
fn cyclic(n: usize) -> FusionData {
    let simples = (0..n).map(|i| format!("g{i}")).collect();
    let mut mult = vec![0; n * n * n];
    for i in 0..n {
        for k in 0..n {
            mult[(i * n + k) * n + (i + k) % n] = 1;
        }
    }
    let dual = (0..n).map(|i| (n - i) % n).collect();
    FusionData::from_parts(simples, 0, dual, vec![1; n], mult).expect("well-formed")
}

/// Self-dual, multiplicity data with unit at index 0; products with the unit are implied.
fn from_table(labels: &[&str], rules: &[(&str, &str, &str, u64)]) -> FusionData {
    let n = labels.len();
    let idx = |s: &str| labels.iter().position(|l| *l == s).expect("known label");
    let mut mult = vec![0; n * n * n];
    for a in 0..n {
        mult[a * n + a] = 1;
        mult[(a * n) * n + a] = 1;
    }
    for &(i, k, j, c) in rules {
        mult[(idx(i) * n + idx(k)) * n + idx(j)] = c;
    }
    let simples = labels.iter().map(|s| s.to_string()).collect();
    FusionData::from_parts(simples, 0, (0..n).collect(), vec![1; n], mult).expect("well-formed")
}
