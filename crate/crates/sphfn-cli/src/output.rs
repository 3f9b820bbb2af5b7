/// 17 significant digits, '.' decimal.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn csv<I, R>(header: &str, rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: AsRef<[String]>,
{
    let mut s = String::from(header);
    s.push('\n');
    for r in rows {
        s.push_str(&r.as_ref().join(","));
        s.push('\n');
    }
    s
}

/// `n` evenly spaced points on `[a, b]`; a single point sits at `a`.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n).map(|k| a + (b - a) * k as f64 / (n - 1) as f64).collect(),
    }
}
