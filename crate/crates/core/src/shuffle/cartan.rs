use std::fmt;

use num_integer::Integer;

use super::ShuffleError;
use crate::freemod::GroupSpec;
use crate::scalars::{Scalar, ScalarError, ScalarMode};

/// A symmetrizable generalized Cartan matrix with its symmetrizer and the
/// scalar mode in which `q` lives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
    mode: ScalarMode,
}

/// Checks every Cartan datum invariant and reports all violations at once.
pub fn validate_cartan(a: Vec<Vec<i64>>, d: Vec<i64>, mode: ScalarMode) -> Result<CartanData, ShuffleError> {
    let n = a.len();
    let mut errs = Vec::new();
    if n == 0 {
        errs.push("the matrix is empty".to_string());
    }
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            errs.push(format!("row {} has {} entries, expected {n}", i + 1, row.len()));
        }
    }
    if d.len() != n {
        errs.push(format!("d has {} entries, expected {n}", d.len()));
    }
    if !errs.is_empty() {
        return Err(ShuffleError::Cartan(errs.join("; ")));
    }
    for i in 0..n {
        if a[i][i] != 2 {
            errs.push(format!("a{0}{0} = {1}, expected 2", i + 1, a[i][i]));
        }
        if d[i] <= 0 {
            errs.push(format!("d{} = {} is not positive", i + 1, d[i]));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if a[i][j] > 0 {
                errs.push(format!("a{}{} = {} is positive", i + 1, j + 1, a[i][j]));
            }
            if i < j && (a[i][j] == 0) != (a[j][i] == 0) {
                errs.push(format!("a{0}{1} = 0 ⇔ a{1}{0} = 0 violated", i + 1, j + 1));
            }
            if i < j && d[i] * a[i][j] != d[j] * a[j][i] {
                errs.push(format!("d{0}·a{0}{1} ≠ d{1}·a{1}{0} (not symmetrizable by d)", i + 1, j + 1));
            }
        }
    }
    if d.iter().fold(0i64, |g, &x| g.gcd(&x)) != 1 {
        errs.push("the entries of d are not relatively prime".into());
    }
    if errs.is_empty() {
        Ok(CartanData { a, d, mode })
    } else {
        Err(ShuffleError::Cartan(errs.join("; ")))
    }
}

impl CartanData {
    /// Number of simple roots `N`.
    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i - 1][j - 1]
    }

    pub fn mode(&self) -> &ScalarMode {
        &self.mode
    }

    /// `d_i a_ij`, the exponent of `q_ij`. Indices start at 1.
    pub fn q_exponent(&self, i: usize, j: usize) -> i64 {
        self.d[i - 1] * self.a[i - 1][j - 1]
    }

    /// `q_ij = q^{d_i a_ij}` in the datum's scalar mode.
    pub fn qij<S: Scalar>(&self, i: usize, j: usize) -> Result<S, ScalarError> {
        S::q_pow(self.q_exponent(i, j), &self.mode)
    }

    /// The group matching the mode: `ℤ^N` for generic `q`,
    /// `(ℤ/l)^N` at a primitive `l`-th root of unity.
    pub fn default_group(&self) -> GroupSpec {
        match self.mode {
            ScalarMode::Cyclotomic(l) if l >= 2 => GroupSpec::cyclic(l, self.rank()),
            _ => GroupSpec::free(self.rank()),
        }
    }

    /// `sl₂`: `A = (2)`, `d = (1)`.
    pub fn sl2(mode: ScalarMode) -> Self {
        validate_cartan(vec![vec![2]], vec![1], mode).expect("valid")
    }

    /// `sl₃`: `A = ((2,−1),(−1,2))`, `d = (1,1)`.
    pub fn sl3(mode: ScalarMode) -> Self {
        validate_cartan(vec![vec![2, -1], vec![-1, 2]], vec![1, 1], mode).expect("valid")
    }
}

impl fmt::Display for CartanData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .a
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let d: Vec<String> = self.d.iter().map(|x| x.to_string()).collect();
        write!(f, "A=[{}] d=[{}] scalar={}", rows.join(","), d.join(","), self.mode)
    }
}

/// A Cartan datum together with its group, as read from a config file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanConfig {
    pub cartan: CartanData,
    pub group: GroupSpec,
}

fn parse_ints(text: &str) -> Result<Vec<i64>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| format!("`{t}` is not an integer")))
        .collect()
}

/// `[2,-1],[-1,2]`, `[[2,-1],[-1,2]]` and `2 -1; -1 2` are all accepted.
fn parse_rows(text: &str) -> Result<Vec<Vec<i64>>, String> {
    let t = text.trim();
    if !t.contains('[') {
        return t.split(';').map(parse_ints).collect();
    }
    let inner = t.strip_prefix("[[").and_then(|s| s.strip_suffix("]]")).map(|s| format!("[{s}]"));
    let t = inner.as_deref().unwrap_or(t);
    let mut rows = Vec::new();
    let mut rest = t;
    while let Some(start) = rest.find('[') {
        let end = rest[start..].find(']').ok_or("unbalanced `[`")? + start;
        rows.push(parse_ints(&rest[start + 1..end])?);
        rest = &rest[end + 1..];
    }
    Ok(rows)
}

/// Parses the key-value Cartan config format:
///
/// ```text
/// # comment
/// N = 2
/// A = [2,-1],[-1,2]
/// d = 1,1
/// scalar = generic        # or: cyclotomic 3
/// group = free            # or: torsion 3
/// ```
///
/// `scalar` defaults to `generic` and `group` to the one matching `scalar`.
/// A `--scalar` override replaces the file's mode before the group check.
pub fn parse_cartan_config(text: &str, mode_override: Option<&ScalarMode>) -> Result<CartanConfig, ShuffleError> {
    let mut n: Option<usize> = None;
    let mut a = None;
    let mut d = None;
    let mut mode = ScalarMode::GenericQ;
    let mut group: Option<(usize, String)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| ShuffleError::Config { line: line_no, message };
        let (key, value) = line.split_once('=').ok_or_else(|| err("expected `key = value`".into()))?;
        let value = value.trim();
        match key.trim() {
            "N" => n = Some(value.parse().map_err(|_| err(format!("N = `{value}` is not a positive integer")))?),
            "A" => a = Some(parse_rows(value).map_err(err)?),
            "d" => d = Some(parse_ints(value.trim_matches(|c| c == '[' || c == ']')).map_err(err)?),
            "scalar" => mode = value.parse().map_err(|e: ScalarError| err(e.to_string()))?,
            "group" => group = Some((line_no, value.to_string())),
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }
    let a = a.ok_or(ShuffleError::Config { line: 0, message: "missing `A`".into() })?;
    if let Some(n) = n {
        if n != a.len() {
            return Err(ShuffleError::Config { line: 0, message: format!("N = {n} but A has {} rows", a.len()) });
        }
    }
    let d = d.unwrap_or_else(|| vec![1; a.len()]);
    if let Some(m) = mode_override {
        mode = m.clone();
    }
    let cartan = validate_cartan(a, d, mode)?;
    let group = match group {
        None => cartan.default_group(),
        Some((line, g)) => {
            let mut parts = g.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some("free"), None, _) => GroupSpec::free(cartan.rank()),
                (Some("torsion"), Some(l), None) => {
                    let l: u32 = l
                        .parse()
                        .ok()
                        .filter(|&l| l >= 2)
                        .ok_or(ShuffleError::Config { line, message: format!("bad torsion order `{l}`") })?;
                    GroupSpec::cyclic(l, cartan.rank())
                }
                _ => return Err(ShuffleError::Config { line, message: format!("unknown group `{g}`") }),
            }
        }
    };
    check_group(&cartan, &group)?;
    Ok(CartanConfig { cartan, group })
}

/// Generic and rational `q` need the free group `ℤ^N`; cyclotomic level `l`
/// needs `(ℤ/l)^N`.
pub fn check_group(c: &CartanData, g: &GroupSpec) -> Result<(), ShuffleError> {
    let want = c.default_group();
    if *g != want {
        let show = |g: &GroupSpec| {
            if g.torsion().is_empty() {
                format!("free of rank {}", g.rank())
            } else {
                format!("torsion {:?}", g.torsion())
            }
        };
        return Err(ShuffleError::Usage(format!(
            "group {} does not match scalar mode {} (expected {})",
            show(g),
            c.mode(),
            show(&want)
        )));
    }
    Ok(())
}
