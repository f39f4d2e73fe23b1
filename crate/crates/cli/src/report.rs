use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
}

/// What every command prints: the input size, what came out, the shrink
/// per step where there are steps, and the verification matrix.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub n: usize,
    pub m: usize,
    pub output: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub shrink_ratios: Vec<f64>,
    pub checks: Vec<CheckRow>,
    pub wall_ms: f64,
    /// Extra table lines for the human format.
    #[serde(skip)]
    pub lines: Vec<String>,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub detail: serde_json::Value,
}

impl RunReport {
    pub fn new(command: &str, n: usize, m: usize) -> Self {
        RunReport {
            command: command.into(),
            n,
            m,
            output: String::new(),
            shrink_ratios: Vec::new(),
            checks: Vec::new(),
            wall_ms: 0.0,
            lines: Vec::new(),
            detail: serde_json::Value::Null,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(CheckRow { name: name.into(), passed });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn human(&self) -> String {
        let mut s = format!("{}: n={} m={} -> {}\n", self.command, self.n, self.m, self.output);
        if !self.shrink_ratios.is_empty() {
            let r: Vec<String> = self.shrink_ratios.iter().map(|x| format!("{x:.4}")).collect();
            s += &format!("shrink per step: {}\n", r.join(" "));
        }
        for l in &self.lines {
            s += l;
            s.push('\n');
        }
        for c in &self.checks {
            s += &format!("  [{}] {}\n", if c.passed { "ok" } else { "FAIL" }, c.name);
        }
        s += &format!("time: {:.1} ms\n", self.wall_ms);
        s
    }
}
