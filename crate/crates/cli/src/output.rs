//! Result blocks. The machine block is the source of truth; the human block
//! is rendered from its entries.

use std::fmt::Write;

pub const BEGIN: &str = "---RESULTS---";
pub const END: &str = "---END---";

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Results {
    entries: Vec<(String, String)>,
}

impl Results {
    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn machine(&self) -> String {
        let mut out = String::new();
        out.push_str(BEGIN);
        out.push('\n');
        for (k, v) in &self.entries {
            let _ = writeln!(out, "{k} = {v}");
        }
        out.push_str(END);
        out.push('\n');
        out
    }

    /// Reads a machine block back; lines outside the fences are ignored.
    pub fn parse_machine(text: &str) -> Option<Results> {
        let mut lines = text.lines().skip_while(|l| *l != BEGIN).skip(1);
        let mut res = Results::default();
        for line in lines.by_ref() {
            if line == END {
                return Some(res);
            }
            let (k, v) = line.split_once(" = ")?;
            res.push(k, v);
        }
        None
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let command = self.get("command").unwrap_or("?");
        let _ = writeln!(out, "germlab {command}");
        let checks: Vec<&(String, String)> =
            self.entries.iter().filter(|(k, _)| k.starts_with("check.") && k.matches('.').count() == 1).collect();
        let plain: Vec<&(String, String)> =
            self.entries.iter().filter(|(k, _)| k != "command" && !k.starts_with("check.")).collect();
        let width = plain.iter().map(|(k, _)| label(k).chars().count()).max().unwrap_or(0);
        for (k, v) in plain {
            let l = label(k);
            let pad = width - l.chars().count();
            let _ = writeln!(out, "  {l}{}  {v}", " ".repeat(pad));
        }
        if !checks.is_empty() {
            out.push_str("identities:\n");
            for (k, v) in checks {
                let name = &k["check.".len()..];
                let lhs = self.get(&format!("check.{name}.lhs")).unwrap_or("?");
                let rhs = self.get(&format!("check.{name}.rhs")).unwrap_or("?");
                let _ = writeln!(out, "  [{}] {name}: {lhs} = {rhs}", v.to_uppercase());
            }
        }
        out
    }
}

fn label(key: &str) -> String {
    let fixed = match key {
        "file" => "file",
        "seed" => "seed",
        "d" => "dim (X,0)",
        "k" => "equations",
        "mu_f" => "μ(f)",
        "mu_x" => "μ(X,0)",
        "tau_x" => "τ(X,0)",
        "mu_x_f" => "μ(X ∩ f⁻¹(0))",
        "mu_x_p" => "μ(X ∩ p⁻¹(0))",
        "generic_form" => "generic form p",
        "mu_br" => "μ_BR",
        "mu_br_rel" => "relative μ_BR",
        "tau_br" => "τ_BR",
        "gsv" => "GSV index",
        "eu_x" => "Eu_X(0)",
        "eu_fx" => "Eu_f,X(0)",
        "brasselet" => "Brasselet number",
        "polar_md" => "polar multiplicity m_d",
        "c1" => "dim O/(Jf + I)",
        "c2" => "dim (I ∩ Jf)/(I·Jf)",
        "weights" => "weights",
        "mu" => "Milnor number",
        "tau" => "Tjurina number",
        "colength" => "colength",
        "dimension" => "Krull dimension",
        "std.count" => "basis size",
        "theta.count" => "generators",
        "consistent" => "consistent",
        _ => "",
    };
    if !fixed.is_empty() {
        return fixed.to_string();
    }
    for prefix in ["std.", "theta."] {
        if let Some(i) = key.strip_prefix(prefix) {
            return format!("#{i}");
        }
    }
    key.to_string()
}
