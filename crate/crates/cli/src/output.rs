//! Report emission and exit-code policy.

use prooflab::{Report, Verdict};
use serde_json::{json, Value};

use crate::OutputFormat;

/// 1 on any FAIL, else 3 on any INCONCLUSIVE, else 0.
pub fn exit_code(verdicts: impl IntoIterator<Item = Verdict>) -> u8 {
    let vs: Vec<Verdict> = verdicts.into_iter().collect();
    if vs.contains(&Verdict::Fail) {
        1
    } else if vs.contains(&Verdict::Inconclusive) {
        3
    } else {
        0
    }
}

pub struct Emitter {
    pub format: OutputFormat,
    pub timing: bool,
}

impl Emitter {
    pub fn report(&self, r: &Report) {
        match self.format {
            OutputFormat::JsonLines => {
                let mut v = json!({"name": r.name, "verdict": r.verdict, "residual": r.residual});
                if self.timing {
                    v["millis"] = json!(r.millis);
                }
                println!("{v}");
            }
            OutputFormat::Text => {
                let t = if self.timing {
                    format!("  [{} ms]", r.millis)
                } else {
                    String::new()
                };
                println!(
                    "{:<12} {:<36} {}{t}",
                    r.verdict.to_string(),
                    r.name,
                    r.residual
                );
            }
        }
    }

    /// A structured object; `text` is used in text mode.
    pub fn object(&self, mut v: Value, text: &str, timing_keys: &[&str]) {
        match self.format {
            OutputFormat::JsonLines => {
                if !self.timing {
                    if let Some(obj) = v.as_object_mut() {
                        for k in timing_keys {
                            obj.remove(*k);
                        }
                    }
                }
                println!("{v}");
            }
            OutputFormat::Text => println!("{text}"),
        }
    }
}
