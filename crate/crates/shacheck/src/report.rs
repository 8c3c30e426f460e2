//! End-to-end certification report.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use chevgroup::SystemType;
use serde::Serialize;

use crate::classes::conjugacy_classes;
use crate::endo::{class_preserving_endos, inner_map, is_inner};
use crate::error::ShaError;
use crate::table::{default_realization, generate_group, DEFAULT_CAP};

/// Orders above this need the slow opt-in.
pub const SLOW_THRESHOLD: usize = 1000;

pub const HYPOTHESIS_VIOLATED: &str = "HYPOTHESIS-VIOLATED";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShaOptions {
    pub cap: usize,
    pub slow: bool,
}

impl Default for ShaOptions {
    fn default() -> Self {
        ShaOptions { cap: DEFAULT_CAP, slow: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ShaVerdict {
    Pass,
    Fail,
}

impl fmt::Display for ShaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShaVerdict::Pass => "PASS",
            ShaVerdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ShaReport {
    pub system: String,
    pub p: u64,
    pub group_order: usize,
    pub class_count: usize,
    pub cp_endo_count: usize,
    pub inner_count: usize,
    pub verdict: ShaVerdict,
    pub seconds: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<String>,
}

/// PASS iff every class-preserving endomorphism is inner and the two table counts agree.
pub fn sha_report(system: SystemType, p: u64, opts: ShaOptions) -> Result<ShaReport, ShaError> {
    let start = Instant::now();
    let g = generate_group(system, p, default_realization(system), opts.cap)?;
    if g.len() > SLOW_THRESHOLD && !opts.slow {
        return Err(ShaError::NeedsSlow(g.len()));
    }
    let classes = conjugacy_classes(&g);
    let endos = class_preserving_endos(&g, &classes);
    let inner: BTreeSet<Vec<u32>> = (0..g.len() as u32).map(|h| inner_map(&g, h).images).collect();
    let all_inner = endos.iter().all(|phi| is_inner(&g, phi).is_some());
    let verdict = if all_inner && endos.len() == inner.len() { ShaVerdict::Pass } else { ShaVerdict::Fail };
    Ok(ShaReport {
        system: system.to_string(),
        p,
        group_order: g.len(),
        class_count: classes.len(),
        cp_endo_count: endos.len(),
        inner_count: inner.len(),
        verdict,
        seconds: start.elapsed().as_secs_f64(),
        flag: (p == 2).then(|| HYPOTHESIS_VIOLATED.to_string()),
    })
}
