use std::fs;
use std::io::{self, Write};

use anyhow::{bail, Context};
use serde::Serialize;

use crate::{Format, OutputArgs};

/// The requested format, or `default`; anything outside `allowed` is an input error.
pub fn format(args: &OutputArgs, default: Format, allowed: &[Format], command: &str) -> anyhow::Result<Format> {
    let f = args.format.unwrap_or(default);
    if !allowed.contains(&f) {
        let names: Vec<String> = allowed.iter().map(|a| format!("{a:?}").to_lowercase()).collect();
        bail!("{command} supports --format {}", names.join(", "));
    }
    Ok(f)
}

pub fn emit(args: &OutputArgs, text: &str) -> anyhow::Result<()> {
    match &args.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// 17 significant digits, enough to round-trip an `f64`.
pub fn full(x: f64) -> String {
    format!("{x:.16e}")
}
