use std::fmt::Display;
use std::io::Write;

use serde_json::Value;

use crate::error::CliError;

/// Exact JSON integer from any decimal rendering (`arbitrary_precision`).
pub fn int(n: &impl Display) -> Value {
    Value::Number(n.to_string().parse().expect("decimal integer"))
}

pub fn emit(out: &mut dyn Write, value: &Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}
