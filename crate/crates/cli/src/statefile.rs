//! JSON state files.
//!
//! ```json
//! { "dims": [3, 32], "amps": [[0, 5, 0.25, 0.0], [1, 7, -0.125, 0.0]] }
//! ```
//!
//! `amps` lists `[i, j, re, im]` with 0-based Alice index `i` and Bob index
//! `j`; missing entries are zero. Unknown top-level keys are ignored, so
//! the output of `show-state` can be fed straight back in.

use std::collections::HashSet;
use std::path::Path;

use locc_core::{Complex64, PureState, SchmidtVector};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::error::CliError;
use crate::numfmt::{json_num, json_nums};

/// Largest accepted `dA · dB`.
pub const MAX_AMPLITUDES: usize = 1 << 20;

#[derive(Debug, Clone, Deserialize)]
pub struct StateFile {
    pub dims: [usize; 2],
    pub amps: Vec<(usize, usize, f64, f64)>,
}

impl StateFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Malformed(format!("state file: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Malformed(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Checks indices and duplicates, then applies the normalization gate.
    pub fn to_pure_state(&self) -> Result<PureState, CliError> {
        let [da, db] = self.dims;
        if da == 0 || db == 0 {
            return Err(CliError::Malformed("dims must be positive".into()));
        }
        let len = da
            .checked_mul(db)
            .filter(|&n| n <= MAX_AMPLITUDES)
            .ok_or_else(|| CliError::Malformed(format!("dims {da}x{db} too large")))?;

        let mut amps = vec![Complex64::new(0.0, 0.0); len];
        let mut seen = HashSet::with_capacity(self.amps.len());
        for &(i, j, re, im) in &self.amps {
            if i >= da || j >= db {
                return Err(CliError::Malformed(format!(
                    "amplitude index ({i}, {j}) outside dims {da}x{db}"
                )));
            }
            if !seen.insert((i, j)) {
                return Err(CliError::Malformed(format!(
                    "duplicate amplitude index ({i}, {j})"
                )));
            }
            if !(re.is_finite() && im.is_finite()) {
                return Err(CliError::Malformed(format!(
                    "non-finite amplitude at ({i}, {j})"
                )));
            }
            amps[i * db + j] = Complex64::new(re, im);
        }
        Ok(PureState::new(da, db, amps)?)
    }
}

/// Serialized form of a state, with its Schmidt vector attached.
#[derive(Debug, Serialize)]
pub struct StateDump {
    pub dims: [usize; 2],
    pub amps: Vec<(usize, usize, Box<RawValue>, Box<RawValue>)>,
    pub schmidt: Vec<Box<RawValue>>,
}

impl StateDump {
    /// Lists the non-zero amplitudes in index order.
    pub fn new(state: &PureState, schmidt: &SchmidtVector) -> Self {
        let (da, db) = (state.dim_a(), state.dim_b());
        let mut amps = Vec::new();
        for i in 0..da {
            for j in 0..db {
                let z = state.amp(i, j);
                if z.re != 0.0 || z.im != 0.0 {
                    amps.push((i, j, json_num(z.re), json_num(z.im)));
                }
            }
        }
        StateDump {
            dims: [da, db],
            amps,
            schmidt: json_nums(schmidt.probs()),
        }
    }

    /// `record,i,j,re,im` rows: one `dims` row, the amplitudes, then the
    /// Schmidt coefficients (index in `i`, value in `re`).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("record,i,j,re,im\n");
        out.push_str(&format!("dims,{},{},,\n", self.dims[0], self.dims[1]));
        for (i, j, re, im) in &self.amps {
            out.push_str(&format!("amp,{i},{j},{},{}\n", re.get(), im.get()));
        }
        for (k, p) in self.schmidt.iter().enumerate() {
            out.push_str(&format!("schmidt,{k},,{},\n", p.get()));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        let f = StateFile::parse(r#"{"dims":[2,2],"amps":[[0,0,0.70710678,0],[1,1,0.70710678,0]]}"#)
            .unwrap();
        let st = f.to_pure_state().unwrap();
        assert!((st.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_files() {
        let cases = [
            r#"{"dims":[2,2],"amps":[[2,0,1,0]]}"#,
            r#"{"dims":[2,2],"amps":[[0,0,1,0],[0,0,0,0]]}"#,
            r#"{"dims":[0,2],"amps":[]}"#,
            r#"{"dims":[2,2],"amps":[[0,0,"x",0]]}"#,
            r#"{"dims":[2,2],"amps":[[-1,0,1,0]]}"#,
            r#"{"dims":[2,2]"#,
            r#"{"dims":[4294967296,4294967296],"amps":[]}"#,
        ];
        for text in cases {
            let err = StateFile::parse(text).and_then(|f| f.to_pure_state()).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{text}: {err}");
        }
    }

    #[test]
    fn norm_outside_gate_is_a_normalization_failure() {
        let f = StateFile::parse(r#"{"dims":[1,2],"amps":[[0,0,1.0,0],[0,1,0.1,0]]}"#).unwrap();
        assert_eq!(f.to_pure_state().unwrap_err().exit_code(), 3);
        let f = StateFile::parse(r#"{"dims":[1,2],"amps":[]}"#).unwrap();
        assert_eq!(f.to_pure_state().unwrap_err().exit_code(), 3);
    }
}
