//! Reading arrangement files and writing arrangements back out in the same
//! text format.

use arr_core::arrangement::Arrangement;
use num_traits::One;
use std::path::Path;

/// Serializes an arrangement in the input file format: a `dim` header and one
/// line of rationals per hyperplane.
pub fn arrangement_to_text(arr: &Arrangement) -> String {
    let mut out = format!("dim {}\n", arr.dim());
    for h in arr.hyperplanes() {
        let line: Vec<String> = h
            .coeffs()
            .iter()
            .map(|c| {
                if c.denom().is_one() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                }
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    std::fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}
