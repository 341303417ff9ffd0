//! CSV output: UTF-8, no BOM, `\n` line endings, numbers in `{:.12e}`.

use std::io::Write;

/// Formats a number with 13 significant digits in scientific notation.
pub fn num(v: f64) -> String {
    format!("{v:.12e}")
}

pub fn csv_writer<W: Write>(inner: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(inner)
}

pub const COMPARISON_HEADER: [&str; 5] = [
    "ebn0_db",
    "ber_generalized",
    "ber_exact",
    "ber_quadrature",
    "ratio",
];
