use std::io::Write;
use std::path::Path;

use gridfree_core::sequence_io::TriangleImage;
use gridfree_core::{Count, Polynomial, RowTable, VerificationReport};
use serde_json::json;

use crate::args::Format;
use crate::CliResult;

pub(crate) struct Printer<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

fn strings(counts: &[Count]) -> Vec<String> {
    counts.iter().map(ToString::to_string).collect()
}

impl<'a> Printer<'a> {
    pub fn new(format: Format, out: &'a mut dyn Write) -> Self {
        Printer { format, out }
    }

    fn csv(&mut self) -> csv::Writer<&mut dyn Write> {
        csv::WriterBuilder::new()
            .flexible(true)
            .from_writer(&mut *self.out)
    }

    pub fn cell(&mut self, m: usize, n: usize, k: usize, value: &Count) -> CliResult<()> {
        match self.format {
            Format::Plain => writeln!(self.out, "{value}")?,
            Format::Csv => {
                let mut w = self.csv();
                w.write_record(["m", "n", "k", "count"])?;
                w.write_record([m.to_string(), n.to_string(), k.to_string(), value.to_string()])?;
                w.flush()?;
            }
            Format::JsonLines => {
                let rec = json!({"m": m, "n": n, "k": k, "count": value.to_string()});
                writeln!(self.out, "{rec}")?;
            }
        }
        Ok(())
    }

    /// One line per row. `table` adds the `n\k` header and aligned columns.
    pub fn rows(&mut self, rows: &[RowTable], table: bool) -> CliResult<()> {
        match self.format {
            Format::Plain if table => {
                let width_k = rows.iter().map(RowTable::k_max).max().unwrap_or(0);
                let width = rows
                    .iter()
                    .flat_map(|r| r.counts().iter().map(|c| c.to_string().len()))
                    .chain([width_k.to_string().len(), rows.len().to_string().len(), 3])
                    .max()
                    .unwrap_or(1);
                let mut header = format!("{:<width$} |", "n\\k");
                for k in 0..=width_k {
                    header.push_str(&format!(" {k:>width$}"));
                }
                writeln!(self.out, "{}", header.trim_end())?;
                writeln!(self.out, "{}", "-".repeat(header.trim_end().len()))?;
                for row in rows {
                    let mut line = format!("{:<width$} |", row.n());
                    for c in row.counts() {
                        line.push_str(&format!(" {:>width$}", c.to_string()));
                    }
                    writeln!(self.out, "{line}")?;
                }
            }
            Format::Plain => {
                for row in rows {
                    writeln!(self.out, "{}", strings(row.counts()).join(" "))?;
                }
            }
            Format::Csv => {
                let mut w = self.csv();
                w.write_record(["m", "n", "counts..."])?;
                for row in rows {
                    let mut rec = vec![row.m().to_string(), row.n().to_string()];
                    rec.extend(strings(row.counts()));
                    w.write_record(&rec)?;
                }
                w.flush()?;
            }
            Format::JsonLines => {
                for row in rows {
                    let rec = json!({"m": row.m(), "n": row.n(), "counts": strings(row.counts())});
                    writeln!(self.out, "{rec}")?;
                }
            }
        }
        Ok(())
    }

    pub fn polys(&mut self, m: usize, k: usize, polys: &[(&str, Polynomial)]) -> CliResult<()> {
        let single = polys.len() == 1;
        match self.format {
            Format::Plain => {
                for (name, p) in polys {
                    if single {
                        writeln!(self.out, "{p}")?;
                    } else {
                        writeln!(self.out, "{name}_{k}(n) = {p}")?;
                    }
                }
            }
            Format::Csv => {
                let mut w = self.csv();
                w.write_record(["m", "k", "name", "polynomial", "coefficients (ascending)"])?;
                for (name, p) in polys {
                    let mut rec = vec![m.to_string(), k.to_string(), name.to_string(), p.to_string()];
                    rec.extend(p.coeffs().iter().map(ToString::to_string));
                    w.write_record(&rec)?;
                }
                w.flush()?;
            }
            Format::JsonLines => {
                for (name, p) in polys {
                    let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
                    let rec = json!({
                        "m": m,
                        "k": k,
                        "name": name,
                        "polynomial": p.to_string(),
                        "coefficients": coeffs,
                    });
                    writeln!(self.out, "{rec}")?;
                }
            }
        }
        Ok(())
    }

    pub fn reports(&mut self, reports: &[VerificationReport]) -> CliResult<()> {
        match self.format {
            Format::Plain => {
                for r in reports {
                    writeln!(self.out, "{r}")?;
                }
            }
            Format::Csv => {
                let mut w = self.csv();
                w.write_record(["report", "range", "status", "experimental", "checks", "failures"])?;
                for r in reports {
                    w.write_record([
                        r.name().to_string(),
                        r.range().to_string(),
                        if r.passed() { "PASS" } else { "FAIL" }.to_string(),
                        r.is_experimental().to_string(),
                        r.checked().to_string(),
                        r.failures().len().to_string(),
                    ])?;
                }
                w.flush()?;
            }
            Format::JsonLines => {
                for r in reports {
                    for f in r.failures() {
                        let rec = json!({
                            "report": r.name(),
                            "params": f.params,
                            "expected": f.expected,
                            "actual": f.actual,
                        });
                        writeln!(self.out, "{rec}")?;
                    }
                    let rec = json!({
                        "report": r.name(),
                        "range": r.range(),
                        "passed": r.passed(),
                        "experimental": r.is_experimental(),
                        "checks": r.checked(),
                        "failures": r.failures().len(),
                    });
                    writeln!(self.out, "{rec}")?;
                }
            }
        }
        Ok(())
    }

    pub fn image(&mut self, path: &Path, image: &TriangleImage) -> CliResult<()> {
        match self.format {
            Format::Plain => writeln!(
                self.out,
                "wrote {} ({}x{} graymap, mod {})",
                path.display(),
                image.rows,
                image.rows,
                image.modulus
            )?,
            Format::Csv => {
                let mut w = self.csv();
                w.write_record(["path", "rows", "modulus"])?;
                w.write_record([path.display().to_string(), image.rows.to_string(), image.modulus.to_string()])?;
                w.flush()?;
            }
            Format::JsonLines => {
                let rec = json!({"path": path.display().to_string(), "rows": image.rows, "modulus": image.modulus});
                writeln!(self.out, "{rec}")?;
            }
        }
        Ok(())
    }
}
