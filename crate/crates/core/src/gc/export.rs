use serde::Serialize;

use super::GCCode;
use crate::error::{Error, Result};
use crate::symplectic::{AdditiveSymplecticCode, StabilizerCode, SymplecticVector};

const HEADER: &str = "GCQC v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// One Pauli string per generator.
    Pauli,
    /// One row of `2n` integers mod `p` per generator, x part first.
    Matrix,
}

/// Stabilizer generators of an additive GC code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerExport {
    pub n: usize,
    pub k: usize,
    pub p: u32,
    #[serde(skip)]
    pub generators: Vec<SymplecticVector>,
}

impl StabilizerExport {
    pub fn from_generators(p: u32, n: usize, generators: Vec<SymplecticVector>) -> Self {
        StabilizerExport { n, k: n - generators.len(), p, generators }
    }

    pub fn paulis(&self) -> Vec<String> {
        self.generators.iter().map(pauli_token_string).collect()
    }

    pub fn matrix(&self) -> Vec<Vec<u32>> {
        self.generators.iter().map(SymplecticVector::to_digits).collect()
    }

    pub fn render(&self, format: ExportFormat) -> String {
        let mut out = format!("{HEADER}\nn={} k={} p={}\n", self.n, self.k, self.p);
        match format {
            ExportFormat::Pauli => {
                for line in self.paulis() {
                    out.push_str(&line);
                    out.push('\n');
                }
            }
            ExportFormat::Matrix => {
                for row in self.matrix() {
                    let line: Vec<String> = row.iter().map(u32::to_string).collect();
                    out.push_str(&line.join(" "));
                    out.push('\n');
                }
            }
        }
        out
    }

    /// Reads either rendering back. Lines starting with `#` are comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        if lines.next() != Some(HEADER) {
            return Err(Error::InvalidCode(format!("missing {HEADER:?} header")));
        }
        let meta = lines.next().ok_or_else(|| Error::InvalidCode("missing parameter line".into()))?;
        let mut fields = [None; 3];
        for item in meta.split_whitespace() {
            let (key, value) = item.split_once('=').ok_or_else(|| Error::InvalidCode(format!("bad field {item:?}")))?;
            let value: usize = value.parse().map_err(|_| Error::InvalidCode(format!("bad number in {item:?}")))?;
            match key {
                "n" => fields[0] = Some(value),
                "k" => fields[1] = Some(value),
                "p" => fields[2] = Some(value),
                _ => return Err(Error::InvalidCode(format!("unknown field {key:?}"))),
            }
        }
        let [Some(n), Some(k), Some(p)] = fields else {
            return Err(Error::InvalidCode("parameter line needs n, k and p".into()));
        };
        let p = p as u32;
        let generators = lines.map(|l| parse_generator(l, p, n)).collect::<Result<Vec<_>>>()?;
        if generators.len() + k != n {
            return Err(Error::InvalidCode(format!(
                "{} generators cannot give k = {k} on {n} qudits",
                generators.len()
            )));
        }
        Ok(StabilizerExport { n, k, p, generators })
    }

    pub fn to_code(&self) -> Result<StabilizerCode> {
        StabilizerCode::new(self.p, self.n, &self.generators)
    }
}

/// Pauli string for `p = 2`; space-separated `X^a Z^b` factors otherwise.
fn pauli_token_string(g: &SymplecticVector) -> String {
    if let Ok(s) = g.to_pauli_string() {
        return s;
    }
    (0..g.n())
        .map(|i| match g.at(i) {
            (0, 0) => "I".to_string(),
            (a, 0) => format!("X^{a}"),
            (0, b) => format!("Z^{b}"),
            (a, b) => format!("X^{a}Z^{b}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Reads one generator, inferring the length: a Pauli string (`p = 2`),
/// `n` factors such as `X^1Z^2` or `I`, or `2n` integers.
pub fn parse_generator_line(line: &str, p: u32) -> Result<SymplecticVector> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let n = if p == 2 && tokens.len() == 1 {
        tokens[0].chars().count()
    } else if tokens.len().is_multiple_of(2) && tokens.iter().all(|t| t.chars().all(|c| c.is_ascii_digit())) {
        tokens.len() / 2
    } else {
        tokens.len()
    };
    if n == 0 {
        return Err(Error::InvalidCode("empty generator".into()));
    }
    parse_generator(line, p, n)
}

fn parse_generator(line: &str, p: u32, n: usize) -> Result<SymplecticVector> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let numeric = tokens.iter().all(|t| t.chars().all(|c| c.is_ascii_digit()));
    let v = if numeric && tokens.len() == 2 * n {
        let digits: Vec<u32> = tokens
            .iter()
            .map(|t| t.parse::<u32>().map_err(|_| Error::InvalidCode(format!("bad entry {t:?}"))))
            .collect::<Result<_>>()?;
        if digits.iter().any(|&d| d >= p) {
            return Err(Error::InvalidCode(format!("entry out of range mod {p}")));
        }
        SymplecticVector::from_digits(p, &digits[..n], &digits[n..])?
    } else if p == 2 && tokens.len() == 1 {
        SymplecticVector::from_pauli_str(tokens[0])?
    } else if tokens.len() == n {
        let mut v = SymplecticVector::zeros(p, n);
        for (i, t) in tokens.iter().enumerate() {
            let (a, b) = parse_factor(t, p)?;
            v.set(i, a, b);
        }
        v
    } else {
        return Err(Error::InvalidCode(format!("cannot read generator line {line:?}")));
    };
    if v.n() != n {
        return Err(Error::Dimension { expected: n, got: v.n() });
    }
    Ok(v)
}

fn parse_factor(t: &str, p: u32) -> Result<(u32, u32)> {
    if t == "I" {
        return Ok((0, 0));
    }
    let bad = || Error::InvalidCode(format!("bad factor {t:?}"));
    let power = |s: &str| -> Result<u32> {
        let e: u32 = s.parse().map_err(|_| bad())?;
        if e == 0 || e >= p {
            return Err(bad());
        }
        Ok(e)
    };
    let (mut a, mut b) = (0, 0);
    let mut rest = t;
    if let Some(r) = rest.strip_prefix("X^") {
        let end = r.find('Z').unwrap_or(r.len());
        a = power(&r[..end])?;
        rest = &r[end..];
    }
    if let Some(r) = rest.strip_prefix("Z^") {
        b = power(r)?;
        rest = "";
    }
    if !rest.is_empty() || (a, b) == (0, 0) {
        return Err(bad());
    }
    Ok((a, b))
}

impl GCCode {
    /// Stabilizer of an additive code: the symplectic dual of the span of
    /// `N(S_{r-1})^N` and the coset representatives of an F_p-basis of every
    /// outer code.
    pub fn export_stabilizer(&self) -> Result<&StabilizerExport> {
        self.export.get_or_init(|| self.compute_export()).as_ref().map_err(Clone::clone)
    }

    fn compute_export(&self) -> Result<StabilizerExport> {
        let additivity = self.is_additive();
        if !additivity.additive {
            return Err(Error::NotAdditive(additivity.reason.clone()));
        }
        let closure =
            self.additive_closure().ok_or_else(|| Error::Verification("could not span the normalizer code".into()))?;
        let stabilizer = closure.dual();
        let generators = stabilizer.basis();
        let export = StabilizerExport::from_generators(self.p(), self.n(), generators);
        if let Some(k) = self.parameters().k {
            if export.k as u64 != k {
                return Err(Error::Verification(format!("stabilizer gives k = {}, parameters give {k}", export.k)));
            }
        }
        if !stabilizer.is_self_orthogonal() || !closure.contains_code(&stabilizer) {
            return Err(Error::Verification("exported stabilizer is not inside its normalizer".into()));
        }
        Ok(export)
    }

    /// Whether `v` is in the exported stabilizer.
    pub fn is_stabilizer_element(&self, v: &SymplecticVector) -> Result<bool> {
        self.export_stabilizer()?;
        Ok(self.additive_closure().is_some_and(|c| c.dual_contains(v)))
    }

    /// Stabilizer as a code object, for additive codes.
    pub fn stabilizer_code(&self) -> Result<AdditiveSymplecticCode> {
        let export = self.export_stabilizer()?;
        AdditiveSymplecticCode::new(self.p(), self.n(), &export.generators)
    }
}
