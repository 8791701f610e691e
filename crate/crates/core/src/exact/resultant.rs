use super::matrix::MatR;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Sylvester matrix of `p` and `q` in `var`.
///
/// Columns are indexed by ascending powers `var^0 … var^(m+n-1)`; the first
/// `deg q` rows hold the shifts `var^i · p`, the remaining `deg p` rows the
/// shifts `var^j · q`.
pub fn sylvester(p: &Poly, q: &Poly, var: &str) -> Result<MatR> {
    let m = p.degree_in(var).unwrap_or(0) as usize;
    let n = q.degree_in(var).unwrap_or(0) as usize;
    if m == 0 || n == 0 {
        return Err(Error::Domain(format!(
            "resultant needs positive degree in {var} (got {m} and {n})"
        )));
    }
    let pc = p.coeffs_in(var);
    let qc = q.coeffs_in(var);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Poly::zero(); size];
        for (k, c) in pc.iter().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for j in 0..m {
        let mut row = vec![Poly::zero(); size];
        for (k, c) in qc.iter().enumerate() {
            row[j + k] = c.clone();
        }
        rows.push(row);
    }
    MatR::from_rows(rows)
}

/// Resultant of `p` and `q` with respect to `var`: the determinant of
/// [`sylvester`]. It vanishes exactly when the two share a root in `var`
/// over the algebraic closure of the field of the remaining variables.
pub fn resultant(p: &Poly, q: &Poly, var: &str) -> Result<Poly> {
    let d = sylvester(p, q, var)?.det()?;
    let rest: Vec<String> = d.vars().iter().filter(|v| v.as_str() != var).cloned().collect();
    d.with_vars(&rest)
}
