use super::Cocycle;
use crate::algebra::Presentation;
use crate::arith::{kernel_basis, GaussianRational, QMatrix, QVector};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::representation::Representation;

/// Exact basis of all cocycles for ρ. For fixed ρ, η(r) is linear in the
/// letter values, so this is a kernel computation.
pub fn solve_cocycles(pres: &Presentation, rep: &Representation) -> Result<Vec<Cocycle>> {
    solve_cocycles_with(Execution::default(), pres, rep)
}

pub fn solve_cocycles_with(exec: Execution, pres: &Presentation, rep: &Representation) -> Result<Vec<Cocycle>> {
    if rep.presentation() != pres {
        return Err(Error::DimensionMismatch(format!(
            "representation lives on {}, not {pres}",
            rep.presentation()
        )));
    }
    let (d, n) = (pres.d(), rep.n());
    let cols = 2 * d * d * n;
    if n == 0 {
        return Ok(Vec::new());
    }
    // Each relation contributes an n × cols block: η(l₁⋯lₘ) = Σᵢ ρ(l₁⋯lᵢ₋₁)η(lᵢ)ε(lᵢ₊₁⋯lₘ).
    let blocks = par::map_with(exec, pres.relations(), |r| {
        let mut block = vec![vec![GaussianRational::ZERO; cols]; n];
        for (w, c) in r.element.terms() {
            let ls = w.letters();
            let mut prefix = QMatrix::identity(n);
            for (i, &l) in ls.iter().enumerate() {
                if ls[i + 1..].iter().all(|x| x.counit()) {
                    let base = l.code(d) * n;
                    for a in 0..n {
                        for b in 0..n {
                            let p = prefix.get(a, b);
                            if !p.is_zero() {
                                block[a][base + b] += c * p;
                            }
                        }
                    }
                }
                prefix = &prefix * rep.letter(l);
            }
        }
        block
    });
    let rows: Vec<Vec<GaussianRational>> = blocks.into_iter().flatten().collect();
    let basis = if rows.is_empty() {
        (0..cols).map(|i| QVector::unit(cols, i)).collect()
    } else {
        kernel_basis(&QMatrix::from_rows(rows).expect("rectangular"))
    };
    Ok(basis
        .into_iter()
        .map(|x| {
            let values = (0..2 * d * d)
                .map(|c| QVector::new(x.entries()[c * n..(c + 1) * n].to_vec()))
                .collect();
            let eta = Cocycle::from_values_unchecked(rep, values);
            debug_assert!(eta.violations().is_empty());
            eta
        })
        .collect())
}

