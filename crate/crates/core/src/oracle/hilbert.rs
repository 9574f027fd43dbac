//! Degree-by-degree Hilbert function of `ℚ[θ]/(J + ⟨E⟩)` for a monomial ideal
//! `J` and homogeneous linear forms `E`.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{sparse_rank, SparseVec};

fn in_ideal(m: &[u32], gens: &[Vec<u32>]) -> bool {
    gens.iter().any(|g| g.iter().zip(m).all(|(a, b)| a <= b))
}

/// Exponent vectors of degree `t` in `n` variables.
fn monomials_of_degree(n: usize, t: u32) -> Vec<Vec<u32>> {
    (0..n)
        .combinations_with_replacement(t as usize)
        .map(|c| {
            let mut e = vec![0u32; n];
            for i in c {
                e[i] += 1;
            }
            e
        })
        .collect()
}

/// Hilbert function values `h_0, h_1, …` up to the first zero.
///
/// `gens` are exponent vectors of the monomial ideal (empty for the zero ideal).
pub fn hilbert_function(n: usize, gens: &[Vec<u32>], forms: &[Vec<i64>]) -> Result<Vec<usize>> {
    let max_deg = gens.iter().map(|g| g.iter().sum::<u32>()).max().unwrap_or(1).max(1);
    let bound = n as u32 * max_deg + 1;
    let mut prev_std: Vec<Vec<u32>> = Vec::new();
    let mut out = Vec::new();
    for t in 0..=bound {
        let std_t: Vec<Vec<u32>> =
            monomials_of_degree(n, t).into_iter().filter(|m| !in_ideal(m, gens)).collect();
        let index: HashMap<&[u32], u32> =
            std_t.iter().enumerate().map(|(k, m)| (m.as_slice(), k as u32)).collect();
        // multiples of the forms by standard monomials of degree t − 1, taken mod J
        let mut cols: Vec<SparseVec> = Vec::new();
        for m in &prev_std {
            for f in forms {
                let mut v: SparseVec = f
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .filter_map(|(j, &c)| {
                        let mut e = m.clone();
                        e[j] += 1;
                        index.get(e.as_slice()).map(|&k| (k, c))
                    })
                    .collect();
                v.sort_unstable();
                if !v.is_empty() {
                    cols.push(v);
                }
            }
        }
        let h = std_t.len() - sparse_rank(&cols);
        if h == 0 {
            return Ok(out);
        }
        out.push(h);
        prev_std = std_t;
    }
    Err(Error::domain(format!(
        "quotient does not vanish by degree {bound}; the linear forms are not a system of parameters"
    )))
}

/// `dim_ℚ ℚ[θ]/(J + ⟨E⟩)` for homogeneous linear forms `E` (rows of integer
/// coefficients).
pub fn graded_artinian_dimension(j: &MonomialIdeal, forms: &[Vec<i64>]) -> Result<usize> {
    let gens: Vec<Vec<u32>> = j.generators().iter().map(|g| g.entries().to_vec()).collect();
    Ok(hilbert_function(j.n_vars(), &gens, forms)?.iter().sum())
}
