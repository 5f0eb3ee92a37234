//! Projective covers, minimal presentations, the Nakayama functor and the
//! Auslander–Reiten translate.
//!
//! `τM = ker(νP₁ → νP₀)` for a minimal presentation `P₁ → P₀ → M → 0`, and
//! `τ⁻¹M = D τ_{op}(DM)`.

use std::sync::Arc;

use num_traits::Zero;

use super::{morphism_from_projectives, radical, same_algebra, Morphism, Representation};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Rational};

/// `⊕ P_{tops[k]} ↠ M`, the `k`-th summand generated by `generators[k]`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub tops: Vec<usize>,
    pub generators: Vec<Vec<Rational>>,
    pub rep: Representation,
    pub map: Morphism,
}

/// Minimal projective presentation `P₁ → P₀ → M → 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p1: Vec<usize>,
    pub p0: Vec<usize>,
    pub p1_rep: Representation,
    pub p0_rep: Representation,
    /// `P₁ → P₀`
    pub map: Morphism,
    /// `P₀ → M`
    pub cover: Morphism,
}

impl Presentation {
    /// `[P₀] − [P₁]` in the basis of indecomposable projectives.
    pub fn g_vector(&self, n: usize) -> Vec<i64> {
        let mut g = vec![0i64; n];
        for &v in &self.p0 {
            g[v] += 1;
        }
        for &v in &self.p1 {
            g[v] -= 1;
        }
        g
    }
}

pub(crate) fn projective_sum(algebra: &Arc<Algebra>, tops: &[usize]) -> Result<Representation> {
    if tops.is_empty() {
        return Ok(Representation::zero(algebra.clone()));
    }
    let parts = tops.iter().map(|&v| Representation::projective(algebra.clone(), v)).collect::<Result<Vec<_>>>()?;
    Representation::direct_sum(&parts.iter().collect::<Vec<_>>())
}

pub(crate) fn injective_sum(algebra: &Arc<Algebra>, socles: &[usize]) -> Result<Representation> {
    if socles.is_empty() {
        return Ok(Representation::zero(algebra.clone()));
    }
    let parts = socles.iter().map(|&v| Representation::injective(algebra.clone(), v)).collect::<Result<Vec<_>>>()?;
    Representation::direct_sum(&parts.iter().collect::<Vec<_>>())
}

/// Offset of summand `k` inside the fiber at `x` of `⊕ P_{tops}` (or of
/// `⊕ I_{tops}` when `injective`).
fn summand_offsets(algebra: &Algebra, tops: &[usize], x: usize, injective: bool) -> Vec<usize> {
    let mut offs = Vec::with_capacity(tops.len());
    let mut acc = 0;
    for &t in tops {
        offs.push(acc);
        acc += if injective { algebra.paths_between(x, t).len() } else { algebra.paths_between(t, x).len() };
    }
    offs
}

pub(crate) fn cover_any(m: &Representation) -> Result<ProjectiveCover> {
    let (_, inc) = radical(m)?;
    let mut tops = Vec::new();
    let mut generators = Vec::new();
    for (v, basis) in inc.blocks.iter().enumerate() {
        let complement = basis.complement_columns();
        for c in 0..complement.cols() {
            tops.push(v);
            generators.push(complement.column(c));
        }
    }
    let rep = projective_sum(m.algebra(), &tops)?;
    let map = morphism_from_projectives(m, &tops, &generators);
    Ok(ProjectiveCover { tops, generators, rep, map })
}

/// Projective cover built from a complement of the radical at each vertex.
pub fn projective_cover(m: &Representation) -> Result<ProjectiveCover> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    cover_any(m)
}

pub fn min_presentation(m: &Representation) -> Result<Presentation> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let c0 = cover_any(m)?;
    let (syzygy, inclusion) = c0.map.kernel(&c0.rep)?;
    let c1 = cover_any(&syzygy)?;
    let map = c1.map.then(&inclusion);
    Ok(Presentation { p1: c1.tops, p0: c0.tops, p1_rep: c1.rep, p0_rep: c0.rep, map, cover: c0.map })
}

/// Applies `ν = D Hom(−, A)` to a map `⊕ P_{p1} → ⊕ P_{p0}`, giving the
/// induced map `⊕ I_{p1} → ⊕ I_{p0}` together with its source and target.
///
/// A component `P_v → P_w` is right multiplication by an element of
/// `e_w A e_v`; for a path `q: w → v` its image sends the dual basis vector
/// of a path `p = r·q` ending at `v` to that of `r`.
pub fn nakayama(
    algebra: &Arc<Algebra>,
    p1: &[usize],
    p0: &[usize],
    map: &Morphism,
) -> Result<(Representation, Representation, Morphism)> {
    let n = algebra.num_vertices();
    if p1.iter().chain(p0).any(|&v| v >= n) {
        return Err(Error::UnknownVertex("projective summand out of range".into()));
    }
    let src = projective_sum(algebra, p1)?;
    let dst = projective_sum(algebra, p0)?;
    map.check(&src, &dst)?;
    let nu_src = injective_sum(algebra, p1)?;
    let nu_dst = injective_sum(algebra, p0)?;

    // coefficients[j][k][q_pos]: component of the image of the j-th generator in summand k
    let mut coefficients: Vec<Vec<Vec<Rational>>> = Vec::with_capacity(p1.len());
    for (j, &vj) in p1.iter().enumerate() {
        let col = summand_offsets(algebra, p1, vj, false)[j];
        let image = map.blocks[vj].column(col);
        let offs = summand_offsets(algebra, p0, vj, false);
        coefficients.push(
            p0.iter()
                .enumerate()
                .map(|(k, &wk)| {
                    let len = algebra.paths_between(wk, vj).len();
                    image[offs[k]..offs[k] + len].to_vec()
                })
                .collect(),
        );
    }

    let mut blocks = Vec::with_capacity(n);
    for x in 0..n {
        let mut block = QMatrix::zeros(nu_dst.dims()[x], nu_src.dims()[x]);
        let col_offs = summand_offsets(algebra, p1, x, true);
        let row_offs = summand_offsets(algebra, p0, x, true);
        for (j, &vj) in p1.iter().enumerate() {
            for (k, &wk) in p0.iter().enumerate() {
                let qs = algebra.paths_between(wk, vj);
                for (qi, &q) in qs.iter().enumerate() {
                    let c = &coefficients[j][k][qi];
                    if c.is_zero() {
                        continue;
                    }
                    let q_arrows = &algebra.paths()[q].arrows;
                    let rows = algebra.paths_between(x, wk);
                    for (col_pos, &p) in algebra.paths_between(x, vj).iter().enumerate() {
                        let p_arrows = &algebra.paths()[p].arrows;
                        if !p_arrows.ends_with(q_arrows) {
                            continue;
                        }
                        let prefix = &p_arrows[..p_arrows.len() - q_arrows.len()];
                        let Some(r) = algebra.path_lookup(x, prefix) else { continue };
                        let Some(row_pos) = rows.iter().position(|&t| t == r) else { continue };
                        block.add_at(row_offs[k] + row_pos, col_offs[j] + col_pos, c);
                    }
                }
            }
        }
        blocks.push(block);
    }
    let nu_map = Morphism { blocks };
    nu_map.check(&nu_src, &nu_dst)?;
    Ok((nu_src, nu_dst, nu_map))
}

/// Auslander–Reiten translate; projective summands contribute zero.
pub fn tau(m: &Representation) -> Result<Representation> {
    if m.is_zero() {
        return Ok(m.clone());
    }
    let pres = min_presentation(m)?;
    if pres.p1.is_empty() {
        return Ok(Representation::zero(m.algebra().clone()));
    }
    let (nu_src, _, nu_map) = nakayama(m.algebra(), &pres.p1, &pres.p0, &pres.map)?;
    let (t, _) = nu_map.kernel(&nu_src)?;
    t.check_relations()?;
    Ok(t)
}

/// Inverse translate through duality; injective summands contribute zero.
pub fn tau_inverse(m: &Representation) -> Result<Representation> {
    let t = tau(&m.dual())?;
    let back = t.dual_over(m.algebra().clone());
    back.check_relations()?;
    debug_assert!(same_algebra(back.algebra(), m.algebra()));
    Ok(back)
}
