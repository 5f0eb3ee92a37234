use num_traits::One;

use super::{same_algebra, Morphism, Representation};
use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Rational};

/// Unknown layout: block `v` is `dims_y[v] × dims_x[v]`, row-major, blocks in vertex order.
fn hom_system(x: &Representation, y: &Representation) -> Result<(QMatrix, Vec<usize>)> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let (dx, dy) = (x.dims(), y.dims());
    let mut offsets = Vec::with_capacity(dx.len());
    let mut unknowns = 0;
    for v in 0..dx.len() {
        offsets.push(unknowns);
        unknowns += dx[v] * dy[v];
    }
    let equations: usize = x.algebra().arrows().iter().map(|a| dy[a.target] * dx[a.source]).sum();
    let mut sys = QMatrix::zeros(equations, unknowns);
    let mut row = 0;
    for (ai, a) in x.algebra().arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ya, xa) = (y.map(ai), x.map(ai));
        // (Y_α F_s − F_t X_α)[r, c] = 0
        for r in 0..dy[t] {
            for c in 0..dx[s] {
                for k in 0..dy[s] {
                    let coeff = ya.get(r, k);
                    if !num_traits::Zero::is_zero(coeff) {
                        sys.add_at(row, offsets[s] + k * dx[s] + c, coeff);
                    }
                }
                for k in 0..dx[t] {
                    let coeff = xa.get(k, c);
                    if !num_traits::Zero::is_zero(coeff) {
                        sys.add_at(row, offsets[t] + r * dx[t] + k, &-coeff.clone());
                    }
                }
                row += 1;
            }
        }
    }
    Ok((sys, offsets))
}

/// A basis of `Hom(x, y)`, read off the null space of the commuting-square system.
pub fn hom_basis(x: &Representation, y: &Representation) -> Result<Vec<Morphism>> {
    let (sys, offsets) = hom_system(x, y)?;
    let kernel = sys.kernel_basis();
    let (dx, dy) = (x.dims(), y.dims());
    Ok((0..kernel.cols())
        .map(|j| Morphism {
            blocks: (0..dx.len())
                .map(|v| QMatrix::from_fn(dy[v], dx[v], |r, c| kernel.get(offsets[v] + r * dx[v] + c, j).clone()))
                .collect(),
        })
        .collect())
}

pub fn hom_dim(x: &Representation, y: &Representation) -> Result<usize> {
    let (sys, _) = hom_system(x, y)?;
    Ok(sys.cols() - sys.rank())
}

/// `dim Ext¹(m, n)` as the cokernel of `Hom(P₀, n) → Hom(Ωm, n)`, restriction
/// along the syzygy inclusion `Ωm ↪ P₀`.
pub fn ext1(m: &Representation, n: &Representation) -> Result<usize> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if m.is_zero() || n.is_zero() {
        return Ok(0);
    }
    let cover = super::projective_cover(m)?;
    let (syzygy, inclusion) = cover.map.kernel(&cover.rep)?;
    let hom_syzygy = hom_dim(&syzygy, n)?;
    if hom_syzygy == 0 {
        return Ok(0);
    }
    let restricted = restricted_basis(&cover.tops, n, &inclusion);
    let rank = match restricted.first() {
        None => 0,
        Some(v) => QMatrix::from_columns(v.len(), &restricted).rank(),
    };
    Ok(hom_syzygy - rank)
}

/// Images under restriction of the standard basis of `Hom(⊕P_{tops[k]}, n)`:
/// the generator of summand `k` goes to a basis vector of `n(tops[k])`.
fn restricted_basis(tops: &[usize], n: &Representation, inclusion: &Morphism) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    let zero = Rational::from_integer(0.into());
    for k in 0..tops.len() {
        for j in 0..n.dims()[tops[k]] {
            let generators: Vec<Vec<Rational>> = tops
                .iter()
                .enumerate()
                .map(|(kk, &t)| {
                    let mut g = vec![zero.clone(); n.dims()[t]];
                    if kk == k {
                        g[j] = Rational::one();
                    }
                    g
                })
                .collect();
            let f = super::morphism_from_projectives(n, tops, &generators);
            out.push(inclusion.then(&f).flatten());
        }
    }
    out
}

/// `pd m ≤ 1` iff the first syzygy is projective.
pub fn pd_at_most_one(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    let cover = super::projective_cover(m)?;
    let (syzygy, _) = cover.map.kernel(&cover.rep)?;
    if syzygy.is_zero() {
        return Ok(true);
    }
    let syz_cover = super::projective_cover(&syzygy)?;
    Ok(syz_cover.rep.total_dim() == syzygy.total_dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::*;

    #[test]
    fn hom_from_projective_is_fiber() {
        let l3 = lambda3();
        let mods: Vec<Representation> = (0..3)
            .flat_map(|v| {
                [
                    Representation::projective(l3.clone(), v).unwrap(),
                    Representation::simple(l3.clone(), v).unwrap(),
                    Representation::injective(l3.clone(), v).unwrap(),
                ]
            })
            .collect();
        for v in 0..3 {
            let p = Representation::projective(l3.clone(), v).unwrap();
            for m in &mods {
                assert_eq!(hom_dim(&p, m).unwrap(), m.dims()[v]);
            }
        }
    }

    #[test]
    fn simples_are_orthogonal() {
        let a = a2_path();
        let s1 = Representation::simple(a.clone(), 0).unwrap();
        let s2 = Representation::simple(a.clone(), 1).unwrap();
        assert_eq!(hom_dim(&s1, &s2).unwrap(), 0);
        assert_eq!(hom_dim(&s2, &s1).unwrap(), 0);
        let l3 = lambda3();
        let p2 = Representation::projective(l3.clone(), 1).unwrap();
        let s2 = Representation::simple(l3, 1).unwrap();
        assert_eq!(hom_dim(&p2, &s2).unwrap(), 1);
    }

    #[test]
    fn hom_basis_elements_are_morphisms() {
        let l3 = lambda3();
        let p3 = Representation::projective(l3.clone(), 2).unwrap();
        let i2 = Representation::injective(l3.clone(), 1).unwrap();
        let basis = hom_basis(&p3, &i2).unwrap();
        assert_eq!(basis.len(), hom_dim(&p3, &i2).unwrap());
        for f in &basis {
            f.check(&p3, &i2).unwrap();
        }
    }

    #[test]
    fn algebra_mismatch() {
        let s = Representation::simple(lambda3(), 0).unwrap();
        let t = Representation::simple(a2_path(), 0).unwrap();
        assert!(matches!(hom_dim(&s, &t), Err(Error::AlgebraMismatch)));
    }

    #[test]
    fn ext_examples() {
        let l3 = lambda3();
        let s3 = Representation::simple(l3.clone(), 2).unwrap();
        let s2 = Representation::simple(l3.clone(), 1).unwrap();
        assert_eq!(ext1(&s3, &s2).unwrap(), 1);
        assert_eq!(ext1(&s2, &s3).unwrap(), 0);
        for v in 0..3 {
            let p = Representation::projective(l3.clone(), v).unwrap();
            assert_eq!(ext1(&p, &s2).unwrap(), 0);
            assert_eq!(ext1(&p, &s3).unwrap(), 0);
        }
    }

    #[test]
    fn projective_dimension() {
        let l3 = lambda3();
        for v in 0..3 {
            assert!(pd_at_most_one(&Representation::projective(l3.clone(), v).unwrap()).unwrap());
        }
        // vertex 2 of A = (2 → 1) is not a sink, so S_3 over the extension has pd 2
        assert!(!pd_at_most_one(&Representation::simple(l3.clone(), 2).unwrap()).unwrap());
        // extension of a single vertex: 2 → 1, where S_2 has pd 1
        let a = a2_path();
        assert!(pd_at_most_one(&Representation::simple(a, 1).unwrap()).unwrap());
    }
}
