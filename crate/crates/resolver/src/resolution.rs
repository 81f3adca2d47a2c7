//! Minimal graded free resolutions `0 -> F2 -> F1 -> S` of `S/I` for
//! finite-colength homogeneous ideals `I ⊂ k[x,y]`.
//!
//! The syzygies of the generators are obtained from a Gröbner basis with
//! coordinates (pair syzygies of the basis, pulled back, plus the relations
//! expressing each generator through the basis). Redundant generators of `I`
//! are then removed by eliminating unit entries of the syzygy matrix, and
//! redundant syzygies are discarded degree by degree.

use std::collections::BTreeMap;

use num_traits::One;
use rncbetti_core::{int, Rational, SBettiTable};

use crate::error::{ResolverError, Result};
use crate::groebner::{is_finite_colength, s_multipliers, tracked_groebner, GradedIdeal, TrackedBasis};
use crate::linalg::{Echelon, SparseVec};
use crate::poly::{divide, Monomial, Poly2};

/// Minimal resolution of a cyclic module `S/I`.
///
/// `generators` is the matrix of `F1 -> F0 = S`; each entry of `syzygies` is
/// one column of `F2 -> F1`, with one polynomial per generator.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolutionS {
    pub betti: SBettiTable,
    pub generators: Vec<Poly2>,
    pub generator_degrees: Vec<i64>,
    pub syzygies: Vec<Vec<Poly2>>,
    pub syzygy_degrees: Vec<i64>,
}

impl ResolutionS {
    /// Checks that the maps compose to zero, that no entry is a unit, and that
    /// every entry has the degree its row and column labels call for.
    pub fn verify(&self) -> std::result::Result<(), String> {
        for (g, &deg) in self.generators.iter().zip(&self.generator_degrees) {
            if g.is_unit() {
                return Err(format!("generator {g} is a unit"));
            }
            if !g.is_homogeneous() || g.degree().map(i64::from) != Some(deg) {
                return Err(format!("generator {g} does not have degree {deg}"));
            }
        }
        for (col, &deg) in self.syzygies.iter().zip(&self.syzygy_degrees) {
            if col.len() != self.generators.len() {
                return Err("syzygy column has the wrong length".into());
            }
            let mut image = Poly2::zero();
            for ((entry, g), &gdeg) in col.iter().zip(&self.generators).zip(&self.generator_degrees) {
                if entry.is_unit() {
                    return Err(format!("syzygy entry {entry} is a unit"));
                }
                if !entry.is_zero()
                    && (!entry.is_homogeneous() || entry.degree().map(i64::from) != Some(deg - gdeg))
                {
                    return Err(format!("syzygy entry {entry} does not have degree {}", deg - gdeg));
                }
                image = &image + &(entry * g);
            }
            if !image.is_zero() {
                return Err(format!("syzygy maps to {image}, not zero"));
            }
        }
        Ok(())
    }
}

fn vector_degree(v: &[Poly2], degrees: &[i64]) -> Option<i64> {
    v.iter()
        .zip(degrees)
        .find_map(|(p, &g)| p.degree().map(|e| i64::from(e) + g))
}

/// Generators of the syzygy module of `gens`, not necessarily minimal.
fn syzygy_generators(gens: &[Poly2], gb: &TrackedBasis) -> Vec<Vec<Poly2>> {
    let m = gens.len();
    let mut out = Vec::new();

    // e_i - Σ_k q_{i,k}·rep_k, from writing each generator through the basis.
    for (i, f) in gens.iter().enumerate() {
        let (q, r) = divide(f, &gb.polys);
        debug_assert!(r.is_zero());
        let mut v = vec![Poly2::zero(); m];
        v[i] = Poly2::constant(Rational::one());
        for (qk, rep) in q.iter().zip(&gb.reps) {
            for (vi, ri) in v.iter_mut().zip(rep) {
                *vi = &*vi - &(qk * ri);
            }
        }
        out.push(v);
    }

    // Pair syzygies of the basis, pulled back to the generators.
    let n = gb.polys.len();
    for k in 0..n {
        for l in k + 1..n {
            let ((ck, mk), (cl, ml)) = s_multipliers(&gb.polys[k], &gb.polys[l]);
            let mut s = gb.polys[k].mul_term(&ck, mk);
            s.add_scaled(&-cl.clone(), ml, &gb.polys[l]);
            let (q, r) = divide(&s, &gb.polys);
            debug_assert!(r.is_zero());
            let mut coeffs = q.into_iter().map(|p| -&p).collect::<Vec<_>>();
            coeffs[k].add_term(mk, &ck);
            coeffs[l].add_term(ml, &-cl);
            let mut v = vec![Poly2::zero(); m];
            for (c, rep) in coeffs.iter().zip(&gb.reps) {
                if c.is_zero() {
                    continue;
                }
                for (vi, ri) in v.iter_mut().zip(rep) {
                    *vi = &*vi + &(c * ri);
                }
            }
            out.push(v);
        }
    }
    out.retain(|v| v.iter().any(|p| !p.is_zero()));
    out
}

/// Removes generators that are redundant, by repeatedly eliminating a unit
/// entry of the syzygy matrix together with its row and column.
fn eliminate_units(gens: &mut Vec<Poly2>, syz: &mut Vec<Vec<Poly2>>) {
    loop {
        let hit = syz
            .iter()
            .enumerate()
            .find_map(|(s, col)| col.iter().position(Poly2::is_unit).map(|i| (s, i)));
        let Some((s, i)) = hit else { break };
        let pivot_col = syz.swap_remove(s);
        let unit = pivot_col[i].coeff(Monomial::ONE);
        for col in syz.iter_mut() {
            if col[i].is_zero() {
                continue;
            }
            let factor = col[i].scale(&(Rational::one() / &unit));
            for (entry, p) in col.iter_mut().zip(&pivot_col) {
                *entry = &*entry - &(&factor * p);
            }
            debug_assert!(col[i].is_zero());
        }
        for col in syz.iter_mut() {
            col.remove(i);
        }
        gens.remove(i);
        syz.retain(|col| col.iter().any(|p| !p.is_zero()));
    }
}

/// Coordinates of the homogeneous vector `v` of degree `e` in the monomial
/// basis of `(⊕ S(-g_k))_e`.
fn flatten(v: &[Poly2], degrees: &[i64], e: i64) -> SparseVec {
    let mut out = SparseVec::new();
    let mut offset = 0usize;
    for (p, &g) in v.iter().zip(degrees) {
        let width = e - g + 1;
        if width <= 0 {
            continue;
        }
        for (m, c) in p.terms() {
            out.insert(offset + m.x as usize, c.clone());
        }
        offset += width as usize;
    }
    out
}

/// Keeps a minimal subset of the homogeneous generating set `syz`: a vector
/// is dropped when it lies in the span of monomial multiples of the vectors
/// already kept.
fn prune_syzygies(syz: Vec<Vec<Poly2>>, degrees: &[i64]) -> (Vec<Vec<Poly2>>, Vec<i64>) {
    let mut by_degree: BTreeMap<i64, Vec<Vec<Poly2>>> = BTreeMap::new();
    for v in syz {
        let e = vector_degree(&v, degrees).expect("nonzero syzygy");
        by_degree.entry(e).or_default().push(v);
    }
    let mut kept: Vec<(i64, Vec<Poly2>)> = Vec::new();
    for (e, candidates) in by_degree {
        let mut span = Echelon::default();
        for (w_deg, w) in &kept {
            let shift = (e - w_deg) as u32;
            for a in 0..=shift {
                let m = Monomial::new(a, shift - a);
                let multiple: Vec<Poly2> = w.iter().map(|p| p.mul_term(&Rational::one(), m)).collect();
                span.insert(flatten(&multiple, degrees, e));
            }
        }
        for v in candidates {
            if span.insert(flatten(&v, degrees, e)) {
                kept.push((e, v));
            }
        }
    }
    let degs = kept.iter().map(|(e, _)| *e).collect();
    (kept.into_iter().map(|(_, v)| v).collect(), degs)
}

/// Minimal graded free resolution of `S/I`.
pub fn minimal_resolution(ideal: &GradedIdeal) -> Result<ResolutionS> {
    if ideal.is_zero() {
        return Err(ResolverError::ZeroIdeal);
    }
    let input = ideal.generators();
    if input.iter().any(Poly2::is_unit) {
        // S/S = 0 has the empty resolution.
        return Ok(ResolutionS {
            betti: SBettiTable::new(),
            generators: vec![],
            generator_degrees: vec![],
            syzygies: vec![],
            syzygy_degrees: vec![],
        });
    }
    let tb = tracked_groebner(input);
    if !is_finite_colength(&tb.polys) {
        return Err(ResolverError::NotFiniteColength);
    }

    let mut gens = input.to_vec();
    let mut syz = syzygy_generators(&gens, &tb);
    eliminate_units(&mut gens, &mut syz);
    let generator_degrees: Vec<i64> =
        gens.iter().map(|g| i64::from(g.degree().expect("nonzero"))).collect();
    let (syzygies, syzygy_degrees) = prune_syzygies(syz, &generator_degrees);

    let mut betti = SBettiTable::new();
    betti.add_to(0, 0, &int(1))?;
    for &g in &generator_degrees {
        betti.add_to(1, g, &int(1))?;
    }
    for &e in &syzygy_degrees {
        betti.add_to(2, e, &int(1))?;
    }
    Ok(ResolutionS { betti, generators: gens, generator_degrees, syzygies, syzygy_degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal, Variables};

    fn ideal(src: &str) -> GradedIdeal {
        let gens = parse_ideal(src, &Variables::xy())
            .unwrap()
            .iter()
            .map(|p| p.to_poly2().unwrap())
            .collect();
        GradedIdeal::new(gens).unwrap()
    }

    fn resolve(src: &str) -> ResolutionS {
        let r = minimal_resolution(&ideal(src)).unwrap();
        r.verify().unwrap();
        r
    }

    #[test]
    fn koszul() {
        let r = resolve("x, y");
        assert_eq!(r.betti, SBettiTable::from_ints(&[(0, 0, 1), (1, 1, 2), (2, 2, 1)]).unwrap());
    }

    #[test]
    fn worked_ideal() {
        let r = resolve("x^3+x*y^2, y^6, x*y^5");
        let want =
            SBettiTable::from_ints(&[(0, 0, 1), (1, 3, 1), (1, 6, 2), (2, 7, 1), (2, 8, 1)]).unwrap();
        assert_eq!(r.betti, want);
    }

    #[test]
    fn redundant_generators_are_eliminated() {
        let r = resolve("x^2, x*y, y^2, x^2 + x*y, x^3, 3*y^2");
        let want = SBettiTable::from_ints(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)]).unwrap();
        assert_eq!(r.betti, want);
        assert_eq!(r.generators.len(), 3);
    }

    #[test]
    fn complete_intersection() {
        let r = resolve("x^2 + y^2, x^3 - 2*x*y^2");
        let want = SBettiTable::from_ints(&[(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1)]).unwrap();
        assert_eq!(r.betti, want);
    }

    #[test]
    fn errors() {
        assert!(matches!(minimal_resolution(&ideal("x^2")), Err(ResolverError::NotFiniteColength)));
        assert!(matches!(minimal_resolution(&ideal("0")), Err(ResolverError::ZeroIdeal)));
        let unit = minimal_resolution(&ideal("x, 3")).unwrap();
        assert!(unit.betti.is_empty());
    }
}
