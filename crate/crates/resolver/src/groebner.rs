//! Buchberger's algorithm for homogeneous ideals of `k[x,y]`, optionally
//! remembering how every basis element is built from the input generators.

use std::collections::BTreeSet;

use num_traits::One;
use rncbetti_core::Rational;

use crate::error::{ResolverError, Result};
use crate::poly::{divide, Monomial, Poly2};

/// Ideal of `S` given by nonzero homogeneous generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedIdeal {
    generators: Vec<Poly2>,
}

impl GradedIdeal {
    /// Zero generators are dropped; any non-homogeneous generator is an error.
    pub fn new(generators: Vec<Poly2>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| !g.is_homogeneous()) {
            return Err(ResolverError::NotHomogeneous(bad.to_string()));
        }
        Ok(Self { generators: generators.into_iter().filter(|g| !g.is_zero()).collect() })
    }

    pub fn generators(&self) -> &[Poly2] {
        &self.generators
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree().unwrap_or(0)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }
}

/// A Gröbner basis together with, for every element, its coordinates in
/// terms of the original generators: `polys[k] = Σ_i reps[k][i]·gens[i]`.
#[derive(Debug, Clone)]
pub(crate) struct TrackedBasis {
    pub polys: Vec<Poly2>,
    pub reps: Vec<Vec<Poly2>>,
}

impl TrackedBasis {
    fn push(&mut self, poly: Poly2, rep: Vec<Poly2>) {
        self.polys.push(poly);
        self.reps.push(rep);
    }
}

/// Reduces `p` (with coordinates `rep`) completely modulo `basis`.
fn reduce_tracked(p: &Poly2, rep: &mut [Poly2], basis: &TrackedBasis) -> Poly2 {
    let mut rest = p.clone();
    let mut remainder = Poly2::zero();
    while let Some((m, c)) = rest.leading().map(|(m, c)| (m, c.clone())) {
        let hit = basis.polys.iter().enumerate().find_map(|(k, g)| {
            let (lm, lc) = g.leading()?;
            lm.divides(m).then(|| (k, lm.quotient_of(m), &c / lc))
        });
        match hit {
            Some((k, shift, factor)) => {
                rest.add_scaled(&-factor.clone(), shift, &basis.polys[k]);
                for (r, rk) in rep.iter_mut().zip(&basis.reps[k]) {
                    r.add_scaled(&-factor.clone(), shift, rk);
                }
            }
            None => {
                remainder.add_term(m, &c);
                rest.add_term(m, &-c);
            }
        }
    }
    remainder
}

/// Multipliers `(u, v)` with `u·g - v·h` the S-polynomial of `g` and `h`.
pub(crate) fn s_multipliers(g: &Poly2, h: &Poly2) -> ((Rational, Monomial), (Rational, Monomial)) {
    let (lg, cg) = g.leading().expect("nonzero");
    let (lh, ch) = h.leading().expect("nonzero");
    let l = lg.lcm(lh);
    (
        (Rational::one() / cg, lg.quotient_of(l)),
        (Rational::one() / ch, lh.quotient_of(l)),
    )
}

/// Gröbner basis of the ideal generated by `gens`, with coordinates.
pub(crate) fn tracked_groebner(gens: &[Poly2]) -> TrackedBasis {
    let m = gens.len();
    let unit = |i: usize| {
        (0..m)
            .map(|k| if k == i { Poly2::constant(Rational::one()) } else { Poly2::zero() })
            .collect::<Vec<_>>()
    };
    let mut basis = TrackedBasis { polys: Vec::new(), reps: Vec::new() };
    // Pairs keyed by the degree of their lcm so low degrees finish first.
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let add = |basis: &mut TrackedBasis, pairs: &mut BTreeSet<(u32, usize, usize)>, p: Poly2, rep: Vec<Poly2>| {
        let lc = p.leading().expect("nonzero").1.clone();
        let scale = Rational::one() / lc;
        let rep = rep.iter().map(|r| r.scale(&scale)).collect();
        let p = p.scale(&scale);
        let new = basis.polys.len();
        let lm = p.leading_monomial().expect("nonzero");
        for (k, g) in basis.polys.iter().enumerate() {
            let other = g.leading_monomial().expect("nonzero");
            if !lm.is_coprime(other) {
                pairs.insert((lm.lcm(other).degree(), k, new));
            }
        }
        basis.push(p, rep);
    };

    for (i, g) in gens.iter().enumerate() {
        let mut rep = unit(i);
        let r = reduce_tracked(g, &mut rep, &basis);
        if !r.is_zero() {
            add(&mut basis, &mut pairs, r, rep);
        }
    }

    while let Some(pair) = pairs.pop_first() {
        let (_, k, l) = pair;
        let ((ck, mk), (cl, ml)) = s_multipliers(&basis.polys[k], &basis.polys[l]);
        let mut s = basis.polys[k].mul_term(&ck, mk);
        s.add_scaled(&-cl.clone(), ml, &basis.polys[l]);
        let mut rep: Vec<Poly2> = basis.reps[k].iter().map(|r| r.mul_term(&ck, mk)).collect();
        for (r, rl) in rep.iter_mut().zip(&basis.reps[l]) {
            r.add_scaled(&-cl.clone(), ml, rl);
        }
        let r = reduce_tracked(&s, &mut rep, &basis);
        if !r.is_zero() {
            add(&mut basis, &mut pairs, r, rep);
        }
    }
    basis
}

/// Reduced, monic Gröbner basis under graded lex order with `x > y`,
/// sorted by leading monomial.
pub fn groebner_basis(ideal: &GradedIdeal) -> Vec<Poly2> {
    reduce_basis(tracked_groebner(ideal.generators()).polys)
}

fn reduce_basis(mut polys: Vec<Poly2>) -> Vec<Poly2> {
    polys.sort_by_key(|p| p.leading_monomial());
    let mut minimal: Vec<Poly2> = Vec::new();
    for p in polys {
        let lm = p.leading_monomial().expect("nonzero");
        if !minimal.iter().any(|g| g.leading_monomial().expect("nonzero").divides(lm)) {
            minimal.push(p);
        }
    }
    (0..minimal.len())
        .map(|k| {
            let others: Vec<Poly2> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, g)| g.clone())
                .collect();
            divide(&minimal[k], &others).1.monic()
        })
        .collect()
}

/// Whether `S/I` is finite dimensional, read off a Gröbner basis of `I`:
/// some leading monomials must be pure powers of `x` and of `y`.
pub fn is_finite_colength(gb: &[Poly2]) -> bool {
    let lms: Vec<Monomial> = gb.iter().filter_map(Poly2::leading_monomial).collect();
    lms.iter().any(|m| m.y == 0) && lms.iter().any(|m| m.x == 0)
}
