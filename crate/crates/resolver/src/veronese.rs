//! Passage between the Veronese ring `B = ⊕ S_{nd}` and `S = k[x,y]`.

use rncbetti_core::{int, BBettiTable, SBettiTable};

use crate::error::{ResolverError, Result};
use crate::groebner::GradedIdeal;
use crate::parse::{SparsePoly, Variables};
use crate::poly::{Monomial, Poly2};
use crate::resolution::{minimal_resolution, ResolutionS};

/// Substitutes `a_i ↦ x^{d-i} y^i` into polynomials in the `d+1` generators
/// of `B`. Generators that vanish under the substitution are dropped.
pub fn veronese_substitute(gens: &[SparsePoly], d: u32) -> Result<GradedIdeal> {
    let nvars = d as usize + 1;
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        if g.nvars() != nvars {
            return Err(ResolverError::WrongVariableCount { expected: nvars, found: g.nvars() });
        }
        if !g.is_zero() && g.homogeneous_degree().is_none() {
            let shown = g.display(&Variables::veronese(d)).to_string();
            return Err(ResolverError::NotHomogeneous(shown));
        }
        let mut p = Poly2::zero();
        for (exps, c) in g.terms() {
            let (mut x, mut y) = (0u32, 0u32);
            for (i, &e) in exps.iter().enumerate() {
                x += e * (d - i as u32);
                y += e * i as u32;
            }
            p.add_term(Monomial::new(x, y), c);
        }
        out.push(p);
    }
    GradedIdeal::new(out)
}

/// B-Betti table of the module whose S-resolution has Betti table `s`.
///
/// Columns 0 and 1 carry over with degrees divided by `d`. A column-2 entry
/// in S-degree `jd - ℓ` with `0 ≤ ℓ < d` contributes `(ℓ+1)` to `β_{2,j}`
/// and `dℓ` to `β_{3,j+1}`.
pub fn veronese_transfer(s: &SBettiTable, d: u32) -> Result<BBettiTable> {
    let mut b = BBettiTable::new(d)?;
    let dd = i64::from(d);
    for (i, k, v) in s.entries() {
        match i {
            0 | 1 => {
                if k.rem_euclid(dd) != 0 {
                    return Err(ResolverError::UnsupportedShape { col: i, degree: k, d });
                }
                b.add_to(i, k / dd, v)?;
            }
            _ => {
                let j = num_integer::Integer::div_ceil(&k, &dd);
                let ell = j * dd - k;
                b.add_to(2, j, &(v * int(ell + 1)))?;
                b.add_to(3, j + 1, &(v * int(dd * ell)))?;
            }
        }
    }
    Ok(b)
}

/// Resolves `S/J` for `J` the substituted ideal and transfers the result.
pub fn resolve_over_b(gens: &[SparsePoly], d: u32) -> Result<(ResolutionS, BBettiTable)> {
    let ideal = veronese_substitute(gens, d)?;
    let res = minimal_resolution(&ideal)?;
    let table = veronese_transfer(&res.betti, d)?;
    Ok((res, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use rncbetti_core::{pure_betti_b, pure_betti_s, validate_b_table, PureTypeB, PureTypeS};

    fn substitute(src: &str, d: u32) -> Result<GradedIdeal> {
        veronese_substitute(&parse_ideal(src, &Variables::veronese(d)).unwrap(), d)
    }

    fn worked_s() -> SBettiTable {
        SBettiTable::from_ints(&[(0, 0, 1), (1, 3, 1), (1, 6, 2), (2, 7, 1), (2, 8, 1)]).unwrap()
    }

    #[test]
    fn worked_substitution() {
        let got = substitute("a+c, d^2, c*d", 3).unwrap();
        let want = parse_ideal("x^3+x*y^2, y^6, x*y^5", &Variables::xy()).unwrap();
        let want: Vec<Poly2> = want.iter().map(|p| p.to_poly2().unwrap()).collect();
        assert_eq!(got.generators(), want.as_slice());
        assert_eq!(got.degrees(), vec![3, 6, 6]);
    }

    #[test]
    fn identity_for_d1() {
        let got = substitute("a0^2 - 3*a0*a1, a1^4", 1).unwrap();
        let want = parse_ideal("x^2 - 3*x*y, y^4", &Variables::xy()).unwrap();
        let want: Vec<Poly2> = want.iter().map(|p| p.to_poly2().unwrap()).collect();
        assert_eq!(got.generators(), want.as_slice());
    }

    #[test]
    fn veronese_quadric_vanishes() {
        assert!(substitute("a0*a2 - a1^2", 2).unwrap().is_zero());
    }

    #[test]
    fn substitution_errors() {
        assert!(matches!(substitute("a + b^2", 3), Err(ResolverError::NotHomogeneous(_))));
        let xy = parse_ideal("x", &Variables::xy()).unwrap();
        assert!(matches!(
            veronese_substitute(&xy, 3),
            Err(ResolverError::WrongVariableCount { expected: 4, found: 2 })
        ));
    }

    #[test]
    fn worked_transfer() {
        let b = veronese_transfer(&worked_s(), 3).unwrap();
        let want = BBettiTable::from_ints(3, &[(0, 0, 1), (1, 1, 1), (1, 2, 2), (2, 3, 5), (3, 4, 9)]).unwrap();
        assert_eq!(b, want);
        assert_eq!(b.get_extended(4, 5), int(18));
        assert_eq!(b.get_extended(5, 6), int(36));
    }

    #[test]
    fn koszul_d1_relabels() {
        let s = SBettiTable::from_ints(&[(0, 0, 1), (1, 1, 2), (2, 2, 1)]).unwrap();
        let b = veronese_transfer(&s, 1).unwrap();
        assert_eq!(b, BBettiTable::from_ints(1, &[(0, 0, 1), (1, 1, 2), (2, 2, 1)]).unwrap());
    }

    #[test]
    fn pure_068_transfers_to_pure_b() {
        let s = pure_betti_s(&PureTypeS::new(0, 6, 8).unwrap());
        let b = veronese_transfer(&s, 3).unwrap();
        let want = BBettiTable::from_ints(3, &[(0, 0, 1), (1, 2, 4), (2, 3, 6), (3, 4, 9)]).unwrap();
        assert_eq!(b, want);
        let pure = pure_betti_b(&PureTypeB::new(3, 0, 2, 3, 1).unwrap());
        let ratio = b.get(0, 0) / pure.get(0, 0);
        assert_eq!(pure.scaled(&ratio), b);
    }

    #[test]
    fn degree_five_types_match_pure_b() {
        for ell in 0..5u32 {
            let s = pure_betti_s(&PureTypeS::new(0, 5, 10 - i64::from(ell)).unwrap());
            let b = veronese_transfer(&s, 5).unwrap();
            let pure = pure_betti_b(&PureTypeB::new(5, 0, 1, 2, ell).unwrap());
            let ratio = b.get(0, 0) / pure.get(0, 0);
            assert_eq!(pure.scaled(&ratio), b, "ell = {ell}");
        }
    }

    #[test]
    fn unsupported_shape() {
        let s = SBettiTable::from_ints(&[(0, 0, 1), (1, 2, 1)]).unwrap();
        assert!(matches!(
            veronese_transfer(&s, 3),
            Err(ResolverError::UnsupportedShape { col: 1, degree: 2, d: 3 })
        ));
    }

    #[test]
    fn worked_end_to_end() {
        let gens = parse_ideal("a+c, d^2, c*d", &Variables::veronese(3)).unwrap();
        let (res, b) = resolve_over_b(&gens, 3).unwrap();
        res.verify().unwrap();
        assert_eq!(res.betti, worked_s());
        assert_eq!(b, veronese_transfer(&worked_s(), 3).unwrap());
        assert!(validate_b_table(&b, true).passes());
    }
}
