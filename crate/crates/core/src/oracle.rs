//! Classical Buchberger algorithm and Groebner basis checks.

use std::collections::BTreeMap;

use crate::arith::{normal_form, Polynomial};

/// `lc(g) * m_f * f - lc(f) * m_g * g` normalized so the lcm term cancels;
/// both polynomials must be nonzero.
pub fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (hf, hg) = (f.lm().expect("nonzero"), g.lm().expect("nonzero"));
    let field = f.ring().field();
    let lcm = hf.pp.lcm(&hg.pp);
    let uf = f.mul_term(&field.inv(&hf.coeff), &lcm.div(&hf.pp).expect("lcm"));
    uf.sub_term_multiple(&field.inv(&hg.coeff), &lcm.div(&hg.pp).expect("lcm"), g)
}

/// A Groebner basis of the ideal generated by `generators` under the ring's
/// order. Pairs with coprime leading power products are skipped.
pub fn buchberger(generators: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = generators.iter().filter(|f| !f.is_zero()).map(Polynomial::monic).collect();
    let Some(first) = basis.first() else { return Vec::new() };
    let order = first.ring().order();
    // smallest lcm first, oldest first among equals
    let mut pairs: BTreeMap<(Vec<i64>, usize, usize), ()> = BTreeMap::new();
    let push = |pairs: &mut BTreeMap<_, _>, b: &[Polynomial], i: usize, j: usize| {
        let (li, lj) = (b[i].lpp().expect("nonzero"), b[j].lpp().expect("nonzero"));
        if !li.is_coprime(lj) {
            pairs.insert((order.sort_key(&li.lcm(lj)), j, i), ());
        }
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push(&mut pairs, &basis, i, j);
        }
    }
    while let Some(((_, j, i), ())) = pairs.pop_first() {
        let r = normal_form(&spoly(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            let n = basis.len();
            basis.push(r.monic());
            for i in 0..n {
                push(&mut pairs, &basis, i, n);
            }
        }
    }
    basis
}

/// The unique monic inter-reduced basis, sorted by descending leading power
/// product. `gb` must already be a Groebner basis.
pub fn reduced_gb(gb: &[Polynomial]) -> Vec<Polynomial> {
    let mut polys: Vec<Polynomial> = gb.iter().filter(|f| !f.is_zero()).map(Polynomial::monic).collect();
    let Some(first) = polys.first() else { return Vec::new() };
    let order = first.ring().order();
    polys.sort_by(|a, b| order.cmp(a.lpp().expect("nonzero"), b.lpp().expect("nonzero")));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for f in polys {
        let l = f.lpp().expect("nonzero");
        if !minimal.iter().any(|g| g.lpp().expect("nonzero").divides(l)) {
            minimal.push(f);
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<&Polynomial> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g).collect();
            normal_form(&minimal[i], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(b.lpp().expect("nonzero"), a.lpp().expect("nonzero")));
    reduced
}

/// `Ok` when every S-polynomial of `g` reduces to zero; otherwise the indices
/// of the first offending pair. Pairs with coprime leading power products
/// always reduce to zero and are not formed.
pub fn is_groebner(g: &[Polynomial]) -> Result<(), (usize, usize)> {
    let monic: Vec<Polynomial> = g.iter().map(Polynomial::monic).collect();
    for j in 0..g.len() {
        for i in 0..j {
            let (Ok(li), Ok(lj)) = (monic[i].lpp(), monic[j].lpp()) else { continue };
            if li.is_coprime(lj) {
                continue;
            }
            if !normal_form(&spoly(&monic[i], &monic[j]), &monic).is_zero() {
                return Err((i, j));
            }
        }
    }
    Ok(())
}

/// `Ok` when `g` is a Groebner basis of the ideal whose Groebner basis is
/// `reference`: every element of `g` lies in the ideal and the leading power
/// products of `g` generate the leading ideal. Otherwise the index of an
/// element outside the ideal, or `None` for a missing leading power product.
pub fn is_groebner_of(g: &[Polynomial], reference: &[Polynomial]) -> Result<(), Option<usize>> {
    let leads: Vec<_> = g.iter().filter_map(|f| f.lpp().ok()).collect();
    for r in reference.iter().filter_map(|f| f.lpp().ok()) {
        if !leads.iter().any(|l| l.divides(r)) {
            return Err(None);
        }
    }
    match g.iter().position(|f| !ideal_member(f, reference)) {
        Some(i) => Err(Some(i)),
        None => Ok(()),
    }
}

/// Ideal membership against a Groebner basis.
pub fn ideal_member(f: &Polynomial, gb: &[Polynomial]) -> bool {
    normal_form(f, gb).is_zero()
}
