#![allow(dead_code)]

use std::sync::Arc;

use f5b::arith::{Field, MonomialOrder, Polynomial, PowerProduct, Ring, Term};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PRIME: u64 = 32003;

#[derive(Clone, Debug)]
pub struct Instance {
    pub id: usize,
    pub ring: Arc<Ring>,
    pub generators: Vec<Polynomial>,
}

/// Power products in `nvars` variables of total degree at most `d`.
pub fn power_products(nvars: usize, d: u32) -> Vec<PowerProduct> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|v| {
                let used: u32 = v.iter().sum();
                (0..=d - used).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(PowerProduct::new).collect()
}

pub fn random_polynomial(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, max_deg: u32, max_density: f64) -> Polynomial {
    let field = ring.field();
    let pps: Vec<PowerProduct> =
        power_products(ring.nvars(), max_deg).into_iter().filter(|t| t.degree() >= 1).collect();
    let density = rng.gen_range(0.1..=max_density);
    let count = ((pps.len() as f64 * density).round() as usize).clamp(2, pps.len());
    let mut chosen: Vec<&PowerProduct> = pps.choose_multiple(rng, count).collect();
    if rng.gen_bool(0.5) {
        chosen.push(&pps[0]);
    }
    let mut terms: Vec<Term> = chosen
        .into_iter()
        .map(|t| {
            let c = match field {
                Field::Rational => {
                    let n = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { -1 } else { 1 };
                    field.from_i64(n)
                }
                Field::Prime(p) => field.from_i64(rng.gen_range(1..*p as i64)),
            };
            Term::new(c, t.clone())
        })
        .collect();
    if rng.gen_bool(0.5) {
        let c = field.from_i64(rng.gen_range(1..=9));
        terms.push(Term::new(c, PowerProduct::one(ring.nvars())));
    }
    Polynomial::from_terms(ring, terms).expect("valid terms")
}

/// `count` random systems with 2-4 generators of degree at most 3,
/// alternating between GF(32003) and Q and cycling through grevlex, grlex and
/// lex. Lex systems have 2 variables, the others 2-4. Cubic generators appear
/// in 2 variables and in 3 variables with 2 generators; the rest are quadratic.
/// Rational systems in 4 variables have at most 3 generators.
pub fn corpus(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = ["x", "y", "z", "w"];
    let orders = [MonomialOrder::Grevlex, MonomialOrder::Grlex, MonomialOrder::Lex];
    (0..count)
        .map(|id| {
            let order = orders[(id / 2) % 3];
            let nvars = if order == MonomialOrder::Lex { 2 } else { rng.gen_range(2..=4) };
            let rational = id % 2 == 1;
            let ngens = if rational && nvars == 4 { rng.gen_range(2..=3) } else { rng.gen_range(2..=4) };
            let field = if rational { Field::Rational } else { Field::prime(PRIME).unwrap() };
            let ring = Ring::new(names[..nvars].iter().copied(), field, order).unwrap();
            let max_deg = if nvars == 2 || (nvars == 3 && ngens == 2) { 3 } else { 2 };
            let generators = (0..ngens).map(|_| random_polynomial(&mut rng, &ring, max_deg, 0.6)).collect();
            Instance { id, ring, generators }
        })
        .collect()
}
