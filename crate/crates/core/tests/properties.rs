use lehmer_core::bijections::MapId;
use lehmer_core::partition::{enumerate_pairs, PairSpec, Partition, ResidueSpec};
use lehmer_core::series::{lambert_sum, pochhammer_finite, pochhammer_inf, TruncatedSeries};
use proptest::prelude::*;

const ORDER: usize = 24;

fn series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-20i64..20, ORDER + 1).prop_map(|c| TruncatedSeries::from_i64(&c, ORDER))
}

/// Series with constant term ±1, hence invertible over the integers.
fn unit_series() -> impl Strategy<Value = TruncatedSeries> {
    (series(), prop::bool::ANY).prop_map(|(s, neg)| {
        let mut c = s.to_i64_vec().unwrap();
        c[0] = if neg { -1 } else { 1 };
        TruncatedSeries::from_i64(&c, ORDER)
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..15, 0..10).prop_map(|v| Partition::new(v).unwrap())
}

proptest! {
    #[test]
    fn ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &TruncatedSeries::one(ORDER), a);
    }

    #[test]
    fn inverse_is_two_sided(u in unit_series()) {
        let inv = u.inverse().unwrap();
        prop_assert_eq!(&u * &inv, TruncatedSeries::one(ORDER));
    }

    #[test]
    fn binomial_division_undoes_multiplication(a in series(), c in prop::sample::select(vec![-1i64, 1]), m in 1usize..10) {
        let mut b = a.clone();
        b.mul_binomial(c, m);
        b.div_binomial(c, m);
        prop_assert_eq!(b, a);
    }

    #[test]
    fn pochhammer_is_a_product_of_binomials(
        sign in prop::sample::select(vec![-1i64, 1]),
        offset in 1usize..6,
        step in 1usize..6,
    ) {
        let mut direct = TruncatedSeries::one(ORDER);
        let mut e = offset;
        while e <= ORDER {
            let factor = TruncatedSeries::from_fn(ORDER, |k| match k {
                0 => 1,
                k if k == e => -sign,
                _ => 0,
            });
            direct = &direct * &factor;
            e += step;
        }
        prop_assert_eq!(pochhammer_inf(sign, offset, step, ORDER), direct.clone());
        prop_assert_eq!(pochhammer_finite(sign, offset, step, ORDER, ORDER), direct);
    }

    #[test]
    fn lambert_is_a_sum_of_geometric_series(
        offset in 1usize..6,
        modulus in 1usize..6,
        sign in prop::sample::select(vec![-1i64, 1]),
        scale in 1usize..3,
    ) {
        let mut direct = TruncatedSeries::zero(ORDER);
        let mut m = offset;
        while m <= ORDER {
            // q^m / (1 − sign·q^{scale·m})
            let mut term = TruncatedSeries::monomial(1, m, ORDER);
            term.div_binomial(-sign, scale * m);
            direct = &direct + &term;
            m += modulus;
        }
        prop_assert_eq!(lambert_sum(offset, modulus, sign, scale, ORDER), direct);
    }

    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.size(), p.size());
        prop_assert_eq!(c.len() as u32, p.largest());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn union_adds_sizes(p in partition(), q in partition()) {
        let u = p.union(&q);
        prop_assert_eq!(u.size(), p.size() + q.size());
        prop_assert_eq!(u.len(), p.len() + q.len());
    }

    #[test]
    fn injections_round_trip(n in 1u32..30, r in 1u32..4, pick in any::<prop::sample::Index>()) {
        let params = ResidueSpec::plain(r).unwrap();
        for (map, spec) in [
            (MapId::Sec2, PairSpec::Sec2Domain),
            (MapId::Thm62, PairSpec::Thm62Domain { r }),
        ] {
            let domain = enumerate_pairs(n, &spec).unwrap();
            if domain.is_empty() {
                continue;
            }
            let x = &domain[pick.index(domain.len())];
            if let Some(y) = map.forward(x, &params).unwrap() {
                prop_assert_eq!(y.size(), n);
                prop_assert!(map.in_stated_image(&y, &params));
                prop_assert_eq!(&map.backward(&y, &params).unwrap(), x);
            }
        }
    }

    #[test]
    fn residue_injection_round_trips(n in 1u32..30, r in 1u32..4, ell_pick in any::<prop::sample::Index>(), pick in any::<prop::sample::Index>()) {
        let ell = 1 + ell_pick.index(2 * r as usize) as u32;
        let params = ResidueSpec::singleton(r, ell).unwrap();
        let domain = enumerate_pairs(n, &PairSpec::LrDomain { r, ell }).unwrap();
        if !domain.is_empty() {
            let map = MapId::Lr { extended: false };
            let x = &domain[pick.index(domain.len())];
            match map.forward(x, &params).unwrap() {
                Some(y) => {
                    prop_assert_eq!(y.size(), n);
                    prop_assert_eq!(&map.backward(&y, &params).unwrap(), x);
                }
                // only (∅, (2^{n/2})) may lack an image
                None => prop_assert!(x.lambda.is_empty() && x.a == 2),
            }
        }
    }
}
