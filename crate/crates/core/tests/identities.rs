use lehmer_core::bijections::{verify_map, MapId};
use lehmer_core::identity::{cor_witness_bijection, Suite};
use lehmer_core::partition::{count_pairs, GapRule, PairSpec, ResidueSpec};
use lehmer_core::series::{derivative_difference, series_routes};
use lehmer_core::TheoremId;

fn plain(r: u32) -> ResidueSpec {
    ResidueSpec::plain(r).unwrap()
}

fn assert_holds(suite: &mut Suite, thm: TheoremId, n_max: u32, params: &ResidueSpec) {
    let rep = suite.check(thm, n_max, params).unwrap();
    let bad: Vec<_> = rep.rows.iter().filter(|r| !r.ok).collect();
    assert!(bad.is_empty(), "{thm} {params}: {bad:?}");
}

#[test]
fn unrestricted_identities_hold() {
    let mut suite = Suite::new();
    for thm in [
        TheoremId::Lehmer,
        TheoremId::Glaisher,
        TheoremId::BeckPairs,
        TheoremId::T1_2,
        TheoremId::Cor5_2,
        TheoremId::Cor5_3,
    ] {
        assert_holds(&mut suite, thm, 40, &plain(1));
    }
}

#[test]
fn identities_modulo_2r_hold() {
    let mut suite = Suite::new();
    for r in 1..=4 {
        for thm in [TheoremId::T1_6, TheoremId::T1_7, TheoremId::Ex1, TheoremId::Ex2, TheoremId::Ex3] {
            assert_holds(&mut suite, thm, 36, &plain(r));
        }
    }
}

#[test]
fn identities_over_residue_sets_hold() {
    let mut suite = Suite::new();
    for r in 1..=3 {
        for spec in ResidueSpec::all_nonempty_l(r) {
            assert_holds(&mut suite, TheoremId::T1_9, 30, &spec);
            assert_holds(&mut suite, TheoremId::T1_10, 30, &spec);
        }
    }
}

#[test]
fn every_series_has_agreeing_routes() {
    for thm in TheoremId::ALL {
        let params = match thm {
            TheoremId::T1_9 | TheoremId::T1_10 | TheoremId::T1_11 => ResidueSpec::new(3, [2, 6], []).unwrap(),
            TheoremId::T1_12 => ResidueSpec::new(3, [2, 4], [3]).unwrap(),
            TheoremId::PositivityRemark => ResidueSpec::singleton(3, 4).unwrap(),
            _ => plain(3),
        };
        let routes = series_routes(thm, &params, 120).unwrap();
        assert_eq!(routes.primary, routes.closed, "{thm}");
    }
}

#[test]
fn residue_excess_is_linear_in_the_classes() {
    let mut suite = Suite::new();
    for r in 1..=3 {
        let all: Vec<u32> = (1..=2 * r).collect();
        for mask in 1u32..(1 << all.len()) {
            let set: Vec<u32> =
                all.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x).collect();
            let spec = ResidueSpec::from_set(r, &set).unwrap();
            for n in 0..=24 {
                let whole = suite.excess(TheoremId::T1_12, n, &spec).unwrap();
                let parts: i64 = set
                    .iter()
                    .map(|&ell| {
                        suite.excess(TheoremId::T1_12, n, &ResidueSpec::singleton(r, ell).unwrap()).unwrap()
                    })
                    .sum();
                assert_eq!(whole, parts, "r = {r}, set = {set:?}, n = {n}");
            }
        }
    }
}

#[test]
fn single_residue_identity_holds() {
    let mut suite = Suite::new();
    for r in [1, 2, 3, 5] {
        for ell in 1..=2 * r {
            assert_holds(&mut suite, TheoremId::T1_12, 40, &ResidueSpec::singleton(r, ell).unwrap());
        }
    }
}

#[test]
fn positivity_holds_where_claimed() {
    let mut suite = Suite::new();
    for r in 1..=4 {
        for ell in 1..=2 * r {
            assert_holds(
                &mut suite,
                TheoremId::PositivityRemark,
                48,
                &ResidueSpec::singleton(r, ell).unwrap(),
            );
        }
    }
}

#[test]
fn amended_gap_rule_restores_the_restricted_identities() {
    for n in 0..=30 {
        let c = derivative_difference(TheoremId::T1_4, &plain(1), 30)
            .unwrap()
            .coefficient_i64(n as usize)
            .unwrap();
        let amended = count_pairs(n, &PairSpec::T1_4 { rule: GapRule::Amended }).unwrap() as i64;
        assert_eq!(amended, c, "T1_4 n = {n}");
    }
    for r in 1..=3 {
        let s = derivative_difference(TheoremId::T1_8, &plain(r), 36).unwrap();
        for n in 0..=36 {
            let amended = count_pairs(n, &PairSpec::T1_8 { r, rule: GapRule::Amended }).unwrap() as i64;
            assert_eq!(amended, s.coefficient_i64(n as usize).unwrap(), "T1_8 r = {r} n = {n}");
        }
    }
    for spec in ResidueSpec::all_nonempty_l(2) {
        let s = derivative_difference(TheoremId::T1_11, &spec, 30).unwrap();
        for n in 0..=30 {
            let pairs = PairSpec::T1_11 { spec: spec.clone(), rule: GapRule::Amended };
            assert_eq!(
                count_pairs(n, &pairs).unwrap() as i64,
                s.coefficient_i64(n as usize).unwrap(),
                "{spec} n = {n}"
            );
        }
    }
}

#[test]
fn injection_complements_count_the_excess() {
    for n in 0..=30 {
        for (map, params) in [
            (MapId::Sec2, plain(1)),
            (MapId::Thm62, plain(2)),
            (MapId::Lr { extended: false }, ResidueSpec::singleton(3, 2).unwrap()),
            (MapId::Lr { extended: true }, ResidueSpec::full(2).unwrap()),
        ] {
            let rep = verify_map(map, n, &params).unwrap();
            assert!(rep.passed(), "{map} n = {n}: {:?}", rep.violations);
            assert_eq!(rep.complement.len() as i64 - rep.unmapped.len() as i64, rep.series_excess);
        }
    }
}

#[test]
fn corollary_witness_sets_correspond() {
    for n in 0..=36 {
        let rep = cor_witness_bijection(n).unwrap();
        assert!(rep.bijective, "n = {n}: {:?}", rep.violations);
    }
}

#[test]
fn sign_results_sum_to_example_three() {
    for r in 1..=6 {
        let p = plain(r);
        let s62 = derivative_difference(TheoremId::T6_2, &p, 150).unwrap();
        let s63 = derivative_difference(TheoremId::T6_3, &p, 150).unwrap();
        let ex3 = derivative_difference(TheoremId::Ex3, &p, 150).unwrap();
        assert!(s62.is_nonnegative() && s63.is_nonnegative(), "r = {r}");
        assert_eq!(&s63 - &s62, ex3, "r = {r}");
    }
}

#[test]
fn empty_size_has_no_excess() {
    let mut suite = Suite::new();
    for thm in [TheoremId::T1_2, TheoremId::T1_4, TheoremId::Cor5_2, TheoremId::Cor5_3, TheoremId::Ex1] {
        assert_eq!(suite.excess(thm, 0, &plain(1)).unwrap(), 0, "{thm}");
    }
    assert!(suite.witnesses(TheoremId::T1_4, 0, &plain(1)).unwrap().is_empty());
}
