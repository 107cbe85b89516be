use holomorphy::automorphisms::{apply, enumerate_aut, psi};
use holomorphy::oracle::{
    aut_group_table, build_dihedral, build_general_holomorph, build_holomorph_table,
    enumerate_automorphisms_bruteforce, find_isomorphism,
};
use holomorphy::verify::{self, Status, Suite, VerifyConfig};
use holomorphy::{CayleyGroup, HolContext, Presentation};

#[test]
fn closed_form_automorphisms_match_bruteforce() {
    for n in [6, 10, 14, 18] {
        let ctx = HolContext::new(n, None).unwrap();
        let table = build_holomorph_table(&ctx);
        let brute =
            enumerate_automorphisms_bruteforce(&table, &Presentation::holomorph(&ctx)).unwrap();
        let mut brute: Vec<Vec<usize>> = brute.into_iter().map(|h| h.into_mapping()).collect();
        let mut closed: Vec<Vec<usize>> = enumerate_aut(&ctx)
            .into_iter()
            .map(|a| {
                ctx.elements()
                    .map(|g| ctx.index_of(apply(&ctx, a, g)))
                    .collect()
            })
            .collect();
        brute.sort();
        closed.sort();
        assert_eq!(brute, closed, "n = {n}");
    }
}

#[test]
fn psi_respects_the_bruteforce_aut_table() {
    let ctx = HolContext::new(10, None).unwrap();
    let table = build_holomorph_table(&ctx);
    let auts = enumerate_aut(&ctx);
    let homs: Vec<_> = auts
        .iter()
        .map(|&a| {
            let mapping = ctx
                .elements()
                .map(|g| ctx.index_of(apply(&ctx, a, g)))
                .collect();
            holomorphy::GroupHom::new(&table, &table, mapping).unwrap()
        })
        .collect();
    let aut_table = aut_group_table(&table, &homs).unwrap();
    for i in 0..auts.len() {
        for j in 0..auts.len() {
            let lhs = psi(&ctx, auts[aut_table.mul(i, j)]);
            assert_eq!(lhs, ctx.mul(psi(&ctx, auts[i]), psi(&ctx, auts[j])));
        }
    }
}

#[test]
fn general_holomorph_agrees_with_cyclic_model() {
    // For n = 2p^e the unit group is cyclic, so both constructions give the same group.
    for n in [6, 10, 18] {
        let ctx = HolContext::new(n, None).unwrap();
        let table = build_holomorph_table(&ctx);
        let general = build_general_holomorph(n).unwrap();
        let iso = find_isomorphism(&table, &general, &Presentation::holomorph(&ctx)).unwrap();
        assert!(iso.is_some_and(|h| h.is_bijective()), "n = {n}");
    }
}

#[test]
fn dihedral_automorphisms_form_the_holomorph() {
    for n in [5, 9] {
        let d = build_dihedral(n).unwrap();
        let auts =
            enumerate_automorphisms_bruteforce(&d, &Presentation::dihedral(n).unwrap()).unwrap();
        let aut_table = aut_group_table(&d, &auts).unwrap();
        let hol = build_general_holomorph(n).unwrap();
        let iso = find_isomorphism(
            &hol,
            &aut_table,
            &Presentation::general_holomorph(n).unwrap(),
        )
        .unwrap();
        assert!(iso.is_some(), "n = {n}");
    }
}

#[test]
fn exported_tables_round_trip_through_json() {
    let ctx = HolContext::new(14, None).unwrap();
    let table = build_holomorph_table(&ctx);
    let back = CayleyGroup::from_json(&table.to_json().unwrap()).unwrap();
    assert_eq!(back, table);
}

#[test]
fn reports_are_deterministic() {
    let mut cfg = VerifyConfig::new(18);
    cfg.seed = 7;
    let first = verify::run(&cfg).unwrap().to_json();
    let second = verify::run(&cfg).unwrap().to_json();
    assert_eq!(first, second);
    assert!(!first.contains("millis"));
}

#[test]
fn sampled_paths_pass_for_larger_moduli() {
    let mut cfg = VerifyConfig::new(98);
    cfg.max_order = 5000;
    cfg.suites = vec![
        Suite::Lemma32,
        Suite::GroupAxioms,
        Suite::PsiHom,
        Suite::PsiBij,
    ];
    let report = verify::run(&cfg).unwrap();
    for claim in report.claims() {
        assert_eq!(claim.status, Status::Pass, "{claim:?}");
    }
}
