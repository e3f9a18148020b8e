mod common;

use common::{rng, v};
use hartogs::coloredfan::{ColorTable, ColoredCone, ColoredFan};
use hartogs::fixtures;
use hartogs::hartogs::{
    check_hartogs, gap_regions, hartogs_cone, is_compactifiable_10, verify_certificate,
    weight_cone, Certificate, NotApplicable, Options,
};
use hartogs::{Cone, Error};
use rand::Rng;

fn opts() -> Options {
    Options::default()
}

#[test]
fn gap_regions_of_fixtures() {
    let cx = gap_regions(&fixtures::c2xp1(), &opts()).unwrap();
    let gaps: Vec<Cone> = cx.gap_cells().map(|c| c.closure.clone()).collect();
    assert_eq!(
        gaps,
        vec![
            Cone::from_generators(2, &[v(&[-1, 0]), v(&[0, -1])]).unwrap(),
            Cone::from_generators(2, &[v(&[-1, 0]), v(&[0, 1])]).unwrap(),
        ]
    );
    assert_eq!(cx.gap_components().len(), 1);
    assert!(is_compactifiable_10(&fixtures::c2xp1(), &opts()).unwrap());
    assert!(is_compactifiable_10(&fixtures::p2xc(), &opts()).unwrap());
    assert!(matches!(
        is_compactifiable_10(&fixtures::p2xp1(), &opts()),
        Err(Error::IsCompact)
    ));
}

#[test]
fn rank_one_trivial_fan_is_disconnected() {
    let fan = ColoredFan::new(
        1,
        Cone::whole_space(1),
        ColorTable::new(1, vec![]).unwrap(),
        vec![ColoredCone::zero(1)],
    )
    .unwrap();
    let cx = gap_regions(&fan, &opts()).unwrap();
    assert_eq!(cx.cells.len(), 2);
    assert!(cx.cells.iter().all(|c| !c.in_support));
    assert_eq!(cx.gap_components().len(), 2);
    assert!(!is_compactifiable_10(&fan, &opts()).unwrap());
    let r = check_hartogs(&fan, &opts()).unwrap();
    assert_eq!(r.not_applicable, Some(NotApplicable::GapDisconnected));
    assert_eq!(r.hartogs, None);
}

#[test]
fn hartogs_and_weight_cones() {
    let c = hartogs_cone(&fixtures::c2xp1(), &opts()).unwrap();
    assert!(c.is_whole_space());
    assert!(weight_cone(&fixtures::c2xp1(), &opts()).unwrap().is_zero());
    let c = hartogs_cone(&fixtures::p2xc(), &opts()).unwrap();
    assert_eq!(c, Cone::from_inequalities(2, &[v(&[0, 1])]).unwrap());
    assert_eq!(
        weight_cone(&fixtures::p2xc(), &opts())
            .unwrap()
            .generators(),
        &[v(&[0, 1])]
    );
}

#[test]
fn toric_plane_has_whole_hartogs_cone() {
    // C^2 as a toric variety: the positive quadrant with its faces
    let table = ColorTable::new(2, vec![]).unwrap();
    let q = ColoredCone::new(
        &table,
        2,
        Vec::<String>::new(),
        vec![v(&[1, 0]), v(&[0, 1])],
    )
    .unwrap();
    let fan = hartogs::coloredfan::complete_faces(
        &ColoredFan::new(2, Cone::whole_space(2), table, vec![q]).unwrap(),
    )
    .unwrap();
    let r = check_hartogs(&fan, &opts()).unwrap();
    assert_eq!(r.hartogs, Some(true));
    assert!(r.hartogs_cone.as_ref().unwrap().is_whole_space());
    assert!(verify_certificate(&r, &fan));
}

#[test]
fn verdicts_on_fixtures() {
    let r = check_hartogs(&fixtures::c2xp1(), &opts()).unwrap();
    assert_eq!(
        (r.complete, r.compactifiable_10, r.hartogs),
        (Some(false), Some(true), Some(true))
    );
    assert!(matches!(
        r.certificate,
        Some(Certificate::WholeSpaceWitness(_))
    ));

    let r = check_hartogs(&fixtures::p2xc(), &opts()).unwrap();
    assert_eq!(r.hartogs, Some(false));
    assert_eq!(
        r.certificate,
        Some(Certificate::NonzeroFunctional(v(&[0, 1])))
    );

    let r = check_hartogs(&fixtures::p2xp1(), &opts()).unwrap();
    assert!(r.fan_valid);
    assert_eq!(r.complete, Some(true));
    assert_eq!(r.not_applicable, Some(NotApplicable::Compact));
    assert_eq!(r.hartogs, None);
}

#[test]
fn adding_a_color_only_grows_the_hartogs_cone() {
    for (fan, _) in common::valid_fans2(21, 40) {
        let Ok(c) = hartogs_cone(&fan, &opts()) else {
            continue;
        };
        let bigger = fan.with_color("extra".into(), v(&[-2, 3])).unwrap();
        let c2 = hartogs_cone(&bigger, &opts()).unwrap();
        assert!(c2.contains_cone(&c).unwrap());
        assert!(weight_cone(&fan, &opts())
            .unwrap()
            .contains_cone(&weight_cone(&bigger, &opts()).unwrap())
            .unwrap());
    }
}

#[test]
fn gap_cells_tile_the_complement() {
    let mut r = rng(31);
    for (fan, raw) in common::valid_fans2(32, 30) {
        let cx = gap_regions(&fan, &opts()).unwrap();
        for _ in 0..40 {
            let p = v(&[r.gen_range(-9..=9), r.gen_range(-9..=9)]);
            let in_v = fan.valuation_cone().contains(&p).unwrap();
            let in_support = fan.support_contains(&p).unwrap();
            let cells = cx.cells_containing(&p).unwrap();
            if in_v && !in_support {
                assert!(
                    cells.iter().any(|&i| !cx.cells[i].in_support),
                    "{p} in {raw:?}"
                );
            }
            if !in_v {
                assert!(cells.is_empty());
            }
            // interiors of distinct cells are disjoint
            let interior: Vec<_> = cells
                .iter()
                .filter(|&&i| cx.cells[i].closure.in_relative_interior(&p).unwrap())
                .collect();
            assert!(interior.len() <= 1);
        }
    }
}

#[test]
fn rank_limit() {
    let fan = ColoredFan::new(
        5,
        Cone::whole_space(5),
        ColorTable::new(5, vec![]).unwrap(),
        vec![ColoredCone::zero(5)],
    )
    .unwrap();
    assert!(matches!(
        gap_regions(&fan, &opts()),
        Err(Error::RankTooLarge { rank: 5, limit: 4 })
    ));
    assert!(gap_regions(&fan, &Options { max_rank: 5 }).is_ok());
}

#[test]
fn random_reports_verify() {
    for (fan, _) in common::valid_fans2(41, 50) {
        let r = check_hartogs(&fan, &opts()).unwrap();
        if r.hartogs.is_some() {
            assert!(verify_certificate(&r, &fan));
        }
    }
    let mut r = rng(42);
    for _ in 0..20 {
        let fan = common::random_fan3(&mut r);
        let rep = check_hartogs(&fan, &opts()).unwrap();
        if rep.hartogs.is_some() {
            assert!(verify_certificate(&rep, &fan));
        }
    }
}
