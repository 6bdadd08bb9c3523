use omstrata::certificate::{certificate, DEFAULT_SAMPLES};
use omstrata::construction::{build, cr_ledger, default_seed};
use omstrata::geometry::{rat, PlanePoint, Rational};
use omstrata::oriented_matroid::m_of;
use omstrata::report::{parse_arrangement, parse_json, parse_report, parse_seed, render_report};

const A0_OM: &str = include_str!("../../../fixtures/seed_a0_om.json");
const A0_ARRANGEMENT: &str = include_str!("../../../fixtures/seed_a0_arrangement.json");
const DEFAULT_SEED: &str = include_str!("../../../fixtures/default_seed.json");
const FLAGSHIP: &str = include_str!("../../../fixtures/flagship_report.json");

const A0_FINGERPRINT: &str = "bad328f11ad0b793d123bce5117da66c508893d715ead97d4e890258f473fc1d";
const FLAGSHIP_SHA256: &str = "2392c7cd246c9500a151e6a1af217683226e846d14cda2779b569cf40a074a29";

fn big(s: &str) -> Rational {
    Rational::new(s.parse().unwrap(), 1.into())
}

#[test]
fn seed_om_matches_fixture() {
    let arr = parse_arrangement(&parse_json(A0_ARRANGEMENT).unwrap()).unwrap();
    let om = m_of(&arr).unwrap();
    assert_eq!(om.canonical_json(), A0_OM.trim_end());
    assert_eq!(om.fingerprint(), A0_FINGERPRINT);
    assert_eq!(arr, build(&default_seed(), 0).unwrap().arrangement());
}

#[test]
fn shipped_seed_document() {
    assert_eq!(
        parse_seed(&parse_json(DEFAULT_SEED).unwrap()).unwrap(),
        default_seed()
    );
}

#[test]
fn tenth_level_values() {
    let family = build(&default_seed(), 10).unwrap();
    let c10 = PlanePoint::new(
        big("311352990564061696") / big("187311682738256261"),
        rat(0, 1),
    );
    assert_eq!(family.c(10).unwrap(), &c10);
    let ledger = cr_ledger(&family).unwrap();
    assert_eq!(ledger[0], (1, rat(74, 51)));
    assert_eq!(
        ledger[9],
        (10, big("406258552932737935") / big("328420305291722511"))
    );
}

#[test]
fn flagship_report_is_reproduced_bit_exactly() {
    let report = certificate(&default_seed(), 10, &DEFAULT_SAMPLES).unwrap();
    let doc = render_report(&report);
    assert_eq!(doc.to_json(), FLAGSHIP);
    assert_eq!(doc.fingerprint(), FLAGSHIP_SHA256);
    assert_eq!(parse_report(FLAGSHIP).unwrap(), doc);
}
