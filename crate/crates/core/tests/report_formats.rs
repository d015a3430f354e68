use ppsp_census::census::{census, Fault};
use ppsp_census::report::{
    census_range, markdown_table, prime_power, read_csv, record_for, verify, write_csv, OutputRecord,
};
use ppsp_census::{Error, PrimeInput};

#[test]
fn prime_power_inputs() {
    let five = PrimeInput::new(5).unwrap();
    assert_eq!(prime_power(125).unwrap(), (five, 3));
    assert!(matches!(prime_power(36), Err(Error::NotPrimePower(36))));

    let q5 = record_for(5, false).unwrap();
    assert_eq!(q5.h_pp, Some(2));
    assert_eq!(q5.note, None);

    let q125 = record_for(125, false).unwrap();
    assert_eq!(q125.note.as_deref(), Some("PPSP(√125) ≅ PPAV(√5)"));
    assert_eq!(q125.to_census().unwrap(), q5.to_census().unwrap());

    let q25 = record_for(25, false).unwrap();
    assert_eq!(q25.elliptic.h, 1);
    assert_eq!(q25.h_pp, None);
    assert_eq!(q25.to_census().unwrap(), None);
}

#[test]
fn json_key_order_is_fixed() {
    let line = record_for(13, false).unwrap().to_json_line();
    let keys = [
        "\"q\"",
        "\"p\"",
        "\"exponent\"",
        "\"note\"",
        "\"d_F\"",
        "\"unit\"",
        "\"h\"",
        "\"h_plus\"",
        "\"varpi\"",
        "\"h_A\"",
        "\"zeta_minus1\"",
        "\"h_pp\"",
        "\"t_pp\"",
        "\"refined_pp\"",
        "\"lambda1_pp\"",
        "\"lambda16_pp\"",
        "\"pol_mod\"",
        "\"masses\"",
        "\"elliptic\"",
    ];
    let positions: Vec<usize> = keys.iter().map(|k| line.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{line}");
    assert!(line.contains("\"zeta_minus1\":\"1/6\""));
    assert!(!line.contains("diagnostic"));
}

#[test]
fn json_round_trip() {
    for rec in census_range(2, 400, Some(2), false).unwrap() {
        let back = OutputRecord::from_json(&rec.to_json_pretty()).unwrap();
        assert_eq!(back, rec);
        let report = census(PrimeInput::new(rec.p).unwrap()).unwrap();
        assert_eq!(back.to_census().unwrap(), Some(report));
    }
}

#[test]
fn csv_round_trip() {
    let mut recs = census_range(2, 400, None, false).unwrap();
    recs.push(record_for(49, false).unwrap());
    recs.push(record_for(343, false).unwrap());
    let text = write_csv(&recs, false).unwrap();
    assert!(text.starts_with('#'));
    assert_eq!(read_csv(&text).unwrap(), recs);

    let diag = vec![record_for(13, true).unwrap(), record_for(7, true).unwrap()];
    let text = write_csv(&diag, true).unwrap();
    assert_eq!(read_csv(&text).unwrap(), diag);
}

#[test]
fn ranges() {
    assert_eq!(census_range(2, 7, None, false).unwrap().len(), 4);
    let r = census_range(13, 13, None, false).unwrap();
    assert_eq!((r.len(), r[0].h_pp), (1, Some(3)));
    assert!(census_range(14, 16, None, false).unwrap().is_empty());
    assert!(matches!(census_range(9, 3, None, false), Err(Error::Precondition(_))));
}

#[test]
fn output_independent_of_thread_count() {
    let render = |jobs| {
        let recs = census_range(2, 500, Some(jobs), false).unwrap();
        let json: String = recs.iter().map(OutputRecord::to_json_line).collect();
        (json, write_csv(&recs, false).unwrap(), markdown_table(&recs))
    };
    let one = render(1);
    assert_eq!(one, render(4));
    assert_eq!(one, render(1));
}

#[test]
fn verification() {
    let s = verify(2, Some(1), None).unwrap();
    assert_eq!(s.primes_checked, 1);
    assert!(s.passed());

    let s = verify(100, None, None).unwrap();
    assert!(s.passed(), "{s}");
    assert_eq!(s.primes_checked, 25);
    assert_eq!(s.count("zeta-siegel-bernoulli"), Some(25));
    assert_eq!(s.count("unit-minimality"), Some(25));

    let s = verify(100, None, Some(Fault::RefinedHMinusP)).unwrap();
    let fail = s.failure.unwrap();
    assert_eq!((fail.p, fail.identity.as_str()), (Some(7), "refined-sum"));
}

#[test]
fn markdown_has_strata_for_single_record() {
    let md = markdown_table(&[record_for(11, false).unwrap()]);
    assert!(md.contains("| 11 | 11 | 3 | 2 |"));
    assert!(md.contains("nonprincipal"));
    let md = markdown_table(&[record_for(13, true).unwrap()]);
    assert!(md.contains("Printed type-number formula: 5/1 (t_pp = 3)"));
}
