use semipair::fixtures::{run_example, EXAMPLES};
use semipair::io::{pair_from_json, pair_to_json};
use semipair::pairs::{nss_check, Verdict, SL2_METHOD};

#[test]
fn every_example_runs_and_is_deterministic() {
    for name in EXAMPLES {
        let a = run_example(name, 4, 7).unwrap();
        let b = run_example(name, 4, 7).unwrap();
        assert_eq!(a, b, "{name}");
        assert!(a.is_object(), "{name}");
    }
    assert!(run_example("no-such-example", 4, 7).is_err());
}

#[test]
fn pair_json_round_trip_preserves_verdict() {
    let p = semipair::fixtures::quadric_pair();
    let back = pair_from_json(&pair_to_json(&p)).unwrap();
    assert_eq!(back, p);
    assert_eq!(
        nss_check(&back, 4, 1).unwrap(),
        Verdict::ProvenSemistable {
            method: SL2_METHOD.into()
        }
    );
    let swapped = nss_check(&back.swapped(), 4, 1).unwrap();
    match swapped {
        Verdict::Unstable(w) => assert!(w.verify(&back.swapped()).unwrap()),
        other => panic!("expected a witness, got {other:?}"),
    }
}
