use num_rational::Ratio;
use proptest::prelude::*;
use qsl::engine::{exact_distribution, exact_joint, state_distribution, MeasurementSpec};
use qsl::kernel::{Basis, Prep, RandomSource};
use qsl::protocols::{
    bb84_exact_qber, bb84_round, bell_experiment, ghz_conditional_entropy, superdense_roundtrip, teleport_experiment,
    BellKind, GhzConstruction,
};

#[test]
fn bell_marginals_are_maximally_mixed() {
    for kind in BellKind::ALL {
        let d = state_distribution(&bell_experiment(kind)).unwrap();
        for shift in [0, 2] {
            let m = d.map(2, |l| (l >> shift) & 3);
            for point in 0..4 {
                assert_eq!(m.probability(point), Ratio::new(1, 4), "{kind:?}");
            }
        }
    }
}

#[test]
fn remote_steering() {
    // Bob holds wire 1 of Ψ+.
    for (spec, bit) in [(MeasurementSpec::Z(1), 1u8), (MeasurementSpec::X(1), 0u8)] {
        let mut e = bell_experiment(BellKind::PsiPlus);
        e.measure(spec);
        // key: Bob's outcome, Alice's steered bit, Alice's and Bob's other bits
        let joint = exact_joint(&e, 4, |o, s| {
            let (a, b) = (s.register.systems[0].label(), s.register.systems[1].label());
            let steered = (a >> bit) & 1;
            let other = (a >> (1 - bit)) & 1 ^ (b >> (1 - bit)) & 1;
            o.bits | (steered as u64) << 1 | (other as u64) << 2
        })
        .unwrap();
        assert_eq!(joint.probability_where(|k| k & 1 != (k >> 1) & 1), Ratio::from_integer(0));
        // the complementary correlation is gone
        assert_eq!(joint.probability_where(|k| k >> 2 == 1), Ratio::new(1, 2));
    }
}

#[test]
fn teleport_readout_reveals_nothing() {
    let preps = [
        Prep::z(false),
        Prep::z(true),
        Prep::x(false),
        Prep::x(true),
        Prep::y(false),
        Prep::y(true),
        Prep::mixed(),
        Prep::point(true, false),
    ];
    for prep in preps {
        let d = exact_distribution(&teleport_experiment(prep)).unwrap();
        for o in 0..4 {
            assert_eq!(d.probability(o), Ratio::new(1, 4), "{prep:?}");
        }
    }
}

#[test]
fn superdense_decodes_every_message() {
    for s in 0..64 {
        let m = (s & 2 != 0, s & 1 != 0);
        assert_eq!(superdense_roundtrip(m.0, m.1, &mut RandomSource::new(5, s)).unwrap(), m);
    }
}

#[test]
fn bb84_exact_error_rates() {
    assert_eq!(bb84_exact_qber(false).unwrap(), Ratio::from_integer(0));
    assert_eq!(bb84_exact_qber(true).unwrap(), Ratio::new(1, 4));
}

#[test]
fn ghz_entropies() {
    assert_eq!(ghz_conditional_entropy(GhzConstruction::Toffoli).unwrap(), 0.0);
    assert!((ghz_conditional_entropy(GhzConstruction::Cnot).unwrap() - 1.0).abs() < 1e-12);
}

proptest! {
    #[test]
    fn bb84_sifting_and_clean_channel(seed: u64, stream: u64, eve: bool) {
        let r = bb84_round(eve, &mut RandomSource::new(seed, stream)).unwrap();
        prop_assert_eq!(r.sifted, r.alice_basis == r.bob_basis);
        prop_assert_eq!(r.eve_basis.is_some(), eve);
        prop_assert!(matches!(r.alice_basis, Basis::Z | Basis::X));
        if !eve {
            prop_assert!(!r.error());
        }
    }
}
