//! Number expander checked against independent oracles.

use hrnorm_core::numexpand::roman_value;
use hrnorm_core::{expand_cardinal, expand_ordinal, expand_roman, parse_spelled_number, MorphTag, MAX_NUMBER};
use rand::{rngs::StdRng, Rng, SeedableRng};

mod common;

use common::oracles::{oracle_cardinal, oracle_roman, oracle_to_roman};

#[test]
fn oracle_spot_checks() {
    assert_eq!(oracle_cardinal(21), "dvadeset i jedan");
    assert_eq!(oracle_cardinal(1_000), "tisuću");
    assert_eq!(oracle_cardinal(2_022), "dvije tisuće dvadeset i dva");
    assert_eq!(oracle_cardinal(21_000), "dvadeset jedna tisuća");
    assert_eq!(oracle_cardinal(1_000_000), "milijun");
}

#[test]
fn cardinal_matches_oracle_below_one_million() {
    let tag = MorphTag::default();
    for n in 0..1_000_000u64 {
        let got = expand_cardinal(n, tag).unwrap().join(" ");
        assert_eq!(got, oracle_cardinal(n), "n = {n}");
    }
}

#[test]
fn cardinal_matches_oracle_on_random_large_values() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..100_000 {
        let n = rng.gen_range(0..MAX_NUMBER);
        assert_eq!(expand_cardinal(n, MorphTag::default()).unwrap().join(" "), oracle_cardinal(n), "n = {n}");
    }
}

#[test]
fn spelled_round_trip_exhaustive_below_one_million() {
    for n in 0..1_000_000u64 {
        let words = expand_cardinal(n, MorphTag::default()).unwrap();
        assert_eq!(parse_spelled_number(&words).unwrap(), n, "{words:?}");
    }
}

#[test]
fn spelled_round_trip_on_random_values() {
    let mut rng = StdRng::seed_from_u64(42);
    for _ in 0..1_000_000 {
        let n = rng.gen_range(0..MAX_NUMBER);
        let words = expand_cardinal(n, MorphTag::default()).unwrap();
        assert_eq!(parse_spelled_number(&words).unwrap(), n, "{words:?}");
    }
}

#[test]
fn magnitude_bound_is_enforced() {
    assert!(expand_cardinal(MAX_NUMBER - 1, MorphTag::default()).is_ok());
    assert!(expand_cardinal(MAX_NUMBER, MorphTag::default()).is_err());
}

#[test]
fn roman_parser_matches_oracle_on_all_short_strings() {
    const ALPHABET: [char; 7] = ['I', 'V', 'X', 'L', 'C', 'D', 'M'];
    let mut layer = vec![String::new()];
    let mut checked = 0;
    for _ in 0..6 {
        let mut next = Vec::with_capacity(layer.len() * ALPHABET.len());
        for prefix in &layer {
            for c in ALPHABET {
                let s = format!("{prefix}{c}");
                assert_eq!(roman_value(&s), oracle_roman(&s), "{s}");
                checked += 1;
                next.push(s);
            }
        }
        layer = next;
    }
    assert_eq!(checked, (1..=6).map(|k| 7usize.pow(k)).sum::<usize>());
}

#[test]
fn roman_expansion_matches_parser_and_ordinal() {
    let tag = MorphTag::default();
    for n in 1..=3999u32 {
        let numeral = oracle_to_roman(n);
        assert_eq!(oracle_roman(&numeral), Some(n));
        let expected = expand_ordinal(u64::from(n), tag).unwrap();
        assert_eq!(expand_roman(&numeral, tag).unwrap(), expected, "{numeral}");
        assert_eq!(expand_roman(&format!("{numeral}."), tag).unwrap(), expected, "{numeral}.");
    }
    assert!(expand_roman("IIII", tag).is_err());
}

#[test]
fn ordinal_shares_cardinal_prefix() {
    for n in 1..20_000u64 {
        let card = expand_cardinal(n, MorphTag::default()).unwrap();
        let ord = expand_ordinal(n, MorphTag::default()).unwrap();
        assert_eq!(card.len(), ord.len(), "n = {n}");
        assert_eq!(card[..card.len() - 1], ord[..ord.len() - 1], "n = {n}");
    }
}
