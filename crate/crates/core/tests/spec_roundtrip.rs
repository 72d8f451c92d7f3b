use finring::construct::{Cell, EndoName};
use finring::spec::{parse_spec, RingSpec, SpecError};
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = RingSpec> {
    (2u32..40).prop_map(RingSpec::Zn)
}

fn cell() -> impl Strategy<Value = Cell> {
    prop_oneof![Just(Cell::Full), Just(Cell::Zero), (2u32..9).prop_map(Cell::Multiple)]
}

fn spec() -> impl Strategy<Value = RingSpec> {
    leaf().prop_recursive(4, 24, 3, |inner| {
        let boxed = inner.clone().prop_map(Box::new);
        prop_oneof![
            (1usize..4, boxed.clone()).prop_map(|(n, base)| RingSpec::Matrix { n, base }),
            (
                1usize..4,
                boxed.clone(),
                prop_oneof![Just(None), Just(Some(EndoName::Id)), Just(Some(EndoName::Swap))]
            )
                .prop_map(|(n, base, endo)| RingSpec::Triangular { n, base, endo }),
            boxed.clone().prop_map(RingSpec::TrivialExtension),
            boxed.clone().prop_map(RingSpec::DoubleTrivialExtension),
            (0u64..9, boxed.clone()).prop_map(|(s, base)| RingSpec::Ks { s, base }),
            (1usize..4, 0u64..9, boxed.clone()).prop_map(|(n, s, base)| RingSpec::FormalMatrix { n, s, base }),
            prop::collection::vec(inner.clone(), 2..4).prop_map(RingSpec::Product),
            (boxed.clone(), prop::collection::vec(2u32..6, 1..3))
                .prop_map(|(base, group)| RingSpec::GroupRing { base, group }),
            (boxed.clone(), 1usize..5).prop_map(|(base, n)| RingSpec::QuotPoly { base, n }),
            (
                boxed.clone(),
                prop::collection::vec(prop::sample::select(vec!["2", "[[0,1],[1,1]]", "(1,0)"]), 0..3)
            )
                .prop_map(|(base, gens)| RingSpec::Subring {
                    base,
                    gens: gens.into_iter().map(String::from).collect(),
                }),
            (boxed, prop::collection::vec(prop::collection::vec(cell(), 2), 2))
                .prop_map(|(base, rows)| RingSpec::Constrained { base, rows }),
        ]
    })
}

proptest! {
    #[test]
    fn display_parses_back(s in spec()) {
        let text = s.to_string();
        prop_assert_eq!(parse_spec(&text).unwrap(), s);
    }

    #[test]
    fn whitespace_is_ignored(s in spec()) {
        let spaced: String = s.to_string().chars().flat_map(|c| [c, ' ']).collect();
        prop_assert_eq!(parse_spec(&spaced).unwrap(), s);
    }

    #[test]
    fn truncation_is_a_syntax_error(s in spec(), cut in 1usize..8) {
        let text = s.to_string();
        prop_assume!(cut < text.len() && text.ends_with(')'));
        let broken = &text[..text.len() - cut];
        let syntax = matches!(parse_spec(broken), Err(SpecError::Syntax { .. }));
        prop_assert!(syntax, "{} parsed", broken);
    }
}

#[test]
fn syntax_errors_carry_a_column() {
    let err = parse_spec("T2(Z4").unwrap_err();
    assert!(err.to_string().contains("column"), "{err}");
    assert!(parse_spec("Q7").is_err());
    assert!(parse_spec("Z4)").is_err());
}
