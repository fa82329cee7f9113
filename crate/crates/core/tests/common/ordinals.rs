use logic_workbench::ordinal::CnfOrdinal;
use num_bigint::BigUint;
use proptest::prelude::*;

/// Ordinals in normal form with exponents nested up to `depth`.
pub fn ordinal(depth: u32) -> BoxedStrategy<CnfOrdinal> {
    let nat = (0u64..5).prop_map(CnfOrdinal::from).boxed();
    if depth == 0 {
        return nat;
    }
    let term = (ordinal(depth - 1), 1u64..4);
    prop_oneof![
        nat,
        proptest::collection::vec(term, 1..4).prop_map(|mut ts| {
            ts.sort_by(|a, b| b.0.cmp(&a.0));
            ts.dedup_by(|a, b| a.0 == b.0);
            // already in normal form, so the sum is just these terms
            CnfOrdinal::from_terms(ts.into_iter().map(|(e, c)| (e, BigUint::from(c))))
        }),
    ]
    .boxed()
}
