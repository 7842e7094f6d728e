//! Randomized Koszul-coherence laws: braiding involutivity and naturality,
//! the interchange law, the Hom-differential derivation rule, `D² = 0`, and
//! the tensor differential squaring to zero — each case built from a seed by
//! the deterministic generators in `dg_hopf::sampling` and checked with
//! exact rational arithmetic.

use dg_hopf::sampling::koszul_coherence_case;
use proptest::prelude::*;

proptest! {
    // The acceptance bar is ≥ 200 random cases; run a few more.
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn koszul_coherence_laws_hold_on_random_spaces(seed in any::<u64>()) {
        if let Err(message) = koszul_coherence_case(seed) {
            prop_assert!(false, "seed {}: {}", seed, message);
        }
    }
}
