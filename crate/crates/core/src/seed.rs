//! Seed derivation for reproducible parallel random-number streams.
//!
//! Every source of randomness in the library is a pure function of a master
//! seed plus a (domain, index) pair, derived here. Work units (permutations,
//! replicates, design points) pull their own stream by index, so serial and
//! parallel execution consume identical randomness.

/// One SplitMix64 output step.
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Child seed for a (domain, index) pair under a master seed.
///
/// The chained mixing keeps distinct pairs on distinct streams; it is not
/// sensitive to argument symmetry the way a plain XOR would be.
pub fn derive_seed(master: u64, domain: u64, index: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(master) ^ domain) ^ index)
}

/// Fixed domain tags so unrelated consumers never share a stream.
pub mod domains {
    pub const DATASET: u64 = 1;
    pub const TEST: u64 = 2;
    pub const PROFILE_PILOT: u64 = 3;
    pub const PROFILE_GRID: u64 = 4;
    pub const DESIGN: u64 = 5;
    pub const NULL_ARM_DATASET: u64 = 6;
    pub const COVERAGE: u64 = 7;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_is_deterministic_and_separates_indices() {
        let a = derive_seed(42, domains::TEST, 0);
        let b = derive_seed(42, domains::TEST, 0);
        let c = derive_seed(42, domains::TEST, 1);
        let d = derive_seed(42, domains::DATASET, 0);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }

    #[test]
    fn domain_and_index_do_not_commute() {
        assert_ne!(derive_seed(7, 2, 5), derive_seed(7, 5, 2));
    }
}
