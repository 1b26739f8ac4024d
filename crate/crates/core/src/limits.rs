/// Size guards shared by every engine. Computations that would exceed
/// one of these fail with [`crate::Error::SizeLimitExceeded`] instead of running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest degree `mn` accepted by the power-sum plethysm route.
    pub degree_cap: u32,
    /// Largest degree `mn` accepted by the monomial-substitution oracle.
    pub bruteforce_degree_cap: u32,
    /// Largest number of terms visited per homomorphism evaluation.
    pub enum_budget: u128,
    /// Largest number of monomial products enumerated by the oracle.
    pub term_budget: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            degree_cap: 14,
            bruteforce_degree_cap: 8,
            enum_budget: 100_000_000,
            term_budget: 50_000_000,
        }
    }
}
