//! Desk-scale verification: sweeps over spanning colorings and the claim
//! checkers used as forensics on any coloring without a small cover.

pub mod biclique;
pub mod claims;
pub mod sweep;

pub use biclique::{
    cover_biclique_k3, is_union_of_bicliques, BicliqueCover, BicliqueVerdict, CoverBranch,
};
pub use claims::{
    check_claim_distinguishing, check_claim_distr, check_claim_rsame, check_claim_samepart,
    check_claim_smalldist, check_claim_t1diff, forensics, run_claims, Claim, ClaimEntry,
    ClaimReport, Verdict, Witness,
};
pub use sweep::{sweep, Mode, Sampler, SweepConfig, SweepSummary, Symmetry};
