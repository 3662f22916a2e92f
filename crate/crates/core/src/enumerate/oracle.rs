use super::{EnumerationResult, Method};
use crate::brace::gamma_of_regular;
use crate::error::Result;
use crate::groups::GroupCtx;
use crate::holomorph::{closure_search_regular, key_members};

/// Skew braces read off the regular subgroups of `Hol(G)`.
///
/// `expected`, when known from another method, lets the subgroup search
/// retry with three generators if two fall short.
pub fn closure_oracle(
    ctx: &GroupCtx,
    max_hol_order: usize,
    expected: Option<usize>,
) -> Result<EnumerationResult> {
    let keys = closure_search_regular(ctx, max_hol_order, expected)?;
    let gammas = keys
        .iter()
        .map(|k| gamma_of_regular(ctx, &key_members(ctx, k)))
        .collect();
    EnumerationResult::from_gammas(ctx, Method::ClosureOracle, gammas)
}
