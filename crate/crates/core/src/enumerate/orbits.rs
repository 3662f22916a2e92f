use std::collections::HashMap;

use serde::Serialize;

use crate::brace::{conjugate_gamma, GammaFunction, SkewBraceRecord};
use crate::error::{Error, Result};
use crate::groups::{GroupCtx, IsoType};

/// One orbit of `Aut(G)` acting on gamma functions by conjugation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub id: usize,
    pub length: usize,
    pub circle_type: IsoType,
    /// Positions in the record list, ascending.
    pub members: Vec<usize>,
}

/// Partition `records` into conjugation orbits, numbered by their first
/// member. Fails if some conjugate is missing from `records`.
pub fn aut_orbits(ctx: &GroupCtx, records: &[SkewBraceRecord]) -> Result<Vec<Orbit>> {
    let index: HashMap<&GammaFunction, usize> = records
        .iter()
        .enumerate()
        .map(|(i, r)| (&r.gamma, i))
        .collect();
    let gens = ctx.aut.generators();
    let mut orbit_of = vec![usize::MAX; records.len()];
    let mut orbits = Vec::new();
    for start in 0..records.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let gamma = &records[members[i]].gamma;
            for &beta in &gens {
                let c = conjugate_gamma(ctx, gamma, beta);
                let &j = index.get(&c).ok_or(Error::NotClosed)?;
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        let circle_type = records[start].circle_type;
        orbits.push(Orbit {
            id,
            length: members.len(),
            circle_type,
            members,
        });
    }
    Ok(orbits)
}
