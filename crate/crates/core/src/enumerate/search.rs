use super::{EnumerationResult, Method};
use crate::brace::{check_gfe, GammaFunction};
use crate::error::{Error, Result};
use crate::groups::{GroupCtx, Idx};

const UNSET: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_order: usize,
    pub max_aut: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_order: 200,
            max_aut: 1200,
        }
    }
}

struct State<'a> {
    ctx: &'a GroupCtx,
    gamma: Vec<u32>,
    /// Assigned elements in assignment order; doubles as the propagation
    /// queue and the undo log.
    trail: Vec<Idx>,
    out: Vec<GammaFunction>,
}

impl State<'_> {
    /// Apply `gamma(g^gamma(h) h) = gamma(g) gamma(h)` to one pair.
    #[inline]
    fn rule(&mut self, g: Idx, h: Idx) -> bool {
        let gh = self.gamma[h as usize];
        let target = self.ctx.group.mul(self.ctx.apply(gh, g), h) as usize;
        let value = self.ctx.aut.compose(self.gamma[g as usize], gh);
        match self.gamma[target] {
            UNSET => {
                self.gamma[target] = value;
                self.trail.push(target as Idx);
                true
            }
            v => v == value,
        }
    }

    /// Close the assignment under the rule, starting from trail position
    /// `head`. Every pair of assigned elements is visited once.
    fn propagate(&mut self, mut head: usize) -> bool {
        while head < self.trail.len() {
            let x = self.trail[head];
            for i in 0..=head {
                let y = self.trail[i];
                if !self.rule(x, y) || !self.rule(y, x) {
                    return false;
                }
            }
            head += 1;
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for &x in &self.trail[mark..] {
            self.gamma[x as usize] = UNSET;
        }
        self.trail.truncate(mark);
    }

    fn dfs(&mut self) {
        let Some(x) = self.gamma.iter().position(|&v| v == UNSET) else {
            let gamma = GammaFunction(self.gamma.clone());
            if check_gfe(self.ctx, &gamma).is_ok() {
                self.out.push(gamma);
            }
            return;
        };
        for alpha in 0..self.ctx.aut.len() as u32 {
            let mark = self.trail.len();
            self.gamma[x] = alpha;
            self.trail.push(x as Idx);
            if self.propagate(mark) {
                self.dfs();
            }
            self.undo(mark);
        }
    }
}

/// Every gamma function on `G`, found by depth-first search over partial
/// assignments closed under the functional equation.
pub fn search_gammas(ctx: &GroupCtx, limits: SearchLimits) -> Result<Vec<GammaFunction>> {
    let (n, k) = (ctx.n(), ctx.aut.len());
    if n > limits.max_order || k > limits.max_aut {
        return Err(Error::SearchTooLarge {
            order: n,
            aut_order: k,
            max_order: limits.max_order,
            max_aut: limits.max_aut,
        });
    }
    let mut st = State {
        ctx,
        gamma: vec![UNSET; n],
        trail: Vec::with_capacity(n),
        out: Vec::new(),
    };
    st.gamma[0] = ctx.aut.identity();
    st.trail.push(0);
    if st.propagate(0) {
        st.dfs();
    }
    Ok(st.out)
}

pub fn gfe_search(ctx: &GroupCtx, limits: SearchLimits) -> Result<EnumerationResult> {
    let gammas = search_gammas(ctx, limits)?;
    EnumerationResult::from_gammas(ctx, Method::GfeSearch, gammas)
}
