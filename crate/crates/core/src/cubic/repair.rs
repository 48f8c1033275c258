//! State transitions for cubic hosts: proper → state 0, state 1 → proper,
//! state 2 → proper, and one generation step that keeps state 0.
//!
//! All values below are `ã` entries, i.e. four times the real `a_i`.

use crate::error::{invariant, Error, Result};
use crate::multigraph::{CubicOpRecord, EdgeId};

use super::state::{is_proper, is_state0, is_state1, is_state2};
use super::workspace::CubicWorkspace;

const PHASE1_CAP: u64 = 8;
const REPAIR_CAP: usize = 16;

impl CubicWorkspace {
    fn need(&self, e: Option<EdgeId>, what: &str) -> Result<EdgeId> {
        match e {
            Some(e) => Ok(e),
            None => invariant(format!("expected {what} at a = {:?}", self.a())),
        }
    }

    /// Turns a proper (or state-0) subgraph into a state-0 one.
    pub fn proper_to_state0(&mut self) -> Result<()> {
        if !is_proper(&self.a()) {
            return Err(Error::NotProper);
        }

        // Drive ã_0 + ã_3 down until both ends are at most 2.
        let mut rounds = 0;
        loop {
            let a = self.a();
            if a[0] > a[3] {
                self.flip();
                continue;
            }
            if a[3] <= 2 {
                break;
            }
            rounds += 1;
            if rounds > PHASE1_CAP {
                return invariant("first phase did not settle within 8 rounds");
            }
            if a[2] <= 0 {
                let e = self.need(self.p(3, 3), "an H(3,3)-edge")?;
                self.delete(e)?;
            } else if let Some(e) = self.p(2, 3) {
                self.delete(e)?;
            } else {
                let e1 = self.need(self.p(2, 2), "an H(2,2)-edge")?;
                let e2 = self.need(self.p(3, 3), "an H(3,3)-edge")?;
                self.delete(e1)?;
                self.delete(e2)?;
            }
            if !is_proper(&self.a()) {
                return invariant("first phase left the proper range");
            }
        }
        self.counters.max_phase1_rounds = self.counters.max_phase1_rounds.max(rounds);

        // Raise ã_2 while keeping ã_2 ≤ ã_1.
        let a = self.a();
        if a[2] > a[1] {
            self.flip();
        }
        for _ in 0..REPAIR_CAP {
            let a = self.a();
            if a[2] >= -2 {
                break;
            }
            if a[3] > 0 {
                let e = self.need(self.p(3, 3), "an H(3,3)-edge")?;
                self.delete(e)?;
                break;
            }
            if let Some(e) = self.q(0, 1) {
                self.add(e)?;
                continue;
            }
            let e2 = self.need(self.q(1, 1), "a complement H(1,1)-edge")?;
            if a[0] >= 0 {
                let e1 = self.need(self.q(0, 0), "a complement H(0,0)-edge")?;
                self.add(e1)?;
            }
            self.add(e2)?;
            break;
        }
        if !is_state0(&self.a()) {
            return invariant(format!("normalisation ended at a = {:?}", self.a()));
        }
        Ok(())
    }

    fn done_proper(&self) -> Result<()> {
        if is_proper(&self.a()) {
            Ok(())
        } else {
            invariant(format!("repair ended at a = {:?}", self.a()))
        }
    }

    /// Turns a state-1 subgraph into a proper one.
    pub fn repair_state1(&mut self) -> Result<()> {
        if !is_state1(&self.a()) {
            return Err(Error::WrongState(format!("state 1 expected, a = {:?}", self.a())));
        }
        self.counters.state1_repairs += 1;
        for _ in 0..REPAIR_CAP {
            let a = self.a();
            if !is_state1(&a) {
                return invariant(format!("left state 1 mid-repair at a = {a:?}"));
            }
            if let Some(e) = self.p(1, 2) {
                self.delete(e)?;
                return self.done_proper();
            }
            if let Some(f) = self.p(1, 1) {
                self.delete(f)?;
                if a[1] == -2 {
                    let e = match self.p(2, 2) {
                        Some(e) => e,
                        None => self.need(self.p(2, 3), "an H(2,2)- or H(2,3)-edge")?,
                    };
                    self.delete(e)?;
                }
                return self.done_proper();
            }
            let e = self.need(self.p(1, 3), "an H(1,3)-edge")?;
            if a[2] != 6 {
                self.delete(e)?;
                return self.done_proper();
            }
            if a[1] == 6 && a[3] == -2 {
                let (_, star) = match self.star(3) {
                    Some(s) => s,
                    None => return invariant("expected an S(3;1,1) path"),
                };
                self.delete(star[0])?;
                self.delete(star[1])?;
                return self.done_proper();
            }
            if let Some(f) = self.p(2, 2) {
                self.delete(f)?;
                self.delete(e)?;
                return self.done_proper();
            }
            let f = self.need(self.p(2, 3), "an H(2,3)-edge")?;
            self.delete(f)?;
        }
        invariant("state-1 repair did not finish")
    }

    /// Turns a state-2 subgraph into a proper one.
    pub fn repair_state2(&mut self) -> Result<()> {
        let a = self.a();
        if !is_state2(&a) {
            return Err(Error::WrongState(format!("state 2 expected, a = {a:?}")));
        }
        self.counters.state2_repairs += 1;
        if a[1] <= 6 {
            return self.repair_state1();
        }
        if let Some(e) = self.p(1, 1) {
            self.delete(e)?;
            return self.done_proper();
        }
        if let Some((_, star)) = self.star(2) {
            self.delete(star[0])?;
            self.delete(star[1])?;
            return self.done_proper();
        }
        if a[2] != 6 {
            let e = self.need(self.p(1, 3), "an H(1,3)-edge")?;
            self.delete(e)?;
            return self.done_proper();
        }
        match (self.p(1, 2), self.p(1, 3)) {
            (Some(e), Some(f)) => {
                self.delete(e)?;
                self.delete(f)?;
            }
            (None, _) => {
                let (_, star) = match self.star(3) {
                    Some(s) => s,
                    None => return invariant("expected an S(3;1,1) path"),
                };
                self.delete(star[0])?;
                self.delete(star[1])?;
            }
            (Some(_), None) => return invariant("no H(1,3)-edge although no S(2;1,1) path exists"),
        }
        self.flip();
        self.repair_state1()
    }

    /// Applies one generation step to the host and restores state 0.
    pub fn apply_op_and_repair(&mut self, rec: &CubicOpRecord) -> Result<()> {
        if !is_state0(&self.a()) {
            return Err(Error::WrongState(format!("state 0 expected, a = {:?}", self.a())));
        }
        let (xy, zw) = match *rec {
            CubicOpRecord::TypeI { xy, .. } => (xy, None),
            CubicOpRecord::TypeII { xy, zw, .. } => (xy, Some(zw)),
        };
        if !self.graph().is_live(xy) {
            return Err(Error::MalformedRecord(format!("edge {xy} is not live")));
        }
        if !self.contains(xy) {
            self.flip();
        }
        let mixed = zw.is_some_and(|zw| !self.contains(zw));
        if !mixed {
            self.expand(rec, |_| true)?;
            let a = self.a();
            if !is_proper(&a) {
                if a[0] != -10 {
                    return invariant(format!("expansion gave a = {a:?}"));
                }
                self.repair_state1()?;
            }
        } else {
            let CubicOpRecord::TypeII { xu, uy, uv, .. } = *rec else {
                unreachable!("mixed case is Type II only");
            };
            self.expand(rec, |e| e == xu || e == uy || e == uv)?;
            let a = self.a();
            if a[0] == -10 {
                self.repair_state2()?;
            } else if a[1] == 10 {
                self.delete(uv)?;
                self.flip();
                if !is_proper(&self.a()) {
                    self.repair_state1()?;
                }
            } else if !is_proper(&a) {
                return invariant(format!("mixed expansion gave a = {a:?}"));
            }
        }
        self.proper_to_state0()
    }
}
