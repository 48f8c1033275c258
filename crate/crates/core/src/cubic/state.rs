//! Classification of `ã` vectors of cubic hosts (scale 4).

use crate::error::{Error, Result};
use crate::irregularity::AVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubicState {
    State0,
    State1,
    State2,
    Proper,
    Other,
}

fn within(x: i64, lo: i64, hi: i64) -> bool {
    (lo..=hi).contains(&x)
}

pub fn is_state0(a: &[i64; 4]) -> bool {
    within(a[0], -8, 2) && within(a[3], -8, 2) && within(a[1], -2, 8) && within(a[2], -2, 8)
}

pub fn is_proper(a: &[i64; 4]) -> bool {
    a.iter().all(|&x| within(x, -8, 8))
}

pub fn is_state1(a: &[i64; 4]) -> bool {
    a[0] == -10 && a[1..].iter().all(|&x| within(x, -2, 6))
}

pub fn is_state2(a: &[i64; 4]) -> bool {
    a[0] == -10 && within(a[1], 2, 10) && within(a[2], -2, 6) && within(a[3], -6, 2)
}

/// Classifies raw entries; State0 wins over Proper and State1 over State2.
pub fn classify_entries(a: &[i64; 4]) -> CubicState {
    if is_state0(a) {
        CubicState::State0
    } else if is_proper(a) {
        CubicState::Proper
    } else if is_state1(a) {
        CubicState::State1
    } else if is_state2(a) {
        CubicState::State2
    } else {
        CubicState::Other
    }
}

pub fn classify(a: &AVector) -> Result<CubicState> {
    let arr: [i64; 4] = a.entries.as_slice().try_into().map_err(|_| Error::NotCubic)?;
    if a.d != 3 {
        return Err(Error::NotCubic);
    }
    Ok(classify_entries(&arr))
}
