//! Cooperative search budgets.
//!
//! The core crate has no clock, so long searches poll a [`Budget`] supplied
//! by the caller. The std companion crate provides a wall-clock deadline.

use core::cell::Cell;

pub trait Budget {
    /// Returns true once the search should stop.
    fn exhausted(&self) -> bool;
}

/// Never runs out.
#[derive(Debug, Default, Clone, Copy)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&self) -> bool {
        false
    }
}

/// Runs out after a fixed number of polls.
#[derive(Debug)]
pub struct StepBudget {
    remaining: Cell<u64>,
}

impl StepBudget {
    pub fn new(steps: u64) -> Self {
        StepBudget { remaining: Cell::new(steps) }
    }
}

impl Budget for StepBudget {
    fn exhausted(&self) -> bool {
        let r = self.remaining.get();
        if r == 0 {
            return true;
        }
        self.remaining.set(r - 1);
        false
    }
}

impl<B: Budget + ?Sized> Budget for &B {
    fn exhausted(&self) -> bool {
        (**self).exhausted()
    }
}

impl<B: Budget + ?Sized> Budget for alloc::boxed::Box<B> {
    fn exhausted(&self) -> bool {
        (**self).exhausted()
    }
}
