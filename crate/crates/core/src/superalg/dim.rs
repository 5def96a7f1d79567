use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

/// ℤ₂-degree of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u8 {
        self as u8
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Superdimension `(even | odd)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub const ZERO: SuperDim = SuperDim { even: 0, odd: 0 };

    pub const fn new(even: usize, odd: usize) -> Self {
        SuperDim { even, odd }
    }

    pub fn total(self) -> usize {
        self.even + self.odd
    }

    pub fn part(self, p: Parity) -> usize {
        match p {
            Parity::Even => self.even,
            Parity::Odd => self.odd,
        }
    }

    /// Componentwise difference, `None` if either component would go negative.
    pub fn checked_sub(self, rhs: SuperDim) -> Option<SuperDim> {
        Some(SuperDim {
            even: self.even.checked_sub(rhs.even)?,
            odd: self.odd.checked_sub(rhs.odd)?,
        })
    }

    pub fn scale(self, n: usize) -> SuperDim {
        SuperDim::new(self.even * n, self.odd * n)
    }

    /// `[even, odd]`, the shape used in JSON reports.
    pub fn pair(self) -> [usize; 2] {
        [self.even, self.odd]
    }
}

impl Add for SuperDim {
    type Output = SuperDim;
    fn add(self, rhs: SuperDim) -> SuperDim {
        SuperDim::new(self.even + rhs.even, self.odd + rhs.odd)
    }
}

/// Dimension of the module tensor product: `(a|b)(c|d) = (ac+bd | ad+bc)`.
impl Mul for SuperDim {
    type Output = SuperDim;
    fn mul(self, rhs: SuperDim) -> SuperDim {
        SuperDim::new(
            self.even * rhs.even + self.odd * rhs.odd,
            self.even * rhs.odd + self.odd * rhs.even,
        )
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}
