//! Clue slopes and the enumeration order used to build slope prefixes.
//!
//! The distinguished slope set consists of the integers, the reciprocals of
//! integers and the vertical slope. It is enumerated as
//!
//! ```text
//! 0, inf, -1, 1, -1/2, -2, 1/2, 2, -1/3, -3, 1/3, 3, ...
//! ```
//!
//! and a *prefix* through `s` is every slope up to and including `s` in that
//! enumeration. Arbitrary reduced rationals are representable as well, since
//! line enumeration does not depend on the order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Repr {
    /// `p/q` with `q >= 1` and `gcd(|p|, q) = 1`.
    Finite {
        p: i64,
        q: i64,
    },
    Vertical,
}

/// A reduced rational slope or the vertical slope.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Slope(Repr);

impl Slope {
    pub const ZERO: Slope = Slope(Repr::Finite { p: 0, q: 1 });
    pub const VERTICAL: Slope = Slope(Repr::Vertical);

    /// Reduces `p/q`; a zero denominator gives the vertical slope.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        match (p, q) {
            (0, 0) => Err(Error::UndefinedSlope),
            (_, 0) => Ok(Slope::VERTICAL),
            (0, _) => Ok(Slope::ZERO),
            _ => {
                let g = p.gcd(&q);
                let (mut p, mut q) = (p / g, q / g);
                if q < 0 {
                    p = -p;
                    q = -q;
                }
                Ok(Slope(Repr::Finite { p, q }))
            }
        }
    }

    pub fn integer(k: i64) -> Self {
        Slope(Repr::Finite { p: k, q: 1 })
    }

    /// The slope `1/k`; `1/0` is vertical.
    pub fn reciprocal_of(k: i64) -> Self {
        Slope::new(1, k).expect("numerator is non-zero")
    }

    pub fn is_vertical(&self) -> bool {
        matches!(self.0, Repr::Vertical)
    }

    /// `(p, q)` for finite slopes.
    pub fn ratio(&self) -> Option<(i64, i64)> {
        match self.0 {
            Repr::Finite { p, q } => Some((p, q)),
            Repr::Vertical => None,
        }
    }

    pub fn neg(&self) -> Slope {
        match self.0 {
            Repr::Finite { p, q } => Slope(Repr::Finite { p: -p, q }),
            Repr::Vertical => Slope::VERTICAL,
        }
    }

    pub fn recip(&self) -> Slope {
        match self.0 {
            Repr::Finite { p, q } => Slope::new(q, p).expect("q is non-zero"),
            Repr::Vertical => Slope::ZERO,
        }
    }

    /// Position in the enumeration order, or `None` when the slope is
    /// neither an integer, a reciprocal of an integer, nor vertical.
    pub fn order_index(&self) -> Option<usize> {
        let (p, q) = match self.0 {
            Repr::Vertical => return Some(1),
            Repr::Finite { p, q } => (p, q),
        };
        let block = |k: u64, offset: usize| 4 * (k as usize - 1) + offset;
        match (p, q) {
            (0, 1) => Some(0),
            (-1, 1) => Some(2),
            (1, 1) => Some(3),
            (p, 1) if p < 0 => Some(block(p.unsigned_abs(), 1)),
            (p, 1) => Some(block(p as u64, 3)),
            (-1, q) => Some(block(q as u64, 0)),
            (1, q) => Some(block(q as u64, 2)),
            _ => None,
        }
    }

    /// Inverse of [`Slope::order_index`].
    pub fn from_order_index(index: usize) -> Slope {
        match index {
            0 => Slope::ZERO,
            1 => Slope::VERTICAL,
            2 => Slope::integer(-1),
            3 => Slope::integer(1),
            _ => {
                let k = (index / 4 + 1) as i64;
                match index % 4 {
                    0 => Slope::reciprocal_of(-k),
                    1 => Slope::integer(-k),
                    2 => Slope::reciprocal_of(k),
                    _ => Slope::integer(k),
                }
            }
        }
    }

    pub fn in_order(&self) -> bool {
        self.order_index().is_some()
    }
}

/// Normal form of `p/q`.
pub fn reduce_slope(p: i64, q: i64) -> Result<Slope> {
    Slope::new(p, q)
}

/// Every slope up to and including `s` in enumeration order.
pub fn slope_prefix(s: Slope) -> Result<Vec<Slope>> {
    let last = s.order_index().ok_or(Error::NotInOrder(s))?;
    Ok(SlopeOrder::new().take(last + 1).collect())
}

/// The slope ending the last full block for denominator/numerator `q`,
/// i.e. the slope `q` itself (or `1` when `q <= 1`).
pub fn cap_slope(max_q: u32) -> Slope {
    Slope::integer(i64::from(max_q.max(1)))
}

/// Infinite iterator over the ordered slope set.
#[derive(Clone, Debug, Default)]
pub struct SlopeOrder {
    next: usize,
}

impl SlopeOrder {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for SlopeOrder {
    type Item = Slope;

    fn next(&mut self) -> Option<Slope> {
        let s = Slope::from_order_index(self.next);
        self.next += 1;
        Some(s)
    }
}

impl Ord for Slope {
    /// Ordered slopes first (by enumeration index), then the remaining
    /// rationals by numeric value.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.order_index(), other.order_index()) {
            (Some(a), Some(b)) => a.cmp(&b),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => {
                // Neither is vertical here.
                let (p1, q1) = self.ratio().unwrap();
                let (p2, q2) = other.ratio().unwrap();
                (i128::from(p1) * i128::from(q2)).cmp(&(i128::from(p2) * i128::from(q1)))
            }
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Repr::Vertical => f.write_str("inf"),
            Repr::Finite { p, q: 1 } => write!(f, "{p}"),
            Repr::Finite { p, q } => write!(f, "{p}/{q}"),
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `inf`, an integer, or `p/q` already in lowest terms with `q > 0`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSlopeToken(s.to_string());
        if s == "inf" {
            return Ok(Slope::VERTICAL);
        }
        match s.split_once('/') {
            None => s.parse::<i64>().map(Slope::integer).map_err(|_| bad()),
            Some((p, q)) => {
                let p: i64 = p.parse().map_err(|_| bad())?;
                let q: i64 = q.parse().map_err(|_| bad())?;
                if q <= 0 || p.gcd(&q) != 1 {
                    return Err(bad());
                }
                Ok(Slope(Repr::Finite { p, q }))
            }
        }
    }
}
