use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

/// A valuation value: an integer or `+inf` (the valuation of zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(i64),
    Infinity,
}

impl Order {
    pub fn finite(self) -> Option<i64> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Order::Infinity
    }
}

impl From<i64> for Order {
    fn from(n: i64) -> Self {
        Order::Finite(n)
    }
}

impl Add for Order {
    type Output = Order;
    fn add(self, rhs: Order) -> Order {
        match (self, rhs) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a + b),
            _ => Order::Infinity,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => s.serialize_i64(*n),
            Order::Infinity => s.serialize_str("inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_top() {
        assert!(Order::Finite(i64::MAX) < Order::Infinity);
        assert_eq!(Order::Finite(2) + Order::Infinity, Order::Infinity);
        assert_eq!(Order::Finite(2).min(Order::Infinity), Order::Finite(2));
    }
}
