use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn from_char(c: char) -> Result<Sign> {
        match c {
            '+' => Ok(Sign::Plus),
            '-' | '\u{2212}' => Ok(Sign::Minus),
            other => Err(Error::BadSignChar(other)),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn as_ordering(self) -> Ordering {
        match self {
            Sign::Plus => Ordering::Greater,
            Sign::Minus => Ordering::Less,
        }
    }

    /// `None` for zero.
    pub fn from_ordering(o: Ordering) -> Option<Sign> {
        match o {
            Ordering::Greater => Some(Sign::Plus),
            Ordering::Less => Some(Sign::Minus),
            Ordering::Equal => None,
        }
    }

    /// Strict condition `s σ̃ 0`.
    pub fn strictly_matches(self, s: Ordering) -> bool {
        s == self.as_ordering()
    }

    /// Weak condition `s σ̄ 0`.
    pub fn weakly_matches(self, s: Ordering) -> bool {
        s.is_eq() || s == self.as_ordering()
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A list `[σ_0, ..., σ_k]` of signs with `σ_0 = +`. Its length is `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignList {
    signs: Vec<Sign>,
}

impl SignList {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        match signs.first() {
            None => Err(Error::EmptySignList),
            Some(Sign::Minus) => Err(Error::SignListHead),
            Some(Sign::Plus) => Ok(SignList { signs }),
        }
    }

    /// The list `[+]` of length zero.
    pub fn root() -> Self {
        SignList {
            signs: vec![Sign::Plus],
        }
    }

    /// Parses a full code such as `+--`, also accepting the bracketed form
    /// `[+,-,-]`.
    pub fn parse(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .filter(|c| !matches!(c, '[' | ']' | ',' | ' '))
            .map(Sign::from_char)
            .collect::<Result<Vec<_>>>()?;
        SignList::new(signs)
    }

    /// Builds `[+, tail...]`; `σ_0` is implicit.
    pub fn from_tail(tail: &str) -> Result<Self> {
        let mut signs = vec![Sign::Plus];
        for c in tail.chars().filter(|c| !matches!(c, '[' | ']' | ',' | ' ')) {
            signs.push(Sign::from_char(c)?);
        }
        Ok(SignList { signs })
    }

    /// `lg(σ)`, one less than the number of entries.
    pub fn lg(&self) -> usize {
        self.signs.len() - 1
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// `σ_i`. Panics when `i > lg`.
    pub fn get(&self, i: usize) -> Sign {
        self.signs[i]
    }

    pub fn last(&self) -> Sign {
        *self.signs.last().expect("nonempty")
    }

    /// `σ^{[i]} = [σ_0, ..., σ_i]`.
    pub fn head(&self, i: usize) -> SignList {
        SignList {
            signs: self.signs[..=i.min(self.lg())].to_vec(),
        }
    }

    /// `σ^{(i)} = [σ_0, ..., σ_{lg-i}]`.
    pub fn truncated(&self, i: usize) -> SignList {
        assert!(i <= self.lg(), "cannot drop past σ_0");
        SignList {
            signs: self.signs[..self.signs.len() - i].to_vec(),
        }
    }

    pub fn pushed(&self, s: Sign) -> SignList {
        let mut signs = self.signs.clone();
        signs.push(s);
        SignList { signs }
    }

    pub fn all_plus(lg: usize) -> SignList {
        SignList {
            signs: vec![Sign::Plus; lg + 1],
        }
    }

    /// `[+, -, +, -, ...]`.
    pub fn alternating(lg: usize) -> SignList {
        SignList {
            signs: (0..=lg)
                .map(|i| if i % 2 == 0 { Sign::Plus } else { Sign::Minus })
                .collect(),
        }
    }

    pub fn is_all_plus(&self) -> bool {
        self.signs.iter().all(|&s| s == Sign::Plus)
    }

    pub fn is_alternating(&self) -> bool {
        self.signs.windows(2).all(|w| w[0] != w[1])
    }

    /// Every list of length `lg`, in table order: each entry splits into
    /// two children, the one with the opposite sign first. This is the
    /// left-to-right order of the intervals `G_σ`.
    pub fn enumerate(lg: usize) -> Vec<SignList> {
        let mut level = vec![SignList::root()];
        for _ in 0..lg {
            level = level
                .into_iter()
                .flat_map(|s| {
                    let l = s.last();
                    [s.pushed(-l), s.pushed(l)]
                })
                .collect();
        }
        level
    }

    /// The compact spelling used by the command line, e.g. `+--`.
    pub fn compact(&self) -> String {
        self.signs.iter().map(|s| s.as_char()).collect()
    }
}

impl fmt::Display for SignList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.signs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for SignList {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SignList::parse(s)
    }
}
