use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Ground-set element name.
///
/// The global order is α, β, γ, ω, ν, a, δ, then b₁, c₁, d₁, b₂, c₂, d₂, …,
/// then plain integer indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Alpha,
    Beta,
    Gamma,
    Omega,
    Nu,
    A,
    Delta,
    B(u32),
    C(u32),
    D(u32),
    Index(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unrecognised label {0:?}")]
pub struct LabelParseError(pub String);

impl Label {
    fn sort_key(&self) -> (u8, u32, u8) {
        match *self {
            Label::Alpha => (0, 0, 0),
            Label::Beta => (0, 1, 0),
            Label::Gamma => (0, 2, 0),
            Label::Omega => (0, 3, 0),
            Label::Nu => (0, 4, 0),
            Label::A => (0, 5, 0),
            Label::Delta => (0, 6, 0),
            Label::B(i) => (1, i, 0),
            Label::C(i) => (1, i, 1),
            Label::D(i) => (1, i, 2),
            Label::Index(i) => (2, i, 0),
        }
    }

    /// ASCII name used in JSON documents.
    pub fn ascii(&self) -> String {
        match *self {
            Label::Alpha => "alpha".into(),
            Label::Beta => "beta".into(),
            Label::Gamma => "gamma".into(),
            Label::Omega => "omega".into(),
            Label::Nu => "nu".into(),
            Label::A => "a".into(),
            Label::Delta => "delta".into(),
            Label::B(i) => format!("b{i}"),
            Label::C(i) => format!("c{i}"),
            Label::D(i) => format!("d{i}"),
            Label::Index(i) => i.to_string(),
        }
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Label::Alpha => write!(f, "α"),
            Label::Beta => write!(f, "β"),
            Label::Gamma => write!(f, "γ"),
            Label::Omega => write!(f, "ω"),
            Label::Nu => write!(f, "ν"),
            Label::A => write!(f, "a"),
            Label::Delta => write!(f, "δ"),
            Label::B(i) => write!(f, "b{i}"),
            Label::C(i) => write!(f, "c{i}"),
            Label::D(i) => write!(f, "d{i}"),
            Label::Index(i) => write!(f, "{i}"),
        }
    }
}

impl FromStr for Label {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || LabelParseError(s.to_string());
        let named = match s {
            "alpha" | "α" => Some(Label::Alpha),
            "beta" | "β" => Some(Label::Beta),
            "gamma" | "γ" => Some(Label::Gamma),
            "omega" | "ω" => Some(Label::Omega),
            "nu" | "ν" => Some(Label::Nu),
            "a" => Some(Label::A),
            "delta" | "δ" => Some(Label::Delta),
            _ => None,
        };
        if let Some(label) = named {
            return Ok(label);
        }
        let positive = |digits: &str| -> Result<u32, LabelParseError> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            match digits.parse::<u32>() {
                Ok(0) | Err(_) => Err(err()),
                Ok(i) => Ok(i),
            }
        };
        match s.chars().next() {
            Some('b') => positive(&s[1..]).map(Label::B),
            Some('c') => positive(&s[1..]).map(Label::C),
            Some('d') => positive(&s[1..]).map(Label::D),
            Some(c) if c.is_ascii_digit() => {
                if !s.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(err());
                }
                s.parse::<u32>().map(Label::Index).map_err(|_| err())
            }
            _ => Err(err()),
        }
    }
}
