//! Rows of self-dual degree-24 frame shapes and their recorded realizations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::dataset::{checked_body, parse_line};
use crate::cyclo::FrameShape;
use crate::error::{Error, Result};

const FRAME_SHAPES: &str = include_str!("../../data/frame_shapes.txt");

/// The five ways of producing a degree-24 self-dual symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Construction {
    /// Coxeter elements of root systems of equal order.
    A,
    /// `phi_M^b` of a singularity whose symbol is already self-dual.
    B,
    /// Powers of simply-elliptic symbols, paired with the dual.
    C,
    /// `pi pi*` with `pi = phi_M^b` of a Fuchsian complete intersection.
    D,
    /// `pi pi*` with `pi = psi_A`.
    E,
}

impl Construction {
    pub const ALL: [Construction; 5] =
        [Construction::A, Construction::B, Construction::C, Construction::D, Construction::E];

    pub fn letter(self) -> char {
        match self {
            Construction::A => 'a',
            Construction::B => 'b',
            Construction::C => 'c',
            Construction::D => 'd',
            Construction::E => 'e',
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Construction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "a" => Construction::A,
            "b" => Construction::B,
            "c" => Construction::C,
            "d" => Construction::D,
            "e" => Construction::E,
            _ => return Err(Error::Parse(format!("construction {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table5Row {
    pub atlas_label: String,
    pub frame_shape: FrameShape,
    /// Realizer names per construction, as printed.
    pub realizations: BTreeMap<Construction, Vec<String>>,
}

impl Table5Row {
    fn from_fields(f: &BTreeMap<String, String>) -> Result<Self> {
        let get = |k: &str| f.get(k).ok_or_else(|| Error::Dataset(format!("row lacks key {k:?}")));
        let mut realizations = BTreeMap::new();
        for c in Construction::ALL {
            if let Some(v) = f.get(&c.letter().to_string()) {
                realizations.insert(c, v.split('|').map(str::to_string).collect());
            }
        }
        Ok(Self { atlas_label: get("atl")?.clone(), frame_shape: get("shape")?.parse()?, realizations })
    }
}

pub fn load_table5() -> Result<Vec<Table5Row>> {
    parse_table5(FRAME_SHAPES)
}

pub fn parse_table5(text: &str) -> Result<Vec<Table5Row>> {
    checked_body(text)?.into_iter().map(|l| Table5Row::from_fields(&parse_line(l)?)).collect()
}
