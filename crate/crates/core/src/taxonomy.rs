//! Classes of non-standard words.
//!
//! The tree has three branches: tokens made of letters, tokens made of
//! digits, and tokens combining both (or combining several tokens). The leaf
//! inventory below is a reconstruction that covers every kind of
//! non-standard word the normalizer handles; `StandardWord` is the leaf for
//! ordinary words and punctuation that pass through untouched.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Characters,
    Numbers,
    Combined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NswClass {
    StandardWord,
    Abbreviation,
    Acronym,
    Symbol,
    MeasurementUnit,
    CardinalNumber,
    OrdinalNumber,
    RomanNumeral,
    DateNumeric,
    DateCombined,
    Time,
    Year,
    PhoneNumber,
    DecimalNumber,
    Currency,
    Email,
    Url,
    MixedAlphanumeric,
}

impl NswClass {
    pub const ALL: [NswClass; 18] = [
        NswClass::StandardWord,
        NswClass::Abbreviation,
        NswClass::Acronym,
        NswClass::Symbol,
        NswClass::MeasurementUnit,
        NswClass::CardinalNumber,
        NswClass::OrdinalNumber,
        NswClass::RomanNumeral,
        NswClass::DateNumeric,
        NswClass::DateCombined,
        NswClass::Time,
        NswClass::Year,
        NswClass::PhoneNumber,
        NswClass::DecimalNumber,
        NswClass::Currency,
        NswClass::Email,
        NswClass::Url,
        NswClass::MixedAlphanumeric,
    ];

    pub fn branch(self) -> Branch {
        use NswClass::*;
        match self {
            StandardWord | Abbreviation | Acronym | Symbol | MeasurementUnit | Currency | RomanNumeral => {
                Branch::Characters
            }
            CardinalNumber | OrdinalNumber | DateNumeric | Time | Year | PhoneNumber | DecimalNumber => Branch::Numbers,
            DateCombined | Email | Url | MixedAlphanumeric => Branch::Combined,
        }
    }

    pub fn is_nsw(self) -> bool {
        self != NswClass::StandardWord
    }

    /// Classes whose spans may cover more than one token.
    pub fn allows_multi_token(self) -> bool {
        use NswClass::*;
        matches!(self, DateNumeric | DateCombined | Time | PhoneNumber | Email | Url)
    }

    /// Classes that may appear as the class column of a dictionary row.
    pub fn is_lexical(self) -> bool {
        use NswClass::*;
        matches!(self, Abbreviation | Acronym | Symbol | MeasurementUnit | Currency)
    }

    pub fn name(self) -> &'static str {
        use NswClass::*;
        match self {
            StandardWord => "StandardWord",
            Abbreviation => "Abbreviation",
            Acronym => "Acronym",
            Symbol => "Symbol",
            MeasurementUnit => "MeasurementUnit",
            CardinalNumber => "CardinalNumber",
            OrdinalNumber => "OrdinalNumber",
            RomanNumeral => "RomanNumeral",
            DateNumeric => "DateNumeric",
            DateCombined => "DateCombined",
            Time => "Time",
            Year => "Year",
            PhoneNumber => "PhoneNumber",
            DecimalNumber => "DecimalNumber",
            Currency => "Currency",
            Email => "Email",
            Url => "Url",
            MixedAlphanumeric => "MixedAlphanumeric",
        }
    }
}

impl fmt::Display for NswClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NswClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NswClass::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown class `{s}`"))
    }
}
