//! Morphological tags: case, gender and number, plus paucal agreement.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Case {
    #[default]
    Nominative,
    Genitive,
    Dative,
    Accusative,
    Vocative,
    Locative,
    Instrumental,
}

impl Case {
    pub const ALL: [Case; 7] = [
        Case::Nominative,
        Case::Genitive,
        Case::Dative,
        Case::Accusative,
        Case::Vocative,
        Case::Locative,
        Case::Instrumental,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Case::Nominative => "nom",
            Case::Genitive => "gen",
            Case::Dative => "dat",
            Case::Accusative => "acc",
            Case::Vocative => "voc",
            Case::Locative => "loc",
            Case::Instrumental => "ins",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Gender {
    #[default]
    Masculine,
    Feminine,
    Neuter,
}

impl Gender {
    pub const ALL: [Gender; 3] = [Gender::Masculine, Gender::Feminine, Gender::Neuter];

    pub fn code(self) -> &'static str {
        match self {
            Gender::Masculine => "m",
            Gender::Feminine => "f",
            Gender::Neuter => "n",
        }
    }
}

impl FromStr for Gender {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "m" => Ok(Gender::Masculine),
            "f" => Ok(Gender::Feminine),
            "n" => Ok(Gender::Neuter),
            _ => Err(format!("unknown gender `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Number {
    #[default]
    Singular,
    Plural,
}

impl Number {
    pub fn code(self) -> &'static str {
        match self {
            Number::Singular => "sg",
            Number::Plural => "pl",
        }
    }
}

/// Case, gender and number of a word. Defaults to nominative masculine singular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MorphTag {
    pub case: Case,
    pub gender: Gender,
    pub number: Number,
}

impl MorphTag {
    pub const fn new(case: Case, gender: Gender, number: Number) -> Self {
        Self { case, gender, number }
    }

    pub const fn feminine() -> Self {
        Self::new(Case::Nominative, Gender::Feminine, Number::Singular)
    }

    pub fn with_gender(self, gender: Gender) -> Self {
        Self { gender, ..self }
    }

    /// Every combination, 7 cases x 3 genders x 2 numbers.
    pub fn all() -> impl Iterator<Item = MorphTag> {
        Case::ALL.into_iter().flat_map(|case| {
            Gender::ALL.into_iter().flat_map(move |gender| {
                [Number::Singular, Number::Plural].into_iter().map(move |number| MorphTag::new(case, gender, number))
            })
        })
    }
}

impl fmt::Display for MorphTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}.{}", self.case.code(), self.gender.code(), self.number.code())
    }
}

impl FromStr for MorphTag {
    type Err = String;

    /// Parses the `case.gender.number` notation used in the data files, e.g. `gen.f.sg`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split('.');
        let (Some(c), Some(g), Some(n), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(format!("morph tag `{s}` must look like case.gender.number"));
        };
        let case = Case::ALL.into_iter().find(|case| case.code() == c).ok_or_else(|| format!("unknown case `{c}`"))?;
        let gender = g.parse()?;
        let number = match n {
            "sg" => Number::Singular,
            "pl" => Number::Plural,
            _ => return Err(format!("unknown number `{n}`")),
        };
        Ok(MorphTag::new(case, gender, number))
    }
}

/// Which form a counted noun takes after a number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Paucal {
    /// 1, 21, 101 ... but not 11.
    Singular,
    /// 2-4, 22-24 ... but not 12-14.
    Paucal,
    /// Everything else, including 0 and 11-14.
    Plural,
}

impl Paucal {
    pub fn of(n: u64) -> Paucal {
        let last_two = n % 100;
        if (11..=14).contains(&last_two) {
            return Paucal::Plural;
        }
        match last_two % 10 {
            1 => Paucal::Singular,
            2..=4 => Paucal::Paucal,
            _ => Paucal::Plural,
        }
    }

    pub fn slot(self) -> &'static str {
        match self {
            Paucal::Singular => "sg",
            Paucal::Paucal => "pc",
            Paucal::Plural => "pl",
        }
    }

    pub fn from_slot(slot: &str) -> Option<Paucal> {
        match slot {
            "sg" => Some(Paucal::Singular),
            "pc" => Some(Paucal::Paucal),
            "pl" => Some(Paucal::Plural),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Paucal::Singular => 0,
            Paucal::Paucal => 1,
            Paucal::Plural => 2,
        }
    }
}
