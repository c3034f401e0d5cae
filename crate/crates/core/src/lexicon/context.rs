//! Context rules that choose between senses of an ambiguous dictionary entry.

use std::fmt;
use std::str::FromStr;

use crate::classifier::ClassifiedSpan;
use crate::lexicon::Lexicon;
use crate::morph::{Gender, MorphTag, Paucal};
use crate::taxonomy::NswClass;

/// Closed vocabulary of conditions over the neighbouring spans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContextRule {
    /// Previous span is an ordinal reading: ordinal, Roman numeral, year or date.
    FollowsOrdinal,
    /// Previous span is a cardinal or decimal number.
    FollowsCardinal,
    /// Previous or next span is a proper name.
    AdjacentProperName,
    PrecedesClass(NswClass),
    FollowsClass(NswClass),
}

impl ContextRule {
    pub fn matches(&self, ctx: &Context<'_>) -> bool {
        use NswClass::*;
        match self {
            ContextRule::FollowsOrdinal => ctx
                .prev
                .as_ref()
                .is_some_and(|n| matches!(n.cls, OrdinalNumber | RomanNumeral | Year | DateNumeric | DateCombined)),
            ContextRule::FollowsCardinal => {
                ctx.prev.as_ref().is_some_and(|n| matches!(n.cls, CardinalNumber | DecimalNumber))
            }
            ContextRule::AdjacentProperName => {
                ctx.prev.as_ref().is_some_and(|n| n.proper_name) || ctx.next.as_ref().is_some_and(|n| n.proper_name)
            }
            ContextRule::PrecedesClass(c) => ctx.next.as_ref().is_some_and(|n| n.cls == *c),
            ContextRule::FollowsClass(c) => ctx.prev.as_ref().is_some_and(|n| n.cls == *c),
        }
    }
}

impl fmt::Display for ContextRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextRule::FollowsOrdinal => f.write_str("follows-ordinal"),
            ContextRule::FollowsCardinal => f.write_str("follows-cardinal"),
            ContextRule::AdjacentProperName => f.write_str("adjacent-proper-name"),
            ContextRule::PrecedesClass(c) => write!(f, "precedes-class:{c}"),
            ContextRule::FollowsClass(c) => write!(f, "follows-class:{c}"),
        }
    }
}

impl FromStr for ContextRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "follows-ordinal" => Ok(ContextRule::FollowsOrdinal),
            "follows-cardinal" => Ok(ContextRule::FollowsCardinal),
            "adjacent-proper-name" => Ok(ContextRule::AdjacentProperName),
            _ => {
                if let Some(c) = s.strip_prefix("precedes-class:") {
                    c.parse().map(ContextRule::PrecedesClass)
                } else if let Some(c) = s.strip_prefix("follows-class:") {
                    c.parse().map(ContextRule::FollowsClass)
                } else {
                    Err(format!("unknown context rule `{s}`"))
                }
            }
        }
    }
}

/// How a sense's expansion inflects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Paradigm {
    Invariant,
    /// Invariant words whose tag a preceding ordinal copies ("g." read as "godine").
    Governs(MorphTag),
    /// Singular|paucal|plural forms chosen by the preceding number; the gender
    /// applies to that number ("dvije kune").
    Paucal(Gender),
}

impl fmt::Display for Paradigm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Paradigm::Invariant => f.write_str("-"),
            Paradigm::Governs(tag) => write!(f, "{tag}"),
            Paradigm::Paucal(g) => write!(f, "paucal.{}", g.code()),
        }
    }
}

impl FromStr for Paradigm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "-" {
            return Ok(Paradigm::Invariant);
        }
        if let Some(g) = s.strip_prefix("paucal.") {
            return g.parse().map(Paradigm::Paucal);
        }
        s.parse::<MorphTag>().map(Paradigm::Governs).map_err(|_| format!("unknown paradigm `{s}`"))
    }
}

/// Numeric value of a neighbouring number, as far as agreement cares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Integer(u64),
    Fractional,
}

impl Quantity {
    pub fn paucal(self) -> Paucal {
        match self {
            Quantity::Integer(n) => Paucal::of(n),
            Quantity::Fractional => Paucal::Paucal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighbor<'a> {
    pub cls: NswClass,
    pub surface: &'a str,
    pub proper_name: bool,
    pub quantity: Option<Quantity>,
}

/// The spans on either side of the span being resolved, within one sentence.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Context<'a> {
    pub prev: Option<Neighbor<'a>>,
    pub next: Option<Neighbor<'a>>,
}

impl<'a> Context<'a> {
    pub fn around(spans: &'a [ClassifiedSpan], index: usize, lexicon: &Lexicon) -> Self {
        let neighbor = |i: usize| spans.get(i).map(|s| s.neighbor(lexicon));
        Context { prev: index.checked_sub(1).and_then(neighbor), next: neighbor(index + 1) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_ids_round_trip() {
        for id in
            ["follows-ordinal", "follows-cardinal", "adjacent-proper-name", "precedes-class:Year", "follows-class:Time"]
        {
            assert_eq!(id.parse::<ContextRule>().unwrap().to_string(), id);
        }
        assert!("follows-class:Nothing".parse::<ContextRule>().is_err());
        assert!("after-noun".parse::<ContextRule>().is_err());
    }

    #[test]
    fn paradigms_parse() {
        assert_eq!("-".parse::<Paradigm>().unwrap(), Paradigm::Invariant);
        assert_eq!("paucal.f".parse::<Paradigm>().unwrap(), Paradigm::Paucal(Gender::Feminine));
        assert_eq!("gen.f.sg".parse::<Paradigm>().unwrap().to_string(), "gen.f.sg");
        assert!("paucal.x".parse::<Paradigm>().is_err());
        assert!("plural".parse::<Paradigm>().is_err());
    }

    #[test]
    fn rules_ignore_missing_neighbors() {
        let empty = Context::default();
        for rule in [
            ContextRule::FollowsOrdinal,
            ContextRule::FollowsCardinal,
            ContextRule::AdjacentProperName,
            ContextRule::PrecedesClass(NswClass::Year),
            ContextRule::FollowsClass(NswClass::Year),
        ] {
            assert!(!rule.matches(&empty));
        }
    }
}
