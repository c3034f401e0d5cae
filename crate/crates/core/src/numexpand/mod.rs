//! Cardinal, ordinal and Roman numeral expansion.
//!
//! Numbers are spelled in groups of three digits from the most significant
//! group down. Each group is hundreds + tens/teens + units; a non-zero group
//! above the units is followed by its scale word, whose form agrees with the
//! group value by the paucal rule. Ordinals are the cardinal sequence with
//! the last word swapped for an ordinal root plus an adjective ending.

mod roman;
mod tables;

pub use roman::{roman_value, to_roman};
pub(crate) use tables::NumberWord;
pub use tables::{NumberSpelling, ScaleWord, StemKind, SCALE_VALUES};

use crate::error::{Error, Result};
use crate::morph::{Gender, MorphTag};

/// Exclusive upper bound for expandable numbers.
pub const MAX_NUMBER: u64 = 1_000_000_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// Units, teens, tens or hundreds; the value keys the ordinal root.
    Value(u64),
    Scale(u64),
    And,
}

#[derive(Debug, Clone)]
struct Piece<'a> {
    word: &'a str,
    kind: Kind,
}

impl NumberSpelling {
    /// Spells `n` as a cardinal. Only the gender of `tag` matters: it selects
    /// the forms of one and two in the last group.
    pub fn expand_cardinal(&self, n: u64, tag: MorphTag) -> Result<Vec<String>> {
        let pieces = self.cardinal_pieces(n, tag.gender)?;
        Ok(pieces.into_iter().map(|p| p.word.to_string()).collect())
    }

    pub fn expand_ordinal(&self, n: u64, tag: MorphTag) -> Result<Vec<String>> {
        if n == 0 {
            return Err(Error::OrdinalDomain(0));
        }
        let pieces = self.cardinal_pieces(n, tag.gender)?;
        let last = pieces.iter().rposition(|p| p.kind != Kind::And).expect("non-zero number has words");
        let mut words: Vec<String> = pieces.iter().map(|p| p.word.to_string()).collect();
        let key = match pieces[last].kind {
            Kind::Value(v) | Kind::Scale(v) => v,
            Kind::And => unreachable!(),
        };
        let (root, stem) = self.ordinal_root(key);
        words[last] = format!("{root}{}", self.ending(*stem, tag));
        Ok(words)
    }

    /// Reads a Roman numeral (an optional trailing dot is ignored) as an ordinal.
    pub fn expand_roman(&self, surface: &str, tag: MorphTag) -> Result<Vec<String>> {
        let numeral = surface.strip_suffix('.').unwrap_or(surface);
        let value = roman_value(numeral).ok_or_else(|| Error::RomanLeak(surface.to_string()))?;
        self.expand_ordinal(u64::from(value), tag)
    }

    /// Reads each digit separately: "051" is "nula pet jedan".
    pub fn expand_digits(&self, digits: &str) -> Result<Vec<String>> {
        digits
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| self.unit(u64::from(d), Gender::Masculine).to_string())
                    .ok_or_else(|| Error::PhoneLeak(digits.to_string()))
            })
            .collect()
    }

    /// Inverse of [`expand_cardinal`](Self::expand_cardinal).
    pub fn parse_spelled_number<S: AsRef<str>>(&self, words: &[S]) -> Result<u64> {
        let vocab = self.cardinal_vocabulary();
        let lookup = |w: &str| vocab.iter().find(|(form, _)| *form == w).map(|(_, k)| *k);
        if let [only] = words {
            if only.as_ref() == self.zero() {
                return Ok(0);
            }
        }
        if words.is_empty() {
            return Err(Error::NumberParse(String::new()));
        }
        let mut total = 0u64;
        let mut group = 0u64;
        for w in words {
            let w = w.as_ref();
            match lookup(w) {
                Some(NumberWord::Value(0)) | None => return Err(Error::NumberParse(w.to_string())),
                Some(NumberWord::Value(v)) => group += v,
                Some(NumberWord::Scale(s)) => {
                    total += group.max(1) * s;
                    group = 0;
                }
                Some(NumberWord::And) => {}
            }
        }
        Ok(total + group)
    }

    fn cardinal_pieces(&self, n: u64, gender: Gender) -> Result<Vec<Piece<'_>>> {
        if n >= MAX_NUMBER {
            return Err(Error::UnsupportedMagnitude { value: n, bound: MAX_NUMBER });
        }
        if n == 0 {
            return Ok(vec![Piece { word: self.zero(), kind: Kind::Value(0) }]);
        }
        let mut out = Vec::new();
        for index in (1..=4).rev() {
            let scale_value = SCALE_VALUES[index - 1];
            let group = (n / scale_value) % 1000;
            if group == 0 {
                continue;
            }
            let scale = self.scale(index);
            if group == 1 {
                out.push(Piece { word: &scale.one, kind: Kind::Scale(scale_value) });
            } else {
                self.group_pieces(group, scale.gender, false, &mut out);
                out.push(Piece { word: scale.form(group), kind: Kind::Scale(scale_value) });
            }
        }
        let last = n % 1000;
        if last > 0 {
            self.group_pieces(last, gender, true, &mut out);
        }
        Ok(out)
    }

    /// One group of three digits, 1..=999. The conjunction goes between tens
    /// and units of the last group only.
    fn group_pieces<'a>(&'a self, group: u64, gender: Gender, last_group: bool, out: &mut Vec<Piece<'a>>) {
        let hundreds = group / 100 * 100;
        let rest = group % 100;
        if hundreds > 0 {
            out.push(Piece { word: self.hundred(hundreds), kind: Kind::Value(hundreds) });
        }
        if (11..=19).contains(&rest) {
            out.push(Piece { word: self.teen(rest), kind: Kind::Value(rest) });
            return;
        }
        let tens = rest / 10 * 10;
        let units = rest % 10;
        if tens > 0 {
            out.push(Piece { word: self.ten(tens), kind: Kind::Value(tens) });
        }
        if units > 0 {
            if tens > 0 && last_group {
                out.push(Piece { word: self.word("and"), kind: Kind::And });
            }
            out.push(Piece { word: self.unit(units, gender), kind: Kind::Value(units) });
        }
    }
}

/// [`NumberSpelling::expand_cardinal`] over the bundled tables.
pub fn expand_cardinal(n: u64, tag: MorphTag) -> Result<Vec<String>> {
    crate::fixtures::bundled().spelling.expand_cardinal(n, tag)
}

/// [`NumberSpelling::expand_ordinal`] over the bundled tables.
pub fn expand_ordinal(n: u64, tag: MorphTag) -> Result<Vec<String>> {
    crate::fixtures::bundled().spelling.expand_ordinal(n, tag)
}

/// [`NumberSpelling::expand_roman`] over the bundled tables.
pub fn expand_roman(surface: &str, tag: MorphTag) -> Result<Vec<String>> {
    crate::fixtures::bundled().spelling.expand_roman(surface, tag)
}

/// [`NumberSpelling::parse_spelled_number`] over the bundled tables.
pub fn parse_spelled_number<S: AsRef<str>>(words: &[S]) -> Result<u64> {
    crate::fixtures::bundled().spelling.parse_spelled_number(words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morph::{Case, Number};

    fn joined(words: Result<Vec<String>>) -> String {
        words.unwrap().join(" ")
    }

    #[test]
    fn small_cardinals() {
        let d = MorphTag::default();
        assert_eq!(joined(expand_cardinal(0, d)), "nula");
        assert_eq!(joined(expand_cardinal(21, d)), "dvadeset i jedan");
        assert_eq!(joined(expand_cardinal(1000, d)), "tisuću");
        assert_eq!(joined(expand_cardinal(2012, d)), "dvije tisuće dvanaest");
        assert_eq!(joined(expand_cardinal(10, d)), "deset");
        assert_eq!(joined(expand_cardinal(110, d)), "sto deset");
        assert_eq!(joined(expand_cardinal(21_000, d)), "dvadeset jedna tisuća");
        assert_eq!(joined(expand_cardinal(5_000_000, d)), "pet milijuna");
        assert_eq!(joined(expand_cardinal(1_001_001, d)), "milijun tisuću jedan");
        assert_eq!(joined(expand_cardinal(2, MorphTag::feminine())), "dvije");
    }

    #[test]
    fn magnitude_bound_is_enforced() {
        let err = expand_cardinal(MAX_NUMBER, MorphTag::default()).unwrap_err();
        assert!(err.to_string().contains("1000000000000000"), "{err}");
        assert!(expand_cardinal(MAX_NUMBER - 1, MorphTag::default()).is_ok());
    }

    #[test]
    fn ordinals() {
        let d = MorphTag::default();
        assert_eq!(joined(expand_ordinal(21, d)), "dvadeset i prvi");
        assert_eq!(joined(expand_ordinal(1, d)), "prvi");
        assert_eq!(joined(expand_ordinal(3, d)), "treći");
        assert_eq!(joined(expand_ordinal(2012, MorphTag::feminine())), "dvije tisuće dvanaesta");
        assert_eq!(joined(expand_ordinal(1000, d)), "tisućiti");
        assert_eq!(joined(expand_ordinal(100, d)), "stoti");
        assert_eq!(
            joined(expand_ordinal(20, MorphTag::new(Case::Nominative, Gender::Neuter, Number::Singular))),
            "dvadeseto"
        );
        assert_eq!(
            joined(expand_ordinal(3, MorphTag::new(Case::Locative, Gender::Masculine, Number::Singular))),
            "trećem"
        );
        assert_eq!(
            joined(expand_ordinal(1990, MorphTag::new(Case::Genitive, Gender::Feminine, Number::Singular))),
            "tisuću devetsto devedesete"
        );
        assert!(matches!(expand_ordinal(0, d), Err(Error::OrdinalDomain(0))));
    }

    #[test]
    fn roman() {
        let d = MorphTag::default();
        assert_eq!(joined(expand_roman("II.", d)), "drugi");
        assert_eq!(joined(expand_roman("I.", d)), "prvi");
        assert_eq!(expand_roman("XIV.", d).unwrap(), expand_ordinal(14, d).unwrap());
        assert!(matches!(expand_roman("IL.", d), Err(Error::RomanLeak(_))));
    }

    #[test]
    fn parse_inverse() {
        assert_eq!(parse_spelled_number(&["nula"]).unwrap(), 0);
        assert_eq!(parse_spelled_number(&["dvadeset", "i", "jedan"]).unwrap(), 21);
        assert_eq!(parse_spelled_number(&["tisuću"]).unwrap(), 1000);
        assert!(matches!(parse_spelled_number(&["dvadeset", "kuna"]), Err(Error::NumberParse(w)) if w == "kuna"));
        assert!(parse_spelled_number::<&str>(&[]).is_err());
    }

    #[test]
    fn digit_reading() {
        let s = &crate::fixtures::bundled().spelling;
        assert_eq!(s.expand_digits("051").unwrap().join(" "), "nula pet jedan");
        assert!(s.expand_digits("0a").is_err());
    }
}
