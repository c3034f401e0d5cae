//! Dates, times and phone numbers, composed from the numeral expanders.

use crate::error::{Error, Result};
use crate::morph::{Gender, MorphTag};
use crate::numexpand::NumberSpelling;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Month {
    Number(u8),
    /// Month name as written in the text ("svibnja", "Svibanj").
    Name(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DateParts {
    pub day: u8,
    pub month: Month,
    pub year: Option<u16>,
    pub dot_after_year: bool,
}

impl DateParts {
    pub fn numeric(day: u8, month: u8, year: Option<u16>) -> Self {
        Self { day, month: Month::Number(month), year, dot_after_year: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimeParts {
    pub hours: u8,
    pub minutes: u8,
    pub seconds: Option<u8>,
}

impl NumberSpelling {
    /// Day as a nominative masculine ordinal, month in the genitive, year as a
    /// nominative feminine ordinal agreeing with the implied "godina".
    pub fn expand_date(&self, date: &DateParts) -> Result<Vec<String>> {
        self.expand_date_with_year_tag(date, MorphTag::feminine())
    }

    /// Like [`expand_date`](Self::expand_date), with the year in `year_tag`
    /// (used when a following noun such as "godine" fixes its case).
    pub fn expand_date_with_year_tag(&self, date: &DateParts, year_tag: MorphTag) -> Result<Vec<String>> {
        if !(1..=31).contains(&date.day) {
            return Err(Error::MalformedDate(format!("day {} outside 1-31", date.day)));
        }
        let month = match &date.month {
            Month::Number(m) if (1..=12).contains(m) => *m,
            Month::Number(m) => return Err(Error::MalformedDate(format!("month {m} outside 1-12"))),
            Month::Name(name) => {
                self.month_by_name(name).ok_or_else(|| Error::MalformedDate(format!("unknown month name `{name}`")))?
            }
        };
        if let Some(y) = date.year {
            if !(1..=9999).contains(&y) {
                return Err(Error::MalformedDate(format!("year {y} outside 1-9999")));
            }
        }
        let mut words = self.expand_ordinal(u64::from(date.day), MorphTag::default())?;
        words.push(self.month_genitive(month).to_string());
        if let Some(y) = date.year {
            words.extend(self.expand_ordinal(u64::from(y), year_tag)?);
        }
        Ok(words)
    }

    /// "<hours> <sat/sata/sati> i <minutes> <minuta/minute>", omitting zero
    /// minutes; seconds are appended the same way.
    pub fn expand_time(&self, time: &TimeParts) -> Result<Vec<String>> {
        if time.hours > 23 {
            return Err(Error::MalformedTime(format!("hour {} outside 0-23", time.hours)));
        }
        if time.minutes > 59 {
            return Err(Error::MalformedTime(format!("minute {} outside 0-59", time.minutes)));
        }
        if let Some(s) = time.seconds.filter(|s| *s > 59) {
            return Err(Error::MalformedTime(format!("second {s} outside 0-59")));
        }
        let mut parts = vec![self.counted(u64::from(time.hours), "hour")?];
        if time.minutes > 0 {
            parts.push(self.counted(u64::from(time.minutes), "minute")?);
        }
        if let Some(s) = time.seconds.filter(|s| *s > 0) {
            parts.push(self.counted(u64::from(s), "second")?);
        }
        let and = self.word("and");
        let mut words = Vec::new();
        for (i, part) in parts.into_iter().enumerate() {
            if i > 0 {
                words.push(and.to_string());
            }
            words.extend(part);
        }
        Ok(words)
    }

    /// Groups without a leading zero read as cardinals, the rest digit by digit.
    pub fn expand_phone<S: AsRef<str>>(&self, groups: &[S]) -> Result<Vec<String>> {
        let mut words = Vec::new();
        for group in groups {
            let group = group.as_ref();
            if group.is_empty() || !group.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::PhoneLeak(group.to_string()));
            }
            if group.starts_with('0') || group.len() > 15 {
                words.extend(self.expand_digits(group)?);
            } else {
                let n: u64 = group.parse().map_err(|_| Error::PhoneLeak(group.to_string()))?;
                words.extend(self.expand_cardinal(n, MorphTag::default())?);
            }
        }
        Ok(words)
    }

    /// Number followed by the matching form of a counted word key (`hour`, ...).
    fn counted(&self, n: u64, key: &str) -> Result<Vec<String>> {
        let gender: Gender = self.count_gender(key);
        let mut words = self.expand_cardinal(n, MorphTag::default().with_gender(gender))?;
        words.push(self.paucal_word(key, n).to_string());
        Ok(words)
    }
}

pub fn expand_date(date: &DateParts) -> Result<Vec<String>> {
    crate::fixtures::bundled().spelling.expand_date(date)
}

pub fn expand_time(time: &TimeParts) -> Result<Vec<String>> {
    crate::fixtures::bundled().spelling.expand_time(time)
}

pub fn expand_phone<S: AsRef<str>>(groups: &[S]) -> Result<Vec<String>> {
    crate::fixtures::bundled().spelling.expand_phone(groups)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn time(hours: u8, minutes: u8) -> TimeParts {
        TimeParts { hours, minutes, seconds: None }
    }

    #[test]
    fn dates() {
        let d = DateParts::numeric(3, 5, Some(2012));
        assert_eq!(expand_date(&d).unwrap().join(" "), "treći svibnja dvije tisuće dvanaesta");
        let d = DateParts::numeric(1, 1, None);
        assert_eq!(expand_date(&d).unwrap().join(" "), "prvi siječnja");
        let d = DateParts { day: 21, month: Month::Name("Listopada".into()), year: Some(1991), dot_after_year: false };
        assert_eq!(expand_date(&d).unwrap().join(" "), "dvadeset i prvi listopada tisuću devetsto devedeset i prva");
        let d = DateParts { day: 2, month: Month::Name("travanj".into()), year: None, dot_after_year: false };
        assert_eq!(expand_date(&d).unwrap().join(" "), "drugi travnja");
    }

    #[test]
    fn bad_dates() {
        assert!(matches!(expand_date(&DateParts::numeric(1, 13, None)), Err(Error::MalformedDate(_))));
        assert!(matches!(expand_date(&DateParts::numeric(0, 1, None)), Err(Error::MalformedDate(_))));
        assert!(matches!(expand_date(&DateParts::numeric(32, 1, None)), Err(Error::MalformedDate(_))));
        let d = DateParts { day: 1, month: Month::Name("ponedjeljak".into()), year: None, dot_after_year: false };
        assert!(matches!(expand_date(&d), Err(Error::MalformedDate(_))));
    }

    #[test]
    fn times() {
        assert_eq!(expand_time(&time(14, 5)).unwrap().join(" "), "četrnaest sati i pet minuta");
        assert_eq!(expand_time(&time(1, 0)).unwrap().join(" "), "jedan sat");
        assert_eq!(expand_time(&time(22, 2)).unwrap().join(" "), "dvadeset i dva sata i dvije minute");
        assert_eq!(expand_time(&time(0, 21)).unwrap().join(" "), "nula sati i dvadeset i jedna minuta");
        let t = TimeParts { hours: 8, minutes: 30, seconds: Some(3) };
        assert_eq!(expand_time(&t).unwrap().join(" "), "osam sati i trideset minuta i tri sekunde");
        assert!(matches!(expand_time(&time(25, 0)), Err(Error::MalformedTime(_))));
        assert!(matches!(expand_time(&time(12, 60)), Err(Error::MalformedTime(_))));
    }

    #[test]
    fn phones() {
        assert_eq!(expand_phone(&["051", "123"]).unwrap().join(" "), "nula pet jedan sto dvadeset i tri");
        assert_eq!(expand_phone(&["7"]).unwrap().join(" "), "sedam");
        assert_eq!(expand_phone(&["00"]).unwrap().join(" "), "nula nula");
        assert!(matches!(expand_phone(&["05a"]), Err(Error::PhoneLeak(_))));
    }
}
