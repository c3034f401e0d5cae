//! Brute-force oracles for number spelling and Roman numerals, written
//! independently of the library tables. Shared by several test targets.

const UNITS: [&str; 10] = ["", "jedan", "dva", "tri", "četiri", "pet", "šest", "sedam", "osam", "devet"];
const TEENS: [&str; 10] = [
    "deset",
    "jedanaest",
    "dvanaest",
    "trinaest",
    "četrnaest",
    "petnaest",
    "šesnaest",
    "sedamnaest",
    "osamnaest",
    "devetnaest",
];
const TENS: [&str; 10] =
    ["", "", "dvadeset", "trideset", "četrdeset", "pedeset", "šezdeset", "sedamdeset", "osamdeset", "devedeset"];
const HUNDREDS: [&str; 10] =
    ["", "sto", "dvjesto", "tristo", "četiristo", "petsto", "šesto", "sedamsto", "osamsto", "devetsto"];

#[derive(Clone, Copy, PartialEq)]
enum G {
    M,
    F,
}

/// Words for 1..=999 in the given gender, with or without "i" before units.
fn below_thousand(n: u64, g: G, conj: bool) -> Vec<String> {
    let mut w = Vec::new();
    let (h, r) = (n / 100, n % 100);
    if h > 0 {
        w.push(HUNDREDS[h as usize].to_string());
    }
    if (10..20).contains(&r) {
        w.push(TEENS[(r - 10) as usize].to_string());
        return w;
    }
    let (t, u) = (r / 10, r % 10);
    if t > 0 {
        w.push(TENS[t as usize].to_string());
    }
    if u > 0 {
        if t > 0 && conj {
            w.push("i".into());
        }
        w.push(match (u, g) {
            (1, G::F) => "jedna".into(),
            (2, G::F) => "dvije".into(),
            _ => UNITS[u as usize].to_string(),
        });
    }
    w
}

/// Singular / paucal / plural by the last two digits.
fn agree(n: u64, forms: [&str; 3]) -> &str {
    let (last2, last) = (n % 100, n % 10);
    if (11..=14).contains(&last2) {
        forms[2]
    } else if last == 1 {
        forms[0]
    } else if (2..=4).contains(&last) {
        forms[1]
    } else {
        forms[2]
    }
}

pub fn oracle_cardinal(n: u64) -> String {
    if n == 0 {
        return "nula".into();
    }
    let scales: [(u64, G, &str, [&str; 3]); 4] = [
        (1_000_000_000_000, G::M, "bilijun", ["bilijun", "bilijuna", "bilijuna"]),
        (1_000_000_000, G::F, "milijarda", ["milijarda", "milijarde", "milijardi"]),
        (1_000_000, G::M, "milijun", ["milijun", "milijuna", "milijuna"]),
        (1_000, G::F, "tisuću", ["tisuća", "tisuće", "tisuća"]),
    ];
    let mut words = Vec::new();
    let mut rest = n;
    for (value, g, one, forms) in scales {
        let q = rest / value;
        rest %= value;
        match q {
            0 => {}
            1 => words.push(one.to_string()),
            _ => {
                words.extend(below_thousand(q, g, false));
                words.push(agree(q, forms).to_string());
            }
        }
    }
    if rest > 0 {
        words.extend(below_thousand(rest, G::M, true));
    }
    words.join(" ")
}

/// Value by the usual left-to-right subtractive scan; accepts ill-formed input.
fn oracle_scan(s: &str) -> u32 {
    let val = |c| match c {
        'I' => 1,
        'V' => 5,
        'X' => 10,
        'L' => 50,
        'C' => 100,
        'D' => 500,
        'M' => 1000,
        _ => unreachable!(),
    };
    let v: Vec<u32> = s.chars().map(val).collect();
    let mut total = 0i64;
    for (i, &x) in v.iter().enumerate() {
        if v.get(i + 1).is_some_and(|&next| next > x) {
            total -= i64::from(x);
        } else {
            total += i64::from(x);
        }
    }
    total.max(0) as u32
}

pub fn oracle_to_roman(mut n: u32) -> String {
    let digits = [
        (1000, "M"),
        (900, "CM"),
        (500, "D"),
        (400, "CD"),
        (100, "C"),
        (90, "XC"),
        (50, "L"),
        (40, "XL"),
        (10, "X"),
        (9, "IX"),
        (5, "V"),
        (4, "IV"),
        (1, "I"),
    ];
    let mut s = String::new();
    for (v, sym) in digits {
        while n >= v {
            s.push_str(sym);
            n -= v;
        }
    }
    s
}

/// A numeral is well formed iff it is the canonical spelling of its scanned value.
pub fn oracle_roman(s: &str) -> Option<u32> {
    let v = oracle_scan(s);
    ((1..=3999).contains(&v) && oracle_to_roman(v) == s).then_some(v)
}
