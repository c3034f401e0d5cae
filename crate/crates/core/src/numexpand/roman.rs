/// Symbols for ones, fives and tens at each decimal place, units first.
const PLACES: [(char, char, char); 4] = [('I', 'V', 'X'), ('X', 'L', 'C'), ('C', 'D', 'M'), ('M', '\0', '\0')];

/// Value of a canonical (subtractive) Roman numeral in 1..=3999, or `None`
/// when `s` is not well-formed. "IIII", "IL" and "VX" are rejected.
pub fn roman_value(s: &str) -> Option<u32> {
    let mut rest = s;
    let mut value = 0;
    for (place, &(one, five, ten)) in PLACES.iter().enumerate().rev() {
        let (digit, len) = place_digit(rest, one, five, ten, place == 3);
        value += digit * 10u32.pow(place as u32);
        rest = &rest[len..];
    }
    (rest.is_empty() && value > 0).then_some(value)
}

/// Longest prefix of `s` spelling one decimal digit with the given symbols.
fn place_digit(s: &str, one: char, five: char, ten: char, thousands: bool) -> (u32, usize) {
    let c: Vec<char> = s.chars().take(4).collect();
    let at = |i: usize| c.get(i).copied();
    if thousands {
        let n = c.iter().take(3).take_while(|&&x| x == one).count();
        return (n as u32, n);
    }
    if at(0) == Some(one) && at(1) == Some(ten) {
        return (9, 2);
    }
    if at(0) == Some(one) && at(1) == Some(five) {
        return (4, 2);
    }
    let (base, skip) = if at(0) == Some(five) { (5, 1) } else { (0, 0) };
    let n = c[skip..].iter().take(3).take_while(|&&x| x == one).count();
    (base + n as u32, skip + n)
}

/// Canonical numeral for 1..=3999.
pub fn to_roman(mut n: u32) -> Option<String> {
    if !(1..=3999).contains(&n) {
        return None;
    }
    const TABLE: [(u32, &str); 13] = [
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
    let mut out = String::new();
    for (v, sym) in TABLE {
        while n >= v {
            out.push_str(sym);
            n -= v;
        }
    }
    Some(out)
}
