//! English number names and the letter code A=01 .. Z=26.

/// Uppercase English name of n without spaces or hyphens (standard American
/// naming, no "and"), e.g. 21 -> TWENTYONE.
pub fn english_name(n: u64) -> String {
    const ONES: [&str; 20] = [
        "ZERO", "ONE", "TWO", "THREE", "FOUR", "FIVE", "SIX", "SEVEN", "EIGHT", "NINE", "TEN",
        "ELEVEN", "TWELVE", "THIRTEEN", "FOURTEEN", "FIFTEEN", "SIXTEEN", "SEVENTEEN",
        "EIGHTEEN", "NINETEEN",
    ];
    const TENS: [&str; 10] = [
        "", "", "TWENTY", "THIRTY", "FORTY", "FIFTY", "SIXTY", "SEVENTY", "EIGHTY", "NINETY",
    ];
    const SCALES: [(u64, &str); 6] = [
        (1_000_000_000_000_000_000, "QUINTILLION"),
        (1_000_000_000_000_000, "QUADRILLION"),
        (1_000_000_000_000, "TRILLION"),
        (1_000_000_000, "BILLION"),
        (1_000_000, "MILLION"),
        (1_000, "THOUSAND"),
    ];

    fn under_thousand(n: u64, ones: &[&str; 20], tens: &[&str; 10]) -> String {
        let mut s = String::new();
        let mut n = n;
        if n >= 100 {
            s.push_str(ones[(n / 100) as usize]);
            s.push_str("HUNDRED");
            n %= 100;
        }
        if n >= 20 {
            s.push_str(tens[(n / 10) as usize]);
            n %= 10;
            if n > 0 {
                s.push_str(ones[n as usize]);
            }
        } else if n > 0 || s.is_empty() {
            if !(n == 0 && !s.is_empty()) {
                s.push_str(ones[n as usize]);
            }
        }
        s
    }

    if n < 20 {
        return ONES[n as usize].to_string();
    }
    let mut s = String::new();
    let mut rest = n;
    for (scale, name) in SCALES {
        if rest >= scale {
            s.push_str(&under_thousand(rest / scale, &ONES, &TENS));
            s.push_str(name);
            rest %= scale;
        }
    }
    if rest > 0 || s.is_empty() {
        s.push_str(&under_thousand(rest, &ONES, &TENS));
    }
    s
}

/// Letter code with A = 01 through Z = 26, two digits each.
pub fn letter_code(word: &str) -> String {
    word.chars()
        .filter(|c| c.is_ascii_alphabetic())
        .map(|c| format!("{:02}", (c.to_ascii_uppercase() as u8 - b'A') + 1))
        .collect()
}
