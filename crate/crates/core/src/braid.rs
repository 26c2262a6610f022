//! Braid words, their text syntax, and the combinatorics of their closures.
//!
//! A word is a flat list of signed generator indices: `i > 0` is `σ_i`,
//! `i < 0` is `σ_|i|^-1`. The text form is
//!
//! ```text
//! word := '[' ']' | '[' item (',' item)* ']'
//! item := signed-int | '(' signed-int (',' signed-int)* ')' '^' nonneg-int
//! ```
//!
//! with whitespace ignored. Power groups are expanded while parsing.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A braid word on an explicit number of strands.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Checks every letter against the strand count.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        for &letter in &letters {
            if letter == 0 {
                return Err(Error::ZeroLetter);
            }
            if letter.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { letter, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// The word with the smallest strand count that holds its letters.
    pub fn with_inferred_strands(letters: Vec<i32>) -> Result<Self> {
        let max = letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        Self::new(max + 1, letters)
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// `g · w · g⁻¹` for a single letter `g`.
    pub fn conjugate(&self, g: i32) -> Result<Self> {
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        letters.push(-g);
        Self::new(self.strands, letters)
    }

    /// Markov stabilization: one more strand and a trailing `σ_n^{±1}`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        Self {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// The word with `letters[at]` removed.
    pub fn without_letter(&self, at: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.remove(at);
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// The word with the sign of `letters[at]` flipped.
    pub fn with_letter_inverted(&self, at: usize) -> Self {
        let mut letters = self.letters.clone();
        letters[at] = -letters[at];
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Where the strand entering at each top position leaves at the bottom.
    ///
    /// Letters act left to right as transpositions of adjacent positions.
    /// Positions are 0-based here; [`ClosureSummary`] reports them 1-based.
    pub fn permutation(&self) -> Vec<usize> {
        let mut occupant: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            occupant.swap(i, i + 1);
        }
        let mut end = vec![0; self.strands];
        for (pos, &strand) in occupant.iter().enumerate() {
            end[strand] = pos;
        }
        end
    }

    pub fn closure_summary(&self) -> ClosureSummary {
        let perm = self.permutation();
        ClosureSummary {
            component_count: count_cycles(&perm),
            permutation: perm.iter().map(|&p| p + 1).collect(),
            writhe: self.writhe(),
        }
    }

    pub fn component_count(&self) -> usize {
        count_cycles(&self.permutation())
    }

    /// Fails unless the closure is a knot.
    pub fn require_knot(&self) -> Result<()> {
        match self.component_count() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }

    /// Genus of the closure of a positive braid that closes to a knot.
    ///
    /// Seifert's algorithm on a positive braid diagram gives a minimal
    /// genus surface: `g = (crossings - strands + 1) / 2`.
    pub fn positive_braid_genus(&self) -> Result<u64> {
        if let Some(&letter) = self.letters.iter().find(|&&l| l < 0) {
            return Err(Error::NotPositive { letter });
        }
        self.require_knot()?;
        let euler = self.letters.len() + 1 - self.strands;
        debug_assert!(euler.is_multiple_of(2));
        Ok((euler / 2) as u64)
    }
}

fn count_cycles(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = perm[p];
        }
    }
    cycles
}

/// Closure data of a braid word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureSummary {
    /// `permutation[p - 1]` is the bottom position reached from top position `p`.
    pub permutation: Vec<usize>,
    pub component_count: usize,
    pub writhe: i64,
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} on {} strands", self.strands)
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s, None)
    }
}

/// Parses the text form; infers `max|letter| + 1` strands when `strands` is `None`.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let letters = Parser {
        src: text.as_bytes(),
        pos: 0,
    }
    .word()?;
    match strands {
        Some(n) => BraidWord::new(n, letters),
        None => BraidWord::with_inferred_strands(letters),
    }
}

/// Canonical flat text form; inverse of [`parse_braid`] given the strand count.
pub fn render_braid(word: &BraidWord) -> String {
    word.to_string()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected '{}'", b as char))
        }
    }

    fn word(mut self) -> Result<Vec<i32>> {
        self.expect(b'[')?;
        let mut letters = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
        } else {
            loop {
                self.item(&mut letters)?;
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b']') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.fail("expected ',' or ']'"),
                }
            }
        }
        if self.peek().is_some() {
            return self.fail("trailing input after ']'");
        }
        Ok(letters)
    }

    fn item(&mut self, out: &mut Vec<i32>) -> Result<()> {
        if self.peek() != Some(b'(') {
            out.push(self.letter()?);
            return Ok(());
        }
        self.pos += 1;
        let mut group = vec![self.letter()?];
        loop {
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    group.push(self.letter()?);
                }
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                _ => return self.fail("expected ',' or ')'"),
            }
        }
        self.expect(b'^')?;
        let reps = self.integer(false)?;
        for _ in 0..reps {
            out.extend_from_slice(&group);
        }
        Ok(())
    }

    fn letter(&mut self) -> Result<i32> {
        let start = self.pos;
        let v = self.integer(true)?;
        if v == 0 {
            self.pos = start;
            return Err(Error::ZeroLetter);
        }
        i32::try_from(v).or_else(|_| self.fail("letter too large"))
    }

    fn integer(&mut self, signed: bool) -> Result<i64> {
        self.peek();
        let start = self.pos;
        if signed && matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return self.fail("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse::<i64>().or_else(|_| {
            self.pos = start;
            self.fail("integer out of range")
        })
    }
}

/// The braid families built in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `[3,2,2,1,3,2,2,3,2,(1,2)^{3n}]`, defined for `n ≥ 0`.
    Kn,
    /// `[(1,2,3)^4,2,1,3,2,2,3^{2m}]`, defined for `m ≥ 1`.
    A,
    /// `[(1,2,3)^{4n},2,1,3,2,2,3^6]`, defined for `n ≥ 1`.
    B,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Kn => "Kn",
            Family::A => "A",
            Family::B => "B",
        }
    }

    pub fn min_parameter(self) -> u32 {
        match self {
            Family::Kn => 0,
            Family::A | Family::B => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "Kn" | "kn" | "K" => Ok(Family::Kn),
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            other => Err(format!("unknown family '{other}' (expected Kn, A or B)")),
        }
    }
}

/// The four-strand word of a family member.
pub fn family_word(family: Family, parameter: u32) -> Result<BraidWord> {
    if parameter < family.min_parameter() {
        return Err(Error::ParameterOutOfRange {
            what: family.name(),
            value: parameter as i64,
        });
    }
    let reps = parameter as usize;
    let mut letters = Vec::new();
    match family {
        Family::Kn => {
            letters.extend_from_slice(&[3, 2, 2, 1, 3, 2, 2, 3, 2]);
            for _ in 0..3 * reps {
                letters.extend_from_slice(&[1, 2]);
            }
        }
        Family::A => {
            for _ in 0..4 {
                letters.extend_from_slice(&[1, 2, 3]);
            }
            letters.extend_from_slice(&[2, 1, 3, 2, 2]);
            letters.extend(std::iter::repeat_n(3, 2 * reps));
        }
        Family::B => {
            for _ in 0..4 * reps {
                letters.extend_from_slice(&[1, 2, 3]);
            }
            letters.extend_from_slice(&[2, 1, 3, 2, 2]);
            letters.extend(std::iter::repeat_n(3, 6));
        }
    }
    BraidWord::new(4, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_word() {
        let w = parse_braid("[3,2,2,1,3,2,2,3,2]", None).unwrap();
        assert_eq!(w.letters(), &[3, 2, 2, 1, 3, 2, 2, 3, 2]);
        assert_eq!(w.strands(), 4);
    }

    #[test]
    fn parses_identity_with_strands() {
        let w = parse_braid("[]", Some(4)).unwrap();
        assert!(w.is_empty());
        assert_eq!(w.strands(), 4);
        assert_eq!(parse_braid(" [ ] ", None).unwrap().strands(), 1);
    }

    #[test]
    fn expands_power_groups() {
        let w = parse_braid("[3,2,2,1,3,2,2,3,2,(1,2)^6]", None).unwrap();
        assert_eq!(w.len(), 21);
        assert_eq!(&w.letters()[9..], &[1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2]);
        let w = parse_braid("[ ( -1 , 2 ) ^ 2 , 3, (1)^0 ]", None).unwrap();
        assert_eq!(w.letters(), &[-1, 2, -1, 2, 3]);
    }

    #[test]
    fn syntax_errors() {
        for bad in [
            "",
            "3,2",
            "[3,2",
            "[3,,2]",
            "[(1,2)]",
            "[(1,2)^-1]",
            "[1] x",
            "[a]",
            "[(1,2)^]",
        ] {
            assert!(
                matches!(parse_braid(bad, None), Err(Error::Syntax { .. })),
                "{bad:?} should be a syntax error"
            );
        }
    }

    #[test]
    fn letter_errors() {
        assert_eq!(parse_braid("[1,0]", None), Err(Error::ZeroLetter));
        assert_eq!(
            parse_braid("[1,4]", Some(4)),
            Err(Error::LetterOutOfRange {
                letter: 4,
                strands: 4
            })
        );
        assert_eq!(parse_braid("[]", Some(0)), Err(Error::NoStrands));
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(render_braid(&BraidWord::identity(3).unwrap()), "[]");
        assert_eq!(
            render_braid(&family_word(Family::Kn, 0).unwrap()),
            "[3,2,2,1,3,2,2,3,2]"
        );
        assert_eq!(
            render_braid(&family_word(Family::Kn, 1).unwrap()),
            "[3,2,2,1,3,2,2,3,2,1,2,1,2,1,2]"
        );
    }

    #[test]
    fn k0_closure() {
        let s = family_word(Family::Kn, 0).unwrap().closure_summary();
        assert_eq!(s.permutation, vec![3, 1, 4, 2]);
        assert_eq!(s.component_count, 1);
        assert_eq!(s.writhe, 9);
    }

    #[test]
    fn identity_closure_is_unlink() {
        let s = BraidWord::identity(4).unwrap().closure_summary();
        assert_eq!(s.permutation, vec![1, 2, 3, 4]);
        assert_eq!(s.component_count, 4);
        assert_eq!(s.writhe, 0);
    }

    #[test]
    fn genus_values() {
        assert_eq!(
            parse_braid("[1,1,1]", None).unwrap().positive_braid_genus(),
            Ok(1)
        );
        let b = parse_braid("[(1,2,3)^4,2,1,3,2,2,(3)^6]", None).unwrap();
        assert_eq!(b.len(), 23);
        assert_eq!(b.positive_braid_genus(), Ok(10));
        assert_eq!(
            parse_braid("[1,-1,1]", None)
                .unwrap()
                .positive_braid_genus(),
            Err(Error::NotPositive { letter: -1 })
        );
        assert_eq!(
            parse_braid("[1,1]", None).unwrap().positive_braid_genus(),
            Err(Error::NotAKnot { components: 2 })
        );
    }

    #[test]
    fn family_words() {
        let a3 = family_word(Family::A, 3).unwrap();
        assert_eq!(a3.len(), 23);
        assert_eq!(&a3.letters()[17..], &[3; 6]);
        assert_eq!(a3, family_word(Family::B, 1).unwrap());
        let k2 = family_word(Family::Kn, 2).unwrap();
        assert_eq!((k2.len(), k2.writhe()), (21, 21));
        assert!(family_word(Family::A, 0).is_err());
        assert!(family_word(Family::B, 0).is_err());
    }

    #[test]
    fn kn_family_closes_to_knots() {
        for n in 0..=16 {
            let s = family_word(Family::Kn, n).unwrap().closure_summary();
            assert_eq!(s.component_count, 1);
            assert_eq!(s.writhe, 9 + 6 * n as i64);
            assert_eq!(
                family_word(Family::Kn, n).unwrap().positive_braid_genus(),
                Ok(3 * n as u64 + 3)
            );
        }
    }

    #[test]
    fn markov_helpers() {
        let w = parse_braid("[1,2]", None).unwrap();
        assert_eq!(w.conjugate(-2).unwrap().letters(), &[-2, 1, 2, 2]);
        let s = w.stabilize(false);
        assert_eq!((s.strands(), s.letters()), (4, &[1, 2, -3][..]));
        assert_eq!(w.rotate(1).letters(), &[2, 1]);
    }
}
