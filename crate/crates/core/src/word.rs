//! Reduced words in the free group on the two generators `x` and `y`.
//!
//! Words are stored freely reduced; every constructor reduces eagerly.
//! The surface syntax is a run of `x`, `y` letters, each optionally followed
//! by `^-1`, with `X` and `Y` accepted as shorthand for the inverses.
//! Whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    X,
    Y,
}

impl Generator {
    fn symbol(self) -> char {
        match self {
            Generator::X => 'x',
            Generator::Y => 'y',
        }
    }
}

/// A generator raised to `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    inverse: bool,
}

impl Letter {
    pub const fn new(generator: Generator, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub const fn pos(generator: Generator) -> Self {
        Letter::new(generator, false)
    }

    pub const fn neg(generator: Generator) -> Self {
        Letter::new(generator, true)
    }

    /// Builds a letter from a sign; anything other than `+1`/`-1` is rejected.
    pub fn with_sign(generator: Generator, sign: i32) -> Option<Self> {
        match sign {
            1 => Some(Letter::pos(generator)),
            -1 => Some(Letter::neg(generator)),
            _ => None,
        }
    }

    pub fn sign(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.generator.symbol())?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Free reduction of an arbitrary letter sequence (single stack pass).
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last() {
                Some(&top) if top.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
    }

    pub fn generator(g: Generator) -> Self {
        Word {
            letters: vec![Letter::pos(g)],
        }
    }

    /// `g^n` for any integer `n`.
    pub fn power_of(g: Generator, n: i64) -> Self {
        let l = if n >= 0 { Letter::pos(g) } else { Letter::neg(g) };
        Word {
            letters: vec![l; n.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The same letters in reverse order with exponents kept.
    ///
    /// A reversal of a reduced word is still reduced.
    pub fn spelled_backwards(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn pow(&self, n: usize) -> Word {
        let mut out = Word::identity();
        for _ in 0..n {
            out = out.concat(self);
        }
        out
    }

    pub fn exponent_sum(&self, g: Generator) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == g)
            .map(|l| l.sign() as i64)
            .sum()
    }

    /// Image in the abelianization of a knot group, where all meridians agree.
    pub fn total_exponent(&self) -> i64 {
        self.letters.iter().map(|l| l.sign() as i64).sum()
    }

    pub fn parse(text: &str) -> Result<Word, WordParseError> {
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let (pos, c) = chars[i];
            i += 1;
            let letter = match c {
                c if c.is_whitespace() => continue,
                'x' => Letter::pos(Generator::X),
                'y' => Letter::pos(Generator::Y),
                'X' => Letter::neg(Generator::X),
                'Y' => Letter::neg(Generator::Y),
                _ => return Err(WordParseError::UnexpectedChar { ch: c, pos }),
            };
            let letter = if chars.get(i).map(|p| p.1) == Some('^') {
                let exp: String = chars[i..].iter().take(3).map(|p| p.1).collect();
                if exp != "^-1" || letter.is_inverse() {
                    return Err(WordParseError::BadExponent {
                        pos: chars[i].0,
                    });
                }
                i += 3;
                letter.inverse()
            } else {
                letter
            };
            letters.push(letter);
        }
        Ok(Word::reduce(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        // "1" is how the identity prints.
        if s.trim() == "1" {
            return Ok(Word::identity());
        }
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordParseError {
    #[error("unexpected character {ch:?} at byte {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("malformed exponent at byte {pos}; only ^-1 on a lowercase letter is allowed")]
    BadExponent { pos: usize },
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Generator::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn reduce_cancels_adjacent_pairs() {
        let r = Word::reduce([Letter::pos(X), Letter::neg(X), Letter::pos(Y)]);
        assert_eq!(r.letters(), &[Letter::pos(Y)]);
        assert!(Word::reduce([]).is_empty());
        let nested = Word::reduce([
            Letter::pos(X),
            Letter::pos(Y),
            Letter::neg(Y),
            Letter::neg(X),
        ]);
        assert!(nested.is_empty());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("xy^-1").invert(), w("yx^-1"));
        assert_eq!(Word::identity().invert(), Word::identity());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            w("yX").letters(),
            &[Letter::pos(Y), Letter::neg(X)]
        );
        assert!(w("x x^-1").is_empty());
        assert_eq!(
            w("yx^-1y^-1x").letters(),
            &[Letter::pos(Y), Letter::neg(X), Letter::neg(Y), Letter::pos(X)]
        );
    }

    #[test]
    fn parse_errors_carry_position() {
        assert_eq!(
            Word::parse("xyz"),
            Err(WordParseError::UnexpectedChar { ch: 'z', pos: 2 })
        );
        assert_eq!(Word::parse("x^2"), Err(WordParseError::BadExponent { pos: 1 }));
        assert_eq!(Word::parse("X^-1"), Err(WordParseError::BadExponent { pos: 1 }));
    }

    #[test]
    fn identity_prints_and_parses() {
        assert_eq!(Word::identity().to_string(), "1");
        assert_eq!("1".parse::<Word>().unwrap(), Word::identity());
    }

    fn letter() -> impl Strategy<Value = Letter> {
        (prop::bool::ANY, prop::bool::ANY).prop_map(|(g, inv)| {
            Letter::new(if g { X } else { Y }, inv)
        })
    }

    fn letters() -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec(letter(), 0..40)
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(ls in letters()) {
            let once = Word::reduce(ls);
            let twice = Word::reduce(once.letters().to_vec());
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn exponent_sum_is_additive(a in letters(), b in letters()) {
            let (a, b) = (Word::reduce(a), Word::reduce(b));
            let ab = a.concat(&b);
            for g in [X, Y] {
                prop_assert_eq!(ab.exponent_sum(g), a.exponent_sum(g) + b.exponent_sum(g));
            }
        }

        #[test]
        fn invert_is_anti_homomorphic_involution(a in letters(), b in letters()) {
            let (a, b) = (Word::reduce(a), Word::reduce(b));
            prop_assert_eq!(a.invert().invert(), a.clone());
            prop_assert_eq!(a.concat(&b).invert(), b.invert().concat(&a.invert()));
            prop_assert!(a.concat(&a.invert()).is_empty());
        }

        #[test]
        fn format_parse_round_trip(a in letters()) {
            let a = Word::reduce(a);
            prop_assert_eq!(a.to_string().parse::<Word>().unwrap(), a);
        }
    }
}
