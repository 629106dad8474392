//! The shipped hexagon tilings `a` to `w` with their size multisets, and the
//! base pentagon tiling from which the t-perfect spiral is grown.

use crate::format::{self, ParseError};
use crate::tiling::Tiling;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AppendixRow {
    pub letter: char,
    pub n: usize,
    pub sizes: &'static [i64],
    pub t_perfect: bool,
    /// Number of distinct sizes.
    pub s: usize,
}

pub const ROWS: [AppendixRow; 23] = [
    AppendixRow { letter: 'a', n: 9, sizes: &[1, 3, 3, 3, 4, 4, 5, 5, 6], t_perfect: false, s: 5 },
    AppendixRow { letter: 'b', n: 10, sizes: &[1, 1, 4, 4, 4, 5, 6, 6, 7, 8], t_perfect: false, s: 6 },
    AppendixRow { letter: 'c', n: 11, sizes: &[2, 2, 3, 5, 5, 7, 7, 8, 8, 9, 11], t_perfect: true, s: 7 },
    AppendixRow { letter: 'd', n: 11, sizes: &[1, 3, 4, 4, 4, 7, 7, 8, 9, 9, 10], t_perfect: false, s: 7 },
    AppendixRow { letter: 'e', n: 12, sizes: &[1, 3, 3, 4, 7, 7, 7, 10, 11, 12, 12, 13], t_perfect: false, s: 8 },
    AppendixRow { letter: 'f', n: 12, sizes: &[1, 1, 1, 2, 7, 7, 7, 9, 10, 11, 12, 14], t_perfect: false, s: 8 },
    AppendixRow { letter: 'g', n: 13, sizes: &[2, 2, 2, 4, 5, 9, 9, 11, 13, 14, 14, 15, 19], t_perfect: false, s: 9 },
    AppendixRow { letter: 'h', n: 14, sizes: &[3, 3, 3, 5, 5, 6, 11, 14, 16, 16, 17, 20, 21, 26], t_perfect: false, s: 10 },
    AppendixRow { letter: 'i', n: 14, sizes: &[2, 3, 3, 3, 6, 8, 11, 11, 14, 17, 19, 21, 21, 23], t_perfect: false, s: 10 },
    AppendixRow { letter: 'j', n: 14, sizes: &[1, 4, 5, 5, 6, 6, 11, 11, 16, 17, 20, 20, 23, 24], t_perfect: true, s: 10 },
    AppendixRow { letter: 'k', n: 15, sizes: &[1, 2, 2, 3, 3, 4, 5, 8, 8, 12, 12, 13, 15, 16, 17], t_perfect: true, s: 11 },
    AppendixRow { letter: 'l', n: 16, sizes: &[3, 5, 8, 8, 9, 11, 11, 11, 14, 22, 25, 30, 34, 34, 38, 43], t_perfect: false, s: 12 },
    AppendixRow { letter: 'm', n: 17, sizes: &[3, 3, 7, 10, 12, 13, 13, 16, 16, 19, 29, 35, 42, 47, 47, 52, 59], t_perfect: true, s: 13 },
    AppendixRow { letter: 'n', n: 18, sizes: &[2, 6, 11, 13, 13, 15, 15, 17, 17, 23, 32, 47, 55, 55, 60, 73, 78, 84], t_perfect: true, s: 14 },
    AppendixRow { letter: 'o', n: 19, sizes: &[2, 2, 8, 15, 17, 19, 19, 21, 23, 23, 31, 44, 63, 75, 75, 82, 99, 106, 114], t_perfect: true, s: 15 },
    AppendixRow { letter: 'p', n: 21, sizes: &[1, 1, 1, 2, 7, 13, 15, 16, 17, 18, 20, 20, 27, 38, 55, 65, 65, 71, 86, 92, 99], t_perfect: false, s: 17 },
    AppendixRow { letter: 'q', n: 22, sizes: &[8, 8, 11, 32, 33, 41, 43, 43, 49, 49, 54, 54, 57, 65, 111, 160, 165, 208, 209, 250, 251, 283], t_perfect: true, s: 18 },
    AppendixRow { letter: 'r', n: 24, sizes: &[8, 8, 8, 16, 19, 56, 57, 73, 75, 75, 81, 89, 94, 94, 97, 113, 191, 280, 285, 360, 361, 434, 435, 491], t_perfect: false, s: 20 },
    AppendixRow { letter: 's', n: 25, sizes: &[11, 11, 11, 19, 19, 22, 76, 77, 96, 98, 109, 115, 115, 120, 131, 134, 153, 265, 380, 385, 494, 495, 591, 592, 668], t_perfect: false, s: 21 },
    AppendixRow { letter: 't', n: 16, sizes: &[2, 2, 5, 5, 7, 9, 9, 12, 21, 21, 30, 30, 33, 38, 41, 43], t_perfect: true, s: 11 },
    AppendixRow { letter: 'u', n: 20, sizes: &[1, 1, 4, 23, 24, 25, 25, 26, 27, 27, 31, 31, 53, 78, 84, 103, 115, 115, 127, 150], t_perfect: true, s: 15 },
    AppendixRow { letter: 'v', n: 21, sizes: &[1, 1, 4, 4, 31, 32, 33, 33, 34, 35, 39, 39, 43, 73, 106, 112, 139, 155, 155, 171, 202], t_perfect: true, s: 16 },
    AppendixRow { letter: 'w', n: 23, sizes: &[9, 9, 11, 11, 44, 47, 47, 53, 58, 62, 62, 69, 69, 71, 80, 140, 202, 209, 264, 267, 314, 317, 361], t_perfect: true, s: 18 },
];

macro_rules! sources {
    ($($l:literal),*) => {
        &[$(($l, include_str!(concat!("../data/appendix/", $l, ".tritile")))),*]
    };
}

const SOURCES: &[(&str, &str)] =
    sources!("a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p", "q", "r", "s", "t", "u", "v", "w");

const Q12: &str = include_str!("../data/q12.tritile");

pub fn row(letter: char) -> Option<&'static AppendixRow> {
    ROWS.iter().find(|r| r.letter == letter)
}

/// The shipped `.tritile` text for a row.
pub fn source(letter: char) -> Option<&'static str> {
    SOURCES.iter().find(|(l, _)| l.starts_with(letter)).map(|(_, s)| *s)
}

pub fn tiling(letter: char) -> Option<Result<Tiling, ParseError>> {
    source(letter).map(format::parse)
}

/// The twelve-tile t-perfect pentagon tiling with sides 20, 19, 9, 11, 8.
pub fn q12_source() -> &'static str {
    Q12
}

pub fn q12() -> Result<Tiling, ParseError> {
    format::parse(Q12)
}
