//! The plain ICCMA text format: a `p af n` header, then one `i j` line per
//! attack with 1-based argument numbers. Lines starting with `#` are
//! comments.

use std::fmt::Write;

use super::{AfError, ArgId, ArgumentationFramework};

/// Parses a framework; arguments are named `"1"` through `"n"`.
pub fn parse(text: &str) -> Result<ArgumentationFramework, AfError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| AfError::Parse("missing `p af n` header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["p", "af", n] => n
            .parse::<usize>()
            .map_err(|_| AfError::Parse(format!("bad argument count `{n}`")))?,
        _ => return Err(AfError::Parse(format!("bad header `{header}`"))),
    };
    let number = |tok: &str, line: usize| -> Result<ArgId, AfError> {
        match tok.parse::<usize>() {
            Ok(i) if (1..=n).contains(&i) => Ok(ArgId::new(i.to_string())),
            _ => Err(AfError::Parse(format!("line {}: bad argument `{tok}`", line + 1))),
        }
    };
    let mut attacks = Vec::new();
    for (no, line) in lines {
        match line.split_whitespace().collect::<Vec<_>>().as_slice() {
            [i, j] => attacks.push((number(i, no)?, number(j, no)?)),
            _ => return Err(AfError::Parse(format!("line {}: expected `i j`", no + 1))),
        }
    }
    ArgumentationFramework::new((1..=n).map(|i| ArgId::new(i.to_string())), attacks)
}

/// Writes `af`, numbering arguments by their position in
/// [`ArgumentationFramework::arguments`].
pub fn write(af: &ArgumentationFramework) -> String {
    let mut out = format!("p af {}\n", af.len());
    for (from, to) in af.attacks() {
        let i = af.idx(from).expect("attack endpoint") + 1;
        let j = af.idx(to).expect("attack endpoint") + 1;
        writeln!(out, "{i} {j}").expect("writing to a String");
    }
    out
}
