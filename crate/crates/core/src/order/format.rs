//! `.poset` text files and Graphviz export.
//!
//! ```text
//! # comment
//! poset 3
//! 0 2
//! 1 2
//! ```
//!
//! Each `a b` line states `a < b` (0-based). Separation-system files add
//! `inv a b` lines, handled by [`parse_poset_lines`] when asked to.

use std::fmt::Write as _;

use super::poset::Poset;
use crate::error::{Error, Result};
use crate::Elem;

/// Raw content of a `.poset` file, before closure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PosetText {
    pub n: usize,
    pub relations: Vec<(Elem, Elem)>,
    pub involution: Vec<(Elem, Elem)>,
}

/// Strips `#` comments and blank lines, yielding `(line number, content)`.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub(crate) fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, got {tok:?}")))
}

/// Parses a `keyword <n>` header line.
pub(crate) fn parse_header(line: usize, content: &str, keyword: &str) -> Result<usize> {
    match content.split_whitespace().collect::<Vec<_>>().as_slice() {
        [k, n] if *k == keyword => parse_index(n, line),
        _ => Err(Error::parse(line, format!("expected `{keyword} <n>`, got {content:?}"))),
    }
}

/// Parses the lines of a `.poset` file. `inv a b` lines are accepted only
/// when `allow_involution` is set.
pub fn parse_poset_lines(text: &str, allow_involution: bool) -> Result<PosetText> {
    let mut iter = content_lines(text);
    let (hline, header) = iter
        .next()
        .ok_or_else(|| Error::parse(0, "missing `poset <n>` header"))?;
    let n = parse_header(hline, header, "poset")?;
    let mut out = PosetText {
        n,
        ..PosetText::default()
    };
    for (line, content) in iter {
        let toks: Vec<&str> = content.split_whitespace().collect();
        let check = |e: usize| {
            if e < n {
                Ok(e)
            } else {
                Err(Error::parse(line, format!("element {e} out of range for {n} elements")))
            }
        };
        match toks.as_slice() {
            ["inv", a, b] if allow_involution => {
                let a = check(parse_index(a, line)?)?;
                let b = check(parse_index(b, line)?)?;
                out.involution.push((a, b));
            }
            [a, b] => {
                let a = check(parse_index(a, line)?)?;
                let b = check(parse_index(b, line)?)?;
                out.relations.push((a, b));
            }
            _ => return Err(Error::parse(line, format!("unexpected line {content:?}"))),
        }
    }
    Ok(out)
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let raw = parse_poset_lines(text, false)?;
    Poset::from_relations(raw.n, raw.relations)
}

/// Writes the cover relation; re-parsing yields an identical poset.
pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("poset {}\n", p.len());
    for (a, b) in p.covers() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

/// Hasse diagram in DOT, drawn bottom to top. `label` names the nodes;
/// `ranks` optionally groups elements onto shared horizontal levels.
pub fn to_dot(p: &Poset, label: &dyn Fn(Elem) -> String, ranks: &[Vec<Elem>]) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in p.elements() {
        let _ = writeln!(out, "  {x} [label=\"{}\"];", label(x).replace('"', "\\\""));
    }
    for rank in ranks {
        let ids: Vec<String> = rank.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
    }
    for (a, b) in p.covers() {
        let _ = writeln!(out, "  {a} -> {b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_relations() {
        let p = parse_poset("# a V\nposet 3\n0 2  # left\n\n1 2\n").unwrap();
        assert_eq!(p.covers().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn rejects_bad_header_and_ranges() {
        assert!(matches!(parse_poset("graph 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_poset("poset 2\n0 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_poset("poset 2\ninv 0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poset(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn involution_lines() {
        let raw = parse_poset_lines("poset 2\ninv 0 1\n", true).unwrap();
        assert_eq!(raw.involution, vec![(0, 1)]);
    }

    #[test]
    fn dot_lists_covers_upward() {
        let p = parse_poset("poset 3\n0 1\n1 2\n0 2\n").unwrap();
        let dot = to_dot(&p, &|x| format!("e{x}"), &[vec![0]]);
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("0 -> 1;") && dot.contains("1 -> 2;"));
        assert!(!dot.contains("0 -> 2;"));
        assert!(dot.contains("label=\"e2\""));
        assert!(dot.contains("{ rank=same; 0; }"));
    }
}
