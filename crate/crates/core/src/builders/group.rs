//! Finite groups given by Cayley tables, and the `.grp` text format.
//!
//! ```text
//! group C2
//! order 2
//! elements e g
//! table
//! e g
//! g e
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A validated multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    exponent: u32,
}

impl GroupTable {
    /// Validates a table with `table[i][j]` the index of `g_i g_j`.
    pub fn new(name: impl Into<String>, names: Vec<String>, table: Vec<Vec<usize>>) -> Result<GroupTable> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidGroup("a group needs at least one element".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGroup(format!("table must be {n}x{n}")));
        }
        if table.iter().flatten().any(|&k| k >= n) {
            return Err(Error::InvalidGroup("table entry out of range".into()));
        }
        if let Some((i, j)) = latin_square_violation(&table) {
            return Err(Error::InvalidGroup(format!("not a Latin square: entry {} repeats at row {i}", names[j])));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails for ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|g| (0..n).find(|&h| table[g][h] == identity).expect("Latin square has every entry in each row"))
            .collect();
        let mut group = GroupTable { name: name.into(), names, table, identity, inverse, exponent: 1 };
        group.exponent = (0..n).fold(1u32, |acc, g| acc.lcm(&(group.element_order(g) as u32)));
        Ok(group)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][g];
            k += 1;
        }
        k
    }

    /// `h g h^-1`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inverse(h))
    }

    /// Conjugacy classes, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|h| self.conjugate(g, h)).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.order()).filter(|&h| self.mul(g, h) == self.mul(h, g)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|g| self.centralizer(g).len() == self.order())
    }
}

fn latin_square_violation(table: &[Vec<usize>]) -> Option<(usize, usize)> {
    let n = table.len();
    for (i, row) in table.iter().enumerate() {
        let mut seen = vec![false; n];
        for &k in row {
            if std::mem::replace(&mut seen[k], true) {
                return Some((i, k));
            }
        }
    }
    for j in 0..n {
        let mut seen = vec![false; n];
        for (i, row) in table.iter().enumerate() {
            if std::mem::replace(&mut seen[row[j]], true) {
                return Some((i, row[j]));
            }
        }
    }
    None
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Parses a `.grp` document and validates the group axioms.
pub fn parse_group(text: &str) -> Result<GroupTable> {
    let mut name = None;
    let mut order: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut rows: Option<Vec<Vec<usize>>> = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(col, head)) = toks.first() else { continue };
        if let Some(rows) = rows.as_mut() {
            let n = order.expect("checked before `table`");
            if rows.len() == n {
                return Err(parse_err(lineno, col, format!("table already has {n} rows")));
            }
            if toks.len() != n {
                return Err(parse_err(lineno, col, format!("row has {} entries, expected {n}", toks.len())));
            }
            let mut row = Vec::with_capacity(n);
            for (c, tok) in &toks {
                let k = index.get(*tok).ok_or_else(|| parse_err(lineno, *c, format!("unknown element `{tok}`")))?;
                row.push(*k);
            }
            rows.push(row);
            continue;
        }
        let args = &toks[1..];
        match head {
            "group" => {
                let (_, n) = args.first().ok_or_else(|| parse_err(lineno, col, "missing group name"))?;
                name = Some((*n).to_string());
            }
            "order" => {
                let (c, n) = args.first().ok_or_else(|| parse_err(lineno, col, "missing order"))?;
                let n: usize = n.parse().map_err(|_| parse_err(lineno, *c, format!("bad order `{n}`")))?;
                if n == 0 {
                    return Err(parse_err(lineno, *c, "order must be positive"));
                }
                order = Some(n);
            }
            "elements" => {
                let n = order.ok_or_else(|| parse_err(lineno, col, "`elements` before `order`"))?;
                if args.len() != n {
                    return Err(parse_err(lineno, col, format!("{} element names given, order is {n}", args.len())));
                }
                let mut list = Vec::with_capacity(n);
                for (c, tok) in args {
                    if index.insert((*tok).to_string(), list.len()).is_some() {
                        return Err(parse_err(lineno, *c, format!("duplicate element name `{tok}`")));
                    }
                    list.push((*tok).to_string());
                }
                names = Some(list);
            }
            "table" => {
                if names.is_none() {
                    return Err(parse_err(lineno, col, "`table` before `elements`"));
                }
                if let Some((c, _)) = args.first() {
                    return Err(parse_err(lineno, *c, "unexpected text after `table`"));
                }
                rows = Some(Vec::new());
            }
            other => return Err(parse_err(lineno, col, format!("unknown keyword `{other}`"))),
        }
    }

    let name = name.ok_or_else(|| parse_err(1, 1, "missing `group <name>` line"))?;
    let names = names.ok_or_else(|| parse_err(last_line.max(1), 1, "missing `elements` line"))?;
    let rows = rows.ok_or_else(|| parse_err(last_line.max(1), 1, "missing `table` section"))?;
    if rows.len() != names.len() {
        return Err(parse_err(last_line.max(1), 1, format!("table has {} rows, expected {}", rows.len(), names.len())));
    }
    GroupTable::new(name, names, rows)
}

/// Serializes to the `.grp` format.
pub fn write_group(g: &GroupTable) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group {}", g.name);
    let _ = writeln!(out, "order {}", g.order());
    let _ = writeln!(out, "elements {}", g.names.join(" "));
    let _ = writeln!(out, "table");
    for row in &g.table {
        let cells: Vec<&str> = row.iter().map(|&k| g.names[k].as_str()).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

/// Names accepted by [`builtin_group`].
pub const BUILTIN_GROUPS: &[&str] = &["C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8"];

type Product = Box<dyn Fn(usize, usize) -> usize>;

/// `.grp` text for one of the built-in groups.
pub fn builtin_group_text(name: &str) -> Option<String> {
    let (names, mul): (Vec<String>, Product) = match name {
        "C2" | "C3" | "C4" => {
            let n: usize = name[1..].parse().expect("literal");
            let names = (0..n).map(|k| if k == 0 { "e".to_string() } else { format!("a{k}") }).collect();
            (names, Box::new(move |a, b| (a + b) % n))
        }
        "C2xC2" => {
            let names = ["e", "a", "b", "ab"].map(String::from).to_vec();
            (names, Box::new(|a, b| a ^ b))
        }
        "S3" => {
            let perms = permutations3();
            let names = perms.iter().map(cycle_name).collect();
            let compose = move |a: usize, b: usize| {
                // (pq)(x) = p(q(x))
                let (p, q) = (perms[a], perms[b]);
                let r = [p[q[0]], p[q[1]], p[q[2]]];
                perms.iter().position(|s| *s == r).expect("closed under composition")
            };
            (names, Box::new(compose))
        }
        "D4" => {
            // r^i s^j at index i + 4j, with s r s = r^-1
            let names = ["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"].map(String::from).to_vec();
            let mul = |a: usize, b: usize| {
                let (i, j, k, l) = (a % 4, a / 4, b % 4, b / 4);
                let rot = if j == 0 { (i + k) % 4 } else { (i + 4 - k) % 4 };
                rot + 4 * ((j + l) % 2)
            };
            (names, Box::new(mul))
        }
        "Q8" => {
            // ±1, ±i, ±j, ±k at index 2u + sign
            let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
            let mul = |a: usize, b: usize| {
                let (u, v) = (a / 2, b / 2);
                let (w, flip) = quaternion_units(u, v);
                2 * w + ((a % 2 + b % 2 + flip) % 2)
            };
            (names, Box::new(mul))
        }
        _ => return None,
    };
    let n = names.len();
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
    let group = GroupTable { name: name.to_string(), names, table, identity: 0, inverse: vec![], exponent: 0 };
    Some(write_group(&group))
}

/// A built-in group, produced by parsing its `.grp` text.
pub fn builtin_group(name: &str) -> Option<GroupTable> {
    builtin_group_text(name).map(|text| parse_group(&text).expect("built-in tables are valid"))
}

fn permutations3() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]]
}

fn cycle_name(p: &[usize; 3]) -> String {
    match p {
        [0, 1, 2] => "e".into(),
        [1, 0, 2] => "(01)".into(),
        [2, 1, 0] => "(02)".into(),
        [0, 2, 1] => "(12)".into(),
        [1, 2, 0] => "(012)".into(),
        _ => "(021)".into(),
    }
}

/// Product of quaternion units `1, i, j, k` (indices 0..4) as
/// `(unit, sign flip)`.
fn quaternion_units(u: usize, v: usize) -> (usize, usize) {
    match (u, v) {
        (0, v) => (v, 0),
        (u, 0) => (u, 0),
        (u, v) if u == v => (0, 1),
        (1, 2) => (3, 0),
        (2, 3) => (1, 0),
        (3, 1) => (2, 0),
        (2, 1) => (3, 1),
        (3, 2) => (1, 1),
        (1, 3) => (2, 1),
        _ => unreachable!("units are 0..4"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_parse_with_expected_exponents() {
        let expected =
            [("C2", 2, 2), ("C3", 3, 3), ("C4", 4, 4), ("C2xC2", 4, 2), ("S3", 6, 6), ("D4", 8, 4), ("Q8", 8, 4)];
        for (name, order, exponent) in expected {
            let g = builtin_group(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert_eq!(g.exponent(), exponent, "{name}");
        }
    }

    #[test]
    fn s3_matches_permutation_composition() {
        // oracle: compose permutations directly and look the result up by name
        let g = builtin_group("S3").unwrap();
        let perms = permutations3();
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                let r = [p[q[0]], p[q[1]], p[q[2]]];
                assert_eq!(g.names()[g.mul(a, b)], cycle_name(&r));
            }
        }
        assert!(!g.is_abelian());
        let sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
    }

    #[test]
    fn q8_relations() {
        let g = builtin_group("Q8").unwrap();
        let idx = |s: &str| g.names().iter().position(|n| n == s).unwrap();
        let (i, j, k, m1) = (idx("i"), idx("j"), idx("k"), idx("-1"));
        assert_eq!(g.mul(i, i), m1);
        assert_eq!(g.mul(j, j), m1);
        assert_eq!(g.mul(k, k), m1);
        assert_eq!(g.mul(g.mul(i, j), k), m1);
        assert_eq!(g.conjugacy_classes().len(), 5);
    }

    #[test]
    fn d4_has_five_classes() {
        let g = builtin_group("D4").unwrap();
        assert_eq!(g.conjugacy_classes().len(), 5);
        assert!(!g.is_abelian());
    }

    #[test]
    fn exponent_divides_order_factorial() {
        for name in BUILTIN_GROUPS {
            let g = builtin_group(name).unwrap();
            let factorial: u64 = (1..=g.order() as u64).product();
            assert_eq!(factorial % g.exponent() as u64, 0);
        }
    }

    #[test]
    fn write_parse_roundtrip() {
        for name in BUILTIN_GROUPS {
            let g = builtin_group(name).unwrap();
            assert_eq!(parse_group(&write_group(&g)).unwrap(), g);
        }
    }

    #[test]
    fn latin_square_violation_is_reported() {
        let text = "group bad\norder 2\nelements e g\ntable\ne e\ng e\n";
        assert!(matches!(parse_group(text), Err(Error::InvalidGroup(m)) if m.contains("Latin")));
    }

    #[test]
    fn unknown_name_has_position() {
        let text = "group bad\norder 2\nelements e g\ntable\ne g\ng  x # typo\n";
        match parse_group(text) {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!((line, column), (6, 4));
                assert!(message.contains("`x`"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn associativity_violation_is_reported() {
        // a Latin square with identity e that is not associative (order 5 loop)
        let names = ["e", "a", "b", "c", "d"];
        let rows = ["e a b c d", "a e c d b", "b d e a c", "c b d e a", "d c a b e"];
        let mut text = format!("group loop\norder 5\nelements {}\ntable\n", names.join(" "));
        for r in rows {
            text.push_str(r);
            text.push('\n');
        }
        assert!(matches!(parse_group(&text), Err(Error::InvalidGroup(m)) if m.contains("associativity")));
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(parse_group("order 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_group("group g\norder 2\nelements e\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_group("group g\norder 2\nelements e g\ntable\ne g\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_group("group g\nsize 2\n"), Err(Error::Parse { line: 2, column: 1, .. })));
    }
}
