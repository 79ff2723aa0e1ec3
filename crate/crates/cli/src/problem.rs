//! Problem files.
//!
//! ```text
//! file       = { statement | comment | blank } ;
//! comment    = "#" { any character } newline ;
//! statement  = ring | order | ideal | poly | witness | weight ;
//! ring       = "ring:" "p=" integer ";" "vars=" name { "," name } [ ";" ] newline ;
//! order      = "order:" ( "lex" | "grevlex" | weightord ) [ ";" ] newline ;
//! weightord  = "weight(" integer { "," integer } [ ";" "tie=" ( "lex" | "grevlex" ) ] ")" ;
//! ideal      = "ideal" name ":" polynomial { "," polynomial } ";" ;
//! poly       = "poly" name ":" polynomial ";" ;
//! witness    = "witness" name ":" polynomial ";" ;
//! weight     = "weight" name ":" integer { "," integer } ";" ;
//! name       = letter { letter | digit | "_" } ;
//! ```
//!
//! `ring` must precede every statement that contains a polynomial.
//! Statements ending in `;` may span lines. A `witness` names the ideal it
//! belongs to. Coefficients are reduced mod p.

use std::fmt;
use std::sync::Arc;

use sqfree_core::parse::{parse_polynomial_at, Origin};
use sqfree_core::{Error, MonomialOrder, Polynomial, Result, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct NamedIdeal {
    pub name: String,
    pub generators: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProblemFile {
    pub ring: Arc<Ring>,
    pub order: MonomialOrder,
    pub ideals: Vec<NamedIdeal>,
    pub polys: Vec<(String, Polynomial)>,
    pub witnesses: Vec<(String, Polynomial)>,
    pub weights: Vec<(String, Vec<u32>)>,
}

impl ProblemFile {
    pub fn ideal(&self, name: &str) -> Option<&NamedIdeal> {
        self.ideals.iter().find(|i| i.name == name)
    }

    pub fn poly(&self, name: &str) -> Option<&Polynomial> {
        self.polys.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn witness(&self, ideal: &str) -> Option<&Polynomial> {
        self.witnesses.iter().find(|(n, _)| n == ideal).map(|(_, f)| f)
    }

    pub fn weight(&self, name: &str) -> Option<&[u32]> {
        self.weights.iter().find(|(n, _)| n == name).map(|(_, w)| w.as_slice())
    }
}

fn err_at(pos: Origin, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn origin(&self, offset: usize) -> Origin {
        let before = &self.src[..offset];
        let line = before.matches('\n').count() + 1;
        let column = match before.rfind('\n') {
            Some(nl) => before[nl + 1..].chars().count() + 1,
            None => before.chars().count() + 1,
        };
        Origin { line, column }
    }

    /// Skips whitespace and comments.
    fn skip_blank(&mut self) {
        loop {
            let rest = &self.src[self.pos..];
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            if trimmed.starts_with('#') {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                return;
            }
        }
    }

    /// Text up to the end of the line (comment stripped), advancing past it.
    fn rest_of_line(&mut self) -> (usize, &'a str) {
        let start = self.pos;
        let rest = &self.src[start..];
        let end = rest.find('\n').unwrap_or(rest.len());
        self.pos = start + end;
        let line = &rest[..end];
        let line = line.find('#').map_or(line, |h| &line[..h]);
        (start, line)
    }

    /// Text up to the next `;` outside a comment, advancing past it.
    fn until_semicolon(&mut self, stmt: usize) -> Result<(usize, String)> {
        let start = self.pos;
        let mut text = String::new();
        let mut in_comment = false;
        for (i, c) in self.src[start..].char_indices() {
            match c {
                '\n' => {
                    in_comment = false;
                    text.push('\n');
                }
                _ if in_comment => text.push(' '),
                '#' => {
                    in_comment = true;
                    text.push(' ');
                }
                ';' => {
                    self.pos = start + i + 1;
                    return Ok((start, text));
                }
                _ => text.push(c),
            }
        }
        Err(err_at(self.origin(stmt), "statement is missing its terminating `;`"))
    }

    fn word(&mut self) -> &'a str {
        let rest = &self.src[self.pos..];
        let end = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_' || c == '-'))
            .unwrap_or(rest.len());
        self.pos += end;
        &rest[..end]
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `text` on commas, keeping the byte offset of each piece.
fn split_commas(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == ',' {
            out.push((start, &text[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &text[start..]));
    out
}

fn parse_ring(cur: &Cursor, start: usize, line: &str) -> Result<Arc<Ring>> {
    let pos = cur.origin(start);
    let body = line.trim().trim_end_matches(';');
    let mut p = None;
    let mut vars = None;
    for part in body.split(';') {
        let part = part.trim();
        if let Some(v) = part.strip_prefix("p=") {
            let v: u64 = v
                .trim()
                .parse()
                .map_err(|_| err_at(pos, format!("characteristic `{}` is not an integer", v.trim())))?;
            p = Some(v);
        } else if let Some(v) = part.strip_prefix("vars=") {
            vars = Some(v.split(',').map(|s| s.trim().to_string()).collect::<Vec<_>>());
        } else if !part.is_empty() {
            return Err(err_at(pos, format!("unexpected `{part}` in ring header")));
        }
    }
    let p = p.ok_or_else(|| err_at(pos, "ring header needs `p=`"))?;
    let vars = vars.ok_or_else(|| err_at(pos, "ring header needs `vars=`"))?;
    Ring::new(p, &vars).map_err(|e| err_at(pos, e.to_string()))
}

fn parse_weight_list(cur: &Cursor, start: usize, text: &str) -> Result<Vec<u32>> {
    split_commas(text)
        .into_iter()
        .map(|(off, w)| {
            let t = w.trim();
            match t.parse::<u32>() {
                Ok(v) if v > 0 => Ok(v),
                _ => {
                    let lead = w.len() - w.trim_start().len();
                    Err(err_at(cur.origin(start + off + lead), format!("weight `{t}` is not a positive integer")))
                }
            }
        })
        .collect()
}

fn parse_poly_list(ring: &Arc<Ring>, cur: &Cursor, start: usize, text: &str) -> Result<Vec<Polynomial>> {
    split_commas(text)
        .into_iter()
        .map(|(off, piece)| {
            if piece.trim().is_empty() {
                return Err(err_at(cur.origin(start + off), "empty polynomial"));
            }
            parse_polynomial_at(ring, piece, cur.origin(start + off))
        })
        .collect()
}

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let mut cur = Cursor { src: text, pos: 0 };
    let mut ring: Option<Arc<Ring>> = None;
    let mut order = None;
    let mut ideals: Vec<NamedIdeal> = Vec::new();
    let mut polys: Vec<(String, Polynomial)> = Vec::new();
    let mut witnesses: Vec<(String, Polynomial, Origin)> = Vec::new();
    let mut weights: Vec<(String, Vec<u32>)> = Vec::new();
    let mut names: Vec<String> = Vec::new();

    loop {
        cur.skip_blank();
        if cur.pos >= text.len() {
            break;
        }
        let stmt = cur.pos;
        let stmt_pos = cur.origin(stmt);
        let keyword = cur.word();
        match keyword {
            "ring" | "order" => {
                if !cur.src[cur.pos..].starts_with(':') {
                    return Err(err_at(cur.origin(cur.pos), format!("expected `:` after `{keyword}`")));
                }
                cur.pos += 1;
                let (start, line) = cur.rest_of_line();
                if keyword == "ring" {
                    if ring.is_some() {
                        return Err(err_at(stmt_pos, "duplicate ring header"));
                    }
                    ring = Some(parse_ring(&cur, start, line)?);
                } else {
                    if order.is_some() {
                        return Err(err_at(stmt_pos, "duplicate order"));
                    }
                    let spec = line.trim().trim_end_matches(';').trim();
                    let o: MonomialOrder = spec.parse().map_err(|e: Error| err_at(cur.origin(start), strip_position(&e)))?;
                    order = Some(o);
                }
            }
            "ideal" | "poly" | "witness" | "weight" => {
                cur.skip_blank();
                let name_pos = cur.origin(cur.pos);
                let name = cur.word().to_string();
                if !valid_name(&name) {
                    return Err(err_at(name_pos, format!("invalid name `{name}`")));
                }
                cur.skip_blank();
                if !cur.src[cur.pos..].starts_with(':') {
                    return Err(err_at(cur.origin(cur.pos), format!("expected `:` after `{keyword} {name}`")));
                }
                cur.pos += 1;
                let (start, body) = cur.until_semicolon(stmt)?;
                if keyword == "weight" {
                    if weights.iter().any(|(n, _)| *n == name) {
                        return Err(err_at(name_pos, format!("duplicate weight `{name}`")));
                    }
                    weights.push((name, parse_weight_list(&cur, start, &body)?));
                    continue;
                }
                let r = ring
                    .as_ref()
                    .ok_or_else(|| err_at(stmt_pos, "`ring:` must come before polynomials"))?;
                match keyword {
                    "ideal" | "poly" => {
                        if names.contains(&name) {
                            return Err(err_at(name_pos, format!("duplicate name `{name}`")));
                        }
                        names.push(name.clone());
                        if keyword == "ideal" {
                            ideals.push(NamedIdeal {
                                name,
                                generators: parse_poly_list(r, &cur, start, &body)?,
                            });
                        } else {
                            polys.push((name, parse_polynomial_at(r, &body, cur.origin(start))?));
                        }
                    }
                    _ => {
                        if witnesses.iter().any(|(n, _, _)| *n == name) {
                            return Err(err_at(name_pos, format!("duplicate witness for `{name}`")));
                        }
                        let f = parse_polynomial_at(r, &body, cur.origin(start))?;
                        witnesses.push((name, f, name_pos));
                    }
                }
            }
            "" => {
                let c = cur.src[cur.pos..].chars().next().unwrap_or(' ');
                return Err(err_at(stmt_pos, format!("unexpected character `{c}`")));
            }
            other => return Err(err_at(stmt_pos, format!("unknown statement `{other}`"))),
        }
    }

    let ring = ring.ok_or_else(|| err_at(Origin::default(), "missing `ring:` header"))?;
    for (name, _, pos) in &witnesses {
        if !ideals.iter().any(|i| &i.name == name) {
            return Err(err_at(*pos, format!("witness for unknown ideal `{name}`")));
        }
    }
    let order = order.unwrap_or(MonomialOrder::Grevlex);
    order
        .check_arity(ring.nvars())
        .map_err(|e| err_at(Origin::default(), e.to_string()))?;
    Ok(ProblemFile {
        ring,
        order,
        ideals,
        polys,
        witnesses: witnesses.into_iter().map(|(n, f, _)| (n, f)).collect(),
        weights,
    })
}

fn strip_position(e: &Error) -> String {
    match e {
        Error::Parse { message, .. } => message.clone(),
        other => other.to_string(),
    }
}

/// Canonical text: terms ordered by the file's own order.
impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: p={}; vars={}", self.ring.characteristic(), self.ring.names().join(","))?;
        writeln!(f, "order: {}", self.order)?;
        for (name, w) in &self.weights {
            let ws: Vec<String> = w.iter().map(u32::to_string).collect();
            writeln!(f, "weight {name}: {};", ws.join(", "))?;
        }
        for ideal in &self.ideals {
            let gens: Vec<String> = ideal.generators.iter().map(|g| g.display_with(&self.order).to_string()).collect();
            writeln!(f, "ideal {}: {};", ideal.name, gens.join(", "))?;
        }
        for (name, p) in &self.polys {
            writeln!(f, "poly {name}: {};", p.display_with(&self.order))?;
        }
        for (name, p) in &self.witnesses {
            writeln!(f, "witness {name}: {};", p.display_with(&self.order))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_ideal() {
        let pf = parse_problem("ring: p=5; vars=x1,x2,x3,x4,x5\norder: lex\nideal I: x1*x4 - x2*x3;").unwrap();
        assert_eq!(pf.ideals.len(), 1);
        assert_eq!(pf.ideals[0].generators.len(), 1);
        assert_eq!(pf.order, MonomialOrder::Lex);
    }

    #[test]
    fn weight_order_with_tiebreak() {
        let pf = parse_problem("ring: p=5; vars=a,b,c,d,e\norder: weight(6,24,6,3,1; tie=grevlex)\n").unwrap();
        assert_eq!(pf.order, MonomialOrder::weight(vec![6, 24, 6, 3, 1], sqfree_core::Tiebreak::Grevlex));
    }

    #[test]
    fn statements_span_lines_and_skip_comments() {
        let src = "# header\nring: p=3; vars=x,y # trailing\nideal I: x^2, # first\n  y^2 - x;\npoly f: x*y;\nwitness I: x + 1;\nweight w: 2, 1;\n";
        let pf = parse_problem(src).unwrap();
        assert_eq!(pf.ideal("I").unwrap().generators.len(), 2);
        assert_eq!(pf.weight("w"), Some(&[2, 1][..]));
        assert!(pf.witness("I").is_some());
        assert_eq!(pf.order, MonomialOrder::Grevlex);
    }

    #[test]
    fn coefficients_reduce_mod_p() {
        let pf = parse_problem("ring: p=5; vars=x\npoly f: 7*x + 10;").unwrap();
        assert_eq!(pf.poly("f").unwrap().to_string(), "2*x");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_problem("ring: p=5; vars=x,y\nideal I: x*y,\n   x*z;").unwrap_err();
        assert_eq!(e, Error::Parse { line: 3, column: 6, message: "unknown variable `z`".into() });
        let e = parse_problem("ring: p=5; vars=x\nideal I: x").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 1, .. }), "{e}");
        let e = parse_problem("ideal I: x;").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 1, .. }), "{e}");
        let e = parse_problem("ring: p=6; vars=x").unwrap_err();
        assert!(e.to_string().contains("not a prime"), "{e}");
        let e = parse_problem("ring: p=5; vars=x\nwitness J: x;").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 9, .. }), "{e}");
        let e = parse_problem("ring: p=5; vars=x\nweight w: 1, 0;").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 14, .. }), "{e}");
        let e = parse_problem("ring: p=5; vars=x,y\norder: weight(1,2,3)").unwrap_err();
        assert!(e.to_string().contains("2 variables") || e.to_string().contains("expected 2"), "{e}");
    }

    #[test]
    fn print_parse_round_trip() {
        let src = "ring: p=7; vars=x,y,z\norder: weight(3,1,2; tie=lex)\nweight w: 1,1,1;\nideal I: x*y - 8*z^2, z;\nideal J: 0;\npoly f: x^2 + 3;\nwitness I: y;\n";
        let pf = parse_problem(src).unwrap();
        let again = parse_problem(&pf.to_string()).unwrap();
        assert_eq!(pf, again);
        assert_eq!(pf.to_string(), again.to_string());
    }
}
