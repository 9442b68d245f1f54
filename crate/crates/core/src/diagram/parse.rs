use super::{Diagram, Label};
use crate::error::{Error, Result};

/// Parses `X(1,5,2,4) X(3,1,4,6) ...`. Also accepts the bracketed forms
/// `PD[X[1,5,2,4], ...]` and `[[1,5,2,4], ...]`.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let tuples = parse_tuples(text)?;
    let d = Diagram::from_tuples(tuples, 0, |_, p| match p {
        0 => Some(true),
        2 => Some(false),
        _ => None,
    })?;
    if d.is_connected() {
        d.turaev_genus()?;
    }
    Ok(d)
}

fn parse_tuples(text: &str) -> Result<Vec<[Label; 4]>> {
    let bad = |why: &str| Error::MalformedPd(why.to_string());
    let body = text.trim();
    let body = body.strip_prefix("PD").unwrap_or(body);
    let mut tuples = Vec::new();
    let mut group: Option<Vec<Label>> = None;
    let mut num = String::new();
    let flush = |num: &mut String, group: &mut Option<Vec<Label>>| -> Result<()> {
        if num.is_empty() {
            return Ok(());
        }
        let v: Label = num
            .parse()
            .map_err(|_| Error::MalformedPd(format!("bad integer `{num}`")))?;
        num.clear();
        match group {
            Some(g) => {
                g.push(v);
                Ok(())
            }
            None => Err(Error::MalformedPd(format!("label {v} outside a crossing"))),
        }
    };
    for ch in body.chars() {
        match ch {
            '0'..='9' => num.push(ch),
            '-' if num.is_empty() => num.push(ch),
            '(' | '[' => {
                flush(&mut num, &mut group)?;
                group = Some(Vec::new());
            }
            ')' | ']' => {
                flush(&mut num, &mut group)?;
                if let Some(g) = group.take() {
                    if g.is_empty() {
                        continue;
                    }
                    if g.len() != 4 {
                        return Err(Error::MalformedPd(format!("crossing with {} labels", g.len())));
                    }
                    tuples.push([g[0], g[1], g[2], g[3]]);
                }
            }
            ',' | ';' => flush(&mut num, &mut group)?,
            c if c.is_whitespace() => flush(&mut num, &mut group)?,
            'X' | 'x' => {
                flush(&mut num, &mut group)?;
                match &group {
                    Some(g) if !g.is_empty() => return Err(bad("nested crossing")),
                    _ => group = None,
                }
            }
            other => return Err(Error::MalformedPd(format!("unexpected character `{other}`"))),
        }
    }
    if group.is_some() || !num.is_empty() {
        return Err(bad("unterminated crossing"));
    }
    if tuples.is_empty() {
        return Err(bad("no crossings"));
    }
    Ok(tuples)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_forms() {
        let a = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        let b = parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]").unwrap();
        let c = parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_pd(""), Err(Error::MalformedPd(_))));
        assert!(matches!(parse_pd("   "), Err(Error::MalformedPd(_))));
        assert!(matches!(parse_pd("X(1,2,3)"), Err(Error::MalformedPd(_))));
        assert!(matches!(parse_pd("X(1,2,3,4"), Err(Error::MalformedPd(_))));
        assert!(matches!(parse_pd("Y(1,2,3,4)"), Err(Error::MalformedPd(_))));
        // label 7 appears once
        let e = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,7,2)").unwrap_err();
        assert!(matches!(e, Error::BadArcMultiplicity(_)));
    }

    #[test]
    fn virtual_trefoil_is_suspect() {
        // virtual trefoil, Gauss code O1 O2 U1 U2: v_A = 1, v_B = 2, odd numerator
        let r = parse_pd("X(3,2,4,1) X(4,3,1,2)");
        assert!(matches!(r, Err(Error::NonplanarSuspect(_))), "{r:?}");
    }
}
