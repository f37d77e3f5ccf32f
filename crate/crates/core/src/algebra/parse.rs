use super::{Presentation, PresentationBuilder, Sign};
use crate::error::{Error, Result};

/// Source line of every declaration, kept so that errors raised during
/// normalization still point at the file.
#[derive(Default)]
pub(crate) struct Lines {
    pub vertices: Vec<usize>,
    pub arrows: Vec<usize>,
    pub relations: Vec<usize>,
    pub signs: Vec<usize>,
}

pub(crate) fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut b = PresentationBuilder::default();
    let mut lines = Lines::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else {
            continue;
        };
        let syntax = |message: String| Error::Syntax { line, message };
        match keyword {
            "vertex" => {
                let [name] = args else {
                    return Err(syntax("expected `vertex <id>`".into()));
                };
                b.vertices.push(name.to_string());
                lines.vertices.push(line);
            }
            "arrow" => {
                let [name, src, dst] = args else {
                    return Err(syntax("expected `arrow <id> <src> <dst>`".into()));
                };
                b.arrows
                    .push((name.to_string(), src.to_string(), dst.to_string()));
                lines.arrows.push(line);
            }
            "relation" => {
                if args.is_empty() {
                    return Err(syntax("relation needs at least one arrow".into()));
                }
                b.relations.push(args.iter().map(|s| s.to_string()).collect());
                lines.relations.push(line);
            }
            "sign" => {
                let [name, s, e] = args else {
                    return Err(syntax("expected `sign <arrow> <+1|-1> <+1|-1>`".into()));
                };
                let parse = |t: &str| {
                    Sign::parse(t).ok_or_else(|| syntax(format!("bad sign `{t}`")))
                };
                b.signs.push((name.to_string(), parse(s)?, parse(e)?));
                lines.signs.push(line);
            }
            other => return Err(syntax(format!("unknown keyword `{other}`"))),
        }
    }
    Presentation::from_names(b, Some(&lines))
}
