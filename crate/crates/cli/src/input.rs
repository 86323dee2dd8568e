//! Reading inputs: JSON documents on disk, or embedded fixtures by name.

use std::path::Path;

use serde_json::Value;

use qlogic::cstar::{basis_algebra, direct_sum, pants_algebra, CStarSpec};
use qlogic::doc::AlgebraDoc;
use qlogic::groupoid::{fixtures, GroupoidSpec};

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Groupoid(GroupoidSpec),
    Algebra(AlgebraDoc),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Loaded {
    pub name: String,
    pub input: Input,
}

/// Resolves `arg` as a file (with or without `.json`), then as an embedded
/// fixture name (an optional `fixtures/` prefix is ignored).
pub fn load(arg: &str) -> Result<Loaded, CliError> {
    for candidate in [arg.to_string(), format!("{arg}.json")] {
        let path = Path::new(&candidate);
        if path.is_file() {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("{candidate}: {e}")))?;
            let input = parse_document(&text).map_err(|e| match e {
                CliError::Usage(msg) => CliError::Usage(format!("{candidate}: {msg}")),
                other => other,
            })?;
            let name = path
                .file_stem()
                .map_or(candidate.clone(), |s| s.to_string_lossy().into_owned());
            return Ok(Loaded { name, input });
        }
    }
    let name = arg.strip_prefix("fixtures/").unwrap_or(arg);
    let name = name.strip_suffix(".json").unwrap_or(name);
    builtin(name)
        .map(|input| Loaded {
            name: name.to_string(),
            input,
        })
        .ok_or_else(|| {
            CliError::Usage(format!(
                "`{arg}` is neither a readable file nor a known fixture"
            ))
        })
}

/// Parses a groupoid document, an algebra document, or a list of block sizes.
/// Errors carry serde's line/column and field context.
pub fn parse_document(text: &str) -> Result<Input, CliError> {
    let parse_error = |e: serde_json::Error| CliError::Usage(format!("parse error: {e}"));
    let value: Value = serde_json::from_str(text).map_err(parse_error)?;
    match &value {
        Value::Object(map) if map.contains_key("objects") || map.contains_key("morphisms") => Ok(
            Input::Groupoid(serde_json::from_str(text).map_err(parse_error)?),
        ),
        Value::Object(map) if map.contains_key("mult") || map.contains_key("carrier") => Ok(
            Input::Algebra(serde_json::from_str(text).map_err(parse_error)?),
        ),
        Value::Array(_) => {
            let blocks: Vec<usize> = serde_json::from_str(text).map_err(parse_error)?;
            let spec = CStarSpec::new(blocks).map_err(|e| CliError::Usage(e.to_string()))?;
            let alg = direct_sum(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(Input::Algebra(AlgebraDoc::from(&alg)))
        }
        _ => Err(CliError::Usage(
            "unrecognized document: expected a groupoid {objects, morphisms, compose}, \
             an algebra {backend, carrier, mult, unit}, or a list of block sizes"
                .into(),
        )),
    }
}

fn numbered(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?
        .parse()
        .ok()
        .filter(|&n: &usize| (1..=8).contains(&n))
}

/// Embedded fixtures: every groupoid fixture, `broken-inverse`, and the
/// algebras `pantsN`, `basisN` and `dsum-a-b-…`.
pub fn builtin(name: &str) -> Option<Input> {
    if name == "broken-inverse" {
        return Some(Input::Groupoid(fixtures::broken_inverse_spec()));
    }
    if let Some(g) = fixtures::by_name(name) {
        return Some(Input::Groupoid(g.to_spec()));
    }
    if let Some((_, g)) = fixtures::all_fixtures()
        .into_iter()
        .find(|(n, _)| n == name)
    {
        return Some(Input::Groupoid(g.to_spec()));
    }
    let alg = if let Some(n) = numbered(name, "pants") {
        pants_algebra(n).ok()?
    } else if let Some(n) = numbered(name, "basis") {
        basis_algebra(n).ok()?
    } else {
        let rest = name.strip_prefix("dsum-")?;
        let blocks = rest
            .split('-')
            .map(str::parse)
            .collect::<Result<Vec<usize>, _>>()
            .ok()?;
        direct_sum(&CStarSpec::new(blocks).ok()?).ok()?
    };
    Some(Input::Algebra(AlgebraDoc::from(&alg)))
}

/// Names listed by `fixture --list`.
pub fn fixture_names() -> Vec<String> {
    let mut names: Vec<String> = fixtures::all_fixtures()
        .into_iter()
        .map(|(n, _)| n)
        .collect();
    names.extend(
        [
            "trivial",
            "z2",
            "broken-inverse",
            "pants2",
            "pants3",
            "basis2",
            "basis3",
            "basis4",
            "dsum-2-1",
        ]
        .map(String::from),
    );
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_resolve() {
        for name in fixture_names() {
            assert!(builtin(&name).is_some(), "{name}");
        }
        assert!(matches!(
            load("fixtures/klein4").unwrap().input,
            Input::Groupoid(_)
        ));
        assert!(matches!(load("pants2").unwrap().input, Input::Algebra(_)));
        assert!(load("fixtures/nope").is_err());
        assert!(builtin("pants0").is_none());
        assert!(builtin("dsum-2-x").is_none());
    }

    #[test]
    fn parse_errors_have_context() {
        let Err(CliError::Usage(msg)) =
            parse_document("{\"objects\": [\"x\"],\n \"morphisms\": 3}")
        else {
            panic!("expected a parse error");
        };
        assert!(msg.contains("line 2"), "{msg}");
        let Err(CliError::Usage(msg)) =
            parse_document(r#"{"objects": [], "morphisms": [], "compose": [], "extra": 1}"#)
        else {
            panic!("expected a parse error");
        };
        assert!(msg.contains("extra"), "{msg}");
        assert!(parse_document("42").is_err());
        assert!(matches!(
            parse_document("[2, 1]").unwrap(),
            Input::Algebra(_)
        ));
    }
}
