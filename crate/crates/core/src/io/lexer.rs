use crate::error::{Error, Result};

/// A `key:` header and the lines that follow it up to the next header.
#[derive(Debug, PartialEq)]
pub(crate) struct Section {
    pub key: String,
    pub line: usize,
    pub body: Vec<(usize, String)>,
}

impl Section {
    /// Splits the body on any of `seps`; each piece keeps its line number.
    pub fn entries(&self, seps: &[char]) -> Vec<(usize, String)> {
        let mut out = Vec::new();
        for (line, text) in &self.body {
            for piece in text.split(|c| seps.contains(&c)) {
                let piece = piece.trim();
                if !piece.is_empty() {
                    out.push((*line, piece.to_string()));
                }
            }
        }
        out
    }

    /// The whole body as one trimmed string.
    pub fn value(&self) -> String {
        self.body.iter().map(|(_, t)| t.as_str()).collect::<Vec<_>>().join(" ").trim().to_string()
    }
}

fn split_key(s: &str) -> Option<(&str, &str)> {
    let (k, rest) = s.split_once(':')?;
    let k = k.trim();
    (!k.is_empty() && k.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')).then_some((k, rest.trim()))
}

/// Strips `#` comments and groups lines under their headers.
pub(crate) fn sections(text: &str) -> Result<Vec<Section>> {
    let mut out: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some((key, rest)) = split_key(content) {
            let mut body = Vec::new();
            if !rest.is_empty() {
                body.push((line, rest.to_string()));
            }
            out.push(Section {
                key: key.to_string(),
                line,
                body,
            });
        } else if let Some(last) = out.last_mut() {
            last.body.push((line, content.to_string()));
        } else {
            return Err(Error::parse(line, format!("expected a `key:` header, found `{content}`")));
        }
    }
    Ok(out)
}

const RESERVED: [&str; 10] = [",", ";", ":", "#", "=", "(", ")", "~", "->", "\n"];

/// Rejects names that the writers could not serialize unambiguously.
pub(crate) fn check_name(line: usize, name: &str) -> Result<()> {
    if name.is_empty() {
        return Err(Error::parse(line, "empty name"));
    }
    if let Some(bad) = RESERVED.iter().find(|r| name.contains(*r)) {
        return Err(Error::parse(line, format!("name `{name}` contains reserved `{bad}`")));
    }
    if name.starts_with('+') || name.ends_with('+') {
        return Err(Error::parse(line, format!("name `{name}` starts or ends with `+`")));
    }
    Ok(())
}

/// Parses a list of names, rejecting duplicates.
pub(crate) fn name_list(section: &Section) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    for (line, name) in section.entries(&[',']) {
        check_name(line, &name)?;
        if names.contains(&name) {
            return Err(Error::parse(line, format!("duplicate name `{name}`")));
        }
        names.push(name);
    }
    Ok(names)
}

/// Splits `x->y`.
pub(crate) fn arrow(line: usize, entry: &str) -> Result<(String, String)> {
    let (a, b) = entry
        .split_once("->")
        .ok_or_else(|| Error::parse(line, format!("expected `x->y`, found `{entry}`")))?;
    Ok((a.trim().to_string(), b.trim().to_string()))
}
