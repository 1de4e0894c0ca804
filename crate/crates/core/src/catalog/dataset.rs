//! The line-oriented `key=value;...` dataset format.

use std::collections::BTreeMap;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Splits `key=value` pairs on `;` outside double quotes; quotes are dropped.
pub fn parse_line(line: &str) -> Result<BTreeMap<String, String>> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    for ch in line.chars() {
        match ch {
            '"' => quoted = !quoted,
            ';' if !quoted => fields.push(std::mem::take(&mut cur)),
            _ => cur.push(ch),
        }
    }
    if quoted {
        return Err(Error::Dataset(format!("unbalanced quote in {line:?}")));
    }
    fields.push(cur);
    let mut out = BTreeMap::new();
    for f in fields.iter().filter(|f| !f.trim().is_empty()) {
        let (k, v) = f.split_once('=').ok_or_else(|| Error::Dataset(format!("field without '=': {f:?}")))?;
        if out.insert(k.trim().to_string(), v.to_string()).is_some() {
            return Err(Error::Dataset(format!("duplicate key {k:?}")));
        }
    }
    Ok(out)
}

/// Inverse of [`parse_line`]; values with spaces or `;` are quoted.
pub fn format_line<'a, I: IntoIterator<Item = (&'a str, String)>>(fields: I) -> String {
    fields
        .into_iter()
        .map(|(k, v)| {
            if v.contains([' ', ';', ',']) && !v.chars().all(|c| c.is_ascii_digit() || c == ',') {
                format!("{k}=\"{v}\"")
            } else {
                format!("{k}={v}")
            }
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// Data lines after verifying the `# sha256 <hex>` header against the body.
pub fn checked_body(text: &str) -> Result<Vec<&str>> {
    let mut expected = None;
    let mut body = String::new();
    let mut lines = Vec::new();
    for line in text.lines() {
        if let Some(h) = line.strip_prefix('#') {
            if let Some(hex) = h.trim().strip_prefix("sha256 ") {
                expected = Some(hex.trim().to_string());
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        body.push_str(line);
        body.push('\n');
        lines.push(line);
    }
    let expected = expected.ok_or_else(|| Error::Dataset("missing sha256 header".into()))?;
    let actual = hex(&Sha256::digest(body.as_bytes()));
    if actual != expected {
        return Err(Error::Dataset(format!("checksum mismatch: header {expected}, body {actual}")));
    }
    Ok(lines)
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoted_semicolons() {
        let m = parse_line(r#"a=1;eq="x; y";b=2,3"#).unwrap();
        assert_eq!(m["eq"], "x; y");
        assert_eq!(m["b"], "2,3");
        assert!(parse_line(r#"a="1"#).is_err());
        assert!(parse_line("a=1;a=2").is_err());
    }

    #[test]
    fn checksum_guard() {
        let body = "x=1\n";
        let h = hex(&Sha256::digest(body.as_bytes()));
        let good = format!("# sha256 {h}\n{body}");
        assert_eq!(checked_body(&good).unwrap(), vec!["x=1"]);
        let bad = format!("# sha256 {h}\nx=2\n");
        assert!(matches!(checked_body(&bad), Err(Error::Dataset(_))));
    }
}
