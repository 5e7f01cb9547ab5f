use super::{FeatureSet, IrregularEntry, ParadigmError};
use crate::phoneme::normalize;

/// Parses an irregular-form file: one `form{key=value, key=value}` entry per
/// line. Blank lines and lines starting with `#` are skipped. Every entry
/// must carry a `paradigm` key.
pub fn load_irregulars(text: &str) -> Result<Vec<IrregularEntry>, ParadigmError> {
    let text = normalize(text);
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |reason: &'static str| ParadigmError::MalformedEntry {
            line: i + 1,
            text: raw.to_string(),
            reason,
        };
        let (form, rest) = line.split_once('{').ok_or_else(|| bad("missing '{'"))?;
        let body = rest.strip_suffix('}').ok_or_else(|| bad("missing closing '}'"))?;
        let form = form.trim();
        if form.is_empty() {
            return Err(bad("empty form"));
        }
        if body.contains(['{', '}']) {
            return Err(bad("nested braces"));
        }
        let mut features = FeatureSet::new();
        for pair in body.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = pair.split_once('=').ok_or_else(|| bad("feature without '='"))?;
            let (k, v) = (k.trim(), v.trim());
            if k.is_empty() || v.is_empty() {
                return Err(bad("empty key or value"));
            }
            if !features.insert(k, v) {
                return Err(bad("duplicate key"));
            }
        }
        if !features.contains_key("paradigm") {
            return Err(bad("no paradigm key"));
        }
        out.push(IrregularEntry {
            form: form.to_string(),
            features,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eko() {
        let entries = load_irregulars("eko{paradigm=numeral, number=singular, gender=masculine, case=nominative}").unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].form, "eko");
        assert_eq!(entries[0].features.len(), 4);
        assert_eq!(entries[0].features.get("paradigm"), Some("numeral"));
    }

    #[test]
    fn empty_and_comments() {
        assert!(load_irregulars("").unwrap().is_empty());
        assert!(load_irregulars("# nothing\n\n").unwrap().is_empty());
    }

    #[test]
    fn malformed() {
        for bad in ["x{a=1", "x a=1}", "{paradigm=noun}", "x{paradigm}", "x{case=a}", "x{paradigm=a, paradigm=b}"] {
            assert!(
                matches!(load_irregulars(bad), Err(ParadigmError::MalformedEntry { line: 1, .. })),
                "{bad}"
            );
        }
        assert!(matches!(
            load_irregulars("eko{paradigm=numeral}\nx{a=1"),
            Err(ParadigmError::MalformedEntry { line: 2, .. })
        ));
    }
}
