use roxmltree::{Document, Node};

use super::{FeatureSet, Morph, Morpheme, Occurrence, Paradigm, ParadigmError};
use crate::phoneme::normalize;

const TERMINALS: [&str; 2] = ["ending", "form"];

fn malformed(reason: impl Into<String>) -> ParadigmError {
    ParadigmError::MalformedDocument { reason: reason.into() }
}

/// Reads a grammar document.
///
/// The root element names the word class and becomes `paradigm=<root>`.
/// Below it, an element with a `type` attribute contributes
/// `<element>=<type>`; an element without one contributes `kind=<element>`
/// (several are joined with `/`). `<ending>` and `<form>` elements are
/// terminals: the terminals directly under one element form one morpheme.
/// An empty terminal is a zero ending, and a terminal's own `type`
/// attribute is kept as its [`Occurrence`].
pub fn load_paradigm(source: &str) -> Result<Paradigm, ParadigmError> {
    let source = normalize(source);
    let doc = Document::parse(&source).map_err(|e| malformed(e.to_string()))?;
    let root = doc.root_element();
    let word_class = root.tag_name().name().to_string();
    if TERMINALS.contains(&word_class.as_str()) {
        return Err(malformed("the root element cannot be a terminal"));
    }
    let mut features = FeatureSet::new();
    features.insert("paradigm", word_class.as_str());
    let mut morphemes = Vec::new();
    walk(root, &features, &mut morphemes)?;
    if morphemes.is_empty() {
        return Err(ParadigmError::EmptyParadigm { word_class });
    }
    Ok(Paradigm { word_class, morphemes })
}

fn walk(node: Node, features: &FeatureSet, out: &mut Vec<Morpheme>) -> Result<(), ParadigmError> {
    let mut morphs = Vec::new();
    for child in node.children().filter(Node::is_element) {
        let name = child.tag_name().name();
        if TERMINALS.contains(&name) {
            if child.children().any(|c| c.is_element()) {
                return Err(malformed(format!("<{name}> must not contain elements")));
            }
            let surface = child.text().unwrap_or("").trim().to_string();
            morphs.push(Morph {
                surface,
                occurrence: child.attribute("type").map(|t| Occurrence(t.to_string())),
            });
            continue;
        }
        let mut inner = features.clone();
        match child.attribute("type") {
            Some(value) => {
                if !inner.insert(name, value) {
                    return Err(malformed(format!("feature {name:?} given twice on one path")));
                }
            }
            None => {
                let kind = match inner.get("kind") {
                    Some(k) => format!("{k}/{name}"),
                    None => name.to_string(),
                };
                inner.set("kind", kind);
            }
        }
        walk(child, &inner, out)?;
    }
    if !morphs.is_empty() {
        out.push(Morpheme {
            morphs,
            features: features.clone(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXCERPT: &str = r#"<pronoun>
  <personal>
    <number type="singular">
      <person type="1">
        <case type="nominative">
          <ending>ahaṃ</ending>
        </case>
        <case type="accusative">
          <ending>maṃ</ending>
        </case>
        ...
      </person>
    </number>
  </personal>
</pronoun>"#;

    fn fs(pairs: &[(&str, &str)]) -> FeatureSet {
        pairs.iter().copied().collect()
    }

    #[test]
    fn pronoun_excerpt() {
        let p = load_paradigm(EXCERPT).unwrap();
        assert_eq!(p.word_class, "pronoun");
        assert_eq!(p.morphemes.len(), 2);
        let base = [("paradigm", "pronoun"), ("kind", "personal"), ("number", "singular"), ("person", "1")];
        let mut nom = base.to_vec();
        nom.push(("case", "nominative"));
        assert_eq!(p.morphemes[0].features, fs(&nom));
        assert_eq!(p.morphemes[0].morphs, vec![Morph::new("ahaṃ")]);
        let mut acc = base.to_vec();
        acc.push(("case", "accusative"));
        assert_eq!(p.morphemes[1].features, fs(&acc));
        assert_eq!(p.morphemes[1].morphs, vec![Morph::new("maṃ")]);
    }

    #[test]
    fn minimal_document() {
        let p = load_paradigm("<noun><case type=\"nominative\"><ending>o</ending></case></noun>").unwrap();
        assert_eq!(p.morphemes.len(), 1);
        assert_eq!(p.morphemes[0].morphs.len(), 1);
    }

    #[test]
    fn siblings_group_and_zero_endings() {
        let p = load_paradigm(
            "<noun><case type=\"dative\"><ending>āya</ending><ending>assa</ending></case>\
             <case type=\"vocative\"><ending/><ending type=\"lengthens\">ā</ending></case></noun>",
        )
        .unwrap();
        assert_eq!(p.morphemes[0].morphs.len(), 2);
        assert!(p.morphemes[1].morphs[0].is_zero());
        assert_eq!(p.morphemes[1].morphs[1].occurrence, Some(Occurrence("lengthens".into())));
        assert_eq!(p.endings(), vec!["āya", "assa", "ā"]);
    }

    #[test]
    fn node_order_does_not_matter() {
        let a = load_paradigm("<noun><case type=\"x\"><number type=\"y\"><ending>o</ending></number></case></noun>").unwrap();
        let b = load_paradigm("<noun><number type=\"y\"><case type=\"x\"><ending>o</ending></case></number></noun>").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn errors() {
        assert!(matches!(load_paradigm("<noun><case>"), Err(ParadigmError::MalformedDocument { .. })));
        assert!(matches!(load_paradigm("<noun><case type=\"x\"/></noun>"), Err(ParadigmError::EmptyParadigm { .. })));
        assert!(matches!(
            load_paradigm("<noun><case type=\"x\"><case type=\"y\"><ending>o</ending></case></case></noun>"),
            Err(ParadigmError::MalformedDocument { .. })
        ));
    }

    #[test]
    fn loading_is_idempotent() {
        assert_eq!(load_paradigm(EXCERPT).unwrap(), load_paradigm(EXCERPT).unwrap());
    }
}
