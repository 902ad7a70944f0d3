//! Built-in diagrams: prime knots to 8 crossings, prime links to 7
//! crossings, the virtual Hopf link, unlinks and Reidemeister-move variants.
//!
//! Each entry is a plain data file under `data/catalog/`, listed in
//! `data/index.txt` and embedded at build time.

use std::path::Path;

use crate::diagram::LinkDiagram;
use crate::Error;

static ENTRIES: &[(&str, &str)] = include!(concat!(env!("OUT_DIR"), "/catalog.rs"));

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub text: &'static str,
    pub diagram: LinkDiagram,
}

impl CatalogEntry {
    pub fn crossing_count(&self) -> usize {
        self.diagram.crossings().len()
    }

    pub fn component_count(&self) -> usize {
        self.diagram.component_count()
    }

    /// Comment lines of the data file, without the leading `#`.
    pub fn header(&self) -> Vec<&'static str> {
        self.text.lines()
            .filter_map(|l| l.trim().strip_prefix('#'))
            .map(str::trim)
            .collect()
    }
}

/// Entry names in index order.
pub fn list_catalog() -> Vec<&'static str> {
    ENTRIES.iter().map(|(n, _)| *n).collect()
}

pub fn entry(name: &str) -> Result<CatalogEntry, Error> {
    let &(name, text) = ENTRIES.iter().find(|(n, _)| *n == name).ok_or_else(|| {
        Error::Input(format!("unknown catalog entry `{}`; available: {}", name, list_catalog().join(" ")))
    })?;
    let diagram = LinkDiagram::parse(text).map_err(|e| Error::Input(format!("catalog entry {}: {}", name, e)))?;
    Ok(CatalogEntry { name, text, diagram })
}

pub fn load(name: &str) -> Result<LinkDiagram, Error> {
    Ok(entry(name)?.diagram)
}

/// A catalog name, or else a path to a diagram file.
pub fn resolve(spec: &str) -> Result<LinkDiagram, Error> {
    if ENTRIES.iter().any(|(n, _)| *n == spec) {
        return load(spec);
    }
    if Path::new(spec).is_file() {
        return LinkDiagram::parse(&std::fs::read_to_string(spec)?);
    }
    load(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Crossing count from a census name: `8_18` → 8, `L6a4` → 6.
    fn census_crossings(name: &str) -> Option<usize> {
        let s = name.strip_prefix('L').unwrap_or(name);
        let digits: String = s.chars().take_while(|c| c.is_ascii_digit()).collect();
        let rest = &s[digits.len()..];
        let ok = if name.starts_with('L') { rest.starts_with(['a', 'n']) } else { rest.starts_with('_') };
        if ok && !rest.contains('-') { digits.parse().ok() } else { None }
    }

    #[test]
    fn every_entry_parses_with_census_sizes() {
        for name in list_catalog() {
            let e = entry(name).unwrap();
            if let Some(c) = census_crossings(name) {
                assert_eq!(e.crossing_count(), c, "{}", name);
                let comps = if name.starts_with('L') { 2..=3 } else { 1..=1 };
                assert!(comps.contains(&e.component_count()), "{}", name);
            }
        }
    }

    #[test]
    fn named_entries() {
        let names = list_catalog();
        for n in ["8_18", "L6n1", "vHopf", "L2a1", "3_1"] {
            assert!(names.contains(&n), "{}", n);
        }
        let t = load("3_1").unwrap();
        assert_eq!((t.crossings().len(), t.component_count()), (3, 1));
        let h = load("L2a1").unwrap();
        assert_eq!((h.crossings().len(), h.component_count()), (2, 2));
        match load("nope") {
            Err(Error::Input(m)) => assert!(m.contains("8_18")),
            other => panic!("{:?}", other),
        }
    }
}
