//! Problem files shipped with the tool.

use crate::problem::ProblemFile;

pub struct CorpusEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub json: &'static str,
}

pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry {
        name: "two-lines",
        summary: "X = C = V(xy, z), two crossing lines in 3-space",
        json: include_str!("../examples/two-lines.json"),
    },
    CorpusEntry {
        name: "monomial-curve-345",
        summary: "the curve (t^3, t^4, t^5) inside two complete intersections",
        json: include_str!("../examples/monomial-curve-345.json"),
    },
    CorpusEntry {
        name: "line-in-two-lines",
        summary: "X = V(x, z) inside C = V(xy, z)",
        json: include_str!("../examples/line-in-two-lines.json"),
    },
    CorpusEntry {
        name: "koszul",
        summary: "X = C = V(x, y, z) in 4-space",
        json: include_str!("../examples/koszul.json"),
    },
    CorpusEntry {
        name: "elliptic-cone",
        summary: "cone over an elliptic quartic in 4-space, not free",
        json: include_str!("../examples/elliptic-cone.json"),
    },
];

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}

impl CorpusEntry {
    pub fn problem(&self) -> ProblemFile {
        ProblemFile::from_json(self.json).expect("bundled problem files parse")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses_and_builds() {
        for e in CORPUS {
            let p = e.problem();
            let g = p.geometry(None).unwrap();
            assert!(
                !p.degrees(g.k(), g.n(), &[]).unwrap().is_empty(),
                "{}",
                e.name
            );
        }
        assert!(find("koszul").is_some());
        assert!(find("nothing").is_none());
    }
}
