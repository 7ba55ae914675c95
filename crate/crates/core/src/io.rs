//! Serialization: the `SystemDocument` interchange form, its canonical text
//! rendering (one cycle per line) and its JSON mirror, both tagged with the
//! schema version "evenweave/1".
//!
//! Vertex token grammar: non-negative decimals for group residues and
//! labels, `inf` / `inf'` for the two fixed vertices, `z@0` / `z@1` for
//! bipartite vertices, and `x^j` / `x^j*l` for dihedral elements. Rendering
//! is deterministic; parsing reports line, column and offending token.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::system::{CycleSystem, HostGraph, LabeledCycle, LabeledSystem};

pub const SCHEMA: &str = "evenweave/1";

/// A vertex token in any of the supported grammars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DocVertex {
    /// Plain residue or integer label.
    Num(u32),
    Inf,
    InfPrime,
    /// Bipartite vertex z on side 0 or 1.
    Bi { z: u32, side: u8 },
    /// Dihedral element x^j or x^j*l.
    Dih { j: u32, refl: bool },
}

impl fmt::Display for DocVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocVertex::Num(n) => write!(f, "{n}"),
            DocVertex::Inf => write!(f, "inf"),
            DocVertex::InfPrime => write!(f, "inf'"),
            DocVertex::Bi { z, side } => write!(f, "{z}@{side}"),
            DocVertex::Dih { j, refl: false } => write!(f, "x^{j}"),
            DocVertex::Dih { j, refl: true } => write!(f, "x^{j}*l"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg} (at \"{token}\")")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub token: String,
    pub msg: String,
}

fn token_error(line: usize, col: usize, token: &str, msg: &str) -> ParseError {
    ParseError { line, col, token: token.to_string(), msg: msg.to_string() }
}

impl FromStr for DocVertex {
    type Err = String;

    fn from_str(s: &str) -> Result<DocVertex, String> {
        match s {
            "inf" => return Ok(DocVertex::Inf),
            "inf'" => return Ok(DocVertex::InfPrime),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("x^") {
            let (digits, refl) = match rest.strip_suffix("*l") {
                Some(d) => (d, true),
                None => (rest, false),
            };
            let j = digits
                .parse::<u32>()
                .map_err(|_| "expected x^j or x^j*l with decimal j".to_string())?;
            return Ok(DocVertex::Dih { j, refl });
        }
        if let Some((z, side)) = s.split_once('@') {
            let z = z.parse::<u32>().map_err(|_| "expected z@side with decimal z".to_string())?;
            let side = match side {
                "0" => 0,
                "1" => 1,
                _ => return Err("bipartite side must be 0 or 1".to_string()),
            };
            return Ok(DocVertex::Bi { z, side });
        }
        s.parse::<u32>()
            .map(DocVertex::Num)
            .map_err(|_| "expected a vertex token".to_string())
    }
}

mod docvertex_serde {
    //! DocVertex <-> its token string in JSON.
    use super::DocVertex;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &DocVertex, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<DocVertex, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// JSON-friendly wrapper so cycles serialize as arrays of token strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Token(#[serde(with = "docvertex_serde")] pub DocVertex);

/// Host descriptor mirrored one-to-one in both formats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DocHost {
    KvMinusI {
        v: u32,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        factor: Option<Vec<(u32, u32)>>,
    },
    KvMinusIOn {
        labels: Vec<u32>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        factor: Option<Vec<(u32, u32)>>,
    },
    Bipartite { left: Vec<u32>, right: Vec<u32> },
}

/// The interchange document: a schema-versioned header plus one cycle per
/// record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDocument {
    pub schema: String,
    pub host: DocHost,
    pub t: u32,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub anchor: Option<Vec<u32>>,
    pub cycles: Vec<Vec<Token>>,
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn join_pairs(pairs: &[(u32, u32)]) -> String {
    pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(",")
}

impl SystemDocument {
    pub fn from_system(sys: &LabeledSystem) -> SystemDocument {
        let host = match &sys.system.host {
            HostGraph::CompleteMinusFactor { v, factor } => {
                DocHost::KvMinusI { v: *v, factor: factor.clone() }
            }
            HostGraph::CompleteMinusFactorOn { labels, factor } => {
                DocHost::KvMinusIOn { labels: labels.clone(), factor: factor.clone() }
            }
            HostGraph::CompleteBipartite { left, right } => {
                DocHost::Bipartite { left: left.clone(), right: right.clone() }
            }
        };
        let t = sys.system.cycles.first().map_or(0, |c| c.len() as u32 / 2);
        SystemDocument {
            schema: SCHEMA.to_string(),
            host,
            t,
            provenance: sys.provenance.to_string(),
            anchor: sys.anchors.as_ref().map(|a| a.iter().copied().collect()),
            cycles: sys
                .system
                .cycles
                .iter()
                .map(|c| c.vertices().iter().map(|&x| Token(DocVertex::Num(x))).collect())
                .collect(),
        }
    }

    /// Reconstructs a label-level system. Fails if any vertex token is not
    /// a plain integer label (group-grammar documents are display-only).
    pub fn to_system(&self) -> Result<CycleSystem, ParseError> {
        let mut cycles = Vec::new();
        for (i, c) in self.cycles.iter().enumerate() {
            let mut verts = Vec::new();
            for tok in c {
                match tok.0 {
                    DocVertex::Num(n) => verts.push(n),
                    other => {
                        return Err(token_error(
                            i + 1,
                            1,
                            &other.to_string(),
                            "verification needs integer-labeled cycles",
                        ))
                    }
                }
            }
            cycles.push(LabeledCycle::new_unchecked(verts));
        }
        let host = match &self.host {
            DocHost::KvMinusI { v, factor } => {
                HostGraph::CompleteMinusFactor { v: *v, factor: factor.clone() }
            }
            DocHost::KvMinusIOn { labels, factor } => HostGraph::CompleteMinusFactorOn {
                labels: labels.clone(),
                factor: factor.clone(),
            },
            DocHost::Bipartite { left, right } => {
                HostGraph::CompleteBipartite { left: left.clone(), right: right.clone() }
            }
        };
        Ok(CycleSystem { cycles, host })
    }

    /// Anchor set as the verifier wants it.
    pub fn anchor_set(&self) -> Option<BTreeSet<u32>> {
        self.anchor.as_ref().map(|a| a.iter().copied().collect())
    }

    /// Canonical text rendering: fixed key order, one cycle per line after
    /// the `cycles:` marker. Byte-deterministic.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.schema);
        out.push('\n');
        match &self.host {
            DocHost::KvMinusI { v, factor } => {
                out.push_str("host: kvi\n");
                out.push_str(&format!("v: {v}\n"));
                if let Some(f) = factor {
                    out.push_str(&format!("factor: {}\n", join_pairs(f)));
                }
            }
            DocHost::KvMinusIOn { labels, factor } => {
                out.push_str("host: kvi-on\n");
                out.push_str(&format!("labels: {}\n", join(labels.iter())));
                if let Some(f) = factor {
                    out.push_str(&format!("factor: {}\n", join_pairs(f)));
                }
            }
            DocHost::Bipartite { left, right } => {
                out.push_str("host: bipartite\n");
                out.push_str(&format!("left: {}\n", join(left.iter())));
                out.push_str(&format!("right: {}\n", join(right.iter())));
            }
        }
        out.push_str(&format!("t: {}\n", self.t));
        out.push_str(&format!("provenance: {}\n", self.provenance));
        if let Some(a) = &self.anchor {
            out.push_str(&format!("anchor: {}\n", join(a.iter())));
        }
        out.push_str("cycles:\n");
        for c in &self.cycles {
            out.push_str(&join(c.iter().map(|t| t.0)));
            out.push('\n');
        }
        out
    }

    /// JSON rendering (pretty, trailing newline), mirroring the fields
    /// one-to-one. Byte-deterministic.
    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn parse_json(input: &str) -> Result<SystemDocument, ParseError> {
        let doc: SystemDocument = serde_json::from_str(input).map_err(|e| ParseError {
            line: e.line(),
            col: e.column(),
            token: String::new(),
            msg: e.to_string(),
        })?;
        if doc.schema != SCHEMA {
            return Err(token_error(1, 1, &doc.schema, "unsupported schema version"));
        }
        Ok(doc)
    }

    pub fn parse_text(input: &str) -> Result<SystemDocument, ParseError> {
        let mut lines = input.lines().enumerate().peekable();

        let (_, first) = lines
            .next()
            .ok_or_else(|| token_error(1, 1, "", "empty document"))?;
        if first.trim() != SCHEMA {
            return Err(token_error(1, 1, first, "expected schema line"));
        }

        let mut host_kind: Option<String> = None;
        let mut v: Option<u32> = None;
        let mut labels: Option<Vec<u32>> = None;
        let mut left: Option<Vec<u32>> = None;
        let mut right: Option<Vec<u32>> = None;
        let mut factor: Option<Vec<(u32, u32)>> = None;
        let mut t: Option<u32> = None;
        let mut provenance: Option<String> = None;
        let mut anchor: Option<Vec<u32>> = None;

        let parse_nums = |ln: usize, s: &str| -> Result<Vec<u32>, ParseError> {
            if s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|_| token_error(ln, 1, tok, "expected a decimal label"))
                })
                .collect()
        };
        let parse_pairs = |ln: usize, s: &str| -> Result<Vec<(u32, u32)>, ParseError> {
            s.split(',')
                .map(|tok| {
                    let (a, b) = tok
                        .split_once('-')
                        .ok_or_else(|| token_error(ln, 1, tok, "expected a-b edge"))?;
                    let a = a.parse().map_err(|_| token_error(ln, 1, tok, "bad edge endpoint"))?;
                    let b = b.parse().map_err(|_| token_error(ln, 1, tok, "bad edge endpoint"))?;
                    Ok((a, b))
                })
                .collect()
        };

        let mut saw_cycles_marker = false;
        for (idx, line) in &mut lines {
            let ln = idx + 1;
            let line = line.trim_end();
            if line == "cycles:" {
                saw_cycles_marker = true;
                break;
            }
            let (key, value) = line
                .split_once(": ")
                .map(|(k, v)| (k, v))
                .or_else(|| line.strip_suffix(':').map(|k| (k, "")))
                .ok_or_else(|| token_error(ln, 1, line, "expected 'key: value'"))?;
            match key {
                "host" => host_kind = Some(value.to_string()),
                "v" => {
                    v = Some(
                        value
                            .parse()
                            .map_err(|_| token_error(ln, 4, value, "expected decimal v"))?,
                    )
                }
                "labels" => labels = Some(parse_nums(ln, value)?),
                "left" => left = Some(parse_nums(ln, value)?),
                "right" => right = Some(parse_nums(ln, value)?),
                "factor" => factor = Some(parse_pairs(ln, value)?),
                "t" => {
                    t = Some(
                        value
                            .parse()
                            .map_err(|_| token_error(ln, 4, value, "expected decimal t"))?,
                    )
                }
                "provenance" => provenance = Some(value.to_string()),
                "anchor" => anchor = Some(parse_nums(ln, value)?),
                _ => return Err(token_error(ln, 1, key, "unknown header key")),
            }
        }
        if !saw_cycles_marker {
            return Err(token_error(input.lines().count(), 1, "", "missing 'cycles:' section"));
        }

        let host = match host_kind.as_deref() {
            Some("kvi") => DocHost::KvMinusI {
                v: v.ok_or_else(|| token_error(2, 1, "v", "kvi host needs v"))?,
                factor,
            },
            Some("kvi-on") => DocHost::KvMinusIOn {
                labels: labels.ok_or_else(|| token_error(2, 1, "labels", "kvi-on host needs labels"))?,
                factor,
            },
            Some("bipartite") => DocHost::Bipartite {
                left: left.ok_or_else(|| token_error(2, 1, "left", "bipartite host needs left"))?,
                right: right
                    .ok_or_else(|| token_error(2, 1, "right", "bipartite host needs right"))?,
            },
            other => {
                return Err(token_error(2, 1, other.unwrap_or(""), "unknown or missing host kind"))
            }
        };

        let mut cycles = Vec::new();
        for (idx, line) in lines {
            let ln = idx + 1;
            let line = line.trim_end();
            if line.is_empty() {
                continue;
            }
            let mut cyc = Vec::new();
            let mut col = 1usize;
            for tok in line.split(',') {
                let trimmed = tok.trim();
                let vtx: DocVertex = trimmed
                    .parse()
                    .map_err(|msg: String| token_error(ln, col, trimmed, &msg))?;
                cyc.push(Token(vtx));
                col += tok.len() + 1;
            }
            cycles.push(cyc);
        }

        Ok(SystemDocument {
            schema: SCHEMA.to_string(),
            host,
            t: t.ok_or_else(|| token_error(1, 1, "t", "missing t header"))?,
            provenance: provenance
                .ok_or_else(|| token_error(1, 1, "provenance", "missing provenance header"))?,
            anchor,
            cycles,
        })
    }
}

/// Renders a group-level cycle list (starter display, not round-tripped
/// through `to_system`).
pub fn render_group_cycle(verts: &[crate::cycle::Vertex]) -> String {
    use crate::cycle::Vertex;
    use crate::group::GroupSpec;
    join(verts.iter().map(|v| match v {
        Vertex::Infty => DocVertex::Inf,
        Vertex::InftyPrime => DocVertex::InfPrime,
        Vertex::Bi { z, side } => DocVertex::Bi { z: *z, side: *side },
        Vertex::Group(g) => match g.spec() {
            GroupSpec::Cyclic { .. } => DocVertex::Num(g.rot()),
            GroupSpec::Dihedral { .. } => DocVertex::Dih { j: g.rot(), refl: g.refl() },
        },
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::dispatch::build_unparalleled;
    use proptest::prelude::*;

    #[test]
    fn vertex_tokens_round_trip() {
        for (tok, v) in [
            ("inf", DocVertex::Inf),
            ("inf'", DocVertex::InfPrime),
            ("17", DocVertex::Num(17)),
            ("3@0", DocVertex::Bi { z: 3, side: 0 }),
            ("3@1", DocVertex::Bi { z: 3, side: 1 }),
            ("x^0", DocVertex::Dih { j: 0, refl: false }),
            ("x^5*l", DocVertex::Dih { j: 5, refl: true }),
        ] {
            assert_eq!(tok.parse::<DocVertex>().unwrap(), v);
            assert_eq!(v.to_string(), tok);
        }
        assert!("x^".parse::<DocVertex>().is_err());
        assert!("3@2".parse::<DocVertex>().is_err());
        assert!("-1".parse::<DocVertex>().is_err());
    }

    #[test]
    fn malformed_token_has_position() {
        let text = "evenweave/1\nhost: kvi\nv: 4\nt: 2\nprovenance: test\ncycles:\n0,x^,2\n";
        let err = SystemDocument::parse_text(text).unwrap_err();
        assert_eq!(err.line, 7);
        assert_eq!(err.col, 3);
        assert_eq!(err.token, "x^");
    }

    #[test]
    fn built_system_round_trips_both_formats() {
        let (sys, _) = build_unparalleled(24, 3).unwrap();
        let doc = SystemDocument::from_system(&sys);
        let again = SystemDocument::parse_text(&doc.render_text()).unwrap();
        assert_eq!(again, doc);
        let again = SystemDocument::parse_json(&doc.render_json()).unwrap();
        assert_eq!(again, doc);
        // And the reconstructed label system is the one we started with.
        assert_eq!(doc.to_system().unwrap(), sys.system);
    }

    #[test]
    fn rendering_is_deterministic() {
        let (a, _) = build_unparalleled(16, 4).unwrap();
        let (b, _) = build_unparalleled(16, 4).unwrap();
        let da = SystemDocument::from_system(&a);
        let db = SystemDocument::from_system(&b);
        assert_eq!(da.render_text(), db.render_text());
        assert_eq!(da.render_json(), db.render_json());
    }

    fn doc_vertex_strategy() -> impl Strategy<Value = DocVertex> {
        prop_oneof![
            (0u32..1000).prop_map(DocVertex::Num),
            Just(DocVertex::Inf),
            Just(DocVertex::InfPrime),
            ((0u32..1000), (0u8..=1)).prop_map(|(z, side)| DocVertex::Bi { z, side }),
            ((0u32..1000), any::<bool>()).prop_map(|(j, refl)| DocVertex::Dih { j, refl }),
        ]
    }

    fn doc_strategy() -> impl Strategy<Value = SystemDocument> {
        let host = prop_oneof![
            ((4u32..40), proptest::option::of(proptest::collection::vec((0u32..40, 0u32..40), 1..5)))
                .prop_map(|(v, factor)| DocHost::KvMinusI { v, factor }),
            (
                proptest::collection::vec(0u32..100, 1..10),
                proptest::option::of(proptest::collection::vec((0u32..40, 0u32..40), 1..5))
            )
                .prop_map(|(labels, factor)| DocHost::KvMinusIOn { labels, factor }),
            (proptest::collection::vec(0u32..50, 1..8), proptest::collection::vec(50u32..100, 1..8))
                .prop_map(|(left, right)| DocHost::Bipartite { left, right }),
        ];
        (
            host,
            2u32..12,
            "[a-z0-9()=,]{1,20}",
            proptest::option::of(proptest::collection::vec(0u32..100, 0..6)),
            proptest::collection::vec(
                proptest::collection::vec(doc_vertex_strategy().prop_map(Token), 3..9),
                0..6,
            ),
        )
            .prop_map(|(host, t, provenance, anchor, cycles)| SystemDocument {
                schema: SCHEMA.to_string(),
                host,
                t,
                provenance,
                anchor,
                cycles,
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn random_documents_round_trip(doc in doc_strategy()) {
            let text = doc.render_text();
            prop_assert_eq!(SystemDocument::parse_text(&text).unwrap(), doc.clone());
            let json = doc.render_json();
            prop_assert_eq!(SystemDocument::parse_json(&json).unwrap(), doc);
        }
    }
}
