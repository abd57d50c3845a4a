//! The one parser behind every graph argument.
//!
//! ```text
//! graph   := "g6:" GRAPH6        explicit graph6 literal
//!          | "@" PATH            file: JSON edge list if it starts with `{`,
//!                                otherwise the first non-blank graph6 line
//!          | FIXTURE             fig1-G | fig3-G | fig4-F
//!          | GRAPH6              any string of bytes 63..=126
//!          | FAMILY              see `FamilySpec::parse`, e.g. `path4`,
//!                                `doublestar:2,2`, `2k2+k1`, `k2*k2`
//! ```
//!
//! A bare string made only of graph6 bytes (`?` through `~`) is always read
//! as graph6; family expressions contain a digit or punctuation below `?`,
//! so the two never collide.

use std::fs;

use crate::constructions::Fixture;
use crate::emit;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::graph6::parse_graph6;

fn is_graph6_text(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| (63..=126).contains(&b))
}

pub fn parse_graph_arg(arg: &str) -> Result<Graph> {
    let arg = arg.trim();
    if let Some(g6) = arg.strip_prefix("g6:") {
        return parse_graph6(g6.as_bytes());
    }
    if let Some(path) = arg.strip_prefix('@') {
        return read_graph_file(path);
    }
    if let Ok(f) = arg.parse::<Fixture>() {
        return Ok(f.graph());
    }
    if is_graph6_text(arg) {
        return parse_graph6(arg.as_bytes());
    }
    FamilySpec::parse(arg)?.build()
}

/// Reads a graph from a file holding a JSON edge list or graph6 text.
pub fn read_graph_file(path: &str) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.to_owned(),
        message: e.to_string(),
    })?;
    let body = text.trim_start();
    if body.starts_with('{') {
        return emit::from_json(body);
    }
    let line = body.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    parse_graph6(line.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn every_form() {
        let k2 = parse_graph_arg("A_").unwrap();
        assert_eq!(k2, parse_graph_arg("g6:A_").unwrap());
        assert!(are_isomorphic(&k2, &parse_graph_arg("k2").unwrap()).unwrap());
        assert_eq!(parse_graph_arg("fig3-G").unwrap(), Fixture::Fig3G.graph());
        assert_eq!(parse_graph_arg("doublestar:2,2").unwrap().order(), 6);
        assert!(matches!(parse_graph_arg("A@"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph_arg("nope!"), Err(Error::Family(_))));
        assert!(matches!(parse_graph_arg("@/nonexistent/file"), Err(Error::Io { .. })));
    }

    #[test]
    fn files() {
        let dir = std::env::temp_dir().join(format!("irgraph-input-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let g6 = dir.join("g.g6");
        fs::write(&g6, "\n>>graph6<<Bw\nA_\n").unwrap();
        assert_eq!(parse_graph_arg(&format!("@{}", g6.display())).unwrap().edge_count(), 3);
        let json = dir.join("g.json");
        fs::write(&json, r#" {"n":3,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(parse_graph_arg(&format!("@{}", json.display())).unwrap().edge_count(), 1);
        fs::remove_dir_all(&dir).unwrap();
    }
}
