//! File IO for graphs, with format selection by extension.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use hamcycle::formats::{self, GraphFormat, Parsed};
use hamcycle::Graph;

/// `.g6`/`.graph6` files are graph6; everything else is the edge list.
pub fn format_for(path: &Path) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") | Some("graph6") => GraphFormat::Graph6,
        _ => GraphFormat::EdgeList,
    }
}

/// Loads a graph, printing any non-fatal parse warnings to stderr.
pub fn load_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let Parsed { graph, warnings } = formats::read_graph(&text, format_for(path))
        .with_context(|| format!("parsing {}", path.display()))?;
    for w in warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(graph)
}

/// Writes a graph in the chosen format (default: by extension).
pub fn save_graph(g: &Graph, path: &Path, format: Option<GraphFormat>) -> Result<()> {
    let format = format.unwrap_or_else(|| format_for(path));
    let text = formats::write_graph(g, format)
        .with_context(|| format!("encoding {}", path.display()))?;
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use hamcycle::families;

    #[test]
    fn round_trip_both_extensions() {
        let dir = std::env::temp_dir().join("hamcycle-io-test");
        fs::create_dir_all(&dir).unwrap();
        let g = families::petersen();
        for name in ["p.el", "p.g6"] {
            let path = dir.join(name);
            save_graph(&g, &path, None).unwrap();
            assert_eq!(load_graph(&path).unwrap(), g);
        }
        fs::remove_dir_all(&dir).unwrap();
    }
}
