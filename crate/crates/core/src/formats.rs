//! Text codecs for graphs: whitespace edge lists and graph6.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphError};

/// Supported text formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// Header line `n m`, then one `u v` pair per line; `#` starts a comment.
    EdgeList,
    /// graph6: 6-bit encoding of the upper-triangular adjacency matrix.
    Graph6,
}

/// Parse failures, with enough position information to point at the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    /// Malformed line in an edge list (1-based line number).
    Syntax { line: usize, reason: String },
    /// An edge endpoint failed graph construction (out of range, self-loop).
    Edge { line: usize, source: GraphError },
    /// graph6 size prefixes we do not decode (`~`, i.e. n > 62).
    UnsupportedHeader { reason: String },
    /// Bad byte or truncation in a graph6 body (0-based byte offset).
    Graph6 { pos: usize, reason: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, reason } => write!(f, "line {line}: {reason}"),
            ParseError::Edge { line, source } => write!(f, "line {line}: {source}"),
            ParseError::UnsupportedHeader { reason } => write!(f, "unsupported header: {reason}"),
            ParseError::Graph6 { pos, reason } => write!(f, "graph6 byte {pos}: {reason}"),
        }
    }
}

impl core::error::Error for ParseError {}

/// Non-fatal oddities noticed while parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseWarning {
    /// The header's edge count disagrees with the parsed edge set
    /// (after duplicate collapse). Tolerated to cope with hand-edited files.
    EdgeCountMismatch { declared: usize, parsed: usize },
}

impl fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseWarning::EdgeCountMismatch { declared, parsed } => write!(
                f,
                "header declares {declared} edges but {parsed} distinct edges were parsed"
            ),
        }
    }
}

/// Result of a successful parse: the graph plus any warnings.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub graph: Graph,
    pub warnings: Vec<ParseWarning>,
}

/// Decodes `text` in the given format.
pub fn read_graph(text: &str, format: GraphFormat) -> Result<Parsed, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text).map(|graph| Parsed {
            graph,
            warnings: Vec::new(),
        }),
    }
}

/// Encodes `g` in the given format. `read_graph(write_graph(g)) == g`
/// vertex for vertex.
pub fn write_graph(g: &Graph, format: GraphFormat) -> Result<String, ParseError> {
    match format {
        GraphFormat::EdgeList => Ok(format_edge_list(g)),
        GraphFormat::Graph6 => format_graph6(g),
    }
}

/// Strips a `#` comment and surrounding whitespace.
fn significant(line: &str) -> &str {
    let body = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    body.trim()
}

/// Parses the `n m` / `u v` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Parsed, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph: Option<Graph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = significant(raw);
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let a = fields.next();
        let b = fields.next();
        if fields.next().is_some() {
            return Err(ParseError::Syntax {
                line: line_no,
                reason: format!("expected two fields, got more: {line:?}"),
            });
        }
        let (a, b) = match (a, b) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(ParseError::Syntax {
                    line: line_no,
                    reason: format!("expected two fields: {line:?}"),
                })
            }
        };
        let parse_num = |s: &str| {
            s.parse::<usize>().map_err(|_| ParseError::Syntax {
                line: line_no,
                reason: format!("not a non-negative integer: {s:?}"),
            })
        };
        let (x, y) = (parse_num(a)?, parse_num(b)?);
        match graph.as_mut() {
            None => {
                header = Some((x, y));
                graph = Some(Graph::empty(x));
            }
            Some(g) => {
                g.try_add_edge(x, y)
                    .map_err(|source| ParseError::Edge { line: line_no, source })?;
            }
        }
    }
    let graph = graph.ok_or(ParseError::Syntax {
        line: 1,
        reason: String::from("missing `n m` header line"),
    })?;
    let declared = header.expect("header recorded with graph").1;
    let parsed = graph.edge_count();
    let mut warnings = Vec::new();
    if declared != parsed {
        warnings.push(ParseWarning::EdgeCountMismatch { declared, parsed });
    }
    Ok(Parsed { graph, warnings })
}

/// Renders the edge-list format with edges ascending.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_BIAS: u8 = 63;
const G6_MAX_SINGLE: usize = 62;

/// Decodes a graph6 string (single-byte size form, `n <= 62`).
///
/// The body packs the upper triangle column-major, in bit order
/// `(0,1), (0,2), (1,2), (0,3), ...`: six bits per byte, most significant
/// bit first, biased by 63.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Graph6 {
            pos: 0,
            reason: String::from("empty input"),
        });
    }
    if bytes[0] == b'~' {
        return Err(ParseError::UnsupportedHeader {
            reason: String::from("multi-byte graph6 size (n > 62) is not supported"),
        });
    }
    if !(G6_BIAS..=126).contains(&bytes[0]) {
        return Err(ParseError::Graph6 {
            pos: 0,
            reason: format!("invalid size byte {}", bytes[0]),
        });
    }
    let n = (bytes[0] - G6_BIAS) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let body_len = bit_count.div_ceil(6);
    if bytes.len() != 1 + body_len {
        return Err(ParseError::Graph6 {
            pos: bytes.len().min(1 + body_len),
            reason: format!(
                "expected {} body bytes for order {n}, got {}",
                body_len,
                bytes.len() - 1
            ),
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6];
            if !(G6_BIAS..=126).contains(&byte) {
                return Err(ParseError::Graph6 {
                    pos: 1 + bit / 6,
                    reason: format!("invalid body byte {byte}"),
                });
            }
            let value = byte - G6_BIAS;
            if (value >> (5 - bit % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    // Padding bits must be zero for a canonical encoding; tolerate them.
    Ok(g)
}

/// Encodes into graph6; errors for `n > 62`.
pub fn format_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.n();
    if n > G6_MAX_SINGLE {
        return Err(ParseError::UnsupportedHeader {
            reason: format!("order {n} exceeds the single-byte graph6 limit of 62"),
        });
    }
    let mut out = Vec::new();
    out.push(G6_BIAS + n as u8);
    let mut acc = 0u8;
    let mut filled = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(G6_BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(G6_BIAS + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
