//! Graph ingestion: graph6 streams from files or stdin, and inline
//! generator specs.

use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};

use consets_core::{graph6, make_generator, GenKind, Graph};

/// One parsed input graph with its position in the stream.
pub struct InputGraph {
    /// Ordinal of the graph in the input (0-based).
    pub index: usize,
    pub graph: Graph,
}

#[derive(Debug)]
pub enum InputError {
    Io(io::Error),
    /// A graph6 line failed to parse.
    Parse {
        line: usize,
        error: graph6::Graph6Error,
    },
    BadGenSpec(String),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io(e) => write!(f, "input error: {e}"),
            InputError::Parse { line, error } => write!(f, "line {line}: {error}"),
            InputError::BadGenSpec(msg) => write!(f, "bad generator spec: {msg}"),
        }
    }
}

impl std::error::Error for InputError {}

impl From<io::Error> for InputError {
    fn from(e: io::Error) -> Self {
        InputError::Io(e)
    }
}

/// Reads a graph6 stream: one graph per line, `>>`-prefixed header lines and
/// blank lines skipped. Any malformed line aborts with its line number.
pub fn read_graph6_stream<R: Read>(reader: R) -> Result<Vec<InputGraph>, InputError> {
    let mut graphs = Vec::new();
    for (lineno, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']);
        if line.is_empty() || line.starts_with(">>") {
            continue;
        }
        let graph = graph6::parse_graph6(line).map_err(|error| InputError::Parse {
            line: lineno + 1,
            error,
        })?;
        graphs.push(InputGraph {
            index: graphs.len(),
            graph,
        });
    }
    Ok(graphs)
}

/// Parses a generator spec like `"path 7"` or `"complete_bipartite 3 3"`
/// (whitespace- or comma-separated) into a single graph.
pub fn parse_gen_spec(spec: &str) -> Result<Graph, InputError> {
    let tokens: Vec<&str> = spec
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    let Some((name, params)) = tokens.split_first() else {
        return Err(InputError::BadGenSpec("empty spec".into()));
    };
    let kind = GenKind::from_name(name).ok_or_else(|| {
        let known: Vec<&str> = GenKind::ALL.iter().map(|k| k.name()).collect();
        InputError::BadGenSpec(format!("unknown kind {name:?}; expected one of {known:?}"))
    })?;
    let params: Vec<usize> = params
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| InputError::BadGenSpec(format!("parameter {p:?} is not an integer")))
        })
        .collect::<Result<_, _>>()?;
    make_generator(kind, &params).map_err(|e| InputError::BadGenSpec(e.to_string()))
}

/// Loads the input graphs for a scan command: `--gen` spec, a file, or stdin.
pub fn load(input: Option<&str>, gen: Option<&str>) -> Result<Vec<InputGraph>, InputError> {
    if let Some(spec) = gen {
        let graph = parse_gen_spec(spec)?;
        return Ok(vec![InputGraph { index: 0, graph }]);
    }
    match input {
        None | Some("-") => read_graph6_stream(io::stdin().lock()),
        Some(path) => read_graph6_stream(File::open(path)?),
    }
}
