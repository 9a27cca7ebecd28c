use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use superdom::formulas::FamilySpec;
use superdom::graph::io::{from_edge_list, from_graph6, from_json};
use superdom::Graph;

/// Where the graph comes from. Exactly one source is accepted.
#[derive(Debug, Clone, Args)]
pub struct GraphInput {
    /// Family spec, e.g. `path:7`, `cmp:3,2,1`, `corona:(path:3)x(complete:2)`
    #[arg(long, group = "source")]
    pub family: Option<String>,
    /// graph6 string
    #[arg(long, group = "source")]
    pub g6: Option<String>,
    /// Edge-list file (`n m` header, then `u v` lines), or a `.json` graph object
    #[arg(long, group = "source")]
    pub file: Option<PathBuf>,
    /// Order for an inline edge list
    #[arg(long, group = "source", requires = "edges")]
    pub n: Option<usize>,
    /// Inline edges as `u-v` pairs separated by commas, e.g. `0-1,1-2`
    #[arg(long, requires = "n", allow_hyphen_values = true)]
    pub edges: Option<String>,
}

/// A loaded graph with a display name and, for family input, its spec.
pub struct Loaded {
    pub name: String,
    pub graph: Graph,
    pub family: Option<FamilySpec>,
}

impl GraphInput {
    pub fn load(&self) -> Result<Loaded> {
        if let Some(spec) = &self.family {
            return load_source(spec);
        }
        if let Some(s) = &self.g6 {
            return Ok(Loaded {
                name: s.clone(),
                graph: from_graph6(s)?,
                family: None,
            });
        }
        if let Some(path) = &self.file {
            return Ok(Loaded {
                name: path.display().to_string(),
                graph: load_file(path)?,
                family: None,
            });
        }
        if let Some(n) = self.n {
            let edges = parse_inline_edges(self.edges.as_deref().unwrap_or(""))?;
            return Ok(Loaded {
                name: format!("inline n={n}"),
                graph: Graph::new(n, edges)?,
                family: None,
            });
        }
        bail!(superdom::Error::Parse(
            "no graph given; use --family, --g6, --file or --n/--edges".into()
        ))
    }
}

pub fn load_file(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let graph = if path.extension().is_some_and(|e| e == "json") {
        from_json(&text)?
    } else {
        from_edge_list(&text)?
    };
    Ok(graph)
}

/// A graph source in one string: `g6:<code>`, `file:<path>` or a family spec.
pub fn load_source(s: &str) -> Result<Loaded> {
    if let Some(code) = s.strip_prefix("g6:") {
        return Ok(Loaded {
            name: s.to_string(),
            graph: from_graph6(code)?,
            family: None,
        });
    }
    if let Some(path) = s.strip_prefix("file:") {
        return Ok(Loaded {
            name: path.to_string(),
            graph: load_file(Path::new(path))?,
            family: None,
        });
    }
    let spec: FamilySpec = s.parse()?;
    Ok(Loaded {
        name: spec.to_string(),
        graph: spec.construct()?,
        family: Some(spec),
    })
}

pub fn parse_inline_edges(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|pair| {
            let (u, v) = pair
                .split_once('-')
                .ok_or_else(|| superdom::Error::Parse(format!("edge `{pair}` is not of the form u-v")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| superdom::Error::Parse(format!("bad vertex `{x}` in edge `{pair}`")))
            };
            Ok((parse(u)?, parse(v)?))
        })
        .collect()
}

/// Comma-separated vertex list, e.g. `0,2,4`.
pub fn parse_vertex_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|x| {
            x.parse::<usize>()
                .map_err(|_| superdom::Error::Parse(format!("bad vertex `{x}`")).into())
        })
        .collect()
}
