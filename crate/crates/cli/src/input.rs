use std::path::Path;

use qmatroid::catalog::{self, CatalogEntry};
use qmatroid::format::{load_graph, load_matroid, MatroidBody};
use qmatroid::{Budget, Error, Field, Multigraph, RankOracleMatroid, RepMatroid, Result};

/// A matroid or graph named on the command line: a catalog entry, a
/// matroid file, or a graph file.
pub enum Input {
    Catalog(CatalogEntry),
    Matroid { name: String, body: MatroidBody },
    Graph { name: String, graph: Multigraph },
}

fn first_word(path: &Path) -> Option<String> {
    let text = std::fs::read_to_string(path).ok()?;
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_whitespace().next())
        .map(str::to_string)
}

impl Input {
    pub fn resolve(s: &str) -> Result<Input> {
        let path = Path::new(s);
        if path.is_file() {
            if first_word(path).as_deref() == Some("graph") {
                let (name, graph) = load_graph(path)?;
                return Ok(Input::Graph { name, graph });
            }
            let f = load_matroid(path)?;
            return Ok(Input::Matroid {
                name: f.name,
                body: f.body,
            });
        }
        catalog::lookup(s).map(Input::Catalog)
    }

    pub fn name(&self) -> String {
        match self {
            Input::Catalog(e) => e.name().to_string(),
            Input::Matroid { name, .. } | Input::Graph { name, .. } => name.clone(),
        }
    }

    pub fn graph(&self) -> Option<Multigraph> {
        match self {
            Input::Catalog(e) => e.graph(),
            Input::Matroid {
                body: MatroidBody::Graphic(g),
                ..
            } => Some(g.clone()),
            Input::Graph { graph, .. } => Some(graph.clone()),
            Input::Matroid { .. } => None,
        }
    }

    /// The field a matrix file is written over.
    pub fn native_field(&self) -> Option<Field> {
        match self {
            Input::Matroid {
                body: MatroidBody::Represented(m),
                ..
            } => Some(m.field().clone()),
            _ => None,
        }
    }

    pub fn represent(&self, field: &Field) -> Result<RepMatroid> {
        match self {
            Input::Catalog(e) => e.represent(field),
            Input::Matroid { body, .. } => match body {
                MatroidBody::Represented(m) => {
                    if m.field().order() != field.order() || m.field().modulus() != field.modulus() {
                        return Err(Error::FieldMismatch);
                    }
                    Ok(m.clone())
                }
                MatroidBody::Uniform(k, n) => catalog::uniform(field, *k, *n),
                MatroidBody::Graphic(g) => Ok(g.cycle_matroid(field)),
            },
            Input::Graph { graph, .. } => Ok(graph.cycle_matroid(field)),
        }
    }

    pub fn oracle(&self, budget: Budget) -> Result<RankOracleMatroid> {
        match self {
            Input::Catalog(e) => Ok(e.rank_oracle()),
            Input::Matroid { body, .. } => match body {
                MatroidBody::Represented(m) => RankOracleMatroid::from_matroid(m, budget),
                MatroidBody::Uniform(k, n) => RankOracleMatroid::uniform(*k, *n),
                MatroidBody::Graphic(g) => Ok(g.graphic_matroid()),
            },
            Input::Graph { graph, .. } => Ok(graph.graphic_matroid()),
        }
    }
}
