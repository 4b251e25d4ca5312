//! A fixed desk-scale corpus of matroids and graphs.
//!
//! `U24` is represented by the columns `(1,0), (0,1), (1,1), (1,-1)`. Every
//! 2×2 minor is ±1 or ±2, so the columns stay pairwise independent in every
//! odd characteristic. Other uniform matroids are represented by Vandermonde
//! columns `(1, t, ..., t^{k-1})` over distinct `t`, which needs `q ≥ n`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::Multigraph;
use crate::linalg::FqMatrix;
use crate::matroid::{Matroid, RankOracleMatroid, RepMatroid};

pub const U24_ROWS: [[i64; 4]; 2] = [[1, 0, 1, 1], [0, 1, 1, -1]];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    U24,
    Uniform(usize, usize),
    Loops(usize),
    Coloops(usize),
    Graph(Vec<(usize, usize)>, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    name: String,
    kind: Kind,
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The underlying graph, for graphic entries.
    pub fn graph(&self) -> Option<Multigraph> {
        match &self.kind {
            Kind::Graph(edges, n) => Some(Multigraph::from_edges(*n, edges).expect("catalog graph is valid")),
            _ => None,
        }
    }

    pub fn ground_size(&self) -> usize {
        match &self.kind {
            Kind::U24 => 4,
            Kind::Uniform(_, n) | Kind::Loops(n) | Kind::Coloops(n) => *n,
            Kind::Graph(edges, _) => edges.len(),
        }
    }

    /// A representation over `field`, or `RepresentationCollapse` when the
    /// catalog's recipe does not represent the matroid over that field.
    pub fn represent(&self, field: &Field) -> Result<RepMatroid> {
        match &self.kind {
            Kind::U24 => u24(field),
            Kind::Uniform(k, n) => uniform(field, *k, *n),
            Kind::Loops(n) => RepMatroid::new(FqMatrix::zeros(field, 0, *n), None),
            Kind::Coloops(n) => RepMatroid::new(FqMatrix::identity(field, *n), None),
            Kind::Graph(..) => Ok(self.graph().expect("graphic").cycle_matroid(field)),
        }
    }

    /// A field-free rank oracle for the same matroid.
    pub fn rank_oracle(&self) -> RankOracleMatroid {
        match &self.kind {
            Kind::U24 => RankOracleMatroid::uniform(2, 4),
            Kind::Uniform(k, n) => RankOracleMatroid::uniform(*k, *n),
            Kind::Loops(n) => RankOracleMatroid::loops(*n),
            Kind::Coloops(n) => RankOracleMatroid::free(*n),
            Kind::Graph(..) => return self.graph().expect("graphic").graphic_matroid(),
        }
        .expect("catalog parameters are valid")
    }
}

/// `U_{2,4}` from the fixed 2×4 matrix, after checking that its columns are
/// pairwise independent over `field`.
pub fn u24(field: &Field) -> Result<RepMatroid> {
    let rows: Vec<Vec<i64>> = U24_ROWS.iter().map(|r| r.to_vec()).collect();
    let m = RepMatroid::from_ints(field, &rows, None)?;
    for i in 0..4 {
        for j in i + 1..4 {
            let cols = m.subset(&[&m.labels()[i], &m.labels()[j]])?;
            if m.rank(cols) < 2 {
                return Err(Error::RepresentationCollapse(format!(
                    "columns {} and {} are parallel over GF({})",
                    i + 1,
                    j + 1,
                    field.order()
                )));
            }
        }
    }
    Ok(m)
}

/// `U_{k,n}` by Vandermonde columns over the first `n` field elements.
pub fn uniform(field: &Field, k: usize, n: usize) -> Result<RepMatroid> {
    if k > n {
        return Err(Error::InvalidRankFunction(format!("U_{{{k},{n}}} needs k <= n")));
    }
    if (field.order() as usize) < n {
        return Err(Error::RepresentationCollapse(format!(
            "U_{{{k},{n}}} needs {n} distinct points, GF({}) has {}",
            field.order(),
            field.order()
        )));
    }
    let points: Vec<_> = field.elements().take(n).collect();
    let mut m = FqMatrix::zeros(field, k, n);
    for (j, t) in points.iter().enumerate() {
        for i in 0..k {
            m.set(i, j, &t.pow(i as u64))?;
        }
    }
    RepMatroid::new(m, None)
}

fn graph(name: &str, n: usize, edges: &[(usize, usize)]) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        kind: Kind::Graph(edges.to_vec(), n),
    }
}

fn entry(name: &str, kind: Kind) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        kind,
    }
}

/// The core corpus: `U24`, graphic matroids, and loop/coloop matroids.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        entry("U24", Kind::U24),
        graph("K2", 2, &[(0, 1)]),
        graph("K3", 3, &[(0, 1), (1, 2), (2, 0)]),
        graph("K4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        graph("C4", 4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
        graph("theta", 2, &[(0, 1), (0, 1), (0, 1)]),
        graph("K3-loop", 3, &[(0, 1), (1, 2), (2, 0), (0, 0)]),
        graph("K3-bridge", 4, &[(0, 1), (1, 2), (2, 0), (2, 3)]),
        entry("loop", Kind::Loops(1)),
        entry("coloop", Kind::Coloops(1)),
        entry("loops3", Kind::Loops(3)),
    ]
}

/// Rank-oracle uniform matroids `U_{k,n}`, `k ≤ n ≤ 6`.
pub fn uniform_catalog() -> Vec<CatalogEntry> {
    (0..=6)
        .flat_map(|n| (0..=n).map(move |k| entry(&format!("U{k}{n}"), Kind::Uniform(k, n))))
        .collect()
}

/// Looks an entry up by name; `U<k><n>` names any uniform matroid with
/// single-digit parameters.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    if let Some(e) = catalog().into_iter().find(|e| e.name == name) {
        return Ok(e);
    }
    let digits: Vec<u32> = name.strip_prefix('U').unwrap_or("").chars().filter_map(|c| c.to_digit(10)).collect();
    if name.len() == 3 && digits.len() == 2 && digits[0] <= digits[1] {
        return Ok(entry(name, Kind::Uniform(digits[0] as usize, digits[1] as usize)));
    }
    Err(Error::UnknownLabel(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Budget;
    use crate::matroid::{check_rank_axioms, same_rank_function};

    #[test]
    fn representations_match_oracles() {
        let f = Field::prime(7).unwrap();
        for e in catalog().into_iter().chain(uniform_catalog()) {
            let m = e.represent(&f).unwrap();
            let o = e.rank_oracle();
            assert!(same_rank_function(&m, &o), "{}", e.name());
            assert_eq!(m.row_count(), o.full_rank(), "{}", e.name());
        }
    }

    #[test]
    fn u24_survives_gf3() {
        let f = Field::prime(3).unwrap();
        let m = u24(&f).unwrap();
        assert!(same_rank_function(&m, &RankOracleMatroid::uniform(2, 4).unwrap()));
    }

    #[test]
    fn vandermonde_needs_enough_points() {
        let f = Field::prime(3).unwrap();
        assert!(matches!(uniform(&f, 2, 5), Err(Error::RepresentationCollapse(_))));
        assert!(uniform(&f, 2, 3).is_ok());
    }

    #[test]
    fn lookup_names() {
        assert_eq!(lookup("C4").unwrap().ground_size(), 4);
        assert_eq!(lookup("U36").unwrap().rank_oracle().full_rank(), 3);
        assert!(lookup("U63").is_err());
        assert!(lookup("nope").is_err());
    }

    #[test]
    fn catalog_satisfies_rank_axioms() {
        for e in catalog() {
            check_rank_axioms(&e.rank_oracle()).unwrap();
            let f = Field::prime(5).unwrap();
            let r = RankOracleMatroid::from_matroid(&e.represent(&f).unwrap(), Budget::default()).unwrap();
            check_rank_axioms(&r).unwrap();
        }
    }
}
