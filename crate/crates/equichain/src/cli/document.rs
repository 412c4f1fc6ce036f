//! JSON wire format for equivariant complexes. One document carries the
//! group (cyclic shorthand or a full multiplication table), the cell counts,
//! the boundary matrices ∂_k (dim-k columns, dim-(k-1) rows), the signed
//! action per element and dimension, and optional cell labels.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::abelian::IntMatrix;
use crate::complexes::{ChainComplex, EquivariantChainComplex, FiniteGroup, SignedAction};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDoc {
    Cyclic { cyclic: usize },
    Table { order: usize, table: Vec<Vec<usize>> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub group: GroupDoc,
    pub cells: Vec<usize>,
    pub boundaries: Vec<Vec<Vec<i64>>>,
    pub action: Vec<Vec<Vec<(usize, i64)>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<String>>>,
}

impl ComplexDocument {
    pub fn parse(text: &str) -> Result<ComplexDocument> {
        serde_json::from_str(text)
            .map_err(|e| Error::Document(format!("not a complex document: {e}")))
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn to_complex(&self) -> Result<EquivariantChainComplex> {
        let group = match &self.group {
            GroupDoc::Cyclic { cyclic } => {
                if *cyclic == 0 {
                    return Err(Error::Document("group: cyclic order must be positive".into()));
                }
                FiniteGroup::cyclic(*cyclic)
            }
            GroupDoc::Table { order, table } => {
                if table.len() != *order {
                    return Err(Error::Document(format!(
                        "group: stated order {order} disagrees with table size {}",
                        table.len()
                    )));
                }
                FiniteGroup::from_table(table.clone())?
            }
        };

        let d = self.cells.len();
        let expected = d.saturating_sub(1);
        if self.boundaries.len() != expected {
            return Err(Error::Document(format!(
                "boundaries: {} matrices for {} cell dimensions (expected {expected})",
                self.boundaries.len(),
                d
            )));
        }
        let mut bs = Vec::with_capacity(expected);
        for (i, rows) in self.boundaries.iter().enumerate() {
            let k = i + 1;
            let want_rows = self.cells[k - 1];
            let want_cols = self.cells[k];
            if rows.len() != want_rows {
                return Err(Error::Document(format!(
                    "boundaries[{i}]: {} rows, but dimension {} has {want_rows} cells",
                    rows.len(),
                    k - 1
                )));
            }
            for (r, row) in rows.iter().enumerate() {
                if row.len() != want_cols {
                    return Err(Error::Document(format!(
                        "boundaries[{i}] row {r}: {} entries, but dimension {k} has {want_cols} cells",
                        row.len()
                    )));
                }
            }
            bs.push(IntMatrix::from_rows(rows));
        }
        let complex = ChainComplex::new(self.cells.clone(), bs)?;
        let action = SignedAction::new(self.action.clone());
        EquivariantChainComplex::new(group, complex, action, self.labels.clone())
    }

    pub fn from_complex(x: &EquivariantChainComplex) -> Result<ComplexDocument> {
        let order = x.group().order();
        let group = if x.group().table() == FiniteGroup::cyclic(order).table() {
            GroupDoc::Cyclic { cyclic: order }
        } else {
            GroupDoc::Table { order, table: x.group().table().to_vec() }
        };
        let cells = x.complex().cell_counts().to_vec();
        let mut boundaries = Vec::new();
        for k in 1..cells.len() {
            let b = x.boundary(k as i64);
            let mut rows = Vec::with_capacity(b.rows());
            for r in 0..b.rows() {
                let mut row = Vec::with_capacity(b.cols());
                for c in 0..b.cols() {
                    row.push(b.get(r, c).to_i64().ok_or_else(|| {
                        Error::Document(format!(
                            "boundary entry at dimension {k} ({r},{c}) exceeds the wire format"
                        ))
                    })?);
                }
                rows.push(row);
            }
            boundaries.push(rows);
        }
        Ok(ComplexDocument {
            group,
            cells,
            boundaries,
            action: x.action().raw().clone(),
            labels: Some(x.labels().clone()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces;

    #[test]
    fn builtins_round_trip_through_the_wire_format() {
        for name in [
            "circle_reflection",
            "circle_rotation(3)",
            "sphere_reflection",
            "lens_sphere(2)",
            "cross_polytope_sphere(2, reflection)",
            "cone_of(point(3))",
        ] {
            let x = spaces::builtin(name).unwrap();
            let doc = ComplexDocument::from_complex(&x).unwrap();
            let text = doc.render();
            let back = ComplexDocument::parse(&text).unwrap().to_complex().unwrap();
            assert_eq!(back.complex(), x.complex(), "{name}");
            assert_eq!(back.action(), x.action(), "{name}");
            assert_eq!(back.group().table(), x.group().table(), "{name}");
            assert_eq!(back.labels(), x.labels(), "{name}");
            // rendering is canonical: a second trip is byte-identical
            assert_eq!(ComplexDocument::from_complex(&back).unwrap().render(), text);
        }
    }

    #[test]
    fn cyclic_groups_use_the_shorthand() {
        let x = spaces::circle_rotation(5).unwrap();
        let doc = ComplexDocument::from_complex(&x).unwrap();
        assert!(matches!(doc.group, GroupDoc::Cyclic { cyclic: 5 }));
        assert!(doc.render().contains("\"cyclic\": 5"));
    }

    #[test]
    fn bad_shapes_name_the_offending_field() {
        let x = spaces::circle_reflection();
        let good = ComplexDocument::from_complex(&x).unwrap();

        let mut doc = good.clone();
        doc.cells = vec![2];
        let err = doc.to_complex().unwrap_err();
        assert!(err.to_string().contains("boundaries"), "{err}");

        let mut doc = good.clone();
        doc.boundaries[0].pop();
        let err = doc.to_complex().unwrap_err();
        assert!(err.to_string().contains("boundaries[0]"), "{err}");

        let mut doc = good.clone();
        doc.group = GroupDoc::Table { order: 3, table: vec![vec![0, 1], vec![1, 0]] };
        let err = doc.to_complex().unwrap_err();
        assert!(err.to_string().contains("order"), "{err}");
    }

    #[test]
    fn non_associative_tables_are_rejected_with_coordinates() {
        let x = spaces::circle_reflection();
        let mut doc = ComplexDocument::from_complex(&x).unwrap();
        // identity rows/columns forced, the rest broken: not associative
        doc.group = GroupDoc::Table {
            order: 3,
            table: vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]],
        };
        let err = doc.to_complex().unwrap_err();
        assert!(
            err.to_string().contains("not associative at ("),
            "unexpected diagnostic: {err}"
        );
    }

    #[test]
    fn malformed_json_is_a_document_error() {
        assert!(matches!(
            ComplexDocument::parse("{ not json"),
            Err(Error::Document(_))
        ));
        assert!(matches!(
            ComplexDocument::parse("{\"cells\": [1]}"),
            Err(Error::Document(_))
        ));
    }
}
