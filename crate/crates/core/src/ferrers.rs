//! Ferrers diagrams and vertical packet addition.
//!
//! A diagram draws part `i` as a row of `parts[i]` cells, `*` for existing
//! cells and `#` for newly added ones. Adding a vertical packet of `k` cells to
//! a partition either stacks it below the diagram as `k` new parts equal to 1,
//! or slots it into a column to the right of `k` equal rows, raising each by
//! one. A packet never lies horizontally, so those placements have no
//! representation here.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::partition::{enumerate_partitions, EnumerationCap, Partition};
use crate::{BigCount, Error, Result};

/// A `(row, column)` position, both zero-based.
pub type Cell = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FerrersDiagram {
    shape: Partition,
    marks: BTreeSet<Cell>,
}

impl FerrersDiagram {
    pub fn new(shape: Partition) -> Self {
        Self { shape, marks: BTreeSet::new() }
    }

    /// Diagram with marked cells. Each mark must be a cell of `shape`, and
    /// deleting the marks must leave a Ferrers diagram: marks sit at the right
    /// end of their rows and the remaining row lengths do not increase.
    pub fn with_marks(shape: Partition, marks: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let marks: BTreeSet<Cell> = marks.into_iter().collect();
        let parts = shape.parts();
        for &(row, col) in &marks {
            match parts.get(row) {
                Some(&len) if (col as u64) < len => {}
                _ => {
                    return Err(Error::InvalidMarks(format!(
                        "({row}, {col}) is not a cell of {shape}"
                    )))
                }
            }
        }
        let d = Self { shape, marks };
        let remaining = d.remaining_lengths();
        for (row, &len) in remaining.iter().enumerate() {
            let full = d.shape.parts()[row];
            if (len..full).any(|col| !d.marks.contains(&(row, col as usize))) {
                return Err(Error::InvalidMarks(format!(
                    "marks in row {row} are not at the end of the row"
                )));
            }
        }
        if remaining.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidMarks(
                "unmarked cells do not form a Ferrers diagram".into(),
            ));
        }
        Ok(d)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn marks(&self) -> &BTreeSet<Cell> {
        &self.marks
    }

    fn remaining_lengths(&self) -> Vec<u64> {
        let mut lengths = self.shape.parts().to_vec();
        for &(row, _) in &self.marks {
            lengths[row] -= 1;
        }
        lengths
    }

    /// The partition drawn by the unmarked cells.
    pub fn source(&self) -> Partition {
        let mut lengths = self.remaining_lengths();
        lengths.retain(|&l| l > 0);
        Partition::from_sorted(lengths)
    }

    /// One string per row, top to bottom.
    pub fn lines(&self) -> Vec<String> {
        self.shape
            .parts()
            .iter()
            .enumerate()
            .map(|(row, &len)| {
                (0..len as usize)
                    .map(|col| if self.marks.contains(&(row, col)) { '#' } else { '*' })
                    .collect()
            })
            .collect()
    }

    /// Newline-terminated rows; the empty diagram renders as `""`.
    pub fn render(&self) -> String {
        self.lines().into_iter().map(|l| l + "\n").collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AdditionKind {
    /// `k` new parts equal to 1.
    SeparateUnit,
    /// The first `k` parts equal to `value` each raised to `value + 1`.
    Merge { value: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PacketResult {
    pub kind: AdditionKind,
    /// Result partition with the packet's cells marked.
    pub diagram: FerrersDiagram,
}

impl PacketResult {
    pub fn partition(&self) -> &Partition {
        self.diagram.shape()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PacketAdditionOutcome {
    pub source: Partition,
    pub k: u64,
    /// Separate-unit result first, then merges by decreasing part value.
    pub results: Vec<PacketResult>,
}

fn require_packet_size(k: u64) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidPartIndex(k))
    } else {
        Ok(())
    }
}

/// Distinct part values occurring at least `k` times, largest first. Each
/// admits exactly one merge, however many copies it has.
pub fn merge_sites(p: &Partition, k: u64) -> Result<Vec<u64>> {
    require_packet_size(k)?;
    Ok(p.runs().filter(|&(_, m)| m >= k).map(|(v, _)| v).collect())
}

/// Every partition of `n + k` obtained by adding a vertical `k`-packet to `p`.
pub fn add_packet(p: &Partition, k: u64) -> Result<PacketAdditionOutcome> {
    let sites = merge_sites(p, k)?;
    let parts = p.parts();
    let len = parts.len();
    let mut results = Vec::with_capacity(1 + sites.len());

    let mut stacked = parts.to_vec();
    stacked.extend(std::iter::repeat_n(1, k as usize));
    let marks = (len..len + k as usize).map(|row| (row, 0));
    results.push(PacketResult {
        kind: AdditionKind::SeparateUnit,
        diagram: FerrersDiagram::with_marks(Partition::from_sorted(stacked), marks)?,
    });

    for value in sites {
        let top = parts.iter().position(|&x| x == value).expect("site is a part");
        let rows = top..top + k as usize;
        let mut raised = parts.to_vec();
        for part in &mut raised[rows.clone()] {
            *part += 1;
        }
        let marks = rows.map(|row| (row, value as usize));
        results.push(PacketResult {
            kind: AdditionKind::Merge { value },
            diagram: FerrersDiagram::with_marks(Partition::from_sorted(raised), marks)?,
        });
    }

    Ok(PacketAdditionOutcome { source: p.clone(), k, results })
}

/// Number of packet additions over all partitions of `n`, counting a result
/// once per source that produces it.
pub fn count_new_partitions(n: u64, k: u64, cap: EnumerationCap) -> Result<BigCount> {
    require_packet_size(k)?;
    let total: u128 = enumerate_partitions(n, cap)?
        .map(|p| 1 + p.runs().filter(|&(_, m)| m >= k).count() as u128)
        .sum();
    Ok(total.into())
}

/// A labelled diagram in a [`render_gallery`] grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Panel {
    pub label: String,
    pub diagram: FerrersDiagram,
}

impl Panel {
    /// Labels the diagram with its partition, `()` for the empty one.
    pub fn of(diagram: FerrersDiagram) -> Self {
        let label = match diagram.shape().to_string() {
            s if s.is_empty() => "()".to_owned(),
            s => s,
        };
        Self { label, diagram }
    }

    fn width(&self) -> usize {
        let widest_row = self.diagram.shape().parts().first().copied().unwrap_or(0) as usize;
        self.label.chars().count().max(widest_row)
    }
}

const GALLERY_GAP: usize = 3;

/// Lays panels out side by side, one band of rows per inner vector, in the
/// usual gallery style: a label line, then the diagram rows. Column `j` of
/// every band shares one width; `None` leaves the slot blank. Bands are
/// separated by a blank line and no line has trailing spaces.
pub fn render_gallery(bands: &[Vec<Option<Panel>>]) -> String {
    let columns = bands.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|j| {
            bands
                .iter()
                .filter_map(|b| b.get(j).and_then(Option::as_ref))
                .map(Panel::width)
                .max()
                .unwrap_or(0)
        })
        .collect();

    let mut out = String::new();
    for (b, band) in bands.iter().enumerate() {
        if b > 0 {
            out.push('\n');
        }
        let cells: Vec<Option<(String, Vec<String>)>> = band
            .iter()
            .map(|p| p.as_ref().map(|p| (p.label.clone(), p.diagram.lines())))
            .collect();
        let height = cells.iter().flatten().map(|(_, l)| l.len()).max().unwrap_or(0);
        for line in 0..=height {
            let mut text = String::new();
            for (j, cell) in cells.iter().enumerate() {
                let piece = match cell {
                    Some((label, _)) if line == 0 => label.as_str(),
                    Some((_, rows)) if line > 0 => rows.get(line - 1).map_or("", String::as_str),
                    _ => "",
                };
                if j > 0 {
                    text.push_str(&" ".repeat(GALLERY_GAP));
                }
                text.push_str(&format!("{piece:<width$}", width = widths[j]));
            }
            out.push_str(text.trim_end());
            out.push('\n');
        }
    }
    out
}

/// All partitions of `n` in canonical order, side by side.
pub fn partitions_gallery(n: u64, cap: EnumerationCap) -> Result<String> {
    let band = enumerate_partitions(n, cap)?
        .map(|p| Some(Panel::of(FerrersDiagram::new(p))))
        .collect();
    Ok(render_gallery(&[band]))
}

/// Packet additions to every partition of `n`: one column per source
/// partition, the separate-unit results in the first band and the `i`-th merge
/// of each source in band `i`.
pub fn packet_gallery(n: u64, k: u64, cap: EnumerationCap) -> Result<String> {
    let outcomes = enumerate_partitions(n, cap)?
        .map(|p| add_packet(&p, k))
        .collect::<Result<Vec<_>>>()?;
    let depth = outcomes.iter().map(|o| o.results.len()).max().unwrap_or(0);
    let bands: Vec<Vec<Option<Panel>>> = (0..depth)
        .map(|band| {
            outcomes
                .iter()
                .map(|o| o.results.get(band).map(|r| Panel::of(r.diagram.clone())))
                .collect()
        })
        .collect();
    Ok(render_gallery(&bands))
}

impl PacketAdditionOutcome {
    /// The results side by side in a single band.
    pub fn gallery(&self) -> String {
        let band = self
            .results
            .iter()
            .map(|r| Some(Panel::of(r.diagram.clone())))
            .collect::<Vec<_>>();
        render_gallery(&[band])
    }
}
