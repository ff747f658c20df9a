//! Domain types: squares, cubes, partial objects, partitions, realizations.
//!
//! All coordinates and symbols are 1-based. Cubes are stored dense, one
//! `u16` per cell; `0` encodes an empty cell of a partial object. Orders
//! are bounded to `1..=1024`.

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 1024;

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    Ok(())
}

/// A filled `n x n x n` symbol table. Latin-ness is a property checked by
/// [`crate::verify::verify_cube`], not an invariant of the type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cube {
    order: usize,
    cells: Vec<u16>,
}

impl Cube {
    /// Builds a cube from cells in file-major order: index `((i-1)*n + (j-1))*n + (k-1)`.
    pub fn from_cells(order: usize, cells: Vec<u16>) -> Result<Self> {
        check_order(order)?;
        if cells.len() != order * order * order {
            return Err(Error::DimensionMismatch(format!(
                "expected {} cells for order {}, got {}",
                order * order * order,
                order,
                cells.len()
            )));
        }
        if let Some(&bad) = cells.iter().find(|&&v| v == 0 || v as usize > order) {
            return Err(Error::DimensionMismatch(format!(
                "symbol {bad} outside 1..={order}"
            )));
        }
        Ok(Cube { order, cells })
    }

    /// Builds the cube by evaluating `f(i,j,k)` at every 1-based coordinate.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize, usize) -> u16) -> Result<Self> {
        check_order(order)?;
        let mut cells = Vec::with_capacity(order * order * order);
        for i in 1..=order {
            for j in 1..=order {
                for k in 1..=order {
                    cells.push(f(i, j, k));
                }
            }
        }
        Cube::from_cells(order, cells)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u16 {
        let n = self.order;
        debug_assert!(1 <= i && i <= n && 1 <= j && j <= n && 1 <= k && k <= n);
        self.cells[((i - 1) * n + (j - 1)) * n + (k - 1)]
    }

    pub fn cells(&self) -> &[u16] {
        &self.cells
    }
}

/// An `n x n x n` table with optional cells (`0` = empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialCube {
    order: usize,
    cells: Vec<u16>,
}

impl PartialCube {
    pub fn empty(order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(PartialCube {
            order,
            cells: vec![0; order * order * order],
        })
    }

    pub fn from_cells(order: usize, cells: Vec<u16>) -> Result<Self> {
        check_order(order)?;
        if cells.len() != order * order * order {
            return Err(Error::DimensionMismatch(format!(
                "expected {} cells for order {}, got {}",
                order * order * order,
                order,
                cells.len()
            )));
        }
        if let Some(&bad) = cells.iter().find(|&&v| v as usize > order) {
            return Err(Error::DimensionMismatch(format!(
                "symbol {bad} outside 1..={order}"
            )));
        }
        Ok(PartialCube { order, cells })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.order;
        debug_assert!(1 <= i && i <= n && 1 <= j && j <= n && 1 <= k && k <= n);
        ((i - 1) * n + (j - 1)) * n + (k - 1)
    }

    /// Symbol at `(i,j,k)`, or `None` when the cell is empty.
    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> Option<u16> {
        match self.cells[self.idx(i, j, k)] {
            0 => None,
            v => Some(v),
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: u16) {
        debug_assert!(v as usize <= self.order);
        let idx = self.idx(i, j, k);
        self.cells[idx] = v;
    }

    /// Writes `v` at `(i,j,k)`, failing if the cell already holds a symbol.
    pub fn write_once(&mut self, i: usize, j: usize, k: usize, v: u16) -> Result<()> {
        let idx = self.idx(i, j, k);
        if self.cells[idx] != 0 {
            return Err(Error::AssemblyOverlap(i, j, k));
        }
        self.cells[idx] = v;
        Ok(())
    }

    pub fn clear(&mut self, i: usize, j: usize, k: usize) {
        let idx = self.idx(i, j, k);
        self.cells[idx] = 0;
    }

    pub fn cells(&self) -> &[u16] {
        &self.cells
    }

    pub fn count_empty(&self) -> usize {
        self.cells.iter().filter(|&&v| v == 0).count()
    }

    /// Converts to a [`Cube`]; fails if any cell is still empty.
    pub fn into_cube(self) -> Result<Cube> {
        if self.cells.iter().any(|&v| v == 0) {
            return Err(Error::DimensionMismatch(
                "partial cube has empty cells".into(),
            ));
        }
        Cube::from_cells(self.order, self.cells)
    }

    pub fn from_cube(cube: &Cube) -> Self {
        PartialCube {
            order: cube.order(),
            cells: cube.cells().to_vec(),
        }
    }
}

/// A filled `n x n` symbol table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Square {
    order: usize,
    cells: Vec<u16>,
}

impl Square {
    pub fn from_cells(order: usize, cells: Vec<u16>) -> Result<Self> {
        check_order(order)?;
        if cells.len() != order * order {
            return Err(Error::DimensionMismatch(format!(
                "expected {} cells for order {}, got {}",
                order * order,
                order,
                cells.len()
            )));
        }
        if let Some(&bad) = cells.iter().find(|&&v| v == 0 || v as usize > order) {
            return Err(Error::DimensionMismatch(format!(
                "symbol {bad} outside 1..={order}"
            )));
        }
        Ok(Square { order, cells })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> u16) -> Result<Self> {
        check_order(order)?;
        let mut cells = Vec::with_capacity(order * order);
        for i in 1..=order {
            for j in 1..=order {
                cells.push(f(i, j));
            }
        }
        Square::from_cells(order, cells)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        debug_assert!(1 <= i && i <= self.order && 1 <= j && j <= self.order);
        self.cells[(i - 1) * self.order + (j - 1)]
    }

    pub fn cells(&self) -> &[u16] {
        &self.cells
    }
}

/// An `r x s` array over symbols of `[ambient]`, each symbol at most once
/// per row and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rectangle {
    rows: usize,
    cols: usize,
    ambient: usize,
    cells: Vec<u16>,
}

impl Rectangle {
    pub fn from_cells(rows: usize, cols: usize, ambient: usize, cells: Vec<u16>) -> Result<Self> {
        check_order(ambient)?;
        if rows > ambient || cols > ambient || rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "rectangle {rows}x{cols} does not fit ambient order {ambient}"
            )));
        }
        if cells.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} cells, got {}",
                rows * cols,
                cells.len()
            )));
        }
        if let Some(&bad) = cells.iter().find(|&&v| v == 0 || v as usize > ambient) {
            return Err(Error::DimensionMismatch(format!(
                "symbol {bad} outside 1..={ambient}"
            )));
        }
        let r = Rectangle {
            rows,
            cols,
            ambient,
            cells,
        };
        for i in 1..=rows {
            let mut seen = vec![false; ambient + 1];
            for j in 1..=cols {
                let v = r.get(i, j) as usize;
                if seen[v] {
                    return Err(Error::DimensionMismatch(format!(
                        "symbol {v} repeats in row {i}"
                    )));
                }
                seen[v] = true;
            }
        }
        for j in 1..=cols {
            let mut seen = vec![false; ambient + 1];
            for i in 1..=rows {
                let v = r.get(i, j) as usize;
                if seen[v] {
                    return Err(Error::DimensionMismatch(format!(
                        "symbol {v} repeats in column {j}"
                    )));
                }
                seen[v] = true;
            }
        }
        Ok(r)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        debug_assert!(1 <= i && i <= self.rows && 1 <= j && j <= self.cols);
        self.cells[(i - 1) * self.cols + (j - 1)]
    }

    /// Occurrence count of every symbol of `[ambient]`, indexed 1-based.
    pub fn symbol_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.ambient + 1];
        for &v in &self.cells {
            counts[v as usize] += 1;
        }
        counts
    }
}

/// An `r x s x t` array with optional cells over symbols of `[ambient]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinBox {
    dims: (usize, usize, usize),
    ambient: usize,
    cells: Vec<u16>,
}

impl LatinBox {
    pub fn empty(dims: (usize, usize, usize), ambient: usize) -> Result<Self> {
        check_order(ambient)?;
        let (r, s, t) = dims;
        if r > ambient || s > ambient || t > ambient || r == 0 || s == 0 || t == 0 {
            return Err(Error::DimensionMismatch(format!(
                "box {r}x{s}x{t} does not fit ambient order {ambient}"
            )));
        }
        Ok(LatinBox {
            dims,
            ambient,
            cells: vec![0; r * s * t],
        })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        let (r, s, t) = self.dims;
        debug_assert!(1 <= i && i <= r && 1 <= j && j <= s && 1 <= k && k <= t);
        ((i - 1) * s + (j - 1)) * t + (k - 1)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> Option<u16> {
        match self.cells[self.idx(i, j, k)] {
            0 => None,
            v => Some(v),
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: u16) {
        debug_assert!(v as usize <= self.ambient);
        let idx = self.idx(i, j, k);
        self.cells[idx] = v;
    }

    pub fn count_empty(&self) -> usize {
        self.cells.iter().filter(|&&v| v == 0).count()
    }
}

/// A non-increasing partition `h1 >= h2 >= ... >= hk > 0` of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.iter().any(|&h| h == 0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be non-increasing".into(),
            ));
        }
        let p = Partition { parts };
        check_order(p.n())?;
        Ok(p)
    }

    /// Sorts the parts into non-increasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total `n = sum h_i`.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The 1-based index range `H_m = sum_{i<m} h_i + [h_m]` of block `m` (1-based).
    pub fn block(&self, m: usize) -> std::ops::RangeInclusive<usize> {
        debug_assert!(1 <= m && m <= self.parts.len());
        let off: usize = self.parts[..m - 1].iter().sum();
        off + 1..=off + self.parts[m - 1]
    }

    /// Block index (1-based) containing symbol or coordinate `x`, if any.
    pub fn block_of(&self, x: usize) -> Option<usize> {
        let mut off = 0;
        for (m, &h) in self.parts.iter().enumerate() {
            if x > off && x <= off + h {
                return Some(m + 1);
            }
            off += h;
        }
        None
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|h| h.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// Three equal-size coordinate subsets plus a symbol set, marking a claimed
/// subcube of a host cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubcubePlacement {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub files: Vec<usize>,
    pub symbols: Vec<u16>,
}

impl SubcubePlacement {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>, files: Vec<usize>, symbols: Vec<u16>) -> Self {
        SubcubePlacement {
            rows,
            cols,
            files,
            symbols,
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

/// A set of cells with pairwise distinct coordinates in every position.
/// A full transversal has `n` cells; partial transversals are shorter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    pub cells: Vec<[usize; 3]>,
}

impl Transversal {
    pub fn new(cells: Vec<[usize; 3]>) -> Self {
        Transversal { cells }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// A normal-form realization: a latin cube whose diagonal blocks
/// `Hm x Hm x Hm` hold exactly the symbols of `Hm`.
///
/// Constructed only through [`Realization::new`], which runs
/// [`crate::verify::check_realization`] and rejects invalid input, so a
/// value of this type is always verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    partition: Partition,
    cube: Cube,
}

impl Realization {
    pub fn new(cube: Cube, partition: Partition) -> Result<Self> {
        let report = crate::verify::check_realization(&cube, &partition)?;
        if !report.is_valid() {
            return Err(Error::ConstructionFailed(format!(
                "not a realization of {partition}: {report}"
            )));
        }
        Ok(Realization { partition, cube })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn cube(&self) -> &Cube {
        &self.cube
    }

    pub fn order(&self) -> usize {
        self.cube.order()
    }

    pub fn into_cube(self) -> Cube {
        self.cube
    }
}

/// Two paired realizations `L1 = LC(h1...hk)` and `L2 = LC(h1...h_{k-1}(hk+1))`
/// sharing a partial transversal. Verified on construction.
#[derive(Debug, Clone)]
pub struct PairedPack {
    pub l1: Realization,
    pub l2: Realization,
    pub transversal: Transversal,
}

impl PairedPack {
    pub fn new(l1: Realization, l2: Realization, transversal: Transversal) -> Result<Self> {
        let pack = PairedPack {
            l1,
            l2,
            transversal,
        };
        let report = crate::verify::check_paired(&pack)?;
        if !report.is_valid() {
            return Err(Error::PackInvalid(report.to_string()));
        }
        Ok(pack)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_blocks() {
        let p = Partition::new(vec![2, 2, 1]).unwrap();
        assert_eq!(p.n(), 5);
        assert_eq!(p.block(1), 1..=2);
        assert_eq!(p.block(2), 3..=4);
        assert_eq!(p.block(3), 5..=5);
        assert_eq!(p.block_of(3), Some(2));
        assert_eq!(p.block_of(5), Some(3));
        assert_eq!(p.block_of(6), None);
    }

    #[test]
    fn partition_rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::from_unsorted(vec![1, 2]).is_ok());
    }

    #[test]
    fn cube_rejects_out_of_range_symbols() {
        assert!(Cube::from_cells(1, vec![2]).is_err());
        assert!(Cube::from_cells(1, vec![0]).is_err());
        assert!(Cube::from_cells(1, vec![1]).is_ok());
    }

    #[test]
    fn partial_cube_write_once() {
        let mut p = PartialCube::empty(2).unwrap();
        p.write_once(1, 1, 1, 2).unwrap();
        assert_eq!(
            p.write_once(1, 1, 1, 1),
            Err(Error::AssemblyOverlap(1, 1, 1))
        );
        assert_eq!(p.get(1, 1, 1), Some(2));
        assert_eq!(p.get(2, 2, 2), None);
    }

    #[test]
    fn rectangle_rejects_row_repeat() {
        assert!(Rectangle::from_cells(1, 2, 3, vec![1, 1]).is_err());
        assert!(Rectangle::from_cells(2, 1, 3, vec![2, 2]).is_err());
        assert!(Rectangle::from_cells(2, 2, 3, vec![1, 2, 2, 1]).is_ok());
    }
}
