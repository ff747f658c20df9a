//! Verification of cubes, realizations, transversals and paired packs.
//!
//! Every checker returns a [`VerificationReport`] carrying up to
//! [`MAX_VIOLATIONS`] structured violations; errors are reserved for
//! malformed input (wrong dimensions, out-of-range placements).

use crate::error::{Error, Result};
use crate::model::{Cube, PairedPack, PartialCube, Partition, SubcubePlacement, Transversal};

/// Reports are truncated after this many violations.
pub const MAX_VIOLATIONS: usize = 16;

/// Identifies one of the `3n^2` lines of a cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineId {
    /// `(i, j, [n])`
    File(usize, usize),
    /// `(i, [n], k)`
    Row(usize, usize),
    /// `([n], j, k)`
    Col(usize, usize),
}

impl std::fmt::Display for LineId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LineId::File(i, j) => write!(f, "file ({i},{j},*)"),
            LineId::Row(i, k) => write!(f, "row ({i},*,{k})"),
            LineId::Col(j, k) => write!(f, "column (*,{j},{k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A symbol occurs twice in a line.
    DuplicateInLine { line: LineId, symbol: u16 },
    /// A diagonal-block cell holds a symbol outside the block's range.
    BlockSymbolOutside {
        block: usize,
        cell: (usize, usize, usize),
        symbol: u16,
    },
    /// A claimed subcube cell holds a symbol outside the placement's set.
    PlacementSymbolOutside {
        placement: usize,
        cell: (usize, usize, usize),
        symbol: u16,
    },
    /// The restriction of a placement is not a latin cube.
    PlacementNotLatin { placement: usize, detail: String },
    /// Two placements share a row, column, file or symbol.
    PlacementsNotDisjoint {
        first: usize,
        second: usize,
        detail: String,
    },
    /// Two transversal cells agree in some coordinate position.
    TransversalCoordinateClash {
        position: usize,
        first: usize,
        second: usize,
    },
    /// Two transversal cells hold the same symbol.
    TransversalSymbolClash { first: usize, second: usize },
    /// One of the four paired-definition bullets fails.
    PairedBulletFailed {
        bullet: usize,
        cell: [usize; 3],
        detail: String,
    },
    /// A cell violates an extension or partner definition bullet.
    StructuralRule { detail: String },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::DuplicateInLine { line, symbol } => {
                write!(f, "symbol {symbol} repeats in {line}")
            }
            Violation::BlockSymbolOutside {
                block,
                cell,
                symbol,
            } => write!(
                f,
                "block {block} cell ({},{},{}) holds foreign symbol {symbol}",
                cell.0, cell.1, cell.2
            ),
            Violation::PlacementSymbolOutside {
                placement,
                cell,
                symbol,
            } => write!(
                f,
                "placement {placement} cell ({},{},{}) holds foreign symbol {symbol}",
                cell.0, cell.1, cell.2
            ),
            Violation::PlacementNotLatin { placement, detail } => {
                write!(f, "placement {placement} is not a latin subcube: {detail}")
            }
            Violation::PlacementsNotDisjoint {
                first,
                second,
                detail,
            } => write!(f, "placements {first} and {second} share {detail}"),
            Violation::TransversalCoordinateClash {
                position,
                first,
                second,
            } => write!(
                f,
                "transversal cells {first} and {second} agree in position {position}"
            ),
            Violation::TransversalSymbolClash { first, second } => {
                write!(f, "transversal cells {first} and {second} share a symbol")
            }
            Violation::PairedBulletFailed {
                bullet,
                cell,
                detail,
            } => write!(
                f,
                "paired bullet {bullet} fails at cell ({},{},{}): {detail}",
                cell[0], cell[1], cell[2]
            ),
            Violation::StructuralRule { detail } => write!(f, "{detail}"),
        }
    }
}

/// Outcome of a verification: valid iff no violations were recorded.
#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    violations: Vec<Violation>,
    truncated: bool,
}

impl VerificationReport {
    pub fn valid() -> Self {
        VerificationReport::default()
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Records a violation; returns `false` once the report is full.
    pub fn push(&mut self, v: Violation) -> bool {
        if self.violations.len() >= MAX_VIOLATIONS {
            self.truncated = true;
            return false;
        }
        self.violations.push(v);
        true
    }

    fn full(&self) -> bool {
        self.violations.len() >= MAX_VIOLATIONS
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for v in other.violations {
            if !self.push(v) {
                break;
            }
        }
        self.truncated |= other.truncated;
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        writeln!(f, "invalid ({} violations):", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  - {v}")?;
        }
        if self.truncated {
            writeln!(f, "  ... further violations truncated")?;
        }
        Ok(())
    }
}

fn scan_lines(
    order: usize,
    get: impl Fn(usize, usize, usize) -> u16,
    exact: bool,
    report: &mut VerificationReport,
) {
    let n = order;
    let mut seen = vec![0u32; n + 1];
    let mut stamp = 0u32;
    let check_line = |line: LineId,
                          cells: &mut dyn Iterator<Item = u16>,
                          seen: &mut Vec<u32>,
                          stamp: &mut u32,
                          report: &mut VerificationReport| {
        *stamp += 1;
        let mut filled = 0usize;
        for v in cells {
            if v == 0 {
                continue;
            }
            filled += 1;
            if seen[v as usize] == *stamp {
                report.push(Violation::DuplicateInLine {
                    line,
                    symbol: v,
                });
                return;
            }
            seen[v as usize] = *stamp;
        }
        // With no duplicates, a full line of n cells is a permutation; for
        // exact mode every cell must be filled.
        if exact && filled != n {
            report.push(Violation::StructuralRule {
                detail: format!("{line} has {filled} of {n} cells filled"),
            });
        }
    };
    for a in 1..=n {
        for b in 1..=n {
            if report.full() {
                return;
            }
            check_line(
                LineId::File(a, b),
                &mut (1..=n).map(|k| get(a, b, k)),
                &mut seen,
                &mut stamp,
                report,
            );
            check_line(
                LineId::Row(a, b),
                &mut (1..=n).map(|j| get(a, j, b)),
                &mut seen,
                &mut stamp,
                report,
            );
            check_line(
                LineId::Col(a, b),
                &mut (1..=n).map(|i| get(i, a, b)),
                &mut seen,
                &mut stamp,
                report,
            );
        }
    }
}

/// Valid iff all `3n^2` lines are permutations of `[n]`.
pub fn verify_cube(cube: &Cube) -> VerificationReport {
    let mut report = VerificationReport::valid();
    scan_lines(cube.order(), |i, j, k| cube.get(i, j, k), true, &mut report);
    report
}

/// Valid iff no symbol occurs twice in any line.
pub fn verify_partial(cube: &PartialCube) -> VerificationReport {
    let mut report = VerificationReport::valid();
    scan_lines(
        cube.order(),
        |i, j, k| cube.get(i, j, k).unwrap_or(0),
        false,
        &mut report,
    );
    report
}

fn placement_in_range(p: &SubcubePlacement, n: usize) -> Result<()> {
    let m = p.rows.len();
    if p.cols.len() != m || p.files.len() != m || p.symbols.len() != m {
        return Err(Error::PlacementOutOfRange(format!(
            "subset sizes differ: {} rows, {} cols, {} files, {} symbols",
            p.rows.len(),
            p.cols.len(),
            p.files.len(),
            p.symbols.len()
        )));
    }
    for &x in p.rows.iter().chain(&p.cols).chain(&p.files) {
        if x == 0 || x > n {
            return Err(Error::PlacementOutOfRange(format!(
                "coordinate {x} outside 1..={n}"
            )));
        }
    }
    for &s in &p.symbols {
        if s == 0 || s as usize > n {
            return Err(Error::PlacementOutOfRange(format!(
                "symbol {s} outside 1..={n}"
            )));
        }
    }
    Ok(())
}

/// Valid iff each placement restricts to a latin subcube on its symbol set
/// and all pairs are disjoint in rows, columns, files and symbols.
pub fn check_disjoint_subcubes(
    cube: &Cube,
    placements: &[SubcubePlacement],
) -> Result<VerificationReport> {
    let n = cube.order();
    for p in placements {
        placement_in_range(p, n)?;
    }
    let mut report = VerificationReport::valid();
    for (pi, p) in placements.iter().enumerate() {
        let m = p.size();
        // Relabel symbols to 1..=m and check the restriction is latin.
        let mut relabel = vec![0u16; n + 1];
        for (t, &s) in p.symbols.iter().enumerate() {
            relabel[s as usize] = (t + 1) as u16;
        }
        let mut ok = true;
        'outer: for (ai, &i) in p.rows.iter().enumerate() {
            for (aj, &j) in p.cols.iter().enumerate() {
                for (ak, &k) in p.files.iter().enumerate() {
                    let v = cube.get(i, j, k);
                    if relabel[v as usize] == 0 {
                        report.push(Violation::PlacementSymbolOutside {
                            placement: pi,
                            cell: (i, j, k),
                            symbol: v,
                        });
                        ok = false;
                        break 'outer;
                    }
                    let _ = (ai, aj, ak);
                }
            }
        }
        if ok && m > 0 {
            let sub = Cube::from_fn(m, |a, b, c| {
                relabel[cube.get(p.rows[a - 1], p.cols[b - 1], p.files[c - 1]) as usize]
            });
            match sub {
                Ok(sub) => {
                    let r = verify_cube(&sub);
                    if !r.is_valid() {
                        report.push(Violation::PlacementNotLatin {
                            placement: pi,
                            detail: r.violations()[0].to_string(),
                        });
                    }
                }
                Err(e) => {
                    report.push(Violation::PlacementNotLatin {
                        placement: pi,
                        detail: e.to_string(),
                    });
                }
            }
        }
    }
    for a in 0..placements.len() {
        for b in a + 1..placements.len() {
            let pa = &placements[a];
            let pb = &placements[b];
            let clash = |xs: &[usize], ys: &[usize]| -> Option<usize> {
                xs.iter().find(|x| ys.contains(x)).copied()
            };
            if let Some(x) = clash(&pa.rows, &pb.rows) {
                report.push(Violation::PlacementsNotDisjoint {
                    first: a,
                    second: b,
                    detail: format!("row layer {x}"),
                });
            }
            if let Some(x) = clash(&pa.cols, &pb.cols) {
                report.push(Violation::PlacementsNotDisjoint {
                    first: a,
                    second: b,
                    detail: format!("column layer {x}"),
                });
            }
            if let Some(x) = clash(&pa.files, &pb.files) {
                report.push(Violation::PlacementsNotDisjoint {
                    first: a,
                    second: b,
                    detail: format!("file layer {x}"),
                });
            }
            if let Some(s) = pa.symbols.iter().find(|s| pb.symbols.contains(s)) {
                report.push(Violation::PlacementsNotDisjoint {
                    first: a,
                    second: b,
                    detail: format!("symbol {s}"),
                });
            }
        }
    }
    Ok(report)
}

/// Valid iff the cube is latin and every diagonal block `Hm^3` holds only
/// `Hm` symbols (normal form).
pub fn check_realization(cube: &Cube, partition: &Partition) -> Result<VerificationReport> {
    if cube.order() != partition.n() {
        return Err(Error::OrderMismatch(format!(
            "cube order {} vs partition total {}",
            cube.order(),
            partition.n()
        )));
    }
    let mut report = verify_cube(cube);
    for m in 1..=partition.len() {
        let range = partition.block(m);
        let (lo, hi) = (*range.start(), *range.end());
        'block: for i in lo..=hi {
            for j in lo..=hi {
                for k in lo..=hi {
                    let v = cube.get(i, j, k) as usize;
                    if v < lo || v > hi {
                        if !report.push(Violation::BlockSymbolOutside {
                            block: m,
                            cell: (i, j, k),
                            symbol: v as u16,
                        }) {
                            break 'block;
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Valid iff coordinates are pairwise distinct in every position and the
/// cell symbols are pairwise distinct. Partial transversals (`m < n`) pass.
pub fn check_transversal(cube: &Cube, t: &Transversal) -> Result<VerificationReport> {
    let n = cube.order();
    for c in &t.cells {
        for &x in c {
            if x == 0 || x > n {
                return Err(Error::CellOutOfRange(format!(
                    "transversal cell ({},{},{}) outside [{n}]^3",
                    c[0], c[1], c[2]
                )));
            }
        }
    }
    let mut report = VerificationReport::valid();
    let m = t.cells.len();
    for a in 0..m {
        for b in a + 1..m {
            for pos in 0..3 {
                if t.cells[a][pos] == t.cells[b][pos] {
                    report.push(Violation::TransversalCoordinateClash {
                        position: pos + 1,
                        first: a,
                        second: b,
                    });
                }
            }
            let sa = cube.get(t.cells[a][0], t.cells[a][1], t.cells[a][2]);
            let sb = cube.get(t.cells[b][0], t.cells[b][1], t.cells[b][2]);
            if sa == sb {
                report.push(Violation::TransversalSymbolClash {
                    first: a,
                    second: b,
                });
            }
            if report.full() {
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Checks the four bullets of the paired definition for every transversal
/// cell. `L1 = LC(h1..hk)` of order `n-1` and `L2 = LC(h1..h_{k-1}(hk+1))`
/// of order `n`, both in normal form; the transversal has size
/// `m = sum_{i<k} h_i` and `H'_k` is the extended last block.
pub fn check_paired(pack: &PairedPack) -> Result<VerificationReport> {
    let p1 = pack.l1.partition();
    let p2 = pack.l2.partition();
    let k = p1.len();
    if p2.len() != k
        || p1.parts()[..k - 1] != p2.parts()[..k - 1]
        || p2.parts()[k - 1] != p1.parts()[k - 1] + 1
    {
        return Err(Error::PartitionMismatch(format!(
            "{} and {} are not paired partitions",
            p1, p2
        )));
    }
    let n = p2.n();
    let l1 = pack.l1.cube();
    let l2 = pack.l2.cube();
    let m_expected: usize = p1.parts()[..k - 1].iter().sum();

    let mut report = VerificationReport::valid();
    report.merge(check_transversal(l1, &pack.transversal)?);
    if pack.transversal.len() != m_expected {
        report.push(Violation::StructuralRule {
            detail: format!(
                "transversal has {} cells, expected {}",
                pack.transversal.len(),
                m_expected
            ),
        });
    }
    // H'_k = sum_{i<k} h_i + [h_k + 1]; in L2's coordinates this is the last block.
    let hk_lo = m_expected + 1;
    let in_hk = |x: usize| x >= hk_lo && x <= n;

    for cell in &pack.transversal.cells {
        let [i, j, l] = *cell;
        if report.full() {
            break;
        }
        // Bullet 1: no coordinate in H'_k.
        if in_hk(i) || in_hk(j) || in_hk(l) {
            report.push(Violation::PairedBulletFailed {
                bullet: 1,
                cell: *cell,
                detail: "coordinate lies in the extended last block".into(),
            });
            continue;
        }
        // Bullet 2: L1 and L2 agree and the symbol avoids H'_k.
        let s1 = l1.get(i, j, l);
        let s2 = l2.get(i, j, l);
        if s1 != s2 {
            report.push(Violation::PairedBulletFailed {
                bullet: 2,
                cell: *cell,
                detail: format!("L1 holds {s1}, L2 holds {s2}"),
            });
            continue;
        }
        if in_hk(s1 as usize) {
            report.push(Violation::PairedBulletFailed {
                bullet: 2,
                cell: *cell,
                detail: format!("shared symbol {s1} lies in the extended last block"),
            });
            continue;
        }
        // Bullet 3: for every block some coordinate escapes it.
        for m in 1..=k {
            let range = p1.block(m);
            let inside =
                |x: usize| -> bool { x >= *range.start() && x <= *range.end() };
            if inside(i) && inside(j) && inside(l) {
                report.push(Violation::PairedBulletFailed {
                    bullet: 3,
                    cell: *cell,
                    detail: format!("all coordinates lie in block {m}"),
                });
            }
        }
        // Bullet 4: the forced cells of L2.
        let s = s2;
        let forced_eq = [
            (n, n, l, s),
            (n, j, n, s),
            (i, n, n, s),
            (n, j, l, n as u16),
            (i, n, l, n as u16),
            (i, j, n, n as u16),
        ];
        for (a, b, c, want) in forced_eq {
            let got = l2.get(a, b, c);
            if got != want {
                report.push(Violation::PairedBulletFailed {
                    bullet: 4,
                    cell: *cell,
                    detail: format!("L2({a},{b},{c}) = {got}, expected {want}"),
                });
            }
        }
    }
    Ok(report)
}

/// True iff every row and column of the square is a permutation of `[n]`.
pub fn verify_square_latin(sq: &crate::model::Square) -> bool {
    let n = sq.order();
    let mut seen = vec![false; n + 1];
    for i in 1..=n {
        seen.iter_mut().for_each(|s| *s = false);
        for j in 1..=n {
            let v = sq.get(i, j) as usize;
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    for j in 1..=n {
        seen.iter_mut().for_each(|s| *s = false);
        for i in 1..=n {
            let v = sq.get(i, j) as usize;
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    true
}

/// Relabels rows, columns, files and symbols of a cube by the given
/// permutations of `[n]` (`perm[x-1]` is the image of `x`).
pub fn permute(
    cube: &Cube,
    rows: &[usize],
    cols: &[usize],
    files: &[usize],
    symbols: &[usize],
) -> Result<Cube> {
    let n = cube.order();
    for perm in [rows, cols, files, symbols] {
        if perm.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &x in perm {
            if x == 0 || x > n || seen[x] {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: perm.len(),
                });
            }
            seen[x] = true;
        }
    }
    // inverse maps: cell (i,j,k) of the result pulls from the preimage
    let mut inv_r = vec![0usize; n + 1];
    let mut inv_c = vec![0usize; n + 1];
    let mut inv_f = vec![0usize; n + 1];
    for x in 1..=n {
        inv_r[rows[x - 1]] = x;
        inv_c[cols[x - 1]] = x;
        inv_f[files[x - 1]] = x;
    }
    Cube::from_fn(n, |i, j, k| {
        let v = cube.get(inv_r[i], inv_c[j], inv_f[k]);
        symbols[v as usize - 1] as u16
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cyclic_cube, CyclicCoeffs};

    fn small_cyclic(n: usize) -> Cube {
        cyclic_cube(n, &CyclicCoeffs::cube(1, 1, 1, -2)).unwrap()
    }

    #[test]
    fn order_one_cube_is_valid() {
        let c = Cube::from_cells(1, vec![1]).unwrap();
        assert!(verify_cube(&c).is_valid());
    }

    #[test]
    fn duplicate_detected_with_line_id() {
        let c = small_cyclic(3);
        let mut cells = c.cells().to_vec();
        // force a duplicate in file (1,1,*)
        cells[0] = cells[1];
        let bad = Cube::from_cells(3, cells).unwrap();
        let r = verify_cube(&bad);
        assert!(!r.is_valid());
        assert!(matches!(
            r.violations()[0],
            Violation::DuplicateInLine { .. }
        ));
    }

    #[test]
    fn empty_partial_is_valid() {
        let p = PartialCube::empty(3).unwrap();
        assert!(verify_partial(&p).is_valid());
    }

    #[test]
    fn full_cube_is_valid_partial() {
        let p = PartialCube::from_cube(&small_cyclic(4));
        assert!(verify_partial(&p).is_valid());
    }

    #[test]
    fn partial_duplicate_in_file() {
        let mut p = PartialCube::empty(3).unwrap();
        p.set(1, 1, 1, 1);
        p.set(1, 1, 2, 1);
        assert!(!verify_partial(&p).is_valid());
    }

    #[test]
    fn whole_cube_is_its_own_subcube() {
        let c = small_cyclic(4);
        let all: Vec<usize> = (1..=4).collect();
        let syms: Vec<u16> = (1..=4).collect();
        let p = SubcubePlacement::new(all.clone(), all.clone(), all, syms);
        assert!(check_disjoint_subcubes(&c, &[p]).unwrap().is_valid());
    }

    #[test]
    fn shared_row_layer_rejected() {
        let c = small_cyclic(4);
        let p1 = SubcubePlacement::new(vec![1], vec![1], vec![1], vec![c.get(1, 1, 1)]);
        let p2 = SubcubePlacement::new(vec![1], vec![2], vec![2], vec![c.get(1, 2, 2)]);
        let r = check_disjoint_subcubes(&c, &[p1, p2]).unwrap();
        assert!(!r.is_valid());
    }

    #[test]
    fn placement_out_of_range_is_error() {
        let c = small_cyclic(3);
        let p = SubcubePlacement::new(vec![4], vec![1], vec![1], vec![1]);
        assert!(check_disjoint_subcubes(&c, &[p]).is_err());
    }

    #[test]
    fn single_block_partition_accepts_any_latin_cube() {
        let c = small_cyclic(5);
        let p = Partition::new(vec![5]).unwrap();
        assert!(check_realization(&c, &p).unwrap().is_valid());
    }

    #[test]
    fn order_mismatch_is_error() {
        let c = small_cyclic(4);
        let p = Partition::new(vec![2, 2, 1]).unwrap();
        assert!(check_realization(&c, &p).is_err());
    }

    #[test]
    fn main_diagonal_of_cyclic_cube_is_transversal() {
        // C(i,j,k) = i + j - k has C(m,m,m) = m.
        let c = cyclic_cube(5, &CyclicCoeffs::cube(1, 1, -1, 0)).unwrap();
        let t = Transversal::new((1..=5).map(|m| [m, m, m]).collect());
        assert!(check_transversal(&c, &t).unwrap().is_valid());
    }

    #[test]
    fn same_row_layer_cells_rejected() {
        let c = small_cyclic(4);
        let t = Transversal::new(vec![[1, 1, 1], [1, 2, 2]]);
        let r = check_transversal(&c, &t).unwrap();
        assert!(!r.is_valid());
        assert!(matches!(
            r.violations()[0],
            Violation::TransversalCoordinateClash { position: 1, .. }
        ));
    }

    #[test]
    fn transversal_cell_out_of_range_is_error() {
        let c = small_cyclic(3);
        let t = Transversal::new(vec![[0, 1, 1]]);
        assert!(check_transversal(&c, &t).is_err());
    }

    #[test]
    fn identity_permutation_fixes_cube() {
        let c = small_cyclic(4);
        let id: Vec<usize> = (1..=4).collect();
        assert_eq!(permute(&c, &id, &id, &id, &id).unwrap(), c);
    }

    #[test]
    fn permute_then_invert_roundtrips() {
        let c = small_cyclic(5);
        let p: Vec<usize> = vec![3, 1, 4, 5, 2];
        let mut inv = vec![0usize; 5];
        for (x, &y) in p.iter().enumerate() {
            inv[y - 1] = x + 1;
        }
        let moved = permute(&c, &p, &p, &p, &p).unwrap();
        let back = permute(&moved, &inv, &inv, &inv, &inv).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn permute_preserves_latin() {
        let c = small_cyclic(6);
        let p: Vec<usize> = vec![2, 4, 6, 1, 3, 5];
        let q: Vec<usize> = vec![6, 5, 4, 3, 2, 1];
        let id: Vec<usize> = (1..=6).collect();
        let moved = permute(&c, &p, &q, &id, &p).unwrap();
        assert!(verify_cube(&moved).is_valid());
    }

    #[test]
    fn permute_rejects_non_permutation() {
        let c = small_cyclic(3);
        let id: Vec<usize> = (1..=3).collect();
        assert!(permute(&c, &[1, 1, 2], &id, &id, &id).is_err());
        assert!(permute(&c, &[1, 2], &id, &id, &id).is_err());
    }
}
