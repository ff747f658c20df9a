//! Completion engines: latin-rectangle extension, the right-corner-channel
//! fill, proper edge coloring of regular bipartite multigraphs, and the
//! back-entry fill. All are driven by one bipartite matching kernel.

use crate::error::{Error, Result};
use crate::model::{LatinBox, Rectangle, Square};

/// Maximum bipartite matching as a left-indexed assignment.
///
/// `adj[u]` lists the right vertices adjacent to left vertex `u`. Every
/// vertex in `forced` (right side) is saturated if any maximum matching
/// saturates them all; otherwise `ForcedUnsaturable`. Deterministic given
/// the input ordering: forced vertices are matched first, in order, then
/// the matching is grown from unmatched left vertices in order.
pub fn max_bipartite_matching(
    adj: &[Vec<usize>],
    right_count: usize,
    forced: &[usize],
) -> Result<Vec<Option<usize>>> {
    let left_count = adj.len();
    let mut match_l: Vec<Option<usize>> = vec![None; left_count];
    let mut match_r: Vec<Option<usize>> = vec![None; right_count];
    // Adjacency from the right side, in left order.
    let mut radj: Vec<Vec<usize>> = vec![Vec::new(); right_count];
    for (u, vs) in adj.iter().enumerate() {
        for &v in vs {
            debug_assert!(v < right_count);
            radj[v].push(u);
        }
    }

    // Augment along an alternating path starting at right vertex `v`.
    fn augment_right(
        v: usize,
        radj: &[Vec<usize>],
        match_l: &mut [Option<usize>],
        match_r: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &u in &radj[v] {
            if seen[u] {
                continue;
            }
            seen[u] = true;
            let next = match_l[u];
            let ok = match next {
                None => true,
                Some(w) => augment_right(w, radj, match_l, match_r, seen),
            };
            if ok {
                match_l[u] = Some(v);
                match_r[v] = Some(u);
                return true;
            }
        }
        false
    }

    for &v in forced {
        if v >= right_count {
            return Err(Error::CellOutOfRange(format!(
                "forced vertex {v} outside right side of size {right_count}"
            )));
        }
        if match_r[v].is_some() {
            continue;
        }
        let mut seen = vec![false; left_count];
        if !augment_right(v, &radj, &mut match_l, &mut match_r, &mut seen) {
            return Err(Error::ForcedUnsaturable);
        }
    }

    fn augment_left(
        u: usize,
        adj: &[Vec<usize>],
        match_l: &mut [Option<usize>],
        match_r: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            let ok = match match_r[v] {
                None => true,
                Some(w) => augment_left(w, adj, match_l, match_r, seen),
            };
            if ok {
                match_l[u] = Some(v);
                match_r[v] = Some(u);
                return true;
            }
        }
        false
    }

    for u in 0..left_count {
        if match_l[u].is_none() {
            let mut seen = vec![false; right_count];
            augment_left(u, adj, &mut match_l, &mut match_r, &mut seen);
        }
    }
    Ok(match_l)
}

/// Extends an `r x s` latin rectangle on `[n]` to `r x n`, column by column.
///
/// Succeeds exactly when the Ryser condition `N(i) >= r + s - n` holds for
/// every symbol. Within each new column, symbols whose remaining slack is
/// zero are forced into the matching.
pub fn extend_rectangle(rect: &Rectangle) -> Result<Rectangle> {
    let (r, s, n) = (rect.rows(), rect.cols(), rect.ambient());
    let counts = rect.symbol_counts();
    for sym in 1..=n {
        let needed = (r + s).saturating_sub(n);
        if counts[sym] < needed {
            return Err(Error::RyserViolated {
                symbol: sym as u16,
                count: counts[sym],
                needed,
            });
        }
    }
    let mut rows: Vec<Vec<u16>> = (1..=r)
        .map(|i| (1..=s).map(|j| rect.get(i, j)).collect())
        .collect();
    let mut in_row: Vec<Vec<bool>> = vec![vec![false; n + 1]; r];
    let mut count = vec![0usize; n + 1];
    for (i, row) in rows.iter().enumerate() {
        for &v in row {
            in_row[i][v as usize] = true;
            count[v as usize] += 1;
        }
    }
    for width in s..n {
        // Symbol sym must enter this column when its count has no slack.
        let forced: Vec<usize> = (1..=n)
            .filter(|&sym| count[sym] + n == r + width)
            .map(|sym| sym - 1)
            .collect();
        let adj: Vec<Vec<usize>> = (0..r)
            .map(|i| {
                (1..=n)
                    .filter(|&sym| !in_row[i][sym])
                    .map(|sym| sym - 1)
                    .collect()
            })
            .collect();
        let matching = max_bipartite_matching(&adj, n, &forced)?;
        for (i, m) in matching.iter().enumerate() {
            let sym = m.ok_or_else(|| {
                Error::ConstructionFailed(format!("row {} unmatched at width {width}", i + 1))
            })? + 1;
            rows[i].push(sym as u16);
            in_row[i][sym] = true;
            count[sym] += 1;
        }
    }
    Rectangle::from_cells(r, n, n, rows.into_iter().flatten().collect())
}

/// Completes an `r x n` latin rectangle with full rows to an `n x n` latin
/// square by adding one row at a time (a perfect matching between columns
/// and their missing symbols).
pub fn complete_to_square(rect: &Rectangle) -> Result<Square> {
    let (r, n) = (rect.rows(), rect.cols());
    if rect.ambient() != n {
        return Err(Error::DimensionMismatch(format!(
            "rectangle width {n} must equal ambient {}",
            rect.ambient()
        )));
    }
    let mut in_col: Vec<Vec<bool>> = vec![vec![false; n + 1]; n];
    let mut rows: Vec<Vec<u16>> = Vec::with_capacity(n);
    for i in 1..=r {
        let row: Vec<u16> = (1..=n).map(|j| rect.get(i, j)).collect();
        for (j, &v) in row.iter().enumerate() {
            in_col[j][v as usize] = true;
        }
        rows.push(row);
    }
    for _ in r..n {
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|j| {
                (1..=n)
                    .filter(|&sym| !in_col[j][sym])
                    .map(|sym| sym - 1)
                    .collect()
            })
            .collect();
        let matching = max_bipartite_matching(&adj, n, &[])?;
        let mut row = vec![0u16; n];
        for (j, m) in matching.iter().enumerate() {
            let sym = m.ok_or_else(|| {
                Error::ConstructionFailed(format!("column {} unmatched", j + 1))
            })? + 1;
            row[j] = sym as u16;
            in_col[j][sym] = true;
        }
        rows.push(row);
    }
    Square::from_cells(n, rows.into_iter().flatten().collect())
}

/// Completes an `n x n x r` latin box whose only empty cells form the
/// corner channel `(i, j, k)` for `i, j in n-s+[s]`, `k in [r]`.
///
/// Hypotheses, checked before filling: for each layer `k` the filled parts
/// of all band rows and band columns carry one common symbol set `V_k`,
/// and every symbol occurs at least `r - s` times in the row layer
/// `(n-s+1, *, *)`. The band layer of rows is completed through a Ryser
/// extension of layer `n-s+1`; deeper band rows are cyclic right-shifts of
/// the first.
pub fn complete_right_corner_channel(cbox: &LatinBox, s: usize) -> Result<LatinBox> {
    let (bn, bs, br) = cbox.dims();
    if bn != bs {
        return Err(Error::DimensionMismatch(format!(
            "corner channel needs an n x n x r box, got {bn} x {bs} x {br}"
        )));
    }
    let n = cbox.ambient();
    if bn != n {
        return Err(Error::DimensionMismatch(format!(
            "box side {bn} must equal ambient {n}"
        )));
    }
    let r = br;
    if s > n || r < s {
        return Err(Error::HypothesisViolated(format!(
            "band size s={s} incompatible with n={n}, r={r}"
        )));
    }
    if s == 0 {
        return Ok(cbox.clone());
    }
    let band = n - s + 1..=n;

    // Empty cells are exactly the channel.
    for i in 1..=n {
        for j in 1..=n {
            let expect_empty = band.contains(&i) && band.contains(&j);
            for k in 1..=r {
                match (cbox.get(i, j, k), expect_empty) {
                    (None, false) => {
                        return Err(Error::HypothesisViolated(format!(
                            "cell ({i},{j},{k}) empty outside the channel"
                        )))
                    }
                    (Some(v), true) => {
                        return Err(Error::HypothesisViolated(format!(
                            "channel cell ({i},{j},{k}) already holds {v}"
                        )))
                    }
                    _ => {}
                }
            }
        }
    }

    // Common symbol set V_k per layer across band rows and band columns.
    let mut vk_sets: Vec<Vec<bool>> = Vec::with_capacity(r);
    for k in 1..=r {
        let line_set = |cells: &mut dyn Iterator<Item = Option<u16>>| -> Vec<bool> {
            let mut set = vec![false; n + 1];
            for v in cells.flatten() {
                set[v as usize] = true;
            }
            set
        };
        let vk = line_set(&mut (1..=n).map(|j| cbox.get(n - s + 1, j, k)));
        for i in band.clone() {
            let row = line_set(&mut (1..=n).map(|j| cbox.get(i, j, k)));
            if row != vk {
                return Err(Error::HypothesisViolated(format!(
                    "row ({i},*,{k}) carries a different symbol set than V_{k}"
                )));
            }
        }
        for j in band.clone() {
            let col = line_set(&mut (1..=n).map(|i| cbox.get(i, j, k)));
            if col != vk {
                return Err(Error::HypothesisViolated(format!(
                    "column (*,{j},{k}) carries a different symbol set than V_{k}"
                )));
            }
        }
        vk_sets.push(vk);
    }

    // Occurrence counts in the layer (n-s+1, *, *).
    let mut layer_counts = vec![0usize; n + 1];
    for j in 1..=n {
        for k in 1..=r {
            if let Some(v) = cbox.get(n - s + 1, j, k) {
                layer_counts[v as usize] += 1;
            }
        }
    }
    for sym in 1..=n {
        if layer_counts[sym] < r - s {
            return Err(Error::HypothesisViolated(format!(
                "symbol {sym} occurs {} < r-s = {} times in layer ({},*,*)",
                layer_counts[sym],
                r - s,
                n - s + 1
            )));
        }
    }

    // Layer (n-s+1, *, *) as an r x (n-s) rectangle: row k, column j.
    let mut cells = Vec::with_capacity(r * (n - s));
    for k in 1..=r {
        for j in 1..=n - s {
            cells.push(cbox.get(n - s + 1, j, k).expect("filled by hypothesis"));
        }
    }
    let rect = Rectangle::from_cells(r, n - s, n, cells)?;
    let ext = extend_rectangle(&rect)?;

    let mut out = cbox.clone();
    for k in 1..=r {
        for u in 1..=s {
            let first_row_val = ext.get(k, n - s + u);
            out.set(n - s + 1, n - s + u, k, first_row_val);
        }
        for d in 1..s {
            for u in 1..=s {
                let source = (u + s - 1 - d) % s + 1;
                let v = out
                    .get(n - s + 1, n - s + source, k)
                    .expect("first band row filled above");
                out.set(n - s + 1 + d, n - s + u, k, v);
            }
        }
    }
    Ok(out)
}

/// Properly colors the edges of a `degree`-regular bipartite multigraph
/// with `degree` colors by repeatedly extracting perfect matchings.
///
/// `edges` are `(left, right)` pairs, 0-based; the result assigns each edge
/// a color in `0..degree`. On a regular graph a proper coloring is
/// automatically equitable: every vertex sees each color exactly once.
pub fn equitable_coloring_regular(
    left_count: usize,
    right_count: usize,
    edges: &[(usize, usize)],
    degree: usize,
) -> Result<Vec<usize>> {
    if degree == 0 {
        return if edges.is_empty() {
            Ok(Vec::new())
        } else {
            Err(Error::NotRegular {
                degree,
                vertex: edges[0].0,
            })
        };
    }
    let mut ldeg = vec![0usize; left_count];
    let mut rdeg = vec![0usize; right_count];
    for &(u, v) in edges {
        if u >= left_count || v >= right_count {
            return Err(Error::CellOutOfRange(format!("edge ({u},{v}) out of range")));
        }
        ldeg[u] += 1;
        rdeg[v] += 1;
    }
    if let Some(u) = (0..left_count).find(|&u| ldeg[u] != degree) {
        return Err(Error::NotRegular { degree, vertex: u });
    }
    if let Some(v) = (0..right_count).find(|&v| rdeg[v] != degree) {
        return Err(Error::NotRegular { degree, vertex: v });
    }

    let mut colors = vec![usize::MAX; edges.len()];
    let mut remaining: Vec<Vec<(usize, usize)>> = vec![Vec::new(); left_count];
    for (e, &(u, v)) in edges.iter().enumerate() {
        remaining[u].push((v, e));
    }
    for color in 0..degree {
        let adj: Vec<Vec<usize>> = remaining
            .iter()
            .map(|es| es.iter().map(|&(v, _)| v).collect())
            .collect();
        let matching = max_bipartite_matching(&adj, right_count, &[])?;
        for u in 0..left_count {
            let v = matching[u].ok_or_else(|| {
                Error::ConstructionFailed(format!("no perfect matching at color {color}"))
            })?;
            let pos = remaining[u]
                .iter()
                .position(|&(w, _)| w == v)
                .expect("matched edge present");
            let (_, e) = remaining[u].swap_remove(pos);
            colors[e] = color;
        }
    }
    Ok(colors)
}

/// Fills the back layers of an `r x r x n` partial latin box.
///
/// `u_cells` lists the cells `(i,j)` whose lines `(i,j,*)` are filled on
/// `[r]` with symbols outside `v_syms` and empty beyond; every row and
/// column index must appear in exactly `n - r` of them, `|v_syms| = n - r`,
/// and no `v_syms` symbol may already occur in the back layers. Layer
/// `r + 1` is filled through an equitable coloring of the `u_cells` graph;
/// deeper layers cycle `v_syms` in the given order.
pub fn fill_back_entries(
    cbox: &LatinBox,
    u_cells: &[(usize, usize)],
    v_syms: &[u16],
) -> Result<LatinBox> {
    let (r, r2, n) = cbox.dims();
    if r != r2 {
        return Err(Error::DimensionMismatch(format!(
            "back fill needs an r x r x n box, got {r} x {r2} x {n}"
        )));
    }
    if cbox.ambient() != n {
        return Err(Error::DimensionMismatch(format!(
            "box depth {n} must equal ambient {}",
            cbox.ambient()
        )));
    }
    let d = n - r;
    if v_syms.len() != d {
        return Err(Error::HypothesisViolated(format!(
            "|V| = {} but n - r = {d}",
            v_syms.len()
        )));
    }
    if d == 0 {
        return Ok(cbox.clone());
    }
    let mut in_v = vec![false; n + 1];
    for &s in v_syms {
        if s == 0 || s as usize > n {
            return Err(Error::HypothesisViolated(format!("symbol {s} outside [{n}]")));
        }
        in_v[s as usize] = true;
    }
    let mut in_u = vec![vec![false; r + 1]; r + 1];
    let mut row_deg = vec![0usize; r + 1];
    let mut col_deg = vec![0usize; r + 1];
    for &(i, j) in u_cells {
        if i == 0 || i > r || j == 0 || j > r {
            return Err(Error::CellOutOfRange(format!("U cell ({i},{j}) out of range")));
        }
        in_u[i][j] = true;
        row_deg[i] += 1;
        col_deg[j] += 1;
    }
    for i in 1..=r {
        if row_deg[i] != d || col_deg[i] != d {
            return Err(Error::HypothesisViolated(format!(
                "U degree at index {i}: row {}, column {}, expected {d}",
                row_deg[i], col_deg[i]
            )));
        }
    }
    for i in 1..=r {
        for j in 1..=r {
            for k in 1..=n {
                let cell = cbox.get(i, j, k);
                if in_u[i][j] {
                    match cell {
                        Some(v) if k <= r && !in_v[v as usize] => {}
                        None if k > r => {}
                        Some(v) => {
                            return Err(Error::HypothesisViolated(format!(
                                "U line ({i},{j},*) holds {v} at depth {k}"
                            )))
                        }
                        None => {
                            return Err(Error::HypothesisViolated(format!(
                                "U line ({i},{j},*) empty at depth {k}"
                            )))
                        }
                    }
                } else if cell.is_none() {
                    return Err(Error::HypothesisViolated(format!(
                        "non-U line ({i},{j},*) empty at depth {k}"
                    )));
                } else if k > r && in_v[cell.unwrap() as usize] {
                    return Err(Error::HypothesisViolated(format!(
                        "V symbol {} already in back layer at ({i},{j},{k})",
                        cell.unwrap()
                    )));
                }
            }
        }
    }

    let edges: Vec<(usize, usize)> = u_cells.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    let colors = equitable_coloring_regular(r, r, &edges, d)?;
    let mut out = cbox.clone();
    for (e, &(i, j)) in u_cells.iter().enumerate() {
        let c = colors[e];
        for depth in 0..d {
            out.set(i, j, r + 1 + depth, v_syms[(c + depth) % d]);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_has_perfect_matching() {
        let adj: Vec<Vec<usize>> = (0..4).map(|_| (0..4).collect()).collect();
        let m = max_bipartite_matching(&adj, 4, &[]).unwrap();
        assert!(m.iter().all(|x| x.is_some()));
        let mut used: Vec<usize> = m.iter().map(|x| x.unwrap()).collect();
        used.sort_unstable();
        assert_eq!(used, vec![0, 1, 2, 3]);
    }

    #[test]
    fn empty_relation_empty_matching() {
        let adj: Vec<Vec<usize>> = vec![vec![], vec![]];
        let m = max_bipartite_matching(&adj, 2, &[]).unwrap();
        assert!(m.iter().all(|x| x.is_none()));
    }

    #[test]
    fn forced_isolated_vertex_unsaturable() {
        // right vertex 2 has no neighbours
        let adj: Vec<Vec<usize>> = vec![vec![0], vec![1], vec![0, 1]];
        assert_eq!(
            max_bipartite_matching(&adj, 3, &[2]),
            Err(Error::ForcedUnsaturable)
        );
    }

    #[test]
    fn full_square_extends_to_itself() {
        // 2x2 on [2] is already complete.
        let rect = Rectangle::from_cells(2, 2, 2, vec![1, 2, 2, 1]).unwrap();
        let ext = extend_rectangle(&rect).unwrap();
        assert_eq!(ext, rect);
    }

    #[test]
    fn single_cell_extends() {
        let rect = Rectangle::from_cells(1, 1, 2, vec![1]).unwrap();
        let ext = extend_rectangle(&rect).unwrap();
        assert_eq!(ext.cols(), 2);
        assert_eq!(ext.get(1, 2), 2);
    }

    #[test]
    fn ryser_violation_reports_symbol() {
        // 2x2 block on [2] inside ambient 3: N(3) = 0 < 2+2-3 = 1.
        let rect = Rectangle::from_cells(2, 2, 3, vec![1, 2, 2, 1]).unwrap();
        match extend_rectangle(&rect) {
            Err(Error::RyserViolated { symbol: 3, count: 0, needed: 1 }) => {}
            other => panic!("expected RyserViolated for symbol 3, got {other:?}"),
        }
    }

    #[test]
    fn completes_rectangle_to_square() {
        let rect = Rectangle::from_cells(1, 3, 3, vec![2, 3, 1]).unwrap();
        let sq = complete_to_square(&rect).unwrap();
        assert!(crate::verify::verify_square_latin(&sq));
    }

    #[test]
    fn single_matching_coloring() {
        let edges = vec![(0, 1), (1, 0)];
        let colors = equitable_coloring_regular(2, 2, &edges, 1).unwrap();
        assert_eq!(colors, vec![0, 0]);
    }

    #[test]
    fn complete_bipartite_decomposes() {
        let d = 4;
        let mut edges = Vec::new();
        for u in 0..d {
            for v in 0..d {
                edges.push((u, v));
            }
        }
        let colors = equitable_coloring_regular(d, d, &edges, d).unwrap();
        // every vertex sees each color exactly once
        for u in 0..d {
            let mut seen = vec![false; d];
            for (e, &(eu, _)) in edges.iter().enumerate() {
                if eu == u {
                    assert!(!seen[colors[e]]);
                    seen[colors[e]] = true;
                }
            }
        }
    }

    #[test]
    fn irregular_graph_rejected() {
        let edges = vec![(0, 0), (0, 1)];
        assert!(matches!(
            equitable_coloring_regular(2, 2, &edges, 1),
            Err(Error::NotRegular { .. })
        ));
    }

    #[test]
    fn corner_channel_zero_band_is_identity() {
        let mut b = LatinBox::empty((2, 2, 1), 2).unwrap();
        b.set(1, 1, 1, 1);
        b.set(1, 2, 1, 2);
        b.set(2, 1, 1, 2);
        b.set(2, 2, 1, 1);
        let out = complete_right_corner_channel(&b, 0).unwrap();
        assert_eq!(out, b);
    }

    #[test]
    fn back_fill_empty_u_is_identity() {
        let mut b = LatinBox::empty((2, 2, 2), 2).unwrap();
        for i in 1..=2 {
            for j in 1..=2 {
                for k in 1..=2 {
                    b.set(i, j, k, crate::residue((i + j + k) as i64, 2));
                }
            }
        }
        let out = fill_back_entries(&b, &[], &[]).unwrap();
        assert_eq!(out, b);
    }

    #[test]
    fn back_fill_unequal_degrees_rejected() {
        let b = LatinBox::empty((2, 2, 3), 3).unwrap();
        // both U cells in row 1
        assert!(matches!(
            fill_back_entries(&b, &[(1, 1), (1, 2)], &[3]),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
