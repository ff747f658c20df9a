//! The `.lcube` text format and JSON import/export.
//!
//! Canonical layout, written byte-exactly:
//!
//! ```text
//! lcube 1
//! order <n>
//! partition h1 h2 ...      (optional)
//! expand <rule>            (optional, catalog seed files)
//! t <i> <j> <k>            (optional, one line per transversal cell)
//!
//! <layer 1: n lines of n space-separated tokens, `.` = empty>
//!
//! <layer 2>
//! ...
//! ```
//!
//! Layers are `(.,.,k)` slices, rows by `i`, columns by `j`. A trailing
//! newline is required. The reader tolerates runs of spaces; the writer
//! emits exactly one space between tokens.

use crate::error::{Error, Result};
use crate::model::{Cube, PartialCube, Partition, Transversal};

/// Parsed contents of an `.lcube` file. `blocks` holds the raw grids; a
/// full or partial cube has exactly `order` blocks of `order x order`,
/// while catalog seed files carry fewer blocks plus an `expand` rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcubeFile {
    pub order: usize,
    pub partition: Option<Vec<usize>>,
    pub expand: Option<String>,
    pub transversal: Vec<[usize; 3]>,
    pub blocks: Vec<Vec<Vec<u16>>>,
}

impl LcubeFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let magic = lines
            .next()
            .ok_or_else(|| Error::DataFormat("empty file".into()))?;
        if magic.trim() != "lcube 1" {
            return Err(Error::DataFormat(format!(
                "bad magic line {magic:?}, expected \"lcube 1\""
            )));
        }
        let order_line = lines
            .next()
            .ok_or_else(|| Error::DataFormat("missing order line".into()))?;
        let order = match order_line.split_whitespace().collect::<Vec<_>>()[..] {
            ["order", v] => v
                .parse::<usize>()
                .map_err(|e| Error::DataFormat(format!("bad order: {e}")))?,
            _ => {
                return Err(Error::DataFormat(format!(
                    "expected \"order <n>\", got {order_line:?}"
                )))
            }
        };
        let mut partition = None;
        let mut expand = None;
        let mut transversal = Vec::new();
        let mut blocks: Vec<Vec<Vec<u16>>> = Vec::new();
        let mut current: Vec<Vec<u16>> = Vec::new();
        let mut in_header = true;
        for line in lines {
            let trimmed = line.trim();
            if in_header {
                let mut parts = trimmed.split_whitespace();
                match parts.next() {
                    Some("partition") => {
                        let hs: std::result::Result<Vec<usize>, _> =
                            parts.map(str::parse).collect();
                        partition =
                            Some(hs.map_err(|e| {
                                Error::DataFormat(format!("bad partition: {e}"))
                            })?);
                        continue;
                    }
                    Some("expand") => {
                        expand = Some(parts.collect::<Vec<_>>().join(" "));
                        continue;
                    }
                    Some("t") => {
                        let cs: std::result::Result<Vec<usize>, _> =
                            parts.map(str::parse).collect();
                        let cs = cs.map_err(|e| {
                            Error::DataFormat(format!("bad transversal cell: {e}"))
                        })?;
                        if cs.len() != 3 {
                            return Err(Error::DataFormat(
                                "transversal line needs three coordinates".into(),
                            ));
                        }
                        transversal.push([cs[0], cs[1], cs[2]]);
                        continue;
                    }
                    _ => in_header = false,
                }
            }
            if trimmed.is_empty() {
                if !current.is_empty() {
                    blocks.push(std::mem::take(&mut current));
                }
                continue;
            }
            let row: Result<Vec<u16>> = trimmed
                .split_whitespace()
                .map(|tok| {
                    if tok == "." {
                        Ok(0u16)
                    } else {
                        tok.parse::<u16>()
                            .map_err(|e| Error::DataFormat(format!("bad token {tok:?}: {e}")))
                    }
                })
                .collect();
            current.push(row?);
        }
        if !current.is_empty() {
            blocks.push(current);
        }
        for (b, block) in blocks.iter().enumerate() {
            if block.len() != order || block.iter().any(|row| row.len() != order) {
                return Err(Error::DataFormat(format!(
                    "block {} is not {order} x {order}",
                    b + 1
                )));
            }
            for row in block {
                if let Some(&bad) = row.iter().find(|&&v| v as usize > order) {
                    return Err(Error::DataFormat(format!(
                        "symbol {bad} outside 1..={order}"
                    )));
                }
            }
        }
        if blocks.is_empty() {
            return Err(Error::DataFormat("no layer blocks".into()));
        }
        Ok(LcubeFile {
            order,
            partition,
            expand,
            transversal,
            blocks,
        })
    }

    /// Canonical byte-exact rendering.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("lcube 1\n");
        out.push_str(&format!("order {}\n", self.order));
        if let Some(p) = &self.partition {
            let hs: Vec<String> = p.iter().map(|h| h.to_string()).collect();
            out.push_str(&format!("partition {}\n", hs.join(" ")));
        }
        if let Some(rule) = &self.expand {
            out.push_str(&format!("expand {rule}\n"));
        }
        for c in &self.transversal {
            out.push_str(&format!("t {} {} {}\n", c[0], c[1], c[2]));
        }
        out.push('\n');
        for (b, block) in self.blocks.iter().enumerate() {
            if b > 0 {
                out.push('\n');
            }
            for row in block {
                let toks: Vec<String> = row
                    .iter()
                    .map(|&v| {
                        if v == 0 {
                            ".".to_string()
                        } else {
                            v.to_string()
                        }
                    })
                    .collect();
                out.push_str(&toks.join(" "));
                out.push('\n');
            }
        }
        out
    }

    pub fn from_partial(
        cube: &PartialCube,
        partition: Option<&Partition>,
        transversal: Option<&Transversal>,
    ) -> Self {
        let n = cube.order();
        let blocks = (1..=n)
            .map(|k| {
                (1..=n)
                    .map(|i| (1..=n).map(|j| cube.get(i, j, k).unwrap_or(0)).collect())
                    .collect()
            })
            .collect();
        LcubeFile {
            order: n,
            partition: partition.map(|p| p.parts().to_vec()),
            expand: None,
            transversal: transversal.map(|t| t.cells.clone()).unwrap_or_default(),
            blocks,
        }
    }

    pub fn from_cube(
        cube: &Cube,
        partition: Option<&Partition>,
        transversal: Option<&Transversal>,
    ) -> Self {
        LcubeFile::from_partial(&PartialCube::from_cube(cube), partition, transversal)
    }

    /// True when the blocks form a (possibly partial) order-`n` cube.
    pub fn is_cube_shaped(&self) -> bool {
        self.blocks.len() == self.order
    }

    pub fn to_partial_cube(&self) -> Result<PartialCube> {
        if !self.is_cube_shaped() {
            return Err(Error::DataFormat(format!(
                "{} blocks cannot form a cube of order {} (seed data?)",
                self.blocks.len(),
                self.order
            )));
        }
        let n = self.order;
        let mut cube = PartialCube::empty(n)?;
        for (kb, block) in self.blocks.iter().enumerate() {
            for (ib, row) in block.iter().enumerate() {
                for (jb, &v) in row.iter().enumerate() {
                    if v != 0 {
                        cube.set(ib + 1, jb + 1, kb + 1, v);
                    }
                }
            }
        }
        Ok(cube)
    }

    pub fn to_cube(&self) -> Result<Cube> {
        self.to_partial_cube()?.into_cube()
    }

    pub fn partition(&self) -> Result<Option<Partition>> {
        self.partition
            .as_ref()
            .map(|p| Partition::new(p.clone()))
            .transpose()
    }
}

/// JSON object: `{"order": n, "partition": [...], "cells": [...]}` with
/// cells flat in layer-major order (`k`, then `i`, then `j`); empty cells
/// are `null`.
pub fn to_json(cube: &PartialCube, partition: Option<&Partition>) -> String {
    let n = cube.order();
    let mut cells = Vec::with_capacity(n * n * n);
    for k in 1..=n {
        for i in 1..=n {
            for j in 1..=n {
                cells.push(match cube.get(i, j, k) {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::Null,
                });
            }
        }
    }
    let mut obj = serde_json::Map::new();
    obj.insert("order".into(), serde_json::Value::from(n));
    if let Some(p) = partition {
        obj.insert(
            "partition".into(),
            serde_json::Value::from(p.parts().to_vec()),
        );
    }
    obj.insert("cells".into(), serde_json::Value::Array(cells));
    serde_json::Value::Object(obj).to_string()
}

/// Parses the JSON form back into a partial cube and optional partition.
pub fn from_json(text: &str) -> Result<(PartialCube, Option<Partition>)> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::DataFormat(format!("bad JSON: {e}")))?;
    let order = v
        .get("order")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::DataFormat("missing numeric \"order\"".into()))?
        as usize;
    let partition = match v.get("partition") {
        None | Some(serde_json::Value::Null) => None,
        Some(p) => {
            let parts: Option<Vec<usize>> = p
                .as_array()
                .and_then(|xs| xs.iter().map(|x| x.as_u64().map(|h| h as usize)).collect());
            Some(Partition::new(parts.ok_or_else(|| {
                Error::DataFormat("bad \"partition\"".into())
            })?)?)
        }
    };
    let cells = v
        .get("cells")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::DataFormat("missing \"cells\" array".into()))?;
    if cells.len() != order * order * order {
        return Err(Error::DataFormat(format!(
            "expected {} cells, got {}",
            order * order * order,
            cells.len()
        )));
    }
    let mut cube = PartialCube::empty(order)?;
    let mut it = cells.iter();
    for k in 1..=order {
        for i in 1..=order {
            for j in 1..=order {
                match it.next().unwrap() {
                    serde_json::Value::Null => {}
                    x => {
                        let s = x
                            .as_u64()
                            .filter(|&s| s >= 1 && s <= order as u64)
                            .ok_or_else(|| Error::DataFormat(format!("bad cell value {x}")))?;
                        cube.set(i, j, k, s as u16);
                    }
                }
            }
        }
    }
    Ok((cube, partition))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::arbitrary_cube;

    #[test]
    fn roundtrip_is_byte_identical() {
        let cube = arbitrary_cube(4).unwrap();
        let p = Partition::new(vec![4]).unwrap();
        let file = LcubeFile::from_cube(&cube, Some(&p), None);
        let text = file.render();
        let reparsed = LcubeFile::parse(&text).unwrap();
        assert_eq!(reparsed, file);
        assert_eq!(reparsed.render(), text);
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn reader_tolerates_space_runs() {
        let text = "lcube 1\norder 2\n\n1   2\n2 1\n\n2 1\n1    2\n";
        let file = LcubeFile::parse(text).unwrap();
        assert_eq!(file.blocks.len(), 2);
        assert_eq!(file.to_cube().unwrap().get(1, 2, 1), 2);
    }

    #[test]
    fn dots_are_empty_cells() {
        let text = "lcube 1\norder 2\n\n1 .\n. 1\n\n. 2\n2 .\n";
        let file = LcubeFile::parse(text).unwrap();
        let pc = file.to_partial_cube().unwrap();
        assert_eq!(pc.get(1, 2, 1), None);
        assert_eq!(pc.get(1, 1, 1), Some(1));
        assert!(file.to_cube().is_err());
    }

    #[test]
    fn bad_magic_rejected() {
        assert!(LcubeFile::parse("cube 1\norder 1\n\n1\n").is_err());
    }

    #[test]
    fn wrong_block_shape_rejected() {
        assert!(LcubeFile::parse("lcube 1\norder 2\n\n1 2\n\n2 1\n1 2\n").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let cube = arbitrary_cube(3).unwrap();
        let p = Partition::new(vec![3]).unwrap();
        let pc = PartialCube::from_cube(&cube);
        let text = to_json(&pc, Some(&p));
        let (back, bp) = from_json(&text).unwrap();
        assert_eq!(back, pc);
        assert_eq!(bp.unwrap().parts(), &[3]);
    }

    #[test]
    fn json_null_cells() {
        let mut pc = PartialCube::empty(2).unwrap();
        pc.set(1, 1, 1, 2);
        let text = to_json(&pc, None);
        let (back, bp) = from_json(&text).unwrap();
        assert_eq!(back, pc);
        assert!(bp.is_none());
    }
}
