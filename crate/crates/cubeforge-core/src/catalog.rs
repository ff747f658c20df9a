//! The verified data catalog: explicit realizations, paired packs, and the
//! conjugated-shift expansions that rebuild the large entries from a few
//! seed layers.
//!
//! Every load re-verifies the object from raw data; a failing check means
//! the stored data is corrupt and surfaces as [`Error::CatalogCorrupt`].

use crate::error::{Error, Result};
use crate::format::LcubeFile;
use crate::model::{Cube, PairedPack, Partition, Realization, Transversal};
use crate::residue;

const LC_2_2_1: &str = include_str!("../data/lc-2-2-1.lcube");
const LC_2_2_2: &str = include_str!("../data/lc-2-2-2.lcube");
const LC_4_4_2: &str = include_str!("../data/lc-4-4-2.lcube");
const LC_4_4_3: &str = include_str!("../data/lc-4-4-3.lcube");
const LC_4_4_4: &str = include_str!("../data/lc-4-4-4.lcube");
const LC_3_3_2: &str = include_str!("../data/lc-3-3-2.lcube");
const LC_3_3_3: &str = include_str!("../data/lc-3-3-3.lcube");
const LC_6_6_5: &str = include_str!("../data/lc-6-6-5.lcube");
const LC_9_9_7: &str = include_str!("../data/lc-9-9-7.lcube");
const LC_9_9_8: &str = include_str!("../data/lc-9-9-8.lcube");
const LC_12_12_7: &str = include_str!("../data/lc-12-12-7.lcube");

/// Names of the individual realization entries.
pub const REALIZATION_NAMES: [&str; 11] = [
    "lc-2-2-1",
    "lc-2-2-2",
    "lc-3-3-2",
    "lc-3-3-3",
    "lc-4-4-2",
    "lc-4-4-3",
    "lc-4-4-4",
    "lc-6-6-5",
    "lc-9-9-7",
    "lc-9-9-8",
    "lc-12-12-7",
];

/// Names of the paired-pack entries.
pub const PACK_NAMES: [&str; 4] = [
    "pair-2-2-1/2-2-2",
    "pair-4-4-2/4-4-3",
    "pair-4-4-3/4-4-4",
    "pair-3-3-2/3-3-3",
];

fn raw(name: &str) -> Result<&'static str> {
    Ok(match name {
        "lc-2-2-1" => LC_2_2_1,
        "lc-2-2-2" => LC_2_2_2,
        "lc-4-4-2" => LC_4_4_2,
        "lc-4-4-3" => LC_4_4_3,
        "lc-4-4-4" => LC_4_4_4,
        "lc-3-3-2" => LC_3_3_2,
        "lc-3-3-3" => LC_3_3_3,
        "lc-6-6-5" => LC_6_6_5,
        "lc-9-9-7" => LC_9_9_7,
        "lc-9-9-8" => LC_9_9_8,
        "lc-12-12-7" => LC_12_12_7,
        _ => return Err(Error::UnknownEntry(name.to_string())),
    })
}

/// A loaded catalog object.
#[derive(Debug, Clone)]
pub enum CatalogObject {
    Realization(Realization),
    Pack(PairedPack),
}

/// Expansion rules for seed-layer entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionRule {
    /// Order `18 + b` from seed layers: layer 1 generates layers 1..=9 by
    /// f-conjugation, layers 10..=18 by g-conjugation; the remaining
    /// blocks give the back layers (one seed expanded by the h-rule, or
    /// all `b` stored explicitly).
    NineNineB,
    /// Order 31 from thirteen layers: blocks 1..=6 are layers 1..=6 and
    /// blocks 7..=13 are layers 25..=31; layers 7..=12 arise by
    /// f-conjugation and layers 13..=24 by the h/g-conjugation.
    TwelveTwelveSeven,
}

impl ExpansionRule {
    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag {
            "9-9-b" => Ok(ExpansionRule::NineNineB),
            "12-12-7" => Ok(ExpansionRule::TwelveTwelveSeven),
            other => Err(Error::ShapeMismatch(format!("unknown expansion rule {other:?}"))),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            ExpansionRule::NineNineB => "9-9-b",
            ExpansionRule::TwelveTwelveSeven => "12-12-7",
        }
    }
}

/// Index/value shift within the two 9-symbol blocks; fixes everything else.
/// `f(n, m) = n - m (mod 9)` in `[9]`, `9 + (n - m mod 9)` in `9 + [9]`.
fn shift9(v: u16, m: i64) -> u16 {
    let v = v as i64;
    if (1..=9).contains(&v) {
        residue(v - m, 9)
    } else if (10..=18).contains(&v) {
        9 + residue(v - m, 9)
    } else {
        v as u16
    }
}

/// Swaps the two 9-symbol blocks: `g(n) = n + 9 (mod 18)` on `[18]`.
fn swap9(v: u16) -> u16 {
    if (1..=18).contains(&v) {
        residue(v as i64 + 9, 18)
    } else {
        v
    }
}

/// Shift within the tail block `18 + [b]`.
fn shift_tail(v: u16, m: i64, b: usize) -> u16 {
    if v as usize > 18 {
        18 + residue(v as i64 - 18 - m, b)
    } else {
        v
    }
}

/// Expands seed layers into the full order-`(18+b)` cube of a `9-9-b`
/// entry. `blocks[0]` is layer 1 and `blocks[1]` layer 19; when only the
/// two seeds are given the back layers follow the h-rule
/// `C(i,j,18+k) = h(f(M(h(i,k-1),j),1-k),k-1)`, otherwise the remaining
/// `b - 1` blocks are layers 20..=18+b verbatim.
fn expand_nine_nine_b(blocks: &[Vec<Vec<u16>>], b: usize) -> Result<Cube> {
    let n = 18 + b;
    if blocks.len() != 2 && blocks.len() != 1 + b {
        return Err(Error::ShapeMismatch(format!(
            "9-9-b expects 2 or {} blocks, got {}",
            1 + b,
            blocks.len()
        )));
    }
    let l = &blocks[0];
    let m = &blocks[1];
    let get = |grid: &Vec<Vec<u16>>, i: u16, j: u16| grid[i as usize - 1][j as usize - 1];
    let mut cells = vec![0u16; n * n * n];
    let mut put = |i: usize, j: usize, k: usize, v: u16| {
        cells[((i - 1) * n + (j - 1)) * n + (k - 1)] = v;
    };
    let mut layer1to9 = vec![vec![vec![0u16; n]; n]; 9];
    for (kk, layer) in layer1to9.iter_mut().enumerate() {
        let k = kk as i64 + 1;
        for (ii, row) in layer.iter_mut().enumerate() {
            let i = ii as u16 + 1;
            for (jj, cell) in row.iter_mut().enumerate() {
                let j = jj as u16 + 1;
                *cell = shift9(get(l, shift9(i, k - 1), shift9(j, k - 1)), 1 - k);
            }
        }
    }
    for k in 1..=9usize {
        for i in 1..=n {
            for j in 1..=n {
                put(i, j, k, layer1to9[k - 1][i - 1][j - 1]);
            }
        }
    }
    for k in 10..=18usize {
        for i in 1..=n {
            for j in 1..=n {
                let gi = swap9(i as u16) as usize;
                let gj = swap9(j as u16) as usize;
                put(i, j, k, swap9(layer1to9[k - 10][gi - 1][gj - 1]));
            }
        }
    }
    if blocks.len() == 2 {
        for k in 1..=b {
            let kk = k as i64;
            for i in 1..=n {
                for j in 1..=n {
                    let ri = shift_tail(i as u16, kk - 1, b);
                    let v = shift9(get(m, ri, j as u16), 1 - kk);
                    put(i, j, 18 + k, shift_tail(v, kk - 1, b));
                }
            }
        }
    } else {
        for (t, block) in blocks[1..].iter().enumerate() {
            for i in 1..=n {
                for j in 1..=n {
                    put(i, j, 18 + t + 1, block[i - 1][j - 1]);
                }
            }
        }
    }
    Cube::from_cells(n, cells)
}

/// Swap the two 6-blocks inside each 12-block: +6 / -6 on 1..=24.
fn swap6(v: u16) -> u16 {
    match v {
        1..=6 | 13..=18 => v + 6,
        7..=12 | 19..=24 => v - 6,
        _ => v,
    }
}

/// Swap the two 12-blocks: +12 / -12 on 1..=24.
fn swap12(v: u16) -> u16 {
    match v {
        1..=12 => v + 12,
        13..=24 => v - 12,
        _ => v,
    }
}

/// Cross swap used by the deep layers of the 12-12-7 expansion.
fn cross12(v: u16) -> u16 {
    match v {
        1..=6 => v + 18,
        7..=12 => v + 6,
        13..=18 => v - 6,
        19..=24 => v - 18,
        _ => v,
    }
}

fn expand_twelve_twelve_seven(blocks: &[Vec<Vec<u16>>]) -> Result<Cube> {
    let n = 31;
    if blocks.len() != 13 {
        return Err(Error::ShapeMismatch(format!(
            "12-12-7 expects 13 blocks, got {}",
            blocks.len()
        )));
    }
    let mut layers = vec![vec![vec![0u16; n]; n]; n];
    for (t, block) in blocks[..6].iter().enumerate() {
        layers[t] = block.clone();
    }
    for (t, block) in blocks[6..].iter().enumerate() {
        layers[24 + t] = block.clone();
    }
    for k in 7..=12usize {
        for i in 1..=n {
            for j in 1..=n {
                let fi = swap6(i as u16) as usize;
                let fj = swap6(j as u16) as usize;
                layers[k - 1][i - 1][j - 1] = swap6(layers[k - 7][fi - 1][fj - 1]);
            }
        }
    }
    for k in 13..=24usize {
        for i in 1..=n {
            for j in 1..=n {
                let hi = cross12(i as u16) as usize;
                let gj = swap12(j as u16) as usize;
                layers[k - 1][i - 1][j - 1] = cross12(layers[k - 13][hi - 1][gj - 1]);
            }
        }
    }
    let mut cells = vec![0u16; n * n * n];
    for (kk, layer) in layers.iter().enumerate() {
        for i in 1..=n {
            for j in 1..=n {
                cells[((i - 1) * n + (j - 1)) * n + kk] = layer[i - 1][j - 1];
            }
        }
    }
    Cube::from_cells(n, cells)
}

/// Expands seed layer data into a full cube according to `rule`.
pub fn expand_appendix(blocks: &[Vec<Vec<u16>>], rule: ExpansionRule, b: usize) -> Result<Cube> {
    match rule {
        ExpansionRule::NineNineB => expand_nine_nine_b(blocks, b),
        ExpansionRule::TwelveTwelveSeven => expand_twelve_twelve_seven(blocks),
    }
}

fn file_to_cube(name: &str, file: &LcubeFile) -> Result<Cube> {
    match &file.expand {
        None => file.to_cube().map_err(|e| Error::CatalogCorrupt {
            name: name.to_string(),
            detail: e.to_string(),
        }),
        Some(tag) => {
            let rule = ExpansionRule::from_tag(tag)?;
            let b = file
                .partition
                .as_ref()
                .and_then(|p| p.last().copied())
                .ok_or_else(|| Error::ShapeMismatch("seed file without partition".into()))?;
            expand_appendix(&file.blocks, rule, b)
        }
    }
}

/// Loads and verifies one realization entry.
pub fn load_realization(name: &str) -> Result<Realization> {
    let file = LcubeFile::parse(raw(name)?)?;
    let cube = file_to_cube(name, &file)?;
    let partition = file
        .partition()?
        .ok_or_else(|| Error::CatalogCorrupt {
            name: name.to_string(),
            detail: "entry has no partition".into(),
        })?;
    Realization::new(cube, partition).map_err(|e| Error::CatalogCorrupt {
        name: name.to_string(),
        detail: e.to_string(),
    })
}

/// Loads and verifies one paired pack; the transversal is stored with the
/// first member.
pub fn load_pack(name: &str) -> Result<PairedPack> {
    let (first, second) = match name {
        "pair-2-2-1/2-2-2" => ("lc-2-2-1", "lc-2-2-2"),
        "pair-4-4-2/4-4-3" => ("lc-4-4-2", "lc-4-4-3"),
        "pair-4-4-3/4-4-4" => ("lc-4-4-3", "lc-4-4-4"),
        "pair-3-3-2/3-3-3" => ("lc-3-3-2", "lc-3-3-3"),
        _ => return Err(Error::UnknownEntry(name.to_string())),
    };
    let f1 = LcubeFile::parse(raw(first)?)?;
    let l1 = load_realization(first)?;
    let l2 = load_realization(second)?;
    let t = Transversal::new(f1.transversal.clone());
    PairedPack::new(l1, l2, t).map_err(|e| Error::CatalogCorrupt {
        name: name.to_string(),
        detail: e.to_string(),
    })
}

/// Loads any entry by name.
pub fn load_catalog(name: &str) -> Result<CatalogObject> {
    if name.starts_with("pair-") {
        Ok(CatalogObject::Pack(load_pack(name)?))
    } else {
        Ok(CatalogObject::Realization(load_realization(name)?))
    }
}

/// Looks up a realization entry for the partition `(a,a,b)` if the catalog
/// carries one.
pub fn realization_for(a: usize, b: usize) -> Option<&'static str> {
    let name = match (a, b) {
        (2, 1) => "lc-2-2-1",
        (2, 2) => "lc-2-2-2",
        (3, 2) => "lc-3-3-2",
        (3, 3) => "lc-3-3-3",
        (4, 2) => "lc-4-4-2",
        (4, 3) => "lc-4-4-3",
        (4, 4) => "lc-4-4-4",
        (6, 5) => "lc-6-6-5",
        (9, 7) => "lc-9-9-7",
        (9, 8) => "lc-9-9-8",
        (12, 7) => "lc-12-12-7",
        _ => return None,
    };
    Some(name)
}

/// The raw parsed file of an entry, for format-level tooling.
pub fn entry_file(name: &str) -> Result<LcubeFile> {
    LcubeFile::parse(raw(name)?)
}

/// `(name, partition)` summary of every catalog entry.
pub fn summary() -> Vec<(String, Partition, usize)> {
    let mut out = Vec::new();
    for name in REALIZATION_NAMES {
        if let Ok(file) = entry_file(name) {
            if let Ok(Some(p)) = file.partition() {
                out.push((name.to_string(), p, file.order));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_entry() {
        assert!(matches!(
            load_catalog("lc-77-77-1"),
            Err(Error::UnknownEntry(_))
        ));
    }

    #[test]
    fn small_pack_loads() {
        let pack = load_pack("pair-2-2-1/2-2-2").unwrap();
        assert_eq!(pack.l1.order(), 5);
        assert_eq!(pack.l2.order(), 6);
        assert_eq!(pack.transversal.len(), 4);
    }

    #[test]
    fn order17_entry_loads() {
        let r = load_realization("lc-6-6-5").unwrap();
        assert_eq!(r.order(), 17);
        assert_eq!(r.partition().parts(), &[6, 6, 5]);
    }

    #[test]
    fn expansion_shift_examples() {
        // residue conventions of the 9-block shift and block swap
        assert_eq!(shift9(1, 1), 9);
        assert_eq!(swap9(3), 12);
        assert_eq!(swap9(12), 3);
        assert_eq!(shift_tail(19, 1, 7), 25);
    }

    #[test]
    fn nine_nine_seven_expands() {
        let r = load_realization("lc-9-9-7").unwrap();
        assert_eq!(r.order(), 25);
        assert_eq!(r.partition().parts(), &[9, 9, 7]);
    }

    #[test]
    fn twelve_twelve_seven_expands() {
        let r = load_realization("lc-12-12-7").unwrap();
        assert_eq!(r.order(), 31);
        assert_eq!(r.partition().parts(), &[12, 12, 7]);
    }

    #[test]
    fn all_entries_verify() {
        for name in REALIZATION_NAMES {
            assert!(load_realization(name).is_ok(), "{name}");
        }
        for name in PACK_NAMES {
            assert!(load_pack(name).is_ok(), "{name}");
        }
    }

    #[test]
    fn seed_mutation_caught() {
        // corrupt one seed cell of the 9-9-7 entry and expand
        let mut file = entry_file("lc-9-9-7").unwrap();
        let v = file.blocks[0][4][7];
        file.blocks[0][4][7] = v % 25 + 1;
        let cube = expand_appendix(&file.blocks, ExpansionRule::NineNineB, 7).unwrap();
        let p = Partition::new(vec![9, 9, 7]).unwrap();
        assert!(!crate::verify::check_realization(&cube, &p)
            .unwrap()
            .is_valid());
    }
}
